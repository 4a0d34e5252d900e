use std::cmp::Ordering;
use std::fmt;

use super::{forward_binops, ArithError, Field, Rational};

/// True when `d > 1` and no prime square divides `d`.
pub fn is_squarefree_int(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// The field ℚ(√d) for one fixed squarefree `d > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: u64,
}

impl QuadField {
    pub fn new(d: u64) -> Result<Self, ArithError> {
        if !is_squarefree_int(d) {
            return Err(ArithError::BadRadicand(d));
        }
        Ok(QuadField { d })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `a + b·√d`
    pub fn elem(&self, a: Rational, b: Rational) -> QuadExt {
        QuadExt::from_parts(a, b, Some(self.d))
    }

    pub fn sqrt_d(&self) -> QuadExt {
        self.elem(Rational::from(0), Rational::from(1))
    }

    pub fn rational(&self, a: Rational) -> QuadExt {
        self.elem(a, Rational::from(0))
    }
}

/// An element `a + b·√d` of a real quadratic field.
///
/// Elements with `b = 0` may omit the radicand so that the generic
/// `zero()`/`one()` constructors need no context. Combining two elements
/// that carry different radicands panics in the operator impls; use the
/// `try_*` methods to get an error instead.
#[derive(Clone)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Option<u64>,
}

fn join_radicand(x: Option<u64>, y: Option<u64>) -> Result<Option<u64>, ArithError> {
    match (x, y) {
        (Some(p), Some(q)) if p != q => Err(ArithError::MixedRadicand(p, q)),
        (Some(p), _) | (_, Some(p)) => Ok(Some(p)),
        (None, None) => Ok(None),
    }
}

impl QuadExt {
    fn from_parts(a: Rational, b: Rational, d: Option<u64>) -> Self {
        debug_assert!(b.is_zero() || d.is_some());
        QuadExt { a, b, d }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt::from_parts(a, Rational::zero(), None)
    }

    /// Rational part.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of √d.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> Option<u64> {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a + b√d ↦ a − b√d`
    pub fn conjugate(&self) -> Self {
        QuadExt::from_parts(self.a.clone(), -&self.b, self.d)
    }

    /// `a² − d·b²`, the product of the element with its conjugate.
    pub fn norm(&self) -> Rational {
        let d = Rational::from(self.d.unwrap_or(0) as i64);
        &self.a * &self.a - d * &self.b * &self.b
    }

    /// Same value, tagged with radicand `d` (no-op if already tagged).
    pub fn in_field(mut self, field: QuadField) -> Result<Self, ArithError> {
        self.d = join_radicand(self.d, Some(field.d()))?;
        Ok(self)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        let d = join_radicand(self.d, rhs.d)?;
        Ok(QuadExt::from_parts(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        let d = join_radicand(self.d, rhs.d)?;
        Ok(QuadExt::from_parts(&self.a - &rhs.a, &self.b - &rhs.b, d))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        let d = join_radicand(self.d, rhs.d)?;
        let dq = Rational::from(d.unwrap_or(0) as i64);
        let a = &self.a * &rhs.a + dq * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(QuadExt::from_parts(a, b, d))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn neg_ref(&self) -> Self {
        QuadExt::from_parts(-&self.a, -&self.b, self.d)
    }
}

forward_binops!(QuadExt);

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }

    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn inv(&self) -> Result<Self, ArithError> {
        // d is not a perfect square, so the norm vanishes only at zero
        let n = self.norm();
        let n_inv = n.inv()?;
        Ok(QuadExt::from_parts(
            &self.a * &n_inv,
            -(&self.b * &n_inv),
            self.d,
        ))
    }

    fn from_rational(q: Rational) -> Self {
        QuadExt::rational(q)
    }

    fn sign(&self) -> Option<Ordering> {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == Ordering::Equal || sa == sb {
            return Some(sa.then(sb));
        }
        if sa == Ordering::Equal {
            return Some(sb);
        }
        let d = Rational::from(self.d.expect("irrational element without radicand") as i64);
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * d;
        Some(if a2 > b2d { sa } else { sb })
    }

    fn to_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn to_f64(&self) -> Option<f64> {
        let a = self.a.to_f64()?;
        if self.b.is_zero() {
            return Some(a);
        }
        let b = self.b.to_f64()?;
        Some(a + b * (self.d? as f64).sqrt())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let d = self.d.expect("irrational element without radicand");
        let mag = self.b.abs();
        let surd = if mag.is_one() {
            format!("sqrt({d})")
        } else {
            format!("{mag}*sqrt({d})")
        };
        let negative = self.b.signum() == Ordering::Less;
        match (self.a.is_zero(), negative) {
            (true, false) => write!(f, "{surd}"),
            (true, true) => write!(f, "-{surd}"),
            (false, false) => write!(f, "{} + {surd}", self.a),
            (false, true) => write!(f, "{} - {surd}", self.a),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2() -> QuadField {
        QuadField::new(2).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let f = q2();
        let x = f.elem(1.into(), 1.into());
        let y = f.elem(1.into(), (-1).into());
        assert_eq!(x * y, QuadExt::from_int(-1));
    }

    #[test]
    fn conjugate_of_one_plus_sqrt2() {
        let f = q2();
        let x = f.elem(1.into(), 1.into());
        assert_eq!(x.conjugate(), f.elem(1.into(), (-1).into()));
        let five = f.rational(5.into());
        assert_eq!(five.conjugate(), five);
        let sq = &x * &x;
        assert_eq!(sq.conjugate(), x.conjugate() * x.conjugate());
    }

    #[test]
    fn radicand_validation() {
        assert!(QuadField::new(3).is_ok());
        assert_eq!(QuadField::new(12), Err(ArithError::BadRadicand(12)));
        assert_eq!(QuadField::new(1), Err(ArithError::BadRadicand(1)));
        assert!(is_squarefree_int(30));
        assert!(!is_squarefree_int(18));
    }

    #[test]
    fn mixed_radicands_are_rejected() {
        let a = QuadField::new(2).unwrap().sqrt_d();
        let b = QuadField::new(3).unwrap().sqrt_d();
        assert_eq!(a.try_add(&b), Err(ArithError::MixedRadicand(2, 3)));
        assert_eq!(a.try_mul(&b), Err(ArithError::MixedRadicand(2, 3)));
    }

    #[test]
    fn sign_in_real_embedding() {
        let f = q2();
        let one_minus = f.elem(1.into(), (-1).into());
        assert_eq!(one_minus.sign(), Some(Ordering::Less));
        let three_minus = f.elem(3.into(), (-2).into());
        // 3 - 2√2 ≈ 0.17
        assert_eq!(three_minus.sign(), Some(Ordering::Greater));
        assert_eq!(QuadExt::zero().sign(), Some(Ordering::Equal));
    }

    #[test]
    fn inverse_round_trips() {
        let f = QuadField::new(3).unwrap();
        let r = f.elem(Rational::frac(3, 2), Rational::frac(1, 2));
        assert_eq!(r.clone() * r.inv().unwrap(), QuadExt::one());
        assert_eq!(QuadExt::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn display_forms() {
        let f = QuadField::new(3).unwrap();
        assert_eq!(
            f.elem(Rational::frac(3, 2), Rational::frac(1, 2))
                .to_string(),
            "3/2 + 1/2*sqrt(3)"
        );
        assert_eq!(f.elem(0.into(), (-1).into()).to_string(), "-sqrt(3)");
        assert_eq!(
            f.elem(1.into(), Rational::frac(-2, 3)).to_string(),
            "1 - 2/3*sqrt(3)"
        );
        assert_eq!(f.rational(Rational::frac(-5, 4)).to_string(), "-5/4");
    }
}
