use std::cmp::Ordering;
use std::fmt;

use super::{forward_binops, ArithError, Field, Poly, Rational};

/// A rational function `num(t)/den(t)` over ℚ, kept with a monic
/// denominator coprime to the numerator.
#[derive(Clone, PartialEq)]
pub struct RatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFunc {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RatFunc::normalized(num, den))
    }

    fn normalized(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::constant(Rational::one()),
            };
        }
        let g = num.gcd(&den).expect("denominator is nonzero");
        let (num, _) = num.divmod(&g).expect("gcd is nonzero");
        let (den, _) = den.divmod(&g).expect("gcd is nonzero");
        let lc_inv = den
            .leading()
            .expect("denominator is nonzero")
            .inv()
            .expect("leading coefficient is nonzero");
        RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RatFunc {
            num: p,
            den: Poly::constant(Rational::one()),
        }
    }

    pub fn num(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rational> {
        &self.den
    }

    /// Value at `t = t0`; fails if the denominator vanishes there.
    pub fn eval(&self, t0: &Rational) -> Result<Rational, ArithError> {
        self.num.eval(t0).checked_div(&self.den.eval(t0))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFunc::normalized(self.num.add(&rhs.num), self.den.clone());
        }
        RatFunc::normalized(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        RatFunc::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn neg_ref(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

forward_binops!(RatFunc);

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    fn one() -> Self {
        RatFunc::from_poly(Poly::constant(Rational::one()))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Result<Self, ArithError> {
        if self.num.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    fn from_rational(q: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(q))
    }

    /// ℚ(t) has no order compatible with evaluation at every point.
    fn sign(&self) -> Option<Ordering> {
        None
    }

    fn to_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    fn to_f64(&self) -> Option<f64> {
        self.to_rational()?.to_f64()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.display_in("t").to_string();
        if self.den.degree() == Some(0) {
            return write!(f, "{num}");
        }
        let den = self.den.display_in("t").to_string();
        let wrap = |s: String| {
            if s.contains(' ') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(num), wrap(den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn common_denominator_collapses() {
        let t = RatFunc::t();
        let a = t.checked_div(&(t.clone() + c(1))).unwrap();
        let b = c(1).checked_div(&(t.clone() + c(1))).unwrap();
        assert_eq!(a + b, c(1));
    }

    #[test]
    fn denominator_is_monic_and_coprime() {
        let t = RatFunc::t();
        // (2t^2 - 2) / (4t - 4) = (t + 1)/2
        let num = (t.clone() * &t) * &c(2) - c(2);
        let den = t.clone() * &c(4) - c(4);
        let q = num.checked_div(&den).unwrap();
        assert_eq!(q.den().degree(), Some(0));
        assert_eq!(q.den().coeff(0), Rational::one());
        assert_eq!(q.to_string(), "1/2*t + 1/2");
    }

    #[test]
    fn division_by_zero_function() {
        assert_eq!(RatFunc::zero().inv(), Err(ArithError::DivisionByZero));
        assert!(RatFunc::new(Poly::x(), Poly::zero()).is_err());
    }

    #[test]
    fn evaluation() {
        let t = RatFunc::t();
        let par = (t.clone()).checked_div(&(t.clone() + c(1))).unwrap();
        assert_eq!(par.eval(&Rational::from(3)).unwrap(), Rational::frac(3, 4));
        assert_eq!(
            par.eval(&Rational::from(-1)),
            Err(ArithError::DivisionByZero)
        );
        assert_eq!(par.to_string(), "t/(t + 1)");
    }
}
