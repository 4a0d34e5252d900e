//! Algebraic side conditions: minimal polynomials of quadratic numbers,
//! the conjugate-root lemma, and an exact test for all roots lying in the
//! open right half-plane.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{Field, Poly, QuadExt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has degree 0")]
    Constant,
    #[error("polynomial has a repeated factor")]
    NotSquarefree,
    #[error("cannot parse polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// Integer polynomial, lowest degree first, with a nonnegative leading
/// coefficient. The sign of the whole polynomial carries no information
/// for root questions, so it is normalized away on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.last().is_some_and(Signed::is_negative) {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Clears denominators of a rational polynomial and divides out the
    /// content.
    pub fn from_rational_poly(p: &Poly<Rational>) -> Self {
        IntPoly::new(p.clear_denominators()).primitive()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_poly(&self) -> Poly<Rational> {
        Poly::from_integers(&self.coeffs)
    }

    pub fn eval_in<K: Field>(&self, x: &K) -> K {
        self.to_poly().eval_in(x)
    }

    pub fn is_squarefree(&self) -> bool {
        self.to_poly().is_squarefree()
    }

    /// Rational roots, found among the candidates `±p/q` with `p | a₀` and
    /// `q | aₙ`. `None` when a coefficient is too large to enumerate
    /// divisors by trial division.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        let p = self.to_poly();
        let mut roots = Vec::new();
        // strip factors of x first
        let low = self.coeffs.iter().position(|c| !c.is_zero())?;
        if low > 0 {
            roots.push(Rational::zero());
        }
        let a0 = self.coeffs[low].abs();
        let an = self.coeffs.last()?.abs();
        let (nums, dens) = (divisors(&a0)?, divisors(&an)?);
        for n in &nums {
            for d in &dens {
                for s in [1i64, -1] {
                    let cand = Rational::new(n * s, d.clone()).expect("divisor is nonzero");
                    if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        Some(roots)
    }
}

const TRIAL_LIMIT: u64 = 1 << 24;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if k > TRIAL_LIMIT {
            return None;
        }
        if n % k == 0 {
            out.push(BigInt::from(k));
            if k != n / k {
                out.push(BigInt::from(n / k));
            }
        }
        k += 1;
    }
    out.sort();
    Some(out)
}

impl fmt::Display for IntPoly {
    /// Compact form, e.g. `2x^2-6x+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl FromStr for IntPoly {
    type Err = AlgError;

    /// Reads sums of terms `c`, `cx`, `cx^k`, `c*x^k` with integer `c`
    /// (implicit 1). Whitespace is ignored; terms may repeat.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| AlgError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty"));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);

        let mut coeffs: Vec<BigInt> = Vec::new();
        for t in terms {
            let (neg, body) = match t.as_bytes().first() {
                Some(b'-') => (true, &t[1..]),
                Some(b'+') => (false, &t[1..]),
                _ => (false, t.as_str()),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coef, power) = match body.find('x') {
                None => (body, 0usize),
                Some(pos) => {
                    let coef = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| err("expected `^` after x"))?
                            .parse::<usize>()
                            .map_err(|_| err("bad exponent"))?
                    };
                    (if coef.is_empty() { "1" } else { coef }, power)
                }
            };
            if !coef.bytes().all(|b| b.is_ascii_digit()) || coef.is_empty() {
                return Err(err("coefficients must be integers"));
            }
            let mut c: BigInt = coef.parse().map_err(|_| err("bad coefficient"))?;
            if neg {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += c;
        }
        Ok(IntPoly::new(coeffs))
    }
}

/// Integer-primitive minimal polynomial of `a + b√d`: linear when `b = 0`,
/// otherwise `(x − a)² − b²d` with denominators cleared.
pub fn minpoly_quadratic(x: &QuadExt) -> IntPoly {
    let a = x.a().clone();
    let p = if x.is_rational() {
        Poly::new(vec![-a, Rational::one()])
    } else {
        let d = Rational::from(x.radicand().expect("irrational element has a radicand") as i64);
        let b = x.b().clone();
        Poly::new(vec![
            a.clone() * &a - b.clone() * &b * &d,
            -(a * &Rational::from(2)),
            Rational::one(),
        ])
    };
    IntPoly::from_rational_poly(&p)
}

/// Both evaluations `P(x) = m + n√d` and `P(x̄)`, plus the two routes to
/// "a root's conjugate is a root".
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugateReport {
    pub at_x: QuadExt,
    pub at_conjugate: QuadExt,
    /// `P(x̄)` is the conjugate of `P(x)`: conjugation commutes with
    /// integer polynomials.
    pub conjugation_commutes: bool,
    /// When `P(x) = 0`, the minimal polynomial of `x` divides `P`, so the
    /// remainder vanishes and `x̄` is a root as well.
    pub minpoly_divides: Option<bool>,
}

impl ConjugateReport {
    /// The lemma holds: a root's conjugate is again a root.
    pub fn lemma_holds(&self) -> bool {
        let transfers = !self.at_x.is_zero() || self.at_conjugate.is_zero();
        self.conjugation_commutes && transfers && self.minpoly_divides.unwrap_or(true)
    }
}

pub fn conjugate_lemma_check(p: &IntPoly, x: &QuadExt) -> ConjugateReport {
    let at_x = p.eval_in(x);
    let at_conjugate = p.eval_in(&x.conjugate());
    let conjugation_commutes = at_conjugate == at_x.conjugate();
    let minpoly_divides = at_x.is_zero().then(|| {
        let m = minpoly_quadratic(x).to_poly();
        let (_, r) = p
            .to_poly()
            .divmod(&m)
            .expect("minimal polynomial is nonzero");
        r.is_zero()
    });
    ConjugateReport {
        at_x,
        at_conjugate,
        conjugation_commutes,
        minpoly_divides,
    }
}

/// First column of the Routh array of `Q(x) = ±P(−x)` (sign chosen so the
/// leading coefficient is positive). Stops at the first nonpositive entry.
pub fn routh_first_column(p: &IntPoly) -> Result<Vec<Rational>, AlgError> {
    let n = p.degree().ok_or(AlgError::ZeroPolynomial)?;
    if n == 0 {
        return Err(AlgError::Constant);
    }
    let mut q: Vec<Rational> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let c = Rational::from_bigint(c.clone());
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    if !q[n].is_positive() {
        q = q.into_iter().map(|c| -c).collect();
    }
    // rows from the top: coefficients of degrees n, n-2, ... and n-1, n-3, ...
    let row = |start: usize| -> Vec<Rational> {
        (0..=start).rev().step_by(2).map(|i| q[i].clone()).collect()
    };
    let mut prev = row(n);
    let mut cur = row(n - 1);
    let mut column = vec![prev[0].clone()];
    for _ in 0..n {
        let head = cur.first().cloned().unwrap_or_else(Rational::zero);
        column.push(head.clone());
        if !head.is_positive() {
            break;
        }
        let at = |v: &[Rational], j: usize| v.get(j).cloned().unwrap_or_else(Rational::zero);
        let width = prev.len().max(cur.len());
        let next: Vec<Rational> = (0..width.saturating_sub(1))
            .map(|j| {
                let num = head.clone() * &at(&prev, j + 1) - prev[0].clone() * &at(&cur, j + 1);
                num.checked_div(&head).expect("head is positive")
            })
            .collect();
        prev = cur;
        cur = next;
    }
    column.truncate(n + 1);
    Ok(column)
}

/// True iff every complex root of `p` has positive real part.
///
/// Decided exactly by the Routh–Hurwitz criterion on `P(−x)`: all its roots
/// lie in the open left half-plane iff the first Routh column is strictly
/// positive. A zero entry means some root has real part ≤ 0.
pub fn positive_real_part_all_roots(p: &IntPoly) -> Result<bool, AlgError> {
    if p.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Err(AlgError::Constant);
    }
    if !p.is_squarefree() {
        return Err(AlgError::NotSquarefree);
    }
    let col = routh_first_column(p)?;
    Ok(col.len() == p.degree().expect("nonzero") + 1 && col.iter().all(Field::is_positive))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cond3Input {
    Element(QuadExt),
    Poly(IntPoly),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cond3Verdict {
    pub pass: bool,
    /// Polynomial whose roots were examined.
    pub poly: IntPoly,
    /// False when a failing verdict might come from a factor that does not
    /// carry the number in question.
    pub conclusive: bool,
    pub caveat: Option<String>,
}

/// Whether every algebraic conjugate of the number has positive real part.
///
/// For an element of ℚ(√d) the minimal polynomial is known and the verdict
/// is exact. For a user polynomial a pass is always sound (every root is
/// in the right half-plane), while a fail only speaks for a root of `P` if
/// `P` is irreducible; that is checked for degree ≤ 3 via rational roots.
pub fn lfs_condition3(input: &Cond3Input) -> Result<Cond3Verdict, AlgError> {
    match input {
        Cond3Input::Element(x) => {
            let poly = minpoly_quadratic(x);
            let pass = positive_real_part_all_roots(&poly)?;
            Ok(Cond3Verdict {
                pass,
                poly,
                conclusive: true,
                caveat: None,
            })
        }
        Cond3Input::Poly(p) => {
            let pass = positive_real_part_all_roots(p)?;
            let deg = p.degree().expect("checked nonzero");
            let (conclusive, caveat) = if pass || deg == 1 {
                (true, None)
            } else if deg <= 3 {
                match p.rational_roots() {
                    Some(r) if r.is_empty() => (true, None),
                    Some(r) => (
                        false,
                        Some(format!(
                            "polynomial is reducible (rational root {}); the failing root may not be a conjugate of R",
                            r[0]
                        )),
                    ),
                    None => (false, Some("coefficients too large to test irreducibility".to_string())),
                }
            } else {
                (
                    false,
                    Some(format!(
                        "irreducibility of a degree-{deg} polynomial is not checked; FAIL is conclusive only for irreducible input"
                    )),
                )
            };
            Ok(Cond3Verdict {
                pass,
                poly: p.clone(),
                conclusive,
                caveat,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QuadField;

    fn quad(d: u64, a: (i64, i64), b: (i64, i64)) -> QuadExt {
        QuadField::new(d)
            .unwrap()
            .elem(Rational::frac(a.0, a.1), Rational::frac(b.0, b.1))
    }

    fn ip(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(ip("2x^2-6x+3"), IntPoly::from_i64(&[3, -6, 2]));
        assert_eq!(ip("2x^2-6x+3").to_string(), "2x^2-6x+3");
        assert_eq!(ip("x^2 - 2x - 1").to_string(), "x^2-2x-1");
        assert_eq!(ip("-x+1").to_string(), "x-1");
        assert_eq!(ip("3*x^3 + x^3 - 4").to_string(), "4x^3-4");
        assert_eq!(ip("x").to_string(), "x");
        assert_eq!(ip("0").to_string(), "0");
        for bad in ["", "x^", "1/2x", "2y", "x^-1", "+"] {
            assert!(bad.parse::<IntPoly>().is_err(), "{bad}");
        }
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(minpoly_quadratic(&quad(2, (1, 1), (1, 1))), ip("x^2-2x-1"));
        assert_eq!(
            minpoly_quadratic(&QuadExt::rational(Rational::frac(5, 3))),
            ip("3x-5")
        );
        assert_eq!(minpoly_quadratic(&quad(3, (3, 2), (1, 2))), ip("2x^2-6x+3"));
        assert_eq!(minpoly_quadratic(&quad(2, (0, 1), (1, 1))), ip("x^2-2"));
    }

    #[test]
    fn conjugate_lemma() {
        let x = quad(2, (1, 1), (1, 1));
        let r = conjugate_lemma_check(&ip("x^2-2x-1"), &x);
        assert!(r.at_x.is_zero() && r.at_conjugate.is_zero());
        assert_eq!(r.minpoly_divides, Some(true));
        assert!(r.lemma_holds());

        let r = conjugate_lemma_check(&ip("x-1"), &x);
        assert_eq!(r.at_x, quad(2, (0, 1), (1, 1)));
        assert_eq!(r.at_conjugate, quad(2, (0, 1), (-1, 1)));
        assert!(r.lemma_holds());

        let r = conjugate_lemma_check(&ip("x^3"), &x);
        assert_eq!(r.at_x, quad(2, (7, 1), (5, 1)));
        assert_eq!(r.at_conjugate, quad(2, (7, 1), (-5, 1)));
    }

    #[test]
    fn right_half_plane() {
        assert!(!positive_real_part_all_roots(&ip("x^2-2x-1")).unwrap());
        assert!(!positive_real_part_all_roots(&ip("x^2-2")).unwrap());
        assert!(positive_real_part_all_roots(&ip("2x^2-6x+3")).unwrap());
        assert!(positive_real_part_all_roots(&ip("5x-7")).unwrap());
        assert!(!positive_real_part_all_roots(&ip("x+1")).unwrap());
        // roots ±i sit on the axis
        assert!(!positive_real_part_all_roots(&ip("x^2+1")).unwrap());
        // roots 1 ± i
        assert!(positive_real_part_all_roots(&ip("x^2-2x+2")).unwrap());
        // (x-1)(x-2)(x-3)
        assert!(positive_real_part_all_roots(&ip("x^3-6x^2+11x-6")).unwrap());
        // (x-1)(x^2+x+1): complex pair in the left half-plane
        assert!(!positive_real_part_all_roots(&ip("x^3-1")).unwrap());
        assert_eq!(
            positive_real_part_all_roots(&ip("x^2-2x+1")),
            Err(AlgError::NotSquarefree)
        );
        assert_eq!(
            positive_real_part_all_roots(&ip("0")),
            Err(AlgError::ZeroPolynomial)
        );
        assert_eq!(
            positive_real_part_all_roots(&ip("7")),
            Err(AlgError::Constant)
        );
    }

    #[test]
    fn condition3_verdicts() {
        let v = lfs_condition3(&Cond3Input::Element(quad(2, (1, 1), (1, 1)))).unwrap();
        assert!(!v.pass && v.conclusive);
        let v = lfs_condition3(&Cond3Input::Element(quad(3, (3, 2), (1, 2)))).unwrap();
        assert!(v.pass);
        let v = lfs_condition3(&Cond3Input::Element(QuadExt::rational(Rational::frac(
            7, 5,
        ))))
        .unwrap();
        assert!(v.pass);
        assert_eq!(v.poly, ip("5x-7"));

        let v = lfs_condition3(&Cond3Input::Poly(ip("x^2-2"))).unwrap();
        assert!(!v.pass && v.conclusive);
        // (x-1)(x+2): fails, but x = 1 itself is fine
        let v = lfs_condition3(&Cond3Input::Poly(ip("x^2+x-2"))).unwrap();
        assert!(!v.pass && !v.conclusive && v.caveat.is_some());
        let v = lfs_condition3(&Cond3Input::Poly(ip("x^4-2"))).unwrap();
        assert!(!v.pass && !v.conclusive);
    }

    #[test]
    fn rational_root_search() {
        let mut r = ip("6x^3-11x^2+6x-1").rational_roots().unwrap();
        r.sort_by(|a, b| a.as_big().cmp(b.as_big()));
        assert_eq!(
            r,
            vec![Rational::frac(1, 3), Rational::frac(1, 2), Rational::one()]
        );
        assert!(ip("x^2-2").rational_roots().unwrap().is_empty());
        assert_eq!(ip("x^2-x").rational_roots().unwrap().len(), 2);
    }
}
