//! Textual scalar syntax shared by every file format.
//!
//! Rationals are written `p/q` or `p`; quadratic elements as a sum of a
//! rational term and a surd term, e.g. `3/2 + 1/2*sqrt(3)`, `-sqrt(2)`.
//! Whitespace is ignored.

use num_bigint::BigInt;

use super::{is_squarefree_int, ArithError, Field, QuadExt, QuadField, Rational};

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn parse_unsigned_ratio(orig: &str, s: &str) -> Result<Rational, ArithError> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return Err(ArithError::parse(orig, "expected p or p/q"));
    }
    let n: BigInt = n
        .parse()
        .map_err(|_| ArithError::parse(orig, "bad numerator"))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| ArithError::parse(orig, "bad denominator"))?;
    Rational::new(n, d).map_err(|_| ArithError::parse(orig, "zero denominator"))
}

pub fn parse_rational(input: &str) -> Result<Rational, ArithError> {
    let s = strip_ws(input);
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(&s)),
    };
    let q = parse_unsigned_ratio(input, body)?;
    Ok(if neg { -q } else { q })
}

/// `a + b·√d` as read from text, before being placed in a field.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedScalar {
    pub a: Rational,
    pub b: Rational,
    pub d: Option<u64>,
}

impl ParsedScalar {
    /// Places the value in ℚ(√d) for the given field, or fails if it
    /// mentions a different radicand.
    pub fn into_field(self, field: Option<QuadField>) -> Result<QuadExt, ArithError> {
        match (self.d, field) {
            (Some(d), Some(f)) if d != f.d() => Err(ArithError::MixedRadicand(d, f.d())),
            (Some(d), None) => Ok(QuadField::new(d)?.elem(self.a, self.b)),
            (_, Some(f)) => Ok(f.elem(self.a, self.b)),
            (None, None) => Ok(QuadExt::rational(self.a)),
        }
    }
}

pub fn parse_quad(input: &str) -> Result<ParsedScalar, ArithError> {
    let s = strip_ws(input);
    if s.is_empty() {
        return Err(ArithError::parse(input, "empty scalar"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && !cur.ends_with('(') {
            if i > 0 {
                if cur.is_empty() {
                    return Err(ArithError::parse(input, "dangling sign"));
                }
                terms.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(ArithError::parse(input, "dangling sign"));
    }
    terms.push((neg, cur));

    let mut a = Rational::zero();
    let mut b = Rational::zero();
    let mut d: Option<u64> = None;
    for (neg, term) in terms {
        let (coef, surd) = match term.find("sqrt(") {
            None => (term.as_str(), None),
            Some(pos) => {
                let inner = term[pos + 5..]
                    .strip_suffix(')')
                    .ok_or_else(|| ArithError::parse(input, "unclosed sqrt("))?;
                let radicand: u64 = inner
                    .parse()
                    .map_err(|_| ArithError::parse(input, "radicand must be a positive integer"))?;
                if !is_squarefree_int(radicand) {
                    return Err(ArithError::BadRadicand(radicand));
                }
                let coef = &term[..pos];
                let coef = if coef.is_empty() {
                    "1"
                } else {
                    coef.strip_suffix('*')
                        .ok_or_else(|| ArithError::parse(input, "expected '*' before sqrt"))?
                };
                (coef, Some(radicand))
            }
        };
        let mut q = parse_unsigned_ratio(input, coef)?;
        if neg {
            q = -q;
        }
        match surd {
            None => a = a + q,
            Some(r) => {
                if let Some(prev) = d {
                    if prev != r {
                        return Err(ArithError::MixedRadicand(prev, r));
                    }
                }
                d = Some(r);
                b = b + q;
            }
        }
    }
    if b.is_zero() {
        d = None;
    }
    Ok(ParsedScalar { a, b, d })
}

impl std::str::FromStr for QuadExt {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_quad(s)?.into_field(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("33/32").unwrap(), Rational::frac(33, 32));
        assert_eq!(parse_rational(" - 4 / 8 ").unwrap(), Rational::frac(-1, 2));
        assert_eq!(parse_rational("+7").unwrap(), Rational::from(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("sqrt(2)").is_err());
    }

    #[test]
    fn quadratic_terms() {
        let p = parse_quad("3/2 + 1/2*sqrt(3)").unwrap();
        assert_eq!(
            (p.a, p.b, p.d),
            (Rational::frac(3, 2), Rational::frac(1, 2), Some(3))
        );
        let p = parse_quad("-sqrt(2)").unwrap();
        assert_eq!(
            (p.a, p.b, p.d),
            (Rational::zero(), Rational::from(-1), Some(2))
        );
        let p = parse_quad("1 - 2*sqrt(5) + 1/3").unwrap();
        assert_eq!((p.a, p.b), (Rational::frac(4, 3), Rational::from(-2)));
        let p = parse_quad("5").unwrap();
        assert_eq!(p.d, None);
    }

    #[test]
    fn quadratic_errors() {
        assert!(matches!(
            parse_quad("sqrt(2) + sqrt(3)"),
            Err(ArithError::MixedRadicand(2, 3))
        ));
        assert!(matches!(
            parse_quad("sqrt(8)"),
            Err(ArithError::BadRadicand(8))
        ));
        assert!(parse_quad("2sqrt(2)").is_err());
        assert!(parse_quad("1 +").is_err());
        assert!(parse_quad("sqrt(2").is_err());
        let three = QuadField::new(3).unwrap();
        assert!(parse_quad("sqrt(2)")
            .unwrap()
            .into_field(Some(three))
            .is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "3/2 + 1/2*sqrt(3)",
            "-sqrt(2)",
            "1 - 2/3*sqrt(7)",
            "-5/4",
            "sqrt(6)",
            "0",
        ] {
            let x: QuadExt = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
    }
}
