use crate::algcheck::IntPoly;
use crate::arith::{Field, OrderedField, Poly, QuadExt, RatFunc};
use crate::circuit::symbolic_resistance;
use crate::dissection::{extract_cuts, solve_sizes, Dissection};

use super::{netlist_on_cuts, stretch, CorrespondenceError};

/// Integer polynomial vanishing at the aspect ratio `R` of a square tiled
/// by rectangles of aspect `R` and `1/R`.
#[derive(Debug, Clone, PartialEq)]
pub struct Theorem1Certificate {
    pub r: QuadExt,
    /// Resistance of the stretched picture's network, with the `R²` tiles
    /// as `t` and the unit tiles as 1.
    pub w: RatFunc,
    /// `q(x²)·x − p(x²)` for `w = p/q`, made integral and primitive.
    pub f: IntPoly,
    /// `F(R)`, zero for a valid certificate.
    pub value_at_r: QuadExt,
    pub resistors: usize,
}

/// Builds the certificate. When `r` is `None`, `R` is taken as the larger
/// of each aspect and its reciprocal, which must agree across tiles.
///
/// Stretching the square horizontally by `R` gives a rectangle of ratio `R`
/// whose tiles have ratio 1 or `R²`; its resistance `W(t)` at `t = R²` is
/// therefore `R`, so `q(R²)·R − p(R²) = 0`.
pub fn theorem1_certificate(
    d: &Dissection<QuadExt>,
    r: Option<&QuadExt>,
) -> Result<Theorem1Certificate, CorrespondenceError> {
    let r = match r {
        Some(r) => r.clone(),
        None => infer_r(d)?,
    };
    if !r.is_positive() {
        return Err(CorrespondenceError::NonPositiveStretch);
    }
    let r_inv = r.inv()?;
    for t in &d.tiles {
        if t.aspect != r && t.aspect != r_inv {
            return Err(CorrespondenceError::AspectOutsidePair {
                id: t.id,
                aspect: t.aspect.to_string(),
            });
        }
    }
    let ratio = solve_sizes(d)?.ratio;
    if !ratio.is_one() {
        return Err(CorrespondenceError::NotSquare(ratio.to_string()));
    }

    let stretched = stretch(d, &r)?;
    let cs = extract_cuts(&stretched)?;
    let one = QuadExt::one();
    let value = |k: usize| {
        // aspect 1/R becomes 1; checked first so that R = 1 maps to 1
        if stretched.tiles[k].aspect == one {
            RatFunc::one()
        } else {
            RatFunc::t()
        }
    };
    let net = netlist_on_cuts(&cs, &stretched, value, RatFunc::one());
    let w = symbolic_resistance(&net)?;

    let x = Poly::x();
    let f_poly = w
        .den()
        .compose_power(2)
        .mul(&x)
        .sub(&w.num().compose_power(2));
    let f = IntPoly::from_rational_poly(&f_poly);
    if f.is_zero() {
        return Err(CorrespondenceError::Certificate(
            "F is the zero polynomial".into(),
        ));
    }
    let value_at_r = f.eval_in(&r);
    if !value_at_r.is_zero() {
        return Err(CorrespondenceError::Certificate(format!(
            "F(R) = {value_at_r}, not 0"
        )));
    }
    Ok(Theorem1Certificate {
        r,
        w,
        f,
        value_at_r,
        resistors: d.tiles.len(),
    })
}

fn infer_r(d: &Dissection<QuadExt>) -> Result<QuadExt, CorrespondenceError> {
    let mut found: Option<QuadExt> = None;
    for t in &d.tiles {
        let a = t.aspect.clone();
        let cand = a.clone().max_exact(a.inv()?);
        match &found {
            None => found = Some(cand),
            Some(r) if *r == cand => {}
            Some(_) => {
                return Err(CorrespondenceError::AspectOutsidePair {
                    id: t.id,
                    aspect: a.to_string(),
                })
            }
        }
    }
    found.ok_or(CorrespondenceError::Dissection(
        crate::dissection::DissectionError::Empty,
    ))
}
