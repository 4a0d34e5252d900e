//! Ladder tilings built from the continued fraction
//! `c₁R + 1/(c₂R + 1/(… + 1/(cₙR)))`.

use serde::{Deserialize, Serialize};

use crate::arith::{parse_quad, parse_rational, Field, OrderedField, QuadExt, QuadField, Rational};
use crate::dissection::{Dissection, FieldKind, Rect, Sketch, Tile};

use super::CorrespondenceError;

#[derive(Debug, Clone, PartialEq)]
pub struct LadderSpec<K> {
    pub r: K,
    pub c: Vec<Rational>,
}

impl<K: OrderedField> LadderSpec<K> {
    pub fn new(r: K, c: Vec<Rational>) -> Self {
        LadderSpec { r, c }
    }

    /// Tails `T_k = c_k R + 1/T_{k+1}`, `T_n = c_n R`, first to last.
    pub fn tails(&self) -> Result<Vec<K>, CorrespondenceError> {
        if self.c.is_empty() {
            return Err(CorrespondenceError::Ladder("no coefficients".into()));
        }
        let mut out = Vec::with_capacity(self.c.len());
        let mut next: Option<K> = None;
        for c in self.c.iter().rev() {
            let mut t = K::from_rational(c.clone()) * &self.r;
            if let Some(n) = &next {
                t = t + n.inv()?;
            }
            out.push(t.clone());
            next = Some(t);
        }
        out.reverse();
        Ok(out)
    }

    /// Coefficients positive, every tail positive, value exactly 1.
    pub fn check(&self) -> Result<(), CorrespondenceError> {
        if let Some(c) = self.c.iter().find(|c| !c.is_positive()) {
            return Err(CorrespondenceError::Ladder(format!(
                "coefficient {c} is not positive"
            )));
        }
        if !self.r.is_positive() {
            return Err(CorrespondenceError::Ladder("R must be positive".into()));
        }
        let tails = self.tails()?;
        if let Some(t) = tails.iter().find(|t| !t.is_positive()) {
            return Err(CorrespondenceError::Ladder(format!(
                "tail {t} is not positive"
            )));
        }
        if !tails[0].is_one() {
            return Err(CorrespondenceError::Ladder(format!(
                "continued fraction equals {}, not 1",
                tails[0]
            )));
        }
        Ok(())
    }
}

/// Exact value of the continued fraction.
pub fn cf_eval<K: OrderedField>(spec: &LadderSpec<K>) -> Result<K, CorrespondenceError> {
    Ok(spec.tails()?.swap_remove(0))
}

/// Unit square cut into tiles of aspect `R` and `1/R`.
///
/// The square (aspect `T₁ = 1`) is split into a slab of aspect `c₁R` and
/// a remainder of aspect `1/T₂`. With `c₁ = p/q` the slab is a grid of
/// `q` rows and `p` columns of aspect-`R` cells. The remainder, viewed
/// transposed, has aspect `T₂`, so the same step repeats with the roles of
/// horizontal and vertical exchanged, and so on down the fraction.
pub fn ladder_dissection<K: OrderedField>(
    spec: &LadderSpec<K>,
) -> Result<Dissection<K>, CorrespondenceError> {
    spec.check()?;
    let r_inv = spec.r.inv()?;
    let mut tiles: Vec<Tile<K>> = Vec::new();
    // current rectangle in true coordinates
    let (mut x0, mut y0, mut w, mut h) = (K::zero(), K::zero(), K::one(), K::one());
    let mut transposed = false;

    for (k, c) in spec.c.iter().enumerate() {
        let (p, q) = (c.numer().clone(), c.denom().clone());
        let p: usize = p
            .try_into()
            .map_err(|_| CorrespondenceError::Ladder("numerator too large".into()))?;
        let q: usize = q
            .try_into()
            .map_err(|_| CorrespondenceError::Ladder("denominator too large".into()))?;
        // frame height and the slab's frame width
        let fh = if transposed { w.clone() } else { h.clone() };
        let slab = K::from_rational(c.clone()) * &spec.r * &fh;
        let cell_fw = slab.checked_div(&K::from_int(p as i64))?;
        let cell_fh = fh.checked_div(&K::from_int(q as i64))?;
        for row in 0..q {
            for col in 0..p {
                let fx = cell_fw.clone() * &K::from_int(col as i64);
                let fy = cell_fh.clone() * &K::from_int(row as i64);
                let (rect, aspect) = if transposed {
                    // frame x runs along true y
                    (
                        Rect {
                            x: x0.clone() + &fy,
                            y: y0.clone() + &fx,
                            w: cell_fh.clone(),
                            h: cell_fw.clone(),
                        },
                        r_inv.clone(),
                    )
                } else {
                    (
                        Rect {
                            x: x0.clone() + &fx,
                            y: y0.clone() + &fy,
                            w: cell_fw.clone(),
                            h: cell_fh.clone(),
                        },
                        spec.r.clone(),
                    )
                };
                let sketch = sketch_of(&rect)?;
                let id = tiles.len() as u32 + 1;
                tiles.push(Tile {
                    id,
                    sketch,
                    aspect,
                    rect: Some(rect),
                });
            }
        }
        if transposed {
            y0 = y0 + &slab;
            h = h - slab;
        } else {
            x0 = x0 + &slab;
            w = w - slab;
        }
        let last = k + 1 == spec.c.len();
        let left = if transposed { &h } else { &w };
        if last && !left.is_zero() {
            return Err(CorrespondenceError::Ladder(
                "construction left a gap".into(),
            ));
        }
        transposed = !transposed;
    }
    Ok(Dissection {
        big_w: Some(K::one()),
        big_h: Some(K::one()),
        tiles,
    })
}

fn sketch_of<K: Field>(r: &Rect<K>) -> Result<Sketch, CorrespondenceError> {
    let f = |v: &K| {
        v.to_f64()
            .ok_or_else(|| CorrespondenceError::Ladder(format!("{v} has no decimal value")))
    };
    Ok(Sketch::new(f(&r.x)?, f(&r.y)?, f(&r.w)?, f(&r.h)?))
}

#[derive(Serialize, Deserialize)]
struct LadderDoc {
    field: FieldKind,
    #[serde(rename = "R")]
    r: String,
    c: Vec<String>,
}

/// Ladder spec over whichever field its file declares.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyLadder {
    Rational(LadderSpec<Rational>),
    Quadratic(QuadField, LadderSpec<QuadExt>),
}

impl AnyLadder {
    pub fn from_json(text: &str) -> Result<Self, CorrespondenceError> {
        let doc: LadderDoc =
            serde_json::from_str(text).map_err(|e| CorrespondenceError::Format(e.to_string()))?;
        let c = doc
            .c
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        match doc.field {
            FieldKind::Rational => Ok(AnyLadder::Rational(LadderSpec::new(
                parse_rational(&doc.r)?,
                c,
            ))),
            FieldKind::Quadratic { d } => {
                let f = QuadField::new(d)?;
                let r = parse_quad(&doc.r)?.into_field(Some(f))?;
                Ok(AnyLadder::Quadratic(f, LadderSpec::new(r, c)))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let (field, r, c) = match self {
            AnyLadder::Rational(s) => (FieldKind::Rational, s.r.to_string(), &s.c),
            AnyLadder::Quadratic(f, s) => {
                (FieldKind::Quadratic { d: f.d() }, s.r.to_string(), &s.c)
            }
        };
        let doc = LadderDoc {
            field,
            r,
            c: c.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}
