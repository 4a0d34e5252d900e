use std::fmt;

use crate::arith::OrderedField;

use super::{Dissection, DissectionError, SizedDissection};

#[derive(Debug, Clone, PartialEq)]
pub enum Issue {
    NonPositiveSide { id: u32 },
    AspectMismatch { id: u32 },
    OutsideBig { id: u32 },
    Overlap { a: u32, b: u32 },
    AreaMismatch { tiles: String, big: String },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::NonPositiveSide { id } => write!(f, "tile {id} has a nonpositive side"),
            Issue::AspectMismatch { id } => write!(f, "tile {id}: w/h differs from its aspect"),
            Issue::OutsideBig { id } => write!(f, "tile {id} sticks out of the big rectangle"),
            Issue::Overlap { a, b } => write!(f, "tiles {a} and {b} overlap"),
            Issue::AreaMismatch { tiles, big } => {
                write!(f, "tile areas sum to {tiles}, big rectangle has area {big}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.issues.iter().map(Issue::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Exact tiling certificate: every tile inside the big rectangle, interiors
/// pairwise disjoint, and areas summing to the big area.
pub fn validate_geometric<K: OrderedField>(
    d: &Dissection<K>,
) -> Result<ValidationReport, DissectionError> {
    let s = SizedDissection::from_dissection(d)?;
    let mut issues = Vec::new();
    let zero = K::zero();
    let lt = |a: &K, b: &K| a.cmp_exact(b).is_lt();

    for t in &s.tiles {
        let r = &t.rect;
        if !r.w.is_positive() || !r.h.is_positive() {
            issues.push(Issue::NonPositiveSide { id: t.id });
            continue;
        }
        if r.w != t.aspect.clone() * &r.h {
            issues.push(Issue::AspectMismatch { id: t.id });
        }
        if lt(&r.x, &zero)
            || lt(&r.y, &zero)
            || lt(&s.big_w, &(r.x.clone() + &r.w))
            || lt(&s.big_h, &(r.y.clone() + &r.h))
        {
            issues.push(Issue::OutsideBig { id: t.id });
        }
    }
    for i in 0..s.tiles.len() {
        for j in i + 1..s.tiles.len() {
            let (a, b) = (&s.tiles[i].rect, &s.tiles[j].rect);
            // open intervals intersect iff each starts before the other ends
            let x = lt(&a.x, &(b.x.clone() + &b.w)) && lt(&b.x, &(a.x.clone() + &a.w));
            let y = lt(&a.y, &(b.y.clone() + &b.h)) && lt(&b.y, &(a.y.clone() + &a.h));
            if x && y {
                issues.push(Issue::Overlap {
                    a: s.tiles[i].id,
                    b: s.tiles[j].id,
                });
            }
        }
    }
    let area = s
        .tiles
        .iter()
        .fold(K::zero(), |acc, t| acc + t.rect.w.clone() * &t.rect.h);
    let big = s.big_w.clone() * &s.big_h;
    if area != big {
        issues.push(Issue::AreaMismatch {
            tiles: area.to_string(),
            big: big.to_string(),
        });
    }
    Ok(ValidationReport { issues })
}
