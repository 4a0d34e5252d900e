//! Axis-aligned rectangle dissections.
//!
//! A [`Dissection`] carries decimal sketch coordinates, which only fix the
//! combinatorics (who touches whom along which cut), and an exact aspect
//! ratio (horizontal side / vertical side) per tile. Exact sizes are always
//! recomputed from the stitching equations by [`solve_sizes`].

mod cuts;
mod dehn;
mod io;
mod sizing;
mod svg;
mod validate;

use std::collections::HashSet;

use crate::arith::{ArithError, Field};
use crate::linsolve::Row;

pub use cuts::{extract_cuts, CutSegment, CutStructure, Incidence, Side};
pub use dehn::{dehn_check, DehnVerdict};
pub use io::{AnyDissection, FieldKind};
pub use sizing::{
    junction_system, junction_system_scaled, solve_sizes, solve_sizes_scaled, Sizing,
};
pub use svg::render_svg;
pub use validate::{validate_geometric, Issue, ValidationReport};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DissectionError {
    #[error("duplicate tile id {0}")]
    DuplicateId(u32),
    #[error("dissection has no tiles")]
    Empty,
    #[error("sketch is not a tiling: {0}")]
    Sketch(String),
    #[error("tile {0} has no exact rectangle")]
    MissingRect(u32),
    #[error("big rectangle size is not given")]
    MissingBig,
    #[error("tile {0} has a nonpositive aspect ratio")]
    NonPositiveAspect(u32),
    #[error("tiling cannot be sized with these ratios (equation {row} reduces to 0 = {rhs})")]
    Inconsistent { row: usize, rhs: String },
    #[error("combinatorics under-determined: {0} free unknown(s)")]
    Underdetermined(usize),
    #[error("degenerate sizing: tile {0} gets a nonpositive side")]
    Degenerate(u32),
    #[error("solved sizes fail validation: {0}")]
    Invalid(String),
    #[error("stretch factor must be positive")]
    NonPositiveStretch,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("malformed dissection file: {0}")]
    Format(String),
}

impl DissectionError {
    pub(crate) fn inconsistent<K: Field>(row: usize, reduced: &Row<K>) -> Self {
        DissectionError::Inconsistent {
            row,
            rhs: reduced.rhs.to_string(),
        }
    }
}

/// Decimal sketch placement `(x, y, w, h)`, y pointing up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sketch {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl Sketch {
    pub fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        Sketch { x, y, w, h }
    }
}

/// Exact placement inside the big rectangle, whose lower-left corner is
/// the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Rect<K> {
    pub x: K,
    pub y: K,
    pub w: K,
    pub h: K,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tile<K> {
    pub id: u32,
    pub sketch: Sketch,
    /// Horizontal side divided by vertical side.
    pub aspect: K,
    pub rect: Option<Rect<K>>,
}

impl<K: Field> Tile<K> {
    pub fn new(id: u32, sketch: Sketch, aspect: K) -> Self {
        Tile {
            id,
            sketch,
            aspect,
            rect: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dissection<K> {
    pub big_w: Option<K>,
    pub big_h: Option<K>,
    pub tiles: Vec<Tile<K>>,
}

impl<K: Field> Dissection<K> {
    pub fn new(tiles: Vec<Tile<K>>) -> Result<Self, DissectionError> {
        let d = Dissection {
            big_w: None,
            big_h: None,
            tiles,
        };
        d.check_ids()?;
        Ok(d)
    }

    pub(crate) fn check_ids(&self) -> Result<(), DissectionError> {
        if self.tiles.is_empty() {
            return Err(DissectionError::Empty);
        }
        let mut seen = HashSet::new();
        for t in &self.tiles {
            if !seen.insert(t.id) {
                return Err(DissectionError::DuplicateId(t.id));
            }
        }
        Ok(())
    }

    pub fn tile(&self, id: u32) -> Option<&Tile<K>> {
        self.tiles.iter().find(|t| t.id == id)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizedTile<K> {
    pub id: u32,
    pub sketch: Sketch,
    pub aspect: K,
    pub rect: Rect<K>,
}

/// A dissection with every exact size present.
#[derive(Debug, Clone, PartialEq)]
pub struct SizedDissection<K> {
    pub big_w: K,
    pub big_h: K,
    pub tiles: Vec<SizedTile<K>>,
}

impl<K: Field> SizedDissection<K> {
    pub fn from_dissection(d: &Dissection<K>) -> Result<Self, DissectionError> {
        d.check_ids()?;
        let big_w = d.big_w.clone().ok_or(DissectionError::MissingBig)?;
        let big_h = d.big_h.clone().ok_or(DissectionError::MissingBig)?;
        let tiles = d
            .tiles
            .iter()
            .map(|t| {
                Ok(SizedTile {
                    id: t.id,
                    sketch: t.sketch,
                    aspect: t.aspect.clone(),
                    rect: t.rect.clone().ok_or(DissectionError::MissingRect(t.id))?,
                })
            })
            .collect::<Result<_, DissectionError>>()?;
        Ok(SizedDissection {
            big_w,
            big_h,
            tiles,
        })
    }

    pub fn to_dissection(&self) -> Dissection<K> {
        Dissection {
            big_w: Some(self.big_w.clone()),
            big_h: Some(self.big_h.clone()),
            tiles: self
                .tiles
                .iter()
                .map(|t| Tile {
                    id: t.id,
                    sketch: t.sketch,
                    aspect: t.aspect.clone(),
                    rect: Some(t.rect.clone()),
                })
                .collect(),
        }
    }

    pub fn tile(&self, id: u32) -> Option<&SizedTile<K>> {
        self.tiles.iter().find(|t| t.id == id)
    }

    /// `big_w / big_h`
    pub fn ratio(&self) -> Result<K, ArithError> {
        self.big_w.checked_div(&self.big_h)
    }
}
