use crate::arith::OrderedField;

use super::{validate_geometric, DissectionError, SizedDissection};

/// Outcome of checking a sized tiling against Dehn's theorem.
#[derive(Debug, Clone, PartialEq)]
pub struct DehnVerdict<K> {
    /// Ids of tiles with `w ≠ h`.
    pub non_squares: Vec<u32>,
    pub ratio: K,
    pub ratio_is_rational: bool,
}

impl<K> DehnVerdict<K> {
    pub fn all_squares(&self) -> bool {
        self.non_squares.is_empty()
    }

    /// A tiling by squares must have a rational side ratio.
    pub fn consistent_with_theorem(&self) -> bool {
        !self.all_squares() || self.ratio_is_rational
    }
}

pub fn dehn_check<K: OrderedField>(
    d: &SizedDissection<K>,
) -> Result<DehnVerdict<K>, DissectionError> {
    let report = validate_geometric(&d.to_dissection())?;
    if !report.is_valid() {
        return Err(DissectionError::Invalid(report.to_string()));
    }
    let non_squares = d
        .tiles
        .iter()
        .filter(|t| t.rect.w != t.rect.h)
        .map(|t| t.id)
        .collect();
    let ratio = d.ratio()?;
    let ratio_is_rational = ratio.to_rational().is_some();
    Ok(DehnVerdict {
        non_squares,
        ratio,
        ratio_is_rational,
    })
}
