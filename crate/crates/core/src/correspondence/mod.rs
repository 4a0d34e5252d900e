//! The bridge between tilings and resistor networks.
//!
//! Every vertical cut of a tiling becomes a terminal and every tile a
//! resistor whose resistance is the tile's aspect ratio, oriented from its
//! left cut to its right cut. A battery joins the left side (plus) to the
//! right side (minus) with voltage equal to the big horizontal side. The
//! current through each resistor is then the tile's vertical side.

mod ladder;
mod theorem1;

use crate::arith::{ArithError, Field, OrderedField};
use crate::circuit::{kirchhoff_system, solve_flow, CircuitError, Netlist};
use crate::dissection::{
    extract_cuts, junction_system_scaled, solve_sizes, CutStructure, Dissection, DissectionError,
    Rect, Sketch,
};

pub use ladder::{cf_eval, ladder_dissection, AnyLadder, LadderSpec};
pub use theorem1::{theorem1_certificate, Theorem1Certificate};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CorrespondenceError {
    #[error(transparent)]
    Dissection(#[from] DissectionError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("stretch factor must be positive")]
    NonPositiveStretch,
    #[error("tile {id} has aspect {aspect}, expected R or 1/R")]
    AspectOutsidePair { id: u32, aspect: String },
    #[error("big rectangle is not a square (ratio {0})")]
    NotSquare(String),
    #[error("certificate check failed: {0}")]
    Certificate(String),
    #[error("invalid ladder: {0}")]
    Ladder(String),
    #[error("malformed ladder file: {0}")]
    Format(String),
}

pub(crate) fn node_name(cs: &CutStructure, n: usize) -> String {
    if n == cs.left_boundary {
        "left".into()
    } else if n == cs.right_boundary {
        "right".into()
    } else {
        format!("n{n}")
    }
}

/// Network on the cut structure with per-tile resistances from `value`.
pub(crate) fn netlist_on_cuts<K: Field, L: Field>(
    cs: &CutStructure,
    d: &Dissection<K>,
    value: impl Fn(usize) -> L,
    voltage: L,
) -> Netlist<L> {
    let mut net = Netlist::new();
    for n in 0..cs.v_nodes.len() {
        net.node(&node_name(cs, n));
    }
    for (k, t) in d.tiles.iter().enumerate() {
        let (a, b) = cs.tile_nodes[k];
        net.add_resistor(
            &t.id.to_string(),
            &node_name(cs, a),
            &node_name(cs, b),
            value(k),
        )
        .expect("tile ids are unique");
    }
    net.set_battery("left", "right", voltage)
        .expect("one battery");
    net
}

/// Smith netlist of a tiling. The voltage is `big_w` when the dissection
/// carries it, otherwise the horizontal side obtained by solving with a
/// unit vertical side.
pub fn circuit_of_dissection<K: OrderedField>(
    d: &Dissection<K>,
) -> Result<Netlist<K>, CorrespondenceError> {
    let cs = extract_cuts(d)?;
    let voltage = match &d.big_w {
        Some(w) => w.clone(),
        None => solve_sizes(d)?.ratio,
    };
    Ok(netlist_on_cuts(
        &cs,
        d,
        |k| d.tiles[k].aspect.clone(),
        voltage,
    ))
}

/// Side-by-side comparison of a solved tiling and its network.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport<K> {
    /// `(tile id, vertical side, resistor current)` per tile.
    pub rows: Vec<(u32, K, K)>,
    pub battery_current: K,
    pub big_ratio: K,
    pub resistance: K,
    /// The sizes satisfy the Kirchhoff system.
    pub sizes_solve_kirchhoff: bool,
    /// The currents satisfy the stitching system.
    pub currents_solve_stitching: bool,
    pub mismatches: Vec<String>,
}

impl<K> EquivalenceReport<K> {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Solves the tiling and its network independently and compares them.
pub fn certify_equivalence<K: OrderedField>(
    d: &Dissection<K>,
) -> Result<EquivalenceReport<K>, CorrespondenceError> {
    let sizing = solve_sizes(d)?;
    let net = netlist_on_cuts(
        &sizing.cuts,
        d,
        |k| d.tiles[k].aspect.clone(),
        sizing.ratio.clone(),
    );
    let flow = solve_flow(&net)?;
    let mut mismatches = Vec::new();

    let mut rows = Vec::new();
    for (k, t) in sizing.sized.tiles.iter().enumerate() {
        let side = t.rect.h.clone();
        let current = flow.currents[k].clone();
        if side != current {
            mismatches.push(format!(
                "tile {}: vertical side {side} but current {current}",
                t.id
            ));
        }
        rows.push((t.id, side, current));
    }
    if !flow.battery_current.is_one() {
        mismatches.push(format!(
            "battery current {} but big vertical side 1",
            flow.battery_current
        ));
    }
    if flow.total_resistance != sizing.ratio {
        mismatches.push(format!(
            "network resistance {} but big ratio {}",
            flow.total_resistance, sizing.ratio
        ));
    }

    let sizes: Vec<K> = sizing
        .sized
        .tiles
        .iter()
        .map(|t| t.rect.h.clone())
        .chain(std::iter::once(K::one()))
        .collect();
    let sizes_solve_kirchhoff = kirchhoff_system(&net)?.is_satisfied_by(&sizes);
    if !sizes_solve_kirchhoff {
        mismatches.push("solved sizes violate a Kirchhoff equation".into());
    }
    let stitching = junction_system_scaled(&sizing.cuts, &d.tiles, &flow.battery_current);
    let as_sizes: Vec<K> = std::iter::once(sizing.ratio.clone())
        .chain(flow.currents.iter().cloned())
        .collect();
    let currents_solve_stitching = stitching.is_satisfied_by(&as_sizes);
    if !currents_solve_stitching {
        mismatches.push("currents violate a stitching equation".into());
    }

    Ok(EquivalenceReport {
        rows,
        battery_current: flow.battery_current,
        big_ratio: sizing.ratio,
        resistance: flow.total_resistance,
        sizes_solve_kirchhoff,
        currents_solve_stitching,
        mismatches,
    })
}

/// Stretches the picture horizontally by `s`: aspects, horizontal sketch
/// coordinates and any exact horizontal data are multiplied by `s`.
pub fn stretch<K: OrderedField>(
    d: &Dissection<K>,
    s: &K,
) -> Result<Dissection<K>, CorrespondenceError> {
    if !s.is_positive() {
        return Err(CorrespondenceError::NonPositiveStretch);
    }
    let sf = s.to_f64().ok_or(CorrespondenceError::NonPositiveStretch)?;
    let mut out = d.clone();
    if let Some(w) = &mut out.big_w {
        *w = w.clone() * s;
    }
    for t in &mut out.tiles {
        t.aspect = t.aspect.clone() * s;
        t.sketch = Sketch::new(t.sketch.x * sf, t.sketch.y, t.sketch.w * sf, t.sketch.h);
        if let Some(r) = &t.rect {
            t.rect = Some(Rect {
                x: r.x.clone() * s,
                y: r.y.clone(),
                w: r.w.clone() * s,
                h: r.h.clone(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
