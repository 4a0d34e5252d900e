use std::collections::VecDeque;

use crate::arith::{Field, OrderedField};
use crate::linsolve::{gauss_jordan, LinearSystem, SolveOutcome};

use super::{
    extract_cuts, validate_geometric, CutStructure, Dissection, DissectionError, Rect,
    SizedDissection, SizedTile, Tile,
};

/// Stitching equations with the big vertical side fixed to 1.
///
/// Unknowns are `x` (big horizontal side) followed by `x{id}`, the vertical
/// side of each tile in tile order.
pub fn junction_system<K: Field>(cs: &CutStructure, tiles: &[Tile<K>]) -> LinearSystem<K> {
    junction_system_scaled(cs, tiles, &K::one())
}

/// As [`junction_system`] with the big vertical side fixed to `height`.
pub fn junction_system_scaled<K: Field>(
    cs: &CutStructure,
    tiles: &[Tile<K>],
    height: &K,
) -> LinearSystem<K> {
    let names = std::iter::once("x".to_string()).chain(tiles.iter().map(|t| format!("x{}", t.id)));
    let mut sys = LinearSystem::new(names).expect("tile ids are unique");
    let var = |tile: usize| tile + 1;
    let push = |sys: &mut LinearSystem<K>, terms: Vec<(usize, K)>, rhs: K| {
        sys.push_sparse(&terms, rhs)
            .expect("indices come from the tile list");
    };

    // vertical conditions: the left side once, then every interior node
    let terms = cs
        .starting_at(cs.left_boundary)
        .map(|k| (var(k), K::one()))
        .collect();
    push(&mut sys, terms, height.clone());
    for n in 0..cs.v_nodes.len() {
        if n == cs.left_boundary || n == cs.right_boundary {
            continue;
        }
        let terms = cs
            .ending_at(n)
            .map(|k| (var(k), K::one()))
            .chain(cs.starting_at(n).map(|k| (var(k), -K::one())))
            .collect();
        push(&mut sys, terms, K::zero());
    }

    // horizontal conditions: every interior cut, then the top edge
    for c in 0..cs.h_cuts.len() {
        if c == cs.bottom_boundary || c == cs.top_boundary {
            continue;
        }
        let terms = cs
            .above(c)
            .map(|k| (var(k), tiles[k].aspect.clone()))
            .chain(cs.below(c).map(|k| (var(k), -tiles[k].aspect.clone())))
            .collect();
        push(&mut sys, terms, K::zero());
    }
    let terms = std::iter::once((0, -K::one()))
        .chain(
            cs.below(cs.top_boundary)
                .map(|k| (var(k), tiles[k].aspect.clone())),
        )
        .collect();
    push(&mut sys, terms, K::zero());
    sys
}

#[derive(Debug, Clone)]
pub struct Sizing<K> {
    pub sized: SizedDissection<K>,
    /// Horizontal side over vertical side of the big rectangle.
    pub ratio: K,
    pub cuts: CutStructure,
    pub system: LinearSystem<K>,
}

/// Solves for exact sizes with the big vertical side equal to 1.
pub fn solve_sizes<K: OrderedField>(d: &Dissection<K>) -> Result<Sizing<K>, DissectionError> {
    solve_sizes_scaled(d, &K::one())
}

pub fn solve_sizes_scaled<K: OrderedField>(
    d: &Dissection<K>,
    height: &K,
) -> Result<Sizing<K>, DissectionError> {
    d.check_ids()?;
    if !height.is_positive() {
        return Err(DissectionError::NonPositiveStretch);
    }
    if let Some(t) = d.tiles.iter().find(|t| !t.aspect.is_positive()) {
        return Err(DissectionError::NonPositiveAspect(t.id));
    }
    let cuts = extract_cuts(d)?;
    let system = junction_system_scaled(&cuts, &d.tiles, height);
    let values = match gauss_jordan(&system) {
        SolveOutcome::Unique(v) => v,
        SolveOutcome::Parametric { free, .. } => {
            return Err(DissectionError::Underdetermined(free.len()))
        }
        SolveOutcome::Inconsistent { row, reduced } => {
            return Err(DissectionError::inconsistent(row, &reduced))
        }
    };
    for (k, t) in d.tiles.iter().enumerate() {
        if !values[k + 1].is_positive() {
            return Err(DissectionError::Degenerate(t.id));
        }
    }
    let heights = &values[1..];
    let widths: Vec<K> = d
        .tiles
        .iter()
        .zip(heights)
        .map(|(t, h)| t.aspect.clone() * h)
        .collect();

    let xs = propagate(
        cuts.v_nodes.len(),
        cuts.left_boundary,
        &cuts.tile_nodes,
        &widths,
    )?;
    let ys = propagate(
        cuts.h_cuts.len(),
        cuts.bottom_boundary,
        &cuts.tile_cuts,
        heights,
    )?;

    let tiles = d
        .tiles
        .iter()
        .enumerate()
        .map(|(k, t)| SizedTile {
            id: t.id,
            sketch: t.sketch,
            aspect: t.aspect.clone(),
            rect: Rect {
                x: xs[cuts.tile_nodes[k].0].clone(),
                y: ys[cuts.tile_cuts[k].0].clone(),
                w: widths[k].clone(),
                h: heights[k].clone(),
            },
        })
        .collect();
    let sized = SizedDissection {
        big_w: values[0].clone(),
        big_h: height.clone(),
        tiles,
    };
    let report = validate_geometric(&sized.to_dissection())?;
    if !report.is_valid() {
        return Err(DissectionError::Invalid(report.to_string()));
    }
    let ratio = values[0].checked_div(height)?;
    Ok(Sizing {
        sized,
        ratio,
        cuts,
        system,
    })
}

/// Assigns a coordinate to every node by walking tiles from the origin
/// node; `spans[k] = (from, to)` and `lengths[k]` is the tile extent.
fn propagate<K: Field>(
    nodes: usize,
    origin: usize,
    spans: &[(usize, usize)],
    lengths: &[K],
) -> Result<Vec<K>, DissectionError> {
    let mut out: Vec<Option<K>> = vec![None; nodes];
    let mut from: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (k, &(a, _)) in spans.iter().enumerate() {
        from[a].push(k);
    }
    out[origin] = Some(K::zero());
    let mut queue = VecDeque::from([origin]);
    while let Some(n) = queue.pop_front() {
        let base = out[n].clone().expect("queued nodes are placed");
        for &k in &from[n] {
            let to = spans[k].1;
            let pos = base.clone() + &lengths[k];
            match &out[to] {
                None => {
                    out[to] = Some(pos);
                    queue.push_back(to);
                }
                Some(prev) if *prev != pos => {
                    return Err(DissectionError::Invalid(
                        "cut positions disagree along different paths".into(),
                    ))
                }
                Some(_) => {}
            }
        }
    }
    out.into_iter()
        .map(|p| {
            p.ok_or_else(|| {
                DissectionError::Sketch("a cut is unreachable from the boundary".into())
            })
        })
        .collect()
}
