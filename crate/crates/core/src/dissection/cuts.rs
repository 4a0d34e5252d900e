//! Reading the cut combinatorics off a decimal sketch.

use super::{Dissection, DissectionError, Sketch};

/// Relative tolerance for comparing sketch coordinates.
pub const SKETCH_TOL: f64 = 1e-6;

/// Which side of a cut the tile lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Tile lies left of a vertical cut (the cut is its right edge).
    Left,
    Right,
    /// Tile lies above a horizontal cut (the cut is its bottom edge).
    Above,
    Below,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    /// Index into `Dissection::tiles`.
    pub tile: usize,
    pub side: Side,
}

/// A maximal segment of a vertical node or horizontal cut, in sketch units.
#[derive(Debug, Clone, PartialEq)]
pub struct CutSegment {
    pub pos: f64,
    pub start: f64,
    pub end: f64,
    pub incident: Vec<Incidence>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutStructure {
    pub v_nodes: Vec<CutSegment>,
    pub h_cuts: Vec<CutSegment>,
    pub left_boundary: usize,
    pub right_boundary: usize,
    pub bottom_boundary: usize,
    pub top_boundary: usize,
    /// Per tile: (left node, right node).
    pub tile_nodes: Vec<(usize, usize)>,
    /// Per tile: (bottom cut, top cut).
    pub tile_cuts: Vec<(usize, usize)>,
}

impl CutStructure {
    /// Tiles whose left edge lies on vertical node `n`.
    pub fn starting_at(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        self.v_nodes[n]
            .incident
            .iter()
            .filter(|i| i.side == Side::Right)
            .map(|i| i.tile)
    }

    /// Tiles whose right edge lies on vertical node `n`.
    pub fn ending_at(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        self.v_nodes[n]
            .incident
            .iter()
            .filter(|i| i.side == Side::Left)
            .map(|i| i.tile)
    }

    /// Tiles whose bottom edge lies on horizontal cut `c`.
    pub fn above(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.h_cuts[c]
            .incident
            .iter()
            .filter(|i| i.side == Side::Above)
            .map(|i| i.tile)
    }

    /// Tiles whose top edge lies on horizontal cut `c`.
    pub fn below(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.h_cuts[c]
            .incident
            .iter()
            .filter(|i| i.side == Side::Below)
            .map(|i| i.tile)
    }
}

#[derive(Clone, Copy)]
struct Edge {
    pos: f64,
    start: f64,
    end: f64,
    tile: usize,
    side: Side,
}

struct BBox {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

fn bbox(sketches: &[Sketch]) -> BBox {
    let mut b = BBox {
        x0: f64::INFINITY,
        y0: f64::INFINITY,
        x1: f64::NEG_INFINITY,
        y1: f64::NEG_INFINITY,
    };
    for s in sketches {
        b.x0 = b.x0.min(s.x);
        b.y0 = b.y0.min(s.y);
        b.x1 = b.x1.max(s.x + s.w);
        b.y1 = b.y1.max(s.y + s.h);
    }
    b
}

fn check_sketch(sketches: &[Sketch], b: &BBox, tol: f64) -> Result<(), DissectionError> {
    for (i, s) in sketches.iter().enumerate() {
        let finite = [s.x, s.y, s.w, s.h].iter().all(|v| v.is_finite());
        if !finite || s.w <= tol || s.h <= tol {
            return Err(DissectionError::Sketch(format!(
                "tile at index {i} has a non-positive or non-finite size"
            )));
        }
    }
    for i in 0..sketches.len() {
        for j in i + 1..sketches.len() {
            let (a, c) = (&sketches[i], &sketches[j]);
            let ox = (a.x + a.w).min(c.x + c.w) - a.x.max(c.x);
            let oy = (a.y + a.h).min(c.y + c.h) - a.y.max(c.y);
            if ox > tol && oy > tol {
                return Err(DissectionError::Sketch(format!(
                    "tiles at index {i} and {j} overlap"
                )));
            }
        }
    }
    let area: f64 = sketches.iter().map(|s| s.w * s.h).sum();
    let big = (b.x1 - b.x0) * (b.y1 - b.y0);
    if (area - big).abs() > tol * (b.x1 - b.x0 + b.y1 - b.y0) * sketches.len() as f64 {
        return Err(DissectionError::Sketch(format!(
            "tiles cover area {area} of a {big} bounding box"
        )));
    }
    Ok(())
}

/// Groups edges into maximal segments. Collinear edges that overlap or
/// touch end to end belong to one segment. With `split_at_cross`, a point
/// where tiles on both sides have a corner (four tiles meeting) splits the
/// segment instead; vertical nodes keep such points joined.
fn merge(edges: &[Edge], tol: f64, split_at_cross: bool) -> (Vec<CutSegment>, Vec<usize>) {
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&a, &b| {
        edges[a]
            .pos
            .total_cmp(&edges[b].pos)
            .then(edges[a].start.total_cmp(&edges[b].start))
    });

    // position classes
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut last_pos = f64::NAN;
    for &e in &order {
        if classes.is_empty() || edges[e].pos - last_pos > tol {
            classes.push(Vec::new());
        }
        last_pos = edges[e].pos;
        classes.last_mut().expect("pushed above").push(e);
    }

    let mut segs: Vec<CutSegment> = Vec::new();
    let mut owner = vec![usize::MAX; edges.len()];
    for mut class in classes {
        // positions inside a class differ only by rounding
        class.sort_by(|&a, &b| edges[a].start.total_cmp(&edges[b].start));
        let pos = edges[class[0]].pos;
        let corner_at = |p: f64, side_a: bool| {
            class.iter().any(|&o| {
                let side = matches!(edges[o].side, Side::Left | Side::Above);
                side == side_a && (edges[o].end - p).abs() <= tol
            })
        };
        let mut cur: Option<CutSegment> = None;
        for &e in &class {
            let edge = edges[e];
            let joins = match &cur {
                None => false,
                Some(s) if edge.start < s.end - tol => true,
                Some(s) if edge.start <= s.end + tol => {
                    !(split_at_cross && corner_at(edge.start, true) && corner_at(edge.start, false))
                }
                Some(_) => false,
            };
            if !joins {
                if let Some(done) = cur.take() {
                    segs.push(done);
                }
                cur = Some(CutSegment {
                    pos,
                    start: edge.start,
                    end: edge.end,
                    incident: Vec::new(),
                });
            }
            let s = cur.as_mut().expect("segment open");
            s.end = s.end.max(edge.end);
            s.incident.push(Incidence {
                tile: edge.tile,
                side: edge.side,
            });
            owner[e] = segs.len();
        }
        if let Some(done) = cur {
            segs.push(done);
        }
    }
    for s in &mut segs {
        s.incident.sort_by_key(|i| (i.tile, i.side as u8));
    }
    (segs, owner)
}

fn boundary(
    segs: &[CutSegment],
    pos: f64,
    lo: f64,
    hi: f64,
    tol: f64,
    what: &str,
) -> Result<usize, DissectionError> {
    let hits: Vec<usize> = (0..segs.len())
        .filter(|&i| (segs[i].pos - pos).abs() <= tol)
        .collect();
    match hits.as_slice() {
        [i] if segs[*i].start <= lo + tol && segs[*i].end >= hi - tol => Ok(*i),
        _ => Err(DissectionError::Sketch(format!(
            "{what} boundary is not a single covered segment"
        ))),
    }
}

/// Extracts vertical nodes and horizontal cuts from the sketch coordinates.
pub fn extract_cuts<K>(d: &Dissection<K>) -> Result<CutStructure, DissectionError> {
    if d.tiles.is_empty() {
        return Err(DissectionError::Empty);
    }
    let sketches: Vec<Sketch> = d.tiles.iter().map(|t| t.sketch).collect();
    let b = bbox(&sketches);
    let tol = SKETCH_TOL * (b.x1 - b.x0).max(b.y1 - b.y0);
    check_sketch(&sketches, &b, tol)?;

    let mut vert = Vec::with_capacity(2 * sketches.len());
    let mut horiz = Vec::with_capacity(2 * sketches.len());
    for (i, s) in sketches.iter().enumerate() {
        vert.push(Edge {
            pos: s.x,
            start: s.y,
            end: s.y + s.h,
            tile: i,
            side: Side::Right,
        });
        vert.push(Edge {
            pos: s.x + s.w,
            start: s.y,
            end: s.y + s.h,
            tile: i,
            side: Side::Left,
        });
        horiz.push(Edge {
            pos: s.y,
            start: s.x,
            end: s.x + s.w,
            tile: i,
            side: Side::Above,
        });
        horiz.push(Edge {
            pos: s.y + s.h,
            start: s.x,
            end: s.x + s.w,
            tile: i,
            side: Side::Below,
        });
    }
    let (v_nodes, v_owner) = merge(&vert, tol, false);
    let (h_cuts, h_owner) = merge(&horiz, tol, true);

    let n = sketches.len();
    let mut tile_nodes = vec![(0, 0); n];
    let mut tile_cuts = vec![(0, 0); n];
    for i in 0..n {
        tile_nodes[i] = (v_owner[2 * i], v_owner[2 * i + 1]);
        tile_cuts[i] = (h_owner[2 * i], h_owner[2 * i + 1]);
    }

    let left_boundary = boundary(&v_nodes, b.x0, b.y0, b.y1, tol, "left")?;
    let right_boundary = boundary(&v_nodes, b.x1, b.y0, b.y1, tol, "right")?;
    let bottom_boundary = boundary(&h_cuts, b.y0, b.x0, b.x1, tol, "bottom")?;
    let top_boundary = boundary(&h_cuts, b.y1, b.x0, b.x1, tol, "top")?;

    // Every interior segment must have tiles on both sides, otherwise the
    // sketch has a gap the area test was too coarse to see.
    for (k, s) in v_nodes.iter().enumerate() {
        if k == left_boundary || k == right_boundary {
            continue;
        }
        let l = s.incident.iter().any(|i| i.side == Side::Left);
        let r = s.incident.iter().any(|i| i.side == Side::Right);
        if !(l && r) {
            return Err(DissectionError::Sketch(format!(
                "vertical segment at x = {} borders tiles on one side only",
                s.pos
            )));
        }
    }
    for (k, s) in h_cuts.iter().enumerate() {
        if k == bottom_boundary || k == top_boundary {
            continue;
        }
        let a = s.incident.iter().any(|i| i.side == Side::Above);
        let below = s.incident.iter().any(|i| i.side == Side::Below);
        if !(a && below) {
            return Err(DissectionError::Sketch(format!(
                "horizontal segment at y = {} borders tiles on one side only",
                s.pos
            )));
        }
    }

    Ok(CutStructure {
        v_nodes,
        h_cuts,
        left_boundary,
        right_boundary,
        bottom_boundary,
        top_boundary,
        tile_nodes,
        tile_cuts,
    })
}
