//! Reference tilings used by tests, benches and the command-line examples.

use crate::arith::{Field, QuadExt, QuadField, Rational};
use crate::dissection::{Dissection, Sketch, Tile};

fn build<K: Field>(tiles: Vec<(u32, [f64; 4], K)>) -> Dissection<K> {
    Dissection::new(
        tiles
            .into_iter()
            .map(|(id, [x, y, w, h], aspect)| Tile::new(id, Sketch::new(x, y, w, h), aspect))
            .collect(),
    )
    .expect("fixture ids are unique")
}

/// Nine unequal squares in a rectangle of sides 33 and 32 (units of 1/32),
/// drawn with the longer side horizontal. Square `k` has side `s_k/32`
/// with `s = (1, 10, 9, 8, 7, 4, 18, 14, 15)`.
pub fn shelf() -> Dissection<Rational> {
    // (id, column, row, side) with the long side horizontal
    let squares: [(u32, f64, f64, f64); 9] = [
        (1, 8.0, 22.0, 1.0),
        (2, 9.0, 22.0, 10.0),
        (3, 0.0, 23.0, 9.0),
        (4, 0.0, 15.0, 8.0),
        (5, 8.0, 15.0, 7.0),
        (6, 15.0, 18.0, 4.0),
        (7, 15.0, 0.0, 18.0),
        (8, 19.0, 18.0, 14.0),
        (9, 0.0, 0.0, 15.0),
    ];
    build(
        squares
            .iter()
            .map(|&(id, x, y, s)| (id, [x, y, s, s], Rational::one()))
            .collect(),
    )
}

/// Two tiles side by side: a series pair.
pub fn side_by_side(r1: Rational, r2: Rational) -> Dissection<Rational> {
    build(vec![
        (1, [0.0, 0.0, 1.0, 1.0], r1),
        (2, [1.0, 0.0, 1.0, 1.0], r2),
    ])
}

/// Two tiles stacked: a parallel pair.
pub fn stacked(r1: Rational, r2: Rational) -> Dissection<Rational> {
    build(vec![
        (1, [0.0, 0.0, 1.0, 1.0], r1),
        (2, [0.0, 1.0, 1.0, 1.0], r2),
    ])
}

/// Five tiles around a central point in pinwheel fashion: three squares
/// and two 3:1 bars. No pair of tiles forms a series or parallel block.
pub fn pinwheel() -> Dissection<Rational> {
    let one = Rational::one;
    let three = || Rational::from(3);
    build(vec![
        (1, [-2.0, 3.0, 2.0, 2.0], one()),
        (2, [0.0, 3.0, 1.0, 1.0], one()),
        (3, [1.0, 2.0, 2.0, 2.0], one()),
        (4, [0.0, 4.0, 3.0, 1.0], three()),
        (5, [-2.0, 2.0, 3.0, 1.0], three()),
    ])
}

/// `(3 + √3)/2`, the aspect ratio used by [`two_ratio_square`].
pub fn two_ratio_r() -> QuadExt {
    QuadField::new(3)
        .expect("3 is squarefree")
        .elem(Rational::frac(3, 2), Rational::frac(1, 2))
}

/// A square cut into three tiles of aspect `1/R` along the bottom and two
/// of aspect `R` on top, with `R = (3 + √3)/2`.
pub fn two_ratio_square() -> Dissection<QuadExt> {
    let r = two_ratio_r();
    let r_inv = r.inv().expect("R is nonzero");
    build(vec![
        (1, [-2.0, 0.0, 2.0, 2.0], r_inv.clone()),
        (2, [0.0, 0.0, 2.0, 2.0], r_inv.clone()),
        (3, [2.0, 0.0, 2.0, 2.0], r_inv),
        (4, [-2.0, 2.0, 3.0, 2.0], r.clone()),
        (5, [1.0, 2.0, 3.0, 2.0], r),
    ])
}

/// `cols × rows` unit squares.
pub fn grid(cols: u32, rows: u32) -> Dissection<Rational> {
    let mut tiles = Vec::new();
    for j in 0..rows {
        for i in 0..cols {
            tiles.push((
                j * cols + i + 1,
                [i as f64, j as f64, 1.0, 1.0],
                Rational::one(),
            ));
        }
    }
    build(tiles)
}

/// One square tile.
pub fn single_square() -> Dissection<Rational> {
    grid(1, 1)
}

/// Two 2:1 bricks stacked into a unit square.
pub fn brick_pair() -> Dissection<Rational> {
    build(vec![
        (1, [0.0, 0.0, 2.0, 1.0], Rational::from(2)),
        (2, [0.0, 1.0, 2.0, 1.0], Rational::from(2)),
    ])
}
