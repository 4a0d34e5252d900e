//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use squaring::circuit::Netlist;
use squaring::{Field, Rational};

pub fn small_positive(rng: &mut impl Rng) -> Rational {
    Rational::frac(rng.gen_range(1..=12), rng.gen_range(1..=6))
}

/// Connected multigraph on at most `max_nodes` nodes with at most
/// `max_resistors` resistors of positive rational value; the battery joins
/// two distinct nodes.
pub fn random_netlist(
    rng: &mut impl Rng,
    max_nodes: usize,
    max_resistors: usize,
) -> Netlist<Rational> {
    let n = rng.gen_range(2..=max_nodes);
    let mut net = Netlist::new();
    let mut k = 0;
    // random spanning tree first, so the graph is connected
    for v in 1..n {
        let u = rng.gen_range(0..v);
        k += 1;
        net.add_resistor(
            &format!("r{k}"),
            &format!("n{u}"),
            &format!("n{v}"),
            small_positive(rng),
        )
        .unwrap();
    }
    let extra = rng.gen_range(0..=max_resistors.saturating_sub(n - 1));
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n);
        if a == b {
            b = (a + 1) % n;
        }
        k += 1;
        net.add_resistor(
            &format!("r{k}"),
            &format!("n{a}"),
            &format!("n{b}"),
            small_positive(rng),
        )
        .unwrap();
    }
    let mut ends: Vec<usize> = (0..n).collect();
    ends.shuffle(rng);
    let voltage = Rational::frac(
        rng.gen_range(1..=9) * if rng.gen() { 1 } else { -1 },
        rng.gen_range(1..=4),
    );
    net.set_battery(&format!("n{}", ends[0]), &format!("n{}", ends[1]), voltage)
        .unwrap();
    net
}

/// Series-parallel construction tree.
#[derive(Debug, Clone)]
pub enum Sp {
    Leaf(Rational),
    Series(Box<Sp>, Box<Sp>),
    Parallel(Box<Sp>, Box<Sp>),
}

impl Sp {
    pub fn random(rng: &mut impl Rng, depth: u32) -> Sp {
        if depth == 0 || rng.gen_bool(0.3) {
            return Sp::Leaf(small_positive(rng));
        }
        let l = Box::new(Sp::random(rng, depth - 1));
        let r = Box::new(Sp::random(rng, depth - 1));
        if rng.gen() {
            Sp::Series(l, r)
        } else {
            Sp::Parallel(l, r)
        }
    }

    /// Closed-form resistance: sums in series, reciprocal sums in parallel.
    pub fn value(&self) -> Rational {
        match self {
            Sp::Leaf(r) => r.clone(),
            Sp::Series(a, b) => a.value() + &b.value(),
            Sp::Parallel(a, b) => {
                let (x, y) = (a.value(), b.value());
                (x.clone() * &y).checked_div(&(x + &y)).unwrap()
            }
        }
    }

    /// Two-terminal network between `plus` and `minus`, driven by a 1 V
    /// battery.
    pub fn netlist(&self) -> Netlist<Rational> {
        let mut net = Netlist::new();
        let mut counter = 0;
        self.place(&mut net, "plus", "minus", &mut counter);
        net.set_battery("plus", "minus", Rational::one()).unwrap();
        net
    }

    fn place(&self, net: &mut Netlist<Rational>, a: &str, b: &str, counter: &mut usize) {
        match self {
            Sp::Leaf(r) => {
                *counter += 1;
                net.add_resistor(&format!("s{counter}"), a, b, r.clone())
                    .unwrap();
            }
            Sp::Series(x, y) => {
                *counter += 1;
                let mid = format!("m{counter}");
                x.place(net, a, &mid, counter);
                y.place(net, &mid, b, counter);
            }
            Sp::Parallel(x, y) => {
                x.place(net, a, b, counter);
                y.place(net, a, b, counter);
            }
        }
    }
}

/// Guillotine tiling of the unit square with `leaves` tiles. Cut positions
/// are generic floats, so no two cuts line up by accident; aspects are
/// random positive rationals unrelated to the sketch, which only fixes the
/// combinatorics.
pub fn random_guillotine(
    rng: &mut impl Rng,
    leaves: usize,
) -> squaring::dissection::Dissection<Rational> {
    use squaring::dissection::{Dissection, Sketch, Tile};
    let mut boxes = vec![(0.0f64, 0.0f64, 1.0f64, 1.0f64)];
    while boxes.len() < leaves {
        let i = rng.gen_range(0..boxes.len());
        let (x, y, w, h) = boxes.swap_remove(i);
        let f = rng.gen_range(0.2..0.8);
        if rng.gen() {
            boxes.push((x, y, w * f, h));
            boxes.push((x + w * f, y, w * (1.0 - f), h));
        } else {
            boxes.push((x, y, w, h * f));
            boxes.push((x, y + h * f, w, h * (1.0 - f)));
        }
    }
    let tiles = boxes
        .into_iter()
        .enumerate()
        .map(|(k, (x, y, w, h))| {
            Tile::new(k as u32 + 1, Sketch::new(x, y, w, h), small_positive(rng))
        })
        .collect();
    Dissection::new(tiles).unwrap()
}

/// Real parts of the roots of `p` from the eigenvalues of its companion
/// matrix, in floating point.
pub fn oracle_real_parts(p: &squaring::algcheck::IntPoly) -> Vec<f64> {
    use num_traits::ToPrimitive;
    let c: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
    let n = c.len() - 1;
    let lead = c[n];
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            -c[n - 1 - j] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues().iter().map(|z| z.re).collect()
}

/// `√(p/q)` as an element of ℚ(√d) with `d` squarefree (or a rational
/// when `p/q` is a square).
pub fn sqrt_rational(x: &Rational) -> Option<squaring::QuadExt> {
    use num_traits::ToPrimitive;
    use squaring::{QuadExt, QuadField};
    if !x.is_positive() {
        return None;
    }
    let (p, q) = (x.numer().to_u64()?, x.denom().to_u64()?);
    let mut m = p.checked_mul(q)?;
    // m = s²·d
    let (mut s, mut d, mut f) = (1u64, 1u64, 2u64);
    while f * f <= m {
        while m % (f * f) == 0 {
            m /= f * f;
            s *= f;
        }
        if m % f == 0 {
            m /= f;
            d *= f;
        }
        f += 1;
    }
    d *= m;
    let coef = Rational::frac(s as i64, q as i64);
    Some(if d == 1 {
        QuadExt::rational(coef)
    } else {
        QuadField::new(d).ok()?.elem(Rational::zero(), coef)
    })
}
