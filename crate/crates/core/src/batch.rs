//! Independent problems solved side by side.
//!
//! With the `parallel` feature each batch is spread over the rayon pool when
//! the strategy is [`Elimination::Parallel`]; otherwise items are handled in
//! order on the calling thread. Results keep the input order either way.

use crate::algcheck::{positive_real_part_all_roots, AlgError, IntPoly};
use crate::arith::{Field, OrderedField};
use crate::circuit::{solve_flow_with, CircuitError, Netlist};
use crate::correspondence::{certify_equivalence, CorrespondenceError, EquivalenceReport};
use crate::dissection::{solve_sizes, Dissection, DissectionError, Sizing};
use crate::linsolve::Elimination;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

fn map_all<T, R, F>(items: &[T], strategy: Elimination, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match strategy {
        Elimination::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Elimination::Parallel => items.par_iter().map(f).collect(),
    }
}

pub fn solve_sizes_batch<K: OrderedField>(
    ds: &[Dissection<K>],
    strategy: Elimination,
) -> Vec<Result<Sizing<K>, DissectionError>> {
    map_all(ds, strategy, solve_sizes)
}

/// Equivalent resistance of each network. Elimination inside each network
/// is sequential so that the pool is not oversubscribed.
pub fn resistance_batch<K: Field>(
    nets: &[Netlist<K>],
    strategy: Elimination,
) -> Vec<Result<K, CircuitError>> {
    map_all(nets, strategy, |n| {
        solve_flow_with(n, Elimination::Sequential).map(|f| f.total_resistance)
    })
}

pub fn equivalence_batch<K: OrderedField>(
    ds: &[Dissection<K>],
    strategy: Elimination,
) -> Vec<Result<EquivalenceReport<K>, CorrespondenceError>> {
    map_all(ds, strategy, certify_equivalence)
}

/// Right-half-plane root test for each polynomial.
pub fn half_plane_batch(polys: &[IntPoly], strategy: Elimination) -> Vec<Result<bool, AlgError>> {
    map_all(polys, strategy, positive_real_part_all_roots)
}
