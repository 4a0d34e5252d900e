//! Exact Gauss–Jordan elimination over any [`Field`].
//!
//! Rows are processed in input order. Each row, after substituting the
//! pivots found so far, is solved for the first variable (in declaration
//! order) that occurred in the original row and still has a nonzero
//! coefficient; failing that, for its first nonzero variable. Rows that
//! reduce to `0 = 0` are dropped, a row that reduces to `0 = c` with
//! `c ≠ 0` makes the system inconsistent.
//!
//! With the `parallel` feature the row updates of each elimination step run
//! on the rayon pool; results are identical to the sequential path.

use std::fmt;

use crate::arith::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinsolveError {
    #[error("row has {got} coefficients but the system has {expected} variables")]
    Dimension { expected: usize, got: usize },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("duplicate variable {0:?}")]
    DuplicateVariable(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row<K> {
    pub coeffs: Vec<K>,
    pub rhs: K,
}

impl<K: Field> Row<K> {
    fn is_zero_lhs(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    /// `Σ coeffs[i]·values[i]`
    pub fn lhs_at(&self, values: &[K]) -> K {
        self.coeffs
            .iter()
            .zip(values)
            .filter(|(c, _)| !c.is_zero())
            .fold(K::zero(), |acc, (c, v)| acc + c.clone() * v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem<K> {
    variables: Vec<String>,
    rows: Vec<Row<K>>,
}

impl<K: Field> LinearSystem<K> {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
    ) -> Result<Self, LinsolveError> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(LinsolveError::DuplicateVariable(v.clone()));
            }
        }
        Ok(LinearSystem {
            variables,
            rows: Vec::new(),
        })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn rows(&self) -> &[Row<K>] {
        &self.rows
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn push_row(&mut self, coeffs: Vec<K>, rhs: K) -> Result<(), LinsolveError> {
        if coeffs.len() != self.variables.len() {
            return Err(LinsolveError::Dimension {
                expected: self.variables.len(),
                got: coeffs.len(),
            });
        }
        self.rows.push(Row { coeffs, rhs });
        Ok(())
    }

    /// Adds `Σ c·var = rhs` given by variable names; repeated names add up.
    pub fn push_named(&mut self, terms: &[(&str, K)], rhs: K) -> Result<(), LinsolveError> {
        let mut coeffs = vec![K::zero(); self.variables.len()];
        for (name, c) in terms {
            let i = self
                .var_index(name)
                .ok_or_else(|| LinsolveError::UnknownVariable(name.to_string()))?;
            coeffs[i] = coeffs[i].clone() + c;
        }
        self.push_row(coeffs, rhs)
    }

    /// Adds a row from `(variable index, coefficient)` pairs.
    pub fn push_sparse(&mut self, terms: &[(usize, K)], rhs: K) -> Result<(), LinsolveError> {
        let mut coeffs = vec![K::zero(); self.variables.len()];
        for (i, c) in terms {
            let slot = coeffs.get_mut(*i).ok_or(LinsolveError::Dimension {
                expected: self.variables.len(),
                got: i + 1,
            })?;
            *slot = slot.clone() + c;
        }
        self.push_row(coeffs, rhs)
    }

    /// True iff `values` (one per variable) satisfies every row exactly.
    pub fn is_satisfied_by(&self, values: &[K]) -> bool {
        values.len() == self.variables.len() && self.rows.iter().all(|r| r.lhs_at(values) == r.rhs)
    }

    /// Plain-text dump, one row per line.
    pub fn dump(&self) -> String {
        self.to_string()
    }
}

impl<K: Field> fmt::Display for LinearSystem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let mut first = true;
            for (c, v) in row.coeffs.iter().zip(&self.variables) {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if c.is_one() {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "({c})*{v}")?;
                }
            }
            if first {
                write!(f, "0")?;
            }
            writeln!(f, " = {}", row.rhs)?;
        }
        Ok(())
    }
}

/// `constant + Σ coeff·free_var`
#[derive(Debug, Clone, PartialEq)]
pub struct AffineExpr<K> {
    pub constant: K,
    pub terms: Vec<(usize, K)>,
}

impl<K: Field> AffineExpr<K> {
    pub fn eval(&self, values: &[K]) -> K {
        self.terms
            .iter()
            .fold(self.constant.clone(), |acc, (i, c)| {
                acc + c.clone() * &values[*i]
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome<K> {
    /// One value per variable, in declaration order.
    Unique(Vec<K>),
    /// `free` lists the never-pivoted variables; every other variable is
    /// bound to an affine expression in them.
    Parametric {
        free: Vec<usize>,
        bound: Vec<(usize, AffineExpr<K>)>,
    },
    /// `row` is the input index of the first row that reduced to
    /// `0 = reduced.rhs` with a nonzero right-hand side.
    Inconsistent { row: usize, reduced: Row<K> },
}

impl<K: Field> SolveOutcome<K> {
    pub fn unique(&self) -> Option<&[K]> {
        match self {
            SolveOutcome::Unique(v) => Some(v),
            _ => None,
        }
    }

    /// Fills in a full assignment from values of the free variables
    /// (`free_values[k]` goes to `free[k]`).
    pub fn instantiate(&self, free_values: &[K]) -> Option<Vec<K>> {
        match self {
            SolveOutcome::Unique(v) => Some(v.clone()),
            SolveOutcome::Parametric { free, bound } => {
                if free_values.len() != free.len() {
                    return None;
                }
                let n = free.len() + bound.len();
                let mut values = vec![K::zero(); n];
                for (&i, v) in free.iter().zip(free_values) {
                    values[i] = v.clone();
                }
                for (i, expr) in bound {
                    values[*i] = expr.eval(&values);
                }
                Some(values)
            }
            SolveOutcome::Inconsistent { .. } => None,
        }
    }
}

/// Execution strategy for the row updates of each elimination step.
/// The default is `Parallel` when the feature is enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Elimination {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

struct Work<K> {
    origin: usize,
    row: Row<K>,
}

/// Solves with the default strategy.
pub fn gauss_jordan<K: Field>(system: &LinearSystem<K>) -> SolveOutcome<K> {
    gauss_jordan_with(system, Elimination::default())
}

pub fn gauss_jordan_with<K: Field>(
    system: &LinearSystem<K>,
    strategy: Elimination,
) -> SolveOutcome<K> {
    let n = system.variables.len();
    let mut work: Vec<Work<K>> = system
        .rows
        .iter()
        .cloned()
        .enumerate()
        .map(|(origin, row)| Work { origin, row })
        .collect();
    // pivot_of[var] = position in `work` of the row that owns it
    let mut pivot_of: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; work.len()];

    if let Some(bad) = sweep_degenerate(&mut work, &mut used, &mut pivot_of) {
        return bad;
    }

    let mut cursor = 0;
    while cursor < work.len() {
        if used[cursor] {
            cursor += 1;
            continue;
        }
        let origin = &system.rows[work[cursor].origin].coeffs;
        let reduced = &work[cursor].row.coeffs;
        let own = (0..n).find(|&v| !origin[v].is_zero() && !reduced[v].is_zero());
        let var = own
            .or_else(|| (0..n).find(|&v| !reduced[v].is_zero()))
            .expect("degenerate rows were swept");
        let p = cursor;
        used[p] = true;
        pivot_of[var] = Some(p);
        let inv = work[p].row.coeffs[var].inv().expect("pivot is nonzero");
        normalize(&mut work[p].row, &inv);
        let pivot = work[p].row.clone();
        eliminate(&mut work, p, var, &pivot, strategy);
        if let Some(bad) = sweep_degenerate(&mut work, &mut used, &mut pivot_of) {
            return bad;
        }
        // rows are only removed, never reordered; step past the pivot we just placed
        cursor = pivot_of[var].expect("pivot survives the sweep") + 1;
    }
    let free: Vec<usize> = (0..n).filter(|&v| pivot_of[v].is_none()).collect();
    if free.is_empty() {
        let values = pivot_of
            .iter()
            .map(|p| work[p.expect("all pivoted")].row.rhs.clone())
            .collect();
        return SolveOutcome::Unique(values);
    }
    let bound = (0..n)
        .filter_map(|v| {
            let p = pivot_of[v]?;
            let row = &work[p].row;
            let terms = free
                .iter()
                .filter(|&&f| !row.coeffs[f].is_zero())
                .map(|&f| (f, -row.coeffs[f].clone()))
                .collect();
            Some((
                v,
                AffineExpr {
                    constant: row.rhs.clone(),
                    terms,
                },
            ))
        })
        .collect();
    SolveOutcome::Parametric { free, bound }
}

fn normalize<K: Field>(row: &mut Row<K>, inv: &K) {
    for c in row.coeffs.iter_mut().filter(|c| !c.is_zero()) {
        *c = c.clone() * inv;
    }
    row.rhs = row.rhs.clone() * inv;
}

fn reduce_row<K: Field>(row: &mut Row<K>, var: usize, pivot: &Row<K>) {
    let factor = row.coeffs[var].clone();
    if factor.is_zero() {
        return;
    }
    for (c, pc) in row.coeffs.iter_mut().zip(&pivot.coeffs) {
        if !pc.is_zero() {
            *c = c.clone() - factor.clone() * pc;
        }
    }
    row.rhs = row.rhs.clone() - factor * &pivot.rhs;
}

fn eliminate<K: Field>(
    work: &mut [Work<K>],
    p: usize,
    var: usize,
    pivot: &Row<K>,
    strategy: Elimination,
) {
    match strategy {
        Elimination::Sequential => {
            for (i, w) in work.iter_mut().enumerate() {
                if i != p {
                    reduce_row(&mut w.row, var, pivot);
                }
            }
        }
        #[cfg(feature = "parallel")]
        Elimination::Parallel => {
            use rayon::prelude::*;
            work.par_iter_mut()
                .enumerate()
                .filter(|(i, _)| *i != p)
                .for_each(|(_, w)| reduce_row(&mut w.row, var, pivot));
        }
    }
}

/// Drops unused `0 = 0` rows and reports the first `0 = c ≠ 0` row.
fn sweep_degenerate<K: Field>(
    work: &mut Vec<Work<K>>,
    used: &mut Vec<bool>,
    pivot_of: &mut [Option<usize>],
) -> Option<SolveOutcome<K>> {
    let mut keep = Vec::with_capacity(work.len());
    for (i, w) in work.iter().enumerate() {
        let degenerate = !used[i] && w.row.is_zero_lhs();
        if degenerate && !w.row.rhs.is_zero() {
            return Some(SolveOutcome::Inconsistent {
                row: w.origin,
                reduced: w.row.clone(),
            });
        }
        keep.push(!degenerate);
    }
    if keep.iter().all(|&k| k) {
        return None;
    }
    let mut remap = vec![usize::MAX; work.len()];
    let mut next = 0;
    for (i, &k) in keep.iter().enumerate() {
        if k {
            remap[i] = next;
            next += 1;
        }
    }
    let mut idx = 0;
    work.retain(|_| {
        idx += 1;
        keep[idx - 1]
    });
    let mut idx = 0;
    used.retain(|_| {
        idx += 1;
        keep[idx - 1]
    });
    for p in pivot_of.iter_mut().flatten() {
        *p = remap[*p];
    }
    None
}

/// Checks an outcome against the original rows. Unique assignments are
/// substituted directly; parametric ones are substituted symbolically and
/// must hold identically in the free variables.
pub fn substitute_and_verify<K: Field>(
    system: &LinearSystem<K>,
    outcome: &SolveOutcome<K>,
) -> bool {
    match outcome {
        SolveOutcome::Unique(values) => system.is_satisfied_by(values),
        SolveOutcome::Parametric { free, bound } => {
            let n = system.variables.len();
            if free.len() + bound.len() != n {
                return false;
            }
            // each variable as an affine form over all variables (free ones map to themselves)
            let mut forms: Vec<AffineExpr<K>> = (0..n)
                .map(|i| AffineExpr {
                    constant: K::zero(),
                    terms: vec![(i, K::one())],
                })
                .collect();
            for (i, e) in bound {
                if free.contains(i) {
                    return false;
                }
                forms[*i] = e.clone();
            }
            system.rows.iter().all(|row| {
                let mut constant = K::zero();
                let mut coeffs = vec![K::zero(); n];
                for (c, form) in row.coeffs.iter().zip(&forms) {
                    if c.is_zero() {
                        continue;
                    }
                    constant = constant + c.clone() * &form.constant;
                    for (j, fc) in &form.terms {
                        coeffs[*j] = coeffs[*j].clone() + c.clone() * fc;
                    }
                }
                constant == row.rhs && coeffs.iter().all(Field::is_zero)
            })
        }
        SolveOutcome::Inconsistent { .. } => false,
    }
}
