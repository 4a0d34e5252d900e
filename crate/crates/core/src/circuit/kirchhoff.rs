use std::collections::VecDeque;

use crate::arith::Field;
use crate::linsolve::{gauss_jordan_with, Elimination, LinearSystem, SolveOutcome};

use super::{CircuitError, Netlist};

/// A BFS spanning tree of the network graph (battery included).
#[derive(Debug, Clone)]
pub struct SpanningTree {
    pub root: usize,
    /// `(edge, parent node)` for every node but the root.
    pub parent: Vec<Option<(usize, usize)>>,
    pub depth: Vec<usize>,
    /// Nodes in BFS order, root first.
    pub order: Vec<usize>,
}

impl SpanningTree {
    /// Tree grown from `root`, trying edges at each node in the network's
    /// default order: battery first, then resistors as declared.
    pub fn bfs<K: Field>(net: &Netlist<K>, root: usize) -> Self {
        Self::grow(net, root, net.adjacency())
    }

    /// As [`SpanningTree::bfs`] with edges tried by ascending `rank[edge]`.
    pub fn bfs_ranked<K: Field>(net: &Netlist<K>, root: usize, rank: &[usize]) -> Self {
        let mut adj = net.adjacency();
        for list in &mut adj {
            list.sort_by_key(|&(e, _)| rank[e]);
        }
        Self::grow(net, root, adj)
    }

    fn grow<K: Field>(net: &Netlist<K>, root: usize, adj: Vec<Vec<(usize, usize)>>) -> Self {
        let n = net.nodes().len();
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut order = vec![root];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(e, v) in &adj[u] {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = Some((e, u));
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        SpanningTree {
            root,
            parent,
            depth,
            order,
        }
    }

    fn is_tree_edge(&self, e: usize) -> bool {
        self.parent
            .iter()
            .any(|p| matches!(p, Some((pe, _)) if *pe == e))
    }

    /// Edges walked going from `from` to `to` along the tree, each with the
    /// node it was entered from.
    fn path(&self, from: usize, to: usize) -> Vec<(usize, usize)> {
        let (mut a, mut b) = (from, to);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                let (e, p) = self.parent[a].expect("non-root node has a parent");
                up.push((e, a));
                a = p;
            } else {
                let (e, p) = self.parent[b].expect("non-root node has a parent");
                down.push((e, p));
                b = p;
            }
        }
        down.reverse();
        up.extend(down);
        up
    }
}

/// Kirchhoff equations in the unknowns `I_<id>` (one per resistor, in
/// order) and `I` (battery current).
///
/// Current law at every node except the battery's minus terminal; voltage
/// law around the fundamental cycle of each edge outside a BFS spanning
/// tree grown from the plus terminal. The row count equals the number of
/// resistors plus one.
pub fn kirchhoff_system<K: Field>(net: &Netlist<K>) -> Result<LinearSystem<K>, CircuitError> {
    let bat = net.validate()?;
    let m = net.resistors().len();
    let edges = net.edges();
    let names = net
        .resistors()
        .iter()
        .map(|r| format!("I_{}", r.id))
        .chain(std::iter::once("I".to_string()));
    let mut sys =
        LinearSystem::new(names).map_err(|_| CircuitError::DuplicateResistor("I".into()))?;

    for n in 0..net.nodes().len() {
        if n == bat.minus {
            continue;
        }
        let mut row = vec![K::zero(); m + 1];
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                continue;
            }
            if b == n {
                row[e] = row[e].clone() + K::one();
            }
            if a == n {
                row[e] = row[e].clone() - K::one();
            }
        }
        sys.push_row(row, K::zero())
            .expect("row has one entry per unknown");
    }

    let tree = SpanningTree::bfs(net, bat.plus);
    for (e, &(a, b)) in edges.iter().enumerate() {
        if tree.is_tree_edge(e) {
            continue;
        }
        let mut walk = vec![(e, a)];
        walk.extend(tree.path(b, a));
        let mut row = vec![K::zero(); m + 1];
        let mut rhs = K::zero();
        for (edge, entered_from) in walk {
            let forward = edges[edge].0 == entered_from;
            if edge == m {
                // battery: traversed minus → plus gains U
                let u = bat.voltage.clone();
                rhs = if forward { rhs + u } else { rhs - u };
            } else {
                let r = net.resistors()[edge].value.clone();
                row[edge] = if forward {
                    row[edge].clone() + r
                } else {
                    row[edge].clone() - r
                };
            }
        }
        sys.push_row(row, rhs)
            .expect("row has one entry per unknown");
    }
    Ok(sys)
}

/// Resistor currents (in resistor order) and the battery current. Works
/// for any voltage, including zero.
pub fn solve_currents<K: Field>(
    net: &Netlist<K>,
    strategy: Elimination,
) -> Result<(Vec<K>, K), CircuitError> {
    let sys = kirchhoff_system(net)?;
    match gauss_jordan_with(&sys, strategy) {
        SolveOutcome::Unique(mut v) => {
            let i = v.pop().expect("battery current is the last unknown");
            Ok((v, i))
        }
        _ => Err(CircuitError::NotUnique),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowSolution<K> {
    /// One current per resistor, in netlist order.
    pub currents: Vec<K>,
    pub battery_current: K,
    /// One potential per node, with the plus terminal at zero.
    pub potentials: Vec<K>,
    pub total_resistance: K,
}

impl<K: Field> FlowSolution<K> {
    pub fn current_of(&self, net: &Netlist<K>, id: &str) -> Option<&K> {
        let i = net.resistors().iter().position(|r| r.id == id)?;
        self.currents.get(i)
    }
}

pub fn solve_flow<K: Field>(net: &Netlist<K>) -> Result<FlowSolution<K>, CircuitError> {
    solve_flow_with(net, Elimination::default())
}

pub fn solve_flow_with<K: Field>(
    net: &Netlist<K>,
    strategy: Elimination,
) -> Result<FlowSolution<K>, CircuitError> {
    let bat = net.validate()?;
    if bat.voltage.is_zero() {
        return Err(CircuitError::ZeroVoltage);
    }
    let (currents, battery_current) = solve_currents(net, strategy)?;
    if battery_current.is_zero() {
        return Err(CircuitError::NoCurrent);
    }
    let tree = SpanningTree::bfs(net, bat.plus);
    let potentials = potentials_along(net, &currents, &tree);
    let total_resistance = bat.voltage.checked_div(&battery_current)?;
    Ok(FlowSolution {
        currents,
        battery_current,
        potentials,
        total_resistance,
    })
}

/// Potentials obtained by summing voltages along the given tree, starting
/// from zero at its root. Across a resistor `a → b` carrying `I` the
/// potential drops by `R·I`; across the battery it rises by `U` from minus
/// to plus.
pub fn potentials_along<K: Field>(net: &Netlist<K>, currents: &[K], tree: &SpanningTree) -> Vec<K> {
    let edges = net.edges();
    let m = net.resistors().len();
    let u = net
        .battery()
        .map(|b| b.voltage.clone())
        .unwrap_or_else(K::zero);
    let mut phi = vec![K::zero(); net.nodes().len()];
    for &v in &tree.order[1..] {
        let (e, p) = tree.parent[v].expect("non-root node has a parent");
        let forward = edges[e].0 == p;
        // potential gain walking the edge in its own direction
        let gain = if e == m {
            u.clone()
        } else {
            -(net.resistors()[e].value.clone() * &currents[e])
        };
        phi[v] = if forward {
            phi[p].clone() + gain
        } else {
            phi[p].clone() - gain
        };
    }
    phi
}

/// Total resistance `U / I`.
pub fn resistance<K: Field>(net: &Netlist<K>) -> Result<K, CircuitError> {
    Ok(solve_flow(net)?.total_resistance)
}
