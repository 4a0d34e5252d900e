//! Single-battery resistor networks.
//!
//! Currents are signed against each resistor's declared orientation
//! `a → b`. The battery drives current out of its `plus` terminal, so a
//! healthy network has positive battery current.

mod compose;
mod kirchhoff;
mod text;

use std::collections::HashMap;

use crate::arith::{ArithError, Field};

pub use compose::{
    instantiate, parallel, replace_resistor_with_network, series, symbolic_resistance,
};
pub use kirchhoff::{
    kirchhoff_system, potentials_along, resistance, solve_currents, solve_flow, solve_flow_with,
    FlowSolution, SpanningTree,
};
pub use text::AnyNetlist;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CircuitError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("netlist has no battery")]
    NoBattery,
    #[error("netlist has more than one battery")]
    MultipleBatteries,
    #[error("battery terminals coincide")]
    ShortedBattery,
    #[error("duplicate resistor id {0}")]
    DuplicateResistor(String),
    #[error("no resistor with id {0}")]
    UnknownResistor(String),
    #[error("network is not connected (node {0} unreachable)")]
    Disconnected(String),
    #[error("resistor {0} has a nonpositive resistance")]
    NonPositiveResistance(String),
    #[error("battery voltage is zero")]
    ZeroVoltage,
    #[error("no current flows through the battery")]
    NoCurrent,
    #[error("Kirchhoff system has no unique solution")]
    NotUnique,
    #[error("replacement network has resistance {got}, expected {expected}")]
    ResistanceMismatch { expected: String, got: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Resistor<K> {
    pub id: String,
    pub a: usize,
    pub b: usize,
    pub value: K,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Battery<K> {
    pub plus: usize,
    pub minus: usize,
    pub voltage: K,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Netlist<K> {
    nodes: Vec<String>,
    index: HashMap<String, usize>,
    resistors: Vec<Resistor<K>>,
    battery: Option<Battery<K>>,
}

impl<K: Field> Default for Netlist<K> {
    fn default() -> Self {
        Netlist {
            nodes: Vec::new(),
            index: HashMap::new(),
            resistors: Vec::new(),
            battery: None,
        }
    }
}

impl<K: Field> Netlist<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of the named node, created on first use.
    pub fn node(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        self.nodes.push(name.to_string());
        self.index.insert(name.to_string(), self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn add_resistor(
        &mut self,
        id: &str,
        a: &str,
        b: &str,
        value: K,
    ) -> Result<(), CircuitError> {
        if self.resistors.iter().any(|r| r.id == id) {
            return Err(CircuitError::DuplicateResistor(id.to_string()));
        }
        let (a, b) = (self.node(a), self.node(b));
        self.resistors.push(Resistor {
            id: id.to_string(),
            a,
            b,
            value,
        });
        Ok(())
    }

    pub fn set_battery(&mut self, plus: &str, minus: &str, voltage: K) -> Result<(), CircuitError> {
        if self.battery.is_some() {
            return Err(CircuitError::MultipleBatteries);
        }
        let (plus, minus) = (self.node(plus), self.node(minus));
        self.battery = Some(Battery {
            plus,
            minus,
            voltage,
        });
        Ok(())
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn resistors(&self) -> &[Resistor<K>] {
        &self.resistors
    }

    pub fn resistor(&self, id: &str) -> Option<&Resistor<K>> {
        self.resistors.iter().find(|r| r.id == id)
    }

    pub fn battery(&self) -> Option<&Battery<K>> {
        self.battery.as_ref()
    }

    /// Same network with a different battery voltage.
    pub fn with_voltage(&self, voltage: K) -> Result<Self, CircuitError> {
        let mut out = self.clone();
        out.battery.as_mut().ok_or(CircuitError::NoBattery)?.voltage = voltage;
        Ok(out)
    }

    /// Checks the structural invariants: one battery across distinct
    /// terminals, positive resistances, and a connected graph.
    pub fn validate(&self) -> Result<&Battery<K>, CircuitError> {
        let bat = self.battery.as_ref().ok_or(CircuitError::NoBattery)?;
        if bat.plus == bat.minus {
            return Err(CircuitError::ShortedBattery);
        }
        for r in &self.resistors {
            let positive = match r.value.sign() {
                Some(s) => s.is_gt(),
                None => !r.value.is_zero(),
            };
            if !positive {
                return Err(CircuitError::NonPositiveResistance(r.id.clone()));
            }
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![bat.plus];
        seen[bat.plus] = true;
        let adj = self.adjacency();
        while let Some(n) = stack.pop() {
            for &(_, m) in &adj[n] {
                if !seen[m] {
                    seen[m] = true;
                    stack.push(m);
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(CircuitError::Disconnected(self.nodes[i].clone()));
        }
        Ok(bat)
    }

    /// Edge list: resistors in order, then the battery (oriented
    /// `minus → plus`, the direction its current flows inside).
    pub(crate) fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self.resistors.iter().map(|r| (r.a, r.b)).collect();
        if let Some(b) = &self.battery {
            e.push((b.minus, b.plus));
        }
        e
    }

    /// Per node, `(edge, neighbour)` pairs with the battery listed first.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let edges = self.edges();
        let mut adj = vec![Vec::new(); self.nodes.len()];
        let m = self.resistors.len();
        let order = (m..edges.len()).chain(0..m);
        for e in order {
            let (a, b) = edges[e];
            adj[a].push((e, b));
            if a != b {
                adj[b].push((e, a));
            }
        }
        adj
    }

    pub(crate) fn map_values<L: Field>(
        &self,
        f: impl Fn(&K) -> Result<L, CircuitError>,
    ) -> Result<Netlist<L>, CircuitError> {
        Ok(Netlist {
            nodes: self.nodes.clone(),
            index: self.index.clone(),
            resistors: self
                .resistors
                .iter()
                .map(|r| {
                    Ok(Resistor {
                        id: r.id.clone(),
                        a: r.a,
                        b: r.b,
                        value: f(&r.value)?,
                    })
                })
                .collect::<Result<_, CircuitError>>()?,
            battery: self
                .battery
                .as_ref()
                .map(|b| -> Result<_, CircuitError> {
                    Ok(Battery {
                        plus: b.plus,
                        minus: b.minus,
                        voltage: f(&b.voltage)?,
                    })
                })
                .transpose()?,
        })
    }
}
