//! Plain-text netlists.
//!
//! ```text
//! # comment
//! N mid                 (optional node declaration)
//! R r1 plus mid 3/2     (resistor id, end a, end b, value)
//! V plus minus 1        (exactly one battery: plus, minus, voltage)
//! ```
//!
//! Values use the exact scalar syntax; a value may contain spaces, e.g.
//! `3/2 + 1/2*sqrt(3)`. In symbolic mode the token `t` (optionally with a
//! rational factor, `2/3*t`) denotes the indeterminate.

use std::fmt;

use crate::arith::{
    parse_quad, parse_rational, ArithError, Field, ParsedScalar, QuadExt, QuadField, RatFunc,
    Rational,
};

use super::{CircuitError, Netlist};

enum Line<'a> {
    Node(&'a str),
    Resistor(&'a str, &'a str, &'a str, String),
    Battery(&'a str, &'a str, String),
}

fn lex(text: &str) -> Result<Vec<(usize, Line<'_>)>, CircuitError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let err = |reason: &str| CircuitError::Parse {
            line,
            reason: reason.to_string(),
        };
        let parsed = match toks[0] {
            "N" if toks.len() == 2 => Line::Node(toks[1]),
            "N" => return Err(err("expected `N <name>`")),
            "R" if toks.len() >= 5 => {
                Line::Resistor(toks[1], toks[2], toks[3], toks[4..].join(" "))
            }
            "R" => return Err(err("expected `R <id> <a> <b> <value>`")),
            "V" if toks.len() >= 4 => Line::Battery(toks[1], toks[2], toks[3..].join(" ")),
            "V" => return Err(err("expected `V <plus> <minus> <voltage>`")),
            other => return Err(err(&format!("unknown record `{other}`"))),
        };
        out.push((line, parsed));
    }
    Ok(out)
}

fn build<K: Field>(
    lines: &[(usize, Line<'_>)],
    parse: impl Fn(&str) -> Result<K, ArithError>,
) -> Result<Netlist<K>, CircuitError> {
    let mut net = Netlist::new();
    for (line, l) in lines {
        let at = |e: CircuitError| match e {
            CircuitError::Arith(a) => CircuitError::Parse {
                line: *line,
                reason: a.to_string(),
            },
            other => other,
        };
        match l {
            Line::Node(n) => {
                net.node(n);
            }
            Line::Resistor(id, a, b, v) => {
                let v = parse(v).map_err(|e| at(e.into()))?;
                net.add_resistor(id, a, b, v)?;
            }
            Line::Battery(p, m, v) => {
                let v = parse(v).map_err(|e| at(e.into()))?;
                net.set_battery(p, m, v)?;
            }
        }
    }
    if net.battery().is_none() {
        return Err(CircuitError::NoBattery);
    }
    Ok(net)
}

fn parse_symbolic(s: &str) -> Result<RatFunc, ArithError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(coef) = compact.strip_suffix('t') {
        let c = match coef {
            "" => Rational::one(),
            "-" => -Rational::one(),
            _ => parse_rational(
                coef.strip_suffix('*')
                    .ok_or_else(|| ArithError::parse(s, "expected `c*t`"))?,
            )?,
        };
        return Ok(RatFunc::t() * &RatFunc::from_rational(c));
    }
    Ok(RatFunc::from_rational(parse_rational(&compact)?))
}

/// A netlist over whichever field its values live in.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyNetlist {
    Rational(Netlist<Rational>),
    Quadratic(QuadField, Netlist<QuadExt>),
    Symbolic(Netlist<RatFunc>),
}

impl AnyNetlist {
    /// Reads a netlist. Without `symbolic`, the field is ℚ unless some
    /// value mentions a square root, in which case all values are read in
    /// that quadratic field.
    pub fn parse(text: &str, symbolic: bool) -> Result<Self, CircuitError> {
        let lines = lex(text)?;
        if symbolic {
            return Ok(AnyNetlist::Symbolic(build(&lines, parse_symbolic)?));
        }
        let mut radicand: Option<u64> = None;
        for (line, l) in &lines {
            let v = match l {
                Line::Resistor(_, _, _, v) | Line::Battery(_, _, v) => v,
                Line::Node(_) => continue,
            };
            let p: ParsedScalar = parse_quad(v).map_err(|e| CircuitError::Parse {
                line: *line,
                reason: e.to_string(),
            })?;
            match (radicand, p.d) {
                (Some(r), Some(d)) if r != d => {
                    return Err(CircuitError::Parse {
                        line: *line,
                        reason: ArithError::MixedRadicand(r, d).to_string(),
                    })
                }
                (None, Some(d)) => radicand = Some(d),
                _ => {}
            }
        }
        match radicand {
            None => Ok(AnyNetlist::Rational(build(&lines, parse_rational)?)),
            Some(d) => {
                let field = QuadField::new(d)?;
                let net = build(&lines, |s| parse_quad(s)?.into_field(Some(field)))?;
                Ok(AnyNetlist::Quadratic(field, net))
            }
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyNetlist::Rational(n) => n.to_string(),
            AnyNetlist::Quadratic(_, n) => n.to_string(),
            AnyNetlist::Symbolic(n) => n.to_string(),
        }
    }
}

impl<K: Field> fmt::Display for Netlist<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut used = vec![false; self.nodes().len()];
        for r in self.resistors() {
            used[r.a] = true;
            used[r.b] = true;
        }
        if let Some(b) = self.battery() {
            used[b.plus] = true;
            used[b.minus] = true;
        }
        for (n, name) in self.nodes().iter().enumerate() {
            if !used[n] {
                writeln!(f, "N {name}")?;
            }
        }
        for r in self.resistors() {
            writeln!(
                f,
                "R {} {} {} {}",
                r.id,
                self.nodes()[r.a],
                self.nodes()[r.b],
                r.value
            )?;
        }
        if let Some(b) = self.battery() {
            writeln!(
                f,
                "V {} {} {}",
                self.nodes()[b.plus],
                self.nodes()[b.minus],
                b.voltage
            )?;
        }
        Ok(())
    }
}
