use crate::arith::{Field, RatFunc, Rational};

use super::{resistance, CircuitError, Netlist};

fn positive<K: Field>(r: &K) -> bool {
    match r.sign() {
        Some(s) => s.is_gt(),
        None => !r.is_zero(),
    }
}

/// Resistance of two resistors in series.
pub fn series<K: Field>(r1: &K, r2: &K) -> Result<K, CircuitError> {
    for r in [r1, r2] {
        if !positive(r) {
            return Err(CircuitError::NonPositiveResistance(r.to_string()));
        }
    }
    Ok(r1.clone() + r2)
}

/// Resistance of two resistors in parallel.
pub fn parallel<K: Field>(r1: &K, r2: &K) -> Result<K, CircuitError> {
    let sum = series(r1, r2)?;
    Ok((r1.clone() * r2).checked_div(&sum)?)
}

/// Resistance as a rational function of the indeterminate appearing in
/// the resistor values. The battery voltage is ignored (taken as 1).
pub fn symbolic_resistance(net: &Netlist<RatFunc>) -> Result<RatFunc, CircuitError> {
    resistance(&net.with_voltage(RatFunc::one())?)
}

/// Substitutes `t = t0` in every resistor and in the voltage.
pub fn instantiate(
    net: &Netlist<RatFunc>,
    t0: &Rational,
) -> Result<Netlist<Rational>, CircuitError> {
    net.map_values(|v| Ok(v.eval(t0)?))
}

/// Splices `inner` in place of resistor `id` of `outer`. The inner
/// battery is removed: its plus terminal becomes the resistor's `a` end,
/// its minus terminal the `b` end. Other inner nodes and all inner
/// resistors are renamed `<id>.<name>`.
pub fn replace_resistor_with_network<K: Field>(
    outer: &Netlist<K>,
    id: &str,
    inner: &Netlist<K>,
) -> Result<Netlist<K>, CircuitError> {
    let pos = outer
        .resistors()
        .iter()
        .position(|r| r.id == id)
        .ok_or_else(|| CircuitError::UnknownResistor(id.to_string()))?;
    let replaced = &outer.resistors()[pos];
    let got = resistance(inner)?;
    if got != replaced.value {
        return Err(CircuitError::ResistanceMismatch {
            expected: replaced.value.to_string(),
            got: got.to_string(),
        });
    }
    let bat = inner.battery().ok_or(CircuitError::NoBattery)?;
    let a_name = outer.nodes()[replaced.a].clone();
    let b_name = outer.nodes()[replaced.b].clone();
    let rename = |n: usize| {
        if n == bat.plus {
            a_name.clone()
        } else if n == bat.minus {
            b_name.clone()
        } else {
            format!("{id}.{}", inner.nodes()[n])
        }
    };

    let mut out = Netlist::new();
    for n in outer.nodes() {
        out.node(n);
    }
    for (k, r) in outer.resistors().iter().enumerate() {
        if k == pos {
            for ir in inner.resistors() {
                out.add_resistor(
                    &format!("{id}.{}", ir.id),
                    &rename(ir.a),
                    &rename(ir.b),
                    ir.value.clone(),
                )?;
            }
        } else {
            out.add_resistor(
                &r.id,
                &outer.nodes()[r.a],
                &outer.nodes()[r.b],
                r.value.clone(),
            )?;
        }
    }
    if let Some(b) = outer.battery() {
        out.set_battery(
            &outer.nodes()[b.plus],
            &outer.nodes()[b.minus],
            b.voltage.clone(),
        )?;
    }
    Ok(out)
}
