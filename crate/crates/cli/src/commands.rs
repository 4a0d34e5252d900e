use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use squaring::algcheck::{lfs_condition3, AlgError, Cond3Input, IntPoly};
use squaring::arith::{parse_quad, ArithError};
use squaring::circuit::{resistance, symbolic_resistance, AnyNetlist, CircuitError};
use squaring::correspondence::{
    certify_equivalence, cf_eval, circuit_of_dissection, ladder_dissection, theorem1_certificate,
    AnyLadder, CorrespondenceError,
};
use squaring::dissection::{
    dehn_check, render_svg, solve_sizes, validate_geometric, AnyDissection, Dissection,
    DissectionError, SizedDissection, Tile,
};
use squaring::{Field, OrderedField, QuadExt, QuadField, Rational};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }
}

impl From<DissectionError> for CliError {
    fn from(e: DissectionError) -> Self {
        use DissectionError::*;
        match e {
            Inconsistent { .. } | Underdetermined(_) | Degenerate(_) | Invalid(_) => {
                CliError::Math(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CircuitError> for CliError {
    fn from(e: CircuitError) -> Self {
        match e {
            CircuitError::NotUnique | CircuitError::NoCurrent | CircuitError::ZeroVoltage => {
                CliError::Math(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CorrespondenceError> for CliError {
    fn from(e: CorrespondenceError) -> Self {
        use CorrespondenceError::*;
        match e {
            Dissection(e) => e.into(),
            Circuit(e) => e.into(),
            AspectOutsidePair { .. } | NotSquare(_) | Certificate(_) | Ladder(_) => {
                CliError::Math(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ArithError> for CliError {
    fn from(e: ArithError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<AlgError> for CliError {
    fn from(e: AlgError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// What a command has to say: text for people, JSON for scripts, and
/// whether the mathematical check passed.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_dissection(path: &Path) -> Result<AnyDissection, CliError> {
    AnyDissection::from_json(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Runs `$body` with `$d: &Dissection<K>` and `$wrap` turning a
/// `Dissection<K>` back into an `AnyDissection` of the same field.
macro_rules! with_dissection {
    ($any:expr, |$d:ident, $wrap:ident| $body:expr) => {
        match $any {
            AnyDissection::Rational(inner) => {
                let $d = &inner;
                let $wrap = |x| AnyDissection::Rational(x);
                $body
            }
            AnyDissection::Quadratic(f, inner) => {
                let $d = &inner;
                let $wrap = move |x| AnyDissection::Quadratic(f, x);
                $body
            }
        }
    };
}

pub fn validate(path: &Path) -> Result<Report, CliError> {
    let report = with_dissection!(load_dissection(path)?, |d, _w| validate_geometric(d)?);
    let issues: Vec<String> = report.issues.iter().map(ToString::to_string).collect();
    let mut text = String::from(if report.is_valid() {
        "valid"
    } else {
        "invalid"
    });
    for i in &issues {
        text.push_str(&format!("\n  {i}"));
    }
    Ok(Report {
        text,
        json: json!({ "valid": report.is_valid(), "issues": issues }),
        ok: report.is_valid(),
    })
}

fn sized_tiles_json<K: Field>(d: &SizedDissection<K>) -> Value {
    d.tiles
        .iter()
        .map(|t| {
            json!({
                "id": t.id,
                "x": t.rect.x.to_string(),
                "y": t.rect.y.to_string(),
                "w": t.rect.w.to_string(),
                "h": t.rect.h.to_string(),
            })
        })
        .collect()
}

fn solve_one<K: OrderedField>(
    d: &Dissection<K>,
    wrap: impl Fn(Dissection<K>) -> AnyDissection,
    out: Option<&Path>,
) -> Result<Report, CliError> {
    let s = solve_sizes(d)?;
    let inv = s.ratio.inv()?;
    let mut text = format!("x = {}\n1/x = {inv}", s.ratio);
    for t in &s.sized.tiles {
        text.push_str(&format!(
            "\ntile {}: {} x {} at ({}, {})",
            t.id, t.rect.w, t.rect.h, t.rect.x, t.rect.y
        ));
    }
    if let Some(out) = out {
        write(out, &wrap(s.sized.to_dissection()).to_json())?;
    }
    let json = json!({
        "x": s.ratio.to_string(),
        "inv_x": inv.to_string(),
        "tiles": sized_tiles_json(&s.sized),
    });
    Ok(Report::ok(text, json))
}

pub fn solve(path: &Path, out: Option<&Path>) -> Result<Report, CliError> {
    with_dissection!(load_dissection(path)?, |d, wrap| solve_one(d, wrap, out))
}

fn dehn_one<K: OrderedField>(d: &Dissection<K>) -> Result<Report, CliError> {
    let v = dehn_check(&SizedDissection::from_dissection(d)?)?;
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut text = format!("all squares: {}", yes(v.all_squares()));
    if !v.all_squares() {
        let ids: Vec<String> = v.non_squares.iter().map(ToString::to_string).collect();
        text.push_str(&format!(" (non-square tiles: {})", ids.join(", ")));
    }
    text.push_str(&format!(
        "\nratio = {}\nratio rational: {}\nconsistent with Dehn's theorem: {}",
        v.ratio,
        yes(v.ratio_is_rational),
        yes(v.consistent_with_theorem())
    ));
    Ok(Report {
        text,
        json: json!({
            "all_squares": v.all_squares(),
            "non_squares": v.non_squares,
            "ratio": v.ratio.to_string(),
            "ratio_is_rational": v.ratio_is_rational,
            "consistent": v.consistent_with_theorem(),
        }),
        ok: v.consistent_with_theorem(),
    })
}

pub fn dehn(path: &Path) -> Result<Report, CliError> {
    with_dissection!(load_dissection(path)?, |d, _w| dehn_one(d))
}

pub fn to_circuit(path: &Path, out: Option<&Path>) -> Result<Report, CliError> {
    let text = with_dissection!(load_dissection(path)?, |d, _w| circuit_of_dissection(d)?
        .to_string());
    let json = json!({ "netlist": text });
    match out {
        Some(out) => {
            write(out, &text)?;
            Ok(Report::ok(
                format!("netlist written to {}", out.display()),
                json,
            ))
        }
        None => Ok(Report::ok(text.trim_end().to_string(), json)),
    }
}

pub fn resistance_cmd(path: &Path, symbolic: bool) -> Result<Report, CliError> {
    let net = AnyNetlist::parse(&read(path)?, symbolic)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let value = match net {
        AnyNetlist::Rational(n) => resistance(&n)?.to_string(),
        AnyNetlist::Quadratic(_, n) => resistance(&n)?.to_string(),
        AnyNetlist::Symbolic(n) => symbolic_resistance(&n)?.to_string(),
    };
    Ok(Report::ok(value.clone(), json!({ "resistance": value })))
}

fn equiv_one<K: OrderedField>(d: &Dissection<K>) -> Result<Report, CliError> {
    let rep = certify_equivalence(d)?;
    let mut lines: Vec<String> = rep
        .rows
        .iter()
        .map(|(id, side, current)| format!("tile {id}: side {side}, current {current}"))
        .collect();
    lines.push(format!("battery current = {}", rep.battery_current));
    lines.push(format!(
        "big ratio = {}, resistance = {}",
        rep.big_ratio, rep.resistance
    ));
    if rep.holds() {
        lines.push("equivalent".into());
    } else {
        lines.extend(rep.mismatches.iter().map(|m| format!("mismatch: {m}")));
    }
    let rows: Vec<Value> = rep
        .rows
        .iter()
        .map(|(id, side, current)| json!({ "id": id, "side": side.to_string(), "current": current.to_string() }))
        .collect();
    Ok(Report {
        text: lines.join("\n"),
        json: json!({
            "rows": rows,
            "battery_current": rep.battery_current.to_string(),
            "big_ratio": rep.big_ratio.to_string(),
            "resistance": rep.resistance.to_string(),
            "equivalent": rep.holds(),
            "mismatches": rep.mismatches,
        }),
        ok: rep.holds(),
    })
}

pub fn equiv(path: &Path) -> Result<Report, CliError> {
    with_dissection!(load_dissection(path)?, |d, _w| equiv_one(d))
}

fn lift(d: &Dissection<Rational>) -> Dissection<QuadExt> {
    let l = |v: &Rational| QuadExt::rational(v.clone());
    Dissection {
        big_w: d.big_w.as_ref().map(l),
        big_h: d.big_h.as_ref().map(l),
        tiles: d
            .tiles
            .iter()
            .map(|t| Tile {
                id: t.id,
                sketch: t.sketch,
                aspect: l(&t.aspect),
                rect: None,
            })
            .collect(),
    }
}

pub fn theorem1(path: &Path, r: Option<&str>) -> Result<Report, CliError> {
    let (field, d) = match load_dissection(path)? {
        AnyDissection::Rational(d) => (None, lift(&d)),
        AnyDissection::Quadratic(f, d) => (Some(f), d),
    };
    let r = r.map(|s| parse_quad(s)?.into_field(field)).transpose()?;
    let cert = theorem1_certificate(&d, r.as_ref())?;
    let text = format!(
        "R = {}\nW(t) = {}\nF(x) = {}\nF(R) = {}",
        cert.r, cert.w, cert.f, cert.value_at_r
    );
    Ok(Report::ok(
        text,
        json!({
            "R": cert.r.to_string(),
            "W": cert.w.to_string(),
            "F": cert.f.to_string(),
            "F_at_R": cert.value_at_r.to_string(),
        }),
    ))
}

pub fn cond3(elem: Option<&str>, d: Option<u64>, poly: Option<&str>) -> Result<Report, CliError> {
    let input = match (elem, poly) {
        (Some(e), None) => {
            let field = d.map(QuadField::new).transpose()?;
            Cond3Input::Element(parse_quad(e)?.into_field(field)?)
        }
        (None, Some(p)) => Cond3Input::Poly(p.parse::<IntPoly>()?),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --elem or --poly".into(),
            ))
        }
    };
    let v = lfs_condition3(&input)?;
    if let Some(c) = &v.caveat {
        eprintln!("note: {c}");
    }
    let verdict = if v.pass { "PASS" } else { "FAIL" };
    Ok(Report {
        text: format!("{verdict}\npolynomial: {}", v.poly),
        json: json!({
            "pass": v.pass,
            "polynomial": v.poly.to_string(),
            "conclusive": v.conclusive,
            "caveat": v.caveat,
        }),
        ok: v.pass,
    })
}

fn load_ladder(path: &Path) -> Result<AnyLadder, CliError> {
    AnyLadder::from_json(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn eval_cf(path: &Path) -> Result<Report, CliError> {
    let (value, one) = match load_ladder(path)? {
        AnyLadder::Rational(s) => {
            let v = cf_eval(&s)?;
            (v.to_string(), v.is_one())
        }
        AnyLadder::Quadratic(_, s) => {
            let v = cf_eval(&s)?;
            (v.to_string(), v.is_one())
        }
    };
    Ok(Report::ok(
        format!("value = {value}"),
        json!({ "value": value, "equals_one": one }),
    ))
}

pub fn build(path: &Path, out: &Path) -> Result<Report, CliError> {
    let d = match load_ladder(path)? {
        AnyLadder::Rational(s) => AnyDissection::Rational(ladder_dissection(&s)?),
        AnyLadder::Quadratic(f, s) => AnyDissection::Quadratic(f, ladder_dissection(&s)?),
    };
    write(out, &d.to_json())?;
    let n = d.tile_count();
    Ok(Report::ok(
        format!("{n} tiles written to {}", out.display()),
        json!({ "tiles": n, "out": out.display().to_string() }),
    ))
}

fn render_one<K: OrderedField>(d: &Dissection<K>) -> Result<String, CliError> {
    let sized =
        if d.tiles.iter().all(|t| t.rect.is_some()) && d.big_w.is_some() && d.big_h.is_some() {
            SizedDissection::from_dissection(d)?
        } else {
            solve_sizes(d)?.sized
        };
    Ok(render_svg(&sized)?)
}

pub fn render(path: &Path, out: &Path) -> Result<Report, CliError> {
    let svg = with_dissection!(load_dissection(path)?, |d, _w| render_one(d)?);
    write(out, &svg)?;
    Ok(Report::ok(
        format!("drawing written to {}", out.display()),
        json!({ "out": out.display().to_string() }),
    ))
}
