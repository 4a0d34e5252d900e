//! JSON dissection files.

use serde::{Deserialize, Serialize};

use crate::arith::{parse_quad, parse_rational, ArithError, Field, QuadExt, QuadField, Rational};

use super::{Dissection, DissectionError, Rect, Sketch, Tile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Quadratic { d: u64 },
}

#[derive(Serialize, Deserialize)]
struct BigDoc {
    #[serde(default)]
    w: Option<String>,
    #[serde(default)]
    h: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct TileDoc {
    id: u32,
    sketch: [f64; 4],
    aspect: String,
    #[serde(default)]
    rect: Option<[String; 4]>,
}

#[derive(Serialize, Deserialize)]
struct DissectionDoc {
    field: FieldKind,
    #[serde(default)]
    big: Option<BigDoc>,
    tiles: Vec<TileDoc>,
}

/// A dissection over whichever field its file declares.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyDissection {
    Rational(Dissection<Rational>),
    Quadratic(QuadField, Dissection<QuadExt>),
}

impl From<Dissection<Rational>> for AnyDissection {
    fn from(d: Dissection<Rational>) -> Self {
        AnyDissection::Rational(d)
    }
}

fn convert<K: Field>(
    doc: DissectionDoc,
    parse: impl Fn(&str) -> Result<K, ArithError>,
) -> Result<Dissection<K>, DissectionError> {
    let opt = |s: &Option<String>| s.as_deref().map(&parse).transpose();
    let (big_w, big_h) = match &doc.big {
        Some(b) => (opt(&b.w)?, opt(&b.h)?),
        None => (None, None),
    };
    let tiles = doc
        .tiles
        .iter()
        .map(|t| {
            let [x, y, w, h] = t.sketch;
            let rect = match &t.rect {
                Some([x, y, w, h]) => Some(Rect {
                    x: parse(x)?,
                    y: parse(y)?,
                    w: parse(w)?,
                    h: parse(h)?,
                }),
                None => None,
            };
            Ok(Tile {
                id: t.id,
                sketch: Sketch::new(x, y, w, h),
                aspect: parse(&t.aspect)?,
                rect,
            })
        })
        .collect::<Result<Vec<_>, DissectionError>>()?;
    let d = Dissection {
        big_w,
        big_h,
        tiles,
    };
    d.check_ids()?;
    Ok(d)
}

fn to_doc<K: Field>(field: FieldKind, d: &Dissection<K>) -> DissectionDoc {
    let s = |v: &K| v.to_string();
    let big = (d.big_w.is_some() || d.big_h.is_some()).then(|| BigDoc {
        w: d.big_w.as_ref().map(s),
        h: d.big_h.as_ref().map(s),
    });
    DissectionDoc {
        field,
        big,
        tiles: d
            .tiles
            .iter()
            .map(|t| TileDoc {
                id: t.id,
                sketch: [t.sketch.x, t.sketch.y, t.sketch.w, t.sketch.h],
                aspect: s(&t.aspect),
                rect: t
                    .rect
                    .as_ref()
                    .map(|r| [s(&r.x), s(&r.y), s(&r.w), s(&r.h)]),
            })
            .collect(),
    }
}

impl AnyDissection {
    pub fn from_json(text: &str) -> Result<Self, DissectionError> {
        let doc: DissectionDoc =
            serde_json::from_str(text).map_err(|e| DissectionError::Format(e.to_string()))?;
        match doc.field {
            FieldKind::Rational => Ok(AnyDissection::Rational(convert(doc, parse_rational)?)),
            FieldKind::Quadratic { d } => {
                let field = QuadField::new(d)?;
                let parse = |s: &str| parse_quad(s)?.into_field(Some(field));
                Ok(AnyDissection::Quadratic(field, convert(doc, parse)?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let doc = match self {
            AnyDissection::Rational(d) => to_doc(FieldKind::Rational, d),
            AnyDissection::Quadratic(f, d) => to_doc(FieldKind::Quadratic { d: f.d() }, d),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn field_kind(&self) -> FieldKind {
        match self {
            AnyDissection::Rational(_) => FieldKind::Rational,
            AnyDissection::Quadratic(f, _) => FieldKind::Quadratic { d: f.d() },
        }
    }

    pub fn tile_count(&self) -> usize {
        match self {
            AnyDissection::Rational(d) => d.tiles.len(),
            AnyDissection::Quadratic(_, d) => d.tiles.len(),
        }
    }
}
