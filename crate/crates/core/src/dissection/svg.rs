use std::fmt::Write;

use crate::arith::Field;

use super::{DissectionError, SizedDissection};

const CANVAS: f64 = 480.0;
const MARGIN: f64 = 10.0;

/// Decimal with 12 significant digits, trailing zeros dropped.
fn dec(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let digits = 11 - v.abs().log10().floor() as i32;
    let s = format!("{:.*}", digits.max(0) as usize, v);
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn f<K: Field>(v: &K) -> Result<f64, DissectionError> {
    v.to_f64()
        .ok_or_else(|| DissectionError::Format(format!("value {v} has no decimal approximation")))
}

/// Draws the tiling with the longer side scaled to a fixed canvas. The
/// y axis is flipped so the picture has the usual orientation.
pub fn render_svg<K: Field>(d: &SizedDissection<K>) -> Result<String, DissectionError> {
    let bw = f(&d.big_w)?;
    let bh = f(&d.big_h)?;
    if !(bw > 0.0 && bh > 0.0) {
        return Err(DissectionError::MissingBig);
    }
    let scale = CANVAS / bw.max(bh);
    let (w, h) = (bw * scale + 2.0 * MARGIN, bh * scale + 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        dec(w),
        dec(h),
        dec(w),
        dec(h)
    );
    let _ = writeln!(
        out,
        r#"  <rect x="{m}" y="{m}" width="{}" height="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        dec(bw * scale),
        dec(bh * scale),
        m = dec(MARGIN)
    );
    for t in &d.tiles {
        let (x, y) = (f(&t.rect.x)?, f(&t.rect.y)?);
        let (tw, th) = (f(&t.rect.w)?, f(&t.rect.h)?);
        let px = MARGIN + x * scale;
        let py = MARGIN + (bh - y - th) * scale;
        let _ = writeln!(
            out,
            r##"  <rect id="tile-{}" x="{}" y="{}" width="{}" height="{}" fill="#f4f4f4" stroke="black" stroke-width="1"/>"##,
            t.id,
            dec(px),
            dec(py),
            dec(tw * scale),
            dec(th * scale)
        );
        let font = (tw.min(th) * scale * 0.4).clamp(4.0, 24.0);
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="{}" text-anchor="middle" dominant-baseline="central">{}</text>"#,
            dec(px + tw * scale / 2.0),
            dec(py + th * scale / 2.0),
            dec(font),
            t.id
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
