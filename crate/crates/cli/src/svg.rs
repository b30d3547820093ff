//! Deterministic schematic rendering of tangle expressions.
//!
//! The drawing shows the boundary circle with its four numbered endpoints,
//! the base strands, and one twist box per syllable of the canonical
//! alternating word of the expression's class, labeled with the signed
//! twist count. Horizontal boxes are `A` twists, vertical boxes `B` twists.
//! The output is a pure function of the input expression: integer
//! coordinates, fixed element order, no timestamps.

use std::fmt::Write;

use num_traits::Signed;

use tanglekit_core::{Base, Move, TangleExpr};

const HEIGHT: i64 = 240;
const SLOT: i64 = 70;

/// Renders the canonical form of `expr` as an SVG 1.1 document.
pub fn render_tangle(expr: &TangleExpr) -> String {
    let fraction = expr.fraction();
    let canonical = TangleExpr::from_fraction(&fraction);

    let boxes: Vec<(bool, String)> = canonical
        .moves()
        .iter()
        .map(|mv| match mv {
            Move::APower(e) => (true, signed_label(e)),
            Move::BPower(e) => (false, signed_label(e)),
            other => unreachable!("canonical form only uses A/B powers, got {other:?}"),
        })
        .collect();

    let n = boxes.len() as i64;
    let width = (n * SLOT + 60).max(HEIGHT);
    let cx = width / 2;
    let cy = HEIGHT / 2;

    let mut out = String::new();
    let _ = writeln!(out, r##"<?xml version="1.0" encoding="UTF-8"?>"##);
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{HEIGHT}" viewBox="0 0 {width} {HEIGHT}">"##
    );
    let _ = writeln!(
        out,
        "  <title>fraction {fraction}, canonical form {canonical}</title>"
    );
    let _ = writeln!(
        out,
        r##"  <circle cx="{cx}" cy="{cy}" r="99" fill="none" stroke="#888" stroke-width="2"/>"##
    );

    // Base strands: horizontal pairs for G=, vertical pairs for G||.
    let (x1, y1) = (cx + SLOT, cy - SLOT);
    let (x2, y2) = (cx + SLOT, cy + SLOT);
    let (x3, y3) = (cx - SLOT, cy + SLOT);
    let (x4, y4) = (cx - SLOT, cy - SLOT);
    match canonical.base() {
        Base::Zero => {
            let _ = writeln!(
                out,
                r##"  <line x1="{x4}" y1="{y4}" x2="{x1}" y2="{y1}" stroke="#333" stroke-width="2"/>"##
            );
            let _ = writeln!(
                out,
                r##"  <line x1="{x3}" y1="{y3}" x2="{x2}" y2="{y2}" stroke="#333" stroke-width="2"/>"##
            );
        }
        Base::Infinity => {
            let _ = writeln!(
                out,
                r##"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#333" stroke-width="2"/>"##
            );
            let _ = writeln!(
                out,
                r##"  <line x1="{x4}" y1="{y4}" x2="{x3}" y2="{y3}" stroke="#333" stroke-width="2"/>"##
            );
        }
    }

    // Numbered endpoints, 1 in the upper right going clockwise.
    for (label, x, y, dx, dy) in [
        (1, x1, y1, 14, -10),
        (2, x2, y2, 14, 18),
        (3, x3, y3, -14, 18),
        (4, x4, y4, -14, -10),
    ] {
        let _ = writeln!(out, r##"  <circle cx="{x}" cy="{y}" r="4" fill="#333"/>"##);
        let _ = writeln!(
            out,
            r##"  <text x="{}" y="{}" font-family="monospace" font-size="14" text-anchor="middle" fill="#333">{label}</text>"##,
            x + dx,
            y + dy
        );
    }

    let start = cx - n * SLOT / 2;
    for (i, (horizontal, label)) in boxes.iter().enumerate() {
        let slot_x = start + (i as i64) * SLOT;
        let (rx, ry, rw, rh) = if *horizontal {
            (slot_x + 10, cy - 15, 50, 30)
        } else {
            (slot_x + 20, cy - 25, 30, 50)
        };
        let _ = writeln!(
            out,
            r##"  <rect x="{rx}" y="{ry}" width="{rw}" height="{rh}" fill="#fff" stroke="#333" stroke-width="2"/>"##
        );
        let _ = writeln!(
            out,
            r##"  <text x="{}" y="{}" font-family="monospace" font-size="14" text-anchor="middle" fill="#333">{label}</text>"##,
            slot_x + SLOT / 2,
            cy + 5
        );
    }

    out.push_str("</svg>\n");
    out
}

fn signed_label(e: &num_bigint::BigInt) -> String {
    if e.is_positive() {
        format!("+{e}")
    } else {
        e.to_string()
    }
}
