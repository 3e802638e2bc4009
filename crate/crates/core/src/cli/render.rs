//! SVG half-plane diagrams for games whose row player has three strategies.
//!
//! Each column `d` of the 2-row difference matrix is drawn as an arrow from
//! the origin, and the half plane `{v : vᵀd ≥ 0}` it induces is shaded. This
//! is the complement form of the half spaces, so the shading leaves a gap
//! exactly when the half spaces fail to cover the plane, and the gap lies in
//! direction `-w` for the cover witness `w`.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::indifference::{difference_matrix, half_space_cover};
use crate::model::{int, GameMatrix, Rational};
use crate::{Error, Result};

const SIZE: i64 = 600;
const HALF: i64 = SIZE / 2;
/// Pixels from the centre to the largest power of two bounding the arrows.
const REACH: i64 = 240;
const COLORS: [&str; 3] = ["red", "blue", "violet"];
const FILL_OPACITY: &str = "0.18";

/// Exact decimal when the denominator has no prime factors besides 2 and 5,
/// otherwise rounded half away from zero to six places.
pub fn decimal(r: &Rational) -> String {
    let mut d = r.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut places = [0u32; 2];
    for (k, p) in [&two, &five].into_iter().enumerate() {
        while (&d % p).is_zero() {
            d /= p;
            places[k] += 1;
        }
    }
    let (places, scaled) = if d.is_one() {
        let places = places[0].max(places[1]);
        let scaled = r * Rational::from_integer(BigInt::from(10).pow(places));
        (places, scaled.to_integer())
    } else {
        let scaled = r * Rational::from_integer(BigInt::from(10).pow(6));
        (6, scaled.round().to_integer())
    };
    let digits = scaled.abs().to_string();
    let sign = if scaled.is_negative() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let p = places as usize;
    let padded = format!("{digits:0>width$}", width = p + 1);
    let (whole, frac) = padded.split_at(padded.len() - p);
    format!("{sign}{whole}.{frac}")
}

type Point = (Rational, Rational);

/// Keeps the part of a convex polygon where `v·d ≥ 0`.
fn clip(poly: &[Point], d: &Point) -> Vec<Point> {
    let f = |p: &Point| &p.0 * &d.0 + &p.1 * &d.1;
    let mut out = Vec::new();
    for (i, p) in poly.iter().enumerate() {
        let q = &poly[(i + 1) % poly.len()];
        let (fp, fq) = (f(p), f(q));
        if !fp.is_negative() {
            out.push(p.clone());
        }
        if (fp.is_positive() && fq.is_negative()) || (fp.is_negative() && fq.is_positive()) {
            let t = &fp / (&fp - &fq);
            out.push((&p.0 + (&q.0 - &p.0) * &t, &p.1 + (&q.1 - &p.1) * &t));
        }
    }
    out
}

/// Smallest `2^k` (any integer `k`) at or above `m`; `1` for `m = 0`.
fn bound(m: &Rational) -> Rational {
    let mut b = Rational::one();
    if m.is_zero() {
        return b;
    }
    while &b < m {
        b *= int(2);
    }
    while &(&b / int(2)) >= m {
        b /= int(2);
    }
    b
}

struct Frame {
    scale: Rational,
}

impl Frame {
    fn x(&self, x: &Rational) -> String {
        decimal(&(int(HALF) + &self.scale * x))
    }

    fn y(&self, y: &Rational) -> String {
        decimal(&(int(HALF) - &self.scale * y))
    }

    fn point(&self, p: &Point) -> String {
        format!("{},{}", self.x(&p.0), self.y(&p.1))
    }
}

/// Renders the diagram for `a`, which must have exactly three rows.
pub fn svg(a: &GameMatrix) -> Result<String> {
    if a.rows() != 3 {
        return Err(Error::WrongShape {
            expected: "3-row",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let d = difference_matrix(a)?;
    let arrows: Vec<Point> = (0..d.cols())
        .map(|j| {
            let c = d.column(j);
            (c[0].clone(), c[1].clone())
        })
        .collect();
    let largest = arrows
        .iter()
        .flat_map(|(x, y)| [x.abs(), y.abs()])
        .max()
        .unwrap_or_else(Rational::zero);
    let b = bound(&largest);
    // world square is [-5b/4, 5b/4]², mapped onto the full canvas
    let r = &b * Rational::new(5.into(), 4.into());
    let frame = Frame {
        scale: int(REACH) / &b,
    };
    let square: Vec<Point> = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
        .iter()
        .map(|&(sx, sy)| (&r * int(sx), &r * int(sy)))
        .collect();

    let cover = half_space_cover(&d);
    let status = match &cover.witness {
        None => "covered: true".to_string(),
        Some(w) => format!(
            "covered: false; unshaded direction ({}, {})",
            -&w[0], -&w[1]
        ),
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        "<title>Payoff difference columns and their half planes</title>"
    );
    let _ = writeln!(
        s,
        "<desc>{status}; half planes drawn as v.d &gt;= 0; axis half-width {r}</desc>"
    );
    let _ = writeln!(s, "<defs>");
    for color in COLORS {
        let _ = writeln!(
            s,
            r#"<marker id="head-{color}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="{color}"/></marker>"#
        );
    }
    let _ = writeln!(s, "</defs>");
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );

    let _ = writeln!(s, r#"<g id="half-planes" stroke="none">"#);
    for (j, d) in arrows.iter().enumerate() {
        let poly = clip(&square, d);
        if poly.len() < 3 {
            continue;
        }
        let points: Vec<String> = poly.iter().map(|p| frame.point(p)).collect();
        let _ = writeln!(
            s,
            r#"<polygon data-column="{}" fill="{}" fill-opacity="{FILL_OPACITY}" points="{}"/>"#,
            j + 1,
            COLORS[j % COLORS.len()],
            points.join(" ")
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="axes" stroke="gray" stroke-width="1">"#);
    let _ = writeln!(s, r#"<line x1="0" y1="{HALF}" x2="{SIZE}" y2="{HALF}"/>"#);
    let _ = writeln!(s, r#"<line x1="{HALF}" y1="0" x2="{HALF}" y2="{SIZE}"/>"#);
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="columns" stroke-width="2">"#);
    for (j, p) in arrows.iter().enumerate() {
        let color = COLORS[j % COLORS.len()];
        let _ = writeln!(
            s,
            r#"<line data-column="{}" data-x="{}" data-y="{}" x1="{HALF}" y1="{HALF}" x2="{}" y2="{}" stroke="{color}" marker-end="url(#head-{color})"/>"#,
            j + 1,
            p.0,
            p.1,
            frame.x(&p.0),
            frame.y(&p.1)
        );
        let label = (
            &p.0 * Rational::new(11.into(), 10.into()),
            &p.1 * Rational::new(11.into(), 10.into()),
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" fill="{color}" font-family="serif" font-size="16">d{}</text>"#,
            frame.x(&label.0),
            frame.y(&label.1),
            j + 1
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}
