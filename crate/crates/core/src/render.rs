//! Dot-grid pictures of planar sets.
//!
//! Members of the base set are drawn as filled dots, members of the overlay
//! that are not in the base as open dots. The visible window runs from the
//! meet of `0` and both lower bounds to the join of both conductors plus 2.
//! The SVG uses a unit of [`SVG_UNIT`] pixels, dot radius [`SVG_RADIUS`] and
//! a margin of [`SVG_MARGIN`] pixels.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::{Point, Window};
use crate::set::TruncatedSet;

pub const SVG_UNIT: i64 = 32;
pub const SVG_RADIUS: i64 = 6;
pub const SVG_MARGIN: i64 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Marker {
    Filled,
    Open,
    Empty,
}

/// The marker grid: `rows[y][x]` with `y` and `x` offsets from the window's
/// lower corner.
pub struct Picture {
    pub window: Window,
    pub rows: Vec<Vec<Marker>>,
}

impl Picture {
    /// Points carrying marker `m`, in lexicographic order.
    pub fn points(&self, m: Marker) -> Vec<Point> {
        let lo = self.window.lo().coords();
        self.window
            .points()
            .filter(|p| {
                let c = p.coords();
                self.rows[(c[1] - lo[1]) as usize][(c[0] - lo[0]) as usize] == m
            })
            .collect()
    }
}

pub fn picture(base: &TruncatedSet, overlay: Option<&TruncatedSet>) -> Result<Picture> {
    if base.dim() != 2 {
        return Err(Error::RenderDimension(base.dim()));
    }
    if let Some(o) = overlay {
        base.check_dim(o.dim())?;
    }
    let mut lo = base.lower().meet_unchecked(&Point::zero(2));
    let mut hi = base.conductor().clone();
    if let Some(o) = overlay {
        lo = lo.meet_unchecked(o.lower());
        hi = hi.join(o.conductor());
    }
    let window = Window::new(lo, hi.offset(2)?)?;
    let (x0, y0) = (window.lo().coords()[0], window.lo().coords()[1]);
    let (x1, y1) = (window.hi().coords()[0], window.hi().coords()[1]);
    let rows = (y0..=y1)
        .map(|y| {
            (x0..=x1)
                .map(|x| {
                    let p = Point::from([x, y]);
                    if base.contains(&p) {
                        Marker::Filled
                    } else if overlay.is_some_and(|o| o.contains(&p)) {
                        Marker::Open
                    } else {
                        Marker::Empty
                    }
                })
                .collect()
        })
        .collect();
    Ok(Picture { window, rows })
}

/// Overlay points drawn open, in lexicographic order.
pub fn open_markers(base: &TruncatedSet, overlay: &TruncatedSet) -> Result<Vec<Point>> {
    Ok(picture(base, Some(overlay))?.points(Marker::Open))
}

pub fn ascii(base: &TruncatedSet, overlay: Option<&TruncatedSet>) -> Result<String> {
    let pic = picture(base, overlay)?;
    let (x0, y0) = (pic.window.lo().coords()[0], pic.window.lo().coords()[1]);
    let label = |v: i64| v.to_string().len();
    let width = label(y0).max(label(pic.window.hi().coords()[1]));
    let cell = label(x0).max(label(pic.window.hi().coords()[0]));
    let mut out = String::new();
    for (dy, row) in pic.rows.iter().enumerate().rev() {
        write!(out, "{:>width$} |", y0 + dy as i64).unwrap();
        for m in row {
            let c = match m {
                Marker::Filled => '*',
                Marker::Open => 'o',
                Marker::Empty => '.',
            };
            write!(out, " {c:>cell$}").unwrap();
        }
        out.push('\n');
    }
    let ncols = pic.rows[0].len();
    writeln!(out, "{:>width$} +{}", "", "-".repeat(ncols * (cell + 1))).unwrap();
    write!(out, "{:>width$}  ", "").unwrap();
    for dx in 0..ncols {
        write!(out, " {:>cell$}", x0 + dx as i64).unwrap();
    }
    out.push('\n');
    Ok(out)
}

pub fn svg(base: &TruncatedSet, overlay: Option<&TruncatedSet>) -> Result<String> {
    let pic = picture(base, overlay)?;
    let (x0, y0) = (pic.window.lo().coords()[0], pic.window.lo().coords()[1]);
    let nx = pic.rows[0].len() as i64;
    let ny = pic.rows.len() as i64;
    let width = 2 * SVG_MARGIN + (nx - 1) * SVG_UNIT;
    let height = 2 * SVG_MARGIN + (ny - 1) * SVG_UNIT;
    let px = |dx: i64| SVG_MARGIN + dx * SVG_UNIT;
    let py = |dy: i64| SVG_MARGIN + (ny - 1 - dy) * SVG_UNIT;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    )
    .unwrap();
    for dx in 0..nx {
        writeln!(
            out,
            r##"<line x1="{x}" y1="{a}" x2="{x}" y2="{b}" stroke="#bbbbbb" stroke-width="1"/>"##,
            x = px(dx),
            a = py(0),
            b = py(ny - 1)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{}</text>"#,
            px(dx),
            py(0) + 20,
            x0 + dx
        )
        .unwrap();
    }
    for dy in 0..ny {
        writeln!(
            out,
            r##"<line x1="{a}" y1="{y}" x2="{b}" y2="{y}" stroke="#bbbbbb" stroke-width="1"/>"##,
            y = py(dy),
            a = px(0),
            b = px(nx - 1)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="end">{}</text>"#,
            px(0) - 10,
            py(dy) + 4,
            y0 + dy
        )
        .unwrap();
    }
    for (dy, row) in pic.rows.iter().enumerate() {
        for (dx, m) in row.iter().enumerate() {
            let fill = match m {
                Marker::Filled => "black",
                Marker::Open => "white",
                Marker::Empty => continue,
            };
            writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{SVG_RADIUS}" fill="{fill}" stroke="black" stroke-width="1.5"/>"#,
                px(dx as i64),
                py(dy as i64)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
