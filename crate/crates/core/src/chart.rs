//! Dimension charts over a rectangular window, rendered as text grids, JSON or CSV.
//!
//! Degree charts put `a` on the horizontal axis and `p` (the coefficient of σ) on the vertical
//! axis, top row largest. Weight-plane charts put `b` horizontal and `q` vertical.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grading::{classify_weight, MotDegree, RO2Degree, WeightRegion};
use crate::ring::{basis_at, RingId};

/// Fixed CSV header for degree charts.
pub const CSV_HEADER: [&str; 7] = ["ring", "a", "p", "b", "q", "dim", "basis"];

/// The JSON schema for [`ChartCell`] lists, shipped with the crate.
pub const CHART_SCHEMA: &str = include_str!("../schema/chart.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rect {
    pub x_min: i32,
    pub x_max: i32,
    pub y_min: i32,
    pub y_max: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("window is inverted on the {axis} axis ({min} > {max})")]
pub struct InvertedWindow {
    pub axis: &'static str,
    pub min: i32,
    pub max: i32,
}

impl Rect {
    pub fn new(x_min: i32, x_max: i32, y_min: i32, y_max: i32) -> Result<Rect, InvertedWindow> {
        if x_min > x_max {
            return Err(InvertedWindow {
                axis: "horizontal",
                min: x_min,
                max: x_max,
            });
        }
        if y_min > y_max {
            return Err(InvertedWindow {
                axis: "vertical",
                min: y_min,
                max: y_max,
            });
        }
        Ok(Rect {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartCell {
    pub ring: RingId,
    pub a: i32,
    pub p: i32,
    pub b: i32,
    pub q: i32,
    pub dim: usize,
    pub basis: Vec<String>,
}

impl ChartCell {
    pub fn degree(&self) -> MotDegree {
        MotDegree::from_ints(self.a, self.p, self.b, self.q)
    }

    pub fn at(ring: RingId, d: MotDegree) -> ChartCell {
        let basis: Vec<String> = basis_at(ring, d).iter().map(|e| e.canonical()).collect();
        ChartCell {
            ring,
            a: d.deg.a,
            p: d.deg.p,
            b: d.wt.a,
            q: d.wt.p,
            dim: basis.len(),
            basis,
        }
    }
}

/// All cells of `ring` at weight `wt` over `rect` (a horizontal, p vertical), ordered by
/// (b, q, a, p).
pub fn degree_chart(ring: RingId, wt: RO2Degree, rect: Rect) -> Vec<ChartCell> {
    let mut out = Vec::new();
    for a in rect.x_min..=rect.x_max {
        for p in rect.y_min..=rect.y_max {
            out.push(ChartCell::at(ring, MotDegree::new(RO2Degree::new(a, p), wt)));
        }
    }
    out
}

/// Region of each weight over `rect` (b horizontal, q vertical), ordered by (b, q).
pub fn weight_plane(rect: Rect) -> Vec<PlaneCell> {
    let mut out = Vec::new();
    for b in rect.x_min..=rect.x_max {
        for q in rect.y_min..=rect.y_max {
            out.push(PlaneCell {
                b,
                q,
                region: classify_weight(b, q),
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneCell {
    pub b: i32,
    pub q: i32,
    pub region: WeightRegion,
}

fn grid(
    title: &str,
    axes: (&str, &str),
    rect: Rect,
    mut cell: impl FnMut(i32, i32) -> String,
) -> String {
    let labels: Vec<Vec<String>> = (rect.y_min..=rect.y_max)
        .rev()
        .map(|y| (rect.x_min..=rect.x_max).map(|x| cell(x, y)).collect())
        .collect();
    let width = labels
        .iter()
        .flatten()
        .map(|s| s.chars().count())
        .chain((rect.x_min..=rect.x_max).map(|x| x.to_string().len()))
        .max()
        .unwrap_or(1)
        + 1;
    let margin = (rect.y_min..=rect.y_max)
        .map(|y| y.to_string().len())
        .chain([axes.1.chars().count()])
        .max()
        .unwrap_or(1);

    let mut out = String::new();
    writeln!(out, "{title}").unwrap();
    writeln!(out, "{:>margin$}", axes.1).unwrap();
    for (row, y) in labels.iter().zip((rect.y_min..=rect.y_max).rev()) {
        write!(out, "{y:>margin$} |").unwrap();
        for s in row {
            write!(out, "{s:>width$}").unwrap();
        }
        out.push('\n');
    }
    let columns = (rect.x_max - rect.x_min + 1) as usize;
    writeln!(out, "{:>margin$} +{}", "", "-".repeat(columns * width)).unwrap();
    write!(out, "{:>margin$}  ", "").unwrap();
    for x in rect.x_min..=rect.x_max {
        write!(out, "{x:>width$}").unwrap();
    }
    writeln!(out, "  {}", axes.0).unwrap();
    out
}

fn dim_glyph(dim: usize) -> String {
    match dim {
        0 => ".".into(),
        1..=9 => dim.to_string(),
        _ => "+".into(),
    }
}

/// Text grid of dimensions; `.` marks zero and `+` marks dimensions above 9.
pub fn render_ascii(ring: RingId, wt: RO2Degree, rect: Rect) -> String {
    let title = if ring.is_topological() {
        format!("{ring}")
    } else {
        format!("{ring} at weight {wt}")
    };
    grid(&title, ("a", "p"), rect, |a, p| {
        dim_glyph(basis_at(ring, MotDegree::new(RO2Degree::new(a, p), wt)).len())
    })
}

/// Text grid of weight regions: M, B_i, E or 0.
pub fn render_plane_ascii(rect: Rect) -> String {
    grid("weight regions", ("b", "q"), rect, |b, q| {
        classify_weight(b, q).label()
    })
}

pub fn to_json<T: Serialize>(cells: &[T]) -> String {
    serde_json::to_string_pretty(cells).expect("chart cells serialize")
}

pub fn to_csv(cells: &[ChartCell]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for c in cells {
        w.write_record([
            c.ring.name(),
            c.a.to_string(),
            c.p.to_string(),
            c.b.to_string(),
            c.q.to_string(),
            c.dim.to_string(),
            c.basis.join(";"),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn plane_to_csv(cells: &[PlaneCell]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["b", "q", "region"]).expect("in-memory write");
    for c in cells {
        w.write_record([c.b.to_string(), c.q.to_string(), c.region.label()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
