//! Log-log FOM versus test-mass scatter, hand-written SVG.
//!
//! Axis ranges are fixed so the output does not depend on which points are
//! present. Every plotted symbol carries `class="marker ..."` and appears
//! exactly once in the companion data file.

use std::fmt::Write as _;

use super::{sig3, ReportError};
use crate::bounds::{fom_threshold, BoundAnchor};
use crate::catalog::{select_for_figure, Catalog, Category, Mode};
use crate::fom::FomResult;

/// Test-mass axis, kg.
pub const MASS_RANGE: (f64, f64) = (1e-27, 1e3);
/// FOM axis, m²/s³: the reference table's span padded by one decade.
pub const FOM_RANGE: (f64, f64) = (1e-12, 1e15);

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 620.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 230.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 70.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    Circle,
    /// Differential measurement: coloured edge, open face.
    CircleOpen,
}

impl Marker {
    pub fn as_str(self) -> &'static str {
        match self {
            Marker::Circle => "circle",
            Marker::CircleOpen => "circle-open",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigurePoint {
    pub name: String,
    pub category: Category,
    /// kg
    pub mass: f64,
    /// m²/s³
    pub fom: f64,
    pub marker: Marker,
    /// (mass, thermal FOM), present only when the thermal marker applies.
    pub thermal_diamond: Option<(f64, f64)>,
    pub in_figure: bool,
}

/// One point per record; `in_figure` marks the `k` best of each category.
pub fn figure_points(cat: &Catalog, results: &[FomResult], k: usize) -> Vec<FigurePoint> {
    let selected: Vec<&str> = select_for_figure(cat, results, k).into_iter().map(|(r, _)| r.name.as_str()).collect();
    cat.records()
        .iter()
        .zip(results)
        .map(|(rec, res)| FigurePoint {
            name: rec.name.clone(),
            category: rec.category,
            mass: rec.mass,
            fom: res.fom,
            marker: if rec.mode == Mode::Differential { Marker::CircleOpen } else { Marker::Circle },
            thermal_diamond: match (res.show_thermal_marker, res.thermal_fom) {
                (true, Some(t)) => Some((rec.mass, t)),
                _ => None,
            },
            in_figure: selected.contains(&rec.name.as_str()),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureOutput {
    pub svg: String,
    /// `name category mass fom marker` per line; spaces in names become `_`.
    pub data: String,
}

fn palette(c: Category) -> &'static str {
    match c {
        Category::Nanotube => "#1f77b4",
        Category::Nanowire => "#ff7f0e",
        Category::Nanobeam => "#2ca02c",
        Category::Membrane => "#d62728",
        Category::Mesoscopic => "#9467bd",
        Category::Massive => "#8c564b",
        Category::TrappedIon => "#e377c2",
        Category::OpticalLevitation => "#7f7f7f",
        Category::MagneticLevitation => "#bcbd22",
        Category::AtomInterferometry => "#17becf",
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(ch),
        }
    }
    out
}

fn data_name(name: &str) -> String {
    name.split_whitespace().collect::<Vec<_>>().join("_")
}

struct Axes {
    plot_w: f64,
    plot_h: f64,
}

impl Axes {
    fn new() -> Self {
        Axes { plot_w: WIDTH - LEFT - RIGHT, plot_h: HEIGHT - TOP - BOTTOM }
    }

    fn x(&self, mass: f64) -> f64 {
        let (lo, hi) = (MASS_RANGE.0.log10(), MASS_RANGE.1.log10());
        LEFT + (mass.log10() - lo) / (hi - lo) * self.plot_w
    }

    fn y(&self, fom: f64) -> f64 {
        let (lo, hi) = (FOM_RANGE.0.log10(), FOM_RANGE.1.log10());
        TOP + (hi - fom.log10()) / (hi - lo) * self.plot_h
    }

    fn bottom(&self) -> f64 {
        TOP + self.plot_h
    }
}

/// Renders the `in_figure` points with the lower-bound bands of `anchors`.
pub fn emit_figure(points: &[FigurePoint], anchors: &[BoundAnchor]) -> Result<FigureOutput, ReportError> {
    let shown: Vec<&FigurePoint> = points.iter().filter(|p| p.in_figure).collect();
    if shown.is_empty() {
        return Err(ReportError::EmptyInput);
    }
    let ax = Axes::new();
    let mut svg = String::new();
    let mut data = String::new();

    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        svg,
        r#"<defs><clipPath id="plot"><rect x="{LEFT}" y="{TOP}" width="{:.2}" height="{:.2}"/></clipPath></defs>"#,
        ax.plot_w, ax.plot_h
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);

    // Lower-bound bands, widest first.
    let mut bands = Vec::new();
    for a in anchors {
        bands.push((a.model, fom_threshold(a.model, a.lower_bound, a)?));
    }
    bands.sort_by(|a, b| b.1.total_cmp(&a.1));
    let fills = ["#c6dbef", "#9ecae1", "#6baed6"];
    let _ = writeln!(svg, r#"<g clip-path="url(#plot)">"#);
    for (i, (model, threshold)) in bands.iter().enumerate() {
        let top = ax.y(*threshold).max(TOP);
        let _ = writeln!(
            svg,
            r#"<rect class="band" data-model="{}" data-fom-threshold="{}" x="{LEFT}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}" fill-opacity="0.6"/>"#,
            model.key(),
            sig3(*threshold),
            top,
            ax.plot_w,
            (ax.bottom() - top).max(0.0),
            fills[i % fills.len()]
        );
    }
    let _ = writeln!(svg, "</g>");

    // Decade grid and tick labels.
    let _ = writeln!(svg, r##"<g stroke="#e0e0e0" stroke-width="0.5">"##);
    for e in MASS_RANGE.0.log10() as i32..=MASS_RANGE.1.log10() as i32 {
        let x = ax.x(10f64.powi(e));
        let _ = writeln!(svg, r#"<line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{:.2}"/>"#, ax.bottom());
    }
    for e in FOM_RANGE.0.log10() as i32..=FOM_RANGE.1.log10() as i32 {
        let y = ax.y(10f64.powi(e));
        let _ = writeln!(svg, r#"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}"/>"#, LEFT + ax.plot_w);
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r#"<rect x="{LEFT}" y="{TOP}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        ax.plot_w, ax.plot_h
    );
    for e in (MASS_RANGE.0.log10() as i32..=MASS_RANGE.1.log10() as i32).step_by(3) {
        let x = ax.x(10f64.powi(e));
        let _ = writeln!(svg, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">1e{e}</text>"#, ax.bottom() + 18.0);
    }
    for e in (FOM_RANGE.0.log10() as i32..=FOM_RANGE.1.log10() as i32).step_by(3) {
        let y = ax.y(10f64.powi(e));
        let _ = writeln!(svg, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">1e{e}</text>"#, LEFT - 8.0, y + 4.0);
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">test mass m [kg]</text>"#,
        LEFT + ax.plot_w / 2.0,
        HEIGHT - 20.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">FOM [m^2 s^-3]</text>"#,
        TOP + ax.plot_h / 2.0,
        TOP + ax.plot_h / 2.0
    );

    // Points.
    let _ = writeln!(svg, r#"<g clip-path="url(#plot)">"#);
    for p in &shown {
        let color = palette(p.category);
        let (x, y) = (ax.x(p.mass), ax.y(p.fom));
        let (fill, stroke, width) = match p.marker {
            Marker::Circle => (color, "black", 0.8),
            Marker::CircleOpen => ("white", color, 2.5),
        };
        let _ = writeln!(
            svg,
            r#"<circle class="marker {}" data-name="{}" cx="{x:.2}" cy="{y:.2}" r="5" fill="{fill}" stroke="{stroke}" stroke-width="{width}"/>"#,
            p.marker.as_str(),
            escape(&p.name)
        );
        let _ = writeln!(
            data,
            "{} {} {} {} {}",
            data_name(&p.name),
            p.category,
            sig3(p.mass),
            sig3(p.fom),
            p.marker.as_str()
        );

        if let Some((m, t)) = p.thermal_diamond {
            let (x, y) = (ax.x(m), ax.y(t));
            let _ = writeln!(
                svg,
                r#"<polygon class="marker diamond" data-name="{}" points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="{color}" stroke="black" stroke-width="0.8"/>"#,
                escape(&p.name),
                x,
                y - 6.0,
                x + 6.0,
                y,
                x,
                y + 6.0,
                x - 6.0,
                y
            );
            let _ = writeln!(data, "{} {} {} {} diamond", data_name(&p.name), p.category, sig3(m), sig3(t));
        }
    }
    let _ = writeln!(svg, "</g>");

    // Legend: every category, in taxonomy order.
    let lx = LEFT + ax.plot_w + 20.0;
    let mut ly = TOP + 10.0;
    for c in Category::ALL {
        let _ = writeln!(
            svg,
            r#"<circle class="legend-swatch" cx="{lx:.2}" cy="{ly:.2}" r="5" fill="{}" stroke="black" stroke-width="0.8"/><text x="{:.2}" y="{:.2}">{c}</text>"#,
            palette(c),
            lx + 12.0,
            ly + 4.0
        );
        ly += 20.0;
    }
    ly += 10.0;
    let _ = writeln!(
        svg,
        r##"<circle class="legend-swatch" cx="{lx:.2}" cy="{ly:.2}" r="5" fill="white" stroke="#555" stroke-width="2.5"/><text x="{:.2}" y="{:.2}">differential</text>"##,
        lx + 12.0,
        ly + 4.0
    );
    ly += 20.0;
    let _ = writeln!(
        svg,
        r##"<polygon class="legend-swatch" points="{lx:.2},{:.2} {:.2},{ly:.2} {lx:.2},{:.2} {:.2},{ly:.2}" fill="#555"/><text x="{:.2}" y="{:.2}">thermal floor</text>"##,
        ly - 6.0,
        lx + 6.0,
        ly + 6.0,
        lx - 6.0,
        lx + 12.0,
        ly + 4.0
    );
    for (i, (model, _)) in bands.iter().enumerate() {
        ly += 20.0;
        let _ = writeln!(
            svg,
            r#"<rect class="legend-swatch" x="{:.2}" y="{:.2}" width="10" height="10" fill="{}" fill-opacity="0.6"/><text x="{:.2}" y="{:.2}">{} lower bound</text>"#,
            lx - 5.0,
            ly - 5.0,
            fills[i % fills.len()],
            lx + 12.0,
            ly + 4.0,
            model
        );
    }
    let _ = writeln!(svg, "</svg>");

    Ok(FigureOutput { svg, data })
}
