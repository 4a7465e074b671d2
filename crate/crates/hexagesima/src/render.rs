//! Deterministic SVG renderings of the packing figures.
//!
//! Every renderer is a pure function of its [`FigureSpec`]: attribute order
//! is fixed and coordinates are written with six decimals, so identical
//! specs produce byte-identical documents.

use std::fmt::Write as _;

use crate::divisions::{self, ChordMode};
use crate::hexlattice::{self, DiscPacking, DISC_RADIUS};
use crate::sexagesimal::{abacus_layout, AbacusState, SexagesimalNumeral, ABACUS_PLACES};
use crate::{Error, Result};

/// Smallest on-canvas disc radius (px) for figures meant to show tokens.
const MIN_DISC_PX: f64 = 1.0;

/// A figure request: what to draw, with which colors, on which canvas.
#[derive(Clone, Debug)]
pub struct FigureSpec {
    pub kind: FigureKind,
    pub palette: Vec<String>,
    pub width: u32,
    pub height: u32,
}

/// The figures of the packing story.
#[derive(Clone, Debug)]
pub enum FigureKind {
    /// The packing up to `max_rank`, wedges colored.
    Orbits { max_rank: u32 },
    /// Six 60-slot places displaying a numeral with tokens.
    Abacus { numeral: SexagesimalNumeral },
    /// Equal division by the hexagon-and-bisection chain.
    DivisionEqual { parts: u32 },
    /// Unequal division by equal chord subdivision.
    DivisionUnequal { n_per_wedge: u32 },
    /// Two triangles joining alternating first-orbit centers.
    Star,
    /// Rescaled packings approaching the limit hexagon, side by side.
    Limit { ranks: Vec<u32> },
    /// Six 60-disc figures as a 360-day calendar in ten-day color groups.
    Calendar,
}

impl FigureKind {
    pub fn name(&self) -> &'static str {
        match self {
            FigureKind::Orbits { .. } => "orbits",
            FigureKind::Abacus { .. } => "abacus",
            FigureKind::DivisionEqual { .. } => "division-equal",
            FigureKind::DivisionUnequal { .. } => "division-unequal",
            FigureKind::Star => "star",
            FigureKind::Limit { .. } => "limit",
            FigureKind::Calendar => "calendar",
        }
    }

    /// File name following the `<kind>-<params>.svg` convention.
    pub fn suggested_filename(&self) -> String {
        match self {
            FigureKind::Orbits { max_rank } => format!("orbits-{max_rank}.svg"),
            FigureKind::Abacus { numeral } => {
                format!("abacus-{}.svg", numeral.to_string().replace(':', "-"))
            }
            FigureKind::DivisionEqual { parts } => format!("division-equal-{parts}.svg"),
            FigureKind::DivisionUnequal { n_per_wedge } => {
                format!("division-unequal-{n_per_wedge}.svg")
            }
            FigureKind::Star => "star.svg".to_string(),
            FigureKind::Limit { ranks } => {
                let tags: Vec<String> = ranks.iter().map(u32::to_string).collect();
                format!("limit-{}.svg", tags.join("-"))
            }
            FigureKind::Calendar => "calendar.svg".to_string(),
        }
    }
}

/// Wedge colors shared by the packing figures.
pub fn wedge_palette() -> Vec<String> {
    [
        "gold",
        "mediumseagreen",
        "steelblue",
        "indianred",
        "mediumorchid",
        "darkorange",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

/// The ten-day group colors of the calendar.
pub fn calendar_palette() -> Vec<String> {
    ["yellow", "green", "blue"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

impl FigureSpec {
    /// Spec with the default palette and canvas for the kind.
    pub fn new(kind: FigureKind) -> Self {
        let palette = match kind {
            FigureKind::Calendar => calendar_palette(),
            _ => wedge_palette(),
        };
        let (width, height) = match kind {
            FigureKind::Limit { .. } => (1280, 480),
            FigureKind::Calendar => (1200, 800),
            FigureKind::Abacus { .. } => (1320, 280),
            _ => (800, 800),
        };
        FigureSpec {
            kind,
            palette,
            width,
            height,
        }
    }

    pub fn with_canvas(mut self, width: u32, height: u32) -> Self {
        self.width = width;
        self.height = height;
        self
    }

    pub fn with_palette(mut self, palette: Vec<String>) -> Self {
        self.palette = palette;
        self
    }

    fn color(&self, i: usize) -> &str {
        &self.palette[i % self.palette.len()]
    }
}

/// Renders the figure as an SVG 1.1 document.
pub fn render(spec: &FigureSpec) -> Result<String> {
    if spec.width < 64 || spec.height < 64 {
        return Err(Error::Domain(format!(
            "canvas {}x{} below the 64px minimum",
            spec.width, spec.height
        )));
    }
    if spec.palette.is_empty() {
        return Err(Error::Domain(
            "palette must name at least one color".to_string(),
        ));
    }
    match &spec.kind {
        FigureKind::Orbits { max_rank } => render_orbits(spec, *max_rank),
        FigureKind::Abacus { numeral } => render_abacus(spec, numeral),
        FigureKind::DivisionEqual { parts } => render_division_equal(spec, *parts),
        FigureKind::DivisionUnequal { n_per_wedge } => render_division_unequal(spec, *n_per_wedge),
        FigureKind::Star => render_star(spec),
        FigureKind::Limit { ranks } => render_limit(spec, ranks),
        FigureKind::Calendar => render_calendar(spec),
    }
}

/// Side-by-side rescaled packings with deviation annotations, on the
/// default canvas.
pub fn render_limit_comparison(ranks: &[u32]) -> Result<String> {
    render(&FigureSpec::new(FigureKind::Limit {
        ranks: ranks.to_vec(),
    }))
}

// ---------------------------------------------------------------------
// SVG document builder: fixed attribute order, six-decimal coordinates.
// ---------------------------------------------------------------------

struct Svg {
    out: String,
}

impl Svg {
    fn new(width: u32, height: u32) -> Self {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
        );
        Svg { out }
    }

    fn circle(
        &mut self,
        class: &str,
        center: (f64, f64),
        r: f64,
        fill: &str,
        stroke: &str,
        stroke_width: f64,
    ) {
        let _ = writeln!(
            self.out,
            "<circle class=\"{class}\" cx=\"{:.6}\" cy=\"{:.6}\" r=\"{r:.6}\" \
             fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"{stroke_width:.6}\"/>",
            center.0, center.1
        );
    }

    fn line(&mut self, class: &str, a: (f64, f64), b: (f64, f64), stroke: &str, stroke_width: f64) {
        let _ = writeln!(
            self.out,
            "<line class=\"{class}\" x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" \
             stroke=\"{stroke}\" stroke-width=\"{stroke_width:.6}\"/>",
            a.0, a.1, b.0, b.1
        );
    }

    fn polygon(
        &mut self,
        class: &str,
        points: &[(f64, f64)],
        fill: &str,
        stroke: &str,
        stroke_width: f64,
    ) {
        let pts = points
            .iter()
            .map(|p| format!("{:.6},{:.6}", p.0, p.1))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            self.out,
            "<polygon class=\"{class}\" points=\"{pts}\" \
             fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"{stroke_width:.6}\"/>"
        );
    }

    fn text(&mut self, x: f64, y: f64, size: f64, content: &str) {
        let _ = writeln!(
            self.out,
            "<text x=\"{x:.6}\" y=\"{y:.6}\" font-family=\"monospace\" font-size=\"{size:.6}\" \
             fill=\"black\" text-anchor=\"middle\">{}</text>",
            escape(content)
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Maps unit-spacing packing coordinates onto the canvas, y up.
struct Frame {
    cx: f64,
    cy: f64,
    scale: f64,
}

impl Frame {
    fn fit(center: (f64, f64), half_extent: f64, span: f64) -> Self {
        Frame {
            cx: center.0,
            cy: center.1,
            scale: span / 2.0 / half_extent,
        }
    }

    fn point(&self, p: (f64, f64)) -> (f64, f64) {
        (self.cx + p.0 * self.scale, self.cy - p.1 * self.scale)
    }
}

// ---------------------------------------------------------------------
// Figure renderers
// ---------------------------------------------------------------------

fn render_orbits(spec: &FigureSpec, max_rank: u32) -> Result<String> {
    let packing = hexlattice::build_packing(max_rank)?;
    let margin = 20.0;
    let span = f64::from(spec.width.min(spec.height)) - 2.0 * margin;
    let frame = Frame::fit(
        (f64::from(spec.width) / 2.0, f64::from(spec.height) / 2.0),
        f64::from(max_rank) + DISC_RADIUS,
        span,
    );
    let disc_px = DISC_RADIUS * frame.scale;
    if disc_px < MIN_DISC_PX {
        return Err(Error::Layout(format!(
            "rank {max_rank} discs shrink to {disc_px:.2}px on a {}x{} canvas",
            spec.width, spec.height
        )));
    }
    let mut svg = Svg::new(spec.width, spec.height);
    draw_packing(&mut svg, spec, &packing, &frame, disc_px);
    Ok(svg.finish())
}

/// Draws every disc of the packing: wedge-colored, center disc neutral.
fn draw_packing(
    svg: &mut Svg,
    spec: &FigureSpec,
    packing: &DiscPacking,
    frame: &Frame,
    disc_px: f64,
) {
    for disc in packing.discs() {
        let (cx, cy) = frame.point(disc.cartesian);
        let (class, fill) = match disc.wedge {
            Some(w) => ("disc", spec.color(w as usize)),
            None => ("hub", "#dddddd"),
        };
        svg.circle(
            class,
            (cx, cy),
            disc_px,
            fill,
            "black",
            (disc_px * 0.06).min(1.0),
        );
    }
}

fn render_star(spec: &FigureSpec) -> Result<String> {
    let margin = 40.0;
    let span = f64::from(spec.width.min(spec.height)) - 2.0 * margin;
    let frame = Frame::fit(
        (f64::from(spec.width) / 2.0, f64::from(spec.height) / 2.0),
        1.0 + DISC_RADIUS,
        span,
    );
    let disc_px = DISC_RADIUS * frame.scale;
    let packing = hexlattice::build_packing(1)?;
    let mut svg = Svg::new(spec.width, spec.height);
    for disc in packing.discs() {
        let (cx, cy) = frame.point(disc.cartesian);
        svg.circle("disc", (cx, cy), disc_px, "none", "black", 1.5);
    }
    // Two equilateral triangles over alternating first-orbit centers.
    let ring: Vec<(f64, f64)> = hexlattice::orbit_coords(1)?
        .iter()
        .map(|c| frame.point(c.to_cartesian()))
        .collect();
    let even: Vec<(f64, f64)> = [0, 2, 4].iter().map(|&i| ring[i]).collect();
    let odd: Vec<(f64, f64)> = [1, 3, 5].iter().map(|&i| ring[i]).collect();
    svg.polygon("star-triangle", &even, "none", spec.color(0), 2.0);
    svg.polygon("star-triangle", &odd, "none", spec.color(2), 2.0);
    Ok(svg.finish())
}

fn render_abacus(spec: &FigureSpec, numeral: &SexagesimalNumeral) -> Result<String> {
    let state = AbacusState::from_numeral(numeral)?;
    let packing = hexlattice::build_packing(4)?;
    let cell = f64::from(spec.width) / ABACUS_PLACES as f64;
    let margin = 14.0;
    let label_band = 34.0;
    let half_extent = 4.0 + DISC_RADIUS;
    let span = (cell.min(f64::from(spec.height) - label_band)) - 2.0 * margin;
    let frame_scale = span / 2.0 / half_extent;
    let disc_px = DISC_RADIUS * frame_scale;
    if disc_px < MIN_DISC_PX {
        return Err(Error::Layout(format!(
            "abacus places shrink below token size on a {}x{} canvas",
            spec.width, spec.height
        )));
    }

    let mut svg = Svg::new(spec.width, spec.height);
    // Most-significant place on the left, as the numeral reads.
    for (col, place) in (0..ABACUS_PLACES).rev().enumerate() {
        let frame = Frame {
            cx: cell * (col as f64 + 0.5),
            cy: (f64::from(spec.height) - label_band) / 2.0,
            scale: frame_scale,
        };
        let filled = abacus_layout(state.places()[place])?;
        let mut slot = 0usize;
        for disc in packing.discs() {
            let (cx, cy) = frame.point(disc.cartesian);
            if disc.wedge.is_none() {
                svg.circle("hub", (cx, cy), disc_px, "#eeeeee", "#888888", 0.8);
                continue;
            }
            svg.circle("slot", (cx, cy), disc_px, "white", "#888888", 0.8);
            if filled[slot] {
                svg.circle(
                    "token",
                    (cx, cy),
                    disc_px * 0.62,
                    "saddlebrown",
                    "none",
                    0.0,
                );
            }
            slot += 1;
        }
        svg.text(
            frame.cx,
            f64::from(spec.height) - label_band / 2.0,
            16.0,
            &format!("{} x 60^{place}", state.places()[place]),
        );
    }
    Ok(svg.finish())
}

fn render_division_equal(spec: &FigureSpec, parts: u32) -> Result<String> {
    let division = divisions::equal_division(parts)?;
    let margin = 30.0;
    let hexagon_px = (f64::from(spec.width.min(spec.height)) - 2.0 * margin) / 2.0;
    let circle_px = hexagon_px / 2.0; // circle radius is half the triangle side
    let center = (f64::from(spec.width) / 2.0, f64::from(spec.height) / 2.0);

    let mut svg = Svg::new(spec.width, spec.height);
    let vertices: Vec<(f64, f64)> = division.stages[0]
        .added_points
        .iter()
        .map(|&(x, y)| (center.0 + x * hexagon_px, center.1 - y * hexagon_px))
        .collect();
    svg.polygon("hexagon", &vertices, "none", "#555555", 1.2);
    for v in &vertices {
        svg.line("spoke", center, *v, "#555555", 1.2);
    }
    svg.circle("circle", center, circle_px, "none", "black", 1.6);
    // Radii colored by the stage that constructed each boundary.
    for (stage_index, stage) in division.stages.iter().enumerate() {
        for &(x, y) in &stage.added_points {
            let tip = (center.0 + x * circle_px, center.1 - y * circle_px);
            svg.line(
                &format!("radius stage-{stage_index}"),
                center,
                tip,
                spec.color(stage_index),
                1.2,
            );
        }
    }
    Ok(svg.finish())
}

fn render_division_unequal(spec: &FigureSpec, n_per_wedge: u32) -> Result<String> {
    let report = divisions::wedge_angles(n_per_wedge, ChordMode::Full)?;
    debug_assert_eq!(report.rows.len(), n_per_wedge as usize);
    let margin = 30.0;
    let side_px = (f64::from(spec.width.min(spec.height)) - 2.0 * margin) / 2.0;
    let circle_px = side_px / 2.0;
    let center = (f64::from(spec.width) / 2.0, f64::from(spec.height) / 2.0);
    let vertices = hexlattice::hexagon_vertices()
        .map(|(x, y)| (center.0 + x * side_px, center.1 - y * side_px));

    let mut svg = Svg::new(spec.width, spec.height);
    svg.circle("circle", center, circle_px, "none", "black", 1.6);
    for v in &vertices {
        svg.line("radius", center, *v, "#555555", 1.2);
    }
    for w in 0..6 {
        let a = vertices[w];
        let b = vertices[(w + 1) % 6];
        svg.line("chord", a, b, "black", 1.2);
        // Connectors from the center to the interior chord division points.
        for j in 1..n_per_wedge {
            let t = f64::from(j) / f64::from(n_per_wedge);
            let p = (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t);
            svg.line("connector", center, p, spec.color(w), 0.9);
        }
    }
    Ok(svg.finish())
}

fn render_limit(spec: &FigureSpec, ranks: &[u32]) -> Result<String> {
    if ranks.is_empty() {
        return Err(Error::Domain(
            "limit figure needs at least one rank".to_string(),
        ));
    }
    if let Some(&bad) = ranks.iter().find(|&&r| r == 0 || r > 500) {
        return Err(Error::Domain(format!(
            "limit rank {bad} outside the supported 1..=500"
        )));
    }
    let panel = f64::from(spec.width) / ranks.len() as f64;
    let caption_band = 30.0;
    let margin = 16.0;
    let radius_px = (panel.min(f64::from(spec.height) - caption_band) - 2.0 * margin) / 2.0;
    if radius_px <= 0.0 {
        return Err(Error::Layout(format!(
            "{} panels do not fit a {}x{} canvas",
            ranks.len(),
            spec.width,
            spec.height
        )));
    }

    let mut svg = Svg::new(spec.width, spec.height);
    for (i, &rank) in ranks.iter().enumerate() {
        let packing = hexlattice::build_packing(rank)?;
        let deviation = hexlattice::hexagon_deviation(rank);
        let frame = Frame {
            cx: panel * (i as f64 + 0.5),
            cy: (f64::from(spec.height) - caption_band) / 2.0,
            scale: radius_px,
        };
        // Rescale so the outer corner centers reach the unit circle.
        let shrink = 1.0 / f64::from(rank);
        let disc_px = DISC_RADIUS * shrink * frame.scale;
        for disc in packing.discs() {
            let (x, y) = disc.cartesian;
            let (cx, cy) = frame.point((x * shrink, y * shrink));
            svg.circle("disc", (cx, cy), disc_px, "#9ecae1", "none", 0.0);
        }
        let hexagon = hexlattice::hexagon_vertices().map(|p| frame.point(p));
        svg.polygon("limit-hexagon", &hexagon, "none", "crimson", 1.4);
        svg.circle(
            "unit-circle",
            (frame.cx, frame.cy),
            frame.scale,
            "none",
            "black",
            1.0,
        );
        svg.text(
            frame.cx,
            f64::from(spec.height) - caption_band / 2.0 + 5.0,
            14.0,
            &format!("rank {rank}: deviation {deviation:.6}"),
        );
    }
    Ok(svg.finish())
}

fn render_calendar(spec: &FigureSpec) -> Result<String> {
    let packing = hexlattice::build_packing(4)?;
    let cols = 3usize;
    let rows = 2usize;
    let caption_band = 26.0;
    let cell_w = f64::from(spec.width) / cols as f64;
    let cell_h = f64::from(spec.height) / rows as f64;
    let margin = 12.0;
    let half_extent = 4.0 + DISC_RADIUS;
    let scale = (cell_w.min(cell_h - caption_band) - 2.0 * margin) / 2.0 / half_extent;
    let disc_px = DISC_RADIUS * scale;
    if disc_px < MIN_DISC_PX {
        return Err(Error::Layout(format!(
            "calendar discs shrink below visibility on a {}x{} canvas",
            spec.width, spec.height
        )));
    }

    let mut svg = Svg::new(spec.width, spec.height);
    for hexagon in 0..6usize {
        let col = hexagon % cols;
        let row = hexagon / cols;
        let frame = Frame {
            cx: cell_w * (col as f64 + 0.5),
            cy: cell_h * (row as f64 + 0.5) - caption_band / 2.0,
            scale,
        };
        for disc in packing.discs() {
            let (cx, cy) = frame.point(disc.cartesian);
            match disc.wedge {
                None => svg.circle("hub", (cx, cy), disc_px, "#dddddd", "#888888", 0.8),
                Some(w) => {
                    // Two 30-day months per hexagon, three wedges each; one
                    // wedge of ten discs is one ten-day color group.
                    let month = 2 * hexagon + usize::from(w >= 3);
                    let group = w % 3;
                    svg.circle(
                        &format!("day m{} g{group}", month + 1),
                        (cx, cy),
                        disc_px,
                        spec.color(group as usize),
                        "#555555",
                        0.6,
                    );
                }
            }
        }
        svg.text(
            frame.cx,
            cell_h * (row as f64 + 1.0) - caption_band / 2.0 + 4.0,
            14.0,
            &format!("months {} and {}", 2 * hexagon + 1, 2 * hexagon + 2),
        );
    }
    Ok(svg.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn orbits_draw_exactly_the_disc_count() {
        for rank in [1u32, 2, 4] {
            let svg = render(&FigureSpec::new(FigureKind::Orbits { max_rank: rank })).unwrap();
            let expected = hexlattice::cumulative_discs(rank, true) as usize;
            assert_eq!(count(&svg, "<circle "), expected, "rank {rank}");
        }
    }

    #[test]
    fn orbits_share_one_radius_value() {
        let svg = render(&FigureSpec::new(FigureKind::Orbits { max_rank: 2 })).unwrap();
        let radii: std::collections::HashSet<&str> = svg
            .split(" r=\"")
            .skip(1)
            .map(|rest| rest.split('"').next().unwrap())
            .collect();
        assert_eq!(radii.len(), 1, "all discs share one radius, got {radii:?}");
    }

    #[test]
    fn oversized_rank_fails_layout() {
        let spec = FigureSpec::new(FigureKind::Orbits { max_rank: 400 }).with_canvas(200, 200);
        assert!(matches!(render(&spec), Err(Error::Layout(_))));
    }

    #[test]
    fn star_has_seven_circles_and_two_triangles() {
        let svg = render(&FigureSpec::new(FigureKind::Star)).unwrap();
        assert_eq!(count(&svg, "<circle "), 7);
        assert_eq!(count(&svg, "class=\"star-triangle\""), 2);
    }

    #[test]
    fn abacus_draws_tokens_for_every_unit() {
        let numeral = SexagesimalNumeral::from_decimal(23_269);
        let svg = render(&FigureSpec::new(FigureKind::Abacus { numeral })).unwrap();
        assert_eq!(count(&svg, "class=\"slot\""), 6 * 60);
        assert_eq!(count(&svg, "class=\"hub\""), 6);
        // 6 + 27 + 49 tokens
        assert_eq!(count(&svg, "class=\"token\""), 82);
    }

    #[test]
    fn abacus_rejects_numerals_beyond_six_places() {
        let numeral = SexagesimalNumeral::from_decimal(u128::from(u64::MAX));
        assert!(render(&FigureSpec::new(FigureKind::Abacus { numeral })).is_err());
    }

    #[test]
    fn equal_division_draws_one_radius_per_boundary() {
        let svg = render(&FigureSpec::new(FigureKind::DivisionEqual { parts: 24 })).unwrap();
        assert_eq!(count(&svg, "class=\"radius"), 24);
        assert_eq!(count(&svg, "<circle "), 1);
    }

    #[test]
    fn unequal_division_draws_chords_and_connectors() {
        let svg = render(&FigureSpec::new(FigureKind::DivisionUnequal {
            n_per_wedge: 3,
        }))
        .unwrap();
        assert_eq!(count(&svg, "class=\"chord\""), 6);
        assert_eq!(count(&svg, "class=\"connector\""), 6 * 2);
        assert_eq!(count(&svg, "class=\"radius\""), 6);
    }

    #[test]
    fn calendar_has_360_days_in_ten_day_groups() {
        let svg = render(&FigureSpec::new(FigureKind::Calendar)).unwrap();
        assert_eq!(count(&svg, "class=\"day"), 360);
        assert_eq!(count(&svg, "class=\"hub\""), 6);
        for month in 1..=12 {
            for group in 0..3 {
                assert_eq!(count(&svg, &format!("class=\"day m{month} g{group}\"")), 10);
            }
        }
        for color in ["yellow", "green", "blue"] {
            assert_eq!(count(&svg, &format!("fill=\"{color}\"")), 120);
        }
    }

    #[test]
    fn limit_panels_annotate_decreasing_deviation() {
        let svg = render_limit_comparison(&[1, 3, 10]).unwrap();
        let deviations: Vec<f64> = svg
            .split("deviation ")
            .skip(1)
            .map(|rest| rest.split('<').next().unwrap().trim().parse().unwrap())
            .collect();
        assert_eq!(deviations.len(), 3);
        assert!(deviations[0] > deviations[1] && deviations[1] > deviations[2]);
        assert_eq!(count(&svg, "class=\"unit-circle\""), 3);
        assert_eq!(count(&svg, "class=\"limit-hexagon\""), 3);
    }

    #[test]
    fn limit_renders_a_single_panel() {
        let svg = render_limit_comparison(&[1]).unwrap();
        assert_eq!(count(&svg, "class=\"unit-circle\""), 1);
        assert_eq!(count(&svg, "class=\"limit-hexagon\""), 1);
    }

    #[test]
    fn limit_rank_fifty_annotation_sits_below_rank_ten() {
        let annotated = |ranks: &[u32]| -> f64 {
            let svg = render_limit_comparison(ranks).unwrap();
            let rest = svg.split("deviation ").nth(1).unwrap();
            rest.split('<').next().unwrap().trim().parse().unwrap()
        };
        assert!(annotated(&[50]) < annotated(&[10]));
    }

    #[test]
    fn limit_rejects_bad_ranks() {
        assert!(render_limit_comparison(&[]).is_err());
        assert!(render_limit_comparison(&[0]).is_err());
        assert!(render_limit_comparison(&[501]).is_err());
    }

    #[test]
    fn rendering_is_deterministic() {
        let spec = FigureSpec::new(FigureKind::Orbits { max_rank: 4 });
        assert_eq!(render(&spec).unwrap(), render(&spec).unwrap());
        let spec = FigureSpec::new(FigureKind::Calendar);
        assert_eq!(render(&spec).unwrap(), render(&spec).unwrap());
    }
}
