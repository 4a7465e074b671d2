//! Equal and unequal circle divisions built from equilateral triangles.
//!
//! Six equilateral triangles around a point divide the circle into 6 equal
//! parts; triangle symmetry bisects those into 12, and compass bisection
//! continues the chain through 24, 48, 96, 192 and 384. Dividing the chord
//! of one 60° wedge into n equal segments instead yields n unequal angles
//! per wedge — 360 slightly-unequal parts when n = 60 — and this module
//! reproduces that angle table with its error columns.
//!
//! Angles are computed internally in radians from exact chord offsets via
//! arctangent differences; every reported value is in degrees.

use serde_json::json;

use crate::numfmt::{format_sig, round_sig};
use crate::{Error, Result, SCHEMA};

/// Part counts reachable by the construction chain.
pub const CONSTRUCTIBLE_PARTS: [u32; 7] = [6, 12, 24, 48, 96, 192, 384];

/// An equal division of the circle with the construction that produced it.
#[derive(Clone, Debug)]
pub struct EqualDivision {
    pub parts: u32,
    /// Boundary angles in degrees, ascending from 0°.
    pub boundary_angles_deg: Vec<f64>,
    /// Construction provenance: the boundary directions added per stage.
    pub stages: Vec<DivisionStage>,
}

/// One stage of the construction chain and the unit-circle points it added.
#[derive(Clone, Debug)]
pub struct DivisionStage {
    pub parts: u32,
    pub added_points: Vec<(f64, f64)>,
}

/// Which part of the wedge chord is subdivided.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChordMode {
    /// The whole chord, split into n equal segments.
    Full,
    /// Half the chord from the altitude foot, split into n equal segments.
    Half,
}

impl ChordMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ChordMode::Full => "full",
            ChordMode::Half => "half",
        }
    }
}

/// One row of the wedge table: the obtained angle and its error columns.
#[derive(Clone, Copy, Debug)]
pub struct WedgeAngleRow {
    /// 1-based row number; row 1 is adjacent to the chord midpoint.
    pub index: usize,
    pub value_deg: f64,
    /// Difference from the theoretical angle of 1°.
    pub abs_error_deg: f64,
    /// Absolute error relative to the obtained angle.
    pub rel_error: f64,
    /// The angle swept by repeating this angle 60 times: 60·value.
    pub covered_arc_deg: f64,
}

/// The n unequal angles of one 60° wedge with error and covered-arc columns.
#[derive(Clone, Debug)]
pub struct WedgeDivisionReport {
    pub n: u32,
    pub mode: ChordMode,
    pub rows: Vec<WedgeAngleRow>,
}

/// The table row closest to 1°.
#[derive(Clone, Copy, Debug)]
pub struct NearestAngle {
    pub index: usize,
    pub value_deg: f64,
    pub abs_error_deg: f64,
}

/// Unit-triangle count of one wedge triangle at a growth stage.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TriangleGrowth {
    pub stage: u32,
    /// Unit triangles in each of the six large wedge triangles: stage².
    pub triangles: u64,
    /// Gain over the previous stage: the odd number 2·stage − 1.
    pub increment: u64,
}

/// Divides the circle into `parts` equal sectors via the construction
/// chain: hexagon of triangles (6), triangle-symmetry bisection (12), then
/// repeated compass bisection (24, 48, 96, 192, 384).
///
/// Boundary directions survive each refinement unchanged, so the angle set
/// of `parts` is contained exactly in the angle set of `2·parts`.
pub fn equal_division(parts: u32) -> Result<EqualDivision> {
    if !CONSTRUCTIBLE_PARTS.contains(&parts) {
        return Err(Error::Domain(format!(
            "{parts} equal parts are not reachable: the chain gives 6, 12, 24, 48, 96, 192 \
             or 384, and going further (e.g. 360) would need angle trisection or \
             quintisection, which ruler and compass cannot do in general"
        )));
    }

    // Stage one: six equilateral triangles share the center; each new vertex
    // is the circle-circle intersection over the previous one.
    let mut dirs: Vec<(f64, f64)> = Vec::with_capacity(parts as usize);
    dirs.push((1.0, 0.0));
    for _ in 1..6 {
        let &last = dirs.last().unwrap();
        dirs.push(equilateral_apex(last));
    }
    let mut stages = vec![DivisionStage {
        parts: 6,
        added_points: dirs.clone(),
    }];

    // Later stages: bisect every sector through the midpoint of its chord.
    while (dirs.len() as u32) < parts {
        let mut refined = Vec::with_capacity(dirs.len() * 2);
        let mut added = Vec::with_capacity(dirs.len());
        for i in 0..dirs.len() {
            let u = dirs[i];
            let w = dirs[(i + 1) % dirs.len()];
            let mid = normalize((u.0 + w.0, u.1 + w.1));
            refined.push(u);
            refined.push(mid);
            added.push(mid);
        }
        dirs = refined;
        stages.push(DivisionStage {
            parts: dirs.len() as u32,
            added_points: added,
        });
    }

    let boundary_angles_deg = dirs.iter().map(|&d| direction_degrees(d)).collect();
    Ok(EqualDivision {
        parts,
        boundary_angles_deg,
        stages,
    })
}

/// Third vertex of the equilateral triangle on (origin, `v`), on the
/// counter-clockwise side: the intersection of the circles of radius |v|
/// centered at both endpoints.
fn equilateral_apex(v: (f64, f64)) -> (f64, f64) {
    let h = 3f64.sqrt() / 2.0;
    (v.0 / 2.0 - h * v.1, v.1 / 2.0 + h * v.0)
}

fn normalize(v: (f64, f64)) -> (f64, f64) {
    let len = v.0.hypot(v.1);
    (v.0 / len, v.1 / len)
}

/// Angle of a direction in degrees within [0, 360).
fn direction_degrees(d: (f64, f64)) -> f64 {
    let deg = d.1.atan2(d.0).to_degrees();
    if deg < 0.0 {
        deg + 360.0
    } else {
        deg
    }
}

/// Angles obtained by dividing the wedge chord (or half-chord) into `n`
/// equal segments and joining each division point to the center.
///
/// The wedge is an equilateral triangle of side s with its apex at the
/// center; the chord lies at distance s·√3/2. Each angle is an arctangent
/// difference of two exact chord offsets, so no cancellation accumulates.
pub fn wedge_angles(n: u32, mode: ChordMode) -> Result<WedgeDivisionReport> {
    if n == 0 {
        return Err(Error::Domain(
            "the chord cannot be divided into zero parts".to_string(),
        ));
    }
    let altitude = 3f64.sqrt() / 2.0; // for side s = 1
                                      // Offsets carry an exact integer numerator over 2n, and the arctangent
                                      // is taken on the magnitude with the sign restored afterwards, so
                                      // mirror-image offsets produce bit-identical angles.
    let offset = |k: u32| -> f64 {
        let numerator = match mode {
            // Full chord runs from −s/2 to s/2.
            ChordMode::Full => 2 * i64::from(k) - i64::from(n),
            // Half chord runs from the altitude foot to s/2.
            ChordMode::Half => i64::from(k),
        };
        numerator as f64 / (2.0 * f64::from(n))
    };
    let boundary_angle = |x: f64| -> f64 {
        let a = (x.abs() / altitude).atan();
        if x < 0.0 {
            -a
        } else {
            a
        }
    };
    let rows = (1..=n)
        .map(|index| {
            let lo = boundary_angle(offset(index - 1));
            let hi = boundary_angle(offset(index));
            let value_deg = (hi - lo).to_degrees();
            let abs_error_deg = (value_deg - 1.0).abs();
            WedgeAngleRow {
                index: index as usize,
                value_deg,
                abs_error_deg,
                rel_error: abs_error_deg / value_deg,
                covered_arc_deg: 60.0 * value_deg,
            }
        })
        .collect();
    Ok(WedgeDivisionReport { n, mode, rows })
}

/// The 6n unequal angles of the whole circle: the full-chord wedge angles
/// replicated across the six wedges.
pub fn circle_division_unequal(n_per_wedge: u32) -> Result<Vec<f64>> {
    let wedge = wedge_angles(n_per_wedge, ChordMode::Full)?;
    let one_wedge: Vec<f64> = wedge.rows.iter().map(|r| r.value_deg).collect();
    let mut angles = Vec::with_capacity(6 * n_per_wedge as usize);
    for _ in 0..6 {
        angles.extend_from_slice(&one_wedge);
    }
    Ok(angles)
}

/// Row with the smallest absolute error; ties break toward the smaller
/// index.
pub fn nearest_to_one_degree(report: &WedgeDivisionReport) -> Result<NearestAngle> {
    let best = report
        .rows
        .iter()
        .min_by(|a, b| {
            a.abs_error_deg
                .partial_cmp(&b.abs_error_deg)
                .expect("errors are finite")
                .then(a.index.cmp(&b.index))
        })
        .ok_or_else(|| Error::Domain("empty report has no nearest angle".to_string()))?;
    Ok(NearestAngle {
        index: best.index,
        value_deg: best.value_deg,
        abs_error_deg: best.abs_error_deg,
    })
}

/// Unit-triangle count of one wedge triangle after `stage` additions.
///
/// Panics when `stage` is 0; growth starts from a single triangle.
pub fn triangle_growth(stage: u32) -> TriangleGrowth {
    assert!(stage >= 1, "growth stages start at 1");
    let s = u64::from(stage);
    TriangleGrowth {
        stage,
        triangles: s * s,
        increment: 2 * s - 1,
    }
}

impl WedgeDivisionReport {
    /// Aligned text table with the columns of the classical presentation.
    pub fn to_text_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<6} {:<18} {:<16} {:<16} {}\n",
            "Angle", "Value in degrees", "Absolute error", "Relative error", "Covered arc"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "{:<6} {:<18} {:<16} {:<16} {}\n",
                row.index,
                format_sig(row.value_deg, 9),
                format_sig(row.abs_error_deg, 9),
                format!("{:.3}%", row.rel_error * 100.0),
                format_sig(row.covered_arc_deg, 9),
            ));
        }
        out
    }

    /// JSON document with values rounded to nine significant digits.
    pub fn to_json(&self) -> String {
        let rows: Vec<_> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "index": r.index,
                    "value_deg": round_sig(r.value_deg, 9),
                    "abs_error_deg": round_sig(r.abs_error_deg, 9),
                    "rel_error": round_sig(r.rel_error, 9),
                    "covered_arc_deg": round_sig(r.covered_arc_deg, 9),
                })
            })
            .collect();
        json!({
            "schema": SCHEMA,
            "n": self.n,
            "mode": self.mode.as_str(),
            "rows": rows,
        })
        .to_string()
    }
}
