//! Disc orbits on the integer hexagonal lattice.
//!
//! A central disc is surrounded by concentric orbits of same-radius tangent
//! discs; the orbit of rank `k` holds exactly `6k` discs, and the six
//! corner-to-corner runs of each orbit stack up into six triangular wedges
//! of discs around the center. All counting claims are exact-integer facts
//! on axial coordinates; Cartesian positions are derived views with unit
//! center spacing, so tangency means center distance 1.

use std::collections::HashMap;

use crate::{Error, Result};

/// Disc radius in internal units (half the unit center spacing).
pub const DISC_RADIUS: f64 = 0.5;

/// Largest orbit rank `build_packing` accepts; memory grows as O(rank²).
pub const MAX_RANK_CAP: u32 = 10_000;

/// Axial coordinate of a disc center on the hexagonal lattice.
///
/// The six unit directions are the neighbors of the origin; `q` maps to the
/// Cartesian vector (1, 0) and `r` to (1/2, √3/2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AxialCoord {
    pub q: i32,
    pub r: i32,
}

impl AxialCoord {
    pub const ORIGIN: AxialCoord = AxialCoord::new(0, 0);

    /// Unit directions in counter-clockwise order, starting along +q.
    pub const DIRECTIONS: [AxialCoord; 6] = [
        AxialCoord::new(1, 0),
        AxialCoord::new(0, 1),
        AxialCoord::new(-1, 1),
        AxialCoord::new(-1, 0),
        AxialCoord::new(0, -1),
        AxialCoord::new(1, -1),
    ];

    pub const fn new(q: i32, r: i32) -> Self {
        AxialCoord { q, r }
    }

    /// Hex distance to the origin: `(|q| + |r| + |q + r|) / 2`.
    pub fn hex_distance(self) -> u32 {
        let q = i64::from(self.q);
        let r = i64::from(self.r);
        ((q.abs() + r.abs() + (q + r).abs()) / 2) as u32
    }

    /// Rotates the coordinate by 60° counter-clockwise about the origin.
    ///
    /// This is an exact integer map; it sends each unit direction to the
    /// next one in counter-clockwise order.
    pub const fn rotated_60(self) -> Self {
        AxialCoord::new(-self.r, self.q + self.r)
    }

    /// Cartesian position with unit center spacing.
    pub fn to_cartesian(self) -> (f64, f64) {
        let q = f64::from(self.q);
        let r = f64::from(self.r);
        (q + r / 2.0, r * 3f64.sqrt() / 2.0)
    }

    pub const fn add(self, other: AxialCoord) -> Self {
        AxialCoord::new(self.q + other.q, self.r + other.r)
    }

    pub const fn scaled(self, factor: i32) -> Self {
        AxialCoord::new(self.q * factor, self.r * factor)
    }
}

impl std::ops::Add for AxialCoord {
    type Output = AxialCoord;

    fn add(self, other: AxialCoord) -> AxialCoord {
        AxialCoord::add(self, other)
    }
}

impl std::fmt::Display for AxialCoord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.q, self.r)
    }
}

/// One disc of a packing: lattice center, orbit rank, and wedge tag.
///
/// `wedge` is `None` exactly for the central disc (rank 0).
#[derive(Clone, Copy, Debug)]
pub struct Disc {
    pub center: AxialCoord,
    pub rank: u32,
    pub wedge: Option<u8>,
    pub cartesian: (f64, f64),
}

impl Disc {
    fn new(center: AxialCoord, rank: u32, wedge: Option<u8>) -> Self {
        Disc {
            center,
            rank,
            wedge,
            cartesian: center.to_cartesian(),
        }
    }
}

/// A central disc plus every orbit up to `max_rank`, stored rank-major,
/// then wedge, then position along the wedge run.
#[derive(Clone, Debug)]
pub struct DiscPacking {
    max_rank: u32,
    discs: Vec<Disc>,
}

impl DiscPacking {
    pub fn max_rank(&self) -> u32 {
        self.max_rank
    }

    pub fn discs(&self) -> &[Disc] {
        &self.discs
    }

    /// Indices of the discs tagged with `wedge`, in storage order.
    pub fn wedge_indices(&self, wedge: u8) -> Vec<usize> {
        self.discs
            .iter()
            .enumerate()
            .filter(|(_, d)| d.wedge == Some(wedge))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Number of discs in the orbit of the given rank: `6·rank`.
pub fn orbit_size(rank: u32) -> Result<u64> {
    if rank == 0 {
        return Err(Error::Domain(
            "rank 0 is the central disc, not an orbit".to_string(),
        ));
    }
    Ok(6 * u64::from(rank))
}

/// Total discs across orbits 1..=`max_rank`: `3·max_rank·(max_rank + 1)`,
/// plus one for the central disc when `include_center` is set.
pub fn cumulative_discs(max_rank: u32, include_center: bool) -> u64 {
    let r = u64::from(max_rank);
    let orbits = 3u64
        .checked_mul(r)
        .and_then(|v| v.checked_mul(r + 1))
        .expect("disc count exceeds u64");
    orbits + u64::from(include_center)
}

/// Centers of the orbit of the given rank, as six corner-started runs.
///
/// Run `w` begins at the corner `rank·DIRECTIONS[w]` and walks `rank` steps
/// toward the next corner, so position `w·rank + j` belongs to wedge `w`.
pub fn orbit_coords(rank: u32) -> Result<Vec<AxialCoord>> {
    if rank == 0 {
        return Err(Error::Domain(
            "rank 0 is the central disc, not an orbit".to_string(),
        ));
    }
    let k = rank as i32;
    let mut coords = Vec::with_capacity(6 * rank as usize);
    for w in 0..6 {
        let corner = AxialCoord::DIRECTIONS[w].scaled(k);
        let step = AxialCoord::DIRECTIONS[(w + 2) % 6];
        for j in 0..k {
            coords.push(corner.add(step.scaled(j)));
        }
    }
    Ok(coords)
}

/// Builds the packing of the central disc plus orbits 1..=`max_rank`.
pub fn build_packing(max_rank: u32) -> Result<DiscPacking> {
    if max_rank == 0 {
        return Err(Error::Domain(
            "a packing needs at least one orbit".to_string(),
        ));
    }
    if max_rank > MAX_RANK_CAP {
        return Err(Error::Resource(format!(
            "max_rank {max_rank} exceeds the safety cap {MAX_RANK_CAP}"
        )));
    }
    let mut discs = Vec::with_capacity(cumulative_discs(max_rank, true) as usize);
    discs.push(Disc::new(AxialCoord::ORIGIN, 0, None));
    for rank in 1..=max_rank {
        for (pos, center) in orbit_coords(rank)?.into_iter().enumerate() {
            let wedge = (pos / rank as usize) as u8;
            discs.push(Disc::new(center, rank, Some(wedge)));
        }
    }
    Ok(DiscPacking { max_rank, discs })
}

/// Equal-size groupings of the 60 non-central discs of the rank-4 packing,
/// one per divisor of 60 witnessed by the figure.
#[derive(Clone, Debug)]
pub struct DivisorPartitionReport {
    /// Partitions for d = 2, 3, 4, 5, 6 in that order.
    pub partitions: Vec<DivisorGroups>,
}

/// A labeling of the 60 non-central discs into `divisor` equal groups.
#[derive(Clone, Debug)]
pub struct DivisorGroups {
    pub divisor: u32,
    pub group_size: usize,
    /// Disc indices into `DiscPacking::discs`, one list per group.
    pub groups: Vec<Vec<usize>>,
}

/// Partitions the 60-disc figure (rank-4 packing) into d equal groups for
/// every d in {2, 3, 4, 5, 6}.
///
/// Groups for d ∈ {2, 3, 6} are unions of whole wedges; d = 5 pairs off the
/// ten discs of each wedge in storage order; d = 4 splits each wedge into
/// two runs of five and distributes the twelve halves three per group.
pub fn divisor_partition(packing: &DiscPacking) -> Result<DivisorPartitionReport> {
    if packing.max_rank() != 4 {
        return Err(Error::Domain(format!(
            "divisor partition applies to the 60-disc figure (max_rank 4), got max_rank {}",
            packing.max_rank()
        )));
    }
    let wedges: Vec<Vec<usize>> = (0..6).map(|w| packing.wedge_indices(w)).collect();
    debug_assert!(wedges.iter().all(|w| w.len() == 10));

    let mut partitions = Vec::with_capacity(5);
    for divisor in [2u32, 3, 4, 5, 6] {
        let groups: Vec<Vec<usize>> = match divisor {
            2 | 3 | 6 => {
                let per_group = 6 / divisor as usize;
                (0..divisor as usize)
                    .map(|g| {
                        (0..per_group)
                            .flat_map(|i| wedges[g * per_group + i].iter().copied())
                            .collect()
                    })
                    .collect()
            }
            5 => (0..5)
                .map(|g| {
                    wedges
                        .iter()
                        .flat_map(|w| w[2 * g..2 * g + 2].iter().copied())
                        .collect()
                })
                .collect(),
            4 => {
                let halves: Vec<&[usize]> =
                    wedges.iter().flat_map(|w| [&w[..5], &w[5..]]).collect();
                (0..4)
                    .map(|g| {
                        halves[3 * g..3 * g + 3]
                            .iter()
                            .flat_map(|h| h.iter().copied())
                            .collect()
                    })
                    .collect()
            }
            _ => unreachable!(),
        };
        let group_size = 60 / divisor as usize;
        debug_assert!(groups.iter().all(|g| g.len() == group_size));
        partitions.push(DivisorGroups {
            divisor,
            group_size,
            groups,
        });
    }
    Ok(DivisorPartitionReport { partitions })
}

/// Maximum distance from the outer silhouette of the rescaled packing to
/// the boundary of the ideal hexagon inscribed in the unit circle.
///
/// The packing is rescaled so the corner centers of the outermost orbit lie
/// on the unit circle; those centers then sit exactly on the hexagon
/// boundary, and the silhouette is carried by the outer-orbit disc arcs
/// (tangent discs meet at single points, so inner gaps pinch closed). The
/// returned value is at most one rescaled disc diameter.
///
/// Panics when `max_rank` is 0; the measure needs at least one orbit.
pub fn hexagon_deviation(max_rank: u32) -> f64 {
    assert!(max_rank >= 1, "deviation needs at least one orbit");
    const SAMPLES: usize = 1440;
    let scale = 1.0 / f64::from(max_rank);
    let disc_radius = DISC_RADIUS * scale;
    let vertices = hexagon_vertices();
    let ring = orbit_coords(max_rank).expect("rank checked above");

    let mut max_distance = 0.0f64;
    for coord in ring {
        let (cx, cy) = coord.to_cartesian();
        let (cx, cy) = (cx * scale, cy * scale);
        for i in 0..SAMPLES {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / SAMPLES as f64;
            let p = (
                cx + disc_radius * theta.cos(),
                cy + disc_radius * theta.sin(),
            );
            let d = distance_to_hexagon(p, &vertices);
            if d > max_distance {
                max_distance = d;
            }
        }
    }
    max_distance
}

/// Vertices of the regular hexagon inscribed in the unit circle, one at
/// angle 0°.
pub fn hexagon_vertices() -> [(f64, f64); 6] {
    std::array::from_fn(|k| {
        let a = std::f64::consts::PI * k as f64 / 3.0;
        (a.cos(), a.sin())
    })
}

fn distance_to_hexagon(p: (f64, f64), vertices: &[(f64, f64); 6]) -> f64 {
    let mut best = f64::INFINITY;
    for k in 0..6 {
        let d = distance_to_segment(p, vertices[k], vertices[(k + 1) % 6]);
        if d < best {
            best = d;
        }
    }
    best
}

fn distance_to_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (abx, aby) = (b.0 - a.0, b.1 - a.1);
    let (apx, apy) = (p.0 - a.0, p.1 - a.1);
    let t = ((apx * abx + apy * aby) / (abx * abx + aby * aby)).clamp(0.0, 1.0);
    let (dx, dy) = (apx - t * abx, apy - t * aby);
    (dx * dx + dy * dy).sqrt()
}

/// Squared Euclidean distance between two lattice points in center-spacing
/// units; exact integer arithmetic.
pub fn squared_center_distance(a: AxialCoord, b: AxialCoord) -> i64 {
    let dq = i64::from(a.q) - i64::from(b.q);
    let dr = i64::from(a.r) - i64::from(b.r);
    dq * dq + dq * dr + dr * dr
}

/// Lookup table from disc center to `(rank, wedge)` over a packing.
pub fn wedge_map(packing: &DiscPacking) -> HashMap<AxialCoord, (u32, Option<u8>)> {
    packing
        .discs()
        .iter()
        .map(|d| (d.center, (d.rank, d.wedge)))
        .collect()
}
