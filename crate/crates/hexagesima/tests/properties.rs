//! Cross-module invariants: exhaustive sweeps where ranges are fixed,
//! proptest where the inputs are sampled.

use std::collections::HashSet;

use proptest::prelude::*;

use hexagesima::divisions::{
    circle_division_unequal, equal_division, wedge_angles, ChordMode, CONSTRUCTIBLE_PARTS,
};
use hexagesima::hexlattice::{
    build_packing, cumulative_discs, hexagon_deviation, orbit_coords, orbit_size,
    squared_center_distance, wedge_map, AxialCoord,
};
use hexagesima::sexagesimal::{
    abacus_add, parse_numeral, AbacusState, Notation, SexagesimalNumeral, ABACUS_CAPACITY,
};

#[test]
fn orbits_up_to_500_have_size_6k_distinct_at_distance_k() {
    for rank in 1..=500u32 {
        let coords = orbit_coords(rank).unwrap();
        assert_eq!(coords.len() as u64, orbit_size(rank).unwrap());
        assert_eq!(coords.len(), 6 * rank as usize);
        let set: HashSet<_> = coords.iter().copied().collect();
        assert_eq!(set.len(), coords.len(), "duplicates at rank {rank}");
        assert!(coords.iter().all(|c| c.hex_distance() == rank));
    }
}

#[test]
fn packing_counts_match_the_closed_form_up_to_100() {
    for max_rank in 1..=100u32 {
        let packing = build_packing(max_rank).unwrap();
        assert_eq!(
            packing.discs().len() as u64,
            cumulative_discs(max_rank, true)
        );
        // Exactly `rank` discs per (rank, wedge) cell.
        let mut per_cell = vec![[0u32; 6]; max_rank as usize + 1];
        for d in packing.discs().iter().skip(1) {
            per_cell[d.rank as usize][d.wedge.unwrap() as usize] += 1;
        }
        for rank in 1..=max_rank {
            assert_eq!(per_cell[rank as usize], [rank; 6]);
        }
    }
}

#[test]
fn packed_discs_are_tangent_or_apart_never_overlapping() {
    // Distinct lattice points are at least one diameter apart, so
    // distinctness plus one adjacent pair pins the minimum at exactly 1.
    for max_rank in [1u32, 5, 20, 100] {
        let packing = build_packing(max_rank).unwrap();
        let set: HashSet<AxialCoord> = packing.discs().iter().map(|d| d.center).collect();
        assert_eq!(set.len(), packing.discs().len());
        assert!(set.contains(&AxialCoord::new(1, 0)));
    }
    // Brute-force confirmation on a small packing.
    let packing = build_packing(8).unwrap();
    let centers: Vec<AxialCoord> = packing.discs().iter().map(|d| d.center).collect();
    let mut min_sq = i64::MAX;
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            min_sq = min_sq.min(squared_center_distance(centers[i], centers[j]));
        }
    }
    assert_eq!(min_sq, 1);
}

#[test]
fn rotating_a_packing_permutes_discs_and_advances_wedges() {
    for max_rank in [1u32, 4, 9] {
        let packing = build_packing(max_rank).unwrap();
        let map = wedge_map(&packing);
        for d in packing.discs() {
            let (rank, wedge) = map[&d.center.rotated_60()];
            assert_eq!(rank, d.rank);
            assert_eq!(wedge, d.wedge.map(|w| (w + 1) % 6));
        }
    }
}

#[test]
fn deviation_is_nonincreasing_and_bounded() {
    let mut previous = f64::INFINITY;
    for rank in 1..=50u32 {
        let d = hexagon_deviation(rank);
        assert!(d <= previous, "deviation grew at rank {rank}");
        assert!(d <= 1.0 / f64::from(rank), "above one rescaled diameter");
        previous = d;
    }
}

#[test]
fn wedge_sums_and_positivity_up_to_1000() {
    for n in 1..=1000u32 {
        let report = wedge_angles(n, ChordMode::Full).unwrap();
        let sum: f64 = report.rows.iter().map(|r| r.value_deg).sum();
        assert!((sum - 60.0).abs() < 1e-9, "n={n} sum={sum}");
        assert!(report.rows.iter().all(|r| r.value_deg > 0.0));
    }
}

#[test]
fn full_mode_is_mirror_symmetric() {
    for n in [2u32, 3, 10, 59, 60, 251] {
        let report = wedge_angles(n, ChordMode::Full).unwrap();
        for k in 0..n as usize {
            let mirror = n as usize - 1 - k;
            let delta = (report.rows[k].value_deg - report.rows[mirror].value_deg).abs();
            assert!(delta < 1e-12, "n={n} k={k} delta={delta}");
        }
    }
}

#[test]
fn half_mode_decreases_strictly_away_from_the_foot() {
    for n in [2u32, 30, 100, 1000] {
        let report = wedge_angles(n, ChordMode::Half).unwrap();
        for pair in report.rows.windows(2) {
            assert!(pair[1].value_deg < pair[0].value_deg, "n={n}");
        }
    }
}

#[test]
fn full_even_subdivisions_match_half_mode_middle_out() {
    for m in 1..=100u32 {
        let full = wedge_angles(2 * m, ChordMode::Full).unwrap();
        let half = wedge_angles(m, ChordMode::Half).unwrap();
        for k in 1..=m as usize {
            let delta =
                (full.rows[m as usize + k - 1].value_deg - half.rows[k - 1].value_deg).abs();
            assert!(delta < 1e-12, "m={m} k={k}");
        }
    }
}

#[test]
fn chord_refinement_never_grows_the_largest_angle() {
    let mut previous = f64::INFINITY;
    for n in 1..=200u32 {
        let report = wedge_angles(n, ChordMode::Full).unwrap();
        let max = report
            .rows
            .iter()
            .map(|r| r.value_deg)
            .fold(0.0f64, f64::max);
        assert!(max <= previous + 1e-12, "max angle grew at n={n}");
        previous = max;
    }
}

#[test]
fn equal_division_refinements_contain_previous_boundaries() {
    let mut previous: Option<Vec<f64>> = None;
    for parts in CONSTRUCTIBLE_PARTS {
        let division = equal_division(parts).unwrap();
        let set: Vec<f64> = division.boundary_angles_deg.clone();
        if let Some(prev) = previous {
            for angle in prev {
                assert!(set.contains(&angle), "parts={parts} lost boundary {angle}");
            }
        }
        previous = Some(set);
    }
}

#[test]
fn unequal_circle_division_replicates_wedges() {
    for n in [1u32, 3, 6, 60] {
        let angles = circle_division_unequal(n).unwrap();
        assert_eq!(angles.len(), 6 * n as usize);
        let sum: f64 = angles.iter().sum();
        assert!((sum - 360.0).abs() < 1e-8);
        for w in 1..6usize {
            for k in 0..n as usize {
                assert_eq!(angles[k], angles[w * n as usize + k]);
            }
        }
    }
}

#[test]
fn numeral_round_trip_is_exhaustive_below_a_million() {
    for v in 0..=1_000_000u128 {
        assert_eq!(SexagesimalNumeral::from_decimal(v).to_decimal(), v);
    }
}

proptest! {
    #[test]
    fn numeral_round_trip_random(v in 0..u128::from(ABACUS_CAPACITY)) {
        prop_assert_eq!(SexagesimalNumeral::from_decimal(v).to_decimal(), v);
    }

    #[test]
    fn numeral_round_trip_wide(v in any::<u128>()) {
        prop_assert_eq!(SexagesimalNumeral::from_decimal(v).to_decimal(), v);
    }

    #[test]
    fn abacus_addition_matches_integer_addition(
        a in 0..ABACUS_CAPACITY,
        b in 0..ABACUS_CAPACITY,
    ) {
        let lhs = AbacusState::from_value(a).unwrap();
        let rhs = AbacusState::from_value(b).unwrap();
        match a.checked_add(b).filter(|&s| s < ABACUS_CAPACITY) {
            Some(expected) => {
                let (sum, trace) = abacus_add(&lhs, &rhs).unwrap();
                prop_assert_eq!(sum.value(), expected);
                // Carry locality: one token at most moves one place, and
                // the normalized result never exceeds 59 anywhere.
                for step in &trace {
                    prop_assert!(step.before <= 119);
                    prop_assert_eq!(step.carry_out, step.before >= 60);
                }
                prop_assert!(sum.places().iter().all(|&p| p <= 59));
            }
            None => {
                prop_assert!(abacus_add(&lhs, &rhs).is_err());
            }
        }
    }

    #[test]
    fn parse_format_identity_both_notations(digits in proptest::collection::vec(0u8..=59, 1..=8)) {
        let numeral = SexagesimalNumeral::new(digits).unwrap();
        let colon = parse_numeral(&numeral.format(Notation::Colon)).unwrap();
        prop_assert_eq!(&colon, &numeral);
        let prime = parse_numeral(&numeral.format(Notation::Prime)).unwrap();
        prop_assert_eq!(&prime, &numeral);
    }
}
