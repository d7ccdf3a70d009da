//! Randomized structural invariants: census conservation, swap symmetry,
//! the combiner's synchronization guarantee, and witness validity.

use proptest::prelude::*;

use ppmsync_core::dss::{construct_index1, construct_index2, Dss};
use ppmsync_core::ooc::Codebook;
use ppmsync_core::selfsync::{combine, splice, DEFAULT_WORK_LIMIT};

fn arbitrary_dss() -> impl Strategy<Value = Dss> {
    (4u64..24)
        .prop_flat_map(|n| {
            let universe: Vec<u64> = (0..n).collect();
            proptest::sample::subsequence(universe, 2..=(n as usize).min(8))
                .prop_flat_map(move |chosen| {
                    let len = chosen.len();
                    (Just(n), Just(chosen), 1..len)
                })
        })
        .prop_map(|(n, chosen, cut)| {
            let d0 = chosen[..cut].to_vec();
            let d1 = chosen[cut..].to_vec();
            Dss::new(n, d0, d1).expect("disjoint in-range sets")
        })
}

proptest! {
    #[test]
    fn census_counts_every_ordered_cross_pair(dss in arbitrary_dss()) {
        let census = dss.outer_difference_census();
        let total: u64 = census.iter().sum();
        prop_assert_eq!(total, 2 * dss.d0().len() as u64 * dss.d1().len() as u64);
        // Residue 0 never arises from disjoint sets.
        prop_assert_eq!(census[0], 0);
    }

    #[test]
    fn swapping_the_sets_preserves_the_census(dss in arbitrary_dss()) {
        let report = dss.verify();
        let swapped = dss.swapped();
        prop_assert_eq!(dss.outer_difference_census(), swapped.outer_difference_census());
        let swapped_report = swapped.verify();
        prop_assert_eq!(report.index, swapped_report.index);
        prop_assert_eq!(report.perfect, swapped_report.perfect);
        prop_assert_eq!(report.redundancy, swapped_report.redundancy);
    }

    #[test]
    fn splicing_preserves_length_and_edges(
        x in proptest::collection::vec(0u8..2, 6),
        y in proptest::collection::vec(0u8..2, 6),
        offset in 1usize..6,
    ) {
        let z = splice(&x, &y, offset).unwrap();
        prop_assert_eq!(z.len(), 6);
        prop_assert_eq!(&z[..offset], &x[6 - offset..]);
        prop_assert_eq!(&z[offset..], &y[..6 - offset]);
    }
}

/// Every combined code certifies at or above its marker's index, the
/// restricted index sits between the marker index and the full one, and
/// the stored witness reproduces the certified distance.
#[test]
fn combiner_guarantee_holds_across_small_markers() {
    let mut markers = Vec::new();
    for n in 4..=20u64 {
        if let Ok(dss) = construct_index1(n) {
            markers.push(dss);
        }
        if let Ok(dss) = construct_index2(n) {
            markers.push(dss);
        }
    }
    assert!(markers.len() >= 20);
    let mut certified_any = false;
    for marker in markers {
        let capacity = marker.n() - marker.redundancy();
        if capacity < 2 {
            continue;
        }
        let report = marker.verify();
        let payload = Codebook::ppm(capacity).unwrap();
        let mut code = combine(marker, payload).unwrap();
        let cert = code.certify(DEFAULT_WORK_LIMIT).unwrap().clone();
        assert!(
            cert.index >= report.index,
            "n = {}: certified {} below marker index {}",
            code.n(),
            cert.index,
            report.index
        );
        let restricted = cert.restricted_index.expect("marker coordinates were supplied");
        assert!(restricted >= report.index, "n = {}", code.n());
        assert!(cert.index >= restricted, "n = {}", code.n());
        // The witness splice must actually realize the certified distance.
        let w = cert.witness;
        let spliced = splice(code.word(w.x), code.word(w.y), w.offset).unwrap();
        let distance = spliced
            .iter()
            .zip(code.word(w.z))
            .filter(|(a, b)| a != b)
            .count() as u64;
        assert_eq!(distance, cert.index, "n = {}", code.n());
        certified_any = true;
    }
    assert!(certified_any);
}
