//! Serialization invariants: parsing a canonically written file gives back
//! the same value, and rewriting reproduces the bytes.

use proptest::prelude::*;

use skewbrace::brace::enumerate_skew_braces;
use skewbrace::catalog::groups_of_order;
use skewbrace::io;

fn arb_group() -> impl Strategy<Value = skewbrace::FiniteGroup> {
    // random catalog group under a random unit-preserving relabeling
    (1usize..=8)
        .prop_flat_map(|n| {
            let groups = groups_of_order(n);
            (0..groups.len(), Just(groups), proptest::collection::vec(any::<u32>(), n))
        })
        .prop_map(|(i, groups, keys)| {
            let g = &groups[i].1;
            let n = g.order();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.sort_by_key(|&x| if x == g.unit() { (0, 0) } else { (1, keys[x]) });
            // perm maps new index -> old element; invert for relabeling
            let mut new_of_old = vec![0; n];
            for (new, &old) in perm.iter().enumerate() {
                new_of_old[old] = new;
            }
            let rows: Vec<Vec<usize>> = (0..n)
                .map(|a| {
                    (0..n).map(|b| new_of_old[g.mul(perm[a], perm[b])]).collect()
                })
                .collect();
            skewbrace::FiniteGroup::from_table(rows, 0).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_files_round_trip(g in arb_group()) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.json");
        let text = io::to_canonical_json(&io::group_to_json(&g));
        std::fs::write(&path, &text).unwrap();
        let loaded = io::load_group(&path).unwrap();
        prop_assert_eq!(&loaded, &g);
        prop_assert_eq!(io::to_canonical_json(&io::group_to_json(&loaded)), text);
    }

    #[test]
    fn pair_map_files_round_trip(p in 1usize..6, q in 1usize..6, seed in any::<u64>()) {
        // a deterministic pseudo-random total pair map
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        let table: Vec<(usize, usize)> =
            (0..p * q).map(|_| (next() % p, next() % q)).collect();
        let map = skewbrace::PairMap::new(p, q, table).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        let text = io::to_canonical_json(&io::pair_map_to_json(&map));
        std::fs::write(&path, &text).unwrap();
        let loaded = io::load_pair_map(&path).unwrap();
        prop_assert_eq!(&loaded, &map);
        prop_assert_eq!(io::to_canonical_json(&io::pair_map_to_json(&loaded)), text);
    }
}

#[test]
fn every_small_brace_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=6 {
        for (name, g) in groups_of_order(n) {
            for (i, brace) in enumerate_skew_braces(&g).unwrap().iter().enumerate() {
                let path = dir.path().join(format!("{name}_{i}.json"));
                let text = io::to_canonical_json(&io::brace_to_json(brace));
                std::fs::write(&path, &text).unwrap();
                let loaded = io::load_brace(&path).unwrap();
                assert_eq!(&loaded, brace);
                assert_eq!(io::to_canonical_json(&io::brace_to_json(&loaded)), text);
            }
        }
    }
}
