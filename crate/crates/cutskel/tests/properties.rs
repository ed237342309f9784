//! Randomized invariants over the public API.

use cutskel::workbench::{generate, maxcut_bruteforce, GeneratorSpec};
use cutskel::{brm_star, is_adjacent, Cut, Graph};
use proptest::prelude::*;

fn random_graph(n: usize, seed: u64) -> Graph {
    let spec = match seed % 3 {
        0 => GeneratorSpec::Tree { n, seed },
        1 => GeneratorSpec::Cactus { n, seed },
        _ => GeneratorSpec::AlmostTree2 { n, seed },
    };
    generate(&spec).unwrap()
}

proptest! {
    #[test]
    fn graph_text_round_trips(n in 2usize..=12, seed in any::<u64>()) {
        let g = random_graph(n, seed);
        let back = Graph::parse(&g.to_text()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.weights(), g.weights());
    }

    #[test]
    fn cuts_canonicalize_to_the_complement_without_vertex_zero(
        mask in any::<u64>(),
        n in 1usize..=16,
    ) {
        let c = Cut::from_mask(mask & ((1 << n) - 1), n);
        prop_assert_eq!(c.mask() & 1, 0);
        prop_assert!(c.index() < 1 << (n - 1));
        prop_assert_eq!(Cut::from_index(c.index()), c);
    }

    #[test]
    fn adjacency_is_symmetric_and_translation_invariant(
        n in 3usize..=9,
        seed in any::<u64>(),
        picks in any::<[u64; 3]>(),
    ) {
        let g = random_graph(n, seed);
        let cuts = g.cut_count();
        let x = Cut::from_index(picks[0] % cuts);
        let y = Cut::from_index(picks[1] % cuts);
        let z = Cut::from_index(picks[2] % cuts);
        prop_assume!(x != y);
        let forward = is_adjacent(&g, x, y).unwrap();
        prop_assert_eq!(is_adjacent(&g, y, x).unwrap(), forward);
        // Adjacency depends only on the symmetric difference class, so
        // translating both cuts by any third cut preserves it.
        let xz = Cut::from_mask(x.mask() ^ z.mask(), n);
        let yz = Cut::from_mask(y.mask() ^ z.mask(), n);
        prop_assert_eq!(is_adjacent(&g, xz, yz).unwrap(), forward);
    }

    #[test]
    fn maxcut_dominates_every_cut(n in 2usize..=10, seed in any::<u64>(), probe in any::<u64>()) {
        let g = random_graph(n, seed);
        let best = maxcut_bruteforce(&g, 24).unwrap();
        let k = probe % g.cut_count();
        prop_assert!(best.weight >= g.cut_weight(Cut::from_index(k)));
    }

    #[test]
    fn brm_star_rows_have_odd_parity(k in 1usize..=300) {
        let m = brm_star(k);
        for i in 1..=k {
            prop_assert_eq!(m.row(i).count_ones() % 2, 1);
        }
    }
}
