//! Proper colorings of the skeleton give clique-number upper bounds. Cacti
//! get the plain binary-representation coloring; graphs at most two edges
//! away from a spanning tree get the parity-padded variant.

use cutskel::workbench::{generate, GeneratorSpec};
use cutskel::{
    brm_coloring, brm_star_coloring, build_skeleton, clique_number, verify_coloring, Graph,
};

fn main() {
    let cactus = generate(&GeneratorSpec::Cactus { n: 9, seed: 11 }).unwrap();
    let s = build_skeleton(&cactus, 16).unwrap();
    let col = brm_coloring(&cactus, &s).unwrap();
    assert_eq!(verify_coloring(&s, &col).unwrap(), None);
    let clique = clique_number(&s, 10_000_000);
    println!(
        "cactus n=9: brm uses {} colors (width {}), clique number {}",
        col.color_count(),
        col.width,
        clique.size
    );
    assert!(clique.size <= col.color_count());

    // Two chords over a spanning tree: outside the cactus class, but the
    // starred scheme still colors properly with one extra bit.
    let at2 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3), (1, 4)]).unwrap();
    let s = build_skeleton(&at2, 16).unwrap();
    assert!(brm_coloring(&at2, &s).is_err());
    let col = brm_star_coloring(&at2, &s).unwrap();
    assert_eq!(verify_coloring(&s, &col).unwrap(), None);
    let clique = clique_number(&s, 10_000_000);
    println!(
        "almost-tree(2) n=6: brm-star uses {} colors (width {}), clique number {}",
        col.color_count(),
        col.width,
        clique.size
    );
    assert!(clique.size <= col.color_count());
}
