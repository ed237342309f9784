//! Explicit cliques on the skeleton: a Hamming ball of cuts for cycles and
//! the symmetric-cut family for complete multipartite graphs.

use cutskel::workbench::{generate, GeneratorSpec};
use cutskel::{build_skeleton, hamming_ball_clique, symmetric_cut_clique, verify_clique};

fn main() {
    let c7 = generate(&GeneratorSpec::Cycle { n: 7 }).unwrap();
    let fam = hamming_ball_clique(&c7).unwrap();
    let s = build_skeleton(&c7, 16).unwrap();
    assert_eq!(verify_clique(&s, &fam.indices()).unwrap(), None);
    println!(
        "C7: {} construction, {} mutually adjacent cuts",
        fam.construction,
        fam.len()
    );
    for c in &fam.cuts {
        println!("  {c}");
    }

    let k233 = generate(&GeneratorSpec::CompleteMultipartite {
        parts: vec![2, 3, 3],
    })
    .unwrap();
    let fam = symmetric_cut_clique(&k233).unwrap();
    let s = build_skeleton(&k233, 16).unwrap();
    assert_eq!(verify_clique(&s, &fam.indices()).unwrap(), None);
    println!(
        "\nK2,3,3: {} construction, {} mutually adjacent cuts",
        fam.construction,
        fam.len()
    );
    for c in &fam.cuts {
        println!("  {c}");
    }
}
