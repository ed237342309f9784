//! For a tree every pair of distinct cuts is adjacent exactly when their
//! symmetric difference is a single branch, so the skeleton of CUT(T) is the
//! hypercube graph on the edge set: regular of degree n-1 with diameter n-1.

use cutskel::workbench::{generate, GeneratorSpec};
use cutskel::{build_skeleton, diameter, Graph};

fn check(label: &str, g: &Graph) {
    let s = build_skeleton(g, 16).unwrap();
    let n = g.n();
    let degrees: Vec<usize> = (0..s.node_count() as u32).map(|v| s.degree(v)).collect();
    assert!(degrees.iter().all(|&d| d == n - 1));
    let d = diameter(&s).unwrap();
    assert_eq!(d as usize, n - 1);
    println!(
        "{label:<18} n={n}  nodes={}  degree={}  diameter={d}",
        s.node_count(),
        n - 1
    );
}

fn main() {
    let path = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    check("path P5", &path);

    let star = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
    check("star K1,5", &star);

    for seed in 0..4 {
        let g = generate(&GeneratorSpec::Tree { n: 8, seed }).unwrap();
        check(&format!("random tree #{seed}"), &g);
    }
}
