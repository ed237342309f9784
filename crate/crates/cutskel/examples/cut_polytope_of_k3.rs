//! The smallest interesting cut polytope: CUT(K3) is a simplex, so every
//! pair of cut vectors is adjacent on the skeleton.

use cutskel::{build_skeleton, certify_adjacent, Cut, Graph};

fn main() {
    let g = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();

    println!("cuts of K3 and their incidence vectors:");
    for k in 0..g.cut_count() {
        let s = Cut::from_index(k);
        println!("  {:>8}  v = {}", s.to_string(), g.cut_set(s));
    }

    let s = build_skeleton(&g, 16).unwrap();
    println!(
        "\nskeleton: {} nodes, {} edges (complete graph K{})",
        s.node_count(),
        s.edge_count(),
        s.node_count()
    );

    // Each edge comes with an objective certificate: a weight vector whose
    // only maximizing cuts are the two endpoints.
    for a in 0..g.cut_count() {
        for b in (a + 1)..g.cut_count() {
            let (x, y) = (Cut::from_index(a), Cut::from_index(b));
            let cert = certify_adjacent(&g, x, y, 12).unwrap();
            assert!(cert.verified);
            println!(
                "  {:>8} -- {:<8}  certificate {:?}",
                x.to_string(),
                y.to_string(),
                cert.coeffs
            );
        }
    }
}
