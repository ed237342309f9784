//! One self-checking report per graph class: classification, bounds, exact
//! metrics where feasible, and the verdicts tying them together.

use cutskel::workbench::{generate, report, GeneratorSpec, ReportOptions};

fn main() {
    let specs = [
        ("tree", GeneratorSpec::Tree { n: 7, seed: 3 }),
        ("cycle", GeneratorSpec::Cycle { n: 8 }),
        ("cactus", GeneratorSpec::Cactus { n: 10, seed: 5 }),
        (
            "almost-tree-2",
            GeneratorSpec::AlmostTree2 { n: 9, seed: 2 },
        ),
        ("complete", GeneratorSpec::Complete { n: 5 }),
        (
            "bipartite",
            GeneratorSpec::CompleteBipartite { parts: [3, 4] },
        ),
        (
            "tripartite",
            GeneratorSpec::CompleteMultipartite {
                parts: vec![2, 2, 3],
            },
        ),
    ];

    let opts = ReportOptions::default();
    for (label, spec) in specs {
        let g = generate(&spec).unwrap();
        let r = report(&g, &opts).unwrap();
        let m = r.metrics.as_ref().unwrap();
        println!(
            "{label:<14} {:<24} d={} in [{},{}]  w={} in [{},{}]  verdicts {}/{} {}",
            r.classification.most_specific.to_string(),
            m["diameter"],
            r.bounds.diameter.lo,
            r.bounds.diameter.hi,
            m["clique_number"],
            r.bounds.clique.lo,
            r.bounds.clique.hi,
            r.verdicts.iter().filter(|v| v.pass).count(),
            r.verdicts.len(),
            if r.pass { "ok" } else { "FAILED" }
        );
        assert!(r.pass);
    }
}
