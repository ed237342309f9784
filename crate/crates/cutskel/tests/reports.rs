//! Report verdicts over seeded instances of every class: zero failures.

use cutskel::workbench::{generate, report, GeneratorSpec, ReportOptions};

fn assert_passes(spec: &GeneratorSpec) {
    let g = generate(spec).unwrap();
    let opts = ReportOptions {
        budget: 200_000,
        ..ReportOptions::default()
    };
    let r = report(&g, &opts).unwrap();
    assert!(
        r.pass,
        "verdicts failed for {spec:?}: {:?}",
        r.verdicts.iter().filter(|v| !v.pass).collect::<Vec<_>>()
    );
}

#[test]
fn seeded_trees_pass() {
    for seed in 0..100 {
        assert_passes(&GeneratorSpec::Tree {
            n: 4 + (seed as usize % 7),
            seed,
        });
    }
}

#[test]
fn seeded_cacti_pass() {
    for seed in 0..100 {
        assert_passes(&GeneratorSpec::Cactus {
            n: 5 + (seed as usize % 6),
            seed,
        });
    }
}

#[test]
fn seeded_almost_trees_pass() {
    for seed in 0..100 {
        assert_passes(&GeneratorSpec::AlmostTree2 {
            n: 5 + (seed as usize % 6),
            seed,
        });
    }
}

#[test]
fn fixed_classes_pass() {
    for n in 3..=10 {
        assert_passes(&GeneratorSpec::Cycle { n });
    }
    for n in 2..=6 {
        assert_passes(&GeneratorSpec::Complete { n });
    }
    for (a, b) in [(2, 2), (2, 5), (3, 4), (4, 4), (5, 5)] {
        assert_passes(&GeneratorSpec::CompleteBipartite { parts: [a, b] });
    }
    for parts in [
        vec![2, 2, 2],
        vec![2, 3, 4],
        vec![2, 2, 2, 3],
        vec![3, 3, 3],
    ] {
        assert_passes(&GeneratorSpec::CompleteMultipartite { parts });
    }
}
