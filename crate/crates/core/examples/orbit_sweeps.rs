//! Exhaustive inequality sweeps over nilpotent-orbit partitions: the Takiff
//! bound L >= 0 in types A-D, the contraction bound for sp/so, and the
//! equidimensionality condition for n-fold products.

use takiff_lab::orbits::{not_vain_bounds, sweep, Inequality};

fn main() {
    for tag in ['A', 'B', 'C', 'D'] {
        let rep = sweep(Inequality::BrilTakiff, tag, 8).unwrap();
        println!(
            "bril-takiff {tag} rank<=8: {} orbits, {} violations, {} equality cases",
            rep.records.len(),
            rep.violations.len(),
            rep.equality_cases.len()
        );
        assert!(rep.violations.is_empty());
    }

    for tag in ['B', 'C', 'D'] {
        let rep = sweep(Inequality::Brilliant, tag, 8).unwrap();
        println!(
            "brilliant {tag} rank<=8: {} orbits, {} violations",
            rep.records.len(),
            rep.violations.len()
        );
        assert!(rep.violations.is_empty());
    }

    // equidimensionality holds for n = 2 copies but breaks at n = 3
    let rep = not_vain_bounds('A', 6, 2).unwrap();
    println!("not-vain A rank<=6, n=2: {} violations", rep.violations.len());
    assert!(rep.violations.is_empty());
    let rep = not_vain_bounds('A', 3, 3).unwrap();
    println!(
        "not-vain A rank<=3, n=3: violations at {:?}",
        rep.violations
            .iter()
            .map(|(r, p)| format!("rank {r}: {p}"))
            .collect::<Vec<_>>()
    );
    assert!(rep
        .violations
        .iter()
        .any(|(r, p)| *r == 3 && p.parts == vec![3, 1]));
}
