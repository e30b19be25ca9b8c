//! Builds classical matrix Lie algebras, checks the Jacobi identity, and
//! verifies index = rank on a few of them.

use takiff_lab::builders::classical;

fn main() {
    for (tag, rank) in [('A', 3), ('B', 2), ('C', 3), ('D', 4)] {
        let ca = classical(tag, rank).unwrap();
        let jacobi = ca.base.check_jacobi();
        let index = ca.base.index(8, 0);
        println!(
            "{tag}{rank}: dim {} (matrices {}x{}), jacobi {}, index {index}",
            ca.base.dim, ca.n, ca.n, jacobi.ok
        );
        assert!(jacobi.ok);
        assert_eq!(index, rank);
    }

    let heis = takiff_lab::builders::heisenberg(2);
    println!(
        "heisenberg(2): dim {}, jacobi {}, index {}",
        heis.dim,
        heis.check_jacobi().ok,
        heis.index(8, 0)
    );

    let borel = takiff_lab::builders::borel(&classical('A', 3).unwrap()).unwrap();
    println!(
        "borel(sl4): dim {}, index {}",
        borel.dim,
        borel.index(8, 0)
    );
}
