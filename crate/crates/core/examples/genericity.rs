//! Generic stabilizers by exact rank checks: adjoint genericity at regular
//! semisimple points, its failure on nilpotent algebras, coadjoint generic
//! stabilizers, and the contrast between a Takiff algebra and the
//! semi-direct product with the coadjoint module.

use takiff_lab::builders::{heisenberg, semidirect, sl2, takiff};
use takiff_lab::rational::q;
use takiff_lab::stabilizers::{
    adjoint_generic_check, coadjoint_generic_check, sample_regular_covector,
    sample_regular_element,
};

fn main() {
    // regular semisimple points of sl2 are generic, nilpotent ones are not
    let g = sl2();
    let h = vec![q(0), q(0), q(1)];
    let e = vec![q(1), q(0), q(0)];
    println!(
        "sl2 at h: generic {}",
        adjoint_generic_check(&g, &h).unwrap().passed()
    );
    println!(
        "sl2 at e: generic {}",
        adjoint_generic_check(&g, &e).unwrap().passed()
    );

    // the Heisenberg algebra has no generic adjoint stabilizer at all
    let h1 = heisenberg(1);
    let x = sample_regular_element(&h1, 8, 0);
    println!(
        "heisenberg(1) adjoint: generic {}",
        adjoint_generic_check(&h1, &x).unwrap().passed()
    );

    // coadjointly it does: the generic stabilizer is the center
    let xi = sample_regular_covector(&h1, 8, 0);
    let rep = coadjoint_generic_check(&h1, &xi).unwrap();
    println!(
        "heisenberg(1) coadjoint: generic {}, stabilizer dim {}",
        rep.passed(),
        rep.stabilizer.dim()
    );
    assert!(rep.stabilizer.contains(&[q(0), q(0), q(1)]));

    // the Takiff algebra of heisenberg(1) inherits a generic stabilizer,
    // while the semi-direct product with the coadjoint module has none
    let t = takiff(&h1, 1);
    let xi = sample_regular_covector(&t.total, 8, 0);
    println!(
        "heis1<1> coadjoint: generic {}",
        coadjoint_generic_check(&t.total, &xi).unwrap().passed()
    );
    let sd = semidirect(&h1, &h1.adjoint_rep().dual()).unwrap();
    let xi = sample_regular_covector(&sd.total, 8, 0);
    println!(
        "heis1 x| heis1* coadjoint: generic {}",
        coadjoint_generic_check(&sd.total, &xi).unwrap().passed()
    );
}
