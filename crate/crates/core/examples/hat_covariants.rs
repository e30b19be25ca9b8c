//! Covariants and their hat-lifts: an equivariant map F: g -> V* gives the
//! invariant (x, v) -> <F(x), v> of the semi-direct product g x| V, checked
//! symbolically here for the adjoint identity map and for x -> x^2 J on sp4.

use takiff_lab::builders::{classical, semidirect};
use takiff_lab::invariants::{
    equivariance_check, hat_covariant, is_invariant, sp_covariants, trace_identity_covariant,
};

fn main() {
    // identity covariant on sl2 and sl3 (adjoint module, trace-form pairing)
    for rank in 1..=2 {
        let ca = classical('A', rank).unwrap();
        let sd = semidirect(&ca.base, &ca.base.adjoint_rep()).unwrap();
        let f = trace_identity_covariant(&ca);
        let hat = hat_covariant(&f, &sd).unwrap();
        let ok = is_invariant(&sd.total.adjoint_rep(), &hat);
        println!("sl{}: hat of the identity covariant invariant: {ok}", rank + 1);
        assert!(ok);
    }

    // x -> x^2 J covariants on sp4 into the reduced wedge module
    let ca = classical('C', 2).unwrap();
    let module = &ca.rep_catalog["wedge2_reduced"];
    let covs = sp_covariants(&ca).unwrap();
    for (i, f) in covs.iter().enumerate() {
        let equiv = equivariance_check(f, &ca.base.adjoint_rep(), &module.dual());
        println!("sp4 covariant {i}: equivariant {equiv}");
        assert!(equiv);
        let sd = semidirect(&ca.base, module).unwrap();
        let hat = hat_covariant(f, &sd).unwrap();
        let ok = is_invariant(&sd.total.adjoint_rep(), &hat);
        println!("sp4 covariant {i}: hat-lift invariant {ok}");
        assert!(ok);
    }
}
