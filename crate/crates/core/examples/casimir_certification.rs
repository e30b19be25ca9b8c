//! Symbolic certification of Casimir generators: each generator is checked
//! against every basis Lie derivative, then the system is shown to be
//! algebraically independent via an exact Jacobian rank at sampled points.

use takiff_lab::invariants::{casimir_generators, independence_rank_sampled, is_invariant};

fn main() {
    for (tag, rank) in [('A', 2), ('B', 2), ('C', 2), ('D', 3)] {
        let ca = takiff_lab::builders::classical(tag, rank).unwrap();
        let ad = ca.base.adjoint_rep();
        let gens = casimir_generators(&ca).unwrap();
        for (i, f) in gens.iter().enumerate() {
            let ok = is_invariant(&ad, f);
            println!("{tag}{rank} generator {i}: degree {}, invariant {ok}", f.total_degree());
            assert!(ok);
        }
        let jac = independence_rank_sampled(&gens, 8, 0);
        println!("{tag}{rank}: jacobian rank {jac} = rk");
        assert_eq!(jac, rank);
    }
}
