//! Epsilon-expansion of Casimirs over a Takiff algebra: every truncation
//! coefficient is itself an invariant of q<n>, and together they form a
//! system of the expected Jacobian rank (n+1) rk q.

use takiff_lab::builders::{classical, takiff};
use takiff_lab::invariants::{
    independence_rank_sampled, is_invariant, takiffize_invariant,
};

fn main() {
    let ca = classical('A', 1).unwrap();
    for n in 1..=2 {
        let t = takiff(&ca.base, n);
        let ad = t.total.adjoint_rep();
        let mut coeffs = Vec::new();
        for f in takiff_lab::invariants::casimir_generators(&ca).unwrap() {
            let exp = takiffize_invariant(&f, n);
            for (j, c) in exp.coefficients.iter().enumerate() {
                let ok = is_invariant(&ad, c);
                println!(
                    "sl2<{n}> coefficient {j}: degree {}, invariant {ok}",
                    c.total_degree()
                );
                assert!(ok);
            }
            coeffs.extend(exp.coefficients);
        }
        let rank = independence_rank_sampled(&coeffs, 8, 0);
        println!("sl2<{n}>: {} generators, jacobian rank {rank}", coeffs.len());
        assert_eq!(rank, (n + 1) * ca.rank);
    }
}
