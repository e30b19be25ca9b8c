//! Two independent computations of the contraction quotient dimension must
//! agree: a torus fixed-space count inside the contraction, and an ambient
//! centralizer dimension at an embedded regular element.

use takiff_lab::builders::{sl2, standard_involution, z2_contraction, PairSpec};
use takiff_lab::stabilizers::contraction_dims;

fn main() {
    for (label, spec) in [
        ("(sl3, so3)", PairSpec::SlSo(3)),
        ("(sl4, so4)", PairSpec::SlSo(4)),
        ("(sl4, sp4)", PairSpec::SlSp(4)),
        ("swap sl2", PairSpec::Swap(sl2())),
    ] {
        let (ambient, inv) = standard_involution(&spec).unwrap();
        let (g0, _) = inv.eigenspaces(&ambient);
        let sd = z2_contraction(&ambient, &inv).unwrap();
        let cd = contraction_dims(&sd, &ambient, &g0, 8, 0).unwrap();
        println!(
            "{label}: torus method {}, centralizer method {}, index {}",
            cd.method_torus, cd.method_centralizer, cd.index_total
        );
        assert!(cd.agree());
    }
}
