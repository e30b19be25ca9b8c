//! Z2-contractions from involutions: the swap involution on g + g contracts
//! to the Takiff algebra g<1>, and every contraction keeps index = rk g.

use takiff_lab::builders::{classical, standard_involution, takiff, z2_contraction, PairSpec};

fn main() {
    // swap contraction of g + g is literally the Takiff algebra
    for rank in 1..=2 {
        let g = classical('A', rank).unwrap().base;
        let (ambient, inv) = standard_involution(&PairSpec::Swap(g.clone())).unwrap();
        let sd = z2_contraction(&ambient, &inv).unwrap();
        let t = takiff(&g, 1);
        assert_eq!(sd.total.structure_entries(), t.total.structure_entries());
        println!(
            "swap contraction of sl{0} + sl{0} equals sl{0}<1> (dim {1})",
            rank + 1,
            sd.total.dim
        );
    }

    // symmetric-pair contractions: index of the contraction = rk of the ambient
    for (label, spec, rank) in [
        ("(sl3, so3)", PairSpec::SlSo(3), 2),
        ("(sl4, sp4)", PairSpec::SlSp(4), 3),
        ("(sl4, so4)", PairSpec::SlSo(4), 3),
    ] {
        let (ambient, inv) = standard_involution(&spec).unwrap();
        let sd = z2_contraction(&ambient, &inv).unwrap();
        let ind = sd.total.index(8, 0);
        println!(
            "{label}: contraction dim {}, index {ind} = rk of ambient",
            sd.total.dim
        );
        assert!(sd.total.check_jacobi().ok);
        assert_eq!(ind, rank);
    }
}
