//! End-to-end acceptance suite: each test certifies one headline claim of
//! the library with exact arithmetic and prints a single pass/fail line
//! through the harness.

use takiff_lab::builders::{
    borel, classical, heisenberg, semidirect, sl2, standard_involution, takiff, z2_contraction,
    PairSpec,
};
use takiff_lab::invariants::{
    casimir_generators, equivariance_check, hat_covariant, independence_rank_sampled,
    is_invariant, so_covariants, sp_covariants, takiffize_invariant, trace_identity_covariant,
};
use takiff_lab::orbits::{
    enumerate_partitions, matrix_oracle, not_vain_bounds, sweep, Inequality, OrbitRecord,
};
use takiff_lab::rational::{q, Q};
use takiff_lab::stabilizers::{
    adjoint_generic_check, coadjoint_generic_check, contraction_dims, sample_regular_covector,
    sample_regular_element, sgp_transfer_check,
};

fn regular_diagonal(rank: usize) -> Vec<Q> {
    // coordinates on the Cartan part (last `rank` basis vectors) giving a
    // diagonal matrix with pairwise distinct entries
    let ca = classical('A', rank).unwrap();
    let mut x = vec![q(0); ca.base.dim];
    let mut acc = 0i64;
    for i in 0..rank {
        acc += 1 << i;
        x[ca.base.dim - rank + i] = q(acc);
    }
    x
}

#[test]
fn structural_validity() {
    let mut algebras = Vec::new();
    for r in 1..=5 {
        algebras.push(classical('A', r).unwrap().base);
    }
    for r in 1..=4 {
        algebras.push(classical('B', r).unwrap().base);
    }
    for r in 2..=4 {
        algebras.push(classical('C', r).unwrap().base);
    }
    for r in 2..=5 {
        algebras.push(classical('D', r).unwrap().base);
    }
    for n in 1..=3 {
        algebras.push(heisenberg(n));
    }
    for r in 1..=4 {
        algebras.push(borel(&classical('A', r).unwrap()).unwrap());
    }
    for tag_rank in [('A', 1), ('A', 2), ('B', 2), ('C', 2)] {
        let g = classical(tag_rank.0, tag_rank.1).unwrap().base;
        for n in 1..=2 {
            algebras.push(takiff(&g, n).total);
        }
    }
    for (tag, rank) in [('A', 2), ('B', 2), ('C', 2), ('D', 3)] {
        let ca = classical(tag, rank).unwrap();
        for rep in ca.rep_catalog.values() {
            algebras.push(semidirect(&ca.base, rep).unwrap().total);
        }
    }
    for spec in [
        PairSpec::SlSo(3),
        PairSpec::SlSo(4),
        PairSpec::SlSo(5),
        PairSpec::SlSo(6),
        PairSpec::SlSp(4),
        PairSpec::SlSp(6),
        PairSpec::Swap(sl2()),
        PairSpec::Swap(classical('A', 2).unwrap().base),
    ] {
        let (ambient, inv) = standard_involution(&spec).unwrap();
        algebras.push(z2_contraction(&ambient, &inv).unwrap().total);
    }
    for alg in &algebras {
        let rep = alg.check_jacobi();
        assert!(rep.ok, "jacobi failed at {:?}", rep.first_failure);
    }
    println!("structural_validity: {} algebras pass", algebras.len());
}

#[test]
fn index_identities() {
    for r in 1..=5 {
        assert_eq!(classical('A', r).unwrap().base.index(8, 0), r, "A{r}");
        assert_eq!(classical('B', r).unwrap().base.index(8, 0), r, "B{r}");
        if r >= 2 {
            assert_eq!(classical('C', r).unwrap().base.index(8, 0), r, "C{r}");
            assert_eq!(classical('D', r).unwrap().base.index(8, 0), r, "D{r}");
        }
    }
    let bases = vec![
        classical('A', 1).unwrap().base,
        classical('A', 2).unwrap().base,
        heisenberg(1),
    ];
    for g in &bases {
        let ind = g.index(8, 0);
        for n in 1..=3 {
            assert_eq!(takiff(g, n).total.index(10, 0), (n + 1) * ind);
        }
    }
    for (spec, rank) in [
        (PairSpec::SlSo(3), 2),
        (PairSpec::SlSp(4), 3),
        (PairSpec::SlSo(4), 3),
        (PairSpec::Swap(sl2()), 2),
    ] {
        let (ambient, inv) = standard_involution(&spec).unwrap();
        let sd = z2_contraction(&ambient, &inv).unwrap();
        assert_eq!(sd.total.index(8, 0), rank);
    }
    for n in 1..=3 {
        assert_eq!(heisenberg(n).index(8, 0), 1);
    }
    for n in 2..=5usize {
        let b = borel(&classical('A', n - 1).unwrap()).unwrap();
        assert_eq!(b.index(8, 0), (n - 1) / 2, "borel sl{n}");
    }
    println!("index_identities: all checked");
}

#[test]
fn contraction_isomorphism() {
    for rank in 1..=2 {
        let g = classical('A', rank).unwrap().base;
        let (ambient, inv) = standard_involution(&PairSpec::Swap(g.clone())).unwrap();
        let sd = z2_contraction(&ambient, &inv).unwrap();
        let t = takiff(&g, 1);
        assert_eq!(sd.total.structure_entries(), t.total.structure_entries());
    }
    println!("contraction_isomorphism: swap contraction equals level-1 Takiff");
}

#[test]
fn takiff_invariant_certification() {
    for (tag, rank) in [('A', 1), ('A', 2), ('C', 2)] {
        let ca = classical(tag, rank).unwrap();
        for n in 1..=2 {
            let t = takiff(&ca.base, n);
            let ad = t.total.adjoint_rep();
            let mut coeffs = Vec::new();
            for f in casimir_generators(&ca).unwrap() {
                for c in takiffize_invariant(&f, n).coefficients {
                    assert!(is_invariant(&ad, &c), "{tag}{rank} level {n}");
                    coeffs.push(c);
                }
            }
            let jac = independence_rank_sampled(&coeffs, 8, 0);
            assert_eq!(jac, (n + 1) * rank, "{tag}{rank} level {n}");
        }
    }
    println!("takiff_invariant_certification: all coefficients invariant, full rank");
}

#[test]
fn hat_covariant_invariance() {
    for rank in 1..=2 {
        let ca = classical('A', rank).unwrap();
        let sd = semidirect(&ca.base, &ca.base.adjoint_rep()).unwrap();
        let hat = hat_covariant(&trace_identity_covariant(&ca), &sd).unwrap();
        assert!(is_invariant(&sd.total.adjoint_rep(), &hat));
    }
    let ca = classical('C', 2).unwrap();
    let module = &ca.rep_catalog["wedge2_reduced"];
    let sd = semidirect(&ca.base, module).unwrap();
    for f in sp_covariants(&ca).unwrap() {
        let hat = hat_covariant(&f, &sd).unwrap();
        assert!(is_invariant(&sd.total.adjoint_rep(), &hat));
    }
    println!("hat_covariant_invariance: all hat-lifts invariant");
}

#[test]
fn covariant_equivariance() {
    for (tag, rank, module_name) in [
        ('C', 2, "wedge2_reduced"),
        ('C', 3, "wedge2_reduced"),
        ('B', 2, "sym2_traceless"),
        ('B', 3, "sym2_traceless"),
        ('D', 4, "sym2_traceless"),
    ] {
        let ca = classical(tag, rank).unwrap();
        let module = &ca.rep_catalog[module_name];
        let covs = if tag == 'C' {
            sp_covariants(&ca).unwrap()
        } else {
            so_covariants(&ca).unwrap()
        };
        assert!(!covs.is_empty());
        for f in &covs {
            assert!(
                equivariance_check(f, &ca.base.adjoint_rep(), &module.dual()),
                "{tag}{rank}"
            );
        }
    }
    println!("covariant_equivariance: all basic covariants equivariant");
}

#[test]
fn orbit_formula_oracle_agreement() {
    let mut cases = 0;
    for (tag, sizes) in [
        ('A', vec![2, 3, 4, 5, 6, 7, 8]),
        ('B', vec![3, 5, 7]),
        ('C', vec![2, 4, 6, 8]),
        ('D', vec![4, 6, 8]),
    ] {
        for size in sizes {
            for p in enumerate_partitions(tag, size).unwrap() {
                if tag == 'A' && p.parts == vec![1] {
                    continue;
                }
                let formula = OrbitRecord::from_partition(&p).unwrap();
                let oracle = matrix_oracle(&p).unwrap();
                assert_eq!(formula.centralizer_dim, oracle.centralizer_dim, "{tag} {p}");
                assert_eq!(formula.stratum_index, oracle.stratum_index, "{tag} {p}");
                assert_eq!(formula.rank_dpi, oracle.rank_dpi, "{tag} {p}");
                cases += 1;
            }
        }
    }
    println!("orbit_formula_oracle_agreement: {cases} cases agree");
}

#[test]
fn inequality_sweeps() {
    for tag in ['A', 'B', 'C', 'D'] {
        let rep = sweep(Inequality::BrilTakiff, tag, 10).unwrap();
        assert!(rep.violations.is_empty(), "type {tag}");
        if tag == 'A' {
            for (_, p) in &rep.equality_cases {
                assert!(p.parts.len() <= 2);
            }
            for (rank, rec) in &rep.records {
                assert_eq!(rec.partition.parts.len() <= 2, rec.l_takiff == 0, "rank {rank}");
            }
        }
        if tag == 'C' {
            for (_, rec) in &rep.records {
                assert_eq!(rec.partition.dual().parts[0] <= 2, rec.l_takiff == 0);
            }
        }
    }
    // contraction bound up to so20 / sp20
    assert!(sweep(Inequality::Brilliant, 'C', 10).unwrap().violations.is_empty());
    assert!(sweep(Inequality::Brilliant, 'B', 9).unwrap().violations.is_empty());
    assert!(sweep(Inequality::Brilliant, 'D', 10).unwrap().violations.is_empty());
    // equidimensionality: clean for two copies, broken at the subregular for three
    for tag in ['A', 'B', 'C', 'D'] {
        assert!(not_vain_bounds(tag, 8, 2).unwrap().violations.is_empty());
    }
    let rep = not_vain_bounds('A', 3, 3).unwrap();
    assert!(rep
        .violations
        .iter()
        .any(|(rank, p)| *rank == 3 && p.parts == vec![3, 1]));
    println!("inequality_sweeps: all bounds certified");
}

#[test]
fn genericity_suite() {
    // regular semisimple points are generic, with both side conditions
    for rank in 1..=3 {
        let ca = classical('A', rank).unwrap();
        let report = adjoint_generic_check(&ca.base, &regular_diagonal(rank)).unwrap();
        assert!(report.passed(), "sl{}: {:?}", rank + 1, report.checks);
        assert!(report.checks["self_normalizing_centralizer"]);
        assert!(report.checks["coadjoint_decomposition"]);
    }
    let h1 = heisenberg(1);
    let x = sample_regular_element(&h1, 8, 0);
    assert!(!adjoint_generic_check(&h1, &x).unwrap().passed());

    // transfer conditions for semi-direct products over reductive algebras
    let g = sl2();
    let sd = semidirect(&g, &g.adjoint_rep()).unwrap();
    assert!(sgp_transfer_check(&sd, &[q(0), q(0), q(1)]).unwrap().passed());
    let a2 = classical('A', 2).unwrap();
    let sd = semidirect(&a2.base, &a2.rep_catalog["defining"]).unwrap();
    assert!(sgp_transfer_check(&sd, &regular_diagonal(2)).unwrap().passed());
    let b1 = classical('B', 1).unwrap();
    let sd = semidirect(&b1.base, &b1.rep_catalog["sym2_traceless"]).unwrap();
    let x = sample_regular_element(&b1.base, 8, 0);
    assert!(sgp_transfer_check(&sd, &x).unwrap().passed());

    // coadjoint generic stabilizer of the Heisenberg algebra is its center
    let xi = sample_regular_covector(&h1, 8, 0);
    let report = coadjoint_generic_check(&h1, &xi).unwrap();
    assert!(report.passed());
    let center = h1.center();
    assert_eq!(report.stabilizer.dim(), center.dim());
    assert!(report.stabilizer.contains_subspace(&center));
    println!("genericity_suite: all criteria behave as certified");
}

#[test]
fn contraction_dimension_agreement() {
    for spec in [
        PairSpec::SlSo(3),
        PairSpec::SlSo(4),
        PairSpec::SlSo(5),
        PairSpec::SlSp(4),
        PairSpec::Swap(sl2()),
        PairSpec::Swap(classical('A', 2).unwrap().base),
    ] {
        let (ambient, inv) = standard_involution(&spec).unwrap();
        let (g0, _) = inv.eigenspaces(&ambient);
        let sd = z2_contraction(&ambient, &inv).unwrap();
        let cd = contraction_dims(&sd, &ambient, &g0, 8, 0).unwrap();
        assert!(cd.agree(), "{cd:?}");
    }
    println!("contraction_dimension_agreement: both methods agree on every pair");
}
