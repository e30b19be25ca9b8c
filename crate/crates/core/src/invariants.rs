//! Symbolic invariant theory: Lie derivatives, Casimir generators, covariant
//! hat-lifts, equivariance certification, and epsilon-expansion Takiffization.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::builders::{pair_module_matrices, ClassicalAlgebra, SemidirectData};
use crate::error::{Error, Result};
use crate::lie::Representation;
use crate::linalg::Mat;
use crate::poly::{charpoly_coefficients, pfaffian_poly, PolyMap, PolyMatrix, Polynomial};
use crate::rational::Q;

/// Derivative of `f` along the vector field v ↦ ρ(e_i)·v.
pub fn lie_derivative(rep: &Representation, f: &Polynomial, i: usize) -> Result<Polynomial> {
    if f.num_vars != rep.dim_module {
        return Err(Error::DimensionMismatch {
            expected: rep.dim_module,
            got: f.num_vars,
        });
    }
    let nv = f.num_vars;
    let mut out = Polynomial::zero(nv);
    for k in 0..nv {
        let df = f.derivative(k);
        if df.is_zero() {
            continue;
        }
        // (ρ(e_i) v)_k as a linear polynomial
        let mut lin = Polynomial::zero(nv);
        for (l, c) in rep.action[i].data[k].iter().enumerate() {
            if !c.is_zero() {
                lin = lin.add(&Polynomial::var(nv, l).scale(c));
            }
        }
        if !lin.is_zero() {
            out = out.add(&lin.mul(&df));
        }
    }
    Ok(out)
}

/// Fully symbolic invariance: the Lie derivative vanishes identically for
/// every basis element of the acting algebra.
pub fn is_invariant(rep: &Representation, f: &Polynomial) -> bool {
    if f.num_vars != rep.dim_module {
        return false;
    }
    (0..rep.algebra.dim)
        .into_par_iter()
        .all(|i| lie_derivative(rep, f, i).map(|p| p.is_zero()).unwrap_or(false))
}

/// Rank-many algebraically independent adjoint invariants: characteristic
/// polynomial coefficients for type A; even trace powers for B and C; even
/// trace powers plus the Pfaffian for D.
pub fn casimir_generators(ca: &ClassicalAlgebra) -> Result<Vec<Polynomial>> {
    let x = PolyMatrix::generic_element(&ca.matrix_basis);
    match ca.type_tag {
        'A' => {
            let cs = charpoly_coefficients(&x);
            // c1 = -tr = 0 on sl; keep degrees 2..N
            Ok(cs.into_iter().skip(1).collect())
        }
        'B' | 'C' => {
            let x2 = x.mul(&x);
            let mut out = Vec::with_capacity(ca.rank);
            let mut p = x2.clone();
            for _ in 0..ca.rank {
                out.push(p.trace());
                p = p.mul(&x2);
            }
            Ok(out)
        }
        'D' => {
            if ca.rank > 6 {
                return Err(Error::Unsupported(
                    "D-type Pfaffian generator limited to rank <= 6".into(),
                ));
            }
            let form = ca
                .form
                .as_ref()
                .ok_or_else(|| Error::Unsupported("missing form".into()))?;
            let x2 = x.mul(&x);
            let mut out = Vec::with_capacity(ca.rank);
            let mut p = x2.clone();
            for _ in 0..ca.rank - 1 {
                out.push(p.trace());
                p = p.mul(&x2);
            }
            let fx = PolyMatrix::from_constant(&form.matrix, ca.base.dim).mul(&x);
            out.push(pfaffian_poly(&fx));
            Ok(out)
        }
        t => Err(Error::Unsupported(format!("casimirs for type {t:?}"))),
    }
}

/// Gradient of `f` as a polynomial map into the dual space.
pub fn differential(f: &Polynomial) -> PolyMap {
    PolyMap::new(
        f.num_vars,
        (0..f.num_vars).map(|i| f.derivative(i)).collect(),
    )
}

/// Ŵ F(x, v) = ⟨F(x), v⟩ on the semidirect product q⋉V, with F a polynomial
/// map from q into V* coordinates.
pub fn hat_covariant(f_map: &PolyMap, sd: &SemidirectData) -> Result<Polynomial> {
    let dq = sd.source_rep.algebra.dim;
    let dv = sd.source_rep.dim_module;
    if f_map.domain_dim != dq || f_map.codomain_dim != dv {
        return Err(Error::DimensionMismatch {
            expected: dq,
            got: f_map.domain_dim,
        });
    }
    let total = dq + dv;
    let mut out = Polynomial::zero(total);
    for (k, comp) in f_map.components.iter().enumerate() {
        if comp.is_zero() {
            continue;
        }
        out = out.add(&comp.lift(total, 0).mul(&Polynomial::var(total, dq + k)));
    }
    Ok(out)
}

/// The identity q → q* under the trace pairing of the defining matrix model:
/// F_b(x) = Σ_i tr(B_i B_b) x_i, suitable for the adjoint module of `ca`.
pub fn trace_identity_covariant(ca: &ClassicalAlgebra) -> PolyMap {
    let d = ca.base.dim;
    let mut components = Vec::with_capacity(d);
    for b in 0..d {
        let mut p = Polynomial::zero(d);
        for i in 0..d {
            let t = ca.matrix_basis[i].mul(&ca.matrix_basis[b]).trace();
            if !t.is_zero() {
                p = p.add(&Polynomial::var(d, i).scale(&t));
            }
        }
        components.push(p);
    }
    PolyMap::new(d, components)
}

/// tr(X^{2i} W_b) for each pair-module basis matrix W_b; the coordinates of
/// the covariant x ↦ x^{2i} in the dual of the pair module.
fn trace_power_covariant(ca: &ClassicalAlgebra, module_mats: &[Mat], i: u32) -> PolyMap {
    let x = PolyMatrix::generic_element(&ca.matrix_basis);
    let p = x.pow(2 * i);
    let components = module_mats
        .iter()
        .map(|w| {
            let mut acc = Polynomial::zero(ca.base.dim);
            for r in 0..w.rows {
                for c in 0..w.cols {
                    if !w.data[c][r].is_zero() {
                        acc = acc.add(&p.data[r][c].scale(&w.data[c][r]));
                    }
                }
            }
            acc
        })
        .collect();
    PolyMap::new(ca.base.dim, components)
}

/// Basic covariants x ↦ x^{2i}J of sp_{2n}, i = 1..n−1, in the coordinates
/// dual to the wedge2_reduced basis.
pub fn sp_covariants(ca: &ClassicalAlgebra) -> Result<Vec<PolyMap>> {
    if ca.type_tag != 'C' || ca.rank < 2 {
        return Err(Error::Unsupported(
            "sp covariants need a type-C algebra of rank >= 2".into(),
        ));
    }
    let mats = pair_module_matrices(ca)?;
    Ok((1..=(ca.rank - 1) as u32)
        .map(|i| trace_power_covariant(ca, &mats, i))
        .collect())
}

/// Basic covariants x ↦ x^{2i} of so_N (i = 1..n for N = 2n+1, i = 1..n−1
/// for N = 2n), in the coordinates dual to the sym2_traceless basis.
pub fn so_covariants(ca: &ClassicalAlgebra) -> Result<Vec<PolyMap>> {
    let m = match ca.type_tag {
        'B' => ca.rank,
        'D' => ca.rank - 1,
        _ => {
            return Err(Error::Unsupported(
                "so covariants need a type-B or type-D algebra".into(),
            ))
        }
    };
    if m == 0 {
        return Ok(Vec::new());
    }
    let mats = pair_module_matrices(ca)?;
    Ok((1..=m as u32)
        .map(|i| trace_power_covariant(ca, &mats, i))
        .collect())
}

/// Number of basic covariants of the ambient pair: n−1 for sp_{2n}, n for
/// so_{2n+1}, n−1 for so_{2n}.
pub fn covariant_count(type_tag: char, rank: usize) -> Result<usize> {
    match type_tag {
        'C' | 'D' => Ok(rank - 1),
        'B' => Ok(rank),
        t => Err(Error::Unsupported(format!("no covariant count for type {t:?}"))),
    }
}

/// Symbolic equivariance: DF_x(e_i·x) = e_i·F(x) for all basis elements.
pub fn equivariance_check(f_map: &PolyMap, rep_in: &Representation, rep_out: &Representation) -> bool {
    if f_map.domain_dim != rep_in.dim_module
        || f_map.codomain_dim != rep_out.dim_module
        || rep_in.algebra != rep_out.algebra
    {
        return false;
    }
    let pairs: Vec<(usize, usize)> = (0..rep_in.algebra.dim)
        .flat_map(|i| (0..f_map.codomain_dim).map(move |b| (i, b)))
        .collect();
    pairs.par_iter().all(|&(i, b)| {
        let lhs = match lie_derivative(rep_in, &f_map.components[b], i) {
            Ok(p) => p,
            Err(_) => return false,
        };
        let mut rhs = Polynomial::zero(f_map.domain_dim);
        for (c, coeff) in rep_out.action[i].data[b].iter().enumerate() {
            if !coeff.is_zero() {
                rhs = rhs.add(&f_map.components[c].scale(coeff));
            }
        }
        lhs == rhs
    })
}

/// The ε-expansion f(x₀ + εx₁ + ⋯ + εⁿxₙ) mod ε^{n+1}, written in the
/// (n+1)·d variables of the level-n Takiff algebra (block j at offset j·d).
#[derive(Debug, Clone)]
pub struct EpsilonExpansion {
    pub level: usize,
    pub coefficients: Vec<Polynomial>,
}

fn eps_mul(a: &[Polynomial], b: &[Polynomial], n: usize) -> Vec<Polynomial> {
    let nv = a[0].num_vars;
    let mut out = vec![Polynomial::zero(nv); n + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > n {
                break;
            }
            if !bj.is_zero() {
                out[i + j] = out[i + j].add(&ai.mul(bj));
            }
        }
    }
    out
}

pub fn takiffize_invariant(f: &Polynomial, n: usize) -> EpsilonExpansion {
    assert!(n >= 1);
    let d = f.num_vars;
    let nv = (n + 1) * d;
    let mut acc = vec![Polynomial::zero(nv); n + 1];
    for (e, c) in &f.terms {
        let mut term = vec![Polynomial::zero(nv); n + 1];
        term[0] = Polynomial::constant(nv, c.clone());
        for (i, &a) in e.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let lin: Vec<Polynomial> = (0..=n).map(|j| Polynomial::var(nv, j * d + i)).collect();
            for _ in 0..a {
                term = eps_mul(&term, &lin, n);
            }
        }
        for (k, t) in term.into_iter().enumerate() {
            acc[k] = acc[k].add(&t);
        }
    }
    EpsilonExpansion {
        level: n,
        coefficients: acc,
    }
}

/// Maximum Jacobian rank of the family over the given exact points.
pub fn independence_rank(fs: &[Polynomial], points: &[Vec<Q>]) -> usize {
    if fs.is_empty() {
        return 0;
    }
    let mut best = 0;
    for p in points {
        let rows: Vec<Vec<Q>> = fs.iter().map(|f| f.gradient_at(p)).collect();
        best = best.max(Mat::from_rows(rows).rank());
        if best == fs.len() {
            break;
        }
    }
    best
}

/// Jacobian rank over sampled integer points of growing height; reaching
/// `fs.len()` certifies algebraic independence, anything less is only
/// inconclusive.
pub fn independence_rank_sampled(fs: &[Polynomial], trials: u32, seed: u64) -> usize {
    if fs.is_empty() {
        return 0;
    }
    let nv = fs[0].num_vars;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<Q>> = (0..trials)
        .map(|t| {
            let h = 2 + t as i64;
            (0..nv)
                .map(|_| Q::from_integer(rng.gen_range(-h..=h).into()))
                .collect()
        })
        .collect();
    independence_rank(fs, &points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{classical, semidirect, takiff};
    use crate::rational::q;

    #[test]
    fn casimir_sl2_invariant() {
        let a1 = classical('A', 1).unwrap();
        let cs = casimir_generators(&a1).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].total_degree(), 2);
        let ad = a1.base.adjoint_rep();
        assert!(is_invariant(&ad, &cs[0]));
        // a bare coordinate function is not invariant
        assert!(!is_invariant(&ad, &Polynomial::var(3, 0)));
    }

    #[test]
    fn casimir_sl3_degrees() {
        let a2 = classical('A', 2).unwrap();
        let cs = casimir_generators(&a2).unwrap();
        assert_eq!(
            cs.iter().map(|f| f.total_degree()).collect::<Vec<_>>(),
            vec![2, 3]
        );
        let ad = a2.base.adjoint_rep();
        for f in &cs {
            assert!(is_invariant(&ad, f));
        }
    }

    #[test]
    fn casimir_sp4_and_so4() {
        let c2 = classical('C', 2).unwrap();
        let cs = casimir_generators(&c2).unwrap();
        assert_eq!(
            cs.iter().map(|f| f.total_degree()).collect::<Vec<_>>(),
            vec![2, 4]
        );
        for f in &cs {
            assert!(is_invariant(&c2.base.adjoint_rep(), f));
        }
        let d2 = classical('D', 2).unwrap();
        let ds = casimir_generators(&d2).unwrap();
        assert_eq!(
            ds.iter().map(|f| f.total_degree()).collect::<Vec<_>>(),
            vec![2, 2]
        );
        for f in &ds {
            assert!(is_invariant(&d2.base.adjoint_rep(), f));
        }
        // the two degree-2 generators are independent
        assert_eq!(independence_rank_sampled(&ds, 8, 0), 2);
    }

    #[test]
    fn differential_basics() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let f = x.pow(2).mul(&y);
        let df = differential(&f);
        assert_eq!(df.components[0], x.mul(&y).scale(&q(2)));
        assert_eq!(df.components[1], x.pow(2));
        assert!(differential(&Polynomial::constant(2, q(5))).is_zero());
    }

    #[test]
    fn hat_covariant_identity_sl2() {
        let a1 = classical('A', 1).unwrap();
        let sd = semidirect(&a1.base, &a1.rep_catalog["adjoint"]).unwrap();
        let f_map = trace_identity_covariant(&a1);
        // equivariant into the dual of the adjoint module
        assert!(equivariance_check(
            &f_map,
            &a1.rep_catalog["adjoint"],
            &a1.rep_catalog["adjoint"].dual()
        ));
        let w = hat_covariant(&f_map, &sd).unwrap();
        assert!(is_invariant(&sd.total.adjoint_rep(), &w));
        // value is tr(x v) on sample matrices
        let xp = vec![q(1), q(2), q(-1)];
        let vp = vec![q(3), q(0), q(5)];
        let to_mat = |p: &[Q]| {
            a1.matrix_basis
                .iter()
                .zip(p)
                .fold(Mat::zeros(2, 2), |acc, (b, c)| acc.add(&b.scale(c)))
        };
        let mut point = xp.clone();
        point.extend(vp.clone());
        assert_eq!(w.eval(&point), to_mat(&xp).mul(&to_mat(&vp)).trace());
        // zero map lifts to zero
        let z = hat_covariant(&PolyMap::zero(3, 3), &sd).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn sp4_covariant_equivariance_and_hat() {
        let c2 = classical('C', 2).unwrap();
        let fs = sp_covariants(&c2).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].components.iter().map(|p| p.total_degree()).max(), Some(2));
        let module = &c2.rep_catalog["wedge2_reduced"];
        assert!(equivariance_check(
            &fs[0],
            &c2.rep_catalog["adjoint"],
            &module.dual()
        ));
        let sd = semidirect(&c2.base, module).unwrap();
        let w = hat_covariant(&fs[0], &sd).unwrap();
        assert_eq!(w.total_degree(), 3);
        assert!(is_invariant(&sd.total.adjoint_rep(), &w));
        // a constant nonzero map into the module is not equivariant
        let mut bad = PolyMap::zero(10, 5);
        bad.components[0] = Polynomial::constant(10, q(1));
        assert!(!equivariance_check(&bad, &c2.rep_catalog["adjoint"], &module.dual()));
    }

    #[test]
    fn covariant_nonzero_on_regular_nilpotent() {
        use crate::builders::nilpotent_model;
        let nm = nilpotent_model('C', &[4]).unwrap();
        // x^2 J != 0 for the regular nilpotent; evaluate the rank-2 power
        assert!(!nm.matrix.pow(2).is_zero());
        let c2 = classical('C', 2).unwrap();
        let fs = sp_covariants(&c2).unwrap();
        // evaluate the covariant at a regular nilpotent of the split model:
        // e.g. sum of simple root vectors; here use a sampled element and
        // just check the map is not identically zero
        assert!(!fs[0].is_zero());
    }

    #[test]
    fn takiffize_trace_squared() {
        let c2 = classical('C', 2).unwrap();
        let x = PolyMatrix::generic_element(&c2.matrix_basis);
        let f = x.mul(&x).trace();
        let d = c2.base.dim;
        let exp = takiffize_invariant(&f, 2);
        assert_eq!(exp.coefficients.len(), 3);
        // build block-generic matrices in the 3d-variable ring
        let lifted: Vec<PolyMatrix> = (0..3)
            .map(|j| {
                let mut m = PolyMatrix::zeros(4, 4, 3 * d);
                for (i, b) in c2.matrix_basis.iter().enumerate() {
                    for r in 0..4 {
                        for c in 0..4 {
                            if !b.data[r][c].is_zero() {
                                m.data[r][c] = m.data[r][c].add(
                                    &Polynomial::var(3 * d, j * d + i).scale(&b.data[r][c]),
                                );
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let tr = |a: &PolyMatrix, b: &PolyMatrix| a.mul(b).trace();
        assert_eq!(exp.coefficients[0], tr(&lifted[0], &lifted[0]));
        assert_eq!(exp.coefficients[1], tr(&lifted[0], &lifted[1]).scale(&q(2)));
        assert_eq!(
            exp.coefficients[2],
            tr(&lifted[1], &lifted[1]).add(&tr(&lifted[0], &lifted[2]).scale(&q(2)))
        );
        // coefficient j depends only on blocks 0..j
        for (j, c) in exp.coefficients.iter().enumerate() {
            assert!(c.depends_only_on_first((j + 1) * d));
        }
    }

    #[test]
    fn takiffized_casimirs_invariant_on_takiff_sl2() {
        let a1 = classical('A', 1).unwrap();
        let cs = casimir_generators(&a1).unwrap();
        let t = takiff(&a1.base, 1);
        let ad = t.total.adjoint_rep();
        let mut gens = Vec::new();
        for f in &cs {
            for c in takiffize_invariant(f, 1).coefficients {
                assert!(is_invariant(&ad, &c));
                gens.push(c);
            }
        }
        assert_eq!(independence_rank_sampled(&gens, 8, 0), 2);
        // dependent family has smaller rank
        let f2 = gens[0].mul(&gens[0]);
        assert_eq!(independence_rank_sampled(&[gens[0].clone(), f2], 8, 0), 1);
    }

    #[test]
    fn takiffize_coefficient_one_is_hat_of_differential() {
        // coefficient 1 of the level-1 expansion equals ⟨df_{x0}, x1⟩
        let a2 = classical('A', 2).unwrap();
        let cs = casimir_generators(&a2).unwrap();
        for f in &cs {
            let d = f.num_vars;
            let exp = takiffize_invariant(f, 1);
            let df = differential(f);
            let mut hat = Polynomial::zero(2 * d);
            for (k, comp) in df.components.iter().enumerate() {
                hat = hat.add(&comp.lift(2 * d, 0).mul(&Polynomial::var(2 * d, d + k)));
            }
            assert_eq!(exp.coefficients[1], hat);
        }
    }
}
