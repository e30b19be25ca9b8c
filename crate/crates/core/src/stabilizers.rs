//! Genericity and structure criteria as exact rank checks: the Elashvili
//! condition, adjoint and coadjoint generic stabilizers, near-torality,
//! transfer conditions for semi-direct products, and contraction dimension
//! identities.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::builders::SemidirectData;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::{intersection_dim, sum_dim, Mat, SubspaceBasis};
use crate::rational::{format_q, Q};

/// Outcome of a genericity criterion at one explicit point, with every
/// reported boolean reproducible from the point by exact linear algebra.
#[derive(Debug, Clone)]
pub struct GenericityReport {
    pub point: Vec<Q>,
    pub stabilizer: SubspaceBasis,
    pub checks: BTreeMap<String, bool>,
    pub dims: BTreeMap<String, usize>,
    pub seed: Option<u64>,
}

impl GenericityReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "point": self.point.iter().map(format_q).collect::<Vec<_>>(),
            "checks": self.checks,
            "dims": self.dims,
            "seed": self.seed,
        })
    }
}

/// Random integer element with growing height maximizing the rank of ad;
/// generic (regular) with probability 1, deterministic per seed.
pub fn sample_regular_element(alg: &LieAlgebra, trials: u32, seed: u64) -> Vec<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best_rank = 0;
    let mut best = vec![Q::zero(); alg.dim];
    for t in 0..trials {
        let h = 2 + t as i64;
        let x: Vec<Q> = (0..alg.dim)
            .map(|_| Q::from_integer(rng.gen_range(-h..=h).into()))
            .collect();
        let rank = alg.ad_matrix(&x).unwrap().rank();
        if rank > best_rank || best.iter().all(|v| v.is_zero()) {
            best_rank = rank;
            best = x;
        }
    }
    best
}

fn image_of(m: &Mat) -> SubspaceBasis {
    SubspaceBasis::from_spanning(m.rows, m.transpose().data)
}

/// Elashvili's criterion: Q·V^{q_v} is dense iff V = q·v + V^{q_v}.
pub fn elashvili_check(rep: &Representation, v: &[Q]) -> Result<GenericityReport> {
    if v.len() != rep.dim_module {
        return Err(Error::DimensionMismatch {
            expected: rep.dim_module,
            got: v.len(),
        });
    }
    let qv = rep.stabilizer_of(v);
    let fixed = rep.fixed_space(&qv.vectors);
    let tangent = rep.orbit_tangent(v);
    let total = sum_dim(&tangent, &fixed);
    let mut checks = BTreeMap::new();
    checks.insert("elashvili".to_string(), total == rep.dim_module);
    let mut dims = BTreeMap::new();
    dims.insert("stabilizer".to_string(), qv.dim());
    dims.insert("fixed_space".to_string(), fixed.dim());
    dims.insert("orbit_tangent".to_string(), tangent.dim());
    dims.insert("sum".to_string(), total);
    Ok(GenericityReport {
        point: v.to_vec(),
        stabilizer: qv,
        checks,
        dims,
        seed: None,
    })
}

/// Adjoint genericity at x: z_q(x) commutative and [q,x] ⊕ z_q(x) = q,
/// plus the machine-checked side conditions (self-normalization of the
/// centralizer and the dual decomposition q* = x·q* ⊕ (q*)^x).
pub fn adjoint_generic_check(alg: &LieAlgebra, x: &[Q]) -> Result<GenericityReport> {
    let ad = alg.ad_matrix(x)?;
    let z = alg.centralizer(x)?;
    let bracket_image = image_of(&ad);
    let commutative = alg.is_commutative_subspace(&z);
    let direct_sum = intersection_dim(&bracket_image, &z) == 0
        && sum_dim(&bracket_image, &z) == alg.dim;
    let mut checks = BTreeMap::new();
    checks.insert("commutative_centralizer".to_string(), commutative);
    checks.insert("direct_sum_decomposition".to_string(), direct_sum);
    if commutative && direct_sum {
        // side conditions that must follow from genericity
        let n = alg.normalizer(&z);
        checks.insert("self_normalizing_centralizer".to_string(), n.dim() == z.dim());
        let adt = ad.transpose();
        let coad_image = image_of(&adt);
        let coad_fixed = SubspaceBasis::from_spanning(alg.dim, adt.kernel_basis());
        checks.insert(
            "coadjoint_decomposition".to_string(),
            intersection_dim(&coad_image, &coad_fixed) == 0
                && sum_dim(&coad_image, &coad_fixed) == alg.dim,
        );
    }
    let mut dims = BTreeMap::new();
    dims.insert("centralizer".to_string(), z.dim());
    dims.insert("bracket_image".to_string(), bracket_image.dim());
    Ok(GenericityReport {
        point: x.to_vec(),
        stabilizer: z,
        checks,
        dims,
        seed: None,
    })
}

/// Coadjoint genericity at ξ: q_ξ ∩ [q, q_ξ] = {0}; also reports whether the
/// stabilizer is commutative (which genericity forces).
pub fn coadjoint_generic_check(alg: &LieAlgebra, xi: &[Q]) -> Result<GenericityReport> {
    let q_xi = alg.coadjoint_stabilizer(xi)?;
    let id = Mat::identity(alg.dim);
    let mut spanning = Vec::new();
    for e in &id.data {
        for u in &q_xi.vectors {
            spanning.push(alg.bracket(e, u)?);
        }
    }
    let bracket_span = SubspaceBasis::from_spanning(alg.dim, spanning);
    let generic = intersection_dim(&q_xi, &bracket_span) == 0;
    let mut checks = BTreeMap::new();
    checks.insert("coadjoint_generic".to_string(), generic);
    let mut dims = BTreeMap::new();
    dims.insert("stabilizer".to_string(), q_xi.dim());
    dims.insert("bracket_span".to_string(), bracket_span.dim());
    dims.insert(
        "commutative_stabilizer".to_string(),
        alg.is_commutative_subspace(&q_xi) as usize,
    );
    Ok(GenericityReport {
        point: xi.to_vec(),
        stabilizer: q_xi,
        checks,
        dims,
        seed: None,
    })
}

fn joint_centralizer(alg: &LieAlgebra, h: &SubspaceBasis) -> Result<SubspaceBasis> {
    if h.vectors.is_empty() {
        return Ok(SubspaceBasis::full(alg.dim));
    }
    let mut rows = Vec::new();
    for u in &h.vectors {
        rows.extend(alg.ad_matrix(u)?.data);
    }
    Ok(SubspaceBasis::from_spanning(
        alg.dim,
        Mat::from_rows(rows).kernel_basis(),
    ))
}

fn bracket_span_of(alg: &LieAlgebra, h: &SubspaceBasis) -> Result<SubspaceBasis> {
    let id = Mat::identity(alg.dim);
    let mut spanning = Vec::new();
    for e in &id.data {
        for u in &h.vectors {
            spanning.push(alg.bracket(e, u)?);
        }
    }
    Ok(SubspaceBasis::from_spanning(alg.dim, spanning))
}

/// Near-torality of a subalgebra h: [q,h] ∩ z_q(h) = {0}.
pub fn near_toral_check(alg: &LieAlgebra, h: &SubspaceBasis) -> Result<bool> {
    // h must be a subalgebra
    for u in &h.vectors {
        for v in &h.vectors {
            if !h.contains(&alg.bracket(u, v)?) {
                return Err(Error::Invalid("h is not closed under the bracket".into()));
            }
        }
    }
    let z = joint_centralizer(alg, h)?;
    let bracket_span = bracket_span_of(alg, h)?;
    Ok(intersection_dim(&bracket_span, &z) == 0)
}

/// Transfer conditions for semi-direct products at a point x of the acting
/// algebra: V^x = V^{z_q(x)} and V^x ⊕ x·V = V.
pub fn sgp_transfer_check(sd: &SemidirectData, x: &[Q]) -> Result<GenericityReport> {
    let rep = &sd.source_rep;
    let alg = &rep.algebra;
    if x.len() != alg.dim {
        return Err(Error::DimensionMismatch {
            expected: alg.dim,
            got: x.len(),
        });
    }
    let act = rep.action_of(x);
    let vx = SubspaceBasis::from_spanning(rep.dim_module, act.kernel_basis());
    let z = alg.centralizer(x)?;
    let vz = rep.fixed_space(&z.vectors);
    let xv = image_of(&act);
    let mut checks = BTreeMap::new();
    checks.insert(
        "fixed_space_transfer".to_string(),
        vx.dim() == vz.dim() && vx.contains_subspace(&vz),
    );
    checks.insert(
        "direct_sum".to_string(),
        intersection_dim(&vx, &xv) == 0 && sum_dim(&vx, &xv) == rep.dim_module,
    );
    let mut dims = BTreeMap::new();
    dims.insert("fixed_space".to_string(), vx.dim());
    dims.insert("centralizer_fixed_space".to_string(), vz.dim());
    dims.insert("image".to_string(), xv.dim());
    Ok(GenericityReport {
        point: x.to_vec(),
        stabilizer: z,
        checks,
        dims,
        seed: None,
    })
}

/// The index identities around a near-toral stabilizer h:
/// [q,h] ⊕ z_q(h) = q and ind q = ind z_q(h) = dim h, with the centralizer
/// index computed on its induced structure constants (closed loop).
pub fn yakoby_identities(
    alg: &LieAlgebra,
    h: &SubspaceBasis,
    trials: u32,
    seed: u64,
) -> Result<GenericityReport> {
    let z = joint_centralizer(alg, h)?;
    let bracket_span = bracket_span_of(alg, h)?;
    let decomposition = intersection_dim(&bracket_span, &z) == 0
        && sum_dim(&bracket_span, &z) == alg.dim;
    let z_alg = alg.induced_subalgebra(&z, None)?;
    let ind_q = alg.index(trials, seed);
    let ind_z = z_alg.index(trials, seed);
    let mut checks = BTreeMap::new();
    checks.insert("direct_sum_decomposition".to_string(), decomposition);
    checks.insert("ind_q_eq_dim_h".to_string(), ind_q == h.dim());
    checks.insert("ind_centralizer_eq_dim_h".to_string(), ind_z == h.dim());
    let mut dims = BTreeMap::new();
    dims.insert("ind_q".to_string(), ind_q);
    dims.insert("ind_centralizer".to_string(), ind_z);
    dims.insert("dim_h".to_string(), h.dim());
    dims.insert("centralizer".to_string(), z.dim());
    Ok(GenericityReport {
        point: Vec::new(),
        stabilizer: z,
        checks,
        dims,
        seed: Some(seed),
    })
}

/// The two computations of dim of the contraction quotient, which must agree:
/// (a) rk h + dim m^{t_h} via a torus fixed space, (b) dim z_g(x) for a
/// sampled h-regular element x embedded in the ambient algebra.
#[derive(Debug, Clone)]
pub struct ContractionDims {
    pub method_torus: usize,
    pub method_centralizer: usize,
    pub index_total: usize,
    pub seed: u64,
}

impl ContractionDims {
    pub fn agree(&self) -> bool {
        self.method_torus == self.method_centralizer
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "method_torus": self.method_torus,
            "method_centralizer": self.method_centralizer,
            "index_total": self.index_total,
            "seed": self.seed,
        })
    }
}

/// `g0_embed` maps the basis of the contraction's algebra part into the
/// ambient algebra (the +1 eigenspace basis used to build the contraction).
pub fn contraction_dims(
    sd: &SemidirectData,
    ambient: &LieAlgebra,
    g0_embed: &SubspaceBasis,
    trials: u32,
    seed: u64,
) -> Result<ContractionDims> {
    let h = &sd.source_rep.algebra;
    if g0_embed.dim() != h.dim || g0_embed.ambient_dim != ambient.dim {
        return Err(Error::Invalid(
            "embedding basis does not match the contraction".into(),
        ));
    }
    // the sampled point must be generic for the ambient algebra, not merely
    // regular in h: maximize the ambient ad-rank of the embedded element
    let embed = |x_h: &[Q]| {
        let mut x_amb = vec![Q::zero(); ambient.dim];
        for (c, vec) in x_h.iter().zip(&g0_embed.vectors) {
            for (i, v) in vec.iter().enumerate() {
                x_amb[i] += c * v;
            }
        }
        x_amb
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<Q>)> = None;
    for t in 0..trials {
        let height = 2 + t as i64;
        let x: Vec<Q> = (0..h.dim)
            .map(|_| Q::from_integer(rng.gen_range(-height..=height).into()))
            .collect();
        let rank = ambient.ad_matrix(&embed(&x))?.rank();
        if best.as_ref().map_or(true, |(r, _)| rank > *r) {
            best = Some((rank, x));
        }
    }
    let x_h = best.expect("trials >= 1").1;
    let t_h = h.centralizer(&x_h)?;
    let rk_h = t_h.dim();
    let m_fixed = sd.source_rep.fixed_space(&t_h.vectors);
    let method_torus = rk_h + m_fixed.dim();
    let method_centralizer = ambient.centralizer(&embed(&x_h))?.dim();
    let index_total = sd.total.index(trials, seed);
    Ok(ContractionDims {
        method_torus,
        method_centralizer,
        index_total,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{
        classical, heisenberg, semidirect, sl2, standard_involution, takiff, z2_contraction,
        PairSpec,
    };
    use crate::rational::q;

    #[test]
    fn elashvili_sl2_adjoint() {
        let g = sl2();
        let ad = g.adjoint_rep();
        let h = vec![q(0), q(0), q(1)];
        assert!(elashvili_check(&ad, &h).unwrap().passed());
        let e = vec![q(1), q(0), q(0)];
        assert!(!elashvili_check(&ad, &e).unwrap().passed());
        // v = 0: holds iff the whole module is fixed
        let zero = vec![q(0), q(0), q(0)];
        assert!(!elashvili_check(&ad, &zero).unwrap().passed());
        let triv = crate::builders::trivial_rep(&g, 2);
        assert!(elashvili_check(&triv, &[q(0), q(0)]).unwrap().passed());
    }

    #[test]
    fn adjoint_generic_sl3_regular() {
        let a2 = classical('A', 2).unwrap();
        // diagonal element H1 + 3 H2 = diag(1, 2, -3): regular semisimple
        let d = a2.base.dim;
        let mut x = vec![q(0); d];
        x[d - 2] = q(1);
        x[d - 1] = q(3);
        let rep = adjoint_generic_check(&a2.base, &x).unwrap();
        assert!(rep.passed(), "checks: {:?}", rep.checks);
        assert_eq!(rep.dims["centralizer"], 2);
    }

    #[test]
    fn adjoint_generic_fails_on_heisenberg() {
        let h1 = heisenberg(1);
        for x in [
            vec![q(1), q(0), q(0)],
            vec![q(0), q(0), q(1)],
            vec![q(1), q(2), q(3)],
            sample_regular_element(&h1, 8, 0),
        ] {
            assert!(!adjoint_generic_check(&h1, &x).unwrap().passed());
        }
    }

    #[test]
    fn adjoint_generic_on_takiff_point() {
        // x + eps*v with v in the fixed space of z(x) is generic (transfer)
        let g = sl2();
        let sd = semidirect(&g, &g.adjoint_rep()).unwrap();
        let x = vec![q(0), q(0), q(1), q(0), q(0), q(2)]; // h + 2 eps h
        let rep = adjoint_generic_check(&sd.total, &x).unwrap();
        assert!(rep.passed(), "checks: {:?}", rep.checks);
        assert_eq!(rep.dims["centralizer"], 2);
    }

    #[test]
    fn coadjoint_generic_cases() {
        let b = crate::builders::borel(&classical('A', 1).unwrap()).unwrap();
        let xi = vec![q(3), q(5)];
        let rep = coadjoint_generic_check(&b, &xi).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.dims["stabilizer"], 0);

        let h1 = heisenberg(1);
        let xi = vec![q(1), q(2), q(5)];
        let rep = coadjoint_generic_check(&h1, &xi).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.dims["stabilizer"], 1);
        assert!(rep.stabilizer.contains(&[q(0), q(0), q(1)]));

        // Takiff of the Heisenberg algebra inherits a generic stabiliser
        let t = takiff(&h1, 1);
        let xi = vec![q(1), q(2), q(5), q(-3), q(7), q(4)];
        assert!(coadjoint_generic_check(&t.total, &xi).unwrap().passed());

        // ... but the semi-direct product with the coadjoint module does not
        let coad = h1.adjoint_rep().dual();
        let sd = semidirect(&h1, &coad).unwrap();
        let xi = vec![q(1), q(2), q(5), q(-3), q(7), q(4)];
        let rep = coadjoint_generic_check(&sd.total, &xi).unwrap();
        assert!(!rep.passed());
    }

    #[test]
    fn near_toral_cases() {
        let h1 = heisenberg(1);
        let center = h1.center();
        assert!(near_toral_check(&h1, &center).unwrap());
        let g = sl2();
        let cartan = SubspaceBasis::from_spanning(3, vec![vec![q(0), q(0), q(1)]]);
        assert!(near_toral_check(&g, &cartan).unwrap());
        let e_span = SubspaceBasis::from_spanning(3, vec![vec![q(1), q(0), q(0)]]);
        assert!(!near_toral_check(&g, &e_span).unwrap());
        // a non-subalgebra is rejected
        let bad = SubspaceBasis::from_spanning(
            3,
            vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]],
        );
        assert!(near_toral_check(&g, &bad).is_err());
    }

    #[test]
    fn transfer_checks() {
        let g = sl2();
        let sd = semidirect(&g, &g.adjoint_rep()).unwrap();
        let h = vec![q(0), q(0), q(1)];
        let rep = sgp_transfer_check(&sd, &h).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.dims["fixed_space"], 1);

        let a2 = classical('A', 2).unwrap();
        let sd = semidirect(&a2.base, &a2.rep_catalog["defining"]).unwrap();
        let d = a2.base.dim;
        let mut x = vec![q(0); d];
        x[d - 2] = q(1);
        x[d - 1] = q(3);
        let rep = sgp_transfer_check(&sd, &x).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.dims["fixed_space"], 0);

        let b1 = classical('B', 1).unwrap();
        let sd = semidirect(&b1.base, &b1.rep_catalog["sym2_traceless"]).unwrap();
        let x = sample_regular_element(&b1.base, 8, 0);
        let rep = sgp_transfer_check(&sd, &x).unwrap();
        assert!(rep.passed(), "checks: {:?} dims: {:?}", rep.checks, rep.dims);
        assert_eq!(rep.dims["fixed_space"], 1);
    }

    #[test]
    fn yakoby_on_heisenberg_and_borel() {
        let h1 = heisenberg(1);
        let rep = yakoby_identities(&h1, &h1.center(), 8, 0).unwrap();
        assert!(rep.passed(), "checks: {:?} dims: {:?}", rep.checks, rep.dims);

        let b3 = crate::builders::borel(&classical('A', 2).unwrap()).unwrap();
        let xi = crate::stabilizers::sample_regular_covector(&b3, 8, 0);
        let q_xi = b3.coadjoint_stabilizer(&xi).unwrap();
        assert_eq!(q_xi.dim(), 1);
        let rep = yakoby_identities(&b3, &q_xi, 8, 0).unwrap();
        assert!(rep.passed(), "checks: {:?} dims: {:?}", rep.checks, rep.dims);

        let g = sl2();
        let cartan = SubspaceBasis::from_spanning(3, vec![vec![q(0), q(0), q(1)]]);
        let rep = yakoby_identities(&g, &cartan, 8, 0).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn contraction_dims_agree() {
        let (amb, inv) = standard_involution(&PairSpec::SlSo(3)).unwrap();
        let (g0, _) = inv.eigenspaces(&amb);
        let sd = z2_contraction(&amb, &inv).unwrap();
        let cd = contraction_dims(&sd, &amb, &g0, 8, 0).unwrap();
        assert!(cd.agree(), "{cd:?}");
        assert_eq!(cd.method_torus, 2);
        assert_eq!(cd.index_total, 2);

        let (amb, inv) = standard_involution(&PairSpec::Swap(sl2())).unwrap();
        let (g0, _) = inv.eigenspaces(&amb);
        let sd = z2_contraction(&amb, &inv).unwrap();
        let cd = contraction_dims(&sd, &amb, &g0, 8, 0).unwrap();
        assert!(cd.agree());
        assert_eq!(cd.method_torus, 2);
        assert_eq!(cd.index_total, 2);
    }
}

/// Random integer covector maximizing the Kirillov rank (same scheme as the
/// index computation), for use as a generic coadjoint point.
pub fn sample_regular_covector(alg: &LieAlgebra, trials: u32, seed: u64) -> Vec<Q> {
    alg.sample_generic_covector(trials, seed)
}
