//! Lie algebras as exact structure constants on a labeled basis, plus the
//! elementary operators: bracket, ad, centralizers, Kirillov form, index.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat, SubspaceBasis};
use crate::rational::{format_q, parse_q, Q};

/// Finite-dimensional Lie algebra over the rationals.
///
/// The structure table stores, for each basis pair `i < j`, the sparse
/// expansion of `[e_i, e_j]`; antisymmetry supplies the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    structure: BTreeMap<(usize, usize), Vec<(usize, Q)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormKind {
    Symmetric,
    Skew,
}

#[derive(Debug, Clone)]
pub struct BilinearForm {
    pub matrix: Mat,
    pub kind: FormKind,
}

impl BilinearForm {
    pub fn matches_kind(&self) -> bool {
        let t = self.matrix.transpose();
        match self.kind {
            FormKind::Symmetric => t == self.matrix,
            FormKind::Skew => t == self.matrix.scale(&-Q::from_integer(1.into())),
        }
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.det().is_zero()
    }
}

/// Module over a Lie algebra given by one action matrix per basis element.
#[derive(Debug, Clone)]
pub struct Representation {
    pub algebra: LieAlgebra,
    pub dim_module: usize,
    pub action: Vec<Mat>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub ok: bool,
    pub first_failure: Option<(usize, usize, usize)>,
}

impl LieAlgebra {
    pub fn new(dim: usize, basis_labels: Vec<String>) -> Self {
        assert_eq!(dim, basis_labels.len());
        LieAlgebra {
            dim,
            basis_labels,
            structure: BTreeMap::new(),
        }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(dim, (0..dim).map(|i| format!("e{i}")).collect())
    }

    /// Sets `[e_i, e_j] = Σ_k c_k e_k` for `i < j` (the `j < i` entry is
    /// implied by antisymmetry; `i == j` is rejected).
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: Vec<(usize, Q)>) {
        assert!(i < j && j < self.dim);
        let terms: Vec<(usize, Q)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            self.structure.remove(&(i, j));
        } else {
            self.structure.insert((i, j), terms);
        }
    }

    /// Sparse expansion of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Q)> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self.structure.get(&(i, j)).cloned().unwrap_or_default(),
            Ordering::Greater => self
                .structure
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
        }
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Result<Vec<Q>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec![Q::zero(); self.dim];
        for (&(i, j), terms) in &self.structure {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (k, s) in terms {
                out[*k] += &c * s;
            }
        }
        Ok(out)
    }

    /// Exhaustive Jacobi check over all basis triples, exact.
    pub fn check_jacobi(&self) -> JacobiReport {
        let basis: Vec<Vec<Q>> = Mat::identity(self.dim).data;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let bij = self.bracket(&basis[i], &basis[j]).unwrap();
                for k in j + 1..self.dim {
                    let bjk = self.bracket(&basis[j], &basis[k]).unwrap();
                    let bki = self.bracket(&basis[k], &basis[i]).unwrap();
                    let t1 = self.bracket(&bij, &basis[k]).unwrap();
                    let t2 = self.bracket(&bjk, &basis[i]).unwrap();
                    let t3 = self.bracket(&bki, &basis[j]).unwrap();
                    let sum: Vec<Q> = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .map(|((a, b), c)| a + b + c)
                        .collect();
                    if sum.iter().any(|x| !x.is_zero()) {
                        return JacobiReport {
                            ok: false,
                            first_failure: Some((i, j, k)),
                        };
                    }
                }
            }
        }
        JacobiReport {
            ok: true,
            first_failure: None,
        }
    }

    /// Matrix of `ad x`: column `j` is `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Q]) -> Result<Mat> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = Mat::zeros(self.dim, self.dim);
        for (&(i, j), terms) in &self.structure {
            // [x, e_j] picks up x_i * c_{ij}^k ; [x, e_i] picks up -x_j * c_{ij}^k
            if !x[i].is_zero() {
                for (k, c) in terms {
                    m.data[*k][j] += &x[i] * c;
                }
            }
            if !x[j].is_zero() {
                for (k, c) in terms {
                    m.data[*k][i] -= &x[j] * c;
                }
            }
        }
        Ok(m)
    }

    /// The adjoint representation (on itself).
    pub fn adjoint_rep(&self) -> Representation {
        let basis: Vec<Vec<Q>> = Mat::identity(self.dim).data;
        let action = basis.iter().map(|e| self.ad_matrix(e).unwrap()).collect();
        Representation {
            algebra: self.clone(),
            dim_module: self.dim,
            action,
        }
    }

    pub fn centralizer(&self, x: &[Q]) -> Result<SubspaceBasis> {
        let ad = self.ad_matrix(x)?;
        Ok(SubspaceBasis::from_spanning(self.dim, ad.kernel_basis()))
    }

    /// Intersection of the kernels of all `ad e_i`.
    pub fn center(&self) -> SubspaceBasis {
        let basis: Vec<Vec<Q>> = Mat::identity(self.dim).data;
        let mut stacked: Vec<Vec<Q>> = Vec::new();
        for e in &basis {
            stacked.extend(self.ad_matrix(e).unwrap().data);
        }
        if stacked.is_empty() {
            return SubspaceBasis::full(self.dim);
        }
        SubspaceBasis::from_spanning(self.dim, Mat::from_rows(stacked).kernel_basis())
    }

    pub fn is_commutative_subspace(&self, sub: &SubspaceBasis) -> bool {
        for (a, u) in sub.vectors.iter().enumerate() {
            for v in sub.vectors.iter().skip(a + 1) {
                if self.bracket(u, v).unwrap().iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.is_empty()
    }

    /// `{x : [x, sub] ⊆ sub}`, via the annihilator of `sub`.
    pub fn normalizer(&self, sub: &SubspaceBasis) -> SubspaceBasis {
        let ann = sub.annihilator();
        if ann.is_empty() || sub.vectors.is_empty() {
            return SubspaceBasis::full(self.dim);
        }
        // Rows: for each (annihilator functional, sub basis vector s),
        // the linear condition x -> phi([x, s]).
        let mut rows = Vec::new();
        for s in &sub.vectors {
            // column c of ad(s) is [s, e_c]; we need phi([e_c, s]) = -phi(ad(s) e_c)
            let ad_s = self.ad_matrix(s).unwrap();
            for phi in &ann {
                let mut row = vec![Q::zero(); self.dim];
                for c in 0..self.dim {
                    let mut v = Q::zero();
                    for (k, p) in phi.iter().enumerate() {
                        if !p.is_zero() && !ad_s.data[k][c].is_zero() {
                            v += p * &ad_s.data[k][c];
                        }
                    }
                    row[c] = -v;
                }
                rows.push(row);
            }
        }
        SubspaceBasis::from_spanning(self.dim, Mat::from_rows(rows).kernel_basis())
    }

    /// Kirillov form `B[i][j] = ⟨ξ, [e_i, e_j]⟩`.
    pub fn kirillov_form(&self, xi: &[Q]) -> Result<BilinearForm> {
        if xi.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: xi.len(),
            });
        }
        let mut m = Mat::zeros(self.dim, self.dim);
        for (&(i, j), terms) in &self.structure {
            let mut v = Q::zero();
            for (k, c) in terms {
                if !xi[*k].is_zero() {
                    v += &xi[*k] * c;
                }
            }
            if !v.is_zero() {
                m.data[i][j] = v.clone();
                m.data[j][i] = -v;
            }
        }
        Ok(BilinearForm {
            matrix: m,
            kind: FormKind::Skew,
        })
    }

    /// Coadjoint stabilizer of `ξ` (kernel of the Kirillov form).
    pub fn coadjoint_stabilizer(&self, xi: &[Q]) -> Result<SubspaceBasis> {
        let form = self.kirillov_form(xi)?;
        Ok(SubspaceBasis::from_spanning(
            self.dim,
            form.matrix.kernel_basis(),
        ))
    }

    /// Index by randomized exact sampling: `dim − max rank` of the Kirillov
    /// form over integer covectors of growing height. Deterministic per seed;
    /// exact with probability 1 under random sampling.
    pub fn index(&self, trials: u32, seed: u64) -> usize {
        assert!(trials >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best_rank = 0;
        for t in 0..trials {
            let h = 2 + t as i64;
            let xi: Vec<Q> = (0..self.dim)
                .map(|_| Q::from_integer(rng.gen_range(-h..=h).into()))
                .collect();
            let rank = self.kirillov_form(&xi).unwrap().matrix.rank();
            best_rank = best_rank.max(rank);
            if best_rank == self.dim {
                break;
            }
        }
        self.dim - best_rank
    }

    /// A sampled covector realizing the best (largest) Kirillov rank.
    pub fn sample_generic_covector(&self, trials: u32, seed: u64) -> Vec<Q> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best_rank = 0;
        let mut best = vec![Q::zero(); self.dim];
        for t in 0..trials {
            let h = 2 + t as i64;
            let xi: Vec<Q> = (0..self.dim)
                .map(|_| Q::from_integer(rng.gen_range(-h..=h).into()))
                .collect();
            let rank = self.kirillov_form(&xi).unwrap().matrix.rank();
            if rank > best_rank {
                best_rank = rank;
                best = xi;
            }
        }
        best
    }

    /// Structure constants induced on a subspace closed under the bracket.
    pub fn induced_subalgebra(&self, sub: &SubspaceBasis, labels: Option<Vec<String>>) -> Result<LieAlgebra> {
        let d = sub.dim();
        let labels = labels.unwrap_or_else(|| (0..d).map(|i| format!("s{i}")).collect());
        let mut alg = LieAlgebra::new(d, labels);
        for i in 0..d {
            for j in i + 1..d {
                let b = self.bracket(&sub.vectors[i], &sub.vectors[j])?;
                let coords = sub.coords_of(&b).ok_or(Error::NotClosed(i, j))?;
                let terms: Vec<(usize, Q)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                alg.set_bracket(i, j, terms);
            }
        }
        Ok(alg)
    }

    /// All (i<j, k, c) entries, in deterministic order.
    pub fn structure_entries(&self) -> Vec<(usize, usize, usize, Q)> {
        let mut out = Vec::new();
        for (&(i, j), terms) in &self.structure {
            for (k, c) in terms {
                out.push((i, j, *k, c.clone()));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let structure: Vec<serde_json::Value> = self
            .structure_entries()
            .iter()
            .map(|(i, j, k, c)| serde_json::json!([i, j, k, format_q(c)]))
            .collect();
        serde_json::json!({
            "dim": self.dim,
            "labels": self.basis_labels,
            "structure": structure,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LieAlgebra> {
        let dim = v["dim"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing dim".into()))? as usize;
        let labels: Vec<String> = v["labels"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing labels".into()))?
            .iter()
            .map(|l| l.as_str().unwrap_or_default().to_string())
            .collect();
        if labels.len() != dim {
            return Err(Error::Parse("labels/dim mismatch".into()));
        }
        let mut alg = LieAlgebra::new(dim, labels);
        let mut table: BTreeMap<(usize, usize), Vec<(usize, Q)>> = BTreeMap::new();
        for entry in v["structure"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing structure".into()))?
        {
            let arr = entry
                .as_array()
                .ok_or_else(|| Error::Parse("bad structure entry".into()))?;
            let i = arr[0].as_u64().unwrap() as usize;
            let j = arr[1].as_u64().unwrap() as usize;
            let k = arr[2].as_u64().unwrap() as usize;
            let c = parse_q(arr[3].as_str().unwrap_or("0"))?;
            if i >= j {
                return Err(Error::Parse(format!("structure entry must have i<j, got ({i},{j})")));
            }
            table.entry((i, j)).or_default().push((k, c));
        }
        for ((i, j), terms) in table {
            alg.set_bracket(i, j, terms);
        }
        Ok(alg)
    }
}

impl Representation {
    /// `ρ([x,y]) = ρ(x)ρ(y) − ρ(y)ρ(x)` on all basis pairs, exact.
    pub fn check_homomorphism(&self) -> Result<()> {
        let alg = &self.algebra;
        for i in 0..alg.dim {
            for j in i + 1..alg.dim {
                let mut lhs = Mat::zeros(self.dim_module, self.dim_module);
                for (k, c) in alg.bracket_basis(i, j) {
                    lhs = lhs.add(&self.action[k].scale(&c));
                }
                let rhs = self.action[i]
                    .mul(&self.action[j])
                    .sub(&self.action[j].mul(&self.action[i]));
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(i, j));
                }
            }
        }
        Ok(())
    }

    /// Action of an algebra element `x` on the module.
    pub fn action_of(&self, x: &[Q]) -> Mat {
        let mut m = Mat::zeros(self.dim_module, self.dim_module);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.action[i].scale(c));
            }
        }
        m
    }

    /// Dual module: `ρ*(x) = −ρ(x)ᵀ`.
    pub fn dual(&self) -> Representation {
        Representation {
            algebra: self.algebra.clone(),
            dim_module: self.dim_module,
            action: self
                .action
                .iter()
                .map(|m| m.transpose().scale(&-Q::from_integer(1.into())))
                .collect(),
        }
    }

    /// Stabilizer `q_v = {x : x·v = 0}` as a subspace of the algebra.
    pub fn stabilizer_of(&self, v: &[Q]) -> SubspaceBasis {
        // column i is rho(e_i) v
        let mut m = Mat::zeros(self.dim_module, self.algebra.dim);
        for i in 0..self.algebra.dim {
            let col = self.action[i].matvec(v);
            for (r, val) in col.into_iter().enumerate() {
                m.data[r][i] = val;
            }
        }
        SubspaceBasis::from_spanning(self.algebra.dim, m.kernel_basis())
    }

    /// Orbit tangent space `q·v` inside the module.
    pub fn orbit_tangent(&self, v: &[Q]) -> SubspaceBasis {
        let vecs: Vec<Vec<Q>> = (0..self.algebra.dim)
            .map(|i| self.action[i].matvec(v))
            .collect();
        SubspaceBasis::from_spanning(self.dim_module, vecs)
    }

    /// Joint fixed space `V^S` of a set of algebra elements.
    pub fn fixed_space(&self, elements: &[Vec<Q>]) -> SubspaceBasis {
        if elements.is_empty() {
            return SubspaceBasis::full(self.dim_module);
        }
        let mut rows = Vec::new();
        for x in elements {
            rows.extend(self.action_of(x).data);
        }
        SubspaceBasis::from_spanning(self.dim_module, Mat::from_rows(rows).kernel_basis())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{heisenberg, sl2};
    use crate::rational::q;

    #[test]
    fn heisenberg_brackets() {
        let h = heisenberg(1);
        // basis e, f, z with [e,f] = z
        let e = vec![q(1), q(0), q(0)];
        let f = vec![q(0), q(1), q(0)];
        let z = vec![q(0), q(0), q(1)];
        assert_eq!(h.bracket(&e, &f).unwrap(), z);
        assert!(h.bracket(&e, &z).unwrap().iter().all(|x| x.is_zero()));
        assert!(h.bracket(&e, &e).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn sl2_brackets() {
        let g = sl2();
        // basis e, f, h
        let e = vec![q(1), q(0), q(0)];
        let f = vec![q(0), q(1), q(0)];
        let h = vec![q(0), q(0), q(1)];
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        assert_eq!(
            g.bracket(&h, &e).unwrap(),
            vec![q(2), q(0), q(0)]
        );
        assert_eq!(
            g.bracket(&h, &f).unwrap(),
            vec![q(0), q(-2), q(0)]
        );
    }

    #[test]
    fn ad_matrix_sl2_h_is_diagonal() {
        let g = sl2();
        let h = vec![q(0), q(0), q(1)];
        let ad = g.ad_matrix(&h).unwrap();
        let mut expected = Mat::zeros(3, 3);
        expected.data[0][0] = q(2);
        expected.data[1][1] = q(-2);
        assert_eq!(ad, expected);
        assert!(g.ad_matrix(&[q(0), q(0), q(0)]).unwrap().is_zero());
    }

    #[test]
    fn ad_nilpotent_cubes_to_zero() {
        let g = sl2();
        let e = vec![q(1), q(0), q(0)];
        let ad = g.ad_matrix(&e).unwrap();
        assert!(!ad.pow(2).is_zero());
        assert!(ad.pow(3).is_zero());
    }

    #[test]
    fn centralizers_in_sl2() {
        let g = sl2();
        let h = vec![q(0), q(0), q(1)];
        let zh = g.centralizer(&h).unwrap();
        assert_eq!(zh.dim(), 1);
        assert!(zh.contains(&h));
        let e = vec![q(1), q(0), q(0)];
        let ze = g.centralizer(&e).unwrap();
        assert_eq!(ze.dim(), 1);
        assert!(ze.contains(&e));
        // rank-nullity
        assert_eq!(g.ad_matrix(&e).unwrap().rank() + ze.dim(), g.dim);
    }

    #[test]
    fn center_of_heisenberg_is_z() {
        let h1 = heisenberg(1);
        let c = h1.center();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[q(0), q(0), q(1)]));
        // z is central so its centralizer is everything
        assert_eq!(h1.centralizer(&[q(0), q(0), q(1)]).unwrap().dim(), 3);
        assert_eq!(sl2().center().dim(), 0);
    }

    #[test]
    fn normalizer_cases() {
        let g = sl2();
        let h_span = SubspaceBasis::from_spanning(3, vec![vec![q(0), q(0), q(1)]]);
        let n = g.normalizer(&h_span);
        assert_eq!(n.dim(), 1); // Cartan is self-normalizing
        let e_span = SubspaceBasis::from_spanning(3, vec![vec![q(1), q(0), q(0)]]);
        let b = g.normalizer(&e_span);
        assert_eq!(b.dim(), 2); // Borel
        assert!(b.contains(&[q(0), q(0), q(1)]));
        let ab = LieAlgebra::abelian(4);
        let s = SubspaceBasis::from_spanning(4, vec![vec![q(1), q(0), q(0), q(0)]]);
        assert_eq!(ab.normalizer(&s).dim(), 4);
    }

    #[test]
    fn kirillov_form_heisenberg() {
        let h1 = heisenberg(1);
        let xi = vec![q(0), q(0), q(1)]; // z*
        let form = h1.kirillov_form(&xi).unwrap();
        assert!(form.matches_kind());
        assert_eq!(form.matrix.rank(), 2);
        let stab = h1.coadjoint_stabilizer(&xi).unwrap();
        assert_eq!(stab.dim(), 1);
        assert!(stab.contains(&[q(0), q(0), q(1)]));
        assert!(h1
            .kirillov_form(&vec![q(0); 3])
            .unwrap()
            .matrix
            .is_zero());
    }

    #[test]
    fn index_small_algebras() {
        assert_eq!(sl2().index(8, 0), 1);
        assert_eq!(heisenberg(1).index(8, 0), 1);
        assert_eq!(heisenberg(2).index(8, 0), 1);
        // commutative: index = dim
        assert_eq!(LieAlgebra::abelian(4).index(8, 0), 4);
    }

    #[test]
    fn corrupted_structure_fails_jacobi() {
        let mut g = sl2();
        g.set_bracket(0, 1, vec![(0, q(1)), (2, q(1))]);
        let rep = g.check_jacobi();
        assert!(!rep.ok);
        assert!(rep.first_failure.is_some());
    }

    #[test]
    fn json_round_trip() {
        let g = sl2();
        let j = g.to_json();
        let back = LieAlgebra::from_json(&j).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn dual_rep_is_homomorphism() {
        let g = sl2();
        let ad = g.adjoint_rep();
        ad.check_homomorphism().unwrap();
        ad.dual().check_homomorphism().unwrap();
    }
}
