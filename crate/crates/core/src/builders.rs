//! Factories for the algebras under study: classical matrix models,
//! Heisenberg and Borel fixtures, semi-direct products, generalized Takiff
//! algebras, involutions and their isotropy contractions, and form-compatible
//! nilpotent elements from partitions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{BilinearForm, FormKind, LieAlgebra, Representation};
use crate::linalg::{Mat, SubspaceBasis};
use crate::rational::{q, Q};

pub const DEFAULT_RANK_CAP: usize = 12;

/// A classical simple Lie algebra together with its defining matrix model.
#[derive(Debug, Clone)]
pub struct ClassicalAlgebra {
    pub base: LieAlgebra,
    pub type_tag: char,
    pub rank: usize,
    /// Size of the defining matrices.
    pub n: usize,
    pub form: Option<BilinearForm>,
    pub matrix_basis: Vec<Mat>,
    pub rep_catalog: BTreeMap<String, Representation>,
}

#[derive(Debug, Clone)]
pub struct SemidirectData {
    pub total: LieAlgebra,
    pub embed_algebra: SubspaceBasis,
    pub embed_module: SubspaceBasis,
    pub source_rep: Representation,
}

#[derive(Debug, Clone)]
pub struct TakiffData {
    pub total: LieAlgebra,
    pub level: usize,
    pub layer_bases: Vec<SubspaceBasis>,
}

/// Involutive automorphism, as a matrix on the coordinates of an algebra.
#[derive(Debug, Clone)]
pub struct Involution {
    pub matrix: Mat,
}

/// A nilpotent element together with the form-compatible ambient model it
/// lives in (B/C/D models are built blockwise, carrying their own form).
#[derive(Debug, Clone)]
pub struct NilpotentModel {
    pub algebra: ClassicalAlgebra,
    pub element: Vec<Q>,
    pub matrix: Mat,
}

pub fn matrix_bracket(a: &Mat, b: &Mat) -> Mat {
    a.mul(b).sub(&b.mul(a))
}

pub fn flatten(m: &Mat) -> Vec<Q> {
    m.data.iter().flat_map(|r| r.iter().cloned()).collect()
}

fn unflatten(n: usize, v: &[Q]) -> Mat {
    let mut m = Mat::zeros(n, n);
    for (idx, x) in v.iter().enumerate() {
        m.data[idx / n][idx % n] = x.clone();
    }
    m
}

/// Column matrix of flattened basis matrices plus a verified coordinate map.
struct MatSpan {
    cols: Mat,
    left_inv: Mat,
}

impl MatSpan {
    fn new(_n: usize, mats: &[Mat]) -> Result<Self> {
        let cols = Mat::from_rows(mats.iter().map(flatten).collect()).transpose();
        let left_inv = cols.left_inverse()?;
        Ok(MatSpan { cols, left_inv })
    }

    fn coords(&self, m: &Mat) -> Result<Vec<Q>> {
        let v = flatten(m);
        let c = self.left_inv.matvec(&v);
        if self.cols.matvec(&c) != v {
            return Err(Error::Invalid(
                "matrix does not lie in the spanned subalgebra or module".into(),
            ));
        }
        Ok(c)
    }
}

fn algebra_from_matrices(n: usize, mats: &[Mat], labels: Vec<String>) -> Result<LieAlgebra> {
    let span = MatSpan::new(n, mats)?;
    let d = mats.len();
    let mut alg = LieAlgebra::new(d, labels);
    for i in 0..d {
        for j in i + 1..d {
            let coords = span
                .coords(&matrix_bracket(&mats[i], &mats[j]))
                .map_err(|_| Error::NotClosed(i, j))?;
            let terms = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            alg.set_bracket(i, j, terms);
        }
    }
    Ok(alg)
}

/// Module action matrices for the commutator action of `alg_mats` on the
/// space spanned by `module_mats`.
fn commutator_action(
    n: usize,
    alg_mats: &[Mat],
    module_mats: &[Mat],
) -> Result<Vec<Mat>> {
    let span = MatSpan::new(n, module_mats)?;
    let w = module_mats.len();
    let mut action = Vec::with_capacity(alg_mats.len());
    for g in alg_mats {
        let mut m = Mat::zeros(w, w);
        for (b, wm) in module_mats.iter().enumerate() {
            let coords = span.coords(&matrix_bracket(g, wm))?;
            for (r, c) in coords.into_iter().enumerate() {
                m.data[r][b] = c;
            }
        }
        action.push(m);
    }
    Ok(action)
}

/// Basis of `{X : XᵀF + sign·FX = 0}` (sign +1: the form-preserving algebra;
/// sign −1 with a trace condition: the odd part of sl w.r.t. the form).
fn form_condition_basis(n: usize, form: &Mat, sign: i64, traceless: bool) -> Vec<Mat> {
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut row = vec![Q::zero(); n * n];
            for c in 0..n {
                row[c * n + a] += &form.data[c][b];
                row[c * n + b] += &form.data[a][c] * q(sign);
            }
            rows.push(row);
        }
    }
    if traceless {
        let mut row = vec![Q::zero(); n * n];
        for a in 0..n {
            row[a * n + a] = Q::one();
        }
        rows.push(row);
    }
    Mat::from_rows(rows)
        .kernel_basis()
        .iter()
        .map(|v| unflatten(n, v))
        .collect()
}

fn split_symmetric_form(n: usize) -> Mat {
    let mut s = Mat::zeros(n, n);
    for i in 0..n {
        s.data[i][n - 1 - i] = Q::one();
    }
    s
}

fn split_skew_form(n: usize) -> Mat {
    assert!(n % 2 == 0);
    let mut j = Mat::zeros(n, n);
    for i in 0..n {
        j.data[i][n - 1 - i] = if i < n / 2 { q(1) } else { q(-1) };
    }
    j
}

fn sl_basis(n: usize) -> (Vec<Mat>, Vec<String>) {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut m = Mat::zeros(n, n);
            m.data[i][j] = Q::one();
            mats.push(m);
            labels.push(format!("E{}_{}", i + 1, j + 1));
        }
    }
    for i in 0..n - 1 {
        let mut m = Mat::zeros(n, n);
        m.data[i][i] = Q::one();
        m.data[i + 1][i + 1] = -Q::one();
        mats.push(m);
        labels.push(format!("H{}", i + 1));
    }
    (mats, labels)
}

fn build_model(
    type_tag: char,
    rank: usize,
    n: usize,
    mats: Vec<Mat>,
    labels: Vec<String>,
    form: Option<BilinearForm>,
    pair_module: Option<(String, Vec<Mat>)>,
) -> Result<ClassicalAlgebra> {
    let base = algebra_from_matrices(n, &mats, labels)?;
    let mut rep_catalog = BTreeMap::new();
    let defining = Representation {
        algebra: base.clone(),
        dim_module: n,
        action: mats.clone(),
    };
    rep_catalog.insert("defining".to_string(), defining);
    rep_catalog.insert("adjoint".to_string(), base.adjoint_rep());
    if let Some((name, module_mats)) = pair_module {
        let action = commutator_action(n, &mats, &module_mats)?;
        rep_catalog.insert(
            name,
            Representation {
                algebra: base.clone(),
                dim_module: module_mats.len(),
                action,
            },
        );
    }
    Ok(ClassicalAlgebra {
        base,
        type_tag,
        rank,
        n,
        form,
        matrix_basis: mats,
        rep_catalog,
    })
}

pub fn classical(type_tag: char, rank: usize) -> Result<ClassicalAlgebra> {
    classical_capped(type_tag, rank, DEFAULT_RANK_CAP)
}

pub fn classical_capped(type_tag: char, rank: usize, cap: usize) -> Result<ClassicalAlgebra> {
    if rank == 0 || rank > cap {
        return Err(Error::Unsupported(format!(
            "rank {rank} outside supported range 1..={cap}"
        )));
    }
    let ca = match type_tag {
        'A' => {
            let n = rank + 1;
            let (mats, labels) = sl_basis(n);
            build_model('A', rank, n, mats, labels, None, None)?
        }
        'B' | 'D' => {
            let n = if type_tag == 'B' { 2 * rank + 1 } else { 2 * rank };
            if type_tag == 'D' && rank < 2 {
                return Err(Error::Unsupported("type D needs rank >= 2".into()));
            }
            let s = split_symmetric_form(n);
            let mats = form_condition_basis(n, &s, 1, false);
            let labels = (0..mats.len()).map(|i| format!("b{i}")).collect();
            let pair = ("sym2_traceless".to_string(), form_condition_basis(n, &s, -1, true));
            build_model(
                type_tag,
                rank,
                n,
                mats,
                labels,
                Some(BilinearForm {
                    matrix: s,
                    kind: FormKind::Symmetric,
                }),
                Some(pair),
            )?
        }
        'C' => {
            let n = 2 * rank;
            let j = split_skew_form(n);
            let mats = form_condition_basis(n, &j, 1, false);
            let labels = (0..mats.len()).map(|i| format!("b{i}")).collect();
            let pair = ("wedge2_reduced".to_string(), form_condition_basis(n, &j, -1, true));
            build_model(
                'C',
                rank,
                n,
                mats,
                labels,
                Some(BilinearForm {
                    matrix: j,
                    kind: FormKind::Skew,
                }),
                Some(pair),
            )?
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "classical type {type_tag:?} (supported: A, B, C, D)"
            )))
        }
    };
    let expected_dim = match type_tag {
        'A' => (rank + 1) * (rank + 1) - 1,
        'B' => rank * (2 * rank + 1),
        'C' => rank * (2 * rank + 1),
        _ => rank * (2 * rank - 1),
    };
    if ca.base.dim != expected_dim {
        return Err(Error::Invalid(format!(
            "built {type_tag}{rank} with dim {}, expected {expected_dim}",
            ca.base.dim
        )));
    }
    Ok(ca)
}

/// Matrix realization of the pair module (sym2_traceless for B/D,
/// wedge2_reduced for C), in the same basis order as the catalog entry.
pub fn pair_module_matrices(ca: &ClassicalAlgebra) -> Result<Vec<Mat>> {
    let form = ca
        .form
        .as_ref()
        .ok_or_else(|| Error::Unsupported("pair module needs a defining form".into()))?;
    Ok(form_condition_basis(ca.n, &form.matrix, -1, true))
}

/// sl₂ in the e, f, h presentation (handy fixture for tests and examples).
pub fn sl2() -> LieAlgebra {
    let mut g = LieAlgebra::new(3, vec!["e".into(), "f".into(), "h".into()]);
    g.set_bracket(0, 1, vec![(2, q(1))]);
    g.set_bracket(0, 2, vec![(0, q(-2))]);
    g.set_bracket(1, 2, vec![(1, q(2))]);
    g
}

/// Heisenberg algebra H_n: basis e₁..e_n, f₁..f_n, z with [e_i, f_i] = z.
pub fn heisenberg(n: usize) -> LieAlgebra {
    assert!(n >= 1);
    let mut labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    labels.extend((1..=n).map(|i| format!("f{i}")));
    labels.push("z".into());
    let mut alg = LieAlgebra::new(2 * n + 1, labels);
    for i in 0..n {
        alg.set_bracket(i, n + i, vec![(2 * n, Q::one())]);
    }
    alg
}

/// Borel subalgebra (upper-triangular part) of sl_{r+1}; type A only.
pub fn borel(ca: &ClassicalAlgebra) -> Result<LieAlgebra> {
    if ca.type_tag != 'A' {
        return Err(Error::Unsupported(
            "borel fixture is implemented for type A only".into(),
        ));
    }
    let n = ca.n;
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n - 1 {
        let mut m = Mat::zeros(n, n);
        m.data[i][i] = Q::one();
        m.data[i + 1][i + 1] = -Q::one();
        mats.push(m);
        labels.push(format!("H{}", i + 1));
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Mat::zeros(n, n);
            m.data[i][j] = Q::one();
            mats.push(m);
            labels.push(format!("E{}_{}", i + 1, j + 1));
        }
    }
    algebra_from_matrices(n, &mats, labels)
}

/// Rank-zero action on a module of the given dimension.
pub fn trivial_rep(alg: &LieAlgebra, dim_module: usize) -> Representation {
    Representation {
        algebra: alg.clone(),
        dim_module,
        action: vec![Mat::zeros(dim_module, dim_module); alg.dim],
    }
}

/// Semi-direct product q ⋉ V with V abelian:
/// [(x,v), (x′,v′)] = ([x,x′], x·v′ − x′·v).
pub fn semidirect(alg: &LieAlgebra, rep: &Representation) -> Result<SemidirectData> {
    if rep.algebra != *alg {
        return Err(Error::Invalid(
            "representation is not over the given algebra".into(),
        ));
    }
    rep.check_homomorphism()?;
    let dq = alg.dim;
    let dv = rep.dim_module;
    let mut labels = alg.basis_labels.clone();
    labels.extend((0..dv).map(|a| format!("v{a}")));
    let mut total = LieAlgebra::new(dq + dv, labels);
    for (i, j, k, c) in alg.structure_entries() {
        let mut terms = total.bracket_basis(i, j);
        terms.push((k, c));
        total.set_bracket(i, j, terms);
    }
    for i in 0..dq {
        for a in 0..dv {
            let terms: Vec<(usize, Q)> = (0..dv)
                .filter(|&r| !rep.action[i].data[r][a].is_zero())
                .map(|r| (dq + r, rep.action[i].data[r][a].clone()))
                .collect();
            total.set_bracket(i, dq + a, terms);
        }
    }
    let id = Mat::identity(dq + dv);
    Ok(SemidirectData {
        total,
        embed_algebra: SubspaceBasis {
            ambient_dim: dq + dv,
            vectors: id.data[..dq].to_vec(),
        },
        embed_module: SubspaceBasis {
            ambient_dim: dq + dv,
            vectors: id.data[dq..].to_vec(),
        },
        source_rep: rep.clone(),
    })
}

/// Generalized Takiff algebra q⟨n⟩ = q ⊗ k[T]/(T^{n+1});
/// [x⊗T^l, y⊗T^k] = [x,y]⊗T^{l+k}, zero past level n.
pub fn takiff(alg: &LieAlgebra, n: usize) -> TakiffData {
    assert!(n >= 1);
    let d = alg.dim;
    let dim = (n + 1) * d;
    let mut labels = Vec::with_capacity(dim);
    for l in 0..=n {
        labels.extend(alg.basis_labels.iter().map(|s| format!("{s}@{l}")));
    }
    let mut total = LieAlgebra::new(dim, labels);
    let entries = alg.structure_entries();
    for l in 0..=n {
        for k in l..=n {
            if l + k > n {
                continue;
            }
            for (i, j, t, c) in &entries {
                let (a, b) = (l * d + i, k * d + j);
                let target = (l + k) * d + t;
                let mut terms = total.bracket_basis(a.min(b), a.max(b));
                let coeff = if a < b { c.clone() } else { -c.clone() };
                terms.push((target, coeff));
                total.set_bracket(a.min(b), a.max(b), terms);
                if l != k {
                    // the (x at level k, y at level l) pairing
                    let (a2, b2) = (k * d + i, l * d + j);
                    let mut terms = total.bracket_basis(a2.min(b2), a2.max(b2));
                    let coeff = if a2 < b2 { c.clone() } else { -c.clone() };
                    terms.push((target, coeff));
                    total.set_bracket(a2.min(b2), a2.max(b2), terms);
                }
            }
        }
    }
    let id = Mat::identity(dim);
    let layer_bases = (0..=n)
        .map(|l| SubspaceBasis {
            ambient_dim: dim,
            vectors: id.data[l * d..(l + 1) * d].to_vec(),
        })
        .collect();
    TakiffData {
        total,
        level: n,
        layer_bases,
    }
}

/// Takiffization V⋉V of a q-module V, as a module over takiff(q,1):
/// (x₁,x₂)·(v₁,v₂) = (x₁·v₁, x₁·v₂ − x₂·v₁).
pub fn takiffize_module(rep: &Representation) -> Representation {
    let t = takiff(&rep.algebra, 1);
    let d = rep.algebra.dim;
    let w = rep.dim_module;
    let mut action = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut m = Mat::zeros(2 * w, 2 * w);
        for r in 0..w {
            for c in 0..w {
                let v = rep.action[i].data[r][c].clone();
                if !v.is_zero() {
                    m.data[r][c] = v.clone();
                    m.data[w + r][w + c] = v;
                }
            }
        }
        action.push(m);
    }
    for i in 0..d {
        let mut m = Mat::zeros(2 * w, 2 * w);
        for r in 0..w {
            for c in 0..w {
                let v = rep.action[i].data[r][c].clone();
                if !v.is_zero() {
                    m.data[w + r][c] = -v;
                }
            }
        }
        action.push(m);
    }
    Representation {
        algebra: t.total,
        dim_module: 2 * w,
        action,
    }
}

impl Involution {
    /// θ² = id and θ[x,y] = [θx, θy], checked exactly on all basis pairs.
    pub fn validate(&self, alg: &LieAlgebra) -> Result<()> {
        let d = alg.dim;
        if self.matrix.rows != d || self.matrix.cols != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: self.matrix.rows,
            });
        }
        if self.matrix.mul(&self.matrix) != Mat::identity(d) {
            return Err(Error::Invalid("involution does not square to identity".into()));
        }
        let id = Mat::identity(d);
        let theta: Vec<Vec<Q>> = (0..d).map(|i| self.matrix.matvec(&id.data[i])).collect();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.matrix.matvec(&alg.bracket(&id.data[i], &id.data[j])?);
                let rhs = alg.bracket(&theta[i], &theta[j])?;
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "involution is not an automorphism on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// (+1, −1) eigenspaces.
    pub fn eigenspaces(&self, alg: &LieAlgebra) -> (SubspaceBasis, SubspaceBasis) {
        let d = alg.dim;
        let plus = self.matrix.sub(&Mat::identity(d));
        let minus = self.matrix.add(&Mat::identity(d));
        (
            SubspaceBasis::from_spanning(d, plus.kernel_basis()),
            SubspaceBasis::from_spanning(d, minus.kernel_basis()),
        )
    }
}

/// The symmetric pairs supported by `standard_involution`.
#[derive(Debug, Clone)]
pub enum PairSpec {
    /// (sl_N, so_N): θ(X) = −Xᵀ.
    SlSo(usize),
    /// (sl_N, sp_N), N even: θ(X) = −J Xᵀ J⁻¹.
    SlSp(usize),
    /// (g ⊕ g, diagonal): θ(x, y) = (y, x).
    Swap(LieAlgebra),
}

/// Builds the ambient algebra of the pair together with its involution.
pub fn standard_involution(spec: &PairSpec) -> Result<(LieAlgebra, Involution)> {
    match spec {
        PairSpec::SlSo(n) | PairSpec::SlSp(n) => {
            let n = *n;
            if n < 2 {
                return Err(Error::Unsupported("need N >= 2".into()));
            }
            let (mats, labels) = sl_basis(n);
            let span = MatSpan::new(n, &mats)?;
            let ambient = algebra_from_matrices(n, &mats, labels)?;
            let theta_of = |x: &Mat| -> Mat {
                match spec {
                    PairSpec::SlSo(_) => x.transpose().scale(&q(-1)),
                    PairSpec::SlSp(_) => {
                        let j = split_skew_form(n);
                        // J⁻¹ = −J, so −J Xᵀ J⁻¹ = J Xᵀ J
                        j.mul(&x.transpose()).mul(&j)
                    }
                    PairSpec::Swap(_) => unreachable!(),
                }
            };
            if matches!(spec, PairSpec::SlSp(_)) && n % 2 != 0 {
                return Err(Error::Unsupported("sp pair needs even N".into()));
            }
            let d = ambient.dim;
            let mut theta = Mat::zeros(d, d);
            for (i, m) in mats.iter().enumerate() {
                let coords = span.coords(&theta_of(m))?;
                for (r, c) in coords.into_iter().enumerate() {
                    theta.data[r][i] = c;
                }
            }
            Ok((ambient, Involution { matrix: theta }))
        }
        PairSpec::Swap(g) => {
            let ambient = direct_sum(g, g);
            let d = g.dim;
            let mut theta = Mat::zeros(2 * d, 2 * d);
            for i in 0..d {
                theta.data[d + i][i] = Q::one();
                theta.data[i][d + i] = Q::one();
            }
            Ok((ambient, Involution { matrix: theta }))
        }
    }
}

/// Direct sum of two algebras (each summand an ideal).
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let mut labels: Vec<String> = a.basis_labels.iter().map(|s| format!("l:{s}")).collect();
    labels.extend(b.basis_labels.iter().map(|s| format!("r:{s}")));
    let mut total = LieAlgebra::new(a.dim + b.dim, labels);
    for (i, j, k, c) in a.structure_entries() {
        let mut terms = total.bracket_basis(i, j);
        terms.push((k, c));
        total.set_bracket(i, j, terms);
    }
    for (i, j, k, c) in b.structure_entries() {
        let mut terms = total.bracket_basis(a.dim + i, a.dim + j);
        terms.push((a.dim + k, c));
        total.set_bracket(a.dim + i, a.dim + j, terms);
    }
    total
}

/// Contraction along a splitting g = g₀ ⊕ g₁ with [g₀,g₁] ⊆ g₁: keeps the
/// g₀-structure and the g₀-action on g₁, kills [g₁,g₁].
pub fn isotropy_contraction(
    alg: &LieAlgebra,
    g0: &SubspaceBasis,
    g1: &SubspaceBasis,
) -> Result<SemidirectData> {
    if g0.dim() + g1.dim() != alg.dim {
        return Err(Error::Invalid(format!(
            "eigenspace dims {} + {} do not sum to dim {}",
            g0.dim(),
            g1.dim(),
            alg.dim
        )));
    }
    let h = alg.induced_subalgebra(g0, None)?;
    let w = g1.dim();
    let mut action = Vec::with_capacity(h.dim);
    for u in &g0.vectors {
        let mut m = Mat::zeros(w, w);
        for (b, v) in g1.vectors.iter().enumerate() {
            let br = alg.bracket(u, v)?;
            let coords = g1.coords_of(&br).ok_or_else(|| {
                Error::Invalid("[g0, g1] does not stay inside g1".into())
            })?;
            for (r, c) in coords.into_iter().enumerate() {
                m.data[r][b] = c;
            }
        }
        action.push(m);
    }
    let rep = Representation {
        algebra: h.clone(),
        dim_module: w,
        action,
    };
    semidirect(&h, &rep)
}

/// ℤ₂-contraction of an algebra along an involution: g₀ ⋉ g₁ with g₁ abelian.
pub fn z2_contraction(alg: &LieAlgebra, inv: &Involution) -> Result<SemidirectData> {
    inv.validate(alg)?;
    let (g0, g1) = inv.eigenspaces(alg);
    isotropy_contraction(alg, &g0, &g1)
}

/// Parity constraint on nilpotent-orbit partitions: type B/D needs even parts
/// with even multiplicity (odd total size for B, even for D); type C needs
/// odd parts with even multiplicity and even total size.
pub fn partition_parity_ok(type_tag: char, parts: &[u32]) -> bool {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return false;
    }
    let size: u32 = parts.iter().sum();
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_default() += 1;
    }
    match type_tag {
        'A' => true,
        'B' | 'D' => {
            let size_ok = if type_tag == 'B' {
                size % 2 == 1
            } else {
                size % 2 == 0
            };
            size_ok && mult.iter().all(|(&p, &m)| p % 2 == 1 || m % 2 == 0)
        }
        'C' => size % 2 == 0 && mult.iter().all(|(&p, &m)| p % 2 == 0 || m % 2 == 0),
        _ => false,
    }
}

fn jordan_block(m: usize) -> Mat {
    let mut j = Mat::zeros(m, m);
    for i in 0..m - 1 {
        j.data[i][i + 1] = Q::one();
    }
    j
}

/// Alternating antidiagonal pairing on a single Jordan block: symmetric for
/// odd block size, skew for even.
fn alternating_form(m: usize) -> Mat {
    let mut b = Mat::zeros(m, m);
    for i in 0..m {
        b.data[i][m - 1 - i] = if i % 2 == 0 { q(1) } else { q(-1) };
    }
    b
}

fn place_block(dst: &mut Mat, src: &Mat, off: usize) {
    for i in 0..src.rows {
        for j in 0..src.cols {
            if !src.data[i][j].is_zero() {
                dst.data[off + i][off + j] = src.data[i][j].clone();
            }
        }
    }
}

/// Builds a nilpotent with Jordan type `parts` inside a form-compatible model
/// of the given classical type (block form for B/C/D, plain sl for A).
pub fn nilpotent_model(type_tag: char, parts: &[u32]) -> Result<NilpotentModel> {
    if !partition_parity_ok(type_tag, parts) {
        return Err(Error::BadPartition(parts.to_vec(), type_tag));
    }
    let n: usize = parts.iter().map(|&p| p as usize).sum();
    if type_tag == 'A' {
        let rank = n - 1;
        if rank == 0 {
            return Err(Error::Unsupported("partition (1) gives sl_1 = 0".into()));
        }
        let ca = classical_capped('A', rank, n.max(DEFAULT_RANK_CAP))?;
        let mut x = Mat::zeros(n, n);
        let mut off = 0;
        for &p in parts {
            place_block(&mut x, &jordan_block(p as usize), off);
            off += p as usize;
        }
        let span = MatSpan::new(n, &ca.matrix_basis)?;
        let element = span.coords(&x)?;
        return Ok(NilpotentModel {
            algebra: ca,
            element,
            matrix: x,
        });
    }
    let kind = if type_tag == 'C' {
        FormKind::Skew
    } else {
        FormKind::Symmetric
    };
    // Blocks: parts of the "native" parity stand alone with the alternating
    // pairing; the others come in equal pairs glued hyperbolically.
    let native_odd = type_tag != 'C';
    let tau = if type_tag == 'C' { q(-1) } else { q(1) };
    let mut x = Mat::zeros(n, n);
    let mut f = Mat::zeros(n, n);
    let mut off = 0;
    let mut pending: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in parts {
        let m = p as usize;
        let is_native = (p % 2 == 1) == native_odd;
        if is_native {
            place_block(&mut x, &jordan_block(m), off);
            place_block(&mut f, &alternating_form(m), off);
            off += m;
        } else if let Some(first_off) = pending.remove(&p) {
            // close the pair: x = diag(J_m, −J_mᵀ), F hyperbolic between them
            let _ = first_off;
            place_block(&mut x, &jordan_block(m), off);
            let neg_t = jordan_block(m).transpose().scale(&q(-1));
            place_block(&mut x, &neg_t, off + m);
            for i in 0..m {
                f.data[off + i][off + m + i] = Q::one();
                f.data[off + m + i][off + i] = tau.clone();
            }
            off += 2 * m;
        } else {
            pending.insert(p, off);
        }
    }
    if !pending.is_empty() {
        return Err(Error::BadPartition(parts.to_vec(), type_tag));
    }
    let rank = n / 2;
    let mats = form_condition_basis(n, &f, 1, false);
    let labels = (0..mats.len()).map(|i| format!("b{i}")).collect();
    let ca = build_model(
        type_tag,
        rank,
        n,
        mats,
        labels,
        Some(BilinearForm {
            matrix: f.clone(),
            kind,
        }),
        None,
    )?;
    let span = MatSpan::new(n, &ca.matrix_basis)?;
    let element = span.coords(&x)?;
    Ok(NilpotentModel {
        algebra: ca,
        element,
        matrix: x,
    })
}

/// Same as `nilpotent_model`, checked against an already built ambient model.
pub fn nilpotent_from_partition(ca: &ClassicalAlgebra, parts: &[u32]) -> Result<NilpotentModel> {
    let n: usize = parts.iter().map(|&p| p as usize).sum();
    if n != ca.n {
        return Err(Error::DimensionMismatch {
            expected: ca.n,
            got: n,
        });
    }
    nilpotent_model(ca.type_tag, parts)
}

/// Parses the CLI algebra descriptors: "A3", "B2", "heis2", "borel:A2",
/// "takiff:A1:2", "z2:A3:so", "z2:A3:sp", "z2:A1:swap", "sd:A1:adjoint".
pub fn build_descriptor(desc: &str) -> Result<LieAlgebra> {
    let parts: Vec<&str> = desc.split(':').collect();
    match parts.as_slice() {
        [simple] => build_simple(simple),
        ["borel", inner] => {
            let (tag, rank) = parse_type_rank(inner)?;
            borel(&classical(tag, rank)?)
        }
        ["takiff", inner, level] => {
            let base = build_simple(inner)?;
            let n: usize = level
                .parse()
                .map_err(|_| Error::Parse(format!("bad takiff level {level:?}")))?;
            if n == 0 {
                return Err(Error::Parse("takiff level must be >= 1".into()));
            }
            Ok(takiff(&base, n).total)
        }
        ["z2", inner, flavor] => {
            let (tag, rank) = parse_type_rank(inner)?;
            if tag != 'A' {
                return Err(Error::Unsupported(
                    "z2 descriptors take a type-A ambient".into(),
                ));
            }
            let n = rank + 1;
            let spec = match *flavor {
                "so" => PairSpec::SlSo(n),
                "sp" => PairSpec::SlSp(n),
                "swap" => PairSpec::Swap(classical(tag, rank)?.base),
                other => {
                    return Err(Error::Parse(format!(
                        "unknown involution flavor {other:?} (so, sp, swap)"
                    )))
                }
            };
            let (ambient, inv) = standard_involution(&spec)?;
            Ok(z2_contraction(&ambient, &inv)?.total)
        }
        ["sd", inner, rep_name] => {
            let (tag, rank) = parse_type_rank(inner)?;
            let ca = classical(tag, rank)?;
            let rep = ca.rep_catalog.get(*rep_name).ok_or_else(|| {
                Error::Parse(format!(
                    "no representation {rep_name:?} for {inner}; have: {:?}",
                    ca.rep_catalog.keys().collect::<Vec<_>>()
                ))
            })?;
            Ok(semidirect(&ca.base, rep)?.total)
        }
        _ => Err(Error::Parse(format!("cannot parse descriptor {desc:?}"))),
    }
}

fn build_simple(desc: &str) -> Result<LieAlgebra> {
    if let Some(rest) = desc.strip_prefix("heis") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad Heisenberg descriptor {desc:?}")))?;
        if n == 0 {
            return Err(Error::Parse("heis needs n >= 1".into()));
        }
        return Ok(heisenberg(n));
    }
    let (tag, rank) = parse_type_rank(desc)?;
    Ok(classical(tag, rank)?.base)
}

fn parse_type_rank(desc: &str) -> Result<(char, usize)> {
    let mut chars = desc.chars();
    let tag = chars
        .next()
        .ok_or_else(|| Error::Parse("empty descriptor".into()))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad type/rank descriptor {desc:?}")))?;
    Ok((tag, rank))
}
