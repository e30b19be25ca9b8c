//! Sparse multivariate polynomials over exact rationals, polynomial maps,
//! and matrices with polynomial entries (for charpoly and Pfaffian work).

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::Mat;
use crate::rational::{format_q, Q};

/// Exponent vectors are dense `u16` multi-indices of length `num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub num_vars: usize,
    pub terms: HashMap<Vec<u16>, Q>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial {
            num_vars,
            terms: HashMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Q) -> Self {
        let mut p = Polynomial::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; num_vars], c);
        }
        p
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars);
        let mut e = vec![0u16; num_vars];
        e[i] = 1;
        let mut p = Polynomial::zero(num_vars);
        p.terms.insert(e, Q::one());
        p
    }

    pub fn monomial(num_vars: usize, exps: Vec<u16>, c: Q) -> Self {
        assert_eq!(exps.len(), num_vars);
        let mut p = Polynomial::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, exps: Vec<u16>, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.num_vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = Polynomial::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.num_vars, Q::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.num_vars);
        let mut out = Polynomial::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut de = e.clone();
            de[i] -= 1;
            out.add_term(de, c * Q::from_integer(e[i].into()));
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.num_vars);
        let mut sum = Q::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &a) in point.iter().zip(e) {
                for _ in 0..a {
                    v *= x;
                }
            }
            sum += v;
        }
        sum
    }

    pub fn gradient_at(&self, point: &[Q]) -> Vec<Q> {
        (0..self.num_vars)
            .map(|i| self.derivative(i).eval(point))
            .collect()
    }

    /// Reinterprets the polynomial in a larger variable ring, shifting its
    /// variables to start at `offset`.
    pub fn lift(&self, new_num_vars: usize, offset: usize) -> Polynomial {
        assert!(offset + self.num_vars <= new_num_vars);
        let mut out = Polynomial::zero(new_num_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0u16; new_num_vars];
            ne[offset..offset + self.num_vars].copy_from_slice(e);
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Uses only variables `< k` (true for the zero polynomial).
    pub fn depends_only_on_first(&self, k: usize) -> bool {
        self.terms.keys().all(|e| e[k..].iter().all(|&a| a == 0))
    }

    /// Terms in deterministic graded-lex order (degree descending, then
    /// exponent vector descending).
    pub fn sorted_terms(&self) -> Vec<(Vec<u16>, Q)> {
        let mut ts: Vec<(Vec<u16>, Q)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        ts.sort_by(|a, b| {
            let da: u32 = a.0.iter().map(|&x| x as u32).sum();
            let db: u32 = b.0.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then_with(|| b.0.cmp(&a.0))
        });
        ts
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, &a)| format!("x{i}^{a}"))
                    .collect();
                if vars.is_empty() {
                    format_q(c)
                } else {
                    format!("{} * {}", format_q(c), vars.join(" "))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .iter()
            .map(|(e, c)| serde_json::json!([e, format_q(c)]))
            .collect();
        serde_json::json!({"num_vars": self.num_vars, "terms": terms})
    }
}

/// A polynomial map between coordinate spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(domain_dim: usize, components: Vec<Polynomial>) -> Self {
        assert!(components.iter().all(|p| p.num_vars == domain_dim));
        PolyMap {
            domain_dim,
            codomain_dim: components.len(),
            components,
        }
    }

    pub fn zero(domain_dim: usize, codomain_dim: usize) -> Self {
        PolyMap {
            domain_dim,
            codomain_dim,
            components: vec![Polynomial::zero(domain_dim); codomain_dim],
        }
    }

    pub fn eval(&self, point: &[Q]) -> Vec<Q> {
        self.components.iter().map(|p| p.eval(point)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }
}

/// Matrix with polynomial entries, all over a common variable ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub num_vars: usize,
    pub data: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, num_vars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            num_vars,
            data: vec![vec![Polynomial::zero(num_vars); cols]; rows],
        }
    }

    pub fn identity_scaled(n: usize, num_vars: usize, p: &Polynomial) -> Self {
        let mut m = PolyMatrix::zeros(n, n, num_vars);
        for i in 0..n {
            m.data[i][i] = p.clone();
        }
        m
    }

    /// Constant polynomial matrix from an exact rational matrix.
    pub fn from_constant(m: &Mat, num_vars: usize) -> Self {
        let mut out = PolyMatrix::zeros(m.rows, m.cols, num_vars);
        for i in 0..m.rows {
            for j in 0..m.cols {
                out.data[i][j] = Polynomial::constant(num_vars, m.data[i][j].clone());
            }
        }
        out
    }

    /// The generic element Σ_i x_i B_i as a matrix of linear polynomials.
    pub fn generic_element(mats: &[Mat]) -> Self {
        let num_vars = mats.len();
        let (rows, cols) = (mats[0].rows, mats[0].cols);
        let mut out = PolyMatrix::zeros(rows, cols, num_vars);
        for (i, b) in mats.iter().enumerate() {
            for r in 0..rows {
                for c in 0..cols {
                    if !b.data[r][c].is_zero() {
                        out.data[r][c] = out.data[r][c].add(&Polynomial::monomial(
                            num_vars,
                            {
                                let mut e = vec![0u16; num_vars];
                                e[i] = 1;
                                e
                            },
                            b.data[r][c].clone(),
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i][j] = out.data[i][j].add(&other.data[i][j]);
            }
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = PolyMatrix::zeros(self.rows, other.cols, self.num_vars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.data[k][j].is_zero() {
                        continue;
                    }
                    out.data[i][j] = out.data[i][j].add(&self.data[i][k].mul(&other.data[k][j]));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> PolyMatrix {
        assert_eq!(self.rows, self.cols);
        let mut acc =
            PolyMatrix::identity_scaled(self.rows, self.num_vars, &Polynomial::constant(self.num_vars, Q::one()));
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Polynomial {
        let mut t = Polynomial::zero(self.num_vars);
        for i in 0..self.rows.min(self.cols) {
            t = t.add(&self.data[i][i]);
        }
        t
    }

    pub fn eval(&self, point: &[Q]) -> Mat {
        let mut m = Mat::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i][j] = self.data[i][j].eval(point);
            }
        }
        m
    }
}

fn pfaffian_rec<T, Zero, Mul, Add, Neg>(
    idx: &[usize],
    entry: &dyn Fn(usize, usize) -> T,
    zero: &Zero,
    mul: &Mul,
    add: &Add,
    neg: &Neg,
) -> T
where
    Zero: Fn() -> T,
    Mul: Fn(&T, &T) -> T,
    Add: Fn(&T, &T) -> T,
    Neg: Fn(&T) -> T,
{
    if idx.is_empty() {
        // Pf of the empty matrix is 1; callers special-case the top level
        unreachable!("handled by caller");
    }
    if idx.len() == 2 {
        return entry(idx[0], idx[1]);
    }
    let mut acc = zero();
    for j in 1..idx.len() {
        let a = entry(idx[0], idx[j]);
        let rest: Vec<usize> = idx[1..]
            .iter()
            .copied()
            .filter(|&k| k != idx[j])
            .collect();
        let sub = pfaffian_rec(&rest, entry, zero, mul, add, neg);
        let term = mul(&a, &sub);
        acc = if j % 2 == 1 {
            add(&acc, &term)
        } else {
            add(&acc, &neg(&term))
        };
    }
    acc
}

/// Pfaffian of an even-size skew-symmetric rational matrix.
pub fn pfaffian_scalar(m: &Mat) -> Q {
    assert_eq!(m.rows, m.cols);
    assert!(m.rows % 2 == 0);
    if m.rows == 0 {
        return Q::one();
    }
    let idx: Vec<usize> = (0..m.rows).collect();
    pfaffian_rec(
        &idx,
        &|i, j| m.data[i][j].clone(),
        &Q::zero,
        &|a, b| a * b,
        &|a, b| a + b,
        &|a| -a.clone(),
    )
}

/// Pfaffian of an even-size skew-symmetric polynomial matrix.
pub fn pfaffian_poly(m: &PolyMatrix) -> Polynomial {
    assert_eq!(m.rows, m.cols);
    assert!(m.rows % 2 == 0);
    if m.rows == 0 {
        return Polynomial::constant(m.num_vars, Q::one());
    }
    let nv = m.num_vars;
    let idx: Vec<usize> = (0..m.rows).collect();
    pfaffian_rec(
        &idx,
        &|i, j| m.data[i][j].clone(),
        &|| Polynomial::zero(nv),
        &Polynomial::mul,
        &Polynomial::add,
        &Polynomial::neg,
    )
}

/// Characteristic polynomial coefficients via Faddeev–LeVerrier:
/// det(λI − A) = λ^N + c₁λ^{N−1} + ⋯ + c_N, returned as (c₁, …, c_N)
/// with polynomial entries.
pub fn charpoly_coefficients(a: &PolyMatrix) -> Vec<Polynomial> {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let nv = a.num_vars;
    let one = Polynomial::constant(nv, Q::one());
    let mut m = PolyMatrix::identity_scaled(n, nv, &one);
    let mut coeffs = Vec::with_capacity(n);
    for k in 1..=n {
        let am = a.mul(&m);
        let ck = am.trace().scale(&(-Q::one() / Q::from_integer(k.into())));
        m = am.add(&PolyMatrix::identity_scaled(n, nv, &ck));
        coeffs.push(ck);
    }
    coeffs
}

#[derive(Debug, Clone, Serialize)]
pub struct SerializedPoly {
    pub text: String,
}
