//! Nilpotent-orbit combinatorics for the classical types: constrained
//! partition enumeration, dual partitions, closed-form centralizer dimensions
//! and differential ranks, stratum indices, and exhaustive inequality sweeps
//! cross-checked by an exact matrix oracle.

use num_traits::Zero;
use rayon::prelude::*;

use crate::builders::{nilpotent_model, pair_module_matrices, partition_parity_ok};
use crate::error::{Error, Result};
use crate::invariants::covariant_count;
use crate::linalg::Mat;
use crate::poly::pfaffian_scalar;
use crate::rational::Q;

/// A nilpotent-orbit partition constrained by the ambient classical type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    pub parts: Vec<u32>,
    pub type_tag: char,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPartition {
    pub parts: Vec<u32>,
}

impl Partition {
    pub fn new(type_tag: char, parts: Vec<u32>) -> Result<Self> {
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted != parts {
            return Err(Error::Invalid("parts must be weakly decreasing".into()));
        }
        if !partition_parity_ok(type_tag, &parts) {
            return Err(Error::BadPartition(parts, type_tag));
        }
        Ok(Partition { parts, type_tag })
    }

    pub fn parse(type_tag: char, text: &str) -> Result<Self> {
        let parts: Vec<u32> = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {s:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(type_tag, parts)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn dual(&self) -> DualPartition {
        let s = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=s)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        DualPartition { parts }
    }

    /// Rank of the ambient algebra whose defining module the partition fills.
    pub fn ambient_rank(&self) -> usize {
        match self.type_tag {
            'A' => self.size() - 1,
            'B' => (self.size() - 1) / 2,
            _ => self.size() / 2,
        }
    }

    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl DualPartition {
    pub fn undual(&self, type_tag: char) -> Result<Partition> {
        let s = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=s)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition::new(type_tag, parts)
    }
}

/// All type-constrained partitions of `size`, reverse-lexicographic.
pub fn enumerate_partitions(type_tag: char, size: usize) -> Result<Vec<Partition>> {
    let parity_ok = match type_tag {
        'A' => size >= 1,
        'B' => size % 2 == 1,
        'C' | 'D' => size % 2 == 0 && size >= 2,
        _ => false,
    };
    if !parity_ok {
        return Err(Error::BadPartition(vec![size as u32], type_tag));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_parts(size as u32, size as u32, &mut current, &mut |parts| {
        if partition_parity_ok(type_tag, parts) {
            out.push(Partition {
                parts: parts.to_vec(),
                type_tag,
            });
        }
    });
    Ok(out)
}

fn gen_parts(remaining: u32, max_part: u32, current: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        emit(current);
        return;
    }
    let top = remaining.min(max_part);
    for p in (1..=top).rev() {
        current.push(p);
        gen_parts(remaining - p, p, current, emit);
        current.pop();
    }
}

fn odd_part_count(parts: &[u32]) -> usize {
    parts.iter().filter(|&&p| p % 2 == 1).count()
}

/// dim z_g(x) from the dual partition (Springer–Steinberg closed forms).
pub fn centralizer_dim(type_tag: char, p: &Partition) -> usize {
    let sq: usize = p
        .dual()
        .parts
        .iter()
        .map(|&h| (h as usize) * (h as usize))
        .sum();
    match type_tag {
        'A' => sq - 1,
        'B' | 'D' => (sq - odd_part_count(&p.parts)) / 2,
        'C' => (sq + odd_part_count(&p.parts)) / 2,
        _ => unreachable!(),
    }
}

/// Rank of the differential of the adjoint-quotient map at the orbit.
pub fn rank_dpi(type_tag: char, p: &Partition) -> usize {
    let s = p.parts[0] as usize;
    match type_tag {
        'A' => s - 1,
        'B' | 'C' => s / 2,
        'D' => {
            let n = p.size() / 2;
            // special two-row branches take precedence over the general one
            if p.parts.len() == 2 && p.parts[1] % 2 == 1 {
                let i = p.parts[1] as usize;
                return (2 * n - i + 1) / 2;
            }
            if p.parts.len() == 2 && p.parts[0] == p.parts[1] && p.parts[0] % 2 == 0 {
                return p.parts[0] as usize / 2;
            }
            s / 2
        }
        _ => unreachable!(),
    }
}

/// The stratum i with x in X_i: min(m, floor((eta_1 - 1)/2)) where m is the
/// number of basic covariants of the ambient pair.
pub fn stratum_index(_type_tag: char, p: &Partition, m: usize) -> usize {
    m.min((p.parts[0] as usize - 1) / 2)
}

/// Left-hand side of the Takiff inequality: dim z + 2 rk dpi - 3 rk g.
pub fn l_takiff(type_tag: char, p: &Partition, rank: usize) -> i64 {
    centralizer_dim(type_tag, p) as i64 + 2 * rank_dpi(type_tag, p) as i64 - 3 * rank as i64
}

/// Left-hand side of the Z2-contraction inequality for the pair
/// (sl_N, so_N) or (sl_2n, sp_2n): dim z - rk g0 - 2(m - stratum).
pub fn l_z2(type_tag: char, p: &Partition) -> Result<i64> {
    if type_tag == 'A' {
        return Err(Error::Unsupported(
            "the contraction inequality needs a fixed-point type B, C or D".into(),
        ));
    }
    let rank = p.ambient_rank();
    let m = covariant_count(type_tag, rank)?;
    let stratum = stratum_index(type_tag, p, m);
    Ok(centralizer_dim(type_tag, p) as i64 - rank as i64 - 2 * (m as i64 - stratum as i64))
}

fn ambient_group_dim(type_tag: char, size: usize) -> usize {
    match type_tag {
        'A' => size * size - 1,
        'B' | 'D' => size * (size - 1) / 2,
        'C' => size * (size + 1) / 2,
        _ => unreachable!(),
    }
}

/// One orbit with all its formula-derived numeric invariants.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    pub partition: Partition,
    pub centralizer_dim: usize,
    pub rank_dpi: usize,
    pub stratum_index: usize,
    pub l_takiff: i64,
    pub l_z2: Option<i64>,
}

impl OrbitRecord {
    pub fn from_partition(p: &Partition) -> Result<OrbitRecord> {
        let tag = p.type_tag;
        let rank = p.ambient_rank();
        let stratum = if tag == 'A' {
            (p.parts[0] as usize - 1) / 2
        } else {
            stratum_index(tag, p, covariant_count(tag, rank)?)
        };
        Ok(OrbitRecord {
            partition: p.clone(),
            centralizer_dim: centralizer_dim(tag, p),
            rank_dpi: rank_dpi(tag, p),
            stratum_index: stratum,
            l_takiff: l_takiff(tag, p, rank),
            l_z2: if tag == 'A' { None } else { Some(l_z2(tag, p)?) },
        })
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.partition, self.centralizer_dim, self.rank_dpi, self.l_takiff, self.stratum_index
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    Brilliant,
    BrilTakiff,
}

impl std::str::FromStr for Inequality {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brilliant" => Ok(Inequality::Brilliant),
            "bril-takiff" | "bril_takiff" => Ok(Inequality::BrilTakiff),
            other => Err(Error::Parse(format!("unknown inequality {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub records: Vec<(usize, OrbitRecord)>,
    pub violations: Vec<(usize, Partition)>,
    pub equality_cases: Vec<(usize, Partition)>,
}

impl SweepReport {
    pub fn to_json(&self) -> serde_json::Value {
        let fmt = |list: &[(usize, Partition)]| {
            list.iter()
                .map(|(r, p)| serde_json::json!({"rank": r, "partition": p.to_text()}))
                .collect::<Vec<_>>()
        };
        serde_json::json!({
            "violations": fmt(&self.violations),
            "equality_cases": fmt(&self.equality_cases),
        })
    }
}

fn defining_size(type_tag: char, rank: usize) -> usize {
    match type_tag {
        'A' => rank + 1,
        'B' => 2 * rank + 1,
        _ => 2 * rank,
    }
}

fn min_rank(type_tag: char) -> usize {
    // so_2 has no nilpotent orbit partitions besides (1,1)
    if type_tag == 'D' {
        2
    } else {
        1
    }
}

/// Evaluates the chosen inequality on every orbit partition for every rank up
/// to `max_rank`; an empty violation list certifies the bound at this scale.
pub fn sweep(inequality: Inequality, type_tag: char, max_rank: usize) -> Result<SweepReport> {
    if inequality == Inequality::Brilliant && type_tag == 'A' {
        return Err(Error::Unsupported(
            "the contraction inequality needs a fixed-point type B, C or D".into(),
        ));
    }
    let mut records = Vec::new();
    for rank in min_rank(type_tag)..=max_rank {
        let parts = enumerate_partitions(type_tag, defining_size(type_tag, rank))?;
        let batch: Vec<(usize, OrbitRecord)> = parts
            .par_iter()
            .map(|p| OrbitRecord::from_partition(p).map(|r| (rank, r)))
            .collect::<Result<_>>()?;
        records.extend(batch);
    }
    let mut violations = Vec::new();
    let mut equality_cases = Vec::new();
    for (rank, rec) in &records {
        let value = match inequality {
            Inequality::BrilTakiff => rec.l_takiff,
            Inequality::Brilliant => rec.l_z2.expect("non-A sweep"),
        };
        if inequality == Inequality::BrilTakiff {
            // equivalent codimension form, asserted for every swept orbit
            let dim_g = ambient_group_dim(type_tag, rec.partition.size()) as i64;
            let orbit_dim = dim_g - rec.centralizer_dim as i64;
            let dim_cone = dim_g - *rank as i64;
            debug_assert_eq!(
                (dim_cone - orbit_dim >= 2 * (*rank as i64 - rec.rank_dpi as i64)),
                value >= 0
            );
        }
        if value < 0 {
            violations.push((*rank, rec.partition.clone()));
        } else if value == 0 {
            equality_cases.push((*rank, rec.partition.clone()));
        }
    }
    Ok(SweepReport {
        records,
        violations,
        equality_cases,
    })
}

/// Sweeps the equidimensionality condition for n-fold products:
/// dim z_g(x) - rk g >= n (rk g - rk dpi).
pub fn not_vain_bounds(type_tag: char, max_rank: usize, copies: usize) -> Result<SweepReport> {
    let mut records = Vec::new();
    let mut violations = Vec::new();
    for rank in min_rank(type_tag)..=max_rank {
        for p in enumerate_partitions(type_tag, defining_size(type_tag, rank))? {
            let rec = OrbitRecord::from_partition(&p)?;
            let lhs = rec.centralizer_dim as i64 - rank as i64;
            let rhs = copies as i64 * (rank as i64 - rec.rank_dpi as i64);
            if lhs < rhs {
                violations.push((rank, p.clone()));
            }
            records.push((rank, rec));
        }
    }
    Ok(SweepReport {
        records,
        violations,
        equality_cases: Vec::new(),
    })
}

fn trace_pair(a: &Mat, b: &Mat) -> Q {
    a.mul(b).trace()
}

fn pfaffian_minor(a: &Mat, i: usize, j: usize) -> Q {
    let keep: Vec<usize> = (0..a.rows).filter(|&k| k != i && k != j).collect();
    let mut m = Mat::zeros(keep.len(), keep.len());
    for (r, &kr) in keep.iter().enumerate() {
        for (c, &kc) in keep.iter().enumerate() {
            m.data[r][c] = a.data[kr][kc].clone();
        }
    }
    pfaffian_scalar(&m)
}

fn pfaffian_gradient_row(fx: &Mat, basis: &[Mat], form: &Mat) -> Vec<Q> {
    basis
        .iter()
        .map(|b| {
            let fb = form.mul(b);
            let mut acc = Q::zero();
            for i in 0..fx.rows {
                for j in i + 1..fx.cols {
                    if fb.data[i][j].is_zero() {
                        continue;
                    }
                    let sign = if (i + j + 1) % 2 == 0 { -1 } else { 1 };
                    let minor = pfaffian_minor(fx, i, j);
                    if !minor.is_zero() {
                        acc += Q::from_integer(sign.into()) * &minor * &fb.data[i][j];
                    }
                }
            }
            acc
        })
        .collect()
}

/// Independent linear-algebra recomputation of the orbit invariants from an
/// explicit matrix model: centralizer as a kernel, differential rank from the
/// gradients of the basic invariants, stratum from actual covariant values.
pub fn matrix_oracle(p: &Partition) -> Result<OrbitRecord> {
    let tag = p.type_tag;
    let model = nilpotent_model(tag, &p.parts)?;
    let ca = &model.algebra;
    let alg_basis = &ca.matrix_basis;
    let centralizer = ca.base.centralizer(&model.element)?.dim();
    let rank = ca.rank;

    // d(tr x^k)[b] = k tr(x^{k-1} b): one covector row per basic invariant
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let degrees: Vec<usize> = match tag {
        'A' => (2..=ca.n).collect(),
        'B' | 'C' => (1..=rank).map(|i| 2 * i).collect(),
        'D' => (1..rank).map(|i| 2 * i).collect(),
        _ => unreachable!(),
    };
    for k in degrees {
        let xp = model.matrix.pow((k - 1) as u32);
        rows.push(alg_basis.iter().map(|b| trace_pair(&xp, b)).collect());
    }
    if tag == 'D' {
        let form = &ca.form.as_ref().expect("D has a form").matrix;
        let fx = form.mul(&model.matrix);
        rows.push(pfaffian_gradient_row(&fx, alg_basis, form));
    }
    let oracle_rank_dpi = Mat::from_rows(rows).rank();

    let stratum = if tag == 'A' {
        let mut i = 0usize;
        while !model.matrix.pow(2 * (i as u32 + 1)).is_zero() {
            i += 1;
        }
        i
    } else {
        // values of the basic covariants x -> tr(x^{2i} W_b): the stratum is
        // how many of them are nonzero and independent
        let module = pair_module_matrices(ca)?;
        let m = covariant_count(tag, rank)?;
        let mut value_rows = Vec::new();
        for i in 1..=m {
            let xp = model.matrix.pow(2 * i as u32);
            value_rows.push(module.iter().map(|w| trace_pair(&xp, w)).collect());
        }
        Mat::from_rows(value_rows).rank()
    };

    Ok(OrbitRecord {
        partition: p.clone(),
        centralizer_dim: centralizer,
        rank_dpi: oracle_rank_dpi,
        stratum_index: stratum,
        l_takiff: centralizer as i64 + 2 * oracle_rank_dpi as i64 - 3 * rank as i64,
        l_z2: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(tag: char, parts: &[u32]) -> Partition {
        Partition::new(tag, parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_matches_known_sets() {
        let c4: Vec<Vec<u32>> = enumerate_partitions('C', 4)
            .unwrap()
            .into_iter()
            .map(|p| p.parts)
            .collect();
        assert_eq!(
            c4,
            vec![vec![4], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        let a3: Vec<Vec<u32>> = enumerate_partitions('A', 3)
            .unwrap()
            .into_iter()
            .map(|p| p.parts)
            .collect();
        assert_eq!(a3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        let b5: Vec<Vec<u32>> = enumerate_partitions('B', 5)
            .unwrap()
            .into_iter()
            .map(|p| p.parts)
            .collect();
        assert_eq!(
            b5,
            vec![vec![5], vec![3, 1, 1], vec![2, 2, 1], vec![1, 1, 1, 1, 1]]
        );
        assert!(enumerate_partitions('B', 4).is_err());
        assert!(enumerate_partitions('C', 5).is_err());
    }

    #[test]
    fn dual_examples_and_involution() {
        assert_eq!(p('A', &[4]).dual().parts, vec![1, 1, 1, 1]);
        assert_eq!(p('A', &[2, 2]).dual().parts, vec![2, 2]);
        assert_eq!(p('A', &[3, 1]).dual().parts, vec![2, 1, 1]);
        for size in 1..=9 {
            for q in enumerate_partitions('A', size).unwrap() {
                let d = q.dual();
                assert_eq!(d.parts.iter().sum::<u32>() as usize, q.size());
                assert_eq!(d.parts.len() as u32, q.parts[0]);
                assert_eq!(d.undual('A').unwrap().parts, q.parts);
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(centralizer_dim('A', &p('A', &[3, 1])), 5);
        assert_eq!(centralizer_dim('C', &p('C', &[2, 2])), 4);
        assert_eq!(centralizer_dim('B', &p('B', &[5])), 2);
        assert_eq!(rank_dpi('A', &p('A', &[3, 1])), 2);
        assert_eq!(rank_dpi('B', &p('B', &[5])), 2);
        assert_eq!(rank_dpi('D', &p('D', &[3, 1])), 2);
        assert_eq!(rank_dpi('D', &p('D', &[2, 2])), 1);
        assert_eq!(rank_dpi('D', &p('D', &[3, 3])), 2);
        assert_eq!(stratum_index('C', &p('C', &[4]), 1), 1);
        assert_eq!(stratum_index('C', &p('C', &[1, 1, 1, 1]), 1), 0);
        assert_eq!(stratum_index('B', &p('B', &[3, 1, 1]), 2), 1);
        assert_eq!(l_takiff('A', &p('A', &[3, 1]), 3), 0);
        assert_eq!(l_takiff('A', &p('A', &[5]), 4), 0);
        assert_eq!(l_takiff('C', &p('C', &[2, 2]), 2), 0);
        assert_eq!(l_z2('C', &p('C', &[2, 2])).unwrap(), 0);
        assert_eq!(l_z2('C', &p('C', &[4])).unwrap(), 0);
        assert_eq!(l_z2('B', &p('B', &[1, 1, 1, 1, 1])).unwrap(), 4);
    }

    #[test]
    fn sweeps_have_no_violations() {
        let rep = sweep(Inequality::BrilTakiff, 'A', 6).unwrap();
        assert!(rep.violations.is_empty());
        for (_, q) in &rep.equality_cases {
            assert!(q.parts.len() <= 2);
        }
        for (rank, rec) in &rep.records {
            if rec.partition.parts.len() <= 2 {
                assert_eq!(l_takiff('A', &rec.partition, *rank), 0);
            }
        }
        let rep = sweep(Inequality::BrilTakiff, 'C', 6).unwrap();
        assert!(rep.violations.is_empty());
        for (_, q) in &rep.records.iter().map(|(r, rec)| (*r, rec.partition.clone())).collect::<Vec<_>>() {
            let eq = q.dual().parts[0] <= 2;
            assert_eq!(
                rep.equality_cases.iter().any(|(_, e)| e == q),
                eq,
                "partition {q}"
            );
        }
        let rep = sweep(Inequality::Brilliant, 'C', 10).unwrap();
        assert!(rep.violations.is_empty());
        let rep = sweep(Inequality::Brilliant, 'B', 5).unwrap();
        assert!(rep.violations.is_empty());
        let rep = sweep(Inequality::Brilliant, 'D', 5).unwrap();
        assert!(rep.violations.is_empty());
    }

    #[test]
    fn not_vain_sweeps() {
        assert!(not_vain_bounds('A', 5, 2).unwrap().violations.is_empty());
        assert!(not_vain_bounds('C', 4, 1).unwrap().violations.is_empty());
        let rep = not_vain_bounds('A', 3, 3).unwrap();
        assert!(rep
            .violations
            .iter()
            .any(|(r, q)| *r == 3 && q.parts == vec![3, 1]));
    }

    #[test]
    fn oracle_matches_quoted_examples() {
        let rec = matrix_oracle(&p('A', &[3, 1])).unwrap();
        assert_eq!(rec.centralizer_dim, 5);
        assert_eq!(rec.rank_dpi, 2);
        let rec = matrix_oracle(&p('C', &[2, 2])).unwrap();
        assert_eq!(rec.centralizer_dim, 4);
        assert_eq!(rec.stratum_index, 0);
        let rec = matrix_oracle(&p('B', &[5])).unwrap();
        assert_eq!(rec.centralizer_dim, 2);
        assert_eq!(rec.stratum_index, 2);
    }

    #[test]
    fn oracle_matches_formulas_small() {
        for (tag, sizes) in [
            ('A', vec![2, 3, 4, 5]),
            ('B', vec![3, 5, 7]),
            ('C', vec![2, 4, 6]),
            ('D', vec![4, 6]),
        ] {
            for size in sizes {
                for q in enumerate_partitions(tag, size).unwrap() {
                    if tag == 'A' && q.parts == vec![1] {
                        continue;
                    }
                    let formula = OrbitRecord::from_partition(&q).unwrap();
                    let oracle = matrix_oracle(&q).unwrap();
                    assert_eq!(
                        oracle.centralizer_dim, formula.centralizer_dim,
                        "centralizer {tag} {q}"
                    );
                    assert_eq!(oracle.rank_dpi, formula.rank_dpi, "rank_dpi {tag} {q}");
                    assert_eq!(
                        oracle.stratum_index, formula.stratum_index,
                        "stratum {tag} {q}"
                    );
                }
            }
        }
    }
}
