//! Integer matrices and Smith normal form over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadShape(format!("matrix dimensions {rows}x{cols}")));
        }
        Ok(IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = IntMatrix::zeros(n, n)?;
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::BadShape("ragged rows".into()));
            }
            for (j, &v) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] -= q · row[src]`, touching columns from `from` on.
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for j in from..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] -= v;
        }
    }

    /// `col[dst] -= q · col[src]`, touching rows from `from` on.
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for i in from..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] -= v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Invariant factors `d_1 | d_2 | …` (all `> 1`) and the free rank of the cokernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl SnfResult {
    pub fn factors_u64(&self) -> Vec<u64> {
        self.invariant_factors.iter().map(|d| u64::try_from(d).unwrap_or(u64::MAX)).collect()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Prime-power decomposition of the torsion part, as `(prime, exponent)` pairs ordered by prime power.
    /// Cofactors without a prime factor below 10⁶ are kept whole and reported with exponent 1.
    pub fn elementary_divisors(&self) -> Vec<(BigInt, u32)> {
        let mut out = Vec::new();
        for d in &self.invariant_factors {
            let mut d = d.clone();
            let mut p = BigInt::from(2);
            let limit = BigInt::from(1_000_000);
            while &p * &p <= d && p < limit {
                let mut e = 0;
                while (&d % &p).is_zero() {
                    d /= &p;
                    e += 1;
                }
                if e > 0 {
                    out.push((p.clone(), e));
                }
                p += 1;
            }
            if d > BigInt::one() {
                out.push((d, 1));
            }
        }
        out.sort_by_cached_key(|(p, e)| (num_traits::pow(p.clone(), *e as usize), p.clone()));
        out
    }
}

/// `Z^3 ⊕ Z5^2 ⊕ Z7` style rendering from elementary divisors; the trivial group is `0`.
impl fmt::Display for SnfResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let ed = self.elementary_divisors();
        let mut i = 0;
        while i < ed.len() {
            let mut count = 1;
            while i + count < ed.len() && ed[i + count] == ed[i] {
                count += 1;
            }
            let (p, e) = &ed[i];
            let q = num_traits::pow(p.clone(), *e as usize);
            parts.push(if count == 1 { format!("Z{q}") } else { format!("Z{q}^{count}") });
            i += count;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Diagonalizes by unimodular row and column operations, always pivoting on the
/// smallest nonzero entry of the remaining block.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diagonal: Vec<BigInt> = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = &a[(i, j)];
                    if !v.is_zero() && best.map_or(true, |(bi, bj)| v.abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(diagonal, cols);
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if !a[(i, t)].is_zero() {
                    let q = a[(i, t)].div_floor(&pivot);
                    a.sub_row(i, t, &q, t);
                    clean &= a[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[(t, j)].is_zero() {
                    let q = a[(t, j)].div_floor(&pivot);
                    a.sub_col(j, t, &q, t);
                    clean &= a[(t, j)].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // The pivot must divide the rest of the block; otherwise fold an offending row in and retry.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[(i, j)] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[(i, j)].clone();
                        a[(t, j)] += v;
                    }
                }
                None => {
                    diagonal.push(pivot.abs());
                    break;
                }
            }
        }
    }
    finish(diagonal, cols)
}

fn finish(diagonal: Vec<BigInt>, cols: usize) -> SnfResult {
    let rank = diagonal.len();
    SnfResult {
        invariant_factors: diagonal.into_iter().filter(|d| !d.is_one()).collect(),
        free_rank: cols - rank,
    }
}

/// Exponent-sum matrix of a presentation: one row per relator, one column per generator.
pub fn exponent_matrix(p: &Presentation) -> Result<IntMatrix> {
    let rows = p.relators.len().max(1);
    let mut m = IntMatrix::zeros(rows, p.generator_count().max(1))?;
    for (i, r) in p.relators.iter().enumerate() {
        for g in 0..p.generator_count() {
            m[(i, g)] = BigInt::from(r.exponent_sum(g as u32));
        }
    }
    Ok(m)
}

/// Abelianization of a finitely presented group.
pub fn abelianization(p: &Presentation) -> Result<SnfResult> {
    if p.generator_count() == 0 {
        return Ok(SnfResult { invariant_factors: Vec::new(), free_rank: 0 });
    }
    Ok(smith_normal_form(&exponent_matrix(p)?))
}
