//! Exact integer linear algebra: determinants, ranks and Smith normal forms.
//!
//! Entries are stored as `i64`; every elimination runs over `BigInt` so
//! intermediate growth can never overflow.

#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)]).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)]).sum())
            .collect()
    }

    /// `P M P^T` for the permutation sending index `i` to `perm[i]`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(perm[i], perm[j])] = self[(i, j)];
            }
        }
        out
    }

    fn to_big(&self) -> Vec<Vec<BigInt>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged rows"));
        }
        Ok(IntMatrix::from_rows(&rows))
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_big();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Rank over the rationals, by fraction-free row reduction.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.to_big();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let (x, y) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                let v = &a[i][j] * &x - &a[r][j] * &y;
                a[i][j] = v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Invariant factors of an integer matrix.
///
/// `Cok M = Z/d_1 + ... + Z/d_r + Z^free_rank` where `free_rank` is the
/// number of rows minus the rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors different from 1, i.e. the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// Cokernel as text, e.g. `Z/3 + Z`, or `0`.
    pub fn cokernel_string(&self) -> String {
        let mut parts: Vec<String> = self.torsion().iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl Serialize for SmithForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let factors: Vec<String> = self
            .invariant_factors
            .iter()
            .map(BigInt::to_string)
            .collect();
        let mut st = s.serialize_struct("SmithForm", 3)?;
        st.serialize_field("invariant_factors", &factors)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("cokernel", &self.cokernel_string())?;
        st.end()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.to_big();
    let (rows, cols) = (m.rows(), m.cols());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pivot else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[i][j] - &q * &a[t][j];
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &a[i][j] - &q * &a[i][t];
                    a[i][j] = v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot row and column are clear; enforce divisibility
                let offender = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
                match offender {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = &a[t][j] + &a[i][j];
                            a[t][j] = v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let cand = (t..rows)
                .map(|i| (i, t))
                .chain((t..cols).map(|j| (t, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
                .unwrap();
            a.swap(t, cand.0);
            for row in a.iter_mut() {
                row.swap(t, cand.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    SmithForm {
        free_rank: rows - diag.len(),
        invariant_factors: diag,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // cofactor expansion, independent of the elimination path
    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn determinant_examples() {
        let c223 = IntMatrix::from_rows(&[vec![1, 0, 1], vec![1, 1, 1], vec![0, 1, 1]]);
        assert_eq!(determinant(&c223).unwrap(), BigInt::from(1));
        let c233 = IntMatrix::from_rows(&[vec![1, 1, 1], vec![1, 1, 1], vec![0, 1, 1]]);
        assert_eq!(determinant(&c233).unwrap(), BigInt::from(0));
        assert_eq!(
            determinant(&IntMatrix::identity(3)).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            determinant(&IntMatrix::zeros(2, 3)),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
        let needs_pivot = IntMatrix::from_rows(&[vec![0, 2], vec![3, 1]]);
        assert_eq!(determinant(&needs_pivot).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn smith_examples() {
        let c233 = IntMatrix::from_rows(&[vec![1, 1, 1], vec![1, 1, 1], vec![0, 1, 1]]);
        let s = smith_normal_form(&c233);
        assert_eq!(s.invariant_factors, big(&[1, 1]));
        assert_eq!(s.free_rank, 1);
        assert_eq!(s.cokernel_string(), "Z");

        let c22 = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        let s = smith_normal_form(&c22);
        assert_eq!(s.invariant_factors, big(&[1]));
        assert_eq!(s.free_rank, 1);

        let s = smith_normal_form(&IntMatrix::identity(4));
        assert_eq!(s.invariant_factors, big(&[1, 1, 1, 1]));
        assert_eq!(s.free_rank, 0);
        assert_eq!(s.cokernel_string(), "0");

        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![7]]));
        assert_eq!(s.invariant_factors, big(&[7]));
        assert_eq!(s.cokernel_string(), "Z/7");

        // diag(2, 3) ~ diag(1, 6)
        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.invariant_factors, big(&[1, 6]));
    }

    #[test]
    fn rank_examples() {
        let c233 = IntMatrix::from_rows(&[vec![1, 1, 1], vec![1, 1, 1], vec![0, 1, 1]]);
        assert_eq!(rank(&c233), 2);
        assert_eq!(rank(&IntMatrix::zeros(3, 2)), 0);
        assert_eq!(rank(&IntMatrix::identity(5)), 5);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-6i64..7, n), n))
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            prop_assert_eq!(determinant(&m).unwrap(), BigInt::from(cofactor_det(&rows)));
        }

        #[test]
        fn smith_is_consistent(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            let s = smith_normal_form(&m);
            for w in s.invariant_factors.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            prop_assert!(s.invariant_factors.iter().all(|d| d.is_positive()));
            prop_assert_eq!(s.rank(), rank(&m));
            prop_assert_eq!(s.rank() + s.free_rank, m.rows());
            let det = determinant(&m).unwrap();
            if s.free_rank == 0 {
                let prod: BigInt = s.invariant_factors.iter().product();
                prop_assert_eq!(prod, det.abs());
            } else {
                prop_assert!(det.is_zero());
            }
        }

        #[test]
        fn smith_rectangular_rank(rows in (1usize..4, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-4i64..5, c), r)
        })) {
            let m = IntMatrix::from_rows(&rows);
            let s = smith_normal_form(&m);
            prop_assert_eq!(s.rank(), rank(&m));
            prop_assert_eq!(s, smith_normal_form(&m.transpose()).with_rows(m.rows()));
        }
    }

    impl SmithForm {
        // same factors, cokernel free rank recomputed for a different row count
        fn with_rows(mut self, rows: usize) -> Self {
            self.free_rank = rows - self.invariant_factors.len();
            self
        }
    }
}
