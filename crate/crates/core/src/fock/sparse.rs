//! Row-compressed complex matrices, enough for products of ladder operators.

use nalgebra::DMatrix;

use crate::C64;

/// Square sparse matrix; each row holds `(column, value)` sorted by column,
/// without explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    dim: usize,
    rows: Vec<Vec<(usize, C64)>>,
}

fn is_zero(z: C64) -> bool {
    z.re == 0.0 && z.im == 0.0
}

impl SparseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self { dim, rows: (0..dim).map(|r| vec![(r, C64::new(1.0, 0.0))]).collect() }
    }

    /// Duplicate positions are summed.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, C64)>) -> Self {
        let mut rows: Vec<Vec<(usize, C64)>> = vec![Vec::new(); dim];
        for (r, c, z) in triplets {
            assert!(r < dim && c < dim, "entry ({r}, {c}) outside {dim}x{dim}");
            rows[r].push((c, z));
        }
        for row in &mut rows {
            row.sort_by_key(|&(c, _)| c);
            let mut merged: Vec<(usize, C64)> = Vec::with_capacity(row.len());
            for &(c, z) in row.iter() {
                match merged.last_mut() {
                    Some((lc, lz)) if *lc == c => *lz += z,
                    _ => merged.push((c, z)),
                }
            }
            merged.retain(|&(_, z)| !is_zero(z));
            *row = merged;
        }
        Self { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, C64)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        match self.rows[r].binary_search_by_key(&c, |&(col, _)| col) {
            Ok(k) => self.rows[r][k].1,
            Err(_) => C64::new(0.0, 0.0),
        }
    }

    /// `(row, col, value)` for every stored entry.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, z)| (r, c, z)))
    }

    pub fn scale(&self, s: C64) -> Self {
        if is_zero(s) {
            return Self::zeros(self.dim);
        }
        Self {
            dim: self.dim,
            rows: self.rows.iter().map(|row| row.iter().map(|&(c, z)| (c, z * s)).collect()).collect(),
        }
    }

    /// `self + s·other`.
    pub fn add_scaled(&self, other: &Self, s: C64) -> Self {
        assert_eq!(self.dim, other.dim);
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
                    let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
                    let (c, z) = if take_a {
                        i += 1;
                        a[i - 1]
                    } else if take_b {
                        j += 1;
                        (b[j - 1].0, b[j - 1].1 * s)
                    } else {
                        i += 1;
                        j += 1;
                        (a[i - 1].0, a[i - 1].1 + b[j - 1].1 * s)
                    };
                    if !is_zero(z) {
                        out.push((c, z));
                    }
                }
                out
            })
            .collect();
        Self { dim: self.dim, rows }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut acc = vec![C64::new(0.0, 0.0); self.dim];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; self.dim];
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for &(k, a) in row {
                    for &(j, b) in &other.rows[k] {
                        if !mark[j] {
                            mark[j] = true;
                            touched.push(j);
                        }
                        acc[j] += a * b;
                    }
                }
                touched.sort_unstable();
                let out: Vec<(usize, C64)> = touched
                    .iter()
                    .map(|&j| (j, acc[j]))
                    .filter(|&(_, z)| !is_zero(z))
                    .collect();
                for &j in &touched {
                    acc[j] = C64::new(0.0, 0.0);
                    mark[j] = false;
                }
                touched.clear();
                out
            })
            .collect();
        Self { dim: self.dim, rows }
    }

    pub fn adjoint(&self) -> Self {
        Self::from_triplets(self.dim, self.triplets().map(|(r, c, z)| (c, r, z.conj())))
    }

    pub fn max_abs(&self) -> f64 {
        self.triplets().map(|(_, _, z)| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        let mut m = DMatrix::from_element(self.dim, self.dim, C64::new(0.0, 0.0));
        for (r, c, z) in self.triplets() {
            m[(r, c)] = z;
        }
        m
    }
}
