//! Carrier-independent Lie algebra machinery: sparse coordinate vectors,
//! least-squares expansion in a basis, and structure-constant tables.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerance::RANK_REL_TOL;
use crate::{c64, ComplexMatrix, C64};

/// Sparse coordinate vector, sorted by index, no duplicate indices.
pub type Coords = Vec<(usize, C64)>;

/// Something with a Lie bracket whose elements can be compared through
/// linear coordinates.
///
/// `Window` selects which coordinates are trustworthy for brackets of a given
/// family of elements. For exact carriers it is `()`; for truncated Fock
/// operators it restricts to the safe occupation subspace.
pub trait LieCarrier: Clone {
    type Window: Clone;

    fn window(elements: &[&Self]) -> Result<Self::Window>;
    fn bracket(&self, other: &Self) -> Result<Self>;
    fn coords(&self, window: &Self::Window) -> Coords;
}

impl LieCarrier for ComplexMatrix {
    type Window = ();

    fn window(elements: &[&Self]) -> Result<()> {
        if let Some(first) = elements.first() {
            for e in elements {
                first.check_dim(e)?;
            }
        }
        Ok(())
    }

    fn bracket(&self, other: &Self) -> Result<Self> {
        crate::lie_matrix::commutator(self, other)
    }

    fn coords(&self, _: &()) -> Coords {
        self.entries()
            .into_iter()
            .enumerate()
            .filter(|(_, z)| z.re != 0.0 || z.im != 0.0)
            .collect()
    }
}

/// `⟨a, b⟩ = Σ conj(aᵢ) bᵢ`.
pub fn dot(a: &Coords, b: &Coords) -> C64 {
    let (mut i, mut j) = (0, 0);
    let mut acc = C64::new(0.0, 0.0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += a[i].1.conj() * b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Euclidean norm of `Σₖ coefₖ · vₖ`.
pub fn combination_norm(terms: &[(C64, &Coords)]) -> f64 {
    let mut acc: BTreeMap<usize, C64> = BTreeMap::new();
    for (coef, v) in terms {
        if coef.re == 0.0 && coef.im == 0.0 {
            continue;
        }
        for (idx, z) in v.iter() {
            *acc.entry(*idx).or_default() += coef * z;
        }
    }
    acc.values().fold(0.0, |a, z| a + z.norm_sqr()).sqrt()
}

pub fn norm(v: &Coords) -> f64 {
    v.iter().fold(0.0, |a, (_, z)| a + z.norm_sqr()).sqrt()
}

/// Least-squares expansion `t ≈ Σₖ cₖ vₖ` in a fixed basis, via the Gram
/// system. Residuals are recomputed directly, not from the normal equations.
pub struct LeastSquares {
    basis: Vec<Coords>,
    chol: nalgebra::Cholesky<C64, nalgebra::Dyn>,
}

impl LeastSquares {
    pub fn new(basis: Vec<Coords>) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::arg("empty basis"));
        }
        let gram = gram_matrix(&basis);
        let rank = numerical_rank_of_gram(&gram);
        if rank < n {
            return Err(Error::DegenerateBasis { rank, len: n });
        }
        let chol = gram
            .cholesky()
            .ok_or(Error::DegenerateBasis { rank, len: n })?;
        Ok(Self { basis, chol })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coefficients and the norm of the unexpanded remainder.
    pub fn solve(&self, target: &Coords) -> (Vec<C64>, f64) {
        let rhs = DVector::from_iterator(self.basis.len(), self.basis.iter().map(|v| dot(v, target)));
        let coefs: Vec<C64> = self.chol.solve(&rhs).iter().copied().collect();
        let mut terms: Vec<(C64, &Coords)> = vec![(C64::new(1.0, 0.0), target)];
        terms.extend(coefs.iter().zip(&self.basis).map(|(c, v)| (-c, v)));
        let residual = combination_norm(&terms);
        (coefs, residual)
    }
}

pub fn gram_matrix(vectors: &[Coords]) -> DMatrix<C64> {
    let n = vectors.len();
    let mut g = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
    for i in 0..n {
        for j in i..n {
            let d = dot(&vectors[i], &vectors[j]);
            g[(i, j)] = d;
            g[(j, i)] = d.conj();
        }
    }
    g
}

fn numerical_rank_of_gram(gram: &DMatrix<C64>) -> usize {
    let eig = nalgebra::SymmetricEigen::new(gram.clone());
    let max = eig.eigenvalues.iter().cloned().fold(0.0_f64, f64::max);
    if max <= 0.0 {
        return 0;
    }
    eig.eigenvalues.iter().filter(|&&l| l > max * RANK_REL_TOL).count()
}

/// Number of linearly independent vectors (over ℂ).
pub fn rank(vectors: &[Coords]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    numerical_rank_of_gram(&gram_matrix(vectors))
}

/// Structure constants `[Gᵢ, Gⱼ] = Σₖ c_{ijk} Gₖ` with per-pair residuals.
#[derive(Debug, Clone, Serialize)]
pub struct StructureTable {
    labels: Vec<String>,
    #[serde(skip)]
    c: Vec<C64>,
    residual: Vec<Vec<f64>>,
}

impl StructureTable {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `c_{ijk}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> C64 {
        let n = self.len();
        self.c[(i * n + j) * n + k]
    }

    /// Coefficients of `[Gᵢ, Gⱼ]` in the basis.
    pub fn bracket(&self, i: usize, j: usize) -> &[C64] {
        let n = self.len();
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn residual(&self, i: usize, j: usize) -> f64 {
        self.residual[i][j]
    }

    pub fn max_residual(&self) -> f64 {
        self.residual.iter().flatten().cloned().fold(0.0, f64::max)
    }

    pub fn closes(&self, tol: f64) -> bool {
        self.max_residual() < tol
    }

    /// Largest `|c_{ijk} + c_{jik}|`.
    pub fn antisymmetry_defect(&self) -> f64 {
        let n = self.len();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max((self.get(i, j, k) + self.get(j, i, k)).norm());
                }
            }
        }
        worst
    }

    /// Largest `|c_{ijk} - scale · other_{ijk}|`.
    pub fn max_deviation_from(&self, other: &StructureTable, scale: C64) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| (a - scale * b).norm())
            .fold(0.0, f64::max))
    }

    /// The full tensor as `[i][j][k] = [re, im]`.
    pub fn tensor(&self) -> Vec<Vec<Vec<[f64; 2]>>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| {
                        let z = self.get(i, j, k);
                        [z.re, z.im]
                    }).collect())
                    .collect()
            })
            .collect()
    }

    /// Nonzero constants (|c| ≥ `tol`) as `(i, j, k, c)` with `i < j`.
    pub fn nonzero(&self, tol: f64) -> Vec<(usize, usize, usize, C64)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let z = self.get(i, j, k);
                    if z.norm() >= tol {
                        out.push((i, j, k, z));
                    }
                }
            }
        }
        out
    }
}

/// Expand every pairwise bracket of `elements` in the basis they form.
pub fn structure_constants<T: LieCarrier>(labels: &[String], elements: &[&T]) -> Result<StructureTable> {
    let n = elements.len();
    if labels.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: labels.len() });
    }
    let window = T::window(elements)?;
    let lsq = LeastSquares::new(elements.iter().map(|e| e.coords(&window)).collect())?;
    let zero = C64::new(0.0, 0.0);
    let mut c = vec![zero; n * n * n];
    let mut residual = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let br = elements[i].bracket(elements[j])?;
            let (coefs, res) = lsq.solve(&br.coords(&window));
            for (k, z) in coefs.into_iter().enumerate() {
                c[(i * n + j) * n + k] = z;
                c[(j * n + i) * n + k] = -z;
            }
            residual[i][j] = res;
            residual[j][i] = res;
        }
    }
    Ok(StructureTable { labels: labels.to_vec(), c, residual })
}

/// Express each of `targets` in the span of `basis`. Returns the coefficient
/// rows and the worst residual.
pub fn align_spans(basis: &[Coords], targets: &[Coords]) -> Result<(Vec<Vec<C64>>, f64)> {
    let lsq = LeastSquares::new(basis.to_vec())?;
    let mut rows = Vec::with_capacity(targets.len());
    let mut worst = 0.0_f64;
    for t in targets {
        let (coefs, res) = lsq.solve(t);
        worst = worst.max(res / norm(t).max(1.0));
        rows.push(coefs);
    }
    Ok((rows, worst))
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub label: String,
    pub residual: f64,
}

/// `[X, Y] = Σ cₖ Zₖ` on the carrier's comparison window.
pub fn bracket_residual<T: LieCarrier>(x: &T, y: &T, rhs: &[(C64, &T)], window: &T::Window) -> Result<f64> {
    let lhs = x.bracket(y)?.coords(window);
    let rhs_coords: Vec<(C64, Coords)> = rhs.iter().map(|(c, z)| (-*c, z.coords(window))).collect();
    let mut terms: Vec<(C64, &Coords)> = vec![(c64(1.0, 0.0), &lhs)];
    terms.extend(rhs_coords.iter().map(|(c, v)| (*c, v)));
    Ok(combination_norm(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn v(entries: &[(usize, f64)]) -> Coords {
        entries.iter().map(|&(i, x)| (i, c64(x, 0.0))).collect()
    }

    #[test]
    fn dot_merges_sparse_indices() {
        let a = v(&[(0, 1.0), (3, 2.0), (7, 1.0)]);
        let b = vec![(3, c64(0.0, 1.0)), (5, c64(4.0, 0.0)), (7, c64(1.0, 0.0))];
        assert_eq!(dot(&a, &b), c64(1.0, 2.0));
    }

    #[test]
    fn least_squares_reports_remainder() {
        let basis = vec![v(&[(0, 1.0)]), v(&[(1, 1.0)])];
        let lsq = LeastSquares::new(basis).unwrap();
        let (c, r) = lsq.solve(&v(&[(0, 2.0), (1, -3.0), (2, 4.0)]));
        assert!((c[0] - c64(2.0, 0.0)).norm() < 1e-15);
        assert!((c[1] - c64(-3.0, 0.0)).norm() < 1e-15);
        assert!((r - 4.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_basis_is_rejected() {
        let basis = vec![v(&[(0, 1.0), (1, 1.0)]), v(&[(0, 2.0), (1, 2.0)])];
        assert_eq!(
            LeastSquares::new(basis).err(),
            Some(Error::DegenerateBasis { rank: 1, len: 2 })
        );
    }

    #[test]
    fn rank_counts_independent_vectors() {
        let vs = vec![v(&[(0, 1.0)]), v(&[(1, 1.0)]), v(&[(0, 1.0), (1, 1.0)])];
        assert_eq!(rank(&vs), 2);
        assert_eq!(rank(&[]), 0);
    }
}
