//! Truncated multi-mode Fock spaces and operators on them.
//!
//! Each mode keeps occupations `0..=N`. Ladder operators are the compressions
//! of the infinite ones: `a†|N⟩` is dropped. Any normal-ordered product of
//! ladder matrices is therefore the exact compression of the corresponding
//! infinite-dimensional operator, and identities involving products of
//! operators hold on states whose total occupation stays at or below `N`
//! along the way (the *safe* subspace).

mod quadratic;
mod sparse;

use std::collections::BTreeSet;

use serde::Serialize;

pub use quadratic::{LinearLadder, NormalQuadratic};
pub use sparse::SparseMatrix;

use crate::algebra::{Coords, LieCarrier};
use crate::error::{Error, Result};
use crate::generators::{Carrier, GeneratorCarrier};
use crate::tolerance::EPS_FOCK;
use crate::{c64, ComplexMatrix, C64};

/// Largest Hilbert-space dimension accepted.
pub const MAX_DIM: usize = 1 << 22;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FockSpace {
    modes: usize,
    cutoff: usize,
}

impl FockSpace {
    pub fn new(modes: usize, cutoff: usize) -> Result<Self> {
        if modes == 0 || cutoff == 0 {
            return Err(Error::arg("Fock space needs at least one mode and cutoff >= 1"));
        }
        let dim = (cutoff + 1).checked_pow(modes as u32).filter(|&d| d <= MAX_DIM);
        if dim.is_none() {
            return Err(Error::arg(format!("{modes} modes at cutoff {cutoff} exceed {MAX_DIM} states")));
        }
        Ok(Self { modes, cutoff })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        (self.cutoff + 1).pow(self.modes as u32)
    }

    /// Occupation tuple of a basis index; mode 1 is most significant.
    pub fn occupation(&self, index: usize) -> Vec<usize> {
        let base = self.cutoff + 1;
        let mut occ = vec![0; self.modes];
        let mut rest = index;
        for slot in occ.iter_mut().rev() {
            *slot = rest % base;
            rest /= base;
        }
        occ
    }

    pub fn index_of(&self, occupation: &[usize]) -> Result<usize> {
        if occupation.len() != self.modes {
            return Err(Error::DimensionMismatch { expected: self.modes, found: occupation.len() });
        }
        occupation.iter().try_fold(0usize, |acc, &n| {
            if n > self.cutoff {
                Err(Error::arg(format!("occupation {n} above cutoff {}", self.cutoff)))
            } else {
                Ok(acc * (self.cutoff + 1) + n)
            }
        })
    }

    pub fn total_occupation(&self, index: usize) -> usize {
        self.occupation(index).iter().sum()
    }

    /// Stride of `mode` (1-based) in the basis index.
    fn stride(&self, mode: usize) -> usize {
        (self.cutoff + 1).pow((self.modes - mode) as u32)
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode == 0 || mode > self.modes {
            return Err(Error::arg(format!("mode {mode} outside 1..={}", self.modes)));
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LadderKind {
    Lower,
    Raise,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QuadratureKind {
    Q,
    P,
}

/// Operator on a truncated Fock space, with the set of total-occupation
/// changes it can cause.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOperator {
    space: FockSpace,
    matrix: SparseMatrix,
    degree_shift: BTreeSet<i32>,
}

impl FockOperator {
    pub fn from_parts(space: FockSpace, matrix: SparseMatrix, degree_shift: BTreeSet<i32>) -> Result<Self> {
        if matrix.dim() != space.dim() {
            return Err(Error::DimensionMismatch { expected: space.dim(), found: matrix.dim() });
        }
        Ok(Self { space, matrix, degree_shift })
    }

    pub fn zero(space: FockSpace) -> Self {
        Self { space, matrix: SparseMatrix::zeros(space.dim()), degree_shift: BTreeSet::new() }
    }

    pub fn identity(space: FockSpace) -> Self {
        Self { space, matrix: SparseMatrix::identity(space.dim()), degree_shift: [0].into() }
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn degree_shift(&self) -> &BTreeSet<i32> {
        &self.degree_shift
    }

    /// Largest `|shift|`.
    pub fn max_shift(&self) -> usize {
        self.degree_shift.iter().map(|s| s.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// `⟨bra| X |ket⟩` for occupation tuples.
    pub fn element(&self, bra: &[usize], ket: &[usize]) -> Result<C64> {
        Ok(self.matrix.get(self.space.index_of(bra)?, self.space.index_of(ket)?))
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::arg(format!(
                "operators live on different spaces ({:?} vs {:?})",
                self.space, other.space
            )));
        }
        Ok(())
    }

    pub fn scale(&self, s: C64) -> Self {
        let zero = s.re == 0.0 && s.im == 0.0;
        Self {
            space: self.space,
            matrix: self.matrix.scale(s),
            degree_shift: if zero { BTreeSet::new() } else { self.degree_shift.clone() },
        }
    }

    /// `self + s·other`.
    pub fn add_scaled(&self, other: &Self, s: C64) -> Result<Self> {
        self.check_space(other)?;
        Ok(Self {
            space: self.space,
            matrix: self.matrix.add_scaled(&other.matrix, s),
            degree_shift: self.degree_shift.union(&other.degree_shift).copied().collect(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, c64(1.0, 0.0))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, c64(-1.0, 0.0))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let degree_shift = self
            .degree_shift
            .iter()
            .flat_map(|a| other.degree_shift.iter().map(move |b| a + b))
            .collect();
        Ok(Self { space: self.space, matrix: self.matrix.mul(&other.matrix), degree_shift })
    }

    /// Plain `xy − yx` on the truncated space.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn adjoint(&self) -> Self {
        Self {
            space: self.space,
            matrix: self.matrix.adjoint(),
            degree_shift: self.degree_shift.iter().map(|s| -s).collect(),
        }
    }

    /// `max |X − X†|`.
    pub fn hermitian_defect(&self) -> f64 {
        self.matrix.add_scaled(&self.matrix.adjoint(), c64(-1.0, 0.0)).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() < tol
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.max_abs()
    }

    /// Entry-wise distance over the whole truncated space.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.try_sub(other)?.max_abs())
    }

    /// Entry-wise distance over columns whose total occupation is at most
    /// `safe_cutoff`.
    pub fn max_abs_diff_on(&self, other: &Self, safe_cutoff: usize) -> Result<f64> {
        let d = self.try_sub(other)?;
        Ok(d.matrix
            .triplets()
            .filter(|&(_, c, _)| self.space.total_occupation(c) <= safe_cutoff)
            .map(|(_, _, z)| z.norm())
            .fold(0.0, f64::max))
    }

    pub fn to_dense(&self) -> ComplexMatrix {
        ComplexMatrix::from_nalgebra(self.matrix.to_dense()).expect("square")
    }

    /// Columns with total occupation at most `safe_cutoff`, flattened row-major.
    pub fn coords_on(&self, safe_cutoff: usize) -> Coords {
        let dim = self.space.dim();
        let mut out: Coords = self
            .matrix
            .triplets()
            .filter(|&(_, c, _)| self.space.total_occupation(c) <= safe_cutoff)
            .map(|(r, c, z)| (r * dim + c, z))
            .collect();
        out.sort_by_key(|&(i, _)| i);
        out
    }
}

/// `a` or `a†` on one mode (1-based), identity elsewhere.
pub fn ladder(space: FockSpace, mode: usize, kind: LadderKind) -> Result<FockOperator> {
    space.check_mode(mode)?;
    let stride = space.stride(mode);
    let n_max = space.cutoff;
    let triplets = (0..space.dim()).filter_map(|col| {
        let n = space.occupation(col)[mode - 1];
        match kind {
            LadderKind::Lower if n > 0 => Some((col - stride, col, c64((n as f64).sqrt(), 0.0))),
            LadderKind::Raise if n < n_max => Some((col + stride, col, c64(((n + 1) as f64).sqrt(), 0.0))),
            _ => None,
        }
    });
    let shift = if kind == LadderKind::Lower { -1 } else { 1 };
    FockOperator::from_parts(space, SparseMatrix::from_triplets(space.dim(), triplets), [shift].into())
}

pub fn lower(space: FockSpace, mode: usize) -> Result<FockOperator> {
    ladder(space, mode, LadderKind::Lower)
}

pub fn raise(space: FockSpace, mode: usize) -> Result<FockOperator> {
    ladder(space, mode, LadderKind::Raise)
}

/// `q̂ = (a + a†)/√2`, `p̂ = −i(a − a†)/√2`.
pub fn quadrature(space: FockSpace, mode: usize, kind: QuadratureKind) -> Result<FockOperator> {
    let (a, ad) = (lower(space, mode)?, raise(space, mode)?);
    let r = std::f64::consts::FRAC_1_SQRT_2;
    match kind {
        QuadratureKind::Q => a.add_scaled(&ad, c64(1.0, 0.0)).map(|x| x.scale(c64(r, 0.0))),
        QuadratureKind::P => a.add_scaled(&ad, c64(-1.0, 0.0)).map(|x| x.scale(c64(0.0, -r))),
    }
}

/// `a†a` on one mode.
pub fn number(space: FockSpace, mode: usize) -> Result<FockOperator> {
    raise(space, mode)?.try_mul(&lower(space, mode)?)
}

/// A commutator together with the total occupation up to which it is exact.
#[derive(Clone, Debug)]
pub struct SafeCommutator {
    pub op: FockOperator,
    pub safe_cutoff: usize,
}

impl SafeCommutator {
    /// Entry-wise distance to `expected` on the safe columns.
    pub fn deviation(&self, expected: &FockOperator) -> Result<f64> {
        self.op.max_abs_diff_on(expected, self.safe_cutoff)
    }
}

/// `xy − yx`, exact on states with total occupation
/// `≤ N − (maxshift(x) + maxshift(y))`.
pub fn safe_commutator(x: &FockOperator, y: &FockOperator) -> Result<SafeCommutator> {
    let shift = x.max_shift() + y.max_shift();
    let cutoff = x.space.cutoff;
    if shift > cutoff {
        return Err(Error::CutoffTooSmall { cutoff, shift });
    }
    Ok(SafeCommutator { op: x.commutator(y)?, safe_cutoff: cutoff - shift })
}

/// Sorted eigenvalues of a hermitian operator.
pub fn spectrum(x: &FockOperator) -> Result<Vec<f64>> {
    let residual = x.hermitian_defect();
    if residual >= EPS_FOCK {
        return Err(Error::NotHermitian { residual });
    }
    let dense = x.matrix.to_dense();
    let mut values: Vec<f64> = nalgebra::SymmetricEigen::new(dense).eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| a.total_cmp(b));
    Ok(values)
}

/// Group sorted eigenvalues that agree within `tol` into `(value, multiplicity)`.
pub fn multiplicities(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &v in sorted {
        match out.last_mut() {
            Some((first, count, sum)) if (v - *first).abs() < tol => {
                *count += 1;
                *sum += v;
            }
            _ => out.push((v, 1, v)),
        }
    }
    out.into_iter().map(|(_, n, sum)| (sum / n as f64, n)).collect()
}

/// Safe-subspace window for brackets within a family of operators.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SafeWindow {
    pub safe_cutoff: usize,
}

impl LieCarrier for FockOperator {
    type Window = SafeWindow;

    fn window(elements: &[&Self]) -> Result<SafeWindow> {
        let Some(first) = elements.first() else {
            return Err(Error::arg("empty operator family"));
        };
        for e in elements {
            first.check_space(e)?;
        }
        let shift = 2 * elements.iter().map(|e| e.max_shift()).max().unwrap_or(0);
        let cutoff = first.space.cutoff;
        if shift > cutoff {
            return Err(Error::CutoffTooSmall { cutoff, shift });
        }
        Ok(SafeWindow { safe_cutoff: cutoff - shift })
    }

    fn bracket(&self, other: &Self) -> Result<Self> {
        self.commutator(other)
    }

    fn coords(&self, window: &SafeWindow) -> Coords {
        self.coords_on(window.safe_cutoff)
    }
}

impl GeneratorCarrier for FockOperator {
    const KIND: Carrier = Carrier::FockOperator;

    /// Same space only; small cutoffs are fine until brackets are taken.
    fn compatible(elements: &[&Self]) -> Result<()> {
        if let Some(first) = elements.first() {
            for e in elements {
                first.check_space(e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_modes(n: usize) -> FockSpace {
        FockSpace::new(2, n).unwrap()
    }

    #[test]
    fn basis_indexing_is_lexicographic() {
        let s = FockSpace::new(3, 2).unwrap();
        assert_eq!(s.dim(), 27);
        assert_eq!(s.occupation(0), vec![0, 0, 0]);
        assert_eq!(s.occupation(1), vec![0, 0, 1]);
        assert_eq!(s.occupation(3), vec![0, 1, 0]);
        for i in 0..s.dim() {
            assert_eq!(s.index_of(&s.occupation(i)).unwrap(), i);
        }
        assert!(s.index_of(&[3, 0, 0]).is_err());
        assert!(FockSpace::new(0, 3).is_err());
        assert!(FockSpace::new(2, 0).is_err());
        assert!(FockSpace::new(40, 8).is_err());
    }

    #[test]
    fn ladder_matrix_elements() {
        let s = two_modes(4);
        let a1 = lower(s, 1).unwrap();
        let ad1 = raise(s, 1).unwrap();
        assert!((a1.element(&[2, 3], &[3, 3]).unwrap() - c64(3f64.sqrt(), 0.0)).norm() < 1e-15);
        assert!((ad1.element(&[1, 0], &[0, 0]).unwrap() - c64(1.0, 0.0)).norm() < 1e-15);
        // a† truncated at the top level
        assert_eq!(ad1.matrix().row(s.index_of(&[0, 0]).unwrap()).len(), 0);
        assert!(ad1.coords_on(usize::MAX).iter().all(|&(i, _)| s.occupation(i % s.dim())[0] < 4));
        assert!(ladder(s, 3, LadderKind::Lower).is_err());
        assert!(ladder(s, 0, LadderKind::Raise).is_err());
    }

    #[test]
    fn vacuum_normalization() {
        let s = two_modes(3);
        let aad = lower(s, 1).unwrap().try_mul(&raise(s, 1).unwrap()).unwrap();
        assert_eq!(aad.element(&[0, 0], &[0, 0]).unwrap(), c64(1.0, 0.0));
    }

    #[test]
    fn canonical_commutators() {
        let n = 6;
        let s = two_modes(n);
        let (a1, ad1, ad2) = (lower(s, 1).unwrap(), raise(s, 1).unwrap(), raise(s, 2).unwrap());
        let c = a1.commutator(&ad1).unwrap();
        // identity on every state with n₁ ≤ N − 1
        for col in 0..s.dim() {
            let n1 = s.occupation(col)[0];
            for row in 0..s.dim() {
                let want = if row == col && n1 < n { 1.0 } else if row == col { -(n as f64) } else { 0.0 };
                assert!((c.matrix().get(row, col) - c64(want, 0.0)).norm() < 1e-12);
            }
        }
        assert!(a1.commutator(&ad2).unwrap().is_zero());
        assert!(a1.commutator(&lower(s, 2).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn quadrature_commutators() {
        let s = two_modes(6);
        let q1 = quadrature(s, 1, QuadratureKind::Q).unwrap();
        let p1 = quadrature(s, 1, QuadratureKind::P).unwrap();
        let q2 = quadrature(s, 2, QuadratureKind::Q).unwrap();
        let sc = safe_commutator(&q1, &p1).unwrap();
        assert_eq!(sc.safe_cutoff, 4);
        let want = FockOperator::identity(s).scale(c64(0.0, 1.0));
        assert!(sc.deviation(&want).unwrap() < EPS_FOCK);
        assert!(q1.commutator(&q2).unwrap().is_zero());
        assert!(q1.is_hermitian(1e-15) && p1.is_hermitian(1e-15));
        // ⟨0|q²|0⟩ = ⟨0|(a a† + …)|0⟩/2 = 1/2
        let q1sq = q1.try_mul(&q1).unwrap();
        assert!((q1sq.element(&[0, 0], &[0, 0]).unwrap() - c64(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn safe_cutoff_bookkeeping() {
        let s = two_modes(10);
        let q = number(s, 1).unwrap().try_add(&raise(s, 1).unwrap().try_mul(&raise(s, 2).unwrap()).unwrap()).unwrap();
        let q = q.try_add(&lower(s, 1).unwrap().try_mul(&lower(s, 1).unwrap()).unwrap()).unwrap();
        assert_eq!(q.degree_shift(), &BTreeSet::from([-2, 0, 2]));
        assert_eq!(safe_commutator(&q, &q).unwrap().safe_cutoff, 6);
        let small = two_modes(3);
        let aa = raise(small, 1).unwrap().try_mul(&raise(small, 2).unwrap()).unwrap();
        assert_eq!(
            safe_commutator(&aa, &aa).err(),
            Some(Error::CutoffTooSmall { cutoff: 3, shift: 4 })
        );
    }

    #[test]
    fn number_shift_oracle() {
        // [a†a, a†] = a†
        let s = two_modes(8);
        let n1 = number(s, 1).unwrap();
        let ad1 = raise(s, 1).unwrap();
        let sc = safe_commutator(&n1, &ad1).unwrap();
        assert_eq!(sc.safe_cutoff, 7);
        assert!(sc.deviation(&ad1).unwrap() < EPS_FOCK);
    }

    #[test]
    fn spectrum_of_number_operator() {
        let s = FockSpace::new(1, 5).unwrap();
        let ev = spectrum(&number(s, 1).unwrap()).unwrap();
        let want: Vec<f64> = (0..=5).map(|n| n as f64).collect();
        assert!(ev.iter().zip(&want).all(|(a, b)| (a - b).abs() < 1e-12));
        assert!(matches!(spectrum(&lower(s, 1).unwrap()), Err(Error::NotHermitian { .. })));
        let groups = multiplicities(&[0.5, 1.0, 1.0 + 1e-13, 1.5], 1e-9);
        assert_eq!(groups.iter().map(|g| g.1).collect::<Vec<_>>(), vec![1, 2, 1]);
        assert!((groups[1].0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixing_spaces_is_an_error() {
        let a = lower(two_modes(3), 1).unwrap();
        let b = lower(two_modes(4), 1).unwrap();
        assert!(a.try_add(&b).is_err());
        assert!(a.try_mul(&b).is_err());
    }
}
