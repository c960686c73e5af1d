//! Dense square complex matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::{c64, C64};

/// Dense `dim × dim` complex matrix.
///
/// Serialized as `{ "dim": n, "entries": [[re, im], ...] }` in row-major order.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<C64>);

impl ComplexMatrix {
    /// Build from row-major entries.
    pub fn new(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::arg("matrix dimension must be at least 1"));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(Self(DMatrix::from_row_slice(dim, dim, &entries)))
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        assert!(dim > 0, "matrix dimension must be at least 1");
        Self(DMatrix::from_fn(dim, dim, &mut f))
    }

    /// Build from real row-major rows. Panics on ragged input.
    pub fn from_real_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(N, |r, c| c64(rows[r][c], 0.0))
    }

    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        Self::from_fn(N, |r, c| rows[r][c])
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| C64::new(0.0, 0.0))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { c64(1.0, 0.0) } else { c64(0.0, 0.0) })
    }

    /// `[[a, b], [c, d]]` assembled from four equal-sized square blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        let n = a.dim();
        for blk in [b, c, d] {
            if blk.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: blk.dim() });
            }
        }
        Ok(Self::from_fn(2 * n, |r, col| {
            let blk = match (r < n, col < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.get(r % n, col % n)
        }))
    }

    /// `diag(a, b)`.
    pub fn block_diag(a: &Self, b: &Self) -> Result<Self> {
        let z = Self::zeros(a.dim());
        Self::from_blocks(a, &z, &z, b)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    pub fn as_nalgebra(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn from_nalgebra(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(Error::arg(format!(
                "expected a non-empty square matrix, got {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        Ok(Self(m))
    }

    /// Row-major entries.
    pub fn entries(&self) -> Vec<C64> {
        self.0.transpose().as_slice().to_vec()
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self(&self.0 * s)
    }

    pub fn map(&self, f: impl FnMut(C64) -> C64) -> Self {
        Self(self.0.map(f))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self(&self.0 + &other.0))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self(&self.0 - &other.0))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self(&self.0 * &other.0))
    }

    pub fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (self - &self.transpose()).max_abs() < tol
    }

    pub fn is_antisymmetric(&self, tol: f64) -> bool {
        (self + &self.transpose()).max_abs() < tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (self - &self.adjoint()).max_abs() < tol
    }

    pub fn is_pure_imaginary(&self, tol: f64) -> bool {
        self.0.iter().all(|z| z.re.abs() <= tol)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.0.iter().all(|z| z.im.abs() <= tol)
    }

    /// Symmetric part `(A + Aᵀ)/2`.
    pub fn symmetrized(&self) -> Self {
        (self + &self.transpose()).scale(c64(0.5, 0.0))
    }

    /// Largest entry-wise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs()
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix{}", self)
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let cells: Vec<String> = (0..n * n)
            .map(|k| format_complex(self.get(k / n, k % n)))
            .collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        writeln!(f)?;
        for r in 0..n {
            write!(f, "  [")?;
            for c in 0..n {
                let s = &cells[r * n + c];
                let pad = width - s.chars().count();
                write!(f, "{}{}", " ".repeat(pad), s)?;
                if c + 1 < n {
                    write!(f, "  ")?;
                }
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Compact rendering: `0`, `0.5`, `-i`, `0.5i`, `1+0.5i`.
pub fn format_complex(z: C64) -> String {
    fn num(x: f64) -> String {
        let r = (x * 1e12).round() / 1e12;
        if r == 0.0 {
            "0".into()
        } else {
            format!("{}", r)
        }
    }
    let (re, im) = (num(z.re), num(z.im));
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", "1") => "i".into(),
        ("0", "-1") => "-i".into(),
        ("0", _) => format!("{}i", im),
        (_, _) if z.im < 0.0 => format!("{}{}i", re, im),
        _ => format!("{}+{}i", re, im),
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: Self) -> ComplexMatrix {
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: Self) -> ComplexMatrix {
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: Self) -> ComplexMatrix {
        ComplexMatrix(&self.0 * &rhs.0)
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix(-&self.0)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            dim: self.dim(),
            entries: self.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        let entries = repr.entries.iter().map(|[re, im]| c64(*re, *im)).collect();
        ComplexMatrix::new(repr.dim, entries).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(ComplexMatrix::new(0, vec![]).is_err());
        assert_eq!(
            ComplexMatrix::new(2, vec![c64(1.0, 0.0); 3]),
            Err(Error::DimensionMismatch { expected: 4, found: 3 })
        );
    }

    #[test]
    fn entries_are_row_major() {
        let m = ComplexMatrix::from_real_rows([[1.0, 2.0], [3.0, 4.0]]);
        let re: Vec<f64> = m.entries().iter().map(|z| z.re).collect();
        assert_eq!(re, vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m.get(0, 1).re, 2.0);
    }

    #[test]
    fn blocks_assemble_in_place() {
        let one = ComplexMatrix::identity(1);
        let z = ComplexMatrix::zeros(1);
        let m = ComplexMatrix::from_blocks(&z, &one, &(-&one), &z).unwrap();
        assert_eq!(m, ComplexMatrix::from_real_rows([[0.0, 1.0], [-1.0, 0.0]]));
        assert!(ComplexMatrix::from_blocks(&one, &ComplexMatrix::zeros(2), &one, &one).is_err());
    }

    #[test]
    fn json_schema_and_round_trip() {
        let m = ComplexMatrix::from_rows([
            [c64(0.1, -1.0 / 3.0), c64(0.0, 0.5)],
            [c64(std::f64::consts::PI, 0.0), c64(-2.0, 1e-300)],
        ]);
        let js = serde_json::to_value(&m).unwrap();
        assert_eq!(js["dim"], 2);
        assert_eq!(js["entries"][1][1], 0.5);
        let back: ComplexMatrix = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn format_complex_is_compact() {
        assert_eq!(format_complex(c64(0.0, 0.5)), "0.5i");
        assert_eq!(format_complex(c64(0.0, -1.0)), "-i");
        assert_eq!(format_complex(c64(-0.5, 0.0)), "-0.5");
        assert_eq!(format_complex(c64(1.0, -2.0)), "1-2i");
        assert_eq!(format_complex(c64(0.0, 0.0)), "0");
    }
}
