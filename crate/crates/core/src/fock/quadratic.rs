//! Normal-ordered quadratic polynomials in ladder operators.

use nalgebra::DMatrix;

use super::{lower, raise, FockOperator, FockSpace};
use crate::error::{Error, Result};
use crate::{c64, C64};

/// `Σₖ αₖ aₖ + βₖ aₖ†`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearLadder {
    pub lower: Vec<C64>,
    pub raise: Vec<C64>,
}

impl LinearLadder {
    pub fn zero(modes: usize) -> Self {
        Self { lower: vec![c64(0.0, 0.0); modes], raise: vec![c64(0.0, 0.0); modes] }
    }

    /// `q̂ᵢ = (aᵢ + aᵢ†)/√2` for 1-based `mode`.
    pub fn position(modes: usize, mode: usize) -> Self {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = Self::zero(modes);
        v.lower[mode - 1] = c64(r, 0.0);
        v.raise[mode - 1] = c64(r, 0.0);
        v
    }

    /// `p̂ᵢ = −i(aᵢ − aᵢ†)/√2`.
    pub fn momentum(modes: usize, mode: usize) -> Self {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = Self::zero(modes);
        v.lower[mode - 1] = c64(0.0, -r);
        v.raise[mode - 1] = c64(0.0, r);
        v
    }

    pub fn modes(&self) -> usize {
        self.lower.len()
    }
}

/// `Σ Cᵢⱼ aᵢ†aⱼ† + Σ Dᵢⱼ aᵢaⱼ + Σ Eᵢⱼ aᵢ†aⱼ + c`, with `C` and `D` symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalQuadratic {
    pub create: DMatrix<C64>,
    pub annihilate: DMatrix<C64>,
    pub hop: DMatrix<C64>,
    pub constant: C64,
}

impl NormalQuadratic {
    pub fn zero(modes: usize) -> Self {
        let z = DMatrix::from_element(modes, modes, c64(0.0, 0.0));
        Self { create: z.clone(), annihilate: z.clone(), hop: z, constant: c64(0.0, 0.0) }
    }

    /// Symmetrizes `create` and `annihilate`, since `aᵢ†aⱼ†` and `aᵢaⱼ` commute.
    pub fn new(create: DMatrix<C64>, annihilate: DMatrix<C64>, hop: DMatrix<C64>, constant: C64) -> Result<Self> {
        let m = hop.nrows();
        for x in [&create, &annihilate, &hop] {
            if x.nrows() != m || x.ncols() != m {
                return Err(Error::arg("coefficient matrices must share one square shape"));
            }
        }
        let sym = |x: DMatrix<C64>| (&x + x.transpose()) * c64(0.5, 0.0);
        Ok(Self { create: sym(create), annihilate: sym(annihilate), hop, constant })
    }

    pub fn modes(&self) -> usize {
        self.hop.nrows()
    }

    /// Normal-ordered product `u·v`, using `aₖ aₗ† = aₗ† aₖ + δₖₗ`.
    pub fn product(u: &LinearLadder, v: &LinearLadder) -> Result<Self> {
        let m = u.modes();
        if v.modes() != m {
            return Err(Error::DimensionMismatch { expected: m, found: v.modes() });
        }
        let mut out = Self::zero(m);
        for k in 0..m {
            for l in 0..m {
                out.create[(k, l)] += u.raise[k] * v.raise[l];
                out.annihilate[(k, l)] += u.lower[k] * v.lower[l];
                out.hop[(k, l)] += u.raise[k] * v.lower[l];
                out.hop[(l, k)] += u.lower[k] * v.raise[l];
                if k == l {
                    out.constant += u.lower[k] * v.raise[l];
                }
            }
        }
        let sym = |x: &DMatrix<C64>| (x + x.transpose()) * c64(0.5, 0.0);
        out.create = sym(&out.create);
        out.annihilate = sym(&out.annihilate);
        Ok(out)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            create: &self.create * s,
            annihilate: &self.annihilate * s,
            hop: &self.hop * s,
            constant: self.constant * s,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.modes() != other.modes() {
            return Err(Error::DimensionMismatch { expected: self.modes(), found: other.modes() });
        }
        Ok(Self {
            create: &self.create + &other.create,
            annihilate: &self.annihilate + &other.annihilate,
            hop: &self.hop + &other.hop,
            constant: self.constant + other.constant,
        })
    }

    /// Largest coefficient distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let d = |a: &DMatrix<C64>, b: &DMatrix<C64>| (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max);
        d(&self.create, &other.create)
            .max(d(&self.annihilate, &other.annihilate))
            .max(d(&self.hop, &other.hop))
            .max((self.constant - other.constant).norm())
    }

    /// Matrix on the truncated space. Zero coefficients contribute nothing,
    /// so structurally vanishing terms give an exact zero operator.
    pub fn to_operator(&self, space: FockSpace) -> Result<FockOperator> {
        let m = self.modes();
        if space.modes() != m {
            return Err(Error::DimensionMismatch { expected: m, found: space.modes() });
        }
        let a: Vec<FockOperator> = (1..=m).map(|k| lower(space, k)).collect::<Result<_>>()?;
        let ad: Vec<FockOperator> = (1..=m).map(|k| raise(space, k)).collect::<Result<_>>()?;
        let nonzero = |z: C64| z.re != 0.0 || z.im != 0.0;

        let mut out = FockOperator::zero(space);
        for i in 0..m {
            for j in 0..m {
                if nonzero(self.create[(i, j)]) {
                    out = out.add_scaled(&ad[i].try_mul(&ad[j])?, self.create[(i, j)])?;
                }
                if nonzero(self.annihilate[(i, j)]) {
                    out = out.add_scaled(&a[i].try_mul(&a[j])?, self.annihilate[(i, j)])?;
                }
                if nonzero(self.hop[(i, j)]) {
                    out = out.add_scaled(&ad[i].try_mul(&a[j])?, self.hop[(i, j)])?;
                }
            }
        }
        if nonzero(self.constant) {
            out = out.add_scaled(&FockOperator::identity(space), self.constant)?;
        }
        Ok(out)
    }
}
