//! Two-dimensional oscillator as a pair of opposite-chirality first-order
//! oscillators.
//!
//! A chiral oscillator is `L± = ½(±ε_αβ q_α q̇_β − q_α²)` on a pair
//! `(q₁, q₂)`; its bracket is `{q_α, q_β} = ∓ε_αβ`, taken as given.

use nalgebra::{DMatrix, Matrix2};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{FockOperator, FockSpace};
use crate::quantization::{embed_pair, quantize_with, QuantizationConvention};
use crate::symplectic::QuadraticForm;
use crate::{c64, ComplexMatrix};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn sign(self) -> f64 {
        match self {
            Chirality::Plus => 1.0,
            Chirality::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Chirality::Plus => Chirality::Minus,
            Chirality::Minus => Chirality::Plus,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiralOscillator {
    pub chirality: Chirality,
}

fn epsilon() -> Matrix2<f64> {
    Matrix2::new(0.0, 1.0, -1.0, 0.0)
}

fn real_form(m: &Matrix2<f64>) -> QuadraticForm {
    QuadraticForm::new(ComplexMatrix::from_fn(2, |r, c| c64(m[(r, c)], 0.0))).expect("2x2 form")
}

impl ChiralOscillator {
    pub fn new(chirality: Chirality) -> Self {
        Self { chirality }
    }

    /// Coefficient of `½ q_α ε_αβ q̇_β` in the Lagrangian.
    pub fn kinetic(&self) -> Matrix2<f64> {
        epsilon() * self.chirality.sign()
    }

    /// `∂L/∂q̇_β = ±½ ε_ρβ q_ρ`, as the matrix `P` with `p = Pq`.
    pub fn momentum_map(&self) -> Matrix2<f64> {
        epsilon().transpose() * (0.5 * self.chirality.sign())
    }

    /// `H̃ = ½(q₁² + q₂²)` over `z = (q₁, q₂)`.
    pub fn hamiltonian(&self) -> QuadraticForm {
        real_form(&Matrix2::identity())
    }

    /// `(q, p)` in terms of `(q₁, q₂)`: `(q₂, q₁)` for `+`, `(q₁, q₂)` for `−`.
    pub fn canonical_pair(&self) -> (usize, usize) {
        match self.chirality {
            Chirality::Plus => (2, 1),
            Chirality::Minus => (1, 2),
        }
    }

    /// Rewrite a form in `(q₁, q₂)` over this sector's canonical `(q, p)`.
    pub fn to_canonical(&self, f: &QuadraticForm) -> Result<QuadraticForm> {
        if f.n_pairs() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: f.n_pairs() });
        }
        let (q, p) = self.canonical_pair();
        let perm = [q - 1, p - 1];
        QuadraticForm::new(ComplexMatrix::from_fn(2, |r, c| f.matrix().get(perm[r], perm[c])))
    }
}

/// `{q_α, q_β} = ∓ε_αβ` for chirality `±`.
pub fn chiral_bracket(c: &ChiralOscillator, alpha: usize, beta: usize) -> Result<f64> {
    if !(1..=2).contains(&alpha) || !(1..=2).contains(&beta) {
        return Err(Error::arg(format!("chiral indices must be 1 or 2, got ({alpha}, {beta})")));
    }
    Ok(-c.chirality.sign() * epsilon()[(alpha - 1, beta - 1)])
}

/// `J = ε_αβ q_α p_β` with `p` from [`ChiralOscillator::momentum_map`];
/// comes out as `±H̃`.
pub fn chiral_angular_momentum(c: &ChiralOscillator) -> QuadraticForm {
    let j = epsilon() * c.momentum_map();
    real_form(&(j + j.transpose()))
}

/// `(Ĥ, Ĵ)` on two modes: sector `+` on mode 1, sector `−` on mode 2, each
/// quantized as a one-mode oscillator; `Ĥ = ½(H₊ + H₋)`, `Ĵ = ½(J₊ + J₋)`.
pub fn compose_chiral_pair(space: FockSpace) -> Result<(FockOperator, FockOperator)> {
    if space.modes() != 2 {
        return Err(Error::arg(format!("a chiral pair needs 2 modes, got {}", space.modes())));
    }
    let conv = QuantizationConvention::physical();
    let sector = |chirality, mode, f: fn(&ChiralOscillator) -> QuadraticForm| -> Result<FockOperator> {
        let c = ChiralOscillator::new(chirality);
        let canonical = c.to_canonical(&f(&c))?;
        quantize_with(&embed_pair(&canonical, 2, mode)?, space, &conv)
    };
    let h_plus = sector(Chirality::Plus, 1, |c| c.hamiltonian())?;
    let h_minus = sector(Chirality::Minus, 2, |c| c.hamiltonian())?;
    let j_plus = sector(Chirality::Plus, 1, chiral_angular_momentum)?;
    let j_minus = sector(Chirality::Minus, 2, chiral_angular_momentum)?;
    let half = c64(0.5, 0.0);
    Ok((h_plus.try_add(&h_minus)?.scale(half), j_plus.try_add(&j_minus)?.scale(half)))
}

/// One comparison of matrices, with the entry that deviates most.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixCheck {
    pub label: String,
    pub residual: f64,
    pub worst: (usize, usize),
}

fn compare(label: &str, got: &DMatrix<f64>, want: &DMatrix<f64>) -> MatrixCheck {
    let diff = got - want;
    let (mut worst, mut residual) = ((0, 0), 0.0);
    for r in 0..diff.nrows() {
        for c in 0..diff.ncols() {
            if diff[(r, c)].abs() > residual {
                residual = diff[(r, c)].abs();
                worst = (r, c);
            }
        }
    }
    MatrixCheck { label: label.to_string(), residual, worst }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecouplingReport {
    pub checks: Vec<MatrixCheck>,
    /// Determinant of `(q_α, r_α) ↦ (Q_α, R_α)` for one `α`.
    pub pair_determinant: f64,
}

impl DecouplingReport {
    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

/// A first-order Lagrangian `½ yᵀΩẏ − ½ yᵀVy`, `Ω` antisymmetric.
#[derive(Clone, Debug)]
pub struct FirstOrderSystem {
    pub omega: DMatrix<f64>,
    pub potential: DMatrix<f64>,
}

impl FirstOrderSystem {
    /// Keeps only the antisymmetric part of the kinetic matrix; the rest is
    /// a total derivative.
    pub fn new(kinetic: DMatrix<f64>, potential: DMatrix<f64>) -> Self {
        let omega = (&kinetic - kinetic.transpose()) * 0.5;
        let potential = (&potential + potential.transpose()) * 0.5;
        Self { omega, potential }
    }

    /// `ẏ = Ω⁻¹V y`.
    pub fn flow(&self) -> Result<DMatrix<f64>> {
        let inv = self.omega.clone().try_inverse().ok_or_else(|| Error::arg("degenerate kinetic term"))?;
        Ok(inv * &self.potential)
    }

    /// Substitute `y = T x`.
    pub fn transform(&self, t: &DMatrix<f64>) -> Self {
        Self::new(t.transpose() * &self.omega * t, t.transpose() * &self.potential * t)
    }

    /// Solve the equations of the variables in `eliminate` (which must have
    /// no kinetic term of their own) and substitute. Returns the mass and
    /// stiffness of the remaining `½ẋᵀMẋ − ½xᵀKx`.
    pub fn eliminate(&self, keep: &[usize], eliminate: &[usize]) -> Result<(DMatrix<f64>, DMatrix<f64>, f64)> {
        let sub = |m: &DMatrix<f64>, rows: &[usize], cols: &[usize]| {
            DMatrix::from_fn(rows.len(), cols.len(), |r, c| m[(rows[r], cols[c])])
        };
        // obstructions to a purely second-order result
        let obstruction = [
            sub(&self.omega, eliminate, eliminate).amax(),
            sub(&self.omega, keep, keep).amax(),
            sub(&self.potential, keep, eliminate).amax(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        // ½yᵀΩẏ ≃ y_eᵀ Ω_ek ẏ_k after integrating the (k, e) block by parts
        let c = sub(&self.omega, eliminate, keep);
        let v_ee = sub(&self.potential, eliminate, eliminate)
            .try_inverse()
            .ok_or_else(|| Error::arg("eliminated variables have a degenerate potential"))?;
        let mass = c.transpose() * v_ee * &c;
        Ok((mass, sub(&self.potential, keep, keep), obstruction))
    }
}

/// The summed chiral pair in `(q₁, q₂, r₁, r₂)`.
pub fn chiral_pair_system() -> FirstOrderSystem {
    let e = epsilon();
    let mut k = DMatrix::zeros(4, 4);
    k.view_mut((0, 0), (2, 2)).copy_from(&e);
    k.view_mut((2, 2), (2, 2)).copy_from(&(-e));
    FirstOrderSystem::new(k, DMatrix::identity(4, 4))
}

/// `½ ε_αβ R_α Q̇_β − ¼(Q² + R²)` in `(Q₁, Q₂, R₁, R₂)`.
pub fn collective_system() -> FirstOrderSystem {
    let mut k = DMatrix::zeros(4, 4);
    k.view_mut((2, 0), (2, 2)).copy_from(&epsilon());
    FirstOrderSystem::new(k, DMatrix::identity(4, 4) * 0.5)
}

/// `(q, r)` from `(Q, R)`: `q = (Q + R)/2`, `r = (Q − R)/2`.
pub fn collective_change() -> DMatrix<f64> {
    let i = DMatrix::<f64>::identity(2, 2) * 0.5;
    let mut t = DMatrix::zeros(4, 4);
    t.view_mut((0, 0), (2, 2)).copy_from(&i);
    t.view_mut((0, 2), (2, 2)).copy_from(&i);
    t.view_mut((2, 0), (2, 2)).copy_from(&i);
    t.view_mut((2, 2), (2, 2)).copy_from(&(-&i));
    t
}

/// Matrix-level check that the collective variables decouple the chiral pair
/// into a 2D oscillator with overall normalization ½.
pub fn decoupling_check() -> Result<DecouplingReport> {
    let original = chiral_pair_system();
    let target = collective_system();
    let t = collective_change();
    let moved = original.transform(&t);
    let mut checks = vec![
        compare("kinetic term after change of variables", &moved.omega, &target.omega),
        compare("potential after change of variables", &moved.potential, &target.potential),
    ];
    let t_inv = t.clone().try_inverse().ok_or_else(|| Error::arg("singular change of variables"))?;
    checks.push(compare("equations of motion", &(&t_inv * original.flow()? * &t), &target.flow()?));

    let half = DMatrix::<f64>::identity(2, 2) * 0.5;
    for (name, keep, drop) in [("R", [0, 1], [2, 3]), ("Q", [2, 3], [0, 1])] {
        let (mass, stiffness, obstruction) = target.eliminate(&keep, &drop)?;
        let other = if name == "R" { "Q" } else { "R" };
        checks.push(MatrixCheck { label: format!("eliminate {name}: first-order remainder"), residual: obstruction, worst: (0, 0) });
        checks.push(compare(&format!("eliminate {name}: mass of {other}"), &mass, &half));
        checks.push(compare(&format!("eliminate {name}: stiffness of {other}"), &stiffness, &half));
        let accel = -mass.clone().try_inverse().ok_or_else(|| Error::arg("degenerate mass"))? * &stiffness;
        checks.push(compare(&format!("eliminate {name}: {other}'' = -{other}"), &accel, &-DMatrix::<f64>::identity(2, 2)));
    }
    let pair = Matrix2::new(1.0, 1.0, 1.0, -1.0);
    Ok(DecouplingReport { checks, pair_determinant: pair.determinant() })
}
