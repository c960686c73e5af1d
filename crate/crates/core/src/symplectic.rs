//! Quadratic phase-space forms, linear Hamiltonian vector fields, and the
//! Poisson bracket between them.
//!
//! A form `f(z) = ½ zᵀ A z` generates the field `ż = M z` with `M = J A`.
//! The inverse is `A = −J M`. On quadratics the Poisson bracket
//! `{f, g} = Σ ∂f/∂qᵢ ∂g/∂pᵢ − ∂f/∂pᵢ ∂g/∂qᵢ` closes in closed form:
//! `A_{f,g} = A_f J A_g − A_g J A_f`, and `M_{f,g} = [M_f, M_g]`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Coords, LieCarrier};
use crate::error::{Error, Result};
use crate::generators::{Carrier, GeneratorCarrier};
use crate::lie_matrix::{canonical_j, commutator};
use crate::matrix::format_complex;
use crate::tolerance::EPS_ALG;
use crate::{c64, ComplexMatrix, C64};

/// A phase-space coordinate, 1-based.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Var {
    Q(usize),
    P(usize),
}

impl Var {
    fn slot(self, n_pairs: usize) -> Result<usize> {
        let (i, offset) = match self {
            Var::Q(i) => (i, 0),
            Var::P(i) => (i, n_pairs),
        };
        if i == 0 || i > n_pairs {
            return Err(Error::arg(format!("coordinate index {i} outside 1..={n_pairs}")));
        }
        Ok(i - 1 + offset)
    }

    fn from_slot(slot: usize, n_pairs: usize) -> Self {
        if slot < n_pairs {
            Var::Q(slot + 1)
        } else {
            Var::P(slot - n_pairs + 1)
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q(i) => write!(f, "q{i}"),
            Var::P(i) => write!(f, "p{i}"),
        }
    }
}

fn pairs_of(dim: usize) -> Result<usize> {
    if !dim.is_multiple_of(2) {
        return Err(Error::arg(format!("phase-space dimension must be even, got {dim}")));
    }
    Ok(dim / 2)
}

/// `f(z) = ½ zᵀ A z` over `z = (q₁..qₙ, p₁..pₙ)`, with `A` symmetric.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadraticForm {
    n_pairs: usize,
    a: ComplexMatrix,
}

impl QuadraticForm {
    /// Symmetrizes `a`.
    pub fn new(a: ComplexMatrix) -> Result<Self> {
        let n_pairs = pairs_of(a.dim())?;
        Ok(Self { n_pairs, a: a.symmetrized() })
    }

    pub fn zero(n_pairs: usize) -> Result<Self> {
        if n_pairs == 0 {
            return Err(Error::arg("need at least one canonical pair"));
        }
        Self::new(ComplexMatrix::zeros(2 * n_pairs))
    }

    /// `Σ coef · x · y` over the given monomials.
    pub fn from_monomials(n_pairs: usize, terms: &[(C64, Var, Var)]) -> Result<Self> {
        if n_pairs == 0 {
            return Err(Error::arg("need at least one canonical pair"));
        }
        let dim = 2 * n_pairs;
        let mut entries = vec![c64(0.0, 0.0); dim * dim];
        for &(coef, x, y) in terms {
            let (r, c) = (x.slot(n_pairs)?, y.slot(n_pairs)?);
            if r == c {
                entries[r * dim + c] += coef * 2.0;
            } else {
                entries[r * dim + c] += coef;
                entries[c * dim + r] += coef;
            }
        }
        Self::new(ComplexMatrix::new(dim, entries)?)
    }

    pub fn n_pairs(&self) -> usize {
        self.n_pairs
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.a
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { n_pairs: self.n_pairs, a: self.a.scale(s) }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Self { n_pairs: self.n_pairs, a: self.a.try_add(&other.a)? })
    }

    /// `f(z)`.
    pub fn eval(&self, z: &[C64]) -> Result<C64> {
        let n = self.a.dim();
        if z.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: z.len() });
        }
        let mut acc = c64(0.0, 0.0);
        for r in 0..n {
            for c in 0..n {
                acc += z[r] * self.a.get(r, c) * z[c];
            }
        }
        Ok(acc * 0.5)
    }

    /// Coefficient of each monomial `x·y` (`x` not after `y` in phase-space order).
    pub fn monomials(&self) -> Vec<(C64, Var, Var)> {
        let n = self.a.dim();
        let mut out = Vec::new();
        for r in 0..n {
            for c in r..n {
                let coef = if r == c { self.a.get(r, r) * 0.5 } else { self.a.get(r, c) };
                if coef.norm() > 0.0 {
                    out.push((coef, Var::from_slot(r, self.n_pairs), Var::from_slot(c, self.n_pairs)));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.monomials();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (coef, x, y)) in terms.iter().enumerate() {
            let c = format_complex(*coef);
            let compound = c.chars().skip(1).any(|ch| ch == '+' || ch == '-');
            let (sign, c) = match c.strip_prefix('-') {
                Some(rest) if !compound => ("-", rest.to_string()),
                _ if compound => ("+", format!("({c})")),
                _ => ("+", c),
            };
            let mono = if x == y { format!("{x}^2") } else { format!("{x}*{y}") };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            write!(f, "{c} {mono}")?;
        }
        Ok(())
    }
}

impl LieCarrier for QuadraticForm {
    type Window = ();

    fn window(elements: &[&Self]) -> Result<()> {
        if let Some(first) = elements.first() {
            for e in elements {
                first.a.check_dim(&e.a)?;
            }
        }
        Ok(())
    }

    fn bracket(&self, other: &Self) -> Result<Self> {
        poisson_bracket(self, other)
    }

    fn coords(&self, window: &()) -> Coords {
        self.a.coords(window)
    }
}

impl GeneratorCarrier for QuadraticForm {
    const KIND: Carrier = Carrier::Polynomial;
}

/// Linear vector field `ż = M z`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearField {
    n_pairs: usize,
    m: ComplexMatrix,
}

impl LinearField {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        Ok(Self { n_pairs: pairs_of(m.dim())?, m })
    }

    pub fn n_pairs(&self) -> usize {
        self.n_pairs
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    /// `|MᵀJ + JM|`, zero for fields generated by a quadratic Hamiltonian.
    pub fn hamiltonian_defect(&self) -> f64 {
        let j = canonical_j(self.n_pairs).expect("n_pairs >= 1");
        (&(&self.m.transpose() * &j) + &(&j * &self.m)).max_abs()
    }
}

/// `M = J A`: `q̇ᵢ = ∂f/∂pᵢ`, `ṗᵢ = −∂f/∂qᵢ`.
pub fn field_from_form(f: &QuadraticForm) -> LinearField {
    let j = canonical_j(f.n_pairs).expect("n_pairs >= 1");
    LinearField { n_pairs: f.n_pairs, m: &j * &f.a }
}

/// `A = −J M`, after checking `M` is Hamiltonian.
pub fn form_from_field(xi: &LinearField) -> Result<QuadraticForm> {
    let residual = xi.hamiltonian_defect();
    if residual >= EPS_ALG * xi.m.max_abs().max(1.0) {
        return Err(Error::NotHamiltonian { residual });
    }
    let j = canonical_j(xi.n_pairs)?;
    QuadraticForm::new(-&(&j * &xi.m))
}

/// `{f, g}` in closed form on quadratic forms.
pub fn poisson_bracket(f: &QuadraticForm, g: &QuadraticForm) -> Result<QuadraticForm> {
    f.a.check_dim(&g.a)?;
    let j = canonical_j(f.n_pairs)?;
    let fjg = &(&f.a * &j) * &g.a;
    let gjf = &(&g.a * &j) * &f.a;
    QuadraticForm::new(&fjg - &gjf)
}

/// Lie bracket of two linear vector fields as differential operators:
/// `[ξ_A, ξ_B] = ξ_{[B, A]}`.
pub fn vector_field_bracket(a: &LinearField, b: &LinearField) -> Result<LinearField> {
    LinearField::new(commutator(&b.m, &a.m)?)
}

/// `‖[M_f, M_g] − M_{f,g}‖_F`.
pub fn field_bracket_check(f: &QuadraticForm, g: &QuadraticForm) -> Result<f64> {
    let (mf, mg) = (field_from_form(f), field_from_form(g));
    let mfg = field_from_form(&poisson_bracket(f, g)?);
    Ok((&commutator(&mf.m, &mg.m)? - &mfg.m).frobenius_norm())
}

/// `‖[ξ_f, ξ_g] + ξ_{f,g}‖_F`, with the bracket of fields taken as
/// differential operators.
pub fn vector_field_isomorphism_residual(f: &QuadraticForm, g: &QuadraticForm) -> Result<f64> {
    let lie = vector_field_bracket(&field_from_form(f), &field_from_form(g))?;
    let pb = field_from_form(&poisson_bracket(f, g)?);
    Ok((lie.matrix() + pb.matrix()).frobenius_norm())
}

/// One-dimensional oscillator `½(p² + q²)` and free particle `½p²`.
pub fn oscillator_free_particle_pair() -> (QuadraticForm, QuadraticForm) {
    let half = c64(0.5, 0.0);
    (
        QuadraticForm::from_monomials(1, &[(half, Var::P(1), Var::P(1)), (half, Var::Q(1), Var::Q(1))]).expect("one pair"),
        QuadraticForm::from_monomials(1, &[(half, Var::P(1), Var::P(1))]).expect("one pair"),
    )
}
