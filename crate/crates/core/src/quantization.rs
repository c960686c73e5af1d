//! From quadratic forms to hermitian ladder operators.
//!
//! A generator matrix `G` gives the form `f = ½ zᵀ(−JG)z`, which carries the
//! generator's factor `i`. Quantization multiplies by `−i`, replaces each
//! monomial `xy` by `½(x̂ŷ + ŷx̂)`, and substitutes `q̂ = (a + a†)/√2`,
//! `p̂ = −i(a − a†)/√2`. The resulting map `G ↦ Ĝ` preserves commutators
//! exactly: `[G₁, G₂] = ωG₃ ⇒ [Ĝ₁, Ĝ₂] = ωĜ₃`.

use serde::Serialize;

use crate::algebra::{bracket_residual, IdentityCheck};
use crate::error::{Error, Result};
use crate::fock::{lower, number, raise, FockOperator, FockSpace, LinearLadder, NormalQuadratic};
use crate::generators::{GeneratorCarrier, GeneratorSet, Label};
use crate::lie_matrix::{canonical_j, sp4_generators};
use crate::symplectic::{form_from_field, LinearField, QuadraticForm};
use crate::tolerance::EPS_FOCK;
use crate::{c64, ComplexMatrix, C64};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ordering {
    /// `xy ↦ ½(x̂ŷ + ŷx̂)`.
    Weyl,
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct QuantizationConvention {
    pub prefactor: C64,
    pub ordering: Ordering,
}

impl QuantizationConvention {
    /// `f ↦ −i f̂`, turning the pure-imaginary generator polynomials into
    /// hermitian operators.
    pub fn symplectic() -> Self {
        Self { prefactor: c64(0.0, -1.0), ordering: Ordering::Weyl }
    }

    /// `f ↦ f̂` for physical (real) Hamiltonians.
    pub fn physical() -> Self {
        Self { prefactor: c64(1.0, 0.0), ordering: Ordering::Weyl }
    }
}

impl Default for QuantizationConvention {
    fn default() -> Self {
        Self::symplectic()
    }
}

/// Symbolic quantization: the normal-ordered ladder polynomial of `f`.
pub fn quantize_symbolic(f: &QuadraticForm, convention: &QuantizationConvention) -> Result<NormalQuadratic> {
    let n = f.n_pairs();
    let z: Vec<LinearLadder> = (1..=n)
        .map(|i| LinearLadder::position(n, i))
        .chain((1..=n).map(|i| LinearLadder::momentum(n, i)))
        .collect();
    let a = f.matrix();
    let mut out = NormalQuadratic::zero(n);
    for k in 0..2 * n {
        for l in k..2 * n {
            // coefficient of the monomial z_k z_l in ½ zᵀAz
            let coef = if k == l { a.get(k, k) * 0.5 } else { a.get(k, l) };
            if coef.norm() == 0.0 {
                continue;
            }
            let sym = match convention.ordering {
                Ordering::Weyl => NormalQuadratic::product(&z[k], &z[l])?
                    .try_add(&NormalQuadratic::product(&z[l], &z[k])?)?
                    .scale(c64(0.5, 0.0)),
            };
            out = out.try_add(&sym.scale(coef * convention.prefactor))?;
        }
    }
    Ok(out)
}

/// Quantize with the symplectic (`−i`) convention.
pub fn quantize(f: &QuadraticForm, space: FockSpace) -> Result<FockOperator> {
    quantize_with(f, space, &QuantizationConvention::symplectic())
}

pub fn quantize_with(f: &QuadraticForm, space: FockSpace, convention: &QuantizationConvention) -> Result<FockOperator> {
    if space.modes() != f.n_pairs() {
        return Err(Error::DimensionMismatch { expected: f.n_pairs(), found: space.modes() });
    }
    let op = quantize_symbolic(f, convention)?.to_operator(space)?;
    let residual = op.hermitian_defect();
    if residual >= EPS_FOCK * op.max_abs().max(1.0) {
        return Err(Error::ConventionViolation { residual });
    }
    Ok(op)
}

/// `G ↦ quantize(form_from_field(G))`.
pub fn quantize_generator(g: &ComplexMatrix, space: FockSpace) -> Result<FockOperator> {
    quantize(&form_from_field(&LinearField::new(g.clone())?)?, space)
}

/// Dirac's ten operators, written directly in ladder operators.
///
/// `H` contains `a₂a₂†`, entered as `a₂†a₂ + 1`: the truncated product
/// `a₂a₂†` would lose the top level.
pub fn dirac_representation(space: FockSpace) -> Result<GeneratorSet<FockOperator>> {
    if space.modes() != 2 {
        return Err(Error::arg(format!("Dirac's representation needs 2 modes, got {}", space.modes())));
    }
    let (a1, a2) = (lower(space, 1)?, lower(space, 2)?);
    let (ad1, ad2) = (raise(space, 1)?, raise(space, 2)?);
    let one = FockOperator::identity(space);
    let m = |x: &FockOperator, y: &FockOperator| x.try_mul(y);
    let sum = |terms: &[(f64, FockOperator)], s: C64| -> Result<FockOperator> {
        let mut acc = FockOperator::zero(space);
        for (sign, t) in terms {
            acc = acc.add_scaled(t, c64(*sign, 0.0))?;
        }
        Ok(acc.scale(s))
    };
    let half = c64(0.5, 0.0);
    let half_i = c64(0.0, 0.5);
    let quarter = c64(0.25, 0.0);
    let quarter_i = c64(0.0, 0.25);

    GeneratorSet::try_from_fn(|label| match label {
        Label::L1 => sum(&[(1.0, m(&ad1, &a2)?), (1.0, m(&ad2, &a1)?)], half),
        Label::L2 => sum(&[(1.0, m(&ad2, &a1)?), (-1.0, m(&ad1, &a2)?)], half_i),
        Label::L3 => sum(&[(1.0, m(&ad1, &a1)?), (-1.0, m(&ad2, &a2)?)], half),
        Label::H => sum(&[(1.0, m(&ad1, &a1)?), (1.0, m(&ad2, &a2)?), (1.0, one.clone())], half),
        Label::K1 => sum(
            &[(1.0, m(&ad1, &ad1)?), (1.0, m(&a1, &a1)?), (-1.0, m(&ad2, &ad2)?), (-1.0, m(&a2, &a2)?)],
            -quarter,
        ),
        Label::K2 => sum(
            &[(1.0, m(&ad1, &ad1)?), (1.0, m(&ad2, &ad2)?), (-1.0, m(&a1, &a1)?), (-1.0, m(&a2, &a2)?)],
            quarter_i,
        ),
        Label::K3 => sum(&[(1.0, m(&ad1, &ad2)?), (1.0, m(&a1, &a2)?)], half),
        Label::B1 => sum(
            &[(1.0, m(&ad1, &ad1)?), (-1.0, m(&a1, &a1)?), (-1.0, m(&ad2, &ad2)?), (1.0, m(&a2, &a2)?)],
            -quarter_i,
        ),
        Label::B2 => sum(
            &[(1.0, m(&ad1, &ad1)?), (1.0, m(&ad2, &ad2)?), (1.0, m(&a1, &a1)?), (1.0, m(&a2, &a2)?)],
            -quarter,
        ),
        Label::B3 => sum(&[(1.0, m(&ad1, &ad2)?), (-1.0, m(&a1, &a2)?)], half_i),
    })
}

/// The ten Sp(4) matrices pushed through field → form → quantization.
pub fn pipeline_representation(space: FockSpace) -> Result<GeneratorSet<FockOperator>> {
    if space.modes() != 2 {
        return Err(Error::arg(format!("the Sp(4) pipeline needs 2 modes, got {}", space.modes())));
    }
    sp4_generators().map(|_, g| quantize_generator(g, space))
}

/// Largest entry-wise deviation between two sets, per label.
pub fn compare_sets(a: &GeneratorSet<FockOperator>, b: &GeneratorSet<FockOperator>) -> Result<Vec<(Label, f64)>> {
    Label::ALL.iter().map(|&l| Ok((l, a[l].max_abs_diff(&b[l])?))).collect()
}

/// `S₁ = (i/2)σ₃`, `S₂ = (i/2)J`, `S₃ = (i/2)σ₁`.
pub fn su11_matrices() -> [ComplexMatrix; 3] {
    let half_i = c64(0.0, 0.5);
    [
        ComplexMatrix::from_real_rows([[1.0, 0.0], [0.0, -1.0]]).scale(half_i),
        canonical_j(1).expect("one pair").scale(half_i),
        ComplexMatrix::from_real_rows([[0.0, 1.0], [1.0, 0.0]]).scale(half_i),
    ]
}

/// Place a one-pair form on `(q_mode, p_mode)` of an `n_pairs` phase space.
pub fn embed_pair(f: &QuadraticForm, n_pairs: usize, mode: usize) -> Result<QuadraticForm> {
    if f.n_pairs() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: f.n_pairs() });
    }
    if mode == 0 || mode > n_pairs {
        return Err(Error::arg(format!("mode {mode} outside 1..={n_pairs}")));
    }
    let slots = [mode - 1, n_pairs + mode - 1];
    let big = ComplexMatrix::from_fn(2 * n_pairs, |r, c| {
        match (slots.iter().position(|&x| x == r), slots.iter().position(|&x| x == c)) {
            (Some(i), Some(j)) => f.matrix().get(i, j),
            _ => c64(0.0, 0.0),
        }
    });
    QuadraticForm::new(big)
}

/// `Ŝ₁ = (i/4)(a†² − a²)`, `Ŝ₂ = ¼(a†a + aa†)`, `Ŝ₃ = −¼(a†² + a²)` on one mode,
/// obtained by quantizing [`su11_matrices`] through the same pipeline.
pub fn su11_operators(space: FockSpace, mode: usize) -> Result<[FockOperator; 3]> {
    if mode == 0 || mode > space.modes() {
        return Err(Error::arg(format!("mode {mode} outside 1..={}", space.modes())));
    }
    let [s1, s2, s3] = su11_matrices();
    let embed = |s: &ComplexMatrix| -> Result<FockOperator> {
        let f = form_from_field(&LinearField::new(s.clone())?)?;
        quantize(&embed_pair(&f, space.modes(), mode)?, space)
    };
    Ok([embed(&s1)?, embed(&s2)?, embed(&s3)?])
}

/// Hand-written `Ŝᵢ` on one mode, for comparison with [`su11_operators`].
pub fn su11_reference(space: FockSpace, mode: usize) -> Result<[FockOperator; 3]> {
    let (a, ad) = (lower(space, mode)?, raise(space, mode)?);
    let (aa, adad) = (a.try_mul(&a)?, ad.try_mul(&ad)?);
    // a a† = a†a + 1
    let s2 = number(space, mode)?
        .scale(c64(2.0, 0.0))
        .try_add(&FockOperator::identity(space))?
        .scale(c64(0.25, 0.0));
    Ok([
        adad.try_sub(&aa)?.scale(c64(0.0, 0.25)),
        s2,
        adad.try_add(&aa)?.scale(c64(-0.25, 0.0)),
    ])
}

/// The `SU(1,1)` triples `(Kᵢ, Bᵢ, H)`: `[Kᵢ,H] = iBᵢ`, `[Bᵢ,H] = −iKᵢ`,
/// `[Kᵢ,Bᵢ] = iH`; plus `[Kᵢ,Bⱼ] = 0` for `i ≠ j`.
pub fn su11_triples_check<T: GeneratorCarrier>(gens: &GeneratorSet<T>) -> Result<Vec<IdentityCheck>> {
    let refs: Vec<&T> = gens.elements().iter().collect();
    let w = T::window(&refs)?;
    let (i, mi) = (c64(0.0, 1.0), c64(0.0, -1.0));
    let h = &gens[Label::H];
    let mut out = Vec::new();
    for n in 1..=3 {
        let (k, b) = (&gens[Label::k(n)], &gens[Label::b(n)]);
        out.push(IdentityCheck { label: format!("[K{n},H] = iB{n}"), residual: bracket_residual(k, h, &[(i, b)], &w)? });
        out.push(IdentityCheck { label: format!("[B{n},H] = -iK{n}"), residual: bracket_residual(b, h, &[(mi, k)], &w)? });
        out.push(IdentityCheck { label: format!("[K{n},B{n}] = iH"), residual: bracket_residual(k, b, &[(i, h)], &w)? });
    }
    for n in 1..=3 {
        for m in 1..=3 {
            if n != m {
                let (k, b) = (&gens[Label::k(n)], &gens[Label::b(m)]);
                out.push(IdentityCheck { label: format!("[K{n},B{m}] = 0"), residual: bracket_residual(k, b, &[], &w)? });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_matrix::commutator;
    use crate::symplectic::Var::{P, Q};
    use crate::tolerance::EPS_ALG;

    fn space() -> FockSpace {
        FockSpace::new(2, 8).unwrap()
    }

    #[test]
    fn l1_polynomial_quantizes_to_hopping() {
        let s = space();
        let f = QuadraticForm::from_monomials(2, &[(c64(0.0, 0.5), P(1), P(2)), (c64(0.0, 0.5), Q(1), Q(2))]).unwrap();
        let got = quantize(&f, s).unwrap();
        let want = raise(s, 1).unwrap().try_mul(&lower(s, 2).unwrap()).unwrap()
            .try_add(&raise(s, 2).unwrap().try_mul(&lower(s, 1).unwrap()).unwrap()).unwrap()
            .scale(c64(0.5, 0.0));
        assert!(got.max_abs_diff(&want).unwrap() < EPS_FOCK);
    }

    #[test]
    fn k2_polynomial_quantizes_to_pair_terms() {
        let s = space();
        let f = QuadraticForm::from_monomials(2, &[(c64(0.0, 0.5), Q(1), P(1)), (c64(0.0, 0.5), Q(2), P(2))]).unwrap();
        let sym = quantize_symbolic(&f, &QuantizationConvention::symplectic()).unwrap();
        // (i/4)(a₁†² + a₂†² − a₁² − a₂²)
        for k in 0..2 {
            assert!((sym.create[(k, k)] - c64(0.0, 0.25)).norm() < 1e-15);
            assert!((sym.annihilate[(k, k)] - c64(0.0, -0.25)).norm() < 1e-15);
        }
        assert!(sym.hop.iter().all(|z| z.norm() < 1e-15) && sym.constant.norm() < 1e-15);
        let dirac = dirac_representation(s).unwrap();
        assert!(quantize(&f, s).unwrap().max_abs_diff(&dirac[Label::K2]).unwrap() < EPS_FOCK);
    }

    #[test]
    fn zero_form_quantizes_to_zero() {
        assert!(quantize(&QuadraticForm::zero(2).unwrap(), space()).unwrap().is_zero());
    }

    #[test]
    fn errors() {
        let f = QuadraticForm::zero(1).unwrap();
        assert!(matches!(quantize(&f, space()), Err(Error::DimensionMismatch { .. })));
        // a real generator gives an anti-hermitian operator
        let real = QuadraticForm::from_monomials(1, &[(c64(0.5, 0.0), Q(1), Q(1))]).unwrap();
        let one = FockSpace::new(1, 4).unwrap();
        assert!(matches!(quantize(&real, one), Err(Error::ConventionViolation { .. })));
        assert!(quantize_with(&real, one, &QuantizationConvention::physical()).is_ok());
        assert!(dirac_representation(FockSpace::new(3, 2).unwrap()).is_err());
        assert!(pipeline_representation(FockSpace::new(1, 2).unwrap()).is_err());
    }

    #[test]
    fn dirac_set_is_hermitian_with_expected_shapes() {
        let d = dirac_representation(space()).unwrap();
        for (l, op) in d.iter() {
            assert!(op.is_hermitian(EPS_FOCK), "{l}");
            let diag_only = matches!(l, Label::L1 | Label::L2 | Label::L3 | Label::H);
            if diag_only {
                assert_eq!(op.degree_shift(), &[0].into(), "{l}");
            } else {
                assert!(op.degree_shift().iter().all(|s| [-2, 0, 2].contains(s)), "{l}");
            }
        }
        let b3 = &d[Label::B3];
        // (i/2)(a₁†a₂† − a₁a₂): ⟨1,1|B₃|0,0⟩ = i/2
        assert!((b3.element(&[1, 1], &[0, 0]).unwrap() - c64(0.0, 0.5)).norm() < 1e-15);
        let l3 = &d[Label::L3];
        assert!((l3.element(&[3, 1], &[3, 1]).unwrap() - c64(1.0, 0.0)).norm() < 1e-15);
        let h = &d[Label::H];
        assert!((h.element(&[8, 8], &[8, 8]).unwrap() - c64(8.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn pipeline_equals_dirac() {
        for n in [4, 6, 8] {
            let s = FockSpace::new(2, n).unwrap();
            let dev = compare_sets(&pipeline_representation(s).unwrap(), &dirac_representation(s).unwrap()).unwrap();
            for (l, d) in dev {
                assert!(d < EPS_FOCK, "{l} at N={n}: {d:e}");
            }
        }
    }

    #[test]
    fn su11_matrix_algebra() {
        let [s1, s2, s3] = su11_matrices();
        let i = c64(0.0, 1.0);
        assert!(commutator(&s1, &s2).unwrap().max_abs_diff(&s3.scale(i)) < EPS_ALG);
        assert!(commutator(&s2, &s3).unwrap().max_abs_diff(&s1.scale(i)) < EPS_ALG);
        assert!(commutator(&s3, &s1).unwrap().max_abs_diff(&s2.scale(-i)) < EPS_ALG);
        assert_eq!(s2, canonical_j(1).unwrap().scale(c64(0.0, 0.5)));
    }

    #[test]
    fn su11_operators_match_reference_and_sum_to_h() {
        let s = space();
        for mode in 1..=2 {
            let got = su11_operators(s, mode).unwrap();
            let want = su11_reference(s, mode).unwrap();
            for k in 0..3 {
                assert!(got[k].max_abs_diff(&want[k]).unwrap() < EPS_FOCK, "S{} mode {mode}", k + 1);
            }
        }
        let h = su11_operators(s, 1).unwrap()[1].try_add(&su11_operators(s, 2).unwrap()[1]).unwrap();
        assert!(h.max_abs_diff(&dirac_representation(s).unwrap()[Label::H]).unwrap() < EPS_FOCK);
        assert!(su11_operators(s, 3).is_err());
    }

    #[test]
    fn triples_close_on_both_carriers() {
        for c in su11_triples_check(&sp4_generators()).unwrap() {
            assert!(c.residual < EPS_ALG, "{}", c.label);
        }
        for c in su11_triples_check(&dirac_representation(space()).unwrap()).unwrap() {
            assert!(c.residual < EPS_FOCK, "{}", c.label);
        }
    }
}
