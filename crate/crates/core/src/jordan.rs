//! Jordan-type maps from `k×k` matrices to quadratic operators on `k` modes.
//!
//! The bilinear map `M ↦ ½ a†Ma` satisfies `[a†Aa, a†Ba] = a†[A,B]a`, so with
//! the `½` the images close with half the matrix structure constants:
//! `[σᵢ, σⱼ] = 2iεσₖ` becomes `[L̂ᵢ, L̂ⱼ] = iεL̂ₖ`. [`jordan_algebra_check`]
//! compares against that scale.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::algebra::{rank, structure_constants, Coords, LieCarrier, StructureTable};
use crate::error::{Error, Result};
use crate::fock::{FockOperator, FockSpace, LinearLadder, NormalQuadratic};
use crate::generators::{GeneratorSet, Label};
use crate::lie_matrix::{canonical_j, pauli, sp4_generators};
use crate::quantization::quantize_generator;
use crate::{c64, ComplexMatrix, C64};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JordanKind {
    /// `½ a†Ma`.
    Bilinear,
    /// `¼(a†Ma† + aMa)`.
    Plus,
    /// `(i/4)(a†Ma† − aMa)`.
    Minus,
}

fn to_nalgebra(m: &ComplexMatrix, space: FockSpace) -> Result<DMatrix<C64>> {
    if m.dim() != space.modes() {
        return Err(Error::DimensionMismatch { expected: space.modes(), found: m.dim() });
    }
    Ok(m.as_nalgebra().clone())
}

/// Symbolic image of `m` under the chosen map.
pub fn jordan_quadratic(kind: JordanKind, m: &ComplexMatrix, space: FockSpace) -> Result<NormalQuadratic> {
    let x = to_nalgebra(m, space)?;
    let zero = DMatrix::from_element(x.nrows(), x.ncols(), c64(0.0, 0.0));
    let z = c64(0.0, 0.0);
    match kind {
        JordanKind::Bilinear => NormalQuadratic::new(zero.clone(), zero, x * c64(0.5, 0.0), z),
        JordanKind::Plus => NormalQuadratic::new(&x * c64(0.25, 0.0), &x * c64(0.25, 0.0), zero, z),
        JordanKind::Minus => NormalQuadratic::new(&x * c64(0.0, 0.25), &x * c64(0.0, -0.25), zero, z),
    }
}

pub fn jordan_map(kind: JordanKind, m: &ComplexMatrix, space: FockSpace) -> Result<FockOperator> {
    jordan_quadratic(kind, m, space)?.to_operator(space)
}

pub fn jordan_bilinear(m: &ComplexMatrix, space: FockSpace) -> Result<FockOperator> {
    jordan_map(JordanKind::Bilinear, m, space)
}

pub fn jordan_plus(m: &ComplexMatrix, space: FockSpace) -> Result<FockOperator> {
    jordan_map(JordanKind::Plus, m, space)
}

pub fn jordan_minus(m: &ComplexMatrix, space: FockSpace) -> Result<FockOperator> {
    jordan_map(JordanKind::Minus, m, space)
}

/// Structure constants of a matrix family next to those of its bilinear images.
#[derive(Clone, Debug, Serialize)]
pub struct JordanAlgebraReport {
    pub matrix_table: StructureTable,
    pub image_table: StructureTable,
    /// Expected ratio of image to matrix constants.
    pub scale: f64,
    /// Largest `|c_image − scale · c_matrix|`.
    pub deviation: f64,
    pub safe_cutoff: usize,
}

impl JordanAlgebraReport {
    /// Worst of the constant deviation and both closure residuals.
    pub fn max_residual(&self) -> f64 {
        self.deviation.max(self.matrix_table.max_residual()).max(self.image_table.max_residual())
    }
}

pub fn jordan_algebra_check(ms: &[ComplexMatrix], space: FockSpace) -> Result<JordanAlgebraReport> {
    let labels: Vec<String> = (1..=ms.len()).map(|i| format!("M{i}")).collect();
    jordan_algebra_check_labeled(&labels, ms, space)
}

pub fn jordan_algebra_check_labeled(labels: &[String], ms: &[ComplexMatrix], space: FockSpace) -> Result<JordanAlgebraReport> {
    let images = ms.iter().map(|m| jordan_bilinear(m, space)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&FockOperator> = images.iter().collect();
    let safe_cutoff = FockOperator::window(&refs)?.safe_cutoff;
    let matrix_table = structure_constants(labels, &ms.iter().collect::<Vec<_>>())?;
    let image_table = structure_constants(labels, &refs)?;
    let scale = 0.5;
    let deviation = image_table.max_deviation_from(&matrix_table, c64(scale, 0.0))?;
    Ok(JordanAlgebraReport { matrix_table, image_table, scale, deviation, safe_cutoff })
}

/// The ten 4×4 generators as `a†Ga` on four modes; these carry the matrix
/// structure constants unchanged.
pub fn four_mode_representation(space: FockSpace) -> Result<GeneratorSet<FockOperator>> {
    if space.modes() != 4 {
        return Err(Error::arg(format!("the four-mode map needs 4 modes, got {}", space.modes())));
    }
    sp4_generators().map(|_, g| Ok(jordan_bilinear(g, space)?.scale(c64(2.0, 0.0))))
}

/// `¼ Σᵢ (aᵢ†aᵢ + aᵢaᵢ†)`, normal ordered.
pub fn symmetric_number(space: FockSpace) -> Result<FockOperator> {
    let m = space.modes();
    let mut acc = NormalQuadratic::zero(m);
    for i in 1..=m {
        let mut a = LinearLadder::zero(m);
        a.lower[i - 1] = c64(1.0, 0.0);
        let mut ad = LinearLadder::zero(m);
        ad.raise[i - 1] = c64(1.0, 0.0);
        acc = acc
            .try_add(&NormalQuadratic::product(&ad, &a)?)?
            .try_add(&NormalQuadratic::product(&a, &ad)?)?;
    }
    acc.scale(c64(0.25, 0.0)).to_operator(space)
}

/// Dirac's ten operators from Pauli and identity matrices alone:
/// `Lᵢ = ½a†σᵢa`, `(K₃, K₁) = (W(σ₁), −W(σ₃))`, `(B₃, B₁) = (Z(σ₁), −Z(σ₃))`,
/// `B₂ = −W(I)`, `K₂ = Z(I)`, `H = ¼Σ(a†a + aa†)`.
pub fn assemble_dirac_via_jordan(space: FockSpace) -> Result<GeneratorSet<FockOperator>> {
    if space.modes() != 2 {
        return Err(Error::arg(format!("the Jordan assembly needs 2 modes, got {}", space.modes())));
    }
    let id = ComplexMatrix::identity(2);
    let neg = c64(-1.0, 0.0);
    GeneratorSet::try_from_fn(|label| match label {
        Label::L1 => jordan_bilinear(&pauli(1)?, space),
        Label::L2 => jordan_bilinear(&pauli(2)?, space),
        Label::L3 => jordan_bilinear(&pauli(3)?, space),
        Label::H => symmetric_number(space),
        Label::K1 => Ok(jordan_plus(&pauli(3)?, space)?.scale(neg)),
        Label::K2 => jordan_minus(&id, space),
        Label::K3 => jordan_plus(&pauli(1)?, space),
        Label::B1 => Ok(jordan_minus(&pauli(3)?, space)?.scale(neg)),
        Label::B2 => Ok(jordan_plus(&id, space)?.scale(neg)),
        Label::B3 => jordan_minus(&pauli(1)?, space),
    })
}

fn symmetric_basis(n: usize) -> Vec<DMatrix<f64>> {
    let mut out = Vec::new();
    for i in 0..n {
        let mut s = DMatrix::zeros(n, n);
        s[(i, i)] = 1.0;
        out.push(s);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut s = DMatrix::zeros(n, n);
            s[(i, j)] = 1.0;
            s[(j, i)] = 1.0;
            out.push(s);
        }
    }
    out
}

fn antisymmetric_basis(n: usize) -> Vec<DMatrix<f64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut t = DMatrix::zeros(n, n);
            t[(i, j)] = 1.0;
            t[(j, i)] = -1.0;
            out.push(t);
        }
    }
    out
}

/// `2n² + n` generators `G = (i/2)·J·A`, one per element of a basis of real
/// symmetric `2n×2n` matrices `A`.
///
/// Order: first the `n²` antisymmetric generators commuting with `J`
/// (`A = [[S,0],[0,S]]`, then `A = [[0,T],[−T,0]]`), then the `n(n+1)`
/// symmetric ones anticommuting with `J` (`A = [[S,0],[0,−S]]`, then
/// `A = [[0,S],[S,0]]`). `S` runs over diagonal units then `Eᵢⱼ + Eⱼᵢ`
/// (`i < j`); `T` over `Eᵢⱼ − Eⱼᵢ`. For `n = 1` this gives `(S₂, −S₃, S₁)`.
pub fn sp2n_basis(n: usize) -> Result<Vec<ComplexMatrix>> {
    let j = canonical_j(n)?;
    let zero = DMatrix::<f64>::zeros(n, n);
    let block = |a: &DMatrix<f64>, b: &DMatrix<f64>, c: &DMatrix<f64>, d: &DMatrix<f64>| {
        let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
        m.view_mut((0, 0), (n, n)).copy_from(a);
        m.view_mut((0, n), (n, n)).copy_from(b);
        m.view_mut((n, 0), (n, n)).copy_from(c);
        m.view_mut((n, n), (n, n)).copy_from(d);
        m
    };
    let sym = symmetric_basis(n);
    let anti = antisymmetric_basis(n);
    let mut forms = Vec::with_capacity(2 * n * n + n);
    forms.extend(sym.iter().map(|s| block(s, &zero, &zero, s)));
    forms.extend(anti.iter().map(|t| block(&zero, t, &-t, &zero)));
    forms.extend(sym.iter().map(|s| block(s, &zero, &zero, &-s)));
    forms.extend(sym.iter().map(|s| block(&zero, s, s, &zero)));
    let half_i = c64(0.0, 0.5);
    Ok(forms
        .into_iter()
        .map(|a| {
            let a = ComplexMatrix::from_nalgebra(a.map(|x| c64(x, 0.0))).expect("square");
            (&j * &a).scale(half_i)
        })
        .collect())
}

/// The quantized `sp(2n)` basis on `n` modes.
pub fn minimal_representation(n: usize, space: FockSpace) -> Result<Vec<FockOperator>> {
    if space.modes() != n {
        return Err(Error::DimensionMismatch { expected: n, found: space.modes() });
    }
    sp2n_basis(n)?.iter().map(|g| quantize_generator(g, space)).collect()
}

/// Number of linearly independent operators, judged on full matrices.
pub fn operator_rank(ops: &[FockOperator]) -> usize {
    let dim = ops.first().map(|o| o.space().cutoff()).unwrap_or(0);
    let vs: Vec<Coords> = ops.iter().map(|o| o.coords_on(dim * o.space().modes())).collect();
    rank(&vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::align_spans;
    use crate::fock::{lower, raise};
    use crate::lie_matrix::{is_symplectic_generator, Classification};
    use crate::quantization::{dirac_representation, su11_matrices, su11_operators};
    use crate::tolerance::{EPS_ALG, EPS_FOCK};

    fn two() -> FockSpace {
        FockSpace::new(2, 8).unwrap()
    }

    #[test]
    fn bilinear_pauli_images_are_l_operators() {
        let d = dirac_representation(two()).unwrap();
        for i in 1..=3 {
            let got = jordan_bilinear(&pauli(i).unwrap(), two()).unwrap();
            assert!(got.max_abs_diff(&d[Label::l(i)]).unwrap() < EPS_FOCK, "L{i}");
        }
    }

    #[test]
    fn bilinear_identity_is_half_number() {
        let s = two();
        let got = jordan_bilinear(&ComplexMatrix::identity(2), s).unwrap();
        let n = crate::fock::number(s, 1).unwrap().try_add(&crate::fock::number(s, 2).unwrap()).unwrap();
        assert!(got.max_abs_diff(&n.scale(c64(0.5, 0.0))).unwrap() < EPS_FOCK);
    }

    #[test]
    fn four_mode_l1() {
        let s = FockSpace::new(4, 3).unwrap();
        let got = jordan_bilinear(&sp4_generators()[Label::L1], s).unwrap();
        let hop = |i, j| raise(s, i).unwrap().try_mul(&lower(s, j).unwrap()).unwrap();
        let want = hop(1, 4)
            .try_add(&hop(2, 3)).unwrap()
            .try_sub(&hop(3, 2)).unwrap()
            .try_sub(&hop(4, 1)).unwrap()
            .scale(c64(0.0, 0.25));
        assert!(got.max_abs_diff(&want).unwrap() < EPS_FOCK);
    }

    #[test]
    fn plus_and_minus_on_pauli() {
        let s = two();
        let d = dirac_representation(s).unwrap();
        let p = |i| pauli(i).unwrap();
        assert!(jordan_plus(&p(1), s).unwrap().max_abs_diff(&d[Label::K3]).unwrap() < EPS_FOCK);
        assert!(jordan_plus(&p(3), s).unwrap().max_abs_diff(&d[Label::K1].scale(c64(-1.0, 0.0))).unwrap() < EPS_FOCK);
        assert!(jordan_minus(&p(1), s).unwrap().max_abs_diff(&d[Label::B3]).unwrap() < EPS_FOCK);
        assert!(jordan_minus(&p(3), s).unwrap().max_abs_diff(&d[Label::B1].scale(c64(-1.0, 0.0))).unwrap() < EPS_FOCK);
        assert!(jordan_plus(&p(2), s).unwrap().is_zero());
        assert!(jordan_minus(&p(2), s).unwrap().is_zero());
    }

    #[test]
    fn identity_cases_and_h() {
        let s = two();
        let d = dirac_representation(s).unwrap();
        let id = ComplexMatrix::identity(2);
        assert!(jordan_plus(&id, s).unwrap().max_abs_diff(&d[Label::B2].scale(c64(-1.0, 0.0))).unwrap() < EPS_FOCK);
        assert!(jordan_minus(&id, s).unwrap().max_abs_diff(&d[Label::K2]).unwrap() < EPS_FOCK);
        assert!(symmetric_number(s).unwrap().max_abs_diff(&d[Label::H]).unwrap() < EPS_FOCK);
    }

    #[test]
    fn assembly_equals_dirac() {
        let s = two();
        let a = assemble_dirac_via_jordan(s).unwrap();
        let d = dirac_representation(s).unwrap();
        for l in Label::ALL {
            assert!(a[l].max_abs_diff(&d[l]).unwrap() < EPS_FOCK, "{l}");
        }
        assert!(assemble_dirac_via_jordan(FockSpace::new(3, 2).unwrap()).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let r = jordan_plus(&ComplexMatrix::identity(3), two());
        assert!(matches!(r, Err(Error::DimensionMismatch { expected: 2, found: 3 })));
    }

    #[test]
    fn pauli_algebra_closes_at_half_scale() {
        let ms: Vec<_> = (1..=3).map(|i| pauli(i).unwrap()).collect();
        let r = jordan_algebra_check(&ms, two()).unwrap();
        assert!(r.max_residual() < EPS_FOCK, "{}", r.max_residual());
        // [σ₁, σ₂] = 2iσ₃ while [L̂₁, L̂₂] = iL̂₃
        assert!((r.matrix_table.get(0, 1, 2) - c64(0.0, 2.0)).norm() < EPS_ALG);
        assert!((r.image_table.get(0, 1, 2) - c64(0.0, 1.0)).norm() < EPS_FOCK);
    }

    #[test]
    fn halved_pauli_tables_differ_by_half() {
        let ms: Vec<_> = (1..=3).map(|i| pauli(i).unwrap().scale(c64(0.5, 0.0))).collect();
        let r = jordan_algebra_check(&ms, two()).unwrap();
        assert!((r.matrix_table.get(0, 1, 2) - c64(0.0, 1.0)).norm() < EPS_ALG);
        assert!((r.image_table.get(0, 1, 2) - c64(0.0, 0.5)).norm() < EPS_FOCK);
    }

    #[test]
    fn identity_family_is_abelian() {
        let r = jordan_algebra_check(&[ComplexMatrix::identity(2)], two()).unwrap();
        assert_eq!(r.max_residual(), 0.0);
        assert!(r.image_table.nonzero(0.0).is_empty());
    }

    #[test]
    fn basis_counts_and_classification() {
        for n in 1..=4 {
            let b = sp2n_basis(n).unwrap();
            assert_eq!(b.len(), 2 * n * n + n);
            let j = canonical_j(n).unwrap();
            for (k, g) in b.iter().enumerate() {
                assert!(g.is_pure_imaginary(0.0));
                let want = if k < n * n { Classification::FirstSet } else { Classification::SecondSet };
                assert_eq!(is_symplectic_generator(g, &j).unwrap(), want, "n={n} k={k}");
            }
        }
        assert!(sp2n_basis(0).is_err());
    }

    #[test]
    fn n1_basis_is_su11() {
        let [s1, s2, s3] = su11_matrices();
        let b = sp2n_basis(1).unwrap();
        assert_eq!(b[0], s2);
        assert_eq!(b[1], s3.scale(c64(-1.0, 0.0)));
        assert_eq!(b[2], s1);
    }

    #[test]
    fn n2_basis_spans_sp4() {
        let basis: Vec<Coords> = sp2n_basis(2).unwrap().iter().map(|g| g.coords(&())).collect();
        let targets: Vec<Coords> = sp4_generators().elements().iter().map(|g| g.coords(&())).collect();
        assert_eq!(rank(&basis), 10);
        let (_, res) = align_spans(&basis, &targets).unwrap();
        assert!(res < EPS_ALG);
        let (_, back) = align_spans(&targets, &basis).unwrap();
        assert!(back < EPS_ALG);
    }

    #[test]
    fn n3_basis_closes() {
        let b = sp2n_basis(3).unwrap();
        let labels: Vec<String> = (1..=b.len()).map(|i| format!("G{i}")).collect();
        let t = structure_constants(&labels, &b.iter().collect::<Vec<_>>()).unwrap();
        assert!(t.closes(EPS_ALG), "{}", t.max_residual());
    }

    #[test]
    fn minimal_representations() {
        // n = 1 spans the quantized S operators
        let one = FockSpace::new(1, 8).unwrap();
        let ops = minimal_representation(1, one).unwrap();
        let s = su11_operators(one, 1).unwrap();
        let full = 8;
        let (_, res) = align_spans(
            &ops.iter().map(|o| o.coords_on(full)).collect::<Vec<_>>(),
            &s.iter().map(|o| o.coords_on(full)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(res < EPS_ALG);

        // n = 2 spans Dirac's ten
        let s2 = two();
        let ops = minimal_representation(2, s2).unwrap();
        let d = dirac_representation(s2).unwrap();
        let (_, res) = align_spans(
            &ops.iter().map(|o| o.coords_on(16)).collect::<Vec<_>>(),
            &d.elements().iter().map(|o| o.coords_on(16)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(res < 1e-8);

        // n = 3: 21 independent hermitian operators closing on the safe window
        let s3 = FockSpace::new(3, 6).unwrap();
        let ops = minimal_representation(3, s3).unwrap();
        assert_eq!(ops.len(), 21);
        assert_eq!(operator_rank(&ops), 21);
        assert!(ops.iter().all(|o| o.is_hermitian(EPS_FOCK)));
        let labels: Vec<String> = (1..=21).map(|i| format!("G{i}")).collect();
        let t = structure_constants(&labels, &ops.iter().collect::<Vec<_>>()).unwrap();
        assert!(t.closes(EPS_FOCK), "{}", t.max_residual());
        assert!(minimal_representation(2, s3).is_err());
    }
}
