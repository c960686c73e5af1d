use proptest::prelude::*;

use desitter_core::fock::{FockOperator, FockSpace, SparseMatrix};
use desitter_core::jordan::jordan_bilinear;
use desitter_core::lie_matrix::{canonical_j, commutator};
use desitter_core::quantization::{quantize, quantize_symbolic, QuantizationConvention};
use desitter_core::symplectic::{
    field_bracket_check, field_from_form, form_from_field, vector_field_isomorphism_residual, LinearField, QuadraticForm,
};
use desitter_core::{c64, ComplexMatrix, Label};

fn real_symmetric(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-2.0..2.0f64, dim * dim).prop_map(move |v| {
        let m = ComplexMatrix::from_fn(dim, |r, c| c64(v[r * dim + c], 0.0));
        m.symmetrized()
    })
}

fn complex_symmetric(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    (real_symmetric(dim), real_symmetric(dim)).prop_map(|(a, b)| &a + &b.scale(c64(0.0, 1.0)))
}

fn real_square(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-2.0..2.0f64, dim * dim)
        .prop_map(move |v| ComplexMatrix::from_fn(dim, |r, c| c64(v[r * dim + c], 0.0)))
}

fn form(a: ComplexMatrix) -> QuadraticForm {
    QuadraticForm::new(a).unwrap()
}

fn tol(scale: f64) -> f64 {
    1e-12 * scale.max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn form_field_round_trip(a in (1usize..=3).prop_flat_map(|n| complex_symmetric(2 * n))) {
        let f = form(a.clone());
        let back = form_from_field(&field_from_form(&f)).unwrap();
        prop_assert!(back.matrix().max_abs_diff(&a) < tol(a.max_abs()));
        let m = field_from_form(&f).matrix().clone();
        let again = field_from_form(&form_from_field(&LinearField::new(m.clone()).unwrap()).unwrap());
        prop_assert!(again.matrix().max_abs_diff(&m) < tol(m.max_abs()));
    }

    #[test]
    fn conversions_are_linear(a in complex_symmetric(4), b in complex_symmetric(4), s in -3.0..3.0f64, t in -3.0..3.0f64) {
        let (s, t) = (c64(s, 0.5), c64(t, -1.0));
        let combined = form(&a.scale(s) + &b.scale(t));
        let lhs = field_from_form(&combined).matrix().clone();
        let rhs = &field_from_form(&form(a.clone())).matrix().scale(s) + &field_from_form(&form(b.clone())).matrix().scale(t);
        prop_assert!(lhs.max_abs_diff(&rhs) < tol(lhs.max_abs()));
        let back = form_from_field(&LinearField::new(lhs).unwrap()).unwrap();
        prop_assert!(back.matrix().max_abs_diff(combined.matrix()) < tol(combined.matrix().max_abs()));
    }

    #[test]
    fn field_bracket_isomorphism(a in complex_symmetric(4), b in complex_symmetric(4)) {
        let (f, g) = (form(a), form(b));
        let scale = f.matrix().max_abs() * g.matrix().max_abs();
        prop_assert!(field_bracket_check(&f, &g).unwrap() < 10.0 * tol(scale));
        prop_assert!(vector_field_isomorphism_residual(&f, &g).unwrap() < 10.0 * tol(scale));
    }

    #[test]
    fn pure_imaginary_forms_quantize_hermitian(a in real_symmetric(4)) {
        let space = FockSpace::new(2, 5).unwrap();
        let op = quantize(&form(a.scale(c64(0.0, 1.0))), space).unwrap();
        prop_assert!(op.is_hermitian(1e-10));
    }

    #[test]
    fn quantize_is_linear(a in complex_symmetric(4), b in complex_symmetric(4)) {
        let space = FockSpace::new(2, 4).unwrap();
        let conv = QuantizationConvention::symplectic();
        let q = |f: &QuadraticForm| quantize_symbolic(f, &conv).unwrap().to_operator(space).unwrap();
        let sum = q(&form(&a + &b));
        let parts = q(&form(a)).try_add(&q(&form(b))).unwrap();
        prop_assert!(sum.max_abs_diff(&parts).unwrap() < 1e-10);
    }

    #[test]
    fn quantization_preserves_commutators(a in real_symmetric(4), b in real_symmetric(4)) {
        // G = (i/2)·J·A is a generator; G ↦ Ĝ is a Lie homomorphism
        let j = canonical_j(2).unwrap();
        let g = |x: &ComplexMatrix| (&j * x).scale(c64(0.0, 0.5));
        let (ga, gb) = (g(&a), g(&b));
        let space = FockSpace::new(2, 8).unwrap();
        let conv = QuantizationConvention::symplectic();
        let q = |m: &ComplexMatrix| {
            let f = form_from_field(&LinearField::new(m.clone()).unwrap()).unwrap();
            quantize_symbolic(&f, &conv).unwrap().to_operator(space).unwrap()
        };
        let lhs = q(&ga).commutator(&q(&gb)).unwrap();
        let rhs = q(&commutator(&ga, &gb).unwrap());
        prop_assert!(lhs.max_abs_diff_on(&rhs, 4).unwrap() < 1e-9);
    }

    #[test]
    fn bilinear_map_halves_structure_constants(a in real_square(2), b in real_square(2)) {
        // [½a†Aa, ½a†Ba] = ½ · ½a†[A,B]a
        let space = FockSpace::new(2, 6).unwrap();
        let ja = jordan_bilinear(&a, space).unwrap();
        let jb = jordan_bilinear(&b, space).unwrap();
        let lhs = ja.commutator(&jb).unwrap();
        let rhs = jordan_bilinear(&commutator(&a, &b).unwrap(), space).unwrap().scale(c64(0.5, 0.0));
        prop_assert!(lhs.max_abs_diff_on(&rhs, 6).unwrap() < 1e-10);
    }

    #[test]
    fn sparse_product_matches_dense(x in prop::collection::vec((0usize..6, 0usize..6, -1.0..1.0f64), 0..20),
                                    y in prop::collection::vec((0usize..6, 0usize..6, -1.0..1.0f64), 0..20)) {
        let mk = |t: &[(usize, usize, f64)]| SparseMatrix::from_triplets(6, t.iter().map(|&(r, c, v)| (r, c, c64(v, v / 2.0))));
        let (a, b) = (mk(&x), mk(&y));
        let sparse = a.mul(&b).to_dense();
        let dense = a.to_dense() * b.to_dense();
        prop_assert!((sparse - dense).iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn labels_parse_back(k in 0usize..10) {
        let l = Label::ALL[k];
        prop_assert_eq!(l.name().parse::<Label>().unwrap(), l);
        prop_assert_eq!(l.name().to_lowercase().parse::<Label>().unwrap(), l);
    }
}

#[test]
fn identity_commutes_with_everything() {
    let space = FockSpace::new(2, 3).unwrap();
    let id = FockOperator::identity(space);
    let x = jordan_bilinear(&ComplexMatrix::from_real_rows([[0.0, 1.0], [2.0, 0.0]]), space).unwrap();
    assert!(id.commutator(&x).unwrap().is_zero());
}
