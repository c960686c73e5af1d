//! Named verification suites.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{align_spans, bracket_residual, structure_constants, Coords, LieCarrier};
use crate::chiral::{chiral_angular_momentum, chiral_bracket, compose_chiral_pair, decoupling_check, Chirality, ChiralOscillator};
use crate::error::{Error, Result};
use crate::fock::{lower, multiplicities, quadrature, raise, safe_commutator, spectrum, FockOperator, FockSpace, QuadratureKind, MAX_DIM};
use crate::generators::{GeneratorCarrier, GeneratorSet, Label};
use crate::jordan::{
    assemble_dirac_via_jordan, four_mode_representation, jordan_algebra_check, jordan_bilinear, jordan_minus, jordan_plus,
    minimal_representation, operator_rank, sp2n_basis, symmetric_number,
};
use crate::lie_matrix::{
    canonical_j, commutator, is_symplectic_generator, pauli, sp4_generators, verify_brackets, verify_desitter, Classification,
    DeSitterIndexMap,
};
use crate::quantization::{
    dirac_representation, pipeline_representation, su11_matrices, su11_operators, su11_reference, su11_triples_check,
};
use crate::report::VerificationReport;
use crate::symplectic::{
    field_bracket_check, field_from_form, form_from_field, oscillator_free_particle_pair, vector_field_isomorphism_residual,
    LinearField, QuadraticForm,
};
use crate::tolerance::{EPS_ALG, EPS_ALIGN, EPS_FOCK, EXACT};
use crate::{c64, ComplexMatrix, C64};

/// Smallest cutoff accepted by suites that use Fock operators.
pub const MIN_FOCK_CUTOFF: usize = 4;

/// Upper bound on the Fock dimension used for the quantized sp(2n) check.
const SP2N_DIM_BUDGET: usize = 20_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Matrix,
    Desitter,
    Fock,
    Jordan,
    Chiral,
    Su11,
}

impl Suite {
    pub const NAMED: [Suite; 6] = [Suite::Matrix, Suite::Desitter, Suite::Fock, Suite::Jordan, Suite::Chiral, Suite::Su11];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Matrix => "matrix",
            Suite::Desitter => "desitter",
            Suite::Fock => "fock",
            Suite::Jordan => "jordan",
            Suite::Chiral => "chiral",
            Suite::Su11 => "su11",
        }
    }

    pub fn uses_fock(self) -> bool {
        self != Suite::Matrix
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::NAMED)
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::arg(format!("unknown suite '{s}'")))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub cutoff: usize,
    pub n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { cutoff: 8, n: 2 }
    }
}

pub fn validate(suite: Suite, cfg: &SuiteConfig) -> Result<()> {
    if suite.uses_fock() && cfg.cutoff < MIN_FOCK_CUTOFF {
        return Err(Error::CutoffTooSmall { cutoff: cfg.cutoff, shift: MIN_FOCK_CUTOFF });
    }
    if cfg.n == 0 {
        return Err(Error::arg("--n must be at least 1"));
    }
    Ok(())
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<VerificationReport> {
    validate(suite, cfg)?;
    match suite {
        Suite::All => {
            let mut all = VerificationReport::new("all");
            for s in Suite::NAMED {
                all.absorb(run(s, cfg)?);
            }
            Ok(all)
        }
        Suite::Matrix => matrix_suite(),
        Suite::Desitter => desitter_suite(cfg),
        Suite::Fock => fock_suite(cfg),
        Suite::Jordan => jordan_suite(cfg),
        Suite::Chiral => chiral_suite(cfg),
        Suite::Su11 => su11_suite(cfg),
    }
}

fn flag(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn scaled(op: &FockOperator, s: f64) -> FockOperator {
    op.scale(c64(s, 0.0))
}

/// `[x, y] = Σ cₖ zₖ` compared on the safe window of all operators involved.
fn fock_identity(x: &FockOperator, y: &FockOperator, rhs: &[(C64, &FockOperator)]) -> Result<f64> {
    let mut all = vec![x, y];
    all.extend(rhs.iter().map(|(_, z)| *z));
    let w = FockOperator::window(&all)?;
    bracket_residual(x, y, rhs, &w)
}

pub fn matrix_suite() -> Result<VerificationReport> {
    let mut r = VerificationReport::new("matrix");
    let gens = sp4_generators();
    for c in verify_brackets(&gens)? {
        r.push(c.label, c.residual, EPS_ALG);
    }
    let j = canonical_j(2)?;
    for (l, g) in gens.iter() {
        let want = if l.is_first_set() { Classification::FirstSet } else { Classification::SecondSet };
        r.push(format!("{l} is a {want:?} generator"), flag(is_symplectic_generator(g, &j)? == want), EXACT);
        r.push(format!("{l} is pure imaginary"), g.map(|z| c64(z.re, 0.0)).max_abs(), EPS_ALG);
    }
    let table = gens.structure_constants()?;
    r.push("structure table closes", table.max_residual(), EPS_ALG);
    r.push("structure table antisymmetric", table.antisymmetry_defect(), EPS_ALG);

    let forms = gens.map(|_, g| form_from_field(&LinearField::new(g.clone())?))?;
    for (l, f) in forms.iter() {
        r.push(format!("{l} field -> form -> field"), field_from_form(f).matrix().max_abs_diff(&gens[l]), EPS_ALG);
    }
    let poly_table = forms.structure_constants()?;
    r.push("Poisson table equals commutator table", poly_table.max_deviation_from(&table, c64(1.0, 0.0))?, EPS_ALG);
    let (f1, f2) = oscillator_free_particle_pair();
    r.push("oscillator/free particle: [M_f,M_g] = M_{f,g}", field_bracket_check(&f1, &f2)?, EPS_ALG);
    r.push("oscillator/free particle: [xi_f,xi_g] = -xi_{f,g}", vector_field_isomorphism_residual(&f1, &f2)?, EPS_ALG);
    for (x, &a) in Label::ALL.iter().enumerate() {
        for &b in &Label::ALL[x + 1..] {
            let res = field_bracket_check(&forms[a], &forms[b])?.max(vector_field_isomorphism_residual(&forms[a], &forms[b])?);
            r.push(format!("field bracket of {a},{b} forms"), res, EPS_ALG);
        }
    }
    Ok(r)
}

/// Collapse the 625 instances into one check per ordered first pair `(i, j)`.
fn grouped_desitter<T: GeneratorCarrier>(r: &mut VerificationReport, tag: &str, gens: &GeneratorSet<T>, tol: f64) -> Result<()> {
    let report = verify_desitter(gens, &DeSitterIndexMap::standard())?;
    let mut worst: BTreeMap<(usize, usize), (f64, usize)> = BTreeMap::new();
    for c in &report.checks {
        let e = worst.entry((c.indices[0], c.indices[1])).or_insert((0.0, 0));
        e.0 = e.0.max(c.residual);
        e.1 += 1;
    }
    for ((i, j), (res, count)) in worst {
        r.push(format!("{tag}: [J{i}{j}, Jkl] over {count} (k,l)"), res, tol);
    }
    Ok(())
}

pub fn desitter_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("desitter");
    r.push("index map covers each generator once", flag(DeSitterIndexMap::standard().is_complete()), EXACT);
    grouped_desitter(&mut r, "matrix", &sp4_generators(), EPS_ALG)?;
    let space = FockSpace::new(2, cfg.cutoff)?;
    grouped_desitter(&mut r, &format!("fock N={}", cfg.cutoff), &pipeline_representation(space)?, EPS_FOCK)?;
    Ok(r)
}

/// `{(n₁ + n₂ + 1)/2}` over the truncated two-mode space, sorted.
pub fn expected_h_spectrum(cutoff: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..=cutoff)
        .flat_map(|a| (0..=cutoff).map(move |b| (a + b + 1) as f64 / 2.0))
        .collect();
    v.sort_by(|a, b| a.total_cmp(b));
    v
}

/// Largest distance of any value from the half-integer lattice.
fn half_integer_defect(values: &[f64]) -> f64 {
    values.iter().map(|x| (2.0 * x - (2.0 * x).round()).abs() / 2.0).fold(0.0, f64::max)
}

fn nearest(values: &[f64], target: f64) -> f64 {
    values.iter().map(|x| (x - target).abs()).fold(f64::INFINITY, f64::min)
}

fn spectrum_checks(r: &mut VerificationReport, tag: &str, h: &FockOperator, l3: &FockOperator, cutoff: usize) -> Result<()> {
    let ev = spectrum(h)?;
    let want = expected_h_spectrum(cutoff);
    let dev = ev.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    r.push(format!("{tag}: spectrum(H) = {{(n1+n2+1)/2}}"), if ev.len() == want.len() { dev } else { f64::INFINITY }, EPS_FOCK);
    let groups = multiplicities(&ev, 1e-8);
    r.push(format!("{tag}: min eigenvalue of H is 1/2"), (groups[0].0 - 0.5).abs(), EPS_FOCK);
    r.push(format!("{tag}: min eigenvalue of H is simple"), flag(groups[0].1 == 1), EXACT);
    let lv = spectrum(l3)?;
    r.push(format!("{tag}: spectrum(L3) on the half-integer lattice"), half_integer_defect(&lv), EPS_FOCK);
    r.push(format!("{tag}: spectrum(L3) has an integer value"), nearest(&lv, 1.0), EPS_FOCK);
    r.push(format!("{tag}: spectrum(L3) has a half-integer value"), nearest(&lv, 0.5), EPS_FOCK);
    r.push(format!("{tag}: [H, L3] = 0 exactly"), h.commutator(l3)?.max_abs(), EXACT);
    Ok(())
}

pub fn fock_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("fock");
    let s = FockSpace::new(2, cfg.cutoff)?;
    let one = FockOperator::identity(s);
    let zero = FockOperator::zero(s);
    for i in 1..=2 {
        for j in 1..=2 {
            let want = if i == j { &one } else { &zero };
            let c = safe_commutator(&lower(s, i)?, &raise(s, j)?)?;
            r.push(format!("[a{i}, a{j}+] = {}", if i == j { "1" } else { "0" }), c.deviation(want)?, EPS_FOCK);
            let c = safe_commutator(&quadrature(s, i, QuadratureKind::Q)?, &quadrature(s, j, QuadratureKind::P)?)?;
            let want = if i == j { one.scale(c64(0.0, 1.0)) } else { zero.clone() };
            r.push(format!("[q{i}, p{j}] = {}", if i == j { "i" } else { "0" }), c.deviation(&want)?, EPS_FOCK);
        }
    }
    let d = dirac_representation(s)?;
    let p = pipeline_representation(s)?;
    for l in Label::ALL {
        r.push(format!("pipeline {l} = Dirac {l}"), p[l].max_abs_diff(&d[l])?, EPS_FOCK);
    }
    for (l, op) in d.iter() {
        r.push(format!("{l} hermitian"), op.hermitian_defect(), EPS_FOCK);
        let allowed: &[i32] = if l.is_first_set() { &[0] } else { &[-2, 0, 2] };
        r.push(format!("{l} degree shift"), flag(op.degree_shift().iter().all(|x| allowed.contains(x))), EXACT);
    }
    for c in verify_brackets(&d)? {
        r.push(format!("N={}: {}", cfg.cutoff, c.label), c.residual, EPS_FOCK);
    }
    spectrum_checks(&mut r, &format!("N={}", cfg.cutoff), &d[Label::H], &d[Label::L3], cfg.cutoff)?;
    Ok(r)
}

fn sp2n_cutoff(n: usize, requested: usize) -> Result<usize> {
    let mut c = requested;
    while c > MIN_FOCK_CUTOFF && (c + 1).checked_pow(n as u32).is_none_or(|d| d > SP2N_DIM_BUDGET) {
        c -= 1;
    }
    match (c + 1).checked_pow(n as u32) {
        Some(d) if d <= MAX_DIM => Ok(c),
        _ => Err(Error::arg(format!("n = {n} is too large for the quantized sp(2n) check"))),
    }
}

fn coords_all(ops: &[&FockOperator]) -> Vec<Coords> {
    ops.iter().map(|o| o.coords_on(o.space().cutoff() * o.space().modes())).collect()
}

pub fn jordan_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("jordan");
    let s = FockSpace::new(2, cfg.cutoff)?;
    let d = dirac_representation(s)?;
    let id = ComplexMatrix::identity(2);
    for i in 1..=3 {
        r.push(format!("bilinear(sigma{i}) = L{i}"), jordan_bilinear(&pauli(i)?, s)?.max_abs_diff(&d[Label::l(i)])?, EPS_FOCK);
    }
    let w = |m: &ComplexMatrix| jordan_plus(m, s);
    let z = |m: &ComplexMatrix| jordan_minus(m, s);
    r.push("W(sigma1) = K3", w(&pauli(1)?)?.max_abs_diff(&d[Label::K3])?, EPS_FOCK);
    r.push("W(sigma2) = 0", w(&pauli(2)?)?.max_abs(), EXACT);
    r.push("W(sigma3) = -K1", w(&pauli(3)?)?.max_abs_diff(&scaled(&d[Label::K1], -1.0))?, EPS_FOCK);
    r.push("Z(sigma1) = B3", z(&pauli(1)?)?.max_abs_diff(&d[Label::B3])?, EPS_FOCK);
    r.push("Z(sigma2) = 0", z(&pauli(2)?)?.max_abs(), EXACT);
    r.push("Z(sigma3) = -B1", z(&pauli(3)?)?.max_abs_diff(&scaled(&d[Label::B1], -1.0))?, EPS_FOCK);
    r.push("W(I) = -B2", w(&id)?.max_abs_diff(&scaled(&d[Label::B2], -1.0))?, EPS_FOCK);
    r.push("Z(I) = K2", z(&id)?.max_abs_diff(&d[Label::K2])?, EPS_FOCK);
    r.push("(1/4) sum (a+a + aa+) = H", symmetric_number(s)?.max_abs_diff(&d[Label::H])?, EPS_FOCK);
    let assembled = assemble_dirac_via_jordan(s)?;
    for l in Label::ALL {
        r.push(format!("assembled {l} = Dirac {l}"), assembled[l].max_abs_diff(&d[l])?, EPS_FOCK);
    }
    let paulis = [pauli(1)?, pauli(2)?, pauli(3)?];
    let pj = jordan_algebra_check(&paulis, s)?;
    r.push("Pauli images close with half the matrix constants", pj.max_residual(), EPS_FOCK);

    // four modes
    let n4 = cfg.cutoff.min(6);
    let s4 = FockSpace::new(4, n4)?;
    let gens = sp4_generators();
    let l1 = jordan_bilinear(&gens[Label::L1], s4)?;
    let hop = |i, j| -> Result<FockOperator> { raise(s4, i)?.try_mul(&lower(s4, j)?) };
    let want = hop(1, 4)?.try_add(&hop(2, 3)?)?.try_sub(&hop(3, 2)?)?.try_sub(&hop(4, 1)?)?.scale(c64(0.0, 0.25));
    r.push(format!("4 modes N={n4}: bilinear(L1) = (i/4)(a1+a4 + a2+a3 - a3+a2 - a4+a1)"), l1.max_abs_diff(&want)?, EPS_FOCK);
    let labels = Label::names();
    let four = crate::jordan::jordan_algebra_check_labeled(&labels, gens.elements(), s4)?;
    r.push(format!("4 modes N={n4}: ten images close with half the matrix constants"), four.max_residual(), EPS_FOCK);
    let rescaled = four_mode_representation(s4)?;
    let worst = verify_brackets(&rescaled)?.iter().map(|c| c.residual).fold(0.0, f64::max);
    r.push(format!("4 modes N={n4}: a+Ga satisfy all 45 commutators"), worst, EPS_FOCK);
    let ds = verify_desitter(&rescaled, &DeSitterIndexMap::standard())?;
    r.push(format!("4 modes N={n4}: a+Ga satisfy all 625 de Sitter instances"), ds.max_residual(), EPS_FOCK);

    sp2n_checks(&mut r, cfg)?;
    Ok(r)
}

fn sp2n_checks(r: &mut VerificationReport, cfg: &SuiteConfig) -> Result<()> {
    let n = cfg.n;
    let basis = sp2n_basis(n)?;
    let expected = 2 * n * n + n;
    r.push(format!("sp({}) basis has {expected} elements", 2 * n), (basis.len() as f64 - expected as f64).abs(), EXACT);
    let j = canonical_j(n)?;
    let mut misfit = 0usize;
    for (k, g) in basis.iter().enumerate() {
        let want = if k < n * n { Classification::FirstSet } else { Classification::SecondSet };
        if is_symplectic_generator(g, &j)? != want || !g.is_pure_imaginary(0.0) {
            misfit += 1;
        }
    }
    r.push(format!("sp({}) basis classified as {} + {}", 2 * n, n * n, n * n + n), misfit as f64, EXACT);
    let labels: Vec<String> = (1..=basis.len()).map(|i| format!("G{i}")).collect();
    let table = structure_constants(&labels, &basis.iter().collect::<Vec<_>>())?;
    r.push(format!("sp({}) basis closes", 2 * n), table.max_residual(), EPS_ALG);

    let cutoff = sp2n_cutoff(n, cfg.cutoff)?;
    let space = FockSpace::new(n, cutoff)?;
    let ops = minimal_representation(n, space)?;
    let worst_herm = ops.iter().map(|o| o.hermitian_defect()).fold(0.0, f64::max);
    r.push(format!("{n} modes N={cutoff}: quantized basis hermitian"), worst_herm, EPS_FOCK);
    r.push(
        format!("{n} modes N={cutoff}: {expected} quantized operators independent"),
        (expected as f64 - operator_rank(&ops) as f64).abs(),
        EXACT,
    );
    let refs: Vec<&FockOperator> = ops.iter().collect();
    let qt = structure_constants(&labels, &refs)?;
    r.push(format!("{n} modes N={cutoff}: quantized basis closes on the safe window"), qt.max_residual(), EPS_FOCK);
    r.push(format!("{n} modes N={cutoff}: quantized constants equal matrix constants"), qt.max_deviation_from(&table, c64(1.0, 0.0))?, EPS_FOCK);

    let reference: Option<(&str, Vec<FockOperator>)> = match n {
        1 => Some(("S1, S2, S3", su11_operators(space, 1)?.to_vec())),
        2 => Some(("Dirac's ten", dirac_representation(space)?.elements().to_vec())),
        _ => None,
    };
    if let Some((name, target)) = reference {
        let (_, fwd) = align_spans(&coords_all(&refs), &coords_all(&target.iter().collect::<Vec<_>>()))?;
        let (_, back) = align_spans(&coords_all(&target.iter().collect::<Vec<_>>()), &coords_all(&refs))?;
        r.push(format!("{n} modes: quantized basis spans {name}"), fwd.max(back), EPS_ALIGN);
    }
    Ok(())
}

pub fn chiral_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("chiral");
    let plus = ChiralOscillator::new(Chirality::Plus);
    let minus = ChiralOscillator::new(Chirality::Minus);
    r.push("{q1,q2} = -1 for chirality +", (chiral_bracket(&plus, 1, 2)? + 1.0).abs(), EXACT);
    r.push("{q1,q2} = +1 for chirality -", (chiral_bracket(&minus, 1, 2)? - 1.0).abs(), EXACT);
    r.push("{q1,q1} = 0", chiral_bracket(&plus, 1, 1)?.abs(), EXACT);
    for c in [plus, minus] {
        let (q, p) = c.canonical_pair();
        r.push(format!("{:?}: canonical pair (q{q}, q{p}) has unit bracket", c.chirality), (chiral_bracket(&c, q, p)? - 1.0).abs(), EXACT);
    }
    let h = plus.hamiltonian();
    r.push("J+ = +H", chiral_angular_momentum(&plus).matrix().max_abs_diff(h.matrix()), EPS_ALG);
    r.push("J- = -H", chiral_angular_momentum(&minus).matrix().max_abs_diff(&h.matrix().scale(c64(-1.0, 0.0))), EPS_ALG);
    let sum: QuadraticForm = chiral_angular_momentum(&plus).try_add(&chiral_angular_momentum(&minus))?;
    r.push("J+ + J- = 0", sum.matrix().max_abs(), EXACT);

    let dec = decoupling_check()?;
    for c in dec.checks {
        r.push(c.label, c.residual, EPS_ALG);
    }
    r.push("change of variables has determinant -2 per pair", (dec.pair_determinant + 2.0).abs(), EPS_ALG);

    let s = FockSpace::new(2, cfg.cutoff)?;
    let (hop, jop) = compose_chiral_pair(s)?;
    let d = dirac_representation(s)?;
    r.push("(H+ + H-)/2 = H", hop.max_abs_diff(&d[Label::H])?, EPS_FOCK);
    r.push("(J+ + J-)/2 = L3", jop.max_abs_diff(&d[Label::L3])?, EPS_FOCK);
    spectrum_checks(&mut r, &format!("chiral N={}", cfg.cutoff), &hop, &jop, cfg.cutoff)?;
    Ok(r)
}

pub fn su11_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("su11");
    let [s1, s2, s3] = su11_matrices();
    let i = c64(0.0, 1.0);
    r.push("[S1,S2] = iS3", commutator(&s1, &s2)?.max_abs_diff(&s3.scale(i)), EPS_ALG);
    r.push("[S2,S3] = iS1", commutator(&s2, &s3)?.max_abs_diff(&s1.scale(i)), EPS_ALG);
    r.push("[S3,S1] = -iS2", commutator(&s3, &s1)?.max_abs_diff(&s2.scale(-i)), EPS_ALG);
    r.push("S2 = (i/2) J", s2.max_abs_diff(&canonical_j(1)?.scale(c64(0.0, 0.5))), EXACT);

    let s = FockSpace::new(2, cfg.cutoff)?;
    for mode in 1..=2 {
        let ops = su11_operators(s, mode)?;
        let want = su11_reference(s, mode)?;
        for (k, name) in ["(i/4)(a+^2 - a^2)", "(1/4)(a+a + aa+)", "-(1/4)(a+^2 + a^2)"].iter().enumerate() {
            r.push(format!("mode {mode}: S{} = {name}", k + 1), ops[k].max_abs_diff(&want[k])?, EPS_FOCK);
        }
        let [a, b, c] = &ops;
        r.push(format!("mode {mode}: [S1,S2] = iS3"), fock_identity(a, b, &[(i, c)])?, EPS_FOCK);
        r.push(format!("mode {mode}: [S2,S3] = iS1"), fock_identity(b, c, &[(i, a)])?, EPS_FOCK);
        r.push(format!("mode {mode}: [S3,S1] = -iS2"), fock_identity(c, a, &[(-i, b)])?, EPS_FOCK);
    }
    let h = su11_operators(s, 1)?[1].try_add(&su11_operators(s, 2)?[1])?;
    let d = dirac_representation(s)?;
    r.push("S2(mode 1) + S2(mode 2) = H", h.max_abs_diff(&d[Label::H])?, EPS_FOCK);
    for c in su11_triples_check(&sp4_generators())? {
        r.push(format!("matrix: {}", c.label), c.residual, EPS_ALG);
    }
    for c in su11_triples_check(&d)? {
        r.push(format!("fock N={}: {}", cfg.cutoff, c.label), c.residual, EPS_FOCK);
    }
    Ok(r)
}
