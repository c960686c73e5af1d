//! Sp(4) generators as 4×4 matrices and the so(3,2) algebra they close.
//!
//! Phase-space ordering is `(q₁, …, qₙ, p₁, …, pₙ)` throughout, so the
//! canonical form is `J = [[0, I], [−I, 0]]`.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{bracket_residual, combination_norm, Coords, IdentityCheck};
use crate::error::{Error, Result};
use crate::generators::{GeneratorCarrier, GeneratorSet, Label};
use crate::tolerance::EPS_ALG;
use crate::{c64, ComplexMatrix, C64};

const ZERO: C64 = c64(0.0, 0.0);
const ONE: C64 = c64(1.0, 0.0);
const I: C64 = c64(0.0, 1.0);

/// Pauli matrix `σ₁`, `σ₂` or `σ₃`.
pub fn pauli(index: usize) -> Result<ComplexMatrix> {
    Ok(match index {
        1 => ComplexMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]]),
        2 => ComplexMatrix::from_rows([[ZERO, -I], [I, ZERO]]),
        3 => ComplexMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]]),
        _ => return Err(Error::arg(format!("Pauli index must be 1, 2 or 3, got {index}"))),
    })
}

/// `ε_{ijk}` with 1-based indices.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

/// `J = [[0, I], [−I, 0]]` of size `2n`.
pub fn canonical_j(n_pairs: usize) -> Result<ComplexMatrix> {
    if n_pairs == 0 {
        return Err(Error::arg("canonical form needs at least one canonical pair"));
    }
    let n = n_pairs;
    Ok(ComplexMatrix::from_fn(2 * n, |r, c| {
        if r < n && c == r + n {
            ONE
        } else if r >= n && c + n == r {
            -ONE
        } else {
            ZERO
        }
    }))
}

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.check_dim(b)?;
    Ok(&(a * b) - &(b * a))
}

pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.check_dim(b)?;
    Ok(&(a * b) + &(b * a))
}

/// The ten Sp(4) generators assembled from Pauli and identity blocks.
///
/// `B₁` is `−(i/2)·diag(σ₃, −σ₃)`. Without the factor `i` it would be real,
/// unlike the other nine, and eleven of the 45 brackets would fail to close.
pub fn sp4_generators() -> GeneratorSet<ComplexMatrix> {
    let s = |k| pauli(k).expect("valid Pauli index");
    let id = ComplexMatrix::identity(2);
    let z = ComplexMatrix::zeros(2);
    let blocks = |a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix, d: &ComplexMatrix| {
        ComplexMatrix::from_blocks(a, b, c, d).expect("2x2 blocks")
    };
    let half_i = c64(0.0, 0.5);
    let half = c64(0.5, 0.0);
    let (s1, s2, s3) = (s(1), s(2), s(3));

    GeneratorSet::try_from_fn(|label| {
        Ok(match label {
            Label::L1 => blocks(&z, &s1, &-&s1, &z).scale(half_i),
            Label::L2 => blocks(&s2, &z, &z, &s2).scale(half),
            Label::L3 => blocks(&z, &s3, &-&s3, &z).scale(half_i),
            Label::H => blocks(&z, &id, &-&id, &z).scale(half_i),
            Label::K1 => blocks(&z, &s3, &s3, &z).scale(half_i),
            Label::K2 => blocks(&id, &z, &z, &-&id).scale(half_i),
            Label::K3 => blocks(&z, &s1, &s1, &z).scale(-half_i),
            Label::B1 => blocks(&s3, &z, &z, &-&s3).scale(-half_i),
            Label::B2 => blocks(&z, &id, &id, &z).scale(half_i),
            Label::B3 => blocks(&s1, &z, &z, &-&s1).scale(half_i),
        })
    })
    .expect("ten 4x4 matrices")
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// Antisymmetric and commutes with `J`.
    FirstSet,
    /// Symmetric and anticommutes with `J`.
    SecondSet,
    NotGenerator,
}

/// Classify `g` against the canonical form `j`.
///
/// Besides the (anti)symmetry / (anti)commutation test, the real matrix
/// `M = −i·g` must satisfy `MᵀJ + JM = 0`.
pub fn is_symplectic_generator(g: &ComplexMatrix, j: &ComplexMatrix) -> Result<Classification> {
    g.check_dim(j)?;
    let m = g.scale(-I);
    let infinitesimal = (&(&m.transpose() * j) + &(j * &m)).max_abs() < EPS_ALG;
    if !infinitesimal {
        return Ok(Classification::NotGenerator);
    }
    let commutes = commutator(g, j)?.max_abs() < EPS_ALG;
    let anticommutes = anticommutator(g, j)?.max_abs() < EPS_ALG;
    Ok(if g.is_antisymmetric(EPS_ALG) && commutes {
        Classification::FirstSet
    } else if g.is_symmetric(EPS_ALG) && anticommutes {
        Classification::SecondSet
    } else {
        Classification::NotGenerator
    })
}

/// Signature `(+, +, +, −, −)`.
pub const DESITTER_ETA: [f64; 5] = [1.0, 1.0, 1.0, -1.0, -1.0];

/// Which signed generator plays `J_{ij}` (1-based, `1 ≤ i, j ≤ 5`).
#[derive(Clone, Debug)]
pub struct DeSitterIndexMap {
    pub eta: [f64; 5],
    map: HashMap<(usize, usize), (f64, Label)>,
}

impl DeSitterIndexMap {
    /// `J_{ij} = ε_{ijk} L_k`, `J_{i4} = K_i`, `J_{i5} = B_i`, `J_{45} = H`.
    pub fn standard() -> Self {
        let mut map = HashMap::new();
        for i in 1..=3 {
            for j in i + 1..=3 {
                let k = 6 - i - j;
                map.insert((i, j), (levi_civita(i, j, k), Label::l(k)));
            }
            map.insert((i, 4), (1.0, Label::k(i)));
            map.insert((i, 5), (1.0, Label::b(i)));
        }
        map.insert((4, 5), (1.0, Label::H));
        Self { eta: DESITTER_ETA, map }
    }

    /// `J_{ij}` as a signed label, `None` when `i == j`.
    pub fn entry(&self, i: usize, j: usize) -> Option<(f64, Label)> {
        if i < j {
            self.map.get(&(i, j)).copied()
        } else if i > j {
            self.map.get(&(j, i)).map(|&(s, l)| (-s, l))
        } else {
            None
        }
    }

    /// Every unordered pair is covered exactly once.
    pub fn is_complete(&self) -> bool {
        let mut seen: Vec<Label> = self.map.values().map(|&(_, l)| l).collect();
        seen.sort();
        seen.dedup();
        self.map.len() == 10 && seen.len() == 10 && self.map.keys().all(|&(i, j)| i < j && j <= 5)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeSitterCheck {
    pub indices: [usize; 4],
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeSitterReport {
    pub checks: Vec<DeSitterCheck>,
}

impl DeSitterReport {
    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn failures(&self, tol: f64) -> Vec<&DeSitterCheck> {
        self.checks.iter().filter(|c| c.residual >= tol).collect()
    }
}

/// Check `[J_ij, J_kl] = i(J_ik η_jl − J_il η_jk + J_jl η_ik − J_jk η_il)` for
/// all `(i, j, k, l) ∈ {1..5}⁴`.
pub fn verify_desitter<T: GeneratorCarrier>(
    gens: &GeneratorSet<T>,
    idx: &DeSitterIndexMap,
) -> Result<DeSitterReport> {
    let refs: Vec<&T> = gens.elements().iter().collect();
    let window = T::window(&refs)?;
    let coords: Vec<Coords> = gens.elements().iter().map(|g| g.coords(&window)).collect();
    let mut brackets: HashMap<(Label, Label), Coords> = HashMap::new();
    let eta = |a: usize, b: usize| if a == b { idx.eta[a - 1] } else { 0.0 };

    let mut checks = Vec::with_capacity(625);
    for i in 1..=5 {
        for j in 1..=5 {
            for k in 1..=5 {
                for l in 1..=5 {
                    let mut terms: Vec<(C64, Coords)> = Vec::new();
                    if let (Some((s1, a)), Some((s2, b))) = (idx.entry(i, j), idx.entry(k, l)) {
                        let br = match brackets.get(&(a, b)) {
                            Some(c) => c.clone(),
                            None => {
                                let c = gens[a].bracket(&gens[b])?.coords(&window);
                                brackets.insert((a, b), c.clone());
                                c
                            }
                        };
                        terms.push((c64(s1 * s2, 0.0), br));
                    }
                    for (p, q, e) in [
                        (i, k, eta(j, l)),
                        (i, l, -eta(j, k)),
                        (j, l, eta(i, k)),
                        (j, k, -eta(i, l)),
                    ] {
                        if e == 0.0 {
                            continue;
                        }
                        if let Some((s, lab)) = idx.entry(p, q) {
                            terms.push((c64(0.0, -s * e), coords[lab.index()].clone()));
                        }
                    }
                    let refs: Vec<(C64, &Coords)> = terms.iter().map(|(c, v)| (*c, v)).collect();
                    checks.push(DeSitterCheck { indices: [i, j, k, l], residual: combination_norm(&refs) });
                }
            }
        }
    }
    Ok(DeSitterReport { checks })
}

/// `(X, Y, [(c, Z)])` meaning `[X,Y] = Σ c·Z`.
pub type BracketRule = (Label, Label, Vec<(C64, Label)>);

/// The 45 brackets `[a, b]` (`a` before `b` in [`Label::ALL`]) written out
/// by hand: `[Lᵢ,Lⱼ] = iεLₖ`, `[Lᵢ,H] = 0`, `[Lᵢ,Kⱼ] = iεKₖ`, `[Lᵢ,Bⱼ] = iεBₖ`,
/// `[Kᵢ,Kⱼ] = [Bᵢ,Bⱼ] = −iεLₖ`, `[Kᵢ,H] = iBᵢ`, `[Bᵢ,H] = −iKᵢ`,
/// `[Kᵢ,Bⱼ] = iδᵢⱼH`.
pub fn expected_brackets() -> Vec<BracketRule> {
    use Label::*;
    let family = |l: Label| -> Option<(char, usize)> {
        match l {
            L1 | L2 | L3 => Some(('L', l.index() + 1)),
            K1 | K2 | K3 => Some(('K', l.index() - 3)),
            B1 | B2 | B3 => Some(('B', l.index() - 6)),
            H => None,
        }
    };
    let of = |f: char, k: usize| match f {
        'L' => Label::l(k),
        'K' => Label::k(k),
        _ => Label::b(k),
    };
    let eps = |i: usize, j: usize, f: char, s: f64| -> Vec<(C64, Label)> {
        if i == j {
            return vec![];
        }
        let k = 6 - i - j;
        vec![(c64(0.0, s * levi_civita(i, j, k)), of(f, k))]
    };
    let mut out = Vec::with_capacity(45);
    for (x, &a) in Label::ALL.iter().enumerate() {
        for &b in &Label::ALL[x + 1..] {
            let rhs = match (family(a), family(b)) {
                (Some(('L', i)), Some(('L', j))) => eps(i, j, 'L', 1.0),
                (Some(('L', _)), None) => vec![],
                (Some(('L', i)), Some((f, j))) => eps(i, j, f, 1.0),
                (None, Some(('K', i))) => vec![(c64(0.0, -1.0), Label::b(i))],
                (None, Some(('B', i))) => vec![(c64(0.0, 1.0), Label::k(i))],
                (Some(('K', i)), Some(('K', j))) | (Some(('B', i)), Some(('B', j))) => eps(i, j, 'L', -1.0),
                (Some(('K', i)), Some(('B', j))) => {
                    if i == j { vec![(c64(0.0, 1.0), H)] } else { vec![] }
                }
                _ => unreachable!("label order puts L, H, K, B in sequence"),
            };
            out.push((a, b, rhs));
        }
    }
    out
}

/// Residual of every bracket in [`expected_brackets`].
pub fn verify_brackets<T: GeneratorCarrier>(gens: &GeneratorSet<T>) -> Result<Vec<IdentityCheck>> {
    let refs: Vec<&T> = gens.elements().iter().collect();
    let window = T::window(&refs)?;
    expected_brackets()
        .into_iter()
        .map(|(a, b, rhs)| {
            let terms: Vec<(C64, &T)> = rhs.iter().map(|&(c, l)| (c, &gens[l])).collect();
            let label = format!("[{a},{b}] = {}", describe(&rhs));
            Ok(IdentityCheck { label, residual: bracket_residual(&gens[a], &gens[b], &terms, &window)? })
        })
        .collect()
}

fn describe(rhs: &[(C64, Label)]) -> String {
    if rhs.is_empty() {
        return "0".to_string();
    }
    rhs.iter()
        .map(|(c, l)| match crate::matrix::format_complex(*c).as_str() {
            "1" => l.to_string(),
            "-1" => format!("-{l}"),
            s => format!("{s}{l}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &ComplexMatrix, b: &ComplexMatrix) -> bool {
        a.max_abs_diff(b) < EPS_ALG
    }

    #[test]
    fn pauli_convention_and_brackets() {
        assert_eq!(pauli(1).unwrap(), ComplexMatrix::from_real_rows([[0.0, 1.0], [1.0, 0.0]]));
        assert!(pauli(0).is_err() && pauli(4).is_err());
        for i in 1..=3 {
            let si = pauli(i).unwrap();
            assert_eq!(&si * &si, ComplexMatrix::identity(2));
            for j in 1..=3 {
                let mut rhs = ComplexMatrix::zeros(2);
                for k in 1..=3 {
                    rhs = &rhs + &pauli(k).unwrap().scale(c64(0.0, 2.0 * levi_civita(i, j, k)));
                }
                // integer entries: exact
                assert_eq!(commutator(&si, &pauli(j).unwrap()).unwrap(), rhs);
            }
        }
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_j(1).unwrap(), ComplexMatrix::from_real_rows([[0.0, 1.0], [-1.0, 0.0]]));
        let j2 = canonical_j(2).unwrap();
        assert_eq!(
            j2,
            ComplexMatrix::from_real_rows([
                [0.0, 0.0, 1.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
                [-1.0, 0.0, 0.0, 0.0],
                [0.0, -1.0, 0.0, 0.0],
            ])
        );
        assert_eq!(&j2 * &j2, -&ComplexMatrix::identity(4));
        assert!(canonical_j(0).is_err());
    }

    #[test]
    fn printed_generators() {
        let g = sp4_generators();
        let h = 0.5;
        let l1 = ComplexMatrix::from_real_rows([
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
        ])
        .scale(c64(0.0, h));
        assert!(close(&g[Label::L1], &l1));
        let k2 = ComplexMatrix::from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ])
        .scale(c64(0.0, h));
        assert!(close(&g[Label::K2], &k2));
        let b2 = ComplexMatrix::from_real_rows([
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ])
        .scale(c64(0.0, h));
        assert!(close(&g[Label::B2], &b2));
    }

    #[test]
    fn all_generators_pure_imaginary() {
        for (label, m) in sp4_generators().iter() {
            assert!(m.is_pure_imaginary(0.0), "{label} has a real part");
        }
    }

    #[test]
    fn classification_partition() {
        let j = canonical_j(2).unwrap();
        for (label, g) in sp4_generators().iter() {
            let want = if label.is_first_set() { Classification::FirstSet } else { Classification::SecondSet };
            assert_eq!(is_symplectic_generator(g, &j).unwrap(), want, "{label}");
        }
        assert_eq!(
            is_symplectic_generator(&ComplexMatrix::identity(4), &j).unwrap(),
            Classification::NotGenerator
        );
        assert!(is_symplectic_generator(&ComplexMatrix::identity(2), &j).is_err());
    }

    #[test]
    fn worked_brackets() {
        let g = sp4_generators();
        let a = sp4_generators()[Label::K1].clone();
        assert!(commutator(&a, &a).unwrap().is_zero());
        let l1l2 = commutator(&g[Label::L1], &g[Label::L2]).unwrap();
        assert!(close(&l1l2, &g[Label::L3].scale(I)));
        let k1b1 = commutator(&g[Label::K1], &g[Label::B1]).unwrap();
        assert!(close(&k1b1, &g[Label::H].scale(I)));
        assert!(commutator(&g[Label::L1], &ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn hand_written_table_holds() {
        let table = expected_brackets();
        assert_eq!(table.len(), 45);
        let checks = verify_brackets(&sp4_generators()).unwrap();
        for c in &checks {
            assert!(c.residual < EPS_ALG, "{}: {:e}", c.label, c.residual);
        }
        assert_eq!(checks[0].label, "[L1,L2] = iL3");
        assert!(checks.iter().any(|c| c.label == "[H,K1] = -iB1"));
        assert!(checks.iter().any(|c| c.label == "[K1,B2] = 0"));
    }

    #[test]
    fn structure_table_samples() {
        let t = sp4_generators().structure_constants().unwrap();
        assert!(t.closes(EPS_ALG));
        assert!(t.antisymmetry_defect() == 0.0);
        let (l1, h) = (Label::L1.index(), Label::H.index());
        assert!(t.bracket(l1, h).iter().all(|z| z.norm() < EPS_ALG));
        let c = t.get(Label::K1.index(), Label::K2.index(), Label::L3.index());
        assert!((c - c64(0.0, -1.0)).norm() < EPS_ALG);
    }

    #[test]
    fn index_map_is_complete_and_antisymmetric() {
        let idx = DeSitterIndexMap::standard();
        assert!(idx.is_complete());
        assert_eq!(idx.entry(1, 3), Some((-1.0, Label::L2)));
        assert_eq!(idx.entry(3, 1), Some((1.0, Label::L2)));
        assert_eq!(idx.entry(5, 4), Some((-1.0, Label::H)));
        assert_eq!(idx.entry(2, 2), None);
    }

    #[test]
    fn desitter_hand_expansions() {
        let g = sp4_generators();
        // [J12, J45] = [L3, H] = 0: every η factor couples disjoint indices.
        assert!(commutator(&g[Label::L3], &g[Label::H]).unwrap().max_abs() < EPS_ALG);
        // (1,4,1,5): i(J11 η45 − J15 η41 + J45 η11 − J41 η15) = i·J45 = iH
        let lhs = commutator(&g[Label::K1], &g[Label::B1]).unwrap();
        assert!(close(&lhs, &g[Label::H].scale(I)));
        let report = verify_desitter(&g, &DeSitterIndexMap::standard()).unwrap();
        assert_eq!(report.checks.len(), 625);
        assert!(report.max_residual() < EPS_ALG);
    }

    #[test]
    fn desitter_failure_names_indices() {
        let g = sp4_generators();
        let broken = GeneratorSet::try_from_fn(|l| {
            Ok(if l == Label::H { g[l].scale(c64(-1.0, 0.0)) } else { g[l].clone() })
        })
        .unwrap();
        let report = verify_desitter(&broken, &DeSitterIndexMap::standard()).unwrap();
        let bad = report.failures(EPS_ALG);
        assert!(!bad.is_empty());
        assert!(bad.iter().any(|c| c.indices == [1, 4, 1, 5]));
    }
}
