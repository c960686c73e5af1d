//! The ten labelled so(3,2) generators, carried by matrices, polynomials or
//! Fock operators.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{structure_constants, LieCarrier, StructureTable};
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    L1,
    L2,
    L3,
    H,
    K1,
    K2,
    K3,
    B1,
    B2,
    B3,
}

impl Label {
    pub const ALL: [Label; 10] = [
        Label::L1,
        Label::L2,
        Label::L3,
        Label::H,
        Label::K1,
        Label::K2,
        Label::K3,
        Label::B1,
        Label::B2,
        Label::B3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Label::L1 => "L1",
            Label::L2 => "L2",
            Label::L3 => "L3",
            Label::H => "H",
            Label::K1 => "K1",
            Label::K2 => "K2",
            Label::K3 => "K3",
            Label::B1 => "B1",
            Label::B2 => "B2",
            Label::B3 => "B3",
        }
    }

    pub fn index(self) -> usize {
        Label::ALL.iter().position(|&l| l == self).unwrap()
    }

    /// Compact rotations `L₁, L₂, L₃, H`; the rest are hyperbolic.
    pub fn is_first_set(self) -> bool {
        matches!(self, Label::L1 | Label::L2 | Label::L3 | Label::H)
    }

    /// `Lᵢ` for `i ∈ {1,2,3}`.
    pub fn l(i: usize) -> Label {
        [Label::L1, Label::L2, Label::L3][i - 1]
    }

    pub fn k(i: usize) -> Label {
        [Label::K1, Label::K2, Label::K3][i - 1]
    }

    pub fn b(i: usize) -> Label {
        [Label::B1, Label::B2, Label::B3][i - 1]
    }

    pub fn names() -> Vec<String> {
        Label::ALL.iter().map(|l| l.name().to_string()).collect()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::ALL
            .iter()
            .copied()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::arg(format!("unknown generator label {s:?}")))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Carrier {
    Matrix,
    Polynomial,
    FockOperator,
}

/// A carrier type that can hold a generator set.
pub trait GeneratorCarrier: LieCarrier {
    const KIND: Carrier;

    /// Whether the elements can share one set (same dimension or space).
    fn compatible(elements: &[&Self]) -> Result<()> {
        Self::window(elements).map(|_| ())
    }
}

impl GeneratorCarrier for crate::ComplexMatrix {
    const KIND: Carrier = Carrier::Matrix;
}

/// Exactly ten generators, all in the same carrier and of the same size.
#[derive(Clone, Debug)]
pub struct GeneratorSet<T> {
    elements: Vec<T>,
}

impl<T: GeneratorCarrier> GeneratorSet<T> {
    /// `elements` in [`Label::ALL`] order.
    pub fn new(elements: Vec<T>) -> Result<Self> {
        if elements.len() != 10 {
            return Err(Error::DimensionMismatch { expected: 10, found: elements.len() });
        }
        let refs: Vec<&T> = elements.iter().collect();
        T::compatible(&refs)?;
        Ok(Self { elements })
    }

    pub fn try_from_fn(mut f: impl FnMut(Label) -> Result<T>) -> Result<Self> {
        let elements = Label::ALL.iter().map(|&l| f(l)).collect::<Result<Vec<_>>>()?;
        Self::new(elements)
    }

    pub fn carrier(&self) -> Carrier {
        T::KIND
    }

    pub fn get(&self, label: Label) -> &T {
        &self.elements[label.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, &T)> {
        Label::ALL.iter().copied().zip(self.elements.iter())
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn map<U: GeneratorCarrier>(&self, mut f: impl FnMut(Label, &T) -> Result<U>) -> Result<GeneratorSet<U>> {
        GeneratorSet::try_from_fn(|l| f(l, self.get(l)))
    }

    /// Structure constants of the set in its own basis.
    pub fn structure_constants(&self) -> Result<StructureTable> {
        let refs: Vec<&T> = self.elements.iter().collect();
        structure_constants(&Label::names(), &refs)
    }
}

impl<T: GeneratorCarrier> Index<Label> for GeneratorSet<T> {
    type Output = T;

    fn index(&self, label: Label) -> &T {
        self.get(label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_partition() {
        let first: Vec<_> = Label::ALL.iter().filter(|l| l.is_first_set()).collect();
        assert_eq!(first, [&Label::L1, &Label::L2, &Label::L3, &Label::H]);
        assert_eq!(Label::ALL.iter().filter(|l| !l.is_first_set()).count(), 6);
    }

    #[test]
    fn labels_parse_case_insensitively() {
        assert_eq!("k2".parse::<Label>().unwrap(), Label::K2);
        assert_eq!("H".parse::<Label>().unwrap(), Label::H);
        assert!("J".parse::<Label>().is_err());
        assert_eq!(Label::b(3), Label::B3);
    }

    #[test]
    fn set_requires_ten_elements() {
        let m = crate::ComplexMatrix::identity(2);
        assert!(GeneratorSet::new(vec![m.clone(); 9]).is_err());
        let mixed = (0..10)
            .map(|i| crate::ComplexMatrix::identity(if i == 3 { 3 } else { 2 }))
            .collect();
        assert!(GeneratorSet::new(mixed).is_err());
    }
}
