//! Uniform dispatch over the implemented formulas, used by the command line
//! front end and the q-dimension code.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::deligne::{deligne_numerator, deligne_sum};
use super::sl::{half_lattice_sum, level_minus_one_weight, two_term_sum, weyl_kac, weyl_kac_sum};
use super::sp::{parity_sum, restricted_sum, sp_character, SpParityVariant, SpVariant};
use super::Side;
use crate::error::{Error, Result};
use crate::lie::{RootSystem, RootType};
use crate::linalg::Q;
use crate::series::{
    divide_by_denominator, multiply_by_denominator, AffineWeight, ExpSeries, LatticeSum,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    /// Integrable modules, any type; needs labels.
    WeylKac,
    /// `A_{n-1}`, `-(1+s) Lambda_0 + s Lambda_1`, `n >= 3`.
    SlHalfFirst,
    /// `A_{n-1}`, `-(1+s) Lambda_0 + s Lambda_{n-1}`, `n >= 3`.
    SlHalfLast,
    /// `A_1`, `-(1+s) Lambda_0 + s Lambda_1`.
    Sl2TwoTerm,
    /// `C_{n'}`, `-(1+s) Lambda_0 + s Lambda_1`, `s >= 1`.
    SpLambda1,
    /// `C_{n'}`, `-Lambda_0`, as a half sum with the long root product.
    SpVacuum,
    /// `C_{n'}`, `-2 Lambda_0 + Lambda_2`, as a half difference.
    SpLambda2,
    /// `C_{n'}`, `-Lambda_0`, parity-restricted lattice sum.
    SpParityVacuum,
    /// `C_{n'}`, `-2 Lambda_0 + Lambda_2`, parity-restricted lattice sum.
    SpParityLambda2,
    /// Simply laced, negative level, stabilizer generated by one reflection;
    /// needs labels.
    Deligne,
}

impl FormulaId {
    pub const ALL: [FormulaId; 10] = [
        FormulaId::WeylKac,
        FormulaId::SlHalfFirst,
        FormulaId::SlHalfLast,
        FormulaId::Sl2TwoTerm,
        FormulaId::SpLambda1,
        FormulaId::SpVacuum,
        FormulaId::SpLambda2,
        FormulaId::SpParityVacuum,
        FormulaId::SpParityLambda2,
        FormulaId::Deligne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::WeylKac => "weyl-kac",
            FormulaId::SlHalfFirst => "sl-half-first",
            FormulaId::SlHalfLast => "sl-half-last",
            FormulaId::Sl2TwoTerm => "sl2-two-term",
            FormulaId::SpLambda1 => "sp-lambda1",
            FormulaId::SpVacuum => "sp-vacuum",
            FormulaId::SpLambda2 => "sp-lambda2",
            FormulaId::SpParityVacuum => "sp-parity-vacuum",
            FormulaId::SpParityLambda2 => "sp-parity-lambda2",
            FormulaId::Deligne => "deligne",
        }
    }

    fn needs_labels(self) -> bool {
        matches!(self, FormulaId::WeylKac | FormulaId::Deligne)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = FormulaId::ALL.iter().map(|f| f.name()).collect();
                Error::Parse(format!(
                    "unknown formula '{s}', expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// A fully specified character computation.
#[derive(Clone, Debug)]
pub struct CharacterRequest {
    pub formula: FormulaId,
    pub kind: RootType,
    pub rank: usize,
    /// The parameter `s` of the families that have one.
    pub s: u32,
    /// Affine labels `m_0, ..., m_l`, for the formulas that take a weight.
    pub labels: Option<Vec<i64>>,
    pub allow_large_weyl: bool,
}

impl CharacterRequest {
    pub fn new(formula: FormulaId, kind: RootType, rank: usize) -> Self {
        CharacterRequest {
            formula,
            kind,
            rank,
            s: 0,
            labels: None,
            allow_large_weyl: false,
        }
    }

    pub fn with_s(mut self, s: u32) -> Self {
        self.s = s;
        self
    }

    pub fn with_labels(mut self, labels: Vec<i64>) -> Self {
        self.labels = Some(labels);
        self
    }

    /// Validates the algebra against the formula and builds the root system.
    pub fn root_system(&self) -> Result<RootSystem> {
        let rs = RootSystem::new(self.kind, self.rank)?;
        let ok = match self.formula {
            FormulaId::WeylKac => true,
            FormulaId::SlHalfFirst | FormulaId::SlHalfLast => {
                self.kind == RootType::A && self.rank >= 2
            }
            FormulaId::Sl2TwoTerm => self.kind == RootType::A && self.rank == 1,
            FormulaId::SpLambda1
            | FormulaId::SpVacuum
            | FormulaId::SpLambda2
            | FormulaId::SpParityVacuum
            | FormulaId::SpParityLambda2 => self.kind == RootType::C && self.rank >= 2,
            FormulaId::Deligne => rs.is_simply_laced(),
        };
        if !ok {
            return Err(Error::Precondition(format!(
                "formula {} does not apply to {}",
                self.formula,
                rs.label()
            )));
        }
        if !self.formula.needs_labels() && self.labels.is_some() {
            return Err(Error::Precondition(format!(
                "formula {} fixes its own weight; drop the labels",
                self.formula
            )));
        }
        let no_s = matches!(
            self.formula,
            FormulaId::SpVacuum
                | FormulaId::SpLambda2
                | FormulaId::SpParityVacuum
                | FormulaId::SpParityLambda2
        ) || self.formula.needs_labels();
        if no_s && self.s != 0 {
            return Err(Error::Precondition(format!(
                "formula {} has no parameter s",
                self.formula
            )));
        }
        Ok(rs)
    }

    /// The highest weight `Lambda`.
    pub fn weight(&self, rs: &RootSystem) -> Result<AffineWeight> {
        let from = |labels: &[(usize, i64)]| {
            let mut l = vec![0i64; rs.rank() + 1];
            for &(i, m) in labels {
                l[i] += m;
            }
            AffineWeight::from_labels(rs, &l, Q::zero())
        };
        let s = self.s as i64;
        match self.formula {
            FormulaId::WeylKac | FormulaId::Deligne => {
                let labels = self.labels.as_ref().ok_or_else(|| {
                    Error::Precondition(format!("formula {} needs a weight", self.formula))
                })?;
                AffineWeight::from_labels(rs, labels, Q::zero())
            }
            FormulaId::SlHalfFirst | FormulaId::Sl2TwoTerm => {
                level_minus_one_weight(rs, self.s, Side::First)
            }
            FormulaId::SlHalfLast => level_minus_one_weight(rs, self.s, Side::Last),
            FormulaId::SpLambda1 => from(&[(0, -(1 + s)), (1, s)]),
            FormulaId::SpVacuum | FormulaId::SpParityVacuum => from(&[(0, -1)]),
            FormulaId::SpLambda2 | FormulaId::SpParityLambda2 => from(&[(0, -2), (2, 1)]),
        }
    }

    /// The lattice sum whose value is `divisor` times the numerator
    /// `R_hat ch L(Lambda)`. The two `sp` half-sum formulas use the parity
    /// form of the same numerator.
    pub fn lattice<'a>(&self, rs: &'a RootSystem) -> Result<(LatticeSum<'a>, i64)> {
        let sum = match self.formula {
            FormulaId::WeylKac => weyl_kac_sum(rs, &self.weight(rs)?),
            FormulaId::SlHalfFirst => half_lattice_sum(rs, self.s, Side::First)?,
            FormulaId::SlHalfLast => half_lattice_sum(rs, self.s, Side::Last)?,
            FormulaId::Sl2TwoTerm => two_term_sum(rs, self.s)?,
            FormulaId::SpLambda1 => restricted_sum(rs, self.s)?,
            FormulaId::SpVacuum | FormulaId::SpParityVacuum => {
                parity_sum(rs, SpParityVariant::Vacuum)?
            }
            FormulaId::SpLambda2 | FormulaId::SpParityLambda2 => {
                parity_sum(rs, SpParityVariant::Lambda2)?
            }
            FormulaId::Deligne => {
                return Ok((
                    deligne_sum(rs, &self.weight(rs)?)?.allow_large_weyl(self.allow_large_weyl),
                    2,
                ))
            }
        };
        Ok((sum.allow_large_weyl(self.allow_large_weyl), 1))
    }

    /// `R_hat ch L(Lambda)` to height `order`.
    pub fn numerator(&self, order: u32) -> Result<ExpSeries> {
        let rs = self.root_system()?;
        match self.formula {
            FormulaId::WeylKac => weyl_kac(&rs, &self.weight(&rs)?, order),
            FormulaId::SpVacuum | FormulaId::SpLambda2 => {
                multiply_by_denominator(&rs, &self.character(order)?)
            }
            FormulaId::Deligne => {
                deligne_numerator(&rs, &self.weight(&rs)?, order, self.allow_large_weyl)
            }
            _ => self.lattice(&rs)?.0.eval(order),
        }
    }

    /// `ch L(Lambda)` to height `order`, with base `Lambda`.
    pub fn character(&self, order: u32) -> Result<ExpSeries> {
        let rs = self.root_system()?;
        match self.formula {
            FormulaId::SpVacuum => sp_character(2 * rs.rank(), SpVariant::Vacuum, 0, order),
            FormulaId::SpLambda2 => sp_character(2 * rs.rank(), SpVariant::Lambda2, 0, order),
            _ => divide_by_denominator(&rs, &self.numerator(order)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn names_round_trip() {
        for f in FormulaId::ALL {
            assert_eq!(f.name().parse::<FormulaId>().unwrap(), f);
        }
        assert!("nope".parse::<FormulaId>().is_err());
    }

    #[test]
    fn characters_start_with_one() {
        let reqs = [
            CharacterRequest::new(FormulaId::WeylKac, RootType::A, 2).with_labels(vec![1, 0, 0]),
            CharacterRequest::new(FormulaId::SlHalfFirst, RootType::A, 2).with_s(1),
            CharacterRequest::new(FormulaId::SlHalfLast, RootType::A, 2),
            CharacterRequest::new(FormulaId::Sl2TwoTerm, RootType::A, 1).with_s(2),
            CharacterRequest::new(FormulaId::SpLambda1, RootType::C, 2).with_s(1),
            CharacterRequest::new(FormulaId::SpVacuum, RootType::C, 2),
            CharacterRequest::new(FormulaId::SpLambda2, RootType::C, 2),
            CharacterRequest::new(FormulaId::SpParityVacuum, RootType::C, 2),
            CharacterRequest::new(FormulaId::SpParityLambda2, RootType::C, 2),
            CharacterRequest::new(FormulaId::Deligne, RootType::D, 4)
                .with_labels(vec![-1, 0, 0, 0, 0]),
        ];
        for r in reqs {
            let rs = r.root_system().unwrap();
            let ch = r.character(2).unwrap();
            assert_eq!(ch.base(), &r.weight(&rs).unwrap(), "{}", r.formula);
            assert_eq!(
                ch.coeff(&vec![0; rs.rank() + 1]),
                BigInt::from(1),
                "{}",
                r.formula
            );
        }
    }

    #[test]
    fn mismatched_requests_are_rejected() {
        assert!(
            CharacterRequest::new(FormulaId::SlHalfFirst, RootType::C, 2)
                .root_system()
                .is_err()
        );
        assert!(CharacterRequest::new(FormulaId::SpVacuum, RootType::C, 2)
            .with_s(1)
            .root_system()
            .is_err());
        assert!(CharacterRequest::new(FormulaId::Deligne, RootType::D, 4)
            .numerator(1)
            .is_err());
    }
}
