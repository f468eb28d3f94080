use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Irreducible crystallographic Coxeter family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    /// Dihedral group of order `2m`, `m` in {2, 3, 4, 6}.
    I2(u32),
}

/// One irreducible factor: a family and its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoxeterFactor {
    pub family: Family,
    pub rank: usize,
}

/// Coxeter type of a finite Weyl group as a product of irreducible factors.
///
/// Type `A0` stands for the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterDescriptor {
    factors: Vec<CoxeterFactor>,
}

pub const MAX_A_RANK: usize = 9;
pub const MAX_BCD_RANK: usize = 8;

impl CoxeterFactor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank <= MAX_A_RANK,
            Family::B | Family::C => (1..=MAX_BCD_RANK).contains(&rank),
            Family::D => (2..=MAX_BCD_RANK).contains(&rank),
            Family::I2(m) => rank == 2 && matches!(m, 2 | 3 | 4 | 6),
        };
        if !ok {
            return Err(Error::UnsupportedRank(format!(
                "{}",
                CoxeterFactor { family, rank }
            )));
        }
        Ok(CoxeterFactor { family, rank })
    }
}

impl fmt::Display for CoxeterFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::I2(6) => write!(f, "G2"),
            Family::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl CoxeterDescriptor {
    pub fn new(factors: Vec<CoxeterFactor>) -> Self {
        CoxeterDescriptor { factors }
    }

    pub fn single(family: Family, rank: usize) -> Result<Self> {
        Ok(CoxeterDescriptor {
            factors: vec![CoxeterFactor::new(family, rank)?],
        })
    }

    /// Symmetric group `S_n`, type `A_{n-1}`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedRank("S_0".into()));
        }
        Self::single(Family::A, n - 1)
    }

    pub fn factors(&self) -> &[CoxeterFactor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        CoxeterDescriptor { factors }
    }
}

impl fmt::Display for CoxeterDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "A0");
        }
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CoxeterDescriptor {
    type Err = Error;

    /// Accepts forms like `A2`, `B3xA1`, `G2`, `I2(4)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for tok in s.split(['x', '*']) {
            let tok = tok.trim();
            let bad = || Error::Malformed(format!("bad Coxeter type {tok:?}"));
            let factor = if tok == "G2" {
                CoxeterFactor::new(Family::I2(6), 2)?
            } else if let Some(m) = tok.strip_prefix("I2(").and_then(|t| t.strip_suffix(')')) {
                CoxeterFactor::new(Family::I2(m.parse().map_err(|_| bad())?), 2)?
            } else {
                let (head, rank) =
                    tok.split_at(tok.char_indices().nth(1).map_or(tok.len(), |(i, _)| i));
                let rank: usize = rank.parse().map_err(|_| bad())?;
                let family = match head {
                    "A" => Family::A,
                    "B" => Family::B,
                    "C" => Family::C,
                    "D" => Family::D,
                    _ => return Err(bad()),
                };
                CoxeterFactor::new(family, rank)?
            };
            factors.push(factor);
        }
        Ok(CoxeterDescriptor { factors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["A2", "B3xA1", "G2", "I2(4)", "D4", "A0"] {
            let d: CoxeterDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert_eq!("B3xA1".parse::<CoxeterDescriptor>().unwrap().rank(), 4);
    }

    #[test]
    fn bounds() {
        assert!("A10".parse::<CoxeterDescriptor>().is_err());
        assert!("B9".parse::<CoxeterDescriptor>().is_err());
        assert!("D1".parse::<CoxeterDescriptor>().is_err());
        assert!("I2(5)".parse::<CoxeterDescriptor>().is_err());
        assert!("E6".parse::<CoxeterDescriptor>().is_err());
    }
}
