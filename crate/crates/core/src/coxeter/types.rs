use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
}

/// A finite irreducible Artin type such as `A5`, `E8` or `I2(7)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArtinType {
    pub family: Family,
    pub rank: usize,
    /// Edge label for dihedral types, `None` otherwise.
    pub i2_label: Option<u32>,
}

impl ArtinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let t = ArtinType { family, rank, i2_label: None };
        t.check()?;
        Ok(t)
    }

    pub fn dihedral(m: u32) -> Result<Self> {
        let t = ArtinType { family: Family::I2, rank: 2, i2_label: Some(m) };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        let ok = match self.family {
            Family::A => self.rank >= 1,
            Family::B => self.rank >= 2,
            Family::D => self.rank >= 4,
            Family::E => (6..=8).contains(&self.rank),
            Family::F => self.rank == 4,
            Family::H => self.rank == 3 || self.rank == 4,
            Family::I2 => self.rank == 2 && matches!(self.i2_label, Some(m) if m >= 3),
        };
        let ok = ok && self.rank <= 64 && (self.family == Family::I2 || self.i2_label.is_none());
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }
}

impl fmt::Display for ArtinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.i2_label.unwrap_or(0)),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

impl FromStr for ArtinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(s.to_string());
        if let Some(rest) = s.strip_prefix("I2") {
            let m = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?
                .trim()
                .parse::<u32>()
                .map_err(|_| bad())?;
            return ArtinType::dihedral(m).map_err(|_| bad());
        }
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('H') => Family::H,
            _ => return Err(bad()),
        };
        let rank = chars.as_str().parse::<usize>().map_err(|_| bad())?;
        ArtinType::new(family, rank).map_err(|_| bad())
    }
}
