//! Textual type labels such as `A3`, `B2`, `I2(5)` or `A1xA1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    E(u32),
    F4,
    G2,
    H(u32),
    I2(u32),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n)
            | CoxeterType::B(n)
            | CoxeterType::C(n)
            | CoxeterType::D(n)
            | CoxeterType::E(n)
            | CoxeterType::H(n) => n as usize,
            CoxeterType::F4 => 4,
            CoxeterType::G2 | CoxeterType::I2(_) => 2,
        }
    }

    fn validate(self) -> Result<Self> {
        let bad = |msg: &str| Err(Error::UnsupportedType(format!("{self}: {msg}")));
        match self {
            CoxeterType::B(n) | CoxeterType::C(n) if n < 2 => bad("rank must be at least 2"),
            CoxeterType::D(n) if n < 3 => bad("rank must be at least 3"),
            CoxeterType::E(n) if !(6..=8).contains(&n) => bad("only E6, E7, E8 exist"),
            CoxeterType::I2(k) if k < 2 => bad("dihedral order must be at least 2"),
            CoxeterType::H(_) => bad("non-crystallographic types H3/H4 are not supported"),
            _ => Ok(self),
        }
    }

    /// Coxeter matrix in the usual Bourbaki-style numbering.
    pub fn coxeter_matrix(self) -> Vec<Vec<u32>> {
        let n = self.rank();
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut bond = |i: usize, j: usize, v: u32| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match self {
            CoxeterType::A(n) => (1..n as usize).for_each(|i| bond(i - 1, i, 3)),
            CoxeterType::B(n) | CoxeterType::C(n) => {
                let n = n as usize;
                (1..n - 1).for_each(|i| bond(i - 1, i, 3));
                bond(n - 2, n - 1, 4);
            }
            CoxeterType::D(n) => {
                let n = n as usize;
                (1..n - 1).for_each(|i| bond(i - 1, i, 3));
                bond(n - 3, n - 1, 3);
            }
            CoxeterType::E(n) => {
                // Chain 0-1-...-(n-2) with the extra node n-1 attached to 2.
                let n = n as usize;
                (1..n - 1).for_each(|i| bond(i - 1, i, 3));
                bond(2, n - 1, 3);
            }
            CoxeterType::F4 => {
                bond(0, 1, 3);
                bond(1, 2, 4);
                bond(2, 3, 3);
            }
            CoxeterType::G2 => bond(0, 1, 6),
            CoxeterType::I2(k) => bond(0, 1, k),
            CoxeterType::H(_) => {}
        }
        m
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::C(n) => write!(f, "C{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::G2 => write!(f, "G2"),
            CoxeterType::H(n) => write!(f, "H{n}"),
            CoxeterType::I2(k) => write!(f, "I2({k})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::UnsupportedType(s.to_string());
        if let Some(rest) = s.strip_prefix("I2(") {
            let k = rest.strip_suffix(')').ok_or_else(err)?;
            return CoxeterType::I2(k.trim().parse().map_err(|_| err())?).validate();
        }
        match s {
            "F4" => return Ok(CoxeterType::F4),
            "G2" => return Ok(CoxeterType::G2),
            _ => {}
        }
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(err)?;
        let n: u32 = chars.as_str().parse().map_err(|_| err())?;
        let t = match family {
            'A' => CoxeterType::A(n),
            'B' => CoxeterType::B(n),
            'C' => CoxeterType::C(n),
            'D' => CoxeterType::D(n),
            'E' => CoxeterType::E(n),
            'H' => CoxeterType::H(n),
            _ => return Err(err()),
        };
        t.validate()
    }
}

/// A reducible type label: factors joined by `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeLabel(pub Vec<CoxeterType>);

impl TypeLabel {
    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank()).sum()
    }

    /// Block-diagonal Coxeter matrix of the product.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.rank();
        let mut m = vec![vec![2u32; n]; n];
        let mut offset = 0;
        for t in &self.0 {
            let block = t.coxeter_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    m[offset + i][offset + j] = v;
                }
            }
            offset += t.rank();
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(['x', '×'])
            .map(str::parse)
            .collect::<Result<Vec<CoxeterType>>>()?;
        if factors.is_empty() {
            return Err(Error::UnsupportedType(s.to_string()));
        }
        Ok(TypeLabel(factors))
    }
}
