//! The base field F in {R, C, H} and the derived constants of a matrix space.
//!
//! Everything downstream is driven by a [`FieldContext`]: the space of
//! Hermitian matrices with entries in iF, its Weyl chamber type, and the
//! constants c, n-tilde and epsilon that enter every density formula.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Base field of the matrix space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(Field::R),
            "C" | "c" => Ok(Field::C),
            "H" | "h" => Ok(Field::H),
            other => Err(Error::InvalidArgument(format!("unknown field `{other}`"))),
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Type of the Weyl chamber attached to the conjugation group.
///
/// A for the unitary group, B/D for the special orthogonal group in odd/even
/// dimension, C for the symplectic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChamberType {
    A,
    B,
    C,
    D,
}

impl std::fmt::Display for ChamberType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ChamberType::A => "A",
            ChamberType::B => "B",
            ChamberType::C => "C",
            ChamberType::D => "D",
        })
    }
}

/// A matrix-space context: the field F and the size n over F.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldContext {
    pub field: Field,
    pub n: usize,
}

impl FieldContext {
    pub fn new(field: Field, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidContext("n must be positive".into()));
        }
        Ok(FieldContext { field, n })
    }

    /// c = 1 for R and C, c = 2 for H.
    pub fn c(&self) -> u32 {
        match self.field {
            Field::R | Field::C => 1,
            Field::H => 2,
        }
    }

    /// The tilde operation: m for C and H, floor(m/2) for R.
    pub fn tilde(&self, m: usize) -> usize {
        match self.field {
            Field::C | Field::H => m,
            Field::R => m / 2,
        }
    }

    /// Number of radial coordinates, i.e. the rank of the chamber.
    pub fn n_tilde(&self) -> usize {
        self.tilde(self.n)
    }

    /// 1 if n is odd, 0 otherwise.
    pub fn epsilon(&self) -> u32 {
        (self.n % 2) as u32
    }

    pub fn chamber_type(&self) -> ChamberType {
        match self.field {
            Field::C => ChamberType::A,
            Field::H => ChamberType::C,
            Field::R => {
                if self.n % 2 == 1 {
                    ChamberType::B
                } else {
                    ChamberType::D
                }
            }
        }
    }

    /// Side length of the complex matrix that stores an element of P_n(F)
    /// (2n for H via the 2x2-block quaternion representation).
    pub fn ambient_dim(&self) -> usize {
        match self.field {
            Field::R | Field::C => self.n,
            Field::H => 2 * self.n,
        }
    }

    /// Real dimension of the vector space P_n(F).
    pub fn dim_p(&self) -> usize {
        let n = self.n;
        match self.field {
            Field::C => n * n,
            Field::R => n * (n - 1) / 2,
            Field::H => n * (2 * n + 1),
        }
    }

    /// Real dimension of the vector space M_{n,k}(F).
    pub fn dim_m(&self, k: usize) -> usize {
        let per_entry = match self.field {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
        };
        per_entry * self.n * k
    }
}

impl std::fmt::Display for FieldContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "P_{}({})", self.n, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_constants() {
        let ctx = FieldContext::new(Field::R, 5).unwrap();
        assert_eq!(ctx.c(), 1);
        assert_eq!(ctx.n_tilde(), 2);
        assert_eq!(ctx.epsilon(), 1);
        assert_eq!(ctx.chamber_type(), ChamberType::B);

        let ctx = FieldContext::new(Field::R, 4).unwrap();
        assert_eq!(ctx.chamber_type(), ChamberType::D);
        assert_eq!(ctx.epsilon(), 0);

        let ctx = FieldContext::new(Field::C, 3).unwrap();
        assert_eq!(ctx.chamber_type(), ChamberType::A);
        assert_eq!(ctx.n_tilde(), 3);
        assert_eq!(ctx.dim_p(), 9);

        let ctx = FieldContext::new(Field::H, 2).unwrap();
        assert_eq!(ctx.c(), 2);
        assert_eq!(ctx.chamber_type(), ChamberType::C);
        assert_eq!(ctx.ambient_dim(), 4);
        assert_eq!(ctx.dim_p(), 10);
        assert_eq!(ctx.dim_m(3), 24);
    }

    #[test]
    fn rejects_zero_size() {
        assert!(FieldContext::new(Field::C, 0).is_err());
    }
}
