use std::fmt;

use crate::error::{AlgebraError, Result};

/// A variable of the ring `Q[t_1..t_k, z_1..z_n, h]`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T(usize),
    Z(usize),
    H,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T(a) => write!(f, "t{a}"),
            Var::Z(u) => write!(f, "z{u}"),
            Var::H => f.write_str("h"),
        }
    }
}

/// The variable set `t_1..t_k, z_1..z_n, h`.
///
/// Exponent vectors are laid out in significance order: slot 0 is `h`, slots
/// `1..=k` are the `t`'s and slots `k+1..=k+n` are the `z`'s. Monomial order
/// and printing both follow this layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Universe {
    k: usize,
    n: usize,
}

impl Universe {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(AlgebraError::InvalidSubset(format!(
                "universe needs k <= n, got k = {k}, n = {n}"
            )));
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        self.k + self.n + 1
    }

    pub fn contains(&self, var: Var) -> bool {
        match var {
            Var::T(a) => (1..=self.k).contains(&a),
            Var::Z(u) => (1..=self.n).contains(&u),
            Var::H => true,
        }
    }

    pub fn slot(&self, var: Var) -> Result<usize> {
        if !self.contains(var) {
            return Err(AlgebraError::UnknownVariable {
                var: var.to_string(),
                universe: self.to_string(),
            });
        }
        Ok(match var {
            Var::H => 0,
            Var::T(a) => a,
            Var::Z(u) => self.k + u,
        })
    }

    pub fn var_at(&self, slot: usize) -> Var {
        if slot == 0 {
            Var::H
        } else if slot <= self.k {
            Var::T(slot)
        } else {
            Var::Z(slot - self.k)
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.num_vars()).map(|s| self.var_at(s))
    }

    pub(crate) fn t_slot(&self, a: usize) -> usize {
        debug_assert!((1..=self.k).contains(&a));
        a
    }

    pub(crate) fn z_slot(&self, u: usize) -> usize {
        debug_assert!((1..=self.n).contains(&u));
        self.k + u
    }

    pub(crate) fn check_same(&self, other: &Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::UniverseMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, n={})", self.k, self.n)
    }
}
