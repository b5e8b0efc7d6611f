use std::cmp::Ordering;

use smallvec::SmallVec;

pub(crate) type Exps = SmallVec<[u16; 16]>;

/// A monomial as a dense exponent vector (see [`Universe`](super::Universe)
/// for the slot layout) with its total degree cached.
///
/// The derived order is graded lexicographic: total degree first, then the
/// exponent of `h`, then `t_1..t_k`, then `z_1..z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Exps,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Self {
            degree: 0,
            exps: SmallVec::from_elem(0, num_vars),
        }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Self {
            degree: exps.iter().map(|&e| u32::from(e)).sum(),
            exps: exps.iter().copied().collect(),
        }
    }

    pub(crate) fn from_exps(exps: Exps) -> Self {
        Self {
            degree: exps.iter().map(|&e| u32::from(e)).sum(),
            exps,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, slot: usize) -> u16 {
        self.exps[slot]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| b - a)
            .collect();
        Monomial {
            degree: other.degree - self.degree,
            exps,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::from_exps(exps)
    }

    pub(crate) fn with_slot(&self, slot: usize, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps[slot] = e;
        Monomial::from_exps(exps)
    }

    /// Moves the exponent of each slot `s` to `target[s]`. `target` must be a
    /// permutation of the slots.
    pub(crate) fn permuted(&self, target: &[usize]) -> Monomial {
        let mut exps: Exps = SmallVec::from_elem(0, self.exps.len());
        for (s, &e) in self.exps.iter().enumerate() {
            exps[target[s]] = e;
        }
        Monomial {
            degree: self.degree,
            exps,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}
