use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::monomial::{Exps, Monomial};
use super::universe::{Universe, Var};
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// Exact sparse polynomial in `t_1..t_k, z_1..z_n, h`.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C> {
    universe: Universe,
    terms: Vec<(Monomial, C)>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(universe: Universe) -> Self {
        Self {
            universe,
            terms: Vec::new(),
        }
    }

    pub fn one(universe: Universe) -> Self {
        Self::constant(universe, C::one())
    }

    pub fn constant(universe: Universe, c: C) -> Self {
        if c.is_zero() {
            return Self::zero(universe);
        }
        Self {
            universe,
            terms: vec![(Monomial::one(universe.num_vars()), c)],
        }
    }

    pub fn from_i64(universe: Universe, c: i64) -> Self {
        Self::constant(universe, C::from_i64(c))
    }

    pub fn var(universe: Universe, var: Var) -> Result<Self> {
        let slot = universe.slot(var)?;
        Ok(Self::slot_var(universe, slot))
    }

    pub(crate) fn slot_var(universe: Universe, slot: usize) -> Self {
        let m = Monomial::one(universe.num_vars()).with_slot(slot, 1);
        Self {
            universe,
            terms: vec![(m, C::one())],
        }
    }

    /// `t_a`; panics if `a` is out of range.
    pub fn t(universe: Universe, a: usize) -> Self {
        Self::var(universe, Var::T(a)).expect("t index out of range")
    }

    /// `z_u`; panics if `u` is out of range.
    pub fn z(universe: Universe, u: usize) -> Self {
        Self::var(universe, Var::Z(u)).expect("z index out of range")
    }

    pub fn h(universe: Universe) -> Self {
        Self::slot_var(universe, 0)
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(universe: Universe, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in terms {
            debug_assert_eq!(m.exponents().len(), universe.num_vars());
            match acc.get_mut(&m) {
                Some(e) => *e += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(universe, acc)
    }

    fn from_map(universe: Universe, acc: FxHashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self { universe, terms }
    }

    /// Assumes `terms` is strictly descending and zero-free.
    pub(crate) fn from_sorted(universe: Universe, terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Self { universe, terms }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether there are no terms; the same as [`is_zero`](Self::is_zero).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: Var) -> Result<Option<u16>> {
        let slot = self.universe.slot(var)?;
        Ok(self.terms.iter().map(|(m, _)| m.exponent(slot)).max())
    }

    /// Whether `var` occurs in any term.
    pub fn involves(&self, var: Var) -> bool {
        match self.universe.slot(var) {
            Ok(slot) => self.terms.iter().any(|(m, _)| m.exponent(slot) > 0),
            Err(_) => false,
        }
    }

    /// True when no `t` variable occurs.
    pub fn is_t_free(&self) -> bool {
        let k = self.universe.k();
        self.terms
            .iter()
            .all(|(m, _)| m.exponents()[1..=k].iter().all(|&e| e == 0))
    }

    pub fn negated(&self) -> Self {
        Self {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.universe);
        }
        Self {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut c = c.clone();
                    c *= s;
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.universe);
        }
        Self {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut c = c.clone();
                    c *= s;
                    (m.mul(mono), c)
                })
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.universe.check_same(&other.universe)?;
        Ok(Self {
            universe: self.universe,
            terms: merge(&self.terms, &other.terms, false),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.universe.check_same(&other.universe)?;
        Ok(Self {
            universe: self.universe,
            terms: merge(&self.terms, &other.terms, true),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.universe.check_same(&other.universe)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.universe));
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() <= 4 {
            // Shifting a sorted term list by one monomial keeps it sorted, so
            // a few merges beat hashing here.
            let mut acc = big.mul_term(&small.terms[0].0, &small.terms[0].1).terms;
            for (m, c) in &small.terms[1..] {
                let shifted = big.mul_term(m, c).terms;
                acc = merge(&acc, &shifted, false);
            }
            return Ok(Self {
                universe: self.universe,
                terms: acc,
            });
        }
        let mut acc: FxHashMap<Monomial, C> =
            FxHashMap::with_capacity_and_hasher(big.len() * 2, Default::default());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(mb);
                let mut c = ca.clone();
                c *= cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.universe, acc))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.universe);
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// Product of a list of polynomials; the empty product is one.
    pub fn product<'a, I>(universe: Universe, factors: I) -> Self
    where
        I: IntoIterator<Item = &'a Polynomial<C>>,
        C: 'a,
    {
        factors
            .into_iter()
            .fold(Self::one(universe), |acc, f| &acc * f)
    }

    /// Simultaneous substitution of the assigned variables; unassigned ones persist.
    pub fn substitute(&self, assignment: &[(Var, Polynomial<C>)]) -> Result<Self> {
        let nv = self.universe.num_vars();
        let mut values: Vec<Option<&Polynomial<C>>> = vec![None; nv];
        for (var, value) in assignment {
            let slot = self.universe.slot(*var)?;
            self.universe.check_same(&value.universe)?;
            values[slot] = Some(value);
        }
        // Renaming fast path: every value is a bare variable.
        let mut renames: Vec<Option<usize>> = vec![None; nv];
        let mut all_renames = true;
        for (slot, v) in values.iter().enumerate() {
            if let Some(p) = v {
                match p.as_bare_variable() {
                    Some(target) => renames[slot] = Some(target),
                    None => {
                        all_renames = false;
                        break;
                    }
                }
            }
        }
        if all_renames {
            return Ok(self.rename_slots(&renames));
        }

        let assigned: Vec<usize> = (0..nv).filter(|&s| values[s].is_some()).collect();
        let mut powers: Vec<Vec<Polynomial<C>>> = vec![Vec::new(); nv];
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut rest: Exps = m.exponents().iter().copied().collect();
            let mut factor = Polynomial::constant(self.universe, c.clone());
            for &s in &assigned {
                let e = rest[s] as usize;
                if e == 0 {
                    continue;
                }
                rest[s] = 0;
                let cache = &mut powers[s];
                if cache.is_empty() {
                    cache.push(Polynomial::one(self.universe));
                }
                while cache.len() <= e {
                    let next = &cache[cache.len() - 1] * values[s].unwrap();
                    cache.push(next);
                }
                factor = &factor * &cache[e];
                if factor.is_zero() {
                    break;
                }
            }
            let rest = Monomial::from_exps(rest);
            for (fm, fc) in factor.terms {
                let mm = fm.mul(&rest);
                match acc.get_mut(&mm) {
                    Some(e) => *e += &fc,
                    None => {
                        acc.insert(mm, fc);
                    }
                }
            }
        }
        Ok(Self::from_map(self.universe, acc))
    }

    /// Slot of the variable if `self` is exactly one variable with coefficient 1.
    fn as_bare_variable(&self) -> Option<usize> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_one() && m.degree() == 1 => m.exponents().iter().position(|&e| e == 1),
            _ => None,
        }
    }

    fn rename_slots(&self, renames: &[Option<usize>]) -> Self {
        let nv = self.universe.num_vars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps: Exps = SmallVec::from_elem(0, nv);
            for (s, &e) in m.exponents().iter().enumerate() {
                let target = renames[s].unwrap_or(s);
                exps[target] += e;
            }
            (Monomial::from_exps(exps), c.clone())
        });
        Self::from_terms(self.universe, terms)
    }

    /// `t_a -> t_{perm[a-1]+1}` for a 0-based permutation `perm` of `0..k`.
    pub fn permute_t(&self, perm: &[usize]) -> Self {
        let k = self.universe.k();
        assert_eq!(perm.len(), k, "permutation length must equal k");
        let target: Vec<usize> = (0..self.universe.num_vars())
            .map(|s| if s >= 1 && s <= k { perm[s - 1] + 1 } else { s })
            .collect();
        let mut terms: Vec<(Monomial, C)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.permuted(&target), c.clone()))
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self::from_sorted(self.universe, terms)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Result<Self> {
        let sa = self.universe.slot(a)?;
        let sb = self.universe.slot(b)?;
        let mut target: Vec<usize> = (0..self.universe.num_vars()).collect();
        target.swap(sa, sb);
        let mut terms: Vec<(Monomial, C)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.permuted(&target), c.clone()))
            .collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        Ok(Self::from_sorted(self.universe, terms))
    }

    /// `z_u -> z_{sigma(u)}` for a 1-based permutation given as `sigma[u-1]`.
    pub fn permute_z(&self, sigma: &[usize]) -> Self {
        let k = self.universe.k();
        let n = self.universe.n();
        assert_eq!(sigma.len(), n, "permutation length must equal n");
        let target: Vec<usize> = (0..self.universe.num_vars())
            .map(|s| if s > k { k + sigma[s - k - 1] } else { s })
            .collect();
        let mut terms: Vec<(Monomial, C)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.permuted(&target), c.clone()))
            .collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        Self::from_sorted(self.universe, terms)
    }

    /// Substitutes `t_a -> z_{points[a-1]}` for all `a`.
    pub fn at_point(&self, points: &[usize]) -> Self {
        let k = self.universe.k();
        assert_eq!(points.len(), k, "need one z index per t variable");
        let mut renames = vec![None; self.universe.num_vars()];
        for (a, &u) in points.iter().enumerate() {
            renames[self.universe.t_slot(a + 1)] = Some(self.universe.z_slot(u));
        }
        self.rename_slots(&renames)
    }

    /// Division with remainder by a single divisor: `self = q*d + r` where no
    /// term of `r` is divisible by the leading monomial of `d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.universe.check_same(&d.universe)?;
        let (lm, lc) = d.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let inv = lc.recip();
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut q = Vec::new();
        let mut r = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let mut qc = c;
                qc *= &inv;
                subtract_shifted(&mut rem, &d.terms[1..], &qm, &qc);
                q.push((qm, qc));
            } else {
                r.push((m, c));
            }
        }
        Ok((
            Self::from_sorted(self.universe, q),
            Self::from_sorted(self.universe, r),
        ))
    }

    /// Exact quotient, or `DivisionNotExact` carrying the remainder.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(q) = self.try_divide(d) {
            return Ok(q);
        }
        let (_, r) = self.div_rem(d)?;
        Err(AlgebraError::DivisionNotExact {
            remainder: r.to_string(),
        })
    }

    /// Exact quotient if `d` divides `self`; stops at the first leading term
    /// that cannot be cancelled.
    pub fn try_divide(&self, d: &Self) -> Option<Self> {
        if self.universe != d.universe {
            return None;
        }
        let (lm, lc) = d.leading_term()?;
        if self.is_zero() {
            return Some(Self::zero(self.universe));
        }
        let inv = lc.recip();
        if d.len() == 1 {
            let mut q = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                let mut qc = c.clone();
                qc *= &inv;
                q.push((lm.quotient_of(m), qc));
            }
            return Some(Self::from_sorted(self.universe, q));
        }
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let mut qc = c;
            qc *= &inv;
            subtract_shifted(&mut rem, &d.terms[1..], &qm, &qc);
            q.push((qm, qc));
        }
        Some(Self::from_sorted(self.universe, q))
    }

    /// Highest power of `h` and the `t,z`-polynomial multiplying it.
    pub fn h_leading(&self) -> Result<(u32, Self)> {
        let degree = self
            .terms
            .iter()
            .map(|(m, _)| m.exponent(0))
            .max()
            .ok_or(AlgebraError::ZeroPolynomial)?;
        Ok((u32::from(degree), self.h_coefficient(u32::from(degree))))
    }

    /// Coefficient of `h^d`, as a polynomial free of `h`.
    pub fn h_coefficient(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| u32::from(m.exponent(0)) == d)
            .map(|(m, c)| (m.with_slot(0, 0), c.clone()));
        Self::from_terms(self.universe, terms)
    }

    /// The terms whose `h`-exponent is at least `min`.
    pub fn h_truncated(&self, min: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| u32::from(m.exponent(0)) >= min)
            .cloned()
            .collect();
        Self::from_sorted(self.universe, terms)
    }

    /// Checks invariance under every adjacent transposition of the `t`'s.
    pub fn check_symmetric_in_t(&self) -> Result<()> {
        let k = self.universe.k();
        for a in 1..k {
            if !self.is_invariant_under_t_swap(a) {
                return Err(AlgebraError::NotSymmetric {
                    transposition: format!("t{} <-> t{}", a, a + 1),
                });
            }
        }
        Ok(())
    }

    pub fn is_invariant_under_t_swap(&self, a: usize) -> bool {
        let k = self.universe.k();
        let mut perm: Vec<usize> = (0..k).collect();
        perm.swap(a - 1, a);
        self.permute_t(&perm) == *self
    }

    /// Greatest common divisor of all monomials; `None` for zero.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |g, (m, _)| g.gcd(m)))
    }

    /// Divides every term by `mono`, which must divide all of them.
    pub(crate) fn div_monomial(&self, mono: &Monomial) -> Self {
        Self::from_sorted(
            self.universe,
            self.terms
                .iter()
                .map(|(m, c)| (mono.quotient_of(m), c.clone()))
                .collect(),
        )
    }

    /// Splits off the leading coefficient: returns `(lc, self / lc)`.
    pub fn monic(&self) -> Option<(C, Self)> {
        let lc = self.leading_coefficient()?.clone();
        let inv = lc.recip();
        Some((lc, self.scale(&inv)))
    }

    pub fn as_monomial_term(&self) -> Option<(&Monomial, &C)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    /// Same polynomial in a larger universe with the same `n`; `t` indices keep their meaning.
    pub fn embed(&self, target: Universe) -> Result<Self> {
        if target.n() != self.universe.n() || target.k() < self.universe.k() {
            return Err(AlgebraError::UniverseMismatch {
                left: self.universe.to_string(),
                right: target.to_string(),
            });
        }
        let k = self.universe.k();
        let nv = target.num_vars();
        let shift = target.k() - k;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps: Exps = SmallVec::from_elem(0, nv);
                for (s, &e) in m.exponents().iter().enumerate() {
                    let t = if s > k { s + shift } else { s };
                    exps[t] = e;
                }
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Ok(Self::from_sorted(target, terms))
    }

    fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}", self.universe.var_at(s))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn subtract_shifted<C: Scalar>(
    rem: &mut BTreeMap<Monomial, C>,
    tail: &[(Monomial, C)],
    qm: &Monomial,
    qc: &C,
) {
    for (dm, dc) in tail {
        let mm = qm.mul(dm);
        let mut delta = dc.clone();
        delta *= qc;
        match rem.get_mut(&mm) {
            Some(e) => {
                *e -= &delta;
                if e.is_zero() {
                    rem.remove(&mm);
                }
            }
            None => {
                rem.insert(mm, -delta);
            }
        }
    }
}

fn merge<C: Scalar>(
    a: &[(Monomial, C)],
    b: &[(Monomial, C)],
    negate_b: bool,
) -> Vec<(Monomial, C)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let take_b = |c: &C| if negate_b { -c.clone() } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0.clone(), take_b(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let mut c = a[i].1.clone();
                if negate_b {
                    c -= &b[j].1;
                } else {
                    c += &b[j].1;
                }
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
    out
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs_value();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                self.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{}[{}]", self.universe, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Scalar> $trait<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("polynomial universes differ")
            }
        }
        impl<C: Scalar> $trait<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Scalar> $trait<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Scalar> $trait<Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.negated()
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.negated()
    }
}
