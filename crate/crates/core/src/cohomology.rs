//! Equivariant localization on `Gr(k, n)` and `T*Gr(k, n)`.
//!
//! A class is stored as its table of restrictions to the torus fixed points,
//! which are the `k`-subsets `J ⊂ {1..n}`; restriction is injective, so the
//! table is a faithful representative. Values are rational functions of
//! `z_1..z_n, h` (no `t`'s), kept in the universe `(k, n)` so that polynomial
//! representatives restrict without changing rings.
//!
//! [`Grassmannian`] bundles the fixed-point data of one `(k, n)`: the values
//! `W_I(z_J)`, `W̌_I(z_J)`, the transition matrices `[c]`, `[c']`, and a
//! [`SignConvention`] through which every `sgn(I)` of the theory is read.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::{linear_order, SubsetIndex};
use crate::error::{AlgebraError, Result};
use crate::poly::{Polynomial, RationalFunction, Universe, Var};
use crate::scalar::Scalar;
use crate::symmetrize::{check_block_symmetric, sym_cosets_cancelling, ShapeVector};
use crate::tensor::{
    invert_y_transition, r_matrix_apply, y_transition, TensorVector, TransitionMatrix,
};
use crate::weights::{poly_n_split, schur_delta_at, weight_w_at, weight_w_dual_at};

/// The sign `sgn(I) = (-1)^{codim I}`, optionally with one subset's sign
/// flipped. The flip exists to check that the verification harness notices a
/// wrong sign.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SignConvention {
    flipped: Option<SubsetIndex>,
}

impl SignConvention {
    pub fn standard() -> Self {
        Self { flipped: None }
    }

    /// `sgn` with the sign of `i` reversed.
    pub fn with_fault(i: SubsetIndex) -> Self {
        Self { flipped: Some(i) }
    }

    pub fn fault(&self) -> Option<&SubsetIndex> {
        self.flipped.as_ref()
    }

    pub fn sgn(&self, i: &SubsetIndex) -> i64 {
        let s = i.sgn();
        if self.flipped.as_ref() == Some(i) {
            -s
        } else {
            s
        }
    }
}

/// A class on `Gr(k, n)` or `T*Gr(k, n)` given by its values at the fixed points.
#[derive(Clone)]
pub struct LocalizedClass<C: Scalar> {
    k: usize,
    n: usize,
    values: BTreeMap<SubsetIndex, RationalFunction<C>>,
}

impl<C: Scalar> LocalizedClass<C> {
    /// The class whose value at `J` is `f(J)`.
    pub fn from_fn<F>(k: usize, n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&SubsetIndex) -> Result<RationalFunction<C>>,
    {
        let mut values = BTreeMap::new();
        for j in linear_order(k, n) {
            let v = f(&j)?;
            values.insert(j, v);
        }
        Ok(Self { k, n, values })
    }

    pub fn zero(k: usize, n: usize) -> Result<Self> {
        let u = Universe::new(k, n)?;
        Self::from_fn(k, n, |_| Ok(RationalFunction::zero(u)))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> Universe {
        Universe::new(self.k, self.n).expect("k <= n by construction")
    }

    /// The value at the fixed point `J`.
    pub fn value(&self, j: &SubsetIndex) -> &RationalFunction<C> {
        self.values
            .get(j)
            .expect("fixed point of this Grassmannian")
    }

    /// Fixed points with their values, in linear order.
    pub fn values(&self) -> impl Iterator<Item = (&SubsetIndex, &RationalFunction<C>)> {
        self.values.iter()
    }

    fn zip_with<F>(&self, other: &Self, f: F) -> Result<Self>
    where
        F: Fn(&RationalFunction<C>, &RationalFunction<C>) -> Result<RationalFunction<C>>,
    {
        if (self.k, self.n) != (other.k, other.n) {
            return Err(AlgebraError::UniverseMismatch {
                left: format!("Gr({}, {})", self.k, self.n),
                right: format!("Gr({}, {})", other.k, other.n),
            });
        }
        let values = self
            .values
            .iter()
            .map(|(j, v)| Ok((j.clone(), f(v, other.value(j))?.normalized())))
            .collect::<Result<_>>()?;
        Ok(Self { values, ..*self })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.checked_add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.checked_sub(b))
    }

    /// The cup product, pointwise.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.checked_mul(b))
    }

    pub fn scale(&self, s: &C) -> Self {
        let values = self
            .values
            .iter()
            .map(|(j, v)| (j.clone(), v.scale(s)))
            .collect();
        Self { values, ..*self }
    }

    /// Pointwise equality of values.
    pub fn equals(&self, other: &Self) -> bool {
        (self.k, self.n) == (other.k, other.n)
            && self.values.iter().all(|(j, v)| v.equals(other.value(j)))
    }

    /// The first fixed point where the two classes differ.
    pub fn first_difference(&self, other: &Self) -> Option<SubsetIndex> {
        self.values
            .iter()
            .find(|(j, v)| !v.equals(other.value(j)))
            .map(|(j, _)| j.clone())
    }

    /// Whether every value is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.values
            .values()
            .all(|v| v.clone().normalized().is_polynomial())
    }

    /// Whether every denominator is a product of factors `z_i - z_j + h` and
    /// `h`, i.e. the values lie in the ring where those are invertible.
    pub fn has_unit_denominators(&self) -> bool {
        self.values.values().all(has_unit_denominator)
    }

    /// `z_u -> z_{σ(u)}` in every value, fixed-point labels unchanged.
    pub fn substitute_z(&self, sigma: &[usize]) -> Self {
        let values = self
            .values
            .iter()
            .map(|(j, v)| (j.clone(), v.permute_z(sigma)))
            .collect();
        Self { values, ..*self }
    }

    /// The image under the longest permutation `u -> n+1-u`:
    /// the value at `F` becomes the value at `w_0 F` with `z_u -> z_{n+1-u}`.
    /// This is how classes defined with respect to the opposite flag are
    /// obtained from the standard ones.
    pub fn mirror(&self) -> Self {
        let w0: Vec<usize> = (1..=self.n).rev().collect();
        let values = self
            .values
            .keys()
            .map(|f| (f.clone(), self.value(&f.dual()).permute_z(&w0)))
            .collect();
        Self { values, ..*self }
    }
}

impl<C: Scalar> PartialEq for LocalizedClass<C> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<C: Scalar> fmt::Display for LocalizedClass<C> {
    /// One line per fixed point: `{1,3}: value`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (j, v)) in self.values.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{j}: {v}")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for LocalizedClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Whether `f` is `h` or `z_i - z_j + h` up to a constant.
fn is_unit_factor<C: Scalar>(f: &Polynomial<C>) -> bool {
    let u = f.universe();
    let h = Polynomial::h(u);
    let Some((_, monic)) = f.monic() else {
        return false;
    };
    if monic == h {
        return true;
    }
    let rest = &monic - &h;
    rest.len() == 2
        && rest.is_t_free()
        && !rest.involves(Var::H)
        && rest.total_degree() == Some(1)
        && rest.terms().iter().all(|(_, c)| c.abs_value().is_one())
        && rest.constant_value().is_none()
        && {
            let mut sum = C::zero();
            for (_, c) in rest.terms() {
                sum += c;
            }
            sum.is_zero()
        }
}

/// Whether a rational function, after cancellation, has only `h` and
/// `z_i - z_j + h` in its denominator.
pub fn has_unit_denominator<C: Scalar>(r: &RationalFunction<C>) -> bool {
    r.clone()
        .normalized()
        .denominator_factors()
        .iter()
        .all(|(f, _)| is_unit_factor(f))
}

/// The Euler classes at one fixed point, as lists of linear factors.
#[derive(Debug, Clone)]
pub struct EulerData<C: Scalar> {
    /// `Π_{u∈J, v∉J} (z_v - z_u)`, the tangent space of `Gr`.
    pub tangent_gr: Vec<Polynomial<C>>,
    /// `Π_{u∈J, v∉J} (z_v - z_u)(z_u - z_v + h)`, the tangent space of `T*Gr`.
    pub tangent_tgr: Vec<Polynomial<C>>,
    /// `e_h(γ*⊗γ)` at `J`: `Π_{a,b∈J} (z_a - z_b + h)`.
    pub e_h: Vec<Polynomial<C>>,
}

impl<C: Scalar> EulerData<C> {
    pub fn at(u: Universe, j: &SubsetIndex) -> Self {
        let z = |x: usize| Polynomial::<C>::z(u, x);
        let h = Polynomial::h(u);
        let mut tangent_gr = Vec::new();
        let mut tangent_tgr = Vec::new();
        for &a in j.elements() {
            for b in j.complement() {
                let d = z(b) - z(a);
                tangent_tgr.push(&h - &d);
                tangent_tgr.push(d.clone());
                tangent_gr.push(d);
            }
        }
        let mut e_h = Vec::new();
        for &a in j.elements() {
            for &b in j.elements() {
                e_h.push(&(z(a) - z(b)) + &h);
            }
        }
        Self {
            tangent_gr,
            tangent_tgr,
            e_h,
        }
    }

    pub fn product(factors: &[Polynomial<C>], u: Universe) -> Polynomial<C> {
        Polynomial::product(u, factors.iter())
    }
}

/// Restricts a polynomial symmetric in the `t`'s to every fixed point:
/// `t_a -> z_{j_a}` at `J`.
pub fn restrict<C: Scalar>(p: &Polynomial<C>) -> Result<LocalizedClass<C>> {
    p.check_symmetric_in_t()?;
    let u = p.universe();
    LocalizedClass::from_fn(u.k(), u.n(), |j| {
        Ok(RationalFunction::from_polynomial(p.at_point(j.elements())))
    })
}

/// `π_*` from the partial flag variety of shape `m` to `Gr`:
/// `sym_{S_k/S_m}(p / Π_{c>d} Π (t_a - t_b))`.
pub fn pushforward_pi<C: Scalar>(p: &Polynomial<C>, m: &ShapeVector) -> Result<Polynomial<C>> {
    check_block_symmetric(p, m)?;
    if m.m().len() <= 1 {
        return Ok(p.clone());
    }
    sym_cosets_cancelling(p, m)
}

/// `π_*(N_I)` restricted to the fixed points, by the projection formula: the
/// factors of `N_I` common to all `t`'s are evaluated directly and only the
/// remainder is pushed forward.
pub fn pushforward_n_restricted<C: Scalar>(i: &SubsetIndex) -> Result<LocalizedClass<C>> {
    let split = poly_n_split::<C>(i);
    let m = ShapeVector::new(i.blocks().m().to_vec());
    let kernel = pushforward_pi(&split.rest, &m)?;
    let u = Universe::new(i.k(), i.n())?;
    LocalizedClass::from_fn(i.k(), i.n(), |j| {
        let mut v = kernel.at_point(j.elements());
        for f in &split.common {
            if v.is_zero() {
                break;
            }
            v = &v * &f.at_point(j.elements());
        }
        debug_assert_eq!(v.universe(), u);
        Ok(RationalFunction::from_polynomial(v))
    })
}

/// `Σ_F α(F) / Π_{u∈F, v∉F} (z_v - z_u)`.
pub fn integrate_gr<C: Scalar>(c: &LocalizedClass<C>) -> Result<RationalFunction<C>> {
    integrate(c, |e| &e.tangent_gr)
}

/// `Σ_F α(F) / Π_{u∈F, v∉F} (z_v - z_u)(z_u - z_v + h)`.
pub fn integrate_tgr<C: Scalar>(c: &LocalizedClass<C>) -> Result<RationalFunction<C>> {
    integrate(c, |e| &e.tangent_tgr)
}

fn integrate<C, F>(c: &LocalizedClass<C>, pick: F) -> Result<RationalFunction<C>>
where
    C: Scalar,
    F: Fn(&EulerData<C>) -> &Vec<Polynomial<C>>,
{
    let u = c.universe();
    let mut acc = RationalFunction::zero(u);
    for (j, v) in c.values() {
        if v.is_zero() {
            continue;
        }
        let euler = EulerData::at(u, j);
        let mut term = v.clone();
        for f in pick(&euler) {
            term = term.div_polynomial(f)?;
        }
        acc = acc.checked_add(&term.normalized())?.normalized();
    }
    Ok(acc)
}

/// The action of a permutation `σ` of the `z`'s on a class:
/// `c^σ(F) = c(σ^{-1} F)|_{z_u -> z_{σ(u)}}`, with `sigma[u-1] = σ(u)`.
///
/// On a polynomial representative this is the substitution `z_u -> z_{σ(u)}`
/// with the `t`'s untouched; the fixed-point labels move because restriction
/// to `F` sets `t = z_F`.
pub fn sigma_action<C: Scalar>(c: &LocalizedClass<C>, sigma: &[usize]) -> LocalizedClass<C> {
    let mut inverse = vec![0; sigma.len()];
    for (u, &s) in sigma.iter().enumerate() {
        inverse[s - 1] = u + 1;
    }
    let values = c
        .values
        .keys()
        .map(|f| (f.clone(), c.value(&f.permuted(&inverse)).permute_z(sigma)))
        .collect();
    LocalizedClass { values, ..*c }
}

/// Splits off linear factors `z_u - z_v` (`u < v`) and `z_u - z_v + h`
/// (`u ≠ v`) by trial division; returns the factors and the cofactor.
fn split_linear_factors<C: Scalar>(p: &Polynomial<C>) -> (Vec<Polynomial<C>>, Polynomial<C>) {
    let u = p.universe();
    let n = u.n();
    let h = Polynomial::h(u);
    let mut candidates = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            let d = Polynomial::z(u, a) - Polynomial::z(u, b);
            if a < b {
                candidates.push(d.clone());
            }
            if a != b {
                candidates.push(&d + &h);
            }
        }
    }
    candidates.push(h);
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for f in candidates {
        while rest.total_degree().unwrap_or(0) > 0 {
            match rest.try_divide(&f) {
                Some(q) => {
                    rest = q;
                    factors.push(f.clone());
                }
                None => break,
            }
        }
    }
    (factors, rest)
}

/// `a / b` for a nonzero polynomial `b`, with `b` split into linear factors
/// where possible so that cancellation against `a` works factor by factor.
fn divide_by<C: Scalar>(a: &RationalFunction<C>, b: &Polynomial<C>) -> Result<RationalFunction<C>> {
    if b.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    let (factors, rest) = split_linear_factors(b);
    let mut out = a.div_polynomial(&rest)?;
    for f in &factors {
        out = out.div_polynomial(f)?;
    }
    Ok(out.normalized())
}

/// Coefficients of classes over a triangular basis.
///
/// `basis[J]` must vanish at every fixed point `F` not below `J` in the
/// dominance order and be nonzero polynomials at `F = J`. Returns `B` with
/// `classes[I] = Σ_J B[I][J] basis[J]`, indexed in linear order, found by
/// back-substitution from the top fixed point down.
pub fn expand_over_basis<C: Scalar>(
    classes: &[LocalizedClass<C>],
    basis: &[LocalizedClass<C>],
) -> Result<Vec<Vec<RationalFunction<C>>>> {
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    let order = linear_order(first.k(), first.n());
    let u = first.universe();
    let diagonal: Vec<Polynomial<C>> = order
        .iter()
        .enumerate()
        .map(|(p, f)| basis[p].value(f).to_polynomial())
        .collect::<Result<_>>()?;
    classes
        .par_iter()
        .map(|class| {
            let mut row = vec![RationalFunction::zero(u); order.len()];
            for (p, f) in order.iter().enumerate().rev() {
                let mut rem = class.value(f).clone();
                for q in p + 1..order.len() {
                    if row[q].is_zero() {
                        continue;
                    }
                    let s = basis[q].value(f);
                    if s.is_zero() {
                        continue;
                    }
                    rem = rem.checked_sub(&row[q].checked_mul(s)?)?;
                }
                row[p] = divide_by(&rem.normalized(), &diagonal[p])?;
            }
            Ok(row)
        })
        .collect()
}

/// The fixed-point data of `Gr(k, n)` needed for the classes of the theory.
pub struct Grassmannian<C: Scalar> {
    k: usize,
    n: usize,
    universe: Universe,
    points: Vec<SubsetIndex>,
    signs: SignConvention,
    /// `w[I][J] = W_I(z_J)`, positions in linear order.
    w: Vec<Vec<Polynomial<C>>>,
    /// `w_dual[I][J] = W̌_I(z_J)`.
    w_dual: Vec<Vec<Polynomial<C>>>,
    c: TransitionMatrix<C>,
    c_prime: TransitionMatrix<C>,
}

impl<C: Scalar> Grassmannian<C> {
    pub fn new(k: usize, n: usize, signs: SignConvention) -> Result<Self> {
        let universe = Universe::new(k, n)?;
        let points = linear_order(k, n);
        let table = |f: fn(&SubsetIndex, &SubsetIndex) -> Result<Polynomial<C>>| -> Result<Vec<Vec<Polynomial<C>>>> {
            points
                .par_iter()
                .map(|i| points.iter().map(|j| f(i, j)).collect())
                .collect()
        };
        let w = table(weight_w_at)?;
        let w_dual = table(weight_w_dual_at)?;
        let c = y_transition(k, n)?;
        let c_prime = invert_y_transition(k, n)?;
        Ok(Self {
            k,
            n,
            universe,
            points,
            signs,
            w,
            w_dual,
            c,
            c_prime,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Fixed points in linear order.
    pub fn points(&self) -> &[SubsetIndex] {
        &self.points
    }

    pub fn signs(&self) -> &SignConvention {
        &self.signs
    }

    pub fn sgn(&self, i: &SubsetIndex) -> i64 {
        self.signs.sgn(i)
    }

    pub fn c(&self) -> &TransitionMatrix<C> {
        &self.c
    }

    pub fn c_prime(&self) -> &TransitionMatrix<C> {
        &self.c_prime
    }

    fn position(&self, i: &SubsetIndex) -> Result<usize> {
        self.points.iter().position(|p| p == i).ok_or_else(|| {
            AlgebraError::InvalidSubset(format!(
                "{i} is not a fixed point of Gr({}, {})",
                self.k, self.n
            ))
        })
    }

    /// `W_I(z_J)`.
    pub fn w_value(&self, i: &SubsetIndex, j: &SubsetIndex) -> Result<&Polynomial<C>> {
        Ok(&self.w[self.position(i)?][self.position(j)?])
    }

    /// `W̌_I(z_J)`.
    pub fn w_dual_value(&self, i: &SubsetIndex, j: &SubsetIndex) -> Result<&Polynomial<C>> {
        Ok(&self.w_dual[self.position(i)?][self.position(j)?])
    }

    /// `Y_I(z_J) = Σ_K c_{IK} W_K(z_J)`.
    pub fn y_value(&self, i: &SubsetIndex, j: &SubsetIndex) -> Result<Polynomial<C>> {
        let pj = self.position(j)?;
        let mut acc = Polynomial::zero(self.universe);
        for (q, kk) in self.points.iter().enumerate() {
            let c = self.c.get(i, kk);
            if !c.is_zero() {
                acc = &acc + &self.w[q][pj].scale(c);
            }
        }
        Ok(acc)
    }

    /// `sgn(I) · value / e_h` at every fixed point.
    fn over_e_h<F>(&self, sign: i64, mut value: F) -> Result<LocalizedClass<C>>
    where
        F: FnMut(&SubsetIndex) -> Result<Polynomial<C>>,
    {
        let s = C::from_i64(sign);
        LocalizedClass::from_fn(self.k, self.n, |j| {
            let v = value(j)?.scale(&s);
            Ok(
                RationalFunction::from_factors(v, EulerData::<C>::at(self.universe, j).e_h)?
                    .normalized(),
            )
        })
    }

    /// `κ_I`, determined by `sgn(I) e_h κ_I = Y_I`.
    pub fn kappa(&self, i: &SubsetIndex) -> Result<LocalizedClass<C>> {
        self.over_e_h(self.sgn(i), |j| self.y_value(i, j))
    }

    /// `κ'_I`, determined by `sgn(I) e_h κ'_I = W_I`.
    pub fn kappa_prime(&self, i: &SubsetIndex) -> Result<LocalizedClass<C>> {
        self.over_e_h(self.sgn(i), |j| Ok(self.w_value(i, j)?.clone()))
    }

    /// `κ'_I = κ_I + Σ_{J<I} c'_{IJ} sgn(J)/sgn(I) κ_J`.
    pub fn kappa_prime_via_kappa(&self, i: &SubsetIndex) -> Result<LocalizedClass<C>> {
        let mut acc = self.kappa(i)?;
        for (j, c) in self.c_prime.row(i) {
            let ratio = C::from_i64(self.sgn(&j) * self.sgn(i));
            let mut coeff = c.clone();
            coeff *= &ratio;
            acc = acc.add(&self.kappa(&j)?.scale(&coeff))?;
        }
        Ok(acc)
    }

    /// `κ̌'_K`, determined by `sgn(K) e_h κ̌'_K = W̌_{Ǩ}`.
    pub fn kappa_prime_dual(&self, label: &SubsetIndex) -> Result<LocalizedClass<C>> {
        let i = label.dual();
        self.over_e_h(self.sgn(label), |j| Ok(self.w_dual_value(&i, j)?.clone()))
    }

    /// `κ̌_K`, by the dual route `sgn(K) e_h κ̌_K = Σ_L c_{KL} W̌_{Ľ}`.
    pub fn kappa_dual(&self, label: &SubsetIndex) -> Result<LocalizedClass<C>> {
        self.over_e_h(self.sgn(label), |j| {
            let mut acc = Polynomial::zero(self.universe);
            for l in &self.points {
                let c = self.c.get(label, l);
                if !c.is_zero() {
                    acc = &acc + &self.w_dual_value(&l.dual(), j)?.scale(c);
                }
            }
            Ok(acc)
        })
    }

    /// `[S_I]`, the restriction of the double Schur polynomial `Δ_I`.
    pub fn schubert_class(&self, i: &SubsetIndex) -> Result<LocalizedClass<C>> {
        LocalizedClass::from_fn(self.k, self.n, |j| {
            Ok(RationalFunction::from_polynomial(schur_delta_at(i, j)?))
        })
    }

    /// `[Š_I]`, the class of the Schubert variety for the opposite flag:
    /// [`schubert_class`](Self::schubert_class) mirrored by `u -> n+1-u`.
    pub fn opposite_schubert_class(&self, i: &SubsetIndex) -> Result<LocalizedClass<C>> {
        Ok(self.schubert_class(i)?.mirror())
    }

    /// `(sgn(I) κ'_I)_I` at the fixed point `F`, as a vector of `(C^2)^{⊗n}`.
    fn twisted_kappa_prime_vector(
        &self,
        classes: &[LocalizedClass<C>],
        f: &SubsetIndex,
    ) -> TensorVector<C> {
        let mut v = TensorVector::zero(self.n, self.universe);
        for (i, class) in self.points.iter().zip(classes) {
            v.add_term(i.clone(), class.value(f).scale(&C::from_i64(self.sgn(i))));
        }
        v
    }

    /// R-matrix covariance for the transposition `σ = (a, a+1)`: at every
    /// fixed point, the R-matrix applied to `(sgn(I) κ'_I)_I` equals
    /// `(sgn(I) κ'^σ_I)_I`. Returns the first failing `(I, F)`, if any.
    pub fn check_rmatrix_covariance(&self, a: usize) -> Result<Option<(SubsetIndex, SubsetIndex)>> {
        if a == 0 || a >= self.n {
            return Err(AlgebraError::InvalidPosition {
                position: a,
                n: self.n,
            });
        }
        let mut sigma: Vec<usize> = (1..=self.n).collect();
        sigma.swap(a - 1, a);
        let classes: Vec<LocalizedClass<C>> = self
            .points
            .iter()
            .map(|i| self.kappa_prime(i))
            .collect::<Result<_>>()?;
        let moved: Vec<LocalizedClass<C>> =
            classes.iter().map(|c| sigma_action(c, &sigma)).collect();
        for f in &self.points {
            let input = self.twisted_kappa_prime_vector(&classes, f);
            let output = r_matrix_apply(a, &input)?;
            let expected = self.twisted_kappa_prime_vector(&moved, f);
            for i in &self.points {
                if !output.coefficient(i).equals(&expected.coefficient(i)) {
                    return Ok(Some((i.clone(), f.clone())));
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type P = Polynomial<Rational>;

    fn s(n: usize, e: &[usize]) -> SubsetIndex {
        SubsetIndex::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn unit_factors() {
        let u = Universe::new(1, 3).unwrap();
        let h = P::h(u);
        assert!(is_unit_factor(&h));
        assert!(is_unit_factor(&(P::z(u, 1) - P::z(u, 3) + &h)));
        assert!(is_unit_factor(&(P::z(u, 3) - P::z(u, 1) - &h)));
        assert!(!is_unit_factor(&(P::z(u, 1) - P::z(u, 3))));
        assert!(!is_unit_factor(&(P::z(u, 1) + &h)));
    }

    #[test]
    fn sigma_action_moves_labels() {
        // κ'_{1} = z2 - t1 for k = 1, n = 2; swapping z's gives z1 - t1.
        let g = Grassmannian::<Rational>::new(1, 2, SignConvention::standard()).unwrap();
        let kp = g.kappa_prime(&s(2, &[1])).unwrap();
        let u = g.universe();
        let moved = sigma_action(&kp, &[2, 1]);
        let expected = restrict(&(P::z(u, 1) - P::t(u, 1))).unwrap();
        assert_eq!(moved, expected);
    }

    #[test]
    fn split_linear_factors_recovers_products() {
        let u = Universe::new(0, 3).unwrap();
        let h = P::h(u);
        let p = &(&(P::z(u, 2) - P::z(u, 1)) * &(P::z(u, 1) - P::z(u, 3) + &h)) * &h;
        let (factors, rest) = split_linear_factors(&p);
        assert_eq!(factors.len(), 3);
        assert!(rest.is_constant());
    }
}
