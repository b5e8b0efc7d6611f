//! The `(C^2)^{⊗n}` side: basis vectors `v_J`, the lowering operators
//! `e_21^{(j)}`, the operators `Σ_j` and `Σ_I`, the coefficients `c_J` of `Y_I`
//! over the weight functions, and the R-matrix.
//!
//! `v_J` has `v_-` in the tensor factors listed in `J` and `v_+` elsewhere, so
//! `e_21^{(j)} v_J = v_{J ∪ {j}}` when `j ∉ J` and `0` otherwise.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{linear_order, SubsetIndex};
use crate::error::{AlgebraError, Result};
use crate::poly::{Polynomial, RationalFunction, Universe};
use crate::scalar::Scalar;
use crate::weights::weight_w;

/// A vector `Σ_J c_J v_J` of `(C^2)^{⊗n} ⊗ R`, with rational-function
/// coefficients in a fixed universe. Zero coefficients are never stored.
#[derive(Clone)]
pub struct TensorVector<C: Scalar> {
    n: usize,
    universe: Universe,
    components: BTreeMap<SubsetIndex, RationalFunction<C>>,
}

impl<C: Scalar> TensorVector<C> {
    pub fn zero(n: usize, universe: Universe) -> Self {
        Self {
            n,
            universe,
            components: BTreeMap::new(),
        }
    }

    /// `v_J` with coefficient 1.
    pub fn basis(j: &SubsetIndex, universe: Universe) -> Self {
        let mut v = Self::zero(j.n(), universe);
        v.add_term(j.clone(), RationalFunction::one(universe));
        v
    }

    /// `v_∅ = v_+ ⊗ ... ⊗ v_+`.
    pub fn vacuum(n: usize, universe: Universe) -> Self {
        Self::basis(&SubsetIndex::empty(n), universe)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn components(&self) -> &BTreeMap<SubsetIndex, RationalFunction<C>> {
        &self.components
    }

    pub fn coefficient(&self, j: &SubsetIndex) -> RationalFunction<C> {
        self.components
            .get(j)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.universe))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Adds `c v_J`.
    pub fn add_term(&mut self, j: SubsetIndex, c: RationalFunction<C>) {
        if c.is_zero() {
            return;
        }
        let sum = match self.components.remove(&j) {
            Some(old) => old
                .checked_add(&c)
                .expect("coefficients share the vector's universe")
                .normalized(),
            None => c,
        };
        if !sum.is_zero() {
            self.components.insert(j, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, c) in &other.components {
            out.add_term(j.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero(self.n, self.universe);
        for (j, c) in &self.components {
            out.add_term(j.clone(), c.scale(s));
        }
        out
    }

    /// `z_u -> z_{σ(u)}` in every coefficient; `sigma[u-1] = σ(u)`.
    pub fn permute_z(&self, sigma: &[usize]) -> Self {
        let mut out = Self::zero(self.n, self.universe);
        for (j, c) in &self.components {
            out.add_term(j.clone(), c.permute_z(sigma));
        }
        out
    }

    /// Componentwise equality of coefficients by cross-multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        let keys: std::collections::BTreeSet<&SubsetIndex> = self
            .components
            .keys()
            .chain(other.components.keys())
            .collect();
        keys.into_iter()
            .all(|j| self.coefficient(j).equals(&other.coefficient(j)))
    }

    fn check_position(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.n {
            return Err(AlgebraError::InvalidPosition {
                position: j,
                n: self.n,
            });
        }
        Ok(())
    }
}

impl<C: Scalar> PartialEq for TensorVector<C> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<C: Scalar> fmt::Display for TensorVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        for (idx, (j, c)) in self.components.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*v{j}")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for TensorVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `e_21^{(j)} v`.
pub fn apply_e21<C: Scalar>(j: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    v.check_position(j)?;
    let mut out = TensorVector::zero(v.n, v.universe);
    for (set, c) in &v.components {
        if !set.contains(j) {
            let raised = SubsetIndex::new(set.n(), set.elements().iter().copied().chain([j]))?;
            out.add_term(raised, c.clone());
        }
    }
    Ok(out)
}

/// `Σ_j v = (e_21^{(1)} + ... + e_21^{(j)}) v`.
pub fn apply_sigma_j<C: Scalar>(j: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    v.check_position(j)?;
    let mut out = TensorVector::zero(v.n, v.universe);
    for i in 1..=j {
        out = out.add(&apply_e21(i, v)?);
    }
    Ok(out)
}

/// The factors `(1/m_c!) Σ_{j_c}^{m_c}` of `Σ_I`, as pairs `(j_c, m_c)`.
///
/// `j_c` is the largest element `i_{v(c)}` of the block `I_c`. The operator
/// `Σ_j` is indexed by a tensor position, and the worked example
/// `Σ_{{2,4}} = (e^{(1)} + e^{(2)})(e^{(1)} + ... + e^{(4)})` pins it to the
/// block maximum rather than the position count `v(c)`.
pub fn sigma_factors(i: &SubsetIndex) -> Vec<(usize, usize)> {
    let blocks = i.blocks();
    (1..=blocks.len())
        .map(|c| (i.at(blocks.v(c)), blocks.m()[c - 1]))
        .collect()
}

/// In which order the factors of `Σ_I` are applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorOrder {
    /// Right to left as printed: the last block's factor acts first.
    AsPrinted,
    /// The first block's factor acts first.
    Reversed,
}

/// `Σ_I v`.
pub fn apply_sigma_i<C: Scalar>(
    i: &SubsetIndex,
    v: &TensorVector<C>,
    order: FactorOrder,
) -> Result<TensorVector<C>> {
    let mut factors = sigma_factors(i);
    if order == FactorOrder::AsPrinted {
        factors.reverse();
    }
    let mut out = v.clone();
    for (j, m) in factors {
        for _ in 0..m {
            out = apply_sigma_j(j, &out)?;
        }
        let mut fact = C::one();
        for r in 2..=m {
            fact *= &C::from_i64(r as i64);
        }
        out = out.scale(&fact.recip());
    }
    Ok(out)
}

/// The coefficients `c_J` of `Σ_I(v_∅) = Σ_J c_J v_J`.
pub fn y_coefficients<C: Scalar>(i: &SubsetIndex) -> Result<BTreeMap<SubsetIndex, C>> {
    let u = Universe::new(0, i.n())?;
    let v = apply_sigma_i(i, &TensorVector::vacuum(i.n(), u), FactorOrder::AsPrinted)?;
    v.components
        .iter()
        .map(|(j, c)| {
            let p = c.to_polynomial()?;
            let value = p.constant_value().ok_or_else(|| {
                AlgebraError::InvalidSubset(format!("coefficient of v{j} is not a constant: {p}"))
            })?;
            Ok((j.clone(), value))
        })
        .collect()
}

/// `Y_I = Σ_J c_J W_J`.
pub fn y_via_operators<C: Scalar>(i: &SubsetIndex) -> Result<Polynomial<C>> {
    y_via_operators_with(i, |j| weight_w(j))
}

/// `Σ_J c_J W_J` with the weight functions supplied by the caller (for caching).
pub fn y_via_operators_with<C, F>(i: &SubsetIndex, mut weight: F) -> Result<Polynomial<C>>
where
    C: Scalar,
    F: FnMut(&SubsetIndex) -> Result<Polynomial<C>>,
{
    let u = crate::weights::universe_of(i);
    let mut acc = Polynomial::zero(u);
    for (j, c) in y_coefficients::<C>(i)? {
        acc = &acc + &weight(&j)?.scale(&c);
    }
    Ok(acc)
}

/// `c_J` rendered as a combination of weight functions, e.g.
/// `2*W{1,2} + W{1,3}`.
pub fn y_as_w_combo<C: Scalar>(i: &SubsetIndex) -> Result<String> {
    let coefficients = y_coefficients::<C>(i)?;
    let mut out = String::new();
    for (idx, (j, c)) in coefficients.iter().enumerate() {
        let negative = c.is_negative();
        if idx > 0 {
            out.push_str(if negative { " - " } else { " + " });
        } else if negative {
            out.push('-');
        }
        let a = c.abs_value();
        if !a.is_one() {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(&format!("W{j}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

/// A square matrix indexed by the `k`-subsets of `{1..n}` in linear order.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix<C: Scalar> {
    order: Vec<SubsetIndex>,
    entries: Vec<Vec<C>>,
}

impl<C: Scalar> TransitionMatrix<C> {
    pub fn identity(k: usize, n: usize) -> Self {
        let order = linear_order(k, n);
        let size = order.len();
        let entries = (0..size)
            .map(|r| {
                (0..size)
                    .map(|c| if r == c { C::one() } else { C::zero() })
                    .collect()
            })
            .collect();
        Self { order, entries }
    }

    pub fn order(&self) -> &[SubsetIndex] {
        &self.order
    }

    fn position(&self, i: &SubsetIndex) -> usize {
        self.order
            .iter()
            .position(|x| x == i)
            .expect("subset belongs to this (k, n)")
    }

    /// The entry in row `I`, column `J`.
    pub fn get(&self, i: &SubsetIndex, j: &SubsetIndex) -> &C {
        &self.entries[self.position(i)][self.position(j)]
    }

    /// Nonzero off-diagonal entries of row `I`.
    pub fn row(&self, i: &SubsetIndex) -> Vec<(SubsetIndex, C)> {
        let r = self.position(i);
        self.order
            .iter()
            .zip(&self.entries[r])
            .filter(|(j, c)| *j != i && !c.is_zero())
            .map(|(j, c)| (j.clone(), c.clone()))
            .collect()
    }

    /// Lower triangular in linear order with ones on the diagonal.
    pub fn is_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(c, x)| match c.cmp(&r) {
                std::cmp::Ordering::Equal => x.is_one(),
                std::cmp::Ordering::Greater => x.is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// Every nonzero entry `(I, J)` has `J ≤ I` in dominance order.
    pub fn respects_dominance(&self) -> bool {
        self.order.iter().enumerate().all(|(r, i)| {
            self.order
                .iter()
                .enumerate()
                .all(|(c, j)| self.entries[r][c].is_zero() || j.leq(i))
        })
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(|x| x.is_integral())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let size = self.order.len();
        let entries = (0..size)
            .map(|r| {
                (0..size)
                    .map(|c| {
                        let mut acc = C::zero();
                        for m in 0..size {
                            let mut x = self.entries[r][m].clone();
                            x *= &other.entries[m][c];
                            acc += &x;
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Self {
            order: self.order.clone(),
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
        })
    }

    /// Inverse of a unitriangular matrix by forward substitution.
    pub fn unitriangular_inverse(&self) -> Result<Self> {
        if !self.is_unitriangular() {
            return Err(AlgebraError::SingularMatrix(
                "matrix is not unitriangular in linear order".into(),
            ));
        }
        let size = self.order.len();
        let mut inv: Vec<Vec<C>> = vec![vec![C::zero(); size]; size];
        for r in 0..size {
            inv[r][r] = C::one();
            for c in (0..r).rev() {
                // (L X)_{r,c} = X_{r,c} + Σ_{c ≤ m < r} L_{r,m} X_{m,c} = 0.
                let mut acc = C::zero();
                for (m, l) in self.entries[r].iter().enumerate().take(r).skip(c) {
                    let mut x = l.clone();
                    x *= &inv[m][c];
                    acc += &x;
                }
                inv[r][c] = -acc;
            }
        }
        Ok(Self {
            order: self.order.clone(),
            entries: inv,
        })
    }
}

/// `[c_{IJ}]`: row `I` holds the coefficients of `Y_I` over the `W_J`.
pub fn y_transition<C: Scalar>(k: usize, n: usize) -> Result<TransitionMatrix<C>> {
    let mut m = TransitionMatrix::identity(k, n);
    for r in 0..m.order.len() {
        let i = m.order[r].clone();
        m.entries[r][r] = C::zero();
        for (j, c) in y_coefficients::<C>(&i)? {
            let col = m.position(&j);
            m.entries[r][col] = c;
        }
    }
    Ok(m)
}

/// `[c'_{IJ}]`, the inverse of `[c_{IJ}]`: `W_I = Y_I + Σ_{J<I} c'_{IJ} Y_J`.
pub fn invert_y_transition<C: Scalar>(k: usize, n: usize) -> Result<TransitionMatrix<C>> {
    y_transition(k, n)?.unitriangular_inverse()
}

/// `x = z_{a+1} - z_a` and the R-matrix entries `h/(x+h)`, `x/(x+h)`.
fn r_entries<C: Scalar>(
    u: Universe,
    a: usize,
) -> Result<(RationalFunction<C>, RationalFunction<C>)> {
    let x = Polynomial::z(u, a + 1) - Polynomial::z(u, a);
    let den = &x + &Polynomial::h(u);
    let diag = RationalFunction::new(Polynomial::h(u), den.clone())?;
    let off = RationalFunction::new(x, den)?;
    Ok((diag, off))
}

/// `(h Id + (z_{a+1} - z_a) P^{(a,a+1)}) / (z_{a+1} - z_a + h)` applied to `v`.
pub fn r_matrix_apply<C: Scalar>(a: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    if a == 0 || a >= v.n {
        return Err(AlgebraError::InvalidPosition {
            position: a,
            n: v.n,
        });
    }
    let u = v.universe;
    if u.n() < a + 1 {
        return Err(AlgebraError::InvalidPosition {
            position: a,
            n: u.n(),
        });
    }
    let (diag, off) = r_entries::<C>(u, a)?;
    let mut out = TensorVector::zero(v.n, u);
    for (j, c) in &v.components {
        out.add_term(j.clone(), diag.checked_mul(c)?);
        out.add_term(j.swapped(a), off.checked_mul(c)?);
    }
    Ok(out)
}

/// Unitarity: applying the R-matrix, swapping `z_a <-> z_{a+1}`, applying it
/// again and swapping back returns `v`.
pub fn check_unitarity<C: Scalar>(a: usize, v: &TensorVector<C>) -> Result<bool> {
    let mut sigma: Vec<usize> = (1..=v.universe.n()).collect();
    if a == 0 || a >= sigma.len() {
        return Err(AlgebraError::InvalidPosition {
            position: a,
            n: v.n,
        });
    }
    sigma.swap(a - 1, a);
    let once = r_matrix_apply(a, v)?.permute_z(&sigma);
    let twice = r_matrix_apply(a, &once)?.permute_z(&sigma);
    Ok(twice.equals(v))
}

/// Both lines of the R-matrix identity for given `W_I`, `W_{I'}`:
/// `h W_I + x W_{I'} = (x + h) W_I|_{z_a <-> z_{a+1}}` and
/// `x W_I + h W_{I'} = (x + h) W_{I'}|_{z_a <-> z_{a+1}}`, with `x = z_{a+1} - z_a`,
/// i.e. the displayed identities after clearing the common denominator.
pub fn rmatrix_identity_holds<C: Scalar>(
    w_i: &Polynomial<C>,
    w_swapped: &Polynomial<C>,
    a: usize,
) -> bool {
    let u = w_i.universe();
    let mut sigma: Vec<usize> = (1..=u.n()).collect();
    sigma.swap(a - 1, a);
    let h = Polynomial::h(u);
    let x = Polynomial::z(u, a + 1) - Polynomial::z(u, a);
    let xh = &x + &h;
    let first = &(&h * w_i) + &(&x * w_swapped) == &xh * &w_i.permute_z(&sigma);
    let second = &(&x * w_i) + &(&h * w_swapped) == &xh * &w_swapped.permute_z(&sigma);
    first && second
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn s(n: usize, e: &[usize]) -> SubsetIndex {
        SubsetIndex::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn e21_raises_and_kills() {
        let u = Universe::new(0, 3).unwrap();
        let v = TensorVector::<Rational>::vacuum(3, u);
        let once = apply_e21(1, &v).unwrap();
        assert_eq!(once, TensorVector::basis(&s(3, &[1]), u));
        assert!(apply_e21(1, &once).unwrap().is_zero());
        assert!(apply_e21(4, &v).is_err());
    }

    #[test]
    fn sigma_factor_positions_follow_block_maxima() {
        assert_eq!(sigma_factors(&s(4, &[2, 4])), vec![(2, 1), (4, 1)]);
        assert_eq!(sigma_factors(&s(7, &[1, 2, 4, 5, 6])), vec![(2, 2), (6, 3)]);
    }

    #[test]
    fn empty_subset_gives_vacuum() {
        let c = y_coefficients::<Rational>(&SubsetIndex::empty(3)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&SubsetIndex::empty(3)], Rational::from(1));
    }
}
