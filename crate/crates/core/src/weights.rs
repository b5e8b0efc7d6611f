//! Closed-form special functions: weight functions `W_I`, dual weight
//! functions `W̌_I`, the product `N_I`, the direct formula for `Y_I` and the
//! double Schur polynomials `Δ_I`.
//!
//! Every symmetrization of the form `sym_{S_k}(f / Π(t_a - t_b))` goes through
//! [`sym_over_vandermonde`]. Factors of `f` that are symmetric in all `t`'s are
//! split off first and multiplied back afterwards, which keeps `f` small.
//!
//! Besides the full polynomials this module offers exact shortcuts that avoid
//! expanding them: values at the fixed points `t = z_J` (only the permutations
//! whose terms do not vanish are summed), the `h`-leading part of `W_I`
//! (products truncated from the top `h`-degree down), and a certificate for
//! the R-matrix identity on the unsymmetrized kernel.

use crate::combinatorics::{permutation_sign, SubsetIndex};
use crate::error::{AlgebraError, Result};
use crate::poly::{Polynomial, Universe};
use crate::scalar::Scalar;
use crate::symmetrize::sym_over_vandermonde;

/// The ring `Q[t_1..t_k, z_1..z_n, h]` that `I`'s functions live in.
pub fn universe_of(i: &SubsetIndex) -> Universe {
    Universe::new(i.k(), i.n()).expect("a subset never has more elements than its ambient set")
}

fn linear<C: Scalar>(u: Universe, a: usize, z: usize, shift: bool) -> Polynomial<C> {
    let p = Polynomial::t(u, a) - Polynomial::z(u, z);
    if shift {
        p + Polynomial::h(u)
    } else {
        p
    }
}

/// `Π_a Π_{u ∈ zs} (t_a - z_u [+ h])`, a factor symmetric in all `t`'s.
fn symmetric_linear_product<C: Scalar>(
    u: Universe,
    zs: impl Iterator<Item = usize> + Clone,
    shift: bool,
) -> Polynomial<C> {
    let mut p = Polynomial::one(u);
    for a in 1..=u.k() {
        for z in zs.clone() {
            p = &p * &linear(u, a, z, shift);
        }
    }
    p
}

/// `Π_{a<b} (t_a - t_b + s·h)` for `s = ±1`.
fn shifted_vandermonde<C: Scalar>(u: Universe, sign: i64) -> Polynomial<C> {
    let h = Polynomial::h(u).scale(&C::from_i64(sign));
    let mut p = Polynomial::one(u);
    for a in 1..=u.k() {
        for b in a + 1..=u.k() {
            p = &p * &(Polynomial::t(u, a) - Polynomial::t(u, b) + &h);
        }
    }
    p
}

/// Shared shape of `W_I` and `W̌_I`:
/// `h^k sym( Π_a [Π_{u<i_a} (t_a-z_u+[lo]h) Π_{u>i_a} (t_a-z_u+[hi]h)] Π_{a<b} (t_a-t_b+s h)/(t_a-t_b) )`.
fn weight_like<C: Scalar>(i: &SubsetIndex, shift_below: bool, sign: i64) -> Result<Polynomial<C>> {
    let u = universe_of(i);
    let (k, n) = (i.k(), i.n());
    if k == 0 {
        return Ok(Polynomial::one(u));
    }
    let first = i.at(1);
    let last = i.at(k);
    // Variables below i_1 and above i_k enter every t_a the same way.
    let common = &symmetric_linear_product(u, 1..first, shift_below)
        * &symmetric_linear_product(u, last + 1..=n, !shift_below);
    let mut f = shifted_vandermonde(u, sign);
    for a in 1..=k {
        let ia = i.at(a);
        for z in first..ia {
            f = &f * &linear(u, a, z, shift_below);
        }
        for z in ia + 1..=last {
            f = &f * &linear(u, a, z, !shift_below);
        }
    }
    let s = sym_over_vandermonde(&f)?;
    Ok(&(&s * &common) * &Polynomial::h(u).pow(k as u32))
}

/// The weight function
/// `W_I = h^k sym_{S_k}( Π_a Π_{u<i_a}(t_a-z_u+h) Π_{u>i_a}(t_a-z_u) Π_{b>a} (t_a-t_b+h)/(t_a-t_b) )`.
pub fn weight_w<C: Scalar>(i: &SubsetIndex) -> Result<Polynomial<C>> {
    weight_like(i, true, 1)
}

/// The dual weight function
/// `W̌_I = h^k sym_{S_k}( Π_a Π_{u<i_a}(t_a-z_u) Π_{u>i_a}(t_a-z_u+h) Π_{b>a} (t_a-t_b-h)/(t_a-t_b) )`.
pub fn weight_w_dual<C: Scalar>(i: &SubsetIndex) -> Result<Polynomial<C>> {
    weight_like(i, false, -1)
}

/// `N_I = Π_{c>d} Π_{a∈I_c} Π_{b∈I_d} (t_a-t_b-h) · Π_a Π_{u≤i_â}(t_a-z_u+h) Π_{u>i_â}(t_a-z_u)`,
/// with `a`, `b` running over positions.
pub fn poly_n<C: Scalar>(i: &SubsetIndex) -> Polynomial<C> {
    let u = universe_of(i);
    let blocks = i.blocks();
    let h = Polynomial::h(u);
    let mut p = Polynomial::one(u);
    for a in 1..=i.k() {
        for b in 1..a {
            if blocks.block_of(a) != blocks.block_of(b) {
                p = &p * &(Polynomial::t(u, a) - Polynomial::t(u, b) - &h);
            }
        }
        let top = i.at(blocks.hat(a));
        for z in 1..=i.n() {
            p = &p * &linear(u, a, z, z <= top);
        }
    }
    p
}

/// `Y_I` from the closed formula
/// `(1/I!) sym_{S_k}[ Π_a ( Π_{u≤i_â}(t_a-z_u+h) Π_{b<a} (t_a-t_b-h)/(t_a-t_b)
///   - Π_{u≤i_â}(t_a-z_u) Π_{b<a} (t_a-t_b+h)/(t_a-t_b) ) Π_{u>i_â}(t_a-z_u) ]`.
pub fn y_via_formula<C: Scalar>(i: &SubsetIndex) -> Result<Polynomial<C>> {
    let u = universe_of(i);
    let k = i.k();
    if k == 0 {
        return Ok(Polynomial::one(u));
    }
    let blocks = i.blocks();
    let n = i.n();
    let last = i.at(k);
    let h = Polynomial::h(u);
    // Π_{u > i_k} (t_a - z_u) divides every factor.
    let common = symmetric_linear_product::<C>(u, last + 1..=n, false);
    let mut g = Polynomial::one(u);
    for a in 1..=k {
        let top = i.at(blocks.hat(a));
        let mut plus = Polynomial::one(u);
        let mut minus = Polynomial::one(u);
        for z in 1..=top {
            plus = &plus * &linear(u, a, z, true);
            minus = &minus * &linear(u, a, z, false);
        }
        for b in 1..a {
            let d = Polynomial::t(u, a) - Polynomial::t(u, b);
            plus = &plus * &(&d - &h);
            minus = &minus * &(&d + &h);
        }
        let mut q = &plus - &minus;
        for z in top + 1..=last {
            q = &q * &linear(u, a, z, false);
        }
        g = &g * &q;
    }
    // Π_{b<a} (t_a - t_b) = (-1)^{k(k-1)/2} Π_{a<b} (t_a - t_b).
    let mut scale = C::from_i64(blocks.factorial() as i64).recip();
    if (k * (k - 1) / 2) % 2 == 1 {
        scale = -scale;
    }
    let s = sym_over_vandermonde(&g)?;
    Ok(&s.scale(&scale) * &common)
}

/// The double Schur polynomial
/// `Δ_I = (-1)^{codim} det( Π_{u>i_α} (t_β - z_u) )_{α,β} / Π_{a<b} (t_a - t_b)`.
///
/// The determinant is the alternating sum of `Π_α f_α(t_α)`, so it shares the
/// symmetrization routine with the weight functions.
pub fn schur_delta<C: Scalar>(i: &SubsetIndex) -> Result<Polynomial<C>> {
    let u = universe_of(i);
    let k = i.k();
    if k == 0 {
        return Ok(Polynomial::one(u));
    }
    let last = i.at(k);
    let common = symmetric_linear_product::<C>(u, last + 1..=i.n(), false);
    let mut f = Polynomial::one(u);
    for a in 1..=k {
        for z in i.at(a) + 1..=last {
            f = &f * &linear(u, a, z, false);
        }
    }
    let s = &sym_over_vandermonde(&f)? * &common;
    Ok(if i.codim().is_multiple_of(2) { s } else { -s })
}

/// Outcome of the interpolation test for one pair `(I, J)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpolation<C: Scalar> {
    /// Whether `I ≥ J` in dominance order.
    pub dominates: bool,
    pub diagonal: bool,
    /// `W_I(z_J)` for `I ⋡ J`, where the lemma claims it vanishes.
    pub value: Option<Polynomial<C>>,
    /// `W_I(z_I)` as a product of linear factors, for `I = J`.
    pub factors: Option<Vec<Polynomial<C>>>,
}

impl<C: Scalar> Interpolation<C> {
    /// The lemma: the value vanishes when `I ⋡ J`, and is nonzero when `I = J`.
    pub fn holds(&self) -> bool {
        if let Some(f) = &self.factors {
            return f.iter().all(|p| !p.is_zero());
        }
        match &self.value {
            Some(v) if !self.dominates => v.is_zero(),
            _ => true,
        }
    }
}

/// Evaluates `W_I(z_J)` where the interpolation lemma makes a claim.
pub fn check_interpolation<C: Scalar>(
    i: &SubsetIndex,
    j: &SubsetIndex,
) -> Result<Interpolation<C>> {
    let dominates = j.dominance_leq(i)?;
    let diagonal = i == j;
    Ok(Interpolation {
        dominates,
        diagonal,
        value: if dominates {
            None
        } else {
            Some(weight_w_at(i, j)?)
        },
        factors: if diagonal {
            Some(weight_w_diagonal_factors(i))
        } else {
            None
        },
    })
}

/// `W_I(z_I)` as a list of linear factors.
///
/// Only the identity permutation survives at `t = z_I`, so the value is
/// `h^k Π_a Π_{u<i_a}(z_{i_a}-z_u+h) Π_{u>i_a}(z_{i_a}-z_u) Π_{a<b}(z_{i_a}-z_{i_b}+h)/(z_{i_a}-z_{i_b})`,
/// and each denominator cancels against the factor `u = i_b` of `t_a`.
pub fn weight_w_diagonal_factors<C: Scalar>(i: &SubsetIndex) -> Vec<Polynomial<C>> {
    let u = universe_of(i);
    let k = i.k();
    let h = Polynomial::h(u);
    let mut out: Vec<Polynomial<C>> = vec![h.clone(); k];
    let mut denominators = Vec::new();
    for f in kernel_factors(i, true) {
        out.push(f.at(u, i.at(f.a)));
    }
    for a in 1..=k {
        for b in a + 1..=k {
            let d = Polynomial::z(u, i.at(a)) - Polynomial::z(u, i.at(b));
            out.push(&d + &h);
            denominators.push(d);
        }
    }
    for d in denominators {
        let pos = out
            .iter()
            .position(|f| *f == d)
            .expect("every denominator cancels");
        out.swap_remove(pos);
    }
    out
}

/// A linear factor `t_a - z_u (+ h)` of an unsymmetrized kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct LinearFactor {
    a: usize,
    z: usize,
    shift: bool,
}

impl LinearFactor {
    fn polynomial<C: Scalar>(&self, u: Universe) -> Polynomial<C> {
        linear(u, self.a, self.z, self.shift)
    }

    /// Value at `t_a = z_x`.
    fn at<C: Scalar>(&self, u: Universe, x: usize) -> Polynomial<C> {
        let p = Polynomial::z(u, x) - Polynomial::z(u, self.z);
        if self.shift {
            p + Polynomial::h(u)
        } else {
            p
        }
    }

    fn swap_t(self, c: usize) -> Self {
        let a = if self.a == c {
            c + 1
        } else if self.a == c + 1 {
            c
        } else {
            self.a
        };
        Self { a, ..self }
    }

    fn swap_z(self, a: usize) -> Self {
        let z = if self.z == a {
            a + 1
        } else if self.z == a + 1 {
            a
        } else {
            self.z
        };
        Self { z, ..self }
    }
}

/// The `z`-dependent factors of the summand of `W_I` (`shift_below`) or of
/// `W̌_I` (`!shift_below`), over the whole range `u ≠ i_a`.
fn kernel_factors(i: &SubsetIndex, shift_below: bool) -> Vec<LinearFactor> {
    let mut out = Vec::new();
    for a in 1..=i.k() {
        let ia = i.at(a);
        for z in (1..=i.n()).filter(|&z| z != ia) {
            out.push(LinearFactor {
                a,
                z,
                shift: (z < ia) == shift_below,
            });
        }
    }
    out
}

/// Calls `visit` on every permutation `σ` (0-based) with `keep(a, σ(a))` for all `a`.
fn constrained_permutations(
    k: usize,
    keep: &dyn Fn(usize, usize) -> bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    fn go(
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        keep: &dyn Fn(usize, usize) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let a = perm.len();
        if a == k {
            visit(perm);
            return;
        }
        for b in 0..k {
            if !used[b] && keep(a, b) {
                used[b] = true;
                perm.push(b);
                go(k, perm, used, keep, visit);
                perm.pop();
                used[b] = false;
            }
        }
    }
    go(
        k,
        &mut Vec::with_capacity(k),
        &mut vec![false; k],
        keep,
        visit,
    );
}

/// `W_I(z_J)` (`shift_below`) or `W̌_I(z_J)`, keeping only the terms of
/// `h`-degree at least `min`.
fn weight_like_at<C: Scalar>(
    i: &SubsetIndex,
    j: &SubsetIndex,
    shift_below: bool,
    sign: i64,
    min: u32,
) -> Result<Polynomial<C>> {
    let u = universe_of(i);
    let k = i.k();
    if j.k() != k || j.n() != i.n() {
        return Err(AlgebraError::SubsetMismatch {
            left: i.to_string(),
            right: j.to_string(),
            reason: "different k or n".into(),
        });
    }
    let h = Polynomial::<C>::h(u);
    let shift = h.scale(&C::from_i64(sign));
    let factors = kernel_factors(i, shift_below);
    // An unshifted factor `t_a - z_u` kills the term that sends `t_a` to `z_u`.
    let keep = |a: usize, b: usize| {
        let (ia, jb) = (i.at(a + 1), j.at(b + 1));
        if shift_below {
            jb <= ia
        } else {
            jb >= ia
        }
    };
    // Every surviving term has denominator Π_{a<b}(x_a - x_b) = sgn(σ) V(z_J),
    // so the numerators are summed with signs and divided once. `V` is free
    // of `h`, so truncating in `h` commutes with the division; each factor has
    // `h`-degree at most one, so a partial product is cut down to the terms
    // that can still reach the floor.
    let floor = min.saturating_sub(k as u32);
    let shifted = factors.iter().filter(|f| f.shift).count() + k * k.saturating_sub(1) / 2;
    let mut acc = Polynomial::zero(u);
    constrained_permutations(k, &keep, &mut |perm| {
        let x: Vec<usize> = perm.iter().map(|&b| j.at(b + 1)).collect();
        let mut remaining = shifted as u32;
        let mut term = Polynomial::one(u);
        let mut multiply = |term: &mut Polynomial<C>, f: Polynomial<C>, is_shifted: bool| {
            remaining -= u32::from(is_shifted);
            *term = &*term * &f;
            if floor > remaining {
                *term = term.h_truncated(floor - remaining);
            }
        };
        for f in &factors {
            multiply(&mut term, f.at(u, x[f.a - 1]), f.shift);
        }
        for a in 0..k {
            for b in a + 1..k {
                multiply(
                    &mut term,
                    Polynomial::z(u, x[a]) - Polynomial::z(u, x[b]) + &shift,
                    true,
                );
            }
        }
        if permutation_sign(perm) > 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    });
    let mut vandermonde = Polynomial::one(u);
    for a in 1..=k {
        for b in a + 1..=k {
            vandermonde = &vandermonde * &(Polynomial::z(u, j.at(a)) - Polynomial::z(u, j.at(b)));
        }
    }
    let acc = if floor > 0 {
        acc.h_truncated(floor)
    } else {
        acc
    };
    Ok(&acc.exact_divide(&vandermonde)? * &h.pow(k as u32))
}

/// `W_I(t = z_J)`, summing only the permutations `σ` with `j_{σ(a)} ≤ i_a`;
/// every other term of the symmetrization contains a vanishing factor
/// `z_{j_σ(a)} - z_{j_σ(a)}`. When no permutation survives the value is 0.
pub fn weight_w_at<C: Scalar>(i: &SubsetIndex, j: &SubsetIndex) -> Result<Polynomial<C>> {
    weight_like_at(i, j, true, 1, 0)
}

/// The terms of `W_I(t = z_J)` of `h`-degree at least `min`, computed without
/// forming the lower-degree terms.
pub fn weight_w_at_h_truncated<C: Scalar>(
    i: &SubsetIndex,
    j: &SubsetIndex,
    min: u32,
) -> Result<Polynomial<C>> {
    weight_like_at(i, j, true, 1, min)
}

/// `W̌_I(t = z_J)`, summing only the permutations with `j_{σ(a)} ≥ i_a`.
pub fn weight_w_dual_at<C: Scalar>(i: &SubsetIndex, j: &SubsetIndex) -> Result<Polynomial<C>> {
    weight_like_at(i, j, false, -1, 0)
}

/// `h_leading(W_I)` without expanding `W_I`.
///
/// Every factor of the summand has `h`-degree at most one, so the summand's
/// `h`-degree is at most the number `D` of shifted factors. The product is
/// formed keeping only terms of `h`-degree `≥ D - w` (for `w = 0, 1, ...`),
/// which determines the coefficients of `h^{D-w}, ..., h^D` exactly; the first
/// degree whose coefficient survives symmetrization is the leading one.
pub fn weight_w_h_leading<C: Scalar>(i: &SubsetIndex) -> Result<(u32, Polynomial<C>)> {
    let u = universe_of(i);
    let k = i.k();
    let mut factors: Vec<(Polynomial<C>, bool)> = kernel_factors(i, true)
        .into_iter()
        .map(|f| (f.polynomial(u), f.shift))
        .collect();
    for a in 1..=k {
        for b in a + 1..=k {
            let d = Polynomial::t(u, a) - Polynomial::t(u, b) + Polynomial::h(u);
            factors.push((d, true));
        }
    }
    let top = factors.iter().filter(|(_, s)| *s).count() as u32;
    for w in 0..=top {
        let floor = top - w;
        let mut remaining = top;
        let mut acc = Polynomial::one(u);
        for (f, shifted) in &factors {
            if *shifted {
                remaining -= 1;
            }
            acc = (&acc * f).h_truncated(floor.saturating_sub(remaining));
        }
        let piece = acc.h_coefficient(floor);
        let s = sym_over_vandermonde(&piece)?;
        if !s.is_zero() {
            return Ok((floor + k as u32, s));
        }
    }
    Err(AlgebraError::ZeroPolynomial)
}

/// Removes the common part of several multisets of factors.
fn strip_common(lists: &mut [Vec<LinearFactor>]) {
    let first = lists[0].clone();
    for f in first {
        let everywhere = lists.iter().all(|l| l.contains(&f));
        if everywhere {
            for l in lists.iter_mut() {
                let pos = l.iter().position(|g| *g == f).expect("checked above");
                l.swap_remove(pos);
            }
        }
    }
}

/// `h P_I + x P_{I'} = (x + h) P_I|_{z_a <-> z_{a+1}}` with `x = z_{a+1} - z_a`,
/// where `P` is the product of the `z`-dependent factors of the summand.
fn kernel_identity<C: Scalar>(i: &SubsetIndex, other: &SubsetIndex, a: usize) -> bool {
    let u = universe_of(i);
    let swapped: Vec<LinearFactor> = kernel_factors(i, true)
        .into_iter()
        .map(|f| f.swap_z(a))
        .collect();
    let mut lists = [
        kernel_factors(i, true),
        kernel_factors(other, true),
        swapped,
    ];
    strip_common(&mut lists);
    let expand = |l: &[LinearFactor]| {
        Polynomial::product(
            u,
            &l.iter().map(|f| f.polynomial::<C>(u)).collect::<Vec<_>>(),
        )
    };
    let h = Polynomial::h(u);
    let x = Polynomial::z(u, a + 1) - Polynomial::z(u, a);
    let lhs = &(&h * &expand(&lists[0])) + &(&x * &expand(&lists[1]));
    let rhs = &(&x + &h) * &expand(&lists[2]);
    lhs == rhs
}

fn same_multiset(x: &[LinearFactor], y: &[LinearFactor]) -> bool {
    let mut lists = [x.to_vec(), y.to_vec()];
    strip_common(&mut lists);
    lists[0].is_empty() && lists[1].is_empty()
}

/// For `a, a+1 ∈ I` (at positions `c, c+1`) the identity says that `W_I` is
/// symmetric in `z_a, z_{a+1}`. The summand `F` is not, but `F + τF` is, `τ`
/// being the transposition `t_c <-> t_{c+1}`: the factors not involving both
/// `{t_c, t_{c+1}}` and `{z_a, z_{a+1}}` are invariant under `τ` and under the
/// swap, the remaining Vandermonde-type factors other than the `(c, c+1)` one
/// are permuted among themselves by `τ`, and what is left is
/// `((t_c-t_{c+1}+h) G - (t_{c+1}-t_c+h) τG) / (t_c-t_{c+1})`, whose numerator is
/// checked for the symmetry directly.
fn paired_identity<C: Scalar>(i: &SubsetIndex, a: usize) -> bool {
    let u = universe_of(i);
    let c = (1..=i.k()).find(|&c| i.at(c) == a).expect("a is in I");
    let (core, rest): (Vec<LinearFactor>, Vec<LinearFactor>) = kernel_factors(i, true)
        .into_iter()
        .partition(|f| (f.a == c || f.a == c + 1) && (f.z == a || f.z == a + 1));
    let tau: Vec<_> = rest.iter().map(|f| f.swap_t(c)).collect();
    let swapped: Vec<_> = rest.iter().map(|f| f.swap_z(a)).collect();
    if !same_multiset(&rest, &tau) || !same_multiset(&rest, &swapped) {
        return false;
    }
    let g = Polynomial::product(
        u,
        &core
            .iter()
            .map(|f| f.polynomial::<C>(u))
            .collect::<Vec<_>>(),
    );
    let tg = Polynomial::product(
        u,
        &core
            .iter()
            .map(|f| f.swap_t(c).polynomial::<C>(u))
            .collect::<Vec<_>>(),
    );
    let d = Polynomial::t(u, c) - Polynomial::t(u, c + 1);
    let h = Polynomial::h(u);
    let numerator = &(&(&d + &h) * &g) - &(&(&h - &d) * &tg);
    let mut sigma: Vec<usize> = (1..=i.n()).collect();
    sigma.swap(a - 1, a);
    numerator.permute_z(&sigma) == numerator
}

/// Exact certificate for both lines of the R-matrix identity for `W_I` at the
/// adjacent position `a`.
///
/// `W_I = h^k sym_{S_k}(S · P_I)` where `S = Π_{a<b}(t_a-t_b+h)/(t_a-t_b)` does
/// not depend on `I` or `z`, and `P_I` is a product of linear factors. The
/// symmetrizer is linear and commutes with the swap `z_a <-> z_{a+1}`, so the
/// identity for the kernels `P_I`, `P_{I'}` implies it for the weight
/// functions. Factors shared by the three kernels are cancelled before the
/// remainders are expanded. When both `a` and `a+1` lie in `I` the kernel
/// identity is false term by term and the paired form is certified instead.
pub fn rmatrix_kernel_certificate<C: Scalar>(i: &SubsetIndex, a: usize) -> Result<bool> {
    if a == 0 || a >= i.n() {
        return Err(AlgebraError::InvalidPosition {
            position: a,
            n: i.n(),
        });
    }
    if i.contains(a) && i.contains(a + 1) {
        return Ok(paired_identity::<C>(i, a));
    }
    let other = i.swapped(a);
    Ok(kernel_identity::<C>(i, &other, a) && kernel_identity::<C>(&other, i, a))
}

fn check_same_grid(i: &SubsetIndex, j: &SubsetIndex) -> Result<()> {
    if j.k() != i.k() || j.n() != i.n() {
        return Err(AlgebraError::SubsetMismatch {
            left: i.to_string(),
            right: j.to_string(),
            reason: "different k or n".into(),
        });
    }
    Ok(())
}

/// `Π_{a<b} (z_{j_a} - z_{j_b})`, the Vandermonde at `t = z_J`.
fn vandermonde_at<C: Scalar>(u: Universe, j: &SubsetIndex) -> Polynomial<C> {
    let mut v = Polynomial::one(u);
    for a in 1..=j.k() {
        for b in a + 1..=j.k() {
            v = &v * &(Polynomial::z(u, j.at(a)) - Polynomial::z(u, j.at(b)));
        }
    }
    v
}

/// `Δ_I(t = z_J)` from the bialternant: the determinant entry
/// `Π_{u>i_α}(z_{j_β} - z_u)` vanishes unless `j_β ≤ i_α`, so only the
/// permutations with `j_{σ(α)} ≤ i_α` contribute.
pub fn schur_delta_at<C: Scalar>(i: &SubsetIndex, j: &SubsetIndex) -> Result<Polynomial<C>> {
    check_same_grid(i, j)?;
    let u = universe_of(i);
    let k = i.k();
    let mut acc = Polynomial::zero(u);
    constrained_permutations(k, &|a, b| j.at(b + 1) <= i.at(a + 1), &mut |perm| {
        let mut term = Polynomial::one(u);
        for (a, &b) in perm.iter().enumerate() {
            let x = j.at(b + 1);
            for z in i.at(a + 1) + 1..=i.n() {
                term = &term * &(Polynomial::z(u, x) - Polynomial::z(u, z));
            }
        }
        if permutation_sign(perm) > 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    });
    let q = acc.exact_divide(&vandermonde_at(u, j))?;
    Ok(if i.codim().is_multiple_of(2) { q } else { -q })
}

/// `Y_I(t = z_J)` from the closed formula, term by term.
///
/// All `t`-differences share the denominator `Π_{b<a}(t_a - t_b)`, which at
/// `t = z_J` is `±` the Vandermonde of `z_J`; the factor `Π_{u>i_â}(t_a - z_u)`
/// kills every permutation with `j_{σ(a)} > i_â`.
pub fn y_via_formula_at<C: Scalar>(i: &SubsetIndex, j: &SubsetIndex) -> Result<Polynomial<C>> {
    check_same_grid(i, j)?;
    let u = universe_of(i);
    let k = i.k();
    if k == 0 {
        return Ok(Polynomial::one(u));
    }
    let blocks = i.blocks();
    let h = Polynomial::<C>::h(u);
    let top: Vec<usize> = (1..=k).map(|a| i.at(blocks.hat(a))).collect();
    let mut acc = Polynomial::zero(u);
    constrained_permutations(k, &|a, b| j.at(b + 1) <= top[a], &mut |perm| {
        let x: Vec<Polynomial<C>> = perm
            .iter()
            .map(|&b| Polynomial::z(u, j.at(b + 1)))
            .collect();
        let mut term = Polynomial::one(u);
        for a in 0..k {
            let mut plus = Polynomial::one(u);
            let mut minus = Polynomial::one(u);
            for z in 1..=top[a] {
                let d = &x[a] - &Polynomial::z(u, z);
                plus = &plus * &(&d + &h);
                minus = &minus * &d;
            }
            for xb in &x[..a] {
                let d = &x[a] - xb;
                plus = &plus * &(&d - &h);
                minus = &minus * &(&d + &h);
            }
            let mut q = &plus - &minus;
            for z in top[a] + 1..=i.n() {
                q = &q * &(&x[a] - &Polynomial::z(u, z));
            }
            term = &term * &q;
        }
        // Π_{b<a}(x_a - x_b) = sgn(σ) (-1)^{k(k-1)/2} V(z_J).
        if permutation_sign(perm) > 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    });
    let mut scale = C::from_i64(blocks.factorial() as i64).recip();
    if (k * (k - 1) / 2) % 2 == 1 {
        scale = -scale;
    }
    Ok(acc.exact_divide(&vandermonde_at(u, j))?.scale(&scale))
}

/// `N_I` split as `common · rest`, where `common` is the list of linear
/// factors shared by every `t_a` (so symmetric in all `t`'s):
/// `Π_a Π_{u ≤ i_{v(1)}}(t_a - z_u + h) Π_{u > i_k}(t_a - z_u)`.
///
/// By the projection formula the push-forward of `N_I` is
/// `common · sym_{S_k/S_m}(rest / Π_{c>d}(t_a - t_b))`, and `common` can be
/// evaluated at a fixed point factor by factor.
pub struct SplitN<C: Scalar> {
    pub common: Vec<Polynomial<C>>,
    pub rest: Polynomial<C>,
}

pub fn poly_n_split<C: Scalar>(i: &SubsetIndex) -> SplitN<C> {
    let u = universe_of(i);
    let k = i.k();
    if k == 0 {
        return SplitN {
            common: Vec::new(),
            rest: Polynomial::one(u),
        };
    }
    let blocks = i.blocks();
    let h = Polynomial::h(u);
    let low = i.at(blocks.v(1));
    let high = i.at(k);
    let mut common = Vec::new();
    let mut rest = Polynomial::one(u);
    for a in 1..=k {
        for b in 1..a {
            if blocks.block_of(a) != blocks.block_of(b) {
                rest = &rest * &(Polynomial::t(u, a) - Polynomial::t(u, b) - &h);
            }
        }
        let top = i.at(blocks.hat(a));
        for z in 1..=i.n() {
            let f = linear(u, a, z, z <= top);
            if z <= low || z > high {
                common.push(f);
            } else {
                rest = &rest * &f;
            }
        }
    }
    SplitN { common, rest }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::subsets;
    use crate::scalar::Rational;

    #[test]
    fn fixed_point_shortcuts_match_full_polynomials() {
        for n in 0..=4 {
            for k in 0..=n {
                for i in subsets(k, n) {
                    let delta = schur_delta::<Rational>(&i).unwrap();
                    let y = y_via_formula::<Rational>(&i).unwrap();
                    for j in subsets(k, n) {
                        let pts = j.elements();
                        assert_eq!(
                            schur_delta_at::<Rational>(&i, &j).unwrap(),
                            delta.at_point(pts),
                            "Δ{i} at {j}"
                        );
                        assert_eq!(
                            y_via_formula_at::<Rational>(&i, &j).unwrap(),
                            y.at_point(pts),
                            "Y{i} at {j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn split_n_multiplies_back() {
        for n in 1..=5 {
            for k in 1..=n.min(3) {
                for i in subsets(k, n) {
                    let split = poly_n_split::<Rational>(&i);
                    let u = universe_of(&i);
                    let whole = &Polynomial::product(u, split.common.iter()) * &split.rest;
                    assert_eq!(whole, poly_n::<Rational>(&i), "N{i}");
                }
            }
        }
    }
}
