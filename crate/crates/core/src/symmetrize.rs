//! Symmetrizers over the `t` variables: the full symmetrization over `S_k`,
//! the one over the block subgroup `S_m = S_{m_1} x ... x S_{m_l}`, and the
//! coset sum over `S_k / S_m`.
//!
//! Quotients by Vandermonde-type products are never summed fraction by
//! fraction. A sum `Σ_σ σ(f / V)` equals `A(f) / V` with `A` the
//! antisymmetrization; `A(f) / V` is read off directly as a combination of
//! Schur polynomials `s_{μ-δ}(t)`, one per strictly decreasing exponent
//! pattern `μ` of `f`, so neither the alternating sum nor the division is
//! materialized.

use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::combinatorics::{factorial, permutation_sign, permutations};
use crate::error::{AlgebraError, Result};
use crate::poly::{Monomial, Polynomial, RationalFunction, Universe};
use crate::scalar::Scalar;

/// Block shape `m = (m_1, ..., m_l)` for the `t` variables: block `c` holds the
/// consecutive positions `v(c-1)+1 ..= v(c)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeVector {
    m: Vec<usize>,
    v: Vec<usize>,
}

impl ShapeVector {
    pub fn new(m: Vec<usize>) -> Self {
        let mut v = vec![0];
        for &mc in &m {
            v.push(v.last().unwrap() + mc);
        }
        Self { m, v }
    }

    /// The shape `(k)`: a single block.
    pub fn single(k: usize) -> Self {
        Self::new(if k == 0 { Vec::new() } else { vec![k] })
    }

    /// The shape `(1, ..., 1)`.
    pub fn singletons(k: usize) -> Self {
        Self::new(vec![1; k])
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    pub fn k(&self) -> usize {
        *self.v.last().unwrap()
    }

    pub fn v(&self, c: usize) -> usize {
        self.v[c]
    }

    /// 0-based position ranges of the blocks.
    pub fn ranges(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.v.windows(2).map(|w| w[0]..w[1])
    }

    /// `|S_m| = m_1! ... m_l!`.
    pub fn order(&self) -> u64 {
        self.m.iter().map(|&m| factorial(m)).product()
    }

    /// Number of cosets `k! / (m_1! ... m_l!)`.
    pub fn coset_count(&self) -> u64 {
        factorial(self.k()) / self.order()
    }

    fn check_fits(&self, k: usize) -> Result<()> {
        if self.k() != k {
            return Err(AlgebraError::ShapeMismatch {
                shape: self.m.clone(),
                k,
            });
        }
        Ok(())
    }

    /// All permutations in `S_m` (0-based), with their signs.
    pub fn block_permutations(&self) -> Vec<(Vec<usize>, i64)> {
        let mut out = vec![(Vec::new(), 1i64)];
        for range in self.ranges() {
            let local = permutations(range.len());
            let mut next = Vec::with_capacity(out.len() * local.len());
            for (prefix, s) in &out {
                for (p, t) in &local {
                    let mut q = prefix.clone();
                    q.extend(p.iter().map(|&x| x + range.start));
                    next.push((q, s * t));
                }
            }
            out = next;
        }
        out
    }

    /// Representatives of the left cosets `σ S_m`: the permutations that are
    /// increasing on every block. Returned with their signs.
    pub fn coset_representatives(&self) -> Vec<(Vec<usize>, i64)> {
        let k = self.k();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; k];
        let mut used = vec![false; k];
        self.fill_block(0, &mut perm, &mut used, &mut out);
        out.into_iter()
            .map(|p| {
                let s = permutation_sign(&p);
                (p, s)
            })
            .collect()
    }

    fn fill_block(
        &self,
        c: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if c == self.m.len() {
            out.push(perm.clone());
            return;
        }
        let start = self.v[c];
        self.fill_position(c, start, 0, perm, used, out);
    }

    fn fill_position(
        &self,
        c: usize,
        pos: usize,
        min_value: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == self.v[c + 1] {
            self.fill_block(c + 1, perm, used, out);
            return;
        }
        for value in min_value..perm.len() {
            if !used[value] {
                used[value] = true;
                perm[pos] = value;
                self.fill_position(c, pos + 1, value + 1, perm, used, out);
                used[value] = false;
            }
        }
    }
}

/// Values that the symmetric group can act on through the `t` variables.
pub trait Symmetrizable<C: Scalar>: Clone + Send + Sync {
    fn universe(&self) -> Universe;

    /// `t_a -> t_{perm[a-1]+1}`.
    fn permute_t(&self, perm: &[usize]) -> Self;

    /// `Σ sign * self(t_σ)` over the given signed permutations.
    fn signed_orbit_sum(&self, perms: &[(Vec<usize>, i64)]) -> Result<Self>;

    fn scale(&self, s: &C) -> Self;

    fn is_invariant_under_t_swap(&self, a: usize) -> bool;
}

impl<C: Scalar> Symmetrizable<C> for Polynomial<C> {
    fn universe(&self) -> Universe {
        Polynomial::universe(self)
    }

    fn permute_t(&self, perm: &[usize]) -> Self {
        Polynomial::permute_t(self, perm)
    }

    fn signed_orbit_sum(&self, perms: &[(Vec<usize>, i64)]) -> Result<Self> {
        Ok(signed_orbit_sum(self, perms))
    }

    fn scale(&self, s: &C) -> Self {
        Polynomial::scale(self, s)
    }

    fn is_invariant_under_t_swap(&self, a: usize) -> bool {
        Polynomial::is_invariant_under_t_swap(self, a)
    }
}

impl<C: Scalar> Symmetrizable<C> for RationalFunction<C> {
    fn universe(&self) -> Universe {
        RationalFunction::universe(self)
    }

    fn permute_t(&self, perm: &[usize]) -> Self {
        RationalFunction::permute_t(self, perm)
    }

    /// Summed over the least common multiple of the permuted denominators,
    /// which is assembled once from the factor lists.
    fn signed_orbit_sum(&self, perms: &[(Vec<usize>, i64)]) -> Result<Self> {
        let mut acc = RationalFunction::zero(self.universe());
        for (p, s) in perms {
            let term = self.permute_t(p);
            acc = if *s > 0 {
                acc.checked_add(&term)?
            } else {
                acc.checked_sub(&term)?
            };
        }
        Ok(acc.normalized())
    }

    fn scale(&self, s: &C) -> Self {
        RationalFunction::scale(self, s)
    }

    fn is_invariant_under_t_swap(&self, a: usize) -> bool {
        let k = self.universe().k();
        let mut perm: Vec<usize> = (0..k).collect();
        perm.swap(a - 1, a);
        self.permute_t(&perm) == *self
    }
}

/// `Σ_σ sign(σ) p(t_σ)`; the orbit is split across threads and merged.
pub fn signed_orbit_sum<C: Scalar>(
    p: &Polynomial<C>,
    perms: &[(Vec<usize>, i64)],
) -> Polynomial<C> {
    let u = p.universe();
    let k = u.k();
    let nv = u.num_vars();
    let chunk = (perms.len() / rayon::current_num_threads().max(1)).max(1);
    let accumulate = |slice: &[(Vec<usize>, i64)]| {
        let mut acc: FxHashMap<Monomial, C> =
            FxHashMap::with_capacity_and_hasher(p.len(), Default::default());
        let mut target: SmallVec<[usize; 16]> = (0..nv).collect();
        for (perm, s) in slice {
            for a in 0..k {
                target[a + 1] = perm[a] + 1;
            }
            for (m, c) in p.terms() {
                let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, nv);
                for (slot, &e) in m.exponents().iter().enumerate() {
                    exps[target[slot]] = e;
                }
                let mm = Monomial::from_exponents(&exps);
                match acc.get_mut(&mm) {
                    Some(v) => {
                        if *s > 0 {
                            *v += c;
                        } else {
                            *v -= c;
                        }
                    }
                    None => {
                        acc.insert(mm, if *s > 0 { c.clone() } else { -c.clone() });
                    }
                }
            }
        }
        acc
    };
    let merged = perms
        .par_chunks(chunk)
        .map(accumulate)
        .reduce(FxHashMap::default, |mut a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            for (m, c) in small {
                match big.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        big.insert(m, c);
                    }
                }
            }
            a = big;
            a
        });
    Polynomial::from_terms(u, merged)
}

/// `sym_{S_k} f = Σ_{σ ∈ S_k} f(t_{σ(1)}, ..., t_{σ(k)})`.
pub fn sym_full<C: Scalar, F: Symmetrizable<C>>(f: &F) -> Result<F> {
    let perms: Vec<_> = permutations(f.universe().k())
        .into_iter()
        .map(|(p, _)| (p, 1))
        .collect();
    f.signed_orbit_sum(&perms)
}

/// `sym_{S_m} f`: the sum over permutations inside each block.
pub fn sym_blocks<C: Scalar, F: Symmetrizable<C>>(f: &F, m: &ShapeVector) -> Result<F> {
    m.check_fits(f.universe().k())?;
    let perms: Vec<_> = m
        .block_permutations()
        .into_iter()
        .map(|(p, _)| (p, 1))
        .collect();
    f.signed_orbit_sum(&perms)
}

/// Checks that `f` is symmetric within each block by testing the adjacent
/// transpositions inside the blocks, which generate `S_m`.
pub fn check_block_symmetric<C: Scalar, F: Symmetrizable<C>>(f: &F, m: &ShapeVector) -> Result<()> {
    m.check_fits(f.universe().k())?;
    for range in m.ranges() {
        for a in range.start + 1..range.end {
            if !f.is_invariant_under_t_swap(a) {
                return Err(AlgebraError::NotSymmetric {
                    transposition: format!("t{} <-> t{}", a, a + 1),
                });
            }
        }
    }
    Ok(())
}

/// `sym_{S_k/S_m} f = sym_{S_k} f / |S_m|` for `f` symmetric within blocks,
/// computed as a sum over coset representatives.
pub fn sym_cosets<C: Scalar, F: Symmetrizable<C>>(f: &F, m: &ShapeVector) -> Result<F> {
    check_block_symmetric(f, m)?;
    let perms: Vec<_> = m
        .coset_representatives()
        .into_iter()
        .map(|(p, _)| (p, 1))
        .collect();
    f.signed_orbit_sum(&perms)
}

/// `Π_{a<b} (t_a - t_b)`.
pub fn vandermonde<C: Scalar>(u: Universe) -> Polynomial<C> {
    let k = u.k();
    let mut v = Polynomial::one(u);
    for a in 1..=k {
        for b in a + 1..=k {
            v = &v * &(Polynomial::t(u, a) - Polynomial::t(u, b));
        }
    }
    v
}

/// Exact division by `Π_{a<b} (t_a - t_b)`, one linear factor at a time.
pub fn divide_by_vandermonde<C: Scalar>(p: &Polynomial<C>) -> Result<Polynomial<C>> {
    let u = p.universe();
    let k = u.k();
    let mut q = p.clone();
    for a in 1..=k {
        for b in a + 1..=k {
            q = q.exact_divide(&(Polynomial::t(u, a) - Polynomial::t(u, b)))?;
        }
    }
    Ok(q)
}

/// `sym_{S_k}( f / Π_{a<b}(t_a - t_b) ) = (Σ_σ sgn(σ) σ f) / Π_{a<b}(t_a - t_b)`.
///
/// Computed without forming the alternating sum: each monomial `t^α` of `f`
/// with distinct exponents contributes `±` to the alternant `a_μ`, `μ` being
/// `α` sorted decreasingly, and `a_μ / a_δ` is the Schur polynomial
/// `s_{μ-δ}`. The cost is one pass over `f` plus the size of the output.
pub fn sym_over_vandermonde<C: Scalar>(f: &Polynomial<C>) -> Result<Polynomial<C>> {
    let u = f.universe();
    let k = u.k();
    if k <= 1 {
        return Ok(f.clone());
    }
    let nv = u.num_vars();
    // Alternant coefficients, keyed by μ and the t-free part of the monomial.
    let mut alternants: FxHashMap<(TExps, Monomial), C> = FxHashMap::default();
    for (m, c) in f.terms() {
        let e = m.exponents();
        let mut mu: TExps = e[1..=k].iter().copied().collect();
        let mut inversions = 0usize;
        let mut repeated = false;
        for a in 0..k {
            for b in a + 1..k {
                match mu[a].cmp(&mu[b]) {
                    std::cmp::Ordering::Less => inversions += 1,
                    std::cmp::Ordering::Equal => repeated = true,
                    std::cmp::Ordering::Greater => {}
                }
            }
        }
        if repeated {
            continue;
        }
        mu.sort_unstable_by(|x, y| y.cmp(x));
        let mut rest: SmallVec<[u16; 16]> = e.iter().copied().collect();
        rest[1..=k].iter_mut().for_each(|x| *x = 0);
        let key = (mu, Monomial::from_exponents(&rest));
        let entry = alternants.entry(key).or_insert_with(C::zero);
        if inversions.is_multiple_of(2) {
            *entry += c;
        } else {
            *entry -= c;
        }
    }
    let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
    for ((mu, rest), c) in alternants {
        if c.is_zero() {
            continue;
        }
        let lambda: TExps = mu
            .iter()
            .enumerate()
            .map(|(a, &x)| x - (k - 1 - a) as u16)
            .collect();
        for (beta, kostka) in schur_terms(k, &lambda).iter() {
            let mut exps: SmallVec<[u16; 16]> = rest.exponents().iter().copied().collect();
            exps[1..=k].copy_from_slice(beta);
            debug_assert_eq!(exps.len(), nv);
            let mut coeff = C::from_i64(*kostka);
            coeff *= &c;
            let mono = Monomial::from_exponents(&exps);
            match acc.get_mut(&mono) {
                Some(v) => *v += &coeff,
                None => {
                    acc.insert(mono, coeff);
                }
            }
        }
    }
    Ok(Polynomial::from_terms(u, acc))
}

type TExps = SmallVec<[u16; 8]>;
type SchurTerms = Arc<Vec<(TExps, i64)>>;

/// Monomial expansion of the Schur polynomial `s_λ(t_1, ..., t_k)`, cached.
fn schur_terms(k: usize, lambda: &[u16]) -> SchurTerms {
    static CACHE: OnceLock<Mutex<FxHashMap<(usize, TExps), SchurTerms>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (k, TExps::from_slice(lambda));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    // Bialternant a_{λ+δ} / a_δ over the integers.
    let u = Universe::new(k, k).expect("k <= k");
    let nv = u.num_vars();
    let mut alternant: Vec<(Monomial, BigRational)> = Vec::new();
    for (p, s) in permutations(k) {
        let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, nv);
        for a in 0..k {
            exps[1 + p[a]] = lambda[a] + (k - 1 - a) as u16;
        }
        alternant.push((
            Monomial::from_exponents(&exps),
            BigRational::from_integer(s.into()),
        ));
    }
    let quotient = divide_by_vandermonde(&Polynomial::from_terms(u, alternant))
        .expect("an alternant is divisible by the Vandermonde product");
    let terms: Vec<(TExps, i64)> = quotient
        .terms()
        .iter()
        .map(|(m, c)| {
            let kostka = c.to_integer().to_i64().expect("Kostka numbers fit in i64");
            (TExps::from_slice(&m.exponents()[1..=k]), kostka)
        })
        .collect();
    let terms = Arc::new(terms);
    cache.lock().unwrap().insert(key, terms.clone());
    terms
}

/// The push-forward kernel: `sym_{S_k/S_m}` of
/// `numerator / Π_{c>d} Π_{a ∈ block c} Π_{b ∈ block d} (t_a - t_b)`,
/// demoted to a polynomial.
///
/// The quotient is rewritten over the full Vandermonde by multiplying with the
/// within-block one, so that
/// `sym_{S_k/S_m}(f / D) = ± sym_{S_k}(f V_m / V) / |S_m|`.
pub fn sym_cosets_cancelling<C: Scalar>(
    numerator: &Polynomial<C>,
    m: &ShapeVector,
) -> Result<Polynomial<C>> {
    let u = numerator.universe();
    let k = u.k();
    m.check_fits(k)?;
    // Π_{c>d} (t_a - t_b) = (-1)^{Σ_{c<d} m_c m_d} Π over cross-block pairs a<b.
    let mut cross = 0usize;
    for c in 0..m.m().len() {
        for d in c + 1..m.m().len() {
            cross += m.m()[c] * m.m()[d];
        }
    }
    let mut within = Polynomial::one(u);
    for range in m.ranges() {
        for a in range.clone() {
            for b in a + 1..range.end {
                within = &within * &(Polynomial::t(u, a + 1) - Polynomial::t(u, b + 1));
            }
        }
    }
    let q = sym_over_vandermonde(&(numerator * &within))?;
    let mut scale = C::from_i64(m.order() as i64).recip();
    if cross % 2 == 1 {
        scale = -scale;
    }
    Ok(q.scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    #[test]
    fn coset_representatives_count() {
        for m in [
            vec![2, 1],
            vec![1, 1, 1],
            vec![3],
            vec![2, 2],
            vec![1, 2, 1],
        ] {
            let s = ShapeVector::new(m);
            assert_eq!(s.coset_representatives().len() as u64, s.coset_count());
            assert_eq!(s.block_permutations().len() as u64, s.order());
        }
    }

    #[test]
    fn sym_full_of_t1() {
        let u = Universe::new(2, 2).unwrap();
        let t1 = P::t(u, 1);
        assert_eq!(sym_full(&t1).unwrap(), P::t(u, 1) + P::t(u, 2));
    }

    #[test]
    fn sym_blocks_first_block_only() {
        let u = Universe::new(3, 3).unwrap();
        let s = sym_blocks(&P::t(u, 1), &ShapeVector::new(vec![2, 1])).unwrap();
        assert_eq!(s, P::t(u, 1) + P::t(u, 2));
    }

    #[test]
    fn sym_cosets_rejects_asymmetric_input() {
        let u = Universe::new(2, 2).unwrap();
        assert!(sym_cosets(&P::t(u, 1), &ShapeVector::single(2)).is_err());
    }

    #[test]
    fn pushforward_kernel_of_one_vanishes() {
        let u = Universe::new(2, 4).unwrap();
        let q = sym_cosets_cancelling(&P::one(u), &ShapeVector::singletons(2)).unwrap();
        assert!(q.is_zero());
    }
}
