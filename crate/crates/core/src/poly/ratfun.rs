use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::polynomial::Polynomial;
use super::universe::{Universe, Var};
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// Quotient of two polynomials.
///
/// The denominator is held as a multiset of monic, non-constant factors, so
/// sums use the least common multiple of the factor lists and cancellation is
/// a trial division per factor. Nothing is gcd-reduced beyond that; equality
/// is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFunction<C> {
    num: Polynomial<C>,
    den: Vec<(Polynomial<C>, u32)>,
}

/// A denominator as a list of distinct monic factors with multiplicities.
type Factors<C> = Vec<(Polynomial<C>, u32)>;
impl<C: Scalar> RationalFunction<C> {
    pub fn zero(universe: Universe) -> Self {
        Self::from_polynomial(Polynomial::zero(universe))
    }

    pub fn one(universe: Universe) -> Self {
        Self::from_polynomial(Polynomial::one(universe))
    }

    pub fn from_polynomial(num: Polynomial<C>) -> Self {
        Self {
            num,
            den: Vec::new(),
        }
    }

    pub fn new(num: Polynomial<C>, den: Polynomial<C>) -> Result<Self> {
        Self::from_factors(num, std::iter::once(den))
    }

    /// `num / (f_1 * f_2 * ...)`.
    pub fn from_factors<I>(num: Polynomial<C>, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Polynomial<C>>,
    {
        let mut out = Self::from_polynomial(num);
        for f in factors {
            out.num.universe().check_same(&f.universe())?;
            out.push_factor(f, 1)?;
        }
        if out.num.is_zero() {
            out.den.clear();
        }
        Ok(out)
    }

    fn push_factor(&mut self, f: Polynomial<C>, e: u32) -> Result<()> {
        let (lc, monic) = f.monic().ok_or(AlgebraError::DivisionByZero)?;
        let inv = lc.recip();
        for _ in 0..e {
            self.num = self.num.scale(&inv);
        }
        if monic.is_constant() {
            return Ok(());
        }
        match self.den.iter_mut().find(|(g, _)| *g == monic) {
            Some((_, m)) => *m += e,
            None => self.den.push((monic, e)),
        }
        Ok(())
    }

    pub fn universe(&self) -> Universe {
        self.num.universe()
    }

    pub fn numerator(&self) -> &Polynomial<C> {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(Polynomial<C>, u32)] {
        &self.den
    }

    /// The expanded denominator.
    pub fn denominator(&self) -> Polynomial<C> {
        let mut d = Polynomial::one(self.universe());
        for (f, e) in &self.den {
            d = &d * &f.pow(*e);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Least common multiple of two factor lists, with each side's cofactor.
    fn lcm_cofactors(&self, other: &Self) -> (Factors<C>, Polynomial<C>, Polynomial<C>) {
        let u = self.universe();
        let mut lcm = self.den.clone();
        for (g, e) in &other.den {
            match lcm.iter_mut().find(|(f, _)| f == g) {
                Some((_, m)) => *m = (*m).max(*e),
                None => lcm.push((g.clone(), *e)),
            }
        }
        let cofactor = |den: &[(Polynomial<C>, u32)]| {
            let mut c = Polynomial::one(u);
            for (f, e) in &lcm {
                let have = den.iter().find(|(g, _)| g == f).map_or(0, |(_, m)| *m);
                if *e > have {
                    c = &c * &f.pow(e - have);
                }
            }
            c
        };
        let ca = cofactor(&self.den);
        let cb = cofactor(&other.den);
        (lcm, ca, cb)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Result<Self> {
        self.universe().check_same(&other.universe())?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(if subtract {
                other.negated()
            } else {
                other.clone()
            });
        }
        let (lcm, ca, cb) = self.lcm_cofactors(other);
        let a = &self.num * &ca;
        let b = &other.num * &cb;
        let num = if subtract { &a - &b } else { &a + &b };
        let den = if num.is_zero() { Vec::new() } else { lcm };
        Ok(Self { num, den })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.universe().check_same(&other.universe())?;
        let num = &self.num * &other.num;
        if num.is_zero() {
            return Ok(Self::from_polynomial(num));
        }
        let mut den = self.den.clone();
        for (g, e) in &other.den {
            match den.iter_mut().find(|(f, _)| f == g) {
                Some((_, m)) => *m += e,
                None => den.push((g.clone(), *e)),
            }
        }
        Ok(Self { num, den })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.universe().check_same(&other.universe())?;
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut inv = Self::from_polynomial(other.denominator());
        inv.push_factor(other.num.clone(), 1)?;
        self.checked_mul(&inv)
    }

    pub fn mul_polynomial(&self, p: &Polynomial<C>) -> Self {
        let num = &self.num * p;
        let den = if num.is_zero() {
            Vec::new()
        } else {
            self.den.clone()
        };
        Self { num, den }
    }

    pub fn scale(&self, s: &C) -> Self {
        let num = self.num.scale(s);
        let den = if num.is_zero() {
            Vec::new()
        } else {
            self.den.clone()
        };
        Self { num, den }
    }

    pub fn negated(&self) -> Self {
        Self {
            num: self.num.negated(),
            den: self.den.clone(),
        }
    }

    /// Divides by `f` (a nonzero polynomial), cancelling against the numerator when possible.
    pub fn div_polynomial(&self, f: &Polynomial<C>) -> Result<Self> {
        let mut out = self.clone();
        out.push_factor(f.clone(), 1)?;
        Ok(out)
    }

    /// Cancels every denominator factor that divides the numerator, as often as it does.
    /// Monomial factors such as `h` and scalar content are covered by the same pass.
    pub fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        // Monomial factors (such as h) first, against the monomial content.
        for (f, e) in self.den.iter_mut() {
            if let Some((fm, _)) = f.as_monomial_term() {
                while *e > 0 && self.num.monomial_content().is_some_and(|c| fm.divides(&c)) {
                    self.num = self.num.div_monomial(fm);
                    *e -= 1;
                }
            }
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.try_divide(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
    }

    pub fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    /// Exact demotion to a polynomial. The quotient is multiplied back against
    /// the original denominator before it is returned.
    pub fn to_polynomial(&self) -> Result<Polynomial<C>> {
        if self.den.is_empty() {
            return Ok(self.num.clone());
        }
        let reduced = self.clone().normalized();
        if !reduced.den.is_empty() {
            let d = reduced.denominator();
            let (_, r) = reduced.num.div_rem(&d)?;
            return Err(AlgebraError::DivisionNotExact {
                remainder: r.to_string(),
            });
        }
        let q = reduced.num;
        if &q * &self.denominator() != self.num {
            return Err(AlgebraError::DivisionNotExact {
                remainder: "multiplication check failed".into(),
            });
        }
        Ok(q)
    }

    /// Equality by cross-multiplication over the common denominator.
    pub fn equals(&self, other: &Self) -> bool {
        if self.universe() != other.universe() {
            return false;
        }
        if self.den.is_empty() && other.den.is_empty() {
            return self.num == other.num;
        }
        let (_, ca, cb) = self.lcm_cofactors(other);
        &self.num * &ca == &other.num * &cb
    }

    fn map_parts<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&Polynomial<C>) -> Result<Polynomial<C>>,
    {
        let mut out = Self::from_polynomial(f(&self.num)?);
        for (g, e) in &self.den {
            out.push_factor(f(g)?, *e)?;
        }
        if out.num.is_zero() {
            out.den.clear();
        }
        Ok(out)
    }

    pub fn substitute(&self, assignment: &[(Var, Polynomial<C>)]) -> Result<Self> {
        self.map_parts(|p| p.substitute(assignment))
    }

    pub fn permute_t(&self, perm: &[usize]) -> Self {
        self.map_parts(|p| Ok(p.permute_t(perm)))
            .expect("permuting variables keeps denominators nonzero")
    }

    pub fn permute_z(&self, sigma: &[usize]) -> Self {
        self.map_parts(|p| Ok(p.permute_z(sigma)))
            .expect("permuting variables keeps denominators nonzero")
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Result<Self> {
        self.map_parts(|p| p.swap_vars(a, b))
    }

    /// `t_a -> z_{points[a-1]}`; fails if a denominator vanishes there.
    pub fn at_point(&self, points: &[usize]) -> Result<Self> {
        self.map_parts(|p| Ok(p.at_point(points)))
    }

    pub fn is_t_free(&self) -> bool {
        self.num.is_t_free() && self.den.iter().all(|(f, _)| f.is_t_free())
    }

    /// Highest `h`-degree of numerator minus that of the denominator.
    pub fn h_degree(&self) -> Option<i64> {
        let (dn, _) = self.num.h_leading().ok()?;
        let dd: i64 = self
            .den
            .iter()
            .map(|(f, e)| i64::from(f.h_leading().map(|(d, _)| d).unwrap_or(0)) * i64::from(*e))
            .sum();
        Some(i64::from(dn) - dd)
    }
}

impl<C: Scalar> PartialEq for RationalFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<C: Scalar> From<Polynomial<C>> for RationalFunction<C> {
    fn from(p: Polynomial<C>) -> Self {
        Self::from_polynomial(p)
    }
}

impl<C: Scalar> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        f.write_str(" / ")?;
        let single = self.den.len() == 1 && self.den[0].1 == 1;
        if !single {
            f.write_str("(")?;
        }
        for (i, (g, e)) in self.den.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if g.len() > 1 {
                write!(f, "({g})")?;
            } else {
                write!(f, "{g}")?;
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if !single {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction[{self}]")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Scalar> $trait<&RationalFunction<C>> for &RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $method(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
                self.$checked(rhs)
                    .expect("rational function operation failed")
            }
        }
        impl<C: Scalar> $trait<RationalFunction<C>> for RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $method(self, rhs: RationalFunction<C>) -> RationalFunction<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl<C: Scalar> Neg for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> RationalFunction<C> {
        self.negated()
    }
}
