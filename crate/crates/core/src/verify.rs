//! The verification driver: named suites of identities, each run for a range
//! of `(k, n)` and reported as one [`CheckReport`] per instance.
//!
//! Every suite is exhaustive over the subsets and fixed points of its
//! instance. Instances too large for exact expansion are reported as
//! explicit skips unless `large` is set.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{
    expand_over_basis, has_unit_denominator, integrate_gr, integrate_tgr, pushforward_n_restricted,
    Grassmannian, LocalizedClass, SignConvention,
};
use crate::combinatorics::{linear_order, SubsetIndex};
use crate::error::{AlgebraError, Result};
use crate::poly::{Polynomial, RationalFunction, Universe};
use crate::scalar::Scalar;
use crate::tensor::{
    apply_sigma_i, check_unitarity, rmatrix_identity_holds, y_coefficients, y_transition,
    y_via_operators_with, FactorOrder, TensorVector,
};
use crate::weights::{
    check_interpolation, poly_n_split, rmatrix_kernel_certificate, schur_delta, schur_delta_at,
    weight_w, weight_w_at, weight_w_at_h_truncated, weight_w_h_leading, y_via_formula,
    y_via_formula_at,
};

/// A named family of identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Interpolation,
    FreeBasis,
    Rmatrix,
    YConsistency,
    Pushforward,
    Leading,
    OrthogonalityGr,
    OrthogonalityTgr,
    KappaTriangularity,
    RmatrixCohomology,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Interpolation,
        Suite::FreeBasis,
        Suite::Rmatrix,
        Suite::YConsistency,
        Suite::Pushforward,
        Suite::Leading,
        Suite::OrthogonalityGr,
        Suite::OrthogonalityTgr,
        Suite::KappaTriangularity,
        Suite::RmatrixCohomology,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Interpolation => "interpolation",
            Suite::FreeBasis => "free-basis",
            Suite::Rmatrix => "rmatrix",
            Suite::YConsistency => "y-consistency",
            Suite::Pushforward => "pushforward",
            Suite::Leading => "leading",
            Suite::OrthogonalityGr => "orthogonality-gr",
            Suite::OrthogonalityTgr => "orthogonality-tgr",
            Suite::KappaTriangularity => "kappa-triangularity",
            Suite::RmatrixCohomology => "rmatrix-cohomology",
        }
    }

    /// Largest `n` run when no `--n-max` is given.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Interpolation
            | Suite::FreeBasis
            | Suite::Rmatrix
            | Suite::YConsistency
            | Suite::Leading => 6,
            Suite::Pushforward
            | Suite::OrthogonalityGr
            | Suite::OrthogonalityTgr
            | Suite::KappaTriangularity => 5,
            Suite::RmatrixCohomology => 4,
        }
    }

    /// Whether exact evaluation of `(k, n)` is within the default budget.
    /// The polynomial-level suites expand `W_I` and `Y_I` completely; the
    /// cohomology suites work with fixed-point tables of `Gr(k, n)`.
    fn feasible(self, k: usize, n: usize) -> std::result::Result<(), String> {
        match self {
            Suite::YConsistency if matches!((k, n), (5, 5) | (4, 6) | (5, 6) | (6, 6)) => Err(format!(
                "expanding Y_I and W_I in full for k = {k}, n = {n} exceeds the time and memory budget"
            )),
            Suite::Pushforward
            | Suite::OrthogonalityGr
            | Suite::OrthogonalityTgr
            | Suite::KappaTriangularity
            | Suite::RmatrixCohomology
                if n >= 6 && (3..=n - 2).contains(&k) =>
            {
                Err(format!(
                    "fixed-point tables for k = {k}, n = {n} exceed the default time budget"
                ))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// What failed, with canonical text forms of both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub subsets: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_point: Option<String>,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    fn new(
        subsets: &[&SubsetIndex],
        fixed_point: Option<&SubsetIndex>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Self {
            subsets: subsets.iter().map(|s| s.to_string()).collect(),
            fixed_point: fixed_point.map(|f| f.to_string()),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}", self.subsets.join(", "))?;
        if let Some(p) = &self.fixed_point {
            write!(f, " (fixed point {p})")?;
        }
        write!(f, ": expected {}, got {}", self.expected, self.actual)
    }
}

/// One `(suite, k, n)` outcome.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub k: usize,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// An algebraic operation failed outright (for example a division that
    /// must be exact left a remainder).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub millis: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Whether the failure is an algebraic contradiction rather than a
    /// mismatch of values.
    pub fn is_contradiction(&self) -> bool {
        self.error.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        let mut line = format!(
            "{status} {} k={} n={} ({} ms)",
            self.check, self.k, self.n, self.millis
        );
        if let Some(w) = &self.witness {
            line.push_str(&format!(" {w}"));
        }
        if let Some(e) = &self.error {
            line.push_str(&format!(" error: {e}"));
        }
        if let Some(r) = &self.reason {
            line.push_str(&format!(" skipped: {r}"));
        }
        line
    }
}

/// Which subset, if any, gets its sign flipped in each instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum SignFault {
    #[default]
    None,
    /// The bottom cell `{1..k}` of every instance.
    Bottom,
    /// A fixed subset, applied to the instances of its size.
    Subset(Vec<usize>),
}

impl SignFault {
    fn convention(&self, k: usize, n: usize) -> SignConvention {
        match self {
            SignFault::None => SignConvention::standard(),
            SignFault::Bottom => SignConvention::with_fault(SubsetIndex::bottom(k, n)),
            SignFault::Subset(e) => match SubsetIndex::new(n, e.iter().copied()) {
                Ok(i) if i.k() == k => SignConvention::with_fault(i),
                _ => SignConvention::standard(),
            },
        }
    }
}

/// Which instances to run.
#[derive(Debug, Clone, Default)]
pub struct Selection {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub k_max: Option<usize>,
    pub n_max: Option<usize>,
    /// Also run instances that are skipped by default.
    pub large: bool,
}

impl Selection {
    /// The `(k, n)` pairs for `suite`, ordered by `n` then `k`.
    pub fn instances(&self, suite: Suite) -> Vec<(usize, usize)> {
        let ns: Vec<usize> = match self.n {
            Some(n) => vec![n],
            None => (0..=self.n_max.unwrap_or_else(|| suite.default_n_max())).collect(),
        };
        let mut out = Vec::new();
        for n in ns {
            for k in 0..=n {
                if self.k.is_some_and(|kk| kk != k) || self.k_max.is_some_and(|m| k > m) {
                    continue;
                }
                out.push((k, n));
            }
        }
        out
    }
}

type Outcome = Result<Option<Witness>>;

type Cached<T> = Arc<OnceLock<std::result::Result<Arc<T>, AlgebraError>>>;

type Cache<K, T> = Mutex<HashMap<K, Cached<T>>>;

/// Runs suites, sharing expensive data (weight functions, fixed-point tables)
/// between them.
pub struct Engine<C: Scalar> {
    fault: SignFault,
    grids: Cache<(usize, usize), Grassmannian<C>>,
    weights: Cache<SubsetIndex, Polynomial<C>>,
}

fn cached<K, T, F>(map: &Cache<K, T>, key: K, make: F) -> Result<Arc<T>>
where
    K: std::hash::Hash + Eq,
    F: FnOnce() -> Result<T>,
{
    let cell = map
        .lock()
        .expect("cache lock")
        .entry(key)
        .or_default()
        .clone();
    cell.get_or_init(|| make().map(Arc::new)).clone()
}

impl<C: Scalar> Default for Engine<C> {
    fn default() -> Self {
        Self::new(SignFault::None)
    }
}

impl<C: Scalar> Engine<C> {
    pub fn new(fault: SignFault) -> Self {
        Self {
            fault,
            grids: Mutex::new(HashMap::new()),
            weights: Mutex::new(HashMap::new()),
        }
    }

    fn signs(&self, k: usize, n: usize) -> SignConvention {
        self.fault.convention(k, n)
    }

    /// Fixed-point data of `Gr(k, n)` under this engine's sign convention.
    pub fn grid(&self, k: usize, n: usize) -> Result<Arc<Grassmannian<C>>> {
        cached(&self.grids, (k, n), || {
            Grassmannian::new(k, n, self.signs(k, n))
        })
    }

    /// `W_I` in full.
    pub fn weight(&self, i: &SubsetIndex) -> Result<Arc<Polynomial<C>>> {
        cached(&self.weights, i.clone(), || weight_w(i))
    }

    /// Runs one instance.
    pub fn run(&self, suite: Suite, k: usize, n: usize, large: bool) -> CheckReport {
        let start = Instant::now();
        let mut report = CheckReport {
            check: suite.name().to_string(),
            k,
            n,
            status: Status::Pass,
            witness: None,
            error: None,
            reason: None,
            millis: 0,
        };
        if let (false, Err(reason)) = (large, suite.feasible(k, n)) {
            report.status = Status::Skip;
            report.reason = Some(reason);
            return report;
        }
        let outcome = match suite {
            Suite::Interpolation => self.interpolation(k, n),
            Suite::FreeBasis => self.free_basis(k, n),
            Suite::Rmatrix => self.rmatrix(k, n),
            Suite::YConsistency => self.y_consistency(k, n),
            Suite::Pushforward => self.pushforward(k, n),
            Suite::Leading => self.leading(k, n),
            Suite::OrthogonalityGr => self.orthogonality_gr(k, n),
            Suite::OrthogonalityTgr => self.orthogonality_tgr(k, n),
            Suite::KappaTriangularity => self.kappa_triangularity(k, n),
            Suite::RmatrixCohomology => self.rmatrix_cohomology(k, n),
        };
        match outcome {
            Ok(None) => {}
            Ok(Some(w)) => {
                report.status = Status::Fail;
                report.witness = Some(w);
            }
            Err(e) => {
                report.status = Status::Fail;
                report.error = Some(e.to_string());
            }
        }
        report.millis = start.elapsed().as_millis() as u64;
        report
    }

    /// Runs every selected instance of every suite, in parallel, and returns
    /// the reports in `(suite, n, k)` order.
    pub fn run_all(&self, suites: &[Suite], selection: &Selection) -> Vec<CheckReport> {
        let tasks: Vec<(Suite, usize, usize)> = suites
            .iter()
            .flat_map(|&s| {
                selection
                    .instances(s)
                    .into_iter()
                    .map(move |(k, n)| (s, k, n))
            })
            .collect();
        tasks
            .par_iter()
            .map(|&(s, k, n)| self.run(s, k, n, selection.large))
            .collect()
    }

    /// `W_I(z_J) = 0` for `I ⋡ J`, and `W_I(z_I) ≠ 0`.
    fn interpolation(&self, k: usize, n: usize) -> Outcome {
        let points = linear_order(k, n);
        let failures: Vec<Option<Witness>> = points
            .par_iter()
            .map(|i| {
                for j in &points {
                    let r = check_interpolation::<C>(i, j)?;
                    if !r.holds() {
                        let actual = match (&r.value, &r.factors) {
                            (Some(v), _) => v.to_string(),
                            (None, Some(f)) => format!("{f:?}"),
                            _ => String::new(),
                        };
                        let expected = if r.diagonal { "nonzero" } else { "0" };
                        return Ok(Some(Witness::new(&[i], Some(j), expected, actual)));
                    }
                }
                Ok(None)
            })
            .collect::<Result<_>>()?;
        Ok(failures.into_iter().flatten().next())
    }

    /// `[W_I(z_J)]` is triangular in linear order with nonzero diagonal;
    /// `[c]` is unitriangular, integral and supported on `J ≤ I`, and `[c']`
    /// is its exact integral inverse.
    fn free_basis(&self, k: usize, n: usize) -> Outcome {
        let points = linear_order(k, n);
        for (p, i) in points.iter().enumerate() {
            for (q, j) in points.iter().enumerate() {
                let v = weight_w_at::<C>(i, j)?;
                if q > p && !v.is_zero() {
                    return Ok(Some(Witness::new(&[i], Some(j), "0 above the diagonal", v)));
                }
                if q == p && v.is_zero() {
                    return Ok(Some(Witness::new(&[i], Some(j), "nonzero diagonal", v)));
                }
            }
        }
        let grid = self.grid(k, n)?;
        let (c, c_prime) = (grid.c(), grid.c_prime());
        let first = points
            .first()
            .expect("every Grassmannian has a fixed point");
        if !c.is_unitriangular() || !c.respects_dominance() {
            return Ok(Some(Witness::new(
                &[first],
                None,
                "unitriangular [c] supported on J <= I",
                format!("{c:?}"),
            )));
        }
        if !c.is_integral() || !c_prime.is_integral() {
            return Ok(Some(Witness::new(
                &[first],
                None,
                "integral [c] and [c']",
                format!("{c:?} / {c_prime:?}"),
            )));
        }
        let product = c.mul(c_prime);
        if !product.is_identity() || !c_prime.mul(c).is_identity() {
            return Ok(Some(Witness::new(
                &[first],
                None,
                "[c][c'] = 1",
                format!("{product:?}"),
            )));
        }
        Ok(None)
    }

    /// Both R-matrix identities, certified on the kernels for every `I` and
    /// adjacent position, and checked on the full polynomials where those are
    /// cheap; unitarity of the R-matrix on basis vectors for small `n`.
    fn rmatrix(&self, k: usize, n: usize) -> Outcome {
        let points = linear_order(k, n);
        let full = n <= 4 || k <= 2 || (k <= 3 && n <= 5);
        let failures: Vec<Option<Witness>> = points
            .par_iter()
            .map(|i| {
                for a in 1..n {
                    if !rmatrix_kernel_certificate::<C>(i, a)? {
                        return Ok(Some(Witness::new(
                            &[i, &i.swapped(a)],
                            None,
                            format!("kernel identity at a={a}"),
                            "violated",
                        )));
                    }
                    if full {
                        let other = i.swapped(a);
                        if !rmatrix_identity_holds(&*self.weight(i)?, &*self.weight(&other)?, a) {
                            return Ok(Some(Witness::new(
                                &[i, &other],
                                None,
                                format!("R-matrix identity at a={a}"),
                                "violated",
                            )));
                        }
                    }
                }
                Ok(None)
            })
            .collect::<Result<_>>()?;
        if let Some(w) = failures.into_iter().flatten().next() {
            return Ok(Some(w));
        }
        if n <= 4 {
            let u = Universe::new(k, n)?;
            for j in &points {
                for a in 1..n {
                    if !check_unitarity::<C>(a, &TensorVector::basis(j, u))? {
                        return Ok(Some(Witness::new(
                            &[j],
                            None,
                            format!("unitarity at a={a}"),
                            "violated",
                        )));
                    }
                }
            }
        }
        Ok(None)
    }

    /// `Σ_J c_J W_J` equals the closed formula for `Y_I`; the `c_J` are
    /// integers supported on `J ≤ I` with `c_I = 1`, and the factors of
    /// `Σ_I` commute.
    fn y_consistency(&self, k: usize, n: usize) -> Outcome {
        let points = linear_order(k, n);
        for i in &points {
            let c = y_coefficients::<C>(i)?;
            if c.get(i).is_none_or(|x| !x.is_one()) {
                return Ok(Some(Witness::new(
                    &[i],
                    None,
                    "c_I = 1",
                    format!("{:?}", c.get(i)),
                )));
            }
            for (j, x) in &c {
                if !j.leq(i) || !x.is_integral() {
                    return Ok(Some(Witness::new(
                        &[i, j],
                        None,
                        "integral c_J with J <= I",
                        x,
                    )));
                }
            }
            if n <= 4 {
                let u = Universe::new(0, n)?;
                let vacuum = TensorVector::<C>::vacuum(n, u);
                let printed = apply_sigma_i(i, &vacuum, FactorOrder::AsPrinted)?;
                let reversed = apply_sigma_i(i, &vacuum, FactorOrder::Reversed)?;
                if !printed.equals(&reversed) {
                    return Ok(Some(Witness::new(&[i], None, &printed, &reversed)));
                }
            }
        }
        let failures: Vec<Option<Witness>> = points
            .par_iter()
            .map(|i| {
                let ops = y_via_operators_with(i, |j| Ok((*self.weight(j)?).clone()))?;
                let formula = y_via_formula::<C>(i)?;
                Ok((ops != formula).then(|| Witness::new(&[i], None, &formula, &ops)))
            })
            .collect::<Result<_>>()?;
        Ok(failures.into_iter().flatten().next())
    }

    /// `π_*(N_I)` agrees with `Y_I` at every fixed point, for `Y_I` from the
    /// weight functions and (for `n <= 4`) from the closed formula;
    /// `N_I(t = z_J)` vanishes exactly when some `j_a > i_â`.
    fn pushforward(&self, k: usize, n: usize) -> Outcome {
        let grid = self.grid(k, n)?;
        let points = linear_order(k, n);
        let failures: Vec<Option<Witness>> = points
            .par_iter()
            .map(|i| {
                let pushed = pushforward_n_restricted::<C>(i)?;
                let split = poly_n_split::<C>(i);
                let blocks = i.blocks();
                for j in &points {
                    let value = pushed.value(j).to_polynomial()?;
                    let y = grid.y_value(i, j)?;
                    if value != y {
                        return Ok(Some(Witness::new(&[i], Some(j), &y, &value)));
                    }
                    // The closed formula for Y_I is an extra cross-check; its
                    // termwise evaluation grows too fast to run beyond n = 4.
                    if n <= 4 {
                        let formula = y_via_formula_at::<C>(i, j)?;
                        if value != formula {
                            return Ok(Some(Witness::new(&[i], Some(j), &formula, &value)));
                        }
                    }
                    let at = |p: &Polynomial<C>| p.at_point(j.elements());
                    let vanishes =
                        split.common.iter().any(|f| at(f).is_zero()) || at(&split.rest).is_zero();
                    let predicted = (1..=k).any(|a| j.at(a) > i.at(blocks.hat(a)));
                    if vanishes != predicted {
                        let say = |z: bool| if z { "N_I vanishes" } else { "N_I nonzero" };
                        return Ok(Some(Witness::new(
                            &[i],
                            Some(j),
                            say(predicted),
                            say(vanishes),
                        )));
                    }
                }
                Ok(None)
            })
            .collect::<Result<_>>()?;
        Ok(failures.into_iter().flatten().next())
    }

    /// `h_leading(W_I) = (k² + ℓ(I), sgn(I) Δ_I)`, and at every fixed point
    /// the top `h`-coefficient of `sgn(I) Y_I(z_J)` (the numerator of `κ_I(J)`
    /// over `e_h(z_J)`, which is monic of degree `k²` in `h`) sits in degree
    /// `k² + ℓ(I)` and equals `Δ_I(z_J)`.
    ///
    /// Only the part of `Y_I(z_J) = Σ_K c_IK W_K(z_J)` of `h`-degree at least
    /// `k² + ℓ(I)` matters, and truncation is linear, so each `W_K(z_J)` is
    /// kept from degree `k² + ℓ(K)` up (`K ≤ I` has `ℓ(K) ≤ ℓ(I)`). This
    /// avoids holding the full fixed-point tables.
    fn leading(&self, k: usize, n: usize) -> Outcome {
        let signs = self.signs(k, n);
        let c = y_transition::<C>(k, n)?;
        let points = linear_order(k, n);
        let floor = |j: &SubsetIndex| (k * k + j.length()) as u32;
        let tops: Vec<Vec<Polynomial<C>>> = points
            .par_iter()
            .map(|kk| {
                points
                    .iter()
                    .map(|j| weight_w_at_h_truncated::<C>(kk, j, floor(kk)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let failures: Vec<Option<Witness>> = points
            .par_iter()
            .map(|i| {
                let degree = floor(i);
                let sign = C::from_i64(signs.sgn(i));
                let (d, lead) = weight_w_h_leading::<C>(i)?;
                let expected = schur_delta::<C>(i)?.scale(&sign);
                if d != degree || lead != expected {
                    return Ok(Some(Witness::new(
                        &[i],
                        None,
                        format!("h^{degree} * ({expected})"),
                        format!("h^{d} * ({lead})"),
                    )));
                }
                let terms: Vec<(usize, &C)> = points
                    .iter()
                    .enumerate()
                    .map(|(q, kk)| (q, c.get(i, kk)))
                    .filter(|(_, coefficient)| !coefficient.is_zero())
                    .collect();
                if let Some(&(q, _)) = terms.iter().find(|(q, _)| floor(&points[*q]) > degree) {
                    return Ok(Some(Witness::new(
                        &[i, &points[q]],
                        None,
                        "c_IK = 0 unless K <= I",
                        "c_IK != 0",
                    )));
                }
                for (pj, j) in points.iter().enumerate() {
                    let mut y = Polynomial::zero(Universe::new(k, n)?);
                    for &(q, coefficient) in &terms {
                        y = &y + &tops[q][pj].h_truncated(degree).scale(coefficient);
                    }
                    let y = y.scale(&sign);
                    let above = y.h_truncated(degree + 1);
                    let top = y.h_coefficient(degree);
                    let delta = schur_delta_at::<C>(i, j)?;
                    if !above.is_zero() || top != delta {
                        return Ok(Some(Witness::new(
                            &[i],
                            Some(j),
                            format!("h^{degree} * ({delta}) + lower"),
                            format!("{above} + h^{degree} * ({top})"),
                        )));
                    }
                }
                Ok(None)
            })
            .collect::<Result<_>>()?;
        Ok(failures.into_iter().flatten().next())
    }

    /// `⟨[S_I], [Š_J̌]⟩ = δ_IJ`.
    fn orthogonality_gr(&self, k: usize, n: usize) -> Outcome {
        let grid = self.grid(k, n)?;
        let points = grid.points();
        let classes: Vec<_> = points
            .iter()
            .map(|i| grid.schubert_class(i))
            .collect::<Result<_>>()?;
        let duals: Vec<_> = points
            .iter()
            .map(|j| grid.opposite_schubert_class(&j.dual()))
            .collect::<Result<_>>()?;
        self.pairing_is_delta(grid.universe(), points, &classes, &duals, integrate_gr)
    }

    /// `⟨⟨κ'_I, κ̌'_J̌⟩⟩ = δ_IJ`.
    fn orthogonality_tgr(&self, k: usize, n: usize) -> Outcome {
        let grid = self.grid(k, n)?;
        let points = grid.points();
        let classes: Vec<_> = points
            .iter()
            .map(|i| grid.kappa_prime(i))
            .collect::<Result<_>>()?;
        let duals: Vec<_> = points
            .iter()
            .map(|j| grid.kappa_prime_dual(&j.dual()))
            .collect::<Result<_>>()?;
        self.pairing_is_delta(grid.universe(), points, &classes, &duals, integrate_tgr)
    }

    fn pairing_is_delta(
        &self,
        u: Universe,
        points: &[SubsetIndex],
        classes: &[LocalizedClass<C>],
        duals: &[LocalizedClass<C>],
        integrate: fn(&LocalizedClass<C>) -> Result<RationalFunction<C>>,
    ) -> Outcome {
        let pairs: Vec<(usize, usize)> = (0..points.len())
            .flat_map(|a| (0..points.len()).map(move |b| (a, b)))
            .collect();
        let failures: Vec<Option<Witness>> = pairs
            .par_iter()
            .map(|&(a, b)| {
                let value = integrate(&classes[a].mul(&duals[b])?)?;
                let expected = if a == b {
                    RationalFunction::one(u)
                } else {
                    RationalFunction::zero(u)
                };
                Ok((!value.equals(&expected))
                    .then(|| Witness::new(&[&points[a], &points[b]], None, &expected, &value)))
            })
            .collect::<Result<_>>()?;
        Ok(failures.into_iter().flatten().next())
    }

    /// `κ'_I` and `κ_I` over the Schubert basis: triangular with diagonal
    /// `Π_{a∈I, b∉I, b<a}(z_a - z_b + h)` and entries whose denominators are
    /// products of `z_i - z_j + h`. Also: both routes to `κ'_I` agree, and
    /// the dual classes are the mirrored ones.
    fn kappa_triangularity(&self, k: usize, n: usize) -> Outcome {
        let grid = self.grid(k, n)?;
        let points = grid.points();
        let u = grid.universe();
        let schubert: Vec<_> = points
            .iter()
            .map(|i| grid.schubert_class(i))
            .collect::<Result<_>>()?;
        let kappa_prime: Vec<_> = points
            .iter()
            .map(|i| grid.kappa_prime(i))
            .collect::<Result<_>>()?;
        let kappa: Vec<_> = points
            .iter()
            .map(|i| grid.kappa(i))
            .collect::<Result<_>>()?;
        for (p, i) in points.iter().enumerate() {
            let via = grid.kappa_prime_via_kappa(i)?;
            if let Some(f) = via.first_difference(&kappa_prime[p]) {
                return Ok(Some(Witness::new(
                    &[i],
                    Some(&f),
                    kappa_prime[p].value(&f),
                    via.value(&f),
                )));
            }
            let mirrored = kappa_prime[p].mirror();
            let dual = grid.kappa_prime_dual(i)?;
            if let Some(f) = dual.first_difference(&mirrored) {
                return Ok(Some(Witness::new(
                    &[i],
                    Some(&f),
                    mirrored.value(&f),
                    dual.value(&f),
                )));
            }
            let mirrored = kappa[p].mirror();
            let dual = grid.kappa_dual(i)?;
            if let Some(f) = dual.first_difference(&mirrored) {
                return Ok(Some(Witness::new(
                    &[i],
                    Some(&f),
                    mirrored.value(&f),
                    dual.value(&f),
                )));
            }
        }
        for classes in [&kappa_prime, &kappa] {
            let b = expand_over_basis(classes, &schubert)?;
            for (p, i) in points.iter().enumerate() {
                for (q, j) in points.iter().enumerate() {
                    let entry = &b[p][q];
                    if !entry.is_zero() && !j.leq(i) {
                        return Ok(Some(Witness::new(&[i, j], None, "0 outside J <= I", entry)));
                    }
                    if !has_unit_denominator(entry) {
                        return Ok(Some(Witness::new(
                            &[i, j],
                            None,
                            "denominator of (z_i - z_j + h) factors",
                            entry,
                        )));
                    }
                }
                let mut diagonal = Polynomial::one(u);
                for &a in i.elements() {
                    for b in i.complement().into_iter().filter(|&b| b < a) {
                        diagonal = &diagonal
                            * &(Polynomial::z(u, a) - Polynomial::z(u, b) + Polynomial::h(u));
                    }
                }
                let expected = RationalFunction::from_polynomial(diagonal);
                if !b[p][p].equals(&expected) {
                    return Ok(Some(Witness::new(&[i, i], None, &expected, &b[p][p])));
                }
            }
        }
        Ok(None)
    }

    /// The R-matrix maps `(sgn(I) κ'_I)_I` to `(sgn(I) κ'^σ_I)_I` for every
    /// adjacent transposition `σ`.
    fn rmatrix_cohomology(&self, k: usize, n: usize) -> Outcome {
        let grid = self.grid(k, n)?;
        for a in 1..n {
            if let Some((i, f)) = grid.check_rmatrix_covariance(a)? {
                let mut sigma: Vec<usize> = (1..=n).collect();
                sigma.swap(a - 1, a);
                let moved = crate::cohomology::sigma_action(&grid.kappa_prime(&i)?, &sigma);
                return Ok(Some(Witness::new(
                    &[&i],
                    Some(&f),
                    format!(
                        "sgn * kappa'^sigma = {} (a={a})",
                        moved.value(&f).scale(&C::from_i64(grid.sgn(&i)))
                    ),
                    "R-matrix image differs",
                )));
            }
        }
        Ok(None)
    }
}

/// Exit status for a finished run: 0 when everything passed or was skipped,
/// 3 when an algebraic operation failed, 1 for any other failure.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(CheckReport::is_contradiction) {
        3
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}
