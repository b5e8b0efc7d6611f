//! Seeded random self-test of the polynomial arithmetic, reported like a suite.

use std::time::Instant;

use conormal::poly::{Monomial, Polynomial, RationalFunction, Universe};
use conormal::verify::{CheckReport, Status, Witness};
use conormal::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type P = Polynomial<Rational>;

const ROUNDS: usize = 64;

fn random_polynomial(rng: &mut ChaCha8Rng, u: Universe) -> P {
    let terms = rng.gen_range(0..5);
    P::from_terms(
        u,
        (0..terms).map(|_| {
            let exps: Vec<u16> = (0..u.num_vars()).map(|_| rng.gen_range(0..3)).collect();
            (
                Monomial::from_exponents(&exps),
                Rational::from(rng.gen_range(-4i64..=4)),
            )
        }),
    )
}

fn failure(what: &str, a: &P, b: &P) -> Option<Witness> {
    Some(Witness {
        subsets: vec![format!("a = {a}"), format!("b = {b}")],
        fixed_point: None,
        expected: what.to_string(),
        actual: "violated".to_string(),
    })
}

fn round(rng: &mut ChaCha8Rng, u: Universe) -> Option<Witness> {
    let a = random_polynomial(rng, u);
    let b = random_polynomial(rng, u);
    let c = random_polynomial(rng, u);
    if &(&a * &b) * &c != &a * &(&b * &c) {
        return failure("associativity", &a, &b);
    }
    if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
        return failure("distributivity", &a, &b);
    }
    if &a * &b != &b * &a || &a + &b != &b + &a {
        return failure("commutativity", &a, &b);
    }
    if !b.is_zero() && (&a * &b).exact_divide(&b).ok() != Some(a.clone()) {
        return failure("(a b) / b = a", &a, &b);
    }
    if !b.is_zero() && !c.is_zero() {
        // a/b + c/b = (a + c)/b and (a c)/(b c) = a/b.
        let x = RationalFunction::new(a.clone(), b.clone()).ok()?;
        let y = RationalFunction::new(c.clone(), b.clone()).ok()?;
        let sum = x.checked_add(&y).ok()?;
        let direct = RationalFunction::new(&a + &c, b.clone()).ok()?;
        let expanded = RationalFunction::new(&a * &c, &b * &c).ok()?;
        if !sum.equals(&direct) || !expanded.equals(&x) {
            return failure("rational function equivalence", &a, &b);
        }
    }
    None
}

/// Runs the self-test; the report has `k`, `n` of the universe used.
pub fn run(seed: u64) -> CheckReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = Universe::new(2, 3).expect("2 <= 3");
    let witness = (0..ROUNDS).find_map(|_| round(&mut rng, u));
    CheckReport {
        check: "core-arithmetic".to_string(),
        k: u.k(),
        n: u.n(),
        status: if witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        witness,
        error: None,
        reason: None,
        millis: start.elapsed().as_millis() as u64,
    }
}
