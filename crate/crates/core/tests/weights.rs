//! Weight functions, `Y_I`, `Δ_I` and the fixed-point shortcuts, checked
//! against direct computations.

use conormal::combinatorics::{subsets, SubsetIndex};
use conormal::poly::{Polynomial, RationalFunction, Universe};
use conormal::tensor::{rmatrix_identity_holds, y_via_operators};
use conormal::weights::{
    check_interpolation, rmatrix_kernel_certificate, schur_delta, schur_delta_at, universe_of,
    weight_w, weight_w_at, weight_w_at_h_truncated, weight_w_dual, weight_w_dual_at,
    weight_w_h_leading, y_via_formula, y_via_formula_at,
};
use conormal::{Poly, Rational};
use num_bigint::BigInt;
use num_rational::BigRational;

fn s(n: usize, e: &[usize]) -> SubsetIndex {
    SubsetIndex::new(n, e.iter().copied()).unwrap()
}

fn all_subsets(n_max: usize) -> impl Iterator<Item = SubsetIndex> {
    (0..=n_max).flat_map(|n| (0..=n).flat_map(move |k| subsets(k, n)))
}

/// Every subset with `n <= 4`, and those with `k <= 2` for `n = 5`: the sizes
/// at which full weight-function polynomials stay small.
fn small_subsets() -> impl Iterator<Item = SubsetIndex> {
    all_subsets(4).chain((0..=2).flat_map(|k| subsets(k, 5)))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k);
            out.push(q);
        }
    }
    out
}

/// `h^k Sym_{S_k}` of the defining product, summed as rational functions.
fn weight_by_definition(i: &SubsetIndex) -> Poly {
    let (k, n) = (i.k(), i.n());
    let u = Universe::new(k, n).unwrap();
    let (t, z, h) = (|a| Poly::t(u, a), |v| Poly::z(u, v), Poly::h(u));
    let mut total = RationalFunction::zero(u);
    for perm in permutations(k) {
        let ta = |a: usize| t(perm[a - 1]);
        let mut num = Poly::one(u);
        let mut den = Poly::one(u);
        for a in 1..=k {
            for v in 1..i.at(a) {
                num = &num * &(&(ta(a) - z(v)) + &h);
            }
            for v in i.at(a) + 1..=n {
                num = &num * &(ta(a) - z(v));
            }
            for b in a + 1..=k {
                num = &num * &(&(ta(a) - ta(b)) + &h);
                den = &den * &(ta(a) - ta(b));
            }
        }
        total = total
            .checked_add(&RationalFunction::new(num, den).unwrap())
            .unwrap();
    }
    &total.to_polynomial().unwrap() * &h.pow(k as u32)
}

#[test]
fn weight_functions_match_the_symmetrized_product() {
    for i in all_subsets(4) {
        assert_eq!(
            weight_w::<Rational>(&i).unwrap(),
            weight_by_definition(&i),
            "W{i}"
        );
    }
    for i in subsets(3, 5) {
        assert_eq!(
            weight_w::<Rational>(&i).unwrap(),
            weight_by_definition(&i),
            "W{i}"
        );
    }
}

#[test]
fn single_point_weight_functions() {
    // k = 1: W_{i} = h Π_{u<i} (t1 - z_u + h) Π_{u>i} (t1 - z_u).
    for n in 1..=6 {
        let u = Universe::new(1, n).unwrap();
        for i in 1..=n {
            let mut expected = Poly::h(u);
            for v in 1..=n {
                let factor = Poly::t(u, 1) - Poly::z(u, v);
                expected = match v.cmp(&i) {
                    std::cmp::Ordering::Less => &expected * &(&factor + &Poly::h(u)),
                    std::cmp::Ordering::Greater => &expected * &factor,
                    std::cmp::Ordering::Equal => expected,
                };
            }
            assert_eq!(weight_w::<Rational>(&s(n, &[i])).unwrap(), expected);
        }
    }
    assert_eq!(
        weight_w::<Rational>(&s(2, &[1])).unwrap().to_string(),
        "h*t1 - h*z2"
    );
}

#[test]
fn dual_weight_functions_reverse_the_equivariant_variables() {
    for i in small_subsets() {
        let reversed: Vec<usize> = (1..=i.n()).rev().collect();
        let expected = weight_w::<Rational>(&i.dual())
            .unwrap()
            .permute_z(&reversed);
        assert_eq!(weight_w_dual::<Rational>(&i).unwrap(), expected, "W̌{i}");
    }
}

#[test]
fn interpolation_property() {
    for i in small_subsets() {
        for j in subsets(i.k(), i.n()) {
            let w = weight_w::<Rational>(&i).unwrap().at_point(j.elements());
            if j.leq(&i) {
                if j == i {
                    assert!(!w.is_zero(), "W{i} vanishes at its own point");
                }
            } else {
                assert!(w.is_zero(), "W{i} at {j}");
            }
            assert!(check_interpolation::<Rational>(&i, &j).unwrap().holds());
        }
    }
}

#[test]
fn fixed_point_shortcuts_match_substitution() {
    for i in all_subsets(4) {
        let w = weight_w::<Rational>(&i).unwrap();
        let w_dual = weight_w_dual::<Rational>(&i).unwrap();
        let delta = schur_delta::<Rational>(&i).unwrap();
        let y = y_via_formula::<Rational>(&i).unwrap();
        for j in subsets(i.k(), i.n()) {
            let at = |p: &Poly| p.at_point(j.elements());
            assert_eq!(
                weight_w_at::<Rational>(&i, &j).unwrap(),
                at(&w),
                "W{i} at {j}"
            );
            assert_eq!(
                weight_w_dual_at::<Rational>(&i, &j).unwrap(),
                at(&w_dual),
                "W̌{i} at {j}"
            );
            assert_eq!(
                schur_delta_at::<Rational>(&i, &j).unwrap(),
                at(&delta),
                "Δ{i} at {j}"
            );
            assert_eq!(
                y_via_formula_at::<Rational>(&i, &j).unwrap(),
                at(&y),
                "Y{i} at {j}"
            );
        }
    }
}

#[test]
fn truncated_fixed_point_values_keep_the_high_h_terms() {
    for i in all_subsets(4) {
        let top = (i.k() * i.k() + i.length()) as u32;
        for j in subsets(i.k(), i.n()) {
            let full = weight_w_at::<Rational>(&i, &j).unwrap();
            for min in 0..=top + 1 {
                let truncated = weight_w_at_h_truncated::<Rational>(&i, &j, min).unwrap();
                assert_eq!(
                    truncated,
                    full.h_truncated(min),
                    "W{i} at {j}, h-degree >= {min}"
                );
            }
        }
    }
}

#[test]
fn leading_h_term_is_the_signed_double_schur_polynomial() {
    for i in small_subsets() {
        let k = i.k();
        let (degree, coefficient) = weight_w::<Rational>(&i).unwrap().h_leading().unwrap();
        assert_eq!(degree as usize, k * k + i.length(), "W{i}");
        let delta = schur_delta::<Rational>(&i).unwrap();
        assert_eq!(coefficient, delta.scale(&Rational::from(i.sgn())), "W{i}");
        assert_eq!(
            weight_w_h_leading::<Rational>(&i).unwrap(),
            (degree, coefficient)
        );
    }
}

#[test]
fn y_closed_formula_matches_the_operator_construction() {
    for i in all_subsets(4) {
        assert_eq!(
            y_via_formula::<Rational>(&i).unwrap(),
            y_via_operators::<Rational>(&i).unwrap(),
            "Y{i}"
        );
    }
}

#[test]
fn r_matrix_identity_for_weight_functions() {
    for i in all_subsets(4) {
        for a in 1..i.n() {
            let w = weight_w::<Rational>(&i).unwrap();
            let w_swapped = weight_w::<Rational>(&i.swapped(a)).unwrap();
            assert!(rmatrix_identity_holds(&w, &w_swapped, a), "W{i}, a = {a}");
            assert!(
                rmatrix_kernel_certificate::<Rational>(&i, a).unwrap(),
                "W{i}, a = {a}"
            );
        }
    }
}

#[test]
fn r_matrix_identity_fails_for_a_wrong_partner() {
    // W{1} and W{1} are not related by the swap (1, 2) for n = 2.
    let w = weight_w::<Rational>(&s(2, &[1])).unwrap();
    assert!(!rmatrix_identity_holds(&w, &w, 1));
}

#[test]
fn arbitrary_precision_scalars_give_the_same_polynomials() {
    for i in all_subsets(4) {
        let small = weight_w::<Rational>(&i).unwrap().to_string();
        let big: Polynomial<BigRational> = weight_w(&i).unwrap();
        assert_eq!(big.to_string(), small, "W{i}");
        assert_eq!(big.universe(), universe_of(&i));
    }
    let big = BigRational::from_integer(BigInt::from(3));
    let p: Polynomial<BigRational> = weight_w(&s(3, &[2])).unwrap();
    assert_eq!(p.scale(&big).leading_coefficient(), Some(&big));
}

/// `(-1)^codim det(Π_{u>i_α} (t_β - z_u))_{α,β} / Π_{a<b} (t_a - t_b)`, with
/// the determinant expanded over permutations.
fn delta_by_determinant(i: &SubsetIndex) -> Poly {
    let (k, n) = (i.k(), i.n());
    let u = Universe::new(k, n).unwrap();
    let entry = |alpha: usize, beta: usize| {
        Poly::product(
            u,
            &(i.at(alpha) + 1..=n)
                .map(|v| Poly::t(u, beta) - Poly::z(u, v))
                .collect::<Vec<_>>(),
        )
    };
    let mut det = Poly::zero(u);
    for perm in permutations(k) {
        let mut inversions = 0;
        for a in 0..k {
            for b in a + 1..k {
                inversions += usize::from(perm[a] > perm[b]);
            }
        }
        let term = Poly::product(
            u,
            &(1..=k)
                .map(|alpha| entry(alpha, perm[alpha - 1]))
                .collect::<Vec<_>>(),
        );
        det = if inversions % 2 == 0 {
            &det + &term
        } else {
            &det - &term
        };
    }
    let mut vandermonde = Poly::one(u);
    for a in 1..=k {
        for b in a + 1..=k {
            vandermonde = &vandermonde * &(Poly::t(u, a) - Poly::t(u, b));
        }
    }
    let delta = det.exact_divide(&vandermonde).unwrap();
    if i.codim().is_multiple_of(2) {
        delta
    } else {
        delta.negated()
    }
}

#[test]
fn double_schur_polynomials_match_the_bialternant() {
    for i in all_subsets(5) {
        let delta = schur_delta::<Rational>(&i).unwrap();
        assert_eq!(delta, delta_by_determinant(&i), "Δ{i}");
        for j in subsets(i.k(), i.n()) {
            if !j.leq(&i) {
                assert!(delta.at_point(j.elements()).is_zero(), "Δ{i} at {j}");
            }
        }
        assert!(!delta.at_point(i.elements()).is_zero(), "Δ{i} at {i}");
    }
}

#[test]
fn singular_fixed_points() {
    // For I = {2,4}, J = {1,2}: j_2 = 2 <= i_1 = 2.
    assert!(s(4, &[2, 4])
        .is_singular_fixed_point(&s(4, &[1, 2]))
        .unwrap());
    assert!(!s(4, &[2, 4])
        .is_singular_fixed_point(&s(4, &[1, 3]))
        .unwrap());
    // A single block has no boundary to violate.
    assert!(!s(4, &[3, 4])
        .is_singular_fixed_point(&s(4, &[1, 2]))
        .unwrap());
}
