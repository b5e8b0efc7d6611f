//! The operators on `(C^2)^{⊗n}`, the transition coefficients `c_J`, `c'_J`,
//! and the R-matrix.

use std::collections::BTreeMap;

use conormal::combinatorics::{subsets, SubsetIndex};
use conormal::poly::{Polynomial, RationalFunction, Universe};
use conormal::tensor::{
    apply_e21, apply_sigma_i, apply_sigma_j, check_unitarity, invert_y_transition, r_matrix_apply,
    sigma_factors, y_as_w_combo, y_coefficients, y_transition, FactorOrder,
};
use conormal::{Rational, Tensor};

fn s(n: usize, e: &[usize]) -> SubsetIndex {
    SubsetIndex::new(n, e.iter().copied()).unwrap()
}

fn all_subsets(n_max: usize) -> impl Iterator<Item = SubsetIndex> {
    (0..=n_max).flat_map(|n| (0..=n).flat_map(move |k| subsets(k, n)))
}

/// Ways to write `rest` as a disjoint union of sets `S_c ⊂ {1..bound_c}`
/// with `|S_c| = m_c`, for the `(bound_c, m_c)` in `factors`.
fn count_decompositions(rest: &[usize], factors: &[(usize, usize)]) -> u64 {
    let Some((&(bound, m), others)) = factors.split_first() else {
        return u64::from(rest.is_empty());
    };
    let eligible: Vec<usize> = rest.iter().copied().filter(|&x| x <= bound).collect();
    let mut total = 0;
    for mask in 0u32..(1 << eligible.len()) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let chosen: Vec<usize> = (0..eligible.len())
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| eligible[b])
            .collect();
        let remaining: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|x| !chosen.contains(x))
            .collect();
        total += count_decompositions(&remaining, others);
    }
    total
}

#[test]
fn raising_operators() {
    let u = Universe::new(0, 3).unwrap();
    let v = Tensor::basis(&s(3, &[1]), u);
    assert!(apply_e21(2, &v)
        .unwrap()
        .equals(&Tensor::basis(&s(3, &[1, 2]), u)));
    assert!(apply_e21(1, &v).unwrap().is_zero());
    assert!(apply_e21(4, &v).is_err());

    let raised = apply_sigma_j(3, &Tensor::vacuum(3, u)).unwrap();
    let mut expected = Tensor::zero(3, u);
    for i in 1..=3 {
        expected = expected.add(&Tensor::basis(&s(3, &[i]), u));
    }
    assert!(raised.equals(&expected));
}

#[test]
fn sigma_factors_use_block_maxima() {
    assert_eq!(sigma_factors(&s(4, &[2, 4])), vec![(2, 1), (4, 1)]);
    assert_eq!(sigma_factors(&s(6, &[2, 3, 5])), vec![(3, 2), (5, 1)]);
    assert_eq!(sigma_factors(&s(3, &[])), vec![]);
}

#[test]
fn y_coefficients_count_decompositions() {
    for i in all_subsets(6) {
        let coefficients = y_coefficients::<Rational>(&i).unwrap();
        let factors = sigma_factors(&i);
        for j in subsets(i.k(), i.n()) {
            let expected = count_decompositions(j.elements(), &factors);
            let got = coefficients
                .get(&j)
                .cloned()
                .unwrap_or_else(|| Rational::from(0));
            assert_eq!(
                got,
                Rational::from(expected as i64),
                "c for I = {i}, J = {j}"
            );
            if !j.leq(&i) {
                assert_eq!(expected, 0);
            }
        }
        assert_eq!(
            coefficients.get(&i),
            Some(&Rational::from(1)),
            "leading coefficient of Y{i}"
        );
    }
}

#[test]
fn both_factor_orders_agree() {
    for i in all_subsets(5) {
        let u = Universe::new(0, i.n()).unwrap();
        let vacuum = Tensor::vacuum(i.n(), u);
        let printed = apply_sigma_i(&i, &vacuum, FactorOrder::AsPrinted).unwrap();
        let reversed = apply_sigma_i(&i, &vacuum, FactorOrder::Reversed).unwrap();
        assert!(printed.equals(&reversed), "Σ{i}");
    }
}

#[test]
fn y_combinations_print_as_sums_of_weight_functions() {
    assert_eq!(
        y_as_w_combo::<Rational>(&s(4, &[2, 4])).unwrap(),
        "2*W{1,2} + W{1,3} + W{1,4} + W{2,3} + W{2,4}"
    );
    assert_eq!(y_as_w_combo::<Rational>(&s(4, &[1, 2])).unwrap(), "W{1,2}");
}

#[test]
fn single_point_transition_is_a_running_sum() {
    // k = 1: Y_{i} = Σ_{j<=i} W_{j}, so W_{i} = Y_{i} - Y_{i-1}.
    for n in 1..=6 {
        let c = y_transition::<Rational>(1, n).unwrap();
        let c_prime = invert_y_transition::<Rational>(1, n).unwrap();
        for i in 1..=n {
            let row: BTreeMap<_, _> = c.row(&s(n, &[i])).into_iter().collect();
            let expected: BTreeMap<_, _> =
                (1..i).map(|j| (s(n, &[j]), Rational::from(1))).collect();
            assert_eq!(row, expected);
            let inverse_row = c_prime.row(&s(n, &[i]));
            if i == 1 {
                assert!(inverse_row.is_empty());
            } else {
                assert_eq!(inverse_row, vec![(s(n, &[i - 1]), Rational::from(-1))]);
            }
        }
    }
}

#[test]
fn transition_matrices_are_inverse_unitriangular_and_integral() {
    for n in 0..=6 {
        for k in 0..=n {
            let c = y_transition::<Rational>(k, n).unwrap();
            let c_prime = invert_y_transition::<Rational>(k, n).unwrap();
            assert!(c.is_unitriangular() && c.respects_dominance() && c.is_integral());
            assert!(
                c_prime.is_unitriangular() && c_prime.respects_dominance() && c_prime.is_integral()
            );
            assert!(c.mul(&c_prime).is_identity() && c_prime.mul(&c).is_identity());
        }
    }
}

#[test]
fn r_matrix_for_two_points() {
    // On v{1}: h/(x+h) v{1} + x/(x+h) v{2}, with x = z2 - z1.
    let u = Universe::new(0, 2).unwrap();
    let (z1, z2, h) = (Polynomial::z(u, 1), Polynomial::z(u, 2), Polynomial::h(u));
    let x: Polynomial<Rational> = z2 - z1;
    let xh = &x + &h;
    let image = r_matrix_apply(1, &Tensor::basis(&s(2, &[1]), u)).unwrap();
    assert!(image
        .coefficient(&s(2, &[1]))
        .equals(&RationalFunction::new(h.clone(), xh.clone()).unwrap()));
    assert!(image
        .coefficient(&s(2, &[2]))
        .equals(&RationalFunction::new(x, xh).unwrap()));
    // v∅ and v{1,2} are fixed.
    for j in [s(2, &[]), s(2, &[1, 2])] {
        let v = Tensor::basis(&j, u);
        assert!(r_matrix_apply(1, &v).unwrap().equals(&v));
    }
    assert!(r_matrix_apply(2, &Tensor::vacuum(2, u)).is_err());
}

#[test]
fn r_matrix_is_unitary() {
    for n in 2..=4 {
        let u = Universe::new(0, n).unwrap();
        for a in 1..n {
            for k in 0..=n {
                let mut v = Tensor::zero(n, u);
                for (idx, j) in subsets(k, n).iter().enumerate() {
                    let weight =
                        Polynomial::z(u, 1 + idx % n).scale(&Rational::from(idx as i64 + 1));
                    v.add_term(
                        j.clone(),
                        RationalFunction::from_polynomial(&weight + &Polynomial::h(u)),
                    );
                }
                assert!(check_unitarity(a, &v).unwrap(), "n = {n}, a = {a}, k = {k}");
            }
        }
    }
}
