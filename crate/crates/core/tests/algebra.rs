mod common;

use common::*;
use espalier_core::conv::*;
use espalier_core::divorder::{leq, mobius};
use espalier_core::partition::{tuples_within, Partition};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unit_is_identity(a in multiseq(3, 12, Shape::Full)) {
        let u = unit(a.height(), a.volume_bound()).unwrap();
        prop_assert_eq!(convolve(&a, &u).unwrap(), a.clone());
        prop_assert_eq!(convolve(&u, &a).unwrap(), a);
    }

    #[test]
    fn convolution_commutes(v in multiseq_tuple(2, 3, 12, Shape::Full)) {
        prop_assert_eq!(convolve(&v[0], &v[1]).unwrap(), convolve(&v[1], &v[0]).unwrap());
    }

    #[test]
    fn convolution_associates(v in multiseq_tuple(3, 3, 10, Shape::Triangular)) {
        let left = convolve(&convolve(&v[0], &v[1]).unwrap(), &v[2]).unwrap();
        let right = convolve(&v[0], &convolve(&v[1], &v[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn convolution_distributes(v in multiseq_tuple(3, 3, 10, Shape::Full)) {
        let left = convolve(&v[0], &v[1].add(&v[2]).unwrap()).unwrap();
        let right = convolve(&v[0], &v[1]).unwrap().add(&convolve(&v[0], &v[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn triangular_closure(v in multiseq_tuple(2, 3, 12, Shape::Triangular)) {
        let c = convolve(&v[0], &v[1]).unwrap();
        prop_assert_eq!(c.shape(), Shape::Triangular);
        for (k, _) in c.nonzero() {
            prop_assert!(k.windows(2).all(|w| w[0] >= w[1]), "{:?}", k);
        }
    }

    #[test]
    fn substitution_form_of_product(v in multiseq_tuple(2, 2, 10, Shape::Full)) {
        // S_C(x) = Σ_n a_n S_B(x_1^{n_1}, …, x_h^{n_h})
        let (a, b) = (&v[0], &v[1]);
        let c = convolve(a, b).unwrap();
        let mut rhs = Poly { vars: a.height(), bound: a.volume_bound(), terms: Default::default() };
        for (n, an) in a.nonzero() {
            for (p, bp) in b.nonzero() {
                rhs.add_term(n.iter().zip(p).map(|(x, y)| x * y).collect(), an * bp);
            }
        }
        rhs.terms.retain(|_, c| *c != 0);
        prop_assert_eq!(gf_of(&c), rhs);
    }

    #[test]
    fn star_inverse_is_inverse(a in multiseq(3, 11, Shape::Full), lead in prop::bool::ANY) {
        let mut a = a;
        a.set(&vec![1; a.height()], if lead { 1 } else { -1 }).unwrap();
        let inv = star_inverse(&a).unwrap();
        let u = unit(a.height(), a.volume_bound()).unwrap();
        prop_assert_eq!(convolve(&a, &inv).unwrap(), u.clone());
        prop_assert_eq!(convolve(&inv, &a).unwrap(), u);
    }

    #[test]
    fn binary_and_iterated_powers_agree(a in multiseq(2, 10, Shape::Triangular), d in 0u32..6) {
        let mut iterated = unit(a.height(), a.volume_bound()).unwrap();
        for _ in 0..d {
            iterated = convolve(&iterated, &a).unwrap();
        }
        prop_assert_eq!(star_power(&a, d).unwrap(), iterated);
    }

    #[test]
    fn lambert_transform_sums_over_order(a in multiseq(3, 10, Shape::Triangular)) {
        let t = lambert_transform(&a).unwrap();
        for n in tuples_within(a.height(), a.volume_bound(), true) {
            let top = Partition::new(n.clone()).unwrap();
            let expected: i64 = tuples_within(a.height(), a.volume_bound(), true)
                .into_iter()
                .filter(|m| leq(&Partition::new(m.clone()).unwrap(), &top).unwrap())
                .map(|m| a.get(&m))
                .sum();
            prop_assert_eq!(t.get(&n), expected, "{:?}", n);
        }
    }

    #[test]
    fn black_transform_expansion(a in multiseq(3, 10, Shape::Triangular)) {
        let t = black_transform(&a).unwrap();
        for n in tuples_within(a.height(), a.volume_bound(), true) {
            let top = Partition::new(n.clone()).unwrap();
            let mut expected = 0i64;
            for m in tuples_within(a.height(), a.volume_bound(), true) {
                if !leq(&Partition::new(m.clone()).unwrap(), &top).unwrap() {
                    continue;
                }
                let q: Vec<i64> = n.iter().zip(&m).map(|(x, y)| i64::from(x / y)).collect();
                let alpha: i64 = q.windows(2).map(|w| w[0] - w[1] + 1).product();
                prop_assert!(alpha >= 0);
                expected += alpha * a.get(&m);
            }
            prop_assert_eq!(t.get(&n), expected, "{:?}", n);
        }
    }
}

#[test]
fn generator_generating_functions() {
    for h in 1..=3 {
        let bound = 10;
        assert_eq!(gf_of(&delta(h, bound).unwrap()), generator_gf(h, bound, 1), "△, h = {h}");
        assert_eq!(gf_of(&black_delta(h, bound).unwrap()), generator_gf(h, bound, 2), "▲, h = {h}");
    }
}

#[test]
fn zeta_inverse_is_poset_mobius() {
    for h in 1..=3 {
        let inv = star_inverse(&delta(h, 12).unwrap()).unwrap();
        let bottom = Partition::ones(h).unwrap();
        for n in tuples_within(h, 12, true) {
            let top = Partition::new(n.clone()).unwrap();
            assert_eq!(inv.get(&n), mobius(&bottom, &top).unwrap(), "{top}");
        }
    }
}

#[test]
fn lambert_of_all_ones_is_divisor_count() {
    let ones = delta(1, 30).unwrap();
    let t = lambert_transform(&ones).unwrap();
    for n in 1..=30 {
        assert_eq!(t.get(&[n]), tau(n));
    }
}
