#![allow(dead_code)]

use std::collections::BTreeMap;

use espalier_core::conv::{MultiSeq, Shape};
use espalier_core::partition::tuples_within;
use proptest::prelude::*;

/// A random sequence of height `1..=max_h`, bound `h..=max_v`, with small
/// coefficients on every admissible index.
pub fn multiseq(max_h: usize, max_v: u32, shape: Shape) -> impl Strategy<Value = MultiSeq> {
    (1..=max_h)
        .prop_flat_map(move |h| (Just(h), h as u32..=max_v))
        .prop_flat_map(move |(h, v)| {
            let n = tuples_within(h, v, shape == Shape::Triangular).len();
            (Just(h), Just(v), proptest::collection::vec(-4i64..=4, n))
        })
        .prop_map(move |(h, v, values)| build(h, v, shape, &values))
}

/// Two or three sequences sharing height and bound.
pub fn multiseq_tuple(
    count: usize,
    max_h: usize,
    max_v: u32,
    shape: Shape,
) -> impl Strategy<Value = Vec<MultiSeq>> {
    (1..=max_h)
        .prop_flat_map(move |h| (Just(h), h as u32..=max_v))
        .prop_flat_map(move |(h, v)| {
            let n = tuples_within(h, v, shape == Shape::Triangular).len();
            (
                Just(h),
                Just(v),
                proptest::collection::vec(proptest::collection::vec(-4i64..=4, n), count),
            )
        })
        .prop_map(move |(h, v, all)| all.iter().map(|vals| build(h, v, shape, vals)).collect())
}

/// Triangular sequence of fixed height.
pub fn triangular_of_height(h: usize, bound: u32) -> impl Strategy<Value = MultiSeq> {
    let n = tuples_within(h, bound, true).len();
    proptest::collection::vec(-6i64..=6, n).prop_map(move |vals| build(h, bound, Shape::Triangular, &vals))
}

pub fn build(h: usize, v: u32, shape: Shape, values: &[i64]) -> MultiSeq {
    let mut k = 0;
    MultiSeq::from_fn(h, v, shape, |_| {
        let c = values[k];
        k += 1;
        c
    })
    .unwrap()
}

/// Sparse multivariate polynomial, truncated at total degree `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub vars: usize,
    pub bound: u32,
    pub terms: BTreeMap<Vec<u32>, i64>,
}

impl Poly {
    pub fn constant(vars: usize, bound: u32, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; vars], c);
        Poly { vars, bound, terms }
    }

    pub fn monomial(exps: Vec<u32>, bound: u32) -> Self {
        let vars = exps.len();
        let mut p = Poly {
            vars,
            bound,
            terms: BTreeMap::new(),
        };
        if exps.iter().sum::<u32>() <= bound {
            p.terms.insert(exps, 1);
        }
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: i64) {
        if exps.iter().sum::<u32>() <= self.bound && c != 0 {
            *self.terms.entry(exps).or_insert(0) += c;
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly {
            vars: self.vars,
            bound: self.bound,
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }

    /// `1 / (1 − m)` for a monomial `m` of positive degree.
    pub fn geometric(exps: &[u32], bound: u32) -> Poly {
        let deg: u32 = exps.iter().sum();
        let mut out = Poly::constant(exps.len(), bound, 1);
        let mut k = 1;
        while k * deg <= bound {
            out.add_term(exps.iter().map(|e| e * k).collect(), 1);
            k += 1;
        }
        out
    }

    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }
}

/// The generating polynomial `Σ a_n x^n` of a sequence.
pub fn gf_of(seq: &MultiSeq) -> Poly {
    let mut p = Poly {
        vars: seq.height(),
        bound: seq.volume_bound(),
        terms: BTreeMap::new(),
    };
    for (k, c) in seq.nonzero() {
        p.add_term(k.to_vec(), c);
    }
    p
}

/// `x_1 ⋯ x_h / Π_{k<h} (1 − x_1⋯x_k)^e · (1 − x_1⋯x_h)`, with `e = 1` for
/// `△` and `e = 2` for `▲`.
pub fn generator_gf(h: usize, bound: u32, inner_power: u32) -> Poly {
    let mut p = Poly::monomial(vec![1; h], bound);
    for k in 1..=h {
        let prefix: Vec<u32> = (0..h).map(|i| u32::from(i < k)).collect();
        let power = if k < h { inner_power } else { 1 };
        for _ in 0..power {
            p = p.mul(&Poly::geometric(&prefix, bound));
        }
    }
    p
}

/// Divisor count by trial.
pub fn tau(n: u32) -> i64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as i64
}

/// Classical Möbius function by recursion on `Σ_{d|n} μ(d) = [n = 1]`.
pub fn mobius_table(n: usize) -> Vec<i64> {
    let mut mu = vec![0i64; n + 1];
    if n >= 1 {
        mu[1] = 1;
    }
    for k in 2..=n {
        mu[k] = -(1..k).filter(|d| k % d == 0).map(|d| mu[d]).sum::<i64>();
    }
    mu
}

/// Weighted compositions: `Σ_{compositions of v into h parts} Π w(v_i, v_{i+1})`,
/// by explicit enumeration.
pub fn composition_sum(v: u32, h: usize, weight: impl Fn(u32, u32) -> i64 + Copy) -> i64 {
    fn rec(
        remaining: u32,
        slots: usize,
        prev: Option<u32>,
        acc: i64,
        weight: impl Fn(u32, u32) -> i64 + Copy,
    ) -> i64 {
        if slots == 0 {
            return if remaining == 0 { acc } else { 0 };
        }
        let mut total = 0;
        for part in 1..=remaining {
            let w = prev.map_or(1, |p| weight(p, part));
            total += rec(remaining - part, slots - 1, Some(part), acc * w, weight);
        }
        total
    }
    rec(v, h, None, 1, weight)
}
