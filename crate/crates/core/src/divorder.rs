//! The projection order on partitions of a fixed height.
//!
//! `λ ⪯ μ` holds when some espalier with multivolume `μ` projects onto `λ`,
//! i.e. when `μ = λ·κ` componentwise for a partition `κ`. At height 1 this
//! is divisibility.

use crate::conv::{delta, divisors, for_each_divisor_tuple, star_inverse, MultiSeq};
use crate::error::{Error, Result};
use crate::partition::{is_weakly_decreasing, Partition};

fn check_heights(a: &Partition, b: &Partition) -> Result<()> {
    if a.height() != b.height() {
        return Err(Error::HeightMismatch {
            left: a.height(),
            right: b.height(),
        });
    }
    Ok(())
}

/// `λ ⪯ μ`: every `λ_i` divides `μ_i` and the quotients are weakly
/// decreasing.
pub fn leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    check_heights(lambda, mu)?;
    Ok(divides(lambda.parts(), mu.parts()))
}

fn divides(lower: &[u32], upper: &[u32]) -> bool {
    let mut prev = u32::MAX;
    for (&l, &u) in lower.iter().zip(upper) {
        if u % l != 0 {
            return false;
        }
        let q = u / l;
        if q > prev {
            return false;
        }
        prev = q;
    }
    true
}

/// A closed interval `[bottom, top]` of the projection order.
#[derive(Debug, Clone)]
pub struct PosetInterval {
    bottom: Partition,
    top: Partition,
    /// Sorted by weight then lexicographically: a linear extension.
    elements: Vec<Partition>,
    /// `below[k]` lists the indices `j ≠ k` with `elements[j] ⪯ elements[k]`.
    below: Vec<Vec<usize>>,
}

impl PosetInterval {
    pub fn bottom(&self) -> &Partition {
        &self.bottom
    }

    pub fn top(&self) -> &Partition {
        &self.top
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Pairs `(j, k)` with `elements[j] ≺ elements[k]` and nothing strictly
    /// between them.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, lower) in self.below.iter().enumerate() {
            for &j in lower {
                let shortcut = lower.iter().any(|&m| m != j && self.below[m].contains(&j));
                if !shortcut {
                    out.push((j, k));
                }
            }
        }
        out
    }

    /// `μ(bottom, ν)` for every element `ν`, in element order.
    fn mobius_values(&self) -> Vec<i64> {
        let mut values = vec![0i64; self.elements.len()];
        for k in 0..self.elements.len() {
            values[k] = if k == 0 {
                1
            } else {
                -self.below[k].iter().map(|&j| values[j]).sum::<i64>()
            };
        }
        values
    }
}

/// All `ν` with `λ ⪯ ν ⪯ μ`, found by filtering the componentwise divisor
/// tuples of `μ`.
pub fn interval(lambda: &Partition, mu: &Partition) -> Result<PosetInterval> {
    if !leq(lambda, mu)? {
        return Err(Error::NotComparable {
            lower: lambda.parts().to_vec(),
            upper: mu.parts().to_vec(),
        });
    }
    let top = mu.parts();
    let max = top[0];
    let lists: Vec<Vec<u32>> = (0..=max).map(divisors).collect();
    let mut elements = Vec::new();
    for_each_divisor_tuple(top, &lists, &mut |nu| {
        if is_weakly_decreasing(nu) && divides(lambda.parts(), nu) && divides(nu, top) {
            elements.push(Partition::new(nu.to_vec()).expect("decreasing positive tuple"));
        }
    });
    elements.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));

    let below = (0..elements.len())
        .map(|k| {
            (0..k)
                .filter(|&j| divides(elements[j].parts(), elements[k].parts()))
                .collect()
        })
        .collect();
    Ok(PosetInterval {
        bottom: lambda.clone(),
        top: mu.clone(),
        elements,
        below,
    })
}

/// Möbius function of the projection order, `μ^h(λ, μ)`.
pub fn mobius(lambda: &Partition, mu: &Partition) -> Result<i64> {
    let iv = interval(lambda, mu)?;
    Ok(*iv.mobius_values().last().expect("interval contains its top"))
}

/// `μ^h((1, …, 1), ν)` for every `ν ⪯ top`, as `(ν, value)` pairs.
pub fn mobius_from_bottom(top: &Partition) -> Result<Vec<(Partition, i64)>> {
    let iv = interval(&Partition::ones(top.height())?, top)?;
    let values = iv.mobius_values();
    Ok(iv.elements.into_iter().zip(values).collect())
}

/// Classical Möbius function by trial division.
pub fn classical_mobius(n: u32) -> Result<i64> {
    if n == 0 {
        return Err(Error::OutOfRange("Möbius function is defined for n ≥ 1".into()));
    }
    let mut n = n;
    let mut sign = 1i64;
    let mut p = 2u32;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|&p: &u32| p * p <= n).all(|p| !n.is_multiple_of(p))
}

/// `△^{⋆-1}` at height `h`, whose coefficients are `μ^h((1,…,1), n)`.
pub fn zeta_inverse_table(height: usize, bound: u32) -> Result<MultiSeq> {
    star_inverse(&delta(height, bound)?)
}
