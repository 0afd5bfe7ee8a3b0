//! Truncated multi-indexed sequences under the multivariate Dirichlet
//! convolution
//!
//! ```text
//! (A ⋆ B)_{n_1..n_h} = Σ_{n_i = m_i p_i} a_{m_1..m_h} b_{p_1..p_h}
//! ```
//!
//! A [`MultiSeq`] stores every coefficient whose index sum is at most its
//! volume bound `V`. Truncation is closed under `⋆`: if `n = m·p`
//! componentwise with every `p_i ≥ 1`, then `Σ m_i ≤ Σ n_i`, so the
//! coefficients of a product inside the bound only ever consult factors
//! inside the bound.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{is_weakly_decreasing, tuples_within};

/// Whether a sequence is confined to weakly decreasing indices (the
/// subalgebra `T_h`) or ranges over all positive index tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Triangular,
    Full,
}

/// A tuple `(n_1, …, n_h)` of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple(Vec<u32>);

impl IndexTuple {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroHeight);
        }
        if entries.contains(&0) {
            return Err(Error::InvalidIndex(entries));
        }
        Ok(IndexTuple(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl std::borrow::Borrow<[u32]> for IndexTuple {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

/// A truncated element of `M_h` (or `T_h` when triangular) with exact
/// 64-bit coefficients.
#[derive(Debug, Clone)]
pub struct MultiSeq {
    height: usize,
    shape: Shape,
    bound: u32,
    coeffs: BTreeMap<IndexTuple, i64>,
}

impl PartialEq for MultiSeq {
    /// Height, bound and nonzero coefficients must agree; stored zeros and
    /// the shape tag are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.height == other.height
            && self.bound == other.bound
            && self.nonzero().eq(other.nonzero())
    }
}

impl Eq for MultiSeq {}

fn check_dims(height: usize, bound: u32) -> Result<()> {
    if height == 0 {
        return Err(Error::ZeroHeight);
    }
    if (bound as usize) < height {
        return Err(Error::BoundTooSmall { height, bound });
    }
    Ok(())
}

impl MultiSeq {
    /// An all-zero sequence.
    pub fn zero(height: usize, bound: u32, shape: Shape) -> Result<Self> {
        check_dims(height, bound)?;
        Ok(MultiSeq {
            height,
            shape,
            bound,
            coeffs: BTreeMap::new(),
        })
    }

    /// Builds a sequence by evaluating `f` on every admissible index.
    pub fn from_fn(
        height: usize,
        bound: u32,
        shape: Shape,
        mut f: impl FnMut(&[u32]) -> i64,
    ) -> Result<Self> {
        let mut seq = MultiSeq::zero(height, bound, shape)?;
        for t in tuples_within(height, bound, shape == Shape::Triangular) {
            let c = f(&t);
            if c != 0 {
                seq.coeffs.insert(IndexTuple(t), c);
            }
        }
        Ok(seq)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn volume_bound(&self) -> u32 {
        self.bound
    }

    /// Coefficient at `index`; zero for absent or out-of-range indices.
    pub fn get(&self, index: &[u32]) -> i64 {
        self.coeffs.get(index).copied().unwrap_or(0)
    }

    /// Sets a coefficient, enforcing the bound and shape invariants.
    pub fn set(&mut self, index: &[u32], value: i64) -> Result<()> {
        let admissible = index.len() == self.height
            && index.iter().all(|&e| e >= 1)
            && index.iter().sum::<u32>() <= self.bound
            && (self.shape == Shape::Full || is_weakly_decreasing(index));
        if !admissible {
            return Err(Error::InvalidIndex(index.to_vec()));
        }
        if value == 0 {
            self.coeffs.remove(index);
        } else {
            self.coeffs.insert(IndexTuple(index.to_vec()), value);
        }
        Ok(())
    }

    /// Nonzero coefficients in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&[u32], i64)> + '_ {
        self.coeffs
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k.entries(), c))
    }

    /// Drops every coefficient whose index sum exceeds `bound`.
    pub fn restrict(&self, bound: u32) -> Result<Self> {
        check_dims(self.height, bound)?;
        let bound = bound.min(self.bound);
        Ok(MultiSeq {
            height: self.height,
            shape: self.shape,
            bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.sum() <= bound)
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        })
    }

    /// Coefficient sums grouped by index sum, `out[v]` for `v = 0..=bound`.
    pub fn totals_by_weight(&self) -> Result<Vec<i64>> {
        let mut out = vec![0i64; self.bound as usize + 1];
        for (k, &c) in &self.coeffs {
            let slot = &mut out[k.sum() as usize];
            *slot = slot
                .checked_add(c)
                .ok_or_else(|| Error::Overflow(k.entries().to_vec()))?;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.height != other.height {
            return Err(Error::HeightMismatch {
                left: self.height,
                right: other.height,
            });
        }
        let bound = self.bound.min(other.bound);
        let shape = join_shape(self.shape, other.shape);
        let mut out = self.restrict(bound)?;
        out.shape = shape;
        for (k, &c) in other.coeffs.iter().filter(|(k, _)| k.sum() <= bound) {
            let slot = out.coeffs.entry(k.clone()).or_insert(0);
            *slot = slot
                .checked_add(c)
                .ok_or_else(|| Error::Overflow(k.entries().to_vec()))?;
        }
        out.coeffs.retain(|_, c| *c != 0);
        Ok(out)
    }
}

fn join_shape(a: Shape, b: Shape) -> Shape {
    if a == Shape::Triangular && b == Shape::Triangular {
        Shape::Triangular
    } else {
        Shape::Full
    }
}

/// The identity `𝟙`: coefficient 1 at `(1, …, 1)`.
pub fn unit(height: usize, bound: u32) -> Result<MultiSeq> {
    let mut seq = MultiSeq::zero(height, bound, Shape::Triangular)?;
    seq.coeffs.insert(IndexTuple(vec![1; height]), 1);
    Ok(seq)
}

/// `△`: coefficient 1 on every weakly decreasing index.
pub fn delta(height: usize, bound: u32) -> Result<MultiSeq> {
    MultiSeq::from_fn(height, bound, Shape::Triangular, |_| 1)
}

/// `▲`: coefficient `Π (n_k − n_{k+1} + 1)` on weakly decreasing indices.
pub fn black_delta(height: usize, bound: u32) -> Result<MultiSeq> {
    MultiSeq::from_fn(height, bound, Shape::Triangular, |n| {
        n.windows(2)
            .map(|w| i64::from(w[0] - w[1] + 1))
            .product()
    })
}

/// Multivariate Dirichlet convolution `A ⋆ B`, truncated at the smaller of
/// the two bounds.
pub fn convolve(a: &MultiSeq, b: &MultiSeq) -> Result<MultiSeq> {
    if a.height != b.height {
        return Err(Error::HeightMismatch {
            left: a.height,
            right: b.height,
        });
    }
    let height = a.height;
    let bound = a.bound.min(b.bound);
    let shape = join_shape(a.shape, b.shape);

    // Σ m_i p_i ≥ Σ m_i + Σ p_i − h, so once Σ p_i exceeds bound − Σ m_i + h
    // no later (heavier) factor can land inside the bound.
    let mut right: Vec<(&[u32], u32, i64)> = b
        .nonzero()
        .map(|(k, c)| (k, k.iter().sum::<u32>(), c))
        .filter(|&(_, s, _)| s <= bound)
        .collect();
    right.sort_by_key(|&(_, s, _)| s);

    let mut coeffs: BTreeMap<IndexTuple, i64> = BTreeMap::new();
    let mut product = vec![0u32; height];
    for (m, am) in a.nonzero() {
        let m_sum: u32 = m.iter().sum();
        if m_sum > bound {
            continue;
        }
        let p_limit = bound - m_sum + height as u32;
        for &(p, p_sum, bp) in &right {
            if p_sum > p_limit {
                break;
            }
            let mut total = 0u32;
            for i in 0..height {
                product[i] = m[i] * p[i];
                total += product[i];
            }
            if total > bound {
                continue;
            }
            let term = am
                .checked_mul(bp)
                .ok_or_else(|| Error::Overflow(product.clone()))?;
            let slot = coeffs.entry(IndexTuple(product.clone())).or_insert(0);
            *slot = slot
                .checked_add(term)
                .ok_or_else(|| Error::Overflow(product.clone()))?;
        }
    }
    coeffs.retain(|_, c| *c != 0);
    Ok(MultiSeq {
        height,
        shape,
        bound,
        coeffs,
    })
}

/// `A^{⋆d}` by binary exponentiation; `A^{⋆0}` is the unit.
pub fn star_power(a: &MultiSeq, d: u32) -> Result<MultiSeq> {
    let mut result = unit(a.height, a.bound)?;
    if d == 0 {
        return Ok(result);
    }
    let mut base = a.clone();
    let mut exp = d;
    loop {
        if exp & 1 == 1 {
            result = convolve(&result, &base)?;
        }
        exp >>= 1;
        if exp == 0 {
            break;
        }
        base = convolve(&base, &base)?;
    }
    Ok(result)
}

/// `T_L(A) = A ⋆ △`.
pub fn lambert_transform(a: &MultiSeq) -> Result<MultiSeq> {
    if a.shape != Shape::Triangular {
        return Err(Error::NotTriangular);
    }
    convolve(a, &delta(a.height, a.bound)?)
}

/// `T_▲(A) = ▲ ⋆ A`.
pub fn black_transform(a: &MultiSeq) -> Result<MultiSeq> {
    if a.shape != Shape::Triangular {
        return Err(Error::NotTriangular);
    }
    convolve(&black_delta(a.height, a.bound)?, a)
}

/// The `⋆`-inverse of a sequence whose coefficient at `(1, …, 1)` is ±1.
///
/// Indices are visited by increasing sum, then lexicographically; a proper
/// componentwise divisor always has a strictly smaller sum, so every
/// coefficient needed on the right-hand side is already known. A triangular
/// input has a triangular inverse, so only decreasing indices are visited.
pub fn star_inverse(a: &MultiSeq) -> Result<MultiSeq> {
    let height = a.height;
    let ones = vec![1u32; height];
    let lead = a.get(&ones);
    if lead != 1 && lead != -1 {
        return Err(Error::NonUnitLeading(lead));
    }
    let mut order = tuples_within(height, a.bound, a.shape == Shape::Triangular);
    order.sort_by(|x, y| {
        let (sx, sy): (u32, u32) = (x.iter().sum(), y.iter().sum());
        sx.cmp(&sy).then_with(|| x.cmp(y))
    });

    let mut inv = MultiSeq::zero(height, a.bound, a.shape)?;
    let divisor_lists: Vec<Vec<u32>> = (0..=a.bound).map(divisors).collect();
    let mut quotient = vec![0u32; height];
    for n in order {
        if n == ones {
            inv.coeffs.insert(IndexTuple(ones.clone()), lead);
            continue;
        }
        // Σ over componentwise divisors m ≠ 1 of a_m · inv_{n/m}
        let mut acc: i64 = 0;
        let mut overflow = false;
        for_each_divisor_tuple(&n, &divisor_lists, &mut |m| {
            if overflow || m.iter().all(|&x| x == 1) {
                return;
            }
            let am = a.get(m);
            if am == 0 {
                return;
            }
            for i in 0..height {
                quotient[i] = n[i] / m[i];
            }
            let bq = inv.get(&quotient);
            if bq == 0 {
                return;
            }
            match am.checked_mul(bq).and_then(|t| acc.checked_add(t)) {
                Some(v) => acc = v,
                None => overflow = true,
            }
        });
        if overflow {
            return Err(Error::Overflow(n));
        }
        // lead = ±1 is its own inverse
        let value = acc
            .checked_neg()
            .and_then(|v| v.checked_mul(lead))
            .ok_or_else(|| Error::Overflow(n.clone()))?;
        if value != 0 {
            inv.coeffs.insert(IndexTuple(n), value);
        }
    }
    Ok(inv)
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    if n == 0 {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Calls `f` on every tuple `m` with `m_i | n_i` for all `i`.
pub(crate) fn for_each_divisor_tuple(
    n: &[u32],
    divisor_lists: &[Vec<u32>],
    f: &mut impl FnMut(&[u32]),
) {
    fn rec(
        n: &[u32],
        lists: &[Vec<u32>],
        current: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32]),
    ) {
        let i = current.len();
        if i == n.len() {
            f(current);
            return;
        }
        for &d in &lists[n[i] as usize] {
            current.push(d);
            rec(n, lists, current, f);
            current.pop();
        }
    }
    let mut current = Vec::with_capacity(n.len());
    rec(n, divisor_lists, &mut current, f);
}
