//! Generating functions for plateau polycubes and horizontally convex
//! polyominoes.
//!
//! Directed plateau polycubes and unrestricted plateau polycubes both arise
//! as pairs of two-dimensional objects of equal height glued stratum by
//! stratum, so their multivolume counts are `⋆`-powers of the counts of the
//! two-dimensional pieces. Each closed form here is paired with that
//! convolution route.

use std::collections::BTreeMap;

use crate::conv::{star_power, MultiSeq, Shape};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Counts keyed by `(volume, height)`.
pub type VolumeHeightCounts = BTreeMap<(u32, u32), i64>;

fn require_positive(name: &str, value: u32) -> Result<()> {
    if value == 0 {
        return Err(Error::OutOfRange(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `τ(p) = Σ_{k≥1} p^k / (1 − p^k)`, expanded term by term.
pub fn tau_series(n: u32) -> Result<TruncatedSeries> {
    require_positive("degree bound", n)?;
    let mut acc = TruncatedSeries::zero(1, n)?;
    let one = TruncatedSeries::one(1, n)?;
    for k in 1..=n {
        let pk = TruncatedSeries::monomial(1, n, k, 0, 1)?;
        let term = pk.checked_mul(&one.checked_sub(&pk)?.reciprocal()?)?;
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// `τ^{(d+1)}(p)`: the `d`-th Dirichlet power of `p/(1−p)`, whose
/// coefficients count ordered factorizations into `d` factors.
pub fn tau_d_series(d: u32, n: u32) -> Result<TruncatedSeries> {
    require_positive("d", d)?;
    require_positive("degree bound", n)?;
    let len = n as usize + 1;
    let mut current = vec![0i64; len];
    current[1..].fill(1);
    for _ in 1..d {
        let mut next = vec![0i64; len];
        for k in 1..len {
            for m in (k..len).step_by(k) {
                next[m] = next[m]
                    .checked_add(current[k])
                    .ok_or(Error::Overflow(vec![m as u32]))?;
            }
        }
        current = next;
    }
    TruncatedSeries::from_coeffs(n, &current)
}

/// `P^{(d+1)}_{v,h}` from the expansion of
/// `t τ^{(d+1)}(p) / (1 − t p τ^{(d+1)}'(p))`.
pub fn directed_plateau_counts(n: u32, d: u32) -> Result<VolumeHeightCounts> {
    let tau = tau_d_series(d, n)?;
    let p = TruncatedSeries::monomial(1, n, 1, 0, 1)?;
    let p_tau_prime = p.checked_mul(&tau.derivative()?)?;
    let t = TruncatedSeries::monomial(2, n, 0, 1, 1)?;
    let numerator = t.checked_mul(&tau.lift()?)?;
    let denominator = TruncatedSeries::one(2, n)?.checked_sub(&t.checked_mul(&p_tau_prime.lift()?)?)?;
    let gf = numerator.checked_mul(&denominator.reciprocal()?)?;
    Ok(gf
        .terms()
        .filter(|&(v, h, _)| v >= 1 && h >= 1)
        .map(|(v, h, c)| ((v, h), c))
        .collect())
}

/// Horizontally convex directed polyominoes of height `h` by multivolume:
/// `v_1 ⋯ v_{h−1}` on every composition.
pub fn hcv_directed_multivolumes(height: usize, bound: u32) -> Result<MultiSeq> {
    MultiSeq::from_fn(height, bound, Shape::Full, |v| {
        v[..v.len() - 1].iter().map(|&x| i64::from(x)).product()
    })
}

/// `(d+1)`-dimensional directed plateau polycubes of height `h` by
/// multivolume: the `d`-th `⋆`-power of [`hcv_directed_multivolumes`].
pub fn directed_plateau_multivolumes(height: usize, bound: u32, d: u32) -> Result<MultiSeq> {
    require_positive("d", d)?;
    star_power(&hcv_directed_multivolumes(height, bound)?, d)
}

/// `P^{(d+1)}_{v,h}` by aggregating [`directed_plateau_multivolumes`].
pub fn directed_plateau_counts_by_convolution(n: u32, d: u32) -> Result<VolumeHeightCounts> {
    require_positive("degree bound", n)?;
    let mut out = BTreeMap::new();
    for h in 1..=n {
        let totals = directed_plateau_multivolumes(h as usize, n, d)?.totals_by_weight()?;
        for v in h..=n {
            if totals[v as usize] != 0 {
                out.insert((v, h), totals[v as usize]);
            }
        }
    }
    Ok(out)
}

/// Height-`h` directed plateau polycubes keyed by `(volume, top stratum
/// volume)`, from `(p τ'(p))^{h−1} τ(pω)`.
pub fn directed_plateau_top_refinement(n: u32, d: u32, height: u32) -> Result<VolumeHeightCounts> {
    require_positive("height", height)?;
    let tau = tau_d_series(d, n)?;
    let p = TruncatedSeries::monomial(1, n, 1, 0, 1)?;
    let p_tau_prime = p.checked_mul(&tau.derivative()?)?;
    let gf = p_tau_prime
        .checked_pow(height - 1)?
        .lift()?
        .checked_mul(&tau.diagonal()?)?;
    Ok(gf.terms().map(|(v, w, c)| ((v, w), c)).collect())
}

/// Horizontally convex polyominoes by `(volume, height)`: the sum over
/// compositions `(v_1, …, v_h)` of `v` of `Π (v_i + v_{i+1} − 1)`.
pub fn hcv_polyomino_counts(n: u32) -> Result<VolumeHeightCounts> {
    require_positive("degree bound", n)?;
    let n = n as usize;
    // layer[v][last]: weighted compositions of v ending in `last`
    let mut layer = vec![vec![0i64; n + 1]; n + 1];
    for v in 1..=n {
        layer[v][v] = 1;
    }
    let mut out = BTreeMap::new();
    for h in 1..=n {
        for (v, row) in layer.iter().enumerate() {
            let total = row
                .iter()
                .try_fold(0i64, |acc, &c| acc.checked_add(c))
                .ok_or(Error::Overflow(vec![v as u32, h as u32]))?;
            if v >= h {
                out.insert((v as u32, h as u32), total);
            }
        }
        let mut next = vec![vec![0i64; n + 1]; n + 1];
        for v in 1..=n {
            for last in 1..=v {
                let c = layer[v][last];
                if c == 0 {
                    continue;
                }
                for part in 1..=n - v {
                    let w = (last + part - 1) as i64;
                    let slot = &mut next[v + part][part];
                    *slot = w
                        .checked_mul(c)
                        .and_then(|x| slot.checked_add(x))
                        .ok_or(Error::Overflow(vec![(v + part) as u32, h as u32 + 1]))?;
                }
            }
        }
        layer = next;
    }
    Ok(out)
}

/// Expansion of `pt(1−p)³ / ((1−p)⁴ − pt(1 − p − p² + p³ + p²t))`.
pub fn hcv_rational_gf(n: u32) -> Result<TruncatedSeries> {
    require_positive("degree bound", n)?;
    let mono = |i, j, c| TruncatedSeries::monomial(2, n, i, j, c);
    let one_minus_p = mono(0, 0, 1)?.checked_sub(&mono(1, 0, 1)?)?;
    let pt = mono(1, 1, 1)?;
    let numerator = pt.checked_mul(&one_minus_p.checked_pow(3)?)?;
    let mut inner = mono(0, 0, 1)?;
    for term in [mono(1, 0, -1)?, mono(2, 0, -1)?, mono(3, 0, 1)?, mono(2, 1, 1)?] {
        inner = inner.checked_add(&term)?;
    }
    let denominator = one_minus_p.checked_pow(4)?.checked_sub(&pt.checked_mul(&inner)?)?;
    numerator.checked_mul(&denominator.reciprocal()?)
}

/// Delannoy number `D_{n,k}`.
pub fn delannoy(n: u32, k: u32) -> Result<i64> {
    let (n, k) = (n as usize, k as usize);
    let mut table = vec![vec![0i64; k + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=k {
            table[i][j] = if i == 0 || j == 0 {
                1
            } else {
                table[i - 1][j]
                    .checked_add(table[i][j - 1])
                    .and_then(|x| x.checked_add(table[i - 1][j - 1]))
                    .ok_or(Error::Overflow(vec![i as u32, j as u32]))?
            };
        }
    }
    Ok(table[n][k])
}

/// Compares the height-`h` horizontally convex polyomino series with
/// `p^h / (1−p)^{2h−1} · Σ_{k<h} D_{h−k−1,k} p^k` up to degree `n`.
pub fn delannoy_identity_check(h: u32, n: u32) -> Result<bool> {
    require_positive("height", h)?;
    if n < h {
        return Err(Error::OutOfRange(format!("degree bound {n} is below height {h}")));
    }
    let counts = hcv_polyomino_counts(n)?;
    let mut lhs = vec![0i64; n as usize + 1];
    for v in h..=n {
        lhs[v as usize] = counts.get(&(v, h)).copied().unwrap_or(0);
    }

    let mut poly = vec![0i64; n as usize + 1];
    for k in 0..h {
        if h + k <= n {
            poly[(h + k) as usize] = delannoy(h - k - 1, k)?;
        }
    }
    let one_minus_p = TruncatedSeries::from_coeffs(n, &[1, -1])?;
    let rhs = TruncatedSeries::from_coeffs(n, &poly)?
        .checked_mul(&one_minus_p.checked_pow(2 * h - 1)?.reciprocal()?)?;
    Ok((0..=n).all(|v| rhs.coeff(v, 0) == lhs[v as usize]))
}

/// Horizontally convex polyominoes of height `h` by multivolume:
/// `Π (v_i + v_{i+1} − 1)` on every composition.
pub fn hcv_multivolumes(height: usize, bound: u32) -> Result<MultiSeq> {
    MultiSeq::from_fn(height, bound, Shape::Full, |v| {
        v.windows(2).map(|w| i64::from(w[0] + w[1] - 1)).product()
    })
}

/// Plateau polycubes by `(volume, height)`, from the `⋆`-square of
/// [`hcv_multivolumes`].
pub fn plateau_polycube_counts(n: u32) -> Result<VolumeHeightCounts> {
    require_positive("degree bound", n)?;
    let mut out = BTreeMap::new();
    for h in 1..=n {
        let totals = star_power(&hcv_multivolumes(h as usize, n)?, 2)?.totals_by_weight()?;
        for v in h..=n {
            out.insert((v, h), totals[v as usize]);
        }
    }
    Ok(out)
}

/// Sums a `(volume, height)` table over heights, volumes `1..=n`.
pub fn volume_totals(counts: &VolumeHeightCounts, n: u32) -> Result<Vec<i64>> {
    let mut out = vec![0i64; n as usize];
    for (&(v, _), &c) in counts {
        if (1..=n).contains(&v) {
            let slot = &mut out[v as usize - 1];
            *slot = slot.checked_add(c).ok_or(Error::Overflow(vec![v]))?;
        }
    }
    Ok(out)
}
