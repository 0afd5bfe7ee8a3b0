//! Counting espaliers and pyramids in dimension `d + 1`.
//!
//! The number of `(d+1)`-espaliers (resp. pyramids) with multivolume `λ`
//! is the coefficient at `λ` of `△^{⋆d}` (resp. `▲^{⋆d}`). Everything here
//! aggregates those coefficients, except [`recurrence_table`] which counts
//! three-dimensional objects plateau by plateau and serves as a second,
//! independent route for `d = 2`.
//!
//! Throughout, `d` is the convolution exponent; the ambient dimension is
//! `d + 1`.

use std::collections::BTreeMap;

use crate::conv::{black_delta, convolve, delta, star_power, unit, MultiSeq};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Espalier,
    Pyramid,
}

impl Family {
    /// `△` for espaliers, `▲` for pyramids.
    pub fn generator(self, height: usize, bound: u32) -> Result<MultiSeq> {
        match self {
            Family::Espalier => delta(height, bound),
            Family::Pyramid => black_delta(height, bound),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Espalier => "espalier",
            Family::Pyramid => "pyramid",
        }
    }
}

/// Counts indexed by volume `1..=V`; index 0 holds the empty-object
/// convention `n_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeSeries {
    counts: Vec<i64>,
}

impl VolumeSeries {
    pub fn from_counts(counts: Vec<i64>) -> Self {
        let mut full = Vec::with_capacity(counts.len() + 1);
        full.push(0);
        full.extend(counts);
        VolumeSeries { counts: full }
    }

    pub fn max_volume(&self) -> u32 {
        (self.counts.len() - 1) as u32
    }

    /// Count at volume `v`; zero outside `1..=V`.
    pub fn get(&self, v: u32) -> i64 {
        self.counts.get(v as usize).copied().unwrap_or(0)
    }

    /// Counts for volumes `1..=V`.
    pub fn as_slice(&self) -> &[i64] {
        &self.counts[1..]
    }
}

fn overflow_at(v: u32) -> Error {
    Error::Overflow(vec![v])
}

/// `n^t_{[λ]}(d)`.
pub fn count_by_multivolume(family: Family, d: u32, lambda: &Partition) -> Result<i64> {
    let gen = family.generator(lambda.height(), lambda.weight())?;
    Ok(star_power(&gen, d)?.get(lambda.parts()))
}

/// `n^t_{v,h}(d)`; zero when `h > v`.
pub fn count_by_volume_height(family: Family, d: u32, v: u32, h: usize) -> Result<i64> {
    if h == 0 {
        return Err(Error::ZeroHeight);
    }
    if h as u32 > v {
        return Ok(0);
    }
    let power = star_power(&family.generator(h, v)?, d)?;
    Ok(power.totals_by_weight()?[v as usize])
}

/// `n^t_v(d)`, with `n^t_0 = 0`.
pub fn count_by_volume(family: Family, d: u32, v: u32) -> Result<i64> {
    if v == 0 {
        return Ok(0);
    }
    Ok(volume_series(family, d, v)?.get(v))
}

/// `n^t_1(d), …, n^t_V(d)`.
pub fn volume_series(family: Family, d: u32, max_volume: u32) -> Result<VolumeSeries> {
    if max_volume == 0 {
        return Err(Error::OutOfRange("max volume must be at least 1".into()));
    }
    let mut counts = vec![0i64; max_volume as usize];
    for ((v, _), c) in height_volume_table(family, d, max_volume)? {
        let slot = &mut counts[v as usize - 1];
        *slot = slot.checked_add(c).ok_or_else(|| overflow_at(v))?;
    }
    Ok(VolumeSeries::from_counts(counts))
}

/// `n^t_{v,h}(d)` for every `1 ≤ h ≤ v ≤ V`, keyed by `(v, h)`.
pub fn height_volume_table(
    family: Family,
    d: u32,
    max_volume: u32,
) -> Result<BTreeMap<(u32, usize), i64>> {
    let mut out = BTreeMap::new();
    for h in 1..=max_volume as usize {
        let totals = star_power(&family.generator(h, max_volume)?, d)?.totals_by_weight()?;
        for v in h as u32..=max_volume {
            out.insert((v, h), totals[v as usize]);
        }
    }
    Ok(out)
}

/// `n^t_{[λ]}(d)` for every partition `λ` of `v`, ordered by height then
/// colex.
pub fn multivolume_counts(family: Family, d: u32, v: u32) -> Result<Vec<(Partition, i64)>> {
    let mut out = Vec::new();
    for h in 1..=v as usize {
        let power = star_power(&family.generator(h, v)?, d)?;
        for lambda in crate::partition::partitions_with_height(v, h) {
            let c = power.get(lambda.parts());
            out.push((lambda, c));
        }
    }
    Ok(out)
}

/// `n^t_{i,j,h,v}`: objects of volume `v` and height `h` whose top plateau
/// is an `i × j` rectangle.
#[derive(Debug, Clone)]
pub struct RecurrenceTable {
    family: Family,
    max_volume: u32,
    entries: BTreeMap<(u32, u32, u32, u32), i64>,
}

impl RecurrenceTable {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_volume(&self) -> u32 {
        self.max_volume
    }

    pub fn get(&self, i: u32, j: u32, h: u32, v: u32) -> i64 {
        self.entries.get(&(i, j, h, v)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j, h, v)`.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32, u32, u32), i64)> + '_ {
        self.entries.iter().map(|(&k, &c)| (k, c))
    }

    /// `Σ_{i,j,h} n_{i,j,h,v}` for each volume.
    pub fn volume_totals(&self) -> Result<VolumeSeries> {
        let mut counts = vec![0i64; self.max_volume as usize];
        for (&(_, _, _, v), &c) in &self.entries {
            let slot = &mut counts[v as usize - 1];
            *slot = slot.checked_add(c).ok_or_else(|| overflow_at(v))?;
        }
        Ok(VolumeSeries::from_counts(counts))
    }
}

/// Builds `n^t_{i,j,h,v}` for `v ≤ max_volume` from the plateau recurrence
///
/// ```text
/// n_{i,j,h,v} = Σ_{a,b ≥ 0} α_{a,b} n_{i+a, j+b, h-1, v-ij},   n_{i,j,1,v} = [ij = v]
/// ```
///
/// with `α = 1` for espaliers and `α = (a+1)(b+1)` for pyramids: the top
/// `i × j` plateau sits on an `(i+a) × (j+b)` one, at a fixed corner or at
/// any of the `(a+1)(b+1)` offsets.
pub fn recurrence_table(family: Family, max_volume: u32) -> Result<RecurrenceTable> {
    if max_volume == 0 {
        return Err(Error::OutOfRange("max volume must be at least 1".into()));
    }
    let weight = |a: u32, b: u32| -> i64 {
        match family {
            Family::Espalier => 1,
            Family::Pyramid => i64::from((a + 1) * (b + 1)),
        }
    };

    let mut entries = BTreeMap::new();
    let mut layer: BTreeMap<(u32, u32, u32), i64> = BTreeMap::new();
    for i in 1..=max_volume {
        for j in 1..=max_volume / i {
            layer.insert((i, j, i * j), 1);
        }
    }
    let mut h = 1u32;
    while !layer.is_empty() {
        for (&(i, j, v), &c) in &layer {
            entries.insert((i, j, h, v), c);
        }
        let mut next: BTreeMap<(u32, u32, u32), i64> = BTreeMap::new();
        for (&(big_i, big_j, w), &c) in &layer {
            for i in 1..=big_i {
                for j in 1..=big_j {
                    let v = w + i * j;
                    if v > max_volume {
                        break;
                    }
                    let term = weight(big_i - i, big_j - j)
                        .checked_mul(c)
                        .ok_or_else(|| overflow_at(v))?;
                    let slot = next.entry((i, j, v)).or_insert(0);
                    *slot = slot.checked_add(term).ok_or_else(|| overflow_at(v))?;
                }
            }
        }
        layer = next;
        h += 1;
    }
    Ok(RecurrenceTable {
        family,
        max_volume,
        entries,
    })
}

/// Stabilized `n^t_{w+h,h}` for `w = 1..=W`, computed at height `start(w)`
/// and checked against height `start(w) + 1`.
fn stabilized_series(family: Family, max_w: u32, start: impl Fn(u32) -> u32) -> Result<VolumeSeries> {
    if max_w == 0 {
        return Err(Error::OutOfRange("series length must be at least 1".into()));
    }
    let mut counts = Vec::with_capacity(max_w as usize);
    for w in 1..=max_w {
        let h = start(w);
        let first = count_by_volume_height(family, 2, w + h, h as usize)?;
        let second = count_by_volume_height(family, 2, w + h + 1, h as usize + 1)?;
        if first != second {
            return Err(Error::Stabilization {
                offset: w,
                first,
                second,
            });
        }
        counts.push(first);
    }
    Ok(VolumeSeries::from_counts(counts))
}

/// Coefficients of `lim_{h→∞} x^{-h} 𝓔^e(x; h)`: quasi-espaliers by volume.
///
/// A quasi-espalier of volume `w` has at most `w` levels wider than one
/// cell, and stacking further single cells on an espalier is unique, so the
/// value is already reached at `h = w`.
pub fn quasi_espalier_series(max_w: u32) -> Result<VolumeSeries> {
    stabilized_series(Family::Espalier, max_w, |w| w)
}

/// The stabilized pyramid series and its quasi-pyramid part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPyramidSeries {
    /// Coefficients of `lim_{h→∞} x^{-h} 𝓔^p(x; h)`.
    pub limit: VolumeSeries,
    /// `Q^p`: the limit minus `x / (1 - x)`.
    pub quasi: VolumeSeries,
}

/// Unlike espaliers, a pyramid whose `w` excess cells fill every level
/// still gains a factor when a single cell is stacked on top, so
/// stabilization is only reached at `h = w + 1`.
pub fn quasi_pyramid_series(max_w: u32) -> Result<QuasiPyramidSeries> {
    let limit = stabilized_series(Family::Pyramid, max_w, |w| w + 1)?;
    let quasi = VolumeSeries::from_counts(limit.as_slice().iter().map(|c| c - 1).collect());
    Ok(QuasiPyramidSeries { limit, quasi })
}

/// `n^t_v(d)` for `d = 0..=d_max`.
pub fn counts_over_dimensions(family: Family, v: u32, d_max: u32) -> Result<Vec<i64>> {
    if v == 0 {
        return Err(Error::OutOfRange("volume must be at least 1".into()));
    }
    let mut totals = vec![0i64; d_max as usize + 1];
    for h in 1..=v as usize {
        let gen = family.generator(h, v)?;
        let mut power = unit(h, v)?;
        for slot in totals.iter_mut() {
            let c = power.totals_by_weight()?[v as usize];
            *slot = slot.checked_add(c).ok_or_else(|| overflow_at(v))?;
            power = convolve(&power, &gen)?;
        }
    }
    Ok(totals)
}

/// Degree of `d ↦ n^t_v(d)`, read off the forward-difference table at
/// `d = 0..=d_max`. Every difference above the detected degree must vanish
/// identically over the sampled range.
pub fn degree_in_dimension(family: Family, v: u32, d_max: u32) -> Result<usize> {
    if v == 0 {
        return Err(Error::OutOfRange("volume must be at least 1".into()));
    }
    let needed = v.ilog2() + 2;
    if d_max < needed {
        return Err(Error::OutOfRange(format!(
            "d_max = {d_max} is below {needed} for volume {v}"
        )));
    }
    let mut rows = vec![counts_over_dimensions(family, v, d_max)?];
    while rows.last().is_some_and(|r| r.len() > 1) {
        let prev = rows.last().unwrap();
        let diff = prev
            .windows(2)
            .map(|w| w[1].checked_sub(w[0]).ok_or_else(|| overflow_at(v)))
            .collect::<Result<Vec<_>>>()?;
        rows.push(diff);
    }
    let degree = rows
        .iter()
        .rposition(|r| r[0] != 0)
        .ok_or_else(|| Error::OutOfRange(format!("n_{v}(d) vanishes identically")))?;
    if let Some(order) = (degree + 1..rows.len()).find(|&k| rows[k].iter().any(|&x| x != 0)) {
        return Err(Error::NonVanishingDifference { volume: v, order });
    }
    Ok(degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn multivolume_examples() {
        assert_eq!(count_by_multivolume(Family::Espalier, 2, &p(&[2, 1])).unwrap(), 2);
        assert_eq!(count_by_multivolume(Family::Pyramid, 2, &p(&[2, 1])).unwrap(), 4);
        assert_eq!(count_by_multivolume(Family::Espalier, 0, &p(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(count_by_multivolume(Family::Espalier, 0, &p(&[2, 1])).unwrap(), 0);
    }

    #[test]
    fn volume_examples() {
        assert_eq!(count_by_volume(Family::Espalier, 2, 3).unwrap(), 5);
        assert_eq!(count_by_volume(Family::Pyramid, 2, 3).unwrap(), 7);
        assert_eq!(count_by_volume(Family::Pyramid, 0, 9).unwrap(), 1);
        assert_eq!(count_by_volume(Family::Espalier, 2, 0).unwrap(), 0);
    }

    #[test]
    fn two_dimensional_espaliers_are_partitions() {
        let s = volume_series(Family::Espalier, 1, 5).unwrap();
        assert_eq!(s.as_slice(), &[1, 2, 3, 5, 7]);
    }

    #[test]
    fn volume_height_examples() {
        assert_eq!(count_by_volume_height(Family::Espalier, 2, 3, 1).unwrap(), 2);
        assert_eq!(count_by_volume_height(Family::Espalier, 2, 3, 3).unwrap(), 1);
        assert_eq!(count_by_volume_height(Family::Pyramid, 2, 3, 2).unwrap(), 4);
        assert_eq!(count_by_volume_height(Family::Pyramid, 2, 3, 4).unwrap(), 0);
    }

    #[test]
    fn recurrence_examples() {
        let t = recurrence_table(Family::Espalier, 4).unwrap();
        let h1: i64 = (1..=4)
            .flat_map(|i| (1..=4).map(move |j| (i, j)))
            .map(|(i, j)| t.get(i, j, 1, 4))
            .sum();
        assert_eq!(h1, 3);
        assert_eq!(t.get(1, 2, 1, 2), 1);
        assert_eq!(t.get(2, 1, 1, 3), 0);
    }

    #[test]
    fn recurrence_matches_convolution() {
        for family in [Family::Espalier, Family::Pyramid] {
            let rec = recurrence_table(family, 12).unwrap().volume_totals().unwrap();
            assert_eq!(rec, volume_series(family, 2, 12).unwrap(), "{family:?}");
        }
    }

    #[test]
    fn recurrence_heights_match_convolution() {
        let t = recurrence_table(Family::Pyramid, 9).unwrap();
        let mut by_height: BTreeMap<(u32, usize), i64> = BTreeMap::new();
        for ((_, _, h, v), c) in t.entries() {
            *by_height.entry((v, h as usize)).or_default() += c;
        }
        let conv = height_volume_table(Family::Pyramid, 2, 9).unwrap();
        for (key, c) in conv {
            assert_eq!(by_height.get(&key).copied().unwrap_or(0), c, "{key:?}");
        }
    }

    #[test]
    fn quasi_espalier_first_values() {
        let q = quasi_espalier_series(4).unwrap();
        assert_eq!(q.as_slice(), &[2, 4, 7, 12]);
    }

    #[test]
    fn quasi_pyramid_decomposition() {
        let s = quasi_pyramid_series(6).unwrap();
        let e = quasi_espalier_series(6).unwrap();
        for w in 1..=6 {
            assert_eq!(s.quasi.get(w), s.limit.get(w) - 1);
            assert!(s.limit.get(w) >= e.get(w));
        }
        // (2,1) and (2,1,1): ▲⋆▲ gives 4 both times
        assert_eq!(s.limit.get(1), 4);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree_in_dimension(Family::Espalier, 8, 6).unwrap(), 3);
        assert_eq!(degree_in_dimension(Family::Pyramid, 1, 3).unwrap(), 0);
        assert_eq!(degree_in_dimension(Family::Pyramid, 5, 5).unwrap(), 2);
        assert!(degree_in_dimension(Family::Pyramid, 8, 4).is_err());
    }

    #[test]
    fn dimension_zero_convention() {
        for family in [Family::Espalier, Family::Pyramid] {
            let s = volume_series(family, 0, 9).unwrap();
            assert!(s.as_slice().iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn multivolume_counts_order() {
        let rows = multivolume_counts(Family::Espalier, 2, 3).unwrap();
        let got: Vec<(String, i64)> = rows.iter().map(|(l, c)| (l.to_string(), *c)).collect();
        assert_eq!(
            got,
            [("(3)".to_string(), 2), ("(2,1)".to_string(), 2), ("(1,1,1)".to_string(), 1)]
        );
    }
}
