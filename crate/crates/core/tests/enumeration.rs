mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use espalier_core::divorder::{classical_mobius, interval, is_prime, leq, mobius};
use espalier_core::families::*;
use espalier_core::genfunc::*;
use espalier_core::oracle::{self, CellSet};
use espalier_core::partition::{partitions_of, partitions_with_height, Partition};

const FAMILIES: [Family; 2] = [Family::Espalier, Family::Pyramid];

#[test]
fn oracle_matches_algebra_by_multivolume() {
    for family in FAMILIES {
        for v in 1..=8 {
            let mut by_mv: BTreeMap<Partition, BTreeSet<CellSet>> = BTreeMap::new();
            for s in oracle::stacks(family, v) {
                by_mv.entry(oracle::multivolume_of(&s)).or_default().insert(s.to_cells());
            }
            for lambda in partitions_of(v) {
                let found = by_mv.get(&lambda).map_or(0, BTreeSet::len) as i64;
                assert_eq!(found, count_by_multivolume(family, 2, &lambda).unwrap(), "{family:?} {lambda}");
            }
        }
    }
}

#[test]
fn oracle_sets_are_valid_polycubes() {
    for family in FAMILIES {
        for v in 1..=8 {
            for cells in oracle::enumerate(family, v).unwrap() {
                assert_eq!(cells.len(), v as usize);
                assert!(cells.is_face_connected());
                assert!(oracle::satisfies_family(&cells, family));
            }
        }
    }
}

#[test]
fn espaliers_are_pairs_of_partitions() {
    for v in 1..=8 {
        let stacks = oracle::stacks(Family::Espalier, v);
        let mut seen = BTreeSet::new();
        for s in &stacks {
            let (lx, ly) = oracle::projections(s).unwrap();
            assert_eq!(&oracle::espalier_from_projections(&lx, &ly).unwrap(), s);
            let mv = oracle::multivolume_of(s);
            let products: Vec<u32> = lx.parts().iter().zip(ly.parts()).map(|(a, b)| a * b).collect();
            assert_eq!(mv.parts(), products.as_slice());
            assert!(seen.insert((lx, ly)));
        }
        // every equal-height pair with Σ λx_i λy_i = v is hit
        let mut pairs = 0;
        for h in 1..=v as usize {
            for wx in 1..=v {
                for lx in partitions_with_height(wx, h) {
                    for wy in 1..=v {
                        for ly in partitions_with_height(wy, h) {
                            let vol: u32 = lx.parts().iter().zip(ly.parts()).map(|(a, b)| a * b).sum();
                            if vol == v {
                                pairs += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(pairs, seen.len(), "v = {v}");
    }
}

#[test]
fn pyramid_offsets_match_recurrence_weights() {
    let dims = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (1, 3), (3, 2), (2, 3), (3, 3)];
    for &(y0, z0) in &dims {
        for &(y1, z1) in &dims {
            for &(y2, z2) in &dims {
                let got = oracle::placement_count(&[(y0, z0), (y1, z1), (y2, z2)]);
                let want = if y1 <= y0 && z1 <= z0 && y2 <= y1 && z2 <= z1 {
                    u64::from((y0 - y1 + 1) * (z0 - z1 + 1) * (y1 - y2 + 1) * (z1 - z2 + 1))
                } else {
                    0
                };
                assert_eq!(got, want);
            }
        }
    }
}

/// Rows of lengths `λ_1 ≥ … ≥ λ_h`, each lying within the row below.
fn shifted_row_stacks(lambda: &[u32]) -> i64 {
    fn rec(lambda: &[u32], below_start: u32, below_len: u32) -> i64 {
        let Some((&len, rest)) = lambda.split_first() else {
            return 1;
        };
        (below_start..=below_start + below_len - len)
            .map(|start| rec(rest, start, len))
            .sum()
    }
    rec(&lambda[1..], 0, lambda[0])
}

#[test]
fn two_dimensional_pyramids_by_type() {
    for w in 1..=8 {
        for lambda in partitions_of(w) {
            let direct = shifted_row_stacks(lambda.parts());
            let formula: i64 = lambda.parts().windows(2).map(|p| i64::from(p[0] - p[1] + 1)).product();
            assert_eq!(direct, formula, "{lambda}");
            assert_eq!(count_by_multivolume(Family::Pyramid, 1, &lambda).unwrap(), direct);
        }
    }
}

#[test]
fn pyramids_dominate_espaliers() {
    for d in 0..=4 {
        let e = volume_series(Family::Espalier, d, 10).unwrap();
        let p = volume_series(Family::Pyramid, d, 10).unwrap();
        for v in 1..=10 {
            assert!(p.get(v) >= e.get(v), "d = {d}, v = {v}");
        }
    }
}

#[test]
fn single_plateau_espaliers_are_ordered_factorizations() {
    for d in 1..=4 {
        let tau_d = tau_d_series(d, 16).unwrap();
        for v in 1..=16 {
            assert_eq!(count_by_volume_height(Family::Espalier, d, v, 1).unwrap(), tau_d.coeff(v, 0));
        }
    }
}

#[test]
fn quasi_espalier_oracle_stabilizes() {
    let series = quasi_espalier_series(5).unwrap();
    for w in 1..=5 {
        for h in w..=(12 - w - 1) {
            let here = oracle::enumerate_quasi_espaliers(w, h).unwrap().len();
            let above = oracle::enumerate_quasi_espaliers(w, h + 1).unwrap().len();
            assert_eq!(here, above, "w = {w}, h = {h}");
        }
        let count = oracle::enumerate_quasi_espaliers(w, w).unwrap().len() as i64;
        assert_eq!(count, series.get(w));
    }
}

#[test]
fn quasi_espalier_cells_avoid_the_column() {
    for cells in oracle::enumerate_quasi_espaliers(3, 3).unwrap() {
        assert!(cells.cells().iter().all(|&(_, y, z)| (y, z) != (0, 0)));
        assert_eq!(cells.len(), 3);
    }
}

#[test]
fn projection_order_axioms() {
    for h in [2usize, 3] {
        let elems: Vec<Partition> = (1..=10).flat_map(|w| partitions_with_height(w, h)).collect();
        for a in &elems {
            assert!(leq(a, a).unwrap());
            for b in &elems {
                let ab = leq(a, b).unwrap();
                if ab && leq(b, a).unwrap() {
                    assert_eq!(a, b);
                }
                if !ab {
                    continue;
                }
                for c in &elems {
                    if leq(b, c).unwrap() {
                        assert!(leq(a, c).unwrap(), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn diagonal_order_is_divisibility() {
    for h in 1..=3 {
        for d in 1..=12 {
            for n in 1..=12 {
                let a = Partition::new(vec![d; h]).unwrap();
                let b = Partition::new(vec![n; h]).unwrap();
                assert_eq!(leq(&a, &b).unwrap(), n % d == 0);
            }
        }
    }
}

#[test]
fn mobius_identities_for_height_two() {
    let mu = mobius_table(30);
    let bottom = Partition::ones(2).unwrap();
    let m = |a: u32, b: u32| mobius(&bottom, &Partition::new(vec![a, b]).unwrap()).unwrap();
    for n in 1..=30u32 {
        assert_eq!(classical_mobius(n).unwrap(), mu[n as usize]);
        assert_eq!(m(n, n), mu[n as usize], "(n,n), n = {n}");
        assert_eq!(m(n, 1), mu[n as usize], "(n,1), n = {n}");
        let row: i64 = (1..=n).map(|k| m(n, k)).sum();
        assert_eq!(row, i64::from(n) * mu[n as usize], "row sum, n = {n}");
    }
    for p in (2..=29).filter(|&p| is_prime(p)) {
        for k in 1..p {
            assert_eq!(m(p, k), -1, "({p},{k})");
        }
    }
}

#[test]
fn interval_elements_lie_between_endpoints() {
    let lo = Partition::new(vec![2, 1, 1]).unwrap();
    let hi = Partition::new(vec![12, 4, 2]).unwrap();
    let iv = interval(&lo, &hi).unwrap();
    let distinct: BTreeSet<_> = iv.elements().iter().collect();
    assert_eq!(distinct.len(), iv.len());
    for e in iv.elements() {
        assert!(leq(&lo, e).unwrap() && leq(e, &hi).unwrap());
    }
}

#[test]
fn directed_plateau_routes_agree() {
    for d in 1..=3 {
        assert_eq!(
            directed_plateau_counts(12, d).unwrap(),
            directed_plateau_counts_by_convolution(12, d).unwrap(),
            "d = {d}"
        );
    }
}

#[test]
fn directed_plateau_top_stratum_refinement() {
    for d in 1..=3 {
        let by_height = directed_plateau_counts(10, d).unwrap();
        for h in 1..=5u32 {
            let refined = directed_plateau_top_refinement(10, d, h).unwrap();
            let conv = directed_plateau_multivolumes(h as usize, 10, d).unwrap();
            let mut grouped: BTreeMap<(u32, u32), i64> = BTreeMap::new();
            for (k, c) in conv.nonzero() {
                *grouped.entry((k.iter().sum(), k[k.len() - 1])).or_default() += c;
            }
            assert_eq!(refined, grouped, "d = {d}, h = {h}");
            // ω → 1
            for v in 1..=10 {
                let collapsed: i64 = refined.iter().filter(|((vv, _), _)| *vv == v).map(|(_, c)| c).sum();
                assert_eq!(collapsed, by_height.get(&(v, h)).copied().unwrap_or(0));
            }
        }
    }
}

#[test]
fn hcv_counts_match_compositions_and_rational_gf() {
    let counts = hcv_polyomino_counts(12).unwrap();
    let gf = hcv_rational_gf(12).unwrap();
    for v in 1..=12u32 {
        for h in 1..=v {
            let brute = composition_sum(v, h as usize, |a, b| i64::from(a + b - 1));
            assert_eq!(counts[&(v, h)], brute, "({v},{h})");
            assert_eq!(gf.coeff(v, h), brute, "gf ({v},{h})");
        }
    }
    let marginal = gf.at_t_one().unwrap();
    let totals = volume_totals(&counts, 12).unwrap();
    for v in 1..=12 {
        assert_eq!(marginal.coeff(v, 0), totals[v as usize - 1]);
    }
}

#[test]
fn delannoy_identity_holds() {
    for h in 1..=6 {
        assert!(delannoy_identity_check(h, 12).unwrap(), "h = {h}");
    }
}

#[test]
fn plateau_polycubes_from_polyomino_pairs() {
    // ⋆-square of the height-h counts, expanded by brute force over pairs of
    // compositions with componentwise products
    let counts = plateau_polycube_counts(8).unwrap();
    for v in 1..=8u32 {
        for h in 1..=v as usize {
            let mut total = 0i64;
            for_each_composition_pair(v, h, &mut |a, b| {
                let wa: i64 = a.windows(2).map(|w| i64::from(w[0] + w[1] - 1)).product();
                let wb: i64 = b.windows(2).map(|w| i64::from(w[0] + w[1] - 1)).product();
                total += wa * wb;
            });
            assert_eq!(counts[&(v, h as u32)], total, "({v},{h})");
        }
    }
}

fn for_each_composition_pair(v: u32, h: usize, f: &mut impl FnMut(&[u32], &[u32])) {
    fn rec(
        remaining: u32,
        h: usize,
        a: &mut Vec<u32>,
        b: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32], &[u32]),
    ) {
        if a.len() == h {
            if remaining == 0 {
                f(a, b);
            }
            return;
        }
        for x in 1..=remaining {
            for y in 1..=remaining / x {
                a.push(x);
                b.push(y);
                rec(remaining - x * y, h, a, b, f);
                a.pop();
                b.pop();
            }
        }
    }
    rec(v, h, &mut Vec::new(), &mut Vec::new(), f);
}
