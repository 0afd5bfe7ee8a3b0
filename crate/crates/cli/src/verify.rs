use std::io::Write;

use espalier_core::conv::{convolve, delta, star_inverse, star_power, unit, MultiSeq, Shape};
use espalier_core::divorder::{classical_mobius, is_prime, leq, mobius};
use espalier_core::families::{
    count_by_volume, degree_in_dimension, quasi_espalier_series, recurrence_table, volume_series,
};
use espalier_core::genfunc::{
    delannoy_identity_check, directed_plateau_counts, directed_plateau_counts_by_convolution,
    hcv_polyomino_counts, hcv_rational_gf, volume_totals,
};
use espalier_core::partition::{partitions_with_height, tuples_within};
use espalier_core::{oracle, reference, Family, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{io_error, CliError, Suite};

const SEED: u64 = 0x5EED_CAFE;
const RANDOM_CASES: usize = 40;

type Outcome = Result<(), String>;

struct Check {
    name: String,
    anchor: &'static str,
    outcome: Outcome,
}

fn check(name: impl Into<String>, anchor: &'static str, outcome: Outcome) -> Check {
    Check { name: name.into(), anchor, outcome }
}

fn core<T>(r: espalier_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

pub fn run(out: &mut impl Write, suite: Suite) -> Result<(), CliError> {
    let suites = match suite {
        Suite::All => vec![
            Suite::PaperSequences,
            Suite::Oracle,
            Suite::Algebra,
            Suite::Poset,
            Suite::Genfunc,
            Suite::Degree,
        ],
        s => vec![s],
    };
    let mut failed = 0;
    for s in suites {
        for c in checks(s) {
            match &c.outcome {
                Ok(()) => writeln!(out, "PASS  {}  [{}]", c.name, c.anchor),
                Err(why) => {
                    failed += 1;
                    writeln!(out, "FAIL  {}  [{}]: {why}", c.name, c.anchor)
                }
            }
            .map_err(io_error)?;
        }
    }
    if failed > 0 {
        Err(CliError::Failed(failed))
    } else {
        Ok(())
    }
}

fn checks(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::PaperSequences => published_sequences(),
        Suite::Oracle => oracle_checks(),
        Suite::Algebra => algebra(),
        Suite::Poset => poset(),
        Suite::Genfunc => genfunc(),
        Suite::Degree => degree(),
        Suite::All => unreachable!(),
    }
}

fn published_sequences() -> Vec<Check> {
    let stacked = |family: Family, want: &[i64]| -> Outcome {
        let n = want.len() as u32;
        expect_eq(core(volume_series(family, 2, n))?.as_slice(), want)
            .map_err(|e| format!("convolution: {e}"))?;
        let rec = core(core(recurrence_table(family, n))?.volume_totals())?;
        expect_eq(rec.as_slice(), want).map_err(|e| format!("recurrence: {e}"))
    };
    let quasi = |want: &[i64]| -> Outcome {
        expect_eq(core(quasi_espalier_series(want.len() as u32))?.as_slice(), want)
    };
    vec![
        check(
            "espalier volumes 1..12",
            reference::ESPALIERS.source,
            stacked(Family::Espalier, reference::ESPALIERS.values),
        ),
        check(
            "pyramid volumes 1..12",
            reference::PYRAMIDS.source,
            stacked(Family::Pyramid, reference::PYRAMIDS.values),
        ),
        check(
            "quasi-espalier volumes 1..12",
            reference::QUASI_ESPALIERS.source,
            quasi(reference::QUASI_ESPALIERS.values),
        ),
    ]
}

fn oracle_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for family in [Family::Espalier, Family::Pyramid] {
        for v in 1..=8 {
            let outcome = (|| {
                let sets = core(oracle::enumerate(family, v))?;
                for s in &sets {
                    if !s.is_face_connected() || !oracle::satisfies_family(s, family) {
                        return Err(format!("invalid cell set {:?}", s.cells()));
                    }
                }
                expect_eq(sets.len() as i64, core(count_by_volume(family, 2, v))?)
            })();
            out.push(check(format!("{} oracle, v = {v}", family.name()), "brute-force stacks", outcome));
        }
    }
    let series = quasi_espalier_series(5);
    for w in 1..=5 {
        let outcome = (|| {
            let found = core(oracle::enumerate_quasi_espaliers(w, w + 1))?.len() as i64;
            expect_eq(found, core(series.clone())?.get(w))
        })();
        out.push(check(format!("quasi-espalier oracle, w = {w}"), "brute-force stacks", outcome));
    }
    out
}

fn random_seq(rng: &mut ChaCha8Rng, h: usize, bound: u32, shape: Shape) -> MultiSeq {
    MultiSeq::from_fn(h, bound, shape, |_| rng.gen_range(-4..=4)).expect("valid dimensions")
}

/// Runs `property` on `RANDOM_CASES` random families of `count` sequences
/// sharing height and bound.
fn randomized(
    rng: &mut ChaCha8Rng,
    count: usize,
    shape: Shape,
    property: impl Fn(&[MultiSeq]) -> Outcome,
) -> Outcome {
    for case in 0..RANDOM_CASES {
        let h = rng.gen_range(1..=3);
        let bound = rng.gen_range(h as u32..=10);
        let seqs: Vec<MultiSeq> = (0..count).map(|_| random_seq(rng, h, bound, shape)).collect();
        property(&seqs).map_err(|e| format!("case {case} (h = {h}, V = {bound}): {e}"))?;
    }
    Ok(())
}

fn algebra() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let anchor = "Dirichlet convolution";
    let mut out = Vec::new();
    out.push(check(
        "unit is a two-sided identity",
        anchor,
        randomized(&mut rng, 1, Shape::Full, |v| {
            let u = core(unit(v[0].height(), v[0].volume_bound()))?;
            expect_eq(core(convolve(&v[0], &u))?, v[0].clone())?;
            expect_eq(core(convolve(&u, &v[0]))?, v[0].clone())
        }),
    ));
    out.push(check(
        "convolution is commutative",
        anchor,
        randomized(&mut rng, 2, Shape::Full, |v| {
            expect_eq(core(convolve(&v[0], &v[1]))?, core(convolve(&v[1], &v[0]))?)
        }),
    ));
    out.push(check(
        "convolution is associative",
        anchor,
        randomized(&mut rng, 3, Shape::Full, |v| {
            let left = core(convolve(&core(convolve(&v[0], &v[1]))?, &v[2]))?;
            let right = core(convolve(&v[0], &core(convolve(&v[1], &v[2]))?))?;
            expect_eq(left, right)
        }),
    ));
    out.push(check(
        "convolution distributes over addition",
        anchor,
        randomized(&mut rng, 3, Shape::Full, |v| {
            let left = core(convolve(&v[0], &core(v[1].add(&v[2]))?))?;
            let right = core(core(convolve(&v[0], &v[1]))?.add(&core(convolve(&v[0], &v[2]))?))?;
            expect_eq(left, right)
        }),
    ));
    out.push(check(
        "weakly decreasing support is closed",
        anchor,
        randomized(&mut rng, 2, Shape::Triangular, |v| {
            let c = core(convolve(&v[0], &v[1]))?;
            let bad = c.nonzero().find(|(k, _)| k.windows(2).any(|w| w[0] < w[1])).map(|(k, _)| k.to_vec());
            match bad {
                Some(k) => Err(format!("nonzero at {k:?}")),
                None => Ok(()),
            }
        }),
    ));
    out.push(check(
        "star inverse of a unit-led sequence",
        anchor,
        randomized(&mut rng, 1, Shape::Full, |v| {
            let mut a = v[0].clone();
            let lead = if a.get(&vec![1; a.height()]) >= 0 { 1 } else { -1 };
            core(a.set(&vec![1; a.height()], lead))?;
            let inv = core(star_inverse(&a))?;
            let u = core(unit(a.height(), a.volume_bound()))?;
            expect_eq(core(convolve(&a, &inv))?, u.clone())?;
            expect_eq(core(convolve(&inv, &a))?, u)
        }),
    ));
    out.push(check(
        "powers add under convolution",
        anchor,
        randomized(&mut rng, 1, Shape::Triangular, |v| {
            let whole = core(star_power(&v[0], 5))?;
            let split = core(convolve(&core(star_power(&v[0], 2))?, &core(star_power(&v[0], 3))?))?;
            expect_eq(whole, split)
        }),
    ));
    out
}

fn poset() -> Vec<Check> {
    let anchor = "projection order";
    let mut out = Vec::new();
    for h in 1..=3 {
        let outcome = (|| {
            let inv = core(star_inverse(&core(delta(h, 12))?))?;
            let bottom = core(Partition::ones(h))?;
            for n in tuples_within(h, 12, true) {
                let top = core(Partition::new(n.clone()))?;
                let m = core(mobius(&bottom, &top))?;
                expect_eq(inv.get(&n), m).map_err(|e| format!("at {top}: {e}"))?;
                if h == 1 {
                    expect_eq(m, core(classical_mobius(n[0]))?).map_err(|e| format!("mu({}): {e}", n[0]))?;
                }
            }
            Ok(())
        })();
        out.push(check(format!("zeta inverse equals Möbius, h = {h}"), anchor, outcome));
    }
    for h in [2usize, 3] {
        let outcome = (|| {
            let elems: Vec<Partition> = (1..=10).flat_map(|w| partitions_with_height(w, h)).collect();
            let le = |a: &Partition, b: &Partition| core(leq(a, b));
            for a in &elems {
                if !le(a, a)? {
                    return Err(format!("{a} not reflexive"));
                }
                for b in &elems {
                    if !le(a, b)? {
                        continue;
                    }
                    if a != b && le(b, a)? {
                        return Err(format!("{a} and {b} violate antisymmetry"));
                    }
                    for c in &elems {
                        if le(b, c)? && !le(a, c)? {
                            return Err(format!("{a}, {b}, {c} violate transitivity"));
                        }
                    }
                }
            }
            Ok(())
        })();
        out.push(check(format!("partial order axioms, h = {h}, weight <= 10"), anchor, outcome));
    }

    let mu2 = |a: u32, b: u32| -> Result<i64, String> {
        core(mobius(&core(Partition::ones(2))?, &core(Partition::new(vec![a, b]))?))
    };
    let identity = |range: std::ops::RangeInclusive<u32>, f: &dyn Fn(u32) -> Outcome| -> Outcome {
        range.into_iter().try_for_each(f)
    };
    out.push(check(
        "mu((1,1),(n,n)) = mu(n), n <= 30",
        anchor,
        identity(1..=30, &|n| expect_eq(mu2(n, n)?, core(classical_mobius(n))?).map_err(|e| format!("n = {n}: {e}"))),
    ));
    out.push(check(
        "mu((1,1),(n,1)) = mu(n), n <= 30",
        anchor,
        identity(1..=30, &|n| expect_eq(mu2(n, 1)?, core(classical_mobius(n))?).map_err(|e| format!("n = {n}: {e}"))),
    ));
    out.push(check(
        "sum_k mu((1,1),(n,k)) = n mu(n), n <= 20",
        anchor,
        identity(1..=20, &|n| {
            let sum = (1..=n).map(|k| mu2(n, k)).sum::<Result<i64, String>>()?;
            expect_eq(sum, i64::from(n) * core(classical_mobius(n))?).map_err(|e| format!("n = {n}: {e}"))
        }),
    ));
    out.push(check(
        "mu((1,1),(p,m)) = -1 for primes p <= 29, m < p",
        anchor,
        identity(2..=29, &|p| {
            if !is_prime(p) {
                return Ok(());
            }
            (1..p).try_for_each(|m| expect_eq(mu2(p, m)?, -1).map_err(|e| format!("({p},{m}): {e}")))
        }),
    ));
    out
}

fn genfunc() -> Vec<Check> {
    let mut out = Vec::new();
    for d in 1..=3 {
        let outcome = (|| {
            expect_eq(core(directed_plateau_counts(12, d))?, core(directed_plateau_counts_by_convolution(12, d))?)
        })();
        out.push(check(
            format!("directed plateau polycubes, dim {}, v <= 12", d + 1),
            "plateau generating function",
            outcome,
        ));
    }
    out.push(check(
        "directed plateau totals begin 1, 3, 9 in dim 3",
        "plateau generating function",
        (|| {
            let totals = core(volume_totals(&core(directed_plateau_counts(3, 2))?, 3))?;
            expect_eq(totals, vec![1, 3, 9])
        })(),
    ));
    for h in 1..=6 {
        let outcome = (|| match core(delannoy_identity_check(h, 12))? {
            true => Ok(()),
            false => Err("coefficients differ".into()),
        })();
        out.push(check(format!("Delannoy identity, h = {h}"), "Delannoy numbers", outcome));
    }
    out.push(check(
        "convex polyomino totals match the rational function, v <= 12",
        "horizontally convex polyominoes",
        (|| {
            let dp = core(volume_totals(&core(hcv_polyomino_counts(12))?, 12))?;
            let marginal = core(core(hcv_rational_gf(12))?.at_t_one())?;
            let gf: Vec<i64> = (1..=12).map(|v| marginal.coeff(v, 0)).collect();
            expect_eq(&dp, &gf)?;
            expect_eq(&dp[..5], &[1, 2, 6, 19, 61][..])
        })(),
    ));
    out
}

fn degree() -> Vec<Check> {
    let mut out = Vec::new();
    for family in [Family::Espalier, Family::Pyramid] {
        for v in 1..=16u32 {
            let log = v.ilog2();
            let outcome = core(degree_in_dimension(family, v, log + 2)).and_then(|d| expect_eq(d, log as usize));
            out.push(check(
                format!("{} count at v = {v} has degree {log} in d", family.name()),
                "polynomial in dimension",
                outcome,
            ));
        }
    }
    out
}
