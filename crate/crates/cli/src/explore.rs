//! Tabulates height-2 Möbius patterns. Nothing here is asserted: each
//! pattern is reported with the number of cases where it holds and the
//! first few where it does not.

use std::io::Write;

use espalier_core::divorder::{classical_mobius, is_prime, mobius};
use espalier_core::Partition;

use crate::{io_error, CliError};

const SHOWN_FAILURES: usize = 5;

struct Tally {
    name: &'static str,
    held: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, held: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        if ok {
            self.held += 1;
        } else {
            self.failures.push(case());
        }
    }

    fn report(&self, out: &mut impl Write) -> Result<(), CliError> {
        let total = self.held + self.failures.len();
        writeln!(out, "{}: holds in {}/{} cases", self.name, self.held, total).map_err(io_error)?;
        for f in self.failures.iter().take(SHOWN_FAILURES) {
            writeln!(out, "  fails at {f}").map_err(io_error)?;
        }
        if self.failures.len() > SHOWN_FAILURES {
            writeln!(out, "  ... {} more", self.failures.len() - SHOWN_FAILURES).map_err(io_error)?;
        }
        Ok(())
    }
}

fn mu2(a: u32, b: u32) -> Result<i64, CliError> {
    let bottom = Partition::ones(2)?;
    Ok(mobius(&bottom, &Partition::new(vec![a, b])?)?)
}

/// Distinct prime factors, or `None` if `n` is not squarefree.
fn squarefree_prime_count(n: u32) -> Option<u32> {
    let mut n = n;
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return None;
            }
            count += 1;
        }
        p += 1;
    }
    Some(count + u32::from(n > 1))
}

pub fn run(out: &mut impl Write, height: usize, max: u32) -> Result<(), CliError> {
    if height != 2 {
        return Err(CliError::Usage("--explore tabulates height-2 patterns only; use --h 2".into()));
    }
    if !(1..=60).contains(&max) {
        return Err(CliError::Usage("--max must lie in 1..=60".into()));
    }

    let mut diag = Tally::new("mu((1,1),(n,n)) = mu(n)");
    let mut column = Tally::new("mu((1,1),(n,1)) = mu(n)");
    let mut row = Tally::new("sum_k mu((1,1),(n,k)) = n mu(n)");
    let mut prime = Tally::new("mu((1,1),(p,m)) = -1 for prime p > m");
    for n in 1..=max {
        let mu = classical_mobius(n)?;
        let d = mu2(n, n)?;
        diag.record(d == mu, || format!("n={n}: {d} vs {mu}"));
        let c = mu2(n, 1)?;
        column.record(c == mu, || format!("n={n}: {c} vs {mu}"));
        let mut sum = 0;
        for k in 1..=n {
            sum += mu2(n, k)?;
        }
        let want = i64::from(n) * mu;
        row.record(sum == want, || format!("n={n}: {sum} vs {want}"));
        if is_prime(n) {
            for m in 1..n {
                let v = mu2(n, m)?;
                prime.record(v == -1, || format!("(p,m)=({n},{m}): {v}"));
            }
        }
    }

    let mut semiprime = Tally::new("mu((1,1),(pq,n)) = 2^(k+1) - 1, n a product of k distinct primes");
    let primes: Vec<u32> = (2..=max).filter(|&p| is_prime(p)).collect();
    for (a, &p) in primes.iter().enumerate() {
        for &q in &primes[a..] {
            let top = p * q;
            if top > max {
                break;
            }
            for n in 1..=top {
                let Some(k) = squarefree_prime_count(n) else { continue };
                let v = mu2(top, n)?;
                let want = (1i64 << (k + 1)) - 1;
                semiprime.record(v == want, || format!("(pq,n)=({top},{n}), k={k}: {v} vs {want}"));
            }
        }
    }

    let mut squares = Tally::new("mu((1,1),(n^2,m^2)) = 2 if n >= m^2, else 0");
    for n in 1..=max {
        for m in 1..=n {
            let v = mu2(n * n, m * m)?;
            let want = if n >= m * m { 2 } else { 0 };
            squares.record(v == want, || format!("(n,m)=({n},{m}): {v} vs {want}"));
        }
    }

    writeln!(out, "height-2 Möbius patterns, n <= {max}").map_err(io_error)?;
    for t in [&diag, &column, &row, &prime, &semiprime, &squares] {
        t.report(out)?;
    }
    Ok(())
}
