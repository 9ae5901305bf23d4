//! Self-verification sweeps. Each suite checks one invariant over a finite
//! range and reports instance counts and failing keys.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::{
    count_cover_tuples, count_monotone_pairs_all, idempotent, multiply_central, BandSpec,
    CenterElement, CentralGenerator,
};
use crate::character::character;
use crate::coefficient::{
    aggregated_strict, double_hurwitz, f_coefficient, frobenius_hurwitz, kp_coefficient,
    parity_split_hurwitz, scaled_count, signed_hurwitz_sum, weak_compositions, CoefficientKey,
};
use crate::error::Result;
use crate::partition::{factorial, partitions_of, Partition};
use crate::series::{tau_expand, DegreeCaps};
use crate::Rational;

/// Failing keys kept per suite; the count covers all of them.
const MAX_REPORTED_FAILURES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Quick,
    Full,
}

impl std::str::FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "quick" => Ok(Scope::Quick),
            "full" => Ok(Scope::Full),
            other => Err(format!("unknown scope {other:?}, expected quick or full")),
        }
    }
}

/// Sweep bounds for one scope.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub character_n: usize,
    pub burnside_n: usize,
    pub sweep_n: usize,
    pub sweep_steps: usize,
    pub frobenius_n: usize,
    pub frobenius_profiles: usize,
    pub series_n: usize,
    pub series_cap: u32,
    pub jucys_murphy_n: usize,
    pub jucys_murphy_k: usize,
    pub double_hurwitz_n: usize,
    pub double_hurwitz_k: usize,
    pub corollary_n: usize,
    pub corollary_c: usize,
}

impl Bounds {
    pub fn for_scope(scope: Scope) -> Self {
        match scope {
            Scope::Quick => Bounds {
                character_n: 4,
                burnside_n: 6,
                sweep_n: 4,
                sweep_steps: 4,
                frobenius_n: 4,
                frobenius_profiles: 3,
                series_n: 3,
                series_cap: 2,
                jucys_murphy_n: 4,
                jucys_murphy_k: 3,
                double_hurwitz_n: 4,
                double_hurwitz_k: 3,
                corollary_n: 3,
                corollary_c: 3,
            },
            Scope::Full => Bounds {
                character_n: 8,
                burnside_n: 10,
                sweep_n: 5,
                sweep_steps: 4,
                frobenius_n: 5,
                frobenius_profiles: 4,
                series_n: 4,
                series_cap: 3,
                jucys_murphy_n: 5,
                jucys_murphy_k: 4,
                double_hurwitz_n: 5,
                double_hurwitz_k: 3,
                corollary_n: 4,
                corollary_c: 3,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub instances: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, reproducer: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(reproducer());
            }
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.instances += other.instances;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(f);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.instances > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

/// Character lookup used by the character suite, replaceable for mutation
/// testing.
pub type CharacterFn = dyn Fn(&Partition, &Partition) -> Result<i64> + Sync;

/// Runs every suite with the library character engine.
pub fn run(scope: Scope) -> Result<Report> {
    run_with(scope, &|l: &Partition, m: &Partition| character(l, m))
}

/// Runs every suite; the character suite reads characters from `chi`.
/// Suites run in parallel and are reported in name order.
pub fn run_with(scope: Scope, chi: &CharacterFn) -> Result<Report> {
    let b = Bounds::for_scope(scope);
    type Job<'a> = Box<dyn Fn() -> Result<Vec<SuiteReport>> + Sync + Send + 'a>;
    let jobs: Vec<Job> = vec![
        Box::new(|| Ok(vec![characters(chi, b.character_n, b.burnside_n)?])),
        Box::new(|| coefficient_sweep(b.sweep_n, b.sweep_steps)),
        Box::new(|| Ok(vec![frobenius_oracle(b.frobenius_n, b.frobenius_profiles)?])),
        Box::new(|| Ok(vec![series_consistency(b.series_n, b.series_cap)?])),
        Box::new(|| Ok(vec![jucys_murphy(b.jucys_murphy_n, b.jucys_murphy_k)?])),
        Box::new(|| {
            Ok(vec![double_hurwitz_consistency(
                b.double_hurwitz_n,
                b.double_hurwitz_k,
            )?])
        }),
        Box::new(|| Ok(vec![parity_split(b.corollary_n, b.corollary_c)?])),
        Box::new(|| Ok(vec![kp_restriction(b.corollary_n)?])),
        Box::new(|| Ok(vec![aggregation(b.corollary_n, b.corollary_c)?])),
    ];
    let results: Vec<Vec<SuiteReport>> = jobs.par_iter().map(|job| job()).collect::<Result<_>>()?;
    let mut suites: Vec<SuiteReport> = results.into_iter().flatten().collect();
    suites.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(Report { suites })
}

fn normalized(chi: i64, mu: &Partition) -> Rational {
    Rational::new(BigInt::from(chi), mu.stabilizer_order())
}

/// Row and column orthogonality and the conjugate sign rule up to `max_n`,
/// Burnside's identity up to `burnside_n`.
pub fn characters(chi: &CharacterFn, max_n: usize, burnside_n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("characters");
    for n in 1..=max_n.max(burnside_n) {
        let parts = partitions_of(n);
        let table: Vec<Vec<i64>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| chi(l, m)).collect())
            .collect::<Result<_>>()?;
        let identity = parts.iter().position(Partition::is_identity_class).unwrap();
        if n <= burnside_n {
            let sum: BigInt = table
                .iter()
                .map(|row| BigInt::from(row[identity]).pow(2))
                .sum();
            report.check(sum == factorial(n), || {
                format!("burnside n={n}: sum d^2 = {sum}")
            });
        }
        if n > max_n {
            continue;
        }
        for (i, li) in parts.iter().enumerate() {
            for (j, lj) in parts.iter().enumerate() {
                let row: Rational = parts
                    .iter()
                    .enumerate()
                    .map(|(k, mu)| normalized(table[i][k] * table[j][k], mu))
                    .sum();
                let expect = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                report.check(row == expect, || {
                    format!("row orthogonality n={n} lambda={li} lambda'={lj}: {row}")
                });
                let col: i64 = (0..parts.len()).map(|k| table[k][i] * table[k][j]).sum();
                let expect = if i == j {
                    parts[i].stabilizer_order()
                } else {
                    BigInt::zero()
                };
                report.check(BigInt::from(col) == expect, || {
                    format!("column orthogonality n={n} mu={li} mu'={lj}: {col}")
                });
            }
            let conj = parts.iter().position(|p| *p == li.conjugate()).unwrap();
            for (k, mu) in parts.iter().enumerate() {
                report.check(table[conj][k] == mu.sign() * table[i][k], || {
                    format!("conjugate sign n={n} lambda={li} mu={mu}")
                });
            }
        }
    }
    Ok(report)
}

/// All `(c, d)` with `l, m <= 2`, entries summing to at most `max_steps`,
/// and each `c_a <= n - 1`.
pub fn sweep_band_lengths(n: usize, max_steps: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for l in 0..=2 {
        for m in 0..=2 {
            for total in 0..=max_steps {
                for v in weak_compositions(total, l + m) {
                    let (c, d) = v.split_at(l);
                    if c.iter().all(|&ca| ca < n) {
                        out.push((c.to_vec(), d.to_vec()));
                    }
                }
            }
        }
    }
    out
}

/// Three-way equivalence of spectral, signed-Hurwitz and path-count values,
/// plus integrality of `n! F`, over one shared sweep.
pub fn coefficient_sweep(max_n: usize, max_steps: usize) -> Result<Vec<SuiteReport>> {
    let jobs: Vec<(usize, Vec<usize>, Vec<usize>)> = (1..=max_n)
        .flat_map(|n| {
            sweep_band_lengths(n, max_steps)
                .into_iter()
                .map(move |(c, d)| (n, c, d))
        })
        .collect();
    let partial: Vec<(SuiteReport, SuiteReport, SuiteReport)> = jobs
        .par_iter()
        .map(|(n, c, d)| {
            let mut spectral = SuiteReport::new("three-way: spectral = signed Hurwitz");
            let mut paths = SuiteReport::new("three-way: n! F = path count");
            let mut integral = SuiteReport::new("integrality");
            let bands = BandSpec::from_lengths(c, d);
            for mu in partitions_of(*n) {
                let counts = count_monotone_pairs_all(&mu, &bands, *n)?;
                for nu in partitions_of(*n) {
                    let key = CoefficientKey::new(mu.clone(), nu.clone(), c.clone(), d.clone())?;
                    let f = f_coefficient(&key)?;
                    let s = signed_hurwitz_sum(&key)?;
                    spectral.check(f == s, || format!("{key:?}: spectral {f}, signed {s}"));
                    let scaled = scaled_count(&f, *n);
                    let count = BigInt::from(counts[&nu]);
                    paths.check(scaled.as_ref() == Some(&count), || {
                        format!(
                            "{key:?}: n! F = {}, paths {count}",
                            f.clone() * Rational::from_integer(factorial(*n))
                        )
                    });
                    integral.check(scaled.as_ref().is_some_and(|v| !v.is_negative()), || {
                        format!("{key:?}: F = {f}")
                    });
                }
            }
            Ok((spectral, paths, integral))
        })
        .collect::<Result<_>>()?;
    let mut spectral = SuiteReport::new("three-way: spectral = signed Hurwitz");
    let mut paths = SuiteReport::new("three-way: n! F = path count");
    let mut integral = SuiteReport::new("integrality");
    for (a, b, c) in partial {
        spectral.merge(a);
        paths.merge(b);
        integral.merge(c);
    }
    Ok(vec![spectral, paths, integral])
}

/// Multisets of partitions of `n` with 1..=`max_len` members, as sorted
/// index sequences into `partitions_of(n)`.
fn profile_multisets(n: usize, max_len: usize) -> Vec<Vec<Partition>> {
    let parts = partitions_of(n);
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..parts.len()).map(|i| vec![i]).collect();
    while let Some(seq) = stack.pop() {
        out.push(seq.iter().map(|&i| parts[i].clone()).collect());
        if seq.len() < max_len {
            for i in *seq.last().unwrap()..parts.len() {
                let mut next = seq.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// `n! H = #{(g_1..g_j) : g_a in cyc_{mu^a}, product = id}`.
pub fn frobenius_oracle(max_n: usize, max_profiles: usize) -> Result<SuiteReport> {
    let lists: Vec<Vec<Partition>> = (1..=max_n)
        .flat_map(|n| profile_multisets(n, max_profiles))
        .collect();
    let partial: Vec<SuiteReport> = lists
        .par_iter()
        .map(|profiles| {
            let mut r = SuiteReport::new("frobenius oracle");
            let n = profiles[0].weight();
            let h = frobenius_hurwitz(profiles, 0)?;
            let count = count_cover_tuples(profiles)?;
            r.check(scaled_count(&h, n) == Some(BigInt::from(count)), || {
                format!("profiles {profiles:?}: H = {h}, tuples {count}")
            });
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let mut report = SuiteReport::new("frobenius oracle");
    partial.into_iter().for_each(|r| report.merge(r));
    Ok(report)
}

fn cap_vectors(len: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=cap).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Coefficient extraction from the truncated expansion equals the spectral
/// value for every in-cap key.
pub fn series_consistency(max_n: usize, cap: u32) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("series consistency");
    for l in 0..=2 {
        for m in 0..=2 {
            let caps = DegreeCaps::uniform(max_n as u32, l, m, cap);
            for table in tau_expand::<Rational>(&caps)? {
                for (mu, nu) in table.entries().keys() {
                    for c in cap_vectors(l, cap as usize) {
                        for d in cap_vectors(m, cap as usize) {
                            let got = table.coefficient(mu, nu, &c, &d)?;
                            let key = CoefficientKey::new(mu.clone(), nu.clone(), c.clone(), d)?;
                            let want = f_coefficient(&key)?;
                            report.check(got == want, || {
                                format!("{key:?}: series {got}, spectral {want}")
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `F_lambda e_k(J) = e_k(cont lambda) F_lambda`, likewise for `h_k`, and
/// `F_lambda F_mu = delta F_lambda`.
pub fn jucys_murphy(max_n: usize, max_k: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("jucys-murphy");
    for n in 1..=max_n {
        let parts = partitions_of(n);
        let idem: BTreeMap<&Partition, CenterElement> = parts
            .iter()
            .map(|l| Ok((l, idempotent(l)?)))
            .collect::<Result<_>>()?;
        for (lambda, f) in &idem {
            for k in 0..=max_k {
                for generator in [
                    CentralGenerator::Elementary(k),
                    CentralGenerator::Complete(k),
                ] {
                    let lhs = multiply_central(f, &generator)?;
                    let rhs = f.scale(&generator.eigenvalue(lambda));
                    report.check(lhs == rhs, || format!("{generator:?} on F_{lambda}"));
                }
            }
            for (other, g) in &idem {
                let prod = f.mul(g)?;
                let expect = if lambda == other {
                    f.clone()
                } else {
                    CenterElement::zero(n)
                };
                report.check(prod == expect, || format!("F_{lambda} F_{other}"));
            }
        }
    }
    Ok(report)
}

/// `k` strict bands of length one give the unconstrained transposition
/// count divided by `n!`.
pub fn double_hurwitz_consistency(max_n: usize, max_k: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("double hurwitz");
    for n in 1..=max_n {
        for k in 0..=max_k {
            if n == 1 && k > 0 {
                continue;
            }
            let bands = BandSpec::from_lengths(&vec![1; k], &[]);
            for mu in partitions_of(n) {
                let counts = count_monotone_pairs_all(&mu, &bands, n)?;
                for nu in partitions_of(n) {
                    let h = double_hurwitz(&mu, &nu, k)?;
                    let want = Rational::new(BigInt::from(counts[&nu]), factorial(n));
                    report.check(h == want, || {
                        format!("mu={mu} nu={nu} k={k}: {h} vs {want}")
                    });
                }
            }
        }
    }
    Ok(report)
}

/// `F_d = (-1)^d (F+ - F-)` for a single weak band.
pub fn parity_split(max_n: usize, max_d: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("parity split");
    for n in 1..=max_n {
        for d in 0..=max_d {
            for mu in partitions_of(n) {
                for nu in partitions_of(n) {
                    let (plus, minus) = parity_split_hurwitz(&mu, &nu, d)?;
                    let f = f_coefficient(&CoefficientKey::new(
                        mu.clone(),
                        nu.clone(),
                        vec![],
                        vec![d],
                    )?)?;
                    let diff = plus - minus;
                    let signed = if d % 2 == 0 { diff } else { -diff };
                    report.check(signed == f, || {
                        format!("mu={mu} nu={nu} d={d}: {signed} vs {f}")
                    });
                }
            }
        }
    }
    Ok(report)
}

/// The `nu = (1^n)` column of the expansion matches `kp_coefficient`.
pub fn kp_restriction(max_n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("kp restriction");
    for (l, m) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)] {
        let caps = DegreeCaps::uniform(max_n as u32, l, m, 3);
        for table in tau_expand::<Rational>(&caps)? {
            let restricted = table.kp_restrict();
            for mu in partitions_of(table.n()) {
                for c in cap_vectors(l, 3) {
                    for d in cap_vectors(m, 3) {
                        let exp: Vec<u32> = std::iter::once(table.n())
                            .chain(c.iter().copied())
                            .chain(d.iter().copied())
                            .map(|e| e as u32)
                            .collect();
                        let got = restricted
                            .get(&(mu.clone(), exp))
                            .cloned()
                            .unwrap_or_else(Rational::zero);
                        let want = kp_coefficient(&mu, &c, &d)?;
                        report.check(got == want, || {
                            format!("mu={mu} c={c:?} d={d:?}: {got} vs {want}")
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `aggregated_strict` equals the explicit sum over compositions.
pub fn aggregation(max_n: usize, max_c: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("aggregated strict");
    for n in 1..=max_n {
        for c in 0..=max_c {
            for l in 1..=3 {
                for mu in partitions_of(n) {
                    for nu in partitions_of(n) {
                        let got = aggregated_strict(&mu, &nu, c, l)?;
                        let mut want = Rational::zero();
                        for cs in cap_vectors(l, c) {
                            if cs.iter().sum::<usize>() == c {
                                want += f_coefficient(&CoefficientKey::new(
                                    mu.clone(),
                                    nu.clone(),
                                    cs,
                                    vec![],
                                )?)?;
                            }
                        }
                        report.check(got == want, || {
                            format!("mu={mu} nu={nu} c={c} l={l}: {got} vs {want}")
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_scope_passes() {
        let report = run(Scope::Quick).unwrap();
        for s in &report.suites {
            assert!(s.passed(), "{s:?}");
        }
        let names: Vec<&str> = report.suites.iter().map(|s| s.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn flipped_character_is_caught_at_n3() {
        let two_one: Partition = "2,1".parse().unwrap();
        let mutated = move |l: &Partition, m: &Partition| {
            let v = character(l, m)?;
            Ok(if *l == two_one && m.is_identity_class() {
                -v
            } else {
                v
            })
        };
        let report = characters(&mutated, 4, 4).unwrap();
        assert!(!report.passed());
        assert!(
            report.failures.iter().all(|f| f.contains("n=3")),
            "{:?}",
            report.failures
        );
    }

    #[test]
    fn sweep_shapes() {
        let shapes = sweep_band_lengths(1, 4);
        assert!(shapes.iter().all(|(c, _)| c.iter().all(|&x| x == 0)));
        assert!(shapes.contains(&(vec![], vec![])));
        assert!(shapes.contains(&(vec![0, 0], vec![2, 2])));
    }

    #[test]
    fn multisets_are_unordered() {
        let lists = profile_multisets(2, 2);
        assert_eq!(lists.len(), 2 + 3);
    }
}
