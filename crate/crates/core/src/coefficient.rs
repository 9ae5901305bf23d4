//! Expansion coefficients `F^c_d(mu, nu)` and the Hurwitz numbers they are
//! assembled from.
//!
//! Normalization: `f_coefficient` is the coefficient of
//! `q^n w^c z^d P_mu(t) P_nu(s)` in the tau-function expansion. It is a
//! rational number; the matching integer count is
//! `n! * F = #{(g, t_1..t_k) : g in cyc_mu, bands respected, t_1..t_k g in cyc_nu}`,
//! which is what [`crate::cayley::count_monotone_pairs`] returns. Per fixed
//! starting element the path count is `Z_mu * F`.
//!
//! Hurwitz numbers are automorphism-weighted and include disconnected
//! covers, which is exactly what Frobenius' character formula computes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::character::character;
use crate::content::{content_symmetric_upto, SymmetricKind};
use crate::error::{Error, Result};
use crate::partition::{
    check_same_weight, factorial, partitions_of, partitions_with_colength, Partition,
    RamificationData,
};
use crate::scalar::Scalar;
use crate::Rational;

/// Index `(mu, nu, c, d)` of one expansion coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoefficientKey {
    pub mu: Partition,
    pub nu: Partition,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
}

impl CoefficientKey {
    pub fn new(mu: Partition, nu: Partition, c: Vec<usize>, d: Vec<usize>) -> Result<Self> {
        check_same_weight(&mu, &nu)?;
        Ok(CoefficientKey { mu, nu, c, d })
    }

    pub fn n(&self) -> usize {
        self.mu.weight()
    }

    /// Total number of transpositions `sum c + sum d`.
    pub fn steps(&self) -> usize {
        self.c.iter().sum::<usize>() + self.d.iter().sum::<usize>()
    }

    pub fn double_genus(&self) -> i64 {
        RamificationData {
            mu: self.mu.clone(),
            nu: self.nu.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
        }
        .double_genus()
    }
}

fn rational(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `chi_lambda(mu) / Z_mu`.
fn normalized_chi(lambda: &Partition, mu: &Partition) -> Result<Rational> {
    Ok(Rational::new(
        BigInt::from(character(lambda, mu)?),
        mu.stabilizer_order(),
    ))
}

/// `G_r(mu, nu) = (Z_mu Z_nu)^{-1} sum_lambda r_lambda chi_lambda(mu) chi_lambda(nu)`.
pub fn g_coefficient<S: Scalar>(
    weights: &BTreeMap<Partition, S>,
    mu: &Partition,
    nu: &Partition,
) -> Result<S> {
    check_same_weight(mu, nu)?;
    let mut acc = S::zero();
    for lambda in partitions_of(mu.weight()) {
        let w = weights.get(&lambda).ok_or_else(|| {
            Error::InvalidArgument(format!("no weight given for lambda = {lambda:?}"))
        })?;
        let prod = character(&lambda, mu)? * character(&lambda, nu)?;
        acc = acc + w.clone() * S::from_i64(prod);
    }
    Ok(acc / S::from_bigint(&(mu.stabilizer_order() * nu.stabilizer_order())))
}

/// `F^c_d(mu, nu)` by the spectral formula
/// `(Z_mu Z_nu)^{-1} sum_lambda chi_lambda(mu) chi_lambda(nu) prod_a e_{c_a}(cont) prod_b h_{d_b}(cont)`.
pub fn f_coefficient(key: &CoefficientKey) -> Result<Rational> {
    check_same_weight(&key.mu, &key.nu)?;
    let n = key.n();
    let cmax = key.c.iter().copied().max().unwrap_or(0);
    let dmax = key.d.iter().copied().max().unwrap_or(0);
    let mut acc = BigInt::zero();
    for lambda in partitions_of(n) {
        let e = content_symmetric_upto(&lambda, cmax, SymmetricKind::Elementary);
        let h = content_symmetric_upto(&lambda, dmax, SymmetricKind::Complete);
        let mut term = BigInt::from(character(&lambda, &key.mu)? * character(&lambda, &key.nu)?);
        for &ca in &key.c {
            term *= &e[ca];
        }
        for &db in &key.d {
            term *= &h[db];
        }
        acc += term;
    }
    Ok(Rational::new(
        acc,
        key.mu.stabilizer_order() * key.nu.stabilizer_order(),
    ))
}

/// Frobenius' formula
/// `H_{g0}(mu^1..mu^j) = sum_lambda h_lambda^{j + 2 g0 - 2} prod_a chi_lambda(mu^a) / Z_{mu^a}`.
pub fn frobenius_hurwitz(profiles: &[Partition], base_genus: usize) -> Result<Rational> {
    let first = profiles.first().ok_or(Error::EmptyProfiles)?;
    for p in &profiles[1..] {
        check_same_weight(first, p)?;
    }
    let exponent = profiles.len() as i64 + 2 * base_genus as i64 - 2;
    let mut acc = Rational::zero();
    for lambda in partitions_of(first.weight()) {
        let mut term = rational(lambda.hook_product()).ipow(exponent);
        for p in profiles {
            term *= normalized_chi(&lambda, p)?;
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// One term of the signed Hurwitz-number expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedHurwitzTerm {
    /// Non-trivial strict profiles `mu^(a)` followed by the coloured
    /// profiles `nu^(b, i)`, colour by colour.
    pub profiles: Vec<Partition>,
    /// Number of points `j_b` in each colour group.
    pub colour_sizes: Vec<usize>,
    /// `(-1)^{C + D}`.
    pub sign: i8,
    /// `H(mu, nu, profiles)`.
    pub value: Rational,
}

/// Ordered sequences of non-identity partitions of `n` whose colengths sum
/// to `total`.
pub fn colour_sequences(n: usize, total: usize) -> Vec<Vec<Partition>> {
    fn extend(
        n: usize,
        rest: usize,
        prefix: &mut Vec<Partition>,
        by_colength: &[Vec<Partition>],
        out: &mut Vec<Vec<Partition>>,
    ) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for c in 1..=rest.min(n.saturating_sub(1)) {
            for p in &by_colength[c] {
                prefix.push(p.clone());
                extend(n, rest - c, prefix, by_colength, out);
                prefix.pop();
            }
        }
    }
    let mut by_colength = vec![Vec::new(); n.max(1)];
    for p in partitions_of(n) {
        if p.colength() < by_colength.len() {
            by_colength[p.colength()].push(p);
        }
    }
    let mut out = Vec::new();
    extend(n, total, &mut Vec::new(), &by_colength, &mut out);
    out
}

/// Enumerates every admissible profile system of `key` with its sign and
/// Hurwitz number, in a deterministic order.
pub fn signed_hurwitz_terms(key: &CoefficientKey) -> Result<Vec<SignedHurwitzTerm>> {
    check_same_weight(&key.mu, &key.nu)?;
    let n = key.n();
    // strict points: one profile of colength c_a each; c_a = 0 is the
    // identity profile, which leaves H unchanged and is dropped
    let mut strict_choices: Vec<Vec<Partition>> = Vec::new();
    for &ca in &key.c {
        if ca == 0 {
            continue;
        }
        strict_choices.push(partitions_with_colength(n, ca)?);
    }
    let colour_choices: Vec<Vec<Vec<Partition>>> =
        key.d.iter().map(|&db| colour_sequences(n, db)).collect();
    let d_total: usize = key.d.iter().sum();

    let mut terms = Vec::new();
    let mut strict_pick = Vec::new();
    let mut colour_pick = Vec::new();
    assemble_terms(
        key,
        &strict_choices,
        &colour_choices,
        d_total,
        &mut strict_pick,
        &mut colour_pick,
        &mut terms,
    )?;
    Ok(terms)
}

fn assemble_terms(
    key: &CoefficientKey,
    strict: &[Vec<Partition>],
    colours: &[Vec<Vec<Partition>>],
    d_total: usize,
    strict_pick: &mut Vec<Partition>,
    colour_pick: &mut Vec<Vec<Partition>>,
    out: &mut Vec<SignedHurwitzTerm>,
) -> Result<()> {
    if strict_pick.len() < strict.len() {
        for p in &strict[strict_pick.len()] {
            strict_pick.push(p.clone());
            assemble_terms(key, strict, colours, d_total, strict_pick, colour_pick, out)?;
            strict_pick.pop();
        }
        return Ok(());
    }
    if colour_pick.len() < colours.len() {
        for seq in &colours[colour_pick.len()] {
            colour_pick.push(seq.clone());
            assemble_terms(key, strict, colours, d_total, strict_pick, colour_pick, out)?;
            colour_pick.pop();
        }
        return Ok(());
    }
    let colour_sizes: Vec<usize> = colour_pick.iter().map(Vec::len).collect();
    let points: usize = colour_sizes.iter().sum();
    let profiles: Vec<Partition> = strict_pick
        .iter()
        .cloned()
        .chain(colour_pick.iter().flatten().cloned())
        .collect();
    let mut all = Vec::with_capacity(profiles.len() + 2);
    all.push(key.mu.clone());
    all.push(key.nu.clone());
    all.extend(profiles.iter().cloned());
    let value = frobenius_hurwitz(&all, 0)?;
    let sign = if (points + d_total).is_multiple_of(2) {
        1
    } else {
        -1
    };
    out.push(SignedHurwitzTerm {
        profiles,
        colour_sizes,
        sign,
        value,
    });
    Ok(())
}

/// `F^c_d(mu, nu)` as the signed sum of Hurwitz numbers over all admissible
/// profile systems. Every strict colength must be at most `n - 1`.
pub fn signed_hurwitz_sum(key: &CoefficientKey) -> Result<Rational> {
    Ok(signed_hurwitz_terms(key)?
        .into_iter()
        .map(|t| if t.sign > 0 { t.value } else { -t.value })
        .sum())
}

/// Double Hurwitz number: `k` strict bands of length one, no colours.
pub fn double_hurwitz(mu: &Partition, nu: &Partition, k: usize) -> Result<Rational> {
    f_coefficient(&CoefficientKey::new(
        mu.clone(),
        nu.clone(),
        vec![1; k],
        Vec::new(),
    )?)
}

/// Weak compositions of `total` into `parts` non-negative entries, in
/// lexicographically decreasing order.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `F^{(c,l)}(mu, nu)`: the sum of `F^{(c_1..c_l)}` over all weak
/// compositions of `c` into `l` parts.
pub fn aggregated_strict(mu: &Partition, nu: &Partition, c: usize, l: usize) -> Result<Rational> {
    if l == 0 {
        return Err(Error::InvalidArgument(
            "aggregated_strict needs l >= 1".into(),
        ));
    }
    check_same_weight(mu, nu)?;
    weak_compositions(c, l)
        .into_iter()
        .map(|cs| {
            f_coefficient(&CoefficientKey::new(
                mu.clone(),
                nu.clone(),
                cs,
                Vec::new(),
            )?)
        })
        .sum()
}

/// Coefficient with no branching at infinity: `nu = (1^n)`.
pub fn kp_coefficient(mu: &Partition, c: &[usize], d: &[usize]) -> Result<Rational> {
    f_coefficient(&CoefficientKey::new(
        mu.clone(),
        Partition::ones(mu.weight()),
        c.to_vec(),
        d.to_vec(),
    )?)
}

/// Unsigned Hurwitz-number sums `(F+, F-)` over the profile systems of a
/// single colour with summed colength `d`, split by whether the total
/// number of branch points (the pair at `0, infinity` plus the coloured
/// points) is even or odd.
///
/// The weak-band coefficient satisfies `F_d = (-1)^d (F+ - F-)`.
pub fn parity_split_hurwitz(
    mu: &Partition,
    nu: &Partition,
    d: usize,
) -> Result<(Rational, Rational)> {
    check_same_weight(mu, nu)?;
    let mut even = Rational::zero();
    let mut odd = Rational::zero();
    for seq in colour_sequences(mu.weight(), d) {
        let mut all = vec![mu.clone(), nu.clone()];
        all.extend(seq.iter().cloned());
        let h = frobenius_hurwitz(&all, 0)?;
        if (seq.len() + 2) % 2 == 0 {
            even += h;
        } else {
            odd += h;
        }
    }
    Ok((even, odd))
}

/// `n! * F`, which the path-count interpretation makes a non-negative
/// integer. Returns `None` if the product is not an integer.
pub fn scaled_count(value: &Rational, n: usize) -> Option<BigInt> {
    let scaled = value * rational(factorial(n));
    scaled.is_integer().then(|| scaled.to_integer())
}

/// Decides whether a value is the exact integer `v`.
pub fn is_integer_value(value: &Rational, v: i64) -> bool {
    value.is_integer() && value.to_integer() == BigInt::from(v)
}
