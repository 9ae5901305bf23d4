//! Truncated expansion of the tau-function in the power-sum basis.
//!
//! The tau-function is held only as its coefficient table: for each pair
//! `(mu, nu)` of partitions of `n`, a polynomial in `(q, w_1..w_l,
//! z_1..z_m)` truncated at per-variable degree caps. Flow variables never
//! appear as numbers.

use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::character::character;
use crate::content::pochhammer_partition;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::Scalar;
use crate::Rational;

/// Sparse polynomial in `(q, w_1..w_l, z_1..z_m)` truncated at per-variable
/// degree caps. Exponent vectors are `[e_q, e_w.., e_z..]`; absent terms are
/// zero and no stored exponent exceeds its cap.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<S> {
    l: usize,
    m: usize,
    caps: Vec<u32>,
    terms: BTreeMap<Vec<u32>, S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    pub fn zero(l: usize, m: usize, caps: Vec<u32>) -> Self {
        assert_eq!(caps.len(), 1 + l + m, "one cap per variable");
        TruncatedSeries {
            l,
            m,
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(l: usize, m: usize, caps: Vec<u32>, value: S) -> Self {
        let mut s = Self::zero(l, m, caps);
        s.add_term(vec![0; 1 + l + m], value);
        s
    }

    /// `coeff * x^exp` for the variable at `index`; dropped if over its cap.
    pub fn monomial(l: usize, m: usize, caps: Vec<u32>, index: usize, exp: u32, coeff: S) -> Self {
        let mut s = Self::zero(l, m, caps);
        let mut e = vec![0; 1 + l + m];
        e[index] = exp;
        s.add_term(e, coeff);
        s
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn within_caps(&self, exp: &[u32]) -> bool {
        exp.iter().zip(&self.caps).all(|(e, c)| e <= c)
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coeff: S) {
        if coeff.is_zero() || !self.within_caps(&exp) {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v = v.clone() + coeff;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.l, self.m, self.caps.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Product with terms beyond the caps pruned.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.l, self.m, self.caps.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca.clone() * cb.clone());
            }
        }
        out
    }

    fn variable_name(&self, index: usize) -> String {
        match index {
            0 => "q".into(),
            i if i <= self.l => format!("w_{i}"),
            i => format!("z_{}", i - self.l),
        }
    }

    /// Coefficient at `exp`; requesting an exponent beyond a cap is an
    /// error, never a silent zero.
    pub fn coefficient(&self, exp: &[u32]) -> Result<S> {
        if exp.len() != self.caps.len() {
            return Err(Error::InvalidArgument(format!(
                "exponent vector has {} entries, expected {}",
                exp.len(),
                self.caps.len()
            )));
        }
        for (i, (&e, &c)) in exp.iter().zip(&self.caps).enumerate() {
            if e > c {
                return Err(Error::UnderTruncation {
                    variable: self.variable_name(i),
                    exponent: e,
                    cap: c,
                });
            }
        }
        Ok(self.terms.get(exp).cloned().unwrap_or_else(S::zero))
    }
}

/// Degree caps: `q` up to `n_max`, and one cap per `w_a` and `z_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCaps {
    pub n_max: u32,
    pub w: Vec<u32>,
    pub z: Vec<u32>,
}

impl DegreeCaps {
    pub fn uniform(n_max: u32, l: usize, m: usize, cap: u32) -> Self {
        DegreeCaps {
            n_max,
            w: vec![cap; l],
            z: vec![cap; m],
        }
    }

    pub fn l(&self) -> usize {
        self.w.len()
    }

    pub fn m(&self) -> usize {
        self.z.len()
    }

    /// Caps in exponent-vector order `[q, w.., z..]`.
    pub fn as_vec(&self) -> Vec<u32> {
        std::iter::once(self.n_max)
            .chain(self.w.iter().copied())
            .chain(self.z.iter().copied())
            .collect()
    }

    /// Parses `"<w caps>;<z caps>"`, e.g. `"3,3;2"` (l = 2, m = 1) or `";3"`.
    pub fn parse(n_max: u32, text: &str) -> Result<Self> {
        let bad = |reason: String| Error::InvalidArgument(format!("caps {text:?}: {reason}"));
        let (w, z) = text
            .split_once(';')
            .ok_or_else(|| bad("expected '<w caps>;<z caps>'".into()))?;
        let list = |s: &str| -> Result<Vec<u32>> {
            if s.trim().is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| bad(format!("{t:?}: {e}")))
                })
                .collect()
        };
        Ok(DegreeCaps {
            n_max,
            w: list(w)?,
            z: list(z)?,
        })
    }
}

/// Coefficients of `P_mu(t) P_nu(s)` for all `mu, nu` of weight `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSumTable<S> {
    n: usize,
    l: usize,
    m: usize,
    caps: Vec<u32>,
    entries: BTreeMap<(Partition, Partition), TruncatedSeries<S>>,
}

impl<S: Scalar> PowerSumTable<S> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn entries(&self) -> &BTreeMap<(Partition, Partition), TruncatedSeries<S>> {
        &self.entries
    }

    pub fn entry(&self, mu: &Partition, nu: &Partition) -> Option<&TruncatedSeries<S>> {
        self.entries.get(&(mu.clone(), nu.clone()))
    }

    /// Coefficient of `q^n w^c z^d P_mu P_nu`.
    pub fn coefficient(
        &self,
        mu: &Partition,
        nu: &Partition,
        c: &[usize],
        d: &[usize],
    ) -> Result<S> {
        if c.len() != self.l || d.len() != self.m {
            return Err(Error::InvalidArgument(format!(
                "table has l = {}, m = {}; got {} strict and {} weak indices",
                self.l,
                self.m,
                c.len(),
                d.len()
            )));
        }
        let series = self.entry(mu, nu).ok_or_else(|| {
            Error::InvalidArgument(format!("no entry for ({mu:?}, {nu:?}) at n = {}", self.n))
        })?;
        let exp: Vec<u32> = std::iter::once(self.n)
            .chain(c.iter().copied())
            .chain(d.iter().copied())
            .map(|e| e as u32)
            .collect();
        series.coefficient(&exp)
    }

    /// Specialization `s = t_infinity`: keeps the `nu = (1^n)` column.
    pub fn kp_restrict(&self) -> BTreeMap<(Partition, Vec<u32>), S> {
        let identity = Partition::ones(self.n);
        let mut out = BTreeMap::new();
        for ((mu, nu), series) in &self.entries {
            if nu != &identity {
                continue;
            }
            for (exp, v) in series.terms() {
                out.insert((mu.clone(), exp.clone()), v.clone());
            }
        }
        out
    }
}

impl<S: Scalar + Display> PowerSumTable<S> {
    /// `{"n":..,"l":..,"m":..,"caps":[..],"entries":[{"mu":..,"nu":..,"coeffs":[{"exp":[..],"val":".."}]}]}`
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|((mu, nu), series)| {
                let coeffs: Vec<Value> = series
                    .terms()
                    .iter()
                    .map(|(exp, v)| json!({"exp": exp, "val": v.to_string()}))
                    .collect();
                json!({"mu": mu.to_string(), "nu": nu.to_string(), "coeffs": coeffs})
            })
            .collect();
        json!({
            "n": self.n,
            "l": self.l,
            "m": self.m,
            "caps": self.caps,
            "entries": entries,
        })
    }
}

/// `sum_lambda weight(lambda) S_lambda(t) S_lambda(s)` restricted to weight
/// `n`, re-expanded in the power-sum basis via the Frobenius formula.
pub fn expand_with_weights<S, F>(n: usize, caps: &DegreeCaps, weight: F) -> Result<PowerSumTable<S>>
where
    S: Scalar,
    F: Fn(&Partition) -> Result<TruncatedSeries<S>> + Sync,
{
    let (l, m) = (caps.l(), caps.m());
    let parts = partitions_of(n);
    let z_orders: Vec<S> = parts
        .iter()
        .map(|p| S::from_bigint(&p.stabilizer_order()))
        .collect();
    let contributions: Vec<BTreeMap<(usize, usize), TruncatedSeries<S>>> = parts
        .par_iter()
        .map(|lambda| {
            let r = weight(lambda)?;
            let chis: Vec<i64> = parts
                .iter()
                .map(|mu| character(lambda, mu))
                .collect::<Result<_>>()?;
            let mut local = BTreeMap::new();
            for (i, chi_mu) in chis.iter().enumerate() {
                for (j, chi_nu) in chis.iter().enumerate() {
                    let prod = chi_mu * chi_nu;
                    if prod == 0 {
                        continue;
                    }
                    let factor = S::from_i64(prod) / (z_orders[i].clone() * z_orders[j].clone());
                    local.insert((i, j), r.scale(&factor));
                }
            }
            Ok(local)
        })
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    for (i, mu) in parts.iter().enumerate() {
        for (j, nu) in parts.iter().enumerate() {
            let mut acc = TruncatedSeries::zero(l, m, caps.as_vec());
            for contribution in &contributions {
                if let Some(s) = contribution.get(&(i, j)) {
                    acc.add_assign(s);
                }
            }
            entries.insert((mu.clone(), nu.clone()), acc);
        }
    }
    Ok(PowerSumTable {
        n,
        l,
        m,
        caps: caps.as_vec(),
        entries,
    })
}

/// Content product `r_lambda` as a truncated series: `q^n` times
/// `prod_a prod_cells (1 + w_a c)` times, per `z_b` and cell, the geometric
/// series `sum_k (z_b c)^k` cut at the `z_b` cap.
pub fn content_product_series<S: Scalar>(
    lambda: &Partition,
    caps: &DegreeCaps,
) -> TruncatedSeries<S> {
    let (l, m) = (caps.l(), caps.m());
    let cv = caps.as_vec();
    let mut acc = TruncatedSeries::monomial(l, m, cv.clone(), 0, lambda.weight() as u32, S::one());
    for content in lambda.contents() {
        let c = S::from_i64(content);
        for a in 0..l {
            let mut factor = TruncatedSeries::constant(l, m, cv.clone(), S::one());
            factor.add_assign(&TruncatedSeries::monomial(
                l,
                m,
                cv.clone(),
                1 + a,
                1,
                c.clone(),
            ));
            acc = acc.mul(&factor);
        }
        for b in 0..m {
            let index = 1 + l + b;
            let mut geometric = TruncatedSeries::zero(l, m, cv.clone());
            let mut pow = S::one();
            for k in 0..=caps.z[b] {
                geometric.add_term(
                    {
                        let mut e = vec![0; 1 + l + m];
                        e[index] = k;
                        e
                    },
                    pow.clone(),
                );
                pow = pow * c.clone();
            }
            acc = acc.mul(&geometric);
        }
    }
    acc
}

/// Power-sum tables of the tau-function for `n = 1..=n_max`.
pub fn tau_expand<S: Scalar>(caps: &DegreeCaps) -> Result<Vec<PowerSumTable<S>>> {
    (1..=caps.n_max as usize)
        .map(|n| expand_with_weights(n, caps, |lambda| Ok(content_product_series(lambda, caps))))
        .collect()
}

/// `S_lambda = sum_mu chi_lambda(mu) / Z_mu P_mu`.
pub fn schur_to_powersum(lambda: &Partition) -> Result<BTreeMap<Partition, Rational>> {
    partitions_of(lambda.weight())
        .into_iter()
        .map(|mu| {
            let v = Rational::new(BigInt::from(character(lambda, &mu)?), mu.stabilizer_order());
            Ok((mu, v))
        })
        .collect()
}

/// Special points of evaluation: `t(u) = (u, u/2, u/3, ...)` and
/// `t_infinity = (1, 0, 0, ...)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialEvaluation {
    SchurAtTInfinity,
    SchurAtTU,
    PowerSumAtTU,
    PowerSumAtTInfinity,
}

fn powersum_at<S: Scalar>(kind_u: Option<&S>, mu: &Partition) -> S {
    match kind_u {
        Some(u) => u.ipow(mu.length() as i64),
        None if mu.is_identity_class() => S::one(),
        None => S::zero(),
    }
}

/// Evaluates a Schur or power-sum function at a special point. Schur
/// values go through the Frobenius formula and the power-sum values
/// `P_mu(t(u)) = u^{l(mu)}`, `P_mu(t_infinity) = [mu = (1^n)]`.
pub fn evaluate_special<S: Scalar>(
    kind: SpecialEvaluation,
    partition: &Partition,
    u: Option<&S>,
) -> Result<S> {
    let need_u =
        || u.ok_or_else(|| Error::InvalidArgument(format!("{kind:?} needs a value for u")));
    match kind {
        SpecialEvaluation::PowerSumAtTInfinity => Ok(powersum_at::<S>(None, partition)),
        SpecialEvaluation::PowerSumAtTU => Ok(powersum_at(Some(need_u()?), partition)),
        SpecialEvaluation::SchurAtTInfinity | SpecialEvaluation::SchurAtTU => {
            let point = match kind {
                SpecialEvaluation::SchurAtTU => Some(need_u()?),
                _ => None,
            };
            let mut acc = S::zero();
            for mu in partitions_of(partition.weight()) {
                let chi = character(partition, &mu)?;
                if chi == 0 {
                    continue;
                }
                let p = powersum_at(point, &mu);
                if p.is_zero() {
                    continue;
                }
                acc = acc + S::from_i64(chi) * p / S::from_bigint(&mu.stabilizer_order());
            }
            Ok(acc)
        }
    }
}

/// `(u)_lambda / h_lambda`, the closed form of `S_lambda(t(u))`.
pub fn schur_at_t_u_closed<S: Scalar>(u: &S, lambda: &Partition) -> S {
    pochhammer_partition(u, lambda) / S::from_bigint(&lambda.hook_product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficient::{f_coefficient, kp_coefficient, CoefficientKey};
    use crate::content::{content_product, HypergeometricParams};
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn schur_to_powersum_examples() {
        assert_eq!(
            schur_to_powersum(&p("1")).unwrap(),
            BTreeMap::from([(p("1"), r(1, 1))])
        );
        assert_eq!(
            schur_to_powersum(&p("2")).unwrap(),
            BTreeMap::from([(p("2"), r(1, 2)), (p("1,1"), r(1, 2))])
        );
        assert_eq!(
            schur_to_powersum(&p("1,1")).unwrap(),
            BTreeMap::from([(p("2"), r(-1, 2)), (p("1,1"), r(1, 2))])
        );
    }

    #[test]
    fn frobenius_round_trip() {
        for n in 1..=6 {
            for a in partitions_of(n) {
                let coeffs = schur_to_powersum(&a).unwrap();
                for b in partitions_of(n) {
                    let s: Rational = coeffs
                        .iter()
                        .map(|(mu, v)| {
                            v * Rational::from_integer(character(&b, mu).unwrap().into())
                        })
                        .sum();
                    assert_eq!(s, if a == b { r(1, 1) } else { r(0, 1) });
                }
            }
        }
    }

    #[test]
    fn special_evaluation_examples() {
        use SpecialEvaluation::*;
        assert_eq!(
            evaluate_special::<Rational>(SchurAtTInfinity, &p("2,1"), None).unwrap(),
            r(1, 3)
        );
        let u = r(5, 2);
        assert_eq!(
            evaluate_special(PowerSumAtTU, &p("2,1"), Some(&u)).unwrap(),
            u.clone() * u.clone()
        );
        assert_eq!(
            evaluate_special::<Rational>(PowerSumAtTInfinity, &p("2"), None).unwrap(),
            r(0, 1)
        );
        assert_eq!(
            evaluate_special::<Rational>(PowerSumAtTInfinity, &p("1,1"), None).unwrap(),
            r(1, 1)
        );
        assert!(evaluate_special::<Rational>(SchurAtTU, &p("2"), None).is_err());
    }

    #[test]
    fn pochhammer_evaluation_identity() {
        for u in [r(1, 3), r(-7, 4), r(2, 1), r(0, 1)] {
            for n in 1..=6 {
                for lam in partitions_of(n) {
                    let s = evaluate_special(SpecialEvaluation::SchurAtTU, &lam, Some(&u)).unwrap();
                    assert_eq!(
                        s.clone() * Rational::from_integer(lam.hook_product()),
                        pochhammer_partition(&u, &lam)
                    );
                    assert_eq!(s, schur_at_t_u_closed(&u, &lam));
                }
            }
        }
    }

    #[test]
    fn series_truncation() {
        let caps = vec![2, 1];
        let x = TruncatedSeries::monomial(1, 0, caps.clone(), 1, 1, r(1, 1));
        let sq = x.mul(&x);
        assert!(sq.is_zero());
        assert!(matches!(
            sq.coefficient(&[0, 2]),
            Err(Error::UnderTruncation { ref variable, exponent: 2, cap: 1 }) if variable == "w_1"
        ));
        assert_eq!(x.coefficient(&[0, 1]).unwrap(), r(1, 1));
    }

    #[test]
    fn tau_examples() {
        let caps = DegreeCaps::uniform(3, 0, 0, 0);
        let tables = tau_expand::<Rational>(&caps).unwrap();
        assert_eq!(
            tables[0].coefficient(&p("1"), &p("1"), &[], &[]).unwrap(),
            r(1, 1)
        );

        let caps = DegreeCaps::uniform(2, 1, 0, 2);
        let tables = tau_expand::<Rational>(&caps).unwrap();
        assert_eq!(
            tables[1]
                .coefficient(&p("2"), &p("1,1"), &[1], &[])
                .unwrap(),
            r(1, 2)
        );

        let caps = DegreeCaps::uniform(3, 0, 1, 2);
        let tables = tau_expand::<Rational>(&caps).unwrap();
        assert_eq!(
            tables[2].coefficient(&p("3"), &p("3"), &[], &[2]).unwrap(),
            r(5, 3)
        );
        assert!(matches!(
            tables[2].coefficient(&p("3"), &p("3"), &[], &[3]),
            Err(Error::UnderTruncation { .. })
        ));
    }

    #[test]
    fn diagonal_weights_give_orthogonality() {
        let caps = DegreeCaps::uniform(0, 1, 1, 2);
        for n in 1..=4 {
            let table = expand_with_weights(n, &caps, |_| {
                Ok(TruncatedSeries::constant(1, 1, caps.as_vec(), r(1, 1)))
            })
            .unwrap();
            for ((mu, nu), s) in table.entries() {
                let expect = if mu == nu {
                    Rational::new(BigInt::one(), mu.stabilizer_order())
                } else {
                    r(0, 1)
                };
                assert_eq!(s.coefficient(&[0, 0, 0]).unwrap(), expect);
                assert!(s.terms().keys().all(|e| e == &vec![0, 0, 0]));
            }
        }
    }

    #[test]
    fn series_matches_numeric_content_product() {
        // with caps above every degree that can occur, the series evaluates
        // exactly to r_lambda when the z-expansion is finite (z = 0)
        let caps = DegreeCaps::uniform(4, 2, 0, 4);
        let (q, w1, w2) = (r(2, 3), r(-1, 5), r(3, 7));
        let params =
            HypergeometricParams::new(q.clone(), vec![w1.clone(), w2.clone()], vec![]).unwrap();
        for lam in partitions_of(4) {
            let s = content_product_series::<Rational>(&lam, &caps);
            let value: Rational = s
                .terms()
                .iter()
                .map(|(e, c)| c * q.ipow(e[0] as i64) * w1.ipow(e[1] as i64) * w2.ipow(e[2] as i64))
                .sum();
            assert_eq!(value, content_product(&params, &lam, 0).unwrap());
        }
    }

    #[test]
    fn extraction_matches_spectral() {
        let caps = DegreeCaps::uniform(3, 1, 1, 3);
        let tables = tau_expand::<Rational>(&caps).unwrap();
        for table in &tables {
            for (mu, nu) in table.entries().keys() {
                for c in 0..=3 {
                    for d in 0..=3 {
                        let key =
                            CoefficientKey::new(mu.clone(), nu.clone(), vec![c], vec![d]).unwrap();
                        assert_eq!(
                            table.coefficient(mu, nu, &[c], &[d]).unwrap(),
                            f_coefficient(&key).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kp_restriction() {
        let caps = DegreeCaps::uniform(2, 1, 0, 1);
        let tables = tau_expand::<Rational>(&caps).unwrap();
        let kp1 = tables[0].kp_restrict();
        assert_eq!(kp1.get(&(p("1"), vec![1, 0])), Some(&r(1, 1)));
        let kp2 = tables[1].kp_restrict();
        assert_eq!(kp2.get(&(p("1,1"), vec![2, 0])), Some(&r(1, 2)));
        assert_eq!(kp2.get(&(p("2"), vec![2, 1])), Some(&r(1, 2)));
        for ((mu, exp), v) in &kp2 {
            assert_eq!(v, &kp_coefficient(mu, &[exp[1] as usize], &[]).unwrap());
        }
    }

    #[test]
    fn json_layout() {
        let caps = DegreeCaps::uniform(1, 0, 1, 1);
        let tables = tau_expand::<Rational>(&caps).unwrap();
        let text = tables[0].to_json().to_string();
        assert_eq!(
            text,
            r#"{"n":1,"l":0,"m":1,"caps":[1,1],"entries":[{"mu":"1","nu":"1","coeffs":[{"exp":[1,0],"val":"1"}]}]}"#
        );
    }

    #[test]
    fn caps_parsing() {
        let caps = DegreeCaps::parse(3, "3,2;1").unwrap();
        assert_eq!(caps.as_vec(), vec![3, 3, 2, 1]);
        let caps = DegreeCaps::parse(2, ";4").unwrap();
        assert_eq!((caps.l(), caps.m()), (0, 1));
        assert!(DegreeCaps::parse(2, "3").is_err());
        assert!(DegreeCaps::parse(2, "x;").is_err());
    }

    #[test]
    fn float_series() {
        let caps = DegreeCaps::uniform(3, 0, 1, 2);
        let tables = tau_expand::<f64>(&caps).unwrap();
        let v = tables[2].coefficient(&p("3"), &p("3"), &[], &[2]).unwrap();
        assert!((v - 5.0 / 3.0).abs() < 1e-12);
    }
}
