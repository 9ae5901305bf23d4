//! Ground truth by explicit computation in `S_n`: permutations, enumeration
//! of multimonotonic transposition paths and of monodromy tuples, and the
//! centre of the group algebra with Jucys–Murphy elements acting on it.
//!
//! Permutations compose right to left: `(s * t)(x) = s(t(x))`. Transpositions
//! are written `(a b)` with `a < b`, and band monotonicity compares the
//! larger entries `b`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::character::character;
use crate::error::{Error, Result};
use crate::partition::{check_same_weight, partitions_of, Partition};
use crate::Rational;

/// Largest `n` accepted by the brute-force routines unless configured.
pub const DEFAULT_BRUTE_CAP: usize = 7;

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-based images `[g(1), ..., g(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// The transposition `(a b)` on `n` points, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
        let mut p = Perm::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// `self * other`, i.e. `other` applied first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    /// `self * (a b)` for 0-based `a, b`, without building the transposition.
    fn times_transposition(&self, a: usize, b: usize) -> Perm {
        let mut images = self.images.clone();
        images.swap(a, b);
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

pub fn cycle_type(g: &Perm) -> Partition {
    g.cycle_type()
}

/// All of `S_n` in lexicographic order of image vectors.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn build(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(Perm {
                images: prefix.clone(),
            });
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x as u8);
                build(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    build(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// All permutations of cycle type `mu`.
pub fn class_elements(mu: &Partition) -> Vec<Perm> {
    all_perms(mu.weight())
        .into_iter()
        .filter(|g| &g.cycle_type() == mu)
        .collect()
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what,
            requested: n,
            cap,
        });
    }
    Ok(())
}

/// Monotonicity inside one band.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BandMode {
    /// `b_i < b_{i+1}`
    Strict,
    /// `b_i <= b_{i+1}`
    Weak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Band {
    pub length: usize,
    pub mode: BandMode,
}

/// Ordered list of bands; no constraint links consecutive bands.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BandSpec {
    pub bands: Vec<Band>,
}

impl BandSpec {
    /// Strict bands of lengths `c` followed by weak bands of lengths `d`.
    pub fn from_lengths(c: &[usize], d: &[usize]) -> Self {
        let strict = c.iter().map(|&length| Band {
            length,
            mode: BandMode::Strict,
        });
        let weak = d.iter().map(|&length| Band {
            length,
            mode: BandMode::Weak,
        });
        BandSpec {
            bands: strict.chain(weak).collect(),
        }
    }

    /// Total number of transpositions.
    pub fn total_length(&self) -> usize {
        self.bands.iter().map(|b| b.length).sum()
    }
}

/// Number of band-respecting transposition sequences with each product
/// `t_1 * ... * t_k`. States are `(product so far, larger entry of the last
/// transposition in the current band)`, so this is exact enumeration with
/// memoization on the exact state.
pub fn path_products(n: usize, bands: &BandSpec) -> HashMap<Perm, u64> {
    // last = n means "no transposition yet in this band"
    let mut frontier: HashMap<Perm, u64> = HashMap::from([(Perm::identity(n), 1)]);
    for band in &bands.bands {
        let mut states: HashMap<(Perm, usize), u64> =
            frontier.drain().map(|(p, c)| ((p, n), c)).collect();
        for _ in 0..band.length {
            let mut next: HashMap<(Perm, usize), u64> = HashMap::new();
            for ((perm, last), count) in states {
                let lowest = match (last, band.mode) {
                    (l, _) if l == n => 1,
                    (l, BandMode::Strict) => l + 1,
                    (l, BandMode::Weak) => l,
                };
                for b in lowest..n {
                    for a in 0..b {
                        *next.entry((perm.times_transposition(a, b), b)).or_insert(0) += count;
                    }
                }
            }
            states = next;
        }
        for ((perm, _), count) in states {
            *frontier.entry(perm).or_insert(0) += count;
        }
    }
    frontier
}

/// `#{(g, t_1..t_k) : g in cyc_mu, bands respected, t_1 ... t_k g in cyc_nu}`
/// with the default cap.
pub fn count_monotone_pairs(mu: &Partition, nu: &Partition, bands: &BandSpec) -> Result<u64> {
    count_monotone_pairs_capped(mu, nu, bands, DEFAULT_BRUTE_CAP)
}

pub fn count_monotone_pairs_capped(
    mu: &Partition,
    nu: &Partition,
    bands: &BandSpec,
    cap: usize,
) -> Result<u64> {
    check_same_weight(mu, nu)?;
    let n = mu.weight();
    check_cap("monotone path enumeration", n, cap)?;
    let products = path_products(n, bands);
    let starts = class_elements(mu);
    let mut entries: Vec<(&Perm, &u64)> = products.iter().collect();
    entries.sort_unstable();
    Ok(entries
        .par_iter()
        .map(|(prod, &count)| {
            let hits = starts
                .iter()
                .filter(|g| &prod.compose(g).cycle_type() == nu)
                .count() as u64;
            hits * count
        })
        .sum())
}

/// Counts for every target class at once: `result[nu]` is the number of
/// pairs ending in `cyc_nu`.
pub fn count_monotone_pairs_all(
    mu: &Partition,
    bands: &BandSpec,
    cap: usize,
) -> Result<BTreeMap<Partition, u64>> {
    let n = mu.weight();
    check_cap("monotone path enumeration", n, cap)?;
    let products = path_products(n, bands);
    let starts = class_elements(mu);
    let mut out: BTreeMap<Partition, u64> = partitions_of(n).into_iter().map(|p| (p, 0)).collect();
    for (prod, count) in &products {
        for g in &starts {
            *out.get_mut(&prod.compose(g).cycle_type()).unwrap() += count;
        }
    }
    Ok(out)
}

/// `#{(g_1..g_j) : g_a in cyc_{mu^a}, g_1 ... g_j = id}` with the default
/// cap.
pub fn count_cover_tuples(profiles: &[Partition]) -> Result<u64> {
    count_cover_tuples_capped(profiles, DEFAULT_BRUTE_CAP)
}

pub fn count_cover_tuples_capped(profiles: &[Partition], cap: usize) -> Result<u64> {
    let first = profiles.first().ok_or(Error::EmptyProfiles)?;
    for p in &profiles[1..] {
        check_same_weight(first, p)?;
    }
    let n = first.weight();
    check_cap("cover tuple enumeration", n, cap)?;
    let mut dist: HashMap<Perm, u64> = HashMap::from([(Perm::identity(n), 1)]);
    for profile in profiles {
        let class = class_elements(profile);
        let mut next = HashMap::new();
        for (x, count) in &dist {
            for g in &class {
                *next.entry(x.compose(g)).or_insert(0) += count;
            }
        }
        dist = next;
    }
    Ok(dist.get(&Perm::identity(n)).copied().unwrap_or(0))
}

/// An element of the centre of `Q[S_n]` in the class-sum basis `C_mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterElement {
    n: usize,
    coefficients: BTreeMap<Partition, Rational>,
}

impl CenterElement {
    pub fn zero(n: usize) -> Self {
        CenterElement {
            n,
            coefficients: BTreeMap::new(),
        }
    }

    /// The class sum `C_mu`.
    pub fn class_sum(mu: &Partition) -> Self {
        Self::from_coefficients(mu.weight(), [(mu.clone(), Rational::one())])
            .expect("single class of matching weight")
    }

    pub fn from_coefficients(
        n: usize,
        coefficients: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut out = CenterElement::zero(n);
        for (p, c) in coefficients {
            if p.weight() != n {
                return Err(Error::WeightMismatch {
                    left: format!("{p:?}"),
                    left_weight: p.weight(),
                    right: "centre of S_n".into(),
                    right_weight: n,
                });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coefficients
            .entry(p.clone())
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.remove(&p);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, mu: &Partition) -> Rational {
        self.coefficients
            .get(mu)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero coordinates in canonical order.
    pub fn coefficients(&self) -> &BTreeMap<Partition, Rational> {
        &self.coefficients
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = CenterElement::zero(self.n);
        for (p, c) in &self.coefficients {
            out.add_term(p.clone(), c * s);
        }
        out
    }

    pub fn add(&self, other: &CenterElement) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.coefficients {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    /// Product in the centre, by explicit expansion in `Q[S_n]`.
    pub fn mul(&self, other: &CenterElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "centre elements of S_{} and S_{} cannot be multiplied",
                self.n, other.n
            )));
        }
        let group = Group::new(self.n, DEFAULT_BRUTE_CAP)?;
        let right = group.expand(other);
        group.multiply_by_explicit(self, &right)
    }
}

/// Explicit `Q[S_n]` bookkeeping for small `n`.
struct Group {
    n: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    class_of: Vec<Partition>,
}

/// Dense explicit element with rational coefficients.
type Explicit = Vec<Rational>;

impl Group {
    fn new(n: usize, cap: usize) -> Result<Self> {
        check_cap("group algebra", n, cap)?;
        let elements = all_perms(n);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let class_of = elements.iter().map(Perm::cycle_type).collect();
        Ok(Group {
            n,
            elements,
            index,
            class_of,
        })
    }

    fn expand(&self, elem: &CenterElement) -> Explicit {
        self.class_of
            .iter()
            .map(|cls| elem.coefficient(cls))
            .collect()
    }

    /// `central * right`, read back in the class-sum basis after checking
    /// that the result is constant on every class.
    fn multiply_by_explicit(
        &self,
        central: &CenterElement,
        right: &Explicit,
    ) -> Result<CenterElement> {
        let left = self.expand(central);
        let mut product = vec![Rational::zero(); self.elements.len()];
        for (i, a) in left.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in right.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = self.index[&self.elements[i].compose(&self.elements[j])];
                product[k] += a * b;
            }
        }
        self.collect(&product)
    }

    fn collect(&self, explicit: &Explicit) -> Result<CenterElement> {
        let mut seen: BTreeMap<&Partition, &Rational> = BTreeMap::new();
        for (cls, v) in self.class_of.iter().zip(explicit) {
            match seen.get(cls) {
                Some(prev) if *prev != v => {
                    return Err(Error::NotCentral {
                        class: format!("{cls:?}"),
                    })
                }
                Some(_) => {}
                None => {
                    seen.insert(cls, v);
                }
            }
        }
        CenterElement::from_coefficients(
            self.n,
            seen.into_iter().map(|(p, v)| (p.clone(), v.clone())),
        )
    }

    /// `x * J_b` for the explicit element `x`, with 1-based `b`.
    fn times_jucys_murphy(&self, x: &[BigInt], b: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); x.len()];
        for (i, coeff) in x.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for a in 0..b - 1 {
                let k = self.index[&self.elements[i].times_transposition(a, b - 1)];
                out[k] += coeff;
            }
        }
        out
    }

    /// `[G_0, ..., G_kmax]` with `G_k = e_k(J)` or `h_k(J)`, folding in the
    /// Jucys–Murphy elements in the given order.
    fn symmetric_in_jucys_murphy(
        &self,
        kind: JmKind,
        kmax: usize,
        order: &[usize],
    ) -> Vec<Vec<BigInt>> {
        let size = self.elements.len();
        let mut unit = vec![BigInt::zero(); size];
        unit[self.index[&Perm::identity(self.n)]] = BigInt::one();
        let mut polys: Vec<Vec<BigInt>> = vec![unit];
        polys.extend((0..kmax).map(|_| vec![BigInt::zero(); size]));
        for &b in order {
            match kind {
                // E_new[k] = E[k] + E[k-1] J_b, updated from the top down
                JmKind::Elementary => {
                    for k in (1..=kmax).rev() {
                        let shifted = self.times_jucys_murphy(&polys[k - 1], b);
                        for (t, s) in polys[k].iter_mut().zip(shifted) {
                            *t += s;
                        }
                    }
                }
                // H_new[k] = H[k] + H_new[k-1] J_b, updated from the bottom up
                JmKind::Complete => {
                    for k in 1..=kmax {
                        let shifted = self.times_jucys_murphy(&polys[k - 1], b);
                        for (t, s) in polys[k].iter_mut().zip(shifted) {
                            *t += s;
                        }
                    }
                }
            }
        }
        polys
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum JmKind {
    Elementary,
    Complete,
}

/// A symmetric function of the Jucys–Murphy elements acting on the centre.
#[derive(Clone, Debug, PartialEq)]
pub enum CentralGenerator {
    /// `e_k(J)`
    Elementary(usize),
    /// `h_k(J)`
    Complete(usize),
    /// `E(w, J) = prod_b (1 + w J_b) = sum_k w^k e_k(J)`
    ElementaryGenerating(Rational),
    /// `H(z, J) = prod_b (1 - z J_b)^{-1}`, truncated after `z^degree`
    CompleteGenerating { z: Rational, degree: usize },
}

impl CentralGenerator {
    /// The eigenvalue on the idempotent `F_lambda`, evaluated on the
    /// contents of `lambda`.
    pub fn eigenvalue(&self, lambda: &Partition) -> Rational {
        use crate::content::{content_symmetric_upto, SymmetricKind};
        let int = |v: &BigInt| Rational::from_integer(v.clone());
        match self {
            CentralGenerator::Elementary(k) => int(&crate::content::content_symmetric(
                lambda,
                *k,
                SymmetricKind::Elementary,
            )),
            CentralGenerator::Complete(k) => int(&crate::content::content_symmetric(
                lambda,
                *k,
                SymmetricKind::Complete,
            )),
            CentralGenerator::ElementaryGenerating(w) => weighted_sum(
                &content_symmetric_upto(lambda, lambda.weight(), SymmetricKind::Elementary),
                w,
            ),
            CentralGenerator::CompleteGenerating { z, degree } => weighted_sum(
                &content_symmetric_upto(lambda, *degree, SymmetricKind::Complete),
                z,
            ),
        }
    }
}

fn weighted_sum(values: &[BigInt], x: &Rational) -> Rational {
    let mut pow = Rational::one();
    let mut acc = Rational::zero();
    for v in values {
        acc += Rational::from_integer(v.clone()) * &pow;
        pow *= x;
    }
    acc
}

/// `elem * G(J)`, computed by expanding `elem` into permutations, applying
/// Jucys–Murphy monomials, and collecting by cycle type.
pub fn multiply_central(
    elem: &CenterElement,
    generator: &CentralGenerator,
) -> Result<CenterElement> {
    multiply_central_in_order(elem, generator, None)
}

fn multiply_central_in_order(
    elem: &CenterElement,
    generator: &CentralGenerator,
    order: Option<&[usize]>,
) -> Result<CenterElement> {
    let group = Group::new(elem.n, DEFAULT_BRUTE_CAP)?;
    let default_order: Vec<usize> = (1..=elem.n).collect();
    let order = order.unwrap_or(&default_order);
    let (kind, weights): (JmKind, Vec<Rational>) = match generator {
        CentralGenerator::Elementary(k) => (JmKind::Elementary, unit_vector(*k)),
        CentralGenerator::Complete(k) => (JmKind::Complete, unit_vector(*k)),
        CentralGenerator::ElementaryGenerating(w) => (JmKind::Elementary, powers(w, elem.n)),
        CentralGenerator::CompleteGenerating { z, degree } => {
            (JmKind::Complete, powers(z, *degree))
        }
    };
    let polys = group.symmetric_in_jucys_murphy(kind, weights.len() - 1, order);
    let mut right = vec![Rational::zero(); group.elements.len()];
    for (poly, weight) in polys.iter().zip(&weights) {
        if weight.is_zero() {
            continue;
        }
        for (r, v) in right.iter_mut().zip(poly) {
            if !v.is_zero() {
                *r += Rational::from_integer(v.clone()) * weight;
            }
        }
    }
    group.multiply_by_explicit(elem, &right)
}

fn unit_vector(k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); k + 1];
    v[k] = Rational::one();
    v
}

fn powers(x: &Rational, degree: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(degree + 1);
    let mut pow = Rational::one();
    for _ in 0..=degree {
        out.push(pow.clone());
        pow *= x;
    }
    out
}

/// Orthogonal idempotent `F_lambda = h_lambda^{-1} sum_mu chi_lambda(mu) C_mu`.
pub fn idempotent(lambda: &Partition) -> Result<CenterElement> {
    let n = lambda.weight();
    check_cap("group algebra", n, DEFAULT_BRUTE_CAP)?;
    let hook = lambda.hook_product();
    let mut coefficients = Vec::new();
    for mu in partitions_of(n) {
        let chi = character(lambda, &mu)?;
        coefficients.push((mu, Rational::new(BigInt::from(chi), hook.clone())));
    }
    CenterElement::from_coefficients(n, coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficient::{f_coefficient, frobenius_hurwitz, CoefficientKey};
    use crate::partition::factorial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&Perm::identity(3)), p("1,1,1"));
        assert_eq!(cycle_type(&Perm::transposition(3, 1, 2)), p("2,1"));
        let three = Perm::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(cycle_type(&three), p("3"));
        assert_eq!(format!("{three:?}"), "(1 2 3)");
        assert!(Perm::from_images(&[1, 1]).is_err());
    }

    #[test]
    fn composition_order() {
        let s = Perm::transposition(3, 1, 2);
        let t = Perm::transposition(3, 2, 3);
        // (1 2)(2 3) sends 3 -> 2 -> 1
        assert_eq!(s.compose(&t).apply(3), 1);
        assert!(s.compose(&s).is_identity());
        let g = Perm::from_images(&[3, 1, 4, 2]).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn class_sizes_from_enumeration() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(BigInt::from(class_elements(&mu).len()), mu.class_size());
            }
            assert_eq!(BigInt::from(all_perms(n).len()), factorial(n));
        }
    }

    // plain depth-first enumeration, no state merging
    fn naive_pairs(mu: &Partition, nu: &Partition, bands: &BandSpec) -> u64 {
        let n = mu.weight();
        let mut steps = Vec::new();
        for band in &bands.bands {
            for i in 0..band.length {
                steps.push((band.mode, i == 0));
            }
        }
        fn go(
            prod: &Perm,
            steps: &[(BandMode, bool)],
            last: usize,
            n: usize,
            starts: &[Perm],
            nu: &Partition,
        ) -> u64 {
            let Some((&(mode, fresh), rest)) = steps.split_first() else {
                return starts
                    .iter()
                    .filter(|g| &prod.compose(g).cycle_type() == nu)
                    .count() as u64;
            };
            let mut total = 0;
            for b in 2..=n {
                let ok = fresh
                    || match mode {
                        BandMode::Strict => b > last,
                        BandMode::Weak => b >= last,
                    };
                if !ok {
                    continue;
                }
                for a in 1..b {
                    let next = prod.compose(&Perm::transposition(n, a, b));
                    total += go(&next, rest, b, n, starts, nu);
                }
            }
            total
        }
        go(&Perm::identity(n), &steps, 0, n, &class_elements(mu), nu)
    }

    #[test]
    fn monotone_examples() {
        let strict1 = BandSpec::from_lengths(&[1], &[]);
        assert_eq!(
            count_monotone_pairs(&p("2"), &p("1,1"), &strict1).unwrap(),
            1
        );
        let two_strict = BandSpec::from_lengths(&[1, 1], &[]);
        assert_eq!(
            count_monotone_pairs(&p("3"), &p("3"), &two_strict).unwrap(),
            12
        );
        let weak2 = BandSpec::from_lengths(&[], &[2]);
        assert_eq!(count_monotone_pairs(&p("3"), &p("3"), &weak2).unwrap(), 10);
    }

    #[test]
    fn memoized_enumeration_matches_naive() {
        let specs = [
            BandSpec::from_lengths(&[2], &[1]),
            BandSpec::from_lengths(&[1, 2], &[]),
            BandSpec::from_lengths(&[], &[2, 1]),
            BandSpec::from_lengths(&[0, 1], &[0, 2]),
        ];
        for n in 1..=4 {
            for spec in &specs {
                for mu in partitions_of(n) {
                    let all = count_monotone_pairs_all(&mu, spec, 7).unwrap();
                    for nu in partitions_of(n) {
                        let fast = count_monotone_pairs(&mu, &nu, spec).unwrap();
                        assert_eq!(fast, naive_pairs(&mu, &nu, spec), "{mu:?}->{nu:?} {spec:?}");
                        assert_eq!(all[&nu], fast);
                    }
                }
            }
        }
    }

    #[test]
    fn brute_cap_refusal() {
        let spec = BandSpec::from_lengths(&[1], &[]);
        let big = Partition::ones(8);
        assert!(matches!(
            count_monotone_pairs(&big, &big, &spec),
            Err(Error::CapExceeded {
                requested: 8,
                cap: 7,
                ..
            })
        ));
        assert!(matches!(
            count_cover_tuples(std::slice::from_ref(&big)),
            Err(Error::CapExceeded { .. })
        ));
        assert!(count_monotone_pairs_capped(&p("3"), &p("3"), &spec, 2).is_err());
        assert!(matches!(idempotent(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn bridge_to_spectral_small() {
        for n in 1..=4 {
            for mu in partitions_of(n) {
                for nu in partitions_of(n) {
                    let key =
                        CoefficientKey::new(mu.clone(), nu.clone(), vec![1], vec![2]).unwrap();
                    let f = f_coefficient(&key).unwrap() * Rational::from_integer(factorial(n));
                    let count = count_monotone_pairs(&mu, &nu, &BandSpec::from_lengths(&[1], &[2]))
                        .unwrap();
                    assert_eq!(f, Rational::from_integer(count.into()));
                }
            }
        }
    }

    #[test]
    fn cover_tuple_examples() {
        assert_eq!(count_cover_tuples(&[p("2"), p("2")]).unwrap(), 1);
        for n in 1..=5 {
            assert_eq!(count_cover_tuples(&[Partition::ones(n)]).unwrap(), 1);
        }
        assert_eq!(count_cover_tuples(&[p("3"), p("3"), p("2,1")]).unwrap(), 0);
        assert!(count_cover_tuples(&[]).is_err());
        let h = frobenius_hurwitz(&[p("3"), p("3"), p("3")], 0).unwrap();
        assert_eq!(
            h * r(6, 1),
            r(
                count_cover_tuples(&[p("3"), p("3"), p("3")]).unwrap() as i64,
                1
            )
        );
    }

    #[test]
    fn multiply_central_examples() {
        let c11 = CenterElement::class_sum(&p("1,1"));
        let c2 = CenterElement::class_sum(&p("2"));
        assert_eq!(
            multiply_central(&c2, &CentralGenerator::Elementary(0)).unwrap(),
            c2
        );
        assert_eq!(
            multiply_central(&c11, &CentralGenerator::Elementary(1)).unwrap(),
            c2
        );
        assert_eq!(
            multiply_central(&c2, &CentralGenerator::Elementary(1)).unwrap(),
            c11
        );
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(
            idempotent(&p("1")).unwrap(),
            CenterElement::class_sum(&p("1"))
        );
        let half = r(1, 2);
        let c11 = CenterElement::class_sum(&p("1,1"));
        let c2 = CenterElement::class_sum(&p("2"));
        assert_eq!(idempotent(&p("2")).unwrap(), c11.add(&c2).scale(&half));
        assert_eq!(
            idempotent(&p("1,1")).unwrap(),
            c11.add(&c2.scale(&r(-1, 1))).scale(&half)
        );
    }

    #[test]
    fn idempotents_are_orthogonal() {
        for n in 1..=4 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    let fa = idempotent(&a).unwrap();
                    let prod = fa.mul(&idempotent(&b).unwrap()).unwrap();
                    let expect = if a == b { fa } else { CenterElement::zero(n) };
                    assert_eq!(prod, expect);
                }
            }
        }
    }

    #[test]
    fn eigenvalues_and_generating_functions() {
        for n in 1..=4 {
            for lam in partitions_of(n) {
                let f = idempotent(&lam).unwrap();
                for gen in [
                    CentralGenerator::Elementary(2),
                    CentralGenerator::Complete(3),
                    CentralGenerator::ElementaryGenerating(r(2, 3)),
                    CentralGenerator::CompleteGenerating {
                        z: r(-1, 2),
                        degree: 3,
                    },
                ] {
                    let got = multiply_central(&f, &gen).unwrap();
                    assert_eq!(got, f.scale(&gen.eigenvalue(&lam)), "{lam:?} {gen:?}");
                }
            }
        }
    }

    #[test]
    fn independent_of_jucys_murphy_order() {
        let order: Vec<usize> = vec![4, 2, 1, 3];
        for mu in partitions_of(4) {
            let c = CenterElement::class_sum(&mu);
            for gen in [
                CentralGenerator::Elementary(2),
                CentralGenerator::Complete(2),
            ] {
                assert_eq!(
                    multiply_central(&c, &gen).unwrap(),
                    multiply_central_in_order(&c, &gen, Some(&order)).unwrap()
                );
            }
        }
    }
}
