//! Hypergeometric weights: the `rho_j` sequence, ratio factors `r_j`, content
//! products `r_lambda(N)`, partition Pochhammer symbols, and elementary and
//! complete symmetric functions of Young-diagram contents.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;

/// Parameters `(q, w_1..w_l, z_1..z_m)` of the hypergeometric family.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricParams<S> {
    q: S,
    w: Vec<S>,
    z: Vec<S>,
}

impl<S: Scalar> HypergeometricParams<S> {
    pub fn new(q: S, w: Vec<S>, z: Vec<S>) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidArgument("q must be nonzero".into()));
        }
        Ok(HypergeometricParams { q, w, z })
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn w(&self) -> &[S] {
        &self.w
    }

    pub fn z(&self) -> &[S] {
        &self.z
    }

    pub fn l(&self) -> usize {
        self.w.len()
    }

    pub fn m(&self) -> usize {
        self.z.len()
    }

    /// `prod_a (1 + k w_a) / prod_b (1 - k z_b)`, erroring on a vanishing
    /// denominator.
    fn ratio_at(&self, k: i64, context: impl Fn() -> String) -> Result<S> {
        let k_s = S::from_i64(k);
        let mut num = S::one();
        for wa in &self.w {
            num = num * (S::one() + k_s.clone() * wa.clone());
        }
        let mut den = S::one();
        for (b, zb) in self.z.iter().enumerate() {
            let f = S::one() - k_s.clone() * zb.clone();
            if f.is_zero() {
                return Err(Error::Pole {
                    factor: format!("1 - {k}*z_{}", b + 1),
                    detail: context(),
                });
            }
            den = den * f;
        }
        Ok(num / den)
    }

    /// `prod_b (1 + k z_b) / prod_a (1 - k w_a)`, the negative-index factor.
    fn reflected_ratio_at(&self, k: i64, context: impl Fn() -> String) -> Result<S> {
        let k_s = S::from_i64(k);
        let mut num = S::one();
        for zb in &self.z {
            num = num * (S::one() + k_s.clone() * zb.clone());
        }
        let mut den = S::one();
        for (a, wa) in self.w.iter().enumerate() {
            let f = S::one() - k_s.clone() * wa.clone();
            if f.is_zero() {
                return Err(Error::Pole {
                    factor: format!("1 - {k}*w_{}", a + 1),
                    detail: context(),
                });
            }
            den = den * f;
        }
        Ok(num / den)
    }

    /// Parameters `(q~, w~, z~)` with `r_{N+j} = r~_j` for every `j`:
    /// `w~_a = w_a/(1 + N w_a)`, `z~_b = z_b/(1 - N z_b)`,
    /// `q~ = q prod(1 + N w_a)/prod(1 - N z_b)`.
    pub fn shifted(&self, shift: i64) -> Result<Self> {
        let n_s = S::from_i64(shift);
        let mut q = self.q.clone();
        let mut w = Vec::with_capacity(self.w.len());
        for (a, wa) in self.w.iter().enumerate() {
            let f = S::one() + n_s.clone() * wa.clone();
            if f.is_zero() {
                return Err(Error::Pole {
                    factor: format!("1 + {shift}*w_{}", a + 1),
                    detail: "parameter shift".into(),
                });
            }
            q = q * f.clone();
            w.push(wa.clone() / f);
        }
        let mut z = Vec::with_capacity(self.z.len());
        for (b, zb) in self.z.iter().enumerate() {
            let f = S::one() - n_s.clone() * zb.clone();
            if f.is_zero() {
                return Err(Error::Pole {
                    factor: format!("1 - {shift}*z_{}", b + 1),
                    detail: "parameter shift".into(),
                });
            }
            q = q / f.clone();
            z.push(zb.clone() / f);
        }
        HypergeometricParams::new(q, w, z)
    }
}

/// `rho_j`: `rho_0 = 1`, and for `j > 0`
/// `rho_j = q^j prod_{k=1}^{j} prod_a (1 + k w_a) / prod_b (1 - k z_b)`,
/// `rho_{-j} = q^{-j} prod_{k=0}^{j-1} prod_b (1 + k z_b) / prod_a (1 - k w_a)`.
pub fn rho<S: Scalar>(params: &HypergeometricParams<S>, j: i64) -> Result<S> {
    let mut acc = params.q.ipow(j);
    if j > 0 {
        for k in 1..=j {
            acc = acc * params.ratio_at(k, || format!("rho_{j}, k = {k}"))?;
        }
    } else {
        for k in 0..-j {
            acc = acc * params.reflected_ratio_at(k, || format!("rho_{j}, k = {k}"))?;
        }
    }
    Ok(acc)
}

/// `r_j = q prod_a (1 + j w_a) / prod_b (1 - j z_b)`, equal to
/// `rho_j / rho_{j-1}`.
pub fn r_factor<S: Scalar>(params: &HypergeometricParams<S>, j: i64) -> Result<S> {
    Ok(params.q.clone() * params.ratio_at(j, || format!("r_{j}"))?)
}

/// `r_0(N)`: `prod_{j=0}^{N-1} rho_j` for `N > 0`, `1` for `N = 0`, and
/// `prod_{j=1}^{|N|} rho_{-j}^{-1}` for `N < 0`.
pub fn r_zero<S: Scalar>(params: &HypergeometricParams<S>, shift: i64) -> Result<S> {
    let mut acc = S::one();
    if shift >= 0 {
        for j in 0..shift {
            acc = acc * rho(params, j)?;
        }
    } else {
        for j in 1..=-shift {
            let r = rho(params, -j)?;
            if r.is_zero() {
                return Err(Error::Pole {
                    factor: format!("rho_{}", -j),
                    detail: format!("r_0({shift}) divides by rho_{}", -j),
                });
            }
            acc = acc / r;
        }
    }
    Ok(acc)
}

/// Content product `r_lambda(N) = r_0(N) prod_{(i,j) in lambda} r_{N+j-i}`.
pub fn content_product<S: Scalar>(
    params: &HypergeometricParams<S>,
    lambda: &Partition,
    shift: i64,
) -> Result<S> {
    let mut acc = r_zero(params, shift)?;
    for (row, &len) in lambda.parts().iter().enumerate() {
        for col in 0..len {
            let content = col as i64 - row as i64;
            let j = shift + content;
            let factor = params.q.clone()
                * params.ratio_at(j, || {
                    format!("cell ({}, {}) with content {content}", row + 1, col + 1)
                })?;
            acc = acc * factor;
        }
    }
    Ok(acc)
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn rising_factorial<S: Scalar>(x: &S, k: usize) -> S {
    (0..k).fold(S::one(), |acc, i| acc * (x.clone() + S::from_i64(i as i64)))
}

/// `(u)_lambda = prod_i (u - i + 1)_{lambda_i}`.
pub fn pochhammer_partition<S: Scalar>(u: &S, lambda: &Partition) -> S {
    lambda
        .parts()
        .iter()
        .enumerate()
        .fold(S::one(), |acc, (i, &part)| {
            acc * rising_factorial(&(u.clone() - S::from_i64(i as i64)), part)
        })
}

/// Which symmetric function of the contents to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetricKind {
    Elementary,
    Complete,
}

/// Power sums `p_1..p_kmax` of the contents.
fn content_power_sums(lambda: &Partition, kmax: usize) -> Vec<BigInt> {
    let contents = lambda.contents();
    let mut sums = vec![BigInt::zero(); kmax + 1];
    for c in contents {
        let c = BigInt::from(c);
        let mut pow = BigInt::one();
        for s in sums.iter_mut().skip(1) {
            pow *= &c;
            *s += &pow;
        }
    }
    sums
}

/// `e_0..e_kmax` (or `h_0..h_kmax`) of the content multiset, via Newton's
/// identities.
pub fn content_symmetric_upto(lambda: &Partition, kmax: usize, kind: SymmetricKind) -> Vec<BigInt> {
    let p = content_power_sums(lambda, kmax);
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(BigInt::one());
    for k in 1..=kmax {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &out[k - i] * &p[i];
            match kind {
                SymmetricKind::Elementary if i % 2 == 0 => acc -= term,
                _ => acc += term,
            }
        }
        debug_assert!((&acc % BigInt::from(k)).is_zero());
        out.push(acc / BigInt::from(k));
    }
    out
}

/// `e_k(cont lambda)` or `h_k(cont lambda)`.
pub fn content_symmetric(lambda: &Partition, k: usize, kind: SymmetricKind) -> BigInt {
    if kind == SymmetricKind::Elementary && k > lambda.weight() {
        return BigInt::zero();
    }
    content_symmetric_upto(lambda, k, kind).pop().unwrap()
}

/// A content symmetric function value together with its arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentSymmetricValue {
    pub lambda: Partition,
    pub k: usize,
    pub kind: SymmetricKind,
    pub value: BigInt,
}

impl ContentSymmetricValue {
    pub fn evaluate(lambda: &Partition, k: usize, kind: SymmetricKind) -> Self {
        ContentSymmetricValue {
            lambda: lambda.clone(),
            k,
            kind,
            value: content_symmetric(lambda, k, kind),
        }
    }
}
