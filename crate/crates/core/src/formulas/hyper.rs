//! Hyperfactorials and exact quotients of them.
//!
//! `H(n) = 0! 1! ... (n-1)! = prod_{k<n} k^(n-k)`. Quotients are assembled
//! as prime-exponent vectors so that cancellation is exact before anything
//! is multiplied out.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

/// Factorization of a rational number as `prod p^e` with signed exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrimeExponents(BTreeMap<u64, i64>);

fn factor_small(mut k: u64, mut f: impl FnMut(u64, i64)) {
    let mut d = 2;
    while d * d <= k {
        let mut e = 0;
        while k.is_multiple_of(d) {
            k /= d;
            e += 1;
        }
        if e > 0 {
            f(d, e);
        }
        d += 1;
    }
    if k > 1 {
        f(k, 1);
    }
}

impl PrimeExponents {
    pub fn one() -> Self {
        Self::default()
    }

    /// Multiply by `k^times` (divide when `times` is negative).
    pub fn mul_int(&mut self, k: u64, times: i64) {
        if k < 2 || times == 0 {
            return;
        }
        factor_small(k, |p, e| *self.0.entry(p).or_insert(0) += e * times);
    }

    /// Multiply by `H(n)^times`.
    pub fn mul_hyper(&mut self, n: u64, times: i64) {
        for k in 2..n {
            self.mul_int(k, (n - k) as i64 * times);
        }
    }

    pub fn mul(&mut self, other: &PrimeExponents, times: i64) {
        for (&p, &e) in &other.0 {
            *self.0.entry(p).or_insert(0) += e * times;
        }
    }

    pub fn exponent(&self, p: u64) -> i64 {
        self.0.get(&p).copied().unwrap_or(0)
    }

    pub fn to_rational(&self) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (&p, &e) in &self.0 {
            if e > 0 {
                num *= Pow::pow(BigInt::from(p), e as u64);
            } else if e < 0 {
                den *= Pow::pow(BigInt::from(p), (-e) as u64);
            }
        }
        BigRational::new(num, den)
    }

    /// The value, which must be an integer.
    pub fn to_integer(&self) -> Result<BigInt> {
        if let Some((&p, &e)) = self.0.iter().find(|(_, &e)| e < 0) {
            return Err(Error::NonIntegral {
                prime: p,
                exponent: e,
            });
        }
        Ok(self.to_rational().to_integer())
    }
}

/// A formal quotient of hyperfactorials with an optional integer prefactor.
#[derive(Debug, Clone, Default)]
pub struct HyperQuotient {
    exps: PrimeExponents,
    negative_args: Vec<i64>,
}

impl HyperQuotient {
    pub fn new() -> Self {
        Self::default()
    }
    fn push(mut self, n: i64, times: i64) -> Self {
        if n < 0 {
            self.negative_args.push(n);
        } else {
            self.exps.mul_hyper(n as u64, times);
        }
        self
    }
    pub fn times(self, n: i64) -> Self {
        self.push(n, 1)
    }
    pub fn over(self, n: i64) -> Self {
        self.push(n, -1)
    }
    pub fn times_int(mut self, k: u64, e: i64) -> Self {
        self.exps.mul_int(k, e);
        self
    }
    pub fn times_quotient(mut self, other: &HyperQuotient) -> Self {
        self.exps.mul(&other.exps, 1);
        self.negative_args.extend(&other.negative_args);
        self
    }
    fn check(&self) -> Result<()> {
        match self.negative_args.first() {
            Some(n) => Err(Error::InvalidInput(format!(
                "hyperfactorial of negative argument {n}"
            ))),
            None => Ok(()),
        }
    }
    pub fn exponents(&self) -> Result<&PrimeExponents> {
        self.check()?;
        Ok(&self.exps)
    }
    pub fn integer(&self) -> Result<BigInt> {
        self.check()?;
        self.exps.to_integer()
    }
    pub fn rational(&self) -> Result<BigRational> {
        self.check()?;
        Ok(self.exps.to_rational())
    }
}

/// `H(n)` by direct multiplication of factorials.
pub fn hyperfactorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for i in 1..n {
        fact *= i;
        acc *= &fact;
    }
    acc
}

/// Product of the even factors of `H(n)`: `prod_{i<n} prod_{1<=j<=i/2} 2j`.
pub fn hyper_even(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..n {
        for j in 1..=i / 2 {
            acc *= 2 * j;
        }
    }
    acc
}

/// `H(n) / H_e(n)`, exact.
pub fn hyper_odd(n: u64) -> BigInt {
    let h = hyperfactorial(n);
    let e = hyper_even(n);
    debug_assert!((&h % &e) == BigInt::from(0));
    h / e
}

/// Closed form of the even part:
/// `2^(C(n/2 floor, 2) + C(n/2 ceil, 2)) H(floor(n/2)) H(ceil(n/2))`.
pub fn hyper_even_closed(n: u64) -> BigInt {
    let (lo, hi) = (n / 2, n.div_ceil(2));
    let c2 = |m: u64| if m < 2 { 0 } else { m * (m - 1) / 2 };
    Pow::pow(BigInt::from(2), c2(lo) + c2(hi)) * hyperfactorial(lo) * hyperfactorial(hi)
}

/// MacMahon's box formula `H(A)H(B)H(C)H(A+B+C) / (H(A+B)H(A+C)H(B+C))`.
pub fn mac_quotient(a: i64, b: i64, c: i64) -> HyperQuotient {
    HyperQuotient::new()
        .times(a)
        .times(b)
        .times(c)
        .times(a + b + c)
        .over(a + b)
        .over(a + c)
        .over(b + c)
}

pub fn mac(a: i64, b: i64, c: i64) -> Result<BigInt> {
    if a < 0 || b < 0 || c < 0 {
        return Err(Error::InvalidInput(format!(
            "box sides must be non-negative, got ({a},{b},{c})"
        )));
    }
    mac_quotient(a, b, c).integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(hyperfactorial(6), BigInt::from(34560));
        assert_eq!(hyperfactorial(0), BigInt::one());
        assert_eq!(hyperfactorial(1), BigInt::one());
        assert_eq!(hyperfactorial(7), BigInt::from(24883200));
        assert_eq!(hyper_even(4), BigInt::from(4));
        assert_eq!(hyper_odd(4), BigInt::from(3));
        assert_eq!(hyper_even_closed(4), BigInt::from(4));
    }

    #[test]
    fn exponent_vectors_match_direct_products() {
        for n in 0..15 {
            let mut e = PrimeExponents::one();
            e.mul_hyper(n, 1);
            assert_eq!(e.to_integer().unwrap(), hyperfactorial(n));
        }
    }

    #[test]
    fn mac_values() {
        assert_eq!(mac(1, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(mac(2, 2, 2).unwrap(), BigInt::from(20));
        assert_eq!(mac(1, 1, 5).unwrap(), BigInt::from(6));
        assert_eq!(mac(0, 3, 4).unwrap(), BigInt::one());
        assert!(mac(-1, 1, 1).is_err());
    }

    #[test]
    fn non_integral_is_an_error() {
        let q = HyperQuotient::new().over(4);
        assert!(matches!(q.integer(), Err(Error::NonIntegral { .. })));
        assert_eq!(q.rational().unwrap(), BigRational::new(1.into(), 12.into()));
    }
}
