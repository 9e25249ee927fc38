//! Univariate polynomials with rational coefficients, Lagrange interpolation
//! and extraction of integer linear factors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Coefficients in ascending degree order; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `x + shift`.
    pub fn linear(shift: i64) -> Self {
        Self::from_ints(&[shift, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&rat(x))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[BigRational], i: usize| v.get(i).cloned().unwrap_or_else(BigRational::zero);
        Self::new(
            (0..n)
                .map(|i| get(&self.coeffs, i) + get(&other.coeffs, i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::new(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &rem[k + dd] / &lead;
            if !f.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &f * c;
                }
            }
            q[k] = f;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Unique polynomial of degree below `points.len()` through the points.
    pub fn lagrange(points: &[(BigRational, BigRational)]) -> Self {
        let mut total = Self::new(vec![]);
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut term = Self::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let lin = Self::new(vec![-xj.clone(), BigRational::one()]);
                    term = term.mul(&lin).scale(&(BigRational::one() / (xi - xj)));
                }
            }
            total = total.add(&term);
        }
        total
    }

    /// Pull out integer roots `r` (factors `x - r`) with `|r| <= bound`.
    pub fn integer_root_factors(&self, bound: i64) -> LinearFactors {
        let mut rest = self.clone();
        let mut shifts = BTreeMap::new();
        if rest.is_zero() {
            return LinearFactors {
                scale: BigRational::zero(),
                shifts,
                residual: None,
            };
        }
        for r in -bound..=bound {
            let lin = Self::linear(-r);
            loop {
                if rest.degree().unwrap_or(0) == 0 || !rest.eval_int(r).is_zero() {
                    break;
                }
                rest = rest.div_rem(&lin).0;
                *shifts.entry(-r).or_insert(0) += 1;
            }
        }
        let scale = rest.leading();
        let residual = if rest.degree() == Some(0) {
            None
        } else {
            Some(rest.scale(&(BigRational::one() / &scale)))
        };
        LinearFactors {
            scale,
            shifts,
            residual,
        }
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one() && d > 0;
            if !unit {
                out.push_str(&mag.to_string());
            }
            match d {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{d}")),
            }
        }
        out
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[String; 2]> = self
            .coeffs
            .iter()
            .map(|c| [c.numer().to_string(), c.denom().to_string()])
            .collect();
        pairs.serialize(s)
    }
}

/// `scale * prod (x + shift)^e * residual`, with `residual` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactors {
    pub scale: BigRational,
    pub shifts: BTreeMap<i64, u32>,
    pub residual: Option<IntPolynomial>,
}

impl LinearFactors {
    pub fn from_shifts(scale: BigRational, shifts: impl IntoIterator<Item = (i64, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (s, e) in shifts {
            if e > 0 {
                *m.entry(s).or_insert(0) += e;
            }
        }
        LinearFactors {
            scale,
            shifts: m,
            residual: None,
        }
    }

    pub fn degree(&self) -> usize {
        self.shifts.values().map(|&e| e as usize).sum::<usize>()
            + self.residual.as_ref().and_then(|r| r.degree()).unwrap_or(0)
    }

    pub fn expand(&self) -> IntPolynomial {
        let mut p = IntPolynomial::constant(self.scale.clone());
        for (&s, &e) in &self.shifts {
            for _ in 0..e {
                p = p.mul(&IntPolynomial::linear(s));
            }
        }
        if let Some(r) = &self.residual {
            p = p.mul(r);
        }
        p
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        let mut acc = self.scale.clone();
        for (&s, &e) in &self.shifts {
            for _ in 0..e {
                acc *= rat(x + s);
            }
        }
        if let Some(r) = &self.residual {
            acc *= r.eval_int(x);
        }
        acc
    }

    /// Divide out another product of linear factors; `None` if some factor is
    /// missing.
    pub fn divide(&self, other: &LinearFactors) -> Option<LinearFactors> {
        let mut shifts = self.shifts.clone();
        for (&s, &e) in &other.shifts {
            let have = shifts.get_mut(&s)?;
            if *have < e {
                return None;
            }
            *have -= e;
        }
        shifts.retain(|_, e| *e > 0);
        if other.residual.is_some() || other.scale.is_zero() {
            return None;
        }
        Some(LinearFactors {
            scale: &self.scale / &other.scale,
            shifts,
            residual: self.residual.clone(),
        })
    }

    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        if !self.scale.is_one() {
            out.push_str(&self.scale.to_string());
            out.push(' ');
        }
        for (&s, &e) in &self.shifts {
            let base = match s.cmp(&0) {
                std::cmp::Ordering::Equal => var.to_string(),
                std::cmp::Ordering::Greater => format!("({var}+{s})"),
                std::cmp::Ordering::Less => format!("({var}-{})", -s),
            };
            out.push_str(&base);
            if e > 1 {
                out.push_str(&format!("^{e}"));
            }
        }
        if let Some(r) = &self.residual {
            out.push_str(&format!("({})", r.display_in(var)));
        }
        if out.is_empty() {
            out.push('1');
        }
        out.trim_end().to_string()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::from_ints(&[-1, 6, 1]);
        assert_eq!(p.display_in("t"), "t^2 + 6t - 1");
        assert_eq!(p.eval_int(1), rat(6));
        let q = p.mul(&IntPolynomial::linear(3));
        let (d, r) = q.div_rem(&p);
        assert_eq!(d, IntPolynomial::linear(3));
        assert!(r.is_zero());
        assert!(p.divides(&q));
        assert!(!IntPolynomial::linear(1).divides(&p));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = IntPolynomial::from_ints(&[5, -2, 0, 3]);
        let pts: Vec<_> = (0..4).map(|x| (rat(x), p.eval_int(x))).collect();
        assert_eq!(IntPolynomial::lagrange(&pts), p);
    }

    #[test]
    fn root_extraction() {
        let f = LinearFactors::from_shifts(rat(2), [(1, 1), (-3, 2)]);
        let mut p = f.expand();
        p = p.mul(&IntPolynomial::from_ints(&[-1, 6, 1]));
        let g = p.integer_root_factors(50);
        assert_eq!(g.scale, rat(2));
        assert_eq!(g.shifts, f.shifts);
        assert_eq!(g.residual, Some(IntPolynomial::from_ints(&[-1, 6, 1])));
        assert_eq!(g.display_in("t"), "2 (t-3)^2(t+1)(t^2 + 6t - 1)");
    }
}
