//! Monomial bases of the quotient and its h-vector.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::AciParams;

/// Exponent vector of `x^i y^j z^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl Monomial {
    pub const fn new(i: i64, j: i64, k: i64) -> Self {
        Monomial { i, j, k }
    }
    pub fn degree(&self) -> i64 {
        self.i + self.j + self.k
    }
    pub fn exps(&self) -> [i64; 3] {
        [self.i, self.j, self.k]
    }
    pub fn from_exps(e: [i64; 3]) -> Self {
        Monomial::new(e[0], e[1], e[2])
    }
    pub fn divides(&self, other: &Monomial) -> bool {
        self.i <= other.i && self.j <= other.j && self.k <= other.k
    }
    /// Multiply by the variable on `axis`.
    pub fn times(&self, axis: usize) -> Monomial {
        let mut e = self.exps();
        e[axis] += 1;
        Monomial::from_exps(e)
    }
    /// Divide by the variable on `axis`, if possible.
    pub fn over(&self, axis: usize) -> Option<Monomial> {
        let mut e = self.exps();
        if e[axis] == 0 {
            return None;
        }
        e[axis] -= 1;
        Some(Monomial::from_exps(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        for (var, e) in ["x", "y", "z"].iter().zip(self.exps()) {
            match e {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Whether the monomial survives in the quotient by the ideal.
pub fn in_quotient(p: &AciParams, m: &Monomial) -> bool {
    let e = m.exps();
    let pure = p.pure();
    let mixed = p.mixed();
    if e.iter().zip(pure).any(|(&v, q)| v >= q) {
        return false;
    }
    !e.iter().zip(mixed).all(|(&v, q)| v >= q)
}

/// All degree-`d` monomials outside the ideal, lex order with `x > y > z`
/// (descending).
pub fn monomial_basis(p: &AciParams, d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            let m = Monomial::new(i, j, d - i - j);
            if in_quotient(p, &m) {
                out.push(m);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub h: Vec<i64>,
    /// Peak index for hexagonal parameters.
    pub s: Option<i64>,
    pub multiplicity: i64,
}

fn choose2(m: i64) -> i64 {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

fn count_degree(p: &AciParams, d: i64) -> i64 {
    let [a, b, c] = p.pure();
    let [x, y, z] = p.mixed();
    let mut n = 0;
    for i in 0..a.min(d + 1) {
        for j in 0..b.min(d - i + 1) {
            let k = d - i - j;
            if k < c && !(i >= x && j >= y && k >= z) {
                n += 1;
            }
        }
    }
    n
}

/// Signed shifts of the minimal free resolution. The shift on the axis with
/// zero mixed exponent (if any) drops out together with its pure-pair shift.
pub fn resolution_shifts(p: &AciParams) -> Vec<(i64, i64)> {
    let pure = p.pure();
    let mixed = p.mixed();
    let mut out = vec![(1, 0), (-1, p.mixed_degree())];
    for &e in &pure {
        out.push((-1, e));
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        out.push((1, pure[i] + mixed[j] + mixed[k]));
        if mixed[i] > 0 {
            out.push((1, pure[j] + pure[k]));
            out.push((-1, mixed[i] + pure[j] + pure[k]));
        }
    }
    out
}

fn resolution_value(shifts: &[(i64, i64)], d: i64) -> i64 {
    shifts
        .iter()
        .map(|&(sign, shift)| sign * choose2(d - shift + 2))
        .sum()
}

/// h-vector by monomial counting, cross-checked against the alternating
/// binomial sum over the resolution shifts.
pub fn h_vector(p: &AciParams) -> Result<HilbertData> {
    let [a, b, c] = p.pure();
    let top = a + b + c - 3;
    let shifts = resolution_shifts(p);
    let mut h = Vec::new();
    for d in 0..=top + 3 {
        let counted = count_degree(p, d);
        let resolved = resolution_value(&shifts, d);
        if counted != resolved {
            return Err(Error::HilbertMismatch {
                degree: d as usize,
                counted,
                resolved,
            });
        }
        h.push(counted);
    }
    while h.last() == Some(&0) {
        h.pop();
    }
    let multiplicity = h.iter().sum();
    let s = p.hexagon().ok().map(|x| x.s);
    Ok(HilbertData { h, s, multiplicity })
}

/// Peak value `h_s`, after checking `h_s = h_{s+1}`, that every socle degree
/// is at least `s+1`, and that the h-vector weakly increases up to `s+1`.
pub fn twin_peaks(p: &AciParams) -> Result<(i64, bool)> {
    let hex = p.hexagon()?;
    let hd = h_vector(p)?;
    let s = hex.s as usize;
    let at = |d: usize| hd.h.get(d).copied().unwrap_or(0);
    let equal = at(s) == at(s + 1);
    // telescoped difference h_{s+1} - h_s
    let telescoped = hex.s + 2 - (hex.a_side + hex.b_side + hex.c_side + hex.puncture);
    if telescoped != at(s + 1) - at(s) {
        return Err(Error::Invariant(format!(
            "twin peaks telescoping failed for {p}"
        )));
    }
    let socle = crate::params::socle_info(p);
    if socle.socle_degrees.iter().any(|&d| d < hex.s + 1) {
        return Err(Error::Invariant(format!("socle degree below s+1 for {p}")));
    }
    if (1..=s + 1).any(|d| at(d) < at(d - 1)) {
        return Err(Error::Invariant(format!(
            "h-vector not weakly increasing up to s+1 for {p}"
        )));
    }
    if !equal {
        return Err(Error::Invariant(format!("no twin peaks for {p}")));
    }
    Ok((at(s), equal))
}
