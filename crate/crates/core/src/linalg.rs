//! Exact determinants, permanents, ranks and integer factorization, plus the
//! consolidated WLP verdict built from them.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrices::{build_n, build_z, IntMatrix};
use crate::params::AciParams;

/// Fraction-free (Bareiss) determinant. Every division is exact.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::InvalidInput(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(r) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, r);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Rank over the prime field with `p` elements.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| v.mod_floor(&pb).to_u64().unwrap())
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(r) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, r);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for v in &mut a[rank][col..] {
            *v = mulmod(*v, inv);
        }
        let pivot = a[rank].clone();
        for row in &mut a[rank + 1..] {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (v, &q) in row[col..].iter_mut().zip(&pivot[col..]) {
                *v = (*v + p - mulmod(f, q)) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Permanent by inclusion-exclusion over column subsets (Ryser's formula).
/// Returns `None` when the matrix is larger than `size_cap`.
///
/// Columns are decided one at a time. A row's sum is final once its last
/// nonzero column has been decided, so it is folded into the weight and
/// dropped from the state; subsets that agree on the sums of the rows still
/// open are merged. The result is the full Ryser sum, but the work grows
/// with the band width of the matrix instead of `2^n`.
pub fn permanent_exact(m: &IntMatrix, size_cap: usize) -> Result<Option<BigInt>> {
    if !m.is_square() {
        return Err(Error::InvalidInput(format!(
            "permanent of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n > size_cap {
        return Ok(None);
    }
    // Each subset term is bounded by the product of absolute row sums.
    let mut bound = BigInt::one();
    for i in 0..n {
        bound *= m.row(i).iter().map(|v| v.abs()).sum::<BigInt>();
    }
    bound <<= n;
    if bound.bits() < 126 {
        Ok(Some(BigInt::from(ryser_merged(m, |v| {
            v.to_i128().unwrap()
        }))))
    } else {
        Ok(Some(ryser_merged(m, |v| v.clone())))
    }
}

fn ryser_merged<T>(m: &IntMatrix, conv: impl Fn(&BigInt) -> T) -> T
where
    T: Clone + Eq + std::hash::Hash + Zero + One + std::ops::Neg<Output = T>,
    for<'a> T: std::ops::AddAssign<&'a T> + std::ops::MulAssign<&'a T>,
{
    let n = m.rows();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            if !m.get(i, j).is_zero() {
                first[i] = first[i].min(j);
                last[i] = j;
            }
        }
        if first[i] == usize::MAX {
            return T::zero();
        }
    }
    // state: sums of the open rows, in the order of `open`
    let mut open: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<T>, T> = HashMap::from([(Vec::new(), T::one())]);
    for j in 0..n {
        open.extend((0..n).filter(|&i| first[i] == j));
        let pos: Vec<Option<usize>> = {
            let mut v = vec![None; n];
            for (k, &i) in open.iter().enumerate() {
                v[i] = Some(k);
            }
            v
        };
        let entries: Vec<(usize, T)> = (0..n)
            .filter(|&i| !m.get(i, j).is_zero())
            .map(|i| (pos[i].unwrap(), conv(m.get(i, j))))
            .collect();
        let keep: Vec<usize> = (0..open.len()).filter(|&k| last[open[k]] != j).collect();
        let closing: Vec<usize> = (0..open.len()).filter(|&k| last[open[k]] == j).collect();
        let mut next: HashMap<Vec<T>, T> = HashMap::with_capacity(states.len() * 2);
        for (mut sums, weight) in states {
            sums.resize(open.len(), T::zero());
            let mut with = sums.clone();
            for (k, v) in &entries {
                with[*k] += v;
            }
            for (sums, mut w) in [(sums, weight.clone()), (with, -weight)] {
                let mut dead = false;
                for &k in &closing {
                    if sums[k].is_zero() {
                        dead = true;
                        break;
                    }
                    w *= &sums[k];
                }
                if dead {
                    continue;
                }
                let key: Vec<T> = keep.iter().map(|&k| sums[k].clone()).collect();
                let slot = next.entry(key).or_insert_with(T::zero);
                *slot += &w;
            }
        }
        next.retain(|_, w| !w.is_zero());
        states = next;
        open = keep.iter().map(|&k| open[k]).collect();
    }
    let total = states.remove(&Vec::new()).unwrap_or_else(T::zero);
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub trial_limit: u64,
    /// Iterations allowed per rho attempt.
    pub rho_iterations: u64,
    pub rho_seeds: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_limit: 1_000_000,
            rho_iterations: 200_000,
            rho_seeds: 8,
        }
    }
}

/// `sign * prod(p^e) * cofactor` equals the factored value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInt {
    pub sign: i8,
    pub factors: BTreeMap<BigUint, u32>,
    pub unfactored_cofactor: Option<BigUint>,
    /// False when some reported prime above 2^64 passed only a probable-prime
    /// test.
    pub certified: bool,
}

impl FactoredInt {
    pub fn value(&self) -> BigInt {
        let mut v = BigUint::one();
        for (p, &e) in &self.factors {
            v *= p.pow(e);
        }
        if let Some(c) = &self.unfactored_cofactor {
            v *= c;
        }
        match self.sign {
            0 => BigInt::zero(),
            s if s < 0 => -BigInt::from(v),
            _ => BigInt::from(v),
        }
    }

    pub fn primes(&self) -> Vec<BigUint> {
        self.factors.keys().cloned().collect()
    }

    /// `2^2 * 3^2 * 7^2` style rendering.
    pub fn render(&self) -> String {
        if self.sign == 0 {
            return "0".into();
        }
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, &e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        if let Some(c) = &self.unfactored_cofactor {
            parts.push(format!("[{c}]"));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        let body = parts.join(" * ");
        if self.sign < 0 {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl Serialize for FactoredInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            prime: String,
            exponent: u32,
        }
        #[derive(Serialize)]
        struct Repr {
            sign: i8,
            factors: Vec<Entry>,
            unfactored_cofactor: Option<String>,
            certified: bool,
        }
        Repr {
            sign: self.sign,
            factors: self
                .factors
                .iter()
                .map(|(p, &e)| Entry {
                    prime: p.to_string(),
                    exponent: e,
                })
                .collect(),
            unfactored_cofactor: self.unfactored_cofactor.as_ref().map(|c| c.to_string()),
            certified: self.certified,
        }
        .serialize(s)
    }
}

/// Primes up to one million, computed once.
pub fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(1_000_000))
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut r) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'outer: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin with fixed bases; a proof only below 2^64.
fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut r = 0;
    while d.is_even() {
        d >>= 1;
        r += 1;
    }
    'outer: for &a in MR_BASES.iter().chain(&[41u64, 43, 47, 53, 59, 61, 67, 71]) {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..r {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho with deterministic seeds.
fn rho_split(n: &BigUint, budget: &FactorBudget) -> Option<BigUint> {
    let one = BigUint::one();
    for seed in 1..=budget.rho_seeds {
        let c = BigUint::from(seed);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(seed + 1);
        let mut x;
        let mut g = one.clone();
        let mut r: u64 = 1;
        let mut q = one.clone();
        let mut ys = y.clone();
        let mut steps = 0u64;
        let block = 64u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..block.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += block;
            }
            steps += r;
            r *= 2;
            if steps > budget.rho_iterations {
                break;
            }
        }
        if &g == n {
            // backtrack one step at a time
            loop {
                ys = f(&ys);
                let diff = if ys > y { &ys - &y } else { &y - &ys };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != one && &g != n {
            return Some(g);
        }
    }
    None
}

pub fn factor_integer(v: &BigInt, budget: &FactorBudget) -> FactoredInt {
    let mut out = FactoredInt {
        sign: match v.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        },
        factors: BTreeMap::new(),
        unfactored_cofactor: None,
        certified: true,
    };
    if v.is_zero() {
        return out;
    }
    let mut n = v.magnitude().clone();
    for &p in small_primes() {
        if p > budget.trial_limit {
            break;
        }
        if BigUint::from(p * p) > n {
            break;
        }
        let pb = BigUint::from(p);
        let mut e = 0;
        while (&n % p).is_zero() {
            n /= &pb;
            e += 1;
        }
        if e > 0 {
            out.factors.insert(pb, e);
        }
    }
    if n.is_one() {
        return out;
    }
    let limit = BigUint::from(budget.trial_limit.min(1_000_000));
    if n < &limit * &limit {
        *out.factors.entry(n).or_insert(0) += 1;
        return out;
    }
    let mut stack = vec![n];
    let mut cofactor = BigUint::one();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            if m.bits() > 64 {
                out.certified = false;
            }
            *out.factors.entry(m).or_insert(0) += 1;
            continue;
        }
        match rho_split(&m, budget) {
            Some(d) => {
                let e = &m / &d;
                stack.push(d);
                stack.push(e);
            }
            None => cofactor *= m,
        }
    }
    if !cofactor.is_one() {
        out.unfactored_cofactor = Some(cofactor);
    }
    out
}

/// Primes `p` admitting `m >= 1` with `max(a,b,c) <= p^m <= s+1`.
pub fn forced_primes(p: &AciParams) -> Result<Vec<u64>> {
    let h = p.hexagon()?;
    let lo = p.pure().into_iter().max().unwrap();
    let hi = h.s + 1;
    let mut out = Vec::new();
    if hi < 2 {
        return Ok(out);
    }
    for q in primes_up_to(hi as u64) {
        let mut pw = q as i64;
        loop {
            if pw >= lo && pw <= hi {
                out.push(q);
                break;
            }
            if pw > hi / q as i64 {
                break;
            }
            pw *= q as i64;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlpReport {
    pub det_n: BigInt,
    pub det_z: BigInt,
    pub wlp_char0: bool,
    pub bad_primes: Vec<BigUint>,
    pub forced_primes: Vec<u64>,
    pub always_fails: bool,
    pub factorization: FactoredInt,
}

impl WlpReport {
    /// WLP in the given characteristic (0 for characteristic zero).
    pub fn wlp_in_char(&self, characteristic: u64) -> bool {
        if characteristic == 0 {
            self.wlp_char0
        } else {
            !(&self.det_n % BigInt::from(characteristic)).is_zero()
        }
    }
}

impl Serialize for WlpReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            det_n: String,
            det_z: String,
            wlp_char0: bool,
            bad_primes: Vec<String>,
            forced_primes: &'a [u64],
            always_fails: bool,
            factorization: &'a FactoredInt,
        }
        Repr {
            det_n: self.det_n.to_string(),
            det_z: self.det_z.to_string(),
            wlp_char0: self.wlp_char0,
            bad_primes: self.bad_primes.iter().map(|p| p.to_string()).collect(),
            forced_primes: &self.forced_primes,
            always_fails: self.always_fails,
            factorization: &self.factorization,
        }
        .serialize(s)
    }
}

pub fn wlp_report(p: &AciParams) -> Result<WlpReport> {
    let det_n = det_exact(&build_n(p)?)?;
    let det_z = det_exact(&build_z(p)?)?;
    if det_n.abs() != det_z.abs() {
        return Err(Error::Invariant(format!(
            "|det N| = {} but |det Z| = {} for {p}",
            det_n.abs(),
            det_z.abs()
        )));
    }
    let factorization = factor_integer(&det_n, &FactorBudget::default());
    let bad_primes = factorization.primes();
    let forced = forced_primes(p)?;
    if !det_n.is_zero() {
        for &q in &forced {
            if !(&det_n % BigInt::from(q)).is_zero() {
                return Err(Error::Invariant(format!(
                    "forced prime {q} does not divide det N = {det_n} for {p}"
                )));
            }
        }
    }
    Ok(WlpReport {
        wlp_char0: !det_n.is_zero(),
        always_fails: det_n.is_zero(),
        det_n,
        det_z,
        bad_primes,
        forced_primes: forced,
        factorization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn cofactor_det(rows: &[Vec<i64>]) -> i64 {
        let n = rows.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * rows[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    fn brute_permanent(rows: &[Vec<i64>]) -> i64 {
        fn go(rows: &[Vec<i64>], i: usize, used: &mut Vec<bool>) -> i64 {
            if i == rows.len() {
                return 1;
            }
            let mut t = 0;
            for j in 0..rows.len() {
                if !used[j] && rows[i][j] != 0 {
                    used[j] = true;
                    t += rows[i][j] * go(rows, i + 1, used);
                    used[j] = false;
                }
            }
            t
        }
        go(rows, 0, &mut vec![false; rows.len()])
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            det_exact(&m(&[vec![20, 15, 6], vec![3, 1, 0], vec![3, 3, 1]])).unwrap(),
            BigInt::from(11)
        );
        assert_eq!(det_exact(&IntMatrix::identity(5)).unwrap(), BigInt::one());
        let z = m(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(det_exact(&z).unwrap(), BigInt::from(-2));
        assert!(det_exact(&m(&[vec![1, 2, 3]])).is_err());
        assert_eq!(
            det_exact(&m(&[vec![0, 1], vec![1, 0]])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            det_exact(&m(&[vec![0, 1], vec![0, 3]])).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn permanent_examples() {
        let z = m(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(permanent_exact(&z, 28).unwrap(), Some(BigInt::from(2)));
        let perm = m(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(permanent_exact(&perm, 28).unwrap(), Some(BigInt::one()));
        assert_eq!(permanent_exact(&IntMatrix::identity(4), 3).unwrap(), None);
    }

    #[test]
    fn rank_examples() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank_rational(&a), 2);
        let b = m(&[vec![1, 1], vec![1, 3]]);
        assert_eq!(rank_rational(&b), 2);
        assert_eq!(rank_mod_p(&b, 2), 1);
        assert_eq!(rank_mod_p(&b, 3), 2);
    }

    #[test]
    fn factor_examples() {
        let b = FactorBudget::default();
        let f = factor_integer(&BigInt::from(1764), &b);
        assert_eq!(f.render(), "2^2 * 3^2 * 7^2");
        let f = factor_integer(&BigInt::from(-5083), &b);
        assert_eq!(f.render(), "-13 * 17 * 23");
        assert_eq!(f.value(), BigInt::from(-5083));
        assert_eq!(factor_integer(&BigInt::zero(), &b).sign, 0);
        assert_eq!(factor_integer(&BigInt::one(), &b).render(), "1");
        // product of two primes above the trial limit
        let v = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let f = factor_integer(&v, &b);
        assert_eq!(f.render(), "1000003 * 1000033");
        let big = BigInt::from(18446744073709551557u64) * BigInt::from(1_000_000_007u64) * 4;
        let f = factor_integer(&big, &b);
        assert_eq!(f.value(), big);
        assert!(f.unfactored_cofactor.is_none());
        assert_eq!(f.factors.len(), 3);
    }

    #[test]
    fn tiny_budget_leaves_cofactor() {
        let b = FactorBudget {
            trial_limit: 10,
            rho_iterations: 0,
            rho_seeds: 0,
        };
        let v = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let f = factor_integer(&v, &b);
        assert!(f.unfactored_cofactor.is_some());
        assert_eq!(f.value(), v);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(20554657));
        assert!(!is_prime_u64(3215031751));
        assert!(is_prime_u64(18446744073709551557));
    }

    #[test]
    fn forced_prime_scan() {
        let p = AciParams::new(20, 20, 20, 3, 8, 13).unwrap();
        assert_eq!(forced_primes(&p).unwrap(), vec![3, 5, 23]);
        let p = AciParams::new(4, 6, 6, 1, 1, 3).unwrap();
        assert!(forced_primes(&p).unwrap().is_empty());
    }

    #[test]
    fn report_examples() {
        let r = wlp_report(&AciParams::new(4, 6, 6, 1, 1, 3).unwrap()).unwrap();
        assert!(r.wlp_char0);
        assert_eq!(r.bad_primes, vec![BigUint::from(11u8)]);
        assert!(!r.wlp_in_char(11) && r.wlp_in_char(7));
        let r = wlp_report(&AciParams::new(5, 5, 3, 2, 2, 1).unwrap()).unwrap();
        assert!(r.always_fails);
    }

    proptest::proptest! {
        #[test]
        fn det_and_permanent_match_oracles(v in proptest::collection::vec(-4i64..5, 16), n in 1usize..5) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| v[i * 4..i * 4 + n].to_vec()).collect();
            let a = m(&rows);
            proptest::prop_assert_eq!(det_exact(&a).unwrap(), BigInt::from(cofactor_det(&rows)));
            proptest::prop_assert_eq!(permanent_exact(&a, 28).unwrap().unwrap(), BigInt::from(brute_permanent(&rows)));
            proptest::prop_assert_eq!(ryser_merged(&a, |x| x.clone()), BigInt::from(brute_permanent(&rows)));
            let full = det_exact(&a).unwrap() != BigInt::zero();
            proptest::prop_assert_eq!(rank_rational(&a) == n, full);
        }

        #[test]
        fn factorization_reproduces(v in 1i64..10_000_000_000) {
            let f = factor_integer(&BigInt::from(v), &FactorBudget::default());
            proptest::prop_assert_eq!(f.value(), BigInt::from(v));
            for p in f.factors.keys() {
                proptest::prop_assert!(is_prime_u64(p.to_u64().unwrap()));
            }
        }
    }
}
