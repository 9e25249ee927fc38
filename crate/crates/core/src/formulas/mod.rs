//! Hyperfactorial product formulas and closed determinant evaluations.

mod hyper;
mod poly;

pub use hyper::{
    hyper_even, hyper_even_closed, hyper_odd, hyperfactorial, mac, mac_quotient, HyperQuotient,
    PrimeExponents,
};
pub use poly::{IntPolynomial, LinearFactors};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::det_exact;
use crate::matrices::{binomial, build_n, IntMatrix};
use crate::params::{classify_puncture, AciParams, RELABELINGS};

/// `f_{a,b}(c)` as a product of linear factors in `c`. The two indices are
/// symmetric, so they are sorted first.
pub fn f_poly(a: i64, b: i64) -> LinearFactors {
    let (a, b) = (a.min(b), a.max(b));
    let mut f = Vec::new();
    for i in 1..=a {
        f.push((i, i as u32));
    }
    for i in 1..=b - a {
        f.push((a + i, a as u32));
    }
    for i in 1..=a {
        f.push((b + i, (a - i) as u32));
    }
    LinearFactors::from_shifts(BigRational::one(), f)
}

/// The factors of `f_{a,b}` with even shift.
pub fn f_even(a: i64, b: i64) -> LinearFactors {
    let (a, b) = (a.min(b), a.max(b));
    let (ha, hb) = (a / 2, b / 2);
    let mut f = Vec::new();
    for i in 1..=ha {
        f.push((2 * i, (2 * i) as u32));
    }
    for i in 1..=hb - ha {
        f.push((2 * ha + 2 * i, a as u32));
    }
    for i in 1..=ha {
        f.push((2 * hb + 2 * i, (b - 2 * hb + a - 2 * i) as u32));
    }
    LinearFactors::from_shifts(BigRational::one(), f)
}

/// `f_{a,b} / f^e_{a,b}`.
pub fn f_odd(a: i64, b: i64) -> Result<LinearFactors> {
    f_poly(a, b)
        .divide(&f_even(a, b))
        .ok_or_else(|| Error::Invariant(format!("even part does not divide f_({a},{b})")))
}

/// Determinant of the two-block binomial matrix with columns shifted by `q`
/// (first `m` columns) and `q+r` (the rest), rows taken from row `p` of
/// Pascal's triangle.
pub fn split_binom_det(p: i64, q: i64, r: i64, m: i64, n: i64) -> Result<BigInt> {
    if p < 0 || q < 0 || r < 0 || m < 1 || m > n {
        return Err(Error::InvalidInput(format!(
            "need p,q,r >= 0 and 1 <= m <= n, got ({p},{q},{r},{m},{n})"
        )));
    }
    hyper::mac_quotient(m, q, r)
        .times_quotient(&hyper::mac_quotient(n - m, p - q - r, r))
        .times(q + r)
        .times(p - q)
        .times(n + r)
        .times(n + p)
        .over(n + p - q)
        .over(n + q + r)
        .over(p)
        .over(r)
        .integer()
}

pub fn split_binom_matrix(p: i64, q: i64, r: i64, m: i64, n: i64) -> IntMatrix {
    IntMatrix::from_fn(n as usize, n as usize, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        if j <= m {
            binomial(p, q + j - i)
        } else {
            binomial(p, q + r + j - i)
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    MZero,
    CZero,
    CMaximal,
    GammaZero,
    SymmetricOddZero,
    AxisCentralAllOddZero,
    DetNFamily,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedDetResult {
    /// Absent when no case applies.
    pub value: Option<BigInt>,
    pub case_tag: CaseTag,
    /// Axis permutation under which the case fired.
    pub relabeling: [usize; 3],
    /// False when only the absolute value is known.
    pub signed: bool,
}

impl Serialize for ClosedDetResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            value: Option<String>,
            case_tag: CaseTag,
            relabeling: &'a [usize; 3],
            signed: bool,
        }
        Repr {
            value: self.value.as_ref().map(|v| v.to_string()),
            case_tag: self.case_tag,
            relabeling: &self.relabeling,
            signed: self.signed,
        }
        .serialize(s)
    }
}

fn gamma_zero_value(p: &AciParams) -> Result<BigInt> {
    let h = p.hexagon()?;
    let (aa, bb, cc, m) = (h.a_side, h.b_side, h.c_side, h.puncture);
    hyper::mac_quotient(p.beta() - aa, aa, m)
        .times_quotient(&hyper::mac_quotient(p.alpha() - bb, bb, m))
        .times(aa + m)
        .times(bb + m)
        .times(cc + m)
        .times(aa + bb + cc + m)
        .over(p.a())
        .over(p.b())
        .over(p.c())
        .over(m)
        .integer()
}

fn try_case(q: &AciParams, tag: CaseTag) -> Result<Option<(BigInt, bool)>> {
    let h = q.hexagon()?;
    let (aa, bb, cc, m) = (h.a_side, h.b_side, h.c_side, h.puncture);
    let [a, b, c] = q.pure();
    let [alpha, beta, gamma] = q.mixed();
    Ok(match tag {
        CaseTag::MZero if m == 0 => Some((mac(aa, bb, cc)?, true)),
        CaseTag::DetNFamily
            if b == beta + 2 && c == a + beta + 1 && a - alpha >= 1 && gamma == a - alpha =>
        {
            Some((BigInt::from(gamma), true))
        }
        CaseTag::CZero if cc == 0 => Some((mac(m, aa - beta, bb - alpha)?, true)),
        CaseTag::CMaximal if cc == alpha + beta => {
            // the k = beta admissible permutation carries sign (-1)^(M alpha)
            let v = mac(aa, bb, cc + m)?;
            Some((if (m * alpha) % 2 == 1 { -v } else { v }, true))
        }
        CaseTag::GammaZero if gamma == 0 => {
            // only |det| is established; the sign (-1)^(M(alpha+B)) is observed
            let v = gamma_zero_value(q)?;
            Some((if (m * (alpha + bb)) % 2 == 1 { -v } else { v }, false))
        }
        CaseTag::SymmetricOddZero if a == b && alpha == beta && c % 2 == 1 && gamma % 2 == 1 => {
            Some((BigInt::zero(), true))
        }
        CaseTag::AxisCentralAllOddZero if !q.has_zero_mixed() && m % 2 == 1 => {
            let same = a % 2 == b % 2 && b % 2 == c % 2;
            let s2 = h.s + 2;
            if same && a % 2 != s2 % 2 && classify_puncture(q)?.axis_central {
                Some((BigInt::zero(), true))
            } else {
                None
            }
        }
        _ => None,
    })
}

/// Whether `det N` changes sign between `p` and `p.relabel(perm)`.
///
/// Swapping the first two axes flips the sign iff `C*M` is odd, swapping the
/// last two iff `alpha*M` is odd; every relabeling is a word of length at
/// most three in those two swaps.
pub fn relabel_flips_sign(p: &AciParams, perm: [usize; 3]) -> Result<bool> {
    const S01: [usize; 3] = [1, 0, 2];
    const S12: [usize; 3] = [0, 2, 1];
    let words: [&[[usize; 3]]; 6] = [
        &[],
        &[S01],
        &[S01, S12, S01],
        &[S12],
        &[S01, S12],
        &[S12, S01],
    ];
    let compose = |acc: [usize; 3], t: [usize; 3]| [acc[t[0]], acc[t[1]], acc[t[2]]];
    for word in words {
        if word.iter().fold([0, 1, 2], |acc, &t| compose(acc, t)) != perm {
            continue;
        }
        let mut q = *p;
        let mut flip = false;
        for &t in word {
            let h = q.hexagon()?;
            let odd = if t == S01 {
                h.c_side * h.puncture
            } else {
                q.alpha() * h.puncture
            };
            flip ^= odd.rem_euclid(2) == 1;
            q = q.relabel(t);
        }
        return Ok(flip);
    }
    Err(Error::InvalidInput(format!(
        "{perm:?} is not a permutation"
    )))
}

const CASE_ORDER: [CaseTag; 7] = [
    CaseTag::MZero,
    CaseTag::DetNFamily,
    CaseTag::CZero,
    CaseTag::CMaximal,
    CaseTag::GammaZero,
    CaseTag::SymmetricOddZero,
    CaseTag::AxisCentralAllOddZero,
];

/// First matching closed evaluation, trying relabelings in the fixed order
/// and, for each, the cases in [`CASE_ORDER`].
pub fn closed_det(p: &AciParams) -> Result<ClosedDetResult> {
    p.hexagon()?;
    for perm in RELABELINGS {
        let q = p.relabel(perm);
        for tag in CASE_ORDER {
            if let Some((value, signed)) = try_case(&q, tag)? {
                let value = if relabel_flips_sign(p, perm)? {
                    -value
                } else {
                    value
                };
                return Ok(ClosedDetResult {
                    value: Some(value),
                    case_tag: tag,
                    relabeling: perm,
                    signed,
                });
            }
        }
    }
    Ok(ClosedDetResult {
        value: None,
        case_tag: CaseTag::None,
        relabeling: RELABELINGS[0],
        signed: false,
    })
}

/// Conjectured determinant of a mirror-symmetric region (`a = b`,
/// `alpha = beta`, `c` or `gamma` even). The value is a rational number; a
/// non-integer would itself refute the conjecture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureValue {
    pub value: BigRational,
}

impl ConjectureValue {
    pub fn integer(&self) -> Option<BigInt> {
        self.value.is_integer().then(|| self.value.to_integer())
    }
}

pub fn symmetry_conjecture(p: &AciParams) -> Result<ConjectureValue> {
    let h = p.hexagon()?;
    if p.a() != p.b() || p.alpha() != p.beta() {
        return Err(Error::Precondition(format!(
            "symmetric formula needs a = b and alpha = beta, got {p}"
        )));
    }
    if p.c() % 2 == 1 && p.gamma() % 2 == 1 {
        return Err(Error::Precondition(format!(
            "symmetric formula needs c or gamma even, got {p}"
        )));
    }
    let (aa, cc, m, g) = (h.a_side, h.c_side, h.puncture, p.gamma());
    let fl = |x: i64| x.div_euclid(2);
    let cl = |x: i64| -(-x).div_euclid(2);
    let cg = (cc + g) / 2;
    let cmg = (cc - g) / 2;
    let mut q = HyperQuotient::new()
        .times(m + cc)
        .times(m + g)
        .times(m + aa + fl(cc))
        .times(m + aa + cl(cc))
        .times(m + 2 * aa + cc)
        .over(m + 2 * aa)
        .over(m + aa + cc)
        .over(m + aa + cc)
        .over(m + cg)
        .over(m + cg);
    for up in [false, true] {
        let halves = |x: i64| if up { cl(x) } else { fl(x) };
        let half = halves(m);
        q = q
            .times(half)
            .times(half + aa)
            .times(half + cg)
            .times(half + aa + cmg)
            .over(halves(m + cc))
            .over(halves(m + g))
            .over(halves(m + cc) + aa)
            .over(halves(m - g) + aa);
    }
    q = q
        .times(aa - fl(g))
        .times(fl(cc))
        .times(fl(g))
        .times(aa - cl(g))
        .times(cl(cc))
        .times(cl(g))
        .over(g)
        .over(aa + cmg)
        .over(aa + cmg);
    let mut value = q.rational()?;
    if (m * cl(cc)) % 2 == 1 {
        value = -value;
    }
    Ok(ConjectureValue { value })
}

/// The worked symmetric example: the determinant for
/// `(14+M, 14+M, 16+M, 10, 10, 2)` as a polynomial in `M`, with the leading
/// constant exactly as displayed in the literature.
pub fn symmetry_example_polynomial() -> LinearFactors {
    let den = BigInt::from(2).pow(34u32)
        * BigInt::from(3).pow(16u32)
        * BigInt::from(5).pow(6u32)
        * BigInt::from(7).pow(6u32);
    LinearFactors::from_shifts(
        BigRational::new(BigInt::from(-1), den),
        [
            (1, 1),
            (3, 3),
            (4, 2),
            (5, 3),
            (7, 1),
            (12, 2),
            (13, 4),
            (14, 6),
            (15, 5),
            (16, 6),
            (17, 3),
            (18, 4),
            (19, 1),
            (20, 2),
        ],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn matches(self, t: i64) -> bool {
        (t.rem_euclid(2) == 1) == (self == Parity::Odd)
    }
}

/// `det N` along the family `pure + t, mixed` for `t` of one parity, as an
/// interpolated polynomial in `t`.
#[derive(Debug, Clone)]
pub struct DetPolynomial {
    pub parity: Parity,
    pub samples: Vec<(i64, BigInt)>,
    pub checks: Vec<(i64, BigInt)>,
    pub polynomial: IntPolynomial,
    pub factored: LinearFactors,
}

/// Family member at shift `t`, if it is a valid hexagonal sextuple.
pub fn family_member(pure: [i64; 3], mixed: [i64; 3], t: i64) -> Option<AciParams> {
    let q = AciParams::from_arrays(pure.map(|v| v + t), mixed).ok()?;
    q.hexagon().ok().map(|_| q)
}

pub fn det_poly_interpolate(
    pure: [i64; 3],
    mixed: [i64; 3],
    parity: Parity,
    degree_bound: usize,
    extra_checks: usize,
) -> Result<DetPolynomial> {
    let need = degree_bound + 1 + extra_checks;
    let mut points = Vec::new();
    let mut t = 0;
    while points.len() < need {
        if t > 4 * need as i64 + 200 {
            return Err(Error::InvalidInput(format!(
                "family {pure:?}+t, {mixed:?} has too few valid members of {parity:?} parity"
            )));
        }
        if parity.matches(t) {
            if let Some(q) = family_member(pure, mixed, t) {
                points.push((t, det_exact(&build_n(&q)?)?));
            }
        }
        t += 1;
    }
    let checks = points.split_off(degree_bound + 1);
    let rat = |v: i64| BigRational::from_integer(BigInt::from(v));
    let pts: Vec<_> = points
        .iter()
        .map(|(t, d)| (rat(*t), BigRational::from_integer(d.clone())))
        .collect();
    let polynomial = IntPolynomial::lagrange(&pts);
    for (t, d) in &checks {
        if polynomial.eval_int(*t) != BigRational::from_integer(d.clone()) {
            return Err(Error::Precondition(format!(
                "degree bound {degree_bound} too small: held-out sample t={t} disagrees"
            )));
        }
    }
    let factored = polynomial.integer_root_factors(4 * need as i64 + 200);
    Ok(DetPolynomial {
        parity,
        samples: points,
        checks,
        polynomial,
        factored,
    })
}
