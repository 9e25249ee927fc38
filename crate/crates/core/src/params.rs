//! Parameter sextuples, their derived invariants and the correspondence with
//! punctured hexagons.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// Exponents of the ideal `(x^a, y^b, z^c, x^alpha y^beta z^gamma)`.
///
/// Stored as per-axis arrays so that relabeling the variables is a
/// permutation of indices. Axis 0 is `x`, 1 is `y`, 2 is `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AciParams {
    pure: [i64; 3],
    mixed: [i64; 3],
}

/// The six permutations of the three axes in the fixed dispatch order:
/// identity, the three transpositions, then the two 3-cycles.
///
/// A relabeling `p` sends axis `i` of the new sextuple to axis `p[i]` of the
/// old one.
pub const RELABELINGS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
];

impl AciParams {
    pub fn new(a: i64, b: i64, c: i64, alpha: i64, beta: i64, gamma: i64) -> Result<Self> {
        Self::from_arrays([a, b, c], [alpha, beta, gamma])
    }

    pub fn from_arrays(pure: [i64; 3], mixed: [i64; 3]) -> Result<Self> {
        for i in 0..3 {
            if pure[i] < 1 {
                return Err(Error::InvalidInput(format!(
                    "pure exponents must be positive, got {pure:?}"
                )));
            }
            if mixed[i] < 0 || mixed[i] >= pure[i] {
                return Err(Error::InvalidInput(format!(
                    "mixed exponents must satisfy 0 <= mixed < pure, got pure {pure:?} mixed {mixed:?}"
                )));
            }
        }
        if mixed.iter().filter(|&&m| m == 0).count() > 1 {
            return Err(Error::InvalidInput(format!(
                "at most one mixed exponent may be zero, got {mixed:?}"
            )));
        }
        Ok(AciParams { pure, mixed })
    }

    pub fn from_slice(v: &[i64]) -> Result<Self> {
        if v.len() != 6 {
            return Err(Error::InvalidInput(format!(
                "expected six exponents, got {}",
                v.len()
            )));
        }
        Self::new(v[0], v[1], v[2], v[3], v[4], v[5])
    }

    pub fn a(&self) -> i64 {
        self.pure[0]
    }
    pub fn b(&self) -> i64 {
        self.pure[1]
    }
    pub fn c(&self) -> i64 {
        self.pure[2]
    }
    pub fn alpha(&self) -> i64 {
        self.mixed[0]
    }
    pub fn beta(&self) -> i64 {
        self.mixed[1]
    }
    pub fn gamma(&self) -> i64 {
        self.mixed[2]
    }
    pub fn pure(&self) -> [i64; 3] {
        self.pure
    }
    pub fn mixed(&self) -> [i64; 3] {
        self.mixed
    }

    pub fn as_array(&self) -> [i64; 6] {
        let [a, b, c] = self.pure;
        let [x, y, z] = self.mixed;
        [a, b, c, x, y, z]
    }

    pub fn triple_sum(&self) -> i64 {
        self.pure.iter().sum::<i64>() + self.mixed.iter().sum::<i64>()
    }

    pub fn mixed_degree(&self) -> i64 {
        self.mixed.iter().sum()
    }

    /// Permute the axes; `perm[i]` names the old axis that becomes axis `i`.
    pub fn relabel(&self, perm: [usize; 3]) -> AciParams {
        AciParams {
            pure: perm.map(|i| self.pure[i]),
            mixed: perm.map(|i| self.mixed[i]),
        }
    }

    /// True when some mixed exponent is zero (Cohen-Macaulay type 2).
    pub fn has_zero_mixed(&self) -> bool {
        self.mixed.contains(&0)
    }

    pub fn stats(&self) -> DerivedStats {
        derive_stats(self)
    }

    /// Integer invariants, available only for hexagonal parameters.
    pub fn hexagon(&self) -> Result<Hexagon> {
        let t = self.triple_sum();
        let st = derive_stats(self);
        if !st.hexagonal {
            return Err(Error::NotHexagonal(format!(
                "{self} (triple sum {t}, semistable {})",
                st.semistable
            )));
        }
        let s2 = t / 3;
        Ok(Hexagon {
            params: *self,
            s: s2 - 2,
            a_side: s2 - self.a(),
            b_side: s2 - self.b(),
            c_side: s2 - self.c(),
            puncture: s2 - self.mixed_degree(),
        })
    }
}

impl fmt::Display for AciParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, x, y, z] = self.as_array();
        write!(f, "({a},{b},{c},{x},{y},{z})")
    }
}

/// Exact invariants of a sextuple. Side lengths are rational in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedStats {
    pub triple_sum: i64,
    pub s_plus_2: Ratio<i64>,
    pub a_side: Ratio<i64>,
    pub b_side: Ratio<i64>,
    pub c_side: Ratio<i64>,
    pub puncture: Ratio<i64>,
    pub semistable: bool,
    pub hexagonal: bool,
}

/// Integral values become JSON integers, others a `"p/q"` string.
fn ratio_json(r: &Ratio<i64>) -> serde_json::Value {
    if r.is_integer() {
        serde_json::Value::from(r.to_integer())
    } else {
        serde_json::Value::from(r.to_string())
    }
}

impl Serialize for DerivedStats {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("DerivedStats", 8)?;
        st.serialize_field("triple_sum", &self.triple_sum)?;
        st.serialize_field("s_plus_2", &ratio_json(&self.s_plus_2))?;
        st.serialize_field("A", &ratio_json(&self.a_side))?;
        st.serialize_field("B", &ratio_json(&self.b_side))?;
        st.serialize_field("C", &ratio_json(&self.c_side))?;
        st.serialize_field("M", &ratio_json(&self.puncture))?;
        st.serialize_field("semistable", &self.semistable)?;
        st.serialize_field("hexagonal", &self.hexagonal)?;
        st.end()
    }
}

pub fn derive_stats(p: &AciParams) -> DerivedStats {
    let t = p.triple_sum();
    let s2 = Ratio::new(t, 3);
    let side = |v: i64| s2 - Ratio::from_integer(v);
    let (a_side, b_side, c_side) = (side(p.a()), side(p.b()), side(p.c()));
    let puncture = side(p.mixed_degree());
    let z = Ratio::from_integer(0);
    let r = Ratio::from_integer;
    let semistable = puncture >= z
        && a_side >= z
        && a_side <= r(p.beta() + p.gamma())
        && b_side >= z
        && b_side <= r(p.alpha() + p.gamma())
        && c_side >= z
        && c_side <= r(p.alpha() + p.beta());
    DerivedStats {
        triple_sum: t,
        s_plus_2: s2,
        a_side,
        b_side,
        c_side,
        puncture,
        semistable,
        hexagonal: semistable && t % 3 == 0,
    }
}

/// Integer invariants of a hexagonal sextuple: peak degree `s` and the side
/// lengths of the punctured hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hexagon {
    pub params: AciParams,
    pub s: i64,
    pub a_side: i64,
    pub b_side: i64,
    pub c_side: i64,
    pub puncture: i64,
}

impl Hexagon {
    pub fn s_plus_2(&self) -> i64 {
        self.s + 2
    }
    /// Size of the binomial matrix: paths start on side C and on the puncture.
    pub fn path_count(&self) -> usize {
        (self.c_side + self.puncture) as usize
    }
    pub fn sides(&self) -> [i64; 3] {
        [self.a_side, self.b_side, self.c_side]
    }
}

/// Socle data of the quotient, read off from the minimal free resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleInfo {
    pub cm_type: u8,
    pub socle_degrees: Vec<i64>,
    pub level: bool,
    pub resolution_n: u8,
}

pub fn socle_info(p: &AciParams) -> SocleInfo {
    let total: i64 = p.pure.iter().sum();
    let mut degrees: Vec<i64> = (0..3)
        .filter(|&i| p.mixed[i] > 0)
        .map(|i| total - p.pure[i] + p.mixed[i] - 3)
        .collect();
    degrees.sort_unstable();
    let level = degrees.windows(2).all(|w| w[0] == w[1]);
    let zero = p.has_zero_mixed();
    SocleInfo {
        cm_type: if zero { 2 } else { 3 },
        socle_degrees: degrees,
        level,
        resolution_n: if zero { 0 } else { 1 },
    }
}

/// Inverse of the side-length map: builds the sextuple whose punctured
/// hexagon has sides `A, B, C`, puncture `M` and puncture offsets `alpha, beta`.
pub fn hexagon_to_params(
    a_side: i64,
    b_side: i64,
    c_side: i64,
    puncture: i64,
    alpha: i64,
    beta: i64,
) -> Result<AciParams> {
    if [a_side, b_side, c_side, puncture, alpha, beta]
        .iter()
        .any(|&v| v < 0)
    {
        return Err(Error::InvalidInput(
            "side lengths and offsets must be non-negative".into(),
        ));
    }
    let gamma = a_side + b_side + c_side - alpha - beta;
    if gamma < 0 {
        return Err(Error::InvalidInput(format!(
            "offsets exceed A+B+C: gamma would be {gamma}"
        )));
    }
    let p = AciParams::new(
        b_side + c_side + puncture,
        a_side + c_side + puncture,
        a_side + b_side + puncture,
        alpha,
        beta,
        gamma,
    )?;
    p.hexagon()?;
    Ok(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PunctureClass {
    pub axis_central: bool,
    pub gravity_central: bool,
    pub gravity_t: Option<i64>,
}

pub fn classify_puncture(p: &AciParams) -> Result<PunctureClass> {
    let h = p.hexagon()?;
    if p.has_zero_mixed() {
        return Err(Error::Precondition(format!(
            "puncture classification needs all mixed exponents positive, got {p}"
        )));
    }
    let t = p.a() - p.alpha();
    let gravity_central = p.b() - p.beta() == t && p.c() - p.gamma() == t;
    let m = h.puncture;
    let axis_central = RELABELINGS.iter().any(|&perm| {
        let q = p.relabel(perm);
        let [a, b, c] = q.pure;
        let [x, y, z] = q.mixed;
        let same = a == 2 * x + m && b == 2 * y + m && c == 2 * z + m;
        let shifted = a == 2 * x + m - 1 && b == 2 * y + m + 1 && c == 2 * z + m;
        same || shifted
    });
    Ok(PunctureClass {
        axis_central,
        gravity_central,
        gravity_t: gravity_central.then_some(t),
    })
}

/// Embed the complete intersection `(x^a, y^b, z^c)` as an almost complete
/// intersection with the same twin peaks and no puncture.
pub fn ci_embed(a: i64, b: i64, c: i64) -> Result<AciParams> {
    if (a + b + c) % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "a+b+c must be even, got {}",
            a + b + c
        )));
    }
    let alpha = (-a + b + c) / 2;
    let beta = (a - b + c) / 2;
    let gamma = (a + b - c) / 2;
    if alpha < 0 || beta < 0 || gamma < 0 {
        return Err(Error::InvalidInput(format!(
            "({a},{b},{c}) violates the triangle inequalities"
        )));
    }
    AciParams::new(a, b, c, alpha, beta, gamma)
}
