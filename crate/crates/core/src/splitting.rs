//! Generic splitting type of the syzygy bundle, regularity of the ideal
//! restricted to a general line, and jumping lines.
//!
//! Restricting to `x+y+z = 0` turns `I` into
//! `J = (x^a, y^b, (x+y)^c, x^alpha y^beta (x+y)^gamma)` in two variables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{det_exact, is_prime_u64, rank_mod_p, rank_rational};
use crate::matrices::{binomial, build_n, build_z, IntMatrix};
use crate::params::AciParams;

/// Splitting type `(p, q, r)`, sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SplittingType {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    /// Set in positive characteristic, where the formulas are only known
    /// to hold in characteristic zero.
    pub conditional: bool,
}

impl SplittingType {
    pub fn new(mut v: [i64; 3], conditional: bool) -> Self {
        v.sort_unstable();
        SplittingType {
            p: v[0],
            q: v[1],
            r: v[2],
            conditional,
        }
    }

    pub fn triple(&self) -> [i64; 3] {
        [self.p, self.q, self.r]
    }

    pub fn sum(&self) -> i64 {
        self.p + self.q + self.r
    }

    /// `reg J`, one less than the largest entry.
    pub fn regularity(&self) -> i64 {
        self.r - 1
    }
}

impl std::fmt::Display for SplittingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.r)
    }
}

fn half_up(n: i64) -> i64 {
    n.div_euclid(2) + n.rem_euclid(2)
}

/// `reg (x^a, y^b, (x+y)^g)` for `1 <= a <= b`; `None` for the unit ideal.
fn reg_three_powers(a: i64, b: i64, g: i64) -> Option<i64> {
    match g {
        0 => None,
        _ if g <= b - a => Some(a + g - 1),
        _ => Some(half_up(a + b + g) - 1),
    }
}

/// `reg (x^a, y^b, x^alpha y^beta (x+y)^gamma)` in two variables.
///
/// Swaps the variables so that `a - alpha <= b - beta`. The value comes from
/// the colon sequence by `x^alpha y^beta`, which also covers the inputs with
/// `alpha = gamma = 0` that the usual three-way case split leaves out.
pub fn reg_two_var(a: i64, b: i64, alpha: i64, beta: i64, gamma: i64) -> Result<i64> {
    if a < 1 || b < 1 || alpha < 0 || beta < 0 || gamma < 0 || alpha >= a || beta >= b {
        return Err(Error::InvalidInput(format!(
            "need 0 <= alpha < a, 0 <= beta < b, gamma >= 0; got ({a},{b},{alpha},{beta},{gamma})"
        )));
    }
    if alpha + beta + gamma >= a + b {
        return Err(Error::Precondition(format!(
            "alpha+beta+gamma = {} must be below a+b = {}",
            alpha + beta + gamma,
            a + b
        )));
    }
    let (a, b, alpha, beta) = if a - alpha <= b - beta {
        (a, b, alpha, beta)
    } else {
        (b, a, beta, alpha)
    };
    // quotient by the monomial part
    let monomial = match (alpha, beta) {
        (0, 0) => None,
        (0, _) => Some(a + beta - 1),
        _ => Some(alpha + b - 1),
    };
    let colon = reg_three_powers(a - alpha, b - beta, gamma).map(|r| r + alpha + beta);
    match (monomial, colon) {
        (Some(m), Some(c)) => Ok(m.max(c)),
        (Some(v), None) | (None, Some(v)) => Ok(v),
        (None, None) => Err(Error::Precondition("the ideal is the whole ring".into())),
    }
}

fn validate_characteristic(ch: u64) -> Result<()> {
    if ch != 0 && !is_prime_u64(ch) {
        return Err(Error::InvalidInput(format!(
            "characteristic {ch} is neither 0 nor prime"
        )));
    }
    Ok(())
}

fn nonzero_mod(v: &num_bigint::BigInt, ch: u64) -> bool {
    use num_traits::Zero;
    if ch == 0 {
        !v.is_zero()
    } else {
        !(v % num_bigint::BigInt::from(ch)).is_zero()
    }
}

/// Axis whose side exceeds the sum of the other two mixed exponents.
fn unstable_axis(p: &AciParams) -> Option<usize> {
    let st = p.stats();
    let sides = [st.a_side, st.b_side, st.c_side];
    let m = p.mixed();
    (0..3).find(|&i| sides[i] > num_rational::Ratio::from_integer(m[(i + 1) % 3] + m[(i + 2) % 3]))
}

/// Generic splitting type of the syzygy bundle in the given characteristic
/// (0 or a prime).
pub fn generic_splitting_type(p: &AciParams, characteristic: u64) -> Result<SplittingType> {
    validate_characteristic(characteristic)?;
    let cond = characteristic != 0;
    let st = p.stats();
    let sum = p.triple_sum();
    let mixed_deg = p.mixed_degree();
    if st.semistable {
        if sum % 3 != 0 {
            let k = sum / 3;
            return Ok(if sum % 3 == 1 {
                SplittingType::new([k, k, k + 1], cond)
            } else {
                SplittingType::new([k, k + 1, k + 1], cond)
            });
        }
        let s2 = sum / 3;
        let det = det_exact(&build_n(p)?)?;
        return Ok(if nonzero_mod(&det, characteristic) {
            SplittingType::new([s2, s2, s2], cond)
        } else {
            SplittingType::new([s2 - 1, s2, s2 + 1], cond)
        });
    }
    // sort so that a <= b <= c
    let mut order = [0usize, 1, 2];
    order.sort_by_key(|&i| (p.pure()[i], i));
    let q = p.relabel(order);
    let [a, b, c] = q.pure();
    let [alpha, beta, gamma] = q.mixed();
    let qs = q.stats();
    let zero = num_rational::Ratio::from_integer(0);
    if qs.puncture < zero {
        return Ok(if c >= a + b {
            SplittingType::new([a + b, c, mixed_deg], cond)
        } else {
            SplittingType::new([(a + b + c) / 2, half_up(a + b + c), mixed_deg], cond)
        });
    }
    if qs.c_side < zero {
        // a mixed generator of degree >= a+b already lies in (x^a, y^b)
        let r = if mixed_deg >= a + b {
            a + b - 1
        } else {
            reg_two_var(a, b, alpha, beta, gamma)?
        };
        return Ok(SplittingType::new(
            [a + b + mixed_deg - r - 1, r + 1, c],
            cond,
        ));
    }
    let i = unstable_axis(&q)
        .ok_or_else(|| Error::Invariant(format!("{p} is neither semistable nor unstable")))?;
    let (pure, mixed) = (q.pure(), q.mixed());
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let rest = mixed[i] + pure[j] + pure[k];
    Ok(SplittingType::new(
        [rest / 2, half_up(rest), pure[i] + mixed[j] + mixed[k]],
        cond,
    ))
}

/// Splitting types on the special lines `z = 0` and `y + z = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JumpingLines {
    pub z_line: SplittingType,
    /// `None` where neither known formula applies.
    pub yz_line: Option<SplittingType>,
}

pub fn jumping_lines(p: &AciParams) -> JumpingLines {
    let [a, b, c] = p.pure();
    let [alpha, beta, gamma] = p.mixed();
    let z_line = if gamma == 0 {
        SplittingType::new([c, alpha + b, a + beta], false)
    } else {
        SplittingType::new([c, alpha + beta + gamma, a + b], false)
    };
    let yz_line = if beta + gamma < b && b <= c {
        Some(SplittingType::new([c, a + beta + gamma, alpha + b], false))
    } else if b <= c.min(beta + gamma) {
        Some(SplittingType::new([c, alpha + beta + gamma, a + b], false))
    } else {
        None
    };
    JumpingLines { z_line, yz_line }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub characteristic: u64,
    pub wlp: bool,
    pub reg_j: i64,
    pub det_nonzero_mod_char: bool,
    pub det_z_nonzero_mod_char: bool,
    pub splitting: SplittingType,
    /// Only meaningful in characteristic zero.
    pub balanced_splitting: Option<bool>,
}

/// The equivalent conditions for a hexagonal sextuple, checked against each
/// other.
pub fn equivalence_report(p: &AciParams, characteristic: u64) -> Result<EquivalenceReport> {
    validate_characteristic(characteristic)?;
    let h = p.hexagon()?;
    let s = h.s;
    let det_n = det_exact(&build_n(p)?)?;
    let det_z = det_exact(&build_z(p)?)?;
    let n_ok = nonzero_mod(&det_n, characteristic);
    let z_ok = nonzero_mod(&det_z, characteristic);
    if n_ok != z_ok {
        return Err(Error::Invariant(format!(
            "{p}: det N = {det_n} and det Z = {det_z} disagree mod {characteristic}"
        )));
    }
    let reg_j = if n_ok { s + 1 } else { s + 2 };
    let splitting = generic_splitting_type(p, characteristic)?;
    if splitting.regularity() != reg_j {
        return Err(Error::Invariant(format!(
            "{p}: splitting type {splitting} does not give reg J = {reg_j}"
        )));
    }
    let balanced = splitting.triple() == [s + 2; 3];
    if characteristic == 0 && balanced != n_ok {
        return Err(Error::Invariant(format!(
            "{p}: balanced splitting disagrees with det N"
        )));
    }
    Ok(EquivalenceReport {
        characteristic,
        wlp: n_ok,
        reg_j,
        det_nonzero_mod_char: n_ok,
        det_z_nonzero_mod_char: z_ok,
        splitting,
        balanced_splitting: (characteristic == 0).then_some(balanced),
    })
}

/// A generator `x^i y^j (x+y)^k` of an ideal in two variables.
pub type TwoVarGenerator = (i64, i64, i64);

/// Dimension of `[S/J]_d` by linear algebra over `Q` or `F_p`.
pub fn quotient_dimension(gens: &[TwoVarGenerator], d: i64, characteristic: u64) -> usize {
    // coefficient of x^e y^(d-e) in x^i y^j (x+y)^k * x^u y^(d-deg-u)
    let mut rows: Vec<Vec<num_bigint::BigInt>> = Vec::new();
    for &(i, j, k) in gens {
        let deg = i + j + k;
        for u in 0..=d - deg {
            let row = (0..=d).map(|e| binomial(k, e - i - u)).collect();
            rows.push(row);
        }
    }
    let width = (d + 1) as usize;
    if rows.is_empty() {
        return width;
    }
    let m = IntMatrix::from_rows(&rows);
    let rank = if characteristic == 0 {
        rank_rational(&m)
    } else {
        rank_mod_p(&m, characteristic)
    };
    width - rank
}

/// `reg J` computed from the graded pieces of `S/J`: one more than the top
/// nonzero degree. Requires `J` to contain powers of both variables.
pub fn two_var_regularity(gens: &[TwoVarGenerator], characteristic: u64) -> Result<i64> {
    validate_characteristic(characteristic)?;
    let xa = gens
        .iter()
        .filter(|g| g.1 == 0 && g.2 == 0)
        .map(|g| g.0)
        .min();
    let yb = gens
        .iter()
        .filter(|g| g.0 == 0 && g.2 == 0)
        .map(|g| g.1)
        .min();
    let (Some(a), Some(b)) = (xa, yb) else {
        return Err(Error::InvalidInput("ideal must contain x^a and y^b".into()));
    };
    let mut top = None;
    for d in 0..=a + b - 2 {
        if quotient_dimension(gens, d, characteristic) > 0 {
            top = Some(d);
        }
    }
    top.map(|t| t + 1)
        .ok_or_else(|| Error::Precondition("the ideal is the whole ring".into()))
}

/// Rank-computation oracle for `reg J` of a sextuple.
pub fn restricted_ideal_regularity(p: &AciParams, characteristic: u64) -> Result<i64> {
    let [a, b, c] = p.pure();
    let [alpha, beta, gamma] = p.mixed();
    two_var_regularity(
        &[(a, 0, 0), (0, b, 0), (0, 0, c), (alpha, beta, gamma)],
        characteristic,
    )
}

/// Splitting type read off from the Hilbert function of the syzygy module
/// of the four generators of `J` (restriction to `x+y+z = 0`), computed by
/// rank computations. A test oracle.
pub fn restricted_splitting_type(p: &AciParams, characteristic: u64) -> Result<SplittingType> {
    validate_characteristic(characteristic)?;
    let [a, b, c] = p.pure();
    let [alpha, beta, gamma] = p.mixed();
    let gens = [(a, 0, 0), (0, b, 0), (0, 0, c), (alpha, beta, gamma)];
    let degrees = [a, b, c, alpha + beta + gamma];
    let top = p.triple_sum() + 1;
    // dim Syz_d = sum_i dim S_(d - deg_i) - dim J_d
    let syz: Vec<i64> = (0..=top)
        .map(|d| {
            let free: i64 = degrees.iter().map(|&e| (d - e + 1).max(0)).sum();
            let ideal = d + 1 - quotient_dimension(&gens, d, characteristic) as i64;
            free - ideal
        })
        .collect();
    let at = |d: i64| if d < 0 { 0 } else { syz[d as usize] };
    let mut out = Vec::new();
    for d in 0..=top {
        let g = at(d) - 2 * at(d - 1) + at(d - 2);
        if g < 0 {
            return Err(Error::Invariant(format!(
                "syzygy module of {p} is not free"
            )));
        }
        out.extend(std::iter::repeat_n(d, g as usize));
    }
    if out.len() != 3 {
        return Err(Error::Invariant(format!(
            "syzygy module of {p} has rank {}",
            out.len()
        )));
    }
    Ok(SplittingType::new(
        [out[0], out[1], out[2]],
        characteristic != 0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: [i64; 6]) -> AciParams {
        AciParams::from_slice(&v).unwrap()
    }

    #[test]
    fn worked_splitting_types() {
        assert_eq!(
            generic_splitting_type(&p([7, 7, 7, 3, 3, 3]), 0)
                .unwrap()
                .triple(),
            [9, 10, 11]
        );
        assert_eq!(
            generic_splitting_type(&p([6, 7, 8, 3, 3, 3]), 0)
                .unwrap()
                .triple(),
            [10, 10, 10]
        );
        assert_eq!(
            generic_splitting_type(&p([4, 5, 5, 3, 1, 1]), 0)
                .unwrap()
                .triple(),
            [6, 6, 7]
        );
        assert!(
            generic_splitting_type(&p([6, 7, 8, 3, 3, 3]), 7)
                .unwrap()
                .conditional
        );
        assert!(generic_splitting_type(&p([6, 7, 8, 3, 3, 3]), 8).is_err());
    }

    #[test]
    fn two_variable_regularity() {
        assert_eq!(reg_two_var(2, 2, 1, 1, 1).unwrap(), 3);
        assert_eq!(reg_two_var(3, 5, 1, 2, 0).unwrap(), 1 + 5 - 1);
        assert_eq!(reg_two_var(2, 7, 0, 0, 3).unwrap(), 2 + 3 - 1);
        assert!(reg_two_var(2, 2, 1, 1, 2).is_err());
        assert_eq!(
            two_var_regularity(&[(2, 0, 0), (0, 2, 0), (1, 1, 1)], 0).unwrap(),
            3
        );
    }

    #[test]
    fn oracle_regularity() {
        assert_eq!(
            restricted_ideal_regularity(&p([6, 7, 8, 3, 3, 3]), 0).unwrap(),
            9
        );
        assert_eq!(
            restricted_ideal_regularity(&p([7, 7, 7, 3, 3, 3]), 0).unwrap(),
            10
        );
    }

    #[test]
    fn splitting_types_match_syzygy_hilbert_function() {
        for v in [
            [4, 5, 5, 3, 1, 1],
            [5, 6, 9, 1, 5, 1],
            [2, 3, 9, 1, 1, 1],
            [3, 3, 8, 1, 1, 5],
            [1, 2, 4, 0, 1, 1],
            [6, 7, 8, 3, 3, 3],
            [7, 7, 7, 3, 3, 3],
        ] {
            let q = p(v);
            assert_eq!(
                generic_splitting_type(&q, 0).unwrap().triple(),
                restricted_splitting_type(&q, 0).unwrap().triple(),
                "{q}"
            );
        }
        // extraneous generator: max(p,q,r) exceeds reg J + 1
        let q = p([1, 2, 4, 0, 1, 1]);
        assert_eq!(
            restricted_splitting_type(&q, 0).unwrap().triple(),
            [2, 3, 4]
        );
        assert_eq!(restricted_ideal_regularity(&q, 0).unwrap(), 2);
    }

    #[test]
    fn jumping_line_examples() {
        let j = jumping_lines(&p([6, 7, 8, 3, 3, 3]));
        assert_eq!(j.z_line.triple(), [8, 9, 13]);
        assert_eq!(j.yz_line.unwrap().triple(), [8, 10, 12]);
        assert_eq!(
            jumping_lines(&p([3, 3, 1, 1, 1, 0])).z_line.triple(),
            [1, 4, 4]
        );
    }

    #[test]
    fn equivalence_examples() {
        let r = equivalence_report(&p([6, 7, 8, 3, 3, 3]), 0).unwrap();
        assert!(r.wlp && r.reg_j == 9 && r.balanced_splitting == Some(true));
        let r = equivalence_report(&p([7, 7, 7, 3, 3, 3]), 0).unwrap();
        assert!(!r.wlp && r.reg_j == 10);
        assert!(!equivalence_report(&p([4, 6, 6, 1, 1, 3]), 11).unwrap().wlp);
        assert!(equivalence_report(&p([4, 6, 6, 1, 1, 3]), 13).unwrap().wlp);
    }
}
