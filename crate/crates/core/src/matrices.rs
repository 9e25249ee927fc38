//! The zero-one divisibility matrix, the binomial matrix and the lattice path
//! endpoints whose path counts reproduce the binomial matrix.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::monomial_basis;
use crate::params::AciParams;

/// Dense row-major matrix of big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| rows[i][j].clone().into())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Entries as decimal strings, for JSON export.
    pub fn to_decimal_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_string()).collect())
            .collect()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_rows().serialize(s)
    }
}

/// Binomial coefficient with the zero convention outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// Divisibility matrix between the lex-ordered bases in degrees `s` and `s+1`.
pub fn build_z(p: &AciParams) -> Result<IntMatrix> {
    let h = p.hexagon()?;
    let lower = monomial_basis(p, h.s);
    let upper = monomial_basis(p, h.s + 1);
    if lower.len() != upper.len() {
        return Err(Error::Invariant(format!(
            "peak bases differ in size for {p}: {} vs {}",
            lower.len(),
            upper.len()
        )));
    }
    Ok(IntMatrix::from_fn(lower.len(), upper.len(), |i, j| {
        BigInt::from(lower[i].divides(&upper[j]) as u8)
    }))
}

/// The `(C+M)`-square binomial matrix: rows from side C first, then rows from
/// the puncture.
pub fn build_n(p: &AciParams) -> Result<IntMatrix> {
    let h = p.hexagon()?;
    let n = h.path_count();
    let (c_side, a_side) = (h.c_side, h.a_side);
    Ok(IntMatrix::from_fn(n, n, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        if i <= c_side {
            binomial(p.c(), a_side + j - i)
        } else {
            binomial(p.gamma(), a_side + c_side - p.beta() + j - i)
        }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

/// Start points (side C, then puncture) and end points of the lattice paths.
pub fn nilp_endpoints(p: &AciParams) -> Result<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    let h = p.hexagon()?;
    let (a_side, b_side, c_side, m) = (h.a_side, h.b_side, h.c_side, h.puncture);
    let mut starts = Vec::new();
    for i in 1..=c_side {
        starts.push(LatticePoint::new(i - 1, b_side + m + i - 1));
    }
    for i in c_side + 1..=c_side + m {
        starts.push(LatticePoint::new(
            p.beta() + i - c_side - 1,
            b_side - p.alpha() + i - 1,
        ));
    }
    let ends = (1..=c_side + m)
        .map(|j| LatticePoint::new(a_side + j - 1, j - 1))
        .collect();
    Ok((starts, ends))
}

/// Number of right/down lattice paths from `from` to `to`.
pub fn path_count(from: LatticePoint, to: LatticePoint) -> BigInt {
    let right = to.x - from.x;
    let down = from.y - to.y;
    if right < 0 || down < 0 {
        return BigInt::zero();
    }
    binomial(right + down, right)
}

pub fn path_count_matrix(p: &AciParams) -> Result<IntMatrix> {
    let (starts, ends) = nilp_endpoints(p)?;
    Ok(IntMatrix::from_fn(starts.len(), ends.len(), |i, j| {
        path_count(starts[i], ends[j])
    }))
}
