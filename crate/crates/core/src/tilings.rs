//! Lozenge tilings of the punctured hexagon.
//!
//! Unit triangles are the monomials of the two peak degrees: the degree-`s`
//! monomial `x^i y^j z^k` is the up-pointing triangle with corners
//! `(i+1,j+1,k)`, `(i+1,j,k+1)`, `(i,j+1,k+1)` and the degree-`s+1` monomial
//! is the down-pointing triangle with corners `(i+1,j,k)`, `(i,j+1,k)`,
//! `(i,j,k+1)`. Two triangles share an edge exactly when one monomial divides
//! the other, so a tiling is a perfect matching of the divisibility graph.
//!
//! Paths run through the edges on lines `k = const`; crossing an x-lozenge
//! is a down step, crossing a y-lozenge a right step, and z-lozenges carry no
//! path.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{monomial_basis, Monomial};
use crate::matrices::LatticePoint;
use crate::params::{AciParams, Hexagon};

/// Default cap on backtracking steps.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// The triangles of a punctured hexagon and their adjacency.
#[derive(Debug, Clone)]
pub struct Region {
    pub params: AciParams,
    pub hexagon: Hexagon,
    /// Degree-`s` monomials, in the row order of the divisibility matrix.
    pub up_cells: Vec<Monomial>,
    /// Degree-`s+1` monomials, in the column order.
    pub down_cells: Vec<Monomial>,
    up_index: HashMap<Monomial, usize>,
    down_index: HashMap<Monomial, usize>,
    /// `up_adj[u][axis]` is the down cell `u * var(axis)`, if present.
    up_adj: Vec<[Option<usize>; 3]>,
    /// `down_adj[d][axis]` is the up cell `d / var(axis)`, if present.
    down_adj: Vec<[Option<usize>; 3]>,
}

pub fn build_region(p: &AciParams) -> Result<Region> {
    let hexagon = p.hexagon()?;
    let up_cells = monomial_basis(p, hexagon.s);
    let down_cells = monomial_basis(p, hexagon.s + 1);
    if up_cells.len() != down_cells.len() {
        return Err(Error::Invariant(format!(
            "{p}: {} up cells but {} down cells",
            up_cells.len(),
            down_cells.len()
        )));
    }
    let up_index: HashMap<_, _> = up_cells.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let down_index: HashMap<_, _> = down_cells
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, i))
        .collect();
    let up_adj = up_cells
        .iter()
        .map(|u| [0, 1, 2].map(|ax| down_index.get(&u.times(ax)).copied()))
        .collect();
    let down_adj = down_cells
        .iter()
        .map(|d| [0, 1, 2].map(|ax| d.over(ax).and_then(|u| up_index.get(&u).copied())))
        .collect();
    Ok(Region {
        params: *p,
        hexagon,
        up_cells,
        down_cells,
        up_index,
        down_index,
        up_adj,
        down_adj,
    })
}

impl Region {
    pub fn size(&self) -> usize {
        self.up_cells.len()
    }

    pub fn up_index(&self, m: &Monomial) -> Option<usize> {
        self.up_index.get(m).copied()
    }

    pub fn down_index(&self, m: &Monomial) -> Option<usize> {
        self.down_index.get(m).copied()
    }

    /// Down cell sharing the `axis` edge of up cell `u`.
    pub fn neighbour(&self, u: usize, axis: usize) -> Option<usize> {
        self.up_adj[u][axis]
    }

    /// Axis of the lozenge formed by `u` and `d`, if they are adjacent.
    pub fn lozenge_axis(&self, u: usize, d: usize) -> Option<usize> {
        (0..3).find(|&ax| self.up_adj[u][ax] == Some(d))
    }

    /// Bi-adjacency matrix, rows = up cells.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        (0..self.size())
            .map(|u| {
                let mut row = vec![false; self.size()];
                for d in self.up_adj[u].iter().flatten() {
                    row[*d] = true;
                }
                row
            })
            .collect()
    }

    /// Lattice vertices (degree `s+2`) with all six surrounding triangles in
    /// the region.
    pub fn interior_vertices(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self
            .down_cells
            .iter()
            .flat_map(|d| (0..3).map(move |ax| d.times(ax)))
            .filter(|v| self.vertex_cells(v).is_some())
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    /// `[u_xy, u_xz, u_yz]` and `[d_x, d_y, d_z]` around vertex `v`.
    fn vertex_cells(&self, v: &Monomial) -> Option<([usize; 3], [usize; 3])> {
        let up = |a: usize, b: usize| v.over(a)?.over(b).and_then(|m| self.up_index(&m));
        let down = |a: usize| v.over(a).and_then(|m| self.down_index(&m));
        Some((
            [up(0, 1)?, up(0, 2)?, up(1, 2)?],
            [down(0)?, down(1)?, down(2)?],
        ))
    }
}

/// A perfect matching of up cells to down cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    /// `partner[u]` is the down cell sharing a lozenge with up cell `u`.
    pub partner: Vec<usize>,
}

impl Tiling {
    /// Validates that `partner` is a perfect matching along region edges.
    pub fn new(region: &Region, partner: Vec<usize>) -> Result<Tiling> {
        if partner.len() != region.size() {
            return Err(Error::InvalidInput(format!(
                "tiling has {} lozenges, region needs {}",
                partner.len(),
                region.size()
            )));
        }
        let mut seen = vec![false; region.size()];
        for (u, &d) in partner.iter().enumerate() {
            if d >= region.size() || seen[d] || region.lozenge_axis(u, d).is_none() {
                return Err(Error::InvalidInput(format!(
                    "cells {u} and {d} do not form a lozenge of the tiling"
                )));
            }
            seen[d] = true;
        }
        Ok(Tiling { partner })
    }

    /// Lozenges as `(up, down)` index pairs, ordered by up cell.
    pub fn lozenges(&self) -> Vec<(usize, usize)> {
        self.partner.iter().copied().enumerate().collect()
    }

    /// Number of lozenges of each axis.
    pub fn axis_counts(&self, region: &Region) -> [usize; 3] {
        let mut c = [0; 3];
        for (u, d) in self.lozenges() {
            if let Some(ax) = region.lozenge_axis(u, d) {
                c[ax] += 1;
            }
        }
        c
    }
}

impl Serialize for Tiling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            lozenges: Vec<(usize, usize)>,
        }
        Repr {
            lozenges: self.lozenges(),
        }
        .serialize(s)
    }
}

/// Sign of a permutation given as an image vector.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// A tiling viewed as a permutation of the peak bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub pi: Vec<usize>,
}

impl Matching {
    pub fn sign(&self) -> i8 {
        permutation_sign(&self.pi)
    }
}

pub fn tiling_to_matching(t: &Tiling) -> Matching {
    Matching {
        pi: t.partner.clone(),
    }
}

pub fn matching_to_tiling(region: &Region, m: &Matching) -> Result<Tiling> {
    Tiling::new(region, m.pi.clone())
}

/// Non-intersecting paths read off from a tiling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathFamily {
    /// Vertex sequences; path `i` starts at the `i`-th start point (side C
    /// first, then the puncture).
    pub paths: Vec<Vec<LatticePoint>>,
    /// `lambda[i]` is the end index of path `i`.
    pub lambda: Vec<usize>,
    /// Number of side-C paths ending before every puncture path.
    pub bucket: usize,
}

impl PathFamily {
    pub fn sign(&self) -> i8 {
        permutation_sign(&self.lambda)
    }
}

/// Sign of the admissible permutation with `k` side-C paths before the
/// puncture paths.
pub fn bucket_sign(h: &Hexagon, k: usize) -> i8 {
    if (h.puncture * (h.c_side - k as i64)).rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

fn edge_point(p: &AciParams, down: &Monomial) -> LatticePoint {
    LatticePoint {
        x: down.j,
        y: p.a() - 1 - down.i,
    }
}

/// Edges where paths start, as degree-`s+1` exponent vectors on the line
/// `k = c` (side C) and `k = gamma` (puncture), in start order.
fn start_edges(region: &Region) -> Vec<Monomial> {
    let p = &region.params;
    let h = &region.hexagon;
    let line = |k: i64, j: i64| Monomial::new(h.s + 1 - k - j, j, k);
    let side = (0..h.c_side).map(|j| line(p.c(), j));
    let puncture = (0..h.puncture).map(|t| line(p.gamma(), p.beta() + t));
    side.chain(puncture).collect()
}

pub fn tiling_to_paths(region: &Region, t: &Tiling) -> Result<PathFamily> {
    let p = &region.params;
    let h = &region.hexagon;
    let n = h.path_count();
    let mut paths = Vec::with_capacity(n);
    let mut lambda = Vec::with_capacity(n);
    for start in start_edges(region) {
        let mut edge = start;
        let mut pts = vec![edge_point(p, &edge)];
        while edge.k > 0 {
            let u = edge
                .over(2)
                .and_then(|m| region.up_index(&m))
                .ok_or_else(|| {
                    Error::Invariant(format!("path from {start} leaves the region at {edge}"))
                })?;
            let d = t.partner[u];
            if region.lozenge_axis(u, d) == Some(2) {
                return Err(Error::Invariant(format!(
                    "path from {start} meets a z-lozenge"
                )));
            }
            edge = region.down_cells[d];
            pts.push(edge_point(p, &edge));
        }
        let end = edge.j - h.a_side;
        if end < 0 || end as usize >= n {
            return Err(Error::Invariant(format!(
                "path from {start} ends off the boundary at {edge}"
            )));
        }
        lambda.push(end as usize);
        paths.push(pts);
    }
    let c = h.c_side as usize;
    let first_puncture = lambda[c..].iter().min().copied().unwrap_or(usize::MAX);
    let bucket = lambda[..c].iter().filter(|&&e| e < first_puncture).count();
    Ok(PathFamily {
        paths,
        lambda,
        bucket,
    })
}

pub fn paths_to_tiling(region: &Region, f: &PathFamily) -> Result<Tiling> {
    let p = &region.params;
    let mut partner = vec![usize::MAX; region.size()];
    let point_to_down = |q: &LatticePoint, k: i64| {
        let i = p.a() - 1 - q.y;
        region.down_index(&Monomial::new(i, q.x, k))
    };
    for path in &f.paths {
        for w in path.windows(2) {
            let (from, to) = (w[0], w[1]);
            // the edge at `from` lies on the line k = s+1 - i - j
            let k_from = region.hexagon.s + 1 - (p.a() - 1 - from.y) - from.x;
            let u = Monomial::new(p.a() - 1 - from.y, from.x, k_from - 1);
            let ui = region
                .up_index(&u)
                .ok_or_else(|| Error::InvalidInput(format!("path leaves the region at {u}")))?;
            let d = point_to_down(&to, k_from - 1)
                .ok_or_else(|| Error::InvalidInput(format!("path leaves the region after {u}")))?;
            if partner[ui] != usize::MAX {
                return Err(Error::InvalidInput(format!("paths overlap at {u}")));
            }
            partner[ui] = d;
        }
    }
    for (u, slot) in partner.iter_mut().enumerate() {
        if *slot == usize::MAX {
            *slot = region.neighbour(u, 2).ok_or_else(|| {
                Error::InvalidInput(format!("cell {} is left uncovered", region.up_cells[u]))
            })?;
        }
    }
    Tiling::new(region, partner)
}

/// Which of the two triplet arrangements surrounds vertex `v`, if either.
fn triplet_config(
    region: &Region,
    t: &Tiling,
    v: &Monomial,
) -> Option<(u8, [usize; 3], [usize; 3])> {
    let (u, d) = region.vertex_cells(v)?;
    let [uxy, uxz, uyz] = u;
    let [dx, dy, dz] = d;
    let pt = &t.partner;
    if pt[uxy] == dy && pt[uxz] == dx && pt[uyz] == dz {
        Some((1, u, d))
    } else if pt[uxy] == dx && pt[uxz] == dz && pt[uyz] == dy {
        Some((2, u, d))
    } else {
        None
    }
}

/// Vertices around which the three lozenges can be rotated.
pub fn rotatable_vertices(region: &Region, t: &Tiling) -> Vec<Monomial> {
    region
        .interior_vertices()
        .into_iter()
        .filter(|v| triplet_config(region, t, v).is_some())
        .collect()
}

/// Exchange the three lozenges around `v` for the other arrangement.
pub fn rotate_triplet(region: &Region, t: &Tiling, v: &Monomial) -> Result<Tiling> {
    let (config, [uxy, uxz, uyz], [dx, dy, dz]) = triplet_config(region, t, v)
        .ok_or_else(|| Error::InvalidInput(format!("no rotatable triplet around {v}")))?;
    let mut partner = t.partner.clone();
    if config == 1 {
        partner[uxy] = dx;
        partner[uxz] = dz;
        partner[uyz] = dy;
    } else {
        partner[uxy] = dy;
        partner[uxz] = dx;
        partner[uyz] = dz;
    }
    Ok(Tiling { partner })
}

/// Backtracking over perfect matchings, most constrained cell first.
struct Search<'a, F> {
    region: &'a Region,
    up_match: Vec<Option<usize>>,
    down_match: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
    found: u64,
    stop_after: u64,
    visit: F,
}

enum Pick {
    Done,
    Dead,
    Up(usize),
    Down(usize),
}

impl<F: FnMut(&Tiling)> Search<'_, F> {
    fn free_up_options(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.region.up_adj[u]
            .iter()
            .flatten()
            .copied()
            .filter(|&d| self.down_match[d].is_none())
    }

    fn free_down_options(&self, d: usize) -> impl Iterator<Item = usize> + '_ {
        self.region.down_adj[d]
            .iter()
            .flatten()
            .copied()
            .filter(|&u| self.up_match[u].is_none())
    }

    fn pick(&self) -> Pick {
        let mut best: Option<(usize, Pick)> = None;
        for u in 0..self.up_match.len() {
            if self.up_match[u].is_none() {
                let n = self.free_up_options(u).count();
                if n == 0 {
                    return Pick::Dead;
                }
                if best.as_ref().is_none_or(|(b, _)| n < *b) {
                    best = Some((n, Pick::Up(u)));
                }
            }
        }
        for d in 0..self.down_match.len() {
            if self.down_match[d].is_none() {
                let n = self.free_down_options(d).count();
                if n == 0 {
                    return Pick::Dead;
                }
                if best.as_ref().is_none_or(|(b, _)| n < *b) {
                    best = Some((n, Pick::Down(d)));
                }
            }
        }
        best.map_or(Pick::Done, |(_, p)| p)
    }

    fn set(&mut self, u: usize, d: usize, on: bool) {
        self.up_match[u] = on.then_some(d);
        self.down_match[d] = on.then_some(u);
    }

    fn run(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                nodes: self.nodes - 1,
            });
        }
        let pairs: Vec<(usize, usize)> = match self.pick() {
            Pick::Dead => return Ok(()),
            Pick::Done => {
                let partner = self.up_match.iter().map(|m| m.unwrap()).collect();
                (self.visit)(&Tiling { partner });
                self.found += 1;
                return Ok(());
            }
            Pick::Up(u) => self.free_up_options(u).map(|d| (u, d)).collect(),
            Pick::Down(d) => self.free_down_options(d).map(|u| (u, d)).collect(),
        };
        for (u, d) in pairs {
            self.set(u, d, true);
            let r = self.run();
            self.set(u, d, false);
            r?;
            if self.found >= self.stop_after {
                break;
            }
        }
        Ok(())
    }
}

/// Visit every tiling containing the `forced` lozenges, in a deterministic
/// order. Fails with [`Error::BudgetExceeded`] once more than `budget`
/// search nodes have been expanded.
pub fn for_each_tiling_with(
    region: &Region,
    forced: &[(usize, usize)],
    budget: u64,
    visit: impl FnMut(&Tiling),
) -> Result<u64> {
    let n = region.size();
    let mut s = Search {
        region,
        up_match: vec![None; n],
        down_match: vec![None; n],
        nodes: 0,
        budget,
        found: 0,
        stop_after: u64::MAX,
        visit,
    };
    for &(u, d) in forced {
        if u >= n
            || d >= n
            || region.lozenge_axis(u, d).is_none()
            || s.up_match[u].is_some()
            || s.down_match[d].is_some()
        {
            return Err(Error::InvalidInput(format!(
                "forced lozenge ({u},{d}) is not available"
            )));
        }
        s.set(u, d, true);
    }
    s.run()?;
    Ok(s.nodes)
}

pub fn for_each_tiling(region: &Region, budget: u64, visit: impl FnMut(&Tiling)) -> Result<u64> {
    for_each_tiling_with(region, &[], budget, visit)
}

/// The alternatives at the root of the search. Forcing each in turn splits
/// the enumeration into disjoint pieces.
pub fn root_branches(region: &Region) -> Vec<(usize, usize)> {
    let n = region.size();
    let s = Search {
        region,
        up_match: vec![None; n],
        down_match: vec![None; n],
        nodes: 0,
        budget: 0,
        found: 0,
        stop_after: 0,
        visit: |_: &Tiling| {},
    };
    match s.pick() {
        Pick::Up(u) => s.free_up_options(u).map(|d| (u, d)).collect(),
        Pick::Down(d) => s.free_down_options(d).map(|u| (u, d)).collect(),
        Pick::Done | Pick::Dead => Vec::new(),
    }
}

/// The first tiling in enumeration order, without visiting the rest.
pub fn first_tiling(region: &Region, budget: u64) -> Result<Option<Tiling>> {
    let n = region.size();
    let mut first = None;
    let mut s = Search {
        region,
        up_match: vec![None; n],
        down_match: vec![None; n],
        nodes: 0,
        budget,
        found: 0,
        stop_after: 1,
        visit: |t: &Tiling| first = Some(t.clone()),
    };
    s.run()?;
    Ok(first)
}

pub fn enumerate_tilings(region: &Region, budget: u64) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for_each_tiling(region, budget, |t| out.push(t.clone()))?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedCounts {
    /// Tilings per admissible bucket `k`.
    pub per_bucket: BTreeMap<usize, u64>,
    pub signed_total_paths: i64,
    pub signed_total_matchings: i64,
    pub unsigned_total: u64,
    /// `sgn(pi) * sgn(lambda)`, when it is the same for every tiling.
    pub sign_constant: Option<i8>,
    pub nodes: u64,
}

pub fn signed_enumeration(p: &AciParams, budget: u64) -> Result<SignedCounts> {
    let region = build_region(p)?;
    signed_enumeration_in(&region, budget)
}

pub fn signed_enumeration_in(region: &Region, budget: u64) -> Result<SignedCounts> {
    let h = region.hexagon;
    let mut per_bucket = BTreeMap::new();
    let (mut sp, mut sm, mut total) = (0i64, 0i64, 0u64);
    let mut constant: Option<Option<i8>> = None;
    let mut failure = None;
    let nodes = for_each_tiling(region, budget, |t| {
        if failure.is_some() {
            return;
        }
        let fam = match tiling_to_paths(region, t) {
            Ok(f) => f,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        let lam = bucket_sign(&h, fam.bucket);
        if lam != fam.sign() {
            failure = Some(Error::Invariant(format!(
                "bucket {} sign disagrees with the path permutation",
                fam.bucket
            )));
            return;
        }
        let pi = tiling_to_matching(t).sign();
        *per_bucket.entry(fam.bucket).or_insert(0) += 1;
        sp += lam as i64;
        sm += pi as i64;
        total += 1;
        let c = pi * lam;
        constant = Some(match constant {
            None => Some(c),
            Some(prev) => prev.filter(|&v| v == c),
        });
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(SignedCounts {
        per_bucket,
        signed_total_paths: sp,
        signed_total_matchings: sm,
        unsigned_total: total,
        sign_constant: constant.flatten(),
        nodes,
    })
}

/// SVG drawing: the triangle grid, then lozenges shaded by axis when a tiling
/// is given. The puncture is outlined, not filled.
pub fn render_svg(region: &Region, tiling: Option<&Tiling>, unit: f64) -> String {
    let n = region.hexagon.s_plus_2() as f64;
    let h3 = 3f64.sqrt() / 2.0;
    let (w, ht) = (n * unit + 2.0 * unit, n * unit * h3 + 2.0 * unit);
    let pt = |e: [i64; 3]| {
        let px = (e[1] - e[2]) as f64 * unit / 2.0 + w / 2.0;
        let py = ht - unit - (e[1] + e[2]) as f64 * unit * h3;
        (px, py)
    };
    let up_corners = |m: &Monomial| {
        [
            [m.i + 1, m.j + 1, m.k],
            [m.i + 1, m.j, m.k + 1],
            [m.i, m.j + 1, m.k + 1],
        ]
    };
    let down_corners = |m: &Monomial| {
        [
            [m.i + 1, m.j, m.k],
            [m.i, m.j + 1, m.k],
            [m.i, m.j, m.k + 1],
        ]
    };
    let poly = |out: &mut String, class: &str, corners: &[[i64; 3]], fill: &str| {
        let pts: Vec<String> = corners
            .iter()
            .map(|&c| {
                let (x, y) = pt(c);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"  <polygon class="{class}" points="{}" fill="{fill}" stroke="black" stroke-width="1"/>"#,
            pts.join(" ")
        );
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{ht:.0}" viewBox="0 0 {w:.2} {ht:.2}">"#
    );
    for m in &region.up_cells {
        poly(&mut out, "up", &up_corners(m), "white");
    }
    for m in &region.down_cells {
        poly(&mut out, "down", &down_corners(m), "white");
    }
    if let Some(t) = tiling {
        let shades = ["#d9d9d9", "#8c8c8c", "#f2f2f2"];
        for (u, d) in t.lozenges() {
            let ax = region.lozenge_axis(u, d).unwrap_or(0);
            let um = region.up_cells[u];
            // the two corners off the shared edge, then the shared edge
            let shared: Vec<[i64; 3]> = up_corners(&um)
                .into_iter()
                .filter(|c| down_corners(&region.down_cells[d]).contains(c))
                .collect();
            let apex_up = up_corners(&um).into_iter().find(|c| !shared.contains(c));
            let apex_down = down_corners(&region.down_cells[d])
                .into_iter()
                .find(|c| !shared.contains(c));
            if let (Some(a), Some(b), [s0, s1]) = (apex_up, apex_down, shared.as_slice()) {
                poly(&mut out, "lozenge", &[a, *s0, b, *s1], shades[ax]);
            }
        }
    }
    let p = &region.params;
    let m = region.hexagon.puncture;
    if m > 0 {
        let (a, b, g) = (p.alpha(), p.beta(), p.gamma());
        poly(
            &mut out,
            "puncture",
            &[[a + m, b, g], [a, b + m, g], [a, b, g + m]],
            "none",
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{build_z, nilp_endpoints};
    use num_bigint::BigInt;

    fn region(v: [i64; 6]) -> Region {
        build_region(&AciParams::from_slice(&v).unwrap()).unwrap()
    }

    #[test]
    fn unit_hexagon() {
        let r = region([2, 2, 2, 1, 1, 1]);
        assert_eq!(r.size(), 3);
        let all = enumerate_tilings(&r, 1000).unwrap();
        assert_eq!(all.len(), 2);
        let v = r.interior_vertices();
        assert_eq!(v.len(), 1);
        let rotated = rotate_triplet(&r, &all[0], &v[0]).unwrap();
        assert_eq!(rotated, all[1]);
        assert_eq!(rotate_triplet(&r, &rotated, &v[0]).unwrap(), all[0]);
        let c = signed_enumeration_in(&r, 1000).unwrap();
        assert_eq!((c.unsigned_total, c.signed_total_paths), (2, 2));
    }

    #[test]
    fn adjacency_is_divisibility_matrix() {
        for v in [[4, 6, 6, 1, 1, 3], [5, 5, 3, 2, 2, 1], [3, 3, 1, 1, 1, 0]] {
            let p = AciParams::from_slice(&v).unwrap();
            let r = build_region(&p).unwrap();
            let z = build_z(&p).unwrap();
            for (i, row) in r.adjacency().iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    assert_eq!(*z.get(i, j), BigInt::from(e as u8));
                }
            }
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(
            enumerate_tilings(&region([4, 6, 6, 1, 1, 3]), 100_000)
                .unwrap()
                .len(),
            11
        );
        assert_eq!(
            enumerate_tilings(&region([3, 3, 1, 1, 1, 0]), 1000)
                .unwrap()
                .len(),
            1
        );
        let c = signed_enumeration(&AciParams::new(5, 5, 3, 2, 2, 1).unwrap(), 100_000).unwrap();
        assert_eq!(c.signed_total_paths, 0);
        let k: Vec<_> = c.per_bucket.iter().collect();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn path_endpoints_match_lattice_model() {
        let p = AciParams::new(4, 6, 6, 1, 1, 3).unwrap();
        let r = build_region(&p).unwrap();
        let (starts, ends) = nilp_endpoints(&p).unwrap();
        for t in enumerate_tilings(&r, 100_000).unwrap() {
            let f = tiling_to_paths(&r, &t).unwrap();
            for (i, path) in f.paths.iter().enumerate() {
                assert_eq!(path[0], starts[i]);
                assert_eq!(*path.last().unwrap(), ends[f.lambda[i]]);
            }
            assert_eq!(paths_to_tiling(&r, &f).unwrap(), t);
            assert_eq!(matching_to_tiling(&r, &tiling_to_matching(&t)).unwrap(), t);
        }
    }

    #[test]
    fn budget_is_reported() {
        let r = region([4, 6, 6, 1, 1, 3]);
        assert!(matches!(
            enumerate_tilings(&r, 3),
            Err(Error::BudgetExceeded { nodes: 3 })
        ));
    }

    #[test]
    fn branches_partition_the_search() {
        let r = region([4, 6, 6, 1, 1, 3]);
        let mut total = 0;
        for b in root_branches(&r) {
            for_each_tiling_with(&r, &[b], 100_000, |_| total += 1).unwrap();
        }
        assert_eq!(total, 11);
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }

    #[test]
    fn first_tiling_is_first_enumerated() {
        let r = region([4, 6, 6, 1, 1, 3]);
        let all = enumerate_tilings(&r, 100_000).unwrap();
        assert_eq!(first_tiling(&r, 100_000).unwrap(), all.first().cloned());
        assert!(matches!(first_tiling(&r, 0), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn svg_has_one_polygon_per_lozenge() {
        let r = region([4, 6, 6, 1, 1, 3]);
        let t = enumerate_tilings(&r, 100_000).unwrap().remove(0);
        let svg = render_svg(&r, Some(&t), 20.0);
        assert_eq!(svg.matches(r#"class="lozenge""#).count(), r.size());
        assert_eq!(svg.matches(r#"class="up""#).count(), r.size());
        assert_eq!(svg.matches(r#"class="down""#).count(), r.size());
        assert_eq!(svg.matches(r#"class="puncture""#).count(), 1);
    }
}
