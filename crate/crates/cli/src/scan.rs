//! Exhaustive traversal of sextuples in order of increasing
//! `a+b+c+alpha+beta+gamma`, then lexicographically.

use std::fmt::Write;
use std::thread;

use clap::{Args, ValueEnum};
use lefschetz::hilbert::h_vector;
use lefschetz::linalg::det_exact;
use lefschetz::matrices::build_n;
use lefschetz::params::{classify_puncture, socle_info};
use lefschetz::{AciParams, Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::output::Output;
use crate::Settings;

/// Ceiling on `s+2` when only `--minimize` bounds the search.
pub const MINIMIZE_CEILING_S2: i64 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Objective {
    Multiplicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    /// `b = beta+2`, `c = a+beta+1`, `gamma = a-alpha`: det N = gamma.
    DetNFamily,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ScanArgs {
    /// Smallest s+2, i.e. skip triple sums below three times this.
    #[arg(long)]
    pub min_s2: Option<i64>,
    /// Largest s+2.
    #[arg(long)]
    pub max_s2: Option<i64>,
    /// Largest multiplicity (vector space dimension of the quotient).
    #[arg(long)]
    pub max_multiplicity: Option<i64>,
    /// Cohen-Macaulay type, 2 or 3.
    #[arg(long = "type", value_parser = clap::value_parser!(u8).range(2..=3))]
    pub cm_type: Option<u8>,
    /// Only level algebras (socle in a single degree).
    #[arg(long, conflicts_with = "nonlevel")]
    pub level: bool,
    /// Only non-level algebras.
    #[arg(long)]
    pub nonlevel: bool,
    /// Only hexagonal sextuples (implied by every det filter).
    #[arg(long)]
    pub hexagonal: bool,
    /// det N = 0.
    #[arg(long)]
    pub det_zero: bool,
    /// |det N| = 1.
    #[arg(long)]
    pub det_one: bool,
    /// det N equals this value.
    #[arg(long, allow_negative_numbers = true)]
    pub det_equals: Option<i64>,
    /// The prime divides det N (and det N is nonzero).
    #[arg(long)]
    pub prime_divisor: Option<u64>,
    /// Puncture centred on an axis of the hexagon.
    #[arg(long)]
    pub axis_central: bool,
    /// Puncture at the centre of gravity of the hexagon.
    #[arg(long)]
    pub gravity_central: bool,
    #[arg(long, value_enum)]
    pub shape: Option<Shape>,
    /// Report only the matches minimizing this quantity.
    #[arg(long, value_enum)]
    pub minimize: Option<Objective>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
}

impl ScanArgs {
    fn needs_det(&self) -> bool {
        self.det_zero || self.det_one || self.det_equals.is_some() || self.prime_divisor.is_some()
    }

    fn needs_hexagon(&self) -> bool {
        self.hexagonal || self.needs_det() || self.axis_central || self.gravity_central
    }

    /// Largest triple sum to visit, before any dynamic tightening.
    fn sum_ceiling(&self) -> Result<i64> {
        let mut ceiling = None::<i64>;
        let mut tighten = |v: i64| ceiling = Some(ceiling.map_or(v, |c| c.min(v)));
        if let Some(m) = self.max_s2 {
            tighten(3 * m);
        }
        // a+b+c <= multiplicity+2 and alpha+beta+gamma <= a+b+c-3
        if let Some(m) = self.max_multiplicity {
            tighten(2 * m + 1);
        }
        match (ceiling, self.minimize) {
            (Some(c), _) => Ok(c),
            (None, Some(_)) => Ok(3 * MINIMIZE_CEILING_S2),
            (None, None) => Err(Error::InvalidInput(
                "unbounded scan: give --max-s2, --max-multiplicity or --minimize".into(),
            )),
        }
    }

    fn cheap_filter(&self, p: &AciParams) -> bool {
        let st = p.stats();
        if self.needs_hexagon() && !st.hexagonal {
            return false;
        }
        if let Some(lo) = self.min_s2 {
            if p.triple_sum() < 3 * lo {
                return false;
            }
        }
        if let Some(Shape::DetNFamily) = self.shape {
            let (a, b, c) = (p.a(), p.b(), p.c());
            let (alpha, beta, gamma) = (p.alpha(), p.beta(), p.gamma());
            if !(b == beta + 2 && c == a + beta + 1 && gamma == a - alpha) {
                return false;
            }
        }
        let socle = socle_info(p);
        if self.cm_type.is_some_and(|t| t != socle.cm_type) {
            return false;
        }
        if (self.level && !socle.level) || (self.nonlevel && socle.level) {
            return false;
        }
        if self.axis_central || self.gravity_central {
            let Ok(pc) = classify_puncture(p) else {
                return false;
            };
            if (self.axis_central && !pc.axis_central)
                || (self.gravity_central && !pc.gravity_central)
            {
                return false;
            }
        }
        true
    }

    fn det_filter(&self, det: &BigInt) -> bool {
        if self.det_zero && !det.is_zero() {
            return false;
        }
        if self.det_one && !det.abs().is_one() {
            return false;
        }
        if self.det_equals.is_some_and(|n| *det != BigInt::from(n)) {
            return false;
        }
        if let Some(q) = self.prime_divisor {
            if det.is_zero() || !(det % BigInt::from(q)).is_zero() {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct Match {
    pub params: AciParams,
    pub multiplicity: i64,
    pub det_n: Option<BigInt>,
}

impl Match {
    fn to_json(&self) -> Value {
        let st = self.params.stats();
        json!({
            "params": self.params.as_array(),
            "multiplicity": self.multiplicity,
            "s_plus_2": st.s_plus_2.to_string(),
            "det_n": self.det_n.as_ref().map(BigInt::to_string),
        })
    }

    fn to_line(&self) -> String {
        let mut line = format!(
            "{} s+2={} multiplicity={}",
            self.params,
            self.params.stats().s_plus_2,
            self.multiplicity
        );
        if let Some(d) = &self.det_n {
            let _ = write!(line, " det={d}");
        }
        line
    }
}

/// Valid sextuples with the given triple sum, in lexicographic order.
pub fn sextuples_with_sum(t: i64) -> Vec<AciParams> {
    let mut out = Vec::new();
    for a in 1..=t {
        for b in 1..=t - a {
            for c in 1..=t - a - b {
                let rest = t - a - b - c;
                for alpha in 0..a.min(rest + 1) {
                    for beta in 0..b.min(rest - alpha + 1) {
                        let gamma = rest - alpha - beta;
                        if let Ok(p) = AciParams::new(a, b, c, alpha, beta, gamma) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

fn evaluate(args: &ScanArgs, p: AciParams, mult_cap: Option<i64>) -> Result<Option<Match>> {
    if !args.cheap_filter(&p) {
        return Ok(None);
    }
    let multiplicity = h_vector(&p)?.multiplicity;
    if args.max_multiplicity.is_some_and(|m| multiplicity > m)
        || mult_cap.is_some_and(|m| multiplicity > m)
    {
        return Ok(None);
    }
    let det_n = if args.needs_det() || p.stats().hexagonal {
        Some(det_exact(&build_n(&p)?)?)
    } else {
        None
    };
    if let Some(d) = &det_n {
        if !args.det_filter(d) {
            return Ok(None);
        }
    }
    Ok(Some(Match { params: p, multiplicity, det_n }))
}

/// Evaluates `items` on `jobs` threads, keeping the input order.
fn evaluate_parallel(
    args: &ScanArgs,
    items: Vec<AciParams>,
    mult_cap: Option<i64>,
    jobs: usize,
) -> Result<Vec<Match>> {
    if jobs <= 1 || items.len() < 64 {
        let mut out = Vec::new();
        for p in items {
            if let Some(m) = evaluate(args, p, mult_cap)? {
                out.push(m);
            }
        }
        return Ok(out);
    }
    let chunk = items.len().div_ceil(jobs);
    let results: Vec<Result<Vec<Match>>> = thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    for &p in part {
                        if let Some(m) = evaluate(args, p, mult_cap)? {
                            out.push(m);
                        }
                    }
                    Ok(out)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Invariant("scan worker panicked".into()))))
            .collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// All matches, or the minimizing ones with `--minimize`.
pub fn scan(args: &ScanArgs) -> Result<Vec<Match>> {
    let mut ceiling = args.sum_ceiling()?;
    let jobs = args
        .jobs
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    let mut found: Vec<Match> = Vec::new();
    let mut best: Option<i64> = None;
    let mut t = 4;
    while t <= ceiling {
        let items = sextuples_with_sum(t);
        let hits = evaluate_parallel(args, items, best, jobs)?;
        match args.minimize {
            None => found.extend(hits),
            Some(Objective::Multiplicity) => {
                for m in hits {
                    match best {
                        Some(b) if m.multiplicity > b => {}
                        Some(b) if m.multiplicity == b => found.push(m),
                        _ => {
                            best = Some(m.multiplicity);
                            found = vec![m];
                        }
                    }
                }
                if let Some(b) = best {
                    ceiling = ceiling.min(2 * b + 1);
                }
            }
        }
        t += 1;
    }
    Ok(found)
}

pub fn run(args: &ScanArgs, _settings: &Settings) -> Result<Output> {
    let found = scan(args)?;
    let mut text = String::new();
    for m in &found {
        let _ = writeln!(text, "{}", m.to_line());
    }
    let mut body = json!({
        "matches": found.iter().map(Match::to_json).collect::<Vec<_>>(),
        "count": found.len(),
    });
    if args.minimize.is_some() {
        let min = found.first().map(|m| m.multiplicity);
        match min {
            Some(v) => {
                let _ = writeln!(text, "minimum multiplicity {v} ({} sextuples)", found.len());
            }
            None => {
                let _ = writeln!(text, "no match");
            }
        }
        body["minimum"] = json!({ "multiplicity": min });
    } else {
        let _ = writeln!(text, "{} matches", found.len());
    }
    Ok(Output::new("scan", body, text))
}
