use std::fmt::Write;
use std::path::PathBuf;

use clap::Args;
use lefschetz::tilings::{
    bucket_sign, build_region, first_tiling, for_each_tiling, render_svg, signed_enumeration_in, Tiling,
};
use lefschetz::{Error, Result};
use serde_json::json;

use crate::output::Output;
use crate::{Settings, Sextuple};

/// Triangle edge length in SVG user units.
const SVG_UNIT: f64 = 24.0;

#[derive(Args, Debug, Clone)]
#[group(id = "mode", required = true, multiple = false)]
pub struct Mode {
    /// Number of tilings.
    #[arg(long)]
    count: bool,
    /// Signed path and matching totals with per-bucket counts.
    #[arg(long)]
    signed: bool,
    /// Every tiling as a list of (up, down) cell pairs.
    #[arg(long)]
    list: bool,
    /// Write an SVG of the first tiling (or the bare region) to this file.
    #[arg(long, value_name = "FILE")]
    render: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct TilingArgs {
    #[command(flatten)]
    sextuple: Sextuple,
    #[command(flatten)]
    mode: Mode,
}

pub fn run(args: &TilingArgs, settings: &Settings) -> Result<Output> {
    let p = args.sextuple.params()?;
    let region = build_region(&p)?;
    let budget = settings.budget;
    let params = p.as_array();

    if args.mode.count {
        let mut n = 0u64;
        let nodes = for_each_tiling(&region, budget, |_| n += 1)?;
        let body = json!({ "params": params, "count": n.to_string(), "nodes": nodes });
        return Ok(Output::new("tilings", body, format!("{n}\n")));
    }

    if args.mode.signed {
        let sc = signed_enumeration_in(&region, budget)?;
        let mut text = String::new();
        let _ = writeln!(text, "signed paths {}", sc.signed_total_paths);
        let _ = writeln!(text, "signed matchings {}", sc.signed_total_matchings);
        let _ = writeln!(text, "unsigned {}", sc.unsigned_total);
        let mut buckets = Vec::new();
        for (&k, &n) in &sc.per_bucket {
            let sign = bucket_sign(&region.hexagon, k);
            let _ = writeln!(text, "bucket {k}: {n} (sign {sign:+})");
            buckets.push(json!({ "k": k, "count": n.to_string(), "sign": sign }));
        }
        match sc.sign_constant {
            Some(c) => {
                let _ = writeln!(text, "sign constant {c:+}");
            }
            None if sc.unsigned_total == 0 => {}
            None => {
                return Err(Error::Invariant(format!(
                    "sgn(pi) sgn(lambda) varies across tilings of {p}"
                )))
            }
        }
        let body = json!({
            "params": params,
            "signed_total_paths": sc.signed_total_paths.to_string(),
            "signed_total_matchings": sc.signed_total_matchings.to_string(),
            "unsigned_total": sc.unsigned_total.to_string(),
            "buckets": buckets,
            "sign_constant": sc.sign_constant,
            "nodes": sc.nodes,
        });
        return Ok(Output::new("tilings", body, text));
    }

    if args.mode.list {
        let mut all: Vec<Tiling> = Vec::new();
        let nodes = for_each_tiling(&region, budget, |t| all.push(t.clone()))?;
        let mut text = String::new();
        for t in &all {
            let pairs: Vec<String> = t.lozenges().iter().map(|(u, d)| format!("{u}-{d}")).collect();
            let _ = writeln!(text, "{}", pairs.join(" "));
        }
        let body = json!({ "params": params, "tilings": all, "nodes": nodes });
        return Ok(Output::new("tilings", body, text));
    }

    let path = args
        .mode
        .render
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("no tilings mode selected".into()))?;
    let first = first_tiling(&region, budget)?;
    let svg = render_svg(&region, first.as_ref(), SVG_UNIT);
    std::fs::write(path, &svg)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
    let body = json!({
        "params": params,
        "svg": path.display().to_string(),
        "tiling": first,
    });
    let text = format!("wrote {}\n", path.display());
    Ok(Output::new("tilings", body, text))
}
