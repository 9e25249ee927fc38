use std::fmt::Write;

use lefschetz::formulas::{closed_det, symmetry_conjecture, CaseTag};
use lefschetz::hilbert::{h_vector, twin_peaks};
use lefschetz::linalg::{permanent_exact, wlp_report, WlpReport};
use lefschetz::matrices::build_z;
use lefschetz::params::{classify_puncture, socle_info};
use lefschetz::splitting::{equivalence_report, generic_splitting_type, jumping_lines};
use lefschetz::{AciParams, Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::output::Output;
use crate::Settings;

/// Why the WLP holds or fails in one characteristic.
struct Verdict {
    holds: Option<bool>,
    reason: &'static str,
}

fn verdict(p: &AciParams, wlp: Option<&WlpReport>, ch: u64) -> Verdict {
    let st = p.stats();
    match wlp {
        Some(r) => Verdict {
            holds: Some(r.wlp_in_char(ch)),
            reason: if ch == 0 { "det N is nonzero" } else { "det N mod p" },
        },
        None if ch != 0 => Verdict {
            holds: None,
            reason: "undetermined in positive characteristic",
        },
        None if !st.semistable => Verdict {
            holds: Some(true),
            reason: "syzygy bundle is not semistable",
        },
        None => Verdict {
            holds: Some(true),
            reason: "a+b+c+alpha+beta+gamma is not divisible by 3",
        },
    }
}

fn verdict_text(v: &Verdict, ch: u64) -> String {
    let state = match v.holds {
        Some(true) => "holds",
        Some(false) => "fails",
        None => "unknown",
    };
    let reason = if v.holds == Some(false) && ch == 0 { "det N = 0" } else { v.reason };
    format!("WLP {state} at char {ch} ({reason})")
}

pub fn run(p: &AciParams, settings: &Settings) -> Result<Output> {
    let stats = p.stats();
    let socle = socle_info(p);
    let hilbert = h_vector(p)?;
    let mut text = String::new();
    let _ = writeln!(text, "ideal {p}");
    let _ = writeln!(
        text,
        "s+2 = {}, A = {}, B = {}, C = {}, M = {}",
        stats.s_plus_2, stats.a_side, stats.b_side, stats.c_side, stats.puncture
    );
    let _ = writeln!(
        text,
        "{}, {}",
        if stats.semistable { "semistable" } else { "non-semistable" },
        if stats.hexagonal { "hexagonal" } else { "not hexagonal" }
    );
    let h: Vec<String> = hilbert.h.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(text, "h-vector ({}), multiplicity {}", h.join(","), hilbert.multiplicity);
    let _ = writeln!(
        text,
        "type {}, socle degrees {:?}, {}",
        socle.cm_type,
        socle.socle_degrees,
        if socle.level { "level" } else { "not level" }
    );

    let mut body = json!({
        "params": p.as_array(),
        "stats": stats,
        "socle": socle,
        "hilbert": hilbert,
    });

    let wlp = if stats.hexagonal {
        let (peak, twin) = twin_peaks(p)?;
        if !twin {
            return Err(Error::Invariant(format!("{p} is hexagonal without twin peaks")));
        }
        body["hilbert"]["peak"] = json!(peak);
        let report = wlp_report(p)?;
        let _ = writeln!(text, "det N = {}", report.det_n);
        let _ = writeln!(text, "det Z = {}", report.det_z);
        let _ = writeln!(text, "factorization {}", report.factorization.render());
        let bad: Vec<String> = report.bad_primes.iter().map(|q| q.to_string()).collect();
        let _ = writeln!(text, "bad primes [{}]", bad.join(", "));
        if report.always_fails {
            let _ = writeln!(text, "always fails: det N = 0");
        }
        body["wlp"] = serde_json::to_value(&report).unwrap_or(Value::Null);
        hexagonal_extras(p, &report, settings, &mut body, &mut text)?;
        Some(report)
    } else {
        None
    };

    let mut per_char = Vec::new();
    for &ch in &settings.characteristics {
        let v = verdict(p, wlp.as_ref(), ch);
        let split = generic_splitting_type(p, ch)?;
        let _ = writeln!(text, "{}", verdict_text(&v, ch));
        let _ = writeln!(
            text,
            "  splitting type {split}{}",
            if split.conditional { " (conditional)" } else { "" }
        );
        let mut entry = json!({
            "characteristic": ch,
            "wlp": v.holds,
            "reason": v.reason,
            "splitting": split,
        });
        if stats.hexagonal {
            let eq = equivalence_report(p, ch)?;
            let _ = writeln!(text, "  reg J = {}", eq.reg_j);
            entry["equivalence"] = serde_json::to_value(&eq).unwrap_or(Value::Null);
        }
        per_char.push(entry);
    }
    body["characteristics"] = Value::Array(per_char);

    let jl = jumping_lines(p);
    let _ = writeln!(
        text,
        "line z=0: {}; line y+z=0: {}",
        jl.z_line,
        jl.yz_line.map_or_else(|| "undetermined".to_string(), |s| s.to_string())
    );
    body["jumping_lines"] = json!({
        "z_line": jl.z_line,
        "yz_line": jl.yz_line.map_or_else(|| json!("undetermined"), |s| json!(s)),
    });
    Ok(Output::new("analyze", body, text))
}

fn hexagonal_extras(
    p: &AciParams,
    report: &WlpReport,
    settings: &Settings,
    body: &mut Value,
    text: &mut String,
) -> Result<()> {
    if !p.has_zero_mixed() {
        let pc = classify_puncture(p)?;
        body["puncture"] = json!(pc);
        let _ = writeln!(
            text,
            "puncture: axis-central {}, gravity-central {}",
            pc.axis_central, pc.gravity_central
        );
    }

    let closed = closed_det(p)?;
    if let Some(v) = &closed.value {
        if v.abs() != report.det_n.abs() || (closed.signed && *v != report.det_n) {
            return Err(Error::Invariant(format!(
                "closed formula {:?} gives {v}, det N is {}",
                closed.case_tag, report.det_n
            )));
        }
    }
    if closed.case_tag != CaseTag::None {
        let tag = serde_json::to_value(closed.case_tag).unwrap_or(Value::Null);
        let _ = writeln!(
            text,
            "closed formula {} (relabeling {:?})",
            tag.as_str().unwrap_or_default(),
            closed.relabeling
        );
    }
    body["closed_det"] = json!(closed);

    let symmetric = p.a() == p.b() && p.alpha() == p.beta();
    if symmetric && (p.c() % 2 == 0 || p.gamma() % 2 == 0) {
        let c = symmetry_conjecture(p)?;
        let value = c.value.to_string();
        let matches = c.integer().as_ref() == Some(&report.det_n);
        let _ = writeln!(text, "CONJECTURE symmetric value {value} (matches det N: {matches})");
        body["conjecture"] = json!({
            "marker": "CONJECTURE",
            "name": "symmetry",
            "value": value,
            "matches_det_n": matches,
        });
    }

    let z = build_z(p)?;
    let per = permanent_exact(&z, settings.permanent_cap)?;
    if let Some(per) = &per {
        let abs = report.det_z.abs();
        let even_puncture = p.hexagon()?.puncture % 2 == 0;
        if per < &abs || (even_puncture && *per != abs) {
            return Err(Error::Invariant(format!("per Z = {per} against |det Z| = {abs}")));
        }
        let _ = writeln!(text, "tilings (per Z) = {per}");
    }
    body["permanent_z"] = json!(per.as_ref().map(BigInt::to_string));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings(chars: &[u64]) -> Settings {
        Settings {
            characteristics: chars.to_vec(),
            json: true,
            budget: 1000,
            permanent_cap: 28,
        }
    }

    fn analyze(v: [i64; 6], chars: &[u64]) -> Value {
        run(&AciParams::from_slice(&v).unwrap(), &settings(chars)).unwrap().json
    }

    #[test]
    fn bad_prime_eleven() {
        let r = analyze([4, 6, 6, 1, 1, 3], &[0, 11, 13]);
        assert_eq!(r["wlp"]["det_n"], "11");
        assert_eq!(r["wlp"]["bad_primes"], json!(["11"]));
        assert_eq!(r["characteristics"][1]["wlp"], false);
        assert_eq!(r["characteristics"][2]["wlp"], true);
        assert_eq!(r["permanent_z"], "11");
    }

    #[test]
    fn non_semistable_holds_at_zero() {
        let r = analyze([3, 3, 3, 2, 2, 2], &[0]);
        let c = &r["characteristics"][0];
        assert_eq!(c["wlp"], true);
        assert_eq!(c["reason"], "syzygy bundle is not semistable");
        assert_eq!(c["splitting"]["p"], 4);
        assert_eq!(c["splitting"]["r"], 6);
        assert!(r.get("wlp").is_none());
    }
}
