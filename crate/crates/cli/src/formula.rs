use clap::{Args, ValueEnum};
use lefschetz::formulas::{
    closed_det, det_poly_interpolate, f_even, f_odd, f_poly, hyperfactorial, mac,
    split_binom_det, symmetry_conjecture, LinearFactors, Parity,
};
use lefschetz::{AciParams, Error, Result};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::output::Output;
use crate::Settings;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaName {
    /// Mac(A,B,C): plane partitions in an A x B x C box.
    Mac,
    /// Hyperfactorial H(n).
    Hyper,
    /// f_{a,b}(c) as a product of linear factors, or its value at c.
    F,
    /// Even part of f_{a,b}.
    Fe,
    /// Odd part of f_{a,b}.
    Fo,
    /// Determinant of the split binomial matrix for (p,q,r,m,n).
    SplitBinom,
    /// Closed determinant of N, if some case applies.
    ClosedDet,
    /// Conjectured determinant for symmetric hexagons.
    SymmetryConjecture,
    /// det N along (a+t,b+t,c+t,alpha,beta,gamma) for t of one parity.
    Interpolate,
}

#[derive(Args, Debug, Clone)]
pub struct FormulaArgs {
    #[arg(value_enum)]
    name: FormulaName,
    /// Integer arguments; `interpolate` also takes `even` or `odd` as its
    /// seventh argument, then a degree bound and an optional number of
    /// held-out checks.
    #[arg(allow_negative_numbers = true, trailing_var_arg = true)]
    args: Vec<String>,
}

fn ints(args: &[String], arity: std::ops::RangeInclusive<usize>, usage: &str) -> Result<Vec<i64>> {
    if !arity.contains(&args.len()) {
        return Err(Error::InvalidInput(format!(
            "expected {usage}, got {} argument(s)",
            args.len()
        )));
    }
    args.iter()
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("not an integer: {s:?}")))
        })
        .collect()
}

fn rational_string(v: &BigRational) -> String {
    v.to_string()
}

fn polynomial_output(name: &str, f: &LinearFactors, at: Option<i64>) -> Output {
    match at {
        Some(c) => {
            let v = rational_string(&f.eval_int(c));
            Output::new("formula", json!({ "name": name, "value": v }), v)
        }
        None => {
            let text = f.display_in("c");
            let body = json!({
                "name": name,
                "factored": text,
                "coefficients": f.expand(),
                "degree": f.degree(),
            });
            Output::new("formula", body, text)
        }
    }
}

pub fn run(args: &FormulaArgs, _settings: &Settings) -> Result<Output> {
    let a = &args.args;
    let value = |name: &str, v: String| Output::new("formula", json!({ "name": name, "value": v }), v);
    match args.name {
        FormulaName::Mac => {
            let v = ints(a, 3..=3, "A B C")?;
            Ok(value("mac", mac(v[0], v[1], v[2])?.to_string()))
        }
        FormulaName::Hyper => {
            let v = ints(a, 1..=1, "n")?;
            let n = u64::try_from(v[0])
                .map_err(|_| Error::InvalidInput(format!("H(n) needs n >= 0, got {}", v[0])))?;
            Ok(value("hyper", hyperfactorial(n).to_string()))
        }
        FormulaName::F | FormulaName::Fe | FormulaName::Fo => {
            let v = ints(a, 2..=3, "a b [c]")?;
            let (name, f) = match args.name {
                FormulaName::F => ("f", f_poly(v[0], v[1])),
                FormulaName::Fe => ("fe", f_even(v[0], v[1])),
                _ => ("fo", f_odd(v[0], v[1])?),
            };
            Ok(polynomial_output(name, &f, v.get(2).copied()))
        }
        FormulaName::SplitBinom => {
            let v = ints(a, 5..=5, "p q r m n")?;
            Ok(value("split-binom", split_binom_det(v[0], v[1], v[2], v[3], v[4])?.to_string()))
        }
        FormulaName::ClosedDet => {
            let v = ints(a, 6..=6, "a b c alpha beta gamma")?;
            let r = closed_det(&AciParams::from_slice(&v)?)?;
            let tag = serde_json::to_value(r.case_tag).unwrap_or(Value::Null);
            let tag = tag.as_str().unwrap_or_default();
            let text = match &r.value {
                Some(x) => format!(
                    "{x} {tag}{} relabeling {:?}",
                    if r.signed { "" } else { " (up to sign)" },
                    r.relabeling
                ),
                None => "none".to_string(),
            };
            let mut body = json!(r);
            body["name"] = json!("closed-det");
            Ok(Output::new("formula", body, text))
        }
        FormulaName::SymmetryConjecture => {
            let v = ints(a, 6..=6, "a b c alpha beta gamma")?;
            let c = symmetry_conjecture(&AciParams::from_slice(&v)?)?;
            let s = rational_string(&c.value);
            let body = json!({
                "name": "symmetry-conjecture",
                "marker": "CONJECTURE",
                "value": s,
            });
            Ok(Output::new("formula", body, format!("CONJECTURE {s}")))
        }
        FormulaName::Interpolate => interpolate(a),
    }
}

fn interpolate(a: &[String]) -> Result<Output> {
    let usage = "a b c alpha beta gamma even|odd degree [checks]";
    if !(8..=9).contains(&a.len()) {
        return Err(Error::InvalidInput(format!("expected {usage}")));
    }
    let parity = match a[6].as_str() {
        "even" => Parity::Even,
        "odd" => Parity::Odd,
        other => return Err(Error::InvalidInput(format!("parity must be even or odd, got {other:?}"))),
    };
    let mut rest: Vec<String> = a[..6].to_vec();
    rest.extend_from_slice(&a[7..]);
    let v = ints(&rest, 7..=8, usage)?;
    let degree = usize::try_from(v[6])
        .map_err(|_| Error::InvalidInput("degree bound must be non-negative".into()))?;
    let checks = v.get(7).map_or(Ok(2), |&c| usize::try_from(c))
        .map_err(|_| Error::InvalidInput("check count must be non-negative".into()))?;
    let r = det_poly_interpolate([v[0], v[1], v[2]], [v[3], v[4], v[5]], parity, degree, checks)?;
    let text = r.factored.display_in("t");
    let body = json!({
        "name": "interpolate",
        "parity": parity,
        "factored": text,
        "coefficients": r.polynomial,
        "samples": r.samples.iter().map(|(t, d)| json!([t, d.to_string()])).collect::<Vec<_>>(),
        "checks": r.checks.iter().map(|(t, d)| json!([t, d.to_string()])).collect::<Vec<_>>(),
    });
    Ok(Output::new("formula", body, text))
}
