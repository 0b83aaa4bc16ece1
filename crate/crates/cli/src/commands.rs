use std::fmt::Write as _;

use coxweight::algebra::{factor_cyclotomic, IntPolynomial};
use coxweight::criterion::{check_family, weight_coxeter_product, CriterionError};
use coxweight::json;
use coxweight::posets::{Poset, PosetError, PosetFamily};
use coxweight::weights::{
    factorizations, is_prime, milnor_orlik, TableError, Weight, WeightError, WeightFamily,
    WeightTable,
};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy)]
pub struct Options {
    pub json: bool,
    pub ascii: bool,
}

pub struct Output {
    pub text: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn data(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

impl From<WeightError> for Failure {
    fn from(e: WeightError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<TableError> for Failure {
    fn from(e: TableError) -> Self {
        match e {
            TableError::Missing { .. } => Failure::usage(e.to_string()),
            TableError::Malformed(_) => Failure::data(e.to_string()),
        }
    }
}

impl From<CriterionError> for Failure {
    fn from(e: CriterionError) -> Self {
        Failure::usage(e.to_string())
    }
}

type CmdResult = Result<Output, Failure>;

fn emit(opts: Options, value: Value, text: String, code: u8) -> Output {
    let text = if opts.json {
        let mut s = serde_json::to_string_pretty(&value).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    };
    Output { text, code }
}

fn parse_weight(spec: &str) -> Result<Weight, Failure> {
    spec.parse::<Weight>().map_err(Failure::from)
}

fn factored(p: &IntPolynomial, opts: Options) -> String {
    let (f, rem) = factor_cyclotomic(p);
    let s = f.to_factored_string(opts.ascii);
    if rem.is_one() {
        s
    } else {
        format!("{s} · ({rem})")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn line(out: &mut String, label: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{label:<18}{value}");
}

pub fn weight_info(spec: &str, opts: Options) -> CmdResult {
    let table = WeightTable::from_env()?;
    let w = parse_weight(spec)?;
    let c = w.canonicalize();
    let mu = w.milnor_number();
    let valid = w.is_weight();
    let weak = w.is_weak_weight();
    let q = w.q_milnor();
    let q_expanded = q.expand().ok();
    let trace = milnor_orlik(&w).ok();
    let coxeter = weight_coxeter_product(&w).ok();
    let prime = if valid { is_prime(&w).ok() } else { None };
    let name = if valid { table.describe(&c) } else { None };
    let charge = w.central_charge();
    let (cy_num, cy_den) = w.cy_dimension();

    let mut text = String::new();
    line(&mut text, "weight", &w);
    line(&mut text, "canonical", &c);
    line(&mut text, "m", c.len());
    line(&mut text, "μ", &mu);
    line(&mut text, "Weight", yes_no(valid));
    line(&mut text, "weak Weight", yes_no(weak));
    match &q_expanded {
        Some(p) => line(&mut text, "q-Milnor", p.display_with("q")),
        None => line(&mut text, "q-Milnor", "not a polynomial"),
    }
    line(&mut text, "q-Milnor factored", q.to_factored_string(opts.ascii));
    line(&mut text, "central charge", charge);
    line(&mut text, "CY dimension", format!("{cy_num}/{cy_den}"));
    if let Some(t) = &trace {
        let u: Vec<String> = t.u.iter().map(u64::to_string).collect();
        let chi: Vec<String> = t.chi.iter().map(|(j, v)| format!("χ{j}={v}")).collect();
        let s: Vec<String> = t.s.iter().map(|(j, v)| format!("s{j}={v}")).collect();
        line(&mut text, "u", u.join(","));
        line(&mut text, "χ", chi.join(" "));
        line(&mut text, "s", s.join(" "));
        line(&mut text, "monodromy", t.result.to_factored_string(opts.ascii));
    }
    match &coxeter {
        Some(p) => line(&mut text, "Coxeter form", p.to_factored_string(opts.ascii)),
        None => line(&mut text, "Coxeter form", "n/a"),
    }
    line(
        &mut text,
        "prime",
        match prime {
            Some(b) => yes_no(b),
            None => "n/a",
        },
    );
    if let Some(n) = &name {
        line(&mut text, "name", n);
    }

    let value = json!({
        "weight": w.to_string(),
        "canonical": c.to_string(),
        "m": c.len(),
        "milnor_number": mu.to_string(),
        "is_weight": valid,
        "is_weak_weight": weak,
        "q_milnor": {
            "coeffs": q_expanded.as_ref().map(json::coeffs),
            "factored": q.to_factored_string(opts.ascii),
        },
        "central_charge": charge.to_string(),
        "cy_dimension": [cy_num, cy_den],
        "milnor_orlik": trace.as_ref().map(|t| json!({
            "u": t.u,
            "chi": t.chi.iter().map(|(j, v)| (j.to_string(), Value::String(v.to_string()))).collect::<Map<_, _>>(),
            "s": t.s.iter().map(|(j, v)| (j.to_string(), json::bigint(v))).collect::<Map<_, _>>(),
            "factored": t.result.to_factored_string(opts.ascii),
        })),
        "coxeter_polynomial": coxeter.as_ref().and_then(|p| p.expand().ok()).map(|p| json::polynomial(&p, opts.ascii)),
        "prime": prime,
        "name": name,
    });
    Ok(emit(opts, value, text, 0))
}

pub fn weight_product(a: &str, b: &str, opts: Options) -> CmdResult {
    let p = parse_weight(a)?.product(&parse_weight(b)?);
    Ok(emit(opts, json!({ "product": p.to_string() }), format!("{p}\n"), 0))
}

pub fn weight_factor(spec: &str, opts: Options) -> CmdResult {
    let table = WeightTable::from_env()?;
    let w = parse_weight(spec)?;
    if !w.is_weight() {
        return Err(WeightError::NotAWeight(w.to_string()).into());
    }
    if w.canonicalize().is_empty() {
        return Ok(emit(opts, json!({ "unit": true, "prime": false, "factorizations": [] }), "unit\n".into(), 0));
    }
    if is_prime(&w)? {
        return Ok(emit(opts, json!({ "unit": false, "prime": true, "factorizations": [] }), "prime\n".into(), 0));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for f in factorizations(&w)? {
        let names: Vec<Option<String>> = f.factors().iter().map(|p| table.name_of(p)).collect();
        let shown: Vec<String> = f
            .factors()
            .iter()
            .zip(&names)
            .map(|(p, n)| n.clone().unwrap_or_else(|| p.paren()))
            .collect();
        let _ = writeln!(text, "{f}  {}", shown.join("×"));
        rows.push(json!({
            "factors": f.factors().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "names": names,
        }));
    }
    Ok(emit(opts, json!({ "unit": false, "prime": false, "factorizations": rows }), text, 0))
}

fn load_poset(family: &str, target: &str, seed_cap: usize) -> Result<Poset, Failure> {
    if family == "file" {
        let text = std::fs::read_to_string(target)
            .map_err(|e| Failure::usage(format!("cannot read {target}: {e}")))?;
        return Poset::from_json(&text).map_err(|e| Failure::data(format!("{target}: {e}")));
    }
    let fam: PosetFamily = family.parse().map_err(|e: PosetError| Failure::usage(e.to_string()))?;
    let n: usize = target
        .parse()
        .map_err(|_| Failure::usage(format!("expected an index, got {target:?}")))?;
    fam.generate(n, seed_cap).map_err(|e| Failure::usage(e.to_string()))
}

pub fn poset_gen(family: &str, target: &str, seed_cap: usize) -> CmdResult {
    let p = load_poset(family, target, seed_cap)?;
    Ok(Output { text: format!("{}\n", p.to_json()), code: 0 })
}

pub fn poset_coxpoly(family: &str, target: &str, seed_cap: usize, opts: Options) -> CmdResult {
    let p = load_poset(family, target, seed_cap)?;
    let cp = p.coxeter_polynomial();
    let mut value = json::polynomial(&cp, opts.ascii);
    value["size"] = json!(p.len());
    let text = format!("{cp}\n{}\n", factored(&cp, opts));
    Ok(emit(opts, value, text, 0))
}

pub fn criterion(
    posets: &str,
    weights: &str,
    range: impl Fn(usize) -> Result<(usize, usize), Failure>,
    seed_cap: usize,
    opts: Options,
) -> CmdResult {
    let pf: PosetFamily = posets.parse().map_err(|e: PosetError| Failure::usage(e.to_string()))?;
    let wf: WeightFamily = weights.parse()?;
    let (lo, hi) = range(wf.min_n() as usize)?;
    let rows = check_family(pf, wf, lo..=hi, seed_cap)?;
    let all = rows.iter().all(|(_, r)| r.matches);

    let mut text = format!("{:>3}  {:>8}  {:>8}  result\n", "n", "size", "μ");
    for (n, r) in &rows {
        let _ = write!(
            text,
            "{n:>3}  {:>8}  {:>8}  {}",
            r.poset_size,
            r.milnor_number,
            if r.matches { "MATCH" } else { "MISMATCH" }
        );
        if !r.diagnostics.is_empty() {
            let _ = write!(text, "  ({})", r.diagnostics.join("; "));
        }
        text.push('\n');
    }
    let value = json!({
        "posets": pf.name(),
        "weights": wf.name(),
        "all_match": all,
        "rows": rows.iter().map(|(n, r)| {
            let mut v = r.to_json(opts.ascii);
            v["n"] = json!(n);
            v
        }).collect::<Vec<_>>(),
    });
    Ok(emit(opts, value, text, if all { 0 } else { 1 }))
}

pub fn family(
    family: &str,
    range: impl Fn(usize) -> Result<(usize, usize), Failure>,
    opts: Options,
) -> CmdResult {
    let table = WeightTable::from_env()?;
    let wf: WeightFamily = family.parse()?;
    let (lo, hi) = range(wf.min_n() as usize)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for n in lo..=hi {
        let w = wf.weight(n as u64)?;
        let valid = w.is_weight();
        let mu = w.milnor_integer().map(|m| m.to_string()).unwrap_or_else(|| w.milnor_number().to_string());
        let (cy_num, cy_den) = w.cy_dimension();
        let name = if valid { table.describe(&w) } else { None };
        let note = w.is_empty().then_some("unit Weight");
        let _ = write!(
            text,
            "{n:>3}  ({w})  μ={mu}  weight={}  weak={}  cy={cy_num}/{cy_den}",
            yes_no(valid),
            yes_no(w.is_weak_weight())
        );
        if let Some(name) = &name {
            let _ = write!(text, "  {name}");
        }
        if let Some(note) = note {
            let _ = write!(text, "  [{note}]");
        }
        text.push('\n');
        rows.push(json!({
            "n": n,
            "weight": w.to_string(),
            "milnor_number": mu.parse::<BigInt>().map(|m| json::bigint(&m)).unwrap_or(Value::String(mu.clone())),
            "is_weight": valid,
            "is_weak_weight": w.is_weak_weight(),
            "cy_dimension": [cy_num, cy_den],
            "name": name,
            "note": note,
        }));
    }
    Ok(emit(opts, json!({ "family": wf.name(), "rows": rows }), text, 0))
}

pub fn tables_verify(opts: Options) -> CmdResult {
    let table = WeightTable::from_env()?;
    let report = table.verify();
    let mut text = String::new();
    for row in report.failures() {
        let _ = writeln!(text, "FAIL {}: {}", row.name, row.failures.join("; "));
    }
    let failed = report.failures().count();
    let _ = writeln!(text, "{} rows checked, {failed} failed", report.rows.len());
    let value = json!({
        "passed": report.passed(),
        "checked": report.rows.len(),
        "failures": report.failures().map(|r| json!({ "name": r.name, "failures": r.failures })).collect::<Vec<_>>(),
    });
    Ok(emit(opts, value, text, if report.passed() { 0 } else { 1 }))
}
