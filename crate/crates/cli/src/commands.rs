use braidtwist::bennequin::{
    check_chi_bookkeeping, check_fdtc_bennequin, check_qp_fdtc_bound, check_writhe_bennequin,
    qp_build, qp_chi4, qp_slice_genus, InequalityReport, QuasipositiveFactorization, Status,
};
use braidtwist::decompose::{decompose_braid, verify_decomposition, DecompositionRecord};
use braidtwist::dehornoy::{compare, dehornoy_floor};
use braidtwist::fdtc::{convergence_table, defect_search, floor_interval, power_for_tolerance};
use braidtwist::garside::{are_equal, to_normal_form};
use braidtwist::interval::parse_rational;
use braidtwist::{BraidWord, Limits, RationalInterval};
use serde_json::{json, Value};

use crate::{CliError, Command, Common};

/// A finished command: the JSON report, CSV rows when the command has a
/// tabular form, and the process exit code.
pub struct Output {
    pub report: Value,
    pub csv_rows: Option<Vec<[String; 4]>>,
    pub exit_code: u8,
}

impl Output {
    fn ok(command: &str, inputs: Value, result: Value) -> Self {
        Output {
            report: json!({
                "command": command,
                "inputs": inputs,
                "result": result,
                "status": "ok",
            }),
            csv_rows: None,
            exit_code: 0,
        }
    }
}

pub fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Eval(a) | Command::Floor(a) | Command::Decompose(a) => &a.common,
        Command::Compare(a) => &a.common,
        Command::Fdtc(a) => &a.common,
        Command::Convergence(a) => &a.common,
        Command::Defect(a) => &a.common,
        Command::Qp(a) => &a.common,
    }
}

pub fn run(cmd: &Command) -> Result<Output, CliError> {
    let limits = Limits::default();
    match cmd {
        Command::Eval(a) => eval(&BraidWord::parse(&a.word, a.n)?),
        Command::Compare(a) => {
            let u = BraidWord::parse(&a.word, a.n)?;
            let v = BraidWord::parse(&a.word2, a.n)?;
            let rel = compare(&u, &v, &limits)?.as_relation();
            Ok(Output::ok(
                "compare",
                json!({"n": a.n, "word": u.to_string(), "word2": v.to_string()}),
                json!({"relation": rel}),
            ))
        }
        Command::Floor(a) => {
            let u = BraidWord::parse(&a.word, a.n)?;
            let floor = dehornoy_floor(&u, &limits)?;
            Ok(Output::ok("floor", word_inputs(&u), json!({"floor": floor})))
        }
        Command::Fdtc(a) => {
            let u = BraidWord::parse(&a.word, a.n)?;
            let k = match &a.tol {
                Some(t) => power_for_tolerance(parse_rational(t)?)?,
                None => a.k,
            };
            let iv = floor_interval(&u, k, &limits)?;
            let floor = floor_of(&iv, k);
            let mut inputs = word_inputs(&u);
            inputs["k"] = json!(k);
            if let Some(t) = &a.tol {
                inputs["tol"] = json!(t);
            }
            let mut out = Output::ok(
                "fdtc",
                inputs,
                json!({"k": k, "floor": floor, "interval": iv, "text": iv.to_string()}),
            );
            out.csv_rows = Some(vec![csv_row(k, floor, &iv)]);
            Ok(out)
        }
        Command::Convergence(a) => {
            let u = BraidWord::parse(&a.word, a.n)?;
            let rows = convergence_table(&u, a.kmax, &limits)?;
            let mut inputs = word_inputs(&u);
            inputs["kmax"] = json!(a.kmax);
            let table: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "floor": r.floor,
                        "lo": r.interval.lo().to_string(),
                        "hi": r.interval.hi().to_string(),
                    })
                })
                .collect();
            let mut out = Output::ok("convergence", inputs, json!({"rows": table}));
            out.csv_rows = Some(rows.iter().map(|r| csv_row(r.k, r.floor, &r.interval)).collect());
            Ok(out)
        }
        Command::Decompose(a) => {
            let u = BraidWord::parse(&a.word, a.n)?;
            let (word, d) = decompose_braid(&u, &limits)?;
            let verified = are_equal(&word, &u)? && verify_decomposition(&d, &word);
            Ok(Output::ok(
                "decompose",
                word_inputs(&u),
                json!({
                    "sigma1_positive_word": word.to_string(),
                    "decomposition": DecompositionRecord::from(&d),
                    "verified": verified,
                }),
            ))
        }
        Command::Defect(a) => {
            let search = defect_search(a.n, a.samples, a.len, a.k, a.seed, &limits)?;
            Ok(Output::ok(
                "defect",
                json!({"n": a.n, "samples": a.samples, "len": a.len, "k": a.k, "seed": a.seed}),
                json!(search),
            ))
        }
        Command::Qp(a) => qp(a.n, &a.factors, a.k, &limits),
    }
}

fn word_inputs(u: &BraidWord) -> Value {
    json!({"n": u.strands(), "word": u.to_string()})
}

/// Recovers `⌊u^k⌋` from the interval `[f/k, (f+1)/k]`.
fn floor_of(iv: &RationalInterval, k: u64) -> i64 {
    (iv.lo() * braidtwist::Rational::from_integer(k as i64)).to_integer()
}

fn csv_row(k: u64, floor: i64, iv: &RationalInterval) -> [String; 4] {
    [k.to_string(), floor.to_string(), iv.lo().to_string(), iv.hi().to_string()]
}

fn eval(u: &BraidWord) -> Result<Output, CliError> {
    let nf = to_normal_form(u);
    Ok(Output::ok(
        "eval",
        word_inputs(u),
        json!({
            "writhe": u.writhe(),
            "permutation": u.permutation(),
            "components": u.closure_components(),
            "pure": u.is_pure(),
            "infimum": nf.infimum,
            "supremum": nf.supremum(),
            "canonical_length": nf.canonical_length(),
            "normal_form": nf,
        }),
    ))
}

fn qp(n: usize, text: &str, k: u64, limits: &Limits) -> Result<Output, CliError> {
    let f = QuasipositiveFactorization::parse(text, n)?;
    let mut checks: Vec<InequalityReport> = vec![check_writhe_bennequin(&f)];
    let mut notes = Vec::new();
    if n >= 3 {
        checks.push(check_fdtc_bennequin(&f, k, limits)?);
        if f.is_empty() {
            notes.push("fdtc_quasipositive_bound skipped: empty factorization");
        } else {
            checks.push(check_qp_fdtc_bound(&f, k, limits)?);
        }
    } else {
        notes.push("fdtc checks skipped: they need at least 3 strands");
    }
    checks.push(check_chi_bookkeeping(&f, k)?);
    let status = if checks.iter().any(|c| c.status == Status::Violated) {
        Status::Violated
    } else if checks.iter().all(|c| c.status == Status::Verified) {
        Status::Verified
    } else {
        Status::Inconclusive
    };
    let built = qp_build(&f);
    Ok(Output {
        report: json!({
            "command": "qp",
            "inputs": {"n": n, "factors": f.to_string(), "k": k},
            "result": {
                "braid": built.to_string(),
                "factors": f.len(),
                "chi4": qp_chi4(&f),
                "slice_genus": qp_slice_genus(&f),
                "checks": checks,
                "notes": notes,
            },
            "status": status,
        }),
        csv_rows: None,
        exit_code: if status == Status::Violated { 1 } else { 0 },
    })
}
