//! `djk`: exact-arithmetic checks for dialgebras and Leibniz-Jordan algebras.
//!
//! Exit codes: 0 all requested checks pass, 1 a check fails, 2 usage or
//! parse errors. Output is deterministic: identical inputs give identical
//! report bytes.

use clap::{Parser, Subcommand};
use djk_core::algebra::{AlgebraTable, Element, Kind};
use djk_core::conformal::psi_embed;
use djk_core::gallery;
use djk_core::identities::{suite, CheckReport, Suite, Witness};
use djk_core::structure::{
    lift_idempotent_linear, lift_idempotent_paper, pierce_decompose, power_chain, ChainKind,
};
use djk_core::tkk::{tau_to_bar, tkk_build, tkk_cur_embed};
use djk_cli::format::{emit_algebra_file, parse_algebra_file, parse_element};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "djk", version, about = "Exact checks for dialgebras and Leibniz-Jordan algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a polynomial identity suite on an algebra file
    Check {
        file: PathBuf,
        /// Suite name: zero-di, diassoc, dialt, leibniz, jordan, lj, jordan-di, operator
        #[arg(long, default_value = "lj")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Build the graded super-structure Leibniz algebra T(J) and emit it
    Tkk {
        file: PathBuf,
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Pierce decomposition with respect to an idempotent
    Pierce {
        file: PathBuf,
        /// Idempotent coordinates, comma separated (e.g. "1,0")
        #[arg(long)]
        idempotent: String,
        #[arg(long)]
        json: bool,
    },
    /// Power chains: full, left, square, cubic, penico
    Chains {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Lift an idempotent modulo the bar ideal
    Lift {
        file: PathBuf,
        /// Approximate idempotent coordinates, comma separated
        #[arg(long)]
        element: String,
        /// paper (closed formula, flag reports actual idempotence) or
        /// linear (solves the correction equation exactly)
        #[arg(long, default_value = "linear")]
        method: String,
        #[arg(long)]
        json: bool,
    },
    /// Embed a 0-dialgebra into a truncated current conformal algebra
    EmbedCur {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        trunc: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the full theorem battery on a file, or on all shipped fixtures
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Usage/parse-level failures come back as Err (exit 2); check failures as
/// Ok(exit 1).
fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Check { file, suite: name, json } => cmd_check(&file, &name, json),
        Cmd::Tkk { file, out, json } => cmd_tkk(&file, out.as_deref(), json),
        Cmd::Pierce { file, idempotent, json } => cmd_pierce(&file, &idempotent, json),
        Cmd::Chains { file, json } => cmd_chains(&file, json),
        Cmd::Lift { file, element, method, json } => cmd_lift(&file, &element, &method, json),
        Cmd::EmbedCur { file, trunc, json } => cmd_embed_cur(&file, trunc, json),
        Cmd::Verify { file, all, json } => cmd_verify(file.as_deref(), all, json),
    }
}

fn load(file: &std::path::Path) -> Result<AlgebraTable, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("{}: {e}", file.display()))?;
    parse_algebra_file(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn q_str(v: &[djk_core::Q]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "identity": w.identity,
        "tuple": w.tuple,
        "value": w.value.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn report_json(r: &CheckReport) -> Value {
    json!({
        "suite": r.suite,
        "pass": r.pass,
        "witnesses": r.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
    })
}

fn print_report(r: &CheckReport) {
    println!("suite {}: {}", r.suite, if r.pass { "PASS" } else { "FAIL" });
    for w in &r.witnesses {
        let tuple: Vec<String> = w.tuple.iter().map(|i| format!("e{}", i + 1)).collect();
        println!("  witness {} at ({}): {}", w.identity, tuple.join(","), q_str(&w.value));
    }
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_check(file: &std::path::Path, name: &str, json: bool) -> Result<ExitCode, String> {
    let s = Suite::parse(name).ok_or_else(|| format!("unknown suite `{name}`"))?;
    let t = load(file)?;
    let r = suite(&t, s).map_err(|e| e.to_string())?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report_json(&r)).unwrap());
    } else {
        print_report(&r);
    }
    Ok(exit_for(r.pass))
}

fn cmd_tkk(file: &std::path::Path, out: Option<&std::path::Path>, json: bool) -> Result<ExitCode, String> {
    let t = load(file)?;
    let tkk = match tkk_build(&t) {
        Ok(tkk) => tkk,
        Err(e) => {
            eprintln!("tkk: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let emitted = emit_algebra_file(&tkk.table);
    if let Some(path) = out {
        std::fs::write(path, &emitted).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "dim": tkk.dim(),
                "j_dim": tkk.j_dim,
                "s0_dim": tkk.s0.dim(),
                "leibniz": true,
                "graded": true,
                "star_automorphism": true,
            }))
            .unwrap()
        );
    } else if let Some(path) = out {
        println!(
            "tkk: dim {} = {} + {} + {} (J+ + S0 + J-), written to {}",
            tkk.dim(),
            tkk.j_dim,
            tkk.s0.dim(),
            tkk.j_dim,
            path.display()
        );
    } else {
        print!("{emitted}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_pierce(file: &std::path::Path, idem: &str, json: bool) -> Result<ExitCode, String> {
    let t = load(file)?;
    let e = Element(parse_element(idem, t.dim).map_err(|e| e.to_string())?);
    let r = match pierce_decompose(&t, &e) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("pierce: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let (d1, dh, d0) = r.dims();
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "dims": {"j1": d1, "j_half": dh, "j0": d0},
                "table_violations": r.table_violations,
            }))
            .unwrap()
        );
    } else {
        println!("pierce dims: J1 = {d1}, J1/2 = {dh}, J0 = {d0}");
        if r.table_violations.is_empty() {
            println!("multiplication table: PASS");
        } else {
            for v in &r.table_violations {
                println!("  violation: {v}");
            }
        }
    }
    Ok(exit_for(r.table_violations.is_empty()))
}

fn cmd_chains(file: &std::path::Path, json: bool) -> Result<ExitCode, String> {
    let t = load(file)?;
    let mut rows = Vec::new();
    for kind in ChainKind::all() {
        let r = power_chain(&t, kind).map_err(|e| e.to_string())?;
        let dims: Vec<usize> = r.chain.iter().map(|s| s.dim()).collect();
        rows.push((kind.name(), dims, r.index, r.stabilized));
    }
    if json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(name, dims, index, stabilized)| {
                json!({"chain": name, "dims": dims, "index": index, "stabilized": stabilized})
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&Value::Array(v)).unwrap());
    } else {
        for (name, dims, index, _) in &rows {
            let dims: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            match index {
                Some(i) => println!("{name}: dims {} | index {i}", dims.join(",")),
                None => println!("{name}: dims {} | does not terminate", dims.join(",")),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lift(file: &std::path::Path, element: &str, method: &str, json: bool) -> Result<ExitCode, String> {
    let t = load(file)?;
    let e0 = Element(parse_element(element, t.dim).map_err(|e| e.to_string())?);
    match method {
        "paper" => {
            let (lift, idempotent) = match lift_idempotent_paper(&t, &e0) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("lift: {e}");
                    return Ok(ExitCode::from(1));
                }
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "method": "paper",
                        "lift": lift.0.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "idempotent": idempotent,
                    }))
                    .unwrap()
                );
            } else {
                println!("lift (closed formula): {}", q_str(&lift.0));
                if idempotent {
                    println!("result is idempotent: PASS");
                } else {
                    println!(
                        "result is NOT idempotent: the closed formula does not \
                         square to itself on this input; use --method linear"
                    );
                }
            }
            Ok(exit_for(idempotent))
        }
        "linear" => {
            let lifted = match lift_idempotent_linear(&t, &e0) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("lift: {e}");
                    return Ok(ExitCode::from(1));
                }
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "method": "linear",
                        "lift": lifted
                            .as_ref()
                            .map(|l| l.0.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
                    }))
                    .unwrap()
                );
            } else {
                match &lifted {
                    Some(l) => println!("lift (verified idempotent): {}", q_str(&l.0)),
                    None => println!("no idempotent lift exists in the correction coset"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown method `{other}` (expected paper or linear)")),
    }
}

fn cmd_embed_cur(file: &std::path::Path, trunc: usize, json: bool) -> Result<ExitCode, String> {
    let t = load(file)?;
    let emb = match psi_embed(&t, trunc) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("embed-cur: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "source_dim": t.dim,
                "hat_dim": emb.ext.hat.dim,
                "current_dim": emb.current.dim,
                "trunc": trunc,
                "injective": true,
                "homomorphism": true,
            }))
            .unwrap()
        );
    } else {
        println!(
            "current embedding verified: dim {} -> dim {} (split null extension dim {}, truncation {})",
            t.dim, emb.current.dim, emb.ext.hat.dim, trunc
        );
        println!("injective: PASS");
        println!("two-sided homomorphism on all basis pairs: PASS");
    }
    Ok(ExitCode::SUCCESS)
}

/// One named pass/fail line of the verify battery.
struct Line {
    name: String,
    pass: bool,
    detail: String,
}

fn battery(t: &AlgebraTable, prefix: &str) -> Vec<Line> {
    let mut lines = Vec::new();
    let mut push = |name: String, pass: bool, detail: String| {
        lines.push(Line { name, pass, detail });
    };
    if t.kind == Kind::Double {
        match suite(t, Suite::ZeroDi) {
            Ok(r) => push(
                format!("{prefix}zero-di"),
                r.pass,
                format!("{} witnesses", r.witnesses.len()),
            ),
            Err(e) => push(format!("{prefix}zero-di"), false, e.to_string()),
        }
        return lines;
    }
    let lj = suite(t, Suite::Lj);
    let jd = suite(t, Suite::JordanDi);
    let (lj_pass, jd_pass) = match (&lj, &jd) {
        (Ok(a), Ok(b)) => (a.pass, b.pass),
        _ => (false, false),
    };
    push(
        format!("{prefix}lj-suite"),
        lj.is_ok(),
        match &lj {
            Ok(r) => format!("pass = {}", r.pass),
            Err(e) => e.to_string(),
        },
    );
    push(
        format!("{prefix}lj-jordan-di-agreement"),
        lj.is_ok() && jd.is_ok() && lj_pass == jd_pass,
        format!("lj = {lj_pass}, jordan-di = {jd_pass}"),
    );
    match djk_core::identities::operator_suite(t) {
        Ok(op) => push(
            format!("{prefix}lj-operator-agreement"),
            op.pass == lj_pass,
            format!("operator = {}", op.pass),
        ),
        Err(e) => push(format!("{prefix}lj-operator-agreement"), false, e.to_string()),
    }
    if !lj_pass {
        return lines;
    }
    match tkk_build(t) {
        Ok(tkk) => push(
            format!("{prefix}tkk-leibniz-graded-star"),
            true,
            format!("dim {} = {} + {} + {}", tkk.dim(), tkk.j_dim, tkk.s0.dim(), tkk.j_dim),
        ),
        Err(e) => push(format!("{prefix}tkk-leibniz-graded-star"), false, e.to_string()),
    }
    match tau_to_bar(t) {
        Ok(r) => push(
            format!("{prefix}tkk-bar-comparison"),
            r.kernel.contains_subspace(&r.i0).unwrap_or(false),
            format!(
                "iso = {}, dim ker = {}, dim I0 = {}",
                r.iso_flag,
                r.kernel.dim(),
                r.i0.dim()
            ),
        ),
        Err(e) => push(format!("{prefix}tkk-bar-comparison"), false, e.to_string()),
    }
    match tkk_cur_embed(t) {
        Ok(r) => push(
            format!("{prefix}tkk-current-embedding"),
            true,
            format!("T(J) dim {} into current dim {}", r.source.dim(), r.current.dim),
        ),
        Err(e) => push(format!("{prefix}tkk-current-embedding"), false, e.to_string()),
    }
    match psi_embed(t, 8) {
        Ok(r) => push(
            format!("{prefix}current-embedding-n8"),
            true,
            format!("current dim {}", r.current.dim),
        ),
        Err(e) => push(format!("{prefix}current-embedding-n8"), false, e.to_string()),
    }
    match djk_core::conformal::adjoin_bar_unit(t, 1) {
        Ok(r) => push(
            format!("{prefix}bar-unit-hull"),
            true,
            format!("hull dim {}", r.current.dim),
        ),
        Err(e) => push(format!("{prefix}bar-unit-hull"), false, e.to_string()),
    }
    lines
}

fn cmd_verify(file: Option<&std::path::Path>, all: bool, json: bool) -> Result<ExitCode, String> {
    let mut lines = Vec::new();
    if all {
        for f in gallery::all_fixtures() {
            let pass = f.verify().is_ok();
            lines.push(Line {
                name: format!("{}/expected-suites", f.name),
                pass,
                detail: String::new(),
            });
            let lj = matches!(suite(&f.table, Suite::Lj), Ok(r) if r.pass);
            if f.table.kind == Kind::Single && lj {
                lines.extend(battery(&f.table, &format!("{}/", f.name)));
            }
        }
    } else {
        let Some(file) = file else {
            return Err("verify needs a FILE or --all".into());
        };
        let t = load(file)?;
        lines.extend(battery(&t, ""));
    }
    let all_pass = lines.iter().all(|l| l.pass);
    if json {
        let v: Vec<Value> = lines
            .iter()
            .map(|l| json!({"check": l.name, "pass": l.pass, "detail": l.detail}))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"pass": all_pass, "checks": v})).unwrap()
        );
    } else {
        for l in &lines {
            let status = if l.pass { "PASS" } else { "FAIL" };
            if l.detail.is_empty() {
                println!("{status} {}", l.name);
            } else {
                println!("{status} {} ({})", l.name, l.detail);
            }
        }
        println!("verify: {}", if all_pass { "PASS" } else { "FAIL" });
    }
    Ok(exit_for(all_pass))
}
