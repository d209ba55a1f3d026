//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns what to print together with the exit code, so the
//! binary stays a thin wrapper and the whole surface is testable in-process.
//!
//! Exit codes: 0 success, 1 domain error (bad input, unit ideal, violated
//! precondition), 2 resource limit, 3 internal consistency violation.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::betti::{betti_table_of, expand_orbits, oracle_invariants};
use crate::chains::{chain_profile, reg_chain, ChainStrategy};
use crate::check::{check_all, random_corpus, DEFAULT_SEED};
use crate::error::{Error, ErrorKind, Result};
use crate::ext::{
    ext_character_quotient, invariants, is_cohen_macaulay, sequentially_cm_filtration,
};
use crate::ideal::{IdealSpec, IdealSpecJson};
use crate::linalg::Field;
use crate::partition::Partition;
use crate::powers::{
    b_const, has_linear_resolution, is_symmetric_shifted, is_symmetric_strongly_shifted,
    power_ideal, power_reg_rows, powers_support,
};
use crate::zset::{z_set, z_set_entries};

#[derive(Debug, Parser)]
#[command(
    name = "symreg",
    version,
    about = "Invariants of S_n-invariant monomial ideals"
)]
pub struct CommandRequest {
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pub pretty: bool,
    /// Compact JSON output (the default).
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Ideal JSON file, e.g. {"n": 3, "generators": [[2,1,1],[4,2]]}. A value
    /// starting with '{' is read as inline JSON.
    #[arg(short = 'i', long = "ideal", value_name = "FILE")]
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    /// Parts of w, comma separated.
    #[arg(short = 'w', value_delimiter = ',', required = true)]
    pub w: Vec<usize>,
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'd', default_value_t = 1)]
    pub d: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// reg, pdim and depth with witness pairs.
    Invariants(IdealArg),
    /// The set Z(X) with each pair's reg and pdim contribution.
    Zset(IdealArg),
    /// Characters of Ext^j(S/I_X, S).
    Ext {
        #[command(flatten)]
        ideal: IdealArg,
        /// Cohomological degree; every j when omitted.
        #[arg(long = "j")]
        j: Option<usize>,
        /// Truncation bound on |v|.
        #[arg(long, default_value_t = 3)]
        vbound: usize,
    },
    /// Cohen–Macaulay test with diagnostics.
    Cm(IdealArg),
    /// The saturation filtration X^{:0} ⊆ X^{:1} ⊆ ... ⊆ S.
    ScmFiltration(IdealArg),
    /// Powers of I_w.
    Powers {
        #[command(flatten)]
        args: PowerArgs,
        /// Generators of I_w^d (the default).
        #[arg(long, group = "what")]
        support: bool,
        #[arg(long, group = "what")]
        reg: bool,
        /// Exact reg against d|w| + b(w).
        #[arg(long, group = "what")]
        asymptotic: bool,
        #[arg(long, group = "what")]
        shifted: bool,
    },
    /// reg(I_{X_n}) along a chain.
    Chain {
        /// JSON file with "generators"; "n" is ignored.
        #[arg(short = 'x', long = "chain", value_name = "FILE")]
        chain: String,
        /// Inclusive range A:B of n.
        #[arg(long = "n-range", value_name = "A:B")]
        n_range: String,
        /// Always use the Z-set.
        #[arg(long, conflicts_with = "verify")]
        exact: bool,
        /// Past the threshold, compute both and fail on disagreement.
        #[arg(long)]
        verify: bool,
    },
    /// Shiftedness and linear resolution.
    Shifted(IdealArg),
    /// Betti numbers by brute force.
    Betti {
        #[command(flatten)]
        ideal: IdealArg,
        /// Field characteristic: 0 or a prime.
        #[arg(long, default_value_t = 2)]
        field: u64,
        /// The Betti table (the default).
        #[arg(long, group = "what")]
        table: bool,
        /// Only reg and pdim.
        #[arg(long, group = "what")]
        invariants: bool,
    },
    /// Cross-check the Z-set calculus against independent computations.
    Check {
        /// Check one ideal; otherwise a random corpus.
        #[arg(short = 'i', long = "ideal", value_name = "FILE")]
        ideal: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Size of the random corpus.
        #[arg(long, default_value_t = 25)]
        random: usize,
        #[arg(long, default_value_t = 2)]
        field: u64,
    },
}

/// What to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Domain => 1,
        ErrorKind::Resource => 2,
        ErrorKind::Internal => 3,
    }
}

fn error_json(e: &Error) -> Value {
    let class = match e.kind() {
        ErrorKind::Domain => "domain",
        ErrorKind::Resource => "resource",
        ErrorKind::Internal => "internal",
    };
    json!({"error": {"kind": e.code(), "class": class, "message": e.to_string()}})
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match CommandRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome {
                stdout,
                stderr,
                code,
            };
        }
    };
    execute(&request)
}

/// Runs an already parsed request.
pub fn execute(request: &CommandRequest) -> Outcome {
    let mut warnings = Vec::new();
    match dispatch(request, &mut warnings) {
        Ok(Rendered { json, text, code }) => {
            let stdout = match (request.pretty, text) {
                (true, Some(t)) => t,
                (true, None) => format!("{}\n", serde_json::to_string_pretty(&json).expect("json")),
                (false, _) => format!("{json}\n"),
            };
            Outcome {
                stdout,
                stderr: render_warnings(&warnings),
                code,
            }
        }
        Err(e) => {
            let mut stderr = render_warnings(&warnings);
            let _ = writeln!(stderr, "error: {e}");
            Outcome {
                stdout: format!("{}\n", error_json(&e)),
                stderr,
                code: exit_code(&e),
            }
        }
    }
}

fn render_warnings(w: &[String]) -> String {
    w.iter().map(|m| format!("warning: {m}\n")).collect()
}

struct Rendered {
    json: Value,
    text: Option<String>,
    code: i32,
}

fn ok(json: impl Serialize) -> Result<Rendered> {
    Ok(Rendered {
        json: serde_json::to_value(json).expect("serializable"),
        text: None,
        code: 0,
    })
}

fn ok_text(json: impl Serialize, text: String) -> Result<Rendered> {
    let mut r = ok(json)?;
    r.text = Some(text);
    Ok(r)
}

fn read_source(source: &str) -> Result<String> {
    if source.trim_start().starts_with('{') {
        return Ok(source.to_string());
    }
    fs::read_to_string(source)
        .map_err(|e| Error::InvalidInput(format!("cannot read {source}: {e}")))
}

fn load_ideal(source: &str, warnings: &mut Vec<String>) -> Result<IdealSpec> {
    let loaded = IdealSpec::from_json_str(&read_source(source)?)?;
    warnings.extend(loaded.warnings);
    Ok(loaded.ideal)
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidInput(format!("expected A:B with A <= B, got {s:?}"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b || a == 0 {
        return Err(bad());
    }
    Ok((a, b))
}

fn dispatch(req: &CommandRequest, warnings: &mut Vec<String>) -> Result<Rendered> {
    match &req.command {
        Command::Invariants(a) => {
            let x = load_ideal(&a.ideal, warnings)?;
            let r = invariants(&x)?;
            let json = json!({
                "n": r.n,
                "reg": r.reg,
                "pdim": r.pdim,
                "depth": r.depth,
                "quotient_reg": r.quotient_reg(),
                "quotient_pdim": r.quotient_pdim(),
                "witnesses": {"reg": r.reg_witnesses, "pdim": r.pdim_witnesses},
            });
            let show = |v: &[crate::ZPair]| {
                v.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let text = format!(
                "reg(I) = {}\npdim(I) = {}\ndepth(S/I) = {}\nreg attained at {}\npdim attained at {}\n",
                r.reg,
                r.pdim,
                r.depth,
                show(&r.reg_witnesses),
                show(&r.pdim_witnesses)
            );
            ok_text(json, text)
        }
        Command::Zset(a) => {
            let x = load_ideal(&a.ideal, warnings)?;
            let entries = z_set_entries(&z_set(&x)?, x.n());
            let mut text = String::from("z\tl\treg_term\tpdim_term\n");
            for e in &entries {
                let _ = writeln!(text, "{}\t{}\t{}\t{}", e.z, e.l, e.reg_term, e.pdim_term);
            }
            ok_text(entries, text)
        }
        Command::Ext { ideal, j, vbound } => {
            let x = load_ideal(&ideal.ideal, warnings)?;
            let js: Vec<usize> = match j {
                Some(j) => vec![*j],
                None => (0..=x.n()).collect(),
            };
            let mut out = Vec::new();
            for j in js {
                out.push(json!({"j": j, "character": ext_character_quotient(&x, j, *vbound)?}));
            }
            ok(out)
        }
        Command::Cm(a) => ok(is_cohen_macaulay(&load_ideal(&a.ideal, warnings)?)?),
        Command::ScmFiltration(a) => {
            let chain = sequentially_cm_filtration(&load_ideal(&a.ideal, warnings)?)?;
            let text = chain
                .iter()
                .enumerate()
                .map(|(i, x)| format!("X^:{i} = {x}\n"))
                .collect();
            ok_text(
                chain.iter().map(IdealSpec::to_json).collect::<Vec<_>>(),
                text,
            )
        }
        Command::Powers {
            args,
            reg,
            asymptotic,
            shifted,
            ..
        } => {
            let w = Partition::new(args.w.clone())?;
            let (n, d) = (args.n, args.d);
            if *reg {
                let r = crate::powers::reg_power_exact(&w, d, n)?;
                ok(json!({"w": w, "n": n, "d": d, "reg": r}))
            } else if *asymptotic {
                let rows = power_reg_rows(&w, n, [d])?;
                if !rows[0].agrees {
                    warnings.push(format!(
                        "d = {d}: exact reg {} differs from d|w| + b(w) = {}; the formula holds only for large d",
                        rows[0].exact, rows[0].asymptotic
                    ));
                }
                ok(json!({"w": w, "n": n, "b": b_const(&w, n)?, "rows": rows}))
            } else if *shifted {
                let x = power_ideal(&w, d, n)?;
                ok(json!({
                    "w": w, "n": n, "d": d,
                    "shifted": is_symmetric_shifted(&x),
                    "strongly_shifted": is_symmetric_strongly_shifted(&x),
                    "linear": has_linear_resolution(&x)?,
                }))
            } else {
                let s = powers_support(&w, d, n)?;
                let text = s.iter().map(|p| format!("{p}\n")).collect();
                ok_text(s, text)
            }
        }
        Command::Chain {
            chain,
            n_range,
            exact,
            verify,
        } => {
            let raw: IdealSpecJson = serde_json::from_str(&read_source(chain)?)
                .map_err(|e| Error::InvalidInput(format!("chain JSON: {e}")))?;
            let x: Vec<Partition> = raw
                .generators
                .into_iter()
                .map(Partition::from_unsorted)
                .collect();
            let profile = chain_profile(&x)?;
            let (a, b) = parse_range(n_range)?;
            let strategy = match (exact, verify) {
                (true, _) => ChainStrategy::Exact,
                (_, true) => ChainStrategy::Verify,
                _ => ChainStrategy::Auto,
            };
            let mut rows = Vec::new();
            let mut text = format!(
                "m = {}, w = {}, W = {}, C = {}, threshold = {}\n",
                profile.m, profile.w, profile.big_w, profile.c, profile.threshold
            );
            for n in a..=b {
                if n < profile.m {
                    rows.push(json!({"n": n, "reg": null, "mode": "undefined"}));
                    let _ = writeln!(text, "n = {n}: undefined");
                    continue;
                }
                let r = reg_chain(&profile, n, strategy)?;
                let _ = writeln!(text, "n = {n}: reg = {} ({:?})", r.reg, r.mode);
                rows.push(serde_json::to_value(r).expect("json"));
            }
            ok_text(json!({"profile": profile, "rows": rows}), text)
        }
        Command::Shifted(a) => {
            let x = load_ideal(&a.ideal, warnings)?;
            ok(json!({
                "shifted": is_symmetric_shifted(&x),
                "strongly_shifted": is_symmetric_strongly_shifted(&x),
                "linear": has_linear_resolution(&x)?,
            }))
        }
        Command::Betti {
            ideal,
            field,
            invariants: inv,
            ..
        } => {
            let x = load_ideal(&ideal.ideal, warnings)?;
            let field = Field::from_char(*field)?;
            if *inv {
                let (reg, pdim) = oracle_invariants(&expand_orbits(&x)?, field)?;
                ok(json!({"field": field.characteristic(), "reg": reg, "pdim": pdim}))
            } else {
                let t = betti_table_of(&x, field)?;
                let text = t.render();
                ok_text(t, text)
            }
        }
        Command::Check {
            ideal,
            seed,
            random,
            field,
        } => {
            let field = Field::from_char(*field)?;
            let ideals = match ideal {
                Some(src) => vec![load_ideal(src, warnings)?],
                None => random_corpus(*seed, *random, 4, 4),
            };
            let mut reports = Vec::new();
            for x in &ideals {
                reports.push(check_all(x, field)?);
            }
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
            let passed = failed.is_empty();
            let mut text = String::new();
            for r in &reports {
                let _ = writeln!(
                    text,
                    "{} {}",
                    if r.passed { "ok  " } else { "FAIL" },
                    r.ideal
                );
                for c in r.checks.iter().filter(|c| !c.passed) {
                    let _ = writeln!(
                        text,
                        "    {}: {}",
                        c.name,
                        c.detail.as_deref().unwrap_or("")
                    );
                }
            }
            let _ = writeln!(
                text,
                "{} of {} ideals passed",
                reports.len() - failed.len(),
                reports.len()
            );
            let json = if ideal.is_some() {
                serde_json::to_value(&reports[0]).expect("json")
            } else {
                json!({"seed": seed, "count": reports.len(), "passed": passed, "failures": failed})
            };
            Ok(Rendered {
                json,
                text: Some(text),
                code: if passed { 0 } else { 3 },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX12: &str = r#"{"n": 3, "generators": [[2,1,1],[4,2]]}"#;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("symreg").chain(args.iter().copied()))
    }

    #[test]
    fn invariants_inline() {
        let out = run_args(&["invariants", "-i", EX12]);
        assert_eq!(out.code, 0, "{out:?}");
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!((v["reg"].as_u64(), v["pdim"].as_u64()), (Some(7), Some(2)));
        assert_eq!(v["witnesses"]["reg"][0], json!({"z": [3, 3], "l": 0}));
    }

    #[test]
    fn error_classes() {
        let unit = run_args(&["invariants", "-i", r#"{"n": 2, "generators": [[]]}"#]);
        assert_eq!(unit.code, 1);
        let v: Value = serde_json::from_str(&unit.stdout).unwrap();
        assert_eq!(v["error"]["kind"], "unit_ideal");
        assert_eq!(run_args(&["zset", "-i", "/nonexistent.json"]).code, 1);
        assert_eq!(run_args(&["bogus"]).code, 1);
        assert_eq!(run_args(&["betti", "-i", EX12, "--field", "4"]).code, 1);
    }

    #[test]
    fn warnings_go_to_stderr() {
        let out = run_args(&["zset", "-i", r#"{"n": 2, "generators": [[2,1],[1,1]]}"#]);
        assert_eq!(out.code, 0);
        assert!(out.stderr.starts_with("warning:"), "{out:?}");
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("3:10").unwrap(), (3, 10));
        assert!(parse_range("10:3").is_err());
        assert!(parse_range("x").is_err());
    }
}
