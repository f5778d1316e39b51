//! The `torimult` command line.
//!
//! Every command reads a problem file and writes one JSON result document to standard
//! output. Exit codes: 0 success, 1 unreadable or malformed input (with line and column),
//! 2 a violated precondition, 3 the `TORIMULT_TIMEOUT_SECS` deadline passed.

pub mod document;
pub mod gallery;

use crate::divisors::{
    limit_val, limiting_relcan, log_relcan, nat_pullback, nat_val, pullback, relcan, relcan_minus, section_polyhedron,
    MonomialIdeal,
};
use crate::error::{Error, Result};
use crate::mult::adjoint::exact_sequence_check_with;
use crate::mult::{
    asymptotic_mult_ideal, jumping_numbers_with, lct, mult_ideal_m, stabilization_certificate, working_resolution,
    CancelToken, PairSpec, Threshold,
};
use crate::ratgeom::rational::{fmt_rat, parse_rat};
use crate::sing::{classify, lc_centers, CanLevel, LogLevel, WitnessKind};
use crate::toric::{log_resolution, resolve, DivisorialValuation, Fan, PivotOrder};
use crate::Rat;
use clap::{Parser, Subcommand, ValueEnum};
use document::{Problem, ProblemDocument};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::sync::mpsc;
use std::time::{Duration, Instant};

#[derive(Parser, Debug)]
#[command(name = "torimult", version, about = "Multiplier ideals and singularities of toric pairs")]
pub struct Cli {
    /// Problem file (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Report wall-clock time in the result document.
    #[arg(long, global = true)]
    timing: bool,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Natural,
    Limit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    M,
    Plus,
    Minus,
    Delta,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Valuation of a divisor or ideal along a ray.
    Val {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, conflicts_with = "ideal")]
        divisor: Option<String>,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Natural)]
        mode: Mode,
    },
    /// Per-ray pullback of a divisor to a resolution on which it is locally principal.
    Pullback {
        #[arg(long)]
        divisor: String,
        #[arg(long, value_enum, default_value_t = Mode::Limit)]
        mode: Mode,
    },
    /// Relative canonical divisor on a resolution.
    Relcan {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        boundary: Option<String>,
    },
    /// Multiplier ideal J(X,Z), or J_m with --m.
    Mult {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        m: Option<i64>,
    },
    /// Log canonical threshold.
    Lct {
        #[arg(long)]
        pair: String,
    },
    /// Jumping numbers in (0, t_max].
    Jumping {
        #[arg(long)]
        pair: String,
        #[arg(long = "t-max")]
        t_max: String,
    },
    /// Asymptotic multiplier ideal J(X, c·‖D‖).
    Asym {
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        c: String,
    },
    /// Adjoint ideal along a reduced Cartier divisor, with the restriction sequence check.
    Adjoint {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        h: String,
    },
    /// Log terminal / log canonical and terminal / canonical verdicts.
    Classify {
        #[arg(long)]
        pair: String,
    },
    /// A smooth refinement; with --pair, the log resolution used for multiplier ideals.
    Resolve {
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        m: Option<i64>,
    },
    /// List the built-in models, print one, or write all to a directory.
    Examples {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a finished invocation prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

enum Failure {
    Parse(String),
    Precondition(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e)
    }
}

struct Settings {
    threads: usize,
    timeout: Option<Duration>,
}

fn env_settings() -> std::result::Result<Settings, String> {
    let threads = match std::env::var("TORIMULT_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => n,
            _ => return Err(format!("TORIMULT_THREADS must be a positive integer, got {s:?}")),
        },
        Err(_) => 1,
    };
    let timeout = match std::env::var("TORIMULT_TIMEOUT_SECS") {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Some(Duration::from_secs_f64(t)),
            _ => return Err(format!("TORIMULT_TIMEOUT_SECS must be a positive number, got {s:?}")),
        },
        Err(_) => None,
    };
    Ok(Settings { threads, timeout })
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome::ok(text) } else { Outcome::fail(code, text) };
        }
    };
    let settings = match env_settings() {
        Ok(s) => s,
        Err(m) => return Outcome::fail(2, format!("precondition violated: {m}\n")),
    };
    let token = settings.timeout.map_or_else(CancelToken::new, CancelToken::with_timeout);
    let Some(limit) = settings.timeout else {
        return finish(&cli, execute(&cli, settings.threads, &token));
    };
    let (tx, rx) = mpsc::channel();
    let worker_token = token.clone();
    let threads = settings.threads;
    let handle = std::thread::spawn(move || {
        let r = execute(&cli, threads, &worker_token);
        let out = finish(&cli, r);
        let _ = tx.send(out);
    });
    match rx.recv_timeout(limit) {
        Ok(out) => {
            let _ = handle.join();
            out
        }
        Err(_) => {
            token.cancel();
            Outcome::fail(3, format!("timeout: no result within {} s\n", limit.as_secs_f64()))
        }
    }
}

fn finish(cli: &Cli, r: std::result::Result<Value, Failure>) -> Outcome {
    match r {
        Ok(v) => Outcome::ok(render(&v, cli.format)),
        Err(Failure::Parse(m)) => Outcome::fail(1, format!("parse error: {m}\n")),
        Err(Failure::Precondition(Error::Cancelled)) => Outcome::fail(3, "timeout: computation cancelled\n".into()),
        Err(Failure::Precondition(e)) => Outcome::fail(2, format!("precondition violated: {e}\n")),
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            flatten("", v, &mut out);
            out
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        _ => out.push_str(&format!("{prefix}: {v}\n")),
    }
}

fn load(cli: &Cli) -> std::result::Result<Problem, Failure> {
    let path = cli.input.as_ref().ok_or_else(|| Failure::Precondition(Error::Invalid("--input is required".into())))?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let doc = ProblemDocument::parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(doc.build()?)
}

fn rat(s: &str, what: &str) -> Result<Rat> {
    parse_rat(s).ok_or_else(|| Error::Invalid(format!("{what} {s:?} is not a rational p/q")))
}

fn vector(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Invalid(format!("--w {s:?} is not an integer vector"))))
        .collect()
}

fn q(r: &Rat) -> Value {
    Value::String(fmt_rat(r))
}

fn qs(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(q).collect())
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!(i.gens())
}

fn fan_json(f: &Fan) -> Value {
    json!({ "rays": f.rays(), "cones": f.cones() })
}

fn log_name(l: LogLevel) -> &'static str {
    match l {
        LogLevel::LogTerminal => "LOG_TERMINAL",
        LogLevel::StrictlyLogCanonical => "STRICTLY_LOG_CANONICAL",
        LogLevel::NotLogCanonical => "NOT_LOG_CANONICAL",
    }
}

fn can_name(c: CanLevel) -> &'static str {
    match c {
        CanLevel::Terminal => "TERMINAL",
        CanLevel::Canonical => "CANONICAL",
        CanLevel::Neither => "NEITHER",
    }
}

fn execute(cli: &Cli, threads: usize, token: &CancelToken) -> std::result::Result<Value, Failure> {
    let start = Instant::now();
    let (name, args, result) = match &cli.command {
        Command::Examples { name, out } => {
            if let Some(dir) = out {
                std::fs::create_dir_all(dir).map_err(|e| Error::Invalid(format!("{}: {e}", dir.display())))?;
                for (n, src) in gallery::GALLERY {
                    let p = dir.join(format!("{n}.json"));
                    std::fs::write(&p, src).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
                }
            }
            match name {
                Some(n) => {
                    let doc = gallery::document(n).ok_or_else(|| Error::Invalid(format!("no example named {n:?}")))?;
                    return Ok(serde_json::to_value(&doc).expect("serializable"));
                }
                None => ("examples", json!({}), json!({ "examples": gallery::names() })),
            }
        }
        cmd => {
            let p = load(cli)?;
            command(&p, cmd, threads, token)?
        }
    };
    let mut doc = json!({ "command": name, "args": args, "result": result });
    if let Some(i) = &cli.input {
        doc["input"] = json!(i.display().to_string());
    }
    if cli.timing {
        doc["timing_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    Ok(doc)
}

fn command(p: &Problem, cmd: &Command, threads: usize, token: &CancelToken) -> Result<(&'static str, Value, Value)> {
    let x = &p.x;
    Ok(match cmd {
        Command::Val { w, divisor, ideal, mode } => {
            let w = vector(w)?;
            let v = DivisorialValuation::of(x, w.clone())?;
            let value = match (divisor, ideal) {
                (Some(d), None) => {
                    let d = p.divisor(d)?;
                    match mode {
                        Mode::Natural => nat_val(&v, d)?,
                        Mode::Limit => limit_val(&v, d)?,
                    }
                }
                (None, Some(i)) => Rat::from_integer(p.ideal(i)?.val(&w).into()),
                _ => return Err(Error::Invalid("exactly one of --divisor, --ideal is required".into())),
            };
            let args =
                json!({ "w": w, "divisor": divisor, "ideal": ideal, "mode": format!("{mode:?}").to_lowercase() });
            ("val", args, json!({ "value": q(&value) }))
        }
        Command::Pullback { divisor, mode } => {
            let d = p.divisor(divisor)?;
            let f = log_resolution(x, &[], &[section_polyhedron(d)])?;
            let pb = match mode {
                Mode::Natural => nat_pullback(&f, d)?,
                Mode::Limit => pullback(&f, d)?,
            };
            let table: Vec<Value> =
                f.rays().iter().zip(pb.coeffs()).map(|(w, c)| json!({ "ray": w, "value": q(c) })).collect();
            let args = json!({ "divisor": divisor, "mode": format!("{mode:?}").to_lowercase() });
            ("pullback", args, json!({ "table": table, "resolution": fan_json(&f) }))
        }
        Command::Relcan { kind, m, boundary } => {
            let m = m.unwrap_or(stabilization_certificate(x).m_star);
            if m < 1 {
                return Err(Error::Invalid(format!("m = {m} must be positive")));
            }
            let f = working_resolution(&PairSpec::trivial(x), m, PivotOrder::Forward)?;
            let k = match kind {
                Kind::M => limiting_relcan(&f, m)?,
                Kind::Plus => relcan(&f)?,
                Kind::Minus => relcan_minus(&f)?,
                Kind::Delta => {
                    let b = boundary.as_ref().ok_or_else(|| Error::Invalid("--kind delta needs --boundary".into()))?;
                    log_relcan(&f, p.boundary(b)?)?
                }
            };
            let table: Vec<Value> =
                f.rays().iter().zip(k.coeffs()).map(|(w, c)| json!({ "ray": w, "value": q(c) })).collect();
            let args = json!({ "kind": format!("{kind:?}").to_lowercase(), "m": m, "boundary": boundary });
            ("relcan", args, json!({ "table": table, "resolution": fan_json(&f) }))
        }
        Command::Mult { pair, m } => {
            let pr = p.pair(pair)?;
            let cert = stabilization_certificate(x);
            let m = m.unwrap_or(cert.m_star);
            let j = mult_ideal_m(&pr, m)?;
            let f = working_resolution(&pr, m, PivotOrder::Forward)?;
            let certificate = json!({
                "m_star": cert.m_star,
                "vertices": cert.vertices.iter().map(|v| qs(v)).collect::<Vec<_>>(),
                "denominators": cert.denominators,
            });
            let result = json!({
                "ideal": ideal_json(&j),
                "m": m,
                "certificate": certificate,
                "resolution_rays": f.rays(),
            });
            ("mult", json!({ "pair": pair, "m": m }), result)
        }
        Command::Lct { pair } => {
            let v = match lct(&p.pair(pair)?)? {
                Threshold::Finite(t) => q(&t),
                Threshold::Infinity => json!("infinity"),
            };
            ("lct", json!({ "pair": pair }), json!({ "lct": v }))
        }
        Command::Jumping { pair, t_max } => {
            let t = rat(t_max, "--t-max")?;
            let js = jumping_numbers_with(&p.pair(pair)?, &t, threads)?;
            ("jumping", json!({ "pair": pair, "t_max": q(&t) }), json!({ "jumping_numbers": qs(&js) }))
        }
        Command::Asym { divisor, c } => {
            let c = rat(c, "--c")?;
            let r = asymptotic_mult_ideal(x, p.divisor(divisor)?, &c)?;
            let result = json!({ "ideal": ideal_json(&r.ideal), "n_star": r.n_star, "checked": r.checked });
            ("asym", json!({ "divisor": divisor, "c": q(&c) }), result)
        }
        Command::Adjoint { pair, h } => {
            let rep = exact_sequence_check_with(&p.pair(pair)?, p.divisor(h)?, token)?;
            let restriction = rep.restriction.as_ref().map(|r| {
                json!({
                    "ray": r.ray,
                    "restricted_rays": r.variety.rays(),
                    "boundary": qs(r.boundary.delta.coeffs()),
                    "different": qs(&r.different),
                    "image": r.image.as_ref().map(ideal_json),
                    "expected": ideal_json(&r.expected),
                    "matches": r.matches,
                })
            });
            let result = json!({
                "adjoint": ideal_json(&rep.adjoint),
                "multiplier": ideal_json(&rep.multiplier),
                "m": rep.m,
                "sandwich": rep.sandwich,
                "kernel_matches": rep.kernel_matches,
                "restriction": restriction,
                "restriction_note": rep.restriction_note,
            });
            ("adjoint", json!({ "pair": pair, "h": h }), result)
        }
        Command::Classify { pair } => {
            let pr = p.pair(pair)?;
            let c = classify(&pr)?;
            let witnesses: Vec<Value> = c
                .witnesses
                .iter()
                .map(|w| {
                    let kind = match w.kind {
                        WitnessKind::Log => "log",
                        WitnessKind::Canonical => "canonical",
                    };
                    json!({ "ladder": kind, "w": w.w, "value": q(&w.value) })
                })
                .collect();
            let mut result = json!({
                "log_level": c.log_level.map(log_name),
                "can_level": c.can_level.map(can_name),
                "witnesses": witnesses,
            });
            if c.log_level == Some(LogLevel::StrictlyLogCanonical) {
                let centers: Vec<Value> = lc_centers(&pr)?
                    .iter()
                    .map(|z| json!({ "face": z.face, "locus": z.locus, "minimal": z.minimal }))
                    .collect();
                result["lc_centers"] = json!(centers);
            }
            ("classify", json!({ "pair": pair }), result)
        }
        Command::Resolve { pair, m } => {
            let f = match pair {
                Some(name) => {
                    let m = m.unwrap_or(stabilization_certificate(x).m_star);
                    working_resolution(&p.pair(name)?, m, PivotOrder::Forward)?
                }
                None => resolve(&Fan::trivial(x)),
            };
            ("resolve", json!({ "pair": pair, "m": m }), json!({ "fan": fan_json(&f), "smooth": f.is_smooth() }))
        }
        Command::Examples { .. } => unreachable!("handled before loading"),
    })
}
