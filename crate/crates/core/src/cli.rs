//! Command-line front end. Every command parses its expressions, calls the
//! library and prints text or, with `--json`, a versioned JSON document.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::algebra::integers::{format_rational, parse_rational};
use crate::algebra::{ExponentVector, RationalFunction};
use crate::error::{Error, Result};
use crate::expr::parse_expression;
use crate::gauss::{check_gauss_series, excluded_primes, GaussCheckConfig};
use crate::polytope::{newton_polytope, GradingForm};
use crate::report::SCHEMA_VERSION;
use crate::series::{expand_with_grading, product_factorization};
use crate::theory::{self, ToroidalMap};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const DEFAULT_BOUND: i64 = 60;

#[derive(Parser, Debug)]
#[command(name = "gauss", version, about = "Laurent expansions and Gauss congruences of rational functions")]
struct Cli {
    /// File of `key = value` defaults (primes, rmax, strength, m_budget, bound, jobs).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FunctionArgs {
    /// Numerator expression, `-` for stdin.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    num: String,
    /// Denominator expression, `-` for stdin.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    den: String,
    /// Number of variables; defaults to the largest index used.
    #[arg(long)]
    nvars: Option<usize>,
}

#[derive(Args, Debug)]
struct ExpansionArgs {
    /// Vertex of the denominator's Newton polytope, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    vertex: Option<String>,
    /// Grading form weights, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    grading: Option<String>,
    /// Largest α-degree kept (default 60).
    #[arg(long)]
    bound: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand at a vertex and list the coefficients.
    Expand {
        #[command(flatten)]
        f: FunctionArgs,
        #[command(flatten)]
        exp: ExpansionArgs,
        /// Also factor the series as a product of `(1 − x^k)^{a_k}`.
        #[arg(long)]
        product: bool,
    },
    /// Test Gauss congruences on the expansion.
    Check {
        #[command(flatten)]
        f: FunctionArgs,
        #[command(flatten)]
        exp: ExpansionArgs,
        /// Comma-separated primes (default 2,3,5,7,11,13).
        #[arg(long)]
        primes: Option<String>,
        #[arg(long)]
        rmax: Option<u32>,
        /// Test modulo `p^{strength·r}`.
        #[arg(long)]
        strength: Option<u32>,
        /// Largest α-degree of a base vector.
        #[arg(long)]
        m_budget: Option<i64>,
        /// Worker threads across primes.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Build `det(θ_i f_j / f_j)`.
    ConstructDet {
        /// A function `f_j`; repeat for each.
        #[arg(long = "f", required = true, allow_hyphen_values = true)]
        fs: Vec<String>,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Substitute `x_j = g_j` with the logarithmic Jacobian factor.
    Substitute {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        /// Image of `x_j`; repeat once per variable of `f`.
        #[arg(long = "g", required = true, allow_hyphen_values = true)]
        gs: Vec<String>,
        /// Treat the `g_j` as functions of all variables.
        #[arg(long)]
        multivariate: bool,
    },
    /// Apply the monomial map `x_j = Π y_i^{A_ij}`.
    Toroidal {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        /// Rows separated by `;`, entries by `,`, e.g. `3/2,1/2;1/2,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Keep the terms on a face of the denominator's Newton polytope; lists
    /// the faces when no form is given.
    RestrictFace {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long, allow_hyphen_values = true)]
        form: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        offset: Option<i64>,
    },
    /// Decide the Gauss property of a univariate function.
    Minton {
        #[command(flatten)]
        f: FunctionArgs,
    },
    /// Decide the Gauss property for a denominator linear in every variable.
    ClassifyLinear {
        #[command(flatten)]
        f: FunctionArgs,
    },
    /// Decide the Gauss property for a denominator linear in all but one variable.
    ClassifyMostlyLinear {
        #[command(flatten)]
        f: FunctionArgs,
        /// The variable in which the denominator may be nonlinear.
        #[arg(long)]
        z: String,
    },
    /// Classify numerators over a two-variable denominator of degree 2.
    ClassifyDeg2 {
        #[command(flatten)]
        f: FunctionArgs,
    },
}

#[derive(Debug, Default)]
struct Defaults {
    primes: Option<Vec<u64>>,
    rmax: Option<u32>,
    strength: Option<u32>,
    m_budget: Option<i64>,
    bound: Option<i64>,
    jobs: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfTruncation(_) | Error::FactorizationLimit(_) => Failure::Limit(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> std::result::Result<Vec<T>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| usage(format!("invalid {what} `{s}`"))))
        .collect()
}

fn parse_config(text: &str) -> std::result::Result<Defaults, Failure> {
    let mut d = Defaults::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(usage(format!("config line {}: expected key = value", i + 1)));
        };
        let v = v.trim().trim_matches('"');
        let bad = || usage(format!("config line {}: invalid value `{v}`", i + 1));
        match k.trim().replace('-', "_").as_str() {
            "primes" => d.primes = Some(parse_list(v, "prime list")?),
            "rmax" | "r_max" => d.rmax = Some(v.parse().map_err(|_| bad())?),
            "strength" => d.strength = Some(v.parse().map_err(|_| bad())?),
            "m_budget" => d.m_budget = Some(v.parse().map_err(|_| bad())?),
            "bound" => d.bound = Some(v.parse().map_err(|_| bad())?),
            "jobs" => d.jobs = Some(v.parse().map_err(|_| bad())?),
            other => return Err(usage(format!("config line {}: unknown key `{other}`", i + 1))),
        }
    }
    Ok(d)
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    stdin_text: Option<String>,
    json: bool,
    defaults: Defaults,
}

impl Context<'_> {
    fn source(&mut self, s: &str) -> std::result::Result<String, Failure> {
        if s != "-" {
            return Ok(s.to_string());
        }
        if self.stdin_text.is_none() {
            let mut buf = String::new();
            self.stdin.read_to_string(&mut buf).map_err(|e| usage(format!("reading stdin: {e}")))?;
            self.stdin_text = Some(buf.trim().to_string());
        }
        Ok(self.stdin_text.clone().unwrap())
    }

    fn functions(&mut self, srcs: &[&str], nvars: Option<usize>) -> std::result::Result<Vec<RationalFunction>, Failure> {
        let mut exprs = Vec::with_capacity(srcs.len());
        for s in srcs {
            exprs.push(parse_expression(&self.source(s)?)?);
        }
        let n = nvars.unwrap_or_else(|| exprs.iter().map(|e| e.nvars()).max().unwrap_or(1));
        Ok(exprs.iter().map(|e| e.evaluate(n)).collect::<Result<Vec<_>>>()?)
    }

    fn function(&mut self, f: &FunctionArgs) -> std::result::Result<RationalFunction, Failure> {
        let v = self.functions(&[&f.num, &f.den], f.nvars)?;
        Ok(v[0].try_div(&v[1])?)
    }
}

fn vertex_and_grading(
    f: &RationalFunction,
    exp: &ExpansionArgs,
) -> std::result::Result<(ExponentVector, Option<GradingForm>), Failure> {
    let v = match &exp.vertex {
        Some(s) => ExponentVector::new(parse_list(s, "vertex")?),
        None => f.canonical_vertex(),
    };
    let g = exp.grading.as_deref().map(|s| parse_list(s, "grading").map(GradingForm::new)).transpose()?;
    Ok((v, g))
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn dispatch(cli: Cli, ctx: &mut Context<'_>, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let json = ctx.json;
    let mut text = String::new();
    let mut doc = json!({ "schema": SCHEMA_VERSION });
    let mut code = EXIT_OK;
    match &cli.command {
        Command::Expand { f, exp, product } => {
            let func = ctx.function(f)?;
            let (v, g) = vertex_and_grading(&func, exp)?;
            let bound = exp.bound.or(ctx.defaults.bound).unwrap_or(DEFAULT_BOUND);
            let s = expand_with_grading(&func, &v, g, bound)?;
            doc = s.to_json();
            text = s.dump();
            if *product {
                let pf = product_factorization(&s)?;
                doc["product"] = pf.to_json();
                text.push_str("product exponents:\n");
                for (k, a) in &pf.entries {
                    text.push_str(&format!("{k} : {}\n", format_rational(a)));
                }
            }
        }
        Command::Check { f, exp, primes, rmax, strength, m_budget, jobs } => {
            let func = ctx.function(f)?;
            let (v, g) = vertex_and_grading(&func, exp)?;
            let d = &ctx.defaults;
            let mut cfg = GaussCheckConfig::default();
            if let Some(p) = primes.as_deref().map(|s| parse_list(s, "prime list")).transpose()?.or(d.primes.clone()) {
                cfg.primes = p;
            }
            cfg.r_max = rmax.or(d.rmax).unwrap_or(cfg.r_max);
            cfg.strength = strength.or(d.strength).unwrap_or(cfg.strength);
            cfg.m_budget = m_budget.or(d.m_budget);
            cfg.validate()?;
            let bound = exp.bound.or(d.bound).unwrap_or(DEFAULT_BOUND);
            let jobs = jobs.or(d.jobs).unwrap_or(1);
            let s = expand_with_grading(&func, &v, g, bound)?;
            let excluded = excluded_primes(&func, &v)?;
            let report = check_gauss_series(&s, &cfg, &excluded, jobs)?;
            if report.any_insufficient() {
                code = EXIT_LIMIT;
            }
            doc = report.to_json();
            text = report.to_text();
        }
        Command::ConstructDet { fs, nvars } => {
            let srcs: Vec<&str> = fs.iter().map(String::as_str).collect();
            let funcs = ctx.functions(&srcs, *nvars)?;
            let n = funcs[0].nvars();
            let r = theory::log_det_construct(&funcs, n)?;
            doc["function"] = json!(r.to_string());
            doc["certified"] = json!(false);
            text = format!("{r}\n");
        }
        Command::Substitute { f, gs, multivariate } => {
            let base = ctx.functions(&[f], None)?.remove(0);
            let srcs: Vec<&str> = gs.iter().map(String::as_str).collect();
            let r = if *multivariate {
                let gfs = ctx.functions(&srcs, None)?;
                theory::substitute_multivariate(&base, &gfs)?
            } else {
                let gfs = ctx.functions(&srcs, Some(1))?;
                theory::substitute_univariate(&base, &gfs)?
            };
            doc["function"] = json!(r.to_string());
            text = format!("{r}\n");
        }
        Command::Toroidal { f, matrix } => {
            let base = ctx.functions(&[f], None)?.remove(0);
            let rows = matrix
                .split(';')
                .map(|row| {
                    row.split(',')
                        .map(|t| parse_rational(t.trim()).ok_or_else(|| usage(format!("invalid matrix entry `{t}`"))))
                        .collect::<std::result::Result<Vec<_>, _>>()
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let map = ToroidalMap::new(rows)?;
            let base = if base.nvars() < map.cols() {
                ctx.functions(&[f], Some(map.cols()))?.remove(0)
            } else {
                base
            };
            let r = map.apply(&base)?;
            doc["function"] = json!(r.to_string());
            doc["matrix"] = serde_json::to_value(&map).expect("serializable");
            text = format!("{r}\n");
        }
        Command::RestrictFace { f, form, offset } => {
            let func = ctx.function(f)?;
            let poly = newton_polytope(func.denominator())?;
            match (form, offset) {
                (Some(h), Some(d)) => {
                    let face = poly.face_for_form(&parse_list::<i64>(h, "form")?, *d)?;
                    let r = theory::restrict_face(&func, &face)?;
                    doc["function"] = json!(r.to_string());
                    doc["face"] = serde_json::to_value(&face).expect("serializable");
                    text = format!("{r}\n");
                }
                (None, None) => {
                    let faces = poly.faces();
                    for face in &faces {
                        let vs: Vec<String> = face.vertices.iter().map(|v| format!("({})", v)).collect();
                        text.push_str(&format!(
                            "dim {} form {:?} offset {} vertices {}\n",
                            face.dim,
                            face.supporting_form,
                            face.offset,
                            vs.join(" ")
                        ));
                    }
                    doc["faces"] = serde_json::to_value(&faces).expect("serializable");
                }
                _ => return Err(usage("--form and --offset must be given together")),
            }
        }
        Command::Minton { f } => {
            let func = ctx.function(f)?;
            let v = theory::minton_decide(&func)?;
            doc["certified"] = json!(true);
            doc["verdict"] = serde_json::to_value(&v).expect("serializable");
            if let Some(d) = &v.decomposition {
                text = format!("yes\nconstant {}\n", format_rational(&d.constant));
                for t in &d.terms {
                    text.push_str(&format!("{} * x*u'/u  u = {}\n", format_rational(&t.c), t.u));
                }
            } else {
                text = format!("no ({})\n", v.reason.map_or("", |r| r.as_str()));
            }
        }
        Command::ClassifyLinear { f } => {
            let func = ctx.function(f)?;
            let verdict = theory::classify_linear(func.numerator(), func.denominator())?;
            doc["certified"] = json!(true);
            doc["verdict"] = json!(verdict);
            text = format!("{verdict}\n");
        }
        Command::ClassifyMostlyLinear { f, z } => {
            let func = ctx.function(f)?;
            let n = func.nvars();
            let z_var = match parse_expression(z)? {
                crate::expr::Expr::Var(i) if i < n => i,
                _ => return Err(usage(format!("`{z}` is not one of the variables {}", names(n).join(", ")))),
            };
            let v = theory::classify_mostly_linear(func.numerator(), func.denominator(), z_var)?;
            doc["certified"] = json!(true);
            doc["verdict"] = serde_json::to_value(&v).expect("serializable");
            for (k, e) in &v.per_k {
                let desc = match e {
                    theory::MostlyLinearEntry::QZeroPNonzero => "q_k = 0 but p_k != 0".to_string(),
                    theory::MostlyLinearEntry::Vacuous => "p_k = 0".to_string(),
                    theory::MostlyLinearEntry::Univariate { function, verdict } => format!(
                        "{} {}",
                        function,
                        if verdict.has_gauss { "yes".to_string() } else { format!("no ({})", verdict.reason.map_or("", |r| r.as_str())) }
                    ),
                };
                text.push_str(&format!("k = ({k}): {desc}\n"));
            }
            text.push_str(&format!("{}\n", v.overall));
        }
        Command::ClassifyDeg2 { f } => {
            let func = ctx.function(f)?;
            let c = theory::classify_degree2(func.numerator(), func.denominator())?;
            doc["certified"] = json!(true);
            doc["classification"] = serde_json::to_value(&c).expect("serializable");
            text = match &c {
                theory::Degree2Classification::Triangle { dim, basis, verdict, .. } => {
                    let b: Vec<String> = basis.iter().map(ToString::to_string).collect();
                    format!("dim {dim}\nbasis {}\n{verdict}\n", b.join(", "))
                }
                theory::Degree2Classification::Reduced(r) => format!(
                    "reduced{} to ({})/({})\n{}\n",
                    r.map.as_ref().map_or(String::new(), |m| format!(" by {}", serde_json::to_string(m).unwrap())),
                    r.numerator,
                    r.denominator,
                    r.mostly_linear.overall
                ),
            };
        }
    }
    let written = if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
    } else {
        write!(out, "{text}")
    };
    written.map_err(|e| usage(format!("writing output: {e}")))?;
    Ok(code)
}

/// Runs the command line `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let defaults = match &cli.config {
        None => Ok(Defaults::default()),
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| usage(format!("reading {}: {e}", path.display())))
            .and_then(|t| parse_config(&t)),
    };
    let result = defaults.and_then(|defaults| {
        let mut ctx = Context { stdin, stdin_text: None, json: cli.json, defaults };
        dispatch(cli, &mut ctx, out)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Limit(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_LIMIT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gauss").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn classify_linear_text() {
        assert_eq!(call(&["classify-linear", "--num", "x*y", "--den", "1-x-y-x*y"], ""), (0, "true\n".into(), String::new()));
    }

    #[test]
    fn stdin_numerator() {
        let (code, out, _) = call(&["minton", "--num", "-", "--den", "1-x-x^2"], "2-x\n");
        assert_eq!(code, 0);
        assert!(out.starts_with("yes\nconstant 2/1\n"));
    }

    #[test]
    fn parse_errors_exit_two() {
        let (code, _, err) = call(&["expand", "--den", "1/(1-x))"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("byte 7"));
        assert_eq!(call(&["bogus"], "").0, EXIT_USAGE);
        assert_eq!(call(&["check", "--den", "1-x", "--primes", "4"], "").0, EXIT_USAGE);
    }

    #[test]
    fn insufficient_truncation_exit_three() {
        let (code, out, _) = call(&["check", "--den", "1-x", "--primes", "13", "--bound", "5", "--json"], "");
        assert_eq!(code, EXIT_LIMIT);
        assert!(out.contains("insufficient-truncation"));
    }

    #[test]
    fn config_values() {
        let d = parse_config("# defaults\nprimes = 2,3\nrmax=3\nm-budget = 4\n").unwrap();
        assert_eq!(d.primes, Some(vec![2, 3]));
        assert_eq!(d.rmax, Some(3));
        assert_eq!(d.m_budget, Some(4));
        assert!(parse_config("colour = red").is_err());
    }
}
