//! Command-line front end. Every command parses its inputs, calls one library
//! operation and prints JSON (or a plain table with `--pretty`).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::cascade::{cascade, finite_cascade};
use crate::centgen::{
    canonical_generator, finite_generator, ideal_generators, region, UpperRightPair,
};
use crate::coadj::{
    beta_rank, coadjoint_act_matrix, coadjoint_act_series, form_from_values, form_values,
    is_isotropic, is_subalgebra, orbit_invariants, regular_orbit_ideal, vergne_polarization,
};
use crate::criterion::{lambda_matrix, nontriviality_verdict};
use crate::envalg::Pbw;
use crate::error::Error;
use crate::liealg::NilAlgebra;
use crate::linform::{json_rational, LinearForm};
use crate::random;
use crate::rational::{self, Rational};
use crate::rootsys::{OrderSpec, Root, SystemType, Window};
use crate::symalg::SymPoly;

#[derive(Parser, Debug)]
#[command(
    name = "nilcascade",
    version,
    about = "Orbit-method computations for nilpotent Lie algebras"
)]
pub struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// First cascade roots of an order.
    Cascade {
        #[arg(long)]
        order: PathBuf,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Closed-form cascade of a finite algebra such as `C3`.
    FiniteCascade {
        #[arg(long)]
        algebra: String,
    },
    /// Canonical generator `ξ_β` and `Δ_β = σ(ξ_β)`.
    CentralGen {
        #[arg(long, conflicts_with = "algebra")]
        order: Option<PathBuf>,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        root: String,
    },
    /// Whether a polynomial Poisson-commutes with every basis element.
    CheckCentral {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Symmetrize a polynomial and test centrality in the enveloping algebra.
    PbwCentral {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Poisson bracket of two polynomials.
    PoissonBracket {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Vergne polarization at a linear form.
    Polarize {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        lambda: PathBuf,
    },
    /// Regular-orbit invariants `c_i` of an A-type form.
    OrbitInvariants {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        lambda: PathBuf,
    },
    /// Coadjoint action of `exp(x)`, in both realizations.
    Coadjoint {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        lambda: PathBuf,
        /// JSON list of `{root, value}`; sampled from `--seed` when absent.
        #[arg(long)]
        element: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generators of `I(p, k)` inside a window.
    IdealGens {
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        pair: String,
        #[arg(long)]
        k: usize,
        /// Comma-separated indices.
        #[arg(long)]
        window: String,
    },
    /// Verdict on `I(λ) ≠ 0`.
    Criterion {
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_window: usize,
    },
    /// `[λ]_p` on a window and its rank.
    Rank {
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long)]
        pair: String,
        #[arg(long)]
        window: String,
    },
}

/// A failure tagged with the offending input, if any.
#[derive(Debug)]
pub struct CliError {
    pub error: Error,
    pub input: Option<PathBuf>,
    pub io: Option<String>,
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError {
            error,
            input: None,
            io: None,
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        if self.error.is_internal() {
            2
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        let (code, message) = match &self.io {
            Some(m) => ("io", m.clone()),
            None => (self.error.code(), self.error.to_string()),
        };
        json!({"error": {
            "code": code,
            "message": message,
            "input": self.input.as_ref().map(|p| p.display().to_string()),
        }})
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn at<T>(path: &Path, r: crate::Result<T>) -> CliResult<T> {
    r.map_err(|error| CliError {
        error,
        input: Some(path.to_path_buf()),
        io: None,
    })
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| CliError {
        error: Error::Parse(e.to_string()),
        input: Some(path.to_path_buf()),
        io: Some(e.to_string()),
    })?;
    at(
        path,
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string())),
    )
}

fn read_order(path: &Path) -> CliResult<OrderSpec> {
    let v = read_json(path)?;
    at(
        path,
        serde_json::from_value(v).map_err(|e| {
            let m = e.to_string();
            Error::InvalidOrder(m.strip_prefix("invalid order: ").unwrap_or(&m).to_string())
        }),
    )
}

fn read_form(path: &Path) -> CliResult<LinearForm> {
    let v = read_json(path)?;
    at(path, LinearForm::from_json(&v))
}

fn read_poly(path: &Path) -> CliResult<SymPoly> {
    let v = read_json(path)?;
    at(path, SymPoly::from_json(&v))
}

/// `A4`, `C3`, `hei2`, …
pub fn parse_algebra(s: &str) -> crate::Result<NilAlgebra> {
    let t = s.trim();
    if let Some(n) = t.strip_prefix("hei") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad algebra {s:?}")))?;
        return NilAlgebra::heisenberg(n);
    }
    let (sys, n) = t.split_at(t.char_indices().nth(1).map_or(t.len(), |(i, _)| i));
    let sys: SystemType = sys.parse()?;
    let n: usize = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad algebra {s:?}")))?;
    NilAlgebra::standard(sys, n)
}

fn parse_window(s: &str) -> crate::Result<Vec<u32>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidWindow(s.to_string()))
        })
        .collect()
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::format).collect()
}

fn form_json(alg: &NilAlgebra, mu: &[Rational]) -> Value {
    Value::Object(
        alg.basis()
            .iter()
            .zip(mu)
            .map(|(r, c)| (r.to_string(), Value::String(rational::format(c))))
            .collect(),
    )
}

fn poly_json(p: &SymPoly) -> Value {
    json!({"text": p.to_string(), "terms": p.to_json()})
}

/// Runs one parsed command and returns its JSON output.
pub fn execute(cmd: &Command) -> CliResult<Value> {
    Ok(match cmd {
        Command::Cascade { order, limit } => {
            let o = read_order(order)?;
            serde_json::to_value(cascade(&o, *limit)).expect("serializable")
        }
        Command::FiniteCascade { algebra } => {
            let alg = parse_algebra(algebra)?;
            let roots = finite_cascade(alg.system(), alg.rank())?;
            json!({"roots": roots})
        }
        Command::CentralGen {
            order,
            algebra,
            root,
        } => {
            let beta: Root = root.parse()?;
            match (order, algebra) {
                (Some(path), _) => {
                    let o = read_order(path)?;
                    let g = at(path, canonical_generator(&beta, &o))?;
                    json!({
                        "beta": g.beta,
                        "step": g.step,
                        "window": g.window.labels(),
                        "xi": poly_json(&g.xi),
                        "delta": {"text": g.delta.to_string(), "terms": g.delta.to_json()},
                    })
                }
                (None, Some(a)) => {
                    let alg = parse_algebra(a)?;
                    let xi = finite_generator(alg.system(), alg.rank(), &beta)?;
                    let delta = Pbw::new(&alg).symmetrize(&xi)?;
                    json!({
                        "beta": beta,
                        "xi": poly_json(&xi),
                        "delta": {"text": delta.to_string(), "terms": delta.to_json()},
                    })
                }
                (None, None) => {
                    return Err(
                        Error::Parse("central-gen needs --order or --algebra".into()).into(),
                    )
                }
            }
        }
        Command::CheckCentral { algebra, poly } => {
            let alg = parse_algebra(algebra)?;
            let f = read_poly(poly)?;
            let mut witness = Value::Null;
            for r in alg.basis() {
                let b = at(poly, f.poisson_bracket(&SymPoly::var(*r), &alg))?;
                if !b.is_zero() {
                    witness = json!({"root": r, "bracket": poly_json(&b)});
                    break;
                }
            }
            json!({"central": witness.is_null(), "witness": witness})
        }
        Command::PbwCentral { algebra, poly } => {
            let alg = parse_algebra(algebra)?;
            let f = read_poly(poly)?;
            let pbw = Pbw::new(&alg);
            let delta = at(poly, pbw.symmetrize(&f))?;
            let c = pbw.is_central(&delta)?;
            json!({
                "central": c.central,
                "delta": {"text": delta.to_string(), "terms": delta.to_json()},
                "witness": c.witness.map(|(r, w)| json!({"root": r, "commutator": w.to_string()})),
            })
        }
        Command::PoissonBracket {
            algebra,
            left,
            right,
        } => {
            let alg = parse_algebra(algebra)?;
            let f = read_poly(left)?;
            let g = read_poly(right)?;
            poly_json(&f.poisson_bracket(&g, &alg)?)
        }
        Command::Polarize { algebra, lambda } => {
            let alg = parse_algebra(algebra)?;
            let l = read_form(lambda)?;
            let mu = at(lambda, form_values(&alg, &l))?;
            let p = vergne_polarization(&alg, &mu);
            json!({
                "dim": p.basis.len(),
                "algebra_dim": alg.dim(),
                "beta_rank": beta_rank(&alg, &mu),
                "subalgebra": is_subalgebra(&alg, &p.basis),
                "isotropic": is_isotropic(&alg, &mu, &p.basis),
                "basis": p.basis.iter().map(|v| form_json(&alg, v)).collect::<Vec<_>>(),
            })
        }
        Command::OrbitInvariants { algebra, lambda } => {
            let alg = parse_algebra(algebra)?;
            if alg.system() != SystemType::A
                || !matches!(alg.kind(), crate::liealg::AlgebraKind::Nilradical)
            {
                return Err(Error::UnsupportedFamily(
                    "orbit invariants need an A-type nilradical".into(),
                )
                .into());
            }
            let l = read_form(lambda)?;
            let w = Window::standard(alg.rank());
            let c = at(lambda, orbit_invariants(&w, &l))?;
            let ideal = at(lambda, regular_orbit_ideal(&w, &l))?;
            json!({
                "c": rationals(&c),
                "regular": ideal.is_some(),
                "ideal": ideal.map(|g| g.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
            })
        }
        Command::Coadjoint {
            algebra,
            lambda,
            element,
            seed,
        } => {
            let alg = parse_algebra(algebra)?;
            let l = read_form(lambda)?;
            let mu = at(lambda, form_values(&alg, &l))?;
            let x = match element {
                Some(path) => {
                    let v = read_json(path)?;
                    let entries: Vec<(Root, Value)> = at(
                        path,
                        serde_json::from_value::<Vec<ElementEntry>>(v)
                            .map(|e| e.into_iter().map(|x| (x.root, x.value)).collect())
                            .map_err(|e| Error::Parse(e.to_string())),
                    )?;
                    let mut x = vec![Rational::from_integer(0.into()); alg.dim()];
                    for (r, v) in entries {
                        let p = at(path, alg.require(&r))?;
                        x[p] += at(path, json_rational(&v))?;
                    }
                    x
                }
                None => random::vector(&mut random::rng(*seed), alg.dim(), 3, 0.6),
            };
            let series = coadjoint_act_series(&alg, &x, &mu);
            let matrix = coadjoint_act_matrix(&alg, &x, &mu);
            json!({
                "element": form_json(&alg, &x),
                "series": form_json(&alg, &series),
                "matrix": form_json(&alg, &matrix),
                "agree": series == matrix,
                "result": form_from_values(&alg, &series).to_json(),
            })
        }
        Command::IdealGens {
            order,
            pair,
            k,
            window,
        } => {
            let o = read_order(order)?;
            let p: UpperRightPair = pair.parse()?;
            let w = Window::new(&o, parse_window(window)?)?;
            let g = at(order, ideal_generators(&p, *k, &o, &w))?;
            json!({
                "pair": p.to_string(),
                "k": k,
                "zero_ideal": g.is_zero_ideal,
                "generators": g.generators.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })
        }
        Command::Criterion {
            order,
            lambda,
            max_window,
        } => {
            let o = read_order(order)?;
            let l = read_form(lambda)?;
            at(lambda, nontriviality_verdict(&o, &l, *max_window))?.to_json()
        }
        Command::Rank {
            order,
            lambda,
            pair,
            window,
        } => {
            let o = read_order(order)?;
            let l = read_form(lambda)?;
            let p: UpperRightPair = pair.parse()?;
            let idx = parse_window(window)?;
            let (rows, cols) = at(order, region(&p, &o, &idx))?;
            let m = at(lambda, lambda_matrix(&l, &p, &o, &rows, &cols))?;
            json!({
                "pair": p.to_string(),
                "rows": rows,
                "cols": cols,
                "matrix": m.to_rows().iter().map(|r| rationals(r)).collect::<Vec<_>>(),
                "rank": m.rank(),
            })
        }
    })
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementEntry {
    root: Root,
    value: Value,
}

/// Plain two-column rendering of a JSON value.
pub fn render_pretty(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::String(s) => Some(s.clone()),
            Value::Null => Some("-".into()),
            Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
            Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(
                a.iter()
                    .map(|x| scalar(x).unwrap())
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
            _ => None,
        }
    }
    fn walk(v: &Value, prefix: &str, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(x, &key, out);
                }
            }
            Value::Array(a) if scalar(v).is_none() => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, &format!("{prefix}[{i}]"), out);
                }
            }
            _ => out.push((prefix.to_string(), scalar(v).unwrap_or_default())),
        }
    }
    let mut rows = Vec::new();
    walk(v, "", &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, x)| format!("{k:<width$}  {x}\n"))
        .collect()
}

/// Parses `argv`, runs the command and prints the result. Returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let err =
                json!({"error": {"code": "usage", "message": e.to_string().trim(), "input": null}});
            eprintln!("{}", serde_json::to_string_pretty(&err).unwrap());
            return 1;
        }
    };
    let outcome = std::panic::catch_unwind(|| execute(&cli.command));
    match outcome {
        Ok(Ok(v)) => {
            let text = if cli.pretty {
                render_pretty(&v)
            } else {
                serde_json::to_string_pretty(&v).unwrap() + "\n"
            };
            // A closed stdout (e.g. piped into `head`) is not an error.
            let _ = std::io::Write::write_all(&mut std::io::stdout().lock(), text.as_bytes());
            0
        }
        Ok(Err(e)) => {
            eprintln!("{}", serde_json::to_string_pretty(&e.to_json()).unwrap());
            e.exit_code()
        }
        Err(_) => {
            let err = json!({"error": {"code": "internal", "message": "internal invariant violated", "input": null}});
            eprintln!("{}", serde_json::to_string_pretty(&err).unwrap());
            2
        }
    }
}
