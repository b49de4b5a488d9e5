//! `btcompact`: JSON front end to the library.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use btcompact::apartment::{
    embed_extension, is_special_vertex, special_witness, transitivity_solve_with, AffineRootPattern, Apartment,
    ExtensionSpec, ValueGroup,
};
use btcompact::checks::{checks_json, run_checks};
use btcompact::compactify::{limit_of_profile, limit_of_ray, Limit};
use btcompact::fans::Fan;
use btcompact::gaussnorm::{theta_p, theta_p_boundary, ToyGroupDatum};
use btcompact::json;
use btcompact::num::{parse_q, parse_q_list, Q};
use btcompact::parabolics::{enumerate_strata, enumerate_strata_conjugates};
use btcompact::rootdata::{DiagramSubset, RootDatum};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "btcompact", version, about = "Polyhedral compactifications of apartments")]
struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct DatumArg {
    /// Catalogue name (A2, B3, G2, BC2, A1xA1, ...) or path to a JSON file.
    #[arg(long)]
    datum: String,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a root datum.
    Rootsys {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Cones of the fan F^J.
    Fan {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long = "J", default_value = "")]
        j: String,
        /// Include the face relation as a list of [face, cone] pairs.
        #[arg(long)]
        faces: bool,
    },
    /// J-relevant parabolic types.
    Strata {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long = "J", default_value = "")]
        j: String,
        /// One entry per parabolic containing the torus, not per type.
        #[arg(long)]
        conjugates: bool,
    },
    /// The cone of F^J attached to the parabolic w·P_T·w^{-1}.
    Cone {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long = "T")]
        t: String,
        /// Weyl element as a word in simple reflections, e.g. "a1,a2".
        #[arg(long, default_value = "")]
        weyl: String,
    },
    /// Limit of a ray base + t·dir, or of a limit profile given as JSON.
    Limit {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        dir: Option<String>,
        /// JSON file mapping root labels to values.
        #[arg(long)]
        profile: Option<String>,
    },
    /// theta_P at a point, optionally evaluated on a polynomial.
    Seminorm {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long = "T")]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Take the boundary limit along point + t·dir.
        #[arg(long, allow_hyphen_values = true)]
        dir: Option<String>,
        /// Polynomial JSON file.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Whether a point is a special vertex, and the least ramification making it one.
    Special {
        #[command(flatten)]
        datum: DatumArg,
        /// Generator 1/d of the value group, one value or one per simple root.
        #[arg(long, default_value = "1")]
        gamma: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Value groups after a ramified extension of index e.
    Embed {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, default_value = "1")]
        gamma: String,
        #[arg(long)]
        e: u64,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Integral coroot combination translating x to y.
    Transitivity {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value = "1")]
        gamma: String,
    },
    /// Run the invariant suite for a datum.
    Check {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct CliError {
    code: String,
    message: String,
}

impl CliError {
    fn new(code: &str, message: impl Into<String>) -> Self {
        CliError { code: code.into(), message: message.into() }
    }

    fn parse(message: impl std::fmt::Display) -> Self {
        Self::new("ParseError", message.to_string())
    }
}

/// Uses the error's variant name as its code.
fn from_lib<E: std::fmt::Debug + std::fmt::Display>(e: E) -> CliError {
    let dbg = format!("{e:?}");
    let code: String = dbg.chars().take_while(|c| c.is_alphanumeric()).collect();
    CliError { code, message: e.to_string() }
}

type Res<T> = Result<T, CliError>;

fn read_json(path: &str) -> Res<Value> {
    let text = fs::read_to_string(path).map_err(|e| CliError::new("IoError", format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{path}: {e}")))
}

fn load_datum(arg: &DatumArg) -> Res<RootDatum> {
    let s = &arg.datum;
    if s.ends_with(".json") || Path::new(s).is_file() {
        return json::datum_from_json(&read_json(s)?).map_err(CliError::parse);
    }
    RootDatum::catalogue(s).map_err(from_lib)
}

fn subset(d: &RootDatum, s: &str) -> Res<DiagramSubset> {
    d.parse_subset(s).map_err(from_lib)
}

fn point(d: &RootDatum, s: &str) -> Res<Vec<Q>> {
    let v = parse_q_list(s).map_err(CliError::parse)?;
    if v.len() != d.ambient_dim() {
        return Err(CliError::new(
            "DimensionMismatch",
            format!("expected {} coordinates, got {}", d.ambient_dim(), v.len()),
        ));
    }
    Ok(v)
}

fn essential(d: &RootDatum) -> Res<()> {
    if d.is_essential() {
        Ok(())
    } else {
        Err(CliError::new("NotEssential", "the datum must be essential for this command"))
    }
}

fn weyl_word(d: &RootDatum, s: &str) -> Res<usize> {
    let word = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let a = d.parse_root_label(t).map_err(from_lib)?;
            (0..d.rank())
                .find(|&i| d.simple_root(i) == a)
                .ok_or_else(|| CliError::new("UnknownLabel", format!("{t} is not a simple root")))
        })
        .collect::<Res<Vec<usize>>>()?;
    Ok(d.weyl_group().from_word(&word))
}

/// `--gamma` as the denominators `d` of `Γ = (1/d)ℤ` per simple root.
fn pattern(d: &RootDatum, gamma: &str) -> Res<AffineRootPattern> {
    let vals = parse_q_list(gamma).map_err(CliError::parse)?;
    let ds: Vec<u64> = vals
        .iter()
        .map(|g| {
            let positive = *g > Q::from_integer(0.into());
            match positive.then(|| g.recip()) {
                Some(i) if i.is_integer() => {
                    u64::try_from(i.to_integer()).map_err(|_| CliError::new("BadGamma", "gamma too small"))
                }
                _ => Err(CliError::new("BadGamma", format!("gamma must have the form 1/d, got {g}"))),
            }
        })
        .collect::<Res<_>>()?;
    match ds.len() {
        1 => AffineRootPattern::uniform(d, ds[0]).map_err(from_lib),
        n if n == d.rank() => AffineRootPattern::from_simple(d, &ds).map_err(from_lib),
        n => Err(CliError::new("BadGamma", format!("expected 1 or {} gamma values, got {n}", d.rank()))),
    }
}

fn group_json(d: &RootDatum, p: &AffineRootPattern) -> Value {
    let groups: serde_json::Map<String, Value> = (0..d.num_roots())
        .map(|a| {
            let g = match p.group(a) {
                ValueGroup::Lattice { d } => json!({"kind": "lattice", "d": d}),
                ValueGroup::BcCoset { d } => json!({"kind": "bc_coset", "d": d}),
            };
            (d.root_label(a), g)
        })
        .collect();
    Value::Object(groups)
}

fn run(cmd: &Command) -> Res<Value> {
    match cmd {
        Command::Rootsys { datum } => Ok(json::datum_json(&load_datum(datum)?)),
        Command::Fan { datum, j, faces } => {
            let d = load_datum(datum)?;
            let fan = Fan::build(&d, subset(&d, j)?).map_err(from_lib)?;
            Ok(json::fan_json(&fan, *faces))
        }
        Command::Strata { datum, j, conjugates } => {
            let d = load_datum(datum)?;
            let j = subset(&d, j)?;
            let strata = if *conjugates { enumerate_strata_conjugates(&d, j) } else { enumerate_strata(&d, j) }
                .map_err(from_lib)?;
            Ok(Value::Array(strata.iter().map(|s| json::stratum_json(&d, s)).collect()))
        }
        Command::Cone { datum, j, t, weyl } => {
            let d = load_datum(datum)?;
            let fan = Fan::build(&d, subset(&d, j)?).map_err(from_lib)?;
            let c = fan.cone_of_parabolic(subset(&d, t)?, weyl_word(&d, weyl)?).map_err(from_lib)?;
            let mut all = json::fan_json(&fan, false);
            Ok(all["cones"][c].take())
        }
        Command::Limit { datum, j, base, dir, profile } => {
            let d = load_datum(datum)?;
            let fan = Fan::build(&d, subset(&d, j)?).map_err(from_lib)?;
            let lim = match (base, dir, profile) {
                (Some(b), Some(v), None) => {
                    Limit::Point(limit_of_ray(&fan, &point(&d, b)?, &point(&d, v)?).map_err(from_lib)?)
                }
                (None, None, Some(path)) => {
                    let p = json::profile_from_json(&d, &read_json(path)?).map_err(CliError::parse)?;
                    limit_of_profile(&fan, &p)
                }
                _ => return Err(CliError::new("UsageError", "give either --base and --dir, or --profile")),
            };
            Ok(match lim {
                Limit::Point(p) => json::point_json(&fan, &p),
                Limit::NoLimit => json!({"limit": "none"}),
            })
        }
        Command::Seminorm { datum, t, point: x, dir, poly } => {
            let d = load_datum(datum)?;
            essential(&d)?;
            let g = ToyGroupDatum::new(&d, subset(&d, t)?);
            let x = point(&d, x)?;
            let s = match dir {
                None => theta_p(&g, &x),
                Some(v) => {
                    let v = point(&d, v)?;
                    theta_p_boundary(&g, &btcompact::compactify::LimitProfile::of_ray(&d, &x, &v))
                }
            }
            .map_err(from_lib)?;
            let mut out = json!({"seminorm": json::seminorm_json(&g, &s)});
            if let Some(path) = poly {
                let f = json::polynomial_from_json(&g, &read_json(path)?).map_err(CliError::parse)?;
                out["value"] = json::ext_json(&s.eval(&f).map_err(from_lib)?);
            }
            Ok(out)
        }
        Command::Special { datum, gamma, point: x } => {
            let d = load_datum(datum)?;
            let apt = Apartment::new(&d, pattern(&d, gamma)?);
            let x = point(&d, x)?;
            Ok(json!({
                "special": is_special_vertex(&apt, &x),
                "witness": json!(special_witness(&apt, &x).to_string().parse::<u64>().map_err(|_| CliError::new("Overflow", "witness too large"))?),
            }))
        }
        Command::Embed { datum, gamma, e, point: x } => {
            let d = load_datum(datum)?;
            let apt = Apartment::new(&d, pattern(&d, gamma)?);
            let ext = embed_extension(&apt, &ExtensionSpec::ramified(*e)).map_err(from_lib)?;
            let mut out = json!({
                "e": e,
                "groups_before": group_json(&d, apt.pattern()),
                "groups_after": group_json(&d, ext.pattern()),
            });
            if let Some(x) = x {
                let x = point(&d, x)?;
                out["special_before"] = json!(is_special_vertex(&apt, &x));
                out["special_after"] = json!(is_special_vertex(&ext, &x));
            }
            Ok(out)
        }
        Command::Transitivity { datum, x, y, gamma } => {
            let d = load_datum(datum)?;
            let g0 = parse_q(gamma).map_err(CliError::parse)?;
            let sol = transitivity_solve_with(&d, &point(&d, x)?, &point(&d, y)?, &g0).map_err(from_lib)?;
            Ok(json!({
                "n_denominator": sol.n_denominator.to_string(),
                "cartan_det": sol.cartan_det,
                "coefficients": sol.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "translation": json::vec_json(&sol.translation),
            }))
        }
        Command::Check { datum, samples, seed } => {
            let d = load_datum(datum)?;
            let res = run_checks(&d, *samples, *seed);
            let out = checks_json(&d, &res);
            if res.iter().all(|r| r.passed) {
                Ok(out)
            } else {
                Err(CliError::new("CheckFailed", out.to_string()))
            }
        }
    }
}

fn emit(doc: &Value, output: Option<&str>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(doc).expect("serializable");
    text.push('\n');
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{path}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(doc) => match emit(&doc, cli.output.as_deref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(m) => {
                eprintln!("{m}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            let doc = json!({"code": e.code, "message": e.message});
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            ExitCode::from(2)
        }
    }
}
