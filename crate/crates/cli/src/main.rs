use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hilb_core::charts::gluing_map;
use hilb_core::deform::{apply_deformation, build_deformation};
use hilb_core::equations::{
    gen_border_scheme, gen_homogeneous_restriction, gen_minimal, gen_stratum, gen_universal, EquationSet, Label,
    StratumOptions, UniversalMode,
};
use hilb_core::exponent::Exponent;
use hilb_core::export;
use hilb_core::oracle::points::{classify_stratum, point_ideal, PointConfiguration};
use hilb_core::order::{parse_vars, TermOrder};
use hilb_core::staircase::StandardSet;
use hilb_core::verify::{run_suite, Suite, VerifyConfig};

/// Explicit equations for border-basis charts and Gröbner strata of the
/// Hilbert scheme of points.
#[derive(Parser)]
#[command(name = "hilbstrata", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SetArgs {
    /// Standard set: inline JSON (`[[0,0],[1,0]]` or `{"n":2,"elements":[...]}`)
    /// or a path to a file holding it.
    #[arg(long)]
    delta: String,
}

#[derive(clap::Args)]
struct OrderArgs {
    /// Term order: lex, grlex, grevlex or w:<weights>:<tiebreak>.
    #[arg(long, default_value = "lex")]
    order: String,
    /// Variable priority, largest first, e.g. `2,1`.
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Corners, borders, edge points and counts of a standard set.
    Staircase {
        #[command(flatten)]
        set: SetArgs,
    },
    /// Generate an equation set.
    Equations {
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, value_enum, default_value = "fewer")]
        which: Which,
        #[arg(long, value_enum, default_value = "json")]
        export: Export,
        /// Weight vector for `--which homog`, e.g. `1,1`.
        #[arg(long)]
        weights: Option<String>,
        /// Use the corner family with tails below the mark for `--which universal`.
        #[arg(long)]
        groebner: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transition map from the `delta` chart to the `epsilon` chart.
    Glue {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight vector and per-generator weights of the degeneration.
    Deform {
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Standard set and border basis of the vanishing ideal of points.
    Classify {
        /// Points as JSON: `[[[1,2],"0.5"],[3,4]]` (pairs, integers or strings).
        #[arg(long)]
        points: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random configurations for the gluing and strata suites.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Seconds allowed per ideal comparison in the `fewer` suite (0: no limit).
        #[arg(long, default_value_t = 30)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Full,
    Fewer,
    Stratum,
    Minimal,
    Universal,
    Homog,
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Json,
    Cas,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Golden,
    Fewer,
    Gluing,
    Deform,
    Strata,
}

/// Errors the user can fix (exit 2), as opposed to failed checks (exit 1).
struct Invalid(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Invalid {
    fn from(e: E) -> Self {
        Invalid(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<bool, Invalid> {
    match cmd {
        Command::Staircase { set } => {
            let d = read_set(&set.delta)?;
            print_json(&staircase_report(&d))?;
            Ok(true)
        }
        Command::Equations {
            set,
            order,
            which,
            export,
            weights,
            groebner,
            out,
        } => {
            let d = read_set(&set.delta)?;
            let order = read_order(&order, d.dim())?;
            let (mode, eqs) = equations(&d, &order, which, weights.as_deref(), groebner)?;
            let text = match export {
                Export::Json => serde_json::to_string_pretty(&export::to_json(&eqs, mode))? + "\n",
                Export::Cas => export::to_cas(&eqs, mode),
            };
            write_out(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Glue { set, epsilon, out } => {
            let d = read_set(&set.delta)?;
            let e = read_set(&epsilon)?;
            let g = gluing_map(&d, &e)?;
            let v = json!({
                "delta": d.elements(),
                "epsilon": e.elements(),
                "denominator": g.denominator.to_string(),
                "substitution": g.entries(),
            });
            write_out(out.as_deref(), &(serde_json::to_string_pretty(&v)? + "\n"))?;
            Ok(true)
        }
        Command::Deform { set, order, out } => {
            let d = read_set(&set.delta)?;
            let order = read_order(&order, d.dim())?;
            let data = build_deformation(&d, &order)?;
            let stratum = gen_stratum(&d, &d, &order, StratumOptions::default())?.eliminate_vanishing();
            let deformed = apply_deformation(&stratum, &data)?;
            let v = json!({
                "delta": d.elements(),
                "order": order.to_string(),
                "weights": data.weights,
                "generators": deformed.iter().map(|g| json!({
                    "label": g.generator.label,
                    "provenance": g.generator.provenance,
                    "poly": g.generator.poly.to_string(),
                    "weight": g.weight,
                })).collect::<Vec<_>>(),
            });
            write_out(out.as_deref(), &(serde_json::to_string_pretty(&v)? + "\n"))?;
            Ok(true)
        }
        Command::Classify { points, order } => {
            let p = PointConfiguration::from_json(&points)?;
            let order = read_order(&order, p.dim())?;
            let ideal = point_ideal(&p, &order);
            let certified = classify_stratum(&p, &order).map_err(|e| e.to_string());
            let v = json!({
                "order": order.to_string(),
                "delta": ideal.delta.elements(),
                "certified": certified.is_ok(),
                "border": ideal.polynomials().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            });
            print_json(&v)?;
            Ok(certified.is_ok())
        }
        Command::Verify {
            suite,
            max_n,
            max_r,
            seed,
            samples,
            budget,
            out,
        } => {
            if max_n == 0 || max_r == 0 {
                return Err(anyhow!("--max-n and --max-r must be positive").into());
            }
            let cfg = VerifyConfig {
                max_n,
                max_r,
                seed,
                samples,
                budget: (budget > 0).then(|| Duration::from_secs(budget)),
            };
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Golden => vec![Suite::Golden],
                SuiteArg::Fewer => vec![Suite::Fewer],
                SuiteArg::Gluing => vec![Suite::Gluing],
                SuiteArg::Deform => vec![Suite::Deform],
                SuiteArg::Strata => vec![Suite::Strata],
            };
            let reports: Vec<_> = suites.iter().map(|s| run_suite(*s, &cfg)).collect();
            for r in &reports {
                eprintln!("{}: {} passed, {} failed", r.suite, r.passed, r.failed);
                for f in r.failures() {
                    eprintln!("  FAIL {} ({}) seed {}", f.case, f.detail, r.seed);
                }
            }
            let text = serde_json::to_string_pretty(&reports)? + "\n";
            write_out(out.as_deref(), &text)?;
            Ok(reports.iter().all(|r| r.ok()))
        }
    }
}

fn read_set(spec: &str) -> Result<StandardSet> {
    let text = if spec.trim_start().starts_with(['[', '{']) {
        spec.to_string()
    } else {
        fs::read_to_string(spec).with_context(|| format!("reading standard set from {spec}"))?
    };
    let v: Value = serde_json::from_str(&text).context("standard set is not valid JSON")?;
    let elements: Vec<Exponent> = match &v {
        Value::Array(_) => serde_json::from_value(v.clone())?,
        Value::Object(o) => serde_json::from_value(o.get("elements").cloned().unwrap_or(Value::Null))?,
        _ => bail!("standard set must be an array or an object"),
    };
    let n = match &v {
        Value::Object(o) if o.contains_key("n") => o["n"].as_u64().context("\"n\" must be a number")? as usize,
        _ => elements.first().map(Exponent::dim).context("standard set is empty")?,
    };
    Ok(StandardSet::new(n, elements)?)
}

fn read_order(args: &OrderArgs, n: usize) -> Result<TermOrder> {
    let mut order: TermOrder = args.order.parse()?;
    if let Some(v) = &args.vars {
        order = order.with_vars(parse_vars(v)?)?;
    }
    order.validate(n)?;
    Ok(order)
}

fn equations(
    d: &StandardSet,
    order: &TermOrder,
    which: Which,
    weights: Option<&str>,
    groebner: bool,
) -> Result<(&'static str, EquationSet)> {
    Ok(match which {
        Which::Full => ("full", gen_border_scheme(d, d, true, false)?),
        Which::Fewer => ("fewer", gen_border_scheme(d, d, true, true)?),
        Which::Stratum => ("stratum", gen_stratum(d, d, order, StratumOptions::default())?),
        Which::Minimal => ("minimal", gen_minimal(d, order)?),
        Which::Universal if groebner => ("universal", gen_universal(d, d, UniversalMode::Groebner, Some(order))?),
        Which::Universal => ("universal", gen_universal(d, d, UniversalMode::Border, None)?),
        Which::Homog => {
            let w = weights.context("--which homog needs --weights")?;
            let w = w
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .context("--weights must be comma-separated integers")?;
            ("homog", gen_homogeneous_restriction(d, &w)?)
        }
    })
}

fn staircase_report(d: &StandardSet) -> Value {
    let edges: Vec<Value> = d
        .edge_planes()
        .iter()
        .map(|p| json!({"point": p.point, "plane": [p.i + 1, p.j + 1]}))
        .collect();
    let n2 = gen_border_scheme(d, d, true, true).expect("valid set");
    json!({
        "n": d.dim(),
        "delta": d.elements(),
        "corners": d.corners(),
        "border": d.border(),
        "border2": d.iterated_border(2),
        "edge_points": d.edge_points(),
        "edge_planes": edges,
        "counts": {
            "delta": d.len(),
            "corners": d.corners().len(),
            "border": d.border().len(),
            "border2": d.iterated_border(2).len(),
            "edge_points": d.edge_points().len(),
            "i2_classes": n2.classes(Label::I2).len(),
            "i3e_classes": n2.classes(Label::I3e).len(),
        },
    })
}

fn print_json(v: &Value) -> Result<()> {
    stdout(&(serde_json::to_string_pretty(v)? + "\n"))
}

/// A closed pipe (`| head`) is not an error.
fn stdout(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => stdout(text),
    }
}
