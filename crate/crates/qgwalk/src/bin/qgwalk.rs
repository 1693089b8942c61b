//! Thin CLI over the library: verify descriptors, run walks to CSV, evaluate
//! family bounds, export and describe groups.
//!
//! Exit codes: 0 success (and, for `verify`, all residuals within tolerance),
//! 1 axiom failure, 2 usage/spec errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qgwalk::bounds;
use qgwalk::error::Error;
use qgwalk::hopf::{verify_descriptor, AXIOM_TOL};
use qgwalk::io::{self, BuiltGroup};

#[derive(Parser)]
#[command(name = "qgwalk", about = "random walks on finite quantum groups", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// group spec: kp | sekine:N | zn:N | cube:N | sym:N | dihedral:N |
    /// quaternion | sweedler | dual:<spec> | file:<path> | cayley:<path>
    group: String,
    /// require an irrep table; with a path, load a user table (JSON)
    #[arg(long, num_args = 0..=1, default_missing_value = "")]
    irreps: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every Hopf axiom and (when available) the irrep-table invariants
    Verify(GroupArgs),
    /// Run a walk: exact distances + bounds per step, as CSV
    Walk {
        #[command(flatten)]
        group: GroupArgs,
        /// state spec, e.g. preset:e2, simple, kp:mu=0,1,0,0,0;x=0;y=0;z=0
        #[arg(long)]
        state: String,
        #[arg(long)]
        kmax: usize,
        /// output CSV path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// seed for `random` states
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate a closed-form family bound
    Bounds {
        /// zn-upper | zn-lower | cube | dual-sn-upper | dual-sn-lower |
        /// kp-symmetric | kp-example2-lower | kp-example2-upper |
        /// sekine-upper | sekine-lower
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        c: Option<f64>,
        /// kp-symmetric: five comma-separated convex weights
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, default_value_t = 0.0)]
        x: f64,
        #[arg(long, default_value_t = 0.0)]
        z: f64,
    },
    /// Write a group (and its irreps) as a descriptor JSON
    Export {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print a short JSON summary of a group
    Describe(GroupArgs),
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::Unsupported(_) | Error::Io(_) | Error::Json(_) => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}

fn irreps_path(args: &GroupArgs) -> Option<&str> {
    args.irreps.as_deref().filter(|s| !s.is_empty())
}

fn build(args: &GroupArgs) -> Result<BuiltGroup, Error> {
    let path = irreps_path(args).map(std::path::Path::new);
    let built = io::build_group(&args.group, path)?;
    if args.irreps.is_some() {
        if let BuiltGroup::Quantum { irreps: None, .. } = &built {
            return Err(Error::Unsupported(format!(
                "no irrep table available for '{}'",
                args.group
            )));
        }
    }
    Ok(built)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify(args) => {
            let built = build(&args)?;
            match built {
                BuiltGroup::Hopf(d) => {
                    let report = verify_descriptor(&d);
                    println!("{}", serde_json::to_string_pretty(&report)?);
                    Ok(exit_for(report.max_residual()))
                }
                BuiltGroup::Quantum { group, irreps, .. } => {
                    let report = group.verify()?;
                    let irrep_diag = irreps.as_ref().map(|t| t.diagnostics(&group));
                    let mut doc = serde_json::to_value(&report)?;
                    if let Some(diag) = &irrep_diag {
                        doc["irrep_table"] = serde_json::to_value(diag)?;
                    }
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                    let irreps_ok = irrep_diag.map(|d| d.pass()).unwrap_or(true);
                    if report.max_residual() <= AXIOM_TOL && irreps_ok {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        Ok(ExitCode::from(1))
                    }
                }
            }
        }
        Command::Walk {
            group,
            state,
            kmax,
            out,
            seed,
        } => {
            if kmax == 0 {
                return Err(Error::Parse("kmax must be at least 1".into()));
            }
            let built = build(&group)?;
            let nu = io::build_state(&state, &built, seed)?;
            let BuiltGroup::Quantum {
                group: qg, irreps, ..
            } = &built
            else {
                unreachable!("build_state already rejected descriptors")
            };
            let table = irreps.as_ref().ok_or_else(|| {
                Error::Unsupported(format!(
                    "'{}' has no irrep table; supply one with --irreps",
                    group.group
                ))
            })?;
            // the second example walk is invisible to every one-dimensional
            // irrep; its lower bound comes from the path-counting oracle
            let path_lower = |k: usize| bounds::kp_example2_exact_lower(k);
            let extra: Option<&dyn Fn(usize) -> f64> =
                (group.group == "kp" && state == "preset:example2").then_some(&path_lower);
            let series = bounds::run_experiment_with_lower(qg, table, &nu, kmax, extra)?;
            match out {
                Some(path) => {
                    let file = std::fs::File::create(path)?;
                    io::write_series_csv(file, &series)?;
                }
                None => io::write_series_csv(std::io::stdout().lock(), &series)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds {
            family,
            n,
            k,
            alpha,
            beta,
            c,
            mu,
            x,
            z,
        } => {
            let need_n = || n.ok_or_else(|| Error::Parse("--n required".into()));
            let need_k = || k.ok_or_else(|| Error::Parse("--k required".into()));
            let bound = match family.as_str() {
                "zn-upper" => bounds::zn_upper(need_n()?, need_k()?)?,
                "zn-lower" => bounds::zn_lower(need_n()?, need_k()?)?,
                "cube" => bounds::cube_upper(
                    need_n()?,
                    c.ok_or_else(|| Error::Parse("--c required".into()))?,
                )?,
                "dual-sn-upper" => bounds::dual_sn_upper(
                    need_n()?,
                    alpha.ok_or_else(|| Error::Parse("--alpha required".into()))?,
                )?,
                "dual-sn-lower" => bounds::dual_sn_lower(
                    need_n()?,
                    beta.ok_or_else(|| Error::Parse("--beta required".into()))?,
                )?,
                "kp-symmetric" => {
                    let mu_str = mu.ok_or_else(|| Error::Parse("--mu required".into()))?;
                    let parts: Vec<f64> = mu_str
                        .split(',')
                        .map(|s| {
                            s.trim()
                                .parse::<f64>()
                                .map_err(|_| Error::Parse(format!("bad weight '{s}'")))
                        })
                        .collect::<Result<_, _>>()?;
                    if parts.len() != 5 {
                        return Err(Error::Parse("--mu needs five weights".into()));
                    }
                    let arr = [parts[0], parts[1], parts[2], parts[3], parts[4]];
                    bounds::kp_symmetric_upper(arr, x, z, need_k()?)?.0
                }
                "kp-example2-lower" => bounds::kp_example2_lower(need_k()?)?,
                "kp-example2-upper" => bounds::FamilyBound {
                    value: bounds::kp_example2_upper(need_k()?),
                    hypothesis: "k >= 1",
                },
                "sekine-upper" => bounds::sekine_upper(
                    need_n()?,
                    alpha.ok_or_else(|| Error::Parse("--alpha required".into()))?,
                )?,
                "sekine-lower" => bounds::sekine_lower(need_n()?, need_k()?)?,
                other => return Err(Error::Parse(format!("unknown bound family '{other}'"))),
            };
            println!("{}", serde_json::to_string(&bound)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { group, out } => {
            let built = build(&group)?;
            let qg = built.group()?;
            let BuiltGroup::Quantum { irreps, .. } = &built else {
                unreachable!()
            };
            let file = io::descriptor_from_group(qg, irreps.as_ref());
            io::save_descriptor(&out, &file)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Describe(args) => {
            let built = build(&args)?;
            let doc = match &built {
                BuiltGroup::Hopf(d) => serde_json::json!({
                    "label": d.label,
                    "dim": d.dim,
                    "quantum_group": false,
                }),
                BuiltGroup::Quantum { group, irreps, .. } => {
                    let report = group.verify()?;
                    serde_json::json!({
                        "label": group.label,
                        "blocks": group.shape.dims(),
                        "dim": group.dim(),
                        "haar_weights": group.haar.weights,
                        "quantum_group": report.is_quantum_group(),
                        "commutative": report.commutative,
                        "cocommutative": report.cocommutative,
                        "irreps": irreps.as_ref().map(|t| t.irreps.iter()
                            .map(|i| serde_json::json!({"name": i.name, "dim": i.dim}))
                            .collect::<Vec<_>>()),
                    })
                }
            };
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for(max_residual: f64) -> ExitCode {
    if max_residual <= AXIOM_TOL {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
