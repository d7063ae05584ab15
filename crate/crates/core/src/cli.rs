//! The `arclink` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::checks;
use crate::cusp::{check_duality, fundamental_points, monodromy, parse_sequence, CuspSequence};
use crate::graph::{parse_plumbing, PlumbingGraph};
use crate::inoue::{inoue_cross_check, parse_field_file};
use crate::quotient::{conjugacy_classes, group_closure, mckay_report, parse_group_file};
use crate::report::{analyze, SCHEMA};

#[derive(Parser, Debug)]
#[command(name = "arclink", version, about = "Short-arc components of normal surface singularities")]
pub struct Cli {
    /// Bound on multiplicities and intersection numbers.
    #[arg(long, global = true, default_value_t = 3)]
    pub bound: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the input graph in Graphviz format to this path.
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
    /// Only report failures.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full analysis of a plumbing graph.
    Analyze { graph: PathBuf },
    /// Component list of a plumbing graph.
    Components { graph: PathBuf },
    /// Monodromy and fundamental domain of a cusp.
    Cusp {
        #[arg(long)]
        seq: String,
    },
    /// Dual cusp and the intertwining identity.
    Dual {
        #[arg(long)]
        seq: String,
    },
    /// Group closure, conjugacy classes and McKay count.
    Quotient {
        #[arg(long)]
        group: PathBuf,
    },
    /// Cross-check a real quadratic unit against the cusp picture.
    Inoue {
        #[arg(long)]
        field: PathBuf,
    },
    /// Run the invariant sweeps.
    Check,
}

enum Failure {
    Input(String),
    Falsified(String),
}

type Outcome = Result<(), Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<PlumbingGraph, Failure> {
    let mut g = parse_plumbing(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if g.name.is_none() {
        g.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    }
    Ok(g)
}

fn sequence(text: &str) -> Result<CuspSequence, Failure> {
    parse_sequence(text).map_err(input)
}

/// Runs the command line on `args` (including the program name) and
/// returns the exit code: 0 on success, 1 on input errors, 2 when a
/// mathematical identity is falsified.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Falsified(msg)) => {
            let _ = writeln!(err, "falsified: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let mut say = |s: String| {
        let _ = out.write_all(s.as_bytes());
    };
    match &cli.command {
        Command::Analyze { graph } | Command::Components { graph } => {
            let g = load_graph(graph)?;
            if let Some(path) = &cli.dot {
                std::fs::write(path, g.to_dot()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            let report = analyze(&g, cli.bound).map_err(input)?;
            let only_components = matches!(cli.command, Command::Components { .. });
            if cli.json {
                let text = if only_components {
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": SCHEMA,
                        "bound": cli.bound,
                        "components": report.components,
                    }))
                    .expect("serializable")
                } else {
                    report.to_json()
                };
                say(text + "\n");
            } else if only_components {
                for c in &report.components {
                    say(format!("{} {} {} {}\n", c.kind, c.location, c.multiplicity, c.winding));
                }
            } else if !cli.quiet {
                say(report.to_text());
            }
            if let Some(d) = &report.validation.duality {
                if !d.identity_holds {
                    return Err(Failure::Falsified(format!("MT != TM* for {}", d.sequence)));
                }
            }
            Ok(())
        }
        Command::Cusp { seq } => {
            let c = sequence(seq)?;
            let r = check_duality(&c);
            let m = monodromy(&c);
            let points = fundamental_points(&c, cli.bound);
            let auto = r.b_star.is_rotation_of(&c);
            if cli.json {
                let pts: Vec<_> = points
                    .iter()
                    .map(|(l, v)| serde_json::json!({ "label": l.to_string(), "vector": v }))
                    .collect();
                let v = serde_json::json!({
                    "schema": SCHEMA,
                    "sequence": c.to_string(),
                    "monodromy": m,
                    "trace": m.trace().to_string(),
                    "dual": r.b_star.canonical().to_string(),
                    "auto_dual": auto,
                    "bound": cli.bound,
                    "points": pts,
                });
                say(serde_json::to_string_pretty(&v).expect("serializable") + "\n");
            } else {
                say(format!("sequence: {c}\nmonodromy: {m}\ntrace: {}\n", m.trace()));
                say(format!("dual: {}\nauto-dual: {auto}\n", r.b_star.canonical()));
                if !cli.quiet {
                    say(format!("fundamental domain (bound {}): {} points\n", cli.bound, points.len()));
                    for (label, v) in &points {
                        say(format!("  {label} {v}\n"));
                    }
                }
            }
            if !r.t_identity_holds {
                return Err(Failure::Falsified(format!("{c}: MT = {} but TM* = {}", r.mt, r.tm_star)));
            }
            Ok(())
        }
        Command::Dual { seq } => {
            let c = sequence(seq)?;
            let r = check_duality(&c);
            if cli.json {
                let v = serde_json::json!({
                    "schema": SCHEMA,
                    "sequence": c.to_string(),
                    "dual": r.b_star.canonical().to_string(),
                    "M": r.m,
                    "M_star": r.m_star,
                    "MT": r.mt,
                    "TM_star": r.tm_star,
                    "identity_holds": r.t_identity_holds,
                    "traces_equal": r.traces_equal,
                });
                say(serde_json::to_string_pretty(&v).expect("serializable") + "\n");
            } else {
                say(format!("dual: {}\n", r.b_star.canonical()));
                if !cli.quiet {
                    say(format!("M = {}\nM* = {}\nMT = {}\nTM* = {}\n", r.m, r.m_star, r.mt, r.tm_star));
                }
                say(format!("MT = TM*: {}\ntrace equal: {}\n", r.t_identity_holds, r.traces_equal));
            }
            if !r.t_identity_holds || !r.traces_equal {
                return Err(Failure::Falsified(format!("{c}: MT = {} but TM* = {}", r.mt, r.tm_star)));
            }
            Ok(())
        }
        Command::Quotient { group } => {
            let gens = parse_group_file(&read(group)?).map_err(input)?;
            let g = group_closure(&gens).map_err(input)?;
            let classes = conjugacy_classes(&g);
            let report = mckay_report(&g).map_err(input)?;
            if cli.json {
                let v = serde_json::json!({
                    "schema": SCHEMA,
                    "order": report.order,
                    "classes": classes.count(),
                    "type": report.ade.to_string(),
                    "nontrivial_classes": report.nontrivial_classes,
                    "exceptional_curves": report.expected_exceptional_curves,
                    "matches": report.matches,
                });
                say(serde_json::to_string_pretty(&v).expect("serializable") + "\n");
            } else {
                say(format!("{report}\n"));
            }
            if !report.matches {
                return Err(Failure::Falsified(report.to_string()));
            }
            Ok(())
        }
        Command::Inoue { field } => {
            let data = parse_field_file(&read(field)?).map_err(input)?;
            let r = inoue_cross_check(&data.lattice, &data.u, cli.bound).map_err(input)?;
            if cli.json {
                let checks: Vec<_> =
                    r.checks.iter().map(|(n, ok)| serde_json::json!({ "check": n, "pass": ok })).collect();
                let v = serde_json::json!({
                    "schema": SCHEMA,
                    "d": r.d.to_string(),
                    "M_u": r.m_u,
                    "recovered": r.recovered.to_string(),
                    "effective": r.effective.to_string(),
                    "orientation": r.orientation.to_string(),
                    "frame": r.frame,
                    "components": r.components,
                    "checks": checks,
                    "witness": r.witness,
                });
                say(serde_json::to_string_pretty(&v).expect("serializable") + "\n");
            } else {
                say(format!("M_u: {}\nrecovered: {}\norientation: {}\n", r.m_u, r.recovered, r.orientation));
                say(format!("components (bound {}): {}\n", cli.bound, r.components));
                for (name, ok) in &r.checks {
                    if !cli.quiet || !ok {
                        say(format!("  {} {name}\n", if *ok { "ok  " } else { "FAIL" }));
                    }
                }
            }
            match r.witness {
                Some(w) => Err(Failure::Falsified(w)),
                None => Ok(()),
            }
        }
        Command::Check => {
            let outcomes = checks::run_all();
            for o in &outcomes {
                if !cli.quiet || !o.passed() {
                    say(format!("{o}\n"));
                }
            }
            match outcomes.iter().find(|o| !o.passed()) {
                Some(o) => Err(Failure::Falsified(format!("{}: {}", o.name, o.witness.clone().unwrap_or_default()))),
                None => Ok(()),
            }
        }
    }
}
