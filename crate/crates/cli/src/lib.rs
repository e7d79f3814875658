//! Command-line front end for `dynzsig`. Every command renders a
//! deterministic report; [`run_from`] returns it together with the exit
//! status instead of printing, so the binary stays a thin wrapper.

pub mod args;
mod budget;

use std::ffi::OsString;

use clap::Parser;
use dynzsig::arith::FactorBudget;
use dynzsig::dynseq::{
    build_system, rank_of_apparition, subsequence_disjointness, verify_growth_law, zsigmondy_set, DynSystem, Mode,
    SystemBounds,
};
use dynzsig::heights::{
    archimedean_proximity, canonical_height, height_constant, is_preperiodic, norm_growth_report, weil_height,
    HeightBounds,
};
use dynzsig::modp::{
    double_index_terms, orbit_mod_p, prime_divisor_density, strong_conjecture_scan, weak_conjecture_scan,
};
use dynzsig::ratmap::has_good_reduction;
use serde_json::{json, Value};

use args::{Cli, Command, ConjCommand, Format, SystemArgs, Target, VerifyCommand};
pub use budget::BUDGET_ENV;

pub const SCHEMA_VERSION: u32 = 1;

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }
}

struct Report {
    command: &'static str,
    config: Value,
    body: Value,
    passed: Option<bool>,
    table: Option<Table>,
}

struct Table {
    header: &'static [&'static str],
    rows: Vec<Vec<String>>,
}

/// Parse `argv` (including the program name) and run the command.
pub fn run_from<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: e.exit_code(), stdout: String::new(), stderr: text }
            } else {
                Outcome { code: e.exit_code(), stdout: text, stderr: String::new() }
            }
        }
    }
}

fn factor_budget(cli: &Cli) -> Result<FactorBudget, String> {
    let mut budget = FactorBudget::default();
    if let Ok(spec) = std::env::var(BUDGET_ENV) {
        budget = budget::parse_budget(&spec, budget).map_err(|e| format!("invalid {BUDGET_ENV}: {e}"))?;
    }
    if let Some(t) = cli.trial_bound {
        budget.trial_bound = t;
    }
    if let Some(r) = cli.rho_iterations {
        budget.rho_iterations = r;
    }
    budget.seed = cli.seed;
    Ok(budget)
}

pub fn run(cli: &Cli) -> Outcome {
    let budget = match factor_budget(cli) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let report = match dispatch(cli, &budget) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let code = match report.passed {
        Some(false) => 1,
        _ => 0,
    };
    let stdout = match cli.format {
        Format::Json => {
            let mut envelope = json!({
                "tool": "dynzsig",
                "version": dynzsig::VERSION,
                "schema_version": SCHEMA_VERSION,
                "command": report.command,
                "seed": cli.seed,
                "config": report.config,
                "report": report.body,
            });
            if let Some(p) = report.passed {
                envelope["passed"] = json!(p);
            }
            let mut s = serde_json::to_string_pretty(&envelope).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => match report.table {
            Some(table) => match render_csv(&table) {
                Ok(s) => s,
                Err(e) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
            },
            None => return Outcome::usage(format!("error: --format csv is not available for `{}`\n", report.command)),
        },
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn render_csv(table: &Table) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(table.header)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn system(args: &SystemArgs) -> dynzsig::Result<DynSystem> {
    let mode = if args.relaxed { Mode::Relaxed } else { Mode::Strict };
    build_system(&args.map, &args.alpha, &args.gamma, mode, &SystemBounds::default())
}

fn system_config(args: &SystemArgs) -> Value {
    json!({
        "map": args.map.to_string(),
        "alpha": args.alpha.to_string(),
        "gamma": args.gamma.to_string(),
        "mode": if args.relaxed { "relaxed" } else { "strict" },
    })
}

fn with(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn dispatch(cli: &Cli, budget: &FactorBudget) -> dynzsig::Result<Report> {
    let budget_value = to_value(budget);
    match &cli.command {
        Command::Zsig { system: args, horizon } => {
            let sys = system(args)?;
            let report = zsigmondy_set(&sys, *horizon, budget, cli.full_integers)?;
            let rows = report
                .records
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.digits.to_string(),
                        r.has_primitive.to_string(),
                        r.witness_primes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                        r.residual_composite.as_ref().map_or(String::new(), |c| c.to_str_radix(10).len().to_string()),
                    ]
                })
                .collect();
            Ok(Report {
                command: "zsig",
                config: with(
                    system_config(args),
                    json!({ "horizon": horizon, "factor_budget": budget_value, "full_integers": cli.full_integers }),
                ),
                body: json!({ "system": to_value(&sys), "zsigmondy": to_value(&report) }),
                passed: None,
                table: Some(Table {
                    header: &["n", "digits", "has_primitive", "witness_primes", "residual_digits"],
                    rows,
                }),
            })
        }
        Command::Rank { system: args, prime, horizon } => {
            let sys = system(args)?;
            let record = rank_of_apparition(&sys, prime, *horizon)?;
            Ok(Report {
                command: "rank",
                config: with(system_config(args), json!({ "prime": prime.to_string(), "horizon": horizon })),
                body: to_value(&record),
                passed: None,
                table: None,
            })
        }
        Command::Height { map, point, tol, max_iterations } => {
            let bounds = HeightBounds { max_iterations: *max_iterations, ..HeightBounds::default() };
            let estimate = canonical_height(map, point, *tol, &bounds)?;
            let preperiodicity = match is_preperiodic(map, point, &bounds) {
                Ok(cert) => to_value(&cert),
                Err(dynzsig::Error::Undecided) => json!({ "kind": "undecided" }),
                Err(e) => return Err(e),
            };
            Ok(Report {
                command: "height",
                config: json!({
                    "map": map.to_string(),
                    "point": point.to_string(),
                    "tol": tol,
                    "max_iterations": max_iterations,
                }),
                body: json!({
                    "weil_height": weil_height(point),
                    "height_constant": height_constant(map),
                    "estimate": to_value(&estimate),
                    "preperiodicity": preperiodicity,
                }),
                passed: None,
                table: None,
            })
        }
        Command::Growth { system: args, horizon, tol } => {
            let sys = system(args)?;
            let report = norm_growth_report(&sys, *horizon, *tol, &HeightBounds::default())?;
            let proximity = archimedean_proximity(&sys, *horizon)?;
            let rows = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.digits_a.to_string(),
                        r.log_a_over_dn.to_string(),
                        r.hhat.to_string(),
                        r.err.to_string(),
                    ]
                })
                .collect();
            Ok(Report {
                command: "growth",
                config: with(system_config(args), json!({ "horizon": horizon, "tol": tol })),
                body: json!({ "norm_growth": to_value(&report), "archimedean_proximity": proximity }),
                passed: None,
                table: Some(Table { header: &["n", "digits_A", "log_A_over_dn", "hhat", "err"], rows }),
            })
        }
        Command::Modp { map, alpha, prime } => {
            let orbit = orbit_mod_p(map, alpha, *prime)?;
            Ok(Report {
                command: "modp",
                config: json!({ "map": map.to_string(), "alpha": alpha.to_string(), "prime": prime }),
                body: to_value(&orbit),
                passed: None,
                table: None,
            })
        }
        Command::Conj { which: ConjCommand::Weak { map, alpha, horizon } } => {
            let report = weak_conjecture_scan(map, alpha, *horizon, budget, cli.full_integers)?;
            Ok(Report {
                command: "conj weak",
                config: json!({
                    "map": map.to_string(),
                    "alpha": alpha.to_string(),
                    "horizon": horizon,
                    "factor_budget": budget_value,
                    "full_integers": cli.full_integers,
                }),
                body: to_value(&report),
                passed: None,
                table: None,
            })
        }
        Command::Conj { which: ConjCommand::Strong { map, alpha, m_max, n_max } } => {
            let report = strong_conjecture_scan(map, alpha, *m_max, *n_max, budget)?;
            Ok(Report {
                command: "conj strong",
                config: json!({
                    "map": map.to_string(),
                    "alpha": alpha.to_string(),
                    "m_max": m_max,
                    "n_max": n_max,
                    "factor_budget": budget_value,
                }),
                body: to_value(&report),
                passed: None,
                table: None,
            })
        }
        Command::Density { map, alpha, gamma, pmax } => {
            let target = match gamma {
                Target::Alpha => alpha.clone(),
                Target::Point(p) => p.clone(),
            };
            let survey = prime_divisor_density(map, alpha, &target, *pmax);
            let rows = survey
                .rows
                .iter()
                .map(|r| vec![r.p.to_string(), r.rho.to_string(), r.sigma.to_string(), r.divides_some_term.to_string()])
                .collect();
            Ok(Report {
                command: "density",
                config: json!({
                    "map": map.to_string(),
                    "alpha": alpha.to_string(),
                    "gamma": target.to_string(),
                    "pmax": pmax,
                }),
                body: to_value(&survey),
                passed: None,
                table: Some(Table { header: &["p", "rho", "sigma", "divides_some_term"], rows }),
            })
        }
        Command::Verify { which: VerifyCommand::Growth { system: args, horizon, pmax } } => {
            let sys = system(args)?;
            let report = verify_growth_law(&sys, *horizon, *pmax)?;
            Ok(Report {
                command: "verify growth",
                config: with(system_config(args), json!({ "horizon": horizon, "pmax": pmax })),
                passed: Some(report.passed),
                body: to_value(&report),
                table: None,
            })
        }
        Command::Verify { which: VerifyCommand::Disjoint { system: args, horizon } } => {
            let sys = system(args)?;
            let report = subsequence_disjointness(&sys, *horizon)?;
            Ok(Report {
                command: "verify disjoint",
                config: with(system_config(args), json!({ "horizon": horizon })),
                passed: Some(report.passed),
                body: to_value(&report),
                table: None,
            })
        }
        Command::Verify { which: VerifyCommand::Tailcycle { map, alpha, prime, pmax, m_max, n_max } } => {
            let primes = match prime {
                Some(p) => vec![*p],
                None => dynzsig::arith::primes_up_to(*pmax),
            };
            let grid = double_index_terms(map, alpha, *m_max, *n_max);
            let mut reports = Vec::new();
            let mut skipped = Vec::new();
            for p in primes {
                if prime.is_none() && !has_good_reduction(map, &p.into()) {
                    skipped.push(p);
                    continue;
                }
                reports.push(grid.check_tail_cycle(&orbit_mod_p(map, alpha, p)?));
            }
            let passed = reports.iter().all(|r| r.passed);
            Ok(Report {
                command: "verify tailcycle",
                config: json!({
                    "map": map.to_string(),
                    "alpha": alpha.to_string(),
                    "prime": prime,
                    "pmax": pmax,
                    "m_max": m_max,
                    "n_max": n_max,
                }),
                passed: Some(passed),
                body: json!({ "primes": to_value(&reports), "bad_primes_skipped": skipped, "passed": passed }),
                table: None,
            })
        }
    }
}

