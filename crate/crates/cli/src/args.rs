use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dynzsig::ratmap::{parse_map, parse_point, ProjectivePoint, RationalMap};
use num_bigint::BigUint;

#[derive(Debug, Parser)]
#[command(name = "dynzsig", version, about = "Primitive divisors in orbits of rational maps over Q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Include full decimal expansions of sequence terms.
    #[arg(long, global = true)]
    pub full_integers: bool,

    /// Seed for Pollard rho.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Trial-division bound (overrides DYNZSIG_FACTOR_BUDGET).
    #[arg(long, global = true)]
    pub trial_bound: Option<u64>,

    /// Iteration cap per Pollard rho attempt (overrides DYNZSIG_FACTOR_BUDGET).
    #[arg(long, global = true)]
    pub rho_iterations: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zsigmondy set of the numerators of φⁿ(α) − γ.
    Zsig {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(short = 'N', default_value_t = 10)]
        horizon: usize,
    },
    /// Rank of apparition of a prime.
    Rank {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_parser = big_prime_arg)]
        prime: BigUint,
        #[arg(short = 'N', default_value_t = 10)]
        horizon: usize,
    },
    /// Canonical height of a point.
    Height {
        #[arg(long, value_parser = map_arg)]
        map: RationalMap,
        #[arg(long, value_parser = point_arg)]
        point: ProjectivePoint,
        #[arg(long, default_value_t = 1e-6, value_parser = positive_f64)]
        tol: f64,
        #[arg(long, default_value_t = 64)]
        max_iterations: usize,
    },
    /// Growth of log A_n against dⁿ·ĥ(α), and archimedean proximity to γ.
    Growth {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(short = 'N', default_value_t = 12)]
        horizon: usize,
        #[arg(long, default_value_t = 1e-6, value_parser = positive_f64)]
        tol: f64,
    },
    /// Orbit of α modulo a prime.
    Modp {
        #[arg(long, value_parser = map_arg)]
        map: RationalMap,
        #[arg(long, value_parser = point_arg)]
        alpha: ProjectivePoint,
        #[arg(long)]
        prime: u64,
    },
    /// Scans for the conjectures on φⁿ(α) − α and φ^{m+n}(α) − φ^m(α).
    Conj {
        #[command(subcommand)]
        which: ConjCommand,
    },
    /// Which primes divide some term, decided from orbits mod p.
    Density {
        #[arg(long, value_parser = map_arg)]
        map: RationalMap,
        #[arg(long, value_parser = point_arg)]
        alpha: ProjectivePoint,
        /// Target point, or `alpha`.
        #[arg(long, default_value = "0", value_parser = target_arg)]
        gamma: Target,
        #[arg(long, default_value_t = 10_000)]
        pmax: u64,
    },
    /// Check the divisibility lemmas; exits with status 1 on any failure.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConjCommand {
    Weak {
        #[arg(long, value_parser = map_arg)]
        map: RationalMap,
        #[arg(long, value_parser = point_arg)]
        alpha: ProjectivePoint,
        #[arg(short = 'N', default_value_t = 8)]
        horizon: usize,
    },
    Strong {
        #[arg(long, value_parser = map_arg)]
        map: RationalMap,
        #[arg(long, value_parser = point_arg)]
        alpha: ProjectivePoint,
        #[arg(short = 'M', default_value_t = 4)]
        m_max: usize,
        #[arg(short = 'N', default_value_t = 4)]
        n_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// ord_p A_n = e·ord_p A_{n−k} past the rank of apparition.
    Growth {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(short = 'N', default_value_t = 8)]
        horizon: usize,
        #[arg(long, default_value_t = 10_000)]
        pmax: u64,
    },
    /// Good primes divide terms of a single residue class mod k.
    Disjoint {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(short = 'N', default_value_t = 10)]
        horizon: usize,
    },
    /// p | A_{m,n} exactly when m ≥ ρ_p and σ_p | n.
    Tailcycle {
        #[arg(long, value_parser = map_arg)]
        map: RationalMap,
        #[arg(long, value_parser = point_arg)]
        alpha: ProjectivePoint,
        /// Check a single prime instead of all good primes up to --pmax.
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, default_value_t = 100)]
        pmax: u64,
        #[arg(short = 'M', default_value_t = 6)]
        m_max: usize,
        #[arg(short = 'N', default_value_t = 6)]
        n_max: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    #[arg(long, value_parser = map_arg)]
    pub map: RationalMap,
    #[arg(long, value_parser = point_arg)]
    pub alpha: ProjectivePoint,
    #[arg(long, default_value = "0", value_parser = point_arg)]
    pub gamma: ProjectivePoint,
    /// Skip the hypotheses of the finiteness theorem.
    #[arg(long)]
    pub relaxed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Alpha,
    Point(ProjectivePoint),
}

fn map_arg(s: &str) -> Result<RationalMap, String> {
    parse_map(s).map_err(|e| e.to_string())
}

fn point_arg(s: &str) -> Result<ProjectivePoint, String> {
    parse_point(s).map_err(|e| e.to_string())
}

fn target_arg(s: &str) -> Result<Target, String> {
    if s.eq_ignore_ascii_case("alpha") {
        Ok(Target::Alpha)
    } else {
        point_arg(s).map(Target::Point)
    }
}

fn big_prime_arg(s: &str) -> Result<BigUint, String> {
    let p = BigUint::from_str(s.trim()).map_err(|e| e.to_string())?;
    if dynzsig::arith::is_prime(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is not prime"))
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err("must be a positive number".into()),
        Err(e) => Err(e.to_string()),
    }
}
