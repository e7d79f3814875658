use dynzsig::arith::FactorBudget;

pub const BUDGET_ENV: &str = "DYNZSIG_FACTOR_BUDGET";

/// Parse `key=value` pairs separated by commas, e.g.
/// `trial_bound=100000,rho_iterations=1000000`.
pub fn parse_budget(spec: &str, mut base: FactorBudget) -> Result<FactorBudget, String> {
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let value: u64 = value.trim().parse().map_err(|_| format!("`{}` is not a nonnegative integer", value.trim()))?;
        match key.trim() {
            "trial_bound" | "trial" => base.trial_bound = value,
            "rho_iterations" | "rho" => base.rho_iterations = value,
            "max_bits" => base.max_bits = value,
            "seed" => base.seed = value,
            other => return Err(format!("unknown budget key `{other}`")),
        }
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs() {
        let b = parse_budget("trial=1000, rho_iterations=5", FactorBudget::default()).unwrap();
        assert_eq!((b.trial_bound, b.rho_iterations), (1000, 5));
        assert!(parse_budget("trial", FactorBudget::default()).is_err());
        assert!(parse_budget("depth=3", FactorBudget::default()).is_err());
        assert_eq!(parse_budget("", FactorBudget::default()).unwrap(), FactorBudget::default());
    }
}
