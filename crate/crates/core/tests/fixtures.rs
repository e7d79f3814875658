//! End-to-end checks on the worked fixtures, through the public API only.

use dynzsig::arith::{factor, primes_up_to, FactorBudget};
use dynzsig::dynseq::{build_system, orbit_terms, DynSystem, Mode, SystemBounds};
use dynzsig::heights::{canonical_height, HeightBounds};
use dynzsig::modp::{orbit_mod_p, reduce_point};
use dynzsig::ratmap::{parse_map, parse_point, ProjectivePoint, RationalMap};
use num_bigint::BigUint;
use num_traits::Zero;

fn map(s: &str) -> RationalMap {
    parse_map(s).unwrap()
}

fn point(s: &str) -> ProjectivePoint {
    parse_point(s).unwrap()
}

fn strict(m: &str, alpha: &str, gamma: &str) -> DynSystem {
    build_system(&map(m), &point(alpha), &point(gamma), Mode::Strict, &SystemBounds::default()).unwrap()
}

const STRICT_FIXTURES: &[(&str, &str, &str)] = &[
    ("z^2+z", "1", "0"),
    ("z^2+z", "1/2", "0"),
    ("z^2+z", "3/5", "0"),
    ("z^2-1", "1/3", "0"),
    ("(2z^2+z^3)/(5+z)", "1", "0"),
];

#[test]
fn known_sequences() {
    let digits = |sys: &DynSystem, n| -> Vec<String> {
        orbit_terms(sys, n).unwrap().iter().map(|t| t.a.to_string()).collect()
    };
    assert_eq!(digits(&strict("z^2+z", "1", "0"), 5), ["1", "2", "6", "42", "1806", "3263442"]);
    assert_eq!(digits(&strict("z^2+z", "1/2", "0"), 4), ["1", "3", "21", "777", "802641"]);
    assert_eq!(digits(&strict("z^2+z", "3/5", "0"), 1), ["3", "24"]);
    assert_eq!(
        digits(&strict("(2z^2+z^3)/(5+z)", "1", "0"), 5),
        ["1", "1", "5", "31", "11192767", "245708729832361220934130495"]
    );
}

// the mod-p criterion p | A_n ⟺ φⁿ(α) ≡ γ (mod p) at primes of good reduction
#[test]
fn divisibility_matches_reduction() {
    for &(m, a, g) in STRICT_FIXTURES {
        let sys = strict(m, a, g);
        let terms = orbit_terms(&sys, 8).unwrap();
        for p in primes_up_to(100) {
            let Ok(orbit) = orbit_mod_p(&sys.phi, &sys.alpha, p) else { continue };
            let target = reduce_point(&sys.gamma, p);
            for t in &terms {
                let divides = (&t.a % p).is_zero();
                assert_eq!(divides, orbit.residue(t.n) == target, "{m} α={a} p={p} n={}", t.n);
            }
        }
    }
}

#[test]
fn reduction_commutes_with_iteration() {
    for &(m, a, _) in STRICT_FIXTURES {
        let phi = map(m);
        let exact = phi.iterate(&point(a), 10);
        for p in primes_up_to(60) {
            let Ok(orbit) = orbit_mod_p(&phi, &point(a), p) else { continue };
            for (n, q) in exact.iter().enumerate() {
                assert_eq!(orbit.residue(n), reduce_point(q, p));
            }
        }
    }
}

// ĥ(φ(P)) = d·ĥ(P) within the combined error bounds
#[test]
fn height_functional_equation() {
    let bounds = HeightBounds::default();
    for &(m, a, _) in STRICT_FIXTURES {
        let phi = map(m);
        let p = point(a);
        let h = canonical_height(&phi, &p, 1e-6, &bounds).unwrap();
        let h1 = canonical_height(&phi, &phi.eval(&p), 1e-6, &bounds).unwrap();
        let d = phi.degree() as f64;
        assert!((h1.value - d * h.value).abs() <= h1.error_bound + d * h.error_bound + 1e-12, "{m} α={a}");
    }
}

#[test]
fn cubic_term_six_factors_completely() {
    let sys = strict("(2z^2+z^3)/(5+z)", "1", "0");
    let a6 = orbit_terms(&sys, 6).unwrap().pop().unwrap().a;
    assert_eq!(a6.to_string().len(), 90);
    let budget = FactorBudget { rho_iterations: 1 << 26, ..FactorBudget::default() };
    let f = factor(&a6, &budget);
    assert!(f.complete);
    assert_eq!(f.recompose(), a6);
    let big: Vec<BigUint> = f.primes().filter(|p| p.bits() > 40).cloned().collect();
    assert_eq!(big, vec![BigUint::from(63751164012553u64), BigUint::from(37781566088858209u64)]);
}
