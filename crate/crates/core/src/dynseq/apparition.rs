use num_bigint::{BigInt, BigUint};
use serde::{Serialize, Serializer};

use super::{orbit_terms, DynSystem, OrbitTerm};
use crate::arith::{is_prime, ord_p};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank {
    At(usize),
    AboveHorizon,
}

impl Serialize for Rank {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Rank::At(n) => s.serialize_u64(*n as u64),
            Rank::AboveHorizon => s.serialize_str("above_horizon"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApparitionRecord {
    #[serde(serialize_with = "crate::serde_big::dec")]
    pub p: BigUint,
    pub rank: Rank,
    /// (n, ord_p A_n); terms equal to 0 are skipped.
    pub valuations: Vec<(usize, u64)>,
}

impl ApparitionRecord {
    pub fn from_terms(p: &BigUint, terms: &[OrbitTerm]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        let mut valuations = Vec::with_capacity(terms.len());
        for t in terms.iter().filter(|t| !t.hits_gamma()) {
            valuations.push((t.n, ord_p(&BigInt::from(t.a.clone()), p)?));
        }
        let rank = valuations.iter().find(|(_, v)| *v > 0).map_or(Rank::AboveHorizon, |(n, _)| Rank::At(*n));
        Ok(ApparitionRecord { p: p.clone(), rank, valuations })
    }
}

/// The first n ≤ N with p | A_n.
pub fn rank_of_apparition(sys: &DynSystem, p: &BigUint, horizon: usize) -> Result<ApparitionRecord> {
    ApparitionRecord::from_terms(p, &orbit_terms(sys, horizon)?)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn examples() {
        let sys = strict(&[0, 1, 1], &[1], pt(1, 1), pt(0, 1));
        let rank = |p: u32, n| rank_of_apparition(&sys, &p.into(), n).unwrap().rank;
        assert_eq!(rank(7, 6), Rank::At(3));
        assert_eq!(rank(43, 6), Rank::At(4));
        assert_eq!(rank(5, 6), Rank::AboveHorizon);
        assert_eq!(rank(2, 6), Rank::At(1));
        let rec = rank_of_apparition(&sys, &2u32.into(), 4).unwrap();
        assert_eq!(rec.valuations, vec![(0, 0), (1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(rank_of_apparition(&sys, &6u32.into(), 4), Err(Error::NotPrime("6".into())));
    }
}
