//! Exhaustive enumeration of the ideal lattice of a finite ring.
//!
//! Every ideal is a finite sum of principal ideals, so the lattice is
//! the closure of the zero ideal under sums with principal ideals.
//! Each ideal carries five independently computed flags: prime,
//! maximal, minimal-prime, pure, and regular (idempotent-generated).

use std::collections::HashSet;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{set_sum, IdealSet};
use crate::limits::Limits;
use crate::purity;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealFlags {
    pub prime: bool,
    pub maximal: bool,
    pub minimal_prime: bool,
    pub pure: bool,
    pub regular: bool,
}

pub struct IdealLattice {
    ring: FiniteRing,
    ideals: Vec<IdealSet>,
    flags: Vec<IdealFlags>,
}

impl IdealLattice {
    /// Enumerate all ideals, respecting `limits.lattice_cap`.
    pub fn enumerate(ring: &FiniteRing, limits: &Limits) -> Result<IdealLattice> {
        let n = ring.order();
        let mut principals: Vec<BitSet> = Vec::new();
        let mut seen_principal = HashSet::new();
        for f in ring.elements() {
            let p = IdealSet::principal(ring, f).members().clone();
            if seen_principal.insert(p.clone()) {
                principals.push(p);
            }
        }
        let zero = BitSet::singleton(n, ring.zero());
        let mut seen: HashSet<BitSet> = HashSet::new();
        seen.insert(zero.clone());
        let mut worklist = vec![zero];
        while let Some(i) = worklist.pop() {
            for p in &principals {
                let s = set_sum(ring, &i, p);
                if seen.insert(s.clone()) {
                    if seen.len() > limits.lattice_cap {
                        return Err(Error::IdealLatticeTooLarge {
                            cap: limits.lattice_cap,
                        });
                    }
                    worklist.push(s);
                }
            }
        }
        let mut ideals: Vec<IdealSet> = seen
            .into_iter()
            .map(|bits| IdealSet::from_bits_unchecked(ring, bits))
            .collect();
        ideals.sort();
        let flags = compute_flags(&ideals);
        Ok(IdealLattice {
            ring: ring.clone(),
            ideals,
            flags,
        })
    }

    /// Rebuild a lattice from element lists (e.g. a cache).  Each entry
    /// is validated as an ideal and all flags are recomputed; that the
    /// list is *complete* is the caller's responsibility (a cache must
    /// key it to the ring construction).
    pub fn from_parts(
        ring: &FiniteRing,
        parts: Vec<Vec<usize>>,
        limits: &Limits,
    ) -> Result<IdealLattice> {
        if parts.len() > limits.lattice_cap {
            return Err(Error::IdealLatticeTooLarge {
                cap: limits.lattice_cap,
            });
        }
        let mut ideals = Vec::with_capacity(parts.len());
        for elems in parts {
            ideals.push(IdealSet::new(ring, elems)?);
        }
        ideals.sort();
        if ideals.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidConstruction(
                "duplicate ideal in lattice data".into(),
            ));
        }
        match (ideals.first(), ideals.last()) {
            (Some(first), Some(last)) if first.is_zero() && last.is_whole() => {}
            _ => {
                return Err(Error::InvalidConstruction(
                    "lattice data must contain the zero and unit ideals".into(),
                ))
            }
        }
        let flags = compute_flags(&ideals);
        Ok(IdealLattice {
            ring: ring.clone(),
            ideals,
            flags,
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// All ideals in canonical order (cardinality, then first
    /// differing element).
    pub fn ideals(&self) -> &[IdealSet] {
        &self.ideals
    }

    pub fn flags(&self) -> &[IdealFlags] {
        &self.flags
    }

    pub fn index_of(&self, ideal: &IdealSet) -> Option<usize> {
        self.ideals.binary_search_by(|x| x.cmp(ideal)).ok()
    }

    pub fn primes(&self) -> Vec<IdealSet> {
        self.select(|f| f.prime)
    }

    pub fn maximals(&self) -> Vec<IdealSet> {
        self.select(|f| f.maximal)
    }

    pub fn minimal_primes(&self) -> Vec<IdealSet> {
        self.select(|f| f.minimal_prime)
    }

    pub fn pure_ideals(&self) -> Vec<IdealSet> {
        self.select(|f| f.pure)
    }

    pub fn regular_ideals(&self) -> Vec<IdealSet> {
        self.select(|f| f.regular)
    }

    fn select(&self, f: impl Fn(&IdealFlags) -> bool) -> Vec<IdealSet> {
        self.ideals
            .iter()
            .zip(&self.flags)
            .filter(|(_, fl)| f(fl))
            .map(|(i, _)| i.clone())
            .collect()
    }

    /// Primes with their (maximal, minimal) flags.  In a finite
    /// commutative ring every prime is both; violations would mean the
    /// independent flag computations disagree.
    pub fn prime_spectrum(&self) -> Vec<(IdealSet, bool, bool)> {
        let out: Vec<(IdealSet, bool, bool)> = self
            .ideals
            .iter()
            .zip(&self.flags)
            .filter(|(_, fl)| fl.prime)
            .map(|(i, fl)| (i.clone(), fl.maximal, fl.minimal_prime))
            .collect();
        for &(ref p, max, min) in &out {
            assert!(
                max && min,
                "finite-ring invariant: prime {p} must be maximal and minimal"
            );
        }
        out
    }

    /// `Rad(I)`: intersection of the maximal ideals containing `I`.
    pub fn rad_of(&self, ideal: &IdealSet) -> Result<IdealSet> {
        if !ideal.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if !ideal.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let mut acc: Option<IdealSet> = None;
        for m in self.maximals() {
            if ideal.is_subset(&m) {
                acc = Some(match acc {
                    None => m,
                    Some(a) => a.intersect(&m)?,
                });
            }
        }
        acc.ok_or_else(|| {
            Error::InternalInvariant("proper ideal with no maximal ideal above it".into())
        })
    }

    /// Length of the longest strict chain of primes.
    pub fn krull_dimension(&self) -> usize {
        let primes = self.primes();
        // Longest path in the strict-containment DAG; primes are in
        // canonical order, so containment can only point forward.
        let mut depth = vec![0usize; primes.len()];
        let mut best = 0;
        for i in 0..primes.len() {
            for j in 0..i {
                if primes[j].card() < primes[i].card() && primes[j].is_subset(&primes[i]) {
                    depth[i] = depth[i].max(depth[j] + 1);
                }
            }
            best = best.max(depth[i]);
        }
        best
    }
}

fn compute_flags(ideals: &[IdealSet]) -> Vec<IdealFlags> {
    let prime: Vec<bool> = ideals.iter().map(|i| i.is_prime()).collect();
    ideals
        .iter()
        .enumerate()
        .map(|(k, i)| {
            let maximal = i.is_proper()
                && !ideals
                    .iter()
                    .any(|j| j.is_proper() && j.card() > i.card() && i.is_subset(j));
            let minimal_prime = prime[k]
                && !ideals
                    .iter()
                    .zip(&prime)
                    .any(|(j, &jp)| jp && j.card() < i.card() && j.is_subset(i));
            IdealFlags {
                prime: prime[k],
                maximal,
                minimal_prime,
                pure: purity::is_pure(i),
                regular: &purity::idempotent_part(i) == i,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_product, build_zmod};

    fn z(n: u64) -> FiniteRing {
        build_zmod(n, &Limits::default()).unwrap()
    }

    fn lat(r: &FiniteRing) -> IdealLattice {
        IdealLattice::enumerate(r, &Limits::default()).unwrap()
    }

    #[test]
    fn lattice_of_z12() {
        let r = z(12);
        let l = lat(&r);
        let cards: Vec<usize> = l.ideals().iter().map(|i| i.card()).collect();
        assert_eq!(cards, vec![1, 2, 3, 4, 6, 12]);
        let pure: Vec<bool> = l.flags().iter().map(|f| f.pure).collect();
        assert_eq!(pure, vec![true, false, true, true, false, true]);
        let regular: Vec<bool> = l.flags().iter().map(|f| f.regular).collect();
        assert_eq!(regular, pure, "pure = regular on finite rings");
        assert_eq!(l.primes().len(), 2);
        assert_eq!(l.maximals().len(), 2);
        assert_eq!(l.minimal_primes(), l.primes());
        assert_eq!(l.krull_dimension(), 0);
    }

    #[test]
    fn lattice_of_a_chain_ring() {
        let l = lat(&z(8));
        let cards: Vec<usize> = l.ideals().iter().map(|i| i.card()).collect();
        assert_eq!(cards, vec![1, 2, 4, 8]);
        assert_eq!(l.primes().len(), 1);
        assert_eq!(l.primes()[0].elements(), vec![0, 2, 4, 6]);
        let pure_count = l.flags().iter().filter(|f| f.pure).count();
        assert_eq!(pure_count, 2); // only 0 and A
    }

    #[test]
    fn lattice_of_a_product_of_fields() {
        let p = build_product(&[z(2), z(2)], &Limits::default()).unwrap();
        let l = lat(&p);
        assert_eq!(l.len(), 4);
        assert_eq!(l.primes().len(), 2);
        // Every ideal of a product of fields is pure.
        assert!(l.flags().iter().all(|f| f.pure && f.regular));
    }

    #[test]
    fn prime_spectrum_flags_are_consistent() {
        for n in [2u64, 4, 6, 12, 30, 36] {
            let l = lat(&z(n));
            for (p, max, min) in l.prime_spectrum() {
                assert!(p.is_prime() && max && min);
            }
        }
    }

    #[test]
    fn rad_of_examples_in_z12() {
        let r = z(12);
        let l = lat(&r);
        let zero = IdealSet::zero(&r);
        assert_eq!(l.rad_of(&zero).unwrap().elements(), vec![0, 6]);
        let i4 = IdealSet::new(&r, [0usize, 4, 8]).unwrap();
        assert_eq!(l.rad_of(&i4).unwrap().elements(), vec![0, 2, 4, 6, 8, 10]);
        // Rad agrees with the nilpotency radical on finite rings.
        for i in l.ideals().iter().filter(|i| i.is_proper()) {
            assert_eq!(l.rad_of(i).unwrap(), i.radical(), "at {i}");
        }
        assert!(matches!(
            l.rad_of(&IdealSet::whole(&r)),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let tight = Limits {
            lattice_cap: 3,
            ..Limits::default()
        };
        assert!(matches!(
            IdealLattice::enumerate(&z(12), &tight),
            Err(Error::IdealLatticeTooLarge { cap: 3 })
        ));
    }

    #[test]
    fn from_parts_round_trips() {
        let r = z(12);
        let l = lat(&r);
        let parts: Vec<Vec<usize>> = l.ideals().iter().map(|i| i.elements()).collect();
        let rebuilt = IdealLattice::from_parts(&r, parts, &Limits::default()).unwrap();
        assert_eq!(rebuilt.ideals(), l.ideals());
        assert_eq!(rebuilt.flags(), l.flags());
    }

    #[test]
    fn from_parts_rejects_bad_data() {
        let r = z(12);
        assert!(matches!(
            IdealLattice::from_parts(&r, vec![vec![0], vec![0, 5]], &Limits::default()),
            Err(Error::NotAnIdeal(_))
        ));
        // Missing the unit ideal.
        assert!(matches!(
            IdealLattice::from_parts(&r, vec![vec![0], vec![0, 6]], &Limits::default()),
            Err(Error::InvalidConstruction(_))
        ));
    }

    #[test]
    fn index_of_finds_canonical_positions() {
        let r = z(12);
        let l = lat(&r);
        for (k, i) in l.ideals().iter().enumerate() {
            assert_eq!(l.index_of(i), Some(k));
        }
        // An ideal of another presentation of Z/12 is still found by value.
        let other = IdealSet::new(&r, [0usize, 4, 8]).unwrap();
        assert_eq!(l.index_of(&other), Some(2));
    }
}
