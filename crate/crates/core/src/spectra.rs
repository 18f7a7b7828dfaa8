//! The four spectral spaces of a finite ring and the canonical maps
//! between them.
//!
//! * `Spec(A)`: primes with the Zariski topology, base `D(f)`.
//! * `Min(A)`: minimal primes with the induced flat topology, base
//!   `V(I) = { p : I <= p }` over (finitely generated) ideals `I`.
//! * `Spp(A)`: purely-prime ideals with the pure topology, base
//!   `U_I = { P : I not<= P }` over pure ideals `I`.
//! * `Sp(A)`: max-regular ideals with the Pierce topology, base
//!   `d(e) = { M : e not in M }` over idempotents `e`.
//!
//! `nu` sends a prime to its pure part; `lambda` sends a purely-prime
//! ideal to the max-regular ideal generated by its idempotents.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::hom::RingHom;
use crate::lattice::IdealLattice;
use crate::limits::Limits;
use crate::purity::{self, PureIdeals};
use crate::ring::FiniteRing;
use crate::topology::{FinTopSpace, PointKind, SpaceKind, SpaceMap};

/// Which canonical map to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    /// `nu : Spec(A) -> Spp(A)`, `p -> nu(p)`.
    Nu,
    /// `lambda : Spp(A) -> Sp(A)`.
    Lambda,
}

/// Everything the verification layer needs about one ring, computed
/// eagerly and shared: lattice, pure family, spaces, canonical maps.
pub struct Analysis {
    ring: FiniteRing,
    limits: Limits,
    lattice: IdealLattice,
    pure: PureIdeals,
    zariski: FinTopSpace,
    flat_min: FinTopSpace,
    pure_space: FinTopSpace,
    pierce: FinTopSpace,
    nu: SpaceMap,
    lambda: SpaceMap,
}

impl Analysis {
    pub fn new(ring: &FiniteRing, limits: &Limits) -> Result<Analysis> {
        let lattice = IdealLattice::enumerate(ring, limits)?;
        Analysis::from_lattice(lattice, limits)
    }

    /// Build from an already-enumerated lattice (for callers that cache
    /// lattices across runs).
    pub fn from_lattice(lattice: IdealLattice, limits: &Limits) -> Result<Analysis> {
        let ring = lattice.ring().clone();
        let pure = PureIdeals::from_lattice(&lattice)?;
        let zariski = build_zariski(&lattice)?;
        let flat_min = build_flat_min(&lattice)?;
        let pure_space = build_pure_space(&lattice, &pure)?;
        let pierce = build_pierce(&ring)?;
        let nu = build_nu(&zariski, &pure_space)?;
        let lambda = build_lambda(&pure_space, &pierce)?;
        Ok(Analysis {
            ring,
            limits: limits.clone(),
            lattice,
            pure,
            zariski,
            flat_min,
            pure_space,
            pierce,
            nu,
            lambda,
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    pub fn pure(&self) -> &PureIdeals {
        &self.pure
    }

    pub fn space(&self, kind: SpaceKind) -> &FinTopSpace {
        match kind {
            SpaceKind::Zariski => &self.zariski,
            SpaceKind::FlatMin => &self.flat_min,
            SpaceKind::Pure => &self.pure_space,
            SpaceKind::Pierce => &self.pierce,
        }
    }

    /// `nu : Spec(A) -> Spp(A)`.
    pub fn nu(&self) -> &SpaceMap {
        &self.nu
    }

    /// `lambda : Spp(A) -> Sp(A)`.
    pub fn lambda(&self) -> &SpaceMap {
        &self.lambda
    }

    /// Whether every purely-prime ideal is the pure part of a prime.
    pub fn nu_surjective(&self) -> bool {
        let hit: std::collections::HashSet<usize> = self.nu.point_map().iter().copied().collect();
        (0..self.pure_space.point_count()).all(|q| hit.contains(&q))
    }
}

fn build_zariski(lattice: &IdealLattice) -> Result<FinTopSpace> {
    let ring = lattice.ring();
    let points = lattice.primes();
    let base = ring
        .elements()
        .map(|f| {
            BitSet::from_iter(
                points.len(),
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !p.contains(f))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    FinTopSpace::new(SpaceKind::Zariski, PointKind::Prime, points, base)
}

fn build_flat_min(lattice: &IdealLattice) -> Result<FinTopSpace> {
    let points = lattice.minimal_primes();
    let base = lattice
        .ideals()
        .iter()
        .map(|i| {
            BitSet::from_iter(
                points.len(),
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| i.is_subset(p))
                    .map(|(k, _)| k),
            )
        })
        .collect();
    FinTopSpace::new(SpaceKind::FlatMin, PointKind::Prime, points, base)
}

fn build_pure_space(lattice: &IdealLattice, pure: &PureIdeals) -> Result<FinTopSpace> {
    let _ = lattice;
    let points = pure.purely_prime();
    let base = pure
        .entries()
        .iter()
        .map(|e| {
            BitSet::from_iter(
                points.len(),
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !e.ideal.is_subset(p))
                    .map(|(k, _)| k),
            )
        })
        .collect();
    FinTopSpace::new(SpaceKind::Pure, PointKind::PurelyPrime, points, base)
}

fn build_pierce(ring: &FiniteRing) -> Result<FinTopSpace> {
    let points = purity::max_regular_ideals(ring);
    let base = ring
        .idempotents()
        .iter()
        .map(|&e| {
            BitSet::from_iter(
                points.len(),
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| !m.contains(e))
                    .map(|(k, _)| k),
            )
        })
        .collect();
    FinTopSpace::new(SpaceKind::Pierce, PointKind::MaxRegular, points, base)
}

fn build_nu(zariski: &FinTopSpace, pure_space: &FinTopSpace) -> Result<SpaceMap> {
    let map = zariski
        .points()
        .iter()
        .map(|p| {
            let nu_p = purity::pure_part(p);
            pure_space.index_of_point(&nu_p).ok_or_else(|| {
                Error::InternalInvariant(format!(
                    "pure part {nu_p} of prime {p} is not purely-prime"
                ))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    SpaceMap::new(zariski.clone(), pure_space.clone(), map)
}

fn build_lambda(pure_space: &FinTopSpace, pierce: &FinTopSpace) -> Result<SpaceMap> {
    let map = pure_space
        .points()
        .iter()
        .map(|p| {
            let l = purity::idempotent_part(p);
            pierce.index_of_point(&l).ok_or_else(|| {
                Error::InternalInvariant(format!(
                    "idempotent part {l} of purely-prime {p} is not max-regular"
                ))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    SpaceMap::new(pure_space.clone(), pierce.clone(), map)
}

/// Build a single spectral space of a ring.
pub fn build_space(ring: &FiniteRing, kind: SpaceKind, limits: &Limits) -> Result<FinTopSpace> {
    match kind {
        SpaceKind::Pierce => build_pierce(ring),
        SpaceKind::Zariski => build_zariski(&IdealLattice::enumerate(ring, limits)?),
        SpaceKind::FlatMin => build_flat_min(&IdealLattice::enumerate(ring, limits)?),
        SpaceKind::Pure => {
            let lattice = IdealLattice::enumerate(ring, limits)?;
            let pure = PureIdeals::from_lattice(&lattice)?;
            build_pure_space(&lattice, &pure)
        }
    }
}

/// Build one of the canonical maps of a ring.
pub fn canonical_map(ring: &FiniteRing, kind: MapKind, limits: &Limits) -> Result<SpaceMap> {
    let analysis = Analysis::new(ring, limits)?;
    Ok(match kind {
        MapKind::Nu => analysis.nu.clone(),
        MapKind::Lambda => analysis.lambda.clone(),
    })
}

/// Contravariant action of a ring map on pure spectra:
/// `Spp(phi) : Spp(B) -> Spp(A)`, `P -> nu(phi^-1(P))` for
/// `phi : A -> B`.  The analyses must belong to the map's endpoints.
pub fn spp_of_hom_with(
    hom: &RingHom,
    source_analysis: &Analysis,
    target_analysis: &Analysis,
) -> Result<SpaceMap> {
    if !source_analysis.ring().same_ring(hom.source())
        || !target_analysis.ring().same_ring(hom.target())
    {
        return Err(Error::RingMismatch);
    }
    let spp_b = target_analysis.space(SpaceKind::Pure);
    let spp_a = source_analysis.space(SpaceKind::Pure);
    let map = spp_b
        .points()
        .iter()
        .map(|p| {
            let back = purity::pure_part(&hom.preimage(p)?);
            spp_a.index_of_point(&back).ok_or_else(|| {
                Error::InternalInvariant(format!(
                    "nu of the contraction of {p} is not purely-prime"
                ))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    SpaceMap::new(spp_b.clone(), spp_a.clone(), map)
}

/// As [`spp_of_hom_with`], building both analyses on the fly.
pub fn spp_of_hom(hom: &RingHom, limits: &Limits) -> Result<SpaceMap> {
    let source_analysis = Analysis::new(hom.source(), limits)?;
    let target_analysis = Analysis::new(hom.target(), limits)?;
    spp_of_hom_with(hom, &source_analysis, &target_analysis)
}
