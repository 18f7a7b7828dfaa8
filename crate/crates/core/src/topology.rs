//! Finite topological spaces on ideal-labelled points.
//!
//! A space stores the full open-set family, generated from a declared
//! base by closing under pairwise unions and intersections.  Nothing
//! here assumes the spectral spaces of finite rings are discrete; the
//! properties (components, Hausdorff, compactness) are computed from
//! their definitions so that degenerate inputs and theorem checks stay
//! honest.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ideal::IdealSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    /// Prime spectrum with the Zariski topology.
    Zariski,
    /// Minimal primes with the induced flat topology.
    FlatMin,
    /// Purely-prime ideals with the pure topology.
    Pure,
    /// Max-regular ideals with the Pierce topology.
    Pierce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Prime,
    PurelyPrime,
    MaxRegular,
}

/// A finite topological space; points are canonically ordered ideals.
#[derive(Clone)]
pub struct FinTopSpace {
    kind: SpaceKind,
    point_kind: PointKind,
    points: Vec<IdealSet>,
    opens: Vec<BitSet>,
}

impl FinTopSpace {
    /// Generate the topology with the given base.  `points` must be
    /// strictly ascending in the canonical ideal order; base sets index
    /// into it.
    pub fn new(
        kind: SpaceKind,
        point_kind: PointKind,
        points: Vec<IdealSet>,
        base: Vec<BitSet>,
    ) -> Result<FinTopSpace> {
        if points
            .windows(2)
            .any(|w| w[0].cmp(&w[1]) != std::cmp::Ordering::Less)
        {
            return Err(Error::InternalInvariant(
                "space points must be strictly ascending".into(),
            ));
        }
        let n = points.len();
        if base.iter().any(|b| b.universe() != n) {
            return Err(Error::InternalInvariant(
                "base set sized for a different point count".into(),
            ));
        }
        let mut opens: Vec<BitSet> = vec![BitSet::empty(n), BitSet::full(n)];
        opens.extend(base);
        opens.sort();
        opens.dedup();
        loop {
            let mut new: Vec<BitSet> = Vec::new();
            for i in 0..opens.len() {
                for j in (i + 1)..opens.len() {
                    for candidate in [opens[i].union(&opens[j]), opens[i].intersect(&opens[j])] {
                        if opens.binary_search(&candidate).is_err() && !new.contains(&candidate) {
                            new.push(candidate);
                        }
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            opens.extend(new);
            opens.sort();
            opens.dedup();
        }
        Ok(FinTopSpace {
            kind,
            point_kind,
            points,
            opens,
        })
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn point_kind(&self) -> PointKind {
        self.point_kind
    }

    pub fn points(&self) -> &[IdealSet] {
        &self.points
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// All open sets, canonically ordered.
    pub fn opens(&self) -> &[BitSet] {
        &self.opens
    }

    pub fn full_set(&self) -> BitSet {
        BitSet::full(self.points.len())
    }

    pub fn index_of_point(&self, ideal: &IdealSet) -> Option<usize> {
        self.points.binary_search_by(|x| x.cmp(ideal)).ok()
    }

    pub fn is_open(&self, set: &BitSet) -> bool {
        self.opens.binary_search(set).is_ok()
    }

    pub fn is_closed(&self, set: &BitSet) -> bool {
        self.is_open(&set.complement())
    }

    /// Smallest closed superset: the complement of the union of all
    /// opens missing `set`.
    pub fn closure_of(&self, set: &BitSet) -> BitSet {
        let mut avoid = BitSet::empty(self.points.len());
        for o in &self.opens {
            if o.is_disjoint(set) {
                avoid = avoid.union(o);
            }
        }
        avoid.complement()
    }

    pub fn clopens(&self) -> Vec<BitSet> {
        self.opens
            .iter()
            .filter(|o| self.is_closed(o))
            .cloned()
            .collect()
    }

    /// Connected components.  Computed as quasi-components (meets of
    /// clopens), then each is verified to admit no open disconnection;
    /// on a finite space the two notions agree.
    pub fn components(&self) -> Vec<BitSet> {
        let clopens = self.clopens();
        let mut comps: Vec<BitSet> = Vec::new();
        for p in 0..self.points.len() {
            let mut qc = self.full_set();
            for c in &clopens {
                if c.contains(p) {
                    qc = qc.intersect(c);
                }
            }
            if !comps.contains(&qc) {
                assert!(
                    !self.has_disconnection(&qc),
                    "quasi-component {qc:?} must be connected on a finite space"
                );
                comps.push(qc);
            }
        }
        comps.sort();
        comps
    }

    /// Whether two opens split `set` into nonempty disjoint pieces.
    fn has_disconnection(&self, set: &BitSet) -> bool {
        for u in &self.opens {
            let a = u.intersect(set);
            if a.is_empty() || &a == set {
                continue;
            }
            for v in &self.opens {
                let b = v.intersect(set);
                if !b.is_empty() && a.is_disjoint(&b) && a.union(&b) == *set {
                    return true;
                }
            }
        }
        false
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Pairwise separation by disjoint opens; on a finite space this
    /// forces discreteness.
    pub fn is_hausdorff(&self) -> bool {
        let n = self.points.len();
        for p in 0..n {
            for q in (p + 1)..n {
                let separated = self.opens.iter().any(|u| {
                    u.contains(p)
                        && !u.contains(q)
                        && self.opens.iter().any(|v| v.contains(q) && u.is_disjoint(v))
                });
                if !separated {
                    return false;
                }
            }
        }
        true
    }

    /// Finite spaces are quasi-compact: an open cover is itself finite.
    pub fn is_quasi_compact(&self) -> bool {
        true
    }

    /// Subspace on the points selected by `keep`, with the induced
    /// topology; returns the old index of each new point alongside.
    pub fn subspace(&self, keep: &BitSet) -> Result<(FinTopSpace, Vec<usize>)> {
        let kept: Vec<usize> = keep.iter().collect();
        let mut new_index = vec![usize::MAX; self.points.len()];
        for (ni, &oi) in kept.iter().enumerate() {
            new_index[oi] = ni;
        }
        let points: Vec<IdealSet> = kept.iter().map(|&oi| self.points[oi].clone()).collect();
        let base: Vec<BitSet> = self
            .opens
            .iter()
            .map(|o| {
                BitSet::from_iter(
                    kept.len(),
                    o.iter()
                        .filter(|&oi| new_index[oi] != usize::MAX)
                        .map(|oi| new_index[oi]),
                )
            })
            .collect();
        let space = FinTopSpace::new(self.kind, self.point_kind, points, base)?;
        Ok((space, kept))
    }

    /// The component space pi0: one point per component (labelled by
    /// its least point), with the quotient topology.  Also returns the
    /// component index of every original point.
    pub fn pi0(&self) -> Result<(FinTopSpace, Vec<usize>)> {
        let mut comps = self.components();
        // Order components by least point so representatives ascend.
        comps.sort_by_key(|c| c.min_elem().unwrap_or(usize::MAX));
        let mut comp_of = vec![usize::MAX; self.points.len()];
        for (ci, c) in comps.iter().enumerate() {
            for p in c.iter() {
                comp_of[p] = ci;
            }
        }
        let points: Vec<IdealSet> = comps
            .iter()
            .map(|c| self.points[c.min_elem().expect("nonempty component")].clone())
            .collect();
        let k = comps.len();
        // Quotient topology: a set of components is open iff the union
        // of its members is open downstairs.
        let mut base = Vec::new();
        for mask in 0u64..(1 << k) {
            let preimage = comps
                .iter()
                .enumerate()
                .filter(|(ci, _)| mask >> ci & 1 == 1)
                .fold(BitSet::empty(self.points.len()), |acc, (_, c)| acc.union(c));
            if self.is_open(&preimage) {
                base.push(BitSet::from_iter(
                    k,
                    (0..k).filter(|ci| mask >> ci & 1 == 1),
                ));
            }
        }
        let space = FinTopSpace::new(self.kind, self.point_kind, points, base)?;
        Ok((space, comp_of))
    }

    /// Structural equality: same labelled points and same open family.
    /// Points of different rings never compare equal.
    pub fn same_space(&self, other: &FinTopSpace) -> bool {
        if self.points.len() != other.points.len() {
            return false;
        }
        let rings_match = match (self.points.first(), other.points.first()) {
            (Some(a), Some(b)) => a.ring().same_ring(b.ring()),
            _ => true,
        };
        rings_match
            && self
                .points
                .iter()
                .zip(&other.points)
                .all(|(a, b)| a.members() == b.members())
            && self.opens == other.opens
    }
}

impl std::fmt::Debug for FinTopSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FinTopSpace({:?}, {} points, {} opens)",
            self.kind,
            self.points.len(),
            self.opens.len()
        )
    }
}

/// Summary of topological properties of a space.
#[derive(Debug, Clone)]
pub struct TopologyProps {
    pub clopens: Vec<BitSet>,
    pub components: Vec<BitSet>,
    pub connected: bool,
    pub hausdorff: bool,
    pub quasi_compact: bool,
}

pub fn topology_props(space: &FinTopSpace) -> TopologyProps {
    TopologyProps {
        clopens: space.clopens(),
        components: space.components(),
        connected: space.is_connected(),
        hausdorff: space.is_hausdorff(),
        quasi_compact: space.is_quasi_compact(),
    }
}

/// A point map between two finite spaces.
#[derive(Clone)]
pub struct SpaceMap {
    source: FinTopSpace,
    target: FinTopSpace,
    point_map: Vec<usize>,
}

/// Verdicts of [`SpaceMap::compare`]; `homeomorphism` is bijective +
/// continuous + open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceComparison {
    pub continuous: bool,
    pub bijective: bool,
    pub open_map: bool,
    pub closed_map: bool,
    pub homeomorphism: bool,
}

impl SpaceMap {
    pub fn new(
        source: FinTopSpace,
        target: FinTopSpace,
        point_map: Vec<usize>,
    ) -> Result<SpaceMap> {
        if point_map.len() != source.point_count() {
            return Err(Error::InternalInvariant(
                "space map must be total on source points".into(),
            ));
        }
        if point_map.iter().any(|&q| q >= target.point_count()) {
            return Err(Error::InternalInvariant(
                "space map image out of range".into(),
            ));
        }
        Ok(SpaceMap {
            source,
            target,
            point_map,
        })
    }

    pub fn source(&self) -> &FinTopSpace {
        &self.source
    }

    pub fn target(&self) -> &FinTopSpace {
        &self.target
    }

    pub fn apply(&self, p: usize) -> usize {
        self.point_map[p]
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    pub fn preimage_of(&self, set: &BitSet) -> BitSet {
        BitSet::from_iter(
            self.source.point_count(),
            (0..self.source.point_count()).filter(|&p| set.contains(self.point_map[p])),
        )
    }

    pub fn image_of(&self, set: &BitSet) -> BitSet {
        BitSet::from_iter(
            self.target.point_count(),
            set.iter().map(|p| self.point_map[p]),
        )
    }

    pub fn is_continuous(&self) -> bool {
        self.target
            .opens()
            .iter()
            .all(|v| self.source.is_open(&self.preimage_of(v)))
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.point_count() != self.target.point_count() {
            return false;
        }
        let mut hit = BitSet::empty(self.target.point_count());
        for &q in &self.point_map {
            hit.insert(q);
        }
        hit.card() == self.target.point_count()
    }

    pub fn is_open_map(&self) -> bool {
        self.source
            .opens()
            .iter()
            .all(|u| self.target.is_open(&self.image_of(u)))
    }

    pub fn is_closed_map(&self) -> bool {
        self.source
            .opens()
            .iter()
            .all(|u| self.target.is_closed(&self.image_of(&u.complement())))
    }

    pub fn compare(&self) -> SpaceComparison {
        let continuous = self.is_continuous();
        let bijective = self.is_bijective();
        let open_map = self.is_open_map();
        SpaceComparison {
            continuous,
            bijective,
            open_map,
            closed_map: self.is_closed_map(),
            homeomorphism: continuous && bijective && open_map,
        }
    }
}

impl std::fmt::Debug for SpaceMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SpaceMap({:?} -> {:?}, {:?})",
            self.source, self.target, self.point_map
        )
    }
}
