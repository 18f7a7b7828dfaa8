//! Ring homomorphisms between finite rings, and quotient constructions.
//!
//! Every map is verified exhaustively at construction: it must send 1
//! to 1 and commute with both operations on all pairs.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ideal::IdealSet;
use crate::limits::Limits;
use crate::ring::{Construction, FiniteRing};

/// A unital ring homomorphism, stored as an element-index map.
#[derive(Clone)]
pub struct RingHom {
    source: FiniteRing,
    target: FiniteRing,
    map: Vec<u32>,
}

impl RingHom {
    pub fn new(source: &FiniteRing, target: &FiniteRing, map: Vec<u32>) -> Result<RingHom> {
        if map.len() != source.order() {
            return Err(Error::HomViolation(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if map.iter().any(|&v| v as usize >= target.order()) {
            return Err(Error::HomViolation("image element out of range".into()));
        }
        let at = |a: usize| map[a] as usize;
        if at(source.one()) != target.one() {
            return Err(Error::HomViolation("1 is not sent to 1".into()));
        }
        if at(source.zero()) != target.zero() {
            return Err(Error::HomViolation("0 is not sent to 0".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if at(source.add(a, b)) != target.add(at(a), at(b)) {
                    return Err(Error::HomViolation(format!(
                        "additivity fails at ({}, {})",
                        source.elem_name(a),
                        source.elem_name(b)
                    )));
                }
                if at(source.mul(a, b)) != target.mul(at(a), at(b)) {
                    return Err(Error::HomViolation(format!(
                        "multiplicativity fails at ({}, {})",
                        source.elem_name(a),
                        source.elem_name(b)
                    )));
                }
            }
        }
        Ok(RingHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn from_fn(
        source: &FiniteRing,
        target: &FiniteRing,
        f: impl Fn(usize) -> usize,
    ) -> Result<RingHom> {
        let map = source.elements().map(|a| f(a) as u32).collect();
        RingHom::new(source, target, map)
    }

    pub fn identity(ring: &FiniteRing) -> RingHom {
        RingHom {
            source: ring.clone(),
            target: ring.clone(),
            map: ring.elements().map(|a| a as u32).collect(),
        }
    }

    /// Composition `self` then `next` (`next . self` as functions).
    pub fn then(&self, next: &RingHom) -> Result<RingHom> {
        if !self.target.same_ring(&next.source) {
            return Err(Error::RingMismatch);
        }
        Ok(RingHom {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&v| next.map[v as usize]).collect(),
        })
    }

    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn target(&self) -> &FiniteRing {
        &self.target
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    /// Preimage of an ideal of the target; always an ideal of the source.
    pub fn preimage(&self, ideal: &IdealSet) -> Result<IdealSet> {
        if !ideal.ring().same_ring(&self.target) {
            return Err(Error::RingMismatch);
        }
        let members = BitSet::from_iter(
            self.source.order(),
            self.source
                .elements()
                .filter(|&a| ideal.contains(self.apply(a))),
        );
        Ok(IdealSet::from_bits_unchecked(&self.source, members))
    }

    /// Ideal of the target generated by the image of a source ideal.
    pub fn image_ideal(&self, ideal: &IdealSet) -> Result<IdealSet> {
        if !ideal.ring().same_ring(&self.source) {
            return Err(Error::RingMismatch);
        }
        let gens: Vec<usize> = ideal.elements().iter().map(|&a| self.apply(a)).collect();
        Ok(IdealSet::generated(&self.target, &gens))
    }

    pub fn kernel(&self) -> IdealSet {
        self.preimage(&IdealSet::zero(&self.target))
            .expect("kernel of a verified hom")
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = BitSet::empty(self.target.order());
        for &v in &self.map {
            hit.insert(v as usize);
        }
        hit.card() == self.target.order()
    }
}

impl std::fmt::Debug for RingHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RingHom({} -> {})",
            self.source.label(),
            self.target.label()
        )
    }
}

/// Quotient `A/I` by a proper ideal, together with the projection map.
///
/// Cosets are represented by their least element index; the returned
/// ring is audited like any other construction.
pub fn quotient_ring(ring: &FiniteRing, ideal: &IdealSet) -> Result<(FiniteRing, RingHom)> {
    if !ideal.ring().same_ring(ring) {
        return Err(Error::RingMismatch);
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let n = ring.order();
    let rep: Vec<usize> = (0..n)
        .map(|a| {
            ideal
                .members()
                .iter()
                .map(|i| ring.add(a, i))
                .min()
                .expect("ideal contains 0")
        })
        .collect();
    let reps: Vec<usize> = (0..n).filter(|&a| rep[a] == a).collect();
    let mut class = vec![usize::MAX; n];
    for (c, &r) in reps.iter().enumerate() {
        class[r] = c;
    }
    let class_of = |a: usize| class[rep[a]];
    let order = reps.len();
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    for (x, &a) in reps.iter().enumerate() {
        for (y, &b) in reps.iter().enumerate() {
            add[x * order + y] = class_of(ring.add(a, b)) as u32;
            mul[x * order + y] = class_of(ring.mul(a, b)) as u32;
        }
    }
    let names: Vec<String> = reps
        .iter()
        .map(|&r| ring.elem_name(r).to_string())
        .collect();
    let construction = Construction::Quotient {
        base: Box::new(ring.construction().clone()),
        ideal: ideal.elements(),
    };
    // The quotient of a capped ring is within the cap by construction.
    let limits = Limits {
        order_cap: ring.order() as u64,
        ..Limits::default()
    };
    let quotient = FiniteRing::from_tables(
        format!("{}/{}", ring.label(), ideal),
        names,
        add,
        mul,
        class_of(ring.zero()),
        class_of(ring.one()),
        construction,
        &limits,
    )?;
    let map = (0..n).map(|a| class_of(a) as u32).collect();
    let pi = RingHom::new(ring, &quotient, map)?;
    Ok((quotient, pi))
}
