//! Ideals of a finite ring, represented as explicit element sets.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// An ideal of a fixed finite ring, stored as its full element set.
#[derive(Clone)]
pub struct IdealSet {
    ring: FiniteRing,
    members: BitSet,
}

impl IdealSet {
    /// Validate that `elems` is an ideal and wrap it.
    pub fn new<I: IntoIterator<Item = usize>>(ring: &FiniteRing, elems: I) -> Result<IdealSet> {
        let members = BitSet::from_iter(ring.order(), elems);
        check_is_ideal(ring, &members)?;
        Ok(IdealSet {
            ring: ring.clone(),
            members,
        })
    }

    pub fn from_bits(ring: &FiniteRing, members: BitSet) -> Result<IdealSet> {
        check_is_ideal(ring, &members)?;
        Ok(IdealSet {
            ring: ring.clone(),
            members,
        })
    }

    /// Wrap a set already known to be an ideal (checked in debug builds).
    pub(crate) fn from_bits_unchecked(ring: &FiniteRing, members: BitSet) -> IdealSet {
        debug_assert!(check_is_ideal(ring, &members).is_ok());
        IdealSet {
            ring: ring.clone(),
            members,
        }
    }

    pub fn zero(ring: &FiniteRing) -> IdealSet {
        IdealSet {
            ring: ring.clone(),
            members: BitSet::singleton(ring.order(), ring.zero()),
        }
    }

    pub fn whole(ring: &FiniteRing) -> IdealSet {
        IdealSet {
            ring: ring.clone(),
            members: BitSet::full(ring.order()),
        }
    }

    /// The principal ideal `Af = { a f : a in A }`.
    pub fn principal(ring: &FiniteRing, f: usize) -> IdealSet {
        let members = BitSet::from_iter(ring.order(), ring.elements().map(|a| ring.mul(a, f)));
        IdealSet {
            ring: ring.clone(),
            members,
        }
    }

    /// The ideal generated by `gens`: the sum of their principal ideals.
    pub fn generated(ring: &FiniteRing, gens: &[usize]) -> IdealSet {
        let mut members = BitSet::singleton(ring.order(), ring.zero());
        for &g in gens {
            members = set_sum(ring, &members, IdealSet::principal(ring, g).members());
        }
        IdealSet {
            ring: ring.clone(),
            members,
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.iter().collect()
    }

    pub fn card(&self) -> usize {
        self.members.card()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn is_zero(&self) -> bool {
        self.card() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.card() == self.ring.order()
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(self.ring.one())
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.assert_same_ring(other);
        self.members.is_subset(&other.members)
    }

    fn assert_same_ring(&self, other: &IdealSet) {
        assert!(
            self.ring.same_ring(&other.ring),
            "ideals of different rings"
        );
    }

    fn check_same_ring(&self, other: &IdealSet) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Ideal sum `I + J`.
    pub fn sum(&self, other: &IdealSet) -> Result<IdealSet> {
        self.check_same_ring(other)?;
        Ok(IdealSet {
            ring: self.ring.clone(),
            members: set_sum(&self.ring, &self.members, &other.members),
        })
    }

    /// Ideal product `I J`: additive closure of pairwise products.
    pub fn product(&self, other: &IdealSet) -> Result<IdealSet> {
        self.check_same_ring(other)?;
        let ring = &self.ring;
        let mut seed = BitSet::singleton(ring.order(), ring.zero());
        for a in self.members.iter() {
            for b in other.members.iter() {
                seed.insert(ring.mul(a, b));
            }
        }
        Ok(IdealSet {
            ring: ring.clone(),
            members: additive_closure(ring, seed),
        })
    }

    /// Ideal intersection.
    pub fn intersect(&self, other: &IdealSet) -> Result<IdealSet> {
        self.check_same_ring(other)?;
        Ok(IdealSet {
            ring: self.ring.clone(),
            members: self.members.intersect(&other.members),
        })
    }

    /// Radical `sqrt(I) = { a : a^k in I for some k >= 1 }`.
    pub fn radical(&self) -> IdealSet {
        let ring = &self.ring;
        let n = ring.order();
        let mut out = BitSet::empty(n);
        for a in ring.elements() {
            let mut p = a;
            for _ in 0..n {
                if self.members.contains(p) {
                    out.insert(a);
                    break;
                }
                p = ring.mul(p, a);
            }
        }
        IdealSet::from_bits_unchecked(ring, out)
    }

    /// Prime: proper, and `ab in I` forces `a in I` or `b in I`.
    pub fn is_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let ring = &self.ring;
        let outside: Vec<usize> = ring
            .elements()
            .filter(|&a| !self.members.contains(a))
            .collect();
        for &a in &outside {
            for &b in &outside {
                if self.members.contains(ring.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Maximal: proper, and adjoining any outside element generates the
    /// whole ring.
    pub fn is_maximal(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let ring = &self.ring;
        for a in ring.elements() {
            if self.members.contains(a) {
                continue;
            }
            let grown = set_sum(ring, &self.members, IdealSet::principal(ring, a).members());
            if grown.card() != ring.order() {
                return false;
            }
        }
        true
    }
}

impl FiniteRing {
    /// The annihilator ideal `Ann(f) = { g : g f = 0 }`.
    pub fn annihilator(&self, f: usize) -> IdealSet {
        let zero = self.zero();
        let members = BitSet::from_iter(
            self.order(),
            self.elements().filter(|&g| self.mul(g, f) == zero),
        );
        IdealSet::from_bits_unchecked(self, members)
    }
}

/// Element-wise sum set `{ a + b }`; for ideals this is the ideal sum.
pub(crate) fn set_sum(ring: &FiniteRing, a: &BitSet, b: &BitSet) -> BitSet {
    let mut out = BitSet::empty(ring.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// Close a set containing 0 under addition (finite, so this also closes
/// under negation).
pub(crate) fn additive_closure(ring: &FiniteRing, seed: BitSet) -> BitSet {
    let mut closed = seed;
    let mut frontier: Vec<usize> = closed.iter().collect();
    while let Some(x) = frontier.pop() {
        let current: Vec<usize> = closed.iter().collect();
        for y in current {
            let s = ring.add(x, y);
            if !closed.contains(s) {
                closed.insert(s);
                frontier.push(s);
            }
        }
    }
    closed
}

fn check_is_ideal(ring: &FiniteRing, members: &BitSet) -> Result<()> {
    if members.universe() != ring.order() {
        return Err(Error::NotAnIdeal(
            "element set sized for a different ring".into(),
        ));
    }
    if !members.contains(ring.zero()) {
        return Err(Error::NotAnIdeal("must contain 0".into()));
    }
    let elems: Vec<usize> = members.iter().collect();
    for &a in &elems {
        for &b in &elems {
            let s = ring.add(a, b);
            if !members.contains(s) {
                return Err(Error::NotAnIdeal(format!(
                    "not closed under addition: {} + {} = {}",
                    ring.elem_name(a),
                    ring.elem_name(b),
                    ring.elem_name(s)
                )));
            }
        }
        for r in ring.elements() {
            let p = ring.mul(r, a);
            if !members.contains(p) {
                return Err(Error::NotAnIdeal(format!(
                    "not closed under multiplication: {} * {} = {}",
                    ring.elem_name(r),
                    ring.elem_name(a),
                    ring.elem_name(p)
                )));
            }
        }
    }
    Ok(())
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.assert_same_ring(other);
        self.members == other.members
    }
}

impl Eq for IdealSet {}

impl Hash for IdealSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for IdealSet {
    /// Canonical order: cardinality, then first differing element.
    fn cmp(&self, other: &Self) -> Ordering {
        self.assert_same_ring(other);
        self.members.cmp(&other.members)
    }
}

impl PartialOrd for IdealSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .members
            .iter()
            .map(|a| self.ring.elem_name(a))
            .collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
