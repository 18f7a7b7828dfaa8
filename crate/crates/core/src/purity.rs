//! Pure ideals, pure parts, and unit parts.
//!
//! `I` is pure when every `f` in `I` satisfies `f = f g` for some `g`
//! in `I`; equivalently `Ann(f) + I = A` for every `f` in `I`.  The
//! *unit part* `u(I)` collects the elements with such a witness, and
//! the *pure part* `nu(I)` is the largest pure ideal inside `I`,
//! reached here by iterating `u` to a fixed point.  (On a finite ring
//! one application already lands on a pure ideal: from `f = f g`
//! follows `f = f g^m` for every `m`, and some power of `g` is
//! idempotent, hence its own witness.  The loop is kept general and
//! doubles as a convergence audit.)

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ideal::IdealSet;
use crate::lattice::IdealLattice;
use crate::ring::FiniteRing;

/// Whether `f = f g` for some `g` in `members`.
fn has_witness(ring: &FiniteRing, members: &BitSet, f: usize) -> bool {
    members.iter().any(|g| ring.mul(f, g) == f)
}

/// Purity via the `f = f g` criterion, cross-checked on every member
/// against the annihilator criterion `Ann(f) + I = A`.
pub fn is_pure(ideal: &IdealSet) -> bool {
    let ring = ideal.ring();
    for f in ideal.elements() {
        let witnessed = has_witness(ring, ideal.members(), f);
        let ann_covers = {
            let ann = ring.annihilator(f);
            let total = ann.sum(ideal).expect("same ring");
            total.is_whole()
        };
        assert_eq!(
            witnessed,
            ann_covers,
            "purity criteria disagree at {} in {}",
            ring.elem_name(f),
            ideal
        );
        if !witnessed {
            return false;
        }
    }
    true
}

/// Unit part `u(I) = { f : f = f g for some g in I }`; an ideal, with
/// `nu(I) <= u(I) <= I`.
pub fn unit_part(ideal: &IdealSet) -> IdealSet {
    let ring = ideal.ring();
    let members = BitSet::from_iter(
        ring.order(),
        ring.elements()
            .filter(|&f| has_witness(ring, ideal.members(), f)),
    );
    debug_assert!(members.is_subset(ideal.members()));
    IdealSet::from_bits_unchecked(ring, members)
}

/// Pure part `nu(I)`: the largest pure ideal contained in `I`,
/// computed as the limit of the unit-part iterates.
pub fn pure_part(ideal: &IdealSet) -> IdealSet {
    pure_part_iterates(ideal).pop().expect("nonempty chain")
}

/// The descending chain `I >= u(I) >= u(u(I)) >= ..` ending at the
/// first fixed point, which is `nu(I)`.  The first entry is `I`.
pub fn pure_part_iterates(ideal: &IdealSet) -> Vec<IdealSet> {
    let mut chain = vec![ideal.clone()];
    loop {
        let next = unit_part(chain.last().unwrap());
        if &next == chain.last().unwrap() {
            break;
        }
        chain.push(next);
    }
    debug_assert!(is_pure(chain.last().unwrap()));
    chain
}

/// Oracle mode for the pure part: the sum of every pure ideal of the
/// lattice contained in `I`.  Must agree with [`pure_part`].
pub fn pure_part_via_lattice(ideal: &IdealSet, lattice: &IdealLattice) -> Result<IdealSet> {
    if !lattice.ring().same_ring(ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut acc = IdealSet::zero(ideal.ring());
    for entry in lattice.pure_ideals() {
        if entry.is_subset(ideal) {
            acc = acc.sum(&entry)?;
        }
    }
    Ok(acc)
}

/// Kernel of the localization map `A -> A_p` at a prime `p`:
/// `{ f : s f = 0 for some s outside p }`.
pub fn ker_pi(prime: &IdealSet) -> Result<IdealSet> {
    if !prime.is_prime() {
        return Err(Error::NotPrime);
    }
    let ring = prime.ring();
    let outside: Vec<usize> = ring.elements().filter(|&s| !prime.contains(s)).collect();
    let members = BitSet::from_iter(
        ring.order(),
        ring.elements()
            .filter(|&f| outside.iter().any(|&s| ring.mul(s, f) == ring.zero())),
    );
    Ok(IdealSet::from_bits_unchecked(ring, members))
}

/// Support of `I` as a module over its ring, relative to the given
/// primes: the `p` whose localization does not kill `I`, i.e. with
/// `I` not inside `Ker(A -> A_p)`.
pub fn supp(ideal: &IdealSet, primes: &[IdealSet]) -> Result<Vec<IdealSet>> {
    let mut out = Vec::new();
    for p in primes {
        if !p.ring().same_ring(ideal.ring()) {
            return Err(Error::RingMismatch);
        }
        let ker = ker_pi(p)?;
        if !ideal.is_subset(&ker) {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Boolean join `e v f = e + f - e f` of idempotents (again idempotent,
/// and generating `Ae + Af`).
pub fn idempotent_join(ring: &FiniteRing, e: usize, f: usize) -> usize {
    ring.sub(ring.add(e, f), ring.mul(e, f))
}

/// The ideal generated by the idempotents lying in `I`; equals the
/// principal ideal of their join.
pub fn idempotent_part(ideal: &IdealSet) -> IdealSet {
    let ring = ideal.ring();
    let top = ring
        .idempotents()
        .iter()
        .copied()
        .filter(|&e| ideal.contains(e))
        .fold(ring.zero(), |acc, e| idempotent_join(ring, acc, e));
    debug_assert!(ideal.contains(top));
    IdealSet::principal(ring, top)
}

/// The unique idempotent generating a pure ideal of a finite ring.
pub fn idempotent_generator(ideal: &IdealSet) -> Result<usize> {
    if !is_pure(ideal) {
        return Err(Error::NotPure);
    }
    let ring = ideal.ring();
    let mut found = None;
    for &e in ring.idempotents() {
        if ideal.contains(e) && &IdealSet::principal(ring, e) == ideal {
            if let Some(prev) = found {
                return Err(Error::InternalInvariant(format!(
                    "idempotent generator not unique: {} and {}",
                    ring.elem_name(prev),
                    ring.elem_name(e)
                )));
            }
            found = Some(e);
        }
    }
    found.ok_or_else(|| {
        Error::InternalInvariant(format!(
            "pure ideal {ideal} of a finite ring must be idempotent-generated"
        ))
    })
}

/// Max-regular ideals: maximal members of the family of proper
/// idempotent-generated ideals.  These are the points of the Pierce
/// spectrum.
pub fn max_regular_ideals(ring: &FiniteRing) -> Vec<IdealSet> {
    let mut regs: Vec<IdealSet> = Vec::new();
    for &e in ring.idempotents() {
        let i = IdealSet::principal(ring, e);
        if i.is_proper() && !regs.contains(&i) {
            regs.push(i);
        }
    }
    let mut out: Vec<IdealSet> = regs
        .iter()
        .filter(|i| !regs.iter().any(|j| i.is_subset(j) && j.card() > i.card()))
        .cloned()
        .collect();
    out.sort();
    out
}

/// One pure ideal of a finite ring, with its idempotent generator and
/// its place in the purely-prime order.
#[derive(Clone)]
pub struct PureEntry {
    pub ideal: IdealSet,
    pub generator: usize,
    pub purely_maximal: bool,
    pub purely_prime: bool,
    pub purely_minimal: bool,
}

/// The family of all pure ideals of a finite ring, canonically ordered.
pub struct PureIdeals {
    ring: FiniteRing,
    entries: Vec<PureEntry>,
}

impl PureIdeals {
    /// Classify the pure members of a full ideal lattice.
    ///
    /// Quantifiers range over pure ideals only: a proper pure `P` is
    /// *purely-maximal* if no pure ideal sits strictly between `P` and
    /// the ring, and *purely-prime* if `I J <= P` forces `I <= P` or
    /// `J <= P` for pure `I`, `J`.  A *purely-minimal* ideal is a
    /// purely-prime one containing no strictly smaller purely-prime.
    pub fn from_lattice(lattice: &IdealLattice) -> Result<PureIdeals> {
        let ring = lattice.ring().clone();
        let mut pure: Vec<IdealSet> = lattice.pure_ideals();
        pure.sort();
        let mut prime_flags = Vec::with_capacity(pure.len());
        for p in &pure {
            let mut purely_prime = p.is_proper();
            'pairs: for i in &pure {
                for j in &pure {
                    let ij = i.product(j)?;
                    if ij.is_subset(p) && !i.is_subset(p) && !j.is_subset(p) {
                        purely_prime = false;
                        break 'pairs;
                    }
                }
            }
            prime_flags.push(purely_prime);
        }
        let primes: Vec<&IdealSet> = pure
            .iter()
            .zip(&prime_flags)
            .filter(|(_, &f)| f)
            .map(|(p, _)| p)
            .collect();
        let mut entries = Vec::with_capacity(pure.len());
        for (p, &purely_prime) in pure.iter().zip(&prime_flags) {
            let generator = idempotent_generator(p)?;
            let purely_maximal = p.is_proper()
                && !pure
                    .iter()
                    .any(|q| q.is_proper() && p.is_subset(q) && q.card() > p.card());
            let purely_minimal =
                purely_prime && !primes.iter().any(|q| q.is_subset(p) && q.card() < p.card());
            entries.push(PureEntry {
                ideal: p.clone(),
                generator,
                purely_maximal,
                purely_prime,
                purely_minimal,
            });
        }
        Ok(PureIdeals { ring, entries })
    }

    /// Convenience: enumerate the lattice first, then classify.
    pub fn enumerate(ring: &FiniteRing, limits: &crate::Limits) -> Result<PureIdeals> {
        PureIdeals::from_lattice(&IdealLattice::enumerate(ring, limits)?)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn entries(&self) -> &[PureEntry] {
        &self.entries
    }

    pub fn ideals(&self) -> Vec<IdealSet> {
        self.entries.iter().map(|e| e.ideal.clone()).collect()
    }

    pub fn purely_prime(&self) -> Vec<IdealSet> {
        self.filtered(|e| e.purely_prime)
    }

    pub fn purely_maximal(&self) -> Vec<IdealSet> {
        self.filtered(|e| e.purely_maximal)
    }

    pub fn purely_minimal(&self) -> Vec<IdealSet> {
        self.filtered(|e| e.purely_minimal)
    }

    fn filtered(&self, f: impl Fn(&PureEntry) -> bool) -> Vec<IdealSet> {
        self.entries
            .iter()
            .filter(|e| f(e))
            .map(|e| e.ideal.clone())
            .collect()
    }

    pub fn contains(&self, ideal: &IdealSet) -> bool {
        self.entries.iter().any(|e| &e.ideal == ideal)
    }
}
