//! Finite commutative rings presented by operation tables.
//!
//! A ring is stored as flat addition/multiplication tables over element
//! indices `0..order`, audited exhaustively at construction time: every
//! axiom of a commutative unital ring is checked over all element
//! triples, so downstream code may assume the tables are sound.
//!
//! The zero ring is rejected by every constructor.  With `1 = 0` there
//! are no prime, maximal, or purely-prime ideals, and every spectral
//! statement degenerates; keeping it out preserves the invariant that
//! proper ideals sit below a maximal one.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// How a ring was built.  Used for labels, cache keys, and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// `Z/n`, `n >= 2`.
    Zmod { n: u64 },
    /// Direct product of the listed constructions.
    Product { factors: Vec<Construction> },
    /// `Z/n[x]/(f)` with `f` monic of degree >= 1; `coeffs` ascending,
    /// canonical (`coeffs[i] < n`, last coefficient 1).
    PolyQuotient { modulus: u64, coeffs: Vec<u64> },
    /// Quotient of a base construction by the ideal with the given
    /// sorted element indices.
    Quotient {
        base: Box<Construction>,
        ideal: Vec<usize>,
    },
    /// Hand-supplied tables (tests, imports); not cacheable.
    Custom { name: String },
}

impl Construction {
    /// Stable byte encoding used as cache-key input.
    pub fn cache_key_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.encode(&mut out);
        out
    }

    fn encode(&self, out: &mut Vec<u8>) {
        match self {
            Construction::Zmod { n } => {
                out.push(b'Z');
                out.extend_from_slice(&n.to_le_bytes());
            }
            Construction::Product { factors } => {
                out.push(b'P');
                out.extend_from_slice(&(factors.len() as u64).to_le_bytes());
                for f in factors {
                    f.encode(out);
                }
            }
            Construction::PolyQuotient { modulus, coeffs } => {
                out.push(b'Q');
                out.extend_from_slice(&modulus.to_le_bytes());
                out.extend_from_slice(&(coeffs.len() as u64).to_le_bytes());
                for c in coeffs {
                    out.extend_from_slice(&c.to_le_bytes());
                }
            }
            Construction::Quotient { base, ideal } => {
                out.push(b'/');
                base.encode(out);
                out.extend_from_slice(&(ideal.len() as u64).to_le_bytes());
                for i in ideal {
                    out.extend_from_slice(&(*i as u64).to_le_bytes());
                }
            }
            Construction::Custom { name } => {
                out.push(b'C');
                out.extend_from_slice(name.as_bytes());
            }
        }
    }
}

struct RingData {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    label: String,
    elem_names: Vec<String>,
    construction: Construction,
    idempotents: Vec<usize>,
    fingerprint: u64,
}

/// A finite commutative unital ring.  Cheap to clone (shared tables).
#[derive(Clone)]
pub struct FiniteRing(Arc<RingData>);

impl FiniteRing {
    /// Build a ring from explicit tables and audit every axiom.
    ///
    /// `add` and `mul` are row-major `order x order` tables of element
    /// indices.  Fails with [`Error::AxiomViolation`] on the first
    /// broken axiom, naming the witnesses.
    #[allow(clippy::too_many_arguments)] // a ring is defined by exactly this data
    pub fn from_tables(
        label: impl Into<String>,
        elem_names: Vec<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        construction: Construction,
        limits: &Limits,
    ) -> Result<FiniteRing> {
        let label = label.into();
        let order = elem_names.len();
        if order < 2 {
            return Err(Error::InvalidConstruction(format!(
                "ring {label:?} would have order {order}; the zero ring is not supported"
            )));
        }
        if order as u64 > limits.order_cap {
            return Err(Error::OrderCapExceeded {
                order: order as u64,
                cap: limits.order_cap,
            });
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::InvalidConstruction(format!(
                "tables for {label:?} must each have {} entries",
                order * order
            )));
        }
        if zero >= order || one >= order {
            return Err(Error::InvalidConstruction(format!(
                "distinguished elements of {label:?} out of range"
            )));
        }
        let neg = audit_tables(order, &add, &mul, zero, one, &elem_names)?;
        let idempotents = (0..order)
            .filter(|&e| mul[e * order + e] as usize == e)
            .collect();
        let fingerprint = {
            let mut h = DefaultHasher::new();
            (order, zero, one).hash(&mut h);
            add.hash(&mut h);
            mul.hash(&mut h);
            h.finish()
        };
        Ok(FiniteRing(Arc::new(RingData {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            label,
            elem_names,
            construction,
            idempotents,
            fingerprint,
        })))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn construction(&self) -> &Construction {
        &self.0.construction
    }

    pub fn zero(&self) -> usize {
        self.0.zero
    }

    pub fn one(&self) -> usize {
        self.0.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.order + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.order + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, k: u32) -> usize {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_unit(&self, a: usize) -> bool {
        let one = self.one();
        (0..self.0.order).any(|b| self.mul(a, b) == one)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.order
    }

    pub fn elem_name(&self, a: usize) -> &str {
        &self.0.elem_names[a]
    }

    /// Idempotent elements, ascending.
    pub fn idempotents(&self) -> &[usize] {
        &self.0.idempotents
    }

    /// Structural hash of the tables; equal for equal presentations.
    pub fn fingerprint(&self) -> u64 {
        self.0.fingerprint
    }

    /// Whether two handles denote the same presented ring (same tables,
    /// not merely isomorphic rings).
    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.fingerprint == other.0.fingerprint
                && self.0.order == other.0.order
                && self.0.zero == other.0.zero
                && self.0.one == other.0.one
                && self.0.add == other.0.add
                && self.0.mul == other.0.mul)
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.0.label, self.0.order)
    }
}

/// Verify all commutative-unital-ring axioms over every element triple.
/// Returns the negation table on success.
fn audit_tables(
    order: usize,
    add: &[u32],
    mul: &[u32],
    zero: usize,
    one: usize,
    names: &[String],
) -> Result<Vec<u32>> {
    let idx = |a: usize, b: usize| a * order + b;
    for a in 0..order {
        for b in 0..order {
            let s = add[idx(a, b)] as usize;
            let p = mul[idx(a, b)] as usize;
            if s >= order || p >= order {
                return Err(Error::InvalidConstruction(format!(
                    "table entry out of range at ({}, {})",
                    names[a], names[b]
                )));
            }
        }
    }
    if zero == one {
        return Err(Error::AxiomViolation(
            "0 = 1 (zero ring is not supported)".into(),
        ));
    }
    let mut neg = vec![u32::MAX; order];
    for a in 0..order {
        if add[idx(a, zero)] as usize != a {
            return Err(Error::AxiomViolation(format!(
                "0 is not an additive identity at {}",
                names[a]
            )));
        }
        if mul[idx(a, one)] as usize != a {
            return Err(Error::AxiomViolation(format!(
                "1 is not a multiplicative identity at {}",
                names[a]
            )));
        }
        for b in 0..order {
            if add[idx(a, b)] != add[idx(b, a)] {
                return Err(Error::AxiomViolation(format!(
                    "addition is not commutative at ({}, {})",
                    names[a], names[b]
                )));
            }
            if mul[idx(a, b)] != mul[idx(b, a)] {
                return Err(Error::AxiomViolation(format!(
                    "multiplication is not commutative at ({}, {})",
                    names[a], names[b]
                )));
            }
            if add[idx(a, b)] as usize == zero {
                neg[a] = b as u32;
            }
        }
        if neg[a] == u32::MAX {
            return Err(Error::AxiomViolation(format!(
                "{} has no additive inverse",
                names[a]
            )));
        }
    }
    for a in 0..order {
        for b in 0..order {
            let ab_add = add[idx(a, b)] as usize;
            let ab_mul = mul[idx(a, b)] as usize;
            for c in 0..order {
                if add[idx(ab_add, c)] != add[idx(a, add[idx(b, c)] as usize)] {
                    return Err(Error::AxiomViolation(format!(
                        "addition is not associative at ({}, {}, {})",
                        names[a], names[b], names[c]
                    )));
                }
                if mul[idx(ab_mul, c)] != mul[idx(a, mul[idx(b, c)] as usize)] {
                    return Err(Error::AxiomViolation(format!(
                        "multiplication is not associative at ({}, {}, {})",
                        names[a], names[b], names[c]
                    )));
                }
                if mul[idx(a, add[idx(b, c)] as usize)] != add[idx(ab_mul, mul[idx(a, c)] as usize)]
                {
                    return Err(Error::AxiomViolation(format!(
                        "multiplication does not distribute at ({}, {}, {})",
                        names[a], names[b], names[c]
                    )));
                }
            }
        }
    }
    Ok(neg)
}

/// The ring `Z/n` of integers modulo `n`, `n >= 2`.
pub fn build_zmod(n: u64, limits: &Limits) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidConstruction(format!(
            "Z/{n} is not a finite nonzero ring; modulus must be at least 2"
        )));
    }
    if n > limits.order_cap {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap: limits.order_cap,
        });
    }
    let order = n as usize;
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            add[a * order + b] = ((a + b) % order) as u32;
            mul[a * order + b] = ((a * b) % order) as u32;
        }
    }
    let names = (0..order).map(|a| a.to_string()).collect();
    FiniteRing::from_tables(
        format!("Z/{n}"),
        names,
        add,
        mul,
        0,
        1,
        Construction::Zmod { n },
        limits,
    )
}

/// Direct product of two or more rings, with componentwise operations.
pub fn build_product(factors: &[FiniteRing], limits: &Limits) -> Result<FiniteRing> {
    if factors.len() < 2 {
        return Err(Error::InvalidConstruction(format!(
            "a product needs at least 2 factors, got {}",
            factors.len()
        )));
    }
    let mut order: u64 = 1;
    for f in factors {
        order = order
            .checked_mul(f.order() as u64)
            .filter(|&o| o <= limits.order_cap)
            .ok_or(Error::OrderCapExceeded {
                order: u64::MAX,
                cap: limits.order_cap,
            })?;
    }
    let order = order as usize;
    // Mixed-radix index: the first factor is the most significant digit.
    let split = |mut e: usize| -> Vec<usize> {
        let mut parts = vec![0; factors.len()];
        for (i, f) in factors.iter().enumerate().rev() {
            parts[i] = e % f.order();
            e /= f.order();
        }
        parts
    };
    let join = |parts: &[usize]| -> usize {
        let mut e = 0;
        for (i, f) in factors.iter().enumerate() {
            e = e * f.order() + parts[i];
        }
        e
    };
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    for a in 0..order {
        let pa = split(a);
        for b in 0..order {
            let pb = split(b);
            let sum: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.add(pa[i], pb[i]))
                .collect();
            let prod: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.mul(pa[i], pb[i]))
                .collect();
            add[a * order + b] = join(&sum) as u32;
            mul[a * order + b] = join(&prod) as u32;
        }
    }
    let names = (0..order)
        .map(|e| {
            let parts = split(e);
            let inner: Vec<&str> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.elem_name(parts[i]))
                .collect();
            format!("({})", inner.join(","))
        })
        .collect();
    let zero = join(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    let one = join(&factors.iter().map(|f| f.one()).collect::<Vec<_>>());
    let label = factors
        .iter()
        .map(|f| f.label().to_string())
        .collect::<Vec<_>>()
        .join(" x ");
    let construction = Construction::Product {
        factors: factors.iter().map(|f| f.construction().clone()).collect(),
    };
    FiniteRing::from_tables(label, names, add, mul, zero, one, construction, limits)
}

/// `Z/n[x]/(f)` for a monic `f` of degree >= 1 with canonical ascending
/// coefficients (`coeffs[i] < n`, last entry 1).  Elements are residue
/// polynomials of degree < deg f, indexed in base `n` by coefficients.
pub fn build_poly_quotient(modulus: u64, coeffs: &[u64], limits: &Limits) -> Result<FiniteRing> {
    if modulus < 2 {
        return Err(Error::InvalidConstruction(format!(
            "polynomial quotient needs modulus >= 2, got {modulus}"
        )));
    }
    if coeffs.len() < 2 {
        return Err(Error::InvalidConstruction(
            "polynomial modulus must have degree at least 1".into(),
        ));
    }
    if coeffs.iter().any(|&c| c >= modulus) {
        return Err(Error::InvalidConstruction(format!(
            "coefficients must be reduced modulo {modulus}"
        )));
    }
    if *coeffs.last().unwrap() != 1 {
        return Err(Error::InvalidConstruction(
            "polynomial modulus must be monic".into(),
        ));
    }
    let deg = coeffs.len() - 1;
    let mut order: u64 = 1;
    for _ in 0..deg {
        order = order
            .checked_mul(modulus)
            .filter(|&o| o <= limits.order_cap)
            .ok_or(Error::OrderCapExceeded {
                order: u64::MAX,
                cap: limits.order_cap,
            })?;
    }
    let n = modulus as usize;
    let order = order as usize;
    let split = |mut e: usize| -> Vec<usize> {
        let mut cs = vec![0; deg];
        for c in cs.iter_mut() {
            *c = e % n;
            e /= n;
        }
        cs
    };
    let join = |cs: &[usize]| -> usize { cs.iter().rev().fold(0, |acc, &c| acc * n + c) };
    let reduce = |prod: &mut Vec<usize>| {
        // Eliminate powers >= deg using x^deg = -(c_0 + .. + c_{deg-1} x^{deg-1}).
        for i in (deg..prod.len()).rev() {
            let lead = prod[i];
            prod[i] = 0;
            if lead == 0 {
                continue;
            }
            for (k, &fc) in coeffs.iter().enumerate().take(deg) {
                let j = i - deg + k;
                prod[j] = (prod[j] + n * n - (lead * (fc as usize)) % n) % n;
            }
        }
        prod.truncate(deg);
    };
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    for a in 0..order {
        let ca = split(a);
        for b in 0..order {
            let cb = split(b);
            let sum: Vec<usize> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % n).collect();
            let mut prod = vec![0usize; 2 * deg - 1];
            for (i, &x) in ca.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in cb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % n;
                }
            }
            reduce(&mut prod);
            add[a * order + b] = join(&sum) as u32;
            mul[a * order + b] = join(&prod) as u32;
        }
    }
    let names = (0..order).map(|e| poly_name(&split(e))).collect::<Vec<_>>();
    let f_name = poly_name(&coeffs.iter().map(|&c| c as usize).collect::<Vec<usize>>());
    let label = format!("Z/{modulus}[x]/({f_name})");
    let construction = Construction::PolyQuotient {
        modulus,
        coeffs: coeffs.to_vec(),
    };
    FiniteRing::from_tables(label, names, add, mul, 0, 1, construction, limits)
}

/// Render ascending coefficients as a polynomial in `x`, descending powers.
pub fn poly_name(coeffs: &[usize]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (k, c) {
            (0, _) => c.to_string(),
            (1, 1) => "x".into(),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{k}"),
            (_, _) => format!("{c}x^{k}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn zmod_tables_match_modular_arithmetic() {
        let r = build_zmod(12, &limits()).unwrap();
        assert_eq!(r.order(), 12);
        assert_eq!(r.label(), "Z/12");
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(r.add(a, b), (a + b) % 12);
                assert_eq!(r.mul(a, b), (a * b) % 12);
            }
            assert_eq!(r.add(a, r.neg(a)), 0);
        }
        assert_eq!(r.elem_name(7), "7");
    }

    #[test]
    fn zmod_rejects_degenerate_moduli() {
        assert!(matches!(
            build_zmod(0, &limits()),
            Err(Error::InvalidConstruction(_))
        ));
        assert!(matches!(
            build_zmod(1, &limits()),
            Err(Error::InvalidConstruction(_))
        ));
    }

    #[test]
    fn order_cap_is_enforced() {
        assert!(matches!(
            build_zmod(513, &limits()),
            Err(Error::OrderCapExceeded {
                order: 513,
                cap: 512
            })
        ));
        let tight = Limits {
            order_cap: 10,
            ..limits()
        };
        assert!(build_zmod(10, &tight).is_ok());
        assert!(build_zmod(11, &tight).is_err());
    }

    #[test]
    fn idempotents_of_z12() {
        let r = build_zmod(12, &limits()).unwrap();
        assert_eq!(r.idempotents(), &[0, 1, 4, 9]);
    }

    #[test]
    fn product_is_componentwise() {
        let z2 = build_zmod(2, &limits()).unwrap();
        let z3 = build_zmod(3, &limits()).unwrap();
        let p = build_product(&[z2.clone(), z3.clone()], &limits()).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.label(), "Z/2 x Z/3");
        // index = a*3 + b for (a, b)
        for a in 0..2 {
            for b in 0..3 {
                for c in 0..2 {
                    for d in 0..3 {
                        let x = a * 3 + b;
                        let y = c * 3 + d;
                        assert_eq!(p.add(x, y), ((a + c) % 2) * 3 + (b + d) % 3);
                        assert_eq!(p.mul(x, y), (a * c % 2) * 3 + b * d % 3);
                    }
                }
            }
        }
        assert_eq!(p.elem_name(5), "(1,2)");
        assert_eq!(p.zero(), 0);
        assert_eq!(p.one(), 4); // (1,1)
    }

    #[test]
    fn product_rejects_single_factor() {
        let z2 = build_zmod(2, &limits()).unwrap();
        assert!(matches!(
            build_product(&[z2], &limits()),
            Err(Error::InvalidConstruction(_))
        ));
    }

    #[test]
    fn product_respects_order_cap() {
        let z32 = build_zmod(32, &limits()).unwrap();
        assert!(matches!(
            build_product(&[z32.clone(), z32.clone()], &limits()),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn poly_quotient_f4_is_a_field() {
        // Z/2[x]/(x^2+x+1) is the field with 4 elements.
        let f4 = build_poly_quotient(2, &[1, 1, 1], &limits()).unwrap();
        assert_eq!(f4.order(), 4);
        assert_eq!(f4.label(), "Z/2[x]/(x^2+x+1)");
        for a in f4.elements() {
            if a != f4.zero() {
                assert!(f4.is_unit(a), "nonzero element {} must be a unit", a);
            }
        }
        // x * (x+1) = x^2 + x = 1 in F4.
        let x = 2; // coeffs (0,1)
        let x1 = 3; // coeffs (1,1)
        assert_eq!(f4.mul(x, x1), f4.one());
        assert_eq!(f4.elem_name(2), "x");
        assert_eq!(f4.elem_name(3), "x+1");
    }

    #[test]
    fn poly_quotient_dual_numbers_have_nilpotent() {
        // Z/2[x]/(x^2): x^2 = 0.
        let r = build_poly_quotient(2, &[0, 0, 1], &limits()).unwrap();
        assert_eq!(r.order(), 4);
        let x = 2;
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(r.idempotents(), &[0, 1]);
    }

    #[test]
    fn poly_quotient_validates_input() {
        assert!(build_poly_quotient(2, &[1], &limits()).is_err()); // degree 0
        assert!(build_poly_quotient(2, &[1, 2, 1], &limits()).is_err()); // unreduced
        assert!(build_poly_quotient(3, &[0, 0, 2], &limits()).is_err()); // not monic
        assert!(build_poly_quotient(1, &[0, 1], &limits()).is_err()); // modulus 1
    }

    #[test]
    fn audit_rejects_broken_tables() {
        // Swap one multiplication entry of Z/3 to break commutativity.
        let names: Vec<String> = (0..3).map(|i| i.to_string()).collect();
        let add: Vec<u32> = (0..9).map(|i| ((i / 3 + i % 3) % 3) as u32).collect();
        let mut mul: Vec<u32> = (0..9).map(|i| ((i / 3) * (i % 3) % 3) as u32).collect();
        mul[3 + 2] = 0; // 1*2 := 0 while 2*1 = 2
        let err = FiniteRing::from_tables(
            "bad",
            names,
            add,
            mul,
            0,
            1,
            Construction::Custom { name: "bad".into() },
            &limits(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::AxiomViolation(_)));
    }

    #[test]
    fn poly_names_render_descending() {
        assert_eq!(poly_name(&[0]), "0");
        assert_eq!(poly_name(&[1, 1, 1]), "x^2+x+1");
        assert_eq!(poly_name(&[2, 0, 1]), "x^2+2");
        assert_eq!(poly_name(&[0, 3]), "3x");
    }

    #[test]
    fn same_ring_distinguishes_presentations() {
        let a = build_zmod(6, &limits()).unwrap();
        let b = build_zmod(6, &limits()).unwrap();
        let c = build_zmod(7, &limits()).unwrap();
        assert!(a.same_ring(&a));
        assert!(a.same_ring(&b), "equal tables count as the same ring");
        assert!(!a.same_ring(&c));
        // Z/6 and Z/2 x Z/3 are isomorphic but differently presented.
        let z2 = build_zmod(2, &limits()).unwrap();
        let z3 = build_zmod(3, &limits()).unwrap();
        let p = build_product(&[z2, z3], &limits()).unwrap();
        assert!(!a.same_ring(&p));
    }

    #[test]
    fn construction_cache_keys_are_injective_on_samples() {
        let samples = [
            Construction::Zmod { n: 12 },
            Construction::Zmod { n: 2 },
            Construction::Product {
                factors: vec![Construction::Zmod { n: 1 }, Construction::Zmod { n: 2 }],
            },
            Construction::Product {
                factors: vec![Construction::Zmod { n: 2 }, Construction::Zmod { n: 1 }],
            },
            Construction::PolyQuotient {
                modulus: 2,
                coeffs: vec![1, 1, 1],
            },
            Construction::PolyQuotient {
                modulus: 2,
                coeffs: vec![0, 0, 1],
            },
        ];
        let keys: Vec<Vec<u8>> = samples.iter().map(|c| c.cache_key_bytes()).collect();
        for i in 0..keys.len() {
            for j in 0..keys.len() {
                assert_eq!(i == j, keys[i] == keys[j], "samples {i} and {j}");
            }
        }
    }
}
