/// Resource caps enforced by ring construction and ideal enumeration.
///
/// The defaults keep exhaustive enumeration comfortably fast: ring
/// construction audits all `n^3` triples of the axiom quantifiers, and
/// the ideal lattice of a product of small rings can grow quickly.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest permitted ring order.
    pub order_cap: u64,
    /// Largest permitted number of ideals in an enumerated lattice.
    pub lattice_cap: usize,
    /// Family size used by quantified theorem checks (families of
    /// ideals up to this size are enumerated exhaustively).
    pub family_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: 512,
            lattice_cap: 100_000,
            family_size: 2,
        }
    }
}
