//! Ring expressions: a small constructor AST for the rings this crate
//! can build, with validation, building, and a canonical rendering.
//!
//! The rendering round-trips through the command-line grammar
//! (`Z`, `Z/12`, `Z/2[x]/(x^2+x+1)`, `Z/2 x Z/3`), so an expression can
//! be printed into a report and parsed back to an identical tree.

use crate::error::{Error, Result};
use crate::ring::{build_poly_quotient, build_product, build_zmod, poly_name, FiniteRing};
use crate::Limits;

/// A ring constructor expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    /// The ring of integers, handled by the symbolic backend.
    SymZ,
    /// `Z/n` for `n >= 2`.
    Zmod(u64),
    /// `Z/p[x]/(f)` with `f` monic of degree >= 1; `coeffs` are the
    /// canonical reduced coefficients in ascending degree order,
    /// including the leading `1`.
    PolyQuotient { modulus: u64, coeffs: Vec<u64> },
    /// A finite product of at least two finite factors.
    Product(Vec<RingExpr>),
}

/// A built ring: a concrete finite ring, or the symbolic integers.
#[derive(Debug, Clone)]
pub enum BuiltRing {
    Finite(FiniteRing),
    SymZ,
}

impl BuiltRing {
    /// The finite ring inside, if any.
    pub fn finite(&self) -> Option<&FiniteRing> {
        match self {
            BuiltRing::Finite(r) => Some(r),
            BuiltRing::SymZ => None,
        }
    }
}

impl RingExpr {
    /// Check the structural invariants of the expression.
    pub fn validate(&self) -> Result<()> {
        match self {
            RingExpr::SymZ => Ok(()),
            RingExpr::Zmod(n) => {
                if *n < 2 {
                    return Err(Error::InvalidConstruction(format!(
                        "Z/{n} is not supported; the modulus must be at least 2"
                    )));
                }
                Ok(())
            }
            RingExpr::PolyQuotient { modulus, coeffs } => {
                if *modulus < 2 {
                    return Err(Error::InvalidConstruction(format!(
                        "coefficient modulus {modulus} must be at least 2"
                    )));
                }
                if coeffs.len() < 2 {
                    return Err(Error::InvalidConstruction(
                        "the modulus polynomial must have degree at least 1".into(),
                    ));
                }
                if coeffs.last() != Some(&1) {
                    return Err(Error::InvalidConstruction(
                        "the modulus polynomial must be monic".into(),
                    ));
                }
                if let Some(c) = coeffs.iter().find(|&&c| c >= *modulus) {
                    return Err(Error::InvalidConstruction(format!(
                        "coefficient {c} is not reduced modulo {modulus}"
                    )));
                }
                Ok(())
            }
            RingExpr::Product(factors) => {
                if factors.len() < 2 {
                    return Err(Error::InvalidConstruction(
                        "a product needs at least two factors".into(),
                    ));
                }
                for f in factors {
                    match f {
                        RingExpr::SymZ => {
                            return Err(Error::InvalidConstruction(
                                "Z cannot appear inside a product".into(),
                            ))
                        }
                        RingExpr::Product(_) => {
                            return Err(Error::InvalidConstruction("products do not nest".into()))
                        }
                        _ => f.validate()?,
                    }
                }
                Ok(())
            }
        }
    }

    /// Build the ring this expression denotes, within `limits`.
    pub fn build(&self, limits: &Limits) -> Result<BuiltRing> {
        self.validate()?;
        match self {
            RingExpr::SymZ => Ok(BuiltRing::SymZ),
            RingExpr::Zmod(n) => Ok(BuiltRing::Finite(build_zmod(*n, limits)?)),
            RingExpr::PolyQuotient { modulus, coeffs } => Ok(BuiltRing::Finite(
                build_poly_quotient(*modulus, coeffs, limits)?,
            )),
            RingExpr::Product(factors) => {
                let built: Vec<FiniteRing> = factors
                    .iter()
                    .map(|f| {
                        Ok(match f.build(limits)? {
                            BuiltRing::Finite(r) => r,
                            BuiltRing::SymZ => unreachable!("validate rejects Z in products"),
                        })
                    })
                    .collect::<Result<_>>()?;
                Ok(BuiltRing::Finite(build_product(&built, limits)?))
            }
        }
    }

    /// The order of the denoted ring, when finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            RingExpr::SymZ => None,
            RingExpr::Zmod(n) => Some(*n),
            RingExpr::PolyQuotient { modulus, coeffs } => {
                modulus.checked_pow((coeffs.len() - 1) as u32)
            }
            RingExpr::Product(factors) => factors
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.order()?)),
        }
    }
}

impl std::fmt::Display for RingExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingExpr::SymZ => write!(f, "Z"),
            RingExpr::Zmod(n) => write!(f, "Z/{n}"),
            RingExpr::PolyQuotient { modulus, coeffs } => {
                let as_usize: Vec<usize> = coeffs.iter().map(|&c| c as usize).collect();
                write!(f, "Z/{modulus}[x]/({})", poly_name(&as_usize))
            }
            RingExpr::Product(factors) => {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displays_match_the_grammar() {
        assert_eq!(RingExpr::SymZ.to_string(), "Z");
        assert_eq!(RingExpr::Zmod(12).to_string(), "Z/12");
        assert_eq!(
            RingExpr::PolyQuotient {
                modulus: 2,
                coeffs: vec![1, 1, 1]
            }
            .to_string(),
            "Z/2[x]/(x^2+x+1)"
        );
        assert_eq!(
            RingExpr::Product(vec![RingExpr::Zmod(2), RingExpr::Zmod(3)]).to_string(),
            "Z/2 x Z/3"
        );
    }

    #[test]
    fn orders_multiply_and_exponentiate() {
        assert_eq!(RingExpr::SymZ.order(), None);
        assert_eq!(RingExpr::Zmod(9).order(), Some(9));
        assert_eq!(
            RingExpr::PolyQuotient {
                modulus: 3,
                coeffs: vec![2, 0, 1]
            }
            .order(),
            Some(9)
        );
        assert_eq!(
            RingExpr::Product(vec![RingExpr::Zmod(4), RingExpr::Zmod(5)]).order(),
            Some(20)
        );
    }

    #[test]
    fn validation_rejects_degenerate_expressions() {
        assert!(RingExpr::Zmod(0).validate().is_err());
        assert!(RingExpr::Zmod(1).validate().is_err());
        assert!(RingExpr::Product(vec![RingExpr::Zmod(2)])
            .validate()
            .is_err());
        assert!(RingExpr::Product(vec![RingExpr::SymZ, RingExpr::Zmod(2)])
            .validate()
            .is_err());
        assert!(RingExpr::Product(vec![
            RingExpr::Product(vec![RingExpr::Zmod(2), RingExpr::Zmod(3)]),
            RingExpr::Zmod(5)
        ])
        .validate()
        .is_err());
        // Non-monic, constant, and unreduced modulus polynomials.
        assert!(RingExpr::PolyQuotient {
            modulus: 3,
            coeffs: vec![1, 2]
        }
        .validate()
        .is_err());
        assert!(RingExpr::PolyQuotient {
            modulus: 2,
            coeffs: vec![1]
        }
        .validate()
        .is_err());
        assert!(RingExpr::PolyQuotient {
            modulus: 2,
            coeffs: vec![2, 1]
        }
        .validate()
        .is_err());
    }

    #[test]
    fn builds_agree_with_direct_constructors() {
        let limits = Limits::default();
        let direct = build_zmod(6, &limits).unwrap();
        let via_expr = RingExpr::Zmod(6).build(&limits).unwrap();
        assert!(via_expr.finite().unwrap().same_ring(&direct));

        let built = RingExpr::Product(vec![RingExpr::Zmod(2), RingExpr::Zmod(3)])
            .build(&limits)
            .unwrap();
        assert_eq!(built.finite().unwrap().order(), 6);
        assert!(matches!(
            RingExpr::SymZ.build(&limits).unwrap(),
            BuiltRing::SymZ
        ));
    }
}
