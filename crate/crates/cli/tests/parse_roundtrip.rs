//! Printing a ring expression and parsing it back must be the identity.

use proptest::prelude::*;
use pure_spectra::expr::RingExpr;
use pure_spectra_cli::parse::parse_ring_expr;

fn poly_quotient() -> impl Strategy<Value = RingExpr> {
    (prop::sample::select(vec![2u64, 3, 5, 7]), 1usize..=3).prop_flat_map(|(p, degree)| {
        prop::collection::vec(0..p, degree).prop_map(move |mut coeffs| {
            coeffs.push(1);
            RingExpr::PolyQuotient { modulus: p, coeffs }
        })
    })
}

fn finite_factor() -> impl Strategy<Value = RingExpr> {
    prop_oneof![(2u64..=101).prop_map(RingExpr::Zmod), poly_quotient()]
}

fn ring_expr() -> impl Strategy<Value = RingExpr> {
    prop_oneof![
        Just(RingExpr::SymZ),
        finite_factor(),
        prop::collection::vec(finite_factor(), 2..=3).prop_map(RingExpr::Product),
    ]
}

proptest! {
    #[test]
    fn printing_then_parsing_is_the_identity(expr in ring_expr()) {
        expr.validate().expect("generated expressions are valid");
        let text = expr.to_string();
        let parsed = parse_ring_expr(&text)
            .unwrap_or_else(|e| panic!("{text:?} failed to re-parse: {e}"));
        prop_assert_eq!(parsed, expr);
    }

    #[test]
    fn parsing_is_whitespace_insensitive(expr in ring_expr()) {
        // Pad every punctuation token with spaces (numbers must stay
        // contiguous); the parse must not change.
        let text = expr.to_string();
        let spaced: String = text
            .chars()
            .flat_map(|c| {
                if c.is_ascii_alphanumeric() {
                    vec![c]
                } else {
                    vec![' ', c, ' ']
                }
            })
            .collect();
        let parsed = parse_ring_expr(&spaced);
        prop_assert_eq!(parsed.unwrap(), expr);
    }
}
