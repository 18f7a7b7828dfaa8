//! Property-based laws for the ideal algebra, the purity operators, the
//! bit-set container, and the symbolic integer backend.

use std::collections::HashSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use pure_spectra::bits::BitSet;
use pure_spectra::ideal::IdealSet;
use pure_spectra::lattice::IdealLattice;
use pure_spectra::purity::{is_pure, pure_part, unit_part};
use pure_spectra::ring::{build_poly_quotient, build_product, build_zmod, FiniteRing};
use pure_spectra::symz::ZIdeal;
use pure_spectra::Limits;

/// Rings with precomputed ideal lattices, built once and shared across
/// all property cases.
fn pool() -> &'static Vec<(FiniteRing, Vec<IdealSet>)> {
    static POOL: OnceLock<Vec<(FiniteRing, Vec<IdealSet>)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let l = Limits::default();
        let z2 = build_zmod(2, &l).unwrap();
        let z3 = build_zmod(3, &l).unwrap();
        let z4 = build_zmod(4, &l).unwrap();
        let z6 = build_zmod(6, &l).unwrap();
        let mut rings: Vec<FiniteRing> = (2..=16).map(|n| build_zmod(n, &l).unwrap()).collect();
        rings.push(build_product(&[z2.clone(), z2.clone()], &l).unwrap());
        rings.push(build_product(&[z2.clone(), z2.clone(), z2.clone()], &l).unwrap());
        rings.push(build_product(&[z2.clone(), z6], &l).unwrap());
        rings.push(build_product(&[z4.clone(), z4], &l).unwrap());
        rings.push(build_product(&[z2.clone(), z3.clone()], &l).unwrap());
        rings.push(build_poly_quotient(2, &[1, 1, 1], &l).unwrap());
        rings.push(build_poly_quotient(2, &[0, 0, 1], &l).unwrap());
        rings.push(build_poly_quotient(3, &[0, 0, 1], &l).unwrap());
        rings.push(build_poly_quotient(3, &[1, 0, 1], &l).unwrap());
        rings
            .into_iter()
            .map(|ring| {
                let ideals = IdealLattice::enumerate(&ring, &l)
                    .unwrap()
                    .ideals()
                    .to_vec();
                (ring, ideals)
            })
            .collect()
    })
}

/// Strategy: a pooled ring plus three (not necessarily distinct) ideals
/// from its lattice.
fn ring_and_three_ideals() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0..pool().len()).prop_flat_map(|r| {
        let n = pool()[r].1.len();
        (Just(r), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #[test]
    fn ideal_sum_and_product_are_commutative_and_associative(
        (r, i, j, k) in ring_and_three_ideals()
    ) {
        let ideals = &pool()[r].1;
        let (a, b, c) = (&ideals[i], &ideals[j], &ideals[k]);
        prop_assert_eq!(a.sum(b).unwrap(), b.sum(a).unwrap());
        prop_assert_eq!(a.product(b).unwrap(), b.product(a).unwrap());
        prop_assert_eq!(
            a.sum(b).unwrap().sum(c).unwrap(),
            a.sum(&b.sum(c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.product(b).unwrap().product(c).unwrap(),
            a.product(&b.product(c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.intersect(b).unwrap(),
            b.intersect(a).unwrap()
        );
    }

    #[test]
    fn ideal_algebra_has_units_absorption_and_distributivity(
        (r, i, j, k) in ring_and_three_ideals()
    ) {
        let (ring, ideals) = &pool()[r];
        let (a, b, c) = (&ideals[i], &ideals[j], &ideals[k]);
        let whole = IdealSet::whole(ring);
        let zero = IdealSet::zero(ring);
        prop_assert_eq!(&a.sum(a).unwrap(), a);
        prop_assert_eq!(&a.intersect(a).unwrap(), a);
        prop_assert_eq!(&a.product(&whole).unwrap(), a);
        prop_assert_eq!(&a.product(&zero).unwrap(), &zero);
        prop_assert!(a.product(b).unwrap().is_subset(&a.intersect(b).unwrap()));
        prop_assert_eq!(
            a.product(&b.sum(c).unwrap()).unwrap(),
            a.product(b).unwrap().sum(&a.product(c).unwrap()).unwrap()
        );
    }

    #[test]
    fn radical_is_an_idempotent_closure_operator(
        (r, i, j, _) in ring_and_three_ideals()
    ) {
        let ideals = &pool()[r].1;
        let (a, b) = (&ideals[i], &ideals[j]);
        let rad = a.radical();
        prop_assert!(a.is_subset(&rad));
        prop_assert_eq!(rad.radical(), rad.clone());
        prop_assert_eq!(
            a.intersect(b).unwrap().radical(),
            a.radical().intersect(&b.radical()).unwrap()
        );
    }

    #[test]
    fn pure_part_is_an_interior_operator(
        (r, i, j, _) in ring_and_three_ideals()
    ) {
        let ideals = &pool()[r].1;
        let (a, b) = (&ideals[i], &ideals[j]);
        let nu_a = pure_part(a);
        let u_a = unit_part(a);
        prop_assert!(is_pure(&nu_a));
        prop_assert!(nu_a.is_subset(&u_a));
        prop_assert!(u_a.is_subset(a));
        prop_assert_eq!(pure_part(&nu_a), nu_a.clone());
        if a.is_subset(b) {
            prop_assert!(nu_a.is_subset(&pure_part(b)));
        }
        prop_assert_eq!(
            pure_part(&a.intersect(b).unwrap()),
            nu_a.intersect(&pure_part(b)).unwrap()
        );
        prop_assert_eq!(
            unit_part(&a.intersect(b).unwrap()),
            u_a.intersect(&unit_part(b)).unwrap()
        );
    }

    #[test]
    fn pure_pairs_multiply_to_their_intersection(
        (r, i, j, _) in ring_and_three_ideals()
    ) {
        let ideals = &pool()[r].1;
        let (a, b) = (&ideals[i], &ideals[j]);
        if is_pure(a) && is_pure(b) {
            prop_assert_eq!(a.product(b).unwrap(), a.intersect(b).unwrap());
            prop_assert!(is_pure(&a.sum(b).unwrap()));
            prop_assert!(is_pure(&a.intersect(b).unwrap()));
        }
    }

    #[test]
    fn bitset_agrees_with_a_hash_set_model(
        universe in 1usize..=130,
        picks_a in prop::collection::vec(any::<prop::sample::Index>(), 0..40),
        picks_b in prop::collection::vec(any::<prop::sample::Index>(), 0..40),
    ) {
        let xs: HashSet<usize> = picks_a.iter().map(|i| i.index(universe)).collect();
        let ys: HashSet<usize> = picks_b.iter().map(|i| i.index(universe)).collect();
        let a = BitSet::from_iter(universe, xs.iter().copied());
        let b = BitSet::from_iter(universe, ys.iter().copied());

        prop_assert_eq!(a.card(), xs.len());
        for v in 0..universe {
            prop_assert_eq!(a.contains(v), xs.contains(&v));
        }
        let union: HashSet<usize> = xs.union(&ys).copied().collect();
        let inter: HashSet<usize> = xs.intersection(&ys).copied().collect();
        let diff: HashSet<usize> = xs.difference(&ys).copied().collect();
        prop_assert_eq!(a.union(&b), BitSet::from_iter(universe, union));
        prop_assert_eq!(a.intersect(&b), BitSet::from_iter(universe, inter));
        prop_assert_eq!(a.difference(&b), BitSet::from_iter(universe, diff));
        prop_assert_eq!(
            a.complement(),
            BitSet::from_iter(universe, (0..universe).filter(|v| !xs.contains(v)))
        );
        prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
        prop_assert_eq!(a.is_disjoint(&b), xs.is_disjoint(&ys));
        let mut collected: Vec<usize> = a.iter().collect();
        collected.sort();
        let mut expected: Vec<usize> = xs.iter().copied().collect();
        expected.sort();
        prop_assert_eq!(collected, expected);
    }

    #[test]
    fn symbolic_ideals_follow_gcd_and_lcm_arithmetic(
        a in 0u64..=720,
        b in 0u64..=720,
        c in 0u64..=720,
    ) {
        let (ia, ib, ic) = (ZIdeal::new(a), ZIdeal::new(b), ZIdeal::new(c));
        prop_assert_eq!(ia.sum(ib), ib.sum(ia));
        prop_assert_eq!(ia.sum(ib).sum(ic), ia.sum(ib.sum(ic)));
        prop_assert_eq!(ia.intersect(ib).unwrap(), ib.intersect(ia).unwrap());
        prop_assert_eq!(
            ia.product(ib.sum(ic)).unwrap(),
            ia.product(ib).unwrap().sum(ia.product(ic).unwrap())
        );
        // Containment is divisibility of generators.
        prop_assert_eq!(ia.contains(ib), b == 0 || (a != 0 && b % a == 0));
        // Membership in the intersection means membership in both.
        for x in [a, b, a.saturating_mul(b), 0, 1, 6] {
            let ix = ZIdeal::new(x);
            prop_assert_eq!(
                ia.intersect(ib).unwrap().contains(ix),
                ia.contains(ix) && ib.contains(ix)
            );
        }
    }

    #[test]
    fn symbolic_pure_parts_are_trivial_away_from_the_unit_ideal(
        a in 0u64..=720,
    ) {
        let ia = ZIdeal::new(a);
        let nu = ia.pure_part();
        prop_assert!(nu.is_pure());
        prop_assert!(ia.contains(nu));
        prop_assert!(ia.unit_part().contains(nu));
        prop_assert!(ia.contains(ia.unit_part()));
        if a == 1 {
            prop_assert_eq!(nu, ZIdeal::whole());
        } else {
            prop_assert_eq!(nu, ZIdeal::zero());
        }
    }
}
