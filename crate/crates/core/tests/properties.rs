//! Property tests for the algebraic laws: ultrafilter behavior on random
//! ultimately periodic sets, equivalence of a.e. equality, representative
//! independence of the arithmetic, and printer/parser identities.

use std::collections::BTreeSet;

use proptest::prelude::*;

use nsgraph_core::logic::{Atom, Sentence, VarSort};
use nsgraph_core::upalg::{AnchoredUltrafilter, Poly, Rel, UpSet, UppSeq};

fn arb_upset() -> impl Strategy<Value = UpSet> {
    (1u64..=24, 0u64..=20).prop_flat_map(|(modulus, threshold)| {
        (
            proptest::collection::vec(any::<bool>(), modulus as usize),
            proptest::collection::vec(any::<bool>(), threshold as usize),
        )
            .prop_map(move |(bits, prefix)| {
                let pattern: BTreeSet<u64> = bits
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(i, _)| i as u64)
                    .collect();
                UpSet::new(threshold, modulus, pattern, prefix).unwrap()
            })
    })
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-4i64..=4, 1..=3).prop_map(|coeffs| Poly::from_int_coeffs(&coeffs))
}

fn arb_seq() -> impl Strategy<Value = UppSeq> {
    (
        proptest::collection::vec(arb_poly(), 1..=3),
        proptest::collection::vec(-6i64..=6, 0..=4),
    )
        .prop_map(|(cycle, prefix)| {
            UppSeq::new(
                prefix.len() as u64,
                cycle,
                prefix.into_iter().map(Into::into).collect(),
            )
            .unwrap()
        })
}

fn anchors() -> [AnchoredUltrafilter; 4] {
    [0, 1, 2, 5].map(AnchoredUltrafilter::new)
}

proptest! {
    #[test]
    fn ultrafilter_dichotomy_and_closure(s in arb_upset(), t in arb_upset(), anchor in 0u64..12) {
        let f = AnchoredUltrafilter::new(anchor);
        // exactly one of a set and its complement is large
        prop_assert_ne!(f.decide(&s), f.decide(&s.complement()));
        // two large sets intersect in a large set
        if f.decide(&s) && f.decide(&t) {
            prop_assert!(f.decide(&s.intersect(&t)));
        }
        // membership is monotone under union
        if f.decide(&s) {
            prop_assert!(f.decide(&s.union(&t)));
        }
    }

    #[test]
    fn cofinite_in_every_trace_finite_in_none(members in proptest::collection::vec(0u64..40, 0..10), anchor in 0u64..12) {
        let f = AnchoredUltrafilter::new(anchor);
        let finite = UpSet::finite(&members);
        prop_assert!(!f.decide(&finite));
        prop_assert!(f.decide(&finite.complement()));
    }

    #[test]
    fn set_operations_match_pointwise_semantics(s in arb_upset(), t in arb_upset()) {
        let lcm = num_integer::lcm(s.modulus(), t.modulus());
        let horizon = s.threshold().max(t.threshold()) + 3 * lcm;
        let complement = s.complement();
        let both = s.intersect(&t);
        let either = s.union(&t);
        for n in 0..horizon {
            prop_assert_eq!(complement.contains(n), !s.contains(n));
            prop_assert_eq!(both.contains(n), s.contains(n) && t.contains(n));
            prop_assert_eq!(either.contains(n), s.contains(n) || t.contains(n));
        }
    }

    #[test]
    fn ae_equality_is_an_equivalence(a in arb_seq(), b in arb_seq(), c in arb_seq()) {
        for f in anchors() {
            let eq = |x: &UppSeq, y: &UppSeq| f.decide(&x.relate(y, Rel::Eq).unwrap());
            prop_assert!(eq(&a, &a));
            prop_assert_eq!(eq(&a, &b), eq(&b, &a));
            if eq(&a, &b) && eq(&b, &c) {
                prop_assert!(eq(&a, &c));
            }
        }
    }

    #[test]
    fn finite_perturbation_never_changes_decisions(
        a in arb_seq(),
        b in arb_seq(),
        patch in proptest::collection::vec(-6i64..=6, 1..=5),
    ) {
        // overwrite a prefix of `a` with arbitrary values
        let horizon = a.threshold().max(patch.len() as u64);
        let mut prefix: Vec<num_bigint::BigInt> = (0..horizon).map(|n| a.term(n)).collect();
        for (i, v) in patch.iter().enumerate() {
            prefix[i] = (*v).into();
        }
        let cycle: Vec<Poly> = {
            // reuse the aligned tail of `a` by shifting its cycle
            let shifted = a.clone();
            let len = shifted.cycle_len();
            (0..len).map(|j| {
                let pos = ((horizon + j - shifted.threshold()) % len) as usize;
                shifted.cycle()[pos].clone()
            }).collect()
        };
        let perturbed = UppSeq::new(horizon, cycle, prefix).unwrap();
        for n in horizon..horizon + 12 {
            prop_assert_eq!(perturbed.term(n), a.term(n));
        }
        for f in anchors() {
            for rel in [Rel::Eq, Rel::Lt, Rel::Le] {
                prop_assert_eq!(
                    f.decide(&a.relate(&b, rel).unwrap()),
                    f.decide(&perturbed.relate(&b, rel).unwrap())
                );
            }
            prop_assert_eq!(
                f.decide(&a.even_set().unwrap()),
                f.decide(&perturbed.even_set().unwrap())
            );
        }
    }

    #[test]
    fn relations_match_pointwise_evaluation(a in arb_seq(), b in arb_seq()) {
        let sets = [
            (Rel::Eq, a.relate(&b, Rel::Eq).unwrap()),
            (Rel::Lt, a.relate(&b, Rel::Lt).unwrap()),
            (Rel::Le, a.relate(&b, Rel::Le).unwrap()),
        ];
        for (rel, set) in &sets {
            let horizon = set.threshold() + 2 * set.modulus() + 8;
            for n in 0..horizon {
                let (x, y) = (a.term(n), b.term(n));
                let expect = match rel {
                    Rel::Eq => x == y,
                    Rel::Lt => x < y,
                    Rel::Le => x <= y,
                };
                prop_assert_eq!(set.contains(n), expect, "rel {:?} at {}", rel, n);
            }
        }
    }

    #[test]
    fn decided_comparison_agrees_along_the_anchor_progression(a in arb_seq(), b in arb_seq()) {
        use std::cmp::Ordering;
        for f in anchors() {
            // decide through the three disjoint relation sets
            let lt = a.relate(&b, Rel::Lt).unwrap();
            let eq = a.relate(&b, Rel::Eq).unwrap();
            let verdict = if f.decide(&lt) {
                Ordering::Less
            } else if f.decide(&eq) {
                Ordering::Equal
            } else {
                Ordering::Greater
            };
            let witness = match verdict {
                Ordering::Less => lt,
                Ordering::Equal => eq,
                Ordering::Greater => b.relate(&a, Rel::Lt).unwrap(),
            };
            prop_assert!(f.decide(&witness));
            for n in f.progression(witness.modulus(), witness.threshold(), 20) {
                prop_assert_eq!(a.term(n).cmp(&b.term(n)), verdict, "n={}", n);
            }
        }
    }

    #[test]
    fn pointwise_min_max_bound_every_input(items in proptest::collection::vec(arb_seq(), 1..=4)) {
        let lo = items.iter().skip(1).fold(items[0].clone(), |acc, s| acc.min_pointwise(s).unwrap());
        let hi = items.iter().skip(1).fold(items[0].clone(), |acc, s| acc.max_pointwise(s).unwrap());
        for n in 0..40u64 {
            let values: Vec<num_bigint::BigInt> = items.iter().map(|s| s.term(n)).collect();
            prop_assert_eq!(&lo.term(n), values.iter().min().unwrap());
            prop_assert_eq!(&hi.term(n), values.iter().max().unwrap());
        }
    }

    #[test]
    fn sequence_text_form_roundtrips(a in arb_seq()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<UppSeq>().unwrap(), a);
    }

    #[test]
    fn set_text_form_roundtrips(s in arb_upset()) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<UpSet>().unwrap(), s);
    }
}

fn arb_atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        Just(Atom::In("x".into(), "b".into())),
        Just(Atom::Eq("x".into(), "y".into())),
        Just(Atom::Eq("b".into(), "c".into())),
        Just(Atom::Adj("x".into(), "y".into())),
        Just(Atom::Connected),
        Just(Atom::Eulerian),
        Just(Atom::HamiltonianDirac),
        Just(Atom::DegEven("y".into())),
        (0u64..6).prop_map(|t| Atom::DegGe("x".into(), t)),
    ]
}

fn arb_sentence() -> impl Strategy<Value = Sentence> {
    let leaf = arb_atom().prop_map(Sentence::Atom);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Sentence::And(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Sentence::Or(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Sentence::Implies(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|a| Sentence::Not(Box::new(a))),
            inner
                .clone()
                .prop_map(|a| Sentence::Exists("z".into(), VarSort::Vertex, Box::new(
                    Sentence::And(Box::new(Sentence::Atom(Atom::Eq("z".into(), "z".into()))), Box::new(a))
                ))),
        ]
    })
    .prop_map(|body| {
        // close the sentence over the variable pool
        let mut s = body;
        for (v, sort) in [
            ("c", VarSort::Edge),
            ("b", VarSort::Edge),
            ("y", VarSort::Vertex),
            ("x", VarSort::Vertex),
        ] {
            s = Sentence::Forall(v.into(), sort, Box::new(s));
        }
        s
    })
}

proptest! {
    #[test]
    fn canonical_printer_parser_identity(s in arb_sentence()) {
        let text = s.to_string();
        prop_assert_eq!(Sentence::parse(&text).unwrap(), s, "{}", text);
    }
}
