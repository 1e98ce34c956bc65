mod common;

use common::*;
use proptest::prelude::*;
use skein_core::diagram::{compose, tensor, Content, Diagram};
use skein_core::matching::{binomial, catalan, enumerate_matchings, enumerate_matchings_split, enumerate_outer_matchings};
use skein_core::{CircularForm, Matching};
use std::collections::{BTreeMap, BTreeSet};

fn form(s: &str) -> Content {
    Content::Form(CircularForm::parse(s).unwrap())
}

/// Every matching with the given split, each region decorated by a basis
/// label depending on its index, and region 0 also holding a circle.
fn decorated(split: (usize, usize)) -> Vec<Diagram> {
    let k = (split.0 + split.1) / 2;
    enumerate_matchings_split(k, split, 8)
        .unwrap()
        .into_iter()
        .map(|m| {
            let mut contents = BTreeMap::new();
            for r in m.regions() {
                let mut list = vec![Content::basis(r % 3)];
                if r == 0 {
                    list.push(form("()"));
                }
                contents.insert(r, list);
            }
            Diagram::new(m, contents).unwrap()
        })
        .collect()
}

#[test]
fn matching_counts() {
    for k in 0..=6 {
        let ms = enumerate_matchings(k, 8).unwrap();
        assert_eq!(ms.len() as u128, catalan(k));
        let lib: BTreeSet<Vec<usize>> = ms.iter().map(|m| m.partners().to_vec()).collect();
        let brute: BTreeSet<Vec<usize>> = noncrossing_brute(k).into_iter().collect();
        assert_eq!(lib, brute, "k={k}");
        assert_eq!(enumerate_outer_matchings(k, 8).unwrap().len() as u128, binomial(2 * k, k));
        for m in &ms {
            assert_eq!(m.regions().len(), k + 1);
        }
    }
}

#[test]
fn loop_counts_match_cycle_oracle() {
    for k in 1..=5 {
        let ms = enumerate_matchings(k, 8).unwrap();
        for a in &ms {
            for b in &ms {
                let closed = compose(&Diagram::bare(b.clone()).reflect(), &Diagram::bare(a.clone())).unwrap();
                assert!(closed.is_closed());
                assert_eq!(closed.circle_count(), loops_of(a.partners(), b.partners()));
            }
        }
    }
}

#[test]
fn composition_is_associative() {
    let sizes = 0..=4usize;
    let mut checked = 0;
    for p in sizes.clone() {
        for q in sizes.clone() {
            for r in sizes.clone() {
                for s in sizes.clone() {
                    if (p + q) % 2 == 1 || (q + r) % 2 == 1 || (r + s) % 2 == 1 {
                        continue;
                    }
                    for a in decorated((p, q)) {
                        for b in decorated((q, r)) {
                            for c in decorated((r, s)) {
                                let left = compose(&c, &compose(&b, &a).unwrap()).unwrap();
                                let right = compose(&compose(&c, &b).unwrap(), &a).unwrap();
                                assert_eq!(left, right);
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 5000);
}

#[test]
fn identities_and_snakes() {
    for (n, m) in [(0, 2), (1, 1), (2, 0), (2, 2), (1, 3), (3, 1), (0, 4), (3, 3), (2, 4)] {
        for x in decorated((n, m)) {
            assert_eq!(compose(&Diagram::identity(m), &x).unwrap(), x);
            assert_eq!(compose(&x, &Diagram::identity(n)).unwrap(), x);
        }
    }
    let id1 = Diagram::identity(1);
    for label in 0..3 {
        let cup = Diagram::cup().with(0, Content::basis(label)).unwrap();
        let snake = compose(&tensor(&id1, &Diagram::cap()), &tensor(&cup, &id1)).unwrap();
        let (m, circles, _) = snake.arc_decompose();
        assert_eq!(m, Matching::identity(1));
        assert_eq!(circles, 0);
        let snake = compose(&tensor(&Diagram::cap(), &id1), &tensor(&id1, &Diagram::cup())).unwrap();
        assert_eq!(snake, id1);
    }
}

#[test]
fn tensor_interchange() {
    for (a, c) in [((1, 1), (1, 1)), ((0, 2), (2, 0)), ((1, 1), (2, 0))] {
        for x in decorated(a) {
            for y in decorated(c) {
                for u in decorated((a.1, a.1)) {
                    for v in decorated((c.1, c.1)) {
                        let left = compose(&tensor(&u, &v), &tensor(&x, &y)).unwrap();
                        let right = tensor(&compose(&u, &x).unwrap(), &compose(&v, &y).unwrap());
                        assert_eq!(left.circle_count(), right.circle_count());
                        assert_eq!(left.matching(), right.matching());
                    }
                }
            }
        }
    }
}

#[test]
fn reflection_fixes_closed_diagrams_to_seven_circles() {
    for c in 0..=7 {
        for u in skein_core::form::enumerate_circular_forms(c, 12).unwrap() {
            let d = Diagram::closed(vec![Content::Form(u.clone()), Content::basis(1)]);
            assert_eq!(d.reflect(), d);
        }
    }
    // closures of two labelled disks: b̄a reflects to āb, which is the same closed diagram
    for k in 1..=3 {
        let ds = decorated((0, 2 * k));
        for a in &ds {
            for b in &ds {
                let ba = compose(&b.reflect(), a).unwrap();
                assert_eq!(ba.reflect(), ba);
                assert_eq!(ba, compose(&a.reflect(), b).unwrap());
            }
        }
    }
}

#[test]
fn reflection_reverses_composition() {
    for a in decorated((1, 3)) {
        for b in decorated((3, 1)) {
            let lhs = compose(&b, &a).unwrap().reflect();
            let rhs = compose(&a.reflect(), &b.reflect()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

fn arb_diagram() -> impl Strategy<Value = Diagram> {
    (0usize..=4).prop_flat_map(|k| {
        let ms = enumerate_matchings(k, 8).unwrap();
        let count = ms.len();
        (Just(ms), 0..count, proptest::collection::vec(0usize..3, k + 1))
    })
    .prop_map(|(ms, i, labels)| {
        let m = ms[i].clone();
        let contents = m.regions().into_iter().zip(labels).map(|(r, l)| (r, vec![Content::basis(l)])).collect();
        Diagram::new(m, contents).unwrap()
    })
}

proptest! {
    #[test]
    fn rotation_is_a_group_action(d in arb_diagram(), s in -10i64..10) {
        let n = d.matching().points() as i64;
        prop_assert_eq!(d.rotate(s).rotate(-s), d.clone());
        prop_assert_eq!(d.rotate(n), d.clone());
        prop_assert_eq!(d.rotate(s).matching().regions().len(), d.matching().regions().len());
    }

    #[test]
    fn reflection_is_an_involution(d in arb_diagram()) {
        prop_assert_eq!(d.reflect().reflect(), d.clone());
        prop_assert_eq!(d.reflect().split(), (d.split().1, d.split().0));
    }
}
