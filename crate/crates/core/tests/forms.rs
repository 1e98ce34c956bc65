mod common;

use common::*;
use proptest::prelude::*;
use skein_core::form::{circles_of, enumerate_circular_forms, forest_of, forest_of_form, spherical_classes, Forest};
use skein_core::CircularForm;
use std::collections::BTreeSet;

#[test]
fn form_counts_match_brute_force_forests() {
    for c in 0..=7 {
        let forms = enumerate_circular_forms(c, 12).unwrap();
        assert_eq!(forms.len(), forest_count(c), "c={c}");
        let distinct: BTreeSet<_> = forms.iter().collect();
        assert_eq!(distinct.len(), forms.len());
    }
}

#[test]
fn encoding_classes_agree_with_independent_canon() {
    // two parent arrays give the same form iff the oracle canon agrees
    for c in 0..=6 {
        let mut by_canon = std::collections::BTreeMap::new();
        for p in parent_arrays(c) {
            let enc = circles_of(&Forest { parent: p.clone() }).encoding().to_string();
            let prev = by_canon.insert(forest_canon(&p), enc.clone());
            if let Some(prev) = prev {
                assert_eq!(prev, enc);
            }
        }
        let encs: BTreeSet<_> = by_canon.values().collect();
        assert_eq!(encs.len(), by_canon.len(), "c={c}");
    }
}

#[test]
fn bijection_round_trip_to_eight_circles() {
    for c in 0..=8 {
        for u in enumerate_circular_forms(c, 12).unwrap() {
            let forest = forest_of_form(&u);
            assert_eq!(circles_of(&forest), u);
            assert_eq!(CircularForm::parse(u.encoding()).unwrap(), u);
            assert_eq!(forest_canon(&forest.parent), forest_canon(&parents_of_parens(u.encoding())));
            assert_eq!(u.circle_count(), c);
        }
    }
}

#[test]
fn sphere_classes_are_free_trees() {
    // c circles on the sphere correspond to free trees on c + 1 vertices
    for c in 0..=6 {
        assert_eq!(spherical_classes(c).len(), free_tree_count(c + 1), "c={c}");
    }
}

#[test]
fn parse_errors_report_offsets() {
    let e = forest_of("((").unwrap_err();
    assert_eq!(e.offset, 2);
    let e = forest_of("())").unwrap_err();
    assert_eq!(e.offset, 2);
    assert!(CircularForm::parse("(x)").is_err());
    assert!(CircularForm::parse("").unwrap().is_empty());
    assert!(CircularForm::parse("∅").unwrap().is_empty());
}

#[test]
fn examples() {
    assert_eq!(CircularForm::parse("()(())").unwrap().encoding(), "(())()");
    assert_eq!(CircularForm::parse("(())").unwrap().wrap().encoding(), "((()))");
    assert_eq!(
        CircularForm::parse("(())").unwrap().spherical_canonical(),
        CircularForm::parse("()()").unwrap().spherical_canonical()
    );
    assert_ne!(
        CircularForm::parse("((()))").unwrap().spherical_canonical(),
        CircularForm::parse("(()())").unwrap().spherical_canonical()
    );
}

fn arb_parents() -> impl Strategy<Value = Vec<Option<usize>>> {
    (0usize..10).prop_flat_map(|c| {
        (0..c)
            .map(|i| prop_oneof![Just(None), (0..i.max(1)).prop_map(move |j| if i == 0 { None } else { Some(j) })].boxed())
            .collect::<Vec<_>>()
    })
}

proptest! {
    #[test]
    fn encoding_is_invariant_under_relabelling(parent in arb_parents(), seed in any::<u64>()) {
        let n = parent.len();
        // a permutation from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut relabelled = vec![None; n];
        for v in 0..n {
            relabelled[perm[v]] = parent[v].map(|p| perm[p]);
        }
        let a = circles_of(&Forest { parent: parent.clone() });
        let b = circles_of(&Forest { parent: relabelled });
        prop_assert_eq!(a, b);
    }

    #[test]
    fn union_and_wrap_count_circles(a in arb_parents(), b in arb_parents()) {
        let u = circles_of(&Forest { parent: a.clone() });
        let v = circles_of(&Forest { parent: b.clone() });
        prop_assert_eq!(u.union(&v).circle_count(), a.len() + b.len());
        prop_assert_eq!(u.wrap().circle_count(), a.len() + 1);
        prop_assert_eq!(u.union(&v), v.union(&u));
        prop_assert_eq!(u.wrap().depth(), u.depth() + 1);
    }

    #[test]
    fn sphere_canon_is_invariant_under_rerooting(a in arb_parents()) {
        // turning the form inside out around its first outer circle
        let u = circles_of(&Forest { parent: a.clone() });
        if let Some(first) = u.trees().first() {
            let rest = CircularForm::from_trees(u.trees()[1..].to_vec());
            let flipped = first.inner().union(&rest.wrap());
            prop_assert_eq!(flipped.spherical_canonical(), u.spherical_canonical());
        }
    }
}
