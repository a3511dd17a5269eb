use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use envlat_core::counting::{d_seq, d_values_gf};
use envlat_core::envlattice::{join, leq, meet, type_map};
use envlat_core::renner::standard_form;
use envlat_core::weyl::ElemId;
use envlat_core::{CrossSectionLattice, DynkinDiagram, NodeSet, WeylGroup};

const SPECS: [&str; 10] = ["A2", "A3", "A5", "B4", "C5", "D4", "D5", "F4", "G2", "E6"];

fn lattices() -> &'static Vec<CrossSectionLattice> {
    static CELL: OnceLock<Vec<CrossSectionLattice>> = OnceLock::new();
    CELL.get_or_init(|| {
        SPECS
            .iter()
            .map(|s| CrossSectionLattice::enumerate(&DynkinDiagram::parse(s).unwrap(), 12).unwrap())
            .collect()
    })
}

fn groups() -> &'static Vec<WeylGroup> {
    static CELL: OnceLock<Vec<WeylGroup>> = OnceLock::new();
    CELL.get_or_init(|| {
        ["A2", "A3", "B2", "B3", "G2", "C3"]
            .iter()
            .map(|s| WeylGroup::enumerate(&DynkinDiagram::parse(s).unwrap(), 1_000_000).unwrap())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn lattice_axioms(k in 0..SPECS.len(), a in any::<prop::sample::Index>(),
                      b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let l = &lattices()[k];
        let d = l.diagram();
        let els = l.elements();
        let (x, y, z) = (&els[a.index(els.len())], &els[b.index(els.len())], &els[c.index(els.len())]);

        prop_assert_eq!(meet(x, y), meet(y, x));
        prop_assert_eq!(join(d, x, y), join(d, y, x));
        prop_assert_eq!(meet(&meet(x, y), z), meet(x, &meet(y, z)));
        prop_assert_eq!(join(d, &join(d, x, y), z), join(d, x, &join(d, y, z)));
        prop_assert_eq!(meet(x, &join(d, x, y)), *x);
        prop_assert_eq!(join(d, x, &meet(x, y)), *x);
        prop_assert!(l.contains(&meet(x, y)));
        prop_assert!(l.contains(&join(d, x, y)));
        prop_assert!(leq(&meet(x, y), x) && leq(x, &join(d, x, y)));
    }

    #[test]
    fn face_map_is_an_order_isomorphism(k in 0..SPECS.len(), a in any::<prop::sample::Index>(),
                                        b in any::<prop::sample::Index>()) {
        let l = &lattices()[k];
        let els = l.elements();
        let (x, y) = (&els[a.index(els.len())], &els[b.index(els.len())]);
        prop_assert_eq!(leq(x, y), x.to_face().is_subface_of(&y.to_face()));
        prop_assert_eq!(x.to_face().to_idempotent(), *x);
    }

    #[test]
    fn type_map_splits(k in 0..SPECS.len(), a in any::<prop::sample::Index>()) {
        let l = &lattices()[k];
        let els = l.elements();
        let x = &els[a.index(els.len())];
        let t = type_map(l.diagram(), x);
        prop_assert!(!t.lambda_star_lower.intersects(t.lambda_star_upper));
        prop_assert_eq!(t.lambda, t.lambda_star_lower.union(t.lambda_star_upper));
        prop_assert!(!t.lambda_star_upper.intersects(x.i()));
    }

    #[test]
    fn standard_form_absorbs(k in 0..6usize, a in any::<prop::sample::Index>(),
                             w1 in any::<prop::sample::Index>(), w2 in any::<prop::sample::Index>(),
                             v in any::<prop::sample::Index>()) {
        let w = &groups()[k];
        let l = CrossSectionLattice::enumerate(w.diagram(), 12).unwrap();
        let e = l.elements()[a.index(l.len())];
        let (w1, w2) = (ElemId(w1.index(w.order())), ElemId(w2.index(w.order())));
        let t = type_map(w.diagram(), &e);
        let x = standard_form(w, w1, &e, w2);
        prop_assert!(w.is_min_coset_rep(x.a, t.lambda_star_lower));
        prop_assert!(w.is_min_coset_rep(x.b, t.lambda));
        prop_assert_eq!(standard_form(w, x.a, &e, w.inverse(x.b)), x);

        let fixing = w.parabolic_subgroup(t.lambda_star_lower);
        let f = fixing[v.index(fixing.len())];
        prop_assert_eq!(standard_form(w, w.mul(w1, f), &e, w2), x);
        let centralizing = w.parabolic_subgroup(t.lambda);
        let u = centralizing[v.index(centralizing.len())];
        prop_assert_eq!(
            standard_form(w, w.mul(w1, u), &e, w2),
            standard_form(w, w1, &e, w.mul(u, w2))
        );
    }

    #[test]
    fn weyl_group_structure(k in 0..6usize, a in any::<prop::sample::Index>(),
                            b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let w = &groups()[k];
        let n = w.order();
        let (x, y, z) = (ElemId(a.index(n)), ElemId(b.index(n)), ElemId(c.index(n)));
        prop_assert_eq!(w.mul(w.mul(x, y), z), w.mul(x, w.mul(y, z)));
        prop_assert_eq!(w.mul(x, w.inverse(x)), w.identity());
        prop_assert_eq!(w.length(x), w.length(w.inverse(x)));
        prop_assert_eq!(w.from_word(w.word(x)), x);
        for s in 1..=w.rank() {
            let xs = w.mul_gen(x, s);
            prop_assert_eq!(w.length(xs).abs_diff(w.length(x)), 1);
            prop_assert_eq!(w.is_right_descent(x, s), w.length(xs) < w.length(x));
        }
        prop_assert!(w.bruhat_leq(w.identity(), x));
        prop_assert!(w.bruhat_leq(x, w.longest()));
    }

    #[test]
    fn node_set_round_trip(bits in 0u64..(1 << 9)) {
        let s = NodeSet::from_bits(9, bits);
        prop_assert_eq!(NodeSet::parse(9, &s.label()).unwrap(), s);
        prop_assert_eq!(s.complement().complement(), s);
        prop_assert_eq!(s.len() + s.complement().len(), 9);
    }

    #[test]
    fn counts_grow(n in 0usize..120) {
        let d = d_seq(n);
        prop_assert!(d >= BigInt::from(1) << n);
        prop_assert_eq!(&d, &d_values_gf(n)[n]);
    }
}

#[test]
fn lattice_size_depends_only_on_the_graph() {
    let size = |s: &str| {
        CrossSectionLattice::enumerate(&DynkinDiagram::parse(s).unwrap(), 12)
            .unwrap()
            .len()
    };
    for r in 2..=6 {
        let a = size(&format!("A{r}"));
        assert_eq!(a, size(&format!("B{r}")));
        if r >= 3 {
            assert_eq!(a, size(&format!("C{r}")));
        }
    }
    assert_eq!(size("F4"), size("A4"));
    assert_eq!(size("G2"), size("A2"));
}

#[test]
fn essentiality_is_closed_under_meet_and_join() {
    for l in lattices().iter().filter(|l| l.len() <= 700) {
        let d = l.diagram();
        for x in l.elements() {
            for y in l.elements() {
                assert!(
                    l.contains(&meet(x, y)) && l.contains(&join(d, x, y)),
                    "{d} {x} {y}"
                );
            }
        }
    }
}
