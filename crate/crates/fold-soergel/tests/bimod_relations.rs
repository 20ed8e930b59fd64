use fold_soergel::bimod::{gens, Morphism, Obj, Vector};
use fold_soergel::polyring::{q, Gen, Mono, Poly};
use proptest::prelude::*;

use Gen::{S, T};

fn p(s: &str) -> Poly {
    Poly::parse(s).unwrap()
}

fn c(g: &Morphism, f: &Morphism) -> Morphism {
    g.compose(f).unwrap()
}

fn x(a: &Morphism, b: &Morphism) -> Morphism {
    a.tensor(b)
}

fn poly_box(f: &Poly) -> Morphism {
    gens::poly_box(f).unwrap()
}

/// The broken strand `dotd o dotu` on `B_c`.
fn broken(g: Gen) -> Morphism {
    c(&gens::dotd(g), &gens::dotu(g))
}

#[test]
fn one_colour_relations_in_both_colours() {
    for g in [S, T] {
        let id1 = gens::id(&[g]);
        // unit
        assert_eq!(c(&gens::merge(g), &x(&gens::dotd(g), &id1)), id1, "unit left");
        assert_eq!(c(&gens::merge(g), &x(&id1, &gens::dotd(g))), id1, "unit right");
        assert_eq!(c(&x(&gens::dotu(g), &id1), &gens::split(g)), id1, "counit left");
        assert_eq!(c(&x(&id1, &gens::dotu(g)), &gens::split(g)), id1, "counit right");
        // H = I
        let h = c(&x(&gens::merge(g), &id1), &x(&id1, &gens::split(g)));
        let i = c(&gens::split(g), &gens::merge(g));
        let h2 = c(&x(&id1, &gens::merge(g)), &x(&gens::split(g), &id1));
        assert_eq!(h, i, "H = I");
        assert_eq!(h2, i, "mirrored H = I");
        // associativity of merge and of split
        assert_eq!(c(&gens::merge(g), &x(&gens::merge(g), &id1)), c(&gens::merge(g), &x(&id1, &gens::merge(g))));
        assert_eq!(c(&x(&gens::split(g), &id1), &gens::split(g)), c(&x(&id1, &gens::split(g)), &gens::split(g)));
        // needle
        assert!(c(&gens::merge(g), &gens::split(g)).is_zero(), "needle");
        // barbell
        assert_eq!(c(&gens::dotu(g), &gens::dotd(g)), poly_box(&Poly::alpha(g)), "barbell");
        // an invariant polynomial passes through the strand
        let other = Poly::alpha(g.swap());
        let inv = &Poly::alpha(g) * &Poly::alpha(g);
        for f in [other, inv] {
            assert_eq!(gens::left_poly(&f, &[g]).unwrap(), gens::right_poly(&[g], &f).unwrap());
        }
        // cup/cap zig-zag
        let zig = c(&x(&gens::cap(g), &id1), &x(&id1, &gens::cup(g)));
        let zag = c(&x(&id1, &gens::cap(g)), &x(&gens::cup(g), &id1));
        assert_eq!(zig, id1);
        assert_eq!(zag, id1);
    }
}

#[test]
fn polynomial_boxes_add_and_multiply() {
    let f = p("as^2 + 3*as*at");
    let g = p("at^2 - as*at");
    assert_eq!(poly_box(&f).add(&poly_box(&g)).unwrap(), poly_box(&(&f + &g)));
    assert_eq!(c(&poly_box(&f), &poly_box(&g)), poly_box(&(&f * &g)));
    assert_eq!(x(&poly_box(&f), &poly_box(&g)), poly_box(&(&f * &g)));
}

#[test]
fn two_colour_relations() {
    for (a, b) in [(S, T), (T, S)] {
        let xab = gens::crossing(a, b).unwrap();
        let xba = gens::crossing(b, a).unwrap();
        assert_eq!(c(&xba, &xab), gens::id(&[a, b]), "crossings are inverse");
        // a dot slides through the crossing
        let lhs = c(&xba, &x(&gens::id(&[b]), &gens::dotd(a)));
        assert_eq!(lhs, x(&gens::dotd(a), &gens::id(&[b])), "dot slides");
        let lhs = c(&x(&gens::id(&[b]), &gens::dotu(a)), &xab);
        assert_eq!(lhs, x(&gens::dotu(a), &gens::id(&[b])), "upward dot slides");
        // the other root is central for this strand
        let alpha = Poly::alpha(a);
        assert_eq!(gens::left_poly(&alpha, &[b]).unwrap(), gens::right_poly(&[b], &alpha).unwrap());
    }
}

#[test]
fn explicit_generator_values() {
    assert_eq!(gens::dotu(S).degree_of().unwrap(), 1);
    assert_eq!(gens::merge(S).degree_of().unwrap(), -1);
    assert_eq!(poly_box(&p("(as - at)^2")).degree_of().unwrap(), 4);
    assert_eq!(gens::dotu(S).tau(), gens::dotu(T));
    assert_eq!(gens::crossing(S, T).unwrap().tau(), gens::crossing(T, S).unwrap());
    assert_eq!(poly_box(&p("as")).tau(), poly_box(&p("at")));
}

#[test]
fn bimodule_map_check() {
    for m in generator_pool() {
        assert!(m.check_bimodule_map(), "{}", m);
        assert!(m.is_consistent(), "{}", m);
    }
    // 1 (x) 1 -> 1 (x) 1 and 1 (x) a_s -> 0 on B_s is left-linear but not right-linear.
    let mut keep = Vector::new();
    keep.insert(0, Poly::one());
    let bad = Morphism::from_cols(Obj::of(&[S]), Obj::of(&[S]), 0, vec![keep, Vector::new()]);
    assert!(!bad.check_bimodule_map());
    assert!(Morphism::zero(Obj::of(&[S, T]), Obj::of(&[T]), 3).check_bimodule_map());
}

/// Generators and identities of both colours.
fn generator_pool() -> Vec<Morphism> {
    let mut v = Vec::new();
    for g in [S, T] {
        v.extend([
            gens::id(&[g]),
            gens::dotu(g),
            gens::dotd(g),
            gens::merge(g),
            gens::split(g),
            gens::cap(g),
            gens::cup(g),
            broken(g),
            gens::left_poly(&Poly::alpha(g), &[g]).unwrap(),
            gens::crossing(g, g.swap()).unwrap(),
            gens::id(&[g, g.swap()]),
        ]);
    }
    v.push(gens::id(&[]));
    v.push(poly_box(&p("as - at")));
    v.push(poly_box(&p("as*at")));
    v
}

/// A generator together with one whose target is its source.
fn composable_pair() -> impl Strategy<Value = (Morphism, Morphism)> {
    let pool = generator_pool();
    (0..pool.len(), any::<prop::sample::Index>()).prop_map(move |(i, pick)| {
        let first = pool[i].clone();
        let options: Vec<&Morphism> = pool.iter().filter(|m| m.src == first.tgt).collect();
        let second = if options.is_empty() {
            Morphism::identity(first.tgt.clone())
        } else {
            options[pick.index(options.len())].clone()
        };
        (first, second)
    })
}

fn homogeneous(max_half: u32) -> impl Strategy<Value = Poly> {
    (0..=max_half).prop_flat_map(|n| {
        proptest::collection::vec(-5i64..=5, (n + 1) as usize).prop_map(move |cs| {
            cs.iter()
                .enumerate()
                .fold(Poly::zero(), |acc, (s, k)| acc + Poly::term(q(*k, 1), Mono::new(s as u32, n - s as u32)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn interchange_law((f1, g1) in composable_pair(), (f2, g2) in composable_pair()) {
        let lhs = c(&x(&g1, &g2), &x(&f1, &f2));
        let rhs = x(&c(&g1, &f1), &c(&g2, &f2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tau_is_strict_monoidal((f1, g1) in composable_pair(), (f2, _g2) in composable_pair()) {
        prop_assert_eq!(c(&g1, &f1).tau(), c(&g1.tau(), &f1.tau()));
        prop_assert_eq!(x(&f1, &f2).tau(), x(&f1.tau(), &f2.tau()));
        prop_assert_eq!(f1.tau().tau(), f1);
    }

    #[test]
    fn composites_remain_bimodule_maps((f1, g1) in composable_pair(), (f2, g2) in composable_pair()) {
        let m = x(&c(&g1, &f1), &c(&g2, &f2));
        prop_assert!(m.check_bimodule_map());
        prop_assert!(m.is_consistent());
    }

    /// `f` on the left of the strand is `s(f)` on the right plus the broken
    /// strand decorated by the Demazure quotient.
    #[test]
    fn polynomial_forcing(f in homogeneous(5), g in prop_oneof![Just(S), Just(T)]) {
        let lhs = gens::left_poly(&f, &[g]).unwrap();
        prop_assume!(!f.is_zero());
        let deg = f.degree().unwrap();
        // the box sits between the dots; both dots are left-linear
        let forced = broken(g).scale_poly(&f.demazure(g), deg - 2);
        let rhs = gens::right_poly(&[g], &f.act(g)).unwrap().add(&forced).unwrap();
        prop_assert_eq!(lhs, rhs);
        let boxed = c(&gens::dotd(g), &c(&poly_box(&f.demazure(g)), &gens::dotu(g)));
        if !f.demazure(g).is_zero() {
            prop_assert_eq!(boxed, forced);
        }
    }
}
