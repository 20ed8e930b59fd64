use fold_soergel::foldcat::diagrams::{barbell, dot_down, dot_up, encircle, id, orange_slide, poly};
use fold_soergel::foldcat::{
    check_suite, idempotent_suite, parse_expr, relation_catalog, rotate, Colour, Evaluator, Expr, GenName, Pair,
    Relation, RelationKind,
};
use proptest::prelude::*;

use Colour::{B, G, O};

#[test]
fn every_catalog_relation_verifies() {
    let ev = Evaluator::new();
    let catalog = relation_catalog();
    assert!(catalog.len() >= 100, "catalog unexpectedly small: {}", catalog.len());
    let bad: Vec<String> = catalog
        .iter()
        .filter(|r| !matches!(r.verify(&ev), Ok(true)))
        .map(|r| format!("{} ({})", r.id, r.origin))
        .collect();
    assert!(bad.is_empty(), "{:#?}", bad);
}

#[test]
fn catalog_text_reparses_to_equal_maps() {
    let ev = Evaluator::new();
    for r in relation_catalog() {
        for e in [&r.lhs, &r.rhs] {
            let back = parse_expr(&e.to_string()).unwrap();
            assert!(ev.equal(e, &back).unwrap(), "{}: {}", r.id, e);
        }
    }
}

#[test]
fn corrupted_barbell_is_rejected() {
    let ev = Evaluator::new();
    let bad = Relation::new("barbell.green", RelationKind::Defining, "corrupted", barbell(G), poly("as*at"));
    assert!(!bad.verify(&ev).unwrap());
    let good = Relation::new("barbell.green", RelationKind::Defining, "control", barbell(G), poly("as + at"));
    assert!(good.verify(&ev).unwrap());
}

/// Rotating a generator by 180 degrees twice gives it back.
#[test]
fn double_rotation_is_the_identity() {
    let ev = Evaluator::new();
    for g in GenName::all_named() {
        let (src, tgt, _) = g.signature();
        let m = ev.generator(&g).unwrap();
        let once = rotate(&ev, &m, &src, &tgt).unwrap();
        let twice = rotate(&ev, &once, &tgt.reversed(), &src.reversed()).unwrap();
        assert_eq!(twice.map, m.map, "{}", g);
    }
}

/// Up-generators and their rotated partners are related by one rotation.
#[test]
fn rotated_partners_match() {
    let ev = Evaluator::new();
    let mut compared = 0;
    for g in GenName::all_named() {
        let Some(partner) = g.rotation_partner() else { continue };
        let (src, tgt, _) = g.signature();
        let (psrc, ptgt, _) = partner.signature();
        if psrc != tgt.reversed() || ptgt != src.reversed() {
            continue;
        }
        let once = rotate(&ev, &ev.generator(&g).unwrap(), &src, &tgt).unwrap();
        assert_eq!(once.map, ev.generator(&partner).unwrap().map, "{} -> {}", g, partner);
        compared += 1;
    }
    assert!(compared >= 5, "only {} rotation partners compared", compared);
}

fn green_brown_generators() -> Vec<GenName> {
    GenName::all_named()
        .into_iter()
        .filter(|g| {
            let (s, t, _) = g.signature();
            !s.0.contains(&O) && !t.0.contains(&O)
        })
        .collect()
}

#[test]
fn orange_slides_over_green_and_brown_generators() {
    let ev = Evaluator::new();
    let gens = green_brown_generators();
    assert!(gens.len() >= 16);
    for g in gens {
        let (above, below) = orange_slide(&Expr::gen(g.clone())).unwrap();
        assert!(ev.equal(&above, &below).unwrap(), "{}", g);
    }
    for f in ["as + at", "as*at", "(as - at)^2"] {
        let (above, below) = orange_slide(&poly(f)).unwrap();
        assert!(ev.equal(&above, &below).unwrap(), "poly {}", f);
    }
}

/// Small green/brown diagrams: a generator, possibly composed with a second
/// one and placed beside an identity strand.
fn small_expr() -> impl Strategy<Value = Expr> {
    let pool = green_brown_generators();
    let n = pool.len();
    (0..n, proptest::option::of(any::<prop::sample::Index>()), prop_oneof![Just(None), Just(Some(G)), Just(Some(B))])
        .prop_map(move |(i, second, side)| {
            let first = Expr::gen(pool[i].clone());
            let (_, tgt, _) = first.shape().unwrap();
            let mut e = first;
            if let Some(pick) = second {
                let options: Vec<&GenName> = pool.iter().filter(|g| g.signature().0 == tgt).collect();
                if !options.is_empty() {
                    e = Expr::gen(options[pick.index(options.len())].clone()).after(e);
                }
            }
            match side {
                Some(c) => e.beside(id(&[c])),
                None => e,
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn orange_circles_can_be_erased(e in small_expr()) {
        let ev = Evaluator::new();
        prop_assert!(ev.equal(&encircle(&e).unwrap(), &e).unwrap(), "{}", e);
    }

    #[test]
    fn orange_slides_over_composites(e in small_expr()) {
        let ev = Evaluator::new();
        let (above, below) = orange_slide(&e).unwrap();
        prop_assert!(ev.equal(&above, &below).unwrap(), "{}", e);
    }
}

#[test]
fn idempotent_suites_decompose_the_identity() {
    let ev = Evaluator::new();
    for pair in Pair::ALL {
        let check = check_suite(&ev, pair, &idempotent_suite(pair)).unwrap();
        assert!(check.all_pass(), "{}: {:?}", pair.name(), check);
    }
}

#[test]
fn evaluated_generators_have_their_declared_degrees() {
    let ev = Evaluator::new();
    for c in [O, G, B] {
        assert_eq!(ev.eval(&dot_up(c)).unwrap().degree(), c.dot_degree());
        assert_eq!(ev.eval(&dot_down(c)).unwrap().degree(), c.dot_degree());
    }
    assert_eq!(ev.eval(&barbell(G)).unwrap().degree(), 2);
    assert_eq!(ev.eval(&barbell(B)).unwrap().degree(), 4);
}
