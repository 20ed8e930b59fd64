//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Every comparison below is exact equality of rational matrices, integer
//! Laurent polynomials or dimensions; no numerical tolerance exists anywhere.
//! The only non-exact bound is the wall-clock limit on catalog verification.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{adjunction_case, random_sum_map, samples, small_equivariant_objects, small_objects, Coeffs};
use fold_soergel::bimod::{gens, Morphism, Obj, SumMor, Vector};
use fold_soergel::equiv::{
    adjunction_phi, adjunction_phi_prime, adjunction_psi, adjunction_psi_prime, restrict, splitting_maps, EqObj, Indec,
};
use fold_soergel::foldcat::diagrams::{barbell, encircle, orange_slide, poly};
use fold_soergel::foldcat::{
    check_suite, idempotent_suite, relation_catalog, rotate, Evaluator, Expr, GenName, Pair, Relation, RelationKind,
};
use fold_soergel::grring::{all_words, class_of, decompose_word, predicted_grdim, word_class, RingElem, Summand};
use fold_soergel::homsolve::{free_rank_over_rtau, graded_dim, hom_dim, verify_spanning};
use fold_soergel::polyring::{qi, Gen, LaurentInt, Mono, Poly};
use proptest::prelude::*;

/// Wall-clock limit for verifying the whole relation catalog.
const TIME_LIMIT: Duration = Duration::from_secs(60);
/// Truncation degree for graded dimensions and numerators.
const DEGREE_BOUND: i32 = 12;
/// Truncation degree for the Hilbert series of the invariant ring.
const HILBERT_BOUND: i32 = 16;
/// Allowed deviation in every comparison: none.
const TOLERANCE: i64 = 0;
const ADJUNCTION_SAMPLES: usize = 50;
const SPLIT_SAMPLES: usize = 200;
const FORCING_SAMPLES: usize = 100;
const CIRCLE_SAMPLES: usize = 20;
const LEIBNIZ_SAMPLES: usize = 200;
const INTERCHANGE_SAMPLES: usize = 100;

/// Outcome of one criterion: failing sub-checks and informational notes.
#[derive(Default)]
struct Report {
    failures: Vec<String>,
    notes: Vec<String>,
    summary: String,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn lp(s: &str) -> LaurentInt {
    LaurentInt::parse(s).unwrap()
}

/// Exact comparison of Laurent polynomials: the largest coefficient
/// difference must not exceed [`TOLERANCE`] (which is zero).
fn laurent_eq(a: &LaurentInt, b: &LaurentInt) -> bool {
    (a - b).terms().all(|(_, c)| c.abs() <= TOLERANCE)
}

fn ind(n: Indec) -> EqObj {
    EqObj::indecomposable(n, 0)
}

fn criterion_1() -> Report {
    let mut r = Report::default();
    let ev = Evaluator::new();
    let start = Instant::now();
    let catalog = relation_catalog();
    let mut passed = 0;
    for rel in &catalog {
        match rel.verify(&ev) {
            Ok(true) => passed += 1,
            other => r.failures.push(format!("{}: {:?}", rel.id, other)),
        }
    }
    let elapsed = start.elapsed();
    r.check(elapsed < TIME_LIMIT, format!("took {:?}, limit {:?}", elapsed, TIME_LIMIT));
    r.summary = format!("{}/{} relations verified exactly in {:.2?}", passed, catalog.len(), elapsed);
    r
}

fn c(g: &Morphism, f: &Morphism) -> Morphism {
    g.compose(f).unwrap()
}

fn criterion_2() -> Report {
    let mut r = Report::default();
    let mut count = 0;
    let mut check = |r: &mut Report, ok: bool, what: String| {
        count += 1;
        r.check(ok, what);
    };
    for g in [Gen::S, Gen::T] {
        let id1 = gens::id(&[g]);
        let (dotu, dotd, merge, split) = (gens::dotu(g), gens::dotd(g), gens::merge(g), gens::split(g));
        check(&mut r, c(&merge, &dotd.tensor(&id1)) == id1, format!("unit {:?}", g));
        check(&mut r, c(&dotu.tensor(&id1), &split) == id1, format!("counit {:?}", g));
        let h = c(&merge.tensor(&id1), &id1.tensor(&split));
        check(&mut r, h == c(&split, &merge), format!("H = I {:?}", g));
        check(&mut r, c(&merge, &split).is_zero(), format!("needle {:?}", g));
        check(&mut r, c(&dotu, &dotd) == gens::poly_box(&Poly::alpha(g)).unwrap(), format!("barbell {:?}", g));
        for f in ["as^2 + as*at", "(as - at)^3", "at"] {
            let f = Poly::parse(f).unwrap();
            let deg = f.degree().unwrap();
            let lhs = gens::left_poly(&f, &[g]).unwrap();
            let forced = c(&dotd, &dotu).scale_poly(&f.demazure(g), deg - 2);
            let rhs = gens::right_poly(&[g], &f.act(g)).unwrap().add(&forced).unwrap();
            check(&mut r, lhs == rhs, format!("forcing {:?} {}", g, f));
        }
        let h = g.swap();
        let (x_gh, x_hg) = (gens::crossing(g, h).unwrap(), gens::crossing(h, g).unwrap());
        check(&mut r, c(&x_hg, &x_gh) == gens::id(&[g, h]), format!("crossings inverse {:?}", g));
        let slid = c(&x_hg, &gens::id(&[h]).tensor(&dotd));
        check(&mut r, slid == dotd.tensor(&gens::id(&[h])), format!("dot through crossing {:?}", g));
        let alpha = Poly::alpha(g);
        let central = gens::left_poly(&alpha, &[h]).unwrap() == gens::right_poly(&[h], &alpha).unwrap();
        check(&mut r, central, format!("root {:?} central for the other colour", g));
    }
    r.summary = format!("{} one- and two-colour relations, both colours", count);
    r
}

fn criterion_3() -> Report {
    let mut r = Report::default();
    let expected = [(Indec::One, "1"), (Indec::X, "v^2"), (Indec::Y, "v + v^3"), (Indec::Z, "v^2"), (Indec::XZ, "v^4")];
    let mut found = Vec::new();
    for (n, p) in expected {
        match free_rank_over_rtau(&ind(n), &EqObj::unit(), DEGREE_BOUND) {
            Ok(num) => {
                r.check(laurent_eq(&num, &lp(p)), format!("{}: numerator {} != {}", n.name(), num, p));
                found.push(format!("{}:{}", n.name(), num));
            }
            Err(e) => r.failures.push(format!("{}: {}", n.name(), e)),
        }
        r.check(matches!(verify_spanning(n, DEGREE_BOUND), Ok(true)), format!("{}: spanning", n.name()));
    }
    r.notes.push(
        "flagged: the printed generator list for Y reads 1+v^2, but its two generators are a dot \
         (degree 1) and a dot with an orange stub (degree 3), so the exact numerator is v+v^3 = v(1+v^2)"
            .into(),
    );
    r.summary = format!("numerators [{}], spanning verified", found.join(", "));
    r
}

fn criterion_4() -> Report {
    let mut r = Report::default();
    let num = &lp("1 + v^2") * &lp("1 + 2v^2");
    let expected = (&num * &LaurentInt::rtau_hilbert(DEGREE_BOUND)).truncate(DEGREE_BOUND);
    let got = graded_dim(&ind(Indec::Y), &ind(Indec::Y), DEGREE_BOUND);
    r.check(laurent_eq(&got, &expected), format!("End(Y) = {} != {}", got, expected));
    for n in Indec::ALL {
        let d = hom_dim(&ind(n), &ind(n), 0);
        r.check(d == 1, format!("End^0({}) has dimension {}", n.name(), d));
    }
    r.summary = format!("grdim End(Y) = {}; End^0 one-dimensional for all five", got);
    r
}

fn criterion_5() -> Report {
    let mut r = Report::default();
    let ev = Evaluator::new();
    let mut sizes = Vec::new();
    for pair in Pair::ALL {
        let suite = idempotent_suite(pair);
        match check_suite(&ev, pair, &suite) {
            Ok(check) => r.check(check.all_pass(), format!("{}: {:?}", pair.name(), check)),
            Err(e) => r.failures.push(format!("{}: {}", pair.name(), e)),
        }
        let mut summands: Vec<Summand> = suite.iter().map(|e| (e.through, e.shift)).collect();
        summands.sort();
        let word = fold_soergel::grring::parse_word(pair.name()).unwrap();
        r.check(summands == decompose_word(&word), format!("{}: summands differ from the decomposition", pair.name()));
        sizes.push(format!("{}:{}", pair.name(), suite.len()));
    }
    r.summary = format!("complete orthogonal factored suites [{}] matching the word decompositions", sizes.join(", "));
    r
}

fn object_of(word: &[Summand]) -> EqObj {
    word.iter().fold(EqObj::unit(), |acc, (n, k)| acc.tensor(&EqObj::indecomposable(*n, *k)))
}

fn criterion_6() -> Report {
    let mut r = Report::default();
    let words = all_words(3);
    r.check(words.len() == 39, format!("{} words instead of 39", words.len()));
    for w in &words {
        let class = word_class(w);
        r.check(class_of(&decompose_word(w)) == class, format!("{:?}: decomposition class", w));
        let predicted = predicted_grdim(&class, &RingElem::one()).truncate(DEGREE_BOUND);
        match free_rank_over_rtau(&object_of(w), &EqObj::unit(), DEGREE_BOUND) {
            Ok(solved) => r.check(laurent_eq(&solved, &predicted), format!("{:?}: {} != {}", w, solved, predicted)),
            Err(e) => r.failures.push(format!("{:?}: {}", w, e)),
        }
    }
    let b = RingElem::basis(Indec::Z).specialize(-1).unwrap();
    let rhs = RingElem::basis_scaled(Indec::Z, lp("v^2 + v^-2")).specialize(-1).unwrap();
    r.check(b.multiply(&b).ok() == Some(rhs), "b_st^2 at X = -1");
    r.summary = format!("{} words: classes and solver numerators agree; b_st^2 = (v^2+v^-2) b_st", words.len());
    r
}

/// Returns the number of sampled maps and the failures.
fn adjunction_roundtrips(r: &mut Report) -> usize {
    let objs = small_objects();
    let eqs = small_equivariant_objects();
    let cases = samples(adjunction_case(), ADJUNCTION_SAMPLES);
    for (k, (mi, ni, d, pool)) in cases.iter().enumerate() {
        let (m, n) = (&objs[*mi], &eqs[*ni]);
        let mut coeffs = Coeffs::new(pool.clone());
        let phi = random_sum_map(m, &restrict(n), *d, &mut coeffs);
        let back = adjunction_phi(&phi, n).and_then(|e| adjunction_psi(&e, m));
        r.check(back.as_ref() == Ok(&phi), format!("Psi(Phi) sample {}", k));
        let phi2 = random_sum_map(&restrict(n), m, *d, &mut coeffs);
        let back = adjunction_phi_prime(&phi2, n).and_then(|e| adjunction_psi_prime(&e, m));
        r.check(back.as_ref() == Ok(&phi2), format!("Psi'(Phi') sample {}", k));
    }
    cases.len()
}

fn criterion_7() -> Report {
    let mut r = Report::default();
    let n = adjunction_roundtrips(&mut r);
    for name in Indec::ALL {
        let e = ind(name);
        let ok = splitting_maps(&e)
            .and_then(|(iota, p)| p.compose(&iota))
            .map(|pi| pi.map == SumMor::identity(e.underlying.clone()).scale(&qi(2)));
        r.check(ok == Ok(true), format!("p o iota != 2 id on {}", name.name()));
    }
    r.summary = format!("{} maps each way roundtrip; p o iota = 2 id on all five", n);
    r
}

fn homogeneous(max_half: u32) -> impl Strategy<Value = Poly> {
    (0..=max_half).prop_flat_map(|n| {
        proptest::collection::vec(-6i64..=6, (n + 1) as usize).prop_map(move |cs| {
            cs.iter()
                .enumerate()
                .fold(Poly::zero(), |acc, (s, k)| acc + Poly::term(qi(*k), Mono::new(s as u32, n - s as u32)))
        })
    })
}

fn generator_pool() -> Vec<Morphism> {
    let mut v = vec![gens::id(&[])];
    for g in [Gen::S, Gen::T] {
        v.extend([
            gens::id(&[g]),
            gens::dotu(g),
            gens::dotd(g),
            gens::merge(g),
            gens::split(g),
            gens::cap(g),
            gens::cup(g),
            gens::crossing(g, g.swap()).unwrap(),
        ]);
    }
    v
}

fn interchange_law(r: &mut Report) {
    let pool = generator_pool();
    let pick = (0..pool.len(), any::<prop::sample::Index>(), 0..pool.len(), any::<prop::sample::Index>());
    for (k, (i, a, j, b)) in samples(pick, INTERCHANGE_SAMPLES).into_iter().enumerate() {
        let follow = |f: &Morphism, idx: prop::sample::Index| {
            let opts: Vec<&Morphism> = pool.iter().filter(|m| m.src == f.tgt).collect();
            if opts.is_empty() {
                Morphism::identity(f.tgt.clone())
            } else {
                opts[idx.index(opts.len())].clone()
            }
        };
        let (f1, f2) = (pool[i].clone(), pool[j].clone());
        let (g1, g2) = (follow(&f1, a), follow(&f2, b));
        let lhs = c(&g1.tensor(&g2), &f1.tensor(&f2));
        let rhs = c(&g1, &f1).tensor(&c(&g2, &f2));
        r.check(lhs == rhs, format!("interchange sample {}", k));
    }
}

fn green_brown() -> Vec<GenName> {
    use fold_soergel::foldcat::Colour::O;
    GenName::all_named()
        .into_iter()
        .filter(|g| {
            let (s, t, _) = g.signature();
            !s.0.contains(&O) && !t.0.contains(&O)
        })
        .collect()
}

fn criterion_8() -> Report {
    let mut r = Report::default();
    let gen = prop_oneof![Just(Gen::S), Just(Gen::T)];

    // involutions and twisted Leibniz
    for (f, h, g) in samples((homogeneous(3), homogeneous(3), gen.clone()), LEIBNIZ_SAMPLES) {
        r.check(f.act(g).act(g) == f && f.tau().tau() == f, format!("involution on {}", f));
        let lhs = (&f * &h).demazure(g);
        let rhs = &(&f.demazure(g) * &h) + &(&f.act(g) * &h.demazure(g));
        r.check(lhs == rhs, format!("twisted Leibniz on {} and {}", f, h));
    }
    // split reconstruction
    for (f, g) in samples((homogeneous(6), gen.clone()), SPLIT_SAMPLES) {
        let (a, b) = f.split_over_invariants(g);
        r.check(&a + &(&b * &Poly::alpha(g)) == f, format!("split of {}", f));
    }
    // Hilbert series of the invariants, by monomial symmetrization
    let mut counted = LaurentInt::zero();
    for d in 0..=HILBERT_BOUND {
        let mut seen: Vec<Poly> = Vec::new();
        for m in Mono::of_degree(d) {
            let s = &Poly::monomial(m) + &Poly::monomial(m).tau();
            if !seen.contains(&s) {
                seen.push(s);
            }
        }
        counted.add_term(d, seen.len() as i64);
    }
    r.check(laurent_eq(&counted, &LaurentInt::rtau_hilbert(HILBERT_BOUND)), "Hilbert series of R^tau");
    interchange_law(&mut r);

    let ev = Evaluator::new();
    // isotopy: rotating twice
    for g in GenName::all_named() {
        let (src, tgt, _) = g.signature();
        let m = ev.generator(&g).unwrap();
        let twice = rotate(&ev, &m, &src, &tgt).and_then(|once| rotate(&ev, &once, &tgt.reversed(), &src.reversed()));
        r.check(twice.map(|t| t.map == m.map) == Ok(true), format!("double rotation of {}", g));
    }
    // orange sliding
    let pool = green_brown();
    for g in &pool {
        let ok = orange_slide(&Expr::gen(g.clone())).and_then(|(a, b)| ev.equal(&a, &b));
        r.check(ok == Ok(true), format!("orange slide over {}", g));
    }
    // circle erasure
    let composite = (0..pool.len(), any::<prop::sample::Index>());
    for (i, pick) in samples(composite, CIRCLE_SAMPLES) {
        let first = Expr::gen(pool[i].clone());
        let tgt = first.shape().unwrap().1;
        let opts: Vec<&GenName> = pool.iter().filter(|g| g.signature().0 == tgt).collect();
        let e = if opts.is_empty() { first } else { Expr::gen(opts[pick.index(opts.len())].clone()).after(first) };
        let ok = encircle(&e).and_then(|circled| ev.equal(&circled, &e));
        r.check(ok == Ok(true), format!("circle erasure around {}", e));
    }
    // adjunction roundtrips
    let n_adj = adjunction_roundtrips(&mut r);
    // polynomial forcing
    for (f, g) in samples((homogeneous(5), gen), FORCING_SAMPLES) {
        if f.is_zero() {
            continue;
        }
        let deg = f.degree().unwrap();
        let broken = c(&gens::dotd(g), &gens::dotu(g));
        let rhs = gens::right_poly(&[g], &f.act(g)).unwrap().add(&broken.scale_poly(&f.demazure(g), deg - 2));
        r.check(rhs.ok() == gens::left_poly(&f, &[g]).ok(), format!("forcing {}", f));
    }
    // negative controls
    let mut keep = Vector::new();
    keep.insert(0, Poly::one());
    let bad = Morphism::from_cols(Obj::of(&[Gen::S]), Obj::of(&[Gen::S]), 0, vec![keep, Vector::new()]);
    r.check(!bad.check_bimodule_map(), "non-bimodule map accepted");
    let corrupted = Relation::new(
        "barbell.green",
        RelationKind::Defining,
        "corrupted",
        barbell(fold_soergel::foldcat::Colour::G),
        poly("as*at"),
    );
    r.check(corrupted.verify(&ev) == Ok(false), "corrupted green barbell accepted");

    r.summary = format!(
        "involutions+Leibniz {}, splits {}, Hilbert to v^{}, interchange {}, rotations {}, slides {}, circles {}, adjunction {}, forcing {}, 2 negative controls",
        LEIBNIZ_SAMPLES,
        SPLIT_SAMPLES,
        HILBERT_BOUND,
        INTERCHANGE_SAMPLES,
        GenName::all_named().len(),
        pool.len(),
        CIRCLE_SAMPLES,
        n_adj,
        FORCING_SAMPLES
    );
    r
}

type Criterion = (u32, &'static str, fn() -> Report);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "relation catalog", criterion_1),
        (2, "A1xA1 base relations", criterion_2),
        (3, "Hom to the unit", criterion_3),
        (4, "graded endomorphisms", criterion_4),
        (5, "idempotent suites", criterion_5),
        (6, "Grothendieck ring consistency", criterion_6),
        (7, "adjunctions and splittings", criterion_7),
        (8, "property suites", criterion_8),
    ];
    let mut all_ok = true;
    for (k, name, run) in criteria {
        let report = run();
        let ok = report.failures.is_empty();
        all_ok &= ok;
        println!("{} criterion {} ({}): {}", if ok { "PASS" } else { "FAIL" }, k, name, report.summary);
        for f in report.failures.iter().take(10) {
            println!("    failed: {}", f);
        }
        for n in &report.notes {
            println!("    note: {}", n);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
