use fold_soergel::foldcat::{Evaluator, GenName};

#[test]
fn every_generator_is_a_degree_consistent_equivariant_bimodule_map() {
    let ev = Evaluator::new();
    for g in GenName::all_named() {
        let m = ev.generator(&g).unwrap();
        let (_, _, d) = g.signature();
        assert_eq!(m.degree(), d, "{}", g);
        assert!(m.map.check_blocks(), "{} blocks", g);
        assert!(m.is_equivariant(), "{} equivariance", g);
    }
}
