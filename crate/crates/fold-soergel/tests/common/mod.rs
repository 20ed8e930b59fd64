//! Random homogeneous maps shared by the integration suites.
#![allow(dead_code)]

use fold_soergel::bimod::{gens, Morphism, Obj, SumMor, SumObj};
use fold_soergel::equiv::{EqMor, EqObj, Indec};
use fold_soergel::polyring::{qi, Gen, Mono, Poly};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

/// A finite supply of small integer coefficients drawn by proptest.
pub struct Coeffs {
    values: Vec<i64>,
    pos: usize,
}

impl Coeffs {
    pub fn new(values: Vec<i64>) -> Coeffs {
        Coeffs { values, pos: 0 }
    }

    pub fn next(&mut self) -> i64 {
        let v = self.values[self.pos % self.values.len()];
        self.pos += 1;
        v
    }
}

pub fn coeff_pool() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 64)
}

/// A homogeneous polynomial of internal degree `d` (possibly zero).
pub fn poly_of_degree(d: i32, c: &mut Coeffs) -> Poly {
    Mono::of_degree(d).into_iter().fold(Poly::zero(), |acc, m| acc + Poly::term(qi(c.next()), m))
}

fn dots_up(w: &Obj) -> Morphism {
    w.word.0.iter().fold(gens::id(&[]), |acc, g| acc.tensor(&gens::dotu(*g)))
}

fn dots_down(w: &Obj) -> Morphism {
    w.word.0.iter().fold(gens::id(&[]), |acc, g| acc.tensor(&gens::dotd(*g)))
}

/// A random degree-`d` bimodule map `a -> b` built from the maps that factor
/// through `R`, polynomial multiples of the identity and of the crossing.
pub fn random_block(a: &Obj, b: &Obj, d: i32, c: &mut Coeffs) -> Morphism {
    let mut out = Morphism::zero(a.clone(), b.clone(), d);
    let through_unit = d - a.word.len() as i32 - b.word.len() as i32;
    if through_unit >= 0 && through_unit % 2 == 0 {
        let via = dots_down(b).compose(&dots_up(a)).unwrap();
        out = out.add(&via.scale_poly(&poly_of_degree(through_unit, c), through_unit)).unwrap();
    }
    if d >= 0 && d % 2 == 0 {
        if a.word == b.word {
            let left = Morphism::identity(a.clone()).scale_poly(&poly_of_degree(d, c), d);
            out = out.add(&left).unwrap();
            let f = poly_of_degree(d, c);
            if !f.is_zero() {
                let right = gens::id(&a.word.0).tensor(&gens::poly_box(&f).unwrap());
                out = out.add(&right).unwrap();
            }
        }
        if a.word.len() == 2 && a.word.0[0] != a.word.0[1] && b.word == a.word.tau() {
            let x = gens::crossing(a.word.0[0], a.word.0[1]).unwrap();
            out = out.add(&x.scale_poly(&poly_of_degree(d, c), d)).unwrap();
        }
    }
    out
}

pub fn random_sum_map(src: &SumObj, tgt: &SumObj, d: i32, c: &mut Coeffs) -> SumMor {
    let blocks = tgt.0.iter().map(|b| src.0.iter().map(|a| Some(random_block(a, b, d, c))).collect()).collect();
    SumMor::from_blocks(src.clone(), tgt.clone(), d, blocks).unwrap()
}

/// A random rational combination of the given maps (all of one shape).
pub fn random_combination(basis: &[EqMor], c: &mut Coeffs) -> Option<EqMor> {
    let mut it = basis.iter();
    let first = it.next()?.scale(&qi(c.next()));
    Some(it.fold(first, |acc, m| acc.add(&m.scale(&qi(c.next()))).unwrap()))
}

/// Unshifted Bott-Samelson objects used as `M`.
pub fn small_objects() -> Vec<SumObj> {
    let w = |g: &[Gen]| SumObj::single(Obj::of(g));
    vec![
        w(&[]),
        w(&[Gen::S]),
        w(&[Gen::T]),
        w(&[Gen::S, Gen::T]),
        w(&[Gen::T, Gen::S]),
        SumObj(vec![Obj::of(&[Gen::S]), Obj::of(&[])]),
    ]
}

/// Equivariant objects used as `N`.
pub fn small_equivariant_objects() -> Vec<EqObj> {
    let mut v: Vec<EqObj> = Indec::ALL.iter().map(|n| EqObj::indecomposable(*n, 0)).collect();
    let y = EqObj::indecomposable(Indec::Y, 0);
    v.push(y.tensor(&y));
    v.push(y.tensor(&EqObj::indecomposable(Indec::Z, 0)));
    v
}

/// `(index into small_objects, index into small_equivariant_objects, degree, coefficients)`.
pub fn adjunction_case() -> impl Strategy<Value = (usize, usize, i32, Vec<i64>)> {
    (0..small_objects().len(), 0..small_equivariant_objects().len(), 0i32..=6, coeff_pool())
}

/// Draws `n` deterministic samples from a strategy.
pub fn samples<S: Strategy>(strategy: S, n: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..n).map(|_| strategy.new_tree(&mut runner).unwrap().current()).collect()
}
