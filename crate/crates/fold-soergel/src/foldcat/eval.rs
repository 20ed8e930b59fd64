//! The evaluation functor from folded diagrams to equivariant bimodule maps.
//!
//! Upward generators, crossings, cups and caps are given explicitly as block
//! matrices of two-colour maps.  Every downward generator is the 180-degree
//! rotation of its upward partner, computed with cups and caps, so the whole
//! table is determined by the explicit half.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use super::expr::{Colour, Expr, FWord, GenName};
use crate::bimod::{gens, Morphism, Obj, SumMor};
use crate::equiv::EqMor;
use crate::error::{Error, Result};
use crate::polyring::{self, Gen, Q};

const S: Gen = Gen::S;
const T: Gen = Gen::T;

fn cross(a: Gen, b: Gen) -> Morphism {
    gens::crossing(a, b).expect("distinct colours")
}

fn comp(a: &Morphism, b: &Morphism) -> Morphism {
    a.compose(b).expect("two-colour shapes agree")
}

/// Identity on `B_s`, `B_t`, etc.
fn idw(w: &[Gen]) -> Morphism {
    gens::id(w)
}

fn row(src: &FWord, tgt: &FWord, degree: i32, parts: Vec<Option<Morphism>>) -> SumMor {
    let s = src.eq_obj().underlying;
    let t = tgt.eq_obj().underlying;
    SumMor::from_blocks(s, t, degree, vec![parts]).expect("row block shapes")
}

fn column(src: &FWord, tgt: &FWord, degree: i32, parts: Vec<Option<Morphism>>) -> SumMor {
    let s = src.eq_obj().underlying;
    let t = tgt.eq_obj().underlying;
    SumMor::from_blocks(s, t, degree, parts.into_iter().map(|p| vec![p]).collect()).expect("column block shapes")
}

fn blocks(src: &FWord, tgt: &FWord, degree: i32, b: Vec<Vec<Option<Morphism>>>) -> SumMor {
    let s = src.eq_obj().underlying;
    let t = tgt.eq_obj().underlying;
    SumMor::from_blocks(s, t, degree, b).expect("block shapes")
}

/// The explicitly tabulated images (everything except rotated generators).
fn explicit_image(g: &GenName) -> Option<SumMor> {
    use GenName::*;
    let (src, tgt, deg) = g.signature();
    let neg = -Q::one();
    // B_s B_t B_s B_t -> B_s B_s B_t B_t, bringing like colours together.
    let gather = || idw(&[S]).tensor(&cross(T, S)).tensor(&idw(&[T]));
    Some(match g {
        DotU(Colour::G) => row(&src, &tgt, deg, vec![Some(gens::dotu(S)), Some(gens::dotu(T))]),
        DotU(Colour::O) => SumMor::single(gens::poly_box(&polyring::Poly::alpha_diff()).expect("homogeneous")),
        DotU(Colour::B) => SumMor::single(gens::dotu(S).tensor(&gens::dotu(T))),
        Cap(Colour::G) => row(&src, &tgt, deg, vec![Some(gens::cap(S)), None, None, Some(gens::cap(T))]),
        Cup(Colour::G) => column(&src, &tgt, deg, vec![Some(gens::cup(S)), None, None, Some(gens::cup(T))]),
        Cap(Colour::O) | Cup(Colour::O) => SumMor::single(Morphism::identity(Obj::unit())),
        Cap(Colour::B) => SumMor::single(comp(&gens::cap(S).tensor(&gens::cap(T)), &gather())),
        Cup(Colour::B) => {
            let spread = idw(&[S]).tensor(&cross(S, T)).tensor(&idw(&[T]));
            SumMor::single(comp(&spread, &gens::cup(S).tensor(&gens::cup(T))))
        }
        MergeGGG => blocks(
            &src,
            &tgt,
            deg,
            vec![vec![Some(gens::merge(S)), None, None, None], vec![None, None, None, Some(gens::merge(T))]],
        ),
        MergeBBB => SumMor::single(comp(&gens::merge(S).tensor(&gens::merge(T)), &gather())),
        TriUGBB => {
            let ts = comp(&gens::merge(S).tensor(&gens::cap(T)), &gather());
            // the t-row is forced by equivariance: T_t = tau(T_s) o f^{-1}
            let tt = comp(&ts.tau(), &cross(S, T).tensor(&cross(S, T)));
            column(&src, &tgt, deg, vec![Some(ts), Some(tt)])
        }
        TriUBGG => row(&src, &tgt, deg, vec![None, Some(idw(&[S, T])), Some(cross(T, S)), None]),
        LandUOGG => row(&src, &tgt, deg, vec![Some(gens::cap(S)), None, None, Some(gens::cap(T).scale(&neg))]),
        XBO | XOB => SumMor::single(idw(&[S, T])),
        XGO | XOG => blocks(&src, &tgt, deg, vec![vec![Some(idw(&[S])), None], vec![None, Some(idw(&[T]))]]),
        XOO => SumMor::single(Morphism::identity(Obj::unit())),
        BivGB => column(
            &src,
            &tgt,
            deg,
            vec![Some(idw(&[S]).tensor(&gens::dotu(T))), Some(gens::dotu(S).tensor(&idw(&[T])))],
        ),
        BivOG => row(&src, &tgt, deg, vec![Some(gens::dotu(S)), Some(gens::dotu(T).scale(&neg))]),
        Poly(f) => SumMor::single(gens::poly_box(f).ok()?),
        _ => return None,
    })
}

/// Evaluates expressions; holds the precomputed generator table.
#[derive(Clone, Debug)]
pub struct Evaluator {
    table: BTreeMap<String, EqMor>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator::new()
    }
}

impl Evaluator {
    /// Builds the generator table (rotated generators are computed here once).
    pub fn new() -> Evaluator {
        let mut table = BTreeMap::new();
        let mut ev = Evaluator { table: BTreeMap::new() };
        for g in GenName::all_named() {
            if let Some(m) = explicit_image(&g) {
                let (s, t, _) = g.signature();
                let e = EqMor::new_unchecked(s.eq_obj(), t.eq_obj(), m).expect("generator shapes");
                table.insert(g.token(), e);
            }
        }
        ev.table = table;
        for g in GenName::all_named() {
            if let Some(down) = g.rotation_partner() {
                let up = ev.table[&g.token()].clone();
                let (s, t, _) = g.signature();
                let r = rotate(&ev, &up, &s, &t).expect("rotation of a generator");
                ev.table.insert(down.token(), r);
            }
        }
        ev
    }

    /// Image of a single generator.
    pub fn generator(&self, g: &GenName) -> Result<EqMor> {
        if let GenName::Poly(f) = g {
            Expr::poly(f.clone()).shape()?;
            let m = SumMor::single(gens::poly_box(f)?);
            let u = FWord::empty().eq_obj();
            return EqMor::new_unchecked(u.clone(), u, m);
        }
        self.table.get(&g.token()).cloned().ok_or_else(|| Error::Unknown(g.token()))
    }

    /// Identity of the image of a word.
    pub fn identity(&self, w: &FWord) -> EqMor {
        w.eq_obj().identity()
    }

    /// Evaluates a well-shaped expression.
    pub fn eval(&self, e: &Expr) -> Result<EqMor> {
        Ok(match e {
            Expr::Gen(g) => self.generator(g)?,
            Expr::Id(w) => self.identity(w),
            Expr::Compose(a, b) => self.eval(a)?.compose(&self.eval(b)?)?,
            Expr::Tensor(a, b) => self.eval(a)?.tensor(&self.eval(b)?),
            Expr::Add(a, b) => self.eval(a)?.add(&self.eval(b)?)?,
            Expr::Scale(c, a) => self.eval(a)?.scale(c),
            Expr::ScalePoly(f, a) => self.eval(&Expr::poly(f.clone()).beside((**a).clone()))?,
        })
    }

    /// Evaluates both sides and compares exactly.
    pub fn equal(&self, lhs: &Expr, rhs: &Expr) -> Result<bool> {
        let a = self.eval(lhs)?;
        let b = self.eval(rhs)?;
        if a.map.src != b.map.src || a.map.tgt != b.map.tgt {
            return Err(Error::Shape("the two sides have different boundaries".into()));
        }
        Ok(a.map == b.map)
    }

    /// Nested caps `rev(w) w -> 1`.
    pub fn nested_cap(&self, w: &FWord) -> EqMor {
        match w.0.split_last() {
            None => self.identity(&FWord::empty()),
            Some((last, init)) => {
                let init = FWord(init.to_vec());
                let inner = self
                    .identity(&FWord::of(&[*last]))
                    .tensor(&self.nested_cap(&init))
                    .tensor(&self.identity(&FWord::of(&[*last])));
                let cap = self.table[&GenName::Cap(*last).token()].clone();
                cap.compose(&inner).expect("nested cap shapes")
            }
        }
    }

    /// Nested cups `1 -> w rev(w)`.
    pub fn nested_cup(&self, w: &FWord) -> EqMor {
        match w.0.split_first() {
            None => self.identity(&FWord::empty()),
            Some((first, rest)) => {
                let rest = FWord(rest.to_vec());
                let c = FWord::of(&[*first]);
                let inner = self.identity(&c).tensor(&self.nested_cup(&rest)).tensor(&self.identity(&c));
                let cup = self.table[&GenName::Cup(*first).token()].clone();
                inner.compose(&cup).expect("nested cup shapes")
            }
        }
    }
}

/// 180-degree rotation of `m : src -> tgt`, a map `rev(tgt) -> rev(src)`:
/// `(cap_tgt (x) id) o (id (x) m (x) id) o (id (x) cup_src)`.
pub fn rotate(ev: &Evaluator, m: &EqMor, src: &FWord, tgt: &FWord) -> Result<EqMor> {
    let tr = tgt.reversed();
    let sr = src.reversed();
    let step1 = ev.identity(&tr).tensor(&ev.nested_cup(src));
    let step2 = ev.identity(&tr).tensor(m).tensor(&ev.identity(&sr));
    let step3 = ev.nested_cap(tgt).tensor(&ev.identity(&sr));
    step3.compose(&step2.compose(&step1)?)
}
