//! Complete families of orthogonal idempotents on `YY`, `ZZ` and `YZ`.
//!
//! Every idempotent is stored in factored form `e = iota . pi`, where
//! `pi : w -> m` and `iota : m -> w` pass through a one- or two-letter word
//! `m` whose image is a shifted indecomposable.  With `[M[1]] = v [M]`, a
//! degree-`d` map `iota : M -> w` is a degree-0 inclusion of `M[-d]`, so the
//! recorded shift is `-deg(iota)`.

use alloc::vec;
use alloc::vec::Vec;

use super::diagrams::{barbell, cross_orange, dot_down, dot_up, id, stub_right, vertex};
use super::eval::Evaluator;
use super::expr::{Colour, Expr, FWord, GenName};
use crate::equiv::{EqMor, EqObj, Indec};
use crate::error::{Error, Result};
use crate::polyring::q;

use Colour::{B, G, O};

/// The tensor products of two non-invertible indecomposables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pair {
    YY,
    ZZ,
    YZ,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::YY, Pair::ZZ, Pair::YZ];

    /// The word `w` whose identity is decomposed.
    pub fn word(self) -> FWord {
        FWord::of(match self {
            Pair::YY => &[G, G],
            Pair::ZZ => &[B, B],
            Pair::YZ => &[G, B],
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Pair::YY => "YY",
            Pair::ZZ => "ZZ",
            Pair::YZ => "YZ",
        }
    }
}

/// One idempotent `iota . pi` of a suite.
#[derive(Clone, Debug)]
pub struct IdempotentEntry {
    /// Projection `w -> middle`.
    pub pi: Expr,
    /// Inclusion `middle -> w`.
    pub iota: Expr,
    /// The word the idempotent factors through.
    pub middle: FWord,
    /// The indecomposable that `middle` evaluates to.
    pub through: Indec,
    /// Shift of the summand, `-deg(iota)`.
    pub shift: i32,
}

impl IdempotentEntry {
    fn new(pi: Expr, iota: Expr, through: Indec) -> IdempotentEntry {
        let (middle, _, d) = iota.shape().expect("well-shaped inclusion");
        IdempotentEntry { pi, iota, middle, through, shift: -d }
    }

    /// The idempotent `iota . pi`.
    pub fn idempotent(&self) -> Expr {
        self.iota.clone().after(self.pi.clone())
    }

    /// The shifted indecomposable this summand is isomorphic to.
    pub fn through_object(&self) -> EqObj {
        EqObj::indecomposable(self.through, self.shift)
    }
}

pub type Suite = Vec<IdempotentEntry>;

fn split(mid: Colour, l: Colour, r: Colour) -> Expr {
    vertex(&[mid], &[l, r])
}

fn merge(l: Colour, r: Colour, mid: Colour) -> Expr {
    vertex(&[l, r], &[mid])
}

/// A barbell of colour `c` between two strands.
fn between(l: Colour, c: Colour, r: Colour) -> Expr {
    id(&[l]).beside(barbell(c)).beside(id(&[r]))
}

/// Orange strand entering the left green leg from its left: `o g -> g`.
fn land_left() -> Expr {
    vertex(&[O, G], &[G])
}

/// Orange strand leaving the left green leg to its left: `g -> o g`.
fn leave_left() -> Expr {
    vertex(&[G], &[O, G])
}

fn suite_yy() -> Suite {
    let half = q(1, 2);
    let up = || split(G, G, G);
    let down = || merge(G, G, G);
    let up_b = || split(B, G, G);
    let down_b = || merge(G, G, B);
    vec![
        // barbell between the upper legs: Y[-1]
        IdempotentEntry::new(down().scaled(half.clone()), between(G, G, G).after(up()), Indec::Y),
        // orange stub on the right of the lower-left leg: Y[1]
        IdempotentEntry::new(down().after(stub_right(G, O).beside(id(&[G]))).scaled(half.clone()), up(), Indec::Y),
        // brown middle edge: Z
        IdempotentEntry::new(down_b().scaled(half.clone()), up_b(), Indec::Z),
        // brown middle edge with an orange strand along its left: XZ
        IdempotentEntry::new(
            id(&[O]).beside(down_b()).after(leave_left().beside(id(&[G]))).scaled(half),
            land_left().beside(id(&[G])).after(id(&[O]).beside(up_b())),
            Indec::XZ,
        ),
    ]
}

fn suite_zz() -> Suite {
    let quarter = q(1, 4);
    let eighth = q(1, 8);
    let up = || split(B, B, B);
    let down = || merge(B, B, B);
    let xbo = || Expr::gen(GenName::XBO);
    vec![
        // brown barbell above: Z[-2]
        IdempotentEntry::new(down().scaled(quarter.clone()), between(B, B, B).after(up()), Indec::Z),
        // green barbells above and below: Z
        IdempotentEntry::new(
            down().after(between(B, G, B)).scaled(eighth.clone()),
            between(B, G, B).after(up()),
            Indec::Z,
        ),
        // brown barbell below: Z[2]
        IdempotentEntry::new(down().after(between(B, B, B)).scaled(quarter), up(), Indec::Z),
        // an orange strand from a dot below to a dot above, crossing the left legs: XZ
        IdempotentEntry::new(
            Expr::chain(vec![
                id(&[O]).beside(down()),
                xbo().beside(id(&[B])),
                id(&[B]).beside(dot_down(O)).beside(id(&[B])),
            ])
            .scaled(-eighth),
            Expr::chain(vec![
                id(&[B]).beside(dot_up(O)).beside(id(&[B])),
                cross_orange(B).beside(id(&[B])),
                id(&[O]).beside(up()),
            ]),
            Indec::XZ,
        ),
    ]
}

fn suite_yz() -> Suite {
    let eighth = q(1, 8);
    let up = || split(B, G, B);
    let down = || merge(G, B, B);
    // decorations of the region between the two legs, above or below the vertex
    let deco = || between(G, G, B).plus(stub_right(G, O).beside(id(&[B])));
    let into_orange = || land_left().beside(id(&[B])).after(id(&[O]).beside(up()));
    let out_of_orange = || id(&[O]).beside(down()).after(leave_left().beside(id(&[B])));
    vec![
        IdempotentEntry::new(down().scaled(eighth.clone()), deco().after(up()), Indec::Z),
        IdempotentEntry::new(out_of_orange().scaled(eighth.clone()), deco().after(into_orange()), Indec::XZ),
        IdempotentEntry::new(down().after(deco()).scaled(eighth.clone()), up(), Indec::Z),
        IdempotentEntry::new(out_of_orange().after(deco()).scaled(eighth), into_orange(), Indec::XZ),
    ]
}

/// The decomposition of `id_w` for the given pair.
pub fn idempotent_suite(pair: Pair) -> Suite {
    match pair {
        Pair::YY => suite_yy(),
        Pair::ZZ => suite_zz(),
        Pair::YZ => suite_yz(),
    }
}

/// Outcome of checking a suite under the evaluation functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteCheck {
    /// The idempotents sum to the identity.
    pub complete: bool,
    /// `e_i e_j = delta_ij e_i` for all `i, j`.
    pub orthogonal: bool,
    /// For each entry: `pi . iota = id` on the middle word.
    pub factors: Vec<bool>,
    /// For each entry: the middle word evaluates to the claimed shifted
    /// indecomposable (up to the equivariant structure, compared exactly).
    pub middle_matches: Vec<bool>,
}

impl SuiteCheck {
    pub fn all_pass(&self) -> bool {
        self.complete && self.orthogonal && self.factors.iter().all(|b| *b) && self.middle_matches.iter().all(|b| *b)
    }
}

fn middle_matches(e: &IdempotentEntry) -> bool {
    let obj = e.middle.eq_obj();
    let want = EqObj::indecomposable(e.through, 0);
    obj == want
}

/// Checks completeness, orthogonality and the factorisations exactly.
pub fn check_suite(ev: &Evaluator, pair: Pair, suite: &Suite) -> Result<SuiteCheck> {
    let w = pair.word();
    let idems: Vec<EqMor> = suite.iter().map(|e| ev.eval(&e.idempotent())).collect::<Result<_>>()?;
    let identity = ev.identity(&w);
    let mut total = identity.scale(&q(0, 1));
    for m in &idems {
        if m.src != identity.src || m.tgt != identity.tgt {
            return Err(Error::Shape("idempotent is not an endomorphism of the pair".into()));
        }
        total = total.add(m)?;
    }
    let complete = total.map == identity.map;
    let mut orthogonal = true;
    for (i, a) in idems.iter().enumerate() {
        for (j, b) in idems.iter().enumerate() {
            let p = a.compose(b)?;
            let ok = if i == j { p.map == a.map } else { p.is_zero() };
            orthogonal &= ok;
        }
    }
    let factors = suite
        .iter()
        .map(|e| {
            let back = ev.eval(&e.pi.clone().after(e.iota.clone()))?;
            Ok(back.map == ev.identity(&e.middle).map)
        })
        .collect::<Result<Vec<bool>>>()?;
    let middle_matches = suite.iter().map(middle_matches).collect();
    Ok(SuiteCheck { complete, orthogonal, factors, middle_matches })
}
