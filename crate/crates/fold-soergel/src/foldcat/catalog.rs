//! The relation catalog: defining relations of the folded category and the
//! relations derived from them, each as a pair of expressions that must have
//! equal images under the evaluation functor.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::diagrams::*;
use super::eval::Evaluator;
use super::expr::{Colour, Expr, GenName};
use crate::error::Result;
use crate::polyring::{q, qi, Poly, Q};

use Colour::{B, G, O};

/// Whether a relation is imposed or follows from the imposed ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Defining,
    Derived,
}

impl RelationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::Defining => "defining",
            RelationKind::Derived => "derived",
        }
    }
}

/// A relation `lhs = rhs` between diagrams with the same boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub id: String,
    pub lhs: Expr,
    pub rhs: Expr,
    /// Where the relation comes from, as a human-readable citation.
    pub origin: String,
    pub kind: RelationKind,
}

impl Relation {
    pub fn new(id: &str, kind: RelationKind, origin: &str, lhs: Expr, rhs: Expr) -> Relation {
        Relation { id: id.to_string(), lhs, rhs, origin: origin.to_string(), kind }
    }

    /// Checks the relation exactly under the evaluation functor.
    pub fn verify(&self, ev: &Evaluator) -> Result<bool> {
        ev.equal(&self.lhs, &self.rhs)
    }
}

/// Parameters of the catalog.
#[derive(Clone, Debug)]
pub struct CatalogOptions {
    /// The `tau`-invariant polynomials at which the families of forcing,
    /// needle and circle relations are instantiated.
    pub forcing_family: Vec<Poly>,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions { forcing_family: default_forcing_family() }
    }
}

/// `1, as+at, as*at, (as+at)^2, (as+at)*as*at`.
pub fn default_forcing_family() -> Vec<Poly> {
    ["1", "as + at", "as*at", "(as + at)^2", "(as + at)*as*at"]
        .iter()
        .map(|t| Poly::parse(t).expect("literal"))
        .collect()
}

/// The catalog with the default options.
pub fn relation_catalog() -> Vec<Relation> {
    relation_catalog_with(&CatalogOptions::default())
}

/// The full catalog: defining relations first, then derived ones.
pub fn relation_catalog_with(opts: &CatalogOptions) -> Vec<Relation> {
    let mut v = defining();
    v.extend(derived());
    v.extend(families(&opts.forcing_family));
    v
}

/// The zero map with the boundary and degree of `e`.
fn zero(e: &Expr) -> Expr {
    e.clone().scaled(Q::zero())
}

fn sc(c: Q, e: Expr) -> Expr {
    e.scaled(c)
}

fn def(id: &str, origin: &str, lhs: Expr, rhs: Expr) -> Relation {
    Relation::new(id, RelationKind::Defining, origin, lhs, rhs)
}

fn der(id: &str, origin: &str, lhs: Expr, rhs: Expr) -> Relation {
    Relation::new(id, RelationKind::Derived, origin, lhs, rhs)
}

/// Orange strand leaving a green strand to its top-left / top-right, and
/// landing on one from the bottom-left / bottom-right.
fn leave_left() -> Expr {
    vertex(&[G], &[O, G])
}

fn leave_right() -> Expr {
    vertex(&[G], &[G, O])
}

fn land_left() -> Expr {
    vertex(&[O, G], &[G])
}

fn land_right() -> Expr {
    vertex(&[G, O], &[G])
}

fn defining() -> Vec<Relation> {
    let bb = "defining: barbell relations";
    let vd = "defining: vertex definitions";
    let bd = "defining: bivalent vertex definitions";
    let nd = "defining: needle and circle relations";
    let ud = "defining: unit relations";
    let pf = "defining: polynomial forcing relation";
    let ol = "defining: sliding of the orange landing";
    let bt = "defining: bigon and triangle relations";
    let hi = "defining: H=I relations";
    let half = q(1, 2);
    let orange_bridge = vertex(&[O], &[G, G]).after(vertex(&[G, G], &[O]));
    let cap_on = |c: Colour, stem: Colour| gen(GenName::Cap(c)).after(vertex(&[stem], &[c, c]));
    let tri_bgg = || vertex(&[G, G], &[B]);
    vec![
        def("barbell.green", bb, barbell(G), poly("as + at")),
        def("barbell.brown", bb, barbell(B), poly("as*at")),
        def("barbell.orange", bb, barbell(O), poly("(as - at)^2")),
        def("vertex.green_brown_triangle", vd, gen(GenName::TriUGBB), triangle(G, G, G, G, B, B)),
        def("vertex.green_orange_crossing", vd, gen(GenName::XOG), leave_right().after(land_left())),
        def("vertex.orange_orange_crossing", vd, gen(GenName::XOO), id(&[O, O])),
        def(
            "vertex.brown_orange_crossing",
            vd,
            gen(GenName::XOB),
            sc(-half.clone(), h(B, O, G, G, G).after(h(G, G, G, O, B))),
        ),
        def("bivalent.right_brown", bd, gen(GenName::BivBG), tri_bgg().after(id(&[G]).beside(dot_down(G)))),
        def(
            "bivalent.right_orange",
            bd,
            gen(GenName::BivOG),
            vertex(&[G, G], &[O]).after(id(&[G]).beside(dot_down(G))),
        ),
        def("bivalent.left_brown", bd, gen(GenName::BivBG), tri_bgg().after(dot_down(G).beside(id(&[G])))),
        def("bivalent.left_orange", bd, gen(GenName::BivOG), vertex(&[G, G], &[O]).after(dot_down(G).beside(id(&[G])))),
        def("needle.orange_circle", nd, circle(O), empty()),
        def("needle.green_green", nd, cap_on(G, G), zero(&cap_on(G, G))),
        def("needle.green_brown", nd, cap_on(G, B), zero(&cap_on(G, B))),
        def("needle.brown_brown", nd, cap_on(B, B), zero(&cap_on(B, B))),
        def("unit.green", ud, stub_left(G, G), id(&[G])),
        def("unit.brown", ud, stub_left(B, B), id(&[B])),
        def("unit.brown_green", ud, sc(qi(2), stub_left(G, B)), broken(G).minus(bivalent_pair(G, O, G))),
        def("unit.orange_green_brown", ud, bivalent_pair(B, G, O), zero(&bivalent_pair(B, G, O))),
        def("unit.green_orange", ud, dot_up(G).after(vertex(&[O], &[G])), dot_up(O)),
        def(
            "forcing.green_1",
            pf,
            barbell(G).beside(id(&[G])).plus(stub_right(G, O)),
            broken(G).plus(bivalent_pair(G, O, G)),
        ),
        def("orange_landing.xy_idempotent", ol, i(O, G, G, O, G), id(&[O, G])),
        def(
            "orange_landing.ggg",
            ol,
            leave_right().after(gen(GenName::MergeGGG)),
            gen(GenName::MergeGGG).beside(id(&[O])).after(id(&[G]).beside(leave_right())),
        ),
        def(
            "orange_landing.ggb_1",
            ol,
            tri_bgg().after(land_right().beside(id(&[G]))),
            tri_bgg().after(id(&[G]).beside(land_left())).negated(),
        ),
        def(
            "orange_landing.ggb_2",
            ol,
            Expr::chain(vec![gen(GenName::XOB), id(&[O]).beside(tri_bgg()), leave_left().beside(id(&[G]))]),
            tri_bgg().beside(id(&[O])).after(id(&[G]).beside(leave_right())).negated(),
        ),
        def("bigon.brown", bt, tri_bgg().after(vertex(&[B], &[G, G])), sc(qi(2), id(&[B]))),
        def("bigon.brown_orange", bt, triangle(O, G, G, G, B, B), zero(&triangle(O, G, G, G, B, B))),
        def("HI.one_color_green", hi, h(G, G, G, G, G), i(G, G, G, G, G)),
        def("HI.one_color_brown", hi, h(B, B, B, B, B), i(B, B, B, B, B)),
        def("HI.bicolor_associativity_1", hi, h(G, B, B, B, G), i(G, B, B, B, G)),
        def("HI.bicolor_associativity_2", hi, h(G, B, B, B, B), i(G, B, B, B, B)),
        def("HI.top_brown", hi, h(B, B, B, G, G), i(B, B, G, G, G).plus(i(B, B, B, G, G))),
        def(
            "HI.L_brown_leg",
            hi,
            sc(qi(2), h(G, G, B, G, B)),
            Expr::sum(vec![sc(qi(2), i(G, G, G, G, B)), i(G, G, B, G, B), i_orange(G, B, B).negated()]),
        ),
        def(
            "HI.middle_brown",
            hi,
            sc(qi(2), h(G, G, B, G, G)),
            Expr::sum(vec![cup_cap(G), orange_bridge.negated(), i(G, G, B, G, G), i_orange(G, B, G).negated()]),
        ),
    ]
}

/// `p * e` with a polynomial coefficient on the left; `None` if `p = 0`.
fn coef(p: &Poly, e: Expr) -> Option<Expr> {
    if p.is_zero() {
        return None;
    }
    Some(match p.as_constant() {
        Some(c) if c == Q::from_integer(1.into()) => e,
        Some(c) => e.scaled(c),
        None => Expr::ScalePoly(p.clone(), alloc::boxed::Box::new(e)),
    })
}

/// Sum of the nonzero terms, or the zero map shaped like `like`.
fn sum_or_zero(terms: Vec<Option<Expr>>, like: &Expr) -> Expr {
    let v: Vec<Expr> = terms.into_iter().flatten().collect();
    if v.is_empty() {
        zero(like)
    } else {
        Expr::sum(v)
    }
}

/// An I diagram with a polynomial in its bottom region.
fn i_bottom(f: &str, tl: Colour, tr: Colour, mid: Colour, bl: Colour, br: Colour) -> Expr {
    i(tl, tr, mid, bl, br).after(id(&[bl]).beside(poly(f)).beside(id(&[br])))
}

/// An I diagram with a polynomial in its top region.
fn i_top(f: &str, tl: Colour, tr: Colour, mid: Colour, bl: Colour, br: Colour) -> Expr {
    id(&[tl]).beside(poly(f)).beside(id(&[tr])).after(i(tl, tr, mid, bl, br))
}

/// The two halves of an I diagram.
fn i_halves(tl: Colour, tr: Colour, mid: Colour, bl: Colour, br: Colour) -> (Expr, Expr) {
    (vertex(&[mid], &[tl, tr]), vertex(&[bl, br], &[mid]))
}

/// An I diagram with a green top-left leg and a green bottom-right leg,
/// joined by an orange strand that crosses the middle edge.
fn i_diagonal(tr: Colour, mid: Colour, bl: Colour) -> Expr {
    let (up, down) = i_halves(G, tr, mid, bl, G);
    Expr::chain(vec![
        land_left().beside(id(&[tr])),
        id(&[O]).beside(up),
        cross_to_left(mid),
        down.beside(id(&[O])),
        id(&[bl]).beside(leave_right()),
    ])
}

/// An orange strand passing from the right of a strand of colour `c` to
/// its left: `c o -> o c`.
fn cross_to_left(c: Colour) -> Expr {
    gen(match c {
        O => GenName::XOO,
        G => GenName::XGO,
        B => GenName::XBO,
    })
}

/// An I diagram with an orange stub on the right of its top-left (green)
/// leg, reaching into the top region.
fn i_tl_stub(d: Expr, tr: Colour) -> Expr {
    stub_right(G, O).beside(id(&[tr])).after(d)
}

/// An I diagram with an orange stub on the left of its bottom-right (green)
/// leg, reaching into the bottom region.
fn i_br_stub(d: Expr, bl: Colour) -> Expr {
    d.after(id(&[bl]).beside(stub_left(G, O)))
}

/// An I diagram with a green middle edge and two orange strands landing on
/// that edge from the right: one from a dot in the top region (crossing the
/// top-right leg) and one from a dot in the bottom region (crossing the
/// bottom-right leg).
fn i_mid_dots(tl: Colour, tr: Colour, bl: Colour, br: Colour) -> (Expr, Expr) {
    let (up, down) = i_halves(tl, tr, G, bl, br);
    let from_top = Expr::chain(vec![
        id(&[tl]).beside(dot_up(O)).beside(id(&[tr])),
        id(&[tl]).beside(cross_to_left(tr)),
        up.clone().beside(id(&[O])),
        leave_right(),
        down.clone(),
    ]);
    let from_bottom = Expr::chain(vec![
        up,
        land_right(),
        down.beside(id(&[O])),
        id(&[bl]).beside(cross_orange(br)),
        id(&[bl]).beside(dot_down(O)).beside(id(&[br])),
    ]);
    (from_top, from_bottom)
}

/// An I diagram with a brown middle edge and a green top-left leg, with an
/// orange strand from a dot in the bottom region that crosses the
/// bottom-right leg and the middle edge and lands on the top-left leg.
fn i_bottom_dot_to_tl(tr: Colour, bl: Colour, br: Colour) -> Expr {
    let (up, down) = i_halves(G, tr, B, bl, br);
    Expr::chain(vec![
        land_left().beside(id(&[tr])),
        id(&[O]).beside(up),
        cross_to_left(B),
        down.beside(id(&[O])),
        id(&[bl]).beside(cross_orange(br)),
        id(&[bl]).beside(dot_down(O)).beside(id(&[br])),
    ])
}

fn derived() -> Vec<Relation> {
    let pf = "derived: polynomial forcing";
    let pd = "derived: brown barbell in terms of green and orange barbells";
    let os = "derived: orange strand sliding over orange strands and dots";
    let og = "derived: orange strand sliding over green and brown strands";
    let od = "derived: orange strand sliding over green and brown dots";
    let ot = "derived: orange strand sliding over trivalent vertices";
    let an = "derived: additional needle relations";
    let au = "derived: additional unit relations";
    let ah = "derived: additional H=I relations";
    let sum_gb = "as + at";
    let t3 = vertex(&[O], &[G]).after(dot_down(O)).after(dot_up(G));
    let t4 = dot_down(G).after(dot_up(O).after(vertex(&[G], &[O])));
    let pair_bgb = bivalent_pair(B, G, B);
    let biv_up = |c: Colour, d: Colour| vertex(&[c], &[d]);
    let mut v = vec![
        der(
            "forcing.green_2",
            pf,
            sc(qi(2), barbell(B).beside(id(&[G])).plus(id(&[G]).beside(barbell(B)))),
            Expr::sum(vec![
                barbell(G).beside(broken(G)),
                barbell(G).beside(bivalent_pair(G, O, G)),
                t3.clone().negated(),
                t4.clone().negated(),
            ]),
        ),
        der(
            "forcing.brown_1",
            pf,
            barbell(G).beside(id(&[B])).plus(id(&[B]).beside(barbell(G))),
            sc(qi(2), pair_bgb.clone()),
        ),
        der(
            "forcing.brown_2",
            pf,
            id(&[B]).beside(dot_up(O)).after(gen(GenName::XOB)).plus(dot_up(O).beside(id(&[B]))),
            sc(qi(-2), Expr::chain(vec![biv_up(G, B), land_left(), id(&[O]).beside(biv_up(B, G))])),
        ),
        der(
            "forcing.brown_3",
            pf,
            Expr::sum(vec![
                barbell(B).beside(id(&[B])),
                pair_bgb.clone().beside(barbell(G)),
                Expr::chain(vec![biv_up(G, B), stub_right(G, O), biv_up(B, G)]),
            ]),
            sc(qi(4), broken(B)).plus(id(&[B]).beside(barbell(B))),
        ),
        der("forcing.barbell_dependence", pd, sc(qi(4), barbell(B)), barbell(G).after(barbell(G)).minus(barbell(O))),
        der("orange.x2_idempotent", os, id(&[O, O]), cup_cap(O)),
        der(
            "orange.jump_dot_crossing",
            os,
            dot_up(O).beside(id(&[O])).after(gen(GenName::XOO)),
            dot_up(O).beside(id(&[O])),
        ),
        der("orange.jump_dot_sides", os, dot_up(O).beside(id(&[O])), id(&[O]).beside(dot_up(O))),
        der("orange.jump_dot_cap", os, dot_up(O).beside(id(&[O])), dot_down(O).after(gen(GenName::Cap(O)))),
        der("orange.dots_merger_left", os, poly("(as - at)^2").beside(id(&[O])), broken(O)),
        der("orange.dots_merger_right", os, broken(O), id(&[O]).beside(poly("(as - at)^2"))),
        der(
            "orange.slide_horizontal_green_1",
            og,
            id(&[O]).beside(land_right()).after(leave_left().beside(id(&[O]))),
            gen(GenName::XGO),
        ),
        der("orange.slide_horizontal_green_2", og, leave_left().after(land_right()), gen(GenName::XGO)),
        der(
            "orange.horizontal_green_cups",
            og,
            id(&[O]).beside(leave_left()).after(leave_left()),
            gen(GenName::Cup(O)).beside(id(&[G])),
        ),
        der("orange.uncross_green_1", og, id(&[O, G]), gen(GenName::XGO).after(gen(GenName::XOG))),
        der("orange.uncross_green_2", og, id(&[G, O]), gen(GenName::XOG).after(gen(GenName::XGO))),
        der("orange.uncross_brown_1", og, id(&[O, B]), gen(GenName::XBO).after(gen(GenName::XOB))),
        der("orange.uncross_brown_2", og, id(&[B, O]), gen(GenName::XOB).after(gen(GenName::XBO))),
        der(
            "orange.slide_over_brown_crossing",
            og,
            id(&[O]).beside(gen(GenName::XBO)).after(gen(GenName::XBO).beside(id(&[O]))),
            gen(GenName::Cup(O)).beside(id(&[B])).after(id(&[B]).beside(gen(GenName::Cap(O)))),
        ),
        der("orange.green_dot", od, id(&[O]).beside(dot_up(G)), dot_up(G).beside(id(&[O])).after(gen(GenName::XOG))),
        der("orange.brown_dot", od, id(&[O]).beside(dot_up(B)), dot_up(B).beside(id(&[O])).after(gen(GenName::XOB))),
    ];
    for (name, legs, top) in [
        ("orange.slide_trivalent_landing_right", [G, O], G),
        ("orange.slide_trivalent_landing_left", [O, G], G),
        ("orange.slide_trivalent_orange_top", [G, G], O),
        ("orange.slide_trivalent_ggg", [G, G], G),
        ("orange.slide_trivalent_ggb", [G, G], B),
        ("orange.slide_trivalent_gbb", [B, B], G),
        ("orange.slide_trivalent_bbb", [B, B], B),
    ] {
        let (above, below) = orange_slide(&vertex(&legs, &[top])).expect("well-shaped vertex");
        v.push(der(name, ot, above, below));
    }
    v.push(der("orange.bbb_triangle", ot, triangle(B, G, B, G, B, B), sc(qi(2), gen(GenName::MergeBBB))));
    let needle_go = |stem: Colour| {
        Expr::chain(vec![gen(GenName::Cap(G)), land_left().beside(id(&[G])), id(&[O]).beside(vertex(&[stem], &[G, G]))])
    };
    let brown_needle = gen(GenName::Cap(B)).after(vertex(&[G], &[B, B]));
    let gbb_orange = vertex(&[G, B], &[B]).after(vertex(&[O], &[G]).beside(id(&[B])));
    v.extend([
        der("needle.brown_circle_green_stem", an, brown_needle.clone(), zero(&brown_needle)),
        der("needle.green_circle_orange_green", an, needle_go(G), zero(&needle_go(G))),
        der("needle.green_circle_orange_brown", an, needle_go(B), zero(&needle_go(B))),
        der("unit.gbb_1", au, stub_left(B, G), sc(qi(2), id(&[B]))),
        der("unit.gbb_orange", au, gbb_orange.clone(), zero(&gbb_orange)),
        der("unit.gbb_2", au, vertex(&[B, G], &[B]).after(dot_down(B).beside(id(&[G]))), gen(GenName::BivBG)),
        der("unit.ggb", au, dot_up(G).after(gen(GenName::BivGB)), sc(qi(2), dot_up(B))),
        der("HI.side_brown", ah, sc(qi(2), h(G, B, G, G, B)), i(G, B, B, G, B).plus(i_orange(B, B, B))),
        der("HI.T_brown", ah, sc(qi(2), h(G, B, B, G, B)), i(G, B, B, G, B).minus(i_orange(B, B, B))),
        der(
            "HI.brown_arms_and_legs",
            ah,
            sc(qi(2), h(B, B, G, B, B)),
            i_bottom(sum_gb, B, B, B, B, B).plus(i_top(sum_gb, B, B, B, B, B)),
        ),
        der("HI.brown_leg", ah, sc(qi(2), h(G, G, G, G, B)), i(G, G, B, G, B).plus(i_orange(G, B, B))),
        der("HI.brown_bottom_feet", ah, sc(qi(4), h(G, G, G, B, B)), {
            let (from_top, from_bottom) = i_mid_dots(G, G, B, B);
            Expr::sum(vec![i_bottom(sum_gb, G, G, G, B, B), i_top(sum_gb, G, G, G, B, B), from_top, from_bottom])
        }),
        der(
            "HI.three_brown_edges",
            ah,
            sc(qi(4), h(G, B, G, B, B)),
            Expr::sum(vec![
                i_bottom(sum_gb, G, B, B, B, B),
                i_top(sum_gb, G, B, B, B, B),
                i_tl_stub(i(G, B, B, B, B), B),
                i_bottom_dot_to_tl(B, B, B),
            ]),
        ),
        der("HI.opposite_brown_edges", ah, sc(qi(8), h(G, B, G, B, G)), {
            let plain = i(G, B, B, B, G);
            let diag = i_diagonal(B, B, B);
            Expr::sum(vec![
                i_bottom(sum_gb, G, B, B, B, G),
                diag.clone().after(id(&[B]).beside(poly(sum_gb)).beside(id(&[G]))),
                i_top(sum_gb, G, B, B, B, G),
                id(&[G]).beside(poly(sum_gb)).beside(id(&[B])).after(diag.clone()),
                i_br_stub(plain.clone(), B),
                i_br_stub(diag.clone(), B),
                i_tl_stub(plain, B),
                i_tl_stub(diag, B),
            ])
        }),
    ]);
    v
}

/// The families of forcing, needle and circle relations, instantiated at
/// each polynomial of `fs` (which must be homogeneous and `tau`-invariant).
fn families(fs: &[Poly]) -> Vec<Relation> {
    use crate::polyring::Gen;
    let mut v = Vec::new();
    let d = Poly::alpha_diff();
    let gsum = Poly::alpha_sum();
    let gprod = Poly::alpha_prod();
    let div_d = |p: &Poly| p.div_exact(&d).expect("anti-invariant polynomials are divisible by as - at");
    let dst = |p: &Poly| p.demazure(Gen::T).demazure(Gen::S);
    let half = q(1, 2);
    for f in fs {
        assert!(f.is_homogeneous() && f.is_tau_invariant(), "family parameter must be homogeneous and tau-invariant");
        let ftext = f.to_string();
        let origin = |what: &str| format!("derived: general {} (f = {})", what, ftext);
        let fd = f * &d;
        let fp = || Expr::poly(f.clone());
        let inside = |c: Colour| id(&[c]).beside(fp()).beside(id(&[c]));
        // coefficients of the green forcing relation for a polynomial g
        let green_terms = |g: &Poly| {
            let (sym_s, alt_s) = g.act(Gen::S).sym_alt();
            let (sym_d, alt_d) = g.demazure(Gen::S).sym_alt();
            vec![
                coef(&sym_s, id(&[G])),
                coef(&div_d(&alt_s), stub_left(G, O)),
                coef(&sym_d.scale(&half), broken(G).plus(bivalent_pair(G, O, G))),
                coef(
                    &div_d(&alt_d).scale(&half),
                    vertex(&[O], &[G])
                        .after(dot_down(O))
                        .after(dot_up(G))
                        .plus(dot_down(G).after(dot_up(O).after(vertex(&[G], &[O])))),
                ),
            ]
        };
        let lhs = id(&[G]).beside(fp());
        v.push(der(
            "general_forcing.green",
            &origin("polynomial forcing, green strand"),
            lhs.clone(),
            sum_or_zero(green_terms(f), &lhs),
        ));
        let lhs = stub_right(G, O).beside(fp());
        v.push(der(
            "general_forcing.green_orange_dot",
            &origin("polynomial forcing, green strand with an orange dot"),
            lhs.clone(),
            sum_or_zero(green_terms(&fd), &lhs),
        ));
        let pair_bgb = bivalent_pair(B, G, B);
        let brown_orange = Expr::chain(vec![vertex(&[G], &[B]), stub_left(G, O), vertex(&[B], &[G])]);
        let tds = f.demazure(Gen::S).act(Gen::T);
        let (sym_t, alt_t) = tds.sym_alt();
        let lhs = id(&[B]).beside(fp());
        v.push(der(
            "general_forcing.brown",
            &origin("polynomial forcing, brown strand"),
            lhs.clone(),
            sum_or_zero(
                vec![
                    coef(&f.act(Gen::T).act(Gen::S), id(&[B])),
                    coef(&sym_t, pair_bgb.clone()),
                    coef(&-div_d(&alt_t), brown_orange),
                    coef(&dst(f), broken(B)),
                ],
                &lhs,
            ),
        ));
        let crossing_dot = id(&[B]).beside(dot_up(O)).after(gen(GenName::XOB));
        let tdsd = fd.demazure(Gen::S).act(Gen::T);
        let (sym_t, alt_t) = tdsd.sym_alt();
        let lhs = crossing_dot.beside(fp());
        v.push(der(
            "general_forcing.brown_orange_crossing",
            &origin("polynomial forcing, brown strand crossed by an orange strand"),
            lhs.clone(),
            sum_or_zero(
                vec![
                    coef(&-f.act(Gen::T).act(Gen::S), dot_up(O).beside(id(&[B]))),
                    coef(
                        &-sym_t.clone(),
                        Expr::chain(vec![vertex(&[G], &[B]), land_left(), id(&[O]).beside(vertex(&[B], &[G]))]),
                    ),
                    coef(&div_d(&alt_t), dot_up(O).beside(pair_bgb.clone())),
                    coef(&div_d(&dst(&fd)), dot_up(O).beside(broken(B))),
                ],
                &lhs,
            ),
        ));
        v.push(der(
            "orange.polynomial_slide",
            &origin("orange strand sliding over a polynomial"),
            id(&[O]).beside(fp()),
            fp().beside(id(&[O])),
        ));

        // needles: a circle around `f` with a stem
        let orange_dot_stem = dot_up(O).after(vertex(&[G], &[O]));
        let landed_dot = dot_up(G).after(land_left());
        let dots = dot_up(O).beside(dot_up(G));
        let needle_rhs_green = |g: &Poly, a: Expr, b: Expr, like: &Expr| {
            let (sym, alt) = g.demazure(Gen::S).sym_alt();
            sum_or_zero(vec![coef(&sym, a), coef(&div_d(&alt), b)], like)
        };
        let plain = |c: Colour, stem: Colour| gen(GenName::Cap(c)).after(inside(c)).after(vertex(&[stem], &[c, c]));
        let with_dot = |stem: Colour| {
            Expr::chain(vec![
                gen(GenName::Cap(G)),
                stub_right(G, O).beside(fp()).beside(id(&[G])),
                vertex(&[stem], &[G, G]),
            ])
        };
        let landed = Expr::chain(vec![
            gen(GenName::Cap(G)),
            inside(G),
            land_left().beside(id(&[G])),
            id(&[O]).beside(vertex(&[G], &[G, G])),
        ]);
        let crossing_in = |c: Colour, stem: Colour| {
            Expr::chain(vec![
                gen(GenName::Cap(c)),
                id(&[c]).beside(dot_up(O)).beside(fp()).beside(id(&[c])),
                cross_orange(c).beside(id(&[c])),
                id(&[O]).beside(vertex(&[stem], &[c, c])),
            ])
        };
        let nr = origin("needle relation");
        let lhs = plain(G, G);
        v.push(der(
            "general_needle.green",
            &nr,
            lhs.clone(),
            needle_rhs_green(f, dot_up(G), orange_dot_stem.clone(), &lhs),
        ));
        let lhs = with_dot(G);
        v.push(der(
            "general_needle.green_orange_dot",
            &nr,
            lhs.clone(),
            needle_rhs_green(&fd, dot_up(G), orange_dot_stem.clone(), &lhs),
        ));
        v.push(der(
            "general_needle.green_orange_landing",
            &nr,
            landed.clone(),
            needle_rhs_green(f, landed_dot.clone(), dots.clone(), &landed),
        ));
        let lhs = crossing_in(G, G);
        v.push(der(
            "general_needle.green_orange_crossing",
            &nr,
            lhs.clone(),
            needle_rhs_green(&fd, landed_dot.clone(), dots.clone(), &lhs),
        ));
        let lhs = plain(G, B);
        v.push(der("general_needle.green_brown_stem", &nr, lhs.clone(), zero(&lhs)));
        let lhs = with_dot(B);
        v.push(der("general_needle.green_orange_dot_brown_stem", &nr, lhs.clone(), zero(&lhs)));
        let lhs = plain(B, G);
        let c = dst(f).scale(&half);
        v.push(der(
            "general_needle.brown_green_stem",
            &nr,
            lhs.clone(),
            sum_or_zero(vec![coef(&(&c * &gsum), dot_up(G)), coef(&-c.clone(), orange_dot_stem.clone())], &lhs),
        ));
        let lhs = crossing_in(B, G);
        let c = dst(&fd);
        v.push(der(
            "general_needle.brown_orange_crossing_green_stem",
            &nr,
            lhs.clone(),
            sum_or_zero(
                vec![
                    coef(&-(&c * &d).scale(&half), landed_dot.clone()),
                    coef(&div_d(&(&gsum * &c)).scale(&half), dots.clone()),
                ],
                &lhs,
            ),
        ));
        let lhs = plain(B, B);
        v.push(der("general_needle.brown", &nr, lhs.clone(), sum_or_zero(vec![coef(&dst(f), dot_up(B))], &lhs)));
        let lhs = crossing_in(B, B);
        v.push(der(
            "general_needle.brown_orange_crossing",
            &nr,
            lhs.clone(),
            sum_or_zero(vec![coef(&div_d(&dst(&fd)), dot_up(O).beside(dot_up(B)))], &lhs),
        ));

        // circles around `f`
        let cr = origin("circle relation");
        let circle_with = |c: Colour, body: Expr| gen(GenName::Cap(c)).after(body).after(gen(GenName::Cup(c)));
        let closed = |p: Poly| if p.is_zero() { None } else { Some(Expr::poly(p)) };
        // A green circle around `g` evaluates to `d_s(g) as + d_t(g) at`;
        // split into its invariant and anti-invariant parts.
        let green_circle = |g: &Poly| {
            let (sym, alt) = g.demazure(Gen::S).sym_alt();
            &(&sym * &gsum) + &(&alt * &d)
        };
        // ... and with an orange strand leaving it, `d_s(g) as - d_t(g) at`.
        let green_circle_orange = |g: &Poly| {
            let (sym, alt) = g.demazure(Gen::S).sym_alt();
            div_d(&(&(&sym * &d) + &(&alt * &gsum)))
        };
        let lhs = circle_with(G, inside(G));
        v.push(der("general_circle.green", &cr, lhs.clone(), sum_or_zero(vec![closed(green_circle(f))], &lhs)));
        let lhs = gen(GenName::Cap(G)).after(inside(G)).after(vertex(&[O], &[G, G]));
        v.push(der(
            "general_circle.green_orange_stem",
            &cr,
            lhs.clone(),
            sum_or_zero(vec![coef(&green_circle_orange(f), dot_up(O))], &lhs),
        ));
        let lhs = circle_with(G, stub_right(G, O).beside(fp()).beside(id(&[G])));
        v.push(der(
            "general_circle.green_orange_dot",
            &cr,
            lhs.clone(),
            sum_or_zero(vec![closed(green_circle(&fd))], &lhs),
        ));
        let lhs = Expr::chain(vec![
            gen(GenName::Cap(G)),
            id(&[G]).beside(dot_up(O)).beside(fp()).beside(id(&[G])),
            cross_orange(G).beside(id(&[G])),
            id(&[O]).beside(gen(GenName::Cup(G))),
        ]);
        v.push(der(
            "general_circle.green_orange_crossing",
            &cr,
            lhs.clone(),
            sum_or_zero(vec![coef(&green_circle_orange(&fd), dot_up(O))], &lhs),
        ));
        let lhs = circle_with(B, inside(B));
        v.push(der("general_circle.brown", &cr, lhs.clone(), sum_or_zero(vec![closed(&dst(f) * &gprod)], &lhs)));
        let lhs = Expr::chain(vec![
            gen(GenName::Cap(B)),
            id(&[B]).beside(dot_up(O)).beside(fp()).beside(id(&[B])),
            cross_orange(B).beside(id(&[B])),
            id(&[O]).beside(gen(GenName::Cup(B))),
        ]);
        v.push(der(
            "general_circle.brown_orange_crossing",
            &cr,
            lhs.clone(),
            sum_or_zero(vec![coef(&(&div_d(&dst(&fd)) * &gprod), dot_up(O))], &lhs),
        ));
    }
    v
}
