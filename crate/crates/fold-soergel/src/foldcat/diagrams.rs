//! Building blocks for writing diagrams as expressions.
//!
//! Generators come in a fixed orientation; [`vertex`] bends their legs with
//! cups and caps so that any vertex can be drawn with any split of its edges
//! between the bottom and the top boundary.  The boundary of a vertex is read
//! clockwise: bottom edges left to right, then top edges right to left.

use alloc::vec::Vec;

use super::expr::{Colour, Expr, FWord, GenName};
use crate::polyring::Poly;

use Colour::{B, G, O};

/// Identity on a word.
pub fn id(w: &[Colour]) -> Expr {
    Expr::id(w)
}

/// A generator as an expression.
pub fn gen(g: GenName) -> Expr {
    Expr::Gen(g)
}

/// The empty diagram.
pub fn empty() -> Expr {
    Expr::Id(FWord::empty())
}

/// A polynomial box, from its text form.
pub fn poly(text: &str) -> Expr {
    Expr::poly(Poly::parse(text).expect("well-formed polynomial literal"))
}

/// Bends the bottom-left edge of `m: cA -> B` up: `A -> cB`.
fn bend_bottom_left_up(m: Expr, c: Colour, a: &[Colour]) -> Expr {
    id(&[c]).beside(m).after(gen(GenName::Cup(c)).beside(id(a)))
}

/// Bends the top-right edge of `m: A -> Bc` down: `Ac -> B`.
fn bend_top_right_down(m: Expr, c: Colour, b: &[Colour]) -> Expr {
    id(b).beside(gen(GenName::Cap(c))).after(m.beside(id(&[c])))
}

/// Bends the bottom-right edge of `m: Ac -> B` up: `A -> Bc`.
fn bend_bottom_right_up(m: Expr, c: Colour, a: &[Colour]) -> Expr {
    m.beside(id(&[c])).after(id(a).beside(gen(GenName::Cup(c))))
}

/// The upward generator with the given multiset of edge colours.
fn base_vertex(edges: &[Colour]) -> Option<GenName> {
    let mut sorted: Vec<Colour> = edges.to_vec();
    sorted.sort();
    use GenName::*;
    Some(match sorted.as_slice() {
        [c] => DotU(*c),
        [O, G] => BivOG,
        [G, B] => BivGB,
        [G, G, G] => MergeGGG,
        [B, B, B] => MergeBBB,
        [G, B, B] => TriUGBB,
        [G, G, B] => TriUBGG,
        [O, G, G] => LandUOGG,
        _ => return None,
    })
}

/// The clockwise boundary sequence of a map `src -> tgt`.
fn boundary(src: &[Colour], tgt: &[Colour]) -> Vec<Colour> {
    src.iter().chain(tgt.iter().rev()).copied().collect()
}

/// A vertex (dot, bivalent or trivalent) drawn with the given bottom and top
/// edges.  Panics if no generator has this cyclic boundary.
pub fn vertex(bottom: &[Colour], top: &[Colour]) -> Expr {
    let want = boundary(bottom, top);
    let g = base_vertex(&want).expect("a generator with these edge colours");
    let (src, tgt, _) = g.signature();
    let have = boundary(&src.0, &tgt.0);
    let n = have.len();
    // number of "first to last" rotations turning `have` into `want`
    let k = (0..n)
        .find(|&k| (0..n).all(|i| want[i] == have[(i + k) % n]))
        .expect("edge colours in a compatible cyclic order");
    let mut e = gen(g);
    let mut bot = src.0.clone();
    let mut topw = tgt.0.clone();
    for _ in 0..k {
        if bot.is_empty() {
            // rotate the other way round: move the last boundary edge first
            // (only reached for dots, whose boundary has one edge)
            break;
        }
        let c = bot.remove(0);
        e = bend_bottom_left_up(e, c, &bot);
        topw.insert(0, c);
    }
    while bot.len() < bottom.len() {
        let c = topw.pop().expect("edge to bend down");
        e = bend_top_right_down(e, c, &topw);
        bot.push(c);
    }
    while bot.len() > bottom.len() {
        let c = bot.pop().expect("edge to bend up");
        e = bend_bottom_right_up(e, c, &bot);
        topw.push(c);
    }
    debug_assert_eq!(bot, bottom);
    debug_assert_eq!(topw, top);
    e
}

/// The H-shaped diagram: left strand `bl -> tl`, right strand `br -> tr`,
/// joined by a horizontal edge of colour `mid`.
pub fn h(tl: Colour, tr: Colour, mid: Colour, bl: Colour, br: Colour) -> Expr {
    let left = vertex(&[bl], &[tl, mid]);
    let right = vertex(&[mid, br], &[tr]);
    id(&[tl]).beside(right).after(left.beside(id(&[br])))
}

/// The I-shaped diagram: `bl br` merge into a vertical edge of colour `mid`,
/// which splits into `tl tr`.
pub fn i(tl: Colour, tr: Colour, mid: Colour, bl: Colour, br: Colour) -> Expr {
    vertex(&[mid], &[tl, tr]).after(vertex(&[bl, br], &[mid]))
}

/// `m : g A -> g B` with an orange strand leaving the bottom-left green edge
/// on its left and landing on the top-left green edge.
pub fn orange_left(m: Expr, a_rest: &[Colour], b_rest: &[Colour]) -> Expr {
    let leave = vertex(&[G], &[O, G]).beside(id(a_rest));
    let land = vertex(&[O, G], &[G]).beside(id(b_rest));
    land.after(id(&[O]).beside(m)).after(leave)
}

/// An I diagram whose two left legs are green, joined by an orange strand.
pub fn i_orange(tr: Colour, mid: Colour, br: Colour) -> Expr {
    orange_left(i(G, tr, mid, G, br), &[br], &[tr])
}

/// A triangle: a top vertex with edge `top`, sides `left`, `right`, a bottom
/// side `base`, and bottom legs `bl`, `br`.
pub fn triangle(top: Colour, left: Colour, base: Colour, right: Colour, bl: Colour, br: Colour) -> Expr {
    let feet = vertex(&[bl], &[left, base]).beside(vertex(&[br], &[base, right]));
    let close = id(&[left]).beside(gen(GenName::Cap(base))).beside(id(&[right]));
    vertex(&[left, right], &[top]).after(close).after(feet)
}

/// Dot ending a strand from below, and the dot starting one.
pub fn dot_up(c: Colour) -> Expr {
    gen(GenName::DotU(c))
}

pub fn dot_down(c: Colour) -> Expr {
    gen(GenName::DotD(c))
}

/// A barbell of colour `c` (an endomorphism of the empty word).
pub fn barbell(c: Colour) -> Expr {
    dot_up(c).after(dot_down(c))
}

/// A strand of colour `c` broken into two dots.
pub fn broken(c: Colour) -> Expr {
    dot_down(c).after(dot_up(c))
}

/// A strand of colour `strand` with a stub of colour `stub` on its left,
/// ending in a dot.
pub fn stub_left(strand: Colour, stub: Colour) -> Expr {
    vertex(&[stub, strand], &[strand]).after(dot_down(stub).beside(id(&[strand])))
}

/// A strand of colour `strand` with a stub of colour `stub` on its right.
pub fn stub_right(strand: Colour, stub: Colour) -> Expr {
    vertex(&[strand, stub], &[strand]).after(id(&[strand]).beside(dot_down(stub)))
}

/// A strand that changes colour from `bottom` to `mid` and back.
pub fn bivalent_pair(bottom: Colour, mid: Colour, top: Colour) -> Expr {
    vertex(&[mid], &[top]).after(vertex(&[bottom], &[mid]))
}

/// A closed circle of colour `c`.
pub fn circle(c: Colour) -> Expr {
    gen(GenName::Cap(c)).after(gen(GenName::Cup(c)))
}

/// Cup over cap: `c c -> c c`.
pub fn cup_cap(c: Colour) -> Expr {
    gen(GenName::Cup(c)).after(gen(GenName::Cap(c)))
}

/// A polynomial placed in the leftmost region of `e`.
pub fn left_poly(f: &str, e: Expr) -> Expr {
    poly(f).beside(e)
}

/// A polynomial placed in the rightmost region of `e`.
pub fn right_poly(e: Expr, f: &str) -> Expr {
    e.beside(poly(f))
}

/// The crossing of an orange strand (bottom-left) over a strand of colour `c`.
pub fn cross_orange(c: Colour) -> Expr {
    gen(match c {
        O => GenName::XOO,
        G => GenName::XOG,
        B => GenName::XOB,
    })
}

/// An orange strand crossing a whole word from left to right: `o w -> w o`.
pub fn cross_orange_word(w: &[Colour]) -> Expr {
    let mut e = id(&[O]);
    for (k, c) in w.iter().enumerate() {
        let step = id(&w[..k]).beside(cross_orange(*c));
        e = step.after(e.beside(id(&[*c])));
    }
    e
}

/// The two ways of passing an orange strand from the bottom-left to the
/// top-right of `e`: above it and below it.  They are equal for every
/// diagram `e`.
pub fn orange_slide(e: &Expr) -> crate::error::Result<(Expr, Expr)> {
    let (src, tgt, _) = e.shape()?;
    let above = cross_orange_word(&tgt.0).after(id(&[O]).beside(e.clone()));
    let below = e.clone().beside(id(&[O])).after(cross_orange_word(&src.0));
    Ok((above, below))
}

/// `e` surrounded by a closed orange circle crossing all its boundary strands.
pub fn encircle(e: &Expr) -> crate::error::Result<Expr> {
    let (src, tgt, _) = e.shape()?;
    let open = id(&[O]).beside(cross_orange_word(&src.0)).after(gen(GenName::Cup(O)).beside(id(&src.0)));
    let middle = id(&[O]).beside(e.clone()).beside(id(&[O]));
    let close = id(&tgt.0).beside(gen(GenName::Cap(O))).after(cross_orange_word(&tgt.0).beside(id(&[O])));
    Ok(Expr::chain(alloc::vec![close, middle, open]))
}
