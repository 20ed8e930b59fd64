//! Graded Hom spaces between equivariant objects, by exact linear algebra.
//!
//! A degree-`d` map `A -> B` is a matrix of polynomials whose entry `(r, c)`
//! (global basis indices of the underlying Bott-Samelson sums) is homogeneous
//! of degree `d + deg(a_c) - deg(b_r)`.  Writing every entry as an unknown
//! combination of monomials turns the three defining conditions into a linear
//! system over `Q`:
//!
//! * `T (. a_s) = (. a_s) T` and the same for `a_t` (right `R`-linearity);
//! * `T f_A = f_B tau(T)` (compatibility with the structure maps).
//!
//! The solution space is returned in reduced row echelon form over the fixed
//! unknown order `(column, row, monomial)`, so bases are deterministic.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::bimod::{right_mul_matrix, Obj, SumMor, SumObj, Vector};
use crate::equiv::{EqMor, EqObj, Indec};
use crate::error::{Error, Result};
use crate::foldcat::diagrams::{dot_up, stub_right};
use crate::foldcat::{Colour, Evaluator, Expr, FWord};
use crate::linalg::{Echelon, SparseVec};
use crate::polyring::{Gen, LaurentInt, Mono, Poly, Q};

/// Default truncation degree for graded dimensions.
pub const DEFAULT_DEGREE_BOUND: i32 = 12;

/// The degree-`d` part of `Hom(A, B)` with a basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: EqObj,
    pub target: EqObj,
    pub degree: i32,
    pub basis: Vec<EqMor>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Global indexing of the basis of a direct sum of Bott-Samelson objects.
struct Flat {
    objs: Vec<Obj>,
    offsets: Vec<usize>,
    /// degree of each global basis element
    degs: Vec<i32>,
}

impl Flat {
    fn new(s: &SumObj) -> Flat {
        let mut offsets = Vec::new();
        let mut degs = Vec::new();
        for o in &s.0 {
            offsets.push(degs.len());
            degs.extend((0..o.rank()).map(|e| o.basis_degree(e)));
        }
        Flat { objs: s.0.clone(), offsets, degs }
    }

    fn len(&self) -> usize {
        self.degs.len()
    }

    /// `(component, local index)` of a global index.
    fn locate(&self, g: usize) -> (usize, usize) {
        let comp = self.offsets.partition_point(|o| *o <= g) - 1;
        (comp, g - self.offsets[comp])
    }
}

/// Rows of a global matrix: `rows[i]` lists `(j, entry)` with nonzero entry `(i, j)`.
type Rows = Vec<Vec<(usize, Poly)>>;

fn global_rows(m: &SumMor, src: &Flat, tgt: &Flat) -> Rows {
    let mut rows: Rows = alloc::vec![Vec::new(); tgt.len()];
    for (i, brow) in m.blocks.iter().enumerate() {
        for (j, b) in brow.iter().enumerate() {
            for (c, col) in b.cols.iter().enumerate() {
                for (r, p) in col {
                    rows[tgt.offsets[i] + r].push((src.offsets[j] + c, p.clone()));
                }
            }
        }
    }
    rows
}

/// Columns of a global matrix: `cols[j]` lists `(i, entry)`.
fn transpose(rows: &Rows, ncols: usize) -> Rows {
    let mut cols: Rows = alloc::vec![Vec::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for (j, p) in r {
            cols[*j].push((i, p.clone()));
        }
    }
    cols
}

fn right_mul_rows(flat: &Flat, g: Gen) -> Rows {
    let a = Poly::alpha(g);
    let mut rows: Rows = alloc::vec![Vec::new(); flat.len()];
    for (k, o) in flat.objs.iter().enumerate() {
        for (c, col) in right_mul_matrix(o, &a).iter().enumerate() {
            for (r, p) in col {
                rows[flat.offsets[k] + r].push((flat.offsets[k] + c, p.clone()));
            }
        }
    }
    rows
}

/// One unknown: the coefficient of monomial `mono` in entry `(row, col)`.
#[derive(Clone, Copy, Debug)]
struct Unknown {
    row: usize,
    col: usize,
    mono: Mono,
}

/// The linear system for `Hom^d(A, B)`.
struct System {
    src: Flat,
    tgt: Flat,
    unknowns: Vec<Unknown>,
    constraints: Vec<SparseVec>,
}

impl System {
    fn new(a: &EqObj, b: &EqObj, d: i32) -> System {
        let src = Flat::new(&a.underlying);
        let tgt = Flat::new(&b.underlying);
        let mut unknowns = Vec::new();
        for c in 0..src.len() {
            for r in 0..tgt.len() {
                for mono in Mono::of_degree(d + src.degs[c] - tgt.degs[r]) {
                    unknowns.push(Unknown { row: r, col: c, mono });
                }
            }
        }
        let mut sys = System { src, tgt, unknowns, constraints: Vec::new() };
        if !sys.unknowns.is_empty() {
            sys.constraints = sys.build_constraints(a, b);
        }
        sys
    }

    fn build_constraints(&self, a: &EqObj, b: &EqObj) -> Vec<SparseVec> {
        // a constraint coordinate: (condition, row, col, monomial)
        let mut coords: BTreeMap<(u8, usize, usize, Mono), SparseVec> = BTreeMap::new();
        let mut add = |key: (u8, usize, usize), p: &Poly, m: Mono, k: usize, sign: &Q| {
            for (pm, c) in p.mul_mono(m).terms() {
                let e = coords.entry((key.0, key.1, key.2, *pm)).or_default();
                let x = e.entry(k).or_insert_with(Q::zero);
                *x += c * sign;
                if x.is_zero() {
                    e.remove(&k);
                }
            }
        };
        let one = Q::from_integer(1.into());
        let neg = -one.clone();
        let fa = global_rows(&a.ftau, &self.src, &self.src);
        let fb_cols = transpose(&global_rows(&b.ftau, &self.tgt, &self.tgt), self.tgt.len());
        let mut conditions: Vec<(u8, Rows, Rows)> = Vec::new();
        for (tag, g) in [(0u8, Gen::S), (1u8, Gen::T)] {
            let ra = right_mul_rows(&self.src, g);
            let rb_cols = transpose(&right_mul_rows(&self.tgt, g), self.tgt.len());
            conditions.push((tag, ra, rb_cols));
        }
        for (k, u) in self.unknowns.iter().enumerate() {
            // T R_A - R_B T
            for (tag, ra, rb_cols) in &conditions {
                for (j, p) in &ra[u.col] {
                    add((*tag, u.row, *j), p, u.mono, k, &one);
                }
                for (i, p) in &rb_cols[u.row] {
                    add((*tag, *i, u.col), p, u.mono, k, &neg);
                }
            }
            // T f_A - f_B tau(T)
            for (j, p) in &fa[u.col] {
                add((2, u.row, *j), p, u.mono, k, &one);
            }
            let swapped = Mono::new(u.mono.t, u.mono.s);
            for (i, p) in &fb_cols[u.row] {
                add((2, *i, u.col), p, swapped, k, &neg);
            }
        }
        coords.into_values().filter(|v| !v.is_empty()).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for c in &self.constraints {
            e.insert(c.clone());
        }
        e
    }

    fn dim(&self) -> usize {
        if self.unknowns.is_empty() {
            return 0;
        }
        self.unknowns.len() - self.echelon().rank()
    }

    /// Reduced echelon basis of the solution space.
    fn solutions(&self) -> Vec<SparseVec> {
        let mut basis = Echelon::new();
        for v in self.echelon().nullspace(self.unknowns.len()) {
            basis.insert(v);
        }
        basis.rows()
    }

    fn to_map(&self, a: &EqObj, b: &EqObj, d: i32, x: &SparseVec) -> EqMor {
        let mut m = SumMor::zero(a.underlying.clone(), b.underlying.clone(), d);
        for (k, c) in x {
            let u = self.unknowns[*k];
            let (j, lc) = self.src.locate(u.col);
            let (i, lr) = self.tgt.locate(u.row);
            let col: &mut Vector = &mut m.blocks[i][j].cols[lc];
            let e = col.entry(lr).or_insert_with(Poly::zero);
            *e += &Poly::term(c.clone(), u.mono);
            if e.is_zero() {
                col.remove(&lr);
            }
        }
        EqMor { src: a.clone(), tgt: b.clone(), map: m }
    }
}

/// A basis of the degree-`d` maps `A -> B`, in reduced echelon form.
pub fn hom_basis(a: &EqObj, b: &EqObj, d: i32) -> HomSpace {
    let sys = System::new(a, b, d);
    let basis = sys.solutions().iter().map(|x| sys.to_map(a, b, d, x)).collect();
    HomSpace { source: a.clone(), target: b.clone(), degree: d, basis }
}

/// `dim Hom^d(A, B)`.
pub fn hom_dim(a: &EqObj, b: &EqObj, d: i32) -> usize {
    System::new(a, b, d).dim()
}

/// The lowest degree in which a nonzero map `A -> B` can exist.
pub fn min_degree(a: &EqObj, b: &EqObj) -> i32 {
    let da = Flat::new(&a.underlying).degs;
    let db = Flat::new(&b.underlying).degs;
    match (db.iter().min(), da.iter().max()) {
        (Some(lo), Some(hi)) => lo - hi,
        _ => 0,
    }
}

/// The degrees `min_degree(A, B) ..= bound` for which dimensions are computed.
pub fn degree_range(a: &EqObj, b: &EqObj, bound: i32) -> core::ops::RangeInclusive<i32> {
    min_degree(a, b)..=bound
}

/// Assembles a series from per-degree dimensions.
pub fn series_from_dims(dims: &[(i32, usize)]) -> LaurentInt {
    let mut s = LaurentInt::zero();
    for (d, n) in dims {
        s.add_term(*d, *n as i64);
    }
    s
}

/// `sum_{d <= bound} dim Hom^d(A, B) v^d`.
pub fn graded_dim(a: &EqObj, b: &EqObj, bound: i32) -> LaurentInt {
    let dims: Vec<(i32, usize)> = degree_range(a, b, bound).map(|d| (d, hom_dim(a, b, d))).collect();
    series_from_dims(&dims)
}

/// Multiplies a series by `(1 - v^2)(1 - v^4)`, keeping powers `<= bound`.
pub fn numerator_of(series: &LaurentInt, bound: i32) -> LaurentInt {
    let mut out = LaurentInt::zero();
    for (k, c) in series.terms() {
        for (dk, sign) in [(0, 1), (2, -1), (4, -1), (6, 1)] {
            out.add_term(k + dk, c * sign);
        }
    }
    out.truncate(bound)
}

/// The numerator `p(v)` with `graded_dim(A, B) = p(v) / ((1 - v^2)(1 - v^4))`
/// through degree `bound`.  Fails when the fitted numerator has a negative
/// coefficient, i.e. the Hom space is not visibly free over `R^tau`.
pub fn free_rank_over_rtau(a: &EqObj, b: &EqObj, bound: i32) -> Result<LaurentInt> {
    numerator_checked(&graded_dim(a, b, bound), bound)
}

/// The fit of [`free_rank_over_rtau`] applied to a precomputed series.
pub fn numerator_checked(series: &LaurentInt, bound: i32) -> Result<LaurentInt> {
    let p = numerator_of(series, bound);
    if let Some((k, c)) = p.terms().find(|(_, c)| *c < 0) {
        return Err(Error::Arithmetic(format!(
            "no nonnegative numerator fits: coefficient {} at v^{} (series {})",
            c, k, series
        )));
    }
    Ok(p)
}

/// The word drawing each indecomposable in the folded diagram language.
pub fn indecomposable_word(name: Indec) -> FWord {
    FWord::of(match name {
        Indec::One => &[],
        Indec::X => &[Colour::O],
        Indec::Y => &[Colour::G],
        Indec::Z => &[Colour::B],
        Indec::XZ => &[Colour::O, Colour::B],
    })
}

/// Diagrams generating `Hom(name, 1)` as a module over `R^tau`, with degrees.
pub fn spanning_diagrams(name: Indec) -> Vec<Expr> {
    use Colour::*;
    match name {
        Indec::One => alloc::vec![Expr::id(&[])],
        Indec::X => alloc::vec![dot_up(O)],
        Indec::Y => alloc::vec![dot_up(G), dot_up(G).after(stub_right(G, O))],
        Indec::Z => alloc::vec![dot_up(B)],
        Indec::XZ => alloc::vec![dot_up(O).beside(dot_up(B))],
    }
}

/// Monomials `(a_s + a_t)^i (a_s a_t)^j` of degree `k`: a basis of `R^tau_k`.
pub fn rtau_monomials(k: i32) -> Vec<Poly> {
    let mut out = Vec::new();
    if k < 0 || k % 2 != 0 {
        return out;
    }
    let mut j = 0;
    while 4 * j <= k {
        let i = (k - 4 * j) / 2;
        out.push(Poly::alpha_sum().pow(i as u32) * Poly::alpha_prod().pow(j as u32));
        j += 1;
    }
    out
}

/// Flattens maps into rational vectors over a shared coordinate set.
fn coordinates(maps: &[SumMor]) -> Vec<SparseVec> {
    let mut index: BTreeMap<(usize, usize, usize, usize, Mono), usize> = BTreeMap::new();
    let mut out = Vec::new();
    for m in maps {
        let mut v = SparseVec::new();
        for (i, row) in m.blocks.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                for (c, col) in b.cols.iter().enumerate() {
                    for (r, p) in col {
                        for (mono, x) in p.terms() {
                            let n = index.len();
                            let k = *index.entry((i, j, c, *r, *mono)).or_insert(n);
                            v.insert(k, x.clone());
                        }
                    }
                }
            }
        }
        out.push(v);
    }
    out
}

/// Rank over `Q` of a family of maps with a common shape.
pub fn rank_of_maps(maps: &[SumMor]) -> usize {
    crate::linalg::rank(coordinates(maps))
}

/// Checks that the spanning diagrams of `Hom(name, 1)` form an `R^tau`-basis
/// in every degree `<= bound`: their `R^tau`-multiples are linearly independent
/// and as many as `dim Hom^d`.
pub fn verify_spanning(name: Indec, bound: i32) -> Result<bool> {
    let ev = Evaluator::new();
    let word = indecomposable_word(name);
    let src = word.eq_obj();
    if src != EqObj::indecomposable(name, 0) {
        return Err(Error::Invalid(format!("word {} does not draw {}", word, name)));
    }
    let unit = EqObj::unit();
    let mut gens = Vec::new();
    for e in spanning_diagrams(name) {
        let m = ev.eval(&e)?;
        if m.src != src || m.tgt != unit {
            return Err(Error::Shape(format!("spanning diagram {} is not a map {} -> 1", e, word)));
        }
        gens.push(m);
    }
    for d in degree_range(&src, &unit, bound) {
        let mut products = Vec::new();
        for g in &gens {
            for f in rtau_monomials(d - g.degree()) {
                let fd = f.degree().unwrap_or(0);
                products.push(g.map.scale_poly(&f, fd));
            }
        }
        let dim = hom_dim(&src, &unit, d);
        if products.len() != dim {
            return Ok(false);
        }
        if !products.is_empty() && rank_of_maps(&products) != dim {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(n: Indec) -> EqObj {
        EqObj::indecomposable(n, 0)
    }

    #[test]
    fn small_hom_spaces() {
        let one = EqObj::unit();
        assert_eq!(hom_dim(&obj(Indec::X), &one, 2), 1);
        assert_eq!(hom_dim(&obj(Indec::Y), &one, 1), 1);
        assert_eq!(hom_dim(&obj(Indec::X), &one, 1), 0);
        assert_eq!(graded_dim(&one, &one, 8), LaurentInt::parse("1 + v^2 + 2v^4 + 2v^6 + 3v^8").unwrap());
    }

    #[test]
    fn numerators() {
        let one = EqObj::unit();
        for (n, p) in
            [(Indec::One, "1"), (Indec::X, "v^2"), (Indec::Y, "v + v^3"), (Indec::Z, "v^2"), (Indec::XZ, "v^4")]
        {
            assert_eq!(free_rank_over_rtau(&obj(n), &one, 12).unwrap(), LaurentInt::parse(p).unwrap(), "{}", n);
            assert!(verify_spanning(n, 12).unwrap(), "{}", n);
        }
    }

    #[test]
    fn basis_members_are_valid() {
        let h = hom_basis(&obj(Indec::Y), &obj(Indec::Y), 2);
        assert_eq!(h.dim(), 4);
        for m in &h.basis {
            assert!(m.is_equivariant());
            assert!(m.map.check_blocks());
        }
    }
}
