//! Bott-Samelson bimodules of type A1xA1 and the maps between them.
//!
//! `B_w = R (x)_{R^{w_1}} R (x)_{R^{w_2}} ... (x)_{R^{w_n}} R` is a free left
//! `R`-module of rank `2^n`: slot `i >= 1` holds either `1` or the root of the
//! `i`-th letter.  A basis element is encoded as a bitmask whose bit `i-1` is
//! set when slot `i` holds its root.  The right action is never stored; it is
//! computed by pushing invariant parts leftward through the tensor signs
//! (see [`right_mul_basis`]).
//!
//! A [`Morphism`] is a left-`R`-linear map written as a sparse matrix: column
//! `j` is the image of source basis element `j`, expanded in the target basis.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::{q, Gen, Mono, Poly, Q};

/// A word in the simple reflections (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Parses a string of `s`/`t` letters; `1` or the empty string is the empty word.
    pub fn parse(text: &str) -> Result<Word> {
        if text == "1" {
            return Ok(Word::empty());
        }
        text.chars()
            .enumerate()
            .map(|(i, c)| {
                Gen::from_letter(c)
                    .ok_or(Error::Syntax { offset: i, message: format!("unexpected letter {:?} in word", c) })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of basis elements, `2^len`.
    pub fn rank(&self) -> usize {
        1usize << self.0.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Colour swap `s <-> t`.
    pub fn tau(&self) -> Word {
        Word(self.0.iter().map(|g| g.swap()).collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for g in &self.0 {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

/// A Bott-Samelson object `B_w[shift]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Obj {
    pub word: Word,
    pub shift: i32,
}

impl Obj {
    pub fn new(word: Word, shift: i32) -> Obj {
        Obj { word, shift }
    }

    pub fn unit() -> Obj {
        Obj::default()
    }

    pub fn of(letters: &[Gen]) -> Obj {
        Obj::new(Word(letters.to_vec()), 0)
    }

    pub fn rank(&self) -> usize {
        self.word.rank()
    }

    /// Degree of basis element `eps`: `2 |eps| - len - shift`.
    pub fn basis_degree(&self, eps: usize) -> i32 {
        2 * eps.count_ones() as i32 - self.word.len() as i32 - self.shift
    }

    pub fn tensor(&self, other: &Obj) -> Obj {
        Obj::new(self.word.concat(&other.word), self.shift + other.shift)
    }

    pub fn tau(&self) -> Obj {
        Obj::new(self.word.tau(), self.shift)
    }

    pub fn shifted(&self, k: i32) -> Obj {
        Obj::new(self.word.clone(), self.shift + k)
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B_{}", self.word)?;
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        Ok(())
    }
}

/// A vector in a Bott-Samelson bimodule: left coefficients on the basis.
pub type Vector = BTreeMap<usize, Poly>;

fn vec_add_scaled(acc: &mut Vector, v: &Vector, c: &Poly) {
    if c.is_zero() {
        return;
    }
    for (k, p) in v {
        let term = if c.is_one() { p.clone() } else { p * c };
        let e = acc.entry(*k).or_insert_with(Poly::zero);
        *e += &term;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// An element of `B_w[shift]` in left-basis normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSElement {
    pub object: Obj,
    pub terms: Vector,
}

impl BSElement {
    /// The basis element `eps` with coefficient 1.
    pub fn basis(object: Obj, eps: usize) -> BSElement {
        let mut terms = Vector::new();
        terms.insert(eps, Poly::one());
        BSElement { object, terms }
    }

    /// Right multiplication by `f`, normalized back to the left basis.
    pub fn right_mul(&self, f: &Poly) -> BSElement {
        let mut out = Vector::new();
        for (eps, c) in &self.terms {
            let v = right_mul_basis(&self.object.word, *eps, f);
            vec_add_scaled(&mut out, &v, c);
        }
        BSElement { object: self.object.clone(), terms: out }
    }

    /// Degree if homogeneous and nonzero.
    pub fn degree(&self) -> Option<i32> {
        let mut d = None;
        for (eps, c) in &self.terms {
            let e = c.degree()? + self.object.basis_degree(*eps);
            match d {
                None => d = Some(e),
                Some(x) if x != e => return None,
                _ => {}
            }
        }
        d
    }
}

/// Computes `b_eps * f` in normal form.
///
/// `f` enters the rightmost slot; working from right to left, each slot's
/// content (its basis root times what was carried in) is split over the
/// invariants of that slot's letter, `g = a + b * a_w`.  The invariant parts
/// `a`, `b` cross the tensor sign to the left, while the slot keeps `1` or `a_w`
/// respectively.  Whatever reaches slot 0 is the left coefficient.
pub fn right_mul_basis(word: &Word, eps: usize, f: &Poly) -> Vector {
    let mut state: Vector = Vector::new();
    if f.is_zero() {
        return state;
    }
    state.insert(0, f.clone());
    for k in (0..word.len()).rev() {
        let g = word.0[k];
        let root = Poly::alpha(g);
        let mut next = Vector::new();
        for (mask, h) in state {
            let content = if eps >> k & 1 == 1 { &h * &root } else { h };
            let (a, b) = content.split_over_invariants(g);
            if !a.is_zero() {
                let e = next.entry(mask).or_insert_with(Poly::zero);
                *e += &a;
            }
            if !b.is_zero() {
                let e = next.entry(mask | 1 << k).or_insert_with(Poly::zero);
                *e += &b;
            }
        }
        next.retain(|_, p| !p.is_zero());
        state = next;
    }
    state
}

/// Matrix of right multiplication by `f` on `B_w` (column `j` = `b_j * f`).
pub fn right_mul_matrix(obj: &Obj, f: &Poly) -> Vec<Vector> {
    (0..obj.rank()).map(|j| right_mul_basis(&obj.word, j, f)).collect()
}

/// Caches `b_eps * m` for monomials `m`, used when tensoring many columns.
#[derive(Default)]
struct RightMulCache {
    map: BTreeMap<(Word, usize, Mono), Vector>,
}

impl RightMulCache {
    fn mul(&mut self, word: &Word, eps: usize, f: &Poly) -> Vector {
        let mut out = Vector::new();
        for (m, c) in f.terms() {
            let key = (word.clone(), eps, *m);
            let v = self.map.entry(key).or_insert_with(|| right_mul_basis(word, eps, &Poly::monomial(*m)));
            vec_add_scaled(&mut out, v, &Poly::constant(c.clone()));
        }
        out
    }
}

/// A homogeneous left-`R`-linear map between Bott-Samelson objects.
///
/// `cols[j]` is the image of source basis element `j`.  Entry `(i, j)` has degree
/// `degree + deg(src_j) - deg(tgt_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub src: Obj,
    pub tgt: Obj,
    pub degree: i32,
    pub cols: Vec<Vector>,
}

impl Morphism {
    pub fn zero(src: Obj, tgt: Obj, degree: i32) -> Morphism {
        let cols = vec![Vector::new(); src.rank()];
        Morphism { src, tgt, degree, cols }
    }

    pub fn identity(obj: Obj) -> Morphism {
        let cols = (0..obj.rank())
            .map(|j| {
                let mut v = Vector::new();
                v.insert(j, Poly::one());
                v
            })
            .collect();
        Morphism { src: obj.clone(), tgt: obj, degree: 0, cols }
    }

    /// Builds a morphism from columns, dropping zero entries.
    pub fn from_cols(src: Obj, tgt: Obj, degree: i32, mut cols: Vec<Vector>) -> Morphism {
        assert_eq!(cols.len(), src.rank(), "column count must equal the source rank");
        for c in &mut cols {
            c.retain(|_, p| !p.is_zero());
        }
        Morphism { src, tgt, degree, cols }
    }

    /// Entry `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Poly {
        self.cols[col].get(&row).cloned().unwrap_or_else(Poly::zero)
    }

    /// Dense row-major entries, `rank(tgt) x rank(src)`.
    pub fn dense(&self) -> Vec<Vec<Poly>> {
        (0..self.tgt.rank()).map(|i| (0..self.src.rank()).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// The same matrix viewed as a map `src[a] -> tgt[b]`; the degree is
    /// adjusted so that entry degrees are unchanged.
    pub fn reshift(&self, src_shift: i32, tgt_shift: i32) -> Morphism {
        let degree = self.degree + (src_shift - self.src.shift) - (tgt_shift - self.tgt.shift);
        Morphism {
            src: Obj::new(self.src.word.clone(), src_shift),
            tgt: Obj::new(self.tgt.word.clone(), tgt_shift),
            degree,
            cols: self.cols.clone(),
        }
    }

    /// `self o f` (the right operand is applied first).
    pub fn compose(&self, f: &Morphism) -> Result<Morphism> {
        if self.src != f.tgt {
            return Err(Error::Shape(format!("cannot compose: source {} does not match target {}", self.src, f.tgt)));
        }
        let cols = f
            .cols
            .iter()
            .map(|col| {
                let mut out = Vector::new();
                for (k, c) in col {
                    vec_add_scaled(&mut out, &self.cols[*k], c);
                }
                out
            })
            .collect();
        Ok(Morphism { src: f.src.clone(), tgt: self.tgt.clone(), degree: self.degree + f.degree, cols })
    }

    /// Horizontal concatenation `self (x) g`.
    ///
    /// On `b1 (x) b2`: write `g(b2) = sum_j c_j b'_j`; the result is
    /// `sum_j (self(b1) * c_j) (x) b'_j`, with the right action normalized.
    pub fn tensor(&self, g: &Morphism) -> Morphism {
        let src = self.src.tensor(&g.src);
        let tgt = self.tgt.tensor(&g.tgt);
        let n1 = self.src.word.len();
        let m1 = self.tgt.word.len();
        let mut cache = RightMulCache::default();
        let mut cols = Vec::with_capacity(src.rank());
        for b2 in 0..g.src.rank() {
            for b1 in 0..self.src.rank() {
                let mut out = Vector::new();
                for (j, cj) in &g.cols[b2] {
                    for (i, fi) in &self.cols[b1] {
                        let prod = if cj.is_one() {
                            let mut v = Vector::new();
                            v.insert(*i, Poly::one());
                            v
                        } else {
                            cache.mul(&self.tgt.word, *i, cj)
                        };
                        for (k, r) in prod {
                            let e = out.entry(k | j << m1).or_insert_with(Poly::zero);
                            *e += &(fi * &r);
                        }
                    }
                }
                out.retain(|_, p| !p.is_zero());
                debug_assert_eq!(cols.len(), b1 | b2 << n1);
                cols.push(out);
            }
        }
        Morphism { src, tgt, degree: self.degree + g.degree, cols }
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        self.check_parallel(other)?;
        let mut out = self.clone();
        for (j, col) in other.cols.iter().enumerate() {
            vec_add_scaled(&mut out.cols[j], col, &Poly::one());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism> {
        self.add(&other.scale(&-Q::one()))
    }

    fn check_parallel(&self, other: &Morphism) -> Result<()> {
        if self.src != other.src || self.tgt != other.tgt || self.degree != other.degree {
            return Err(Error::Shape(format!(
                "cannot add maps {} -> {} (degree {}) and {} -> {} (degree {})",
                self.src, self.tgt, self.degree, other.src, other.tgt, other.degree
            )));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Q) -> Morphism {
        self.scale_poly(&Poly::constant(c.clone()), 0)
    }

    /// Multiplies every entry by `f` (a left action; `f` must be homogeneous of
    /// degree `deg_f`, or zero).
    pub fn scale_poly(&self, f: &Poly, deg_f: i32) -> Morphism {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let mut out = Vector::new();
                vec_add_scaled(&mut out, c, f);
                out
            })
            .collect();
        Morphism { src: self.src.clone(), tgt: self.tgt.clone(), degree: self.degree + deg_f, cols }
    }

    /// Colour swap: swap letters and apply `tau` to each entry.  The basis
    /// bitmasks are unchanged, since slot `i` of `B_w` maps to slot `i` of `B_{tau w}`.
    pub fn tau(&self) -> Morphism {
        Morphism {
            src: self.src.tau(),
            tgt: self.tgt.tau(),
            degree: self.degree,
            cols: self.cols.iter().map(|c| c.iter().map(|(k, p)| (*k, p.tau())).collect()).collect(),
        }
    }

    /// Recomputes the degree from the entries and checks homogeneity.
    ///
    /// Returns the declared degree for the zero map.
    pub fn degree_of(&self) -> Result<i32> {
        let mut found: Option<i32> = None;
        for (j, col) in self.cols.iter().enumerate() {
            for (i, p) in col {
                let d = p
                    .degree()
                    .ok_or_else(|| Error::Invalid(format!("entry ({}, {}) is not homogeneous: {}", i, j, p)))?;
                let delta = d - self.src.basis_degree(j) + self.tgt.basis_degree(*i);
                match found {
                    None => found = Some(delta),
                    Some(x) if x != delta => {
                        return Err(Error::Invalid(format!(
                            "inhomogeneous map: entries of degree shift {} and {}",
                            x, delta
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(found.unwrap_or(self.degree))
    }

    /// Whether the entries agree with the declared degree.
    pub fn is_consistent(&self) -> bool {
        self.degree_of().is_ok_and(|d| d == self.degree)
    }

    /// Whether the map commutes with right multiplication by `a_s` and `a_t`.
    pub fn check_bimodule_map(&self) -> bool {
        for g in [Gen::S, Gen::T] {
            let a = Poly::alpha(g);
            let rs = right_mul_matrix(&self.src, &a);
            let rt = right_mul_matrix(&self.tgt, &a);
            for (image, col) in rs.iter().zip(&self.cols) {
                // M (b_j a)
                let mut lhs = Vector::new();
                for (k, c) in image {
                    vec_add_scaled(&mut lhs, &self.cols[*k], c);
                }
                // (M b_j) a
                let mut rhs = Vector::new();
                for (i, c) in col {
                    vec_add_scaled(&mut rhs, &rt[*i], c);
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Applies the map to an element of its source.
    pub fn apply(&self, x: &BSElement) -> Result<BSElement> {
        if x.object.word != self.src.word {
            return Err(Error::Shape(format!("element of {} fed to map from {}", x.object, self.src)));
        }
        let mut out = Vector::new();
        for (j, c) in &x.terms {
            vec_add_scaled(&mut out, &self.cols[*j], c);
        }
        Ok(BSElement { object: self.tgt.clone(), terms: out })
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {} (degree {})", self.src, self.tgt, self.degree)?;
        for row in self.dense() {
            let cells: Vec<String> = row.iter().map(|p| format!("{}", p)).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The diagrammatic generators of the two-colour category, as bimodule maps.
pub mod gens {
    use super::*;

    /// Identity of `B_w`.
    pub fn id(letters: &[Gen]) -> Morphism {
        Morphism::identity(Obj::of(letters))
    }

    /// Upward dot `B_c -> R`, `f (x) g -> f g`; degree 1.
    pub fn dotu(c: Gen) -> Morphism {
        let mut c0 = Vector::new();
        c0.insert(0, Poly::one());
        let mut c1 = Vector::new();
        c1.insert(0, Poly::alpha(c));
        Morphism::from_cols(Obj::of(&[c]), Obj::unit(), 1, vec![c0, c1])
    }

    /// Downward dot `R -> B_c`, `1 -> (a_c (x) 1 + 1 (x) a_c)/2`; degree 1.
    pub fn dotd(c: Gen) -> Morphism {
        let mut col = Vector::new();
        col.insert(0, Poly::alpha(c).scale(&q(1, 2)));
        col.insert(1, Poly::constant(q(1, 2)));
        Morphism::from_cols(Obj::unit(), Obj::of(&[c]), 1, vec![col])
    }

    /// Merge `B_c B_c -> B_c`, `f (x) g (x) h -> f d_c(g) (x) h`; degree -1.
    pub fn merge(c: Gen) -> Morphism {
        let mut cols = vec![Vector::new(); 4];
        for e2 in 0..2usize {
            // 1 (x) a_c^{e1} (x) a_c^{e2}: only e1 = 1 survives, with d_c(a_c) = 2.
            let mut v = Vector::new();
            v.insert(e2, Poly::int(2));
            cols[1 | e2 << 1] = v;
        }
        Morphism::from_cols(Obj::of(&[c, c]), Obj::of(&[c]), -1, cols)
    }

    /// Split `B_c -> B_c B_c`, `f (x) g -> f (x) 1 (x) g`; degree -1.
    pub fn split(c: Gen) -> Morphism {
        let cols = (0..2usize)
            .map(|e| {
                let mut v = Vector::new();
                v.insert(e << 1, Poly::one());
                v
            })
            .collect();
        Morphism::from_cols(Obj::of(&[c]), Obj::of(&[c, c]), -1, cols)
    }

    /// Four-valent crossing `B_a B_b -> B_b B_a` for `a != b`: swaps the slot bits.
    pub fn crossing(a: Gen, b: Gen) -> Result<Morphism> {
        if a == b {
            return Err(Error::Shape("a crossing needs two different colours".into()));
        }
        let cols = (0..4usize)
            .map(|e| {
                let mut v = Vector::new();
                v.insert((e >> 1) | (e & 1) << 1, Poly::one());
                v
            })
            .collect();
        Ok(Morphism::from_cols(Obj::of(&[a, b]), Obj::of(&[b, a]), 0, cols))
    }

    /// Cap `B_c B_c -> R`, the composite of merge and the upward dot; degree 0.
    pub fn cap(c: Gen) -> Morphism {
        dotu(c).compose(&merge(c)).expect("cap shapes agree")
    }

    /// Cup `R -> B_c B_c`, the composite of the downward dot and split; degree 0.
    pub fn cup(c: Gen) -> Morphism {
        split(c).compose(&dotd(c)).expect("cup shapes agree")
    }

    /// Polynomial box `R -> R`, multiplication by `f`.
    pub fn poly_box(f: &Poly) -> Result<Morphism> {
        let d = if f.is_zero() {
            0
        } else {
            f.degree().ok_or_else(|| Error::Invalid(format!("polynomial {} is not homogeneous", f)))?
        };
        let mut col = Vector::new();
        col.insert(0, f.clone());
        Ok(Morphism::from_cols(Obj::unit(), Obj::unit(), d, vec![col]))
    }

    /// Multiplication by `f` in the region to the left of `id_w`.
    pub fn left_poly(f: &Poly, letters: &[Gen]) -> Result<Morphism> {
        Ok(poly_box(f)?.tensor(&id(letters)))
    }

    /// Multiplication by `f` in the region to the right of `id_w`.
    pub fn right_poly(letters: &[Gen], f: &Poly) -> Result<Morphism> {
        Ok(id(letters).tensor(&poly_box(f)?))
    }
}

/// An ordered formal direct sum of Bott-Samelson objects.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SumObj(pub Vec<Obj>);

impl SumObj {
    pub fn single(o: Obj) -> SumObj {
        SumObj(vec![o])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Component-wise tensor product, ordered with the left index major.
    pub fn tensor(&self, other: &SumObj) -> SumObj {
        let mut v = Vec::with_capacity(self.len() * other.len());
        for a in &self.0 {
            for b in &other.0 {
                v.push(a.tensor(b));
            }
        }
        SumObj(v)
    }

    /// Positional colour swap: component `i` goes to `tau` of component `i`.
    pub fn tau(&self) -> SumObj {
        SumObj(self.0.iter().map(Obj::tau).collect())
    }

    pub fn shifted(&self, k: i32) -> SumObj {
        SumObj(self.0.iter().map(|o| o.shifted(k)).collect())
    }

    pub fn direct_sum(&self, other: &SumObj) -> SumObj {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        SumObj(v)
    }
}

impl fmt::Display for SumObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|o| format!("{}", o)).collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

/// A block matrix of morphisms between direct sums; `blocks[i][j]` maps source
/// component `j` to target component `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumMor {
    pub src: SumObj,
    pub tgt: SumObj,
    pub degree: i32,
    pub blocks: Vec<Vec<Morphism>>,
}

impl SumMor {
    pub fn zero(src: SumObj, tgt: SumObj, degree: i32) -> SumMor {
        let blocks = tgt
            .0
            .iter()
            .map(|t| src.0.iter().map(|s| Morphism::zero(s.clone(), t.clone(), degree)).collect())
            .collect();
        SumMor { src, tgt, degree, blocks }
    }

    pub fn identity(obj: SumObj) -> SumMor {
        let mut m = SumMor::zero(obj.clone(), obj.clone(), 0);
        for (i, o) in obj.0.iter().enumerate() {
            m.blocks[i][i] = Morphism::identity(o.clone());
        }
        m
    }

    /// A 1x1 block matrix.
    pub fn single(m: Morphism) -> SumMor {
        SumMor {
            src: SumObj::single(m.src.clone()),
            tgt: SumObj::single(m.tgt.clone()),
            degree: m.degree,
            blocks: vec![vec![m]],
        }
    }

    /// Replaces block `(i, j)`, checking shape and degree.
    pub fn set(&mut self, i: usize, j: usize, m: Morphism) -> Result<()> {
        if m.src != self.src.0[j] || m.tgt != self.tgt.0[i] || m.degree != self.degree {
            return Err(Error::Shape(format!(
                "block ({}, {}) must map {} -> {} in degree {}, got {} -> {} in degree {}",
                i, j, self.src.0[j], self.tgt.0[i], self.degree, m.src, m.tgt, m.degree
            )));
        }
        self.blocks[i][j] = m;
        Ok(())
    }

    /// Builds from blocks; zero blocks may be given as `None`.
    pub fn from_blocks(src: SumObj, tgt: SumObj, degree: i32, blocks: Vec<Vec<Option<Morphism>>>) -> Result<SumMor> {
        let mut m = SumMor::zero(src, tgt, degree);
        if blocks.len() != m.tgt.len() || blocks.iter().any(|r| r.len() != m.src.len()) {
            return Err(Error::Shape("block matrix has the wrong number of rows or columns".into()));
        }
        for (i, row) in blocks.into_iter().enumerate() {
            for (j, b) in row.into_iter().enumerate() {
                if let Some(b) = b {
                    m.set(i, j, b)?;
                }
            }
        }
        Ok(m)
    }

    pub fn compose(&self, f: &SumMor) -> Result<SumMor> {
        if self.src != f.tgt {
            return Err(Error::Shape(format!("cannot compose: source {} does not match target {}", self.src, f.tgt)));
        }
        let mut out = SumMor::zero(f.src.clone(), self.tgt.clone(), self.degree + f.degree);
        for i in 0..self.tgt.len() {
            for j in 0..f.src.len() {
                let mut acc = out.blocks[i][j].clone();
                for k in 0..self.src.len() {
                    if self.blocks[i][k].is_zero() || f.blocks[k][j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.blocks[i][k].compose(&f.blocks[k][j])?)?;
                }
                out.blocks[i][j] = acc;
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, g: &SumMor) -> SumMor {
        let src = self.src.tensor(&g.src);
        let tgt = self.tgt.tensor(&g.tgt);
        let mut out = SumMor::zero(src, tgt, self.degree + g.degree);
        let gs = g.src.len();
        let gt = g.tgt.len();
        for i1 in 0..self.tgt.len() {
            for j1 in 0..self.src.len() {
                let a = &self.blocks[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..gt {
                    for j2 in 0..gs {
                        let b = &g.blocks[i2][j2];
                        if b.is_zero() {
                            continue;
                        }
                        out.blocks[i1 * gt + i2][j1 * gs + j2] = a.tensor(b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &SumMor) -> Result<SumMor> {
        if self.src != other.src || self.tgt != other.tgt || self.degree != other.degree {
            return Err(Error::Shape(format!(
                "cannot add maps {} -> {} (degree {}) and {} -> {} (degree {})",
                self.src, self.tgt, self.degree, other.src, other.tgt, other.degree
            )));
        }
        let mut out = self.clone();
        for i in 0..self.tgt.len() {
            for j in 0..self.src.len() {
                out.blocks[i][j] = self.blocks[i][j].add(&other.blocks[i][j])?;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SumMor) -> Result<SumMor> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> SumMor {
        self.map_blocks(|b| b.scale(c), self.degree)
    }

    pub fn scale_poly(&self, f: &Poly, deg_f: i32) -> SumMor {
        self.map_blocks(|b| b.scale_poly(f, deg_f), self.degree + deg_f)
    }

    fn map_blocks(&self, mut op: impl FnMut(&Morphism) -> Morphism, degree: i32) -> SumMor {
        SumMor {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            degree,
            blocks: self.blocks.iter().map(|r| r.iter().map(&mut op).collect()).collect(),
        }
    }

    /// Positional colour swap of every block.
    pub fn tau(&self) -> SumMor {
        SumMor {
            src: self.src.tau(),
            tgt: self.tgt.tau(),
            degree: self.degree,
            blocks: self.blocks.iter().map(|r| r.iter().map(Morphism::tau).collect()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|r| r.iter().all(Morphism::is_zero))
    }

    /// Same blocks viewed between shifted sums (entry degrees unchanged).
    pub fn reshift(&self, src: SumObj, tgt: SumObj) -> Result<SumMor> {
        if src.len() != self.src.len() || tgt.len() != self.tgt.len() {
            return Err(Error::Shape("reshift must keep the number of components".into()));
        }
        let mut degree = None;
        let mut blocks = Vec::new();
        for (i, row) in self.blocks.iter().enumerate() {
            let mut r = Vec::new();
            for (j, b) in row.iter().enumerate() {
                if b.src.word != src.0[j].word || b.tgt.word != tgt.0[i].word {
                    return Err(Error::Shape("reshift must keep the underlying words".into()));
                }
                let nb = b.reshift(src.0[j].shift, tgt.0[i].shift);
                match degree {
                    None => degree = Some(nb.degree),
                    Some(d) if d != nb.degree && !nb.is_zero() => {
                        return Err(Error::Shape("reshift produced blocks of different degrees".into()))
                    }
                    _ => {}
                }
                r.push(nb);
            }
            blocks.push(r);
        }
        let degree = degree.unwrap_or(self.degree);
        for row in &mut blocks {
            for b in row.iter_mut() {
                if b.is_zero() {
                    b.degree = degree;
                } else if b.degree != degree {
                    return Err(Error::Shape("reshift produced blocks of different degrees".into()));
                }
            }
        }
        Ok(SumMor { src, tgt, degree, blocks })
    }

    /// Row of blocks `src -> tgt` where `tgt` is a single object.
    pub fn row(src: SumObj, tgt: Obj, degree: i32, parts: Vec<Option<Morphism>>) -> Result<SumMor> {
        SumMor::from_blocks(src, SumObj::single(tgt), degree, vec![parts])
    }

    /// Column of blocks from a single object.
    pub fn column(src: Obj, tgt: SumObj, degree: i32, parts: Vec<Option<Morphism>>) -> Result<SumMor> {
        SumMor::from_blocks(SumObj::single(src), tgt, degree, parts.into_iter().map(|p| vec![p]).collect())
    }

    /// Checks declared degrees and the bimodule property of every block.
    pub fn check_blocks(&self) -> bool {
        self.blocks
            .iter()
            .all(|r| r.iter().all(|b| b.degree == self.degree && b.is_consistent() && b.check_bimodule_map()))
    }

    /// Whether every block is a scalar multiple of an identity matrix.
    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && *self == SumMor::identity(self.src.clone())
    }
}

impl fmt::Display for SumMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {} (degree {})", self.src, self.tgt, self.degree)?;
        for (i, r) in self.blocks.iter().enumerate() {
            for (j, b) in r.iter().enumerate() {
                if !b.is_zero() {
                    write!(f, "block ({}, {}): {}", i, j, b)?;
                }
            }
        }
        Ok(())
    }
}

/// Convenience: `Q` one-half.
pub fn half() -> Q {
    q(1, 2)
}
