//! The Grothendieck ring of the folded category.
//!
//! It is free over `Z[v, v^-1]` on the classes of the five indecomposables
//! `1, X, Y, Z, XZ`, with
//!
//! ```text
//! X^2 = 1,  XY = Y,  Y^2 = (v+v^-1)Y + Z + XZ,
//! YZ = (v+v^-1)(Z + XZ),  Z^2 = (v^2+1+v^-2)Z + XZ,
//! ```
//!
//! and shifts act by `[M[1]] = v [M]`.  Setting `X = +1` or `X = -1` gives
//! rank-3 quotients on the basis `1, Y, Z`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::equiv::Indec;
use crate::error::{Error, Result};
use crate::polyring::LaurentInt;

fn lp(terms: &[(i32, i64)]) -> LaurentInt {
    LaurentInt::from_terms(terms)
}

fn basis_index(n: Indec) -> usize {
    match n {
        Indec::One => 0,
        Indec::X => 1,
        Indec::Y => 2,
        Indec::Z => 3,
        Indec::XZ => 4,
    }
}

/// An element of the Grothendieck ring: coefficients on `(1, X, Y, Z, XZ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RingElem {
    pub coeffs: [LaurentInt; 5],
}

impl RingElem {
    pub fn zero() -> RingElem {
        RingElem::default()
    }

    pub fn one() -> RingElem {
        RingElem::basis(Indec::One)
    }

    /// The class of an indecomposable.
    pub fn basis(n: Indec) -> RingElem {
        RingElem::basis_scaled(n, LaurentInt::one())
    }

    /// `c [n]`.
    pub fn basis_scaled(n: Indec, c: LaurentInt) -> RingElem {
        let mut e = RingElem::zero();
        e.coeffs[basis_index(n)] = c;
        e
    }

    /// `c * 1` for a Laurent polynomial `c`.
    pub fn scalar(c: LaurentInt) -> RingElem {
        RingElem::basis_scaled(Indec::One, c)
    }

    /// The class of `n[k]`, i.e. `v^k [n]`.
    pub fn shifted_basis(n: Indec, k: i32) -> RingElem {
        RingElem::basis_scaled(n, LaurentInt::monomial(1, k))
    }

    pub fn coeff(&self, n: Indec) -> &LaurentInt {
        &self.coeffs[basis_index(n)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        let mut out = self.clone();
        for (o, c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o = &*o + c;
        }
        out
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        self.add(&other.scale(&LaurentInt::monomial(-1, 0)))
    }

    /// Multiplication by a Laurent polynomial.
    pub fn scale(&self, c: &LaurentInt) -> RingElem {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            *o = &*o * c;
        }
        out
    }

    /// Multiplication by `v^k`, the class of the shift `[k]`.
    pub fn shift(&self, k: i32) -> RingElem {
        self.scale(&LaurentInt::monomial(1, k))
    }

    /// Multiplication by `X`: swaps `1 <-> X` and `Z <-> XZ`, fixes `Y`.
    pub fn times_x(&self) -> RingElem {
        let c = &self.coeffs;
        RingElem { coeffs: [c[1].clone(), c[0].clone(), c[2].clone(), c[4].clone(), c[3].clone()] }
    }

    /// Bilinear product.
    pub fn multiply(&self, other: &RingElem) -> RingElem {
        let mut out = RingElem::zero();
        for a in Indec::ALL {
            let ca = self.coeff(a);
            if ca.is_zero() {
                continue;
            }
            for b in Indec::ALL {
                let cb = other.coeff(b);
                if cb.is_zero() {
                    continue;
                }
                out = out.add(&basis_product(a, b).scale(&(ca * cb)));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> RingElem {
        (0..n).fold(RingElem::one(), |acc, _| acc.multiply(self))
    }

    /// Substitutes `X = x` for `x = +1` or `-1`.
    pub fn specialize(&self, x: i64) -> Result<Specialized> {
        if x != 1 && x != -1 {
            return Err(Error::Invalid(format!("X can only be specialized to +1 or -1, not {}", x)));
        }
        let c = &self.coeffs;
        Ok(Specialized { x, coeffs: [&c[0] + &c[1].scale(x), c[2].clone(), &c[3] + &c[4].scale(x)] })
    }

    /// Parses expressions over `1, X, Y, Z, XZ, v`, integers, `+ - *`, powers
    /// `^n` (negative allowed for `v`), parentheses and shifts `[k]`.
    pub fn parse(text: &str) -> Result<RingElem> {
        let mut p = RingParser { src: text.as_bytes(), pos: 0 };
        let e = p.sum()?;
        p.ws();
        if p.pos < p.src.len() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }
}

/// Splits a basis element into its `X`-part and its core in `{1, Y, Z}`.
fn split_x(n: Indec) -> (bool, Indec) {
    match n {
        Indec::One => (false, Indec::One),
        Indec::X => (true, Indec::One),
        Indec::Y => (false, Indec::Y),
        Indec::Z => (false, Indec::Z),
        Indec::XZ => (true, Indec::Z),
    }
}

fn core_product(a: Indec, b: Indec) -> RingElem {
    use Indec::*;
    let y = RingElem::basis;
    match (a, b) {
        (One, n) | (n, One) => y(n),
        (Y, Y) => RingElem::basis_scaled(Y, lp(&[(1, 1), (-1, 1)])).add(&y(Z)).add(&y(XZ)),
        (Y, Z) | (Z, Y) => y(Z).add(&y(XZ)).scale(&lp(&[(1, 1), (-1, 1)])),
        (Z, Z) => RingElem::basis_scaled(Z, lp(&[(2, 1), (0, 1), (-2, 1)])).add(&y(XZ)),
        _ => unreachable!("cores lie in 1, Y, Z"),
    }
}

/// Product of two basis classes.
pub fn basis_product(a: Indec, b: Indec) -> RingElem {
    let (xa, ca) = split_x(a);
    let (xb, cb) = split_x(b);
    let p = core_product(ca, cb);
    if xa ^ xb {
        p.times_x()
    } else {
        p
    }
}

/// Writes a Laurent coefficient in front of a basis name.
fn write_term(out: &mut String, c: &LaurentInt, name: &str) {
    let terms: Vec<(i32, i64)> = c.terms().collect();
    let single = terms.len() == 1;
    let negative = single && terms[0].1 < 0;
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let body = if negative { c.scale(-1) } else { c.clone() };
    let constant = single && terms[0].0 == 0;
    if name.is_empty() {
        if single {
            out.push_str(&body.to_string());
        } else {
            out.push_str(&format!("({})", body));
        }
        return;
    }
    if body == LaurentInt::one() {
        out.push_str(name);
    } else if constant {
        out.push_str(&format!("{}{}", body, name));
    } else {
        out.push_str(&format!("({}){}", body, name));
    }
}

fn render(coeffs: &[LaurentInt], names: &[&str]) -> String {
    let mut out = String::new();
    for (c, n) in coeffs.iter().zip(names) {
        if !c.is_zero() {
            write_term(&mut out, c, n);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RingElem {
    /// E.g. `(v+v^-1)Y + Z + XZ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.coeffs, &["", "X", "Y", "Z", "XZ"]))
    }
}

/// An element of a specialization `X = +-1`, on the basis `(1, Y, Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Specialized {
    pub x: i64,
    pub coeffs: [LaurentInt; 3],
}

impl Specialized {
    pub fn multiply(&self, other: &Specialized) -> Result<Specialized> {
        if self.x != other.x {
            return Err(Error::Invalid("elements of different specializations".into()));
        }
        let lift = |s: &Specialized| RingElem {
            coeffs: [
                s.coeffs[0].clone(),
                LaurentInt::zero(),
                s.coeffs[1].clone(),
                s.coeffs[2].clone(),
                LaurentInt::zero(),
            ],
        };
        lift(self).multiply(&lift(other)).specialize(self.x)
    }
}

impl fmt::Display for Specialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.coeffs, &["", "Y", "Z"]))
    }
}

struct RingParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl RingParser<'_> {
    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, m: &str) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: m.to_string() })
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') || self.src.get(self.pos) == Some(&b'+') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| self.err("expected an integer"), Ok)
    }

    fn sum(&mut self) -> Result<RingElem> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.product()?.scale(&LaurentInt::monomial(-1, 0))
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.product()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<RingElem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.multiply(&self.factor()?);
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.multiply(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RingElem> {
        let (mut base, is_v) = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.int()?;
            if is_v {
                base = RingElem::scalar(LaurentInt::monomial(1, n as i32));
            } else if n < 0 {
                return self.err("negative powers are only allowed for v");
            } else {
                base = base.pow(n as u32);
            }
        }
        while self.peek() == Some(b'[') {
            self.pos += 1;
            let k = self.int()?;
            if self.peek() != Some(b']') {
                return self.err("expected ']'");
            }
            self.pos += 1;
            base = base.shift(k as i32);
        }
        Ok(base)
    }

    /// An atom, and whether it is the variable `v`.
    fn atom(&mut self) -> Result<(RingElem, bool)> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok((e, false))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                Ok((RingElem::scalar(LaurentInt::monomial(n, 0)), false))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok((RingElem::scalar(LaurentInt::monomial(1, 1)), true))
            }
            Some(b'X') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'Z') {
                    self.pos += 1;
                    return Ok((RingElem::basis(Indec::XZ), false));
                }
                Ok((RingElem::basis(Indec::X), false))
            }
            Some(b'Y') => {
                self.pos += 1;
                Ok((RingElem::basis(Indec::Y), false))
            }
            Some(b'Z') => {
                self.pos += 1;
                Ok((RingElem::basis(Indec::Z), false))
            }
            _ => self.err("expected 1, X, Y, Z, XZ, v, an integer or '('"),
        }
    }
}

/// A shifted indecomposable `n[k]`.
pub type Summand = (Indec, i32);

/// Decomposition of `a (x) b` for indecomposables, as a list of summands.
pub fn decompose_pair(a: Indec, b: Indec) -> Vec<Summand> {
    use Indec::*;
    let (xa, ca) = split_x(a);
    let (xb, cb) = split_x(b);
    let core: Vec<Summand> = match (ca, cb) {
        (One, n) | (n, One) => vec![(n, 0)],
        (Y, Y) => vec![(Y, -1), (Y, 1), (Z, 0), (XZ, 0)],
        (Y, Z) | (Z, Y) => vec![(Z, -1), (Z, 1), (XZ, -1), (XZ, 1)],
        (Z, Z) => vec![(Z, -2), (Z, 0), (Z, 2), (XZ, 0)],
        _ => unreachable!("cores lie in 1, Y, Z"),
    };
    if xa ^ xb {
        core.into_iter().map(|(n, k)| (times_x(n), k)).collect()
    } else {
        core
    }
}

fn times_x(n: Indec) -> Indec {
    match n {
        Indec::One => Indec::X,
        Indec::X => Indec::One,
        Indec::Y => Indec::Y,
        Indec::Z => Indec::XZ,
        Indec::XZ => Indec::Z,
    }
}

/// Parses a tensor word such as `Y*Z[2]`, `YYZ` or `X * XZ[-1]`.
pub fn parse_word(text: &str) -> Result<Vec<Summand>> {
    let b = text.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    let err = |pos: usize, m: &str| Error::Syntax { offset: pos, message: m.to_string() };
    let skip_ws = |pos: &mut usize| {
        while *pos < b.len() && b[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= b.len() {
            break;
        }
        if b[pos] == b'*' && !out.is_empty() {
            pos += 1;
            skip_ws(&mut pos);
        }
        let n = match b.get(pos) {
            Some(b'1') => Indec::One,
            Some(b'X') if b.get(pos + 1) == Some(&b'Z') => {
                pos += 1;
                Indec::XZ
            }
            Some(b'X') => Indec::X,
            Some(b'Y') => Indec::Y,
            Some(b'Z') => Indec::Z,
            _ => return Err(err(pos, "expected 1, X, Y, Z or XZ")),
        };
        pos += 1;
        let mut shift = 0i32;
        skip_ws(&mut pos);
        while b.get(pos) == Some(&b'[') {
            let start = pos + 1;
            let Some(len) = text[start..].find(']') else {
                return Err(err(pos, "unterminated shift"));
            };
            let k: i32 = text[start..start + len].trim().parse().map_err(|_| err(start, "bad shift"))?;
            shift += k;
            pos = start + len + 1;
            skip_ws(&mut pos);
        }
        out.push((n, shift));
    }
    if out.is_empty() {
        return Err(err(0, "empty word"));
    }
    Ok(out)
}

/// Decomposes a tensor word into shifted indecomposables by repeatedly
/// applying the pairwise decompositions.  The result is sorted.
pub fn decompose_word(word: &[Summand]) -> Vec<Summand> {
    let mut current: Vec<Summand> = vec![(Indec::One, 0)];
    for (f, k) in word {
        let mut next = Vec::new();
        for (s, sk) in &current {
            for (n, nk) in decompose_pair(*s, *f) {
                next.push((n, sk + k + nk));
            }
        }
        current = next;
    }
    current.sort();
    current
}

/// The ring class `sum v^k [n]` of a list of summands.
pub fn class_of(summands: &[Summand]) -> RingElem {
    summands.iter().fold(RingElem::zero(), |acc, (n, k)| acc.add(&RingElem::shifted_basis(*n, *k)))
}

/// The product of the classes of the letters of a word.
pub fn word_class(word: &[Summand]) -> RingElem {
    word.iter().fold(RingElem::one(), |acc, (n, k)| acc.multiply(&RingElem::shifted_basis(*n, *k)))
}

/// Every word of length `1..=max_len` over `{X, Y, Z}` (unshifted), in
/// lexicographic order.
pub fn all_words(max_len: usize) -> Vec<Vec<Summand>> {
    let letters = [Indec::X, Indec::Y, Indec::Z];
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Summand>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in letters {
                let mut w2 = w.clone();
                w2.push((l, 0));
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Oracle trace: `1 -> 1, X -> v^2, Y -> v + v^3, Z -> v^2, XZ -> v^4`, the
/// generator degrees of `Hom(-, 1)` for each indecomposable.
pub fn oracle_trace(a: &RingElem) -> LaurentInt {
    let eps = [lp(&[(0, 1)]), lp(&[(2, 1)]), lp(&[(1, 1), (3, 1)]), lp(&[(2, 1)]), lp(&[(4, 1)])];
    let mut out = LaurentInt::zero();
    for (c, e) in a.coeffs.iter().zip(eps.iter()) {
        out = &out + &(c * e);
    }
    out
}

/// Predicted numerator of `grdim Hom(A, B)` over the Hilbert series of `R^tau`:
/// the oracle trace of `[A][B]` (all objects are self-dual).
pub fn predicted_grdim(a: &RingElem, b: &RingElem) -> LaurentInt {
    oracle_trace(&a.multiply(b))
}

/// Renders a list of summands as `Y[-1] + Y[1] + Z + XZ`.
pub fn render_summands(s: &[Summand]) -> String {
    let parts: Vec<String> =
        s.iter().map(|(n, k)| if *k == 0 { n.name().to_string() } else { format!("{}[{}]", n.name(), k) }).collect();
    parts.join(" + ")
}
