//! Exact polynomial arithmetic in `R = Q[a_s, a_t]` and Laurent polynomials in `v`.
//!
//! Both roots have degree 2.  The simple reflection `s` negates `a_s` and fixes
//! `a_t` (and symmetrically for `t`); the diagram automorphism `tau` swaps the
//! two variables.  Everything is exact: coefficients are arbitrary precision
//! rationals, so equality of polynomials is decidable and strict.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

/// Builds the rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// One of the two simple reflections (equivalently, one of the two colours).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    S,
    T,
}

impl Gen {
    /// The other generator (the image under `tau`).
    pub fn swap(self) -> Gen {
        match self {
            Gen::S => Gen::T,
            Gen::T => Gen::S,
        }
    }

    /// Single-letter name, `s` or `t`.
    pub fn letter(self) -> char {
        match self {
            Gen::S => 's',
            Gen::T => 't',
        }
    }

    /// Parses `s` or `t`.
    pub fn from_letter(c: char) -> Option<Gen> {
        match c {
            's' => Some(Gen::S),
            't' => Some(Gen::T),
            _ => None,
        }
    }
}

/// A monomial `a_s^s * a_t^t`.
///
/// Monomials are ordered by total degree first, then by the `a_s` exponent, which
/// fixes a canonical term order for printing and serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    pub s: u32,
    pub t: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { s: 0, t: 0 };

    pub fn new(s: u32, t: u32) -> Mono {
        Mono { s, t }
    }

    /// Internal degree `2 (s + t)`.
    pub fn degree(self) -> i32 {
        2 * (self.s + self.t) as i32
    }

    fn exp(self, g: Gen) -> u32 {
        match g {
            Gen::S => self.s,
            Gen::T => self.t,
        }
    }

    fn mul(self, other: Mono) -> Mono {
        Mono::new(self.s + other.s, self.t + other.t)
    }

    fn swapped(self) -> Mono {
        Mono::new(self.t, self.s)
    }

    /// All monomials of internal degree `d` (empty for odd or negative `d`).
    pub fn of_degree(d: i32) -> Vec<Mono> {
        if d < 0 || d % 2 != 0 {
            return Vec::new();
        }
        let n = (d / 2) as u32;
        (0..=n).rev().map(|s| Mono::new(s, n - s)).collect()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.s + self.t, self.s).cmp(&(other.s + other.t, other.s))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `a_s`, `a_t` with exact rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is mathematical
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Poly {
        Poly::term(c, Mono::ONE)
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(qi(n))
    }

    /// The single term `c * m`.
    pub fn term(c: Q, m: Mono) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn monomial(m: Mono) -> Poly {
        Poly::term(Q::one(), m)
    }

    /// The root `a_g`.
    pub fn alpha(g: Gen) -> Poly {
        match g {
            Gen::S => Poly::monomial(Mono::new(1, 0)),
            Gen::T => Poly::monomial(Mono::new(0, 1)),
        }
    }

    /// `a_s - a_t`, the basic `tau`-anti-invariant.
    pub fn alpha_diff() -> Poly {
        &Poly::alpha(Gen::S) - &Poly::alpha(Gen::T)
    }

    /// `a_s + a_t`.
    pub fn alpha_sum() -> Poly {
        &Poly::alpha(Gen::S) + &Poly::alpha(Gen::T)
    }

    /// `a_s * a_t`.
    pub fn alpha_prod() -> Poly {
        Poly::monomial(Mono::new(1, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    /// Iterates over `(monomial, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial `m` (zero if absent).
    pub fn coeff(&self, m: Mono) -> Q {
        self.terms.get(&m).cloned().unwrap_or_else(Q::zero)
    }

    /// The constant coefficient, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Multiplies by a monomial.
    pub fn mul_mono(&self, m: Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Internal degree if the polynomial is nonzero and homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        if it.all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Whether all monomials share one degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Largest monomial degree (None for zero).
    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Action of the simple reflection `g`: `g(a_g) = -a_g`, the other root fixed.
    pub fn act(&self, g: Gen) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.exp(g) % 2 == 1 { -c } else { c.clone() };
                    (*m, c)
                })
                .collect(),
        }
    }

    /// The diagram automorphism: swaps `a_s` and `a_t`.
    pub fn tau(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.swapped(), c.clone())).collect() }
    }

    pub fn is_tau_invariant(&self) -> bool {
        self.tau() == *self
    }

    pub fn is_invariant(&self, g: Gen) -> bool {
        self.terms.keys().all(|m| m.exp(g) % 2 == 0)
    }

    /// Demazure operator `(f - g(f)) / a_g`, computed by exact division.
    pub fn demazure(&self, g: Gen) -> Poly {
        let num = self - &self.act(g);
        num.div_exact(&Poly::alpha(g)).expect("f - g(f) is always divisible by the root a_g")
    }

    /// `(Sym f, Alt f) = ((f + tau f)/2, (f - tau f)/2)`.
    pub fn sym_alt(&self) -> (Poly, Poly) {
        let t = self.tau();
        let half = q(1, 2);
        ((self + &t).scale(&half), (self - &t).scale(&half))
    }

    /// Writes `f = a + b * a_g` with `a`, `b` both fixed by `g`.
    ///
    /// `a = (f + g f)/2` collects the monomials of even `a_g`-exponent and
    /// `b = demazure(g, f)/2` the odd ones with one root removed.  This is the
    /// step used to normalize the right action on Bott-Samelson bimodules, so it
    /// is done monomial-by-monomial rather than through a general division.
    pub fn split_over_invariants(&self, g: Gen) -> (Poly, Poly) {
        let mut a = Poly::zero();
        let mut b = Poly::zero();
        for (m, c) in &self.terms {
            if m.exp(g) % 2 == 0 {
                a.terms.insert(*m, c.clone());
            } else {
                let mut m2 = *m;
                match g {
                    Gen::S => m2.s -= 1,
                    Gen::T => m2.t -= 1,
                }
                b.terms.insert(m2, c.clone());
            }
        }
        (a, b)
    }

    /// Exact division: returns `self / d` if `d` divides `self`, otherwise an error.
    ///
    /// Multivariate long division with respect to the lexicographic order
    /// `a_s > a_t`; since `R` is a UFD the quotient is unique when it exists.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        if d.is_zero() {
            return Err(Error::Arithmetic("division by the zero polynomial".to_string()));
        }
        let lead = |p: &Poly| -> Option<(Mono, Q)> {
            p.terms.iter().max_by(|a, b| (a.0.s, a.0.t).cmp(&(b.0.s, b.0.t))).map(|(m, c)| (*m, c.clone()))
        };
        let (dm, dc) = lead(d).expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = lead(&rem) {
            if rm.s < dm.s || rm.t < dm.t {
                return Err(Error::Arithmetic(alloc::format!("{} is not divisible by {}", self, d)));
            }
            let m = Mono::new(rm.s - dm.s, rm.t - dm.t);
            let c = &rc / &dc;
            let t = Poly::term(c, m);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Parses the text syntax: variables `as`, `at`, operators `+ - * ^`,
    /// integer and `p/q` literals and parentheses, e.g. `(as - at)^2`.
    pub fn parse(text: &str) -> Result<Poly> {
        let mut p = PolyParser { src: text.as_bytes(), pos: 0 };
        let v = p.sum()?;
        p.ws();
        if p.pos != p.src.len() {
            return Err(Error::Syntax {
                offset: p.pos,
                message: "unexpected trailing input in polynomial".to_string(),
            });
        }
        Ok(v)
    }
}

impl fmt::Display for Poly {
    /// Canonical text form, readable back by [`Poly::parse`]; highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || *m == Mono::ONE {
                factors.push(a.to_string());
            }
            for (name, e) in [("as", m.s), ("at", m.t)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(alloc::format!("{}^{}", name, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: message.to_string() })
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.product()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let e = self.integer()?;
            let e = e
                .to_u32()
                .filter(|e| *e <= 64)
                .ok_or(Error::Syntax { offset: self.pos, message: "exponent out of range".to_string() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    Ok(Poly::constant(Q::new(n, d)))
                } else {
                    Ok(Poly::constant(Q::from_integer(n)))
                }
            }
            Some(b'a') => {
                let rest = &self.src[self.pos..];
                let v = if rest.starts_with(b"as") {
                    Gen::S
                } else if rest.starts_with(b"at") {
                    Gen::T
                } else {
                    return self.err("unknown variable (expected `as` or `at`)");
                };
                self.pos += 2;
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    return self.err("unknown variable (expected `as` or `at`)");
                }
                Ok(Poly::alpha(v))
            }
            _ => self.err("expected a polynomial atom"),
        }
    }
}

/// A Laurent polynomial in `v` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentInt {
    pub fn zero() -> LaurentInt {
        LaurentInt::default()
    }

    pub fn one() -> LaurentInt {
        LaurentInt::monomial(1, 0)
    }

    /// `c * v^k`.
    pub fn monomial(c: i64, k: i32) -> LaurentInt {
        let mut out = LaurentInt::zero();
        out.add_term(k, c);
        out
    }

    /// Builds from `(power, coefficient)` pairs.
    pub fn from_terms(terms: &[(i32, i64)]) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (k, c) in terms {
            out.add_term(*k, *c);
        }
        out
    }

    pub fn add_term(&mut self, k: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i32) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    /// `(power, coefficient)` pairs in increasing power.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, *c))
    }

    pub fn min_power(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Drops all terms of power greater than `d`.
    pub fn truncate(&self, d: i32) -> LaurentInt {
        LaurentInt { coeffs: self.coeffs.iter().filter(|(k, _)| **k <= d).map(|(k, c)| (*k, *c)).collect() }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> LaurentInt {
        LaurentInt { coeffs: self.coeffs.iter().map(|(p, c)| (p + k, *c)).collect() }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> LaurentInt {
        LaurentInt { coeffs: self.coeffs.iter().map(|(p, c)| (-p, *c)).collect() }
    }

    pub fn scale(&self, c: i64) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (k, x) in &self.coeffs {
            out.add_term(*k, x * c);
        }
        out
    }

    /// Evaluates at `v = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Series expansion of `1 / ((1 - v^2)(1 - v^4))` up to and including `v^d`:
    /// the Hilbert series of the invariant ring `R^tau`.
    pub fn rtau_hilbert(d: i32) -> LaurentInt {
        let mut out = LaurentInt::zero();
        let mut k = 0;
        while k <= d {
            // number of (i, j) with 2i + 4j = k
            if k % 2 == 0 {
                out.add_term(k, (k / 4 + 1) as i64);
            }
            k += 2;
        }
        out
    }

    /// Parses text like `v + v^-1`, `2v^3 - 1`, `3*v^2`.
    pub fn parse(text: &str) -> Result<LaurentInt> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let b = s.as_bytes();
        let mut out = LaurentInt::zero();
        let mut pos = 0;
        let err = |pos: usize, m: &str| Error::Syntax { offset: pos, message: m.to_string() };
        if b.is_empty() {
            return Err(err(0, "empty Laurent polynomial"));
        }
        while pos < b.len() {
            let mut sign = 1i64;
            if b[pos] == b'+' || b[pos] == b'-' {
                if b[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(err(pos, "expected '+' or '-'"));
            }
            let start = pos;
            while pos < b.len() && b[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: Option<i64> =
                if start < pos { Some(s[start..pos].parse().map_err(|_| err(start, "bad integer"))?) } else { None };
            if pos < b.len() && b[pos] == b'*' {
                pos += 1;
            }
            let mut power = 0;
            if pos < b.len() && b[pos] == b'v' {
                pos += 1;
                power = 1;
                if pos < b.len() && b[pos] == b'^' {
                    pos += 1;
                    let ps = pos;
                    if pos < b.len() && b[pos] == b'-' {
                        pos += 1;
                    }
                    while pos < b.len() && b[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    power = s[ps..pos].parse().map_err(|_| err(ps, "bad exponent"))?;
                }
            } else if coeff.is_none() {
                return Err(err(pos, "expected a coefficient or `v`"));
            }
            out.add_term(power, sign * coeff.unwrap_or(1));
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentInt {
    /// Highest power first, e.g. `v+v^-1`, `2v^4+3v^2+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            if *c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            if *k == 0 {
                write!(f, "{}", a)?;
                continue;
            }
            if a != 1 {
                write!(f, "{}", a)?;
            }
            if *k == 1 {
                write!(f, "v")?;
            } else {
                write!(f, "v^{}", k)?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, *c);
        }
        out
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        self.scale(-1)
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &rhs.coeffs {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn act_simple_examples() {
        assert_eq!(p("as").act(Gen::S), p("-as"));
        assert_eq!(p("at").act(Gen::S), p("at"));
        assert_eq!(p("as^2 + as*at").act(Gen::S), p("as^2 - as*at"));
    }

    #[test]
    fn demazure_examples() {
        assert_eq!(p("as").demazure(Gen::S), p("2"));
        assert_eq!(p("at").demazure(Gen::S), Poly::zero());
        assert_eq!(p("as*at").demazure(Gen::S), p("2*at"));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(p("as").tau(), p("at"));
        assert_eq!(p("as + at").tau(), p("as + at"));
        assert_eq!(p("3*as^2*at").tau(), p("3*as*at^2"));
    }

    #[test]
    fn sym_alt_examples() {
        assert_eq!(p("as").sym_alt(), (p("1/2*as + 1/2*at"), p("1/2*as - 1/2*at")));
        assert_eq!(p("as*at").sym_alt(), (p("as*at"), Poly::zero()));
        assert_eq!(p("as - at").sym_alt(), (Poly::zero(), p("as - at")));
    }

    #[test]
    fn split_examples() {
        assert_eq!(p("as").split_over_invariants(Gen::S), (Poly::zero(), p("1")));
        assert_eq!(p("at").split_over_invariants(Gen::S), (p("at"), Poly::zero()));
        assert_eq!(p("as^2").split_over_invariants(Gen::S), (p("as^2"), Poly::zero()));
    }

    #[test]
    fn split_matches_demazure() {
        let f = p("as^3*at - 2*as^2 + 5*as*at^2 + 7");
        for g in [Gen::S, Gen::T] {
            let (a, b) = f.split_over_invariants(g);
            assert_eq!(a, (&f + &f.act(g)).scale(&q(1, 2)));
            assert_eq!(b, f.demazure(g).scale(&q(1, 2)));
        }
    }

    #[test]
    fn div_exact_works_and_rejects() {
        let d = p("as - at");
        let f = &p("as^2 + 3*at + as*at") * &d;
        assert_eq!(f.div_exact(&d).unwrap(), p("as^2 + 3*at + as*at"));
        assert!(p("as^2 + at").div_exact(&d).is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["(as - at)^2", "1/2*as - 3", "0", "-as*at^3 + 2/3"] {
            let x = p(s);
            assert_eq!(Poly::parse(&x.to_string()).unwrap(), x);
        }
        assert_eq!(p("(as-at)^2").to_string(), "as^2 - 2*as*at + at^2");
    }

    #[test]
    fn parse_errors_have_offsets() {
        match Poly::parse("as + ax") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn laurent_display_parse() {
        let y = LaurentInt::from_terms(&[(1, 1), (-1, 1)]);
        assert_eq!(y.to_string(), "v+v^-1");
        assert_eq!(LaurentInt::parse("v + v^-1").unwrap(), y);
        assert_eq!(LaurentInt::parse("2v^4+3*v^2+1").unwrap().to_string(), "2v^4+3v^2+1");
    }

    #[test]
    fn rtau_hilbert_series_prefix() {
        // 1 + v^2 + 2v^4 + 2v^6 + 3v^8
        assert_eq!(LaurentInt::rtau_hilbert(8), LaurentInt::from_terms(&[(0, 1), (2, 1), (4, 2), (6, 2), (8, 3)]));
    }
}
