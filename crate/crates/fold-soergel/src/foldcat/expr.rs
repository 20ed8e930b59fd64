//! Colours, generator names and the expression AST of the folded category.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::equiv::{EqObj, Indec};
use crate::error::{Error, Result};
use crate::polyring::{Poly, Q};

/// A strand colour of the folded category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    /// Orange: the invertible object `X`.
    O,
    /// Green: `Y`, induced from a single-coloured strand.
    G,
    /// Brown: `Z`, the two-coloured strand with the crossing as structure map.
    B,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::O, Colour::G, Colour::B];

    /// Suffix letter used in generator tokens.
    pub fn letter(self) -> char {
        match self {
            Colour::O => 'o',
            Colour::G => 'g',
            Colour::B => 'b',
        }
    }

    /// Object name used in words (`X`, `Y`, `Z`).
    pub fn object_letter(self) -> char {
        match self {
            Colour::O => 'X',
            Colour::G => 'Y',
            Colour::B => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Colour> {
        match c {
            'o' => Some(Colour::O),
            'g' => Some(Colour::G),
            'b' => Some(Colour::B),
            _ => None,
        }
    }

    pub fn indecomposable(self) -> Indec {
        match self {
            Colour::O => Indec::X,
            Colour::G => Indec::Y,
            Colour::B => Indec::Z,
        }
    }

    /// Degree of the dot of this colour.
    pub fn dot_degree(self) -> i32 {
        match self {
            Colour::G => 1,
            Colour::O | Colour::B => 2,
        }
    }
}

/// A tensor word of coloured strands (an object of the free folded category).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FWord(pub Vec<Colour>);

impl FWord {
    pub fn empty() -> FWord {
        FWord(Vec::new())
    }

    pub fn of(c: &[Colour]) -> FWord {
        FWord(c.to_vec())
    }

    /// Parses `1` (empty) or a string over `X`, `Y`, `Z`.
    pub fn parse(text: &str) -> Result<FWord> {
        if text == "1" {
            return Ok(FWord::empty());
        }
        let mut v = Vec::new();
        for (i, c) in text.chars().enumerate() {
            v.push(match c {
                'X' => Colour::O,
                'Y' => Colour::G,
                'Z' => Colour::B,
                _ => {
                    return Err(Error::Syntax {
                        offset: i,
                        message: format!("unexpected {:?} in object word (use 1, X, Y, Z)", c),
                    })
                }
            });
        }
        Ok(FWord(v))
    }

    pub fn concat(&self, other: &FWord) -> FWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FWord(v)
    }

    pub fn reversed(&self) -> FWord {
        FWord(self.0.iter().rev().copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The equivariant object this word is sent to.
    pub fn eq_obj(&self) -> EqObj {
        self.0.iter().fold(EqObj::unit(), |acc, c| acc.tensor(&EqObj::indecomposable(c.indecomposable(), 0)))
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for c in &self.0 {
            write!(f, "{}", c.object_letter())?;
        }
        Ok(())
    }
}

/// Every generator of the free folded category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenName {
    DotU(Colour),
    DotD(Colour),
    Cap(Colour),
    Cup(Colour),
    MergeGGG,
    SplitGGG,
    MergeBBB,
    SplitBBB,
    /// Green on top, two brown legs.
    TriUGBB,
    TriDGBB,
    /// Brown on top, two green legs.
    TriUBGG,
    TriDBGG,
    /// Orange on top, two green legs.
    LandUOGG,
    LandDOGG,
    /// Crossing with brown then orange at the bottom.
    XBO,
    XOB,
    XGO,
    XOG,
    XOO,
    /// Bivalent vertex, green on top, brown below.
    BivGB,
    BivBG,
    /// Bivalent vertex, orange on top, green below.
    BivOG,
    BivGO,
    /// Polynomial box with a `tau`-invariant polynomial.
    Poly(Poly),
}

use Colour::{B, G, O};

impl GenName {
    /// All generators except polynomial boxes.
    pub fn all_named() -> Vec<GenName> {
        let mut v = Vec::new();
        for c in Colour::ALL {
            v.push(GenName::DotU(c));
            v.push(GenName::DotD(c));
            v.push(GenName::Cap(c));
            v.push(GenName::Cup(c));
        }
        v.extend([
            GenName::MergeGGG,
            GenName::SplitGGG,
            GenName::MergeBBB,
            GenName::SplitBBB,
            GenName::TriUGBB,
            GenName::TriDGBB,
            GenName::TriUBGG,
            GenName::TriDBGG,
            GenName::LandUOGG,
            GenName::LandDOGG,
            GenName::XBO,
            GenName::XOB,
            GenName::XGO,
            GenName::XOG,
            GenName::XOO,
            GenName::BivGB,
            GenName::BivBG,
            GenName::BivOG,
            GenName::BivGO,
        ]);
        v
    }

    /// Generators drawn "upward" (the others are their rotations), plus
    /// crossings, cups and caps.
    pub fn rotation_partner(&self) -> Option<GenName> {
        use GenName::*;
        Some(match self {
            DotU(c) => DotD(*c),
            MergeGGG => SplitGGG,
            MergeBBB => SplitBBB,
            TriUGBB => TriDGBB,
            TriUBGG => TriDBGG,
            LandUOGG => LandDOGG,
            BivGB => BivBG,
            BivOG => BivGO,
            _ => return None,
        })
    }

    /// Text token, as accepted by the parser.
    pub fn token(&self) -> String {
        use GenName::*;
        match self {
            DotU(c) => format!("dotu_{}", c.letter()),
            DotD(c) => format!("dotd_{}", c.letter()),
            Cap(c) => format!("cap_{}", c.letter()),
            Cup(c) => format!("cup_{}", c.letter()),
            MergeGGG => "merge_ggg".into(),
            SplitGGG => "split_ggg".into(),
            MergeBBB => "merge_bbb".into(),
            SplitBBB => "split_bbb".into(),
            TriUGBB => "tri_u_gbb".into(),
            TriDGBB => "tri_d_gbb".into(),
            TriUBGG => "tri_u_bgg".into(),
            TriDBGG => "tri_d_bgg".into(),
            LandUOGG => "land_u_ogg".into(),
            LandDOGG => "land_d_ogg".into(),
            XBO => "x_bo".into(),
            XOB => "x_ob".into(),
            XGO => "x_go".into(),
            XOG => "x_og".into(),
            XOO => "x_oo".into(),
            BivGB => "biv_gb".into(),
            BivBG => "biv_bg".into(),
            BivOG => "biv_og".into(),
            BivGO => "biv_go".into(),
            Poly(f) => format!("poly[{}]", f),
        }
    }

    /// Looks up a token (without the polynomial form).
    pub fn from_token(tok: &str) -> Option<GenName> {
        let alias = match tok {
            "capg" => "cap_g",
            "capo" => "cap_o",
            "capb" => "cap_b",
            "cupg" => "cup_g",
            "cupo" => "cup_o",
            "cupb" => "cup_b",
            t => t,
        };
        GenName::all_named().into_iter().find(|g| g.token() == alias)
    }

    /// `(source, target, degree)`.
    pub fn signature(&self) -> (FWord, FWord, i32) {
        use GenName::*;
        let w = FWord::of;
        match self {
            DotU(c) => (w(&[*c]), w(&[]), c.dot_degree()),
            DotD(c) => (w(&[]), w(&[*c]), c.dot_degree()),
            Cap(c) => (w(&[*c, *c]), w(&[]), 0),
            Cup(c) => (w(&[]), w(&[*c, *c]), 0),
            MergeGGG => (w(&[G, G]), w(&[G]), -1),
            SplitGGG => (w(&[G]), w(&[G, G]), -1),
            MergeBBB => (w(&[B, B]), w(&[B]), -2),
            SplitBBB => (w(&[B]), w(&[B, B]), -2),
            TriUGBB => (w(&[B, B]), w(&[G]), -1),
            TriDGBB => (w(&[G]), w(&[B, B]), -1),
            TriUBGG => (w(&[G, G]), w(&[B]), 0),
            TriDBGG => (w(&[B]), w(&[G, G]), 0),
            LandUOGG => (w(&[G, G]), w(&[O]), 0),
            LandDOGG => (w(&[O]), w(&[G, G]), 0),
            XBO => (w(&[B, O]), w(&[O, B]), 0),
            XOB => (w(&[O, B]), w(&[B, O]), 0),
            XGO => (w(&[G, O]), w(&[O, G]), 0),
            XOG => (w(&[O, G]), w(&[G, O]), 0),
            XOO => (w(&[O, O]), w(&[O, O]), 0),
            BivGB => (w(&[B]), w(&[G]), 1),
            BivBG => (w(&[G]), w(&[B]), 1),
            BivOG => (w(&[G]), w(&[O]), 1),
            BivGO => (w(&[O]), w(&[G]), 1),
            Poly(f) => (w(&[]), w(&[]), f.degree().unwrap_or(0)),
        }
    }
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// A diagram, linearized as a composite of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Gen(GenName),
    Id(FWord),
    /// `Compose(a, b)` is `a o b`: `b` is applied first.
    Compose(Box<Expr>, Box<Expr>),
    /// Horizontal concatenation.
    Tensor(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Scale(Q, Box<Expr>),
    /// A polynomial box placed in the region to the left of the diagram.
    ScalePoly(Poly, Box<Expr>),
}

impl Expr {
    pub fn gen(g: GenName) -> Expr {
        Expr::Gen(g)
    }

    pub fn id(w: &[Colour]) -> Expr {
        Expr::Id(FWord::of(w))
    }

    pub fn poly(f: Poly) -> Expr {
        Expr::Gen(GenName::Poly(f))
    }

    /// `self o other`.
    pub fn after(self, other: Expr) -> Expr {
        Expr::Compose(Box::new(self), Box::new(other))
    }

    /// `self (x) other`.
    pub fn beside(self, other: Expr) -> Expr {
        Expr::Tensor(Box::new(self), Box::new(other))
    }

    pub fn plus(self, other: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(other))
    }

    pub fn minus(self, other: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(other.negated()))
    }

    pub fn scaled(self, c: Q) -> Expr {
        Expr::Scale(c, Box::new(self))
    }

    pub fn negated(self) -> Expr {
        match self {
            Expr::Scale(c, x) => Expr::Scale(-c, x),
            other => Expr::Scale(-Q::one(), Box::new(other)),
        }
    }

    /// Composes a chain `e1 o e2 o ... o en` (the last one is applied first).
    pub fn chain(parts: Vec<Expr>) -> Expr {
        let mut it = parts.into_iter();
        let first = it.next().expect("nonempty chain");
        it.fold(first, |acc, e| acc.after(e))
    }

    /// Tensor product of a row of expressions.
    pub fn row(parts: Vec<Expr>) -> Expr {
        let mut it = parts.into_iter();
        let first = it.next().expect("nonempty row");
        it.fold(first, |acc, e| acc.beside(e))
    }

    /// Sum of terms.
    pub fn sum(parts: Vec<Expr>) -> Expr {
        let mut it = parts.into_iter();
        let first = it.next().expect("nonempty sum");
        it.fold(first, |acc, e| acc.plus(e))
    }

    /// `(source, target, degree)`, checking that the expression is well-shaped.
    pub fn shape(&self) -> Result<(FWord, FWord, i32)> {
        match self {
            Expr::Gen(GenName::Poly(f)) => {
                if !f.is_homogeneous() {
                    return Err(Error::Shape(format!("polynomial {} is not homogeneous", f)));
                }
                if !f.is_tau_invariant() {
                    return Err(Error::Shape(format!("polynomial {} is not tau-invariant", f)));
                }
                Ok((FWord::empty(), FWord::empty(), f.degree().unwrap_or(0)))
            }
            Expr::Gen(g) => Ok(g.signature()),
            Expr::Id(w) => Ok((w.clone(), w.clone(), 0)),
            Expr::Compose(a, b) => {
                let (sa, ta, da) = a.shape()?;
                let (sb, tb, db) = b.shape()?;
                if sa != tb {
                    return Err(Error::Shape(format!(
                        "composition boundary mismatch: {} is composed after a map into {}",
                        sa, tb
                    )));
                }
                Ok((sb, ta, da + db))
            }
            Expr::Tensor(a, b) => {
                let (sa, ta, da) = a.shape()?;
                let (sb, tb, db) = b.shape()?;
                Ok((sa.concat(&sb), ta.concat(&tb), da + db))
            }
            Expr::Add(a, b) => {
                let sa = a.shape()?;
                let sb = b.shape()?;
                if sa != sb {
                    return Err(Error::Shape(format!(
                        "sum of maps {} -> {} (degree {}) and {} -> {} (degree {})",
                        sa.0, sa.1, sa.2, sb.0, sb.1, sb.2
                    )));
                }
                Ok(sa)
            }
            Expr::Scale(_, a) => a.shape(),
            Expr::ScalePoly(f, a) => {
                let (s, t, d) = a.shape()?;
                if !f.is_tau_invariant() || !f.is_homogeneous() {
                    return Err(Error::Shape(format!("polynomial {} must be homogeneous and tau-invariant", f)));
                }
                Ok((s, t, d + f.degree().unwrap_or(0)))
            }
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) => 0,
            Expr::Scale(..) => 1,
            Expr::Compose(..) => 2,
            Expr::Tensor(..) | Expr::ScalePoly(..) => 3,
            Expr::Gen(_) | Expr::Id(_) => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Gen(g) => f.write_str(&g.token()),
            Expr::Id(w) => write!(f, "id({})", w),
            Expr::Compose(a, b) => {
                a.write_at(f, 2)?;
                f.write_str(" . ")?;
                b.write_at(f, 3)
            }
            Expr::Tensor(a, b) => {
                a.write_at(f, 3)?;
                f.write_str(" x ")?;
                b.write_at(f, 4)
            }
            Expr::ScalePoly(p, a) => {
                write!(f, "poly[{}] x ", p)?;
                a.write_at(f, 4)
            }
            Expr::Add(a, b) => {
                a.write_at(f, 0)?;
                match &**b {
                    Expr::Scale(c, x) if c.is_negative() => {
                        f.write_str(" - ")?;
                        let c = -c;
                        if c.is_one() {
                            x.write_at(f, 2)
                        } else {
                            write!(f, "{} * ", rational_text(&c))?;
                            x.write_at(f, 2)
                        }
                    }
                    _ => {
                        f.write_str(" + ")?;
                        b.write_at(f, 1)
                    }
                }
            }
            Expr::Scale(c, a) => {
                write!(f, "{} * ", rational_text(c))?;
                a.write_at(f, 2)
            }
        }
    }
}

/// `p/q` (or `p`) text of a rational.
pub fn rational_text(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Expr {
    /// Canonical text in the expression grammar; re-parses to an equal map.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
