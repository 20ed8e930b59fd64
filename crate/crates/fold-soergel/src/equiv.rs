//! The `Z/2`-equivariantization of the two-colour category.
//!
//! An equivariant object is a direct sum `M` together with a degree-0 map
//! `f_tau : tau(M) -> M` satisfying `f_tau o tau(f_tau) = id`.  An equivariant
//! morphism `T : (M, f) -> (N, g)` satisfies `T o f = g o tau(T)`.
//!
//! `tau` acts on direct sums positionally: component `i` of `tau(M)` is `tau`
//! of component `i` of `M`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::bimod::{gens, Morphism, Obj, SumMor, SumObj};
use crate::error::{Error, Result};
use crate::polyring::{Gen, Q};

/// An equivariant object `(M, f_tau)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqObj {
    pub underlying: SumObj,
    pub ftau: SumMor,
}

/// The five indecomposable objects (up to shift).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indec {
    One,
    X,
    Y,
    Z,
    XZ,
}

impl Indec {
    pub const ALL: [Indec; 5] = [Indec::One, Indec::X, Indec::Y, Indec::Z, Indec::XZ];

    pub fn name(self) -> &'static str {
        match self {
            Indec::One => "1",
            Indec::X => "X",
            Indec::Y => "Y",
            Indec::Z => "Z",
            Indec::XZ => "XZ",
        }
    }

    pub fn from_name(s: &str) -> Result<Indec> {
        match s {
            "1" | "One" => Ok(Indec::One),
            "X" => Ok(Indec::X),
            "Y" => Ok(Indec::Y),
            "Z" => Ok(Indec::Z),
            "XZ" => Ok(Indec::XZ),
            _ => Err(Error::Unknown(format!("indecomposable {:?}", s))),
        }
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn crossing_ts() -> Morphism {
    gens::crossing(Gen::T, Gen::S).expect("two colours")
}

impl EqObj {
    /// Builds and validates an equivariant object.
    pub fn new(underlying: SumObj, ftau: SumMor) -> Result<EqObj> {
        let e = EqObj { underlying, ftau };
        e.validate()?;
        Ok(e)
    }

    /// Checks shapes, degree 0, blockwise bimodule maps and `f o tau(f) = id`.
    pub fn validate(&self) -> Result<()> {
        if self.ftau.src != self.underlying.tau() || self.ftau.tgt != self.underlying {
            return Err(Error::Invalid("structure map must go from tau(M) to M".into()));
        }
        if self.ftau.degree != 0 {
            return Err(Error::Invalid("structure map must have degree 0".into()));
        }
        if !self.ftau.check_blocks() {
            return Err(Error::Invalid("structure map is not a bimodule map".into()));
        }
        let sq = self.ftau.compose(&self.ftau.tau())?;
        if !sq.is_identity() {
            return Err(Error::Invalid("structure map does not square to the identity".into()));
        }
        Ok(())
    }

    /// The monoidal unit `(R, id)`.
    pub fn unit() -> EqObj {
        EqObj::indecomposable(Indec::One, 0)
    }

    /// One of the five indecomposables, shifted by `shift`.
    pub fn indecomposable(name: Indec, shift: i32) -> EqObj {
        let unit = Obj::new(Obj::unit().word, shift);
        let bs = Obj::new(Obj::of(&[Gen::S]).word, shift);
        let bt = Obj::new(Obj::of(&[Gen::T]).word, shift);
        let bst = Obj::new(Obj::of(&[Gen::S, Gen::T]).word, shift);
        match name {
            Indec::One => {
                EqObj { underlying: SumObj::single(unit.clone()), ftau: SumMor::single(Morphism::identity(unit)) }
            }
            Indec::X => EqObj {
                underlying: SumObj::single(unit.clone()),
                ftau: SumMor::single(Morphism::identity(unit).scale(&-Q::one())),
            },
            Indec::Y => {
                let und = SumObj(vec![bs.clone(), bt.clone()]);
                let ftau = SumMor::from_blocks(
                    und.tau(),
                    und.clone(),
                    0,
                    vec![vec![None, Some(Morphism::identity(bs))], vec![Some(Morphism::identity(bt)), None]],
                )
                .expect("Y structure map shapes");
                EqObj { underlying: und, ftau }
            }
            Indec::Z | Indec::XZ => {
                let sign = if name == Indec::Z { Q::one() } else { -Q::one() };
                let x = crossing_ts().reshift(shift, shift).scale(&sign);
                EqObj { underlying: SumObj::single(bst), ftau: SumMor::single(x) }
            }
        }
    }

    /// `(M, f) (x) (N, g) = (M (x) N, f (x) g)`.
    pub fn tensor(&self, other: &EqObj) -> EqObj {
        EqObj { underlying: self.underlying.tensor(&other.underlying), ftau: self.ftau.tensor(&other.ftau) }
    }

    /// Shifts every component by `k`.
    pub fn shifted(&self, k: i32) -> EqObj {
        let underlying = self.underlying.shifted(k);
        let ftau = self.ftau.reshift(underlying.tau(), underlying.clone()).expect("shifting keeps shapes");
        EqObj { underlying, ftau }
    }

    /// Equivariant direct sum.
    pub fn direct_sum(&self, other: &EqObj) -> EqObj {
        let underlying = self.underlying.direct_sum(&other.underlying);
        let ftau = block_diag(&self.ftau, &other.ftau);
        EqObj { underlying, ftau }
    }

    pub fn identity(&self) -> EqMor {
        EqMor { src: self.clone(), tgt: self.clone(), map: SumMor::identity(self.underlying.clone()) }
    }
}

/// Block-diagonal sum of two maps.
pub fn block_diag(a: &SumMor, b: &SumMor) -> SumMor {
    let src = a.src.direct_sum(&b.src);
    let tgt = a.tgt.direct_sum(&b.tgt);
    let degree = a.degree;
    let mut out = SumMor::zero(src, tgt, degree);
    for (i, r) in a.blocks.iter().enumerate() {
        for (j, m) in r.iter().enumerate() {
            out.blocks[i][j] = m.clone();
        }
    }
    let (ri, rj) = (a.tgt.len(), a.src.len());
    for (i, r) in b.blocks.iter().enumerate() {
        for (j, m) in r.iter().enumerate() {
            let mut m = m.clone();
            if m.is_zero() {
                m.degree = degree;
            }
            out.blocks[ri + i][rj + j] = m;
        }
    }
    out
}

/// A morphism of equivariant objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqMor {
    pub src: EqObj,
    pub tgt: EqObj,
    pub map: SumMor,
}

impl EqMor {
    /// Wraps `map`, checking shapes and the intertwining square.
    pub fn new(src: EqObj, tgt: EqObj, map: SumMor) -> Result<EqMor> {
        let m = EqMor { src, tgt, map };
        m.validate()?;
        Ok(m)
    }

    /// Wraps `map` without checking equivariance (shapes are still checked).
    pub fn new_unchecked(src: EqObj, tgt: EqObj, map: SumMor) -> Result<EqMor> {
        if map.src != src.underlying || map.tgt != tgt.underlying {
            return Err(Error::Shape("map does not match the equivariant objects".into()));
        }
        Ok(EqMor { src, tgt, map })
    }

    pub fn degree(&self) -> i32 {
        self.map.degree
    }

    /// Whether `T o f_src = f_tgt o tau(T)`.
    pub fn is_equivariant(&self) -> bool {
        match (self.map.compose(&self.src.ftau), self.tgt.ftau.compose(&self.map.tau())) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.map.src != self.src.underlying || self.map.tgt != self.tgt.underlying {
            return Err(Error::Shape("map does not match the equivariant objects".into()));
        }
        if !self.is_equivariant() {
            return Err(Error::Invalid("map does not intertwine the structure maps".into()));
        }
        Ok(())
    }

    pub fn compose(&self, f: &EqMor) -> Result<EqMor> {
        if self.src.underlying != f.tgt.underlying {
            return Err(Error::Shape(format!(
                "cannot compose: source {} does not match target {}",
                self.src.underlying, f.tgt.underlying
            )));
        }
        Ok(EqMor { src: f.src.clone(), tgt: self.tgt.clone(), map: self.map.compose(&f.map)? })
    }

    pub fn tensor(&self, g: &EqMor) -> EqMor {
        EqMor { src: self.src.tensor(&g.src), tgt: self.tgt.tensor(&g.tgt), map: self.map.tensor(&g.map) }
    }

    pub fn add(&self, other: &EqMor) -> Result<EqMor> {
        Ok(EqMor { src: self.src.clone(), tgt: self.tgt.clone(), map: self.map.add(&other.map)? })
    }

    pub fn sub(&self, other: &EqMor) -> Result<EqMor> {
        Ok(EqMor { src: self.src.clone(), tgt: self.tgt.clone(), map: self.map.sub(&other.map)? })
    }

    pub fn scale(&self, c: &Q) -> EqMor {
        EqMor { src: self.src.clone(), tgt: self.tgt.clone(), map: self.map.scale(c) }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }
}

/// Induction `Ind(M) = (M (+) tau M, block swap)`.
pub fn induce(m: &SumObj) -> EqObj {
    let k = m.len();
    let tm = m.tau();
    let underlying = m.direct_sum(&tm);
    let mut ftau = SumMor::zero(underlying.tau(), underlying.clone(), 0);
    for i in 0..k {
        // target M_i <- source component k + i, which is tau(tau M_i) = M_i
        ftau.blocks[i][k + i] = Morphism::identity(m.0[i].clone());
        ftau.blocks[k + i][i] = Morphism::identity(tm.0[i].clone());
    }
    EqObj { underlying, ftau }
}

/// Restriction forgets the structure map.
pub fn restrict(e: &EqObj) -> SumObj {
    e.underlying.clone()
}

/// `Phi(phi) = (phi, f_N o tau(phi)) : Ind(M) -> N` for `phi : M -> Res N`.
pub fn adjunction_phi(phi: &SumMor, n: &EqObj) -> Result<EqMor> {
    if phi.tgt != n.underlying {
        return Err(Error::Shape("phi must land in the restriction of N".into()));
    }
    let m = phi.src.clone();
    let second = n.ftau.compose(&phi.tau())?;
    let src = induce(&m);
    let map = hconcat(phi, &second)?;
    EqMor::new(src, n.clone(), map)
}

/// `Psi(psi) = psi o (inclusion of M)`, the inverse of [`adjunction_phi`].
pub fn adjunction_psi(psi: &EqMor, m: &SumObj) -> Result<SumMor> {
    let k = m.len();
    if psi.src.underlying.len() != 2 * k || psi.src.underlying.0[..k] != m.0[..] {
        return Err(Error::Shape("psi must start at Ind(M)".into()));
    }
    Ok(columns(&psi.map, 0, k))
}

/// `Phi'(phi) = (phi ; tau(phi o f_N)) : N -> Ind(M)` for `phi : Res N -> M`.
pub fn adjunction_phi_prime(phi: &SumMor, n: &EqObj) -> Result<EqMor> {
    if phi.src != n.underlying {
        return Err(Error::Shape("phi must start at the restriction of N".into()));
    }
    let second = phi.compose(&n.ftau)?.tau();
    let tgt = induce(&phi.tgt);
    let map = vconcat(phi, &second)?;
    EqMor::new(n.clone(), tgt, map)
}

/// `Psi'(psi) = (projection onto M) o psi`, the inverse of [`adjunction_phi_prime`].
pub fn adjunction_psi_prime(psi: &EqMor, m: &SumObj) -> Result<SumMor> {
    let k = m.len();
    if psi.tgt.underlying.len() != 2 * k || psi.tgt.underlying.0[..k] != m.0[..] {
        return Err(Error::Shape("psi must land in Ind(M)".into()));
    }
    Ok(rows(&psi.map, 0, k))
}

/// Splitting maps `iota : E -> Ind(Res E)` and `p : Ind(Res E) -> E` with
/// `p o iota = 2 id`.
pub fn splitting_maps(e: &EqObj) -> Result<(EqMor, EqMor)> {
    let id = SumMor::identity(e.underlying.clone());
    let p = adjunction_phi(&id, e)?;
    let iota = adjunction_phi_prime(&id, e)?;
    Ok((iota, p))
}

/// `[a | b]`: two maps with the same target side by side.
pub fn hconcat(a: &SumMor, b: &SumMor) -> Result<SumMor> {
    if a.tgt != b.tgt || a.degree != b.degree {
        return Err(Error::Shape("hconcat needs equal targets and degrees".into()));
    }
    let src = a.src.direct_sum(&b.src);
    let mut out = SumMor::zero(src, a.tgt.clone(), a.degree);
    for i in 0..a.tgt.len() {
        for j in 0..a.src.len() {
            out.blocks[i][j] = a.blocks[i][j].clone();
        }
        for j in 0..b.src.len() {
            out.blocks[i][a.src.len() + j] = b.blocks[i][j].clone();
        }
    }
    Ok(out)
}

/// `[a ; b]`: two maps with the same source stacked.
pub fn vconcat(a: &SumMor, b: &SumMor) -> Result<SumMor> {
    if a.src != b.src || a.degree != b.degree {
        return Err(Error::Shape("vconcat needs equal sources and degrees".into()));
    }
    let tgt = a.tgt.direct_sum(&b.tgt);
    let mut out = SumMor::zero(a.src.clone(), tgt, a.degree);
    for j in 0..a.src.len() {
        for i in 0..a.tgt.len() {
            out.blocks[i][j] = a.blocks[i][j].clone();
        }
        for i in 0..b.tgt.len() {
            out.blocks[a.tgt.len() + i][j] = b.blocks[i][j].clone();
        }
    }
    Ok(out)
}

/// Columns `from..to` of a block matrix.
pub fn columns(m: &SumMor, from: usize, to: usize) -> SumMor {
    let src = SumObj(m.src.0[from..to].to_vec());
    let blocks: Vec<Vec<Morphism>> = m.blocks.iter().map(|r| r[from..to].to_vec()).collect();
    SumMor { src, tgt: m.tgt.clone(), degree: m.degree, blocks }
}

/// Rows `from..to` of a block matrix.
pub fn rows(m: &SumMor, from: usize, to: usize) -> SumMor {
    let tgt = SumObj(m.tgt.0[from..to].to_vec());
    SumMor { src: m.src.clone(), tgt, degree: m.degree, blocks: m.blocks[from..to].to_vec() }
}

/// `Ind` on morphisms: `diag(a, tau a)`.
pub fn induce_mor(a: &SumMor) -> SumMor {
    block_diag(a, &a.tau())
}

/// The canonical isomorphism `X (x) Y -> Y`, `diag(1, -1)`, and its inverse.
pub fn x_tensor_y_iso() -> Result<(EqMor, EqMor)> {
    let xy = EqObj::indecomposable(Indec::X, 0).tensor(&EqObj::indecomposable(Indec::Y, 0));
    let y = EqObj::indecomposable(Indec::Y, 0);
    let bs = Obj::of(&[Gen::S]);
    let bt = Obj::of(&[Gen::T]);
    let d = SumMor::from_blocks(
        xy.underlying.clone(),
        y.underlying.clone(),
        0,
        vec![vec![Some(Morphism::identity(bs)), None], vec![None, Some(Morphism::identity(bt).scale(&-Q::one()))]],
    )?;
    let inv_map = SumMor { src: d.tgt.clone(), tgt: d.src.clone(), degree: 0, blocks: d.blocks.clone() };
    let fwd = EqMor::new(xy.clone(), y.clone(), d)?;
    let inv = EqMor::new(y, xy, inv_map)?;
    Ok((fwd, inv))
}
