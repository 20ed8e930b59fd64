//! JSON form of bimodule maps, used for golden files and command output.
//!
//! A single Bott-Samelson map is written with its source and target words,
//! their shifts, its degree and its entries row by row; each entry is a
//! polynomial in the text form accepted by `Poly::parse`.

use fold_soergel::bimod::{Morphism, Obj, SumMor, SumObj, Vector, Word};
use fold_soergel::polyring::Poly;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `B_word[shift]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjJson {
    pub word: String,
    pub shift: i32,
}

impl ObjJson {
    pub fn from_obj(o: &Obj) -> ObjJson {
        ObjJson { word: o.word.to_string(), shift: o.shift }
    }

    pub fn to_obj(&self) -> Result<Obj, CliError> {
        let word = if self.word.is_empty() { Word::empty() } else { Word::parse(&self.word)? };
        Ok(Obj::new(word, self.shift))
    }
}

/// One map between Bott-Samelson objects; `entries[row][col]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub src: ObjJson,
    pub tgt: ObjJson,
    pub degree: i32,
    pub entries: Vec<Vec<String>>,
}

impl MorphismJson {
    pub fn from_morphism(m: &Morphism) -> MorphismJson {
        let entries = m.dense().iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect();
        MorphismJson { src: ObjJson::from_obj(&m.src), tgt: ObjJson::from_obj(&m.tgt), degree: m.degree, entries }
    }

    pub fn to_morphism(&self) -> Result<Morphism, CliError> {
        let src = self.src.to_obj()?;
        let tgt = self.tgt.to_obj()?;
        if self.entries.len() != tgt.rank() || self.entries.iter().any(|r| r.len() != src.rank()) {
            return Err(CliError::Shape(format!(
                "a map {} -> {} needs a {}x{} entry matrix",
                src,
                tgt,
                tgt.rank(),
                src.rank()
            )));
        }
        let mut cols = vec![Vector::new(); src.rank()];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, text) in row.iter().enumerate() {
                let p = Poly::parse(text)?;
                if !p.is_zero() {
                    cols[j].insert(i, p);
                }
            }
        }
        let m = Morphism::from_cols(src, tgt, self.degree, cols);
        if !m.is_consistent() {
            return Err(CliError::Shape("entries do not have the declared degree".into()));
        }
        Ok(m)
    }
}

/// A block matrix of maps between direct sums; `blocks[i][j]` maps source
/// component `j` to target component `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumMorJson {
    pub src: Vec<ObjJson>,
    pub tgt: Vec<ObjJson>,
    pub degree: i32,
    pub blocks: Vec<Vec<MorphismJson>>,
}

impl SumMorJson {
    pub fn from_sum(m: &SumMor) -> SumMorJson {
        SumMorJson {
            src: m.src.0.iter().map(ObjJson::from_obj).collect(),
            tgt: m.tgt.0.iter().map(ObjJson::from_obj).collect(),
            degree: m.degree,
            blocks: m.blocks.iter().map(|r| r.iter().map(MorphismJson::from_morphism).collect()).collect(),
        }
    }

    pub fn to_sum(&self) -> Result<SumMor, CliError> {
        let objs = |v: &[ObjJson]| v.iter().map(ObjJson::to_obj).collect::<Result<Vec<_>, _>>().map(SumObj);
        let src = objs(&self.src)?;
        let tgt = objs(&self.tgt)?;
        let blocks = self
            .blocks
            .iter()
            .map(|r| r.iter().map(|b| b.to_morphism().map(Some)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SumMor::from_blocks(src, tgt, self.degree, blocks)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fold_soergel::bimod::gens;
    use fold_soergel::polyring::Gen;

    #[test]
    fn morphism_roundtrip() {
        for m in [gens::merge(Gen::S), gens::dotu(Gen::T), gens::crossing(Gen::S, Gen::T).unwrap()] {
            let j = MorphismJson::from_morphism(&m);
            let text = serde_json::to_string(&j).unwrap();
            let back: MorphismJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_morphism().unwrap(), m);
        }
    }

    #[test]
    fn rejects_wrong_shape() {
        let mut j = MorphismJson::from_morphism(&gens::merge(Gen::S));
        j.entries.pop();
        assert!(matches!(j.to_morphism(), Err(CliError::Shape(_))));
    }
}
