//! Structure-constant export: a self-contained JSON description of the
//! truncated algebra. Degrees are integer arrays, bases are bracket-word
//! strings, constants are exact `"p/q"` strings. An export can be
//! reconstructed into a working algebra without redoing the quotient
//! computation, which is what the build cache stores.

use super::{Element, EngineError, GradedAlgebra, RootSpace};
use crate::exact::{rat_from_str, rat_to_string, Rat};
use crate::gcm::Gcm;
use crate::rootvec::RootVector;
use crate::words::{is_lyndon, standard_bracketing, Word};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceRecord {
    pub degree: Vec<i64>,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRecord {
    pub left_degree: Vec<i64>,
    pub left_index: usize,
    pub right_degree: Vec<i64>,
    pub right_index: usize,
    /// Coordinates of the bracket over the basis at the sum degree; empty
    /// when the bracket vanishes.
    pub coords: Vec<String>,
}

/// Deterministic serialisable image of a built algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraExport {
    pub matrix: Vec<Vec<i64>>,
    pub height: i64,
    pub spaces: Vec<SpaceRecord>,
    pub brackets: Vec<BracketRecord>,
}

impl GradedAlgebra {
    /// Exports dimensions, bases, and all positive structure constants
    /// within the height bound. Byte-deterministic for a given (matrix,
    /// height) pair.
    pub fn export(&self) -> Result<AlgebraExport, EngineError> {
        let degrees = self.positive_degrees();
        let mut spaces = Vec::new();
        for deg in &degrees {
            let space = self.space(deg).expect("listed degree");
            spaces.push(SpaceRecord {
                degree: deg.0.clone(),
                dim: space.dim(),
                basis: space.trees.iter().map(|t| t.render('e')).collect(),
            });
        }
        let mut brackets = Vec::new();
        for d1 in &degrees {
            for d2 in &degrees {
                if d1.height() + d2.height() > self.height() {
                    continue;
                }
                let dim1 = self.space(d1).expect("listed").dim();
                let dim2 = self.space(d2).expect("listed").dim();
                let target = d1 + d2;
                for k in 0..dim1 {
                    for l in 0..dim2 {
                        let x = self.basis_element(d1, k);
                        let y = self.basis_element(d2, l);
                        let result = self.bracket(&x, &y)?;
                        let coords = match result.coords_at(&target) {
                            None => Vec::new(),
                            Some(c) => c.iter().map(rat_to_string).collect(),
                        };
                        brackets.push(BracketRecord {
                            left_degree: d1.0.clone(),
                            left_index: k,
                            right_degree: d2.0.clone(),
                            right_index: l,
                            coords,
                        });
                    }
                }
            }
        }
        Ok(AlgebraExport {
            matrix: self.gcm().matrix().clone(),
            height: self.height(),
            spaces,
            brackets,
        })
    }
}

impl AlgebraExport {
    /// Rebuilds a working algebra: bases come from the recorded bracket
    /// words, and the recorded constants preseed the bracket cache, so no
    /// quotient computation reruns.
    pub(crate) fn reconstruct(&self) -> Result<GradedAlgebra, EngineError> {
        let gcm = Gcm::new(self.matrix.clone())?;
        let symm = gcm.symmetrize()?;
        let n = gcm.rank();
        let mut spaces = BTreeMap::new();
        for rec in &self.spaces {
            let degree = RootVector(rec.degree.clone());
            let mut words: Vec<Word> = Vec::new();
            let mut trees = Vec::new();
            for rendered in &rec.basis {
                let word = leaves_of_rendered(rendered, n)?;
                if !is_lyndon(&word) {
                    return Err(EngineError::Internal(format!(
                        "cached basis word {rendered} is not Lyndon"
                    )));
                }
                let tree = standard_bracketing(&word);
                if tree.render('e') != *rendered {
                    return Err(EngineError::Internal(format!(
                        "cached basis word {rendered} disagrees with its bracketing"
                    )));
                }
                words.push(word);
                trees.push(tree);
            }
            if words.len() != rec.dim {
                return Err(EngineError::Internal(format!(
                    "cached dimension mismatch at {degree}"
                )));
            }
            spaces.insert(degree, RootSpace { words, trees });
        }
        let mut memo = HashMap::new();
        for rec in &self.brackets {
            let d1 = RootVector(rec.left_degree.clone());
            let d2 = RootVector(rec.right_degree.clone());
            let target = &d1 + &d2;
            let coords = rec
                .coords
                .iter()
                .map(|s| rat_from_str(s))
                .collect::<Option<Vec<Rat>>>()
                .ok_or_else(|| EngineError::Internal("cached constant unparsable".into()))?;
            let elem = if coords.is_empty() || coords.iter().all(|c| c.is_zero()) {
                Element::zero(n)
            } else {
                Element::from_term(n, target, coords)
            };
            memo.insert((d1, rec.left_index, d2, rec.right_index), elem);
        }
        Ok(GradedAlgebra {
            gcm,
            symm,
            height: self.height,
            spaces,
            memo: Mutex::new(memo),
        })
    }
}

/// Extracts the leaf letters of a rendered bracket word such as
/// `[e1,[e1,e2]]`.
fn leaves_of_rendered(text: &str, n: usize) -> Result<Word, EngineError> {
    let bytes = text.as_bytes();
    let mut out: Word = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos] == b'e' {
            let start = pos + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            let idx: usize = std::str::from_utf8(&bytes[start..end])
                .unwrap()
                .parse()
                .map_err(|_| EngineError::Internal(format!("bad basis word {text}")))?;
            if idx < 1 || idx > n {
                return Err(EngineError::UnknownGenerator(format!("e{idx}")));
            }
            out.push((idx - 1) as u8);
            pos = end;
        } else {
            pos += 1;
        }
    }
    if out.is_empty() {
        return Err(EngineError::Internal(format!("empty basis word {text}")));
    }
    Ok(out)
}
