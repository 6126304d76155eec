//! The truncated algebra: graded bases of the upper nilpotent part as a
//! quotient of the free Lie algebra on the `e_i` by the ideal generated by
//! the Serre relators, mirrored to the lower part by the Chevalley
//! involution, together with the Cartan subalgebra (coroot basis) and the
//! derivations `d_i` acting by the i-th height coordinate.
//!
//! Construction is degree by degree up to the height bound: candidate
//! standard bracketings of Lyndon words are echelonised against the ideal
//! component, the lexicographically earliest survivors become the basis of
//! the root space, and the left-multiplication maps `[e_i, -]` are expressed
//! in those bases. Every later bracket evaluation reduces to those maps by
//! Jacobi rewriting, so the expensive tensor-algebra arithmetic is confined
//! to the build.

mod auto;
mod bracket;
mod element;
mod export;
mod parser;
mod peterson;

pub use element::{Element, Homogeneity};
pub use export::{AlgebraExport, BracketRecord, SpaceRecord};
pub use parser::parse_element;
pub use peterson::{peterson_multiplicity, PetersonTable};

use crate::exact::{Int, Rat};
use crate::gcm::{Gcm, GcmError, Symmetrization};
use crate::linalg::{IntEchelon, RatSpan};
use crate::roots::RootError;
use crate::rootvec::RootVector;
use crate::words::{
    lyndon_words, standard_bracketing, tensor_commutator, tree_tensor, BracketTree, TensorSpace,
    Word,
};
use num::Zero;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("resource limit exceeded at degree {degree}: {detail}")]
    ResourceLimit { degree: RootVector, detail: String },
    #[error("bracket degree {degree} exceeds the height bound {height}")]
    TruncationExceeded { degree: RootVector, height: i64 },
    #[error("degree {degree} exceeds the computed height range {height}")]
    HeightExceedsTruncation { degree: RootVector, height: i64 },
    #[error("zero element has no degree data")]
    ZeroElement,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("multiplicity recursion denominator vanished at degree {0}")]
    DenominatorZero(RootVector),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Gcm(#[from] GcmError),
}

/// Resource guards for the build.
#[derive(Debug, Clone)]
pub struct BuildOptions {
    /// Cap on the number of Lyndon candidates in one degree.
    pub max_candidates: usize,
    /// Cap on the dimension of one tensor component.
    pub max_tensor_dim: usize,
    /// Cap on the bit size of echelon coefficients.
    pub max_coeff_bits: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_candidates: 100_000,
            max_tensor_dim: 2_000_000,
            max_coeff_bits: 65_536,
        }
    }
}

/// Basis data of one positive root space.
#[derive(Debug, Clone)]
pub struct RootSpace {
    /// Lyndon words whose standard-bracketing cosets form the basis.
    pub words: Vec<Word>,
    /// The corresponding bracket trees.
    pub trees: Vec<BracketTree>,
}

impl RootSpace {
    pub fn dim(&self) -> usize {
        self.words.len()
    }
}

type BracketKey = (RootVector, usize, RootVector, usize);

/// The truncated algebra, immutable after construction. Bracket results of
/// basis pairs are cached behind a mutex, so shared references can be used
/// from several threads.
pub struct GradedAlgebra {
    gcm: Gcm,
    symm: Symmetrization,
    height: i64,
    spaces: BTreeMap<RootVector, RootSpace>,
    memo: Mutex<HashMap<BracketKey, Element>>,
}

impl GradedAlgebra {
    /// Builds the algebra up to root height `height`.
    pub fn build(a: &Gcm, s: &Symmetrization, height: i64) -> Result<Self, EngineError> {
        Self::build_with_options(a, s, height, &BuildOptions::default())
    }

    pub fn build_with_options(
        a: &Gcm,
        s: &Symmetrization,
        height: i64,
        opts: &BuildOptions,
    ) -> Result<Self, EngineError> {
        assert!(height >= 1, "height bound must be at least 1");
        let n = a.rank();
        let mut tensor_spaces: BTreeMap<RootVector, TensorSpace> = BTreeMap::new();
        let mut ideals: BTreeMap<RootVector, IntEchelon> = BTreeMap::new();
        let mut basis_tensors: BTreeMap<RootVector, Vec<Vec<Int>>> = BTreeMap::new();
        let mut spaces: BTreeMap<RootVector, RootSpace> = BTreeMap::new();
        let mut memo: HashMap<BracketKey, Element> = HashMap::new();

        // Serre relators (ad e_i)^{1-a_ij} e_j, grouped by multidegree
        let mut relators: BTreeMap<RootVector, Vec<BracketTree>> = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let power = 1 - a.entry(i, j);
                let mut deg = vec![0i64; n];
                deg[i] = power;
                deg[j] += 1;
                let deg = RootVector(deg);
                if deg.height() > height {
                    continue;
                }
                let mut tree = BracketTree::Leaf(j as u8);
                for _ in 0..power {
                    tree = BracketTree::Node(Box::new(BracketTree::Leaf(i as u8)), Box::new(tree));
                }
                relators.entry(deg).or_default().push(tree);
            }
        }

        for h in 1..=height {
            for deg in compositions(n, h) {
                let ts = TensorSpace::new(&deg);
                if ts.dim() > opts.max_tensor_dim {
                    return Err(EngineError::ResourceLimit {
                        degree: deg,
                        detail: format!("tensor dimension {}", ts.dim()),
                    });
                }
                tensor_spaces.insert(deg.clone(), ts);
                if h == 1 {
                    let i = deg.support()[0];
                    spaces.insert(
                        deg.clone(),
                        RootSpace {
                            words: vec![vec![i as u8]],
                            trees: vec![BracketTree::Leaf(i as u8)],
                        },
                    );
                    basis_tensors.insert(deg.clone(), vec![vec![Int::from(1)]]);
                    ideals.insert(deg, IntEchelon::new(1));
                    continue;
                }

                let dim = tensor_spaces[&deg].dim();
                let mut ideal = IntEchelon::new(dim);
                // lift the ideal from one height below: [e_i, previous rows]
                for i in 0..n {
                    if deg.0[i] == 0 {
                        continue;
                    }
                    let mut prev = deg.clone();
                    prev.0[i] -= 1;
                    let Some(prev_ideal) = ideals.get(&prev) else {
                        continue;
                    };
                    let ei_deg = RootVector::simple(n, i);
                    let ei_vec = vec![Int::from(1)];
                    for row in prev_ideal.rows.clone() {
                        let lifted = tensor_commutator(
                            &ei_vec,
                            &tensor_spaces[&ei_deg],
                            &row,
                            &tensor_spaces[&prev],
                            &tensor_spaces[&deg],
                        );
                        ideal.insert(lifted);
                    }
                }
                // relators of this exact degree
                if let Some(trees) = relators.get(&deg) {
                    for t in trees {
                        let v = tree_tensor(t, &tensor_spaces, n);
                        ideal.insert(v);
                    }
                }
                if ideal.max_entry_bits() > opts.max_coeff_bits {
                    return Err(EngineError::ResourceLimit {
                        degree: deg,
                        detail: format!("echelon coefficients at {} bits", ideal.max_entry_bits()),
                    });
                }

                // basis selection: lexicographically earliest Lyndon
                // bracketings surviving modulo the ideal
                let candidates = lyndon_words(&deg.0);
                if candidates.len() > opts.max_candidates {
                    return Err(EngineError::ResourceLimit {
                        degree: deg,
                        detail: format!("{} Lyndon candidates", candidates.len()),
                    });
                }
                let mut probe = ideal.clone();
                let mut words = Vec::new();
                let mut trees = Vec::new();
                let mut vecs: Vec<Vec<Int>> = Vec::new();
                for w in candidates {
                    let tree = standard_bracketing(&w);
                    let v = tree_tensor(&tree, &tensor_spaces, n);
                    if probe.insert(v.clone()) {
                        words.push(w);
                        trees.push(tree);
                        vecs.push(v);
                    }
                }

                if !words.is_empty() {
                    // rational coordinate solver for this degree
                    let mut span = RatSpan::new(dim);
                    for v in &vecs {
                        let mut reduced: Vec<Rat> =
                            v.iter().map(|x| Rat::from_integer(x.clone())).collect();
                        ideal.reduce_exact(&mut reduced);
                        if !span.push_generator(&reduced) {
                            return Err(EngineError::Internal(format!(
                                "selected basis dependent modulo ideal at {deg}"
                            )));
                        }
                    }
                    // primitive bracket data: [e_i, basis of deg - alpha_i]
                    for i in 0..n {
                        if deg.0[i] == 0 {
                            continue;
                        }
                        let mut prev = deg.clone();
                        prev.0[i] -= 1;
                        let Some(prev_vecs) = basis_tensors.get(&prev) else {
                            continue;
                        };
                        let ei_deg = RootVector::simple(n, i);
                        let ei_vec = vec![Int::from(1)];
                        for (l, bvec) in prev_vecs.iter().enumerate() {
                            let prod = tensor_commutator(
                                &ei_vec,
                                &tensor_spaces[&ei_deg],
                                bvec,
                                &tensor_spaces[&prev],
                                &tensor_spaces[&deg],
                            );
                            let mut reduced: Vec<Rat> =
                                prod.iter().map(|x| Rat::from_integer(x.clone())).collect();
                            ideal.reduce_exact(&mut reduced);
                            let coords = span.express(&reduced).ok_or_else(|| {
                                EngineError::Internal(format!(
                                    "bracket image escapes the quotient basis at {deg}"
                                ))
                            })?;
                            let elem = if coords.iter().all(|c| c.is_zero()) {
                                Element::zero(n)
                            } else {
                                Element::from_term(n, deg.clone(), coords)
                            };
                            memo.insert((ei_deg.clone(), 0, prev.clone(), l), elem);
                        }
                    }
                    spaces.insert(deg.clone(), RootSpace { words, trees });
                    basis_tensors.insert(deg.clone(), vecs);
                }
                ideals.insert(deg, ideal);
            }
        }

        Ok(GradedAlgebra {
            gcm: a.clone(),
            symm: s.clone(),
            height,
            spaces,
            memo: Mutex::new(memo),
        })
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn symmetrization(&self) -> &Symmetrization {
        &self.symm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    /// Basis data for a positive degree, if the root space is nonzero.
    pub fn space(&self, deg: &RootVector) -> Option<&RootSpace> {
        self.spaces.get(deg)
    }

    /// Positive degrees with nonzero root spaces, in (height, coordinate)
    /// order.
    pub fn positive_degrees(&self) -> Vec<RootVector> {
        let mut degs: Vec<RootVector> = self.spaces.keys().cloned().collect();
        degs.sort_by_key(|d| (d.height(), d.0.clone()));
        degs
    }

    /// `dim g_beta`, for either sign of `beta`.
    pub fn mult(&self, beta: &RootVector) -> Result<usize, EngineError> {
        if beta.height().abs() > self.height {
            return Err(EngineError::HeightExceedsTruncation {
                degree: beta.clone(),
                height: self.height,
            });
        }
        if beta.is_zero() || !beta.is_sign_pure() {
            return Ok(0);
        }
        let abs = if beta.is_negative() {
            -beta.clone()
        } else {
            beta.clone()
        };
        Ok(self.spaces.get(&abs).map_or(0, |s| s.dim()))
    }

    /// Dimension of the space at a (possibly negative) degree; 0 outside the
    /// root system, with no truncation check.
    pub fn dim_basis(&self, deg: &RootVector) -> usize {
        self.dim_at(deg)
    }

    pub(crate) fn dim_at(&self, deg: &RootVector) -> usize {
        if deg.is_zero() || !deg.is_sign_pure() {
            return 0;
        }
        let abs = if deg.is_negative() {
            -deg.clone()
        } else {
            deg.clone()
        };
        self.spaces.get(&abs).map_or(0, |s| s.dim())
    }

    pub(crate) fn memo_get(&self, key: &BracketKey) -> Option<Element> {
        self.memo.lock().unwrap().get(key).cloned()
    }

    pub(crate) fn memo_put(&self, key: BracketKey, value: Element) {
        self.memo.lock().unwrap().insert(key, value);
    }

    pub(crate) fn tree_at(&self, deg: &RootVector, k: usize) -> &BracketTree {
        &self.spaces[deg].trees[k]
    }

    /// Reconstructs an algebra from exported data (see [`AlgebraExport`]);
    /// used by the build cache.
    pub fn from_export(export: &AlgebraExport) -> Result<Self, EngineError> {
        export.reconstruct()
    }
}

/// All nonnegative vectors of length `n` summing to `h`, in lexicographic
/// order.
pub(crate) fn compositions(n: usize, h: i64) -> Vec<RootVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fill_compositions(n, h, 0, &mut cur, &mut out);
    out
}

fn fill_compositions(
    n: usize,
    rest: i64,
    at: usize,
    cur: &mut Vec<i64>,
    out: &mut Vec<RootVector>,
) {
    if at == n - 1 {
        cur[at] = rest;
        out.push(RootVector(cur.clone()));
        return;
    }
    for v in 0..=rest {
        cur[at] = v;
        fill_compositions(n, rest - v, at + 1, cur, out);
    }
    cur[at] = 0;
}
