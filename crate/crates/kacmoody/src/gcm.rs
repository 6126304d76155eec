//! Generalised Cartan matrices: validation, symmetrisation, the induced
//! bilinear form, and finite/affine/indefinite classification of subdiagrams.
//!
//! A generalised Cartan matrix is an integer matrix with 2 on the diagonal,
//! nonpositive off-diagonal entries, and a symmetric zero pattern. When
//! `A = DB` with `D` positive diagonal and `B` symmetric, the form
//! `(alpha_i | alpha_j) := b_ij` is the restriction of the invariant
//! bilinear form to the root lattice; all root-norm and isotropy questions
//! reduce to it.

use crate::exact::{int, rat, rat_from_str, rat_to_string, Rat};
use crate::linalg::det_int;
use crate::rootvec::RootVector;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from matrix validation and form construction. Indices in error
/// payloads are 1-based, matching the way generators are written (`e1`,
/// `alpha_1`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcmError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is empty")]
    Empty,
    #[error("diagonal entry a_{{{0},{0}}} != 2")]
    AxiomC1Violated(usize),
    #[error("off-diagonal entry a_{{{0},{1}}} > 0")]
    AxiomC2Violated(usize, usize),
    #[error("zero pattern not symmetric at ({0},{1})")]
    AxiomC3Violated(usize, usize),
    #[error("matrix is not symmetrisable: inconsistent cycle through index {0}")]
    NotSymmetrisable(usize),
    #[error("subset of vertices is empty")]
    EmptySubset,
    #[error("subset index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("coordinate vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// A validated generalised Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gcm {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl Gcm {
    /// Validates the three GCM axioms and wraps the matrix.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self, GcmError> {
        let n = matrix.len();
        if n == 0 {
            return Err(GcmError::Empty);
        }
        if matrix.iter().any(|row| row.len() != n) {
            return Err(GcmError::NotSquare);
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return Err(GcmError::AxiomC1Violated(i + 1));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && matrix[i][j] > 0 {
                    return Err(GcmError::AxiomC2Violated(i + 1, j + 1));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(GcmError::AxiomC3Violated(i + 1, j + 1));
                }
            }
        }
        Ok(Gcm { n, entries: matrix })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn matrix(&self) -> &Vec<Vec<i64>> {
        &self.entries
    }

    /// Coroot pairing `<beta, alpha_i^vee> = sum_j beta_j a_{ij}`.
    pub fn pairing(&self, beta: &RootVector, i: usize) -> Result<i64, GcmError> {
        if i >= self.n {
            return Err(GcmError::IndexOutOfRange(i + 1));
        }
        self.check_dim(beta)?;
        Ok((0..self.n).map(|j| beta.0[j] * self.entries[i][j]).sum())
    }

    pub fn check_dim(&self, v: &RootVector) -> Result<(), GcmError> {
        if v.rank() != self.n {
            return Err(GcmError::DimensionMismatch {
                expected: self.n,
                found: v.rank(),
            });
        }
        Ok(())
    }

    /// The underlying unlabeled graph: an edge wherever `a_ij < 0`.
    pub fn diagram(&self) -> Diagram {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.entries[i][j] < 0 {
                    edges.push((i, j));
                }
            }
        }
        Diagram::new(self.n, edges)
    }

    /// `A = DB` with `B` symmetric and `d` positive, normalised so that every
    /// connected diagram component has minimal `d` entry 1. Deterministic:
    /// each component is traversed from its lowest index.
    pub fn symmetrize(&self) -> Result<Symmetrization, GcmError> {
        let diagram = self.diagram();
        let mut d: Vec<Option<Rat>> = vec![None; self.n];
        for comp in &diagram.components {
            let root = comp[0];
            d[root] = Some(rat(1));
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let di = d[i].clone().unwrap();
                for &j in &diagram.neighbours(i) {
                    // d_j a_ij = d_i a_ji along every edge
                    let required = &di * ratio_of(self.entries[j][i], self.entries[i][j]);
                    match &d[j] {
                        None => {
                            d[j] = Some(required);
                            queue.push_back(j);
                        }
                        Some(existing) => {
                            if *existing != required {
                                return Err(GcmError::NotSymmetrisable(j + 1));
                            }
                        }
                    }
                }
            }
            // normalise: minimal d over the component is 1
            let min = comp.iter().map(|&i| d[i].clone().unwrap()).min().unwrap();
            for &i in comp.iter() {
                let v = d[i].clone().unwrap();
                d[i] = Some(v / min.clone());
            }
        }
        let d: Vec<Rat> = d.into_iter().map(|x| x.unwrap()).collect();
        let mut b = vec![vec![Rat::zero(); self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                b[i][j] = rat(self.entries[i][j]) / d[i].clone();
            }
        }
        for i in 0..self.n {
            for j in 0..self.n {
                debug_assert_eq!(b[i][j], b[j][i]);
            }
        }
        Ok(Symmetrization { d, b })
    }

    /// Classifies each indecomposable component of the induced submatrix on
    /// `subset` by exact principal-minor signs.
    pub fn classify_subdiagram(
        &self,
        subset: &[usize],
    ) -> Result<Vec<(Vec<usize>, SubdiagramType)>, GcmError> {
        if subset.is_empty() {
            return Err(GcmError::EmptySubset);
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&i| i >= self.n) {
            return Err(GcmError::IndexOutOfRange(bad + 1));
        }
        let sub_diagram = self.diagram().induced(&sorted);
        let mut out = Vec::new();
        for comp in &sub_diagram.components {
            let verts: Vec<usize> = comp.iter().map(|&k| sorted[k]).collect();
            out.push((verts.clone(), self.classify_indecomposable(&verts)));
        }
        Ok(out)
    }

    /// Principal-minor trichotomy for an indecomposable submatrix:
    /// all principal minors positive -> finite; determinant zero with all
    /// proper principal minors positive -> affine; otherwise indefinite.
    fn classify_indecomposable(&self, verts: &[usize]) -> SubdiagramType {
        let k = verts.len();
        let full = self.minor(verts);
        let mut proper_positive = true;
        // all proper principal minors, by subset enumeration (desk-scale ranks)
        for mask in 1u32..(1 << k) {
            if mask == (1 << k) - 1 {
                continue;
            }
            let sel: Vec<usize> = (0..k)
                .filter(|&t| mask & (1 << t) != 0)
                .map(|t| verts[t])
                .collect();
            if self.minor(&sel) <= int(0) {
                proper_positive = false;
                break;
            }
        }
        if proper_positive && full.is_positive() {
            SubdiagramType::Finite
        } else if proper_positive && full.is_zero() {
            SubdiagramType::Affine
        } else {
            SubdiagramType::Indefinite
        }
    }

    fn minor(&self, verts: &[usize]) -> crate::exact::Int {
        let m: Vec<Vec<crate::exact::Int>> = verts
            .iter()
            .map(|&i| verts.iter().map(|&j| int(self.entries[i][j])).collect())
            .collect();
        det_int(&m)
    }
}

fn ratio_of(p: i64, q: i64) -> Rat {
    Rat::new(int(p), int(q))
}

/// Per-component type of an indecomposable (sub)diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubdiagramType {
    Finite,
    Affine,
    Indefinite,
}

impl std::fmt::Display for SubdiagramType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubdiagramType::Finite => write!(f, "Finite"),
            SubdiagramType::Affine => write!(f, "Affine"),
            SubdiagramType::Indefinite => write!(f, "Indefinite"),
        }
    }
}

/// Unlabeled adjacency graph on the vertex set `{0..n-1}`.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
}

impl Diagram {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        Diagram {
            n,
            edges,
            components,
        }
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges.contains(&(a, b))
    }

    /// True when the given vertex set induces a connected subgraph.
    pub fn is_connected_subset(&self, verts: &[usize]) -> bool {
        if verts.is_empty() {
            return true;
        }
        let set: std::collections::BTreeSet<usize> = verts.iter().copied().collect();
        let mut seen = std::collections::BTreeSet::from([*verts.iter().min().unwrap()]);
        let mut queue = std::collections::VecDeque::from([*verts.iter().min().unwrap()]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if set.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Subgraph induced on `verts` (relabelled 0..k-1 in the given order).
    pub fn induced(&self, verts: &[usize]) -> Diagram {
        let pos: std::collections::BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(i, j)| match (pos.get(&i), pos.get(&j)) {
                (Some(&a), Some(&b)) => Some((a.min(b), a.max(b))),
                _ => None,
            })
            .collect();
        Diagram::new(verts.len(), edges)
    }
}

/// The data `A = DB`: positive `d` and the symmetric rational matrix `b`
/// carrying the bilinear form on the root lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetrization {
    pub d: Vec<Rat>,
    pub b: Vec<Vec<Rat>>,
}

impl Symmetrization {
    pub fn rank(&self) -> usize {
        self.d.len()
    }

    /// `(alpha | beta) = alpha^T b beta` over integer coordinates.
    pub fn bilinear(&self, alpha: &RootVector, beta: &RootVector) -> Result<Rat, GcmError> {
        let n = self.rank();
        if alpha.rank() != n {
            return Err(GcmError::DimensionMismatch {
                expected: n,
                found: alpha.rank(),
            });
        }
        if beta.rank() != n {
            return Err(GcmError::DimensionMismatch {
                expected: n,
                found: beta.rank(),
            });
        }
        let mut s = Rat::zero();
        for i in 0..n {
            if alpha.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                if beta.0[j] == 0 {
                    continue;
                }
                s += &self.b[i][j] * rat(alpha.0[i] * beta.0[j]);
            }
        }
        Ok(s)
    }

    /// `(beta | beta)`, the norm of a lattice vector.
    pub fn norm(&self, beta: &RootVector) -> Result<Rat, GcmError> {
        self.bilinear(beta, beta)
    }
}

/// On-disk form of a GCM: `{"matrix": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GcmFile {
    pub matrix: Vec<Vec<i64>>,
}

/// Serialised symmetrisation: rationals as exact `"p/q"` strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetrizationFile {
    pub d: Vec<String>,
    pub b: Vec<Vec<String>>,
}

impl From<&Symmetrization> for SymmetrizationFile {
    fn from(s: &Symmetrization) -> Self {
        SymmetrizationFile {
            d: s.d.iter().map(rat_to_string).collect(),
            b: s.b
                .iter()
                .map(|row| row.iter().map(rat_to_string).collect())
                .collect(),
        }
    }
}

impl SymmetrizationFile {
    pub fn parse(&self) -> Option<Symmetrization> {
        let d = self
            .d
            .iter()
            .map(|s| rat_from_str(s))
            .collect::<Option<Vec<_>>>()?;
        let b = self
            .b
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| rat_from_str(s))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Symmetrization { d, b })
    }
}
