//! Lyndon words, standard bracketings, and the graded tensor algebra used to
//! present the free Lie algebra degree by degree.
//!
//! A multidegree is a vector of letter multiplicities. The tensor component
//! of a multidegree is spanned by all words with that content; the free Lie
//! component embeds into it via the commutator expansion, with the standard
//! bracketings of Lyndon words as a basis.

use crate::exact::Int;
use crate::rootvec::RootVector;
use num::Zero;
use std::collections::HashMap;

/// A word over the generator alphabet, 0-based letter indices.
pub type Word = Vec<u8>;

/// Full binary tree with generator leaves; the shape of a bracket monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BracketTree {
    Leaf(u8),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    /// Leaf sequence, left to right.
    pub fn leaves(&self) -> Word {
        let mut w = Vec::new();
        self.collect_leaves(&mut w);
        w
    }

    fn collect_leaves(&self, out: &mut Word) {
        match self {
            BracketTree::Leaf(i) => out.push(*i),
            BracketTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Multidegree over `n` letters (leaf multiplicities).
    pub fn degree(&self, n: usize) -> RootVector {
        let mut d = vec![0i64; n];
        for i in self.leaves() {
            d[i as usize] += 1;
        }
        RootVector(d)
    }

    /// Rendering with a generator prefix, e.g. `[e1,[e2,e1]]` or the same
    /// shape over `f`.
    pub fn render(&self, prefix: char) -> String {
        match self {
            BracketTree::Leaf(i) => format!("{prefix}{}", i + 1),
            BracketTree::Node(l, r) => {
                format!("[{},{}]", l.render(prefix), r.render(prefix))
            }
        }
    }
}

/// True when `w` is a Lyndon word: strictly smaller than each proper suffix.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|k| w < &w[k..])
}

/// All Lyndon words with the given letter content, in lexicographic order.
pub fn lyndon_words(content: &[i64]) -> Vec<Word> {
    let mut letters: Word = Vec::new();
    for (i, &c) in content.iter().enumerate() {
        for _ in 0..c {
            letters.push(i as u8);
        }
    }
    let mut out = Vec::new();
    permutations_filter(&mut letters.clone(), 0, &mut out);
    out
}

fn permutations_filter(letters: &mut Word, at: usize, out: &mut Vec<Word>) {
    // distinct permutations in lexicographic order: at each slot pick each
    // remaining distinct letter in increasing order
    if at == letters.len() {
        if is_lyndon(letters) {
            out.push(letters.clone());
        }
        return;
    }
    let mut last: Option<u8> = None;
    for k in at..letters.len() {
        let c = letters[k];
        if last == Some(c) {
            continue;
        }
        // keep order stable: rotate c to `at`
        let mut seen_smaller = false;
        for j in at..k {
            if letters[j] == c {
                seen_smaller = true;
                break;
            }
        }
        if seen_smaller {
            continue;
        }
        last = Some(c);
        letters.swap(at, k);
        sort_tail(letters, at + 1);
        permutations_filter(letters, at + 1, out);
        sort_tail(letters, at);
    }
    sort_tail(letters, at);
}

fn sort_tail(letters: &mut Word, from: usize) {
    letters[from..].sort_unstable();
}

/// Standard (Chen-Fox-Lyndon) bracketing of a Lyndon word: split before the
/// lexicographically smallest proper suffix and recurse.
pub fn standard_bracketing(w: &[u8]) -> BracketTree {
    assert!(is_lyndon(w), "standard bracketing needs a Lyndon word");
    if w.len() == 1 {
        return BracketTree::Leaf(w[0]);
    }
    let split = (1..w.len())
        .min_by(|&a, &b| w[a..].cmp(&w[b..]))
        .expect("word has length >= 2");
    BracketTree::Node(
        Box::new(standard_bracketing(&w[..split])),
        Box::new(standard_bracketing(&w[split..])),
    )
}

/// The word component of a multidegree: all words with that content, in
/// lexicographic order, with an index lookup.
#[derive(Debug, Clone)]
pub struct TensorSpace {
    pub degree: RootVector,
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl TensorSpace {
    pub fn new(degree: &RootVector) -> Self {
        let mut letters: Word = Vec::new();
        for (i, &c) in degree.0.iter().enumerate() {
            for _ in 0..c {
                letters.push(i as u8);
            }
        }
        let mut words = Vec::new();
        all_permutations(&mut letters.clone(), 0, &mut words);
        let index = words
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        TensorSpace {
            degree: degree.clone(),
            words,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &[u8]) -> usize {
        *self
            .index
            .get(w)
            .unwrap_or_else(|| panic!("word {:?} outside tensor component", w))
    }
}

fn all_permutations(letters: &mut Word, at: usize, out: &mut Vec<Word>) {
    if at == letters.len() {
        out.push(letters.clone());
        return;
    }
    let mut last: Option<u8> = None;
    for k in at..letters.len() {
        let c = letters[k];
        if last == Some(c) || (at..k).any(|j| letters[j] == c) {
            continue;
        }
        last = Some(c);
        letters.swap(at, k);
        sort_tail(letters, at + 1);
        all_permutations(letters, at + 1, out);
        sort_tail(letters, at);
    }
    sort_tail(letters, at);
}

/// Dense commutator `x (x) y - y (x) x` of tensor vectors: `x` lives in
/// `sx`, `y` in `sy`, the result in `target`.
pub fn tensor_commutator(
    x: &[Int],
    sx: &TensorSpace,
    y: &[Int],
    sy: &TensorSpace,
    target: &TensorSpace,
) -> Vec<Int> {
    let mut out = vec![Int::zero(); target.dim()];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            let mut wxy = sx.words[i].clone();
            wxy.extend_from_slice(&sy.words[j]);
            out[target.index_of(&wxy)] += &ab;
            let mut wyx = sy.words[j].clone();
            wyx.extend_from_slice(&sx.words[i]);
            out[target.index_of(&wyx)] -= &ab;
        }
    }
    out
}

/// Tensor expansion of a bracket tree, evaluated in the component of its own
/// degree. `spaces` must contain every subdegree of the tree.
pub fn tree_tensor(
    tree: &BracketTree,
    spaces: &std::collections::BTreeMap<RootVector, TensorSpace>,
    n: usize,
) -> Vec<Int> {
    match tree {
        BracketTree::Leaf(i) => {
            let deg = RootVector::simple(n, *i as usize);
            let space = &spaces[&deg];
            let mut v = vec![Int::zero(); space.dim()];
            v[space.index_of(&[*i])] = Int::from(1);
            v
        }
        BracketTree::Node(l, r) => {
            let dl = l.degree(n);
            let dr = r.degree(n);
            let xl = tree_tensor(l, spaces, n);
            let xr = tree_tensor(r, spaces, n);
            tensor_commutator(&xl, &spaces[&dl], &xr, &spaces[&dr], &spaces[&(&dl + &dr)])
        }
    }
}

/// Witt dimension of the free Lie component: the number of Lyndon words of
/// the multidegree (used only as a cross-check).
pub fn witt_dimension(content: &[i64]) -> usize {
    lyndon_words(content).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_recognition() {
        assert!(is_lyndon(&[0]));
        assert!(is_lyndon(&[0, 1]));
        assert!(!is_lyndon(&[1, 0]));
        assert!(!is_lyndon(&[0, 1, 0, 1]));
        assert!(is_lyndon(&[0, 0, 1, 0, 1]));
    }

    #[test]
    fn lyndon_generation_matches_witt_counts() {
        assert_eq!(lyndon_words(&[1, 1]), vec![vec![0, 1]]);
        assert_eq!(lyndon_words(&[2, 1]), vec![vec![0, 0, 1]]);
        // content (2,2): 0101 is periodic, only 0011 survives
        assert_eq!(lyndon_words(&[2, 2]), vec![vec![0, 0, 1, 1]]);
        // Witt counts: (1/n) sum_{d | gcd} mu(d) multinomial(n/d; content/d)
        assert_eq!(lyndon_words(&[3, 3]).len(), 3); // (20 - 2)/6
        assert_eq!(lyndon_words(&[1, 1, 1]).len(), 2); // 6/3
        assert_eq!(lyndon_words(&[2, 1, 1]).len(), 3); // 12/4
    }

    #[test]
    fn standard_bracketings() {
        let t = standard_bracketing(&[0, 1]);
        assert_eq!(t.render('e'), "[e1,e2]");
        let t = standard_bracketing(&[0, 0, 1]);
        assert_eq!(t.render('e'), "[e1,[e1,e2]]");
        let t = standard_bracketing(&[0, 1, 1]);
        assert_eq!(t.render('e'), "[[e1,e2],e2]");
    }

    #[test]
    fn tensor_commutator_antisymmetry() {
        use crate::exact::int;
        let d1 = RootVector(vec![1, 0]);
        let d2 = RootVector(vec![0, 1]);
        let sum = RootVector(vec![1, 1]);
        let mut spaces = std::collections::BTreeMap::new();
        spaces.insert(d1.clone(), TensorSpace::new(&d1));
        spaces.insert(d2.clone(), TensorSpace::new(&d2));
        spaces.insert(sum.clone(), TensorSpace::new(&sum));
        let x = vec![int(1)];
        let y = vec![int(1)];
        let xy = tensor_commutator(&x, &spaces[&d1], &y, &spaces[&d2], &spaces[&sum]);
        let yx = tensor_commutator(&y, &spaces[&d2], &x, &spaces[&d1], &spaces[&sum]);
        assert_eq!(xy.len(), 2);
        for (a, b) in xy.iter().zip(&yx) {
            assert_eq!(a.clone(), -b.clone());
        }
    }
}
