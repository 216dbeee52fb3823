//! Standard monomials for lex by purely combinatorial means: the point trie
//! of the reversed coordinates is turned into a lex trie whose root-to-leaf
//! label paths are the exponent vectors.

use std::collections::HashMap;

use super::{monomial_basis, Basis, BasisKind, PointSet, Provenance};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder};
use crate::preprocess::{build_point_trie, TupleSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexTrieNode {
    /// 0-based point indices, ascending.
    pub indices: Vec<usize>,
    /// Edge label `b` from the parent; `None` for the root.
    pub label: Option<u32>,
    /// Index of the parent in the previous level.
    pub parent: Option<usize>,
}

/// `levels[h]` holds the vertices on level `h`, in creation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexTrie {
    pub levels: Vec<Vec<LexTrieNode>>,
}

impl LexTrie {
    pub fn num_leaves(&self) -> usize {
        self.levels.last().map_or(0, Vec::len)
    }

    /// Label paths of the leaves, in leaf order.
    pub fn paths(&self) -> Vec<Vec<u32>> {
        let depth = self.levels.len() - 1;
        (0..self.levels[depth].len())
            .map(|leaf| {
                let mut path = vec![0; depth];
                let mut cur = leaf;
                for h in (1..=depth).rev() {
                    let node = &self.levels[h][cur];
                    path[h - 1] = node.label.expect("non-root");
                    cur = node.parent.expect("non-root");
                }
                path
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexResult {
    /// The standard monomials, increasing for lex `x1 > ... > xn`.
    pub monomials: Vec<Monomial>,
    /// The monomial whose leaf holds point `i`.
    pub point_monomials: Vec<Monomial>,
    pub trie: LexTrie,
    /// Comparisons spent building the point trie.
    pub comparisons: u64,
    /// Branching factor of the point trie.
    pub branching: usize,
}

/// Lex standard monomials of a set of distinct tuples.
///
/// Stage `h` refines every vertex `v_a` on level `h - 1` along the classes of
/// `Σ_{n-h}` of the reversed tuples: inside a class, scanned in increasing
/// index order, an element of `v_a` preceded by exactly `b` class members
/// from `v_a` goes to `v_{a,b}`.
pub fn lex_standard_monomials<T: PartialEq + Clone>(tuples: &TupleSet<T>) -> Result<LexResult> {
    let m = tuples.m();
    let n = tuples.n();
    let trie = build_point_trie(&tuples.reversed());
    if trie.num_leaves() < m {
        return Err(Error::DuplicatePoints {
            distinct: trie.num_leaves(),
            total: m,
        });
    }

    let mut levels = vec![vec![LexTrieNode {
        indices: (0..m).collect(),
        label: None,
        parent: None,
    }]];
    let mut vertex = vec![0usize; m];
    for h in 1..=n {
        let classes = trie.partition(n - h);
        let mut next: Vec<LexTrieNode> = Vec::new();
        let mut key_to_node: HashMap<(usize, u32), usize> = HashMap::new();
        let mut new_vertex = vec![0usize; m];
        for class in &classes {
            let mut seen = vec![0u32; levels[h - 1].len()];
            for &i in class {
                let a = vertex[i];
                let b = seen[a];
                seen[a] += 1;
                let id = *key_to_node.entry((a, b)).or_insert_with(|| {
                    next.push(LexTrieNode {
                        indices: Vec::new(),
                        label: Some(b),
                        parent: Some(a),
                    });
                    next.len() - 1
                });
                next[id].indices.push(i);
                new_vertex[i] = id;
            }
        }
        for node in &mut next {
            node.indices.sort_unstable();
        }
        levels.push(next);
        vertex = new_vertex;
    }

    let lex_trie = LexTrie { levels };
    let paths = lex_trie.paths();
    let point_monomials: Vec<Monomial> = vertex
        .iter()
        .map(|&leaf| Monomial::new(paths[leaf].clone()))
        .collect();
    let order = MonomialOrder::lex(n);
    let mut monomials: Vec<Monomial> = paths.into_iter().map(Monomial::new).collect();
    monomials.sort_by(|a, b| order.cmp_monomials(a, b));

    Ok(LexResult {
        monomials,
        point_monomials,
        trie: lex_trie,
        comparisons: trie.comparisons(),
        branching: trie.branching_factor(),
    })
}

/// Construction 3: the lex standard monomials as a basis.
pub fn lex_basis(points: &PointSet) -> Result<(Basis, LexResult)> {
    let lex = lex_standard_monomials(&points.tuples())?;
    let basis = monomial_basis(
        BasisKind::LexMonomial,
        lex.monomials.clone(),
        &MonomialOrder::lex(points.n()),
        points.clone(),
        Provenance::LexMonomial {
            comparisons: lex.comparisons,
            branching: lex.branching,
        },
    )?;
    Ok((basis, lex))
}
