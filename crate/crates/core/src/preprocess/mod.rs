//! Combinatorial preprocessing of a list of tuples: the chain of
//! coordinate-prefix partitions `Σ_0 ⊇ Σ_1 ⊇ ... ⊇ Σ_n`, the witness list and
//! witness matrix, and the point trie.
//!
//! Only equality tests between alphabet values are counted as comparisons;
//! index bookkeeping is free.
//!
//! Point indices are 0-based throughout. Coordinates reported as witnesses
//! are 1-based, with `0` meaning "the tuples are equal".

mod sigma;
mod sorted;
mod trie;

use std::collections::HashMap;

use crate::error::{Error, Result};

pub use sigma::{sigma_algorithm, sigma_algorithm_with};
pub use sorted::{sigma_algorithm_sorted, SortedSigma};
pub use trie::{build_point_trie, PointTrie, TrieNode};

/// A partition of `{0..m}`: each class sorted ascending, classes ordered by
/// their smallest element.
pub type Partition = Vec<Vec<usize>>;

pub const DEFAULT_DENSE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleSet<T> {
    rows: Vec<Vec<T>>,
    n: usize,
}

impl<T: Clone> TupleSet<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.first().ok_or(Error::EmptyInput)?.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::RaggedInput {
                row: i,
                expected: n,
                got: r.len(),
            });
        }
        Ok(TupleSet { rows, n })
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.rows[i]
    }

    /// The same tuples read from the last coordinate to the first.
    pub fn reversed(&self) -> TupleSet<T> {
        TupleSet {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().rev().cloned().collect())
                .collect(),
            n: self.n,
        }
    }

    /// Keeps only the listed (0-based) coordinates, in the given order.
    pub fn project(&self, coords: &[usize]) -> TupleSet<T> {
        TupleSet {
            rows: self
                .rows
                .iter()
                .map(|r| coords.iter().map(|&c| r[c].clone()).collect())
                .collect(),
            n: coords.len(),
        }
    }
}

/// Upper-triangular matrix of pairwise witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessMatrix {
    Dense {
        m: usize,
        data: Vec<u32>,
    },
    Sparse {
        m: usize,
        entries: HashMap<(usize, usize), u32>,
    },
}

impl WitnessMatrix {
    pub fn new(m: usize, dense_cap: usize) -> Self {
        if m <= dense_cap {
            WitnessMatrix::Dense {
                m,
                data: vec![0; m * m],
            }
        } else {
            WitnessMatrix::Sparse {
                m,
                entries: HashMap::new(),
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            WitnessMatrix::Dense { m, .. } | WitnessMatrix::Sparse { m, .. } => *m,
        }
    }

    /// Witness of tuples `i` and `j` in either argument order.
    pub fn get(&self, i: usize, j: usize) -> usize {
        let (a, b) = (i.min(j), i.max(j));
        match self {
            WitnessMatrix::Dense { m, data } => data[a * m + b] as usize,
            WitnessMatrix::Sparse { entries, .. } => {
                entries.get(&(a, b)).copied().unwrap_or(0) as usize
            }
        }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: usize) {
        let (a, b) = (i.min(j), i.max(j));
        match self {
            WitnessMatrix::Dense { m, data } => data[a * *m + b] = v as u32,
            WitnessMatrix::Sparse { entries, .. } => {
                entries.insert((a, b), v as u32);
            }
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        let m = self.size();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if j > i { self.get(i, j) } else { 0 })
                    .collect()
            })
            .collect()
    }
}

/// Everything the preprocessing algorithms produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessData {
    /// Computed levels `Σ_0..Σ_stop`; later levels equal `Σ_stop`.
    levels: Vec<Partition>,
    n: usize,
    pub witness_list: Vec<usize>,
    pub matrix: WitnessMatrix,
    pub distinct: usize,
    pub branching: usize,
    pub comparisons: u64,
    /// Comparisons spent in each executed stage.
    pub stage_comparisons: Vec<u64>,
}

impl WitnessData {
    pub(crate) fn assemble(
        levels: Vec<Partition>,
        n: usize,
        witness_list: Vec<usize>,
        matrix: WitnessMatrix,
        stage_comparisons: Vec<u64>,
    ) -> Self {
        let distinct = levels.last().map_or(0, Vec::len);
        let branching = branching_from_levels(&levels, n);
        let comparisons = stage_comparisons.iter().sum();
        WitnessData {
            levels,
            n,
            witness_list,
            matrix,
            distinct,
            branching,
            comparisons,
            stage_comparisons,
        }
    }

    pub fn m(&self) -> usize {
        self.matrix.size()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Σ_i` for `0 <= i <= n`.
    pub fn sigma(&self, i: usize) -> &Partition {
        assert!(i <= self.n, "level {i} out of range 0..={}", self.n);
        &self.levels[i.min(self.levels.len() - 1)]
    }

    /// The last level actually computed before the algorithm stopped.
    pub fn stop_stage(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn witness(&self, i: usize, j: usize) -> usize {
        self.matrix.get(i, j)
    }

    pub fn all_distinct(&self) -> bool {
        self.distinct == self.m()
    }

    /// For each point, the index of its class in `Σ_i`.
    pub fn class_ids(&self, i: usize) -> Vec<usize> {
        class_ids(self.sigma(i), self.m())
    }
}

pub fn class_ids(partition: &Partition, m: usize) -> Vec<usize> {
    let mut ids = vec![usize::MAX; m];
    for (c, class) in partition.iter().enumerate() {
        for &i in class {
            ids[i] = c;
        }
    }
    ids
}

pub(crate) fn canonicalize(mut classes: Partition) -> Partition {
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

fn branching_from_levels(levels: &[Partition], n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let m: usize = levels[0].iter().map(Vec::len).sum();
    let mut r = if levels.len() - 1 < n { 1 } else { 0 };
    for pair in levels.windows(2) {
        let parent = class_ids(&pair[0], m);
        let mut children = vec![0usize; pair[0].len()];
        for class in &pair[1] {
            children[parent[class[0]]] += 1;
        }
        r = r.max(children.into_iter().max().unwrap_or(0));
    }
    r
}

/// 1-based index of the first coordinate where `a` and `b` differ, or 0.
pub fn witness<T: PartialEq>(a: &[T], b: &[T]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(a.iter()
        .zip(b)
        .position(|(x, y)| x != y)
        .map_or(0, |i| i + 1))
}

/// The partition of positions of `v` grouping equal entries.
pub fn type_of<T: PartialEq>(v: &[T]) -> Partition {
    let mut reps: Vec<&T> = Vec::new();
    let mut classes: Partition = Vec::new();
    for (i, x) in v.iter().enumerate() {
        match reps.iter().position(|r| *r == x) {
            Some(c) => classes[c].push(i),
            None => {
                reps.push(x);
                classes.push(vec![i]);
            }
        }
    }
    classes
}
