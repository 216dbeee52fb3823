use super::{canonicalize, Partition, TupleSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrieNode<T> {
    pub level: usize,
    /// Indices of the tuples whose path passes through this node, ascending.
    pub indices: Vec<usize>,
    /// Value of the edge from the parent; `None` for the root.
    pub label: Option<T>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// Tree whose level-`i` nodes are the classes of `Σ_i`.
#[derive(Debug, Clone)]
pub struct PointTrie<T> {
    nodes: Vec<TrieNode<T>>,
    levels: Vec<Vec<usize>>,
    comparisons: u64,
}

/// Builds the point trie by inserting the tuples one at a time.
///
/// A new tuple walks down from the root; at each node its next coordinate is
/// compared with the first tuple of each existing child, in creation order,
/// until one matches. When none does, a fresh branch is created without
/// further comparisons.
pub fn build_point_trie<T: PartialEq + Clone>(tuples: &TupleSet<T>) -> PointTrie<T> {
    let n = tuples.n();
    let v = tuples.rows();
    let mut nodes = vec![TrieNode {
        level: 0,
        indices: Vec::new(),
        label: None,
        parent: None,
        children: Vec::new(),
    }];
    let mut levels = vec![vec![0]];
    levels.resize(n + 1, Vec::new());
    let mut comparisons = 0u64;

    for (k, tuple) in v.iter().enumerate() {
        let mut node = 0;
        nodes[0].indices.push(k);
        for h in 0..n {
            let mut found = None;
            for &c in &nodes[node].children {
                let rep = nodes[c].indices[0];
                comparisons += 1;
                if v[rep][h] == tuple[h] {
                    found = Some(c);
                    break;
                }
            }
            match found {
                Some(c) => {
                    nodes[c].indices.push(k);
                    node = c;
                }
                None => {
                    for level in h + 1..=n {
                        let id = nodes.len();
                        nodes.push(TrieNode {
                            level,
                            indices: vec![k],
                            label: Some(tuple[level - 1].clone()),
                            parent: Some(node),
                            children: Vec::new(),
                        });
                        nodes[node].children.push(id);
                        levels[level].push(id);
                        node = id;
                    }
                    break;
                }
            }
        }
    }

    PointTrie {
        nodes,
        levels,
        comparisons,
    }
}

impl<T> PointTrie<T> {
    pub fn root(&self) -> &TrieNode<T> {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &TrieNode<T> {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[TrieNode<T>] {
        &self.nodes
    }

    /// Node ids on level `h`.
    pub fn level(&self, h: usize) -> &[usize] {
        &self.levels[h]
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// The classes of `Σ_h`, read off the nodes on level `h`.
    pub fn partition(&self, h: usize) -> Partition {
        canonicalize(
            self.levels[h]
                .iter()
                .map(|&id| self.nodes[id].indices.clone())
                .collect(),
        )
    }

    pub fn comparisons(&self) -> u64 {
        self.comparisons
    }

    pub fn num_leaves(&self) -> usize {
        self.levels[self.depth()].len()
    }

    /// Maximal number of children of any node.
    pub fn branching_factor(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.children.len())
            .max()
            .unwrap_or(0)
    }

    /// Edge labels along the root-to-leaf path of each leaf.
    pub fn paths(&self) -> Vec<Vec<&T>> {
        self.levels[self.depth()]
            .iter()
            .map(|&leaf| {
                let mut path = Vec::new();
                let mut cur = leaf;
                while let Some(p) = self.nodes[cur].parent {
                    path.push(self.nodes[cur].label.as_ref().unwrap());
                    cur = p;
                }
                path.reverse();
                path
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::sigma_algorithm;
    use proptest::prelude::*;

    fn example1_first_four() -> TupleSet<u64> {
        TupleSet::new(vec![
            vec![1, 2, 0, 1],
            vec![1, 0, 1, 1],
            vec![1, 2, 0, 3],
            vec![0, 0, 2, 0],
            vec![0, 0, 2, 1],
            vec![2, 1, 3, 1],
        ])
        .unwrap()
    }

    #[test]
    fn figure_one_trie() {
        let t = build_point_trie(&example1_first_four());
        assert_eq!(t.root().indices, vec![0, 1, 2, 3, 4, 5]);
        let level1: Vec<Vec<usize>> = t
            .level(1)
            .iter()
            .map(|&id| t.node(id).indices.clone())
            .collect();
        assert_eq!(level1, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert_eq!(
            t.partition(2),
            vec![vec![0, 2], vec![1], vec![3, 4], vec![5]]
        );
        assert_eq!(t.partition(3), t.partition(2));
        assert_eq!(t.num_leaves(), 6);
        assert_eq!(t.branching_factor(), 3);
        let labels: Vec<u64> = t
            .level(1)
            .iter()
            .map(|&id| t.node(id).label.unwrap())
            .collect();
        assert_eq!(labels, vec![1, 0, 2]);
    }

    #[test]
    fn single_vector_is_a_path() {
        let t = build_point_trie(&TupleSet::new(vec![vec![4, 5, 6]]).unwrap());
        assert_eq!(t.nodes().len(), 4);
        assert_eq!(t.branching_factor(), 1);
        assert_eq!(t.paths(), vec![vec![&4, &5, &6]]);
        assert_eq!(t.comparisons(), 0);
    }

    #[test]
    fn distinct_one_coordinate_tuples_fan_out() {
        let t = build_point_trie(&TupleSet::new((0..7).map(|i| vec![i]).collect()).unwrap());
        assert_eq!(t.branching_factor(), 7);
    }

    #[test]
    fn same_comparisons_as_sigma_on_example_one() {
        let full = TupleSet::new(vec![
            vec![1u64, 2, 0, 1, 1, 0, 3, 5],
            vec![1, 0, 1, 1, 2, 0, 3, 5],
            vec![1, 2, 0, 3, 3, 1, 2, 0],
            vec![0, 0, 2, 0, 4, 0, 2, 0],
            vec![0, 0, 2, 1, 5, 0, 2, 0],
            vec![2, 1, 3, 1, 6, 0, 2, 0],
        ])
        .unwrap();
        assert_eq!(
            build_point_trie(&full).comparisons(),
            sigma_algorithm(&full).comparisons
        );
    }

    proptest! {
        #[test]
        fn levels_are_sigma_partitions(rows in (1..12usize, 1..6usize).prop_flat_map(|(m, n)|
            proptest::collection::vec(proptest::collection::vec(0u8..3, n), m))) {
            let t = TupleSet::new(rows).unwrap();
            let trie = build_point_trie(&t);
            let w = sigma_algorithm(&t);
            for h in 0..=t.n() {
                prop_assert_eq!(&trie.partition(h), w.sigma(h));
            }
            prop_assert_eq!(trie.branching_factor(), w.branching);
            prop_assert_eq!(trie.comparisons(), w.comparisons);
        }
    }
}
