use std::cmp::Ordering;

use super::{canonicalize, Partition, TupleSet, WitnessData, WitnessMatrix, DEFAULT_DENSE_CAP};

/// Result of the sorted Σ-algorithm.
///
/// `witness` is expressed in the original point indices; its `comparisons`
/// field counts only the scan phase, `sort_comparisons` the lexicographic sort.
#[derive(Debug, Clone)]
pub struct SortedSigma {
    pub witness: WitnessData,
    pub sort_comparisons: u64,
    /// `order[k]` is the original index of the `k`-th tuple in sorted order.
    pub order: Vec<usize>,
}

/// Σ-algorithm for a totally ordered alphabet.
///
/// Once the tuples are in lexicographic order, each class is a contiguous run
/// and it suffices to compare neighbours, so every stage costs at most `m`
/// comparisons. With `presorted` set the input order is trusted as is.
pub fn sigma_algorithm_sorted<T: Ord + Clone>(
    tuples: &TupleSet<T>,
    presorted: bool,
) -> SortedSigma {
    let (m, n) = (tuples.m(), tuples.n());
    let v = tuples.rows();

    let mut order: Vec<usize> = (0..m).collect();
    let mut sort_comparisons = 0u64;
    if !presorted {
        order.sort_by(|&a, &b| {
            for (x, y) in v[a].iter().zip(&v[b]) {
                sort_comparisons += 1;
                match x.cmp(y) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            a.cmp(&b)
        });
    }

    let mut matrix = WitnessMatrix::new(m, DEFAULT_DENSE_CAP);
    let mut witness_list = Vec::new();
    let mut stage_comparisons = Vec::new();
    // runs of sorted positions [start, end)
    let mut runs: Vec<(usize, usize)> = vec![(0, m)];
    let mut levels: Vec<Partition> = vec![vec![(0..m).collect()]];

    for h in 0..n {
        if runs.iter().all(|&(s, e)| e - s == 1) {
            break;
        }
        let mut next = Vec::with_capacity(runs.len());
        let mut comparisons = 0u64;
        let mut split = false;
        for &(start, end) in &runs {
            let mut pieces = Vec::new();
            let mut piece_start = start;
            for pos in start..end - 1 {
                comparisons += 1;
                if v[order[pos]][h] != v[order[pos + 1]][h] {
                    pieces.push((piece_start, pos + 1));
                    piece_start = pos + 1;
                }
            }
            pieces.push((piece_start, end));
            if pieces.len() > 1 {
                split = true;
                for (a, &(s1, e1)) in pieces.iter().enumerate() {
                    for &(s2, e2) in &pieces[a + 1..] {
                        for p in s1..e1 {
                            for q in s2..e2 {
                                matrix.set(order[p], order[q], h + 1);
                            }
                        }
                    }
                }
            }
            next.extend(pieces);
        }
        if split {
            witness_list.push(h + 1);
        }
        stage_comparisons.push(comparisons);
        runs = next;
        levels.push(canonicalize(
            runs.iter().map(|&(s, e)| order[s..e].to_vec()).collect(),
        ));
    }

    SortedSigma {
        witness: WitnessData::assemble(levels, n, witness_list, matrix, stage_comparisons),
        sort_comparisons,
        order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::sigma_algorithm;
    use proptest::prelude::*;

    #[test]
    fn matches_unsorted_on_example_one() {
        let t = TupleSet::new(vec![
            vec![1u64, 2, 0, 1, 1, 0, 3, 5],
            vec![1, 0, 1, 1, 2, 0, 3, 5],
            vec![1, 2, 0, 3, 3, 1, 2, 0],
            vec![0, 0, 2, 0, 4, 0, 2, 0],
            vec![0, 0, 2, 1, 5, 0, 2, 0],
            vec![2, 1, 3, 1, 6, 0, 2, 0],
        ])
        .unwrap();
        let plain = sigma_algorithm(&t);
        let sorted = sigma_algorithm_sorted(&t, false);
        for i in 0..=8 {
            assert_eq!(plain.sigma(i), sorted.witness.sigma(i));
        }
        assert_eq!(plain.witness_list, sorted.witness.witness_list);
        assert_eq!(plain.matrix.to_rows(), sorted.witness.matrix.to_rows());
        assert!(sorted.witness.stage_comparisons.iter().all(|&c| c <= 6));
    }

    #[test]
    fn presorted_distinct_pair() {
        let t = TupleSet::new(vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let s = sigma_algorithm_sorted(&t, true);
        assert_eq!(s.sort_comparisons, 0);
        assert!(s.witness.comparisons <= 3 * 2);
        assert_eq!(s.witness.witness(0, 1), 3);
    }

    #[test]
    fn single_tuple_costs_nothing() {
        let s = sigma_algorithm_sorted(&TupleSet::new(vec![vec![5, 5]]).unwrap(), false);
        assert_eq!(s.witness.comparisons + s.sort_comparisons, 0);
    }

    proptest! {
        #[test]
        fn same_content_as_unsorted(rows in (1..15usize, 1..7usize).prop_flat_map(|(m, n)|
            proptest::collection::vec(proptest::collection::vec(0u8..3, n), m))) {
            let t = TupleSet::new(rows).unwrap();
            let plain = sigma_algorithm(&t);
            let sorted = sigma_algorithm_sorted(&t, false);
            for i in 0..=t.n() {
                prop_assert_eq!(plain.sigma(i), sorted.witness.sigma(i));
            }
            prop_assert_eq!(&plain.witness_list, &sorted.witness.witness_list);
            prop_assert_eq!(plain.matrix.to_rows(), sorted.witness.matrix.to_rows());
            prop_assert_eq!(plain.branching, sorted.witness.branching);
            for &c in &sorted.witness.stage_comparisons {
                prop_assert!(c as usize <= t.m());
            }
        }
    }
}
