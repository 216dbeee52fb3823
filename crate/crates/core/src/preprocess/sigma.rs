use super::{canonicalize, Partition, TupleSet, WitnessData, WitnessMatrix, DEFAULT_DENSE_CAP};

/// Computes the prefix partitions, witness list and witness matrix by
/// iterating over the coordinates.
///
/// At each stage every non-singleton class is split against its first
/// element; the disagreeing part is split again at the same coordinate until
/// only classes that agree on the coordinate remain. The algorithm stops
/// early once every class is a singleton.
pub fn sigma_algorithm<T: PartialEq + Clone>(tuples: &TupleSet<T>) -> WitnessData {
    sigma_algorithm_with(tuples, DEFAULT_DENSE_CAP)
}

/// As [`sigma_algorithm`], storing the witness matrix densely only when
/// `m <= dense_cap`.
pub fn sigma_algorithm_with<T: PartialEq + Clone>(
    tuples: &TupleSet<T>,
    dense_cap: usize,
) -> WitnessData {
    let (m, n) = (tuples.m(), tuples.n());
    let v = tuples.rows();
    let mut matrix = WitnessMatrix::new(m, dense_cap);
    let mut witness_list = Vec::new();
    let mut stage_comparisons = Vec::new();
    let mut levels: Vec<Partition> = vec![vec![(0..m).collect()]];

    for h in 0..n {
        let current = levels.last().unwrap();
        if current.iter().all(|c| c.len() == 1) {
            break;
        }
        let mut done: Partition = Vec::with_capacity(current.len());
        let mut undone: Vec<Vec<usize>> = Vec::new();
        for class in current {
            if class.len() == 1 {
                done.push(class.clone());
            } else {
                undone.push(class.clone());
            }
        }

        let mut comparisons = 0u64;
        let mut split = false;
        while let Some(set) = undone.pop() {
            let first = set[0];
            let (mut agree, mut differ) = (vec![first], Vec::new());
            for &j in &set[1..] {
                comparisons += 1;
                if v[first][h] != v[j][h] {
                    differ.push(j);
                } else {
                    agree.push(j);
                }
            }
            if !differ.is_empty() {
                split = true;
                for &a in &agree {
                    for &b in &differ {
                        matrix.set(a, b, h + 1);
                    }
                }
            }
            done.push(agree);
            match differ.len() {
                0 => {}
                1 => done.push(differ),
                _ => undone.push(differ),
            }
        }
        if split {
            witness_list.push(h + 1);
        }
        stage_comparisons.push(comparisons);
        levels.push(canonicalize(done));
    }

    WitnessData::assemble(levels, n, witness_list, matrix, stage_comparisons)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::witness;
    use proptest::prelude::*;

    pub(crate) fn example1() -> TupleSet<u64> {
        TupleSet::new(vec![
            vec![1, 2, 0, 1, 1, 0, 3, 5],
            vec![1, 0, 1, 1, 2, 0, 3, 5],
            vec![1, 2, 0, 3, 3, 1, 2, 0],
            vec![0, 0, 2, 0, 4, 0, 2, 0],
            vec![0, 0, 2, 1, 5, 0, 2, 0],
            vec![2, 1, 3, 1, 6, 0, 2, 0],
        ])
        .unwrap()
    }

    fn one_based(p: &Partition) -> Vec<Vec<usize>> {
        p.iter()
            .map(|c| c.iter().map(|i| i + 1).collect())
            .collect()
    }

    #[test]
    fn example_one_partitions() {
        let w = sigma_algorithm(&example1());
        assert_eq!(
            one_based(w.sigma(1)),
            vec![vec![1, 2, 3], vec![4, 5], vec![6]]
        );
        assert_eq!(
            one_based(w.sigma(2)),
            vec![vec![1, 3], vec![2], vec![4, 5], vec![6]]
        );
        assert_eq!(w.sigma(3), w.sigma(2));
        assert_eq!(w.sigma(4).len(), 6);
        assert_eq!(w.sigma(8), w.sigma(4));
        assert_eq!(w.stop_stage(), 4);
        assert_eq!(w.witness_list, vec![1, 2, 4]);
        assert_eq!(w.distinct, 6);
        assert_eq!(w.branching, 3);
        let c: Vec<Vec<usize>> = vec![
            vec![0, 2, 4, 1, 1, 1],
            vec![0, 0, 2, 1, 1, 1],
            vec![0, 0, 0, 1, 1, 1],
            vec![0, 0, 0, 0, 4, 1],
            vec![0, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 0],
        ];
        assert_eq!(w.matrix.to_rows(), c);
    }

    #[test]
    fn single_tuple() {
        let w = sigma_algorithm(&TupleSet::new(vec![vec![3, 1, 4]]).unwrap());
        for i in 0..=3 {
            assert_eq!(w.sigma(i), &vec![vec![0]]);
        }
        assert!(w.witness_list.is_empty());
        assert_eq!(w.matrix.to_rows(), vec![vec![0]]);
        assert_eq!(w.comparisons, 0);
    }

    #[test]
    fn identical_pair_compares_once_per_stage() {
        let w = sigma_algorithm(&TupleSet::new(vec![vec![1, 2, 3, 4], vec![1, 2, 3, 4]]).unwrap());
        assert_eq!(w.sigma(4), &vec![vec![0, 1]]);
        assert_eq!(w.distinct, 1);
        assert_eq!(w.witness(0, 1), 0);
        assert_eq!(w.comparisons, 4);
        assert_eq!(w.branching, 1);
    }

    #[test]
    fn sparse_storage_gives_same_witnesses() {
        let t = example1();
        let dense = sigma_algorithm(&t);
        let sparse = sigma_algorithm_with(&t, 2);
        assert!(matches!(sparse.matrix, WitnessMatrix::Sparse { .. }));
        assert_eq!(dense.matrix.to_rows(), sparse.matrix.to_rows());
    }

    fn tuples(max_m: usize, max_n: usize, alphabet: u8) -> impl Strategy<Value = TupleSet<u8>> {
        (1..=max_m, 1..=max_n).prop_flat_map(move |(m, n)| {
            proptest::collection::vec(proptest::collection::vec(0..alphabet, n), m)
                .prop_map(|rows| TupleSet::new(rows).unwrap())
        })
    }

    proptest! {
        #[test]
        fn refinement_and_witness_consistency(t in tuples(12, 8, 3)) {
            let w = sigma_algorithm(&t);
            let (m, n) = (t.m(), t.n());
            for h in 1..=n {
                let prev = w.class_ids(h - 1);
                for class in w.sigma(h) {
                    prop_assert!(class.iter().all(|&i| prev[i] == prev[class[0]]));
                }
                let changed = w.sigma(h - 1) != w.sigma(h);
                prop_assert_eq!(changed, w.witness_list.contains(&h));
                // same class iff the first h coordinates agree
                let ids = w.class_ids(h);
                for i in 0..m {
                    for j in 0..m {
                        prop_assert_eq!(ids[i] == ids[j], t.row(i)[..h] == t.row(j)[..h]);
                    }
                }
            }
            for i in 0..m {
                for j in i + 1..m {
                    prop_assert_eq!(w.witness(i, j), witness(t.row(i), t.row(j)).unwrap());
                }
            }
            prop_assert_eq!(w.distinct, w.sigma(n).len());
            prop_assert!(w.comparisons <= (n * m + m * m) as u64);
        }

        #[test]
        fn projection_onto_witnesses_stays_distinct(t in tuples(12, 8, 3)) {
            let w = sigma_algorithm(&t);
            let coords: Vec<usize> = w.witness_list.iter().map(|c| c - 1).collect();
            let reps: Vec<usize> = w.sigma(t.n()).iter().map(|c| c[0]).collect();
            let projected = t.project(&coords);
            for (a, &i) in reps.iter().enumerate() {
                for &j in &reps[a + 1..] {
                    prop_assert_ne!(projected.row(i), projected.row(j));
                }
            }
        }
    }
}
