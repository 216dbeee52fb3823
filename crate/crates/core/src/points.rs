use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::preprocess::{sigma_algorithm, TupleSet, WitnessData};

/// `m` points in `k^n`, stored as canonical residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    field: PrimeField,
    points: Vec<Vec<u64>>,
    n: usize,
}

impl PointSet {
    /// Builds a point set from integer rows, reducing every entry mod `p`.
    pub fn new(field: PrimeField, rows: Vec<Vec<i64>>) -> Result<Self> {
        let points = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| field.reduce(x)).collect())
            .collect();
        Self::from_residues(field, points)
    }

    pub fn from_residues(field: PrimeField, points: Vec<Vec<u64>>) -> Result<Self> {
        let n = points.first().ok_or(Error::EmptyInput)?.len();
        for (i, r) in points.iter().enumerate() {
            if r.len() != n {
                return Err(Error::RaggedInput {
                    row: i,
                    expected: n,
                    got: r.len(),
                });
            }
            if r.iter().any(|&x| x >= field.modulus()) {
                return Err(Error::Parse(format!("row {i} has an entry outside [0, p)")));
            }
        }
        Ok(PointSet { field, points, n })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn m(&self) -> usize {
        self.points.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn point(&self, i: usize) -> &[u64] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<u64>] {
        &self.points
    }

    /// Column `coord` (0-based) as an `m`-vector.
    pub fn column(&self, coord: usize) -> Vec<u64> {
        self.points.iter().map(|p| p[coord]).collect()
    }

    pub fn tuples(&self) -> TupleSet<u64> {
        TupleSet::new(self.points.clone()).expect("point sets are rectangular and non-empty")
    }

    /// Keeps the listed (0-based) coordinates, in the given order.
    pub fn project(&self, coords: &[usize]) -> PointSet {
        PointSet {
            field: self.field,
            points: self
                .points
                .iter()
                .map(|p| coords.iter().map(|&c| p[c]).collect())
                .collect(),
            n: coords.len(),
        }
    }

    pub fn witness_data(&self) -> WitnessData {
        sigma_algorithm(&self.tuples())
    }

    /// Runs the Σ-algorithm and fails with [`Error::DuplicatePoints`] unless
    /// all points are distinct.
    pub fn require_distinct(&self) -> Result<WitnessData> {
        let w = self.witness_data();
        if !w.all_distinct() {
            return Err(Error::DuplicatePoints {
                distinct: w.distinct,
                total: self.m(),
            });
        }
        Ok(w)
    }
}
