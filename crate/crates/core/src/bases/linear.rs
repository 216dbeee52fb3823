//! Bases of the form `1, f, ..., f^(m-1)` coming from a map that separates
//! the points: a linear form over the witness coordinates, or a combination
//! of separators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{separator_basis, Basis, BasisKind, PointSet, Provenance};
use crate::error::{Error, Result};
use crate::field::{count_ops, PrimeField};
use crate::poly::Polynomial;
use crate::preprocess::{class_ids, type_of, WitnessData};

/// `C(m, 2) + 1`, the field size that guarantees a linear separating form.
pub fn required_field_size(m: usize) -> u64 {
    let m = m as u64;
    m * m.saturating_sub(1) / 2 + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctElementStage {
    /// 1-based coordinate added at this stage.
    pub coordinate: usize,
    /// Pairs `(j, k)`, `j < k`, separated by both the previous partition and
    /// the new column (0-based point indices).
    pub pairs: Vec<(usize, usize)>,
    /// Forbidden values, one per pair, in pair order.
    pub forbidden: Vec<u64>,
    pub coefficient: u64,
    pub realization: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctElementResult {
    /// 1-based coordinates the linear form uses (the witness list, or the
    /// first coordinate when there is only one point).
    pub coordinates: Vec<usize>,
    pub coefficients: Vec<u64>,
    pub realization: Vec<u64>,
    pub stages: Vec<DistinctElementStage>,
    pub field_ops: u64,
    /// Order comparisons spent sorting and searching the forbidden values.
    pub order_comparisons: u64,
    /// Equality comparisons spent by the Σ-algorithm.
    pub sigma_comparisons: u64,
}

impl DistinctElementResult {
    pub fn operations(&self) -> u64 {
        self.field_ops + self.order_comparisons
    }

    pub fn linear_form(&self, field: PrimeField, nvars: usize) -> Polynomial {
        let vars: Vec<usize> = self.coordinates.iter().map(|c| c - 1).collect();
        Polynomial::linear(field, nvars, &vars, &self.coefficients)
    }
}

fn check_field_size(points: &PointSet, needed: u64, force: bool) -> Result<()> {
    let have = points.field().modulus();
    if !force && have < needed {
        return Err(Error::FieldTooSmall {
            have,
            needed,
            points: points.m(),
        });
    }
    Ok(())
}

fn coordinates_for(witness: &WitnessData, n: usize) -> Vec<usize> {
    if witness.witness_list.is_empty() && n > 0 {
        vec![1]
    } else {
        witness.witness_list.clone()
    }
}

/// Smallest nonzero element missing from the sorted list `forbidden`.
fn smallest_admissible(field: PrimeField, forbidden: &[u64], comparisons: &mut u64) -> Option<u64> {
    let mut idx = 0;
    for c in 1..field.modulus() {
        while idx < forbidden.len() {
            *comparisons += 1;
            if forbidden[idx] < c {
                idx += 1;
            } else {
                break;
            }
        }
        if idx < forbidden.len() {
            *comparisons += 1;
            if forbidden[idx] == c {
                continue;
            }
        }
        return Some(c);
    }
    None
}

/// Chooses `c_1 = 1, c_2, ...` so that `sum c_h * (column i_h)` takes `m`
/// distinct values, where `i_1 < i_2 < ...` is the witness list.
///
/// At stage `h` the coefficient must avoid the value that would merge any
/// pair separated both by the previous realization and by the new column;
/// the smallest nonzero value avoiding all of them is taken. With `force`
/// the field-size hypothesis is not checked up front and a stage with no
/// admissible value fails with [`Error::RetriesExhausted`].
pub fn distinct_element_algorithm(points: &PointSet, force: bool) -> Result<DistinctElementResult> {
    let witness = points.require_distinct()?;
    check_field_size(points, required_field_size(points.m()), force)?;
    let field = points.field();
    let m = points.m();
    let coordinates = coordinates_for(&witness, points.n());

    let mut order_comparisons = 0u64;
    let mut stages = Vec::new();
    let (outcome, field_ops) = count_ops(|| -> Result<(Vec<u64>, Vec<u64>)> {
        let Some(&first) = coordinates.first() else {
            return Ok((Vec::new(), vec![0; m]));
        };
        let mut v = points.column(first - 1);
        let mut coefficients = vec![1];
        for (h, &coord) in coordinates.iter().enumerate().skip(1) {
            let prev = class_ids(witness.sigma(coordinates[h - 1]), m);
            let col = points.column(coord - 1);
            let col_type = class_ids(&type_of(&col), m);
            let mut pairs = Vec::new();
            for j in 0..m {
                for k in j + 1..m {
                    if prev[j] != prev[k] && col_type[j] != col_type[k] {
                        pairs.push((j, k));
                    }
                }
            }
            let forbidden = pairs
                .iter()
                .map(|&(j, k)| field.div(field.sub(v[j], v[k]), field.sub(col[k], col[j])))
                .collect::<Result<Vec<u64>>>()?;
            let mut sorted = forbidden.clone();
            sorted.sort_by(|a, b| {
                order_comparisons += 1;
                a.cmp(b)
            });
            let c = smallest_admissible(field, &sorted, &mut order_comparisons)
                .ok_or(Error::RetriesExhausted(field.modulus() as usize - 1))?;
            for (vi, &x) in v.iter_mut().zip(&col) {
                *vi = field.add(*vi, field.mul(c, x));
            }
            coefficients.push(c);
            stages.push(DistinctElementStage {
                coordinate: coord,
                pairs,
                forbidden,
                coefficient: c,
                realization: v.clone(),
            });
        }
        Ok((coefficients, v))
    });
    let (coefficients, realization) = outcome?;

    Ok(DistinctElementResult {
        coordinates,
        coefficients,
        realization,
        stages,
        field_ops,
        order_comparisons,
        sigma_comparisons: witness.comparisons,
    })
}

/// `sum c_h * (column coordinates[h])`, checked to have pairwise distinct
/// entries.
pub fn check_realization(
    points: &PointSet,
    coordinates: &[usize],
    coefficients: &[u64],
) -> Result<Vec<u64>> {
    if coordinates.len() != coefficients.len() {
        return Err(Error::DimensionMismatch {
            expected: coordinates.len(),
            got: coefficients.len(),
        });
    }
    let field = points.field();
    let mut v = vec![0; points.m()];
    for (&coord, &c) in coordinates.iter().zip(coefficients) {
        if coord == 0 || coord > points.n() {
            return Err(Error::DimensionMismatch {
                expected: points.n(),
                got: coord,
            });
        }
        for (vi, x) in v.iter_mut().zip(points.column(coord - 1)) {
            *vi = field.add(*vi, field.mul(c % field.modulus(), x));
        }
    }
    if type_of(&v).len() != v.len() {
        return Err(Error::InvalidRealization);
    }
    Ok(v)
}

fn power_elements(f: &Polynomial, m: usize) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(m);
    let mut acc = Polynomial::one(f.field(), f.nvars());
    for k in 0..m {
        if k > 0 {
            acc = acc.mul(f).expect("same ring");
        }
        out.push(acc.clone());
    }
    out
}

/// `prod (x - v_i)` as a coefficient list from degree 0 upwards.
fn vanishing_generator(field: PrimeField, values: &[u64]) -> Vec<u64> {
    let mut g = vec![1u64];
    for &v in values {
        let mut next = vec![0u64; g.len() + 1];
        for (i, &c) in g.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.sub(next[i], field.mul(c, v));
        }
        g = next;
    }
    g
}

/// Construction 2 with coefficients from the distinct-element algorithm.
pub fn linear_power_basis(points: &PointSet, force: bool) -> Result<Basis> {
    let d = distinct_element_algorithm(points, force)?;
    linear_power_basis_with(points, &d.coordinates, &d.coefficients)
}

/// Construction 2 with caller-supplied coefficients on the given 1-based
/// coordinates; fails with [`Error::InvalidRealization`] unless the linear
/// form separates the points.
pub fn linear_power_basis_with(
    points: &PointSet,
    coordinates: &[usize],
    coefficients: &[u64],
) -> Result<Basis> {
    points.require_distinct()?;
    let field = points.field();
    let values = check_realization(points, coordinates, coefficients)?;
    let vars: Vec<usize> = coordinates.iter().map(|c| c - 1).collect();
    let f = Polynomial::linear(field, points.n(), &vars, coefficients);
    let elements = power_elements(&f, points.m());
    let generator = vanishing_generator(field, &values);
    Basis::from_elements(
        BasisKind::LinearPower,
        elements,
        points.clone(),
        Provenance::LinearPower {
            coordinates: coordinates.to_vec(),
            coefficients: coefficients.iter().map(|c| c % field.modulus()).collect(),
            linear_form: f,
            values,
            generator,
        },
    )
}

/// Powers of `pi = sum c_i Q_i`, where the `Q_i` are the witness separators
/// and the `c_i` are pairwise distinct, so that `pi(p_i) = c_i`.
pub fn separator_map_basis(points: &PointSet, values: &[u64]) -> Result<Basis> {
    let field = points.field();
    let m = points.m();
    if values.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: values.len(),
        });
    }
    if field.modulus() < m as u64 {
        return Err(Error::FieldTooSmall {
            have: field.modulus(),
            needed: m as u64,
            points: m,
        });
    }
    let values: Vec<u64> = values.iter().map(|v| v % field.modulus()).collect();
    if type_of(&values).len() != m {
        return Err(Error::DuplicateValues);
    }
    let seps = separator_basis(points)?;
    let mut pi = Polynomial::zero(field, points.n());
    for (q, &c) in seps.elements().iter().zip(&values) {
        pi.add_scaled(q, c)?;
    }
    let elements = power_elements(&pi, m);
    Basis::from_elements(
        BasisKind::SeparatorMapPower,
        elements,
        points.clone(),
        Provenance::SeparatorMap { values, map: pi },
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomRealization {
    pub coordinates: Vec<usize>,
    pub coefficients: Vec<u64>,
    pub linear_form: Polynomial,
    pub attempts: usize,
}

/// Draws coefficients for the witness coordinates uniformly at random until
/// the resulting linear form separates the points.
pub fn randomized_realization(
    points: &PointSet,
    seed: u64,
    max_attempts: usize,
) -> Result<RandomRealization> {
    let field = points.field();
    let m = points.m();
    if field.modulus() < m as u64 {
        return Err(Error::FieldTooSmall {
            have: field.modulus(),
            needed: m as u64,
            points: m,
        });
    }
    let witness = points.require_distinct()?;
    let coordinates = coordinates_for(&witness, points.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=max_attempts {
        let coefficients: Vec<u64> = coordinates
            .iter()
            .map(|_| rng.gen_range(0..field.modulus()))
            .collect();
        if m == 1 || check_realization(points, &coordinates, &coefficients).is_ok() {
            let vars: Vec<usize> = coordinates.iter().map(|c| c - 1).collect();
            return Ok(RandomRealization {
                linear_form: Polynomial::linear(field, points.n(), &vars, &coefficients),
                coordinates,
                coefficients,
                attempts: attempt,
            });
        }
    }
    Err(Error::RetriesExhausted(max_attempts))
}
