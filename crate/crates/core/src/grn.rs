//! Reverse engineering of polynomial dynamical systems from a time series:
//! find `h_1..h_n` over `Z_p` with `h_i(s_j) = s_{j+1,i}`, in normal form with
//! respect to a basis of `S/I(s_1..s_m)`.

use serde_json::{json, Value};

use crate::bases::{
    distinct_element_algorithm, elimination_standard_monomials, lex_basis, linear_power_basis_with,
    separator_basis, separator_map_basis, Basis,
};
use crate::error::{Error, Result};
use crate::field::{count_ops, PrimeField};
use crate::normalform::combine;
use crate::points::PointSet;
use crate::poly::{MonomialOrder, Polynomial};
use crate::preprocess::{sigma_algorithm, TupleSet};

#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub samples: Vec<Vec<f64>>,
    pub labels: Option<Vec<String>>,
}

impl TimeSeries {
    pub fn new(samples: Vec<Vec<f64>>, labels: Option<Vec<String>>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::DuplicateCollapseEmpty);
        }
        let n = samples[0].len();
        for (row, s) in samples.iter().enumerate() {
            if s.len() != n {
                return Err(Error::RaggedInput {
                    row,
                    expected: n,
                    got: s.len(),
                });
            }
            if s.iter().any(|x| !x.is_finite()) {
                return Err(Error::Parse(format!(
                    "sample {} has a non-finite value",
                    row + 1
                )));
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: l.len(),
                });
            }
        }
        Ok(TimeSeries { samples, labels })
    }

    pub fn n(&self) -> usize {
        self.samples[0].len()
    }
}

/// Quantile binning of every variable into `p` states: the `N` values are
/// ranked by (value, sample index) and rank `k` gets state `floor(k p / N)`.
/// A constant variable maps to state 0.
pub fn discretize(series: &TimeSeries, p: u64) -> Result<Vec<Vec<u64>>> {
    PrimeField::new(p).map_err(|_| Error::NonPrimeStates(p))?;
    let rows = series.samples.len();
    let mut out = vec![vec![0u64; series.n()]; rows];
    for var in 0..series.n() {
        let col: Vec<f64> = series.samples.iter().map(|s| s[var]).collect();
        if col.iter().all(|&x| x == col[0]) {
            continue;
        }
        let mut idx: Vec<usize> = (0..rows).collect();
        idx.sort_by(|&a, &b| col[a].total_cmp(&col[b]).then(a.cmp(&b)));
        for (rank, &i) in idx.iter().enumerate() {
            out[i][var] = (rank as u64 * p) / rows as u64;
        }
    }
    Ok(out)
}

/// Takes already discrete data as is; every value must be an integer in
/// `[0, p)`.
pub fn passthrough(series: &TimeSeries, p: u64) -> Result<Vec<Vec<u64>>> {
    PrimeField::new(p).map_err(|_| Error::NonPrimeStates(p))?;
    series
        .samples
        .iter()
        .enumerate()
        .map(|(row, s)| {
            s.iter()
                .map(|&x| {
                    if x.fract() == 0.0 && x >= 0.0 && x < p as f64 {
                        Ok(x as u64)
                    } else {
                        Err(Error::Parse(format!(
                            "sample {}: {x} is not a state in 0..{p}",
                            row + 1
                        )))
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum BasisChoice {
    #[default]
    Lex,
    Separator,
    /// Linear-power basis from the distinct-element algorithm.
    Linear {
        force: bool,
    },
    /// Powers of `sum c_i Q_i`; `c_i = i - 1` when no values are given.
    SeparatorMap {
        values: Option<Vec<u64>>,
    },
    Elim {
        tau: Vec<usize>,
        order2: MonomialOrder,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counters {
    /// Comparisons of the Σ-algorithm on all samples.
    pub preprocess_comparisons: u64,
    /// Comparisons spent building the basis.
    pub basis_comparisons: u64,
    /// Field operations spent building the basis and `B(P)^-1`.
    pub basis_field_ops: u64,
    /// Field operations spent on `h_1..h_n` given `B(P)^-1`.
    pub assembly_field_ops: u64,
}

impl Counters {
    pub fn comparisons(&self) -> u64 {
        self.preprocess_comparisons + self.basis_comparisons
    }

    pub fn field_ops(&self) -> u64 {
        self.basis_field_ops + self.assembly_field_ops
    }
}

#[derive(Debug, Clone)]
pub struct GRNModel {
    pub p: u64,
    pub basis: Basis,
    pub h: Vec<Polynomial>,
    /// Row `i` holds the coordinates of `h_i` with respect to the basis.
    pub coefficients: Vec<Vec<u64>>,
    /// Pairs `(j, k)`, `j < k`, of equal samples (0-based).
    pub duplicates: Vec<(usize, usize)>,
    /// 0-based indices of the samples used as interpolation points.
    pub domain: Vec<usize>,
    pub states: Vec<Vec<u64>>,
    pub labels: Option<Vec<String>>,
    pub counters: Counters,
}

impl GRNModel {
    pub fn to_json(&self, counters: bool) -> Value {
        let mut v = json!({
            "p": self.p,
            "basis": self.basis.to_json(),
            "h": self.h.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
            "coefficients": self.coefficients,
            "duplicates": self.duplicates.iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
            "domain": self.domain.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "states": self.states,
        });
        if let Some(l) = &self.labels {
            v["labels"] = json!(l);
        }
        if counters {
            let c = &self.counters;
            v["counters"] = json!({
                "preprocess_comparisons": c.preprocess_comparisons,
                "basis_comparisons": c.basis_comparisons,
                "comparisons": c.comparisons(),
                "basis_field_ops": c.basis_field_ops,
                "assembly_field_ops": c.assembly_field_ops,
                "field_ops": c.field_ops(),
            });
        }
        v
    }
}

fn build_basis(points: &PointSet, choice: &BasisChoice) -> Result<(Basis, u64)> {
    Ok(match choice {
        BasisChoice::Lex => {
            let (b, lex) = lex_basis(points)?;
            (b, lex.comparisons)
        }
        BasisChoice::Separator => (separator_basis(points)?, points.witness_data().comparisons),
        BasisChoice::Linear { force } => {
            let d = distinct_element_algorithm(points, *force)?;
            let b = linear_power_basis_with(points, &d.coordinates, &d.coefficients)?;
            (b, d.sigma_comparisons + d.order_comparisons)
        }
        BasisChoice::SeparatorMap { values } => {
            let values = values
                .clone()
                .unwrap_or_else(|| (0..points.m() as u64).collect());
            (
                separator_map_basis(points, &values)?,
                points.witness_data().comparisons,
            )
        }
        BasisChoice::Elim { tau, order2 } => {
            let r = elimination_standard_monomials(points, tau, order2)?;
            (r.basis, r.comparisons)
        }
    })
}

/// Builds the model from discrete states `s_1..s_{m+1}`.
///
/// Equal domain states are collapsed onto their first occurrence; they must
/// have equal successors, otherwise [`Error::InconsistentData`] names the two
/// samples (1-based). Each `h_i` is `(s_{2,i}, ..., s_{m+1,i}) B(P)^-1`
/// applied to the basis elements.
pub fn transition_functions(
    states: &[Vec<u64>],
    field: PrimeField,
    choice: &BasisChoice,
) -> Result<GRNModel> {
    if states.len() < 2 {
        return Err(Error::DuplicateCollapseEmpty);
    }
    let p = field.modulus();
    let states: Vec<Vec<u64>> = states
        .iter()
        .map(|s| s.iter().map(|&x| x % p).collect())
        .collect();
    let tuples = TupleSet::new(states.clone())?;
    let n = tuples.n();
    let witness = sigma_algorithm(&tuples);
    let mut counters = Counters {
        preprocess_comparisons: witness.comparisons,
        ..Counters::default()
    };

    let m = states.len() - 1;
    let mut duplicates = Vec::new();
    let mut domain = Vec::new();
    for class in witness.sigma(n) {
        for &k in &class[1..] {
            duplicates.push((class[0], k));
        }
        let rep = class[0];
        if rep >= m {
            continue;
        }
        domain.push(rep);
        for &k in class[1..].iter().filter(|&&k| k < m) {
            counters.preprocess_comparisons += n as u64;
            if states[k + 1] != states[rep + 1] {
                return Err(Error::InconsistentData {
                    first: rep + 1,
                    second: k + 1,
                });
            }
        }
    }
    domain.sort_unstable();
    duplicates.sort_unstable();
    if domain.is_empty() {
        return Err(Error::DuplicateCollapseEmpty);
    }

    let points =
        PointSet::from_residues(field, domain.iter().map(|&j| states[j].clone()).collect())?;
    let (built, basis_ops) = count_ops(|| build_basis(&points, choice));
    let (basis, basis_comparisons) = built?;
    counters.basis_comparisons = basis_comparisons;
    counters.basis_field_ops = basis_ops;

    let (assembled, assembly_ops) = count_ops(|| -> Result<(Vec<Vec<u64>>, Vec<Polynomial>)> {
        let mut coefficients = Vec::with_capacity(n);
        let mut h = Vec::with_capacity(n);
        for i in 0..n {
            let y: Vec<u64> = domain.iter().map(|&j| states[j + 1][i]).collect();
            let c = basis.bp_inv().left_mul_vec(&y, field)?;
            h.push(combine(&c, &basis)?);
            coefficients.push(c);
        }
        Ok((coefficients, h))
    });
    let (coefficients, h) = assembled?;
    counters.assembly_field_ops = assembly_ops;

    Ok(GRNModel {
        p,
        basis,
        h,
        coefficients,
        duplicates,
        domain,
        states,
        labels: None,
        counters,
    })
}

/// Discretizes (unless `discrete`) and builds the model.
pub fn reverse_engineer(
    series: &TimeSeries,
    p: u64,
    choice: &BasisChoice,
    discrete: bool,
) -> Result<GRNModel> {
    let states = if discrete {
        passthrough(series, p)?
    } else {
        discretize(series, p)?
    };
    let field = PrimeField::new(p).map_err(|_| Error::NonPrimeStates(p))?;
    let mut model = transition_functions(&states, field, choice)?;
    model.labels = series.labels.clone();
    Ok(model)
}
