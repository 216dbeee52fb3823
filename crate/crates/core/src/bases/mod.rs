//! The four constructions of vector-space bases of `S/I(P)`.
//!
//! Every construction returns a [`Basis`]: `m` polynomials together with
//! their evaluation matrix `B(P)` and its inverse, which the normal-form code
//! reuses without re-inverting.

mod elim;
mod lex;
mod linear;
mod separator;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{evaluate_matrix, Monomial, MonomialOrder, Polynomial};

pub use crate::points::PointSet;
pub use elim::{elimination_standard_monomials, ElimResult};
pub use lex::{lex_basis, lex_standard_monomials, LexResult, LexTrie, LexTrieNode};
pub use linear::{
    check_realization, distinct_element_algorithm, linear_power_basis, linear_power_basis_with,
    randomized_realization, required_field_size, separator_map_basis, DistinctElementResult,
    DistinctElementStage, RandomRealization,
};
pub use separator::{
    reduce_separator, separator_basis, separator_factors, FactoredSeparator, LinearFactor,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Separator,
    LinearPower,
    SeparatorMapPower,
    LexMonomial,
    ElimMonomial,
}

impl BasisKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            BasisKind::Separator => "separator",
            BasisKind::LinearPower => "linear_power",
            BasisKind::SeparatorMapPower => "separator_map_power",
            BasisKind::LexMonomial => "lex_monomial",
            BasisKind::ElimMonomial => "elim_monomial",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "separator" => BasisKind::Separator,
            "linear_power" => BasisKind::LinearPower,
            "separator_map_power" => BasisKind::SeparatorMapPower,
            "lex_monomial" => BasisKind::LexMonomial,
            "elim_monomial" => BasisKind::ElimMonomial,
            other => return Err(Error::Parse(format!("unknown basis kind {other:?}"))),
        })
    }

    pub fn is_monomial(&self) -> bool {
        matches!(self, BasisKind::LexMonomial | BasisKind::ElimMonomial)
    }
}

/// Construction-specific metadata.
#[derive(Debug, Clone)]
pub enum Provenance {
    Separator {
        witness_list: Vec<usize>,
        witness_matrix: Vec<Vec<usize>>,
        factored: Vec<FactoredSeparator>,
    },
    LinearPower {
        coordinates: Vec<usize>,
        coefficients: Vec<u64>,
        linear_form: Polynomial,
        values: Vec<u64>,
        /// `prod (x - f(p_i))`, coefficients from degree 0 upwards.
        generator: Vec<u64>,
    },
    SeparatorMap {
        values: Vec<u64>,
        map: Polynomial,
    },
    LexMonomial {
        comparisons: u64,
        branching: usize,
    },
    ElimMonomial {
        permutation: Vec<usize>,
        witness_vars: Vec<usize>,
        order2: MonomialOrder,
        elimination_order: MonomialOrder,
        method: &'static str,
    },
    /// Read back from JSON; kept verbatim.
    Loaded(Value),
}

#[derive(Debug, Clone)]
pub struct Basis {
    kind: BasisKind,
    elements: Vec<Polynomial>,
    points: PointSet,
    bp: Matrix,
    bp_inv: Matrix,
    provenance: Provenance,
}

impl Basis {
    /// Evaluates `elements` on `points` and inverts the result.
    pub fn from_elements(
        kind: BasisKind,
        elements: Vec<Polynomial>,
        points: PointSet,
        provenance: Provenance,
    ) -> Result<Basis> {
        if elements.len() != points.m() {
            return Err(Error::DimensionMismatch {
                expected: points.m(),
                got: elements.len(),
            });
        }
        let bp = evaluate_matrix(&elements, points.points())?;
        let bp_inv = bp.inverse(points.field())?;
        Ok(Basis {
            kind,
            elements,
            points,
            bp,
            bp_inv,
            provenance,
        })
    }

    pub(crate) fn with_matrices(
        kind: BasisKind,
        elements: Vec<Polynomial>,
        points: PointSet,
        bp: Matrix,
        bp_inv: Matrix,
        provenance: Provenance,
    ) -> Basis {
        Basis {
            kind,
            elements,
            points,
            bp,
            bp_inv,
            provenance,
        }
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// `B(P)`: row `i` holds `e_i` evaluated at every point.
    pub fn bp(&self) -> &Matrix {
        &self.bp
    }

    pub fn bp_inv(&self) -> &Matrix {
        &self.bp_inv
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The monomials of a monomial basis, in basis order.
    pub fn monomials(&self) -> Option<Vec<Monomial>> {
        self.elements
            .iter()
            .map(|e| {
                let mut t = e.terms();
                match (t.next(), t.next()) {
                    (Some((m, 1)), None) => Some(m.clone()),
                    _ => None,
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "field": self.points.field().modulus(),
            "nvars": self.points.n(),
            "elements": self.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "bp": self.bp.to_rows(),
            "bp_inv": self.bp_inv.to_rows(),
            "provenance": self.provenance_json(),
        })
    }

    fn provenance_json(&self) -> Value {
        match &self.provenance {
            Provenance::Separator {
                witness_list,
                witness_matrix,
                factored,
            } => json!({
                "witness_list": witness_list,
                "witness_matrix": witness_matrix,
                "factored": factored.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            }),
            Provenance::LinearPower {
                coordinates,
                coefficients,
                linear_form,
                values,
                generator,
            } => json!({
                "coordinates": coordinates,
                "coefficients": coefficients,
                "linear_form": linear_form.to_string(),
                "values": values,
                "generator": generator,
            }),
            Provenance::SeparatorMap { values, map } => json!({
                "values": values,
                "map": map.to_string(),
            }),
            Provenance::LexMonomial {
                comparisons,
                branching,
            } => json!({
                "order": MonomialOrder::lex(self.points.n()).to_string(),
                "comparisons": comparisons,
                "branching": branching,
            }),
            Provenance::ElimMonomial {
                permutation,
                witness_vars,
                order2,
                elimination_order,
                method,
            } => json!({
                "permutation": permutation.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "witness_vars": witness_vars.iter().map(|i| format!("x{}", i + 1)).collect::<Vec<_>>(),
                "order2": order2.to_string(),
                "elimination_order": elimination_order.to_string(),
                "method": method,
            }),
            Provenance::Loaded(v) => v.clone(),
        }
    }

    /// Reads a basis written by [`Basis::to_json`] back for the given points.
    /// `B(P)` and its inverse are recomputed and must match the stored ones.
    pub fn from_json(value: &Value, points: PointSet) -> Result<Basis> {
        let bad = |what: &str| Error::Parse(format!("basis JSON: {what}"));
        let kind = BasisKind::parse(value["kind"].as_str().ok_or_else(|| bad("missing kind"))?)?;
        if let Some(p) = value["field"].as_u64() {
            if p != points.field().modulus() {
                return Err(Error::FieldMismatch {
                    left: p,
                    right: points.field().modulus(),
                });
            }
        }
        let elements = value["elements"]
            .as_array()
            .ok_or_else(|| bad("missing elements"))?
            .iter()
            .map(|e| {
                let s = e.as_str().ok_or_else(|| bad("element is not a string"))?;
                Polynomial::parse(points.field(), points.n(), s)
            })
            .collect::<Result<Vec<_>>>()?;
        let basis = Basis::from_elements(
            kind,
            elements,
            points,
            Provenance::Loaded(value["provenance"].clone()),
        )?;
        for (key, m) in [("bp", &basis.bp), ("bp_inv", &basis.bp_inv)] {
            if !value[key].is_null() {
                let stored: Matrix =
                    serde_json::from_value(value[key].clone()).map_err(|e| bad(&e.to_string()))?;
                if &stored != m {
                    return Err(bad(&format!("{key} does not match the points")));
                }
            }
        }
        Ok(basis)
    }
}

/// Shared helper: sorts monomials increasingly and wraps them as a basis.
pub(crate) fn monomial_basis(
    kind: BasisKind,
    mut monomials: Vec<Monomial>,
    order: &MonomialOrder,
    points: PointSet,
    provenance: Provenance,
) -> Result<Basis> {
    monomials.sort_by(|a, b| order.cmp_monomials(a, b));
    let field = points.field();
    let elements = monomials
        .into_iter()
        .map(|m| Polynomial::term(field, m, 1))
        .collect();
    Basis::from_elements(kind, elements, points, provenance)
}
