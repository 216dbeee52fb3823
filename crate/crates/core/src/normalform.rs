//! Normal forms by linear algebra: with `B(P)^-1` in hand, the normal form of
//! `f` only needs `f` evaluated on the points.

use serde_json::{json, Value};

use crate::bases::{Basis, BasisKind};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    /// Coordinates with respect to the basis elements.
    pub coefficients: Vec<u64>,
    /// `sum c_i e_i`, expanded.
    pub polynomial: Polynomial,
    /// `f(p_1), ..., f(p_m)`.
    pub values: Vec<u64>,
}

impl NormalFormResult {
    pub fn to_json(&self) -> Value {
        json!({
            "coefficients": self.coefficients,
            "polynomial": self.polynomial.to_string(),
            "values": self.values,
        })
    }
}

/// Gauss–Jordan inverse; see [`Matrix::inverse`].
pub fn invert(m: &Matrix, field: PrimeField) -> Result<Matrix> {
    m.inverse(field)
}

/// `sum c_i e_i` over the basis elements.
pub fn combine(coefficients: &[u64], basis: &Basis) -> Result<Polynomial> {
    if coefficients.len() != basis.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            got: coefficients.len(),
        });
    }
    let points = basis.points();
    let mut out = Polynomial::zero(points.field(), points.n());
    for (e, &c) in basis.elements().iter().zip(coefficients) {
        if c != 0 {
            out.add_assign_unchecked(e, c);
        }
    }
    Ok(out)
}

/// `f_i = sum_k B(P)^-1[i][k] e_k`, so that `f_i(p_j) = δ_ij`.
pub fn separators_from_basis(basis: &Basis) -> Result<Vec<Polynomial>> {
    let inv = basis.bp_inv();
    (0..basis.len())
        .map(|i| combine(inv.row(i), basis))
        .collect()
}

fn check_ring(f: &Polynomial, basis: &Basis) -> Result<()> {
    let points = basis.points();
    if f.field() != points.field() {
        return Err(Error::FieldMismatch {
            left: f.field().modulus(),
            right: points.field().modulus(),
        });
    }
    if f.nvars() != points.n() {
        return Err(Error::DimensionMismatch {
            expected: points.n(),
            got: f.nvars(),
        });
    }
    Ok(())
}

fn zero_result(basis: &Basis) -> NormalFormResult {
    let points = basis.points();
    NormalFormResult {
        coefficients: vec![0; basis.len()],
        polynomial: Polynomial::zero(points.field(), points.n()),
        values: vec![0; points.m()],
    }
}

fn values_at_points(f: &Polynomial, basis: &Basis) -> Vec<u64> {
    basis
        .points()
        .points()
        .iter()
        .map(|p| f.evaluate_unchecked(p))
        .collect()
}

/// Coefficients `(B(P)^-1)^t (f(p_1), ..., f(p_m))^t`: one evaluation of `f`
/// per point and one matrix-vector product with the cached inverse.
pub fn normal_form(f: &Polynomial, basis: &Basis) -> Result<NormalFormResult> {
    check_ring(f, basis)?;
    if f.is_zero() {
        return Ok(zero_result(basis));
    }
    let field = basis.points().field();
    let values = values_at_points(f, basis);
    let coefficients = basis.bp_inv().left_mul_vec(&values, field)?;
    Ok(NormalFormResult {
        polynomial: combine(&coefficients, basis)?,
        coefficients,
        values,
    })
}

/// For a separator basis the coefficients are just the values of `f`.
pub fn nf_separator_fastpath(f: &Polynomial, basis: &Basis) -> Result<NormalFormResult> {
    if basis.kind() != BasisKind::Separator {
        return Err(Error::WrongKind {
            expected: BasisKind::Separator.as_str().to_string(),
            got: basis.kind().as_str().to_string(),
        });
    }
    check_ring(f, basis)?;
    if f.is_zero() {
        return Ok(zero_result(basis));
    }
    let values = values_at_points(f, basis);
    Ok(NormalFormResult {
        polynomial: combine(&values, basis)?,
        coefficients: values.clone(),
        values,
    })
}
