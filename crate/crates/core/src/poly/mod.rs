//! Sparse multivariate polynomials over a prime field.
//!
//! Text form (used for display, JSON and the CLI): a `+`-separated list of
//! terms `c*x1^a1*x2^a2`, with coefficients in `[0, p)`, coefficient `1`
//! omitted on non-constant terms, exponent `1` omitted, and `0` for the zero
//! polynomial. The parser additionally accepts `-`, parentheses and integer
//! powers of sub-expressions, e.g. `11*(x1-1)^3*x1^2`.

mod monomial;
mod order;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

pub use monomial::Monomial;
pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Monomial, u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: u64) -> Self {
        Self::term(field, Monomial::one(nvars), c)
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }

    /// The variable `x_{index+1}`.
    pub fn var(field: PrimeField, nvars: usize, index: usize) -> Self {
        Self::term(field, Monomial::var(nvars, index), 1)
    }

    pub fn term(field: PrimeField, m: Monomial, c: u64) -> Self {
        let mut p = Self::zero(field, m.nvars());
        let c = c % field.modulus();
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    /// `coeffs[0] + coeffs[1]*x_{v1} + ...` for a linear form over the given variables.
    pub fn linear(field: PrimeField, nvars: usize, vars: &[usize], coeffs: &[u64]) -> Self {
        let mut p = Self::zero(field, nvars);
        for (&v, &c) in vars.iter().zip(coeffs) {
            p.add_term(Monomial::var(nvars, v), c);
        }
        p
    }

    pub fn from_terms(
        field: PrimeField,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: m.nvars(),
                });
            }
            p.add_term(m, c % field.modulus());
        }
        Ok(p)
    }

    pub fn parse(field: PrimeField, nvars: usize, text: &str) -> Result<Self> {
        parse::parse(field, nvars, text)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `0` for constants and for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, u64)> {
        let mut t: Vec<_> = self.terms().collect();
        t.sort_by(|a, b| order.cmp_monomials(b.0, a.0));
        t
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.terms.keys().max_by(|a, b| order.cmp_monomials(a, b))
    }

    fn add_term(&mut self, m: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let f = self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = f.add(*e.get(), c);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other, 1);
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other, self.field.modulus() - 1);
        Ok(out)
    }

    /// `self += scale * other`, fields and dimensions already checked.
    pub(crate) fn add_assign_unchecked(&mut self, other: &Polynomial, scale: u64) {
        if scale == 0 {
            return;
        }
        for (m, &c) in &other.terms {
            let c = if scale == 1 {
                c
            } else {
                self.field.mul(c, scale)
            };
            self.add_term(m.clone(), c);
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, scale: u64) -> Result<()> {
        self.check(other)?;
        self.add_assign_unchecked(other, scale % self.field.modulus());
        Ok(())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = c % self.field.modulus();
        let mut out = Polynomial::zero(self.field, self.nvars);
        if c == 0 {
            return out;
        }
        for (m, &v) in &self.terms {
            out.terms.insert(m.clone(), self.field.mul(v, c));
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.modulus() - 1)
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.nvars);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    pub fn arith(&self, other: &Polynomial, op: PolyOp) -> Result<Polynomial> {
        match op {
            PolyOp::Add => self.add(other),
            PolyOp::Sub => self.sub(other),
            PolyOp::Mul => self.mul(other),
        }
    }

    /// Exact value at `point`; each term of degree `d` costs `d`
    /// multiplications plus one addition.
    pub fn evaluate(&self, point: &[u64]) -> Result<u64> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        Ok(self.evaluate_unchecked(point))
    }

    pub(crate) fn evaluate_unchecked(&self, point: &[u64]) -> u64 {
        let f = self.field;
        let mut acc = 0;
        for (m, &c) in &self.terms {
            let mut t = c;
            for (&e, &x) in m.exponents().iter().zip(point) {
                for _ in 0..e {
                    t = f.mul(t, x);
                }
            }
            acc = f.add(acc, t);
        }
        acc
    }

    /// Substitutes `x_i -> x_{map[i]}` (into a ring with `nvars` variables).
    pub fn rename_vars(&self, map: &[usize], nvars: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.field, nvars);
        for (m, &c) in &self.terms {
            let mut e = vec![0u32; nvars];
            for (i, &k) in m.exponents().iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial::new(e), c);
        }
        out
    }

    /// Text form with terms sorted descending under `order`.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        format_terms(self.sorted_terms(order).into_iter())
    }
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a Monomial, u64)>) -> String {
    let parts: Vec<String> = terms
        .map(|(m, c)| {
            if m.is_one() {
                c.to_string()
            } else if c == 1 {
                m.to_string()
            } else {
                format!("{c}*{m}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().rev().map(|(m, &c)| (m, c))))
    }
}

/// The `s x m` matrix whose row `i` is `polys[i]` evaluated at every point.
pub fn evaluate_matrix(polys: &[Polynomial], points: &[Vec<u64>]) -> Result<Matrix> {
    let mut out = Matrix::zeros(polys.len(), points.len());
    for (i, f) in polys.iter().enumerate() {
        for (j, p) in points.iter().enumerate() {
            out.set(i, j, f.evaluate(p)?);
        }
    }
    Ok(out)
}
