use std::fmt;

use super::{Basis, BasisKind, PointSet, Provenance};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::poly::{Monomial, Polynomial};
use crate::preprocess::WitnessData;

/// `(x_var - root)^multiplicity`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearFactor {
    pub var: usize,
    pub root: u64,
    pub multiplicity: u32,
}

/// `scale * prod factors`, the natural shape of a witness-matrix separator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredSeparator {
    pub field: PrimeField,
    pub nvars: usize,
    pub scale: u64,
    pub factors: Vec<LinearFactor>,
}

impl FactoredSeparator {
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::constant(self.field, self.nvars, self.scale);
        for f in &self.factors {
            let lin = Polynomial::from_terms(
                self.field,
                self.nvars,
                [
                    (Monomial::var(self.nvars, f.var), 1),
                    (Monomial::one(self.nvars), self.field.modulus() - f.root),
                ],
            )
            .expect("same ring");
            acc = acc.mul(&lin.pow(f.multiplicity)).expect("same ring");
        }
        acc
    }

    pub fn evaluate(&self, point: &[u64]) -> u64 {
        self.factors.iter().fold(self.scale, |acc, f| {
            let base = self.field.sub(point[f.var], f.root);
            self.field
                .mul(acc, self.field.pow(base, f.multiplicity as u64))
        })
    }

    /// Drops all multiplicities and rescales so the value at `point` is 1.
    pub fn reduced(&self, point: &[u64]) -> Result<FactoredSeparator> {
        let factors: Vec<LinearFactor> = self
            .factors
            .iter()
            .map(|f| LinearFactor {
                multiplicity: 1,
                ..*f
            })
            .collect();
        let unscaled = FactoredSeparator {
            scale: 1,
            factors,
            ..self.clone()
        };
        let v = unscaled.evaluate(point);
        let scale = self.field.inv(v).map_err(|_| Error::NotApplicable)?;
        Ok(FactoredSeparator { scale, ..unscaled })
    }
}

impl fmt::Display for FactoredSeparator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scale)?;
        for lf in &self.factors {
            let base = if lf.root == 0 {
                format!("x{}", lf.var + 1)
            } else {
                format!("(x{}-{})", lf.var + 1, lf.root)
            };
            if lf.multiplicity == 1 {
                write!(f, "*{base}")?;
            } else {
                write!(f, "*{base}^{}", lf.multiplicity)?;
            }
        }
        Ok(())
    }
}

/// `Q_i = prod_{j != i} (x_c - p_{j,c}) / (p_{i,c} - p_{j,c})` with `c` the
/// witness of `p_i` and `p_j`.
pub fn separator_factors(
    points: &PointSet,
    witness: &WitnessData,
) -> Result<Vec<FactoredSeparator>> {
    let field = points.field();
    let m = points.m();
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let pi = points.point(i);
        let mut denom = 1u64;
        let mut factors: Vec<LinearFactor> = Vec::new();
        for j in (0..m).filter(|&j| j != i) {
            let c = witness.witness(i, j);
            if c == 0 {
                return Err(Error::DuplicatePoints {
                    distinct: witness.distinct,
                    total: m,
                });
            }
            let var = c - 1;
            let root = points.point(j)[var];
            denom = field.mul(denom, field.sub(pi[var], root));
            match factors.iter_mut().find(|f| f.var == var && f.root == root) {
                Some(f) => f.multiplicity += 1,
                None => factors.push(LinearFactor {
                    var,
                    root,
                    multiplicity: 1,
                }),
            }
        }
        factors.sort_by_key(|f| (f.var, f.root));
        out.push(FactoredSeparator {
            field,
            nvars: points.n(),
            scale: field.inv(denom)?,
            factors,
        });
    }
    Ok(out)
}

/// Construction 1: separators read off the witness matrix.
pub fn separator_basis(points: &PointSet) -> Result<Basis> {
    let witness = points.require_distinct()?;
    let factored = separator_factors(points, &witness)?;
    let elements: Vec<Polynomial> = factored.iter().map(FactoredSeparator::expand).collect();
    let bp = crate::poly::evaluate_matrix(&elements, points.points())?;
    // the defining property of separators; anything else is a bug upstream
    if !bp.is_identity() {
        return Err(Error::Singular);
    }
    let m = points.m();
    Ok(Basis::with_matrices(
        BasisKind::Separator,
        elements,
        points.clone(),
        bp,
        Matrix::identity(m),
        Provenance::Separator {
            witness_list: witness.witness_list.clone(),
            witness_matrix: witness.matrix.to_rows(),
            factored,
        },
    ))
}

/// The low-degree separator obtained from `q` by dropping exponents.
pub fn reduce_separator(q: &FactoredSeparator, point: &[u64]) -> Result<Polynomial> {
    Ok(q.reduced(point)?.expand())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn example1(p: u64) -> PointSet {
        PointSet::new(
            PrimeField::new(p).unwrap(),
            vec![
                vec![1, 2, 0, 1, 1, 0, 3, 5],
                vec![1, 0, 1, 1, 2, 0, 3, 5],
                vec![1, 2, 0, 3, 3, 1, 2, 0],
                vec![0, 0, 2, 0, 4, 0, 2, 0],
                vec![0, 0, 2, 1, 5, 0, 2, 0],
                vec![2, 1, 3, 1, 6, 0, 2, 0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn sixth_separator_matches_closed_form() {
        let pts = example1(43);
        let b = separator_basis(&pts).unwrap();
        let expected = Polynomial::parse(pts.field(), 8, "11*(x1-1)^3*x1^2").unwrap();
        assert_eq!(b.elements()[5], expected);
        assert!(b.bp().is_identity());
        assert!(b.bp_inv().is_identity());
    }

    #[test]
    fn separators_are_dual_to_points() {
        let pts = example1(43);
        let b = separator_basis(&pts).unwrap();
        for (i, q) in b.elements().iter().enumerate() {
            for j in 0..6 {
                assert_eq!(q.evaluate(pts.point(j)).unwrap(), u64::from(i == j));
            }
        }
    }

    #[test]
    fn single_point_separator_is_one() {
        let pts = PointSet::new(PrimeField::new(5).unwrap(), vec![vec![1, 2]]).unwrap();
        let b = separator_basis(&pts).unwrap();
        assert_eq!(b.elements()[0].to_string(), "1");
    }

    #[test]
    fn duplicates_are_rejected() {
        let pts = PointSet::new(PrimeField::new(5).unwrap(), vec![vec![1, 2], vec![1, 2]]).unwrap();
        assert!(matches!(
            separator_basis(&pts),
            Err(Error::DuplicatePoints {
                distinct: 1,
                total: 2
            })
        ));
    }

    #[test]
    fn reduced_separator_of_q6() {
        let pts = example1(43);
        let w = pts.witness_data();
        let q6 = &separator_factors(&pts, &w).unwrap()[5];
        let r = reduce_separator(q6, pts.point(5)).unwrap();
        assert_eq!(
            r,
            Polynomial::parse(pts.field(), 8, "22*(x1-1)*x1").unwrap()
        );
        for j in 0..6 {
            assert_eq!(r.evaluate(pts.point(j)).unwrap(), u64::from(j == 5));
        }
    }

    #[test]
    fn reduced_separators_stay_separators() {
        let pts = example1(43);
        let w = pts.witness_data();
        for (i, q) in separator_factors(&pts, &w).unwrap().iter().enumerate() {
            let r = reduce_separator(q, pts.point(i)).unwrap();
            assert!(r.degree() <= q.expand().degree());
            for j in 0..6 {
                assert_eq!(r.evaluate(pts.point(j)).unwrap(), u64::from(i == j));
            }
        }
    }

    #[test]
    fn squarefree_and_trivial_reductions() {
        let field = PrimeField::new(7).unwrap();
        let one = FactoredSeparator {
            field,
            nvars: 2,
            scale: 1,
            factors: vec![],
        };
        assert_eq!(reduce_separator(&one, &[3, 4]).unwrap().to_string(), "1");
        let sq = FactoredSeparator {
            field,
            nvars: 2,
            scale: 3,
            factors: vec![LinearFactor {
                var: 0,
                root: 1,
                multiplicity: 1,
            }],
        };
        let r = reduce_separator(&sq, &[2, 0]).unwrap();
        assert_eq!(r.evaluate(&[2, 0]).unwrap(), 1);
        assert_eq!(
            r,
            sq.expand().scale(field.inv(sq.evaluate(&[2, 0])).unwrap())
        );
    }

    #[test]
    fn reduction_that_vanishes_is_not_applicable() {
        let field = PrimeField::new(7).unwrap();
        let q = FactoredSeparator {
            field,
            nvars: 1,
            scale: 1,
            factors: vec![LinearFactor {
                var: 0,
                root: 2,
                multiplicity: 2,
            }],
        };
        assert_eq!(reduce_separator(&q, &[2]), Err(Error::NotApplicable));
    }
}
