//! Buchberger–Möller: reduced Gröbner basis and standard monomials of the
//! vanishing ideal of a point set, for any admissible order.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::error::Result;
use crate::field::PrimeField;
use crate::points::PointSet;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerResult {
    /// Reduced Gröbner basis, by increasing leading monomial.
    pub groebner: Vec<Polynomial>,
    /// Standard monomials in increasing order.
    pub standard: Vec<Monomial>,
    pub order: MonomialOrder,
}

impl GroebnerResult {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order.to_string(),
            "groebner": self.groebner.iter().map(|g| g.to_string_with(&self.order)).collect::<Vec<_>>(),
            "standard": self.standard.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        })
    }
}

struct Row {
    vec: Vec<u64>,
    pivot: usize,
    /// `vec` as a combination of the evaluation vectors of the standard
    /// monomials accepted so far.
    comb: Vec<u64>,
}

struct Candidate {
    mono: Monomial,
    /// Standard monomial it was grown from, and the variable multiplied in.
    parent: usize,
    var: usize,
}

/// Processes monomials in increasing order, starting from `1` and growing the
/// frontier by multiplying accepted monomials with each variable. A monomial
/// whose evaluation vector is independent of the accepted ones is standard;
/// otherwise the dependency is a Gröbner element with that leading monomial.
pub fn buchberger_moller(points: &PointSet, order: &MonomialOrder) -> Result<GroebnerResult> {
    let n = points.n();
    order.validate(n)?;
    points.require_distinct()?;
    let field = points.field();
    let m = points.m();

    let mut standard: Vec<Monomial> = Vec::new();
    let mut evals: Vec<Vec<u64>> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut leading: Vec<Monomial> = Vec::new();
    let mut groebner = Vec::new();

    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut frontier = vec![Candidate {
        mono: Monomial::one(n),
        parent: usize::MAX,
        var: 0,
    }];
    seen.insert(Monomial::one(n));

    while !frontier.is_empty() {
        let mut best = 0;
        for i in 1..frontier.len() {
            if order
                .cmp_monomials(&frontier[i].mono, &frontier[best].mono)
                .is_lt()
            {
                best = i;
            }
        }
        let cand = frontier.swap_remove(best);
        if leading.iter().any(|l| l.divides(&cand.mono)) {
            continue;
        }
        let eval: Vec<u64> = if cand.parent == usize::MAX {
            vec![1; m]
        } else {
            evals[cand.parent]
                .iter()
                .zip(points.points())
                .map(|(&e, p)| field.mul(e, p[cand.var]))
                .collect()
        };
        let (residue, comb) = reduce(field, &rows, eval.clone(), standard.len());
        match residue.iter().position(|&x| x != 0) {
            None => {
                let mut g = Polynomial::term(field, cand.mono.clone(), 1);
                for (s, &c) in standard.iter().zip(&comb) {
                    if c != 0 {
                        g.add_assign_unchecked(&Polynomial::term(field, s.clone(), 1), c);
                    }
                }
                leading.push(cand.mono);
                groebner.push(g);
            }
            Some(pivot) => {
                let inv = field.inv(residue[pivot])?;
                let mut comb = comb;
                comb.push(1);
                rows.push(Row {
                    vec: residue.iter().map(|&x| field.mul(x, inv)).collect(),
                    pivot,
                    comb: comb.iter().map(|&x| field.mul(x, inv)).collect(),
                });
                let idx = standard.len();
                for var in 0..n {
                    let next = cand.mono.mul_var(var);
                    if seen.insert(next.clone()) {
                        frontier.push(Candidate {
                            mono: next,
                            parent: idx,
                            var,
                        });
                    }
                }
                standard.push(cand.mono);
                evals.push(eval);
            }
        }
    }

    Ok(GroebnerResult {
        groebner,
        standard,
        order: order.clone(),
    })
}

/// Reduces `v` against the semi-echelon rows. Returns the residue and the
/// coefficients `c` with `residue = v + sum c_j * eval(s_j)`.
fn reduce(field: PrimeField, rows: &[Row], mut v: Vec<u64>, k: usize) -> (Vec<u64>, Vec<u64>) {
    let mut comb = vec![0u64; k];
    for row in rows {
        let c = v[row.pivot];
        if c == 0 {
            continue;
        }
        let nc = field.neg(c);
        for (x, &r) in v.iter_mut().zip(&row.vec) {
            if r != 0 {
                *x = field.add(*x, field.mul(nc, r));
            }
        }
        for (x, &r) in comb.iter_mut().zip(&row.comb) {
            if r != 0 {
                *x = field.add(*x, field.mul(nc, r));
            }
        }
    }
    (v, comb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn strs(ps: &[Polynomial]) -> Vec<String> {
        let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn reverse_engineering_points() {
        let f = PrimeField::new(3).unwrap();
        let pts = PointSet::new(
            f,
            vec![vec![2, 2, 2], vec![1, 0, 2], vec![1, 0, 0], vec![0, 1, 1]],
        )
        .unwrap();
        let r = buchberger_moller(&pts, &MonomialOrder::lex(3)).unwrap();
        let std: Vec<String> = r.standard.iter().map(|s| s.to_string()).collect();
        assert_eq!(std, vec!["1", "x3", "x3^2", "x2"]);
        // the three printed elements plus the field relation x3^3 - x3
        let expected: Vec<Polynomial> = [
            "x1+x2+2",
            "x2*x3+x2+2*x3^2+2*x3",
            "x2^2+x2+2*x3^2+2*x3",
            "x3^3-x3",
        ]
        .iter()
        .map(|s| Polynomial::parse(f, 3, s).unwrap())
        .collect();
        assert_eq!(strs(&r.groebner), strs(&expected));
    }

    #[test]
    fn single_point() {
        let f = PrimeField::new(3).unwrap();
        let pts = PointSet::new(f, vec![vec![1, 2]]).unwrap();
        let r = buchberger_moller(&pts, &MonomialOrder::degrevlex(2)).unwrap();
        assert_eq!(r.standard, vec![Monomial::one(2)]);
        let expected = vec![
            Polynomial::parse(f, 2, "x2-2").unwrap(),
            Polynomial::parse(f, 2, "x1-1").unwrap(),
        ];
        assert_eq!(strs(&r.groebner), strs(&expected));
    }

    #[test]
    fn projected_degrevlex() {
        // coordinates (x5, x7, x1) of the eight-variable example, in that order
        let f = PrimeField::new(43).unwrap();
        let pts = PointSet::new(
            f,
            vec![
                vec![1, 3, 1],
                vec![2, 3, 1],
                vec![3, 2, 1],
                vec![4, 2, 0],
                vec![5, 2, 0],
                vec![6, 2, 2],
            ],
        )
        .unwrap();
        let r = buchberger_moller(&pts, &MonomialOrder::degrevlex(3)).unwrap();
        let std: Vec<String> = r.standard.iter().map(|s| s.to_string()).collect();
        assert_eq!(std, vec!["1", "x3", "x2", "x1", "x3^2", "x1*x3"]);
        for g in &r.groebner {
            for p in pts.points() {
                assert_eq!(g.evaluate(p).unwrap(), 0);
            }
        }
    }

    #[test]
    fn rejects_duplicates_and_bad_orders() {
        let f = PrimeField::new(5).unwrap();
        let pts = PointSet::new(f, vec![vec![1, 2], vec![1, 2]]).unwrap();
        assert!(matches!(
            buchberger_moller(&pts, &MonomialOrder::lex(2)),
            Err(Error::DuplicatePoints { .. })
        ));
        let pts = PointSet::new(f, vec![vec![1, 2]]).unwrap();
        assert!(buchberger_moller(&pts, &MonomialOrder::lex(3)).is_err());
    }
}
