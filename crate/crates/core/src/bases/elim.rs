//! Standard monomials for elimination orders: the witness list of the
//! permuted points picks out the variables that matter, and the standard
//! monomials are computed on the projection to those variables.

use super::lex::lex_standard_monomials;
use super::{monomial_basis, Basis, BasisKind, PointSet, Provenance};
use crate::bm::buchberger_moller;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder};

#[derive(Debug, Clone)]
pub struct ElimResult {
    /// Standard monomials in the original variables, increasing for
    /// `elimination_order`.
    pub monomials: Vec<Monomial>,
    pub basis: Basis,
    /// Coordinates in the order the Σ-algorithm scanned them (0-based).
    pub scan: Vec<usize>,
    /// 1-based positions in `scan` where the partition was refined.
    pub witness_list: Vec<usize>,
    /// The variables at those positions (0-based).
    pub witness_vars: Vec<usize>,
    /// `order2` restricted to the witness variables.
    pub order2: MonomialOrder,
    /// Lex on the remaining variables in permutation order, compared first,
    /// refined by `order2`. It eliminates the remaining variables, so
    /// `monomials` are its standard monomials.
    pub elimination_order: MonomialOrder,
    pub method: &'static str,
    pub comparisons: u64,
}

fn check_permutation(tau: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if tau.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: tau.len(),
        });
    }
    for &t in tau {
        if t >= n || seen[t] {
            return Err(Error::InvalidOrder(format!(
                "{:?} is not a permutation of 1..{n}",
                tau.iter().map(|t| t + 1).collect::<Vec<_>>()
            )));
        }
        seen[t] = true;
    }
    Ok(())
}

fn lift(mono: &Monomial, vars: &[usize], n: usize) -> Monomial {
    let mut e = vec![0; n];
    for (&v, &x) in vars.iter().zip(mono.exponents()) {
        e[v] = x;
    }
    Monomial::new(e)
}

/// Construction 4.
///
/// `tau` is a 0-based permutation with `y_i = x_{tau[i]}`. The Σ-algorithm
/// runs over `y_n, ..., y_1`; `order2` ranks (at least) the resulting witness
/// variables. When its restriction to them is lex the combinatorial lex trie
/// is used, otherwise Buchberger–Möller on the projected points.
pub fn elimination_standard_monomials(
    points: &PointSet,
    tau: &[usize],
    order2: &MonomialOrder,
) -> Result<ElimResult> {
    let n = points.n();
    check_permutation(tau, n)?;
    let scan: Vec<usize> = tau.iter().rev().copied().collect();
    let witness = points.project(&scan).require_distinct()?;
    let witness_vars: Vec<usize> = witness.witness_list.iter().map(|&i| scan[i - 1]).collect();
    let rest: Vec<usize> = tau
        .iter()
        .copied()
        .filter(|v| !witness_vars.contains(v))
        .collect();

    let (order2_r, monomials, method) = if witness_vars.is_empty() {
        (
            MonomialOrder::Lex(Vec::new()),
            vec![Monomial::one(n)],
            "trivial",
        )
    } else {
        if let Some(&v) = order2.vars().iter().find(|&&v| v >= n) {
            return Err(Error::InvalidOrder(format!(
                "variable x{} out of range",
                v + 1
            )));
        }
        let order2_r = order2.restrict(&witness_vars)?;
        if let MonomialOrder::Lex(vars) = &order2_r {
            let lex = lex_standard_monomials(&points.project(vars).tuples())?;
            let lifted = lex
                .monomials
                .iter()
                .map(|mono| lift(mono, vars, n))
                .collect();
            (order2_r, lifted, "lex_trie")
        } else {
            let mut sorted = witness_vars.clone();
            sorted.sort_unstable();
            let mut map = vec![usize::MAX; n];
            for (j, &v) in sorted.iter().enumerate() {
                map[v] = j;
            }
            let gb = buchberger_moller(&points.project(&sorted), &order2_r.relabel(&map))?;
            let lifted = gb
                .standard
                .iter()
                .map(|mono| lift(mono, &sorted, n))
                .collect();
            (order2_r, lifted, "buchberger_moller")
        }
    };

    let elimination_order = match (rest.is_empty(), witness_vars.is_empty()) {
        (true, _) => order2_r.clone(),
        (false, true) => MonomialOrder::Lex(rest),
        (false, false) => MonomialOrder::block(order2_r.clone(), MonomialOrder::Lex(rest)),
    };
    let basis = monomial_basis(
        BasisKind::ElimMonomial,
        monomials,
        &elimination_order,
        points.clone(),
        Provenance::ElimMonomial {
            permutation: tau.to_vec(),
            witness_vars: witness_vars.clone(),
            order2: order2_r.clone(),
            elimination_order: elimination_order.clone(),
            method,
        },
    )?;
    Ok(ElimResult {
        monomials: basis.monomials().expect("monomial basis"),
        basis,
        scan,
        witness_list: witness.witness_list,
        witness_vars,
        order2: order2_r,
        elimination_order,
        method,
        comparisons: witness.comparisons,
    })
}
