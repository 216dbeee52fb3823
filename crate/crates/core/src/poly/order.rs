//! Admissible monomial orders, including block (elimination) orders.
//!
//! Order grammar, used by the CLI and by [`MonomialOrder::parse`]:
//!
//! ```text
//! order := "lex" [":" vars] | "degrevlex" [":" vars] | "block:(" order ");(" order ")"
//! vars  := var (">" var)*        e.g. x3>x1>x2
//! ```
//!
//! A bare `lex` or `degrevlex` means `x1 > x2 > ... > xn`. In a block order
//! the first sub-order acts on the variables it lists (the eliminated block)
//! and the second one on its own variables; the second block is compared
//! first and the first block only breaks ties.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Variables listed from most to least significant (0-based indices).
    Lex(Vec<usize>),
    /// Variables listed from largest to smallest (0-based indices).
    DegRevLex(Vec<usize>),
    Block {
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::Lex((0..nvars).collect())
    }

    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder::DegRevLex((0..nvars).collect())
    }

    pub fn block(first: MonomialOrder, second: MonomialOrder) -> Self {
        MonomialOrder::Block {
            first: Box::new(first),
            second: Box::new(second),
        }
    }

    /// The variables this order looks at, in its own ranking.
    pub fn vars(&self) -> Vec<usize> {
        match self {
            MonomialOrder::Lex(v) | MonomialOrder::DegRevLex(v) => v.clone(),
            MonomialOrder::Block { first, second } => {
                let mut v = second.vars();
                v.extend(first.vars());
                v
            }
        }
    }

    pub fn is_lex(&self) -> bool {
        matches!(self, MonomialOrder::Lex(_))
    }

    /// Checks that the order is a total order on monomials in `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        self.validate_vars(nvars, true)
    }

    fn validate_vars(&self, nvars: usize, require_all: bool) -> Result<()> {
        let mut seen = vec![false; nvars];
        for v in self.vars() {
            if v >= nvars {
                return Err(Error::InvalidOrder(format!(
                    "variable x{} out of range for {nvars} variables",
                    v + 1
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrder(format!(
                    "variable x{} listed twice",
                    v + 1
                )));
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s).filter(|_| require_all) {
            return Err(Error::InvalidOrder(format!(
                "variable x{} not ranked",
                missing + 1
            )));
        }
        Ok(())
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if u.nvars() != v.nvars() {
            return Err(Error::DimensionMismatch {
                expected: u.nvars(),
                got: v.nvars(),
            });
        }
        if let Some(&bad) = self.vars().iter().find(|&&i| i >= u.nvars()) {
            return Err(Error::DimensionMismatch {
                expected: bad + 1,
                got: u.nvars(),
            });
        }
        Ok(self.cmp_monomials(u, v))
    }

    /// Comparison without dimension checks; callers guarantee compatible input.
    pub fn cmp_monomials(&self, u: &Monomial, v: &Monomial) -> Ordering {
        let (a, b) = (u.exponents(), v.exponents());
        match self {
            MonomialOrder::Lex(vars) => vars
                .iter()
                .map(|&i| a[i].cmp(&b[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            MonomialOrder::DegRevLex(vars) => {
                let da: u32 = vars.iter().map(|&i| a[i]).sum();
                let db: u32 = vars.iter().map(|&i| b[i]).sum();
                da.cmp(&db).then_with(|| {
                    vars.iter()
                        .rev()
                        .map(|&i| b[i].cmp(&a[i]))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
            }
            MonomialOrder::Block { first, second } => second
                .cmp_monomials(u, v)
                .then_with(|| first.cmp_monomials(u, v)),
        }
    }

    /// The order induced on a subset of the variables.
    ///
    /// Every variable of `subset` must be ranked by `self`; variables outside
    /// the subset are dropped.
    pub fn restrict(&self, subset: &[usize]) -> Result<MonomialOrder> {
        let keep = |vars: &[usize]| -> Vec<usize> {
            vars.iter()
                .copied()
                .filter(|v| subset.contains(v))
                .collect()
        };
        let all = self.vars();
        if let Some(&v) = subset.iter().find(|v| !all.contains(v)) {
            return Err(Error::InvalidOrder(format!(
                "variable x{} not ranked",
                v + 1
            )));
        }
        Ok(match self {
            MonomialOrder::Lex(v) => MonomialOrder::Lex(keep(v)),
            MonomialOrder::DegRevLex(v) => MonomialOrder::DegRevLex(keep(v)),
            MonomialOrder::Block { first, second } => {
                let f_vars = keep(&first.vars());
                let s_vars = keep(&second.vars());
                match (f_vars.is_empty(), s_vars.is_empty()) {
                    (true, _) => second.restrict(&s_vars)?,
                    (_, true) => first.restrict(&f_vars)?,
                    _ => MonomialOrder::block(first.restrict(&f_vars)?, second.restrict(&s_vars)?),
                }
            }
        })
    }

    /// Renames variable `i` to `map[i]`.
    pub fn relabel(&self, map: &[usize]) -> MonomialOrder {
        match self {
            MonomialOrder::Lex(v) => MonomialOrder::Lex(v.iter().map(|&i| map[i]).collect()),
            MonomialOrder::DegRevLex(v) => {
                MonomialOrder::DegRevLex(v.iter().map(|&i| map[i]).collect())
            }
            MonomialOrder::Block { first, second } => {
                MonomialOrder::block(first.relabel(map), second.relabel(map))
            }
        }
    }

    pub fn parse(text: &str, nvars: usize) -> Result<MonomialOrder> {
        let order = Self::parse_inner(text.trim(), nvars)?;
        order.validate(nvars)?;
        Ok(order)
    }

    /// As [`MonomialOrder::parse`], but the order may rank only some of the
    /// variables.
    pub fn parse_partial(text: &str, nvars: usize) -> Result<MonomialOrder> {
        let order = Self::parse_inner(text.trim(), nvars)?;
        order.validate_vars(nvars, false)?;
        Ok(order)
    }

    fn parse_inner(text: &str, nvars: usize) -> Result<MonomialOrder> {
        let bad = || Error::InvalidOrder(text.to_string());
        let (kind, rest) = match text.split_once(':') {
            Some((k, r)) => (k.trim(), Some(r.trim())),
            None => (text, None),
        };
        match kind {
            "lex" | "degrevlex" => {
                let vars = match rest {
                    None => (0..nvars).collect(),
                    Some(r) => r
                        .split('>')
                        .map(|t| parse_var(t.trim()).ok_or_else(bad))
                        .collect::<Result<Vec<_>>>()?,
                };
                Ok(if kind == "lex" {
                    MonomialOrder::Lex(vars)
                } else {
                    MonomialOrder::DegRevLex(vars)
                })
            }
            "block" => {
                let r = rest.ok_or_else(bad)?;
                let (a, b) = split_block(r).ok_or_else(bad)?;
                Ok(MonomialOrder::block(
                    Self::parse_inner(a, nvars)?,
                    Self::parse_inner(b, nvars)?,
                ))
            }
            _ => Err(bad()),
        }
    }
}

fn parse_var(t: &str) -> Option<usize> {
    let idx: usize = t.strip_prefix('x')?.parse().ok()?;
    idx.checked_sub(1)
}

/// Splits `(<a>);(<b>)` at the top-level `;`.
fn split_block(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => {
                let a = s[..i].trim().strip_prefix('(')?.strip_suffix(')')?;
                let b = s[i + 1..].trim().strip_prefix('(')?.strip_suffix(')')?;
                return Some((a.trim(), b.trim()));
            }
            _ => {}
        }
    }
    None
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(|i| format!("x{}", i + 1))
                .collect::<Vec<_>>()
                .join(">")
        };
        match self {
            MonomialOrder::Lex(v) => write!(f, "lex:{}", list(v)),
            MonomialOrder::DegRevLex(v) => write!(f, "degrevlex:{}", list(v)),
            MonomialOrder::Block { first, second } => write!(f, "block:({first});({second})"),
        }
    }
}
