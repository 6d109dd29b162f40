//! Fourier–Motzkin elimination over the ordered `Q`-vector space `Q^(k)`.
//!
//! Unknowns are values in `Q^(k)`, coefficients are rationals and constants
//! are `Q^(k)` values. Elimination only adds rows and rescales them by
//! positive rationals, both of which preserve lexicographic inequalities, so
//! projection is exact. Strictness is carried along each combination.

use std::collections::BTreeMap;

use crate::error::{check_dim, Result};
use crate::lexpoly::{Constraint, Point, Relation};
use crate::ordered::LexVec;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
struct Row<F> {
    coeffs: Vec<F>,
    strict: bool,
    rhs: LexVec<F>,
}

impl<F: Scalar> Row<F> {
    fn lead(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `self - factor * other`
    fn sub_scaled(&self, factor: &F, other: &Row<F>) -> Row<F> {
        Row {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - factor.clone() * b.clone()).collect(),
            strict: self.strict,
            rhs: &self.rhs - &other.rhs.scale(factor),
        }
    }

    fn scaled(&self, q: &F) -> Row<F> {
        Row {
            coeffs: self.coeffs.iter().map(|c| c.clone() * q.clone()).collect(),
            strict: self.strict,
            rhs: self.rhs.scale(q),
        }
    }

    /// Value of `sum_{j != skip} coeffs_j x_j` at a partial assignment.
    fn partial_lhs(&self, x: &[Option<LexVec<F>>], skip: usize, k: usize) -> LexVec<F> {
        let mut acc = LexVec::zero(k);
        for (j, c) in self.coeffs.iter().enumerate() {
            if j != skip && !c.is_zero() {
                let xj = x[j].as_ref().expect("eliminated variable assigned before use");
                acc = &acc + &xj.scale(c);
            }
        }
        acc
    }
}

enum Step<F> {
    /// `x_var = rhs - sum_{j != var} coeffs_j x_j` (row normalized so `coeffs[var] = 1`).
    Substitute { var: usize, row: Row<F> },
    Bound { var: usize, lower: Vec<Row<F>>, upper: Vec<Row<F>> },
}

/// Decides whether a system of lex-linear relations over `N ⊗ Q^(k)` has a
/// solution, returning a witness when it does.
pub fn feasible<F: Scalar>(n: usize, k: usize, system: &[Constraint<F>]) -> Result<Option<Point<F>>> {
    for c in system {
        check_dim(n, c.u.len())?;
        check_dim(k, c.gamma.k())?;
    }
    let to_row = |c: &Constraint<F>| Row {
        coeffs: c.u.iter().map(|&x| F::from_i64(x)).collect(),
        strict: c.rel == Relation::Gt,
        rhs: c.gamma.clone(),
    };
    let mut eqs: Vec<Row<F>> = system.iter().filter(|c| c.rel == Relation::Eq).map(to_row).collect();
    let mut ineqs: Vec<Row<F>> = system.iter().filter(|c| c.rel != Relation::Eq).map(to_row).collect();
    let mut steps = Vec::new();
    let mut eliminated = vec![false; n];

    while let Some(e) = eqs.pop() {
        let Some(p) = e.lead() else {
            if e.rhs.is_zero() {
                continue;
            }
            return Ok(None);
        };
        let e = e.scaled(&(F::one() / e.coeffs[p].clone()));
        for r in eqs.iter_mut().chain(ineqs.iter_mut()) {
            if !r.coeffs[p].is_zero() {
                let f = r.coeffs[p].clone();
                *r = r.sub_scaled(&f, &e);
            }
        }
        eliminated[p] = true;
        steps.push(Step::Substitute { var: p, row: e });
    }

    let Some(mut ineqs) = prune(ineqs) else { return Ok(None) };
    for p in (0..n).filter(|&p| !eliminated[p]) {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in ineqs {
            if r.coeffs[p].is_positive() {
                lower.push(r);
            } else if r.coeffs[p].is_negative() {
                upper.push(r);
            } else {
                rest.push(r);
            }
        }
        for lo in &lower {
            for up in &upper {
                let a = lo.coeffs[p].clone();
                let b = -up.coeffs[p].clone();
                let mut combo = Row {
                    coeffs: lo.coeffs.iter().zip(&up.coeffs).map(|(x, y)| b.clone() * x.clone() + a.clone() * y.clone()).collect(),
                    strict: lo.strict || up.strict,
                    rhs: &lo.rhs.scale(&b) + &up.rhs.scale(&a),
                };
                combo.coeffs[p] = F::zero();
                rest.push(combo);
            }
        }
        steps.push(Step::Bound { var: p, lower, upper });
        match prune(rest) {
            Some(r) => ineqs = r,
            None => return Ok(None),
        }
    }
    debug_assert!(ineqs.iter().all(|r| r.lead().is_none()));

    let mut x: Vec<Option<LexVec<F>>> = vec![None; n];
    for step in steps.iter().rev() {
        match step {
            Step::Bound { var, lower, upper } => {
                x[*var] = Some(choose_value(*var, lower, upper, &x, k));
            }
            Step::Substitute { var, row } => {
                x[*var] = Some(&row.rhs - &row.partial_lhs(&x, *var, k));
            }
        }
    }
    let rows = x.into_iter().map(|v| v.unwrap_or_else(|| LexVec::zero(k))).collect();
    Ok(Some(Point::new(k, rows)?))
}

/// Normalizes rows, checks variable-free rows, and keeps only the strongest
/// row per coefficient direction. Returns `None` on a contradiction.
fn prune<F: Scalar>(rows: Vec<Row<F>>) -> Option<Vec<Row<F>>> {
    let mut best: BTreeMap<Vec<F>, (LexVec<F>, bool)> = BTreeMap::new();
    for r in rows {
        let Some(p) = r.lead() else {
            let zero = LexVec::zero(r.rhs.k());
            let ok = if r.strict { zero > r.rhs } else { zero >= r.rhs };
            if !ok {
                return None;
            }
            continue;
        };
        let r = r.scaled(&(F::one() / r.coeffs[p].abs()));
        match best.get_mut(&r.coeffs) {
            Some((rhs, strict)) => {
                if r.rhs > *rhs || (r.rhs == *rhs && r.strict && !*strict) {
                    *rhs = r.rhs;
                    *strict = r.strict;
                }
            }
            None => {
                best.insert(r.coeffs, (r.rhs, r.strict));
            }
        }
    }
    Some(best.into_iter().map(|(coeffs, (rhs, strict))| Row { coeffs, strict, rhs }).collect())
}

fn choose_value<F: Scalar>(
    var: usize,
    lower: &[Row<F>],
    upper: &[Row<F>],
    x: &[Option<LexVec<F>>],
    k: usize,
) -> LexVec<F> {
    // bound value for x_var implied by a row, with its strictness
    let bound = |r: &Row<F>| {
        let rest = r.partial_lhs(x, var, k);
        ((&r.rhs - &rest).scale(&(F::one() / r.coeffs[var].clone())), r.strict)
    };
    let tightest = |rows: &[Row<F>], want_max: bool| {
        let mut best: Option<(LexVec<F>, bool)> = None;
        for (v, s) in rows.iter().map(bound) {
            best = match best {
                None => Some((v, s)),
                Some((bv, bs)) => {
                    let better = if want_max { v > bv } else { v < bv };
                    if better {
                        Some((v, s))
                    } else if v == bv {
                        Some((bv, bs || s))
                    } else {
                        Some((bv, bs))
                    }
                }
            }
        };
        best
    };
    match (tightest(lower, true), tightest(upper, false)) {
        (Some((lo, _)), Some((hi, _))) => {
            if lo == hi {
                lo
            } else {
                (&lo + &hi).scale(&F::one().half())
            }
        }
        (Some((lo, strict)), None) => {
            if strict {
                &lo + &LexVec::leading_unit(k)
            } else {
                lo
            }
        }
        (None, Some((hi, strict))) => {
            if strict {
                &hi - &LexVec::leading_unit(k)
            } else {
                hi
            }
        }
        (None, None) => LexVec::zero(k),
    }
}
