//! Valuation-level model of polyhedral degenerations.
//!
//! Coefficients are never materialized: a monomial `a x^u` is represented
//! by its exponent `u` and the valuation of `a`.

mod fiber;
mod tilted;

use std::collections::BTreeMap;

pub use fiber::{component_vanishes, fiber_report, FiberReport, GenericFiber, LevelReport, VertexStar};
pub use tilted::{
    generic_monoid_member, generic_monoid_member_by_cone, generic_monoid_member_by_val, is_member, tilted_generators,
    weight, Generator, GeneratorSet,
};

use crate::error::{check_dim, Error, Result};
use crate::lexpoly::Point;
use crate::ordered::LexVec;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValuedMonomial<F> {
    pub u: Vec<i64>,
    pub val: LexVec<F>,
}

impl<F: Scalar> ValuedMonomial<F> {
    pub fn new(u: Vec<i64>, val: LexVec<F>) -> Self {
        Self { u, val }
    }

    /// `val + <u, w>`.
    pub fn eval(&self, w: &Point<F>) -> LexVec<F> {
        &self.val + &w.pair(&self.u)
    }
}

/// A finite sum of monomials with pairwise distinct exponents, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalLaurent<F> {
    n: usize,
    k: usize,
    terms: Vec<ValuedMonomial<F>>,
}

impl<F: Scalar> FormalLaurent<F> {
    /// Repeated exponents are merged keeping the smaller valuation, which is
    /// the valuation of a sum without cancellation.
    pub fn new(n: usize, k: usize, terms: Vec<ValuedMonomial<F>>) -> Result<Self> {
        let mut map: BTreeMap<Vec<i64>, LexVec<F>> = BTreeMap::new();
        for t in terms {
            check_dim(n, t.u.len())?;
            check_dim(k, t.val.k())?;
            map.entry(t.u)
                .and_modify(|v| {
                    if t.val < *v {
                        *v = t.val.clone();
                    }
                })
                .or_insert(t.val);
        }
        Ok(Self { n, k, terms: map.into_iter().map(|(u, val)| ValuedMonomial { u, val }).collect() })
    }

    pub fn monomial(u: Vec<i64>, val: LexVec<F>) -> Self {
        let (n, k) = (u.len(), val.k());
        Self { n, k, terms: vec![ValuedMonomial { u, val }] }
    }

    /// A coefficient `a` with the given valuation, times `x^0`.
    pub fn scalar(n: usize, val: LexVec<F>) -> Self {
        Self::monomial(vec![0; n], val)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &[ValuedMonomial<F>] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, m: u32) -> Result<Self> {
        let mut acc = Self::scalar(self.n, LexVec::zero(self.k));
        for _ in 0..m {
            acc = formal_mul(&acc, self)?;
        }
        Ok(acc)
    }
}

/// Min-plus product: exponents add, valuations add, and a collision keeps the
/// minimum of the contributing sums.
pub fn formal_mul<F: Scalar>(f: &FormalLaurent<F>, g: &FormalLaurent<F>) -> Result<FormalLaurent<F>> {
    check_dim(f.n, g.n)?;
    check_dim(f.k, g.k)?;
    let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
    for a in &f.terms {
        for b in &g.terms {
            let u = a.u.iter().zip(&b.u).map(|(x, y)| x + y).collect();
            terms.push(ValuedMonomial { u, val: &a.val + &b.val });
        }
    }
    FormalLaurent::new(f.n, f.k, terms)
}

/// `min over terms of val + <u, w>`.
pub fn vertex_valuation<F: Scalar>(w: &Point<F>, f: &FormalLaurent<F>) -> Result<LexVec<F>> {
    check_dim(f.n, w.n())?;
    check_dim(f.k, w.k())?;
    f.terms.iter().map(|t| t.eval(w)).min().ok_or(Error::EmptyLaurent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn lv(e: &[i64]) -> LexVec<BigRational> {
        LexVec::from_ints(e)
    }

    fn laurent(terms: &[(i64, &[i64])]) -> FormalLaurent<BigRational> {
        FormalLaurent::new(1, 2, terms.iter().map(|&(u, v)| ValuedMonomial::new(vec![u], lv(v))).collect()).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(formal_mul(&laurent(&[(1, &[0, 0])]), &laurent(&[(1, &[0, 0])])).unwrap(), laurent(&[(2, &[0, 0])]));
        let a = laurent(&[(0, &[1, 2])]);
        let b = laurent(&[(3, &[0, -1])]);
        assert_eq!(formal_mul(&a, &b).unwrap(), laurent(&[(3, &[1, 1])]));
        // (x^0 @ (0,3) + x^1 @ (0,0)) * (x^0 @ (0,0) + x^1 @ (0,1)): exponent 1 from
        // (0,3)+(0,1) and (0,0)+(0,0)
        let f = laurent(&[(0, &[0, 3]), (1, &[0, 0])]);
        let g = laurent(&[(0, &[0, 0]), (1, &[0, 1])]);
        let h = formal_mul(&f, &g).unwrap();
        assert_eq!(h, laurent(&[(0, &[0, 3]), (1, &[0, 0]), (2, &[0, 1])]));
    }

    #[test]
    fn repeated_exponents_merge_to_minimum() {
        assert_eq!(laurent(&[(1, &[0, 2]), (1, &[0, -1])]), laurent(&[(1, &[0, -1])]));
    }

    #[test]
    fn vertex_valuations() {
        let w = Point::from_int_rows(&[&[0, 1]]);
        assert_eq!(vertex_valuation(&w, &laurent(&[(1, &[0, 0])])).unwrap(), lv(&[0, 1]));
        assert_eq!(vertex_valuation(&w, &laurent(&[(0, &[3, -4])])).unwrap(), lv(&[3, -4]));
        let f = laurent(&[(2, &[1, 0])]);
        let g = laurent(&[(-1, &[0, 5])]);
        let fg = formal_mul(&f, &g).unwrap();
        assert_eq!(
            vertex_valuation(&w, &fg).unwrap(),
            &vertex_valuation(&w, &f).unwrap() + &vertex_valuation(&w, &g).unwrap()
        );
        assert_eq!(vertex_valuation(&w, &FormalLaurent::new(1, 2, vec![]).unwrap()), Err(Error::EmptyLaurent));
    }
}
