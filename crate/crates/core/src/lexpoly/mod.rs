//! Polyhedra over `N ⊗ Q^(k)` cut out by lexicographic halfspaces
//! `<u, v> >= gamma` with `u` in the lattice `M` and `gamma` in `Q^(k)`.

mod complex;
mod fan;
mod feasible;
mod hilbert;
mod polyhedron;

pub use complex::{star_fan, validate_complex, ComplexReport, ComplexViolation, PolyComplex};
pub use fan::{cone_generators, is_complete_fan, ConeGenerators, FanReport, RationalCone, RationalFan};
pub use feasible::feasible;
pub use hilbert::{hilbert_basis, hilbert_basis_of_dual};
pub use polyhedron::{Face, Lineality, Polyhedron, QuotientMap};

use std::fmt;

use crate::error::{check_dim, Result};
use crate::ordered::LexVec;
use crate::scalar::{scale_int, Scalar};

/// The relation in a lex-linear constraint `<u, v> REL gamma`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Relation {
    Ge,
    Eq,
    Gt,
}

/// `{v : <u, v> >= gamma}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Halfspace<F> {
    pub u: Vec<i64>,
    pub gamma: LexVec<F>,
}

impl<F: Scalar> Halfspace<F> {
    pub fn new(u: Vec<i64>, gamma: LexVec<F>) -> Self {
        Self { u, gamma }
    }

    pub fn contains(&self, v: &Point<F>) -> bool {
        v.pair(&self.u) >= self.gamma
    }

    pub fn is_tight_at(&self, v: &Point<F>) -> bool {
        v.pair(&self.u) == self.gamma
    }

    pub fn as_constraint(&self, rel: Relation) -> Constraint<F> {
        Constraint { u: self.u.clone(), rel, gamma: self.gamma.clone() }
    }

    /// The complementary open halfspace `<u, v> < gamma`, written as `<-u, v> > -gamma`.
    pub fn violated(&self) -> Constraint<F> {
        Constraint { u: self.u.iter().map(|x| -x).collect(), rel: Relation::Gt, gamma: -&self.gamma }
    }
}

/// A lex-linear constraint `<u, v> REL gamma`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Constraint<F> {
    pub u: Vec<i64>,
    pub rel: Relation,
    pub gamma: LexVec<F>,
}

impl<F: Scalar> Constraint<F> {
    pub fn ge(u: Vec<i64>, gamma: LexVec<F>) -> Self {
        Self { u, rel: Relation::Ge, gamma }
    }

    pub fn eq(u: Vec<i64>, gamma: LexVec<F>) -> Self {
        Self { u, rel: Relation::Eq, gamma }
    }

    pub fn gt(u: Vec<i64>, gamma: LexVec<F>) -> Self {
        Self { u, rel: Relation::Gt, gamma }
    }

    pub fn satisfied_by(&self, v: &Point<F>) -> bool {
        let lhs = v.pair(&self.u);
        match self.rel {
            Relation::Ge => lhs >= self.gamma,
            Relation::Eq => lhs == self.gamma,
            Relation::Gt => lhs > self.gamma,
        }
    }
}

/// An element of `Hom(M, Q^(k))`: one `Q^(k)` value per coordinate of `N`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Point<F> {
    k: usize,
    rows: Vec<LexVec<F>>,
}

impl<F: Scalar> Point<F> {
    pub fn new(k: usize, rows: Vec<LexVec<F>>) -> Result<Self> {
        for r in &rows {
            check_dim(k, r.k())?;
        }
        Ok(Self { k, rows })
    }

    pub fn origin(n: usize, k: usize) -> Self {
        Self { k, rows: vec![LexVec::zero(k); n] }
    }

    /// A point of `N ⊗ Q^(1)`, i.e. an ordinary rational vector.
    pub fn from_rational(coords: Vec<F>) -> Self {
        Self { k: 1, rows: coords.into_iter().map(|c| LexVec::new(vec![c])).collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let k = rows.first().map_or(0, |r| r.len());
        Self { k, rows: rows.iter().map(|r| LexVec::from_ints(r)).collect() }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[LexVec<F>] {
        &self.rows
    }

    /// `<u, v> = sum_j u_j v_j`.
    pub fn pair(&self, u: &[i64]) -> LexVec<F> {
        debug_assert_eq!(u.len(), self.n());
        let mut acc = vec![F::zero(); self.k];
        for (&c, row) in u.iter().zip(&self.rows) {
            if c != 0 {
                for (a, e) in acc.iter_mut().zip(row.entries()) {
                    *a = a.clone() + scale_int(c, e);
                }
            }
        }
        LexVec::new(acc)
    }

    /// `self + d ⊗ t` for an integer direction `d` and a value `t`.
    pub fn translate(&self, d: &[i64], t: &LexVec<F>) -> Self {
        Self {
            k: self.k,
            rows: self.rows.iter().zip(d).map(|(r, &c)| r + &t.scale_int(c)).collect(),
        }
    }

    pub fn map_rows(&self, f: impl Fn(&LexVec<F>) -> LexVec<F>) -> Self {
        Self { k: self.k, rows: self.rows.iter().map(f).collect() }
    }
}

impl<F: Scalar> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.len() == 1 {
            return write!(f, "{}", self.rows[0]);
        }
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}
