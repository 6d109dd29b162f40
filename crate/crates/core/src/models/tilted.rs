//! Membership in tilted algebras, weight functions and generators.

use std::collections::BTreeSet;

use crate::error::{check_dim, Error, Result};
use crate::lattice::dot;
use crate::lexpoly::{feasible, hilbert_basis, Constraint, Point, Polyhedron, RationalCone};
use crate::models::{FormalLaurent, ValuedMonomial};
use crate::ordered::LexVec;
use crate::scalar::Scalar;

/// Points of `P` lifting the vertices of its pointed quotient. Pairing with
/// any `u ∈ V^⊥` does not depend on the lift.
fn quotient_vertices<F: Scalar>(p: &Polyhedron<F>) -> Result<Vec<Point<F>>> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    let (q, map) = p.pointed_quotient()?;
    Ok(q.vertices()?.iter().map(|v| map.lift_point(v)).collect())
}

/// `u` lies in the dual of the recession cone, tested on its generators.
pub fn generic_monoid_member_by_cone<F: Scalar>(p: &Polyhedron<F>, u: &[i64]) -> Result<bool> {
    check_dim(p.n(), u.len())?;
    let rec = RationalCone::from_rows(p.n(), p.normals())?;
    Ok(rec.all_generators().iter().all(|d| dot(u, d) >= 0))
}

/// Some valuation makes `x^u` a member: no recession direction `d` has
/// `<u, d> < 0` (decided by a strict feasibility query).
pub fn generic_monoid_member_by_val<F: Scalar>(p: &Polyhedron<F>, u: &[i64]) -> Result<bool> {
    check_dim(p.n(), u.len())?;
    let zero = LexVec::<F>::zero(1);
    let mut sys: Vec<Constraint<F>> = p.normals().into_iter().map(|r| Constraint::ge(r, zero.clone())).collect();
    sys.push(Constraint::gt(u.iter().map(|x| -x).collect(), zero));
    Ok(feasible(p.n(), 1, &sys)?.is_none())
}

/// `u ∈ S_σ` for the recession cone `σ` of `P`; both characterizations are
/// evaluated and must agree.
pub fn generic_monoid_member<F: Scalar>(p: &Polyhedron<F>, u: &[i64]) -> Result<bool> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    let by_cone = generic_monoid_member_by_cone(p, u)?;
    let by_val = generic_monoid_member_by_val(p, u)?;
    assert_eq!(by_cone, by_val, "recession dual routes disagree for u = {u:?}");
    Ok(by_cone)
}

/// `inf over w in P of val + <u, w>` minimized over the terms of `f`.
pub fn weight<F: Scalar>(p: &Polyhedron<F>, f: &FormalLaurent<F>) -> Result<LexVec<F>> {
    check_dim(p.n(), f.n())?;
    check_dim(p.k(), f.k())?;
    if f.is_empty() {
        return Err(Error::EmptyLaurent);
    }
    let vs = quotient_vertices(p)?;
    for t in f.terms() {
        if !generic_monoid_member_by_cone(p, &t.u)? {
            return Err(Error::UnboundedBelow(t.u.clone()));
        }
    }
    let w = f.terms().iter().flat_map(|t| vs.iter().map(move |v| t.eval(v))).min();
    Ok(w.expect("nonempty terms and vertices"))
}

/// `val + <u, v> >= 0` for every `v ∈ P`.
pub fn is_member<F: Scalar>(p: &Polyhedron<F>, m: &ValuedMonomial<F>) -> Result<bool> {
    check_dim(p.n(), m.u.len())?;
    check_dim(p.k(), m.val.k())?;
    let vs = quotient_vertices(p)?;
    if !generic_monoid_member_by_cone(p, &m.u)? {
        return Ok(false);
    }
    Ok(vs.iter().all(|v| m.eval(v).is_nonnegative()))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Generator<F> {
    pub u: Vec<i64>,
    pub required_val: LexVec<F>,
    /// Index into the sorted vertex list where `required_val + <u, v> = 0`.
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet<F> {
    pub vertices: Vec<Point<F>>,
    pub generators: Vec<Generator<F>>,
}

impl<F: Scalar> GeneratorSet<F> {
    pub fn monomials(&self) -> Vec<ValuedMonomial<F>> {
        self.generators.iter().map(|g| ValuedMonomial::new(g.u.clone(), g.required_val.clone())).collect()
    }
}

/// For each vertex `v`, the Hilbert basis `u_i` of the dual of the tangent
/// cone at `v`, paired with `-<u_i, v>`.
pub fn tilted_generators<F: Scalar>(p: &Polyhedron<F>) -> Result<GeneratorSet<F>> {
    let vertices = p.vertices()?;
    let mut seen = BTreeSet::new();
    let mut generators = Vec::new();
    for (j, v) in vertices.iter().enumerate() {
        let rows = p.tight_at(v).into_iter().map(|i| p.halfspaces()[i].u.clone()).collect();
        let tangent = RationalCone::from_rows(p.n(), rows)?;
        for u in hilbert_basis(&tangent)? {
            let required_val = -&v.pair(&u);
            if seen.insert((u.clone(), required_val.clone())) {
                generators.push(Generator { u, required_val, vertex: j });
            }
        }
    }
    generators.sort();
    Ok(GeneratorSet { vertices, generators })
}
