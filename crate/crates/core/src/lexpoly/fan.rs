//! Ordinary rational cones and fans in `N_Q`.

use itertools::Itertools;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::{self, dot, primitive, LatticeSplit};
use crate::lexpoly::{Halfspace, Polyhedron};
use crate::ordered::LexVec;

/// Generators of a rational cone `{d : <u, d> >= 0 for all rows u}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeGenerators {
    /// Primitive extreme rays of the pointed part, lifted to `N`.
    pub rays: Vec<Vec<i64>>,
    /// Basis of the lineality lattice.
    pub lineality: Vec<Vec<i64>>,
}

/// Rays and lineality of the cone cut out by `rows`.
pub fn cone_generators(n: usize, rows: &[Vec<i64>]) -> Result<ConeGenerators> {
    let split = LatticeSplit::new(rows, n)?;
    let r = split.rank;
    let local: Vec<Vec<i64>> = rows.iter().map(|u| split.push_dual(u).expect("row in own span")).collect();
    let mut rays: Vec<Vec<i64>> = Vec::new();
    if r > 0 {
        for subset in (0..local.len()).combinations(r - 1) {
            let sub: Vec<Vec<i64>> = subset.iter().map(|&i| local[i].clone()).collect();
            let ker = lattice::kernel(&sub, r)?;
            if ker.len() != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let d: Vec<i64> = ker[0].iter().map(|x| sign * x).collect();
                if local.iter().all(|u| dot(u, &d) >= 0) {
                    let lifted = (0..n).map(|j| (0..r).map(|a| d[a] * split.lifts[a][j]).sum()).collect::<Vec<i64>>();
                    let lifted = primitive(&lifted);
                    if !rays.contains(&lifted) {
                        rays.push(lifted);
                    }
                }
            }
        }
    }
    rays.sort();
    Ok(ConeGenerators { rays, lineality: split.kernel })
}

/// A rational polyhedral cone in `N_Q`, kept in both descriptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    n: usize,
    rows: Vec<Vec<i64>>,
    gens: ConeGenerators,
}

impl RationalCone {
    pub fn from_rows(n: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        for r in &rows {
            crate::error::check_dim(n, r.len())?;
        }
        let mut rows: Vec<Vec<i64>> = rows.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
        rows.sort();
        rows.dedup();
        let gens = cone_generators(n, &rows)?;
        Ok(Self { n, rows, gens })
    }

    /// The cone spanned by `generators`.
    pub fn from_generators(n: usize, generators: &[Vec<i64>]) -> Result<Self> {
        for g in generators {
            crate::error::check_dim(n, g.len())?;
        }
        let dual = cone_generators(n, generators)?;
        let mut rows = dual.rays.clone();
        for l in &dual.lineality {
            rows.push(l.clone());
            rows.push(l.iter().map(|x| -x).collect());
        }
        Self::from_rows(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.gens.rays
    }

    pub fn lineality(&self) -> &[Vec<i64>] {
        &self.gens.lineality
    }

    /// Rays plus both signs of each lineality vector.
    pub fn all_generators(&self) -> Vec<Vec<i64>> {
        let mut g = self.gens.rays.clone();
        for l in &self.gens.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    pub fn is_pointed(&self) -> bool {
        self.gens.lineality.is_empty()
    }

    pub fn dim(&self) -> usize {
        lattice::rank(&self.all_generators(), self.n).expect("small generators")
    }

    pub fn contains(&self, d: &[i64]) -> bool {
        self.rows.iter().all(|u| dot(u, d) >= 0)
    }

    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        other.all_generators().iter().all(|g| self.contains(g))
    }

    pub fn set_eq(&self, other: &RationalCone) -> bool {
        self.n == other.n && self.contains_cone(other) && other.contains_cone(self)
    }

    pub fn intersect(&self, other: &RationalCone) -> Result<RationalCone> {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self::from_rows(self.n, rows)
    }

    /// The cone as a `{0}`-rational polyhedron over `Q^(1)`.
    pub fn as_polyhedron(&self) -> Polyhedron<BigRational> {
        let hs = self.rows.iter().map(|u| Halfspace::new(u.clone(), LexVec::zero(1))).collect();
        Polyhedron::new(self.n, 1, hs).expect("rows have length n")
    }

    /// All faces (including the cone itself).
    pub fn faces(&self) -> Result<Vec<RationalCone>> {
        let p = self.as_polyhedron();
        p.faces()
            .iter()
            .map(|f| {
                let mut rows = self.rows.clone();
                rows.extend(f.tight.iter().map(|&i| self.rows[i].iter().map(|x| -x).collect::<Vec<i64>>()));
                RationalCone::from_rows(self.n, rows)
            })
            .collect()
    }

    pub fn is_face_of(&self, other: &RationalCone) -> Result<bool> {
        Ok(other.faces()?.iter().any(|f| f.set_eq(self)))
    }
}

/// Outcome of checking the fan axioms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FanReport {
    pub violations: Vec<String>,
}

impl FanReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite collection of pointed rational cones closed under faces and
/// meeting along common faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFan {
    n: usize,
    cones: Vec<RationalCone>,
}

impl RationalFan {
    pub fn new(n: usize, cones: Vec<RationalCone>) -> Result<Self> {
        for c in &cones {
            crate::error::check_dim(n, c.n())?;
        }
        Ok(Self { n, cones })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cones(&self) -> &[RationalCone] {
        &self.cones
    }

    pub fn position(&self, cone: &RationalCone) -> Option<usize> {
        self.cones.iter().position(|c| c.set_eq(cone))
    }

    /// Pairs `(a, b)` where cone `a` is a proper face of cone `b`.
    pub fn incidences(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (b, cb) in self.cones.iter().enumerate() {
            for (a, ca) in self.cones.iter().enumerate() {
                if a != b && !ca.set_eq(cb) && ca.is_face_of(cb)? {
                    out.push((a, b));
                }
            }
        }
        Ok(out)
    }

    /// Cones not properly contained in another cone.
    pub fn maximal_cones(&self) -> Vec<usize> {
        (0..self.cones.len())
            .filter(|&i| {
                !self.cones.iter().any(|c| c.contains_cone(&self.cones[i]) && !self.cones[i].contains_cone(c))
            })
            .collect()
    }

    pub fn validate(&self) -> Result<FanReport> {
        let mut violations = Vec::new();
        for (i, c) in self.cones.iter().enumerate() {
            if !c.is_pointed() {
                violations.push(format!("cone {i} is not pointed"));
            }
            for f in c.faces()? {
                if self.position(&f).is_none() {
                    violations.push(format!("cone {i} has a face with rays {:?} missing from the fan", f.rays()));
                }
            }
        }
        for i in 0..self.cones.len() {
            for j in i + 1..self.cones.len() {
                let meet = self.cones[i].intersect(&self.cones[j])?;
                if !meet.is_face_of(&self.cones[i])? || !meet.is_face_of(&self.cones[j])? {
                    violations.push(format!("cones {i} and {j} meet outside a common face"));
                }
            }
        }
        Ok(FanReport { violations })
    }
}

/// True iff the fan's support is all of `N_Q`.
///
/// Decided by facet pairing: some cone is full-dimensional and every facet of
/// a full-dimensional cone lies in exactly two full-dimensional cones.
pub fn is_complete_fan(fan: &RationalFan) -> Result<bool> {
    let report = fan.validate()?;
    if !report.is_valid() {
        return Err(Error::InvalidFan(report.violations.join("; ")));
    }
    let n = fan.n();
    let full: Vec<&RationalCone> = fan.cones().iter().filter(|c| c.dim() == n).collect();
    if full.is_empty() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    for c in &full {
        for facet in c.faces()?.iter().filter(|f| f.dim() + 1 == n) {
            let holders = full.iter().filter(|d| d.contains_cone(facet)).count();
            if holders != 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
