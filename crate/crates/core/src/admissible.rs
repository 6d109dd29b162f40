//! Admissible cones and fans in `N ⊗ Q^(k) × E` as formal inequality systems.
//!
//! A cone is a list of pairs `(u, gamma)` standing for
//! `{(v, phi) : <u, v> + phi(gamma) >= 0}`. No geometry is done in `N × E`
//! directly; every semantic question is answered on the recession slices
//! `phi = epsilon_i`, `i = 0..=k`, where the cone becomes the ordinary lex
//! polyhedron `{v : <u, v> >= -epsilon_i(gamma)}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{check_dim, Error, Result};
use crate::lattice;
use crate::lexpoly::{validate_complex, Halfspace, Point, PolyComplex, Polyhedron, RationalCone, RationalFan};
use crate::ordered::truncate;
use crate::scalar::Scalar;

/// `{(v, phi) : <u_l, v> + phi(gamma_l) >= 0 for all l}`.
///
/// The index-preserving slices and the key are computed on first use.
#[derive(Clone, Debug)]
pub struct AdmissibleCone<F> {
    n: usize,
    k: usize,
    constraints: Vec<Halfspace<F>>,
    slices: OnceLock<Vec<Polyhedron<F>>>,
    key: OnceLock<Result<Option<ConeKey<F>>>>,
}

impl<F: PartialEq> PartialEq for AdmissibleCone<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.constraints == other.constraints
    }
}

impl<F: Eq> Eq for AdmissibleCone<F> {}

/// Exact identity of a formal cone: per level, the vertex set of the slice
/// (`None` when empty), plus the rays of the common recession cone.
///
/// A nonempty pointed lex polyhedron is the intersection of
/// `<u, v> >= min over vertices of <u, .>` over all `u` in the dual of its
/// recession cone, so vertices and recession cone determine it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeKey<F> {
    pub slices: Vec<Option<Vec<Point<F>>>>,
    pub rays: Vec<Vec<i64>>,
}

impl<F: Scalar> AdmissibleCone<F> {
    /// Drops duplicate pairs and pairs `(0, gamma)` with `gamma >= 0`, which
    /// hold for every monotone `phi`.
    pub fn new(n: usize, k: usize, constraints: Vec<Halfspace<F>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut kept = Vec::new();
        for c in constraints {
            check_dim(n, c.u.len())?;
            check_dim(k, c.gamma.k())?;
            if c.u.iter().all(|&x| x == 0) && c.gamma.is_nonnegative() {
                continue;
            }
            if seen.insert(c.clone()) {
                kept.push(c);
            }
        }
        Ok(Self { n, k, constraints: kept, slices: OnceLock::new(), key: OnceLock::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn constraints(&self) -> &[Halfspace<F>] {
        &self.constraints
    }

    /// Number of recession levels above 0; the value group has rank `k`.
    pub fn levels(&self) -> usize {
        self.k
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level > self.k {
            return Err(Error::IndexOutOfRange { index: level, max: self.k });
        }
        Ok(())
    }

    fn slice_rows(&self, level: usize) -> Vec<Halfspace<F>> {
        self.constraints.iter().map(|c| Halfspace::new(c.u.clone(), -&truncate(&c.gamma, level))).collect()
    }

    /// The recession polyhedron at `level`: substitute `phi = epsilon_level`.
    pub fn recession(&self, level: usize) -> Result<Polyhedron<F>> {
        self.check_level(level)?;
        Polyhedron::new(self.n, self.k, self.slice_rows(level))
    }

    /// Slices at every level, keeping row indices aligned with `constraints`.
    fn indexed_slices(&self) -> &[Polyhedron<F>] {
        self.slices.get_or_init(|| {
            (0..=self.k)
                .map(|i| Polyhedron::indexed(self.n, self.k, self.slice_rows(i)).expect("dimensions checked"))
                .collect()
        })
    }

    /// True iff the normals span `M_Q`, i.e. no line of `N × {0}` is contained.
    pub fn is_admissible(&self) -> Result<bool> {
        let rows: Vec<Vec<i64>> = self.constraints.iter().map(|c| c.u.clone()).collect();
        Ok(lattice::rank(&rows, self.n)? == self.n)
    }

    /// The formal face with the rows in `tight` turned into equalities.
    pub fn formal_face(&self, tight: &[usize]) -> Self {
        let mut cs = self.constraints.clone();
        for &i in tight {
            let c = &self.constraints[i];
            cs.push(Halfspace::new(c.u.iter().map(|x| -x).collect(), -&c.gamma));
        }
        Self::new(self.n, self.k, cs).expect("same dimensions")
    }

    /// True when one constraint list contains the other, so the meet is the smaller cone.
    fn nested_with(&self, other: &Self) -> bool {
        let sub = |a: &Self, b: &Self| a.constraints.iter().all(|c| b.constraints.contains(c));
        sub(self, other) || sub(other, self)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        check_dim(self.k, other.k)?;
        let mut cs = self.constraints.clone();
        cs.extend(other.constraints.iter().cloned());
        Self::new(self.n, self.k, cs)
    }

    /// `None` when the cone is not admissible (slices need not be pointed).
    pub fn key(&self) -> Result<Option<ConeKey<F>>> {
        self.key
            .get_or_init(|| {
                if !self.is_admissible()? {
                    return Ok(None);
                }
                self.face_key(self.indexed_slices(), &[]).map(Some)
            })
            .clone()
    }

    /// Key of the formal face `tight`, read off the face lattices of the
    /// cone's own slices (a formal face slices to a face of each slice).
    fn face_key(&self, slices: &[Polyhedron<F>], tight: &[usize]) -> Result<ConeKey<F>> {
        let covers = |t: &[usize]| tight.iter().all(|i| t.binary_search(i).is_ok());
        let per_level = slices
            .iter()
            .map(|p| {
                let faces = p.faces();
                if !faces.iter().any(|f| covers(&f.tight)) {
                    return None;
                }
                let mut vs: Vec<Point<F>> =
                    faces.iter().filter(|f| f.dim == 0 && covers(&f.tight)).map(|f| f.witness.clone()).collect();
                vs.sort();
                Some(vs)
            })
            .collect();
        let mut rows: Vec<Vec<i64>> = self.constraints.iter().map(|c| c.u.clone()).collect();
        rows.extend(tight.iter().map(|&i| self.constraints[i].u.iter().map(|x| -x).collect::<Vec<i64>>()));
        let rays = RationalCone::from_rows(self.n, rows)?.rays().to_vec();
        Ok(ConeKey { slices: per_level, rays })
    }

    /// All formal faces (every subset of rows made tight), deduplicated by key.
    pub fn formal_faces(&self) -> Result<Vec<(ConeKey<F>, Self)>> {
        if !self.is_admissible()? {
            return Err(Error::InvalidFan("formal faces requested for a non-admissible cone".into()));
        }
        let slices = self.indexed_slices();
        let mut out: BTreeMap<ConeKey<F>, Self> = BTreeMap::new();
        for t in (0..self.constraints.len()).powerset() {
            let key = self.face_key(slices, &t)?;
            out.entry(key).or_insert_with(|| self.formal_face(&t));
        }
        Ok(out.into_iter().collect())
    }
}

/// Constraints `(u, -gamma)` so that the level-0 slice recovers `P`.
pub fn cone_over_cell<F: Scalar>(p: &Polyhedron<F>) -> AdmissibleCone<F> {
    let cs = p.halfspaces().iter().map(|h| Halfspace::new(h.u.clone(), -&h.gamma)).collect();
    AdmissibleCone::new(p.n(), p.k(), cs).expect("same dimensions")
}

/// A finite collection of admissible cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleFan<F> {
    n: usize,
    k: usize,
    cones: Vec<AdmissibleCone<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanViolation {
    NotAdmissible { cone: usize },
    MissingFormalFace { cone: usize, tight: Vec<usize> },
    MissingIntersection { a: usize, b: usize },
    InvalidRecession { level: usize, detail: String },
    RecessionNotPointed { cell: usize },
    RecessionNotFan { detail: String },
}

impl fmt::Display for FanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotAdmissible { cone } => write!(f, "cone {cone} is not admissible"),
            Self::MissingFormalFace { cone, tight } => write!(f, "formal face {tight:?} of cone {cone} is missing"),
            Self::MissingIntersection { a, b } => write!(f, "intersection of cones {a} and {b} is missing"),
            Self::InvalidRecession { level, detail } => write!(f, "recession complex at level {level}: {detail}"),
            Self::RecessionNotPointed { cell } => write!(f, "top-level recession cell {cell} is not pointed"),
            Self::RecessionNotFan { detail } => write!(f, "top-level recession complex is not a fan: {detail}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FanValidation {
    pub violations: Vec<FanViolation>,
}

impl FanValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<F: Scalar> AdmissibleFan<F> {
    pub fn new(n: usize, k: usize, cones: Vec<AdmissibleCone<F>>) -> Result<Self> {
        for c in &cones {
            check_dim(n, c.n())?;
            check_dim(k, c.k())?;
        }
        Ok(Self { n, k, cones })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cones(&self) -> &[AdmissibleCone<F>] {
        &self.cones
    }

    /// Adds formal faces and pairwise intersections until closed, merging
    /// cones with identical keys.
    pub fn closure(&self) -> Result<Self> {
        let mut cones: Vec<AdmissibleCone<F>> = Vec::new();
        let mut keys: BTreeSet<ConeKey<F>> = BTreeSet::new();
        for c in &self.cones {
            let key = c.key()?.ok_or_else(|| Error::InvalidFan("non-admissible cone".into()))?;
            if keys.insert(key) {
                cones.push(c.clone());
            }
        }
        let mut i = 0;
        while i < cones.len() {
            for (key, face) in cones[i].formal_faces()? {
                if keys.insert(key) {
                    cones.push(face);
                }
            }
            for j in 0..i {
                if cones[i].nested_with(&cones[j]) {
                    continue;
                }
                let meet = cones[i].intersect(&cones[j])?;
                let key = meet.key()?.expect("intersection of admissible cones is admissible");
                if keys.insert(key) {
                    cones.push(meet);
                }
            }
            i += 1;
        }
        Self::new(self.n, self.k, cones)
    }

    /// Slices of every cone at `level`, with empty and repeated cells removed.
    pub fn recession(&self, level: usize) -> Result<PolyComplex<F>> {
        if level > self.k {
            return Err(Error::IndexOutOfRange { index: level, max: self.k });
        }
        let mut cells: BTreeMap<(Vec<Point<F>>, Vec<Vec<i64>>), Polyhedron<F>> = BTreeMap::new();
        let mut extra: Vec<Polyhedron<F>> = Vec::new();
        for c in &self.cones {
            let slice = c.recession(level)?;
            match c.key()? {
                Some(key) => {
                    if let Some(vs) = &key.slices[level] {
                        cells.entry((vs.clone(), key.rays.clone())).or_insert(slice);
                    }
                }
                None => {
                    if !slice.is_empty() && !extra.iter().any(|e| e.set_eq(&slice)) {
                        extra.push(slice);
                    }
                }
            }
        }
        let mut all: Vec<Polyhedron<F>> = cells.into_values().collect();
        all.extend(extra);
        PolyComplex::new(self.n, self.k, all)
    }

    /// The top recession complex read as an ordinary fan in `N_Q`.
    pub fn recession_fan(&self) -> Result<RationalFan> {
        let top = self.recession(self.k)?;
        let cones = top.cells().iter().map(|c| RationalCone::from_rows(self.n, c.normals())).collect::<Result<Vec<_>>>()?;
        RationalFan::new(self.n, cones)
    }

    pub fn validate(&self) -> Result<FanValidation> {
        let mut violations = Vec::new();
        let mut keys: Vec<Option<ConeKey<F>>> = Vec::new();
        for (i, c) in self.cones.iter().enumerate() {
            let key = c.key()?;
            if key.is_none() {
                violations.push(FanViolation::NotAdmissible { cone: i });
            }
            keys.push(key);
        }
        let present: BTreeSet<&ConeKey<F>> = keys.iter().flatten().collect();
        for (i, c) in self.cones.iter().enumerate() {
            if keys[i].is_none() {
                continue;
            }
            let slices = c.indexed_slices();
            let mut seen = BTreeSet::new();
            for t in (0..c.constraints.len()).powerset() {
                let key = c.face_key(slices, &t)?;
                if !present.contains(&key) && seen.insert(key) {
                    violations.push(FanViolation::MissingFormalFace { cone: i, tight: t });
                }
            }
            for j in i + 1..self.cones.len() {
                if keys[j].is_none() || c.nested_with(&self.cones[j]) {
                    continue;
                }
                let meet = c.intersect(&self.cones[j])?.key()?;
                if !meet.as_ref().is_some_and(|m| present.contains(m)) {
                    violations.push(FanViolation::MissingIntersection { a: i, b: j });
                }
            }
        }
        for level in 0..=self.k {
            let report = validate_complex(&self.recession(level)?);
            for v in report.violations {
                violations.push(FanViolation::InvalidRecession { level, detail: v.to_string() });
            }
        }
        let top = self.recession(self.k)?;
        for (i, cell) in top.cells().iter().enumerate() {
            if !cell.is_pointed()? {
                violations.push(FanViolation::RecessionNotPointed { cell: i });
            }
        }
        let report = self.recession_fan()?.validate()?;
        for v in report.violations {
            violations.push(FanViolation::RecessionNotFan { detail: v });
        }
        Ok(FanValidation { violations })
    }
}

/// The fan of cones over the cells of a valid complex, closed under formal
/// faces and intersections.
pub fn cone_over_complex<F: Scalar>(c: &PolyComplex<F>) -> Result<AdmissibleFan<F>> {
    let report = validate_complex(c);
    if !report.is_valid() {
        let msgs: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::InvalidComplex(msgs.join("; ")));
    }
    let cones = c.cells().iter().map(cone_over_cell).collect();
    AdmissibleFan::new(c.n(), c.k(), cones)?.closure()
}
