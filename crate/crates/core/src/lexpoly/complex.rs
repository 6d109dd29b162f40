use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::lattice;
use crate::lexpoly::{Point, Polyhedron, RationalCone, RationalFan};
use crate::scalar::Scalar;

/// A finite collection of polyhedra, validated against the complex axioms
/// by [`validate_complex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyComplex<F> {
    n: usize,
    k: usize,
    cells: Vec<Polyhedron<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexViolation {
    EmptyCell { cell: usize },
    DimensionMismatch { cell: usize },
    /// Face (given by its tight rows) of `cell` that is not a cell.
    MissingFace { cell: usize, face: Vec<usize> },
    /// `a ∩ b` is nonempty and not a cell.
    IntersectionNotInComplex { a: usize, b: usize },
}

impl fmt::Display for ComplexViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyCell { cell } => write!(f, "cell {cell} is empty"),
            Self::DimensionMismatch { cell } => write!(f, "cell {cell} has the wrong ambient dimension"),
            Self::MissingFace { cell, face } => write!(f, "face {face:?} of cell {cell} is not in the complex"),
            Self::IntersectionNotInComplex { a, b } => write!(f, "intersection of cells {a} and {b} is not in the complex"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComplexReport {
    pub violations: Vec<ComplexViolation>,
}

impl ComplexReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<F: Scalar> PolyComplex<F> {
    pub fn new(n: usize, k: usize, cells: Vec<Polyhedron<F>>) -> Result<Self> {
        for c in &cells {
            check_dim(n, c.n())?;
            check_dim(k, c.k())?;
        }
        Ok(Self { n, k, cells })
    }

    /// The complex of all faces of a single polyhedron.
    pub fn from_faces(p: &Polyhedron<F>) -> Self {
        let cells = p.faces().iter().map(|f| p.face_polyhedron(f)).collect();
        Self { n: p.n(), k: p.k(), cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cells(&self) -> &[Polyhedron<F>] {
        &self.cells
    }

    pub fn find_cell(&self, p: &Polyhedron<F>) -> Option<usize> {
        self.cells.iter().position(|c| c.set_eq(p))
    }

    /// Drops empty cells and cells equal as sets to an earlier one.
    pub fn canonicalize(&self) -> Self {
        let mut cells: Vec<Polyhedron<F>> = Vec::new();
        for c in &self.cells {
            if !c.is_empty() && !cells.iter().any(|d| d.set_eq(c)) {
                cells.push(c.clone());
            }
        }
        Self { n: self.n, k: self.k, cells }
    }

    /// Pairs `(a, b)` where cell `a` is a proper face of cell `b`.
    pub fn incidences(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (b, cb) in self.cells.iter().enumerate() {
            for f in cb.faces().iter().skip(1) {
                let fp = cb.face_polyhedron(f);
                for (a, ca) in self.cells.iter().enumerate() {
                    if a != b && ca.set_eq(&fp) && !out.contains(&(a, b)) {
                        out.push((a, b));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Flag dimension of each cell (empty cells report `None`).
    pub fn cell_dims(&self) -> Vec<Option<usize>> {
        self.cells.iter().map(|c| c.dimension().ok()).collect()
    }

    /// Zero-dimensional cells as `(cell index, point)`, sorted by point.
    pub fn vertices(&self) -> Vec<(usize, Point<F>)> {
        let mut out: Vec<(usize, Point<F>)> = self
            .cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.dimension().ok() == Some(0) && c.is_pointed().unwrap_or(false))
            .map(|(i, c)| (i, c.faces()[0].witness.clone()))
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out.dedup_by(|a, b| a.1 == b.1);
        out
    }

    /// True iff `w` is a vertex of some cell.
    pub fn is_vertex(&self, w: &Point<F>) -> Result<bool> {
        for c in &self.cells {
            if c.contains(w) {
                let rows: Vec<Vec<i64>> = c.tight_at(w).iter().map(|&i| c.halfspaces()[i].u.clone()).collect();
                if lattice::rank(&rows, self.n)? == self.n {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Checks that every face of every cell is a cell and that nonempty pairwise
/// intersections are cells. Set equality is decided by mutual containment.
pub fn validate_complex<F: Scalar>(c: &PolyComplex<F>) -> ComplexReport {
    let mut violations = Vec::new();
    for (i, cell) in c.cells.iter().enumerate() {
        if cell.n() != c.n || cell.k() != c.k {
            violations.push(ComplexViolation::DimensionMismatch { cell: i });
            continue;
        }
        if cell.is_empty() {
            violations.push(ComplexViolation::EmptyCell { cell: i });
            continue;
        }
        for f in cell.faces().iter().skip(1) {
            if c.find_cell(&cell.face_polyhedron(f)).is_none() {
                violations.push(ComplexViolation::MissingFace { cell: i, face: f.tight.clone() });
            }
        }
    }
    if violations.is_empty() {
        for a in 0..c.cells.len() {
            for b in a + 1..c.cells.len() {
                let meet = c.cells[a].intersect(&c.cells[b]).expect("dimensions checked");
                if !meet.is_empty() && c.find_cell(&meet).is_none() {
                    violations.push(ComplexViolation::IntersectionNotInComplex { a, b });
                }
            }
        }
    }
    ComplexReport { violations }
}

/// The star of the vertex `w`: one tangent cone
/// `{d : <u, d> >= 0 for each row of Q tight at w}` per cell `Q` containing `w`.
pub fn star_fan<F: Scalar>(c: &PolyComplex<F>, w: &Point<F>) -> Result<RationalFan> {
    check_dim(c.n, w.n())?;
    check_dim(c.k, w.k())?;
    if !c.is_vertex(w)? {
        return Err(Error::NotAVertex);
    }
    let mut cones = Vec::new();
    for cell in c.cells.iter().filter(|q| q.contains(w)) {
        let rows = cell.tight_at(w).iter().map(|&i| cell.halfspaces()[i].u.clone()).collect();
        cones.push(RationalCone::from_rows(c.n, rows)?);
    }
    RationalFan::new(c.n, cones)
}
