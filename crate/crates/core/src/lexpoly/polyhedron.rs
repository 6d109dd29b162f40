use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{check_dim, Error, Result};
use crate::lattice::{self, LatticeSplit};
use crate::lexpoly::{feasible, Constraint, Halfspace, Point};
use crate::ordered::LexVec;
use crate::scalar::Scalar;

/// A nonempty face, identified by its maximal set of tight constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face<F> {
    /// Sorted indices of every halfspace that holds with equality on the face.
    pub tight: Vec<usize>,
    pub witness: Point<F>,
    /// Flag rank inside the face poset.
    pub dim: usize,
}

impl<F> Face<F> {
    /// Inclusion of faces is reverse inclusion of tight sets.
    pub fn is_subface_of(&self, other: &Face<F>) -> bool {
        other.tight.iter().all(|i| self.tight.binary_search(i).is_ok())
    }
}

/// Lattice data of the largest linear subspace `V` contained in a polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lineality {
    /// Basis of `V^⊥ ⊂ M`: the saturated span of the constraint normals.
    pub v_perp: Vec<Vec<i64>>,
    /// Basis of `V_Z ⊂ N`.
    pub v_z: Vec<Vec<i64>>,
}

impl Lineality {
    pub fn is_pointed(&self) -> bool {
        self.v_z.is_empty()
    }
}

/// Identification of `N / V_Z` with `Z^r` used by [`Polyhedron::pointed_quotient`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    split: LatticeSplit,
}

impl QuotientMap {
    pub fn rank(&self) -> usize {
        self.split.rank
    }

    /// Lifts in `N` of the quotient basis.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.split.lifts
    }

    pub fn kernel(&self) -> &[Vec<i64>] {
        &self.split.kernel
    }

    /// Rewrites `u ∈ V^⊥` in quotient coordinates; `None` for `u ∉ V^⊥`.
    pub fn push_exponent(&self, u: &[i64]) -> Option<Vec<i64>> {
        self.split.push_dual(u)
    }

    /// The representative `sum_a c_a w_a` of a quotient point.
    pub fn lift_point<F: Scalar>(&self, p: &Point<F>) -> Point<F> {
        let n = self.split.n;
        let mut rows = vec![LexVec::zero(p.k()); n];
        for (c, w) in p.rows().iter().zip(&self.split.lifts) {
            for (j, &wj) in w.iter().enumerate() {
                if wj != 0 {
                    rows[j] = &rows[j] + &c.scale_int(wj);
                }
            }
        }
        Point::new(p.k(), rows).expect("rows share k")
    }
}

/// A finite intersection of lexicographic halfspaces in `N ⊗ Q^(k)`.
///
/// The face lattice is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct Polyhedron<F> {
    n: usize,
    k: usize,
    halfspaces: Vec<Halfspace<F>>,
    faces: OnceLock<Vec<Face<F>>>,
}

impl<F: PartialEq> PartialEq for Polyhedron<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.halfspaces == other.halfspaces
    }
}

impl<F: Eq> Eq for Polyhedron<F> {}

impl<F: Scalar> Polyhedron<F> {
    /// Builds the system, dropping duplicates and trivially true `0 >= gamma`
    /// rows. A trivially false row collapses the system to that single row.
    pub fn new(n: usize, k: usize, halfspaces: Vec<Halfspace<F>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut kept = Vec::new();
        for h in halfspaces {
            check_dim(n, h.u.len())?;
            check_dim(k, h.gamma.k())?;
            if h.u.iter().all(|&x| x == 0) {
                if h.gamma.is_positive() {
                    kept = vec![h];
                    break;
                }
                continue;
            }
            if seen.insert(h.clone()) {
                kept.push(h);
            }
        }
        Ok(Self { n, k, halfspaces: kept, faces: OnceLock::new() })
    }

    /// Keeps every row as given (no dedup, zero normals retained), so row
    /// indices match the caller's list.
    pub(crate) fn indexed(n: usize, k: usize, halfspaces: Vec<Halfspace<F>>) -> Result<Self> {
        for h in &halfspaces {
            check_dim(n, h.u.len())?;
            check_dim(k, h.gamma.k())?;
        }
        Ok(Self { n, k, halfspaces, faces: OnceLock::new() })
    }

    /// All of `N ⊗ Q^(k)`.
    pub fn whole(n: usize, k: usize) -> Self {
        Self { n, k, halfspaces: Vec::new(), faces: OnceLock::new() }
    }

    /// The single point `{v}`.
    pub fn point(v: &Point<F>) -> Self {
        let n = v.n();
        let mut hs = Vec::with_capacity(2 * n);
        for (j, row) in v.rows().iter().enumerate() {
            let mut e = vec![0; n];
            e[j] = 1;
            hs.push(Halfspace::new(e.clone(), row.clone()));
            e[j] = -1;
            hs.push(Halfspace::new(e, -row));
        }
        Self::new(n, v.k(), hs).expect("dimensions agree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn halfspaces(&self) -> &[Halfspace<F>] {
        &self.halfspaces
    }

    pub fn normals(&self) -> Vec<Vec<i64>> {
        self.halfspaces.iter().map(|h| h.u.clone()).collect()
    }

    /// The defining system with the `tight` rows turned into equalities.
    pub fn system(&self, tight: &[usize]) -> Vec<Constraint<F>> {
        self.halfspaces
            .iter()
            .enumerate()
            .map(|(i, h)| {
                if tight.contains(&i) {
                    Constraint::eq(h.u.clone(), h.gamma.clone())
                } else {
                    Constraint::ge(h.u.clone(), h.gamma.clone())
                }
            })
            .collect()
    }

    fn solve(&self, system: &[Constraint<F>]) -> Option<Point<F>> {
        feasible(self.n, self.k, system).expect("dimensions checked at construction")
    }

    pub fn witness(&self) -> Option<Point<F>> {
        self.solve(&self.system(&[]))
    }

    pub fn is_empty(&self) -> bool {
        self.witness().is_none()
    }

    pub fn contains(&self, v: &Point<F>) -> bool {
        v.n() == self.n && v.k() == self.k && self.halfspaces.iter().all(|h| h.contains(v))
    }

    /// `other ⊆ self` as point sets.
    pub fn contains_set(&self, other: &Polyhedron<F>) -> bool {
        if self.n != other.n || self.k != other.k {
            return false;
        }
        let base = other.system(&[]);
        self.halfspaces.iter().all(|h| {
            let mut sys = base.clone();
            sys.push(h.violated());
            self.solve(&sys).is_none()
        })
    }

    pub fn set_eq(&self, other: &Polyhedron<F>) -> bool {
        self.contains_set(other) && other.contains_set(self)
    }

    pub fn intersect(&self, other: &Polyhedron<F>) -> Result<Polyhedron<F>> {
        check_dim(self.n, other.n)?;
        check_dim(self.k, other.k)?;
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        Polyhedron::new(self.n, self.k, hs)
    }

    /// Maximal tight set containing `tight`, or `None` if that face is empty.
    pub fn closure(&self, tight: &[usize]) -> Option<Vec<usize>> {
        let base = self.system(tight);
        self.solve(&base)?;
        let mut closed: Vec<usize> = (0..self.halfspaces.len())
            .filter(|&i| {
                if tight.contains(&i) {
                    return true;
                }
                let mut sys = base.clone();
                let h = &self.halfspaces[i];
                sys.push(Constraint::gt(h.u.clone(), h.gamma.clone()));
                self.solve(&sys).is_none()
            })
            .collect();
        closed.sort_unstable();
        Some(closed)
    }

    /// All nonempty faces, `P` itself first, ordered by tight-set size and
    /// then lexicographically by tight indices.
    pub fn faces(&self) -> &[Face<F>] {
        self.faces.get_or_init(|| self.enumerate_faces())
    }

    fn enumerate_faces(&self) -> Vec<Face<F>> {
        let Some(top) = self.closure(&[]) else { return Vec::new() };
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = vec![top.clone()];
        found.insert(top);
        while let Some(s) = queue.pop() {
            for i in 0..self.halfspaces.len() {
                if s.binary_search(&i).is_ok() {
                    continue;
                }
                let mut t = s.clone();
                t.push(i);
                if let Some(c) = self.closure(&t) {
                    if found.insert(c.clone()) {
                        queue.push(c);
                    }
                }
            }
        }
        let mut sets: Vec<Vec<usize>> = found.into_iter().collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut dims = vec![0usize; sets.len()];
        for i in (0..sets.len()).rev() {
            let sub = |j: usize| sets[j].len() > sets[i].len() && sets[i].iter().all(|x| sets[j].binary_search(x).is_ok());
            dims[i] = (i + 1..sets.len()).filter(|&j| sub(j)).map(|j| dims[j] + 1).max().unwrap_or(0);
        }
        sets.into_iter()
            .zip(dims)
            .map(|(tight, dim)| {
                let witness = self.solve(&self.system(&tight)).expect("closed sets are feasible");
                Face { tight, witness, dim }
            })
            .collect()
    }

    /// The face as a polyhedron in its own right: tight rows doubled.
    pub fn face_polyhedron(&self, face: &Face<F>) -> Polyhedron<F> {
        let mut hs = self.halfspaces.clone();
        for &i in &face.tight {
            let h = &self.halfspaces[i];
            hs.push(Halfspace::new(h.u.iter().map(|x| -x).collect(), -&h.gamma));
        }
        Polyhedron::new(self.n, self.k, hs).expect("same dimensions")
    }

    /// Maximum rank of a flag of faces.
    pub fn dimension(&self) -> Result<usize> {
        self.faces().first().map(|f| f.dim).ok_or(Error::Empty)
    }

    pub fn lineality(&self) -> Result<Lineality> {
        let rows = self.normals();
        let split = LatticeSplit::new(&rows, self.n)?;
        let v_perp = lattice::kernel(&split.kernel, self.n)?;
        Ok(Lineality { v_perp, v_z: split.kernel })
    }

    pub fn is_pointed(&self) -> Result<bool> {
        Ok(lattice::rank(&self.normals(), self.n)? == self.n)
    }

    /// Vertices: faces whose tight normals have rank `n`, sorted.
    pub fn vertices(&self) -> Result<Vec<Point<F>>> {
        if self.is_empty() {
            return Err(Error::Empty);
        }
        if !self.is_pointed()? {
            return Err(Error::HasLineality);
        }
        let mut out = Vec::new();
        for face in self.faces() {
            let rows: Vec<Vec<i64>> = face.tight.iter().map(|&i| self.halfspaces[i].u.clone()).collect();
            let full = lattice::rank(&rows, self.n)? == self.n;
            if full != (face.dim == 0) {
                return Err(Error::VertexRankMismatch(format!(
                    "face {:?} has flag rank {} but tight rank {}",
                    face.tight,
                    face.dim,
                    lattice::rank(&rows, self.n)?
                )));
            }
            if !full {
                continue;
            }
            let eqs: Vec<(&[i64], &LexVec<F>)> =
                face.tight.iter().map(|&i| (self.halfspaces[i].u.as_slice(), &self.halfspaces[i].gamma)).collect();
            let v = solve_unique(&eqs, self.n, self.k)
                .ok_or_else(|| Error::VertexRankMismatch(format!("tight system {:?} not uniquely solvable", face.tight)))?;
            if v != face.witness {
                return Err(Error::VertexRankMismatch(format!("solution {v} disagrees with witness {}", face.witness)));
            }
            out.push(v);
        }
        out.sort();
        Ok(out)
    }

    /// Image of `P` in `N/V ≅ (N/V_Z) ⊗ Q^(k)`, together with the basis used.
    pub fn pointed_quotient(&self) -> Result<(Polyhedron<F>, QuotientMap)> {
        let split = LatticeSplit::new(&self.normals(), self.n)?;
        let hs = self
            .halfspaces
            .iter()
            .map(|h| {
                let u = split.push_dual(&h.u).expect("normals lie in their own span");
                Halfspace::new(u, h.gamma.clone())
            })
            .collect();
        let q = Polyhedron::new(split.rank, self.k, hs)?;
        Ok((q, QuotientMap { split }))
    }

    /// Tight rows at `v` (which is assumed to lie in `P`).
    pub fn tight_at(&self, v: &Point<F>) -> Vec<usize> {
        (0..self.halfspaces.len()).filter(|&i| self.halfspaces[i].is_tight_at(v)).collect()
    }
}

/// Solves `<u_i, v> = gamma_i` when the system has a unique solution.
pub(crate) fn solve_unique<F: Scalar>(eqs: &[(&[i64], &LexVec<F>)], n: usize, k: usize) -> Option<Point<F>> {
    let mut rows: Vec<(Vec<F>, LexVec<F>)> =
        eqs.iter().map(|(u, g)| (u.iter().map(|&x| F::from_i64(x)).collect(), (*g).clone())).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = F::one() / rows[r].0[c].clone();
        rows[r].0.iter_mut().for_each(|x| *x = x.clone() * inv.clone());
        rows[r].1 = rows[r].1.scale(&inv);
        for i in 0..rows.len() {
            if i != r && !rows[i].0[c].is_zero() {
                let f = rows[i].0[c].clone();
                let (pc, pr) = (rows[r].0.clone(), rows[r].1.clone());
                rows[i].0.iter_mut().zip(&pc).for_each(|(x, y)| *x = x.clone() - f.clone() * y.clone());
                rows[i].1 = &rows[i].1 - &pr.scale(&f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if r < n || rows[r..].iter().any(|(_, g)| !g.is_zero()) {
        return None;
    }
    Point::new(k, rows.into_iter().take(n).map(|(_, g)| g).collect()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polyhedron<BigRational>;

    fn lv(e: &[i64]) -> LexVec<BigRational> {
        LexVec::from_ints(e)
    }

    fn hs(u: &[i64], g: &[i64]) -> Halfspace<BigRational> {
        Halfspace::new(u.to_vec(), lv(g))
    }

    fn segment() -> P {
        P::new(1, 2, vec![hs(&[1], &[0, -1]), hs(&[-1], &[0, -1])]).unwrap()
    }

    #[test]
    fn segment_faces_dimension_vertices() {
        let p = segment();
        let faces = p.faces();
        assert_eq!(faces.len(), 3);
        assert_eq!(p.dimension().unwrap(), 1);
        let vs = p.vertices().unwrap();
        assert_eq!(vs, vec![Point::from_int_rows(&[&[0, -1]]), Point::from_int_rows(&[&[0, 1]])]);
        assert!(p.lineality().unwrap().is_pointed());
    }

    #[test]
    fn ray_faces() {
        let p = P::new(1, 1, vec![hs(&[1], &[0])]).unwrap();
        assert_eq!(p.faces().len(), 2);
        let r = P::new(1, 2, vec![hs(&[1], &[1, 0])]).unwrap();
        assert_eq!(r.vertices().unwrap(), vec![Point::from_int_rows(&[&[1, 0]])]);
    }

    #[test]
    fn point_and_infinitesimal_interval() {
        let p = P::point(&Point::from_int_rows(&[&[0, 1]]));
        assert_eq!(p.dimension().unwrap(), 0);
        // (0,0) <= v <= (1,0): flag dimension 1 even though the rational point set is 2-dimensional
        let q = P::new(1, 2, vec![hs(&[1], &[0, 0]), hs(&[-1], &[-1, 0])]).unwrap();
        assert_eq!(q.faces().len(), 3);
        assert_eq!(q.dimension().unwrap(), 1);
        assert!(q.contains(&Point::from_int_rows(&[&[0, 5]])));
    }

    #[test]
    fn empty_and_degenerate_rows() {
        let e = P::new(1, 2, vec![hs(&[0], &[0, 1]), hs(&[1], &[0, 0])]).unwrap();
        assert!(e.is_empty());
        assert!(e.faces().is_empty());
        assert_eq!(e.dimension(), Err(Error::Empty));
        assert_eq!(e.vertices(), Err(Error::Empty));
        let t = P::new(1, 2, vec![hs(&[0], &[0, -1]), hs(&[1], &[0, 0]), hs(&[1], &[0, 0])]).unwrap();
        assert_eq!(t.halfspaces().len(), 1);
    }

    #[test]
    fn lineality_examples() {
        let half = P::new(2, 1, vec![hs(&[1, 0], &[0])]).unwrap();
        let lin = half.lineality().unwrap();
        assert_eq!(lin.v_z.len(), 1);
        assert_eq!(lin.v_z[0].iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(half.vertices(), Err(Error::HasLineality));
        let all = P::whole(1, 2);
        assert_eq!(all.lineality().unwrap().v_z.len(), 1);
        assert!(all.lineality().unwrap().v_perp.is_empty());
    }

    #[test]
    fn quotient_drops_lineality() {
        let p = P::new(2, 2, vec![hs(&[1, 0], &[2, 0])]).unwrap();
        let (q, map) = p.pointed_quotient().unwrap();
        assert_eq!(q.n(), 1);
        assert_eq!(q.halfspaces().len(), 1);
        assert_eq!(q.halfspaces()[0].gamma, lv(&[2, 0]));
        assert!(q.is_pointed().unwrap());
        // membership agrees on lifted points
        for x in [-3i64, 2, 5] {
            let qp = Point::from_int_rows(&[&[x * q.halfspaces()[0].u[0], 0]]);
            assert_eq!(q.contains(&qp), p.contains(&map.lift_point(&qp)));
        }
    }

    #[test]
    fn containment_and_closure() {
        let p = segment();
        let v = P::point(&Point::from_int_rows(&[&[0, 1]]));
        assert!(p.contains_set(&v));
        assert!(!v.contains_set(&p));
        assert!(p.set_eq(&p.clone()));
        assert_eq!(p.closure(&[0, 1]), None);
    }
}
