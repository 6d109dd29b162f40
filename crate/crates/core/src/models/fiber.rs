//! Combinatorial description of every fiber of the model attached to a fan.

use std::fmt;

use crate::admissible::AdmissibleFan;
use crate::error::{check_dim, Error, Result};
use crate::lexpoly::{hilbert_basis, is_complete_fan, star_fan, Point, PolyComplex, RationalCone, RationalFan};
use crate::models::{vertex_valuation, FormalLaurent};
use crate::ordered::truncate;
use crate::scalar::Scalar;

/// A component of a fiber: its vertex, the star fan there, and the Hilbert
/// bases of the dual monoids of the star's maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexStar<F> {
    pub vertex: Point<F>,
    pub star: RationalFan,
    pub maximal: Vec<(RationalCone, Vec<Vec<i64>>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport<F> {
    pub level: usize,
    pub complex: PolyComplex<F>,
    /// Sorted vertices; one component each.
    pub components: Vec<VertexStar<F>>,
    /// Pairs of component indices joined by a bounded 1-cell.
    pub edges: Vec<(usize, usize)>,
}

impl<F> LevelReport<F> {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericFiber {
    pub fan: RationalFan,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport<F> {
    pub n: usize,
    pub k: usize,
    pub levels: Vec<LevelReport<F>>,
    pub generic: GenericFiber,
}

impl<F> FiberReport<F> {
    pub fn component_counts(&self) -> Vec<usize> {
        self.levels.iter().map(LevelReport::component_count).collect()
    }
}

fn distinct_maximal(fan: &RationalFan) -> Result<Vec<(RationalCone, Vec<Vec<i64>>)>> {
    let mut out: Vec<(RationalCone, Vec<Vec<i64>>)> = Vec::new();
    for i in fan.maximal_cones() {
        let c = &fan.cones()[i];
        if !out.iter().any(|(d, _)| d.set_eq(c)) {
            out.push((c.clone(), hilbert_basis(c)?));
        }
    }
    out.sort_by(|a, b| a.0.rays().cmp(b.0.rays()));
    Ok(out)
}

fn level_report<F: Scalar>(sigma: &AdmissibleFan<F>, level: usize) -> Result<LevelReport<F>> {
    let complex = sigma.recession(level)?;
    let vertices: Vec<Point<F>> = complex.vertices().into_iter().map(|(_, p)| p).collect();
    let mut components = Vec::with_capacity(vertices.len());
    for w in &vertices {
        let star = star_fan(&complex, w)?;
        let maximal = distinct_maximal(&star)?;
        components.push(VertexStar { vertex: w.clone(), star, maximal });
    }
    let mut edges = Vec::new();
    for cell in complex.cells() {
        if cell.dimension().ok() != Some(1) {
            continue;
        }
        let ends: Vec<usize> = (0..vertices.len()).filter(|&i| cell.contains(&vertices[i])).collect();
        if let [a, b] = ends[..] {
            if !edges.contains(&(a, b)) {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    Ok(LevelReport { level, complex, components, edges })
}

/// Per-level components, stars and adjacency, plus the generic-fiber fan.
pub fn fiber_report<F: Scalar>(sigma: &AdmissibleFan<F>) -> Result<FiberReport<F>> {
    let validation = sigma.validate()?;
    if !validation.is_valid() {
        let msgs: Vec<String> = validation.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::InvalidFan(msgs.join("; ")));
    }
    let levels = (0..=sigma.k()).map(|i| level_report(sigma, i)).collect::<Result<Vec<_>>>()?;
    let fan = sigma.recession_fan()?;
    let complete = is_complete_fan(&fan)?;
    Ok(FiberReport { n: sigma.n(), k: sigma.k(), levels, generic: GenericFiber { fan, complete } })
}

/// Whether the monomial ideal of the component at `w` on level `i` contains
/// `f`: the valuation at `w`, truncated to its leading `k - i` coordinates,
/// is positive.
pub fn component_vanishes<F: Scalar>(
    sigma: &AdmissibleFan<F>,
    level: usize,
    w: &Point<F>,
    f: &FormalLaurent<F>,
) -> Result<bool> {
    check_dim(sigma.n(), w.n())?;
    check_dim(sigma.k(), w.k())?;
    let complex = sigma.recession(level)?;
    if !complex.vertices().iter().any(|(_, v)| v == w) {
        return Err(Error::NotAVertex);
    }
    for t in f.terms() {
        if !truncate(&t.eval(w), level).is_nonnegative() {
            return Err(Error::NotInTiltedAlgebra(t.u.clone()));
        }
    }
    Ok(truncate(&vertex_valuation(w, f)?, level).is_positive())
}

fn join_rows(rows: &[Vec<i64>]) -> String {
    rows.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>().join(" ")
}

impl<F: Scalar> fmt::Display for FiberReport<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fiber report: n={} k={}", self.n, self.k)?;
        for lv in &self.levels {
            writeln!(f, "level {}: {} component(s), {} cell(s)", lv.level, lv.component_count(), lv.complex.cells().len())?;
            for (i, c) in lv.components.iter().enumerate() {
                writeln!(f, "  vertex {i}: {}", c.vertex)?;
                for (cone, hb) in &c.maximal {
                    writeln!(f, "    cone rays [{}] hilbert [{}]", join_rows(cone.rays()), join_rows(hb))?;
                }
            }
            let edges: Vec<String> = lv.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            writeln!(f, "  adjacency: [{}]", edges.join(", "))?;
        }
        let rays: Vec<String> = self.generic.fan.cones().iter().map(|c| format!("[{}]", join_rows(c.rays()))).collect();
        writeln!(f, "generic fan: {} cone(s) {}", self.generic.fan.cones().len(), rays.join(" "))?;
        write!(f, "generic fan complete: {}", self.generic.complete)
    }
}
