//! JSON documents for polyhedra, complexes, fans, Laurent data and reports.
//!
//! Rationals are written as `"p/q"` strings; integers are accepted on input.
//! Parse errors carry the JSON path of the offending field.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::admissible::{AdmissibleCone, AdmissibleFan};
use crate::error::{Error, Result};
use crate::lexpoly::{Halfspace, Point, PolyComplex, Polyhedron, RationalCone, RationalFan};
use crate::models::{FiberReport, FormalLaurent, GeneratorSet, GenericFiber, LevelReport, ValuedMonomial, VertexStar};
use crate::ordered::LexVec;
use crate::scalar::Scalar;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RatWire {
    Int(i64),
    Str(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct HalfspaceWire {
    pub u: Vec<i64>,
    pub gamma: Vec<RatWire>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronWire {
    pub n: usize,
    pub k: usize,
    pub halfspaces: Vec<HalfspaceWire>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ComplexWire {
    pub n: usize,
    pub k: usize,
    pub cells: Vec<Vec<HalfspaceWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incidences: Option<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FanWire {
    pub n: usize,
    pub k: usize,
    pub cones: Vec<Vec<HalfspaceWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_rec: Option<Vec<ComplexWire>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TermWire {
    pub u: Vec<i64>,
    pub val: Vec<RatWire>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LaurentWire {
    pub terms: Vec<TermWire>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GeneratorWire {
    pub u: Vec<i64>,
    pub required_val: Vec<RatWire>,
    pub vertex: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GeneratorSetWire {
    pub vertices: Vec<Vec<Vec<RatWire>>>,
    pub generators: Vec<GeneratorWire>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConeWire {
    pub rows: Vec<Vec<i64>>,
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RationalFanWire {
    pub n: usize,
    pub cones: Vec<ConeWire>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MaximalConeWire {
    pub cone: ConeWire,
    pub hilbert_basis: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ComponentWire {
    pub vertex: Vec<Vec<RatWire>>,
    pub star: RationalFanWire,
    pub maximal: Vec<MaximalConeWire>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LevelWire {
    pub level: usize,
    pub component_count: usize,
    pub complex: ComplexWire,
    pub components: Vec<ComponentWire>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GenericWire {
    pub fan: RationalFanWire,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FiberReportWire {
    pub n: usize,
    pub k: usize,
    pub component_counts: Vec<usize>,
    pub levels: Vec<LevelWire>,
    pub generic: GenericWire,
}

fn perr(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { path: path.into(), message: message.into() }
}

/// Deserializes `text`, reporting the JSON path and position of any failure.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        perr(path, format!("line {} column {}: {inner}", inner.line(), inner.column()))
    })
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("wire types serialize")
}

fn rat_to_wire<F: Scalar>(x: &F) -> RatWire {
    RatWire::Str(x.to_ratio_string())
}

fn rat_from_wire<F: Scalar>(w: &RatWire, path: &str) -> Result<F> {
    match w {
        RatWire::Int(i) => Ok(F::from_i64(*i)),
        RatWire::Str(s) => F::parse_ratio(s).ok_or_else(|| perr(path, format!("malformed rational {s:?}"))),
    }
}

pub fn lexvec_to_wire<F: Scalar>(g: &LexVec<F>) -> Vec<RatWire> {
    g.entries().iter().map(rat_to_wire).collect()
}

pub fn lexvec_from_wire<F: Scalar>(w: &[RatWire], k: usize, path: &str) -> Result<LexVec<F>> {
    if w.len() != k {
        return Err(perr(path, format!("expected {k} coordinates, found {}", w.len())));
    }
    let entries = w.iter().enumerate().map(|(i, x)| rat_from_wire(x, &format!("{path}[{i}]"))).collect::<Result<_>>()?;
    Ok(LexVec::new(entries))
}

pub fn point_to_wire<F: Scalar>(p: &Point<F>) -> Vec<Vec<RatWire>> {
    p.rows().iter().map(lexvec_to_wire).collect()
}

pub fn point_from_wire<F: Scalar>(w: &[Vec<RatWire>], n: usize, k: usize, path: &str) -> Result<Point<F>> {
    if w.len() != n {
        return Err(perr(path, format!("expected {n} rows, found {}", w.len())));
    }
    let rows = w.iter().enumerate().map(|(i, r)| lexvec_from_wire(r, k, &format!("{path}[{i}]"))).collect::<Result<_>>()?;
    Point::new(k, rows)
}

/// Parses a comma-separated lex value such as `0,1/2`.
pub fn parse_lexvec<F: Scalar>(s: &str, k: usize) -> Result<LexVec<F>> {
    let parts: Vec<RatWire> = s.split(',').map(|p| RatWire::Str(p.trim().to_string())).collect();
    lexvec_from_wire(&parts, k, "argument")
}

/// Parses a point given as `;`-separated rows of comma-separated coordinates.
pub fn parse_point<F: Scalar>(s: &str, n: usize, k: usize) -> Result<Point<F>> {
    let rows: Vec<Vec<RatWire>> =
        s.split(';').map(|r| r.split(',').map(|p| RatWire::Str(p.trim().to_string())).collect()).collect();
    point_from_wire(&rows, n, k, "argument")
}

pub fn parse_ints(s: &str, n: usize) -> Result<Vec<i64>> {
    let v = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| perr("argument", format!("malformed integer {p:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    if v.len() != n {
        return Err(perr("argument", format!("expected {n} integers, found {}", v.len())));
    }
    Ok(v)
}

fn hs_to_wire<F: Scalar>(h: &Halfspace<F>) -> HalfspaceWire {
    HalfspaceWire { u: h.u.clone(), gamma: lexvec_to_wire(&h.gamma) }
}

fn hs_from_wire<F: Scalar>(w: &HalfspaceWire, n: usize, k: usize, path: &str) -> Result<Halfspace<F>> {
    if w.u.len() != n {
        return Err(perr(format!("{path}.u"), format!("expected {n} entries, found {}", w.u.len())));
    }
    Ok(Halfspace::new(w.u.clone(), lexvec_from_wire(&w.gamma, k, &format!("{path}.gamma"))?))
}

fn hss_from_wire<F: Scalar>(ws: &[HalfspaceWire], n: usize, k: usize, path: &str) -> Result<Vec<Halfspace<F>>> {
    ws.iter().enumerate().map(|(i, h)| hs_from_wire(h, n, k, &format!("{path}[{i}]"))).collect()
}

pub fn polyhedron_to_wire<F: Scalar>(p: &Polyhedron<F>) -> PolyhedronWire {
    PolyhedronWire { n: p.n(), k: p.k(), halfspaces: p.halfspaces().iter().map(hs_to_wire).collect() }
}

pub fn polyhedron_from_wire<F: Scalar>(w: &PolyhedronWire) -> Result<Polyhedron<F>> {
    Polyhedron::new(w.n, w.k, hss_from_wire(&w.halfspaces, w.n, w.k, "halfspaces")?)
}

pub fn complex_to_wire<F: Scalar>(c: &PolyComplex<F>, with_incidences: bool) -> ComplexWire {
    ComplexWire {
        n: c.n(),
        k: c.k(),
        cells: c.cells().iter().map(|p| p.halfspaces().iter().map(hs_to_wire).collect()).collect(),
        incidences: with_incidences.then(|| c.incidences()),
    }
}

fn complex_from_wire_at<F: Scalar>(w: &ComplexWire, path: &str) -> Result<(PolyComplex<F>, Option<Vec<(usize, usize)>>)> {
    let cells = w
        .cells
        .iter()
        .enumerate()
        .map(|(i, c)| Polyhedron::new(w.n, w.k, hss_from_wire(c, w.n, w.k, &format!("{path}cells[{i}]"))?))
        .collect::<Result<Vec<_>>>()?;
    if let Some(inc) = &w.incidences {
        for (i, &(a, b)) in inc.iter().enumerate() {
            if a >= cells.len() || b >= cells.len() {
                return Err(perr(format!("{path}incidences[{i}]"), format!("cell index out of range ({} cells)", cells.len())));
            }
        }
    }
    Ok((PolyComplex::new(w.n, w.k, cells)?, w.incidences.clone()))
}

/// The complex and its declared incidences, if any.
pub fn complex_from_wire<F: Scalar>(w: &ComplexWire) -> Result<(PolyComplex<F>, Option<Vec<(usize, usize)>>)> {
    complex_from_wire_at(w, "")
}

pub fn fan_to_wire<F: Scalar>(f: &AdmissibleFan<F>) -> FanWire {
    FanWire {
        n: f.n(),
        k: f.k(),
        cones: f.cones().iter().map(|c| c.constraints().iter().map(hs_to_wire).collect()).collect(),
        expected_rec: None,
    }
}

/// The fan and its expected recession complexes, if any.
pub fn fan_from_wire<F: Scalar>(w: &FanWire) -> Result<(AdmissibleFan<F>, Option<Vec<PolyComplex<F>>>)> {
    let cones = w
        .cones
        .iter()
        .enumerate()
        .map(|(i, c)| AdmissibleCone::new(w.n, w.k, hss_from_wire(c, w.n, w.k, &format!("cones[{i}]"))?))
        .collect::<Result<Vec<_>>>()?;
    let expected = match &w.expected_rec {
        None => None,
        Some(recs) => Some(
            recs.iter()
                .enumerate()
                .map(|(i, r)| {
                    let path = format!("expected_rec[{i}].");
                    if r.n != w.n || r.k != w.k {
                        return Err(perr(path, "dimensions differ from the fan"));
                    }
                    complex_from_wire_at(r, &path).map(|(c, _)| c)
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Ok((AdmissibleFan::new(w.n, w.k, cones)?, expected))
}

pub fn laurent_to_wire<F: Scalar>(f: &FormalLaurent<F>) -> LaurentWire {
    LaurentWire {
        terms: f.terms().iter().map(|t| TermWire { u: t.u.clone(), val: lexvec_to_wire(&t.val) }).collect(),
    }
}

pub fn laurent_from_wire<F: Scalar>(w: &LaurentWire, n: usize, k: usize) -> Result<FormalLaurent<F>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut terms = Vec::new();
    for (i, t) in w.terms.iter().enumerate() {
        let path = format!("terms[{i}]");
        if t.u.len() != n {
            return Err(perr(format!("{path}.u"), format!("expected {n} entries, found {}", t.u.len())));
        }
        if !seen.insert(t.u.clone()) {
            return Err(perr(format!("{path}.u"), "repeated exponent"));
        }
        terms.push(ValuedMonomial::new(t.u.clone(), lexvec_from_wire(&t.val, k, &format!("{path}.val"))?));
    }
    FormalLaurent::new(n, k, terms)
}

pub fn generators_to_wire<F: Scalar>(g: &GeneratorSet<F>) -> GeneratorSetWire {
    GeneratorSetWire {
        vertices: g.vertices.iter().map(point_to_wire).collect(),
        generators: g
            .generators
            .iter()
            .map(|x| GeneratorWire { u: x.u.clone(), required_val: lexvec_to_wire(&x.required_val), vertex: x.vertex })
            .collect(),
    }
}

fn cone_to_wire(c: &RationalCone) -> ConeWire {
    ConeWire { rows: c.rows().to_vec(), rays: c.rays().to_vec(), lineality: c.lineality().to_vec() }
}

fn cone_from_wire(w: &ConeWire, n: usize, path: &str) -> Result<RationalCone> {
    let c = RationalCone::from_rows(n, w.rows.clone())?;
    if c.rays() != w.rays.as_slice() || c.lineality() != w.lineality.as_slice() {
        return Err(perr(path, "rays do not match the inequality description"));
    }
    Ok(c)
}

pub fn rational_fan_to_wire(f: &RationalFan) -> RationalFanWire {
    RationalFanWire { n: f.n(), cones: f.cones().iter().map(cone_to_wire).collect() }
}

pub fn rational_fan_from_wire(w: &RationalFanWire, path: &str) -> Result<RationalFan> {
    let cones = w
        .cones
        .iter()
        .enumerate()
        .map(|(i, c)| cone_from_wire(c, w.n, &format!("{path}cones[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    RationalFan::new(w.n, cones)
}

pub fn fiber_report_to_wire<F: Scalar>(r: &FiberReport<F>) -> FiberReportWire {
    FiberReportWire {
        n: r.n,
        k: r.k,
        component_counts: r.component_counts(),
        levels: r
            .levels
            .iter()
            .map(|l| LevelWire {
                level: l.level,
                component_count: l.component_count(),
                complex: complex_to_wire(&l.complex, false),
                components: l
                    .components
                    .iter()
                    .map(|c| ComponentWire {
                        vertex: point_to_wire(&c.vertex),
                        star: rational_fan_to_wire(&c.star),
                        maximal: c
                            .maximal
                            .iter()
                            .map(|(cone, hb)| MaximalConeWire { cone: cone_to_wire(cone), hilbert_basis: hb.clone() })
                            .collect(),
                    })
                    .collect(),
                edges: l.edges.clone(),
            })
            .collect(),
        generic: GenericWire { fan: rational_fan_to_wire(&r.generic.fan), complete: r.generic.complete },
    }
}

pub fn fiber_report_from_wire<F: Scalar>(w: &FiberReportWire) -> Result<FiberReport<F>> {
    let mut levels = Vec::new();
    for (i, l) in w.levels.iter().enumerate() {
        let path = format!("levels[{i}].");
        let (complex, _) = complex_from_wire_at(&l.complex, &format!("{path}complex."))?;
        let mut components = Vec::new();
        for (j, c) in l.components.iter().enumerate() {
            let cpath = format!("{path}components[{j}].");
            let vertex = point_from_wire(&c.vertex, w.n, w.k, &format!("{cpath}vertex"))?;
            let star = rational_fan_from_wire(&c.star, &format!("{cpath}star."))?;
            let maximal = c
                .maximal
                .iter()
                .enumerate()
                .map(|(m, x)| Ok((cone_from_wire(&x.cone, w.n, &format!("{cpath}maximal[{m}]"))?, x.hilbert_basis.clone())))
                .collect::<Result<Vec<_>>>()?;
            components.push(VertexStar { vertex, star, maximal });
        }
        if components.len() != l.component_count {
            return Err(perr(format!("{path}component_count"), "does not match the component list"));
        }
        levels.push(LevelReport { level: l.level, complex, components, edges: l.edges.clone() });
    }
    let fan = rational_fan_from_wire(&w.generic.fan, "generic.fan.")?;
    Ok(FiberReport { n: w.n, k: w.k, levels, generic: GenericFiber { fan, complete: w.generic.complete } })
}

pub fn parse_polyhedron<F: Scalar>(text: &str) -> Result<Polyhedron<F>> {
    polyhedron_from_wire(&from_json::<PolyhedronWire>(text)?)
}

pub fn parse_complex<F: Scalar>(text: &str) -> Result<(PolyComplex<F>, Option<Vec<(usize, usize)>>)> {
    complex_from_wire(&from_json::<ComplexWire>(text)?)
}

pub fn parse_fan<F: Scalar>(text: &str) -> Result<(AdmissibleFan<F>, Option<Vec<PolyComplex<F>>>)> {
    fan_from_wire(&from_json::<FanWire>(text)?)
}

pub fn parse_laurent<F: Scalar>(text: &str, n: usize, k: usize) -> Result<FormalLaurent<F>> {
    laurent_from_wire(&from_json::<LaurentWire>(text)?, n, k)
}
