//! SVG drawings of small complexes.
//!
//! Two shapes are supported: `n = 1` with `k <= 2`, drawn on the plane of
//! the lex coordinates with the leading coordinate horizontal, and `n = 2`
//! with `k = 1`, drawn as an ordinary planar complex.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::lexpoly::{Halfspace, Point, PolyComplex, Polyhedron};
use crate::ordered::LexVec;
use crate::scalar::Scalar;

const SIZE: f64 = 400.0;
const PAD: f64 = 30.0;

fn to_f64<F: Scalar>(x: &F) -> f64 {
    let s = x.to_ratio_string();
    let (p, q) = s.split_once('/').expect("ratio strings contain a slash");
    p.parse::<f64>().unwrap_or(0.0) / q.parse::<f64>().unwrap_or(1.0)
}

struct Frame {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
}

impl Frame {
    fn around(xs: &[f64], ys: &[f64]) -> Self {
        let span = |v: &[f64]| {
            let lo = v.iter().cloned().fold(0.0, f64::min) - 1.0;
            let hi = v.iter().cloned().fold(0.0, f64::max) + 1.0;
            (lo, hi)
        };
        let (xmin, xmax) = span(xs);
        let (ymin, ymax) = span(ys);
        Self { xmin, xmax, ymin, ymax }
    }

    fn x(&self, x: f64) -> f64 {
        PAD + (x - self.xmin) / (self.xmax - self.xmin) * (SIZE - 2.0 * PAD)
    }

    fn y(&self, y: f64) -> f64 {
        SIZE - PAD - (y - self.ymin) / (self.ymax - self.ymin) * (SIZE - 2.0 * PAD)
    }
}

struct Svg {
    body: String,
}

impl Svg {
    fn new(frame: &Frame, xlabel: &str, ylabel: &str) -> Self {
        let mut s = Svg { body: String::new() };
        let (x0, y0) = (frame.x(0.0), frame.y(0.0));
        s.line(PAD, y0, SIZE - PAD, y0, "#999", 1.0);
        s.line(x0, PAD, x0, SIZE - PAD, "#999", 1.0);
        s.text(SIZE - PAD, y0 - 6.0, xlabel, "end");
        s.text(x0 + 6.0, PAD + 10.0, ylabel, "start");
        s
    }

    fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, color: &str, width: f64) {
        writeln!(
            self.body,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="{width}"/>"#
        )
        .unwrap();
    }

    fn rect(&mut self, x1: f64, x2: f64, top: f64, bottom: f64) {
        let (l, w) = (x1.min(x2), (x2 - x1).abs());
        writeln!(
            self.body,
            r##"<rect x="{l:.2}" y="{top:.2}" width="{w:.2}" height="{:.2}" fill="#4a7ab7" fill-opacity="0.15"/>"##,
            bottom - top
        )
        .unwrap();
    }

    fn polygon(&mut self, pts: &[(f64, f64)]) {
        let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        writeln!(
            self.body,
            r##"<polygon points="{}" fill="#4a7ab7" fill-opacity="0.2" stroke="none"/>"##,
            coords.join(" ")
        )
        .unwrap();
    }

    fn dot(&mut self, x: f64, y: f64, label: &str) {
        writeln!(self.body, r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#b03030"/>"##).unwrap();
        self.text(x + 6.0, y - 6.0, label, "start");
    }

    fn text(&mut self, x: f64, y: f64, s: &str, anchor: &str) {
        writeln!(
            self.body,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="monospace" font-size="11" text-anchor="{anchor}">{s}</text>"#
        )
        .unwrap();
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body
        )
    }
}

fn label<F: Scalar>(g: &LexVec<F>) -> String {
    let parts: Vec<String> = g.entries().iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Renders `c` as a standalone SVG document.
pub fn plot<F: Scalar>(c: &PolyComplex<F>) -> Result<String> {
    match (c.n(), c.k()) {
        (1, 1 | 2) => Ok(plot_line(c)),
        (2, 1) => plot_plane(c),
        (n, k) => Err(Error::NotPlottable { n, k }),
    }
}

/// Coordinates of a value of `Q^(k)`, `k <= 2`, on the drawing plane.
fn lex_xy<F: Scalar>(g: &LexVec<F>) -> (f64, f64) {
    let e = g.entries();
    (to_f64(&e[0]), e.get(1).map_or(0.0, to_f64))
}

/// Lower and upper endpoints of a cell of the line, `None` for infinite ends.
fn interval<F: Scalar>(p: &Polyhedron<F>) -> (Option<LexVec<F>>, Option<LexVec<F>>) {
    let (mut lo, mut hi): (Option<LexVec<F>>, Option<LexVec<F>>) = (None, None);
    for h in p.halfspaces() {
        match h.u[0].signum() {
            1 => {
                let b = h.gamma.scale(&F::from_frac(1, h.u[0]));
                if lo.as_ref().map_or(true, |l| b > *l) {
                    lo = Some(b);
                }
            }
            -1 => {
                let b = h.gamma.scale(&F::from_frac(1, h.u[0]));
                if hi.as_ref().map_or(true, |u| b < *u) {
                    hi = Some(b);
                }
            }
            _ => {}
        }
    }
    (lo, hi)
}

fn plot_line<F: Scalar>(c: &PolyComplex<F>) -> String {
    let cells: Vec<&Polyhedron<F>> = c.cells().iter().filter(|p| !p.is_empty()).collect();
    let ends: Vec<LexVec<F>> = cells
        .iter()
        .flat_map(|p| {
            let (a, b) = interval(p);
            a.into_iter().chain(b)
        })
        .collect();
    let (xs, ys): (Vec<f64>, Vec<f64>) = ends.iter().map(lex_xy).unzip();
    let frame = Frame::around(&xs, &ys);
    let (top, bottom) = (PAD, SIZE - PAD);
    let mut svg = Svg::new(&frame, "1st", if c.k() == 2 { "2nd" } else { "" });
    for p in &cells {
        let (lo, hi) = interval(p);
        match (&lo, &hi) {
            (Some(a), Some(b)) if a == b => continue,
            _ => {}
        }
        let lo_xy = lo.as_ref().map(lex_xy);
        let hi_xy = hi.as_ref().map(lex_xy);
        if let (Some((ax, ay)), Some((bx, by))) = (lo_xy, hi_xy) {
            if ax == bx {
                svg.line(frame.x(ax), frame.y(ay), frame.x(bx), frame.y(by), "#4a7ab7", 3.0);
                continue;
            }
        }
        // a lex interval with distinct leading coordinates: the part of the
        // vertical line above its lower end, the open band, and the part below
        // its upper end
        let left = lo_xy.map_or(PAD, |(x, _)| frame.x(x));
        let right = hi_xy.map_or(SIZE - PAD, |(x, _)| frame.x(x));
        if c.k() == 2 {
            svg.rect(left, right, top, bottom);
            if let Some((x, y)) = lo_xy {
                svg.line(frame.x(x), frame.y(y), frame.x(x), top, "#4a7ab7", 3.0);
            }
            if let Some((x, y)) = hi_xy {
                svg.line(frame.x(x), bottom, frame.x(x), frame.y(y), "#4a7ab7", 3.0);
            }
        } else {
            let y0 = frame.y(0.0);
            svg.line(left, y0, right, y0, "#4a7ab7", 3.0);
        }
    }
    for (_, v) in c.vertices() {
        let (x, y) = lex_xy(&v.rows()[0]);
        svg.dot(frame.x(x), frame.y(y), &label(&v.rows()[0]));
    }
    svg.finish()
}

fn plot_plane<F: Scalar>(c: &PolyComplex<F>) -> Result<String> {
    let verts: Vec<Point<F>> = c.vertices().into_iter().map(|(_, p)| p).collect();
    let xs: Vec<f64> = verts.iter().map(|v| to_f64(&v.rows()[0].entries()[0])).collect();
    let ys: Vec<f64> = verts.iter().map(|v| to_f64(&v.rows()[1].entries()[0])).collect();
    let frame = Frame::around(&xs, &ys);
    let bound = |x: f64, up: bool| -> F {
        let v = if up { x.ceil() } else { x.floor() };
        F::from_i64(v as i64)
    };
    let clip = [
        Halfspace::new(vec![1, 0], LexVec::new(vec![bound(frame.xmin, false)])),
        Halfspace::new(vec![-1, 0], LexVec::new(vec![-bound(frame.xmax, true)])),
        Halfspace::new(vec![0, 1], LexVec::new(vec![bound(frame.ymin, false)])),
        Halfspace::new(vec![0, -1], LexVec::new(vec![-bound(frame.ymax, true)])),
    ];
    let mut svg = Svg::new(&frame, "x", "y");
    let mut by_dim: Vec<(usize, Vec<(f64, f64)>)> = Vec::new();
    for cell in c.cells() {
        let Ok(dim) = cell.dimension() else { continue };
        let mut hs = cell.halfspaces().to_vec();
        hs.extend(clip.iter().cloned());
        let boxed = Polyhedron::new(2, 1, hs)?;
        if boxed.is_empty() {
            continue;
        }
        let mut pts: Vec<(f64, f64)> = boxed
            .vertices()?
            .iter()
            .map(|v| (frame.x(to_f64(&v.rows()[0].entries()[0])), frame.y(to_f64(&v.rows()[1].entries()[0]))))
            .collect();
        let (cx, cy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
        let (cx, cy) = (cx / pts.len() as f64, cy / pts.len() as f64);
        pts.sort_by(|a, b| (a.1 - cy).atan2(a.0 - cx).total_cmp(&(b.1 - cy).atan2(b.0 - cx)));
        by_dim.push((dim, pts));
    }
    by_dim.sort_by(|a, b| b.0.cmp(&a.0));
    for (dim, pts) in &by_dim {
        match dim {
            2 => svg.polygon(pts),
            1 if pts.len() >= 2 => {
                let (a, b) = (pts[0], pts[pts.len() - 1]);
                svg.line(a.0, a.1, b.0, b.1, "#4a7ab7", 3.0);
            }
            _ => {}
        }
    }
    for v in &verts {
        let (x, y) = (to_f64(&v.rows()[0].entries()[0]), to_f64(&v.rows()[1].entries()[0]));
        let text = format!("({},{})", v.rows()[0].entries()[0], v.rows()[1].entries()[0]);
        svg.dot(frame.x(x), frame.y(y), &text);
    }
    Ok(svg.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polyhedron<BigRational>;

    fn hs(u: &[i64], g: &[i64]) -> Halfspace<BigRational> {
        Halfspace::new(u.to_vec(), LexVec::from_ints(g))
    }

    #[test]
    fn chain_has_three_labeled_vertices() {
        let pt = |g: &[i64]| P::point(&Point::from_int_rows(&[g]));
        let c = PolyComplex::new(
            1,
            2,
            vec![
                pt(&[0, -1]),
                pt(&[0, 1]),
                pt(&[1, 0]),
                P::new(1, 2, vec![hs(&[-1], &[0, 1])]).unwrap(),
                P::new(1, 2, vec![hs(&[1], &[0, -1]), hs(&[-1], &[0, -1])]).unwrap(),
                P::new(1, 2, vec![hs(&[1], &[0, 1]), hs(&[-1], &[-1, 0])]).unwrap(),
                P::new(1, 2, vec![hs(&[1], &[1, 0])]).unwrap(),
            ],
        )
        .unwrap();
        let svg = plot(&c).unwrap();
        assert_eq!(svg.matches("<circle").count(), 3);
        for l in ["(0,-1)", "(0,1)", "(1,0)"] {
            assert!(svg.contains(&format!(">{l}</text>")));
        }
        assert_eq!(svg, plot(&c).unwrap());
    }

    #[test]
    fn shapes() {
        let empty = PolyComplex::<BigRational>::new(1, 2, vec![]).unwrap();
        let svg = plot(&empty).unwrap();
        assert!(svg.starts_with("<svg") && !svg.contains("<circle"));
        assert_eq!(svg.matches("<line").count(), 2);
        let far = PolyComplex::<BigRational>::new(1, 3, vec![]).unwrap();
        assert_eq!(plot(&far), Err(Error::NotPlottable { n: 1, k: 3 }));
        let quadrant = P::new(2, 1, vec![hs(&[1, 0], &[0]), hs(&[0, 1], &[0])]).unwrap();
        let c = PolyComplex::from_faces(&quadrant);
        let svg = plot(&c).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 1);
    }
}
