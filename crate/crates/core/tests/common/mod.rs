//! Test-side oracles and random instance generators, written independently of
//! the library algorithms they check.

#![allow(dead_code)]

use lexfan::{Constraint, Halfspace, LexVec, Point, PolyComplex, Polyhedron, Relation, Q};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(p: i64, d: i64) -> Q {
    Q::new(p.into(), d.into())
}

pub fn lv(e: &[i64]) -> LexVec<Q> {
    LexVec::from_ints(e)
}

pub fn hs(u: &[i64], g: &[i64]) -> Halfspace<Q> {
    Halfspace::new(u.to_vec(), lv(g))
}

pub fn pt1(g: &[i64]) -> Point<Q> {
    Point::from_int_rows(&[g])
}

// ---------------------------------------------------------------------------
// Scalar Fourier-Motzkin over Q with equalities and strict inequalities.

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Kind {
    Eq,
    Gt,
}

/// `a . x KIND b`
#[derive(Clone, Debug)]
pub struct Row {
    pub a: Vec<Q>,
    pub b: Q,
    pub kind: Kind,
}

pub fn scalar_feasible(rows: Vec<Row>, d: usize) -> bool {
    if d == 0 {
        return rows.iter().all(|r| match r.kind {
            Kind::Eq => r.b.is_zero(),
            Kind::Gt => r.b.is_negative(),
        });
    }
    // substitute an equality that mentions a variable
    if let Some((idx, j)) =
        rows.iter().enumerate().find_map(|(i, r)| (r.kind == Kind::Eq).then(|| r.a.iter().position(|c| !c.is_zero())).flatten().map(|j| (i, j)))
    {
        let pivot = rows[idx].clone();
        let out = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, r)| {
                let f = r.a[j].clone() / pivot.a[j].clone();
                let a: Vec<Q> =
                    (0..d).filter(|&c| c != j).map(|c| r.a[c].clone() - f.clone() * pivot.a[c].clone()).collect();
                Row { a, b: r.b.clone() - f * pivot.b.clone(), kind: r.kind }
            })
            .collect();
        return scalar_feasible(out, d - 1);
    }
    // only strict rows (and trivial equalities) mention variables; eliminate the last one
    let last = d - 1;
    let mut keep = Vec::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for r in rows {
        let c = r.a[last].clone();
        if c.is_zero() {
            keep.push(Row { a: r.a[..last].to_vec(), b: r.b, kind: r.kind });
        } else {
            let s = c.abs();
            let a: Vec<Q> = r.a[..last].iter().map(|x| x.clone() / s.clone()).collect();
            let row = Row { a, b: r.b / s, kind: Kind::Gt };
            if c.is_positive() {
                pos.push(row);
            } else {
                neg.push(row);
            }
        }
    }
    for p in &pos {
        for m in &neg {
            let a = p.a.iter().zip(&m.a).map(|(x, y)| x.clone() + y.clone()).collect();
            keep.push(Row { a, b: p.b.clone() + m.b.clone(), kind: Kind::Gt });
        }
    }
    scalar_feasible(keep, last)
}

/// Decides a lex-linear system by expanding each lex relation into the
/// patterns "agree on the first t coordinates, then strictly larger" (or
/// agree everywhere) and testing every combination level by level.
pub fn brute_force_feasible(n: usize, k: usize, sys: &[Constraint<Q>]) -> bool {
    let choices: Vec<Vec<usize>> = sys
        .iter()
        .map(|c| match c.rel {
            Relation::Eq => vec![k],
            Relation::Gt => (0..k).collect(),
            Relation::Ge => (0..=k).collect(),
        })
        .collect();
    let mut pattern = vec![0usize; sys.len()];
    fn rec(i: usize, pattern: &mut Vec<usize>, choices: &[Vec<usize>], check: &dyn Fn(&[usize]) -> bool) -> bool {
        if i == choices.len() {
            return check(pattern);
        }
        for &t in &choices[i] {
            pattern[i] = t;
            if rec(i + 1, pattern, choices, check) {
                return true;
            }
        }
        false
    }
    let check = |pat: &[usize]| -> bool {
        (0..k).all(|level| {
            let rows = sys
                .iter()
                .zip(pat)
                .filter_map(|(c, &t)| {
                    let a: Vec<Q> = c.u.iter().map(|&x| Q::from_integer(x.into())).collect();
                    let b = c.gamma.entries()[level].clone();
                    match level.cmp(&t) {
                        std::cmp::Ordering::Less => Some(Row { a, b, kind: Kind::Eq }),
                        std::cmp::Ordering::Equal => Some(Row { a, b, kind: Kind::Gt }),
                        std::cmp::Ordering::Greater => None,
                    }
                })
                .collect();
            scalar_feasible(rows, n)
        })
    };
    if k == 0 {
        return true;
    }
    rec(0, &mut pattern, &choices, &check)
}

// ---------------------------------------------------------------------------
// Hilbert basis of the dual of a full-dimensional pointed cone in Z^2.

fn primitive(v: [i64; 2]) -> [i64; 2] {
    let g = num_integer::gcd(v[0], v[1]).abs();
    [v[0] / g, v[1] / g]
}

fn dot2(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[0] + a[1] * b[1]
}

/// Minimal generators of `cone(g1, g2)^∨ ∩ Z^2` from the lattice points of the
/// closed fundamental parallelepiped of the dual rays.
pub fn hilbert_oracle_2d(g1: [i64; 2], g2: [i64; 2]) -> Vec<Vec<i64>> {
    let perp = |g: [i64; 2], other: [i64; 2]| {
        let r = primitive([-g[1], g[0]]);
        if dot2(r, other) > 0 {
            r
        } else {
            [-r[0], -r[1]]
        }
    };
    let r1 = perp(g1, g2);
    let r2 = perp(g2, g1);
    let det = (r1[0] * r2[1] - r1[1] * r2[0]) as f64;
    // coordinates (a, b) with x = a r1 + b r2
    let coords = |x: [i64; 2]| {
        let a = (x[0] * r2[1] - x[1] * r2[0]) as f64 / det;
        let b = (r1[0] * x[1] - r1[1] * x[0]) as f64 / det;
        (a, b)
    };
    let in_dual = |x: [i64; 2]| dot2(x, g1) >= 0 && dot2(x, g2) >= 0;
    let corners = [[0, 0], r1, r2, [r1[0] + r2[0], r1[1] + r2[1]]];
    let (x0, x1) = (corners.iter().map(|c| c[0]).min().unwrap(), corners.iter().map(|c| c[0]).max().unwrap());
    let (y0, y1) = (corners.iter().map(|c| c[1]).min().unwrap(), corners.iter().map(|c| c[1]).max().unwrap());
    let mut box_pts = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let p = [x, y];
            let (a, b) = coords(p);
            if p != [0, 0] && in_dual(p) && a <= 1.0 + 1e-9 && b <= 1.0 + 1e-9 {
                box_pts.push(p);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = box_pts
        .iter()
        .filter(|&&x| !box_pts.iter().any(|&y| y != x && in_dual([x[0] - y[0], x[1] - y[1]])))
        .map(|x| x.to_vec())
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Random instances.

pub fn rand_lex(r: &mut Rng8, k: usize, lo: i64, hi: i64) -> LexVec<Q> {
    LexVec::new((0..k).map(|_| q(r.gen_range(lo..=hi), r.gen_range(1..=2))).collect())
}

pub fn rand_u(r: &mut Rng8, n: usize, m: i64) -> Vec<i64> {
    (0..n).map(|_| r.gen_range(-m..=m)).collect()
}

pub fn random_system(r: &mut Rng8) -> (usize, usize, Vec<Constraint<Q>>) {
    let n = r.gen_range(1..=2);
    let k = r.gen_range(1..=2);
    let m = r.gen_range(0..=6);
    let sys = (0..m)
        .map(|_| {
            let u = rand_u(r, n, 2);
            let gamma = rand_lex(r, k, -3, 3);
            let rel = match r.gen_range(0..6) {
                0 => Relation::Eq,
                1 | 2 => Relation::Gt,
                _ => Relation::Ge,
            };
            Constraint { u, rel, gamma }
        })
        .collect();
    (n, k, sys)
}

pub fn random_pointed(r: &mut Rng8, n: usize, k: usize) -> Polyhedron<Q> {
    loop {
        let m = r.gen_range(n..=n + 2);
        let hs = (0..m).map(|_| Halfspace::new(rand_u(r, n, 2), rand_lex(r, k, -3, 3))).collect();
        let p = Polyhedron::new(n, k, hs).unwrap();
        if !p.is_empty() && p.is_pointed().unwrap() {
            return p;
        }
    }
}

/// Nonempty and not pointed: every normal is a multiple of one primitive vector
/// of `Z^2`.
pub fn random_unpointed(r: &mut Rng8, k: usize) -> Polyhedron<Q> {
    loop {
        let base = loop {
            let b = rand_u(r, 2, 2);
            if b != [0, 0] {
                break primitive([b[0], b[1]]);
            }
        };
        let m = r.gen_range(0..=3);
        let hs = (0..m)
            .map(|_| {
                let c = [-2, -1, 1, 2][r.gen_range(0..4)];
                Halfspace::new(vec![c * base[0], c * base[1]], rand_lex(r, k, -3, 3))
            })
            .collect();
        let p = Polyhedron::new(2, k, hs).unwrap();
        if !p.is_empty() {
            return p;
        }
    }
}

fn sorted_distinct_points(r: &mut Rng8, m: usize) -> Vec<LexVec<Q>> {
    loop {
        let mut ps: Vec<LexVec<Q>> = (0..m).map(|_| rand_lex(r, 2, -2, 2)).collect();
        ps.sort();
        ps.dedup();
        if ps.len() == m {
            return ps;
        }
    }
}

fn at_least(g: &LexVec<Q>) -> Halfspace<Q> {
    Halfspace::new(vec![1], g.clone())
}

fn at_most(g: &LexVec<Q>) -> Halfspace<Q> {
    Halfspace::new(vec![-1], -g)
}

/// A subdivision of part of the lex line `Q^(2)`.
fn random_line_complex(r: &mut Rng8) -> PolyComplex<Q> {
    let m = r.gen_range(1..=3);
    let ps = sorted_distinct_points(r, m);
    let mut cells: Vec<Polyhedron<Q>> =
        ps.iter().map(|p| Polyhedron::new(1, 2, vec![at_least(p), at_most(p)]).unwrap()).collect();
    for w in ps.windows(2) {
        if cells.len() < 6 && r.gen_bool(0.8) {
            cells.push(Polyhedron::new(1, 2, vec![at_least(&w[0]), at_most(&w[1])]).unwrap());
        }
    }
    if cells.len() < 6 && r.gen_bool(0.5) {
        cells.push(Polyhedron::new(1, 2, vec![at_most(&ps[0])]).unwrap());
    }
    if cells.len() < 6 && r.gen_bool(0.5) {
        cells.push(Polyhedron::new(1, 2, vec![at_least(&ps[m - 1])]).unwrap());
    }
    PolyComplex::new(1, 2, cells).unwrap()
}

fn with_faces(polys: &[Polyhedron<Q>]) -> PolyComplex<Q> {
    let mut cells: Vec<Polyhedron<Q>> = Vec::new();
    for p in polys {
        for f in p.faces() {
            let c = p.face_polyhedron(f);
            if !cells.iter().any(|d| d.set_eq(&c)) {
                cells.push(c);
            }
        }
    }
    PolyComplex::new(polys[0].n(), polys[0].k(), cells).unwrap()
}

/// Cells in `N ⊗ Q^(2)` for `N = Z^2`: faces of one pointed polyhedron, or two
/// cones at a lex vertex sharing a ray.
fn random_plane_complex(r: &mut Rng8) -> PolyComplex<Q> {
    loop {
        let v = Point::new(2, vec![rand_lex(r, 2, -2, 2), rand_lex(r, 2, -2, 2)]).unwrap();
        let c = if r.gen_bool(0.5) {
            let p = random_pointed(r, 2, 2);
            with_faces(&[p])
        } else {
            // cone((1,0), (a,1)) and cone((a,1), (-1,0)) translated to v
            let a = r.gen_range(-2..=2);
            let at = |u: Vec<i64>| Halfspace::new(u.clone(), v.pair(&u));
            let right = Polyhedron::new(2, 2, vec![at(vec![0, 1]), at(vec![1, -a])]).unwrap();
            let left = Polyhedron::new(2, 2, vec![at(vec![0, 1]), at(vec![-1, a])]).unwrap();
            if r.gen_bool(0.5) {
                with_faces(&[right, left])
            } else {
                with_faces(&[right])
            }
        };
        if c.cells().len() <= 6 {
            return c;
        }
    }
}

pub fn random_complex(r: &mut Rng8) -> PolyComplex<Q> {
    if r.gen_bool(0.5) {
        random_line_complex(r)
    } else {
        random_plane_complex(r)
    }
}

/// The three-vertex chain on the lex line: points `(0,-1) < (0,1) < (1,0)`,
/// the segments between them and the two unbounded rays.
pub fn chain_complex() -> PolyComplex<Q> {
    let p = |g: &[i64]| Polyhedron::point(&pt1(g));
    let seg = |a: &[i64], b: &[i64]| Polyhedron::new(1, 2, vec![at_least(&lv(a)), at_most(&lv(b))]).unwrap();
    PolyComplex::new(
        1,
        2,
        vec![
            p(&[0, -1]),
            p(&[0, 1]),
            p(&[1, 0]),
            Polyhedron::new(1, 2, vec![at_most(&lv(&[0, -1]))]).unwrap(),
            seg(&[0, -1], &[0, 1]),
            seg(&[0, 1], &[1, 0]),
            Polyhedron::new(1, 2, vec![at_least(&lv(&[1, 0]))]).unwrap(),
        ],
    )
    .unwrap()
}
