//! Integer lattice linear algebra on `M = Z^n` and its dual `N`.

use num_integer::Integer;

use crate::error::{Error, Result};

/// A unimodular change of basis `W` of `N` adapted to a set of rows of `M`.
///
/// `rows * W = [H | 0]` where `H` has `rank` columns. The first `rank`
/// columns of `W` (the lifts) map to a basis of `N / V_Z`; the remaining
/// columns are a basis of the saturated kernel `V_Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSplit {
    pub n: usize,
    pub rank: usize,
    pub lifts: Vec<Vec<i64>>,
    pub kernel: Vec<Vec<i64>>,
}

impl LatticeSplit {
    pub fn new(rows: &[Vec<i64>], n: usize) -> Result<Self> {
        let (rank, w) = column_reduce(rows, n)?;
        let col = |c: usize| -> Result<Vec<i64>> { w.iter().map(|row| narrow(row[c])).collect() };
        let lifts = (0..rank).map(col).collect::<Result<Vec<_>>>()?;
        let kernel = (rank..n).map(col).collect::<Result<Vec<_>>>()?;
        Ok(Self { n, rank, lifts, kernel })
    }

    /// True iff `u` annihilates the kernel, i.e. lies in the saturated row span.
    pub fn contains_dual(&self, u: &[i64]) -> bool {
        self.kernel.iter().all(|d| dot(u, d) == 0)
    }

    /// Coordinates of `u` in the quotient basis, or `None` when `u` does not
    /// vanish on the kernel.
    pub fn push_dual(&self, u: &[i64]) -> Option<Vec<i64>> {
        self.contains_dual(u).then(|| self.lifts.iter().map(|w| dot(u, w)).collect())
    }
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::LatticeOverflow)
}

fn ck(x: Option<i128>) -> Result<i128> {
    x.ok_or(Error::LatticeOverflow)
}

/// Unimodular column reduction; returns the rank and `W` as an `n x n`
/// row-major matrix.
fn column_reduce(rows: &[Vec<i64>], n: usize) -> Result<(usize, Vec<Vec<i128>>)> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut w: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut piv = 0;
    for i in 0..a.len() {
        if piv == n {
            break;
        }
        loop {
            let best = (piv..n).filter(|&c| a[i][c] != 0).min_by_key(|&c| a[i][c].unsigned_abs());
            let Some(c) = best else { break };
            swap_cols(&mut a, c, piv);
            swap_cols(&mut w, c, piv);
            let mut done = true;
            for c in piv + 1..n {
                if a[i][c] != 0 {
                    let q = Integer::div_floor(&a[i][c], &a[i][piv]);
                    axpy_col(&mut a, c, piv, q)?;
                    axpy_col(&mut w, c, piv, q)?;
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[i].get(piv).is_some_and(|&x| x != 0) {
            piv += 1;
        }
    }
    Ok((piv, w))
}

fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// `col[dst] -= q * col[src]`
fn axpy_col(m: &mut [Vec<i128>], dst: usize, src: usize, q: i128) -> Result<()> {
    for row in m.iter_mut() {
        row[dst] = ck(row[dst].checked_sub(ck(q.checked_mul(row[src]))?))?;
    }
    Ok(())
}

pub fn dot(u: &[i64], v: &[i64]) -> i64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Rank over `Q` of a list of integer rows.
pub fn rank(rows: &[Vec<i64>], n: usize) -> Result<usize> {
    Ok(column_reduce(rows, n)?.0)
}

/// Basis of the integer kernel `{d in Z^n : <row, d> = 0 for all rows}`; saturated.
pub fn kernel(rows: &[Vec<i64>], n: usize) -> Result<Vec<Vec<i64>>> {
    Ok(LatticeSplit::new(rows, n)?.kernel)
}

/// Basis of `span_Q(rows) ∩ Z^n`.
pub fn saturated_span(rows: &[Vec<i64>], n: usize) -> Result<Vec<Vec<i64>>> {
    let ker = kernel(rows, n)?;
    kernel(&ker, n)
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}
