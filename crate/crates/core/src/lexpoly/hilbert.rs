//! Hilbert bases of dual monoids `S_σ = σ^∨ ∩ M`.

use crate::error::Result;
use crate::lattice::{dot, LatticeSplit};
use crate::lexpoly::{cone_generators, RationalCone};

/// Minimal generating set of `S_σ` for a rational cone `σ`.
///
/// The unit group `σ^⊥ ∩ M` is split off first and contributes `±b` for each
/// basis vector `b`. On the complementary lattice the dual cone is pointed;
/// its lattice points in the zonotope spanned by the dual rays contain every
/// irreducible element (each lies in a fundamental parallelepiped of some
/// simplicial subcone), and an element is kept iff no other candidate can be
/// subtracted from it inside the cone.
pub fn hilbert_basis(sigma: &RationalCone) -> Result<Vec<Vec<i64>>> {
    hilbert_basis_of_dual(sigma.n(), &sigma.all_generators())
}

/// Hilbert basis of `{u in M : <u, g> >= 0 for every generator g}`.
pub fn hilbert_basis_of_dual(n: usize, generators: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let split = LatticeSplit::new(generators, n)?;
    let r = split.rank;
    // generators in coordinates dual to the complementary basis of M
    let local: Vec<Vec<i64>> = generators.iter().map(|g| split.push_dual(g).expect("generator in own span")).collect();
    let dual = cone_generators(r, &local)?;
    debug_assert!(dual.lineality.is_empty());

    let (mut lo, mut hi) = (vec![0i64; r], vec![0i64; r]);
    for ray in &dual.rays {
        for c in 0..r {
            lo[c] += ray[c].min(0);
            hi[c] += ray[c].max(0);
        }
    }
    let in_cone = |x: &[i64]| local.iter().all(|g| dot(g, x) >= 0);
    let mut candidates = Vec::new();
    let mut x = lo.clone();
    if r > 0 {
        loop {
            if x.iter().any(|&v| v != 0) && in_cone(&x) {
                candidates.push(x.clone());
            }
            let mut c = 0;
            while c < r {
                if x[c] < hi[c] {
                    x[c] += 1;
                    break;
                }
                x[c] = lo[c];
                c += 1;
            }
            if c == r {
                break;
            }
        }
    }
    let irreducible: Vec<Vec<i64>> = candidates
        .iter()
        .filter(|x| {
            !candidates.iter().any(|y| {
                y != *x && {
                    let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                    in_cone(&diff)
                }
            })
        })
        .cloned()
        .collect();

    let mut basis: Vec<Vec<i64>> = irreducible
        .iter()
        .map(|c| (0..n).map(|j| (0..r).map(|a| c[a] * split.lifts[a][j]).sum()).collect())
        .collect();
    for b in &split.kernel {
        basis.push(b.clone());
        basis.push(b.iter().map(|x| -x).collect());
    }
    basis.sort();
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis_of(gens: &[&[i64]], n: usize) -> Vec<Vec<i64>> {
        let cone = RationalCone::from_generators(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap();
        hilbert_basis(&cone).unwrap()
    }

    #[test]
    fn orthant_is_self_dual() {
        assert_eq!(basis_of(&[&[1, 0], &[0, 1]], 2), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn worked_cone() {
        assert_eq!(basis_of(&[&[1, 0], &[1, 2]], 2), vec![vec![0, 1], vec![1, 0], vec![2, -1]]);
    }

    #[test]
    fn origin_has_unit_dual() {
        assert_eq!(basis_of(&[], 1), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn ray_in_plane() {
        // dual of the ray (1,0) is the half-plane a >= 0: units (0,±1) plus one pointed generator
        let b = basis_of(&[&[1, 0]], 2);
        assert_eq!(b.len(), 3);
        assert!(b.iter().filter(|u| u[0] == 0).count() == 2);
        assert!(b.iter().any(|u| u[0] == 1));
    }

    #[test]
    fn three_dimensional_cone() {
        // cone over the unit square at height 1: dual has Hilbert basis of the 4 facet normals
        let b = basis_of(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]], 3);
        assert_eq!(b, vec![vec![-1, 0, 1], vec![0, -1, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }
}
