//! Lexicographically ordered value vectors and the monoid of
//! order-preserving coordinate multipliers acting on them.
//!
//! The value group is `Q^(k)`: `k` exact rationals ordered with the first
//! coordinate most significant. Its convex subgroups are the trailing
//! coordinate subgroups, so the truncation `epsilon(i)` that zeroes the last
//! `i` coordinates realizes the quotient by the `i`-th convex subgroup.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

/// An element of `Q^(k)` under the lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LexVec<F> {
    entries: Vec<F>,
}

impl<F: Scalar> LexVec<F> {
    pub fn new(entries: Vec<F>) -> Self {
        Self { entries }
    }

    pub fn zero(k: usize) -> Self {
        Self { entries: vec![F::zero(); k] }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self { entries: entries.iter().map(|&e| F::from_i64(e)).collect() }
    }

    /// `(1, 0, ..., 0)`, the smallest standard positive element of the leading class.
    pub fn leading_unit(k: usize) -> Self {
        let mut v = Self::zero(k);
        if k > 0 {
            v.entries[0] = F::one();
        }
        v
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<F> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Sign of the first nonzero coordinate.
    pub fn signum(&self) -> Ordering {
        self.entries
            .iter()
            .find(|e| !e.is_zero())
            .map_or(Ordering::Equal, |e| if e.is_positive() { Ordering::Greater } else { Ordering::Less })
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() != Ordering::Less
    }

    pub fn scale(&self, q: &F) -> Self {
        Self { entries: self.entries.iter().map(|e| e.clone() * q.clone()).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        Self { entries: self.entries.iter().map(|e| crate::scalar::scale_int(c, e)).collect() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.k(), other.k())?;
        Ok(self + other)
    }

    /// Number of leading zero coordinates (`k` for the zero vector): the
    /// Archimedean class of `self`, measured from the top.
    pub fn arch_level(&self) -> usize {
        self.entries.iter().take_while(|e| e.is_zero()).count()
    }
}

impl<'a, F: Scalar> Add for &'a LexVec<F> {
    type Output = LexVec<F>;

    fn add(self, rhs: Self) -> LexVec<F> {
        assert_eq!(self.k(), rhs.k(), "LexVec dimension mismatch");
        LexVec {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<'a, F: Scalar> Sub for &'a LexVec<F> {
    type Output = LexVec<F>;

    fn sub(self, rhs: Self) -> LexVec<F> {
        assert_eq!(self.k(), rhs.k(), "LexVec dimension mismatch");
        LexVec {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<'a, F: Scalar> Neg for &'a LexVec<F> {
    type Output = LexVec<F>;

    fn neg(self) -> LexVec<F> {
        LexVec { entries: self.entries.iter().map(|a| -a.clone()).collect() }
    }
}

impl<F: Scalar> fmt::Display for LexVec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison, first coordinate dominant.
pub fn lex_cmp<F: Scalar>(a: &LexVec<F>, b: &LexVec<F>) -> Result<Ordering> {
    check_dim(a.k(), b.k())?;
    Ok(a.cmp(b))
}

/// A coordinatewise multiplier `r`, acting by `g -> (r_1 g_1, ..., r_k g_k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multiplier<F> {
    entries: Vec<F>,
}

/// Outcome of testing a multiplier for order preservation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Monotonicity<F> {
    Monotone,
    /// `witness >= 0` but the multiplier sends it below zero.
    NotMonotone { witness: LexVec<F> },
}

impl<F> Monotonicity<F> {
    pub fn is_monotone(&self) -> bool {
        matches!(self, Monotonicity::Monotone)
    }
}

impl<F: Scalar> Multiplier<F> {
    pub fn new(entries: Vec<F>) -> Self {
        Self { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self { entries: entries.iter().map(|&e| F::from_i64(e)).collect() }
    }

    pub fn identity(k: usize) -> Self {
        Self { entries: vec![F::one(); k] }
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    /// Componentwise product; the composite endomorphism.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_dim(self.k(), other.k())?;
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() * b.clone()).collect(),
        })
    }

    /// Length of the positive prefix and whether everything after it is zero.
    fn prefix_shape(&self) -> (usize, bool) {
        let m = self.entries.iter().take_while(|e| e.is_positive()).count();
        (m, self.entries[m..].iter().all(|e| e.is_zero()))
    }

    /// True iff the multiplier vanishes on the last `t` coordinates.
    pub fn kills_trailing(&self, t: usize) -> bool {
        t <= self.k() && self.entries[self.k() - t..].iter().all(|e| e.is_zero())
    }
}

/// Decides whether `r` preserves the lexicographic order.
///
/// The monotone multipliers are exactly `(r_1, ..., r_m, 0, ..., 0)` with
/// `r_1, ..., r_m > 0`. Otherwise let `i` be the first position where the
/// prefix breaks: either `r_i < 0` (witness `e_i`), or `r_i = 0` with a later
/// nonzero `r_j` (witness `e_i - sign(r_j) e_j`).
pub fn is_monotone_multiplier<F: Scalar>(r: &Multiplier<F>) -> Monotonicity<F> {
    let (m, tail_zero) = r.prefix_shape();
    if tail_zero {
        return Monotonicity::Monotone;
    }
    let k = r.k();
    let mut witness = vec![F::zero(); k];
    witness[m] = F::one();
    if r.entries[m].is_zero() {
        let j = (m + 1..k).find(|&j| !r.entries[j].is_zero()).expect("nonzero tail entry");
        witness[j] = if r.entries[j].is_positive() { -F::one() } else { F::one() };
    }
    Monotonicity::NotMonotone { witness: LexVec::new(witness) }
}

pub fn apply_multiplier<F: Scalar>(r: &Multiplier<F>, g: &LexVec<F>) -> Result<LexVec<F>> {
    check_dim(r.k(), g.k())?;
    Ok(LexVec::new(r.entries.iter().zip(g.entries()).map(|(a, b)| a.clone() * b.clone()).collect()))
}

/// The chain of convex subgroups `0 = j_0 < j_1 < ... < j_n <= k` used to
/// index truncation levels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TowerProfile {
    k: usize,
    j: Vec<usize>,
}

impl TowerProfile {
    /// Only the full tower of `Q^(k)` (`n = k`, `j_i = i`) is supported.
    pub fn new(k: usize, j: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::UnsupportedProfile("k must be positive".into()));
        }
        let full: Vec<usize> = (0..=k).collect();
        if j != full {
            return Err(Error::UnsupportedProfile(format!(
                "expected j = {full:?} for Q^({k}), got {j:?}"
            )));
        }
        Ok(Self { k, j })
    }

    pub fn full(k: usize) -> Self {
        Self { k, j: (0..=k).collect() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of levels above the base, i.e. the rank of the value group.
    pub fn rank(&self) -> usize {
        self.j.len() - 1
    }

    pub fn j(&self, i: usize) -> Result<usize> {
        self.j.get(i).copied().ok_or(Error::IndexOutOfRange { index: i, max: self.rank() })
    }
}

/// The truncation `epsilon_i`: `k - j_i` leading ones followed by `j_i` zeros.
pub fn epsilon<F: Scalar>(profile: &TowerProfile, i: usize) -> Result<Multiplier<F>> {
    let ji = profile.j(i)?;
    let k = profile.k();
    Ok(Multiplier::new((0..k).map(|c| if c < k - ji { F::one() } else { F::zero() }).collect()))
}

/// Applies `epsilon_i` without building the multiplier: zeroes the last `i`
/// coordinates (full tower).
pub fn truncate<F: Scalar>(g: &LexVec<F>, i: usize) -> LexVec<F> {
    let k = g.k();
    let keep = k.saturating_sub(i);
    LexVec::new(
        g.entries().iter().enumerate().map(|(c, e)| if c < keep { e.clone() } else { F::zero() }).collect(),
    )
}

/// Number of leading zero coordinates of `g`.
pub fn arch_level<F: Scalar>(g: &LexVec<F>) -> usize {
    g.arch_level()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type V = LexVec<BigRational>;
    type R = Multiplier<BigRational>;

    fn v(e: &[i64]) -> V {
        LexVec::from_ints(e)
    }

    #[test]
    fn lex_comparisons() {
        assert_eq!(lex_cmp(&v(&[0, 5]), &v(&[1, -100])).unwrap(), Ordering::Less);
        assert_eq!(lex_cmp(&v(&[2, 3]), &v(&[2, 3])).unwrap(), Ordering::Equal);
        assert_eq!(lex_cmp(&v(&[1, -1]), &v(&[1, -2])).unwrap(), Ordering::Greater);
        assert!(matches!(lex_cmp(&v(&[1]), &v(&[1, 2])), Err(Error::DimensionMismatch { .. })));
    }

    /// Sign-pattern oracle: `phi_r` is monotone iff it keeps every vector
    /// `e_p + sum_{q > p} t_q e_q`, `t_q` in {-1, 0, 1}, nonnegative.
    fn sign_pattern_monotone(r: &R) -> bool {
        let k = r.k();
        for p in 0..k {
            let tail = k - p - 1;
            for code in 0..3usize.pow(tail as u32) {
                let mut s = vec![0i64; k];
                s[p] = 1;
                let mut c = code;
                for q in p + 1..k {
                    s[q] = (c % 3) as i64 - 1;
                    c /= 3;
                }
                if !apply_multiplier(r, &v(&s)).unwrap().is_nonnegative() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn monotone_examples() {
        assert!(is_monotone_multiplier(&R::from_ints(&[1, 1])).is_monotone());
        assert_eq!(
            is_monotone_multiplier(&R::from_ints(&[1, -5])),
            Monotonicity::NotMonotone { witness: v(&[0, 1]) }
        );
        assert!(!sign_pattern_monotone(&R::from_ints(&[1, -5])));
        assert!(is_monotone_multiplier(&R::from_ints(&[2, 3, 0])).is_monotone());
        assert!(sign_pattern_monotone(&R::from_ints(&[2, 3, 0])));
        assert_eq!(
            is_monotone_multiplier(&R::from_ints(&[1, 0, 1])),
            Monotonicity::NotMonotone { witness: v(&[0, 1, -1]) }
        );
        assert!(!sign_pattern_monotone(&R::from_ints(&[1, 0, 1])));
        assert!(is_monotone_multiplier(&R::from_ints(&[0, 0])).is_monotone());
    }

    #[test]
    fn multiplier_application() {
        let id = R::from_ints(&[1, 1]);
        assert_eq!(apply_multiplier(&id, &v(&[3, -7])).unwrap(), v(&[3, -7]));
        assert_eq!(apply_multiplier(&R::from_ints(&[1, 0]), &v(&[3, 7])).unwrap(), v(&[3, 0]));
        assert_eq!(apply_multiplier(&R::from_ints(&[2, 5]), &v(&[1, -1])).unwrap(), v(&[2, -5]));
        assert!(apply_multiplier(&id, &v(&[1])).is_err());
    }

    #[test]
    fn epsilon_levels() {
        let p2 = TowerProfile::full(2);
        let p3 = TowerProfile::full(3);
        assert_eq!(epsilon::<BigRational>(&p2, 1).unwrap(), R::from_ints(&[1, 0]));
        assert_eq!(epsilon::<BigRational>(&p3, 0).unwrap(), R::from_ints(&[1, 1, 1]));
        assert_eq!(epsilon::<BigRational>(&p2, 2).unwrap(), R::from_ints(&[0, 0]));
        assert!(matches!(epsilon::<BigRational>(&p2, 3), Err(Error::IndexOutOfRange { .. })));
        assert!(TowerProfile::new(2, vec![0, 2]).is_err());
        assert!(TowerProfile::new(2, vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn arch_levels() {
        assert_eq!(arch_level(&v(&[5, 0])), 0);
        assert_eq!(arch_level(&v(&[0, 0])), 2);
        let g = v(&[0, 0, 3, -1]);
        // oracle: smallest trailing subgroup Q^(t) containing g, level = k - t
        let t = (0..=4).find(|&t| g.entries()[..4 - t].iter().all(|e| e == &BigRational::from_i64(0))).unwrap();
        assert_eq!(arch_level(&g), 4 - t);
        assert_eq!(arch_level(&g), 2);
    }

    fn lexvec(k: usize) -> impl Strategy<Value = V> {
        prop::collection::vec(-4i64..=4, k).prop_map(|e| v(&e))
    }

    fn multiplier(k: usize) -> impl Strategy<Value = R> {
        prop::collection::vec(-2i64..=3, k).prop_map(|e| R::from_ints(&e))
    }

    proptest! {
        #[test]
        fn characterization_matches_oracles(r in multiplier(3), samples in prop::collection::vec(lexvec(3), 40)) {
            let verdict = is_monotone_multiplier(&r);
            prop_assert_eq!(verdict.is_monotone(), sign_pattern_monotone(&r));
            match verdict {
                Monotonicity::Monotone => {
                    for s in samples.iter().filter(|s| s.is_nonnegative()) {
                        prop_assert!(apply_multiplier(&r, s).unwrap().is_nonnegative());
                    }
                }
                Monotonicity::NotMonotone { witness } => {
                    prop_assert!(witness.is_nonnegative());
                    prop_assert!(!apply_multiplier(&r, &witness).unwrap().is_nonnegative());
                }
            }
        }

        #[test]
        fn monotone_multipliers_compose(a in multiplier(3), b in multiplier(3)) {
            if is_monotone_multiplier(&a).is_monotone() && is_monotone_multiplier(&b).is_monotone() {
                prop_assert!(is_monotone_multiplier(&a.compose(&b).unwrap()).is_monotone());
            }
        }

        #[test]
        fn truncations_compose_and_forget(g in lexvec(3), h in lexvec(3), i in 0usize..=3, m in 0usize..=3) {
            let p = TowerProfile::full(3);
            let ei = epsilon::<BigRational>(&p, i).unwrap();
            let em = epsilon::<BigRational>(&p, m).unwrap();
            prop_assert_eq!(ei.compose(&em).unwrap(), epsilon(&p, i.max(m)).unwrap());
            prop_assert_eq!(apply_multiplier(&ei, &g).unwrap(), truncate(&g, i));
            // agreement on the first k - i coordinates forces equal images
            let mixed = LexVec::new(
                (0..3).map(|c| if c < 3 - i { g.entries()[c].clone() } else { h.entries()[c].clone() }).collect(),
            );
            prop_assert_eq!(apply_multiplier(&ei, &g).unwrap(), apply_multiplier(&ei, &mixed).unwrap());
            prop_assert_eq!(apply_multiplier(&ei, &g).unwrap().is_zero(), arch_level(&g) >= 3 - i);
        }

        #[test]
        fn truncation_positive_dominates_subgroup(g in lexvec(3), d in lexvec(3), i in 0usize..=3) {
            // positive image under epsilon_i means g exceeds everything in the killed subgroup
            if truncate(&g, i).is_positive() && arch_level(&d) >= 3 - i {
                prop_assert!(g > d);
            }
        }

        #[test]
        fn order_compatible_arithmetic(a in lexvec(2), b in lexvec(2), c in lexvec(2), q in 1i64..5) {
            if a >= b {
                prop_assert!(&a + &c >= &b + &c);
            }
            if a.is_nonnegative() {
                prop_assert!(a.scale(&BigRational::from_i64(q)).is_nonnegative());
            }
        }
    }
}
