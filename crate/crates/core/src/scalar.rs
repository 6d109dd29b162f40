//! The coefficient field all geometry is computed over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

/// An exact ordered field of rationals.
///
/// Everything in this crate is generic over `Scalar` so that small
/// experiments can run on machine-sized rationals while the default
/// entry points use arbitrary precision ([`crate::Q`]).
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Signed + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    fn from_frac(numer: i64, denom: i64) -> Self;

    /// Canonical `p/q` rendering: gcd-reduced with `q > 0`, always with a slash.
    fn to_ratio_string(&self) -> String;

    /// Parses `p/q` or a bare integer `p`.
    fn parse_ratio(s: &str) -> Option<Self>;

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Hash + Debug + Display + FromStr + From<i64> + Send + Sync + 'static,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(I::from(v))
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Ratio::new(I::from(numer), I::from(denom))
    }

    fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_ratio(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p = I::from_str(p.trim()).ok()?;
                let q = I::from_str(q.trim()).ok()?;
                if q.is_zero() {
                    return None;
                }
                Some(Ratio::new(p, q))
            }
            None => I::from_str(s).ok().map(|p| Ratio::new(p, I::one())),
        }
    }
}

/// Product of an integer lattice coordinate with a scalar.
pub(crate) fn scale_int<F: Scalar>(c: i64, x: &F) -> F {
    match c {
        0 => F::zero(),
        1 => x.clone(),
        -1 => -x.clone(),
        _ => F::from_i64(c) * x.clone(),
    }
}
