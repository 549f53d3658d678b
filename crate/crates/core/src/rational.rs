//! Exact rational numbers.
//!
//! Curvatures, dimensions and symmetric indices are all rationals with small
//! denominators. `i128` components leave ample headroom for sums over every
//! vertex of the graphs this crate handles.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num as i128, den as i128)
}

/// Lossless `p/q` rendering, also for integers (`3/1`).
pub fn to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i128 = p.trim().parse().map_err(|_| bad())?;
            let q: i128 = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Sum of rationals, exact.
pub fn sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |acc, v| acc + v)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_and_parses() {
        assert_eq!(to_string(&frac(2, 12)), "1/6");
        assert_eq!(to_string(&int(-3)), "-3/1");
        assert_eq!(parse("1/6").unwrap(), frac(1, 6));
        assert_eq!(parse(" -4 ").unwrap(), int(-4));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
