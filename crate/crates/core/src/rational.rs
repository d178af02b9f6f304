//! Exact fractions and the integer scale shared by every rule.

use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// Renders `p/q`, always with the denominator (`2/1`, `-1/1`).
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the `p/q` form written by [`fraction_string`]; a bare integer is also accepted.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i128 = p.trim().parse().ok()?;
            let q: i128 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse().ok().map(Rational::from_integer),
    }
}

/// 1 + 1/2 + ... + 1/t.
pub fn harmonic(t: usize) -> Rational {
    (1..=t as i128).fold(Rational::zero(), |acc, i| acc + Rational::new(1, i))
}

/// lcm(1, ..., m), the common denominator of every per-vote score over `m` candidates.
///
/// `None` when it does not fit in an `i128` (m above 88).
pub fn scale_factor(m: usize) -> Option<i128> {
    let mut acc: i128 = 1;
    for i in 2..=m as i128 {
        let g = acc.gcd(&i);
        acc = (acc / g).checked_mul(i)?;
    }
    Some(acc)
}

/// Multiplies `r` by `scale`, requiring an integral result.
pub fn scaled_integer(r: &Rational, scale: i128) -> Option<i128> {
    let x = r * Rational::from_integer(scale);
    if x.denom().is_one() {
        Some(*x.numer())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = frac(6, -4);
        assert_eq!(*r.numer(), -3);
        assert_eq!(*r.denom(), 2);
        assert_eq!(fraction_string(&int(2)), "2/1");
    }

    #[test]
    fn fraction_round_trip() {
        for r in [frac(7, 2), int(-1), frac(0, 5), frac(-22, 6)] {
            assert_eq!(parse_fraction(&fraction_string(&r)), Some(r));
        }
        assert_eq!(parse_fraction("1/0"), None);
        assert_eq!(parse_fraction("abc"), None);
    }

    #[test]
    fn scale_values() {
        assert_eq!(scale_factor(1), Some(1));
        assert_eq!(scale_factor(3), Some(6));
        assert_eq!(scale_factor(4), Some(12));
        assert_eq!(scale_factor(8), Some(840));
        assert!(scale_factor(88).is_some());
        assert!(scale_factor(89).is_none());
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(2), frac(3, 2));
        assert_eq!(harmonic(3), frac(11, 6));
        // every harmonic number up to m is a multiple of 1/lcm(1..m)
        for m in 1..=12 {
            let s = scale_factor(m).unwrap();
            assert!(scaled_integer(&harmonic(m), s).is_some());
        }
    }
}
