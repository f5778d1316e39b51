//! Rational scalar helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn floor_i64(r: &Rat) -> i64 {
    r.floor().to_integer().to_i64().expect("floor fits in i64")
}

pub fn ceil_i64(r: &Rat) -> i64 {
    r.ceil().to_integer().to_i64().expect("ceil fits in i64")
}

pub fn is_integral(r: &Rat) -> bool {
    r.is_integer()
}

/// Denominator of `r` as an i64 (always positive).
pub fn den_i64(r: &Rat) -> i64 {
    r.denom().to_i64().expect("denominator fits in i64")
}

pub fn lcm_dens<'a, I: IntoIterator<Item = &'a Rat>>(it: I) -> i64 {
    it.into_iter().fold(1i64, |acc, r| acc.lcm(&den_i64(r)))
}

/// `⟨a, b⟩` for an integer vector against a rational one.
pub fn dot_iq(a: &[i64], b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if *x != 0 {
            s += y * BigInt::from(*x);
        }
    }
    s
}

pub fn to_rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| int(x)).collect()
}

/// Clears denominators: returns the integer vector `l·v` and the lcm `l`.
pub fn clear_denominators(v: &[Rat]) -> (Vec<i64>, i64) {
    let l = lcm_dens(v);
    let out = v.iter().map(|x| (x * BigInt::from(l)).to_integer().to_i64().expect("fits in i64")).collect();
    (out, l)
}

/// Parses `-?[0-9]+(/[1-9][0-9]*)?`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || d.starts_with('0') || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            d.parse().ok()?
        }
    };
    Some(Rat::new(n, d))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn min_rat<'a, I: IntoIterator<Item = &'a Rat>>(it: I) -> Option<Rat> {
    it.into_iter().min().cloned()
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/6"), Some(frac(1, 2)));
        assert_eq!(parse_rat("-4"), Some(int(-4)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("1/02"), None);
        assert_eq!(parse_rat("+1"), None);
        assert_eq!(parse_rat("1.5"), None);
        assert_eq!(parse_rat("-"), None);
        assert_eq!(fmt_rat(&frac(-6, 4)), "-3/2");
        assert_eq!(fmt_rat(&frac(4, 2)), "2");
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil_i64(&frac(-1, 2)), 0);
        assert_eq!(floor_i64(&frac(-1, 2)), -1);
        assert_eq!(ceil_i64(&frac(5, 3)), 2);
        assert_eq!(lcm_dens(&[frac(1, 2), frac(1, 3), int(4)]), 6);
    }
}
