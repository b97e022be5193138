//! Helpers around `BigRational`.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-1/2"` or `"2/6"` (reduced on construction).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || invalid(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(invalid(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(a, b))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_rational)
        .collect()
}

/// Always `num/den`, also for integers.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Serializes a rational as a `"num/den"` string.
pub fn serialize_str<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn serialize_str_vec<S: serde::Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(format_rational))
}

pub fn serialize_str_opt<S: serde::Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&format_rational(q)),
        None => s.serialize_none(),
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // scale down huge operands before dividing
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
            let a = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let b = (q.denom() >> shift).to_f64().unwrap_or(f64::INFINITY);
            a / b
        }
    }
}

/// `x^e` for a possibly negative exponent; `0^0 = 1`.
pub fn pow(x: &Rational, e: i64) -> Result<Rational> {
    if e >= 0 {
        Ok(num::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        Err(crate::error::Error::Singular("zero raised to a negative power".into()))
    } else {
        Ok(num::pow(x.recip(), (-e) as usize))
    }
}

/// Laurent monomial `x^e = ∏ x_i^{e_i}`.
pub fn monomial(x: &[Rational], e: &[i64]) -> Result<Rational> {
    debug_assert_eq!(x.len(), e.len());
    let mut acc = Rational::one();
    for (xi, &ei) in x.iter().zip(e) {
        if ei != 0 {
            acc *= pow(xi, ei)?;
        }
    }
    Ok(acc)
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Floor of `q + 1/2`.
pub fn round_half_up(q: &Rational) -> BigInt {
    (q + ratio(1, 2)).floor().to_integer()
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Solves `A x = b` for a matrix of full column rank (any number of rows).
/// Returns `None` when the columns are dependent or the system is inconsistent.
pub fn solve_full_rank(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut pr = 0;
    for c in 0..cols {
        let p = (pr..rows).find(|&r| !m[r][c].is_zero())?;
        m.swap(p, pr);
        let piv = m[pr][c].clone();
        for x in &mut m[pr][c..] {
            *x = &*x / &piv;
        }
        let prow = m[pr].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pr && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&prow[c..]) {
                    *x -= &f * y;
                }
            }
        }
        pr += 1;
    }
    if m[pr..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/6").unwrap(), ratio(1, 3));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        assert_eq!(format_rational(&int(2)), "2/1");
        assert_eq!(format_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(parse_rational_list("1/2,1/3,1/6").unwrap().len(), 3);
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&ratio(2, 3), -2).unwrap(), ratio(9, 4));
        assert_eq!(pow(&int(0), 0).unwrap(), int(1));
        assert!(pow(&int(0), -1).is_err());
        assert_eq!(monomial(&[ratio(1, 2), ratio(1, 3)], &[2, -1]).unwrap(), ratio(3, 4));
    }

    #[test]
    fn float_conversion_of_huge_values() {
        let big = pow(&int(3), 800).unwrap() / pow(&int(3), 799).unwrap();
        assert_eq!(to_f64(&big), 3.0);
        let q = Rational::new(num::pow(BigInt::from(10), 400), num::pow(BigInt::from(10), 400) * 4);
        assert!((to_f64(&q) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn linear_algebra() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(determinant(a.clone()), int(5));
        assert_eq!(determinant(vec![vec![int(0), int(1)], vec![int(1), int(0)]]), int(-1));
        assert_eq!(determinant(vec![vec![int(1), int(2)], vec![int(2), int(4)]]), int(0));
        let x = solve_full_rank(&a, &[int(3), int(4)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        let tall = vec![vec![int(1)], vec![int(2)]];
        assert_eq!(solve_full_rank(&tall, &[int(1), int(2)]).unwrap(), vec![int(1)]);
        assert!(solve_full_rank(&tall, &[int(1), int(3)]).is_none());
        assert!(solve_full_rank(&[vec![int(1), int(1)]], &[int(1)]).is_none());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_half_up(&ratio(5, 2)), BigInt::from(3));
        assert_eq!(round_half_up(&ratio(7, 3)), BigInt::from(2));
    }
}
