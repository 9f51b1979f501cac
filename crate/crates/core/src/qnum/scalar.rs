use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational scalar.  Always in canonical reduced form (the
/// `num-rational` constructors reduce and keep the denominator positive).
pub type Scalar = BigRational;

/// Integer scalar.
pub fn sc(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d` as a scalar.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"a/b"` or `"a"` into a scalar.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let t = s.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Scalar::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().ok()?;
            Some(Scalar::from_integer(n))
        }
    }
}

/// Render as `"a/b"` with the denominator always present and positive.
pub fn scalar_str(x: &Scalar) -> String {
    debug_assert!(x.denom().is_positive());
    format!("{}/{}", x.numer(), x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_handles_negative_exponents() {
        use super::super::field::pow_i;
        let x = frac(2, 3);
        assert_eq!(pow_i(&x, 3), frac(8, 27));
        assert_eq!(pow_i(&x, -2), frac(9, 4));
        assert_eq!(pow_i(&x, 0), sc(1));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/4", "-11/7", "5/1", "0/1"] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(scalar_str(&v), s.replace("5/1", "5/1"));
        }
        assert_eq!(parse_scalar("7"), Some(sc(7)));
        assert_eq!(parse_scalar("2/0"), None);
        assert_eq!(parse_scalar("x"), None);
    }
}
