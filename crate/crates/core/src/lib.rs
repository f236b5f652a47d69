pub mod algebraic;
pub mod arith;
pub mod eigen;
pub mod engine;
pub mod error;
pub mod isolate;
pub mod linear;
pub mod rational_relations;
pub mod report;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Parses `"p/q"`, `"p"` or a decimal such as `"-1.25"`.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("malformed rational {:?}", s);
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(format!("zero denominator in {:?}", s));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((i, f)) = s.split_once('.') {
        let neg = i.starts_with('-');
        let digits = format!("{}{}", i.trim_start_matches(['-', '+']), f);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), f.len());
        let v = BigRational::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}
