//! JSON input and output documents.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebraic::{equals_one, AlgebraicNumber, Classification};
use crate::arith::IntPolynomial;
use crate::eigen::RationalMatrix;
use crate::engine::{BasisResult, BoundStrategy};
use crate::error::{Error, Result};
use crate::isolate::Rectangle;
use crate::linear::ExponentVector;
use crate::parse_rational;

pub const FORMAT_VERSION: u32 = 1;

/// One input number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumberSpec {
    Rational { rational: String },
    Isolated { minpoly: Vec<Value>, rect: [String; 4] },
    RootOf { root_of: Vec<Value>, index: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundMode {
    #[default]
    Certified,
    Heuristic,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verbosity {
    Quiet,
    #[default]
    Normal,
    Verbose,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Options {
    pub bound_mode: BoundMode,
    pub max_box: u64,
    pub verbosity: Verbosity,
}

impl Default for Options {
    fn default() -> Self {
        Options { bound_mode: BoundMode::Certified, max_box: 64, verbosity: Verbosity::Normal }
    }
}

impl Options {
    pub fn strategy(&self) -> BoundStrategy {
        match self.bound_mode {
            BoundMode::Certified => BoundStrategy::Certified { max_box: self.max_box },
            BoundMode::Heuristic => BoundStrategy::Heuristic { max_box: self.max_box },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputSpec {
    #[serde(default = "default_format")]
    pub format: u32,
    pub numbers: Vec<NumberSpec>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixSpec {
    #[serde(default = "default_format")]
    pub format: u32,
    pub matrix: Vec<Vec<Value>>,
    #[serde(default)]
    pub options: Options,
}

fn default_format() -> u32 {
    FORMAT_VERSION
}

fn check_format(f: u32) -> Result<()> {
    if f != FORMAT_VERSION {
        return Err(Error::InvalidInput(format!("unsupported format {} (expected {})", f, FORMAT_VERSION)));
    }
    Ok(())
}

fn integer_value(v: &Value) -> std::result::Result<BigInt, String> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer literal")),
        Value::String(s) => s.trim().parse().map_err(|_| format!("not an integer: {:?}", s)),
        other => Err(format!("not an integer: {}", other)),
    }
}

fn rational_value(v: &Value) -> std::result::Result<BigRational, String> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(format!("not a rational: {}", other)),
    }
}

fn polynomial(cs: &[Value]) -> std::result::Result<IntPolynomial, String> {
    let c: Vec<BigInt> = cs.iter().map(integer_value).collect::<std::result::Result<_, _>>()?;
    let p = IntPolynomial::new(c);
    if p.degree() == 0 {
        return Err("polynomial must have positive degree".into());
    }
    Ok(p)
}

impl NumberSpec {
    pub fn to_number(&self) -> Result<AlgebraicNumber> {
        match self {
            NumberSpec::Rational { rational } => {
                let r = parse_rational(rational).map_err(Error::InvalidInput)?;
                if r.is_zero() {
                    return Err(Error::InvalidInput("zero is not allowed".into()));
                }
                Ok(AlgebraicNumber::from_rational(&r))
            }
            NumberSpec::Isolated { minpoly, rect } => {
                let p = polynomial(minpoly).map_err(Error::InvalidInput)?;
                let b: Vec<BigRational> = rect
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<std::result::Result<_, _>>()
                    .map_err(Error::InvalidInput)?;
                let r = Rectangle::new(b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone())?;
                AlgebraicNumber::new(p, r)
            }
            NumberSpec::RootOf { root_of, index } => {
                let p = polynomial(root_of).map_err(Error::InvalidInput)?;
                if *index == 0 {
                    return Err(Error::InvalidInput("root index is 1-based".into()));
                }
                AlgebraicNumber::from_poly_root(&p, index - 1)
            }
        }
    }
}

impl InputSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: InputSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed input: {}", e)))?;
        check_format(spec.format)?;
        Ok(spec)
    }

    /// The numbers, with the 1-based index of the first bad entry in any error.
    pub fn numbers(&self) -> Result<Vec<AlgebraicNumber>> {
        self.numbers
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.to_number().map_err(|e| match e {
                    Error::InvalidInput(m) => Error::InvalidInput(format!("entry {}: {}", i + 1, m)),
                    Error::BadRectangle(m) => Error::BadRectangle(format!("entry {}: {}", i + 1, m)),
                    Error::Reducible(f) => {
                        Error::Reducible(std::iter::once(format!("entry {}", i + 1)).chain(f).collect())
                    }
                    other => other,
                })
            })
            .collect()
    }
}

impl MatrixSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: MatrixSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed matrix: {}", e)))?;
        check_format(spec.format)?;
        Ok(spec)
    }

    pub fn matrix(&self) -> Result<RationalMatrix> {
        self.matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, v)| {
                        rational_value(v)
                            .map_err(|m| Error::InvalidInput(format!("entry ({}, {}): {}", i + 1, j + 1, m)))
                    })
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Complete,
    Inconclusive,
}

/// Position `k` of every output vector refers to this number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumberReport {
    pub minpoly: Vec<String>,
    pub rect: Rectangle,
    pub approx: [f64; 2],
}

impl NumberReport {
    pub fn new(x: &AlgebraicNumber) -> Self {
        let r = x.enclosure(53);
        let f = r.to_f64();
        NumberReport {
            minpoly: x.minpoly().coeffs().iter().map(|c| c.to_string()).collect(),
            rect: x.rect().clone(),
            approx: [(f[0] + f[1]) / 2.0, (f[2] + f[3]) / 2.0],
        }
    }

    pub fn to_number(&self) -> Result<AlgebraicNumber> {
        let c: Vec<BigInt> = self
            .minpoly
            .iter()
            .map(|s| s.parse().map_err(|_| Error::InvalidInput(format!("bad coefficient {:?}", s))))
            .collect::<Result<_>>()?;
        AlgebraicNumber::new(IntPolynomial::new(c), self.rect.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultReport {
    pub format: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
    pub numbers: Vec<NumberReport>,
    pub basis: Vec<ExponentVector>,
    pub basis_hnf: Vec<ExponentVector>,
    /// 1-based.
    pub independent_indices: Vec<usize>,
    pub classifications: Vec<Classification>,
    pub box_searches: usize,
    pub certificates: usize,
}

impl ResultReport {
    pub fn complete(xs: &[AlgebraicNumber], r: &BasisResult) -> Self {
        ResultReport {
            format: FORMAT_VERSION,
            status: Status::Complete,
            message: None,
            numbers: xs.iter().map(NumberReport::new).collect(),
            basis: r.basis.vectors.clone(),
            basis_hnf: r.basis.canonical_hnf.clone(),
            independent_indices: r.independent.iter().map(|i| i + 1).collect(),
            classifications: r.classifications.clone(),
            box_searches: r.stats.box_searches,
            certificates: r.stats.certificates,
        }
    }

    pub fn inconclusive(xs: &[AlgebraicNumber], message: String) -> Self {
        ResultReport {
            format: FORMAT_VERSION,
            status: Status::Inconclusive,
            message: Some(message),
            numbers: xs.iter().map(NumberReport::new).collect(),
            basis: Vec::new(),
            basis_hnf: Vec::new(),
            independent_indices: Vec::new(),
            classifications: xs.iter().map(|x| crate::algebraic::classify(x.minpoly())).collect(),
            box_searches: 0,
            certificates: 0,
        }
    }

    /// Runs the basis computation; an exhausted dependence search becomes an
    /// `Inconclusive` report rather than an error.
    pub fn compute(xs: &[AlgebraicNumber], strategy: BoundStrategy) -> Result<Self> {
        match crate::engine::get_basis(xs, strategy) {
            Ok(r) => Ok(Self::complete(xs, &r)),
            Err(Error::Inconclusive(m)) => Ok(Self::inconclusive(xs, m)),
            Err(e) => Err(e),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: ResultReport =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed report: {}", e)))?;
        check_format(r.format)?;
        Ok(r)
    }

    /// Re-checks every basis vector exactly against the listed numbers and
    /// the rank identity.
    pub fn verify(&self) -> Result<()> {
        if self.status != Status::Complete {
            return Ok(());
        }
        let xs: Vec<AlgebraicNumber> = self.numbers.iter().map(|n| n.to_number()).collect::<Result<_>>()?;
        let n = xs.len();
        if self.basis.len() + self.independent_indices.len() != n {
            return Err(Error::VerificationFailed("rank identity violated".into()));
        }
        for v in self.basis.iter().chain(&self.basis_hnf) {
            if v.len() != n || !equals_one(&xs, v) {
                return Err(Error::VerificationFailed(format!("{} is not a relation", v)));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::get_basis;

    #[test]
    fn parse_all_entry_kinds() {
        let text = r#"{"format": 1, "numbers": [
            {"rational": "21/4"},
            {"minpoly": [1, 0, 1], "rect": ["-1/2", "1/2", "1/2", "3/2"]},
            {"root_of": ["-2", 0, 1], "index": 2}
        ], "options": {"bound_mode": "heuristic", "max_box": 8}}"#;
        let spec = InputSpec::from_json(text).unwrap();
        assert_eq!(spec.options.strategy(), BoundStrategy::Heuristic { max_box: 8 });
        let xs = spec.numbers().unwrap();
        assert_eq!(xs.len(), 3);
        assert_eq!(xs[1].minpoly(), &IntPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(xs[2].minpoly(), &IntPolynomial::from_i64s(&[-2, 0, 1]));
    }

    #[test]
    fn diagnostics_name_the_entry() {
        let text = r#"{"numbers": [{"rational": "1"}, {"minpoly": [-4, 0, 1], "rect": ["1", "3", "-1", "1"]}]}"#;
        let err = InputSpec::from_json(text).unwrap().numbers().unwrap_err();
        match err {
            Error::Reducible(f) => {
                assert_eq!(f[0], "entry 2");
                assert_eq!(f.len(), 3);
            }
            other => panic!("unexpected {:?}", other),
        }
        let text = r#"{"numbers": [{"rational": "0"}]}"#;
        let err = InputSpec::from_json(text).unwrap().numbers().unwrap_err();
        assert!(err.to_string().contains("entry 1"));
        assert!(InputSpec::from_json(r#"{"format": 2, "numbers": []}"#).is_err());
        assert!(InputSpec::from_json(r#"{"numbers": [{"bogus": 1}]}"#).is_err());
    }

    #[test]
    fn report_round_trip() {
        let text =
            r#"{"numbers": [{"minpoly": [1, 0, 1], "rect": ["-1/2", "1/2", "1/2", "3/2"]}, {"rational": "-1"}]}"#;
        let xs = InputSpec::from_json(text).unwrap().numbers().unwrap();
        let r = get_basis(&xs, BoundStrategy::default()).unwrap();
        let rep = ResultReport::complete(&xs, &r);
        let json = serde_json::to_string_pretty(&rep).unwrap();
        let back = ResultReport::from_json(&json).unwrap();
        assert_eq!(back, rep);
        back.verify().unwrap();
        let mut bad = back.clone();
        bad.basis[0] = ExponentVector::from_i64s(&[1, 0]);
        assert!(bad.verify().is_err());
    }

    #[test]
    fn matrix_entries() {
        let m = MatrixSpec::from_json(r#"{"matrix": [["1/2", 0], [0, "3"]]}"#).unwrap().matrix().unwrap();
        assert_eq!(m[0][0], crate::isolate::rect::q(1, 2));
        assert!(MatrixSpec::from_json(r#"{"matrix": [[1.5]]}"#).unwrap().matrix().is_err());
    }
}
