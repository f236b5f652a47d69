use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer exponent vector over input positions `0..n`; positions outside
/// the support are zero.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ExponentVector(pub Vec<BigInt>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![BigInt::zero(); n])
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        ExponentVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `k * e_j` in dimension `n`.
    pub fn unit(n: usize, j: usize, k: BigInt) -> Self {
        let mut v = Self::zeros(n);
        v.0[j] = k;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// Index of the last nonzero entry.
    pub fn tail(&self) -> Option<usize> {
        self.0.iter().rposition(|x| !x.is_zero())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        ExponentVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Exact division of every entry.
    pub fn div_exact(&self, k: &BigInt) -> Self {
        ExponentVector(
            self.0
                .iter()
                .map(|x| {
                    debug_assert!((x % k).is_zero());
                    x / k
                })
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.len(), o.len());
        ExponentVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.len(), o.len());
        ExponentVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn padded(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        v.resize(n, BigInt::zero());
        ExponentVector(v)
    }

    /// Entries placed at the given positions of a length-`n` vector.
    pub fn scatter(values: &[BigInt], positions: &[usize], n: usize) -> Self {
        let mut v = Self::zeros(n);
        for (x, &i) in values.iter().zip(positions) {
            v.0[i] = x.clone();
        }
        v
    }

    pub fn max_abs(&self) -> BigInt {
        self.0.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

impl Index<usize> for ExponentVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl IndexMut<usize> for ExponentVector {
    fn index_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.0[i]
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Entries that fit in `i64` are written as JSON numbers, larger ones as strings.
impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            match x.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Num(i64),
            Str(String),
        }
        let v: Vec<Entry> = Vec::deserialize(d)?;
        v.into_iter()
            .map(|e| match e {
                Entry::Num(n) => Ok(BigInt::from(n)),
                Entry::Str(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ExponentVector)
    }
}
