//! Mode indices. Concrete indices are half-integers; symbolic indices are
//! polynomials in index symbols tagged with their class (ℤ or ½+ℤ).
//!
//! Symbolic equality tests follow generic position: two symbolic indices are
//! equal only when their polynomials coincide.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::{parse_scalar, ExactError, ExactScalar, MultiPoly};

/// A value in ½ℤ stored as twice itself.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };

    pub const fn from_doubled(doubled: i64) -> HalfInt {
        HalfInt { doubled }
    }

    pub const fn int(n: i64) -> HalfInt {
        HalfInt { doubled: 2 * n }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn class(self) -> IndexClass {
        if self.is_integer() {
            IndexClass::Integer
        } else {
            IndexClass::HalfOdd
        }
    }

    pub fn to_scalar(self) -> ExactScalar {
        ExactScalar::new(BigInt::from(self.doubled), BigInt::from(2))
    }

    pub fn parse(s: &str) -> Result<HalfInt, ExactError> {
        let q = parse_scalar(s)?;
        let d = q * ExactScalar::from_integer(2.into());
        if !d.is_integer() {
            return Err(ExactError::Parse(format!("{s:?} is not in ½ℤ")));
        }
        let doubled = i64::try_from(d.to_integer()).map_err(|_| ExactError::Parse(format!("{s:?} out of range")))?;
        Ok(HalfInt { doubled })
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + o.doubled }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - o.doubled }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

/// Whether an index lies in ℤ or in ½+ℤ.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum IndexClass {
    Integer,
    HalfOdd,
}

impl IndexClass {
    pub fn plus(self, o: IndexClass) -> IndexClass {
        if self == o {
            IndexClass::Integer
        } else {
            IndexClass::HalfOdd
        }
    }
}

/// Common interface of concrete and symbolic indices.
pub trait Index: Clone + Ord + fmt::Display + fmt::Debug + Send + Sync {
    fn class(&self) -> IndexClass;
    fn value(&self) -> MultiPoly;
    fn plus(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn constant(h: HalfInt) -> Self;
    /// True when the index is (identically) the constant `h`.
    fn is(&self, h: HalfInt) -> bool;

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    fn is_integer(&self) -> bool {
        self.class() == IndexClass::Integer
    }

    /// Canonical text used inside generated unknown names.
    fn key(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

impl Index for HalfInt {
    fn class(&self) -> IndexClass {
        HalfInt::class(*self)
    }
    fn value(&self) -> MultiPoly {
        MultiPoly::constant(self.to_scalar())
    }
    fn plus(&self, o: &Self) -> Self {
        *self + *o
    }
    fn negated(&self) -> Self {
        -*self
    }
    fn constant(h: HalfInt) -> Self {
        h
    }
    fn is(&self, h: HalfInt) -> bool {
        *self == h
    }
}

/// A symbolic index: a polynomial value together with its class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymIndex {
    value: MultiPoly,
    class: IndexClass,
}

impl SymIndex {
    /// A bare index symbol such as `k` ranging over the given class.
    pub fn symbol(name: &str, class: IndexClass) -> SymIndex {
        SymIndex { value: MultiPoly::var(name), class }
    }

    pub fn new(value: MultiPoly, class: IndexClass) -> SymIndex {
        SymIndex { value, class }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.value
    }

    /// Multiplies the value by an integer, adjusting the class.
    pub fn times(&self, c: i64) -> SymIndex {
        let class = if c % 2 == 0 { IndexClass::Integer } else { self.class };
        SymIndex { value: self.value.scale(&ExactScalar::from_integer(c.into())), class }
    }
}

impl fmt::Display for SymIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for SymIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.class {
            IndexClass::Integer => "Z",
            IndexClass::HalfOdd => "Z+1/2",
        };
        write!(f, "{}∈{}", self.value, tag)
    }
}

impl Index for SymIndex {
    fn class(&self) -> IndexClass {
        self.class
    }
    fn value(&self) -> MultiPoly {
        self.value.clone()
    }
    fn plus(&self, o: &Self) -> Self {
        SymIndex { value: &self.value + &o.value, class: self.class.plus(o.class) }
    }
    fn negated(&self) -> Self {
        SymIndex { value: -&self.value, class: self.class }
    }
    fn constant(h: HalfInt) -> Self {
        SymIndex { value: MultiPoly::constant(h.to_scalar()), class: h.class() }
    }
    fn is(&self, h: HalfInt) -> bool {
        self.value == MultiPoly::constant(h.to_scalar())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_int_text() {
        assert_eq!(HalfInt::from_doubled(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::parse("-3/2").unwrap(), HalfInt::from_doubled(-3));
        assert!(HalfInt::parse("1/3").is_err());
    }

    #[test]
    fn symbolic_class_arithmetic() {
        let k = SymIndex::symbol("k", IndexClass::HalfOdd);
        let r = SymIndex::symbol("r", IndexClass::HalfOdd);
        assert_eq!(k.plus(&r).class(), IndexClass::Integer);
        assert!(k.minus(&k).is(HalfInt::ZERO));
        assert!(!k.is(HalfInt::ZERO));
    }
}
