use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::{ExactError, ExactScalar, MultiPoly, Var};

/// Quotient of two polynomials. The denominator is kept monic; when it
/// divides the numerator exactly the quotient is stored with denominator one.
#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RatFunc, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFunc::reduced(num, den))
    }

    pub fn poly(p: MultiPoly) -> RatFunc {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn zero() -> RatFunc {
        RatFunc::poly(MultiPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::poly(MultiPoly::one())
    }

    pub fn int(n: i64) -> RatFunc {
        RatFunc::poly(MultiPoly::int(n))
    }

    fn reduced(num: MultiPoly, den: MultiPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = den.as_constant() {
            return RatFunc::poly(num.scale(&c.recip()));
        }
        if let Ok(q) = num.exact_divide(&den) {
            return RatFunc::poly(q);
        }
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap_or_else(ExactScalar::one);
        let inv = lc.recip();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.as_constant().is_some() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> RatFunc {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn times(&self, n: i64) -> RatFunc {
        self.scale(&ExactScalar::from_integer(n.into()))
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RatFunc {
        if self.den.as_constant().is_some() {
            return RatFunc::poly(&self.num * p);
        }
        RatFunc::reduced(&self.num * p, self.den.clone())
    }

    pub fn div_poly(&self, p: &MultiPoly) -> Result<RatFunc, ExactError> {
        if p.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(c) = p.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        if self.den.as_constant().is_some() {
            if let Ok(q) = self.num.exact_divide(p) {
                return Ok(RatFunc::poly(q));
            }
        }
        Ok(RatFunc::reduced(self.num.clone(), &self.den * p))
    }

    pub fn recip(&self) -> Result<RatFunc, ExactError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn substitute_all(&self, subs: &[(Var, MultiPoly)]) -> Result<RatFunc, ExactError> {
        RatFunc::new(self.num.substitute_all(subs), self.den.substitute_all(subs))
    }

    pub fn eval(&self, values: &[(Var, ExactScalar)]) -> Result<ExactScalar, ExactError> {
        let n = self.num.eval(values).ok_or_else(|| ExactError::Parse("unassigned variable".into()))?;
        let d = self.den.eval(values).ok_or_else(|| ExactError::Parse("unassigned variable".into()))?;
        if d == ExactScalar::from_integer(0.into()) {
            return Err(ExactError::DivisionByZero);
        }
        Ok(n / d)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &RatFunc) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl MultiPoly {
    fn is_one_poly(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduced(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one_poly() {
            return RatFunc::reduced(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one_poly() {
            return RatFunc::reduced(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        RatFunc::reduced(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one_poly() && rhs.den.is_one_poly() {
            return RatFunc::poly(&self.num * &rhs.num);
        }
        RatFunc::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> RatFunc {
        RatFunc::poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn cancels_exact_quotients() {
        let f = RatFunc::new(p("r^2 - r"), p("r")).unwrap();
        assert_eq!(f.as_poly(), Some(&p("r - 1")));
    }

    #[test]
    fn sums_over_common_denominators() {
        let x = RatFunc::new(p("1"), p("a - k")).unwrap();
        let y = RatFunc::new(p("-1"), p("a - k")).unwrap();
        assert!((&x + &y).is_zero());
        let z = RatFunc::new(p("2"), p("2*a - 2*k")).unwrap();
        assert_eq!(x, z);
    }
}
