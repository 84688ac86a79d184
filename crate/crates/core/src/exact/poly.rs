use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::format_scalar;
use super::{ExactError, ExactScalar, Var};

/// A power product of variables, kept sorted by variable with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < *v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == *v {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v.clone(), e - d)),
                }
            } else {
                out.push((v.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    fn without(&self, v: &Var) -> Monomial {
        Monomial(self.0.iter().filter(|(w, _)| w != v).cloned().collect())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order; earlier-ranked variables weigh more.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> MultiPoly {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn int(n: i64) -> MultiPoly {
        MultiPoly::constant(ExactScalar::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> MultiPoly {
        MultiPoly::constant(ExactScalar::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn var(name: &str) -> MultiPoly {
        MultiPoly::from_var(Var::new(name))
    }

    pub fn from_var(v: Var) -> MultiPoly {
        MultiPoly::term(ExactScalar::one(), Monomial::var(v))
    }

    pub fn term(c: ExactScalar, m: Monomial) -> MultiPoly {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Parses an expression such as `"2*b^2 - b*b' + 3/4"`.
    pub fn parse(s: &str) -> Result<MultiPoly, ExactError> {
        super::parse::parse_poly(s)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &ExactScalar)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.terms.keys().any(|m| m.degree_in(v) > 0)
    }

    fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn times(&self, n: i64) -> MultiPoly {
        self.scale(&ExactScalar::from_integer(BigInt::from(n)))
    }

    pub fn mul_term(&self, c: &ExactScalar, mono: &Monomial) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (m.mul(mono), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Coefficient of `v^d`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: &Var, d: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.degree_in(v) == d {
                out.add_term(m.without(v), c.clone());
            }
        }
        out
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: &Var, value: &MultiPoly) -> MultiPoly {
        self.substitute_all(&[(v.clone(), value.clone())])
    }

    /// Simultaneous substitution.
    pub fn substitute_all(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        if subs.is_empty() {
            return self.clone();
        }
        let mut powers: BTreeMap<(usize, u32), MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = Vec::new();
            let mut factor = MultiPoly::one();
            for (v, e) in &m.0 {
                match subs.iter().position(|(w, _)| w == v) {
                    Some(i) => {
                        let pw = powers.entry((i, *e)).or_insert_with(|| subs[i].1.pow(*e));
                        factor = &factor * &*pw;
                    }
                    None => rest.push((v.clone(), *e)),
                }
            }
            out += factor.mul_term(c, &Monomial(rest));
        }
        out
    }

    /// Evaluates fully at rational values. Missing variables are an error.
    pub fn eval(&self, values: &[(Var, ExactScalar)]) -> Option<ExactScalar> {
        let subs: Vec<(Var, MultiPoly)> = values
            .iter()
            .map(|(v, x)| (v.clone(), MultiPoly::constant(x.clone())))
            .collect();
        self.substitute_all(&subs).as_constant()
    }

    /// Exact quotient `self / d`, failing unless the remainder is zero.
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<MultiPoly, ExactError> {
        let (ld_m, ld_c) = d.leading().ok_or(ExactError::DivisionByZero)?;
        let (ld_m, ld_c) = (ld_m.clone(), ld_c.clone());
        if let Some(c) = d.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&ld_m).ok_or(ExactError::NotDivisible)?;
            let qc = c / &ld_c;
            rem -= d.mul_term(&qc, &qm);
            quo.add_term(qm, qc);
        }
        Ok(quo)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.exact_divide(self).is_ok()
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => MultiPoly::zero(),
        }
    }

    /// Scales so that all coefficients are integers with gcd one and a
    /// positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut s = ExactScalar::new(l, g);
        if self.leading().is_some_and(|(_, c)| c.is_negative()) {
            s = -s;
        }
        self.scale(&s)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&format_scalar(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_scalar(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign<MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: MultiPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(self, &rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                $body(self, rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(self.clone(), &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |mut a: MultiPoly, b: &MultiPoly| {
    a += b;
    a
});
forward_binop!(Sub, sub, |mut a: MultiPoly, b: &MultiPoly| {
    a -= b;
    a
});
forward_binop!(Mul, mul, |a: MultiPoly, b: &MultiPoly| &a * b);

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut a = self.clone();
        a += rhs;
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut a = self.clone();
        a -= rhs;
        a
    }
}

impl From<ExactScalar> for MultiPoly {
    fn from(c: ExactScalar) -> MultiPoly {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn collects_like_terms() {
        assert!((p("a") + p("-a")).is_zero());
        assert_eq!(p("2*a*b + 3*a*b"), p("5*a*b"));
    }

    #[test]
    fn divides_difference_of_squares() {
        let q = p("b^2 - b'^2").exact_divide(&p("b - b'")).unwrap();
        assert_eq!(q, p("b + b'"));
        assert_eq!(p("b^2 + 1").exact_divide(&p("b - 1")), Err(ExactError::NotDivisible));
        assert_eq!(p("b").exact_divide(&MultiPoly::zero()), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn substitution_and_eval() {
        let f = p("m^3 - m");
        assert_eq!(f.substitute(&Var::new("m"), &p("2")), p("6"));
        let g = p("a*b + b'");
        let n = |k: i64| ExactScalar::from_integer(k.into());
        let v = g.eval(&[(Var::new("a"), n(2)), (Var::new("b"), n(3)), (Var::new("b'"), n(1))]);
        assert_eq!(v, Some(ExactScalar::from_integer(7.into())));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(p("1 + b - 2*b^2").to_string(), "-2*b^2 + b + 1");
        assert_eq!(p("b' * b + 1/2").to_string(), "b*b' + 1/2");
    }

    #[test]
    fn primitive_part() {
        assert_eq!(p("-1/2*b + 3/4").primitive(), p("2*b - 3"));
    }
}
