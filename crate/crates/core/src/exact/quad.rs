use std::fmt;

use super::{ExactError, MultiPoly, Var};

/// `A v^2 + B v + C` with `A`, `B`, `C` free of `v`, and its discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRootData {
    pub var: Var,
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
    pub discriminant: MultiPoly,
}

pub fn quadratic_root_data(f: &MultiPoly, v: &Var) -> Result<QuadRootData, ExactError> {
    let d = f.degree_in(v);
    if d != 2 {
        return Err(ExactError::NotQuadratic(d));
    }
    let a = f.coeff_of(v, 2);
    let b = f.coeff_of(v, 1);
    let c = f.coeff_of(v, 0);
    let discriminant = &b * &b - MultiPoly::int(4) * &a * &c;
    Ok(QuadRootData { var: v.clone(), a, b, c, discriminant })
}

impl QuadRootData {
    /// Divides through by a constant leading coefficient so the roots read
    /// `-B/2 ± sqrt(D)/2`.
    pub fn monic(&self) -> Result<QuadRootData, ExactError> {
        let lead = self.a.as_constant().ok_or(ExactError::NotDivisible)?;
        let inv = lead.recip();
        let b = self.b.scale(&inv);
        let c = self.c.scale(&inv);
        let discriminant = &b * &b - MultiPoly::int(4) * &c;
        Ok(QuadRootData { var: self.var.clone(), a: MultiPoly::one(), b, c, discriminant })
    }

    pub fn polynomial(&self) -> MultiPoly {
        let v = MultiPoly::from_var(self.var.clone());
        &self.a * &v * &v + &self.b * &v + self.c.clone()
    }

    /// The sum of the two roots halved, `-B / 2A`, when `A` is constant.
    pub fn center(&self) -> Option<MultiPoly> {
        let a = self.a.as_constant()?;
        Some(self.b.scale(&(-(a * num_rational::BigRational::from_integer(2.into())).recip())))
    }
}

impl fmt::Display for QuadRootData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*{v}^2 + ({})*{v} + ({}), disc = {}", self.a, self.b, self.c, self.discriminant, v = self.var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_of_quadratic_factor() {
        let f = MultiPoly::parse("b^2 + b + 2*b*b' + 3*b' + b'^2").unwrap();
        let q = quadratic_root_data(&f, &Var::new("b'")).unwrap();
        assert_eq!(q.discriminant, MultiPoly::parse("9 + 8*b").unwrap());
        assert_eq!(q.center().unwrap(), MultiPoly::parse("-3/2 - b").unwrap());
        let lin = MultiPoly::parse("b' - b").unwrap();
        assert_eq!(quadratic_root_data(&lin, &Var::new("b'")), Err(ExactError::NotQuadratic(1)));
    }
}
