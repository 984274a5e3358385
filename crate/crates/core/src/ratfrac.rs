//! Rational functions: reduced fractions of multivariate polynomials.

use std::collections::HashMap;
use std::fmt;

use crate::poly::{gcd_multivar, MPoly, PolyError};
use crate::vars::VarTable;

/// Fraction in lowest terms; denominator normalized with integer content 1
/// and positive ambient-lex leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFrac {
    num: MPoly,
    den: MPoly,
}

impl RatFrac {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        let mut f = RatFrac { num, den };
        f.reduce();
        Ok(f)
    }

    pub fn from_poly(num: MPoly) -> Self {
        let den = MPoly::one(num.table());
        RatFrac { num, den }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MPoly::one(self.num.table());
            return;
        }
        let g = gcd_multivar(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides numerator");
            self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        }
        let unit = self.den.normalization_unit();
        if !num_traits::One::is_one(&unit) {
            self.den = self.den.scale(&unit.recip());
            self.num = self.num.scale(&unit.recip());
        }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn table(&self) -> &std::sync::Arc<VarTable> {
        self.num.table()
    }

    pub fn add(&self, rhs: &RatFrac) -> RatFrac {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFrac::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, rhs: &RatFrac) -> RatFrac {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFrac {
        RatFrac { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RatFrac) -> RatFrac {
        RatFrac::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, rhs: &RatFrac) -> Result<RatFrac, PolyError> {
        if rhs.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        RatFrac::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    /// Derivative with respect to one variable.
    pub fn derivative(&self, var: usize) -> RatFrac {
        let num = self
            .num
            .derivative(var)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(var)));
        let den = self.den.mul(&self.den);
        RatFrac::new(num, den).expect("nonzero denominator")
    }
}

impl fmt::Display for RatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Exact substitution of rational functions into a polynomial, brought to a
/// single common denominator and reduced once at the end.
pub fn substitute(a: &MPoly, bindings: &HashMap<usize, RatFrac>) -> Result<RatFrac, PolyError> {
    let table = a.table().clone();
    if bindings.is_empty() || a.is_zero() {
        return Ok(RatFrac::from_poly(a.clone()));
    }
    // per-variable maximal exponent, for the common denominator
    let mut max_deg: HashMap<usize, usize> = HashMap::new();
    for (&v, _) in bindings {
        max_deg.insert(v, a.degree_in(v));
    }
    // cached powers of each binding's numerator and denominator
    let mut num_pows: HashMap<usize, Vec<MPoly>> = HashMap::new();
    let mut den_pows: HashMap<usize, Vec<MPoly>> = HashMap::new();
    for (&v, f) in bindings {
        let m = max_deg[&v];
        let mut np = Vec::with_capacity(m + 1);
        let mut dp = Vec::with_capacity(m + 1);
        let mut n_acc = MPoly::one(&table);
        let mut d_acc = MPoly::one(&table);
        for _ in 0..=m {
            np.push(n_acc.clone());
            dp.push(d_acc.clone());
            n_acc = n_acc.mul(f.num());
            d_acc = d_acc.mul(f.den());
        }
        num_pows.insert(v, np);
        den_pows.insert(v, dp);
    }
    let mut acc = MPoly::zero(&table);
    for (expo, coeff) in a.terms() {
        let mut term = MPoly::constant(&table, coeff.clone());
        let mut rest = vec![0; expo.len()];
        for (i, &k) in expo.iter().enumerate() {
            if let Some(m) = max_deg.get(&i) {
                let k = k as usize;
                term = term.mul(&num_pows[&i][k]);
                term = term.mul(&den_pows[&i][m - k]);
            } else {
                rest[i] = k;
            }
        }
        term = term.mul(&MPoly::monomial(&table, rest, num_traits::One::one()));
        acc = acc.add(&term);
    }
    let mut den = MPoly::one(&table);
    for (&v, &m) in &max_deg {
        den = den.mul(&den_pows[&v][m]);
    }
    RatFrac::new(acc, den)
}

/// Numerator, in reduced form, of the 2x2 Jacobian determinant of `(f, g)`
/// with respect to `vars`.
pub fn jacobian_numerator(f: &RatFrac, g: &RatFrac, vars: (usize, usize)) -> MPoly {
    let (v1, v2) = vars;
    let det = f
        .derivative(v1)
        .mul(&g.derivative(v2))
        .sub(&f.derivative(v2).mul(&g.derivative(v1)));
    det.num().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(&VarTable::standard(), s).unwrap()
    }

    fn fr(n: &str, d: &str) -> RatFrac {
        RatFrac::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduction_and_sign() {
        let f = fr("2*t1^2-2*t2^2", "-2*t1+2*t2");
        assert_eq!(f.num(), &p("-t1-t2"));
        assert!(f.den().is_one());
        let g = fr("t1", "-t2");
        assert_eq!(g.den(), &p("t2"));
        assert_eq!(g.num(), &p("-t1"));
    }

    #[test]
    fn substitute_identity() {
        let t = VarTable::standard();
        let a = p("t1^2 + t2");
        let mut b = HashMap::new();
        b.insert(t.var("t1"), RatFrac::from_poly(p("t1")));
        b.insert(t.var("t2"), RatFrac::from_poly(p("t2")));
        assert_eq!(substitute(&a, &b).unwrap(), RatFrac::from_poly(a));
    }

    #[test]
    fn substitute_fraction() {
        let t = VarTable::standard();
        let a = p("t1^2 - t2");
        let mut b = HashMap::new();
        b.insert(t.var("t1"), fr("1", "t2"));
        // (1/t2)^2 - t2 = (1 - t2^3)/t2^2
        let r = substitute(&a, &b).unwrap();
        assert_eq!(r, fr("1 - t2^3", "t2^2"));
    }

    #[test]
    fn jacobian_of_identity_and_dependent() {
        let t = VarTable::standard();
        let vars = (t.var("t1"), t.var("t2"));
        let f = RatFrac::from_poly(p("t1"));
        let g = RatFrac::from_poly(p("t2"));
        assert_eq!(jacobian_numerator(&f, &g, vars), p("1"));
        let g2 = RatFrac::from_poly(p("t1^2"));
        assert!(jacobian_numerator(&f, &g2, vars).is_zero());
    }

    #[test]
    fn jacobian_is_alternating() {
        let t = VarTable::standard();
        let vars = (t.var("t1"), t.var("t2"));
        let f = fr("t1^2+t2", "t2");
        let g = fr("t1-t2^3", "t1");
        let a = jacobian_numerator(&f, &g, vars);
        let b = jacobian_numerator(&g, &f, vars);
        assert_eq!(a, b.neg());
    }
}
