//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vector; the natural
//! `Vec<u32>` ordering is exactly the ambient lexicographic monomial order
//! with table index 0 strongest, so iteration order is canonical and the
//! last entry is the ambient leading term.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::vars::VarTable;

mod fmt;
mod gcd;
mod parse;
mod resultant;
pub(crate) mod uni;

pub use parse::parse_poly;
pub use resultant::{resultant, sylvester_resultant};

pub type Expo = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("operands use different variable tables")]
    TableMismatch,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("exact division failed")]
    NotDivisible,
    #[error("requested degree {requested} below actual degree {actual}")]
    DegreeTooSmall { requested: usize, actual: usize },
    #[error("polynomial must be free of {0}")]
    NotFreeOf(String),
    #[error("variable {0} not present in table")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("denominator vanishes identically")]
    ZeroDenominator,
}

/// Sparse multivariate polynomial over the rationals.
#[derive(Clone)]
pub struct MPoly {
    table: Arc<VarTable>,
    terms: BTreeMap<Vec<Expo>, BigRational>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        VarTable::same(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        MPoly { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, BigRational::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: BigRational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(vec![0; table.arity()], c);
        }
        p
    }

    pub fn int(table: &Arc<VarTable>, n: i64) -> Self {
        Self::constant(table, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(table: &Arc<VarTable>, name: &str) -> Self {
        let idx = table.var(name);
        Self::var_idx(table, idx)
    }

    pub fn var_idx(table: &Arc<VarTable>, idx: usize) -> Self {
        let mut expo = vec![0; table.arity()];
        expo[idx] = 1;
        let mut p = Self::zero(table);
        p.terms.insert(expo, BigRational::one());
        p
    }

    pub fn monomial(table: &Arc<VarTable>, expo: Vec<Expo>, c: BigRational) -> Self {
        assert_eq!(expo.len(), table.arity());
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(expo, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Expo>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant value when the polynomial has no variables, else `None`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Ambient-lex leading term.
    pub fn leading_term(&self) -> Option<(&Vec<Expo>, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms.keys().map(|e| e[var] as usize).max().unwrap_or(0)
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    s.insert(i);
                }
            }
        }
        s
    }

    /// Total degree when homogeneous in `vars`, else `None`.
    pub fn homogeneous_degree_in(&self, vars: &[usize]) -> Option<usize> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d: usize = vars.iter().map(|&v| e[v] as usize).sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        deg.or(Some(0))
    }

    fn insert_term(&mut self, expo: Vec<Expo>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, rhs: &MPoly) -> Result<MPoly, PolyError> {
        if !VarTable::same(&self.table, &rhs.table) {
            return Err(PolyError::TableMismatch);
        }
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &MPoly) -> Result<MPoly, PolyError> {
        if !VarTable::same(&self.table, &rhs.table) {
            return Err(PolyError::TableMismatch);
        }
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &MPoly) -> Result<MPoly, PolyError> {
        if !VarTable::same(&self.table, &rhs.table) {
            return Err(PolyError::TableMismatch);
        }
        let mut out = Self::zero(&self.table);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<Expo> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("table mismatch in add")
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("table mismatch in sub")
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("table mismatch in mul")
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn mul_var_power(&self, var: usize, k: Expo) -> MPoly {
        let mut out = Self::zero(&self.table);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[var] += k;
            out.terms.insert(e, c.clone());
        }
        out
    }

    pub fn pow(&self, mut n: usize) -> MPoly {
        let mut base = self.clone();
        let mut acc = Self::one(&self.table);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = Self::zero(&self.table);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            let k = e2[var];
            e2[var] -= 1;
            out.insert_term(e2, c * BigRational::from_integer(BigInt::from(k)));
        }
        out
    }

    /// Dense coefficient vector of `self` viewed as a univariate polynomial
    /// in `var`; index = power of `var`, entries free of `var`.
    pub fn univariate_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var);
        let mut coeffs = vec![Self::zero(&self.table); d + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            coeffs[k].insert_term(e2, c.clone());
        }
        coeffs
    }

    pub fn from_univariate(table: &Arc<VarTable>, var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = Self::zero(table);
        for (k, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul_var_power(var, k as Expo));
        }
        out
    }

    /// Coefficient of `var^k`, as a polynomial free of `var`.
    pub fn coeff_of_power(&self, var: usize, k: Expo) -> MPoly {
        let mut out = Self::zero(&self.table);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        out
    }

    /// Coefficients of `self` viewed as a polynomial in the variable set
    /// `vars`; the returned polynomials are free of `vars`, one for each
    /// distinct `vars`-monomial, in canonical order.
    pub fn coefficients_wrt(&self, vars: &[usize]) -> Vec<MPoly> {
        let mut groups: BTreeMap<Vec<Expo>, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<Expo> = vars.iter().map(|&v| e[v]).collect();
            let mut e2 = e.clone();
            for &v in vars {
                e2[v] = 0;
            }
            groups
                .entry(key)
                .or_insert_with(|| Self::zero(&self.table))
                .insert_term(e2, c.clone());
        }
        groups.into_values().filter(|p| !p.is_zero()).collect()
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(&self.table));
        }
        let (de, dc) = divisor.leading_term().unwrap();
        let de = de.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.table);
        while let Some((re, rc)) = rem.leading_term() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<Expo> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let qc = rc / &dc;
            let t = Self::monomial(&self.table, qe, qc);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &MPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Scaling `c > 0` such that `self = c * self.normalized()`: the
    /// normalized form has integer coefficients with content 1 and positive
    /// ambient-lex leading coefficient.
    pub fn normalization_unit(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut unit = BigRational::new(num_gcd, den_lcm);
        if self.leading_term().unwrap().1.is_negative() {
            unit = -unit;
        }
        unit
    }

    pub fn normalized(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let unit = self.normalization_unit();
        self.scale(&unit.recip())
    }

    /// Substitute polynomials for variables (all bindings applied at once).
    pub fn subst_poly(&self, bindings: &HashMap<usize, MPoly>) -> MPoly {
        for v in bindings.values() {
            assert!(VarTable::same(&self.table, v.table()), "table mismatch in subst");
        }
        let mut out = Self::zero(&self.table);
        for (e, c) in &self.terms {
            let mut term = Self::constant(&self.table, c.clone());
            let mut rest = vec![0; e.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if let Some(b) = bindings.get(&i) {
                    term = term.mul(&b.pow(k as usize));
                } else {
                    rest[i] = k;
                }
            }
            out = out.add(&term.mul(&Self::monomial(&self.table, rest, BigRational::one())));
        }
        out
    }

    /// Substitute rational constants for some variables.
    pub fn eval_partial(&self, bindings: &HashMap<usize, BigRational>) -> MPoly {
        let mut out = Self::zero(&self.table);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e2 = e.clone();
            for (&i, val) in bindings {
                let k = e2[i];
                if k > 0 {
                    let mut p = BigRational::one();
                    for _ in 0..k {
                        p *= val;
                    }
                    coeff *= p;
                    e2[i] = 0;
                }
            }
            out.insert_term(e2, coeff);
        }
        out
    }

    /// Homogenize with respect to `hvar` to the given degree over the
    /// variable set `vars ∪ {hvar}` (missing degree means the polynomial's
    /// own total degree in `vars`).
    pub fn homogenize(
        &self,
        vars: &[usize],
        hvar: usize,
        degree: Option<usize>,
    ) -> Result<MPoly, PolyError> {
        if self.depends_on(hvar) {
            return Err(PolyError::NotFreeOf(self.table.name(hvar).to_string()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let own: usize = self
            .terms
            .keys()
            .map(|e| vars.iter().map(|&v| e[v] as usize).sum())
            .max()
            .unwrap();
        let d = degree.unwrap_or(own);
        if d < own {
            return Err(PolyError::DegreeTooSmall { requested: d, actual: own });
        }
        let mut out = Self::zero(&self.table);
        for (e, c) in &self.terms {
            let td: usize = vars.iter().map(|&v| e[v] as usize).sum();
            let mut e2 = e.clone();
            e2[hvar] = (d - td) as Expo;
            out.terms.insert(e2, c.clone());
        }
        Ok(out)
    }

    /// Set `hvar = 1`.
    pub fn dehomogenize(&self, hvar: usize) -> MPoly {
        let mut out = Self::zero(&self.table);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[hvar] = 0;
            out.insert_term(e2, c.clone());
        }
        out
    }

    /// Map into another table by variable name. Fails when a variable in the
    /// support has no counterpart in `target`.
    pub fn into_table(&self, target: &Arc<VarTable>) -> Result<MPoly, PolyError> {
        if VarTable::same(&self.table, target) {
            let mut p = self.clone();
            p.table = target.clone();
            return Ok(p);
        }
        let mut map = Vec::with_capacity(self.table.arity());
        for i in 0..self.table.arity() {
            map.push(target.lookup(self.table.name(i)));
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.arity()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e2[j] = k,
                    None => {
                        return Err(PolyError::UnknownVariable(
                            self.table.name(i).to_string(),
                        ))
                    }
                }
            }
            out.terms.insert(e2, c.clone());
        }
        Ok(out)
    }

    /// Evaluate fully at rational coordinates (missing variables read 0).
    pub fn eval_all(&self, point: &HashMap<usize, BigRational>) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            let mut live = true;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match point.get(&i) {
                    Some(v) if !v.is_zero() => {
                        let mut p = BigRational::one();
                        for _ in 0..k {
                            p *= v;
                        }
                        term *= p;
                    }
                    _ => {
                        live = false;
                        break;
                    }
                }
            }
            if live {
                acc += term;
            }
        }
        acc
    }
}

pub use gcd::{content_primpart, gcd as gcd_multivar, lcm as lcm_multivar, squarefree_part};

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn p(s: &str) -> MPoly {
        parse_poly(&t(), s).unwrap()
    }

    #[test]
    fn add_cancellation() {
        // (t1+t2) + (t1-t2) = 2 t1
        assert_eq!(p("t1+t2").add(&p("t1-t2")), p("2*t1"));
    }

    #[test]
    fn mul_difference_of_cubes() {
        // hand-expanded oracle: (t1-h1)(t1^2+h1*t1+h1^2) = t1^3-h1^3
        assert_eq!(p("t1-h1").mul(&p("t1^2+h1*t1+h1^2")), p("t1^3-h1^3"));
    }

    #[test]
    fn example_parametrization_difference() {
        // p1 - p2 for P = (t1^3+t2*t3^2 : t1^3 : t2*t3^2 : t3^3)
        assert_eq!(p("t1^3+t2*t3^2").sub(&p("t1^3")), p("t2*t3^2"));
    }

    #[test]
    fn table_mismatch_is_reported() {
        let other = t().extend(&["l1_1".into()]);
        let a = p("t1");
        let b = MPoly::var(&other, "t1");
        assert_eq!(a.checked_add(&b), Err(PolyError::TableMismatch));
    }

    #[test]
    fn division_exact_and_failed() {
        let prod = p("t1^2-t2^2");
        assert_eq!(prod.div_exact(&p("t1-t2")).unwrap(), p("t1+t2"));
        assert!(prod.div_exact(&p("t1-1")).is_none());
    }

    #[test]
    fn homogenize_matches_example() {
        let tab = t();
        let vars = [tab.var("t1"), tab.var("t2")];
        let a = p("t1^3+t2");
        let h = a.homogenize(&vars, tab.var("t3"), None).unwrap();
        assert_eq!(h, p("t1^3+t2*t3^2"));
        assert_eq!(h.dehomogenize(tab.var("t3")), a);
        // zero stays zero
        let z = MPoly::zero(&tab);
        assert!(z.homogenize(&vars, tab.var("t3"), None).unwrap().is_zero());
    }

    #[test]
    fn homogenize_rejects_small_degree() {
        let tab = t();
        let vars = [tab.var("t1"), tab.var("t2")];
        let a = p("t1^3+t2");
        assert!(matches!(
            a.homogenize(&vars, tab.var("t3"), Some(2)),
            Err(PolyError::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn normalized_form() {
        let a = p("1/2*t1-1/3*t2");
        let n = a.normalized();
        assert_eq!(n, p("3*t1-2*t2"));
        assert_eq!(n.scale(&a.normalization_unit()), a);
        // leading sign flips
        assert_eq!(p("-t1+t2").normalized(), p("t1-t2"));
    }

    #[test]
    fn subst_poly_linear_change() {
        let tab = t();
        let mut b = HashMap::new();
        b.insert(tab.var("t1"), p("t1+t2"));
        assert_eq!(p("t1^2").subst_poly(&b), p("t1^2+2*t1*t2+t2^2"));
    }
}
