//! Univariate view of a multivariate polynomial: dense coefficient vector in
//! one distinguished variable, coefficients multivariate in the rest.
//! Shared plumbing for gcd, resultants and the shape-basis code.

use super::MPoly;

/// Dense coefficients by ascending power; no trailing zero entry unless the
/// whole polynomial is zero (empty vector).
pub(crate) struct UniView {
    pub coeffs: Vec<MPoly>,
}

impl UniView {
    pub fn new(p: &MPoly, var: usize) -> Self {
        if p.is_zero() {
            return UniView { coeffs: Vec::new() };
        }
        let mut coeffs = p.univariate_in(var);
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniView { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn lead(&self) -> &MPoly {
        self.coeffs.last().expect("lead of zero polynomial")
    }

    pub fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, f: &MPoly) -> UniView {
        UniView { coeffs: self.coeffs.iter().map(|c| c.mul(f)).collect() }
    }

    pub fn div_exact(&self, f: &MPoly) -> Option<UniView> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.div_exact(f)?);
        }
        Some(UniView { coeffs })
    }

    pub fn to_poly(&self, p_table: &std::sync::Arc<crate::vars::VarTable>, var: usize) -> MPoly {
        MPoly::from_univariate(p_table, var, &self.coeffs)
    }

    /// self - shift * x^k * other
    fn sub_shifted_mul(&mut self, shift: &MPoly, k: usize, other: &UniView) {
        let needed = other.coeffs.len() + k;
        while self.coeffs.len() < needed {
            self.coeffs.push(MPoly::zero(shift.table()));
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + k] = self.coeffs[i + k].sub(&shift.mul(c));
        }
        self.trim();
    }

    /// Pseudo-remainder: returns `r` with `lc(g)^(deg f - deg g + 1) * f = q*g + r`.
    pub fn prem(&self, g: &UniView) -> UniView {
        assert!(!g.is_zero(), "prem by zero");
        let mut r = UniView { coeffs: self.coeffs.clone() };
        if r.is_zero() {
            return r;
        }
        let dg = g.deg();
        if r.deg() < dg {
            // still scale by lc(g)^(d+1) with d = deg f - deg g < 0: convention
            // is no scaling when no division step happens
            return r;
        }
        let lg = g.lead().clone();
        let mut e = (r.deg() - dg) as i64 + 1;
        while !r.is_zero() && r.deg() >= dg {
            let lr = r.lead().clone();
            let k = r.deg() - dg;
            // r = lg*r - lr*x^k*g
            let mut scaled = r.scale(&lg);
            scaled.sub_shifted_mul(&lr, k, g);
            r = scaled;
            e -= 1;
        }
        for _ in 0..e {
            r = r.scale(&lg);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::vars::VarTable;

    #[test]
    fn prem_basic() {
        let t = VarTable::standard();
        let v = t.var("t1");
        let f = UniView::new(&parse_poly(&t, "t1^2 - t2^2").unwrap(), v);
        let g = UniView::new(&parse_poly(&t, "t1 - t2").unwrap(), v);
        let r = f.prem(&g);
        assert!(r.is_zero());
    }

    #[test]
    fn prem_scaling_convention() {
        let t = VarTable::standard();
        let v = t.var("t1");
        // prem(t1^2, 2*t1 + 1) = 2^2 * t1^2 mod (2t1+1) = 1
        let f = UniView::new(&parse_poly(&t, "t1^2").unwrap(), v);
        let g = UniView::new(&parse_poly(&t, "2*t1 + 1").unwrap(), v);
        let r = f.prem(&g);
        assert_eq!(r.to_poly(&t, v), parse_poly(&t, "1").unwrap());
    }
}
