//! Multivariate gcd, content/primitive part and square-free parts.
//!
//! gcd runs content/primitive-part recursion over a chosen main variable
//! with a subresultant remainder sequence on the primitive parts. The final
//! candidate is gated by trial division.



use super::uni::UniView;
use super::{MPoly, PolyError};

/// Normalized gcd; `gcd(a, 0) = a.normalized()`, constants count as units.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    let g = gcd_unchecked(a, b);
    debug_assert!(g.is_zero() || (g.divides(a) && g.divides(b)), "gcd candidate fails trial division");
    g
}

fn gcd_unchecked(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.table());
    }
    let sa = a.support();
    let sb = b.support();
    // A variable missing from one side cannot occur in the gcd; recurse on
    // the coefficient content with respect to it.
    if let Some(&v) = sa.difference(&sb).next() {
        let (ca, _) = content_primpart_var(a, v);
        return gcd_unchecked(&ca, b);
    }
    if let Some(&v) = sb.difference(&sa).next() {
        let (cb, _) = content_primpart_var(b, v);
        return gcd_unchecked(a, &cb);
    }
    // Common support; pick the main variable with minimal degree sum.
    let v = *sa
        .iter()
        .min_by_key(|&&v| a.degree_in(v) + b.degree_in(v))
        .unwrap();
    let (ca, pa) = content_primpart_var(a, v);
    let (cb, pb) = content_primpart_var(b, v);
    let content_gcd = gcd_unchecked(&ca, &cb);
    let prim_gcd = prs_gcd(&pa, &pb, v);
    content_gcd.mul(&prim_gcd).normalized()
}

/// gcd of two polynomials primitive w.r.t. `v`, via subresultant PRS.
fn prs_gcd(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let table = a.table().clone();
    let mut f = UniView::new(a, v);
    let mut g = UniView::new(b, v);
    if f.deg() < g.deg() {
        std::mem::swap(&mut f, &mut g);
    }
    if g.deg() == 0 {
        // nonzero constant in v and both inputs primitive
        return MPoly::one(&table);
    }
    let mut divisor_g = MPoly::one(&table);
    let mut divisor_h = MPoly::one(&table);
    loop {
        let delta = f.deg() - g.deg();
        let mut r = f.prem(&g);
        if r.is_zero() {
            let g_poly = g.to_poly(&table, v);
            let (_, pp) = content_primpart_var(&g_poly, v);
            return pp.normalized();
        }
        let scale = divisor_g.mul(&divisor_h.pow(delta));
        r = r.div_exact(&scale).expect("subresultant division is exact");
        f = g;
        g = r;
        divisor_g = f.lead().clone();
        divisor_h = if delta == 0 {
            divisor_h
        } else {
            divisor_g
                .pow(delta)
                .div_exact(&divisor_h.pow(delta - 1))
                .expect("subresultant h-update is exact")
        };
        if g.deg() == 0 {
            return MPoly::one(&table);
        }
    }
}

/// Content and primitive part with one main variable: content is the gcd of
/// the coefficients of `a` as a univariate polynomial in `v`.
fn content_primpart_var(a: &MPoly, v: usize) -> (MPoly, MPoly) {
    let coeffs = a.univariate_in(v);
    let mut content = MPoly::zero(a.table());
    for c in &coeffs {
        if c.is_zero() {
            continue;
        }
        content = gcd_unchecked(&content, c);
        if content.is_one() {
            break;
        }
    }
    let pp = a.div_exact(&content).expect("content divides");
    (content, pp)
}

/// Content and primitive part of `a` viewed as a polynomial in `vars`: the
/// content is the gcd of the coefficients (polynomials in the remaining
/// variables) and `a = content * primpart` holds identically.
pub fn content_primpart(a: &MPoly, vars: &[usize]) -> Result<(MPoly, MPoly), PolyError> {
    if a.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let coeffs = a.coefficients_wrt(vars);
    let mut content = MPoly::zero(a.table());
    for c in &coeffs {
        content = gcd_unchecked(&content, c);
        if content.is_one() {
            break;
        }
    }
    let pp = a.div_exact(&content).expect("content divides");
    Ok((content, pp))
}

/// Normalized lcm.
pub fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero(a.table());
    }
    let g = gcd(a, b);
    a.div_exact(&g).unwrap().mul(b).normalized()
}

/// Product of the distinct irreducible factors of `a` involving `var`
/// (up to a unit): `a / gcd(a, da/dvar)`, normalized.
pub fn squarefree_part(a: &MPoly, var: usize) -> MPoly {
    assert!(!a.is_zero(), "square-free part of zero");
    if !a.depends_on(var) {
        return MPoly::one(a.table());
    }
    let da = a.derivative(var);
    let g = gcd(a, &da);
    a.div_exact(&g).expect("gcd divides").normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::vars::VarTable;
    use std::sync::Arc;

    fn t() -> Arc<crate::vars::VarTable> {
        VarTable::standard()
    }

    fn p(s: &str) -> MPoly {
        parse_poly(&t(), s).unwrap()
    }

    #[test]
    fn gcd_univariate() {
        assert_eq!(gcd(&p("t1^2-t2^2"), &p("t1-t2")), p("t1-t2"));
    }

    #[test]
    fn gcd_of_example_forms_is_one() {
        // gcd(p1,...,p4) = 1 for P = (t1^3+t2*t3^2 : t1^3 : t2*t3^2 : t3^3)
        let forms = [p("t1^3+t2*t3^2"), p("t1^3"), p("t2*t3^2"), p("t3^3")];
        let mut g = MPoly::zero(&t());
        for f in &forms {
            g = gcd(&g, f);
        }
        assert!(g.is_one());
    }

    #[test]
    fn gcd_with_factor_structure() {
        // factor structure from a squared quartic times t1^2 against t1^4*t2^2,
        // verified by division
        let a = p("t1^2").mul(&p("t1^2+t1*t2-t1*t3-t2^2").pow(2));
        let b = p("t1^4*t2^2");
        let g = gcd(&a, &b);
        assert_eq!(g, p("t1^2"));
        assert!(g.divides(&a) && g.divides(&b));
    }

    #[test]
    fn gcd_zero_rules() {
        let z = MPoly::zero(&t());
        assert_eq!(gcd(&p("2*t1-2*t2"), &z), p("t1-t2"));
        assert!(gcd(&z, &z).is_zero());
    }

    #[test]
    fn content_primpart_examples() {
        let tab = t();
        let v_t1 = [tab.var("t1")];
        let (c, pp) = content_primpart(&p("h1*t1^2+h1*t1"), &v_t1).unwrap();
        assert_eq!(c, p("h1"));
        assert_eq!(pp, p("t1^2+t1"));
        assert_eq!(c.mul(&pp), p("h1*t1^2+h1*t1"));

        // no h-variables present: content w.r.t. {h1,h2} is the whole thing
        let hs = [tab.var("h1"), tab.var("h2")];
        let (c2, pp2) = content_primpart(&p("t1^2-t1"), &hs).unwrap();
        assert_eq!(c2, p("t1^2-t1"));
        assert!(pp2.is_one());

        assert_eq!(
            content_primpart(&MPoly::zero(&tab), &v_t1),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_examples() {
        let tab = t();
        let v = tab.var("t1");
        assert_eq!(squarefree_part(&p("(t1-1)^2"), v), p("t1-1"));
        // discriminant of t1^3-h1^3 over Q(h1) is nonzero: already square-free
        assert_eq!(squarefree_part(&p("t1^3-h1^3"), v), p("t1^3-h1^3"));
        let a = p("(t1^2+h1*t1+h1^2)^2").mul(&p("t1-h1"));
        let sf = squarefree_part(&a, v);
        assert_eq!(sf, p("(t1^2+h1*t1+h1^2)*(t1-h1)").normalized());
        // gcd-with-derivative oracle: sf divides a and gcd(sf, dsf) is v-free
        assert!(sf.divides(&a));
        assert!(!gcd(&sf, &sf.derivative(v)).depends_on(v));
    }

    #[test]
    fn lcm_times_gcd() {
        let a = p("t1^2-t2^2");
        let b = p("t1^2-t1*t2");
        let g = gcd(&a, &b);
        let l = lcm(&a, &b);
        assert_eq!(g.mul(&l), a.mul(&b).normalized());
    }
}
