//! Generic-fiber machinery.
//!
//! For an affine map given by reduced coordinate fractions `P_i/Q_i`, the
//! fiber over a generic point `(h1, h2)` is cut out by the cross terms
//! `G_i = P_i(h)Q_i(t) - P_i(t)Q_i(h)` together with the saturation
//! polynomial `w * lcm(Q_i) - 1`. Two routes are computed and cross-checked:
//! a Gröbner route that ends in a Shape-Lemma basis `{u(t1), t2 - v(t1)}`
//! of the radical, and a resultant route whose primitive parts `R1, R2`
//! carry the degree of the map. The trivial fiber point is divided out of
//! `u` to produce the punctured description used by the solution-space
//! search.

use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;
use rand::Rng;

use crate::groebner::{
    buchberger, shape_basis, GroebnerCtx, GroebnerError, LinearChange, MonomialOrder,
};
use crate::poly::{
    content_primpart, gcd_multivar, lcm_multivar, resultant, squarefree_part, MPoly, PolyError,
};
use crate::ratfrac::{jacobian_numerator, RatFrac};
use crate::vars::VarTable;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FiberError {
    #[error("invalid parametrization: {0}")]
    InvalidParametrization(String),
    #[error("map is not generically finite (vanishing Jacobian)")]
    NotGenericallyFinite,
    #[error("degree cross-check failed: shape basis {shape}, R1 {r1}, R2 {r2}")]
    DegreeInconsistency { shape: usize, r1: usize, r2: usize },
    #[error("trivial fiber point does not divide the eliminant")]
    PunctureFailed,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Homogeneous 4-tuple `(p1 : p2 : p3 : p4)` of equal-degree forms in
/// `t1, t2, t3` with gcd 1 and `p4` nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjParam {
    pub forms: [MPoly; 4],
    pub degree: usize,
}

/// Homogeneous 3-tuple `(s1 : s2 : s3)` of equal-degree forms with gcd 1
/// and `s3` nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneMap {
    pub forms: [MPoly; 3],
    pub degree: usize,
}

fn validate_forms(forms: &[MPoly], last_nonzero: usize) -> Result<usize, FiberError> {
    let table = forms[0].table();
    let tvars = [table.var("t1"), table.var("t2"), table.var("t3")];
    let mut degree: Option<usize> = None;
    for (i, f) in forms.iter().enumerate() {
        for v in f.support() {
            if !tvars.contains(&v) {
                return Err(FiberError::InvalidParametrization(format!(
                    "component {} involves {}",
                    i + 1,
                    table.name(v)
                )));
            }
        }
        if f.is_zero() {
            continue;
        }
        let d = match f.homogeneous_degree_in(&tvars) {
            Some(d) => d,
            None => {
                return Err(FiberError::InvalidParametrization(format!(
                    "component {} is not homogeneous",
                    i + 1
                )))
            }
        };
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => {
                return Err(FiberError::InvalidParametrization(format!(
                    "component degrees differ: {} vs {}",
                    d0, d
                )))
            }
            _ => {}
        }
    }
    if forms[last_nonzero].is_zero() {
        return Err(FiberError::InvalidParametrization(
            "last component is identically zero; apply a projective coordinate change".into(),
        ));
    }
    let degree = degree.ok_or_else(|| {
        FiberError::InvalidParametrization("all components are zero".into())
    })?;
    let mut g = MPoly::zero(table);
    for f in forms {
        g = gcd_multivar(&g, f);
    }
    if !g.is_one() {
        return Err(FiberError::InvalidParametrization(format!(
            "components share the factor {}",
            g
        )));
    }
    Ok(degree)
}

impl ProjParam {
    pub fn new(forms: [MPoly; 4]) -> Result<Self, FiberError> {
        let degree = validate_forms(&forms, 3)?;
        Ok(ProjParam { forms, degree })
    }

    /// Divide out a common factor, returning the reduced parametrization and
    /// whether a reduction happened.
    pub fn new_reduced(mut forms: [MPoly; 4]) -> Result<(Self, bool), FiberError> {
        let mut g = MPoly::zero(forms[0].table());
        for f in &forms {
            g = gcd_multivar(&g, f);
        }
        let reduced = !g.is_one() && !g.is_zero();
        if reduced {
            for f in forms.iter_mut() {
                *f = f.div_exact(&g).expect("gcd divides");
            }
        }
        Ok((Self::new(forms)?, reduced))
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.forms[0].table()
    }

    /// Reduced affine coordinate fractions `p_i(t1,t2,1) / p4(t1,t2,1)`.
    pub fn affine_fractions(&self) -> Result<Vec<RatFrac>, FiberError> {
        let t3 = self.table().var("t3");
        let den = self.forms[3].dehomogenize(t3);
        if den.is_zero() {
            return Err(FiberError::InvalidParametrization(
                "denominator vanishes after dehomogenization".into(),
            ));
        }
        let mut out = Vec::with_capacity(3);
        for f in &self.forms[..3] {
            out.push(RatFrac::new(f.dehomogenize(t3), den.clone())?);
        }
        Ok(out)
    }
}

impl PlaneMap {
    pub fn new(forms: [MPoly; 3]) -> Result<Self, FiberError> {
        let degree = validate_forms(&forms, 2)?;
        Ok(PlaneMap { forms, degree })
    }

    pub fn new_reduced(mut forms: [MPoly; 3]) -> Result<(Self, bool), FiberError> {
        let mut g = MPoly::zero(forms[0].table());
        for f in &forms {
            g = gcd_multivar(&g, f);
        }
        let reduced = !g.is_one() && !g.is_zero();
        if reduced {
            for f in forms.iter_mut() {
                *f = f.div_exact(&g).expect("gcd divides");
            }
        }
        Ok((Self::new(forms)?, reduced))
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.forms[0].table()
    }

    pub fn affine_fractions(&self) -> Result<Vec<RatFrac>, FiberError> {
        let t3 = self.table().var("t3");
        let den = self.forms[2].dehomogenize(t3);
        if den.is_zero() {
            return Err(FiberError::InvalidParametrization(
                "denominator vanishes after dehomogenization".into(),
            ));
        }
        let mut out = Vec::with_capacity(2);
        for f in &self.forms[..2] {
            out.push(RatFrac::new(f.dehomogenize(t3), den.clone())?);
        }
        Ok(out)
    }

    /// Numerator of the Jacobian determinant of the induced affine map; the
    /// map is generically finite exactly when this is nonzero.
    pub fn jacobian(&self) -> Result<MPoly, FiberError> {
        let fr = self.affine_fractions()?;
        let t = self.table();
        Ok(jacobian_numerator(&fr[0], &fr[1], (t.var("t1"), t.var("t2"))))
    }
}

/// Shape-Lemma description of a punctured generic fiber:
/// `{u*(t1), v_den*t2 - v_num(t1)}` in the coordinates produced by `change`
/// (identity unless general position needed a linear substitution).
#[derive(Debug, Clone)]
pub struct ShapeFiber {
    /// Punctured square-free eliminant (trivial point divided out).
    pub u_star: MPoly,
    /// Unpunctured eliminant; its degree is the degree of the map.
    pub u_full: MPoly,
    pub v_num: MPoly,
    pub v_den: MPoly,
    pub change: LinearChange,
}

impl ShapeFiber {
    pub fn table(&self) -> &Arc<VarTable> {
        self.u_star.table()
    }

    pub fn is_empty(&self) -> bool {
        !self.u_star.depends_on(self.change.vars.0)
    }

    /// Generators of the punctured fiber ideal in the original coordinates.
    pub fn generators_original(&self) -> Vec<MPoly> {
        let (a, b) = self.change.vars;
        let table = self.table();
        let t2_part = self.v_den.mul(&MPoly::var_idx(table, b)).sub(&self.v_num);
        if self.change.is_identity() {
            return vec![self.u_star.clone(), t2_part];
        }
        // basis lives in substituted coordinates: g'(t) = g(M t); recover
        // generators of the original ideal by substituting the inverse
        let det = BigRational::from_integer(self.change.det().into());
        let m = self.change.matrix;
        let va = MPoly::var_idx(table, a);
        let vb = MPoly::var_idx(table, b);
        let inv_a = va
            .scale(&BigRational::from_integer(m[1][1].into()))
            .sub(&vb.scale(&BigRational::from_integer(m[0][1].into())))
            .scale(&det.clone().recip());
        let inv_b = vb
            .scale(&BigRational::from_integer(m[0][0].into()))
            .sub(&va.scale(&BigRational::from_integer(m[1][0].into())))
            .scale(&det.recip());
        let mut bindings = HashMap::new();
        bindings.insert(a, inv_a);
        bindings.insert(b, inv_b);
        vec![
            self.u_star.subst_poly(&bindings),
            t2_part.subst_poly(&bindings),
        ]
    }
}

/// Fiber analysis: both computation routes plus the punctured shape basis.
#[derive(Debug, Clone)]
pub struct FiberAnalysis {
    pub map_degree: usize,
    pub r1: MPoly,
    pub r2: MPoly,
    pub fiber: ShapeFiber,
}

// ---------------------------------------------------------------------------
// shared worker over a list of affine coordinate fractions

struct FractionSystem {
    /// cross terms G_i, zero components dropped
    gens: Vec<MPoly>,
    /// least common multiple of the reduced denominators
    den_lcm: MPoly,
}

fn cross_terms(fracs: &[RatFrac]) -> FractionSystem {
    let table = fracs[0].table().clone();
    let t1 = table.var("t1");
    let t2 = table.var("t2");
    let h1 = table.var("h1");
    let h2 = table.var("h2");
    let mut to_h = HashMap::new();
    to_h.insert(t1, MPoly::var_idx(&table, h1));
    to_h.insert(t2, MPoly::var_idx(&table, h2));
    let mut gens = Vec::new();
    let mut den_lcm = MPoly::one(&table);
    for f in fracs {
        let num_h = f.num().subst_poly(&to_h);
        let den_h = f.den().subst_poly(&to_h);
        let g = num_h.mul(f.den()).sub(&f.num().mul(&den_h));
        if !g.is_zero() {
            gens.push(g.normalized());
        }
        den_lcm = lcm_multivar(&den_lcm, f.den());
    }
    FractionSystem { gens, den_lcm }
}

/// `R` polynomials of a fraction system: symmetric primitive parts of the
/// elimination resultants. For three fractions the second and third cross
/// terms are combined with a mixing variable and the mixing content
/// discarded; for two they are used directly.
fn elimination_resultants(
    fracs: &[RatFrac],
    system: &FractionSystem,
) -> Result<(MPoly, MPoly), FiberError> {
    let table = fracs[0].table().clone();
    let t1 = table.var("t1");
    let t2 = table.var("t2");
    let h1 = table.var("h1");
    let h2 = table.var("h2");
    if system.gens.len() < 2 {
        return Err(FiberError::NotGenericallyFinite);
    }
    let first = &system.gens[0];
    let second = if system.gens.len() == 2 {
        system.gens[1].clone()
    } else {
        let zmix = MPoly::var(&table, "zmix");
        system.gens[1].add(&zmix.mul(&system.gens[2]))
    };
    let zmix = table.var("zmix");
    let mut build = |elim: usize, keep: usize| -> Result<MPoly, FiberError> {
        if !first.depends_on(elim) && !second.depends_on(elim) {
            return Err(FiberError::NotGenericallyFinite);
        }
        let res = resultant(first, &second, elim);
        if res.is_zero() {
            return Err(FiberError::NotGenericallyFinite);
        }
        let content_free = if res.depends_on(zmix) || system.gens.len() > 2 {
            content_primpart(&res, &[zmix])?.0
        } else {
            res
        };
        // strip factors free of h (base points of the t-side) ...
        let step1 = content_primpart(&content_free, &[h1, h2])?.1;
        // ... then factors free of the kept parameter (base points of the h-side)
        let r = content_primpart(&step1, &[keep])?.1;
        if !r.depends_on(keep) {
            return Err(FiberError::NotGenericallyFinite);
        }
        Ok(r.normalized())
    };
    let r1 = build(t2, t1)?;
    let r2 = build(t1, t2)?;
    Ok((r1, r2))
}

/// Random affine change on the image coordinates: replaces the fraction
/// tuple `f` by `A f + b` with `A` invertible. Fibers are unchanged.
fn random_image_change(fracs: &[RatFrac], rng: &mut impl Rng) -> Vec<RatFrac> {
    let n = fracs.len();
    let table = fracs[0].table().clone();
    loop {
        let a: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-4..=4)).collect())
            .collect();
        // quick invertibility check over the rationals
        let mat = crate::linalg::QMatrix::from_rows(
            a.iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        );
        if mat.rank() != n {
            continue;
        }
        let mut out = Vec::with_capacity(n);
        for row in &a {
            let mut acc = RatFrac::from_poly(MPoly::int(&table, rng.gen_range(-3..=3)));
            for (j, &c) in row.iter().enumerate() {
                let term = fracs[j].mul(&RatFrac::from_poly(MPoly::int(&table, c)));
                acc = acc.add(&term);
            }
            out.push(acc);
        }
        return out;
    }
}

fn fractions_independent(fracs: &[RatFrac]) -> bool {
    let table = fracs[0].table();
    let vars = (table.var("t1"), table.var("t2"));
    !jacobian_numerator(&fracs[0], &fracs[1], vars).is_zero()
}

/// Degree of the map and the two R polynomials, retrying with random affine
/// changes of the image when the gradient-independence hypothesis fails.
fn resultant_route(
    fracs: &[RatFrac],
    rng: &mut impl Rng,
) -> Result<(usize, MPoly, MPoly), FiberError> {
    let table = fracs[0].table().clone();
    let t1 = table.var("t1");
    let t2 = table.var("t2");
    let mut current = fracs.to_vec();
    for attempt in 0..12 {
        let ok = fractions_independent(&current);
        if ok {
            let system = cross_terms(&current);
            match elimination_resultants(&current, &system) {
                Ok((r1, r2)) => {
                    let d1 = r1.degree_in(t1);
                    let d2 = r2.degree_in(t2);
                    if d1 == d2 {
                        return Ok((d1, r1, r2));
                    }
                }
                Err(FiberError::NotGenericallyFinite) => {}
                Err(e) => return Err(e),
            }
        }
        let _ = attempt;
        current = random_image_change(fracs, rng);
    }
    Err(FiberError::NotGenericallyFinite)
}

/// Full fiber analysis of a fraction tuple: resultants, radical via the
/// square-free eliminants, shape basis, puncture, and degree cross-check.
fn fiber_of_fractions(
    fracs: &[RatFrac],
    rng: &mut impl Rng,
) -> Result<FiberAnalysis, FiberError> {
    let table = fracs[0].table().clone();
    let t1 = table.var("t1");
    let t2 = table.var("t2");
    let h1 = table.var("h1");
    let h2 = table.var("h2");
    let w = table.var("w");

    let (map_degree, r1, r2) = resultant_route(fracs, rng)?;

    // Gröbner route: saturated system plus the square-free eliminants, then
    // eliminate the saturation variable. The added eliminants make the
    // w-free part exactly the radical fiber ideal.
    let system = cross_terms(fracs);
    let mut gens = system.gens.clone();
    gens.push(
        MPoly::var_idx(&table, w)
            .mul(&system.den_lcm)
            .sub(&MPoly::one(&table)),
    );
    gens.push(squarefree_part(&r1, t1));
    gens.push(squarefree_part(&r2, t2));
    let ctx = GroebnerCtx::new(&table, MonomialOrder::lex(vec![w, t2, t1]));
    let gb = buchberger(&gens, &ctx)?;
    let radical = gb.elimination_ideal(&[t1, t2])?;
    if radical.is_empty() || radical.iter().any(|g| g.is_constant()) {
        return Err(FiberError::NotGenericallyFinite);
    }

    let shape = shape_basis(&radical, (t1, t2), &table, rng)?;
    let deg_u = shape.u.degree_in(t1);
    if deg_u != map_degree {
        return Err(FiberError::DegreeInconsistency {
            shape: deg_u,
            r1: r1.degree_in(t1),
            r2: r2.degree_in(t2),
        });
    }

    // trivial point in the (possibly changed) fiber coordinates
    let hp1 = MPoly::var_idx(&table, h1);
    let hp2 = MPoly::var_idx(&table, h2);
    let (tau1, tau2) = shape.change.pullback_point((&hp1, &hp2));

    // divide u by (t1 - tau1); exact because the trivial point is in the fiber
    let u = &shape.u;
    let coeffs = u.univariate_in(t1);
    let mut quotient = vec![MPoly::zero(&table); coeffs.len().saturating_sub(1)];
    let mut carry = MPoly::zero(&table);
    for k in (1..coeffs.len()).rev() {
        let q = coeffs[k].add(&carry);
        carry = q.mul(&tau1);
        quotient[k - 1] = q;
    }
    let remainder = coeffs[0].add(&carry);
    if !remainder.is_zero() {
        return Err(FiberError::PunctureFailed);
    }
    let u_star = MPoly::from_univariate(&table, t1, &quotient).normalized();

    // the trivial point satisfies the second shape generator exactly
    let mut at_tau = HashMap::new();
    at_tau.insert(t1, tau1.clone());
    let check = shape.v_den.mul(&tau2).sub(&shape.v_num.subst_poly(&at_tau));
    if !check.is_zero() {
        return Err(FiberError::PunctureFailed);
    }

    Ok(FiberAnalysis {
        map_degree,
        r1,
        r2,
        fiber: ShapeFiber {
            u_star,
            u_full: u.clone(),
            v_num: shape.v_num,
            v_den: shape.v_den,
            change: shape.change,
        },
    })
}

// ---------------------------------------------------------------------------
// public entry points

/// Fiber generators `{G1, G2, G3, W}` of a surface parametrization.
pub fn surface_fiber_system(p: &ProjParam) -> Result<Vec<MPoly>, FiberError> {
    let fracs = p.affine_fractions()?;
    let table = p.table().clone();
    let system = cross_terms(&fracs);
    let mut gens = system.gens;
    gens.push(
        MPoly::var(&table, "w")
            .mul(&system.den_lcm)
            .sub(&MPoly::one(&table)),
    );
    Ok(gens)
}

/// `R1, R2` of a surface parametrization.
pub fn surface_resultants(
    p: &ProjParam,
    rng: &mut impl Rng,
) -> Result<(MPoly, MPoly), FiberError> {
    let fracs = p.affine_fractions()?;
    let (_, r1, r2) = resultant_route(&fracs, rng)?;
    Ok((r1, r2))
}

/// Degree of the rational map induced by a surface parametrization.
pub fn surface_map_degree(p: &ProjParam, rng: &mut impl Rng) -> Result<usize, FiberError> {
    let fracs = p.affine_fractions()?;
    let (d, _, _) = resultant_route(&fracs, rng)?;
    Ok(d)
}

/// Full fiber analysis of a surface parametrization, including the punctured
/// shape basis.
pub fn surface_fiber(p: &ProjParam, rng: &mut impl Rng) -> Result<FiberAnalysis, FiberError> {
    let fracs = p.affine_fractions()?;
    fiber_of_fractions(&fracs, rng)
}

/// Degree of a dominant plane map, via the auxiliary plane parametrization.
pub fn plane_map_degree(s: &PlaneMap, rng: &mut impl Rng) -> Result<usize, FiberError> {
    if s.jacobian()?.is_zero() {
        return Err(FiberError::NotGenericallyFinite);
    }
    let fracs = s.affine_fractions()?;
    let (d, _, _) = resultant_route(&fracs, rng)?;
    Ok(d)
}

/// Punctured generic fiber of a dominant plane map.
pub fn plane_fiber(s: &PlaneMap, rng: &mut impl Rng) -> Result<FiberAnalysis, FiberError> {
    if s.jacobian()?.is_zero() {
        return Err(FiberError::NotGenericallyFinite);
    }
    let fracs = s.affine_fractions()?;
    fiber_of_fractions(&fracs, rng)
}

/// Ideal equality of two punctured fibers (mutual normal-form reduction in
/// the original coordinates).
pub fn fibers_equal(a: &ShapeFiber, b: &ShapeFiber) -> Result<bool, FiberError> {
    let table = a.table().clone();
    let t1 = table.var("t1");
    let t2 = table.var("t2");
    let ga = a.generators_original();
    let gb = b.generators_original();
    // empty punctured fibers: ideals are <1>
    let a_empty = a.is_empty();
    let b_empty = b.is_empty();
    if a_empty || b_empty {
        return Ok(a_empty == b_empty);
    }
    let ctx = GroebnerCtx::new(&table, MonomialOrder::lex(vec![t2, t1]));
    let basis_a = buchberger(&ga, &ctx)?;
    let basis_b = buchberger(&gb, &ctx)?;
    Ok(ga.iter().all(|g| basis_b.reduces_to_zero(g))
        && gb.iter().all(|g| basis_a.reduces_to_zero(g)))
}

/// Parse a parametrization from four semicolon-separated polynomials.
pub fn parse_proj_param(table: &Arc<VarTable>, text: &str) -> Result<ProjParam, FiberError> {
    let parts: Vec<&str> = text.split(';').map(|s| s.trim()).collect();
    if parts.len() != 4 {
        return Err(FiberError::InvalidParametrization(format!(
            "expected 4 semicolon-separated components, found {}",
            parts.len()
        )));
    }
    let mut forms = Vec::with_capacity(4);
    for part in parts {
        forms.push(crate::poly::parse_poly(table, part)?);
    }
    ProjParam::new([
        forms[0].clone(),
        forms[1].clone(),
        forms[2].clone(),
        forms[3].clone(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tab() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn p(s: &str) -> MPoly {
        parse_poly(&tab(), s).unwrap()
    }

    fn example1() -> ProjParam {
        ProjParam::new([p("t1^3+t2*t3^2"), p("t1^3"), p("t2*t3^2"), p("t3^3")]).unwrap()
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn affine_fractions_of_example1() {
        let fr = example1().affine_fractions().unwrap();
        assert_eq!(fr[0], RatFrac::from_poly(p("t1^3+t2")));
        assert_eq!(fr[2], RatFrac::from_poly(p("t2")));
        // third cross term is h2 - t2
        let sys = cross_terms(&fr);
        assert!(sys.gens.contains(&p("h2-t2").normalized()));
        assert!(sys.den_lcm.is_one());
    }

    #[test]
    fn example1_resultant_degrees() {
        let t = tab();
        let mut r = rng();
        let (r1, r2) = surface_resultants(&example1(), &mut r).unwrap();
        assert_eq!(r1.degree_in(t.var("t1")), 3);
        assert_eq!(r2.degree_in(t.var("t2")), 3);
        assert_eq!(r1.normalized(), p("t1^3-h1^3").normalized());
    }

    #[test]
    fn example1_fiber_shape() {
        let t = tab();
        let mut r = rng();
        let analysis = surface_fiber(&example1(), &mut r).unwrap();
        assert_eq!(analysis.map_degree, 3);
        let fiber = &analysis.fiber;
        assert!(fiber.change.is_identity());
        assert_eq!(fiber.u_star, p("h1^2 + h1*t1 + t1^2"));
        assert_eq!(fiber.u_full.normalized(), p("t1^3 - h1^3"));
        assert_eq!(fiber.v_num, p("h2"));
        assert!(fiber.v_den.is_one());
        let _ = t;
    }

    #[test]
    fn birational_input_has_empty_punctured_fiber() {
        // (t1*t3 : t2*t3 : t3^2 : t1^2) is birational
        let param = ProjParam::new([p("t1*t3"), p("t2*t3"), p("t3^2"), p("t1^2")]).unwrap();
        let mut r = rng();
        let analysis = surface_fiber(&param, &mut r).unwrap();
        assert_eq!(analysis.map_degree, 1);
        assert!(analysis.fiber.is_empty());
    }

    #[test]
    fn identity_like_parametrization() {
        let param = ProjParam::new([p("t1"), p("t2"), p("t1"), p("t3")]).unwrap();
        let mut r = rng();
        let analysis = surface_fiber(&param, &mut r).unwrap();
        assert_eq!(analysis.map_degree, 1);
        // fiber is the single trivial point: G_i linear
        assert!(analysis.fiber.is_empty());
    }

    #[test]
    fn plane_map_identity_and_squares() {
        let mut r = rng();
        let ident = PlaneMap::new([p("t1"), p("t2"), p("t3")]).unwrap();
        assert_eq!(plane_map_degree(&ident, &mut r).unwrap(), 1);
        assert!(plane_fiber(&ident, &mut r).unwrap().fiber.is_empty());

        let squares = PlaneMap::new([p("t1^2"), p("t2^2"), p("t3^2")]).unwrap();
        assert_eq!(plane_map_degree(&squares, &mut r).unwrap(), 4);
        let fib = plane_fiber(&squares, &mut r).unwrap();
        // fiber {(±h1, ±h2)}: four points share two t1-coordinates, so a
        // linear change is forced; punctured eliminant has degree 3
        let t = tab();
        assert_eq!(fib.map_degree, 4);
        assert!(!fib.fiber.change.is_identity());
        assert_eq!(fib.fiber.u_star.degree_in(t.var("t1")), 3);
    }

    #[test]
    fn degenerate_plane_map_rejected() {
        let s = PlaneMap::new([p("t1^2"), p("t1*t2"), p("t1*t3")]);
        // common factor t1
        assert!(s.is_err());
        let dep = PlaneMap::new([p("t1^2"), p("t1^2+t3^2"), p("t3^2")]).unwrap();
        let mut r = rng();
        assert_eq!(
            plane_map_degree(&dep, &mut r),
            Err(FiberError::NotGenericallyFinite)
        );
    }

    #[test]
    fn fiber_projection_soundness() {
        // every shape root maps to the generic image point: reduce the
        // numerators of P_a(t) - P_a(h) modulo the unpunctured fiber basis
        let t = tab();
        let mut r = rng();
        let param = example1();
        let analysis = surface_fiber(&param, &mut r).unwrap();
        let fiber = analysis.fiber;
        let gens = vec![
            fiber.u_full.clone(),
            fiber.v_den.mul(&MPoly::var(&t, "t2")).sub(&fiber.v_num),
        ];
        let ctx = GroebnerCtx::new(&t, MonomialOrder::lex(vec![t.var("t2"), t.var("t1")]));
        let gb = buchberger(&gens, &ctx).unwrap();
        let fracs = param.affine_fractions().unwrap();
        let mut to_h = HashMap::new();
        to_h.insert(t.var("t1"), MPoly::var(&t, "h1"));
        to_h.insert(t.var("t2"), MPoly::var(&t, "h2"));
        for f in &fracs {
            let diff = f
                .num()
                .mul(&f.den().subst_poly(&to_h))
                .sub(&f.num().subst_poly(&to_h).mul(f.den()));
            assert!(gb.reduces_to_zero(&diff));
        }
    }

    #[test]
    fn parse_param_text() {
        let t = tab();
        let p = parse_proj_param(&t, "t1^3+t2*t3^2; t1^3; t2*t3^2; t3^3").unwrap();
        assert_eq!(p.degree, 3);
        assert!(parse_proj_param(&t, "t1; t2; t3").is_err());
        assert!(parse_proj_param(&t, "t1; t2; t3; t1+t3^2").is_err());
    }
}
