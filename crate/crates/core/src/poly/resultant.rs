//! Resultants: subresultant remainder sequence as the workhorse, Sylvester
//! determinant (fraction-free Bareiss elimination) as the low-degree
//! cross-check.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::uni::UniView;
use super::MPoly;

/// Sylvester resultant of `a` and `b` eliminating `var`.
///
/// Conventions: `res(a, b) = 0` when either input is zero; when `a` is
/// constant in `var`, `res(a, b) = a^deg(b)`.
///
/// With at most one parameter variable besides `var` the subresultant
/// remainder sequence is used directly; otherwise parameter variables are
/// specialized at integer points (skipping points that drop the leading
/// coefficient) and the result recovered by Newton interpolation, which
/// keeps the remainder sequences small. Interpolation runs to the full
/// Sylvester degree bound, so the result is unconditionally exact.
pub fn resultant(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
    interp_resultant(a, b, var, false)
}

/// Resultant with per-variable degrees estimated by random specialization
/// instead of the Sylvester bound. Interpolation stops once two fresh
/// evaluation points confirm the candidate, falling back to the full bound
/// on repeated mismatches. Orders of magnitude faster on inputs whose
/// resultant degree sits far below the bound; callers are expected to
/// cross-check the result (the pipeline validates degrees and square-free
/// parts against an independent Gröbner route).
pub fn resultant_probed(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
    interp_resultant(a, b, var, true)
}

fn interp_resultant(a: &MPoly, b: &MPoly, var: usize, probed: bool) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero(a.table());
    }
    let mut params: BTreeSet<usize> = a.support();
    params.extend(b.support());
    params.remove(&var);
    if params.len() <= 1 {
        return prs_resultant(a, b, var);
    }
    // interpolate the parameter variable with the smallest point count
    let bound_for = |s: usize| {
        a.degree_in(s) * b.degree_in(var) + b.degree_in(s) * a.degree_in(var)
    };
    let s = *params.iter().min_by_key(|&&s| bound_for(s)).unwrap();
    let bound = bound_for(s);
    let da = a.degree_in(var);
    let db = b.degree_in(var);
    let lc_a = a.coeff_of_power(var, da as super::Expo);
    let lc_b = b.coeff_of_power(var, db as super::Expo);
    let table = a.table().clone();

    let mut nodes: Vec<BigRational> = Vec::new();
    let mut values: Vec<MPoly> = Vec::new();
    let mut c: i64 = 0;
    let mut next_point = |nodes: &mut Vec<BigRational>,
                          values: &mut Vec<MPoly>|
     -> bool {
        loop {
            if nodes.len() > bound {
                return false;
            }
            let point = BigRational::from_integer(BigInt::from(c));
            c = if c > 0 { -c } else { -c + 1 };
            let mut bind = std::collections::HashMap::new();
            bind.insert(s, point.clone());
            if lc_a.eval_partial(&bind).is_zero() || lc_b.eval_partial(&bind).is_zero() {
                continue;
            }
            let av = a.eval_partial(&bind);
            let bv = b.eval_partial(&bind);
            values.push(interp_resultant(&av, &bv, var, probed));
            nodes.push(point);
            return true;
        }
    };

    let target = if probed {
        probe_degree(a, b, var, s, &lc_a, &lc_b).min(bound)
    } else {
        bound
    };
    while nodes.len() < target + 1 {
        if !next_point(&mut nodes, &mut values) {
            break;
        }
    }
    let mut candidate = newton_interpolate(&table, s, &nodes, &values);
    if probed {
        // confirm with fresh points; on mismatch absorb the point and retry
        let mut confirmations = 0;
        while confirmations < 2 && nodes.len() <= bound {
            let before = nodes.len();
            if !next_point(&mut nodes, &mut values) {
                break;
            }
            let mut bind = std::collections::HashMap::new();
            bind.insert(s, nodes[before].clone());
            if candidate.eval_partial(&bind) == values[before] {
                confirmations += 1;
            } else {
                confirmations = 0;
                candidate = newton_interpolate(&table, s, &nodes, &values);
            }
        }
    }
    candidate
}

/// Estimated degree of `Res(a, b)` in `s`: specialize every other parameter
/// at random small integers (keeping both leading coefficients alive) and
/// take the maximum over two trials.
fn probe_degree(
    a: &MPoly,
    b: &MPoly,
    var: usize,
    s: usize,
    lc_a: &MPoly,
    lc_b: &MPoly,
) -> usize {
    let mut params: BTreeSet<usize> = a.support();
    params.extend(b.support());
    params.remove(&var);
    params.remove(&s);
    let mut best = 0;
    let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
    for _trial in 0..2 {
        'attempt: for _ in 0..8 {
            let mut bind = std::collections::HashMap::new();
            for &v in &params {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let val = ((seed >> 33) % 19) as i64 - 9;
                bind.insert(v, BigRational::from_integer(BigInt::from(val)));
            }
            if lc_a.eval_partial(&bind).is_zero() || lc_b.eval_partial(&bind).is_zero() {
                continue 'attempt;
            }
            let r = prs_resultant(&a.eval_partial(&bind), &b.eval_partial(&bind), var);
            best = best.max(r.degree_in(s));
            break 'attempt;
        }
    }
    best
}

/// Newton-form interpolation of polynomial values at distinct rational
/// nodes, in the variable `s`.
fn newton_interpolate(
    table: &std::sync::Arc<crate::vars::VarTable>,
    s: usize,
    nodes: &[BigRational],
    values: &[MPoly],
) -> MPoly {
    let n = nodes.len();
    // divided differences, computed in place
    let mut dd: Vec<MPoly> = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = &nodes[i] - &nodes[i - level];
            let diff = dd[i].sub(&dd[i - 1]);
            dd[i] = diff.scale(&denom.recip());
        }
    }
    // Horner accumulation: result = dd[n-1]; result = result*(s-c_i) + dd[i]
    let var_s = MPoly::var_idx(table, s);
    let mut acc = dd[n - 1].clone();
    for i in (0..n - 1).rev() {
        let lin = var_s.sub(&MPoly::constant(table, nodes[i].clone()));
        acc = acc.mul(&lin).add(&dd[i]);
    }
    acc
}

/// Subresultant remainder-sequence resultant.
pub(crate) fn prs_resultant(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
    let table = a.table().clone();
    if a.is_zero() || b.is_zero() {
        return MPoly::zero(&table);
    }
    let mut f = UniView::new(a, var);
    let mut g = UniView::new(b, var);
    let mut sign_neg = false;
    if f.deg() < g.deg() {
        if f.deg() % 2 == 1 && g.deg() % 2 == 1 {
            sign_neg = !sign_neg;
        }
        std::mem::swap(&mut f, &mut g);
    }
    if g.deg() == 0 {
        let r = g.lead().pow(f.deg());
        return if sign_neg { r.neg() } else { r };
    }
    let mut div_g = MPoly::one(&table);
    let mut div_h = MPoly::one(&table);
    loop {
        let delta = f.deg() - g.deg();
        if f.deg() % 2 == 1 && g.deg() % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let mut r = f.prem(&g);
        if r.is_zero() {
            // positive-degree common factor
            return MPoly::zero(&table);
        }
        let scale = div_g.mul(&div_h.pow(delta));
        r = r.div_exact(&scale).expect("subresultant division is exact");
        f = g;
        g = r;
        div_g = f.lead().clone();
        div_h = if delta == 0 {
            div_h
        } else {
            div_g
                .pow(delta)
                .div_exact(&div_h.pow(delta - 1))
                .expect("subresultant h-update is exact")
        };
        if g.deg() == 0 {
            let res = g
                .lead()
                .pow(f.deg())
                .div_exact(&div_h.pow(f.deg() - 1))
                .expect("final subresultant division is exact");
            return if sign_neg { res.neg() } else { res };
        }
    }
}

/// Resultant via the Sylvester matrix and Bareiss elimination. Exponentially
/// more costly than the remainder sequence; kept as an independent oracle
/// for small degrees.
pub fn sylvester_resultant(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
    let table = a.table().clone();
    if a.is_zero() || b.is_zero() {
        return MPoly::zero(&table);
    }
    let fa = UniView::new(a, var);
    let fb = UniView::new(b, var);
    let m = fa.deg();
    let n = fb.deg();
    if m == 0 {
        return fa.lead().pow(n);
    }
    if n == 0 {
        return fb.lead().pow(m);
    }
    let size = m + n;
    let mut mat = vec![vec![MPoly::zero(&table); size]; size];
    for row in 0..n {
        for (k, c) in fa.coeffs.iter().enumerate() {
            mat[row][row + m - k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in fb.coeffs.iter().enumerate() {
            mat[n + row][row + n - k] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Fraction-free determinant of a square matrix of polynomials.
fn bareiss_det(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one(m[0][0].table());
    }
    let table = m[0][0].table().clone();
    let mut sign_neg = false;
    let mut prev = MPoly::one(&table);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign_neg = !sign_neg;
                }
                None => return MPoly::zero(&table),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MPoly::zero(&table);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_neg {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{gcd_multivar, parse_poly};
    use crate::vars::VarTable;

    fn p(s: &str) -> MPoly {
        parse_poly(&VarTable::standard(), s).unwrap()
    }

    #[test]
    fn linear_pair() {
        // Res_{t2}(t2 - h1, t2 - h2) = h1 - h2 (a - b with a = h1, b = h2)
        let t = VarTable::standard();
        let r = resultant(&p("t2-h1"), &p("t2-h2"), t.var("t2"));
        assert_eq!(r, p("h1-h2"));
    }

    #[test]
    fn sylvester_by_hand() {
        // Res_y(y^2 - x, y - 1) = 1 - x, oracle: 3x3 Sylvester determinant
        let t = VarTable::standard();
        let r = resultant(&p("y^2-x"), &p("y-1"), t.var("y"));
        assert_eq!(r, p("1-x"));
        assert_eq!(sylvester_resultant(&p("y^2-x"), &p("y-1"), t.var("y")), p("1-x"));
    }

    #[test]
    fn evaluation_property() {
        // Res_{t1}(t1 - h1, u*) = u*(h1) = 3 h1^2 for u* = h1^2 + h1 t1 + t1^2
        let t = VarTable::standard();
        let r = resultant(&p("t1-h1"), &p("h1^2+h1*t1+t1^2"), t.var("t1"));
        assert_eq!(r, p("3*h1^2"));
    }

    #[test]
    fn matches_sylvester_on_corpus() {
        let t = VarTable::standard();
        let v = t.var("t1");
        let cases = [
            ("t1^3 - h1*t1 + 1", "t1^2 + h2"),
            ("t1^4 + t2*t1 + 1", "t1^3 - t2"),
            ("2*t1^2 + 3*t1*t2 + t2^2", "t1^2 - t2^2"),
            ("t1^2 - 2", "t1^3 - t1 - 1"),
        ];
        for (fa, fb) in cases {
            let a = p(fa);
            let b = p(fb);
            assert_eq!(
                resultant(&a, &b, v),
                sylvester_resultant(&a, &b, v),
                "mismatch for ({fa}, {fb})"
            );
        }
    }

    #[test]
    fn vanishes_iff_common_factor() {
        let t = VarTable::standard();
        let v = t.var("t1");
        let common = p("t1 - h1");
        let a = common.mul(&p("t1 + h2"));
        let b = common.mul(&p("t1^2 + 1"));
        assert!(resultant(&a, &b, v).is_zero());
        let c = p("t1 + h2 + 1").mul(&p("t1 - 3"));
        let r = resultant(&a, &c, v);
        assert!(!r.is_zero());
        assert!(!gcd_multivar(&a, &c).depends_on(v));
    }

    #[test]
    fn constant_cases() {
        let t = VarTable::standard();
        let v = t.var("t1");
        assert_eq!(resultant(&p("h1"), &p("t1^2+1"), v), p("h1^2"));
        assert!(resultant(&MPoly::zero(&t), &p("t1"), v).is_zero());
    }
}
