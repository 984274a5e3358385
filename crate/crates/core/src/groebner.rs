//! Buchberger Gröbner bases over Q and over Q(h1,h2), with lexicographic
//! elimination, normal forms, Seidenberg radicals and Shape-Lemma
//! normalization of zero-dimensional ideals.
//!
//! Coefficients in Q(h1,h2) are handled fraction-free: the h-variables ride
//! along inside the polynomials, the monomial order only sees the main
//! variables, and every division is replaced by cross-multiplication, with
//! h-content stripped after each full reduction. A basis computed this way
//! is a Gröbner basis of the ideal over the fraction field Q(h1,h2).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;

use crate::poly::{gcd_multivar, squarefree_part, Expo, MPoly};
use crate::vars::VarTable;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("order does not eliminate the requested variables")]
    NotEliminating,
    #[error("ideal is not zero-dimensional in the requested variables")]
    NotZeroDimensional,
    #[error("shape position not attained within the retry budget")]
    ShapeNotAttained,
    #[error("empty generator list")]
    NoGenerators,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// Monomial order on the *main* variables listed in `priority` (strongest
/// first). Variables absent from the list are invisible to the order; the
/// Gröbner machinery treats them as coefficient-field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(priority: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority }
    }

    pub fn grevlex(priority: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, priority }
    }

    pub fn cmp(&self, a: &[Expo], b: &[Expo]) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.priority {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                let da: u64 = self.priority.iter().map(|&v| a[v] as u64).sum();
                let db: u64 = self.priority.iter().map(|&v| b[v] as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for &v in self.priority.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        // reversed: smaller exponent in the weakest variable wins
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Context for one basis computation: the order fixes both the main
/// variables and their ranking; everything else is coefficient field.
#[derive(Debug, Clone)]
pub struct GroebnerCtx {
    pub table: Arc<VarTable>,
    pub order: MonomialOrder,
}

impl GroebnerCtx {
    pub fn new(table: &Arc<VarTable>, order: MonomialOrder) -> Self {
        GroebnerCtx { table: table.clone(), order }
    }

    pub fn lex_over(table: &Arc<VarTable>, names: &[&str]) -> Self {
        let priority = names.iter().map(|n| table.var(n)).collect();
        Self::new(table, MonomialOrder::lex(priority))
    }

    pub fn main_vars(&self) -> &[usize] {
        &self.order.priority
    }
}

/// Reduced Gröbner basis; generators canonically normalized (coefficient
/// content stripped, integer content 1, positive ambient leading sign) and
/// sorted by leading monomial ascending.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ctx: GroebnerCtx,
    pub gens: Vec<MPoly>,
}

// ---------------------------------------------------------------------------
// working representation

/// Terms grouped by main monomial (full-arity exponent vector with
/// coefficient variables zeroed), kept descending in the order.
#[derive(Clone)]
struct GPoly {
    terms: Vec<(Vec<Expo>, MPoly)>,
}

impl GPoly {

    fn from_mpoly(f: &MPoly, ctx: &GroebnerCtx) -> Self {
        let main = ctx.main_vars();
        let mut groups: HashMap<Vec<Expo>, MPoly> = HashMap::new();
        for (e, c) in f.terms() {
            let mut key = vec![0; e.len()];
            let mut rest = e.clone();
            for &v in main {
                key[v] = e[v];
                rest[v] = 0;
            }
            let mono = MPoly::monomial(&ctx.table, rest, c.clone());
            match groups.get_mut(&key) {
                Some(acc) => *acc = acc.add(&mono),
                None => {
                    groups.insert(key, mono);
                }
            }
        }
        let mut terms: Vec<(Vec<Expo>, MPoly)> =
            groups.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ctx.order.cmp(&b.0, &a.0));
        GPoly { terms }
    }

    fn to_mpoly(&self, ctx: &GroebnerCtx) -> MPoly {
        let mut out = MPoly::zero(&ctx.table);
        for (mono, coeff) in &self.terms {
            let m = MPoly::monomial(&ctx.table, mono.clone(), num_traits::One::one());
            out = out.add(&coeff.mul(&m));
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &[Expo] {
        &self.terms[0].0
    }

    fn lc(&self) -> &MPoly {
        &self.terms[0].1
    }

    /// `scale * self - factor * x^shift * other`, merged in order.
    fn combine(
        &self,
        scale: &MPoly,
        factor: &MPoly,
        shift: &[Expo],
        other: &GPoly,
        ctx: &GroebnerCtx,
    ) -> GPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < other.terms.len() {
            let pick_left = if i == self.terms.len() {
                false
            } else if j == other.terms.len() {
                true
            } else {
                let shifted: Vec<Expo> = other.terms[j]
                    .0
                    .iter()
                    .zip(shift)
                    .map(|(a, b)| a + b)
                    .collect();
                match ctx.order.cmp(&self.terms[i].0, &shifted) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        let c = self.terms[i]
                            .1
                            .mul(scale)
                            .sub(&other.terms[j].1.mul(factor));
                        if !c.is_zero() {
                            out.push((shifted, c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
            };
            if pick_left {
                let c = self.terms[i].1.mul(scale);
                if !c.is_zero() {
                    out.push((self.terms[i].0.clone(), c));
                }
                i += 1;
            } else {
                let shifted: Vec<Expo> = other.terms[j]
                    .0
                    .iter()
                    .zip(shift)
                    .map(|(a, b)| a + b)
                    .collect();
                let c = other.terms[j].1.mul(factor).neg();
                if !c.is_zero() {
                    out.push((shifted, c));
                }
                j += 1;
            }
        }
        GPoly { terms: out }
    }

    /// Strip the gcd of the coefficients and the rational unit.
    fn canonicalize(&mut self, ctx: &GroebnerCtx) {
        if self.terms.is_empty() {
            return;
        }
        let mut content = MPoly::zero(&ctx.table);
        for (_, c) in &self.terms {
            content = gcd_multivar(&content, c);
            if content.is_one() {
                break;
            }
        }
        if !content.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = c.div_exact(&content).expect("content divides");
            }
        }
        // rational normalization for bit-exact output: integer content 1,
        // order-leading coefficient positively normalized (the fraction-free
        // stand-in for "monic over the coefficient field")
        let whole = self.to_mpoly(ctx);
        let mut unit = whole.normalization_unit();
        if num_traits::Signed::is_negative(&self.terms[0].1.scale(&unit.recip()).normalization_unit())
        {
            unit = -unit;
        }
        if !num_traits::One::is_one(&unit) {
            let inv = unit.recip();
            for (_, c) in self.terms.iter_mut() {
                *c = c.scale(&inv);
            }
        }
    }
}

fn mono_divides(a: &[Expo], b: &[Expo]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_lcm(a: &[Expo], b: &[Expo]) -> Vec<Expo> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mono_sub(a: &[Expo], b: &[Expo]) -> Vec<Expo> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mono_coprime(a: &[Expo], b: &[Expo]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

// ---------------------------------------------------------------------------
// reduction

/// Full fraction-free reduction of `f` by `reducers`. The result is the
/// normal form up to a nonzero coefficient-field unit.
fn reduce_full(f: GPoly, reducers: &[GPoly], ctx: &GroebnerCtx) -> GPoly {
    let (r, _) = reduce_tracked(f, reducers, ctx, false);
    r
}

/// Reduction that optionally tracks the accumulated multiplier `c` (a
/// polynomial in the coefficient variables) with `c * f ≡ result (mod I)`.
fn reduce_tracked(
    mut f: GPoly,
    reducers: &[GPoly],
    ctx: &GroebnerCtx,
    track: bool,
) -> (GPoly, MPoly) {
    let mut multiplier = MPoly::one(&ctx.table);
    let mut done: Vec<(Vec<Expo>, MPoly)> = Vec::new();
    'outer: while !f.is_zero() {
        let lm = f.lm().to_vec();
        for g in reducers {
            if g.is_zero() {
                continue;
            }
            if mono_divides(g.lm(), &lm) {
                let shift = mono_sub(&lm, g.lm());
                let flc = f.lc().clone();
                let glc = g.lc().clone();
                // shrink the cross-multipliers by their gcd
                let d = gcd_multivar(&flc, &glc);
                let scale = glc.div_exact(&d).unwrap();
                let factor = flc.div_exact(&d).unwrap();
                f = f.combine(&scale, &factor, &shift, g, ctx);
                if track {
                    multiplier = multiplier.mul(&scale);
                    for (_, c) in done.iter_mut() {
                        *c = c.mul(&scale);
                    }
                }
                continue 'outer;
            }
        }
        // head term irreducible: move it to the remainder
        done.push(f.terms.remove(0));
    }
    (GPoly { terms: done }, multiplier)
}

// ---------------------------------------------------------------------------
// Buchberger with Gebauer–Möller pair pruning and normal strategy

pub fn buchberger(gens: &[MPoly], ctx: &GroebnerCtx) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<GPoly> = Vec::new();
    let mut work: Vec<GPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| GPoly::from_mpoly(g, ctx))
        .collect();
    if work.is_empty() {
        return Err(GroebnerError::NoGenerators);
    }
    for g in work.iter_mut() {
        g.canonicalize(ctx);
    }
    // pairs keyed by lcm for the normal selection strategy
    let mut pairs: Vec<(usize, usize, Vec<Expo>)> = Vec::new();
    for g in work {
        let g = reduce_full(g, &basis, ctx);
        if !g.is_zero() {
            add_with_update(g, &mut basis, &mut pairs, ctx);
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let mut best = 0;
        for k in 1..pairs.len() {
            if ctx.order.cmp(&pairs[k].2, &pairs[best].2) == Ordering::Less {
                best = k;
            }
        }
        let (i, j, lcm) = pairs.swap_remove(best);
        let spoly = s_polynomial(&basis[i], &basis[j], &lcm, ctx);
        let mut red = reduce_full(spoly, &basis, ctx);
        if !red.is_zero() {
            red.canonicalize(ctx);
            add_with_update(red, &mut basis, &mut pairs, ctx);
        }
    }
    // inter-reduce: minimalize, then tail-reduce each generator
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && keep[i]
                && mono_divides(basis[j].lm(), basis[i].lm())
                && (basis[j].lm() != basis[i].lm() || j < i)
            {
                keep[i] = false;
            }
        }
    }
    let minimal: Vec<GPoly> = basis
        .into_iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(g, _)| g)
        .collect();
    let mut reduced: Vec<GPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<GPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = reduce_full(minimal[i].clone(), &others, ctx);
        r.canonicalize(ctx);
        debug_assert!(!r.is_zero());
        reduced.push(r);
    }
    reduced.sort_by(|a, b| ctx.order.cmp(a.lm(), b.lm()));
    Ok(GroebnerBasis {
        ctx: ctx.clone(),
        gens: reduced.iter().map(|g| g.to_mpoly(ctx)).collect(),
    })
}

fn s_polynomial(f: &GPoly, g: &GPoly, lcm: &[Expo], ctx: &GroebnerCtx) -> GPoly {
    let d = gcd_multivar(f.lc(), g.lc());
    let scale = g.lc().div_exact(&d).unwrap();
    let factor = f.lc().div_exact(&d).unwrap();
    let shift_f = mono_sub(lcm, f.lm());
    let shift_g = mono_sub(lcm, g.lm());
    // scale * x^shift_f * f - factor * x^shift_g * g
    let f_shifted = GPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    m.iter().zip(&shift_f).map(|(a, b)| a + b).collect(),
                    c.clone(),
                )
            })
            .collect(),
    };
    f_shifted.combine(&scale, &factor, &shift_g, g, ctx)
}

/// Gebauer–Möller update: prune the pair queue, then append the pairs of the
/// new element that survive the lcm and coprimality criteria.
fn add_with_update(
    t: GPoly,
    basis: &mut Vec<GPoly>,
    pairs: &mut Vec<(usize, usize, Vec<Expo>)>,
    ctx: &GroebnerCtx,
) {
    let t_idx = basis.len();
    let t_lm = t.lm().to_vec();
    // old-pair criterion: drop (i,j) when lm(t) strictly refines their lcm
    pairs.retain(|(i, j, lcm)| {
        !(mono_divides(&t_lm, lcm)
            && mono_lcm(basis[*i].lm(), &t_lm) != *lcm
            && mono_lcm(basis[*j].lm(), &t_lm) != *lcm)
    });
    // candidate new pairs
    let mut cand: Vec<(usize, Vec<Expo>)> = (0..basis.len())
        .map(|i| (i, mono_lcm(basis[i].lm(), &t_lm)))
        .collect();
    // among equal or divisible lcms keep a minimal representative
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if mono_divides(&cand[b].1, &cand[a].1)
                && (cand[b].1 != cand[a].1 || b < a)
            {
                keep[a] = false;
                break;
            }
        }
    }
    for (k, (i, lcm)) in cand.drain(..).enumerate() {
        if !keep[k] {
            continue;
        }
        // Buchberger's first criterion
        if mono_coprime(basis[i].lm(), &t_lm) {
            continue;
        }
        pairs.push((i, t_idx, lcm));
    }
    let _ = ctx;
    basis.push(t);
}

// ---------------------------------------------------------------------------
// derived operations

impl GroebnerBasis {
    fn gpolys(&self) -> Vec<GPoly> {
        self.gens
            .iter()
            .map(|g| GPoly::from_mpoly(g, &self.ctx))
            .collect()
    }

    /// Normal form of `f`, returned as `(r, c)` with `c` a nonzero polynomial
    /// in the coefficient variables such that `c*f ≡ r mod ⟨self⟩`; `r` is
    /// zero exactly when `f` is in the ideal.
    pub fn normal_form(&self, f: &MPoly) -> (MPoly, MPoly) {
        let g = GPoly::from_mpoly(f, &self.ctx);
        let (r, c) = reduce_tracked(g, &self.gpolys(), &self.ctx, true);
        (r.to_mpoly(&self.ctx), c)
    }

    /// Membership test.
    pub fn reduces_to_zero(&self, f: &MPoly) -> bool {
        let g = GPoly::from_mpoly(f, &self.ctx);
        reduce_full(g, &self.gpolys(), &self.ctx).is_zero()
    }

    /// Generators of `⟨self⟩ ∩ K[keep]`. Requires a lex order ranking every
    /// eliminated main variable above every kept one.
    pub fn elimination_ideal(&self, keep: &[usize]) -> Result<Vec<MPoly>, GroebnerError> {
        if self.ctx.order.kind != OrderKind::Lex {
            return Err(GroebnerError::NotEliminating);
        }
        let keep_set: std::collections::HashSet<usize> = keep.iter().copied().collect();
        let eliminated: Vec<usize> = self
            .ctx
            .order
            .priority
            .iter()
            .copied()
            .filter(|v| !keep_set.contains(v))
            .collect();
        // every eliminated variable must outrank every kept variable
        let first_kept = self
            .ctx
            .order
            .priority
            .iter()
            .position(|v| keep_set.contains(v))
            .unwrap_or(self.ctx.order.priority.len());
        for (pos, v) in self.ctx.order.priority.iter().enumerate() {
            if eliminated.contains(v) && pos > first_kept {
                return Err(GroebnerError::NotEliminating);
            }
        }
        Ok(self
            .gens
            .iter()
            .filter(|g| eliminated.iter().all(|&v| !g.depends_on(v)))
            .cloned()
            .collect())
    }

    /// Check every S-polynomial of the basis reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let gp = self.gpolys();
        for i in 0..gp.len() {
            for j in i + 1..gp.len() {
                let lcm = mono_lcm(gp[i].lm(), gp[j].lm());
                let s = s_polynomial(&gp[i], &gp[j], &lcm, &self.ctx);
                if !reduce_full(s, &gp, &self.ctx).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Radical of a zero-dimensional ideal in the two variables `vars`, obtained
/// by adjoining the square-free parts of the univariate eliminants
/// (Seidenberg). Coefficient variables pass through untouched.
pub fn radical_zero_dim(
    gens: &[MPoly],
    vars: (usize, usize),
    table: &Arc<VarTable>,
) -> Result<Vec<MPoly>, GroebnerError> {
    let (a, b) = vars;
    let elim_a = eliminant(gens, b, a, table)?;
    let elim_b = eliminant(gens, a, b, table)?;
    let mut all = gens.to_vec();
    all.push(squarefree_part(&elim_a, a));
    all.push(squarefree_part(&elim_b, b));
    let ctx = GroebnerCtx::new(table, MonomialOrder::lex(vec![b, a]));
    Ok(buchberger(&all, &ctx)?.gens)
}

/// Generator of `⟨gens⟩ ∩ K[keep_var]` for a zero-dimensional ideal in
/// `{elim_var, keep_var}`.
fn eliminant(
    gens: &[MPoly],
    elim_var: usize,
    keep_var: usize,
    table: &Arc<VarTable>,
) -> Result<MPoly, GroebnerError> {
    let ctx = GroebnerCtx::new(table, MonomialOrder::lex(vec![elim_var, keep_var]));
    let gb = buchberger(gens, &ctx)?;
    gb.gens
        .iter()
        .find(|g| !g.depends_on(elim_var) && g.depends_on(keep_var))
        .cloned()
        .or_else(|| {
            // ideal ⟨1⟩ counts as zero-dimensional with trivial eliminant
            gb.gens.iter().find(|g| g.is_constant()).cloned()
        })
        .ok_or(GroebnerError::NotZeroDimensional)
}

/// Invertible linear change of two variables, with integer matrix and exact
/// rational inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearChange {
    pub vars: (usize, usize),
    pub matrix: [[i64; 2]; 2],
}

impl LinearChange {
    pub fn identity(vars: (usize, usize)) -> Self {
        LinearChange { vars, matrix: [[1, 0], [0, 1]] }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == [[1, 0], [0, 1]]
    }

    pub fn det(&self) -> i64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }

    /// Substitute `a -> m00*a + m01*b, b -> m10*a + m11*b` into `f`.
    pub fn apply(&self, f: &MPoly) -> MPoly {
        let table = f.table().clone();
        let (a, b) = self.vars;
        let va = MPoly::var_idx(&table, a);
        let vb = MPoly::var_idx(&table, b);
        let m = self.matrix;
        let new_a = va.scale(&rat(m[0][0])).add(&vb.scale(&rat(m[0][1])));
        let new_b = va.scale(&rat(m[1][0])).add(&vb.scale(&rat(m[1][1])));
        let mut bindings = HashMap::new();
        bindings.insert(a, new_a);
        bindings.insert(b, new_b);
        f.subst_poly(&bindings)
    }

    /// Image of a point under the *inverse* matrix: the coordinates, in the
    /// substituted system, of a point given in original coordinates.
    pub fn pullback_point(&self, p: (&MPoly, &MPoly)) -> (MPoly, MPoly) {
        let det = self.det();
        assert!(det != 0);
        let m = self.matrix;
        // inverse = 1/det * [[m11, -m01], [-m10, m00]]
        let d = rat(det).recip();
        let x = p.0.scale(&rat(m[1][1])).sub(&p.1.scale(&rat(m[0][1]))).scale(&d);
        let y = p.1.scale(&rat(m[0][0])).sub(&p.0.scale(&rat(m[1][0]))).scale(&d);
        (x, y)
    }
}

fn rat(n: i64) -> num_rational::BigRational {
    num_rational::BigRational::from_integer(num_bigint::BigInt::from(n))
}

/// Lex basis of a radical zero-dimensional ideal in shape position:
/// `{u(a), b - v(a)}`. When the input is not in general position a random
/// invertible change of `(a, b)` is applied (integer coefficients in
/// [-10, 10], 20 retries) and returned alongside the basis.
pub struct ShapeBasis {
    /// Square-free univariate polynomial in the first variable.
    pub u: MPoly,
    /// Second coordinate as a fraction `v_num / v_den` with `v_den` free of
    /// both main variables.
    pub v_num: MPoly,
    pub v_den: MPoly,
    pub change: LinearChange,
}

pub fn shape_basis(
    gens: &[MPoly],
    vars: (usize, usize),
    table: &Arc<VarTable>,
    rng: &mut impl Rng,
) -> Result<ShapeBasis, GroebnerError> {
    let (a, b) = vars;
    let ctx = GroebnerCtx::new(table, MonomialOrder::lex(vec![b, a]));
    let mut attempt = 0;
    loop {
        let change = if attempt == 0 {
            LinearChange::identity(vars)
        } else {
            loop {
                let m = [
                    [rng.gen_range(-10..=10), rng.gen_range(-10..=10)],
                    [rng.gen_range(-10..=10), rng.gen_range(-10..=10)],
                ];
                let c = LinearChange { vars, matrix: m };
                if c.det() != 0 {
                    break c;
                }
            }
        };
        let changed: Vec<MPoly> = gens.iter().map(|g| change.apply(g)).collect();
        let gb = buchberger(&changed, &ctx)?;
        if let Some(shape) = try_shape(&gb, vars) {
            let (u, v_num, v_den) = shape;
            return Ok(ShapeBasis { u, v_num, v_den, change });
        }
        attempt += 1;
        if attempt > 20 {
            return Err(GroebnerError::ShapeNotAttained);
        }
    }
}

fn try_shape(gb: &GroebnerBasis, vars: (usize, usize)) -> Option<(MPoly, MPoly, MPoly)> {
    let (a, b) = vars;
    if gb.gens.len() != 2 {
        return None;
    }
    let u = &gb.gens[0];
    let second = &gb.gens[1];
    if u.depends_on(b) || !u.depends_on(a) {
        return None;
    }
    if second.degree_in(b) != 1 {
        return None;
    }
    // second = den(b-part)*b - num with den free of a and b
    let den = second.coeff_of_power(b, 1);
    if den.depends_on(a) || den.depends_on(b) {
        return None;
    }
    let num = second.coeff_of_power(b, 0).neg();
    if num.degree_in(a) >= u.degree_in(a) {
        return None;
    }
    Some((u.clone(), num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn p(s: &str) -> MPoly {
        parse_poly(&t(), s).unwrap()
    }

    #[test]
    fn already_a_basis() {
        let tab = t();
        let ctx = GroebnerCtx::lex_over(&tab, &["t2", "t1"]);
        let gb = buchberger(&[p("t1"), p("t2")], &ctx).unwrap();
        assert_eq!(gb.gens, vec![p("t1"), p("t2")]);
        assert!(gb.is_groebner());
    }

    #[test]
    fn elimination_by_hand() {
        // <t2 - t1^2, t1*t2 - 1> lex t1 < t2 contains t1^3 - 1
        let tab = t();
        let ctx = GroebnerCtx::lex_over(&tab, &["t2", "t1"]);
        let gb = buchberger(&[p("t2 - t1^2"), p("t1*t2 - 1")], &ctx).unwrap();
        assert!(gb.gens.contains(&p("t1^3 - 1")));
        // oracle: substitute t2 = t1^2 into t1*t2 - 1
        assert!(gb.reduces_to_zero(&p("t1^3 - 1")));
        let elim = gb.elimination_ideal(&[tab.var("t1")]).unwrap();
        assert_eq!(elim, vec![p("t1^3 - 1")]);
    }

    #[test]
    fn elimination_of_saturation_variable() {
        let tab = t();
        let ctx = GroebnerCtx::lex_over(&tab, &["w", "t2", "t1"]);
        let gb = buchberger(&[p("t2 - t1^2"), p("w*t2 - 1")], &ctx).unwrap();
        let elim = gb
            .elimination_ideal(&[tab.var("t1"), tab.var("t2")])
            .unwrap();
        assert_eq!(elim, vec![p("t2 - t1^2")]);
        // eliminating nothing returns the same basis
        let all = gb
            .elimination_ideal(&[tab.var("t1"), tab.var("t2"), tab.var("w")])
            .unwrap();
        assert_eq!(all.len(), gb.gens.len());
    }

    #[test]
    fn elimination_requires_compatible_order() {
        let tab = t();
        let ctx = GroebnerCtx::lex_over(&tab, &["t1", "t2"]);
        let gb = buchberger(&[p("t1")], &ctx).unwrap();
        assert_eq!(
            gb.elimination_ideal(&[tab.var("t1")]),
            Err(GroebnerError::NotEliminating)
        );
    }

    #[test]
    fn normal_form_shape_substitution() {
        let tab = t();
        let ctx = GroebnerCtx::lex_over(&tab, &["t2", "t1"]);
        // G* = { u*, t2 - v } with u* = h1^2 + h1 t1 + t1^2, v = h2
        let gb = buchberger(&[p("h1^2 + h1*t1 + t1^2"), p("t2 - h2")], &ctx).unwrap();
        let (r, c) = gb.normal_form(&p("t2"));
        assert_eq!(r, p("h2").mul(&c));
        let (r0, _) = gb.normal_form(&p("h1^2 + h1*t1 + t1^2"));
        assert!(r0.is_zero());
    }

    #[test]
    fn normal_form_invariance_under_ideal_shift() {
        let tab = t();
        let ctx = GroebnerCtx::lex_over(&tab, &["t2", "t1"]);
        let gb = buchberger(&[p("t1^2 - h1"), p("t2 - t1")], &ctx).unwrap();
        let f = p("t1*t2 + h2");
        let shift = p("t1^2 - h1").mul(&p("t2 + 3"));
        let (r1, c1) = gb.normal_form(&f);
        let (r2, c2) = gb.normal_form(&f.add(&shift));
        // equality as Q(h)-normal forms: r1/c1 = r2/c2
        assert_eq!(r1.mul(&c2), r2.mul(&c1));
    }

    #[test]
    fn generators_are_members() {
        let tab = t();
        let ctx = GroebnerCtx::lex_over(&tab, &["w", "t2", "t1"]);
        let gens = [p("t2*h1 - t1^2"), p("w*t1 - h2"), p("t1^3 - h1*h2")];
        let gb = buchberger(&gens, &ctx).unwrap();
        for g in &gens {
            assert!(gb.reduces_to_zero(g));
        }
        assert!(gb.is_groebner());
    }

    #[test]
    fn radical_examples() {
        let tab = t();
        let (a, b) = (tab.var("t1"), tab.var("t2"));
        let rad = radical_zero_dim(&[p("t1^2"), p("t2")], (a, b), &tab).unwrap();
        assert_eq!(rad, vec![p("t1"), p("t2")]);
        let rad2 =
            radical_zero_dim(&[p("(t1-h1)^2"), p("t2-h2")], (a, b), &tab).unwrap();
        assert_eq!(rad2, vec![p("t1-h1"), p("t2-h2")]);
    }

    #[test]
    fn shape_basis_identity_change() {
        let tab = t();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let s = shape_basis(
            &[p("t1^3 - h1^3"), p("t2 - h2")],
            (tab.var("t1"), tab.var("t2")),
            &tab,
            &mut rng,
        )
        .unwrap();
        assert!(s.change.is_identity());
        assert_eq!(s.u, p("t1^3 - h1^3"));
        assert_eq!(s.v_num, p("h2"));
        assert!(s.v_den.is_one());
    }

    #[test]
    fn shape_basis_needs_change() {
        // two points sharing the t1-coordinate: (h1, h2) and (h1, h2+1)
        let tab = t();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let gens = [p("t1 - h1"), p("(t2 - h2)*(t2 - h2 - 1)")];
        let s = shape_basis(&gens, (tab.var("t1"), tab.var("t2")), &tab, &mut rng).unwrap();
        assert!(!s.change.is_identity());
        assert_eq!(s.u.degree_in(tab.var("t1")), 2);
        // u square-free
        let g = gcd_multivar(&s.u, &s.u.derivative(tab.var("t1")));
        assert!(!g.depends_on(tab.var("t1")));
        // original generators vanish on the shape description:
        // substitute the recorded change into the generators, then reduce
        let ctx = GroebnerCtx::lex_over(&tab, &["t2", "t1"]);
        let den_t2 = s.v_den.mul(&MPoly::var(&tab, "t2"));
        let shape_gens = [s.u.clone(), den_t2.sub(&s.v_num)];
        let gb = buchberger(&shape_gens, &ctx).unwrap();
        for g in &gens {
            let changed = s.change.apply(g);
            assert!(gb.reduces_to_zero(&changed));
        }
    }

    #[test]
    fn grevlex_ordering_sanity() {
        let tab = t();
        let ord = MonomialOrder::grevlex(vec![tab.var("t1"), tab.var("t2"), tab.var("t3")]);
        let e = |s: &str| {
            let poly = p(s);
            poly.leading_term().unwrap().0.clone()
        };
        // t1*t3 < t2^2 in grevlex with t1 > t2 > t3
        assert_eq!(ord.cmp(&e("t1*t3"), &e("t2^2")), Ordering::Less);
        assert_eq!(ord.cmp(&e("t1^2"), &e("t1*t2")), Ordering::Greater);
        assert_eq!(ord.cmp(&e("t1*t2"), &e("t3^2")), Ordering::Greater);
    }
}
