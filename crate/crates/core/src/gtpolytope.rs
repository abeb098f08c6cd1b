//! Gelfand-Tsetlin polytopes: membership, volume, exact spectral and MCMC
//! uniform samplers, and the projection density of the top-minus-one level.
//!
//! Level layout. For F = C the pattern stores x^(1), ..., x^(n) with k
//! coordinates at level k. For F = R level k has floor(k/2) coordinates, the
//! last one signed on even levels. For F = H the half-levels are interleaved:
//! x^(1/2), x^(1), x^(3/2), ..., x^(n), where x^(k) and x^(k-1/2) both have k
//! nonnegative coordinates.

use rand::Rng as RngTrait;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::ensembles::{conjugate, minor_process, omega, sample_haar_unitary, RadialPoint};
use crate::error::{Error, Result};
use crate::field::{Field, FieldContext};
use crate::weyl::asym_dim;

/// Tolerance slack for interlacing checks, absorbing eigensolver noise.
pub const INTERLACE_SLACK: f64 = 1e-12;

/// A (possibly half-level) Gelfand-Tsetlin array.
#[derive(Debug, Clone, PartialEq)]
pub struct GTPattern {
    pub ctx: FieldContext,
    pub levels: Vec<Vec<f64>>,
}

impl GTPattern {
    pub fn new(ctx: FieldContext, levels: Vec<Vec<f64>>) -> Result<Self> {
        let expect = expected_shape(&ctx);
        if levels.len() != expect.len() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} pattern levels, got {}",
                expect.len(),
                levels.len()
            )));
        }
        for (idx, (lv, &sz)) in levels.iter().zip(&expect).enumerate() {
            if lv.len() != sz {
                return Err(Error::ShapeMismatch(format!(
                    "level index {idx}: expected {sz} coordinates, got {}",
                    lv.len()
                )));
            }
        }
        Ok(GTPattern { ctx, levels })
    }

    /// Integer level k, 1-based.
    pub fn level(&self, k: usize) -> &[f64] {
        match self.ctx.field {
            Field::C | Field::R => &self.levels[k - 1],
            Field::H => &self.levels[2 * k - 1],
        }
    }

    /// Half-level k - 1/2 for F = H, 1-based in k.
    pub fn half_level(&self, k: usize) -> &[f64] {
        assert_eq!(self.ctx.field, Field::H);
        &self.levels[2 * k - 2]
    }

    /// Top row, i.e. the radial part of the full matrix.
    pub fn top(&self) -> &[f64] {
        self.levels.last().unwrap()
    }

    /// All coordinates flattened in level order, for CSV output.
    pub fn flat(&self) -> Vec<f64> {
        self.levels.iter().flatten().copied().collect()
    }
}

impl Serialize for GTPattern {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GTPattern", 3)?;
        st.serialize_field("field", self.ctx.field.name())?;
        st.serialize_field("n", &self.ctx.n)?;
        st.serialize_field("levels", &self.levels)?;
        st.end()
    }
}

/// Sizes of the stored levels, bottom to top.
fn expected_shape(ctx: &FieldContext) -> Vec<usize> {
    match ctx.field {
        Field::C => (1..=ctx.n).collect(),
        Field::R => (1..=ctx.n).map(|k| k / 2).collect(),
        Field::H => (1..=ctx.n).flat_map(|k| [k, k]).collect(),
    }
}

/// A polytope specification: the context and the fixed top row.
#[derive(Debug, Clone)]
pub struct GTSpec {
    pub top: RadialPoint,
}

impl GTSpec {
    pub fn new(top: RadialPoint) -> Self {
        GTSpec { top }
    }

    pub fn ctx(&self) -> FieldContext {
        self.top.ctx
    }

    /// Number of free coordinates of the polytope.
    pub fn dim(&self) -> usize {
        let shape = expected_shape(&self.ctx());
        shape.iter().sum::<usize>() - shape.last().unwrap()
    }
}

/// Interlacing x >= y >= x (shifted) for len(x) = len(y) + 1.
fn interlaced_over(x: &[f64], y: &[f64], slack: f64) -> bool {
    debug_assert_eq!(x.len(), y.len() + 1);
    y.iter().enumerate().all(|(i, &yi)| x[i] + slack >= yi && yi + slack >= x[i + 1])
}

/// Same-length interlacing x_1 >= y_1 >= x_2 >= ... >= x_k >= y_k.
fn interlaced_same(x: &[f64], y: &[f64], slack: f64) -> bool {
    debug_assert_eq!(x.len(), y.len());
    let k = x.len();
    (0..k).all(|i| x[i] + slack >= y[i] && (i + 1 >= k || y[i] + slack >= x[i + 1]))
}

/// Absolute-value vector with the last coordinate folded, as used by the
/// type R interlacing chain.
fn abs_last(v: &[f64]) -> Vec<f64> {
    let mut w = v.to_vec();
    if let Some(last) = w.last_mut() {
        *last = last.abs();
    }
    w
}

/// Membership test: all interlacing and positivity constraints hold within
/// the slack, and the top level equals the specification.
pub fn gt_contains(spec: &GTSpec, p: &GTPattern) -> Result<bool> {
    if p.ctx != spec.ctx() {
        return Err(Error::ShapeMismatch("pattern context differs from spec".into()));
    }
    let slack = INTERLACE_SLACK;
    let top_ok = p
        .top()
        .iter()
        .zip(&spec.top.coords)
        .all(|(a, b)| (a - b).abs() <= slack.max(1e-9 * b.abs()));
    if !top_ok {
        return Ok(false);
    }
    let ctx = spec.ctx();
    let ok = match ctx.field {
        Field::C => (2..=ctx.n).all(|k| interlaced_over(p.level(k), p.level(k - 1), slack)),
        Field::H => {
            let nonneg = p.levels.iter().flatten().all(|&x| x >= -slack);
            nonneg
                && (1..=ctx.n).all(|k| {
                    let upper = interlaced_same(p.level(k), p.half_level(k), slack);
                    let lower =
                        k == 1 || interlaced_over(p.half_level(k), p.level(k - 1), slack);
                    upper && lower
                })
        }
        Field::R => {
            // Odd levels are nonnegative; even levels may have a signed last
            // coordinate. The chain runs on absolute values.
            let mut ok = true;
            for k in 2..=ctx.n {
                let hi = abs_last(p.level(k));
                let lo = abs_last(p.level(k - 1));
                ok &= if hi.len() == lo.len() {
                    interlaced_same(&hi, &lo, slack)
                } else {
                    interlaced_over(&hi, &lo, slack)
                };
                if k % 2 == 1 {
                    ok &= p.level(k).iter().all(|&x| x >= -slack);
                }
            }
            ok
        }
    };
    Ok(ok)
}

/// Volume of GT_n(lambda): the asymptotic dimension d_n(lambda).
pub fn gt_volume(spec: &GTSpec) -> f64 {
    asym_dim(&spec.top)
}

/// Exact uniform sample by the spectral route: conjugate the chamber
/// representative by a Haar unitary and take the minor process. For F = H the
/// full pattern (with half-levels) is produced through the odd orthogonal
/// construction of twice-plus-one size.
pub fn sample_uniform_spectral<R: RngTrait>(spec: &GTSpec, rng: &mut R) -> Result<GTPattern> {
    let ctx = spec.ctx();
    match ctx.field {
        Field::C | Field::R => {
            let u = sample_haar_unitary(ctx, rng);
            minor_process(&conjugate(&u, &omega(&spec.top)))
        }
        Field::H => {
            let n = ctx.n;
            let rctx = FieldContext::new(Field::R, 2 * n + 1)?;
            let rtop = RadialPoint::new(rctx, spec.top.coords.clone())?;
            let u = sample_haar_unitary(rctx, rng);
            let rpat = minor_process(&conjugate(&u, &omega(&rtop)))?;
            // Levels 2r and 2r+1 of the odd orthogonal pattern become the
            // half-level r - 1/2 and the level r of the quaternionic one.
            let mut levels = Vec::with_capacity(2 * n);
            for r in 1..=n {
                levels.push(abs_last(rpat.level(2 * r)));
                levels.push(rpat.level(2 * r + 1).to_vec());
            }
            GTPattern::new(ctx, levels)
        }
    }
}

/// One linear constraint sum_i a_i x_i <= rhs over the flattened free
/// coordinates.
struct LinCon {
    terms: Vec<(usize, f64)>,
    rhs: f64,
}

/// Free-coordinate layout and the constraint list of the polytope.
struct WalkGeometry {
    offsets: Vec<usize>,
    sizes: Vec<usize>,
    cons: Vec<LinCon>,
}

/// A coordinate reference: either a free variable or a constant from the top
/// row.
#[derive(Clone, Copy)]
enum Ref {
    Var(usize),
    Const(f64),
}

/// a >= b, with constants folded into the right-hand side.
fn push_ge(cons: &mut Vec<LinCon>, a: Ref, b: Ref) {
    let mut terms = Vec::new();
    let mut rhs = 0.0;
    match b {
        Ref::Var(i) => terms.push((i, 1.0)),
        Ref::Const(c) => rhs -= c,
    }
    match a {
        Ref::Var(i) => terms.push((i, -1.0)),
        Ref::Const(c) => rhs += c,
    }
    if !terms.is_empty() {
        cons.push(LinCon { terms, rhs });
    }
}

/// a >= -b, the second half of an absolute-value bound a >= |b|.
fn push_ge_neg(cons: &mut Vec<LinCon>, a: Ref, b: Ref) {
    let mut terms = Vec::new();
    let mut rhs = 0.0;
    match b {
        Ref::Var(i) => terms.push((i, -1.0)),
        Ref::Const(c) => rhs += c,
    }
    match a {
        Ref::Var(i) => terms.push((i, -1.0)),
        Ref::Const(c) => rhs += c,
    }
    if !terms.is_empty() {
        cons.push(LinCon { terms, rhs });
    }
}

fn build_geometry(spec: &GTSpec) -> WalkGeometry {
    let ctx = spec.ctx();
    let shape = expected_shape(&ctx);
    let nfree = shape.len() - 1;
    let mut offsets = vec![0usize; nfree];
    let mut acc = 0usize;
    for i in 0..nfree {
        offsets[i] = acc;
        acc += shape[i];
    }
    let var = |lvl: usize, i: usize| -> Ref {
        if lvl < nfree {
            Ref::Var(offsets[lvl] + i)
        } else {
            Ref::Const(spec.top.coords[i])
        }
    };
    let mut cons: Vec<LinCon> = Vec::new();
    match ctx.field {
        Field::C => {
            for k in 2..=ctx.n {
                let (u, l) = (k - 1, k - 2); // stored level indices
                for i in 0..shape[l] {
                    push_ge(&mut cons, var(u, i), var(l, i));
                    push_ge(&mut cons, var(l, i), var(u, i + 1));
                }
            }
        }
        Field::H => {
            // Chain x^(k) >= x^(k-1/2) >= x^(k-1), all nonnegative. Stored
            // level index of x^(k) is 2k-1, of x^(k-1/2) is 2k-2.
            for k in 1..=ctx.n {
                let int = 2 * k - 1;
                let half = 2 * k - 2;
                for i in 0..k {
                    push_ge(&mut cons, var(int, i), var(half, i));
                    if i + 1 < k {
                        push_ge(&mut cons, var(half, i), var(int, i + 1));
                    }
                }
                push_ge(&mut cons, var(half, k - 1), Ref::Const(0.0));
                if k > 1 {
                    let below = 2 * k - 3;
                    for i in 0..(k - 1) {
                        push_ge(&mut cons, var(half, i), var(below, i));
                        push_ge(&mut cons, var(below, i), var(half, i + 1));
                    }
                }
            }
        }
        Field::R => {
            // |x^(k)| interlaces |x^(k-1)|; the signed last coordinate of an
            // even level produces two linear constraints per bound.
            for k in 2..=ctx.n {
                let (u, l) = (k - 1, k - 2);
                let m = shape[u];
                if k % 2 == 0 {
                    // Even level k (m coords, last signed) sits under odd
                    // level k-1 with m-1 nonnegative coords:
                    // u_1 >= l_1 >= u_2 >= ... >= l_{m-1} >= |u_m|.
                    for i in 0..m.saturating_sub(1) {
                        push_ge(&mut cons, var(u, i), var(l, i));
                        if i + 1 < m - 1 {
                            push_ge(&mut cons, var(l, i), var(u, i + 1));
                        } else {
                            push_ge(&mut cons, var(l, i), var(u, m - 1));
                            push_ge_neg(&mut cons, var(l, i), var(u, m - 1));
                        }
                    }
                } else {
                    // Odd level k (m nonnegative coords) over even level k-1
                    // (m coords, last signed):
                    // u_1 >= l_1 >= u_2 >= ... >= u_m >= |l_m|.
                    for i in 0..m {
                        if i < m - 1 {
                            push_ge(&mut cons, var(u, i), var(l, i));
                            push_ge(&mut cons, var(l, i), var(u, i + 1));
                        } else {
                            push_ge(&mut cons, var(u, i), var(l, i));
                            push_ge_neg(&mut cons, var(u, i), var(l, i));
                        }
                    }
                }
            }
        }
    }
    WalkGeometry { offsets, sizes: shape[..nfree].to_vec(), cons }
}

/// Midpoint start for the walk, built level by level from the top.
fn midpoint_start(spec: &GTSpec) -> Result<Vec<f64>> {
    let ctx = spec.ctx();
    let mut levels: Vec<Vec<f64>> = Vec::new(); // built top-down, reversed at the end
    let top = spec.top.coords.clone();
    match ctx.field {
        Field::C => {
            let mut upper = top;
            for k in (1..ctx.n).rev() {
                let cur: Vec<f64> = (0..k).map(|i| 0.5 * (upper[i] + upper[i + 1])).collect();
                levels.push(cur.clone());
                upper = cur;
            }
        }
        Field::H => {
            let mut upper = top;
            for k in (1..=ctx.n).rev() {
                // half-level below integer level k
                let mut half: Vec<f64> = Vec::with_capacity(k);
                for i in 0..k {
                    let lo = if i + 1 < k { upper[i + 1] } else { 0.0 };
                    half.push(0.5 * (upper[i] + lo));
                }
                if k < ctx.n {
                    levels.push(upper.clone());
                }
                levels.push(half.clone());
                if k > 1 {
                    upper = (0..k - 1).map(|i| 0.5 * (half[i] + half[i + 1])).collect();
                }
            }
        }
        Field::R => {
            let mut upper = abs_last(&top); // folded values; signs only enter at even last coords
            for k in (2..ctx.n).rev() {
                let m = k / 2;
                let cur: Vec<f64> = if k % 2 == 0 {
                    // even below odd: sizes equal; last coordinate midpoint of
                    // [-w_m, w_m] is zero.
                    let mut v: Vec<f64> =
                        (0..m - 1).map(|i| 0.5 * (upper[i] + upper[i + 1])).collect();
                    v.push(0.0);
                    v
                } else {
                    // odd below even: sizes (m, m); z_i in [y_{i+1}, y_i],
                    // z_m in [|y_{m+1}|...]: lower has m coords over upper m+1?
                    let mm = m;
                    let mut v: Vec<f64> = Vec::with_capacity(mm);
                    for i in 0..mm {
                        let lo = if i + 1 < upper.len() { upper[i + 1].abs() } else { 0.0 };
                        v.push(0.5 * (upper[i] + lo));
                    }
                    v
                };
                levels.push(cur.clone());
                upper = cur;
            }
            levels.push(Vec::new()); // level 1 is empty
        }
    }
    levels.reverse();
    Ok(levels.into_iter().flatten().collect())
}

/// Hit-and-run sampler state over the free coordinates of a GT polytope.
pub struct WalkSampler {
    spec: GTSpec,
    geom: WalkGeometry,
    state: Vec<f64>,
    burned_in: bool,
}

/// Default burn-in: 50 moves per free coordinate.
pub fn default_burn_in(spec: &GTSpec) -> usize {
    50 * spec.dim()
}

/// Moves between returned samples.
pub const WALK_THINNING: usize = 10;

impl WalkSampler {
    pub fn new(spec: GTSpec) -> Result<Self> {
        if !spec.top.is_interior() {
            return Err(Error::DegeneratePolytope);
        }
        let geom = build_geometry(&spec);
        let state = midpoint_start(&spec)?;
        Ok(WalkSampler { spec, geom, state, burned_in: false })
    }

    fn step<R: RngTrait>(&mut self, rng: &mut R) {
        let d = self.state.len();
        if d == 0 {
            return;
        }
        // Uniform direction on the sphere.
        use rand_distr::Distribution as _;
        let mut dir = vec![0.0f64; d];
        let mut norm = 0.0f64;
        for v in dir.iter_mut() {
            let g: f64 = rand_distr::StandardNormal.sample(rng);
            *v = g;
            norm += g * g;
        }
        let norm = norm.sqrt();
        for v in dir.iter_mut() {
            *v /= norm;
        }
        // Chord through the current point.
        let mut tmin = f64::NEG_INFINITY;
        let mut tmax = f64::INFINITY;
        for con in &self.geom.cons {
            let ax: f64 = con.terms.iter().map(|&(i, a)| a * self.state[i]).sum();
            let ad: f64 = con.terms.iter().map(|&(i, a)| a * dir[i]).sum();
            if ad.abs() < 1e-15 {
                continue;
            }
            let t = (con.rhs - ax) / ad;
            if ad > 0.0 {
                tmax = tmax.min(t);
            } else {
                tmin = tmin.max(t);
            }
        }
        if !(tmin.is_finite() && tmax.is_finite()) || tmin > tmax {
            return; // numerical corner; stay put
        }
        let t = tmin + (tmax - tmin) * rng.random::<f64>();
        for i in 0..d {
            self.state[i] += t * dir[i];
        }
    }

    /// Advance the chain and return a pattern: burn-in on first use, then
    /// fixed thinning.
    pub fn sample<R: RngTrait>(&mut self, rng: &mut R) -> Result<GTPattern> {
        if !self.burned_in {
            for _ in 0..default_burn_in(&self.spec) {
                self.step(rng);
            }
            self.burned_in = true;
        } else {
            for _ in 0..WALK_THINNING {
                self.step(rng);
            }
        }
        self.pattern()
    }

    fn pattern(&self) -> Result<GTPattern> {
        let mut levels: Vec<Vec<f64>> = self
            .geom
            .offsets
            .iter()
            .zip(&self.geom.sizes)
            .map(|(&off, &sz)| self.state[off..off + sz].to_vec())
            .collect();
        levels.push(self.spec.top.coords.clone());
        GTPattern::new(self.spec.ctx(), levels)
    }
}

/// Approximately uniform sample by hit-and-run with `steps` moves from the
/// midpoint start. `steps` must cover at least the default burn-in.
pub fn sample_uniform_walk<R: RngTrait>(
    spec: &GTSpec,
    rng: &mut R,
    steps: usize,
) -> Result<GTPattern> {
    if steps < default_burn_in(spec) {
        return Err(Error::InvalidArgument(format!(
            "steps {steps} below the default burn-in {}",
            default_burn_in(spec)
        )));
    }
    let mut walker = WalkSampler::new(spec.clone())?;
    for _ in 0..steps {
        walker.step(rng);
    }
    walker.pattern()
}

/// Density of the projection measure mu_lambda at beta (a chamber point of
/// the next smaller context), with respect to Lebesgue measure on the
/// projected support.
///
/// Supported shapes: lambda in the open chamber (general-position branch),
/// or lambda of rank one (the g_theta branch, where the remaining
/// coordinates of beta sit at zero).
pub fn mu_lambda_density(lambda: &RadialPoint, beta: &[f64]) -> Result<f64> {
    let ctx = lambda.ctx;
    if ctx.n < 2 {
        return Err(Error::UnsupportedCase("need n >= 2 for a projection".into()));
    }
    let sub = FieldContext::new(ctx.field, ctx.n - 1)?;
    if beta.len() != sub.n_tilde() {
        return Err(Error::ShapeMismatch(format!(
            "beta must have {} coordinates",
            sub.n_tilde()
        )));
    }
    let l = &lambda.coords;
    if lambda.is_interior() {
        let beta_pt = RadialPoint::new(sub, beta.to_vec())?;
        let ratio = asym_dim(&beta_pt) / asym_dim(lambda);
        let val = match ctx.field {
            Field::C => {
                if interlaced_over(l, beta, 0.0) {
                    ratio
                } else {
                    0.0
                }
            }
            Field::R => {
                let la = abs_last(l);
                let ba = abs_last(beta);
                let ok = if la.len() == ba.len() {
                    interlaced_same(&la, &ba, 0.0)
                } else {
                    interlaced_over(&la, &ba, 0.0)
                };
                if ok {
                    ratio
                } else {
                    0.0
                }
            }
            Field::H => {
                // Cauchy-Binet volume of the half-level slice, with the
                // convention beta_n = 0.
                let n = ctx.n;
                let betap: Vec<f64> = beta.iter().copied().chain(std::iter::once(0.0)).collect();
                let m = nalgebra::DMatrix::from_fn(n, n, |i, j| {
                    if l[i] >= betap[j] {
                        l[i] - betap[j]
                    } else {
                        0.0
                    }
                });
                ratio * m.lu().determinant()
            }
        };
        return Ok(val.max(0.0));
    }
    // Rank-one branch.
    let nt = ctx.n_tilde();
    let rank_one = l[0] > 0.0 && l[1..].iter().all(|&x| x == 0.0);
    if !rank_one {
        return Err(Error::UnsupportedCase(
            "lambda is neither interior nor rank one; use the spectral sampler".into(),
        ));
    }
    let _ = nt;
    if beta[1..].iter().any(|&x| x.abs() > 1e-12) {
        return Ok(0.0);
    }
    let theta = l[0];
    let b = beta[0];
    if !(0.0..=theta).contains(&b) {
        return Ok(0.0);
    }
    let n = ctx.n as f64;
    Ok(match ctx.field {
        Field::C => (n - 1.0) * b.powi(ctx.n as i32 - 2) / theta.powi(ctx.n as i32 - 1),
        Field::R => (n - 2.0) * b.powi(ctx.n as i32 - 3) / theta.powi(ctx.n as i32 - 2),
        Field::H => {
            (2.0 * n - 2.0) * (2.0 * n - 1.0) * b.powi(2 * ctx.n as i32 - 3) * (theta - b)
                / theta.powi(2 * ctx.n as i32 - 1)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, integrate_box};
    use crate::rng::rng_from_seed;
    use crate::stats::{ks_test, ks_two_sample_test};

    fn ctx(field: Field, n: usize) -> FieldContext {
        FieldContext::new(field, n).unwrap()
    }

    fn radial(field: Field, n: usize, coords: &[f64]) -> RadialPoint {
        RadialPoint::new(ctx(field, n), coords.to_vec()).unwrap()
    }

    #[test]
    fn contains_basic_cases() {
        // Degenerate constant pattern is inside.
        let lam = radial(Field::C, 2, &[1.0, 1.0]);
        let spec = GTSpec::new(lam);
        let p = GTPattern::new(ctx(Field::C, 2), vec![vec![1.0], vec![1.0, 1.0]]).unwrap();
        assert!(gt_contains(&spec, &p).unwrap());
        // Violation: x^(1) above the top interval.
        let lam = radial(Field::C, 2, &[2.0, 0.0]);
        let spec = GTSpec::new(lam);
        let p = GTPattern::new(ctx(Field::C, 2), vec![vec![3.0], vec![2.0, 0.0]]).unwrap();
        assert!(!gt_contains(&spec, &p).unwrap());
    }

    #[test]
    fn spectral_samples_interlace() {
        let mut rng = rng_from_seed(2);
        for (field, n, coords) in [
            (Field::C, 4, vec![2.0, 1.0, 0.5, -0.3]),
            (Field::R, 5, vec![2.0, 0.7]),
            (Field::R, 4, vec![2.0, -0.5]),
            (Field::H, 2, vec![2.0, 1.0]),
        ] {
            let spec = GTSpec::new(radial(field, n, &coords));
            for _ in 0..50 {
                let p = sample_uniform_spectral(&spec, &mut rng).unwrap();
                assert!(gt_contains(&spec, &p).unwrap(), "{field:?} {coords:?} {p:?}");
            }
        }
    }

    #[test]
    fn minor_process_samples_interlace() {
        use crate::ensembles::{minor_process, sample_gaussian_hermitian};
        let mut rng = rng_from_seed(3);
        for (field, n) in [(Field::C, 4), (Field::R, 5), (Field::H, 3)] {
            let c = ctx(field, n);
            for _ in 0..30 {
                let m = sample_gaussian_hermitian(c, &mut rng);
                let p = minor_process(&m).unwrap();
                let spec = GTSpec::new(RadialPoint::new(c, p.top().to_vec()).unwrap());
                assert!(gt_contains(&spec, &p).unwrap());
            }
        }
    }

    #[test]
    fn volume_small_cases() {
        // F = C, n = 2: interval length.
        let spec = GTSpec::new(radial(Field::C, 2, &[1.7, 0.4]));
        assert!((gt_volume(&spec) - 1.3).abs() < 1e-12);
        // Degenerate top: lower-dimensional volume via skip rules.
        let spec = GTSpec::new(radial(Field::C, 3, &[2.0, 2.0, 0.0]));
        let v = gt_volume(&spec);
        assert!(v > 0.0);
        // F = C, n = 3, lambda = (2,1,0): d_3 = 1; Monte Carlo cross-check by
        // rejection on the bounding box [1,2] x [0,1] x [0,2] of
        // (x^(2)_1, x^(2)_2, x^(1)_1).
        let spec = GTSpec::new(radial(Field::C, 3, &[2.0, 1.0, 0.0]));
        let v = gt_volume(&spec);
        assert!((v - 1.0).abs() < 1e-12);
        let mut rng = rng_from_seed(8);
        let mut hits = 0u32;
        let trials = 200_000u32;
        for _ in 0..trials {
            let a = 1.0 + rng.random::<f64>();
            let b = rng.random::<f64>();
            let x = 2.0 * rng.random::<f64>();
            if a >= x && x >= b {
                hits += 1;
            }
        }
        let mc = hits as f64 / trials as f64 * 2.0;
        assert!((mc - v).abs() < 0.02 * v, "mc {mc} vs exact {v}");
    }

    #[test]
    fn level_one_marginal_is_uniform() {
        // F = C, lambda = (1, 0): level-1 marginal is uniform on [0, 1].
        let spec = GTSpec::new(radial(Field::C, 2, &[1.0, 0.0]));
        let mut rng = rng_from_seed(4);
        let mut xs: Vec<f64> = (0..20_000)
            .map(|_| sample_uniform_spectral(&spec, &mut rng).unwrap().level(1)[0])
            .collect();
        let (d, crit, pass) = ks_test(&mut xs, |x| x.clamp(0.0, 1.0), 0.01);
        assert!(pass, "KS {d} >= {crit}");
    }

    #[test]
    fn mu_lambda_matches_marginal_histogram() {
        // F = C, n = 3, lambda = (2,1,0): the first coordinate of x^(2) has
        // density proportional to the beta_2-integral of d_2(beta).
        let lam = radial(Field::C, 3, &[2.0, 1.0, 0.0]);
        let spec = GTSpec::new(lam.clone());
        let mut rng = rng_from_seed(5);
        let mut xs: Vec<f64> = (0..20_000)
            .map(|_| sample_uniform_spectral(&spec, &mut rng).unwrap().level(2)[0])
            .collect();
        let marg = |b1: f64| integrate(|b2| mu_lambda_density(&lam, &[b1, b2]).unwrap(), 0.0, 1.0, 1e-10);
        let norm = integrate(marg, 1.0, 2.0, 1e-8);
        assert!((norm - 1.0).abs() < 1e-6, "marginal normalisation {norm}");
        let cdf = move |t: f64| integrate(marg, 1.0, t.clamp(1.0, 2.0), 1e-8);
        let (d, crit, pass) = ks_test(&mut xs, cdf, 0.01);
        assert!(pass, "KS {d} >= {crit}");
    }

    #[test]
    fn mu_lambda_integrates_to_one() {
        // F = C, n = 3, lambda = (3,1,0).
        let lam = radial(Field::C, 3, &[3.0, 1.0, 0.0]);
        let total = integrate_box(
            |b| mu_lambda_density(&lam, b).unwrap(),
            &[1.0, 0.0],
            &[3.0, 1.0],
            64,
        );
        assert!((total - 1.0).abs() < 1e-6, "total {total}");
        // F = H, n = 2, lambda = (3,1): half-level slice volume form.
        let lam = radial(Field::H, 2, &[3.0, 1.0]);
        let total = integrate(|b| mu_lambda_density(&lam, &[b]).unwrap(), 0.0, 3.0, 1e-9);
        assert!((total - 1.0).abs() < 1e-6, "total {total}");
        // F = R, n = 5 (B_2 over D_2).
        let lam = radial(Field::R, 5, &[3.0, 1.0]);
        let total = integrate_box(
            |b| mu_lambda_density(&lam, b).unwrap(),
            &[1.0, -1.0],
            &[3.0, 1.0],
            64,
        );
        assert!((total - 1.0).abs() < 1e-5, "total {total}");
    }

    #[test]
    fn rank_one_projection_density() {
        // g_theta for F = H: (2n-2)(2n-1) b^{2n-3} (theta - b) / theta^{2n-1}.
        let n = 3;
        let theta = 2.0;
        let lam = radial(Field::H, n, &[theta, 0.0, 0.0]);
        let total = integrate(|b| mu_lambda_density(&lam, &[b, 0.0]).unwrap(), 0.0, theta, 1e-10);
        assert!((total - 1.0).abs() < 1e-8);
        let v = mu_lambda_density(&lam, &[1.0, 0.0]).unwrap();
        let expect = 4.0 * 5.0 * 1.0f64.powi(3) * (theta - 1.0) / theta.powi(5);
        assert!((v - expect).abs() < 1e-12);
    }

    #[test]
    fn volume_recursion() {
        // d_n(lambda) = int d_{n-1}(beta) (slice volume) dbeta, rank <= 3.
        let lam = radial(Field::C, 3, &[2.5, 1.0, 0.0]);
        let outer = asym_dim(&lam);
        let inner = integrate_box(
            |b| {
                let bp = RadialPoint::new(ctx(Field::C, 2), b.to_vec());
                match bp {
                    Ok(bp) => {
                        if mu_lambda_density(&lam, b).unwrap() > 0.0 {
                            asym_dim(&bp)
                        } else {
                            0.0
                        }
                    }
                    Err(_) => 0.0,
                }
            },
            &[1.0, 0.0],
            &[2.5, 1.0],
            64,
        );
        assert!((outer - inner).abs() < 1e-6 * outer, "{outer} vs {inner}");
    }

    #[test]
    fn walk_sampler_requires_interior() {
        let spec = GTSpec::new(radial(Field::C, 3, &[2.0, 1.0, 1.0]));
        assert!(matches!(WalkSampler::new(spec), Err(Error::DegeneratePolytope)));
    }

    #[test]
    fn walk_and_spectral_agree() {
        // Cross-validation of the two samplers, F = C, n = 3.
        let lam = radial(Field::C, 3, &[2.0, 1.0, 0.0]);
        let spec = GTSpec::new(lam);
        let mut rng = rng_from_seed(6);
        let n_samp = 6000;
        let mut walker = WalkSampler::new(spec.clone()).unwrap();
        let mut walk_l1: Vec<f64> = Vec::with_capacity(n_samp);
        let mut walk_l2: Vec<f64> = Vec::with_capacity(n_samp);
        for _ in 0..n_samp {
            let p = walker.sample(&mut rng).unwrap();
            assert!(gt_contains(&spec, &p).unwrap());
            walk_l1.push(p.level(1)[0]);
            walk_l2.push(p.level(2)[0]);
        }
        let mut spec_l1: Vec<f64> = Vec::with_capacity(n_samp);
        let mut spec_l2: Vec<f64> = Vec::with_capacity(n_samp);
        for _ in 0..n_samp {
            let p = sample_uniform_spectral(&spec, &mut rng).unwrap();
            spec_l1.push(p.level(1)[0]);
            spec_l2.push(p.level(2)[0]);
        }
        let (d1, c1, p1) = ks_two_sample_test(&mut walk_l1, &mut spec_l1, 0.01);
        assert!(p1, "level 1: {d1} >= {c1}");
        let (d2, c2, p2) = ks_two_sample_test(&mut walk_l2, &mut spec_l2, 0.01);
        assert!(p2, "level 2: {d2} >= {c2}");
    }

    #[test]
    fn walk_matches_spectral_for_h() {
        // F = H, n = 2: the walk treats half-levels as ordinary coordinates;
        // its integer-level projection must match the spectral law.
        let lam = radial(Field::H, 2, &[2.0, 1.0]);
        let spec = GTSpec::new(lam);
        let mut rng = rng_from_seed(7);
        let n_samp = 5000;
        let mut walker = WalkSampler::new(spec.clone()).unwrap();
        let mut walk_half: Vec<f64> = Vec::with_capacity(n_samp);
        let mut walk_int: Vec<f64> = Vec::with_capacity(n_samp);
        for _ in 0..n_samp {
            let p = walker.sample(&mut rng).unwrap();
            assert!(gt_contains(&spec, &p).unwrap());
            walk_half.push(p.half_level(2)[0]);
            walk_int.push(p.level(1)[0]);
        }
        let mut sp_half: Vec<f64> = Vec::with_capacity(n_samp);
        let mut sp_int: Vec<f64> = Vec::with_capacity(n_samp);
        for _ in 0..n_samp {
            let p = sample_uniform_spectral(&spec, &mut rng).unwrap();
            sp_half.push(p.half_level(2)[0]);
            sp_int.push(p.level(1)[0]);
        }
        let (d1, c1, p1) = ks_two_sample_test(&mut walk_half, &mut sp_half, 0.01);
        assert!(p1, "half level: {d1} >= {c1}");
        let (d2, c2, p2) = ks_two_sample_test(&mut walk_int, &mut sp_int, 0.01);
        assert!(p2, "integer level: {d2} >= {c2}");
    }

    #[test]
    fn pattern_serialisation() {
        let p = GTPattern::new(ctx(Field::C, 2), vec![vec![0.5], vec![1.0, 0.0]]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"field":"C","n":2,"levels":[[0.5],[1.0,0.0]]}"#);
        assert_eq!(p.flat(), vec![0.5, 1.0, 0.0]);
    }
}
