//! Root-system data for the classical types A/B/C/D, the asymptotic
//! dimension d_n, exact Weyl dimensions, characters, and the orbital
//! integral of Harish-Chandra type.
//!
//! Weights and chamber points are written in the epsilon basis, which is
//! orthonormal for the invariant scalar product used throughout.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ensembles::RadialPoint;
use crate::error::{Error, Result};
use crate::field::{ChamberType, Field, FieldContext};

/// A weight or torus element in the epsilon basis.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    pub coords: Vec<f64>,
}

impl WeightVector {
    pub fn new(coords: Vec<f64>) -> Self {
        WeightVector { coords }
    }
}

/// Root-system data for one of the classical families.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub chamber: ChamberType,
    /// Number of epsilon coordinates (n for A acting on U(n), r otherwise).
    pub rank: usize,
}

impl RootSystem {
    pub fn new(chamber: ChamberType, rank: usize) -> Self {
        RootSystem { chamber, rank }
    }

    pub fn for_context(ctx: &FieldContext) -> Self {
        RootSystem::new(ctx.chamber_type(), ctx.n_tilde().max(usize::from(ctx.field == Field::C)))
    }

    /// Positive roots as integer coefficient vectors in the epsilon basis.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut roots = Vec::new();
        let mut root = |entries: &[(usize, i64)]| {
            let mut v = vec![0i64; r];
            for &(i, c) in entries {
                v[i] = c;
            }
            roots.push(v);
        };
        for i in 0..r {
            for j in (i + 1)..r {
                root(&[(i, 1), (j, -1)]);
                if self.chamber != ChamberType::A {
                    root(&[(i, 1), (j, 1)]);
                }
            }
        }
        match self.chamber {
            ChamberType::B => (0..r).for_each(|i| root(&[(i, 1)])),
            ChamberType::C => (0..r).for_each(|i| root(&[(i, 2)])),
            ChamberType::A | ChamberType::D => {}
        }
        roots
    }

    /// Half-sum of the positive roots, as exact rationals.
    pub fn rho(&self) -> Vec<BigRational> {
        let roots = self.positive_roots();
        let mut acc = vec![BigRational::zero(); self.rank];
        for root in &roots {
            for (i, &c) in root.iter().enumerate() {
                acc[i] += BigRational::new(BigInt::from(c), BigInt::from(2));
            }
        }
        acc
    }

    pub fn rho_f64(&self) -> Vec<f64> {
        self.rho().iter().map(|x| x.to_f64().unwrap()).collect()
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots().len()
    }

    /// Checks that an integer weight is dominant for this chamber.
    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        if lambda.len() != self.rank {
            return false;
        }
        let dec = lambda.windows(2).all(|w| w[0] >= w[1]);
        match self.chamber {
            ChamberType::A => dec,
            ChamberType::B | ChamberType::C => dec && lambda.last().map_or(true, |&x| x >= 0),
            ChamberType::D => {
                let r = lambda.len();
                let head = lambda[..r - 1].windows(2).all(|w| w[0] >= w[1]);
                head && (r < 2 || lambda[r - 2] >= lambda[r - 1].abs())
            }
        }
    }

    /// Exact dimension of the irreducible module with highest weight lambda,
    /// by the quotient of products over positive roots.
    pub fn weyl_dim(&self, lambda: &[i64]) -> Result<BigUint> {
        if !self.is_dominant(lambda) {
            return Err(Error::BadWeight(format!("{lambda:?} is not dominant for type {}", self.chamber)));
        }
        let rho = self.rho();
        let mut acc = BigRational::one();
        for root in self.positive_roots() {
            let mut num = BigRational::zero();
            let mut den = BigRational::zero();
            for (i, &c) in root.iter().enumerate() {
                if c != 0 {
                    let ci = BigRational::from(BigInt::from(c));
                    num += &ci * (BigRational::from(BigInt::from(lambda[i])) + &rho[i]);
                    den += &ci * &rho[i];
                }
            }
            acc *= num / den;
        }
        if !acc.is_integer() || acc.is_negative() {
            return Err(Error::BadWeight(format!("dimension formula gave non-integer for {lambda:?}")));
        }
        Ok(acc.to_integer().to_biguint().unwrap())
    }

    /// Enumerated Weyl group: the action on epsilon coordinates together
    /// with det(w). Factorial cost, intended for rank <= 6 desk scale.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let r = self.rank;
        let mut perms = Vec::new();
        permutations(r, &mut (0..r).collect::<Vec<_>>(), &mut perms);
        let mut out = Vec::new();
        for (perm, psign) in perms {
            match self.chamber {
                ChamberType::A => out.push(WeylElement { perm: perm.clone(), signs: vec![1i8; r], det: psign }),
                ChamberType::B | ChamberType::C => {
                    for mask in 0..(1u32 << r) {
                        let signs: Vec<i8> =
                            (0..r).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                        let flips = mask.count_ones();
                        let det = psign * if flips % 2 == 0 { 1.0 } else { -1.0 };
                        out.push(WeylElement { perm: perm.clone(), signs, det });
                    }
                }
                ChamberType::D => {
                    for mask in 0..(1u32 << r) {
                        if mask.count_ones() % 2 != 0 {
                            continue;
                        }
                        let signs: Vec<i8> =
                            (0..r).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                        out.push(WeylElement { perm: perm.clone(), signs, det: psign });
                    }
                }
            }
        }
        out
    }
}

/// One signed permutation.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
    pub det: f64,
}

impl WeylElement {
    /// Apply to a vector in the epsilon basis.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..v.len()).map(|i| self.signs[i] as f64 * v[self.perm[i]]).collect()
    }
}

fn permutations(r: usize, scratch: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, f64)>) {
    // Heap's algorithm with sign tracking.
    fn heap(k: usize, arr: &mut Vec<usize>, sign: &mut f64, out: &mut Vec<(Vec<usize>, f64)>) {
        if k == 1 {
            out.push((arr.clone(), *sign));
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, sign, out);
            if i < k - 1 {
                if k % 2 == 0 {
                    arr.swap(i, k - 1);
                } else {
                    arr.swap(0, k - 1);
                }
                *sign = -*sign;
            }
        }
    }
    let mut sign = 1.0;
    if r == 0 {
        out.push((Vec::new(), 1.0));
        return;
    }
    heap(r, scratch, &mut sign, out);
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The asymptotic dimension d_n on the Weyl chamber: the normalised product
/// of positive-root pairings, with factors skipped on the degenerate strata.
pub fn asym_dim(lambda: &RadialPoint) -> f64 {
    let ctx = lambda.ctx;
    let l = &lambda.coords;
    let nt = l.len();
    let mut v = 1.0f64;
    let mut c = 1.0f64;
    match ctx.field {
        Field::C => {
            for i in 0..nt {
                for j in (i + 1)..nt {
                    if l[i] != l[j] {
                        v *= l[i] - l[j];
                        c *= (j - i) as f64;
                    }
                }
            }
        }
        Field::H => {
            let n = ctx.n as f64;
            for i in 0..nt {
                for j in (i + 1)..nt {
                    if l[i] != l[j] {
                        v *= l[i] - l[j];
                        c *= (j - i) as f64;
                    }
                    if l[i] != -l[j] {
                        v *= l[i] + l[j];
                        c *= 2.0 * n + 2.0 - (j + i + 2) as f64;
                    }
                }
                if l[i] != 0.0 {
                    v *= l[i];
                    c *= n + 1.0 - (i + 1) as f64;
                }
            }
        }
        Field::R => {
            let n = ctx.n as f64;
            let eps = ctx.epsilon();
            for i in 0..nt {
                for j in (i + 1)..nt {
                    if l[i] != l[j] {
                        v *= l[i] - l[j];
                        c *= (j - i) as f64;
                    }
                    if l[i] != -l[j] {
                        v *= l[i] + l[j];
                        c *= n - (j + i + 2) as f64;
                    }
                }
                if eps == 1 && l[i] != 0.0 {
                    v *= l[i];
                    c *= nt as f64 + 0.5 - (i + 1) as f64;
                }
            }
        }
    }
    v / c
}

/// The determinant form of d_n, valid on the interior of the chamber:
/// |det(lambda_i^{p_j})| / c_n with monomial exponents p_j depending on the
/// type.
pub fn asym_dim_det(lambda: &RadialPoint) -> Result<f64> {
    if !lambda.is_interior() {
        return Err(Error::InteriorViolation(format!("{:?}", lambda.coords)));
    }
    let ctx = lambda.ctx;
    let l = &lambda.coords;
    let nt = l.len();
    let pow = |j: usize| -> i32 {
        match ctx.field {
            Field::C => j as i32,
            Field::H => 2 * j as i32 + 1,
            Field::R => 2 * j as i32 + ctx.epsilon() as i32,
        }
    };
    let m = nalgebra::DMatrix::from_fn(nt, nt, |i, j| l[i].powi(pow(j)));
    let det = m.lu().determinant().abs();
    // c_n on the interior: no factors are skipped.
    let mut c = 1.0f64;
    match ctx.field {
        Field::C => {
            for i in 0..nt {
                for j in (i + 1)..nt {
                    c *= (j - i) as f64;
                }
            }
        }
        Field::H => {
            let n = ctx.n as f64;
            for i in 0..nt {
                for j in (i + 1)..nt {
                    c *= (j - i) as f64;
                    c *= 2.0 * n + 2.0 - (j + i + 2) as f64;
                }
                c *= n + 1.0 - (i + 1) as f64;
            }
        }
        Field::R => {
            let n = ctx.n as f64;
            for i in 0..nt {
                for j in (i + 1)..nt {
                    c *= (j - i) as f64;
                    c *= n - (j + i + 2) as f64;
                }
                if ctx.epsilon() == 1 {
                    c *= nt as f64 + 0.5 - (i + 1) as f64;
                }
            }
        }
    }
    Ok(det / c)
}

/// Weyl character chi_lambda(zeta) for an integral dominant weight, by the
/// alternating-sum formula. Near-singular zeta is resolved by Richardson
/// extrapolation along a fixed regular direction.
pub fn character(rs: &RootSystem, lambda: &[i64], zeta: &[f64]) -> Result<Complex64> {
    if !rs.is_dominant(lambda) {
        return Err(Error::BadWeight(format!("{lambda:?} not dominant")));
    }
    if zeta.len() != rs.rank {
        return Err(Error::ShapeMismatch("zeta length".into()));
    }
    let group = rs.weyl_group();
    match character_regular(rs, &group, lambda, zeta, 1e-7) {
        Ok(v) => Ok(v),
        Err(Error::SingularPoint) => {
            let delta = rs.rho_f64();
            let rho = rs.rho_f64();
            let lam_rho: Vec<f64> = lambda.iter().zip(&rho).map(|(&l, r)| l as f64 + r).collect();
            let t0 = 0.8 / (1.0 + phase_scale(&lam_rho, &delta));
            richardson(t0, |t| {
                let zt: Vec<f64> = zeta.iter().zip(&delta).map(|(z, d)| z + t * d).collect();
                character_regular(rs, &group, lambda, &zt, 1e-13)
            })
        }
        Err(e) => Err(e),
    }
}

/// Largest phase |<w a, b>| over the Weyl group: the sorted-absolute dot
/// product, by the rearrangement inequality.
fn phase_scale(a: &[f64], b: &[f64]) -> f64 {
    let mut aa: Vec<f64> = a.iter().map(|x| x.abs()).collect();
    let mut bb: Vec<f64> = b.iter().map(|x| x.abs()).collect();
    aa.sort_by(|x, y| y.partial_cmp(x).unwrap());
    bb.sort_by(|x, y| y.partial_cmp(x).unwrap());
    dot(&aa, &bb)
}

fn character_regular(
    rs: &RootSystem,
    group: &[WeylElement],
    lambda: &[i64],
    zeta: &[f64],
    den_floor: f64,
) -> Result<Complex64> {
    let rho = rs.rho_f64();
    let lam_rho: Vec<f64> = lambda.iter().zip(&rho).map(|(&l, r)| l as f64 + r).collect();
    let mut num = Complex64::new(0.0, 0.0);
    for w in group {
        let wl = w.apply(&lam_rho);
        num += Complex64::new(0.0, dot(&wl, zeta)).exp() * w.det;
    }
    // Weyl denominator formula: a cancellation-free product.
    let mut den = Complex64::new(1.0, 0.0);
    for root in rs.positive_roots() {
        let rootf: Vec<f64> = root.iter().map(|&c| c as f64).collect();
        let half = 0.5 * dot(&rootf, zeta);
        den *= Complex64::new(0.0, 2.0 * half.sin());
    }
    if den.norm() < den_floor {
        return Err(Error::SingularPoint);
    }
    Ok(num / den)
}

/// The orbital integral: the Fourier transform of the normalised orbit
/// measure through lambda, evaluated at the torus element zeta.
pub fn orbital_integral(rs: &RootSystem, lambda: &[f64], zeta: &[f64]) -> Result<Complex64> {
    if lambda.len() != rs.rank || zeta.len() != rs.rank {
        return Err(Error::ShapeMismatch("lambda/zeta length".into()));
    }
    let group = rs.weyl_group();
    match orbital_regular(rs, &group, lambda, zeta, 1e-7) {
        Ok(v) => Ok(v),
        Err(Error::SingularPoint) => {
            let delta = rs.rho_f64();
            let lam_singular = d_factor(rs, lambda).abs() < 1e-7 * scale_pow(lambda, rs);
            let zeta_singular = h_factor(rs, zeta).abs() < 1e-7 * scale_pow(zeta, rs);
            let scale1 = phase_scale(lambda, zeta)
                .max(phase_scale(&delta, zeta))
                .max(phase_scale(lambda, &delta))
                .max(phase_scale(&delta, &delta));
            let t0 = 0.8 / (1.0 + scale1);
            richardson(t0, |t| {
                let lt: Vec<f64> = lambda
                    .iter()
                    .zip(&delta)
                    .map(|(l, d)| if lam_singular { l + t * d } else { *l })
                    .collect();
                let zt: Vec<f64> = zeta
                    .iter()
                    .zip(&delta)
                    .map(|(z, d)| if zeta_singular { z + t * d } else { *z })
                    .collect();
                orbital_regular(rs, &group, &lt, &zt, 1e-13)
            })
        }
        Err(e) => Err(e),
    }
}

fn scale_pow(v: &[f64], rs: &RootSystem) -> f64 {
    let s = v.iter().map(|x| x.abs()).fold(0.0f64, f64::max).max(1e-3);
    s.powi(rs.num_positive_roots() as i32)
}

fn d_factor(rs: &RootSystem, lambda: &[f64]) -> f64 {
    let rho = rs.rho_f64();
    rs.positive_roots()
        .iter()
        .map(|root| {
            let rootf: Vec<f64> = root.iter().map(|&c| c as f64).collect();
            dot(&rootf, lambda) / dot(&rootf, &rho)
        })
        .product()
}

fn h_factor(rs: &RootSystem, zeta: &[f64]) -> f64 {
    rs.positive_roots()
        .iter()
        .map(|root| {
            let rootf: Vec<f64> = root.iter().map(|&c| c as f64).collect();
            dot(&rootf, zeta)
        })
        .product()
}

fn orbital_regular(
    rs: &RootSystem,
    group: &[WeylElement],
    lambda: &[f64],
    zeta: &[f64],
    floor: f64,
) -> Result<Complex64> {
    let d = d_factor(rs, lambda);
    let h = h_factor(rs, zeta);
    if d.abs() < floor * scale_pow(lambda, rs) || h.abs() < floor * scale_pow(zeta, rs) {
        return Err(Error::SingularPoint);
    }
    let npos = rs.num_positive_roots();
    // h(i zeta) = i^{|R+|} prod <alpha, zeta>
    let i_pow = Complex64::new(0.0, 1.0).powu(npos as u32);
    let mut num = Complex64::new(0.0, 0.0);
    for w in group {
        let wl = w.apply(lambda);
        num += Complex64::new(0.0, dot(&wl, zeta)).exp() * w.det;
    }
    Ok(num / (i_pow * h * d))
}

/// Neville extrapolation of f(t) to t = 0 along a geometric ladder. The
/// ratio is kept moderate so the smallest node does not hit the alternating
/// -sum cancellation of the numerator.
fn richardson<F: FnMut(f64) -> Result<Complex64>>(t0: f64, mut f: F) -> Result<Complex64> {
    let levels = 7;
    let mut ts = Vec::with_capacity(levels);
    let mut vals = Vec::with_capacity(levels);
    for j in 0..levels {
        let t = t0 / 1.5f64.powi(j as i32);
        ts.push(t);
        vals.push(f(t)?);
    }
    // Neville table in t (the functions involved are analytic in t).
    for k in 1..levels {
        for j in (k..levels).rev() {
            let num = vals[j] * ts[j - k] - vals[j - 1] * ts[j];
            vals[j] = num / (ts[j - k] - ts[j]);
        }
    }
    Ok(vals[levels - 1])
}
