//! Adaptive quadrature: Gauss-Kronrod G7/K15 with interval bisection, plus
//! helpers for semi-infinite integrands with exponential or Gaussian tails.

/// 15-point Kronrod nodes on [-1, 1] (positive half; symmetric).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];

const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// Gauss 7 weights matching nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut kron = 0.0;
    let mut gauss = 0.0;
    for i in 0..8 {
        let x = XGK[i] * h;
        let v = if i == 7 { f(c) } else { f(c - x) + f(c + x) };
        kron += WGK[i] * v;
        if i % 2 == 1 {
            gauss += WG[i / 2] * v;
        }
    }
    (kron * h, (kron - gauss).abs() * h)
}

/// Adaptive integration on a finite interval.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let mut stack = vec![(a, b)];
    let mut total = 0.0;
    let mut depth_guard = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        depth_guard += 1;
        let (val, err) = gk15(&f, lo, hi);
        if err <= tol * (1.0 + val.abs()) / ((b - a) / (hi - lo)) || hi - lo < 1e-13 * (b - a).abs() || depth_guard > 200_000 {
            total += val;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid));
            stack.push((mid, hi));
        }
    }
    total
}

/// Integral over [a, infinity) of a function with an exp(-rate x) envelope.
/// The cutoff is taken where the envelope falls below machine-size tails.
pub fn integrate_exp_tail<F: Fn(f64) -> f64>(f: F, a: f64, rate: f64, tol: f64) -> f64 {
    assert!(rate > 0.0, "need a decaying envelope");
    let cutoff = a + (50.0 / rate).max(1.0);
    integrate(f, a, cutoff, tol)
}

/// Integral over [a, infinity) of a function with a Gaussian exp(-x^2/2)
/// envelope.
pub fn integrate_gauss_tail<F: Fn(f64) -> f64>(f: F, a: f64, tol: f64) -> f64 {
    let cutoff = (a.max(0.0) + 2.0).max(14.0);
    if cutoff <= a {
        return 0.0;
    }
    integrate(f, a, cutoff, tol)
}

/// Tensor-product Gauss-Legendre rule on a box, for low-dimensional checks.
pub fn integrate_box<F: Fn(&[f64]) -> f64>(f: F, lo: &[f64], hi: &[f64], pts_per_dim: usize) -> f64 {
    let dim = lo.len();
    assert_eq!(dim, hi.len());
    let (nodes, weights) = gauss_legendre(pts_per_dim);
    let mut idx = vec![0usize; dim];
    let mut x = vec![0.0; dim];
    let mut total = 0.0;
    loop {
        let mut w = 1.0;
        for d in 0..dim {
            let half = 0.5 * (hi[d] - lo[d]);
            x[d] = lo[d] + half * (nodes[idx[d]] + 1.0);
            w *= weights[idx[d]] * half;
        }
        total += w * f(&x);
        // odometer
        let mut d = 0;
        loop {
            if d == dim {
                return total;
            }
            idx[d] += 1;
            if idx[d] < pts_per_dim {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// Gauss-Legendre nodes/weights on [-1, 1] via Newton on Legendre polynomials.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        nodes[i] = -x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = pk;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}
