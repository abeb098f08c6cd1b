//! Statistical test helpers used by the verification harness: KS tests,
//! chi-square goodness of fit, one-dimensional Wasserstein distance, and
//! Monte Carlo mean / standard-error summaries.

use crate::error::{Error, Result};

/// Asymptotic Kolmogorov critical value c(alpha): P(K > c) = alpha.
pub fn kolmogorov_critical(alpha: f64) -> f64 {
    // Solve 2 sum (-1)^{k-1} exp(-2 k^2 c^2) = alpha by bisection.
    let tail = |c: f64| -> f64 {
        let mut s = 0.0;
        for k in 1..200 {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            s += sign * (-2.0 * (k as f64) * (k as f64) * c * c).exp();
        }
        2.0 * s
    };
    let (mut lo, mut hi) = (0.3, 3.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if tail(mid) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// One-sample KS statistic against a CDF.
pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &mut [f64], cdf: F) -> f64 {
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = samples.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in samples.iter().enumerate() {
        let f = cdf(x);
        d = d.max((f - i as f64 / n).abs()).max(((i + 1) as f64 / n - f).abs());
    }
    d
}

/// One-sample KS test at the given significance level. Returns (statistic,
/// critical value, pass).
pub fn ks_test<F: Fn(f64) -> f64>(samples: &mut [f64], cdf: F, alpha: f64) -> (f64, f64, bool) {
    let n = samples.len() as f64;
    let d = ks_statistic(samples, cdf);
    let crit = kolmogorov_critical(alpha) / n.sqrt();
    (d, crit, d < crit)
}

/// Two-sample KS statistic.
pub fn ks_two_sample_statistic(a: &mut [f64], b: &mut [f64]) -> f64 {
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (n, m) = (a.len(), b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < n && j < m {
        let t = a[i].min(b[j]);
        while i < n && a[i] <= t {
            i += 1;
        }
        while j < m && b[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    d
}

/// Two-sample KS test at the given significance level.
pub fn ks_two_sample_test(a: &mut [f64], b: &mut [f64], alpha: f64) -> (f64, f64, bool) {
    let d = ks_two_sample_statistic(a, b);
    let (n, m) = (a.len() as f64, b.len() as f64);
    let crit = kolmogorov_critical(alpha) * ((n + m) / (n * m)).sqrt();
    (d, crit, d < crit)
}

/// Chi-square goodness-of-fit against expected counts. Bins with expected
/// count below `min_expected` are merged into their neighbour. Returns
/// (statistic, degrees of freedom, critical value, pass).
pub fn chi_square_test(
    observed: &[f64],
    expected: &[f64],
    alpha: f64,
    min_expected: f64,
) -> Result<(f64, usize, f64, bool)> {
    if observed.len() != expected.len() {
        return Err(Error::ShapeMismatch("observed/expected length mismatch".into()));
    }
    let mut obs_m = Vec::new();
    let mut exp_m = Vec::new();
    let (mut acc_o, mut acc_e) = (0.0, 0.0);
    for (&o, &e) in observed.iter().zip(expected) {
        acc_o += o;
        acc_e += e;
        if acc_e >= min_expected {
            obs_m.push(acc_o);
            exp_m.push(acc_e);
            acc_o = 0.0;
            acc_e = 0.0;
        }
    }
    if acc_e > 0.0 {
        if let (Some(o), Some(e)) = (obs_m.last_mut(), exp_m.last_mut()) {
            *o += acc_o;
            *e += acc_e;
        } else {
            obs_m.push(acc_o);
            exp_m.push(acc_e);
        }
    }
    if obs_m.len() < 2 {
        return Err(Error::InvalidArgument("not enough bins after merging".into()));
    }
    let stat: f64 = obs_m.iter().zip(&exp_m).map(|(&o, &e)| (o - e) * (o - e) / e).sum();
    let df = obs_m.len() - 1;
    use statrs::distribution::{ChiSquared, ContinuousCDF};
    let dist = ChiSquared::new(df as f64).unwrap();
    let crit = dist.inverse_cdf(1.0 - alpha);
    Ok((stat, df, crit, stat < crit))
}

/// A discrete probability measure on the line.
#[derive(Debug, Clone)]
pub struct DiscreteMeasure {
    /// (atom, weight) pairs; weights sum to 1.
    pub atoms: Vec<(f64, f64)>,
}

impl DiscreteMeasure {
    pub fn new(mut atoms: Vec<(f64, f64)>) -> Self {
        atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let total: f64 = atoms.iter().map(|&(_, w)| w).sum();
        for a in &mut atoms {
            a.1 /= total;
        }
        DiscreteMeasure { atoms }
    }

    pub fn from_samples(samples: &[f64]) -> Self {
        let w = 1.0 / samples.len() as f64;
        DiscreteMeasure::new(samples.iter().map(|&x| (x, w)).collect())
    }

    pub fn cdf(&self, t: f64) -> f64 {
        self.atoms.iter().take_while(|&&(x, _)| x <= t).map(|&(_, w)| w).sum()
    }
}

/// Exact 1-Wasserstein distance between two discrete measures on the line:
/// the integral of |F - G| over the merged support.
pub fn wasserstein1(a: &DiscreteMeasure, b: &DiscreteMeasure) -> f64 {
    let mut cuts: Vec<f64> =
        a.atoms.iter().map(|&(x, _)| x).chain(b.atoms.iter().map(|&(x, _)| x)).collect();
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    cuts.dedup();
    let mut total = 0.0;
    let (mut ia, mut ib) = (0usize, 0usize);
    let (mut fa, mut fb) = (0.0f64, 0.0f64);
    for w in cuts.windows(2) {
        while ia < a.atoms.len() && a.atoms[ia].0 <= w[0] {
            fa += a.atoms[ia].1;
            ia += 1;
        }
        while ib < b.atoms.len() && b.atoms[ib].0 <= w[0] {
            fb += b.atoms[ib].1;
            ib += 1;
        }
        total += (fa - fb).abs() * (w[1] - w[0]);
    }
    total
}

/// Sample mean and standard error.
pub fn mean_se(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|&x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;
    use rand::Rng as _;

    #[test]
    fn kolmogorov_quantiles() {
        // Classical table values.
        assert!((kolmogorov_critical(0.05) - 1.3581).abs() < 1e-3);
        assert!((kolmogorov_critical(0.01) - 1.6276).abs() < 1e-3);
    }

    #[test]
    fn ks_accepts_uniform() {
        let mut rng = rng_from_seed(11);
        let mut xs: Vec<f64> = (0..20_000).map(|_| rng.random::<f64>()).collect();
        let (_, _, pass) = ks_test(&mut xs, |x| x.clamp(0.0, 1.0), 0.01);
        assert!(pass);
    }

    #[test]
    fn ks_rejects_shifted() {
        let mut rng = rng_from_seed(12);
        let mut xs: Vec<f64> = (0..20_000).map(|_| rng.random::<f64>().powf(1.2)).collect();
        let (_, _, pass) = ks_test(&mut xs, |x| x.clamp(0.0, 1.0), 0.01);
        assert!(!pass);
    }

    #[test]
    fn two_sample_ks_same_law() {
        let mut rng = rng_from_seed(13);
        let mut a: Vec<f64> = (0..10_000).map(|_| rng.random::<f64>()).collect();
        let mut b: Vec<f64> = (0..12_000).map(|_| rng.random::<f64>()).collect();
        let (_, _, pass) = ks_two_sample_test(&mut a, &mut b, 0.01);
        assert!(pass);
    }

    #[test]
    fn chi_square_uniform_counts() {
        let observed = vec![98.0, 105.0, 99.0, 102.0, 96.0];
        let expected = vec![100.0; 5];
        let (_, df, _, pass) = chi_square_test(&observed, &expected, 0.01, 5.0).unwrap();
        assert_eq!(df, 4);
        assert!(pass);
    }

    #[test]
    fn wasserstein_point_masses() {
        let a = DiscreteMeasure::new(vec![(0.0, 1.0)]);
        let b = DiscreteMeasure::new(vec![(1.5, 1.0)]);
        assert!((wasserstein1(&a, &b) - 1.5).abs() < 1e-12);
    }
}
