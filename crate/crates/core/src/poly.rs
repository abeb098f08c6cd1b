//! Dense univariate and sparse multivariate polynomials over f64.
//!
//! The multivariate type exists to expand the asymptotic-dimension polynomial
//! V_n into monomials, so that the triangular-kernel integrals factor into
//! one-dimensional moments.

use std::collections::HashMap;

/// Dense univariate polynomial, coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn constant(c: f64) -> Self {
        Poly(vec![c])
    }

    /// x^k
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![0.0; k + 1];
        v[k] = 1.0;
        Poly(v)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, t: f64) -> Poly {
        Poly(self.0.iter().map(|c| c * t).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![0.0; n];
        for (i, &c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, &c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        Poly(v)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::zero();
        }
        let mut v = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly(v)
    }

    pub fn derivative(&self, order: usize) -> Poly {
        let mut cur = self.0.clone();
        for _ in 0..order {
            if cur.len() <= 1 {
                return Poly::zero();
            }
            cur = cur.iter().enumerate().skip(1).map(|(i, &c)| c * i as f64).collect();
        }
        Poly(cur)
    }
}

/// Sparse multivariate polynomial: map from exponent vectors to coefficients.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    pub nvars: usize,
    pub terms: HashMap<Vec<u32>, f64>,
}

impl MultiPoly {
    pub fn constant(nvars: usize, c: f64) -> Self {
        let mut terms = HashMap::new();
        if c != 0.0 {
            terms.insert(vec![0; nvars], c);
        }
        MultiPoly { nvars, terms }
    }

    /// c * x_i^p
    pub fn term(nvars: usize, i: usize, p: u32, c: f64) -> Self {
        let mut e = vec![0; nvars];
        e[i] = p;
        let mut terms = HashMap::new();
        terms.insert(e, c);
        MultiPoly { nvars, terms }
    }

    /// Linear form sum_i a_i x_i + b.
    pub fn linear(nvars: usize, coeffs: &[(usize, f64)], b: f64) -> Self {
        let mut p = MultiPoly::constant(nvars, b);
        for &(i, a) in coeffs {
            if a != 0.0 {
                p = p.add(&MultiPoly::term(nvars, i, 1, a));
            }
        }
        p
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (e, &c) in &other.terms {
            *terms.entry(e.clone()).or_insert(0.0) += c;
        }
        terms.retain(|_, c| *c != 0.0);
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: HashMap<Vec<u32>, f64> = HashMap::new();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert(0.0) += ca * cb;
            }
        }
        terms.retain(|_, c| *c != 0.0);
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn scale(&self, t: f64) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * t)).collect(),
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c * e.iter().zip(x).map(|(&p, &v)| v.powi(p as i32)).product::<f64>())
            .sum()
    }

    /// Product of linear factors, each given as (coeffs, constant).
    pub fn product_of_linear(nvars: usize, factors: &[(Vec<(usize, f64)>, f64)]) -> MultiPoly {
        let mut acc = MultiPoly::constant(nvars, 1.0);
        for (coeffs, b) in factors {
            acc = acc.mul(&MultiPoly::linear(nvars, coeffs, *b));
        }
        acc
    }
}

/// Falling factorial m (m-1) ... (m-k+1).
pub fn falling(m: u32, k: u32) -> f64 {
    if k > m {
        return 0.0;
    }
    let mut acc = 1.0;
    for j in 0..k {
        acc *= (m - j) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_ops() {
        // (1 + x)^2 = 1 + 2x + x^2
        let p = Poly(vec![1.0, 1.0]);
        let sq = p.mul(&p);
        assert_eq!(sq.0, vec![1.0, 2.0, 1.0]);
        assert_eq!(sq.eval(3.0), 16.0);
        assert_eq!(sq.derivative(1).0, vec![2.0, 2.0]);
    }

    #[test]
    fn vandermonde_expansion() {
        // (x0 - x1)(x0 + x1) = x0^2 - x1^2
        let p = MultiPoly::product_of_linear(
            2,
            &[(vec![(0, 1.0), (1, -1.0)], 0.0), (vec![(0, 1.0), (1, 1.0)], 0.0)],
        );
        assert_eq!(p.terms.len(), 2);
        assert!((p.eval(&[3.0, 2.0]) - 5.0).abs() < 1e-14);
    }
}
