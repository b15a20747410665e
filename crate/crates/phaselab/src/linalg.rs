//! Small shared numerics: Gauss–Legendre rules and symmetric eigenvalues.

use nalgebra::DMatrix;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
///
/// Computed by Newton iteration on the Legendre recurrence and cached per
/// order; accuracy is full f64 precision.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<Mutex<HashMap<usize, (Vec<f64>, Vec<f64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rule) = cache.lock().unwrap().get(&n) {
        return rule.clone();
    }
    let rule = compute_gauss_legendre(n);
    cache.lock().unwrap().insert(n, rule.clone());
    rule
}

fn compute_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = d;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Value and derivative of the Legendre polynomial `P_n` at `x`.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(h: &DMatrix<f64>) -> Vec<f64> {
    let sym = (h + h.transpose()) * 0.5;
    let mut eigs: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}

/// Sign counts of the eigenvalues of a symmetric matrix with an absolute
/// threshold. Returns `(positive, negative, below_threshold)`.
pub fn eigen_sign_counts(h: &DMatrix<f64>, threshold: f64) -> (usize, usize, Vec<f64>) {
    let eigs = symmetric_eigenvalues(h);
    let pos = eigs.iter().filter(|&&e| e > threshold).count();
    let neg = eigs.iter().filter(|&&e| e < -threshold).count();
    (pos, neg, eigs)
}

/// Infinity norm of a matrix viewed entrywise.
pub fn max_abs(h: &DMatrix<f64>) -> f64 {
    h.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn five_point_rule_matches_reference() {
        // Abramowitz & Stegun 25.4.30.
        let (x, w) = gauss_legendre(5);
        assert_abs_diff_eq!(x[0], -0.9061798459386640, epsilon = 1e-14);
        assert_abs_diff_eq!(x[1], -0.5384693101056831, epsilon = 1e-14);
        assert_abs_diff_eq!(x[2], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w[0], 0.2369268850561891, epsilon = 1e-14);
        assert_abs_diff_eq!(w[1], 0.4786286704993665, epsilon = 1e-14);
        assert_abs_diff_eq!(w[2], 0.5688888888888889, epsilon = 1e-14);
    }

    #[test]
    fn gauss_integrates_high_degree_polynomials_exactly() {
        let (x, w) = gauss_legendre(8);
        let integral: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(10)).sum();
        assert_abs_diff_eq!(integral, 2.0 / 11.0, epsilon = 1e-14);
    }

    #[test]
    fn eigen_counts_on_diagonal() {
        let h = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![3.0, -1.0, 1e-12]));
        let (pos, neg, eigs) = eigen_sign_counts(&h, 1e-9);
        assert_eq!((pos, neg), (1, 1));
        assert_eq!(eigs.len(), 3);
    }
}
