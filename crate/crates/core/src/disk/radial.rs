use std::f64::consts::PI;

use nalgebra::DMatrix;

/// Chebyshev–Gauss–Lobatto discretization of `r ∈ [0, 1]`.
///
/// Radial profiles are expanded in `T_k(2r − 1)`, `k = 0..=M`. Nodes are
/// `r_j = (1 − cos(πj/M))/2`, increasing from `r_0 = 0` to `r_M = 1`.
/// Integrals use Clenshaw–Curtis on a refined grid of degree `2M + 2` so that
/// products of two profiles with a polynomial weight are integrated exactly.
#[derive(Clone, Debug)]
pub struct RadialGrid {
    degree: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    to_values: DMatrix<f64>,
    to_coeffs: DMatrix<f64>,
    d1: DMatrix<f64>,
    d2: DMatrix<f64>,
    quad_nodes: Vec<f64>,
    quad_weights: Vec<f64>,
    quad_eval: DMatrix<f64>,
}

/// Clenshaw–Curtis weights on `[0, 1]` for the nodes `(1 − cos(πj/M))/2`.
pub fn clenshaw_curtis_weights(degree: usize) -> Vec<f64> {
    let m = degree;
    let mut w = vec![0.0; m + 1];
    for (j, wj) in w.iter_mut().enumerate() {
        let theta = PI * j as f64 / m as f64;
        let mut s = 1.0;
        for k in 1..=m / 2 {
            let b = if 2 * k == m { 1.0 } else { 2.0 };
            s -= b * (2.0 * k as f64 * theta).cos() / (4.0 * (k * k) as f64 - 1.0);
        }
        let c = if j == 0 || j == m { 1.0 } else { 2.0 };
        // factor 1/2 maps [-1, 1] to [0, 1]
        *wj = 0.5 * c * s / m as f64;
    }
    w
}

fn chebyshev_nodes(degree: usize) -> Vec<f64> {
    (0..=degree)
        .map(|j| {
            let half = (PI * j as f64 / (2 * degree) as f64).sin();
            half * half // (1 − cos(πj/M))/2 without cancellation
        })
        .collect()
}

/// `T_k(2r_j − 1) = cos(kπ(M − j)/M)` on the nodes of degree `nodes_degree`.
fn eval_matrix(nodes_degree: usize, degree: usize) -> DMatrix<f64> {
    DMatrix::from_fn(nodes_degree + 1, degree + 1, |j, k| {
        let idx = (k * (nodes_degree - j)) % (2 * nodes_degree);
        (PI * idx as f64 / nodes_degree as f64).cos()
    })
}

impl RadialGrid {
    pub fn new(degree: usize) -> Self {
        assert!(degree >= 2, "radial degree must be at least 2");
        let m = degree;
        let nodes = chebyshev_nodes(m);
        let to_values = eval_matrix(m, m);
        let to_coeffs = DMatrix::from_fn(m + 1, m + 1, |k, j| {
            let idx = (k * (m - j)) % (2 * m);
            let mut v = (PI * idx as f64 / m as f64).cos() * 2.0 / m as f64;
            if j == 0 || j == m {
                v *= 0.5;
            }
            if k == 0 || k == m {
                v *= 0.5;
            }
            v
        });

        // Nodal differentiation in y = 2r − 1 (negative-sum diagonal), then d/dr = 2 d/dy.
        let c = |i: usize| if i == 0 || i == m { 2.0 } else { 1.0 };
        let mut d1 = DMatrix::<f64>::zeros(m + 1, m + 1);
        for i in 0..=m {
            for j in 0..=m {
                if i != j {
                    // y_i − y_j = 2 sin((i+j)π/2M) sin((i−j)π/2M)
                    let diff = 2.0
                        * (PI * (i + j) as f64 / (2 * m) as f64).sin()
                        * (PI * (i as f64 - j as f64) / (2 * m) as f64).sin();
                    let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
                    d1[(i, j)] = 2.0 * c(i) / c(j) * sign / diff;
                }
            }
            let row_sum: f64 = (0..=m).filter(|&j| j != i).map(|j| d1[(i, j)]).sum();
            d1[(i, i)] = -row_sum;
        }
        let mut d2 = &d1 * &d1;
        for i in 0..=m {
            let row_sum: f64 = (0..=m).filter(|&j| j != i).map(|j| d2[(i, j)]).sum();
            d2[(i, i)] = -row_sum;
        }

        let q = 2 * m + 2;
        Self {
            degree: m,
            nodes,
            weights: clenshaw_curtis_weights(m),
            to_values,
            to_coeffs,
            d1,
            d2,
            quad_nodes: chebyshev_nodes(q),
            quad_weights: clenshaw_curtis_weights(q),
            quad_eval: eval_matrix(q, m),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Clenshaw–Curtis weights on the collocation nodes.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn diff1(&self) -> &DMatrix<f64> {
        &self.d1
    }

    pub fn diff2(&self) -> &DMatrix<f64> {
        &self.d2
    }

    pub(crate) fn to_values_matrix(&self) -> &DMatrix<f64> {
        &self.to_values
    }

    pub(crate) fn to_coeffs_matrix(&self) -> &DMatrix<f64> {
        &self.to_coeffs
    }

    pub(crate) fn quadrature(&self) -> (&[f64], &[f64], &DMatrix<f64>) {
        (&self.quad_nodes, &self.quad_weights, &self.quad_eval)
    }
}

/// Chebyshev coefficients of `r^n` in `T_k(2r − 1)`, `k ≤ degree`:
/// `c_0 = 4^{−n} C(2n, n)`, `c_k = 2·4^{−n} C(2n, n − k)`.
pub fn monomial_coeffs(n: usize, degree: usize) -> Vec<f64> {
    // b_j = 4^{−n} C(2n, j), built upward from the log of the first term
    let mut b = Vec::with_capacity(n + 1);
    let mut log_b = -(n as f64) * 4f64.ln();
    b.push(log_b.exp());
    for j in 1..=n {
        log_b += ((2 * n - j + 1) as f64 / j as f64).ln();
        b.push(log_b.exp());
    }
    (0..=degree)
        .map(|k| match k {
            0 => b[n],
            k if k <= n => 2.0 * b[n - k],
            _ => 0.0,
        })
        .collect()
}

/// Coefficients of `d/dr` of a series in `T_k(2r − 1)`.
pub fn differentiate_coeffs<T>(c: &[T]) -> Vec<T>
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T> + Default,
{
    let m = c.len() - 1;
    let mut d = vec![T::default(); m + 1];
    if m == 0 {
        return d;
    }
    d[m - 1] = c[m] * (2.0 * m as f64);
    for k in (1..m).rev() {
        let next = if k < m { d[k + 1] } else { T::default() };
        d[k - 1] = next + c[k] * (2.0 * k as f64);
    }
    d[0] = d[0] * 0.5;
    // chain rule for y = 2r − 1
    d.iter().map(|v| *v * 2.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_increase_and_weights_positive() {
        let g = RadialGrid::new(64);
        assert_eq!(g.nodes()[0], 0.0);
        assert_eq!(g.nodes()[64], 1.0);
        assert!(g.nodes().windows(2).all(|w| w[1] > w[0]));
        assert!(g.weights().iter().all(|&w| w > 0.0));
        let total: f64 = g.weights().iter().sum();
        assert!((total - 1.0).abs() < 1e-14);
    }

    #[test]
    fn differentiation_of_r_squared() {
        let g = RadialGrid::new(64);
        let v = nalgebra::DVector::from_iterator(65, g.nodes().iter().map(|r| r * r));
        let d = g.diff1() * &v;
        for (dv, r) in d.iter().zip(g.nodes()) {
            assert!((dv - 2.0 * r).abs() < 1e-12, "{dv} vs {}", 2.0 * r);
        }
        let dd = g.diff2() * &v;
        assert!(dd.iter().all(|x| (x - 2.0).abs() < 1e-9));
    }

    #[test]
    fn monomial_coefficients_are_exact() {
        let g = RadialGrid::new(20);
        for n in [0usize, 1, 5, 20] {
            let c = monomial_coeffs(n, 20);
            let v = g.to_values_matrix() * nalgebra::DVector::from_vec(c);
            for (val, r) in v.iter().zip(g.nodes()) {
                assert!((val - r.powi(n as i32)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn coefficient_derivative() {
        // r³ → 3r² → 6r
        let c = monomial_coeffs(3, 8);
        let d = differentiate_coeffs(&c);
        let expect = monomial_coeffs(2, 8);
        for (a, b) in d.iter().zip(&expect) {
            assert!((a - 3.0 * b).abs() < 1e-15);
        }
    }

    #[test]
    fn transforms_are_inverse() {
        let g = RadialGrid::new(16);
        let id = g.to_values_matrix() * g.to_coeffs_matrix();
        assert!((id - DMatrix::identity(17, 17)).amax() < 1e-14);
    }

    #[test]
    fn clenshaw_curtis_integrates_polynomials() {
        let w = clenshaw_curtis_weights(10);
        let x = chebyshev_nodes(10);
        for p in 0..=10 {
            let q: f64 = w.iter().zip(&x).map(|(w, r)| w * r.powi(p)).sum();
            assert!((q - 1.0 / (p + 1) as f64).abs() < 1e-15);
        }
    }
}
