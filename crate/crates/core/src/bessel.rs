//! Bessel-function utilities for the disk: Dirichlet eigenvalues via the
//! zeros of `J_n`, and the power-series Helmholtz Dirichlet-to-Neumann symbol
//! used as an independent check on the assembled M-operator.

use num_complex::Complex64;

/// `J_0(x), …, J_{max_order}(x)` by Miller's backward recurrence,
/// normalized with `J_0 + 2 Σ_k J_{2k} = 1`.
pub fn bessel_j_orders(max_order: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; max_order + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }
    let x_abs = x.abs();
    let reach = (max_order as f64).max(x_abs);
    let mut start = (1.3 * reach + 12.0 * reach.sqrt() + 40.0) as usize;
    start += start % 2;

    let mut next = 0.0; // J_{k+1}
    let mut cur = 1e-300; // J_k
    let mut norm = 0.0;
    for k in (1..=start).rev() {
        let prev = 2.0 * k as f64 / x_abs * cur - next;
        next = cur;
        cur = prev;
        // cur now holds J_{k-1}
        if k - 1 <= max_order {
            out[k - 1] = cur;
        }
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
            out.iter_mut().for_each(|v| *v *= 1e-250);
        }
    }
    norm += cur;
    for (n, v) in out.iter_mut().enumerate() {
        *v /= norm;
        if x < 0.0 && n % 2 == 1 {
            *v = -*v;
        }
    }
    out
}

/// `J_n(x)` for a single order.
pub fn bessel_j(order: usize, x: f64) -> f64 {
    bessel_j_orders(order, x)[order]
}

/// `(J_n(x), J_n′(x))`.
fn bessel_j_with_derivative(order: usize, x: f64) -> (f64, f64) {
    let all = bessel_j_orders(order + 1, x);
    let d = if order == 0 {
        -all[1]
    } else {
        0.5 * (all[order - 1] - all[order + 1])
    };
    (all[order], d)
}

fn refine_zero(order: usize, mut lo: f64, mut hi: f64) -> f64 {
    let mut x = 0.5 * (lo + hi);
    for _ in 0..100 {
        let (f, df) = bessel_j_with_derivative(order, x);
        let f_lo = bessel_j(order, lo);
        if f_lo * f <= 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let newton = x - f / df;
        let step_ok = df != 0.0 && newton > lo && newton < hi;
        let next = if step_ok { newton } else { 0.5 * (lo + hi) };
        if (next - x).abs() <= 1e-14 * x.max(1.0) {
            return next;
        }
        x = next;
    }
    x
}

/// First `count` positive zeros of `J_n`, bracketed on a fine scan and
/// refined by safeguarded Newton iteration.
pub fn bessel_j_zeros(order: usize, count: usize) -> Vec<f64> {
    const STEP: f64 = 0.05;
    let mut zeros = Vec::with_capacity(count);
    let mut x = (order as f64).max(STEP);
    let mut f = bessel_j(order, x);
    while zeros.len() < count {
        let x_next = x + STEP;
        let f_next = bessel_j(order, x_next);
        if f == 0.0 {
            zeros.push(x);
        } else if f * f_next < 0.0 {
            zeros.push(refine_zero(order, x, x_next));
        }
        x = x_next;
        f = f_next;
    }
    zeros
}

/// Dirichlet eigenvalues of the disk Laplacian, `−j²_{n,k}` for
/// `0 ≤ n ≤ max_order`, `1 ≤ k ≤ per_order`, sorted by decreasing value.
pub fn dirichlet_eigenvalues(max_order: usize, per_order: usize) -> Vec<f64> {
    let mut eig: Vec<f64> = (0..=max_order)
        .flat_map(|n| bessel_j_zeros(n, per_order))
        .map(|j| -j * j)
        .collect();
    eig.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    eig
}

/// Coefficients `c_k = (λ/4)^k / (k! (|n|+k)!)` of the regular solution
/// `r^{|n|} Σ_k c_k r^{2k}` of `u″ + u′/r − n²u/r² = λu`, truncated once the
/// terms stop contributing.
fn helmholtz_series(n: usize, lambda: Complex64) -> Vec<Complex64> {
    let mut terms = Vec::with_capacity(64);
    let mut c = Complex64::new(1.0, 0.0);
    for k in 0..400usize {
        terms.push(c);
        let k1 = (k + 1) as f64;
        c *= lambda / 4.0 / (k1 * (n as f64 + k1));
        if k > 4 && c.norm() < 1e-18 * terms.iter().map(|t| t.norm()).fold(0.0, f64::max) {
            break;
        }
    }
    terms
}

/// Regular Helmholtz profile normalized to one at `r = 1`:
/// `I_n(√λ r)/I_n(√λ)` (equivalently `J_n(√−λ r)/J_n(√−λ)`).
pub fn helmholtz_profile(n: i64, lambda: Complex64, r: f64) -> Complex64 {
    let n = n.unsigned_abs() as usize;
    let series = helmholtz_series(n, lambda);
    let at = |rho: f64| -> Complex64 {
        let r2 = rho * rho;
        series
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * r2 + c)
            * rho.powi(n as i32)
    };
    at(r) / at(1.0)
}

/// Dirichlet-to-Neumann symbol of `Δ − λ` on the unit disk for mode `n`:
/// `√λ I_n′(√λ)/I_n(√λ)`, evaluated from the power series without square roots.
pub fn helmholtz_dtn(n: i64, lambda: Complex64) -> Complex64 {
    let n = n.unsigned_abs() as usize;
    let series = helmholtz_series(n, lambda);
    let value: Complex64 = series.iter().sum();
    let slope: Complex64 = series
        .iter()
        .enumerate()
        .map(|(k, c)| c * (n + 2 * k) as f64)
        .sum();
    slope / value
}
