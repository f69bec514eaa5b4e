//! Small numerical building blocks: compensated summation, log-space
//! accumulation, and Gauss-Legendre quadrature nodes.

/// Neumaier-compensated accumulator. Summation order is fixed by the caller,
/// so results are bitwise reproducible.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Multiplies the running total by `s` (used when a surrounding
    /// recurrence is rescaled against overflow).
    pub fn scale(&mut self, s: f64) {
        self.sum *= s;
        self.comp *= s;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// log(exp(a) + exp(b)) without leaving log space.
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// Accumulator for sums of non-negative terms supplied as logarithms.
#[derive(Debug, Clone, Copy)]
pub struct LogSum(f64);

impl LogSum {
    pub fn empty() -> Self {
        LogSum(f64::NEG_INFINITY)
    }

    pub fn add_log(&mut self, log_term: f64) {
        self.0 = log_add_exp(self.0, log_term);
    }

    pub fn log_total(&self) -> f64 {
        self.0
    }

    /// The summed value; exactly 0.0 when every term underflowed.
    pub fn total(&self) -> f64 {
        self.0.exp()
    }
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre polynomial. Nodes are
/// returned in ascending order.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "Gauss-Legendre rule needs at least 2 nodes");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th root (descending).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-15 * x.abs().max(1.0) {
                let (p2, d2) = legendre_and_derivative(n, x);
                dp = d2;
                x -= p2 / d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        // Force the central node to be exactly zero.
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_and_derivative(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
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

/// Natural log of n! by direct accumulation. Exact enough for series
/// prefactors; callers never need n beyond a few thousand.
pub fn ln_factorial(n: u32) -> f64 {
    let mut acc = 0.0f64;
    for k in 2..=n as u64 {
        acc += (k as f64).ln();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // A rule with n nodes is exact through degree 2n-1.
        let (x, w) = gauss_legendre(8);
        let integral: f64 = x
            .iter()
            .zip(&w)
            .map(|(xi, wi)| wi * (3.0 * xi.powi(14) + xi.powi(3) - xi + 2.0))
            .sum();
        // int_{-1}^{1} 3 x^14 dx = 6/15, odd terms vanish, constant gives 4.
        let exact = 6.0 / 15.0 + 4.0;
        assert!((integral - exact).abs() < 1e-13, "got {integral}");
    }

    #[test]
    fn gauss_legendre_weights_sum_to_two() {
        for n in [2, 3, 17, 64, 128] {
            let (_, w) = gauss_legendre(n);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-12, "n={n}: {s}");
        }
    }

    #[test]
    fn log_sum_matches_direct_sum() {
        let mut ls = LogSum::empty();
        for t in [1e-3, 2.5e-4, 8e-2] {
            ls.add_log(f64::ln(t));
        }
        assert!((ls.total() - (1e-3 + 2.5e-4 + 8e-2)).abs() < 1e-16);
    }

    #[test]
    fn compensated_sum_handles_cancellation() {
        let mut s = CompensatedSum::new();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-17);
        }
        assert_eq!(s.total(), 1.0 + 1e-16);
    }

    #[test]
    fn ln_factorial_small_values() {
        assert_eq!(ln_factorial(0), 0.0);
        assert_eq!(ln_factorial(1), 0.0);
        assert!((ln_factorial(5) - 120.0f64.ln()).abs() < 1e-12);
        assert!((ln_factorial(170) - 706.5730622457873).abs() < 1e-10);
    }
}
