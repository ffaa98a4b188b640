//! Globally adaptive bisection over a set of seed panels.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::gauss_kronrod::{qk15, Panel};
use super::Scalar;

/// Outcome of [`integrate_panels`].
#[derive(Clone, Copy, Debug)]
pub struct AdaptiveResult<T> {
    pub value: T,
    pub error: f64,
    pub intervals: usize,
    pub converged: bool,
}

struct Worst<T>(Panel<T>);

impl<T> PartialEq for Worst<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T> Eq for Worst<T> {}
impl<T> PartialOrd for Worst<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Worst<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        // ties broken by position so the refinement order is reproducible
        self.0
            .error
            .total_cmp(&other.0.error)
            .then_with(|| other.0.a.total_cmp(&self.0.a))
    }
}

/// Integrates `f` over [breakpoints[0], breakpoints[last]], seeding one panel
/// per pair of consecutive breakpoints and bisecting the panel with the
/// largest error estimate until the summed estimate is at most `abs_tol` or
/// `max_intervals` panels exist.
pub fn integrate_panels<T: Scalar, F: Fn(f64) -> T>(
    f: F,
    breakpoints: &[f64],
    abs_tol: f64,
    max_intervals: usize,
) -> AdaptiveResult<T> {
    let mut heap = BinaryHeap::with_capacity(breakpoints.len());
    let mut settled: Vec<Panel<T>> = Vec::new();
    let mut total_error = 0.0;
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            let p = qk15(&f, w[0], w[1]);
            total_error += p.error;
            heap.push(Worst(p));
        }
    }

    let mut count = heap.len();
    while total_error > abs_tol && count < max_intervals {
        let Some(Worst(worst)) = heap.pop() else {
            break;
        };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b || worst.b - worst.a <= 4.0 * f64::EPSILON * mid.abs() {
            // cannot be split further in floating point
            settled.push(worst);
            if heap.is_empty() {
                break;
            }
            continue;
        }
        let left = qk15(&f, worst.a, mid);
        let right = qk15(&f, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        heap.push(Worst(left));
        heap.push(Worst(right));
        count += 1;
    }

    let mut panels: Vec<Panel<T>> = heap.into_iter().map(|w| w.0).collect();
    panels.extend(settled);
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let values: Vec<T> = panels.iter().map(|p| p.value).collect();
    let error: f64 = panels.iter().map(|p| p.error).sum();
    AdaptiveResult {
        value: pairwise_sum(&values),
        error,
        intervals: panels.len(),
        converged: error <= abs_tol,
    }
}

/// As [`integrate_panels`], but each seed panel [p, q] is first mapped from
/// u ∈ [0, 1] by s = p + (q − p)·u²(3 − 2u). The Jacobian vanishes at both ends,
/// which turns endpoint singularities such as |s − p|^α or ln|s − p| into
/// much smoother ones.
pub fn integrate_panels_smoothed<T: Scalar, F: Fn(f64) -> T>(
    f: F,
    breakpoints: &[f64],
    abs_tol: f64,
    max_intervals: usize,
) -> AdaptiveResult<T> {
    let last = breakpoints.len().saturating_sub(1);
    let mapped = |u: f64| {
        let j = (u.floor() as usize).min(last.saturating_sub(1));
        let t = u - j as f64;
        let (p, q) = (breakpoints[j], breakpoints[j + 1]);
        let width = q - p;
        let s = p + width * t * t * (3.0 - 2.0 * t);
        f(s) * (width * 6.0 * t * (1.0 - t))
    };
    let seeds: Vec<f64> = (0..=last).map(|j| j as f64).collect();
    integrate_panels(mapped, &seeds, abs_tol, max_intervals)
}

pub(crate) fn pairwise_sum<T: Scalar>(values: &[T]) -> T {
    match values.len() {
        0 => T::zero(),
        1 => values[0],
        n if n <= 8 => values.iter().fold(T::zero(), |acc, &v| acc + v),
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn resolves_an_endpoint_singularity() {
        // ∫_0^1 x^{-1/2} = 2
        let r = integrate_panels(|x: f64| 1.0 / x.sqrt(), &[0.0, 1.0], 1e-10, 500);
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn breakpoints_at_kinks_converge_immediately() {
        let f = |x: f64| (x - 0.3).abs();
        let want = 0.5 * (0.09 + 0.49);
        let with = integrate_panels(f, &[0.0, 0.3, 1.0], 1e-14, 100);
        assert_eq!(with.intervals, 2);
        assert!((with.value - want).abs() < 1e-15);
        let without = integrate_panels(f, &[0.0, 1.0], 1e-12, 1000);
        assert!(without.intervals > 2);
        assert!((without.value - want).abs() < 1e-12);
    }

    #[test]
    fn smoothing_tames_endpoint_singularities() {
        // ∫_0^1 ln s ds = −1 and ∫_1^2 (s − 1)^{0.01} ds = 1/1.01
        let plain = integrate_panels(|s: f64| s.ln(), &[0.0, 1.0], 1e-13, 60);
        let smooth = integrate_panels_smoothed(|s: f64| s.ln(), &[0.0, 1.0], 1e-13, 60);
        assert!(smooth.intervals < plain.intervals || !plain.converged);
        assert!((smooth.value + 1.0).abs() < 1e-13);
        let r = integrate_panels_smoothed(|s: f64| (s - 1.0).powf(0.01), &[1.0, 2.0], 1e-13, 200);
        assert!(r.converged);
        assert!((r.value - 1.0 / 1.01).abs() < 1e-13);
    }

    #[test]
    fn complex_integrand() {
        // ∫_0^1 ds/(s + i) = Log(1 + i) − Log(i)
        let z = Complex64::new(0.0, 1.0);
        let r = integrate_panels(|s: f64| (z + s).inv(), &[0.0, 1.0], 1e-13, 100);
        let want = (z + 1.0).ln() - z.ln();
        assert!((r.value - want).norm() < 1e-13);
    }

    #[test]
    fn reports_non_convergence() {
        let r = integrate_panels(|x: f64| 1.0 / x, &[0.0, 1.0], 1e-10, 20);
        assert!(!r.converged);
        assert_eq!(r.intervals, 20);
    }
}
