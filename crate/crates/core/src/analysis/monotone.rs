//! Sign checks of (−1)ᵏ f⁽ᵏ⁾ on a grid.
//!
//! Finite differences use the centred stencil
//! D_k f(x) = Σ_j (−1)^j C(k, j) f(x + (k/2 − j) h) / h^k with h = ε^{1/(k+2)} x,
//! which balances the O(h²) truncation against rounding. A margin inside the
//! noise floor ε_f |f(x)| k!/h^k is reported as inconclusive, never as a failure.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::phi::StieltjesRepresentation;

/// Highest order the finite-difference method accepts.
pub const MAX_FD_ORDER: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FiniteDifference,
    Representation,
}

/// Per (order, grid point) margins (−1)ᵏ f⁽ᵏ⁾(x) and verdicts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub grid: Vec<f64>,
    pub orders: Vec<u32>,
    pub max_order: u32,
    /// `margins[i][j]` belongs to `orders[i]` and `grid[j]`.
    pub margins: Vec<Vec<f64>>,
    pub noise_floors: Vec<Vec<f64>>,
    pub verdicts: Vec<Vec<Verdict>>,
    pub method: Method,
}

impl MonotonicityReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.verdicts
            .iter()
            .flatten()
            .filter(|&&v| v == verdict)
            .count()
    }

    /// No verdict is a failure.
    pub fn passed(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    /// Lowest order with a failure, if any.
    pub fn first_failing_order(&self) -> Option<u32> {
        self.orders
            .iter()
            .zip(&self.verdicts)
            .find(|(_, row)| row.contains(&Verdict::Fail))
            .map(|(&k, _)| k)
    }
}

fn verdict(margin: f64, floor: f64) -> Verdict {
    if !margin.is_finite() || margin.abs() <= floor {
        Verdict::Inconclusive
    } else if margin > 0.0 {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("grid is empty".into()));
    }
    match grid.iter().find(|&&x| !(x > 0.0) || !x.is_finite()) {
        Some(&x) => Err(domain("monotonicity grid", x, "x > 0")),
        None => Ok(()),
    }
}

fn check_fd_order(max_order: u32) -> Result<()> {
    if max_order > MAX_FD_ORDER {
        return Err(Error::InvalidParameter(format!(
            "finite-difference order {max_order} exceeds {MAX_FD_ORDER}"
        )));
    }
    Ok(())
}

/// Step for order k at x.
fn step(k: u32, x: f64) -> f64 {
    f64::EPSILON.powf(1.0 / (k as f64 + 2.0)) * x
}

/// k-th centred difference of g at x with step h.
fn central_difference(g: &dyn Fn(f64) -> f64, x: f64, k: u32, h: f64) -> f64 {
    let mut binom = 1.0;
    let mut acc = 0.0;
    for j in 0..=k {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom * g(x + (k as f64 / 2.0 - j as f64) * h);
        binom = binom * (k - j) as f64 / (j + 1) as f64;
    }
    acc / h.powi(k as i32)
}

/// Finite-difference report for `g` over `orders`; `scale(x)` is the absolute
/// size that `precision_hint` is relative to.
fn fd_report(
    g: &dyn Fn(f64) -> f64,
    scale: &dyn Fn(f64) -> f64,
    grid: &[f64],
    orders: Vec<u32>,
    precision_hint: f64,
) -> MonotonicityReport {
    let mut margins = Vec::with_capacity(orders.len());
    let mut floors = Vec::with_capacity(orders.len());
    let mut verdicts = Vec::with_capacity(orders.len());
    for &k in &orders {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let mut m_row = Vec::with_capacity(grid.len());
        let mut f_row = Vec::with_capacity(grid.len());
        let mut v_row = Vec::with_capacity(grid.len());
        for &x in grid {
            let (margin, floor) = if k == 0 {
                (g(x), precision_hint * scale(x))
            } else {
                let h = step(k, x);
                let d = central_difference(g, x, k, h);
                (
                    sign * d,
                    precision_hint * scale(x) * factorial(k) / h.powi(k as i32),
                )
            };
            m_row.push(margin);
            f_row.push(floor);
            v_row.push(verdict(margin, floor));
        }
        margins.push(m_row);
        floors.push(f_row);
        verdicts.push(v_row);
    }
    let max_order = orders.last().copied().unwrap_or(0);
    MonotonicityReport {
        grid: grid.to_vec(),
        orders,
        max_order,
        margins,
        noise_floors: floors,
        verdicts,
        method: Method::FiniteDifference,
    }
}

/// (−1)ⁿ f⁽ⁿ⁾(x) ≥ 0 for n = 0..=max_order by finite differences.
/// `precision_hint` is the relative accuracy of the sampler.
pub fn check_cm(
    f: &dyn Fn(f64) -> f64,
    grid: &[f64],
    max_order: u32,
    precision_hint: f64,
) -> Result<MonotonicityReport> {
    check_grid(grid)?;
    check_fd_order(max_order)?;
    Ok(fd_report(
        f,
        &|x| f(x).abs(),
        grid,
        (0..=max_order).collect(),
        precision_hint,
    ))
}

/// (−1)ᵏ (ln f)⁽ᵏ⁾(x) ≥ 0 for k = 1..=max_order. Every sample of f used by
/// the stencils must be positive.
pub fn check_lcm(
    f: &dyn Fn(f64) -> f64,
    grid: &[f64],
    max_order: u32,
    precision_hint: f64,
) -> Result<MonotonicityReport> {
    check_grid(grid)?;
    check_fd_order(max_order)?;
    for &x in grid {
        for k in 1..=max_order {
            let h = step(k, x);
            for j in 0..=k {
                let t = x + (k as f64 / 2.0 - j as f64) * h;
                let v = f(t);
                if !(v > 0.0) {
                    return Err(domain("check_lcm", t, "f(x) > 0"));
                }
            }
        }
    }
    let log_f = |x: f64| f(x).ln();
    // an error δ relative in f is δ absolute in ln f, on top of rounding of ln f itself
    Ok(fd_report(
        &log_f,
        &|x| f(x).ln().abs().max(1.0),
        grid,
        (1..=max_order).collect(),
        precision_hint,
    ))
}

/// check_cm applied to f^α.
pub fn check_power_cm(
    f: &dyn Fn(f64) -> f64,
    alpha: f64,
    grid: &[f64],
    max_order: u32,
    precision_hint: f64,
) -> Result<MonotonicityReport> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(domain("check_power_cm", alpha, "alpha > 0"));
    }
    let power = |x: f64| (alpha * f(x).ln()).exp();
    // relative error of f^α is α times that of f, plus rounding of α ln f
    let hint = |x: f64| precision_hint * alpha + f64::EPSILON * (alpha * f(x).ln()).abs();
    check_grid(grid)?;
    check_fd_order(max_order)?;
    let worst = grid
        .iter()
        .map(|&x| hint(x))
        .fold(precision_hint * alpha, f64::max);
    Ok(fd_report(
        &power,
        &|x| power(x).abs(),
        grid,
        (0..=max_order).collect(),
        worst,
    ))
}

/// Signs of (−1)ⁿ f⁽ⁿ⁾ from differentiating a Stieltjes representation,
/// n = 0..=max_order (at most 12). The floor is the quadrature's error bound.
pub fn check_cm_via_representation(
    rep: &StieltjesRepresentation,
    grid: &[f64],
    max_order: u32,
) -> Result<MonotonicityReport> {
    check_grid(grid)?;
    if max_order > crate::phi::MAX_REP_ORDER {
        return Err(Error::InvalidParameter(format!(
            "representation order {max_order} exceeds {}",
            crate::phi::MAX_REP_ORDER
        )));
    }
    let orders: Vec<u32> = (0..=max_order).collect();
    let mut margins = Vec::new();
    let mut floors = Vec::new();
    let mut verdicts = Vec::new();
    for &n in &orders {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let mut m_row = Vec::new();
        let mut f_row = Vec::new();
        let mut v_row = Vec::new();
        for &x in grid {
            let q = if n == 0 {
                rep.evaluate(x, 1e-10)?
            } else {
                rep.derivative(x, n, 1e-10)?
            };
            let margin = sign * q.value;
            let floor = q.total_error();
            m_row.push(margin);
            f_row.push(floor);
            v_row.push(verdict(margin, floor));
        }
        margins.push(m_row);
        floors.push(f_row);
        verdicts.push(v_row);
    }
    Ok(MonotonicityReport {
        grid: grid.to_vec(),
        orders,
        max_order,
        margins,
        noise_floors: floors,
        verdicts,
        method: Method::Representation,
    })
}
