//! Eigenvalue localizers and closed-form bounds on NEE, lEE and NE.
//!
//! Every bound carries its applicability guard. A failed guard is an
//! `Err(BoundError::GuardViolated)`, never a clamped value: the guards decide
//! whether the closed form is the extremal value of its constraint set.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::indices::edge_inv_deg_sum_exact;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("NotApplicable: {0}")]
    NotApplicable(String),
    #[error("GuardViolated ({bound}): {reason}")]
    GuardViolated { bound: &'static str, reason: String },
}

fn guard(bound: &'static str, ok: bool, reason: impl FnOnce() -> String) -> Result<(), BoundError> {
    if ok {
        Ok(())
    } else {
        Err(BoundError::GuardViolated { bound, reason: reason() })
    }
}

fn nf<T: Scalar>(n: usize) -> T {
    T::from_usize_lossy(n)
}

fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `b = n + 2 sum_E 1/(d_i d_j)`, `h* = floor(n^2 / b)` and the two
/// localizers `gamma_1 >= Q`, `gamma_2 >= R`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenLocalizers<T> {
    pub b: T,
    pub h_star: usize,
    pub q: Option<T>,
    pub r: Option<T>,
}

impl<T: Scalar> EigenLocalizers<T> {
    pub fn compute(g: &Graph) -> Self {
        let b = localizer_b(g);
        let h_star = floor_ratio(&(int(g.order() * g.order()) / &b));
        Self { b: T::from_rational(&b), h_star, q: localizer_q(g).ok(), r: localizer_r(g).ok() }
    }
}

fn localizer_b(g: &Graph) -> BigRational {
    let s = edge_inv_deg_sum_exact(g);
    int(g.order()) + &s + &s
}

fn floor_ratio(x: &BigRational) -> usize {
    x.floor().to_integer().to_usize().unwrap_or(usize::MAX)
}

/// `Q = (n + sqrt((b(h*+1) - n^2)/h*)) / (1 + h*)`; the floor and the
/// radicand are exact.
pub fn localizer_q<T: Scalar>(g: &Graph) -> Result<T, BoundError> {
    let n = g.order();
    if n < 2 {
        return Err(BoundError::NotApplicable("Q needs n >= 2".into()));
    }
    let b = localizer_b(g);
    let n2 = int(n * n);
    let h_star = floor_ratio(&(&n2 / &b));
    if h_star == 0 {
        return Err(BoundError::NotApplicable("h* = 0".into()));
    }
    let rad = (&b * int(h_star + 1) - &n2) / int(h_star);
    if rad.is_negative() {
        return Err(BoundError::NotApplicable(format!("Q radicand {rad} < 0")));
    }
    Ok((nf::<T>(n) + T::from_rational(&rad).sqrt()) / nf::<T>(1 + h_star))
}

/// `R = (n - sqrt((b(n-1) - n^2)/(n-2))) / (n-1)`.
pub fn localizer_r<T: Scalar>(g: &Graph) -> Result<T, BoundError> {
    let n = g.order();
    if n < 3 {
        return Err(BoundError::NotApplicable("R needs n >= 3".into()));
    }
    let b = localizer_b(g);
    let rad = (&b * int(n - 1) - int(n * n)) / int(n - 2);
    if rad.is_negative() {
        return Err(BoundError::NotApplicable(format!("R radicand {rad} < 0")));
    }
    Ok((nf::<T>(n) - T::from_rational(&rad).sqrt()) / nf::<T>(n - 1))
}

/// NEE lower bound from `gamma_1 >= alpha`:
/// `1/e + e^{alpha-1} + (n-2) e^{(2-alpha)/(n-2)}`.
pub fn nee_lower_alpha<T: Scalar>(n: usize, alpha: T) -> Result<T, BoundError> {
    const NAME: &str = "nee_lower_alpha";
    guard(NAME, n >= 3, || format!("n = {n} < 3"))?;
    let n_t = nf::<T>(n);
    let floor = n_t / (n_t - T::one());
    guard(NAME, alpha >= floor - T::guard_slack(), || format!("alpha = {alpha} < n/(n-1)"))?;
    let rest = n_t - T::lit(2.0);
    Ok(T::E().recip() + (alpha - T::one()).exp() + rest * ((T::lit(2.0) - alpha) / rest).exp())
}

/// `(n-1) e^{1/(n-1)} + 1/e`, the `alpha = n/(n-1)` case.
pub fn nee_lower_li<T: Scalar>(n: usize) -> Result<T, BoundError> {
    guard("nee_lower_li", n >= 2, || format!("n = {n} < 2"))?;
    let m = nf::<T>(n - 1);
    Ok(m * m.recip().exp() + T::E().recip())
}

/// NEE lower bound from `gamma_1 >= alpha`, `gamma_2 >= beta`; needs
/// `alpha >= beta` and `alpha + beta(n-2) > n`.
pub fn nee_lower_alpha_beta<T: Scalar>(n: usize, alpha: T, beta: T) -> Result<T, BoundError> {
    const NAME: &str = "nee_lower_alpha_beta";
    guard(NAME, n >= 4, || format!("n = {n} < 4"))?;
    let n_t = nf::<T>(n);
    guard(NAME, alpha >= beta, || format!("alpha = {alpha} < beta = {beta}"))?;
    let lhs = alpha + beta * (n_t - T::lit(2.0));
    guard(NAME, lhs - n_t > T::guard_slack() * n_t, || format!("alpha + beta(n-2) = {lhs} <= n"))?;
    let rest = n_t - T::lit(3.0);
    Ok(T::E().recip()
        + (alpha - T::one()).exp()
        + (beta - T::one()).exp()
        + rest * ((T::lit(3.0) - alpha - beta) / rest).exp())
}

/// Bipartite graphs: `1/e + e + (n-2)`.
pub fn nee_lower_bipartite<T: Scalar>(n: usize, bipartite: bool) -> Result<T, BoundError> {
    const NAME: &str = "nee_lower_bipartite";
    guard(NAME, bipartite, || "graph is not bipartite".into())?;
    guard(NAME, n >= 3, || format!("n = {n} < 3"))?;
    Ok(T::E().recip() + T::E() + nf::<T>(n - 2))
}

/// Bipartite graphs with `gamma_2 >= beta`, `1 < beta <= 2`.
pub fn nee_lower_bipartite_beta<T: Scalar>(n: usize, beta: T, bipartite: bool) -> Result<T, BoundError> {
    const NAME: &str = "nee_lower_bipartite_beta";
    guard(NAME, bipartite, || "graph is not bipartite".into())?;
    guard(NAME, n >= 4, || format!("n = {n} < 4"))?;
    guard(NAME, beta > T::one() && beta <= T::lit(2.0), || format!("beta = {beta} outside (1, 2]"))?;
    let rest = nf::<T>(n - 3);
    Ok(T::E().recip() + T::E() + (beta - T::one()).exp() + rest * ((T::one() - beta) / rest).exp())
}

/// lEE analogue of [`nee_lower_alpha`]: `1 + e^alpha + (n-2) e^{(n-alpha)/(n-2)}`.
pub fn lee_lower_alpha<T: Scalar>(n: usize, alpha: T) -> Result<T, BoundError> {
    const NAME: &str = "lee_lower_alpha";
    guard(NAME, n >= 3, || format!("n = {n} < 3"))?;
    let n_t = nf::<T>(n);
    guard(NAME, alpha >= n_t / (n_t - T::one()) - T::guard_slack(), || format!("alpha = {alpha} < n/(n-1)"))?;
    let rest = n_t - T::lit(2.0);
    Ok(T::one() + alpha.exp() + rest * ((n_t - alpha) / rest).exp())
}

/// lEE analogue of [`nee_lower_alpha_beta`]:
/// `1 + e^alpha + e^beta + (n-3) e^{(n-alpha-beta)/(n-3)}`.
///
/// The leading `1` is the `gamma_n = 0` term, so this is exactly
/// `e * nee_lower_alpha_beta`.
pub fn lee_lower_alpha_beta<T: Scalar>(n: usize, alpha: T, beta: T) -> Result<T, BoundError> {
    const NAME: &str = "lee_lower_alpha_beta";
    guard(NAME, n >= 4, || format!("n = {n} < 4"))?;
    let n_t = nf::<T>(n);
    guard(NAME, alpha >= beta, || format!("alpha = {alpha} < beta = {beta}"))?;
    let lhs = alpha + beta * (n_t - T::lit(2.0));
    guard(NAME, lhs - n_t > T::guard_slack() * n_t, || format!("alpha + beta(n-2) = {lhs} <= n"))?;
    let rest = n_t - T::lit(3.0);
    Ok(T::one() + alpha.exp() + beta.exp() + rest * ((n_t - alpha - beta) / rest).exp())
}

/// NE upper bound from `(gamma_1 - 1)^2 >= k1` with
/// `a = 2 sum_E 1/(d_i d_j) - 1`: `1 + sqrt(k1) + sqrt((n-2)(a-k1))`.
pub fn ne_upper_k1<T: Scalar>(n: usize, a: T, k1: T) -> Result<T, BoundError> {
    const NAME: &str = "ne_upper_k1";
    guard(NAME, n >= 3, || format!("n = {n} < 3"))?;
    guard(NAME, k1 >= T::zero(), || format!("k1 = {k1} < 0"))?;
    guard(NAME, k1 <= a + T::guard_slack(), || format!("k1 = {k1} > a = {a}"))?;
    let slack = (a - k1).max(T::zero());
    Ok(T::one() + k1.sqrt() + (nf::<T>(n - 2) * slack).sqrt())
}

/// NE upper bound with a second level `k2`:
/// `1 + sqrt(k1) + sqrt(k2) + sqrt((n-3)(a-k1-k2))`.
///
/// Guards are taken on the squared deviations themselves: `k1 >= k2` and
/// `k1 + k2(n-2) > a`, which is what makes `(k1, k2, c, ..., c)` the
/// minimal element.
pub fn ne_upper_k1_k2<T: Scalar>(n: usize, a: T, k1: T, k2: T) -> Result<T, BoundError> {
    const NAME: &str = "ne_upper_k1_k2";
    guard(NAME, n >= 4, || format!("n = {n} < 4"))?;
    guard(NAME, k2 >= T::zero() && k1 >= k2, || format!("need k1 = {k1} >= k2 = {k2} >= 0"))?;
    guard(NAME, k1 + k2 <= a + T::guard_slack(), || format!("k1 + k2 = {} > a = {a}", k1 + k2))?;
    let lhs = k1 + k2 * nf::<T>(n - 2);
    guard(NAME, lhs > a, || format!("k1 + k2(n-2) = {lhs} <= a = {a}"))?;
    let slack = (a - k1 - k2).max(T::zero());
    Ok(T::one() + k1.sqrt() + k2.sqrt() + (nf::<T>(n - 3) * slack).sqrt())
}

/// Bipartite NE upper bound, `a = 2 sum_E 1/(d_i d_j) - 2`: `2 + sqrt(a(n-2))`.
pub fn ne_upper_bipartite<T: Scalar>(n: usize, a: T, bipartite: bool) -> Result<T, BoundError> {
    const NAME: &str = "ne_upper_bipartite";
    guard(NAME, bipartite, || "graph is not bipartite".into())?;
    guard(NAME, n >= 3, || format!("n = {n} < 3"))?;
    guard(NAME, a >= -T::guard_slack(), || format!("a = {a} < 0"))?;
    Ok(T::lit(2.0) + (a.max(T::zero()) * nf::<T>(n - 2)).sqrt())
}

/// Bipartite NE upper bound with `gamma_2 >= beta`, `k2 = (beta - 1)^2`:
/// `2 + sqrt(k2) + sqrt((n-3)(a-k2))`. Requires `(a-2)/(n-2) < beta <= 2`
/// and `beta >= 1` so that the square is monotone.
pub fn ne_upper_bipartite_beta<T: Scalar>(n: usize, a: T, beta: T, bipartite: bool) -> Result<T, BoundError> {
    const NAME: &str = "ne_upper_bipartite_beta";
    guard(NAME, bipartite, || "graph is not bipartite".into())?;
    guard(NAME, n >= 4, || format!("n = {n} < 4"))?;
    guard(NAME, beta >= T::one() && beta <= T::lit(2.0), || format!("beta = {beta} outside [1, 2]"))?;
    let floor = (a - T::lit(2.0)) / nf::<T>(n - 2);
    guard(NAME, beta > floor, || format!("beta = {beta} <= (a-2)/(n-2) = {floor}"))?;
    let k2 = (beta - T::one()).powi(2);
    guard(NAME, k2 <= a + T::guard_slack(), || format!("k2 = {k2} > a = {a}"))?;
    Ok(T::lit(2.0) + k2.sqrt() + (nf::<T>(n - 3) * (a - k2).max(T::zero())).sqrt())
}

/// `2 floor(n/2)`.
pub fn ne_upper_cavers1<T: Scalar>(n: usize) -> T {
    nf(2 * (n / 2))
}

/// `sqrt(15/28) (n+1)`.
pub fn ne_upper_cavers2<T: Scalar>(n: usize) -> T {
    (T::lit(15.0) / T::lit(28.0)).sqrt() * nf::<T>(n + 1)
}

/// NEE bounds from a Randić bracket `lower_r <= R_{-1} <= upper_r`.
#[derive(Debug, Clone, PartialEq)]
pub struct RandicPair<T> {
    pub lower: Result<T, BoundError>,
    pub upper: Result<T, BoundError>,
}

/// NEE bounds from a Randić bracket.
///
/// Bipartite: `1/e + e + sqrt((n-2)^2 + 4(L-1))` and
/// `1/e + e + (n-3) - sqrt(2(U-1)) + e^{2(U-1)}`.
/// Otherwise: `sqrt((n-1)(1 + (n-2) e^{2/(n-1)}) + 4L)` and
/// `1/e + (n-1) - sqrt(2U-1) + e^{2U-1}`.
///
/// The exponential in the upper forms dominates the series remainder
/// `e^{s} - 1 - s` (with `s` the square root term) only when its exponent is
/// at least `s`, i.e. `U >= 3/2` (bipartite) and `U >= 1` (general).
/// Below that the upper side is not applicable.
pub fn nee_randic_bounds<T: Scalar>(n: usize, lower_r: T, upper_r: T, bipartite: bool) -> RandicPair<T> {
    const NAME: &str = "nee_randic_bounds";
    let e = T::E();
    let one = T::one();
    let two = T::lit(2.0);
    let order = guard(NAME, lower_r <= upper_r + T::guard_slack(), || format!("L = {lower_r} > U = {upper_r}"));
    let size = guard(NAME, n >= 3, || format!("n = {n} < 3"));
    let pre = order.and(size);
    if bipartite {
        let lower = pre.clone().and_then(|_| {
            let rad = nf::<T>(n - 2).powi(2) + T::lit(4.0) * (lower_r - one);
            guard(NAME, rad >= T::zero(), || format!("lower radicand {rad} < 0"))?;
            Ok(e.recip() + e + rad.sqrt())
        });
        let upper = pre.and_then(|_| {
            guard(NAME, upper_r >= T::lit(1.5), || format!("U = {upper_r} < 3/2"))?;
            let x = two * (upper_r - one);
            Ok(e.recip() + e + nf::<T>(n - 3) - x.sqrt() + x.exp())
        });
        RandicPair { lower, upper }
    } else {
        let lower = pre.clone().map(|_| {
            let n1 = nf::<T>(n - 1);
            (n1 * (one + nf::<T>(n - 2) * (two / n1).exp()) + T::lit(4.0) * lower_r).sqrt()
        });
        let upper = pre.and_then(|_| {
            guard(NAME, upper_r >= one, || format!("U = {upper_r} < 1"))?;
            let x = two * upper_r - one;
            Ok(e.recip() + nf::<T>(n - 1) - x.sqrt() + x.exp())
        });
        RandicPair { lower, upper }
    }
}

/// lEE bounds from a Randić bracket, non-bipartite graphs; `e` times the
/// general form of [`nee_randic_bounds`]:
/// `sqrt((n-1)(e^2 + (n-2) e^{2n/(n-1)}) + 4 e^2 L)` and
/// `1 + e((n-1) - sqrt(2U-1)) + e^{2U}`.
pub fn lee_randic_bounds<T: Scalar>(n: usize, lower_r: T, upper_r: T, bipartite: bool) -> RandicPair<T> {
    const NAME: &str = "lee_randic_bounds";
    if bipartite {
        let err = || Err(BoundError::GuardViolated { bound: NAME, reason: "graph is bipartite".into() });
        return RandicPair { lower: err(), upper: err() };
    }
    let e = T::E();
    let e2 = e * e;
    let one = T::one();
    let pre = guard(NAME, lower_r <= upper_r + T::guard_slack(), || format!("L = {lower_r} > U = {upper_r}"))
        .and(guard(NAME, n >= 3, || format!("n = {n} < 3")));
    let lower = pre.clone().map(|_| {
        let n_t = nf::<T>(n);
        let n1 = nf::<T>(n - 1);
        (n1 * (e2 + nf::<T>(n - 2) * (T::lit(2.0) * n_t / n1).exp()) + T::lit(4.0) * e2 * lower_r).sqrt()
    });
    let upper = pre.and_then(|_| {
        guard(NAME, upper_r >= one, || format!("U = {upper_r} < 1"))?;
        let x = T::lit(2.0) * upper_r - one;
        Ok(one + e * (nf::<T>(n - 1) - x.sqrt()) + (T::lit(2.0) * upper_r).exp())
    });
    RandicPair { lower, upper }
}

/// Literature lEE bounds: three lower, one upper.
#[derive(Debug, Clone, PartialEq)]
pub struct HakimiBounds<T> {
    /// `n e`
    pub lower1: T,
    /// `2 + sqrt(n(n-1)e^2 - 6n + 4)`
    pub lower2: Result<T, BoundError>,
    /// `sqrt(n(n-1)e^2 + 4 R_{-1} + 5n)`
    pub lower3: Result<T, BoundError>,
    /// `e^n + R_{-1} + n(3-n)/2 - 1`; `+inf` once `e^n` overflows.
    pub upper4: Result<T, BoundError>,
}

pub fn lee_hakimi_bounds<T: Scalar>(n: usize, randic: T) -> HakimiBounds<T> {
    const NAME: &str = "lee_hakimi_bounds";
    let e = T::E();
    let n_t = nf::<T>(n);
    let base = n_t * (n_t - T::one()) * e * e;
    let rad2 = base - T::lit(6.0) * n_t + T::lit(4.0);
    let lower2 = guard(NAME, rad2 >= T::zero(), || format!("radicand {rad2} < 0")).map(|_| T::lit(2.0) + rad2.sqrt());
    let positive = guard(NAME, randic > T::zero(), || format!("R_-1 = {randic} <= 0"));
    let lower3 = positive.clone().map(|_| (base + T::lit(4.0) * randic + T::lit(5.0) * n_t).sqrt());
    let upper4 = positive.map(|_| n_t.exp() + randic + n_t * (T::lit(3.0) - n_t) / T::lit(2.0) - T::one());
    HakimiBounds { lower1: n_t * e, lower2, lower3, upper4 }
}

/// `|bound - exact| / exact`.
pub fn relative_error<T: Scalar>(bound: T, exact: T) -> T {
    (bound - exact).abs() / exact
}

/// Exact `h* = floor(n^2/b)` for diagnostics; zero when `b` is zero.
pub fn h_star_exact(g: &Graph) -> usize {
    let b = localizer_b(g);
    if b.is_zero() {
        0
    } else {
        floor_ratio(&(int(g.order() * g.order()) / b))
    }
}
