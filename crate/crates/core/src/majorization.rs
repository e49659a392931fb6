//! Majorization extremal vectors for pendant-type degree sequences and the
//! Randić bounds they induce.
//!
//! For a sequence `(d_1, ..., d_{n-h}, 1, ..., 1)` with `h > 0` pendant
//! vertices, the edge vector `x_e = 1/d_i + 1/d_j` has `h` pendant components
//! in `[1 + 1/d_1, 1 + 1/d_{n-h}]` and `m - h` inner components in
//! `[1/d_1 + 1/d_2, 1/d_{n-h} + 1/d_{n-h-1}]`, summing to `n`. Since
//! `R_{-1} = (|x|^2 - sum 1/d_i) / 2` and `|x|^2` is Schur-convex, the
//! maximal and minimal elements of that set bracket `R_{-1}`.
//!
//! Everything here is exact: the parameters are rationals in the degrees and
//! the floor that fixes the block sizes is taken on a rational.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{DegreeSequence, Graph};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MajorizationError {
    #[error("NotPendantForm: sequence has no degree-one vertices")]
    NotPendantForm,
    #[error("StarGraph: fewer than two non-pendant vertices")]
    StarGraph,
    #[error("OrderingPremiseViolated: inner upper end is not below the pendant lower end")]
    OrderingPremiseViolated,
    #[error("DegenerateCase: {0}")]
    DegenerateCase(String),
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// The parameters of a validated pendant-type degree sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PendantForm {
    pub n: usize,
    pub m: usize,
    pub h: usize,
    pub d1: usize,
    pub d2: usize,
    /// `d_{n-h}`, the smallest non-pendant degree.
    pub d_last: usize,
    /// `d_{n-h-1}`.
    pub d_before_last: usize,
    pub inv_degree_sum: BigRational,
}

/// Box limits of the constraint set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetLimits {
    /// `1 + 1/d_1`
    pub pendant_min: BigRational,
    /// `1 + 1/d_{n-h}`
    pub pendant_max: BigRational,
    /// `1/d_1 + 1/d_2`
    pub inner_min: BigRational,
    /// `1/d_{n-h} + 1/d_{n-h-1}`
    pub inner_max: BigRational,
    /// `h * pendant_max + (m - h) * inner_min`
    pub max_case_threshold: BigRational,
    /// `h * pendant_min + (m - h) * inner_max`
    pub min_case_threshold: BigRational,
}

impl PendantForm {
    pub fn limits(&self) -> SetLimits {
        let pendant_min = BigRational::one() + ratio(1, self.d1);
        let pendant_max = BigRational::one() + ratio(1, self.d_last);
        let inner_min = ratio(1, self.d1) + ratio(1, self.d2);
        let inner_max = ratio(1, self.d_last) + ratio(1, self.d_before_last);
        let h = int(self.h);
        let rest = int(self.m - self.h);
        SetLimits {
            max_case_threshold: &h * &pendant_max + &rest * &inner_min,
            min_case_threshold: &h * &pendant_min + &rest * &inner_max,
            pendant_min,
            pendant_max,
            inner_min,
            inner_max,
        }
    }
}

pub fn classify_pendant_sequence(ds: &DegreeSequence) -> Result<PendantForm, MajorizationError> {
    let d = ds.values();
    let n = d.len();
    let h = ds.pendant_count();
    if h == 0 {
        return Err(MajorizationError::NotPendantForm);
    }
    if n - h < 2 {
        return Err(MajorizationError::StarGraph);
    }
    let form = PendantForm {
        n,
        m: ds.edge_count(),
        h,
        d1: d[0],
        d2: d[1],
        d_last: d[n - h - 1],
        d_before_last: d[n - h - 2],
        inv_degree_sum: d.iter().fold(BigRational::zero(), |acc, &x| acc + ratio(1, x)),
    };
    let lim = form.limits();
    if lim.inner_max >= lim.pendant_min {
        return Err(MajorizationError::OrderingPremiseViolated);
    }
    if form.m <= form.h {
        return Err(MajorizationError::DegenerateCase("no inner edges".into()));
    }
    Ok(form)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MaximalCase {
    /// `n < a*`: the pendant block is split around `theta`.
    PendantSplit,
    /// `n >= a*`: pendant block saturated, inner block split around `theta`.
    InnerSplit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalElement {
    pub case: MaximalCase,
    pub k: usize,
    pub theta: BigRational,
    pub vector: Vec<BigRational>,
}

fn floor_nonneg(x: &BigRational) -> Result<usize, MajorizationError> {
    if x.is_negative() {
        return Err(MajorizationError::DegenerateCase(format!("negative block count {x}")));
    }
    x.floor().to_integer().to_usize().ok_or_else(|| MajorizationError::DegenerateCase("block count overflow".into()))
}

fn check_vector(form: &PendantForm, lim: &SetLimits, v: &[BigRational]) -> Result<(), MajorizationError> {
    if v.len() != form.m {
        return Err(MajorizationError::DegenerateCase(format!("vector length {} != m = {}", v.len(), form.m)));
    }
    if v.windows(2).any(|w| w[0] < w[1]) {
        return Err(MajorizationError::DegenerateCase("vector is not nonincreasing".into()));
    }
    let (pendant, inner) = v.split_at(form.h);
    if pendant.iter().any(|x| *x < lim.pendant_min || *x > lim.pendant_max)
        || inner.iter().any(|x| *x < lim.inner_min || *x > lim.inner_max)
    {
        return Err(MajorizationError::DegenerateCase("component outside its box".into()));
    }
    let sum = v.iter().fold(BigRational::zero(), |a, x| a + x);
    if sum != int(form.n) {
        return Err(MajorizationError::DegenerateCase(format!("components sum to {sum}, expected {}", form.n)));
    }
    Ok(())
}

/// Maximal element of the constraint set under majorization.
///
/// `theta` is `n` minus the other components; its position is fixed by the
/// case, so a `theta` that breaks monotonicity is reported as
/// [`MajorizationError::DegenerateCase`].
pub fn maximal_element(ds: &DegreeSequence) -> Result<MaximalElement, MajorizationError> {
    let form = classify_pendant_sequence(ds)?;
    let lim = form.limits();
    let (n, m, h) = (int(form.n), form.m, form.h);
    let mm = int(m);
    let hh = int(h);
    let (case, k, vector) = if n < lim.max_case_threshold {
        let span = &lim.pendant_max - &lim.pendant_min;
        if span.is_zero() {
            return Err(MajorizationError::DegenerateCase("pendant box is a point but n < a*".into()));
        }
        let k = floor_nonneg(&((&n - &hh * (&lim.pendant_min - &lim.inner_min) - &mm * &lim.inner_min) / span))?;
        if k + 1 > h {
            return Err(MajorizationError::DegenerateCase(format!("k = {k} leaves no room for theta in the pendant block")));
        }
        let fixed = int(k) * &lim.pendant_max + int(h - k - 1) * &lim.pendant_min + int(m - h) * &lim.inner_min;
        let theta = &n - fixed;
        let mut v = vec![lim.pendant_max.clone(); k];
        v.push(theta);
        v.extend(std::iter::repeat(lim.pendant_min.clone()).take(h - k - 1));
        v.extend(std::iter::repeat(lim.inner_min.clone()).take(m - h));
        (MaximalCase::PendantSplit, k, v)
    } else {
        let span = &lim.inner_max - &lim.inner_min;
        let mut k = if span.is_zero() {
            h
        } else {
            floor_nonneg(&((&n - &hh * (&lim.pendant_max - &lim.inner_max) - &mm * &lim.inner_min) / span))?
        };
        if k < h {
            return Err(MajorizationError::DegenerateCase(format!("k = {k} below h = {h}")));
        }
        if k == m {
            // every component saturated: theta sits on the inner upper end
            k = m - 1;
        }
        if k >= m {
            return Err(MajorizationError::DegenerateCase(format!("k = {k} exceeds m - 1 = {}", m - 1)));
        }
        let fixed = &hh * &lim.pendant_max + int(k - h) * &lim.inner_max + int(m - k - 1) * &lim.inner_min;
        let theta = &n - fixed;
        let mut v = vec![lim.pendant_max.clone(); h];
        v.extend(std::iter::repeat(lim.inner_max.clone()).take(k - h));
        v.push(theta);
        v.extend(std::iter::repeat(lim.inner_min.clone()).take(m - k - 1));
        (MaximalCase::InnerSplit, k, v)
    };
    check_vector(&form, &lim, &vector)?;
    // theta sits at index k in both layouts
    let theta = vector[k].clone();
    Ok(MaximalElement { case, k, theta, vector })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinimalCase {
    /// `n < a~`: pendant block at its lower end.
    PendantAtMin,
    /// `n >= a~`: inner block at its upper end.
    InnerAtMax,
}

/// Minimal element of the constraint set under majorization: two constant
/// blocks of sizes `h` and `m - h`.
pub fn minimal_element(ds: &DegreeSequence) -> Result<(MinimalCase, Vec<BigRational>), MajorizationError> {
    let form = classify_pendant_sequence(ds)?;
    let lim = form.limits();
    let n = int(form.n);
    let (h, rest) = (form.h, form.m - form.h);
    let (case, head, tail) = if n < lim.min_case_threshold {
        let tail = (&n - int(h) * &lim.pendant_min) / int(rest);
        (MinimalCase::PendantAtMin, lim.pendant_min.clone(), tail)
    } else {
        let head = (&n - &lim.inner_max * int(rest)) / int(h);
        (MinimalCase::InnerAtMax, head, lim.inner_max.clone())
    };
    let mut v = vec![head; h];
    v.extend(std::iter::repeat(tail).take(rest));
    check_vector(&form, &lim, &v)?;
    Ok((case, v))
}

fn half_excess(v: &[BigRational], inv_sum: &BigRational) -> BigRational {
    let sq = v.iter().fold(BigRational::zero(), |a, x| a + x * x);
    (sq - inv_sum) / int(2)
}

/// Everything the Randić majorization bounds are built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandicExtremals {
    pub form: PendantForm,
    pub limits: SetLimits,
    pub max: MaximalElement,
    pub min_case: MinimalCase,
    pub x_min: Vec<BigRational>,
    /// `(|x_min|^2 - sum 1/d_i) / 2`
    pub lower: BigRational,
    /// `(|x_max|^2 - sum 1/d_i) / 2`
    pub upper: BigRational,
}

impl RandicExtremals {
    pub fn compute(ds: &DegreeSequence) -> Result<Self, MajorizationError> {
        let form = classify_pendant_sequence(ds)?;
        let max = maximal_element(ds)?;
        let (min_case, x_min) = minimal_element(ds)?;
        let lower = half_excess(&x_min, &form.inv_degree_sum);
        let upper = half_excess(&max.vector, &form.inv_degree_sum);
        Ok(Self { limits: form.limits(), form, max, min_case, x_min, lower, upper })
    }

    pub fn x_max(&self) -> &[BigRational] {
        &self.max.vector
    }

    pub fn bounds<T: Scalar>(&self) -> (T, T) {
        (T::from_rational(&self.lower), T::from_rational(&self.upper))
    }
}

/// `(L_1, U_1)` with `L_1 <= R_{-1}(G) <= U_1` for every graph realizing `ds`.
pub fn randic_bounds_majorization<T: Scalar>(ds: &DegreeSequence) -> Result<(T, T), MajorizationError> {
    Ok(RandicExtremals::compute(ds)?.bounds())
}

/// `(n/(2 d_max), n/(2 d_min))`.
pub fn randic_bounds_classical<T: Scalar>(ds: &DegreeSequence) -> (T, T) {
    let n = T::from_usize_lossy(ds.len());
    let two = T::lit(2.0);
    (n / (two * T::from_usize_lossy(ds.max())), n / (two * T::from_usize_lossy(ds.min())))
}

/// Sorted (nonincreasing) vector of `1/d_i + 1/d_j` over the edges of `g`.
pub fn edge_vector<T: Scalar>(g: &Graph) -> Vec<T> {
    let inv = |v: usize| T::one() / T::from_usize_lossy(g.degree(v));
    let mut x: Vec<T> = g.edges().iter().map(|&(i, j)| inv(i) + inv(j)).collect();
    x.sort_by(|a, b| b.partial_cmp(a).unwrap());
    x
}

/// Exact edge vector, sorted nonincreasing.
pub fn edge_vector_exact(g: &Graph) -> Vec<BigRational> {
    let mut x: Vec<BigRational> =
        g.edges().iter().map(|&(i, j)| ratio(1, g.degree(i)) + ratio(1, g.degree(j))).collect();
    x.sort_by(|a, b| b.cmp(a));
    x
}

/// `true` when `hi` majorizes `lo`: equal totals and every prefix sum of
/// `hi` (sorted nonincreasing) is at least that of `lo`. `tol` absorbs
/// rounding.
pub fn majorizes<T: Scalar>(hi: &[T], lo: &[T], tol: T) -> bool {
    if hi.len() != lo.len() {
        return false;
    }
    let sorted = |v: &[T]| {
        let mut s = v.to_vec();
        s.sort_by(|a, b| b.partial_cmp(a).unwrap());
        s
    };
    let (a, b) = (sorted(hi), sorted(lo));
    let (mut sa, mut sb) = (T::zero(), T::zero());
    for (x, y) in a.iter().zip(&b) {
        sa = sa + *x;
        sb = sb + *y;
        if sa < sb - tol {
            return false;
        }
    }
    (sa - sb).abs() <= tol
}

/// Exact version of [`majorizes`] for rational vectors.
pub fn majorizes_exact(hi: &[BigRational], lo: &[BigRational]) -> bool {
    if hi.len() != lo.len() {
        return false;
    }
    let mut a = hi.to_vec();
    let mut b = lo.to_vec();
    a.sort_by(|x, y| y.cmp(x));
    b.sort_by(|x, y| y.cmp(x));
    let (mut sa, mut sb) = (BigRational::zero(), BigRational::zero());
    for (x, y) in a.iter().zip(&b) {
        sa += x;
        sb += y;
        if sa < sb {
            return false;
        }
    }
    sa == sb
}

/// Lowest common multiple of the degrees; handy for scaling exact vectors
/// to integers in tests and diagnostics.
pub fn degree_lcm(ds: &DegreeSequence) -> usize {
    ds.values().iter().fold(1usize, |acc, &d| acc.lcm(&d))
}
