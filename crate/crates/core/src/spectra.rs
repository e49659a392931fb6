//! Normalized Laplacian construction and a dense cyclic Jacobi eigenvalue
//! solver.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("NoConvergence: Jacobi sweep cap {sweeps} reached, off-diagonal norm ratio {ratio:e}")]
    NoConvergence { sweeps: usize, ratio: f64 },
    #[error("matrix order {0} is below 2")]
    TooSmall(usize),
}

/// Dense symmetric matrix. Writes go through [`SymmetricMatrix::set`], which
/// mirrors, so `a(i,j) == a(j,i)` always holds bit-for-bit.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix<T> {
    order: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymmetricMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        Self { order, data: vec![T::zero(); order * order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    pub fn trace(&self) -> T {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    fn off_diagonal_norm(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.order {
            for j in i + 1..self.order {
                let x = self.get(i, j);
                s = s + x * x;
            }
        }
        (s + s).sqrt()
    }
}

/// `I - D^{-1/2} A D^{-1/2}` for a graph without isolated vertices.
pub fn normalized_laplacian<T: Scalar>(g: &Graph) -> SymmetricMatrix<T> {
    let n = g.order();
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, T::one());
    }
    for &(i, j) in g.edges() {
        let dd = T::from_usize_lossy(g.degree(i) * g.degree(j));
        m.set(i, j, -T::one() / dd.sqrt());
    }
    m
}

/// Combinatorial Laplacian `D - A`; used only for cross-checks.
pub fn combinatorial_laplacian<T: Scalar>(g: &Graph) -> SymmetricMatrix<T> {
    let n = g.order();
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, T::from_usize_lossy(g.degree(i)));
    }
    for &(i, j) in g.edges() {
        m.set(i, j, -T::one());
    }
    m
}

/// Sorted eigenvalues `gamma_1 >= ... >= gamma_n` with the solver's accuracy
/// bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<T> {
    values: Vec<T>,
    tolerance: T,
}

impl<T: Scalar> Spectrum<T> {
    /// Wraps arbitrary values (sorted here); useful for injected-error checks.
    pub fn from_values(mut values: Vec<T>, tolerance: T) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are not NaN"));
        Self { values, tolerance }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `gamma_1`, the largest eigenvalue.
    pub fn largest(&self) -> T {
        self.values[0]
    }

    /// `gamma_2`.
    pub fn second(&self) -> T {
        self.values[1]
    }

    /// Values as used by the index formulas: entries in `[-tol, 0)` become 0
    /// and the smallest one is pinned to exactly 0 when it is within `tol`.
    pub fn clamped(&self) -> Vec<T> {
        let tol = self.tolerance;
        let mut out: Vec<T> = self
            .values
            .iter()
            .map(|&g| if g < T::zero() && g >= -tol { T::zero() } else { g })
            .collect();
        if let Some(last) = out.last_mut() {
            if last.abs() <= tol {
                *last = T::zero();
            }
        }
        out
    }
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations with
/// Rutishauser's update. Stops once the off-diagonal Frobenius norm is below
/// `T::jacobi_tol() * ||m||_F`.
pub fn eigenvalues_symmetric<T: Scalar>(m: &SymmetricMatrix<T>) -> Result<Spectrum<T>, SpectrumError> {
    eigenvalues_with(m, T::jacobi_tol(), 100)
}

pub fn eigenvalues_with<T: Scalar>(
    m: &SymmetricMatrix<T>,
    rel_tol: T,
    max_sweeps: usize,
) -> Result<Spectrum<T>, SpectrumError> {
    let n = m.order();
    if n < 2 {
        return Err(SpectrumError::TooSmall(n));
    }
    let mut a = m.clone();
    let norm = a.frobenius_norm();
    let target = rel_tol * norm;
    let half = T::lit(0.5);
    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off <= target || norm == T::zero() {
            break;
        }
        if sweeps == max_sweeps {
            let ratio = (off / norm).to_f64().unwrap_or(f64::NAN);
            return Err(SpectrumError::NoConvergence { sweeps, ratio });
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == T::zero() {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) * half / apq;
                // tangent of the smaller rotation angle
                let t = if theta.abs() > T::lit(1e150) {
                    half / theta
                } else {
                    let s = theta.signum();
                    s / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                let tau = s / (T::one() + c);
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, T::zero());
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a.get(r, p);
                    let arq = a.get(r, q);
                    a.set(r, p, arp - s * (arq + tau * arp));
                    a.set(r, q, arq + s * (arp - tau * arq));
                }
            }
        }
    }
    let values = (0..n).map(|i| a.get(i, i)).collect();
    Ok(Spectrum::from_values(values, T::spectrum_tol()))
}

/// Normalized Laplacian spectrum of `g`.
pub fn spectrum<T: Scalar>(g: &Graph) -> Result<Spectrum<T>, SpectrumError> {
    eigenvalues_symmetric(&normalized_laplacian::<T>(g))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PropertyCheck<T> {
    pub passed: bool,
    pub residual: T,
}

/// Outcome of checking the four basic properties of a normalized
/// Laplacian spectrum against its graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lemma1Report<T> {
    /// `sum gamma_i = n`
    pub trace: PropertyCheck<T>,
    /// `sum gamma_i^2 = n + 2 sum_E 1/(d_i d_j)`
    pub square_trace: PropertyCheck<T>,
    /// `n/(n-1) <= gamma_1 <= 2` and every eigenvalue in `[0, 2]`
    pub range: PropertyCheck<T>,
    /// `gamma_n = 0` and `gamma_{n-1} != 0`
    pub kernel: PropertyCheck<T>,
    /// `gamma_1 = n/(n-1)` within tolerance
    pub complete_equality: bool,
    /// `gamma_1 = 2` within 1e-6
    pub bipartite_equality: bool,
    /// `bipartite_equality` agrees with BFS 2-coloring
    pub bipartite_consistent: bool,
}

impl<T> Lemma1Report<T> {
    pub fn all_passed(&self) -> bool {
        self.trace.passed && self.square_trace.passed && self.range.passed && self.kernel.passed && self.bipartite_consistent
    }
}

pub fn lemma1_check<T: Scalar>(g: &Graph, s: &Spectrum<T>) -> Lemma1Report<T> {
    let tol = T::check_tol();
    let n = g.order();
    let nf = T::from_usize_lossy(n);
    let gam = s.values();

    let trace_res = (gam.iter().copied().sum::<T>() - nf).abs();
    let inv: T = crate::indices::edge_inv_deg_sum(g);
    let sq_res = (gam.iter().map(|&x| x * x).sum::<T>() - (nf + (inv + inv))).abs();

    let lower = nf / (nf - T::one());
    let two = T::lit(2.0);
    let g1 = s.largest();
    let mut range_res = (lower - g1).max(g1 - two).max(T::zero());
    for &x in gam {
        range_res = range_res.max(-x).max(x - two);
    }

    let gn = gam[n - 1];
    let gn1 = gam[n - 2];
    let kernel_res = gn.abs();
    let kernel_ok = kernel_res <= tol && gn1 > tol;

    let bipartite_equality = (g1 - two).abs() <= T::lit(1e-6).max(tol);
    Lemma1Report {
        trace: PropertyCheck { passed: trace_res <= tol * nf, residual: trace_res },
        square_trace: PropertyCheck { passed: sq_res <= tol * nf, residual: sq_res },
        range: PropertyCheck { passed: range_res <= tol, residual: range_res },
        kernel: PropertyCheck { passed: kernel_ok, residual: kernel_res },
        complete_equality: (g1 - lower).abs() <= tol,
        bipartite_equality,
        bipartite_consistent: bipartite_equality == g.is_bipartite(),
    }
}
