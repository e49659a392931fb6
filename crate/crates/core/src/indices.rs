//! Exact values of the spectral indices and of the Randić index `R_{-1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::spectra::Spectrum;

/// Normalized Laplacian Estrada index `sum e^{gamma_i - 1}`.
pub fn nee<T: Scalar>(s: &Spectrum<T>) -> T {
    s.clamped().into_iter().map(|g| (g - T::one()).exp()).sum()
}

/// `sum e^{gamma_i}`, i.e. `e * nee`.
pub fn lee<T: Scalar>(s: &Spectrum<T>) -> T {
    s.clamped().into_iter().map(T::exp).sum()
}

/// Normalized Laplacian energy `sum |gamma_i - 1|`.
pub fn ne<T: Scalar>(s: &Spectrum<T>) -> T {
    s.clamped().into_iter().map(|g| (g - T::one()).abs()).sum()
}

/// `sum_{(i,j) in E} 1/(d_i d_j)`.
pub fn edge_inv_deg_sum<T: Scalar>(g: &Graph) -> T {
    g.edges()
        .iter()
        .map(|&(i, j)| T::one() / T::from_usize_lossy(g.degree(i) * g.degree(j)))
        .sum()
}

/// Same sum in exact rational arithmetic.
pub fn edge_inv_deg_sum_exact(g: &Graph) -> BigRational {
    g.edges().iter().fold(BigRational::zero(), |acc, &(i, j)| {
        acc + BigRational::new(BigInt::from(1), BigInt::from(g.degree(i) * g.degree(j)))
    })
}

/// Randić index `R_{-1}`.
///
/// Also evaluated through `(sum_E (1/d_i + 1/d_j)^2 - sum_V 1/d_i) / 2`; the
/// two routes are asserted to agree in debug builds.
pub fn randic_minus_one<T: Scalar>(g: &Graph) -> T {
    let direct = edge_inv_deg_sum::<T>(g);
    debug_assert!(
        (direct - randic_dual_form::<T>(g)).abs() <= T::lit(1e-10).max(T::check_tol()) * direct.max(T::one()),
        "Randić dual-formula mismatch"
    );
    direct
}

/// Randić index through the squared edge-vector norm.
pub fn randic_dual_form<T: Scalar>(g: &Graph) -> T {
    let inv = |v: usize| T::one() / T::from_usize_lossy(g.degree(v));
    let sq: T = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let x = inv(i) + inv(j);
            x * x
        })
        .sum();
    let vsum: T = (0..g.order()).map(inv).sum();
    (sq - vsum) / T::lit(2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndexValues<T> {
    pub nee: T,
    pub lee: T,
    pub ne: T,
    pub randic: T,
    pub edge_inv_deg_sum: T,
}

impl<T: Scalar> IndexValues<T> {
    pub fn compute(g: &Graph, s: &Spectrum<T>) -> Self {
        let r = randic_minus_one::<T>(g);
        Self { nee: nee(s), lee: lee(s), ne: ne(s), randic: r, edge_inv_deg_sum: r }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::spectrum;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::E;

    #[test]
    fn estrada_values() {
        let c4 = spectrum::<f64>(&Graph::cycle(4)).unwrap();
        assert_abs_diff_eq!(nee(&c4), 5.0862, epsilon = 1e-4);
        assert_abs_diff_eq!(nee(&c4), 1.0 / E + 2.0 + E, epsilon = 1e-12);
        assert_abs_diff_eq!(lee(&c4), 13.826, epsilon = 1e-3);
        let k4 = spectrum::<f64>(&Graph::complete(4)).unwrap();
        assert_abs_diff_eq!(nee(&k4), 4.5547, epsilon = 1e-4);
        assert_abs_diff_eq!(lee(&k4), E * 4.5547, epsilon = 1e-3);
        let p4 = spectrum::<f64>(&Graph::path(4)).unwrap();
        assert_abs_diff_eq!(nee(&p4), 5.3414, epsilon = 1e-4);
        let zeros = Spectrum::from_values(vec![0.0, 0.0], 1e-9);
        assert_eq!(lee(&zeros), 2.0);
    }

    #[test]
    fn energy_values() {
        for (g, want) in [(Graph::complete(4), 2.0), (Graph::cycle(4), 2.0), (Graph::path(4), 3.0)] {
            assert_abs_diff_eq!(ne(&spectrum::<f64>(&g).unwrap()), want, epsilon = 1e-10);
        }
    }

    #[test]
    fn randic_values() {
        assert_abs_diff_eq!(randic_minus_one::<f64>(&Graph::star(7)), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(randic_minus_one::<f64>(&Graph::cycle(4)), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(edge_inv_deg_sum::<f64>(&Graph::complete(2)), 1.0, epsilon = 1e-14);
        for n in 3..12 {
            let kn = Graph::complete(n);
            let want = n as f64 / (2.0 * (n as f64 - 1.0));
            assert_abs_diff_eq!(edge_inv_deg_sum::<f64>(&kn), want, epsilon = 1e-13);
            assert_eq!(
                edge_inv_deg_sum_exact(&kn),
                BigRational::new(BigInt::from(n), BigInt::from(2 * (n - 1)))
            );
        }
        let p4 = Graph::path(4);
        assert_eq!(edge_inv_deg_sum_exact(&p4), BigRational::new(5.into(), 4.into()));
        assert_abs_diff_eq!(randic_dual_form::<f64>(&p4), 1.25, epsilon = 1e-14);
    }
}
