//! Normalized-Laplacian spectra of simple connected graphs, the Estrada
//! indices and energy built from them, and closed-form bounds on those
//! indices obtained through majorization.
//!
//! Numeric code is generic over [`Scalar`] (`f64` or `f32`); degree-sequence
//! quantities that need an exact floor are computed in `BigRational`.

pub mod bounds;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod majorization;
pub mod report;
pub mod scalar;
pub mod spectra;

pub use bounds::{BoundError, EigenLocalizers};
pub use generators::{GenError, GenSpec, Model};
pub use graph::{DegreeSequence, DegreeSequenceError, Graph, GraphError};
pub use indices::IndexValues;
pub use majorization::{MajorizationError, RandicExtremals};
pub use report::{BoundEntry, BoundReport, Quantity, Side};
pub use scalar::Scalar;
pub use spectra::{Spectrum, SpectrumError, SymmetricMatrix};

pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type IndexValues64 = IndexValues<f64>;
pub type IndexValues32 = IndexValues<f32>;
pub type EigenLocalizers64 = EigenLocalizers<f64>;
pub type BoundReport64 = BoundReport<f64>;
pub type BoundReport32 = BoundReport<f32>;
