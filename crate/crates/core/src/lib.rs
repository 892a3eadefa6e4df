//! Qubit-qutrit states under uniform acceleration.
//!
//! Builds the one-parameter qubit-qutrit family, maps it into region I when
//! the qubit, the qutrit or both are accelerated, and evaluates decoherence,
//! local quantum uncertainty and bidirectional entropic steering.
//!
//! ```
//! use qtsteer_core::{accelerate_closed, decoherence_triple, ModelParams, Scenario};
//!
//! let state = accelerate_closed(&ModelParams::new(Scenario::QutritOnly, 0.1, 0.5)).unwrap();
//! let d = decoherence_triple(&state).unwrap();
//! assert!((d.d_qubit - 0.5).abs() < 1e-12);
//! ```

pub mod error;
pub mod linalg;
pub mod measures;
pub mod model;

pub use error::{Error, Result};
pub use linalg::{hermitian_eig, kron, partial_trace, psd_sqrt, ComplexMatrix, SpectralDecomposition, TensorShape};
pub use measures::{
    conditional_entropy, decoherence_triple, joint_distribution, linear_entropy, lqu, overlap_bound,
    standard_observables, steerability, steering_closed, steering_report, steering_sum_oracle, Convention,
    DecoherenceReport, Direction, JointDistribution, LquReport, Observable, Space, SteeringBound, SteeringReport,
};
pub use model::{
    accelerate_closed, accelerate_closed_with, accelerate_oracle, initial_state, qubit_channel, reduce_qubit,
    reduce_qutrit, BasisLabel, Fidelity, ModelParams, Physicality, QutritLevel, RegionIState, Scenario,
};
