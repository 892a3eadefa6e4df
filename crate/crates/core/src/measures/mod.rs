//! Scalar quantities of a region-I state: decoherence, local quantum
//! uncertainty, measurement statistics and steering.

pub mod decoherence;
pub mod entropy;
pub mod lqu;
pub mod observable;
pub mod steering;

pub use decoherence::{decoherence_triple, linear_entropy, DecoherenceReport};
pub use entropy::{conditional_entropy, joint_distribution, shannon_bits, JointDistribution};
pub use lqu::{lqu, LquReport};
pub use observable::{overlap_bound, spin_matrix, standard_observables, Axis, Observable, OverlapBound, Space};
pub use steering::{
    steerability, steering_closed, steering_report, steering_sum_oracle, Convention, Direction, SteeringBound,
    SteeringReport,
};
