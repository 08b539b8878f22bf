//! Empirical Bayes credible bands for nonparametric regression.
//!
//! The pipeline: sample a test signal on an equispaced grid with Gaussian
//! noise, map the data to sequence-model coefficients with an orthogonal
//! half-sample cosine transform, fit the prior smoothness by marginal
//! likelihood, draw from the resulting posterior, and turn the draws into a
//! confidence band by keeping the 95% closest to the posterior mean and
//! taking their pointwise envelope. A simulation harness replays this over
//! seeded Monte Carlo replications and aggregates coverage and width
//! statistics.

pub mod band;
pub mod ebayes;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod testfns;
pub mod transform;

pub use band::Band;
pub use ebayes::{CoefficientDraws, PosteriorParams};
pub use error::{Error, Result};
pub use harness::{ReplicationMetrics, SimConfig, SimulationOutput, SummaryRow};
pub use testfns::TestFunction;
pub use transform::{CosineTransform, RegressionData, SequenceObservations};
