//! Two-level adaptive-Kriging framework for time-variant risk optimization.
//!
//! The outer level runs efficient global optimization (EGO) on the total
//! life-cycle cost of a design, where expected failure costs are assembled
//! from cumulative failure probabilities. The inner level estimates those
//! probabilities by trajectory-counting Monte Carlo, with the limit-state
//! function optionally replaced by an adaptively refined Kriging surrogate
//! built in the augmented design-by-random space (EGRA). Stochastic load
//! processes are discretized with the expansion optimal linear estimation
//! (EOLE) method, so complete load trajectories are simulated and
//! path-dependent failures are captured.
//!
//! Module map:
//! * [`numerics`] — dense symmetric linear algebra, LHS sampling, marginals
//! * [`kriging`] — ordinary Kriging fit / predict / enrichment
//! * [`acquisition`] — expected improvement and expected feasibility
//! * [`process`] — EOLE expansions, pulse processes, degradation models
//! * [`reliability`] — trajectory counting, EGRA surrogate construction
//! * [`cost`] — discounted expected failure cost and total cost
//! * [`optimizer`] — EGO and a particle-swarm reference optimizer
//! * [`problems`] — the three built-in benchmark problems
//! * [`framework`] — orchestration of one full optimization run

pub mod acquisition;
pub mod cost;
pub mod exec;
pub mod framework;
pub mod kriging;
pub mod numerics;
pub mod optimizer;
pub mod problems;
pub mod process;
pub mod reliability;
pub mod validate;

mod error;

pub use error::CoreError;
