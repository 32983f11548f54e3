//! Desk-scale laboratory for 1D polynuclear growth (PNG), Gaussian random
//! matrix ensembles, and the Tracy-Widom edge statistics they share.
//!
//! The crate is organized around the objects it simulates and measures:
//!
//! * [`pointfield`] — seeded Poisson nucleation fields and the light-cone
//!   coordinate transform,
//! * [`combinatorics`] — longest increasing subsequences, the
//!   Robinson-Schensted correspondence, Greene invariants, Plancherel sampling,
//! * [`png`] — droplet and flat PNG surface heights, the event-driven
//!   dynamics oracle, multilayer line ensembles, and edge rescalings,
//! * [`rmt`] — GUE/GOE sampling, eigenvalues, and Ornstein-Uhlenbeck
//!   (Dyson) matrix evolution,
//! * [`airy`], [`painleve`], [`fredholm`], [`kernels`], [`tw`] — the exact
//!   limit laws: Airy functions, Hastings-McLeod Painleve II, Fredholm
//!   determinants, Airy/GOE kernels, and the Tracy-Widom distributions by
//!   two independent routes,
//! * [`stats`] — empirical distributions and Kolmogorov-Smirnov comparison.

pub mod airy;
pub mod combinatorics;
pub mod fredholm;
pub mod kernels;
pub mod painleve;
pub mod pointfield;
pub mod png;
pub mod quad;
pub mod rmt;
pub mod seed;
pub mod stats;
pub mod tw;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// An input value violates a structural precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A numerical method failed to converge or left its validity region.
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
