//! Numerical toolkit for octonionic cross-product geometry.
//!
//! The crate has three layers:
//!
//! - exact-as-possible floating-point algebra on the imaginary octonions:
//!   cross products, alternating forms, the associativity tensor and the
//!   calibration classifiers ([`octonion`], [`forms`], [`frames`]);
//! - a model Dirac operator on thin slabs `[0, eps] x T^2` with mixed
//!   boundary conditions, its spectrum, solver and scaling studies
//!   ([`thindirac`]);
//! - the nonlinear residual for graphs over the flat associative slab, its
//!   exact linearization and a damped Newton solver ([`instanton`]).
//!
//! The `g2kit` binary exposes the experiment harness (`algebra-check`,
//! `spectrum`, `scaling`, `newton`, `sweep`) on top of these modules.

pub mod config;
pub mod forms;
pub mod frames;
pub mod grid;
pub mod instanton;
pub mod linalg;
pub mod octonion;
pub mod report;
pub mod runner;
pub mod scalar;
pub mod thindirac;
