//! Finite quantum groups as multi-matrix *-algebras, random walks on them,
//! and Fourier-theoretic bounds on the distance to the Haar state.
//!
//! A finite quantum group is described here by a [`hopf::QuantumGroup`]: a
//! direct sum of complex matrix blocks together with a comultiplication,
//! counit, antipode and tracial Haar weights, every axiom checked numerically
//! rather than assumed. [`catalog`] builds the standard examples (function
//! algebras and group rings of classical groups, the Kac–Paljutkin quantum
//! group, the Sekine family), [`walks`] runs convolution dynamics of states,
//! [`fourier`] computes exact total-variation / 2-norm / separation distances
//! to the Haar state, and [`bounds`] evaluates the representation-theoretic
//! upper and lower mixing bounds next to those exact distances.
//!
//! The `examples/` directory contains one runnable program per capability;
//! `qgwalk` is a thin CLI over the same entry points.

pub mod blockalg;
pub mod bounds;
pub mod catalog;
pub mod dual;
pub mod error;
pub mod fourier;
pub mod hopf;
pub mod io;
pub mod irreps;
pub mod walks;

pub use blockalg::{AlgebraElement, BlockShape, HaarWeights, LinearMap, NormP};
pub use error::{Error, Result};
pub use hopf::{AxiomReport, QuantumGroup};
pub use irreps::{Irrep, IrrepTable};
pub use walks::{Functional, State};

