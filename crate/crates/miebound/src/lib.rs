//! Bound states of diatomic molecules in a solvable Mie-type well.
//!
//! The potential family treated here has a 1/r^2 repulsive core and a 1/r
//! attractive tail. For that member the radial problem reduces to an
//! effective Coulomb problem, so every bound energy and radial
//! wavefunction is available in closed form. The crate computes them,
//! evaluates the wavefunctions stably at molecular parameter scales, and
//! ships an independent grid eigensolver to check the algebra against
//! numerics.
//!
//! Module map:
//! - [`units`]: quantity-with-units arithmetic and the supported unit
//!   systems, including the hbar^2/(2 mu) kinetic coefficient.
//! - [`potential`]: the potential family and its solvable member.
//! - [`spectrum`]: closed-form energies and the reduced parameters behind
//!   them.
//! - [`specialfn`]: log-gamma and Laguerre polynomials, plus wavefunction
//!   normalization constants in log space.
//! - [`wavefunction`]: radial state evaluation, sampling grids, node
//!   counts, moments, and expectation values.
//! - [`oracle`]: finite-difference and Numerov eigensolvers with
//!   refinement-based error estimates, and the verification workflow.
//! - [`molecules`]: the named parameter registry (TOML).
//! - [`cli`]: the `miebound` command-line front end.

pub mod cli;
pub mod error;
pub mod molecules;
pub mod oracle;
pub mod potential;
pub mod specialfn;
pub mod spectrum;
mod tridiag;
pub mod units;
pub mod wavefunction;

pub use error::{Error, Result};
pub use molecules::{MoleculeSpec, Registry};
pub use oracle::{
    recommended_config, solve_radial, solve_radial_potential, verify_state, verify_state_with,
    OracleConfig, OracleMethod, OracleResult, VerificationReport, VerifyOutcome,
};
pub use potential::{PotentialParams, SpecialPotentialParams};
pub use spectrum::{
    bound_energy, bound_energy_atomic, bound_energy_coulomb_barrier, reduced_params,
    spectrum_table, EllRule, EnergyLevel, QuantumState, ReducedParams,
};
pub use units::{hbar2_over_2m, Dimension, PhysQty, UnitSystem};
pub use wavefunction::{
    default_grid, radial_moment, radial_wavefunction, Observable, RadialFunction, RadialGrid,
    RadialState, Spacing,
};
