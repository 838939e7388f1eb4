//! Crate-wide error type. Every fallible operation returns [`Result`].

use crate::spectrum::QuantumState;
use crate::units::{Dimension, UnitSystem};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input violated a mathematical precondition (sign, range, finiteness).
    #[error("domain error in {context}: {reason}")]
    Domain {
        context: &'static str,
        reason: String,
    },

    /// Two quantities from different unit systems met in one expression.
    /// Convert explicitly before combining.
    #[error("unit system mismatch in {context}: {left:?} vs {right:?}")]
    SystemMismatch {
        context: &'static str,
        left: UnitSystem,
        right: UnitSystem,
    },

    /// A quantity had the wrong physical dimension for its slot.
    #[error("dimension mismatch in {context}: expected {expected:?}, got {found:?}")]
    DimensionMismatch {
        context: &'static str,
        expected: Dimension,
        found: Dimension,
    },

    /// The repulsive core grew past the largest representable float.
    /// Reported instead of returning +inf so callers can distinguish
    /// saturation from a genuine infinity in their own arithmetic.
    #[error("potential saturates f64 range at r = {r:e} (exponent ~ {ln_value:.1} in ln units)")]
    Saturation { r: f64, ln_value: f64 },

    /// The requested state has nonnegative energy on the solver domain.
    #[error("state {state} is not bound on the solver domain (eigenvalue {energy:e} >= 0)")]
    NotBound { state: QuantumState, energy: f64 },

    /// An eigenvector kept significant amplitude at the outer grid edge,
    /// so its eigenvalue is polluted by the artificial wall.
    #[error(
        "eigenvector {index} leaks into the outer boundary (tail amplitude {tail_fraction:e} of peak); enlarge r_max"
    )]
    BoundaryContamination { index: usize, tail_fraction: f64 },

    /// Too few grid points for the number of states requested.
    #[error("grid too coarse: {points} points for {states} states (need at least {needed})")]
    GridTooCoarse {
        points: usize,
        states: usize,
        needed: usize,
    },

    /// Refining the quadrature grid did not settle the integral.
    #[error(
        "quadrature did not converge: refinement still moved the value by {achieved:e} (required {required:e})"
    )]
    QuadratureNotConverged { achieved: f64, required: f64 },

    /// Registry text could not be parsed.
    #[error("molecule registry parse error{}: {reason}", context_suffix(.path))]
    RegistryParse {
        path: Option<String>,
        reason: String,
    },

    /// A registry entry failed validation.
    #[error("molecule '{molecule}', field '{field}': {reason}")]
    InvalidMoleculeField {
        molecule: String,
        field: &'static str,
        reason: String,
    },

    /// Lookup failed; nearby names are offered when any are close.
    #[error("unknown molecule '{name}'{}", suggestion_suffix(.suggestions))]
    UnknownMolecule {
        name: String,
        suggestions: Vec<String>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn context_suffix(path: &Option<String>) -> String {
    match path {
        Some(p) => format!(" in {p}"),
        None => String::new(),
    }
}

fn suggestion_suffix(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!(" (did you mean {}?)", suggestions.join(" or "))
    }
}

impl Error {
    pub(crate) fn domain(context: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            context,
            reason: reason.into(),
        }
    }
}
