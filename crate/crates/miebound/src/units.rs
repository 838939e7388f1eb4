//! Unit systems and tagged physical quantities.
//!
//! Exactly one [`UnitSystem`] tags every quantity entering the physics layer;
//! mixing systems in one expression is rejected at the API boundary instead of
//! silently producing garbage. Three systems are supported:
//!
//! * [`UnitSystem::SpectroscopicEvAngstromAmu`]: energies in eV, lengths in
//!   angstrom, masses in amu. Real-molecule inputs live here.
//! * [`UnitSystem::AtomicHbar1Mu1`]: hartree atomic units, hbar = 1, with the
//!   convention that the reduced mass enters as-is (a mass of 1 means mu = 1).
//! * [`UnitSystem::AtomicHbar1TwoMu1`]: same measurement scale, but the
//!   convention 2*mu = 1 (mu = 1/2). Dimensionless benchmark energies in the
//!   molecular-physics literature usually assume this one.
//!
//! The two atomic systems share conversion factors (they differ only in which
//! reduced-mass value is conventional), so converting between them is the
//! identity on values while still requiring an explicit step.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One hartree in eV (CODATA 2018).
pub const HARTREE_EV: f64 = 27.211_386_245_988;
/// One bohr in angstrom (CODATA 2018).
pub const BOHR_ANGSTROM: f64 = 0.529_177_210_903;
/// amu / electron mass (CODATA 2018).
pub const AMU_PER_ELECTRON_MASS: f64 = 1_822.888_486_209;

const ELECTRON_MASS_AMU: f64 = 1.0 / AMU_PER_ELECTRON_MASS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnitSystem {
    SpectroscopicEvAngstromAmu,
    AtomicHbar1Mu1,
    AtomicHbar1TwoMu1,
}

impl UnitSystem {
    /// Short label used in CLI output headers.
    pub fn label(self) -> &'static str {
        match self {
            UnitSystem::SpectroscopicEvAngstromAmu => "eV/angstrom/amu",
            UnitSystem::AtomicHbar1Mu1 => "atomic (hbar=1, mu=1 convention)",
            UnitSystem::AtomicHbar1TwoMu1 => "atomic (hbar=1, 2mu=1 convention)",
        }
    }

    /// Name of the energy unit in this system.
    pub fn energy_unit(self) -> &'static str {
        match self {
            UnitSystem::SpectroscopicEvAngstromAmu => "eV",
            _ => "hartree",
        }
    }

    /// Name of the length unit in this system.
    pub fn length_unit(self) -> &'static str {
        match self {
            UnitSystem::SpectroscopicEvAngstromAmu => "angstrom",
            _ => "bohr",
        }
    }

    fn is_atomic(self) -> bool {
        !matches!(self, UnitSystem::SpectroscopicEvAngstromAmu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dimension {
    Energy,
    Length,
    Mass,
    /// Coulomb-type strength, e.g. the coefficient of a 1/r potential term.
    EnergyLength,
    /// Inverse-square strength or hbar^2/(2m), coefficient of a 1/r^2 term.
    EnergyLengthSq,
    Dimensionless,
}

impl Dimension {
    /// Size of this dimension's unit in the given system, measured in
    /// spectroscopic units. Ratios of these are the conversion factors.
    fn base(self, system: UnitSystem) -> f64 {
        if !system.is_atomic() {
            return 1.0;
        }
        match self {
            Dimension::Energy => HARTREE_EV,
            Dimension::Length => BOHR_ANGSTROM,
            Dimension::Mass => ELECTRON_MASS_AMU,
            Dimension::EnergyLength => HARTREE_EV * BOHR_ANGSTROM,
            Dimension::EnergyLengthSq => HARTREE_EV * BOHR_ANGSTROM * BOHR_ANGSTROM,
            Dimension::Dimensionless => 1.0,
        }
    }
}

/// A finite scalar tagged with its dimension and unit system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysQty {
    value: f64,
    dimension: Dimension,
    system: UnitSystem,
}

impl PhysQty {
    pub fn new(value: f64, dimension: Dimension, system: UnitSystem) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::domain(
                "PhysQty::new",
                format!("value must be finite, got {value}"),
            ));
        }
        Ok(PhysQty {
            value,
            dimension,
            system,
        })
    }

    pub fn energy(value: f64, system: UnitSystem) -> Result<Self> {
        Self::new(value, Dimension::Energy, system)
    }

    pub fn length(value: f64, system: UnitSystem) -> Result<Self> {
        Self::new(value, Dimension::Length, system)
    }

    pub fn mass(value: f64, system: UnitSystem) -> Result<Self> {
        Self::new(value, Dimension::Mass, system)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn system(&self) -> UnitSystem {
        self.system
    }

    /// Re-expresses this quantity in `target` units. The identity when the
    /// systems already match; exact CODATA factor ratios otherwise.
    pub fn convert(self, target: UnitSystem) -> Result<PhysQty> {
        if self.system == target {
            return Ok(self);
        }
        let from = self.dimension.base(self.system);
        let to = self.dimension.base(target);
        PhysQty::new(self.value * (from / to), self.dimension, target)
    }

    pub(crate) fn expect_dimension(
        &self,
        expected: Dimension,
        context: &'static str,
    ) -> Result<f64> {
        if self.dimension != expected {
            return Err(Error::DimensionMismatch {
                context,
                expected,
                found: self.dimension,
            });
        }
        Ok(self.value)
    }
}

/// hbar^2 / (2m), the kinetic-term coefficient of the radial equation.
///
/// Spectroscopic system: hbar^2/m_e = hartree * bohr^2 exactly, so the
/// coefficient is HARTREE_EV * BOHR_ANGSTROM^2 / (2 m AMU_PER_ELECTRON_MASS)
/// in eV * angstrom^2. Building it from the same three constants that drive
/// unit conversion keeps the eV and hartree routes consistent to rounding;
/// anchoring on (hbar c)^2 / (2 m c^2) instead would inject the independent
/// rounding of the hbar*c and amu literals (about 6e-10) into every
/// cross-system comparison. Atomic systems: 1/(2m) since hbar = 1.
pub fn hbar2_over_2m(mass: PhysQty) -> Result<PhysQty> {
    let m = mass.expect_dimension(Dimension::Mass, "hbar2_over_2m")?;
    if m <= 0.0 {
        return Err(Error::domain(
            "hbar2_over_2m",
            format!("mass must be positive, got {m}"),
        ));
    }
    let value = match mass.system {
        UnitSystem::SpectroscopicEvAngstromAmu => {
            HARTREE_EV * BOHR_ANGSTROM * BOHR_ANGSTROM / (2.0 * m * AMU_PER_ELECTRON_MASS)
        }
        _ => 1.0 / (2.0 * m),
    };
    PhysQty::new(value, Dimension::EnergyLengthSq, mass.system)
}

pub(crate) fn require_same_system(
    context: &'static str,
    quantities: &[&PhysQty],
) -> Result<UnitSystem> {
    let mut iter = quantities.iter();
    let first = iter
        .next()
        .expect("require_same_system called with at least one quantity");
    for q in iter {
        if q.system != first.system {
            return Err(Error::SystemMismatch {
                context,
                left: first.system,
                right: q.system,
            });
        }
    }
    Ok(first.system)
}

/// Validated (mu, V0, a) triple with the derived kinetic coefficient, shared
/// by the spectrum, wavefunction, and oracle entry points.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ProblemInputs {
    pub v0: f64,
    pub a: f64,
    /// hbar^2/(2 mu) in this system's Energy*Length^2 unit.
    pub h22m: f64,
    pub system: UnitSystem,
}

pub(crate) fn problem_inputs(
    context: &'static str,
    mu: PhysQty,
    v0: PhysQty,
    a: PhysQty,
) -> Result<ProblemInputs> {
    let system = require_same_system(context, &[&mu, &v0, &a])?;
    let mu_v = mu.expect_dimension(Dimension::Mass, context)?;
    let v0_v = v0.expect_dimension(Dimension::Energy, context)?;
    let a_v = a.expect_dimension(Dimension::Length, context)?;
    for (name, v) in [("mu", mu_v), ("V0", v0_v), ("a", a_v)] {
        if v <= 0.0 {
            return Err(Error::domain(
                context,
                format!("{name} must be positive, got {v}"),
            ));
        }
    }
    let h22m = hbar2_over_2m(mu)?.value();
    Ok(ProblemInputs {
        v0: v0_v,
        a: a_v,
        h22m,
        system,
    })
}
