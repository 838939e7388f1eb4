//! Closed-form bound-state energies of the solvable (2,1) well.
//!
//! Substituting u = r R into the radial Schroedinger equation for
//! V(r) = V0 [ (a/r)^2 / 2 - a/r ] gives a Coulomb problem with an effective,
//! generally non-integer angular momentum. Writing
//!
//! ```text
//! A      = 2 mu V0 a / hbar^2              (Coulomb strength, 1/length)
//! gamma  = mu V0 a^2 / hbar^2 + l(l+1)     (inverse-square strength)
//! Lambda = (-1 + sqrt(1 + 4 gamma)) / 2    (so Lambda(Lambda+1) = gamma)
//! kappa  = A / (2 (n + Lambda + 1))        (decay constant of the state)
//! ```
//!
//! the spectrum is hydrogen-like in the effective quantum number
//! n + Lambda + 1:
//!
//! ```text
//! E(n,l) = - (hbar^2 / 2 mu) kappa^2
//!        = - (2 mu V0^2 a^2 / hbar^2) / (2n + 1 + sqrt((2l+1)^2 + 4 mu V0 a^2 / hbar^2))^2
//! ```
//!
//! Both algebraic routes are implemented and cross-checked in the tests; the
//! bracket form is what [`bound_energy`] returns, the kappa route lives on in
//! [`ReducedParams::eps_sq`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::units::{self, Dimension, PhysQty, UnitSystem};

/// Radial and angular quantum numbers. `n` counts the nodes of the radial
/// wavefunction; `ell` is the orbital angular momentum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuantumState {
    pub n: u32,
    pub ell: u32,
}

impl QuantumState {
    pub fn new(n: u32, ell: u32) -> Self {
        QuantumState { n, ell }
    }
}

impl std::fmt::Display for QuantumState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, l={})", self.n, self.ell)
    }
}

/// The dimensionless and scaled quantities the closed form runs on.
/// Values are expressed in `system` units; `beta` and `coulomb_strength`
/// carry 1/length, `kappa` 1/length, `eps_sq` energy, the rest are pure
/// numbers.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ReducedParams {
    /// -2 mu V0 a / hbar^2; negative for an attractive well.
    pub beta: f64,
    /// mu V0 a^2 / hbar^2 + l(l+1), coefficient of the 1/r^2 term.
    pub gamma: f64,
    /// The bound energy via the decay-constant route, -(hbar^2/2mu) kappa^2.
    pub eps_sq: f64,
    /// 2 mu V0 a / hbar^2 = -beta.
    pub coulomb_strength: f64,
    /// Effective angular momentum, Lambda(Lambda+1) = gamma.
    pub lambda: f64,
    /// sqrt(-2 mu E) / hbar = coulomb_strength / (2 (n + Lambda + 1)).
    pub kappa: f64,
    pub system: UnitSystem,
}

/// A single bound level: quantum numbers, tagged energy, and the reduced
/// quantities it was computed from.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EnergyLevel {
    pub state: QuantumState,
    pub energy: PhysQty,
    pub reduced: ReducedParams,
}

/// Which ell values accompany each n in a spectrum table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllRule {
    /// ell = 0..=n, the triangular layout of band-spectroscopy tables.
    Triangle,
    /// ell = 0..=min(n, cap).
    Capped(u32),
}

impl EllRule {
    fn max_ell(self, n: u32) -> u32 {
        match self {
            EllRule::Triangle => n,
            EllRule::Capped(cap) => n.min(cap),
        }
    }
}

/// Energy via the bracket route. `strength_sq` is A_s^2 / (hbar^2/2mu) with
/// A_s the 1/r coefficient; `root_add` is 4 B_s / (hbar^2/2mu) with B_s the
/// 1/r^2 coefficient. Shared by every public energy entry point so that
/// convention bridges are bit-exact.
fn bracket_energy(strength_sq: f64, root_add: f64, state: QuantumState) -> f64 {
    let two_l_plus_1 = 2.0 * state.ell as f64 + 1.0;
    let denom = 2.0 * state.n as f64 + 1.0 + (two_l_plus_1 * two_l_plus_1 + root_add).sqrt();
    -strength_sq / (denom * denom)
}

/// Reduced quantities for a problem with 1/r coefficient `-A_s` and 1/r^2
/// coefficient `B_s`, both already divided by hbar^2/(2 mu).
fn reduced_core(
    coulomb: f64,
    barrier: f64,
    state: QuantumState,
    h22m: f64,
    system: UnitSystem,
) -> ReducedParams {
    let l = state.ell as f64;
    let gamma = barrier + l * (l + 1.0);
    let lambda = 0.5 * (-1.0 + (1.0 + 4.0 * gamma).sqrt());
    let kappa = coulomb / (2.0 * (state.n as f64 + lambda + 1.0));
    ReducedParams {
        beta: -coulomb,
        gamma,
        eps_sq: -h22m * kappa * kappa,
        coulomb_strength: coulomb,
        lambda,
        kappa,
        system,
    }
}

/// Reduced quantities for the (2,1) well.
pub fn reduced_params(
    mu: PhysQty,
    v0: PhysQty,
    a: PhysQty,
    state: QuantumState,
) -> Result<ReducedParams> {
    let p = units::problem_inputs("reduced_params", mu, v0, a)?;
    Ok(reduced_core(
        p.v0 * p.a / p.h22m,
        0.5 * p.v0 * p.a * p.a / p.h22m,
        state,
        p.h22m,
        p.system,
    ))
}

/// Bound-state energy of the (2,1) well for quantum numbers (n, ell).
/// Always negative; the well supports infinitely many such levels.
pub fn bound_energy(
    mu: PhysQty,
    v0: PhysQty,
    a: PhysQty,
    state: QuantumState,
) -> Result<EnergyLevel> {
    let p = units::problem_inputs("bound_energy", mu, v0, a)?;
    let energy = bracket_energy(
        p.v0 * p.v0 * p.a * p.a / p.h22m,
        2.0 * p.v0 * p.a * p.a / p.h22m,
        state,
    );
    Ok(EnergyLevel {
        state,
        energy: PhysQty::energy(energy, p.system)?,
        reduced: reduced_core(
            p.v0 * p.a / p.h22m,
            0.5 * p.v0 * p.a * p.a / p.h22m,
            state,
            p.h22m,
            p.system,
        ),
    })
}

/// The same spectrum in the bare-number convention hbar = 1, 2 mu = 1:
///
/// ```text
/// E(n,l) = - V0^2 a^2 / (2n + 1 + sqrt((2l+1)^2 + 2 V0 a^2))^2
/// ```
///
/// Runs through the identical floating-point path as [`bound_energy`] with
/// mu = 1/2, so the two agree bit-for-bit, not just to rounding.
pub fn bound_energy_atomic(v0: f64, a: f64, state: QuantumState) -> Result<f64> {
    for (name, v) in [("V0", v0), ("a", a)] {
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::domain(
                "bound_energy_atomic",
                format!("{name} must be positive and finite, got {v}"),
            ));
        }
    }
    let h22m = 1.0;
    Ok(bracket_energy(
        v0 * v0 * a * a / h22m,
        2.0 * v0 * a * a / h22m,
        state,
    ))
}

/// Bound energy for the underlying Coulomb-plus-inverse-square problem
/// V(r) = -A_s / r + B_s / r^2 with A_s > 0, B_s >= 0.
///
/// At B_s = 0 this collapses to the hydrogen-like ladder
/// E = -mu A_s^2 / (2 hbar^2 (n + l + 1)^2). Substituting A_s = V0 a,
/// B_s = V0 a^2 / 2 recovers [`bound_energy`].
pub fn bound_energy_coulomb_barrier(
    mu: PhysQty,
    a_strength: PhysQty,
    b_strength: PhysQty,
    state: QuantumState,
) -> Result<EnergyLevel> {
    let system = units::require_same_system(
        "bound_energy_coulomb_barrier",
        &[&mu, &a_strength, &b_strength],
    )?;
    let a_s =
        a_strength.expect_dimension(Dimension::EnergyLength, "bound_energy_coulomb_barrier")?;
    let b_s =
        b_strength.expect_dimension(Dimension::EnergyLengthSq, "bound_energy_coulomb_barrier")?;
    if a_s <= 0.0 {
        return Err(Error::domain(
            "bound_energy_coulomb_barrier",
            format!("attractive strength must be positive, got {a_s}; no bound states otherwise"),
        ));
    }
    if b_s < 0.0 {
        return Err(Error::domain(
            "bound_energy_coulomb_barrier",
            format!("inverse-square coefficient must be nonnegative, got {b_s}"),
        ));
    }
    let h22m = units::hbar2_over_2m(mu)?.value();
    let energy = bracket_energy(a_s * a_s / h22m, 4.0 * b_s / h22m, state);
    Ok(EnergyLevel {
        state,
        energy: PhysQty::energy(energy, system)?,
        reduced: reduced_core(a_s / h22m, b_s / h22m, state, h22m, system),
    })
}

/// All levels with n = 0..=n_max, ell per `ell_rule`, ordered by (n, ell).
pub fn spectrum_table(
    mu: PhysQty,
    v0: PhysQty,
    a: PhysQty,
    n_max: u32,
    ell_rule: EllRule,
) -> Result<Vec<EnergyLevel>> {
    let mut levels = Vec::new();
    for n in 0..=n_max {
        for ell in 0..=ell_rule.max_ell(n) {
            levels.push(bound_energy(mu, v0, a, QuantumState::new(n, ell))?);
        }
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn atomic_mass_half() -> PhysQty {
        PhysQty::mass(0.5, UnitSystem::AtomicHbar1TwoMu1).unwrap()
    }

    fn atomic_energy(v: f64) -> PhysQty {
        PhysQty::energy(v, UnitSystem::AtomicHbar1TwoMu1).unwrap()
    }

    fn atomic_length(v: f64) -> PhysQty {
        PhysQty::length(v, UnitSystem::AtomicHbar1TwoMu1).unwrap()
    }

    #[test]
    fn reduced_quantities_for_unit_well() {
        // hbar = 1, 2mu = 1, V0 = 1, a = 1, l = 0.
        let r = reduced_params(
            atomic_mass_half(),
            atomic_energy(1.0),
            atomic_length(1.0),
            QuantumState::new(0, 0),
        )
        .unwrap();
        assert_relative_eq!(r.gamma, 0.5, max_relative = 1e-15);
        assert_relative_eq!(r.lambda, 0.366_025_403_784_438_6, max_relative = 1e-14);
        assert_relative_eq!(r.beta, -1.0, max_relative = 1e-15);
        assert_relative_eq!(r.coulomb_strength, 1.0, max_relative = 1e-15);
        assert_relative_eq!(
            r.kappa,
            1.0 / (2.0 * (r.lambda + 1.0)),
            max_relative = 1e-15
        );
    }

    #[test]
    fn unit_well_ground_and_first_excited() {
        let ground = bound_energy(
            atomic_mass_half(),
            atomic_energy(1.0),
            atomic_length(1.0),
            QuantumState::new(0, 0),
        )
        .unwrap();
        // -1 / (1 + sqrt(3))^2
        assert_relative_eq!(
            ground.energy.value(),
            -0.133_974_596_215_561_35,
            max_relative = 1e-14
        );
        let excited = bound_energy(
            atomic_mass_half(),
            atomic_energy(1.0),
            atomic_length(1.0),
            QuantumState::new(1, 0),
        )
        .unwrap();
        // -1 / (3 + sqrt(3))^2
        assert_relative_eq!(
            excited.energy.value(),
            -0.044_658_198_738_520_46,
            max_relative = 1e-14
        );
    }

    #[test]
    fn bare_number_convention_is_bit_identical_to_general_form() {
        for (v0, a) in [(1.0, 1.0), (0.5, 2.0), (5.0, 0.5), (3.3, 1.7)] {
            for (n, ell) in [(0u32, 0u32), (1, 0), (4, 2), (7, 7)] {
                let s = QuantumState::new(n, ell);
                let atomic = bound_energy_atomic(v0, a, s).unwrap();
                let general =
                    bound_energy(atomic_mass_half(), atomic_energy(v0), atomic_length(a), s)
                        .unwrap();
                assert_eq!(
                    atomic,
                    general.energy.value(),
                    "paths diverged for V0={v0}, a={a}, {s}"
                );
            }
        }
    }

    #[test]
    fn two_algebraic_routes_agree() {
        // Bracket form vs -(hbar^2/2mu) kappa^2 over a deterministic grid;
        // the wide random sweep lives in the acceptance suite.
        for v0 in [0.2, 1.0, 4.7] {
            for a in [0.3, 1.0, 2.9] {
                for n in 0..=6 {
                    for ell in 0..=n {
                        let level = bound_energy(
                            atomic_mass_half(),
                            atomic_energy(v0),
                            atomic_length(a),
                            QuantumState::new(n, ell),
                        )
                        .unwrap();
                        assert_relative_eq!(
                            level.energy.value(),
                            level.reduced.eps_sq,
                            max_relative = 1e-14
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hydrogen_ladder_at_zero_barrier() {
        // mu = 1/2, hbar = 1, A = 1: E = -1 / (4 (n + l + 1)^2).
        let mu = atomic_mass_half();
        let a_s =
            PhysQty::new(1.0, Dimension::EnergyLength, UnitSystem::AtomicHbar1TwoMu1).unwrap();
        let b_s = PhysQty::new(
            0.0,
            Dimension::EnergyLengthSq,
            UnitSystem::AtomicHbar1TwoMu1,
        )
        .unwrap();
        let ground = bound_energy_coulomb_barrier(mu, a_s, b_s, QuantumState::new(0, 0)).unwrap();
        assert_relative_eq!(ground.energy.value(), -0.25, max_relative = 1e-15);
        for n in 0..=10u32 {
            for ell in 0..=n {
                let level =
                    bound_energy_coulomb_barrier(mu, a_s, b_s, QuantumState::new(n, ell)).unwrap();
                let principal = (n + ell + 1) as f64;
                assert_relative_eq!(
                    level.energy.value(),
                    -1.0 / (4.0 * principal * principal),
                    max_relative = 1e-14
                );
            }
        }
    }

    #[test]
    fn barrier_shifts_the_coulomb_ground_state() {
        // A = 2, B = 1, hbar = 1, 2mu = 1: E0 = -4 / (1 + sqrt(5))^2.
        let level = bound_energy_coulomb_barrier(
            atomic_mass_half(),
            PhysQty::new(2.0, Dimension::EnergyLength, UnitSystem::AtomicHbar1TwoMu1).unwrap(),
            PhysQty::new(
                1.0,
                Dimension::EnergyLengthSq,
                UnitSystem::AtomicHbar1TwoMu1,
            )
            .unwrap(),
            QuantumState::new(0, 0),
        )
        .unwrap();
        assert_relative_eq!(
            level.energy.value(),
            -0.381_966_011_250_105_15,
            max_relative = 1e-14
        );
    }

    #[test]
    fn well_parameters_substituted_into_barrier_form_recover_the_spectrum() {
        let (v0, a) = (2.6, 0.9);
        for (n, ell) in [(0u32, 0u32), (2, 1), (5, 5)] {
            let s = QuantumState::new(n, ell);
            let direct =
                bound_energy(atomic_mass_half(), atomic_energy(v0), atomic_length(a), s).unwrap();
            let via_strengths = bound_energy_coulomb_barrier(
                atomic_mass_half(),
                PhysQty::new(
                    v0 * a,
                    Dimension::EnergyLength,
                    UnitSystem::AtomicHbar1TwoMu1,
                )
                .unwrap(),
                PhysQty::new(
                    0.5 * v0 * a * a,
                    Dimension::EnergyLengthSq,
                    UnitSystem::AtomicHbar1TwoMu1,
                )
                .unwrap(),
                s,
            )
            .unwrap();
            assert_relative_eq!(
                direct.energy.value(),
                via_strengths.energy.value(),
                max_relative = 1e-14
            );
            assert_relative_eq!(
                direct.reduced.kappa,
                via_strengths.reduced.kappa,
                max_relative = 1e-14
            );
            assert_relative_eq!(
                direct.reduced.lambda,
                via_strengths.reduced.lambda,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn repulsive_coulomb_strength_is_rejected() {
        let bad = bound_energy_coulomb_barrier(
            atomic_mass_half(),
            PhysQty::new(-1.0, Dimension::EnergyLength, UnitSystem::AtomicHbar1TwoMu1).unwrap(),
            PhysQty::new(
                0.0,
                Dimension::EnergyLengthSq,
                UnitSystem::AtomicHbar1TwoMu1,
            )
            .unwrap(),
            QuantumState::new(0, 0),
        );
        assert!(matches!(bad, Err(Error::Domain { .. })));
    }

    #[test]
    fn triangular_table_has_the_right_shape_and_order() {
        let levels = spectrum_table(
            atomic_mass_half(),
            atomic_energy(1.0),
            atomic_length(1.0),
            5,
            EllRule::Triangle,
        )
        .unwrap();
        assert_eq!(levels.len(), 21, "n<=5 triangle should hold 21 levels");
        let mut expected = Vec::new();
        for n in 0..=5u32 {
            for ell in 0..=n {
                expected.push((n, ell));
            }
        }
        let got: Vec<_> = levels.iter().map(|l| (l.state.n, l.state.ell)).collect();
        assert_eq!(got, expected);
        assert!(levels.iter().all(|l| l.energy.value() < 0.0));
    }

    #[test]
    fn energies_rise_strictly_in_n_and_ell() {
        let mu = atomic_mass_half();
        for (v0, a) in [(0.5, 1.0), (1.0, 1.0), (5.0, 2.0), (0.37, 0.41)] {
            for n in 0..8u32 {
                for ell in 0..8u32 {
                    let e = |n, ell| {
                        bound_energy(
                            mu,
                            atomic_energy(v0),
                            atomic_length(a),
                            QuantumState::new(n, ell),
                        )
                        .unwrap()
                        .energy
                        .value()
                    };
                    assert!(
                        e(n + 1, ell) > e(n, ell),
                        "E should rise with n at V0={v0}, a={a}, n={n}, l={ell}"
                    );
                    assert!(
                        e(n, ell + 1) > e(n, ell),
                        "E should rise with l at V0={v0}, a={a}, n={n}, l={ell}"
                    );
                }
            }
        }
    }

    #[test]
    fn spectroscopic_route_matches_atomic_route_after_conversion() {
        // Same physical problem expressed in eV/angstrom/amu and in hartree
        // atomic units must give the same energy to conversion accuracy.
        let spec = UnitSystem::SpectroscopicEvAngstromAmu;
        let au = UnitSystem::AtomicHbar1Mu1;
        let mu = PhysQty::mass(7.001_537_002_2, spec).unwrap();
        let v0 = PhysQty::energy(9.905, spec).unwrap();
        let a = PhysQty::length(1.097_68, spec).unwrap();
        for (n, ell) in [(0u32, 0u32), (3, 1), (5, 5)] {
            let s = QuantumState::new(n, ell);
            let e_spec = bound_energy(mu, v0, a, s).unwrap().energy;
            let e_converted = e_spec.convert(au).unwrap().value();
            let e_direct = bound_energy(
                mu.convert(au).unwrap(),
                v0.convert(au).unwrap(),
                a.convert(au).unwrap(),
                s,
            )
            .unwrap()
            .energy
            .value();
            assert_relative_eq!(e_converted, e_direct, max_relative = 1e-12);
        }
    }

    #[test]
    fn mixed_systems_are_rejected_at_the_boundary() {
        let mu = PhysQty::mass(0.5, UnitSystem::AtomicHbar1TwoMu1).unwrap();
        let v0 = PhysQty::energy(1.0, UnitSystem::SpectroscopicEvAngstromAmu).unwrap();
        let a = atomic_length(1.0);
        assert!(matches!(
            bound_energy(mu, v0, a, QuantumState::new(0, 0)),
            Err(Error::SystemMismatch { .. })
        ));
    }
}
