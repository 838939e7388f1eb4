//! The Mie interaction family and the single-well special case this crate
//! solves exactly.
//!
//! General form, integer exponents ell_exp > k_exp:
//!
//! ```text
//! V(r) = eps * [ k/(l-k) * (a/r)^l  -  l/(l-k) * (a/r)^k ]
//! ```
//!
//! constructed so the minimum sits at r = a with depth V(a) = -eps. The
//! exactly solvable member is (l, k) = (2, 1); writing V0 = 2*eps it reads
//!
//! ```text
//! V(r) = V0 * [ (1/2)(a/r)^2 - (a/r) ]
//! ```
//!
//! with minimum -V0/2 at r = a. All public entry points take tagged
//! quantities and reject mixed unit systems.

use crate::error::{Error, Result};
use crate::units::{self, Dimension, PhysQty, UnitSystem};

/// Largest exponent sum fed to `exp` before we call the result saturated.
/// Slightly under ln(f64::MAX) so downstream arithmetic keeps headroom.
const LN_SATURATION: f64 = 708.0;

/// Parameters of the general two-exponent Mie potential.
#[derive(Debug, Clone, Copy)]
pub struct PotentialParams {
    epsilon: PhysQty,
    a: PhysQty,
    ell_exp: u32,
    k_exp: u32,
}

impl PotentialParams {
    pub fn new(epsilon: PhysQty, a: PhysQty, ell_exp: u32, k_exp: u32) -> Result<Self> {
        units::require_same_system("PotentialParams::new", &[&epsilon, &a])?;
        let eps = epsilon.expect_dimension(Dimension::Energy, "PotentialParams::new")?;
        let a_v = a.expect_dimension(Dimension::Length, "PotentialParams::new")?;
        if eps <= 0.0 {
            return Err(Error::domain(
                "PotentialParams::new",
                format!("well depth epsilon must be positive, got {eps}"),
            ));
        }
        if a_v <= 0.0 {
            return Err(Error::domain(
                "PotentialParams::new",
                format!("minimum position a must be positive, got {a_v}"),
            ));
        }
        if k_exp == 0 {
            return Err(Error::domain(
                "PotentialParams::new",
                "attractive exponent k_exp must be at least 1",
            ));
        }
        if ell_exp <= k_exp {
            return Err(Error::domain(
                "PotentialParams::new",
                format!("repulsive exponent must exceed attractive one, got ell_exp={ell_exp} <= k_exp={k_exp}"),
            ));
        }
        Ok(PotentialParams {
            epsilon,
            a,
            ell_exp,
            k_exp,
        })
    }

    pub fn epsilon(&self) -> PhysQty {
        self.epsilon
    }

    pub fn a(&self) -> PhysQty {
        self.a
    }

    pub fn exponents(&self) -> (u32, u32) {
        (self.ell_exp, self.k_exp)
    }

    pub fn system(&self) -> UnitSystem {
        self.epsilon.system()
    }
}

/// Parameters of the solvable (2, 1) well, V(r) = V0 [ (a/r)^2/2 - a/r ].
#[derive(Debug, Clone, Copy)]
pub struct SpecialPotentialParams {
    v0: PhysQty,
    a: PhysQty,
}

impl SpecialPotentialParams {
    pub fn new(v0: PhysQty, a: PhysQty) -> Result<Self> {
        units::require_same_system("SpecialPotentialParams::new", &[&v0, &a])?;
        let v0_v = v0.expect_dimension(Dimension::Energy, "SpecialPotentialParams::new")?;
        let a_v = a.expect_dimension(Dimension::Length, "SpecialPotentialParams::new")?;
        if v0_v <= 0.0 || a_v <= 0.0 {
            return Err(Error::domain(
                "SpecialPotentialParams::new",
                format!("V0 and a must be positive, got V0={v0_v}, a={a_v}"),
            ));
        }
        Ok(SpecialPotentialParams { v0, a })
    }

    /// The (2,1) member of the general family with eps = V0/2.
    pub fn from_general(p: &PotentialParams) -> Result<Self> {
        if p.exponents() != (2, 1) {
            return Err(Error::domain(
                "SpecialPotentialParams::from_general",
                format!("only exponents (2,1) are solvable, got {:?}", p.exponents()),
            ));
        }
        let v0 = PhysQty::energy(2.0 * p.epsilon.value(), p.system())?;
        SpecialPotentialParams::new(v0, p.a)
    }

    pub fn v0(&self) -> PhysQty {
        self.v0
    }

    pub fn a(&self) -> PhysQty {
        self.a
    }

    pub fn system(&self) -> UnitSystem {
        self.v0.system()
    }

    /// Well depth at the minimum r = a.
    pub fn depth(&self) -> f64 {
        -0.5 * self.v0.value()
    }
}

fn positive_radius(r: PhysQty, system: UnitSystem, context: &'static str) -> Result<f64> {
    if r.system() != system {
        return Err(Error::SystemMismatch {
            context,
            left: system,
            right: r.system(),
        });
    }
    let r_v = r.expect_dimension(Dimension::Length, context)?;
    if r_v <= 0.0 {
        return Err(Error::domain(
            context,
            format!("radius must be positive, got {r_v}"),
        ));
    }
    Ok(r_v)
}

/// Evaluates the general Mie potential at radius r.
///
/// Near the origin the repulsive branch grows like (a/r)^ell_exp; once that
/// exceeds f64 range the value is reported as a saturation error rather than
/// +inf, so grid sweeps can distinguish "potential wall" from broken input.
pub fn mie_general(p: &PotentialParams, r: PhysQty) -> Result<PhysQty> {
    let r_v = positive_radius(r, p.system(), "mie_general")?;
    let eps = p.epsilon.value();
    let a = p.a.value();
    let (l, k) = (p.ell_exp as f64, p.k_exp as f64);

    let ratio = a / r_v;
    let ln_repulsive = eps.ln() + (k / (l - k)).ln() + l * ratio.ln();
    if ln_repulsive > LN_SATURATION {
        return Err(Error::Saturation {
            r: r_v,
            ln_value: ln_repulsive,
        });
    }

    let repulsive = k / (l - k) * ratio.powi(p.ell_exp as i32);
    let attractive = l / (l - k) * ratio.powi(p.k_exp as i32);
    PhysQty::energy(eps * (repulsive - attractive), p.system())
}

/// Evaluates the solvable special case V0 [ (a/r)^2/2 - a/r ].
pub fn special_potential(p: &SpecialPotentialParams, r: PhysQty) -> Result<PhysQty> {
    let r_v = positive_radius(r, p.system(), "special_potential")?;
    let value = special_potential_raw(p.v0.value(), p.a.value(), r_v);
    if !value.is_finite() {
        return Err(Error::Saturation {
            r: r_v,
            ln_value: value.abs().ln(),
        });
    }
    PhysQty::energy(value, p.system())
}

/// Special-case well plus the centrifugal term l(l+1) hbar^2 / (2 mu r^2).
pub fn effective_potential(
    p: &SpecialPotentialParams,
    ell: u32,
    mu: PhysQty,
    r: PhysQty,
) -> Result<PhysQty> {
    units::require_same_system("effective_potential", &[&p.v0, &mu])?;
    let r_v = positive_radius(r, p.system(), "effective_potential")?;
    let h22m = units::hbar2_over_2m(mu)?.value();
    let bare = special_potential_raw(p.v0.value(), p.a.value(), r_v);
    let l = ell as f64;
    let value = bare + l * (l + 1.0) * h22m / (r_v * r_v);
    if !value.is_finite() {
        return Err(Error::Saturation {
            r: r_v,
            ln_value: value.abs().ln(),
        });
    }
    PhysQty::energy(value, p.system())
}

/// Hot-loop form used by the solver and quadrature internals; no tagging,
/// caller guarantees consistent units and r > 0.
#[inline]
pub(crate) fn special_potential_raw(v0: f64, a: f64, r: f64) -> f64 {
    let ratio = a / r;
    v0 * ratio * (0.5 * ratio - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn qty(v: f64, d: Dimension) -> PhysQty {
        PhysQty::new(v, d, UnitSystem::AtomicHbar1TwoMu1).unwrap()
    }

    fn energy(v: f64) -> PhysQty {
        qty(v, Dimension::Energy)
    }

    fn length(v: f64) -> PhysQty {
        qty(v, Dimension::Length)
    }

    #[test]
    fn minimum_depth_is_minus_epsilon_across_exponent_grid() {
        for (l, k) in [(2u32, 1u32), (3, 1), (4, 2), (6, 3), (12, 6), (9, 4)] {
            for eps in [0.3, 1.0, 7.5] {
                for a in [0.5, 1.0, 2.4] {
                    let p = PotentialParams::new(energy(eps), length(a), l, k).unwrap();
                    let v = mie_general(&p, length(a)).unwrap();
                    assert_relative_eq!(v.value(), -eps, max_relative = 1e-15);
                }
            }
        }
    }

    #[test]
    fn general_value_at_twice_the_minimum() {
        // (l,k)=(2,1), eps=0.5, a=1, r=2: 0.5 * (1*(1/4) - 2*(1/2)) = -0.375
        let p = PotentialParams::new(energy(0.5), length(1.0), 2, 1).unwrap();
        assert_eq!(mie_general(&p, length(2.0)).unwrap().value(), -0.375);
    }

    #[test]
    fn special_case_zero_crossing_at_half_a() {
        // V0=2, a=1, r=0.5: 2*(0.5*4 - 2) = 0
        let p = SpecialPotentialParams::new(energy(2.0), length(1.0)).unwrap();
        assert_eq!(special_potential(&p, length(0.5)).unwrap().value(), 0.0);
    }

    #[test]
    fn special_case_matches_general_two_one_member() {
        // eps = V0/2 makes the (2,1) general form and the special form the
        // same function; check pointwise over [a/10, 50a].
        let a = 1.3;
        let v0 = 3.7;
        let general = PotentialParams::new(energy(v0 / 2.0), length(a), 2, 1).unwrap();
        let special = SpecialPotentialParams::new(energy(v0), length(a)).unwrap();
        for i in 0..=400 {
            let r = a * (0.1 + (50.0 - 0.1) * i as f64 / 400.0);
            let vg = mie_general(&general, length(r)).unwrap().value();
            let vs = special_potential(&special, length(r)).unwrap().value();
            // Relative to the term envelope: V crosses zero at r = a/2, where
            // a ratio test would be meaningless.
            let ratio = a / r;
            let envelope = v0 * ratio * (0.5 * ratio + 1.0);
            assert!(
                (vg - vs).abs() <= 1e-15 * envelope,
                "mismatch at r={r}: general={vg}, special={vs}"
            );
        }
    }

    #[test]
    fn effective_potential_at_zero_ell_is_the_bare_well() {
        let p = SpecialPotentialParams::new(energy(1.0), length(1.0)).unwrap();
        let mu = qty(0.5, Dimension::Mass);
        for r in [0.2, 1.0, 5.0] {
            let bare = special_potential(&p, length(r)).unwrap().value();
            let eff = effective_potential(&p, 0, mu, length(r)).unwrap().value();
            assert_eq!(eff, bare);
        }
    }

    #[test]
    fn effective_potential_adds_centrifugal_term() {
        let p = SpecialPotentialParams::new(energy(1.0), length(1.0)).unwrap();
        // mu = 1/2 in the 2mu=1 convention: hbar^2/(2 mu) = 1.
        let mu = qty(0.5, Dimension::Mass);
        let r = 2.0;
        let bare = special_potential(&p, length(r)).unwrap().value();
        let eff = effective_potential(&p, 3, mu, length(r)).unwrap().value();
        assert_relative_eq!(eff - bare, 12.0 / (r * r), max_relative = 1e-15);
    }

    #[test]
    fn steep_core_saturates_instead_of_overflowing() {
        let p = PotentialParams::new(energy(1.0), length(1.0), 200, 1).unwrap();
        match mie_general(&p, length(1e-4)) {
            Err(Error::Saturation { r, .. }) => assert_eq!(r, 1e-4),
            other => panic!("expected saturation error, got {other:?}"),
        }
    }

    #[test]
    fn equal_exponents_are_rejected() {
        assert!(matches!(
            PotentialParams::new(energy(1.0), length(1.0), 6, 6),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            PotentialParams::new(energy(1.0), length(1.0), 3, 6),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn nonpositive_radius_is_a_domain_error() {
        let p = SpecialPotentialParams::new(energy(1.0), length(1.0)).unwrap();
        assert!(special_potential(&p, length(0.0)).is_err());
        assert!(special_potential(&p, length(-1.0)).is_err());
    }

    #[test]
    fn mixed_unit_systems_are_rejected() {
        let v0 = PhysQty::energy(1.0, UnitSystem::SpectroscopicEvAngstromAmu).unwrap();
        let a = PhysQty::length(1.0, UnitSystem::AtomicHbar1Mu1).unwrap();
        assert!(matches!(
            SpecialPotentialParams::new(v0, a),
            Err(Error::SystemMismatch { .. })
        ));

        let p = SpecialPotentialParams::new(energy(1.0), length(1.0)).unwrap();
        let foreign_r = PhysQty::length(1.0, UnitSystem::SpectroscopicEvAngstromAmu).unwrap();
        assert!(matches!(
            special_potential(&p, foreign_r),
            Err(Error::SystemMismatch { .. })
        ));
    }
}
