//! Energy accounting: bits forgotten per run, worst case per input length,
//! asymptotic rate and the stationary-distribution analysis under uniformly
//! random input.

mod curve;
mod linalg;
mod markov;
mod rate;

pub use curve::{energy_complexity, energy_curve, energy_curve_with_witnesses, run_energy, EnergyCurve};
pub use linalg::solve;
pub use markov::{
    expected_step_energy, lower_bound_margin, restricted_profile, stationary, Distribution,
    RestrictedProfile, STATIONARY_TOLERANCE,
};
pub use rate::energy_rate;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Boltzmann constant in J/K (exact SI value).
pub const BOLTZMANN: f64 = 1.380649e-23;

/// Minimum heat dissipated by erasing `bits` at `temperature_kelvin`
/// (`bits * k_B * T * ln 2`).
pub fn bits_to_joules<T: Real>(bits: T, temperature_kelvin: T) -> Result<T> {
    if !(temperature_kelvin > T::zero()) {
        return Err(Error::InvalidArgument(format!(
            "temperature must be positive, got {temperature_kelvin}"
        )));
    }
    if bits < T::zero() {
        return Err(Error::InvalidArgument(format!("negative bit count {bits}")));
    }
    Ok(bits * T::cast(BOLTZMANN) * temperature_kelvin * T::LN_2())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn landauer_conversion() {
        let one: f64 = bits_to_joules(1.0, 300.0).unwrap();
        assert!((one - 2.870_978_885_078_724e-21).abs() < 1e-33, "{one:e}");
        assert_eq!(bits_to_joules(0.0, 77.0).unwrap(), 0.0);
        let l3: f64 = bits_to_joules(3f64.log2(), 300.0).unwrap();
        assert!((l3 - 3f64.log2() * one).abs() < 1e-33);
        assert!(bits_to_joules(1.0f64, 0.0).is_err());
        assert!(bits_to_joules(1.0f64, -3.0).is_err());
    }
}
