//! Physical constants used throughout the crate.

/// Magnetic flux quantum and reduced Planck constant (CODATA 2018).
///
/// Immutable after construction; the fields are private and exposed through
/// accessors so a value cannot drift once built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    flux_quantum: f64,
    reduced_planck: f64,
}

impl PhysicalConstants {
    /// CODATA 2018 values: Φ0 = h/2e, ħ = h/2π.
    pub const fn codata() -> Self {
        Self {
            flux_quantum: 2.067_833_848e-15,
            reduced_planck: 1.054_571_817e-34,
        }
    }

    /// Flux quantum Φ0 = h/2e in weber.
    pub fn flux_quantum(&self) -> f64 {
        self.flux_quantum
    }

    /// Reduced Planck constant ħ in joule-seconds.
    pub fn reduced_planck(&self) -> f64 {
        self.reduced_planck
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::codata()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codata_values_to_six_digits() {
        let c = PhysicalConstants::codata();
        assert!((c.flux_quantum() - 2.0678e-15).abs() / 2.0678e-15 < 1e-4);
        assert!((c.reduced_planck() - 1.0546e-34).abs() / 1.0546e-34 < 1e-4);
    }
}
