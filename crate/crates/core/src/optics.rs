//! Per-pair field and intensity computations for a frequency-detuned
//! photon pair meeting on a lossless 50/50 beam splitter.
//!
//! A pair carries a common real amplitude `e0`, a fixed relative phase
//! `eta` between the two inputs, a detuning `delta_f` (the photons sit
//! symmetrically at `±delta_f` around the carrier), and a relative
//! delay `tau`. The delay converts the detuning into an accumulated
//! phase `Delta = delta_f * tau`, and every observable below depends on
//! the pair only through `eta + 2 * Delta`.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::Error;

/// Complex optical field amplitude (dimensionless).
pub type ComplexAmplitude = Complex64;

/// Which half of the detuning distribution a pair belongs to.
///
/// `Second` swaps the two input photons: the detuning sign flips and
/// the inherent phase moves to the opposite exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    First,
    Second,
}

impl Branch {
    /// Both branches, in a fixed order for deterministic averaging.
    pub const BOTH: [Branch; 2] = [Branch::First, Branch::Second];
}

/// Physical parameters of one photon pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairConfig {
    /// Input field amplitude. Must be finite and strictly positive.
    pub e0: f64,
    /// Inherent relative phase between the paired inputs (radians).
    pub eta: f64,
    /// Frequency detuning of the pair (Hz).
    pub delta_f: f64,
    /// Relative delay between the two inputs (seconds).
    pub tau: f64,
}

impl PairConfig {
    pub fn new(e0: f64, eta: f64, delta_f: f64, tau: f64) -> Result<Self, Error> {
        let cfg = PairConfig {
            e0,
            eta,
            delta_f,
            tau,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Accumulated phase detuning `Delta = delta_f * tau`.
    pub fn phase_detuning(&self) -> f64 {
        self.delta_f * self.tau
    }

    /// Intensity of a single input field, `I0 = e0^2`.
    pub fn single_input_intensity(&self) -> f64 {
        self.e0 * self.e0
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !self.e0.is_finite() || self.e0 <= 0.0 {
            return Err(Error::InvalidConfig {
                field: "e0",
                value: self.e0,
            });
        }
        if !self.eta.is_finite() {
            return Err(Error::InvalidConfig {
                field: "eta",
                value: self.eta,
            });
        }
        if !self.delta_f.is_finite() {
            return Err(Error::InvalidConfig {
                field: "delta_f",
                value: self.delta_f,
            });
        }
        if !self.tau.is_finite() {
            return Err(Error::InvalidConfig {
                field: "tau",
                value: self.tau,
            });
        }
        Ok(())
    }
}

/// A pair of complex fields: the two beam-splitter inputs, or, after
/// [`bs_transform`], the two outputs (`a` is port c, `b` is port d).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPair {
    pub a: ComplexAmplitude,
    pub b: ComplexAmplitude,
}

impl FieldPair {
    /// Total intensity `|a|^2 + |b|^2`.
    pub fn total_intensity(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }
}

/// Intensities at the two beam-splitter outputs, in units of `e0^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputIntensities {
    pub i_c: f64,
    pub i_d: f64,
}

impl OutputIntensities {
    /// `i_c + i_d`; equals `2 e0^2` through the lossless splitter.
    pub fn total(&self) -> f64 {
        self.i_c + self.i_d
    }
}

/// Construct the two input fields of a pair.
///
/// First branch: `a = e0 e^{-i(eta + Delta)}`, `b = e0 e^{+i Delta}`.
/// Second branch flips the signs of both exponents.
pub fn make_input_fields(cfg: &PairConfig, branch: Branch) -> Result<FieldPair, Error> {
    cfg.validate()?;
    let delta = cfg.phase_detuning();
    let (phase_a, phase_b) = match branch {
        Branch::First => (-(cfg.eta + delta), delta),
        Branch::Second => (cfg.eta + delta, -delta),
    };
    Ok(FieldPair {
        a: Complex64::from_polar(cfg.e0, phase_a),
        b: Complex64::from_polar(cfg.e0, phase_b),
    })
}

/// Apply the lossless 50/50 beam splitter `(1/sqrt 2) [[1, i], [i, 1]]`.
///
/// Returns `((a + i b)/sqrt 2, (i a + b)/sqrt 2)`. Unitary, so the total
/// intensity of the result equals that of the inputs.
pub fn bs_transform(inputs: &FieldPair) -> FieldPair {
    let i = Complex64::i();
    FieldPair {
        a: (inputs.a + i * inputs.b) * FRAC_1_SQRT_2,
        b: (i * inputs.a + inputs.b) * FRAC_1_SQRT_2,
    }
}

/// Closed-form output intensities for one pair.
///
/// First branch: `i_c = I0 (1 - sin(eta + 2 Delta))`, `i_d = I0 (1 + sin(eta + 2 Delta))`;
/// the second branch swaps the two ports.
pub fn output_intensities(cfg: &PairConfig, branch: Branch) -> Result<OutputIntensities, Error> {
    cfg.validate()?;
    let i0 = cfg.single_input_intensity();
    let s = (cfg.eta + 2.0 * cfg.phase_detuning()).sin();
    let (i_c, i_d) = match branch {
        Branch::First => (i0 * (1.0 - s), i0 * (1.0 + s)),
        Branch::Second => (i0 * (1.0 + s), i0 * (1.0 - s)),
    };
    Ok(OutputIntensities { i_c, i_d })
}

/// Branch-averaged two-detector intensity product for one pair.
///
/// Both branches yield the same product, `I0^2 (1 - s)(1 + s)` with
/// `s = sin(eta + 2 Delta)`, i.e. `I0^2 cos^2(eta + 2 Delta)`. The
/// factored form evaluates to exactly zero wherever `s` rounds to one,
/// so the coincidence minimum at zero delay is exact.
pub fn coincidence_product(cfg: &PairConfig) -> Result<f64, Error> {
    let first = output_intensities(cfg, Branch::First)?;
    let second = output_intensities(cfg, Branch::Second)?;
    Ok((first.i_c * first.i_d + second.i_c * second.i_d) / 2.0)
}
