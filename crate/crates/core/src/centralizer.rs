//! Kalton-Peck maps on the spectral side and their Fourier conjugates.
//!
//! The spectral map sends `c` to `c(gamma) phi(log(||c||_p / |c(gamma)|))`
//! entrywise, with zero entries staying zero. Conjugating by the transform
//! gives the map `mho = F^{-1} . Omega . F` on group functions: one pure map,
//! read against whichever pair of norms `(p, q)` a configuration selects.
//! The module also carries the pointwise (group-side) variant and the sampled
//! defect estimators for quasilinearity and the convolution-centralizer
//! inequality.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{
    convolve, fourier_forward, fourier_inverse, GroupFunction, SpectrumFunction, Vector,
};
use crate::profile::LipschitzProfile;

/// Pairs saturating `||f|| + ||g||` below this threshold are skipped by the
/// samplers and rejected by the single-pair estimators.
pub const DEGENERATE_NORM: f64 = 1e-12;

/// Fixes the Kalton-Peck profile and the norms the estimators read.
///
/// As a pure map the conjugated centralizer does not depend on `(p, q)`;
/// only the domain and codomain norms do.
#[derive(Clone, Debug)]
pub struct CentralizerConfig {
    pub profile: LipschitzProfile,
    /// Domain exponent, `2 <= p <= infinity`.
    pub p: f64,
    /// Codomain exponent, `1 <= q <= 2`.
    pub q: f64,
    /// Exponent inside the Kalton-Peck formula; the construction uses 2.
    pub spectral_p: f64,
}

impl CentralizerConfig {
    pub fn new(profile: LipschitzProfile, p: f64, q: f64) -> Result<Self> {
        if p.is_nan() || p < 2.0 {
            return Err(Error::InvalidExponent(p));
        }
        if !(1.0..=2.0).contains(&q) {
            return Err(Error::InvalidExponent(q));
        }
        Ok(Self {
            profile,
            p,
            q,
            spectral_p: 2.0,
        })
    }

    /// The `L_infinity -> L_1` reading, the most stringent one.
    pub fn infinity_one(profile: LipschitzProfile) -> Self {
        Self::new(profile, f64::INFINITY, 1.0).expect("valid exponents")
    }

    /// The Hilbertian reading `p = q = 2`.
    pub fn two_two(profile: LipschitzProfile) -> Self {
        Self::new(profile, 2.0, 2.0).expect("valid exponents")
    }
}

/// The Kalton-Peck map on spectra. Homogeneous of degree 1 and
/// support-preserving; the zero vector maps to zero.
pub fn kp_map(
    profile: &LipschitzProfile,
    p: f64,
    c: &SpectrumFunction,
) -> Result<SpectrumFunction> {
    let total = c.norm(p)?;
    let mut out = c.clone();
    if total == 0.0 {
        return Ok(out);
    }
    for v in out.values_mut() {
        let m = v.norm();
        if m == 0.0 {
            continue;
        }
        *v *= profile.eval((total / m).ln());
    }
    Ok(out)
}

/// The conjugated map `F^{-1} . Omega . F` on group functions.
pub fn mho(config: &CentralizerConfig, f: &GroupFunction) -> GroupFunction {
    let spectrum = fourier_forward(f);
    let twisted = kp_map(&config.profile, config.spectral_p, &spectrum).expect("config exponent");
    fourier_inverse(&twisted)
}

/// The restricted map `f -> S Omega(fhat|_Sigma)`: the spectrum is cut down
/// to `sigma`, Kalton-Peck acts on that short vector alone, and the summation
/// operator re-expands over the same characters.
pub fn mho_sidon(
    config: &CentralizerConfig,
    sigma: &[usize],
    f: &GroupFunction,
) -> Result<GroupFunction> {
    let mut seen = sigma.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != sigma.len() {
        return Err(Error::DuplicateCharacters);
    }
    let spectrum = fourier_forward(f);
    let restricted: Vec<Complex64> = sigma.iter().map(|&chi| spectrum.values()[chi]).collect();

    let p = config.spectral_p;
    let total = if p.is_infinite() {
        restricted.iter().map(|v| v.norm()).fold(0.0, f64::max)
    } else {
        restricted
            .iter()
            .map(|v| v.norm().powf(p))
            .sum::<f64>()
            .powf(1.0 / p)
    };
    let mut expanded = SpectrumFunction::zero(f.group());
    if total > 0.0 {
        for (&chi, v) in sigma.iter().zip(&restricted) {
            let m = v.norm();
            if m == 0.0 {
                continue;
            }
            expanded.values_mut()[chi] = v * config.profile.eval((total / m).ln());
        }
    }
    Ok(fourier_inverse(&expanded))
}

/// The group-side Kalton-Peck map `f -> f phi(log(||f||_p / |f|))`, defined
/// pointwise; the profile must make sense on all of the line, which the
/// built-in odd extensions do.
pub fn pointwise_kp(
    profile: &LipschitzProfile,
    p: f64,
    f: &GroupFunction,
) -> Result<GroupFunction> {
    let total = f.norm(p)?;
    let mut out = f.clone();
    if total == 0.0 {
        return Ok(out);
    }
    for v in out.values_mut() {
        let m = v.norm();
        if m == 0.0 {
            continue;
        }
        *v *= profile.eval((total / m).ln());
    }
    Ok(out)
}

/// Largest sampled ratio `||Phi(f+g) - Phi f - Phi g|| / (||f|| + ||g||)`.
///
/// Pairs whose norms sum below [`DEGENERATE_NORM`] are skipped; a sampler
/// that yields nothing else is an error. The maximum is order-independent,
/// so trial batches may be evaluated in any schedule.
pub fn sampled_quasilinear_defect<V: Vector>(
    map: impl Fn(&V) -> V,
    dom_norm: impl Fn(&V) -> f64,
    cod_norm: impl Fn(&V) -> f64,
    mut pairs: impl FnMut(usize) -> (V, V),
    trials: usize,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::DegenerateSampler);
    }
    let mut max = f64::NEG_INFINITY;
    let mut used = 0usize;
    for t in 0..trials {
        let (f, g) = pairs(t);
        let denom = dom_norm(&f) + dom_norm(&g);
        if denom < DEGENERATE_NORM {
            continue;
        }
        let defect = cod_norm(&map(&f.add(&g)).sub(&map(&f)).sub(&map(&g)));
        max = max.max(defect / denom);
        used += 1;
    }
    if used == 0 {
        return Err(Error::DegenerateSampler);
    }
    Ok(max)
}

/// Single-pair convolution-centralizer defect
/// `||mho(a*f) - a*mho(f)||_q / (||a||_1 ||f||_p)`.
pub fn defect_l1(config: &CentralizerConfig, a: &GroupFunction, f: &GroupFunction) -> Result<f64> {
    let denom = a.norm(1.0)? * f.norm(config.p)?;
    if denom <= DEGENERATE_NORM {
        return Err(Error::DegenerateInput);
    }
    let lhs = mho(config, &convolve(a, f)?);
    let rhs = convolve(a, &mho(config, f))?;
    Ok(lhs.sub(&rhs).norm(config.q)? / denom)
}

/// Largest sampled [`defect_l1`] over pairs drawn from the sampler.
pub fn sampled_centralizer_defect(
    config: &CentralizerConfig,
    mut pairs: impl FnMut(usize) -> (GroupFunction, GroupFunction),
    trials: usize,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::DegenerateSampler);
    }
    let mut max = f64::NEG_INFINITY;
    let mut used = 0usize;
    for t in 0..trials {
        let (a, f) = pairs(t);
        match defect_l1(config, &a, &f) {
            Ok(d) => {
                max = max.max(d);
                used += 1;
            }
            Err(Error::DegenerateInput) => continue,
            Err(e) => return Err(e),
        }
    }
    if used == 0 {
        return Err(Error::DegenerateSampler);
    }
    Ok(max)
}

/// Same estimator for the pointwise map against convolution.
pub fn sampled_pointwise_centralizer_defect(
    profile: &LipschitzProfile,
    p: f64,
    q: f64,
    mut pairs: impl FnMut(usize) -> (GroupFunction, GroupFunction),
    trials: usize,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::DegenerateSampler);
    }
    let mut max = f64::NEG_INFINITY;
    let mut used = 0usize;
    for t in 0..trials {
        let (a, f) = pairs(t);
        let denom = a.norm(1.0)? * f.norm(p)?;
        if denom <= DEGENERATE_NORM {
            continue;
        }
        let lhs = pointwise_kp(profile, p, &convolve(&a, &f)?)?;
        let rhs = convolve(&a, &pointwise_kp(profile, p, &f)?)?;
        max = max.max(lhs.sub(&rhs).norm(q)? / denom);
        used += 1;
    }
    if used == 0 {
        return Err(Error::DegenerateSampler);
    }
    Ok(max)
}

/// Machine-readable summary of a sampled defect run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DefectReport {
    pub map: String,
    pub trials: usize,
    pub max_defect: f64,
    pub bound: f64,
    pub pass: bool,
}

impl DefectReport {
    pub fn new(map: impl Into<String>, trials: usize, max_defect: f64, bound: f64) -> Self {
        Self {
            map: map.into(),
            trials,
            max_defect,
            bound,
            pass: max_defect <= bound + 1e-9,
        }
    }
}

/// Quasilinearity bound `8 L_phi / e` of the spectral Kalton-Peck map.
pub fn quasilinear_bound(profile: &LipschitzProfile) -> f64 {
    8.0 * profile.lipschitz() / std::f64::consts::E
}

/// Centralizer bound `2 L_phi / e`.
pub fn centralizer_bound(profile: &LipschitzProfile) -> f64 {
    2.0 * profile.lipschitz() / std::f64::consts::E
}
