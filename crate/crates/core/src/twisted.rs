//! The twisted sum `L_q +_mho L_p`: quasinorm, convolution action, the
//! witness-based lower bound for the distance to linear maps, and the
//! block-decomposition defect over clopen partitions of a Cantor group.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::centralizer::{mho, CentralizerConfig, DEGENERATE_NORM};
use crate::error::{Error, Result};
use crate::function::{convolve, GroupFunction, Vector};

/// A point of `Y +_Phi X`: `g` is the Y-coordinate, `f` the X-coordinate.
#[derive(Clone, Debug)]
pub struct TwistedPair {
    pub g: GroupFunction,
    pub f: GroupFunction,
}

impl TwistedPair {
    pub fn new(g: GroupFunction, f: GroupFunction) -> Result<Self> {
        g.same_group(&f)?;
        Ok(Self { g, f })
    }
}

impl Vector for TwistedPair {
    fn add(&self, other: &Self) -> Self {
        Self {
            g: self.g.add(&other.g),
            f: self.f.add(&other.f),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        Self {
            g: self.g.sub(&other.g),
            f: self.f.sub(&other.f),
        }
    }
}

/// `||(g, f)||_Phi = ||g - mho(f)||_q + ||f||_p`.
pub fn twisted_quasinorm(config: &CentralizerConfig, pair: &TwistedPair) -> Result<f64> {
    pair.g.same_group(&pair.f)?;
    let head = pair.g.sub(&mho(config, &pair.f)).norm(config.q)?;
    Ok(head + pair.f.norm(config.p)?)
}

/// The outer action `a (g, f) = (a*g, a*f)` of the convolution algebra.
pub fn act(a: &GroupFunction, pair: &TwistedPair) -> Result<TwistedPair> {
    Ok(TwistedPair {
        g: convolve(a, &pair.g)?,
        f: convolve(a, &pair.f)?,
    })
}

/// Witness-based lower bound `(sup ||mho f||_1 / ||f||_inf - ||mho 1||_1)/2`
/// for the distance from `mho` (read `L_infinity -> L_1`) to linear maps,
/// floored at zero. Each witness contributes through its own group.
pub fn delta_lower(config: &CentralizerConfig, witnesses: &[GroupFunction]) -> Result<f64> {
    if witnesses.is_empty() {
        return Err(Error::EmptyWitnessList);
    }
    let mut best = f64::NEG_INFINITY;
    for w in witnesses {
        let sup = w.norm(f64::INFINITY)?;
        if sup <= DEGENERATE_NORM {
            return Err(Error::DegenerateInput);
        }
        let ratio = mho(config, w).norm(1.0)? / sup;
        let constant_term = mho(config, &GroupFunction::one(w.group())).norm(1.0)?;
        best = best.max((ratio - constant_term) / 2.0);
    }
    Ok(best.max(0.0))
}

/// Per-input defect of the block-decomposed map over the clopen partition
/// indexed by the coordinate set `coords` of a Cantor group:
/// `||mho(f) - sum_eps mho(f 1_{Delta(coords, eps)})||_q / ||f||_p`.
pub fn block_defect(
    config: &CentralizerConfig,
    coords: &[usize],
    f: &GroupFunction,
) -> Result<f64> {
    let group = f.group().clone();
    if !group.is_two_group() {
        return Err(Error::NotTwoGroup);
    }
    if coords.iter().any(|&k| k >= group.rank()) {
        return Err(Error::InvalidSubcube(format!(
            "coordinate out of range for rank {}",
            group.rank()
        )));
    }
    let mut sorted = coords.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != coords.len() {
        return Err(Error::InvalidSubcube("repeated coordinates".into()));
    }
    let denom = f.norm(config.p)?;
    if denom <= DEGENERATE_NORM {
        return Err(Error::DegenerateInput);
    }

    let mut sum = GroupFunction::zero(&group);
    for eps_bits in 0..(1usize << coords.len()) {
        let piece_values: Vec<Complex64> = f
            .values()
            .iter()
            .enumerate()
            .map(|(x, &v)| {
                let inside = coords.iter().enumerate().all(|(i, &k)| {
                    let bit = (x >> k) & 1;
                    bit == (eps_bits >> i) & 1
                });
                if inside {
                    v
                } else {
                    Complex64::default()
                }
            })
            .collect();
        let piece = GroupFunction::from_values(&group, piece_values)?;
        sum = sum.add(&mho(config, &piece));
    }
    Ok(mho(config, f).sub(&sum).norm(config.q)? / denom)
}

/// Row format of the witness-family delta report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeltaReport {
    pub witness_count: usize,
    pub max_ratio: f64,
    pub delta_lower: f64,
}
