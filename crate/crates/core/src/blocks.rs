//! The block construction of a nontrivial quasilinear map from the
//! sup-normed direct sum of `L_infinity(Delta_{n(k)})` spaces into the summed
//! direct sum of `L_1(Delta_{n(k)})` spaces: blockwise `c_k mho` with
//! summable weights and growing dimensions.
//!
//! `L_infinity(Delta_n)` carries the same norm as `l_infinity` over the
//! points; `L_1(Delta_n)` with normalized Haar is `l_1` up to the weight
//! `2^{-n}`, which the per-block `L_1` norms already fold in.

use serde::{Deserialize, Serialize};

use crate::centralizer::{mho, quasilinear_bound, CentralizerConfig};
use crate::error::{Error, Result};
use crate::function::{GroupFunction, Vector};
use crate::group::FiniteAbelianGroup;
use crate::profile::LipschitzProfile;
use crate::riesz::{riesz_product, RieszSpec};
use crate::sampler::Sampler;
use crate::twisted::delta_lower;

/// Weights, dimensions and profile of a block map. Entry `k` acts on
/// `Delta_{dims[k]}` with weight `weights[k]`.
#[derive(Clone, Debug)]
pub struct BlockSpec {
    pub weights: Vec<f64>,
    pub dims: Vec<usize>,
    pub profile: LipschitzProfile,
    pub alpha: f64,
}

impl BlockSpec {
    pub fn new(weights: Vec<f64>, dims: Vec<usize>, profile: LipschitzProfile) -> Result<Self> {
        if weights.len() != dims.len() || weights.is_empty() {
            return Err(Error::InvalidParameter(
                "need equally many positive weights and dimensions".into(),
            ));
        }
        if weights.iter().any(|&c| c.is_nan() || c <= 0.0) {
            return Err(Error::InvalidParameter("weights must be positive".into()));
        }
        if dims.contains(&0) || dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "dimensions must be positive and increasing".into(),
            ));
        }
        Ok(Self {
            weights,
            dims,
            profile,
            alpha: 2.0,
        })
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn groups(&self) -> Result<Vec<FiniteAbelianGroup>> {
        self.dims
            .iter()
            .map(|&n| FiniteAbelianGroup::cantor(n))
            .collect()
    }
}

/// A finite vector of blocks, the `k`-th living on `Delta_{dims[k]}`.
#[derive(Clone, Debug)]
pub struct BlockVector {
    pub blocks: Vec<GroupFunction>,
}

impl BlockVector {
    pub fn zero(spec: &BlockSpec) -> Result<Self> {
        Ok(Self {
            blocks: spec.groups()?.iter().map(GroupFunction::zero).collect(),
        })
    }

    pub fn conforms(&self, spec: &BlockSpec) -> bool {
        self.blocks.len() == spec.len()
            && self
                .blocks
                .iter()
                .zip(&spec.dims)
                .all(|(b, &n)| b.group().is_two_group() && b.group().rank() == n)
    }

    /// Domain norm: sup over blocks of the sup norm.
    pub fn sup_norm(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| b.norm(f64::INFINITY).expect("p >= 1"))
            .fold(0.0, f64::max)
    }

    /// Codomain norm: sum over blocks of the `L_1` norms.
    pub fn sum_l1_norm(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| b.norm(1.0).expect("p >= 1"))
            .sum()
    }
}

impl Vector for BlockVector {
    fn add(&self, other: &Self) -> Self {
        Self {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        Self {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

/// Blockwise `x_k -> c_k mho(x_k)`.
pub fn block_map(spec: &BlockSpec, x: &BlockVector) -> Result<BlockVector> {
    if !x.conforms(spec) {
        return Err(Error::BlockDimensionMismatch);
    }
    let config = CentralizerConfig::infinity_one(spec.profile.clone());
    let blocks = x
        .blocks
        .iter()
        .zip(&spec.weights)
        .map(|(b, &c)| mho(&config, b).scale(num_complex::Complex64::new(c, 0.0)))
        .collect();
    Ok(BlockVector { blocks })
}

/// One row of the growth report. A `None` dimension marks a block whose
/// scheduled dimension exceeds the desk-scale cap; no bound is asserted for
/// it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthRow {
    pub k: usize,
    pub c_k: f64,
    pub n_k: Option<usize>,
    pub delta_lower: Option<f64>,
    pub q_sampled: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthReport {
    pub profile: String,
    pub alpha: f64,
    pub rows: Vec<GrowthRow>,
    /// Sampled quasilinear defect of the whole block map in the
    /// (sup, sum) norms.
    pub q_total_sampled: f64,
    pub q_total_bound: f64,
    /// Lower bounds nondecreasing along the feasible prefix.
    pub nondecreasing: bool,
    pub pass: bool,
}

/// The default schedule: `c_k = 2^{-k}` and `n(k)` the smallest `n` with
/// `c_k phi(log n) >= k`, marking blocks whose `n` exceeds `max_dim` as
/// infeasible.
pub fn default_schedule(
    profile: &LipschitzProfile,
    blocks: usize,
    max_dim: usize,
) -> Vec<(f64, Option<usize>)> {
    (1..=blocks)
        .map(|k| {
            let c = 2f64.powi(-(k as i32));
            let n = (1..=max_dim).find(|&n| c * profile.eval((n as f64).ln()) >= k as f64);
            (c, n)
        })
        .collect()
}

/// Per-block witness lower bounds plus the sampled total quasilinearity for
/// the feasible prefix of a schedule.
pub fn growth_report(
    profile: &LipschitzProfile,
    alpha: f64,
    schedule: &[(f64, Option<usize>)],
    seed: u64,
    budget: usize,
) -> Result<GrowthReport> {
    if schedule.is_empty() {
        return Err(Error::EmptyReport);
    }
    let config = CentralizerConfig::infinity_one(profile.clone());
    let mut rows = Vec::with_capacity(schedule.len());
    for (i, &(c_k, n_k)) in schedule.iter().enumerate() {
        let row = match n_k {
            None => GrowthRow {
                k: i + 1,
                c_k,
                n_k: None,
                delta_lower: None,
                q_sampled: None,
            },
            Some(n) => {
                let need = 1usize.checked_shl(n as u32).ok_or(Error::SizeOverflow)?;
                if need > budget {
                    return Err(Error::BudgetExceeded { need, budget });
                }
                let spec = RieszSpec::rademacher(n, alpha)?;
                let witness_fn = riesz_product(&spec);
                let delta = c_k * delta_lower(&config, &[witness_fn])?;
                let q = c_k * sampled_block_quasilinearity(&config, n, seed ^ (i as u64), 40)?;
                GrowthRow {
                    k: i + 1,
                    c_k,
                    n_k: Some(n),
                    delta_lower: Some(delta),
                    q_sampled: Some(q),
                }
            }
        };
        rows.push(row);
    }

    // total quasilinearity over the feasible prefix, sampled with vectors
    // occupying all feasible blocks at once
    let feasible: Vec<(f64, usize)> = schedule
        .iter()
        .map_while(|&(c, n)| n.map(|n| (c, n)))
        .collect();
    let (q_total_sampled, q_total_bound, nondecreasing) = if feasible.is_empty() {
        (0.0, 0.0, true)
    } else {
        let weights: Vec<f64> = feasible.iter().map(|&(c, _)| c).collect();
        let dims: Vec<usize> = feasible.iter().map(|&(_, n)| n).collect();
        let spec = BlockSpec::new(weights, dims, profile.clone())?;
        let q = sampled_total_quasilinearity(&spec, seed, 60)?;
        let bound = spec.weight_sum() * quasilinear_bound(profile);
        let deltas: Vec<f64> = rows.iter().filter_map(|r| r.delta_lower).collect();
        let mono = deltas.windows(2).all(|w| w[1] >= w[0] - 1e-12);
        (q, bound, mono)
    };

    let pass = nondecreasing && q_total_sampled <= q_total_bound + 1e-9 || feasible.is_empty();
    Ok(GrowthReport {
        profile: profile.name(),
        alpha,
        rows,
        q_total_sampled,
        q_total_bound,
        nondecreasing,
        pass,
    })
}

fn sampled_block_quasilinearity(
    config: &CentralizerConfig,
    n: usize,
    seed: u64,
    trials: usize,
) -> Result<f64> {
    let group = FiniteAbelianGroup::cantor(n)?;
    let mut sampler = Sampler::new(&group, seed);
    let mut max = 0.0f64;
    for _ in 0..trials {
        let f = sampler.mixed_function();
        let g = sampler.mixed_function();
        let denom = f.norm(f64::INFINITY)? + g.norm(f64::INFINITY)?;
        if denom < 1e-12 {
            continue;
        }
        let defect = mho(config, &f.add(&g))
            .sub(&mho(config, &f))
            .sub(&mho(config, &g))
            .norm(1.0)?;
        max = max.max(defect / denom);
    }
    Ok(max)
}

/// Sampled quasilinear defect of the whole block map in its native norms.
pub fn sampled_total_quasilinearity(spec: &BlockSpec, seed: u64, trials: usize) -> Result<f64> {
    let groups = spec.groups()?;
    let mut samplers: Vec<Sampler> = groups
        .iter()
        .enumerate()
        .map(|(i, g)| Sampler::new(g, seed.wrapping_add(i as u64)))
        .collect();
    let mut max = 0.0f64;
    for _ in 0..trials {
        let draw = |samplers: &mut Vec<Sampler>| BlockVector {
            blocks: samplers.iter_mut().map(|s| s.mixed_function()).collect(),
        };
        let x = draw(&mut samplers);
        let y = draw(&mut samplers);
        let denom = x.sup_norm() + y.sup_norm();
        if denom < 1e-12 {
            continue;
        }
        let defect = block_map(spec, &x.add(&y))?
            .sub(&block_map(spec, &x)?)
            .sub(&block_map(spec, &y)?)
            .sum_l1_norm();
        max = max.max(defect / denom);
    }
    Ok(max)
}
