//! Riesz products over dissociate character sets, their length grading, and
//! the non-triviality witness table.
//!
//! Two cases are carried, mirroring the order structure of the set: `Ddagger`
//! (every character of order 2, the Cantor situation) builds
//! `prod(1 + i g_j / (alpha sqrt N))`, `Dagger` (no character of order 2)
//! builds `prod(1 + i (g_j + g_j^{-1}) / (2 alpha sqrt N))`. The spectra are
//! supported on the products `prod g_j^{eps_j}` with `eps_j` in `{-1,0,1}`
//! and the coefficient depends only on the number of nonzero exponents.

use std::collections::HashMap;
use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::centralizer::{mho, CentralizerConfig};
use crate::error::{Error, Result};
use crate::function::{fourier_forward, fourier_inverse, GroupFunction, SpectrumFunction};
use crate::group::{is_dissociate, FiniteAbelianGroup, DISSOCIATE_LIMIT};
use crate::profile::LipschitzProfile;

/// Spectral mass allowed outside the generated character set before
/// [`length_decompose`] refuses the input.
pub const OFF_SET_TOLERANCE: f64 = 1e-10;

/// Cap on the generic `3^N` enumeration of the generated character set.
const LENGTH_ENUMERATION_LIMIT: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RieszCase {
    /// No character of order 2; symmetrized factors.
    Dagger,
    /// Every character of order 2; plain factors.
    Ddagger,
}

impl RieszCase {
    pub fn name(self) -> &'static str {
        match self {
            RieszCase::Dagger => "dagger",
            RieszCase::Ddagger => "ddagger",
        }
    }
}

/// Parameters of a Riesz-product witness.
#[derive(Clone, Debug)]
pub struct RieszSpec {
    group: FiniteAbelianGroup,
    sigma: Vec<usize>,
    alpha: f64,
    case: RieszCase,
    /// Fast-path flag: a 2-group with single-coordinate (Rademacher) sigma.
    rademacher_mask: Option<usize>,
}

impl RieszSpec {
    /// Validates orders against the case tag and dissociateness (exhaustively
    /// up to [`DISSOCIATE_LIMIT`] characters; larger sets are accepted only
    /// in the Rademacher form, where dissociateness holds by construction).
    pub fn new(
        group: &FiniteAbelianGroup,
        sigma: Vec<usize>,
        alpha: f64,
        case: RieszCase,
    ) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::InvalidParameter("sigma must be nonempty".into()));
        }
        if alpha < 1.0 {
            return Err(Error::InvalidParameter(format!(
                "alpha must be at least 1, got {alpha}"
            )));
        }
        for &chi in &sigma {
            let order = group.char_order(chi);
            match case {
                RieszCase::Ddagger if order != 2 => return Err(Error::CaseOrderMismatch),
                RieszCase::Dagger if order == 2 => return Err(Error::CaseOrderMismatch),
                _ => {}
            }
        }
        let rademacher_mask = rademacher_mask(group, &sigma);
        if sigma.len() <= DISSOCIATE_LIMIT {
            if !is_dissociate(&sigma, group)? {
                return Err(Error::InvalidParameter("sigma is not dissociate".into()));
            }
        } else if rademacher_mask.is_none() {
            return Err(Error::DissociateSetTooLarge {
                got: sigma.len(),
                limit: DISSOCIATE_LIMIT,
            });
        }
        Ok(Self {
            group: group.clone(),
            sigma,
            alpha,
            case,
            rademacher_mask,
        })
    }

    /// The Rademacher witness on `Delta_n`, case Ddagger.
    pub fn rademacher(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("need at least one factor".into()));
        }
        let group = FiniteAbelianGroup::cantor(n)?;
        let sigma = (0..n).map(|k| group.rademacher(k)).collect();
        Self::new(&group, sigma, alpha, RieszCase::Ddagger)
    }

    /// The lacunary witness on `Z_M`, `M = 2*3^n + 1`, with `sigma` the
    /// ratio-3 powers of a generator; case Dagger. Balanced ternary keeps
    /// the generated set collision-free and, as `M` is coprime to 3 and odd,
    /// the set is dissociate and free of order-2 elements.
    pub fn lacunary_cyclic(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("need at least one factor".into()));
        }
        let m = 3usize
            .checked_pow(n as u32)
            .and_then(|p| p.checked_mul(2))
            .and_then(|p| p.checked_add(1))
            .ok_or(Error::SizeOverflow)?;
        let m = u32::try_from(m).map_err(|_| Error::SizeOverflow)?;
        let group = FiniteAbelianGroup::cyclic(m)?;
        let sigma = (0..n).map(|j| 3usize.pow(j as u32)).collect();
        Self::new(&group, sigma, alpha, RieszCase::Dagger)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn case(&self) -> RieszCase {
        self.case
    }

    pub fn factors(&self) -> usize {
        self.sigma.len()
    }

    /// The closed-form spectral coefficient on characters of length `k`.
    pub fn coefficient(&self, k: usize) -> Complex64 {
        let n = self.factors() as f64;
        let base = match self.case {
            RieszCase::Ddagger => 1.0 / (self.alpha * n.sqrt()),
            RieszCase::Dagger => 1.0 / (2.0 * self.alpha * n.sqrt()),
        };
        Complex64::new(0.0, base).powu(k as u32)
    }

    /// Length `l(gamma)` of a character relative to sigma, or `None` when the
    /// character lies outside the generated set.
    pub fn char_length(&self, chi: usize) -> Option<usize> {
        if let Some(mask) = self.rademacher_mask {
            return if chi & !mask == 0 {
                Some((chi & mask).count_ones() as usize)
            } else {
                None
            };
        }
        self.length_table().get(&chi).copied()
    }

    /// Enumerates the generated set `{prod g_j^{eps_j}}` with its grading.
    fn length_table(&self) -> HashMap<usize, usize> {
        let mut table = HashMap::new();
        table.insert(self.group.identity(), 0usize);
        for &chi in &self.sigma {
            let inv = self.group.neg(chi);
            let mut next = table.clone();
            for (&prod, &len) in &table {
                next.entry(self.group.add(prod, chi)).or_insert(len + 1);
                next.entry(self.group.add(prod, inv)).or_insert(len + 1);
            }
            next.extend(table);
            table = next;
        }
        table
    }

    fn length_enumeration_size(&self) -> usize {
        3usize
            .checked_pow(self.factors() as u32)
            .unwrap_or(usize::MAX)
    }
}

fn rademacher_mask(group: &FiniteAbelianGroup, sigma: &[usize]) -> Option<usize> {
    if !group.is_two_group() {
        return None;
    }
    let mut mask = 0usize;
    for &chi in sigma {
        if chi.count_ones() != 1 || mask & chi != 0 {
            return None;
        }
        mask |= chi;
    }
    Some(mask)
}

/// The Riesz product itself, evaluated as the literal pointwise product of
/// its factors.
pub fn riesz_product(spec: &RieszSpec) -> GroupFunction {
    let g = spec.group();
    let n = spec.factors() as f64;
    let mut values = vec![Complex64::new(1.0, 0.0); g.size()];
    match spec.case {
        RieszCase::Ddagger => {
            let scale = 1.0 / (spec.alpha * n.sqrt());
            for &chi in &spec.sigma {
                for (x, v) in values.iter_mut().enumerate() {
                    let r = g.char_eval(chi, x).re; // +-1
                    *v *= Complex64::new(1.0, scale * r);
                }
            }
        }
        RieszCase::Dagger => {
            let scale = 1.0 / (spec.alpha * n.sqrt());
            for &chi in &spec.sigma {
                for (x, v) in values.iter_mut().enumerate() {
                    let c = g.char_eval(chi, x).re; // (gamma + gamma^{-1})/2 = Re gamma
                    *v *= Complex64::new(1.0, scale * c);
                }
            }
        }
    }
    GroupFunction::from_values(g, values).expect("size matches")
}

/// The grading `f = f_0 + ... + f_N` of a function whose spectrum lives on
/// the generated set.
#[derive(Clone, Debug)]
pub struct LengthDecomposition {
    parts: Vec<GroupFunction>,
}

impl LengthDecomposition {
    /// `f_k`, the part of length `k`.
    pub fn part(&self, k: usize) -> &GroupFunction {
        &self.parts[k]
    }

    pub fn parts(&self) -> &[GroupFunction] {
        &self.parts
    }

    pub fn max_length(&self) -> usize {
        self.parts.len() - 1
    }
}

pub fn length_decompose(f: &GroupFunction, spec: &RieszSpec) -> Result<LengthDecomposition> {
    if f.group() != spec.group() {
        return Err(Error::GroupMismatch);
    }
    if spec.rademacher_mask.is_none() && spec.length_enumeration_size() > LENGTH_ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded {
            need: spec.length_enumeration_size(),
            budget: LENGTH_ENUMERATION_LIMIT,
        });
    }
    let spectrum = fourier_forward(f);
    let n = spec.factors();
    let mut graded = vec![SpectrumFunction::zero(f.group()); n + 1];
    let mut off_mass = 0.0f64;
    for (chi, &v) in spectrum.values().iter().enumerate() {
        match spec.char_length(chi) {
            Some(k) => graded[k].values_mut()[chi] = v,
            None => off_mass += v.norm_sqr(),
        }
    }
    if off_mass.sqrt() > OFF_SET_TOLERANCE {
        return Err(Error::SpectralMassOffSet(off_mass.sqrt()));
    }
    Ok(LengthDecomposition {
        parts: graded.iter().map(fourier_inverse).collect(),
    })
}

/// One row of the witness table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessRow {
    pub n: usize,
    pub linf_norm: f64,
    pub l2_norm: f64,
    pub mho_l1: f64,
    pub bound_b1: f64,
    pub bound_b2: Option<f64>,
    pub pass_b1: bool,
    pub pass_b2: Option<bool>,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessReport {
    pub case: RieszCase,
    pub profile: String,
    pub alpha: f64,
    pub rows: Vec<WitnessRow>,
}

impl WitnessReport {
    pub fn all_pass(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.pass_b1 && r.pass_b2.unwrap_or(true))
    }
}

/// Builds the Riesz witness for every `N` in `n_list` and tabulates
/// `||f||_inf`, `||f||_2`, `||mho f||_1` against the certified bounds
/// `B1(N) = 0.14 phi(log 2 sqrt N) - 0.03` and, for the identity profile,
/// `B2(N) = 0.07 log N`.
pub fn witness(
    profile: &LipschitzProfile,
    alpha: f64,
    n_list: &[usize],
    case: RieszCase,
    budget: usize,
) -> Result<WitnessReport> {
    let config = CentralizerConfig::new(profile.clone(), f64::INFINITY, 1.0)?;
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        if n == 0 {
            return Err(Error::InvalidParameter("witness needs N >= 1".into()));
        }
        let start = Instant::now();
        let spec = match case {
            RieszCase::Ddagger => {
                let need = 1usize.checked_shl(n as u32).ok_or(Error::SizeOverflow)?;
                if need > budget {
                    return Err(Error::BudgetExceeded { need, budget });
                }
                RieszSpec::rademacher(n, alpha)?
            }
            RieszCase::Dagger => {
                let spec = RieszSpec::lacunary_cyclic(n, alpha)?;
                if spec.group().size() > budget {
                    return Err(Error::BudgetExceeded {
                        need: spec.group().size(),
                        budget,
                    });
                }
                spec
            }
        };
        let f = riesz_product(&spec);
        let linf_norm = f.norm(f64::INFINITY)?;
        let l2_norm = f.norm(2.0)?;
        let mho_l1 = mho(&config, &f).norm(1.0)?;
        let bound_b1 = 0.14 * profile.eval((2.0 * (n as f64).sqrt()).ln()) - 0.03;
        let bound_b2 = profile.is_identity().then(|| 0.07 * (n as f64).ln());
        rows.push(WitnessRow {
            n,
            linf_norm,
            l2_norm,
            mho_l1,
            bound_b1,
            bound_b2,
            pass_b1: mho_l1 >= bound_b1,
            pass_b2: bound_b2.map(|b| mho_l1 >= b),
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    Ok(WitnessReport {
        case,
        profile: profile.name(),
        alpha,
        rows,
    })
}
