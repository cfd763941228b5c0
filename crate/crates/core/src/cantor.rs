//! Cantor-group specifics: subcube indicators and localization, the
//! subcube embeddings `E` with their spectral pieces `E^b`, the copies
//! defect, exact random-walk means and Khintchine ratios.
//!
//! Elements of `Delta_n` are bitmask indices; bit `k` set means the `k`-th
//! coordinate is `-1` (bit 0 encodes `+1`). A sign choice on a coordinate
//! set is stored as the bitmask of its `-1` positions.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::centralizer::{mho, quasilinear_bound, CentralizerConfig};
use crate::error::{Error, Result};
use crate::function::{fourier_forward, fourier_inverse, GroupFunction, SpectrumFunction, Vector};
use crate::group::FiniteAbelianGroup;
use crate::profile::LipschitzProfile;
use crate::sampler::Sampler;

/// Hilbertian summing constant used by the copies bound.
pub const K_SPACE_HILBERT: f64 = 37.0;

/// A clopen subcube `Delta(a, eps)` of a Cantor group: the points whose
/// coordinate `k` equals `eps(k)` for every `k` in `a`.
#[derive(Clone, Debug)]
pub struct SubcubeSpec {
    group: FiniteAbelianGroup,
    /// Sorted coordinate set `a` (0-based).
    coords: Vec<usize>,
    /// Bitmask over `coords` positions: bit `i` set means `eps = -1` on
    /// `coords[i]`.
    neg_mask: usize,
}

impl SubcubeSpec {
    pub fn new(group: &FiniteAbelianGroup, coords: &[usize], signs: &[i8]) -> Result<Self> {
        if !group.is_two_group() {
            return Err(Error::NotTwoGroup);
        }
        if coords.len() != signs.len() {
            return Err(Error::InvalidSubcube(
                "one sign per coordinate required".into(),
            ));
        }
        if coords.iter().any(|&k| k >= group.rank()) {
            return Err(Error::InvalidSubcube(format!(
                "coordinate out of range for rank {}",
                group.rank()
            )));
        }
        let mut pairs: Vec<(usize, i8)> =
            coords.iter().copied().zip(signs.iter().copied()).collect();
        pairs.sort_by_key(|&(k, _)| k);
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidSubcube("repeated coordinates".into()));
        }
        let mut neg_mask = 0usize;
        for (i, &(_, s)) in pairs.iter().enumerate() {
            match s {
                1 => {}
                -1 => neg_mask |= 1 << i,
                _ => return Err(Error::InvalidSubcube("signs must be +-1".into())),
            }
        }
        Ok(Self {
            group: group.clone(),
            coords: pairs.into_iter().map(|(k, _)| k).collect(),
            neg_mask,
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// Sign at the `i`-th listed coordinate.
    pub fn sign_at(&self, i: usize) -> f64 {
        if self.neg_mask >> i & 1 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.coords
            .iter()
            .enumerate()
            .all(|(i, &k)| (x >> k) & 1 == (self.neg_mask >> i) & 1)
    }

    /// The sign choice as a full-group bitmask (bits at the coordinates).
    fn neg_bits_in_group(&self) -> usize {
        let mut bits = 0usize;
        for (i, &k) in self.coords.iter().enumerate() {
            if self.neg_mask >> i & 1 == 1 {
                bits |= 1 << k;
            }
        }
        bits
    }
}

/// Indicator of the subcube; Haar measure `2^{-|a|}`, spectrum supported on
/// the Walsh sets inside `a` with coefficients `2^{-|a|} prod eps`.
pub fn subcube_indicator(spec: &SubcubeSpec) -> GroupFunction {
    let g = spec.group();
    let values = (0..g.size())
        .map(|x| {
            if spec.contains(x) {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::default()
            }
        })
        .collect();
    GroupFunction::from_values(g, values).expect("size matches")
}

/// The three equivalent localization statements for `supp f` inside a
/// subcube, each evaluated with tolerance `tol` relative to `||f||_2`:
/// support containment, the eigenrelations `r_k f = eps(k) f`, and the
/// spectral reflections `fhat(d xor {k}) = eps(k) fhat(d)`.
pub fn localization_conditions(
    f: &GroupFunction,
    spec: &SubcubeSpec,
    tol: f64,
) -> Result<(bool, bool, bool)> {
    if f.group() != spec.group() {
        return Err(Error::GroupMismatch);
    }
    let scale = f.norm(2.0)?.max(1.0);
    let thresh = tol * scale;

    let support_ok = f
        .values()
        .iter()
        .enumerate()
        .all(|(x, v)| spec.contains(x) || v.norm() <= thresh);

    let mut eigen_ok = true;
    for (i, &k) in spec.coords().iter().enumerate() {
        let eps = spec.sign_at(i);
        for (x, v) in f.values().iter().enumerate() {
            let r = if (x >> k) & 1 == 0 { 1.0 } else { -1.0 };
            if (v * r - v * eps).norm() > thresh {
                eigen_ok = false;
                break;
            }
        }
        if !eigen_ok {
            break;
        }
    }

    let spectrum = fourier_forward(f);
    let mut spectral_ok = true;
    for (i, &k) in spec.coords().iter().enumerate() {
        let eps = spec.sign_at(i);
        for (d, v) in spectrum.values().iter().enumerate() {
            let reflected = spectrum.values()[d ^ (1 << k)];
            if (reflected - v * eps).norm() > thresh {
                spectral_ok = false;
                break;
            }
        }
        if !spectral_ok {
            break;
        }
    }

    Ok((support_ok, eigen_ok, spectral_ok))
}

/// The translation that carries `Delta(a, eps)` onto `Delta(a, eta)`:
/// trivial off `a`, the sign ratio on `a`.
pub fn conjugating_translation(from: &SubcubeSpec, to: &SubcubeSpec) -> Result<usize> {
    if from.group() != to.group() || from.coords() != to.coords() {
        return Err(Error::InvalidSubcube(
            "subcubes must share the coordinate set".into(),
        ));
    }
    Ok(from.neg_bits_in_group() ^ to.neg_bits_in_group())
}

/// The embedding of `Delta_{n-|a|}` onto the subcube `Delta(a, eps)` through
/// the increasing enumeration of the free coordinates.
#[derive(Clone, Debug)]
pub struct EmbeddingSpec {
    subcube: SubcubeSpec,
    source: FiniteAbelianGroup,
    /// `s`: index of the target coordinate carrying source coordinate `n`.
    free_coords: Vec<usize>,
}

impl EmbeddingSpec {
    pub fn new(subcube: SubcubeSpec) -> Self {
        let rank = subcube.group().rank();
        let free_coords: Vec<usize> = (0..rank)
            .filter(|k| !subcube.coords().contains(k))
            .collect();
        let source = FiniteAbelianGroup::cantor(free_coords.len()).expect("smaller group");
        Self {
            subcube,
            source,
            free_coords,
        }
    }

    pub fn source(&self) -> &FiniteAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteAbelianGroup {
        self.subcube.group()
    }

    pub fn subcube(&self) -> &SubcubeSpec {
        &self.subcube
    }

    /// `sigma x` in the source, read off the free coordinates of a target
    /// point `x`.
    fn project(&self, x: usize) -> usize {
        let mut y = 0usize;
        for (n, &k) in self.free_coords.iter().enumerate() {
            y |= ((x >> k) & 1) << n;
        }
        y
    }

    /// Image of a source character under `d -> s(d)`.
    fn lift_char(&self, d: usize) -> usize {
        let mut chi = 0usize;
        for (n, &k) in self.free_coords.iter().enumerate() {
            chi |= ((d >> n) & 1) << k;
        }
        chi
    }
}

/// `(Ef)(x) = f(sigma x)` on the subcube and `0` elsewhere. Multiplicative,
/// and `||Ef||_p = 2^{-|a|/p} ||f||_p` for finite `p`.
pub fn embed(spec: &EmbeddingSpec, f: &GroupFunction) -> Result<GroupFunction> {
    if f.group() != spec.source() {
        return Err(Error::GroupMismatch);
    }
    let target = spec.target();
    let values = (0..target.size())
        .map(|x| {
            if spec.subcube.contains(x) {
                f.values()[spec.project(x)]
            } else {
                Complex64::default()
            }
        })
        .collect();
    GroupFunction::from_values(target, values)
}

/// The spectral piece `E^b` of the embedding: sends `w_d` to
/// `c_b w_{b xor s(d)}` with `c_b = 2^{-|a|} prod_{k in b} eps(k)`; summing
/// over all `b` inside `a` recovers `E`.
pub fn eb_operator(
    spec: &EmbeddingSpec,
    b_coords: &[usize],
    f: &GroupFunction,
) -> Result<GroupFunction> {
    if f.group() != spec.source() {
        return Err(Error::GroupMismatch);
    }
    let mut b_mask = 0usize;
    let mut coeff = 2f64.powi(-(spec.subcube.coords().len() as i32));
    for &k in b_coords {
        let pos = spec
            .subcube
            .coords()
            .iter()
            .position(|&c| c == k)
            .ok_or_else(|| Error::InvalidSubcube("b must lie inside a".into()))?;
        if b_mask >> k & 1 == 1 {
            return Err(Error::InvalidSubcube("repeated coordinates in b".into()));
        }
        b_mask |= 1 << k;
        coeff *= spec.subcube.sign_at(pos);
    }
    let spectrum = fourier_forward(f);
    let mut out = SpectrumFunction::zero(spec.target());
    for (d, &v) in spectrum.values().iter().enumerate() {
        out.values_mut()[b_mask ^ spec.lift_char(d)] = v * coeff;
    }
    Ok(fourier_inverse(&out))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CopiesReport {
    pub samples: usize,
    pub max_defect: f64,
    pub bound: f64,
    pub pass: bool,
    pub defects: Vec<f64>,
}

/// Samples the defect `||mho(Ef) - E(mho f)||_2 / ||f||_2` of the copy
/// identification, against the summing bound `37 Q(Omega)`.
pub fn copies_report(
    spec: &EmbeddingSpec,
    profile: &LipschitzProfile,
    samples: usize,
    seed: u64,
) -> Result<CopiesReport> {
    if samples == 0 {
        return Err(Error::EmptyReport);
    }
    let config = CentralizerConfig::two_two(profile.clone());
    let mut sampler = Sampler::new(spec.source(), seed);
    let mut defects = Vec::with_capacity(samples);
    let mut max_defect = 0.0f64;
    let mut drawn = 0usize;
    while drawn < samples {
        let f = sampler.mixed_function();
        let norm = f.norm(2.0)?;
        if norm < 1e-12 {
            continue;
        }
        drawn += 1;
        let lhs = mho(&config, &embed(spec, &f)?);
        let rhs = embed(spec, &mho(&config, &f))?;
        let d = lhs.sub(&rhs).norm(2.0)? / norm;
        max_defect = max_defect.max(d);
        defects.push(d);
    }
    let bound = K_SPACE_HILBERT * quasilinear_bound(profile);
    Ok(CopiesReport {
        samples,
        max_defect,
        bound,
        pass: max_defect <= bound + 1e-9,
        defects,
    })
}

/// Exact mean displacement of the `n`-step simple random walk, with the
/// asymptotic ratio against `sqrt(2n/pi)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WalkMean {
    pub n: usize,
    pub exact: f64,
    pub ratio: f64,
}

/// `E|X_n| = 2^{-n} sum_k |2k - n| C(n, k)`, summed in exact big-integer
/// arithmetic and converted to floating point only at the final division.
pub fn walk_mean(n: usize) -> Result<WalkMean> {
    if n == 0 {
        return Err(Error::InvalidParameter("walk needs n >= 1".into()));
    }
    let mut sum = BigUint::zero();
    let mut binom = BigUint::one();
    for k in 0..=n {
        let disp = (2 * k as i64 - n as i64).unsigned_abs();
        sum += &binom * BigUint::from(disp);
        if k < n {
            binom = binom * BigUint::from(n - k) / BigUint::from(k + 1);
        }
    }
    let exact = biguint_shifted_to_f64(&sum, n as i64);
    let ratio = exact / (2.0 * n as f64 / std::f64::consts::PI).sqrt();
    Ok(WalkMean { n, exact, ratio })
}

/// `s / 2^shift` as f64, keeping a 64-bit mantissa of `s`.
fn biguint_shifted_to_f64(s: &BigUint, shift: i64) -> f64 {
    let bits = s.bits() as i64;
    if bits == 0 {
        return 0.0;
    }
    let drop = (bits - 64).max(0);
    let mantissa = (s >> (drop as u64)).to_u64().expect("fits after shift");
    mantissa as f64 * 2f64.powi((drop - shift) as i32)
}

/// `||sum a_i r_i||_{L_p(Delta_k)} / ||a||_2`, an exact group average.
pub fn khintchine_ratio(coefficients: &[f64], p: f64, budget: usize) -> Result<f64> {
    let k = coefficients.len();
    let sq: f64 = coefficients.iter().map(|a| a * a).sum();
    if sq == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let need = 1usize.checked_shl(k as u32).ok_or(Error::SizeOverflow)?;
    if need > budget {
        return Err(Error::BudgetExceeded { need, budget });
    }
    let group = FiniteAbelianGroup::cantor(k)?;
    let values = (0..group.size())
        .map(|x| {
            let mut s = 0.0;
            for (j, &a) in coefficients.iter().enumerate() {
                s += if (x >> j) & 1 == 0 { a } else { -a };
            }
            Complex64::new(s, 0.0)
        })
        .collect();
    let f = GroupFunction::from_values(&group, values)?;
    Ok(f.norm(p)? / sq.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cantor(n: usize) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cantor(n).unwrap()
    }

    #[test]
    fn empty_subcube_is_the_whole_group() {
        let g = cantor(3);
        let spec = SubcubeSpec::new(&g, &[], &[]).unwrap();
        let ind = subcube_indicator(&spec);
        assert!(ind
            .values()
            .iter()
            .all(|v| (v - Complex64::new(1.0, 0.0)).norm() < 1e-15));
    }

    #[test]
    fn half_cube_spectrum() {
        let g = cantor(2);
        let spec = SubcubeSpec::new(&g, &[0], &[1]).unwrap();
        let c = fourier_forward(&subcube_indicator(&spec));
        assert!((c.values()[0] - Complex64::new(0.5, 0.0)).norm() < 1e-14);
        assert!((c.values()[1] - Complex64::new(0.5, 0.0)).norm() < 1e-14);
        assert!(c.values()[2].norm() < 1e-14);
        assert!(c.values()[3].norm() < 1e-14);
    }

    #[test]
    fn subcube_spectrum_closed_form() {
        // spectrum is 2^{-|a|} prod_{k in b} eps(k) on w_b, b inside a
        let g = cantor(4);
        let coords = [1usize, 3];
        let signs = [1i8, -1];
        let spec = SubcubeSpec::new(&g, &coords, &signs).unwrap();
        let c = fourier_forward(&subcube_indicator(&spec));
        let a_mask = (1usize << 1) | (1 << 3);
        for (chi, v) in c.values().iter().enumerate() {
            if chi & !a_mask != 0 {
                assert!(v.norm() < 1e-14);
            } else {
                let mut want = 0.25;
                if chi >> 3 & 1 == 1 {
                    want = -want; // eps = -1 on coordinate 3
                }
                assert!((v - Complex64::new(want, 0.0)).norm() < 1e-14);
            }
        }
        // haar measure 2^{-|a|}
        let ind = subcube_indicator(&spec);
        assert!((ind.norm(1.0).unwrap() - 0.25).abs() < 1e-14);
    }

    #[test]
    fn full_localization_gives_point_indicator() {
        let g = cantor(3);
        let coords = [0usize, 1, 2];
        let signs = [-1i8, 1, -1];
        let spec = SubcubeSpec::new(&g, &coords, &signs).unwrap();
        let ind = subcube_indicator(&spec);
        assert_eq!(ind.support().len(), 1);
        let c = fourier_forward(&ind);
        for v in c.values() {
            assert!((v.norm() - 0.125).abs() < 1e-14);
        }
    }

    #[test]
    fn subcube_validation() {
        let g = cantor(2);
        assert!(SubcubeSpec::new(&g, &[5], &[1]).is_err());
        assert!(SubcubeSpec::new(&g, &[0, 0], &[1, 1]).is_err());
        assert!(SubcubeSpec::new(&g, &[0], &[2]).is_err());
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        assert!(matches!(
            SubcubeSpec::new(&z3, &[0], &[1]),
            Err(Error::NotTwoGroup)
        ));
    }

    #[test]
    fn embed_constant_and_rademacher() {
        let g = cantor(2);
        let spec = EmbeddingSpec::new(SubcubeSpec::new(&g, &[0], &[1]).unwrap());
        // E(1) = indicator of the subcube
        let e1 = embed(&spec, &GroupFunction::one(spec.source())).unwrap();
        let ind = subcube_indicator(spec.subcube());
        for (a, b) in e1.values().iter().zip(ind.values()) {
            assert!((a - b).norm() < 1e-15);
        }
        // free coordinate is 2 (0-based index 1): E(r_1) = 1_{cube} r_2
        let r = GroupFunction::character(spec.source(), 1);
        let er = embed(&spec, &r).unwrap();
        let want = ind.mul_pointwise(&GroupFunction::character(&g, 2)).unwrap();
        for (a, b) in er.values().iter().zip(want.values()) {
            assert!((a - b).norm() < 1e-15);
        }
        // E is multiplicative
        let f = GroupFunction::character(spec.source(), 1);
        let ef_sq = embed(&spec, &f.mul_pointwise(&f).unwrap()).unwrap();
        let sq_ef = er.mul_pointwise(&er).unwrap();
        // E(fg) = E(f)E(g) needs one indicator factor removed: 1_cube^2 = 1_cube
        for (a, b) in ef_sq.values().iter().zip(sq_ef.values()) {
            assert!((a - b).norm() < 1e-15);
        }
        // wrong source group
        assert!(embed(&spec, &GroupFunction::one(&g)).is_err());
    }

    #[test]
    fn embedding_norm_scaling() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        let g = cantor(5);
        let spec = EmbeddingSpec::new(SubcubeSpec::new(&g, &[1, 3], &[-1, 1]).unwrap());
        let f = GroupFunction::from_values(
            spec.source(),
            (0..spec.source().size())
                .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                .collect(),
        )
        .unwrap();
        let ef = embed(&spec, &f).unwrap();
        for p in [1.0, 2.0, 3.5] {
            let want = 2f64.powf(-2.0 / p) * f.norm(p).unwrap();
            assert!((ef.norm(p).unwrap() - want).abs() < 1e-12);
        }
        assert!((ef.norm(f64::INFINITY).unwrap() - f.norm(f64::INFINITY).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn eb_pieces_sum_to_the_embedding() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(73);
        let g = cantor(4);
        let spec = EmbeddingSpec::new(SubcubeSpec::new(&g, &[0, 2], &[1, -1]).unwrap());
        let f = GroupFunction::from_values(
            spec.source(),
            (0..4)
                .map(|_| Complex64::new(rng.gen(), rng.gen()))
                .collect(),
        )
        .unwrap();
        // E^{empty}(w_d) = 2^{-|a|} w_{s(d)}
        let piece = eb_operator(&spec, &[], &GroupFunction::character(spec.source(), 1)).unwrap();
        let want = GroupFunction::character(&g, 2).scale(Complex64::new(0.25, 0.0));
        for (a, b) in piece.values().iter().zip(want.values()) {
            assert!((a - b).norm() < 1e-14);
        }
        // sum over b of E^b = E
        let mut sum = GroupFunction::zero(&g);
        for b in [vec![], vec![0], vec![2], vec![0, 2]] {
            sum = sum.add(&eb_operator(&spec, &b, &f).unwrap());
        }
        let ef = embed(&spec, &f).unwrap();
        for (a, b) in sum.values().iter().zip(ef.values()) {
            assert!((a - b).norm() < 1e-12);
        }
        // b outside a
        assert!(eb_operator(&spec, &[1], &f).is_err());
    }

    #[test]
    fn copies_hand_values() {
        use crate::centralizer::{mho, quasilinear_bound, CentralizerConfig};
        use crate::profile::LipschitzProfile;
        let g = cantor(3);
        let spec = EmbeddingSpec::new(SubcubeSpec::new(&g, &[0], &[1]).unwrap());
        let profile = LipschitzProfile::identity();
        let config = CentralizerConfig::two_two(profile.clone());
        // f = 1: E(mho 1) = 0 and ||mho(E 1)||_2 = phi(log(2)/2)/sqrt(2)
        let one = GroupFunction::one(spec.source());
        assert!(
            embed(&spec, &mho(&config, &one))
                .unwrap()
                .norm(2.0)
                .unwrap()
                < 1e-14
        );
        let got = mho(&config, &embed(&spec, &one).unwrap())
            .norm(2.0)
            .unwrap();
        let want = 0.5 * std::f64::consts::LN_2 / std::f64::consts::SQRT_2;
        assert!((got - want).abs() < 1e-13, "got {got}, want {want}");
        assert!(got <= K_SPACE_HILBERT * quasilinear_bound(&profile));
        // f = r_1: the defect stays under the summing bound
        let r = GroupFunction::character(spec.source(), 1);
        let defect = mho(&config, &embed(&spec, &r).unwrap())
            .sub(&embed(&spec, &mho(&config, &r)).unwrap())
            .norm(2.0)
            .unwrap();
        assert!(defect <= K_SPACE_HILBERT * quasilinear_bound(&profile));
    }

    #[test]
    fn walk_means() {
        assert!(matches!(walk_mean(0), Err(Error::InvalidParameter(_))));
        assert!((walk_mean(2).unwrap().exact - 1.0).abs() < 1e-14);
        assert!((walk_mean(4).unwrap().exact - 1.5).abs() < 1e-14);
        for n in [64, 256, 1024] {
            let w = walk_mean(n).unwrap();
            assert!((w.ratio - 1.0).abs() < 0.01, "n={n} ratio={}", w.ratio);
        }
    }

    #[test]
    fn khintchine_values() {
        let budget = 1 << 24;
        assert!((khintchine_ratio(&[1.0], 1.0, budget).unwrap() - 1.0).abs() < 1e-14);
        assert!((khintchine_ratio(&[3.0], 7.0, budget).unwrap() - 1.0).abs() < 1e-14);
        let a1 = khintchine_ratio(&[1.0, 1.0], 1.0, budget).unwrap();
        assert!((a1 - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(matches!(
            khintchine_ratio(&[0.0, 0.0], 1.0, budget),
            Err(Error::DegenerateInput)
        ));
        assert!(matches!(
            khintchine_ratio(&[1.0; 30], 1.0, budget),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn localization_three_ways() {
        let g = cantor(4);
        let spec = SubcubeSpec::new(&g, &[1, 2], &[-1, 1]).unwrap();
        let mut sampler = Sampler::new(&g, 99);
        let ind = subcube_indicator(&spec);
        for _ in 0..20 {
            let f = sampler.gaussian_function();
            let localized = f.mul_pointwise(&ind).unwrap();
            let (a, b, c) = localization_conditions(&localized, &spec, 1e-10).unwrap();
            assert!(a && b && c);
            let (a, b, c) = localization_conditions(&f, &spec, 1e-10).unwrap();
            assert!(!a && !b && !c);
        }
    }

    #[test]
    fn conjugation_carries_subcubes() {
        let g = cantor(3);
        let from = SubcubeSpec::new(&g, &[0, 2], &[1, -1]).unwrap();
        let to = SubcubeSpec::new(&g, &[0, 2], &[-1, -1]).unwrap();
        let y = conjugating_translation(&from, &to).unwrap();
        let ind_from = subcube_indicator(&from);
        let moved = ind_from.translate_index(y);
        let ind_to = subcube_indicator(&to);
        for (a, b) in moved.values().iter().zip(ind_to.values()) {
            assert!((a - b).norm() < 1e-15);
        }
    }
}
