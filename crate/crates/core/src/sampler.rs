//! Seeded, reproducible input samplers for the defect estimators.
//!
//! Coefficients default to i.i.d. complex Gaussians; the mixed draws blend in
//! the structured families where defects peak: characters, (sub)cube
//! indicators and Riesz-type products.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::function::{GroupFunction, SpectrumFunction};
use crate::group::FiniteAbelianGroup;

pub struct Sampler {
    group: FiniteAbelianGroup,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(group: &FiniteAbelianGroup, seed: u64) -> Self {
        Self {
            group: group.clone(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    fn gaussian(&mut self) -> Complex64 {
        Complex64::new(
            self.rng.sample(StandardNormal),
            self.rng.sample(StandardNormal),
        )
    }

    pub fn gaussian_values(&mut self) -> Vec<Complex64> {
        (0..self.group.size()).map(|_| self.gaussian()).collect()
    }

    pub fn gaussian_function(&mut self) -> GroupFunction {
        let v = self.gaussian_values();
        GroupFunction::from_values(&self.group, v).expect("size matches")
    }

    pub fn gaussian_spectrum(&mut self) -> SpectrumFunction {
        let v = self.gaussian_values();
        SpectrumFunction::from_values(&self.group, v).expect("size matches")
    }

    pub fn random_element(&mut self) -> usize {
        self.rng.gen_range(0..self.group.size())
    }

    /// Uniformly random unimodular multiplier on the dual.
    pub fn unimodular_spectrum(&mut self) -> SpectrumFunction {
        let v = (0..self.group.size())
            .map(|_| Complex64::from_polar(1.0, self.rng.gen::<f64>() * std::f64::consts::TAU))
            .collect();
        SpectrumFunction::from_values(&self.group, v).expect("size matches")
    }

    pub fn random_permutation(&mut self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        perm
    }

    /// Gaussian draw mixed with the structured families.
    pub fn mixed_function(&mut self) -> GroupFunction {
        match self.rng.gen_range(0..10) {
            0 => {
                let chi = self.random_element();
                GroupFunction::character(&self.group, chi)
            }
            1 => self.random_indicator(),
            2 if self.group.is_two_group() && self.group.rank() > 0 => self.riesz_like(),
            _ => self.gaussian_function(),
        }
    }

    pub fn mixed_spectrum(&mut self) -> SpectrumFunction {
        match self.rng.gen_range(0..10) {
            0 => {
                let chi = self.random_element();
                SpectrumFunction::character_indicator(&self.group, chi)
            }
            1 => {
                // flat coefficients on a random prefix of the dual
                let len = self.rng.gen_range(1..=self.group.size());
                let mut c = SpectrumFunction::zero(&self.group);
                for v in c.values_mut()[..len].iter_mut() {
                    *v = Complex64::new(1.0, 0.0);
                }
                c
            }
            _ => self.gaussian_spectrum(),
        }
    }

    /// Indicator of a random translate of a random "rectangle" of
    /// coordinates; on 2-groups this is exactly a subcube indicator.
    pub fn random_indicator(&mut self) -> GroupFunction {
        let g = self.group.clone();
        let rank = g.rank();
        let mut fixed = vec![None; rank];
        for (j, slot) in fixed.iter_mut().enumerate() {
            if self.rng.gen_bool(0.5) {
                *slot = Some(self.rng.gen_range(0..g.orders()[j]));
            }
        }
        let values = (0..g.size())
            .map(|x| {
                let t = g.tuple_of(x);
                let inside = fixed
                    .iter()
                    .zip(&t)
                    .all(|(f, &c)| f.is_none_or(|want| want == c));
                if inside {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::default()
                }
            })
            .collect();
        GroupFunction::from_values(&g, values).expect("size matches")
    }

    /// A short random Riesz-type product of `1 + i r_k / c` factors.
    fn riesz_like(&mut self) -> GroupFunction {
        let g = self.group.clone();
        let n = g.rank().min(6);
        let c = (n as f64).sqrt().max(1.0) * 2.0;
        let mut values = vec![Complex64::new(1.0, 0.0); g.size()];
        for k in 0..n {
            if self.rng.gen_bool(0.5) {
                continue;
            }
            let chi = g.rademacher(k);
            for (x, v) in values.iter_mut().enumerate() {
                let r = g.char_eval(chi, x).re;
                *v *= Complex64::new(1.0, r / c);
            }
        }
        GroupFunction::from_values(&g, values).expect("size matches")
    }

    /// Draws for the convolution-algebra slot: mostly Gaussian densities,
    /// sometimes characters or normalized indicators.
    pub fn l1_element(&mut self) -> GroupFunction {
        match self.rng.gen_range(0..6) {
            0 => {
                let chi = self.random_element();
                GroupFunction::character(&self.group, chi)
            }
            1 => {
                let ind = self.random_indicator();
                let mass = ind.norm(1.0).expect("p >= 1");
                if mass > 0.0 {
                    ind.scale(Complex64::new(1.0 / mass, 0.0))
                } else {
                    ind
                }
            }
            _ => self.gaussian_function(),
        }
    }
}
