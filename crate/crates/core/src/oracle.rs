//! Slow reference implementations used to check the fast paths.
//!
//! These evaluate the defining double sums directly and share no code with
//! the transform layer; the acceptance suite and the `transform-check`
//! command compare against them.

use num_complex::Complex64;

use crate::error::Result;
use crate::function::{GroupFunction, SpectrumFunction};

/// `fhat(a) = (1/|G|) sum_x f(x) conj(chi_a(x))`, evaluated literally.
pub fn naive_fourier_forward(f: &GroupFunction) -> SpectrumFunction {
    let g = f.group();
    let n = g.size();
    let values = (0..n)
        .map(|chi| {
            let mut acc = Complex64::default();
            for (x, &v) in f.values().iter().enumerate() {
                acc += v * g.char_eval(chi, x).conj();
            }
            acc / n as f64
        })
        .collect();
    SpectrumFunction::from_values(g, values).expect("size matches")
}

/// `f(x) = sum_a c(a) chi_a(x)`, evaluated literally.
pub fn naive_fourier_inverse(c: &SpectrumFunction) -> GroupFunction {
    let g = c.group();
    let n = g.size();
    let values = (0..n)
        .map(|x| {
            let mut acc = Complex64::default();
            for (chi, &v) in c.values().iter().enumerate() {
                acc += v * g.char_eval(chi, x);
            }
            acc
        })
        .collect();
    GroupFunction::from_values(g, values).expect("size matches")
}

/// `(f*g)(x) = (1/|G|) sum_y f(x - y) g(y)`, evaluated literally.
pub fn naive_convolve(f: &GroupFunction, g: &GroupFunction) -> Result<GroupFunction> {
    f.same_group(g)?;
    let grp = f.group();
    let n = grp.size();
    let values = (0..n)
        .map(|x| {
            let mut acc = Complex64::default();
            for (y, &gv) in g.values().iter().enumerate() {
                acc += f.values()[grp.sub(x, y)] * gv;
            }
            acc / n as f64
        })
        .collect();
    GroupFunction::from_values(grp, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::{convolve, fourier_forward};
    use crate::group::FiniteAbelianGroup;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};

    #[test]
    fn fast_convolution_matches_double_sum() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let g = FiniteAbelianGroup::new(&[3, 4]).unwrap();
        let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
            GroupFunction::from_values(
                &g,
                (0..g.size())
                    .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                    .collect(),
            )
            .unwrap()
        };
        let f = mk(&mut rng);
        let h = mk(&mut rng);
        let fast = convolve(&f, &h).unwrap();
        let slow = naive_convolve(&f, &h).unwrap();
        for (a, b) in fast.values().iter().zip(slow.values()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn forward_oracle_on_identity_indicator() {
        let g = FiniteAbelianGroup::cantor(2).unwrap();
        let f = GroupFunction::point_indicator(&g, 0);
        let slow = naive_fourier_forward(&f);
        let fast = fourier_forward(&f);
        for (a, b) in slow.values().iter().zip(fast.values()) {
            assert!((a - b).norm() < 1e-14);
            assert!((a - Complex64::new(0.25, 0.0)).norm() < 1e-14);
        }
    }
}
