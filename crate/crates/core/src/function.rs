//! Complex-valued functions on a group and on its dual.
//!
//! `GroupFunction` integrates against normalized Haar measure (weight
//! `1/|G|`); `SpectrumFunction` lives on the dual with counting measure, so
//! Parseval reads `||f||_{L_2} = ||fhat||_{l_2}` with no extra factor.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::transform::{transform_in_place, Direction};

/// Vector-space structure shared by the value types the defect estimators
/// sample over.
pub trait Vector: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
}

/// A function `G -> C`, stored densely in canonical index order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupFunction {
    group: FiniteAbelianGroup,
    values: Vec<Complex64>,
}

/// A function `Gamma -> C` on the dual, indexed like the group itself.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumFunction {
    group: FiniteAbelianGroup,
    values: Vec<Complex64>,
}

fn check_exponent(p: f64) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    Ok(())
}

/// Kahan-compensated sum; plain accumulation loses ~n*eps relative accuracy,
/// which the 1e-12 norm identities cannot afford at 2^20 points.
fn compensated_sum(terms: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for t in terms {
        let y = t - carry;
        let s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    sum
}

fn norm_weighted(values: &[Complex64], p: f64, weight: f64) -> f64 {
    if p.is_infinite() {
        values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    } else if p == 2.0 {
        (compensated_sum(values.iter().map(|v| v.norm_sqr())) * weight).sqrt()
    } else if p == 1.0 {
        compensated_sum(values.iter().map(|v| v.norm())) * weight
    } else {
        (compensated_sum(values.iter().map(|v| v.norm().powf(p))) * weight).powf(1.0 / p)
    }
}

macro_rules! shared_impl {
    ($ty:ident) => {
        impl $ty {
            pub fn group(&self) -> &FiniteAbelianGroup {
                &self.group
            }

            pub fn values(&self) -> &[Complex64] {
                &self.values
            }

            pub fn values_mut(&mut self) -> &mut [Complex64] {
                &mut self.values
            }

            pub fn into_values(self) -> Vec<Complex64> {
                self.values
            }

            pub fn zero(group: &FiniteAbelianGroup) -> Self {
                Self {
                    group: group.clone(),
                    values: vec![Complex64::default(); group.size()],
                }
            }

            pub fn from_values(group: &FiniteAbelianGroup, values: Vec<Complex64>) -> Result<Self> {
                if values.len() != group.size() {
                    return Err(Error::LengthMismatch {
                        got: values.len(),
                        want: group.size(),
                    });
                }
                Ok(Self {
                    group: group.clone(),
                    values,
                })
            }

            /// Indices of the exactly nonzero entries.
            pub fn support(&self) -> Vec<usize> {
                self.values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.re != 0.0 || v.im != 0.0)
                    .map(|(i, _)| i)
                    .collect()
            }

            pub fn scale(&self, c: Complex64) -> Self {
                Self {
                    group: self.group.clone(),
                    values: self.values.iter().map(|v| v * c).collect(),
                }
            }

            /// Errors unless both functions live on the same group.
            pub fn same_group(&self, other: &Self) -> Result<()> {
                if self.group != other.group {
                    return Err(Error::GroupMismatch);
                }
                Ok(())
            }
        }

        impl Vector for $ty {
            fn add(&self, other: &Self) -> Self {
                assert_eq!(self.group, other.group, "group mismatch");
                Self {
                    group: self.group.clone(),
                    values: self
                        .values
                        .iter()
                        .zip(&other.values)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }

            fn sub(&self, other: &Self) -> Self {
                assert_eq!(self.group, other.group, "group mismatch");
                Self {
                    group: self.group.clone(),
                    values: self
                        .values
                        .iter()
                        .zip(&other.values)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }
        }
    };
}

shared_impl!(GroupFunction);
shared_impl!(SpectrumFunction);

impl GroupFunction {
    /// The constant function `1_G`.
    pub fn one(group: &FiniteAbelianGroup) -> Self {
        Self {
            group: group.clone(),
            values: vec![Complex64::new(1.0, 0.0); group.size()],
        }
    }

    /// The character with index `chi`, as a function on the group.
    pub fn character(group: &FiniteAbelianGroup, chi: usize) -> Self {
        let values = (0..group.size()).map(|x| group.char_eval(chi, x)).collect();
        Self {
            group: group.clone(),
            values,
        }
    }

    /// Indicator of a single element.
    pub fn point_indicator(group: &FiniteAbelianGroup, x: usize) -> Self {
        let mut f = Self::zero(group);
        f.values[x] = Complex64::new(1.0, 0.0);
        f
    }

    /// `L_p` norm with normalized Haar measure; `p = infinity` is the sup.
    pub fn norm(&self, p: f64) -> Result<f64> {
        check_exponent(p)?;
        Ok(norm_weighted(
            &self.values,
            p,
            1.0 / self.group.size() as f64,
        ))
    }

    /// Translation `f_y(x) = f(x y^{-1})` for an element tuple `y`.
    ///
    /// On the spectral side `F(f_y)(chi) = chi(y^{-1}) F(f)(chi)`; when every
    /// element is its own inverse (the Cantor groups) this is the familiar
    /// multiplication by `chi(y)`.
    pub fn translate(&self, y: &[u32]) -> Result<Self> {
        let y_idx = self.group.index_of(y)?;
        Ok(self.translate_index(y_idx))
    }

    /// Translation by an already-validated element index.
    pub fn translate_index(&self, y: usize) -> Self {
        let g = &self.group;
        let values = (0..g.size()).map(|x| self.values[g.sub(x, y)]).collect();
        Self {
            group: g.clone(),
            values,
        }
    }

    /// Pointwise product.
    pub fn mul_pointwise(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(Self {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// Pointwise product with the character of index `chi`.
    pub fn mul_character(&self, chi: usize) -> Self {
        let g = &self.group;
        let values = (0..g.size())
            .map(|x| self.values[x] * g.char_eval(chi, x))
            .collect();
        Self {
            group: g.clone(),
            values,
        }
    }
}

impl SpectrumFunction {
    /// Indicator of a single character.
    pub fn character_indicator(group: &FiniteAbelianGroup, chi: usize) -> Self {
        let mut c = Self::zero(group);
        c.values[chi] = Complex64::new(1.0, 0.0);
        c
    }

    /// `l_q` norm with counting measure; `q = infinity` is the sup.
    pub fn norm(&self, q: f64) -> Result<f64> {
        check_exponent(q)?;
        Ok(norm_weighted(&self.values, q, 1.0))
    }
}

/// `fhat(a) = (1/|G|) sum_x f(x) conj(chi_a(x))`.
pub fn fourier_forward(f: &GroupFunction) -> SpectrumFunction {
    let mut values = f.values.clone();
    transform_in_place(&mut values, &f.group, Direction::Forward);
    let scale = 1.0 / f.group.size() as f64;
    for v in &mut values {
        *v *= scale;
    }
    SpectrumFunction {
        group: f.group.clone(),
        values,
    }
}

/// `f(x) = sum_a c(a) chi_a(x)`.
pub fn fourier_inverse(c: &SpectrumFunction) -> GroupFunction {
    let mut values = c.values.clone();
    transform_in_place(&mut values, &c.group, Direction::Inverse);
    GroupFunction {
        group: c.group.clone(),
        values,
    }
}

/// Convolution `(f*g)(x) = int f(x y^{-1}) g(y) dy`, computed through the
/// spectra: the transform turns it into the pointwise product.
pub fn convolve(f: &GroupFunction, g: &GroupFunction) -> Result<GroupFunction> {
    f.same_group(g)?;
    let mut a = fourier_forward(f);
    let b = fourier_forward(g);
    for (x, y) in a.values.iter_mut().zip(&b.values) {
        *x *= y;
    }
    Ok(fourier_inverse(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn cantor(n: usize) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cantor(n).unwrap()
    }

    #[test]
    fn forward_of_rademacher_is_an_indicator() {
        let g = cantor(1);
        let r1 = GroupFunction::character(&g, 1);
        let c = fourier_forward(&r1);
        assert!((c.values()[0]).norm() < 1e-15);
        assert!((c.values()[1] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn forward_of_one_is_trivial_indicator() {
        let g = FiniteAbelianGroup::new(&[4, 9, 5]).unwrap();
        let c = fourier_forward(&GroupFunction::one(&g));
        assert!((c.values()[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(c.values()[1..].iter().all(|v| v.norm() < 1e-12));
    }

    #[test]
    fn point_indicator_spectrum_is_flat() {
        let g = cantor(2);
        let f = GroupFunction::point_indicator(&g, 0);
        let c = fourier_forward(&f);
        for v in c.values() {
            assert!((v - Complex64::new(0.25, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn inverse_of_indicators() {
        let g = cantor(2);
        let one = fourier_inverse(&SpectrumFunction::character_indicator(&g, 0));
        assert!(one
            .values()
            .iter()
            .all(|v| (v - Complex64::new(1.0, 0.0)).norm() < 1e-14));
        let r1 = fourier_inverse(&SpectrumFunction::character_indicator(&g, 1));
        let want = GroupFunction::character(&g, 1);
        for (a, b) in r1.values().iter().zip(want.values()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn round_trip_matches_naive_evaluation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for orders in [vec![2, 2, 2], vec![6], vec![4, 9, 5], vec![729]] {
            let g = FiniteAbelianGroup::new(&orders).unwrap();
            let c = SpectrumFunction::from_values(
                &g,
                (0..g.size())
                    .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                    .collect(),
            )
            .unwrap();
            let f = fourier_inverse(&c);
            let naive = oracle::naive_fourier_inverse(&c);
            let scale = c.norm(2.0).unwrap().max(1.0);
            for (a, b) in f.values().iter().zip(naive.values()) {
                assert!((a - b).norm() < 1e-10 * scale);
            }
            let back = fourier_forward(&f);
            for (a, b) in back.values().iter().zip(c.values()) {
                assert!((a - b).norm() < 1e-10 * scale);
            }
        }
    }

    #[test]
    fn character_convolved_with_itself_is_itself() {
        for g in [cantor(2), FiniteAbelianGroup::cyclic(7).unwrap()] {
            let gamma = GroupFunction::character(&g, 1);
            let conv = convolve(&gamma, &gamma).unwrap();
            for (a, b) in conv.values().iter().zip(gamma.values()) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn distinct_characters_convolve_to_zero() {
        let g = cantor(2);
        let r1 = GroupFunction::character(&g, 1);
        let r2 = GroupFunction::character(&g, 2);
        let conv = convolve(&r1, &r2).unwrap();
        assert!(conv.values().iter().all(|v| v.norm() < 1e-14));
    }

    #[test]
    fn convolving_with_one_projects_onto_constants() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let g = FiniteAbelianGroup::new(&[3, 4]).unwrap();
        let f = GroupFunction::from_values(
            &g,
            (0..g.size())
                .map(|_| Complex64::new(rng.gen(), rng.gen()))
                .collect(),
        )
        .unwrap();
        let mean = fourier_forward(&f).values()[0];
        let conv = convolve(&f, &GroupFunction::one(&g)).unwrap();
        for v in conv.values() {
            assert!((v - mean).norm() < 1e-12);
        }
    }

    #[test]
    fn convolution_mismatch_is_an_error() {
        let f = GroupFunction::one(&cantor(2));
        let g = GroupFunction::one(&cantor(3));
        assert!(matches!(convolve(&f, &g), Err(Error::GroupMismatch)));
    }

    #[test]
    fn translation_examples() {
        let g = cantor(2);
        let r1 = GroupFunction::character(&g, 1);
        // y = identity leaves f unchanged
        let same = r1.translate(&[0, 0]).unwrap();
        assert_eq!(same.values(), r1.values());
        // y = (-1, 1) flips the sign of r_1
        let flipped = r1.translate(&[1, 0]).unwrap();
        for (a, b) in flipped.values().iter().zip(r1.values()) {
            assert!((a + b).norm() < 1e-15);
        }
        assert!(r1.translate(&[2, 0]).is_err());
        assert!(r1.translate(&[0]).is_err());
    }

    #[test]
    fn translation_composes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let g = FiniteAbelianGroup::new(&[3, 5]).unwrap();
        let f = GroupFunction::from_values(
            &g,
            (0..g.size())
                .map(|_| Complex64::new(rng.gen(), rng.gen()))
                .collect(),
        )
        .unwrap();
        let y = 4;
        let z = 11;
        let once = f.translate_index(y).translate_index(z);
        let both = f.translate_index(g.add(y, z));
        assert_eq!(once.values(), both.values());
    }

    #[test]
    fn translation_spectrum_identity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let g = FiniteAbelianGroup::new(&[4, 3]).unwrap();
        let f = GroupFunction::from_values(
            &g,
            (0..g.size())
                .map(|_| Complex64::new(rng.gen(), rng.gen()))
                .collect(),
        )
        .unwrap();
        let y = 7;
        let lhs = fourier_forward(&f.translate_index(y));
        let rhs = fourier_forward(&f);
        for (chi, (a, b)) in lhs.values().iter().zip(rhs.values()).enumerate() {
            let want = b * g.char_eval(chi, g.neg(y));
            assert!((a - want).norm() < 1e-12);
        }
        // on a 2-group the inverse is invisible and chi(y) itself multiplies
        let d3 = cantor(3);
        let h = GroupFunction::character(&d3, 5);
        let y = 6;
        let lhs = fourier_forward(&h.translate_index(y));
        let rhs = fourier_forward(&h);
        for (chi, (a, b)) in lhs.values().iter().zip(rhs.values()).enumerate() {
            assert!((a - b * d3.char_eval(chi, y)).norm() < 1e-12);
        }
    }

    #[test]
    fn norms() {
        let g = cantor(2);
        for p in [1.0, 1.5, 2.0, 7.0, f64::INFINITY] {
            assert!((GroupFunction::one(&g).norm(p).unwrap() - 1.0).abs() < 1e-14);
            assert!((GroupFunction::character(&g, 1).norm(p).unwrap() - 1.0).abs() < 1e-14);
        }
        let sum = GroupFunction::character(&g, 1).add(&GroupFunction::character(&g, 2));
        assert!((sum.norm(1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!(matches!(
            GroupFunction::one(&g).norm(0.5),
            Err(Error::InvalidExponent(_))
        ));
        assert!(matches!(
            SpectrumFunction::zero(&g).norm(0.99),
            Err(Error::InvalidExponent(_))
        ));
    }

    #[test]
    fn parseval() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let g = FiniteAbelianGroup::new(&[2, 3, 5]).unwrap();
        let f = GroupFunction::from_values(
            &g,
            (0..g.size())
                .map(|_| Complex64::new(rng.gen(), rng.gen()))
                .collect(),
        )
        .unwrap();
        let lhs = f.norm(2.0).unwrap();
        let rhs = fourier_forward(&f).norm(2.0).unwrap();
        assert!((lhs - rhs).abs() <= 1e-10 * lhs);
    }
}
