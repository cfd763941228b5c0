//! Fast transforms between a group and its dual.
//!
//! Groups with all orders 2 go through an in-place fast Walsh-Hadamard
//! butterfly whose indices are the Walsh sets themselves. Everything else is
//! handled axis by axis: each cyclic factor gets a 1-D DFT along its stride,
//! picked among a radix-2 butterfly (power-of-two lengths), a direct O(m^2)
//! line (short lengths) and Bluestein's chirp-z reduction (long lengths).
//!
//! Conventions: the forward transform computes
//! `fhat(a) = (1/|G|) sum_x f(x) conj(chi_a(x))` and the inverse computes
//! `f(x) = sum_a c(a) chi_a(x)`, so forward . inverse = id exactly in exact
//! arithmetic.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::group::FiniteAbelianGroup;

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Forward => -1.0,
            Direction::Inverse => 1.0,
        }
    }
}

/// Applies the unnormalized transform in place; the caller divides by the
/// group size on the forward pass.
pub(crate) fn transform_in_place(
    values: &mut [Complex64],
    group: &FiniteAbelianGroup,
    dir: Direction,
) {
    debug_assert_eq!(values.len(), group.size());
    if group.is_two_group() {
        fwht_in_place(values);
        return;
    }
    let mut line = Vec::new();
    for (axis, &m) in group.orders().iter().enumerate() {
        let m = m as usize;
        if m == 1 {
            continue;
        }
        let plan = LinePlan::new(m, dir);
        let stride = group.strides()[axis];
        let block = stride * m;
        line.resize(m, Complex64::default());
        for chunk in (0..group.size()).step_by(block) {
            for offset in chunk..chunk + stride {
                for (k, slot) in line.iter_mut().enumerate() {
                    *slot = values[offset + k * stride];
                }
                plan.apply(&mut line);
                for (k, slot) in line.iter().enumerate() {
                    values[offset + k * stride] = *slot;
                }
            }
        }
    }
}

/// In-place Walsh-Hadamard butterfly; self-inverse up to the factor `n`.
pub(crate) fn fwht_in_place(values: &mut [Complex64]) {
    let n = values.len();
    debug_assert!(n.is_power_of_two() || n == 1);
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let x = values[i];
                let y = values[i + h];
                values[i] = x + y;
                values[i + h] = x - y;
            }
        }
        h *= 2;
    }
}

const NAIVE_LINE_LIMIT: usize = 64;

enum LinePlan {
    Naive {
        roots: Vec<Complex64>,
    },
    Radix2 {
        roots: Vec<Complex64>,
    },
    Bluestein {
        m: usize,
        len: usize,
        chirp: Vec<Complex64>,
        kernel_fft: Vec<Complex64>,
        scratch_len_roots: Vec<Complex64>,
    },
}

impl LinePlan {
    fn new(m: usize, dir: Direction) -> Self {
        let sign = dir.sign();
        if m.is_power_of_two() {
            let roots = (0..m / 2)
                .map(|k| Complex64::from_polar(1.0, sign * 2.0 * PI * k as f64 / m as f64))
                .collect();
            LinePlan::Radix2 { roots }
        } else if m <= NAIVE_LINE_LIMIT {
            let roots = (0..m)
                .map(|k| Complex64::from_polar(1.0, sign * 2.0 * PI * k as f64 / m as f64))
                .collect();
            LinePlan::Naive { roots }
        } else {
            let len = (2 * m - 1).next_power_of_two();
            // chirp[n] = exp(sign * pi i n^2 / m), with n^2 reduced mod 2m
            let chirp: Vec<Complex64> = (0..m)
                .map(|n| {
                    let sq = ((n as u128 * n as u128) % (2 * m as u128)) as f64;
                    Complex64::from_polar(1.0, sign * PI * sq / m as f64)
                })
                .collect();
            let half_roots: Vec<Complex64> = (0..len / 2)
                .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / len as f64))
                .collect();
            let mut kernel = vec![Complex64::default(); len];
            kernel[0] = chirp[0].conj();
            for n in 1..m {
                let v = chirp[n].conj();
                kernel[n] = v;
                kernel[len - n] = v;
            }
            fft_pow2(&mut kernel, &half_roots);
            LinePlan::Bluestein {
                m,
                len,
                chirp,
                kernel_fft: kernel,
                scratch_len_roots: half_roots,
            }
        }
    }

    fn apply(&self, line: &mut [Complex64]) {
        match self {
            LinePlan::Naive { roots } => {
                let m = line.len();
                let mut out = vec![Complex64::default(); m];
                for (k, slot) in out.iter_mut().enumerate() {
                    let mut acc = Complex64::default();
                    for (n, &v) in line.iter().enumerate() {
                        acc += v * roots[n * k % m];
                    }
                    *slot = acc;
                }
                line.copy_from_slice(&out);
            }
            LinePlan::Radix2 { roots } => fft_pow2(line, roots),
            LinePlan::Bluestein {
                m,
                len,
                chirp,
                kernel_fft,
                scratch_len_roots,
            } => {
                let mut buf = vec![Complex64::default(); *len];
                for n in 0..*m {
                    buf[n] = line[n] * chirp[n];
                }
                fft_pow2(&mut buf, scratch_len_roots);
                for (b, k) in buf.iter_mut().zip(kernel_fft) {
                    *b *= k;
                }
                // inverse FFT of length `len` via conjugation
                for b in buf.iter_mut() {
                    *b = b.conj();
                }
                fft_pow2(&mut buf, scratch_len_roots);
                let scale = 1.0 / *len as f64;
                for (k, slot) in line.iter_mut().enumerate() {
                    *slot = buf[k].conj() * scale * chirp[k];
                }
            }
        }
    }
}

/// Iterative radix-2 DIT with precomputed half-length twiddles
/// `roots[k] = exp(sign * 2 pi i k / n)`.
fn fft_pow2(values: &mut [Complex64], roots: &[Complex64]) {
    let n = values.len();
    debug_assert!(n.is_power_of_two());
    debug_assert_eq!(roots.len(), n / 2);
    // bit-reversal permutation
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            values.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let step = n / len;
        for start in (0..n).step_by(len) {
            for i in 0..half {
                let w = roots[i * step];
                let u = values[start + i];
                let v = values[start + i + half] * w;
                values[start + i] = u + v;
                values[start + i + half] = u - v;
            }
        }
        len *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_line(input: &[Complex64], sign: f64) -> Vec<Complex64> {
        let m = input.len();
        (0..m)
            .map(|k| {
                let mut acc = Complex64::default();
                for (n, &v) in input.iter().enumerate() {
                    let ang = sign * 2.0 * PI * (n * k % m) as f64 / m as f64;
                    acc += v * Complex64::from_polar(1.0, ang);
                }
                acc
            })
            .collect()
    }

    #[test]
    fn line_plans_match_naive_dft() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for &m in &[2usize, 3, 5, 8, 16, 63, 65, 100, 729] {
            let input: Vec<Complex64> = (0..m)
                .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                .collect();
            for dir in [Direction::Forward, Direction::Inverse] {
                let plan = LinePlan::new(m, dir);
                let mut got = input.clone();
                plan.apply(&mut got);
                let want = naive_line(&input, dir.sign());
                let scale: f64 = want.iter().map(|v| v.norm()).sum::<f64>().max(1.0);
                for (g, w) in got.iter().zip(&want) {
                    assert!((g - w).norm() < 1e-10 * scale, "m={m} mismatch {g} vs {w}");
                }
            }
        }
    }

    #[test]
    fn fwht_is_self_inverse_up_to_n() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let n = 64;
        let input: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen(), rng.gen()))
            .collect();
        let mut v = input.clone();
        fwht_in_place(&mut v);
        fwht_in_place(&mut v);
        for (a, b) in v.iter().zip(&input) {
            assert!((a / n as f64 - b).norm() < 1e-12);
        }
    }
}
