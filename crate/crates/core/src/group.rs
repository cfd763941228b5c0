//! Finite abelian groups as products of cyclic groups, with character
//! enumeration and dissociateness testing.
//!
//! A group with orders `(m_1, ..., m_r)` has elements indexed by mixed-radix
//! integers, little-endian: coordinate 1 varies fastest. The group is
//! self-dual and characters are indexed the same way; the character `a`
//! evaluated at the element `x` is `exp(2 pi i sum_j a_j x_j / m_j)`. When
//! every order is 2 the index bitmask is the Walsh set: character `a` is the
//! product of the Rademacher functions `r_k` over the bits of `a`.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest set size accepted by [`is_dissociate`].
pub const DISSOCIATE_LIMIT: usize = 16;

/// A finite product of cyclic groups `Z_{m_1} x ... x Z_{m_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
}

impl FiniteAbelianGroup {
    /// Builds the group from its cyclic orders. An empty list yields the
    /// trivial group of size 1.
    pub fn new(orders: &[u32]) -> Result<Self> {
        let mut strides = Vec::with_capacity(orders.len());
        let mut size: usize = 1;
        for &m in orders {
            if m == 0 {
                return Err(Error::ZeroOrder);
            }
            strides.push(size);
            size = size.checked_mul(m as usize).ok_or(Error::SizeOverflow)?;
        }
        // Guard against sizes that cannot back a dense complex array.
        if size > (isize::MAX as usize) / std::mem::size_of::<Complex64>() {
            return Err(Error::SizeOverflow);
        }
        Ok(Self {
            orders: orders.to_vec(),
            strides,
            size,
        })
    }

    /// The Cantor group truncation `Delta_n = {-1,1}^n`.
    pub fn cantor(n: usize) -> Result<Self> {
        Self::new(&vec![2; n])
    }

    /// The cyclic group `Z_m`.
    pub fn cyclic(m: u32) -> Result<Self> {
        Self::new(&[m])
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// True when every order equals 2, i.e. the group is some `Delta_n`.
    pub fn is_two_group(&self) -> bool {
        self.orders.iter().all(|&m| m == 2)
    }

    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    /// Mixed-radix digits of an element or character index.
    pub fn tuple_of(&self, index: usize) -> Vec<u32> {
        debug_assert!(index < self.size);
        let mut t = Vec::with_capacity(self.rank());
        let mut rest = index;
        for &m in &self.orders {
            t.push((rest % m as usize) as u32);
            rest /= m as usize;
        }
        t
    }

    /// Index of an element tuple, validating each coordinate.
    pub fn index_of(&self, tuple: &[u32]) -> Result<usize> {
        if tuple.len() != self.rank() {
            return Err(Error::InvalidElement);
        }
        let mut idx = 0usize;
        for (j, (&c, &m)) in tuple.iter().zip(&self.orders).enumerate() {
            if c >= m {
                return Err(Error::InvalidElement);
            }
            idx += c as usize * self.strides[j];
        }
        Ok(idx)
    }

    /// Index of the identity element (and of the trivial character).
    pub fn identity(&self) -> usize {
        0
    }

    /// Componentwise sum of two indices (the group law, written additively).
    pub fn add(&self, x: usize, y: usize) -> usize {
        let mut out = 0usize;
        for (j, &m) in self.orders.iter().enumerate() {
            let m = m as usize;
            let a = x / self.strides[j] % m;
            let b = y / self.strides[j] % m;
            out += (a + b) % m * self.strides[j];
        }
        out
    }

    /// Componentwise negation of an index.
    pub fn neg(&self, x: usize) -> usize {
        let mut out = 0usize;
        for (j, &m) in self.orders.iter().enumerate() {
            let m = m as usize;
            let a = x / self.strides[j] % m;
            out += (m - a) % m * self.strides[j];
        }
        out
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `n`-fold multiple of an index, `n` possibly negative.
    pub fn mul_scalar(&self, x: usize, n: i64) -> usize {
        let mut out = 0usize;
        for (j, &m) in self.orders.iter().enumerate() {
            let m = m as i64;
            let a = (x / self.strides[j]) as i64 % m;
            let c = (a * n).rem_euclid(m);
            out += c as usize * self.strides[j];
        }
        out
    }

    /// Value of the character with index `chi` at the element with index `x`.
    pub fn char_eval(&self, chi: usize, x: usize) -> Complex64 {
        if self.is_two_group() {
            // Walsh function: parity of the shared bits.
            if (chi & x).count_ones().is_multiple_of(2) {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(-1.0, 0.0)
            }
        } else {
            let mut angle = 0.0f64;
            for (j, &m) in self.orders.iter().enumerate() {
                let m = m as u64;
                let a = (chi / self.strides[j]) as u64 % m;
                let c = (x / self.strides[j]) as u64 % m;
                angle += (a * c % m) as f64 / m as f64;
            }
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * angle)
        }
    }

    /// Multiplicative order of a character (or element) index.
    pub fn char_order(&self, chi: usize) -> u64 {
        let mut ord = 1u64;
        for (j, &m) in self.orders.iter().enumerate() {
            let m = m as u64;
            let a = (chi / self.strides[j]) as u64 % m;
            let o = m / gcd(m, a);
            ord = lcm(ord, o);
        }
        ord
    }

    /// Index of the Rademacher character `r_k` (coordinate `k`, 0-based) on a
    /// group whose `k`-th order is 2.
    pub fn rademacher(&self, k: usize) -> usize {
        assert!(k < self.rank() && self.orders[k] == 2);
        self.strides[k]
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Tests whether a character set admits no multiplicative relation with
/// exponents in `{0, +-1, +-2}` beyond the forced trivial ones. The trivial
/// character never belongs to a dissociate set.
///
/// The search is exhaustive over all `5^k` exponent assignments; sets with
/// more than [`DISSOCIATE_LIMIT`] characters are rejected, and sets of more
/// than 10 run through a meet-in-the-middle split of the same search space.
pub fn is_dissociate(sigma: &[usize], group: &FiniteAbelianGroup) -> Result<bool> {
    let k = sigma.len();
    if k > DISSOCIATE_LIMIT {
        return Err(Error::DissociateSetTooLarge {
            got: k,
            limit: DISSOCIATE_LIMIT,
        });
    }
    let mut seen = sigma.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != k {
        return Err(Error::DuplicateCharacters);
    }
    if sigma.iter().any(|&g| g == group.identity()) {
        return Ok(false);
    }
    if k <= 10 {
        Ok(!violation_exhaustive(sigma, group))
    } else {
        Ok(!violation_split(sigma, group))
    }
}

const EXPONENTS: [i64; 5] = [0, 1, -1, 2, -2];

/// Walks all 5^k assignments of exponents and reports whether some product of
/// nontrivial factors collapses to the trivial character.
fn violation_exhaustive(sigma: &[usize], group: &FiniteAbelianGroup) -> bool {
    let k = sigma.len();
    let mut digits = vec![0usize; k];
    loop {
        let mut prod = group.identity();
        let mut nontrivial = false;
        for (j, &d) in digits.iter().enumerate() {
            let term = group.mul_scalar(sigma[j], EXPONENTS[d]);
            if term != group.identity() {
                nontrivial = true;
            }
            prod = group.add(prod, term);
        }
        if prod == group.identity() && nontrivial {
            return true;
        }
        // advance base-5 counter
        let mut j = 0;
        loop {
            if j == k {
                return false;
            }
            digits[j] += 1;
            if digits[j] < EXPONENTS.len() {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}

/// Same 5^k search organized as a meet-in-the-middle over the two halves of
/// the set, for sizes where the flat walk would be too slow.
fn violation_split(sigma: &[usize], group: &FiniteAbelianGroup) -> bool {
    let half = sigma.len() / 2;
    let left = enumerate_half(&sigma[..half], group);
    let k = sigma.len() - half;
    let mut digits = vec![0usize; k];
    loop {
        let mut prod = group.identity();
        let mut nontrivial = false;
        for (j, &d) in digits.iter().enumerate() {
            let term = group.mul_scalar(sigma[half + j], EXPONENTS[d]);
            if term != group.identity() {
                nontrivial = true;
            }
            prod = group.add(prod, term);
        }
        if let Some(&(any, left_nontrivial)) = left.get(&group.neg(prod)) {
            if (any && nontrivial) || left_nontrivial {
                return true;
            }
        }
        let mut j = 0;
        loop {
            if j == k {
                return false;
            }
            digits[j] += 1;
            if digits[j] < EXPONENTS.len() {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}

/// Maps each reachable product of one half to (reachable at all, reachable
/// with at least one nontrivial factor).
fn enumerate_half(sigma: &[usize], group: &FiniteAbelianGroup) -> HashMap<usize, (bool, bool)> {
    let k = sigma.len();
    let mut map: HashMap<usize, (bool, bool)> = HashMap::new();
    let mut digits = vec![0usize; k];
    loop {
        let mut prod = group.identity();
        let mut nontrivial = false;
        for (j, &d) in digits.iter().enumerate() {
            let term = group.mul_scalar(sigma[j], EXPONENTS[d]);
            if term != group.identity() {
                nontrivial = true;
            }
            prod = group.add(prod, term);
        }
        let e = map.entry(prod).or_insert((false, false));
        e.0 = true;
        e.1 |= nontrivial;
        let mut j = 0;
        loop {
            if j == k {
                return map;
            }
            digits[j] += 1;
            if digits[j] < EXPONENTS.len() {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}
