//! A numerical laboratory for convolution-algebra centralizers on finite
//! abelian groups.
//!
//! The crate builds finite truncations of the classical setting: groups are
//! finite products of cyclic groups with fast transforms to their duals,
//! Kalton-Peck maps act on the spectral side and conjugate to translation-
//! friendly maps on the group side, and Riesz products over dissociate
//! character sets witness that those maps stay far from every linear map.
//! Around this core sit the twisted-sum quasinorm and module action, the
//! Cantor-group localization and embedding toolkit, a block construction of
//! a nontrivial map between sequence-space sums, and samplers plus report
//! types for the command-line experiments.

pub mod blocks;
pub mod cantor;
pub mod centralizer;
pub mod error;
pub mod function;
pub mod group;
pub mod io;
pub mod oracle;
pub mod profile;
pub mod riesz;
pub mod sampler;
pub mod suite;
mod transform;
pub mod twisted;

pub use error::{Error, Result};
pub use function::{
    convolve, fourier_forward, fourier_inverse, GroupFunction, SpectrumFunction, Vector,
};
pub use group::{is_dissociate, FiniteAbelianGroup};
pub use profile::LipschitzProfile;
