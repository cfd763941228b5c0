//! Scalar Lipschitz profiles `phi` with `phi(0) = 0`.
//!
//! The built-in family covers the identity, `log(1+t)` and the concave
//! powers; all extend from `[0, infinity)` to the whole line by oddness.
//! The power profile is linear on `[-1, 1]` so that its Lipschitz constant
//! stays 1 (the raw power has an unbounded slope at 0).

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum ProfileKind {
    Identity,
    Log1p,
    /// `t` on `[-1, 1]`, `sign(t) |t|^alpha` outside, `alpha` in (0, 1].
    Power(f64),
    /// Piecewise-linear interpolation of sorted `(t, phi(t))` points,
    /// extrapolated with the boundary slopes.
    Table(Vec<(f64, f64)>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LipschitzProfile {
    kind: ProfileKind,
    lipschitz: f64,
}

impl LipschitzProfile {
    pub fn identity() -> Self {
        Self {
            kind: ProfileKind::Identity,
            lipschitz: 1.0,
        }
    }

    pub fn log1p() -> Self {
        Self {
            kind: ProfileKind::Log1p,
            lipschitz: 1.0,
        }
    }

    pub fn power(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidProfile(format!(
                "power exponent must lie in (0, 1], got {alpha}"
            )));
        }
        Ok(Self {
            kind: ProfileKind::Power(alpha),
            lipschitz: 1.0,
        })
    }

    /// Piecewise-linear profile through the given points; must interpolate to
    /// 0 at 0.
    pub fn table(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidProfile(
                "table needs at least two points".into(),
            ));
        }
        let mut pts = points;
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        if pts.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidProfile(
                "table abscissae must be distinct".into(),
            ));
        }
        let lipschitz = pts
            .windows(2)
            .map(|w| ((w[1].1 - w[0].1) / (w[1].0 - w[0].0)).abs())
            .fold(0.0, f64::max);
        let p = Self {
            kind: ProfileKind::Table(pts),
            lipschitz,
        };
        if p.eval(0.0).abs() > 1e-15 {
            return Err(Error::InvalidProfile("table must vanish at 0".into()));
        }
        Ok(p)
    }

    /// Parses the CLI spellings `id`, `log1p`, `pow:<alpha>`.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "id" => Ok(Self::identity()),
            "log1p" => Ok(Self::log1p()),
            _ => {
                if let Some(rest) = name.strip_prefix("pow:") {
                    let alpha: f64 = rest
                        .parse()
                        .map_err(|_| Error::InvalidProfile(format!("bad exponent in {name:?}")))?;
                    Self::power(alpha)
                } else {
                    Err(Error::InvalidProfile(format!(
                        "unknown profile {name:?} (expected id, log1p or pow:<alpha>)"
                    )))
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match &self.kind {
            ProfileKind::Identity => "id".into(),
            ProfileKind::Log1p => "log1p".into(),
            ProfileKind::Power(a) => format!("pow:{a}"),
            ProfileKind::Table(_) => "table".into(),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.kind, ProfileKind::Identity)
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    pub fn eval(&self, s: f64) -> f64 {
        match &self.kind {
            ProfileKind::Identity => s,
            ProfileKind::Log1p => s.signum() * s.abs().ln_1p(),
            ProfileKind::Power(alpha) => {
                if s.abs() <= 1.0 {
                    s
                } else {
                    s.signum() * s.abs().powf(*alpha)
                }
            }
            ProfileKind::Table(pts) => {
                let seg = match pts.iter().position(|&(t, _)| t > s) {
                    Some(0) => &pts[0..2],
                    Some(i) => &pts[i - 1..=i],
                    None => &pts[pts.len() - 2..],
                };
                let (t0, v0) = seg[0];
                let (t1, v1) = seg[1];
                v0 + (s - t0) * (v1 - v0) / (t1 - t0)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spot_check_lipschitz(p: &LipschitzProfile) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..2000 {
            let s = 40.0 * (rng.gen::<f64>() - 0.5);
            let t = 40.0 * (rng.gen::<f64>() - 0.5);
            let lhs = (p.eval(s) - p.eval(t)).abs();
            assert!(lhs <= p.lipschitz() * (s - t).abs() + 1e-9);
        }
        assert_eq!(p.eval(0.0), 0.0);
    }

    #[test]
    fn builtin_profiles_are_lipschitz_and_vanish_at_zero() {
        spot_check_lipschitz(&LipschitzProfile::identity());
        spot_check_lipschitz(&LipschitzProfile::log1p());
        spot_check_lipschitz(&LipschitzProfile::power(0.5).unwrap());
        spot_check_lipschitz(
            &LipschitzProfile::table(vec![(-2.0, -0.5), (0.0, 0.0), (1.0, 0.7), (3.0, 1.0)])
                .unwrap(),
        );
    }

    #[test]
    fn profiles_are_odd() {
        for p in [
            LipschitzProfile::identity(),
            LipschitzProfile::log1p(),
            LipschitzProfile::power(0.3).unwrap(),
        ] {
            for s in [0.1, 0.9, 1.5, 10.0] {
                assert!((p.eval(-s) + p.eval(s)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn parse_names() {
        assert!(LipschitzProfile::parse("id").unwrap().is_identity());
        assert_eq!(LipschitzProfile::parse("log1p").unwrap().name(), "log1p");
        assert_eq!(
            LipschitzProfile::parse("pow:0.5").unwrap().name(),
            "pow:0.5"
        );
        assert!(LipschitzProfile::parse("cosh").is_err());
        assert!(LipschitzProfile::parse("pow:1.5").is_err());
    }

    #[test]
    fn table_validation() {
        assert!(LipschitzProfile::table(vec![(0.0, 0.0)]).is_err());
        assert!(LipschitzProfile::table(vec![(-1.0, 0.3), (1.0, 0.5)]).is_err());
        let zero = LipschitzProfile::table(vec![(0.0, 0.0), (1.0, 0.0)]).unwrap();
        assert_eq!(zero.eval(17.0), 0.0);
        assert_eq!(zero.lipschitz(), 0.0);
    }
}
