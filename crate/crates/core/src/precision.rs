use crate::error::{Error, Result};

/// Environment variable that overrides [`PrecisionPolicy::max_digits`].
pub const MAX_DIGITS_ENV: &str = "MAGLAP_MAX_DIGITS";

/// Working-precision schedule for series evaluation.
///
/// Near a root the alternating head of the Kummer series loses roughly
/// `0.434 z` decimal digits, so the working precision grows linearly in `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionPolicy {
    pub base_digits: u32,
    pub slope: f64,
    pub max_digits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            base_digits: 30,
            slope: 0.45,
            max_digits: 220,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(base_digits: u32, slope: f64, max_digits: u32) -> Result<Self> {
        if base_digits == 0 || max_digits == 0 || !(slope >= 0.0) || base_digits > max_digits {
            return Err(Error::InvalidParam(format!(
                "precision policy base={base_digits} slope={slope} max={max_digits}"
            )));
        }
        Ok(PrecisionPolicy {
            base_digits,
            slope,
            max_digits,
        })
    }

    /// Default policy with `max_digits` taken from `MAGLAP_MAX_DIGITS` when set.
    pub fn from_env() -> Result<Self> {
        let mut policy = Self::default();
        if let Ok(raw) = std::env::var(MAX_DIGITS_ENV) {
            let max: u32 = raw.trim().parse().map_err(|_| {
                Error::InvalidParam(format!("{MAX_DIGITS_ENV}={raw:?} is not a digit count"))
            })?;
            policy = Self::new(policy.base_digits.min(max), policy.slope, max)?;
        }
        Ok(policy)
    }

    /// `max(base, ceil(slope * z) + base / 2)`.
    pub fn working_digits(&self, z: f64) -> u32 {
        let scaled = (self.slope * z.abs()).ceil() as u32 + self.base_digits / 2;
        self.base_digits.max(scaled)
    }

    /// Working digits for `z`, or `PrecisionExceeded` when they exceed the cap.
    pub fn admit(&self, z: f64) -> Result<u32> {
        let d = self.working_digits(z);
        if d > self.max_digits {
            return Err(Error::PrecisionExceeded {
                max_digits: self.max_digits,
                context: format!("z = {z} needs {d} working digits"),
            });
        }
        Ok(d)
    }

    /// Escalation ladder starting at the working precision for `z`.
    pub(crate) fn ladder(&self, z: f64) -> Result<Vec<u32>> {
        let mut d = self.admit(z)?;
        let mut steps = vec![d];
        while d < self.max_digits {
            d = (d * 2).min(self.max_digits);
            steps.push(d);
        }
        Ok(steps)
    }
}
