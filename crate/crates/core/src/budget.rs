use crate::error::{Error, Result};

/// Environment variable overriding [`Budget::max_kl_length`].
pub const BUDGET_ENV: &str = "HECKEKIT_BUDGET";

/// Resource caps. Requests beyond them are refused with
/// [`Error::Budget`], never silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Longest element for which Kazhdan-Lusztig data (and therefore the
    /// quotient realization of the anti-spherical module) is computed.
    pub max_kl_length: u32,
    /// Maximal number of group elements produced by one enumeration.
    pub max_elements: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_kl_length: 10,
            max_elements: 2_000_000,
        }
    }
}

impl Budget {
    /// Default budget, with `max_kl_length` taken from `HECKEKIT_BUDGET` when
    /// that variable holds a non-negative integer.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            b.max_kl_length = v
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("{BUDGET_ENV} must be a non-negative integer, got `{v}`")))?;
        }
        Ok(b)
    }

    pub(crate) fn check_kl(&self, length: u32) -> Result<()> {
        if length > self.max_kl_length {
            return Err(Error::Budget {
                what: "Kazhdan-Lusztig element length",
                limit: self.max_kl_length as usize,
                requested: length as usize,
            });
        }
        Ok(())
    }
}
