//! Run parameters and the guarded truncation protocol.

use serde::{Deserialize, Serialize};

use crate::arith::DEFAULT_PRIME;
use crate::error::{Error, Result};

pub const DEFAULT_CAP: u32 = 7;
pub const DEFAULT_MAX_CAP: u32 = 10;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 50;
/// Truncation of the polynomial ring parsed instances live in. Independent
/// of the module cap so that determinant orders stay visible.
pub const RING_CAP: u32 = 32;
/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "GRADEDEPTH_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub p: u32,
    pub cap: u32,
    pub max_cap: u32,
    pub seed: u64,
    /// Last graded degree used for h-polynomials; `None` means `cap - 1`.
    pub window: Option<u32>,
    pub max_trials: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            p: DEFAULT_PRIME,
            cap: DEFAULT_CAP,
            max_cap: DEFAULT_MAX_CAP,
            seed: default_seed(),
            window: None,
            max_trials: DEFAULT_TRIALS,
        }
    }
}

/// `GRADEDEPTH_SEED` if set to an integer, else 42.
pub fn default_seed() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

impl Config {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.cap = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.cap < 4 {
            return Err(Error::validation(format!("cap {} is below the minimum 4", self.cap)));
        }
        if self.max_cap <= self.cap {
            return Err(Error::validation(format!(
                "max cap {} must exceed cap {}",
                self.max_cap, self.cap
            )));
        }
        if self.max_cap >= RING_CAP {
            return Err(Error::validation(format!("max cap must stay below {RING_CAP}")));
        }
        if let Some(w) = self.window {
            if w < 2 || w + 1 > self.cap {
                return Err(Error::validation(format!(
                    "window {w} must lie between 2 and cap - 1 = {}",
                    self.cap - 1
                )));
            }
        }
        if self.max_trials == 0 {
            return Err(Error::validation("max trials must be positive"));
        }
        crate::arith::PrimeField::new(self.p).map(|_| ())
    }

    /// Window for a given cap: the configured one, shifted along with cap
    /// escalation.
    pub fn window_at(&self, cap: u32) -> Option<u32> {
        self.window.map(|w| w + cap - self.cap)
    }
}

/// A value confirmed at two consecutive caps.
#[derive(Debug, Clone, PartialEq)]
pub struct Guarded<T> {
    pub value: T,
    pub cap: u32,
    pub escalations: u32,
}

/// Run `compute` at `cap` and `cap + 1` and accept when `key` agrees;
/// otherwise (or on a cap-related error) raise the cap, up to `max_cap`.
pub fn guarded<T, K: PartialEq>(
    config: &Config,
    mut compute: impl FnMut(u32) -> Result<T>,
    key: impl Fn(&T) -> K,
) -> Result<Guarded<T>> {
    let mut cap = config.cap;
    let mut current = compute(cap);
    let mut last_problem = String::new();
    while cap < config.max_cap {
        let next = compute(cap + 1);
        match (&current, &next) {
            (Ok(a), Ok(b)) if key(a) == key(b) => {
                return Ok(Guarded {
                    value: current.unwrap(),
                    cap,
                    escalations: cap - config.cap,
                })
            }
            (Ok(_), Ok(_)) => last_problem = format!("results differ between caps {cap} and {}", cap + 1),
            (Err(e), _) | (_, Err(e)) if e.is_cap_related() => last_problem = e.to_string(),
            (Err(_), _) => return Err(current.err().unwrap()),
            (_, Err(_)) => return Err(next.err().unwrap()),
        }
        cap += 1;
        current = next;
    }
    Err(Error::cap(format!(
        "no stable result up to max cap {}: {last_problem}",
        config.max_cap
    )))
}
