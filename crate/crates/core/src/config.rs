/// Environment variable that overrides [`Config::order_bound`].
pub const ORDER_BOUND_ENV: &str = "CHARDEG_ORDER_BOUND";

/// Default seed for the randomized class-function agreement checks.
pub const DEFAULT_SEED: u64 = 0x00c4_a7de_6200_0001;

/// Knobs shared by the enumeration-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest group order for which subgroup enumeration, isomorphism
    /// testing and character tables are attempted.
    pub order_bound: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { order_bound: 512, seed: DEFAULT_SEED }
    }
}

impl Config {
    /// Default config with `CHARDEG_ORDER_BOUND` applied when it parses.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Some(b) = std::env::var(ORDER_BOUND_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            cfg.order_bound = b;
        }
        cfg
    }

    pub(crate) fn check_order(&self, order: usize) -> crate::Result<()> {
        if order > self.order_bound {
            return Err(crate::Error::OrderBoundExceeded { order, bound: self.order_bound });
        }
        Ok(())
    }
}
