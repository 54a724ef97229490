use super::Format;
use crate::cycles::DEFAULT_CYCLE_CAP;
use crate::error::{Error, Result};
use crate::graph::{build_petersen, Graph};
use crate::symmetry::SUPPORTED_N;

/// Largest half-parameter the conjecture scan accepts by default.
pub const DEFAULT_CONJECTURE_BUDGET: usize = 5;
/// Budget unlocked by `--long`.
pub const LONG_CONJECTURE_BUDGET: usize = 6;

/// Options shared by every subcommand. `n` is the half-parameter: the graph
/// is P(2n+1, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub k: usize,
    pub format: Format,
    pub jobs: Option<usize>,
    pub cycle_cap: usize,
    pub conjecture_budget: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 1,
            k: 1,
            format: Format::Md,
            jobs: None,
            cycle_cap: DEFAULT_CYCLE_CAP,
            conjecture_budget: DEFAULT_CONJECTURE_BUDGET,
        }
    }
}

impl RunConfig {
    pub fn with_n(n: usize) -> Self {
        RunConfig { n, ..RunConfig::default() }
    }

    pub fn petersen_n(&self) -> usize {
        2 * self.n + 1
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if 3 * self.petersen_n() > 64 {
            return bad(format!("P({},{}) exceeds the 64-edge limit", self.petersen_n(), self.k));
        }
        if self.k == 0 || 2 * self.k >= self.petersen_n() {
            return bad(format!("k must satisfy 1 <= k < {}/2", self.petersen_n()));
        }
        if self.jobs == Some(0) {
            return bad("jobs must be at least 1".into());
        }
        if self.cycle_cap == 0 {
            return bad("cycle cap must be at least 1".into());
        }
        if self.conjecture_budget == 0 || 2 * self.conjecture_budget + 1 > SUPPORTED_N.1 {
            return bad(format!("conjecture budget must lie in 1..={}", SUPPORTED_N.1 / 2));
        }
        Ok(())
    }

    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        build_petersen(self.petersen_n(), self.k)
    }

    /// Refuses anything but the prisms P(2n+1,1).
    pub fn require_prism(&self) -> Result<()> {
        if self.k != 1 {
            return Err(Error::Unsupported(format!(
                "this command covers P(2n+1,1) only, got k = {}",
                self.k
            )));
        }
        Ok(())
    }

    /// Thread pool sized by `jobs`, or rayon's default.
    pub fn thread_pool(&self) -> Result<rayon::ThreadPool> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(jobs) = self.jobs {
            builder = builder.num_threads(jobs);
        }
        builder.build().map_err(|e| Error::Internal(e.to_string()))
    }
}
