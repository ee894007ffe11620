//! Resource guards for the exponential-in-the-small oracles.
//!
//! Every guard fails loudly instead of degrading silently. The
//! `MULTILIN_GUARD_SCALE` environment variable scales all caps.

/// Caps for the desk-scale oracles and constructions.
#[derive(Debug, Clone)]
pub struct Guards {
    /// Max node count for enumerating all 2^|V| lifted binary points.
    pub enum_nodes: usize,
    /// Max node count for an explicit multilinear polytope hull.
    pub hull_nodes: usize,
    /// Max ambient dimension for vertex enumeration / convex hull.
    pub hull_dim: usize,
    /// Max input point count for convex hull.
    pub hull_points: usize,
    /// Max hypergraph rank for flower enumeration and separation.
    pub rank_cap: usize,
    /// Max tree-decomposition width accepted by the junction construction.
    pub width_cap: usize,
    /// Max ground-set size of a single complete block (2^|f| lambda vars).
    pub block_cap: usize,
    /// Max chain top |f| for a chain block hull.
    pub chain_cap: usize,
}

impl Default for Guards {
    fn default() -> Self {
        let base = Guards {
            enum_nodes: 25,
            hull_nodes: 12,
            hull_dim: 24,
            hull_points: 4096,
            rank_cap: 8,
            width_cap: 8,
            block_cap: 12,
            chain_cap: 10,
        };
        match std::env::var("MULTILIN_GUARD_SCALE")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
        {
            Some(scale) if scale > 0.0 && scale != 1.0 => base.scaled(scale),
            _ => base,
        }
    }
}

impl Guards {
    fn scaled(&self, s: f64) -> Guards {
        let f = |v: usize| ((v as f64 * s).floor() as usize).max(1);
        Guards {
            enum_nodes: f(self.enum_nodes),
            hull_nodes: f(self.hull_nodes),
            hull_dim: f(self.hull_dim),
            hull_points: f(self.hull_points),
            rank_cap: f(self.rank_cap),
            width_cap: f(self.width_cap),
            block_cap: f(self.block_cap),
            chain_cap: f(self.chain_cap),
        }
    }

    /// Override the rank cap (CLI `--rank-cap`).
    pub fn with_rank_cap(mut self, cap: usize) -> Self {
        self.rank_cap = cap;
        self
    }
}

/// A resource guard was exceeded; the offending quantity is reported.
#[derive(Debug, Clone, thiserror::Error)]
#[error("resource guard exceeded: {what} = {actual} > {limit}")]
pub struct GuardError {
    pub what: &'static str,
    pub actual: usize,
    pub limit: usize,
}

pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<(), GuardError> {
    if actual > limit {
        Err(GuardError { what, actual, limit })
    } else {
        Ok(())
    }
}
