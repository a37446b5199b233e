//! Routing a (host, pattern) pair to the procedure that decides it.

use std::fmt;
use std::str::FromStr;

use crate::catalog::{self, PatternClass};
use crate::graph::Graph;
use crate::model::{Answer, Method, Model};
use crate::oracle::{induced_minor_exhaustive, OracleConfig, OracleError};
use crate::solvers::{self, SolveError, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    #[default]
    Auto,
    Oracle,
    Snt,
    HouseBull,
    Split,
    PtFree,
    Gem,
    FullHouse,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Auto,
        Algorithm::Oracle,
        Algorithm::Snt,
        Algorithm::HouseBull,
        Algorithm::Split,
        Algorithm::PtFree,
        Algorithm::Gem,
        Algorithm::FullHouse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Oracle => "oracle",
            Algorithm::Snt => "snt",
            Algorithm::HouseBull => "house-bull",
            Algorithm::Split => "split",
            Algorithm::PtFree => "ptfree",
            Algorithm::Gem => "gem",
            Algorithm::FullHouse => "fullhouse",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub algorithm: Algorithm,
    /// Largest host handed to the exhaustive search.
    pub max_oracle_size: usize,
    /// Largest `t` probed when falling back to the bounded-bag search.
    pub t_probe: usize,
    pub require_witness: bool,
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            algorithm: Algorithm::Auto,
            max_oracle_size: 12,
            t_probe: 8,
            require_witness: false,
            parallel: true,
        }
    }
}

impl Config {
    pub fn solver(&self) -> SolverConfig {
        SolverConfig {
            oracle: OracleConfig {
                max_host_size: self.max_oracle_size,
                parallel: self.parallel,
            },
            require_witness: self.require_witness,
        }
    }
}

/// Whether the error means "no procedure applies" rather than a failure.
pub fn is_unsupported(e: &SolveError) -> bool {
    matches!(
        e,
        SolveError::Unsupported(_) | SolveError::Misclassified(_) | SolveError::Oracle(OracleError::CapExceeded { .. })
    )
}

fn oracle<'p, 'h>(g: &'h Graph, h: &'p Graph, cfg: &Config) -> Result<Answer<'p, 'h>, SolveError> {
    Ok(match induced_minor_exhaustive(g, h, &cfg.solver().oracle)? {
        Some(m) => Answer::yes(m, Method::Oracle),
        None => Answer::no(Method::Oracle),
    })
}

fn gem<'p, 'h>(g: &'h Graph, h: &'p Graph, cfg: &Config) -> Result<Answer<'p, 'h>, SolveError> {
    if !h.is_isomorphic(solvers::gem_pattern()) {
        return Err(SolveError::Misclassified("gem"));
    }
    relabel(solvers::solve_gem(g, &cfg.solver())?, h)
}

fn full_house<'p, 'h>(g: &'h Graph, h: &'p Graph, cfg: &Config) -> Result<Answer<'p, 'h>, SolveError> {
    if !h.is_isomorphic(solvers::full_house_pattern()) {
        return Err(SolveError::Misclassified("full house"));
    }
    relabel(solvers::solve_full_house(g, &cfg.solver())?, h)
}

/// Moves an answer about a catalog pattern onto the user's labelling.
fn relabel<'p, 'h>(a: Answer<'static, 'h>, h: &'p Graph) -> Result<Answer<'p, 'h>, SolveError> {
    Ok(Answer {
        contains: a.contains,
        witness: a.witness.map(|m| solvers::transfer(&m, h)).transpose()?,
        method: a.method,
        certified_without_witness: a.certified_without_witness,
    })
}

fn snt<'p, 'h>(g: &'h Graph, h: &'p Graph) -> Result<Answer<'p, 'h>, SolveError> {
    let u = (0..h.vertex_count())
        .find(|&u| solvers::is_snt_vertex(h, u))
        .ok_or(SolveError::Misclassified("flower or generalized house"))?;
    solvers::solve_snt_single(g, h, u)
}

fn pt_free<'p, 'h>(g: &'h Graph, h: &'p Graph, limit: usize) -> Result<Answer<'p, 'h>, SolveError> {
    match g.pt_free_threshold(limit) {
        Some(t) => solvers::solve_pt_free(g, h, t),
        None => Err(SolveError::Unsupported(format!("host has an induced path on {limit} vertices"))),
    }
}

/// Last resort for patterns without a dedicated procedure.
fn fallback<'p, 'h>(g: &'h Graph, h: &'p Graph, cfg: &Config) -> Result<Answer<'p, 'h>, SolveError> {
    if g.vertex_count() <= cfg.max_oracle_size {
        return oracle(g, h, cfg);
    }
    pt_free(g, h, cfg.t_probe).map_err(|_| {
        SolveError::Unsupported(format!(
            "pattern is outside the tractable families and the host has {} vertices (exhaustive cap {}) and is not P{}-free",
            g.vertex_count(),
            cfg.max_oracle_size,
            cfg.t_probe
        ))
    })
}

/// Decides whether `h` is an induced minor of `g`.
pub fn dispatch<'p, 'h>(g: &'h Graph, h: &'p Graph, cfg: &Config) -> Result<Answer<'p, 'h>, SolveError> {
    if h.vertex_count() > g.vertex_count() {
        return Ok(Answer::no(Method::Trivial));
    }
    if h.vertex_count() == 0 {
        return Ok(Answer::yes(Model::new(h, g, Vec::new())?, Method::Trivial));
    }
    let scfg = cfg.solver();
    match cfg.algorithm {
        Algorithm::Oracle => oracle(g, h, cfg),
        Algorithm::Snt => snt(g, h),
        Algorithm::HouseBull => solvers::solve_house_bull(g, h),
        Algorithm::Split => solvers::solve_complete_split(g, h),
        Algorithm::PtFree => pt_free(g, h, g.vertex_count() + 2),
        Algorithm::Gem => gem(g, h, cfg),
        Algorithm::FullHouse => full_house(g, h, cfg),
        Algorithm::Auto => {
            for class in catalog::classify(h) {
                let res = match class {
                    PatternClass::DisjointPaths => solvers::solve_disjoint_paths(g, h),
                    PatternClass::Clique(_) => solvers::solve_clique(g, h, &scfg),
                    PatternClass::CliquePlusIsolated { .. } => solvers::solve_clique_plus_isolated(g, h, &scfg),
                    PatternClass::Flower { center, .. } => solvers::solve_snt_single(g, h, center),
                    PatternClass::GeneralizedHouse(_) | PatternClass::GeneralizedBull { .. } => solvers::solve_house_bull(g, h),
                    PatternClass::CompleteSplit { k, .. } if k <= 3 => solvers::solve_complete_split(g, h),
                    PatternClass::CompleteSplit { .. } => continue,
                    PatternClass::Gem => gem(g, h, cfg),
                    PatternClass::FullHouse => full_house(g, h, cfg),
                    PatternClass::Unsupported => break,
                };
                match res {
                    Err(SolveError::Oracle(OracleError::CapExceeded { .. })) => break,
                    other => return other,
                }
            }
            fallback(g, h, cfg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    #[test]
    fn routing_examples() {
        let cfg = Config::default();
        let g = Graph::cycle(7);
        for (name, method) in [("house", Method::HouseBull), ("crown", Method::CompleteSplit), ("gem", Method::Gem), ("full_house", Method::FullHouse)] {
            let h = named_graph(name).unwrap();
            assert_eq!(dispatch(&g, &h, &cfg).unwrap().method, method, "{name}");
        }
        let big = Graph::path(30);
        let k23 = named_graph("k23").unwrap();
        assert!(matches!(dispatch(&big, &k23, &cfg), Err(SolveError::Unsupported(_))));
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
    }
}
