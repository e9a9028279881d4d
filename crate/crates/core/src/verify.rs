//! Randomized property suites, one per corona result, with reproducible
//! counterexample dumps.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::experiments::{corona_distinct_count, few_distinct_construct, two_eigenvalue_seeds, Companion};
use crate::generate::{
    random_connected, random_graph_upto, random_net_regular, random_net_regular_nonzero, random_rational,
    random_regular, random_switch_set, seeded,
};
use crate::graph::{catalog, format_graph, s_neighbourhood_corona, Sign, SignedGraph};
use crate::linalg::{det_exact_at, spectra_distance, DEFAULT_CLUSTER_TOL};
use crate::spectra::{
    closed_form_adjacency, closed_form_adjacency_kpq, closed_form_laplacian, closed_form_netlaplacian,
    corona_adjacency_charpoly_eval, matrix_of, numeric_spectrum_with_tol, realize_with_tol, ClosedFormSpectrum,
    MatrixKind, SpectraError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "2.2")]
    Factorization,
    #[serde(rename = "2.3")]
    AdjacencyNetRegular,
    #[serde(rename = "2.4")]
    AdjacencyNegativeBipartite,
    #[serde(rename = "2.5")]
    AdjacencyPositiveBipartite,
    #[serde(rename = "3.3")]
    LaplacianRegular,
    #[serde(rename = "3.4")]
    LaplacianBalanced,
    #[serde(rename = "4.2")]
    NetLaplacian,
    #[serde(rename = "5.1")]
    DistinctBound,
    #[serde(rename = "5.2")]
    FewDistinct,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Factorization,
        TheoremId::AdjacencyNetRegular,
        TheoremId::AdjacencyNegativeBipartite,
        TheoremId::AdjacencyPositiveBipartite,
        TheoremId::LaplacianRegular,
        TheoremId::LaplacianBalanced,
        TheoremId::NetLaplacian,
        TheoremId::DistinctBound,
        TheoremId::FewDistinct,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::Factorization => "2.2",
            TheoremId::AdjacencyNetRegular => "2.3",
            TheoremId::AdjacencyNegativeBipartite => "2.4",
            TheoremId::AdjacencyPositiveBipartite => "2.5",
            TheoremId::LaplacianRegular => "3.3",
            TheoremId::LaplacianBalanced => "3.4",
            TheoremId::NetLaplacian => "4.2",
            TheoremId::DistinctBound => "5.1",
            TheoremId::FewDistinct => "5.2",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| format!("unknown theorem {s:?} (expected one of 2.2 2.3 2.4 2.5 3.3 3.4 4.2 5.1 5.2)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { trials: 100, seed: 0, max_n: 5, tol: DEFAULT_CLUSTER_TOL }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub trial_seed: u64,
    pub graphs: Vec<(String, String)>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# trial {} (trial seed {})", self.trial, self.trial_seed)?;
        writeln!(f, "# {}", self.detail)?;
        for (name, text) in &self.graphs {
            writeln!(f, "# {name}")?;
            write!(f, "{text}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOutcome {
    pub theorem: TheoremId,
    pub config: VerifyConfig,
    pub passed: usize,
    pub trials: usize,
    pub failures: Vec<Counterexample>,
}

impl VerifyOutcome {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

impl fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.all_passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}/{}", self.passed, self.trials)?;
        for c in &self.failures {
            write!(f, "\n{c}")?;
        }
        Ok(())
    }
}

/// Per-trial seed so that any failing trial can be replayed on its own.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

struct Failure {
    graphs: Vec<(&'static str, SignedGraph)>,
    detail: String,
}

type TrialResult = Result<(), Failure>;

pub fn run_theorem(theorem: TheoremId, config: VerifyConfig) -> VerifyOutcome {
    let mut failures = Vec::new();
    for trial in 0..config.trials {
        let ts = trial_seed(config.seed, trial);
        let mut rng = seeded(ts);
        let result = run_trial(theorem, &config, trial, &mut rng);
        if let Err(f) = result {
            failures.push(Counterexample {
                trial,
                trial_seed: ts,
                graphs: f.graphs.into_iter().map(|(n, g)| (n.to_string(), format_graph(&g))).collect(),
                detail: f.detail,
            });
        }
    }
    VerifyOutcome { theorem, config, passed: config.trials - failures.len(), trials: config.trials, failures }
}

fn run_trial<R: Rng>(theorem: TheoremId, config: &VerifyConfig, trial: usize, rng: &mut R) -> TrialResult {
    let max_n = config.max_n.max(1);
    match theorem {
        TheoremId::Factorization => {
            let s1 = random_graph_upto(rng, max_n);
            let s2 = random_graph_upto(rng, max_n);
            check_factorization(&s1, &s2, rng)
        }
        TheoremId::AdjacencyNetRegular => {
            let s1 = random_graph_upto(rng, max_n);
            let s2 = random_net_regular(rng, max_n);
            let cf = closed_form_adjacency(&s1, &s2);
            compare(&s1, &s2, cf, MatrixKind::Adjacency, config.tol)
        }
        TheoremId::AdjacencyNegativeBipartite | TheoremId::AdjacencyPositiveBipartite => {
            let sign = if theorem == TheoremId::AdjacencyNegativeBipartite { Sign::Negative } else { Sign::Positive };
            let s = random_graph_upto(rng, max_n);
            let (p, q) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let companion = catalog::complete_bipartite(p, q, sign);
            compare(&s, &companion, closed_form_adjacency_kpq(&s, p, q, sign), MatrixKind::Adjacency, config.tol)
        }
        TheoremId::LaplacianRegular => {
            let s1 = random_regular(rng, max_n.max(2));
            let s2 = random_net_regular(rng, max_n);
            compare(&s1, &s2, closed_form_laplacian(&s1, &s2), MatrixKind::Laplacian, config.tol)
        }
        TheoremId::LaplacianBalanced => {
            let s1 = random_regular(rng, max_n.max(2));
            let n2 = rng.gen_range(1..=max_n);
            let s2 = random_connected(rng, n2, 0.4, 0.0);
            compare(&s1, &s2, closed_form_laplacian(&s1, &s2), MatrixKind::Laplacian, config.tol)
        }
        TheoremId::NetLaplacian => {
            let s1 = random_net_regular_nonzero(rng, max_n.max(2));
            let s2 = random_graph_upto(rng, max_n);
            compare(&s1, &s2, closed_form_netlaplacian(&s1, &s2), MatrixKind::NetLaplacian, config.tol)
        }
        TheoremId::DistinctBound => {
            let kind = MatrixKind::ALL[trial % 3];
            let (s1, s2) = match kind {
                MatrixKind::Adjacency => (random_graph_upto(rng, max_n), random_net_regular(rng, max_n)),
                MatrixKind::Laplacian => (random_regular(rng, max_n.max(2)), random_net_regular(rng, max_n)),
                MatrixKind::NetLaplacian => (random_net_regular(rng, max_n), random_graph_upto(rng, max_n)),
            };
            check_bound(&s1, &s2, kind, config.tol)
        }
        TheoremId::FewDistinct => {
            let seeds = two_eigenvalue_seeds();
            let (_, base) = &seeds[trial % seeds.len()];
            let s = base.switch(&random_switch_set(rng, base.order()));
            let companion = if rng.gen_bool(0.5) { Companion::K1 } else { Companion::K2 };
            let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
            check_few_distinct(&s, companion, sign, config.tol)
        }
    }
}

fn check_factorization<R: Rng>(s1: &SignedGraph, s2: &SignedGraph, rng: &mut R) -> TrialResult {
    let corona = s_neighbourhood_corona(s1, s2);
    let a = matrix_of(&corona, MatrixKind::Adjacency);
    let mut points = 0;
    let mut attempts = 0;
    while points < 5 && attempts < 100 {
        attempts += 1;
        let t0 = random_rational(rng);
        let factored = match corona_adjacency_charpoly_eval(s1, s2, &t0) {
            Err(SpectraError::PoleAtEvaluationPoint) => continue,
            Err(e) => return Err(failure(s1, s2, format!("evaluation failed at {t0}: {e}"))),
            Ok(v) => v,
        };
        let direct = det_exact_at(&a, &t0).expect("square");
        if factored != direct {
            return Err(failure(s1, s2, format!("at t = {t0}: factored {factored} != direct {direct}")));
        }
        points += 1;
    }
    Ok(())
}

fn failure(s1: &SignedGraph, s2: &SignedGraph, detail: String) -> Failure {
    Failure { graphs: vec![("S1", s1.clone()), ("S2", s2.clone())], detail }
}

fn compare(
    s1: &SignedGraph,
    s2: &SignedGraph,
    cf: Result<ClosedFormSpectrum, SpectraError>,
    kind: MatrixKind,
    tol: f64,
) -> TrialResult {
    let cf = cf.map_err(|e| failure(s1, s2, format!("closed form refused a valid instance: {e}")))?;
    let closed = realize_with_tol(&cf, tol).map_err(|e| failure(s1, s2, format!("realize failed: {e}")))?;
    let corona = s_neighbourhood_corona(s1, s2);
    let oracle = numeric_spectrum_with_tol(&corona, kind, tol)
        .map_err(|e| failure(s1, s2, format!("oracle failed: {e}")))?;
    let dist = spectra_distance(&closed, &oracle);
    if dist < tol {
        Ok(())
    } else {
        Err(failure(s1, s2, format!("max deviation {dist:e}; closed form {closed}; oracle {oracle}")))
    }
}

fn check_bound(s1: &SignedGraph, s2: &SignedGraph, kind: MatrixKind, tol: f64) -> TrialResult {
    let report = corona_distinct_count(s1, s2, kind, tol).map_err(|e| failure(s1, s2, e.to_string()))?;
    match report.bound {
        Some(b) if report.distinct_count <= b => Ok(()),
        Some(b) => Err(failure(s1, s2, format!("{kind}: {} distinct > bound {b}", report.distinct_count))),
        None => Err(failure(s1, s2, "generator produced an instance outside the hypotheses".into())),
    }
}

fn check_few_distinct(s: &SignedGraph, companion: Companion, sign: Sign, tol: f64) -> TrialResult {
    let fail = |detail: String| Failure { graphs: vec![("S", s.clone())], detail };
    let (_, report) = few_distinct_construct(s, companion, sign, tol).map_err(|e| fail(e.to_string()))?;
    if report.meets_expectation() {
        Ok(())
    } else {
        Err(fail(format!(
            "companion {companion:?} sign {sign}: {} distinct, expected {}",
            report.distinct_count,
            report.expected.unwrap_or(0)
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_labels() {
        assert_eq!("2.3".parse::<TheoremId>(), Ok(TheoremId::AdjacencyNetRegular));
        assert!("9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        let config = VerifyConfig { trials: 10, seed: 3, ..VerifyConfig::default() };
        for t in TheoremId::ALL {
            let a = run_theorem(t, config);
            assert!(a.all_passed(), "{t}: {a}");
            assert_eq!(a, run_theorem(t, config));
        }
    }
}
