//! Closed-form spectra of the s-neighbourhood corona.
//!
//! Local names for the regularity parameters:
//! `r1` degree of a regular `S₁`, `r2` net degree of a net-regular `S₂`
//! (adjacency case), `c` the constant Laplacian row sum `2d⁻` of `S₂`, and `r`
//! the net degree of `S₁` (net-Laplacian case).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{numeric_spectrum, MatrixKind, SpectraError};
use crate::graph::{Sign, SignedGraph};
use crate::linalg::{
    real_roots_cubic, real_roots_quadratic, Eigenvalue, LinalgError, SpectrumMultiset,
    DEFAULT_CLUSTER_TOL,
};

/// Provenance label attached to every entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
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
}

impl Theorem {
    pub fn label(self) -> &'static str {
        match self {
            Theorem::AdjacencyNetRegular => "2.3",
            Theorem::AdjacencyNegativeBipartite => "2.4",
            Theorem::AdjacencyPositiveBipartite => "2.5",
            Theorem::LaplacianRegular => "3.3",
            Theorem::LaplacianBalanced => "3.4",
            Theorem::NetLaplacian => "4.2",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An eigenvalue inherited from a factor, or a monic polynomial whose real
/// roots are eigenvalues, each root carrying `multiplicity`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClosedFormEntry {
    Inherited { value: f64, multiplicity: usize, theorem: Theorem },
    /// Coefficients ascending, monic.
    Poly { coeffs: Vec<f64>, multiplicity: usize, theorem: Theorem },
}

impl ClosedFormEntry {
    /// Eigenvalues contributed, counting every root.
    pub fn count(&self) -> usize {
        match self {
            ClosedFormEntry::Inherited { multiplicity, .. } => *multiplicity,
            ClosedFormEntry::Poly { coeffs, multiplicity, .. } => (coeffs.len() - 1) * multiplicity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormSpectrum {
    pub theorem: Theorem,
    pub entries: Vec<ClosedFormEntry>,
}

impl ClosedFormSpectrum {
    fn new(theorem: Theorem) -> Self {
        ClosedFormSpectrum { theorem, entries: Vec::new() }
    }

    fn inherited(&mut self, value: f64, multiplicity: usize) {
        if multiplicity > 0 {
            let theorem = self.theorem;
            self.entries.push(ClosedFormEntry::Inherited { value, multiplicity, theorem });
        }
    }

    fn poly(&mut self, coeffs: Vec<f64>, multiplicity: usize) {
        let theorem = self.theorem;
        self.entries.push(ClosedFormEntry::Poly { coeffs, multiplicity, theorem });
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(ClosedFormEntry::count).sum()
    }
}

impl fmt::Display for ClosedFormSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "closed form ({})", self.theorem)?;
        for e in &self.entries {
            match e {
                ClosedFormEntry::Inherited { value, multiplicity, .. } => {
                    writeln!(f, "  {value:.5} x{multiplicity}")?
                }
                ClosedFormEntry::Poly { coeffs, multiplicity, .. } => {
                    let terms: Vec<String> = coeffs
                        .iter()
                        .enumerate()
                        .rev()
                        .map(|(i, c)| match i {
                            0 => format!("{c:.5}"),
                            1 => format!("{c:.5}*t"),
                            _ => format!("{c:.5}*t^{i}"),
                        })
                        .collect();
                    writeln!(f, "  roots of {} x{multiplicity} each", terms.join(" + "))?
                }
            }
        }
        Ok(())
    }
}

/// Constant term of the bipartite cubic for the all-negative companion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CubicVariant {
    /// `+pqθ(1 + 2θ)`, re-derived from the coronal of `(K_{p,q}, −)`.
    #[default]
    Derived,
    /// `+pqθ(2θ − 1)`. Disagrees with the oracle; kept for comparison.
    Printed,
}

/// Raw eigenvalues of `s` with exactly one copy of `target` removed.
fn without_one(
    s: &SignedGraph,
    kind: MatrixKind,
    target: f64,
) -> Result<Option<SpectrumMultiset>, SpectraError> {
    let spectrum = numeric_spectrum(s, kind)?;
    let slack = DEFAULT_CLUSTER_TOL * (1.0 + spectrum.spectral_radius());
    let mut values = spectrum.expanded();
    let nearest = values
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - target).abs().total_cmp(&(b.1 - target).abs()))
        .map(|(i, v)| (i, (v - target).abs()));
    match nearest {
        Some((i, gap)) if gap < slack => {
            values.remove(i);
            Ok(Some(SpectrumMultiset::from_values(&values, DEFAULT_CLUSTER_TOL)))
        }
        _ => Ok(None),
    }
}

fn clustered(s: &SignedGraph, kind: MatrixKind) -> Result<Vec<Eigenvalue>, SpectraError> {
    Ok(numeric_spectrum(s, kind)?.entries().to_vec())
}

/// Adjacency spectrum for net-regular `S₂`: `θ_j(S₂)` (`j ≠ k`) with
/// multiplicity `n₁`, and the roots of
/// `t² − (θ + r2)t + (θ·r2 − n₂θ²)` for every `θ ∈ σ_A(S₁)`.
pub fn closed_form_adjacency(s1: &SignedGraph, s2: &SignedGraph) -> Result<ClosedFormSpectrum, SpectraError> {
    let r2 = s2.net_regularity().ok_or(SpectraError::NotNetRegular)?;
    let rest = without_one(s2, MatrixKind::Adjacency, r2 as f64)?
        .ok_or(SpectraError::NetDegreeNotAnEigenvalue(r2))?;
    let (n1, n2) = (s1.order(), s2.order() as f64);
    let r2 = r2 as f64;
    let mut out = ClosedFormSpectrum::new(Theorem::AdjacencyNetRegular);
    for e in rest.entries() {
        out.inherited(e.value, e.multiplicity * n1);
    }
    for e in clustered(s1, MatrixKind::Adjacency)? {
        let th = e.value;
        out.poly(vec![th * r2 - n2 * th * th, -(th + r2), 1.0], e.multiplicity);
    }
    Ok(out)
}

/// Adjacency spectrum of `S ⋆ₛ (K_{p,q}, sign)` with the derived cubic.
pub fn closed_form_adjacency_kpq(
    s: &SignedGraph,
    p: usize,
    q: usize,
    sign: Sign,
) -> Result<ClosedFormSpectrum, SpectraError> {
    closed_form_adjacency_kpq_variant(s, p, q, sign, CubicVariant::Derived)
}

/// `0` with multiplicity `n(p + q − 2)` and, for every `θ ∈ σ_A(S)`, the
/// roots of `t³ − θt² − (pq + (p+q)θ²)t + c₀`.
pub fn closed_form_adjacency_kpq_variant(
    s: &SignedGraph,
    p: usize,
    q: usize,
    sign: Sign,
    variant: CubicVariant,
) -> Result<ClosedFormSpectrum, SpectraError> {
    if p == 0 || q == 0 {
        return Err(SpectraError::InvalidPartSizes);
    }
    let theorem = match sign {
        Sign::Negative => Theorem::AdjacencyNegativeBipartite,
        Sign::Positive => Theorem::AdjacencyPositiveBipartite,
    };
    let mut out = ClosedFormSpectrum::new(theorem);
    out.inherited(0.0, s.order() * (p + q - 2));
    let (pq, sum) = ((p * q) as f64, (p + q) as f64);
    for e in clustered(s, MatrixKind::Adjacency)? {
        let th = e.value;
        let c0 = match (sign, variant) {
            (Sign::Negative, CubicVariant::Derived) => pq * th * (1.0 + 2.0 * th),
            (Sign::Negative, CubicVariant::Printed) => pq * th * (2.0 * th - 1.0),
            (Sign::Positive, _) => -pq * th * (2.0 * th - 1.0),
        };
        out.poly(vec![c0, -(pq + sum * th * th), -th, 1.0], e.multiplicity);
    }
    Ok(out)
}

/// Laplacian spectrum for `r1`-regular `S₁` and `S₂` whose Laplacian rows all
/// sum to `c`: `λ_j(S₂) + r1` (`j ≠ k`) with multiplicity `n₁`, and the roots
/// of `t² − βt + ((λ + r1·n₂)(r1 + c) − n₂(λ − r1)²)` with
/// `β = r1 + c + λ + r1·n₂` for every `λ ∈ σ_L(S₁)`.
///
/// `S₂` must be regular and net-regular, or connected and balanced with
/// constant negative degree (in practice all-positive).
pub fn closed_form_laplacian(s1: &SignedGraph, s2: &SignedGraph) -> Result<ClosedFormSpectrum, SpectraError> {
    let r1 = laplacian_s1_degree(s1)?;
    let regular = s2.regularity().is_some() && s2.net_regularity().is_some();
    let balanced = s2.is_connected() && s2.is_balanced();
    let theorem = match (regular, balanced) {
        (true, _) => Theorem::LaplacianRegular,
        (false, true) => Theorem::LaplacianBalanced,
        (false, false) => return Err(SpectraError::HypothesisNotMet),
    };
    let c = s2.negative_regularity().ok_or(SpectraError::NonConstantRowSum)? as i64 * 2;
    laplacian_with_row_sum(s1, s2, r1, c, theorem)
}

/// Balanced-companion variant with the row-sum constant
/// taken as `0` for every connected balanced `S₂`. Wrong when `S₂` has
/// negative edges; kept for comparison runs.
pub fn closed_form_laplacian_balanced_as_printed(
    s1: &SignedGraph,
    s2: &SignedGraph,
) -> Result<ClosedFormSpectrum, SpectraError> {
    let r1 = laplacian_s1_degree(s1)?;
    if !(s2.is_connected() && s2.is_balanced()) {
        return Err(SpectraError::HypothesisNotMet);
    }
    laplacian_with_row_sum(s1, s2, r1, 0, Theorem::LaplacianBalanced)
}

fn laplacian_s1_degree(s1: &SignedGraph) -> Result<f64, SpectraError> {
    match s1.regularity() {
        None => Err(SpectraError::NotRegular),
        Some(0) => Err(SpectraError::ZeroDegree),
        Some(r) => Ok(r as f64),
    }
}

fn laplacian_with_row_sum(
    s1: &SignedGraph,
    s2: &SignedGraph,
    r1: f64,
    c: i64,
    theorem: Theorem,
) -> Result<ClosedFormSpectrum, SpectraError> {
    let rest = without_one(s2, MatrixKind::Laplacian, c as f64)?
        .ok_or(SpectraError::RowSumEigenvalueMissing(c))?;
    let (n1, n2, c) = (s1.order(), s2.order() as f64, c as f64);
    let mut out = ClosedFormSpectrum::new(theorem);
    for e in rest.entries() {
        out.inherited(e.value + r1, e.multiplicity * n1);
    }
    for e in clustered(s1, MatrixKind::Laplacian)? {
        let l = e.value;
        let beta = r1 + c + l + r1 * n2;
        let c0 = (l + r1 * n2) * (r1 + c) - n2 * (l - r1) * (l - r1);
        out.poly(vec![c0, -beta, 1.0], e.multiplicity);
    }
    Ok(out)
}

/// Net-Laplacian spectrum for `S₁` with nonzero net degree `r`:
/// `v_j(S₂) + r` (`j ≠ k`, `v_k = 0`) with multiplicity `n₁`, and the roots of
/// `t² − (v + (n₂+1)r)t + v((2n₂+1)r − n₂v)` for every `v ∈ σ_N(S₁)`.
pub fn closed_form_netlaplacian(s1: &SignedGraph, s2: &SignedGraph) -> Result<ClosedFormSpectrum, SpectraError> {
    let r = match s1.net_regularity() {
        None => return Err(SpectraError::S1NotNetRegular),
        Some(0) => return Err(SpectraError::ZeroNetDegree),
        Some(r) => r as f64,
    };
    let n1 = s1.order();
    let n2 = s2.order();
    let mut out = ClosedFormSpectrum::new(Theorem::NetLaplacian);
    if n2 > 0 {
        let rest = without_one(s2, MatrixKind::NetLaplacian, 0.0)?
            .expect("net Laplacian rows sum to zero");
        for e in rest.entries() {
            out.inherited(e.value + r, e.multiplicity * n1);
        }
    }
    let n2 = n2 as f64;
    for e in clustered(s1, MatrixKind::NetLaplacian)? {
        let v = e.value;
        let c0 = v * ((2.0 * n2 + 1.0) * r - n2 * v);
        out.poly(vec![c0, -(v + (n2 + 1.0) * r), 1.0], e.multiplicity);
    }
    Ok(out)
}

/// `(p, q, σ)` when `s` is `K_{p,q}` with every edge signed `σ` (`p ≤ q`).
pub fn as_complete_bipartite(s: &SignedGraph) -> Option<(usize, usize, Sign)> {
    let sign = s.edges().first()?.sign;
    if s.edges().iter().any(|e| e.sign != sign) {
        return None;
    }
    let adj = s.neighbours();
    let mut side = vec![None; s.order()];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &(w, _) in &adj[v] {
            match side[w] {
                None => {
                    side[w] = Some(!side[v].unwrap());
                    stack.push(w);
                }
                Some(x) if x == side[v].unwrap() => return None,
                _ => {}
            }
        }
    }
    if side.iter().any(Option::is_none) {
        return None;
    }
    let p = side.iter().filter(|x| **x == Some(false)).count();
    let q = s.order() - p;
    (s.edge_count() == p * q).then_some((p.min(q), p.max(q), sign))
}

/// The applicable closed form for `S₁ ⋆ₛ S₂` and `kind`. For the adjacency
/// matrix a uniformly signed complete bipartite `S₂` that is not net-regular
/// uses the cubic form.
pub fn closed_form(s1: &SignedGraph, s2: &SignedGraph, kind: MatrixKind) -> Result<ClosedFormSpectrum, SpectraError> {
    match kind {
        MatrixKind::Adjacency => match (s2.net_regularity(), as_complete_bipartite(s2)) {
            (None, Some((p, q, sign))) => closed_form_adjacency_kpq(s1, p, q, sign),
            _ => closed_form_adjacency(s1, s2),
        },
        MatrixKind::Laplacian => closed_form_laplacian(s1, s2),
        MatrixKind::NetLaplacian => closed_form_netlaplacian(s1, s2),
    }
}

/// Numeric eigenvalues of a closed form, clustered at the default tolerance.
pub fn realize(cf: &ClosedFormSpectrum) -> Result<SpectrumMultiset, LinalgError> {
    realize_with_tol(cf, DEFAULT_CLUSTER_TOL)
}

pub fn realize_with_tol(cf: &ClosedFormSpectrum, tol: f64) -> Result<SpectrumMultiset, LinalgError> {
    let mut values = Vec::with_capacity(cf.total_multiplicity());
    for e in &cf.entries {
        let (roots, m): (Vec<f64>, usize) = match e {
            ClosedFormEntry::Inherited { value, multiplicity, .. } => (vec![*value], *multiplicity),
            ClosedFormEntry::Poly { coeffs, multiplicity, .. } => {
                let roots = match coeffs.as_slice() {
                    [c0, _] => vec![-c0],
                    [c0, c1, _] => real_roots_quadratic(*c1, *c0)?.to_vec(),
                    [c0, c1, c2, _] => real_roots_cubic(*c2, *c1, *c0)?.to_vec(),
                    other => unreachable!("closed forms emit degree 1..=3, got {}", other.len()),
                };
                (roots, *multiplicity)
            }
        };
        for r in roots {
            values.extend(std::iter::repeat_n(r, m));
        }
    }
    Ok(SpectrumMultiset::from_values(&values, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog, s_neighbourhood_corona};
    use crate::linalg::spectra_equal;
    use crate::spectra::numeric_spectrum;

    fn agree(cf: &ClosedFormSpectrum, corona: &SignedGraph, kind: MatrixKind) {
        let closed = realize(cf).unwrap();
        let oracle = numeric_spectrum(corona, kind).unwrap();
        assert!(spectra_equal(&closed, &oracle, 1e-6), "closed {closed}\noracle {oracle}");
    }

    #[test]
    fn adjacency_c4_minus_with_k2() {
        let s1 = catalog::c4_minus();
        let s2 = catalog::complete(2, Sign::Positive);
        let cf = closed_form_adjacency(&s1, &s2).unwrap();
        assert_eq!(cf.total_multiplicity(), 12);
        match &cf.entries[0] {
            ClosedFormEntry::Inherited { value, multiplicity, .. } => {
                assert!((value + 1.0).abs() < 1e-12 && *multiplicity == 4)
            }
            other => panic!("unexpected {other:?}"),
        }
        let realized = realize(&cf).unwrap();
        let r2 = 2f64.sqrt();
        let expected = (r2 + 1.0 + (19.0 - 2.0 * r2).sqrt()) / 2.0;
        assert_eq!(realized.multiplicity_of(expected, 1e-9), 2);
        agree(&cf, &s_neighbourhood_corona(&s1, &s2), MatrixKind::Adjacency);
    }

    #[test]
    fn adjacency_edgeless_s1() {
        let s1 = SignedGraph::empty(3);
        let s2 = catalog::cycle(4, Sign::Negative);
        let cf = closed_form_adjacency(&s1, &s2).unwrap();
        let realized = realize(&cf).unwrap();
        assert_eq!(realized.multiplicity_of(-2.0, 1e-9), 3);
        agree(&cf, &s_neighbourhood_corona(&s1, &s2), MatrixKind::Adjacency);
    }

    #[test]
    fn adjacency_errors() {
        let s1 = catalog::k1();
        assert_eq!(
            closed_form_adjacency(&s1, &catalog::path(3, Sign::Positive)),
            Err(SpectraError::NotNetRegular)
        );
    }

    #[test]
    fn bipartite_theta_zero() {
        let cf = closed_form_adjacency_kpq(&catalog::k1(), 2, 3, Sign::Negative).unwrap();
        let realized = realize(&cf).unwrap();
        assert_eq!(realized.multiplicity_of(0.0, 1e-9), 4);
        assert_eq!(realized.multiplicity_of(6f64.sqrt(), 1e-9), 1);
        assert_eq!(cf.total_multiplicity(), 6);
    }

    #[test]
    fn bipartite_variants() {
        let s = catalog::complete(2, Sign::Positive);
        for sign in [Sign::Positive, Sign::Negative] {
            let corona = s_neighbourhood_corona(&s, &catalog::complete_bipartite(1, 2, sign));
            agree(&closed_form_adjacency_kpq(&s, 1, 2, sign).unwrap(), &corona, MatrixKind::Adjacency);
        }
        let corona = s_neighbourhood_corona(&s, &catalog::complete_bipartite(1, 1, Sign::Negative));
        let printed =
            closed_form_adjacency_kpq_variant(&s, 1, 1, Sign::Negative, CubicVariant::Printed).unwrap();
        let oracle = numeric_spectrum(&corona, MatrixKind::Adjacency).unwrap();
        // the printed cubic has complex roots here, so it cannot match
        assert!(realize(&printed).map_or(true, |closed| !spectra_equal(&closed, &oracle, 1e-6)));
    }

    #[test]
    fn laplacian_c4_with_k1() {
        let s1 = catalog::cycle(4, Sign::Positive);
        let cf = closed_form_laplacian(&s1, &catalog::k1()).unwrap();
        assert_eq!(cf.theorem, Theorem::LaplacianRegular);
        assert_eq!(cf.total_multiplicity(), 8);
        let realized = realize(&cf).unwrap();
        assert_eq!(realized.multiplicity_of(0.0, 1e-9), 1);
        // λ = 0 gives {0, 4}; each λ = 2 gives {2, 4}
        assert_eq!(realized.multiplicity_of(4.0, 1e-9), 3);
        agree(&cf, &s_neighbourhood_corona(&s1, &catalog::k1()), MatrixKind::Laplacian);
    }

    #[test]
    fn laplacian_balanced_companion() {
        let s1 = catalog::c4_minus();
        let s2 = catalog::path(3, Sign::Positive);
        let cf = closed_form_laplacian(&s1, &s2).unwrap();
        assert_eq!(cf.theorem, Theorem::LaplacianBalanced);
        agree(&cf, &s_neighbourhood_corona(&s1, &s2), MatrixKind::Laplacian);
    }

    #[test]
    fn laplacian_switched_balanced_is_refused() {
        let s1 = catalog::cycle(3, Sign::Positive);
        let s2 = catalog::path(3, Sign::Positive)
            .switch(&crate::graph::SwitchSet::new(3, [0]).unwrap());
        assert_eq!(closed_form_laplacian(&s1, &s2), Err(SpectraError::NonConstantRowSum));
        let printed = closed_form_laplacian_balanced_as_printed(&s1, &s2).unwrap();
        let oracle = numeric_spectrum(&s_neighbourhood_corona(&s1, &s2), MatrixKind::Laplacian).unwrap();
        assert!(!spectra_equal(&realize(&printed).unwrap(), &oracle, 1e-6));
    }

    #[test]
    fn laplacian_errors() {
        let k2 = catalog::complete(2, Sign::Positive);
        assert_eq!(
            closed_form_laplacian(&catalog::path(3, Sign::Positive), &k2),
            Err(SpectraError::NotRegular)
        );
        assert_eq!(closed_form_laplacian(&SignedGraph::empty(2), &k2), Err(SpectraError::ZeroDegree));
    }

    #[test]
    fn netlaplacian_k2_with_k1() {
        let s1 = catalog::complete(2, Sign::Positive);
        let cf = closed_form_netlaplacian(&s1, &catalog::k1()).unwrap();
        assert_eq!(cf.total_multiplicity(), 4);
        let realized = realize(&cf).unwrap();
        assert_eq!(realized.multiplicity_of(2.0 + 2f64.sqrt(), 1e-9), 1);
        assert_eq!(realized.multiplicity_of(2.0 - 2f64.sqrt(), 1e-9), 1);
        assert_eq!(realized.multiplicity_of(0.0, 1e-9), 1);
        assert_eq!(realized.multiplicity_of(2.0, 1e-9), 1);
        agree(&cf, &s_neighbourhood_corona(&s1, &catalog::k1()), MatrixKind::NetLaplacian);
    }

    #[test]
    fn netlaplacian_errors() {
        let k2 = catalog::complete(2, Sign::Positive);
        assert_eq!(closed_form_netlaplacian(&catalog::c4_minus(), &k2), Err(SpectraError::S1NotNetRegular));
        assert_eq!(closed_form_netlaplacian(&SignedGraph::empty(2), &k2), Err(SpectraError::ZeroNetDegree));
    }

    #[test]
    fn json_shape() {
        let cf = closed_form_adjacency(&catalog::k1(), &catalog::complete(2, Sign::Positive)).unwrap();
        let v = serde_json::to_value(&cf).unwrap();
        let first = &v["entries"][0];
        assert_eq!(first["kind"], "inherited");
        assert_eq!(first["theorem"], "2.3");
        assert_eq!(first["multiplicity"], 1);
        assert_eq!(v["entries"][1]["kind"], "poly");
        assert_eq!(v["entries"][1]["coeffs"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn detects_complete_bipartite() {
        let g = catalog::complete_bipartite(2, 3, Sign::Negative).relabel(&[4, 0, 2, 1, 3]);
        assert_eq!(as_complete_bipartite(&g), Some((2, 3, Sign::Negative)));
        assert_eq!(as_complete_bipartite(&catalog::c4_minus()), None);
        assert_eq!(as_complete_bipartite(&catalog::path(4, Sign::Positive)), None);
        assert_eq!(as_complete_bipartite(&catalog::k1()), None);
        let s1 = catalog::c4_minus();
        let cf = closed_form(&s1, &g, MatrixKind::Adjacency).unwrap();
        assert_eq!(cf.theorem, Theorem::AdjacencyNegativeBipartite);
        agree(&cf, &s_neighbourhood_corona(&s1, &g), MatrixKind::Adjacency);
    }

    #[test]
    fn inherited_only_realizes_unchanged() {
        let mut cf = ClosedFormSpectrum::new(Theorem::NetLaplacian);
        cf.inherited(1.5, 2);
        cf.inherited(-3.0, 1);
        assert_eq!(realize(&cf).unwrap().to_string(), "-3.00000 x1, 1.50000 x2");
    }
}
