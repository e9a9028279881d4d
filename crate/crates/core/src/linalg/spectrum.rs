use std::fmt;

use serde::{Deserialize, Serialize};

/// Default clustering tolerance for eigenvalue multiplicities.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

/// One clustered eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

/// Sorted eigenvalue–multiplicity pairs.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SpectrumMultiset {
    entries: Vec<Eigenvalue>,
}

impl SpectrumMultiset {
    /// Clusters raw values. Two sorted neighbours merge when they differ by
    /// less than `tol · (1 + max|v|)`; a cluster is represented by its mean.
    pub fn from_values(values: &[f64], tol: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let radius = sorted.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let gap = tol * (1.0 + radius);
        let mut entries: Vec<Eigenvalue> = Vec::new();
        let mut sum = 0.0;
        let mut last = f64::NAN;
        for v in sorted {
            match entries.last_mut() {
                Some(e) if v - last < gap => {
                    e.multiplicity += 1;
                    sum += v;
                    e.value = sum / e.multiplicity as f64;
                }
                _ => {
                    entries.push(Eigenvalue { value: v, multiplicity: 1 });
                    sum = v;
                }
            }
            last = v;
        }
        SpectrumMultiset { entries }
    }

    pub fn entries(&self) -> &[Eigenvalue] {
        &self.entries
    }

    /// Total multiplicity (the matrix order).
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Values repeated by multiplicity, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, e| m.max(e.value.abs()))
    }

    /// Multiplicity of the cluster within `tol` of `value` (0 if absent).
    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| (e.value - value).abs() < tol)
            .map(|e| e.multiplicity)
            .sum()
    }

    pub fn sum(&self) -> f64 {
        self.entries.iter().map(|e| e.value * e.multiplicity as f64).sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.entries.iter().map(|e| e.value * e.value * e.multiplicity as f64).sum()
    }
}

/// Equal total multiplicity and elementwise agreement (`< tol`) of the
/// expanded sorted sequences.
pub fn spectra_equal(a: &SpectrumMultiset, b: &SpectrumMultiset, tol: f64) -> bool {
    let (x, y) = (a.expanded(), b.expanded());
    x.len() == y.len() && x.iter().zip(&y).all(|(p, q)| (p - q).abs() < tol)
}

/// Largest elementwise deviation between two expanded spectra, or infinity
/// when their sizes differ.
pub fn spectra_distance(a: &SpectrumMultiset, b: &SpectrumMultiset) -> f64 {
    let (x, y) = (a.expanded(), b.expanded());
    if x.len() != y.len() {
        return f64::INFINITY;
    }
    x.iter().zip(&y).fold(0.0, |m, (p, q)| m.max((p - q).abs()))
}

fn fmt_value(v: f64) -> String {
    let s = format!("{v:.5}");
    if s == "-0.00000" {
        "0.00000".to_string()
    } else {
        s
    }
}

/// `-1.41421 x2, 1.41421 x2`
impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{} x{}", fmt_value(e.value), e.multiplicity))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clusters_multiplicities() {
        let s = SpectrumMultiset::from_values(&[3.0, 1.0, 1.0 + 1e-9], DEFAULT_CLUSTER_TOL);
        assert_eq!(s.distinct_count(), 2);
        assert_eq!(s.entries()[0].multiplicity, 2);
        assert_eq!(s.total(), 3);
        assert_eq!(s.to_string(), "1.00000 x2, 3.00000 x1");
    }

    #[test]
    fn equality_boundary() {
        let tol = 1e-6;
        let a = SpectrumMultiset::from_values(&[0.0], tol);
        assert!(spectra_equal(&a, &a, tol));
        assert!(spectra_equal(&a, &SpectrumMultiset::from_values(&[tol / 2.0], tol), tol));
        assert!(!spectra_equal(&a, &SpectrumMultiset::from_values(&[2.0 * tol], tol), tol));
        assert!(!spectra_equal(&a, &SpectrumMultiset::from_values(&[0.0, 0.0], tol), tol));
    }

    #[test]
    fn negative_zero_prints_as_zero() {
        let s = SpectrumMultiset::from_values(&[-1e-12], 1e-6);
        assert_eq!(s.to_string(), "0.00000 x1");
    }
}
