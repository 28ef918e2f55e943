/// Absolute tolerance for clustering numerically split eigenvalues.
pub const DEFAULT_MERGE_TOL: f64 = 1e-8;

/// Sorted multiset of real eigenvalues. Consecutive values closer than
/// `merge_tol` are merged into one entry holding their mean.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pairs: Vec<(f64, usize)>,
    merge_tol: f64,
}

impl Spectrum {
    pub fn from_values(values: Vec<f64>, merge_tol: f64) -> Self {
        Spectrum::from_weighted(values.into_iter().map(|v| (v, 1)).collect(), merge_tol)
    }

    /// Builds from `(value, multiplicity)` pairs in any order; zero
    /// multiplicities are dropped.
    pub fn from_weighted(mut values: Vec<(f64, usize)>, merge_tol: f64) -> Self {
        values.retain(|&(_, m)| m > 0);
        values.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut pairs: Vec<(f64, usize)> = Vec::new();
        // running weighted sum for the current cluster, and its last raw value
        let mut sum = 0.0;
        let mut last = f64::NEG_INFINITY;
        for (v, m) in values {
            match pairs.last_mut() {
                Some(cur) if v - last <= merge_tol => {
                    sum += v * m as f64;
                    cur.1 += m;
                    cur.0 = sum / cur.1 as f64;
                }
                _ => {
                    sum = v * m as f64;
                    pairs.push((v, m));
                }
            }
            last = v;
        }
        Spectrum { pairs, merge_tol }
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    pub fn merge_tol(&self) -> f64 {
        self.merge_tol
    }

    /// Total multiplicity.
    pub fn len(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Values repeated by multiplicity, ascending.
    pub fn flatten(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat(v).take(m))
            .collect()
    }

    /// Sum of value times multiplicity.
    pub fn trace(&self) -> f64 {
        self.pairs.iter().map(|&(v, m)| v * m as f64).sum()
    }

    pub fn max(&self) -> Option<f64> {
        self.pairs.last().map(|p| p.0)
    }

    pub fn min(&self) -> Option<f64> {
        self.pairs.first().map(|p| p.0)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Spectrum {
        Spectrum::from_weighted(self.pairs.iter().map(|&(v, m)| (f(v), m)).collect(), self.merge_tol)
    }

    /// Multiplicity of the entry within `tol` of `value`, or zero.
    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.pairs
            .iter()
            .filter(|p| (p.0 - value).abs() <= tol)
            .map(|p| p.1)
            .sum()
    }

    /// Largest deviation between sorted flattened values, or `None` when the
    /// total multiplicities differ.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.flatten()
                .iter()
                .zip(other.flatten())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// True when both spectra have the same size and their sorted values agree
/// within `tol`.
pub fn spectra_equal(s1: &Spectrum, s2: &Spectrum, tol: f64) -> bool {
    s1.max_deviation(s2).is_some_and(|d| d <= tol)
}
