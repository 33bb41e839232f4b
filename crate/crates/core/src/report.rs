//! Named residuals collected by the verifiers.

use std::fmt;

/// Relative difference of two scalars, normalised by `max(1, |a|, |b|)`.
pub fn scalar_residual(a: crate::coefficients::C64, b: crate::coefficients::C64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ResidualReport {
    entries: Vec<(String, f64)>,
}

impl ResidualReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `value`, keeping the maximum when `name` is already present.
    pub fn record(&mut self, name: &str, value: f64) {
        if let Some(e) = self.entries.iter_mut().find(|(n, _)| n == name) {
            e.1 = e.1.max(value);
        } else {
            self.entries.push((name.to_string(), value));
        }
    }

    pub fn merge(&mut self, other: &ResidualReport) {
        for (n, v) in &other.entries {
            self.record(n, *v);
        }
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.entries.iter().find(|(n, _)| n == name).map(|e| e.1)
    }

    pub fn entries(&self) -> &[(String, f64)] {
        &self.entries
    }

    /// Largest residual; NaN propagates so that it can never pass a bound.
    pub fn max(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, (_, v)| {
            if v.is_nan() || acc.is_nan() {
                f64::NAN
            } else {
                acc.max(*v)
            }
        })
    }

    pub fn within(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

impl fmt::Display for ResidualReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, v) in &self.entries {
            writeln!(f, "{n:<40} {v:.3e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::C64;

    #[test]
    fn record_keeps_the_maximum() {
        let mut r = ResidualReport::new();
        r.record("a", 1e-14);
        r.record("a", 1e-16);
        r.record("b", 1e-12);
        assert_eq!(r.get("a"), Some(1e-14));
        assert_eq!(r.max(), 1e-12);
        assert!(r.within(1e-12) && !r.within(1e-13));
        let mut other = ResidualReport::new();
        other.record("a", 1e-11);
        r.merge(&other);
        assert_eq!(r.get("a"), Some(1e-11));
        assert_eq!(r.entries().len(), 2);
    }

    #[test]
    fn nan_never_passes() {
        let mut r = ResidualReport::new();
        r.record("a", 0.0);
        r.record("b", f64::NAN);
        assert!(r.max().is_nan());
        assert!(!r.within(1.0));
    }

    #[test]
    fn scalar_residual_is_relative_above_one() {
        let (a, b) = (C64::new(1e6, 0.0), C64::new(1e6 + 1.0, 0.0));
        assert!((scalar_residual(a, b) - 1e-6).abs() < 1e-12);
        assert_eq!(
            scalar_residual(C64::new(1e-3, 0.0), C64::new(0.0, 0.0)),
            1e-3
        );
    }
}
