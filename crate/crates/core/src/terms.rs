//! Sparse coefficient storage keyed by monomials whose exponents are
//! floating-point, so keys merge under approximate equality.

use crate::coefficients::C64;

/// Coefficients with modulus below this are dropped.
pub const PRUNE_TOL: f64 = 1e-14;

/// Relative tolerance for identifying exponential exponents.
pub const EXPONENT_TOL: f64 = 1e-10;

pub(crate) fn exponent_close(a: C64, b: C64) -> bool {
    (a - b).norm() <= EXPONENT_TOL * a.norm().max(b.norm()).max(1.0)
}

pub(crate) trait TermKey: Clone {
    fn same(&self, other: &Self) -> bool;
}

#[derive(Debug, Clone)]
pub(crate) struct TermMap<K> {
    entries: Vec<(K, C64)>,
}

impl<K> Default for TermMap<K> {
    fn default() -> Self {
        Self {
            entries: Vec::new(),
        }
    }
}

impl<K: TermKey> TermMap<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: K, coeff: C64) {
        if coeff.norm() == 0.0 {
            return;
        }
        if let Some(i) = self.entries.iter().position(|(k, _)| k.same(&key)) {
            let sum = self.entries[i].1 + coeff;
            if sum.norm() < PRUNE_TOL {
                self.entries.swap_remove(i);
            } else {
                self.entries[i].1 = sum;
            }
        } else if coeff.norm() >= PRUNE_TOL {
            self.entries.push((key, coeff));
        }
    }

    pub fn get(&self, key: &K) -> C64 {
        self.entries
            .iter()
            .find(|(k, _)| k.same(key))
            .map(|(_, c)| *c)
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(K, C64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_modulus(&self) -> f64 {
        self.entries
            .iter()
            .map(|(_, c)| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&K, C64) -> C64) -> Self {
        let mut out = Self::new();
        for (k, c) in &self.entries {
            out.insert(k.clone(), f(k, *c));
        }
        out
    }

    /// Largest coefficient difference over the union of keys, normalised by
    /// `max(1, largest coefficient modulus)`.
    pub fn residual(&self, other: &Self) -> f64 {
        let mut diff = 0.0f64;
        for (k, c) in &self.entries {
            diff = diff.max((*c - other.get(k)).norm());
        }
        for (k, c) in &other.entries {
            if !self.entries.iter().any(|(j, _)| j.same(k)) {
                diff = diff.max(c.norm());
            }
        }
        diff / self.max_modulus().max(other.max_modulus()).max(1.0)
    }

    /// Largest termwise relative difference `|a − b| / max(|a|, |b|)`, over
    /// keys whose larger coefficient exceeds `floor` times the overall scale.
    pub fn relative_discrepancy(&self, other: &Self, floor: f64) -> f64 {
        let cutoff = floor * self.max_modulus().max(other.max_modulus());
        let mut worst = 0.0f64;
        let keys = self
            .entries
            .iter()
            .chain(other.entries.iter())
            .map(|(k, _)| k);
        for k in keys {
            let (a, b) = (self.get(k), other.get(k));
            let scale = a.norm().max(b.norm());
            if scale > cutoff && scale > 0.0 {
                worst = worst.max((a - b).norm() / scale);
            }
        }
        worst
    }
}

/// Outcome of an approximate comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub equal: bool,
    pub residual: f64,
}

impl Comparison {
    pub fn new(residual: f64, tol: f64) -> Self {
        Self {
            equal: residual <= tol,
            residual,
        }
    }
}
