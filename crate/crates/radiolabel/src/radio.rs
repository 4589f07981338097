//! Labelings, the radio condition, and violation reporting.
//!
//! A labeling assigns distinct positive integers to vertices. It is a radio
//! labeling when every vertex pair `(u, v)` satisfies
//! `d(u, v) + |c(u) - c(v)| >= diam(G) + 1`. [`check`] is the ground-truth
//! verifier the rest of the crate is tested against: it examines every
//! unordered pair and returns the full violation list.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// A (possibly partial) assignment of positive integer labels to vertices.
///
/// Injectivity and totality are relative to a graph, so they are enforced by
/// [`check`] rather than at construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    labels: BTreeMap<VertexId, u32>,
}

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: VertexId, label: u32) {
        self.labels.insert(v, label);
    }

    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.labels.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Largest label in use; `None` for an empty labeling.
    pub fn span(&self) -> Option<u32> {
        self.labels.values().copied().max()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.labels.iter().map(|(&v, &c)| (v, c))
    }

    /// Adds `k` to every label. Label gaps are unchanged, so validity is
    /// preserved for any `k >= 0`.
    pub fn translated(&self, k: u32) -> Labeling {
        Labeling {
            labels: self.labels.iter().map(|(&v, &c)| (v, c + k)).collect(),
        }
    }
}

impl FromIterator<(VertexId, u32)> for Labeling {
    fn from_iter<T: IntoIterator<Item = (VertexId, u32)>>(iter: T) -> Self {
        Labeling {
            labels: iter.into_iter().collect(),
        }
    }
}

/// A vertex pair breaking the radio condition:
/// `distance + label_gap < required` where `required = diam + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub distance: u32,
    pub label_gap: u32,
    pub required: u32,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}) d={} gap={} need={}",
            self.u, self.v, self.distance, self.label_gap, self.required
        )
    }
}

/// Ill-formed labeling input. These are errors, not violations: a labeling
/// must be total, injective and positive before the radio condition is even
/// evaluated.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RadioError {
    #[error("vertex {0} has no label")]
    MissingLabel(VertexId),
    #[error("label assigned to vertex {0}, which is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertex {0} has label 0; labels must be positive")]
    ZeroLabel(VertexId),
    #[error("label {label} assigned to both vertex {first} and vertex {second}")]
    DuplicateLabel {
        label: u32,
        first: VertexId,
        second: VertexId,
    },
}

/// Checks the radio condition for every unordered vertex pair and returns
/// the exhaustive list of violations; an empty list means `labeling` is a
/// valid radio labeling of `g`.
pub fn check(g: &Graph, labeling: &Labeling) -> Result<Vec<Violation>, RadioError> {
    let n = g.n_vertices();
    let mut labels = vec![0u32; n];
    for (v, c) in labeling.iter() {
        if v.0 >= n {
            return Err(RadioError::UnknownVertex(v));
        }
        if c == 0 {
            return Err(RadioError::ZeroLabel(v));
        }
        labels[v.0] = c;
    }
    for v in g.vertices() {
        if labels[v.0] == 0 {
            return Err(RadioError::MissingLabel(v));
        }
    }
    let mut by_label: BTreeMap<u32, VertexId> = BTreeMap::new();
    for v in g.vertices() {
        if let Some(&first) = by_label.get(&labels[v.0]) {
            return Err(RadioError::DuplicateLabel {
                label: labels[v.0],
                first,
                second: v,
            });
        }
        by_label.insert(labels[v.0], v);
    }

    let dm = g.distances();
    let required = dm.diameter() + 1;
    let mut violations = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let distance = dm.distance(VertexId(u), VertexId(v));
            let label_gap = labels[u].abs_diff(labels[v]);
            if distance + label_gap < required {
                violations.push(Violation {
                    u: VertexId(u),
                    v: VertexId(v),
                    distance,
                    label_gap,
                    required,
                });
            }
        }
    }
    Ok(violations)
}
