//! Constructors for the supported graph families and their closed-form
//! radio numbers.
//!
//! Every constructor produces a fixed vertex layout so labels, bounds and
//! fixtures can refer to vertices by index:
//!
//! * complete `K_n`: vertices `0..n`, all `u_i`;
//! * star `S_n`: center at 0, leaves `1..=n` as `u_i`;
//! * complete bipartite `K_{m,n}`: first partition `0..m` as `u_1..u_m`,
//!   second partition as `u_{m+1}..u_{m+n}`;
//! * wheel `W_n`: center `z` at 0, cycle `v_1..v_n` at `1..=n`;
//! * gear `G_n`: center `z` at 0, spokes `v_1..v_n` at `1..=n`, rim
//!   `w_1..w_n` at `n+1..=2n`.
//!
//! The gear rim orientation depends on parity: for odd `n`, `w_i` sits
//! between `v_i` and `v_{i+1}`; for even `n`, between `v_{i-1}` and `v_i`.
//! Either way `w_1` is adjacent to `v_1`, and rim indices advance in the
//! same direction around the cycle as spoke indices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Role, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {param} >= {min}, got {got}")]
    ParameterTooSmall {
        family: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("no closed-form radio number for {family} with {detail}")]
    NoClosedForm {
        family: &'static str,
        detail: String,
    },
}

/// A graph family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { n: usize },
    Star { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Wheel { n: usize },
    Gear { n: usize },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Gear { .. } => "gear",
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let check = |family, param, min, got| {
            if got < min {
                Err(FamilyError::ParameterTooSmall {
                    family,
                    param,
                    min,
                    got,
                })
            } else {
                Ok(())
            }
        };
        match *self {
            FamilySpec::Complete { n } => check("complete", "n", 1, n),
            FamilySpec::Star { n } => check("star", "n", 2, n),
            FamilySpec::CompleteBipartite { m, n } => {
                check("complete_bipartite", "m", 1, m)?;
                check("complete_bipartite", "n", 1, n)
            }
            FamilySpec::Wheel { n } => check("wheel", "n", 3, n),
            FamilySpec::Gear { n } => check("gear", "n", 2, n),
        }
    }

    /// Builds the graph with the fixed layout described in the module docs.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let graph = match *self {
            FamilySpec::Complete { n } => {
                let mut edges = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        edges.push((i, j));
                    }
                }
                let roles = (1..=n).map(Role::Plain).collect();
                Graph::new(n, edges, roles)
            }
            FamilySpec::Star { n } => {
                let edges = (1..=n).map(|i| (0, i)).collect();
                let mut roles = vec![Role::Center];
                roles.extend((1..=n).map(Role::Plain));
                Graph::new(n + 1, edges, roles)
            }
            FamilySpec::CompleteBipartite { m, n } => {
                let mut edges = Vec::new();
                for i in 0..m {
                    for j in 0..n {
                        edges.push((i, m + j));
                    }
                }
                let roles = (1..=m + n).map(Role::Plain).collect();
                Graph::new(m + n, edges, roles)
            }
            FamilySpec::Wheel { n } => {
                let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
                for i in 1..n {
                    edges.push((i, i + 1));
                }
                edges.push((n, 1));
                let mut roles = vec![Role::Center];
                roles.extend((1..=n).map(Role::Spoke));
                Graph::new(n + 1, edges, roles)
            }
            FamilySpec::Gear { n } => {
                let spoke = |i: usize| i; // v_i at index i
                let rim = |i: usize| n + i; // w_i at index n + i
                let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, spoke(i))).collect();
                for i in 1..=n {
                    if n % 2 == 1 {
                        // w_i between v_i and v_{i+1}
                        edges.push((rim(i), spoke(i)));
                        edges.push((rim(i), spoke(i % n + 1)));
                    } else {
                        // w_i between v_{i-1} and v_i
                        edges.push((rim(i), spoke(i)));
                        edges.push((rim(i), spoke((i + n - 2) % n + 1)));
                    }
                }
                let mut roles = vec![Role::Center];
                roles.extend((1..=n).map(Role::Spoke));
                roles.extend((1..=n).map(Role::Rim));
                Graph::new(2 * n + 1, edges, roles)
            }
        };
        Ok(graph.expect("family constructors produce valid graphs"))
    }

    /// Closed-form radio number, where one is known.
    ///
    /// Gears with `n < 4` and the bipartite corner case `K_{1,1}` (which is
    /// `K_2`, with diameter 1 rather than 2) have no closed form here; use
    /// the exact solver for those.
    pub fn radio_number(&self) -> Result<u32, FamilyError> {
        self.validate()?;
        match *self {
            FamilySpec::Complete { n } => Ok(n as u32),
            FamilySpec::Star { n } => Ok(n as u32 + 2),
            FamilySpec::CompleteBipartite { m, n } => {
                if m + n < 3 {
                    return Err(FamilyError::NoClosedForm {
                        family: "complete_bipartite",
                        detail: "m = n = 1: K_{1,1} = K_2 has diameter 1, the m + n + 1 \
                                 formula assumes diameter 2"
                            .to_string(),
                    });
                }
                Ok((m + n) as u32 + 1)
            }
            FamilySpec::Wheel { n } => Ok(match n {
                3 => 4,
                4 => 7,
                _ => n as u32 + 2,
            }),
            FamilySpec::Gear { n } => {
                if n < 4 {
                    return Err(FamilyError::NoClosedForm {
                        family: "gear",
                        detail: format!("n = {n}: the 4n + 2 formula requires n >= 4"),
                    });
                }
                Ok(4 * n as u32 + 2)
            }
        }
    }
}

/// Returns `n` when `g` is structurally identical to `FamilySpec::Gear{n}`
/// in the standard layout (same vertex roles and same edge set).
pub fn as_standard_gear(g: &Graph) -> Option<usize> {
    let n_vertices = g.n_vertices();
    if n_vertices < 5 || n_vertices.is_multiple_of(2) {
        return None;
    }
    let n = n_vertices / 2;
    let reference = FamilySpec::Gear { n }.build().ok()?;
    if g.roles() == reference.roles() && g.edges() == reference.edges() {
        Some(n)
    } else {
        None
    }
}

/// Vertex ids of the standard gear layout.
pub fn gear_center() -> VertexId {
    VertexId(0)
}

pub fn gear_spoke(_n: usize, i: usize) -> VertexId {
    VertexId(i)
}

pub fn gear_rim(n: usize, i: usize) -> VertexId {
    VertexId(n + i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neighbors_of(g: &Graph, v: VertexId) -> Vec<Role> {
        g.neighbors(v).iter().map(|&u| g.role(u)).collect()
    }

    #[test]
    fn gear_8_layout() {
        let g = FamilySpec::Gear { n: 8 }.build().unwrap();
        assert_eq!(g.n_vertices(), 17);
        assert_eq!(g.n_edges(), 24);
        // even case: w_1 adjacent to v_1 and v_8
        let w1 = g.find_role(Role::Rim(1)).unwrap();
        let mut ns = neighbors_of(&g, w1);
        ns.sort();
        assert_eq!(ns, vec![Role::Spoke(1), Role::Spoke(8)]);
        assert_eq!(g.diameter(), 4);
    }

    #[test]
    fn gear_9_layout() {
        let g = FamilySpec::Gear { n: 9 }.build().unwrap();
        assert_eq!(g.n_vertices(), 19);
        assert_eq!(g.n_edges(), 27);
        // odd case: w_1 adjacent to v_1 and v_2
        let w1 = g.find_role(Role::Rim(1)).unwrap();
        let mut ns = neighbors_of(&g, w1);
        ns.sort();
        assert_eq!(ns, vec![Role::Spoke(1), Role::Spoke(2)]);
    }

    #[test]
    fn gear_rims_advance_with_spokes() {
        for n in [5usize, 8] {
            let g = FamilySpec::Gear { n }.build().unwrap();
            for i in 1..=n {
                let w = g.find_role(Role::Rim(i)).unwrap();
                assert_eq!(g.degree(w), 2);
                let expected: Vec<usize> = if n % 2 == 1 {
                    vec![i, i % n + 1]
                } else {
                    vec![(i + n - 2) % n + 1, i]
                };
                let mut actual: Vec<usize> = g
                    .neighbors(w)
                    .iter()
                    .map(|&u| g.role(u).index().unwrap())
                    .collect();
                actual.sort();
                let mut expected = expected;
                expected.sort();
                assert_eq!(actual, expected, "rim w_{i} of G_{n}");
            }
        }
    }

    #[test]
    fn wheel_3_is_complete() {
        let g = FamilySpec::Wheel { n: 3 }.build().unwrap();
        assert_eq!(g.n_vertices(), 4);
        for u in g.vertices() {
            for v in g.vertices() {
                if u != v {
                    assert_eq!(g.distance(u, v), 1);
                }
            }
        }
    }

    #[test]
    fn gear_vertex_and_edge_counts() {
        for n in 2..=64 {
            let g = FamilySpec::Gear { n }.build().unwrap();
            assert_eq!(g.n_vertices(), 2 * n + 1);
            assert_eq!(g.n_edges(), 3 * n);
        }
    }

    #[test]
    fn family_diameters() {
        for n in 2..=16 {
            assert_eq!(FamilySpec::Complete { n }.build().unwrap().diameter(), 1);
        }
        for n in 2..=64 {
            assert_eq!(FamilySpec::Star { n }.build().unwrap().diameter(), 2);
        }
        for n in 4..=64 {
            assert_eq!(FamilySpec::Wheel { n }.build().unwrap().diameter(), 2);
        }
        assert_eq!(FamilySpec::Wheel { n: 3 }.build().unwrap().diameter(), 1);
        for n in 4..=64 {
            assert_eq!(FamilySpec::Gear { n }.build().unwrap().diameter(), 4);
        }
    }

    #[test]
    fn gear_eccentricities() {
        let g = FamilySpec::Gear { n: 8 }.build().unwrap();
        assert_eq!(g.eccentricity(gear_center()), 2);
        for i in 1..=8 {
            assert_eq!(g.eccentricity(gear_spoke(8, i)), 3);
            assert_eq!(g.eccentricity(gear_rim(8, i)), 4);
        }
    }

    #[test]
    fn spokes_pairwise_distance_two() {
        for n in 4..=64 {
            let g = FamilySpec::Gear { n }.build().unwrap();
            for i in 1..=n {
                for j in i + 1..=n {
                    assert_eq!(g.distance(gear_spoke(n, i), gear_spoke(n, j)), 2);
                }
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(FamilySpec::Gear { n: 8 }.radio_number().unwrap(), 34);
        assert_eq!(FamilySpec::Wheel { n: 4 }.radio_number().unwrap(), 7);
        assert_eq!(FamilySpec::Wheel { n: 3 }.radio_number().unwrap(), 4);
        assert_eq!(
            FamilySpec::CompleteBipartite { m: 1, n: 5 }
                .radio_number()
                .unwrap(),
            7
        );
        assert_eq!(FamilySpec::Star { n: 5 }.radio_number().unwrap(), 7);
        assert!(matches!(
            FamilySpec::Gear { n: 3 }.radio_number(),
            Err(FamilyError::NoClosedForm { .. })
        ));
        assert!(matches!(
            FamilySpec::CompleteBipartite { m: 1, n: 1 }.radio_number(),
            Err(FamilyError::NoClosedForm { .. })
        ));
    }

    #[test]
    fn parameter_bounds_enforced() {
        assert!(matches!(
            FamilySpec::Star { n: 1 }.build(),
            Err(FamilyError::ParameterTooSmall { min: 2, .. })
        ));
        assert!(matches!(
            FamilySpec::Wheel { n: 2 }.build(),
            Err(FamilyError::ParameterTooSmall { min: 3, .. })
        ));
        assert!(matches!(
            FamilySpec::Gear { n: 1 }.build(),
            Err(FamilyError::ParameterTooSmall { min: 2, .. })
        ));
        assert!(FamilySpec::Complete { n: 1 }.build().is_ok());
    }

    #[test]
    fn standard_gear_detection() {
        let g = FamilySpec::Gear { n: 6 }.build().unwrap();
        assert_eq!(as_standard_gear(&g), Some(6));
        let w = FamilySpec::Wheel { n: 6 }.build().unwrap();
        assert_eq!(as_standard_gear(&w), None);
    }

    #[test]
    fn deleting_gear_center_leaves_even_cycle() {
        for n in (2..=32).chain([64]) {
            let g = FamilySpec::Gear { n }.build().unwrap();
            // induced subgraph on vertices 1..=2n
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .filter(|(u, v)| u.0 != 0 && v.0 != 0)
                .map(|(u, v)| (u.0 - 1, v.0 - 1))
                .collect();
            assert_eq!(edges.len(), 2 * n);
            let roles = (1..=2 * n).map(Role::Plain).collect();
            let cycle = Graph::new(2 * n, edges, roles);
            let cycle = cycle.expect("cycle must stay connected");
            assert!(cycle.vertices().all(|v| cycle.degree(v) == 2));
        }
    }
}
