//! Closed-form labelers for each supported family.
//!
//! Each function emits labels keyed to the standard layout produced by
//! [`crate::families::FamilySpec::build`]. All constructions run in O(n)
//! and are checked against the verifier in the test suite.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families;
use crate::graph::{Graph, VertexId};
use crate::radio::Labeling;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("{op} requires {param} >= {min}, got {got}")]
    ParameterTooSmall {
        op: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph is not a gear in the standard layout")]
    NotAGear,
    #[error(
        "no gear labeling construction for n = {n}; the explicit \
             construction needs n >= 7 and stored labelings cover 4 <= n <= 6"
    )]
    NoConstruction { n: usize },
}

fn require(
    op: &'static str,
    param: &'static str,
    min: usize,
    got: usize,
) -> Result<(), ConstructError> {
    if got < min {
        Err(ConstructError::ParameterTooSmall {
            op,
            param,
            min,
            got,
        })
    } else {
        Ok(())
    }
}

/// Labels `K_n` with consecutive integers `1..=n` (span `n`).
pub fn label_complete(n: usize) -> Result<Labeling, ConstructError> {
    require("label_complete", "n", 1, n)?;
    Ok((0..n).map(|i| (VertexId(i), i as u32 + 1)).collect())
}

/// Labels `S_n`: 1 on the center, then `3, 4, ..., n + 2` on the leaves
/// (span `n + 2`).
pub fn label_star(n: usize) -> Result<Labeling, ConstructError> {
    require("label_star", "n", 2, n)?;
    let mut c = Labeling::new();
    c.set(VertexId(0), 1);
    for i in 1..=n {
        c.set(VertexId(i), i as u32 + 2);
    }
    Ok(c)
}

/// Labels `K_{m,n}`: `1..=m` on the first partition and `m+2..=m+n+1` on
/// the second (span `m + n + 1`).
pub fn label_complete_bipartite(m: usize, n: usize) -> Result<Labeling, ConstructError> {
    require("label_complete_bipartite", "m", 1, m)?;
    require("label_complete_bipartite", "n", 1, n)?;
    let mut c = Labeling::new();
    for i in 0..m {
        c.set(VertexId(i), i as u32 + 1);
    }
    for j in 0..n {
        c.set(VertexId(m + j), (m + 2 + j) as u32);
    }
    Ok(c)
}

/// Labels `W_n` with span `n + 2` for `n >= 5`, plus the two small cases:
/// `W_3` (= `K_4`) gets `1..=4` and `W_4` gets 1 on the hub and `3, 6, 4, 7`
/// around the cycle (span 7).
pub fn label_wheel(n: usize) -> Result<Labeling, ConstructError> {
    require("label_wheel", "n", 3, n)?;
    let mut c = Labeling::new();
    c.set(VertexId(0), 1);
    match n {
        3 => {
            for i in 1..=3 {
                c.set(VertexId(i), i as u32 + 1);
            }
        }
        4 => {
            for (i, label) in [3u32, 6, 4, 7].into_iter().enumerate() {
                c.set(VertexId(i + 1), label);
            }
        }
        _ => {
            // first ceil(n/2) cycle vertices take consecutive odd labels
            // from 3, the rest consecutive even labels from 4
            let split = n.div_ceil(2);
            for i in 1..=split {
                c.set(VertexId(i), 2 * i as u32 + 1);
            }
            for (j, i) in (split + 1..=n).enumerate() {
                c.set(VertexId(i), 2 * j as u32 + 4);
            }
        }
    }
    Ok(c)
}

/// A bijection between gear vertices and positions `0..=2n`, ordered so
/// that the gear labeling is increasing in position index.
///
/// Position 0 is the center. Odd-indexed rim vertices come first, then
/// even-indexed rim vertices, then the spokes:
/// `{z, w_1, w_3, ..., w_2, w_4, ..., v_1, ..., v_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionAssignment {
    to_position: Vec<usize>,
    to_vertex: Vec<VertexId>,
}

impl PositionAssignment {
    pub fn position_of(&self, v: VertexId) -> usize {
        self.to_position[v.0]
    }

    pub fn vertex_at(&self, position: usize) -> VertexId {
        self.to_vertex[position]
    }

    pub fn len(&self) -> usize {
        self.to_vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_vertex.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.to_position
            .iter()
            .enumerate()
            .map(|(v, &p)| (VertexId(v), p))
    }
}

/// Computes the position bijection for a standard-layout gear.
///
/// With `n = 2k + 1` odd: `w_{2i-1}` at position `i` (`i = 1..=k+1`) and
/// `w_{2i}` at `k + 1 + i` (`i = 1..=k`). With `n = 2k` even: `w_{2i-1}`
/// at `i` and `w_{2i}` at `k + i` (`i = 1..=k`). Spokes sit at
/// `n + 1..=2n` in index order either way.
pub fn gear_positions(g: &Graph) -> Result<PositionAssignment, ConstructError> {
    let n = families::as_standard_gear(g).ok_or(ConstructError::NotAGear)?;
    let mut to_position = vec![usize::MAX; 2 * n + 1];
    to_position[families::gear_center().0] = 0;
    let k = n / 2;
    if n % 2 == 1 {
        for i in 1..=k + 1 {
            to_position[families::gear_rim(n, 2 * i - 1).0] = i;
        }
        for i in 1..=k {
            to_position[families::gear_rim(n, 2 * i).0] = k + 1 + i;
        }
    } else {
        for i in 1..=k {
            to_position[families::gear_rim(n, 2 * i - 1).0] = i;
            to_position[families::gear_rim(n, 2 * i).0] = k + i;
        }
    }
    for i in 1..=n {
        to_position[families::gear_spoke(n, i).0] = n + i;
    }
    let mut to_vertex = vec![VertexId(0); 2 * n + 1];
    for (v, &p) in to_position.iter().enumerate() {
        debug_assert_ne!(p, usize::MAX);
        to_vertex[p] = VertexId(v);
    }
    Ok(PositionAssignment {
        to_position,
        to_vertex,
    })
}

/// Label value at position `i` for the explicit gear construction:
/// 1 at the center, `3 + i` through the rim block, then steps of 3
/// across the spoke block up to `4n + 2`.
fn gear_label_at(n: usize, i: usize) -> u32 {
    let n = n as u32;
    let i = i as u32;
    if i == 0 {
        1
    } else if i <= n {
        3 + i
    } else {
        n + 2 + 3 * (i - n)
    }
}

/// Produces a radio labeling of a standard-layout gear with span `4n + 2`.
///
/// For `n >= 7` this is the explicit position-function construction; for
/// `4 <= n <= 6` stored solver-found labelings are returned. There is no
/// construction for `n <= 3`.
pub fn label_gear(g: &Graph) -> Result<Labeling, ConstructError> {
    let n = families::as_standard_gear(g).ok_or(ConstructError::NotAGear)?;
    match n {
        0..=3 => Err(ConstructError::NoConstruction { n }),
        4..=6 => {
            let values = fixtures::gear_fixture(n).expect("fixtures cover 4..=6");
            Ok(values
                .iter()
                .enumerate()
                .map(|(v, &c)| (VertexId(v), c))
                .collect())
        }
        _ => {
            let positions = gear_positions(g)?;
            Ok((0..=2 * n)
                .map(|i| (positions.vertex_at(i), gear_label_at(n, i)))
                .collect())
        }
    }
}

/// Stored optimal labelings for the small gears the explicit construction
/// does not cover. Values are indexed by vertex id in the standard layout
/// (center, spokes, rim) and were produced by the exact solver; the test
/// suite re-derives their spans from scratch.
pub mod fixtures {
    /// Span 18 labeling of the 4-gear.
    pub const GEAR_4: [u32; 9] = [1, 6, 10, 14, 18, 12, 16, 4, 8];
    /// Span 22 labeling of the 5-gear.
    pub const GEAR_5: [u32; 11] = [1, 6, 10, 14, 18, 22, 16, 20, 4, 8, 12];
    /// Span 26 labeling of the 6-gear.
    pub const GEAR_6: [u32; 13] = [1, 5, 8, 11, 14, 20, 26, 22, 17, 23, 18, 24, 16];

    pub fn gear_fixture(n: usize) -> Option<&'static [u32]> {
        match n {
            4 => Some(&GEAR_4),
            5 => Some(&GEAR_5),
            6 => Some(&GEAR_6),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gear_rim, gear_spoke, FamilySpec};
    use crate::radio::check;

    fn assert_valid(g: &Graph, c: &Labeling) {
        let violations = check(g, c).unwrap();
        assert!(
            violations.is_empty(),
            "unexpected violations: {violations:?}"
        );
    }

    #[test]
    fn complete_labelings() {
        let c = label_complete(4).unwrap();
        assert_eq!(
            (0..4)
                .map(|i| c.get(VertexId(i)).unwrap())
                .collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
        assert_eq!(label_complete(1).unwrap().span(), Some(1));
        let g = FamilySpec::Complete { n: 8 }.build().unwrap();
        let c = label_complete(8).unwrap();
        assert_eq!(c.span(), Some(8));
        assert_valid(&g, &c);
    }

    #[test]
    fn star_labelings() {
        let c = label_star(5).unwrap();
        assert_eq!(c.span(), Some(7));
        let c2 = label_star(2).unwrap();
        assert_eq!(c2.get(VertexId(0)), Some(1));
        assert_eq!(c2.get(VertexId(1)), Some(3));
        assert_eq!(c2.get(VertexId(2)), Some(4));
        let g = FamilySpec::Star { n: 10 }.build().unwrap();
        let c = label_star(10).unwrap();
        assert_eq!(c.span(), Some(12));
        assert_valid(&g, &c);
        assert!(matches!(
            label_star(1),
            Err(ConstructError::ParameterTooSmall { .. })
        ));
    }

    #[test]
    fn complete_bipartite_labelings() {
        let c = label_complete_bipartite(2, 3).unwrap();
        assert_eq!(c.span(), Some(6));
        assert_valid(
            &FamilySpec::CompleteBipartite { m: 2, n: 3 }
                .build()
                .unwrap(),
            &c,
        );

        let c = label_complete_bipartite(1, 1).unwrap();
        assert_eq!(c.get(VertexId(0)), Some(1));
        assert_eq!(c.get(VertexId(1)), Some(3));
        assert_valid(
            &FamilySpec::CompleteBipartite { m: 1, n: 1 }
                .build()
                .unwrap(),
            &c,
        );

        let c = label_complete_bipartite(3, 3).unwrap();
        assert_eq!(c.span(), Some(7));
        assert_valid(
            &FamilySpec::CompleteBipartite { m: 3, n: 3 }
                .build()
                .unwrap(),
            &c,
        );
    }

    #[test]
    fn wheel_labelings() {
        let c = label_wheel(5).unwrap();
        assert_eq!(c.get(VertexId(0)), Some(1));
        assert_eq!(
            (1..=5)
                .map(|i| c.get(VertexId(i)).unwrap())
                .collect::<Vec<_>>(),
            vec![3, 5, 7, 4, 6]
        );
        assert_eq!(c.span(), Some(7));
        assert_valid(&FamilySpec::Wheel { n: 5 }.build().unwrap(), &c);

        let c = label_wheel(4).unwrap();
        assert_eq!(c.span(), Some(7));
        assert_valid(&FamilySpec::Wheel { n: 4 }.build().unwrap(), &c);

        let c = label_wheel(3).unwrap();
        assert_eq!(c.span(), Some(4));
        assert_valid(&FamilySpec::Wheel { n: 3 }.build().unwrap(), &c);

        let c = label_wheel(8).unwrap();
        assert_eq!(c.span(), Some(10));
        assert_valid(&FamilySpec::Wheel { n: 8 }.build().unwrap(), &c);
    }

    #[test]
    fn gear_positions_odd_case() {
        let g = FamilySpec::Gear { n: 9 }.build().unwrap();
        let p = gear_positions(&g).unwrap();
        assert_eq!(p.position_of(VertexId(0)), 0);
        assert_eq!(p.position_of(gear_rim(9, 9)), 5);
        assert_eq!(p.position_of(gear_rim(9, 8)), 9);
        assert_eq!(p.position_of(gear_spoke(9, 1)), 10);
    }

    #[test]
    fn gear_positions_even_case() {
        let g = FamilySpec::Gear { n: 8 }.build().unwrap();
        let p = gear_positions(&g).unwrap();
        assert_eq!(p.position_of(VertexId(0)), 0);
        assert_eq!(p.position_of(gear_rim(8, 7)), 4);
        assert_eq!(p.position_of(gear_rim(8, 8)), 8);
        assert_eq!(p.position_of(gear_spoke(8, 8)), 16);
    }

    #[test]
    fn gear_positions_are_bijective() {
        for n in 2..=64 {
            let g = FamilySpec::Gear { n }.build().unwrap();
            let p = gear_positions(&g).unwrap();
            assert_eq!(p.len(), 2 * n + 1);
            for v in g.vertices() {
                assert_eq!(p.vertex_at(p.position_of(v)), v);
            }
            for pos in 0..p.len() {
                assert_eq!(p.position_of(p.vertex_at(pos)), pos);
            }
        }
    }

    #[test]
    fn gear_positions_reject_non_gears() {
        let g = FamilySpec::Wheel { n: 5 }.build().unwrap();
        assert_eq!(gear_positions(&g).unwrap_err(), ConstructError::NotAGear);
    }

    #[test]
    fn gear_labeling_matches_position_formula() {
        let g = FamilySpec::Gear { n: 9 }.build().unwrap();
        let p = gear_positions(&g).unwrap();
        let c = label_gear(&g).unwrap();
        assert_eq!(c.get(VertexId(0)), Some(1));
        let expect = |pos: usize| c.get(p.vertex_at(pos)).unwrap();
        assert_eq!(expect(1), 4);
        assert_eq!(expect(9), 12);
        assert_eq!(expect(10), 14);
        assert_eq!(expect(11), 17);
        assert_eq!(expect(18), 38);
        assert_eq!(c.span(), Some(38));
    }

    #[test]
    fn gear_labelings_are_valid_with_expected_span() {
        for n in [7usize, 8, 9, 12, 15] {
            let g = FamilySpec::Gear { n }.build().unwrap();
            let c = label_gear(&g).unwrap();
            assert_eq!(c.span(), Some(4 * n as u32 + 2), "span of G_{n}");
            assert_valid(&g, &c);
        }
    }

    #[test]
    fn stored_small_gear_labelings_are_valid() {
        for (n, span) in [(4usize, 18u32), (5, 22), (6, 26)] {
            let g = FamilySpec::Gear { n }.build().unwrap();
            let c = label_gear(&g).unwrap();
            assert_eq!(c.span(), Some(span), "span of stored G_{n} labeling");
            assert_valid(&g, &c);
        }
    }

    #[test]
    fn gear_labeling_rejects_tiny_n() {
        for n in [2usize, 3] {
            let g = FamilySpec::Gear { n }.build().unwrap();
            assert_eq!(
                label_gear(&g).unwrap_err(),
                ConstructError::NoConstruction { n }
            );
        }
    }
}
