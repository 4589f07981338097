//! Shared test helpers: a brute-force radio-number oracle that enumerates
//! label assignments directly against the definition, with none of the
//! solver's ordering, interval or counting machinery.

use radiolabel::graph::{Graph, VertexId};
use radiolabel::radio::Labeling;

/// Smallest span admitting a radio labeling, found by plain enumeration:
/// vertices in id order, every value `1..=span` tried, pairs checked
/// against `d(u, v) + |c(u) - c(v)| >= diam + 1` as stated.
pub fn brute_force_radio_number(g: &Graph) -> (u32, Labeling) {
    let n = g.n_vertices() as u32;
    for span in n.. {
        let mut assignment = vec![0u32; g.n_vertices()];
        if extend(g, span, 0, &mut assignment) {
            let labeling = assignment
                .iter()
                .enumerate()
                .map(|(v, &c)| (VertexId(v), c))
                .collect();
            return (span, labeling);
        }
    }
    unreachable!("every connected graph admits a radio labeling");
}

fn extend(g: &Graph, span: u32, vertex: usize, assignment: &mut Vec<u32>) -> bool {
    if vertex == g.n_vertices() {
        return true;
    }
    let required = g.diameter() + 1;
    'values: for value in 1..=span {
        for (earlier, &label) in assignment[..vertex].iter().enumerate() {
            let distance = g.distance(VertexId(earlier), VertexId(vertex));
            if distance + label.abs_diff(value) < required {
                continue 'values;
            }
        }
        assignment[vertex] = value;
        if extend(g, span, vertex + 1, assignment) {
            return true;
        }
        assignment[vertex] = 0;
    }
    false
}
