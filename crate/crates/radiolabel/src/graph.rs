//! Immutable simple connected graphs with role-tagged vertices and cached
//! all-pairs distances.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Dense 0-based vertex index into the owning graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.0 as u64)
    }
}

// Accepts both numbers and digit strings: JSON object keys arrive as
// strings, and serde's internal buffering (tagged enums) loses the
// key-to-integer conversion serde_json would otherwise do.
impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IdVisitor;
        impl serde::de::Visitor<'_> for IdVisitor {
            type Value = VertexId;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a vertex index")
            }

            fn visit_u64<E: serde::de::Error>(self, value: u64) -> Result<VertexId, E> {
                Ok(VertexId(value as usize))
            }

            fn visit_i64<E: serde::de::Error>(self, value: i64) -> Result<VertexId, E> {
                usize::try_from(value)
                    .map(VertexId)
                    .map_err(|_| E::custom("vertex index must be non-negative"))
            }

            fn visit_str<E: serde::de::Error>(self, value: &str) -> Result<VertexId, E> {
                value
                    .parse()
                    .map(VertexId)
                    .map_err(|_| E::custom(format!("invalid vertex index {value:?}")))
            }
        }
        deserializer.deserialize_any(IdVisitor)
    }
}

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Structural role of a vertex. Indices are 1-based, following the naming
/// used by the family constructors: `z` (center), `v_i` (spokes, adjacent to
/// the center), `w_i` (rim vertices of a gear), `u_i` (everything else).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Center,
    Spoke(usize),
    Rim(usize),
    Plain(usize),
}

impl Role {
    /// Display name used in DOT output and the JSON role map.
    pub fn name(&self) -> String {
        match self {
            Role::Center => "center".to_string(),
            Role::Spoke(i) => format!("v{i}"),
            Role::Rim(i) => format!("w{i}"),
            Role::Plain(i) => format!("u{i}"),
        }
    }

    /// Short node label for DOT output (`z` for the center).
    pub fn dot_label(&self) -> String {
        match self {
            Role::Center => "z".to_string(),
            _ => self.name(),
        }
    }

    /// The role's 1-based index (`None` for the center).
    pub fn index(&self) -> Option<usize> {
        match self {
            Role::Center => None,
            Role::Spoke(i) | Role::Rim(i) | Role::Plain(i) => Some(*i),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "center" {
            return Ok(Role::Center);
        }
        let (prefix, digits) = s.split_at(1.min(s.len()));
        let index: usize = digits
            .parse()
            .map_err(|_| format!("invalid role string {s:?}"))?;
        if index == 0 {
            return Err(format!("role index must be 1-based, got {s:?}"));
        }
        match prefix {
            "v" => Ok(Role::Spoke(index)),
            "w" => Ok(Role::Rim(index)),
            "u" => Ok(Role::Plain(index)),
            _ => Err(format!("invalid role string {s:?}")),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Role {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge endpoint {endpoint} out of range for {n_vertices} vertices")]
    EndpointOutOfRange { endpoint: usize, n_vertices: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("graph is disconnected: no path from vertex {0} to vertex {1}")]
    Disconnected(VertexId, VertexId),
    #[error("expected {expected} roles, got {got}")]
    RoleCountMismatch { expected: usize, got: usize },
    #[error("role {role} assigned to both vertex {first} and vertex {second}")]
    DuplicateRole {
        role: Role,
        first: VertexId,
        second: VertexId,
    },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
}

/// All-pairs shortest-path distances (hop counts) with per-vertex
/// eccentricity and the graph diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    /// BFS from every vertex. Fails with the first unreachable pair if the
    /// graph is disconnected.
    fn compute(n: usize, adj: &[Vec<VertexId>]) -> Result<Self, GraphError> {
        let mut dist = vec![0u32; n * n];
        let mut ecc = vec![0u32; n];
        let mut queue = VecDeque::new();
        for source in 0..n {
            let row = &mut dist[source * n..(source + 1) * n];
            let mut seen = vec![false; n];
            seen[source] = true;
            queue.clear();
            queue.push_back(source);
            let mut reached = 1usize;
            while let Some(u) = queue.pop_front() {
                for &VertexId(v) in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        row[v] = row[u] + 1;
                        reached += 1;
                        queue.push_back(v);
                    }
                }
            }
            if reached != n {
                let missing = (0..n).find(|&v| !seen[v]).expect("some vertex unreached");
                return Err(GraphError::Disconnected(
                    VertexId(source),
                    VertexId(missing),
                ));
            }
            ecc[source] = row.iter().copied().max().unwrap_or(0);
        }
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        Ok(DistanceMatrix {
            n,
            dist,
            ecc,
            diameter,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> u32 {
        self.dist[u.0 * self.n + v.0]
    }

    pub fn eccentricity(&self, u: VertexId) -> u32 {
        self.ecc[u.0]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }
}

/// Immutable simple connected graph. Distances are computed once at
/// construction; all accessors are read-only, so a `Graph` can be shared
/// freely across threads.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
    roles: Vec<Role>,
    distances: DistanceMatrix,
}

impl Graph {
    /// Validates simplicity, connectivity and role uniqueness, then computes
    /// the distance matrix.
    pub fn new(
        n_vertices: usize,
        edges: Vec<(usize, usize)>,
        roles: Vec<Role>,
    ) -> Result<Self, GraphError> {
        if n_vertices == 0 {
            return Err(GraphError::Empty);
        }
        if roles.len() != n_vertices {
            return Err(GraphError::RoleCountMismatch {
                expected: n_vertices,
                got: roles.len(),
            });
        }
        let mut seen_roles: BTreeMap<Role, VertexId> = BTreeMap::new();
        for (i, role) in roles.iter().enumerate() {
            if let Some(&first) = seen_roles.get(role) {
                return Err(GraphError::DuplicateRole {
                    role: *role,
                    first,
                    second: VertexId(i),
                });
            }
            seen_roles.insert(*role, VertexId(i));
        }

        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            for endpoint in [a, b] {
                if endpoint >= n_vertices {
                    return Err(GraphError::EndpointOutOfRange {
                        endpoint,
                        n_vertices,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(VertexId(a)));
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            normalized.push((VertexId(lo), VertexId(hi)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adj = vec![Vec::new(); n_vertices];
        for &(u, v) in &normalized {
            adj[u.0].push(v);
            adj[v.0].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        let distances = DistanceMatrix::compute(n_vertices, &adj)?;
        Ok(Graph {
            n_vertices,
            edges: normalized,
            adj,
            roles,
            distances,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n_vertices).map(VertexId)
    }

    /// Normalized edge list: each pair ordered, list sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u.0]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adj[u.0].len()
    }

    pub fn role(&self, u: VertexId) -> Role {
        self.roles[u.0]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Vertex carrying the given role, if any.
    pub fn find_role(&self, role: Role) -> Option<VertexId> {
        self.roles.iter().position(|&r| r == role).map(VertexId)
    }

    /// Cached all-pairs distance matrix.
    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> u32 {
        self.distances.distance(u, v)
    }

    pub fn diameter(&self) -> u32 {
        self.distances.diameter()
    }

    pub fn eccentricity(&self, u: VertexId) -> u32 {
        self.distances.eccentricity(u)
    }

    /// DOT export with role-based node labels. Extra per-vertex annotation
    /// lines (e.g. assigned labels) are appended below the role name.
    pub fn to_dot(&self, annotations: &BTreeMap<VertexId, String>) -> String {
        let mut out = String::from("graph G {\n  node [shape=circle];\n");
        for v in self.vertices() {
            let mut label = self.role(v).dot_label();
            if let Some(extra) = annotations.get(&v) {
                label.push_str("\\n");
                label.push_str(extra);
            }
            out.push_str(&format!("  {} [label=\"{}\"];\n", v.0, label));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {} -- {};\n", u.0, v.0));
        }
        out.push_str("}\n");
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n_vertices == other.n_vertices
            && self.edges == other.edges
            && self.roles == other.roles
    }
}

impl Eq for Graph {}

/// Wire form of [`Graph`]:
/// `{"n_vertices": N, "edges": [[u,v],...], "roles": {"0": "center", ...}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub roles: BTreeMap<VertexId, Role>,
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n_vertices: g.n_vertices,
            edges: g.edges.iter().map(|&(u, v)| (u.0, v.0)).collect(),
            roles: g
                .roles
                .iter()
                .enumerate()
                .map(|(i, &r)| (VertexId(i), r))
                .collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(json: GraphJson) -> Result<Self, GraphError> {
        let mut roles = Vec::with_capacity(json.n_vertices);
        for i in 0..json.n_vertices {
            let role =
                json.roles
                    .get(&VertexId(i))
                    .copied()
                    .ok_or(GraphError::RoleCountMismatch {
                        expected: json.n_vertices,
                        got: json.roles.len(),
                    })?;
            roles.push(role);
        }
        if json.roles.len() != json.n_vertices {
            if let Some((&v, _)) = json.roles.iter().find(|(v, _)| v.0 >= json.n_vertices) {
                return Err(GraphError::VertexOutOfRange(v));
            }
            return Err(GraphError::RoleCountMismatch {
                expected: json.n_vertices,
                got: json.roles.len(),
            });
        }
        Graph::new(json.n_vertices, json.edges, roles)
    }
}
