//! Standard finite graphs and the per-index algorithms: distances,
//! eccentricities, spanning trees, Eulerian circuits, Hamiltonian criteria
//! with a brute-force oracle, and greedy coloring.
//!
//! Graphs are simple: edges are two-element sets of vertex indices, no
//! self-loops, no multiedges.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) is a self-loop")]
    SelfLoop { u: usize, v: usize },
    #[error("vertex {v} is out of range for {p} vertices")]
    VertexOutOfRange { v: usize, p: usize },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertices are unreachable from each other")]
    Unreachable,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not Eulerian")]
    NotEulerian,
    #[error("graph has {p} vertices; the exhaustive search is capped at {cap}")]
    TooLargeForBruteForce { p: usize, cap: usize },
    #[error("graph has fewer than three vertices")]
    FewerThanThreeVertices,
    #[error("graph text, line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>, // stored with u < v
}

impl FiniteGraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { u, v });
            }
            let w = u.max(v);
            if w >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    v: w,
                    p: vertex_count,
                });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(FiniteGraph {
            vertex_count,
            edges: set,
        })
    }

    pub fn edgeless(vertex_count: usize) -> Result<Self, GraphError> {
        FiniteGraph::new(vertex_count, [])
    }

    /// Path 0-1-...-(p-1).
    pub fn path(vertex_count: usize) -> Result<Self, GraphError> {
        FiniteGraph::new(vertex_count, (1..vertex_count).map(|v| (v - 1, v)))
    }

    /// Cycle 0-1-...-(p-1)-0; needs at least three vertices.
    pub fn cycle(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count < 3 {
            return Err(GraphError::FewerThanThreeVertices);
        }
        let wrap = [(0, vertex_count - 1)];
        FiniteGraph::new(
            vertex_count,
            (1..vertex_count).map(|v| (v - 1, v)).chain(wrap),
        )
    }

    pub fn complete(vertex_count: usize) -> Result<Self, GraphError> {
        let edges = (0..vertex_count)
            .flat_map(|u| (u + 1..vertex_count).map(move |v| (u, v)));
        FiniteGraph::new(vertex_count, edges)
    }

    /// Hub is vertex 0, leaves are 1..=leaf_count.
    pub fn star(leaf_count: usize) -> Result<Self, GraphError> {
        FiniteGraph::new(leaf_count + 1, (1..=leaf_count).map(|v| (0, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Neighbor lists in ascending order (the tie-break order used by every
    /// deterministic algorithm here).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Subgraph induced by the given vertices, relabeled 0.. in ascending
    /// order of the original indices.
    pub fn induced(&self, vertices: &BTreeSet<usize>) -> Result<FiniteGraph, GraphError> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.vertex_count) {
            return Err(GraphError::VertexOutOfRange {
                v,
                p: self.vertex_count,
            });
        }
        let relabel: alloc::collections::BTreeMap<usize, usize> = vertices
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| relabel.contains_key(u) && relabel.contains_key(v))
            .map(|(u, v)| (relabel[u], relabel[v]));
        FiniteGraph::new(vertices.len(), edges)
    }

    fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.vertex_count];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for &v in &adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn shortest_distance(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    v: w,
                    p: self.vertex_count,
                });
            }
        }
        self.bfs_distances(u)[v].ok_or(GraphError::Unreachable)
    }

    /// BFS shortest path with lowest-index tie-breaking.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Walk, GraphError> {
        let dist = self.bfs_distances(u);
        if dist[v].is_none() {
            return Err(GraphError::Unreachable);
        }
        // walk back from v, always through the smallest eligible predecessor
        let adj = self.adjacency();
        let mut verts = vec![v];
        let mut cur = v;
        while cur != u {
            let d = dist[cur].expect("on a reached vertex");
            let prev = adj[cur]
                .iter()
                .copied()
                .find(|&w| dist[w] == Some(d - 1))
                .expect("BFS predecessor exists");
            verts.push(prev);
            cur = prev;
        }
        verts.reverse();
        Ok(Walk::new(verts))
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Per-vertex eccentricities together with radius and diameter.
    pub fn eccentricity_radius_diameter(
        &self,
    ) -> Result<(Vec<usize>, usize, usize), GraphError> {
        let mut eccentricities = Vec::with_capacity(self.vertex_count);
        for v in 0..self.vertex_count {
            let far = self
                .bfs_distances(v)
                .into_iter()
                .map(|d| d.ok_or(GraphError::Disconnected))
                .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))?;
            eccentricities.push(far);
        }
        let radius = *eccentricities.iter().min().expect("at least one vertex");
        let diameter = *eccentricities.iter().max().expect("at least one vertex");
        Ok((eccentricities, radius, diameter))
    }

    /// BFS spanning tree rooted at 0, ascending-order traversal.
    pub fn spanning_tree(&self) -> Result<FiniteGraph, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut edges = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    edges.push((u, v));
                    queue.push_back(v);
                }
            }
        }
        FiniteGraph::new(self.vertex_count, edges)
    }

    /// `q - p + 1` for a connected graph: the number of independent loops.
    pub fn cyclomatic_number(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.edges.len() + 1 - self.vertex_count)
    }

    /// Connected with every degree even.
    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.degrees().iter().all(|d| d % 2 == 0)
    }

    /// Deterministic Hierholzer construction: a closed trail using every
    /// edge exactly once and meeting every vertex.
    pub fn eulerian_circuit(&self) -> Result<Walk, GraphError> {
        if !self.is_eulerian() {
            return Err(GraphError::NotEulerian);
        }
        let adj = self.adjacency();
        let mut next = vec![0usize; self.vertex_count];
        let mut used_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut stack = vec![0usize];
        let mut circuit = Vec::new();
        while let Some(&u) = stack.last() {
            let mut advanced = false;
            while next[u] < adj[u].len() {
                let v = adj[u][next[u]];
                let key = (u.min(v), u.max(v));
                if used_edges.contains(&key) {
                    next[u] += 1;
                } else {
                    used_edges.insert(key);
                    stack.push(v);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                circuit.push(stack.pop().expect("stack is nonempty"));
            }
        }
        circuit.reverse();
        Ok(Walk::new(circuit))
    }

    /// Sufficient-degree criteria for Hamiltonicity; each implies the graph
    /// is Hamiltonian but not conversely.
    pub fn hamiltonian_criteria(&self) -> Result<HamiltonianCriteria, GraphError> {
        let p = self.vertex_count;
        if p < 3 {
            return Err(GraphError::FewerThanThreeVertices);
        }
        let degrees = self.degrees();
        let dirac = degrees.iter().all(|&d| 2 * d >= p);
        let ore = (0..p).all(|u| {
            (u + 1..p).all(|v| self.has_edge(u, v) || degrees[u] + degrees[v] >= p)
        });
        let posa = (1..p)
            .take_while(|&j| 2 * j < p)
            .all(|j| degrees.iter().filter(|&&d| d <= j).count() < j);
        Ok(HamiltonianCriteria { dirac, ore, posa })
    }

    /// Exhaustive search for a spanning loop; the oracle the criteria are
    /// checked against.
    pub fn brute_force_hamiltonian(&self) -> Result<bool, GraphError> {
        const CAP: usize = 10;
        let p = self.vertex_count;
        if p > CAP {
            return Err(GraphError::TooLargeForBruteForce { p, cap: CAP });
        }
        if p < 3 {
            return Ok(false);
        }
        let adj = self.adjacency();
        let mut visited = vec![false; p];
        visited[0] = true;
        fn extend(
            adj: &[Vec<usize>],
            visited: &mut [bool],
            current: usize,
            placed: usize,
        ) -> bool {
            if placed == adj.len() {
                return adj[current].contains(&0);
            }
            for &v in &adj[current] {
                if !visited[v] {
                    visited[v] = true;
                    if extend(adj, visited, v, placed + 1) {
                        return true;
                    }
                    visited[v] = false;
                }
            }
            false
        }
        Ok(extend(&adj, &mut visited, 0, 1))
    }

    /// Greedy coloring in ascending vertex order with the smallest available
    /// color; colors come from `1..=max_degree+1`.
    pub fn greedy_coloring(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut colors = vec![0usize; self.vertex_count];
        for v in 0..self.vertex_count {
            let taken: BTreeSet<usize> = adj[v]
                .iter()
                .filter(|&&u| u < v)
                .map(|&u| colors[u])
                .collect();
            colors[v] = (1..).find(|c| !taken.contains(c)).expect("some color is free");
        }
        colors
    }

    /// Every vertex colored within the palette and no edge monochromatic.
    pub fn verify_coloring(&self, colors: &[usize], palette_size: usize) -> bool {
        colors.len() == self.vertex_count
            && colors.iter().all(|&c| 1 <= c && c <= palette_size)
            && self.edges.iter().all(|&(u, v)| colors[u] != colors[v])
    }

    /// Parses the plain text format: first line `p q`, then `q` lines
    /// `u v` with `0 <= u < v < p`; blank lines and `#` comments ignored.
    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
            .filter(|(_, line)| !line.is_empty());
        let (line_no, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing `p q` header".into(),
        })?;
        let mut parts = header.split_whitespace();
        let parse_nat = |line: usize, field: Option<&str>, what: &str| -> Result<usize, GraphError> {
            field
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| GraphError::Parse {
                    line,
                    msg: format!("expected {what}"),
                })
        };
        let p = parse_nat(line_no, parts.next(), "vertex count")?;
        let q = parse_nat(line_no, parts.next(), "edge count")?;
        if parts.next().is_some() {
            return Err(GraphError::Parse {
                line: line_no,
                msg: "trailing fields after `p q`".into(),
            });
        }
        let mut edges = Vec::with_capacity(q);
        for (line_no, line) in lines {
            let mut parts = line.split_whitespace();
            let u = parse_nat(line_no, parts.next(), "edge endpoint")?;
            let v = parse_nat(line_no, parts.next(), "edge endpoint")?;
            if parts.next().is_some() {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: "trailing fields after edge".into(),
                });
            }
            if u >= v {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: format!("edge must satisfy u < v, got {u} {v}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != q {
            return Err(GraphError::Parse {
                line: line_no,
                msg: format!("header promised {q} edges, found {}", edges.len()),
            });
        }
        let dedup: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
        if dedup.len() != edges.len() {
            return Err(GraphError::Parse {
                line: line_no,
                msg: "duplicate edge".into(),
            });
        }
        FiniteGraph::new(p, edges).map_err(|e| GraphError::Parse {
            line: line_no,
            msg: format!("{e}"),
        })
    }

    /// Canonical text form; `parse_text` round-trips it.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Outcome of the three sufficient Hamiltonicity conditions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HamiltonianCriteria {
    pub dirac: bool,
    pub ore: bool,
    pub posa: bool,
}

/// A vertex sequence in a graph; trails, paths, closed trails, and loops are
/// walks with extra requirements checked by the predicates below.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Self {
        Walk { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    /// Consecutive vertices joined by edges of the graph.
    pub fn is_walk_in(&self, graph: &FiniteGraph) -> bool {
        !self.vertices.is_empty()
            && self.vertices.iter().all(|&v| v < graph.vertex_count())
            && self.edges().all(|(u, v)| graph.has_edge(u, v))
    }

    /// A walk whose edges are pairwise distinct.
    pub fn is_trail_in(&self, graph: &FiniteGraph) -> bool {
        let distinct: BTreeSet<(usize, usize)> = self.edges().collect();
        self.is_walk_in(graph) && distinct.len() == self.len()
    }

    /// A trail whose vertices are pairwise distinct.
    pub fn is_path_in(&self, graph: &FiniteGraph) -> bool {
        let distinct: BTreeSet<usize> = self.vertices.iter().copied().collect();
        self.is_trail_in(graph) && distinct.len() == self.vertices.len()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() >= 2 && self.vertices.first() == self.vertices.last()
    }

    pub fn is_closed_trail_in(&self, graph: &FiniteGraph) -> bool {
        self.is_closed() && self.is_trail_in(graph)
    }

    /// A closed trail whose vertices are distinct except for the repeated
    /// endpoint.
    pub fn is_loop_in(&self, graph: &FiniteGraph) -> bool {
        let inner: BTreeSet<usize> = self.vertices[..self.vertices.len().saturating_sub(1)]
            .iter()
            .copied()
            .collect();
        self.is_closed_trail_in(graph) && inner.len() + 1 == self.vertices.len()
    }

    /// The circuit uses every edge of the graph exactly once and meets every
    /// vertex.
    pub fn is_eulerian_circuit_of(&self, graph: &FiniteGraph) -> bool {
        let visited: BTreeSet<usize> = self.vertices.iter().copied().collect();
        let covered: BTreeSet<(usize, usize)> = self.edges().collect();
        let closed_enough = if graph.edge_count() == 0 {
            self.vertices.len() == 1
        } else {
            self.is_closed_trail_in(graph)
        };
        closed_enough
            && visited.len() == graph.vertex_count()
            && covered.len() == graph.edge_count()
    }
}
