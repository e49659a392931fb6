//! Simple undirected graphs, degree sequences and the edge-list text format.
//!
//! Vertices are 0-based inside the crate. The text format and
//! [`Graph::from_edge_list`] are 1-based.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("SelfLoop at vertex {0}")]
    SelfLoop(usize),
    #[error("DuplicateEdge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("IsolatedVertex {0}")]
    IsolatedVertex(usize),
    #[error("Disconnected: graph has more than one component")]
    Disconnected,
    #[error("edge-list parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeSequenceError {
    #[error("degree sequence is empty or has fewer than 2 entries")]
    TooShort,
    #[error("degree sequence contains a zero")]
    ZeroDegree,
    #[error("degree sum {0} is odd")]
    OddSum(usize),
    #[error("NotGraphical: Erdős–Gallai inequality fails at k = {0}")]
    NotGraphical(usize),
    #[error("cannot parse degree sequence: {0}")]
    Parse(String),
}

/// A simple undirected graph with every vertex of degree at least one.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted, so two graphs built
/// from the same edge set compare equal and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from 0-based edges. Connectivity is not required here.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooFewVertices(n));
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v + 1, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a + 1));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0 + 1, e.1 + 1));
            }
            list.push(e);
        }
        list.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &list {
            adj[a].push(b);
            adj[b].push(a);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
        if let Some(v) = degrees.iter().position(|&d| d == 0) {
            return Err(GraphError::IsolatedVertex(v + 1));
        }
        Ok(Self { n, edges: list, adj, degrees })
    }

    /// Builds a graph from 1-based vertex pairs, optionally rejecting
    /// disconnected input.
    pub fn from_edge_list(
        pairs: &[(usize, usize)],
        n: usize,
        require_connected: bool,
    ) -> Result<Self, GraphError> {
        let mut zero_based = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            zero_based.push((a - 1, b - 1));
        }
        let g = Self::new(n, zero_based)?;
        if require_connected && !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Like [`Graph::new`] but fails with [`GraphError::Disconnected`].
    pub fn connected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let g = Self::new(n, edges)?;
        if g.is_connected() {
            Ok(g)
        } else {
            Err(GraphError::Disconnected)
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("complete graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs n >= 3");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle graph")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (0..n - 1).map(|i| (i, i + 1))).expect("path graph")
    }

    pub fn star(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (0, i))).expect("star graph")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Single BFS from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// BFS 2-coloring over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut values = self.degrees.clone();
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { values }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        Self::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b]))).expect("relabeling keeps a valid graph")
    }

    /// Renders the 1-based edge-list format accepted by [`Graph::from_str`].
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        out
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    /// Parses `n m` followed by `m` lines `i j` (1-based). Lines starting
    /// with `#` and blank lines are skipped. Connectivity is not checked.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| GraphError::Parse { line: idx + 1, msg: e.to_string() })?;
            if nums.len() != 2 {
                return Err(GraphError::Parse { line: idx + 1, msg: format!("expected 2 integers, found {}", nums.len()) });
            }
            match header {
                None => header = Some((nums[0], nums[1])),
                Some(_) => pairs.push((nums[0], nums[1])),
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse { line: 0, msg: "missing `n m` header".into() })?;
        if pairs.len() != m {
            return Err(GraphError::Parse { line: 0, msg: format!("header declares {m} edges, found {}", pairs.len()) });
        }
        Self::from_edge_list(&pairs, n, false)
    }
}

/// Nonincreasing list of positive degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSequence {
    values: Vec<usize>,
}

impl DegreeSequence {
    /// Sorts the input nonincreasing and checks that it is graphical.
    pub fn new(mut values: Vec<usize>) -> Result<Self, DegreeSequenceError> {
        if values.len() < 2 {
            return Err(DegreeSequenceError::TooShort);
        }
        if values.contains(&0) {
            return Err(DegreeSequenceError::ZeroDegree);
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        let sum: usize = values.iter().sum();
        if sum % 2 != 0 {
            return Err(DegreeSequenceError::OddSum(sum));
        }
        if let Some(k) = erdos_gallai_violation(&values) {
            return Err(DegreeSequenceError::NotGraphical(k));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.values.iter().sum::<usize>() / 2
    }

    /// Number of degree-one entries (they are all at the tail).
    pub fn pendant_count(&self) -> usize {
        self.values.iter().rev().take_while(|&&d| d == 1).count()
    }

    pub fn max(&self) -> usize {
        self.values[0]
    }

    pub fn min(&self) -> usize {
        *self.values.last().unwrap()
    }
}

impl FromStr for DegreeSequence {
    type Err = DegreeSequenceError;

    /// Comma-separated integers, e.g. `3,2,2,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| DegreeSequenceError::Parse(e.to_string()))?;
        Self::new(values)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Returns the first `k` (1-based) where the Erdős–Gallai inequality
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)` fails, for a
/// nonincreasing sequence with even sum.
pub fn erdos_gallai_violation(sorted_desc: &[usize]) -> Option<usize> {
    let n = sorted_desc.len();
    let mut lhs = 0usize;
    for k in 1..=n {
        lhs += sorted_desc[k - 1];
        let rhs = k * (k - 1) + sorted_desc[k..].iter().map(|&d| d.min(k)).sum::<usize>();
        if lhs > rhs {
            return Some(k);
        }
    }
    None
}
