//! Seeded random graphs: Erdős–Rényi, Watts–Strogatz and a degree-sequence
//! swap chain.
//!
//! Attempt `r` of a generation call draws from `ChaCha8Rng::seed_from_u64(sub_seed(seed, r))`,
//! so a spec always yields the same edge set.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{DegreeSequence, DegreeSequenceError, Graph};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Model {
    ErdosRenyi { q: f64 },
    WattsStrogatz { p: f64, ring_k: usize },
    /// Havel–Hakimi realization followed by `swaps` double-edge swaps
    /// (default `10 m`).
    DegreeSequence { target: Vec<usize>, swaps: Option<usize> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub seed: u64,
    pub require_connected: bool,
    pub max_retries: usize,
}

impl GenSpec {
    pub fn erdos_renyi(n: usize, q: f64, seed: u64) -> Self {
        Self { model: Model::ErdosRenyi { q }, n, seed, require_connected: true, max_retries: 1000 }
    }

    pub fn watts_strogatz(n: usize, ring_k: usize, p: f64, seed: u64) -> Self {
        Self { model: Model::WattsStrogatz { p, ring_k }, n, seed, require_connected: true, max_retries: 1000 }
    }

    pub fn degree_sequence(target: &DegreeSequence, seed: u64) -> Self {
        Self {
            model: Model::DegreeSequence { target: target.values().to_vec(), swaps: None },
            n: target.len(),
            seed,
            require_connected: true,
            max_retries: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("RetriesExhausted: no valid graph after {0} attempts")]
    RetriesExhausted(usize),
    #[error("InvalidRing: need 1 <= ring_k and 2 ring_k < n (ring_k = {ring_k}, n = {n})")]
    InvalidRing { n: usize, ring_k: usize },
    #[error("invalid probability {0}")]
    InvalidProbability(f64),
    #[error("n = {0} is too small")]
    TooSmall(usize),
    #[error("NotGraphical: {0}")]
    NotGraphical(#[from] DegreeSequenceError),
    #[error("degree sequence has length {len}, spec says n = {n}")]
    LengthMismatch { len: usize, n: usize },
}

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of attempt (or trial) `r` under base seed `seed`.
pub fn sub_seed(seed: u64, r: u64) -> u64 {
    mix(mix(seed) ^ r.wrapping_mul(0xD1B5_4A32_D192_ED03))
}

pub fn rng_for(seed: u64, r: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(sub_seed(seed, r))
}

pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    match spec.model {
        Model::ErdosRenyi { .. } => erdos_renyi(spec),
        Model::WattsStrogatz { .. } => watts_strogatz(spec),
        Model::DegreeSequence { .. } => sample_degree_sequence(spec),
    }
}

fn check_probability(x: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(GenError::InvalidProbability(x))
    }
}

/// Runs `attempt` with fresh sub-seeds until it yields an acceptable graph.
fn retry(spec: &GenSpec, mut attempt: impl FnMut(&mut ChaCha8Rng) -> Vec<(usize, usize)>) -> Result<Graph, GenError> {
    let tries = spec.max_retries.max(1);
    for r in 0..tries {
        let mut rng = rng_for(spec.seed, r as u64);
        let edges = attempt(&mut rng);
        // isolated vertices are rejected by the constructor either way
        if let Ok(g) = Graph::new(spec.n, edges) {
            if !spec.require_connected || g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(GenError::RetriesExhausted(tries))
}

/// `G(n, q)`: every pair independently with probability `q`.
pub fn erdos_renyi(spec: &GenSpec) -> Result<Graph, GenError> {
    let Model::ErdosRenyi { q } = spec.model else { unreachable!("erdos_renyi called with {:?}", spec.model) };
    check_probability(q)?;
    if spec.n < 2 {
        return Err(GenError::TooSmall(spec.n));
    }
    let n = spec.n;
    retry(spec, |rng| {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen::<f64>() < q {
                    edges.push((i, j));
                }
            }
        }
        edges
    })
}

/// Ring lattice with `ring_k` neighbours per side, rewired lap by lap.
pub fn watts_strogatz(spec: &GenSpec) -> Result<Graph, GenError> {
    let Model::WattsStrogatz { p, ring_k } = spec.model else {
        unreachable!("watts_strogatz called with {:?}", spec.model)
    };
    check_probability(p)?;
    let n = spec.n;
    if ring_k == 0 || 2 * ring_k >= n {
        return Err(GenError::InvalidRing { n, ring_k });
    }
    retry(spec, |rng| {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for v in 0..n {
            for j in 1..=ring_k {
                let w = (v + j) % n;
                adj[v].insert(w);
                adj[w].insert(v);
            }
        }
        for j in 1..=ring_k {
            for v in 0..n {
                let w = (v + j) % n;
                // the lattice edge may already have been rewired away
                if !adj[v].contains(&w) || rng.gen::<f64>() >= p {
                    continue;
                }
                if adj[v].len() >= n - 1 {
                    continue;
                }
                let t = loop {
                    let t = rng.gen_range(0..n);
                    if t != v && !adj[v].contains(&t) {
                        break t;
                    }
                };
                adj[v].remove(&w);
                adj[w].remove(&v);
                adj[v].insert(t);
                adj[t].insert(v);
            }
        }
        (0..n).flat_map(|v| adj[v].range(v + 1..).map(move |&w| (v, w)).collect::<Vec<_>>()).collect()
    })
}

/// Deterministic Havel–Hakimi realization of a sorted graphical sequence.
pub fn havel_hakimi(ds: &DegreeSequence) -> Vec<(usize, usize)> {
    let mut rest: Vec<(usize, usize)> = ds.values().iter().copied().enumerate().map(|(v, d)| (d, v)).collect();
    let mut edges = Vec::with_capacity(ds.edge_count());
    loop {
        rest.retain(|&(d, _)| d > 0);
        if rest.is_empty() {
            break;
        }
        // largest residual degree first, ties by vertex index
        rest.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = rest[0];
        rest[0].0 = 0;
        for slot in rest.iter_mut().skip(1).take(d) {
            slot.0 -= 1;
            edges.push((v.min(slot.1), v.max(slot.1)));
        }
    }
    edges
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// `count` attempted double-edge swaps; degree-preserving.
pub fn double_edge_swaps(edges: &mut [(usize, usize)], count: usize, rng: &mut impl Rng) {
    let m = edges.len();
    if m < 2 {
        return;
    }
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    for _ in 0..count {
        let i = rng.gen_range(0..m);
        let j = rng.gen_range(0..m);
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (c, d) = if rng.gen::<bool>() { edges[j] } else { (edges[j].1, edges[j].0) };
        // (a,b),(c,d) -> (a,d),(c,b)
        if a == d || c == b {
            continue;
        }
        let (e1, e2) = (key(a, d), key(c, b));
        if present.contains(&e1) || present.contains(&e2) {
            continue;
        }
        present.remove(&edges[i]);
        present.remove(&edges[j]);
        present.insert(e1);
        present.insert(e2);
        edges[i] = e1;
        edges[j] = e2;
    }
}

/// A connected graph with degree sequence exactly `target`.
pub fn sample_degree_sequence(spec: &GenSpec) -> Result<Graph, GenError> {
    let Model::DegreeSequence { ref target, swaps } = spec.model else {
        unreachable!("sample_degree_sequence called with {:?}", spec.model)
    };
    let ds = DegreeSequence::new(target.clone())?;
    if ds.len() != spec.n {
        return Err(GenError::LengthMismatch { len: ds.len(), n: spec.n });
    }
    let base = havel_hakimi(&ds);
    let count = swaps.unwrap_or(10 * base.len());
    retry(spec, |rng| {
        let mut edges = base.clone();
        double_edge_swaps(&mut edges, count, rng);
        edges
    })
}
