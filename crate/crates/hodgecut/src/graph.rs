//! Undirected simple graphs: construction, edge-list ingestion, and
//! deterministic generators for the synthetic families used throughout
//! the crate.
//!
//! Vertices are dense 0-based indices. Input files may use arbitrary
//! string labels; labels are mapped to indices in first-appearance order
//! and retained for reporting. All randomness comes from ChaCha8 streams
//! keyed by `(family tag, seed)`, so a given `GraphSpec` always produces
//! a bit-identical graph, and adding a new family never perturbs the
//! output of an existing one.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Undirected simple graph with a fixed vertex count and a canonical
/// edge set: every edge is stored as `(min, max)` and the list is sorted
/// lexicographically. No self-loops, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity.
    ///
    /// Edges may be given in either endpoint order; they are normalized
    /// to `(min, max)` and sorted. Self-loops and duplicate edges are
    /// rejected rather than silently repaired.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::with_labels(n, edges, None)
    }

    fn with_labels(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut canonical: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::validation(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::validation(format!(
                    "edge ({u}, {v}) has endpoint outside [0, {n})"
                )));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::validation(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canonical {
            adj[u].push(v);
            adj[v].push(u);
        }
        // Canonical edge order already implies sorted neighbor lists for u<v
        // halves separately, but not merged; sort explicitly.
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canonical,
            labels,
            adj,
        })
    }

    /// Parses whitespace-separated edge pairs, one edge per line.
    ///
    /// Lines starting with `#` and blank lines are ignored. Vertex tokens
    /// are arbitrary labels, mapped to dense indices in first-appearance
    /// order; the mapping is kept on the graph.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut index_of: HashMap<String, usize> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected 2 vertex tokens, found {}", tokens.len()),
                });
            }
            let mut intern = |tok: &str| -> usize {
                *index_of.entry(tok.to_string()).or_insert_with(|| {
                    labels.push(tok.to_string());
                    labels.len() - 1
                })
            };
            let u = intern(tokens[0]);
            let v = intern(tokens[1]);
            if u == v {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("self-loop on vertex '{}'", tokens[0]),
                });
            }
            edges.push((u, v));
        }
        let n = labels.len();
        Self::with_labels(n, edges, Some(labels))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical `(min, max)` lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Original input labels, present only for graphs read from files.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Sum of all vertex degrees, i.e. `2 * |E|`.
    pub fn volume(&self) -> usize {
        2 * self.edges.len()
    }

    /// Partitions vertices into connected components.
    ///
    /// Components are reported as sorted vertex lists, ordered by their
    /// smallest vertex, so the output is canonical.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..n`. Scalar invariants
    /// (spectra, Betti numbers, cut sizes) are unchanged by relabeling.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::validation("permutation length mismatch"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::validation("not a permutation"));
            }
            seen[p] = true;
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Graph induced by deleting an edge set; vertex set is unchanged.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Result<Self> {
        let removed: Vec<(usize, usize)> = removed
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        Graph::new(
            self.n,
            self.edges
                .iter()
                .copied()
                .filter(|e| !removed.contains(e)),
        )
    }
}

/// Graph family parameterizations accepted by the generators and by the
/// CLI spec-string syntax (`er:n=100,p=0.05,seed=7`).
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Edgeless { n: usize },
    ErdosRenyi { n: usize, p: f64, seed: u64 },
    RandomRegular { n: usize, d: usize, seed: u64 },
    WattsStrogatz { n: usize, k: usize, beta: f64, seed: u64 },
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete { n } => write!(f, "complete:n={n}"),
            GraphSpec::Cycle { n } => write!(f, "cycle:n={n}"),
            GraphSpec::Path { n } => write!(f, "path:n={n}"),
            GraphSpec::Edgeless { n } => write!(f, "edgeless:n={n}"),
            GraphSpec::ErdosRenyi { n, p, seed } => write!(f, "er:n={n},p={p},seed={seed}"),
            GraphSpec::RandomRegular { n, d, seed } => write!(f, "rr:n={n},d={d},seed={seed}"),
            GraphSpec::WattsStrogatz { n, k, beta, seed } => {
                write!(f, "ws:n={n},k={k},beta={beta},seed={seed}")
            }
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = match s.split_once(':') {
            Some((f, r)) => (f.trim(), r),
            None => (s.trim(), ""),
        };
        let mut params: HashMap<&str, &str> = HashMap::new();
        for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::validation(format!("malformed spec parameter '{part}'")))?;
            params.insert(key.trim(), value.trim());
        }
        let get_usize = |params: &HashMap<&str, &str>, key: &str| -> Result<usize> {
            params
                .get(key)
                .ok_or_else(|| Error::validation(format!("spec '{family}' missing '{key}='")))?
                .parse()
                .map_err(|_| Error::validation(format!("spec parameter '{key}' is not an integer")))
        };
        let get_f64 = |params: &HashMap<&str, &str>, key: &str| -> Result<f64> {
            params
                .get(key)
                .ok_or_else(|| Error::validation(format!("spec '{family}' missing '{key}='")))?
                .parse()
                .map_err(|_| Error::validation(format!("spec parameter '{key}' is not a number")))
        };
        let get_seed = |params: &HashMap<&str, &str>| -> Result<u64> {
            match params.get("seed") {
                Some(v) => v
                    .parse()
                    .map_err(|_| Error::validation("spec parameter 'seed' is not an integer")),
                None => Ok(0),
            }
        };

        let spec = match family {
            "complete" => GraphSpec::Complete {
                n: get_usize(&params, "n")?,
            },
            "cycle" => GraphSpec::Cycle {
                n: get_usize(&params, "n")?,
            },
            "path" => GraphSpec::Path {
                n: get_usize(&params, "n")?,
            },
            "edgeless" => GraphSpec::Edgeless {
                n: get_usize(&params, "n")?,
            },
            "er" | "erdos_renyi" => GraphSpec::ErdosRenyi {
                n: get_usize(&params, "n")?,
                p: get_f64(&params, "p")?,
                seed: get_seed(&params)?,
            },
            "rr" | "random_regular" => GraphSpec::RandomRegular {
                n: get_usize(&params, "n")?,
                d: get_usize(&params, "d")?,
                seed: get_seed(&params)?,
            },
            "ws" | "watts_strogatz" => GraphSpec::WattsStrogatz {
                n: get_usize(&params, "n")?,
                k: get_usize(&params, "k")?,
                beta: get_f64(&params, "beta")?,
                seed: get_seed(&params)?,
            },
            other => {
                return Err(Error::validation(format!(
                    "unknown graph family '{other}' (expected complete, cycle, path, \
                     edgeless, er, rr, or ws)"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl GraphSpec {
    /// Family tag used to key the per-family random substream.
    pub fn family(&self) -> &'static str {
        match self {
            GraphSpec::Complete { .. } => "complete",
            GraphSpec::Cycle { .. } => "cycle",
            GraphSpec::Path { .. } => "path",
            GraphSpec::Edgeless { .. } => "edgeless",
            GraphSpec::ErdosRenyi { .. } => "erdos_renyi",
            GraphSpec::RandomRegular { .. } => "random_regular",
            GraphSpec::WattsStrogatz { .. } => "watts_strogatz",
        }
    }

    /// True for families whose output depends on the seed.
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            GraphSpec::ErdosRenyi { .. }
                | GraphSpec::RandomRegular { .. }
                | GraphSpec::WattsStrogatz { .. }
        )
    }

    /// Same family and shape parameters, with the seed replaced.
    /// No-op for deterministic families.
    pub fn with_seed(&self, seed: u64) -> Self {
        let mut spec = self.clone();
        match &mut spec {
            GraphSpec::ErdosRenyi { seed: s, .. }
            | GraphSpec::RandomRegular { seed: s, .. }
            | GraphSpec::WattsStrogatz { seed: s, .. } => *s = seed,
            _ => {}
        }
        spec
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            GraphSpec::Complete { n }
            | GraphSpec::Cycle { n }
            | GraphSpec::Path { n }
            | GraphSpec::Edgeless { n }
            | GraphSpec::ErdosRenyi { n, .. }
            | GraphSpec::RandomRegular { n, .. }
            | GraphSpec::WattsStrogatz { n, .. } => n,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            GraphSpec::Cycle { n } if n < 3 => {
                Err(Error::validation("cycle requires n >= 3"))
            }
            GraphSpec::ErdosRenyi { p, .. } if !(0.0..=1.0).contains(&p) => {
                Err(Error::validation("erdos_renyi requires p in [0, 1]"))
            }
            GraphSpec::RandomRegular { n, d, .. } if n * d % 2 != 0 => {
                Err(Error::validation("random_regular requires n*d even"))
            }
            GraphSpec::RandomRegular { n, d, .. } if d >= n => {
                Err(Error::validation("random_regular requires d < n"))
            }
            GraphSpec::WattsStrogatz { k, .. } if k % 2 != 0 => {
                Err(Error::validation("watts_strogatz requires k even"))
            }
            GraphSpec::WattsStrogatz { n, k, .. } if k >= n => {
                Err(Error::validation("watts_strogatz requires k < n"))
            }
            GraphSpec::WattsStrogatz { beta, .. } if !(0.0..=1.0).contains(&beta) => {
                Err(Error::validation("watts_strogatz requires beta in [0, 1]"))
            }
            _ => Ok(()),
        }
    }

    /// Generates the graph. Deterministic: identical spec and seed give a
    /// bit-identical edge set.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            GraphSpec::Complete { n } => {
                Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            GraphSpec::Cycle { n } => Graph::new(n, (0..n).map(|u| (u, (u + 1) % n))),
            GraphSpec::Path { n } => Graph::new(n, (1..n).map(|v| (v - 1, v))),
            GraphSpec::Edgeless { n } => Graph::new(n, std::iter::empty()),
            GraphSpec::ErdosRenyi { n, p, seed } => {
                let mut rng = family_rng("erdos_renyi", seed);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen::<f64>() < p {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(n, edges)
            }
            GraphSpec::RandomRegular { n, d, seed } => {
                let mut rng = family_rng("random_regular", seed);
                random_regular(n, d, &mut rng)
            }
            GraphSpec::WattsStrogatz { n, k, beta, seed } => {
                let mut rng = family_rng("watts_strogatz", seed);
                watts_strogatz(n, k, beta, &mut rng)
            }
        }
    }
}

/// ChaCha8 stream keyed by family tag and seed. Distinct tags give
/// independent substreams for the same seed.
fn family_rng(tag: &str, seed: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    let tag_bytes = tag.as_bytes();
    let len = tag_bytes.len().min(24);
    key[8..8 + len].copy_from_slice(&tag_bytes[..len]);
    ChaCha8Rng::from_seed(key)
}

const PAIRING_RETRY_CAP: usize = 1000;

/// Pairing (configuration) model: shuffle n*d stubs, pair consecutively,
/// and reject the whole attempt on any self-loop or duplicate edge.
fn random_regular(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if d == 0 {
        return Graph::new(n, std::iter::empty());
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    'attempt: for _ in 0..PAIRING_RETRY_CAP {
        stubs.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue 'attempt;
        }
        return Graph::new(n, edges);
    }
    Err(Error::resource(format!(
        "random_regular pairing failed {PAIRING_RETRY_CAP} times for n={n}, d={d}"
    )))
}

/// Ring lattice with k/2 neighbors on each side, then each lattice edge
/// is rewired with probability beta to a uniformly chosen non-adjacent
/// endpoint. A vertex already adjacent to everything keeps its edge.
fn watts_strogatz(n: usize, k: usize, beta: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for offset in 1..=k / 2 {
        for u in 0..n {
            let v = (u + offset) % n;
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    for offset in 1..=k / 2 {
        for u in 0..n {
            let v = (u + offset) % n;
            if !adj[u][v] {
                continue; // already rewired away by an earlier pass
            }
            if rng.gen::<f64>() < beta {
                let degree_u = adj[u].iter().filter(|&&a| a).count();
                if degree_u >= n - 1 {
                    continue;
                }
                loop {
                    let w = rng.gen_range(0..n);
                    if w != u && !adj[u][w] {
                        adj[u][v] = false;
                        adj[v][u] = false;
                        adj[u][w] = true;
                        adj[w][u] = true;
                        break;
                    }
                }
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
