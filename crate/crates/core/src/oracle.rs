//! Brute-force ground truth over the explicit configuration graph.
//!
//! Everything here is exponential in the word length and exists to check the
//! closed forms in [`crate::structure`] and the algorithms in
//! [`crate::pathfinder`] and [`crate::enumerator`] on small instances.

use std::collections::{HashMap, HashSet, VecDeque};
use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::pathfinder::{CycleCover, SwapGraph};
use crate::word::{ParikhVector, Swap, Word};

/// Default vertex cap for explicit graphs.
pub const DEFAULT_VERTEX_CAP: usize = 100_000;

/// Default vertex cap for clique enumeration (adjacency is kept as bitsets).
pub const DEFAULT_CLIQUE_CAP: usize = 20_000;

fn check_cap(p: &ParikhVector, cap: usize) -> Result<usize> {
    let count = p.count_words();
    match usize::try_from(&count) {
        Ok(c) if c <= cap => Ok(c),
        _ => Err(Error::TooLarge {
            count: count.to_string(),
            cap,
        }),
    }
}

/// The configuration graph `G(P)` held explicitly.
///
/// Vertex ids follow lexicographic order of the words.
#[derive(Debug, Clone)]
pub struct ConfigGraph {
    parikh: ParikhVector,
    vertices: Vec<Word>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<Word, usize>,
}

impl ConfigGraph {
    pub fn build(p: &ParikhVector, cap: usize) -> Result<Self> {
        let count = check_cap(p, cap)?;
        let mut vertices = Vec::with_capacity(count);
        vertices.extend(p.words());
        let index: HashMap<Word, usize> = vertices
            .iter()
            .enumerate()
            .map(|(id, w)| (w.clone(), id))
            .collect();
        let n = p.total();
        let adjacency = vertices
            .iter()
            .map(|w| {
                let mut neighbors = Vec::new();
                let mut scratch = w.clone();
                for i in 1..=n {
                    for j in i + 1..=n {
                        if scratch.raw()[i - 1] == scratch.raw()[j - 1] {
                            continue;
                        }
                        scratch.exchange(i, j).expect("in range");
                        neighbors.push(index[&scratch]);
                        scratch.exchange(i, j).expect("in range");
                    }
                }
                neighbors.sort_unstable();
                neighbors
            })
            .collect();
        Ok(ConfigGraph {
            parikh: p.clone(),
            vertices,
            adjacency,
            index,
        })
    }

    pub fn parikh(&self) -> &ParikhVector {
        &self.parikh
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn word(&self, id: usize) -> &Word {
        &self.vertices[id]
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn id_of(&self, w: &Word) -> Result<usize> {
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(w.to_string()))
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// BFS distances from `source` to every vertex.
    pub fn bfs_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, w: &Word, v: &Word) -> Result<usize> {
        let (a, b) = (self.id_of(w)?, self.id_of(v)?);
        Ok(self.bfs_from(a)[b])
    }

    /// Eccentricity of a vertex.
    pub fn eccentricity(&self, id: usize) -> usize {
        self.bfs_from(id).into_iter().max().unwrap_or(0)
    }

    /// Exact diameter by BFS from every vertex.
    pub fn diameter(&self) -> usize {
        (0..self.vertex_count())
            .map(|id| self.eccentricity(id))
            .max()
            .unwrap_or(0)
    }

    /// All maximal cliques, each sorted by vertex id, via pivoting Bron–Kerbosch.
    pub fn maximal_cliques(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let v = self.vertex_count();
        if v > cap {
            return Err(Error::TooLarge {
                count: v.to_string(),
                cap,
            });
        }
        let adj: Vec<BitSet> = self
            .adjacency
            .iter()
            .map(|ns| BitSet::from_ids(v, ns))
            .collect();
        let mut out = Vec::new();
        let mut r = Vec::new();
        bron_kerbosch(&adj, &mut r, BitSet::full(v), BitSet::new(v), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        Ok(out)
    }

    /// The induced subgraph on all vertices within distance `r` of `center`.
    pub fn ball(&self, center: &Word, r: usize) -> Result<Ball> {
        let c = self.id_of(center)?;
        let dist = self.bfs_from(c);
        let members: Vec<usize> = (0..self.vertex_count()).filter(|&u| dist[u] <= r).collect();
        let local: HashMap<usize, usize> =
            members.iter().enumerate().map(|(k, &u)| (u, k)).collect();
        let mut edges = Vec::new();
        for (k, &u) in members.iter().enumerate() {
            for &x in &self.adjacency[u] {
                if let Some(&l) = local.get(&x) {
                    if k < l {
                        edges.push((k, l));
                    }
                }
            }
        }
        Ok(Ball {
            center: center.clone(),
            radius: r,
            vertices: members.iter().map(|&u| self.vertices[u].clone()).collect(),
            distances: members.iter().map(|&u| dist[u]).collect(),
            edges,
        })
    }

    /// Writes `id: word: neighbor-ids...`, one vertex per line.
    pub fn write_adjacency<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (id, w) in self.vertices.iter().enumerate() {
            write!(out, "{id}: {w}:")?;
            for n in &self.adjacency[id] {
                write!(out, " {n}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }

    /// Writes a whitespace-separated edge list (`u v` per line, `u < v`).
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (u, ns) in self.adjacency.iter().enumerate() {
            for &v in ns.iter().filter(|&&v| v > u) {
                writeln!(out, "{u} {v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for k in 0..len {
            s.set(k);
        }
        s
    }

    fn from_ids(len: usize, ids: &[usize]) -> Self {
        let mut s = Self::new(len);
        for &k in ids {
            s.set(k);
        }
        s
    }

    fn set(&mut self, k: usize) {
        self.words[k / 64] |= 1 << (k % 64);
    }

    fn contains(&self, k: usize) -> bool {
        self.words[k / 64] >> (k % 64) & 1 == 1
    }

    fn clear(&mut self, k: usize) {
        self.words[k / 64] &= !(1 << (k % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn and_count(&self, other: &BitSet) -> u32 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

fn bron_kerbosch(
    adj: &[BitSet],
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot: the vertex of P ∪ X with the most neighbors in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| adj[u].and_count(&p))
        .expect("P is non-empty");
    let todo: Vec<usize> = p.iter().filter(|&v| !adj[pivot].contains(v)).collect();
    for v in todo {
        r.push(v);
        bron_kerbosch(adj, r, p.and(&adj[v]), x.and(&adj[v]), out);
        r.pop();
        p.clear(v);
        x.set(v);
    }
}

/// Outcome of replaying a swap sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathReport {
    /// Every step was a legal 2-swap of the current word.
    pub valid: bool,
    /// Every word of `G(P)` was visited exactly once.
    pub visits_all: bool,
    /// Number of steps that landed on an already visited word.
    pub repeats: usize,
    /// 1-based index of the first illegal step.
    pub failure_step: Option<usize>,
    /// Steps replayed (stops at the first illegal one).
    pub steps: usize,
    /// Distinct words visited, including the start.
    pub visited: usize,
    pub expect_hamiltonian: bool,
}

impl PathReport {
    /// Valid, and Hamiltonian when that was requested.
    pub fn passed(&self) -> bool {
        self.valid && (!self.expect_hamiltonian || self.visits_all)
    }
}

/// Incremental path checker; feed swaps one at a time.
#[derive(Debug, Clone)]
pub struct PathValidator {
    current: Word,
    visited: HashSet<Word>,
    total: Option<u64>,
    repeats: usize,
    steps: usize,
    failure_step: Option<usize>,
    expect_hamiltonian: bool,
}

impl PathValidator {
    pub fn new(start: &Word, expect_hamiltonian: bool) -> Self {
        let mut visited = HashSet::new();
        visited.insert(start.clone());
        PathValidator {
            current: start.clone(),
            visited,
            total: start.parikh().count_words_u64(),
            repeats: 0,
            steps: 0,
            failure_step: None,
            expect_hamiltonian,
        }
    }

    pub fn current(&self) -> &Word {
        &self.current
    }

    /// Replays one swap; returns `false` once the path has become invalid.
    pub fn push(&mut self, swap: Swap) -> bool {
        if self.failure_step.is_some() {
            return false;
        }
        self.steps += 1;
        if self.current.swap_in_place(swap).is_err() {
            self.failure_step = Some(self.steps);
            return false;
        }
        if !self.visited.insert(self.current.clone()) {
            self.repeats += 1;
        }
        true
    }

    /// Records a step that could not even be parsed as a swap.
    pub fn fail(&mut self) {
        if self.failure_step.is_none() {
            self.steps += 1;
            self.failure_step = Some(self.steps);
        }
    }

    pub fn report(&self) -> PathReport {
        let valid = self.failure_step.is_none();
        let visits_all =
            valid && self.repeats == 0 && self.total == Some(self.visited.len() as u64);
        PathReport {
            valid,
            visits_all,
            repeats: self.repeats,
            failure_step: self.failure_step,
            steps: self.steps,
            visited: self.visited.len(),
            expect_hamiltonian: self.expect_hamiltonian,
        }
    }
}

/// Replays `swaps` from `start` and reports legality and coverage.
pub fn validate_path<I>(start: &Word, swaps: I, expect_hamiltonian: bool) -> PathReport
where
    I: IntoIterator<Item = Swap>,
{
    let mut v = PathValidator::new(start, expect_hamiltonian);
    for s in swaps {
        if !v.push(s) {
            break;
        }
    }
    v.report()
}

/// `G_r(center)`: the induced subgraph of words within distance `radius`.
#[derive(Debug, Clone)]
pub struct Ball {
    pub center: Word,
    pub radius: usize,
    pub vertices: Vec<Word>,
    /// BFS distance from the center, parallel to `vertices`.
    pub distances: Vec<usize>,
    /// Induced edges as index pairs into `vertices`, `a < b`.
    pub edges: Vec<(usize, usize)>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Whether `w ↦ w ∘ π` is an isomorphism from `ball_u` onto `ball_v`.
pub fn check_isomorphism_map(ball_u: &Ball, ball_v: &Ball, pi: &[usize]) -> bool {
    if ball_u.len() != ball_v.len() || ball_u.edges.len() != ball_v.edges.len() {
        return false;
    }
    let index_v: HashMap<&Word, usize> = ball_v
        .vertices
        .iter()
        .enumerate()
        .map(|(k, w)| (w, k))
        .collect();
    let mut image = Vec::with_capacity(ball_u.len());
    let mut hit = vec![false; ball_v.len()];
    for w in &ball_u.vertices {
        let Ok(fw) = w.permute(pi) else {
            return false;
        };
        match index_v.get(&fw) {
            Some(&k) if !hit[k] => {
                hit[k] = true;
                image.push(k);
            }
            _ => return false,
        }
    }
    let edges_v: HashSet<(usize, usize)> = ball_v.edges.iter().copied().collect();
    // a bijection that maps edges into edges between equal-sized edge sets
    // also preserves non-adjacency
    ball_u.edges.iter().all(|&(a, b)| {
        let (x, y) = (image[a], image[b]);
        edges_v.contains(&(x.min(y), x.max(y)))
    })
}

/// Exact distance by BFS over the implicit graph, exploring at most `cap` words.
pub fn bfs_distance_implicit(w: &Word, v: &Word, cap: usize) -> Result<usize> {
    if w.len() != v.len() {
        return Err(Error::LengthMismatch(w.len(), v.len()));
    }
    if w.parikh() != v.parikh() {
        return Err(Error::ParikhMismatch);
    }
    check_cap(&w.parikh(), cap)?;
    if w == v {
        return Ok(0);
    }
    let n = w.len();
    let mut dist: HashMap<Word, usize> = HashMap::new();
    dist.insert(w.clone(), 0);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        let mut scratch = u.clone();
        for i in 1..=n {
            for j in i + 1..=n {
                if scratch.raw()[i - 1] == scratch.raw()[j - 1] {
                    continue;
                }
                scratch.exchange(i, j).expect("in range");
                if !dist.contains_key(&scratch) {
                    if &scratch == v {
                        return Ok(d + 1);
                    }
                    dist.insert(scratch.clone(), d + 1);
                    queue.push_back(scratch.clone());
                }
                scratch.exchange(i, j).expect("in range");
            }
        }
    }
    unreachable!("configuration graphs are connected")
}

/// Every vertex-disjoint cycle cover of a 2-swap graph, by brute force.
///
/// A cover is a successor map `succ` with an edge `i → succ(i)` for every
/// position; the count is `Π_x P[x]!`, so keep `n` small.
pub fn all_cycle_covers(graph: &SwapGraph) -> Vec<CycleCover> {
    let n = graph.len();
    let mut out = Vec::new();
    let mut succ = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    fn rec(
        graph: &SwapGraph,
        i: usize,
        succ: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<CycleCover>,
    ) {
        let n = graph.len();
        if i > n {
            out.push(CycleCover::from_successors(&succ[1..]).expect("bijective successor map"));
            return;
        }
        for j in graph.out_neighbors(i) {
            if !used[j] {
                used[j] = true;
                succ[i] = j;
                rec(graph, i + 1, succ, used, out);
                used[j] = false;
            }
        }
    }
    rec(graph, 1, &mut succ, &mut used, &mut out);
    out
}
