//! Explicit `w → v` paths: the symbol-by-symbol greedy construction, the
//! directed 2-swap graph `G(w, v)` and its cycle covers, and a probe comparing
//! greedy path lengths against exact distances.

use std::fmt;
use std::io::{self, Write};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::{self, ConfigGraph};
use crate::word::{ParikhVector, Swap, Word};

fn check_compatible(w: &Word, v: &Word) -> Result<()> {
    if w.len() != v.len() {
        return Err(Error::LengthMismatch(w.len(), v.len()));
    }
    if w.parikh() != v.parikh() {
        return Err(Error::ParikhMismatch);
    }
    Ok(())
}

/// Transforms `w` into `v` one symbol class at a time.
///
/// A most frequent symbol is left for last (it lands in place for free); every
/// other symbol `x`, in increasing order, has its misplaced occurrences paired
/// in order with the positions of `x` in `v` that do not yet hold `x`. At most
/// `n - max P[i]` swaps are emitted and each is a legal 2-swap.
pub fn greedy_path(w: &Word, v: &Word) -> Result<Vec<Swap>> {
    check_compatible(w, v)?;
    let counts = w.parikh();
    let anchor = counts
        .counts()
        .iter()
        .enumerate()
        .max_by_key(|&(k, &c)| (c, std::cmp::Reverse(k)))
        .map(|(k, _)| k + 1)
        .unwrap_or(1);

    let mut cur = w.clone();
    let mut swaps = Vec::new();
    for x in (1..=w.sigma()).filter(|&x| x != anchor && counts.counts()[x - 1] > 0) {
        let x = x as u16;
        let (mut from, mut to) = (Vec::new(), Vec::new());
        for (k, (&c, &t)) in cur.raw().iter().zip(v.raw()).enumerate() {
            if c == x && t != x {
                from.push(k + 1);
            } else if t == x && c != x {
                to.push(k + 1);
            }
        }
        debug_assert_eq!(from.len(), to.len());
        for (i, j) in from.into_iter().zip(to) {
            let s = Swap::new(i, j)?;
            cur.swap_in_place(s)?;
            swaps.push(s);
        }
    }
    debug_assert_eq!(&cur, v);
    Ok(swaps)
}

/// The directed position graph with an edge `i → j` whenever `w[i] = v[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapGraph {
    w: Word,
    v: Word,
    out: Vec<Vec<usize>>,
}

impl SwapGraph {
    pub fn build(w: &Word, v: &Word) -> Result<Self> {
        check_compatible(w, v)?;
        let out = w
            .raw()
            .iter()
            .map(|&a| {
                v.raw()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| a == b)
                    .map(|(j, _)| j + 1)
                    .collect()
            })
            .collect();
        Ok(SwapGraph {
            w: w.clone(),
            v: v.clone(),
            out,
        })
    }

    /// Number of vertices (positions).
    pub fn len(&self) -> usize {
        self.out.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    pub fn source(&self) -> &Word {
        &self.w
    }

    pub fn target(&self) -> &Word {
        &self.v
    }

    pub fn out_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[i - 1].iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        (1..=self.len()).contains(&i) && self.out[i - 1].binary_search(&j).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Edges `(i, j, label)` with `label = w[i] = v[j]`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.out.iter().enumerate().flat_map(move |(k, js)| {
            let label = self.w.raw()[k] as usize;
            js.iter().map(move |&j| (k + 1, j, label))
        })
    }

    /// Writes `i j` per edge, one per line.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (i, j, _) in self.edges() {
            writeln!(out, "{i} {j}")?;
        }
        Ok(())
    }
}

/// Vertex-disjoint directed cycles covering every position exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCover {
    cycles: Vec<Vec<usize>>,
}

impl CycleCover {
    /// Checks that the cycles partition `[1, n]`.
    pub fn new(cycles: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for c in &cycles {
            if c.is_empty() {
                return Err(Error::InvalidCover("empty cycle".into()));
            }
            for &p in c {
                if p == 0 || p > n {
                    return Err(Error::InvalidCover(format!("position {p} out of range")));
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::InvalidCover(format!("position {p} covered twice")));
                }
            }
        }
        if let Some(p) = (1..=n).find(|&p| !seen[p]) {
            return Err(Error::InvalidCover(format!("position {p} not covered")));
        }
        Ok(CycleCover { cycles })
    }

    /// Builds the cover from a successor map, `succ[i - 1]` being the next
    /// position after `i`.
    pub fn from_successors(succ: &[usize]) -> Result<Self> {
        let n = succ.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = *succ
                    .get(p - 1)
                    .filter(|&&q| q >= 1 && q <= n)
                    .ok_or_else(|| Error::InvalidCover(format!("bad successor of {p}")))?;
            }
            if p != start {
                return Err(Error::InvalidCover(
                    "successor map is not a bijection".into(),
                ));
            }
            cycles.push(cycle);
        }
        CycleCover::new(cycles, n)
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `Σ_c (|c| - 1)`.
    pub fn swap_count(&self) -> usize {
        self.cycles.iter().map(|c| c.len() - 1).sum()
    }
}

/// Converts a cycle cover of `G(w, v)` into swaps: each cycle
/// `(c_1 → c_2 → … → c_k)` yields `(c_1, c_2), (c_1, c_3), …, (c_1, c_k)`.
///
/// Exchanging positions in this order moves every symbol along its cycle edge,
/// so replaying the swaps as position exchanges turns `w` into `v`. A swap whose
/// two positions hold equal symbols at that point is a no-op exchange rather
/// than a 2-swap; [`legal_swaps`] drops those.
pub fn cycle_cover_to_swaps(graph: &SwapGraph, cover: &CycleCover) -> Result<Vec<Swap>> {
    let n = graph.len();
    CycleCover::new(cover.cycles.clone(), n)?;
    let mut swaps = Vec::with_capacity(cover.swap_count());
    for c in &cover.cycles {
        for (k, &from) in c.iter().enumerate() {
            let to = c[(k + 1) % c.len()];
            if !graph.has_edge(from, to) {
                return Err(Error::InvalidCover(format!("{from} → {to} is not an edge")));
            }
        }
        for &p in &c[1..] {
            swaps.push(Swap::new(c[0], p)?);
        }
    }
    Ok(swaps)
}

/// Replays `swaps` as raw exchanges from `w` and keeps only those that were
/// genuine 2-swaps (distinct symbols) at the time.
pub fn legal_swaps(w: &Word, swaps: &[Swap]) -> Result<Vec<Swap>> {
    let mut cur = w.clone();
    let mut out = Vec::with_capacity(swaps.len());
    for &s in swaps {
        if cur.get(s.i())? != cur.get(s.j())? {
            out.push(s);
        }
        cur.exchange(s.i(), s.j())?;
    }
    Ok(out)
}

/// Exact graph distance by breadth-first search (exponential; capped).
pub fn exact_distance(w: &Word, v: &Word, cap: usize) -> Result<usize> {
    oracle::bfs_distance_implicit(w, v, cap)
}

/// One compared pair in a conjecture probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeRecord {
    pub w: Word,
    pub v: Word,
    pub greedy: usize,
    pub exact: usize,
}

impl ProbeRecord {
    pub fn matches(&self) -> bool {
        self.greedy == self.exact
    }
}

impl fmt::Display for ProbeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} greedy={} exact={} match={}",
            self.w,
            self.v,
            self.greedy,
            self.exact,
            self.matches()
        )
    }
}

/// Aggregate outcome of [`probe_conjecture`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeSummary {
    pub parikh: ParikhVector,
    pub sources: usize,
    pub exhaustive: bool,
    pub pairs: usize,
    pub matches: usize,
    /// Pairs where greedy came out shorter than BFS; always empty unless
    /// something is broken.
    pub violations: usize,
    pub counterexamples: Vec<ProbeRecord>,
}

impl ProbeSummary {
    pub fn match_rate(&self) -> f64 {
        if self.pairs == 0 {
            1.0
        } else {
            self.matches as f64 / self.pairs as f64
        }
    }
}

impl fmt::Display for ProbeSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} sources={} exhaustive={} pairs={} matches={} match_rate={:.6} counterexamples={}",
            self.parikh,
            self.sources,
            self.exhaustive,
            self.pairs,
            self.matches,
            self.match_rate(),
            self.counterexamples.len()
        )
    }
}

/// Compares greedy path lengths with exact distances on `G(P)`.
///
/// `samples` source words are drawn with a seeded RNG (all words when
/// `samples` is 0 or at least the vertex count); each source is compared
/// against every target. Every record is passed to `on_record`.
pub fn probe_conjecture<F>(
    p: &ParikhVector,
    samples: usize,
    seed: u64,
    cap: usize,
    mut on_record: F,
) -> Result<ProbeSummary>
where
    F: FnMut(&ProbeRecord),
{
    let graph = ConfigGraph::build(p, cap)?;
    let count = graph.vertex_count();
    let exhaustive = samples == 0 || samples >= count;
    let sources: Vec<usize> = if exhaustive {
        (0..count).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s = sample(&mut rng, count, samples).into_vec();
        s.sort_unstable();
        s
    };

    let mut summary = ProbeSummary {
        parikh: p.clone(),
        sources: sources.len(),
        exhaustive,
        pairs: 0,
        matches: 0,
        violations: 0,
        counterexamples: Vec::new(),
    };
    for &s in &sources {
        let dist = graph.bfs_from(s);
        let w = graph.word(s);
        for (t, v) in graph.vertices().iter().enumerate() {
            let greedy = greedy_path(w, v)?.len();
            let record = ProbeRecord {
                w: w.clone(),
                v: v.clone(),
                greedy,
                exact: dist[t],
            };
            summary.pairs += 1;
            if record.greedy < record.exact {
                summary.violations += 1;
            }
            if record.matches() {
                summary.matches += 1;
            } else {
                summary.counterexamples.push(record.clone());
            }
            on_record(&record);
        }
    }
    Ok(summary)
}
