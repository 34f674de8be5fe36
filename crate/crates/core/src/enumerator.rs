//! Bounded-delay enumeration of a Hamiltonian path of `G(P)` from any start
//! word, emitted as a stream of swaps.
//!
//! # How the path is built
//!
//! For a symbol `q`, call the positions holding symbols `>= q` the level-`q`
//! positions, and the *pattern* of a word at level `q` the labelling of those
//! positions as `q` or "greater than `q`". Symbols below `q` are never touched
//! while level `q` runs, so the level-`q` positions stay fixed.
//!
//! Level `q` walks a Hamiltonian path through all patterns, and after the
//! start pattern and after every pattern swap it runs level `q + 1` to
//! completion, visiting every arrangement of the symbols `> q` over the
//! positions labelled "greater". Word = (pattern, arrangement), so each word is
//! visited exactly once.
//!
//! The pattern path is the binary suffix walk. Inside a window `[floor, n]`,
//! let `m` be the last level-`q` position before which the pattern suffix is
//! constant; there is exactly one pattern with the current prefix up to `m`.
//! For each level-`q` position `i` from `m` down to `floor`, swap `i` with the
//! first position after `i` carrying the opposite label, then recursively walk
//! the window `[i + 1, n]`.
//!
//! # Frames
//!
//! The recursion is kept as an explicit stack. A frame is only pushed when it
//! is known to produce at least one swap when resumed: the last iteration of a
//! suffix loop is not re-pushed (the recursive walk then returns straight to
//! whatever lies below, which is the non-local return of the textbook
//! recursion), an empty child window is detected before pushing, and only
//! levels with both labels present are opened. Every pop therefore leads to an
//! output after `O(σ)` ordered-set calls and frame operations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ordered_set::OrderedIndexSet;
use crate::word::{Swap, Word};

/// Instrumentation counters.
///
/// Operations are ordered-set calls (insert, remove, min, max, predecessor,
/// successor) plus frame pushes and pops.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DelayStats {
    pub max_ops_between_outputs: u64,
    pub total_ops: u64,
    pub outputs: u64,
    /// Operations spent building the position sets and the first frames.
    pub preprocessing_ops: u64,
}

#[derive(Debug, Clone, Default)]
struct Counter {
    total: u64,
    since_output: u64,
    max_between: u64,
    outputs: u64,
    preprocessing: u64,
}

impl Counter {
    fn tick(&mut self, k: u64) {
        self.total += k;
        self.since_output += k;
    }

    fn end_preprocessing(&mut self) {
        self.preprocessing = self.since_output;
        self.since_output = 0;
    }

    fn output(&mut self) {
        self.max_between = self.max_between.max(self.since_output);
        self.since_output = 0;
        self.outputs += 1;
    }

    fn stats(&self) -> DelayStats {
        DelayStats {
            max_ops_between_outputs: self.max_between.max(self.since_output),
            total_ops: self.total,
            outputs: self.outputs,
            preprocessing_ops: self.preprocessing,
        }
    }
}

/// One ordered position set per symbol, with every call counted.
#[derive(Debug, Clone)]
struct Trees {
    sets: Vec<OrderedIndexSet>,
    counter: Counter,
}

impl Trees {
    fn build(word: &[u16], sigma: usize) -> Self {
        let mut trees = Trees {
            sets: vec![OrderedIndexSet::new(); sigma],
            counter: Counter::default(),
        };
        for (k, &s) in word.iter().enumerate() {
            trees.counter.tick(1);
            trees.sets[s as usize - 1]
                .insert(k + 1)
                .expect("positions are distinct");
        }
        trees
    }

    fn max(&mut self, x: usize) -> Option<usize> {
        self.counter.tick(1);
        self.sets[x - 1].max()
    }

    fn pred_below(&mut self, x: usize, i: usize) -> Option<usize> {
        self.counter.tick(1);
        self.sets[x - 1].pred_below(i)
    }

    fn succ_above(&mut self, x: usize, i: usize) -> Option<usize> {
        self.counter.tick(1);
        self.sets[x - 1].succ_above(i)
    }

    /// Moves `x` from `from` to `to` (two counted calls).
    fn relocate(&mut self, x: usize, from: usize, to: usize) {
        self.counter.tick(2);
        let set = &mut self.sets[x - 1];
        set.remove(from).expect("position tracked");
        set.insert(to).expect("target position free");
    }
}

/// Phase of a suspended frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameKind {
    /// Start the pattern walk of a level over the whole word; the first
    /// position is looked up when the frame is resumed.
    Open,
    /// Swap at `pos`, then continue the walk of the window `[floor, n]`.
    SuffixLoop,
}

/// A suspended step of the recursive walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frame {
    pub kind: FrameKind,
    /// The symbol `q` whose pattern is being walked.
    pub level: usize,
    pub pos: usize,
    /// Left end of the active suffix window.
    pub floor: usize,
}

/// Hamiltonian-path enumerator for any alphabet.
///
/// Each call to [`Iterator::next`] emits the next swap and applies it to the
/// internal word; `None` means all `count_words(P)` words have been visited.
#[derive(Debug, Clone)]
pub struct Enumerator {
    start: Word,
    word: Vec<u16>,
    sigma: usize,
    trees: Trees,
    frames: Vec<Frame>,
    /// `next_level[q]`: smallest level `>= q` with both labels present.
    next_level: Vec<Option<usize>>,
    /// Symbols that occur, in increasing order.
    present: Vec<usize>,
}

impl Enumerator {
    pub fn new(start: &Word) -> Result<Self> {
        if start.is_empty() {
            return Err(Error::EmptyWord);
        }
        let sigma = start.sigma();
        let counts = start.parikh();
        let counts = counts.counts();
        let present: Vec<usize> = (1..=sigma).filter(|&x| counts[x - 1] > 0).collect();

        let mut next_level = vec![None; sigma + 2];
        let mut above = 0usize;
        for q in (1..=sigma).rev() {
            next_level[q] = if counts[q - 1] > 0 && above > 0 {
                Some(q)
            } else {
                next_level[q + 1]
            };
            above += counts[q - 1];
        }

        let word = start.raw().to_vec();
        let trees = Trees::build(&word, sigma);
        let mut e = Enumerator {
            start: start.clone(),
            word,
            sigma,
            trees,
            frames: Vec::new(),
            next_level,
            present,
        };
        e.descend(1);
        e.trees.counter.end_preprocessing();
        Ok(e)
    }

    /// Rebuilds the enumerator from a checkpoint by replaying from its start.
    pub fn resume(checkpoint: &Checkpoint) -> Result<Self> {
        let mut e = Enumerator::new(&checkpoint.start)?;
        for k in 0..checkpoint.emitted {
            if e.next().is_none() {
                return Err(Error::CheckpointMismatch(format!(
                    "stream ended after {k} swaps"
                )));
            }
        }
        if e.current_word() != checkpoint.current {
            return Err(Error::CheckpointMismatch(format!(
                "replay reached {}, checkpoint says {}",
                e.current_word(),
                checkpoint.current
            )));
        }
        Ok(e)
    }

    pub fn start_word(&self) -> &Word {
        &self.start
    }

    /// The word reached after all emitted swaps.
    pub fn current_word(&self) -> Word {
        Word::from_raw(self.word.clone(), self.sigma)
    }

    /// Positions currently holding `x`.
    pub fn positions_of(&self, x: usize) -> &OrderedIndexSet {
        &self.trees.sets[x - 1]
    }

    pub fn delay_stats(&self) -> DelayStats {
        self.trees.counter.stats()
    }

    pub fn frame_depth(&self) -> usize {
        self.frames.len()
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            start: self.start.clone(),
            current: self.current_word(),
            emitted: self.trees.counter.outputs,
        }
    }

    pub fn next_swap(&mut self) -> Option<Swap> {
        let frame = self.pop()?;
        let (pos, floor) = match frame.kind {
            FrameKind::SuffixLoop => (frame.pos, frame.floor),
            FrameKind::Open => {
                let m = self
                    .boundary(frame.level)
                    .expect("opened levels have both labels");
                (m, 1)
            }
        };
        Some(self.step(frame.level, pos, floor))
    }

    fn push(&mut self, frame: Frame) {
        self.trees.counter.tick(1);
        self.frames.push(frame);
    }

    fn pop(&mut self) -> Option<Frame> {
        self.trees.counter.tick(1);
        self.frames.pop()
    }

    /// Opens every level `>= from` that has work, deepest on top.
    fn descend(&mut self, from: usize) {
        let mut l = from;
        while let Some(q) = self.next_level.get(l).copied().flatten() {
            self.push(Frame {
                kind: FrameKind::Open,
                level: q,
                pos: 0,
                floor: 1,
            });
            l = q + 1;
        }
    }

    /// `min(last q, last symbol > q)`: the level-`q` pattern is constant
    /// strictly after this position.
    fn boundary(&mut self, q: usize) -> Option<usize> {
        let last_q = self.trees.max(q)?;
        let mut last_above = None;
        for k in 0..self.present.len() {
            let x = self.present[k];
            if x > q {
                last_above = last_above.max(self.trees.max(x));
            }
        }
        last_above.map(|a: usize| a.min(last_q))
    }

    /// Level-`q` position just before `i`.
    fn previous_position(&mut self, q: usize, i: usize) -> Option<usize> {
        if q <= self.present[0] {
            // every position is a level-q position
            return i.checked_sub(1).filter(|&p| p >= 1);
        }
        let mut best = None;
        for k in 0..self.present.len() {
            let x = self.present[k];
            if x >= q {
                best = best.max(self.trees.pred_below(x, i));
            }
        }
        best
    }

    /// First level-`q` position after `i` whose label differs from `i`'s.
    fn partner(&mut self, q: usize, i: usize) -> usize {
        let j = if self.word[i - 1] as usize == q {
            let mut best: Option<usize> = None;
            for k in 0..self.present.len() {
                let x = self.present[k];
                if x > q {
                    if let Some(p) = self.trees.succ_above(x, i) {
                        best = Some(best.map_or(p, |b| b.min(p)));
                    }
                }
            }
            best
        } else {
            self.trees.succ_above(q, i)
        };
        j.expect("the window holds both labels")
    }

    fn step(&mut self, q: usize, i: usize, floor: usize) -> Swap {
        let j = self.partner(q, i);
        let (a, b) = (self.word[i - 1] as usize, self.word[j - 1] as usize);
        self.trees.relocate(a, i, j);
        self.trees.relocate(b, j, i);
        self.word.swap(i - 1, j - 1);

        if let Some(next) = self.previous_position(q, i).filter(|&p| p >= floor) {
            self.push(Frame {
                kind: FrameKind::SuffixLoop,
                level: q,
                pos: next,
                floor,
            });
        }
        if let Some(m) = self.boundary(q).filter(|&m| m > i) {
            self.push(Frame {
                kind: FrameKind::SuffixLoop,
                level: q,
                pos: m,
                floor: i + 1,
            });
        }
        self.descend(q + 1);
        self.trees.counter.output();
        Swap::new(i, j).expect("i < j")
    }
}

impl Iterator for Enumerator {
    type Item = Swap;

    fn next(&mut self) -> Option<Swap> {
        self.next_swap()
    }
}

/// The two-symbol walk on its own: two position sets and suffix-loop frames
/// only.
///
/// Accepts any word with at most two distinct symbols.
#[derive(Debug, Clone)]
pub struct BinaryEnumerator {
    start: Word,
    word: Vec<u16>,
    sigma: usize,
    /// The two symbols in play; equal when only one symbol occurs.
    symbols: [u16; 2],
    trees: Trees,
    frames: Vec<(usize, usize)>,
}

impl BinaryEnumerator {
    pub fn new(start: &Word) -> Result<Self> {
        if start.is_empty() {
            return Err(Error::EmptyWord);
        }
        let present: Vec<u16> = start
            .parikh()
            .counts()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(k, _)| (k + 1) as u16)
            .collect();
        let symbols = match present[..] {
            [a] => [a, a],
            [a, b] => [a, b],
            _ => {
                return Err(Error::InvalidParikh(format!(
                    "binary enumeration needs at most two distinct symbols, {start} has {}",
                    present.len()
                )))
            }
        };
        let word = start.raw().to_vec();
        let trees = Trees::build(&word, start.sigma());
        let mut e = BinaryEnumerator {
            start: start.clone(),
            word,
            sigma: start.sigma(),
            symbols,
            trees,
            frames: Vec::new(),
        };
        if let Some(m) = e.boundary() {
            e.push(m, 1);
        }
        e.trees.counter.end_preprocessing();
        Ok(e)
    }

    pub fn start_word(&self) -> &Word {
        &self.start
    }

    pub fn current_word(&self) -> Word {
        Word::from_raw(self.word.clone(), self.sigma)
    }

    pub fn delay_stats(&self) -> DelayStats {
        self.trees.counter.stats()
    }

    fn push(&mut self, pos: usize, floor: usize) {
        self.trees.counter.tick(1);
        self.frames.push((pos, floor));
    }

    fn boundary(&mut self) -> Option<usize> {
        let [a, b] = self.symbols;
        if a == b {
            return None;
        }
        Some(self.trees.max(a as usize)?.min(self.trees.max(b as usize)?))
    }

    pub fn next_swap(&mut self) -> Option<Swap> {
        self.trees.counter.tick(1);
        let (i, floor) = self.frames.pop()?;
        let [a, b] = self.symbols;
        let c = self.word[i - 1];
        let other = if c == a { b } else { a };
        let j = self
            .trees
            .succ_above(other as usize, i)
            .expect("the window holds both symbols");
        self.trees.relocate(c as usize, i, j);
        self.trees.relocate(other as usize, j, i);
        self.word.swap(i - 1, j - 1);

        if i > floor {
            self.push(i - 1, floor);
        }
        if let Some(m) = self.boundary().filter(|&m| m > i) {
            self.push(m, i + 1);
        }
        self.trees.counter.output();
        Some(Swap::new(i, j).expect("i < j"))
    }
}

impl Iterator for BinaryEnumerator {
    type Item = Swap;

    fn next(&mut self) -> Option<Swap> {
        self.next_swap()
    }
}

/// Result of [`enumerate_all`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub swaps: u64,
    pub final_word: Word,
    pub stats: DelayStats,
}

/// Drives an [`Enumerator`] to exhaustion, handing each swap to `sink`.
pub fn enumerate_all<F, E>(start: &Word, mut sink: F) -> std::result::Result<EnumerationSummary, E>
where
    F: FnMut(Swap) -> std::result::Result<(), E>,
    E: From<Error>,
{
    let mut e = Enumerator::new(start)?;
    let mut swaps = 0;
    while let Some(s) = e.next_swap() {
        sink(s)?;
        swaps += 1;
    }
    Ok(EnumerationSummary {
        swaps,
        final_word: e.current_word(),
        stats: e.delay_stats(),
    })
}

/// Pause point of an enumeration, resumable by replaying from `start`.
///
/// Text form:
///
/// ```text
/// start 11122
/// current 12121
/// emitted 4
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub start: Word,
    pub current: Word,
    pub emitted: u64,
}

impl fmt::Display for Checkpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start {}", self.start)?;
        writeln!(f, "current {}", self.current)?;
        writeln!(f, "emitted {}", self.emitted)
    }
}

impl FromStr for Checkpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut start, mut current, mut emitted) = (None, None, None);
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (key, value) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| Error::Parse(format!("bad checkpoint line {line:?}")))?;
            match key {
                "start" => start = Some(value.trim().to_string()),
                "current" => current = Some(value.trim().to_string()),
                "emitted" => {
                    emitted = Some(
                        value
                            .trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad emitted count {value:?}")))?,
                    )
                }
                _ => return Err(Error::Parse(format!("unknown checkpoint key {key:?}"))),
            }
        }
        let missing = |k: &str| Error::Parse(format!("checkpoint lacks {k:?}"));
        let start = Word::parse(&start.ok_or_else(|| missing("start"))?, None)?;
        let current = Word::parse(
            &current.ok_or_else(|| missing("current"))?,
            Some(start.sigma()),
        )?;
        Ok(Checkpoint {
            start,
            current,
            emitted: emitted.ok_or_else(|| missing("emitted"))?,
        })
    }
}
