//! Words over `[1, σ]`, their Parikh vectors, and 2-swaps.
//!
//! All positions in the public interface are 1-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ordered_set::OrderedIndexSet;

/// A letter of the alphabet `[1, σ]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u16);

impl Symbol {
    pub fn new(value: usize, sigma: usize) -> Result<Self> {
        if value == 0 || value > sigma || value > u16::MAX as usize {
            return Err(Error::SymbolOutOfRange {
                symbol: value,
                sigma,
            });
        }
        Ok(Symbol(value as u16))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A 2-swap `(i, j)` with `1 <= i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Swap {
    i: usize,
    j: usize,
}

impl Swap {
    /// Builds a swap from two distinct 1-based positions given in either order.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a == b {
            return Err(Error::InvalidSwap(a, b));
        }
        Ok(Swap {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn i(self) -> usize {
        self.i
    }

    pub fn j(self) -> usize {
        self.j
    }
}

impl fmt::Display for Swap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.i, self.j)
    }
}

impl FromStr for Swap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!("expected \"i j\", got {s:?}")));
        };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad position {t:?}")))
        };
        Swap::new(parse(a)?, parse(b)?)
    }
}

/// A finite word over the alphabet `[1, σ]`.
///
/// Ordering is lexicographic on the symbol sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<u16>,
    sigma: usize,
}

impl Word {
    pub fn new(symbols: &[usize], sigma: usize) -> Result<Self> {
        let symbols = symbols
            .iter()
            .map(|&s| Symbol::new(s, sigma).map(|s| s.0))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { symbols, sigma })
    }

    /// Builds a word whose alphabet size is its largest symbol (at least 1).
    pub fn from_symbols(symbols: &[usize]) -> Result<Self> {
        let sigma = symbols.iter().copied().max().unwrap_or(1).max(1);
        Word::new(symbols, sigma)
    }

    pub(crate) fn from_raw(symbols: Vec<u16>, sigma: usize) -> Self {
        debug_assert!(symbols.iter().all(|&s| s >= 1 && s as usize <= sigma));
        Word { symbols, sigma }
    }

    /// Parses a digit string (`"11221122"`) or a comma list (`"1,10,2"`).
    ///
    /// When `sigma` is `None` the alphabet size is the largest symbol seen.
    pub fn parse(text: &str, sigma: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let symbols: Vec<usize> = if text.is_empty() {
            Vec::new()
        } else if text.contains(',') {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad symbol {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad symbol {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        match sigma {
            Some(sigma) => Word::new(&symbols, sigma),
            None => Word::from_symbols(&symbols),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Symbol at 1-based position `pos`.
    pub fn get(&self, pos: usize) -> Result<usize> {
        pos.checked_sub(1)
            .and_then(|k| self.symbols.get(k))
            .map(|&s| s as usize)
            .ok_or(Error::OutOfRange {
                index: pos,
                len: self.len(),
            })
    }

    /// The symbol sequence as plain integers.
    pub fn symbols(&self) -> Vec<usize> {
        self.symbols.iter().map(|&s| s as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.symbols
    }

    pub fn parikh(&self) -> ParikhVector {
        let mut counts = vec![0; self.sigma];
        for &s in &self.symbols {
            counts[s as usize - 1] += 1;
        }
        ParikhVector { counts }
    }

    /// Returns `self ∘ swap`.
    pub fn apply_swap(&self, swap: Swap) -> Result<Word> {
        let mut out = self.clone();
        out.swap_in_place(swap)?;
        Ok(out)
    }

    /// Applies a 2-swap in place, rejecting swaps of equal symbols.
    pub fn swap_in_place(&mut self, swap: Swap) -> Result<()> {
        if swap.j > self.len() {
            return Err(Error::OutOfRange {
                index: swap.j,
                len: self.len(),
            });
        }
        if self.symbols[swap.i - 1] == self.symbols[swap.j - 1] {
            return Err(Error::EqualSymbols {
                i: swap.i,
                j: swap.j,
            });
        }
        self.symbols.swap(swap.i - 1, swap.j - 1);
        Ok(())
    }

    /// Exchanges two positions without the distinct-symbol check.
    ///
    /// Exchanging equal symbols leaves the word unchanged.
    pub fn exchange(&mut self, a: usize, b: usize) -> Result<()> {
        for p in [a, b] {
            if p == 0 || p > self.len() {
                return Err(Error::OutOfRange {
                    index: p,
                    len: self.len(),
                });
            }
        }
        self.symbols.swap(a - 1, b - 1);
        Ok(())
    }

    /// Positions of `x` in this word.
    pub fn positions(&self, x: usize) -> OrderedIndexSet {
        let mut set = OrderedIndexSet::new();
        for (k, &s) in self.symbols.iter().enumerate() {
            if s as usize == x {
                set.insert(k + 1).expect("positions are distinct");
            }
        }
        set
    }

    /// Whether `other` is one 2-swap away from `self`.
    pub fn is_adjacent(&self, other: &Word) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut diff = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(k, _)| k);
        match (diff.next(), diff.next(), diff.next()) {
            (Some(a), Some(b), None) => {
                self.symbols[a] == other.symbols[b] && self.symbols[b] == other.symbols[a]
            }
            _ => false,
        }
    }

    /// Returns `self ∘ π`, the word whose `k`-th symbol is `self[π[k]]`.
    pub fn permute(&self, pi: &[usize]) -> Result<Word> {
        if pi.len() != self.len() {
            return Err(Error::LengthMismatch(pi.len(), self.len()));
        }
        let symbols = pi
            .iter()
            .map(|&p| self.get(p).map(|s| s as u16))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_raw(symbols, self.sigma))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sigma <= 9 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (k, s) in self.symbols.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s, None)
    }
}

/// Occurrence counts of each symbol; names the configuration graph `G(P)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParikhVector {
    counts: Vec<usize>,
}

impl ParikhVector {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidParikh("alphabet must be non-empty".into()));
        }
        if counts.len() > u16::MAX as usize {
            return Err(Error::InvalidParikh("alphabet too large".into()));
        }
        Ok(ParikhVector { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn sigma(&self) -> usize {
        self.counts.len()
    }

    /// Word length `n`.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn max_count(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Number of symbols with a non-zero count.
    pub fn support(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    /// `n! / Π P[i]!`, exactly.
    pub fn count_words(&self) -> BigUint {
        let mut total = BigUint::one();
        let mut placed = 0usize;
        for &c in &self.counts {
            // multiply by C(placed + c, c) one factor at a time; every prefix stays integral
            for k in 1..=c {
                total *= placed + k;
                total /= k;
            }
            placed += c;
        }
        total
    }

    /// `count_words` as a machine integer, or `None` if it does not fit.
    pub fn count_words_u64(&self) -> Option<u64> {
        u64::try_from(self.count_words()).ok()
    }

    /// The lexicographically smallest word with this Parikh vector.
    pub fn first_word(&self) -> Word {
        let mut symbols = Vec::with_capacity(self.total());
        for (k, &c) in self.counts.iter().enumerate() {
            symbols.extend(std::iter::repeat_n((k + 1) as u16, c));
        }
        Word::from_raw(symbols, self.sigma())
    }

    /// All words with this Parikh vector, in lexicographic order.
    pub fn words(&self) -> Words {
        Words {
            next: Some(self.first_word()),
        }
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for ParikhVector {
    type Err = Error;

    /// Accepts `3,2`, `(3,2)` or a single count.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let counts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParikh(format!("bad count {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ParikhVector::new(counts)
    }
}

/// Lexicographic multiset-permutation iterator returned by [`ParikhVector::words`].
#[derive(Debug, Clone)]
pub struct Words {
    next: Option<Word>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.symbols.clone();
        if next_permutation(&mut succ) {
            self.next = Some(Word::from_raw(succ, current.sigma));
        }
        Some(current)
    }
}

fn next_permutation(v: &mut [u16]) -> bool {
    let Some(k) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let l = v
        .iter()
        .rposition(|&x| x > v[k])
        .expect("pivot has a larger successor");
    v.swap(k, l);
    v[k + 1..].reverse();
    true
}
