//! Alphabet, finite words, the substitution family, and lazy fixed-point
//! generation.
//!
//! The substitution with parameter `p >= 2` acts on the ternary alphabet
//! `{L, S, M}` by
//!
//! ```text
//! L -> L^p S        S -> M        M -> L^(p-1) S
//! ```
//!
//! Its unique fixed point starts with `L`, so the infinite word can be
//! produced by a self-reading expansion: every emitted letter is fed back
//! through the substitution to extend the buffer. Generation of an
//! `n`-letter prefix is O(n) in time and memory.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::parikh::ParikhVector;

/// Default cap on materialized word length, in letters.
pub const DEFAULT_MAX_WORD_LEN: usize = 1 << 27;

#[derive(Debug, Error)]
pub enum WordError {
    #[error("substitution parameter must be at least 2, got {0}")]
    InvalidParameter(u32),
    #[error("requested length {requested} exceeds the configured cap of {cap} letters")]
    ResourceLimit { requested: usize, cap: usize },
    #[error("not an image under the substitution ({reason} at letter {pos})")]
    NotAnImage { pos: usize, reason: &'static str },
    #[error("{unit:?}^{count} is not a {side} of the word")]
    NotPresent {
        unit: String,
        count: usize,
        side: &'static str,
    },
    #[error("counts ({0}, {1}, {2}) are not the letter counts of any image")]
    InconsistentCounts(i64, i64, i64),
    #[error("invalid letter {0:?}; expected one of 'L', 'S', 'M'")]
    InvalidLetter(char),
}

/// One of the three alphabet symbols. The derived order `L < S < M` is the
/// canonical order used everywhere (Parikh components, serialization).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize)]
#[repr(u8)]
pub enum Letter {
    L = 0,
    S = 1,
    M = 2,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::L, Letter::S, Letter::M];

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::S => 'S',
            Letter::M => 'M',
        }
    }

    pub fn from_char(c: char) -> Result<Letter, WordError> {
        match c {
            'L' => Ok(Letter::L),
            'S' => Ok(Letter::S),
            'M' => Ok(Letter::M),
            other => Err(WordError::InvalidLetter(other)),
        }
    }

    /// Position in the canonical order: L = 0, S = 1, M = 2.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// View a letter slice as raw bytes (values 0, 1, 2).
///
/// Used for substring search: the std two-way searcher on `str` stays linear
/// even on the highly repetitive fixed point, where a naive scan degrades
/// quadratically.
fn letters_as_str(letters: &[Letter]) -> &str {
    // SAFETY: Letter is repr(u8), so a slice of Letter is layout-compatible
    // with a slice of u8; all values are 0..=2, hence valid ASCII/UTF-8.
    unsafe {
        let bytes = std::slice::from_raw_parts(letters.as_ptr() as *const u8, letters.len());
        std::str::from_utf8_unchecked(bytes)
    }
}

/// First occurrence of `needle` in `haystack`, as a letter offset.
pub fn find_factor(haystack: &[Letter], needle: &[Letter]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    letters_as_str(haystack).find(letters_as_str(needle))
}

/// A finite word over `{L, S, M}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// The word `a^k`.
    pub fn power(a: Letter, k: usize) -> Word {
        Word(vec![a; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// First occurrence of `needle` as a factor of `self`.
    pub fn find(&self, needle: &Word) -> Option<usize> {
        find_factor(&self.0, &needle.0)
    }

    /// Remove `k` copies of `unit` from the front: the word `unit^-k self`.
    /// `k = 0` is always permitted and returns the word unchanged.
    pub fn strip_prefix_power(&self, unit: &Word, k: usize) -> Result<Word, WordError> {
        let take = unit.len().checked_mul(k).unwrap_or(usize::MAX);
        if take > self.len() || !self.0[..take].chunks(unit.len().max(1)).all(|c| c == unit.letters()) {
            return Err(WordError::NotPresent {
                unit: unit.to_string(),
                count: k,
                side: "prefix",
            });
        }
        Ok(Word(self.0[take..].to_vec()))
    }

    /// Remove `k` copies of `unit` from the end: the word `self unit^-k`.
    pub fn strip_suffix_power(&self, unit: &Word, k: usize) -> Result<Word, WordError> {
        let take = unit.len().checked_mul(k).unwrap_or(usize::MAX);
        if take > self.len()
            || !self.0[self.len() - take..]
                .chunks(unit.len().max(1))
                .all(|c| c == unit.letters())
        {
            return Err(WordError::NotPresent {
                unit: unit.to_string(),
                count: k,
                side: "suffix",
            });
        }
        Ok(Word(self.0[..self.len() - take].to_vec()))
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Word {
        Word(letters.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.0 {
            write!(f, "{}", a.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Word, WordError> {
        s.chars().map(Letter::from_char).collect()
    }
}

/// The substitution `L -> L^p S, S -> M, M -> L^(p-1) S` for a fixed `p >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Substitution {
    p: u32,
}

impl Substitution {
    pub fn new(p: u32) -> Result<Substitution, WordError> {
        if p < 2 {
            return Err(WordError::InvalidParameter(p));
        }
        Ok(Substitution { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Image of a single letter.
    pub fn image(&self, a: Letter) -> Word {
        let mut out = Word::new();
        self.push_image(a, &mut out.0);
        out
    }

    pub fn image_len(&self, a: Letter) -> usize {
        match a {
            Letter::L => self.p as usize + 1,
            Letter::S => 1,
            Letter::M => self.p as usize,
        }
    }

    fn push_image(&self, a: Letter, out: &mut Vec<Letter>) {
        match a {
            Letter::L => {
                out.resize(out.len() + self.p as usize, Letter::L);
                out.push(Letter::S);
            }
            Letter::S => out.push(Letter::M),
            Letter::M => {
                out.resize(out.len() + self.p as usize - 1, Letter::L);
                out.push(Letter::S);
            }
        }
    }

    /// Image of a word: the concatenation of letter images in order.
    /// `|apply(w)| = (p+1)|w|_L + |w|_S + p|w|_M`.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::with_capacity(self.apply_len(w));
        for &a in w.letters() {
            self.push_image(a, &mut out);
        }
        Word(out)
    }

    /// Length of `apply(w)` without materializing it.
    pub fn apply_len(&self, w: &Word) -> usize {
        w.letters().iter().map(|&a| self.image_len(a)).sum()
    }

    /// The iterate of the substitution on a single seed letter.
    pub fn iterate_from(&self, seed: Letter, n: u32, max_len: usize) -> Result<Word, WordError> {
        match self.iterate_len_from(seed, n) {
            Some(len) if len <= max_len as u128 => {}
            _ => {
                return Err(WordError::ResourceLimit {
                    requested: self
                        .iterate_len_from(seed, n)
                        .and_then(|l| usize::try_from(l).ok())
                        .unwrap_or(usize::MAX),
                    cap: max_len,
                })
            }
        }
        let mut w = Word(vec![seed]);
        for _ in 0..n {
            w = self.apply(&w);
        }
        Ok(w)
    }

    /// The word obtained by applying the substitution `n` times to `L`.
    /// `iterate(0)` is the single letter `L`.
    pub fn iterate(&self, n: u32, max_len: usize) -> Result<Word, WordError> {
        self.iterate_from(Letter::L, n, max_len)
    }

    /// Length of the n-th iterate, computed from the letter-count recurrence;
    /// `None` on u128 overflow.
    pub fn iterate_len_from(&self, seed: Letter, n: u32) -> Option<u128> {
        let p = self.p as u128;
        let (mut l, mut s, mut m): (u128, u128, u128) = match seed {
            Letter::L => (1, 0, 0),
            Letter::S => (0, 1, 0),
            Letter::M => (0, 0, 1),
        };
        for _ in 0..n {
            let nl = p.checked_mul(l)?.checked_add((p - 1).checked_mul(m)?)?;
            let ns = l.checked_add(m)?;
            let nm = s;
            l = nl;
            s = ns;
            m = nm;
        }
        l.checked_add(s)?.checked_add(m)
    }

    /// The unique word `x` with `apply(x) = v`, recovered by decomposing `v`
    /// into the blocks `L^p S -> L`, `L^(p-1) S -> M`, `M -> S`.
    ///
    /// Any word admitting such a block decomposition is accepted; whether `v`
    /// is a factor of the fixed point is the caller's concern.
    pub fn preimage(&self, v: &Word) -> Result<Word, WordError> {
        if v.is_empty() {
            return Err(WordError::NotAnImage {
                pos: 0,
                reason: "empty word",
            });
        }
        let p = self.p as usize;
        let mut out = Vec::with_capacity(v.len());
        let mut run = 0usize; // length of the current L-run
        for (i, &a) in v.letters().iter().enumerate() {
            match a {
                Letter::L => run += 1,
                Letter::S => {
                    if run == p {
                        out.push(Letter::L);
                    } else if run == p - 1 {
                        out.push(Letter::M);
                    } else {
                        return Err(WordError::NotAnImage {
                            pos: i,
                            reason: "S terminates an L-run of invalid length",
                        });
                    }
                    run = 0;
                }
                Letter::M => {
                    if run != 0 {
                        return Err(WordError::NotAnImage {
                            pos: i,
                            reason: "M preceded by L inside a block",
                        });
                    }
                    out.push(Letter::S);
                }
            }
        }
        if run != 0 {
            return Err(WordError::NotAnImage {
                pos: v.len() - 1,
                reason: "trailing L-run; word must end with S or M",
            });
        }
        Ok(Word(out))
    }

    /// Invert the letter-count map of the substitution: given the counts
    /// `(a, b, c)` of an image `apply(v)`, recover the counts of `v` as
    /// `(a - (p-1)b, c, -a + pb)`. The length of `v` is their sum, `b + c`.
    pub fn inverse_counts(&self, image: ParikhVector) -> Result<ParikhVector, WordError> {
        let p = self.p as i64;
        let (a, b, c) = (image.l as i64, image.s as i64, image.m as i64);
        let l = a - (p - 1) * b;
        let s = c;
        let m = -a + p * b;
        if l < 0 || m < 0 {
            return Err(WordError::InconsistentCounts(l, s, m));
        }
        Ok(ParikhVector::new(l as u64, s as u64, m as u64))
    }
}

/// Lazy generator of the fixed point: an infinite iterator over its letters.
///
/// Internally keeps the prefix emitted so far and extends it by rewriting
/// the letter at `expand_pos` through the substitution (self-reading
/// expansion, valid because the image of `L` begins with `L`). The stream is
/// deterministic; two streams with the same parameter emit the same letters.
pub struct FixedPointStream {
    sub: Substitution,
    buf: Vec<Letter>,
    expand_pos: usize,
    emitted: usize,
}

impl FixedPointStream {
    pub fn new(sub: Substitution) -> FixedPointStream {
        let buf = sub.image(Letter::L).0;
        FixedPointStream {
            sub,
            buf,
            expand_pos: 1,
            emitted: 0,
        }
    }

    pub fn substitution(&self) -> Substitution {
        self.sub
    }

    /// Number of letters emitted through the iterator so far.
    pub fn emitted(&self) -> usize {
        self.emitted
    }

    fn grow_to(&mut self, len: usize) {
        while self.buf.len() < len {
            debug_assert!(self.expand_pos < self.buf.len());
            let a = self.buf[self.expand_pos];
            self.expand_pos += 1;
            self.sub.push_image(a, &mut self.buf);
        }
    }

    /// Extend the internal buffer to at least `n` letters and return the
    /// prefix of length `n` as a slice.
    pub fn prefix_slice(&mut self, n: usize, max_len: usize) -> Result<&[Letter], WordError> {
        if n > max_len {
            return Err(WordError::ResourceLimit {
                requested: n,
                cap: max_len,
            });
        }
        self.grow_to(n);
        Ok(&self.buf[..n])
    }
}

impl Iterator for FixedPointStream {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        self.grow_to(self.emitted + 1);
        let a = self.buf[self.emitted];
        self.emitted += 1;
        Some(a)
    }
}

/// The first `n` letters of the fixed point.
pub fn prefix(sub: Substitution, n: usize, max_len: usize) -> Result<Word, WordError> {
    let mut stream = FixedPointStream::new(sub);
    stream.prefix_slice(n, max_len).map(Word::from)
}
