//! Parikh vectors, sliding-window spectra, balance spreads, and the
//! nine-candidate frame bounding the vectors realizable at each window
//! length.
//!
//! A *window spectrum* at length `n` is the set of Parikh vectors of all
//! length-`n` factors seen in a prefix of the fixed point. Spectra are
//! computed with an O(1)-update rolling count. Because the set of realized
//! vectors only grows with the scanned prefix, a spectrum is declared
//! *stabilized* when doubling the scanned prefix adds no new vectors; the
//! fixed point is linearly recurrent, so this detects the true set for a
//! prefix length linear in `n`. Non-stabilized results are exact lower
//! bounds.

use std::collections::BTreeSet;
use std::ops::Add;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::word::{prefix, FixedPointStream, Letter, Substitution, Word, WordError};
use crate::word::DEFAULT_MAX_WORD_LEN;

#[derive(Debug, Error)]
pub enum ParikhError {
    #[error("window length must be at least 1")]
    EmptyWindow,
    #[error("prefix snapshot holds {have} letters but the scan needs {need}")]
    SnapshotTooShort { have: usize, need: usize },
    #[error("spectrum has no realized vectors")]
    EmptySpectrum,
    #[error("realized vector ({0}, {1}, {2}) lies outside the nine-candidate frame")]
    FrameViolation(u64, u64, u64),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Letter counts `(|w|_L, |w|_S, |w|_M)` of a word. Ordering is
/// lexicographic in that component order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ParikhVector {
    pub l: u64,
    pub s: u64,
    pub m: u64,
}

impl ParikhVector {
    pub fn new(l: u64, s: u64, m: u64) -> ParikhVector {
        ParikhVector { l, s, m }
    }

    pub fn of(letters: &[Letter]) -> ParikhVector {
        let mut v = ParikhVector::default();
        for &a in letters {
            match a {
                Letter::L => v.l += 1,
                Letter::S => v.s += 1,
                Letter::M => v.m += 1,
            }
        }
        v
    }

    pub fn count(&self, a: Letter) -> u64 {
        match a {
            Letter::L => self.l,
            Letter::S => self.s,
            Letter::M => self.m,
        }
    }

    pub fn total(&self) -> u64 {
        self.l + self.s + self.m
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.l, self.s, self.m]
    }

    /// Componentwise difference `self - other`.
    pub fn diff(&self, other: &ParikhVector) -> [i64; 3] {
        [
            self.l as i64 - other.l as i64,
            self.s as i64 - other.s as i64,
            self.m as i64 - other.m as i64,
        ]
    }
}

impl Add for ParikhVector {
    type Output = ParikhVector;
    fn add(self, rhs: ParikhVector) -> ParikhVector {
        ParikhVector::new(self.l + rhs.l, self.s + rhs.s, self.m + rhs.m)
    }
}

impl Serialize for ParikhVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(3))?;
        for c in self.as_array() {
            seq.serialize_element(&c)?;
        }
        seq.end()
    }
}

/// The Parikh vector of a word.
pub fn parikh(w: &Word) -> ParikhVector {
    ParikhVector::of(w.letters())
}

/// How a spectrum scan chooses and grows its prefix.
///
/// The scan starts at `max(floor, window_factor * n)` letters and doubles up
/// to `max_doublings` times; it stops as soon as two consecutive scan lengths
/// realize the same vector set (stabilization). Prefix lengths are clamped to
/// `max_word_len`.
#[derive(Clone, Debug, Serialize)]
pub struct ScanPolicy {
    pub window_factor: usize,
    pub floor: usize,
    pub max_doublings: u32,
    pub max_word_len: usize,
}

impl Default for ScanPolicy {
    fn default() -> ScanPolicy {
        ScanPolicy {
            window_factor: 50,
            floor: 1000,
            max_doublings: 6,
            max_word_len: DEFAULT_MAX_WORD_LEN,
        }
    }
}

impl ScanPolicy {
    fn initial_len(&self, n: usize) -> usize {
        self.floor.max(self.window_factor.saturating_mul(n)).max(n)
    }

    /// The ascending list of prefix lengths the scan may visit, clamped to
    /// the cap and deduplicated.
    pub fn ladder(&self, n: usize) -> Vec<usize> {
        let m0 = self.initial_len(n);
        let mut out = Vec::with_capacity(self.max_doublings as usize + 1);
        for i in 0..=self.max_doublings {
            let len = m0
                .checked_shl(i)
                .unwrap_or(self.max_word_len)
                .min(self.max_word_len);
            if out.last() != Some(&len) {
                out.push(len);
            }
        }
        out
    }

    /// The largest prefix length the scan may need for window length `n`.
    pub fn ladder_max(&self, n: usize) -> usize {
        *self.ladder(n).last().expect("ladder is never empty")
    }
}

/// The set of Parikh vectors realized by length-`n` windows of a scanned
/// prefix of the fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowSpectrum {
    pub p: u32,
    pub n: usize,
    pub vectors: BTreeSet<ParikhVector>,
    pub scanned_prefix_len: usize,
    pub stabilized: bool,
}

#[derive(Serialize)]
struct SpectrumJson<'a> {
    p: u32,
    n: usize,
    stabilized: bool,
    prefix_len: usize,
    vectors: Vec<&'a ParikhVector>,
}

impl WindowSpectrum {
    /// Number of distinct realized vectors.
    pub fn abelian_complexity(&self) -> usize {
        self.vectors.len()
    }

    pub fn min_count(&self, a: Letter) -> u64 {
        self.vectors.iter().map(|v| v.count(a)).min().unwrap_or(0)
    }

    pub fn max_count(&self, a: Letter) -> u64 {
        self.vectors.iter().map(|v| v.count(a)).max().unwrap_or(0)
    }

    /// max - min of the letter's count over the realized vectors.
    pub fn spread(&self, a: Letter) -> u64 {
        self.max_count(a) - self.min_count(a)
    }

    /// Canonical JSON form; `vectors` is sorted lexicographically by the
    /// derived vector order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SpectrumJson {
            p: self.p,
            n: self.n,
            stabilized: self.stabilized,
            prefix_len: self.scanned_prefix_len,
            vectors: self.vectors.iter().collect(),
        })
        .expect("spectrum serialization cannot fail")
    }
}

/// Core rolling scan. Walks length-`n` windows over `prefix`, recording the
/// realized (S, M) count pairs, and reports the set size at each checkpoint
/// prefix length; stops early once two consecutive checkpoints agree.
///
/// Set equality between checkpoints reduces to size equality because the
/// realized set grows monotonically with the scanned prefix.
fn scan_windows(
    prefix: &[Letter],
    n: usize,
    checkpoints: &[usize],
) -> (BTreeSet<ParikhVector>, usize, bool) {
    debug_assert!(!checkpoints.is_empty());
    debug_assert!(checkpoints.windows(2).all(|c| c[0] < c[1]));
    let last = *checkpoints.last().unwrap();
    debug_assert!(last <= prefix.len() && n <= checkpoints[0]);

    let mut s: u64 = 0;
    let mut m: u64 = 0;
    for &a in &prefix[..n] {
        match a {
            Letter::S => s += 1,
            Letter::M => m += 1,
            Letter::L => {}
        }
    }
    let mut seen: Vec<(u64, u64)> = vec![(s, m)];
    let mut cur = (s, m);
    let mut prev_size: Option<usize> = None;
    let mut ci = 0usize;

    for o in 0..=(last - n) {
        if o > 0 {
            let out = prefix[o - 1];
            let inc = prefix[o + n - 1];
            if out != inc {
                match out {
                    Letter::S => s -= 1,
                    Letter::M => m -= 1,
                    Letter::L => {}
                }
                match inc {
                    Letter::S => s += 1,
                    Letter::M => m += 1,
                    Letter::L => {}
                }
                let next = (s, m);
                if next != cur {
                    if !seen.contains(&next) {
                        seen.push(next);
                    }
                    cur = next;
                }
            }
        }
        while ci < checkpoints.len() && o == checkpoints[ci] - n {
            let size = seen.len();
            if prev_size == Some(size) {
                return (build_set(&seen, n), checkpoints[ci], true);
            }
            prev_size = Some(size);
            ci += 1;
        }
    }
    (build_set(&seen, n), last, false)
}

fn build_set(seen: &[(u64, u64)], n: usize) -> BTreeSet<ParikhVector> {
    seen.iter()
        .map(|&(s, m)| ParikhVector::new(n as u64 - s - m, s, m))
        .collect()
}

/// Spectrum over a caller-provided prefix snapshot, following the policy's
/// doubling ladder. The snapshot must cover the whole ladder so that results
/// are identical to [`spectrum`].
pub fn spectrum_over(
    prefix: &[Letter],
    p: u32,
    n: usize,
    policy: &ScanPolicy,
) -> Result<WindowSpectrum, ParikhError> {
    if n == 0 {
        return Err(ParikhError::EmptyWindow);
    }
    let ladder = policy.ladder(n);
    let need = *ladder.last().unwrap();
    if prefix.len() < need {
        return Err(ParikhError::SnapshotTooShort {
            have: prefix.len(),
            need,
        });
    }
    let (vectors, scanned, stabilized) = scan_windows(prefix, n, &ladder);
    Ok(WindowSpectrum {
        p,
        n,
        vectors,
        scanned_prefix_len: scanned,
        stabilized,
    })
}

/// Spectrum of length-`n` windows of the fixed point, with stabilization
/// detection per the policy.
pub fn spectrum(p: u32, n: usize, policy: &ScanPolicy) -> Result<WindowSpectrum, ParikhError> {
    if n == 0 {
        return Err(ParikhError::EmptyWindow);
    }
    let sub = Substitution::new(p)?;
    if policy.initial_len(n) > policy.max_word_len {
        return Err(ParikhError::Word(WordError::ResourceLimit {
            requested: policy.initial_len(n),
            cap: policy.max_word_len,
        }));
    }
    let mut stream = FixedPointStream::new(sub);
    let snapshot = stream.prefix_slice(policy.ladder_max(n), policy.max_word_len)?;
    spectrum_over(snapshot, p, n, policy)
}

/// Spectrum over exactly the first `prefix_len` letters, with no doubling and
/// no stabilization claim.
pub fn spectrum_fixed(
    p: u32,
    n: usize,
    prefix_len: usize,
    max_word_len: usize,
) -> Result<WindowSpectrum, ParikhError> {
    let sub = Substitution::new(p)?;
    let text = prefix(sub, prefix_len, max_word_len)?;
    spectrum_fixed_over(text.letters(), p, n)
}

/// As [`spectrum_fixed`], over a caller-provided prefix.
pub fn spectrum_fixed_over(
    prefix: &[Letter],
    p: u32,
    n: usize,
) -> Result<WindowSpectrum, ParikhError> {
    if n == 0 {
        return Err(ParikhError::EmptyWindow);
    }
    if prefix.len() < n {
        return Err(ParikhError::SnapshotTooShort {
            have: prefix.len(),
            need: n,
        });
    }
    let (vectors, scanned, _) = scan_windows(prefix, n, &[prefix.len()]);
    Ok(WindowSpectrum {
        p,
        n,
        vectors,
        scanned_prefix_len: scanned,
        stabilized: false,
    })
}

/// Stabilized spectra for every window length `1..=max_n`, computed in
/// parallel over one shared prefix snapshot.
pub fn spectra_range(
    p: u32,
    max_n: usize,
    policy: &ScanPolicy,
) -> Result<Vec<WindowSpectrum>, ParikhError> {
    use rayon::prelude::*;

    if max_n == 0 {
        return Err(ParikhError::EmptyWindow);
    }
    let sub = Substitution::new(p)?;
    let mut stream = FixedPointStream::new(sub);
    let snapshot = stream.prefix_slice(policy.ladder_max(max_n), policy.max_word_len)?;
    (1..=max_n)
        .into_par_iter()
        .map(|n| spectrum_over(snapshot, p, n, policy))
        .collect()
}

/// Number of distinct Parikh vectors among length-`n` factors.
pub fn abelian_complexity(p: u32, n: usize, policy: &ScanPolicy) -> Result<usize, ParikhError> {
    Ok(spectrum(p, n, policy)?.abelian_complexity())
}

/// max - min of a letter's count over the length-`n` spectrum.
pub fn balance_spread(
    p: u32,
    letter: Letter,
    n: usize,
    policy: &ScanPolicy,
) -> Result<u64, ParikhError> {
    Ok(spectrum(p, n, policy)?.spread(letter))
}

/// Per-window-length spread of one letter, with its running maximum.
#[derive(Clone, Debug)]
pub struct BalanceProfile {
    pub p: u32,
    pub letter: Letter,
    pub spreads: Vec<SpreadPoint>,
    pub cumulative_max: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SpreadPoint {
    pub n: usize,
    pub spread: u64,
    pub stabilized: bool,
}

/// Spread of `letter` for every window length `1..=max_n`.
pub fn balance_profile(
    p: u32,
    letter: Letter,
    max_n: usize,
    policy: &ScanPolicy,
) -> Result<BalanceProfile, ParikhError> {
    let spectra = spectra_range(p, max_n, policy)?;
    let spreads: Vec<SpreadPoint> = spectra
        .iter()
        .map(|spec| SpreadPoint {
            n: spec.n,
            spread: spec.spread(letter),
            stabilized: spec.stabilized,
        })
        .collect();
    let cumulative_max = spreads.iter().map(|s| s.spread).max().unwrap_or(0);
    Ok(BalanceProfile {
        p,
        letter,
        spreads,
        cumulative_max,
    })
}

/// The nine formal candidate vectors that can cover a window spectrum: with
/// `s_n` and `m_n` centering the S- and M-counts, every realized vector has
/// S-count in `{s_n - 1, s_n, s_n + 1}` and M-count in `{m_n - 1, m_n,
/// m_n + 1}`, the L-count being determined by the window length.
///
/// Candidates may have formally negative components for small `n`; such
/// candidates are simply never realized.
#[derive(Clone, Debug)]
pub struct CandidateFrame {
    pub n: usize,
    pub s_n: u64,
    pub m_n: u64,
    pub candidates: [[i64; 3]; 9],
}

impl CandidateFrame {
    pub fn contains(&self, v: ParikhVector) -> bool {
        self.candidate_index(v).is_some()
    }

    /// 1-based index of the candidate equal to `v`, if any. Candidates are
    /// pairwise distinct, so the index is unique.
    pub fn candidate_index(&self, v: ParikhVector) -> Option<usize> {
        let triple = [v.l as i64, v.s as i64, v.m as i64];
        self.candidates.iter().position(|c| *c == triple).map(|i| i + 1)
    }
}

/// Build the nine-candidate frame of a spectrum, centering at
/// `s_n = min_S + 1` and `m_n = min_M + 1`, and check that every realized
/// vector is one of the nine candidates.
///
/// The centering choice covers all realized counts whenever the spreads are
/// at most 2, whatever their exact values.
pub fn candidate_frame(spec: &WindowSpectrum) -> Result<CandidateFrame, ParikhError> {
    if spec.vectors.is_empty() {
        return Err(ParikhError::EmptySpectrum);
    }
    let s_n = spec.min_count(Letter::S) + 1;
    let m_n = spec.min_count(Letter::M) + 1;
    let base = spec.n as i64 - s_n as i64 - m_n as i64;
    let mut candidates = [[0i64; 3]; 9];
    let mut j = 0;
    for ds in -1..=1i64 {
        for dm in -1..=1i64 {
            candidates[j] = [base - ds - dm, s_n as i64 + ds, m_n as i64 + dm];
            j += 1;
        }
    }
    let frame = CandidateFrame {
        n: spec.n,
        s_n,
        m_n,
        candidates,
    };
    for &v in &spec.vectors {
        if !frame.contains(v) {
            return Err(ParikhError::FrameViolation(v.l, v.s, v.m));
        }
    }
    Ok(frame)
}

/// True when no ordered pair of realized vectors differs by exactly
/// `(3, -2, -1)`.
pub fn excluded_difference_check(spec: &WindowSpectrum) -> bool {
    for a in &spec.vectors {
        for b in &spec.vectors {
            if a.diff(b) == [3, -2, -1] {
                return false;
            }
        }
    }
    true
}

/// Offset of the first length-`n` window of `prefix` whose count of `letter`
/// equals `count`.
pub fn find_window_with_count(
    prefix: &[Letter],
    n: usize,
    letter: Letter,
    count: u64,
) -> Option<usize> {
    if n == 0 || prefix.len() < n {
        return None;
    }
    let mut c: u64 = prefix[..n].iter().filter(|&&a| a == letter).count() as u64;
    if c == count {
        return Some(0);
    }
    for o in 1..=(prefix.len() - n) {
        if prefix[o - 1] == letter {
            c -= 1;
        }
        if prefix[o + n - 1] == letter {
            c += 1;
        }
        if c == count {
            return Some(o);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{prefix, Substitution, DEFAULT_MAX_WORD_LEN};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn pv(l: u64, s: u64, m: u64) -> ParikhVector {
        ParikhVector::new(l, s, m)
    }

    fn vecs(spec: &WindowSpectrum) -> Vec<ParikhVector> {
        spec.vectors.iter().copied().collect()
    }

    #[test]
    fn parikh_examples() {
        assert_eq!(parikh(&Word::new()), pv(0, 0, 0));
        assert_eq!(parikh(&w("LLSLLSM")), pv(4, 2, 1));
        assert_eq!(parikh(&w("MLSLLSM")), pv(3, 2, 2));
    }

    #[test]
    fn parikh_is_additive() {
        let (a, b) = (w("LLSM"), w("MMS"));
        assert_eq!(parikh(&a.concat(&b)), parikh(&a) + parikh(&b));
    }

    #[test]
    fn spectrum_length_one_realizes_all_letters() {
        let spec = spectrum(2, 1, &ScanPolicy::default()).unwrap();
        assert_eq!(vecs(&spec), [pv(0, 0, 1), pv(0, 1, 0), pv(1, 0, 0)]);
        assert!(spec.stabilized);
    }

    #[test]
    fn spectrum_length_two() {
        let spec = spectrum(2, 2, &ScanPolicy::default()).unwrap();
        assert_eq!(
            vecs(&spec),
            [pv(0, 1, 1), pv(1, 0, 1), pv(1, 1, 0), pv(2, 0, 0)]
        );
    }

    #[test]
    fn spectrum_vectors_sum_to_window_length() {
        for n in [1usize, 2, 7, 30] {
            let spec = spectrum(3, n, &ScanPolicy::default()).unwrap();
            assert!(spec.vectors.iter().all(|v| v.total() == n as u64));
            assert!(!spec.vectors.is_empty());
        }
    }

    #[test]
    fn abelian_complexity_examples() {
        let policy = ScanPolicy::default();
        assert_eq!(abelian_complexity(2, 1, &policy).unwrap(), 3);
        assert_eq!(abelian_complexity(2, 2, &policy).unwrap(), 4);
        assert_eq!(abelian_complexity(2, 52, &policy).unwrap(), 7);
    }

    #[test]
    fn spectrum_at_52_matches_known_vectors() {
        let spec = spectrum(2, 52, &ScanPolicy::default()).unwrap();
        assert!(spec.stabilized);
        assert_eq!(
            vecs(&spec),
            [
                pv(28, 16, 8),
                pv(28, 17, 7),
                pv(29, 15, 8),
                pv(29, 16, 7),
                pv(29, 17, 6),
                pv(30, 15, 7),
                pv(30, 16, 6),
            ]
        );
    }

    #[test]
    fn balance_spread_examples() {
        let policy = ScanPolicy::default();
        assert_eq!(balance_spread(2, Letter::M, 7, &policy).unwrap(), 2);
        for p in 2..=6 {
            assert_eq!(balance_spread(p, Letter::L, 1, &policy).unwrap(), 1);
        }
        assert_eq!(balance_spread(2, Letter::L, 37, &policy).unwrap(), 3);
    }

    #[test]
    fn rolling_scan_matches_recount_on_small_prefixes() {
        // recount every window from scratch and compare
        let sub = Substitution::new(2).unwrap();
        let text = prefix(sub, 500, DEFAULT_MAX_WORD_LEN).unwrap();
        for n in [1usize, 2, 3, 7, 16, 100] {
            let naive: BTreeSet<ParikhVector> = (0..=text.len() - n)
                .map(|o| ParikhVector::of(&text.letters()[o..o + n]))
                .collect();
            let rolled = spectrum_fixed_over(text.letters(), 2, n).unwrap();
            assert_eq!(rolled.vectors, naive, "n = {n}");
        }
    }

    #[test]
    fn enlarging_the_prefix_never_shrinks_the_set() {
        for n in [3usize, 10, 25] {
            let small = spectrum_fixed(2, n, 2_000, DEFAULT_MAX_WORD_LEN).unwrap();
            let large = spectrum_fixed(2, n, 20_000, DEFAULT_MAX_WORD_LEN).unwrap();
            assert!(small.vectors.is_subset(&large.vectors));
        }
    }

    #[test]
    fn no_doubling_means_no_stabilization_claim() {
        let policy = ScanPolicy {
            max_doublings: 0,
            ..ScanPolicy::default()
        };
        let spec = spectrum(2, 2, &policy).unwrap();
        assert!(!spec.stabilized);
        assert_eq!(spec.scanned_prefix_len, 1000);
    }

    #[test]
    fn zero_window_rejected() {
        assert!(matches!(
            spectrum(2, 0, &ScanPolicy::default()),
            Err(ParikhError::EmptyWindow)
        ));
    }

    #[test]
    fn snapshot_shorter_than_ladder_rejected() {
        let sub = Substitution::new(2).unwrap();
        let text = prefix(sub, 100, DEFAULT_MAX_WORD_LEN).unwrap();
        assert!(matches!(
            spectrum_over(text.letters(), 2, 1, &ScanPolicy::default()),
            Err(ParikhError::SnapshotTooShort { .. })
        ));
    }

    #[test]
    fn candidate_frame_of_length_two_spectrum() {
        let spec = spectrum(2, 2, &ScanPolicy::default()).unwrap();
        let frame = candidate_frame(&spec).unwrap();
        assert_eq!((frame.s_n, frame.m_n), (1, 1));
        for v in &spec.vectors {
            assert!(frame.contains(*v));
        }
        // formally negative candidates are allowed
        assert!(frame.candidates.iter().any(|c| c[0] < 0));
    }

    #[test]
    fn singleton_spectrum_is_contained_in_its_own_frame() {
        let mut vectors = BTreeSet::new();
        vectors.insert(pv(5, 3, 2));
        let spec = WindowSpectrum {
            p: 2,
            n: 10,
            vectors,
            scanned_prefix_len: 100,
            stabilized: true,
        };
        let frame = candidate_frame(&spec).unwrap();
        assert_eq!((frame.s_n, frame.m_n), (4, 3));
        // with the min+1 centering, a lone vector sits in the first slot
        assert_eq!(frame.candidate_index(pv(5, 3, 2)), Some(1));
        assert_eq!(frame.candidates[4], [3, 4, 3]);
    }

    #[test]
    fn frame_at_52_has_seven_realized_candidates() {
        let spec = spectrum(2, 52, &ScanPolicy::default()).unwrap();
        let frame = candidate_frame(&spec).unwrap();
        let realized: Vec<usize> = spec
            .vectors
            .iter()
            .filter_map(|v| frame.candidate_index(*v))
            .collect();
        assert_eq!(realized.len(), 7);
    }

    #[test]
    fn excluded_difference_examples() {
        for n in [1usize, 2, 7, 37, 52, 100] {
            let spec = spectrum(2, n, &ScanPolicy::default()).unwrap();
            assert!(excluded_difference_check(&spec), "n = {n}");
        }
        let mut vectors = BTreeSet::new();
        vectors.insert(pv(3, 0, 0));
        vectors.insert(pv(0, 2, 1));
        let synthetic = WindowSpectrum {
            p: 2,
            n: 3,
            vectors,
            scanned_prefix_len: 0,
            stabilized: false,
        };
        assert!(!excluded_difference_check(&synthetic));

        let mut single = BTreeSet::new();
        single.insert(pv(1, 1, 1));
        let singleton = WindowSpectrum {
            p: 2,
            n: 3,
            vectors: single,
            scanned_prefix_len: 0,
            stabilized: false,
        };
        assert!(excluded_difference_check(&singleton));
    }

    #[test]
    fn spectra_range_matches_individual_spectra() {
        let policy = ScanPolicy::default();
        let all = spectra_range(2, 20, &policy).unwrap();
        assert_eq!(all.len(), 20);
        for spec in &all {
            let lone = spectrum(2, spec.n, &policy).unwrap();
            assert_eq!(spec, &lone);
        }
    }

    #[test]
    fn find_window_locates_counts() {
        let sub = Substitution::new(2).unwrap();
        let text = prefix(sub, 1000, DEFAULT_MAX_WORD_LEN).unwrap();
        let o = find_window_with_count(text.letters(), 7, Letter::M, 2).unwrap();
        let window = &text.letters()[o..o + 7];
        assert_eq!(ParikhVector::of(window).m, 2);
        assert_eq!(find_window_with_count(text.letters(), 3, Letter::M, 3), None);
    }

    #[test]
    fn spectrum_json_schema() {
        let spec = spectrum(2, 2, &ScanPolicy::default()).unwrap();
        let json = spec.to_json();
        assert_eq!(json["p"], 2);
        assert_eq!(json["n"], 2);
        assert_eq!(json["stabilized"], true);
        assert!(json["prefix_len"].as_u64().unwrap() >= 1000);
        assert_eq!(json["vectors"][0], serde_json::json!([0, 1, 1]));
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"vectors\":[[0,1,1],[1,0,1],[1,1,0],[2,0,0]]"));
    }

    #[test]
    fn balance_profile_tracks_cumulative_max() {
        let profile = balance_profile(2, Letter::M, 10, &ScanPolicy::default()).unwrap();
        assert_eq!(profile.spreads.len(), 10);
        assert_eq!(profile.spreads[6].n, 7);
        assert_eq!(profile.spreads[6].spread, 2);
        assert_eq!(profile.cumulative_max, 2);
    }
}
