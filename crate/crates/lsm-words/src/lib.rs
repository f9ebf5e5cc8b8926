//! Analysis toolkit for the family of ternary words fixed by the
//! substitution `L -> L^p S, S -> M, M -> L^(p-1) S` (`p >= 2`).
//!
//! The crate provides:
//!
//! * [`word`] — the alphabet, word algebra, the substitution, lazy
//!   generation of the fixed point, and unique preimages;
//! * [`parikh`] — sliding-window Parikh spectra, Abelian complexity,
//!   per-letter balance spreads, and the nine-candidate frame;
//! * [`witness`] — explicit witness factors realizing the extremal balance
//!   differences and the maximal number of distinct Parikh vectors;
//! * [`verify`] — one-shot checkers for every structural and quantitative
//!   property, an independent brute-force oracle, and an aggregated,
//!   machine-readable verification report.

pub mod parikh;
pub mod verify;
pub mod witness;
pub mod word;

pub use parikh::{
    abelian_complexity, balance_profile, balance_spread, candidate_frame,
    excluded_difference_check, parikh, spectra_range, spectrum, spectrum_fixed, BalanceProfile,
    CandidateFrame, ParikhError, ParikhVector, ScanPolicy, WindowSpectrum,
};
pub use verify::{
    check_ac, check_balance, check_counting, check_structure, oracle_spectrum, run_all,
    CheckKind, CheckResult, CheckStatus, VerificationReport, VerifyConfig, VerifyError,
};
pub use witness::{
    ac7_family, ac_lower_bound_triple, balance_witness_pair, search_witness_pair, Ac7Family,
    WitnessConfig, WitnessError, WitnessPair,
};
pub use word::{
    find_factor, prefix, FixedPointStream, Letter, Substitution, Word, WordError,
    DEFAULT_MAX_WORD_LEN,
};
