//! Forward-error-correction library and simulation harness.
//!
//! The crate provides the building blocks for soft-decision decoding of
//! binary BCH codes over BPSK/AWGN channels:
//!
//! - [`gf2m`]: GF(2^m) arithmetic backed by log/antilog tables.
//! - [`bch`]: BCH code construction, systematic encoding and bounded-distance
//!   decoding (syndromes, Berlekamp-Massey, Chien search).
//! - [`channel`]: BPSK modulation, AWGN, LLRs and reliability sorting.
//! - [`chase2`]: exhaustive Chase-II decoding over the 2^t test patterns of
//!   the t least reliable bits.
//! - [`nn`]: a small MLP that predicts promising test patterns, with training
//!   (He init, Adam, BCE) and a binary model file format.
//! - [`nnchase`]: the MLP-guided Chase decoder (NN-rho) that expands the
//!   predicted base pattern by all flip subsets of size up to rho.
//! - [`complexity`]: closed-form FLOPS accounting for the decoders.
//! - [`ldpc`]: ALIST parsing and normalized min-sum decoding, used as an
//!   iterative-decoding baseline.
//! - [`sim`]: the Monte Carlo harness (CER sweeps, dataset generation, EPMF
//!   analysis, wall-clock benchmarks) behind the CLI.

pub mod bch;
pub mod channel;
pub mod chase2;
pub mod complexity;
pub mod gf2m;
pub mod ldpc;
pub mod nn;
pub mod nnchase;
pub mod sim;

pub use bch::{BchCode, BddOutcome, ErrorLocator, Syndromes};
pub use gf2m::{FieldElement, FieldTables};
