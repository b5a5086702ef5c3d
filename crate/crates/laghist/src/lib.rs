//! Bijective machinery on permutations and Laguerre histories: a codec
//! between the two families, label-rewriting maps on histories and the
//! permutation maps they induce, and the moment polynomials that certify
//! which statistics the maps transport.

pub mod bijections;
pub mod contfrac;
pub mod digraph;
pub mod laguerre;
pub mod perm;
pub mod theta;
pub mod verify;

pub use laguerre::{HistoryProfile, Label, LaguerreHistory, StepKind};
pub use perm::{CycleKind, Permutation, StatisticProfile};
