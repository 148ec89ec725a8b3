//! Nonstandard graphs from ultimately periodic sequences of finite graphs.
//!
//! A sequence of graphs, presented finitely, yields a nonstandard graph by
//! the usual equivalence-class construction over an ultrafilter. This crate
//! keeps every "almost everywhere" question decidable by restricting index
//! sets to the Boolean algebra of ultimately periodic subsets of N and
//! deciding membership with an anchored ultrafilter trace ([`upalg`]). On
//! top of that sit exact hypernatural arithmetic, per-index graph
//! algorithms with brute-force oracles ([`graph`]), symbolic evaluators for
//! graph families ([`family`]), the nonstandard graph layer — vertices,
//! edges, hyperfinite paths, distances, spanning-tree counts,
//! Eulerian/Hamiltonian/coloring verdicts ([`nsg`]) — and a small
//! first-order sentence language decided the same way ([`logic`]).
//!
//! Everything is exact integer/rational arithmetic; there is no floating
//! point. The crate is `no_std`-compatible (`alloc` required): disable the
//! default `std` feature for freestanding use.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod family;
pub mod graph;
pub mod logic;
pub mod nsg;
pub mod upalg;

pub use family::{GraphFamily, Property, VertexSelector};
pub use graph::FiniteGraph;
pub use upalg::{AnchoredUltrafilter, Hypernatural, Parity, UpSet, UppSeq};
