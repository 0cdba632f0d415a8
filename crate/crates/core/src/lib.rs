//! Monochromatic cycle partitions of edge-coloured graphs.
//!
//! The crate is organised bottom-up: [`graph`] holds the data model,
//! [`two_matching`] and [`balancing`] the matching machinery,
//! [`hamilton`] the Hamiltonicity tools, [`structure`] the component
//! analysis, and [`exact_partition`] / [`heuristic`] the two solvers.

pub mod balancing;
pub mod budget;
pub mod cli;
pub mod error;
pub mod exact_partition;
pub mod generators;
pub mod graph;
pub mod hamilton;
pub mod heuristic;
pub mod rational;
pub mod structure;
pub mod two_matching;

pub use error::{Error, Result};
pub use exact_partition::{CyclePart, CyclePartitionCertificate};
pub use graph::{Colour, ColouredGraph, ColouredMultiGraph, EdgeColouring, MonoComponent, SimpleGraph};
pub use rational::Rational;
