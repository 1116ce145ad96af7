//! Rank-3 graph families, orbital computations and 2-closures.

pub mod arith;
pub mod distinguisher;
pub mod error;
pub mod formulas;
pub mod gf;
pub mod graphs;
pub mod iso;
pub mod permgrp;

pub use error::{Error, Result};
pub use gf::{FieldElem, FieldTable, VectorIndexing};
pub use graphs::{DenseGraph, Family, Sign};
pub use permgrp::{GeneratedGroup, OrbitalDecomposition, Permutation};
