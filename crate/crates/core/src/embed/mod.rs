//! Explicit embeddings between graphs, lamplighter graphs, Hamming cubes and
//! normed spaces. Each map implements [`BoundedMap`](crate::distortion::BoundedMap)
//! with its claimed constants.

mod binary;
mod coalescence;
mod hamming;
mod induced;
mod normed;
mod path_trees;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use binary::{
    binary_parameters, embed_binary_tree_to_lamp_path, embed_complete_to_binary, embed_hamming_to_lamp_complete,
    embed_lamp_complete_to_lamp_binary, BinaryParameters,
    BinaryToLampPath, CompleteToBinary, HammingToLampComplete, LampCompleteToLampBinary,
};
pub use coalescence::{coalescence_embedding, CoalescenceEmbedding, CoalescenceImage, MAX_CLOVER_EXPONENT};
pub use hamming::{embed_lamp_tree_to_hamming, hamming_coordinates, TreeToHamming};
pub use induced::{grow_witness_set, InducedMap, VertexMap, WitnessSet};
pub use normed::{embed_rose_to_euclidean, embed_star_to_normed, regular_polygon_vertex, RoseToEuclidean, StarToNormed};
pub use path_trees::{embed_lamp_path_to_trees, PathToTrees};

/// A point of a Hamming cube `H_I`, identified with its finite support.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HammingPoint(pub BTreeSet<String>);

impl HammingPoint {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|p △ q|`.
    pub fn distance(&self, other: &Self) -> u64 {
        let shared = self.0.intersection(&other.0).count();
        (self.0.len() + other.0.len() - 2 * shared) as u64
    }
}

/// A point of `R^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EuclideanPoint(pub Vec<f64>);

impl EuclideanPoint {
    pub fn zero(dim: usize) -> Self {
        EuclideanPoint(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn distance(&self, other: &Self, norm: Norm) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let diffs = self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs());
        match norm {
            Norm::L1 => diffs.sum(),
            Norm::L2 => diffs.map(|d| d * d).sum::<f64>().sqrt(),
            Norm::LInf => diffs.fold(0.0, f64::max),
        }
    }
}

/// The `p`-norm, `p ∈ {1, 2, ∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Norm {
    L1,
    L2,
    LInf,
}

impl FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Norm::L1),
            "2" => Ok(Norm::L2),
            "inf" | "infinity" | "max" => Ok(Norm::LInf),
            _ => Err(Error::invalid(format!("unknown norm `{s}`; expected 1, 2 or inf"))),
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Norm::L1 => "1",
            Norm::L2 => "2",
            Norm::LInf => "inf",
        })
    }
}
