use std::fmt;

use crate::error::{Error, Result};

/// A vertex of the binary tree `B_k`: a 0/1 word of length at most `k`.
///
/// The empty word is the root. Words are ordered level by level and
/// lexicographically within a level, which is also their index order in
/// [`build_binary_tree`](super::build_binary_tree).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryTreeVertex {
    bits: Vec<bool>,
}

impl BinaryTreeVertex {
    pub fn root() -> Self {
        Self::default()
    }

    pub fn new(bits: Vec<bool>) -> Self {
        BinaryTreeVertex { bits }
    }

    /// Parses `"0110"`; the root is written `"e"` (or the empty string).
    pub fn parse(word: &str) -> Result<Self> {
        if word == "e" {
            return Ok(Self::root());
        }
        word.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Malformed(format!("`{word}` is not a binary word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `|δ|`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_root(&self) -> bool {
        self.bits.is_empty()
    }

    /// `δ'`, the word with its last letter removed.
    pub fn parent(&self) -> Option<Self> {
        (!self.is_root()).then(|| Self::new(self.bits[..self.len() - 1].to_vec()))
    }

    pub fn child(&self, bit: bool) -> Self {
        let mut bits = self.bits.clone();
        bits.push(bit);
        Self::new(bits)
    }

    /// Concatenation `self ++ suffix`.
    pub fn concat(&self, suffix: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&suffix.bits);
        Self::new(bits)
    }

    /// Strict prefix relation `δ ≺ ε`.
    pub fn is_strict_prefix_of(&self, other: &Self) -> bool {
        self.len() < other.len() && other.bits.starts_with(&self.bits)
    }

    /// Last common ancestor `δ ∧ ε`.
    pub fn meet(&self, other: &Self) -> Self {
        let r = self.bits.iter().zip(&other.bits).take_while(|(a, b)| a == b).count();
        Self::new(self.bits[..r].to_vec())
    }

    /// Tree distance `|δ| + |ε| - 2|δ ∧ ε|`.
    pub fn distance(&self, other: &Self) -> u32 {
        let r = self.bits.iter().zip(&other.bits).take_while(|(a, b)| a == b).count();
        (self.len() + other.len() - 2 * r) as u32
    }

    /// Index in the level-order numbering: `2^|δ| - 1 + value(δ)`.
    pub fn index(&self) -> usize {
        let value = self.bits.iter().fold(0usize, |acc, &b| acc << 1 | b as usize);
        (1usize << self.len()) - 1 + value
    }

    pub fn from_index(index: usize) -> Self {
        let len = (usize::BITS - (index + 1).leading_zeros() - 1) as usize;
        let value = index + 1 - (1 << len);
        Self::new((0..len).rev().map(|i| value >> i & 1 == 1).collect())
    }

    /// Display label; the root is `"e"`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BinaryTreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_root() {
            return f.write_str("e");
        }
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
