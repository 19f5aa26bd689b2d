//! Binary strings and the string families that induce the cubes.
//!
//! Coordinates are 1-based and coordinate 1 is the leftmost character, so
//! `"0110"` has `bit(2) == true`. A string is stored as a little-endian
//! multiword integer whose binary reading is the string itself; strings of
//! length at most 64 fit in one inline word and their numeric order is the
//! lexicographic order.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::graphs::{Family, FamilySpec};

/// Largest length that [`enumerate_family`] accepts; longer families have
/// more than 2^40 members.
pub const MAX_ENUMERATION_LEN: usize = 64;

/// Above this length enumeration switches from filtering all `2^n` masks to
/// prefix-by-prefix construction.
pub const FILTER_LIMIT: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    len: usize,
    words: SmallVec<[u64; 1]>,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64).max(1)
}

impl BitString {
    /// The empty string.
    pub fn empty() -> Self {
        Self::zeros(0)
    }

    pub fn zeros(len: usize) -> Self {
        BitString {
            len,
            words: smallvec![0; word_count(len)],
        }
    }

    /// Builds a string of length `len <= 64` whose binary reading is `mask`.
    /// Bits of `mask` at or above `len` are ignored.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        assert!(len <= 64, "mask strings hold at most 64 coordinates");
        BitString {
            len,
            words: smallvec![mask & low_mask(len)],
        }
    }

    /// Builds a string from its coordinates, left to right.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut s = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                s.set_pos(bits.len() - 1 - i, true);
            }
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The packed word when the string fits in 64 bits.
    pub fn as_mask(&self) -> Option<u64> {
        (self.len <= 64).then(|| self.words[0])
    }

    // `pos` counts from the right end: pos 0 is coordinate `len`.
    fn get_pos(&self, pos: usize) -> bool {
        (self.words[pos / 64] >> (pos % 64)) & 1 == 1
    }

    fn set_pos(&mut self, pos: usize, value: bool) {
        let bit = 1u64 << (pos % 64);
        if value {
            self.words[pos / 64] |= bit;
        } else {
            self.words[pos / 64] &= !bit;
        }
    }

    /// Coordinate `j` (1-based).
    ///
    /// Panics if `j` is not in `1..=len`.
    pub fn bit(&self, j: usize) -> bool {
        assert!(j >= 1 && j <= self.len, "coordinate {j} out of range");
        self.get_pos(self.len - j)
    }

    /// Coordinates from left to right.
    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).rev().map(move |pos| self.get_pos(pos))
    }

    /// `u + δ_j`: the string differing from `self` exactly at coordinate `j`.
    pub fn flip(&self, j: usize) -> Result<BitString> {
        if j < 1 || j > self.len {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.len,
            });
        }
        let mut v = self.clone();
        let pos = self.len - j;
        v.set_pos(pos, !self.get_pos(pos));
        Ok(v)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn hamming_distance(&self, other: &BitString) -> Option<usize> {
        (self.len == other.len).then(|| {
            self.words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| (a ^ b).count_ones() as usize)
                .sum()
        })
    }

    /// Coordinatewise `self <= other`. Strings of different length are
    /// incomparable.
    pub fn is_below(&self, other: &BitString) -> bool {
        self.len == other.len
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn longest_run_of_ones(&self) -> usize {
        let (mut best, mut run) = (0, 0);
        for b in self.iter() {
            run = if b { run + 1 } else { 0 };
            best = best.max(run);
        }
        best
    }

    /// No `p` consecutive ones.
    pub fn is_pth_order(&self, p: usize) -> bool {
        self.longest_run_of_ones() < p
    }

    /// Any two consecutive ones are separated by at least `p` zeros.
    pub fn is_p_string(&self, p: usize) -> bool {
        let mut last_one: Option<usize> = None;
        for (i, b) in self.iter().enumerate() {
            if b {
                if matches!(last_one, Some(prev) if i - prev < p + 1) {
                    return false;
                }
                last_one = Some(i);
            }
        }
        true
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BitString) -> BitString {
        BitString::from_bits(self.iter().chain(other.iter()))
    }
}

fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Ord for BitString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{self}\")")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                ch => Err(Error::InvalidBit { ch, pos }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BitString::from_bits(bits))
    }
}

impl From<&BitString> for String {
    fn from(s: &BitString) -> String {
        alloc::format!("{s}")
    }
}

/// Members of the family as packed masks, by testing every one of the
/// `2^n` strings.
pub fn family_masks_filtered(spec: &FamilySpec) -> Vec<u64> {
    assert!(spec.n() < 64, "filtering enumerates 2^n masks");
    (0..1u64 << spec.n())
        .filter(|&m| spec.contains_mask(m))
        .collect()
}

/// Members of the family as packed masks, grown one coordinate at a time
/// from the left and pruned as soon as the prefix leaves the family.
pub fn family_masks_recursive(spec: &FamilySpec) -> Vec<u64> {
    let n = spec.n();
    assert!(n <= 64, "masks hold at most 64 coordinates");
    let mut out = Vec::new();
    // `tail` is the current run of ones (p-th order) or the number of zeros
    // since the last one (p-cube, saturating at p).
    let mut stack: Vec<(u64, usize, usize)> = Vec::new();
    let start_tail = match spec.family() {
        Family::PCube => spec.p(),
        _ => 0,
    };
    stack.push((0, 0, start_tail));
    while let Some((prefix, depth, tail)) = stack.pop() {
        if depth == n {
            out.push(prefix);
            continue;
        }
        let mut children: SmallVec<[(u64, usize, usize); 2]> = SmallVec::new();
        match spec.family() {
            Family::Hypercube => {
                children.push((prefix << 1, depth + 1, 0));
                children.push((prefix << 1 | 1, depth + 1, 0));
            }
            Family::PthOrder => {
                children.push((prefix << 1, depth + 1, 0));
                if tail + 1 < spec.p() {
                    children.push((prefix << 1 | 1, depth + 1, tail + 1));
                }
            }
            Family::PCube => {
                children.push((prefix << 1, depth + 1, (tail + 1).min(spec.p())));
                if tail >= spec.p() {
                    children.push((prefix << 1 | 1, depth + 1, 0));
                }
            }
        }
        // Pushed in reverse so the 0-child is explored first.
        stack.extend(children.into_iter().rev());
    }
    out
}

/// Packed members of the family in lexicographic order.
pub fn family_masks(spec: &FamilySpec) -> Result<Vec<u64>> {
    let n = spec.n();
    if n > MAX_ENUMERATION_LEN {
        return Err(Error::DimensionCap {
            n,
            cap: MAX_ENUMERATION_LEN,
        });
    }
    Ok(if n <= FILTER_LIMIT {
        family_masks_filtered(spec)
    } else {
        family_masks_recursive(spec)
    })
}

/// All strings of the family, in lexicographic order.
pub fn enumerate_family(spec: &FamilySpec) -> Result<Vec<BitString>> {
    let n = spec.n();
    Ok(family_masks(spec)?
        .into_iter()
        .map(|m| BitString::from_mask(m, n))
        .collect())
}

/// Maps a p-th order Fibonacci string `u` of length `n` and weight `w` to
/// a composition of `n + 1` into `n + 1 - w` parts in `[1, p]`.
///
/// `u0` is cut into blocks `0, 10, 110, ..., 1^(p-1)0` and block `1^(i-1)0`
/// becomes part `i`.
pub fn string_to_composition(u: &BitString, p: usize) -> Result<Vec<usize>> {
    let mut parts = Vec::with_capacity(u.len() + 1 - u.weight());
    let mut run = 0;
    for b in u.iter().chain(core::iter::once(false)) {
        if b {
            run += 1;
            if run >= p {
                return Err(Error::ForbiddenRun { p });
            }
        } else {
            parts.push(run + 1);
            run = 0;
        }
    }
    Ok(parts)
}

/// Inverse of [`string_to_composition`].
pub fn composition_to_string(parts: &[usize], p: usize) -> Result<BitString> {
    if parts.is_empty() {
        return Err(Error::Precondition(
            "composition must have at least one part",
        ));
    }
    let mut bits = Vec::with_capacity(parts.iter().sum());
    for &part in parts {
        if part < 1 || part > p {
            return Err(Error::PartOutOfRange { part, p });
        }
        bits.extend(core::iter::repeat_n(true, part - 1));
        bits.push(false);
    }
    bits.pop();
    Ok(BitString::from_bits(bits))
}
