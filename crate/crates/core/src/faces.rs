//! Bitmask face tables for complexes on at most a few dozen vertices.
//!
//! Vertex `v` (1-based) is bit `v - 1`. A table stores one flag per subset of
//! the vertex set, so memory is `2^N` bytes; [`OracleCap`] bounds `N`.

use std::fmt;

use crate::error::{Error, Result};

pub type Mask = u32;

/// Largest vertex count any brute-force routine will accept.
pub const DEFAULT_ORACLE_CAP: usize = 14;
const HARD_CAP: usize = 24;

/// Upper bound on the number of vertices for subset enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCap(usize);

impl OracleCap {
    pub fn new(cap: usize) -> Result<Self> {
        if cap == 0 || cap > HARD_CAP {
            return Err(Error::BadOracleCap(cap));
        }
        Ok(OracleCap(cap))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::OracleCapExceeded { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for OracleCap {
    fn default() -> Self {
        OracleCap(DEFAULT_ORACLE_CAP)
    }
}

impl fmt::Display for OracleCap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn to_mask(face: &[usize]) -> Mask {
    face.iter().fold(0, |m, &v| m | (1 << (v - 1)))
}

pub fn from_mask(mask: Mask) -> Vec<usize> {
    (0..Mask::BITS as usize)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// Membership table of a simplicial complex, indexed by vertex subset.
#[derive(Clone, PartialEq, Eq)]
pub struct FaceTable {
    n: usize,
    is_face: Vec<bool>,
}

impl FaceTable {
    /// Downward closure of the given facet masks.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = Mask>) -> Self {
        let mut is_face = vec![false; 1 << n];
        for f in facets {
            is_face[f as usize] = true;
        }
        for m in (1..is_face.len()).rev() {
            if is_face[m] {
                let mut bits = m;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    is_face[m ^ low] = true;
                    bits ^= low;
                }
            }
        }
        FaceTable { n, is_face }
    }

    /// Table of the Alexander dual: `F` is a face iff its complement is not.
    pub fn dual(&self) -> Self {
        let full = self.full_mask() as usize;
        let is_face = (0..self.is_face.len())
            .map(|m| !self.is_face[full ^ m])
            .collect();
        FaceTable { n: self.n, is_face }
    }

    /// Faces with at most `k + 1` vertices.
    pub fn skeleton(&self, k: i64) -> Self {
        let is_face = self
            .is_face
            .iter()
            .enumerate()
            .map(|(m, &f)| f && (m.count_ones() as i64) <= k + 1)
            .collect();
        FaceTable { n: self.n, is_face }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> Mask {
        if self.n == 0 {
            0
        } else {
            Mask::MAX >> (Mask::BITS as usize - self.n)
        }
    }

    pub fn contains(&self, mask: Mask) -> bool {
        self.is_face[mask as usize]
    }

    pub fn is_void(&self) -> bool {
        !self.is_face[0]
    }

    /// Face counts by cardinality: entry `t` is `f_{t-1}`, trailing zeros trimmed.
    pub fn counts_by_size(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n + 1];
        for (m, &f) in self.is_face.iter().enumerate() {
            if f {
                counts[m.count_ones() as usize] += 1;
            }
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    /// All faces, ordered by size and then by mask.
    pub fn faces(&self) -> Vec<Mask> {
        let mut faces: Vec<Mask> = (0..self.is_face.len() as Mask)
            .filter(|&m| self.is_face[m as usize])
            .collect();
        faces.sort_by_key(|&m| (m.count_ones(), m));
        faces
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> Vec<Mask> {
        (0..self.is_face.len() as Mask)
            .filter(|&m| {
                self.is_face[m as usize]
                    && (0..self.n).all(|b| m >> b & 1 == 1 || !self.is_face[(m | 1 << b) as usize])
            })
            .collect()
    }

    /// Non-faces all of whose codimension-one subsets are faces.
    pub fn minimal_nonfaces(&self) -> Vec<Mask> {
        (0..self.is_face.len() as Mask)
            .filter(|&m| {
                if self.is_face[m as usize] {
                    return false;
                }
                let mut bits = m;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    if !self.is_face[(m ^ low) as usize] {
                        return false;
                    }
                    bits ^= low;
                }
                true
            })
            .collect()
    }
}

impl fmt::Debug for FaceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FaceTable")
            .field("n", &self.n)
            .field("facets", &self.facets().into_iter().map(from_mask).collect::<Vec<_>>())
            .finish()
    }
}
