use num_bigint::BigInt;

use super::linalg::{self, SparseRow};
use super::FieldChoice;
use crate::betti::BettiTable;
use crate::complex::FacetComplex;
use crate::error::Result;
use crate::faces::{FaceTable, Mask, OracleCap};
use crate::poly::IntPolynomial;

/// Reduced homology dimensions, starting at `H~_{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn new(dims: Vec<usize>) -> Self {
        HomologyProfile { dims }
    }

    /// `dims()[0]` is `H~_{-1}`, `dims()[d + 1]` is `H~_d`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn get(&self, d: i64) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.dims.get(i).copied())
            .unwrap_or(0)
    }

    /// Top dimension covered, the dimension of the complex.
    pub fn top_dim(&self) -> i64 {
        self.dims.len() as i64 - 2
    }

    /// `sum_d (-1)^d dim H~_d`.
    pub fn euler(&self) -> BigInt {
        self.dims
            .iter()
            .enumerate()
            .map(|(idx, &h)| {
                let h = BigInt::from(h);
                if idx % 2 == 0 {
                    -h
                } else {
                    h
                }
            })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&h| h == 0)
    }

    /// Dimensions `d` with `H~_d != 0`.
    pub fn support(&self) -> Vec<i64> {
        (0..self.dims.len())
            .filter(|&i| self.dims[i] != 0)
            .map(|i| i as i64 - 1)
            .collect()
    }
}

/// Face counts and boundary ranks of one induced subcomplex.
///
/// `faces[t]` counts faces with `t` vertices and `ranks[t]` is the rank of
/// the boundary map from `t`-vertex faces to `(t-1)`-vertex faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRanks {
    faces: Vec<usize>,
    ranks: Vec<usize>,
}

impl ChainRanks {
    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Largest face size present.
    pub fn max_size(&self) -> usize {
        self.faces.len() - 1
    }

    /// `dim H~_{t-1}` of the subcomplex of faces with at most `max_size`
    /// vertices.
    pub fn homology(&self, t: usize, max_size: usize) -> usize {
        if t > max_size || t >= self.faces.len() {
            return 0;
        }
        let outgoing = self.ranks[t];
        let incoming = if t < max_size { self.ranks.get(t + 1).copied().unwrap_or(0) } else { 0 };
        self.faces[t] - outgoing - incoming
    }

    /// Homology of the truncation to faces with at most `max_size` vertices.
    pub fn profile(&self, max_size: usize) -> HomologyProfile {
        let top = max_size.min(self.max_size());
        HomologyProfile::new((0..=top).map(|t| self.homology(t, max_size)).collect())
    }
}

struct Scratch {
    index: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            index: vec![0; 1 << n],
        }
    }
}

/// Face counts and boundary ranks of the subcomplex induced on `w`.
pub fn chain_ranks(table: &FaceTable, w: Mask, field: FieldChoice) -> ChainRanks {
    chain_ranks_with(table, w, field, &mut Scratch::new(table.n_vertices()))
}

fn chain_ranks_with(table: &FaceTable, w: Mask, field: FieldChoice, scratch: &mut Scratch) -> ChainRanks {
    let mut by_size: Vec<Vec<Mask>> = vec![Vec::new(); w.count_ones() as usize + 1];
    let mut sub = w;
    loop {
        if table.contains(sub) {
            by_size[sub.count_ones() as usize].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & w;
    }
    while by_size.len() > 1 && by_size.last().is_some_and(Vec::is_empty) {
        by_size.pop();
    }
    if by_size[0].is_empty() {
        // void complex: no chains at all
        return ChainRanks {
            faces: vec![0],
            ranks: vec![0, 0],
        };
    }
    let faces: Vec<usize> = by_size.iter().map(Vec::len).collect();
    let top = faces.len() - 1;
    let mut ranks = vec![0usize; top + 2];

    if is_cone(table, w, &by_size) {
        // acyclic: f_t = rank_t + rank_{t+1}
        for t in 0..=top {
            ranks[t + 1] = faces[t] - ranks[t];
        }
        return ChainRanks { faces, ranks };
    }

    if top >= 1 {
        ranks[1] = 1;
    }
    for t in 2..=top {
        for (idx, &face) in by_size[t - 1].iter().enumerate() {
            scratch.index[face as usize] = idx as u32;
        }
        let rows: Vec<SparseRow> = by_size[t]
            .iter()
            .map(|&face| {
                let mut row = Vec::with_capacity(t);
                let mut bits = face;
                let mut pos = 0;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    let col = scratch.index[(face ^ low) as usize] as usize;
                    row.push((col, if pos % 2 == 0 { 1 } else { -1 }));
                    bits ^= low;
                    pos += 1;
                }
                row
            })
            .collect();
        ranks[t] = linalg::rank(field, &rows, faces[t - 1]);
    }
    ChainRanks { faces, ranks }
}

/// Some vertex of `w` can be added to every face inside `w`.
fn is_cone(table: &FaceTable, w: Mask, by_size: &[Vec<Mask>]) -> bool {
    let mut bits = w;
    while bits != 0 {
        let v = bits & bits.wrapping_neg();
        bits ^= v;
        if by_size
            .iter()
            .flatten()
            .all(|&f| f & v != 0 || table.contains(f | v))
        {
            return true;
        }
    }
    false
}

/// Betti tables and homology of several skeletons of one complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochsterFamily {
    pub ks: Vec<i64>,
    pub tables: Vec<BettiTable>,
    pub homology: Vec<HomologyProfile>,
}

/// Runs Hochster's formula once over all vertex subsets and reads off the
/// table of every requested skeleton `k >= -1`.
///
/// The `k`-skeleton of `Δ|_W` shares every boundary map of `Δ|_W` below
/// dimension `k`, so one rank computation per subset serves all `k`.
pub fn hochster_family(table: &FaceTable, ks: &[i64], field: FieldChoice) -> HochsterFamily {
    let n = table.n_vertices();
    let mut scratch = Scratch::new(n);
    let mut tables: Vec<BettiTable> = ks.iter().map(|_| BettiTable::new(n)).collect();
    let mut homology = Vec::new();
    let full = table.full_mask();
    let max_sizes: Vec<usize> = ks.iter().map(|&k| (k + 1).max(0) as usize).collect();

    for w in 0..=full {
        let ranks = chain_ranks_with(table, w, field, &mut scratch);
        let j = w.count_ones() as usize;
        for (out, &max_size) in tables.iter_mut().zip(&max_sizes) {
            for t in 0..=max_size.min(ranks.max_size()) {
                let h = ranks.homology(t, max_size);
                if h != 0 {
                    out.add(j - t, j, h);
                }
            }
        }
        if w == full {
            homology = max_sizes.iter().map(|&m| ranks.profile(m)).collect();
        }
    }
    HochsterFamily {
        ks: ks.to_vec(),
        tables,
        homology,
    }
}

pub fn hochster_betti(cx: &FacetComplex, field: FieldChoice, cap: OracleCap) -> Result<BettiTable> {
    let table = cx.face_table(cap)?;
    let mut family = hochster_family(&table, &[cx.dim()], field);
    Ok(family.tables.pop().expect("one table requested"))
}

pub fn reduced_homology(cx: &FacetComplex, field: FieldChoice, cap: OracleCap) -> Result<HomologyProfile> {
    let table = cx.face_table(cap)?;
    let ranks = chain_ranks(&table, table.full_mask(), field);
    Ok(ranks.profile(ranks.max_size()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BettiInvariants {
    pub proj_dim: i64,
    pub regularity: i64,
    pub depth: i64,
}

/// Projective dimension and regularity from the table support, depth by
/// Auslander-Buchsbaum.
pub fn invariants_from_betti(table: &BettiTable, n_vertices: usize) -> BettiInvariants {
    let proj_dim = table.proj_dim() as i64;
    BettiInvariants {
        proj_dim,
        regularity: table.regularity() as i64,
        depth: n_vertices as i64 - proj_dim,
    }
}

/// `sum_t f_{t-1} t^t (1-t)^{N-t}` from enumerated faces.
pub fn hilbert_from_faces(cx: &FacetComplex, cap: OracleCap) -> Result<IntPolynomial> {
    let counts = cx.face_table(cap)?.counts_by_size();
    Ok(numerator_from_counts(&counts, cx.n_vertices()))
}

/// `sum_t counts[t] t^t (1 - t)^(n - t)`, the Hilbert numerator from face counts by size.
pub fn numerator_from_counts(counts: &[usize], n: usize) -> IntPolynomial {
    counts
        .iter()
        .enumerate()
        .fold(IntPolynomial::zero(), |acc, (t, &c)| {
            acc + IntPolynomial::monomial(BigInt::from(c), t) * IntPolynomial::one_minus_t_pow(n - t)
        })
}
