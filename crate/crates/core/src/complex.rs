//! Gluing specifications, their realization as facet complexes, and the
//! face-level primitives the oracle is built on.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::faces::{from_mask, to_mask, FaceTable, OracleCap};

/// Clique orders `n_1..n_e`, intersection sizes `r_1..r_{e-1}` and the clique
/// each `S_{m+1}` is glued onto.
///
/// Every intersection is a proper face of both cliques it joins, so each
/// `S_i` is a facet of the realized complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GluingSpec {
    n: Vec<usize>,
    r: Vec<usize>,
    parents: Vec<usize>,
}

/// Validates `(n, r)` and an optional parent assignment `p(2)..p(e)`.
///
/// Without explicit parents, `S_{m+1}` is glued onto the latest clique with
/// more than `r_m` vertices.
pub fn validate_spec(n: &[usize], r: &[usize], parents: Option<&[usize]>) -> Result<GluingSpec> {
    if n.is_empty() {
        return Err(Error::EmptySpec);
    }
    if let Some(index) = n.iter().position(|&x| x == 0) {
        return Err(Error::ZeroClique { index: index + 1 });
    }
    let e = n.len();
    if r.len() != e - 1 {
        return Err(Error::LengthMismatch {
            what: "intersection sizes",
            cliques: e,
            expected: e - 1,
            got: r.len(),
        });
    }
    if let Some(p) = parents {
        if p.len() != e - 1 {
            return Err(Error::LengthMismatch {
                what: "parents",
                cliques: e,
                expected: e - 1,
                got: p.len(),
            });
        }
    }

    let mut resolved = Vec::with_capacity(e - 1);
    for (m, &rm) in r.iter().enumerate() {
        let index = m + 1;
        let child = n[m + 1];
        if rm >= child {
            return Err(Error::InfeasibleIntersection {
                index,
                r: rm,
                reason: format!("S{} has only {child} vertices, so at most {} can be shared", m + 2, child - 1),
            });
        }
        let parent = match parents {
            Some(p) => {
                let parent = p[m];
                if parent == 0 || parent > index {
                    return Err(Error::BadParentIndex {
                        child: m + 2,
                        parent,
                        max: index,
                    });
                }
                if n[parent - 1] <= rm {
                    return Err(Error::InfeasibleIntersection {
                        index,
                        r: rm,
                        reason: format!(
                            "parent S{parent} has {} vertices and would be swallowed by S{}",
                            n[parent - 1],
                            m + 2
                        ),
                    });
                }
                parent
            }
            None => match (1..=index).rev().find(|&p| n[p - 1] > rm) {
                Some(p) => p,
                None => {
                    return Err(Error::InfeasibleIntersection {
                        index,
                        r: rm,
                        reason: format!("no earlier clique has more than {rm} vertices"),
                    })
                }
            },
        };
        resolved.push(parent);
    }

    Ok(GluingSpec {
        n: n.to_vec(),
        r: r.to_vec(),
        parents: resolved,
    })
}

impl GluingSpec {
    pub fn new(n: &[usize], r: &[usize]) -> Result<Self> {
        validate_spec(n, r, None)
    }

    pub fn with_parents(n: &[usize], r: &[usize], parents: &[usize]) -> Result<Self> {
        validate_spec(n, r, Some(parents))
    }

    /// Clique orders `n_1..n_e`.
    pub fn n(&self) -> &[usize] {
        &self.n
    }

    /// Intersection sizes `r_1..r_{e-1}`.
    pub fn r(&self) -> &[usize] {
        &self.r
    }

    /// Resolved parents `p(2)..p(e)`, 1-based.
    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    /// Number of cliques `e`.
    pub fn e(&self) -> usize {
        self.n.len()
    }

    /// Total vertex count `N_r = sum n_i - sum r_j`.
    pub fn n_vertices(&self) -> usize {
        self.n.iter().sum::<usize>() - self.r.iter().sum::<usize>()
    }

    pub fn n_max(&self) -> usize {
        *self.n.iter().max().expect("validated spec is non-empty")
    }

    pub fn n_min(&self) -> usize {
        *self.n.iter().min().expect("validated spec is non-empty")
    }

    /// Dimension of the complex, `n_max - 1`.
    pub fn dim(&self) -> i64 {
        self.n_max() as i64 - 1
    }

    /// Smallest intersection size. A single simplex behaves as if glued along
    /// a facet, so it reports `n_1 - 1`.
    pub fn r_min(&self) -> usize {
        self.r.iter().copied().min().unwrap_or(self.n[0] - 1)
    }

    /// `c_0`, the number of gluings along the empty face.
    pub fn zero_gluings(&self) -> usize {
        self.r.iter().filter(|&&x| x == 0).count()
    }

    pub fn is_simplex(&self) -> bool {
        self.e() == 1
    }

    /// Every admissible parent assignment `p(2)..p(e)`, in lexicographic order.
    pub fn feasible_parents(&self) -> Vec<Vec<usize>> {
        let choices: Vec<Vec<usize>> = self
            .r
            .iter()
            .enumerate()
            .map(|(m, &rm)| (1..=m + 1).filter(|&p| self.n[p - 1] > rm).collect())
            .collect();
        if choices.is_empty() {
            return vec![Vec::new()];
        }
        choices.into_iter().multi_cartesian_product().collect()
    }
}

impl fmt::Display for GluingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n=({}) r=({})", self.n.iter().join(","), self.r.iter().join(","))
    }
}

/// A simplicial complex on vertices `1..=N`, stored by its facets.
///
/// Facets are sorted vertex lists, kept inclusion-maximal and sorted, so two
/// complexes are equal iff they have the same faces. Vertices that lie in no
/// facet are allowed; Alexander duals can have them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacetComplex {
    n_vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl FacetComplex {
    pub fn new(n_vertices: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::VoidComplex);
        }
        let mut facets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        for f in &facets {
            if let Some(&vertex) = f.iter().find(|&&v| v == 0 || v > n_vertices) {
                return Err(Error::BadVertex { vertex, n: n_vertices });
            }
        }
        facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|g| is_subset(&f, g)) {
                kept.push(f);
            }
        }
        kept.sort();
        Ok(FacetComplex {
            n_vertices,
            facets: kept,
        })
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        FacetComplex {
            n_vertices: n,
            facets: vec![(1..=n).collect()],
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// `max |F| - 1`; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(Vec::len).max().unwrap_or(0) as i64 - 1
    }

    /// Smallest facet dimension.
    pub fn min_facet_dim(&self) -> i64 {
        self.facets.iter().map(Vec::len).min().unwrap_or(0) as i64 - 1
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.n_vertices
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// Face membership table for subset enumeration.
    pub fn face_table(&self, cap: OracleCap) -> Result<FaceTable> {
        cap.check(self.n_vertices)?;
        Ok(FaceTable::from_facets(
            self.n_vertices,
            self.facets.iter().map(|f| to_mask(f)),
        ))
    }

    /// Facets of an enumerated face table.
    pub fn from_table(table: &FaceTable) -> Result<Self> {
        let facets: Vec<Vec<usize>> = table.facets().into_iter().map(from_mask).collect();
        FacetComplex::new(table.n_vertices(), facets)
    }
}

impl fmt::Display for FacetComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets = self
            .facets
            .iter()
            .map(|face| format!("{{{}}}", face.iter().join(",")))
            .join(", ");
        write!(f, "[{}] on {} vertices", facets, self.n_vertices)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// Face numbers `f_{-1}, f_0, ..., f_{d-1}` of a simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    entries: Vec<BigInt>,
}

impl FVector {
    /// Trailing zeros are dropped; the leading entry must be `f_{-1} = 1`.
    pub fn new(mut entries: Vec<BigInt>) -> Result<Self> {
        while entries.len() > 1 && entries.last().is_some_and(Zero::is_zero) {
            entries.pop();
        }
        if entries.first().map_or(true, |f| !f.is_one()) {
            return Err(Error::InternalMismatch(
                "an f-vector must start with f_{-1} = 1".into(),
            ));
        }
        if let Some(neg) = entries.iter().find(|x| *x < &BigInt::zero()) {
            return Err(Error::InternalMismatch(format!("negative face count {neg}")));
        }
        Ok(FVector { entries })
    }

    pub fn from_counts(counts: &[usize]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Entries starting at `f_{-1}`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `f_i` for `i >= -1`; zero beyond the dimension.
    pub fn get(&self, i: i64) -> BigInt {
        usize::try_from(i + 1)
            .ok()
            .and_then(|idx| self.entries.get(idx).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn dim(&self) -> i64 {
        self.entries.len() as i64 - 2
    }

    /// Faces of dimension at most `k`.
    pub fn truncate(&self, k: i64) -> FVector {
        let keep = (k + 2).clamp(1, self.entries.len() as i64) as usize;
        FVector {
            entries: self.entries[..keep].to_vec(),
        }
    }

    /// `sum_i (-1)^i f_i`, including the empty face.
    pub fn reduced_euler(&self) -> BigInt {
        self.entries
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (idx, f)| {
                if idx % 2 == 0 {
                    acc - f
                } else {
                    acc + f
                }
            })
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(", "))
    }
}

/// Realizes a validated spec on vertices `1..=N_r`.
///
/// `S_1 = {1..n_1}`; each later clique takes the `r_m` highest-numbered
/// vertices of its parent followed by `n_{m+1} - r_m` fresh labels.
pub fn realize(spec: &GluingSpec) -> FacetComplex {
    let cliques = realize_cliques(spec);
    FacetComplex::new(spec.n_vertices(), cliques).expect("realized cliques are valid facets")
}

/// The cliques `S_1..S_e` in gluing order, each sorted.
pub fn realize_cliques(spec: &GluingSpec) -> Vec<Vec<usize>> {
    let mut cliques: Vec<Vec<usize>> = Vec::with_capacity(spec.e());
    cliques.push((1..=spec.n[0]).collect());
    let mut next = spec.n[0] + 1;
    for (m, (&rm, &parent)) in spec.r.iter().zip(&spec.parents).enumerate() {
        let source = &cliques[parent - 1];
        let mut clique: Vec<usize> = source[source.len() - rm..].to_vec();
        let fresh = spec.n[m + 1] - rm;
        clique.extend(next..next + fresh);
        next += fresh;
        cliques.push(clique);
    }
    cliques
}

/// Face numbers by explicit subset enumeration.
pub fn brute_f_vector(cx: &FacetComplex, cap: OracleCap) -> Result<FVector> {
    FVector::from_counts(&cx.face_table(cap)?.counts_by_size())
}

/// The subcomplex of faces of dimension at most `k`.
pub fn skeleton(cx: &FacetComplex, k: i64) -> Result<FacetComplex> {
    if k < -1 {
        return Err(Error::BadSkeleton(k));
    }
    if k >= cx.dim() {
        return Ok(cx.clone());
    }
    let size = (k + 1) as usize;
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for f in &cx.facets {
        if f.len() <= size {
            facets.push(f.clone());
        } else {
            facets.extend(f.iter().copied().combinations(size));
        }
    }
    FacetComplex::new(cx.n_vertices, facets)
}

/// Inclusion-minimal non-faces, sorted by size and then lexicographically.
pub fn minimal_nonfaces(cx: &FacetComplex, cap: OracleCap) -> Result<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<usize>> = cx
        .face_table(cap)?
        .minimal_nonfaces()
        .into_iter()
        .map(from_mask)
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `{X \ F : F not a face}`, whose facets are the complements of the minimal
/// non-faces.
pub fn alexander_dual(cx: &FacetComplex, cap: OracleCap) -> Result<FacetComplex> {
    cap.check(cx.n_vertices)?;
    if cx.is_full_simplex() {
        return Err(Error::VoidDual);
    }
    let all: Vec<usize> = (1..=cx.n_vertices).collect();
    let facets = minimal_nonfaces(cx, cap)?
        .into_iter()
        .map(|m| all.iter().copied().filter(|v| !m.contains(v)).collect())
        .collect();
    FacetComplex::new(cx.n_vertices, facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> GluingSpec {
        GluingSpec::new(&[3, 5, 6], &[2, 3]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn validates_example() {
        let spec = example();
        assert_eq!(spec.n_vertices(), 9);
        assert_eq!(spec.parents(), &[1, 2]);
        assert_eq!(spec.r_min(), 2);
        assert_eq!(GluingSpec::new(&[4], &[]).unwrap().n_vertices(), 4);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            GluingSpec::new(&[2, 5], &[3]),
            Err(Error::InfeasibleIntersection { index: 1, r: 3, .. })
        ));
        assert!(matches!(
            GluingSpec::new(&[3, 3], &[3]),
            Err(Error::InfeasibleIntersection { .. })
        ));
        // S1 would be swallowed by S2
        assert!(matches!(
            GluingSpec::new(&[2, 5], &[2]),
            Err(Error::InfeasibleIntersection { .. })
        ));
        assert!(matches!(
            GluingSpec::new(&[3, 3], &[]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            GluingSpec::with_parents(&[3, 3, 3], &[1, 1], &[1, 3]),
            Err(Error::BadParentIndex { child: 3, parent: 3, max: 2 })
        ));
        assert!(matches!(
            GluingSpec::with_parents(&[2, 4, 4], &[1, 2], &[1, 1]),
            Err(Error::InfeasibleIntersection { index: 2, .. })
        ));
        assert_eq!(GluingSpec::new(&[], &[]), Err(Error::EmptySpec));
        assert_eq!(GluingSpec::new(&[2, 0], &[0]), Err(Error::ZeroClique { index: 2 }));
    }

    #[test]
    fn parent_assignments() {
        assert_eq!(example().feasible_parents(), vec![vec![1, 2]]);
        let spec = GluingSpec::new(&[3, 3, 3], &[1, 2]).unwrap();
        assert_eq!(spec.parents(), &[1, 2]);
        assert_eq!(spec.feasible_parents(), vec![vec![1, 1], vec![1, 2]]);
        assert_eq!(GluingSpec::new(&[4], &[]).unwrap().feasible_parents(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn realizes_example_labels() {
        assert_eq!(
            realize_cliques(&example()),
            vec![vec![1, 2, 3], vec![2, 3, 4, 5, 6], vec![4, 5, 6, 7, 8, 9]]
        );
        assert_eq!(realize(&GluingSpec::new(&[4], &[]).unwrap()), FacetComplex::simplex(4));
        assert_eq!(
            realize(&GluingSpec::new(&[3, 3], &[0]).unwrap()).facets(),
            &[vec![1, 2, 3], vec![4, 5, 6]]
        );
    }

    #[test]
    fn brute_f_vectors() {
        let cx = realize(&example());
        assert_eq!(
            brute_f_vector(&cx, OracleCap::default()).unwrap().entries(),
            ints(&[1, 9, 24, 30, 20, 7, 1]).as_slice()
        );
        assert_eq!(
            brute_f_vector(&FacetComplex::simplex(4), OracleCap::default()).unwrap().entries(),
            ints(&[1, 4, 6, 4, 1]).as_slice()
        );
        let big = FacetComplex::simplex(15);
        assert_eq!(
            brute_f_vector(&big, OracleCap::default()),
            Err(Error::OracleCapExceeded { n: 15, cap: 14 })
        );
    }

    #[test]
    fn skeletons() {
        let cx = realize(&example());
        let s2 = skeleton(&cx, 2).unwrap();
        assert_eq!(
            brute_f_vector(&s2, OracleCap::default()).unwrap().entries(),
            ints(&[1, 9, 24, 30]).as_slice()
        );
        assert_eq!(skeleton(&cx, 5).unwrap(), cx);
        assert_eq!(skeleton(&cx, 9).unwrap(), cx);
        let edges = skeleton(&FacetComplex::simplex(4), 1).unwrap();
        assert_eq!(edges.facets().len(), 6);
        assert!(edges.facets().iter().all(|f| f.len() == 2));
        let empty = skeleton(&cx, -1).unwrap();
        assert_eq!(empty.facets(), &[Vec::<usize>::new()]);
        assert_eq!(empty.dim(), -1);
        assert_eq!(skeleton(&cx, -2), Err(Error::BadSkeleton(-2)));
    }

    #[test]
    fn minimal_nonfaces_of_example() {
        let cap = OracleCap::default();
        let cx = realize(&example());
        let mins = minimal_nonfaces(&cx, cap).unwrap();
        assert!(!mins.is_empty());
        assert!(mins.iter().all(|m| m.len() == 2));
        assert!(minimal_nonfaces(&FacetComplex::simplex(5), cap).unwrap().is_empty());
        let s1 = skeleton(&cx, 1).unwrap();
        let sizes: Vec<usize> = minimal_nonfaces(&s1, cap).unwrap().iter().map(Vec::len).collect();
        assert!(sizes.iter().all(|&s| s == 2 || s == 3));
        assert!(sizes.contains(&3));
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn alexander_duals() {
        let cap = OracleCap::default();
        let cx = realize(&example());
        let dual = alexander_dual(&cx, cap).unwrap();
        assert_eq!(dual.dim(), 6);
        assert_eq!(brute_f_vector(&dual, cap).unwrap().get(6), BigInt::from(12));
        assert_eq!(alexander_dual(&dual, cap).unwrap(), cx);
        assert_eq!(alexander_dual(&FacetComplex::simplex(3), cap), Err(Error::VoidDual));
        // ghost vertices: {1} and {3} are non-faces of the dual of two edges glued at 2
        let d = alexander_dual(&realize(&GluingSpec::new(&[2, 2], &[1]).unwrap()), cap).unwrap();
        assert_eq!(d.facets(), &[vec![2]]);
    }

    #[test]
    fn facet_complex_normalizes() {
        let a = FacetComplex::new(4, vec![vec![2, 1], vec![1], vec![3, 4], vec![1, 2]]).unwrap();
        assert_eq!(a.facets(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(FacetComplex::new(3, vec![vec![4]]), Err(Error::BadVertex { vertex: 4, n: 3 }));
        assert_eq!(FacetComplex::new(3, vec![]), Err(Error::VoidComplex));
    }
}
