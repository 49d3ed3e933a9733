//! Closed formulas for `Δ_r(n_1..n_e)` and its `k`-skeletons.
//!
//! All binomials use the subset-counting convention of [`binom`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::betti::BettiTable;
use crate::binomial::binom;
use crate::complex::{FVector, GluingSpec};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `f_{t-1} = sum_i C(n_i, t) - sum_j C(r_j, t)`.
pub fn face_count(spec: &GluingSpec, t: i64) -> BigInt {
    let added: BigInt = spec.n().iter().map(|&a| binom(a as i64, t)).sum();
    let shared: BigInt = spec.r().iter().map(|&b| binom(b as i64, t)).sum();
    added - shared
}

pub fn f_vector(spec: &GluingSpec) -> FVector {
    let entries = (0..=spec.n_max() as i64).map(|t| face_count(spec, t)).collect();
    FVector::new(entries).expect("closed-form f-vector starts with 1")
}

/// `sum_i (1+x)^{n_i} - sum_j (1+x)^{r_j}`.
pub fn independence_polynomial(spec: &GluingSpec) -> IntPolynomial {
    let added = spec
        .n()
        .iter()
        .fold(IntPolynomial::zero(), |acc, &a| acc + IntPolynomial::one_plus_t_pow(a));
    spec.r()
        .iter()
        .fold(added, |acc, &b| acc - IntPolynomial::one_plus_t_pow(b))
}

/// Numerator `P(t)` of the Hilbert series `P(t) / (1-t)^N`.
pub fn hilbert_numerator(spec: &GluingSpec) -> IntPolynomial {
    let n = spec.n_vertices();
    let added = spec
        .n()
        .iter()
        .fold(IntPolynomial::zero(), |acc, &a| acc + IntPolynomial::one_minus_t_pow(n - a));
    spec.r()
        .iter()
        .fold(added, |acc, &b| acc - IntPolynomial::one_minus_t_pow(n - b))
}

/// `sum_{i=0}^{d} f_{i-1} t^i (1-t)^{d-i}`, the h-polynomial of a complex of
/// Krull dimension `d`.
pub fn h_polynomial(f: &FVector, d: usize) -> IntPolynomial {
    (0..=d).fold(IntPolynomial::zero(), |acc, i| {
        let fi = f.get(i as i64 - 1);
        if fi.is_zero() {
            return acc;
        }
        acc + IntPolynomial::monomial(fi, i) * IntPolynomial::one_minus_t_pow(d - i)
    })
}

/// `beta_{i,i+j}` of the `k`-skeleton of a complex on `n` vertices whose
/// Stanley-Reisner ideal has a `t_lin`-linear resolution, from the face
/// numbers `f` of the whole complex.
///
/// Rows other than the linear strand and the shifted row `j = k + 1` vanish.
/// When the shifted row does not lie above the linear strand it is the
/// truncated alternating sum over faces with at most `k + 1` vertices.
pub fn general_skeleton_betti(
    f: &FVector,
    n: usize,
    t_lin: usize,
    k: i64,
    i: i64,
    j: i64,
) -> Result<BigInt> {
    if i < 0 || j < 0 {
        return Err(Error::BadRowRequest { i, j });
    }
    if k < -1 {
        return Err(Error::BadSkeleton(k));
    }
    let k = k.min(f.dim());
    let n = n as i64;
    let s = i + j;
    let term = |r: i64| binom(n - r, s - r) * f.get(r - 1);
    let sign = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    if i == 0 {
        return Ok(BigInt::from(u8::from(j == 0)));
    }
    // the linear strand of the ring sits in row t_lin - 1
    let lin = t_lin as i64 - 1;
    let value = if j < lin && j != k + 1 {
        BigInt::zero()
    } else if j == k + 1 && j <= lin {
        (0..=k + 1).map(|r| term(r) * sign(j - r)).sum()
    } else if j <= k {
        // below k + 1 the skeleton agrees with the complex, whose only row is lin
        if j == lin {
            (0..=s).map(|r| term(r) * sign(j - r)).sum()
        } else {
            BigInt::zero()
        }
    } else if j == k + 1 {
        (k + 2..=s).map(|r| term(r) * sign(j - r + 1)).sum()
    } else {
        BigInt::zero()
    };
    Ok(value)
}

/// Betti table of `K[(Δ_r)_(k)]`; `k >= dim` gives the full complex.
pub fn skeleton_betti_table(spec: &GluingSpec, k: i64) -> Result<BettiTable> {
    if k < -1 {
        return Err(Error::BadSkeleton(k));
    }
    let n = spec.n_vertices() as i64;
    let dim = spec.dim();
    let mut table = BettiTable::unit(n as usize);
    let linear_row = |i: i64| -> BigInt {
        let shared: BigInt = spec.r().iter().map(|&b| binom(n - b as i64, i + 1)).sum();
        let added: BigInt = spec.n().iter().map(|&a| binom(n - a as i64, i + 1)).sum();
        shared - added
    };
    let sign = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    for i in 1..=n {
        if k >= dim || k >= 1 {
            table.insert_checked(i as usize, (i + 1) as usize, linear_row(i))?;
        }
        if k >= dim {
            continue;
        }
        let (lo, hi) = if k >= 1 { (k + 2, i + k + 1) } else { (0, k + 1) };
        let shift = if k >= 1 { k } else { k + 1 };
        let value: BigInt = (lo..=hi)
            .map(|t| face_count(spec, t) * sign(shift - t) * binom(n - t, k + i + 1 - t))
            .sum();
        table.insert_checked(i as usize, (i + k + 1) as usize, value)?;
    }
    Ok(table)
}

/// Which Cohen-Macaulay-type conditions hold.
///
/// `sequentially_cm` reports the sufficient parameter condition (gluing along
/// facets, or the ring already Cohen-Macaulay); it is not a characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CmClass {
    pub cohen_macaulay: bool,
    pub initially_cm: bool,
    pub sequentially_cm: bool,
}

impl CmClass {
    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.cohen_macaulay {
            out.push("CohenMacaulay");
        }
        if self.initially_cm {
            out.push("InitiallyCM");
        }
        if self.sequentially_cm {
            out.push("SequentiallyCM");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkeletonInvariants {
    pub krull_dim: i64,
    pub regularity: i64,
    pub proj_dim: i64,
    pub depth: i64,
    pub multiplicity: BigInt,
    pub h_degree: i64,
    pub a_invariant: i64,
    pub euler: BigInt,
    pub cm_class: CmClass,
}

/// Reduced Euler characteristic of `(Δ_r)_(k)`.
pub fn euler_characteristic(spec: &GluingSpec, k: i64) -> Result<BigInt> {
    if k < -1 {
        return Err(Error::BadSkeleton(k));
    }
    if k < spec.dim() {
        let sum = (0..=k + 1).map(|t| {
            let f = face_count(spec, t);
            if t % 2 == 1 {
                f
            } else {
                -f
            }
        });
        Ok(sum.sum())
    } else if spec.r_min() == 0 {
        Ok(BigInt::from(spec.zero_gluings()))
    } else {
        Ok(BigInt::zero())
    }
}

pub fn skeleton_invariants(spec: &GluingSpec, k: i64) -> Result<SkeletonInvariants> {
    if k < -1 {
        return Err(Error::BadSkeleton(k));
    }
    let n = spec.n_vertices() as i64;
    let dim = spec.dim();
    let r_min = spec.r_min() as i64;
    let e = spec.e();
    let full = k >= dim;

    let krull_dim = k.min(dim) + 1;
    let regularity = if !full {
        k + 1
    } else if e >= 2 {
        1
    } else {
        0
    };
    let proj_dim = if k <= r_min { n - k.min(dim) - 1 } else { n - r_min - 1 };
    let depth = k.min(r_min) + 1;
    let multiplicity = face_count(spec, k.min(dim) + 1);

    let h_degree = if full {
        if e == 1 {
            0
        } else {
            dim + 1 - r_min
        }
    } else if r_min == 0 && k % 2 != 0 && top_coefficient_cancels(spec, k) {
        let f = f_vector(spec).truncate(k);
        h_polynomial(&f, krull_dim as usize)
            .degree()
            .map_or(0, |d| d as i64)
    } else {
        k + 1
    };

    let cohen_macaulay = k <= r_min || r_min == dim;
    let initially_cm = k <= r_min || r_min == spec.n_min() as i64 - 1;
    let facet_gluing = spec
        .r()
        .iter()
        .zip(&spec.n()[1..])
        .all(|(&r, &n)| r + 1 == n);

    Ok(SkeletonInvariants {
        krull_dim,
        regularity,
        proj_dim,
        depth,
        multiplicity,
        h_degree,
        a_invariant: h_degree - krull_dim,
        euler: euler_characteristic(spec, k)?,
        cm_class: CmClass {
            cohen_macaulay,
            initially_cm,
            sequentially_cm: cohen_macaulay || facet_gluing,
        },
    })
}

/// The top h-coefficient of a skeleton below the dimension is
/// `(-1)^{k+1} (c_0 - sum C(n_m - 1, k+1) + sum C(r_m - 1, k+1))`, so it
/// vanishes exactly when the sums balance.
fn top_coefficient_cancels(spec: &GluingSpec, k: i64) -> bool {
    let added: BigInt = spec.n().iter().map(|&a| binom(a as i64 - 1, k + 1)).sum();
    let shared: BigInt = spec.r().iter().map(|&b| binom(b as i64 - 1, k + 1)).sum();
    added - shared == BigInt::from(spec.zero_gluings())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> GluingSpec {
        GluingSpec::new(&[3, 5, 6], &[2, 3]).unwrap()
    }

    fn row(t: &BettiTable, r: usize) -> Vec<i64> {
        t.row(r).into_iter().map(|(_, v)| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn f_vector_and_polynomials() {
        let spec = example();
        let f: Vec<i64> = f_vector(&spec).entries().iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(f, vec![1, 9, 24, 30, 20, 7, 1]);
        assert_eq!(independence_polynomial(&spec), IntPolynomial::from_i64(&[1, 9, 24, 30, 20, 7, 1]));
        let p = hilbert_numerator(&spec);
        assert_eq!(p.coeff(0), BigInt::from(1));
        assert_eq!(p, h_polynomial(&f_vector(&spec), 9));
        let single = GluingSpec::new(&[3], &[]).unwrap();
        assert_eq!(hilbert_numerator(&single), IntPolynomial::one());
        let two = GluingSpec::new(&[3, 3], &[1]).unwrap();
        assert_eq!(face_count(&two, 1), BigInt::from(5));
    }

    #[test]
    fn example_skeleton_rows() {
        let spec = example();
        let k1 = skeleton_betti_table(&spec, 1).unwrap();
        assert_eq!(row(&k1, 1), vec![12, 30, 34, 21, 7, 1]);
        assert_eq!(row(&k1, 2), vec![30, 160, 357, 427, 289, 105, 16]);
        assert_eq!(row(&skeleton_betti_table(&spec, 2).unwrap(), 3), vec![20, 93, 173, 161, 75, 14]);
        assert_eq!(row(&skeleton_betti_table(&spec, 3).unwrap(), 4), vec![7, 27, 39, 25, 6]);
        let k4 = skeleton_betti_table(&spec, 4).unwrap();
        assert_eq!(row(&k4, 5), vec![1, 3, 3, 1]);
        assert_eq!(k4.get(1, 6), BigInt::from(1));
        let full = skeleton_betti_table(&spec, 5).unwrap();
        assert_eq!(full.rows(), vec![0, 1]);
        assert_eq!(full.proj_dim(), 6);
        assert_eq!(full.get(6, 7), BigInt::from(1));
        assert_eq!(skeleton_betti_table(&spec, 9).unwrap(), full);
    }

    #[test]
    fn general_theorem_entry() {
        let spec = example();
        let f = f_vector(&spec);
        assert_eq!(general_skeleton_betti(&f, 9, 2, 1, 1, 2).unwrap(), BigInt::from(30));
        assert_eq!(general_skeleton_betti(&f, 9, 2, 1, 0, 0).unwrap(), BigInt::from(1));
        assert_eq!(
            general_skeleton_betti(&f, 9, 2, 1, -1, 0),
            Err(Error::BadRowRequest { i: -1, j: 0 })
        );
        for k in -1..=5 {
            let table = skeleton_betti_table(&spec, k).unwrap();
            for i in 0..=9 {
                for j in 0..=9 {
                    assert_eq!(
                        general_skeleton_betti(&f, 9, 2, k, i, j).unwrap(),
                        table.get(i as usize, (i + j) as usize),
                        "k={k} i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn summary_table() {
        let spec = example();
        let expected = [(9, 1, 8), (24, 2, -16), (30, 3, 14), (20, 4, -6), (7, 5, 1), (1, 4, 0)];
        for (k, &(mult, degh, chi)) in expected.iter().enumerate() {
            let inv = skeleton_invariants(&spec, k as i64).unwrap();
            assert_eq!(inv.multiplicity, BigInt::from(mult), "k={k}");
            assert_eq!(inv.h_degree, degh, "k={k}");
            assert_eq!(inv.euler, BigInt::from(chi), "k={k}");
        }
        let k2 = skeleton_invariants(&spec, 2).unwrap();
        assert_eq!((k2.regularity, k2.proj_dim, k2.depth), (3, 6, 3));
        let k5 = skeleton_invariants(&spec, 5).unwrap();
        assert_eq!((k5.regularity, k5.proj_dim), (1, 6));
        assert!(k5.cm_class.initially_cm);
        assert!(!k5.cm_class.cohen_macaulay);
    }

    #[test]
    fn polynomial_ring_and_empty_skeleton() {
        let single = GluingSpec::new(&[3], &[]).unwrap();
        let inv = skeleton_invariants(&single, 2).unwrap();
        assert_eq!((inv.regularity, inv.proj_dim, inv.depth), (0, 0, 3));
        assert_eq!(skeleton_betti_table(&single, 2).unwrap(), BettiTable::unit(3));
        let empty = skeleton_invariants(&example(), -1).unwrap();
        assert_eq!((empty.krull_dim, empty.proj_dim, empty.depth), (0, 9, 0));
        assert_eq!(empty.euler, BigInt::from(-1));
    }

    #[test]
    fn euler_of_disjoint_edges() {
        let spec = GluingSpec::new(&[2, 2], &[0]).unwrap();
        assert_eq!(euler_characteristic(&spec, 1).unwrap(), BigInt::from(1));
        assert_eq!(euler_characteristic(&spec, 4).unwrap(), BigInt::from(1));
        assert_eq!(euler_characteristic(&example(), 1).unwrap(), BigInt::from(-16));
        assert_eq!(euler_characteristic(&example(), 3).unwrap(), BigInt::from(-6));
    }
}
