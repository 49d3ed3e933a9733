//! Closed forms for the Alexander dual `Δ_r^∨` and its skeletons, and the
//! explicit two-step resolution of `K[Δ_r^∨]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::betti::BettiTable;
use crate::binomial::binom;
use crate::closed_form::face_count;
use crate::complex::{realize_cliques, FVector, GluingSpec};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

fn require_dual(spec: &GluingSpec) -> Result<()> {
    if spec.is_simplex() {
        Err(Error::VoidDual)
    } else {
        Ok(())
    }
}

fn n_vertices(spec: &GluingSpec) -> i64 {
    spec.n_vertices() as i64
}

/// `f_i(Δ^∨) = C(N, i+1) - f_{N-i-2}(Δ)`.
fn dual_face_count(spec: &GluingSpec, i: i64) -> BigInt {
    let n = n_vertices(spec);
    binom(n, i + 1) - face_count(spec, n - i - 1)
}

/// Face numbers of the dual for `-1 <= i <= N - 3`.
pub fn dual_f_vector(spec: &GluingSpec) -> Result<FVector> {
    require_dual(spec)?;
    let n = n_vertices(spec);
    FVector::new((-1..=n - 3).map(|i| dual_face_count(spec, i)).collect())
}

/// `h`-polynomial of the Cohen-Macaulay ring `K[Δ^∨]` and its multiplicity.
///
/// The multiplicity is evaluated both as `h(1)` and as
/// `P''(1) / 2` for the numerator `P`; the two must agree.
pub fn dual_h_vector(spec: &GluingSpec) -> Result<(IntPolynomial, BigInt)> {
    require_dual(spec)?;
    let n = n_vertices(spec);
    let ramp = |x: i64| x.max(0);
    let coefficients: Vec<BigInt> = (0..=n - 2)
        .map(|k| {
            let added: i64 = spec.n().iter().map(|&a| ramp(k - n + a as i64 + 1)).sum();
            let shared: i64 = spec.r().iter().map(|&b| ramp(k - n + b as i64 + 1)).sum();
            BigInt::from(k + 1 - added + shared)
        })
        .collect();
    let h = IntPolynomial::new(coefficients);
    let at_one = h.eval(&BigInt::one());

    let pair = |x: i64| (n - x) * (n - x - 1);
    let twice: i64 = spec.r().iter().map(|&b| pair(b as i64)).sum::<i64>()
        - spec.n().iter().map(|&a| pair(a as i64)).sum::<i64>();
    let quadratic = BigInt::from(twice / 2);
    if twice % 2 != 0 || quadratic != at_one {
        return Err(Error::InternalMismatch(format!(
            "dual multiplicity: h(1) = {at_one}, quadratic formula = {twice}/2"
        )));
    }
    Ok((h, at_one))
}

/// `1 - sum t^{N - n_m} + sum t^{N - r_m}`.
pub fn dual_hilbert_numerator(spec: &GluingSpec) -> Result<IntPolynomial> {
    require_dual(spec)?;
    let n = spec.n_vertices();
    let mut p = IntPolynomial::one();
    for &a in spec.n() {
        p = p - IntPolynomial::monomial(BigInt::one(), n - a);
    }
    for &b in spec.r() {
        p = p + IntPolynomial::monomial(BigInt::one(), n - b);
    }
    Ok(p)
}

pub fn dual_betti_table(spec: &GluingSpec) -> Result<BettiTable> {
    require_dual(spec)?;
    let n = spec.n_vertices();
    let mut table = BettiTable::unit(n);
    for &a in spec.n() {
        table.add(1, n - a, 1);
    }
    for &b in spec.r() {
        table.add(2, n - b, 1);
    }
    Ok(table)
}

/// Squarefree-or-not monomial in `x_1..x_N`, stored as an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial {
            exponents: vec![0; n_vars],
        }
    }

    /// Product of the given 1-based variables.
    pub fn from_vertices(n_vars: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(n_vars);
        for v in vertices {
            m.exponents[v - 1] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (idx, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{}", idx + 1)),
                _ => factors.push(format!("x{}^{}", idx + 1, e)),
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// A matrix entry `coefficient * monomial`; zero entries have coefficient 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coefficient: i64,
    pub monomial: Monomial,
}

impl Term {
    pub fn zero(n_vars: usize) -> Self {
        Term {
            coefficient: 0,
            monomial: Monomial::one(n_vars),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient == 0
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coefficient {
            0 => write!(f, "0"),
            1 => write!(f, "{}", self.monomial),
            -1 => write!(f, "-{}", self.monomial),
            c => write!(f, "{c}*{}", self.monomial),
        }
    }
}

/// `0 -> ⊕ R(-(N - r_m)) --d2--> ⊕ R(-(N - n_m)) --d1--> I -> 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedResolution {
    pub n_vars: usize,
    pub generator_shifts: Vec<usize>,
    pub relation_shifts: Vec<usize>,
    /// `g_1..g_e`.
    pub d1: Vec<Monomial>,
    /// `e` rows, `e - 1` columns.
    pub d2: Vec<Vec<Term>>,
}

impl GradedResolution {
    /// Every column of `d2` has exactly two nonzero entries of opposite sign.
    pub fn columns_well_formed(&self) -> bool {
        (0..self.relation_shifts.len()).all(|m| {
            let nonzero: Vec<i64> = self
                .d2
                .iter()
                .map(|row| row[m].coefficient)
                .filter(|&c| c != 0)
                .collect();
            nonzero.len() == 2 && nonzero[0].signum() == -nonzero[1].signum()
        })
    }

    /// `deg g_a + deg d2[a][m] = relation_shifts[m]` for every nonzero entry,
    /// and `deg g_a = generator_shifts[a]`.
    pub fn is_homogeneous(&self) -> bool {
        let generators = self
            .d1
            .iter()
            .zip(&self.generator_shifts)
            .all(|(g, &s)| g.degree() as usize == s);
        generators
            && self.d2.iter().enumerate().all(|(a, row)| {
                row.iter().zip(&self.relation_shifts).all(|(t, &shift)| {
                    t.is_zero() || (self.d1[a].degree() + t.monomial.degree()) as usize == shift
                })
            })
    }

    /// `d1 * d2` computed with exact monomial arithmetic.
    pub fn composite(&self) -> Vec<BTreeMap<Monomial, i64>> {
        (0..self.relation_shifts.len())
            .map(|m| {
                let mut sum: BTreeMap<Monomial, i64> = BTreeMap::new();
                for (a, row) in self.d2.iter().enumerate() {
                    let t = &row[m];
                    if t.is_zero() {
                        continue;
                    }
                    *sum.entry(self.d1[a].mul(&t.monomial)).or_insert(0) += t.coefficient;
                }
                sum.retain(|_, c| *c != 0);
                sum
            })
            .collect()
    }

    pub fn composes_to_zero(&self) -> bool {
        self.composite().iter().all(BTreeMap::is_empty)
    }

    /// `1 - sum t^{generator shift} + sum t^{relation shift}`.
    pub fn numerator(&self) -> IntPolynomial {
        let mut p = IntPolynomial::one();
        for &s in &self.generator_shifts {
            p = p - IntPolynomial::monomial(BigInt::one(), s);
        }
        for &s in &self.relation_shifts {
            p = p + IntPolynomial::monomial(BigInt::one(), s);
        }
        p
    }
}

/// The resolution of `I_{Δ^∨}` on the labels produced by
/// [`realize`](crate::complex::realize).
pub fn dual_resolution(spec: &GluingSpec) -> Result<GradedResolution> {
    require_dual(spec)?;
    let n = spec.n_vertices();
    let cliques = realize_cliques(spec);
    let d1: Vec<Monomial> = cliques
        .iter()
        .map(|s| Monomial::from_vertices(n, (1..=n).filter(|v| !s.contains(v))))
        .collect();

    let e = spec.e();
    let mut d2 = vec![vec![Term::zero(n); e - 1]; e];
    for (m, &parent) in spec.parents().iter().enumerate() {
        let (p, c) = (&cliques[parent - 1], &cliques[m + 1]);
        d2[parent - 1][m] = Term {
            coefficient: 1,
            monomial: Monomial::from_vertices(n, p.iter().copied().filter(|v| !c.contains(v))),
        };
        d2[m + 1][m] = Term {
            coefficient: -1,
            monomial: Monomial::from_vertices(n, c.iter().copied().filter(|v| !p.contains(v))),
        };
    }

    Ok(GradedResolution {
        n_vars: n,
        generator_shifts: spec.n().iter().map(|&a| n - a).collect(),
        relation_shifts: spec.r().iter().map(|&b| n - b).collect(),
        d1,
        d2,
    })
}

/// Reduced homology of the dual: a wedge of spheres or nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DualHomology {
    Acyclic,
    Wedge { sphere_dim: i64, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualProfile {
    pub krull_dim: i64,
    pub regularity: i64,
    pub proj_dim: i64,
    pub a_invariant: i64,
    pub cm_type: usize,
    pub multiplicity: BigInt,
    pub gorenstein: bool,
    pub pure_resolution: bool,
    pub linear_resolution: bool,
    pub homology: DualHomology,
}

pub fn dual_profile(spec: &GluingSpec) -> Result<DualProfile> {
    require_dual(spec)?;
    let n = n_vertices(spec);
    let r_min = spec.r_min() as i64;
    let (_, multiplicity) = dual_h_vector(spec)?;
    let all_equal = |xs: &[usize]| xs.windows(2).all(|w| w[0] == w[1]);
    let pure_resolution = all_equal(spec.n()) && all_equal(spec.r());
    let c0 = spec.zero_gluings();
    Ok(DualProfile {
        krull_dim: n - 2,
        regularity: n - r_min - 2,
        proj_dim: 2,
        a_invariant: -r_min,
        cm_type: spec.e() - 1,
        multiplicity,
        gorenstein: spec.e() == 2,
        pure_resolution,
        linear_resolution: pure_resolution && spec.r()[0] + 1 == spec.n()[0],
        homology: if c0 > 0 {
            DualHomology::Wedge {
                sphere_dim: n - 3,
                count: c0,
            }
        } else {
            DualHomology::Acyclic
        },
    })
}

/// Betti table of `K[(Δ^∨)_(k)]`; `k >= N - 3` gives the full dual.
pub fn dual_skeleton_betti_table(spec: &GluingSpec, k: i64) -> Result<BettiTable> {
    if k < -1 {
        return Err(Error::BadSkeleton(k));
    }
    let full = dual_betti_table(spec)?;
    let n = n_vertices(spec);
    if k >= n - 3 {
        return Ok(full);
    }
    let mut table = BettiTable::unit(n as usize);
    for (i, j, v) in full.entries() {
        if ((j - i) as i64) < k + 1 && (i, j) != (0, 0) {
            table.add(i, j, v.clone());
        }
    }
    let delta = spec.r().iter().filter(|&&b| n - b as i64 == k + 2).count();
    for i in 1..=n {
        let correction = |x: usize| {
            let x = x as i64;
            binom(x, n - i - k - 1) * binom(x - n + i + k, i - 1)
        };
        let mut value = binom(n, i + k + 1) * binom(i + k, k + 1);
        for &a in spec.n() {
            value -= correction(a);
        }
        for &b in spec.r() {
            value += correction(b);
        }
        if i == 1 {
            value += delta;
        }
        table.insert_checked(i as usize, (i + k + 1) as usize, value)?;
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualSkeletonProfile {
    pub k: i64,
    pub krull_dim: i64,
    pub proj_dim: i64,
    pub cohen_macaulay: bool,
    pub cm_type: BigInt,
    pub ideal_regularity: i64,
    pub multiplicity: BigInt,
    pub h_degree: i64,
    pub euler: BigInt,
    pub sphere_count: BigInt,
    pub simplex_equal: bool,
}

/// `C(N-1, k+1) - sum C(n_m - 1, N-k-2) + sum C(r_m - 1, N-k-2)`.
fn skeleton_type(spec: &GluingSpec, k: i64) -> BigInt {
    let n = n_vertices(spec);
    let low = n - k - 2;
    let added: BigInt = spec.n().iter().map(|&a| binom(a as i64 - 1, low)).sum();
    let shared: BigInt = spec.r().iter().map(|&b| binom(b as i64 - 1, low)).sum();
    binom(n - 1, k + 1) - added + shared
}

pub fn dual_skeleton_profile(spec: &GluingSpec, k: i64) -> Result<DualSkeletonProfile> {
    require_dual(spec)?;
    let n = n_vertices(spec);
    let top = n - 3;
    if k < -1 || k > top {
        return Err(Error::RangeError { k, lo: -1, hi: top });
    }
    let simplex_equal = k <= n - spec.n_max() as i64 - 2;
    let multiplicity = dual_face_count(spec, k);
    if k == top {
        let profile = dual_profile(spec)?;
        let (h, _) = dual_h_vector(spec)?;
        let c0 = BigInt::from(spec.zero_gluings());
        let sign = if top.rem_euclid(2) == 0 { 1 } else { -1 };
        return Ok(DualSkeletonProfile {
            k,
            krull_dim: profile.krull_dim,
            proj_dim: 2,
            cohen_macaulay: true,
            cm_type: BigInt::from(profile.cm_type),
            ideal_regularity: profile.regularity + 1,
            multiplicity,
            h_degree: h.degree().map_or(0, |d| d as i64),
            euler: c0.clone() * sign,
            sphere_count: c0,
            simplex_equal,
        });
    }
    let cm_type = skeleton_type(spec, k);
    let h_degree = if !cm_type.is_zero() {
        k + 1
    } else {
        let f = dual_f_vector(spec)?.truncate(k);
        crate::closed_form::h_polynomial(&f, (k + 1) as usize)
            .degree()
            .map_or(0, |d| d as i64)
    };
    let euler = if k.rem_euclid(2) == 0 {
        cm_type.clone()
    } else {
        -cm_type.clone()
    };
    Ok(DualSkeletonProfile {
        k,
        krull_dim: k + 1,
        proj_dim: n - k - 1,
        cohen_macaulay: true,
        cm_type: cm_type.clone(),
        ideal_regularity: k + 2,
        multiplicity,
        h_degree,
        euler,
        sphere_count: cm_type,
        simplex_equal,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegularityBound {
    pub ideal_reg_full: i64,
    pub skeleton_gen_degree: i64,
    pub bound_holds: bool,
    pub equality: bool,
}

/// `reg I_{Δ^∨} <= deg I_{(Δ^∨)_(k)}` for `N - r_min - 3 <= k < N - 3`.
pub fn regularity_bound_check(spec: &GluingSpec, k: i64) -> Result<RegularityBound> {
    require_dual(spec)?;
    let n = n_vertices(spec);
    let r_min = spec.r_min() as i64;
    let (lo, hi) = (n - r_min - 3, n - 4);
    if k < lo || k > hi {
        return Err(Error::RangeError { k, lo, hi });
    }
    let ideal_reg_full = n - r_min - 1;
    let skeleton_gen_degree = k + 2;
    Ok(RegularityBound {
        ideal_reg_full,
        skeleton_gen_degree,
        bound_holds: ideal_reg_full <= skeleton_gen_degree,
        equality: ideal_reg_full == skeleton_gen_degree,
    })
}

/// Shifted-row value of the `k`-skeleton of the full simplex on `n` vertices.
pub fn simplex_skeleton_betti(n: usize, k: i64, i: i64) -> BigInt {
    binom(n as i64, i + k + 1) * binom(i + k, k + 1)
}
