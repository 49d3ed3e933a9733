//! Binomial identities obtained by evaluating the Hilbert series of a glued
//! clique complex in two ways, and the alternating convolution behind the
//! skeleton formulas.
//!
//! All sides are evaluated exactly with the generalized binomial
//! ([`binom_general`]), in checked `i128` arithmetic.

use std::fmt;
use std::str::FromStr;

use crate::binomial::binom_general;
use crate::closed_form;
use crate::complex::GluingSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    ConvolutionLemma,
    GeneralHilbert,
    EqualN,
    EqualR,
    EqualNR,
    Reduced,
    ChuVandermonde,
    SingleClique,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::ConvolutionLemma,
        IdentityId::GeneralHilbert,
        IdentityId::EqualN,
        IdentityId::EqualR,
        IdentityId::EqualNR,
        IdentityId::Reduced,
        IdentityId::ChuVandermonde,
        IdentityId::SingleClique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::ConvolutionLemma => "convolution-lemma",
            IdentityId::GeneralHilbert => "general-hilbert",
            IdentityId::EqualN => "equal-n",
            IdentityId::EqualR => "equal-r",
            IdentityId::EqualNR => "equal-nr",
            IdentityId::Reduced => "reduced",
            IdentityId::ChuVandermonde => "chu-vandermonde",
            IdentityId::SingleClique => "single-clique",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One instance of an identity, with the parameters it is evaluated at.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdentityCase {
    ConvolutionLemma { n: i64, a: i64, s: i64 },
    GeneralHilbert { n: Vec<i64>, r: Vec<i64>, j: i64 },
    EqualN { n: i64, r: Vec<i64>, j: i64 },
    EqualR { n: Vec<i64>, r: i64, j: i64 },
    EqualNR { n: i64, r: i64, e: i64, j: i64 },
    Reduced { n: i64, r: i64, e: i64, j: i64 },
    ChuVandermonde { n: i64, r: i64, j: i64 },
    SingleClique { n: i64, j: i64 },
}

impl IdentityCase {
    pub fn id(&self) -> IdentityId {
        match self {
            IdentityCase::ConvolutionLemma { .. } => IdentityId::ConvolutionLemma,
            IdentityCase::GeneralHilbert { .. } => IdentityId::GeneralHilbert,
            IdentityCase::EqualN { .. } => IdentityId::EqualN,
            IdentityCase::EqualR { .. } => IdentityId::EqualR,
            IdentityCase::EqualNR { .. } => IdentityId::EqualNR,
            IdentityCase::Reduced { .. } => IdentityId::Reduced,
            IdentityCase::ChuVandermonde { .. } => IdentityId::ChuVandermonde,
            IdentityCase::SingleClique { .. } => IdentityId::SingleClique,
        }
    }
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.id())?;
        match self {
            IdentityCase::ConvolutionLemma { n, a, s } => write!(f, "n={n} A={a} s={s}"),
            IdentityCase::GeneralHilbert { n, r, j } => write!(f, "n={n:?} r={r:?} j={j}"),
            IdentityCase::EqualN { n, r, j } => write!(f, "n={n} r={r:?} j={j}"),
            IdentityCase::EqualR { n, r, j } => write!(f, "n={n:?} r={r} j={j}"),
            IdentityCase::EqualNR { n, r, e, j } | IdentityCase::Reduced { n, r, e, j } => {
                write!(f, "n={n} r={r} e={e} j={j}")
            }
            IdentityCase::ChuVandermonde { n, r, j } => write!(f, "n={n} r={r} j={j}"),
            IdentityCase::SingleClique { n, j } => write!(f, "n={n} j={j}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: i128,
    pub rhs: i128,
    pub equal: bool,
}

impl IdentityCheck {
    fn new(lhs: i128, rhs: i128) -> Self {
        IdentityCheck {
            lhs,
            rhs,
            equal: lhs == rhs,
        }
    }
}

/// Source of binomial coefficients; the sweeps plug in a lookup table.
trait Binom {
    fn c(&self, a: i64, b: i64) -> Option<i128>;
}

struct Direct;

impl Binom for Direct {
    fn c(&self, a: i64, b: i64) -> Option<i128> {
        binom_general(a, b)
    }
}

/// Precomputed `C(a, b)` for `|a| <= max_a`, `0 <= b <= max_b`.
struct Table {
    max_a: i64,
    max_b: i64,
    values: Vec<i128>,
}

impl Table {
    fn new(max_a: i64, max_b: i64) -> Option<Self> {
        let mut values = Vec::with_capacity(((2 * max_a + 1) * (max_b + 1)) as usize);
        for a in -max_a..=max_a {
            for b in 0..=max_b {
                values.push(binom_general(a, b)?);
            }
        }
        Some(Table { max_a, max_b, values })
    }
}

impl Binom for Table {
    fn c(&self, a: i64, b: i64) -> Option<i128> {
        if b < 0 {
            return Some(0);
        }
        if a.abs() > self.max_a || b > self.max_b {
            return binom_general(a, b);
        }
        Some(self.values[((a + self.max_a) * (self.max_b + 1) + b) as usize])
    }
}

fn overflow() -> Error {
    Error::Overflow("identity evaluation")
}

fn out_of_range(identity: &'static str, reason: impl Into<String>) -> Error {
    Error::ParamOutOfRange {
        identity,
        reason: reason.into(),
    }
}

fn sum<I: IntoIterator<Item = Option<i128>>>(terms: I) -> Option<i128> {
    terms.into_iter().try_fold(0i128, |acc, t| acc.checked_add(t?))
}

fn sign(i: i64) -> i128 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `sum_{t=0}^{s} (-1)^t C(A, t) C(n - t, s - t)` and `C(n - A, s)`.
fn convolution(b: &impl Binom, n: i64, a: i64, s: i64) -> Option<IdentityCheck> {
    let lhs = sum((0..=s).map(|t| {
        let v = b.c(a, t)?.checked_mul(b.c(n - t, s - t)?)?;
        Some(sign(t) * v)
    }))?;
    Some(IdentityCheck::new(lhs, b.c(n - a, s)?))
}

/// `sum_m C(n_m, i) - sum_m C(r_m, i)`, the number of faces with `i` vertices.
fn face_term(b: &impl Binom, n: &[i64], r: &[i64], i: i64) -> Option<i128> {
    let plus = sum(n.iter().map(|&x| b.c(x, i)))?;
    let minus = sum(r.iter().map(|&x| b.c(x, i)))?;
    plus.checked_sub(minus)
}

/// Both sides of the general identity at a fixed `N`.
fn general_at(b: &impl Binom, n: &[i64], r: &[i64], big_n: i64, j: i64) -> Option<IdentityCheck> {
    let plus = sum(n.iter().map(|&x| b.c(big_n - x, j)))?;
    let minus = sum(r.iter().map(|&x| b.c(big_n - x, j)))?;
    let lhs = plus.checked_sub(minus)?;
    let rhs = sum((0..=j).map(|i| {
        let v = face_term(b, n, r, i)?.checked_mul(b.c(big_n - i, j - i)?)?;
        Some(sign(i) * v)
    }))?;
    Some(IdentityCheck::new(lhs, rhs))
}

fn vertex_count(n: &[i64], r: &[i64]) -> i64 {
    n.iter().sum::<i64>() - r.iter().sum::<i64>()
}

fn check_general_ranges(n: &[i64], r: &[i64], j: i64, paired: bool) -> Result<()> {
    const ID: &str = "general-hilbert";
    if n.is_empty() {
        return Err(out_of_range(ID, "at least one clique is required"));
    }
    if r.len() + 1 != n.len() {
        return Err(out_of_range(ID, format!("{} cliques need {} gluing sizes, got {}", n.len(), n.len() - 1, r.len())));
    }
    if j < 1 {
        return Err(out_of_range(ID, format!("j = {j} must be at least 1")));
    }
    if let Some(&x) = r.iter().find(|&&x| x < 1) {
        return Err(out_of_range(ID, format!("gluing size {x} must be at least 1")));
    }
    if !paired {
        return Ok(());
    }
    if let Some((x, y)) = n.iter().zip(r).find(|(x, y)| x < y) {
        return Err(out_of_range(ID, format!("clique size {x} is below gluing size {y}")));
    }
    Ok(())
}

/// The convolution `sum_t (-1)^t C(A,t) C(n-t,s-t) = C(n-A, s)`.
pub fn check_convolution_lemma(n: i64, a: i64, s: i64) -> Result<IdentityCheck> {
    if n < 0 || a < 0 || s < 0 {
        return Err(out_of_range("convolution-lemma", "n, A and s must be non-negative"));
    }
    convolution(&Direct, n, a, s).ok_or_else(overflow)
}

/// Coefficient of `t^j` in the two expressions for the Hilbert numerator:
/// `sum_m C(N - n_m, j) - sum_m C(N - r_m, j)` against
/// `sum_i (-1)^i f_{i-1} C(N - i, j - i)`.
///
/// Any valid spec with positive gluing sizes is accepted; the gluing rule
/// bounds `r_m` by the child and parent sizes rather than by `n_m`.
pub fn check_hilbert_identity(spec: &GluingSpec, j: i64) -> Result<IdentityCheck> {
    let n: Vec<i64> = spec.n().iter().map(|&x| x as i64).collect();
    let r: Vec<i64> = spec.r().iter().map(|&x| x as i64).collect();
    check_general_ranges(&n, &r, j, false)?;
    general_at(&Direct, &n, &r, spec.n_vertices() as i64, j).ok_or_else(overflow)
}

/// Coefficients of `sum_i f_{i-1} t^i (1 - t)^(N - i)`, lowest degree first.
fn face_expansion(b: &impl Binom, n: &[i64], r: &[i64]) -> Option<Vec<i128>> {
    let big_n = vertex_count(n, r);
    let top = *n.iter().max()?;
    if big_n < top {
        return None;
    }
    let mut coeffs = vec![0i128; big_n as usize + 1];
    for i in 0..=top {
        let f = face_term(b, n, r, i)?;
        for d in 0..=big_n - i {
            let v = f.checked_mul(sign(d) * b.c(big_n - i, d)?)?;
            let slot = &mut coeffs[(i + d) as usize];
            *slot = slot.checked_add(v)?;
        }
    }
    Some(coeffs)
}

/// Coefficients of `sum_m (1 - t)^(N - n_m) - sum_m (1 - t)^(N - r_m)`.
fn rational_expansion(b: &impl Binom, n: &[i64], r: &[i64]) -> Option<Vec<i128>> {
    let big_n = vertex_count(n, r);
    let mut coeffs = vec![0i128; big_n.max(0) as usize + 1];
    for (sizes, s) in [(n, 1i128), (r, -1i128)] {
        for &x in sizes {
            let exp = big_n - x;
            if exp < 0 {
                return None;
            }
            for d in 0..=exp {
                let slot = &mut coeffs[d as usize];
                *slot = slot.checked_add(s * sign(d) * b.c(exp, d)?)?;
            }
        }
    }
    Some(coeffs)
}

/// Result of comparing the coefficient-wise identity with the polynomial
/// identity it encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulationCheck {
    /// Every `j` in `1..=N` satisfies the coefficient identity.
    pub coefficientwise: bool,
    /// The face expansion equals the rational numerator as polynomials.
    pub polynomial: bool,
    /// The face expansion equals [`closed_form::hilbert_numerator`].
    pub matches_closed_form: bool,
}

impl FormulationCheck {
    pub fn agree(&self) -> bool {
        self.coefficientwise == self.polynomial && self.polynomial == self.matches_closed_form
    }
}

fn formulations(b: &impl Binom, n: &[i64], r: &[i64]) -> Option<(bool, bool, Vec<i128>)> {
    let big_n = vertex_count(n, r);
    let mut coefficientwise = true;
    for j in 1..=big_n {
        coefficientwise &= general_at(b, n, r, big_n, j)?.equal;
    }
    let faces = face_expansion(b, n, r)?;
    let rational = rational_expansion(b, n, r)?;
    Some((coefficientwise, faces == rational, faces))
}

/// Checks the general identity at every `j` together with the polynomial
/// identity `P(t) = sum_i f_{i-1} t^i (1 - t)^(N - i)`.
pub fn check_formulations(spec: &GluingSpec) -> Result<FormulationCheck> {
    let n: Vec<i64> = spec.n().iter().map(|&x| x as i64).collect();
    let r: Vec<i64> = spec.r().iter().map(|&x| x as i64).collect();
    check_general_ranges(&n, &r, 1, false)?;
    let (coefficientwise, polynomial, faces) = formulations(&Direct, &n, &r).ok_or_else(overflow)?;
    let closed = closed_form::hilbert_numerator(spec);
    let len = faces.len().max(closed.coefficients().len());
    let matches_closed_form =
        (0..len).all(|d| closed.coeff(d) == faces.get(d).copied().unwrap_or(0).into());
    Ok(FormulationCheck {
        coefficientwise,
        polynomial,
        matches_closed_form,
    })
}

fn evaluate(b: &impl Binom, case: &IdentityCase) -> Result<IdentityCheck> {
    let need_j = |id: &'static str, j: i64| {
        if j < 1 {
            Err(out_of_range(id, format!("j = {j} must be at least 1")))
        } else {
            Ok(())
        }
    };
    let need_nr = |id: &'static str, n: i64, r: i64| {
        if r < 1 || n < r {
            Err(out_of_range(id, format!("need n >= r >= 1, got n = {n}, r = {r}")))
        } else {
            Ok(())
        }
    };
    let need_e = |id: &'static str, e: i64| {
        if e < 1 {
            Err(out_of_range(id, format!("e = {e} must be at least 1")))
        } else {
            Ok(())
        }
    };
    let checked = match case {
        IdentityCase::ConvolutionLemma { n, a, s } => {
            if *n < 0 || *a < 0 || *s < 0 {
                return Err(out_of_range("convolution-lemma", "n, A and s must be non-negative"));
            }
            convolution(b, *n, *a, *s)
        }
        IdentityCase::GeneralHilbert { n, r, j } => {
            check_general_ranges(n, r, *j, true)?;
            general_at(b, n, r, vertex_count(n, r), *j)
        }
        IdentityCase::EqualN { n, r, j } => {
            const ID: &str = "equal-n";
            need_j(ID, *j)?;
            for &x in r {
                need_nr(ID, *n, x)?;
            }
            let e = r.len() as i128 + 1;
            let big_n = e as i64 * n - r.iter().sum::<i64>();
            let lhs = e.checked_mul(b.c(big_n - n, *j).ok_or_else(overflow)?);
            let rhs = (|| {
                let glue = sum(r.iter().map(|&x| b.c(big_n - x, *j)))?;
                let alt = sum((0..=*j).map(|i| {
                    let f = e.checked_mul(b.c(*n, i)?)?.checked_sub(sum(r.iter().map(|&x| b.c(x, i)))?)?;
                    Some(sign(i) * f.checked_mul(b.c(big_n - i, j - i)?)?)
                }))?;
                glue.checked_add(alt)
            })();
            lhs.zip(rhs).map(|(l, r)| IdentityCheck::new(l, r))
        }
        IdentityCase::EqualR { n, r, j } => {
            const ID: &str = "equal-r";
            need_j(ID, *j)?;
            if n.is_empty() {
                return Err(out_of_range(ID, "at least one clique is required"));
            }
            for &x in n {
                need_nr(ID, x, *r)?;
            }
            let e = n.len() as i128;
            let big_n = n.iter().sum::<i64>() - (e as i64 - 1) * r;
            let lhs = (e - 1).checked_mul(b.c(big_n - r, *j).ok_or_else(overflow)?);
            let rhs = (|| {
                let cliques = sum(n.iter().map(|&x| b.c(big_n - x, *j)))?;
                let alt = sum((0..=*j).map(|i| {
                    let f = sum(n.iter().map(|&x| b.c(x, i)))?.checked_sub((e - 1).checked_mul(b.c(*r, i)?)?)?;
                    Some(sign(i) * f.checked_mul(b.c(big_n - i, j - i)?)?)
                }))?;
                cliques.checked_sub(alt)
            })();
            lhs.zip(rhs).map(|(l, r)| IdentityCheck::new(l, r))
        }
        IdentityCase::EqualNR { n, r, e, j } | IdentityCase::Reduced { n, r, e, j } => {
            let id = if matches!(case, IdentityCase::Reduced { .. }) { "reduced" } else { "equal-nr" };
            need_j(id, *j)?;
            need_nr(id, *n, *r)?;
            need_e(id, *e)?;
            equal_nr(b, *n, *r, *e, *j, matches!(case, IdentityCase::Reduced { .. }))
        }
        IdentityCase::ChuVandermonde { n, r, j } => {
            const ID: &str = "chu-vandermonde";
            need_j(ID, *j)?;
            if *n < 1 || *r < 1 {
                return Err(out_of_range(ID, format!("need n, r >= 1, got n = {n}, r = {r}")));
            }
            (|| {
                let rhs = sum((0..=*j).map(|i| Some(sign(i) * b.c(*n, i)?.checked_mul(b.c(r - i, j - i)?)?)))?;
                Some(IdentityCheck::new(b.c(r - n, *j)?, rhs))
            })()
        }
        IdentityCase::SingleClique { n, j } => {
            const ID: &str = "single-clique";
            need_j(ID, *j)?;
            if *n < 1 {
                return Err(out_of_range(ID, format!("n = {n} must be at least 1")));
            }
            (|| {
                let lhs = sum((0..=*j).map(|i| Some(-sign(i) * b.c(*n, i)?.checked_mul(b.c(n - i, j - i)?)?)))?;
                Some(IdentityCheck::new(lhs, 0))
            })()
        }
    };
    checked.ok_or_else(overflow)
}

/// `e C(N-n, j) - (e-1) C(N-r, j)` against the alternating sum, at
/// `N = e n - (e-1) r`, or at `N = n` for the reduced form.
fn equal_nr(b: &impl Binom, n: i64, r: i64, e: i64, j: i64, reduced: bool) -> Option<IdentityCheck> {
    let e = i128::from(e);
    let weight = |i: i64| -> Option<i128> { e.checked_mul(b.c(n, i)?)?.checked_sub((e - 1).checked_mul(b.c(r, i)?)?) };
    if reduced {
        let lhs = (e - 1).checked_mul(b.c(n - r, j)?)?;
        let rhs = sum((0..=j).map(|i| Some(-sign(i) * weight(i)?.checked_mul(b.c(n - i, j - i)?)?)))?;
        return Some(IdentityCheck::new(lhs, rhs));
    }
    let big_n = (e as i64) * n - (e as i64 - 1) * r;
    let lhs = e.checked_mul(b.c(big_n - n, j)?)?.checked_sub((e - 1).checked_mul(b.c(big_n - r, j)?)?)?;
    let rhs = sum((0..=j).map(|i| Some(sign(i) * weight(i)?.checked_mul(b.c(big_n - i, j - i)?)?)))?;
    Some(IdentityCheck::new(lhs, rhs))
}

/// Evaluates both sides of the selected identity.
pub fn check_specializations(case: &IdentityCase) -> Result<IdentityCheck> {
    evaluate(&Direct, case)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    /// Bound on `n`, `r`, `A` and `s`.
    pub max_param: i64,
    /// Bound on the number of cliques.
    pub max_e: i64,
    pub max_j: i64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_param: 12,
            max_e: 4,
            max_j: 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub id: IdentityId,
    pub cases: u64,
    /// Counterexamples, in sweep order.
    pub failures: Vec<(IdentityCase, IdentityCheck)>,
    /// Parameter tuples whose formulations disagree (general identity only).
    pub formulation_failures: Vec<(Vec<i64>, Vec<i64>)>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.formulation_failures.is_empty()
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<18} {:>9} cases, {} counterexamples", self.id.name(), self.cases, self.failures.len())?;
        if !self.formulation_failures.is_empty() {
            write!(f, ", {} formulation mismatches", self.formulation_failures.len())?;
        }
        Ok(())
    }
}

/// Nondecreasing sequences of length `len` with entries in `lo..=hi`.
fn multisets(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            go(len, x, hi, cur, out);
            cur.pop();
        }
    }
    go(len, lo, hi, &mut cur, &mut out);
    out
}

/// Sequences `r` with `1 <= r_m <= bound[m]`.
fn bounded(bound: &[i64]) -> Vec<Vec<i64>> {
    bound.iter().fold(vec![Vec::new()], |acc, &b| {
        acc.into_iter()
            .flat_map(|prefix| {
                (1..=b).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect()
    })
}

/// Exhaustive deterministic sweep of one identity family.
///
/// Clique sizes are enumerated as nondecreasing sequences, since every
/// identity is symmetric in them; gluing sizes satisfy `1 <= r_m <= n_m`.
pub fn sweep(id: IdentityId, bounds: &SweepBounds) -> Result<SweepSummary> {
    let SweepBounds { max_param: p, max_e, max_j } = *bounds;
    if p < 1 || max_e < 1 || max_j < 1 {
        return Err(out_of_range(id.name(), "sweep bounds must be at least 1"));
    }
    let max_a = p * max_e + max_j + 1;
    let table = Table::new(max_a, max_a).ok_or_else(overflow)?;
    let mut summary = SweepSummary {
        id,
        cases: 0,
        failures: Vec::new(),
        formulation_failures: Vec::new(),
    };
    let mut run = |case: IdentityCase| -> Result<()> {
        let check = evaluate(&table, &case)?;
        summary.cases += 1;
        if !check.equal {
            summary.failures.push((case, check));
        }
        Ok(())
    };
    match id {
        IdentityId::ConvolutionLemma => {
            for n in 0..=p {
                for a in 0..=p {
                    for s in 0..=p {
                        run(IdentityCase::ConvolutionLemma { n, a, s })?;
                    }
                }
            }
        }
        IdentityId::GeneralHilbert => {
            let mut mismatches = Vec::new();
            for e in 1..=max_e as usize {
                for n in multisets(e, 1, p) {
                    for r in bounded(&n[..e - 1]) {
                        for j in 1..=max_j {
                            run(IdentityCase::GeneralHilbert { n: n.clone(), r: r.clone(), j })?;
                        }
                        let (coefficientwise, polynomial, _) = formulations(&table, &n, &r).ok_or_else(overflow)?;
                        if coefficientwise != polynomial || !polynomial {
                            mismatches.push((n.clone(), r.clone()));
                        }
                    }
                }
            }
            summary.formulation_failures = mismatches;
        }
        IdentityId::EqualN => {
            for e in 1..=max_e as usize {
                for n in 1..=p {
                    for r in multisets(e - 1, 1, n) {
                        for j in 1..=max_j {
                            run(IdentityCase::EqualN { n, r: r.clone(), j })?;
                        }
                    }
                }
            }
        }
        IdentityId::EqualR => {
            for e in 1..=max_e as usize {
                for n in multisets(e, 1, p) {
                    for r in 1..=n[0] {
                        for j in 1..=max_j {
                            run(IdentityCase::EqualR { n: n.clone(), r, j })?;
                        }
                    }
                }
            }
        }
        IdentityId::EqualNR | IdentityId::Reduced => {
            let reduced = id == IdentityId::Reduced;
            for n in 1..=p {
                for r in 1..=n {
                    for e in 1..=max_e {
                        for j in 1..=max_j {
                            run(if reduced {
                                IdentityCase::Reduced { n, r, e, j }
                            } else {
                                IdentityCase::EqualNR { n, r, e, j }
                            })?;
                        }
                    }
                }
            }
        }
        IdentityId::ChuVandermonde => {
            for n in 1..=p {
                for r in 1..=p {
                    for j in 1..=max_j {
                        run(IdentityCase::ChuVandermonde { n, r, j })?;
                    }
                }
            }
        }
        IdentityId::SingleClique => {
            for n in 1..=p {
                for j in 1..=max_j {
                    run(IdentityCase::SingleClique { n, j })?;
                }
            }
        }
    }
    Ok(summary)
}

/// Runs [`sweep`] for every family.
pub fn sweep_all(bounds: &SweepBounds) -> Result<Vec<SweepSummary>> {
    IdentityId::ALL.iter().map(|&id| sweep(id, bounds)).collect()
}
