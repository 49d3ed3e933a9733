use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hochster::{hochster_family, invariants_from_betti, numerator_from_counts, HochsterFamily};
use super::FieldChoice;
use crate::betti::BettiTable;
use crate::closed_form;
use crate::complex::{realize, FVector, GluingSpec};
use crate::dual::{self, DualHomology};
use crate::error::Result;
use crate::faces::{FaceTable, Mask, OracleCap};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub field: FieldChoice,
    pub cap: OracleCap,
    /// Largest skeleton parameter checked, for both the complex and its dual.
    pub max_k: Option<i64>,
    /// Re-run the oracle on every other admissible parent assignment.
    pub realizations: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: FieldChoice::Rationals,
            cap: OracleCap::default(),
            max_k: None,
            realizations: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    /// First mismatch for failures, the reason for skips.
    pub detail: Option<String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub spec: GluingSpec,
    pub field: FieldChoice,
    pub checks: Vec<CheckResult>,
    /// Oracle tables of the skeletons `(k, table)`; the last is the complex.
    pub primal_tables: Vec<(i64, BettiTable)>,
    /// Oracle tables of the dual skeletons; empty for a single clique.
    pub dual_tables: Vec<(i64, BettiTable)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify {} over {}", self.spec, self.field)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            write!(f, "  {tag} {}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            writeln!(f, " ({:.1} ms)", c.elapsed.as_secs_f64() * 1e3)?;
        }
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        )
    }
}

type Outcome = std::result::Result<(), String>;

fn ce<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn expect_eq<T: PartialEq + fmt::Display>(what: impl fmt::Display, closed: T, oracle: T) -> Outcome {
    if closed == oracle {
        Ok(())
    } else {
        Err(format!("{what}: closed form {closed}, oracle {oracle}"))
    }
}

fn expect_table(what: impl fmt::Display, closed: &BettiTable, oracle: &BettiTable) -> Outcome {
    match closed.first_mismatch(oracle) {
        None => Ok(()),
        Some(m) => Err(format!(
            "{what}: beta[{},{}] closed form {}, oracle {}",
            m.i, m.j, m.left, m.right
        )),
    }
}

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn run(&mut self, name: &'static str, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = check();
        let (status, detail) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(d) => (Status::Fail, Some(d)),
        };
        self.checks.push(CheckResult {
            name,
            status,
            detail,
            elapsed: start.elapsed(),
        });
    }

    fn skip(&mut self, name: &'static str, reason: &str) {
        self.checks.push(CheckResult {
            name,
            status: Status::Skipped,
            detail: Some(reason.to_string()),
            elapsed: Duration::ZERO,
        });
    }
}

fn f_vector_of(counts: &[usize]) -> FVector {
    FVector::from_counts(counts).expect("enumerated complexes contain the empty face")
}

/// `h`-polynomial from a Hilbert numerator and the Krull dimension.
fn h_from_numerator(numerator: &IntPolynomial, n: usize, krull: i64) -> std::result::Result<IntPolynomial, String> {
    ce(numerator.div_one_minus_t_pow(n - krull as usize))
}

fn degree(p: &IntPolynomial) -> i64 {
    p.degree().map_or(0, |d| d as i64)
}

/// Smallest facet size of a face table.
fn min_facet_size(table: &FaceTable) -> i64 {
    table
        .facets()
        .iter()
        .map(|f| f.count_ones() as i64)
        .min()
        .unwrap_or(0)
}

/// Table of the subcomplex generated by the faces with exactly `size` vertices.
fn pure_skeleton(table: &FaceTable, size: u32) -> FaceTable {
    let faces: Vec<Mask> = table
        .faces()
        .into_iter()
        .filter(|f| f.count_ones() == size)
        .collect();
    FaceTable::from_facets(table.n_vertices(), faces)
}

/// Runs every closed form against the oracle with default options.
pub fn verify_all(spec: &GluingSpec, field: FieldChoice) -> Result<VerificationReport> {
    verify_with(
        spec,
        &VerifyOptions {
            field,
            ..VerifyOptions::default()
        },
    )
}

pub fn verify_with(spec: &GluingSpec, opts: &VerifyOptions) -> Result<VerificationReport> {
    let n = spec.n_vertices();
    opts.cap.check(n)?;
    let field = opts.field;
    let cx = realize(spec);
    let table = cx.face_table(opts.cap)?;
    let counts = table.counts_by_size();
    let brute_f = f_vector_of(&counts);
    let dim = spec.dim();
    let top_k = opts.max_k.map_or(dim, |m| m.min(dim));
    let ks: Vec<i64> = (-1..=top_k).collect();

    let mut runner = Runner { checks: Vec::new() };

    runner.run("f-vector", || {
        let closed = closed_form::f_vector(spec);
        expect_eq("f-vector", closed, brute_f.clone())
    });

    runner.run("independence polynomial", || {
        let closed = closed_form::independence_polynomial(spec);
        let oracle = IntPolynomial::new(brute_f.entries().to_vec());
        expect_eq("I(G, x)", closed, oracle)
    });

    runner.run("hilbert numerator", || {
        expect_eq(
            "P(t)",
            closed_form::hilbert_numerator(spec),
            numerator_from_counts(&counts, n),
        )
    });

    let start = Instant::now();
    let primal = hochster_family(&table, &ks, field);
    let oracle_time = start.elapsed();

    runner.run("primal skeleton tables", || {
        for (k, oracle) in ks.iter().zip(&primal.tables) {
            let closed = ce(closed_form::skeleton_betti_table(spec, *k))?;
            expect_table(format_args!("k={k}"), &closed, oracle)?;
        }
        Ok(())
    });
    runner.checks.last_mut().expect("just pushed").elapsed += oracle_time;

    runner.run("general skeleton theorem", || {
        let f = closed_form::f_vector(spec);
        for (k, oracle) in ks.iter().zip(&primal.tables) {
            for i in 0..=n as i64 {
                for j in 0..=n as i64 - i {
                    let closed = ce(closed_form::general_skeleton_betti(&f, n, 2, *k, i, j))?;
                    let o = oracle.get(i as usize, (i + j) as usize);
                    expect_eq(format_args!("k={k} beta[{i},{}]", i + j), closed, o)?;
                }
            }
        }
        Ok(())
    });

    runner.run("primal numerators", || {
        for (k, oracle) in ks.iter().zip(&primal.tables) {
            let sk = table.skeleton(*k);
            let from_faces = numerator_from_counts(&sk.counts_by_size(), n);
            let closed = ce(closed_form::skeleton_betti_table(spec, *k))?;
            expect_eq(format_args!("k={k} closed table"), closed.alternating_polynomial(), from_faces.clone())?;
            expect_eq(format_args!("k={k} oracle table"), oracle.alternating_polynomial(), from_faces)?;
        }
        Ok(())
    });

    runner.run("primal invariants", || {
        for (idx, k) in ks.iter().copied().enumerate() {
            check_primal_invariants(spec, &table, k, &primal, idx)?;
        }
        Ok(())
    });

    runner.run("euler characteristic", || {
        for (k, h) in ks.iter().zip(&primal.homology) {
            let closed = ce(closed_form::euler_characteristic(spec, *k))?;
            expect_eq(format_args!("k={k}"), closed, h.euler())?;
        }
        Ok(())
    });

    runner.run("sequentially CM flag", || {
        let pure_cm: Vec<bool> = (0..=dim)
            .map(|i| {
                let pure = pure_skeleton(&table, (i + 1) as u32);
                let t = hochster_family(&pure, &[i], field).tables.remove(0);
                n as i64 - t.proj_dim() as i64 == i + 1
            })
            .collect();
        for k in &ks {
            let flag = ce(closed_form::skeleton_invariants(spec, *k))?.cm_class.sequentially_cm;
            let duval = pure_cm.iter().take((*k + 1).max(0) as usize).all(|&b| b);
            if flag && !duval {
                return Err(format!("k={k}: flagged sequentially CM but a pure skeleton is not CM"));
            }
        }
        Ok(())
    });

    let mut dual_tables = Vec::new();
    if spec.is_simplex() {
        for name in [
            "dual f-vector",
            "dual table",
            "dual profile",
            "dual resolution",
            "dual skeleton tables",
            "dual skeleton profiles",
            "threshold",
            "regularity bound",
        ] {
            runner.skip(name, "a single simplex has a void dual");
        }
    } else {
        dual_tables = verify_dual(spec, opts, &table, &mut runner);
    }

    if opts.realizations && spec.feasible_parents().len() > 1 {
        runner.run("realization independence", || {
            let reference = primal.tables.last().expect("k = dim is always requested");
            for parents in spec.feasible_parents() {
                if parents == spec.parents() {
                    continue;
                }
                let alt = ce(GluingSpec::with_parents(spec.n(), spec.r(), &parents))?;
                let alt_table = ce(realize(&alt).face_table(opts.cap))?;
                expect_eq(
                    format_args!("parents {parents:?} f-vector"),
                    f_vector_of(&alt_table.counts_by_size()),
                    brute_f.clone(),
                )?;
                let alt_betti = hochster_family(&alt_table, &[dim], field).tables.remove(0);
                expect_table(format_args!("parents {parents:?}"), &alt_betti, reference)?;
            }
            Ok(())
        });
    } else if !opts.realizations {
        runner.skip("realization independence", "disabled");
    } else {
        runner.skip("realization independence", "only one admissible parent assignment");
    }

    Ok(VerificationReport {
        spec: spec.clone(),
        field,
        checks: runner.checks,
        primal_tables: ks.iter().copied().zip(primal.tables).collect(),
        dual_tables,
    })
}

fn check_primal_invariants(
    spec: &GluingSpec,
    table: &FaceTable,
    k: i64,
    family: &HochsterFamily,
    idx: usize,
) -> Outcome {
    let n = spec.n_vertices();
    let inv = ce(closed_form::skeleton_invariants(spec, k))?;
    let oracle = &family.tables[idx];
    let read = invariants_from_betti(oracle, n);
    let sk = table.skeleton(k);
    let sk_counts = sk.counts_by_size();
    let krull = sk_counts.len() as i64 - 1;
    let at = |what: &str| format!("k={k} {what}");

    expect_eq(at("regularity"), inv.regularity, read.regularity)?;
    expect_eq(at("projective dimension"), inv.proj_dim, read.proj_dim)?;
    expect_eq(at("depth"), inv.depth, read.depth)?;
    expect_eq(at("krull dimension"), inv.krull_dim, krull)?;
    let top = BigInt::from(*sk_counts.last().expect("non-empty"));
    expect_eq(at("multiplicity"), inv.multiplicity.clone(), top)?;

    let h = h_from_numerator(&oracle.alternating_polynomial(), n, krull)?;
    expect_eq(at("h(1)"), inv.multiplicity.clone(), h.eval(&BigInt::one()))?;
    expect_eq(at("deg h"), inv.h_degree, degree(&h))?;
    expect_eq(at("a-invariant"), inv.a_invariant, degree(&h) - krull)?;

    let cm = read.depth == krull;
    expect_eq(at("Cohen-Macaulay"), inv.cm_class.cohen_macaulay, cm)?;
    let initially = read.depth == min_facet_size(&sk);
    expect_eq(at("initially CM"), inv.cm_class.initially_cm, initially)?;
    Ok(())
}

fn verify_dual(
    spec: &GluingSpec,
    opts: &VerifyOptions,
    primal: &FaceTable,
    runner: &mut Runner,
) -> Vec<(i64, BettiTable)> {
    let n = spec.n_vertices();
    let field = opts.field;
    let table = primal.dual();
    let counts = table.counts_by_size();
    let top = n as i64 - 3;
    let top_k = opts.max_k.map_or(top, |m| m.min(top));
    let mut ks: Vec<i64> = (-1..=top_k).collect();
    if !ks.contains(&top) {
        ks.push(top);
    }

    runner.run("dual f-vector", || {
        let closed = ce(dual::dual_f_vector(spec))?;
        expect_eq("dual f-vector", closed, f_vector_of(&counts))
    });

    let start = Instant::now();
    let family = hochster_family(&table, &ks, field);
    let oracle_time = start.elapsed();
    let full = family.tables.last().expect("top skeleton requested").clone();
    let full_homology = family.homology.last().expect("top skeleton requested").clone();

    runner.run("dual table", || {
        let closed = ce(dual::dual_betti_table(spec))?;
        expect_table("dual", &closed, &full)?;
        expect_eq(
            "dual numerator",
            closed.alternating_polynomial(),
            numerator_from_counts(&counts, n),
        )?;
        expect_eq("dual projective dimension", 2, full.proj_dim())
    });
    runner.checks.last_mut().expect("just pushed").elapsed += oracle_time;

    runner.run("dual profile", || {
        let profile = ce(dual::dual_profile(spec))?;
        let read = invariants_from_betti(&full, n);
        let krull = counts.len() as i64 - 1;
        expect_eq("krull dimension", profile.krull_dim, krull)?;
        expect_eq("regularity", profile.regularity, read.regularity)?;
        expect_eq("projective dimension", profile.proj_dim, read.proj_dim)?;
        expect_eq("Cohen-Macaulay", true, read.depth == krull)?;
        let h = h_from_numerator(&full.alternating_polynomial(), n, krull)?;
        expect_eq("a-invariant", profile.a_invariant, degree(&h) - krull)?;
        expect_eq("multiplicity", profile.multiplicity.clone(), h.eval(&BigInt::one()))?;
        expect_eq(
            "multiplicity as top face count",
            profile.multiplicity.clone(),
            BigInt::from(*counts.last().expect("non-empty")),
        )?;
        let (closed_h, _) = ce(dual::dual_h_vector(spec))?;
        expect_eq("h-polynomial", closed_h, h)?;

        let totals = full.totals();
        let last = totals.last().cloned().unwrap_or_else(BigInt::zero);
        expect_eq("CM type", BigInt::from(profile.cm_type), last.clone())?;
        expect_eq("Gorenstein", profile.gorenstein, last.is_one())?;
        let single_degree = |i: usize| full.entries().filter(|&(a, _, _)| a == i).count() == 1;
        let pure = single_degree(1) && single_degree(2);
        expect_eq("pure resolution", profile.pure_resolution, pure)?;
        let one_row = full.entries().filter(|&(i, _, _)| i >= 1).map(|(i, j, _)| j - i).collect::<std::collections::BTreeSet<_>>().len() == 1;
        expect_eq("linear resolution", profile.linear_resolution, one_row)?;

        let expected: Vec<usize> = match profile.homology {
            DualHomology::Acyclic => vec![0; full_homology.dims().len()],
            DualHomology::Wedge { sphere_dim, count } => (0..full_homology.dims().len())
                .map(|i| if i as i64 - 1 == sphere_dim { count } else { 0 })
                .collect(),
        };
        if full_homology.dims() != expected.as_slice() {
            return Err(format!(
                "dual homology: closed form {:?}, oracle {:?}",
                profile.homology,
                full_homology.dims()
            ));
        }
        Ok(())
    });

    runner.run("dual resolution", || {
        let res = ce(dual::dual_resolution(spec))?;
        expect_eq("d1 * d2 = 0", true, res.composes_to_zero())?;
        expect_eq("homogeneous", true, res.is_homogeneous())?;
        expect_eq("two entries per column", true, res.columns_well_formed())?;
        expect_eq("numerator", res.numerator(), numerator_from_counts(&counts, n))?;
        // the generators are the minimal non-faces of the dual
        let mut generators: Vec<Mask> = res
            .d1
            .iter()
            .map(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0, |m, (v, _)| m | 1 << v)
            })
            .collect();
        generators.sort_unstable();
        let mut nonfaces = table.minimal_nonfaces();
        nonfaces.sort_unstable();
        if generators != nonfaces {
            return Err("d1 does not list the minimal non-faces of the dual".into());
        }
        Ok(())
    });

    runner.run("dual skeleton tables", || {
        for (k, oracle) in ks.iter().zip(&family.tables) {
            let closed = ce(dual::dual_skeleton_betti_table(spec, *k))?;
            expect_table(format_args!("k={k}"), &closed, oracle)?;
            let from_faces = numerator_from_counts(&table.skeleton(*k).counts_by_size(), n);
            expect_eq(format_args!("k={k} numerator"), closed.alternating_polynomial(), from_faces)?;
        }
        Ok(())
    });

    runner.run("dual skeleton profiles", || {
        for (idx, &k) in ks.iter().enumerate() {
            let p = ce(dual::dual_skeleton_profile(spec, k))?;
            let oracle = &family.tables[idx];
            let read = invariants_from_betti(oracle, n);
            let sk_counts = table.skeleton(k).counts_by_size();
            let krull = sk_counts.len() as i64 - 1;
            let at = |what: &str| format!("k={k} {what}");
            expect_eq(at("krull dimension"), p.krull_dim, krull)?;
            expect_eq(at("projective dimension"), p.proj_dim, read.proj_dim)?;
            expect_eq(at("Cohen-Macaulay"), p.cohen_macaulay, read.depth == krull)?;
            let last = oracle.totals().last().cloned().unwrap_or_else(BigInt::zero);
            expect_eq(at("CM type"), p.cm_type.clone(), last)?;
            expect_eq(at("ideal regularity"), p.ideal_regularity, read.regularity + 1)?;
            let top_faces = BigInt::from(*sk_counts.last().expect("non-empty"));
            expect_eq(at("multiplicity"), p.multiplicity.clone(), top_faces)?;
            let h = h_from_numerator(&oracle.alternating_polynomial(), n, krull)?;
            expect_eq(at("deg h"), p.h_degree, degree(&h))?;
            let homology = &family.homology[idx];
            expect_eq(at("euler characteristic"), p.euler.clone(), homology.euler())?;
            expect_eq(at("sphere count"), p.sphere_count.clone(), BigInt::from(homology.get(k)))?;
            if k < top && homology.support().iter().any(|&d| d != k) {
                return Err(format!("k={k}: homology outside dimension k: {:?}", homology.dims()));
            }
        }
        Ok(())
    });

    runner.run("threshold", || {
        for &k in &ks {
            let p = ce(dual::dual_skeleton_profile(spec, k))?;
            let sk = table.skeleton(k);
            let equal = (0..=table.full_mask()).all(|m| sk.contains(m) == ((m.count_ones() as i64) <= k + 1));
            expect_eq(format_args!("k={k} equals the simplex skeleton"), p.simplex_equal, equal)?;
            if equal {
                let closed = ce(dual::dual_skeleton_betti_table(spec, k))?;
                for i in 1..=n as i64 {
                    expect_eq(
                        format_args!("k={k} shifted row i={i}"),
                        closed.get(i as usize, (i + k + 1) as usize),
                        dual::simplex_skeleton_betti(n, k, i),
                    )?;
                }
                let expected = crate::binomial::binom(n as i64 - 1, k + 1);
                expect_eq(format_args!("k={k} sphere count"), p.sphere_count, expected)?;
            }
        }
        Ok(())
    });

    let r_min = spec.r_min() as i64;
    let bound_ks: Vec<i64> = (n as i64 - r_min - 3..top).filter(|k| ks.contains(k)).collect();
    if bound_ks.is_empty() {
        runner.skip("regularity bound", "empty range for this specification");
    } else {
        runner.run("regularity bound", || {
            let reg_full = invariants_from_betti(&full, n).regularity + 1;
            for k in bound_ks {
                let idx = ks.iter().position(|&x| x == k).expect("filtered above");
                let b = ce(dual::regularity_bound_check(spec, k))?;
                let gen_degree = family.tables[idx]
                    .entries()
                    .filter(|&(i, _, _)| i == 1)
                    .map(|(_, j, _)| j as i64)
                    .max()
                    .unwrap_or(0);
                expect_eq(format_args!("k={k} reg I"), b.ideal_reg_full, reg_full)?;
                expect_eq(format_args!("k={k} generator degree"), b.skeleton_gen_degree, gen_degree)?;
                expect_eq(format_args!("k={k} bound"), b.bound_holds, reg_full <= gen_degree)?;
                expect_eq(format_args!("k={k} equality"), b.equality, reg_full == gen_degree)?;
            }
            Ok(())
        });
    }

    ks.into_iter().zip(family.tables).collect()
}
