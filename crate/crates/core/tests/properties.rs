use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use chordal_betti::binomial::{binom, binom_general};
use chordal_betti::closed_form::{f_vector, h_polynomial, skeleton_betti_table, skeleton_invariants};
use chordal_betti::complex::{alexander_dual, brute_f_vector, realize};
use chordal_betti::dual::{dual_betti_table, dual_f_vector, dual_h_vector, dual_skeleton_betti_table};
use chordal_betti::identities::check_convolution_lemma;
use chordal_betti::oracle::{hochster_betti, numerator_from_counts};
use chordal_betti::{FacetComplex, FieldChoice, GluingSpec, IntPolynomial, OracleCap};

fn spec_strategy(max_e: usize, max_n: usize, max_vertices: usize) -> impl Strategy<Value = GluingSpec> {
    glued_strategy(1, max_e, max_n, max_vertices)
}

fn glued_strategy(min_e: usize, max_e: usize, max_n: usize, max_vertices: usize) -> impl Strategy<Value = GluingSpec> {
    (min_e..=max_e)
        .prop_flat_map(move |e| {
            (
                prop::collection::vec(1..=max_n, e),
                prop::collection::vec(0..max_n, e - 1),
            )
        })
        .prop_filter_map("infeasible gluing", move |(n, r)| {
            GluingSpec::new(&n, &r).ok().filter(|s| s.n_vertices() <= max_vertices)
        })
}

fn complex_strategy() -> impl Strategy<Value = FacetComplex> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(1..=n, 0..=n), 1..5).prop_map(move |facets| {
            FacetComplex::new(n, facets.into_iter().map(|f| f.into_iter().collect()).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_vector_matches_enumeration(spec in spec_strategy(4, 6, 12)) {
        let brute = brute_f_vector(&realize(&spec), OracleCap::default()).unwrap();
        prop_assert_eq!(f_vector(&spec), brute);
    }

    #[test]
    fn skeleton_tables_encode_the_hilbert_series(spec in spec_strategy(4, 6, 14), k in -1i64..7) {
        let table = skeleton_betti_table(&spec, k).unwrap();
        let f = f_vector(&spec).truncate(k);
        let counts: Vec<usize> = f.entries().iter().map(|c| c.try_into().unwrap()).collect();
        prop_assert_eq!(table.alternating_polynomial(), numerator_from_counts(&counts, spec.n_vertices()));
        let inv = skeleton_invariants(&spec, k).unwrap();
        prop_assert_eq!(inv.proj_dim, table.proj_dim() as i64);
        prop_assert_eq!(inv.regularity, table.regularity() as i64);
        prop_assert_eq!(inv.depth, spec.n_vertices() as i64 - inv.proj_dim);
        prop_assert!(inv.depth <= inv.krull_dim);
    }

    #[test]
    fn h_polynomial_sums_to_multiplicity(spec in spec_strategy(4, 6, 14), k in 0i64..7) {
        let f = f_vector(&spec).truncate(k);
        let h = h_polynomial(&f, (f.dim() + 1) as usize);
        prop_assert_eq!(h.eval(&BigInt::one()), f.entries().last().unwrap().clone());
    }

    #[test]
    fn dual_tables_encode_the_dual_hilbert_series(spec in glued_strategy(2, 4, 6, 14)) {
        let n = spec.n_vertices();
        let f = dual_f_vector(&spec).unwrap();
        let counts: Vec<usize> = f.entries().iter().map(|c| c.try_into().unwrap()).collect();
        let numerator = numerator_from_counts(&counts, n);
        let table = dual_betti_table(&spec).unwrap();
        prop_assert_eq!(table.alternating_polynomial(), numerator.clone());
        prop_assert_eq!(table.proj_dim(), 2);
        let (h, mult) = dual_h_vector(&spec).unwrap();
        prop_assert_eq!(h.eval(&BigInt::one()), mult);
        prop_assert_eq!(&IntPolynomial::one_minus_t_pow(2) * &h, numerator);
        let top = dual_skeleton_betti_table(&spec, n as i64 - 3).unwrap();
        prop_assert_eq!(top, table);
    }

    #[test]
    fn gluing_order_does_not_matter(spec in spec_strategy(4, 5, 10)) {
        let reference = hochster_betti(&realize(&spec), FieldChoice::Prime(2), OracleCap::default()).unwrap();
        for parents in spec.feasible_parents() {
            let alt = GluingSpec::with_parents(spec.n(), spec.r(), &parents).unwrap();
            let t = hochster_betti(&realize(&alt), FieldChoice::Prime(2), OracleCap::default()).unwrap();
            prop_assert_eq!(&t, &reference);
        }
    }

    #[test]
    fn alexander_duality_is_an_involution(cx in complex_strategy()) {
        prop_assume!(!cx.is_full_simplex());
        let dual = alexander_dual(&cx, OracleCap::default()).unwrap();
        prop_assert_eq!(alexander_dual(&dual, OracleCap::default()).unwrap(), cx.clone());
        let t = hochster_betti(&cx, FieldChoice::Rationals, OracleCap::default()).unwrap();
        let numerator = numerator_from_counts(&brute_counts(&cx), cx.n_vertices());
        prop_assert_eq!(t.alternating_polynomial(), numerator);
    }

    #[test]
    fn pascal_rule_for_generalized_binomials(a in -40i64..40, b in 1i64..20) {
        let lhs = binom_general(a, b).unwrap();
        let rhs = binom_general(a - 1, b).unwrap() + binom_general(a - 1, b - 1).unwrap();
        prop_assert_eq!(lhs, rhs);
        if a >= 0 {
            prop_assert_eq!(BigInt::from(lhs), binom(a, b));
        }
    }

    #[test]
    fn convolution_lemma_holds(n in 0i64..30, a in 0i64..30, s in 0i64..30) {
        let c = check_convolution_lemma(n, a, s).unwrap();
        prop_assert!(c.equal, "{:?}", c);
    }
}

fn brute_counts(cx: &FacetComplex) -> Vec<usize> {
    brute_f_vector(cx, OracleCap::default())
        .unwrap()
        .entries()
        .iter()
        .map(|c| c.try_into().unwrap())
        .collect()
}

#[test]
fn empty_face_complex_has_koszul_table() {
    let cx = FacetComplex::new(3, vec![vec![]]).unwrap();
    let t = hochster_betti(&cx, FieldChoice::Rationals, OracleCap::default()).unwrap();
    let totals: Vec<BigInt> = t.totals();
    assert_eq!(totals, vec![1, 3, 3, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    assert!(!t.get(1, 1).is_zero());
}
