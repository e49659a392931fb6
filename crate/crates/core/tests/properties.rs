use num_traits::Zero;
use proptest::prelude::*;

use nlspectra::bounds::{localizer_q, localizer_r};
use nlspectra::generators::{generate, sub_seed, GenSpec};
use nlspectra::indices::{edge_inv_deg_sum_exact, randic_dual_form, randic_minus_one};
use nlspectra::majorization::{edge_vector_exact, majorizes_exact, RandicExtremals};
use nlspectra::spectra::{lemma1_check, spectrum};
use nlspectra::{BoundReport64, Graph};

/// Connected graph from an ER draw, retried by the generator.
fn er_graph() -> impl Strategy<Value = Graph> {
    (4usize..40, 0.1f64..0.9, any::<u64>()).prop_map(|(n, q, s)| generate(&GenSpec::erdos_renyi(n, q, s)).unwrap())
}

/// Random recursive tree on `n` vertices.
fn tree() -> impl Strategy<Value = Graph> {
    (3usize..30).prop_flat_map(|n| {
        prop::collection::vec(any::<prop::sample::Index>(), n - 1).prop_map(move |parents| {
            let edges: Vec<_> = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            Graph::connected(n, edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_is_label_invariant((g, perm) in er_graph().prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })) {
        let a = spectrum::<f64>(&g).unwrap();
        let b = spectrum::<f64>(&g.relabel(&perm)).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            prop_assert!((x - y).abs() < 1e-9);
        }
        prop_assert_eq!(g.degree_sequence(), g.relabel(&perm).degree_sequence());
    }

    #[test]
    fn trace_identities_hold(g in er_graph()) {
        let s = spectrum::<f64>(&g).unwrap();
        let rep = lemma1_check(&g, &s);
        prop_assert!(rep.all_passed(), "{:?}", rep);
    }

    #[test]
    fn bipartite_spectra_are_symmetric(g in tree()) {
        let s = spectrum::<f64>(&g).unwrap();
        let v = s.values();
        let n = v.len();
        for i in 0..n {
            prop_assert!((v[i] + v[n - 1 - i] - 2.0).abs() < 1e-9);
        }
        prop_assert!(lemma1_check(&g, &s).all_passed());
    }

    #[test]
    fn randic_dual_form_agrees(g in prop_oneof![er_graph(), tree()]) {
        let a = randic_minus_one::<f64>(&g);
        let b = randic_dual_form::<f64>(&g);
        prop_assert!((a - b).abs() < 1e-10);
        let exact = edge_inv_deg_sum_exact(&g);
        prop_assert!((<f64 as nlspectra::Scalar>::from_rational(&exact) - a).abs() < 1e-12);
    }

    #[test]
    fn majorization_sandwich(g in prop_oneof![er_graph(), tree()]) {
        if let Ok(ex) = RandicExtremals::compute(&g.degree_sequence()) {
            let x = edge_vector_exact(&g);
            prop_assert!(majorizes_exact(ex.x_max(), &x));
            prop_assert!(majorizes_exact(&x, &ex.x_min));
            let r = edge_inv_deg_sum_exact(&g);
            prop_assert!(ex.lower <= r && r <= ex.upper);
            let total = ex.x_min.iter().fold(num_rational::BigRational::zero(), |a, v| a + v);
            prop_assert_eq!(total, num_rational::BigRational::from_integer(g.order().into()));
        }
    }

    #[test]
    fn localizers_bound_leading_eigenvalues(g in prop_oneof![er_graph(), tree()]) {
        let s = spectrum::<f64>(&g).unwrap();
        let n = g.order() as f64;
        let q = localizer_q::<f64>(&g).unwrap();
        prop_assert!(q <= s.largest() + 1e-8);
        prop_assert!(q >= n / (n - 1.0) - 1e-10);
        if let Ok(r) = localizer_r::<f64>(&g) {
            prop_assert!(r <= s.second() + 1e-8);
            prop_assert!(r <= q + 1e-10);
        }
    }

    #[test]
    fn reports_are_sound(g in prop_oneof![er_graph(), tree()]) {
        let rep = BoundReport64::for_graph(&g, "prop").unwrap();
        let bad = rep.audit(1e-8);
        prop_assert!(bad.is_empty(), "{:?}", bad);
    }

    #[test]
    fn single_and_double_precision_agree(g in er_graph()) {
        let a = spectrum::<f64>(&g).unwrap();
        let b = spectrum::<f32>(&g).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            prop_assert!((x - *y as f64).abs() < 1e-4);
        }
    }

    #[test]
    fn generation_is_deterministic(n in 5usize..40, q in 0.2f64..0.8, seed in any::<u64>()) {
        let a = generate(&GenSpec::erdos_renyi(n, q, seed)).unwrap();
        let b = generate(&GenSpec::erdos_renyi(n, q, seed)).unwrap();
        prop_assert_eq!(a.to_edge_list_text(), b.to_edge_list_text());
        prop_assert_ne!(sub_seed(seed, 0), sub_seed(seed, 1));
    }

    #[test]
    fn watts_strogatz_keeps_edge_count(n in 7usize..60, k in 1usize..4, p in 0.0f64..1.0, seed in any::<u64>()) {
        prop_assume!(2 * k < n);
        let g = generate(&GenSpec::watts_strogatz(n, k, p, seed)).unwrap();
        prop_assert_eq!(g.size(), n * k);
        prop_assert!(g.is_connected());
    }

    #[test]
    fn degree_sequence_sampler_keeps_sequence(g in tree(), seed in any::<u64>()) {
        let ds = g.degree_sequence();
        let h = generate(&GenSpec::degree_sequence(&ds, seed)).unwrap();
        prop_assert_eq!(h.degree_sequence(), ds);
        prop_assert!(h.is_connected());
    }
}
