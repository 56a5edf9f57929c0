mod common;

use common::*;
use proptest::prelude::*;
use qjudge::{
    apply, born_probability, classical_conjunction_bound_check, collapse, complement, conjunction_fallacy_gap,
    gram_schmidt, inner_product, interference_term, is_compatible, joint_distribution, norm, order_effect,
    projector_from_basis, sequential_probability, similarity, Event, Matrix, StateVector, Vector,
};

fn fro(a: &Matrix, b: &Matrix) -> f64 {
    a.sub(b).unwrap().frobenius_norm()
}

fn cases() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        max_global_rejects: 100_000,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cases())]

    #[test]
    fn inner_product_is_conjugate_symmetric(
        (a, b) in (1usize..=8).prop_flat_map(|d| (cvec(d), cvec(d)))
    ) {
        let (a, b) = (complex_vector(&a), complex_vector(&b));
        let ab = inner_product(&a, &b).unwrap();
        let ba = inner_product(&b, &a).unwrap();
        prop_assert!((ab - ba.conj()).norm() <= 1e-12);
    }

    #[test]
    fn gram_schmidt_output_is_orthonormal(
        raw in (1usize..=8).prop_flat_map(|d| prop::collection::vec(cvec(d), 1..=d + 2))
    ) {
        let vs: Vec<Vector> = raw.iter().map(|r| complex_vector(r)).collect();
        if let Ok(onb) = gram_schmidt(&vs) {
            prop_assert!(onb.len() <= vs[0].dim());
            for (i, a) in onb.iter().enumerate() {
                prop_assert!((norm(a) - 1.0).abs() <= 1e-12);
                for b in &onb[i + 1..] {
                    prop_assert!(inner_product(a, b).unwrap().norm() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn projectors_are_hermitian_idempotent_with_rank_trace(
        raw in (1usize..=8).prop_flat_map(|d| prop::collection::vec(cvec(d), 1..=d))
    ) {
        let vs: Vec<Vector> = raw.iter().map(|r| complex_vector(r)).collect();
        let onb = gram_schmidt(&vs).unwrap();
        let p = projector_from_basis(&onb).unwrap();
        prop_assert!(fro(&p.matmul(&p).unwrap(), &p) <= 1e-10);
        prop_assert!(fro(&p.adjoint(), &p) <= 1e-10);
        prop_assert!((p.trace().re - onb.len() as f64).abs() <= 1e-10);
    }

    #[test]
    fn gram_schmidt_preserves_span_under_reordering(
        (raw, rotation) in (2usize..=8)
            .prop_flat_map(|d| (1..=d).prop_flat_map(move |k| (prop::collection::vec(cvec(d), k), 0..k)))
    ) {
        let vs: Vec<Vector> = raw.iter().map(|r| complex_vector(r)).collect();
        let onb = gram_schmidt(&vs).unwrap();
        prop_assume!(onb.len() == vs.len());
        let mut shuffled = vs.clone();
        shuffled.rotate_left(rotation);
        shuffled.reverse();
        let p = projector_from_basis(&onb).unwrap();
        let q = projector_from_basis(&gram_schmidt(&shuffled).unwrap()).unwrap();
        prop_assert!(fro(&p, &q) <= 1e-9, "{}", fro(&p, &q));
    }

    #[test]
    fn projection_contracts_norm((psi, e) in proper_event_setup(), scale in 0.1..10.0f64) {
        let v = psi.vector().scale(num_complex::Complex::new(scale, 0.0));
        let pv = apply(e.projector(), &v).unwrap();
        prop_assert!(norm(&pv) <= norm(&v) + 1e-12);
    }

    #[test]
    fn complement_is_an_involution((_psi, e) in proper_event_setup()) {
        let back = complement(&complement(&e).unwrap()).unwrap();
        prop_assert!(fro(back.projector(), e.projector()) <= 1e-9);
        prop_assert_eq!(back.dim(), e.dim());
    }

    #[test]
    fn complement_resolves_identity((_psi, e) in proper_event_setup()) {
        let c = complement(&e).unwrap();
        prop_assert_eq!(c.dim(), e.ambient_dim() - e.dim());
        let sum = e.projector().add(c.projector()).unwrap();
        prop_assert!(fro(&sum, &Matrix::identity(e.ambient_dim())) <= 1e-10);
    }

    #[test]
    fn cached_projector_is_rederivable((_psi, e) in proper_event_setup()) {
        let p = projector_from_basis(e.subspace().basis()).unwrap();
        prop_assert!(fro(&p, e.projector()) <= 1e-10);
    }

    #[test]
    fn compatibility_is_symmetric((_psi, a, b) in generic_setup()) {
        let tol = 1e-9;
        prop_assert_eq!(is_compatible(&a, &b, tol).unwrap(), is_compatible(&b, &a, tol).unwrap());
    }

    #[test]
    fn nested_events_are_compatible((_psi, a, b) in nested_setup()) {
        prop_assert!(a.is_compatible(&b).unwrap());
    }

    #[test]
    fn probabilities_stay_in_unit_interval((psi, a, b) in generic_setup()) {
        for p in [
            born_probability(&psi, &a).unwrap(),
            born_probability(&psi, &b).unwrap(),
            sequential_probability(&psi, &[a.clone(), b.clone()]).unwrap().probability,
            similarity(&psi, &b, &a).unwrap(),
            qjudge::sequential_disjunction(&psi, &a, &b).unwrap(),
        ] {
            prop_assert!((0.0..=1.0).contains(&p));
        }
        let raw = apply(a.projector(), psi.vector()).unwrap().norm_sqr();
        prop_assert!(raw <= 1.0 + 1e-12);
        let i = interference_term(&psi, &a, &b).unwrap();
        prop_assert!((-1.0..=1.0).contains(&i));
    }

    #[test]
    fn appending_events_never_increases_probability(
        (psi, a, b) in generic_setup(),
        order in prop::collection::vec(any::<bool>(), 1..6)
    ) {
        let seq: Vec<Event> = order.iter().map(|&x| if x { a.clone() } else { b.clone() }).collect();
        let mut prev = 1.0;
        for n in 1..=seq.len() {
            let p = sequential_probability(&psi, &seq[..n]).unwrap().probability;
            prop_assert!(p <= prev + 1e-12);
            prev = p;
        }
    }

    #[test]
    fn trace_product_equals_probability((psi, a, b) in generic_setup()) {
        let out = sequential_probability(&psi, &[a.clone(), b.clone(), a.clone()]).unwrap();
        let product: f64 = out.trace.iter().map(|s| s.probability).product();
        prop_assert!((product - out.probability).abs() <= 1e-12);
        prop_assert_eq!(out.final_state.is_some(), out.probability > 1e-12);
        // Matches the direct product of projectors.
        let direct = apply(a.projector(), &apply(b.projector(), &apply(a.projector(), psi.vector()).unwrap()).unwrap())
            .unwrap()
            .norm_sqr();
        prop_assert!((direct - out.probability).abs() <= 1e-12);
    }

    #[test]
    fn collapse_lands_in_the_event((psi, e) in proper_event_setup()) {
        prop_assume!(born_probability(&psi, &e).unwrap() > 1e-6);
        let c = collapse(&psi, &e).unwrap();
        prop_assert!((born_probability(&c, &e).unwrap() - 1.0).abs() <= 1e-9);
        prop_assert!((norm(c.vector()) - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn compatible_events_behave_classically((psi, a, b) in compatible_setup()) {
        prop_assert!(order_effect(&psi, &a, &b).unwrap().abs() <= 1e-9);
        prop_assert!(interference_term(&psi, &a, &b).unwrap().abs() <= 1e-9);
        prop_assert!(conjunction_fallacy_gap(&psi, &a, &b).unwrap() <= 1e-9);
        prop_assert!(conjunction_fallacy_gap(&psi, &b, &a).unwrap() <= 1e-9);
        let joint = joint_distribution(&psi, &a, &b).unwrap();
        let seq = sequential_probability(&psi, &[a.clone(), b.clone()]).unwrap().probability;
        prop_assert!((seq - joint.cells[0][0]).abs() <= 1e-9);
    }

    #[test]
    fn joint_marginals_and_order_invariance((psi, a, b) in compatible_setup()) {
        let j = joint_distribution(&psi, &a, &b).unwrap();
        let r = joint_distribution(&psi, &b, &a).unwrap();
        prop_assert!((j.marginal_first() - born_probability(&psi, &a).unwrap()).abs() <= 1e-9);
        prop_assert!((j.marginal_second() - born_probability(&psi, &b).unwrap()).abs() <= 1e-9);
        let na = complement(&a).unwrap();
        let nb = complement(&b).unwrap();
        prop_assert!((j.cells[1][0] + j.cells[1][1] - born_probability(&psi, &na).unwrap()).abs() <= 1e-9);
        prop_assert!((j.cells[0][1] + j.cells[1][1] - born_probability(&psi, &nb).unwrap()).abs() <= 1e-9);
        for x in 0..2 {
            for y in 0..2 {
                prop_assert!(j.cells[x][y] >= 0.0);
                prop_assert!((j.cells[x][y] - r.cells[y][x]).abs() <= 1e-9);
            }
        }
        prop_assert!((j.total() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn classical_bound_always_holds((psi, a, b) in compatible_setup()) {
        prop_assert!(classical_conjunction_bound_check(&psi, &a, &b).unwrap());
    }

    #[test]
    fn nested_conjunction_never_exceeds_constituent((psi, a, b) in nested_setup()) {
        prop_assert!(conjunction_fallacy_gap(&psi, &a, &b).unwrap() <= 1e-12);
    }

    #[test]
    fn similarity_matches_closed_form(
        a in prop::collection::vec(-1.0..1.0f64, 3),
        b1 in prop::collection::vec(-1.0..1.0f64, 3),
        b2 in prop::collection::vec(-1.0..1.0f64, 3),
    ) {
        let low = Event::from_real("low", &[&a]);
        let high = Event::from_real("high", &[&b1, &b2]);
        let (Ok(low), Ok(high)) = (low, high) else { return Ok(()) };
        prop_assume!(high.dim() == 2);
        let psi = StateVector::uniform(3);
        let k = &low.subspace().basis()[0];
        let pb = high.projector();
        // Not contained in and not orthogonal to the plane.
        let along = apply(pb, k).unwrap().norm_sqr();
        prop_assume!(along > 1e-6 && along < 1.0 - 1e-6);

        let sim_ab = inner_product(k, psi.vector()).unwrap().norm_sqr() * along;
        let sim_ba = inner_product(k, &apply(pb, psi.vector()).unwrap()).unwrap().norm_sqr();
        let got_ab = similarity(&psi, &low, &high).unwrap();
        let got_ba = similarity(&psi, &high, &low).unwrap();
        prop_assert!((got_ab - sim_ab).abs() <= 1e-12);
        prop_assert!((got_ba - sim_ba).abs() <= 1e-12);
        if (sim_ab - sim_ba).abs() > 1e-9 {
            prop_assert_eq!(got_ab > got_ba, sim_ab > sim_ba);
        }
    }
}
