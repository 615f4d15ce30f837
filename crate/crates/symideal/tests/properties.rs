use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

use symideal::combinat::{kostka, kostka_decomposition, partitions_of, standard_tableaux, Partition, Permutation};
use symideal::equivariant::{decompose_quotient, is_permutation_module_sum, is_symmetric};
use symideal::ideals::{orbit_ideal, point_ideal, vanishing_ideal, Ideal, MonomialOrder};
use symideal::poly::{rat, Coeff, Monomial, Polynomial};

const N: usize = 3;

fn coeff() -> impl Strategy<Value = Coeff> {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn poly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), coeff()), 0..=max_terms)
        .prop_map(move |ts| Polynomial::from_terms(n, ts.into_iter().map(|(e, c)| (Monomial(e), c))))
}

fn homogeneous(n: usize, d: u32) -> impl Strategy<Value = Polynomial> {
    poly(n, d, 5).prop_map(move |p| p.homogeneous_component(d))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=7).prop_flat_map(|n| {
        let all = partitions_of(n).unwrap();
        let k = all.len();
        (0..k).prop_map(move |i| all[i].clone())
    })
}

fn point(n: usize) -> impl Strategy<Value = Vec<Coeff>> {
    prop::collection::vec((-3i64..=3, 1i64..=2).prop_map(|(p, q)| rat(p, q)), n)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn partition_invariants(l in partition()) {
        prop_assert!(l.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(l.transpose().transpose(), l.clone());
        prop_assert_eq!(l.transpose().size(), l.size());
        prop_assert!(l.dominates(&l).unwrap());
        prop_assert!(Partition::row(l.size()).dominates(&l).unwrap());
        prop_assert!(l.dominates(&Partition::column(l.size())).unwrap());
        prop_assert_eq!(kostka(&l, &l).unwrap(), 1);
        prop_assert_eq!(BigUint::from(standard_tableaux(&l).len()), l.hook_length_dim());
    }

    #[test]
    fn kostka_decomposition_dimension(l in partition()) {
        prop_assert_eq!(kostka_decomposition(&l).dimension(), l.multinomial());
        prop_assert_eq!(is_permutation_module_sum(&kostka_decomposition(&l)), Some(vec![l]));
    }

    #[test]
    fn dominance_is_antisymmetric(a in partition(), b in partition()) {
        if a.size() == b.size() && a.dominates(&b).unwrap() && b.dominates(&a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn permutation_group_laws(s in permutation(5), t in permutation(5)) {
        let st = s.compose(&t);
        prop_assert_eq!(st.sign(), s.sign() * t.sign());
        prop_assert_eq!(s.compose(&s.inverse()), Permutation::identity(5));
        prop_assert_eq!(st.inverse(), t.inverse().compose(&s.inverse()));
        prop_assert_eq!(s.cycle_type().size(), 5);
    }

    #[test]
    fn ring_axioms(f in poly(N, 2, 4), g in poly(N, 2, 4), h in poly(N, 2, 4)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn text_round_trip(f in poly(N, 3, 5)) {
        prop_assert_eq!(Polynomial::parse(N, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn permutation_action(f in poly(N, 2, 4), g in poly(N, 2, 4), s in permutation(N), t in permutation(N)) {
        let lhs = f.apply_permutation(&t).unwrap().apply_permutation(&s).unwrap();
        prop_assert_eq!(lhs, f.apply_permutation(&s.compose(&t)).unwrap());
        let prod = (&f * &g).apply_permutation(&s).unwrap();
        prop_assert_eq!(prod, &f.apply_permutation(&s).unwrap() * &g.apply_permutation(&s).unwrap());
    }

    #[test]
    fn reynolds_projects(f in poly(N, 2, 4)) {
        let r = f.reynolds();
        prop_assert!(r.is_symmetric());
        prop_assert_eq!(r.reynolds(), r);
    }

    #[test]
    fn apolar_pairing_is_symmetric_and_invariant(f in homogeneous(N, 3), g in homogeneous(N, 3), s in permutation(N)) {
        let fg = f.apolar_pair(&g).unwrap();
        prop_assert_eq!(fg.clone(), g.apolar_pair(&f).unwrap());
        let moved = f.apply_permutation(&s).unwrap().apolar_pair(&g.apply_permutation(&s).unwrap()).unwrap();
        prop_assert_eq!(moved, fg);
        prop_assert!(f.is_zero() || !f.apolar_pair(&f).unwrap().is_zero());
    }

    #[test]
    fn leibniz_rule(f in poly(N, 2, 4), g in poly(N, 2, 4), i in 0..N) {
        let lhs = (&f * &g).derivative(i);
        prop_assert_eq!(lhs, &(&f.derivative(i) * &g) + &(&f * &g.derivative(i)));
    }

    #[test]
    fn groebner_basis_properties(gens in prop::collection::vec(homogeneous(N, 2), 1..=3), f in poly(N, 3, 4)) {
        let i = Ideal::new(N, gens.clone()).unwrap();
        let gb = i.groebner();
        prop_assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            prop_assert!(i.contains(g));
        }
        let r = i.normal_form(&f);
        prop_assert_eq!(i.normal_form(&r), r.clone());
        prop_assert!(i.contains(&(&f - &r)));
        let other = i.groebner_in(MonomialOrder::DegLex);
        prop_assert_eq!(other.normal_form(&(&f - &r)).is_zero(), true);
    }

    #[test]
    fn colength_is_order_independent(pts in prop::collection::vec(point(2), 1..=4)) {
        let i = vanishing_ideal(&pts);
        let lex = i.groebner_in(MonomialOrder::DegLex).standard_monomials().map(|s| s.len());
        prop_assert_eq!(i.colength().finite(), lex);
        let mut distinct = pts.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(i.colength().finite(), Some(distinct.len()));
    }

    #[test]
    fn intersection_adds_colength(a in point(3), b in point(3)) {
        prop_assume!(a != b);
        let i = point_ideal(&a).intersect(&point_ideal(&b));
        prop_assert_eq!(i.colength().finite(), Some(2));
        for p in [&a, &b] {
            for g in i.generators() {
                prop_assert!(g.evaluate(p).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn associated_graded_preserves_colength(p in point(3)) {
        let i = orbit_ideal(&p).unwrap();
        let gr = i.associated_graded().unwrap();
        prop_assert!(gr.is_homogeneous());
        prop_assert_eq!(gr.colength(), i.colength());
        prop_assert_eq!(gr.hilbert_function().unwrap().iter().sum::<usize>(), i.colength().finite().unwrap());
        prop_assert_eq!(gr.associated_graded().unwrap(), gr.clone());
        prop_assert!(is_symmetric(&gr));
    }

    #[test]
    fn orbit_modules_are_permutation_modules(p in point(4)) {
        let i = orbit_ideal(&p).unwrap();
        let d = decompose_quotient(&i).unwrap().total;
        prop_assert_eq!(d.dimension().to_usize(), i.colength().finite());
        let mut counts: Vec<usize> = {
            let mut sorted = p.clone();
            sorted.sort();
            let mut runs = Vec::new();
            let mut k = 1;
            for w in sorted.windows(2) {
                if w[0] == w[1] { k += 1 } else { runs.push(k); k = 1 }
            }
            runs.push(k);
            runs
        };
        counts.sort_by(|a, b| b.cmp(a));
        let shape = Partition::new(counts).unwrap();
        prop_assert_eq!(is_permutation_module_sum(&d), Some(vec![shape]));
    }
}
