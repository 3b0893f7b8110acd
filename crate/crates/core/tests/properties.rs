use proptest::prelude::*;
use sqfree_lab::field::{Field, PrimeField, Rationals};
use sqfree_lab::groebner::{
    buchberger, initial_ideal, is_reduced_groebner_basis, normal_form, s_polynomial, Ideal, Monomial, MonomialIdeal,
    MonomialOrder, Polynomial,
};
use sqfree_lab::simplicial::{complex_of_ideal, is_cohen_macaulay, reduced_homology, sr_ideal, SimplicialComplex};
use sqfree_lab::sqfree::{ccm_verdict, depth, ext_duals, lyubeznik_table, sr_module, SquarefreeModule};
use sqfree_lab::{FieldSpec, Subset};

fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u32..1 << n, 1..7)
            .prop_map(move |bits| SimplicialComplex::new(n, bits.into_iter().map(Subset::from_bits).collect()).unwrap())
    })
}

fn relabel(c: &SimplicialComplex, perm: &[usize]) -> SimplicialComplex {
    let gens = c
        .facets()
        .iter()
        .map(|f| Subset::from_bits(f.positions().fold(0, |acc, i| acc | 1 << perm[i])))
        .collect();
    SimplicialComplex::new(c.vertex_count(), gens).unwrap()
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Isomorphism invariants of a squarefree module: component dimensions and the
/// rank of every transition between comparable faces.
fn shape<F: Field>(m: &SquarefreeModule<F>) -> (Vec<usize>, Vec<usize>) {
    let faces = Subset::all_graded(m.n());
    let ranks = faces
        .iter()
        .flat_map(|&a| faces.iter().filter(move |&&b| a.is_subset_of(b)).map(move |&b| m.transition(a, b).rank()))
        .collect();
    (m.dims().to_vec(), ranks)
}

fn reduced_euler_from_faces(c: &SimplicialComplex) -> i64 {
    // faces of size s have dimension s - 1
    c.f_vector().iter().enumerate().map(|(s, &f)| if s % 2 == 1 { f as i64 } else { -(f as i64) }).sum()
}

fn arb_poly<F: Field>(field: F, nvars: usize) -> impl Strategy<Value = Polynomial<F>> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -4i64..5), 1..4).prop_map(move |terms| {
        Polynomial::from_terms(
            field,
            nvars,
            MonomialOrder::DegRevLex,
            terms.into_iter().map(|(e, c)| (Monomial::new(e), field.from_i64(c))),
        )
    })
}

fn groebner_invariants<F: Field>(gens: Vec<Polynomial<F>>, mult: Vec<Polynomial<F>>, order: MonomialOrder) {
    let field = gens[0].field();
    let ideal = Ideal::new(field, 3, gens.clone()).unwrap();
    let basis = buchberger(&ideal, order).unwrap();
    assert!(is_reduced_groebner_basis(&basis, order));
    for f in &basis {
        for g in &basis {
            assert!(normal_form(&s_polynomial(f, g), &basis, order).unwrap().is_zero());
        }
    }
    for g in ideal.generators() {
        assert!(normal_form(g, &basis, order).unwrap().is_zero());
    }
    let combo = gens
        .iter()
        .zip(&mult)
        .fold(Polynomial::zero(field, 3, order), |acc, (g, h)| acc.add(&g.mul(h).with_order(order)));
    assert!(normal_form(&combo, &basis, order).unwrap().is_zero());
    // the reduced basis does not depend on the generating set's order
    let mut reversed = gens;
    reversed.reverse();
    let again = buchberger(&Ideal::new(field, 3, reversed).unwrap(), order).unwrap();
    assert_eq!(basis, again);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn euler_characteristic_matches_faces(c in arb_complex(7)) {
        for field in [FieldSpec::RATIONALS, FieldSpec::new(2).unwrap()] {
            let h = reduced_homology(&c, field).unwrap();
            prop_assert_eq!(h.euler_characteristic(), reduced_euler_from_faces(&c));
        }
    }

    #[test]
    fn prime_field_homology_dominates_rational(c in arb_complex(7), p in prop::sample::select(vec![2u64, 3, 5])) {
        let q = reduced_homology(&c, FieldSpec::RATIONALS).unwrap();
        let fp = reduced_homology(&c, FieldSpec::new(p).unwrap()).unwrap();
        for i in -1..c.vertex_count() as isize {
            prop_assert!(fp.reduced_betti(i) >= q.reduced_betti(i));
        }
    }

    #[test]
    fn stanley_reisner_correspondence_is_bijective(c in arb_complex(7)) {
        let j = sr_ideal(&c);
        prop_assert!(j.is_radical());
        prop_assert_eq!(&complex_of_ideal(&j).unwrap(), &c);
        prop_assert_eq!(sr_ideal(&complex_of_ideal(&j).unwrap()), j);
    }

    #[test]
    fn squarefree_ideals_round_trip(n in 1usize..7, supports in prop::collection::vec(1u32..64, 0..6)) {
        let gens = supports.into_iter().map(|b| Monomial::squarefree(n, Subset::from_bits(b & ((1 << n) - 1)))).collect();
        let j = MonomialIdeal::new(n, gens);
        prop_assert_eq!(sr_ideal(&complex_of_ideal(&j).unwrap()), j);
    }

    #[test]
    fn buchberger_invariants_mod_p(
        gens in prop::collection::vec(arb_poly(PrimeField::new(7).unwrap(), 3), 1..4),
        mult in prop::collection::vec(arb_poly(PrimeField::new(7).unwrap(), 3), 3),
        lex in any::<bool>(),
    ) {
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        groebner_invariants(gens, mult, order);
    }

    #[test]
    fn buchberger_invariants_over_q(
        gens in prop::collection::vec(arb_poly(Rationals, 3), 1..3),
        mult in prop::collection::vec(arb_poly(Rationals, 3), 2),
    ) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        groebner_invariants(gens, mult, MonomialOrder::DegRevLex);
    }

    #[test]
    fn initial_ideal_of_monomial_ideal_is_itself(n in 1usize..5, exps in prop::collection::vec(prop::collection::vec(0u32..3, 4), 1..5)) {
        let j = MonomialIdeal::new(n, exps.into_iter().map(|e| Monomial::new(e[..n].to_vec())).collect());
        prop_assume!(!j.generators().iter().any(Monomial::is_one));
        let ideal = j.to_ideal(Rationals, MonomialOrder::Lex);
        prop_assert_eq!(initial_ideal(&ideal, MonomialOrder::DegRevLex).unwrap(), j);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reisner_agrees_with_depth(c in arb_complex(6)) {
        let f = PrimeField::new(3).unwrap();
        let d = c.krull_dimension().unwrap();
        let m = sr_module(&c, f);
        prop_assert!(depth(&m).unwrap() <= d);
        prop_assert_eq!(is_cohen_macaulay(&c, FieldSpec::new(3).unwrap()), depth(&m).unwrap() == d);
    }

    #[test]
    fn hochster_formula_in_every_degree(c in arb_complex(5)) {
        let spec = FieldSpec::new(2).unwrap();
        let n = c.vertex_count();
        let ext = ext_duals(&sr_module(&c, PrimeField::new(2).unwrap())).unwrap();
        for face in Subset::all_graded(n) {
            for i in 0..=n {
                let expected = if c.contains(face) {
                    reduced_homology(&c.link(face).unwrap(), spec).unwrap().reduced_betti(i as isize - face.len() as isize - 1)
                } else {
                    0
                };
                prop_assert_eq!(ext[n - i].dim(face), expected);
            }
        }
    }

    #[test]
    fn tables_are_invariant_under_relabelling(c in arb_complex(6).prop_flat_map(|c| { let n = c.vertex_count(); (Just(c), arb_perm(n)) })) {
        let (c, perm) = c;
        let spec = FieldSpec::new(2).unwrap();
        prop_assert_eq!(lyubeznik_table(&c, spec).unwrap(), lyubeznik_table(&relabel(&c, &perm), spec).unwrap());
    }

    #[test]
    fn double_duals_commute_with_relabelling(c in arb_complex(5).prop_flat_map(|c| { let n = c.vertex_count(); (Just(c), arb_perm(n)) })) {
        let (c, perm) = c;
        let f = PrimeField::new(5).unwrap();
        let m = sr_module(&c, f);
        let mp = m.permute_variables(&perm);
        prop_assert_eq!(&mp, &sr_module(&relabel(&c, &perm), f));
        for (e, ep) in ext_duals(&m).unwrap().iter().zip(ext_duals(&mp).unwrap()) {
            prop_assert_eq!(shape(&e.permute_variables(&perm)), shape(&ep));
            for (ee, eep) in ext_duals(e).unwrap().iter().zip(ext_duals(&ep).unwrap()) {
                prop_assert_eq!(shape(&ee.permute_variables(&perm)), shape(&eep));
            }
        }
    }

    #[test]
    fn ccm_matches_lambda_23_in_dimension_two(c in arb_complex(6)) {
        prop_assume!(c.dimension() == Some(2));
        let spec = FieldSpec::new(2).unwrap();
        let verdict = ccm_verdict(&c, spec).unwrap();
        let table = lyubeznik_table(&c, spec).unwrap();
        prop_assert_eq!(verdict.lambda_23, Some(table.get(2, 3)));
        prop_assert_eq!(verdict.ccm, table.get(2, 3) == 0);
    }

    #[test]
    fn cohen_macaulay_rings_have_trivial_tables(c in arb_complex(6)) {
        let spec = FieldSpec::new(2).unwrap();
        prop_assume!(is_cohen_macaulay(&c, spec));
        let table = lyubeznik_table(&c, spec).unwrap();
        prop_assert!(table.is_trivial());
        prop_assert!(ccm_verdict(&c, spec).unwrap().ccm);
    }

    #[test]
    fn canonical_module_of_cm_ring_is_reflexive(c in arb_complex(5)) {
        let spec = FieldSpec::new(3).unwrap();
        prop_assume!(is_cohen_macaulay(&c, spec));
        let f = PrimeField::new(3).unwrap();
        let n = c.vertex_count();
        let d = c.krull_dimension().unwrap();
        let m = sr_module(&c, f);
        let omega = &ext_duals(&m).unwrap()[n - d];
        let back = ext_duals(omega).unwrap();
        prop_assert_eq!(back[n - d].dims(), m.dims());
        for (k, e) in back.iter().enumerate() {
            if k != n - d {
                prop_assert!(e.is_zero());
            }
        }
    }
}
