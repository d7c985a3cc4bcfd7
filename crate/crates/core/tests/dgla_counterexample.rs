use dglie::dgla::*;
use dglie::exactlin::KeyedSubspace;
use dglie::freelie::{bracket, expand, Alphabet, FreeLie, LieElement, TensorElement, Word};
use dglie::Error;

fn base(da: u32, db: u32) -> FreeLie {
    FreeLie::new(Alphabet::from_pairs(&[("a", da), ("b", db)]).unwrap())
}

#[test]
fn relation_choices_have_the_predicted_margins() {
    let lie = base(3, 3);
    let mut prior: Vec<LieElement> = Vec::new();
    for j in [1u32, 3, 5, 7] {
        let c = choose_y(&lie, 0, 1, j, &prior).unwrap();
        assert_eq!(c.degree, 6 + 3 * j);
        assert_eq!(c.layer_dim, (j as usize).div_ceil(2));
        assert_eq!(c.ideal_dim, (j as usize - 1) / 2);
        let full = ideal_span_at_degree(&lie, &prior, c.degree).unwrap();
        assert!(!full.contains(expand(lie.alphabet(), &c.y).terms()), "y_{j} inside the ideal");
        let closed = closed_form_ad_span(&lie, 0, &prior, &[j, 2]);
        assert_eq!(closed.dim(), c.ideal_dim);
        prior.push(c.y);
    }
}

#[test]
fn first_relation_is_pinned() {
    let lie = base(3, 5);
    let c = choose_y(&lie, 0, 1, 1, &[]).unwrap();
    assert_eq!(c.y.render(lie.alphabet()), "[b,[a,b]]");
    assert!(choose_y(&lie, 0, 1, 2, &[]).is_err());
}

#[test]
fn single_relation_counterexample_passes_everything() {
    for (da, db) in [(3, 3), (3, 5), (5, 3)] {
        let cx = build_counterexample(&CounterexampleSpec::new(da, db, 1, 30)).unwrap();
        let r = verify_counterexample(&cx).unwrap();
        assert!(r.all_pass(), "({da},{db}): {r:#?}");
        assert_eq!(r.spherical_total, 2);
        assert!(r.spherical[&da] >= 1 && r.spherical[&db] >= 1);
    }
}

#[test]
fn homotopy_side_claims_hold_for_four_relations() {
    let cx = build_counterexample(&CounterexampleSpec::new(3, 3, 4, 30)).unwrap();
    let r = verify_counterexample(&cx).unwrap();
    assert!(r.d_squared_zero && r.minimal && r.differential_in_base);
    assert_eq!(r.even_space_homology, 2);
    assert_eq!(r.odd_space_homology, 4);
    assert_eq!(r.spherical_total, 2);
    assert_eq!(r.spherical[&3], 2);
    assert!(r.x_nonspherical_direct.iter().all(|&b| b));
    assert!(r.x_outside_prior_ideal.iter().all(|&b| b));
    assert!(r.ideal_closed_form_agrees.iter().all(|&b| b));
    assert!(r.coformality.chain_map_ok);
}

/// Two-sided ideal `T y T` of the tensor algebra in one degree: words `u y v`.
fn two_sided(y: &TensorElement, extra: usize) -> KeyedSubspace<Word> {
    let mut span = KeyedSubspace::new();
    for left in 0..=extra {
        let right = extra - left;
        for mu in 0..(1u32 << left) {
            for mv in 0..(1u32 << right) {
                let u: Word = (0..left).map(|k| ((mu >> k) & 1) as u16).collect();
                let v: Word = (0..right).map(|k| ((mv >> k) & 1) as u16).collect();
                span.insert(TensorElement::word(u).product(y).product(&TensorElement::word(v)).terms());
            }
        }
    }
    span
}

#[test]
fn second_relation_bracketed_with_b_lies_in_the_first_ideal() {
    // every admissible y_3 satisfies [y_3, b] ∈ I(y_1), so an extra cycle appears
    let lie = base(3, 3);
    let alph = lie.alphabet().clone();
    let y1 = choose_y(&lie, 0, 1, 1, &[]).unwrap().y;
    let layer = lie.basis_multidegree(&[3, 2]);
    let lie_ideal = ideal_span_at_degree(&lie, std::slice::from_ref(&y1), 18).unwrap();
    let assoc_ideal = two_sided(&expand(&alph, &y1), 3);
    let b = LieElement::generator(1);
    for e in layer.iter() {
        let t = expand(&alph, &bracket(&e.element(), &b));
        assert!(!t.is_zero());
        assert!(lie_ideal.contains(t.terms()));
        assert!(assoc_ideal.contains(t.terms()));
    }
    let cx = build_counterexample(&CounterexampleSpec::new(3, 3, 2, 20)).unwrap();
    assert_eq!(homology(&cx.dgla, 19).unwrap().dim, 1);
    assert_eq!(quotient_oracle_dims(&cx.base, &cx.ys(), 19).unwrap()[&19], 0);
    let w = coformality_witness(&cx.dgla, &cx.base, &cx.ys(), 19).unwrap();
    assert!(!w.ok);
    assert_eq!(w.dims[&19], (1, 0));
}

#[test]
fn zero_differential_homology_is_the_free_algebra() {
    let alph = Alphabet::from_pairs(&[("a", 3), ("b", 3)]).unwrap();
    let d = Dgla::with_zero_differential(alph.clone(), 16);
    let lie = FreeLie::new(alph.clone());
    for deg in 1..=15 {
        assert_eq!(homology(&d, deg).unwrap().dim, lie.dim_degree(deg));
    }
    assert!(check_differential(&d));
    let w = coformality_witness(&d, &lie, &[], 15).unwrap();
    assert!(w.ok);
    assert_eq!(spherical_homology(&d, 16).unwrap().values().sum::<usize>(), 2);
}

#[test]
fn differential_validation() {
    let alph = Alphabet::from_pairs(&[("a", 3), ("x", 5)]).unwrap();
    let err = Dgla::new(alph.clone(), vec![(1, LieElement::generator(0))], 10).unwrap_err();
    assert!(matches!(err, Error::MalformedDifferential { expected: 4, found: 3, .. }));

    // δx = y, δy = a: δ² x = a ≠ 0
    let alph = Alphabet::from_pairs(&[("a", 3), ("y", 4), ("x", 5)]).unwrap();
    let diff = vec![(1, LieElement::generator(0)), (2, LieElement::generator(1))];
    assert!(matches!(Dgla::new(alph.clone(), diff.clone(), 10), Err(Error::DifferentialNotSquareZero(_))));
    let d = Dgla::new_unchecked(alph, diff, 10).unwrap();
    assert!(!check_differential(&d));
}

#[test]
fn contractible_pair_is_not_spherical_homology() {
    // δu = w with u of degree 3: the pair cancels, a stays spherical
    let alph = Alphabet::from_pairs(&[("a", 2), ("w", 2), ("u", 3)]).unwrap();
    let d = Dgla::new(alph, vec![(2, LieElement::generator(1))], 9).unwrap();
    assert!(!linear_part(&d).is_zero());
    let sph = spherical_homology(&d, 8).unwrap();
    assert_eq!(sph.values().sum::<usize>(), 1);
    assert_eq!(homology(&d, 2).unwrap().dim, 1);
}

#[test]
fn cap_is_enforced() {
    let d = Dgla::with_zero_differential(Alphabet::from_pairs(&[("a", 3)]).unwrap(), 6);
    assert!(matches!(homology(&d, 6), Err(Error::CapExceeded { requested: 7, cap: 6 })));
    assert!(matches!(
        build_counterexample(&CounterexampleSpec::new(3, 5, 4, 30)),
        Err(Error::CapExceeded { requested: 32, cap: 30 })
    ));
}
