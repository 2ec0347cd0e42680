use hopf_deform_core::braided::DiagonalDatum;
use hopf_deform_core::groups::FiniteAbelianGroup;
use hopf_deform_core::hopfcore::{verify_hopf_axioms, PbwMonomial, VerifyMode};
use hopf_deform_core::liftings::*;
use hopf_deform_core::scalars::{CyclotomicField, Scalar};
use proptest::prelude::*;

// Z/6, g x = ζ_3 x g, N = 3.
fn taft_z6() -> DiagonalDatum {
    let g = FiniteAbelianGroup::cyclic(6);
    DiagonalDatum::new(g.clone(), vec![g.element(&[1])], vec![g.character(&[2])]).unwrap()
}

// Z/p², g x = q x g, g y = q^{-1} y g with q of order p.
fn bdg(p: u32) -> DiagonalDatum {
    let g = FiniteAbelianGroup::cyclic(p * p);
    let p = p as i64;
    DiagonalDatum::new(g.clone(), vec![g.element(&[1]), g.element(&[1])], vec![g.character(&[p]), g.character(&[-p])])
        .unwrap()
}

// Z/p, g x = q x g, g y = q^{-1} y g.
fn two_variable(p: u32) -> DiagonalDatum {
    let g = FiniteAbelianGroup::cyclic(p);
    DiagonalDatum::new(g.clone(), vec![g.element(&[1]), g.element(&[1])], vec![g.character(&[1]), g.character(&[-1])])
        .unwrap()
}

// Z/2p with q = ζ_{2p}^2.
fn doubled(p: u32) -> DiagonalDatum {
    let g = FiniteAbelianGroup::cyclic(2 * p);
    DiagonalDatum::new(g.clone(), vec![g.element(&[1]), g.element(&[1])], vec![g.character(&[2]), g.character(&[-2])])
        .unwrap()
}

// Z/rs, g x = χ^r(g) x g, g y = χ^{-r}(g) y g.
fn coprime(r: u32, s: u32) -> DiagonalDatum {
    let g = FiniteAbelianGroup::cyclic(r * s);
    let r = r as i64;
    DiagonalDatum::new(g.clone(), vec![g.element(&[1]), g.element(&[1])], vec![g.character(&[r]), g.character(&[-r])])
        .unwrap()
}

fn params(diag: &[i64], link: Option<i64>) -> LiftingParams {
    let mut p = LiftingParams::zero(diag.len());
    for (i, &v) in diag.iter().enumerate() {
        p.set(i, i, Scalar::from_i64(v));
    }
    if let Some(b) = link {
        p.set(0, 1, Scalar::from_i64(b));
    }
    p
}

#[test]
fn taft_lifting_is_hopf_with_expected_coradical_filtration() {
    let d = taft_z6();
    let l = build_lifting(&d, &params(&[1], None), VerifyMode::Full).unwrap();
    assert_eq!(l.hopf.dim(), 18);
    assert!(l.report.passed());
    assert_eq!(coradical_dims(&l), vec![6, 12, 18]);
    // x^3 = g^3 − 1
    let x = l.hopf.generator_index(0);
    let x3 = l.presentation.normalize(&[Letter::X(0), Letter::X(0), Letter::X(0)]);
    let g3 = l.hopf.group_index(&d.group().element(&[3]));
    assert_eq!(x3, vec![(0, Scalar::from_i64(-1)), (g3, Scalar::one())]);
    assert!(x > 0);
}

#[test]
fn forced_zero_rejected() {
    let g = FiniteAbelianGroup::cyclic(3);
    let d = DiagonalDatum::new(g.clone(), vec![g.element(&[1])], vec![g.character(&[1])]).unwrap();
    let err = build_lifting(&d, &params(&[1], None), VerifyMode::Full).unwrap_err();
    assert!(format!("{err}").contains("forced zero: g^n = 1"));
    let v = validate_params(&d, &params(&[0], None)).unwrap();
    assert!(v.conflicts().is_empty());
    assert_eq!(v.forced.len(), 1);
}

#[test]
fn linking_relation_holds_in_the_algebra() {
    let d = two_variable(3);
    let l = build_lifting(&d, &params(&[0, 0], Some(2)), VerifyMode::Full).unwrap();
    assert_eq!(l.hopf.dim(), 27);
    let pr = &l.presentation;
    let xy = pr.normalize(&[Letter::X(0), Letter::X(1)]);
    let yx = pr.normalize(&[Letter::X(1), Letter::X(0)]);
    let q = d.q(0, 1);
    let mut lhs = xy.clone();
    for (i, c) in &yx {
        match lhs.iter_mut().find(|(k, _)| k == i) {
            Some(e) => e.1 = &e.1 - &(c * &q),
            None => lhs.push((*i, -&(c * &q))),
        }
    }
    lhs.retain(|(_, c)| !c.is_zero());
    lhs.sort_by_key(|(i, _)| *i);
    let g2 = l.hopf.group_index(&d.group().element(&[2]));
    assert_eq!(lhs, vec![(0, Scalar::from_i64(-2)), (g2, Scalar::from_i64(2))]);
}

#[test]
fn pbw_labels_render() {
    let m = PbwMonomial { x: vec![2, 1], g: FiniteAbelianGroup::cyclic(6).element(&[3]) };
    assert_eq!(format!("{m}"), "x1^2 x2 g^3");
}

#[test]
fn theta_on_generators() {
    let d = taft_z6();
    let f = params(&[5], None);
    let k = build_k_and_f(&d, &f, 6).unwrap();
    let z = k.elements[0].clone();
    let t = theta(&k, &z).unwrap();
    // Θ(f)(z) = z + f(z)(1 − h)
    let h = d.group().element(&[3]);
    let expected = z
        .add(&k.tga.one().scale(&Scalar::from_i64(5)))
        .sub(&k.tga.group(&h).scale(&Scalar::from_i64(5)));
    assert_eq!(t, expected);
    // Θ fixes G
    let g = k.tga.group(&d.group().element(&[1]));
    assert_eq!(theta(&k, &g).unwrap(), g);
    // fs(z) = −f(z)
    assert_eq!(inverse_f(&k).unwrap(), params(&[-5], None));
}

#[test]
fn theta_on_linking_generator() {
    let d = two_variable(3);
    let f = params(&[0, 0], Some(4));
    let k = build_k_and_f(&d, &f, 3).unwrap();
    let idx = k.generator_index(&KGenerator::Link(0, 1)).unwrap();
    let z = k.elements[idx].clone();
    let t = theta(&k, &z).unwrap();
    let gg = d.group().element(&[2]);
    let expected = z.add(&k.tga.one().scale(&Scalar::from_i64(4))).sub(&k.tga.group(&gg).scale(&Scalar::from_i64(4)));
    assert_eq!(t, expected);
}

// Z/9, g x = ζ_3 x g, so h = g^3 has order 3.
fn taft_z9() -> DiagonalDatum {
    let g = FiniteAbelianGroup::cyclic(9);
    DiagonalDatum::new(g.clone(), vec![g.element(&[1])], vec![g.character(&[3])]).unwrap()
}

#[test]
fn theta_of_square_versus_u_recursion() {
    for d in [taft_z6(), taft_z9()] {
        let c = Scalar::from_i64(2);
        let k = build_k_and_f(&d, &params(&[2], None), 6).unwrap();
        let grp = d.group();
        let h = grp.element(&[3]);
        let one = grp.identity();
        let z2 = z_power(&k, &[2]).unwrap();
        let t = theta(&k, &z2).unwrap();
        // Θ(z²) = Θ(z)², whose kG part is c²(1 − h)²
        let th = theta(&k, &k.elements[0]).unwrap();
        assert_eq!(t, k.tga.mul(&th, &th).unwrap());
        let one_minus_h = kg_g_minus_one(&d, &h, &-&c);
        assert_eq!(t.group_part(), kg_mul(&d, &one_minus_h, &one_minus_h));
        // the recursion with t^2_{11} = 2 gives c²(3 − 2h − h²)
        let t_coef = t_coefficients(&k, &[2]).unwrap();
        assert_eq!(t_coef.get(&(vec![1], vec![1])), Some(&Scalar::from_i64(2)));
        let c2 = &c * &c;
        let mut expected = KgElement::new();
        for (g, v) in [(one.clone(), 3), (h.clone(), -2), (grp.mul(&h, &h), -1)] {
            let e = expected.entry(g).or_insert_with(Scalar::zero);
            *e += &(&c2 * &Scalar::from_i64(v));
        }
        expected.retain(|_, v| !v.is_zero());
        let u = u_coefficients(&k, &[2]).unwrap();
        assert_eq!(u, expected);
        // they agree exactly when h² = 1
        assert_eq!(u == t.group_part(), grp.is_identity(&grp.mul(&h, &h)));
    }
}

#[test]
fn convolution_adds_parameters() {
    let d = bdg(3);
    let k1 = build_k_and_f(&d, &params(&[1, 2], Some(3)), 3).unwrap();
    let k2 = build_k_and_f(&d, &params(&[4, -1], Some(5)), 3).unwrap();
    assert_eq!(convolve_f(&k1, &k2).unwrap(), params(&[5, 1], Some(8)));
}

#[test]
fn u_equals_h_for_rank_one_and_two() {
    let cases = [
        (taft_z6(), params(&[3], None)),
        (two_variable(3), params(&[0, 0], Some(1))),
        (bdg(3), params(&[1, 2], Some(-1))),
        (doubled(3), params(&[1, 1], Some(1))),
    ];
    for (d, f) in cases {
        let (u, cert) = lifting_from_f(&d, &f).unwrap();
        assert!(cert.passed(), "{:?}", cert.differences);
        assert!(verify_hopf_axioms(&u, VerifyMode::default_for(u.dim(), 7)).passed());
        // relabeling the generators
        if d.rank() == 2 {
            let dp = d.permuted(&[1, 0]);
            let (_, cert) = lifting_from_f(&dp, &f.permuted(&d, &[1, 0])).unwrap();
            assert!(cert.passed());
        }
    }
}

#[test]
fn non_invariant_f_rejected() {
    // g of order 3 in Z/6, χ(g) = ζ_3, χ^3 ≠ ε
    let g = FiniteAbelianGroup::cyclic(6);
    let d = DiagonalDatum::new(g.clone(), vec![g.element(&[2])], vec![g.character(&[1])]).unwrap();
    let err = build_k_and_f(&d, &params(&[1], None), 3).unwrap_err();
    assert!(matches!(err, LiftingError::NotInvariant(_)));
}

#[test]
fn bdg_dual_has_one_grouplike() {
    let d = bdg(3);
    let l = build_lifting(&d, &params(&[1, 1], Some(1)), VerifyMode::default_for(81, 1)).unwrap();
    assert_eq!(l.hopf.dim(), 81);
    let r = dual_invariants(&l);
    assert_eq!(r.grouplikes.len(), 1);
    assert_eq!(r.enumerated_grouplikes, r.grouplikes);
    assert!(!r.dual_pointed);
}

#[test]
fn coprime_example_grouplikes() {
    for (r, s, dim, expected) in [(3, 2, 24, 2), (2, 3, 54, 1)] {
        let d = coprime(r, s);
        let l = build_lifting(&d, &params(&[1, 1], Some(1)), VerifyMode::default_for(dim, 1)).unwrap();
        assert_eq!(l.hopf.dim(), dim);
        let rep = dual_invariants(&l);
        assert_eq!(rep.grouplikes.len(), expected);
        assert_eq!(rep.enumerated_grouplikes, rep.grouplikes);
    }
}

#[test]
fn irreps_of_small_quantum_group() {
    for p in [3u32, 5] {
        let field = CyclotomicField::new(p).unwrap();
        for r in 1..=p {
            let rep = build_irrep(&field, p, r).unwrap();
            assert!(rep.relations_hold(), "p={p} r={r} {:?}", rep.relations);
            assert!(rep.irreducible(), "p={p} r={r}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]
    #[test]
    fn lifting_axioms_for_random_parameters(a in -3i64..4, b in -3i64..4, c in -3i64..4) {
        let d = bdg(2);
        let l = build_lifting(&d, &params(&[a, c], Some(b)), VerifyMode::Full).unwrap();
        prop_assert!(l.report.passed());
        let (_, cert) = lifting_from_f(&d, &params(&[a, c], Some(b))).unwrap();
        prop_assert!(cert.passed());
    }
}
