use kbideal_core::catalog::CatalogDiagram;
use kbideal_core::diagram::{basis_tangle, reduce_tangle, ArcType, BasisElement};
use kbideal_core::pairing::DEFAULT_MAX_I;
use kbideal_core::verify::sample_closures;
use kbideal_core::*;
use num_bigint::BigInt;
use num_integer::Integer;

fn tangle(name: CatalogName) -> TangleDiagram {
    entry(name).tangle().unwrap().clone()
}

fn golden_ideal(gens: &[LaurentPoly]) -> LaurentIdeal {
    LaurentIdeal::new(gens.iter().cloned())
}

#[test]
fn catalog_files_parse_and_roundtrip() {
    for name in CatalogName::ALL {
        match entry(name).diagram {
            CatalogDiagram::Tangle(t) => assert_eq!(t.to_string().parse::<TangleDiagram>().unwrap(), t),
            CatalogDiagram::Link(l) => assert_eq!(l.to_string().parse::<LinkDiagram>().unwrap(), l),
        }
    }
}

#[test]
fn golden_coefficients() {
    for name in CatalogName::TANGLES {
        let want = entry(name).coeffs.unwrap().value;
        assert_eq!(solve_graph_coefficients(&tangle(name), DEFAULT_MAX_I).unwrap(), want, "{name}");
    }
}

#[test]
fn coefficients_of_mirror_are_mirrored_pairings() {
    let t = tangle(CatalogName::TangleD);
    let v = reduce_tangle(&t).unwrap();
    let m = reduce_tangle(&t.mirror()).unwrap();
    for (b, c) in v.iter() {
        assert_eq!(m.get(b), c.mirror());
    }
}

#[test]
fn golden_ideals() {
    let a = tangle(CatalogName::KrebesA);
    let e = entry(CatalogName::KrebesA);
    assert!(even_ideal(&a).unwrap().is_trivial());
    assert_eq!(odd_ideal(&a).unwrap(), golden_ideal(&e.odd_ideal.unwrap().value));
    assert!(full_ideal(&a).unwrap().is_trivial());

    let d = tangle(CatalogName::TangleD);
    let e = entry(CatalogName::TangleD);
    assert_eq!(even_ideal(&d).unwrap(), golden_ideal(&e.even_ideal.unwrap().value));
    assert!(odd_ideal(&d).unwrap().is_trivial());
}

#[test]
fn tangle_h_attachment() {
    let h = tangle(CatalogName::TangleH);
    let e = entry(CatalogName::TangleH);
    let five = golden_ideal(&e.even_ideal.unwrap().value);
    let nine = golden_ideal(&e.odd_ideal.unwrap().value);
    let (even, odd) = (even_ideal(&h).unwrap(), odd_ideal(&h).unwrap());
    // The unordered pair is the published claim; the attachment is computed.
    assert!((even == five && odd == nine) || (even == nine && odd == five));
    assert_eq!(even.to_string(), "<9, 4 + A^4>");
    assert_eq!(odd.to_string(), "<5, 1 + A^4>");
    assert!(full_ideal(&h).unwrap().is_trivial());
    assert_eq!(entry(CatalogName::TangleH).contractions.unwrap().value, (3, 5));
}

#[test]
fn golden_contractions() {
    for name in CatalogName::TANGLES {
        let t = tangle(name);
        let (even, odd) = entry(name).contractions.unwrap().value;
        assert_eq!(omega_contract(&even_ideal(&t).unwrap()), BigInt::from(even), "{name}");
        assert_eq!(omega_contract(&odd_ideal(&t).unwrap()), BigInt::from(odd), "{name}");
    }
}

#[test]
fn closure_brackets_lie_in_their_ideals() {
    for name in CatalogName::TANGLES {
        let t = tangle(name);
        let ideals = [even_ideal(&t).unwrap(), odd_ideal(&t).unwrap()];
        for odd in [false, true] {
            for spec in sample_closures(odd) {
                let link = close(&t, &spec).unwrap();
                let reduced = reduce_by_delta(&kauffman_bracket(&link).unwrap()).unwrap();
                assert!(ideals[usize::from(odd)].contains(&reduced), "{name} {spec}");
                let det = link_determinant(&link).unwrap();
                let d = omega_contract(&ideals[usize::from(odd)]);
                assert!(det.is_multiple_of(&d), "{name} {spec}: {det} not divisible by {d}");
            }
        }
    }
}

#[test]
fn fig6_closure() {
    let e = entry(CatalogName::Fig6Complement);
    let link = e.link().unwrap();
    assert_eq!(kauffman_bracket(link).unwrap(), e.bracket.clone().unwrap().value);
    assert_eq!(link_determinant(link).unwrap(), BigInt::from(e.determinant.clone().unwrap().value));
    let generated = close(&tangle(CatalogName::TangleD), &ClosureSpec::generated(1, 0, 2)).unwrap();
    assert!(ClosureSpec::generated(1, 0, 2).is_odd());
    assert_eq!(kauffman_bracket(&generated).unwrap(), delta());
}

#[test]
fn cross_path_agreement() {
    for name in CatalogName::TANGLES {
        let t = tangle(name);
        let coeffs = solve_graph_coefficients(&t, DEFAULT_MAX_I).unwrap();
        let v = reduce_tangle(&t).unwrap();
        for kind in BasisKind::ALL {
            for n in 0..=4 {
                let direct = RationalFunction::from(hopf_pair(&v, &basis_element(kind, n)).unwrap());
                assert_eq!(coeffs.pair_with_basis(kind, n).unwrap(), direct, "{name} {kind}_{n}");
            }
        }
    }
}

#[test]
fn graph_support_respects_parity() {
    let g = |i, e| GraphIndex::new(i, e).unwrap();
    let odd = solve_graph_coefficients(&basis_tangle(BasisElement::new(ArcType::Short, 1)), 3).unwrap();
    assert_eq!(odd.support(), vec![g(1, 0), g(1, 2)]);
    let even = solve_graph_coefficients(&basis_tangle(BasisElement::new(ArcType::Short, 2)), 3).unwrap();
    assert_eq!(even.support(), vec![g(0, 1), g(2, 1), g(2, 3)]);
}

#[test]
fn worked_sums_for_d_and_h_share_normalizers() {
    for g in [(0, 1), (2, 1), (2, 3)].map(|(i, e)| GraphIndex::new(i, e).unwrap()) {
        let ratio = |n| {
            let c = solve_graph_coefficients(&tangle(n), DEFAULT_MAX_I).unwrap().get(g);
            worked_sum(n, g).unwrap().div(&c).unwrap()
        };
        assert_eq!(ratio(CatalogName::TangleD), ratio(CatalogName::TangleH), "{g}");
    }
    let g01 = GraphIndex::new(0, 1).unwrap();
    let c = solve_graph_coefficients(&tangle(CatalogName::TangleD), DEFAULT_MAX_I).unwrap().get(g01);
    assert_eq!(worked_sum(CatalogName::TangleD, g01).unwrap().div(&c).unwrap(), RationalFunction::from(delta()));
}
