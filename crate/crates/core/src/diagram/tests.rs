use super::*;
use crate::laurent::{delta, phi};
use proptest::prelude::*;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn x(at: usize, positive: bool) -> SweepOp {
    SweepOp::Cross { at, positive }
}

/// Closure of a braid word on `n` strands; letters are `(i, positive)` for sigma_i.
fn braid_closure(n: usize, word: &[(usize, bool)]) -> LinkDiagram {
    let mut ops = Vec::new();
    for k in 0..n {
        ops.push(SweepOp::Cup { at: k });
    }
    for &(i, s) in word {
        ops.push(x(n - 1 + i, s));
    }
    for k in (0..n).rev() {
        ops.push(SweepOp::Cap { at: k });
    }
    Sweep::planar(ops).to_link().unwrap()
}

fn hopf() -> LinkDiagram {
    braid_closure(2, &[(1, true), (1, true)])
}

#[test]
fn basic_brackets() {
    assert_eq!(kauffman_bracket(&LinkDiagram::unknot()).unwrap(), delta());
    let unlink = LinkDiagram::new(vec![], 2).unwrap();
    assert_eq!(kauffman_bracket(&unlink).unwrap(), &delta() * &delta());
    assert_eq!(kauffman_bracket(&hopf()).unwrap(), &delta() * &phi(1));
    assert!(kauffman_bracket(&LinkDiagram::default()).unwrap().is_one());
}

#[test]
fn trefoil_matches_enumeration() {
    let t = braid_closure(2, &[(1, true); 3]);
    let v = kauffman_bracket(&t).unwrap();
    assert_eq!(v, kauffman_bracket_enumerate(&t, &BracketOptions::default()).unwrap());
    let unnormalized = reduce_by_delta(&v).unwrap();
    let expected = p("-A^5 - A^-3 + A^-7");
    assert!(unnormalized == expected || unnormalized == expected.mirror());
    assert_eq!(kauffman_bracket(&t.mirror()).unwrap(), v.mirror());
}

use crate::laurent::reduce_by_delta;

#[test]
fn reidemeister_moves() {
    let base = braid_closure(3, &[(1, true), (2, false), (1, true)]);
    let v = kauffman_bracket(&base).unwrap();
    let r2 = braid_closure(3, &[(1, true), (2, true), (2, false), (2, false), (1, true)]);
    assert_eq!(kauffman_bracket(&r2).unwrap(), v);
    let lhs = braid_closure(3, &[(1, true), (2, true), (1, true), (2, false)]);
    let rhs = braid_closure(3, &[(2, true), (1, true), (2, true), (2, false)]);
    assert_eq!(kauffman_bracket(&lhs).unwrap(), kauffman_bracket(&rhs).unwrap());
    // A Markov stabilization is a Reidemeister I move.
    let k1 = braid_closure(4, &[(1, true), (2, false), (1, true), (3, true)]);
    assert_eq!(kauffman_bracket(&k1).unwrap(), &v * &p("-A^3"));
    let k2 = braid_closure(4, &[(1, true), (2, false), (1, true), (3, false)]);
    assert_eq!(kauffman_bracket(&k2).unwrap(), &v * &p("-A^-3"));
}

#[test]
fn distant_unknot() {
    let t = braid_closure(3, &[(1, true), (2, false), (1, true), (2, false)]);
    assert_eq!(
        kauffman_bracket(&t.with_extra_loop()).unwrap(),
        &kauffman_bracket(&t).unwrap() * &delta()
    );
}

#[test]
fn text_roundtrip_link() {
    let h = hopf();
    let text = h.to_string();
    let back: LinkDiagram = text.parse().unwrap();
    assert_eq!(back, h);
    let with_loop: LinkDiagram = format!("{text}O 99\n").parse().unwrap();
    assert_eq!(with_loop.free_loops(), 1);
}

#[test]
fn malformed_inputs() {
    assert!(matches!("X 1 2 3".parse::<LinkDiagram>(), Err(DiagramError::Parse { line: 1, .. })));
    assert!(matches!("# c\nY 1".parse::<LinkDiagram>(), Err(DiagramError::Parse { line: 2, .. })));
    assert!(matches!("X 1 2 3 4".parse::<LinkDiagram>(), Err(DiagramError::MalformedDiagram(_))));
    // Edge multiset fine but cyclic orders describe a torus graph.
    assert!(matches!("X 1 2 3 4\nX 1 3 2 4".parse::<LinkDiagram>(), Err(DiagramError::MalformedDiagram(_))));
    assert!("P1 1\nX 1 2 2 3".parse::<TangleDiagram>().is_err());
}

#[test]
fn frontier_bound() {
    let t = braid_closure(3, &[(1, true), (2, true)]);
    let opts = BracketOptions { max_frontier: 1, ..Default::default() };
    assert!(matches!(kauffman_bracket_with(&t, &opts), Err(DiagramError::BoundExceeded { .. })));
    let opts = BracketOptions { max_crossings: 1, ..Default::default() };
    assert!(matches!(kauffman_bracket_enumerate(&t, &opts), Err(DiagramError::BoundExceeded { .. })));
}

fn short(cores: u32) -> BasisElement {
    BasisElement::new(ArcType::Short, cores)
}

fn long(cores: u32) -> BasisElement {
    BasisElement::new(ArcType::Long, cores)
}

#[test]
fn crossingless_reductions() {
    let t = basis_tangle(short(1));
    assert_eq!(reduce_tangle(&t).unwrap(), SkeinVector::single(short(1), LaurentPoly::one()));
    let t = basis_tangle(long(2));
    assert_eq!(reduce_tangle(&t).unwrap(), SkeinVector::single(long(2), LaurentPoly::one()));
    let with_circle = Sweep::annular(
        0,
        vec![SweepOp::In(Terminal::P1), SweepOp::Out(Terminal::P2), SweepOp::Cup { at: 0 }, SweepOp::Cap { at: 0 }],
    )
    .to_tangle()
    .unwrap();
    assert_eq!(reduce_tangle(&with_circle).unwrap(), SkeinVector::single(short(0), delta()));
}

#[test]
fn tangle_text_roundtrip() {
    let t = basis_tangle(long(1));
    let text = t.to_string();
    assert_eq!(text.parse::<TangleDiagram>().unwrap(), t);
    let u: TangleDiagram = "P1 1\nP2 1\nO 2\nM 2 1\n".parse().unwrap();
    assert_eq!(reduce_tangle(&u).unwrap(), SkeinVector::single(short(1), LaurentPoly::one()));
}

#[test]
fn parity_split_examples() {
    let v = SkeinVector::single(short(0), LaurentPoly::one());
    assert_eq!(parity_split(&v), (v.clone(), SkeinVector::zero()));
    let v = SkeinVector::single(short(1), LaurentPoly::one());
    assert_eq!(parity_split(&v), (SkeinVector::zero(), v.clone()));
    let mixed: SkeinVector = [(long(0), LaurentPoly::one()), (short(2), delta())].into_iter().collect();
    let (e, o) = parity_split(&mixed);
    assert_eq!(e, SkeinVector::single(short(2), delta()));
    assert_eq!(o, SkeinVector::single(long(0), LaurentPoly::one()));
}

/// `pin (s1^a s2^-1)^r pout` on a band of two strands.
fn family(a: usize, r: usize) -> TangleDiagram {
    let mut ops = vec![SweepOp::In(Terminal::P1)];
    for _ in 0..r {
        ops.extend(std::iter::repeat_n(x(0, true), a));
        ops.push(x(1, false));
    }
    ops.push(SweepOp::Out(Terminal::P2));
    Sweep::annular(2, ops).to_tangle().unwrap()
}

#[test]
fn three_crossing_family_member() {
    let v = reduce_tangle(&family(3, 1)).unwrap();
    let expect: SkeinVector = [
        (short(0), p("-A^6 - A^-2 + A^-6")),
        (long(1), p("1 - A^-4 + A^-8")),
        (short(2), p("A^2")),
    ]
    .into_iter()
    .collect();
    assert_eq!(v, expect);
}

#[test]
fn membrane_parity_is_isotopy_invariant() {
    // Adding canceling crossings (Reidemeister II) or a kink keeps every
    // summand's parity class.
    let t = family(1, 2);
    let parity = t.total_membrane() % 2;
    let mut ops = vec![SweepOp::In(Terminal::P1), x(0, true), x(0, false)];
    ops.extend([x(0, true), x(1, false), x(0, true), x(1, false)]);
    ops.extend([SweepOp::Cup { at: 3 }, x(2, true), SweepOp::Cap { at: 3 }]);
    ops.push(SweepOp::Out(Terminal::P2));
    let t2 = Sweep::annular(2, ops).to_tangle().unwrap();
    assert_eq!(t2.total_membrane() % 2, parity);
    let v1 = reduce_tangle(&t).unwrap();
    let v2 = reduce_tangle(&t2).unwrap();
    assert_eq!(v2, v1.scale(&p("-A^3")));
    let (e, o) = parity_split(&v1);
    assert!(e.is_zero() != o.is_zero());
}

#[test]
fn closures_are_planar_and_parity_tracks_winding() {
    for t in [family(3, 1), family(1, 2), basis_tangle(long(0)), basis_tangle(short(2))] {
        for w in -3..=3 {
            for tw in -2..=2 {
                let c = ClosureSpec::generated(w, tw, 0);
                assert_eq!(c.is_odd(), w % 2 != 0);
                let l = close(&t, &c).unwrap();
                let v = kauffman_bracket(&l).unwrap();
                assert!(reduce_by_delta(&v).is_ok());
            }
        }
    }
}

#[test]
fn gluing_is_linear() {
    let t = family(3, 1);
    let reduced = reduce_tangle(&t).unwrap();
    for c in [
        ClosureSpec::generated(0, 1, 0),
        ClosureSpec::generated(1, -1, 0),
        ClosureSpec::generated(2, 2, 1),
        ClosureSpec::basis(ArcType::Long, 2),
    ] {
        let direct = kauffman_bracket(&close(&t, &c).unwrap()).unwrap();
        let mut via_basis = LaurentPoly::zero();
        for (b, coeff) in reduced.iter() {
            let v = kauffman_bracket(&close(&basis_tangle(*b), &c).unwrap()).unwrap();
            via_basis += &(coeff * &v);
        }
        assert_eq!(direct, via_basis, "closure {c}");
    }
}

#[test]
fn three_crossing_member_has_unknotted_odd_closure() {
    let c = ClosureSpec::generated(1, 0, 2);
    let l = close(&family(3, 1), &c).unwrap();
    assert_eq!(kauffman_bracket(&l).unwrap(), delta());
}

#[test]
fn closure_text_roundtrip() {
    let l = close(&family(1, 2), &ClosureSpec::generated(1, 1, 0)).unwrap();
    let back: LinkDiagram = l.to_string().parse().unwrap();
    assert_eq!(kauffman_bracket(&back).unwrap(), kauffman_bracket(&l).unwrap());
}

fn arb_braid() -> impl Strategy<Value = (usize, Vec<(usize, bool)>)> {
    (2usize..5).prop_flat_map(|n| (Just(n), prop::collection::vec((1..n, any::<bool>()), 0..12)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engine_matches_enumeration((n, word) in arb_braid()) {
        let d = braid_closure(n, &word);
        let fast = kauffman_bracket(&d).unwrap();
        let slow = kauffman_bracket_enumerate(&d, &BracketOptions::default()).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn mirror_inverts_variable((n, word) in arb_braid()) {
        let d = braid_closure(n, &word);
        prop_assert_eq!(kauffman_bracket(&d.mirror()).unwrap(), kauffman_bracket(&d).unwrap().mirror());
    }

    #[test]
    fn parity_split_is_idempotent_and_linear(a in 0u32..4, b in 0u32..4, k in -5i64..5) {
        let v: SkeinVector = [(short(a), LaurentPoly::monomial(k, 1)), (long(b), LaurentPoly::constant(k + 7))]
            .into_iter()
            .collect();
        let (e, o) = parity_split(&v);
        prop_assert_eq!(e.add(&o), v.clone());
        prop_assert_eq!(parity_split(&e), (e.clone(), SkeinVector::zero()));
        prop_assert_eq!(parity_split(&o), (SkeinVector::zero(), o.clone()));
        let (e2, o2) = parity_split(&v.add(&v));
        prop_assert_eq!(e2, e.add(&e));
        prop_assert_eq!(o2, o.add(&o));
    }
}
