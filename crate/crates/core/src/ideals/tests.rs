use super::*;
use crate::diagram::{Sweep, SweepOp};
use crate::laurent::delta;
use crate::verify::bounded_membership as lattice_member;
use proptest::prelude::*;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn ideal(gens: &[&str]) -> LaurentIdeal {
    LaurentIdeal::new(gens.iter().map(|g| p(g)))
}

#[test]
fn triviality_and_membership() {
    assert!(ideal(&["5", "1 + A^4", "9", "4 + A^4"]).is_trivial());
    assert!(membership(&p("9"), &ideal(&["9", "4 + A^4"])));
    assert!(!membership(&p("3"), &ideal(&["9", "4 + A^4"])));
    assert!(!ideal(&["9", "4 + A^4"]).is_trivial());
    assert!(ideal_equal(&ideal(&["-9", "-2 + A^4"]), &ideal(&["9", "A^4 - 2"])));
    assert!(!ideal_equal(&ideal(&["9", "4 + A^4"]), &ideal(&["3"])));
    assert!(ideal(&["A^3 + A^5"]).contains(&p("1 + A^2")));
    assert!(LaurentIdeal::unit().is_trivial());
    assert!(!LaurentIdeal::new([]).is_trivial());
}

#[test]
fn canonical_display() {
    let a = ideal(&["-9", "-2 + A^4"]);
    let b = ideal(&["9", "A^4 - 2", "18 + 9*A"]);
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(ideal(&["2", "3"]).to_string(), "<1>");
    assert_eq!(ideal(&["6", "4"]).to_string(), "<2>");
    let c = ideal(&["9", "4 + A^4"]);
    assert_eq!(c.canonical_generators().len(), 2);
    assert!(ideal_equal(&LaurentIdeal::new(c.canonical_generators()), &c));
}

#[test]
fn omega_values() {
    assert_eq!(omega(&p("4 + A^4")), CyclotomicInt::integer(3));
    assert_eq!(omega(&p("A^8")), CyclotomicInt::integer(1));
    assert!(omega(&delta()).is_zero());
    assert_eq!(omega(&p("A^-1")), (&CyclotomicInt::omega_pow(3)).neg());
}

#[test]
fn contractions() {
    assert_eq!(omega_contract(&ideal(&["9", "4 + A^4"])), BigInt::from(3));
    assert_eq!(omega_contract(&ideal(&["5", "1 + A^4"])), BigInt::from(5));
    assert_eq!(omega_contract(&ideal(&["9", "-2 + A^4"])), BigInt::from(3));
    assert_eq!(omega_contract(&ideal(&["11", "4 - A^4"])), BigInt::from(1));
    assert_eq!(omega_contract(&ideal(&["1 + A^2"])), BigInt::from(2));
    assert_eq!(omega_contract(&LaurentIdeal::new([])), BigInt::from(0));
}

fn braid_closure(n: usize, word: &[(usize, bool)]) -> LinkDiagram {
    let mut ops: Vec<SweepOp> = (0..n).map(|k| SweepOp::Cup { at: k }).collect();
    ops.extend(word.iter().map(|&(i, positive)| SweepOp::Cross { at: n - 1 + i, positive }));
    ops.extend((0..n).rev().map(|k| SweepOp::Cap { at: k }));
    Sweep::planar(ops).to_link().unwrap()
}

#[test]
fn determinants() {
    assert_eq!(link_determinant(&LinkDiagram::unknot()).unwrap(), BigInt::from(1));
    assert_eq!(link_determinant(&braid_closure(2, &[(1, true); 2])).unwrap(), BigInt::from(2));
    assert_eq!(link_determinant(&braid_closure(2, &[(1, true); 3])).unwrap(), BigInt::from(3));
    // Figure eight knot.
    let fig8 = braid_closure(3, &[(1, true), (2, false), (1, true), (2, false)]);
    assert_eq!(link_determinant_u64(&fig8).unwrap(), 5);
    // A split link has determinant zero.
    assert_eq!(link_determinant(&LinkDiagram::unknot().with_extra_loop()).unwrap(), BigInt::from(0));
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-4i64..=4, 1..5).prop_flat_map(|cs| {
        (-3i64..3).prop_map(move |low| LaurentPoly::from_terms(cs.iter().enumerate().map(|(k, &c)| (c, low + k as i64))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn omega_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(omega(&(&a + &b)), &omega(&a) + &omega(&b));
        prop_assert_eq!(omega(&(&a * &b)), &omega(&a) * &omega(&b));
        prop_assert_eq!(omega(&a.mirror()), omega(&a).conj());
    }

    #[test]
    fn ideal_equality_is_an_equivalence(a in arb_poly(), b in arb_poly(), n in 2i64..10) {
        let i = LaurentIdeal::new([LaurentPoly::constant(n), a.clone(), b.clone()]);
        let j = LaurentIdeal::new([b.shift(3), -a.clone(), LaurentPoly::constant(-n), &a + &b]);
        prop_assert!(ideal_equal(&i, &i));
        prop_assert!(ideal_equal(&i, &j) && ideal_equal(&j, &i));
        prop_assert_eq!(i.is_trivial(), i.contains(&LaurentPoly::one()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn groebner_agrees_with_lattice_search(
        n in 2i64..10,
        g in arb_poly(),
        h1 in arb_poly(),
        h2 in arb_poly(),
        f in arb_poly(),
    ) {
        let gens = vec![LaurentPoly::constant(n), g.clone()];
        let ideal = LaurentIdeal::new(gens.clone());
        let member = &(&h1 * &LaurentPoly::constant(n)) + &(&h2 * &g);
        prop_assert!(ideal.contains(&member));
        prop_assert!(lattice_member(&member, &gens, 6));
        prop_assert_eq!(ideal.contains(&f), lattice_member(&f, &gens, 8));
    }
}

#[test]
fn canonical_forms_are_readable() {
    assert_eq!(ideal(&["9", "1 + 7*A^4"]).to_string(), "<9, 4 + A^4>");
    assert_eq!(ideal(&["9", "1 + 4*A^4"]).to_string(), "<9, -2 + A^4>");
    assert_eq!(ideal(&["5", "A^-3 + A"]).to_string(), "<5, 1 + A^4>");
    assert_eq!(ideal(&["6", "3 + 3*A^2"]).to_string(), "<6, 3 + 3*A^2>");
}
