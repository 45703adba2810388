//! The polynomials `Q_n`, `S_n` in the core variable `z`, the even and odd
//! relative bases built from them, and graph basis indices.

use std::fmt;

use crate::diagram::{ArcType, BasisElement, SkeinVector};
use crate::laurent::{phi, LaurentPoly};
use crate::recoupling::is_admissible;

/// A polynomial in `z^2`: entry `k` is the coefficient of `z^(2k)`.
pub type PolyInZ2 = Vec<LaurentPoly>;

/// Index `(i, eps)` of a graph basis element, with `eps = i +- 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphIndex {
    pub i: u32,
    pub eps: u32,
}

impl GraphIndex {
    pub fn new(i: u32, eps: u32) -> Option<Self> {
        (eps == i + 1 || i == eps + 1).then_some(Self { i, eps })
    }

    /// All valid indices with `i <= max_i`, ordered by `i` then `eps`.
    pub fn all_up_to(max_i: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 0..=max_i {
            if i > 0 {
                out.push(Self { i, eps: i - 1 });
            }
            out.push(Self { i, eps: i + 1 });
        }
        out
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(1, self.i, self.eps)
    }
}

impl fmt::Display for GraphIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.eps)
    }
}

/// The four families of the even and odd relative bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    XEven,
    YEven,
    XOdd,
    YOdd,
}

impl BasisKind {
    pub const ALL: [BasisKind; 4] = [BasisKind::XEven, BasisKind::YEven, BasisKind::XOdd, BasisKind::YOdd];

    pub fn is_odd(self) -> bool {
        matches!(self, BasisKind::XOdd | BasisKind::YOdd)
    }

    pub fn arc(self) -> ArcType {
        match self {
            BasisKind::XEven | BasisKind::XOdd => ArcType::Short,
            BasisKind::YEven | BasisKind::YOdd => ArcType::Long,
        }
    }

    /// Extra core circles multiplying `S_n`; chosen so that every summand
    /// has the parity of the kind.
    pub fn core_shift(self) -> u32 {
        match self {
            BasisKind::XEven | BasisKind::YOdd => 0,
            BasisKind::XOdd | BasisKind::YEven => 1,
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisKind::XEven => "x_even",
            BasisKind::YEven => "y_even",
            BasisKind::XOdd => "x_odd",
            BasisKind::YOdd => "y_odd",
        })
    }
}

impl std::str::FromStr for BasisKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|k| k.to_string() == s).ok_or_else(|| format!("unknown basis kind `{s}`"))
    }
}

fn mul_linear(p: &[LaurentPoly], root: &LaurentPoly) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k + 1] += c;
        out[k] -= &(c * root);
    }
    out
}

/// Coefficients (ascending in `z`) of `Q_n = (z - phi_0) ... (z - phi_{n-1})`.
pub fn q_poly(n: u32) -> Vec<LaurentPoly> {
    (0..n).fold(vec![LaurentPoly::one()], |p, i| mul_linear(&p, &phi(i)))
}

/// `S_n = (z^2 - phi_0^2) ... (z^2 - phi_{n-1}^2)` as a polynomial in `z^2`.
pub fn s_poly(n: u32) -> PolyInZ2 {
    (0..n).fold(vec![LaurentPoly::one()], |p, i| mul_linear(&p, &phi(i).pow(2)))
}

/// The element `kind_n` of the relative basis, expanded over crossingless
/// diagrams.
pub fn basis_element(kind: BasisKind, n: u32) -> SkeinVector {
    s_poly(n)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (BasisElement::new(kind.arc(), 2 * k as u32 + kind.core_shift()), c))
        .collect()
}

/// Row `n` holds the coefficients of `S_n` over `1, z^2, ..., z^(2N-2)`.
pub fn change_of_basis_matrix(size: usize) -> Vec<Vec<LaurentPoly>> {
    (0..size)
        .map(|n| {
            let mut row = s_poly(n as u32);
            row.resize(size, LaurentPoly::zero());
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parity_split;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn mul(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        out
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(q_poly(0), vec![LaurentPoly::one()]);
        assert_eq!(q_poly(1), vec![p("A^-2 + A^2"), LaurentPoly::one()]);
        let q2 = q_poly(2);
        assert_eq!(q2[1], -(&phi(0) + &phi(1)));
        assert_eq!(q2[0], &phi(0) * &phi(1));
        assert_eq!(s_poly(0), vec![LaurentPoly::one()]);
        assert_eq!(s_poly(1), vec![p("-A^-4 - 2 - A^4"), LaurentPoly::one()]);
        assert!(s_poly(2)[2].is_one());
    }

    #[test]
    fn s_factors_through_q() {
        for n in 0..=5 {
            let plus = (0..n).fold(vec![LaurentPoly::one()], |acc, i| mul_linear(&acc, &-phi(i)));
            let prod = mul(&q_poly(n), &plus);
            let s = s_poly(n);
            for (k, c) in prod.iter().enumerate() {
                if k % 2 == 1 {
                    assert!(c.is_zero());
                } else {
                    assert_eq!(c, &s[k / 2]);
                }
            }
        }
    }

    #[test]
    fn basis_examples() {
        let one = LaurentPoly::one();
        let short = |c| BasisElement::new(ArcType::Short, c);
        assert_eq!(basis_element(BasisKind::XEven, 0), SkeinVector::single(short(0), one.clone()));
        assert_eq!(basis_element(BasisKind::XOdd, 0), SkeinVector::single(short(1), one.clone()));
        let expect: SkeinVector = [(short(2), one), (short(0), p("-A^4 - 2 - A^-4"))].into_iter().collect();
        assert_eq!(basis_element(BasisKind::XEven, 1), expect);
    }

    #[test]
    fn kinds_have_their_parity() {
        for kind in BasisKind::ALL {
            for n in 0..5 {
                let (even, odd) = parity_split(&basis_element(kind, n));
                assert_eq!(even.is_zero(), kind.is_odd());
                assert_eq!(odd.is_zero(), !kind.is_odd());
            }
            assert_eq!(kind.to_string().parse::<BasisKind>().unwrap(), kind);
        }
    }

    #[test]
    fn change_of_basis_is_unitriangular() {
        assert_eq!(change_of_basis_matrix(1), vec![vec![LaurentPoly::one()]]);
        assert_eq!(
            change_of_basis_matrix(2),
            vec![vec![LaurentPoly::one(), LaurentPoly::zero()], vec![p("-A^4 - 2 - A^-4"), LaurentPoly::one()]]
        );
        for size in 1..=8 {
            let m = change_of_basis_matrix(size);
            for (r, row) in m.iter().enumerate() {
                assert!(row[r].is_one());
                assert!(row[r + 1..].iter().all(LaurentPoly::is_zero));
            }
        }
    }

    #[test]
    fn graph_indices() {
        assert_eq!(GraphIndex::new(2, 2), None);
        let all = GraphIndex::all_up_to(2);
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(GraphIndex::is_admissible));
        assert_eq!(all[0].to_string(), "(0,1)");
    }

    proptest! {
        #[test]
        fn s_poly_at_root_vanishes(n in 1u32..5, i in 0u32..5) {
            // S_n(phi_i) = 0 exactly when i < n.
            let z2 = phi(i).pow(2);
            let value = s_poly(n).iter().rev().fold(LaurentPoly::zero(), |acc, c| &(&acc * &z2) + c);
            prop_assert_eq!(value.is_zero(), i < n);
        }
    }
}
