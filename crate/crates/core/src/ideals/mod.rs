//! Ideals of `Z[A, A^-1]`, bracket ideals of tangles, and the
//! specialization `A -> w = exp(i pi / 4)`.

mod groebner;
mod lattice;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bases::{basis_element, BasisKind};
use crate::diagram::{kauffman_bracket, reduce_tangle, LinkDiagram, TangleDiagram};
use crate::error::IdealError;
use crate::laurent::{reduce_by_delta, LaurentPoly};
use crate::pairing::{hopf_pair, solve_graph_coefficients, DEFAULT_MAX_I};

pub use groebner::{groebner_basis, reduce, Monomial, Poly2};
pub use lattice::{hermite_normal_form, lattice_contains};

fn to_poly2(p: &LaurentPoly) -> Poly2 {
    let low = p.min_exp().unwrap_or(0);
    Poly2::from_terms(p.terms().map(|(e, c)| (Monomial::new((e - low) as u32, 0), c.clone())))
}

fn to_laurent(p: &Poly2) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(m, c)| (c.clone(), m.x as i64 - m.y as i64)))
}

/// Multiplies by `+-A^k` so that the lowest term is a positive constant.
fn normalize(p: &LaurentPoly) -> LaurentPoly {
    let Some(low) = p.min_exp() else {
        return LaurentPoly::zero();
    };
    let q = p.shift(-low);
    if q.low_coeff().is_some_and(Signed::is_negative) {
        -q
    } else {
        q
    }
}

/// Scales `g` by a unit modulo `n` so that its leading coefficient becomes 1
/// when possible, then reduces coefficients into `(-n/2, n/2]`. Valid as a
/// generator replacement whenever `n` lies in the ideal.
fn reduce_mod(g: &LaurentPoly, n: &BigInt) -> LaurentPoly {
    let lead = g.high_coeff().cloned().unwrap_or_default();
    let e = lead.extended_gcd(n);
    let scale = if e.gcd.is_one() { e.x } else { BigInt::one() };
    let half = n / 2;
    let terms = g.terms().map(|(k, c)| {
        let mut r = (c * &scale).mod_floor(n);
        if r > half {
            r -= n;
        }
        (r, k)
    });
    let q = LaurentPoly::from_terms(terms);
    q.shift(-q.min_exp().unwrap_or(0))
}

/// An ideal of `Z[A, A^-1]`, presented in `Z[x, y] / (xy - 1)` with `x = A`.
#[derive(Debug, Clone)]
pub struct LaurentIdeal {
    gens: Vec<LaurentPoly>,
    basis: Vec<Poly2>,
}

impl LaurentIdeal {
    pub fn new<I: IntoIterator<Item = LaurentPoly>>(gens: I) -> Self {
        let mut gens: Vec<LaurentPoly> = gens.into_iter().filter(|g| !g.is_zero()).map(|g| normalize(&g)).collect();
        gens.sort_by_key(|g| (g.max_exp(), g.to_string()));
        gens.dedup();
        let relation = Poly2::from_terms([(Monomial::new(1, 1), BigInt::one()), (Monomial::new(0, 0), -BigInt::one())]);
        let mut input = vec![relation];
        input.extend(gens.iter().map(to_poly2));
        let basis = groebner_basis(&input);
        Self { gens, basis }
    }

    pub fn unit() -> Self {
        Self::new([LaurentPoly::one()])
    }

    /// The normalized generators as given.
    pub fn generators(&self) -> &[LaurentPoly] {
        &self.gens
    }

    /// The reduced strong Gröbner basis in `Z[x, y]`, including the relation.
    pub fn groebner(&self) -> &[Poly2] {
        &self.basis
    }

    pub fn contains(&self, f: &LaurentPoly) -> bool {
        f.is_zero() || reduce(&to_poly2(f), &self.basis).is_zero()
    }

    pub fn is_trivial(&self) -> bool {
        self.contains(&LaurentPoly::one())
    }

    pub fn contains_ideal(&self, other: &LaurentIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &LaurentIdeal) -> Self {
        Self::new(self.gens.iter().chain(&other.gens).cloned())
    }

    /// A canonical generating set: the Gröbner basis read back in the
    /// Laurent ring, normalized, sorted, with redundant elements dropped.
    pub fn canonical_generators(&self) -> Vec<LaurentPoly> {
        let mut cands: Vec<LaurentPoly> = self
            .basis
            .iter()
            .map(|g| normalize(&to_laurent(g)))
            .filter(|g| !g.is_zero())
            .collect();
        cands.sort_by_key(|g| (g.max_exp(), g.to_string()));
        cands.dedup();
        if cands.iter().any(LaurentPoly::is_one) {
            return vec![LaurentPoly::one()];
        }
        if let Some(n) = cands.first().filter(|g| g.max_exp() == Some(0)).map(|g| g.coeff(0)) {
            for g in cands.iter_mut().skip(1) {
                *g = reduce_mod(g, &n);
            }
        }
        let mut k = cands.len();
        while k > 0 {
            k -= 1;
            let others: Vec<LaurentPoly> =
                cands.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
            if !others.is_empty() && LaurentIdeal::new(others.clone()).contains(&cands[k]) {
                cands = others;
            }
        }
        cands
    }
}

impl PartialEq for LaurentIdeal {
    fn eq(&self, other: &Self) -> bool {
        ideal_equal(self, other)
    }
}

impl fmt::Display for LaurentIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.canonical_generators().iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

pub fn membership(f: &LaurentPoly, ideal: &LaurentIdeal) -> bool {
    ideal.contains(f)
}

pub fn is_trivial(ideal: &LaurentIdeal) -> bool {
    ideal.is_trivial()
}

pub fn ideal_equal(a: &LaurentIdeal, b: &LaurentIdeal) -> bool {
    a.contains_ideal(b) && b.contains_ideal(a)
}

/// Generators `<t, kind_n> / delta` of a bracket ideal, for `n` up to the
/// largest colour in the graph basis support of `t`.
pub fn bracket_ideal_generators(t: &TangleDiagram, kinds: &[BasisKind]) -> Result<Vec<LaurentPoly>, IdealError> {
    let coeffs = solve_graph_coefficients(t, DEFAULT_MAX_I)?;
    let bound = coeffs.support().iter().map(|g| g.i).max().unwrap_or(0);
    let reduced = reduce_tangle(t)?;
    let mut out = Vec::new();
    for &kind in kinds {
        for n in 0..=bound {
            out.push(reduce_by_delta(&hopf_pair(&reduced, &basis_element(kind, n))?)?);
        }
    }
    Ok(out)
}

pub fn even_ideal(t: &TangleDiagram) -> Result<LaurentIdeal, IdealError> {
    Ok(LaurentIdeal::new(bracket_ideal_generators(t, &[BasisKind::XEven, BasisKind::YEven])?))
}

pub fn odd_ideal(t: &TangleDiagram) -> Result<LaurentIdeal, IdealError> {
    Ok(LaurentIdeal::new(bracket_ideal_generators(t, &[BasisKind::XOdd, BasisKind::YOdd])?))
}

/// The bracket ideal of all closures, the sum of the even and odd ideals.
pub fn full_ideal(t: &TangleDiagram) -> Result<LaurentIdeal, IdealError> {
    Ok(LaurentIdeal::new(bracket_ideal_generators(t, &BasisKind::ALL)?))
}

/// An element `a0 + a1 w + a2 w^2 + a3 w^3` of `Z[w]`, `w^4 = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CyclotomicInt {
    pub coords: [BigInt; 4],
}

impl CyclotomicInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn integer<T: Into<BigInt>>(n: T) -> Self {
        let mut c = Self::zero();
        c.coords[0] = n.into();
        c
    }

    /// `w^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        let r = k.rem_euclid(8) as usize;
        let mut c = Self::zero();
        c.coords[r % 4] = if r < 4 { BigInt::one() } else { -BigInt::one() };
        c
    }

    /// Complex conjugation, `w -> w^-1 = -w^3`.
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.coords;
        Self { coords: [a.clone(), -d, -c, -b] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coords[1..].iter().all(Zero::is_zero).then_some(&self.coords[0])
    }

    fn times_omega(&self) -> Self {
        let [a, b, c, d] = &self.coords;
        Self { coords: [-d, a.clone(), b.clone(), c.clone()] }
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        CyclotomicInt { coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]) }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        CyclotomicInt { coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]) }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn neg(self) -> CyclotomicInt {
        CyclotomicInt { coords: std::array::from_fn(|i| -&self.coords[i]) }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for i in 0..4 {
            for j in 0..4 {
                let p = &self.coords[i] * &rhs.coords[j];
                if i + j < 4 {
                    out[i + j] += p;
                } else {
                    out[i + j - 4] -= p;
                }
            }
        }
        CyclotomicInt { coords: out }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coords.iter().enumerate().map(|(k, c)| (c.clone(), k as i64));
        let p = LaurentPoly::from_terms(terms);
        write!(f, "{}", p.to_string().replace('A', "w"))
    }
}

/// The ring map `A -> w`.
pub fn omega(p: &LaurentPoly) -> CyclotomicInt {
    let mut out = CyclotomicInt::zero();
    for (e, c) in p.terms() {
        let r = e.rem_euclid(8) as usize;
        if r < 4 {
            out.coords[r] += c;
        } else {
            out.coords[r - 4] -= c;
        }
    }
    out
}

/// The nonnegative generator `d` of `Omega(I) ∩ Z`.
pub fn omega_contract(ideal: &LaurentIdeal) -> BigInt {
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let mut v = omega(g);
        for _ in 0..4 {
            // Coordinates ordered w^3, w^2, w, 1 so the integer axis is last.
            rows.push(v.coords.iter().rev().cloned().collect::<Vec<_>>());
            v = v.times_omega();
        }
    }
    let hnf = hermite_normal_form(&rows);
    match hnf.last() {
        Some(row) if row[..3].iter().all(Zero::is_zero) => row[3].clone(),
        _ => BigInt::zero(),
    }
}

/// The link determinant, `|Omega(<L> / delta)|`.
pub fn link_determinant(d: &LinkDiagram) -> Result<BigInt, IdealError> {
    let v = omega(&reduce_by_delta(&kauffman_bracket(d)?)?);
    let norm = &v * &v.conj();
    let n2 = norm.as_integer().ok_or_else(|| IdealError::NotUnitMultipleOfInteger(v.to_string()))?;
    let n = num_integer::Roots::sqrt(n2);
    let is_unit_multiple = (0..8).any(|k| &CyclotomicInt::omega_pow(k) * &v == CyclotomicInt::integer(n.clone()));
    if &n * &n != *n2 || !is_unit_multiple {
        return Err(IdealError::NotUnitMultipleOfInteger(v.to_string()));
    }
    Ok(n)
}

/// Convenience for small determinants.
pub fn link_determinant_u64(d: &LinkDiagram) -> Result<u64, IdealError> {
    let n = link_determinant(d)?;
    n.to_u64().ok_or_else(|| IdealError::NotUnitMultipleOfInteger(n.to_string()))
}

#[cfg(test)]
mod tests;
