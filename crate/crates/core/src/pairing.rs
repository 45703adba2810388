//! The relative Hopf pairing, its closed form on the graph basis, and
//! recovery of graph basis coefficients of a tangle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::bases::{basis_element, BasisKind, GraphIndex};
use crate::catalog::CatalogName;
use crate::diagram::{basis_tangle, close, kauffman_bracket, reduce_tangle, BasisElement, ClosureSpec, SkeinVector, TangleDiagram};
use crate::error::PairingError;
use crate::laurent::{phi, LaurentPoly, RationalFunction};
use crate::recoupling::{is_admissible, quantum_delta, tet, theta, twist_lambda, Color};

/// Default largest graph index colour used when solving for coefficients.
pub const DEFAULT_MAX_I: u32 = 4;

fn pair_crossingless(u: BasisElement, v: BasisElement) -> Result<LaurentPoly, PairingError> {
    static CACHE: OnceLock<Mutex<HashMap<(BasisElement, BasisElement), LaurentPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&(u, v)) {
        return Ok(p.clone());
    }
    let link = close(&basis_tangle(u), &ClosureSpec::basis(v.arc, v.cores))?;
    let value = kauffman_bracket(&link)?;
    cache.lock().unwrap().insert((u, v), value.clone());
    Ok(value)
}

/// The relative Hopf pairing: the bracket of the link obtained by gluing the
/// two solid tori, extended bilinearly.
pub fn hopf_pair(a: &SkeinVector, b: &SkeinVector) -> Result<LaurentPoly, PairingError> {
    let mut total = LaurentPoly::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            total += &(&(cu * cv) * &pair_crossingless(*u, *v)?);
        }
    }
    Ok(total)
}

/// `prod_{k<n} (phi_i^2 - phi_k^2)`, which vanishes once `n > i`.
pub fn lemma_coefficient(i: u32, n: u32) -> LaurentPoly {
    let pi = phi(i).pow(2);
    (0..n).map(|k| &pi - &phi(k).pow(2)).product()
}

fn lambda_inverse_squared(g: GraphIndex) -> Result<LaurentPoly, PairingError> {
    let l = twist_lambda(g.i, 1, g.eps)?;
    Ok(l.unit_inverse().expect("twist eigenvalues are monomials").pow(2))
}

/// Closed form of the Hopf pairing of `g` with the relative basis element
/// `kind_n`.
pub fn pair_graph_with_basis(g: GraphIndex, kind: BasisKind, n: u32) -> Result<RationalFunction, PairingError> {
    let base = theta(1, g.i, g.eps)?.scale(&lemma_coefficient(g.i, n));
    let factor = match kind {
        BasisKind::XEven => LaurentPoly::one(),
        BasisKind::YEven => &phi(g.i) * &lambda_inverse_squared(g)?,
        BasisKind::XOdd => phi(g.i),
        BasisKind::YOdd => lambda_inverse_squared(g)?,
    };
    Ok(base.scale(&factor))
}

/// Coefficients of a tangle over the graph basis.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GraphCoeffs {
    coeffs: BTreeMap<GraphIndex, RationalFunction>,
}

impl GraphCoeffs {
    pub fn get(&self, g: GraphIndex) -> RationalFunction {
        self.coeffs.get(&g).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn insert(&mut self, g: GraphIndex, c: RationalFunction) {
        if c.is_zero() {
            self.coeffs.remove(&g);
        } else {
            self.coeffs.insert(g, c);
        }
    }

    /// Nonzero coefficients in index order.
    pub fn iter(&self) -> impl Iterator<Item = (&GraphIndex, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<GraphIndex> {
        self.coeffs.keys().copied().collect()
    }

    /// The pairing of the tangle with `kind_n` predicted by the closed forms.
    pub fn pair_with_basis(&self, kind: BasisKind, n: u32) -> Result<RationalFunction, PairingError> {
        let mut total = RationalFunction::zero();
        for (g, c) in &self.coeffs {
            total = &total + &(c * &pair_graph_with_basis(*g, kind, n)?);
        }
        Ok(total)
    }
}

impl FromIterator<(GraphIndex, RationalFunction)> for GraphCoeffs {
    fn from_iter<T: IntoIterator<Item = (GraphIndex, RationalFunction)>>(iter: T) -> Self {
        let mut out = Self::default();
        for (g, c) in iter {
            out.insert(g, c);
        }
        out
    }
}

impl fmt::Display for GraphCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, c) in &self.coeffs {
            match c.to_laurent() {
                Some(p) => writeln!(f, "c{g} = {p}")?,
                None => writeln!(f, "c{g} = {c}")?,
            }
        }
        Ok(())
    }
}

/// Hopf pairings of `v` with `kind_n` for every kind and `n <= max_n`,
/// computed in parallel.
pub fn basis_pairings(v: &SkeinVector, max_n: u32) -> Result<BTreeMap<(BasisKind, u32), LaurentPoly>, PairingError> {
    let jobs: Vec<(BasisKind, u32)> =
        BasisKind::ALL.into_iter().flat_map(|k| (0..=max_n).map(move |n| (k, n))).collect();
    jobs.into_par_iter()
        .map(|(k, n)| Ok(((k, n), hopf_pair(v, &basis_element(k, n))?)))
        .collect()
}

/// Solves for the graph basis coefficients of `t` from its pairings with the
/// relative bases. Rows with `n > max_i` must vanish, otherwise the support
/// is larger than `max_i`.
pub fn solve_graph_coefficients(t: &TangleDiagram, max_i: u32) -> Result<GraphCoeffs, PairingError> {
    let reduced = reduce_tangle(t)?;
    let pairings = basis_pairings(&reduced, max_i + 1)?;
    let unknowns = GraphIndex::all_up_to(max_i);
    for ((kind, n), value) in &pairings {
        if *n > max_i && !value.is_zero() {
            return Err(PairingError::UnderDetermined(format!(
                "pairing with {kind}_{n} is nonzero; raise the colour bound above {max_i}"
            )));
        }
    }
    let mut rows = Vec::new();
    for ((kind, n), value) in pairings.iter().filter(|((_, n), _)| *n <= max_i) {
        let mut row = Vec::with_capacity(unknowns.len() + 1);
        for g in &unknowns {
            row.push(pair_graph_with_basis(*g, *kind, *n)?);
        }
        row.push(RationalFunction::from(value.clone()));
        rows.push(row);
    }
    let solution = solve_exact(rows, unknowns.len())?;
    if let Some(bad) = solution.iter().find(|c| !in_coefficient_ring(c)) {
        return Err(PairingError::NotInCoefficientRing(bad.to_string()));
    }
    Ok(unknowns.into_iter().zip(solution).collect())
}

/// Largest `k` tried when clearing denominators by `A^k - 1`.
const MAX_CYCLOTOMIC_ORDER: i64 = 64;

/// Whether `f` lies in `Z[A, A^-1]` with every `A^k - 1` inverted, the ring
/// over which graph basis coefficients live.
pub fn in_coefficient_ring(f: &RationalFunction) -> bool {
    let mut d = f.denominator().clone();
    for k in 1..=MAX_CYCLOTOMIC_ORDER {
        let c = LaurentPoly::from_terms([(1, k), (-1, 0)]);
        loop {
            let g = d.gcd(&c);
            if g.is_unit() {
                break;
            }
            d = d.div_exact(&g).expect("gcd divides");
        }
    }
    d.is_unit()
}

/// Gaussian elimination over the fraction field. The last column of each row
/// is the right hand side.
fn solve_exact(mut rows: Vec<Vec<RationalFunction>>, n: usize) -> Result<Vec<RationalFunction>, PairingError> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            return Err(PairingError::UnderDetermined(format!("no equation determines unknown {col}")));
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv()?;
        let pivot: Vec<RationalFunction> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        rows[r] = pivot;
        pivots.push(r);
        r += 1;
    }
    if let Some(bad) = rows[r..].iter().find(|row| !row[n].is_zero()) {
        return Err(PairingError::InconsistentSystem(format!("nonzero residual {}", bad[n])));
    }
    Ok(pivots.into_iter().map(|i| rows[i][n].clone()).collect())
}

fn lam(c: Color) -> LaurentPoly {
    twist_lambda(1, 1, c).expect("(1,1,c) checked admissible")
}

fn lam_pow(c: Color, k: i32) -> LaurentPoly {
    let l = lam(c);
    let l = if k < 0 { l.unit_inverse().expect("monomial") } else { l };
    l.pow(k.unsigned_abs())
}

/// Evaluates the recoupling sum for the doubling pairing of a catalog tangle
/// with `g`, as a sum over admissible internal colours.
pub fn worked_sum(name: CatalogName, g: GraphIndex) -> Result<RationalFunction, PairingError> {
    let (i, e) = (g.i, g.eps);
    let colours = [0, 2];
    let adm = |a, b, c| is_admissible(a, b, c);
    let mut total = RationalFunction::zero();
    if !adm(1, 1, i) {
        return Ok(total);
    }
    let mut add = |num: LaurentPoly, tets: Vec<RationalFunction>, thetas: Vec<RationalFunction>| -> Result<(), PairingError> {
        let mut term = RationalFunction::from(num);
        for t in &tets {
            term = &term * t;
        }
        for t in &thetas {
            term = term.div(t)?;
        }
        total = &total + &term;
        Ok(())
    };
    match name {
        CatalogName::KrebesA => {
            for j in colours {
                for k in colours {
                    for l in colours {
                        if !(adm(1, j, e) && adm(e, k, 1) && adm(l, k, j)) {
                            continue;
                        }
                        let num = lam_pow(i, 1) * lam_pow(j, -1) * lam_pow(k, -1) * lam_pow(l, -1)
                            * quantum_delta(j)
                            * quantum_delta(k)
                            * quantum_delta(l);
                        add(
                            num,
                            vec![tet(1, i, e, 1, j, 1)?, tet(l, 1, j, 1, k, 1)?, tet(1, e, 1, k, l, j)?],
                            vec![
                                theta(1, 1, i)?,
                                theta(1, 1, j)?,
                                theta(1, 1, k)?,
                                theta(1, 1, l)?,
                                theta(1, j, e)?,
                                theta(e, k, 1)?,
                                theta(l, k, j)?,
                            ],
                        )?;
                    }
                }
            }
        }
        CatalogName::TangleD => {
            for j in colours {
                if !adm(1, e, j) {
                    continue;
                }
                let num = lam_pow(i, 1) * lam_pow(j, -3) * quantum_delta(j);
                add(
                    num,
                    vec![tet(1, 1, j, 1, e, i)?, tet(1, i, e, 1, j, 1)?],
                    vec![theta(1, 1, i)?, theta(1, 1, j)?, theta(1, e, j)?],
                )?;
            }
        }
        CatalogName::TangleH => {
            for j in colours {
                for k in colours {
                    for l in colours {
                        if !(adm(1, j, e) && adm(1, k, e) && adm(1, l, e)) {
                            continue;
                        }
                        let num = lam_pow(i, 1) * lam_pow(j, -3) * lam_pow(k, -3) * lam_pow(l, 1)
                            * quantum_delta(j)
                            * quantum_delta(k)
                            * quantum_delta(l);
                        add(
                            num,
                            vec![
                                tet(1, i, e, 1, j, 1)?,
                                tet(e, i, 1, 1, k, 1)?,
                                tet(1, 1, l, 1, e, j)?,
                                tet(1, k, e, 1, l, 1)?,
                            ],
                            vec![
                                theta(1, 1, i)?,
                                theta(1, 1, j)?,
                                theta(1, 1, k)?,
                                theta(1, 1, l)?,
                                theta(1, j, e)?,
                                theta(1, k, e)?,
                                theta(1, l, e)?,
                            ],
                        )?;
                    }
                }
            }
        }
        CatalogName::Fig6Complement => {
            return Err(PairingError::UnderDetermined("no recoupling sum is recorded for this entry".into()))
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entry;
    use crate::diagram::ArcType;
    use crate::laurent::delta;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn single(arc: ArcType, cores: u32) -> SkeinVector {
        SkeinVector::single(BasisElement::new(arc, cores), LaurentPoly::one())
    }

    fn g(i: u32, eps: u32) -> GraphIndex {
        GraphIndex::new(i, eps).unwrap()
    }

    #[test]
    fn crossingless_pairings() {
        let d = delta();
        let s0 = single(ArcType::Short, 0);
        let s1 = single(ArcType::Short, 1);
        assert_eq!(hopf_pair(&s0, &s0).unwrap(), d);
        assert_eq!(hopf_pair(&s1, &s0).unwrap(), &d * &d);
        assert_eq!(hopf_pair(&s1, &s1).unwrap(), &(&d * &d) * &p("-A^4 - A^-4"));
        let l0 = single(ArcType::Long, 0);
        assert_eq!(hopf_pair(&l0, &s0).unwrap(), d);
        // Two long arcs glue to an unknot with two negative kinks.
        assert_eq!(hopf_pair(&l0, &l0).unwrap(), d.shift(-6));
    }

    #[test]
    fn pairing_is_symmetric() {
        let mut elems = Vec::new();
        for cores in 0..3 {
            elems.push(single(ArcType::Short, cores));
            elems.push(single(ArcType::Long, cores));
        }
        for a in &elems {
            for b in &elems {
                assert_eq!(hopf_pair(a, b).unwrap(), hopf_pair(b, a).unwrap());
            }
        }
    }

    #[test]
    fn lemma_values() {
        assert!(lemma_coefficient(2, 0).is_one());
        assert_eq!(lemma_coefficient(2, 1), p("A^12 - A^4 - A^-4 + A^-12"));
        assert!(lemma_coefficient(1, 2).is_zero());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(pair_graph_with_basis(g(0, 1), BasisKind::XEven, 0).unwrap(), RationalFunction::from(delta()));
        assert!(pair_graph_with_basis(g(2, 1), BasisKind::XEven, 3).unwrap().is_zero());
        assert_eq!(
            pair_graph_with_basis(g(2, 3), BasisKind::XOdd, 0).unwrap(),
            theta(1, 2, 3).unwrap().scale(&phi(2))
        );
    }

    #[test]
    fn closed_forms_vanish_beyond_colour() {
        for gi in GraphIndex::all_up_to(4) {
            for kind in BasisKind::ALL {
                for n in 0..=6 {
                    let v = pair_graph_with_basis(gi, kind, n).unwrap();
                    assert_eq!(v.is_zero(), n > gi.i, "{gi} {kind} {n}");
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_diagrams_on_crossingless_tangles() {
        // The short arc without cores is g(0,1) itself.
        let t = basis_tangle(BasisElement::new(ArcType::Short, 0));
        let c = solve_graph_coefficients(&t, 2).unwrap();
        let expected: GraphCoeffs = [(g(0, 1), RationalFunction::from(LaurentPoly::one()))].into_iter().collect();
        assert_eq!(c, expected);
    }

    #[test]
    fn solve_reports_small_bound() {
        let t = entry(CatalogName::TangleD).tangle().unwrap().clone();
        assert!(matches!(solve_graph_coefficients(&t, 1), Err(PairingError::UnderDetermined(_))));
        let c = solve_graph_coefficients(&t, 3).unwrap();
        assert_eq!(c.support(), vec![g(0, 1), g(2, 1), g(2, 3)]);
        for kind in BasisKind::ALL {
            for n in 0..=3 {
                let direct = hopf_pair(&reduce_tangle(&t).unwrap(), &basis_element(kind, n)).unwrap();
                assert_eq!(c.pair_with_basis(kind, n).unwrap(), RationalFunction::from(direct));
            }
        }
    }

    #[test]
    fn exact_solver() {
        let r = |s: &str| RationalFunction::from(p(s));
        // A x + y = 1 + A, x - y = 0, 2x - 2y = 0.
        let rows = vec![
            vec![r("A"), r("1"), r("1 + A")],
            vec![r("1"), r("-1"), r("0")],
            vec![r("2"), r("-2"), r("0")],
        ];
        assert_eq!(solve_exact(rows.clone(), 2).unwrap(), vec![r("1"), r("1")]);
        let mut bad = rows;
        bad[2][2] = r("1");
        assert!(matches!(solve_exact(bad, 2), Err(PairingError::InconsistentSystem(_))));
        assert!(matches!(solve_exact(vec![vec![r("0"), r("1")]], 1), Err(PairingError::UnderDetermined(_))));
    }

    #[test]
    fn coefficient_ring() {
        let r = |n: &str, d: &str| RationalFunction::new(p(n), p(d)).unwrap();
        assert!(in_coefficient_ring(&r("1", "1 + A^4")));
        assert!(in_coefficient_ring(&r("A", "A^6 + A^10 + A^14")));
        assert!(!in_coefficient_ring(&r("1", "2")));
        assert!(!in_coefficient_ring(&r("1", "1 + A + A^3")));
    }

    #[test]
    fn worked_sums_vanish_off_support() {
        assert!(worked_sum(CatalogName::KrebesA, g(1, 0)).unwrap().is_zero());
        assert!(worked_sum(CatalogName::TangleD, g(4, 3)).unwrap().is_zero());
        assert!(worked_sum(CatalogName::TangleH, g(3, 2)).unwrap().is_zero());
    }
}
