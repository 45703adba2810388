//! Strong Gröbner bases over the integers in `Z[x, y]`, degree-lexicographic
//! order with `x > y`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A monomial `x^a y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Self) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    fn div(self, other: Self) -> Self {
        Self { x: self.x - other.x, y: self.y - other.y }
    }

    fn mul(self, other: Self) -> Self {
        Self { x: self.x + other.x, y: self.y + other.y }
    }

    fn lcm(self, other: Self) -> Self {
        Self { x: self.x.max(other.x), y: self.y.max(other.y) }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `Z[x, y]`; the leading term is the largest key.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_terms([(Monomial::new(0, 0), c)])
    }

    fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    fn lm(&self) -> Monomial {
        self.leading().expect("nonzero polynomial").0
    }

    fn lc(&self) -> &BigInt {
        self.leading().expect("nonzero polynomial").1
    }

    /// `self - c * m * g`.
    fn sub_scaled(&mut self, c: &BigInt, m: Monomial, g: &Poly2) {
        for (gm, gc) in &g.terms {
            self.add_term(gm.mul(m), &-(c * gc));
        }
    }

    fn scaled(&self, c: &BigInt, m: Monomial) -> Poly2 {
        let mut out = Poly2::zero();
        out.sub_scaled(&-c, m, self);
        out
    }

    fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    fn neg(&self) -> Poly2 {
        Poly2 { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    fn with_positive_lead(self) -> Poly2 {
        if self.leading().is_some_and(|(_, c)| c.is_negative()) {
            self.neg()
        } else {
            self
        }
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mono: Vec<String> = [("x", m.x), ("y", m.y)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Fully reduces `f` by `basis`, reducing coefficients to the range
/// `0..|lc(g)|` whenever a leading monomial divides.
pub fn reduce(f: &Poly2, basis: &[Poly2]) -> Poly2 {
    let mut f = f.clone();
    let mut rem = Poly2::zero();
    while let Some((m, c)) = f.leading() {
        let c = c.clone();
        let mut step = None;
        for g in basis {
            let (gm, gc) = g.leading().expect("basis elements are nonzero");
            if gm.divides(m) {
                let q = c.div_floor(gc);
                if !q.is_zero() {
                    step = Some((q, m.div(gm), g));
                    break;
                }
            }
        }
        match step {
            Some((q, shift, g)) => f.sub_scaled(&q, shift, g),
            None => {
                f.terms.remove(&m);
                rem.add_term(m, &c);
            }
        }
    }
    rem
}

fn lead_divides(g: &Poly2, h: &Poly2) -> bool {
    g.lm().divides(h.lm()) && h.lc().is_multiple_of(g.lc())
}

fn spoly(f: &Poly2, g: &Poly2) -> Poly2 {
    let m = f.lm().lcm(g.lm());
    let c = f.lc().lcm(g.lc());
    f.scaled(&(&c / f.lc()), m.div(f.lm())).add(&g.scaled(&(&c / g.lc()), m.div(g.lm())).neg())
}

fn gpoly(f: &Poly2, g: &Poly2) -> Poly2 {
    let m = f.lm().lcm(g.lm());
    let e = f.lc().extended_gcd(g.lc());
    f.scaled(&e.x, m.div(f.lm())).add(&g.scaled(&e.y, m.div(g.lm())))
}

/// Computes the reduced strong Gröbner basis of the ideal generated by
/// `gens`, sorted by leading monomial.
pub fn groebner_basis(gens: &[Poly2]) -> Vec<Poly2> {
    let mut basis: Vec<Poly2> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let push = |h: Poly2, basis: &mut Vec<Poly2>, pairs: &mut Vec<(usize, usize)>| {
        let h = reduce(&h, basis);
        if !h.is_zero() {
            let k = basis.len();
            pairs.extend((0..k).map(|i| (i, k)));
            basis.push(h.with_positive_lead());
        }
    };
    for g in gens {
        push(g.clone(), &mut basis, &mut pairs);
    }
    while let Some((i, j)) = pairs.pop() {
        let (f, g) = (basis[i].clone(), basis[j].clone());
        let coprime_monomials = f.lm().lcm(g.lm()) == f.lm().mul(g.lm());
        let units = f.lc().is_one() && g.lc().is_one();
        if !(coprime_monomials && units) {
            push(spoly(&f, &g), &mut basis, &mut pairs);
        }
        if !f.lc().is_multiple_of(g.lc()) && !g.lc().is_multiple_of(f.lc()) {
            push(gpoly(&f, &g), &mut basis, &mut pairs);
        }
    }
    // Keep only elements whose leading term is not divisible by another's.
    let mut minimal: Vec<Poly2> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && lead_divides(h, g) && (!lead_divides(g, h) || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let (lm, lc) = {
            let (m, c) = minimal[k].leading().unwrap();
            (m, c.clone())
        };
        let others: Vec<Poly2> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, g)| g.clone()).collect();
        let mut tail = minimal[k].clone();
        tail.terms.remove(&lm);
        let mut reduced = reduce(&tail, &others);
        reduced.add_term(lm, &lc);
        out.push(reduced);
    }
    out.sort_by_key(|g| g.lm());
    out
}
