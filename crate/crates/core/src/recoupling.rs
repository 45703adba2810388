//! Recoupling coefficients (loop values, theta and tetrahedral networks, twist
//! eigenvalues) together with an independent Temperley-Lieb evaluator that
//! expands colored networks through Jones-Wenzl projectors.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::RecouplingError;
use crate::laurent::{delta, LaurentPoly, RationalFunction};

/// A strand color: the number of parallel strands an edge stands for.
pub type Color = u32;

/// Default bound on the number of strands crossing any vertical cut of a
/// network evaluated by [`tl_evaluate`].
pub const DEFAULT_STRAND_BOUND: usize = 8;

pub fn is_admissible(a: Color, b: Color, c: Color) -> bool {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    (a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0
}

/// A validated admissible triple, with its three internal strand counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdmissibleTriple {
    pub a: Color,
    pub b: Color,
    pub c: Color,
}

impl AdmissibleTriple {
    pub fn new(a: Color, b: Color, c: Color) -> Result<Self, RecouplingError> {
        if is_admissible(a, b, c) {
            Ok(Self { a, b, c })
        } else {
            Err(RecouplingError::Inadmissible(vec![a, b, c]))
        }
    }

    /// Strands joining `a` to `b`, `b` to `c`, and `a` to `c` respectively.
    pub fn internal(&self) -> (u32, u32, u32) {
        let (a, b, c) = (self.a, self.b, self.c);
        ((a + b - c) / 2, (b + c - a) / 2, (a + c - b) / 2)
    }
}

/// The quantum integer `[n] = (A^2n - A^-2n) / (A^2 - A^-2)`.
pub fn quantum_int(n: u32) -> LaurentPoly {
    let n = n as i64;
    LaurentPoly::from_terms((0..n).map(|k| (1, 2 * n - 2 - 4 * k)))
}

/// `[n]! = [1][2]...[n]`, memoized.
pub fn quantum_factorial(n: u32) -> LaurentPoly {
    static MEMO: OnceLock<RwLock<Vec<LaurentPoly>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(vec![LaurentPoly::one()]));
    if let Some(v) = memo.read().unwrap().get(n as usize) {
        return v.clone();
    }
    let mut w = memo.write().unwrap();
    while w.len() <= n as usize {
        let k = w.len() as u32;
        let next = w.last().unwrap() * &quantum_int(k);
        w.push(next);
    }
    w[n as usize].clone()
}

/// `Delta_n = (-1)^n [n+1]`, the value of a closed loop colored `n`.
pub fn quantum_delta(n: Color) -> LaurentPoly {
    let q = quantum_int(n + 1);
    if n.is_multiple_of(2) {
        q
    } else {
        -q
    }
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn memoized<K, V, F>(table: &'static OnceLock<RwLock<HashMap<K, V>>>, key: K, f: F) -> V
where
    K: std::hash::Hash + Eq + Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    F: FnOnce() -> V,
{
    let t = table.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = t.read().unwrap().get(&key) {
        return v.clone();
    }
    let v = f();
    t.write().unwrap().insert(key, v.clone());
    v
}

/// The theta network `theta(a, b, c)`. It lies in the fraction field in
/// general, e.g. `theta(3, 3, 2) = -[5][4] / ([3][2])`.
pub fn theta(a: Color, b: Color, c: Color) -> Result<RationalFunction, RecouplingError> {
    let t = AdmissibleTriple::new(a, b, c)?;
    static MEMO: OnceLock<RwLock<HashMap<(u32, u32, u32), RationalFunction>>> = OnceLock::new();
    Ok(memoized(&MEMO, (a, b, c), || {
        let (m, n, p) = t.internal();
        let num = quantum_factorial(m + n + p + 1)
            * quantum_factorial(m)
            * quantum_factorial(n)
            * quantum_factorial(p);
        let den = quantum_factorial(m + n) * quantum_factorial(n + p) * quantum_factorial(m + p);
        RationalFunction::new(num.scale(sign((m + n + p) as i64)), den).expect("nonzero factorials")
    }))
}

/// The tetrahedral network `Tet[a b e; c d f]`, whose four vertices are the
/// triples `(a,d,e)`, `(b,c,e)`, `(a,b,f)` and `(c,d,f)`.
pub fn tet(a: Color, b: Color, e: Color, c: Color, d: Color, f: Color) -> Result<RationalFunction, RecouplingError> {
    let faces = [(a, d, e), (b, c, e), (a, b, f), (c, d, f)];
    if faces.iter().any(|&(x, y, z)| !is_admissible(x, y, z)) {
        return Err(RecouplingError::Inadmissible(vec![a, b, e, c, d, f]));
    }
    static MEMO: OnceLock<RwLock<HashMap<[u32; 6], RationalFunction>>> = OnceLock::new();
    Ok(memoized(&MEMO, [a, b, e, c, d, f], || {
        let lows = faces.map(|(x, y, z)| (x + y + z) / 2);
        let highs = [(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2];
        let lo = *lows.iter().max().unwrap();
        let hi = *highs.iter().min().unwrap();
        let mut inner = RationalFunction::zero();
        for s in lo..=hi {
            let den: LaurentPoly = lows
                .iter()
                .map(|&l| quantum_factorial(s - l))
                .chain(highs.iter().map(|&h| quantum_factorial(h - s)))
                .product();
            let term = RationalFunction::new(quantum_factorial(s + 1).scale(sign(s as i64)), den)
                .expect("nonzero factorials");
            inner = &inner + &term;
        }
        let ifact: LaurentPoly = lows
            .iter()
            .flat_map(|&l| highs.iter().map(move |&h| quantum_factorial(h - l)))
            .product();
        let efact: LaurentPoly = [a, b, c, d, e, f].iter().map(|&x| quantum_factorial(x)).product();
        inner.scale(&ifact).div(&efact.into()).expect("nonzero factorials")
    }))
}

/// The twist eigenvalue `lambda^{ab}_c`: a half twist of the `a` and `b`
/// edges at a vertex `(a, b, c)` multiplies the network by this unit. It is
/// the eigenvalue of the negative crossing in the state-sum convention of
/// the `diagram` module (see [`TlNetwork::twisted_theta`]).
pub fn twist_lambda(a: Color, b: Color, c: Color) -> Result<LaurentPoly, RecouplingError> {
    AdmissibleTriple::new(a, b, c)?;
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let e = (a * (a + 2) + b * (b + 2) - c * (c + 2)) / 2;
    Ok(LaurentPoly::monomial(sign((a + b - c) / 2), e))
}

/// A planar diagram from `n_bottom` points to `n_top` points with no
/// crossings. Points `0..n_bottom` are the bottom, read left to right, and
/// `n_bottom..n_bottom+n_top` the top; `pairing[p]` is the partner of `p`.
/// `loops` counts closed components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TLDiagram {
    pub n_bottom: usize,
    pub n_top: usize,
    pub pairing: Vec<usize>,
    pub loops: usize,
}

impl TLDiagram {
    pub fn identity(n: usize) -> Self {
        let mut pairing = vec![0; 2 * n];
        for k in 0..n {
            pairing[k] = n + k;
            pairing[n + k] = k;
        }
        Self { n_bottom: n, n_top: n, pairing, loops: 0 }
    }

    /// The generator `e_i` (1-based) on `n` strands: a cap on bottom points
    /// `i-1, i` and a cup on the matching top points.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut d = Self::identity(n);
        let (p, q) = (i - 1, i);
        d.pairing[p] = q;
        d.pairing[q] = p;
        d.pairing[n + p] = n + q;
        d.pairing[n + q] = n + p;
        d
    }

    /// Adds one through-strand on the right.
    pub fn tensor_id(&self) -> Self {
        let (nb, nt) = (self.n_bottom, self.n_top);
        let remap = |p: usize| if p < nb { p } else { p + 1 };
        let mut pairing = vec![0; nb + nt + 2];
        for (p, &q) in self.pairing.iter().enumerate() {
            pairing[remap(p)] = remap(q);
        }
        pairing[nb] = nb + 1 + nt;
        pairing[nb + 1 + nt] = nb;
        Self { n_bottom: nb + 1, n_top: nt + 1, pairing, loops: self.loops }
    }

    pub fn is_planar(&self) -> bool {
        // Unfold the boundary circle: bottom left-to-right, then top right-to-left.
        let n = self.pairing.len();
        let pos = |p: usize| if p < self.n_bottom { p } else { n - 1 - (p - self.n_bottom) };
        let chords: Vec<(usize, usize)> = (0..n)
            .filter(|&p| p < self.pairing[p])
            .map(|p| {
                let (x, y) = (pos(p), pos(self.pairing[p]));
                (x.min(y), x.max(y))
            })
            .collect();
        chords.iter().all(|&(a, b)| {
            chords
                .iter()
                .all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// `self` stacked below `top`.
    pub fn compose(&self, top: &Self) -> Self {
        assert_eq!(self.n_top, top.n_bottom);
        let (nb, k, nt) = (self.n_bottom, self.n_top, top.n_top);
        // Global ids: self points 0..nb+k, top points offset by nb+k.
        let off = nb + k;
        let mut out = vec![usize::MAX; nb + nt];
        let mut seen_mid = vec![false; k];
        let out_id = |g: usize| if g < nb { g } else { nb + (g - off - k) };
        let follow = |mut g: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                let h = if g < off { self.pairing[g] } else { top.pairing[g - off] + off };
                if h < nb || h >= off + k {
                    return h;
                }
                let m = if h < off { h - nb } else { h - off };
                seen[m] = true;
                g = if h < off { off + m } else { nb + m };
            }
        };
        for p in 0..nb + nt {
            let g = if p < nb { p } else { off + k + (p - nb) };
            out[p] = out_id(follow(g, &mut seen_mid));
        }
        let mut loops = self.loops + top.loops;
        for m in 0..k {
            if seen_mid[m] {
                continue;
            }
            loops += 1;
            let mut g = nb + m;
            loop {
                let m1 = g - nb;
                seen_mid[m1] = true;
                let h = top.pairing[m1] + off;
                let m2 = h - off;
                seen_mid[m2] = true;
                let back = self.pairing[nb + m2];
                if back == nb + m {
                    break;
                }
                g = back;
            }
        }
        Self { n_bottom: nb, n_top: nt, pairing: out, loops }
    }
}

/// A formal combination of crossingless diagrams on `n` strands.
pub type TlElement = Vec<(TLDiagram, RationalFunction)>;

fn normalize_element(items: impl IntoIterator<Item = (TLDiagram, RationalFunction)>) -> TlElement {
    let d = delta();
    let mut acc: HashMap<TLDiagram, RationalFunction> = HashMap::new();
    for (mut diag, c) in items {
        let c = c.scale(&d.pow(diag.loops as u32));
        diag.loops = 0;
        let e = acc.entry(diag).or_insert_with(RationalFunction::zero);
        *e = &*e + &c;
    }
    let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.pairing.cmp(&b.0.pairing));
    v
}

fn multiply(x: &TlElement, y: &TlElement) -> TlElement {
    normalize_element(
        x.iter()
            .flat_map(|(dx, cx)| y.iter().map(move |(dy, cy)| (dx.compose(dy), cx * cy))),
    )
}

/// The Jones-Wenzl projector on `n` strands, built by the Wenzl recursion
/// and memoized.
pub fn jones_wenzl(n: usize) -> Arc<TlElement> {
    static MEMO: OnceLock<RwLock<HashMap<usize, Arc<TlElement>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = memo.read().unwrap().get(&n) {
        return v.clone();
    }
    let value = if n <= 1 {
        vec![(TLDiagram::identity(n), RationalFunction::one())]
    } else {
        let prev = jones_wenzl(n - 1);
        let p: TlElement = prev.iter().map(|(d, c)| (d.tensor_id(), c.clone())).collect();
        let e = vec![(TLDiagram::generator(n, n - 1), RationalFunction::one())];
        let pep = multiply(&multiply(&p, &e), &p);
        let ratio = RationalFunction::new(quantum_delta(n as u32 - 2), quantum_delta(n as u32 - 1)).unwrap();
        normalize_element(
            p.into_iter()
                .chain(pep.into_iter().map(|(d, c)| (d, -&(&c * &ratio)))),
        )
    };
    let value = Arc::new(value);
    memo.write().unwrap().insert(n, value.clone());
    value
}

/// One step of a planar sweep over a colored network. The frontier is the
/// ordered list of strands cut by a vertical line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TlOp {
    /// Insert `pairing.len()` new frontier strands at `at`, joined to each
    /// other by the given (planar) local pairing.
    Insert { at: usize, pairing: Vec<usize> },
    /// Close off the frontier strands `at..at+pairing.len()` by the local pairing.
    Remove { at: usize, pairing: Vec<usize> },
    /// Apply the Jones-Wenzl projector to strands `at..at+n`.
    Projector { at: usize, n: usize },
    /// Cross strands `at` and `at+1`; `positive` is the crossing whose
    /// top-left to bottom-right strand passes over.
    Cross { at: usize, positive: bool },
}

/// A closed colored network presented as a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TlNetwork {
    pub ops: Vec<TlOp>,
}

/// Local pairing of a stacked vertex `x` over `y` over `z` (top to bottom).
fn vertex_pairing(x: u32, y: u32, z: u32) -> Result<Vec<usize>, RecouplingError> {
    let t = AdmissibleTriple::new(x, y, z)?;
    let (xy, yz, xz) = t.internal();
    let (x, y, z) = (x as usize, y as usize, z as usize);
    let (xy, yz, xz) = (xy as usize, yz as usize, xz as usize);
    let n = x + y + z;
    let mut p = vec![0; n];
    let mut join = |a: usize, b: usize| {
        p[a] = b;
        p[b] = a;
    };
    for k in 0..xz {
        join(k, n - 1 - k);
    }
    for k in 0..xy {
        join(x - 1 - k, x + k);
    }
    for k in 0..yz {
        join(x + y - 1 - k, x + y + k);
    }
    Ok(p)
}

fn nested(n: usize) -> Vec<usize> {
    (0..2 * n).map(|k| 2 * n - 1 - k).collect()
}

impl TlNetwork {
    fn proj(&mut self, at: usize, n: u32) {
        if n > 1 {
            self.ops.push(TlOp::Projector { at, n: n as usize });
        }
    }

    /// A single closed loop of color `n`.
    pub fn loop_colored(n: Color) -> Self {
        let mut net = Self::default();
        net.ops.push(TlOp::Insert { at: 0, pairing: nested(n as usize) });
        net.proj(0, n);
        net.ops.push(TlOp::Remove { at: 0, pairing: nested(n as usize) });
        net
    }

    fn theta_with(a: Color, b: Color, c: Color, twist: Option<bool>) -> Result<Self, RecouplingError> {
        let mut net = Self::default();
        net.ops.push(TlOp::Insert { at: 0, pairing: vertex_pairing(a, b, c)? });
        net.proj(0, a);
        net.proj(a as usize, b);
        net.proj((a + b) as usize, c);
        let (x, y) = match twist {
            None => (a, b),
            Some(positive) => {
                // Carry every strand of the `b` bundle above the whole `a` bundle.
                for k in 0..b as usize {
                    for j in (k..k + a as usize).rev() {
                        net.ops.push(TlOp::Cross { at: j, positive });
                    }
                }
                (b, a)
            }
        };
        net.ops.push(TlOp::Remove { at: 0, pairing: vertex_pairing(x, y, c)? });
        Ok(net)
    }

    /// The theta network with edges colored `a`, `b`, `c`.
    pub fn theta(a: Color, b: Color, c: Color) -> Result<Self, RecouplingError> {
        Self::theta_with(a, b, c, None)
    }

    /// The theta network with a half twist between the `a` and `b` edges.
    pub fn twisted_theta(a: Color, b: Color, c: Color, positive: bool) -> Result<Self, RecouplingError> {
        Self::theta_with(a, b, c, Some(positive))
    }

    /// The tetrahedral network with vertices `(a,d,e)`, `(b,c,e)`, `(a,b,f)`, `(c,d,f)`.
    pub fn tetrahedron(a: Color, b: Color, e: Color, c: Color, d: Color, f: Color) -> Result<Self, RecouplingError> {
        for (x, y, z) in [(a, d, e), (b, c, e), (a, b, f), (c, d, f)] {
            AdmissibleTriple::new(x, y, z).map_err(|_| RecouplingError::Inadmissible(vec![a, b, e, c, d, f]))?;
        }
        let mut net = Self::default();
        // Left vertex emits a (top), e, d (bottom).
        net.ops.push(TlOp::Insert { at: 0, pairing: vertex_pairing(a, e, d)? });
        net.proj(0, a);
        net.proj(a as usize, e);
        net.proj((a + e) as usize, d);
        // a splits into f over b.
        let to_f = (a + f - b) / 2;
        net.ops.push(TlOp::Insert { at: to_f as usize, pairing: nested(((b + f - a) / 2) as usize) });
        net.proj(0, f);
        net.proj(f as usize, b);
        // d splits into c over f.
        let d_at = (f + b + e) as usize;
        let to_c = (c + d - f) / 2;
        net.ops.push(TlOp::Insert { at: d_at + to_c as usize, pairing: nested(((c + f - d) / 2) as usize) });
        net.proj(d_at, c);
        net.proj(d_at + c as usize, f);
        // Right vertex absorbs b, e, c; then the two halves of f close up.
        net.ops.push(TlOp::Remove { at: f as usize, pairing: vertex_pairing(b, e, c)? });
        net.ops.push(TlOp::Remove { at: 0, pairing: nested(f as usize) });
        Ok(net)
    }

    /// Largest frontier this sweep creates.
    pub fn max_width(&self) -> usize {
        let mut w = 0usize;
        let mut best = 0;
        for op in &self.ops {
            match op {
                TlOp::Insert { pairing, .. } => w += pairing.len(),
                TlOp::Remove { pairing, .. } => w = w.saturating_sub(pairing.len()),
                _ => {}
            }
            best = best.max(w);
        }
        best
    }
}

type Frontier = Vec<u8>;

/// Glue a crossingless piece with `nb` bottom points (attached to frontier
/// strands `at..at+nb`) and `nt` top points into a frontier matching.
fn glue(state: &[u8], at: usize, nb: usize, nt: usize, pairing: &[usize]) -> (Frontier, usize) {
    let w = state.len();
    let new_w = w - nb + nt;
    let in_window = |q: usize| q >= at && q < at + nb;
    let new_index_old = |q: usize| if q < at { q } else { q - nb + nt };
    let mut seen = vec![false; nb];
    let mut out = vec![0u8; new_w];
    // Follow the path entering the window at bottom point `b`, returning the
    // new frontier index where it leaves.
    let follow = |mut b: usize, seen: &mut Vec<bool>| -> usize {
        loop {
            seen[b] = true;
            let d = pairing[b];
            if d >= nb {
                return at + (d - nb);
            }
            seen[d] = true;
            let q = state[at + d] as usize;
            if !in_window(q) {
                return new_index_old(q);
            }
            b = q - at;
        }
    };
    for q in 0..w {
        if in_window(q) {
            continue;
        }
        let p = state[q] as usize;
        let target = if in_window(p) { follow(p - at, &mut seen) } else { new_index_old(p) };
        out[new_index_old(q)] = target as u8;
    }
    for k in 0..nt {
        let d = pairing[nb + k];
        let target = if d >= nb {
            at + (d - nb)
        } else {
            seen[d] = true;
            let q = state[at + d] as usize;
            if in_window(q) {
                follow(q - at, &mut seen)
            } else {
                new_index_old(q)
            }
        };
        out[at + k] = target as u8;
    }
    let mut loops = 0;
    for b in 0..nb {
        if seen[b] {
            continue;
        }
        loops += 1;
        let mut cur = b;
        loop {
            seen[cur] = true;
            let d = pairing[cur];
            seen[d] = true;
            let q = state[at + d] as usize - at;
            if q == b {
                break;
            }
            cur = q;
        }
    }
    (out, loops)
}

fn check_local_pairing(p: &[usize]) -> Result<(), RecouplingError> {
    let n = p.len();
    let ok = p.iter().enumerate().all(|(i, &j)| j < n && j != i && p[j] == i)
        && (0..n).all(|i| {
            let j = p[i];
            (0..n).all(|k| {
                let l = p[k];
                !((i < k && k < j && j < l) || (k < i && i < l && l < j))
            })
        });
    if ok {
        Ok(())
    } else {
        Err(RecouplingError::MalformedNetwork("local pairing is not a planar perfect matching".into()))
    }
}

/// Evaluates a closed network with the default strand bound.
pub fn tl_evaluate(net: &TlNetwork) -> Result<RationalFunction, RecouplingError> {
    tl_evaluate_bounded(net, DEFAULT_STRAND_BOUND)
}

/// Evaluates a closed network by sweeping it, expanding projectors and
/// crossings into crossingless pieces and counting loops. Networks whose
/// edges carry projectors evaluate into the fraction field in general.
pub fn tl_evaluate_bounded(net: &TlNetwork, bound: usize) -> Result<RationalFunction, RecouplingError> {
    let width = net.max_width();
    if width > bound {
        return Err(RecouplingError::BoundExceeded { found: width, bound });
    }
    let d = delta();
    let mut states: HashMap<Frontier, RationalFunction> = HashMap::new();
    states.insert(Vec::new(), RationalFunction::one());
    let mut w = 0usize;
    for op in &net.ops {
        let pieces: Vec<(usize, usize, usize, Vec<usize>, RationalFunction)> = match op {
            TlOp::Insert { at, pairing } => {
                check_local_pairing(pairing)?;
                vec![(*at, 0, pairing.len(), pairing.clone(), RationalFunction::one())]
            }
            TlOp::Remove { at, pairing } => {
                check_local_pairing(pairing)?;
                vec![(*at, pairing.len(), 0, pairing.clone(), RationalFunction::one())]
            }
            TlOp::Projector { at, n } => jones_wenzl(*n)
                .iter()
                .map(|(dg, c)| (*at, *n, *n, dg.pairing.clone(), c.clone()))
                .collect(),
            TlOp::Cross { at, positive } => {
                let (ci, ce) = if *positive { (1, -1) } else { (-1, 1) };
                vec![
                    (*at, 2, 2, TLDiagram::identity(2).pairing, LaurentPoly::a_pow(ci).into()),
                    (*at, 2, 2, TLDiagram::generator(2, 1).pairing, LaurentPoly::a_pow(ce).into()),
                ]
            }
        };
        let (at, nb, nt) = (pieces[0].0, pieces[0].1, pieces[0].2);
        if at + nb > w {
            return Err(RecouplingError::MalformedNetwork(format!(
                "operation {op:?} reaches past the frontier of width {w}"
            )));
        }
        let mut next: HashMap<Frontier, RationalFunction> = HashMap::new();
        for (st, c) in &states {
            for (_, _, _, pairing, pc) in &pieces {
                let (ns, loops) = glue(st, at, nb, nt, pairing);
                let term = (c * pc).scale(&d.pow(loops as u32));
                let e = next.entry(ns).or_insert_with(RationalFunction::zero);
                *e = &*e + &term;
            }
        }
        next.retain(|_, c| !c.is_zero());
        states = next;
        w = w - nb + nt;
    }
    if w != 0 {
        return Err(RecouplingError::MalformedNetwork(format!("network leaves {w} open strands")));
    }
    Ok(states.remove(&Vec::new()).unwrap_or_else(RationalFunction::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(1, 1, 0));
        assert!(!is_admissible(1, 1, 1));
        assert!(is_admissible(1, 2, 3));
        assert!(!is_admissible(1, 4, 1));
        assert!(AdmissibleTriple::new(2, 0, 1).is_err());
    }

    #[test]
    fn loop_values() {
        assert!(quantum_delta(0).is_one());
        assert_eq!(quantum_delta(1), delta());
        assert_eq!(quantum_delta(2), p("A^4 + 1 + A^-4"));
        for n in 0..5 {
            assert_eq!(tl_evaluate(&TlNetwork::loop_colored(n)).unwrap(), quantum_delta(n).into());
        }
    }

    #[test]
    fn jw2_shape() {
        let jw = jones_wenzl(2);
        assert_eq!(jw.len(), 2);
        let e = jw.iter().find(|(d, _)| d.pairing[0] == 1).unwrap();
        assert_eq!(e.1, RationalFunction::new(p("A^2"), p("A^4 + 1")).unwrap());
    }

    #[test]
    fn jw_is_idempotent_and_killed_by_caps() {
        for n in 2..5 {
            let jw = jones_wenzl(n);
            assert_eq!(multiply(&jw, &jw), *jw);
            for i in 1..n {
                let e = vec![(TLDiagram::generator(n, i), RationalFunction::one())];
                assert!(multiply(&jw, &e).is_empty());
            }
        }
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(1, 1, 0).unwrap(), delta().into());
        assert_eq!(theta(1, 0, 1).unwrap(), delta().into());
        assert_eq!(theta(1, 1, 2).unwrap(), p("A^4 + 1 + A^-4").into());
        assert!(theta(3, 3, 2).unwrap().to_laurent().is_none());
        assert!(theta(1, 1, 1).is_err());
        assert_eq!(tl_evaluate(&TlNetwork::theta(1, 1, 2).unwrap()).unwrap(), theta(1, 1, 2).unwrap());
    }

    #[test]
    fn tet_degenerate() {
        assert_eq!(tet(1, 1, 0, 1, 1, 0).unwrap(), delta().into());
        let net = TlNetwork::tetrahedron(1, 2, 1, 1, 2, 1).unwrap();
        assert_eq!(tl_evaluate(&net).unwrap(), tet(1, 2, 1, 1, 2, 1).unwrap());
    }

    #[test]
    fn lambda_values() {
        assert_eq!(twist_lambda(1, 1, 0).unwrap(), p("-A^3"));
        assert_eq!(twist_lambda(1, 1, 2).unwrap(), p("A^-1"));
        assert_eq!(twist_lambda(2, 1, 1).unwrap(), twist_lambda(1, 2, 1).unwrap());
        for (a, b, c) in [(1, 1, 0), (1, 1, 2), (2, 1, 1), (2, 2, 2)] {
            let twisted = tl_evaluate_bounded(&TlNetwork::twisted_theta(a, b, c, false).unwrap(), 12).unwrap();
            assert_eq!(twisted, theta(a, b, c).unwrap().scale(&twist_lambda(a, b, c).unwrap()));
        }
    }

    #[test]
    fn bound_is_enforced() {
        let net = TlNetwork::theta(3, 3, 4).unwrap();
        assert!(matches!(tl_evaluate(&net), Err(RecouplingError::BoundExceeded { .. })));
    }

    #[test]
    fn diagram_compose_counts_loops() {
        let e = TLDiagram::generator(2, 1);
        let ee = e.compose(&e);
        assert_eq!(ee.loops, 1);
        assert_eq!(ee.pairing, e.pairing);
        assert!(e.is_planar());
    }

    proptest! {
        #[test]
        fn theta_symmetric(a in 0u32..5, b in 0u32..5, c in 0u32..5) {
            prop_assume!(is_admissible(a, b, c));
            let t = theta(a, b, c).unwrap();
            for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                prop_assert_eq!(theta(x, y, z).unwrap(), t.clone());
            }
        }

        #[test]
        fn lambda_is_unit(a in 0u32..6, b in 0u32..6, c in 0u32..6) {
            prop_assume!(is_admissible(a, b, c));
            let l = twist_lambda(a, b, c).unwrap();
            prop_assert!(l.is_unit());
            prop_assert!((&l * &l).eval_at_one() == 1.into());
        }

        #[test]
        fn delta_at_one(n in 0u32..20) {
            let expect = if n % 2 == 0 { n as i64 + 1 } else { -(n as i64 + 1) };
            prop_assert_eq!(quantum_delta(n).eval_at_one(), expect.into());
        }
    }
}
