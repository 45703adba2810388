//! Kauffman bracket state sums.
//!
//! The main engine processes crossings one at a time and keeps, for every
//! partial smoothing, only how the open edges are joined up (plus the parity
//! of meridian-disk intersections along each partial path). Smoothings that
//! agree on this boundary data are merged, so the cost is governed by the
//! number of open edges rather than by `2^crossings`. The exhaustive
//! `2^c` enumeration is kept as an independent check.

use std::collections::HashMap;

use super::{ArcType, BasisElement, DiagramError, EdgeId, LinkDiagram, SkeinVector, TangleDiagram, Terminal};
use crate::laurent::{delta, LaurentPoly};

pub const DEFAULT_MAX_FRONTIER: usize = 24;
pub const DEFAULT_MAX_CROSSINGS: usize = 24;

/// Size limits for the state sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BracketOptions {
    /// Largest number of simultaneously open edges the engine accepts.
    pub max_frontier: usize,
    /// Largest crossing count accepted by the exhaustive enumeration.
    pub max_crossings: usize,
}

impl Default for BracketOptions {
    fn default() -> Self {
        Self { max_frontier: DEFAULT_MAX_FRONTIER, max_crossings: DEFAULT_MAX_CROSSINGS }
    }
}

impl BracketOptions {
    /// Defaults, overridden by `KBIDEAL_MAX_FRONTIER` and `KBIDEAL_MAX_CROSSINGS`.
    pub fn from_env() -> Self {
        let read = |k: &str, d: usize| std::env::var(k).ok().and_then(|v| v.parse().ok()).unwrap_or(d);
        Self {
            max_frontier: read("KBIDEAL_MAX_FRONTIER", DEFAULT_MAX_FRONTIER),
            max_crossings: read("KBIDEAL_MAX_CROSSINGS", DEFAULT_MAX_CROSSINGS),
        }
    }
}

const T1: u16 = 0x7FFE;
const T2: u16 = 0x7FFF;
const PAR: u16 = 0x8000;

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    /// Per open edge: partner (open index or terminal) with the path parity in the top bit.
    links: Vec<u16>,
    /// 0 while the arc is unfinished, 1 for an even arc, 2 for an odd arc.
    arc: u8,
    cores: u16,
}

struct Problem {
    crossings: Vec<[usize; 4]>,
    parity: Vec<bool>,
    terminals: Vec<(usize, Terminal)>,
    classify: bool,
}

#[derive(Clone, Copy)]
enum Slot {
    Closing(usize),
    Opening(usize),
    Pair(usize),
}

#[derive(Clone, Copy)]
enum Outer {
    Ext(End, bool),
    Slot(usize, bool),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum End {
    Port(usize),
    Term(u16),
}

const SMOOTHINGS: [([usize; 4], i64); 2] = [([1, 0, 3, 2], 1), ([3, 2, 1, 0], -1)];

fn crossing_order(p: &Problem) -> Vec<usize> {
    let n = p.crossings.len();
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); p.parity.len()];
    for (i, x) in p.crossings.iter().enumerate() {
        for &e in x {
            ends[e].push(i);
        }
    }
    let mut open_count = vec![0i32; p.parity.len()];
    for &(e, _) in &p.terminals {
        open_count[e] += 1;
    }
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(i32, i32, usize)> = None;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let x = &p.crossings[i];
            let mut touching = 0;
            let mut delta_open = 0;
            for (s, &e) in x.iter().enumerate() {
                let twice = x.iter().enumerate().any(|(t, &f)| t != s && f == e);
                if open_count[e] == 1 {
                    touching += 1;
                    delta_open -= 1;
                } else if !twice {
                    delta_open += 1;
                }
            }
            let score = (touching, -delta_open, usize::MAX - i);
            let cand = (score.0, score.1, score.2);
            if best.is_none_or(|b| cand > b) {
                best = Some(cand);
            }
        }
        let i = usize::MAX - best.unwrap().2;
        done[i] = true;
        order.push(i);
        for &e in &p.crossings[i] {
            open_count[e] += 1;
        }
    }
    order
}

/// Runs the state sum; returns `(arc, cores) -> coefficient`, with `arc`
/// encoded as in [`Key`].
fn run(p: &Problem, opts: &BracketOptions) -> Result<HashMap<(u8, u16), LaurentPoly>, DiagramError> {
    let d = delta();
    let delta_pows: Vec<LaurentPoly> = (0..4).map(|k| d.pow(k)).collect();
    let mut open: Vec<usize> = Vec::new();
    let mut init = Key { links: Vec::new(), arc: 0, cores: 0 };
    for &(e, t) in &p.terminals {
        let code = if t == Terminal::P1 { T1 } else { T2 };
        if let Some(i) = open.iter().position(|&x| x == e) {
            // Both marked points on one crossingless edge.
            open.remove(i);
            init.links.remove(i);
            init.arc = if p.parity[e] { 2 } else { 1 };
        } else {
            open.push(e);
            init.links.push(code | if p.parity[e] { PAR } else { 0 });
        }
    }
    let mut states: HashMap<Key, LaurentPoly> = HashMap::new();
    states.insert(init, LaurentPoly::one());

    for ci in crossing_order(p) {
        let x = p.crossings[ci];
        let mut slots = [Slot::Pair(0); 4];
        let mut closing = vec![None; open.len()];
        let mut opened = Vec::new();
        for s in 0..4 {
            let e = x[s];
            if let Some(i) = open.iter().position(|&y| y == e) {
                slots[s] = Slot::Closing(i);
                closing[i] = Some(s);
            } else if let Some(t) = (0..4).find(|&t| t != s && x[t] == e) {
                slots[s] = Slot::Pair(t);
            } else {
                slots[s] = Slot::Opening(opened.len());
                opened.push(e);
            }
        }
        let mut new_index = vec![usize::MAX; open.len()];
        let mut next_open = Vec::new();
        for (i, &e) in open.iter().enumerate() {
            if closing[i].is_none() {
                new_index[i] = next_open.len();
                next_open.push(e);
            }
        }
        let base = next_open.len();
        next_open.extend(&opened);
        if next_open.len() > opts.max_frontier {
            return Err(DiagramError::BoundExceeded {
                what: "open edge count",
                found: next_open.len(),
                bound: opts.max_frontier,
            });
        }

        let mut next: HashMap<Key, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (key, coeff) in &states {
            let mut outer = [Outer::Slot(0, false); 4];
            for s in 0..4 {
                outer[s] = match slots[s] {
                    Slot::Closing(i) => {
                        let l = key.links[i];
                        let par = l & PAR != 0;
                        let partner = l & !PAR;
                        if partner == T1 || partner == T2 {
                            Outer::Ext(End::Term(partner), par)
                        } else if let Some(t) = closing[partner as usize] {
                            Outer::Slot(t, par)
                        } else {
                            Outer::Ext(End::Port(new_index[partner as usize]), par)
                        }
                    }
                    Slot::Opening(k) => Outer::Ext(End::Port(base + k), p.parity[x[s]]),
                    Slot::Pair(t) => Outer::Slot(t, p.parity[x[s]]),
                };
            }
            let mut survivors = vec![0u16; next_open.len()];
            for (i, &l) in key.links.iter().enumerate() {
                if closing[i].is_some() {
                    continue;
                }
                let partner = l & !PAR;
                let mapped = if partner == T1 || partner == T2 {
                    partner
                } else if closing[partner as usize].is_some() {
                    0 // rewritten below
                } else {
                    new_index[partner as usize] as u16
                };
                survivors[new_index[i]] = mapped | (l & PAR);
            }
            for (inner, sign) in SMOOTHINGS {
                let mut links = survivors.clone();
                let mut arc = key.arc;
                let mut cores = key.cores;
                let mut loops = 0usize;
                let mut visited = [false; 4];
                let connect = |a: End, b: End, par: bool, links: &mut Vec<u16>, arc: &mut u8| {
                    let pbit = if par { PAR } else { 0 };
                    match (a, b) {
                        (End::Port(u), End::Port(v)) => {
                            links[u] = v as u16 | pbit;
                            links[v] = u as u16 | pbit;
                        }
                        (End::Port(u), End::Term(t)) | (End::Term(t), End::Port(u)) => links[u] = t | pbit,
                        (End::Term(_), End::Term(_)) => *arc = if par { 2 } else { 1 },
                    }
                };
                for s in 0..4 {
                    if visited[s] {
                        continue;
                    }
                    if let Outer::Ext(start, p0) = outer[s] {
                        let mut total = p0;
                        let mut cur = s;
                        loop {
                            visited[cur] = true;
                            let nx = inner[cur];
                            visited[nx] = true;
                            match outer[nx] {
                                Outer::Ext(end, p1) => {
                                    connect(start, end, total ^ p1, &mut links, &mut arc);
                                    break;
                                }
                                Outer::Slot(t, p1) => {
                                    total ^= p1;
                                    cur = t;
                                }
                            }
                        }
                    }
                }
                for s in 0..4 {
                    if visited[s] {
                        continue;
                    }
                    let mut total = false;
                    let mut cur = s;
                    loop {
                        visited[cur] = true;
                        let nx = inner[cur];
                        visited[nx] = true;
                        let Outer::Slot(t, p1) = outer[nx] else { unreachable!() };
                        total ^= p1;
                        if t == s {
                            break;
                        }
                        cur = t;
                    }
                    if p.classify && total {
                        cores += 1;
                    } else {
                        loops += 1;
                    }
                }
                let term = coeff.shift(sign);
                let term = if loops == 0 { term } else { &term * &delta_pows[loops] };
                let k = Key { links, arc, cores };
                match next.get_mut(&k) {
                    Some(v) => {
                        *v += &term;
                    }
                    None => {
                        next.insert(k, term);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
        open = next_open;
    }
    if !open.is_empty() {
        return Err(DiagramError::MalformedDiagram("edges left open after the state sum".into()));
    }
    let mut out: HashMap<(u8, u16), LaurentPoly> = HashMap::new();
    for (k, v) in states {
        *out.entry((k.arc, k.cores)).or_default() += &v;
    }
    Ok(out)
}

fn dense_ids<'a>(edges: impl Iterator<Item = &'a EdgeId>) -> HashMap<EdgeId, usize> {
    let mut m = HashMap::new();
    for &e in edges {
        let n = m.len();
        m.entry(e).or_insert(n);
    }
    m
}

pub(crate) fn bracket_link(d: &LinkDiagram, opts: &BracketOptions) -> Result<LaurentPoly, DiagramError> {
    let ids = dense_ids(d.crossings.iter().flatten());
    let problem = Problem {
        crossings: d.crossings.iter().map(|x| x.map(|e| ids[&e])).collect(),
        parity: vec![false; ids.len()],
        terminals: Vec::new(),
        classify: false,
    };
    let out = run(&problem, opts)?;
    let v = out.get(&(0, 0)).cloned().unwrap_or_default();
    Ok(&v * &delta().pow(d.free_loops as u32))
}

pub(crate) fn reduce(t: &TangleDiagram, opts: &BracketOptions) -> Result<SkeinVector, DiagramError> {
    let ids = dense_ids(t.crossings.iter().flatten().chain([&t.p1, &t.p2]));
    let mut parity = vec![false; ids.len()];
    for &(e, k) in &t.membrane {
        if let Some(&i) = ids.get(&e) {
            parity[i] = k % 2 == 1;
        }
    }
    let problem = Problem {
        crossings: t.crossings.iter().map(|x| x.map(|e| ids[&e])).collect(),
        parity,
        terminals: vec![(ids[&t.p1], Terminal::P1), (ids[&t.p2], Terminal::P2)],
        classify: true,
    };
    let out = run(&problem, opts)?;
    let extra_cores = t.loops.iter().filter(|&&e| t.membrane(e) % 2 == 1).count() as u32;
    let contractible = t.loops.len() as u32 - extra_cores;
    let factor = delta().pow(contractible);
    let mut v = SkeinVector::zero();
    for ((arc, cores), c) in out {
        let arc = match arc {
            1 => ArcType::Short,
            2 => ArcType::Long,
            _ => return Err(DiagramError::MalformedDiagram("marked points are not joined by an arc".into())),
        };
        v.add_term(BasisElement::new(arc, cores as u32 + extra_cores), &(&c * &factor));
    }
    Ok(v)
}

/// The bracket by exhaustive enumeration of all `2^c` states with
/// union-find loop counting.
pub fn kauffman_bracket_enumerate(d: &LinkDiagram, opts: &BracketOptions) -> Result<LaurentPoly, DiagramError> {
    let c = d.crossings.len();
    if c > opts.max_crossings {
        return Err(DiagramError::BoundExceeded { what: "crossing count", found: c, bound: opts.max_crossings });
    }
    let ids = dense_ids(d.crossings.iter().flatten());
    let n = ids.len();
    let xs: Vec<[usize; 4]> = d.crossings.iter().map(|x| x.map(|e| ids[&e])).collect();
    let mut counts: HashMap<(i64, usize), i64> = HashMap::new();
    let mut parent = vec![0usize; n];
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let nx = p[c];
            p[c] = r;
            c = nx;
        }
        r
    }
    for mask in 0u64..(1u64 << c) {
        for (i, v) in parent.iter_mut().enumerate() {
            *v = i;
        }
        let mut comps = n;
        let mut exp = 0i64;
        for (i, x) in xs.iter().enumerate() {
            let (pairs, s) = if mask >> i & 1 == 0 { ([(0, 1), (2, 3)], 1) } else { ([(0, 3), (1, 2)], -1) };
            exp += s;
            for (a, b) in pairs {
                let (ra, rb) = (find(&mut parent, x[a]), find(&mut parent, x[b]));
                if ra != rb {
                    parent[ra] = rb;
                    comps -= 1;
                }
            }
        }
        *counts.entry((exp, comps + d.free_loops)).or_default() += 1;
    }
    let dl = delta();
    let mut total = LaurentPoly::zero();
    for ((exp, loops), k) in counts {
        total += &(&dl.pow(loops as u32) * &LaurentPoly::monomial(k, exp));
    }
    Ok(total)
}
