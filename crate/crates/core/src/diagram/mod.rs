//! Planar link diagrams and annular genus-1 tangle diagrams in PD form, the
//! Kauffman bracket state sum, reduction of tangles to the crossingless
//! annular basis, and closures.
//!
//! # Text format
//!
//! One item per line, `#` starts a comment:
//!
//! * `X a b c d`: a crossing; edges listed counterclockwise starting from
//!   an under-strand end. The A-smoothing joins `a` with `b` and `c` with `d`.
//! * `P1 e`, `P2 e`: the edge ending at the marked boundary point.
//! * `M e k`: edge `e` meets the meridian disk `k` times.
//! * `O e`: a crossingless closed component carried by edge `e`.
//!
//! The annulus is drawn as a strip whose two ends are glued along the
//! meridian disk; the top of the strip is the outer boundary circle.
//! For closures, the order of `M` lines lists the cut edges from the outer
//! boundary inwards, and of the two ends of a cut edge the one whose line
//! (`X` or `P`) comes later in the file is the one reached just before the
//! cut when sweeping along the strip (`P1` counts as the earlier of two
//! `P` lines with no `X` line between them). When both ends lie on the same `X`
//! line the mark takes a third argument `M e k s`, the slot (0 to 3) of the
//! end reached before the cut. Files written by this crate follow these
//! conventions.

mod bracket;
mod closure;
mod sweep;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::DiagramError;
use crate::laurent::LaurentPoly;

pub use bracket::{kauffman_bracket_enumerate, BracketOptions, DEFAULT_MAX_CROSSINGS, DEFAULT_MAX_FRONTIER};
pub use closure::{close, ClosureOp, ClosureSpec};
pub use sweep::{Sweep, SweepOp, Terminal};

pub type EdgeId = u32;

/// A crossing `[a, b, c, d]`, edges counterclockwise from an under-strand end.
pub type Crossing = [EdgeId; 4];

/// A closed planar link diagram with blackboard framing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let mut counts: HashMap<EdgeId, usize> = HashMap::new();
        for x in &crossings {
            for &e in x {
                *counts.entry(e).or_default() += 1;
            }
        }
        if let Some((e, n)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(DiagramError::MalformedDiagram(format!(
                "edge {e} appears {n} times (expected 2)"
            )));
        }
        let d = Self { crossings, free_loops };
        d.check_euler()?;
        Ok(d)
    }

    pub fn unknot() -> Self {
        Self { crossings: Vec::new(), free_loops: 1 }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Disjoint union with a crossingless unknot.
    pub fn with_extra_loop(&self) -> Self {
        Self { crossings: self.crossings.clone(), free_loops: self.free_loops + 1 }
    }

    /// The mirror image: every crossing changes type.
    pub fn mirror(&self) -> Self {
        Self {
            crossings: self.crossings.iter().map(|&[a, b, c, d]| [b, c, d, a]).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Euler characteristic check of the 4-valent graph cellulated by the
    /// faces read off the cyclic orders: planar iff `V - E + F = 2C`.
    fn check_euler(&self) -> Result<(), DiagramError> {
        let c = self.crossings.len();
        if c == 0 {
            return Ok(());
        }
        let mut ends: HashMap<EdgeId, Vec<(usize, usize)>> = HashMap::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for (s, &e) in x.iter().enumerate() {
                ends.entry(e).or_default().push((i, s));
            }
        }
        let other = |i: usize, s: usize| -> (usize, usize) {
            let v = &ends[&self.crossings[i][s]];
            if v[0] == (i, s) {
                v[1]
            } else {
                v[0]
            }
        };
        let mut seen = vec![[false; 4]; c];
        let mut faces = 0usize;
        for i in 0..c {
            for s in 0..4 {
                if seen[i][s] {
                    continue;
                }
                faces += 1;
                let (mut x, mut t) = (i, s);
                while !seen[x][t] {
                    seen[x][t] = true;
                    let (y, u) = other(x, t);
                    x = y;
                    t = (u + 3) % 4;
                }
            }
        }
        let mut parent: Vec<usize> = (0..c).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for v in ends.values() {
            let (a, b) = (find(&mut parent, v[0].0), find(&mut parent, v[1].0));
            parent[a] = b;
        }
        let comps = (0..c).filter(|&i| find(&mut parent, i) == i).count();
        if c as i64 - 2 * c as i64 + faces as i64 == 2 * comps as i64 {
            Ok(())
        } else {
            Err(DiagramError::MalformedDiagram(format!(
                "cyclic orders do not describe a planar diagram ({c} crossings, {faces} faces, {comps} components)"
            )))
        }
    }
}

/// The kind of crossingless arc between the two marked points: `Short`
/// misses the meridian disk, `Long` meets it once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcType {
    Short,
    Long,
}

impl ArcType {
    pub fn membrane(self) -> u32 {
        match self {
            ArcType::Short => 0,
            ArcType::Long => 1,
        }
    }
}

/// A crossingless annular diagram: one arc plus `cores` parallel copies of
/// the core circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElement {
    pub arc: ArcType,
    pub cores: u32,
}

impl BasisElement {
    pub fn new(arc: ArcType, cores: u32) -> Self {
        Self { arc, cores }
    }

    /// Parity of the number of meridian-disk intersections.
    pub fn is_odd(&self) -> bool {
        (self.cores + self.arc.membrane()) % 2 == 1
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arc = match self.arc {
            ArcType::Short => "short",
            ArcType::Long => "long",
        };
        write!(f, "({arc},{})", self.cores)
    }
}

/// A finite Laurent-linear combination of crossingless basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SkeinVector {
    terms: BTreeMap<BasisElement, LaurentPoly>,
}

impl SkeinVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(b: BasisElement, c: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(b, &c);
        v
    }

    pub fn add_term(&mut self, b: BasisElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(b).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn get(&self, b: &BasisElement) -> LaurentPoly {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c);
        }
        out
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, &(c * s));
        }
        out
    }
}

impl FromIterator<(BasisElement, LaurentPoly)> for SkeinVector {
    fn from_iter<I: IntoIterator<Item = (BasisElement, LaurentPoly)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (b, c) in iter {
            v.add_term(b, &c);
        }
        v
    }
}

impl fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{b}: {c}")?;
        }
        Ok(())
    }
}

/// The crossingless tangle of a basis element: the arc outermost, then the
/// core circles.
pub fn basis_tangle(b: BasisElement) -> TangleDiagram {
    let ops = match b.arc {
        ArcType::Short => vec![SweepOp::In(Terminal::P1), SweepOp::Out(Terminal::P2)],
        ArcType::Long => vec![SweepOp::Out(Terminal::P1), SweepOp::In(Terminal::P2)],
    };
    let band = b.cores as usize + b.arc.membrane() as usize;
    Sweep::annular(band, ops).to_tangle().expect("crossingless basis tangles are well formed")
}

/// Splits a skein vector into its even and odd parts.
pub fn parity_split(v: &SkeinVector) -> (SkeinVector, SkeinVector) {
    let mut even = SkeinVector::zero();
    let mut odd = SkeinVector::zero();
    for (b, c) in v.iter() {
        if b.is_odd() {
            odd.add_term(*b, c);
        } else {
            even.add_term(*b, c);
        }
    }
    (even, odd)
}

/// Where an edge end sits: a crossing slot or a marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum End {
    Slot(usize, usize),
    Point(Terminal),
}

/// A diagram in the annulus with two marked points on the outer boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleDiagram {
    crossings: Vec<Crossing>,
    p1: EdgeId,
    p2: EdgeId,
    /// Number of crossing lines preceding the `P1` and `P2` lines.
    p_rank: [usize; 2],
    membrane: Vec<(EdgeId, u32)>,
    loops: Vec<EdgeId>,
    /// For cut edges with both ends on one crossing: the slot of the end
    /// reached just before the cut.
    before_slot: Vec<(EdgeId, usize)>,
}

impl TangleDiagram {
    /// Builds and validates a tangle. `p_rank[i]` is how many crossings of
    /// the list precede the line of the marked point `P(i+1)`.
    pub fn new(
        crossings: Vec<Crossing>,
        p1: EdgeId,
        p2: EdgeId,
        p_rank: [usize; 2],
        membrane: Vec<(EdgeId, u32)>,
        loops: Vec<EdgeId>,
    ) -> Result<Self, DiagramError> {
        let t = Self { crossings, p1, p2, p_rank, membrane, loops, before_slot: Vec::new() };
        t.validate()?;
        Ok(t)
    }

    /// Records, for cut edges running from a crossing back to itself, which
    /// slot is the end reached just before the cut.
    pub fn with_before_slots(mut self, slots: Vec<(EdgeId, usize)>) -> Result<Self, DiagramError> {
        for &(e, s) in &slots {
            if self.membrane(e) == 0 || s > 3 || !self.crossings.iter().any(|x| x[s] == e) {
                return Err(DiagramError::MalformedDiagram(format!("bad cut orientation {s} for edge {e}")));
            }
        }
        self.before_slot = slots;
        Ok(self)
    }

    pub(crate) fn before_slot(&self, e: EdgeId) -> Option<usize> {
        self.before_slot.iter().find(|(x, _)| *x == e).map(|(_, s)| *s)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let mut counts: HashMap<EdgeId, usize> = HashMap::new();
        for x in &self.crossings {
            for &e in x {
                *counts.entry(e).or_default() += 1;
            }
        }
        *counts.entry(self.p1).or_default() += 1;
        *counts.entry(self.p2).or_default() += 1;
        for &e in &self.loops {
            *counts.entry(e).or_default() += 2;
        }
        if let Some((e, n)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(DiagramError::MalformedDiagram(format!(
                "edge {e} has {n} ends (expected 2)"
            )));
        }
        let mut marked = std::collections::HashSet::new();
        for &(e, _) in &self.membrane {
            if !counts.contains_key(&e) {
                return Err(DiagramError::MalformedDiagram(format!("membrane mark on unknown edge {e}")));
            }
            if !marked.insert(e) {
                return Err(DiagramError::MalformedDiagram(format!("edge {e} marked twice")));
            }
        }
        if self.p_rank.iter().any(|&r| r > self.crossings.len()) {
            return Err(DiagramError::MalformedDiagram("marked point rank out of range".into()));
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn endpoints(&self) -> (EdgeId, EdgeId) {
        (self.p1, self.p2)
    }

    pub fn membrane_marks(&self) -> &[(EdgeId, u32)] {
        &self.membrane
    }

    pub fn free_loops(&self) -> &[EdgeId] {
        &self.loops
    }

    pub fn membrane(&self, e: EdgeId) -> u32 {
        self.membrane.iter().find(|(x, _)| *x == e).map_or(0, |(_, k)| *k)
    }

    /// Sum of all membrane marks.
    pub fn total_membrane(&self) -> u32 {
        self.membrane.iter().map(|(_, k)| k).sum()
    }

    /// The ends of edge `e`, in file order.
    pub(crate) fn ends(&self, e: EdgeId) -> Vec<(usize, End)> {
        let mut out = Vec::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for (s, &y) in x.iter().enumerate() {
                if y == e {
                    out.push((2 * i + 2, End::Slot(i, s)));
                }
            }
        }
        for (k, (pe, t)) in [(self.p1, Terminal::P1), (self.p2, Terminal::P2)].into_iter().enumerate() {
            if pe == e {
                out.push((2 * self.p_rank[k] + 1, End::Point(t)));
            }
        }
        out.sort_by_key(|&(r, end)| (r, matches!(end, End::Point(Terminal::P2))));
        out
    }

    pub fn mirror(&self) -> Self {
        Self {
            crossings: self.crossings.iter().map(|&[a, b, c, d]| [b, c, d, a]).collect(),
            before_slot: self.before_slot.iter().map(|&(e, s)| (e, (s + 3) % 4)).collect(),
            ..self.clone()
        }
    }
}

fn parse_ids(line: usize, toks: &[&str], n: usize) -> Result<Vec<u32>, DiagramError> {
    if toks.len() != n {
        return Err(DiagramError::Parse { line, msg: format!("expected {n} arguments, found {}", toks.len()) });
    }
    toks.iter()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| DiagramError::Parse { line, msg: format!("`{t}` is not a non-negative integer") })
        })
        .collect()
}

#[derive(Default)]
struct RawDiagram {
    crossings: Vec<Crossing>,
    p: [Option<(EdgeId, usize)>; 2],
    membrane: Vec<(EdgeId, u32)>,
    before_slot: Vec<(EdgeId, usize)>,
    loops: Vec<EdgeId>,
}

fn parse_raw(s: &str) -> Result<RawDiagram, DiagramError> {
    let mut raw = RawDiagram::default();
    for (idx, line) in s.lines().enumerate() {
        let ln = idx + 1;
        let body = line.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks[0] {
            "X" => {
                let v = parse_ids(ln, &toks[1..], 4)?;
                raw.crossings.push([v[0], v[1], v[2], v[3]]);
            }
            "P1" | "P2" => {
                let k = if toks[0] == "P1" { 0 } else { 1 };
                let v = parse_ids(ln, &toks[1..], 1)?;
                if raw.p[k].is_some() {
                    return Err(DiagramError::Parse { line: ln, msg: format!("duplicate {}", toks[0]) });
                }
                raw.p[k] = Some((v[0], raw.crossings.len()));
            }
            "M" => {
                let v = parse_ids(ln, &toks[1..], toks.len().clamp(3, 4) - 1)?;
                raw.membrane.push((v[0], v[1]));
                if let Some(&slot) = v.get(2) {
                    raw.before_slot.push((v[0], slot as usize));
                }
            }
            "O" => {
                let v = parse_ids(ln, &toks[1..], 1)?;
                raw.loops.push(v[0]);
            }
            other => {
                return Err(DiagramError::Parse { line: ln, msg: format!("unknown directive `{other}`") })
            }
        }
    }
    Ok(raw)
}

impl FromStr for TangleDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let raw = parse_raw(s)?;
        let (Some((p1, r1)), Some((p2, r2))) = (raw.p[0], raw.p[1]) else {
            return Err(DiagramError::MalformedDiagram("a tangle needs both P1 and P2".into()));
        };
        TangleDiagram::new(raw.crossings, p1, p2, [r1, r2], raw.membrane, raw.loops)?
            .with_before_slots(raw.before_slot)
    }
}

impl FromStr for LinkDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let raw = parse_raw(s)?;
        if raw.p.iter().any(|p| p.is_some()) {
            return Err(DiagramError::MalformedDiagram("a link diagram has no marked points".into()));
        }
        if !raw.membrane.is_empty() || !raw.before_slot.is_empty() {
            return Err(DiagramError::MalformedDiagram("a link diagram has no membrane marks".into()));
        }
        let d = LinkDiagram::new(raw.crossings, raw.loops.len())?;
        let used: std::collections::HashSet<_> = d.crossings.iter().flatten().collect();
        if raw.loops.iter().any(|e| used.contains(e)) {
            return Err(DiagramError::MalformedDiagram("free loop edge also used by a crossing".into()));
        }
        Ok(d)
    }
}

fn write_crossing(f: &mut fmt::Formatter<'_>, x: &Crossing) -> fmt::Result {
    writeln!(f, "X {} {} {} {}", x[0], x[1], x[2], x[3])
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut points = [(self.p_rank[0], "P1", self.p1), (self.p_rank[1], "P2", self.p2)];
        points.sort_by_key(|p| p.0);
        let mut pi = 0;
        for (i, x) in self.crossings.iter().enumerate() {
            while pi < 2 && points[pi].0 == i {
                writeln!(f, "{} {}", points[pi].1, points[pi].2)?;
                pi += 1;
            }
            write_crossing(f, x)?;
        }
        while pi < 2 {
            writeln!(f, "{} {}", points[pi].1, points[pi].2)?;
            pi += 1;
        }
        for (e, k) in &self.membrane {
            match self.before_slot(*e) {
                Some(s) => writeln!(f, "M {e} {k} {s}")?,
                None => writeln!(f, "M {e} {k}")?,
            }
        }
        for e in &self.loops {
            writeln!(f, "O {e}")?;
        }
        Ok(())
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.crossings {
            write_crossing(f, x)?;
        }
        let next = self.crossings.iter().flatten().max().map_or(1, |m| m + 1);
        for k in 0..self.free_loops {
            writeln!(f, "O {}", next + k as u32)?;
        }
        Ok(())
    }
}

/// The Kauffman bracket with default bounds.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly, DiagramError> {
    bracket::bracket_link(d, &BracketOptions::default())
}

/// The Kauffman bracket with explicit bounds.
pub fn kauffman_bracket_with(d: &LinkDiagram, opts: &BracketOptions) -> Result<LaurentPoly, DiagramError> {
    bracket::bracket_link(d, opts)
}

/// Expands a tangle into the crossingless annular basis.
pub fn reduce_tangle(t: &TangleDiagram) -> Result<SkeinVector, DiagramError> {
    bracket::reduce(t, &BracketOptions::default())
}

pub fn reduce_tangle_with(t: &TangleDiagram, opts: &BracketOptions) -> Result<SkeinVector, DiagramError> {
    bracket::reduce(t, opts)
}

#[cfg(test)]
mod tests;
