//! Building diagrams by sweeping a vertical line from left to right.
//!
//! The frontier lists the strands met by the sweep line, top first. For an
//! annular sweep the top is the outer boundary circle and the strip's ends
//! are glued along the meridian disk, so the `band` strands present at the
//! start are identified with those left at the end.

use std::collections::HashMap;

use super::{Crossing, DiagramError, EdgeId, LinkDiagram, TangleDiagram};

/// A marked boundary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Terminal {
    P1,
    P2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepOp {
    /// Cross strands `at` and `at+1`. In a positive crossing the strand
    /// running from top-left to bottom-right passes over.
    Cross { at: usize, positive: bool },
    /// A new arc opening to the right, occupying positions `at` and `at+1`.
    Cup { at: usize },
    /// Join the strands at `at` and `at+1`.
    Cap { at: usize },
    /// A strand starts at the marked point and enters at the top.
    In(Terminal),
    /// The top strand ends at the marked point.
    Out(Terminal),
}

/// Where the left end of a strand piece was created.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Origin {
    Output(usize, usize),
    Cup,
    Other,
}

/// What consumed the right end of a strand piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Consumer {
    Input(usize, usize),
    Cap(EdgeId),
    Other,
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Event {
    Crossing,
    Point(Terminal, EdgeId),
}

/// Incremental PD assembly over a union-find of edge pieces.
#[derive(Debug, Default)]
pub(crate) struct Assembler {
    parent: Vec<EdgeId>,
    pub crossings: Vec<Crossing>,
    pub events: Vec<Event>,
    pub frontier: Vec<EdgeId>,
    /// Roots of crossingless closed pieces, each with its membrane count.
    pub loops: Vec<EdgeId>,
    origin: HashMap<EdgeId, Origin>,
    consumers: HashMap<EdgeId, Vec<Consumer>>,
}

impl Assembler {
    /// An assembler whose ids `0..reserved` are already in use by the caller.
    pub fn with_reserved(reserved: EdgeId) -> Self {
        Self { parent: (0..reserved).collect(), ..Self::default() }
    }

    pub fn fresh(&mut self) -> EdgeId {
        let id = self.parent.len() as EdgeId;
        self.parent.push(id);
        id
    }

    pub fn find(&mut self, x: EdgeId) -> EdgeId {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let n = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = n;
        }
        r
    }

    /// Joins two pieces end to end; returns the root of a closed piece when
    /// the two ends belonged to the same piece.
    pub fn join(&mut self, a: EdgeId, b: EdgeId) -> Option<EdgeId> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return Some(ra);
        }
        self.parent[ra as usize] = rb;
        None
    }

    fn check(&self, at: usize, width: usize) -> Result<(), DiagramError> {
        if at + width > self.frontier.len() {
            return Err(DiagramError::MalformedDiagram(format!(
                "sweep position {at} out of range for a frontier of {} strands",
                self.frontier.len()
            )));
        }
        Ok(())
    }

    pub fn apply(&mut self, op: SweepOp) -> Result<(), DiagramError> {
        match op {
            SweepOp::Cross { at, positive } => {
                self.check(at, 2)?;
                let (tl, bl) = (self.frontier[at], self.frontier[at + 1]);
                let (tr, br) = (self.fresh(), self.fresh());
                let c = self.crossings.len();
                let [sbl, sbr, str_, stl] = if positive { [0, 1, 2, 3] } else { [1, 2, 3, 0] };
                self.consumers.entry(tl).or_default().push(Consumer::Input(c, stl));
                self.consumers.entry(bl).or_default().push(Consumer::Input(c, sbl));
                self.origin.insert(tr, Origin::Output(c, str_));
                self.origin.insert(br, Origin::Output(c, sbr));
                self.crossings.push(if positive { [bl, br, tr, tl] } else { [tl, bl, br, tr] });
                self.events.push(Event::Crossing);
                self.frontier[at] = tr;
                self.frontier[at + 1] = br;
            }
            SweepOp::Cup { at } => {
                self.check(at, 0)?;
                let e = self.fresh();
                self.origin.insert(e, Origin::Cup);
                self.frontier.insert(at, e);
                self.frontier.insert(at, e);
            }
            SweepOp::Cap { at } => {
                self.check(at, 2)?;
                let a = self.frontier.remove(at);
                let b = self.frontier.remove(at);
                self.consumers.entry(a).or_default().push(Consumer::Cap(b));
                self.consumers.entry(b).or_default().push(Consumer::Cap(a));
                if let Some(r) = self.join(a, b) {
                    self.loops.push(r);
                }
            }
            SweepOp::In(t) => {
                let e = self.fresh();
                self.frontier.insert(0, e);
                self.events.push(Event::Point(t, e));
            }
            SweepOp::Out(t) => {
                self.check(0, 1)?;
                let e = self.frontier.remove(0);
                self.consumers.entry(e).or_default().push(Consumer::Other);
                self.events.push(Event::Point(t, e));
            }
        }
        Ok(())
    }

    /// Walks back from the right end of the frontier piece `x` to the first
    /// crossing slot on the way, if any.
    fn left_slot(&self, mut x: EdgeId) -> Option<(usize, usize)> {
        let mut came: Option<Consumer> = None;
        loop {
            match self.origin.get(&x).copied().unwrap_or(Origin::Other) {
                Origin::Output(c, s) => return Some((c, s)),
                Origin::Other => return None,
                Origin::Cup => {
                    let mut rest = self.consumers.get(&x).cloned().unwrap_or_default();
                    if let Some(k) = came.and_then(|c| rest.iter().position(|&r| r == c)) {
                        rest.remove(k);
                    }
                    match rest.first() {
                        Some(Consumer::Input(c, s)) => return Some((*c, *s)),
                        Some(Consumer::Cap(y)) => {
                            came = Some(Consumer::Cap(x));
                            x = *y;
                        }
                        _ => return None,
                    }
                }
            }
        }
    }

    /// Compact relabelling of piece roots in order of first use.
    pub fn relabel(&mut self, extra: &[EdgeId]) -> HashMap<EdgeId, EdgeId> {
        let mut map = HashMap::new();
        let crossings = self.crossings.clone();
        let events = self.events.clone();
        let touch = |s: &mut Self, e: EdgeId, map: &mut HashMap<EdgeId, EdgeId>| {
            let r = s.find(e);
            let next = map.len() as EdgeId + 1;
            map.entry(r).or_insert(next);
        };
        let mut ci = 0;
        for ev in &events {
            match ev {
                Event::Crossing => {
                    for &e in &crossings[ci] {
                        touch(self, e, &mut map);
                    }
                    ci += 1;
                }
                Event::Point(_, e) => touch(self, *e, &mut map),
            }
        }
        for &e in &crossings[ci..] {
            for &x in &e {
                touch(self, x, &mut map);
            }
        }
        for &e in extra {
            touch(self, e, &mut map);
        }
        let roots: Vec<EdgeId> = (0..self.parent.len() as EdgeId).collect();
        let mut full = HashMap::new();
        for x in roots {
            let r = self.find(x);
            if let Some(&v) = map.get(&r) {
                full.insert(x, v);
            }
        }
        full
    }
}

/// A diagram described as a left-to-right sweep.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sweep {
    pub band: usize,
    pub ops: Vec<SweepOp>,
}

impl Sweep {
    pub fn planar(ops: Vec<SweepOp>) -> Self {
        Self { band: 0, ops }
    }

    /// An annular sweep with `band` strands crossing the meridian disk.
    pub fn annular(band: usize, ops: Vec<SweepOp>) -> Self {
        Self { band, ops }
    }

    fn run(&self) -> Result<(Assembler, Vec<EdgeId>), DiagramError> {
        let mut asm = Assembler::default();
        let initial: Vec<EdgeId> = (0..self.band).map(|_| asm.fresh()).collect();
        asm.frontier = initial.clone();
        for &op in &self.ops {
            asm.apply(op)?;
        }
        if asm.frontier.len() != self.band {
            return Err(DiagramError::MalformedDiagram(format!(
                "sweep ends with {} strands, expected {}",
                asm.frontier.len(),
                self.band
            )));
        }
        Ok((asm, initial))
    }

    pub fn to_link(&self) -> Result<LinkDiagram, DiagramError> {
        if self.band != 0 || self.ops.iter().any(|op| matches!(op, SweepOp::In(_) | SweepOp::Out(_))) {
            return Err(DiagramError::MalformedDiagram("a planar sweep has no band and no marked points".into()));
        }
        let (mut asm, _) = self.run()?;
        let map = asm.relabel(&[]);
        let crossings = asm.crossings.iter().map(|x| x.map(|e| map[&e])).collect();
        LinkDiagram::new(crossings, asm.loops.len())
    }

    pub fn to_tangle(&self) -> Result<TangleDiagram, DiagramError> {
        let (mut asm, initial) = self.run()?;
        let mut cut_count: HashMap<EdgeId, u32> = HashMap::new();
        let mut cut_order = Vec::new();
        let finals = asm.frontier.clone();
        let lefts: Vec<_> = finals.iter().map(|&a| asm.left_slot(a)).collect();
        for (&a, &b) in finals.iter().zip(&initial) {
            if let Some(r) = asm.join(a, b) {
                asm.loops.push(r);
            }
            cut_order.push(b);
        }
        for &b in &cut_order {
            let r = asm.find(b);
            *cut_count.entry(r).or_default() += 1;
        }
        let loop_roots: Vec<EdgeId> = asm.loops.clone();
        let map = asm.relabel(&loop_roots);
        let mut p = [None, None];
        let mut seen = 0usize;
        for ev in &asm.events {
            match ev {
                Event::Crossing => seen += 1,
                Event::Point(t, e) => {
                    let k = if *t == Terminal::P1 { 0 } else { 1 };
                    if p[k].is_some() {
                        return Err(DiagramError::MalformedDiagram(format!("{t:?} used twice")));
                    }
                    p[k] = Some((map[e], seen));
                }
            }
        }
        let (Some((p1, r1)), Some((p2, r2))) = (p[0], p[1]) else {
            return Err(DiagramError::MalformedDiagram("a tangle sweep needs both marked points".into()));
        };
        let mut membrane = Vec::new();
        let mut done = std::collections::HashSet::new();
        for &b in &cut_order {
            let r = asm.find(b);
            if done.insert(r) {
                membrane.push((map[&b], cut_count[&r]));
            }
        }
        let crossings: Vec<Crossing> = asm.crossings.iter().map(|x| x.map(|e| map[&e])).collect();
        let mut before = Vec::new();
        for (left, b) in lefts.into_iter().zip(&initial) {
            let e = map[b];
            if let Some((c, s)) = left {
                if crossings[c].iter().filter(|&&y| y == e).count() == 2 {
                    before.push((e, s));
                }
            }
        }
        let loops = loop_roots.iter().map(|e| map[e]).collect();
        TangleDiagram::new(crossings, p1, p2, [r1, r2], membrane, loops)?.with_before_slots(before)
    }
}
