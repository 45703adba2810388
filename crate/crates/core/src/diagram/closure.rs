//! Closures of annular tangles by complementary pieces.
//!
//! A complementary piece is drawn in the gap at the meridian disk. Both legs
//! leave the marked points upwards, run clockwise just outside the outer
//! boundary and enter the gap above the band of strands crossing the disk
//! (leg from `P1` outermost). The piece is then described as a sweep over
//! `[leg1, leg2, band...]`; at the end the two legs are joined and the band
//! continues into the start of the strip.

use std::fmt;

use super::sweep::{Assembler, SweepOp, Terminal};
use super::{ArcType, DiagramError, EdgeId, End, LinkDiagram, TangleDiagram};

/// One step of a complementary piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureOp {
    /// A half twist of the two legs.
    Twist { positive: bool },
    /// A kink in the inner leg; a positive kink multiplies the bracket by `-A^3`.
    Curl { positive: bool },
    /// The inner leg runs once around the band through the hole, crossing
    /// over the band on the way in when `over_first`.
    Pass { over_first: bool },
    /// A closed meridian loop around the band.
    Meridian { over_first: bool },
}

/// A complementary 1-manifold in the exterior solid torus.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClosureSpec {
    pub ops: Vec<ClosureOp>,
}

impl ClosureSpec {
    /// The closure family used for statistical checks: `|winding|` passes
    /// through the hole (under the band first when `winding > 0`), preceded
    /// by `|twists|` half twists of the legs and `|curls|` kinks.
    pub fn generated(winding: i32, twists: i32, curls: i32) -> Self {
        let mut ops = Vec::new();
        for _ in 0..twists.unsigned_abs() {
            ops.push(ClosureOp::Twist { positive: twists > 0 });
        }
        for _ in 0..curls.unsigned_abs() {
            ops.push(ClosureOp::Curl { positive: curls > 0 });
        }
        for _ in 0..winding.unsigned_abs() {
            ops.push(ClosureOp::Pass { over_first: winding < 0 });
        }
        Self { ops }
    }

    /// The crossingless element of the exterior torus with the given arc and
    /// `cores` core circles (meridian loops of the tangle's solid torus).
    pub fn basis(arc: ArcType, cores: u32) -> Self {
        let mut ops = vec![ClosureOp::Meridian { over_first: true }; cores as usize];
        if arc == ArcType::Long {
            ops.push(ClosureOp::Pass { over_first: true });
        }
        Self { ops }
    }

    /// Signed count of passes and meridian loops through the hole.
    pub fn winding(&self) -> i32 {
        self.ops
            .iter()
            .map(|op| match op {
                ClosureOp::Pass { over_first } | ClosureOp::Meridian { over_first } => {
                    if *over_first {
                        -1
                    } else {
                        1
                    }
                }
                _ => 0,
            })
            .sum()
    }

    /// Odd closures meet the meridian disk of the exterior an odd number of times.
    pub fn is_odd(&self) -> bool {
        self.winding().rem_euclid(2) == 1
    }

    fn emit(&self, band: usize) -> Vec<SweepOp> {
        let mut out = Vec::new();
        let dive = |out: &mut Vec<SweepOp>, from: usize, over_first: bool| {
            for j in from..from + band {
                out.push(SweepOp::Cross { at: j, positive: over_first });
            }
            for j in (from..from + band).rev() {
                out.push(SweepOp::Cross { at: j, positive: over_first });
            }
        };
        for op in &self.ops {
            match *op {
                ClosureOp::Twist { positive } => out.push(SweepOp::Cross { at: 0, positive }),
                ClosureOp::Curl { positive } => {
                    out.push(SweepOp::Cup { at: 2 });
                    out.push(SweepOp::Cross { at: 1, positive });
                    out.push(SweepOp::Cap { at: 2 });
                }
                ClosureOp::Pass { over_first } => dive(&mut out, 1, over_first),
                ClosureOp::Meridian { over_first } => {
                    out.push(SweepOp::Cup { at: 2 });
                    dive(&mut out, 3, over_first);
                    out.push(SweepOp::Cap { at: 2 });
                }
            }
        }
        out.push(SweepOp::Cap { at: 0 });
        out
    }
}

impl fmt::Display for ClosureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .ops
            .iter()
            .map(|op| {
                let s = |b: bool| if b { "+" } else { "-" };
                match op {
                    ClosureOp::Twist { positive } => format!("twist{}", s(*positive)),
                    ClosureOp::Curl { positive } => format!("curl{}", s(*positive)),
                    ClosureOp::Pass { over_first } => format!("pass{}", s(*over_first)),
                    ClosureOp::Meridian { over_first } => format!("meridian{}", s(*over_first)),
                }
            })
            .collect();
        write!(f, "[{}]", names.join(" "))
    }
}

/// Glues the complementary piece `c` to `t`, producing a planar link diagram.
pub fn close(t: &TangleDiagram, c: &ClosureSpec) -> Result<LinkDiagram, DiagramError> {
    let max_id = t
        .crossings
        .iter()
        .flatten()
        .chain([&t.p1, &t.p2])
        .chain(t.loops.iter())
        .copied()
        .max()
        .unwrap_or(0);
    let mut asm = Assembler::with_reserved(max_id + 1);
    let mut crossings = t.crossings.clone();
    let mut legs = [t.p1, t.p2];
    let mut band_in = Vec::new();
    let mut band_out = Vec::new();
    for &(e, k) in &t.membrane {
        match k {
            0 => continue,
            1 => {}
            _ => {
                return Err(DiagramError::MalformedDiagram(format!(
                    "closure needs every marked edge to meet the disk once; edge {e} meets it {k} times"
                )))
            }
        }
        if t.loops.contains(&e) {
            band_in.push(e);
            band_out.push(e);
            continue;
        }
        let ends = t.ends(e);
        if ends.len() != 2 {
            return Err(DiagramError::MalformedDiagram(format!("cut edge {e} does not have two ends")));
        }
        let after_end = if ends[0].0 != ends[1].0 || matches!(ends[0].1, End::Point(_)) {
            ends[0].1
        } else {
            match (t.before_slot(e), ends[0].1, ends[1].1) {
                (Some(s), End::Slot(i, s0), End::Slot(_, s1)) => End::Slot(i, if s == s0 { s1 } else { s0 }),
                _ => {
                    return Err(DiagramError::MalformedDiagram(format!(
                        "cannot orient cut edge {e}: both ends lie on the same line"
                    )))
                }
            }
        };
        let after = asm.fresh();
        match after_end {
            End::Slot(i, s) => crossings[i][s] = after,
            End::Point(Terminal::P1) => legs[0] = after,
            End::Point(Terminal::P2) => legs[1] = after,
        }
        band_in.push(e);
        band_out.push(after);
    }
    let band = band_in.len();
    asm.frontier = vec![legs[0], legs[1]];
    asm.frontier.extend(&band_in);
    for op in c.emit(band) {
        asm.apply(op)?;
    }
    let finals = asm.frontier.clone();
    for (a, b) in finals.into_iter().zip(band_out) {
        if let Some(r) = asm.join(a, b) {
            asm.loops.push(r);
        }
    }
    let contractible = t.loops.iter().filter(|&&e| t.membrane(e).is_multiple_of(2)).count();
    let mut all: Vec<[EdgeId; 4]> = crossings;
    all.extend(asm.crossings.iter().copied());
    let mut relabel = std::collections::HashMap::new();
    let mut out = Vec::with_capacity(all.len());
    for x in &all {
        let mut y = [0; 4];
        for s in 0..4 {
            let r = asm.find(x[s]);
            let next = relabel.len() as EdgeId + 1;
            y[s] = *relabel.entry(r).or_insert(next);
        }
        out.push(y);
    }
    LinkDiagram::new(out, asm.loops.len() + contractible)
}
