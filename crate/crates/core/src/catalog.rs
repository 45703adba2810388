//! Built-in example tangles with their known invariants.

use std::fmt;
use std::str::FromStr;

use crate::bases::GraphIndex;
use crate::diagram::{LinkDiagram, TangleDiagram};
use crate::error::CatalogError;
use crate::laurent::{LaurentPoly, RationalFunction};
use crate::pairing::GraphCoeffs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    KrebesA,
    TangleD,
    TangleH,
    Fig6Complement,
}

impl CatalogName {
    pub const ALL: [CatalogName; 4] =
        [CatalogName::KrebesA, CatalogName::TangleD, CatalogName::TangleH, CatalogName::Fig6Complement];

    /// The three tangles with published graph basis coefficients.
    pub const TANGLES: [CatalogName; 3] = [CatalogName::KrebesA, CatalogName::TangleD, CatalogName::TangleH];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::KrebesA => "krebes_A",
            CatalogName::TangleD => "tangle_D",
            CatalogName::TangleH => "tangle_H",
            CatalogName::Fig6Complement => "fig6_complement",
        }
    }

    fn source(self) -> &'static str {
        match self {
            CatalogName::KrebesA => include_str!("../data/krebes_A.tangle"),
            CatalogName::TangleD => include_str!("../data/tangle_D.tangle"),
            CatalogName::TangleH => include_str!("../data/tangle_H.tangle"),
            CatalogName::Fig6Complement => include_str!("../data/fig6_complement.link"),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| CatalogError::UnknownName(s.to_string()))
    }
}

/// A diagram stored in the catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogDiagram {
    Tangle(TangleDiagram),
    Link(LinkDiagram),
}

/// An expected value together with a note on where it comes from.
#[derive(Debug, Clone, PartialEq)]
pub struct Golden<T> {
    pub value: T,
    pub source: &'static str,
}

fn golden<T>(value: T, source: &'static str) -> Golden<T> {
    Golden { value, source }
}

/// Generators of an expected ideal; `[1]` is the trivial ideal.
pub type IdealGens = Vec<LaurentPoly>;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub diagram: CatalogDiagram,
    pub coeffs: Option<Golden<GraphCoeffs>>,
    /// Expected even and odd ideals. For `tangle_H` only the unordered pair
    /// is asserted.
    pub even_ideal: Option<Golden<IdealGens>>,
    pub odd_ideal: Option<Golden<IdealGens>>,
    pub full_ideal_trivial: Option<Golden<bool>>,
    /// Expected integer contractions of the even and odd ideals.
    pub contractions: Option<Golden<(u64, u64)>>,
    pub bracket: Option<Golden<LaurentPoly>>,
    pub determinant: Option<Golden<u64>>,
}

impl CatalogEntry {
    pub fn tangle(&self) -> Option<&TangleDiagram> {
        match &self.diagram {
            CatalogDiagram::Tangle(t) => Some(t),
            CatalogDiagram::Link(_) => None,
        }
    }

    pub fn link(&self) -> Option<&LinkDiagram> {
        match &self.diagram {
            CatalogDiagram::Link(l) => Some(l),
            CatalogDiagram::Tangle(_) => None,
        }
    }
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().expect("catalog polynomial")
}

fn rf(num: &str, den: &str) -> RationalFunction {
    RationalFunction::new(lp(num), lp(den)).expect("catalog fraction")
}

fn coeffs(c01: RationalFunction, c21: RationalFunction, c23: RationalFunction) -> GraphCoeffs {
    [(0, 1, c01), (2, 1, c21), (2, 3, c23)]
        .into_iter()
        .map(|(i, e, c)| (GraphIndex::new(i, e).unwrap(), c))
        .collect()
}

fn gens(list: &[&str]) -> IdealGens {
    list.iter().map(|s| lp(s)).collect()
}

/// Loads a catalog entry by name, e.g. `"tangle_D"`.
pub fn load(name: &str) -> Result<CatalogEntry, CatalogError> {
    Ok(entry(name.parse()?))
}

pub fn entry(name: CatalogName) -> CatalogEntry {
    let diagram = match name {
        CatalogName::Fig6Complement => CatalogDiagram::Link(name.source().parse().expect("catalog link")),
        _ => CatalogDiagram::Tangle(name.source().parse().expect("catalog tangle")),
    };
    let mut e = CatalogEntry {
        name,
        diagram,
        coeffs: None,
        even_ideal: None,
        odd_ideal: None,
        full_ideal_trivial: None,
        contractions: None,
        bracket: None,
        determinant: None,
    };
    match name {
        CatalogName::KrebesA => {
            e.coeffs = Some(golden(
                coeffs(
                    rf("-1 - A^8 + A^12", "1 + A^4"),
                    rf("-1 + A^4 + A^12", "A^6 + A^10 + A^14"),
                    RationalFunction::one(),
                ),
                "graph basis coefficients of Krebes' tangle",
            ));
            e.even_ideal = Some(golden(gens(&["1"]), "even ideal of Krebes' tangle is trivial"));
            e.odd_ideal = Some(golden(gens(&["9", "4 + A^4"]), "odd ideal of Krebes' tangle"));
            e.full_ideal_trivial = Some(golden(true, "ordinary ideal of Krebes' tangle is trivial"));
            e.contractions = Some(golden((1, 3), "integer contraction of the odd ideal is 3"));
        }
        CatalogName::TangleD => {
            e.coeffs = Some(golden(
                coeffs(
                    rf("1 - A^4 - A^12", "A^2 + A^6"),
                    rf("1 + A^8 - A^12", "A^8 + A^12 + A^16"),
                    RationalFunction::from(lp("A^2")),
                ),
                "graph basis coefficients of tangle_D",
            ));
            e.even_ideal = Some(golden(gens(&["-9", "-2 + A^4"]), "even ideal of tangle_D"));
            e.odd_ideal = Some(golden(gens(&["1"]), "an odd closure is the unknot"));
            e.full_ideal_trivial = Some(golden(true, "contains the trivial odd ideal"));
            e.contractions = Some(golden((3, 1), "integer contraction of the even ideal is 3"));
        }
        CatalogName::TangleH => {
            e.coeffs = Some(golden(
                coeffs(
                    rf("-1 + 2*A^4 - 3*A^8 + 2*A^12 - 3*A^16 + 2*A^20 - A^24 + A^28", "A^12 + A^16"),
                    rf("-1 + A^4 - 2*A^8 + 3*A^12 - 2*A^16 + 3*A^20 - 2*A^24 + A^28", "A^18 + A^22 + A^26"),
                    RationalFunction::from(lp("A^4")),
                ),
                "graph basis coefficients of tangle_H",
            ));
            e.even_ideal = Some(golden(gens(&["5", "1 + A^4"]), "one parity has ideal <5, 1+A^4>"));
            e.odd_ideal = Some(golden(gens(&["9", "4 + A^4"]), "the other parity has ideal <9, 4+A^4>"));
            e.full_ideal_trivial = Some(golden(true, "the ordinary ideal is trivial"));
            e.contractions = Some(golden((3, 5), "contractions 3 and 5, attachment computed"));
        }
        CatalogName::Fig6Complement => {
            e.bracket = Some(golden(crate::laurent::delta(), "the odd closure is an unknot diagram"));
            e.determinant = Some(golden(1, "determinant of the unknot"));
        }
    }
    e
}
