//! Oriented knot and link diagrams.
//!
//! A crossing is `(sign, over, under_in, under_out)`: the under strand runs
//! from arc `under_in` to arc `under_out` beneath arc `over`. The Wirtinger
//! relation for a coloring `x` is
//!
//! * positive crossing: `x[under_out] = x[over]^-1 * x[under_in] * x[over]`
//! * negative crossing: `x[under_out] = x[over] * x[under_in] * x[over]^-1`
//!
//! Text format, one record per line or separated by spaces:
//!
//! ```text
//! X+[3,1,2]
//! X+[1,2,3]
//! X+[2,3,1]
//! ```
//!
//! `O[a]` declares arc `a` as a closed circle that never passes under, and an
//! optional `meridian <a>` line designates a base arc.

mod braid;
mod pd4;
mod plat;

pub use braid::BraidWord;
pub use pd4::from_pd4;
pub use plat::{default_signs, plat_closure, plat_closure_with_signs, PlatPairing};

use std::fmt;

use thiserror::Error;

use crate::group::{Elem, FiniteGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("arc {0} is dangling: it must start and end at an undercrossing exactly once")]
    DanglingArc(u32),
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("arc {0} is declared as a circle but passes under a crossing")]
    BadCircle(u32),
    #[error("unknown arc {0}")]
    UnknownArc(u32),
    #[error("braid letter {letter} is out of range for {strands} strands")]
    BadLetter { letter: i32, strands: usize },
    #[error("plat pairing is not a non-crossing perfect matching: {0}")]
    CrossingMatching(String),
    #[error("braid has {braid} strands but the pairing has {pairing}")]
    StrandMismatch { braid: usize, pairing: usize },
    #[error("strand signs are inconsistent with the caps at position {0}")]
    SignMismatch(usize),
    #[error("cannot infer orientation: {0}")]
    Orientation(String),
}

impl DiagramError {
    pub fn code(&self) -> &'static str {
        match self {
            DiagramError::Malformed { .. } => "diagram.malformed",
            DiagramError::DanglingArc(_) => "diagram.dangling_arc",
            DiagramError::Disconnected => "diagram.disconnected",
            DiagramError::BadCircle(_) => "diagram.bad_circle",
            DiagramError::UnknownArc(_) => "diagram.unknown_arc",
            DiagramError::BadLetter { .. } => "braid.bad_letter",
            DiagramError::CrossingMatching(_) => "plat.crossing_matching",
            DiagramError::StrandMismatch { .. } => "plat.strand_mismatch",
            DiagramError::SignMismatch(_) => "plat.sign_mismatch",
            DiagramError::Orientation(_) => "pd4.orientation",
        }
    }
}

/// A signed crossing on dense arc indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: i8,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

/// `x[under_out]` from `x[over]` and `x[under_in]`.
#[inline]
pub fn wirtinger_out(g: &FiniteGroup, sign: i8, over: Elem, under_in: Elem) -> Elem {
    if sign > 0 {
        g.mul(g.mul(g.inv(over), under_in), over)
    } else {
        g.conj(over, under_in)
    }
}

/// `x[under_in]` from `x[over]` and `x[under_out]`.
#[inline]
pub fn wirtinger_in(g: &FiniteGroup, sign: i8, over: Elem, under_out: Elem) -> Elem {
    wirtinger_out(g, -sign, over, under_out)
}

/// An oriented diagram. Arcs are dense indices `0..arc_count`, each carrying
/// an external label used in text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    crossings: Vec<Crossing>,
    labels: Vec<u32>,
    meridian: Option<usize>,
}

impl KnotDiagram {
    /// Validates crossings given on external labels. `circles` lists arcs
    /// that never pass under. With `connected`, split diagrams are rejected.
    pub fn from_labeled(
        crossings: &[(i8, u32, u32, u32)],
        circles: &[u32],
        meridian: Option<u32>,
        connected: bool,
    ) -> Result<Self, DiagramError> {
        let mut labels: Vec<u32> = crossings
            .iter()
            .flat_map(|&(_, o, i, u)| [o, i, u])
            .chain(circles.iter().copied())
            .collect();
        labels.sort_unstable();
        labels.dedup();
        let idx = |l: u32| labels.binary_search(&l).expect("collected above");
        let xs: Vec<Crossing> = crossings
            .iter()
            .map(|&(sign, o, i, u)| Crossing { sign, over: idx(o), under_in: idx(i), under_out: idx(u) })
            .collect();
        let mut ins = vec![0usize; labels.len()];
        let mut outs = vec![0usize; labels.len()];
        for x in &xs {
            ins[x.under_in] += 1;
            outs[x.under_out] += 1;
        }
        let mut is_circle = vec![false; labels.len()];
        for &c in circles {
            let a = idx(c);
            if std::mem::replace(&mut is_circle[a], true) || ins[a] + outs[a] > 0 {
                return Err(DiagramError::BadCircle(c));
            }
        }
        for a in 0..labels.len() {
            if !is_circle[a] && (ins[a] != 1 || outs[a] != 1) {
                return Err(DiagramError::DanglingArc(labels[a]));
            }
        }
        let meridian = match meridian {
            Some(m) => Some(labels.binary_search(&m).map_err(|_| DiagramError::UnknownArc(m))?),
            None => None,
        };
        let d = KnotDiagram { crossings: xs, labels, meridian };
        if d.labels.is_empty() {
            return Err(DiagramError::Malformed { line: 0, msg: "empty diagram".into() });
        }
        if connected && d.connected_parts() > 1 {
            return Err(DiagramError::Disconnected);
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arc_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, arc: usize) -> u32 {
        self.labels[arc]
    }

    /// Dense index of the arc with external label `label`.
    pub fn arc(&self, label: u32) -> Result<usize, DiagramError> {
        self.labels.binary_search(&label).map_err(|_| DiagramError::UnknownArc(label))
    }

    pub fn meridian(&self) -> Option<usize> {
        self.meridian
    }

    pub fn set_meridian(&mut self, arc: Option<usize>) {
        self.meridian = arc;
    }

    /// The meridian if set, arc 0 otherwise.
    pub fn base_arc(&self) -> usize {
        self.meridian.unwrap_or(0)
    }

    /// Arcs that never pass under a crossing.
    pub fn circles(&self) -> Vec<usize> {
        let mut under = vec![false; self.arc_count()];
        for x in &self.crossings {
            under[x.under_in] = true;
            under[x.under_out] = true;
        }
        (0..self.arc_count()).filter(|&a| !under[a]).collect()
    }

    /// Connected parts of the projection (arcs linked through crossings).
    pub fn connected_parts(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.arc_count()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let n = p[y];
                p[y] = r;
                y = n;
            }
            r
        }
        let mut parts = self.arc_count();
        for x in &self.crossings {
            for b in [x.under_in, x.under_out] {
                let (ra, rb) = (find(&mut parent, x.over), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    parts -= 1;
                }
            }
        }
        parts
    }

    /// Link components, each as its arcs in order of travel.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut next = vec![usize::MAX; self.arc_count()];
        for x in &self.crossings {
            next[x.under_in] = x.under_out;
        }
        let mut seen = vec![false; self.arc_count()];
        let mut out = Vec::new();
        for a in 0..self.arc_count() {
            if seen[a] {
                continue;
            }
            let mut comp = Vec::new();
            let mut b = a;
            while !seen[b] {
                seen[b] = true;
                comp.push(b);
                if next[b] == usize::MAX {
                    break;
                }
                b = next[b];
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Arcs adjacent through a crossing, for each arc.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.arc_count()];
        for x in &self.crossings {
            let arcs = [x.over, x.under_in, x.under_out];
            for &a in &arcs {
                for &b in &arcs {
                    if a != b && !adj[a].contains(&b) {
                        adj[a].push(b);
                    }
                }
            }
        }
        adj
    }

    pub fn wirtinger(&self) -> Presentation {
        Presentation { generators: self.labels.clone(), relations: self.crossings.clone() }
    }

    /// Serializes in the text format accepted by [`parse_pd`].
    pub fn to_pd(&self) -> String {
        let mut out = String::new();
        for x in &self.crossings {
            let s = if x.sign > 0 { '+' } else { '-' };
            out.push_str(&format!(
                "X{s}[{},{},{}]\n",
                self.labels[x.over], self.labels[x.under_in], self.labels[x.under_out]
            ));
        }
        for a in self.circles() {
            out.push_str(&format!("O[{}]\n", self.labels[a]));
        }
        if let Some(m) = self.meridian {
            out.push_str(&format!("meridian {}\n", self.labels[m]));
        }
        out
    }
}

/// Wirtinger presentation: one generator per arc, one relation per crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<u32>,
    pub relations: Vec<Crossing>,
}

impl Presentation {
    /// True when `x` (indexed by arc) satisfies every relation.
    pub fn is_satisfied(&self, g: &FiniteGroup, x: &[Elem]) -> bool {
        self.relations
            .iter()
            .all(|r| wirtinger_out(g, r.sign, x[r.over], x[r.under_in]) == x[r.under_out])
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|l| format!("x{l}")).collect();
        writeln!(f, "< {} |", gens.join(", "))?;
        for r in &self.relations {
            let (o, i, u) = (
                self.generators[r.over],
                self.generators[r.under_in],
                self.generators[r.under_out],
            );
            if r.sign > 0 {
                writeln!(f, "  x{u} = x{o}^-1 x{i} x{o}")?;
            } else {
                writeln!(f, "  x{u} = x{o} x{i} x{o}^-1")?;
            }
        }
        write!(f, ">")
    }
}

fn malformed(line: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Malformed { line, msg: msg.into() }
}

/// Crossings `(sign, over, in, out)`, circles, and the meridian if declared.
type Records = (Vec<(i8, u32, u32, u32)>, Vec<u32>, Option<u32>);

fn parse_records(text: &str) -> Result<Records, DiagramError> {
    let mut crossings = Vec::new();
    let mut circles = Vec::new();
    let mut meridian = None;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if let Some(rest) = l.strip_prefix("meridian") {
            let v = rest.trim().parse().map_err(|_| malformed(line, "expected `meridian <arc>`"))?;
            meridian = Some(v);
            continue;
        }
        let mut rest = l;
        loop {
            rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',' || c == ';');
            if rest.is_empty() {
                break;
            }
            let (head, sign) = if let Some(r) = rest.strip_prefix("X+") {
                (r, Some(1i8))
            } else if let Some(r) = rest.strip_prefix("X-") {
                (r, Some(-1))
            } else if let Some(r) = rest.strip_prefix('O') {
                (r, None)
            } else {
                return Err(malformed(line, format!("unexpected `{rest}`")));
            };
            let body_end = head.find(']').ok_or_else(|| malformed(line, "missing `]`"))?;
            let body = head
                .strip_prefix('[')
                .ok_or_else(|| malformed(line, "missing `[`"))?;
            let nums = body[..body_end - 1]
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| malformed(line, format!("bad arc `{}`", t.trim()))))
                .collect::<Result<Vec<_>, _>>()?;
            match (sign, nums.as_slice()) {
                (Some(s), [o, i, u]) => crossings.push((s, *o, *i, *u)),
                (None, [a]) => circles.push(*a),
                (Some(_), _) => return Err(malformed(line, "a crossing needs three arcs")),
                (None, _) => return Err(malformed(line, "a circle needs one arc")),
            }
            rest = &head[body_end + 1..];
        }
    }
    Ok((crossings, circles, meridian))
}

/// Parses a connected diagram.
pub fn parse_pd(text: &str) -> Result<KnotDiagram, DiagramError> {
    let (xs, os, m) = parse_records(text)?;
    KnotDiagram::from_labeled(&xs, &os, m, true)
}

/// Parses a diagram that may be split into several disjoint pieces.
pub fn parse_pd_allow_split(text: &str) -> Result<KnotDiagram, DiagramError> {
    let (xs, os, m) = parse_records(text)?;
    KnotDiagram::from_labeled(&xs, &os, m, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL: &str = "X+[3,1,2]\nX+[1,2,3]\nX+[2,3,1]\n";

    #[test]
    fn unknot_and_trefoil() {
        let u = parse_pd("O[1]").unwrap();
        assert_eq!((u.arc_count(), u.crossings().len(), u.component_count()), (1, 0, 1));
        let t = parse_pd(TREFOIL).unwrap();
        assert_eq!((t.arc_count(), t.crossings().len(), t.component_count()), (3, 3, 1));
        assert_eq!(t.wirtinger().relations.len(), 3);
    }

    #[test]
    fn dangling_and_malformed() {
        assert_eq!(parse_pd("X+[3,1,2]\nX+[1,2,3]\nX+[7,3,1]\n").unwrap_err(), DiagramError::DanglingArc(7));
        assert!(matches!(parse_pd("X*[1,2,3]"), Err(DiagramError::Malformed { line: 1, .. })));
        assert!(matches!(parse_pd("X+[1,2]"), Err(DiagramError::Malformed { .. })));
        assert_eq!(parse_pd("O[1] O[2]").unwrap_err(), DiagramError::Disconnected);
        assert_eq!(parse_pd_allow_split("O[1] O[2]").unwrap().component_count(), 2);
    }

    #[test]
    fn round_trip() {
        let mut t = parse_pd(TREFOIL).unwrap();
        t.set_meridian(Some(1));
        let back = parse_pd(&t.to_pd()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn presentation_text() {
        let p = parse_pd("X-[1,1,1]").unwrap().wirtinger();
        assert_eq!(p.to_string(), "< x1 |\n  x1 = x1 x1 x1^-1\n>");
    }
}
