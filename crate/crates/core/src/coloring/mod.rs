//! Counting colorings of diagrams by a conjugacy class.
//!
//! A coloring sends every arc to an element of the class so that each
//! crossing satisfies its Wirtinger relation. Counts are exact `u64`s;
//! overflow is an error, never a wrap.

mod solver;
mod transfer;

pub use transfer::plat_transfer_count;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diagram::{DiagramError, KnotDiagram};
use crate::group::{automorphism_group, ConjClass, Elem, FiniteGroup, GroupError};
use solver::Solver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("count does not fit in 64 bits")]
    Overflow,
    #[error("element {0} is not in the coloring class")]
    NotInClass(u32),
    #[error("{count} is not divisible by {by}; the automorphism action is not free")]
    DivisibilityViolation { count: u64, by: u64 },
    #[error("arc {0} does not exist")]
    UnknownArc(usize),
    #[error("tuple signs at positions {0} and {1} are not opposite across a cap")]
    SignMismatch(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl CountError {
    pub fn code(&self) -> &'static str {
        match self {
            CountError::Overflow => "count.overflow",
            CountError::NotInClass(_) => "count.not_in_class",
            CountError::DivisibilityViolation { .. } => "count.divisibility",
            CountError::UnknownArc(_) => "count.unknown_arc",
            CountError::SignMismatch(..) => "count.sign_mismatch",
            CountError::Diagram(e) => e.code(),
            CountError::Group(e) => e.code(),
        }
    }
}

/// `#H(K; G, C)`: all colorings of `d` by `class`.
pub fn count_colorings(d: &KnotDiagram, g: &FiniteGroup, class: &ConjClass) -> Result<u64, CountError> {
    Solver::new(d, g, class, d.base_arc()).count(&[])
}

/// Colorings with `arc` colored `c`.
pub fn count_pinned(d: &KnotDiagram, arc: usize, g: &FiniteGroup, class: &ConjClass, c: Elem) -> Result<u64, CountError> {
    if arc >= d.arc_count() {
        return Err(CountError::UnknownArc(arc));
    }
    if !class.contains(c) {
        return Err(CountError::NotInClass(c.0));
    }
    Solver::new(d, g, class, arc).count(&[(arc, c)])
}

/// Surjective counts and `#Q` for a diagram, pinned at its base arc to the
/// class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCount {
    pub pinned: u64,
    pub surjective_pinned: u64,
    /// `surjective_pinned / |Aut(G, c)|`.
    pub q: u64,
    /// Surjective colorings with no pin: `|C| * surjective_pinned`.
    pub surjective_total: u64,
    pub aut_point: u64,
    pub aut_class: u64,
    pub class_size: u64,
}

fn exact_div(count: u64, by: u64) -> Result<u64, CountError> {
    if by == 0 || !count.is_multiple_of(by) {
        return Err(CountError::DivisibilityViolation { count, by });
    }
    Ok(count / by)
}

fn image(g: &FiniteGroup, vals: &[u32]) -> Vec<Elem> {
    let mut gens: Vec<Elem> = vals.iter().map(|&v| Elem(v)).collect();
    gens.sort_unstable();
    gens.dedup();
    g.subgroup_closure(&gens)
}

pub fn count_q(d: &KnotDiagram, g: &FiniteGroup, class: &ConjClass) -> Result<QCount, CountError> {
    let c = class.representative();
    let base = d.base_arc();
    let solver = Solver::new(d, g, class, base);
    let (pinned, surjective_pinned) = solver.run(
        &[(base, c)],
        || 0u64,
        |acc, vals| {
            if image(g, vals).len() == g.order() {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )?;
    let aut = automorphism_group(g)?;
    let aut_point = aut.aut_point(c).order() as u64;
    let aut_class = aut.aut_class(class).order() as u64;
    let q = exact_div(surjective_pinned, aut_point)?;
    let class_size = class.size() as u64;
    let surjective_total = surjective_pinned.checked_mul(class_size).ok_or(CountError::Overflow)?;
    Ok(QCount { pinned, surjective_pinned, q, surjective_total, aut_point, aut_class, class_size })
}

/// One conjugacy class of image subgroups `J` containing the pinned value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakdownRow {
    pub order: usize,
    pub cyclic: bool,
    /// Generators of the smallest conjugate of `J`, formatted.
    pub descriptor: String,
    /// Pinned colorings with image exactly a member of this class.
    pub pinned: u64,
    /// `sum_J q_J` over the images `J` met.
    pub q: u64,
    /// `sum_J |C| * |Aut(J, c)| * q_J`.
    pub contribution: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakdown {
    pub rows: Vec<BreakdownRow>,
    pub total: u64,
    pub reconstructed: u64,
}

impl Breakdown {
    pub fn is_consistent(&self) -> bool {
        self.total == self.reconstructed
    }

    /// True when every image is cyclic or the whole group.
    pub fn only_cyclic_and_full(&self, group_order: usize) -> bool {
        self.rows.iter().all(|r| r.cyclic || r.order == group_order)
    }
}

/// Pinned colorings sorted by their exact image, then summed over the
/// subgroups `J` that contain `c`:
/// `#H = sum_J |C| * |Aut(J, c)| * #Q(K; J, E_J)`, where `E_J` is the
/// `J`-class of `c`.
pub fn image_breakdown(d: &KnotDiagram, g: &FiniteGroup, class: &ConjClass) -> Result<Breakdown, CountError> {
    let c = class.representative();
    let base = d.base_arc();
    let total = count_colorings(d, g, class)?;
    let solver = Solver::new(d, g, class, base);
    let (_, by_image) = solver.run(
        &[(base, c)],
        BTreeMap::<Vec<Elem>, u64>::new,
        |acc, vals| *acc.entry(image(g, vals)).or_insert(0) += 1,
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )?;
    let class_size = class.size() as u64;
    let mut rows: BTreeMap<(usize, Vec<Elem>), BreakdownRow> = BTreeMap::new();
    for (j, pinned) in by_image {
        let (sub, embed) = g.subgroup(format!("J{}", j.len()), &j)?;
        let local = Elem(embed.binary_search(&c).expect("the pinned value lies in its image") as u32);
        let aut_jc = automorphism_group(&sub)?.aut_point(local).order() as u64;
        let q = exact_div(pinned, aut_jc)?;
        let key = canonical_conjugate(g, &j);
        let row = rows.entry((j.len(), key.clone())).or_insert_with(|| {
            let mut gens = sub.greedy_generators().iter().map(|x| embed[x.index()]).collect::<Vec<_>>();
            if j.len() == g.order() {
                gens = g.greedy_generators();
            }
            BreakdownRow {
                order: j.len(),
                cyclic: sub.greedy_generators().len() <= 1,
                descriptor: describe(g, &j, &gens),
                pinned: 0,
                q: 0,
                contribution: 0,
            }
        });
        let add = class_size
            .checked_mul(aut_jc)
            .and_then(|x| x.checked_mul(q))
            .ok_or(CountError::Overflow)?;
        row.pinned += pinned;
        row.q += q;
        row.contribution = row.contribution.checked_add(add).ok_or(CountError::Overflow)?;
    }
    let rows: Vec<BreakdownRow> = rows.into_values().collect();
    let mut reconstructed = 0u64;
    for r in &rows {
        reconstructed = reconstructed.checked_add(r.contribution).ok_or(CountError::Overflow)?;
    }
    Ok(Breakdown { rows, total, reconstructed })
}

fn describe(g: &FiniteGroup, j: &[Elem], gens: &[Elem]) -> String {
    if j.len() == g.order() {
        return g.name().to_string();
    }
    let parts: Vec<String> = gens.iter().map(|&x| g.format_elem(x)).collect();
    format!("<{}>", parts.join(", "))
}

/// The lexicographically smallest sorted conjugate `hJh^-1`.
fn canonical_conjugate(g: &FiniteGroup, j: &[Elem]) -> Vec<Elem> {
    g.elements()
        .map(|h| {
            let mut v: Vec<Elem> = j.iter().map(|&x| g.conj(h, x)).collect();
            v.sort_unstable();
            v
        })
        .min()
        .expect("groups are nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::group::conjugacy_class;

    const TREFOIL: &str = "X+[3,1,2]\nX+[1,2,3]\nX+[2,3,1]\n";

    fn s3() -> (FiniteGroup, ConjClass) {
        let g = FiniteGroup::symmetric(3);
        let c = conjugacy_class(&g, g.resolve("(1 2)").unwrap());
        (g, c)
    }

    /// Every assignment of class members to arcs, checked relation by relation.
    fn brute(d: &KnotDiagram, g: &FiniteGroup, class: &ConjClass, pin: Option<(usize, Elem)>) -> u64 {
        let n = d.arc_count();
        let m = class.members();
        let pres = d.wirtinger();
        let mut count = 0;
        let mut idx = vec![0usize; n];
        loop {
            let x: Vec<Elem> = idx.iter().map(|&i| m[i]).collect();
            if pin.is_none_or(|(a, c)| x[a] == c) && pres.is_satisfied(g, &x) {
                count += 1;
            }
            let mut p = 0;
            while p < n {
                idx[p] += 1;
                if idx[p] < m.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == n {
                return count;
            }
        }
    }

    #[test]
    fn trefoil_counts() {
        let d = parse_pd(TREFOIL).unwrap();
        let (g, c) = s3();
        assert_eq!(count_colorings(&d, &g, &c).unwrap(), 9);
        assert_eq!(brute(&d, &g, &c, None), 9);
        for a in 0..3 {
            for &x in c.members() {
                assert_eq!(count_pinned(&d, a, &g, &c, x).unwrap(), 3);
            }
        }
        let q = count_q(&d, &g, &c).unwrap();
        assert_eq!((q.pinned, q.surjective_pinned, q.q, q.surjective_total), (3, 2, 1, 6));
        assert_eq!((q.aut_point, q.aut_class), (2, 6));
        assert_eq!(9, q.class_size + q.aut_class * q.q);
    }

    #[test]
    fn trefoil_breakdown() {
        let d = parse_pd(TREFOIL).unwrap();
        let (g, c) = s3();
        let b = image_breakdown(&d, &g, &c).unwrap();
        assert!(b.is_consistent());
        assert_eq!(b.total, 9);
        let rows: Vec<(usize, u64, u64)> = b.rows.iter().map(|r| (r.order, r.pinned, r.contribution)).collect();
        assert_eq!(rows, vec![(2, 1, 3), (6, 2, 6)]);
        assert!(b.only_cyclic_and_full(6));
    }

    #[test]
    fn unknot_and_singleton_class() {
        let d = parse_pd("O[1]\n").unwrap();
        let a5 = FiniteGroup::alternating(5);
        let c = conjugacy_class(&a5, a5.resolve("(1 2 3 4 5)").unwrap());
        assert_eq!(count_colorings(&d, &a5, &c).unwrap(), 12);
        let q = count_q(&d, &a5, &c).unwrap();
        assert_eq!((q.pinned, q.surjective_pinned, q.q), (1, 0, 0));
        let z3 = FiniteGroup::cyclic(3);
        let one = conjugacy_class(&z3, Elem(1));
        let t = parse_pd(TREFOIL).unwrap();
        assert_eq!(count_colorings(&t, &z3, &one).unwrap(), 1);
    }

    #[test]
    fn pin_outside_class() {
        let d = parse_pd(TREFOIL).unwrap();
        let (g, c) = s3();
        assert_eq!(count_pinned(&d, 0, &g, &c, g.identity()), Err(CountError::NotInClass(0)));
        assert_eq!(count_pinned(&d, 7, &g, &c, c.representative()), Err(CountError::UnknownArc(7)));
    }

    #[test]
    fn figure_eight_against_brute_force() {
        let d = crate::diagram::from_pd4("X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]").unwrap();
        let a4 = FiniteGroup::alternating(4);
        let c = conjugacy_class(&a4, a4.resolve("(1 2 3)").unwrap());
        let a5 = FiniteGroup::alternating(5);
        let c5 = conjugacy_class(&a5, a5.resolve("(1 2 3 4 5)").unwrap());
        for (g, c) in [(&a4, &c), (&a5, &c5)] {
            let n = count_colorings(&d, g, c).unwrap();
            assert_eq!(n, brute(&d, g, c, None));
            let p = count_pinned(&d, 0, g, c, c.representative()).unwrap();
            assert_eq!(n, p * c.size() as u64);
            let b = image_breakdown(&d, g, c).unwrap();
            assert!(b.is_consistent());
        }
    }
}
