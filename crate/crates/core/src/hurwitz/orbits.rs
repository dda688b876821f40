//! Orbits of the colored braid group on alternating tuples.
//!
//! Searching the colored subgroup directly would need explicit generators.
//! Instead each orbit is grown under every `sigma_i^{+-1}` of the full braid
//! group, tracking signs, and then cut down to the alternating states. A
//! braid carrying one alternating state to another preserves the labels, so
//! two alternating states share a colored orbit exactly when they share a
//! full orbit.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::tuple::act_encoded;
use super::{schur, HurwitzError, MonodromyTuple};
use crate::config::Budget;
use crate::group::{ConjClass, Elem, FiniteGroup, ReducedMultiplier};

/// Which alternating tuples to enumerate. The `0` strata also require a
/// trivial Schur invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stratum {
    RHat0,
    R0,
    RHat,
    R,
}

impl Stratum {
    fn onto(self) -> bool {
        matches!(self, Stratum::R | Stratum::R0)
    }

    fn sch_zero(self) -> bool {
        matches!(self, Stratum::RHat0 | Stratum::R0)
    }
}

impl FromStr for Stratum {
    type Err = HurwitzError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rhat0" => Ok(Stratum::RHat0),
            "r0" => Ok(Stratum::R0),
            "rhat" => Ok(Stratum::RHat),
            "r" => Ok(Stratum::R),
            _ => Err(HurwitzError::BadTuple(format!("unknown stratum `{s}` (rhat0, r0, rhat, r)"))),
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stratum::RHat0 => "rhat0",
            Stratum::R0 => "r0",
            Stratum::RHat => "rhat",
            Stratum::R => "r",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    /// Alternating states in the orbit.
    pub size: usize,
    /// States of every sign pattern reached by the full braid group.
    pub full_size: usize,
    /// Schur invariant of the smallest member, when a multiplier is given.
    pub sch: Option<Elem>,
    pub sch_constant: bool,
    /// Smallest alternating member.
    pub sample: MonodromyTuple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub k: usize,
    pub stratum: Stratum,
    pub class_size: usize,
    pub multiplier_order: Option<usize>,
    /// Alternating states in the stratum.
    pub slice_states: usize,
    pub states_visited: usize,
    /// Orbits sorted by their smallest member.
    pub orbits: Vec<OrbitInfo>,
    /// For each alternating state, in increasing order, its orbit index.
    pub membership: Vec<usize>,
    /// Orbits up to simultaneous conjugation by `G`, which commutes with the
    /// braid action and fixes the Schur invariant.
    pub conjugation_orbits: usize,
}

impl OrbitReport {
    pub fn sch_constant(&self) -> bool {
        self.orbits.iter().all(|o| o.sch_constant)
    }

    pub fn distinct_sch(&self) -> usize {
        self.orbits.iter().filter_map(|o| o.sch).collect::<HashSet<_>>().len()
    }

    /// True when orbits and Schur values are in bijection.
    pub fn sch_separates(&self) -> bool {
        self.sch_constant() && self.distinct_sch() == self.orbits.len()
    }
}

/// All alternating tuples of length `2k` with trivial product.
pub(crate) fn alternating_rhat(
    g: &FiniteGroup,
    class: &ConjClass,
    k: usize,
    budget: &Budget,
) -> Result<Vec<MonodromyTuple>, HurwitzError> {
    let n = 2 * k;
    let space = (class.size() as u64).checked_pow((n - 1) as u32).unwrap_or(u64::MAX);
    if space > budget.states {
        return Err(HurwitzError::BudgetExceeded(budget.states));
    }
    let inv: Vec<Elem> = class.members().iter().map(|&x| g.inv(x)).collect();
    let mut out = Vec::new();
    let mut cur = vec![g.identity(); n];
    fn rec(
        g: &FiniteGroup,
        class: &ConjClass,
        inv: &[Elem],
        cur: &mut Vec<Elem>,
        pos: usize,
        prod: Elem,
        out: &mut Vec<MonodromyTuple>,
    ) {
        let n = cur.len();
        if pos == n - 1 {
            // The last entry is forced; it sits at an even position.
            let last = g.inv(prod);
            if class.contains(g.inv(last)) {
                cur[pos] = last;
                out.push(MonodromyTuple::alternating(cur.clone()));
            }
            return;
        }
        let choices = if pos.is_multiple_of(2) { class.members() } else { inv };
        for &x in choices {
            cur[pos] = x;
            rec(g, class, inv, cur, pos + 1, g.mul(prod, x), out);
        }
    }
    rec(g, class, &inv, &mut cur, 0, g.identity(), &mut out);
    out.sort();
    Ok(out)
}

/// Filters alternating `R-hat` tuples down to a stratum.
pub(crate) fn in_stratum(
    g: &FiniteGroup,
    t: &MonodromyTuple,
    stratum: Stratum,
    rm: Option<&ReducedMultiplier>,
) -> Result<bool, HurwitzError> {
    if stratum.onto() && !g.generates(t.elems()) {
        return Ok(false);
    }
    if stratum.sch_zero() {
        let rm = rm.ok_or(HurwitzError::MissingMultiplier)?;
        return Ok(schur(t, rm)? == rm.quotient().cover().identity());
    }
    Ok(true)
}

pub fn enumerate_orbits(
    k: usize,
    g: &FiniteGroup,
    class: &ConjClass,
    rm: Option<&ReducedMultiplier>,
    stratum: Stratum,
    budget: &Budget,
) -> Result<OrbitReport, HurwitzError> {
    if k == 0 {
        return Err(HurwitzError::BadTuple("k must be positive".into()));
    }
    let mut slice = Vec::new();
    for t in alternating_rhat(g, class, k, budget)? {
        if in_stratum(g, &t, stratum, rm)? {
            slice.push(t);
        }
    }
    let index: HashMap<Vec<u32>, usize> = slice.iter().enumerate().map(|(i, t)| (t.encode(), i)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut gens: Vec<i32> = (1..2 * k as i32).flat_map(|i| [i, -i]).collect();
    gens.shuffle(&mut rng);
    let mut starts: Vec<usize> = (0..slice.len()).collect();
    starts.shuffle(&mut rng);

    let mut orbit_of = vec![usize::MAX; slice.len()];
    let mut raw: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut visited_total = 0usize;
    for s in starts {
        if orbit_of[s] != usize::MAX {
            continue;
        }
        let id = raw.len();
        let start = slice[s].encode();
        let mut seen: HashSet<Vec<u32>> = HashSet::from([start.clone()]);
        let mut frontier = vec![start];
        let mut members = Vec::new();
        while !frontier.is_empty() {
            for st in &frontier {
                if let Some(&i) = index.get(st) {
                    orbit_of[i] = id;
                    members.push(i);
                }
            }
            let next: Vec<Vec<u32>> = frontier
                .par_iter()
                .flat_map_iter(|st| {
                    gens.iter().map(move |&l| {
                        let mut x = st.clone();
                        act_encoded(g, &mut x, l);
                        x
                    })
                })
                .collect();
            frontier = Vec::new();
            for x in next {
                if !seen.contains(&x) {
                    seen.insert(x.clone());
                    frontier.push(x);
                }
            }
            if (visited_total + seen.len()) as u64 > budget.states {
                return Err(HurwitzError::BudgetExceeded(budget.states));
            }
        }
        visited_total += seen.len();
        raw.push((members, seen.len()));
    }

    // Canonical order: by smallest member.
    for (members, _) in raw.iter_mut() {
        members.sort_unstable();
    }
    raw.sort_by_key(|(m, _)| m[0]);
    let mut membership = vec![0; slice.len()];
    let mut orbits = Vec::with_capacity(raw.len());
    for (oi, (members, full)) in raw.iter().enumerate() {
        for &i in members {
            membership[i] = oi;
        }
        let (sch, sch_constant) = match rm {
            Some(rm) => {
                let vals: Vec<Elem> = members
                    .par_iter()
                    .map(|&i| schur(&slice[i], rm))
                    .collect::<Result<_, _>>()?;
                (Some(vals[0]), vals.iter().all(|&v| v == vals[0]))
            }
            None => (None, true),
        };
        orbits.push(OrbitInfo {
            size: members.len(),
            full_size: *full,
            sch,
            sch_constant,
            sample: slice[members[0]].clone(),
        });
    }
    let mut parent: Vec<usize> = (0..orbits.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for h in g.greedy_generators() {
        for (oi, o) in orbits.iter().enumerate() {
            let moved = o.sample.map(|x| g.conj(h, x)).encode();
            let j = membership[index[&moved]];
            let (a, b) = (find(&mut parent, oi), find(&mut parent, j));
            parent[a.max(b)] = a.min(b);
        }
    }
    let conjugation_orbits = (0..orbits.len()).filter(|&i| find(&mut parent, i) == i).count();
    Ok(OrbitReport {
        k,
        conjugation_orbits,
        stratum,
        class_size: class.size(),
        multiplier_order: rm.map(|r| r.order()),
        slice_states: slice.len(),
        states_visited: visited_total,
        orbits,
        membership,
    })
}
