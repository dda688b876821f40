//! Bidirectional search for a pure braid with a prescribed action.
//!
//! A word `w = u v` (apply `u` first) acts on a state `x` as `v(u(x))`. The
//! forward side grows `u` from the identity and stores the images `u(x)`
//! of every tracked state; the backward side grows `v` by prepending
//! generators and stores `v^-1(T(x))`. A common vector closes a word.

use std::collections::HashMap;

use super::tuple::act_encoded;
use super::{schur, HurwitzError, MonodromyTuple};
use crate::config::Budget;
use crate::diagram::BraidWord;
use crate::group::{FiniteGroup, ReducedMultiplier};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(BraidWord),
    /// No word within the depth and state caps.
    NotFound { explored: usize },
    /// The target moves an invariant of the action, so no braid realises it.
    Rejected(String),
}

struct Side {
    vectors: Vec<Vec<Vec<u32>>>,
    /// (parent index, generator index)
    parent: Vec<Option<(usize, usize)>>,
    index: HashMap<Vec<Vec<u32>>, usize>,
    layer: Vec<usize>,
}

impl Side {
    fn new(start: Vec<Vec<u32>>) -> Self {
        Side {
            vectors: vec![start.clone()],
            parent: vec![None],
            index: HashMap::from([(start, 0)]),
            layer: vec![0],
        }
    }

    fn path(&self, mut i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        while let Some((p, gi)) = self.parent[i] {
            out.push(gi);
            i = p;
        }
        out.reverse();
        out
    }
}

/// Searches pure words in the generators `A_ij^{+-1}` on `strands` strands
/// sending `states[i]` to `states[target[i]]` and fixing every tuple in
/// `fixed`. The caps are `budget.depth` generators and `budget.states`
/// stored vectors.
pub fn gadget_search(
    g: &FiniteGroup,
    strands: usize,
    states: &[MonodromyTuple],
    target: &[usize],
    fixed: &[MonodromyTuple],
    rm: Option<&ReducedMultiplier>,
    budget: &Budget,
) -> Result<SearchOutcome, HurwitzError> {
    if target.len() != states.len() || target.iter().any(|&t| t >= states.len()) {
        return Err(HurwitzError::BadTuple("target is not a map on the state list".into()));
    }
    for t in states.iter().chain(fixed) {
        if t.len() != strands {
            return Err(HurwitzError::StrandMismatch { braid: strands, tuple: t.len() });
        }
    }
    if target.iter().enumerate().all(|(i, &t)| i == t || states[i] == states[t]) {
        return Ok(SearchOutcome::Found(BraidWord::identity(strands)));
    }
    for (i, &t) in target.iter().enumerate() {
        let (a, b) = (&states[i], &states[t]);
        if a.signs() != b.signs() {
            return Ok(SearchOutcome::Rejected(format!("state {i}: a pure braid keeps the signs")));
        }
        if a.boundary_product(g) != b.boundary_product(g) {
            return Ok(SearchOutcome::Rejected(format!("state {i}: boundary product differs")));
        }
        if let Some(rm) = rm {
            if a.boundary_product(g) == g.identity() && schur(a, rm)? != schur(b, rm)? {
                return Ok(SearchOutcome::Rejected(format!("state {i}: Schur invariant differs")));
            }
        }
    }

    let mut gens: Vec<BraidWord> = Vec::new();
    for i in 1..strands {
        for j in i + 1..=strands {
            for e in [1, -1] {
                gens.push(BraidWord::pure_generator(strands, i, j, e).expect("indices in range"));
            }
        }
    }
    let inverse_of = |gi: usize| gi ^ 1;
    let apply = |vec: &[Vec<u32>], w: &BraidWord| -> Vec<Vec<u32>> {
        vec.iter()
            .map(|s| {
                let mut s = s.clone();
                for &l in w.letters() {
                    act_encoded(g, &mut s, l);
                }
                s
            })
            .collect()
    };

    let start: Vec<Vec<u32>> = states.iter().chain(fixed).map(|t| t.encode()).collect();
    let goal: Vec<Vec<u32>> =
        target.iter().map(|&t| states[t].encode()).chain(fixed.iter().map(|t| t.encode())).collect();
    let mut fwd = Side::new(start);
    let mut bwd = Side::new(goal);
    let (mut df, mut db) = (0, 0);
    let word_from = |fwd: &Side, bwd: &Side, fi: usize, bi: usize| -> BraidWord {
        let mut w = BraidWord::identity(strands);
        for gi in fwd.path(fi) {
            w = w.concat(&gens[gi]);
        }
        for gi in bwd.path(bi).into_iter().rev() {
            w = w.concat(&gens[gi]);
        }
        w
    };
    if let Some(&bi) = bwd.index.get(&fwd.vectors[0]) {
        return Ok(SearchOutcome::Found(word_from(&fwd, &bwd, 0, bi)));
    }
    while df + db < budget.depth {
        let forward = fwd.layer.len() <= bwd.layer.len();
        let (side, other) = if forward { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        let mut next = Vec::new();
        for &i in &side.layer {
            for (gi, w) in gens.iter().enumerate() {
                // The backward side applies inverses: v' = h v gives
                // v'^-1 = v^-1 h^-1.
                let step = if forward { w.clone() } else { gens[inverse_of(gi)].clone() };
                let v = apply(&side.vectors[i], &step);
                if side.index.contains_key(&v) {
                    continue;
                }
                let id = side.vectors.len();
                side.index.insert(v.clone(), id);
                side.vectors.push(v);
                side.parent.push(Some((i, gi)));
                next.push(id);
                if let Some(&j) = other.index.get(&side.vectors[id]) {
                    let (fi, bi) = if forward { (id, j) } else { (j, id) };
                    return Ok(SearchOutcome::Found(word_from(&fwd, &bwd, fi, bi)));
                }
                if (fwd_len(side, other)) as u64 > budget.states {
                    return Ok(SearchOutcome::NotFound { explored: fwd_len(side, other) });
                }
            }
        }
        side.layer = next;
        if forward {
            df += 1;
        } else {
            db += 1;
        }
        if side.layer.is_empty() {
            break;
        }
    }
    Ok(SearchOutcome::NotFound { explored: fwd.vectors.len() + bwd.vectors.len() })
}

fn fwd_len(a: &Side, b: &Side) -> usize {
    a.vectors.len() + b.vectors.len()
}
