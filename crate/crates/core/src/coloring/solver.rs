//! Backtracking with propagation over Wirtinger constraints.
//!
//! Arcs are branched in a fixed order: breadth-first from the base arc,
//! always expanding the smallest arc id first. A crossing with two known
//! arcs among `(over, under_in)` or `(over, under_out)` fixes the third;
//! a crossing with all three known is checked.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use super::CountError;
use crate::diagram::{wirtinger_in, wirtinger_out, Crossing, KnotDiagram};
use crate::group::{ConjClass, Elem, FiniteGroup};

const NONE: u32 = u32::MAX;

pub(crate) struct Solver<'a> {
    g: &'a FiniteGroup,
    domain: &'a ConjClass,
    xs: &'a [Crossing],
    incident: Vec<Vec<usize>>,
    order: Vec<usize>,
}

/// Branching order: BFS from `start` through crossings, smallest id first.
pub(crate) fn branch_order(d: &KnotDiagram, start: usize) -> Vec<usize> {
    let adj = d.neighbours();
    let n = d.arc_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut heap = BinaryHeap::new();
    let mut next_root = 0;
    heap.push(Reverse(start));
    seen[start] = true;
    loop {
        while let Some(Reverse(a)) = heap.pop() {
            order.push(a);
            for &b in &adj[a] {
                if !std::mem::replace(&mut seen[b], true) {
                    heap.push(Reverse(b));
                }
            }
        }
        while next_root < n && seen[next_root] {
            next_root += 1;
        }
        if next_root == n {
            break;
        }
        seen[next_root] = true;
        heap.push(Reverse(next_root));
    }
    order
}

struct State {
    vals: Vec<u32>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> Solver<'a> {
    pub(crate) fn new(d: &'a KnotDiagram, g: &'a FiniteGroup, domain: &'a ConjClass, start: usize) -> Self {
        let mut incident = vec![Vec::new(); d.arc_count()];
        for (k, x) in d.crossings().iter().enumerate() {
            for a in [x.over, x.under_in, x.under_out] {
                if !incident[a].contains(&k) {
                    incident[a].push(k);
                }
            }
        }
        Solver { g, domain, xs: d.crossings(), incident, order: branch_order(d, start) }
    }

    fn set(&self, st: &mut State, arc: usize, v: Elem) -> bool {
        if !self.domain.contains(v) {
            return false;
        }
        st.vals[arc] = v.0;
        st.trail.push(arc);
        st.queue.push(arc);
        true
    }

    /// Assigns and propagates; false on a contradiction.
    fn assign(&self, st: &mut State, arc: usize, v: Elem) -> bool {
        st.queue.clear();
        if !self.set(st, arc, v) {
            return false;
        }
        while let Some(a) = st.queue.pop() {
            for &k in &self.incident[a] {
                let x = self.xs[k];
                let (o, i, u) = (st.vals[x.over], st.vals[x.under_in], st.vals[x.under_out]);
                if o == NONE {
                    continue;
                }
                match (i == NONE, u == NONE) {
                    (false, true) => {
                        let out = wirtinger_out(self.g, x.sign, Elem(o), Elem(i));
                        if !self.set(st, x.under_out, out) {
                            return false;
                        }
                    }
                    (true, false) => {
                        let inn = wirtinger_in(self.g, x.sign, Elem(o), Elem(u));
                        if !self.set(st, x.under_in, inn) {
                            return false;
                        }
                    }
                    (false, false) => {
                        if wirtinger_out(self.g, x.sign, Elem(o), Elem(i)).0 != u {
                            return false;
                        }
                    }
                    (true, true) => {}
                }
            }
        }
        true
    }

    fn undo(&self, st: &mut State, mark: usize) {
        while st.trail.len() > mark {
            let a = st.trail.pop().expect("trail above mark");
            st.vals[a] = NONE;
        }
    }

    fn dfs<A>(&self, st: &mut State, pos: usize, acc: &mut A, visit: &(impl Fn(&mut A, &[u32]) + Sync)) -> Result<u64, CountError> {
        let mut pos = pos;
        while pos < self.order.len() && st.vals[self.order[pos]] != NONE {
            pos += 1;
        }
        if pos == self.order.len() {
            visit(acc, &st.vals);
            return Ok(1);
        }
        let arc = self.order[pos];
        let mut total = 0u64;
        for &v in self.domain.members() {
            let mark = st.trail.len();
            if self.assign(st, arc, v) {
                let n = self.dfs(st, pos + 1, acc, visit)?;
                total = total.checked_add(n).ok_or(CountError::Overflow)?;
            }
            self.undo(st, mark);
        }
        Ok(total)
    }

    /// Counts solutions extending `fixed`, folding each solution into an
    /// accumulator. The first free branching arc is split across threads.
    pub(crate) fn run<A: Send>(
        &self,
        fixed: &[(usize, Elem)],
        init: impl Fn() -> A + Sync,
        visit: impl Fn(&mut A, &[u32]) + Sync,
        merge: impl Fn(A, A) -> A + Sync,
    ) -> Result<(u64, A), CountError> {
        let n = self.incident.len();
        let mut st = State { vals: vec![NONE; n], trail: Vec::new(), queue: Vec::new() };
        for &(a, v) in fixed {
            if st.vals[a] != NONE {
                if st.vals[a] != v.0 {
                    return Ok((0, init()));
                }
                continue;
            }
            if !self.assign(&mut st, a, v) {
                return Ok((0, init()));
            }
        }
        let mut pos = 0;
        while pos < self.order.len() && st.vals[self.order[pos]] != NONE {
            pos += 1;
        }
        if pos == self.order.len() {
            let mut acc = init();
            visit(&mut acc, &st.vals);
            return Ok((1, acc));
        }
        let arc = self.order[pos];
        let base_vals = st.vals.clone();
        let parts: Vec<Result<(u64, A), CountError>> = self
            .domain
            .members()
            .par_iter()
            .map(|&v| {
                let mut st = State { vals: base_vals.clone(), trail: Vec::new(), queue: Vec::new() };
                let mut acc = init();
                if !self.assign(&mut st, arc, v) {
                    return Ok((0, acc));
                }
                let n = self.dfs(&mut st, pos + 1, &mut acc, &visit)?;
                Ok((n, acc))
            })
            .collect();
        let mut total = 0u64;
        let mut acc = init();
        for part in parts {
            let (n, a) = part?;
            total = total.checked_add(n).ok_or(CountError::Overflow)?;
            acc = merge(acc, a);
        }
        Ok((total, acc))
    }

    pub(crate) fn count(&self, fixed: &[(usize, Elem)]) -> Result<u64, CountError> {
        self.run(fixed, || (), |_, _| {}, |_, _| ()).map(|(n, _)| n)
    }
}
