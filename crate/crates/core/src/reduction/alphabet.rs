use std::collections::HashMap;

use super::ReductionError;
use crate::config::Budget;
use crate::group::{automorphism_group, AutGroup, ConjClass, Elem, FiniteGroup, ReducedMultiplier};
use crate::hurwitz::{schur, MonodromyTuple};

/// The alphabet `A` with its initial and final subalphabets and the action
/// of `U = Aut(G, c)`. Symbol 0 is the zombie; the rest are sorted.
#[derive(Clone, Debug)]
pub struct ZsatAlphabet {
    k: usize,
    group: FiniteGroup,
    class: ConjClass,
    c: Elem,
    rm: Option<ReducedMultiplier>,
    symbols: Vec<MonodromyTuple>,
    index: HashMap<Vec<Elem>, usize>,
    initial: Vec<usize>,
    fin: Vec<usize>,
    u: AutGroup,
    u_hat: AutGroup,
    /// Per element of `U`, its permutation of symbol indices.
    u_perms: Vec<Vec<u32>>,
    warnings: Vec<String>,
}

impl ZsatAlphabet {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn class(&self) -> &ConjClass {
        &self.class
    }

    pub fn c(&self) -> Elem {
        self.c
    }

    pub fn multiplier(&self) -> Option<&ReducedMultiplier> {
        self.rm.as_ref()
    }

    pub fn symbols(&self) -> &[MonodromyTuple] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn zombie(&self) -> usize {
        0
    }

    pub fn index_of(&self, elems: &[Elem]) -> Option<usize> {
        self.index.get(elems).copied()
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn final_symbols(&self) -> &[usize] {
        &self.fin
    }

    pub fn is_initial(&self, a: usize) -> bool {
        self.initial.binary_search(&a).is_ok()
    }

    pub fn is_final(&self, a: usize) -> bool {
        self.fin.binary_search(&a).is_ok()
    }

    /// `U = Aut(G, c)`.
    pub fn u(&self) -> &AutGroup {
        &self.u
    }

    /// `U-hat = Aut(G, C)`.
    pub fn u_hat(&self) -> &AutGroup {
        &self.u_hat
    }

    pub fn u_perms(&self) -> &[Vec<u32>] {
        &self.u_perms
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// True when both subalphabets contain more than the zombie.
    pub fn is_nondegenerate(&self) -> bool {
        self.initial.len() > 1 && self.fin.len() > 1
    }

    /// Whether a tuple on `4k` punctures lies in `U-hat . (A^2)`.
    pub fn in_saturated_square(&self, t: &MonodromyTuple) -> bool {
        let n = 2 * self.k;
        if t.len() != 2 * n {
            return false;
        }
        let first = t.elems()[0];
        // Any automorphism in U-hat sending t[0] to c will do: A is
        // U-invariant and these maps form one coset of U.
        let Some(i) = (0..self.u_hat.order()).find(|&i| self.u_hat.apply(i, first) == self.c) else {
            return false;
        };
        let moved: Vec<Elem> = t.elems().iter().map(|&x| self.u_hat.apply(i, x)).collect();
        self.index.contains_key(&moved[..n]) && self.index.contains_key(&moved[n..])
    }
}

/// Enumerates `A` for `(G, C, c, k)`. The Schur condition uses `rm` when
/// given; without it the condition is skipped and a warning is recorded.
pub fn build_alphabet(
    g: &FiniteGroup,
    class: &ConjClass,
    c: Elem,
    k: usize,
    rm: Option<&ReducedMultiplier>,
    budget: &Budget,
) -> Result<ZsatAlphabet, ReductionError> {
    if !g.is_nonabelian_simple() {
        return Err(ReductionError::NotSimpleGroup);
    }
    if !class.contains(c) || c == g.identity() {
        return Err(ReductionError::NotInClass(c.0));
    }
    if k == 0 {
        return Err(ReductionError::Parse { line: 0, msg: "k must be positive".into() });
    }
    let n = 2 * k;
    let mut warnings = Vec::new();
    if rm.is_none() {
        warnings.push("no central extension supplied: the Schur condition is not enforced".to_string());
    }
    let free = n.saturating_sub(3) as u32;
    let space = (class.size() as u64).checked_pow(free).unwrap_or(u64::MAX);
    if space > budget.states {
        return Err(ReductionError::BudgetExceeded(budget.states));
    }
    let ci = g.inv(c);
    let zombie = MonodromyTuple::zombie(g, c, k);
    let mut found: Vec<MonodromyTuple> = Vec::new();
    if k >= 2 {
        // m_1 = c and m_2k = c^-1, so the middle entries multiply to e. The
        // free entries are m_2 .. m_{2k-2}; m_{2k-1} is forced.
        let inv: Vec<Elem> = class.members().iter().map(|&x| g.inv(x)).collect();
        let mut cur = vec![g.identity(); n];
        cur[0] = c;
        cur[n - 1] = ci;
        let mut idx = vec![0usize; free as usize];
        loop {
            let mut prod = g.identity();
            for (p, &i) in idx.iter().enumerate() {
                let pos = p + 1;
                let x = if pos % 2 == 0 { class.members()[i] } else { inv[i] };
                cur[pos] = x;
                prod = g.mul(prod, x);
            }
            let last = g.inv(prod);
            if class.contains(last) {
                cur[n - 2] = last;
                let t = MonodromyTuple::alternating(cur.clone());
                if t != zombie && g.generates(t.elems()) {
                    let ok = match rm {
                        Some(rm) => schur(&t, rm)? == rm.quotient().cover().identity(),
                        None => true,
                    };
                    if ok {
                        found.push(t);
                    }
                }
            }
            let mut p = 0;
            while p < idx.len() {
                idx[p] += 1;
                if idx[p] < class.size() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == idx.len() {
                break;
            }
        }
    }
    found.sort();
    let mut symbols = vec![zombie];
    symbols.extend(found);
    if symbols.len() == 1 {
        warnings.push(format!("A = {{z}} at k = {k}: no onto symbols; increase k"));
    }
    let index: HashMap<Vec<Elem>, usize> =
        symbols.iter().enumerate().map(|(i, t)| (t.elems().to_vec(), i)).collect();
    let initial: Vec<usize> = (0..symbols.len())
        .filter(|&a| {
            let m = symbols[a].elems();
            (0..k).all(|i| m[2 * i + 1] == g.inv(m[2 * i]))
        })
        .collect();
    let fin: Vec<usize> = (0..symbols.len())
        .filter(|&a| {
            let m = symbols[a].elems();
            (0..k - 1).all(|i| m[2 * i + 1] == g.inv(m[2 * i + 2]))
        })
        .collect();
    if initial.len() == 1 || fin.len() == 1 {
        warnings.push(format!("|I| = {}, |F| = {} at k = {k}: a subalphabet is only the zombie", initial.len(), fin.len()));
    }

    let aut = automorphism_group(g)?;
    let u = aut.aut_point(c);
    let u_hat = aut.aut_class(class);
    let mut u_perms = Vec::with_capacity(u.order());
    for i in 0..u.order() {
        let mut perm = Vec::with_capacity(symbols.len());
        for t in &symbols {
            let img: Vec<Elem> = t.elems().iter().map(|&x| u.apply(i, x)).collect();
            let j = index
                .get(&img)
                .ok_or_else(|| ReductionError::NotInvariant(format!("symbol {} leaves A", t.format())))?;
            perm.push(*j as u32);
        }
        u_perms.push(perm);
    }
    for set in [&initial, &fin] {
        for p in &u_perms {
            if set.iter().any(|&a| set.binary_search(&(p[a] as usize)).is_err()) {
                return Err(ReductionError::NotInvariant("a subalphabet is not U-invariant".into()));
            }
        }
    }
    Ok(ZsatAlphabet {
        k,
        group: g.clone(),
        class: class.clone(),
        c,
        rm: rm.cloned(),
        symbols,
        index,
        initial,
        fin,
        u,
        u_hat,
        u_perms,
        warnings,
    })
}

/// The least `k <= k_max` at which `I` and `F` both hold a non-zombie symbol.
pub fn smallest_nondegenerate_k(
    g: &FiniteGroup,
    class: &ConjClass,
    c: Elem,
    rm: Option<&ReducedMultiplier>,
    k_max: usize,
    budget: &Budget,
) -> Result<Option<ZsatAlphabet>, ReductionError> {
    for k in 1..=k_max {
        let a = build_alphabet(g, class, c, k, rm, budget)?;
        if a.is_nondegenerate() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}
