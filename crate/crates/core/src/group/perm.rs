//! Permutations of `0..n` and a Schreier–Sims stabilizer chain.
//!
//! Composition reads left to right: `compose(a, b)` applies `a` first.

use std::collections::BTreeMap;

pub type Perm = Vec<u32>;

pub fn identity(n: usize) -> Perm {
    (0..n as u32).collect()
}

pub fn is_identity(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

pub fn is_bijection(p: &[u32]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| (x as usize) < p.len() && !std::mem::replace(&mut seen[x as usize], true))
}

/// `a` then `b`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inverse(p: &[u32]) -> Perm {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// Builds a permutation from disjoint cycles on 0-based points.
pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Perm {
    let mut p = identity(n);
    for cyc in cycles {
        for (i, &x) in cyc.iter().enumerate() {
            p[x as usize] = cyc[(i + 1) % cyc.len()];
        }
    }
    p
}

/// Parses cycle notation on points `1..=n`, e.g. `(1 2 3)(4 5)`; `()` is the
/// identity. Cycles are applied left to right.
pub fn parse_cycles(text: &str, n: usize) -> Result<Perm, String> {
    let mut result = identity(n);
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err("empty permutation".into());
    }
    while !rest.is_empty() {
        let body_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| format!("malformed cycle notation `{text}`"))?;
        let body = &rest[1..body_end + 1];
        let mut pts = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let v: usize = tok.parse().map_err(|_| format!("bad point `{tok}`"))?;
            if v == 0 || v > n {
                return Err(format!("point {v} outside 1..={n}"));
            }
            if pts.contains(&(v as u32 - 1)) {
                return Err(format!("point {v} repeated in a cycle"));
            }
            pts.push(v as u32 - 1);
        }
        if !pts.is_empty() {
            result = compose(&result, &from_cycles(n, &[pts]));
        }
        rest = rest[body_end + 2..].trim_start();
    }
    Ok(result)
}

/// Cycle notation on points `1..=n`; the identity prints as `()`.
pub fn format_cycles(p: &[u32]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cyc.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parity of a permutation: `true` when even.
pub fn is_even(p: &[u32]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0usize;
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions.is_multiple_of(2)
}

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Perm>,
    /// Point in the basic orbit -> element taking `base` to it.
    transversal: BTreeMap<u32, Perm>,
}

/// Stabilizer chain (base and strong generating set) of a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in gens {
            chain.add_generator(g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Strips `g` through levels `start..`; returns the residue and the
    /// level where stripping stopped (`levels.len()` if it went through).
    fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            match level.transversal.get(&g[level.base as usize]) {
                Some(t) => g = compose(&g, &inverse(t)),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &[u32]) -> bool {
        if g.len() != self.degree {
            return false;
        }
        let (residue, stop) = self.strip(g.to_vec(), 0);
        stop == self.levels.len() && is_identity(&residue)
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.transversal.len() as u128).product()
    }

    pub fn add_generator(&mut self, g: Perm) {
        if self.contains(&g) {
            return;
        }
        let mut j = 0;
        while j < self.levels.len() && g[self.levels[j].base as usize] == self.levels[j].base {
            j += 1;
        }
        if j == self.levels.len() {
            self.push_level(&g);
        }
        for l in 0..=j {
            self.levels[l].gens.push(g.clone());
            self.rebuild_orbit(l);
        }
        self.complete(j);
    }

    fn push_level(&mut self, moved_by: &[u32]) {
        let base = moved_by
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
            .expect("non-identity permutation moves a point");
        let mut transversal = BTreeMap::new();
        transversal.insert(base, identity(self.degree));
        self.levels.push(Level { base, gens: Vec::new(), transversal });
    }

    /// Runs the Schreier–Sims completion loop from level `start` upwards.
    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let level = i as usize;
            match self.failing_schreier_generator(level) {
                Some((h, j)) => {
                    if j == self.levels.len() {
                        self.push_level(&h);
                    }
                    for l in level + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.rebuild_orbit(l);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn failing_schreier_generator(&self, level: usize) -> Option<(Perm, usize)> {
        let lvl = &self.levels[level];
        for t in lvl.transversal.values() {
            for s in &lvl.gens {
                let ts = compose(t, s);
                let back = &lvl.transversal[&ts[lvl.base as usize]];
                let schreier = compose(&ts, &inverse(back));
                if is_identity(&schreier) {
                    continue;
                }
                let (residue, stop) = self.strip(schreier, level + 1);
                if stop < self.levels.len() || !is_identity(&residue) {
                    return Some((residue, stop));
                }
            }
        }
        None
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let degree = self.degree;
        let lvl = &mut self.levels[level];
        let mut transversal = BTreeMap::new();
        transversal.insert(lvl.base, identity(degree));
        let mut queue = vec![lvl.base];
        while let Some(pt) = queue.pop() {
            let t = transversal[&pt].clone();
            for s in &lvl.gens {
                let img = s[pt as usize];
                if let std::collections::btree_map::Entry::Vacant(e) = transversal.entry(img) {
                    e.insert(compose(&t, s));
                    queue.push(img);
                }
            }
        }
        lvl.transversal = transversal;
    }
}

/// Normal closure of `gens` inside the group generated by `ambient`.
pub fn normal_closure(degree: usize, gens: &[Perm], ambient: &[Perm]) -> StabChain {
    let mut chain = StabChain::new(degree, &[]);
    let mut todo: Vec<Perm> = gens.to_vec();
    while let Some(g) = todo.pop() {
        if chain.contains(&g) {
            continue;
        }
        chain.add_generator(g.clone());
        for a in ambient {
            // a^-1 g a
            todo.push(compose(&compose(&inverse(a), &g), a));
        }
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_roundtrip() {
        let p = parse_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p, vec![1, 2, 0, 4, 3]);
        assert_eq!(format_cycles(&p), "(1 2 3)(4 5)");
        assert_eq!(format_cycles(&identity(3)), "()");
        assert!(parse_cycles("(1 6)", 5).is_err());
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = parse_cycles("(1 2)", 3).unwrap();
        let b = parse_cycles("(2 3)", 3).unwrap();
        // 1 -> 2 -> 3
        assert_eq!(compose(&a, &b)[0], 2);
    }

    #[test]
    fn schreier_sims_orders() {
        let s5 = StabChain::new(
            5,
            &[parse_cycles("(1 2)", 5).unwrap(), parse_cycles("(1 2 3 4 5)", 5).unwrap()],
        );
        assert_eq!(s5.order(), 120);
        let a5 = StabChain::new(
            5,
            &[parse_cycles("(1 2 3)", 5).unwrap(), parse_cycles("(1 2 3 4 5)", 5).unwrap()],
        );
        assert_eq!(a5.order(), 60);
        assert!(a5.contains(&parse_cycles("(1 2)(3 4)", 5).unwrap()));
        assert!(!a5.contains(&parse_cycles("(1 2)", 5).unwrap()));
    }

    #[test]
    fn normal_closure_of_three_cycle_in_s5() {
        let s5 = [parse_cycles("(1 2)", 5).unwrap(), parse_cycles("(1 2 3 4 5)", 5).unwrap()];
        let n = normal_closure(5, &[parse_cycles("(1 2 3)", 5).unwrap()], &s5);
        assert_eq!(n.order(), 60);
    }

    #[test]
    fn parity() {
        assert!(is_even(&parse_cycles("(1 2 3)", 4).unwrap()));
        assert!(!is_even(&parse_cycles("(1 2)", 4).unwrap()));
        assert!(is_even(&parse_cycles("(1 2)(3 4)", 4).unwrap()));
    }
}
