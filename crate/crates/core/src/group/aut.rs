use std::collections::HashSet;

use super::{conjugacy_classes, perm, ConjClass, Elem, FiniteGroup, GroupError, DEFAULT_ORDER_CAP};

/// Default largest group order for which automorphisms are searched.
pub const DEFAULT_AUT_CAP: usize = 360;

/// A group of automorphisms, each stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    maps: Vec<Vec<u32>>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[Vec<u32>] {
        &self.maps
    }

    #[inline]
    pub fn apply(&self, i: usize, x: Elem) -> Elem {
        Elem(self.maps[i][x.index()])
    }

    /// Index of the identity map.
    pub fn identity_index(&self) -> usize {
        self.maps
            .iter()
            .position(|m| perm::is_identity(m))
            .expect("automorphism groups contain the identity")
    }

    fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> AutGroup {
        AutGroup { maps: self.maps.iter().filter(|m| keep(m)).cloned().collect() }
    }

    /// `Aut(G, C)`: automorphisms mapping `c` onto itself setwise.
    pub fn aut_class(&self, c: &ConjClass) -> AutGroup {
        self.filter(|m| c.members().iter().all(|x| c.contains(Elem(m[x.index()]))))
    }

    /// `Aut(G, c)`: automorphisms fixing `c`.
    pub fn aut_point(&self, c: Elem) -> AutGroup {
        self.filter(|m| m[c.index()] == c.0)
    }

    /// The automorphisms as a permutation group on element indices.
    pub fn to_group(&self, name: &str) -> FiniteGroup {
        FiniteGroup::from_permutations(name, self.maps[0].len(), &self.maps, DEFAULT_ORDER_CAP)
            .expect("automorphisms form a group")
    }
}

pub fn automorphism_group(g: &FiniteGroup) -> Result<AutGroup, GroupError> {
    automorphism_group_with_cap(g, DEFAULT_AUT_CAP)
}

/// Backtracks over images of a generating set, restricted to elements with
/// the same order and class size as the generator they replace.
pub fn automorphism_group_with_cap(g: &FiniteGroup, cap: usize) -> Result<AutGroup, GroupError> {
    if g.order() > cap {
        return Err(GroupError::AutCapExceeded { order: g.order(), cap });
    }
    let gens = g.greedy_generators();
    let mut class_size = vec![0usize; g.order()];
    for c in conjugacy_classes(g) {
        for x in c.members() {
            class_size[x.index()] = c.size();
        }
    }
    let signature = |x: Elem| (g.element_order(x), class_size[x.index()]);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&x| signature(x) == signature(s)).collect())
        .collect();

    // Spanning tree of the Cayley graph: each element = parent * gens[i].
    let mut tree: Vec<(u32, usize)> = vec![(u32::MAX, 0); g.order()];
    let mut order_seen = vec![g.identity()];
    let mut seen = vec![false; g.order()];
    seen[g.identity().index()] = true;
    let mut head = 0;
    while head < order_seen.len() {
        let x = order_seen[head];
        head += 1;
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if !std::mem::replace(&mut seen[y.index()], true) {
                tree[y.index()] = (x.0, i);
                order_seen.push(y);
            }
        }
    }

    let mut maps = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let images: Vec<Elem> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(m) = extend(g, &gens, &images, &order_seen, &tree) {
            maps.push(m);
        }
        for pos in (0..choice.len()).rev() {
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                continue 'outer;
            }
            choice[pos] = 0;
        }
        break;
    }
    maps.sort();
    Ok(AutGroup { maps })
}

/// An isomorphism `g -> h`, as the image of each element of `g`, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<Elem>> {
    if g.order() != h.order() {
        return None;
    }
    let gens = g.greedy_generators();
    let sizes = |x: &FiniteGroup| {
        let mut s = vec![0usize; x.order()];
        for c in conjugacy_classes(x) {
            for m in c.members() {
                s[m.index()] = c.size();
            }
        }
        s
    };
    let (gs, hs) = (sizes(g), sizes(h));
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            h.elements()
                .filter(|&x| h.element_order(x) == g.element_order(s) && hs[x.index()] == gs[s.index()])
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let images: Vec<Elem> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(m) = extend_into(g, h, &gens, &images) {
            return Some(m);
        }
        for pos in (0..choice.len()).rev() {
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                continue 'outer;
            }
            choice[pos] = 0;
        }
        return None;
    }
}

fn extend_into(g: &FiniteGroup, h: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut m = vec![None; g.order()];
    m[g.identity().index()] = Some(h.identity());
    let mut queue = vec![g.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let mx = m[x.index()].expect("visited");
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let my = h.mul(mx, images[i]);
            match m[y.index()] {
                None => {
                    m[y.index()] = Some(my);
                    queue.push(y);
                }
                Some(prev) if prev != my => return None,
                _ => {}
            }
        }
    }
    let m: Vec<Elem> = m.into_iter().collect::<Option<_>>()?;
    let mut hit = vec![false; h.order()];
    for y in &m {
        if std::mem::replace(&mut hit[y.index()], true) {
            return None;
        }
    }
    Some(m)
}

/// Extends generator images along the spanning tree and checks the result is
/// a bijective homomorphism.
fn extend(
    g: &FiniteGroup,
    gens: &[Elem],
    images: &[Elem],
    bfs: &[Elem],
    tree: &[(u32, usize)],
) -> Option<Vec<u32>> {
    let mut m = vec![u32::MAX; g.order()];
    m[g.identity().index()] = g.identity().0;
    for &x in &bfs[1..] {
        let (parent, i) = tree[x.index()];
        m[x.index()] = g.mul(Elem(m[parent as usize]), images[i]).0;
    }
    let mut hit = HashSet::with_capacity(g.order());
    if !m.iter().all(|&y| hit.insert(y)) {
        return None;
    }
    for x in g.elements() {
        for (i, &s) in gens.iter().enumerate() {
            if m[g.mul(x, s).index()] != g.mul(Elem(m[x.index()]), images[i]).0 {
                return None;
            }
        }
    }
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::super::conjugacy_class;
    use super::*;

    fn is_hom(g: &FiniteGroup, m: &[u32]) -> bool {
        g.elements().all(|a| {
            g.elements()
                .all(|b| m[g.mul(a, b).index()] == g.mul(Elem(m[a.index()]), Elem(m[b.index()])).0)
        })
    }

    #[test]
    fn small_automorphism_groups() {
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(automorphism_group(&z3).unwrap().order(), 2);
        let s3 = FiniteGroup::symmetric(3);
        let aut = automorphism_group(&s3).unwrap();
        assert_eq!(aut.order(), 6);
        let t = conjugacy_class(&s3, s3.resolve("(1 2)").unwrap());
        assert_eq!(aut.aut_class(&t).order(), 6);
        assert_eq!(aut.aut_point(t.representative()).order(), 2);
        assert!(aut.maps().iter().all(|m| is_hom(&s3, m)));
    }

    #[test]
    fn a5_five_cycle_stabilizers() {
        let a5 = FiniteGroup::alternating(5);
        let aut = automorphism_group(&a5).unwrap();
        assert_eq!(aut.order(), 120);
        let c = a5.resolve("(1 2 3 4 5)").unwrap();
        let class = conjugacy_class(&a5, c);
        assert_eq!(aut.aut_class(&class).order(), 60);
        assert_eq!(aut.aut_point(c).order(), 5);
    }

    #[test]
    fn isomorphism_between_presentations() {
        let a5 = FiniteGroup::alternating(5);
        let mut rows = Vec::new();
        for a in a5.elements() {
            rows.push(a5.elements().map(|b| a5.mul(a, b).0).collect());
        }
        let table = FiniteGroup::from_table("A5t", rows).unwrap();
        let iso = find_isomorphism(&table, &a5).unwrap();
        for a in table.elements() {
            for b in table.elements() {
                assert_eq!(iso[table.mul(a, b).index()], a5.mul(iso[a.index()], iso[b.index()]));
            }
        }
        assert!(find_isomorphism(&FiniteGroup::cyclic(6), &FiniteGroup::symmetric(3)).is_none());
    }

    #[test]
    fn cap() {
        let s6 = FiniteGroup::symmetric(6);
        assert!(matches!(
            automorphism_group(&s6),
            Err(GroupError::AutCapExceeded { order: 720, cap: 360 })
        ));
    }
}
