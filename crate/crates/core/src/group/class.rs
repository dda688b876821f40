use super::{Elem, FiniteGroup};

/// A conjugacy class, or a union of classes, of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    members: Vec<Elem>,
    mask: Vec<bool>,
    representative: Elem,
}

impl ConjClass {
    fn from_members(order: usize, mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; order];
        for x in &members {
            mask[x.index()] = true;
        }
        ConjClass { representative: members[0], members, mask }
    }

    /// Union of the classes of `reps`; the representative is the smallest member.
    pub fn union(g: &FiniteGroup, reps: &[Elem]) -> Self {
        let members = reps
            .iter()
            .flat_map(|&r| conjugacy_class(g, r).members)
            .collect();
        ConjClass::from_members(g.order(), members)
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn representative(&self) -> Elem {
        self.representative
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask.get(x.index()).copied().unwrap_or(false)
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// The class of inverses.
    pub fn inverse(&self, g: &FiniteGroup) -> ConjClass {
        ConjClass::from_members(g.order(), self.members.iter().map(|&x| g.inv(x)).collect())
    }

    /// True when the class equals its inverse class.
    pub fn is_real(&self, g: &FiniteGroup) -> bool {
        self.members.iter().all(|&x| self.contains(g.inv(x)))
    }
}

pub fn conjugacy_class(g: &FiniteGroup, x: Elem) -> ConjClass {
    let members = g.elements().map(|h| g.conj(h, x)).collect();
    ConjClass::from_members(g.order(), members)
}

/// All classes, ordered by representative.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ConjClass> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in g.elements() {
        if seen[x.index()] {
            continue;
        }
        let c = conjugacy_class(g, x);
        for m in c.members() {
            seen[m.index()] = true;
        }
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_sizes() {
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.resolve("(1 2)").unwrap();
        assert_eq!(conjugacy_class(&s3, t).size(), 3);
        assert_eq!(conjugacy_class(&s3, s3.identity()).size(), 1);
        let a5 = FiniteGroup::alternating(5);
        let c = a5.resolve("(1 2 3 4 5)").unwrap();
        assert_eq!(conjugacy_class(&a5, c).size(), 12);
        let sizes: Vec<usize> = conjugacy_classes(&a5).iter().map(|c| c.size()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 60);
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn a4_three_cycles_are_not_real() {
        let a4 = FiniteGroup::alternating(4);
        let c = conjugacy_class(&a4, a4.resolve("(1 2 3)").unwrap());
        assert!(!c.is_real(&a4));
        assert_eq!(c.inverse(&a4), conjugacy_class(&a4, a4.resolve("(1 3 2)").unwrap()));
    }
}
