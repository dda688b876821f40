//! Central extensions and the reduced Schur multiplier.
//!
//! Extension file:
//!
//! ```text
//! extension <name>
//! group <cover> order <n>
//! ...
//! group <base> order <m>
//! ...
//! proj
//! <n indices, any line breaks>
//! ```

use super::parse::{parse_err, parse_group_block, significant_lines};
use super::{conjugacy_class, ConjClass, Elem, FiniteGroup, GroupError, DEFAULT_ORDER_CAP};

/// A surjection `cover -> base` with central kernel.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    name: String,
    cover: FiniteGroup,
    base: FiniteGroup,
    proj: Vec<Elem>,
    kernel: Vec<Elem>,
}

impl CentralExtension {
    pub fn new(
        name: impl Into<String>,
        cover: FiniteGroup,
        base: FiniteGroup,
        proj: Vec<Elem>,
    ) -> Result<Self, GroupError> {
        if proj.len() != cover.order() || proj.iter().any(|p| !base.contains(*p)) {
            return Err(GroupError::NotSurjective);
        }
        for a in cover.elements() {
            for b in cover.elements() {
                if proj[cover.mul(a, b).index()] != base.mul(proj[a.index()], proj[b.index()]) {
                    return Err(GroupError::NotHomomorphism { a: a.0, b: b.0 });
                }
            }
        }
        let mut hit = vec![false; base.order()];
        for p in &proj {
            hit[p.index()] = true;
        }
        if hit.contains(&false) {
            return Err(GroupError::NotSurjective);
        }
        let kernel: Vec<Elem> = cover.elements().filter(|x| proj[x.index()] == base.identity()).collect();
        for &k in &kernel {
            if let Some(g) = cover.elements().find(|&g| cover.mul(k, g) != cover.mul(g, k)) {
                return Err(GroupError::NonCentralKernel { k: k.0, g: g.0 });
            }
        }
        Ok(CentralExtension { name: name.into(), cover, base, proj, kernel })
    }

    /// The identity extension `G -> G`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        let proj = g.elements().collect();
        CentralExtension::new(format!("{}->{}", g.name(), g.name()), g.clone(), g.clone(), proj)
            .expect("identity map is a central extension")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cover(&self) -> &FiniteGroup {
        &self.cover
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    #[inline]
    pub fn proj(&self, x: Elem) -> Elem {
        self.proj[x.index()]
    }

    /// Sorted kernel elements.
    pub fn kernel(&self) -> &[Elem] {
        &self.kernel
    }

    /// The same extension with its base replaced by an isomorphic copy.
    pub fn over_base(&self, base: &FiniteGroup) -> Result<CentralExtension, GroupError> {
        let iso = super::find_isomorphism(&self.base, base).ok_or(GroupError::NotIsomorphic)?;
        let proj = self.proj.iter().map(|p| iso[p.index()]).collect();
        CentralExtension::new(self.name.clone(), self.cover.clone(), base.clone(), proj)
    }

    /// Preimages of `g`, sorted.
    pub fn fiber(&self, g: Elem) -> Vec<Elem> {
        self.cover.elements().filter(|x| self.proj[x.index()] == g).collect()
    }
}

pub fn load_extension(text: &str) -> Result<CentralExtension, GroupError> {
    let lines = significant_lines(text);
    let (hline, header) = *lines.first().ok_or_else(|| parse_err(0, "missing `extension` header"))?;
    let name = header
        .strip_prefix("extension")
        .map(str::trim)
        .filter(|n| !n.is_empty())
        .ok_or_else(|| parse_err(hline, "expected `extension <name>`"))?;
    let mut pos = 1;
    let (cover, used) = parse_group_block(&lines[pos..], DEFAULT_ORDER_CAP)?;
    pos += used;
    let (base, used) = parse_group_block(&lines[pos..], DEFAULT_ORDER_CAP)?;
    pos += used;
    let (pline, p) = *lines.get(pos).ok_or_else(|| parse_err(hline, "missing `proj` section"))?;
    if p != "proj" {
        return Err(parse_err(pline, "expected `proj`"));
    }
    let mut proj = Vec::with_capacity(cover.order());
    for &(n, l) in &lines[pos + 1..] {
        if l == "end" {
            break;
        }
        for t in l.split_whitespace() {
            let v: u32 = t.parse().map_err(|_| parse_err(n, format!("bad index `{t}`")))?;
            if v as usize >= base.order() {
                return Err(parse_err(n, format!("index {v} outside the base group")));
            }
            proj.push(Elem(v));
        }
    }
    if proj.len() != cover.order() {
        return Err(parse_err(pline, format!("`proj` needs {} indices, found {}", cover.order(), proj.len())));
    }
    CentralExtension::new(name, cover, base, proj)
}

/// The reduced multiplier `M(G, C)` together with the quotient extension in
/// which distinct lifts of an element of `C` are never conjugate.
#[derive(Clone, Debug)]
pub struct ReducedMultiplier {
    parent: CentralExtension,
    class: ConjClass,
    collapse: Vec<Elem>,
    quotient: CentralExtension,
    lifted_class: ConjClass,
    /// Base element -> its lift in `lifted_class`, for members of the class.
    lift: Vec<Option<Elem>>,
}

impl ReducedMultiplier {
    pub fn parent(&self) -> &CentralExtension {
        &self.parent
    }

    /// The class `C` of the base.
    pub fn class(&self) -> &ConjClass {
        &self.class
    }

    /// The subgroup `K` of the parent kernel that is collapsed.
    pub fn collapse(&self) -> &[Elem] {
        &self.collapse
    }

    pub fn quotient(&self) -> &CentralExtension {
        &self.quotient
    }

    /// The class `C'` of the quotient cover lying over `C`.
    pub fn lifted_class(&self) -> &ConjClass {
        &self.lifted_class
    }

    /// Elements of `M(G, C)`, as elements of the quotient cover.
    pub fn multiplier(&self) -> &[Elem] {
        self.quotient.kernel()
    }

    pub fn order(&self) -> usize {
        self.quotient.kernel().len()
    }

    /// The unique lift of `c` in `C'`, for `c` in `C`.
    #[inline]
    pub fn lift(&self, c: Elem) -> Option<Elem> {
        self.lift.get(c.index()).copied().flatten()
    }
}

/// Computes `K = { m in kernel : m * lift(c) ~ lift(c) }`, checks it does not
/// depend on the member of `C` or the lift chosen, and passes to `cover / K`.
pub fn reduced_multiplier(ext: &CentralExtension, class: &ConjClass) -> Result<ReducedMultiplier, GroupError> {
    let base = ext.base();
    let cover = ext.cover();
    if !base.is_perfect() {
        return Err(GroupError::BaseNotPerfect);
    }
    if !base.generates(class.members()) {
        return Err(GroupError::ClassNotGenerating);
    }
    let mut collapse: Option<Vec<Elem>> = None;
    for &c in class.members() {
        for hat in ext.fiber(c) {
            let cls = conjugacy_class(cover, hat);
            let k: Vec<Elem> = ext
                .kernel()
                .iter()
                .copied()
                .filter(|&m| cls.contains(cover.mul(m, hat)))
                .collect();
            match &collapse {
                None => collapse = Some(k),
                Some(prev) if *prev != k => return Err(GroupError::InconsistentMultiplier),
                _ => {}
            }
        }
    }
    let collapse = collapse.expect("a generating class is nonempty");
    if cover.subgroup_closure(&collapse) != collapse {
        return Err(GroupError::InconsistentMultiplier);
    }

    // Cosets x K indexed in order of their smallest member.
    let mut coset_of = vec![u32::MAX; cover.order()];
    let mut reps = Vec::new();
    for x in cover.elements() {
        if coset_of[x.index()] != u32::MAX {
            continue;
        }
        for &k in &collapse {
            coset_of[cover.mul(x, k).index()] = reps.len() as u32;
        }
        reps.push(x);
    }
    let rows = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of[cover.mul(a, b).index()]).collect())
        .collect();
    let qname = if collapse.len() == 1 {
        cover.name().to_string()
    } else {
        format!("{}/K", cover.name())
    };
    let qcover = FiniteGroup::from_table(qname, rows)?;
    let qproj = reps.iter().map(|&r| ext.proj(r)).collect();
    let quotient = CentralExtension::new(format!("{}/K", ext.name()), qcover, base.clone(), qproj)?;

    let rep = class.representative();
    let hat = quotient.fiber(rep)[0];
    let lifted_class = conjugacy_class(quotient.cover(), hat);
    let mut lift = vec![None; base.order()];
    for &x in lifted_class.members() {
        let p = quotient.proj(x);
        if !class.contains(p) || lift[p.index()].replace(x).is_some() {
            return Err(GroupError::InconsistentMultiplier);
        }
    }
    if lifted_class.size() != class.size() {
        return Err(GroupError::InconsistentMultiplier);
    }
    Ok(ReducedMultiplier {
        parent: ext.clone(),
        class: class.clone(),
        collapse,
        quotient,
        lifted_class,
        lift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_extension() {
        let a5 = FiniteGroup::alternating(5);
        let ext = CentralExtension::trivial(&a5);
        assert_eq!(ext.kernel().len(), 1);
        let c = conjugacy_class(&a5, a5.resolve("(1 2 3 4 5)").unwrap());
        let rm = reduced_multiplier(&ext, &c).unwrap();
        assert_eq!(rm.order(), 1);
        assert_eq!(rm.lifted_class().size(), 12);
    }

    #[test]
    fn not_homomorphism() {
        let z3 = FiniteGroup::cyclic(3);
        let err = CentralExtension::new("bad", z3.clone(), z3, vec![Elem(0), Elem(2), Elem(2)]).unwrap_err();
        assert!(matches!(err, GroupError::NotHomomorphism { .. }));
    }

    #[test]
    fn non_central_kernel() {
        // S3 -> Z2 by sign has kernel A3, which is not central.
        let s3 = FiniteGroup::symmetric(3);
        let z2 = FiniteGroup::cyclic(2);
        let proj = s3
            .elements()
            .map(|x| Elem(if super::super::perm::is_even(s3.permutation(x).unwrap()) { 0 } else { 1 }))
            .collect();
        let err = CentralExtension::new("sign", s3, z2, proj).unwrap_err();
        assert!(matches!(err, GroupError::NonCentralKernel { .. }));
    }

    #[test]
    fn base_must_be_perfect() {
        let s3 = FiniteGroup::symmetric(3);
        let ext = CentralExtension::trivial(&s3);
        let c = conjugacy_class(&s3, s3.resolve("(1 2)").unwrap());
        assert_eq!(reduced_multiplier(&ext, &c).unwrap_err(), GroupError::BaseNotPerfect);
    }

    #[test]
    fn sl25_multipliers() {
        let ext = load_extension(include_str!("../../../../data/sl25_a5.ext")).unwrap();
        assert_eq!(ext.kernel().len(), 2);
        let a5 = ext.base();
        let mut orders = Vec::new();
        for c in super::super::conjugacy_classes(a5) {
            match reduced_multiplier(&ext, &c) {
                Ok(rm) => orders.push((c.size(), rm.order())),
                Err(e) => {
                    assert_eq!(e, GroupError::ClassNotGenerating);
                    assert_eq!(c.size(), 1);
                }
            }
        }
        orders.sort_unstable();
        assert_eq!(orders, vec![(12, 2), (12, 2), (15, 1), (20, 2)]);
    }
}
