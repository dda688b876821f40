//! Finite groups, conjugacy classes, automorphisms, central extensions and
//! the Rubik membership test.
//!
//! Elements are dense indices `0..order`. Groups up to [`TABLE_MAX_ORDER`]
//! carry a full multiplication table; larger permutation groups multiply on
//! demand by composing permutations and looking the product up by hash.

mod aut;
mod class;
mod extension;
pub(crate) mod parse;
pub mod perm;
mod rubik;

pub use aut::{automorphism_group, automorphism_group_with_cap, find_isomorphism, AutGroup, DEFAULT_AUT_CAP};
pub use class::{conjugacy_class, conjugacy_classes, ConjClass};
pub use extension::{load_extension, reduced_multiplier, CentralExtension, ReducedMultiplier};
pub use parse::{load_group, load_group_with_cap, parse_group_block};
pub use rubik::{is_rubik_member, rubik_membership, GroupAction, RubikVerdict, EXACT_CHECK_MAX_ORBITS};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use perm::Perm;

/// Largest order for which a full multiplication table is stored.
pub const TABLE_MAX_ORDER: usize = 512;

/// Default cap on the size of a permutation-generator closure.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A group element, as an index into its group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("multiplication table is not square")]
    NonSquareTable,
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: u32 },
    #[error("row {row} of the multiplication table is not a bijection")]
    NonBijectiveRow { row: usize },
    #[error("column {col} of the multiplication table is not a bijection")]
    NonBijectiveColumn { col: usize },
    #[error("multiplication table has no two-sided identity")]
    NoIdentity,
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: u32, b: u32, c: u32 },
    #[error("generator closure exceeds the order cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("declared order {declared} but the group has {actual} elements")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("cannot resolve element `{0}`")]
    BadElement(String),
    #[error("automorphism search needs order <= {cap}, group has order {order}")]
    AutCapExceeded { order: usize, cap: usize },
    #[error("projection is not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: u32, b: u32 },
    #[error("projection is not surjective")]
    NotSurjective,
    #[error("kernel element {k} does not commute with {g}")]
    NonCentralKernel { k: u32, g: u32 },
    #[error("base group is not perfect")]
    BaseNotPerfect,
    #[error("conjugacy class does not generate the group")]
    ClassNotGenerating,
    #[error("collapse subgroup depends on the chosen lift or representative")]
    InconsistentMultiplier,
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("bad orbit structure: {0}")]
    BadOrbitStructure(String),
    #[error("permutation is not a bijection of the point set")]
    NotBijection,
    #[error("abelianization and exact Rubik checks disagree")]
    RubikCheckDisagreement,
    #[error("groups are not isomorphic")]
    NotIsomorphic,
}

impl GroupError {
    pub fn code(&self) -> &'static str {
        match self {
            GroupError::Parse { .. } => "group.parse",
            GroupError::NonSquareTable => "group.non_square_table",
            GroupError::EntryOutOfRange { .. } => "group.entry_out_of_range",
            GroupError::NonBijectiveRow { .. } => "group.non_bijective_row",
            GroupError::NonBijectiveColumn { .. } => "group.non_bijective_column",
            GroupError::NoIdentity => "group.no_identity",
            GroupError::NotAssociative { .. } => "group.not_associative",
            GroupError::OrderCapExceeded { .. } => "group.order_cap_exceeded",
            GroupError::OrderMismatch { .. } => "group.order_mismatch",
            GroupError::BadElement(_) => "group.bad_element",
            GroupError::AutCapExceeded { .. } => "group.aut_cap_exceeded",
            GroupError::NotHomomorphism { .. } => "extension.not_homomorphism",
            GroupError::NotSurjective => "extension.not_surjective",
            GroupError::NonCentralKernel { .. } => "extension.non_central_kernel",
            GroupError::BaseNotPerfect => "multiplier.base_not_perfect",
            GroupError::ClassNotGenerating => "group.class_not_generating",
            GroupError::InconsistentMultiplier => "multiplier.inconsistent",
            GroupError::NotSubgroup => "group.not_subgroup",
            GroupError::BadOrbitStructure(_) => "rubik.bad_orbit_structure",
            GroupError::NotBijection => "rubik.not_bijection",
            GroupError::RubikCheckDisagreement => "rubik.check_disagreement",
            GroupError::NotIsomorphic => "group.not_isomorphic",
        }
    }
}

#[derive(Clone, Debug)]
enum Repr {
    Table(Vec<u32>),
    Perm(HashMap<Perm, u32>),
}

/// A finite group with elements `0..order`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: Elem,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    repr: Repr,
    /// Permutation realising each element, when the group came from generators.
    perms: Option<(usize, Vec<Perm>)>,
    labels: BTreeMap<String, Elem>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.identity == other.identity
            && self
                .elements()
                .all(|a| self.elements().all(|b| self.mul(a, b) == other.mul(a, b)))
    }
}

impl FiniteGroup {
    /// Validates a Cayley table given as rows of element indices.
    pub fn from_table(name: impl Into<String>, rows: Vec<Vec<u32>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(GroupError::NonSquareTable);
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let mut seen = vec![false; n];
            for (j, &v) in row.iter().enumerate() {
                if v as usize >= n {
                    return Err(GroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(GroupError::NonBijectiveRow { row: i });
                }
                mul.push(v);
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                if std::mem::replace(&mut seen[mul[i * n + j] as usize], true) {
                    return Err(GroupError::NonBijectiveColumn { col: j });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .ok_or(GroupError::NoIdentity)? as u32;
        let mut inv = vec![0u32; n];
        for x in 0..n {
            // Latin rows guarantee exactly one right inverse.
            let y = (0..n).find(|&y| mul[x * n + y] == identity).ok_or(GroupError::NoIdentity)?;
            if mul[y * n + x] != identity {
                return Err(GroupError::NoIdentity);
            }
            inv[x] = y as u32;
        }
        let mut g = FiniteGroup {
            name: name.into(),
            order: n,
            identity: Elem(identity),
            inv,
            elem_order: Vec::new(),
            repr: Repr::Table(mul),
            perms: None,
            labels: BTreeMap::new(),
        };
        g.check_associativity()?;
        g.fill_element_orders();
        Ok(g)
    }

    /// Closes a set of permutations of `0..degree` into a group.
    ///
    /// Element 0 is the identity; the rest follow breadth-first order over
    /// right multiplication by the generators.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        gens: &[Perm],
        cap: usize,
    ) -> Result<Self, GroupError> {
        for p in gens {
            if p.len() != degree || !perm::is_bijection(p) {
                return Err(GroupError::NotBijection);
            }
        }
        let id = perm::identity(degree);
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Perm, u32> = HashMap::new();
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = perm::compose(&elems[i], g);
                if !index.contains_key(&p) {
                    if elems.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    index.insert(p.clone(), elems.len() as u32);
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let inv = elems.iter().map(|p| index[&perm::inverse(p)]).collect();
        let repr = if n <= TABLE_MAX_ORDER {
            let mut mul = Vec::with_capacity(n * n);
            for a in &elems {
                for b in &elems {
                    mul.push(index[&perm::compose(a, b)]);
                }
            }
            Repr::Table(mul)
        } else {
            Repr::Perm(index)
        };
        let mut g = FiniteGroup {
            name: name.into(),
            order: n,
            identity: Elem(0),
            inv,
            elem_order: Vec::new(),
            repr,
            perms: Some((degree, elems)),
            labels: BTreeMap::new(),
        };
        g.fill_element_orders();
        Ok(g)
    }

    /// Cyclic group of order `n`, element `k` standing for `k`.
    pub fn cyclic(n: usize) -> Self {
        let rows = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as u32).collect())
            .collect();
        FiniteGroup::from_table(format!("Z{n}"), rows).expect("cyclic table")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(perm::from_cycles(n, &[vec![0, 1]]));
            gens.push(perm::from_cycles(n, &[(0..n as u32).collect()]));
        }
        FiniteGroup::from_permutations(format!("S{n}"), n, &gens, DEFAULT_ORDER_CAP)
            .expect("symmetric group")
    }

    pub fn alternating(n: usize) -> Self {
        let gens: Vec<Perm> = (2..n as u32)
            .map(|k| perm::from_cycles(n, &[vec![0, 1, k]]))
            .collect();
        FiniteGroup::from_permutations(format!("A{n}"), n, &gens, DEFAULT_ORDER_CAP)
            .expect("alternating group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone + '_ {
        (0..self.order as u32).map(Elem)
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.index() < self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Table(t) => Elem(t[a.index() * self.order + b.index()]),
            Repr::Perm(index) => {
                let elems = &self.perms.as_ref().expect("perm repr keeps perms").1;
                Elem(index[&perm::compose(&elems[a.index()], &elems[b.index()])])
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inv[a.index()])
    }

    /// `h * x * h^-1`.
    #[inline]
    pub fn conj(&self, h: Elem, x: Elem) -> Elem {
        self.mul(self.mul(h, x), self.inv(h))
    }

    /// `a * b * a^-1 * b^-1`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn element_order(&self, a: Elem) -> u32 {
        self.elem_order[a.index()]
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Degree and permutation of `a`, for groups built from generators.
    pub fn permutation(&self, a: Elem) -> Option<&[u32]> {
        self.perms.as_ref().map(|(_, ps)| ps[a.index()].as_slice())
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|(d, _)| *d)
    }

    pub fn label(&self, name: &str) -> Option<Elem> {
        self.labels.get(name).copied()
    }

    pub fn labels(&self) -> impl Iterator<Item = (&str, Elem)> {
        self.labels.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn set_label(&mut self, name: impl Into<String>, x: Elem) {
        self.labels.insert(name.into(), x);
    }

    /// Resolves an element written as an index, a label, or (for permutation
    /// groups) cycle notation on points `1..=degree`.
    pub fn resolve(&self, spec: &str) -> Result<Elem, GroupError> {
        let spec = spec.trim();
        if let Some(x) = self.label(spec) {
            return Ok(x);
        }
        if let Ok(i) = spec.parse::<u32>() {
            return if (i as usize) < self.order {
                Ok(Elem(i))
            } else {
                Err(GroupError::BadElement(spec.to_string()))
            };
        }
        if spec.starts_with('(') {
            if let Some((degree, elems)) = &self.perms {
                let p = perm::parse_cycles(spec, *degree)
                    .map_err(|_| GroupError::BadElement(spec.to_string()))?;
                return elems
                    .iter()
                    .position(|q| *q == p)
                    .map(|i| Elem(i as u32))
                    .ok_or_else(|| GroupError::BadElement(spec.to_string()));
            }
        }
        Err(GroupError::BadElement(spec.to_string()))
    }

    /// Cycle notation when available, the index otherwise.
    pub fn format_elem(&self, a: Elem) -> String {
        match self.permutation(a) {
            Some(p) => perm::format_cycles(p),
            None => a.to_string(),
        }
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order];
        member[self.identity.index()] = true;
        let mut list = vec![self.identity];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !std::mem::replace(&mut member[y.index()], true) {
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// True iff the closure of `set` is the whole group.
    pub fn generates(&self, set: &[Elem]) -> bool {
        self.subgroup_closure(set).len() == self.order
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Vec<Elem> {
        let mut comms: Vec<Elem> = Vec::new();
        let mut seen = vec![false; self.order];
        for a in self.elements() {
            for b in self.elements() {
                let c = self.commutator(a, b);
                if !std::mem::replace(&mut seen[c.index()], true) {
                    comms.push(c);
                }
            }
        }
        self.subgroup_closure(&comms)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().len() == self.order
    }

    /// Nonabelian and simple: every nontrivial class generates the group.
    pub fn is_nonabelian_simple(&self) -> bool {
        if self.is_abelian() {
            return false;
        }
        conjugacy_classes(self)
            .iter()
            .filter(|c| c.representative() != self.identity)
            .all(|c| self.generates(c.members()))
    }

    /// The subgroup `elems` as a group in its own right, with the embedding
    /// from its indices back into `self`.
    pub fn subgroup(&self, name: impl Into<String>, elems: &[Elem]) -> Result<(FiniteGroup, Vec<Elem>), GroupError> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut pos = vec![u32::MAX; self.order];
        for (i, x) in sorted.iter().enumerate() {
            pos[x.index()] = i as u32;
        }
        let mut rows = Vec::with_capacity(sorted.len());
        for &a in &sorted {
            let mut row = Vec::with_capacity(sorted.len());
            for &b in &sorted {
                let p = pos[self.mul(a, b).index()];
                if p == u32::MAX {
                    return Err(GroupError::NotSubgroup);
                }
                row.push(p);
            }
            rows.push(row);
        }
        let sub = FiniteGroup::from_table(name, rows)?;
        Ok((sub, sorted))
    }

    /// Exhaustive `O(n^3)` associativity check.
    pub fn check_associativity_exhaustive(&self) -> Result<(), GroupError> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAssociative { a: a.0, b: b.0, c: c.0 });
                    }
                }
            }
        }
        Ok(())
    }

    /// Light's test: `(xy)g = x(yg)` for all `x, y` and `g` in a generating
    /// set is equivalent to full associativity.
    fn check_associativity(&self) -> Result<(), GroupError> {
        let gens = self.greedy_generators();
        for &g in &gens {
            for a in self.elements() {
                for b in self.elements() {
                    if self.mul(self.mul(a, b), g) != self.mul(a, self.mul(b, g)) {
                        return Err(GroupError::NotAssociative { a: a.0, b: b.0, c: g.0 });
                    }
                }
            }
        }
        Ok(())
    }

    /// A small generating set: repeatedly add the element of largest order
    /// (smallest index on ties) outside the current closure.
    ///
    /// The closure here is taken under right multiplication only, so it is
    /// valid before associativity has been established.
    pub fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut closure = self.subgroup_closure(&gens);
        let orders: Vec<u32> = if self.elem_order.len() == self.order {
            self.elem_order.clone()
        } else {
            vec![0; self.order]
        };
        while closure.len() < self.order {
            let mut member = vec![false; self.order];
            for x in &closure {
                member[x.index()] = true;
            }
            let next = self
                .elements()
                .filter(|x| !member[x.index()])
                .max_by_key(|x| (orders[x.index()], std::cmp::Reverse(x.0)))
                .expect("closure is proper");
            gens.push(next);
            closure = self.subgroup_closure(&gens);
        }
        gens
    }

    fn fill_element_orders(&mut self) {
        let mut orders = vec![0u32; self.order];
        for a in self.elements() {
            let mut k = 1;
            let mut x = a;
            while x != self.identity {
                x = self.mul(x, a);
                k += 1;
            }
            orders[a.index()] = k;
        }
        self.elem_order = orders;
    }
}
