//! Membership in the Rubik group `Rub_U(X)`, the commutator subgroup of the
//! group `Sym_U(X)` of `U`-equivariant permutations of `X`.
//!
//! `X` must be one `U`-fixed point plus free `U`-orbits. Choosing orbit
//! representatives `x_1..x_r`, an equivariant `pi` is determined by
//! `pi(x_j) = w_j . x_s(j)`, and `pi -> (sign s, prod w_j mod [U, U])` is the
//! abelianization of `Sym_U(X) = U wr S_r`. Membership therefore reduces to
//! an even `s` and a product in `[U, U]`.

use std::collections::HashMap;

use super::perm::{self, normal_closure, Perm};
use super::GroupError;

/// Largest number of free orbits for which the exact check runs.
pub const EXACT_CHECK_MAX_ORBITS: usize = 8;

/// A finite group `U` acting on `0..degree` as a fixed point plus free orbits.
#[derive(Clone, Debug)]
pub struct GroupAction {
    degree: usize,
    fixed: u32,
    /// Every element of `U`, identity first.
    elements: Vec<Perm>,
    gens: Vec<Perm>,
    /// Smallest point of each free orbit.
    reps: Vec<u32>,
    /// Point -> (orbit index, element index with `u . rep = point`).
    coords: Vec<(u32, u32)>,
}

impl GroupAction {
    /// `gens` act on the left: `u . x = u[x]`.
    pub fn new(degree: usize, gens: &[Perm], fixed: u32) -> Result<Self, GroupError> {
        for g in gens {
            if g.len() != degree || !perm::is_bijection(g) {
                return Err(GroupError::NotBijection);
            }
        }
        if fixed as usize >= degree {
            return Err(GroupError::BadOrbitStructure(format!("fixed point {fixed} out of range")));
        }
        let mut elements = vec![perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in gens {
                // Left action: (g u)(x) = g(u(x)), i.e. u then g.
                let y = perm::compose(&x, g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        if elements.iter().any(|u| u[fixed as usize] != fixed) {
            return Err(GroupError::BadOrbitStructure(format!("point {fixed} is not fixed")));
        }
        let mut coords = vec![(u32::MAX, u32::MAX); degree];
        let mut reps = Vec::new();
        for x in 0..degree as u32 {
            if x == fixed || coords[x as usize].0 != u32::MAX {
                continue;
            }
            let orbit = reps.len() as u32;
            for (i, u) in elements.iter().enumerate() {
                let y = u[x as usize] as usize;
                if coords[y].0 != u32::MAX {
                    return Err(GroupError::BadOrbitStructure(format!("orbit of point {x} is not free")));
                }
                coords[y] = (orbit, i as u32);
            }
            reps.push(x);
        }
        Ok(GroupAction { degree, fixed, elements, gens: gens.to_vec(), reps, coords })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn fixed_point(&self) -> u32 {
        self.fixed
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn free_orbits(&self) -> usize {
        self.reps.len()
    }

    fn element_index(&self) -> HashMap<&[u32], usize> {
        self.elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect()
    }

    /// Indices of the elements of `[U, U]`.
    fn derived_subgroup(&self) -> Vec<bool> {
        let index = self.element_index();
        let mut member = vec![false; self.elements.len()];
        member[0] = true;
        let mut list = vec![0usize];
        let mut comms = Vec::new();
        for a in &self.elements {
            for b in &self.elements {
                let c = perm::compose(
                    &perm::compose(&perm::inverse(a), &perm::inverse(b)),
                    &perm::compose(a, b),
                );
                comms.push(index[c.as_slice()]);
            }
        }
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &c in &comms {
                let y = index[perm::compose(&self.elements[x], &self.elements[c]).as_slice()];
                if !std::mem::replace(&mut member[y], true) {
                    list.push(y);
                }
            }
        }
        member
    }

    /// Generators of `Sym_U(X)`: right multiplication by generators of `U`
    /// on the first free orbit, and swaps of adjacent free orbits.
    fn centralizer_generators(&self) -> Vec<Perm> {
        let index = self.element_index();
        let mut out = Vec::new();
        if self.reps.is_empty() {
            return out;
        }
        for g in &self.gens {
            let mut p = perm::identity(self.degree);
            for u in &self.elements {
                // u . x_1 -> (u g) . x_1
                let ug = perm::compose(g, u);
                let j = index[ug.as_slice()];
                p[u[self.reps[0] as usize] as usize] = self.elements[j][self.reps[0] as usize];
            }
            out.push(p);
        }
        for w in self.reps.windows(2) {
            let mut p = perm::identity(self.degree);
            for u in &self.elements {
                let a = u[w[0] as usize];
                let b = u[w[1] as usize];
                p[a as usize] = b;
                p[b as usize] = a;
            }
            out.push(p);
        }
        out
    }
}

/// Outcome of each part of the membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RubikVerdict {
    pub bijection: bool,
    pub equivariant: bool,
    pub fixes_fixed_point: bool,
    pub even_on_orbits: bool,
    pub wreath_product_in_commutator: bool,
    /// Exact membership by closure, when the orbit count allows it.
    pub exact: Option<bool>,
}

impl RubikVerdict {
    pub fn is_member(&self) -> bool {
        self.bijection
            && self.equivariant
            && self.fixes_fixed_point
            && self.even_on_orbits
            && self.wreath_product_in_commutator
    }
}

/// Runs the full test; the exact closure check runs for at most
/// [`EXACT_CHECK_MAX_ORBITS`] free orbits and must agree with the fast test.
pub fn rubik_membership(action: &GroupAction, pi: &[u32]) -> Result<RubikVerdict, GroupError> {
    let mut v = RubikVerdict {
        bijection: pi.len() == action.degree && perm::is_bijection(pi),
        equivariant: false,
        fixes_fixed_point: false,
        even_on_orbits: false,
        wreath_product_in_commutator: false,
        exact: None,
    };
    if !v.bijection {
        return Ok(v);
    }
    v.fixes_fixed_point = pi[action.fixed as usize] == action.fixed;
    // pi(u x) = u pi(x) for generators suffices.
    v.equivariant = action
        .gens
        .iter()
        .all(|g| (0..action.degree).all(|x| pi[g[x] as usize] == g[pi[x] as usize]));
    if v.equivariant && v.fixes_fixed_point {
        let r = action.reps.len();
        let index = action.element_index();
        // table[u][p]: u applied first, then p.
        let table: Vec<Vec<usize>> = action
            .elements
            .iter()
            .map(|u| action.elements.iter().map(|p| index[perm::compose(u, p).as_slice()]).collect())
            .collect();
        let mut sigma = Vec::with_capacity(r);
        let mut product = 0;
        for &x in &action.reps {
            let (orbit, u) = action.coords[pi[x as usize] as usize];
            sigma.push(orbit);
            // Left-action product w_1 w_2 ... w_r.
            product = table[u as usize][product];
        }
        v.even_on_orbits = perm::is_even(&sigma);
        let derived = action.derived_subgroup();
        v.wreath_product_in_commutator = derived[product];
    }
    if action.reps.len() <= EXACT_CHECK_MAX_ORBITS {
        let gens = action.centralizer_generators();
        let mut comms = Vec::new();
        for a in &gens {
            for b in &gens {
                comms.push(perm::compose(
                    &perm::compose(&perm::inverse(a), &perm::inverse(b)),
                    &perm::compose(a, b),
                ));
            }
        }
        let chain = normal_closure(action.degree, &comms, &gens);
        let exact = chain.contains(pi);
        if exact != v.is_member() {
            return Err(GroupError::RubikCheckDisagreement);
        }
        v.exact = Some(exact);
    }
    Ok(v)
}

pub fn is_rubik_member(action: &GroupAction, pi: &[u32]) -> Result<bool, GroupError> {
    rubik_membership(action, pi).map(|v| v.is_member())
}
