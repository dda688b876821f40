//! Gate gadgets: pure braids on `4k` strands and their checks.
//!
//! Gadget file:
//!
//! ```text
//! gadget planted
//! braid 12: 4 3 3 -4 ...
//! action
//! <|A|^2 indices into A^2, optional>
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ReductionError, ZsatAlphabet};
use crate::config::Budget;
use crate::diagram::BraidWord;
use crate::group::parse::significant_lines;
use crate::group::{rubik_membership, ConjClass, Elem, FiniteGroup, GroupAction, RubikVerdict};
use crate::hurwitz::{schur, MonodromyTuple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    id: String,
    braid: BraidWord,
    action: Option<Vec<u32>>,
}

impl Gadget {
    pub fn new(id: impl Into<String>, braid: BraidWord) -> Self {
        Gadget { id: id.into(), braid, action: None }
    }

    pub fn with_action(mut self, action: Vec<u32>) -> Self {
        self.action = Some(action);
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    /// Stored action on `A^2`, entry `a * |A| + b`.
    pub fn action(&self) -> Option<&[u32]> {
        self.action.as_deref()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("gadget {}\n{}\n", self.id, self.braid);
        if let Some(a) = &self.action {
            out.push_str("action\n");
            for row in a.chunks(16) {
                let r: Vec<String> = row.iter().map(u32::to_string).collect();
                out.push_str(&r.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

pub fn parse_gadget(text: &str) -> Result<Gadget, ReductionError> {
    let lines = significant_lines(text);
    let err = |line: usize, msg: &str| ReductionError::Parse { line, msg: msg.to_string() };
    let (hl, header) = *lines.first().ok_or_else(|| err(0, "empty gadget file"))?;
    let id = header
        .strip_prefix("gadget")
        .map(str::trim)
        .filter(|s| !s.is_empty() && !s.contains(char::is_whitespace))
        .ok_or_else(|| err(hl, "expected `gadget <id>`"))?;
    let (bl, bline) = *lines.get(1).ok_or_else(|| err(hl, "missing `braid` line"))?;
    let braid = BraidWord::parse(bline).map_err(|e| err(bl, &e.to_string()))?;
    let mut g = Gadget::new(id, braid);
    if let Some(&(al, a)) = lines.get(2) {
        if a != "action" {
            return Err(err(al, "expected `action`"));
        }
        let mut rows = Vec::new();
        for &(n, l) in &lines[3..] {
            for t in l.split_whitespace() {
                rows.push(t.parse::<u32>().map_err(|_| err(n, &format!("bad index `{t}`")))?);
            }
        }
        g = g.with_action(rows);
    }
    Ok(g)
}

/// Gadgets by id.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    gadgets: BTreeMap<String, Gadget>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    pub fn insert(&mut self, g: Gadget) {
        self.gadgets.insert(g.id.clone(), g);
    }

    pub fn get(&self, id: &str) -> Option<&Gadget> {
        self.gadgets.get(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.gadgets.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.gadgets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gadgets.is_empty()
    }
}

/// Reads every `*.gadget` file in a directory.
pub fn load_registry(dir: &Path) -> Result<Registry, ReductionError> {
    let io = |e: std::io::Error| ReductionError::Io(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gadget"))
        .collect();
    paths.sort();
    let mut reg = Registry::new();
    for p in paths {
        let text = std::fs::read_to_string(&p).map_err(io)?;
        reg.insert(parse_gadget(&text)?);
    }
    Ok(reg)
}

/// A test gadget for symbol pairs on `4k` strands, `k >= 3`: the commutator
/// of `A_{2,4}^3` and `A_{3,5}^-3`. It moves only interior strands of the
/// first symbol, so it maps `A^2` into itself, and cubes of pure generators
/// fix every tuple of transpositions in `S3`. It is not claimed to act
/// trivially off `A^2`.
pub fn planted_gadget(k: usize) -> Result<Gadget, ReductionError> {
    let s = 4 * k;
    let a = BraidWord::pure_generator(s, 2, 4, 3)?;
    let b = BraidWord::pure_generator(s, 3, 5, -3)?;
    Ok(Gadget::new("planted", BraidWord::commutator(&a, &b)))
}

fn check_strands(g: &Gadget, alph: &ZsatAlphabet) -> Result<(), ReductionError> {
    let expected = 4 * alph.k();
    if g.braid.strands() != expected {
        return Err(ReductionError::GadgetStrands { id: g.id.clone(), expected, found: g.braid.strands() });
    }
    Ok(())
}

/// The action of the braid on `A^2`, or `None` if some pair leaves `A^2`.
pub fn gadget_action(g: &Gadget, alph: &ZsatAlphabet) -> Result<Option<Vec<u32>>, ReductionError> {
    check_strands(g, alph)?;
    let grp = alph.group();
    let n = alph.len();
    let half = 2 * alph.k();
    let rows: Vec<Option<u32>> = (0..n * n)
        .into_par_iter()
        .map(|ab| {
            let t = alph.symbols()[ab / n].concat(&alph.symbols()[ab % n]);
            let img = t.apply_braid(grp, &g.braid).expect("strands checked");
            let a = alph.index_of(&img.elems()[..half])?;
            let b = alph.index_of(&img.elems()[half..])?;
            (img.signs() == t.signs()).then_some((a * n + b) as u32)
        })
        .collect();
    Ok(rows.into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Exhaustive,
    Sampled,
}

/// One property checked on a state set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub regime: Regime,
    pub checked: u64,
    pub failures: u64,
    pub example: Option<MonodromyTuple>,
}

impl PropertyCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct GadgetReport {
    pub id: String,
    pub letters: usize,
    /// Property 4.
    pub pure: bool,
    /// Property 1: the action on `A^2`, if the braid preserves `A^2`.
    pub action: Option<Vec<u32>>,
    pub moved: usize,
    pub rubik: Option<RubikVerdict>,
    /// Property 2: trivial on onto, Schur-trivial states outside
    /// `U-hat . (A^2)`.
    pub outside: PropertyCheck,
    /// Property 3, per smaller pair.
    pub smaller: Vec<(String, PropertyCheck)>,
}

impl GadgetReport {
    pub fn property1(&self) -> bool {
        self.action.is_some() && self.rubik.as_ref().is_some_and(RubikVerdict::is_member)
    }

    pub fn property3(&self) -> bool {
        self.smaller.iter().all(|(_, c)| c.passed())
    }

    pub fn is_valid(&self) -> bool {
        self.pure && self.property1() && self.outside.passed() && self.property3()
    }
}

fn fixes(g: &FiniteGroup, w: &BraidWord, t: &MonodromyTuple) -> bool {
    t.apply_braid(g, w).expect("strands checked") == *t
}

/// Runs all four checks. Sets too large for `budget.states` are sampled
/// with `budget.samples` draws from `budget.seed`.
pub fn validate_gadget(
    g: &Gadget,
    alph: &ZsatAlphabet,
    smaller: &[(FiniteGroup, ConjClass)],
    budget: &Budget,
) -> Result<GadgetReport, ReductionError> {
    check_strands(g, alph)?;
    let w = &g.braid;
    let pure = w.is_pure();
    let action = gadget_action(g, alph)?;
    let n = alph.len();
    let (moved, rubik) = match &action {
        Some(table) => {
            let gens: Vec<Vec<u32>> = alph
                .u_perms()
                .iter()
                .map(|p| (0..n * n).map(|ab| p[ab / n] * n as u32 + p[ab % n]).collect())
                .collect();
            let ua = GroupAction::new(n * n, &gens, 0)?;
            let moved = table.iter().enumerate().filter(|&(i, &v)| i as u32 != v).count();
            (moved, Some(rubik_membership(&ua, table)?))
        }
        None => (0, None),
    };
    let outside = check_outside(alph, w, budget)?;
    let mut smaller_checks = Vec::new();
    for (j, e) in smaller {
        smaller_checks.push((format!("{} / class of {}", j.name(), j.format_elem(e.representative())), check_all(j, e, w, 4 * alph.k(), budget)));
    }
    Ok(GadgetReport { id: g.id.clone(), letters: w.len(), pure, action, moved, rubik, outside, smaller: smaller_checks })
}

fn check_outside(alph: &ZsatAlphabet, w: &BraidWord, budget: &Budget) -> Result<PropertyCheck, ReductionError> {
    let grp = alph.group();
    let class = alph.class();
    let len = 4 * alph.k();
    let inv: Vec<Elem> = class.members().iter().map(|&x| grp.inv(x)).collect();
    let relevant = |t: &MonodromyTuple| -> Result<bool, ReductionError> {
        if !grp.generates(t.elems()) {
            return Ok(false);
        }
        if let Some(rm) = alph.multiplier() {
            if schur(t, rm)? != rm.quotient().cover().identity() {
                return Ok(false);
            }
        }
        Ok(!alph.in_saturated_square(t))
    };
    let mut check = PropertyCheck { regime: Regime::Sampled, checked: 0, failures: 0, example: None };
    let space = (class.size() as u64).checked_pow(len as u32 - 1).unwrap_or(u64::MAX);
    if space <= budget.states {
        check.regime = Regime::Exhaustive;
        let mut idx = vec![0usize; len - 1];
        loop {
            let mut elems: Vec<Elem> =
                idx.iter().enumerate().map(|(p, &i)| if p % 2 == 0 { class.members()[i] } else { inv[i] }).collect();
            let last = grp.inv(grp.product(elems.iter().copied()));
            if class.contains(grp.inv(last)) {
                elems.push(last);
                let t = MonodromyTuple::alternating(elems);
                if relevant(&t)? {
                    record(&mut check, grp, w, t);
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
        return Ok(check);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut attempts = 0usize;
    while (check.checked as usize) < budget.samples && attempts < budget.samples.saturating_mul(500) {
        attempts += 1;
        let mut elems: Vec<Elem> = (0..len - 1)
            .map(|p| {
                let i = rng.gen_range(0..class.size());
                if p % 2 == 0 { class.members()[i] } else { inv[i] }
            })
            .collect();
        let last = grp.inv(grp.product(elems.iter().copied()));
        if !class.contains(grp.inv(last)) {
            continue;
        }
        elems.push(last);
        let t = MonodromyTuple::alternating(elems);
        if relevant(&t)? {
            record(&mut check, grp, w, t);
        }
    }
    Ok(check)
}

fn record(check: &mut PropertyCheck, g: &FiniteGroup, w: &BraidWord, t: MonodromyTuple) {
    check.checked += 1;
    if !fixes(g, w, &t) {
        check.failures += 1;
        if check.example.is_none() {
            check.example = Some(t);
        }
    }
}

/// Every alternating tuple over `(J, E)` when it fits the budget, samples
/// otherwise.
fn check_all(j: &FiniteGroup, e: &ConjClass, w: &BraidWord, len: usize, budget: &Budget) -> PropertyCheck {
    let inv: Vec<Elem> = e.members().iter().map(|&x| j.inv(x)).collect();
    let build = |idx: &[usize]| -> MonodromyTuple {
        MonodromyTuple::alternating(
            idx.iter().enumerate().map(|(p, &i)| if p % 2 == 0 { e.members()[i] } else { inv[i] }).collect(),
        )
    };
    let space = (e.size() as u64).checked_pow(len as u32).unwrap_or(u64::MAX);
    if space <= budget.states {
        let size = e.size();
        let results: Vec<(u64, u64, Option<MonodromyTuple>)> = (0..size)
            .into_par_iter()
            .map(|first| {
                let mut idx = vec![0usize; len];
                idx[0] = first;
                let (mut checked, mut failures, mut example) = (0u64, 0u64, None);
                loop {
                    let t = build(&idx);
                    checked += 1;
                    if !fixes(j, w, &t) {
                        failures += 1;
                        example.get_or_insert(t);
                    }
                    let mut p = 1;
                    while p < len {
                        idx[p] += 1;
                        if idx[p] < size {
                            break;
                        }
                        idx[p] = 0;
                        p += 1;
                    }
                    if p == len {
                        return (checked, failures, example);
                    }
                }
            })
            .collect();
        let mut check = PropertyCheck { regime: Regime::Exhaustive, checked: 0, failures: 0, example: None };
        for (c, f, ex) in results {
            check.checked += c;
            check.failures += f;
            if check.example.is_none() {
                check.example = ex;
            }
        }
        return check;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut check = PropertyCheck { regime: Regime::Sampled, checked: 0, failures: 0, example: None };
    for _ in 0..budget.samples {
        let idx: Vec<usize> = (0..len).map(|_| rng.gen_range(0..e.size())).collect();
        let t = build(&idx);
        check.checked += 1;
        if !fixes(j, w, &t) {
            check.failures += 1;
            check.example.get_or_insert(t);
        }
    }
    check
}
