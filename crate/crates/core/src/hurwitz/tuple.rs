use std::fmt::Write;

use super::HurwitzError;
use crate::diagram::BraidWord;
use crate::group::{ConjClass, Elem, FiniteGroup};

/// Signs and entries of a tuple on `2k` punctures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonodromyTuple {
    signs: Vec<i8>,
    elems: Vec<Elem>,
}

/// Membership in `T` (entries match the class pattern), `R-hat` (trivial
/// boundary product) and `R` (also onto `G`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strata {
    pub t: bool,
    pub r_hat: bool,
    pub r: bool,
}

/// One Hurwitz move on raw slices. `letter = i` is `sigma_i`, `-i` its
/// inverse:
/// `sigma_i: (a, b) -> (a b a^-1, a)`, `sigma_i^-1: (a, b) -> (b, b^-1 a b)`.
#[inline]
pub fn act_letter(g: &FiniteGroup, signs: &mut [i8], elems: &mut [Elem], letter: i32) {
    let i = letter.unsigned_abs() as usize - 1;
    let (a, b) = (elems[i], elems[i + 1]);
    if letter > 0 {
        elems[i] = g.conj(a, b);
        elems[i + 1] = a;
    } else {
        elems[i] = b;
        elems[i + 1] = g.conj(g.inv(b), a);
    }
    signs.swap(i, i + 1);
}

impl MonodromyTuple {
    pub fn new(signs: Vec<i8>, elems: Vec<Elem>) -> Result<Self, HurwitzError> {
        if signs.len() != elems.len() {
            return Err(HurwitzError::BadTuple(format!("{} signs for {} entries", signs.len(), elems.len())));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(HurwitzError::BadTuple("signs must be +1 or -1".into()));
        }
        Ok(MonodromyTuple { signs, elems })
    }

    /// Alternating signs `+ - + - ..`.
    pub fn alternating(elems: Vec<Elem>) -> Self {
        let signs = (0..elems.len()).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        MonodromyTuple { signs, elems }
    }

    /// `(c, c^-1, .., c, c^-1)` on `2k` punctures.
    pub fn zombie(g: &FiniteGroup, c: Elem, k: usize) -> Self {
        let ci = g.inv(c);
        MonodromyTuple::alternating((0..2 * k).map(|i| if i % 2 == 0 { c } else { ci }).collect())
    }

    /// From the alternating-orientation convention: even positions
    /// (1-based) are inverted.
    pub fn from_alternating_loops(g: &FiniteGroup, values: &[Elem]) -> Self {
        let elems = values
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x } else { g.inv(x) })
            .collect();
        MonodromyTuple::alternating(elems)
    }

    /// Parses `[+3 -7 +a -b]`; each entry is an index or label after its sign.
    pub fn parse(g: &FiniteGroup, text: &str) -> Result<Self, HurwitzError> {
        let body = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| HurwitzError::BadTuple("expected `[...]`".into()))?;
        let mut signs = Vec::new();
        let mut elems = Vec::new();
        for tok in body.split_whitespace() {
            let (s, rest) = match tok.as_bytes()[0] {
                b'+' => (1, &tok[1..]),
                b'-' => (-1, &tok[1..]),
                _ => return Err(HurwitzError::BadTuple(format!("entry `{tok}` has no sign"))),
            };
            signs.push(s);
            elems.push(g.resolve(rest)?);
        }
        MonodromyTuple::new(signs, elems)
    }

    pub fn format(&self) -> String {
        let mut out = String::from("[");
        for (i, (s, e)) in self.signs.iter().zip(&self.elems).enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}{}", if *s > 0 { '+' } else { '-' }, e.0);
        }
        out.push(']');
        out
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    /// Checks `+` entries lie in `class` and `-` entries in its inverse.
    pub fn check_class(&self, g: &FiniteGroup, class: &ConjClass) -> Result<(), HurwitzError> {
        for (i, (&s, &e)) in self.signs.iter().zip(&self.elems).enumerate() {
            let x = if s > 0 { e } else { g.inv(e) };
            if !class.contains(x) {
                return Err(HurwitzError::NotInClass(i + 1));
            }
        }
        Ok(())
    }

    pub fn apply_braid(&self, g: &FiniteGroup, w: &BraidWord) -> Result<Self, HurwitzError> {
        if w.strands() != self.len() {
            return Err(HurwitzError::StrandMismatch { braid: w.strands(), tuple: self.len() });
        }
        let mut out = self.clone();
        for &l in w.letters() {
            act_letter(g, &mut out.signs, &mut out.elems, l);
        }
        Ok(out)
    }

    /// `m_1 m_2 .. m_2k`.
    pub fn boundary_product(&self, g: &FiniteGroup) -> Elem {
        g.product(self.elems.iter().copied())
    }

    pub fn stratify(&self, g: &FiniteGroup, class: &ConjClass) -> Strata {
        let t = self.check_class(g, class).is_ok();
        let r_hat = t && self.boundary_product(g) == g.identity();
        let r = r_hat && g.generates(&self.elems);
        Strata { t, r_hat, r }
    }

    /// The tuple on the disjoint union of the two disks.
    pub fn concat(&self, other: &MonodromyTuple) -> Self {
        let mut out = self.clone();
        out.signs.extend_from_slice(&other.signs);
        out.elems.extend_from_slice(&other.elems);
        out
    }

    /// Entries `range` as a tuple of their own.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        MonodromyTuple { signs: self.signs[range.clone()].to_vec(), elems: self.elems[range].to_vec() }
    }

    /// Applies a map to every entry.
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Self {
        MonodromyTuple { signs: self.signs.clone(), elems: self.elems.iter().map(|&x| f(x)).collect() }
    }

    /// `2 * elem + (sign > 0)` per entry.
    pub(crate) fn encode(&self) -> Vec<u32> {
        self.signs.iter().zip(&self.elems).map(|(&s, e)| e.0 * 2 + (s > 0) as u32).collect()
    }

    #[cfg(test)]
    pub(crate) fn decode(code: &[u32]) -> Self {
        MonodromyTuple {
            signs: code.iter().map(|&v| if v & 1 == 1 { 1 } else { -1 }).collect(),
            elems: code.iter().map(|&v| Elem(v >> 1)).collect(),
        }
    }
}

/// The Hurwitz move on encoded states.
#[inline]
pub(crate) fn act_encoded(g: &FiniteGroup, state: &mut [u32], letter: i32) {
    let i = letter.unsigned_abs() as usize - 1;
    let (a, b) = (Elem(state[i] >> 1), Elem(state[i + 1] >> 1));
    let (sa, sb) = (state[i] & 1, state[i + 1] & 1);
    let (x, y) = if letter > 0 { (g.conj(a, b), a) } else { (b, g.conj(g.inv(b), a)) };
    state[i] = x.0 * 2 + sb;
    state[i + 1] = y.0 * 2 + sa;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::conjugacy_class;

    #[test]
    fn sigma_moves() {
        let g = FiniteGroup::symmetric(3);
        let a = g.resolve("(1 2)").unwrap();
        let b = g.resolve("(2 3)").unwrap();
        let t = MonodromyTuple::new(vec![1, -1], vec![a, b]).unwrap();
        let s = t.apply_braid(&g, &BraidWord::new(2, vec![1]).unwrap()).unwrap();
        assert_eq!(s.elems(), &[g.conj(a, b), a]);
        assert_eq!(s.signs(), &[-1, 1]);
        assert_eq!(s.boundary_product(&g), t.boundary_product(&g));
        let back = s.apply_braid(&g, &BraidWord::new(2, vec![-1]).unwrap()).unwrap();
        assert_eq!(back, t);
        let mut code = t.encode();
        act_encoded(&g, &mut code, 1);
        assert_eq!(MonodromyTuple::decode(&code), s);
    }

    #[test]
    fn parse_format_and_strata() {
        let g = FiniteGroup::alternating(5);
        let c = g.resolve("(1 2 3 4 5)").unwrap();
        let class = conjugacy_class(&g, c);
        let z = MonodromyTuple::zombie(&g, c, 2);
        assert_eq!(MonodromyTuple::parse(&g, &z.format()).unwrap(), z);
        let st = z.stratify(&g, &class);
        assert!(st.t && st.r_hat && !st.r);
        assert!(MonodromyTuple::parse(&g, "[3 +4]").is_err());
    }

    #[test]
    fn alternating_loop_convention() {
        // The boundary word g_2k^-1 g_2k-1 .. g_2^-1 g_1, traversed from g_1
        // outwards, is the uniform ordered product.
        let g = FiniteGroup::alternating(5);
        let vals: Vec<Elem> = [3, 17, 42, 8].iter().map(|&i| Elem(i)).collect();
        let t = MonodromyTuple::from_alternating_loops(&g, &vals);
        let word = [(0, 1), (1, -1), (2, 1), (3, -1)];
        let traversed = g.product(word.iter().map(|&(i, e)| g.pow(vals[i], e)));
        assert_eq!(t.boundary_product(&g), traversed);
        let z = MonodromyTuple::from_alternating_loops(&g, &[vals[0]; 4]);
        assert_eq!(z, MonodromyTuple::zombie(&g, vals[0], 2));
    }
}
