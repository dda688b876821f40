//! Plat closures: a braid capped below and above by non-crossing matchings.
//!
//! Each strand carries a sign, `+1` when oriented upwards. The letter
//! `sigma_i^e` passes the strand moving from position `i` to `i+1` over the
//! other one when `e = +1`, and the strand moving from `i+1` to `i` when
//! `e = -1`. With this choice the crossing between strands of signs `s_a` and
//! `s_b` has sign `-e * s_a * s_b`, which makes the Wirtinger relations agree
//! with the Hurwitz action on monodromies `m = x^s`.

use super::{BraidWord, DiagramError, KnotDiagram};

/// Bottom and top matchings on strand positions, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlatPairing {
    strands: usize,
    bottom: Vec<(usize, usize)>,
    top: Vec<(usize, usize)>,
}

fn check_matching(strands: usize, pairs: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, DiagramError> {
    let mut seen = vec![false; strands];
    let mut out = Vec::new();
    for &(a, b) in pairs {
        let (a, b) = (a.min(b), a.max(b));
        if b >= strands || a == b {
            return Err(DiagramError::CrossingMatching(format!("bad pair ({} {})", a + 1, b + 1)));
        }
        for p in [a, b] {
            if std::mem::replace(&mut seen[p], true) {
                return Err(DiagramError::CrossingMatching(format!("position {} used twice", p + 1)));
            }
        }
        out.push((a, b));
    }
    if let Some(p) = seen.iter().position(|s| !s) {
        return Err(DiagramError::CrossingMatching(format!("position {} is unmatched", p + 1)));
    }
    for &(a, b) in &out {
        for &(c, d) in &out {
            if a < c && c < b && b < d {
                return Err(DiagramError::CrossingMatching(format!(
                    "({} {}) crosses ({} {})",
                    a + 1,
                    b + 1,
                    c + 1,
                    d + 1
                )));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn parse_pairs(text: &str, line: usize) -> Result<Vec<(usize, usize)>, DiagramError> {
    let bad = |msg: String| DiagramError::Malformed { line, msg };
    let mut pairs = Vec::new();
    for chunk in text.split(')') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let body = chunk.strip_prefix('(').ok_or_else(|| bad(format!("expected `(` in `{chunk}`")))?;
        let nums = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad position `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        match nums.as_slice() {
            [a, b] if *a >= 1 && *b >= 1 => pairs.push((a - 1, b - 1)),
            _ => return Err(bad(format!("expected a pair in `{chunk})`"))),
        }
    }
    Ok(pairs)
}

impl PlatPairing {
    /// Pairs are 1-based.
    pub fn new(strands: usize, bottom: &[(usize, usize)], top: &[(usize, usize)]) -> Result<Self, DiagramError> {
        if !strands.is_multiple_of(2) {
            return Err(DiagramError::CrossingMatching(format!("{strands} strands is odd")));
        }
        let zero = |ps: &[(usize, usize)]| -> Result<Vec<(usize, usize)>, DiagramError> {
            ps.iter()
                .map(|&(a, b)| {
                    if a == 0 || b == 0 {
                        Err(DiagramError::CrossingMatching("positions are 1-based".into()))
                    } else {
                        Ok((a - 1, b - 1))
                    }
                })
                .collect()
        };
        Ok(PlatPairing {
            strands,
            bottom: check_matching(strands, &zero(bottom)?)?,
            top: check_matching(strands, &zero(top)?)?,
        })
    }

    /// Adjacent caps `(1 2)(3 4)...` at both ends.
    pub fn standard(strands: usize) -> Result<Self, DiagramError> {
        let pairs: Vec<(usize, usize)> = (0..strands / 2).map(|j| (2 * j + 1, 2 * j + 2)).collect();
        PlatPairing::new(strands, &pairs, &pairs)
    }

    /// Parses `bottom: (1 2)(3 4)` and `top: ...` lines.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let mut bottom = None;
        let mut top = None;
        for (n, raw) in text.lines().enumerate() {
            let l = raw.split('#').next().unwrap_or("").trim();
            if l.is_empty() {
                continue;
            }
            if let Some(r) = l.strip_prefix("bottom:") {
                bottom = Some(parse_pairs(r, n + 1)?);
            } else if let Some(r) = l.strip_prefix("top:") {
                top = Some(parse_pairs(r, n + 1)?);
            } else {
                return Err(DiagramError::Malformed { line: n + 1, msg: format!("unexpected `{l}`") });
            }
        }
        let missing = |w: &str| DiagramError::Malformed { line: 0, msg: format!("missing `{w}:` line") };
        let bottom = bottom.ok_or_else(|| missing("bottom"))?;
        let top = top.ok_or_else(|| missing("top"))?;
        let strands = 2 * bottom.len();
        Ok(PlatPairing {
            strands,
            bottom: check_matching(strands, &bottom)?,
            top: check_matching(strands, &top)?,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// 0-based bottom pairs `(a, b)` with `a < b`.
    pub fn bottom(&self) -> &[(usize, usize)] {
        &self.bottom
    }

    pub fn top(&self) -> &[(usize, usize)] {
        &self.top
    }

    fn partners(pairs: &[(usize, usize)], n: usize) -> Vec<usize> {
        let mut p = vec![0; n];
        for &(a, b) in pairs {
            p[a] = b;
            p[b] = a;
        }
        p
    }

    pub fn bottom_partner(&self) -> Vec<usize> {
        Self::partners(&self.bottom, self.strands)
    }

    pub fn top_partner(&self) -> Vec<usize> {
        Self::partners(&self.top, self.strands)
    }

    pub fn to_text(&self) -> String {
        let fmt = |ps: &[(usize, usize)]| -> String {
            ps.iter().map(|(a, b)| format!("({} {})", a + 1, b + 1)).collect()
        };
        format!("bottom: {}\ntop: {}\n", fmt(&self.bottom), fmt(&self.top))
    }
}

fn check_strands(b: &BraidWord, p: &PlatPairing) -> Result<(), DiagramError> {
    if b.strands() != p.strands() {
        return Err(DiagramError::StrandMismatch { braid: b.strands(), pairing: p.strands() });
    }
    Ok(())
}

/// Orientation of each strand (indexed by bottom position): every
/// component is oriented upwards on its lowest-numbered bottom position.
pub fn default_signs(b: &BraidWord, p: &PlatPairing) -> Result<Vec<i8>, DiagramError> {
    check_strands(b, p)?;
    let s = p.strands();
    let perm = b.permutation();
    let mut inv = vec![0; s];
    for (i, &t) in perm.iter().enumerate() {
        inv[t] = i;
    }
    let (pb, pt) = (p.bottom_partner(), p.top_partner());
    let mut sign = vec![0i8; s];
    for start in 0..s {
        let mut cur = start;
        while sign[cur] == 0 {
            sign[cur] = 1;
            let down = inv[pt[perm[cur]]];
            sign[down] = -1;
            cur = pb[down];
        }
    }
    Ok(sign)
}

pub fn plat_closure(b: &BraidWord, p: &PlatPairing) -> Result<KnotDiagram, DiagramError> {
    let signs = default_signs(b, p)?;
    plat_closure_with_signs(b, p, &signs)
}

/// Builds the closure with the given strand orientations (by bottom
/// position). Arcs through bottom positions are numbered first, in position
/// order, so the arc at bottom position 1 is arc 0.
pub fn plat_closure_with_signs(b: &BraidWord, p: &PlatPairing, signs: &[i8]) -> Result<KnotDiagram, DiagramError> {
    check_strands(b, p)?;
    let s = p.strands();
    if signs.len() != s || signs.iter().any(|&x| x != 1 && x != -1) {
        return Err(DiagramError::SignMismatch(0));
    }
    for &(a, c) in p.bottom() {
        if signs[a] == signs[c] {
            return Err(DiagramError::SignMismatch(a + 1));
        }
    }
    let mut at: Vec<usize> = (0..s).collect();
    let mut cur_seg: Vec<usize> = (0..s).collect();
    let mut segs = s;
    // (sign, over segment, in segment, out segment)
    let mut xs: Vec<(i8, usize, usize, usize)> = Vec::with_capacity(b.len());
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let eps: i8 = if l > 0 { 1 } else { -1 };
        let (lo, hi) = (at[i], at[i + 1]);
        let (over, under) = if eps > 0 { (lo, hi) } else { (hi, lo) };
        let sign = -eps * signs[lo] * signs[hi];
        let old = cur_seg[under];
        let new = segs;
        segs += 1;
        cur_seg[under] = new;
        let (inn, out) = if signs[under] > 0 { (old, new) } else { (new, old) };
        xs.push((sign, cur_seg[over], inn, out));
        at.swap(i, i + 1);
    }
    for &(t, u) in p.top() {
        if signs[at[t]] == signs[at[u]] {
            return Err(DiagramError::SignMismatch(t + 1));
        }
    }

    let mut parent: Vec<usize> = (0..segs).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    for &(a, c) in p.bottom() {
        union(a, c);
    }
    for &(t, u) in p.top() {
        union(cur_seg[at[t]], cur_seg[at[u]]);
    }
    let mut arc_of_root = vec![usize::MAX; segs];
    let mut arcs = 0;
    let mut arc = vec![0usize; segs];
    for (seg, slot) in arc.iter_mut().enumerate() {
        let r = find(&mut parent, seg);
        if arc_of_root[r] == usize::MAX {
            arc_of_root[r] = arcs;
            arcs += 1;
        }
        *slot = arc_of_root[r];
    }
    let label = |seg: usize| arc[seg] as u32 + 1;
    let crossings: Vec<(i8, u32, u32, u32)> =
        xs.iter().map(|&(sg, o, i, u)| (sg, label(o), label(i), label(u))).collect();
    let mut under = vec![false; arcs];
    for &(_, _, i, u) in &xs {
        under[arc[i]] = true;
        under[arc[u]] = true;
    }
    let circles: Vec<u32> = (0..arcs).filter(|&a| !under[a]).map(|a| a as u32 + 1).collect();
    KnotDiagram::from_labeled(&crossings, &circles, None, false)
}
