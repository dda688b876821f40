//! Conversion from four-entry PD codes `X[i,j,k,l]`.
//!
//! Edges are numbered along the orientation. `i` is the incoming under edge,
//! `k` the outgoing one, and `i, j, k, l` run counterclockwise. The over
//! strand runs `l -> j` when `j = l + 1` or, wrapping around a component,
//! when `l > j + 1`; such a crossing is positive. Every edge must then be
//! entered and left exactly once, otherwise the orientation is rejected.

use super::{DiagramError, KnotDiagram};

pub fn from_pd4(text: &str) -> Result<KnotDiagram, DiagramError> {
    let mut quads = Vec::new();
    let mut rest = text.trim();
    rest = rest.strip_prefix("PD[").and_then(|r| r.strip_suffix(']')).unwrap_or(rest);
    while let Some(start) = rest.find("X[") {
        let end = rest[start..]
            .find(']')
            .ok_or_else(|| DiagramError::Malformed { line: 1, msg: "missing `]`".into() })?;
        let nums = rest[start + 2..start + end]
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| DiagramError::Malformed { line: 1, msg: format!("bad edge `{}`", t.trim()) })
            })
            .collect::<Result<Vec<_>, _>>()?;
        match nums.as_slice() {
            [i, j, k, l] => quads.push([*i, *j, *k, *l]),
            _ => return Err(DiagramError::Malformed { line: 1, msg: "X[...] needs four edges".into() }),
        }
        rest = &rest[start + end + 1..];
    }
    if quads.is_empty() {
        return Err(DiagramError::Malformed { line: 1, msg: "no crossings".into() });
    }
    let mut edges: Vec<u32> = quads.iter().flatten().copied().collect();
    edges.sort_unstable();
    edges.dedup();
    let e = |x: u32| edges.binary_search(&x).expect("collected");
    let mut enters = vec![0usize; edges.len()];
    let mut leaves = vec![0usize; edges.len()];
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut signed = Vec::new();
    for &[i, j, k, l] in &quads {
        let sign: i8 = if j == l + 1 || (l > j + 1) {
            1
        } else if l == j + 1 || (j > l + 1) {
            -1
        } else {
            return Err(DiagramError::Orientation(format!("over edges {j} and {l} at X[{i},{j},{k},{l}]")));
        };
        let (o_in, o_out) = if sign > 0 { (l, j) } else { (j, l) };
        // An edge ends where it enters a crossing and starts where it leaves.
        enters[e(i)] += 1;
        leaves[e(k)] += 1;
        enters[e(o_in)] += 1;
        leaves[e(o_out)] += 1;
        let (a, b) = (find(&mut parent, e(o_in)), find(&mut parent, e(o_out)));
        parent[a.max(b)] = a.min(b);
        signed.push((sign, e(o_in), e(i), e(k)));
    }
    if let Some(x) = (0..edges.len()).find(|&x| enters[x] != 1 || leaves[x] != 1) {
        return Err(DiagramError::Orientation(format!("edge {} is not traversed exactly once", edges[x])));
    }
    let mut label = vec![0u32; edges.len()];
    let mut next = 0;
    let mut root_label = vec![0u32; edges.len()];
    for (x, l) in label.iter_mut().enumerate() {
        let r = find(&mut parent, x);
        if root_label[r] == 0 {
            next += 1;
            root_label[r] = next;
        }
        *l = root_label[r];
    }
    let crossings: Vec<(i8, u32, u32, u32)> =
        signed.iter().map(|&(s, o, i, k)| (s, label[o], label[i], label[k])).collect();
    KnotDiagram::from_labeled(&crossings, &[], None, true)
}
