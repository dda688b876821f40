#![allow(dead_code)]

use std::path::PathBuf;

use platknot::diagram::{plat_closure, BraidWord, KnotDiagram, PlatPairing};
use platknot::group::{conjugacy_class, load_extension, load_group, CentralExtension, ConjClass, Elem, FiniteGroup};
use platknot::hurwitz::MonodromyTuple;
use rand::Rng;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

/// `SL(2,5) -> A5`, with the base taken from `a5.grp` so labels resolve.
pub fn a5_cover() -> (FiniteGroup, CentralExtension) {
    let g = load_group(&read("a5.grp")).unwrap();
    let ext = load_extension(&read("sl25_a5.ext")).unwrap().over_base(&g).unwrap();
    (g, ext)
}

pub fn class_of(g: &FiniteGroup, spec: &str) -> ConjClass {
    conjugacy_class(g, g.resolve(spec).unwrap())
}

pub fn s3() -> (FiniteGroup, ConjClass) {
    let g = load_group(&read("s3.grp")).unwrap();
    let c = class_of(&g, "t");
    (g, c)
}

pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

/// A random non-crossing matching on `0..n`, 1-based pairs.
pub fn random_matching<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    fn go<R: Rng>(rng: &mut R, lo: usize, hi: usize, out: &mut Vec<(usize, usize)>) {
        if lo >= hi {
            return;
        }
        // Partner of `lo` sits an odd distance away.
        let choices: Vec<usize> = (lo + 1..hi).step_by(2).collect();
        let p = choices[rng.gen_range(0..choices.len())];
        out.push((lo + 1, p + 1));
        go(rng, lo + 1, p, out);
        go(rng, p + 1, hi, out);
    }
    let mut out = Vec::new();
    go(rng, 0, n, &mut out);
    out
}

pub fn random_pairing<R: Rng>(rng: &mut R, strands: usize) -> PlatPairing {
    let b = random_matching(rng, strands);
    let t = random_matching(rng, strands);
    PlatPairing::new(strands, &b, &t).unwrap()
}

/// A plat on 2, 4 or 6 strands with at most `max_crossings` letters.
pub fn random_plat<R: Rng>(rng: &mut R, max_strands: usize, max_crossings: usize) -> (BraidWord, PlatPairing, KnotDiagram) {
    let strands = 2 * rng.gen_range(1..=max_strands / 2);
    let b = random_braid(rng, strands, max_crossings);
    let p = random_pairing(rng, strands);
    let d = plat_closure(&b, &p).unwrap();
    (b, p, d)
}

pub fn pick<R: Rng, T: Copy>(rng: &mut R, xs: &[T]) -> T {
    xs[rng.gen_range(0..xs.len())]
}

/// Random signs, entries from `C` or `C^-1`; with `trivial_product` the
/// last entry is solved for and the draw repeated until it fits.
pub fn random_tuple<R: Rng>(
    rng: &mut R,
    g: &FiniteGroup,
    class: &ConjClass,
    k: usize,
    trivial_product: bool,
) -> MonodromyTuple {
    let n = 2 * k;
    loop {
        let mut signs: Vec<i8> = vec![1; k];
        signs.extend(vec![-1; k]);
        for i in (1..n).rev() {
            signs.swap(i, rng.gen_range(0..=i));
        }
        let mut elems: Vec<Elem> = signs
            .iter()
            .map(|&s| {
                let x = pick(rng, class.members());
                if s > 0 {
                    x
                } else {
                    g.inv(x)
                }
            })
            .collect();
        if trivial_product {
            let head = g.product(elems[..n - 1].iter().copied());
            let last = g.inv(head);
            let fits = if signs[n - 1] > 0 { class.contains(last) } else { class.contains(g.inv(last)) };
            if !fits {
                continue;
            }
            elems[n - 1] = last;
        }
        return MonodromyTuple::new(signs, elems).unwrap();
    }
}
