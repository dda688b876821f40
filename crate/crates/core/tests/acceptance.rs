//! Acceptance run: one line per criterion with its time, then a non-zero
//! exit if any failed. Run with `cargo test -p platknot --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use platknot::coloring::{count_colorings, count_pinned, count_q, image_breakdown, plat_transfer_count};
use platknot::config::Budget;
use platknot::diagram::{parse_pd, BraidWord};
use platknot::group::{conjugacy_classes, reduced_multiplier, Elem};
use platknot::hurwitz::{density_scan, enumerate_orbits, schur, MonodromyTuple, Stratum};
use platknot::reduction::{
    compile, load_registry, planted_gadget, smallest_nondegenerate_k, verify_reduction, Gate, Registry, SmallerPair,
    ZsatCircuit,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {{
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    }};
}

fn c1_unknot() -> Result<String, String> {
    let u = parse_pd(&read("unknot.pd")).map_err(|e| e.to_string())?;
    let (s3, t) = s3();
    let (a5, _) = a5_cover();
    let mut pairs = vec![(s3, t)];
    for c in conjugacy_classes(&a5).into_iter().filter(|c| c.size() > 1) {
        pairs.push((a5.clone(), c));
    }
    for (g, c) in &pairs {
        let n = count_colorings(&u, g, c).map_err(|e| e.to_string())?;
        ensure!(n == c.size() as u64, "{}: {n} colorings, |C| = {}", g.name(), c.size());
        let q = count_q(&u, g, c).map_err(|e| e.to_string())?;
        ensure!(q.q == 0, "{}: q = {}", g.name(), q.q);
    }
    Ok(format!("{} (group, class) pairs", pairs.len()))
}

fn c2_trefoil() -> Result<String, String> {
    let d = parse_pd(&read("trefoil.pd")).map_err(|e| e.to_string())?;
    let (g, c) = s3();
    let n = count_colorings(&d, &g, &c).map_err(|e| e.to_string())?;
    let q = count_q(&d, &g, &c).map_err(|e| e.to_string())?;
    ensure!(n == 9 && q.q == 1, "count {n}, q {}", q.q);
    let b = image_breakdown(&d, &g, &c).map_err(|e| e.to_string())?;
    ensure!(b.only_cyclic_and_full(g.order()), "breakdown has intermediate images");
    let eq1 = c.size() as u64 + q.aut_class as u64 * q.q;
    ensure!(eq1 == n, "|C| + |Aut(G,C)| q = {eq1}");
    let script = concat!(env!("CARGO_MANIFEST_DIR"), "/../../scripts/trefoil_oracle.py");
    let out = Command::new("python3").arg(script).output().map_err(|e| format!("oracle script: {e}"))?;
    let oracle = String::from_utf8_lossy(&out.stdout).trim().to_string();
    ensure!(oracle == "9", "oracle script printed `{oracle}`");
    Ok(format!("9 = 3 + {}*1, oracle 9", q.aut_class))
}

fn c3_pinning() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (s3, t) = s3();
    let (a5, _) = a5_cover();
    let pairs = [(s3, t), (a5.clone(), class_of(&a5, "3a"))];
    let mut checks = 0;
    for _ in 0..24 {
        let (_, _, d) = random_plat(&mut rng, 6, 10);
        for (g, c) in &pairs {
            let total = count_colorings(&d, g, c).map_err(|e| e.to_string())?;
            for arc in 0..d.arc_count() {
                let x = pick(&mut rng, c.members());
                let p = count_pinned(&d, arc, g, c, x).map_err(|e| e.to_string())?;
                ensure!(total == c.size() as u64 * p, "{}: total {total}, pinned {p} at arc {arc}", g.name());
                checks += 1;
            }
        }
    }
    Ok(format!("24 diagrams, {checks} arc checks"))
}

fn c4_transfer() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (s3, t) = s3();
    let (a5, _) = a5_cover();
    let pairs = [(s3, t), (a5.clone(), class_of(&a5, "5c"))];
    let mut nonzero = 0;
    for _ in 0..60 {
        let strands = if rng.gen_bool(0.5) { 2 } else { 4 };
        let b = random_braid(&mut rng, strands, 8);
        let p = random_pairing(&mut rng, strands);
        let d = platknot::diagram::plat_closure(&b, &p).map_err(|e| e.to_string())?;
        for (g, c) in &pairs {
            let w = count_colorings(&d, g, c).map_err(|e| e.to_string())?;
            let h = plat_transfer_count(&b, &p, None, g, c, None).map_err(|e| e.to_string())?;
            ensure!(w == h, "{b}: Wirtinger {w}, transfer {h}");
            nonzero += usize::from(w > c.size() as u64);
        }
    }
    Ok(format!("60 braids x 2 groups, {nonzero} beyond cyclic"))
}

fn c5_hurwitz() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (g, ext) = a5_cover();
    let classes: Vec<_> = conjugacy_classes(&g).into_iter().filter(|c| c.size() > 1).collect();
    let rms: Vec<_> = classes.iter().map(|c| reduced_multiplier(&ext, c).unwrap()).collect();
    let sign_count = |t: &MonodromyTuple| t.signs().iter().filter(|&&s| s > 0).count();
    for n in 0..1000 {
        let ci = rng.gen_range(0..classes.len());
        let (c, rm) = (&classes[ci], &rms[ci]);
        let k = rng.gen_range(1..=3);
        let t = random_tuple(&mut rng, &g, c, k, n % 2 == 0);
        let w = random_braid(&mut rng, 2 * k, 12);
        let u = t.apply_braid(&g, &w).map_err(|e| e.to_string())?;
        ensure!(u.boundary_product(&g) == t.boundary_product(&g), "product moved by {w}");
        ensure!(u.stratify(&g, c) == t.stratify(&g, c), "strata moved by {w}");
        ensure!(sign_count(&u) == sign_count(&t) && u.check_class(&g, c).is_ok(), "class pattern moved by {w}");
        if t.stratify(&g, c).r_hat {
            let (a, b) = (schur(&t, rm).map_err(|e| e.to_string())?, schur(&u, rm).map_err(|e| e.to_string())?);
            ensure!(a == b, "sch moved by {w}");
        }
        let back = u.apply_braid(&g, &w.inverse()).map_err(|e| e.to_string())?;
        ensure!(back == t, "w^-1 w is not the identity");
        if k >= 2 {
            let i = rng.gen_range(1..2 * k as i32 - 1);
            let act = |l: Vec<i32>| t.apply_braid(&g, &BraidWord::new(2 * k, l).unwrap()).unwrap();
            ensure!(act(vec![i, i + 1, i]) == act(vec![i + 1, i, i + 1]), "braid relation at {i}");
        }
        if k == 3 {
            ensure!(t.apply_braid(&g, &BraidWord::new(6, vec![1, 4]).unwrap()).unwrap()
                == t.apply_braid(&g, &BraidWord::new(6, vec![4, 1]).unwrap()).unwrap(), "distant letters");
        }
    }
    Ok("1000 pairs".into())
}

/// Caps on a random non-crossing matching, each oriented at random, moved
/// by a random braid: these tuples bound a trivial tangle.
fn plat_tuple<R: Rng>(rng: &mut R, g: &platknot::group::FiniteGroup, c: &platknot::group::ConjClass, k: usize) -> MonodromyTuple {
    let n = 2 * k;
    let mut signs = vec![0i8; n];
    let mut elems = vec![Elem(0); n];
    for (a, b) in random_matching(rng, n) {
        let x = pick(rng, c.members());
        let (a, b) = if rng.gen_bool(0.5) { (a - 1, b - 1) } else { (b - 1, a - 1) };
        signs[a] = 1;
        elems[a] = x;
        signs[b] = -1;
        elems[b] = g.inv(x);
    }
    // Caps nest, so the boundary product telescopes to the identity.
    let t = MonodromyTuple::new(signs, elems).unwrap();
    t.apply_braid(g, &random_braid(rng, n, 12)).unwrap()
}

fn c6_schur() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (g, ext) = a5_cover();
    let mut plats = 0;
    let mut nontrivial = 0;
    let mut pairs = 0;
    for c in conjugacy_classes(&g).into_iter().filter(|c| c.size() > 1) {
        let rm = reduced_multiplier(&ext, &c).map_err(|e| e.to_string())?;
        let cover = rm.quotient().cover();
        let e = cover.identity();
        for k in 1..=3 {
            ensure!(schur(&MonodromyTuple::zombie(&g, c.representative(), k), &rm) == Ok(e), "zombie");
        }
        // Every standard-cap tuple for k = 2, then random plats up to k = 3.
        for &a in c.members() {
            for &b in c.members() {
                let t = MonodromyTuple::from_alternating_loops(&g, &[a, a, b, b]);
                ensure!(schur(&t, &rm) == Ok(e), "standard caps {}", t.format());
                plats += 1;
            }
        }
        for _ in 0..300 {
            let k = rng.gen_range(1..=3);
            let t = plat_tuple(&mut rng, &g, &c, k);
            ensure!(schur(&t, &rm) == Ok(e), "plat {} has sch {:?}", t.format(), schur(&t, &rm));
            plats += 1;
        }
        for _ in 0..100 {
            let (ka, kb) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let a = random_tuple(&mut rng, &g, &c, ka, true);
            let b = random_tuple(&mut rng, &g, &c, kb, true);
            let (sa, sb) = (schur(&a, &rm).unwrap(), schur(&b, &rm).unwrap());
            let sab = schur(&a.concat(&b), &rm).map_err(|e| e.to_string())?;
            ensure!(sab == cover.mul(sa, sb), "additivity fails on {} # {}", a.format(), b.format());
            nontrivial += usize::from(sa != e);
            pairs += 1;
        }
    }
    ensure!(nontrivial > 0, "no sampled tuple had a nontrivial invariant");
    Ok(format!("{plats} plat tuples, {pairs} pairs ({nontrivial} with sch != 0)"))
}

fn c7_multiplier() -> Result<String, String> {
    let (g, ext) = a5_cover();
    let cover = ext.cover();
    let mut orders = Vec::new();
    for c in conjugacy_classes(&g) {
        if c.size() == 1 {
            ensure!(reduced_multiplier(&ext, &c).is_err(), "identity class accepted");
            continue;
        }
        let rm = reduced_multiplier(&ext, &c).map_err(|e| e.to_string())?;
        let x = c.representative();
        let hat = ext.fiber(x)[0];
        // m in the kernel is collapsed iff some cover element conjugates the
        // lift to m times the lift.
        let by_conjugacy: BTreeSet<Elem> = ext
            .kernel()
            .iter()
            .copied()
            .filter(|&m| {
                let target = cover.mul(m, hat);
                cover.elements().any(|y| cover.mul(cover.mul(y, hat), cover.inv(y)) == target)
            })
            .collect();
        // Same subgroup from commutators with lifts of the centraliser.
        let by_commutator: BTreeSet<Elem> = cover
            .elements()
            .filter(|&y| g.mul(ext.proj(y), x) == g.mul(x, ext.proj(y)))
            .map(|y| cover.mul(cover.mul(y, hat), cover.mul(cover.inv(y), cover.inv(hat))))
            .collect();
        let lib: BTreeSet<Elem> = rm.collapse().iter().copied().collect();
        ensure!(by_conjugacy == by_commutator, "the two oracles disagree");
        ensure!(lib == by_conjugacy, "class of {}: library {lib:?}, oracle {by_conjugacy:?}", g.format_elem(x));
        ensure!(rm.order() * lib.len() == ext.kernel().len(), "order");
        orders.push(format!("{}:{}", g.element_order(x), rm.order()));
    }
    Ok(format!("|M(G,C)| by element order: {}", orders.join(" ")))
}

fn c8_density() -> Result<String, String> {
    let (g, ext) = a5_cover();
    let inv = class_of(&g, "2a");
    let rm = reduced_multiplier(&ext, &inv).map_err(|e| e.to_string())?;
    let rows = density_scan(&g, &inv, Some(&rm), 8, &Budget::default()).map_err(|e| e.to_string())?;
    let target = 1.0 / 60.0;
    let r8 = rows[7].ratio();
    ensure!((r8 - target).abs() / target < 0.01, "k = 8 ratio {r8}");
    let dev: Vec<f64> = rows.iter().map(|r| (r.ratio() - target).abs()).collect();
    ensure!(dev[1..].windows(2).all(|w| w[1] <= w[0]), "deviation rises: {dev:?}");
    let target0 = target / rm.order() as f64;
    let dev0: Vec<f64> = rows.iter().map(|r| (r.ratio0().unwrap() - target0).abs()).collect();
    ensure!(dev0[1..].windows(2).all(|w| w[1] <= w[0]), "R-hat^0 deviation rises: {dev0:?}");
    // A class with a nontrivial multiplier: the R-hat^0 column goes to 1/120.
    let five = class_of(&g, "5c");
    let rm5 = reduced_multiplier(&ext, &five).map_err(|e| e.to_string())?;
    let rows5 = density_scan(&g, &five, Some(&rm5), 8, &Budget::default()).map_err(|e| e.to_string())?;
    let t5 = 1.0 / (60.0 * rm5.order() as f64);
    let dev5: Vec<f64> = rows5.iter().map(|r| (r.ratio0().unwrap() - t5).abs()).collect();
    ensure!(dev5[2..].windows(2).all(|w| w[1] <= w[0]), "5-cycle R-hat^0 deviation rises: {dev5:?}");
    Ok(format!(
        "k=8 ratio {:.6} (1/60 = {:.6}); 5-cycle ratio0 {:.6} -> 1/120",
        r8,
        target,
        rows5[7].ratio0().unwrap()
    ))
}

fn c9_orbits() -> Result<String, String> {
    let (g, ext) = a5_cover();
    let c = class_of(&g, "5c");
    let rm = reduced_multiplier(&ext, &c).map_err(|e| e.to_string())?;
    // Alternating tuples with trivial product, counted directly.
    let m = c.members();
    let mut direct = 0;
    for &a in m {
        for &b in m {
            for &x in m {
                for &y in m {
                    direct += usize::from(g.product([a, g.inv(b), x, g.inv(y)]) == g.identity());
                }
            }
        }
    }
    let mut first = None;
    for seed in [11, 12, 13] {
        let b = Budget { seed, ..Budget::default() };
        let r = enumerate_orbits(2, &g, &c, Some(&rm), Stratum::RHat, &b).map_err(|e| e.to_string())?;
        ensure!(r.slice_states == direct, "slice {} vs direct {direct}", r.slice_states);
        ensure!(r.sch_constant(), "sch not constant on an orbit");
        ensure!(r.orbits.iter().map(|o| o.size).sum::<usize>() == direct, "orbit sizes");
        match &first {
            None => first = Some(r),
            Some(f) => ensure!(f.membership == r.membership && f.orbits == r.orbits, "seed {seed} differs"),
        }
    }
    let r = first.unwrap();
    Ok(format!(
        "{} states, {} orbits, {} up to conjugation, {} Schur value(s)",
        r.slice_states,
        r.orbits.len(),
        r.conjugation_orbits,
        r.distinct_sch()
    ))
}

fn c10_reduction() -> Result<String, String> {
    let (g, ext) = a5_cover();
    let c5 = class_of(&g, "5c");
    let c = g.resolve("5c").unwrap();
    let rm = reduced_multiplier(&ext, &c5).map_err(|e| e.to_string())?;
    let alph = smallest_nondegenerate_k(&g, &c5, c, Some(&rm), 4, &Budget::default())
        .map_err(|e| e.to_string())?
        .ok_or("no non-degenerate k up to 4")?;
    let k = alph.k();
    let (s3g, t) = s3();
    let smaller = [SmallerPair { group: s3g, class: t }];
    let registry = load_registry(&data("gadgets")).map_err(|e| e.to_string())?;
    ensure!(registry.get("planted").map(|p| p.braid()) == Some(planted_gadget(k).unwrap().braid()), "registry");
    let mut lines = Vec::new();
    let circuits = [
        ("identity", ZsatCircuit::identity(2, k), Registry::new()),
        ("planted", ZsatCircuit::new(2, k, vec![Gate { gadget: "planted".into(), at: 1 }]).unwrap(), registry),
    ];
    for (name, z, reg) in &circuits {
        let comp = compile(z, &alph, reg).map_err(|e| e.to_string())?;
        ensure!(comp.diagram.component_count() == 1, "{name}: {} components", comp.diagram.component_count());
        let v = verify_reduction(z, &alph, reg, &smaller).map_err(|e| e.to_string())?;
        ensure!(v.three_way_equal(), "{name}: zsat {} wirtinger {} transfer {}", v.zsat, v.wirtinger_pinned, v.transfer_pinned);
        ensure!(v.smaller_vanish(), "{name}: #Q over S3 is not zero");
        lines.push(format!("{name} {}={}={}", v.zsat, v.wirtinger_pinned, v.transfer_pinned));
    }
    Ok(format!("k = {k}; {}", lines.join(", ")))
}

fn main() {
    let criteria: [(&str, Check, Duration); 10] = [
        ("unknot law", c1_unknot, Duration::from_secs(1)),
        ("trefoil Fox count", c2_trefoil, Duration::from_secs(1)),
        ("pinning identity", c3_pinning, Duration::from_secs(60)),
        ("transfer = Wirtinger", c4_transfer, Duration::from_secs(120)),
        ("Hurwitz invariants", c5_hurwitz, Duration::from_secs(60)),
        ("Schur properties", c6_schur, Duration::from_secs(60)),
        ("reduced multiplier", c7_multiplier, Duration::from_secs(10)),
        ("density limits", c8_density, Duration::from_secs(10)),
        ("orbit stratification", c9_orbits, Duration::from_secs(300)),
        ("reduction pipeline", c10_reduction, Duration::from_secs(600)),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let result = match result {
            Ok(s) if took > *limit => Err(format!("{s}; over the {}s limit", limit.as_secs())),
            r => r,
        };
        let (tag, detail) = match &result {
            Ok(s) => ("PASS", s),
            Err(s) => ("FAIL", s),
        };
        println!("criterion {:>2} [{tag}] {name} ({:.2}s): {detail}", i + 1, took.as_secs_f64());
        failed += usize::from(result.is_err());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
