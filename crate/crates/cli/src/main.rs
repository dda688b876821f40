//! `platknot`: coloring counts, Hurwitz orbits and the circuit-to-knot
//! reduction from the command line.
//!
//! Exit status is 0 on success, 1 when a computation fails with a library
//! error (its stable code goes to stderr) and 2 on bad usage or unreadable
//! input. Every flag can also be set through a `PLATKNOT_`-prefixed
//! environment variable, e.g. `PLATKNOT_BUDGET_STATES`.

mod output;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use platknot::coloring::{count_colorings, count_pinned, count_q, image_breakdown, plat_transfer_count, Breakdown};
use platknot::config::Budget;
use platknot::diagram::{from_pd4, parse_pd, BraidWord, KnotDiagram, PlatPairing};
use platknot::group::{
    conjugacy_class, conjugacy_classes, load_extension, load_group, reduced_multiplier, ConjClass,
    FiniteGroup, ReducedMultiplier,
};
use platknot::hurwitz::{density_scan, enumerate_orbits, gadget_search, schur, MonodromyTuple, SearchOutcome, Stratum};
use platknot::reduction::{
    build_alphabet, compile, count_zsat, load_circuit, load_registry, smallest_nondegenerate_k, validate_gadget,
    verify_reduction, GadgetReport, LoadedCircuit, PropertyCheck, Regime, Registry, ReductionError, SmallerPair,
    ZsatAlphabet,
};
use platknot::Error;

use output::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "platknot", version, about = "Conjugacy-class coloring counts and plat-closure reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args, Debug, Clone)]
struct RunFlags {
    /// Cap on states visited or enumerated.
    #[arg(long, global = true, env = "PLATKNOT_BUDGET_STATES", default_value_t = Budget::default().states,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget_states: u64,
    /// Cap on search depth, in braid generators.
    #[arg(long, global = true, env = "PLATKNOT_BUDGET_DEPTH", default_value_t = Budget::default().depth,
          value_parser = positive_usize)]
    budget_depth: usize,
    /// Random samples drawn when an exhaustive check is over budget.
    #[arg(long, global = true, env = "PLATKNOT_BUDGET_SAMPLES", default_value_t = Budget::default().samples,
          value_parser = positive_usize)]
    budget_samples: usize,
    /// Worker threads; 0 lets the runtime decide.
    #[arg(long, global = true, env = "PLATKNOT_THREADS", default_value_t = 0)]
    threads: usize,
    #[arg(long, global = true, env = "PLATKNOT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, env = "PLATKNOT_FORMAT", value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Tsv,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Group file.
    #[arg(long)]
    group: PathBuf,
    /// Conjugacy class, named by a label, an element index or a cycle.
    #[arg(long)]
    class: String,
}

#[derive(Args, Debug)]
struct KnotArgs {
    /// Diagram file: signed crossings `X+[o,i,j]`, or a `PD[X[...]...]` code.
    #[arg(long)]
    knot: PathBuf,
    #[command(flatten)]
    group: GroupArgs,
}

#[derive(Args, Debug)]
struct CircuitArgs {
    #[arg(long)]
    circuit: PathBuf,
    /// Directory of `*.gadget` files.
    #[arg(long)]
    registry: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of colorings by the class.
    Count {
        #[command(flatten)]
        knot: KnotArgs,
        /// Also print colorings grouped by image subgroup.
        #[arg(long)]
        breakdown: bool,
    },
    /// Colorings with one arc pinned to a class member.
    Pinned {
        #[command(flatten)]
        knot: KnotArgs,
        /// Arc label; defaults to the diagram's base arc.
        #[arg(long)]
        arc: Option<u32>,
        /// Pinned value; defaults to the class representative.
        #[arg(long)]
        value: Option<String>,
    },
    /// Surjective colorings modulo class-preserving automorphisms.
    Q {
        #[command(flatten)]
        knot: KnotArgs,
    },
    /// Colorings grouped by image subgroup up to conjugacy.
    Breakdown {
        #[command(flatten)]
        knot: KnotArgs,
    },
    /// Colorings of a plat closure through the braid action on monodromies.
    PlatCount {
        /// `braid <s>: <letters>` as a literal or a file, which may also hold
        /// `bottom:` and `top:` cap lines.
        #[arg(long)]
        braid: String,
        /// File with `bottom:` and `top:` lines; adjacent caps otherwise.
        #[arg(long)]
        pairing: Option<PathBuf>,
        #[command(flatten)]
        group: GroupArgs,
        /// Strand orientations by bottom position, e.g. `+-+-`.
        #[arg(long)]
        signs: Option<String>,
        /// Pin the arc at a 1-based bottom position: `<pos>:<element>`.
        #[arg(long)]
        pin: Option<String>,
    },
    /// Braid-group orbits on tuples with trivial product.
    Orbits {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        k: usize,
        /// One of rhat0, r0, rhat, r.
        #[arg(long, default_value = "rhat")]
        stratum: Stratum,
        /// Central extension file for Schur invariants.
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Schur invariant of a monodromy tuple.
    Schur {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        cover: PathBuf,
        /// Tuple literal such as `[+3 -7]`, by element index.
        #[arg(long)]
        tuple: String,
    },
    /// Fraction of tuples with trivial product, by k.
    Density {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// The symbol set of the reduction at one k.
    Alphabet {
        #[command(flatten)]
        group: GroupArgs,
        /// Class member fixed on the boundary; defaults to the representative.
        #[arg(long)]
        pin: Option<String>,
        #[arg(long)]
        cover: Option<PathBuf>,
        /// Fixed k; without it the smallest non-degenerate k up to `--k-max`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        /// List every symbol.
        #[arg(long)]
        list: bool,
    },
    /// Solutions of a circuit, counted by running it.
    ZsatCount {
        #[command(flatten)]
        circuit: CircuitArgs,
    },
    /// The knot diagram of a circuit, with its meridian marked.
    Compile {
        #[command(flatten)]
        circuit: CircuitArgs,
        /// Write the diagram here instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Count a circuit three ways and check that smaller pairs see nothing.
    Verify {
        #[command(flatten)]
        circuit: CircuitArgs,
        /// Group of a smaller pair for the `#Q = 0` check.
        #[arg(long, requires = "smaller_class")]
        smaller_group: Option<PathBuf>,
        #[arg(long, requires = "smaller_group")]
        smaller_class: Option<String>,
        /// Also check the four gadget properties for every gadget used.
        #[arg(long)]
        validate: bool,
    },
    /// Bidirectional search for a pure braid realising a map of tuples.
    GadgetSearch {
        #[command(flatten)]
        group: GroupArgs,
        /// One tuple literal per line.
        #[arg(long)]
        states: PathBuf,
        /// Image of each state, as comma-separated 0-based indices.
        #[arg(long, value_delimiter = ',')]
        target: Vec<usize>,
        /// Tuples the braid must fix, one per line.
        #[arg(long)]
        fixed: Option<PathBuf>,
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Order, classes and multipliers of a group.
    GroupInfo {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        cover: Option<PathBuf>,
    },
}

/// Failures split by exit status.
enum Failure {
    Usage(String),
    Domain(Error),
    /// The computation ran but a check it reports on did not hold.
    Check(String),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.into())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_knot(path: &Path) -> Result<KnotDiagram, Failure> {
    let text = read(path)?;
    let t = text.trim_start();
    if t.starts_with("PD[") || t.starts_with("X[") {
        Ok(from_pd4(&text)?)
    } else {
        Ok(parse_pd(&text)?)
    }
}

fn load_class(args: &GroupArgs) -> Result<(FiniteGroup, ConjClass), Failure> {
    let g = load_group(&read(&args.group)?)?;
    let x = g.resolve(&args.class)?;
    let class = conjugacy_class(&g, x);
    Ok((g, class))
}

fn load_multiplier(cover: &Path, g: &FiniteGroup, class: &ConjClass) -> Result<ReducedMultiplier, Failure> {
    let ext = load_extension(&read(cover)?)?.over_base(g)?;
    Ok(reduced_multiplier(&ext, class)?)
}

fn load_tuples(path: &Path, g: &FiniteGroup) -> Result<Vec<MonodromyTuple>, Failure> {
    let text = read(path)?;
    let mut out = Vec::new();
    for l in text.lines() {
        let l = l.split('#').next().unwrap_or("").trim();
        if !l.is_empty() {
            out.push(MonodromyTuple::parse(g, l)?);
        }
    }
    Ok(out)
}

fn load_registry_arg(dir: Option<&Path>) -> Result<Registry, Failure> {
    match dir {
        Some(d) if !d.is_dir() => Err(Failure::Usage(format!("{}: not a directory", d.display()))),
        Some(d) => Ok(load_registry(d)?),
        None => Ok(Registry::new()),
    }
}

fn circuit_alphabet(lc: &LoadedCircuit, budget: &Budget) -> Result<ZsatAlphabet, Failure> {
    let rm = match &lc.extension {
        Some(ext) => Some(reduced_multiplier(ext, &lc.class)?),
        None => None,
    };
    Ok(build_alphabet(&lc.group, &lc.class, lc.c, lc.circuit.k, rm.as_ref(), budget)?)
}

fn parse_signs(s: &str) -> Result<Vec<i8>, Failure> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(Failure::Usage(format!("bad sign `{c}` in --signs"))),
        })
        .collect()
}

fn breakdown_report(r: &mut Report, b: &Breakdown) {
    r.table(
        &["order", "cyclic", "image", "pinned", "q", "contribution"],
        b.rows
            .iter()
            .map(|row| {
                vec![
                    row.order.to_string(),
                    row.cyclic.to_string(),
                    row.descriptor.clone(),
                    row.pinned.to_string(),
                    row.q.to_string(),
                    row.contribution.to_string(),
                ]
            })
            .collect(),
    );
    r.kv("total", b.total);
    r.kv("reconstructed", b.reconstructed);
}

fn check_cell(c: &PropertyCheck) -> String {
    let regime = match c.regime {
        Regime::Exhaustive => "exhaustive",
        Regime::Sampled => "sampled",
    };
    format!("{} ({regime}, {} of {} fail)", if c.passed() { "pass" } else { "FAIL" }, c.failures, c.checked)
}

/// Properties are reported, not enforced: verification stands on its own.
fn gadget_report(r: &mut Report, g: &GadgetReport) {
    let p = |name: &str| format!("gadget[{}].{name}", g.id);
    r.kv(&p("letters"), g.letters);
    r.kv(&p("pure"), g.pure);
    r.kv(&p("moved_pairs"), g.moved);
    r.kv(&p("rubik"), g.property1());
    r.kv(&p("outside"), check_cell(&g.outside));
    for (name, c) in &g.smaller {
        r.kv(&p(&format!("smaller[{name}]")), check_cell(c));
    }
    r.kv(&p("valid"), g.is_valid());
}

/// Labels of the class members, or the representative when none is labelled.
fn class_name(g: &FiniteGroup, class: &ConjClass) -> String {
    let labels: Vec<&str> = g.labels().filter(|&(_, y)| class.contains(y)).map(|(l, _)| l).collect();
    if labels.is_empty() {
        g.format_elem(class.representative())
    } else {
        labels.join(",")
    }
}

fn run(cmd: Command, budget: &Budget, r: &mut Report) -> Result<(), Failure> {
    match cmd {
        Command::Count { knot, breakdown } => {
            let d = load_knot(&knot.knot)?;
            let (g, class) = load_class(&knot.group)?;
            r.value(count_colorings(&d, &g, &class)?);
            if breakdown {
                breakdown_report(r, &image_breakdown(&d, &g, &class)?);
            }
        }
        Command::Pinned { knot, arc, value } => {
            let d = load_knot(&knot.knot)?;
            let (g, class) = load_class(&knot.group)?;
            let arc = match arc {
                Some(label) => d.arc(label)?,
                None => d.base_arc(),
            };
            let c = match value {
                Some(v) => g.resolve(&v)?,
                None => class.representative(),
            };
            r.value(count_pinned(&d, arc, &g, &class, c)?);
        }
        Command::Q { knot } => {
            let d = load_knot(&knot.knot)?;
            let (g, class) = load_class(&knot.group)?;
            let q = count_q(&d, &g, &class)?;
            r.kv("pinned", q.pinned);
            r.kv("surjective_pinned", q.surjective_pinned);
            r.kv("surjective_total", q.surjective_total);
            r.kv("aut_point", q.aut_point);
            r.kv("aut_class", q.aut_class);
            r.kv("class_size", q.class_size);
            r.kv("q", q.q);
        }
        Command::Breakdown { knot } => {
            let d = load_knot(&knot.knot)?;
            let (g, class) = load_class(&knot.group)?;
            breakdown_report(r, &image_breakdown(&d, &g, &class)?);
        }
        Command::PlatCount { braid, pairing, group, signs, pin } => {
            let text = if braid.trim_start().starts_with("braid") { braid } else { read(Path::new(&braid))? };
            let (braid_lines, cap_lines): (Vec<&str>, Vec<&str>) = text
                .lines()
                .filter(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
                .partition(|l| !l.trim_start().starts_with("bottom:") && !l.trim_start().starts_with("top:"));
            let b = BraidWord::parse(&braid_lines.join("\n"))?;
            let p = match (pairing, cap_lines.is_empty()) {
                (Some(f), _) => PlatPairing::parse(&read(&f)?)?,
                (None, false) => PlatPairing::parse(&cap_lines.join("\n"))?,
                (None, true) => PlatPairing::standard(b.strands())?,
            };
            let (g, class) = load_class(&group)?;
            let signs = signs.as_deref().map(parse_signs).transpose()?;
            let pin = match pin {
                Some(s) => {
                    let (pos, e) = s
                        .split_once(':')
                        .ok_or_else(|| Failure::Usage("--pin takes `<pos>:<element>`".into()))?;
                    let pos = pos.trim().parse().map_err(|_| Failure::Usage(format!("bad pin position `{pos}`")))?;
                    Some((pos, g.resolve(e)?))
                }
                None => None,
            };
            r.value(plat_transfer_count(&b, &p, signs.as_deref(), &g, &class, pin)?);
        }
        Command::Orbits { group, k, stratum, cover } => {
            let (g, class) = load_class(&group)?;
            let rm = cover.as_deref().map(|c| load_multiplier(c, &g, &class)).transpose()?;
            let rep = enumerate_orbits(k, &g, &class, rm.as_ref(), stratum, budget)?;
            let one = rm.as_ref().map(|m| m.quotient().cover().identity());
            r.kv("k", rep.k);
            r.kv("stratum", rep.stratum);
            r.kv("class_size", rep.class_size);
            if let Some(m) = rep.multiplier_order {
                r.kv("multiplier_order", m);
            }
            r.kv("slice_states", rep.slice_states);
            r.kv("orbits", rep.orbits.len());
            r.kv("conjugation_orbits", rep.conjugation_orbits);
            r.kv("sch_constant", rep.sch_constant());
            r.table(
                &["orbit", "size", "full_size", "sch", "sample"],
                rep.orbits
                    .iter()
                    .enumerate()
                    .map(|(i, o)| {
                        vec![
                            i.to_string(),
                            o.size.to_string(),
                            o.full_size.to_string(),
                            match o.sch {
                                None => "-".into(),
                                Some(s) if Some(s) == one => "e".into(),
                                Some(s) => s.to_string(),
                            },
                            o.sample.format(),
                        ]
                    })
                    .collect(),
            );
        }
        Command::Schur { group, cover, tuple } => {
            let (g, class) = load_class(&group)?;
            let rm = load_multiplier(&cover, &g, &class)?;
            let t = MonodromyTuple::parse(&g, &tuple)?;
            t.check_class(&g, &class)?;
            let s = schur(&t, &rm)?;
            let trivial = s == rm.quotient().cover().identity();
            r.kv("sch", if trivial { "e".to_string() } else { s.to_string() });
            r.kv("trivial", trivial);
        }
        Command::Density { group, k_max, cover } => {
            let (g, class) = load_class(&group)?;
            let rm = cover.as_deref().map(|c| load_multiplier(c, &g, &class)).transpose()?;
            let rows = density_scan(&g, &class, rm.as_ref(), k_max, budget)?;
            let dash = || "-".to_string();
            r.table(
                &["k", "total", "r_hat", "ratio", "r_hat0", "ratio0"],
                rows.iter()
                    .map(|row| {
                        vec![
                            row.k.to_string(),
                            row.total.to_string(),
                            row.r_hat.to_string(),
                            format!("{:.9}", row.ratio()),
                            row.r_hat0.map_or_else(dash, |n| n.to_string()),
                            row.ratio0().map_or_else(dash, |x| format!("{x:.9}")),
                        ]
                    })
                    .collect(),
            );
        }
        Command::Alphabet { group, pin, cover, k, k_max, list } => {
            let (g, class) = load_class(&group)?;
            let c = match pin {
                Some(p) => g.resolve(&p)?,
                None => class.representative(),
            };
            let rm = cover.as_deref().map(|f| load_multiplier(f, &g, &class)).transpose()?;
            let a = match k {
                Some(k) => build_alphabet(&g, &class, c, k, rm.as_ref(), budget)?,
                None => match smallest_nondegenerate_k(&g, &class, c, rm.as_ref(), k_max, budget)? {
                    Some(a) => a,
                    None => return Err(Failure::Check(format!("no non-degenerate k up to {k_max}"))),
                },
            };
            r.kv("k", a.k());
            r.kv("symbols", a.len());
            r.kv("initial", a.initial().len());
            r.kv("final", a.final_symbols().len());
            r.kv("u_order", a.u().order());
            r.kv("u_hat_order", a.u_hat().order());
            r.kv("nondegenerate", a.is_nondegenerate());
            for w in a.warnings() {
                r.note(w);
            }
            if list {
                r.table(
                    &["symbol", "initial", "final", "tuple"],
                    a.symbols()
                        .iter()
                        .enumerate()
                        .map(|(i, t)| {
                            vec![i.to_string(), a.is_initial(i).to_string(), a.is_final(i).to_string(), t.format()]
                        })
                        .collect(),
                );
            }
        }
        Command::ZsatCount { circuit } => {
            let lc = load_circuit(&circuit.circuit)?;
            let reg = load_registry_arg(circuit.registry.as_deref())?;
            let a = circuit_alphabet(&lc, budget)?;
            let n = count_zsat(&lc.circuit, &a, &reg)?;
            r.kv("count", n.count);
            r.kv("u_order", n.u_order);
            r.kv("free_orbits", n.free_orbits.map_or_else(|| "-".into(), |x| x.to_string()));
        }
        Command::Compile { circuit, out } => {
            let lc = load_circuit(&circuit.circuit)?;
            let reg = load_registry_arg(circuit.registry.as_deref())?;
            let a = circuit_alphabet(&lc, budget)?;
            let comp = compile(&lc.circuit, &a, &reg)?;
            let pd = comp.to_pd();
            match out {
                Some(path) => {
                    std::fs::write(&path, &pd).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    r.kv("strands", comp.braid.strands());
                    r.kv("crossings", comp.diagram.crossings().len());
                    r.kv("components", comp.diagram.component_count());
                }
                None => r.raw(pd),
            }
        }
        Command::Verify { circuit, smaller_group, smaller_class, validate } => {
            let lc = load_circuit(&circuit.circuit)?;
            let reg = load_registry_arg(circuit.registry.as_deref())?;
            let a = circuit_alphabet(&lc, budget)?;
            let smaller = match (smaller_group, smaller_class) {
                (Some(group), Some(class)) => {
                    let (g, class) = load_class(&GroupArgs { group, class })?;
                    vec![SmallerPair { group: g, class }]
                }
                _ => Vec::new(),
            };
            let v = verify_reduction(&lc.circuit, &a, &reg, &smaller)?;
            r.kv("strands", v.strands);
            r.kv("crossings", v.crossings);
            r.kv("components", v.components);
            r.kv("zsat", v.zsat);
            r.kv("free_orbits", v.free_orbits.map_or_else(|| "-".into(), |x| x.to_string()));
            r.kv("wirtinger_pinned", v.wirtinger_pinned);
            r.kv("transfer_pinned", v.transfer_pinned);
            r.kv("three_way_equal", v.three_way_equal());
            for (name, q) in &v.smaller {
                r.kv(&format!("q[{name}]"), q.q);
            }
            r.kv("knot", v.is_knot());
            if validate {
                let pairs: Vec<_> = smaller.iter().map(|p| (p.group.clone(), p.class.clone())).collect();
                let used: BTreeSet<&str> = lc.circuit.gates.iter().map(|g| g.gadget.as_str()).collect();
                for id in used {
                    let gad = reg.get(id).ok_or_else(|| Failure::Domain(ReductionError::UnknownGadget(id.into()).into()))?;
                    gadget_report(r, &validate_gadget(gad, &a, &pairs, budget)?);
                }
            }
            if !(v.three_way_equal() && v.smaller_vanish() && v.is_knot()) {
                return Err(Failure::Check("reduction checks failed".into()));
            }
        }
        Command::GadgetSearch { group, states, target, fixed, cover } => {
            let (g, class) = load_class(&group)?;
            let rm = cover.as_deref().map(|c| load_multiplier(c, &g, &class)).transpose()?;
            let states = load_tuples(&states, &g)?;
            let fixed = match fixed {
                Some(f) => load_tuples(&f, &g)?,
                None => Vec::new(),
            };
            let strands = states
                .first()
                .map(MonodromyTuple::len)
                .ok_or_else(|| Failure::Usage("--states lists no tuples".into()))?;
            match gadget_search(&g, strands, &states, &target, &fixed, rm.as_ref(), budget)? {
                SearchOutcome::Found(w) => r.kv("found", w),
                SearchOutcome::NotFound { explored } => {
                    r.kv("found", "none");
                    r.kv("explored", explored);
                }
                SearchOutcome::Rejected(why) => r.kv("rejected", why),
            }
        }
        Command::GroupInfo { group, cover } => {
            let g = load_group(&read(&group)?)?;
            let ext = cover.as_deref().map(|c| -> Result<_, Failure> { Ok(load_extension(&read(c)?)?.over_base(&g)?) });
            let ext = ext.transpose()?;
            r.kv("name", g.name());
            r.kv("order", g.order());
            r.kv("abelian", g.is_abelian());
            r.kv("perfect", g.is_perfect());
            r.kv("nonabelian_simple", g.is_nonabelian_simple());
            let mut rows = Vec::new();
            for class in conjugacy_classes(&g) {
                let x = class.representative();
                let mult = match &ext {
                    Some(e) => reduced_multiplier(e, &class).map_or_else(|_| "-".into(), |m| m.order().to_string()),
                    None => "-".into(),
                };
                rows.push(vec![
                    class_name(&g, &class),
                    x.to_string(),
                    class.size().to_string(),
                    g.element_order(x).to_string(),
                    class.is_real(&g).to_string(),
                    mult,
                ]);
            }
            r.table(&["class", "rep", "size", "order", "real", "multiplier"], rows);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.run.threads > 0 {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.run.threads).build_global();
    }
    let budget = Budget {
        states: cli.run.budget_states,
        depth: cli.run.budget_depth,
        samples: cli.run.budget_samples,
        seed: cli.run.seed,
    };
    let format = match cli.run.format {
        FormatArg::Text => Format::Text,
        FormatArg::Tsv => Format::Tsv,
    };
    let mut report = Report::default();
    let outcome = run(cli.command, &budget, &mut report);
    print!("{}", report.render(format));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error[check-failed]: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error[usage]: {msg}");
            ExitCode::from(2)
        }
    }
}
