//! Circuit files:
//!
//! ```text
//! zsat width 2 k 3 group a5.grp class 5c pin 5c
//! cover sl25_a5.ext
//! gate planted at 1
//! ```
//!
//! Paths are relative to the circuit file. `gate <id> at <i>` acts on wires
//! `i` and `i + 1`.

use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::{gadget_action, Registry, ReductionError, ZsatAlphabet};
use crate::group::{
    conjugacy_class, load_extension, load_group, parse::significant_lines, CentralExtension, ConjClass, Elem,
    FiniteGroup,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    pub gadget: String,
    /// 1-based; the gate touches wires `at` and `at + 1`.
    pub at: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZsatCircuit {
    pub width: usize,
    pub k: usize,
    pub gates: Vec<Gate>,
}

impl ZsatCircuit {
    pub fn new(width: usize, k: usize, gates: Vec<Gate>) -> Result<Self, ReductionError> {
        if width == 0 || k == 0 {
            return Err(ReductionError::Parse { line: 0, msg: "width and k must be positive".into() });
        }
        for g in &gates {
            if g.at == 0 || g.at + 1 > width {
                return Err(ReductionError::GateOutOfRange { at: g.at, width });
            }
        }
        Ok(ZsatCircuit { width, k, gates })
    }

    pub fn identity(width: usize, k: usize) -> Self {
        ZsatCircuit { width, k, gates: Vec::new() }
    }
}

/// A parsed circuit file, before any referenced file is read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFile {
    pub circuit: ZsatCircuit,
    pub group: String,
    pub class: String,
    pub pin: String,
    pub cover: Option<String>,
}

pub fn parse_circuit(text: &str) -> Result<CircuitFile, ReductionError> {
    let lines = significant_lines(text);
    let err = |line: usize, msg: &str| ReductionError::Parse { line, msg: msg.to_string() };
    let (hl, header) = *lines.first().ok_or_else(|| err(0, "empty circuit file"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let key = |name: &str| -> Result<&str, ReductionError> {
        words
            .iter()
            .position(|w| *w == name)
            .and_then(|i| words.get(i + 1).copied())
            .ok_or_else(|| err(hl, &format!("header needs `{name} <value>`")))
    };
    if words.first() != Some(&"zsat") {
        return Err(err(hl, "expected `zsat width <n> k <k> group <file> class <rep> pin <c>`"));
    }
    let width: usize = key("width")?.parse().map_err(|_| err(hl, "bad width"))?;
    let k: usize = key("k")?.parse().map_err(|_| err(hl, "bad k"))?;
    let (group, class, pin) = (key("group")?.to_string(), key("class")?.to_string(), key("pin")?.to_string());
    let mut cover = None;
    let mut gates = Vec::new();
    for &(n, l) in &lines[1..] {
        let w: Vec<&str> = l.split_whitespace().collect();
        match w.as_slice() {
            ["cover", path] => cover = Some(path.to_string()),
            ["gate", id, "at", i] => gates.push(Gate {
                gadget: id.to_string(),
                at: i.parse().map_err(|_| err(n, "bad gate position"))?,
            }),
            _ => return Err(err(n, "expected `gate <id> at <i>` or `cover <file>`")),
        }
    }
    Ok(CircuitFile { circuit: ZsatCircuit::new(width, k, gates)?, group, class, pin, cover })
}

/// A circuit with its group, class, pin and optional cover loaded.
#[derive(Clone, Debug)]
pub struct LoadedCircuit {
    pub circuit: ZsatCircuit,
    pub group: FiniteGroup,
    pub class: ConjClass,
    pub c: Elem,
    pub extension: Option<CentralExtension>,
}

fn read(path: &Path) -> Result<String, ReductionError> {
    std::fs::read_to_string(path).map_err(|e| ReductionError::Io(format!("{}: {e}", path.display())))
}

pub fn load_circuit(path: &Path) -> Result<LoadedCircuit, ReductionError> {
    let file = parse_circuit(&read(path)?)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    let group = load_group(&read(&dir.join(&file.group))?)?;
    let class = conjugacy_class(&group, group.resolve(&file.class)?);
    let c = group.resolve(&file.pin)?;
    if !class.contains(c) {
        return Err(ReductionError::NotInClass(c.0));
    }
    let extension = match &file.cover {
        Some(p) => Some(load_extension(&read(&dir.join(p))?)?.over_base(&group)?),
        None => None,
    };
    Ok(LoadedCircuit { circuit: file.circuit, group, class, c, extension })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZsatCount {
    /// `x` in `I^n` with `Z(x)` in `F^n`.
    pub count: u64,
    pub u_order: u64,
    /// `(count - 1) / |U|` when it divides.
    pub free_orbits: Option<u64>,
}

/// Gate action tables for every gate of the circuit, computed from the
/// braids and checked against any stored tables.
pub(crate) fn gate_tables(
    z: &ZsatCircuit,
    alph: &ZsatAlphabet,
    registry: &Registry,
) -> Result<Vec<Vec<u32>>, ReductionError> {
    let mut cache: std::collections::HashMap<&str, Vec<u32>> = Default::default();
    let mut out = Vec::with_capacity(z.gates.len());
    for gate in &z.gates {
        if !cache.contains_key(gate.gadget.as_str()) {
            let gad = registry.get(&gate.gadget).ok_or_else(|| ReductionError::UnknownGadget(gate.gadget.clone()))?;
            let table = gadget_action(gad, alph)?.ok_or_else(|| {
                ReductionError::ActionMismatch(gate.gadget.clone(), "the braid does not map A^2 into A^2".into())
            })?;
            if let Some(stored) = gad.action() {
                if stored != table.as_slice() {
                    return Err(ReductionError::ActionMismatch(
                        gate.gadget.clone(),
                        "stored action rows differ from the braid's action".into(),
                    ));
                }
            }
            cache.insert(&gate.gadget, table);
        }
        out.push(cache[gate.gadget.as_str()].clone());
    }
    Ok(out)
}

/// Counts solutions by running every initial word through the gates.
pub fn count_zsat(z: &ZsatCircuit, alph: &ZsatAlphabet, registry: &Registry) -> Result<ZsatCount, ReductionError> {
    if z.k != alph.k() {
        return Err(ReductionError::Parse { line: 0, msg: format!("circuit k = {} but alphabet k = {}", z.k, alph.k()) });
    }
    let tables = gate_tables(z, alph, registry)?;
    let n = z.width;
    let a = alph.len();
    let init = alph.initial();
    let space = (init.len() as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if space == u64::MAX {
        return Err(ReductionError::BudgetExceeded(u64::MAX));
    }
    let run = |first: usize| -> u64 {
        let mut idx = vec![0usize; n];
        let mut count = 0u64;
        loop {
            let mut x: Vec<usize> = (0..n).map(|w| if w == 0 { first } else { init[idx[w]] }).collect();
            for (gate, t) in z.gates.iter().zip(&tables) {
                let i = gate.at - 1;
                let out = t[x[i] * a + x[i + 1]] as usize;
                x[i] = out / a;
                x[i + 1] = out % a;
            }
            if x.iter().all(|&s| alph.is_final(s)) {
                count += 1;
            }
            let mut w = 1;
            while w < n {
                idx[w] += 1;
                if idx[w] < init.len() {
                    break;
                }
                idx[w] = 0;
                w += 1;
            }
            if w >= n {
                return count;
            }
        }
    };
    let count: u64 = init.par_iter().map(|&f| run(f)).sum();
    let u_order = alph.u().order() as u64;
    let free_orbits = (count >= 1 && (count - 1).is_multiple_of(u_order)).then(|| (count - 1) / u_order);
    Ok(ZsatCount { count, u_order, free_orbits })
}
