use super::circuit::gate_tables;
use super::{count_zsat, Registry, ReductionError, ZsatAlphabet, ZsatCircuit};
use crate::coloring::{count_pinned, count_q, plat_transfer_count, QCount};
use crate::diagram::{plat_closure, BraidWord, KnotDiagram, PlatPairing};
use crate::group::{ConjClass, FiniteGroup};

/// The braid `b(Z)`, its plats, and the closed diagram.
#[derive(Clone, Debug)]
pub struct Compiled {
    pub braid: BraidWord,
    pub pairing: PlatPairing,
    pub diagram: KnotDiagram,
    /// The arc through bottom position 1.
    pub meridian: usize,
}

impl Compiled {
    /// The diagram in PD form with a `meridian` footer.
    pub fn to_pd(&self) -> String {
        let mut d = self.diagram.clone();
        d.set_meridian(Some(self.meridian));
        d.to_pd()
    }
}

/// Replaces each wire by `2k` strands and each gate by its gadget braid.
/// Bottom plats pair `(2j-1, 2j)`; top plats pair `(2j, 2j+1)` and close
/// with the long cap `(1, 2kn)`.
pub fn compile(z: &ZsatCircuit, alph: &ZsatAlphabet, registry: &Registry) -> Result<Compiled, ReductionError> {
    let k = alph.k();
    if z.k != k {
        return Err(ReductionError::Parse { line: 0, msg: format!("circuit k = {} but alphabet k = {k}", z.k) });
    }
    let s = 2 * k * z.width;
    let mut braid = BraidWord::identity(s);
    for gate in &z.gates {
        let g = registry.get(&gate.gadget).ok_or_else(|| ReductionError::UnknownGadget(gate.gadget.clone()))?;
        if g.braid().strands() != 4 * k {
            return Err(ReductionError::GadgetStrands {
                id: gate.gadget.clone(),
                expected: 4 * k,
                found: g.braid().strands(),
            });
        }
        braid = braid.concat(&g.braid().embed(s, 2 * k * (gate.at - 1))?);
    }
    let bottom: Vec<(usize, usize)> = (1..=s / 2).map(|j| (2 * j - 1, 2 * j)).collect();
    let mut top: Vec<(usize, usize)> = (1..s / 2).map(|j| (2 * j, 2 * j + 1)).collect();
    top.push((1, s));
    let pairing = PlatPairing::new(s, &bottom, &top)?;
    let diagram = plat_closure(&braid, &pairing)?;
    Ok(Compiled { braid, pairing, diagram, meridian: 0 })
}

/// A smaller group and class for the `#Q = 0` check.
#[derive(Clone, Debug)]
pub struct SmallerPair {
    pub group: FiniteGroup,
    pub class: ConjClass,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub strands: usize,
    pub crossings: usize,
    pub components: usize,
    pub zsat: u64,
    pub free_orbits: Option<u64>,
    pub wirtinger_pinned: u64,
    pub transfer_pinned: u64,
    pub smaller: Vec<(String, QCount)>,
}

impl VerifyReport {
    pub fn three_way_equal(&self) -> bool {
        self.zsat == self.wirtinger_pinned && self.zsat == self.transfer_pinned
    }

    pub fn smaller_vanish(&self) -> bool {
        self.smaller.iter().all(|(_, q)| q.q == 0)
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }
}

/// Counts the circuit three ways: by running it, by Wirtinger colorings of
/// the compiled knot pinned at `c` on the meridian, and by the plat
/// transfer. Mismatches are findings, not errors.
pub fn verify_reduction(
    z: &ZsatCircuit,
    alph: &ZsatAlphabet,
    registry: &Registry,
    smaller: &[SmallerPair],
) -> Result<VerifyReport, ReductionError> {
    gate_tables(z, alph, registry)?;
    let zc = count_zsat(z, alph, registry)?;
    let comp = compile(z, alph, registry)?;
    let (g, class, c) = (alph.group(), alph.class(), alph.c());
    let wirtinger_pinned = count_pinned(&comp.diagram, comp.meridian, g, class, c)?;
    let transfer_pinned = plat_transfer_count(&comp.braid, &comp.pairing, None, g, class, Some((1, c)))?;
    let mut small = Vec::new();
    for p in smaller {
        let q = count_q(&comp.diagram, &p.group, &p.class)?;
        small.push((format!("{} / class of {}", p.group.name(), p.group.format_elem(p.class.representative())), q));
    }
    Ok(VerifyReport {
        strands: comp.braid.strands(),
        crossings: comp.diagram.crossings().len(),
        components: comp.diagram.component_count(),
        zsat: zc.count,
        free_orbits: zc.free_orbits,
        wirtinger_pinned,
        transfer_pinned,
        smaller: small,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Budget;
    use crate::group::{conjugacy_class, load_extension, reduced_multiplier};
    use crate::reduction::{build_alphabet, planted_gadget, validate_gadget, Gate};

    fn alphabet() -> ZsatAlphabet {
        let ext = load_extension(include_str!("../../../../data/sl25_a5.ext")).unwrap();
        let g = ext.base().clone();
        let c = g.elements().find(|&x| g.element_order(x) == 5).unwrap();
        let class = conjugacy_class(&g, c);
        let rm = reduced_multiplier(&ext, &class).unwrap();
        build_alphabet(&g, &class, c, 3, Some(&rm), &Budget::default()).unwrap()
    }

    fn s3_pair() -> SmallerPair {
        let g = FiniteGroup::symmetric(3);
        let class = conjugacy_class(&g, g.resolve("(1 2)").unwrap());
        SmallerPair { group: g, class }
    }

    #[test]
    fn identity_circuit() {
        let alph = alphabet();
        let reg = Registry::new();
        for n in 1..=2 {
            let z = ZsatCircuit::identity(n, 3);
            let comp = compile(&z, &alph, &reg).unwrap();
            assert_eq!(comp.diagram.component_count(), 1);
            assert_eq!(comp.diagram.crossings().len(), 0);
            let r = verify_reduction(&z, &alph, &reg, &[s3_pair()]).unwrap();
            assert!(r.three_way_equal(), "{r:?}");
            assert_eq!(r.zsat, 1);
            assert!(r.smaller_vanish());
        }
    }

    #[test]
    fn planted_circuit() {
        let alph = alphabet();
        let mut reg = Registry::new();
        let gad = planted_gadget(3).unwrap();
        reg.insert(gad.clone());
        let z = ZsatCircuit::new(2, 3, vec![Gate { gadget: "planted".into(), at: 1 }]).unwrap();
        let comp = compile(&z, &alph, &reg).unwrap();
        assert_eq!(comp.diagram.component_count(), 1);
        assert_eq!(comp.diagram.crossings().len(), gad.braid().len());
        let r = verify_reduction(&z, &alph, &reg, &[s3_pair()]).unwrap();
        assert!(r.three_way_equal(), "{r:?}");
        // The zombie plus one free U-orbit.
        assert_eq!((r.zsat, r.free_orbits), (6, Some(1)));
        assert!(r.smaller_vanish());
        let b = Budget { samples: 300, ..Budget::default() };
        let rep = validate_gadget(&gad, &alph, &[(s3_pair().group, s3_pair().class)], &b).unwrap();
        assert!(rep.pure && rep.property1() && rep.property3());
        assert!(rep.moved > 0);
    }
}
