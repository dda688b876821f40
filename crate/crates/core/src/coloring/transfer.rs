//! Counting plat colorings by pushing monodromy tuples through the braid.
//!
//! A bottom cap over positions `(a, b)` is one arc colored `x`, so the
//! monodromies there are `x^{s_a}` and `x^{s_b} = x^{-s_a}`. The braid acts
//! by the Hurwitz action; a top cap is satisfied when its two monodromies
//! are mutually inverse.

use rayon::prelude::*;

use super::CountError;
use crate::diagram::{default_signs, BraidWord, DiagramError, PlatPairing};
use crate::group::{ConjClass, Elem, FiniteGroup};
use crate::hurwitz::act_letter;

/// Colorings of the plat closure of `b`, counted through the Hurwitz action.
/// `signs` are strand orientations by bottom position (default: the
/// orientation [`default_signs`] picks). `pin` fixes the arc at a 1-based
/// bottom position to a class member.
pub fn plat_transfer_count(
    b: &BraidWord,
    p: &PlatPairing,
    signs: Option<&[i8]>,
    g: &FiniteGroup,
    class: &ConjClass,
    pin: Option<(usize, Elem)>,
) -> Result<u64, CountError> {
    if b.strands() != p.strands() {
        return Err(DiagramError::StrandMismatch { braid: b.strands(), pairing: p.strands() }.into());
    }
    let signs: Vec<i8> = match signs {
        Some(s) => s.to_vec(),
        None => default_signs(b, p)?,
    };
    if signs.len() != p.strands() || signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(DiagramError::SignMismatch(0).into());
    }
    for &(x, y) in p.bottom() {
        if signs[x] == signs[y] {
            return Err(CountError::SignMismatch(x + 1, y + 1));
        }
    }
    let mut top_signs = signs.clone();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        top_signs.swap(i, i + 1);
    }
    for &(x, y) in p.top() {
        if top_signs[x] == top_signs[y] {
            return Err(CountError::SignMismatch(x + 1, y + 1));
        }
    }

    // Choices per bottom cap: the arc color.
    let mut choices: Vec<Vec<Elem>> = vec![class.members().to_vec(); p.bottom().len()];
    if let Some((pos, c)) = pin {
        if !class.contains(c) {
            return Err(CountError::NotInClass(c.0));
        }
        let k = p
            .bottom()
            .iter()
            .position(|&(x, y)| x + 1 == pos || y + 1 == pos)
            .ok_or(CountError::UnknownArc(pos))?;
        choices[k] = vec![c];
    }
    if choices.is_empty() {
        return Ok(1);
    }

    let check = |head: Elem| -> Result<u64, CountError> {
        let caps = p.bottom();
        let mut idx = vec![0usize; caps.len()];
        let mut elems = vec![g.identity(); p.strands()];
        let mut st = vec![0i8; p.strands()];
        let mut count = 0u64;
        loop {
            for (k, &(x, y)) in caps.iter().enumerate() {
                let col = if k == 0 { head } else { choices[k][idx[k]] };
                elems[x] = if signs[x] > 0 { col } else { g.inv(col) };
                elems[y] = g.inv(elems[x]);
            }
            st.copy_from_slice(&signs);
            for &l in b.letters() {
                act_letter(g, &mut st, &mut elems, l);
            }
            if p.top().iter().all(|&(x, y)| g.mul(elems[x], elems[y]) == g.identity()) {
                count = count.checked_add(1).ok_or(CountError::Overflow)?;
            }
            let mut k = 1;
            while k < caps.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == caps.len() {
                return Ok(count);
            }
        }
    };
    let parts: Vec<Result<u64, CountError>> = choices[0].par_iter().map(|&h| check(h)).collect();
    let mut total = 0u64;
    for part in parts {
        total = total.checked_add(part?).ok_or(CountError::Overflow)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{count_colorings, count_pinned};
    use crate::diagram::plat_closure;
    use crate::group::conjugacy_class;

    #[test]
    fn trefoil_and_unknot() {
        let g = FiniteGroup::symmetric(3);
        let c = conjugacy_class(&g, g.resolve("(1 2)").unwrap());
        let p4 = PlatPairing::standard(4).unwrap();
        let t = BraidWord::new(4, vec![2, 2, 2]).unwrap();
        assert_eq!(plat_transfer_count(&t, &p4, None, &g, &c, None).unwrap(), 9);
        assert_eq!(plat_transfer_count(&t, &p4, None, &g, &c, Some((1, c.representative()))).unwrap(), 3);
        let p = PlatPairing::standard(2).unwrap();
        let kinks = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(plat_transfer_count(&kinks, &p, None, &g, &c, None).unwrap(), 3);
        let e = BraidWord::identity(2);
        assert_eq!(plat_transfer_count(&e, &p, None, &g, &c, None).unwrap(), 3);
        assert!(matches!(
            plat_transfer_count(&e, &p, Some(&[1, 1]), &g, &c, None),
            Err(CountError::SignMismatch(1, 2))
        ));
    }

    #[test]
    fn matches_wirtinger_on_a_non_real_class() {
        // A 3-cycle class of A4 is not closed under inversion, so the sign
        // conventions must agree exactly.
        let g = FiniteGroup::alternating(4);
        let c = conjugacy_class(&g, g.resolve("(1 2 3)").unwrap());
        assert!(!c.is_real(&g));
        let p = PlatPairing::standard(4).unwrap();
        for letters in [vec![2, 2, 2], vec![1, -2, 3, 2, -1], vec![2, 1, 1, 2, 3, -2], vec![-2, -2, 1, 3]] {
            let b = BraidWord::new(4, letters).unwrap();
            let d = plat_closure(&b, &p).unwrap();
            assert_eq!(
                plat_transfer_count(&b, &p, None, &g, &c, None).unwrap(),
                count_colorings(&d, &g, &c).unwrap(),
                "{b}"
            );
            let rep = c.representative();
            assert_eq!(
                plat_transfer_count(&b, &p, None, &g, &c, Some((1, rep))).unwrap(),
                count_pinned(&d, 0, &g, &c, rep).unwrap(),
            );
        }
    }
}
