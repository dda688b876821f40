use super::{HurwitzError, MonodromyTuple};
use crate::group::{Elem, ReducedMultiplier};

/// The Schur invariant of a tuple with trivial product: lift every `+`
/// entry to `C'`, every `-` entry to the inverse of the `C'`-lift of its
/// inverse, and multiply in the cover. The result is an element of the
/// quotient cover lying in `M(G, C)`.
pub fn schur(t: &MonodromyTuple, rm: &ReducedMultiplier) -> Result<Elem, HurwitzError> {
    let ext = rm.quotient();
    let (base, cover) = (ext.base(), ext.cover());
    if t.boundary_product(base) != base.identity() {
        return Err(HurwitzError::NotInRHat);
    }
    let mut acc = cover.identity();
    for (i, (&s, &x)) in t.signs().iter().zip(t.elems()).enumerate() {
        let hat = if s > 0 {
            rm.lift(x).ok_or(HurwitzError::NotInClass(i + 1))?
        } else {
            cover.inv(rm.lift(base.inv(x)).ok_or(HurwitzError::NotInClass(i + 1))?)
        };
        acc = cover.mul(acc, hat);
    }
    if ext.proj(acc) != base.identity() {
        return Err(HurwitzError::LiftAmbiguity(0));
    }
    Ok(acc)
}
