//! Exact sizes of `R-hat_k` by dynamic programming.
//!
//! After `j` puncture pairs, `dist[x]` counts the tuples on `2j` punctures
//! whose ordered product is `x`. One pair multiplies on the right by the
//! class and then by its inverse; each step is doubly stochastic up to the
//! factor `|C|`.

use super::HurwitzError;
use crate::config::Budget;
use crate::group::{ConjClass, Elem, FiniteGroup, ReducedMultiplier};

#[derive(Clone, Debug, PartialEq)]
pub struct DensityRow {
    pub k: usize,
    /// `|C|^{2k}`.
    pub total: u128,
    /// `|R-hat_k|`.
    pub r_hat: u128,
    /// `|R-hat^0_k|`: trivial product and trivial Schur invariant.
    pub r_hat0: Option<u128>,
}

impl DensityRow {
    pub fn ratio(&self) -> f64 {
        self.r_hat as f64 / self.total as f64
    }

    pub fn ratio0(&self) -> Option<f64> {
        self.r_hat0.map(|n| n as f64 / self.total as f64)
    }
}

fn step(g: &FiniteGroup, dist: &[u128], by: &[Elem]) -> Result<Vec<u128>, HurwitzError> {
    let mut out = vec![0u128; dist.len()];
    for (x, &n) in dist.iter().enumerate() {
        if n == 0 {
            continue;
        }
        for &c in by {
            let y = g.mul(Elem(x as u32), c).index();
            out[y] = out[y].checked_add(n).ok_or(HurwitzError::BudgetExceeded(u64::MAX))?;
        }
    }
    Ok(out)
}

/// Counts for `k = 1..=k_max`. The `R-hat^0` column runs the same recursion
/// in the quotient cover with the lifted class, reading off the identity.
pub fn density_scan(
    g: &FiniteGroup,
    class: &ConjClass,
    rm: Option<&ReducedMultiplier>,
    k_max: usize,
    budget: &Budget,
) -> Result<Vec<DensityRow>, HurwitzError> {
    if !g.is_perfect() {
        return Err(HurwitzError::BaseNotPerfect);
    }
    let work = (k_max as u64).saturating_mul((g.order() * class.size()) as u64);
    if work > budget.states {
        return Err(HurwitzError::BudgetExceeded(budget.states));
    }
    let inv: Vec<Elem> = class.members().iter().map(|&x| g.inv(x)).collect();
    let mut dist = vec![0u128; g.order()];
    dist[g.identity().index()] = 1;
    let lifted = rm.map(|rm| {
        let cover = rm.quotient().cover();
        let c: Vec<Elem> = rm.lifted_class().members().to_vec();
        let ci: Vec<Elem> = c.iter().map(|&x| cover.inv(x)).collect();
        let mut d = vec![0u128; cover.order()];
        d[cover.identity().index()] = 1;
        (cover, c, ci, d)
    });
    let mut lifted = lifted;
    let mut rows = Vec::with_capacity(k_max);
    let mut total = 1u128;
    for k in 1..=k_max {
        dist = step(g, &step(g, &dist, class.members())?, &inv)?;
        total = total
            .checked_mul((class.size() * class.size()) as u128)
            .ok_or(HurwitzError::BudgetExceeded(u64::MAX))?;
        let r_hat0 = match lifted.as_mut() {
            Some((cover, c, ci, d)) => {
                *d = step(cover, &step(cover, d, c)?, ci)?;
                Some(d[cover.identity().index()])
            }
            None => None,
        };
        rows.push(DensityRow { k, total, r_hat: dist[g.identity().index()], r_hat0 });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::orbits::{alternating_rhat, in_stratum, Stratum};
    use crate::group::{conjugacy_classes, load_extension, reduced_multiplier};

    #[test]
    fn matches_direct_enumeration() {
        let ext = load_extension(include_str!("../../../../data/sl25_a5.ext")).unwrap();
        let g = ext.base().clone();
        for class in conjugacy_classes(&g).into_iter().filter(|c| c.size() > 1) {
            let rm = reduced_multiplier(&ext, &class).unwrap();
            let rows = density_scan(&g, &class, Some(&rm), 2, &Budget::default()).unwrap();
            assert_eq!(rows[0].r_hat, class.size() as u128);
            for row in &rows {
                let direct = alternating_rhat(&g, &class, row.k, &Budget::default()).unwrap();
                assert_eq!(row.r_hat, direct.len() as u128);
                let mut zero = 0;
                for t in &direct {
                    if in_stratum(&g, t, Stratum::RHat0, Some(&rm)).unwrap() {
                        zero += 1;
                    }
                }
                assert_eq!(row.r_hat0, Some(zero));
            }
        }
    }

    #[test]
    fn needs_perfect_group() {
        let g = FiniteGroup::symmetric(3);
        let class = crate::group::conjugacy_class(&g, Elem(1));
        assert_eq!(density_scan(&g, &class, None, 2, &Budget::default()), Err(HurwitzError::BaseNotPerfect));
    }
}
