//! Reflector congruences, reflets, and simplicity deciders.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::multistructure_to_json;
use crate::groups::{is_invariant_modulo, subgroups, GroupTable, Subgroup};
use crate::iso::are_isomorphic;
use crate::multistructure::{Hypergroup, Multistructure};
use crate::partition::{bell, EquivalenceRelation, RestrictedGrowth};
use crate::subset::Subset;

/// Largest carrier for which congruences are enumerated by default.
pub const DEFAULT_SIMPLICITY_CAP: usize = 12;

/// `sat(x.y) = ⋃_{y'≡y} x.y' = ⋃_{x'≡x} x'.y` for all `x, y`.
pub fn is_reflector_congruence(m: &Multistructure, eq: &EquivalenceRelation) -> bool {
    let n = m.len();
    if eq.len() != n {
        return false;
    }
    let masks = eq.class_masks();
    let class_mask = |x: usize| masks[eq.class_of(x)];
    (0..n).all(|x| {
        (0..n).all(|y| {
            let sat = eq.saturate(m.product(x, y));
            let right = class_mask(y).iter().fold(Subset::EMPTY, |acc, y2| acc | m.product(x, y2));
            let left = class_mask(x).iter().fold(Subset::EMPTY, |acc, x2| acc | m.product(x2, y));
            sat == right && sat == left
        })
    })
}

/// Class structure `[x].[y] = { [z] : [z] meets x.y }`; each class is named after its least
/// member.
pub fn quotient_by(h: &Hypergroup, eq: &EquivalenceRelation) -> Result<Hypergroup> {
    if !is_reflector_congruence(h, eq) {
        return Err(Error::Precondition("not a reflector congruence".into()));
    }
    Hypergroup::new(quotient_table(h, eq))
}

fn quotient_table(m: &Multistructure, eq: &EquivalenceRelation) -> Multistructure {
    let blocks = eq.blocks();
    let names = blocks.iter().map(|b| m.name(b[0]).to_string()).collect();
    Multistructure::from_fn_named(names, |i, j| {
        m.product(blocks[i][0], blocks[j][0])
            .map(|z| eq.class_of(z))
    })
    .expect("class count bounded by carrier size")
}

/// How the space of equivalences is traversed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchMethod {
    /// depth-first over restricted-growth strings, cutting prefixes that cannot extend
    #[default]
    Pruned,
    /// every partition is tested with the exact check
    Brute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSearch {
    /// in restricted-growth-string order
    pub congruences: Vec<EquivalenceRelation>,
    /// complete partitions handed to the exact check
    pub partitions_examined: u128,
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded {
            what: "simplicity carrier",
            size: n as u128,
            cap: cap as u128,
        })
    } else {
        Ok(())
    }
}

pub fn search_congruences(m: &Multistructure, method: SearchMethod, cap: usize) -> Result<CongruenceSearch> {
    let n = m.len();
    check_cap(n, cap)?;
    match method {
        SearchMethod::Brute => {
            let congruences: Vec<_> = RestrictedGrowth::new(n)
                .filter(|eq| is_reflector_congruence(m, eq))
                .collect();
            Ok(CongruenceSearch {
                congruences,
                partitions_examined: bell(n),
            })
        }
        SearchMethod::Pruned => {
            let (congruences, partitions_examined) =
                pruned_partitions(m, |eq| is_reflector_congruence(m, eq));
            Ok(CongruenceSearch {
                congruences,
                partitions_examined,
            })
        }
    }
}

/// Partitions of `m`'s carrier, in restricted-growth order, that survive the prefix conditions
/// necessary for a reflector congruence and are then accepted by `accept`. Also returns how
/// many complete partitions reached `accept`.
pub(crate) fn pruned_partitions(
    m: &Multistructure,
    accept: impl FnMut(&EquivalenceRelation) -> bool,
) -> (Vec<EquivalenceRelation>, u128) {
    let n = m.len();
    let mut search = Pruned {
        m,
        n,
        labels: vec![0; n],
        found: Vec::new(),
        leaves: 0,
        accept,
    };
    search.descend(0, 0);
    (search.found, search.leaves)
}

struct Pruned<'a, F> {
    m: &'a Multistructure,
    n: usize,
    labels: Vec<usize>,
    found: Vec<EquivalenceRelation>,
    leaves: u128,
    accept: F,
}

impl<F: FnMut(&EquivalenceRelation) -> bool> Pruned<'_, F> {
    /// `labels[..next]` is decided and uses `classes` labels.
    fn descend(&mut self, next: usize, classes: usize) {
        if next == self.n {
            self.leaves += 1;
            let eq = EquivalenceRelation::from_labels(&self.labels);
            if (self.accept)(&eq) {
                self.found.push(eq);
            }
            return;
        }
        for label in 0..=classes {
            self.labels[next] = label;
            let classes = classes.max(label + 1);
            if self.feasible(next + 1, classes) {
                self.descend(next + 1, classes);
            }
        }
    }

    /// Necessary conditions on a prefix. With `P_c` the decided members of class `c` and `U`
    /// the undecided elements, the final `x.[c]` lies between `R_c = ⋃_{y∈P_c} x.y` and
    /// `R_c ∪ R_U`; it must be saturated and equal `sat(x.y)` for each `y ∈ P_c`.
    fn feasible(&self, decided: usize, classes: usize) -> bool {
        let n = self.n;
        let undecided = Subset::full(n) - Subset::full(decided);
        let mut prefix = vec![Subset::EMPTY; classes];
        for (x, &c) in self.labels[..decided].iter().enumerate() {
            prefix[c].insert(x);
        }
        let row = |x: usize, y: usize| self.m.product(x, y);
        let col = |x: usize, y: usize| self.m.product(y, x);
        for side in [&row as &dyn Fn(usize, usize) -> Subset, &col] {
            for x in 0..n {
                let reach_u = undecided.iter().fold(Subset::EMPTY, |acc, y| acc | side(x, y));
                for pc in &prefix {
                    let reach_c = pc.iter().fold(Subset::EMPTY, |acc, y| acc | side(x, y));
                    for pd in prefix.iter().filter(|pd| pd.intersects(reach_c)) {
                        if !pd.is_subset(reach_c | reach_u) {
                            return false;
                        }
                        if pc.iter().any(|y| !side(x, y).intersects(*pd | undecided)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

pub fn reflector_congruences(m: &Multistructure, cap: usize) -> Result<Vec<EquivalenceRelation>> {
    Ok(search_congruences(m, SearchMethod::Pruned, cap)?.congruences)
}

/// Quotients by all reflector congruences, one per isomorphism class, ordered by size and then
/// by their JSON text.
pub fn reflets(h: &Hypergroup, cap: usize) -> Result<Vec<Hypergroup>> {
    let mut distinct: Vec<Hypergroup> = Vec::new();
    for eq in reflector_congruences(h, cap)? {
        let q = quotient_by(h, &eq)?;
        if !distinct.iter().any(|d| are_isomorphic(d, &q)) {
            distinct.push(q);
        }
    }
    distinct.sort_by_cached_key(|q| (q.len(), multistructure_to_json(q)));
    Ok(distinct)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityVerdict {
    pub simple: bool,
    pub congruences: usize,
    pub partitions_examined: u128,
    /// first congruence other than the identity and the total relation
    pub witness: Option<Vec<Vec<usize>>>,
}

/// A congruence with `k` classes gives a `k`-element reflet, so any congruence other than the
/// identity and the total one yields a third reflet up to isomorphism.
pub fn simplicity(h: &Hypergroup, method: SearchMethod, cap: usize) -> Result<SimplicityVerdict> {
    let search = search_congruences(h, method, cap)?;
    let witness = search
        .congruences
        .iter()
        .find(|eq| !eq.is_identity() && !eq.is_total())
        .map(EquivalenceRelation::blocks);
    Ok(SimplicityVerdict {
        simple: !h.is_trivial() && witness.is_none(),
        congruences: search.congruences.len(),
        partitions_examined: search.partitions_examined,
        witness,
    })
}

pub fn is_simple(h: &Hypergroup, cap: usize) -> Result<bool> {
    Ok(simplicity(h, SearchMethod::Pruned, cap)?.simple)
}

/// Subgroups `K` with `KxK = HxK = KxH` for every `x`.
pub fn invariant_modulo_subgroups(g: &GroupTable, h: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
    Ok(subgroups(g, cap)?
        .into_iter()
        .filter(|k| is_invariant_modulo(g, h, k))
        .collect())
}

/// `G/H` is simple iff `H ≠ G` and the only subgroups invariant modulo `H` are `H` and `G`.
pub fn is_simple_coset(g: &GroupTable, h: &Subgroup, cap: usize) -> Result<bool> {
    if h.order() == g.order() {
        return Ok(false);
    }
    Ok(invariant_modulo_subgroups(g, h, cap)?.len() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{right_coset_hypergroup, stabilizer_hypergroup, utumi, UtumiInput};
    use crate::groups::{cyclic_group, stabilizer_subgroup, symmetric_group};
    use crate::multistructure::Mapping;

    fn group(n: usize) -> Hypergroup {
        Hypergroup::new(cyclic_group(n).unwrap().as_multistructure().unwrap()).unwrap()
    }

    fn utumi8() -> Hypergroup {
        let base = group(8);
        let part = EquivalenceRelation::from_blocks(8, &[vec![0], vec![1, 4, 7], vec![2, 3, 5, 6]]).unwrap();
        Hypergroup::new(utumi(&UtumiInput::new(base, part, 0).unwrap())).unwrap()
    }

    #[test]
    fn identity_and_total_are_congruences() {
        let h = stabilizer_hypergroup(4).unwrap();
        assert!(is_reflector_congruence(&h, &EquivalenceRelation::identity(4)));
        assert!(is_reflector_congruence(&h, &EquivalenceRelation::total(4)));
    }

    #[test]
    fn utumi_merge_is_not_a_congruence() {
        let h = utumi8();
        let merged = EquivalenceRelation::from_labels(&[0, 0, 1, 2, 3, 4, 5, 6]);
        assert!(!is_reflector_congruence(&h, &merged));
    }

    #[test]
    fn congruence_counts() {
        assert_eq!(reflector_congruences(&Hypergroup::trivial(), 12).unwrap().len(), 1);
        assert_eq!(reflector_congruences(&group(8), 12).unwrap().len(), 4);
        assert_eq!(reflector_congruences(&stabilizer_hypergroup(4).unwrap(), 12).unwrap().len(), 2);
    }

    #[test]
    fn pruned_and_brute_agree() {
        for h in [group(6), stabilizer_hypergroup(5).unwrap(), utumi8()] {
            let a = search_congruences(&h, SearchMethod::Pruned, 12).unwrap();
            let b = search_congruences(&h, SearchMethod::Brute, 12).unwrap();
            assert_eq!(a.congruences, b.congruences);
            assert!(a.partitions_examined <= b.partitions_examined);
        }
        assert_eq!(search_congruences(&utumi8(), SearchMethod::Brute, 12).unwrap().partitions_examined, 4140);
    }

    #[test]
    fn congruence_projection_is_reflector() {
        let h = group(12);
        for eq in reflector_congruences(&h, 12).unwrap() {
            let q = quotient_by(&h, &eq).unwrap();
            let f = Mapping::new(&h, &q, eq.labels().to_vec()).unwrap();
            assert!(f.is_reflector());
        }
    }

    #[test]
    fn quotient_of_z4() {
        let h = group(4);
        let eq = EquivalenceRelation::from_labels(&[0, 1, 0, 1]);
        let q = quotient_by(&h, &eq).unwrap();
        assert!(are_isomorphic(&q, &group(2)));
        assert_eq!(quotient_by(&h, &EquivalenceRelation::identity(4)).unwrap(), h);
        assert!(quotient_by(&h, &EquivalenceRelation::total(4)).unwrap().is_trivial());
    }

    #[test]
    fn reflet_lists() {
        let s3 = stabilizer_hypergroup(3).unwrap();
        let r = reflets(&s3, 12).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].is_trivial());
        assert!(are_isomorphic(&r[1], &s3));
        let r = reflets(&group(4), 12).unwrap();
        assert_eq!(r.iter().map(|q| q.len()).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(reflets(&Hypergroup::trivial(), 12).unwrap().len(), 1);
    }

    #[test]
    fn simple_verdicts() {
        assert!(is_simple(&utumi8(), 12).unwrap());
        assert!(!is_simple(&Hypergroup::trivial(), 12).unwrap());
        assert!(!is_simple(&group(6), 12).unwrap());
        assert!(is_simple(&group(7), 12).unwrap());
        let v = simplicity(&group(6), SearchMethod::Pruned, 12).unwrap();
        assert_eq!(v.congruences, 4);
        assert!(v.witness.is_some());
        assert!(is_simple(&group(13), 12).unwrap_err().is_cap());
    }

    #[test]
    fn coset_fast_path() {
        let s3 = symmetric_group(3, 120).unwrap();
        let stab = stabilizer_subgroup(&s3, 0).unwrap();
        let inv = invariant_modulo_subgroups(&s3, &stab, 120).unwrap();
        assert_eq!(inv.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![2, 6]);
        assert!(is_simple_coset(&s3, &stab, 120).unwrap());
        let normal = invariant_modulo_subgroups(&s3, &s3.trivial_subgroup(), 120).unwrap();
        assert_eq!(normal.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 3, 6]);
        assert!(!is_simple_coset(&s3, &s3.whole(), 120).unwrap());
        assert_eq!(invariant_modulo_subgroups(&s3, &s3.whole(), 120).unwrap().len(), 1);
        let coset = right_coset_hypergroup(&s3, &stab).unwrap();
        assert!(is_simple(&coset, 12).unwrap());
    }
}
