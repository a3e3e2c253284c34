//! Trames (univalent operations defined on a set of composable pairs) and the multivalued
//! quotients they present.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{GroupTable, Subgroup};
use crate::multistructure::{Mapping, Multistructure};
use crate::partition::EquivalenceRelation;
use crate::simplicity::pruned_partitions;
use crate::subset::{Subset, MAX_ELEMENTS};

/// Default bound on `|T|` for the canonical presentation.
pub const DEFAULT_TRAME_CAP: usize = 65_536;

/// A set `T` with `Op` defined on the composable pairs only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trame {
    names: Vec<String>,
    op: BTreeMap<(usize, usize), usize>,
}

impl Trame {
    pub fn new(names: Vec<String>, op: BTreeMap<(usize, usize), usize>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Precondition("trame needs at least one element".into()));
        }
        if let Some((&(u, v), &w)) = op.iter().find(|(&(u, v), &w)| u >= n || v >= n || w >= n) {
            return Err(Error::Precondition(format!("composition {u} {v} -> {w} out of range")));
        }
        Ok(Trame { names, op })
    }

    /// Elements named by index.
    pub fn from_compositions(n: usize, ops: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self> {
        let mut op = BTreeMap::new();
        for (u, v, w) in ops {
            if let Some(prev) = op.insert((u, v), w) {
                if prev != w {
                    return Err(Error::Precondition(format!("{u} {v} composes to both {prev} and {w}")));
                }
            }
        }
        Self::new((0..n).map(|i| i.to_string()).collect(), op)
    }

    /// All pairs composable, with the group product.
    pub fn of_group(g: &GroupTable) -> Self {
        let n = g.order();
        let op = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| ((a, b), g.mul(a, b)))
            .collect();
        Trame {
            names: g.names().to_vec(),
            op,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn compose(&self, u: usize, v: usize) -> Option<usize> {
        self.op.get(&(u, v)).copied()
    }

    /// Composable pairs with their values, in pair order.
    pub fn compositions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.op.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    pub fn composable_count(&self) -> usize {
        self.op.len()
    }
}

/// A trame with an equivalence `R` on its carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub trame: Trame,
    pub r: EquivalenceRelation,
}

impl Presentation {
    pub fn new(trame: Trame, r: EquivalenceRelation) -> Result<Self> {
        if r.len() != trame.len() {
            return Err(Error::Precondition(format!(
                "equivalence on {} elements, trame has {}",
                r.len(),
                trame.len()
            )));
        }
        Ok(Presentation { trame, r })
    }

    /// Group trame with `x R y ⇔ x⁻¹y ∈ H`, presenting `G/H`.
    pub fn of_right_cosets(g: &GroupTable, h: &Subgroup) -> Self {
        let labels: Vec<usize> = (0..g.order())
            .map(|x| (0..g.order()).find(|&y| h.contains(g.mul(g.inverse(y), x))).unwrap())
            .collect();
        Presentation {
            trame: Trame::of_group(g),
            r: EquivalenceRelation::from_labels(&labels),
        }
    }

    /// Group trame with `x R y ⇔ yx⁻¹ ∈ H`, presenting `H\G`.
    pub fn of_left_cosets(g: &GroupTable, h: &Subgroup) -> Self {
        let labels: Vec<usize> = (0..g.order())
            .map(|x| (0..g.order()).find(|&y| h.contains(g.mul(x, g.inverse(y)))).unwrap())
            .collect();
        Presentation {
            trame: Trame::of_group(g),
            r: EquivalenceRelation::from_labels(&labels),
        }
    }

    pub fn quotient(&self) -> Result<Multistructure> {
        quotient_by_relation(&self.trame, &self.r)
    }
}

fn check_classes(r: &EquivalenceRelation) -> Result<()> {
    if r.class_count() > MAX_ELEMENTS {
        Err(Error::TooLarge(r.class_count(), MAX_ELEMENTS))
    } else {
        Ok(())
    }
}

/// `z̄ ∈ x̄.ȳ` iff some composable `(u,v) ∈ x̄ × ȳ` has `uv ∈ z̄`. Products may be empty.
pub fn quotient_by_relation(t: &Trame, r: &EquivalenceRelation) -> Result<Multistructure> {
    check_classes(r)?;
    let k = r.class_count();
    let mut table = vec![Subset::EMPTY; k * k];
    for (u, v, w) in t.compositions() {
        table[r.class_of(u) * k + r.class_of(v)].insert(r.class_of(w));
    }
    let names = r
        .blocks()
        .iter()
        .map(|b| t.names[b[0]].clone())
        .collect();
    Multistructure::from_fn_named(names, |i, j| table[i * k + j])
}

pub fn quotient(p: &Presentation) -> Result<Multistructure> {
    p.quotient()
}

/// Flags for the two first-order adequacy conditions, with the first failing class tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdequacyReport {
    /// every class reaches every class from the left and from the right
    pub reproductive: bool,
    /// the class quadruples reachable by `(rs)t` and by `r(st)` coincide
    pub associative: bool,
    /// `(x, y)`: class `y` unreachable as `x̄.T` or `x̄` unreachable as `T.ȳ`
    pub reproductivity_witness: Option<(usize, usize)>,
    /// `(x, y, z, u)`: `ū` reached by exactly one bracketing of `x̄ ȳ z̄`
    pub associativity_witness: Option<(usize, usize, usize, usize)>,
}

impl AdequacyReport {
    pub fn is_adequate(&self) -> bool {
        self.reproductive && self.associative
    }
}

/// Evaluates the adequacy conditions on the trame's composable pairs, without building the
/// quotient table.
///
/// The middle factor of each bracketing ranges over the whole class of the partial product,
/// so `(rs)t` here means `w t` for some `w` equivalent to `rs`.
pub fn is_adequate(p: &Presentation) -> Result<AdequacyReport> {
    let r = &p.r;
    check_classes(r)?;
    let k = r.class_count();
    let class = |x: usize| r.class_of(x);
    let comps: Vec<(usize, usize, usize)> = p.trame.compositions().collect();

    // (1): for all x, y: (∃ r ∈ x̄, s) rs ∈ ȳ and (∃ r, s ∈ ȳ) rs ∈ x̄
    let mut reach_from_left = vec![Subset::EMPTY; k];
    let mut reach_from_right = vec![Subset::EMPTY; k];
    for &(u, v, w) in &comps {
        reach_from_left[class(u)].insert(class(w));
        reach_from_right[class(v)].insert(class(w));
    }
    let full = Subset::full(k);
    let mut reproductivity_witness = None;
    'rep: for x in 0..k {
        for y in 0..k {
            if !reach_from_left[x].contains(y) || !reach_from_right[y].contains(x) {
                reproductivity_witness = Some((x, y));
                break 'rep;
            }
        }
    }
    debug_assert_eq!(
        reproductivity_witness.is_none(),
        reach_from_left.iter().chain(&reach_from_right).all(|&s| s == full)
    );

    // (2): compare, for each class triple, the classes reached by the two bracketings
    let mut by_left_class: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    let mut by_right_class: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for &(u, v, w) in &comps {
        by_left_class[class(u)].push((v, w));
        by_right_class[class(v)].push((u, w));
    }
    let idx = |x: usize, y: usize, z: usize| (x * k + y) * k + z;
    let mut left_first = vec![Subset::EMPTY; k * k * k];
    let mut right_first = vec![Subset::EMPTY; k * k * k];
    for &(rr, s, w) in &comps {
        // (rs)t: w' ~ rs composed with t
        for &(t, v) in &by_left_class[class(w)] {
            left_first[idx(class(rr), class(s), class(t))].insert(class(v));
        }
    }
    for &(s, t, w) in &comps {
        // r(st): r composed with w' ~ st
        for &(rr, v) in &by_right_class[class(w)] {
            right_first[idx(class(rr), class(s), class(t))].insert(class(v));
        }
    }
    let associativity_witness = left_first
        .iter()
        .zip(&right_first)
        .position(|(a, b)| a != b)
        .map(|i| {
            let (x, y, z) = (i / (k * k), i / k % k, i % k);
            let diff = (left_first[i] - right_first[i]) | (right_first[i] - left_first[i]);
            (x, y, z, diff.first().unwrap())
        });

    Ok(AdequacyReport {
        reproductive: reproductivity_witness.is_none(),
        associative: associativity_witness.is_none(),
        reproductivity_witness,
        associativity_witness,
    })
}

/// Outcome of testing whether `S` is invariant modulo `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub contains_r: bool,
    /// `f(p̄.q̄) = x̂.ŷ` for all `p̄ ⊆ x̂`, `q̄ ⊆ ŷ`; vacuous when `contains_r` fails
    pub pair_condition: bool,
    /// `x̄.f⁻¹(ŷ)` and `f⁻¹(x̂).ȳ` are unions of `S`-classes
    pub saturated: bool,
    /// first `R`-class pair `(p̄, q̄)` violating either condition
    pub witness: Option<(usize, usize)>,
}

impl InvarianceReport {
    pub fn holds(&self) -> bool {
        self.contains_r && self.pair_condition && self.saturated
    }
}

/// `R ⊆ S`, and for all `x, y`, every composable `(u,v) ∈ x̂ × ŷ` and every `(p,q) ∈ x̂ × ŷ`
/// admit a composable `(r,s) ∈ p̄ × q̄` with `Op(r,s) ≡_S Op(u,v)`; moreover the one-sided
/// products `x̄.f⁻¹(ŷ)` and `f⁻¹(x̂).ȳ` in `T/R` must be `S`-saturated.
///
/// Together these say exactly that the class map `T/R → T/S` is a reflector. The pair
/// condition alone is weaker: it only makes that map a good homomorphism.
pub fn is_invariant_modulo_equiv(
    t: &Trame,
    r: &EquivalenceRelation,
    s: &EquivalenceRelation,
) -> Result<InvarianceReport> {
    if r.len() != t.len() || s.len() != t.len() {
        return Err(Error::Precondition("equivalences must live on the trame".into()));
    }
    if !r.refines(s) {
        return Ok(InvarianceReport {
            contains_r: false,
            pair_condition: false,
            saturated: false,
            witness: None,
        });
    }
    check_classes(r)?;
    let k = r.class_count();
    let mut products = vec![Subset::EMPTY; k * k];
    for (u, v, w) in t.compositions() {
        products[r.class_of(u) * k + r.class_of(v)].insert(r.class_of(w));
    }
    // S-class of each R-class, and the R-classes inside each S-class
    let coarse: Vec<usize> = r.blocks().iter().map(|b| s.class_of(b[0])).collect();
    let mut fibers = vec![Subset::EMPTY; s.class_count()];
    for (p, &c) in coarse.iter().enumerate() {
        fibers[c].insert(p);
    }
    let sat = |set: Subset| set.iter().fold(Subset::EMPTY, |acc, p| acc | fibers[coarse[p]]);
    let ks = s.class_count();
    let mut reached = vec![Subset::EMPTY; ks * ks];
    for p in 0..k {
        for q in 0..k {
            reached[coarse[p] * ks + coarse[q]] |= sat(products[p * k + q]);
        }
    }
    let mut pair_witness = None;
    let mut sat_witness = None;
    for p in 0..k {
        for q in 0..k {
            if pair_witness.is_none() && sat(products[p * k + q]) != reached[coarse[p] * ks + coarse[q]] {
                pair_witness = Some((p, q));
            }
            if sat_witness.is_none() {
                let right = fibers[coarse[q]].iter().fold(Subset::EMPTY, |acc, q2| acc | products[p * k + q2]);
                let left = fibers[coarse[p]].iter().fold(Subset::EMPTY, |acc, p2| acc | products[p2 * k + q]);
                if sat(right) != right || sat(left) != left {
                    sat_witness = Some((p, q));
                }
            }
        }
    }
    Ok(InvarianceReport {
        contains_r: true,
        pair_condition: pair_witness.is_none(),
        saturated: sat_witness.is_none(),
        witness: pair_witness.or(sat_witness),
    })
}

/// `T/S` for `S` invariant modulo an adequate `R`, checked to be a reflet of `T/R` through the
/// induced class map.
pub fn reflect(p: &Presentation, s: &EquivalenceRelation) -> Result<Multistructure> {
    if !is_adequate(p)?.is_adequate() {
        return Err(Error::Precondition("presentation is not adequate".into()));
    }
    if !is_invariant_modulo_equiv(&p.trame, &p.r, s)?.holds() {
        return Err(Error::Precondition("equivalence is not invariant modulo R".into()));
    }
    let top = p.quotient()?;
    let bottom = quotient_by_relation(&p.trame, s)?;
    let image = p.r.blocks().iter().map(|b| s.class_of(b[0])).collect();
    let f = Mapping::new(&top, &bottom, image)?;
    if !f.is_reflector() {
        return Err(Error::Precondition("induced class map is not a reflector".into()));
    }
    Ok(bottom)
}

/// Counts of equivalences `S ⊇ R` that are invariant modulo `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSimplicity {
    pub simple: bool,
    pub invariant_equivalences: usize,
    /// candidates that reached the invariance test after prefix pruning
    pub equivalences_examined: u128,
}

/// Simple iff the only equivalences invariant modulo `R` are `R` and the total one.
///
/// Candidates are partitions of the class set in restricted-growth order. Prefixes that cannot
/// extend to a reflector congruence of the class table are skipped, and every remaining
/// candidate is decided by [`is_invariant_modulo_equiv`] on the trame.
pub fn presentation_simplicity(p: &Presentation, cap: usize) -> Result<PresentationSimplicity> {
    if !is_adequate(p)?.is_adequate() {
        return Err(Error::Precondition("presentation is not adequate".into()));
    }
    let k = p.r.class_count();
    if k > cap {
        return Err(Error::CapExceeded {
            what: "class count",
            size: k as u128,
            cap: cap as u128,
        });
    }
    if k <= 1 {
        return Err(Error::Precondition("quotient is trivial".into()));
    }
    let table = p.quotient()?;
    let mut failure = None;
    let (invariant, examined) = pruned_partitions(&table, |on_classes| {
        match is_invariant_modulo_equiv(&p.trame, &p.r, &p.r.lift(on_classes)) {
            Ok(report) => report.holds(),
            Err(e) => {
                failure.get_or_insert(e);
                false
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(PresentationSimplicity {
        simple: invariant.len() == 2,
        invariant_equivalences: invariant.len(),
        equivalences_examined: examined,
    })
}

/// `T = H × H³`; for each triple `t = (x,y,z)` with `z ∈ x.y`, the pair `((x,t),(y,t))` is
/// composable with value `(z,t)`. `R` has the classes `{x} × H³`. Empty products are allowed.
pub fn canonical_presentation(m: &Multistructure, cap: usize) -> Result<Presentation> {
    let n = m.len();
    let size = (n as u128).pow(4);
    if size > cap as u128 {
        return Err(Error::CapExceeded {
            what: "trame size",
            size,
            cap: cap as u128,
        });
    }
    let n3 = n * n * n;
    let elem = |x: usize, t: usize| x * n3 + t;
    let mut op = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in m.product(x, y) {
                let t = (x * n + y) * n + z;
                op.insert((elem(x, t), elem(y, t)), elem(z, t));
            }
        }
    }
    let mut names = Vec::with_capacity(n * n3);
    for x in 0..n {
        for t in 0..n3 {
            let (a, b, c) = (t / (n * n), t / n % n, t % n);
            names.push(format!(
                "{}@{}.{}.{}",
                m.name(x),
                m.name(a),
                m.name(b),
                m.name(c)
            ));
        }
    }
    let labels: Vec<usize> = (0..n * n3).map(|i| i / n3).collect();
    Ok(Presentation {
        trame: Trame { names, op },
        r: EquivalenceRelation::from_labels(&labels),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{right_coset_hypergroup, s_family, stabilizer_hypergroup, SFamilySizes};
    use crate::groups::{cyclic_group, stabilizer_subgroup, symmetric_group, Subgroup};
    use crate::iso::find_isomorphism;

    #[test]
    fn group_coset_presentation_gives_coset_table() {
        let s3 = symmetric_group(3, 120).unwrap();
        let stab = stabilizer_subgroup(&s3, 0).unwrap();
        let p = Presentation::of_right_cosets(&s3, &stab);
        let q = p.quotient().unwrap();
        assert_eq!(&q, right_coset_hypergroup(&s3, &stab).unwrap().as_multistructure());
        assert!(is_adequate(&p).unwrap().is_adequate());
    }

    #[test]
    fn identity_relation_recovers_group() {
        let z5 = cyclic_group(5).unwrap();
        let p = Presentation::new(Trame::of_group(&z5), EquivalenceRelation::identity(5)).unwrap();
        assert_eq!(p.quotient().unwrap(), z5.as_multistructure().unwrap());
    }

    #[test]
    fn single_element_trame_is_adequate() {
        let t = Trame::from_compositions(1, [(0, 0, 0)]).unwrap();
        let p = Presentation::new(t, EquivalenceRelation::total(1)).unwrap();
        assert!(is_adequate(&p).unwrap().is_adequate());
    }

    #[test]
    fn conflicting_compositions_are_rejected() {
        assert!(Trame::from_compositions(2, [(0, 0, 0), (0, 0, 1)]).is_err());
        assert!(Trame::from_compositions(2, [(0, 0, 0), (0, 0, 0)]).is_ok());
        assert!(Trame::from_compositions(2, [(0, 3, 0)]).is_err());
    }

    #[test]
    fn canonical_presentation_sizes() {
        let triv = crate::multistructure::Hypergroup::trivial();
        let p = canonical_presentation(&triv, DEFAULT_TRAME_CAP).unwrap();
        assert_eq!(p.trame.len(), 1);
        assert!(p.quotient().unwrap().len() == 1);
        let z2 = cyclic_group(2).unwrap().as_multistructure().unwrap();
        let p = canonical_presentation(&z2, DEFAULT_TRAME_CAP).unwrap();
        assert_eq!(p.trame.len(), 16);
        assert!(find_isomorphism(&p.quotient().unwrap(), &z2).is_some());
        let s = stabilizer_hypergroup(3).unwrap();
        let p = canonical_presentation(&s, DEFAULT_TRAME_CAP).unwrap();
        assert_eq!(p.trame.len(), 81);
        assert_eq!(&p.quotient().unwrap(), s.as_multistructure());
        assert!(canonical_presentation(&stabilizer_hypergroup(17).unwrap(), DEFAULT_TRAME_CAP)
            .unwrap_err()
            .is_cap());
    }

    #[test]
    fn canonical_presentation_of_non_associative_structure() {
        let m = s_family(&SFamilySizes::new(vec![2, 3]).unwrap());
        let p = canonical_presentation(&m, DEFAULT_TRAME_CAP).unwrap();
        assert_eq!(p.quotient().unwrap(), m);
        let report = is_adequate(&p).unwrap();
        assert!(!report.associative);
        assert!(report.reproductive);
    }

    #[test]
    fn invariance_examples() {
        let s3 = symmetric_group(3, 120).unwrap();
        let stab = stabilizer_subgroup(&s3, 0).unwrap();
        let p = Presentation::of_right_cosets(&s3, &stab);
        assert!(is_invariant_modulo_equiv(&p.trame, &p.r, &p.r).unwrap().holds());
        assert!(is_invariant_modulo_equiv(&p.trame, &p.r, &EquivalenceRelation::total(6))
            .unwrap()
            .holds());
        // identity relation does not contain R
        let r = is_invariant_modulo_equiv(&p.trame, &p.r, &EquivalenceRelation::identity(6)).unwrap();
        assert!(!r.contains_r && !r.holds());
    }

    #[test]
    fn pair_condition_alone_is_weaker_than_invariance() {
        // merging the two non-identity cosets of Sym(3)/Stab gives a good homomorphism onto a
        // two-element hypergroup, but not a reflector
        let s3 = symmetric_group(3, 120).unwrap();
        let p = Presentation::of_right_cosets(&s3, &stabilizer_subgroup(&s3, 0).unwrap());
        let s = EquivalenceRelation::from_labels(&[0, 0, 1, 1, 1, 1]);
        let report = is_invariant_modulo_equiv(&p.trame, &p.r, &s).unwrap();
        assert!(report.contains_r && report.pair_condition);
        assert!(!report.saturated && !report.holds());
        let top = p.quotient().unwrap();
        let bottom = quotient_by_relation(&p.trame, &s).unwrap();
        let f = Mapping::new(&top, &bottom, vec![0, 1, 1]).unwrap();
        assert!(f.is_morphism());
        assert!(!f.is_reflector());
    }

    #[test]
    fn invariance_for_subgroup_chain() {
        // Z/8: H = {0}, K = {0,4}; K is normal, hence invariant modulo H
        let z8 = cyclic_group(8).unwrap();
        let p = Presentation::of_right_cosets(&z8, &z8.trivial_subgroup());
        let k = Subgroup::new(&z8, [0, 4]).unwrap();
        let s = Presentation::of_right_cosets(&z8, &k).r;
        assert!(is_invariant_modulo_equiv(&p.trame, &p.r, &s).unwrap().holds());
        let reflet = reflect(&p, &s).unwrap();
        assert_eq!(reflet.len(), 4);
    }

    #[test]
    fn reflect_to_total_and_self() {
        let s4 = symmetric_group(4, 120).unwrap();
        let p = Presentation::of_right_cosets(&s4, &stabilizer_subgroup(&s4, 0).unwrap());
        assert_eq!(reflect(&p, &EquivalenceRelation::total(24)).unwrap().len(), 1);
        assert_eq!(reflect(&p, &p.r).unwrap(), p.quotient().unwrap());
        assert!(reflect(&p, &EquivalenceRelation::identity(24)).is_err());
    }

    #[test]
    fn presentation_simplicity_examples() {
        let s3 = symmetric_group(3, 120).unwrap();
        let p = Presentation::of_right_cosets(&s3, &stabilizer_subgroup(&s3, 0).unwrap());
        assert!(presentation_simplicity(&p, 12).unwrap().simple);
        let z4 = cyclic_group(4).unwrap();
        let p = Presentation::new(Trame::of_group(&z4), EquivalenceRelation::identity(4)).unwrap();
        let v = presentation_simplicity(&p, 12).unwrap();
        assert!(!v.simple);
        assert_eq!(v.invariant_equivalences, 3);
        assert!(v.equivalences_examined <= 15);
        let z5 = cyclic_group(5).unwrap();
        let p = Presentation::new(Trame::of_group(&z5), EquivalenceRelation::identity(5)).unwrap();
        assert!(presentation_simplicity(&p, 12).unwrap().simple);
        let p = Presentation::new(Trame::of_group(&z5), EquivalenceRelation::total(5)).unwrap();
        assert!(presentation_simplicity(&p, 12).is_err());
    }
}
