//! Hypergroup constructions: coset spaces, the stabilizer family, the `S(n,(p_i))` family and
//! structures built from a partition by `x.y = x + ȳ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{self, GroupTable, Subgroup};
use crate::multistructure::{Hypergroup, Multistructure};
use crate::partition::EquivalenceRelation;
use crate::subset::{Subset, MAX_ELEMENTS};

fn coset_hypergroup(
    g: &GroupTable,
    classes: Vec<fixedbitset::FixedBitSet>,
    name: impl Fn(&str) -> String,
    product: impl Fn(usize, usize, usize) -> usize,
    h: &Subgroup,
) -> Result<Hypergroup> {
    let k = classes.len();
    if k > MAX_ELEMENTS {
        return Err(Error::TooLarge(k, MAX_ELEMENTS));
    }
    let mut class_of = vec![0; g.order()];
    let mut reps = Vec::with_capacity(k);
    for (c, members) in classes.iter().enumerate() {
        reps.push(members.ones().next().expect("nonempty coset"));
        for x in members.ones() {
            class_of[x] = c;
        }
    }
    let names = reps.iter().map(|&r| name(&g.names()[r])).collect();
    let m = Multistructure::from_fn_named(names, |i, j| {
        h.member_set()
            .ones()
            .map(|hh| class_of[product(reps[i], hh, reps[j])])
            .collect()
    })?;
    Hypergroup::new(m)
}

/// `G/H`: classes `xH` with `(xH).(yH) = { xhyH : h ∈ H }`.
pub fn right_coset_hypergroup(g: &GroupTable, h: &Subgroup) -> Result<Hypergroup> {
    coset_hypergroup(
        g,
        groups::cosets_xh(g, h),
        |r| format!("{r}H"),
        |x, hh, y| g.mul(g.mul(x, hh), y),
        h,
    )
}

/// `H\G`: classes `Hx` with `(Hx).(Hy) = { Hxhy : h ∈ H }`.
pub fn left_coset_hypergroup(g: &GroupTable, h: &Subgroup) -> Result<Hypergroup> {
    coset_hypergroup(
        g,
        groups::cosets_hx(g, h),
        |r| format!("H{r}"),
        |x, hh, y| g.mul(g.mul(x, hh), y),
        h,
    )
}

/// `x.e = x` and `x.y = K \ {x}` for `y ≠ e`, on `alpha` elements with `e` first.
pub fn stabilizer_hypergroup(alpha: usize) -> Result<Hypergroup> {
    if alpha == 0 {
        return Err(Error::Precondition("alpha must be >= 1".into()));
    }
    if alpha > MAX_ELEMENTS {
        return Err(Error::TooLarge(alpha, MAX_ELEMENTS));
    }
    let names = std::iter::once("e".to_string())
        .chain((1..alpha).map(|i| format!("x{i}")))
        .collect();
    let full = Subset::full(alpha);
    let m = Multistructure::from_fn_named(names, |x, y| {
        if y == 0 {
            Subset::singleton(x)
        } else {
            full.without(x)
        }
    })?;
    Hypergroup::new(m)
}

/// Block sizes `n = |A_0|` followed by `p_i = |A_i|`, each at least one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SFamilySizes(Vec<usize>);

impl SFamilySizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::Precondition("at least one block size".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::Precondition("block sizes must be >= 1".into()));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_ELEMENTS {
            return Err(Error::TooLarge(total, MAX_ELEMENTS));
        }
        Ok(SFamilySizes(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn base(&self) -> usize {
        self.0[0]
    }

    pub fn others(&self) -> &[usize] {
        &self.0[1..]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// First element index of each block.
    fn offsets(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &s| {
                let start = *acc;
                *acc += s;
                Some(start)
            })
            .collect()
    }

    fn block_masks(&self) -> Vec<Subset> {
        self.offsets()
            .iter()
            .zip(&self.0)
            .map(|(&start, &len)| (start..start + len).collect())
            .collect()
    }
}

/// The `S(n,(p_i))` table on `K = A_0 ⊔ A_1 ⊔ ...`, with `e` the first element of `A_0`:
/// `x.e = x`, `a_i.y = A_i \ {a_i}` for `y ∈ A_0 \ {e}`, `a_i.a_j = K \ A_i` for `j ≠ 0`.
pub fn s_family(sizes: &SFamilySizes) -> Multistructure {
    let blocks = sizes.block_masks();
    let n = sizes.total();
    let full = Subset::full(n);
    let mut block_of = vec![0; n];
    for (b, mask) in blocks.iter().enumerate() {
        for x in *mask {
            block_of[x] = b;
        }
    }
    let mut names = Vec::with_capacity(n);
    for (b, mask) in blocks.iter().enumerate() {
        for (j, _) in mask.iter().enumerate() {
            names.push(match (b, j) {
                (0, 0) => "e".to_string(),
                (0, j) => format!("y{j}"),
                (b, j) => format!("a{b}_{j}"),
            });
        }
    }
    Multistructure::from_fn_named(names, |x, y| {
        let bx = blocks[block_of[x]];
        if y == 0 {
            Subset::singleton(x)
        } else if block_of[y] == 0 {
            bx.without(x)
        } else {
            full - bx
        }
    })
    .expect("sizes validated")
}

/// Which of the four classes an `S(n,(p_i))` structure falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SFamilyClass {
    DHypergroup,
    HypergroupNotD,
    EmptyProduct,
    NotAssociative,
}

/// Class together with the identity that exhibits it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SFamilyClassification {
    pub class: SFamilyClass,
    pub witness: Option<SFamilyWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SFamilyWitness {
    /// `x.(y.z) ≠ (x.y).z`
    Associativity {
        triple: (usize, usize, usize),
        right_grouped: Subset,
        left_grouped: Subset,
    },
    /// `x.y = ∅`
    EmptyProduct { pair: (usize, usize) },
    /// `e.y` and `a.y` have different sizes
    Equipotence { e: usize, a: usize, y: usize },
}

/// Classifies by the block sizes alone, then evaluates the exhibiting identity on the table.
///
/// Order of tests: all `p_i = n`; `n ≥ 3` with all `p_i ≥ 3`; `n ≥ 2` with some `p_k = 1`;
/// everything else.
pub fn s_family_class(sizes: &SFamilySizes) -> SFamilyClassification {
    let n = sizes.base();
    let others = sizes.others();
    let offsets = sizes.offsets();
    let m = s_family(sizes);
    let e = 0;
    let first_of = |block: usize| offsets[block];
    let block_where = |pred: &dyn Fn(usize) -> bool| others.iter().position(|&p| pred(p)).map(|i| i + 1);

    if others.iter().all(|&p| p == n) {
        return SFamilyClassification {
            class: SFamilyClass::DHypergroup,
            witness: None,
        };
    }
    if n >= 3 && others.iter().all(|&p| p >= 3) {
        let k = block_where(&|p| p != n).expect("some p_k != n");
        return SFamilyClassification {
            class: SFamilyClass::HypergroupNotD,
            witness: Some(SFamilyWitness::Equipotence {
                e,
                a: first_of(k),
                y: 1,
            }),
        };
    }
    if n >= 2 {
        if let Some(k) = block_where(&|p| p == 1) {
            let pair = (first_of(k), 1);
            debug_assert!(m.product(pair.0, pair.1).is_empty());
            return SFamilyClassification {
                class: SFamilyClass::EmptyProduct,
                witness: Some(SFamilyWitness::EmptyProduct { pair }),
            };
        }
    }
    // n = 1 with some p_k >= 2: a.(a.a) vs (a.a).a; otherwise a.(y.y) vs (a.y).y
    let triple = if n == 1 {
        let k = block_where(&|p| p >= 2).expect("p_k >= 2");
        let a = first_of(k);
        (a, a, a)
    } else {
        let k = if n == 2 {
            block_where(&|p| p >= 3)
        } else {
            block_where(&|p| p == 2)
        }
        .expect("remaining cases");
        (first_of(k), 1, 1)
    };
    let (x, y, z) = triple;
    SFamilyClassification {
        class: SFamilyClass::NotAssociative,
        witness: Some(SFamilyWitness::Associativity {
            triple,
            right_grouped: m.product_of_sets(Subset::singleton(x), m.product(y, z)),
            left_grouped: m.product_of_sets(m.product(x, y), Subset::singleton(z)),
        }),
    }
}

/// For equal block sizes: the group of block-respecting permutations of `K` and the
/// stabilizer of `e`, whose coset hypergroup is isomorphic to `s_family(sizes)`.
pub fn s_family_group_realization(
    sizes: &SFamilySizes,
    cap: usize,
) -> Result<(GroupTable, Subgroup)> {
    let p = sizes.base();
    if sizes.others().iter().any(|&q| q != p) {
        return Err(Error::Precondition("realization needs equal block sizes".into()));
    }
    let blocks = sizes.sizes().len();
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let order = fact(p).pow(blocks as u32) * fact(blocks);
    if order > cap as u128 {
        return Err(Error::CapExceeded {
            what: "group order",
            size: order,
            cap: cap as u128,
        });
    }
    let n = sizes.total();
    let mut block_perm: Vec<usize> = (0..blocks).collect();
    let mut inner: Vec<usize> = (0..p).collect();
    let mut inner_perms = Vec::new();
    loop {
        inner_perms.push(inner.clone());
        if !groups::next_permutation(&mut inner) {
            break;
        }
    }
    let mut perms = Vec::with_capacity(order as usize);
    loop {
        // every choice of a bijection A_i -> A_{s(i)} per block
        let mut choice = vec![0usize; blocks];
        loop {
            let mut sigma = vec![0; n];
            for b in 0..blocks {
                let target = block_perm[b];
                for (j, &t) in inner_perms[choice[b]].iter().enumerate() {
                    sigma[b * p + j] = target * p + t;
                }
            }
            perms.push(sigma);
            let mut i = blocks;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < inner_perms.len() {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
        if !groups::next_permutation(&mut block_perm) {
            break;
        }
    }
    perms.sort();
    let names = perms
        .iter()
        .map(|s| s.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("."))
        .collect();
    let g = GroupTable::from_permutations(perms, names)?;
    let h = groups::stabilizer_subgroup(&g, 0)?;
    Ok((g, h))
}

/// Base structure, partition and zero for the construction `x.y = x + ȳ`.
#[derive(Clone, Debug)]
pub struct UtumiInput {
    base: Hypergroup,
    partition: EquivalenceRelation,
    zero: usize,
}

impl UtumiInput {
    /// Checks `{0}` is a class, `x + 0 = {x}`, and `x ∈ 0 + x ⊆ x̄`.
    pub fn new(base: Hypergroup, partition: EquivalenceRelation, zero: usize) -> Result<Self> {
        let n = base.len();
        if partition.len() != n {
            return Err(Error::Precondition(format!(
                "partition covers {} elements, base has {n}",
                partition.len()
            )));
        }
        if zero >= n {
            return Err(Error::Precondition(format!("zero {zero} out of range")));
        }
        let classes = partition.class_masks();
        if classes[partition.class_of(zero)] != Subset::singleton(zero) {
            return Err(Error::Precondition("class of zero is not {zero}".into()));
        }
        for x in 0..n {
            if base.product(x, zero) != Subset::singleton(x) {
                return Err(Error::Precondition(format!("x + 0 != x for x = {x}")));
            }
            let zx = base.product(zero, x);
            if !zx.contains(x) || !zx.is_subset(classes[partition.class_of(x)]) {
                return Err(Error::Precondition(format!("x in 0 + x within class of x fails for x = {x}")));
            }
        }
        Ok(UtumiInput {
            base,
            partition,
            zero,
        })
    }

    pub fn base(&self) -> &Hypergroup {
        &self.base
    }

    pub fn partition(&self) -> &EquivalenceRelation {
        &self.partition
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    fn class(&self, x: usize) -> Subset {
        self.partition.class_masks()[self.partition.class_of(x)]
    }
}

/// `x.y = x + ȳ`
pub fn utumi(input: &UtumiInput) -> Multistructure {
    let classes = input.partition.class_masks();
    let base = &input.base;
    Multistructure::from_fn_named(base.names().to_vec(), |x, y| {
        base.product_of_sets(Subset::singleton(x), classes[input.partition.class_of(y)])
    })
    .expect("same carrier as base")
}

/// Associativity via `x̄ + ȳ = sat(x + ȳ)`; returns the first failing pair.
pub fn utumi_is_associative(input: &UtumiInput) -> (bool, Option<(usize, usize)>) {
    let n = input.base.len();
    for x in 0..n {
        for y in 0..n {
            let yc = input.class(y);
            let lhs = input.base.product_of_sets(input.class(x), yc);
            let rhs = input
                .partition
                .saturate(input.base.product_of_sets(Subset::singleton(x), yc));
            if lhs != rhs {
                return (false, Some((x, y)));
            }
        }
    }
    (true, None)
}

/// Sufficient condition for simplicity over a group base: every class other than `{0}` has
/// an iterated sum `A + ... + A` (at most `n` terms) equal to the whole carrier.
pub fn utumi_simplicity_criterion(input: &UtumiInput) -> Result<bool> {
    if !input.base.is_group() {
        return Err(Error::Precondition("criterion needs a group base".into()));
    }
    if !utumi_is_associative(input).0 {
        return Err(Error::Precondition("construction is not associative".into()));
    }
    let n = input.base.len();
    let full = input.base.carrier();
    Ok(input
        .partition
        .class_masks()
        .into_iter()
        .filter(|&a| a != Subset::singleton(input.zero))
        .all(|a| {
            let mut sum = a;
            for _ in 0..n {
                if sum == full {
                    return true;
                }
                sum = input.base.product_of_sets(sum, a);
            }
            false
        }))
}

/// Iterated sums `A, A+A, ..., ` up to `terms` terms.
pub fn iterated_sums(base: &Multistructure, a: Subset, terms: usize) -> Vec<Subset> {
    let mut out = Vec::with_capacity(terms);
    let mut sum = a;
    for _ in 0..terms {
        out.push(sum);
        sum = base.product_of_sets(sum, a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{alternating_subgroup, cyclic_group, stabilizer_subgroup, symmetric_group};
    use crate::iso::find_isomorphism;

    fn z(n: usize) -> Hypergroup {
        Hypergroup::new(cyclic_group(n).unwrap().as_multistructure().unwrap()).unwrap()
    }

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    fn utumi_input() -> UtumiInput {
        let p = EquivalenceRelation::from_blocks(8, &[vec![0], vec![1, 4, 7], vec![2, 3, 5, 6]]).unwrap();
        UtumiInput::new(z(8), p, 0).unwrap()
    }

    #[test]
    fn coset_of_whole_group_is_trivial() {
        let s3 = symmetric_group(3, 120).unwrap();
        assert!(right_coset_hypergroup(&s3, &s3.whole()).unwrap().is_trivial());
        assert!(left_coset_hypergroup(&s3, &s3.whole()).unwrap().is_trivial());
    }

    #[test]
    fn sym3_mod_stabilizer_table() {
        let s3 = symmetric_group(3, 120).unwrap();
        let h = right_coset_hypergroup(&s3, &stabilizer_subgroup(&s3, 0).unwrap()).unwrap();
        assert_eq!(h.len(), 3);
        let full = h.carrier();
        for x in 0..3 {
            assert_eq!(h.product(x, 0), Subset::singleton(x));
            for y in 1..3 {
                assert_eq!(h.product(x, y), full.without(x));
            }
        }
        assert_eq!(h.as_multistructure(), stabilizer_hypergroup(3).unwrap().as_multistructure());
    }

    #[test]
    fn normal_subgroup_gives_quotient_group() {
        let s3 = symmetric_group(3, 120).unwrap();
        let a3 = alternating_subgroup(&s3).unwrap();
        let right = right_coset_hypergroup(&s3, &a3).unwrap();
        let left = left_coset_hypergroup(&s3, &a3).unwrap();
        assert!(right.is_group());
        assert_eq!(right, left);
        assert!(find_isomorphism(&right, &z(2)).is_some());
    }

    #[test]
    fn stabilizer_family_small_cases() {
        assert!(stabilizer_hypergroup(1).unwrap().is_trivial());
        let two = stabilizer_hypergroup(2).unwrap();
        assert!(two.is_group());
        assert!(find_isomorphism(&two, &z(2)).is_some());
        assert!(stabilizer_hypergroup(0).is_err());
    }

    #[test]
    fn s_family_single_block_is_stabilizer_table() {
        let s = s_family(&SFamilySizes::new(vec![3]).unwrap());
        assert_eq!(&s, stabilizer_hypergroup(3).unwrap().as_multistructure());
    }

    #[test]
    fn s_family_known_witnesses() {
        // (1,2): a.(a.a) != (a.a).a
        let c = s_family_class(&SFamilySizes::new(vec![1, 2]).unwrap());
        assert_eq!(c.class, SFamilyClass::NotAssociative);
        let Some(SFamilyWitness::Associativity { triple, right_grouped, left_grouped }) = c.witness else {
            panic!("{c:?}")
        };
        assert_eq!(triple, (1, 1, 1));
        // K = {e, a, b}: a.(a.a) = {a}, (a.a).a = {a, b}
        assert_eq!(right_grouped, set(&[1]));
        assert_eq!(left_grouped, set(&[1, 2]));
        assert!(!left_grouped.is_subset(right_grouped));

        // (2,3): A0 = {e,y}, Ak = {a,b,c}; a.(y.y) = a, (a.y).y = Ak
        let c = s_family_class(&SFamilySizes::new(vec![2, 3]).unwrap());
        let Some(SFamilyWitness::Associativity { triple, right_grouped, left_grouped }) = c.witness else {
            panic!("{c:?}")
        };
        assert_eq!(triple, (2, 1, 1));
        assert_eq!(right_grouped, set(&[2]));
        assert_eq!(left_grouped, set(&[2, 3, 4]));

        // (3,2): A0 = {e,y,z}, Ak = {a,b}; a.(y.y) = Ak, (a.y).y = b.y = a
        let c = s_family_class(&SFamilySizes::new(vec![3, 2]).unwrap());
        assert_eq!(c.class, SFamilyClass::NotAssociative);
        let Some(SFamilyWitness::Associativity { triple, right_grouped, left_grouped }) = c.witness else {
            panic!("{c:?}")
        };
        assert_eq!(triple, (3, 1, 1));
        assert_eq!(right_grouped, set(&[3, 4]));
        assert_eq!(left_grouped, set(&[3]));

        // (3,1): a.y = ∅
        let sizes = SFamilySizes::new(vec![3, 1]).unwrap();
        let c = s_family_class(&sizes);
        assert_eq!(c.class, SFamilyClass::EmptyProduct);
        assert_eq!(c.witness, Some(SFamilyWitness::EmptyProduct { pair: (3, 1) }));
        assert!(s_family(&sizes).product(3, 1).is_empty());
        assert!(!s_family(&sizes).verify_axioms().all_products_nonempty);
    }

    #[test]
    fn s_family_one_two_fails_associativity_at_aaa() {
        let r = s_family(&SFamilySizes::new(vec![1, 2]).unwrap()).verify_axioms();
        assert_eq!(r.associativity_witness.unwrap().triple, (1, 1, 1));
    }

    #[test]
    fn s_family_three_four_is_not_equipotent() {
        let sizes = SFamilySizes::new(vec![3, 4]).unwrap();
        let c = s_family_class(&sizes);
        assert_eq!(c.class, SFamilyClass::HypergroupNotD);
        let h = Hypergroup::new(s_family(&sizes)).unwrap();
        let report = h.cogroup_report();
        assert!(!report.column_equipotent);
        assert!(!h.is_cogroup());
        // e.y has 2 elements, a.y has 3
        assert_eq!(h.product(0, 1).len(), 2);
        assert_eq!(h.product(3, 1).len(), 3);
    }

    #[test]
    fn class_examples() {
        let class = |v: Vec<usize>| s_family_class(&SFamilySizes::new(v).unwrap()).class;
        assert_eq!(class(vec![3, 3, 3]), SFamilyClass::DHypergroup);
        assert_eq!(class(vec![2, 3]), SFamilyClass::NotAssociative);
        assert_eq!(class(vec![3, 2]), SFamilyClass::NotAssociative);
        assert_eq!(class(vec![3]), SFamilyClass::DHypergroup);
        assert_eq!(class(vec![1, 1]), SFamilyClass::DHypergroup);
        assert!(SFamilySizes::new(vec![2, 0]).is_err());
        assert!(SFamilySizes::new(vec![]).is_err());
    }

    #[test]
    fn group_realizations() {
        let (g, h) = s_family_group_realization(&SFamilySizes::new(vec![3]).unwrap(), 120).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(h.order(), 2);
        let sizes = SFamilySizes::new(vec![3, 3]).unwrap();
        let (g, h) = s_family_group_realization(&sizes, 120).unwrap();
        assert_eq!(g.order(), 72);
        let coset = right_coset_hypergroup(&g, &h).unwrap();
        assert!(find_isomorphism(&coset, &s_family(&sizes)).is_some());
        // singleton blocks: only block permutations
        let sizes = SFamilySizes::new(vec![1, 1, 1]).unwrap();
        let (g, h) = s_family_group_realization(&sizes, 120).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(h.order(), 2);
        let coset = right_coset_hypergroup(&g, &h).unwrap();
        assert!(find_isomorphism(&coset, &s_family(&sizes)).is_some());
        assert!(s_family_group_realization(&SFamilySizes::new(vec![3, 4]).unwrap(), 120).is_err());
        assert!(s_family_group_realization(&SFamilySizes::new(vec![3, 3, 3]).unwrap(), 120)
            .unwrap_err()
            .is_cap());
    }

    #[test]
    fn utumi_cogroup() {
        let input = utumi_input();
        let m = utumi(&input);
        // 1.2 = 1 + {2,3,5,6}
        assert_eq!(m.product(1, 2), set(&[3, 4, 6, 7]));
        // 1.1 = 1 + {1,4,7}
        assert_eq!(m.product(1, 1), set(&[2, 5, 0]));
        let h = Hypergroup::new(m).unwrap();
        assert!(!h.is_group());
        let report = h.cogroup_report();
        assert!(report.partition);
        assert!(report.column_equipotent);
        assert!(utumi_is_associative(&input).0);
        assert!(utumi_simplicity_criterion(&input).unwrap());
        // B+B = H; for A the first full sum has four terms (no three of 1,4,7 sum to 0 mod 8)
        let full = Subset::full(8);
        let a_sums = iterated_sums(input.base(), set(&[1, 4, 7]), 4);
        assert_eq!(a_sums[1], set(&[0, 2, 3, 5, 6]));
        assert_eq!(a_sums[2], full.without(0));
        assert_eq!(a_sums[3], full);
        assert_eq!(iterated_sums(input.base(), set(&[2, 3, 5, 6]), 2)[1], full);
    }

    #[test]
    fn utumi_singletons_give_the_group() {
        let input = UtumiInput::new(z(5), EquivalenceRelation::identity(5), 0).unwrap();
        assert_eq!(&utumi(&input), z(5).as_multistructure());
        assert!(utumi_is_associative(&input).0);
    }

    #[test]
    fn utumi_associativity_agrees_with_axioms() {
        let p = EquivalenceRelation::from_blocks(8, &[vec![0], vec![1], (2..8).collect()]).unwrap();
        let input = UtumiInput::new(z(8), p, 0).unwrap();
        let (criterion, _) = utumi_is_associative(&input);
        assert_eq!(criterion, utumi(&input).verify_axioms().associative);
    }

    #[test]
    fn utumi_input_validation() {
        let bad_zero = EquivalenceRelation::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(UtumiInput::new(z(4), bad_zero, 0).is_err());
        assert!(UtumiInput::new(z(4), EquivalenceRelation::identity(4), 2).is_err());
        assert!(UtumiInput::new(z(4), EquivalenceRelation::identity(3), 0).is_err());
    }

    #[test]
    fn criterion_is_one_sided() {
        let z4 = UtumiInput::new(z(4), EquivalenceRelation::identity(4), 0).unwrap();
        assert!(!utumi_simplicity_criterion(&z4).unwrap());
        let z2 = UtumiInput::new(z(2), EquivalenceRelation::identity(2), 0).unwrap();
        assert!(!utumi_simplicity_criterion(&z2).unwrap());
    }
}
