//! Finite groups as Cayley tables, their subgroups, and invariance modulo a subgroup.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multistructure::Multistructure;
use crate::subset::{Subset, MAX_ELEMENTS};

/// Default bound on the order of groups whose subgroups are enumerated.
pub const DEFAULT_GROUP_CAP: usize = 120;

/// First violated group axiom found by [`GroupTable::verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GroupViolation {
    NotSquare,
    OutOfRange { row: usize, col: usize },
    NotAssociative { triple: (usize, usize, usize) },
    NoIdentity,
    NoInverse { element: usize },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupViolation::NotSquare => write!(f, "table is not square"),
            GroupViolation::OutOfRange { row, col } => write!(f, "entry ({row},{col}) out of range"),
            GroupViolation::NotAssociative { triple: (a, b, c) } => {
                write!(f, "({a}{b}){c} != {a}({b}{c})")
            }
            GroupViolation::NoIdentity => write!(f, "no two-sided identity"),
            GroupViolation::NoInverse { element } => write!(f, "element {element} has no inverse"),
        }
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone)]
pub struct GroupTable {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    /// One-line permutations when built by [`symmetric_group`] or a block-permutation realization.
    permutations: Option<Vec<Vec<usize>>>,
}

impl GroupTable {
    /// Certifies a candidate table, reporting the first violated axiom.
    pub fn verify(names: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self, GroupViolation> {
        let n = rows.len();
        if n == 0 || names.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(GroupViolation::NotSquare);
        }
        for (row, r) in rows.iter().enumerate() {
            if let Some(col) = r.iter().position(|&v| v >= n) {
                return Err(GroupViolation::OutOfRange { row, col });
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(GroupViolation::NotAssociative { triple: (a, b, c) });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(GroupViolation::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .ok_or(GroupViolation::NoInverse { element: x })?;
            inverse.push(inv);
        }
        Ok(GroupTable {
            names,
            table,
            identity,
            inverse,
            permutations: None,
        })
    }

    /// Group of permutations given in one-line notation, closed under composition.
    pub(crate) fn from_permutations(perms: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self> {
        let index: std::collections::HashMap<&[usize], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let n = perms.len();
        let mut rows = vec![vec![0; n]; n];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let pq: Vec<usize> = q.iter().map(|&k| p[k]).collect();
                rows[i][j] = *index
                    .get(pq.as_slice())
                    .ok_or_else(|| Error::NotAGroup("permutations not closed".into()))?;
            }
        }
        let mut g = Self::verify(names, rows).map_err(|v| Error::NotAGroup(v.to_string()))?;
        g.permutations = Some(perms);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order())
    }

    pub fn permutations(&self) -> Option<&[Vec<usize>]> {
        self.permutations.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The table viewed as a singleton-valued multistructure.
    pub fn as_multistructure(&self) -> Result<Multistructure> {
        if self.order() > MAX_ELEMENTS {
            return Err(Error::TooLarge(self.order(), MAX_ELEMENTS));
        }
        Multistructure::from_fn_named(self.names.clone(), |i, j| Subset::singleton(self.mul(i, j)))
    }

    pub fn whole(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        Subgroup { members }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(self.identity);
        Subgroup { members }
    }

    /// `{ a x b : a ∈ left, b ∈ right }` as a member set.
    pub fn double_coset(&self, left: &Subgroup, x: usize, right: &Subgroup) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for a in left.members.ones() {
            let ax = self.mul(a, x);
            for b in right.members.ones() {
                out.insert(self.mul(ax, b));
            }
        }
        out
    }

    fn left_translate(&self, x: usize, set: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for s in set.ones() {
            out.insert(self.mul(x, s));
        }
        out
    }

    fn right_translate(&self, set: &FixedBitSet, x: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for s in set.ones() {
            out.insert(self.mul(s, x));
        }
        out
    }

    fn closure(&self, seed: &FixedBitSet) -> FixedBitSet {
        let mut members = seed.clone();
        members.insert(self.identity);
        let mut frontier: Vec<usize> = members.ones().collect();
        let gens: Vec<usize> = seed.ones().collect();
        while let Some(a) = frontier.pop() {
            for &g in &gens {
                let p = self.mul(a, g);
                if !members.contains(p) {
                    members.insert(p);
                    frontier.push(p);
                }
            }
        }
        members
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable(order {})", self.order())
    }
}

/// A subgroup of some [`GroupTable`], stored as a member set over the parent's carrier.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: FixedBitSet,
}

impl Subgroup {
    /// Checks that `members` contains the identity and is closed under products and inverses.
    pub fn new(g: &GroupTable, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = FixedBitSet::with_capacity(g.order());
        for x in members {
            if x >= g.order() {
                return Err(Error::NotASubgroup(format!("element {x} out of range")));
            }
            set.insert(x);
        }
        if !set.contains(g.identity) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for a in set.ones() {
            if !set.contains(g.inverse(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for b in set.ones() {
                if !set.contains(g.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("product {a}*{b} missing")));
                }
            }
        }
        Ok(Subgroup { members: set })
    }

    /// Subgroup generated by the given elements.
    pub fn generated(g: &GroupTable, gens: impl IntoIterator<Item = usize>) -> Self {
        let mut seed = FixedBitSet::with_capacity(g.order());
        for x in gens {
            seed.insert(x);
        }
        Subgroup {
            members: g.closure(&seed),
        }
    }

    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The subgroup as a group in its own right, elements in parent index order.
    pub fn to_group(&self, g: &GroupTable) -> GroupTable {
        let members = self.members();
        let local = |x: usize| members.binary_search(&x).expect("closed");
        let rows = members
            .iter()
            .map(|&a| members.iter().map(|&b| local(g.mul(a, b))).collect())
            .collect();
        let names = members.iter().map(|&x| g.names[x].clone()).collect();
        let mut t = GroupTable::verify(names, rows).expect("subgroup of a group");
        t.permutations = g
            .permutations
            .as_ref()
            .map(|p| members.iter().map(|&x| p[x].clone()).collect());
        t
    }

    fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.order(), self.members())
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.ones()).finish()
    }
}

pub fn cyclic_group(m: usize) -> Result<GroupTable> {
    if m == 0 {
        return Err(Error::Precondition("cyclic group order must be >= 1".into()));
    }
    let rows = (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect();
    let names = (0..m).map(|i| i.to_string()).collect();
    GroupTable::verify(names, rows).map_err(|v| Error::NotAGroup(v.to_string()))
}

/// Dihedral group of order `2m`: rotations `r0..r{m-1}` then reflections `s0..s{m-1}`.
pub fn dihedral_group(m: usize) -> Result<GroupTable> {
    if m == 0 {
        return Err(Error::Precondition("dihedral group needs m >= 1".into()));
    }
    // (a, i) = s^a r^i; s r = r^{-1} s
    let idx = |a: usize, i: usize| a * m + i;
    let mut rows = vec![vec![0; 2 * m]; 2 * m];
    for a in 0..2 {
        for i in 0..m {
            for b in 0..2 {
                for j in 0..m {
                    let rot = if b == 0 { (i + j) % m } else { (m + j - i % m) % m };
                    rows[idx(a, i)][idx(b, j)] = idx(a ^ b, rot);
                }
            }
        }
    }
    let names = (0..m)
        .map(|i| format!("r{i}"))
        .chain((0..m).map(|i| format!("s{i}")))
        .collect();
    GroupTable::verify(names, rows).map_err(|v| Error::NotAGroup(v.to_string()))
}

pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    let (na, nb) = (a.order(), b.order());
    let mut rows = vec![vec![0; na * nb]; na * nb];
    for x in 0..na * nb {
        for y in 0..na * nb {
            rows[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
        }
    }
    let names = (0..na * nb)
        .map(|x| format!("({},{})", a.names[x / nb], b.names[x % nb]))
        .collect();
    GroupTable::verify(names, rows).map_err(|v| Error::NotAGroup(v.to_string()))
}

fn permutation_name(p: &[usize]) -> String {
    if p.len() <= 10 {
        p.iter().map(|d| char::from(b'0' + *d as u8)).collect()
    } else {
        p.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(".")
    }
}

/// All permutations of `m` points in lexicographic one-line order; the identity comes first.
pub fn symmetric_group(m: usize, cap: usize) -> Result<GroupTable> {
    if m == 0 {
        return Err(Error::Precondition("symmetric group needs m >= 1".into()));
    }
    let order: u128 = (1..=m as u128).product();
    if order > cap as u128 {
        return Err(Error::CapExceeded {
            what: "group order",
            size: order,
            cap: cap as u128,
        });
    }
    let mut perms = Vec::with_capacity(order as usize);
    let mut p: Vec<usize> = (0..m).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let names = perms.iter().map(|p| permutation_name(p)).collect();
    GroupTable::from_permutations(perms, names)
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Permutations fixing `point`.
pub fn stabilizer_subgroup(g: &GroupTable, point: usize) -> Result<Subgroup> {
    let perms = g
        .permutations()
        .ok_or_else(|| Error::Precondition("stabilizer needs a permutation group".into()))?;
    let degree = perms[0].len();
    if point >= degree {
        return Err(Error::Precondition(format!("point {point} >= degree {degree}")));
    }
    Subgroup::new(
        g,
        perms
            .iter()
            .enumerate()
            .filter(|(_, p)| p[point] == point)
            .map(|(i, _)| i),
    )
}

/// Even permutations.
pub fn alternating_subgroup(g: &GroupTable) -> Result<Subgroup> {
    let perms = g
        .permutations()
        .ok_or_else(|| Error::Precondition("alternating subgroup needs a permutation group".into()))?;
    let even = |p: &Vec<usize>| {
        let inversions = (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2 == 0
    };
    Subgroup::new(g, perms.iter().enumerate().filter(|(_, p)| even(p)).map(|(i, _)| i))
}

fn check_cap(g: &GroupTable, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(Error::CapExceeded {
            what: "group order",
            size: g.order() as u128,
            cap: cap as u128,
        })
    } else {
        Ok(())
    }
}

/// Every subgroup, sorted by order then member list.
///
/// Starts from the cyclic subgroups and joins each found subgroup with each cyclic one until no
/// new subgroup appears; every subgroup is a join of cyclic subgroups, so the result is complete.
pub fn subgroups(g: &GroupTable, cap: usize) -> Result<Vec<Subgroup>> {
    check_cap(g, cap)?;
    let mut seen = std::collections::HashSet::new();
    let mut cyclic = Vec::new();
    for x in 0..g.order() {
        let c = Subgroup::generated(g, [x]);
        if seen.insert(c.members.clone()) {
            cyclic.push(c);
        }
    }
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for c in &cyclic {
                if c.is_subgroup_of(s) {
                    continue;
                }
                let mut seed = s.members.clone();
                seed.union_with(&c.members);
                // generators: those of s (all members) plus c; closure under products suffices
                let joined = Subgroup {
                    members: g.closure(&seed),
                };
                if seen.insert(joined.members.clone()) {
                    next.push(joined.clone());
                    all.push(joined);
                }
            }
        }
        frontier = next;
    }
    all.sort_by_key(Subgroup::sort_key);
    Ok(all)
}

/// `x h x⁻¹ ∈ h` for all `x`.
pub fn is_normal(g: &GroupTable, h: &Subgroup) -> bool {
    (0..g.order()).all(|x| {
        let xi = g.inverse(x);
        h.members.ones().all(|a| h.contains(g.mul(g.mul(x, a), xi)))
    })
}

/// Proper subgroup with no subgroup strictly between it and `g`.
pub fn is_maximal(g: &GroupTable, h: &Subgroup, cap: usize) -> Result<bool> {
    if h.order() == g.order() {
        return Ok(false);
    }
    let all = subgroups(g, cap)?;
    Ok(!all
        .iter()
        .any(|k| k.order() > h.order() && k.order() < g.order() && h.is_subgroup_of(k)))
}

/// `KxK = HxK = KxH` for every `x`.
pub fn is_invariant_modulo(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> bool {
    (0..g.order()).all(|x| {
        let kxk = g.double_coset(k, x, k);
        kxk == g.double_coset(h, x, k) && kxk == g.double_coset(k, x, h)
    })
}

/// The equivalent form `H ⊆ K` and `Kx ⊆ HxK` for every `x`.
pub fn is_invariant_modulo_by_inclusion(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> bool {
    h.is_subgroup_of(k)
        && (0..g.order()).all(|x| {
            let kx = g.right_translate(&k.members, x);
            kx.is_subset(&g.double_coset(h, x, k))
        })
}

/// `KxK = HxK` for every `x`.
pub fn satisfies_left_half(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> bool {
    (0..g.order()).all(|x| g.double_coset(k, x, k) == g.double_coset(h, x, k))
}

/// `KxK = KxH` for every `x`.
pub fn satisfies_right_half(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> bool {
    (0..g.order()).all(|x| g.double_coset(k, x, k) == g.double_coset(k, x, h))
}

/// Non-trivial with no normal subgroups besides the trivial one and itself.
pub fn is_simple_group(g: &GroupTable, cap: usize) -> Result<bool> {
    if g.order() == 1 {
        return Ok(false);
    }
    let normal = subgroups(g, cap)?
        .into_iter()
        .filter(|s| is_normal(g, s))
        .count();
    Ok(normal == 2)
}

/// The classes `xH`, ordered by least member.
pub(crate) fn cosets_xh(g: &GroupTable, h: &Subgroup) -> Vec<FixedBitSet> {
    cosets_by(g, |x| g.left_translate(x, &h.members))
}

/// The classes `Hx`, ordered by least member.
pub(crate) fn cosets_hx(g: &GroupTable, h: &Subgroup) -> Vec<FixedBitSet> {
    cosets_by(g, |x| g.right_translate(&h.members, x))
}

fn cosets_by(g: &GroupTable, coset: impl Fn(usize) -> FixedBitSet) -> Vec<FixedBitSet> {
    let mut covered = FixedBitSet::with_capacity(g.order());
    let mut out = Vec::new();
    for x in 0..g.order() {
        if !covered.contains(x) {
            let c = coset(x);
            covered.union_with(&c);
            out.push(c);
        }
    }
    out
}
