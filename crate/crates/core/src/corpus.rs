//! Named sample groups, subgroup pairs and small hypergroups used by the tests.

use crate::constructions::{
    left_coset_hypergroup, right_coset_hypergroup, s_family, stabilizer_hypergroup, SFamilySizes,
};
use crate::error::Result;
use crate::groups::{
    alternating_subgroup, cyclic_group, dihedral_group, direct_product, stabilizer_subgroup, subgroups,
    symmetric_group, GroupTable, Subgroup, DEFAULT_GROUP_CAP,
};
use crate::multistructure::Hypergroup;

pub struct NamedGroup {
    pub name: String,
    pub group: GroupTable,
}

fn named(name: impl Into<String>, group: GroupTable) -> NamedGroup {
    NamedGroup {
        name: name.into(),
        group,
    }
}

/// Groups of order at most 12: cyclic, dihedral, products of cyclic groups, `Sym(3)`, `A₄`.
pub fn small_groups() -> Vec<NamedGroup> {
    let c = |m| cyclic_group(m).expect("m >= 1");
    let mut out: Vec<NamedGroup> = (1..=12).map(|m| named(format!("Z/{m}"), c(m))).collect();
    for m in 2..=6 {
        out.push(named(format!("D{}", 2 * m), dihedral_group(m).expect("m >= 1")));
    }
    let products = [(2, 2), (2, 4), (3, 3), (2, 6)];
    for (a, b) in products {
        out.push(named(format!("Z/{a}xZ/{b}"), direct_product(&c(a), &c(b)).expect("small")));
    }
    let z2z2 = direct_product(&c(2), &c(2)).expect("small");
    out.push(named("Z/2xZ/2xZ/2", direct_product(&z2z2, &c(2)).expect("small")));
    out.push(named("Sym(3)", symmetric_group(3, DEFAULT_GROUP_CAP).expect("order 6")));
    let s4 = symmetric_group(4, DEFAULT_GROUP_CAP).expect("order 24");
    out.push(named("A4", alternating_subgroup(&s4).expect("permutation group").to_group(&s4)));
    out
}

/// Whether a group in [`small_groups`] is simple in the classical sense: prime order.
pub fn classically_simple_order(order: usize) -> bool {
    order >= 2 && (2..order).all(|d| !order.is_multiple_of(d))
}

pub struct CosetCase {
    pub name: String,
    pub group: GroupTable,
    pub subgroup: Subgroup,
}

/// `Sym(3)` and `Sym(4)` with a point stabilizer, `Sym(4)` with `A₄`, and every subgroup of
/// `Z/8` and of the dihedral group of order 8.
pub fn reflet_cases() -> Vec<CosetCase> {
    let mut out = Vec::new();
    for m in [3, 4] {
        let g = symmetric_group(m, DEFAULT_GROUP_CAP).expect("small");
        let h = stabilizer_subgroup(&g, 0).expect("permutation group");
        out.push(CosetCase {
            name: format!("Sym({m})/Stab"),
            group: g,
            subgroup: h,
        });
    }
    let s4 = symmetric_group(4, DEFAULT_GROUP_CAP).expect("small");
    out.push(CosetCase {
        name: "Sym(4)/A4".into(),
        subgroup: alternating_subgroup(&s4).expect("permutation group"),
        group: s4,
    });
    for (name, g) in [("Z/8", cyclic_group(8)), ("D8", dihedral_group(4))] {
        let g = g.expect("small");
        for h in subgroups(&g, DEFAULT_GROUP_CAP).expect("small") {
            out.push(CosetCase {
                name: format!("{name}/{:?}", h.members()),
                group: g.clone(),
                subgroup: h,
            });
        }
    }
    out
}

/// Every subgroup of `Sym(3)`, `Sym(4)`, `Z/n` (n ≤ 12) and the dihedral group of order 8,
/// limited to at most `max_index` cosets.
pub fn coset_cases(max_index: usize) -> Vec<CosetCase> {
    let mut groups = vec![
        ("Sym(3)".to_string(), symmetric_group(3, DEFAULT_GROUP_CAP).expect("small")),
        ("Sym(4)".to_string(), symmetric_group(4, DEFAULT_GROUP_CAP).expect("small")),
        ("D8".to_string(), dihedral_group(4).expect("small")),
    ];
    groups.extend((1..=12).map(|m| (format!("Z/{m}"), cyclic_group(m).expect("m >= 1"))));
    let mut out = Vec::new();
    for (name, g) in groups {
        for h in subgroups(&g, DEFAULT_GROUP_CAP).expect("small") {
            if g.order() / h.order() <= max_index {
                out.push(CosetCase {
                    name: format!("{name}/{:?}", h.members()),
                    group: g.clone(),
                    subgroup: h,
                });
            }
        }
    }
    out
}

/// Hypergroups with at most four elements: trivial, cyclic, Klein, stabilizer examples, the
/// one-block S-family members and every coset table from [`coset_cases`] that small.
pub fn tiny_hypergroups() -> Result<Vec<(String, Hypergroup)>> {
    let group = |name: &str, g: GroupTable| -> Result<(String, Hypergroup)> {
        Ok((name.to_string(), Hypergroup::new(g.as_multistructure()?)?))
    };
    let mut out = vec![("trivial".to_string(), Hypergroup::trivial())];
    for m in 2..=4 {
        out.push(group(&format!("Z/{m}"), cyclic_group(m)?)?);
    }
    out.push(group("Klein", direct_product(&cyclic_group(2)?, &cyclic_group(2)?)?)?);
    for alpha in [3, 4] {
        out.push((format!("stab({alpha})"), stabilizer_hypergroup(alpha)?));
    }
    for sizes in [vec![3], vec![4], vec![2, 2]] {
        let name = format!("S{sizes:?}");
        out.push((name, Hypergroup::new(s_family(&SFamilySizes::new(sizes)?))?));
    }
    for case in coset_cases(4) {
        out.push((
            format!("{} right", case.name),
            right_coset_hypergroup(&case.group, &case.subgroup)?,
        ));
        out.push((
            format!("{} left", case.name),
            left_coset_hypergroup(&case.group, &case.subgroup)?,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shapes() {
        let groups = small_groups();
        assert!(groups.iter().all(|g| g.group.order() <= 12));
        assert_eq!(groups.iter().find(|g| g.name == "A4").unwrap().group.order(), 12);
        // two stabilizer cases, Sym(4)/A4, four subgroups of Z/8, ten of D8
        assert_eq!(reflet_cases().len(), 3 + 4 + 10);
        assert!(tiny_hypergroups().unwrap().iter().all(|(_, h)| h.len() <= 4));
        assert!(classically_simple_order(11) && !classically_simple_order(1) && !classically_simple_order(9));
    }
}
