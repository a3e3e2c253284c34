//! JSON shapes printed by the verbs. Elements are reported by name; field order is fixed.

use hypergroup_core::constructions::{SFamilyClass, SFamilyClassification, SFamilyWitness};
use hypergroup_core::presentations::{AdequacyReport, InvarianceReport, Presentation};
use hypergroup_core::simplicity::SimplicityVerdict;
use hypergroup_core::{AxiomReport, GroupTable, Multistructure, Subgroup, Subset};
use serde::Serialize;

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn set_names(m: &Multistructure, s: Subset) -> Vec<&str> {
    s.iter().map(|z| m.name(z)).collect()
}

#[derive(Serialize)]
struct AssociativityOut<'a> {
    triple: [&'a str; 3],
    left_grouped: Vec<&'a str>,
    right_grouped: Vec<&'a str>,
}

#[derive(Serialize)]
struct AxiomOut<'a> {
    hypergroup: bool,
    associative: bool,
    reproductive: bool,
    all_products_nonempty: bool,
    associativity_witness: Option<AssociativityOut<'a>>,
    reproductivity_witness: Option<&'a str>,
    empty_product_witness: Option<[&'a str; 2]>,
}

pub fn axiom_report(m: &Multistructure, r: &AxiomReport) -> String {
    to_json(&AxiomOut {
        hypergroup: r.is_hypergroup(),
        associative: r.associative,
        reproductive: r.reproductive,
        all_products_nonempty: r.all_products_nonempty,
        associativity_witness: r.associativity_witness.map(|w| AssociativityOut {
            triple: [m.name(w.triple.0), m.name(w.triple.1), m.name(w.triple.2)],
            left_grouped: set_names(m, w.left_grouped),
            right_grouped: set_names(m, w.right_grouped),
        }),
        reproductivity_witness: r.reproductivity_witness.map(|x| m.name(x)),
        empty_product_witness: r.empty_product_witness.map(|(x, y)| [m.name(x), m.name(y)]),
    })
}

#[derive(Serialize)]
struct SimplicityOut<'a> {
    simple: bool,
    congruences: usize,
    partitions_examined: u128,
    witness: Option<Vec<Vec<&'a str>>>,
}

pub fn simplicity(m: &Multistructure, v: &SimplicityVerdict) -> String {
    to_json(&SimplicityOut {
        simple: v.simple,
        congruences: v.congruences,
        partitions_examined: v.partitions_examined,
        witness: v
            .witness
            .as_ref()
            .map(|blocks| blocks.iter().map(|b| b.iter().map(|&x| m.name(x)).collect()).collect()),
    })
}

#[derive(Serialize)]
struct CosetOut<'a> {
    simple: bool,
    invariant_subgroups: usize,
    subgroups: Vec<Vec<&'a str>>,
}

pub fn coset_simplicity(g: &GroupTable, simple: bool, inv: &[Subgroup]) -> String {
    to_json(&CosetOut {
        simple,
        invariant_subgroups: inv.len(),
        subgroups: inv
            .iter()
            .map(|k| k.members().into_iter().map(|x| g.names()[x].as_str()).collect())
            .collect(),
    })
}

/// `{"a0":"b3",...}` keyed in carrier order of the first structure.
pub fn bijection(a: &Multistructure, b: &Multistructure, g: &[usize]) -> String {
    let mut out = String::from("{");
    for (x, &y) in g.iter().enumerate() {
        if x > 0 {
            out.push(',');
        }
        out.push_str(&to_json(&a.name(x)));
        out.push(':');
        out.push_str(&to_json(&b.name(y)));
    }
    out.push('}');
    out
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WitnessOut<'a> {
    Associativity {
        triple: [&'a str; 3],
        right_grouped: Vec<&'a str>,
        left_grouped: Vec<&'a str>,
    },
    EmptyProduct {
        pair: [&'a str; 2],
    },
    Equipotence {
        e: &'a str,
        a: &'a str,
        y: &'a str,
    },
}

#[derive(Serialize)]
struct ClassOut<'a> {
    class: u8,
    name: &'static str,
    witness: Option<WitnessOut<'a>>,
}

pub fn classification(m: &Multistructure, c: &SFamilyClassification) -> String {
    let (class, name) = match c.class {
        SFamilyClass::DHypergroup => (1, "DHypergroup"),
        SFamilyClass::HypergroupNotD => (2, "HypergroupNotD"),
        SFamilyClass::EmptyProduct => (3, "EmptyProduct"),
        SFamilyClass::NotAssociative => (4, "NotAssociative"),
    };
    let witness = c.witness.as_ref().map(|w| match *w {
        SFamilyWitness::Associativity { triple: (x, y, z), right_grouped, left_grouped } => {
            WitnessOut::Associativity {
                triple: [m.name(x), m.name(y), m.name(z)],
                right_grouped: set_names(m, right_grouped),
                left_grouped: set_names(m, left_grouped),
            }
        }
        SFamilyWitness::EmptyProduct { pair: (x, y) } => WitnessOut::EmptyProduct {
            pair: [m.name(x), m.name(y)],
        },
        SFamilyWitness::Equipotence { e, a, y } => WitnessOut::Equipotence {
            e: m.name(e),
            a: m.name(a),
            y: m.name(y),
        },
    });
    to_json(&ClassOut { class, name, witness })
}

/// Name of each class of the trame's equivalence: its least member.
fn class_names(p: &Presentation) -> Vec<&str> {
    p.r.blocks().iter().map(|b| p.trame.names()[b[0]].as_str()).collect()
}

#[derive(Serialize)]
struct AdequacyOut<'a> {
    adequate: bool,
    reproductive: bool,
    associative: bool,
    reproductivity_witness: Option<[&'a str; 2]>,
    associativity_witness: Option<[&'a str; 4]>,
}

pub fn adequacy(p: &Presentation, r: &AdequacyReport) -> String {
    let names = class_names(p);
    to_json(&AdequacyOut {
        adequate: r.is_adequate(),
        reproductive: r.reproductive,
        associative: r.associative,
        reproductivity_witness: r.reproductivity_witness.map(|(x, y)| [names[x], names[y]]),
        associativity_witness: r
            .associativity_witness
            .map(|(x, y, z, u)| [names[x], names[y], names[z], names[u]]),
    })
}

#[derive(Serialize)]
struct InvarianceOut<'a> {
    invariant: bool,
    contains_r: bool,
    pair_condition: bool,
    saturated: bool,
    witness: Option<[&'a str; 2]>,
}

pub fn invariance(p: &Presentation, r: &InvarianceReport) -> String {
    let names = class_names(p);
    to_json(&InvarianceOut {
        invariant: r.holds(),
        contains_r: r.contains_r,
        pair_condition: r.pair_condition,
        saturated: r.saturated,
        witness: r.witness.map(|(x, y)| [names[x], names[y]]),
    })
}

