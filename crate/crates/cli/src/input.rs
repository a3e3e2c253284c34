use std::collections::BTreeMap;
use std::io::Read;

use hypergroup_core::format::{group_from_json, multistructure_from_json, parse_trame};
use hypergroup_core::groups::{
    alternating_subgroup, cyclic_group, dihedral_group, stabilizer_subgroup, symmetric_group,
};
use hypergroup_core::presentations::{Presentation, Trame};
use hypergroup_core::{EquivalenceRelation, Error, GroupTable, Hypergroup, Multistructure, Result, Subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reads a path, or standard input for `-`.
pub fn read_text(path: &str) -> Result<String> {
    let mut text = String::new();
    let outcome = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    outcome.map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

pub fn read_multistructure(path: &str) -> Result<Multistructure> {
    multistructure_from_json(&read_text(path)?)
}

pub fn read_hypergroup(path: &str) -> Result<Hypergroup> {
    Hypergroup::new(read_multistructure(path)?)
}

pub fn read_trame(path: &str) -> Result<Presentation> {
    parse_trame(&read_text(path)?)
}

fn order_arg(spec: &str, value: &str) -> Result<usize> {
    value
        .parse()
        .map_err(|_| Error::Parse(format!("bad order in group {spec:?}")))
}

/// `sym:M`, `cyc:M`, `dih:M`, or a file holding group JSON or a univalent multistructure.
pub fn parse_group(spec: &str, cap: usize) -> Result<GroupTable> {
    if let Some((kind, m)) = spec.split_once(':') {
        match kind {
            "sym" => return symmetric_group(order_arg(spec, m)?, cap),
            "cyc" => return cyclic_group(order_arg(spec, m)?),
            "dih" => return dihedral_group(order_arg(spec, m)?),
            _ => {}
        }
    }
    let text = read_text(spec)?;
    if let Ok(g) = group_from_json(&text) {
        return Ok(g);
    }
    let m = multistructure_from_json(&text)?;
    let rows = m
        .rows()
        .map(|row| {
            row.iter()
                .map(|s| s.as_singleton())
                .collect::<Option<Vec<usize>>>()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NotAGroup("some product is not a single element".into()))?;
    GroupTable::verify(m.names().to_vec(), rows).map_err(|v| Error::NotAGroup(v.to_string()))
}

pub fn resolve_element(names: &[String], token: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == token)
        .or_else(|| token.parse::<usize>().ok().filter(|&i| i < names.len()))
        .ok_or_else(|| Error::Parse(format!("unknown element {token:?}")))
}

/// `stab:P`, `alt`, `trivial`, `all`, or an explicit member list `{0,1,5}`.
pub fn parse_subgroup(g: &GroupTable, spec: &str) -> Result<Subgroup> {
    match spec {
        "alt" => return alternating_subgroup(g),
        "trivial" => return Ok(g.trivial_subgroup()),
        "all" => return Ok(g.whole()),
        _ => {}
    }
    if let Some(point) = spec.strip_prefix("stab:") {
        let point = point
            .parse()
            .map_err(|_| Error::Parse(format!("bad point in {spec:?}")))?;
        return stabilizer_subgroup(g, point);
    }
    let body = spec
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("bad subgroup {spec:?}")))?;
    let members = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| resolve_element(g.names(), t))
        .collect::<Result<Vec<_>>>()?;
    Subgroup::new(g, members)
}

/// Elements `t0..`, each pair composable with probability `density`, and a random partition.
pub fn random_trame(t: usize, density: f64, seed: u64) -> Result<Presentation> {
    if t == 0 || !(0.0..=1.0).contains(&density) {
        return Err(Error::Precondition("need t >= 1 and density in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut op = BTreeMap::new();
    for u in 0..t {
        for v in 0..t {
            if rng.gen_bool(density) {
                op.insert((u, v), rng.gen_range(0..t));
            }
        }
    }
    let k = rng.gen_range(1..=t);
    let labels: Vec<usize> = (0..t).map(|_| rng.gen_range(0..k)).collect();
    let names = (0..t).map(|i| format!("t{i}")).collect();
    Presentation::new(Trame::new(names, op)?, EquivalenceRelation::from_labels(&labels))
}

