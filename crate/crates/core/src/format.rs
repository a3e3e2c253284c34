//! Text formats: multistructure and group JSON, the trame DSL, and class literals.
//!
//! Multistructures are written as `{"elements":[...],"table":[[[...],...],...]}` with each
//! product listed by element name in carrier order. Groups use
//! `{"group":"table","elements":[...],"table":[[j,...],...]}` with entries as indices.
//!
//! A trame file looks like
//!
//! ```text
//! # comment
//! elements: t0 t1 t2
//! compose: t0 t1 -> t2
//! classes: {t0 t1} {t2}
//! ```

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::GroupTable;
use crate::multistructure::Multistructure;
use crate::partition::EquivalenceRelation;
use crate::presentations::{Presentation, Trame};
use crate::subset::Subset;

#[derive(Serialize)]
struct MultistructureOut<'a> {
    elements: &'a [String],
    table: Vec<Vec<Vec<&'a str>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MultistructureIn {
    elements: Vec<String>,
    table: Vec<Vec<Vec<String>>>,
}

pub fn multistructure_to_json(m: &Multistructure) -> String {
    let out = MultistructureOut {
        elements: m.names(),
        table: m
            .rows()
            .map(|row| row.iter().map(|s| s.iter().map(|z| m.name(z)).collect()).collect())
            .collect(),
    };
    serde_json::to_string(&out).expect("serializing strings cannot fail")
}

fn name_index(names: &[String]) -> Result<HashMap<&str, usize>> {
    let mut index = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(Error::Parse(format!("duplicate element name {name:?}")));
        }
    }
    Ok(index)
}

pub fn multistructure_from_json(text: &str) -> Result<Multistructure> {
    let input: MultistructureIn = serde_json::from_str(text)?;
    let index = name_index(&input.elements)?;
    let n = input.elements.len();
    if input.table.len() != n {
        return Err(Error::Parse(format!("table has {} rows, expected {n}", input.table.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in input.table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Parse(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        let mut parsed = Vec::with_capacity(n);
        for cell in row {
            let mut set = Subset::EMPTY;
            for name in cell {
                let &z = index
                    .get(name.as_str())
                    .ok_or_else(|| Error::Parse(format!("unknown element {name:?} in row {i}")))?;
                set.insert(z);
            }
            parsed.push(set);
        }
        rows.push(parsed);
    }
    Multistructure::new(input.elements, rows)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    group: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
}

pub fn group_to_json(g: &GroupTable) -> String {
    let out = GroupJson {
        group: "table".into(),
        elements: g.names().to_vec(),
        table: g.rows().map(<[usize]>::to_vec).collect(),
    };
    serde_json::to_string(&out).expect("serializing strings cannot fail")
}

pub fn group_from_json(text: &str) -> Result<GroupTable> {
    let input: GroupJson = serde_json::from_str(text)?;
    if input.group != "table" {
        return Err(Error::Parse(format!("unsupported group kind {:?}", input.group)));
    }
    name_index(&input.elements)?;
    if input.table.len() != input.elements.len() {
        return Err(Error::Parse("table size does not match elements".into()));
    }
    GroupTable::verify(input.elements, input.table).map_err(|v| Error::NotAGroup(v.to_string()))
}

fn resolve(token: &str, index: &HashMap<&str, usize>, n: usize) -> Option<usize> {
    index
        .get(token)
        .copied()
        .or_else(|| token.parse::<usize>().ok().filter(|&i| i < n))
}

/// Splits `{a,b}|{c}` or `{a b} {c}` into member tokens per block.
fn split_blocks(text: &str) -> std::result::Result<Vec<Vec<&str>>, String> {
    let mut blocks = Vec::new();
    let mut rest = text.trim();
    loop {
        rest = rest.trim_start_matches(|c: char| c == '|' || c.is_whitespace());
        if rest.is_empty() {
            return Ok(blocks);
        }
        let body = rest
            .strip_prefix('{')
            .ok_or_else(|| format!("expected '{{' at {rest:?}"))?;
        let close = body.find('}').ok_or("unterminated class")?;
        blocks.push(
            body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect(),
        );
        rest = &body[close + 1..];
    }
}

/// Parses `{0}|{1,4,7}|{2,3,5,6}` or `{a b} {c}`. Members are element names, or indices when
/// no element carries that name; every element must appear exactly once.
pub fn parse_classes(text: &str, names: &[String]) -> Result<EquivalenceRelation> {
    let index = name_index(names)?;
    let n = names.len();
    let mut blocks = Vec::new();
    for tokens in split_blocks(text).map_err(Error::Parse)? {
        let block = tokens
            .into_iter()
            .map(|t| resolve(t, &index, n).ok_or_else(|| Error::Parse(format!("unknown element {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        blocks.push(block);
    }
    EquivalenceRelation::from_blocks(n, &blocks)
}

pub fn format_classes(eq: &EquivalenceRelation, names: &[String]) -> String {
    eq.blocks()
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(|&x| names[x].as_str()).collect::<Vec<_>>().join(" ")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn line_error(line: usize, msg: impl Into<String>) -> Error {
    Error::ParseLine { line, msg: msg.into() }
}

pub fn parse_trame(text: &str) -> Result<Presentation> {
    let mut names: Option<(Vec<String>, HashMap<String, usize>)> = None;
    let mut ops: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut classes: Option<EquivalenceRelation> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| line_error(line_no, "expected 'elements:', 'compose:' or 'classes:'"))?;
        match key.trim() {
            "elements" => {
                if names.is_some() {
                    return Err(line_error(line_no, "duplicate elements line"));
                }
                let list: Vec<String> = value.split_whitespace().map(String::from).collect();
                if list.is_empty() {
                    return Err(line_error(line_no, "no elements"));
                }
                let mut index = HashMap::new();
                for (j, name) in list.iter().enumerate() {
                    if name.contains(['{', '}', ',', '|']) || name == "->" {
                        return Err(line_error(line_no, format!("invalid element name {name:?}")));
                    }
                    if index.insert(name.clone(), j).is_some() {
                        return Err(line_error(line_no, format!("duplicate element {name:?}")));
                    }
                }
                names = Some((list, index));
            }
            "compose" => {
                let (_, index) = names
                    .as_ref()
                    .ok_or_else(|| line_error(line_no, "compose before elements"))?;
                let tokens: Vec<&str> = value.split_whitespace().collect();
                let [u, v, "->", w] = tokens[..] else {
                    return Err(line_error(line_no, "expected 'compose: a b -> c'"));
                };
                let look = |t: &str| {
                    index
                        .get(t)
                        .copied()
                        .ok_or_else(|| line_error(line_no, format!("unknown element {t:?}")))
                };
                let (u, v, w) = (look(u)?, look(v)?, look(w)?);
                if let Some(prev) = ops.insert((u, v), w) {
                    if prev != w {
                        return Err(line_error(line_no, "conflicting composition for the same pair"));
                    }
                }
            }
            "classes" => {
                let (list, _) = names
                    .as_ref()
                    .ok_or_else(|| line_error(line_no, "classes before elements"))?;
                if classes.is_some() {
                    return Err(line_error(line_no, "duplicate classes line"));
                }
                let eq = parse_class_names(value, list).map_err(|e| line_error(line_no, e))?;
                classes = Some(eq);
            }
            other => return Err(line_error(line_no, format!("unknown directive {other:?}"))),
        }
    }
    let last = text.lines().count().max(1);
    let (list, _) = names.ok_or_else(|| line_error(last, "missing elements line"))?;
    let r = classes.ok_or_else(|| line_error(last, "missing classes line"))?;
    Presentation::new(Trame::new(list, ops)?, r)
}

/// Class literal restricted to names, for the DSL.
fn parse_class_names(text: &str, names: &[String]) -> std::result::Result<EquivalenceRelation, String> {
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let mut blocks = Vec::new();
    for tokens in split_blocks(text)? {
        let block = tokens
            .into_iter()
            .map(|t| index.get(t).copied().ok_or(format!("unknown element {t:?}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        blocks.push(block);
    }
    let mut seen = vec![false; names.len()];
    for &x in blocks.iter().flatten() {
        if std::mem::replace(&mut seen[x], true) {
            return Err(format!("element {:?} in two classes", names[x]));
        }
    }
    if let Some(x) = seen.iter().position(|&s| !s) {
        return Err(format!("element {:?} missing from classes", names[x]));
    }
    EquivalenceRelation::from_blocks(names.len(), &blocks).map_err(|e| e.to_string())
}

pub fn print_trame(p: &Presentation) -> String {
    let names = p.trame.names();
    let mut out = format!("elements: {}\n", names.join(" "));
    for (u, v, w) in p.trame.compositions() {
        out.push_str(&format!("compose: {} {} -> {}\n", names[u], names[v], names[w]));
    }
    out.push_str(&format!("classes: {}\n", format_classes(&p.r, names)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::stabilizer_hypergroup;
    use crate::groups::{cyclic_group, symmetric_group};
    use crate::presentations::canonical_presentation;

    #[test]
    fn stabilizer_json_is_canonical() {
        let h = stabilizer_hypergroup(3).unwrap();
        assert_eq!(
            multistructure_to_json(&h),
            r#"{"elements":["e","x1","x2"],"table":[[["e"],["x1","x2"],["x1","x2"]],[["x1"],["e","x2"],["e","x2"]],[["x2"],["e","x1"],["e","x1"]]]}"#
        );
        let back = multistructure_from_json(&multistructure_to_json(&h)).unwrap();
        assert_eq!(&back, h.as_multistructure());
        assert_eq!(back.names(), h.names());
    }

    #[test]
    fn json_rejections() {
        assert!(multistructure_from_json(r#"{"elements":["a"],"table":[[["b"]]]}"#).is_err());
        assert!(multistructure_from_json(r#"{"elements":["a","b"],"table":[[["a"],["b"]],[["a"]]]}"#).is_err());
        assert!(multistructure_from_json(r#"{"elements":["a","a"],"table":[[[],[]],[[],[]]]}"#).is_err());
        assert!(multistructure_from_json(r#"{"elements":["a"],"table":[[[]]],"x":1}"#).is_err());
        assert!(multistructure_from_json("not json").is_err());
        let empty = multistructure_from_json(r#"{"elements":["a"],"table":[[[]]]}"#).unwrap();
        assert!(empty.product(0, 0).is_empty());
    }

    #[test]
    fn group_json_round_trip() {
        let g = symmetric_group(3, 120).unwrap();
        let text = group_to_json(&g);
        assert!(text.starts_with(r#"{"group":"table","elements":["012","#));
        let back = group_from_json(&text).unwrap();
        assert_eq!(back.rows().collect::<Vec<_>>(), g.rows().collect::<Vec<_>>());
        assert!(group_from_json(r#"{"group":"table","elements":["a","b"],"table":[[0,0],[0,0]]}"#).is_err());
    }

    #[test]
    fn class_literals() {
        let names: Vec<String> = cyclic_group(8).unwrap().names().to_vec();
        let eq = parse_classes("{0}|{1,4,7}|{2,3,5,6}", &names).unwrap();
        assert_eq!(eq.blocks(), vec![vec![0], vec![1, 4, 7], vec![2, 3, 5, 6]]);
        assert_eq!(parse_classes("{0} {1 4 7} {2, 3,5 6}", &names).unwrap(), eq);
        assert!(parse_classes("{0}|{1,4,7}", &names).is_err());
        assert!(parse_classes("{0,1}|{1,2,3,4,5,6,7}", &names).is_err());
        assert!(parse_classes("{0}|{1,4,7", &names).is_err());
        assert!(parse_classes("{0,1,2,3,4,5,6,9}", &names).is_err());
    }

    #[test]
    fn trame_round_trip() {
        let text = "# tiny\nelements: a b\n\ncompose: a a -> a\ncompose: a b -> b\nclasses: {a} {b}\n";
        let p = parse_trame(text).unwrap();
        assert_eq!(p.trame.composable_count(), 2);
        assert_eq!(print_trame(&p), "elements: a b\ncompose: a a -> a\ncompose: a b -> b\nclasses: {a} {b}\n");
        let c = canonical_presentation(&stabilizer_hypergroup(3).unwrap(), 65536).unwrap();
        assert_eq!(parse_trame(&print_trame(&c)).unwrap(), c);
    }

    #[test]
    fn trame_errors_carry_lines() {
        let cases = [
            ("elements: a b\ncompose: a c -> a\nclasses: {a b}", 2),
            ("elements: a b\ncompose: a a -> a\ncompose: a a -> b\nclasses: {a b}", 3),
            ("elements: a b\nclasses: {a}", 2),
            ("elements: a b\nclasses: {a} {a b}", 2),
            ("elements: a b\ncompose: a a a\nclasses: {a b}", 2),
            ("compose: a a -> a", 1),
            ("elements: a b\nfrobnicate: x\n", 2),
            ("elements: a b\ncompose: a a -> a\n", 2),
        ];
        for (text, line) in cases {
            match parse_trame(text) {
                Err(Error::ParseLine { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
