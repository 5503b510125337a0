//! JSON model formats.
//!
//! ```json
//! {"elements": ["a", "b"], "leq": [["a", "b"]]}
//! {"from_poset": {"elements": ["a", "b"], "leq": [["a", "b"]]}}
//! {"points": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]}
//! {"values": {"0": "0", "m": "1", "1": "1"}}
//! ```
//!
//! `leq` may list covers or any generating set of pairs; it is closed
//! reflexively and transitively. Output uses the same shapes, with keys and
//! lists in carrier order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::assembly::Nucleus;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::sets::birkhoff_lattice;
use crate::space::FiniteSpace;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeJson {
    FromPoset { from_poset: PosetJson },
    Order(PosetJson),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NucleusJson {
    pub values: BTreeMap<String, String>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

impl PosetJson {
    pub fn build(&self) -> Result<FinitePoset> {
        let labels: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        let pairs: Vec<(&str, &str)> = self
            .leq
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        FinitePoset::from_labeled(&labels, &pairs)
    }
}

impl LatticeJson {
    pub fn build(&self) -> Result<FiniteLattice> {
        match self {
            LatticeJson::FromPoset { from_poset } => {
                Ok(birkhoff_lattice(&from_poset.build()?)?.into_lattice())
            }
            LatticeJson::Order(order) => FiniteLattice::from_order(order.build()?),
        }
    }
}

impl SpaceJson {
    pub fn build(&self) -> Result<FiniteSpace> {
        let index = |p: &String| self.points.iter().position(|q| q == p);
        let opens = self
            .opens
            .iter()
            .map(|u| {
                u.iter()
                    .map(|p| index(p).ok_or_else(|| Error::UnknownElement(p.clone())))
                    .collect::<Result<Subset>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteSpace::new(self.points.clone(), opens)
    }
}

impl NucleusJson {
    /// Missing or unknown labels are rejected; the axioms are checked.
    pub fn build(&self, l: &FiniteLattice) -> Result<Nucleus> {
        Nucleus::new(l, self.values(l)?)
    }

    /// The raw value table, without checking the axioms.
    pub fn values(&self, l: &FiniteLattice) -> Result<Vec<usize>> {
        let find = |s: &String| {
            l.index_of(s)
                .ok_or_else(|| Error::UnknownElement(s.clone()))
        };
        for k in self.values.keys() {
            find(k)?;
        }
        l.elements()
            .map(|a| {
                let v = self.values.get(l.label(a)).ok_or_else(|| {
                    Error::Malformed(format!("no value given for `{}`", l.label(a)))
                })?;
                find(v)
            })
            .collect()
    }
}

pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    parse::<PosetJson>(text)?.build()
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice> {
    parse::<LatticeJson>(text)?.build()
}

pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    parse::<SpaceJson>(text)?.build()
}

pub fn parse_nucleus_json(text: &str) -> Result<NucleusJson> {
    parse(text)
}

pub fn parse_nucleus(text: &str, l: &FiniteLattice) -> Result<Nucleus> {
    parse_nucleus_json(text)?.build(l)
}

pub fn labels_of(set: Subset, labels: &[String]) -> Vec<String> {
    set.iter().map(|i| labels[i].clone()).collect()
}

/// A poset as its elements and Hasse covers.
pub fn poset_json(p: &FinitePoset) -> Value {
    let covers: Vec<[&str; 2]> = p
        .covers()
        .into_iter()
        .map(|(a, b)| [p.label(a), p.label(b)])
        .collect();
    json!({ "elements": p.labels(), "leq": covers })
}

pub fn lattice_json(l: &FiniteLattice) -> Value {
    poset_json(l.order())
}

pub fn space_json(s: &FiniteSpace) -> Value {
    let opens: Vec<Vec<String>> = s
        .opens()
        .iter()
        .map(|&u| labels_of(u, s.labels()))
        .collect();
    json!({ "points": s.labels(), "opens": opens })
}

pub fn nucleus_json(l: &FiniteLattice, j: &Nucleus) -> Value {
    let mut map = serde_json::Map::new();
    for (a, ja) in j.table(l) {
        map.insert(a, Value::String(ja));
    }
    json!({ "values": map })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_round_trip() {
        let p = parse_poset(r#"{"elements":["a","b","c"],"leq":[["a","b"],["b","c"]]}"#).unwrap();
        assert!(p.leq(0, 2));
        let v = poset_json(&p);
        assert_eq!(v["leq"], json!([["a", "b"], ["b", "c"]]));
        assert_eq!(parse_poset(&v.to_string()).unwrap(), p);
    }

    #[test]
    fn lattice_forms() {
        let l = parse_lattice(r#"{"elements":["0","m","1"],"leq":[["0","m"],["m","1"]]}"#).unwrap();
        assert_eq!(l.len(), 3);
        let b =
            parse_lattice(r#"{"from_poset":{"elements":["a","b"],"leq":[["a","b"]]}}"#).unwrap();
        assert_eq!(b.labels(), ["{}", "{b}", "{a,b}"]);
        assert!(matches!(parse_lattice("{"), Err(Error::Malformed(_))));
        let m3 = r#"{"elements":["0","a","b","c","1"],"leq":[["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]}"#;
        assert!(matches!(
            parse_lattice(m3),
            Err(Error::NotDistributive { .. })
        ));
    }

    #[test]
    fn space_and_nucleus() {
        let s = parse_space(r#"{"points":["0","1"],"opens":[[],["1"],["0","1"]]}"#).unwrap();
        assert_eq!(s, FiniteSpace::sierpinski());
        assert_eq!(space_json(&s)["opens"], json!([[], ["1"], ["0", "1"]]));
        assert!(parse_space(r#"{"points":["0","1"],"opens":[["1"]]}"#).is_err());

        let l = FiniteLattice::chain(3);
        let j = parse_nucleus(r#"{"values":{"0":"0","1":"2","2":"2"}}"#, &l).unwrap();
        assert_eq!(j.values(), [0, 2, 2]);
        assert_eq!(
            nucleus_json(&l, &j),
            json!({"values": {"0": "0", "1": "2", "2": "2"}})
        );
        assert!(matches!(
            parse_nucleus(r#"{"values":{"0":"2","1":"1","2":"2"}}"#, &l),
            Err(Error::InvalidNucleus(_))
        ));
        assert!(parse_nucleus(r#"{"values":{"0":"0"}}"#, &l).is_err());
    }
}
