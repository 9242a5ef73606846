//! JSON interchange for permutation groups:
//! `{"degree": n, "generators": [[1-based images], ...], "name": "..."}`,
//! with optional designated subgroups by generator indices or explicit
//! permutation lists.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::group::{PermGroup, PermSet};
use super::perm::Perm;

#[derive(Serialize, Deserialize)]
struct RawGroup {
    degree: usize,
    generators: Vec<Vec<usize>>,
    #[serde(default)]
    name: String,
    #[serde(default)]
    subgroups: Vec<RawSubgroup>,
}

#[derive(Serialize, Deserialize)]
struct RawSubgroup {
    name: String,
    /// indices into `generators`
    #[serde(default)]
    generator_indices: Vec<usize>,
    /// or explicit 1-based image lists
    #[serde(default)]
    perms: Vec<Vec<usize>>,
}

fn perm_from_one_based(degree: usize, images: &[usize]) -> Result<Perm> {
    if images.len() != degree {
        return Err(Error::Parse(format!(
            "image list has length {}, degree is {degree}",
            images.len()
        )));
    }
    let zero_based: Vec<u8> = images
        .iter()
        .map(|&i| {
            if (1..=degree).contains(&i) {
                Ok((i - 1) as u8)
            } else {
                Err(Error::Parse(format!("point {i} out of range 1..={degree}")))
            }
        })
        .collect::<Result<_>>()?;
    Perm::from_images(zero_based)
}

pub struct GroupFile {
    pub group: PermGroup,
    pub subgroups: Vec<(String, PermSet)>,
}

pub fn group_from_json(text: &str) -> Result<GroupFile> {
    let raw: RawGroup = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let gens: Vec<Perm> = raw
        .generators
        .iter()
        .map(|im| perm_from_one_based(raw.degree, im))
        .collect::<Result<_>>()?;
    let name = if raw.name.is_empty() { "G" } else { &raw.name };
    let group = PermGroup::new(name, raw.degree, gens.clone())?;
    let mut subgroups = Vec::new();
    for sub in &raw.subgroups {
        let mut seeds: Vec<Perm> = Vec::new();
        for &i in &sub.generator_indices {
            seeds.push(
                gens.get(i)
                    .cloned()
                    .ok_or_else(|| Error::Parse(format!("generator index {i} out of range")))?,
            );
        }
        for im in &sub.perms {
            seeds.push(perm_from_one_based(raw.degree, im)?);
        }
        subgroups.push((sub.name.clone(), PermSet::closure(raw.degree, &seeds)));
    }
    Ok(GroupFile { group, subgroups })
}

pub fn group_to_json(g: &PermGroup) -> String {
    let raw = RawGroup {
        degree: g.degree(),
        generators: g
            .generators()
            .iter()
            .map(|p| (0..g.degree()).map(|i| p.apply(i) + 1).collect())
            .collect(),
        name: g.name().to_string(),
        subgroups: Vec::new(),
    };
    serde_json::to_string_pretty(&raw).expect("group serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_s4() {
        let g = super::super::group::symmetric4();
        let text = group_to_json(&g);
        let back = group_from_json(&text).unwrap();
        assert_eq!(back.group.order(), 24);
        assert_eq!(back.group.degree(), 4);
    }

    #[test]
    fn parses_subgroup_designations() {
        let text = r#"{
            "degree": 4,
            "name": "S4",
            "generators": [[2, 3, 4, 1], [2, 1, 3, 4]],
            "subgroups": [
                {"name": "rot", "generator_indices": [0]},
                {"name": "four", "perms": [[2, 1, 4, 3], [3, 4, 1, 2]]}
            ]
        }"#;
        let file = group_from_json(text).unwrap();
        assert_eq!(file.group.order(), 24);
        assert_eq!(file.subgroups[0].1.order(), 4);
        assert_eq!(file.subgroups[1].1.order(), 4);
    }

    #[test]
    fn rejects_bad_points() {
        assert!(group_from_json(r#"{"degree": 3, "generators": [[0, 1, 2]]}"#).is_err());
        assert!(group_from_json(r#"{"degree": 3, "generators": [[1, 1, 2]]}"#).is_err());
    }
}
