//! Power-commutator presentations of finite 2-groups.
//!
//! Generators are ordered; the right-hand side of every power relation
//! `g_i^2 = w` uses only generators of index `< i`, and the right-hand side of
//! every commutator relation `[g_j, g_i] = w` (for `j > i`) uses only
//! generators of index `< j`. This makes `<g_0, ..., g_{k-1}>` an ascending
//! chain of subgroups, each normal in the next, so the group can be built one
//! cyclic extension at a time and every element has a unique normal form
//! `g_0^{e_0} ... g_{n-1}^{e_{n-1}}` with exponents 0 or 1.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::{Error, Result};

/// A word in the generators: a sequence of generator indices. Empty = identity.
pub type Word = Vec<usize>;

/// Largest number of generators accepted (group order at most 2^12).
pub const MAX_GENERATORS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcPresentation {
    names: Vec<String>,
    /// `powers[i]` is the normal-form word for `g_i^2`.
    powers: Vec<Word>,
    /// `commutators[j][i]` (for `i < j`) is the word for `[g_j, g_i]`.
    commutators: Vec<Vec<Word>>,
}

#[derive(Deserialize)]
struct RawPresentation {
    generators: Vec<String>,
    #[serde(default)]
    powers: BTreeMap<String, String>,
    #[serde(default)]
    commutators: BTreeMap<String, String>,
}

impl PcPresentation {
    /// Build a presentation from named relations. `powers` maps a generator to
    /// the word for its square; `commutators` holds `(gj, gi, word)` triples
    /// with `gj` of larger index. Omitted squares are trivial, omitted
    /// commutators mean the pair commutes. Words are `*`-separated generator
    /// names; the empty string is the identity.
    pub fn from_relations(
        names: &[&str],
        powers: &[(&str, &str)],
        commutators: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let n = names.len();
        if n > MAX_GENERATORS {
            return Err(Error::TooLarge(format!(
                "{n} generators exceeds the {MAX_GENERATORS}-generator bound"
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if name.is_empty() || name.contains(['*', '[', ']', ',']) || !seen.insert(name) {
                return Err(Error::InvalidPresentation(format!(
                    "bad generator name {name:?}"
                )));
            }
        }
        let mut pres = PcPresentation {
            powers: vec![Vec::new(); n],
            commutators: (0..n).map(|j| vec![Vec::new(); j]).collect(),
            names,
        };
        for (g, w) in powers {
            let i = pres.index_of(g)?;
            pres.powers[i] = pres.parse_word(w)?;
        }
        for (gj, gi, w) in commutators {
            let j = pres.index_of(gj)?;
            let i = pres.index_of(gi)?;
            if j <= i {
                return Err(Error::InvalidPresentation(format!(
                    "commutator [{gj},{gi}] must have the higher-index generator first"
                )));
            }
            pres.commutators[j][i] = pres.parse_word(w)?;
        }
        pres.validate()?;
        Ok(pres)
    }

    /// Parse the JSON interchange form:
    /// `{"generators": [...], "powers": {"g": "w"}, "commutators": {"[gj,gi]": "w"}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawPresentation =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut powers = Vec::new();
        let mut comms = Vec::new();
        for (g, w) in &raw.powers {
            powers.push((g.as_str(), w.as_str()));
        }
        for (key, w) in &raw.commutators {
            let inner = key
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("commutator key {key:?} is not [gj,gi]")))?;
            let (gj, gi) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("commutator key {key:?} is not [gj,gi]")))?;
            comms.push((gj.trim(), gi.trim(), w.as_str()));
        }
        let names: Vec<&str> = raw.generators.iter().map(|s| s.as_str()).collect();
        Self::from_relations(&names, &powers, &comms)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))
    }

    pub fn power_word(&self, i: usize) -> &Word {
        &self.powers[i]
    }

    pub fn commutator_word(&self, j: usize, i: usize) -> &Word {
        &self.commutators[j][i]
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        text.split('*')
            .map(|part| self.index_of(part.trim()))
            .collect()
    }

    pub fn word_to_string(&self, word: &Word) -> String {
        if word.is_empty() {
            String::new()
        } else {
            word.iter()
                .map(|&i| self.names[i].as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Weighted-ordering check: power words stay strictly below their
    /// generator, commutator words stay below the higher generator.
    fn validate(&self) -> Result<()> {
        for (i, w) in self.powers.iter().enumerate() {
            if w.iter().any(|&l| l >= i) {
                return Err(Error::InvalidPresentation(format!(
                    "square of {} must be a word in earlier generators",
                    self.names[i]
                )));
            }
        }
        for (j, row) in self.commutators.iter().enumerate() {
            for (i, w) in row.iter().enumerate() {
                if w.iter().any(|&l| l >= j) {
                    return Err(Error::InvalidPresentation(format!(
                        "[{},{}] must be a word in generators below {}",
                        self.names[j], self.names[i], self.names[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Concatenate two presentations with trivial cross-commutators. Name
    /// collisions on the right-hand factor are disambiguated with `'`.
    pub fn direct_product(&self, other: &PcPresentation) -> Result<PcPresentation> {
        let n1 = self.generator_count();
        let n2 = other.generator_count();
        if n1 + n2 > MAX_GENERATORS {
            return Err(Error::TooLarge(format!(
                "product would need {} generators (bound {MAX_GENERATORS})",
                n1 + n2
            )));
        }
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let shift = |w: &Word| -> Word { w.iter().map(|&l| l + n1).collect() };
        let mut powers = self.powers.clone();
        powers.extend(other.powers.iter().map(&shift));
        let mut commutators = self.commutators.clone();
        for j in 0..n2 {
            let mut row = vec![Vec::new(); n1]; // cross pairs commute
            row.extend(other.commutators[j].iter().map(&shift));
            commutators.push(row);
        }
        Ok(PcPresentation {
            names,
            powers,
            commutators,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_json_form() {
        let pres = PcPresentation::from_json(
            r#"{"generators": ["t1", "a1", "b1"],
                "powers": {"t1": ""},
                "commutators": {"[b1,a1]": "t1"}}"#,
        )
        .unwrap();
        assert_eq!(pres.generator_count(), 3);
        assert_eq!(pres.commutator_word(2, 1), &vec![0]);
        assert_eq!(pres.commutator_word(1, 0), &Vec::<usize>::new());
    }

    #[test]
    fn rejects_unordered_relations() {
        // square of the first generator may not mention a later one
        let err = PcPresentation::from_relations(&["a", "b"], &[("a", "b")], &[]);
        assert!(matches!(err, Err(Error::InvalidPresentation(_))));
        let err = PcPresentation::from_relations(&["a", "b"], &[], &[("a", "b", "")]);
        assert!(matches!(err, Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn direct_product_renames_collisions() {
        let c2 = PcPresentation::from_relations(&["x"], &[], &[]).unwrap();
        let prod = c2.direct_product(&c2).unwrap();
        assert_eq!(prod.names(), &["x".to_string(), "x'".to_string()]);
    }
}
