//! Registry of reconstructed named graphs.
//!
//! The lettered admissible graphs are published as drawings plus spectra;
//! only the spectra survive in our source, so the graphs are recovered by
//! exhaustive spectral search and frozen into a data file. The registry
//! maps letter names (and the parameterized reconstructions Y1/Y2/E) to
//! their mixed graphs.

use crate::error::SearchError;
use crate::graph::MixedGraph;
use crate::poly::{poly_from_cosine_multiset, IntPolynomial};
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::Path;

/// Facts pinning down one lettered graph: order, size, exact spectrum, and
/// the sorted multiset of its simple cycle lengths (empty for trees).
#[derive(Debug, Clone, Copy)]
pub struct LetterSpec {
    pub name: &'static str,
    pub order: usize,
    pub size: usize,
    pub cycles: &'static [usize],
    /// Spectrum as 2cos(p pi / q) entries.
    pub entries: &'static [(u64, u64)],
}

/// The fourteen lettered admissible graphs with their published spectra.
pub const LETTERS: &[LetterSpec] = &[
    LetterSpec {
        name: "o",
        order: 6,
        size: 6,
        cycles: &[4],
        entries: &[(1, 9), (2, 9), (4, 9), (5, 9), (7, 9), (8, 9)],
    },
    LetterSpec {
        name: "p",
        order: 7,
        size: 7,
        cycles: &[4],
        entries: &[(1, 14), (3, 14), (5, 14), (7, 14), (9, 14), (11, 14), (13, 14)],
    },
    LetterSpec {
        name: "q",
        order: 8,
        size: 8,
        cycles: &[4],
        entries: &[
            (1, 24),
            (5, 24),
            (7, 24),
            (11, 24),
            (13, 24),
            (17, 24),
            (19, 24),
            (23, 24),
        ],
    },
    LetterSpec {
        name: "r",
        order: 7,
        size: 7,
        cycles: &[4],
        entries: &[
            (1, 12),
            (2, 12),
            (5, 12),
            (6, 12),
            (7, 12),
            (10, 12),
            (11, 12),
        ],
    },
    LetterSpec {
        name: "g",
        order: 7,
        size: 7,
        cycles: &[6],
        entries: &[
            (1, 12),
            (2, 12),
            (5, 12),
            (6, 12),
            (7, 12),
            (10, 12),
            (11, 12),
        ],
    },
    LetterSpec {
        name: "s",
        order: 8,
        size: 8,
        cycles: &[4],
        entries: &[
            (1, 20),
            (3, 20),
            (7, 20),
            (9, 20),
            (11, 20),
            (13, 20),
            (17, 20),
            (19, 20),
        ],
    },
    LetterSpec {
        name: "t",
        order: 7,
        size: 8,
        cycles: &[4, 4, 6],
        entries: &[(1, 10), (1, 6), (3, 10), (5, 10), (7, 10), (5, 6), (9, 10)],
    },
    LetterSpec {
        name: "u",
        order: 8,
        size: 9,
        cycles: &[4, 4, 6],
        entries: &[
            (1, 15),
            (2, 15),
            (4, 15),
            (7, 15),
            (8, 15),
            (11, 15),
            (13, 15),
            (14, 15),
        ],
    },
    LetterSpec {
        name: "h",
        order: 8,
        size: 9,
        cycles: &[4, 6, 8],
        entries: &[
            (1, 15),
            (2, 15),
            (4, 15),
            (7, 15),
            (8, 15),
            (11, 15),
            (13, 15),
            (14, 15),
        ],
    },
    LetterSpec {
        name: "k",
        order: 4,
        size: 4,
        cycles: &[3],
        entries: &[(1, 12), (5, 12), (7, 12), (11, 12)],
    },
    LetterSpec {
        name: "v",
        order: 8,
        size: 9,
        cycles: &[4, 4, 6],
        entries: &[
            (1, 18),
            (3, 18),
            (5, 18),
            (7, 18),
            (11, 18),
            (13, 18),
            (15, 18),
            (17, 18),
        ],
    },
    LetterSpec {
        name: "y",
        order: 6,
        size: 5,
        cycles: &[],
        entries: &[(1, 12), (4, 12), (5, 12), (7, 12), (8, 12), (11, 12)],
    },
    LetterSpec {
        name: "z",
        order: 8,
        size: 7,
        cycles: &[],
        entries: &[
            (1, 30),
            (7, 30),
            (11, 30),
            (13, 30),
            (17, 30),
            (19, 30),
            (23, 30),
            (29, 30),
        ],
    },
    LetterSpec {
        name: "w",
        order: 7,
        size: 6,
        cycles: &[],
        entries: &[(1, 18), (5, 18), (7, 18), (9, 18), (11, 18), (13, 18), (17, 18)],
    },
];

pub fn letter_spec(name: &str) -> Option<&'static LetterSpec> {
    LETTERS.iter().find(|l| l.name == name)
}

/// Exact characteristic polynomial of a lettered graph, straight from its
/// published cosine spectrum.
pub fn letter_poly(name: &str) -> Option<IntPolynomial> {
    let spec = letter_spec(name)?;
    let poly = poly_from_cosine_multiset(spec.entries)
        .expect("published letter spectra are Galois-closed");
    Some(poly)
}

/// A store of named reconstructed graphs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Registry {
    graphs: BTreeMap<String, MixedGraph>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    /// The registry frozen into the crate at build time.
    pub fn frozen() -> Registry {
        static DATA: &str = include_str!("../data/registry.json");
        let value: Value = serde_json::from_str(DATA).expect("frozen registry parses");
        Registry::from_json(&value).expect("frozen registry is valid")
    }

    pub fn insert(&mut self, name: &str, g: MixedGraph) {
        self.graphs.insert(name.to_string(), g);
    }

    pub fn get(&self, name: &str) -> Result<&MixedGraph, SearchError> {
        self.graphs
            .get(name)
            .ok_or_else(|| SearchError::MissingRegistryEntry(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.graphs.contains_key(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.graphs.keys().map(|s| s.as_str())
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .graphs
            .iter()
            .map(|(k, g)| (k.clone(), g.to_json()))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Registry, SearchError> {
        let obj = v.as_object().ok_or_else(|| {
            SearchError::Graph(crate::error::GraphError::Parse(
                "registry must be a JSON object".into(),
            ))
        })?;
        let mut reg = Registry::new();
        for (name, gv) in obj {
            let g = MixedGraph::from_json(gv).map_err(SearchError::Graph)?;
            reg.insert(name, g);
        }
        Ok(reg)
    }

    pub fn load(path: &Path) -> Result<Registry, SearchError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            SearchError::Graph(crate::error::GraphError::Parse(format!(
                "cannot read registry {}: {e}",
                path.display()
            )))
        })?;
        let value: Value = serde_json::from_str(&text).map_err(|e| {
            SearchError::Graph(crate::error::GraphError::Parse(format!(
                "registry JSON: {e}"
            )))
        })?;
        Registry::from_json(&value)
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(&self.to_json()).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::cycle_type1_poly;

    #[test]
    fn letter_polys_are_integral_and_monic() {
        for spec in LETTERS {
            let poly = letter_poly(spec.name).unwrap();
            assert_eq!(poly.degree(), spec.order, "letter {}", spec.name);
            assert!(poly.is_monic());
        }
    }

    #[test]
    fn cospectral_letter_pairs() {
        assert_eq!(letter_poly("g"), letter_poly("r"));
        assert_eq!(letter_poly("h"), letter_poly("u"));
        assert_ne!(letter_poly("o"), letter_poly("t"));
    }

    #[test]
    fn letter_identities_with_cycles() {
        // The order-7 letter p shares the one-arc 7-cycle's polynomial.
        assert_eq!(letter_poly("p").unwrap(), cycle_type1_poly(7));
        // z times t gives the one-arc 15-cycle.
        assert_eq!(
            letter_poly("z").unwrap().mul(&letter_poly("t").unwrap()),
            cycle_type1_poly(15)
        );
        // v times x gives the one-arc 9-cycle.
        assert_eq!(
            letter_poly("v").unwrap().mul(&IntPolynomial::x()),
            cycle_type1_poly(9)
        );
    }
}
