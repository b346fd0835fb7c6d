//! Alphabet spec files, word parsing, and DOT / JSON export.
//!
//! An alphabet spec is a JSON object:
//!
//! ```json
//! {"letters": ["pi", "eta", "phi"],
//!  "relations": [["pi", "eta"], ["eta", "phi"]],
//!  "auxiliary": "eta",
//!  "construction": null}
//! ```
//!
//! Without a construction, `auxiliary` names a letter of the poset itself.
//! With one, the letters describe the alphabet being augmented and the
//! construction names the new auxiliary letter:
//!
//! | kind         | parameters                                  |
//! |--------------|---------------------------------------------|
//! | `custom`     | `aux`, `below`, `above`                     |
//! | `raising`    | `aux`                                       |
//! | `trivial`    | `aux`                                       |
//! | `span`       | `aux`                                       |
//! | `partition`  | `aux`, `bar`                                |
//! | `chron-join` | `aux`, `b_side` (letters forming the upper poset) |

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::augment::Augmentation;
use crate::error::{Error, Result};
use crate::graph::WordPosetGraph;
use crate::order::{AlignmentWitness, Word};
use crate::poset::{Letter, Poset};
use crate::table::RelationTable;

/// Command-line spelling of the empty word.
pub const EMPTY_WORD_INPUT: &str = "@";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    Custom,
    Raising,
    Trivial,
    Span,
    Partition,
    ChronJoin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Construction {
    pub kind: ConstructionKind,
    #[serde(default)]
    pub aux: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub below: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub above: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bar: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_side: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphabetSpec {
    pub letters: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
    #[serde(default)]
    pub auxiliary: Option<String>,
    #[serde(default)]
    pub construction: Option<Construction>,
}

fn invalid(message: impl Into<String>) -> Error {
    Error::Validation(message.into())
}

pub fn parse_alphabet_spec(text: &str) -> Result<AlphabetSpec> {
    let spec: AlphabetSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    spec.validate()?;
    Ok(spec)
}

impl AlphabetSpec {
    fn validate(&self) -> Result<()> {
        let mut names = HashSet::new();
        for name in &self.letters {
            Letter::new(name.as_str()).map_err(|e| invalid(e.to_string()))?;
            if !names.insert(name.as_str()) {
                return Err(invalid(format!("duplicate letter {name:?}")));
            }
        }
        let known = |name: &str| -> Result<()> {
            if names.contains(name) {
                Ok(())
            } else {
                Err(invalid(format!("unknown letter {name:?}")))
            }
        };
        for (x, y) in &self.relations {
            known(x)?;
            known(y)?;
        }
        let Some(construction) = &self.construction else {
            if let Some(aux) = &self.auxiliary {
                known(aux)?;
            }
            return Ok(());
        };
        let aux = construction
            .aux
            .as_deref()
            .ok_or_else(|| invalid("construction requires \"aux\""))?;
        if let Some(declared) = &self.auxiliary {
            if declared != aux {
                return Err(invalid(format!(
                    "auxiliary {declared:?} disagrees with construction aux {aux:?}"
                )));
            }
        }
        let require = |present: bool, field: &str| -> Result<()> {
            if present {
                Ok(())
            } else {
                Err(invalid(format!(
                    "{:?} construction requires {field:?}",
                    construction.kind
                )))
            }
        };
        let forbid = |present: bool, field: &str| -> Result<()> {
            if present {
                Err(invalid(format!(
                    "{:?} construction does not take {field:?}",
                    construction.kind
                )))
            } else {
                Ok(())
            }
        };
        let c = construction;
        match c.kind {
            ConstructionKind::Custom => {
                require(c.below.is_some(), "below")?;
                require(c.above.is_some(), "above")?;
                forbid(c.bar.is_some(), "bar")?;
                forbid(c.b_side.is_some(), "b_side")?;
                for name in c.below.iter().chain(&c.above).flatten() {
                    known(name)?;
                }
            }
            ConstructionKind::Raising | ConstructionKind::Trivial | ConstructionKind::Span => {
                forbid(c.below.is_some(), "below")?;
                forbid(c.above.is_some(), "above")?;
                forbid(c.bar.is_some(), "bar")?;
                forbid(c.b_side.is_some(), "b_side")?;
            }
            ConstructionKind::Partition => {
                require(c.bar.is_some(), "bar")?;
                forbid(c.below.is_some(), "below")?;
                forbid(c.above.is_some(), "above")?;
                forbid(c.b_side.is_some(), "b_side")?;
            }
            ConstructionKind::ChronJoin => {
                require(c.b_side.is_some(), "b_side")?;
                forbid(c.below.is_some(), "below")?;
                forbid(c.above.is_some(), "above")?;
                forbid(c.bar.is_some(), "bar")?;
                for name in c.b_side.iter().flatten() {
                    known(name)?;
                }
            }
        }
        Ok(())
    }

    /// The poset given by `letters` and `relations`.
    pub fn poset(&self) -> Result<Poset> {
        Poset::from_relations(&self.letters, &self.relations)
    }

    /// The augmentation this spec describes.
    pub fn augmentation(&self) -> Result<Augmentation> {
        let poset = self.poset()?;
        let Some(c) = &self.construction else {
            let aux = self
                .auxiliary
                .as_deref()
                .ok_or_else(|| invalid("spec names no auxiliary letter"))?;
            return Augmentation::principal(poset, aux);
        };
        let aux = c
            .aux
            .as_deref()
            .ok_or_else(|| invalid("construction requires \"aux\""))?;
        let empty = Vec::new();
        match c.kind {
            ConstructionKind::Custom => Augmentation::custom(
                &poset,
                aux,
                c.below.as_ref().unwrap_or(&empty),
                c.above.as_ref().unwrap_or(&empty),
            ),
            ConstructionKind::Raising => Augmentation::raising(&poset, aux),
            ConstructionKind::Trivial => Augmentation::trivial(&poset, aux),
            ConstructionKind::Span => Augmentation::span(&poset, aux),
            ConstructionKind::Partition => {
                let bar = c
                    .bar
                    .as_deref()
                    .ok_or_else(|| invalid("partition requires \"bar\""))?;
                Augmentation::partition(&poset, aux, bar)
            }
            ConstructionKind::ChronJoin => {
                let upper_names: HashSet<&str> =
                    c.b_side.iter().flatten().map(String::as_str).collect();
                let split = |upper: bool| -> Vec<usize> {
                    (0..poset.len())
                        .filter(|&i| upper_names.contains(poset.letter(i).as_str()) == upper)
                        .collect()
                };
                let (lower_at, upper_at) = (split(false), split(true));
                for &i in &lower_at {
                    for &j in &upper_at {
                        if poset.leq_at(j, i) {
                            return Err(invalid(format!(
                                "{} is below {} against the join",
                                poset.letter(j),
                                poset.letter(i)
                            )));
                        }
                    }
                }
                Augmentation::chron_join(
                    &poset.restrict_to(&lower_at),
                    &poset.restrict_to(&upper_at),
                    aux,
                )
            }
        }
    }
}

/// Parses a command-line word: `@` is the empty word, `.` separates letter
/// names, and without separators a word over an alphabet of one-character
/// names is read character by character.
pub fn parse_word(text: &str, alphabet: &Poset) -> Result<Word> {
    if text == EMPTY_WORD_INPUT {
        return Ok(Word::empty());
    }
    let names: Vec<String> = if text.contains('.') {
        text.split('.').map(str::to_string).collect()
    } else if !alphabet.is_empty() && alphabet.elements().iter().all(Letter::is_single_char) {
        text.chars().map(String::from).collect()
    } else {
        vec![text.to_string()]
    };
    let mut letters = Vec::with_capacity(names.len());
    for name in names {
        let index = alphabet.position(&name)?;
        letters.push(alphabet.letter(index).clone());
    }
    Ok(Word::new(letters))
}

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Hasse diagram as a DOT digraph; edges run from lesser to greater word.
pub fn export_dot(graph: &WordPosetGraph) -> String {
    let mut out = String::from("digraph words {\n");
    let labels: Vec<String> = graph.words().iter().map(|w| quote(&w.render())).collect();
    for label in &labels {
        let _ = writeln!(out, "    {label};");
    }
    for &(lesser, greater) in graph.covers() {
        let _ = writeln!(out, "    {} -> {};", labels[lesser], labels[greater]);
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    words: Vec<Vec<String>>,
    covers: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
}

fn names_of(letters: &[Letter]) -> Vec<String> {
    letters.iter().map(|l| l.to_string()).collect()
}

pub fn export_json(graph: &WordPosetGraph) -> String {
    let doc = GraphJson {
        words: graph
            .words()
            .iter()
            .map(|w| names_of(w.letters()))
            .collect(),
        covers: graph.covers().to_vec(),
        components: graph.components().to_vec(),
    };
    serde_json::to_string(&doc).expect("graph serialization cannot fail")
}

fn letters_in(names: &[String], alphabet: &Poset) -> Result<Vec<Letter>> {
    names
        .iter()
        .map(|name| Ok(alphabet.letter(alphabet.position(name)?).clone()))
        .collect()
}

/// Rebuilds a graph over `alphabet` from [`export_json`] output. The order is
/// the closure of the listed covers, which must be exactly its reduction.
pub fn import_json(text: &str, alphabet: &Poset) -> Result<WordPosetGraph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let words = doc
        .words
        .iter()
        .map(|names| letters_in(names, alphabet).map(Word::new))
        .collect::<Result<Vec<_>>>()?;
    let n = words.len();
    if let Some(&(i, j)) = doc.covers.iter().find(|&&(i, j)| i >= n || j >= n) {
        return Err(invalid(format!("cover ({i}, {j}) out of range")));
    }
    let leq =
        RelationTable::from_pairs(n, doc.covers.iter().copied()).reflexive_transitive_closure();
    let graph = WordPosetGraph::from_table(alphabet.clone(), words, leq)?;
    if graph.covers() != doc.covers.as_slice() {
        return Err(invalid(
            "covers are not a transitive reduction in canonical order",
        ));
    }
    if graph.components() != doc.components.as_slice() {
        return Err(invalid("components do not match the covers"));
    }
    Ok(graph)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessJson {
    left: Vec<String>,
    right: Vec<String>,
}

pub fn export_witness_json(witness: &AlignmentWitness) -> String {
    let doc = WitnessJson {
        left: names_of(&witness.left),
        right: names_of(&witness.right),
    };
    serde_json::to_string(&doc).expect("witness serialization cannot fail")
}

/// Reads a witness whose letters belong to `alphabet` (the augmented poset).
pub fn import_witness_json(text: &str, alphabet: &Poset) -> Result<AlignmentWitness> {
    let doc: WitnessJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(AlignmentWitness {
        left: letters_in(&doc.left, alphabet)?,
        right: letters_in(&doc.right, alphabet)?,
    })
}
