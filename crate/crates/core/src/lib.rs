//! Induced partial orders on words over partially ordered alphabets.
//!
//! Given a poset `A'` and a letter `e` of it, words over `A' − {e}` are ordered
//! by `v ≤ w` iff both can be padded with `e` to equal-length words that are
//! componentwise comparable in `A'`. An [`Augmentation`] adds such a letter
//! to an arbitrary alphabet; the constructors cover the standard choices
//! (raising, trivial, span, partition, chronological join).
//!
//! ```
//! use induced_orders::{leq_induced, Augmentation, Poset, Word};
//!
//! let alphabet = Poset::chain(&["pi", "eta", "phi"]).unwrap();
//! let chron = Augmentation::principal(alphabet, "eta").unwrap();
//! let pi = Word::from_names(&["pi"]).unwrap();
//! assert!(leq_induced(&chron, &pi, &Word::empty()).unwrap());
//! ```

pub mod augment;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod order;
pub mod poset;
pub mod selftest;
pub mod table;

pub use augment::{classify_cone, Augmentation, ConeLabel};
pub use error::{Error, Result};
pub use graph::{build_word_poset, connected_components, enumerate_words, WordPosetGraph};
pub use io::{export_dot, export_json, export_witness_json, parse_alphabet_spec, AlphabetSpec};
pub use order::{
    leq_bruteforce, leq_chronological, leq_induced, leq_morphological, step_successors_chron,
    step_successors_morph, witness, AlignmentWitness, ChronAlphabet, Word,
};
pub use poset::{Letter, Poset, PosetMap};
pub use table::{transitive_reduction, RelationTable};
