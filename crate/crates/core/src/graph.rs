//! Finite windows of induced word posets.
//!
//! [`build_word_poset`] enumerates every word up to a length bound, compares
//! all pairs, and keeps the covering edges and the connected components.
//! Covers are those of the window: a covering chain through a longer word
//! is not visible here.

use rayon::prelude::*;

use crate::augment::Augmentation;
use crate::error::{Error, Result};
use crate::order::{leq_positions, Word};
use crate::poset::Poset;
use crate::table::{transitive_reduction, RelationTable};

/// Default bound on the number of enumerated words.
pub const DEFAULT_NODE_CAP: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordPosetGraph {
    alphabet: Poset,
    words: Vec<Word>,
    leq: RelationTable,
    covers: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
}

impl WordPosetGraph {
    /// Assembles a graph from an order table, recomputing covers and components.
    pub fn from_table(alphabet: Poset, words: Vec<Word>, leq: RelationTable) -> Result<Self> {
        if leq.size() != words.len() {
            return Err(Error::LengthMismatch(leq.size(), words.len()));
        }
        let covers = transitive_reduction(&leq)?;
        let components = connected_components(words.len(), &covers);
        Ok(WordPosetGraph {
            alphabet,
            words,
            leq,
            covers,
            components,
        })
    }

    /// The working alphabet the words are written in.
    pub fn alphabet(&self) -> &Poset {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, word: &Word) -> Option<usize> {
        self.words.iter().position(|w| w == word)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.contains(i, j)
    }

    pub fn table(&self) -> &RelationTable {
        &self.leq
    }

    /// Covering pairs `(lesser, greater)` in row-major order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }
}

fn word_count(letters: usize, max_len: usize, cap: usize) -> Result<usize> {
    let mut total: usize = 0;
    let mut layer: usize = 1;
    for len in 0..=max_len {
        if len > 0 {
            layer = layer.saturating_mul(letters);
        }
        total = total.saturating_add(layer);
        if total > cap {
            return Err(Error::SizeLimit {
                size: total,
                limit: cap,
            });
        }
    }
    Ok(total)
}

/// Position sequences of all words up to `max_len`, by length then
/// lexicographically by alphabet position.
fn enumerate_positions(letters: usize, max_len: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let total = word_count(letters, max_len, cap)?;
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(total);
    out.push(Vec::new());
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for letter in 0..letters {
                let mut next = out[i].clone();
                next.push(letter);
                out.push(next);
            }
        }
        start = end;
    }
    Ok(out)
}

/// All words of length `0..=max_len` over `alphabet`, `ε` first.
pub fn enumerate_words(alphabet: &Poset, max_len: usize) -> Result<Vec<Word>> {
    enumerate_words_with_cap(alphabet, max_len, DEFAULT_NODE_CAP)
}

pub fn enumerate_words_with_cap(alphabet: &Poset, max_len: usize, cap: usize) -> Result<Vec<Word>> {
    Ok(enumerate_positions(alphabet.len(), max_len, cap)?
        .into_iter()
        .map(|positions| {
            positions
                .into_iter()
                .map(|i| alphabet.letter(i).clone())
                .collect()
        })
        .collect())
}

pub fn build_word_poset(aug: &Augmentation, max_len: usize) -> Result<WordPosetGraph> {
    build_word_poset_with_cap(aug, max_len, DEFAULT_NODE_CAP)
}

pub fn build_word_poset_with_cap(
    aug: &Augmentation,
    max_len: usize,
    cap: usize,
) -> Result<WordPosetGraph> {
    let working = aug.working();
    let positions = enumerate_positions(working.len(), max_len, cap)?;
    let embedded: Vec<Vec<usize>> = positions
        .iter()
        .map(|word| word.iter().map(|&i| aug.embed(i)).collect())
        .collect();
    let n = embedded.len();
    let stride = n.div_ceil(64);
    let poset = aug.poset();
    let aux = aug.aux_index();
    let rows: Vec<Vec<u64>> = embedded
        .par_iter()
        .map(|v| {
            let mut row = vec![0u64; stride];
            for (j, w) in embedded.iter().enumerate() {
                if leq_positions(poset, aux, v, w) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let words = positions
        .into_iter()
        .map(|word| {
            word.into_iter()
                .map(|i| working.letter(i).clone())
                .collect()
        })
        .collect();
    WordPosetGraph::from_table(working.clone(), words, RelationTable::from_rows(n, rows))
}

/// Union-find with path compression and union by rank.
#[derive(Clone, Debug)]
struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != root {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
    }
}

/// Connected components of the undirected graph on `0..n` with the given
/// edges. Members are ascending; components are ordered by their smallest member.
pub fn connected_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut sets = DisjointSet::new(n);
    for &(a, b) in edges {
        sets.union(a, b);
    }
    let mut slot_of_root = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for node in 0..n {
        let root = sets.find(node);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = components.len();
            components.push(Vec::new());
        }
        components[slot_of_root[root]].push(node);
    }
    components
}
