//! Comparators for induced word orders.
//!
//! `v ≤ w` under an augmentation iff `v` and `w` can be padded with the
//! auxiliary letter to equal-length words that compare letter by letter in
//! the augmented alphabet. [`leq_induced`] decides this by dynamic
//! programming over prefix pairs: a padding never needs a column holding the
//! auxiliary letter on both sides, since deleting such a column keeps every
//! other comparison, so each column consumes a letter of `v`, of `w`, or both.
//!
//! [`leq_bruteforce`] enumerates paddings directly and serves as the oracle
//! for the dynamic program.

use std::collections::HashSet;
use std::fmt;

use crate::augment::Augmentation;
use crate::error::{Error, Result};
use crate::poset::{Letter, Poset, PosetMap, EMPTY_WORD};

/// Default bound on `|v| + |w|` for [`leq_bruteforce`].
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// A finite word; the empty word is valid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        names
            .iter()
            .map(|name| Letter::new(name.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Text form: `ε` when empty, otherwise letters concatenated when every
    /// name is one character, else joined with `.`.
    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return EMPTY_WORD.to_string();
        }
        let separator = if self.0.iter().all(Letter::is_single_char) {
            ""
        } else {
            "."
        };
        self.0
            .iter()
            .map(Letter::as_str)
            .collect::<Vec<_>>()
            .join(separator)
    }

    /// Number of occurrences of `name`.
    pub fn count(&self, name: &str) -> usize {
        self.0.iter().filter(|l| l.as_str() == name).count()
    }

    fn with_inserted(&self, position: usize, letter: &Letter) -> Word {
        let mut letters = self.0.clone();
        letters.insert(position, letter.clone());
        Word(letters)
    }

    fn with_removed(&self, position: usize) -> Word {
        let mut letters = self.0.clone();
        letters.remove(position);
        Word(letters)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Two equal-length paddings certifying `v ≤ w` column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlignmentWitness {
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
}

impl AlignmentWitness {
    /// Checks every witness invariant against `aug`, `v` and `w`.
    pub fn validate(
        &self,
        aug: &Augmentation,
        v: &Word,
        w: &Word,
    ) -> std::result::Result<(), String> {
        let aux = aug.aux();
        if self.left.len() != self.right.len() {
            return Err(format!(
                "lengths differ: {} vs {}",
                self.left.len(),
                self.right.len()
            ));
        }
        if self.left.len() > v.len() + w.len() {
            return Err(format!("length {} exceeds |v| + |w|", self.left.len()));
        }
        for (i, (x, y)) in self.left.iter().zip(&self.right).enumerate() {
            if x == aux && y == aux {
                return Err(format!("column {i} pads both sides"));
            }
            match aug.poset().leq(x.as_str(), y.as_str()) {
                Ok(true) => {}
                Ok(false) => return Err(format!("column {i}: {x} is not below {y}")),
                Err(e) => return Err(e.to_string()),
            }
        }
        let strip = |side: &[Letter]| side.iter().filter(|l| *l != aux).cloned().collect::<Word>();
        if &strip(&self.left) != v {
            return Err("left side does not reduce to v".into());
        }
        if &strip(&self.right) != w {
            return Err("right side does not reduce to w".into());
        }
        Ok(())
    }
}

/// Positions in the augmented alphabet of the letters of `word`.
pub(crate) fn resolve(aug: &Augmentation, word: &Word) -> Result<Vec<usize>> {
    word.letters()
        .iter()
        .map(|letter| {
            if letter == aug.aux() {
                return Err(Error::AuxInWord(letter.to_string()));
            }
            aug.working()
                .index_of(letter.as_str())
                .map(|i| aug.embed(i))
                .ok_or_else(|| Error::UnknownLetter(letter.to_string()))
        })
        .collect()
}

/// Decides the induced order on words given as positions in `poset`.
pub(crate) fn leq_positions(poset: &Poset, aux: usize, v: &[usize], w: &[usize]) -> bool {
    let w_above_aux: Vec<bool> = w.iter().map(|&y| poset.leq_at(aux, y)).collect();
    let mut row = vec![false; w.len() + 1];
    row[0] = true;
    for j in 0..w.len() {
        row[j + 1] = row[j] && w_above_aux[j];
    }
    for &x in v {
        let x_below_aux = poset.leq_at(x, aux);
        let mut diagonal = row[0];
        row[0] = row[0] && x_below_aux;
        for j in 0..w.len() {
            let up = row[j + 1];
            row[j + 1] = (diagonal && poset.leq_at(x, w[j]))
                || (up && x_below_aux)
                || (row[j] && w_above_aux[j]);
            diagonal = up;
        }
        if !row.iter().any(|&r| r) {
            return false;
        }
    }
    row[w.len()]
}

/// `v ≤ w` in the order induced by `aug`. Runs in `O(|v|·|w|)`.
pub fn leq_induced(aug: &Augmentation, v: &Word, w: &Word) -> Result<bool> {
    let v = resolve(aug, v)?;
    let w = resolve(aug, w)?;
    Ok(leq_positions(aug.poset(), aug.aux_index(), &v, &w))
}

/// A certificate for `v ≤ w`, or `None` when the words are not related.
///
/// Traceback runs from the end of both words and prefers, in order, a
/// column pairing two letters, a column padding the left word, and a column
/// padding the right word.
pub fn witness(aug: &Augmentation, v: &Word, w: &Word) -> Result<Option<AlignmentWitness>> {
    let vs = resolve(aug, v)?;
    let ws = resolve(aug, w)?;
    let poset = aug.poset();
    let aux = aug.aux_index();
    let cols = ws.len() + 1;
    let mut reach = vec![false; (vs.len() + 1) * cols];
    reach[0] = true;
    for i in 0..=vs.len() {
        for j in 0..=ws.len() {
            if i == 0 && j == 0 {
                continue;
            }
            reach[i * cols + j] = (i > 0
                && j > 0
                && reach[(i - 1) * cols + j - 1]
                && poset.leq_at(vs[i - 1], ws[j - 1]))
                || (i > 0 && reach[(i - 1) * cols + j] && poset.leq_at(vs[i - 1], aux))
                || (j > 0 && reach[i * cols + j - 1] && poset.leq_at(aux, ws[j - 1]));
        }
    }
    if !reach[vs.len() * cols + ws.len()] {
        return Ok(None);
    }
    let (mut i, mut j) = (vs.len(), ws.len());
    let mut columns = Vec::with_capacity(vs.len() + ws.len());
    while i > 0 || j > 0 {
        if i > 0 && j > 0 && reach[(i - 1) * cols + j - 1] && poset.leq_at(vs[i - 1], ws[j - 1]) {
            columns.push((vs[i - 1], ws[j - 1]));
            i -= 1;
            j -= 1;
        } else if j > 0 && reach[i * cols + j - 1] && poset.leq_at(aux, ws[j - 1]) {
            columns.push((aux, ws[j - 1]));
            j -= 1;
        } else {
            debug_assert!(i > 0 && reach[(i - 1) * cols + j] && poset.leq_at(vs[i - 1], aux));
            columns.push((vs[i - 1], aux));
            i -= 1;
        }
    }
    columns.reverse();
    Ok(Some(AlignmentWitness {
        left: columns
            .iter()
            .map(|&(x, _)| poset.letter(x).clone())
            .collect(),
        right: columns
            .iter()
            .map(|&(_, y)| poset.letter(y).clone())
            .collect(),
    }))
}

/// Exhaustive check of the defining property, for `|v| + |w| ≤ DEFAULT_ORACLE_CAP`.
pub fn leq_bruteforce(aug: &Augmentation, v: &Word, w: &Word) -> Result<bool> {
    leq_bruteforce_with_cap(aug, v, w, DEFAULT_ORACLE_CAP)
}

/// Tries every pair of paddings of equal length up to `|v| + |w|`.
pub fn leq_bruteforce_with_cap(aug: &Augmentation, v: &Word, w: &Word, cap: usize) -> Result<bool> {
    let vs = resolve(aug, v)?;
    let ws = resolve(aug, w)?;
    let total = vs.len() + ws.len();
    if total > cap {
        return Err(Error::SizeLimit {
            size: total,
            limit: cap,
        });
    }
    let poset = aug.poset();
    let aux = aug.aux_index();
    for n in vs.len().max(ws.len())..=total {
        let lefts = paddings(&vs, aux, n);
        let rights = paddings(&ws, aux, n);
        let found = lefts.iter().any(|left| {
            rights
                .iter()
                .any(|right| left.iter().zip(right).all(|(&x, &y)| poset.leq_at(x, y)))
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every way to pad `word` with `aux` up to exactly `n` letters.
fn paddings(word: &[usize], aux: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize != word.len() {
            continue;
        }
        let mut letters = word.iter();
        out.push(
            (0..n)
                .map(|bit| {
                    if mask >> bit & 1 == 1 {
                        *letters.next().unwrap()
                    } else {
                        aux
                    }
                })
                .collect(),
        );
    }
    out
}

/// Subsequence order: `w` arises from `v` by inserting letters.
pub fn leq_morphological(v: &Word, w: &Word) -> bool {
    let mut rest = w.letters().iter();
    v.letters().iter().all(|x| rest.any(|y| y == x))
}

/// The two-letter alphabet of the chronological order: `past < future`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChronAlphabet {
    past: Letter,
    future: Letter,
}

impl ChronAlphabet {
    pub fn new(past: &str, future: &str) -> Result<Self> {
        let past = Letter::new(past)?;
        let future = Letter::new(future)?;
        if past == future {
            return Err(Error::WrongAlphabet(format!(
                "{past} is used for both letters"
            )));
        }
        Ok(ChronAlphabet { past, future })
    }

    pub fn past(&self) -> &Letter {
        &self.past
    }

    pub fn future(&self) -> &Letter {
        &self.future
    }

    fn check(&self, word: &Word) -> Result<()> {
        match word
            .letters()
            .iter()
            .find(|l| **l != self.past && **l != self.future)
        {
            Some(other) => Err(Error::WrongAlphabet(format!(
                "{other} is neither {} nor {}",
                self.past, self.future
            ))),
            None => Ok(()),
        }
    }
}

/// `w` arises from `v` by erasing past letters and inserting future letters.
pub fn leq_chronological(alphabet: &ChronAlphabet, v: &Word, w: &Word) -> Result<bool> {
    alphabet.check(v)?;
    alphabet.check(w)?;
    let (vs, ws) = (v.letters(), w.letters());
    let mut row = vec![false; ws.len() + 1];
    row[0] = true;
    for j in 0..ws.len() {
        row[j + 1] = row[j] && ws[j] == alphabet.future;
    }
    for x in vs {
        let erasable = *x == alphabet.past;
        let mut diagonal = row[0];
        row[0] = row[0] && erasable;
        for j in 0..ws.len() {
            let up = row[j + 1];
            row[j + 1] = (diagonal && *x == ws[j])
                || (up && erasable)
                || (row[j] && ws[j] == alphabet.future);
            diagonal = up;
        }
    }
    Ok(row[ws.len()])
}

/// Every word obtained from `v` by one insertion of a letter of `alphabet`,
/// by insertion position then alphabet order, without repeats.
pub fn step_successors_morph(v: &Word, alphabet: &Poset) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for position in 0..=v.len() {
        for letter in alphabet.elements() {
            let next = v.with_inserted(position, letter);
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
    }
    out
}

/// Single erasures of a past letter (by position), then single insertions of
/// the future letter (by position), without repeats.
pub fn step_successors_chron(alphabet: &ChronAlphabet, v: &Word) -> Result<Vec<Word>> {
    alphabet.check(v)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let erasures = (0..v.len())
        .filter(|&i| v.letters()[i] == alphabet.past)
        .map(|i| v.with_removed(i));
    let insertions = (0..=v.len()).map(|i| v.with_inserted(i, &alphabet.future));
    for next in erasures.chain(insertions) {
        if seen.insert(next.clone()) {
            out.push(next);
        }
    }
    Ok(out)
}

/// Letter-wise image of `word` under `map`, with letters sent to `erased`
/// (the image of the auxiliary letter) dropped.
pub fn map_word(map: &PosetMap, word: &Word, erased: &str) -> Result<Word> {
    let mut image = Vec::with_capacity(word.len());
    for letter in word.letters() {
        let target = map.apply(letter.as_str())?;
        if target.as_str() != erased {
            image.push(target.clone());
        }
    }
    Ok(Word(image))
}
