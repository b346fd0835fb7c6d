//! Finite posets over named letters.
//!
//! A [`Poset`] is built from generator pairs and stores the full reflexive,
//! transitive `leq` table. Element order is the order the caller supplied and
//! is used for every iteration and export.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::table::RelationTable;

/// Largest supported alphabet.
pub const MAX_ELEMENTS: usize = 64;

/// Rendering token for the empty word; never a valid letter name.
pub const EMPTY_WORD: &str = "ε";

/// A letter of an alphabet: a non-empty token without whitespace or `.`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(String);

impl Letter {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty()
            || name == EMPTY_WORD
            || name.contains('.')
            || name.chars().any(char::is_whitespace)
        {
            return Err(Error::InvalidName(name));
        }
        Ok(Letter(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True when the name is a single character.
    pub fn is_single_char(&self) -> bool {
        let mut chars = self.0.chars();
        chars.next().is_some() && chars.next().is_none()
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Letter {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl std::borrow::Borrow<str> for Letter {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// A finite partially ordered set of letters.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<Letter>,
    index: HashMap<Letter, usize>,
    leq: RelationTable,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("elements", &self.elements)
            .field("covers", &self.covers())
            .finish()
    }
}

impl Poset {
    pub fn empty() -> Self {
        Poset {
            elements: Vec::new(),
            index: HashMap::new(),
            leq: RelationTable::new(0),
        }
    }

    /// Builds a poset whose order is the reflexive-transitive closure of `pairs`.
    pub fn from_relations<S, T>(elements: &[S], pairs: &[(T, T)]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let letters = elements
            .iter()
            .map(|name| Letter::new(name.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let index = index_letters(&letters)?;
        let generators = pairs
            .iter()
            .map(|(x, y)| Ok((lookup(&index, x.as_ref())?, lookup(&index, y.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        let leq =
            RelationTable::from_pairs(letters.len(), generators).reflexive_transitive_closure();
        Self::from_table(letters, leq)
    }

    /// Poset with only the reflexive relations.
    pub fn trivial<S: AsRef<str>>(elements: &[S]) -> Result<Self> {
        Self::from_relations::<S, &str>(elements, &[])
    }

    /// Chain in the listed order.
    pub fn chain<S: AsRef<str>>(elements: &[S]) -> Result<Self> {
        let pairs: Vec<(&str, &str)> = elements
            .windows(2)
            .map(|w| (w[0].as_ref(), w[1].as_ref()))
            .collect();
        Self::from_relations(elements, &pairs)
    }

    /// Wraps an already closed table, rejecting cycles.
    pub(crate) fn from_table(elements: Vec<Letter>, leq: RelationTable) -> Result<Self> {
        if elements.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements(elements.len()));
        }
        let index = index_letters(&elements)?;
        if let Some((i, j)) = leq.find_symmetric_pair() {
            return Err(Error::CycleDetected(
                elements[i].to_string(),
                elements[j].to_string(),
            ));
        }
        debug_assert!(leq.is_partial_order());
        Ok(Poset {
            elements,
            index,
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Letter] {
        &self.elements
    }

    pub fn letter(&self, index: usize) -> &Letter {
        &self.elements[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Position of `name`, or `UnknownLetter`.
    pub fn position(&self, name: &str) -> Result<usize> {
        lookup(&self.index, name)
    }

    pub fn table(&self) -> &RelationTable {
        &self.leq
    }

    pub fn leq(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.leq.contains(self.position(x)?, self.position(y)?))
    }

    #[inline]
    pub fn leq_at(&self, x: usize, y: usize) -> bool {
        self.leq.contains(x, y)
    }

    /// Covering pairs `(x, y)`, ordered by the position of `x` then `y`.
    pub fn covers(&self) -> Vec<(Letter, Letter)> {
        self.leq
            .covering_pairs()
            .into_iter()
            .map(|(i, j)| (self.elements[i].clone(), self.elements[j].clone()))
            .collect()
    }

    /// Strict pairs of the order, row-major.
    pub fn strict_pairs(&self) -> Vec<(Letter, Letter)> {
        self.leq
            .pairs()
            .filter(|(i, j)| i != j)
            .map(|(i, j)| (self.elements[i].clone(), self.elements[j].clone()))
            .collect()
    }

    /// Componentwise order on equal-length tuples.
    pub fn product_leq<S: AsRef<str>>(&self, xs: &[S], ys: &[S]) -> Result<bool> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch(xs.len(), ys.len()));
        }
        let mut related = true;
        for (x, y) in xs.iter().zip(ys) {
            related &= self.leq(x.as_ref(), y.as_ref())?;
        }
        Ok(related)
    }

    /// Restriction of the order to all elements except `name`.
    pub fn delete_element(&self, name: &str) -> Result<Self> {
        let removed = self.position(name)?;
        let kept: Vec<usize> = (0..self.len()).filter(|&i| i != removed).collect();
        Ok(self.restrict_to(&kept))
    }

    /// Restriction to the given positions, in the given order.
    pub(crate) fn restrict_to(&self, positions: &[usize]) -> Self {
        let elements: Vec<Letter> = positions
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect();
        let mut leq = RelationTable::new(positions.len());
        for (a, &i) in positions.iter().enumerate() {
            for (b, &j) in positions.iter().enumerate() {
                if self.leq.contains(i, j) {
                    leq.insert(a, b);
                }
            }
        }
        let index = elements.iter().cloned().zip(0..).collect();
        Poset {
            elements,
            index,
            leq,
        }
    }

    pub fn least(&self) -> Option<&Letter> {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.leq.contains(i, j)))
            .map(|i| &self.elements[i])
    }

    pub fn greatest(&self) -> Option<&Letter> {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.leq.contains(j, i)))
            .map(|i| &self.elements[i])
    }

    /// Same carrier, reversed order.
    pub fn dual(&self) -> Self {
        Poset {
            elements: self.elements.clone(),
            index: self.index.clone(),
            leq: self.leq.transpose(),
        }
    }

    /// Same order with letters renamed; `rename` must be injective.
    pub fn relabel(&self, rename: impl Fn(&Letter) -> Letter) -> Result<Self> {
        let elements: Vec<Letter> = self.elements.iter().map(rename).collect();
        Self::from_table(elements, self.leq.clone())
    }

    /// True when every relation of `self` also holds in `other`.
    pub fn is_suborder(&self, other: &Poset) -> Result<bool> {
        if self.len() != other.len() || !self.elements.iter().all(|x| other.contains(x.as_str())) {
            return Err(Error::CarrierMismatch);
        }
        let to_other: Vec<usize> = self
            .elements
            .iter()
            .map(|x| other.index[x.as_str()])
            .collect();
        Ok(self
            .leq
            .pairs()
            .all(|(i, j)| other.leq.contains(to_other[i], to_other[j])))
    }
}

fn index_letters(letters: &[Letter]) -> Result<HashMap<Letter, usize>> {
    let mut index = HashMap::with_capacity(letters.len());
    for (i, letter) in letters.iter().enumerate() {
        if index.insert(letter.clone(), i).is_some() {
            return Err(Error::DuplicateElement(letter.to_string()));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<Letter, usize>, name: &str) -> Result<usize> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| Error::UnknownLetter(name.to_string()))
}

/// A total assignment of source letters to target letters.
#[derive(Clone, Debug)]
pub struct PosetMap {
    source: Poset,
    target: Poset,
    assignment: Vec<usize>,
}

impl PosetMap {
    /// `pairs` must assign every source letter exactly once.
    pub fn new<S: AsRef<str>>(source: Poset, target: Poset, pairs: &[(S, S)]) -> Result<Self> {
        let mut assignment = vec![None; source.len()];
        for (x, y) in pairs {
            let i = source.position(x.as_ref())?;
            let j = target.position(y.as_ref())?;
            if assignment[i].replace(j).is_some() {
                return Err(Error::Validation(format!(
                    "{} is assigned twice",
                    x.as_ref()
                )));
            }
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(i, j)| {
                j.ok_or_else(|| Error::Validation(format!("{} is not assigned", source.letter(i))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PosetMap {
            source,
            target,
            assignment,
        })
    }

    /// Map given by target positions, one per source position.
    pub fn from_positions(source: Poset, target: Poset, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::LengthMismatch(assignment.len(), source.len()));
        }
        if let Some(&bad) = assignment.iter().find(|&&j| j >= target.len()) {
            return Err(Error::Validation(format!(
                "target position {bad} out of range"
            )));
        }
        Ok(PosetMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(poset: Poset) -> Self {
        let assignment = (0..poset.len()).collect();
        PosetMap {
            source: poset.clone(),
            target: poset,
            assignment,
        }
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn apply(&self, x: &str) -> Result<&Letter> {
        Ok(self
            .target
            .letter(self.assignment[self.source.position(x)?]))
    }

    pub fn is_homomorphism(&self) -> bool {
        self.source.leq.pairs().all(|(i, j)| {
            self.target
                .leq
                .contains(self.assignment[i], self.assignment[j])
        })
    }
}
