//! Augmented alphabets: a poset with one designated auxiliary letter.
//!
//! Deleting the auxiliary letter recovers the working alphabet, whose order
//! must be exactly the order that was augmented. All constructors check this.

use crate::error::{Error, Result};
use crate::poset::{Letter, Poset};
use crate::table::RelationTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation {
    poset: Poset,
    aux: usize,
    working: Poset,
    /// Position in `poset` of each working letter.
    embedding: Vec<usize>,
}

impl Augmentation {
    /// Principal construction: any poset with any of its letters as auxiliary.
    pub fn principal(poset: Poset, aux: &str) -> Result<Self> {
        let aux = poset.position(aux)?;
        let embedding: Vec<usize> = (0..poset.len()).filter(|&i| i != aux).collect();
        let working = poset.restrict_to(&embedding);
        Ok(Augmentation {
            poset,
            aux,
            working,
            embedding,
        })
    }

    /// Adds `e` above every letter of `below` and beneath every letter of `above`.
    pub fn custom<S: AsRef<str>>(p: &Poset, e: &str, below: &[S], above: &[S]) -> Result<Self> {
        let e = Letter::new(e)?;
        if p.contains(e.as_str()) {
            return Err(Error::LetterCollision(e.to_string()));
        }
        let aux = p.len();
        let mut elements = p.elements().to_vec();
        elements.push(e);
        let mut generators: Vec<(usize, usize)> = p.table().pairs().collect();
        for x in below {
            generators.push((p.position(x.as_ref())?, aux));
        }
        for y in above {
            generators.push((aux, p.position(y.as_ref())?));
        }
        let leq =
            RelationTable::from_pairs(elements.len(), generators).reflexive_transitive_closure();
        if let Some((i, j)) = leq.find_symmetric_pair() {
            return Err(Error::CycleDetected(
                elements[i].to_string(),
                elements[j].to_string(),
            ));
        }
        for (i, j) in leq.pairs() {
            if i < aux && j < aux && !p.leq_at(i, j) {
                return Err(Error::AugmentationDistorts(
                    elements[i].to_string(),
                    elements[j].to_string(),
                ));
            }
        }
        let poset = Poset::from_table(elements, leq)?;
        Ok(Augmentation {
            working: p.clone(),
            embedding: (0..aux).collect(),
            poset,
            aux,
        })
    }

    /// `e` below every letter.
    pub fn raising(p: &Poset, e: &str) -> Result<Self> {
        let all: Vec<&str> = p.elements().iter().map(Letter::as_str).collect();
        Self::custom(p, e, &[], &all)
    }

    /// `e` unrelated to every letter.
    pub fn trivial(p: &Poset, e: &str) -> Result<Self> {
        Self::custom::<&str>(p, e, &[], &[])
    }

    /// `e` between the least and the greatest letter.
    pub fn span(p: &Poset, e: &str) -> Result<Self> {
        let least = p.least().ok_or(Error::NoLeast)?;
        let greatest = p.greatest().ok_or(Error::NoGreatest)?;
        if least == greatest {
            return Err(Error::DegenerateBounds);
        }
        Self::custom(p, e, &[least.as_str()], &[greatest.as_str()])
    }

    /// Partition alphabet: working letters are `p` plus the separator `bar`;
    /// `e` lies below every letter of `p`, `bar` is unrelated to everything.
    pub fn partition(p: &Poset, e: &str, bar: &str) -> Result<Self> {
        let e_letter = Letter::new(e)?;
        let bar_letter = Letter::new(bar)?;
        for letter in [&e_letter, &bar_letter] {
            if p.contains(letter.as_str()) {
                return Err(Error::LetterCollision(letter.to_string()));
            }
        }
        if e_letter == bar_letter {
            return Err(Error::LetterCollision(bar_letter.to_string()));
        }
        let n = p.len();
        let mut elements = p.elements().to_vec();
        elements.push(bar_letter);
        let mut with_bar = RelationTable::from_pairs(n + 1, p.table().pairs());
        with_bar.insert(n, n);
        let working = Poset::from_table(elements, with_bar)?;
        let all: Vec<&str> = p.elements().iter().map(Letter::as_str).collect();
        Self::custom(&working, e, &[], &all)
    }

    /// Chronological join: everything in `lower` below `e`, everything in
    /// `upper` above it. The working alphabet is `lower` followed by `upper`,
    /// ordered as their ordinal sum (every lower letter below every upper one).
    pub fn chron_join(lower: &Poset, upper: &Poset, e: &str) -> Result<Self> {
        if let Some(shared) = lower.elements().iter().find(|x| upper.contains(x.as_str())) {
            return Err(Error::LetterCollision(shared.to_string()));
        }
        let offset = lower.len();
        let mut elements = lower.elements().to_vec();
        elements.extend(upper.elements().iter().cloned());
        if elements.len() > crate::poset::MAX_ELEMENTS {
            return Err(Error::TooManyElements(elements.len()));
        }
        let cross = (0..offset).flat_map(|i| (0..upper.len()).map(move |j| (i, j + offset)));
        let generators = lower
            .table()
            .pairs()
            .chain(upper.table().pairs().map(|(i, j)| (i + offset, j + offset)))
            .chain(cross);
        let union = Poset::from_table(
            elements,
            RelationTable::from_pairs(offset + upper.len(), generators),
        )?;
        let below: Vec<&str> = lower.elements().iter().map(Letter::as_str).collect();
        let above: Vec<&str> = upper.elements().iter().map(Letter::as_str).collect();
        Self::custom(&union, e, &below, &above)
    }

    /// The augmented alphabet, including the auxiliary letter.
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn aux(&self) -> &Letter {
        self.poset.letter(self.aux)
    }

    pub fn aux_index(&self) -> usize {
        self.aux
    }

    /// The alphabet words are written in.
    pub fn working(&self) -> &Poset {
        &self.working
    }

    /// Position in [`poset`](Self::poset) of the working letter at `working_index`.
    #[inline]
    pub fn embed(&self, working_index: usize) -> usize {
        self.embedding[working_index]
    }

    /// Same letters and auxiliary, reversed order.
    pub fn dual(&self) -> Self {
        Augmentation {
            poset: self.poset.dual(),
            aux: self.aux,
            working: self.working.dual(),
            embedding: self.embedding.clone(),
        }
    }
}

/// Where a word lies under a chronological join `A < e < B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConeLabel {
    /// Every letter comes from `A`.
    ConeA,
    /// Every letter comes from `B`.
    ConeB,
    /// The empty word, which lies in both images.
    Origin,
    /// Letters from both sides.
    Elsewhere,
}

pub fn classify_cone<S: AsRef<str>>(word: &[S], lower: &Poset, upper: &Poset) -> Result<ConeLabel> {
    let mut in_lower = false;
    let mut in_upper = false;
    for letter in word {
        let name = letter.as_ref();
        if lower.contains(name) {
            in_lower = true;
        } else if upper.contains(name) {
            in_upper = true;
        } else {
            return Err(Error::UnknownLetter(name.to_string()));
        }
    }
    Ok(match (in_lower, in_upper) {
        (false, false) => ConeLabel::Origin,
        (true, false) => ConeLabel::ConeA,
        (false, true) => ConeLabel::ConeB,
        (true, true) => ConeLabel::Elsewhere,
    })
}
