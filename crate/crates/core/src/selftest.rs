//! Exhaustive property checks over small alphabets, run by the `selftest`
//! subcommand.
//!
//! Each check compares the comparator against an independent route: the
//! brute-force oracle, the direct definitions of the morphological and
//! chronological orders, or a closed-form description of the order.

use std::fmt::Write as _;

use crate::augment::Augmentation;
use crate::error::Result;
use crate::graph::{build_word_poset, enumerate_words};
use crate::io::{export_dot, export_json, import_json};
use crate::order::{
    leq_bruteforce, leq_chronological, leq_induced, leq_morphological, map_word,
    step_successors_chron, witness, ChronAlphabet, Word,
};
use crate::poset::{Letter, Poset, PosetMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Every partial order on `names`, each exactly once.
pub fn all_posets<S: AsRef<str>>(names: &[S]) -> Vec<Poset> {
    let n = names.len();
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << slots.len() {
        let related = |i: usize, j: usize| {
            i == j
                || slots
                    .iter()
                    .position(|&s| s == (i, j))
                    .is_some_and(|k| mask >> k & 1 == 1)
        };
        let antisymmetric =
            (0..n).all(|i| (0..n).all(|j| i == j || !(related(i, j) && related(j, i))));
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| !related(i, j) || (0..n).all(|k| !related(j, k) || related(i, k)))
        });
        if antisymmetric && transitive {
            let pairs: Vec<(&str, &str)> = slots
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &(i, j))| (names[i].as_ref(), names[j].as_ref()))
                .collect();
            out.push(
                Poset::from_relations(names, &pairs)
                    .expect("enumerated relation is a partial order"),
            );
        }
    }
    out
}

const WORKING: [&str; 3] = ["x", "y", "z"];
const AUX: &str = "e";

/// Every augmentation of every poset on at most three letters: all orders on
/// `k + 1` letters with the last one auxiliary, plus the named constructors.
pub fn small_augmentations() -> Vec<Augmentation> {
    let mut out = Vec::new();
    for k in 0..=WORKING.len() {
        let mut names: Vec<&str> = WORKING[..k].to_vec();
        names.push(AUX);
        for poset in all_posets(&names) {
            out.push(Augmentation::principal(poset, AUX).expect("aux is a letter"));
        }
        for base in all_posets(&WORKING[..k]) {
            out.extend(constructor_outputs(&base));
        }
    }
    out
}

fn constructor_outputs(base: &Poset) -> Vec<Augmentation> {
    let mut out = vec![
        Augmentation::raising(base, AUX).expect("raising always applies"),
        Augmentation::trivial(base, AUX).expect("trivial always applies"),
    ];
    out.extend(Augmentation::span(base, AUX).ok());
    if base.len() < WORKING.len() {
        out.push(Augmentation::partition(base, AUX, "bar").expect("fresh letters"));
    }
    let n = base.len();
    for split in 0u32..1 << n {
        let lower: Vec<usize> = (0..n).filter(|i| split >> i & 1 == 0).collect();
        let upper: Vec<usize> = (0..n).filter(|i| split >> i & 1 == 1).collect();
        let cross_free = lower.iter().all(|&i| {
            upper
                .iter()
                .all(|&j| !base.leq_at(i, j) && !base.leq_at(j, i))
        });
        if cross_free {
            let (a, b) = (base.restrict_to(&lower), base.restrict_to(&upper));
            out.push(Augmentation::chron_join(&a, &b, AUX).expect("disjoint sides"));
        }
    }
    out
}

fn orientons() -> (Augmentation, ChronAlphabet) {
    let chron = Augmentation::principal(Poset::chain(&["pi", "eta", "phi"]).expect("chain"), "eta")
        .expect("eta is a letter");
    (
        chron,
        ChronAlphabet::new("pi", "phi").expect("distinct letters"),
    )
}

fn checked(
    name: &'static str,
    body: impl FnOnce() -> Result<std::result::Result<String, String>>,
) -> CheckOutcome {
    match body() {
        Ok(Ok(detail)) => CheckOutcome {
            name,
            passed: true,
            detail,
        },
        Ok(Err(detail)) => CheckOutcome {
            name,
            passed: false,
            detail,
        },
        Err(e) => CheckOutcome {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn pairs(words: &[Word]) -> impl Iterator<Item = (&Word, &Word)> {
    words
        .iter()
        .flat_map(move |v| words.iter().map(move |w| (v, w)))
}

fn oracle_equivalence(max_len: usize) -> CheckOutcome {
    checked("oracle equivalence", || {
        let mut compared = 0usize;
        for aug in small_augmentations() {
            let words = enumerate_words(aug.working(), max_len)?;
            for (v, w) in pairs(&words) {
                compared += 1;
                if leq_induced(&aug, v, w)? != leq_bruteforce(&aug, v, w)? {
                    return Ok(Err(format!(
                        "mismatch on {v} vs {w} under {:?}",
                        aug.poset()
                    )));
                }
            }
        }
        Ok(Ok(format!("{compared} pairs agree")))
    })
}

fn partial_order(max_len: usize) -> CheckOutcome {
    checked("induced relation is a partial order", || {
        let (chron, _) = orientons();
        let mut checked_augs = 0usize;
        for aug in small_augmentations().iter().chain([&chron]) {
            let words = enumerate_words(aug.working(), max_len)?;
            let n = words.len();
            let mut leq = vec![false; n * n];
            for i in 0..n {
                for j in 0..n {
                    leq[i * n + j] = leq_induced(aug, &words[i], &words[j])?;
                }
            }
            for i in 0..n {
                if !leq[i * n + i] {
                    return Ok(Err(format!("not reflexive at {}", words[i])));
                }
                for j in 0..n {
                    if i != j && leq[i * n + j] && leq[j * n + i] {
                        return Ok(Err(format!(
                            "{} and {} related both ways",
                            words[i], words[j]
                        )));
                    }
                    if !leq[i * n + j] {
                        continue;
                    }
                    for k in 0..n {
                        if leq[j * n + k] && !leq[i * n + k] {
                            return Ok(Err(format!(
                                "{} ≤ {} ≤ {} but not {0} ≤ {2}",
                                words[i], words[j], words[k]
                            )));
                        }
                    }
                }
            }
            checked_augs += 1;
        }
        Ok(Ok(format!(
            "{checked_augs} alphabets, words to length {max_len}"
        )))
    })
}

fn witness_soundness(max_len: usize) -> CheckOutcome {
    checked("witness soundness", || {
        let mut certified = 0usize;
        for aug in small_augmentations() {
            let words = enumerate_words(aug.working(), max_len)?;
            for (v, w) in pairs(&words) {
                match (leq_induced(&aug, v, w)?, witness(&aug, v, w)?) {
                    (true, Some(wit)) => {
                        if let Err(problem) = wit.validate(&aug, v, w) {
                            return Ok(Err(format!("{v} vs {w}: {problem}")));
                        }
                        certified += 1;
                    }
                    (false, None) => {}
                    (related, wit) => {
                        return Ok(Err(format!(
                            "{v} vs {w}: related={related}, witness={wit:?}"
                        )));
                    }
                }
            }
        }
        Ok(Ok(format!("{certified} witnesses validated")))
    })
}

fn chronological_agreement(max_len: usize) -> CheckOutcome {
    checked("chronological order coincides", || {
        let (chron, alphabet) = orientons();
        let words = enumerate_words(chron.working(), max_len)?;
        for (v, w) in pairs(&words) {
            if leq_induced(&chron, v, w)? != leq_chronological(&alphabet, v, w)? {
                return Ok(Err(format!("{v} vs {w}")));
            }
        }
        Ok(Ok(format!("{} pairs", words.len() * words.len())))
    })
}

fn chronological_covers(max_len: usize) -> CheckOutcome {
    checked(
        "single steps are covers of the chronological window",
        || {
            let (chron, alphabet) = orientons();
            let window = max_len + 1;
            let graph = build_word_poset(&chron, window)?;
            let mut steps = Vec::new();
            for (i, v) in graph
                .words()
                .iter()
                .enumerate()
                .filter(|(_, v)| v.len() < window)
            {
                for next in step_successors_chron(&alphabet, v)? {
                    if next.len() < window {
                        let j = graph
                            .index_of(&next)
                            .expect("short words are in the window");
                        steps.push((i, j));
                    }
                }
            }
            for &(i, j) in &steps {
                if !graph.covers().contains(&(i, j)) {
                    return Ok(Err(format!(
                        "step {} -> {} is not a cover",
                        graph.words()[i],
                        graph.words()[j]
                    )));
                }
            }
            let short_covers = graph
                .covers()
                .iter()
                .filter(|&&(i, j)| {
                    graph.words()[i].len() < window && graph.words()[j].len() < window
                })
                .filter(|pair| !steps.contains(pair))
                .count();
            if short_covers > 0 {
                return Ok(Err(format!(
                    "{short_covers} covers among short words are not single steps"
                )));
            }
            Ok(Ok(format!("{} steps, window length {window}", steps.len())))
        },
    )
}

fn morphological_agreement(max_len: usize) -> CheckOutcome {
    checked("raising a set gives the subsequence order", || {
        let set = Poset::trivial(&["pi", "phi"])?;
        let aug = Augmentation::raising(&set, "eta")?;
        let words = enumerate_words(aug.working(), max_len)?;
        for (v, w) in pairs(&words) {
            if leq_induced(&aug, v, w)? != leq_morphological(v, w) {
                return Ok(Err(format!("{v} vs {w}")));
            }
        }
        Ok(Ok(format!("{} pairs", words.len() * words.len())))
    })
}

fn trivial_agreement(max_len: usize) -> CheckOutcome {
    checked(
        "trivial augmentation gives length classes of product orders",
        || {
            for base in [
                Poset::chain(&["pi", "phi"])?,
                Poset::trivial(&["pi", "phi"])?,
            ] {
                let aug = Augmentation::trivial(&base, "eta")?;
                let words = enumerate_words(aug.working(), max_len)?;
                for (v, w) in pairs(&words) {
                    let expected =
                        v.len() == w.len() && base.product_leq(v.letters(), w.letters())?;
                    if leq_induced(&aug, v, w)? != expected {
                        return Ok(Err(format!("{v} vs {w}")));
                    }
                }
                let graph = build_word_poset(&aug, max_len)?;
                let classes: Vec<Vec<usize>> = (0..=max_len)
                    .map(|len| {
                        (0..graph.len())
                            .filter(|&i| graph.words()[i].len() == len)
                            .collect()
                    })
                    .collect();
                if base.covers().len() == 1 && graph.components() != classes.as_slice() {
                    return Ok(Err(format!("components {:?}", graph.components())));
                }
            }
            Ok(Ok("length classes match".into()))
        },
    )
}

/// Distinct equal-length paddings of the same word are never comparable.
fn equal_length_paddings(max_len: usize) -> CheckOutcome {
    checked("equal-length paddings are incomparable", || {
        let (chron, _) = orientons();
        let poset = chron.poset();
        let aux = chron.aux().clone();
        let max_padded = max_len + 2;
        let mut compared = 0usize;
        for w in enumerate_words(chron.working(), max_len)? {
            for n in w.len()..=max_padded {
                let padded = paddings_of(&w, &aux, n);
                for a in &padded {
                    for b in &padded {
                        if a != b && poset.product_leq(a, b)? {
                            return Ok(Err(format!("{a:?} ≤ {b:?}")));
                        }
                        compared += 1;
                    }
                }
            }
        }
        Ok(Ok(format!("{compared} padding pairs")))
    })
}

fn paddings_of(word: &Word, aux: &Letter, n: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != word.len() {
            continue;
        }
        let mut letters = word.letters().iter();
        out.push(
            (0..n)
                .map(|bit| {
                    if mask >> bit & 1 == 1 {
                        letters.next().unwrap().clone()
                    } else {
                        aux.clone()
                    }
                })
                .collect(),
        );
    }
    out
}

/// First equal-length pair whose induced and product comparisons differ.
pub fn product_mismatch(aug: &Augmentation, max_len: usize) -> Result<Option<(Word, Word)>> {
    let words = enumerate_words(aug.working(), max_len)?;
    for (v, w) in pairs(&words).filter(|(v, w)| v.len() == w.len()) {
        if leq_induced(aug, v, w)? != aug.working().product_leq(v.letters(), w.letters())? {
            return Ok(Some((v.clone(), w.clone())));
        }
    }
    Ok(None)
}

/// True when the auxiliary letter lies strictly between two other letters.
pub fn aux_is_interior(aug: &Augmentation) -> bool {
    let (poset, e) = (aug.poset(), aug.aux_index());
    let others = || (0..poset.len()).filter(move |&x| x != e);
    others().any(|x| poset.leq_at(x, e)) && others().any(|y| poset.leq_at(e, y))
}

fn product_embedding(max_len: usize) -> CheckOutcome {
    checked("product orders embed as fixed-length layers", || {
        let mut failures = Vec::new();
        let augs = small_augmentations();
        for aug in &augs {
            if let Some((v, w)) = product_mismatch(aug, max_len)? {
                failures.push(format!("{v} vs {w} under {:?}", aug.poset().strict_pairs()));
            }
        }
        let (chron, _) = orientons();
        if let Some((v, w)) = product_mismatch(&chron, max_len)? {
            failures.push(format!("{v} vs {w} under the chronological alphabet"));
        }
        match failures.last() {
            None => Ok(Ok(format!("{} alphabets", augs.len() + 1))),
            Some(last) => Ok(Err(format!(
                "{} alphabets with mismatches, e.g. {last}",
                failures.len()
            ))),
        }
    })
}

fn extremal_product_embedding(max_len: usize) -> CheckOutcome {
    checked(
        "layers are product orders exactly when aux is extremal",
        || {
            let mut extremal = 0usize;
            for aug in small_augmentations() {
                let mismatch = product_mismatch(&aug, max_len.max(3))?;
                if mismatch.is_some() != aux_is_interior(&aug) {
                    return Ok(Err(format!(
                        "{:?}: mismatch {mismatch:?}",
                        aug.poset().strict_pairs()
                    )));
                }
                extremal += usize::from(mismatch.is_none());
            }
            Ok(Ok(format!(
                "{extremal} alphabets with extremal aux embed every layer"
            )))
        },
    )
}

fn letter_layer() -> CheckOutcome {
    checked("one-letter words carry the alphabet order", || {
        for aug in small_augmentations() {
            let working = aug.working();
            for x in working.elements() {
                for y in working.elements() {
                    let (v, w) = (Word::new(vec![x.clone()]), Word::new(vec![y.clone()]));
                    if leq_induced(&aug, &v, &w)? != working.leq(x.as_str(), y.as_str())? {
                        return Ok(Err(format!("{x} vs {y}")));
                    }
                }
            }
        }
        Ok(Ok("all alphabets".into()))
    })
}

fn naturality(max_len: usize) -> CheckOutcome {
    checked("homomorphisms induce monotone word maps", || {
        let sources: Vec<Poset> = (1..=3)
            .flat_map(|k| all_posets(&["a0", "a1", "a2"][..k]))
            .collect();
        let targets: Vec<Poset> = (1..=3)
            .flat_map(|k| all_posets(&["b0", "b1", "b2"][..k]))
            .collect();
        let mut maps = 0usize;
        for source in &sources {
            for target in &targets {
                for code in 0..target.len().pow(source.len() as u32) {
                    let assignment: Vec<usize> = (0..source.len())
                        .map(|i| code / target.len().pow(i as u32) % target.len())
                        .collect();
                    let f = PosetMap::from_positions(source.clone(), target.clone(), assignment)?;
                    if !f.is_homomorphism() {
                        continue;
                    }
                    maps += 1;
                    for e in source.elements() {
                        let image_aux = f.apply(e.as_str())?.clone();
                        let aug_a = Augmentation::principal(source.clone(), e.as_str())?;
                        let aug_b = Augmentation::principal(target.clone(), image_aux.as_str())?;
                        let words = enumerate_words(aug_a.working(), max_len)?;
                        let images = words
                            .iter()
                            .map(|w| map_word(&f, w, image_aux.as_str()))
                            .collect::<Result<Vec<_>>>()?;
                        for (i, v) in words.iter().enumerate() {
                            for (j, w) in words.iter().enumerate() {
                                if leq_induced(&aug_a, v, w)?
                                    && !leq_induced(&aug_b, &images[i], &images[j])?
                                {
                                    return Ok(Err(format!(
                                        "{v} ≤ {w} but images are not related"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Ok(format!("{maps} homomorphisms")))
    })
}

fn suborder_monotonicity(max_len: usize) -> CheckOutcome {
    checked("suborders induce suborders", || {
        let names = ["x", "y", AUX];
        let posets = all_posets(&names);
        let mut compared = 0usize;
        for finer in &posets {
            for coarser in &posets {
                if !finer.is_suborder(coarser)? {
                    continue;
                }
                let a = Augmentation::principal(finer.clone(), AUX)?;
                let b = Augmentation::principal(coarser.clone(), AUX)?;
                let words = enumerate_words(a.working(), max_len)?;
                for (v, w) in pairs(&words) {
                    if leq_induced(&a, v, w)? && !leq_induced(&b, v, w)? {
                        return Ok(Err(format!("{v} vs {w}")));
                    }
                }
                compared += 1;
            }
        }
        Ok(Ok(format!("{compared} suborder pairs")))
    })
}

fn duality(max_len: usize) -> CheckOutcome {
    checked("dual alphabets reverse the word order", || {
        for aug in small_augmentations() {
            let dual = aug.dual();
            let words = enumerate_words(aug.working(), max_len)?;
            for (v, w) in pairs(&words) {
                if leq_induced(&dual, v, w)? != leq_induced(&aug, w, v)? {
                    return Ok(Err(format!("{v} vs {w}")));
                }
            }
        }
        let lowest = Augmentation::principal(Poset::chain(&["eta", "pi", "phi"])?, "eta")?;
        let highest = Augmentation::principal(Poset::chain(&["pi", "phi", "eta"])?, "eta")?;
        let swap = |w: &Word| -> Result<Word> {
            w.letters()
                .iter()
                .map(|l| Letter::new(if l.as_str() == "pi" { "phi" } else { "pi" }))
                .collect()
        };
        let words = enumerate_words(lowest.working(), max_len)?;
        for (v, w) in pairs(&words) {
            if leq_induced(&lowest, v, w)? != leq_induced(&highest, &swap(w)?, &swap(v)?)? {
                return Ok(Err(format!("letter swap fails on {v} vs {w}")));
            }
        }
        Ok(Ok("generic and letter-swap duality hold".into()))
    })
}

fn segment_counts(w: &Word, bar: &str, item: &str) -> Vec<usize> {
    let mut counts = vec![0];
    for letter in w.letters() {
        if letter.as_str() == bar {
            counts.push(0);
        } else if letter.as_str() == item {
            *counts.last_mut().unwrap() += 1;
        }
    }
    counts
}

fn partition_structure(max_len: usize) -> CheckOutcome {
    checked("partition order counts items per segment", || {
        let aug = Augmentation::partition(&Poset::trivial(&["phi"])?, "eta", "pi")?;
        let len = max_len + 3;
        let words = enumerate_words(aug.working(), len)?;
        for (v, w) in pairs(&words) {
            let (sv, sw) = (
                segment_counts(v, "pi", "phi"),
                segment_counts(w, "pi", "phi"),
            );
            let expected = sv.len() == sw.len() && sv.iter().zip(&sw).all(|(a, b)| a <= b);
            if leq_induced(&aug, v, w)? != expected {
                return Ok(Err(format!("{v} vs {w}")));
            }
        }
        let graph = build_word_poset(&aug, len)?;
        for component in graph.components() {
            let minimal: Vec<usize> = component
                .iter()
                .copied()
                .filter(|&i| component.iter().all(|&j| j == i || !graph.leq(j, i)))
                .collect();
            let bars = graph.words()[component[0]].count("pi");
            let expected = Word::from_names(&vec!["pi"; bars])?;
            if minimal.len() != 1 || graph.words()[minimal[0]] != expected {
                return Ok(Err(format!(
                    "component with {bars} bars has minima {minimal:?}"
                )));
            }
        }
        Ok(Ok(format!("{} components", graph.components().len())))
    })
}

/// A poset and two letters whose deletion order changes the induced order.
#[derive(Clone, Debug)]
pub struct NonCommutativity {
    pub poset: Poset,
    pub first: Letter,
    pub second: Letter,
    pub v: Word,
    pub w: Word,
    /// `v ≤ w` after deleting `first` and using `second` as auxiliary.
    pub first_then_second: bool,
    /// `v ≤ w` after deleting `second` and using `first` as auxiliary.
    pub second_then_first: bool,
}

/// Searches three-letter posets and word pairs to length 2.
pub fn find_noncommutativity() -> Result<Option<NonCommutativity>> {
    let names = ["a", "b", "c"];
    for poset in all_posets(&names) {
        for first in &names {
            for second in names.iter().filter(|s| *s != first) {
                let one = Augmentation::principal(poset.delete_element(first)?, second)?;
                let two = Augmentation::principal(poset.delete_element(second)?, first)?;
                let words = enumerate_words(one.working(), 2)?;
                for (v, w) in pairs(&words) {
                    let (x, y) = (leq_induced(&one, v, w)?, leq_induced(&two, v, w)?);
                    if x != y {
                        return Ok(Some(NonCommutativity {
                            poset: poset.clone(),
                            first: Letter::new(*first)?,
                            second: Letter::new(*second)?,
                            v: v.clone(),
                            w: w.clone(),
                            first_then_second: x,
                            second_then_first: y,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn noncommutativity() -> CheckOutcome {
    checked("deletion order matters", || {
        Ok(match find_noncommutativity()? {
            Some(found) => {
                let mut detail = String::new();
                let _ = write!(
                    detail,
                    "order {:?}; {} vs {}: {}={} but {}={}",
                    found.poset.strict_pairs(),
                    found.v,
                    found.w,
                    format_args!("drop {} then {}", found.first, found.second),
                    found.first_then_second,
                    format_args!("drop {} then {}", found.second, found.first),
                    found.second_then_first,
                );
                Ok(detail)
            }
            None => Err("no example found".into()),
        })
    })
}

fn serialization(max_len: usize) -> CheckOutcome {
    checked("exports are deterministic and round-trip", || {
        let (chron, _) = orientons();
        let first = build_word_poset(&chron, max_len)?;
        let second = build_word_poset(&chron, max_len)?;
        if export_dot(&first) != export_dot(&second) || export_json(&first) != export_json(&second)
        {
            return Ok(Err("repeated builds differ".into()));
        }
        for aug in small_augmentations().iter().step_by(7) {
            let graph = build_word_poset(aug, max_len.min(3))?;
            if import_json(&export_json(&graph), aug.working())? != graph {
                return Ok(Err(format!(
                    "round trip changed graph for {:?}",
                    aug.poset()
                )));
            }
        }
        Ok(Ok("stable".into()))
    })
}

/// Runs every check with exhaustive word windows of length `max_len`.
pub fn run(max_len: usize) -> Vec<CheckOutcome> {
    vec![
        oracle_equivalence(max_len),
        partial_order(max_len),
        witness_soundness(max_len),
        chronological_agreement(max_len + 1),
        chronological_covers(max_len),
        morphological_agreement(max_len + 1),
        trivial_agreement(max_len + 1),
        equal_length_paddings(max_len),
        product_embedding(max_len),
        extremal_product_embedding(max_len),
        letter_layer(),
        naturality(max_len),
        suborder_monotonicity(max_len),
        duality(max_len),
        partition_structure(max_len),
        noncommutativity(),
        serialization(max_len),
    ]
}
