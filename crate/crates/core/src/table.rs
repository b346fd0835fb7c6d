//! Dense boolean relation tables over `0..n`, stored as one bit row per element.
//!
//! Used for the letter order of a [`Poset`](crate::Poset) as well as for the
//! word order of a [`WordPosetGraph`](crate::WordPosetGraph).

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelationTable {
    size: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for RelationTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.size {
            list.entry(&self.successors(i).collect::<Vec<_>>());
        }
        list.finish()
    }
}

impl RelationTable {
    /// Empty relation on `size` elements.
    pub fn new(size: usize) -> Self {
        let stride = size.div_ceil(64);
        RelationTable {
            size,
            stride,
            bits: vec![0; stride * size],
        }
    }

    /// Identity relation on `size` elements.
    pub fn identity(size: usize) -> Self {
        let mut table = Self::new(size);
        for i in 0..size {
            table.insert(i, i);
        }
        table
    }

    pub fn from_pairs(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut table = Self::new(size);
        for (i, j) in pairs {
            table.insert(i, j);
        }
        table
    }

    pub(crate) fn from_rows(size: usize, rows: Vec<Vec<u64>>) -> Self {
        let stride = size.div_ceil(64);
        let mut bits = Vec::with_capacity(stride * size);
        for row in rows {
            debug_assert_eq!(row.len(), stride);
            bits.extend(row);
        }
        RelationTable { size, stride, bits }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / 64] |= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    /// All `j` with `(i, j)` in the relation, ascending.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let size = self.size;
        self.row(i)
            .iter()
            .enumerate()
            .flat_map(move |(block, &word)| {
                (0..64)
                    .filter(move |bit| word >> bit & 1 == 1)
                    .map(move |bit| block * 64 + bit)
                    .filter(move |&j| j < size)
            })
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_pairs(self.size, self.pairs().map(|(i, j)| (j, i)))
    }

    /// Reflexive-transitive closure (Warshall over bit rows).
    pub fn reflexive_transitive_closure(&self) -> Self {
        let mut closure = self.clone();
        for i in 0..self.size {
            closure.insert(i, i);
        }
        for k in 0..self.size {
            let pivot = closure.row(k).to_vec();
            for i in 0..self.size {
                if closure.contains(i, k) {
                    let start = i * self.stride;
                    for (dst, src) in closure.bits[start..start + self.stride]
                        .iter_mut()
                        .zip(&pivot)
                    {
                        *dst |= src;
                    }
                }
            }
        }
        closure
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|i| self.contains(i, i))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.find_symmetric_pair().is_none()
    }

    pub(crate) fn find_symmetric_pair(&self) -> Option<(usize, usize)> {
        self.pairs().find(|&(i, j)| i != j && self.contains(j, i))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.size).all(|i| {
            self.successors(i).all(|j| {
                self.row(j)
                    .iter()
                    .zip(self.row(i))
                    .all(|(reach_j, reach_i)| reach_j & !reach_i == 0)
            })
        })
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    /// Covering pairs `(i, j)`: `i < j` with no `k` strictly between. Row-major order.
    ///
    /// Only meaningful when the table is a partial order; see [`transitive_reduction`].
    pub(crate) fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        let mut indirect = vec![0u64; self.stride];
        for i in 0..self.size {
            indirect.iter_mut().for_each(|w| *w = 0);
            for k in self.successors(i).filter(|&k| k != i) {
                for (acc, (&bits, block)) in indirect.iter_mut().zip(self.row(k).iter().zip(0..)) {
                    let mut strict = bits;
                    if k / 64 == block {
                        strict &= !(1 << (k % 64));
                    }
                    *acc |= strict;
                }
            }
            covers.extend(
                self.successors(i)
                    .filter(|&j| j != i && indirect[j / 64] >> (j % 64) & 1 == 0)
                    .map(|j| (i, j)),
            );
        }
        covers
    }
}

/// Covering edges of a finite partial order given as a full `leq` table.
///
/// The result is the unique minimal edge set whose reflexive-transitive
/// closure equals `leq`, listed in row-major order.
pub fn transitive_reduction(leq: &RelationTable) -> Result<Vec<(usize, usize)>> {
    if !leq.is_reflexive() {
        return Err(Error::NotAPoset("not reflexive".into()));
    }
    if let Some((i, j)) = leq.find_symmetric_pair() {
        return Err(Error::NotAPoset(format!(
            "{i} and {j} are mutually related"
        )));
    }
    if !leq.is_transitive() {
        return Err(Error::NotAPoset("not transitive".into()));
    }
    Ok(leq.covering_pairs())
}
