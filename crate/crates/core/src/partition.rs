//! Equivalence relations on `0..n`, stored as restricted-growth strings.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A partition of `0..n`. Class indices appear in order of first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivalenceRelation {
    class_of: Vec<usize>,
    classes: usize,
}

impl EquivalenceRelation {
    /// Relabels an arbitrary class assignment into canonical form.
    pub fn from_labels<T: Eq + Clone>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let class_of = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(l.clone());
                    seen.len() - 1
                }
            })
            .collect();
        EquivalenceRelation {
            class_of,
            classes: seen.len(),
        }
    }

    /// Builds the relation from a list of blocks, which must partition `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x >= n {
                    return Err(Error::InvalidPartition(format!("element {x} out of range")));
                }
                if labels[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("element {x} in two blocks")));
                }
                labels[x] = b;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!("element {x} in no block")));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn identity(n: usize) -> Self {
        EquivalenceRelation {
            class_of: (0..n).collect(),
            classes: n,
        }
    }

    pub fn total(n: usize) -> Self {
        EquivalenceRelation {
            class_of: vec![0; n],
            classes: n.min(1),
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_identity(&self) -> bool {
        self.classes == self.class_of.len()
    }

    pub fn is_total(&self) -> bool {
        self.classes <= 1
    }

    /// Members of each class, in class order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Class masks; only valid for carriers of at most 64 elements.
    pub fn class_masks(&self) -> Vec<Subset> {
        let mut out = vec![Subset::EMPTY; self.classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].insert(x);
        }
        out
    }

    /// Union of all classes meeting `set`.
    pub fn saturate(&self, set: Subset) -> Subset {
        let masks = self.class_masks();
        saturate_with(&masks, &self.class_of, set)
    }

    /// True when every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &EquivalenceRelation) -> bool {
        if self.len() != coarser.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            let d = coarser.class_of[x];
            if image[c] == usize::MAX {
                image[c] = d;
            } else if image[c] != d {
                return false;
            }
        }
        true
    }

    /// Pulls a partition of the class set back to the carrier.
    pub fn lift(&self, on_classes: &EquivalenceRelation) -> EquivalenceRelation {
        assert_eq!(on_classes.len(), self.classes);
        let labels: Vec<usize> = self
            .class_of
            .iter()
            .map(|&c| on_classes.class_of[c])
            .collect();
        Self::from_labels(&labels)
    }
}

pub(crate) fn saturate_with(masks: &[Subset], class_of: &[usize], set: Subset) -> Subset {
    let mut out = Subset::EMPTY;
    let mut rest = set;
    while let Some(x) = rest.first() {
        let m = masks[class_of[x]];
        out |= m;
        rest = rest - m;
    }
    out
}

/// Iterates over all partitions of `0..n` as restricted-growth strings, in lexicographic order.
pub struct RestrictedGrowth {
    rgs: Vec<usize>,
    max_prefix: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            rgs: vec![0; n],
            max_prefix: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = EquivalenceRelation;

    fn next(&mut self) -> Option<EquivalenceRelation> {
        if self.done {
            return None;
        }
        let n = self.rgs.len();
        let current = EquivalenceRelation {
            class_of: self.rgs.clone(),
            classes: if n == 0 { 0 } else { self.max_prefix[n - 1] + 1 },
        };
        // advance: rightmost position that may still grow
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.max_prefix[i - 1] {
                self.rgs[i] += 1;
                self.max_prefix[i] = self.max_prefix[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max_prefix[j] = self.max_prefix[j - 1];
                }
                break;
            }
        }
        Some(current)
    }
}

/// Bell number B(n), the count of partitions of an n-set.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}
