//! Backtracking isomorphism search between multistructures.

use crate::multistructure::Multistructure;
use crate::subset::Subset;

/// Per-element data preserved by any isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct ElementInvariant {
    square_size: usize,
    square_contains_self: bool,
    row_sizes: Vec<usize>,
    col_sizes: Vec<usize>,
    /// number of `y` with `x ∈ x.y`, and with `x ∈ y.x`
    fixes: (usize, usize),
}

fn invariants(m: &Multistructure) -> Vec<ElementInvariant> {
    let n = m.len();
    (0..n)
        .map(|x| {
            let mut row_sizes: Vec<usize> = (0..n).map(|y| m.product(x, y).len()).collect();
            let mut col_sizes: Vec<usize> = (0..n).map(|y| m.product(y, x).len()).collect();
            row_sizes.sort_unstable();
            col_sizes.sort_unstable();
            let sq = m.product(x, x);
            ElementInvariant {
                square_size: sq.len(),
                square_contains_self: sq.contains(x),
                row_sizes,
                col_sizes,
                fixes: (
                    (0..n).filter(|&y| m.product(x, y).contains(x)).count(),
                    (0..n).filter(|&y| m.product(y, x).contains(x)).count(),
                ),
            }
        })
        .collect()
}

struct Search<'a> {
    a: &'a Multistructure,
    b: &'a Multistructure,
    candidates: Vec<Subset>,
    forward: Vec<Option<usize>>,
    backward: Vec<Option<usize>>,
    mapped_a: Subset,
    mapped_b: Subset,
}

impl Search<'_> {
    /// Checks every pair involving `x` against the partial map (`x` itself is already mapped).
    fn consistent(&self, x: usize) -> bool {
        self.mapped_a
            .iter()
            .all(|other| self.pair_consistent(x, other) && self.pair_consistent(other, x))
    }

    fn pair_consistent(&self, p: usize, q: usize) -> bool {
        let (gp, gq) = (self.forward[p].unwrap(), self.forward[q].unwrap());
        let src = self.a.product(p, q);
        let dst = self.b.product(gp, gq);
        if src.len() != dst.len() {
            return false;
        }
        // mapped members of src land in dst
        for z in src & self.mapped_a {
            if !dst.contains(self.forward[z].unwrap()) {
                return false;
            }
        }
        // mapped members of dst come from src
        for w in dst & self.mapped_b {
            if !src.contains(self.backward[w].unwrap()) {
                return false;
            }
        }
        // unmapped parts must be matchable by count
        (src - self.mapped_a).len() == (dst - self.mapped_b).len()
    }

    fn extend(&mut self, x: usize) -> bool {
        let n = self.a.len();
        if x == n {
            return true;
        }
        let options = self.candidates[x] - self.mapped_b;
        for y in options {
            self.forward[x] = Some(y);
            self.backward[y] = Some(x);
            self.mapped_a.insert(x);
            self.mapped_b.insert(y);
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.forward[x] = None;
            self.backward[y] = None;
            self.mapped_a.remove(x);
            self.mapped_b.remove(y);
        }
        false
    }
}

/// Finds a bijection `g` with `g(x.y) = g(x).g(y)`, trying targets in index order.
pub fn find_isomorphism(a: &Multistructure, b: &Multistructure) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let candidates = inv_a
        .iter()
        .map(|ia| {
            inv_b
                .iter()
                .enumerate()
                .filter(|(_, ib)| *ib == ia)
                .map(|(y, _)| y)
                .collect()
        })
        .collect();
    let n = a.len();
    let mut search = Search {
        a,
        b,
        candidates,
        forward: vec![None; n],
        backward: vec![None; n],
        mapped_a: Subset::EMPTY,
        mapped_b: Subset::EMPTY,
    };
    if search.extend(0) {
        Some(search.forward.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

pub fn are_isomorphic(a: &Multistructure, b: &Multistructure) -> bool {
    find_isomorphism(a, b).is_some()
}

/// True when `g` is a bijection carrying the table of `a` onto that of `b`.
pub fn is_isomorphism(a: &Multistructure, b: &Multistructure, g: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n || g.len() != n {
        return false;
    }
    let image: Subset = g.iter().copied().filter(|&y| y < n).collect();
    if image.len() != n {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| a.product(x, y).map(|z| g[z]) == b.product(g[x], g[y])))
}
