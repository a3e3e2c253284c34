//! Finite multivalued structures and the hypergroup axioms.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A carrier of `n` labelled elements with a total table of (possibly empty) products.
///
/// Labels are for display only; equality compares tables.
#[derive(Clone)]
pub struct Multistructure {
    names: Vec<String>,
    table: Vec<Subset>,
}

impl Multistructure {
    pub fn new(names: Vec<String>, rows: Vec<Vec<Subset>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n, MAX_ELEMENTS));
        }
        if rows.len() != n {
            return Err(Error::MalformedTable(format!("{} rows for {n} elements", rows.len())));
        }
        let full = Subset::full(n);
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!("row {i} has {} entries", row.len())));
            }
            for (j, s) in row.iter().enumerate() {
                if !s.is_subset(full) {
                    return Err(Error::MalformedTable(format!("entry ({i},{j}) out of range")));
                }
            }
            table.extend(row);
        }
        Ok(Multistructure { names, table })
    }

    /// Builds a table from a product function; elements are labelled by index.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Subset) -> Result<Self> {
        Self::from_fn_named((0..n).map(|i| i.to_string()).collect(), f)
    }

    pub fn from_fn_named(names: Vec<String>, f: impl Fn(usize, usize) -> Subset) -> Result<Self> {
        let n = names.len();
        let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::new(names, rows)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.names.len());
        self.names = names;
        self
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.len())
    }

    /// `x.y`
    #[inline]
    pub fn product(&self, x: usize, y: usize) -> Subset {
        self.table[x * self.len() + y]
    }

    /// `X.Y`: union of `x.y` over `x` in `xs`, `y` in `ys`.
    pub fn product_of_sets(&self, xs: Subset, ys: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for x in xs {
            for y in ys {
                out |= self.product(x, y);
            }
        }
        out
    }

    /// `X.y`, the union of column `y` over `xs`.
    fn left_set_product(&self, xs: Subset, y: usize) -> Subset {
        xs.iter().fold(Subset::EMPTY, |acc, x| acc | self.product(x, y))
    }

    /// `x.Y`
    fn right_set_product(&self, x: usize, ys: Subset) -> Subset {
        ys.iter().fold(Subset::EMPTY, |acc, y| acc | self.product(x, y))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Subset]> {
        self.table.chunks(self.len())
    }

    /// Checks associativity, reproductivity and non-emptiness, recording the first failure of each.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.len();
        let full = self.carrier();

        let mut associativity_witness = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let xy = self.product(x, y);
                for z in 0..n {
                    let left = self.left_set_product(xy, z);
                    let right = self.right_set_product(x, self.product(y, z));
                    if left != right {
                        associativity_witness = Some(AssociativityWitness {
                            triple: (x, y, z),
                            left_grouped: left,
                            right_grouped: right,
                        });
                        break 'outer;
                    }
                }
            }
        }

        let reproductivity_witness = (0..n).find(|&x| {
            self.right_set_product(x, full) != full || self.left_set_product(full, x) != full
        });

        let empty_product_witness = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.product(x, y).is_empty());

        AxiomReport {
            associative: associativity_witness.is_none(),
            reproductive: reproductivity_witness.is_none(),
            all_products_nonempty: empty_product_witness.is_none(),
            associativity_witness,
            reproductivity_witness,
            empty_product_witness,
        }
    }

    /// The opposite operation `x ∘ y = y.x`.
    pub fn opposite(&self) -> Multistructure {
        let n = self.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(self.product(j, i));
            }
        }
        Multistructure {
            names: self.names.clone(),
            table,
        }
    }

    /// True when every product is a singleton.
    pub fn is_univalent(&self) -> bool {
        self.table.iter().all(|s| s.len() == 1)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Relabels elements: element `x` of `self` becomes `perm[x]` in the result.
    pub fn permuted(&self, perm: &[usize]) -> Multistructure {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut inverse = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inverse[p] = x;
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(self.product(inverse[i], inverse[j]).map(|z| perm[z]));
            }
        }
        Multistructure {
            names: inverse.iter().map(|&x| self.names[x].clone()).collect(),
            table,
        }
    }
}

impl PartialEq for Multistructure {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.len() == other.len()
    }
}

impl Eq for Multistructure {}

impl fmt::Debug for Multistructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Multistructure({})", self.len())?;
        for (i, row) in self.rows().enumerate() {
            write!(f, "  {:>4} |", self.names[i])?;
            for s in row {
                write!(f, " {s}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AssociativityWitness {
    pub triple: (usize, usize, usize),
    /// `(x.y).z`
    pub left_grouped: Subset,
    /// `x.(y.z)`
    pub right_grouped: Subset,
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub associative: bool,
    pub reproductive: bool,
    pub all_products_nonempty: bool,
    pub associativity_witness: Option<AssociativityWitness>,
    pub reproductivity_witness: Option<usize>,
    pub empty_product_witness: Option<(usize, usize)>,
}

impl AxiomReport {
    pub fn is_hypergroup(&self) -> bool {
        self.associative && self.reproductive && self.all_products_nonempty
    }
}

/// A multistructure that satisfies associativity and reproductivity.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergroup {
    inner: Multistructure,
}

impl Hypergroup {
    pub fn new(m: Multistructure) -> Result<Self> {
        let report = m.verify_axioms();
        if report.is_hypergroup() {
            Ok(Hypergroup { inner: m })
        } else {
            Err(Error::NotAHypergroup(Box::new(report)))
        }
    }

    /// The one-element hypergroup.
    pub fn trivial() -> Self {
        Hypergroup {
            inner: Multistructure::from_fn_named(vec!["e".into()], |_, _| Subset::singleton(0))
                .expect("one element"),
        }
    }

    pub fn as_multistructure(&self) -> &Multistructure {
        &self.inner
    }

    pub fn into_multistructure(self) -> Multistructure {
        self.inner
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.len() == 1
    }

    /// A hypergroup whose operation is univalent is a group.
    pub fn is_group(&self) -> bool {
        self.inner.is_univalent()
    }

    pub fn opposite(&self) -> Hypergroup {
        Hypergroup {
            inner: self.inner.opposite(),
        }
    }

    /// `x^k = x.x. ... .x` with `k` factors.
    pub fn power(&self, x: usize, k: usize) -> Result<Subset> {
        if k == 0 {
            return Err(Error::Precondition("power needs k >= 1".into()));
        }
        let single = Subset::singleton(x);
        Ok((1..k).fold(single, |acc, _| self.inner.product_of_sets(acc, single)))
    }

    pub fn cogroup_report(&self) -> CogroupReport {
        let m = &self.inner;
        let n = m.len();
        let full = m.carrier();
        let partition = (0..n).all(|x| {
            let mut covered = Subset::EMPTY;
            for y in 0..n {
                let b = m.product(x, y);
                if b.is_empty() {
                    return false;
                }
                // blocks already seen must either coincide with b or avoid it
                if covered.intersects(b) && !(0..y).any(|w| m.product(x, w) == b) {
                    return false;
                }
                covered |= b;
            }
            covered == full
        });
        let column_equipotent =
            (0..n).all(|y| (1..n).all(|x| m.product(x, y).len() == m.product(0, y).len()));
        CogroupReport {
            partition,
            column_equipotent,
        }
    }

    /// Both cogroup flags hold.
    pub fn is_cogroup(&self) -> bool {
        let r = self.cogroup_report();
        r.partition && r.column_equipotent
    }
}

impl Deref for Hypergroup {
    type Target = Multistructure;

    fn deref(&self) -> &Multistructure {
        &self.inner
    }
}

impl fmt::Debug for Hypergroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergroup of ")?;
        self.inner.fmt(f)
    }
}

/// Row partition and column cardinality flags.
///
/// `partition`: for every `x`, the products `x.y` are nonempty, pairwise equal or disjoint, and cover the carrier.
/// `column_equipotent`: for every `y`, `|x.y|` does not depend on `x`, as in any coset hypergroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CogroupReport {
    pub partition: bool,
    pub column_equipotent: bool,
}

/// An element map between two multistructures.
#[derive(Clone, Debug)]
pub struct Mapping<'a> {
    pub dom: &'a Multistructure,
    pub cod: &'a Multistructure,
    pub image: Vec<usize>,
}

impl<'a> Mapping<'a> {
    pub fn new(dom: &'a Multistructure, cod: &'a Multistructure, image: Vec<usize>) -> Result<Self> {
        if image.len() != dom.len() {
            return Err(Error::Precondition(format!(
                "mapping has {} images for {} elements",
                image.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&y| y >= cod.len()) {
            return Err(Error::Precondition(format!("image {bad} outside codomain")));
        }
        Ok(Mapping { dom, cod, image })
    }

    pub fn identity(m: &'a Multistructure) -> Self {
        Mapping {
            dom: m,
            cod: m,
            image: (0..m.len()).collect(),
        }
    }

    pub fn apply(&self, set: Subset) -> Subset {
        set.map(|x| self.image[x])
    }

    pub fn preimage(&self, set: Subset) -> Subset {
        self.image
            .iter()
            .enumerate()
            .filter(|&(_, &y)| set.contains(y))
            .map(|(x, _)| x)
            .collect()
    }

    /// `f⁻¹f(X)`
    pub fn fiber_closure(&self, set: Subset) -> Subset {
        self.preimage(self.apply(set))
    }

    pub fn is_surjective(&self) -> bool {
        self.apply(self.dom.carrier()) == self.cod.carrier()
    }

    pub fn is_injective(&self) -> bool {
        self.apply(self.dom.carrier()).len() == self.dom.len()
    }

    /// `f(x.y) = f(x).f(y)` for all pairs.
    pub fn is_morphism(&self) -> bool {
        let n = self.dom.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                self.apply(self.dom.product(x, y)) == self.cod.product(self.image[x], self.image[y])
            })
        })
    }

    /// Surjective, and `f⁻¹f(x.y) = f⁻¹(f(x).f(y)) = x.f⁻¹f(y) = f⁻¹f(x).y` for all pairs.
    pub fn is_reflector(&self) -> bool {
        if !self.is_surjective() {
            return false;
        }
        let n = self.dom.len();
        let fibers: Vec<Subset> = (0..n).map(|x| self.fiber_closure(Subset::singleton(x))).collect();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let a = self.fiber_closure(self.dom.product(x, y));
                let b = self.preimage(self.cod.product(self.image[x], self.image[y]));
                let c = self.dom.right_set_product(x, fibers[y]);
                let d = self.dom.left_set_product(fibers[x], y);
                a == b && b == c && c == d
            })
        })
    }

    /// `f⁻¹f(x).f⁻¹f(y) = f⁻¹(f(x).f(y))` for all pairs.
    pub fn satisfies_fiber_product_identity(&self) -> bool {
        let n = self.dom.len();
        let fibers: Vec<Subset> = (0..n).map(|x| self.fiber_closure(Subset::singleton(x))).collect();
        (0..n).all(|x| {
            (0..n).all(|y| {
                self.dom.product_of_sets(fibers[x], fibers[y])
                    == self.preimage(self.cod.product(self.image[x], self.image[y]))
            })
        })
    }
}
