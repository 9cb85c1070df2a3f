//! Cyclic subgroups of a finite group and the generator classes that
//! partition it.
//!
//! Every element `x` generates exactly one cyclic subgroup `<x>`; grouping
//! elements by that subgroup gives the gen-classes `Gen(a)`, each of size
//! `totient(o(a))`. The enhanced power graph is the union of cliques on
//! these subgroups, so this is the structure every graph computation starts
//! from.

use std::collections::HashMap;

use crate::group::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicLattice {
    /// Distinct cyclic subgroups as sorted element lists, ordered by
    /// `(size, elements)`.
    subgroups: Vec<Vec<usize>>,
    generators: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    maximal: Vec<bool>,
    spectrum: Vec<u64>,
    maximal_orders: Vec<u64>,
}

impl CyclicLattice {
    pub fn build(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut keyed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for x in 0..n {
            let mut c = group.cyclic_subgroup(x);
            c.sort_unstable();
            keyed.entry(c).or_default().push(x);
        }
        let mut entries: Vec<(Vec<usize>, Vec<usize>)> = keyed.into_iter().collect();
        entries.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));

        let mut class_of = vec![0; n];
        for (c, (_, gens)) in entries.iter().enumerate() {
            for &x in gens {
                class_of[x] = c;
            }
        }
        let (subgroups, generators): (Vec<_>, Vec<_>) = entries.into_iter().unzip();

        // entries are sorted by size, so a proper superset can only come later
        let maximal = (0..subgroups.len())
            .map(|i| !subgroups[i + 1..].iter().any(|d| d.len() > subgroups[i].len() && is_subset(&subgroups[i], d)))
            .collect::<Vec<bool>>();

        let mut spectrum: Vec<u64> = subgroups.iter().map(|c| c.len() as u64).collect();
        spectrum.sort_unstable();
        spectrum.dedup();
        let maximal_orders =
            spectrum.iter().copied().filter(|&a| !spectrum.iter().any(|&b| b != a && b % a == 0)).collect();

        CyclicLattice { subgroups, generators, class_of, maximal, spectrum, maximal_orders }
    }

    /// Number of distinct cyclic subgroups.
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Vec<usize>] {
        &self.subgroups
    }

    pub fn subgroup(&self, c: usize) -> &[usize] {
        &self.subgroups[c]
    }

    /// `Gen` of the `c`-th subgroup.
    pub fn generators(&self, c: usize) -> &[usize] {
        &self.generators[c]
    }

    /// Index of the subgroup `<x>`.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// All `y` with `<y> = <x>`.
    pub fn gen_class(&self, x: usize) -> &[usize] {
        &self.generators[self.class_of[x]]
    }

    pub fn is_maximal(&self, c: usize) -> bool {
        self.maximal[c]
    }

    /// Indices of the maximal cyclic subgroups.
    pub fn maximal_subgroups(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&c| self.maximal[c])
    }

    /// The set of element orders, ascending.
    pub fn pi_e(&self) -> &[u64] {
        &self.spectrum
    }

    /// Maximal members of [`pi_e`](Self::pi_e) under divisibility.
    pub fn mu(&self) -> &[u64] {
        &self.maximal_orders
    }
}

/// Both slices sorted ascending.
fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}
