//! Lattices whose elements are subsets of a point set.

use std::collections::HashMap;

use crate::error::Result;
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::subset::{render, Subset};

/// A family of subsets ordered by inclusion (or reverse inclusion), with
/// the lattice it forms and the lookup from set to element.
#[derive(Debug, Clone)]
pub struct SetLattice {
    lattice: FiniteLattice,
    point_labels: Vec<String>,
    sets: Vec<Subset>,
    index: HashMap<Subset, usize>,
    reversed: bool,
}

impl SetLattice {
    /// `sets` are sorted and deduplicated; element `i` of the lattice is the
    /// `i`-th set in numeric order (descending when `reversed`).
    pub fn new(point_labels: &[String], mut sets: Vec<Subset>, reversed: bool) -> Result<Self> {
        sets.sort();
        sets.dedup();
        if reversed {
            sets.reverse();
        }
        let labels = sets.iter().map(|&s| render(s, point_labels)).collect();
        let lattice = FiniteLattice::of_sets(labels, &sets, reversed)?;
        let index = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(SetLattice {
            lattice,
            point_labels: point_labels.to_vec(),
            sets,
            index,
            reversed,
        })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> FiniteLattice {
        self.lattice
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn set(&self, element: usize) -> Subset {
        self.sets[element]
    }

    pub fn element_of(&self, set: Subset) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub fn point_labels(&self) -> &[String] {
        &self.point_labels
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// `Up(P)`: all upsets of `P` ordered by inclusion.
pub fn birkhoff_lattice(p: &FinitePoset) -> Result<SetLattice> {
    SetLattice::new(p.labels(), p.upsets(), false)
}
