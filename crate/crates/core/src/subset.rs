//! Sorted subsets of a group and incremental subgroup generation.

use std::fmt;

use serde::Serialize;

use crate::group::{AbelianGroup, Element};

/// A subset of a group, stored as sorted element indices. Equality ignores
/// the cached generators.
#[derive(Clone)]
pub struct ElementSet {
    group: AbelianGroup,
    members: Vec<usize>,
    generators: Option<Vec<usize>>,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.members == other.members
    }
}

impl Eq for ElementSet {}

impl std::hash::Hash for ElementSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.members.hash(state);
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.members.iter().map(|&i| self.group.element_at(i)))
            .finish()
    }
}

impl ElementSet {
    pub(crate) fn from_indices(group: &AbelianGroup, mut members: Vec<usize>) -> ElementSet {
        members.sort_unstable();
        members.dedup();
        ElementSet {
            group: group.clone(),
            members,
            generators: None,
        }
    }

    pub(crate) fn with_generators(mut self, gens: Vec<usize>) -> ElementSet {
        self.generators = Some(gens);
        self
    }

    pub fn from_elements<'a>(
        group: &AbelianGroup,
        elements: impl IntoIterator<Item = &'a Element>,
    ) -> crate::error::Result<ElementSet> {
        let mut idx = Vec::new();
        for e in elements {
            idx.push(group.index_of(e)?);
        }
        Ok(ElementSet::from_indices(group, idx))
    }

    pub fn zero(group: &AbelianGroup) -> ElementSet {
        ElementSet::from_indices(group, vec![0])
    }

    pub fn full(group: &AbelianGroup) -> ElementSet {
        ElementSet::from_indices(group, (0..group.order()).collect())
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members == [0]
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.group.order()
    }

    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    /// Additive generators, when the set was produced by a subgroup computation.
    pub fn generators(&self) -> Option<Vec<Element>> {
        self.generators
            .as_ref()
            .map(|g| g.iter().map(|&i| self.group.element_at(i)).collect())
    }

    pub(crate) fn generator_indices(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn contains_idx(&self, idx: usize) -> bool {
        self.members.binary_search(&idx).is_ok()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.group
            .index_of(x)
            .map(|i| self.contains_idx(i))
            .unwrap_or(false)
    }

    pub fn elements(&self) -> Vec<Element> {
        self.members
            .iter()
            .map(|&i| self.group.element_at(i))
            .collect()
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&i| other.contains_idx(i))
    }

    /// Coordinate vectors, for reports.
    pub fn to_coords(&self) -> Vec<Vec<u32>> {
        self.elements()
            .into_iter()
            .map(Element::into_coords)
            .collect()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_coords().serialize(s)
    }
}

/// Grows an additive subgroup one generator at a time.
pub(crate) struct SubgroupBuilder<'g> {
    group: &'g AbelianGroup,
    member: Vec<bool>,
    list: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> SubgroupBuilder<'g> {
    pub fn new(group: &'g AbelianGroup) -> Self {
        let mut member = vec![false; group.order()];
        member[0] = true;
        SubgroupBuilder {
            group,
            member,
            list: vec![0],
            gens: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.list
    }

    /// Adds `v` and everything it generates together with the current subgroup.
    /// Returns the range of newly added positions in [`Self::members`].
    pub fn insert(&mut self, v: usize) -> std::ops::Range<usize> {
        let start = self.list.len();
        if self.member[v] {
            return start..start;
        }
        self.gens.push(v);
        let old = start;
        let mut cur = v;
        while !self.member[cur] {
            for k in 0..old {
                let x = self.group.add_idx(self.list[k], cur);
                self.member[x] = true;
                self.list.push(x);
            }
            cur = self.group.add_idx(cur, v);
        }
        start..self.list.len()
    }

    pub fn finish(self) -> ElementSet {
        let gens = self.gens;
        ElementSet::from_indices(self.group, self.list).with_generators(gens)
    }
}

/// The additive subgroup generated by `gens`.
pub(crate) fn additive_span(group: &AbelianGroup, gens: &[usize]) -> ElementSet {
    let mut b = SubgroupBuilder::new(group);
    for &g in gens {
        b.insert(g);
    }
    b.finish()
}

/// `{ n*a : a in group }`.
pub(crate) fn multiples(group: &AbelianGroup, n: u64) -> ElementSet {
    let gens: Vec<usize> = (0..group.rank())
        .map(|i| group.scale_idx(n, group.basis_idx(i)))
        .collect();
    additive_span(group, &gens)
}

/// True when `set` is an additive subgroup.
pub(crate) fn is_subgroup(set: &ElementSet) -> bool {
    if !set.contains_idx(0) {
        return false;
    }
    let span = additive_span(set.group(), set.indices());
    span.len() == set.len()
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementSetSummary {
    pub size: usize,
    pub elements: Vec<Vec<u32>>,
}

impl From<&ElementSet> for ElementSetSummary {
    fn from(s: &ElementSet) -> Self {
        ElementSetSummary {
            size: s.len(),
            elements: s.to_coords(),
        }
    }
}
