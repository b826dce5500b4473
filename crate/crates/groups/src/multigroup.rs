//! Multi-groups: a label universe carrying one or more group tables over
//! (possibly overlapping) subsets.

use crate::error::GroupError;
use crate::group::FiniteGroup;

/// One constituent group: which universe elements it covers, in table
/// order, plus its table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    /// `members[i]` is the universe id of the constituent's element `i`.
    pub members: Vec<usize>,
    pub group: FiniteGroup,
}

/// A union of finite groups over a shared label universe. Overlap is by
/// label equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGroup {
    universe: Vec<String>,
    constituents: Vec<Constituent>,
}

impl MultiGroup {
    /// Build from constituent groups; universe labels are the union of
    /// the constituents' labels in first-seen order.
    pub fn new(groups: Vec<FiniteGroup>) -> Result<Self, GroupError> {
        if groups.is_empty() {
            return Err(GroupError::UnknownElement("no constituents".into()));
        }
        let mut universe: Vec<String> = Vec::new();
        let mut constituents = Vec::new();
        for g in groups {
            let members = g
                .labels()
                .iter()
                .map(|l| {
                    if let Some(i) = universe.iter().position(|u| u == l) {
                        i
                    } else {
                        universe.push(l.clone());
                        universe.len() - 1
                    }
                })
                .collect();
            constituents.push(Constituent { members, group: g });
        }
        Ok(MultiGroup { universe, constituents })
    }

    /// A single group as a trivial multi-group.
    pub fn single(group: FiniteGroup) -> Self {
        MultiGroup::new(vec![group]).expect("one constituent")
    }

    /// The same group set under `n` shifted operations (identical element
    /// set, distinct tables when the shifts differ).
    pub fn same_set_shifts(group: &FiniteGroup, shifts: &[usize]) -> Self {
        let groups = shifts.iter().map(|&c| group.shifted(c)).collect();
        MultiGroup::new(groups).expect("constituents share the label set")
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn universe_size(&self) -> usize {
        self.universe.len()
    }

    pub fn constituents(&self) -> &[Constituent] {
        &self.constituents
    }

    pub fn constituent_count(&self) -> usize {
        self.constituents.len()
    }

    pub fn label(&self, u: usize) -> &str {
        &self.universe[u]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.universe.iter().position(|l| l == label)
    }

    /// Universe ids of constituent `i`, sorted.
    pub fn member_set(&self, i: usize) -> Vec<usize> {
        let mut m = self.constituents[i].members.clone();
        m.sort_unstable();
        m
    }

    /// Does constituent `i` contain universe element `u`?
    pub fn contains(&self, i: usize, u: usize) -> bool {
        self.constituents[i].members.contains(&u)
    }

    /// Local index of universe element `u` inside constituent `i`.
    pub fn local_index(&self, i: usize, u: usize) -> Option<usize> {
        self.constituents[i].members.iter().position(|&m| m == u)
    }

    /// `a ∘_i b` over universe ids; `None` when either element is outside
    /// the constituent.
    pub fn op(&self, i: usize, a: usize, b: usize) -> Option<usize> {
        let c = &self.constituents[i];
        let la = self.local_index(i, a)?;
        let lb = self.local_index(i, b)?;
        Some(c.members[c.group.op(la, lb)])
    }

    /// Inverse of `a` inside constituent `i`.
    pub fn inverse(&self, i: usize, a: usize) -> Option<usize> {
        let c = &self.constituents[i];
        let la = self.local_index(i, a)?;
        Some(c.members[c.group.inverse(la)])
    }

    pub fn identity_of(&self, i: usize) -> usize {
        let c = &self.constituents[i];
        c.members[c.group.identity()]
    }

    /// Order of `a` in constituent `i`.
    pub fn element_order(&self, i: usize, a: usize) -> Option<usize> {
        let c = &self.constituents[i];
        Some(c.group.element_order(self.local_index(i, a)?))
    }

    /// Number of constituents containing both `g` and `h`.
    pub fn joint_number(&self, g: usize, h: usize) -> Result<usize, GroupError> {
        if g >= self.universe.len() || h >= self.universe.len() {
            return Err(GroupError::UnknownElement(format!("id {}", g.max(h))));
        }
        Ok((0..self.constituent_count())
            .filter(|&i| self.contains(i, g) && self.contains(i, h))
            .count())
    }

    /// Sum over operations of the joint number of `g` and `g∘h`, counting
    /// zero where `g∘h` is undefined.
    pub fn joint_sum(&self, g: usize, h: usize) -> Result<usize, GroupError> {
        if g >= self.universe.len() || h >= self.universe.len() {
            return Err(GroupError::UnknownElement(format!("id {}", g.max(h))));
        }
        let mut total = 0;
        for i in 0..self.constituent_count() {
            if let Some(gh) = self.op(i, g, h) {
                total += self.joint_number(g, gh)?;
            }
        }
        Ok(total)
    }

    /// Do all constituents cover the same universe subset?
    pub fn equal_member_sets(&self) -> bool {
        let first = self.member_set(0);
        (1..self.constituent_count()).all(|i| self.member_set(i) == first)
    }

    /// Sorted intersection of two constituents' member sets.
    pub fn overlap(&self, i: usize, j: usize) -> Vec<usize> {
        let a = self.member_set(i);
        let b = self.member_set(j);
        a.into_iter().filter(|u| b.contains(u)).collect()
    }

    /// Is there an overlap chain connecting every pair of constituents?
    pub fn overlap_chain_connected(&self) -> bool {
        let n = self.constituent_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for j in 0..n {
                if !seen[j] && !self.overlap(i, j).is_empty() {
                    seen[j] = true;
                    frontier.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
