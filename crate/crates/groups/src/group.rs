//! Finite groups as total operation tables over labeled elements.

use crate::error::GroupError;
use std::fmt;

/// First failure found while checking the group axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDefect {
    NotClosed { row: usize, col: usize },
    NoIdentity,
    NonAssociative { a: usize, b: usize, c: usize },
    NoInverse { element: usize },
}

impl fmt::Display for GroupDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDefect::NotClosed { row, col } => {
                write!(f, "entry at ({row},{col}) leaves the element set")
            }
            GroupDefect::NoIdentity => write!(f, "no two-sided identity"),
            GroupDefect::NonAssociative { a, b, c } => {
                write!(f, "associativity fails on ({a},{b},{c})")
            }
            GroupDefect::NoInverse { element } => write!(f, "element {element} has no inverse"),
        }
    }
}

/// A finite group: distinct element labels and a row-major operation
/// table of element indices (`table[a][b] = a∘b`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

/// Check the group axioms over an explicit table. Returns the identity on
/// success, or the first defect found.
pub fn verify_group(table: &[Vec<usize>]) -> Result<usize, GroupError> {
    let n = table.len();
    if table.iter().any(|row| row.len() != n) {
        return Err(GroupError::RaggedTable);
    }
    for (i, row) in table.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(GroupError::NotAGroup(GroupDefect::NotClosed { row: i, col: j }));
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or(GroupError::NotAGroup(GroupDefect::NoIdentity))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(GroupError::NotAGroup(GroupDefect::NonAssociative { a, b, c }));
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
            return Err(GroupError::NotAGroup(GroupDefect::NoInverse { element: a }));
        }
    }
    Ok(identity)
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if labels.len() != table.len() {
            return Err(GroupError::RaggedTable);
        }
        let identity = verify_group(&table)?;
        Ok(FiniteGroup { labels, table, identity })
    }

    /// Cyclic group of order `n` with labels "0".."n-1".
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup { labels, table, identity: 0 }
    }

    /// Direct product; labels are "a|b" pairs.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let n = g.order();
        let m = h.order();
        let id = |a: usize, b: usize| a * m + b;
        let labels = (0..n * m)
            .map(|i| format!("{}|{}", g.labels[i / m], h.labels[i % m]))
            .collect();
        let mut table = vec![vec![0; n * m]; n * m];
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        table[id(a1, b1)][id(a2, b2)] =
                            id(g.table[a1][a2], h.table[b1][b2]);
                    }
                }
            }
        }
        FiniteGroup { labels, table, identity: id(g.identity, h.identity) }
    }

    /// Same element set as `self` under the shifted operation
    /// `a∘'b = (a∘c)∘b` biased so that the identity moves; used to build
    /// multi-groups with several distinct operations on one set. For the
    /// cyclic group written additively this is `a + b + c`.
    pub fn shifted(&self, c: usize) -> Self {
        let n = self.order();
        assert!(c < n);
        let table = (0..n)
            .map(|a| (0..n).map(|b| self.table[self.table[a][c]][b]).collect())
            .collect::<Vec<Vec<usize>>>();
        let identity = verify_group(&table).expect("shifted table stays a group");
        FiniteGroup { labels: self.labels.clone(), table, identity }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity && self.table[b][a] == self.identity)
            .expect("verified group has inverses")
    }

    /// Order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by a set, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.op(x, g), self.op(g, x)] {
                    if !seen[y] {
                        seen[y] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_four_verifies() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(verify_group(z4.table()), Ok(0));
        assert_eq!(z4.inverse(1), 3);
        assert_eq!(z4.element_order(2), 2);
    }

    #[test]
    fn three_element_group_table() {
        // e·a=a, a·a=b, b·b=a: the cyclic group of order three in
        // disguise.
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let g = FiniteGroup::new(vec!["e".into(), "a".into(), "b".into()], table).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn non_associative_triple_reported() {
        // a small magma that is closed with identity but not associative
        let table = vec![
            vec![0, 1, 2],
            vec![1, 0, 0],
            vec![2, 0, 1],
        ];
        match verify_group(&table) {
            Err(GroupError::NotAGroup(GroupDefect::NonAssociative { .. })) => {}
            other => panic!("expected associativity defect, got {other:?}"),
        }
    }

    #[test]
    fn ragged_table_rejected() {
        assert_eq!(verify_group(&[vec![0, 1], vec![1]]), Err(GroupError::RaggedTable));
    }

    #[test]
    fn shifted_table_is_a_group_with_moved_identity() {
        let z4 = FiniteGroup::cyclic(4);
        let s = z4.shifted(2);
        assert_eq!(s.identity(), 2);
        // inverse of 1 under a+b+2: need 1+b+2 = 2 => b = 3
        assert_eq!(s.inverse(1), 3);
    }

    #[test]
    fn generated_subgroup() {
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(z6.generated(&[2]), vec![0, 2, 4]);
        assert_eq!(z6.generated(&[1]).len(), 6);
    }
}
