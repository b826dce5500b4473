//! Partial binary systems: a label list with a partial operation table.

use crate::error::AlgsysError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialBinarySystem {
    pub labels: Vec<String>,
    /// `table[a][b] = Some(a∘b)`, `None` where the product is undefined
    pub table: Vec<Vec<Option<usize>>>,
}

impl PartialBinarySystem {
    pub fn new(
        labels: Vec<String>,
        table: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, AlgsysError> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(AlgsysError::RaggedTable);
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &cell) in row.iter().enumerate() {
                if let Some(v) = cell {
                    if v >= n {
                        return Err(AlgsysError::NotClosed { row: i, col: j });
                    }
                }
            }
        }
        Ok(PartialBinarySystem { labels, table })
    }

    /// A total system from a full table.
    pub fn total(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, AlgsysError> {
        let wrapped = table
            .into_iter()
            .map(|row| row.into_iter().map(Some).collect())
            .collect();
        PartialBinarySystem::new(labels, wrapped)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn defined_count(&self) -> usize {
        self.table
            .iter()
            .flat_map(|r| r.iter())
            .filter(|c| c.is_some())
            .count()
    }

    pub fn is_total(&self) -> bool {
        self.defined_count() == self.order() * self.order()
    }

    /// The worked partial example: elements 1, 2, a, b with six defined
    /// products (1∘2=a, 1∘a=b, 2∘1=b, 2∘b=a, a∘b=1, b∘a=2).
    pub fn sparse_example() -> Self {
        let labels = vec!["1".into(), "2".into(), "a".into(), "b".into()];
        let n = None;
        let table = vec![
            vec![n, Some(2), Some(3), n],
            vec![Some(3), n, n, Some(2)],
            vec![n, n, n, Some(0)],
            vec![n, n, Some(1), n],
        ];
        PartialBinarySystem::new(labels, table).unwrap()
    }

    /// The three-element group table used alongside the sparse example.
    pub fn triple_example() -> Self {
        PartialBinarySystem::total(
            vec!["e".into(), "a".into(), "b".into()],
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        )
        .unwrap()
    }

    /// The cyclic group of order n as a total system.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        PartialBinarySystem::total(labels, table).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_example_has_six_products() {
        assert_eq!(PartialBinarySystem::sparse_example().defined_count(), 6);
    }

    #[test]
    fn ragged_tables_rejected() {
        assert!(PartialBinarySystem::new(vec!["a".into()], vec![]).is_err());
    }

    #[test]
    fn closure_checked() {
        let bad = PartialBinarySystem::new(
            vec!["a".into(), "b".into()],
            vec![vec![Some(0), Some(5)], vec![None, None]],
        );
        assert!(matches!(bad, Err(AlgsysError::NotClosed { row: 0, col: 1 })));
    }
}
