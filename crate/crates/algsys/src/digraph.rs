//! Weighted digraphs: arcs labeled by (operation tag, right operand).

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    /// which system contributed the arc (0 for single systems)
    pub op_tag: usize,
    /// the right operand `b` in `a∘b = c`
    pub weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    pub labels: Vec<String>,
    pub arcs: Vec<Arc>,
}

impl WeightedDigraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.from == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.to == v).count()
    }

    /// Weakly connected components over non-isolated and isolated
    /// vertices alike.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut dsu: Vec<usize> = (0..n).collect();
        fn root(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = root(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        for a in &self.arcs {
            let (x, y) = (root(&mut dsu, a.from), root(&mut dsu, a.to));
            if x != y {
                dsu[x.max(y)] = x.min(y);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..n {
            let r = root(&mut dsu, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Opposite pairs `(a, b)` joined by arcs both ways (a 2-edge with one
    /// arc in each direction).
    pub fn opposite_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in &self.arcs {
            if a.from < a.to
                && self
                    .arcs
                    .iter()
                    .any(|b| b.from == a.to && b.to == a.from && b.op_tag == a.op_tag)
            {
                out.push((a.from, a.to));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}
