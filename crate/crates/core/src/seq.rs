//! Graphical degree sequences.

use crate::error::CoreError;

/// Havel–Hakimi test: true iff a simple graph realizes the sequence.
/// Input may be unsorted; it is sorted non-increasingly internally.
pub fn is_graphical_hh(seq: &[usize]) -> Result<bool, CoreError> {
    if seq.is_empty() {
        return Err(CoreError::InvalidInput("empty degree sequence".into()));
    }
    let mut s: Vec<usize> = seq.to_vec();
    loop {
        s.sort_unstable_by(|a, b| b.cmp(a));
        while let Some(&0) = s.last() {
            s.pop();
        }
        if s.is_empty() {
            return Ok(true);
        }
        let d = s[0];
        if d >= s.len() {
            return Ok(false);
        }
        s.remove(0);
        for item in s.iter_mut().take(d) {
            if *item == 0 {
                return Ok(false);
            }
            *item -= 1;
        }
    }
}

/// Erdős–Gallai test: even degree sum and the partial-sum inequality for
/// every prefix length. Agrees with `is_graphical_hh` on every input.
pub fn is_graphical_eg(seq: &[usize]) -> Result<bool, CoreError> {
    if seq.is_empty() {
        return Err(CoreError::InvalidInput("empty degree sequence".into()));
    }
    let mut s: Vec<usize> = seq.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let p = s.len();
    if s[0] >= p {
        return Ok(false);
    }
    let total: usize = s.iter().sum();
    if total % 2 != 0 {
        return Ok(false);
    }
    for n in 1..=p {
        let lhs: usize = s[..n].iter().sum();
        let rhs: usize = n * (n - 1) + s[n..].iter().map(|&d| d.min(n)).sum::<usize>();
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force realizability over all simple graphs on `p` labeled
/// vertices. Exponential; oracle use only.
pub fn is_graphical_brute(seq: &[usize]) -> Result<bool, CoreError> {
    if seq.is_empty() {
        return Err(CoreError::InvalidInput("empty degree sequence".into()));
    }
    let p = seq.len();
    if p > 7 {
        return Err(CoreError::BudgetExceeded {
            needed: 1u128 << (p * (p - 1) / 2),
            budget: 1 << 21,
        });
    }
    let mut target: Vec<usize> = seq.to_vec();
    target.sort_unstable_by(|a, b| b.cmp(a));
    let pairs: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .collect();
    for mask in 0u32..(1 << pairs.len()) {
        let mut deg = vec![0usize; p];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        if deg == target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All realizable sorted degree multisets on `p` labeled vertices, as a
/// sorted list. One pass over all `2^(p(p-1)/2)` simple graphs.
pub fn realizable_sequences(p: usize) -> Vec<Vec<usize>> {
    assert!(p <= 7, "realizable_sequences is an oracle for p <= 7");
    let pairs: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut deg = vec![0usize; p];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        seen.insert(deg);
    }
    seen.into_iter().collect()
}

/// All non-increasing sequences of length `p` with entries in `0..p`.
pub fn all_sequences(p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(p: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for d in (0..=max).rev() {
            cur.push(d);
            rec(p, d, cur, out);
            cur.pop();
        }
    }
    rec(p, p - 1, &mut cur, &mut out);
    out
}
