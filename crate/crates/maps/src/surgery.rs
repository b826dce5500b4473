//! Edge-twisting surgery: give one edge's band an extra twist.

use crate::error::MapError;
use crate::map::CombinatorialMap;

/// Twist edge `e`: conjugate the vertex permutation by the transposition
/// of `(e, β)` and `(e, αβ)`, which flips how the far end presents.
/// Involutive; changes the face count by exactly one.
pub fn edge_twist(m: &CombinatorialMap, e: usize) -> Result<CombinatorialMap, MapError> {
    if e >= m.edge_count() {
        return Err(MapError::InvalidInput(format!("edge {e} out of range")));
    }
    let a = 4 * e + 2;
    let b = 4 * e + 3;
    let tau = |x: usize| -> usize {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    let n = m.cell_count();
    let mut p = vec![0usize; n];
    for x in 0..n {
        p[tau(x)] = tau(m.apply(x));
    }
    CombinatorialMap::from_permutation(m.edge_count(), p)
}
