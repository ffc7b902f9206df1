//! Directed multigraph isomorphism by backtracking.
//!
//! Vertices are matched by their (out-degree, in-degree, loop count)
//! signature; a partial map is extended one vertex at a time and rejected
//! as soon as an arrow multiplicity between mapped vertices disagrees.

use crate::error::{Error, Result};

use super::{NatMatrix, Quiver};

/// Default vertex bound for [`graphs_isomorphic`].
pub const DEFAULT_VERTEX_BOUND: usize = 12;

/// A vertex bijection `map[v_in_first] = v_in_second` carrying arrow
/// multiplicities of the first quiver onto the second, if one exists.
pub fn graphs_isomorphic(
    a: &Quiver,
    b: &Quiver,
    vertex_bound: usize,
) -> Result<Option<Vec<usize>>> {
    matrices_isomorphic(&a.incidence(), &b.incidence(), vertex_bound)
}

/// Same as [`graphs_isomorphic`] on incidence matrices.
pub fn matrices_isomorphic(
    a: &NatMatrix,
    b: &NatMatrix,
    vertex_bound: usize,
) -> Result<Option<Vec<usize>>> {
    if !a.is_square() || !b.is_square() {
        return Err(Error::DimensionMismatch(
            "incidence matrices must be square".into(),
        ));
    }
    let n = a.rows();
    if n > vertex_bound {
        return Err(Error::VertexGuard {
            vertices: n,
            bound: vertex_bound,
        });
    }
    if b.rows() != n || a.total() != b.total() {
        return Ok(None);
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    // rarest signatures first, ties broken by total degree
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let freq = sig_a.iter().filter(|s| **s == sig_a[v]).count();
        (freq, std::cmp::Reverse(sig_a[v].0 + sig_a[v].1), v)
    });

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let search = Search {
        a,
        b,
        sig_a: &sig_a,
        sig_b: &sig_b,
        order: &order,
    };
    Ok(search.extend(0, &mut map, &mut used).then_some(map))
}

fn signatures(m: &NatMatrix) -> Vec<(u64, u64, u64)> {
    let n = m.rows();
    (0..n)
        .map(|v| {
            let out: u64 = m.row(v).iter().sum();
            let inc: u64 = (0..n).map(|u| m.get(u, v)).sum();
            (out, inc, m.get(v, v))
        })
        .collect()
}

struct Search<'a> {
    a: &'a NatMatrix,
    b: &'a NatMatrix,
    sig_a: &'a [(u64, u64, u64)],
    sig_b: &'a [(u64, u64, u64)],
    order: &'a [usize],
}

impl Search<'_> {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&u) = self.order.get(depth) else {
            return true;
        };
        for cand in 0..map.len() {
            if used[cand] || self.sig_a[u] != self.sig_b[cand] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&w| {
                let mw = map[w];
                self.a.get(u, w) == self.b.get(cand, mw) && self.a.get(w, u) == self.b.get(mw, cand)
            });
            if !consistent {
                continue;
            }
            map[u] = cand;
            used[cand] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[cand] = false;
            map[u] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<u64>>) -> NatMatrix {
        NatMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn path_versus_loop() {
        let path = m(vec![vec![0, 1], vec![0, 0]]);
        let looped = m(vec![vec![1, 0], vec![0, 0]]);
        assert_eq!(matrices_isomorphic(&path, &looped, 12).unwrap(), None);
    }

    #[test]
    fn relabeled_cycle() {
        let a = m(vec![vec![0, 2, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        let b = m(vec![vec![0, 0, 1], vec![2, 0, 0], vec![0, 1, 0]]);
        let map = matrices_isomorphic(&a, &b, 12)
            .unwrap()
            .expect("isomorphic");
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(a.get(u, v), b.get(map[u], map[v]));
            }
        }
    }

    #[test]
    fn vertex_guard() {
        let big = NatMatrix::identity(13);
        assert!(matches!(
            matrices_isomorphic(&big, &big, 12),
            Err(Error::VertexGuard {
                vertices: 13,
                bound: 12
            })
        ));
    }
}
