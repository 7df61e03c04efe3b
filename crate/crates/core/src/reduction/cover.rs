//! Exhaustive minimum vertex cover, the oracle for small graphs.

use super::{Graph, ReductionError, VertexCover};

pub const MAX_BRUTE_FORCE_VERTICES: usize = 20;

fn check_size(g: &Graph) -> Result<(), ReductionError> {
    if g.n() > MAX_BRUTE_FORCE_VERTICES {
        return Err(ReductionError::GraphTooLarge {
            n: g.n(),
            limit: MAX_BRUTE_FORCE_VERTICES,
        });
    }
    Ok(())
}

/// Calls `visit` on every `size`-subset of `1..=n` in lexicographic order
/// until it returns false.
fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut pick: Vec<usize> = (1..=size).collect();
    loop {
        if !visit(&pick) {
            return;
        }
        let Some(i) = (0..size).rev().find(|&i| pick[i] < n - (size - 1 - i)) else {
            return;
        };
        pick[i] += 1;
        for t in i + 1..size {
            pick[t] = pick[t - 1] + 1;
        }
    }
}

fn covers(g: &Graph, pick: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|(i, j)| pick.contains(i) || pick.contains(j))
}

/// Lexicographically smallest minimum cover, if its size is at most `k`.
pub fn vertex_cover_brute_force(
    g: &Graph,
    k: usize,
) -> Result<Option<VertexCover>, ReductionError> {
    check_size(g)?;
    for size in 0..=k.min(g.n()) {
        let mut found = None;
        for_each_subset(g.n(), size, |pick| {
            if covers(g, pick) {
                found = Some(VertexCover::new(pick.iter().copied()));
                return false;
            }
            true
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// All covers of minimum size, in lexicographic order.
pub fn minimum_vertex_covers(g: &Graph) -> Result<Vec<VertexCover>, ReductionError> {
    check_size(g)?;
    for size in 0..=g.n() {
        let mut found = Vec::new();
        for_each_subset(g.n(), size, |pick| {
            if covers(g, pick) {
                found.push(VertexCover::new(pick.iter().copied()));
            }
            true
        });
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("the full vertex set covers every edge")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |p| {
            seen.push(p.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        let mut empty = 0;
        for_each_subset(3, 0, |p| {
            assert!(p.is_empty());
            empty += 1;
            true
        });
        assert_eq!(empty, 1);
    }

    #[test]
    fn classic_graphs() {
        let k2 = Graph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(
            vertex_cover_brute_force(&k2, 1).unwrap(),
            Some(VertexCover::new([1]))
        );

        let k3 = Graph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(vertex_cover_brute_force(&k3, 1).unwrap(), None);
        let c = vertex_cover_brute_force(&k3, 2).unwrap().unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.is_cover_of(&k3));

        let p3 = Graph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        assert_eq!(
            vertex_cover_brute_force(&p3, 1).unwrap(),
            Some(VertexCover::new([2]))
        );

        assert_eq!(minimum_vertex_covers(&k3).unwrap().len(), 3);
        let empty = Graph::new(3, vec![]).unwrap();
        assert_eq!(
            minimum_vertex_covers(&empty).unwrap(),
            vec![VertexCover::default()]
        );
    }

    #[test]
    fn refuses_large_graphs() {
        let g = Graph::new(21, vec![]).unwrap();
        assert!(matches!(
            vertex_cover_brute_force(&g, 1),
            Err(ReductionError::GraphTooLarge { n: 21, limit: 20 })
        ));
    }
}
