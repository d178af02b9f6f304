//! Maximum-cardinality bipartite matching (Hopcroft-Karp).

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// A maximum matching: `left_match[u]` is the right node matched to left node `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub left_match: Vec<Option<usize>>,
    pub right_match: Vec<Option<usize>>,
    pub size: usize,
}

/// Maximum matching of the bipartite graph with `left` and `right` nodes and
/// `adjacency[u]` listing the right neighbours of left node `u`.
///
/// Deterministic: neighbours are tried in the order given.
pub fn max_bipartite_matching(left: usize, right: usize, adjacency: &[Vec<usize>]) -> Matching {
    assert_eq!(adjacency.len(), left, "one adjacency list per left node");
    let mut pair_u = vec![NIL; left];
    let mut pair_v = vec![NIL; right];
    let mut dist = vec![0usize; left];
    let mut size = 0;

    loop {
        // BFS layers from free left nodes
        let mut queue = VecDeque::new();
        for u in 0..left {
            if pair_u[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                let w = pair_v[v];
                if w == NIL {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..left {
            if pair_u[u] == NIL && augment(u, adjacency, &mut pair_u, &mut pair_v, &mut dist) {
                size += 1;
            }
        }
    }

    Matching {
        left_match: pair_u.iter().map(|&v| (v != NIL).then_some(v)).collect(),
        right_match: pair_v.iter().map(|&u| (u != NIL).then_some(u)).collect(),
        size,
    }
}

fn augment(
    u: usize,
    adjacency: &[Vec<usize>],
    pair_u: &mut [usize],
    pair_v: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &adjacency[u] {
        let w = pair_v[v];
        if w == NIL || (dist[w] == dist[u] + 1 && augment(w, adjacency, pair_u, pair_v, dist)) {
            pair_u[u] = v;
            pair_v[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Largest matching by trying every assignment of left nodes.
    fn brute_force(right: usize, adjacency: &[Vec<usize>]) -> usize {
        fn go(u: usize, adjacency: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
            if u == adjacency.len() {
                return 0;
            }
            let mut best = go(u + 1, adjacency, used);
            for &v in &adjacency[u] {
                if !used[v] {
                    used[v] = true;
                    best = best.max(1 + go(u + 1, adjacency, used));
                    used[v] = false;
                }
            }
            best
        }
        go(0, adjacency, &mut vec![false; right])
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_bipartite_matching(1, 1, &[vec![0]]).size, 1);
        assert_eq!(max_bipartite_matching(2, 1, &[vec![0], vec![0]]).size, 1);
        assert_eq!(max_bipartite_matching(0, 0, &[]).size, 0);
        let m = max_bipartite_matching(2, 2, &[vec![0, 1], vec![0]]);
        assert_eq!(m.size, 2);
        assert_eq!(m.left_match, vec![Some(1), Some(0)]);
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            left in 0usize..=10,
            right in 1usize..=10,
            bits in proptest::collection::vec(any::<u16>(), 10),
        ) {
            let adjacency: Vec<Vec<usize>> = (0..left)
                .map(|u| (0..right).filter(|&v| bits[u] >> v & 1 == 1).collect())
                .collect();
            let m = max_bipartite_matching(left, right, &adjacency);
            prop_assert_eq!(m.size, brute_force(right, &adjacency));
            // consistent and uses real edges
            for (u, v) in m.left_match.iter().enumerate() {
                if let Some(v) = *v {
                    prop_assert!(adjacency[u].contains(&v));
                    prop_assert_eq!(m.right_match[v], Some(u));
                }
            }
            prop_assert_eq!(m.left_match.iter().flatten().count(), m.size);
        }
    }
}
