//! Seeded generators for elections, bribery instances and RX3C instances.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::election::{Ballot, Election, Rule};
use crate::gadgets::Rx3cInstance;
use crate::model::{BriberyInstance, OperationKind};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random subset of `0..m`.
pub fn random_ballot<R: Rng>(rng: &mut R, m: usize) -> Ballot {
    Ballot::new((0..m).filter(|_| rng.gen_bool(0.5)))
}

pub fn random_election<R: Rng>(rng: &mut R, m: usize, n: usize) -> Election {
    let votes = (0..n).map(|_| random_ballot(rng, m)).collect();
    Election::new(m, votes).expect("random ballots stay in range")
}

/// Parameter ranges for [`random_instance`]. `k` is additionally capped at `m`.
#[derive(Clone, Debug)]
pub struct Shape {
    pub m: RangeInclusive<usize>,
    pub n: RangeInclusive<usize>,
    pub k: RangeInclusive<usize>,
    pub budget: RangeInclusive<usize>,
    pub radius: RangeInclusive<usize>,
}

pub fn random_instance<R: Rng>(rng: &mut R, rule: Rule, op: OperationKind, shape: &Shape) -> BriberyInstance {
    let m = rng.gen_range(shape.m.clone());
    let n = rng.gen_range(shape.n.clone());
    let k = rng.gen_range(*shape.k.start()..=(*shape.k.end()).min(m));
    let election = random_election(rng, m, n);
    let mut j: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.4)).collect();
    if j.is_empty() {
        j.push(rng.gen_range(0..m));
    }
    let budget = rng.gen_range(shape.budget.clone());
    let radius = rng.gen_range(shape.radius.clone());
    BriberyInstance::new(election, rule, op, j, k, budget, radius).expect("random instance is well formed")
}

/// The union of three random perfect partitions of `0..3κ` into triples; the
/// first partition (triples `0..κ`) is an exact cover.
pub fn random_rx3c<R: Rng>(rng: &mut R, kappa: usize) -> Rx3cInstance {
    let mut triples = Vec::with_capacity(3 * kappa);
    let mut universe: Vec<usize> = (0..3 * kappa).collect();
    for _ in 0..3 {
        universe.shuffle(rng);
        triples.extend(universe.chunks(3).map(|c| [c[0], c[1], c[2]]));
    }
    Rx3cInstance::new(kappa, triples).expect("three partitions cover every element three times")
}

/// A random graph in which every vertex has the same degree `d`, built as the
/// union of `d` random perfect matchings (retrying on collisions). Needs `n`
/// even when `d` is odd.
pub fn random_regular_graph<R: Rng>(rng: &mut R, n: usize, d: usize) -> Option<crate::gadgets::Graph> {
    if n == 0 || d >= n || (d % 2 == 1 && n % 2 == 1) {
        return None;
    }
    'attempt: for _ in 0..1000 {
        // pairing model: d copies of each vertex, shuffled and paired up
        let mut points: Vec<usize> = (0..n).flat_map(|u| std::iter::repeat(u).take(d)).collect();
        points.shuffle(rng);
        let mut edges = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return crate::gadgets::Graph::new(n, edges).ok();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rx3c_has_planted_cover() {
        let inst = random_rx3c(&mut rng(1), 4);
        assert_eq!(inst.triples().len(), 12);
        let mut covered: Vec<usize> = inst.triples()[..4].iter().flatten().copied().collect();
        covered.sort_unstable();
        assert_eq!(covered, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn deterministic() {
        let shape = Shape {
            m: 2..=5,
            n: 0..=6,
            k: 1..=3,
            budget: 0..=3,
            radius: 0..=3,
        };
        let a = random_instance(&mut rng(9), Rule::Pav, OperationKind::Vc, &shape);
        let b = random_instance(&mut rng(9), Rule::Pav, OperationKind::Vc, &shape);
        assert_eq!(a, b);
    }

    #[test]
    fn regular_graphs() {
        let mut r = rng(3);
        let g = random_regular_graph(&mut r, 8, 3).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        assert!(random_regular_graph(&mut r, 7, 3).is_none());
    }
}
