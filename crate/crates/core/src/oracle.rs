//! Exhaustive decision procedure for every rule and operation.
//!
//! Scripts are enumerated in canonical final-ballot form by a depth-first walk
//! over the votes in ascending index order. At each vote the walk first leaves
//! the ballot untouched, then tries every admissible replacement in ascending
//! (lexicographic sorted-list) ballot order. The first script that excludes the
//! distinguished candidates is the witness, so witnesses are reproducible.

use crate::election::{binomial, excluded_counting, Ballot, Combinations, Election};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::model::{BriberyInstance, BriberyScript, Decision, OperationKind, Stats};

pub const ALGORITHM: &str = "oracle";

/// Every admissible replacement for `orig` with its cost, ascending by ballot.
/// Replacements whose cost exceeds `max_cost` are skipped.
pub fn replacements(
    op: OperationKind,
    orig: &Ballot,
    m: usize,
    radius: usize,
    max_cost: usize,
) -> Vec<(Ballot, usize)> {
    let outside: Vec<usize> = (0..m).filter(|&c| !orig.contains(c)).collect();
    let inside = orig.as_slice();
    let mut out = Vec::new();
    match op {
        OperationKind::AppAdd | OperationKind::Vac => {
            let (limit, unit) = if op.is_atomic() {
                (max_cost, false)
            } else {
                (if max_cost == 0 { 0 } else { radius }, true)
            };
            for size in 1..=limit.min(outside.len()) {
                let mut combos = Combinations::new(outside.len(), size);
                while let Some(pick) = combos.next_subset() {
                    let b = Ballot::new(inside.iter().copied().chain(pick.iter().map(|&i| outside[i])));
                    out.push((b, if unit { 1 } else { size }));
                }
            }
        }
        OperationKind::AppDel | OperationKind::Vdc => {
            let (limit, unit) = if op.is_atomic() {
                (max_cost, false)
            } else {
                (if max_cost == 0 { 0 } else { radius }, true)
            };
            for size in 1..=limit.min(inside.len()) {
                let mut combos = Combinations::new(inside.len(), size);
                while let Some(pick) = combos.next_subset() {
                    let b: Ballot = inside
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| pick.binary_search(i).is_err())
                        .map(|(_, &c)| c)
                        .collect();
                    out.push((b, if unit { 1 } else { size }));
                }
            }
        }
        OperationKind::Vc => {
            if max_cost == 0 {
                return out;
            }
            for removed in 0..=radius.min(inside.len()) {
                for added in 0..=(radius - removed).min(outside.len()) {
                    if removed + added == 0 {
                        continue;
                    }
                    let mut rc = Combinations::new(inside.len(), removed);
                    while let Some(r) = rc.next_subset() {
                        let kept: Vec<usize> = inside
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| r.binary_search(i).is_err())
                            .map(|(_, &c)| c)
                            .collect();
                        let mut ac = Combinations::new(outside.len(), added);
                        while let Some(a) = ac.next_subset() {
                            let b = Ballot::new(kept.iter().copied().chain(a.iter().map(|&i| outside[i])));
                            out.push((b, 1));
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Number of admissible replacements of one ballot, bucketed by cost.
fn replacement_histogram(op: OperationKind, orig: &Ballot, m: usize, radius: usize, budget: usize) -> Vec<u128> {
    let inside = orig.len();
    let outside = m - inside;
    let mut hist = vec![0u128; budget.min(m) + 1];
    match op {
        OperationKind::AppAdd => {
            for j in 1..hist.len() {
                hist[j] = binomial(outside, j);
            }
        }
        OperationKind::AppDel => {
            for j in 1..hist.len() {
                hist[j] = binomial(inside, j);
            }
        }
        OperationKind::Vac | OperationKind::Vdc | OperationKind::Vc => {
            if hist.len() > 1 {
                let total: u128 = match op {
                    OperationKind::Vac => (1..=radius.min(outside)).map(|j| binomial(outside, j)).fold(0, u128::saturating_add),
                    OperationKind::Vdc => (1..=radius.min(inside)).map(|j| binomial(inside, j)).fold(0, u128::saturating_add),
                    _ => (1..=radius.min(m)).map(|j| binomial(m, j)).fold(0, u128::saturating_add),
                };
                hist[1] = total;
            }
        }
    }
    hist
}

/// Exact number of scripts the oracle enumerates (saturating).
pub fn estimate_search_space(inst: &BriberyInstance) -> u128 {
    let m = inst.election.num_candidates();
    let budget = inst.budget;
    // dp[c]: partial scripts of total cost c
    let cap_cost = if inst.op.is_atomic() {
        budget.min(inst.election.num_votes() * m)
    } else {
        budget.min(inst.election.num_votes())
    };
    let mut dp = vec![0u128; cap_cost + 1];
    dp[0] = 1;
    for v in inst.election.votes() {
        let hist = replacement_histogram(inst.op, v, m, inst.radius, cap_cost);
        let mut next = dp.clone();
        for (c, &ways) in dp.iter().enumerate() {
            if ways == 0 {
                continue;
            }
            for (j, &h) in hist.iter().enumerate().skip(1) {
                if c + j > cap_cost || h == 0 {
                    continue;
                }
                next[c + j] = next[c + j].saturating_add(ways.saturating_mul(h));
            }
        }
        dp = next;
    }
    dp.into_iter().fold(0, u128::saturating_add)
}

struct Search<'a> {
    inst: &'a BriberyInstance,
    limits: &'a Limits,
    options: Vec<Vec<(Ballot, usize)>>,
    order: Vec<usize>,
    current: Election,
    stats: Stats,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, remaining: usize) -> Result<bool> {
        if pos == self.order.len() {
            self.stats.nodes += 1;
            let inst = self.inst;
            return excluded_counting(
                &self.current,
                inst.rule,
                inst.k,
                &inst.distinguished,
                self.limits,
                &mut self.stats.committees,
            );
        }
        if self.run(pos + 1, remaining)? {
            return Ok(true);
        }
        let vote = self.order[pos];
        let original = self.current.votes()[vote].clone();
        for i in 0..self.options[vote].len() {
            let cost = self.options[vote][i].1;
            if cost > remaining {
                continue;
            }
            self.current.votes_mut()[vote] = self.options[vote][i].0.clone();
            if self.run(pos + 1, remaining - cost)? {
                return Ok(true);
            }
        }
        self.current.votes_mut()[vote] = original;
        Ok(false)
    }
}

/// Decides the instance by enumerating every legal script.
pub fn solve_bruteforce(inst: &BriberyInstance, limits: &Limits) -> Result<Decision> {
    let order: Vec<usize> = (0..inst.election.num_votes()).collect();
    search_in_order(inst, limits, order)
}

/// The oracle with the votes visited in a caller-chosen order. Answers do not
/// depend on the order; witnesses may.
pub fn search_in_order(inst: &BriberyInstance, limits: &Limits, order: Vec<usize>) -> Result<Decision> {
    let estimate = estimate_search_space(inst);
    if estimate > limits.search_cap {
        return Err(Error::SearchSpaceCap {
            estimate,
            cap: limits.search_cap,
        });
    }
    let m = inst.election.num_candidates();
    let options = inst
        .election
        .votes()
        .iter()
        .map(|v| replacements(inst.op, v, m, inst.radius, inst.budget))
        .collect();
    let mut search = Search {
        inst,
        limits,
        options,
        order,
        current: inst.election.clone(),
        stats: Stats::default(),
    };
    if search.run(0, inst.budget)? {
        let witness = BriberyScript::from_edits(
            search
                .current
                .votes()
                .iter()
                .enumerate()
                .filter(|(i, b)| inst.election.votes()[*i] != **b)
                .map(|(i, b)| (i, b.clone())),
        );
        Ok(Decision::yes(ALGORITHM, Some(witness), search.stats))
    } else {
        Ok(Decision::no(ALGORITHM, search.stats))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::Rule;
    use crate::model::{check_solution, hamming};

    fn e1() -> Election {
        Election::from_lists(3, &[&[0, 1], &[0], &[1, 2]]).unwrap()
    }

    fn inst(e: Election, rule: Rule, op: OperationKind, j: &[usize], k: usize, budget: usize, radius: usize) -> BriberyInstance {
        BriberyInstance::new(e, rule, op, j.iter().copied(), k, budget, radius).unwrap()
    }

    #[test]
    fn appadd_examples() {
        let lim = Limits::default();
        let i = inst(e1(), Rule::Av, OperationKind::AppAdd, &[0], 1, 1, 0);
        let d = solve_bruteforce(&i, &lim).unwrap();
        assert!(d.answer);
        let w = d.witness.unwrap();
        assert_eq!(w, BriberyScript::from_edits([(1, Ballot::new([0, 1]))]));
        assert!(check_solution(&i, &w, &lim).unwrap());
        let d = solve_bruteforce(&i.with_budget(0), &lim).unwrap();
        assert!(!d.answer);
        assert!(d.witness.is_none());
    }

    #[test]
    fn everyone_distinguished_is_no() {
        let lim = Limits::default();
        for op in OperationKind::ALL {
            let i = inst(e1(), Rule::Pav, op, &[0, 1, 2], 2, 2, 2);
            assert!(!solve_bruteforce(&i, &lim).unwrap().answer, "{op}");
        }
    }

    #[test]
    fn estimates() {
        let i = inst(e1(), Rule::Av, OperationKind::Vc, &[0], 1, 0, 3);
        assert_eq!(estimate_search_space(&i), 1);
        let e = Election::from_lists(2, &[&[0], &[1], &[]]).unwrap();
        let i = inst(e, Rule::Av, OperationKind::Vc, &[0], 1, 1, 4);
        assert_eq!(estimate_search_space(&i), 10);
        let e = Election::from_lists(3, &[&[], &[]]).unwrap();
        let i = inst(e, Rule::Av, OperationKind::AppDel, &[0], 1, 5, 0);
        assert_eq!(estimate_search_space(&i), 1);
    }

    #[test]
    fn cap_is_checked_before_search() {
        let e = Election::new(12, vec![Ballot::empty(); 10]).unwrap();
        let i = inst(e, Rule::Av, OperationKind::Vc, &[0], 1, 5, 12);
        let lim = Limits {
            search_cap: 1000,
            ..Limits::default()
        };
        assert!(matches!(solve_bruteforce(&i, &lim), Err(Error::SearchSpaceCap { .. })));
    }

    #[test]
    fn replacements_respect_direction_and_distance() {
        let orig = Ballot::new([1, 2]);
        for op in OperationKind::ALL {
            for radius in 0..=4 {
                let reps = replacements(op, &orig, 4, radius, 3);
                for (b, cost) in &reps {
                    assert!(op.admits(&orig, b), "{op} {b}");
                    if op.is_atomic() {
                        assert_eq!(*cost, hamming(&orig, b));
                        assert!(*cost <= 3);
                    } else {
                        assert!(hamming(&orig, b) <= radius);
                        assert_eq!(*cost, 1);
                    }
                }
                assert!(reps.windows(2).all(|w| w[0].0 < w[1].0));
            }
        }
        // VC with unrestricted distance reaches every other ballot
        assert_eq!(replacements(OperationKind::Vc, &orig, 4, 4, 1).len(), 15);
    }

    #[test]
    fn estimate_matches_enumeration() {
        // count leaves by brute force for a few small instances
        let e = Election::from_lists(3, &[&[0], &[1, 2], &[]]).unwrap();
        for op in OperationKind::ALL {
            for budget in 0..=3 {
                for radius in 0..=3 {
                    let i = inst(e.clone(), Rule::Av, op, &[0], 1, budget, radius);
                    let opts: Vec<_> = e.votes().iter().map(|v| replacements(op, v, 3, radius, budget)).collect();
                    fn count(opts: &[Vec<(Ballot, usize)>], left: usize) -> u128 {
                        match opts.split_first() {
                            None => 1,
                            Some((first, rest)) => {
                                count(rest, left)
                                    + first.iter().filter(|(_, c)| *c <= left).map(|(_, c)| count(rest, left - c)).sum::<u128>()
                            }
                        }
                    }
                    assert_eq!(estimate_search_space(&i), count(&opts, budget), "{op} {budget} {radius}");
                }
            }
        }
    }
}
