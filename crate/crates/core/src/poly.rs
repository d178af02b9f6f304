//! Polynomial-time algorithms for destructive bribery under AV.
//!
//! Every algorithm works on approval counts only: under AV a committee's score
//! is the sum of its members' counts, so the distinguished set `J` is excluded
//! iff every `p ∈ J` has at least `k` candidates strictly above it. Whenever a
//! choice is arbitrary (which vote to edit, which of several tied candidates)
//! the lowest index wins.

use std::collections::BTreeMap;

use crate::election::{separable_excluded_unchecked, Ballot, Rule};
use crate::error::{Error, Result};
use crate::matching::max_bipartite_matching;
use crate::model::{BriberyInstance, BriberyScript, Decision, OperationKind, Stats};

fn require(inst: &BriberyInstance, algorithm: &'static str, op: OperationKind) -> Result<()> {
    if inst.rule != Rule::Av {
        return Err(Error::not_applicable(algorithm, format!("rule is {}, not av", inst.rule)));
    }
    if inst.op != op {
        return Err(Error::not_applicable(algorithm, format!("operation is {}, not {op}", inst.op)));
    }
    Ok(())
}

/// Highest-scoring distinguished candidate, lowest index on ties.
fn strongest_distinguished(inst: &BriberyInstance, av: &[usize]) -> usize {
    let mut best = inst.distinguished[0];
    for &c in &inst.distinguished {
        if av[c] > av[best] {
            best = c;
        }
    }
    best
}

/// Collects per-vote edits, starting each touched vote from its original ballot.
struct ScriptBuilder<'a> {
    inst: &'a BriberyInstance,
    edits: BTreeMap<usize, Ballot>,
}

impl<'a> ScriptBuilder<'a> {
    fn new(inst: &'a BriberyInstance) -> Self {
        ScriptBuilder {
            inst,
            edits: BTreeMap::new(),
        }
    }

    fn ballot(&mut self, vote: usize) -> &mut Ballot {
        let votes = self.inst.election.votes();
        self.edits.entry(vote).or_insert_with(|| votes[vote].clone())
    }

    fn add(&mut self, vote: usize, c: usize) {
        let b = self.ballot(vote);
        *b = b.with(c);
    }

    fn remove(&mut self, vote: usize, c: usize) {
        let b = self.ballot(vote);
        *b = b.without(c);
    }

    fn finish(self) -> BriberyScript {
        BriberyScript::from_edits(self.edits).normalized(&self.inst.election)
    }
}

/// AppAdd under AV.
///
/// Additions never help a distinguished candidate, so only non-distinguished
/// candidates are pushed past the strongest distinguished one, cheapest first.
pub fn solve_appadd_av(inst: &BriberyInstance) -> Result<Decision> {
    const NAME: &str = "poly-appadd-av";
    require(inst, NAME, OperationKind::AppAdd)?;
    let e = &inst.election;
    let n = e.num_votes();
    let av = e.av_scores();
    let stats = Stats {
        nodes: e.num_candidates() as u64,
        committees: 0,
    };

    if inst.distinguished.iter().any(|&c| av[c] == n) {
        return Ok(Decision::no(NAME, stats));
    }
    let top = strongest_distinguished(inst, &av);
    let target = av[top] + 1;
    let others = inst.others();
    let above = others.iter().filter(|&&c| av[c] >= target).count();
    if above >= inst.k {
        return Ok(Decision::yes(NAME, Some(BriberyScript::new()), stats));
    }

    let mut rest: Vec<(usize, usize)> = others
        .iter()
        .filter(|&&c| av[c] < target)
        .map(|&c| (target - av[c], c))
        .collect();
    rest.sort_unstable();
    let need = inst.k - above;
    if rest.len() < need {
        return Ok(Decision::no(NAME, stats));
    }
    let chosen = &rest[..need];
    let total: usize = chosen.iter().map(|&(d, _)| d).sum();
    if total > inst.budget {
        return Ok(Decision::no(NAME, stats));
    }

    let mut script = ScriptBuilder::new(inst);
    for &(diff, c) in chosen {
        let targets = e
            .votes()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.contains(c))
            .map(|(i, _)| i)
            .take(diff)
            .collect::<Vec<_>>();
        for v in targets {
            script.add(v, c);
        }
    }
    Ok(Decision::yes(NAME, Some(script.finish()), stats))
}

/// AppDel under AV.
///
/// Repeatedly removes one approval of the strongest distinguished candidate
/// until `k` non-distinguished candidates are strictly above it.
pub fn solve_appdel_av(inst: &BriberyInstance) -> Result<Decision> {
    const NAME: &str = "poly-appdel-av";
    require(inst, NAME, OperationKind::AppDel)?;
    let e = &inst.election;
    let mut av = e.av_scores();
    let others = inst.others();
    let mut stats = Stats::default();

    if others.iter().filter(|&&c| av[c] >= 1).count() < inst.k {
        return Ok(Decision::no(NAME, stats));
    }

    let mut ballots: Vec<Ballot> = e.votes().to_vec();
    let mut used = 0usize;
    loop {
        stats.nodes += 1;
        let top = strongest_distinguished(inst, &av);
        let above = others.iter().filter(|&&c| av[c] > av[top]).count();
        if above >= inst.k {
            break;
        }
        if av[top] == 0 || used == inst.budget {
            return Ok(Decision::no(NAME, stats));
        }
        let v = ballots
            .iter()
            .position(|b| b.contains(top))
            .expect("a candidate with positive score is approved somewhere");
        ballots[v] = ballots[v].without(top);
        av[top] -= 1;
        used += 1;
    }

    let script = BriberyScript::from_edits(ballots.into_iter().enumerate()).normalized(e);
    Ok(Decision::yes(NAME, Some(script), stats))
}

/// VAC under AV with a single winner.
///
/// Additions cannot lower a distinguished score, so the only hope is lifting
/// the best non-distinguished candidate above every distinguished one.
pub fn solve_vac_av_k1(inst: &BriberyInstance) -> Result<Decision> {
    const NAME: &str = "poly-vac-av-k1";
    require(inst, NAME, OperationKind::Vac)?;
    if inst.k != 1 {
        return Err(Error::not_applicable(NAME, format!("k is {}, not 1", inst.k)));
    }
    let e = &inst.election;
    let stats = Stats {
        nodes: e.num_candidates() as u64,
        committees: 0,
    };
    if inst.radius == 0 {
        return Ok(if separable_excluded_unchecked(e, Rule::Av, 1, &inst.distinguished) {
            Decision::yes(NAME, Some(BriberyScript::new()), stats)
        } else {
            Decision::no(NAME, stats)
        });
    }

    let av = e.av_scores();
    let s = inst.distinguished.iter().map(|&c| av[c]).max().unwrap_or(0);
    let others = inst.others();
    let Some(&best) = others.iter().max_by_key(|&&c| (av[c], std::cmp::Reverse(c))) else {
        return Ok(Decision::no(NAME, stats));
    };
    if av[best] > s {
        return Ok(Decision::yes(NAME, Some(BriberyScript::new()), stats));
    }
    let need = s + 1 - av[best];
    let reachable = inst.budget.min(e.num_votes() - av[best]);
    if need > reachable {
        return Ok(Decision::no(NAME, stats));
    }
    let mut script = ScriptBuilder::new(inst);
    let targets: Vec<usize> = e
        .votes()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.contains(best))
        .map(|(i, _)| i)
        .take(need)
        .collect();
    for v in targets {
        script.add(v, best);
    }
    Ok(Decision::yes(NAME, Some(script.finish()), stats))
}

/// The score every distinguished candidate must drop below under VDC.
pub(crate) enum VdcThreshold {
    /// Fewer than `k` non-distinguished candidates exist.
    TooFewOthers,
    /// `s` is the k-th highest non-distinguished score; `targets` lists the
    /// distinguished candidates scoring at least `s` with the number of
    /// approvals each must lose (`AV(c) - s + 1`).
    At { s: usize, targets: Vec<(usize, usize)> },
}

pub(crate) fn vdc_threshold(inst: &BriberyInstance, av: &[usize]) -> VdcThreshold {
    let mut scores: Vec<usize> = inst.others().iter().map(|&c| av[c]).collect();
    if scores.len() < inst.k {
        return VdcThreshold::TooFewOthers;
    }
    scores.sort_unstable_by(|a, b| b.cmp(a));
    let s = scores[inst.k - 1];
    let targets = inst
        .distinguished
        .iter()
        .filter(|&&c| av[c] >= s)
        .map(|&c| (c, av[c] + 1 - s))
        .collect();
    VdcThreshold::At { s, targets }
}

/// VDC under AV with distance bound 1, via bipartite matching.
///
/// Each distinguished candidate `c` scoring at least `s` needs `AV(c) - s + 1`
/// distinct votes that drop it, and each vote may drop a single candidate.
pub fn solve_vdc_av_r1(inst: &BriberyInstance) -> Result<Decision> {
    const NAME: &str = "poly-vdc-av-r1";
    require(inst, NAME, OperationKind::Vdc)?;
    if inst.radius != 1 {
        return Err(Error::not_applicable(NAME, format!("r is {}, not 1", inst.radius)));
    }
    let e = &inst.election;
    let av = e.av_scores();
    let mut stats = Stats::default();
    let (s, targets) = match vdc_threshold(inst, &av) {
        VdcThreshold::TooFewOthers => return Ok(Decision::no(NAME, stats)),
        VdcThreshold::At { s, targets } => (s, targets),
    };
    if targets.is_empty() {
        return Ok(Decision::yes(NAME, Some(BriberyScript::new()), stats));
    }
    if s == 0 {
        return Ok(Decision::no(NAME, stats));
    }
    let deficit: usize = targets.iter().map(|&(_, d)| d).sum();
    if deficit > inst.budget {
        return Ok(Decision::no(NAME, stats));
    }

    // right side: votes approving some target candidate
    let vote_nodes: Vec<usize> = (0..e.num_votes())
        .filter(|&v| targets.iter().any(|&(c, _)| e.votes()[v].contains(c)))
        .collect();
    let mut copy_owner = Vec::with_capacity(deficit);
    let mut adjacency = Vec::with_capacity(deficit);
    for &(c, copies) in &targets {
        let neighbours: Vec<usize> = vote_nodes
            .iter()
            .enumerate()
            .filter(|(_, &v)| e.votes()[v].contains(c))
            .map(|(i, _)| i)
            .collect();
        for _ in 0..copies {
            copy_owner.push(c);
            adjacency.push(neighbours.clone());
        }
    }
    let matching = max_bipartite_matching(deficit, vote_nodes.len(), &adjacency);
    stats.nodes = (deficit + vote_nodes.len()) as u64;
    if matching.size < deficit {
        return Ok(Decision::no(NAME, stats));
    }
    let mut script = ScriptBuilder::new(inst);
    for (copy, right) in matching.left_match.iter().enumerate() {
        let right = right.expect("saturating matching covers every copy");
        script.remove(vote_nodes[right], copy_owner[copy]);
    }
    Ok(Decision::yes(NAME, Some(script.finish()), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::Election;
    use crate::limits::Limits;
    use crate::model::check_solution;
    use crate::oracle::solve_bruteforce;

    fn e1() -> Election {
        Election::from_lists(3, &[&[0, 1], &[0], &[1, 2]]).unwrap()
    }

    fn inst(op: OperationKind, j: &[usize], k: usize, budget: usize, radius: usize) -> BriberyInstance {
        BriberyInstance::new(e1(), Rule::Av, op, j.iter().copied(), k, budget, radius).unwrap()
    }

    fn agrees(i: &BriberyInstance, d: &Decision) {
        let lim = Limits::default();
        assert_eq!(d.answer, solve_bruteforce(i, &lim).unwrap().answer, "{i:?}");
        if d.answer {
            assert!(check_solution(i, d.witness.as_ref().unwrap(), &lim).unwrap());
        }
    }

    #[test]
    fn appadd() {
        let i = inst(OperationKind::AppAdd, &[0], 1, 1, 0);
        let d = solve_appadd_av(&i).unwrap();
        assert!(d.answer);
        agrees(&i, &d);
        let i = i.with_budget(0);
        let d = solve_appadd_av(&i).unwrap();
        assert!(!d.answer);
        agrees(&i, &d);
        // candidate 0 approved by every vote
        let e = Election::from_lists(3, &[&[0], &[0, 2]]).unwrap();
        let i = BriberyInstance::new(e, Rule::Av, OperationKind::AppAdd, [0], 1, 9, 0).unwrap();
        assert!(!solve_appadd_av(&i).unwrap().answer);
    }

    #[test]
    fn appdel() {
        let i = inst(OperationKind::AppDel, &[0], 1, 1, 0);
        let d = solve_appdel_av(&i).unwrap();
        assert!(d.answer);
        agrees(&i, &d);
        let i = inst(OperationKind::AppDel, &[0, 1], 1, 2, 0);
        agrees(&i, &solve_appdel_av(&i).unwrap());
        // only candidate 2 is a non-distinguished approved candidate; k = 2
        let i = inst(OperationKind::AppDel, &[0, 1], 2, 9, 0);
        assert!(!solve_appdel_av(&i).unwrap().answer);
    }

    #[test]
    fn vac_k1() {
        let i = inst(OperationKind::Vac, &[0, 1], 1, 2, 1);
        let d = solve_vac_av_k1(&i).unwrap();
        assert!(d.answer);
        agrees(&i, &d);
        let i = i.with_budget(1);
        let d = solve_vac_av_k1(&i).unwrap();
        assert!(!d.answer);
        agrees(&i, &d);
        let i = inst(OperationKind::Vac, &[2], 1, 0, 0);
        assert!(solve_vac_av_k1(&i).unwrap().answer);
        assert!(solve_vac_av_k1(&inst(OperationKind::Vac, &[2], 2, 0, 0)).is_err());
    }

    #[test]
    fn vdc_r1() {
        let i = inst(OperationKind::Vdc, &[0], 1, 1, 1);
        let d = solve_vdc_av_r1(&i).unwrap();
        assert!(d.answer);
        agrees(&i, &d);
        let i = i.with_budget(0);
        let d = solve_vdc_av_r1(&i).unwrap();
        assert!(!d.answer);
        agrees(&i, &d);
        // candidate 2 already below the threshold
        let i = inst(OperationKind::Vdc, &[2], 1, 0, 1);
        let d = solve_vdc_av_r1(&i).unwrap();
        assert_eq!(d.witness, Some(BriberyScript::new()));
        assert!(solve_vdc_av_r1(&inst(OperationKind::Vdc, &[2], 1, 0, 2)).is_err());
    }

    #[test]
    fn wrong_problem_is_rejected() {
        let i = BriberyInstance::new(e1(), Rule::Sav, OperationKind::AppAdd, [0], 1, 1, 0).unwrap();
        assert!(matches!(solve_appadd_av(&i), Err(Error::NotApplicable { .. })));
        let i = inst(OperationKind::Vc, &[0], 1, 1, 1);
        assert!(solve_appdel_av(&i).is_err());
        assert!(solve_vac_av_k1(&i).is_err());
        assert!(solve_vdc_av_r1(&i).is_err());
    }
}
