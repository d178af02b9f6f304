//! Parameterized solvers.
//!
//! - [`solve_fpt_m`]: integer programs over ballot types, one per guessed
//!   winning committee; works for every rule and operation, parameter `m`.
//! - [`solve_vdc_av_fpt_j`]: integer program over distinguished-approval
//!   patterns for AV/VDC, parameter `|J|`.
//! - [`solve_vdc_av_flow`]: vote-subset guessing plus max flow for AV/VDC,
//!   parameter `n`.
//! - [`solve_vc_vac_av_enum`]: vote-subset guessing with the greedy rewrite
//!   for AV under VC/VAC without a distance bound, parameter `n`.

use std::collections::BTreeMap;

use crate::election::{
    binomial, scaled_ballot_score_with, separable_excluded_unchecked, Ballot, Combinations, Committee, Rule,
};
use crate::error::{Error, Result};
use crate::flow::{max_flow, FlowNetwork};
use crate::ilp::{solve_ip_feasibility, IntegerProgram, Sense};
use crate::limits::Limits;
use crate::model::{hamming, BriberyInstance, BriberyScript, Decision, OperationKind, Stats};
use crate::oracle::replacements;
use crate::poly::{vdc_threshold, VdcThreshold};
use crate::rational::scale_factor;

/// Votes sharing one ballot, ascending by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallotGroup {
    pub ballot: Ballot,
    pub votes: Vec<usize>,
}

/// An integer program over ballot groups: variable `j` moves votes of group
/// `moves[j].0` to ballot `moves[j].1`.
#[derive(Clone, Debug)]
pub struct GroupProgram {
    pub program: IntegerProgram,
    pub groups: Vec<BallotGroup>,
    pub moves: Vec<(usize, Ballot)>,
}

impl GroupProgram {
    /// Turns a feasible assignment into a script, filling each group's votes
    /// in ascending index order.
    pub fn script(&self, assignment: &[i64]) -> BriberyScript {
        let mut next = vec![0usize; self.groups.len()];
        let mut edits = BTreeMap::new();
        for (j, (g, target)) in self.moves.iter().enumerate() {
            for _ in 0..assignment[j] {
                let vote = self.groups[*g].votes[next[*g]];
                next[*g] += 1;
                edits.insert(vote, target.clone());
            }
        }
        BriberyScript { edits }
    }
}

fn groups_by<F: Fn(&Ballot) -> Ballot>(inst: &BriberyInstance, key: F) -> Vec<BallotGroup> {
    let mut map: BTreeMap<Ballot, Vec<usize>> = BTreeMap::new();
    for (i, v) in inst.election.votes().iter().enumerate() {
        map.entry(key(v)).or_default().push(i);
    }
    map.into_iter()
        .map(|(ballot, votes)| BallotGroup { ballot, votes })
        .collect()
}

/// The integer program asking whether the votes can be rewritten so that the
/// J-disjoint committee `w` scores strictly above every committee meeting J.
///
/// Scores are multiplied by lcm(1..m) so every per-vote score is an integer
/// and "strictly above" becomes "at least one more".
pub fn build_ilp_m(inst: &BriberyInstance, w: &Committee, limits: &Limits) -> Result<GroupProgram> {
    let e = &inst.election;
    let m = e.num_candidates();
    if w.size() != inst.k || w.members().iter().any(|&c| c >= m) {
        return Err(Error::InvalidCommittee(format!(
            "guessed committee {:?} must be a {}-subset of the candidates",
            w.members(),
            inst.k
        )));
    }
    if w.intersects(&inst.distinguished) {
        return Err(Error::InvalidCommittee(format!(
            "guessed committee {:?} meets the distinguished set",
            w.members()
        )));
    }
    let scale = scale_factor(m).ok_or(Error::ScaleOverflow { m })?;
    let needed = binomial(m, inst.k);
    if needed > limits.committee_cap {
        return Err(Error::EnumerationCap {
            needed,
            cap: limits.committee_cap,
        });
    }

    let groups = groups_by(inst, |v| v.clone());
    let mut moves = Vec::new();
    for (g, group) in groups.iter().enumerate() {
        // a single unit of any move costing more than the budget is infeasible
        for (b, _) in replacements(inst.op, &group.ballot, m, inst.radius, inst.budget) {
            moves.push((g, b));
        }
        if moves.len() > limits.ip_variable_cap {
            return Err(Error::VariableCap {
                count: moves.len(),
                cap: limits.ip_variable_cap,
            });
        }
    }

    let mut program = IntegerProgram::new();
    for (g, b) in &moves {
        let group = &groups[*g];
        program.add_variable(format!("x[{}->{}]", group.ballot, b), group.votes.len() as i64);
    }
    // group capacities
    for g in 0..groups.len() {
        let terms: Vec<(usize, i128)> = moves
            .iter()
            .enumerate()
            .filter(|(_, (h, _))| *h == g)
            .map(|(j, _)| (j, 1))
            .collect();
        if !terms.is_empty() {
            program.add_constraint(terms, Sense::Le, groups[g].votes.len() as i128);
        }
    }
    // budget
    let budget_terms = moves
        .iter()
        .enumerate()
        .map(|(j, (g, b))| {
            let cost = if inst.op.is_atomic() {
                hamming(&groups[*g].ballot, b) as i128
            } else {
                1
            };
            (j, cost)
        })
        .collect();
    program.add_constraint(budget_terms, Sense::Le, inst.budget as i128);

    // w strictly above every committee that meets J
    let score = |ballot: &Ballot, members: &[usize]| scaled_ballot_score_with(scale, m, inst.rule, ballot, members);
    let base = |members: &[usize]| -> i128 {
        groups
            .iter()
            .map(|g| g.votes.len() as i128 * score(&g.ballot, members))
            .sum()
    };
    let gain = |j: usize, members: &[usize]| -> i128 {
        let (g, b) = &moves[j];
        score(b, members) - score(&groups[*g].ballot, members)
    };
    let w_base = base(w.members());
    let w_gain: Vec<i128> = (0..moves.len()).map(|j| gain(j, w.members())).collect();
    let mut combos = Combinations::new(m, inst.k);
    while let Some(rival) = combos.next_subset() {
        if !rival.iter().any(|&c| inst.is_distinguished(c)) {
            continue;
        }
        let terms: Vec<(usize, i128)> = (0..moves.len())
            .map(|j| (j, w_gain[j] - gain(j, rival)))
            .filter(|&(_, a)| a != 0)
            .collect();
        program.add_constraint(terms, Sense::Ge, base(rival) - w_base + 1);
    }

    Ok(GroupProgram {
        program,
        groups,
        moves,
    })
}

/// Decides any instance by guessing a J-disjoint committee `w` (lexicographic
/// order) and testing whether `w` can be lifted strictly above every committee
/// meeting J.
pub fn solve_fpt_m(inst: &BriberyInstance, limits: &Limits) -> Result<Decision> {
    const NAME: &str = "ilp-m";
    let mut stats = Stats::default();
    let others = inst.others();
    let mut guesses = Combinations::new(others.len(), inst.k);
    while let Some(pick) = guesses.next_subset() {
        let w = Committee::new(inst.election.num_candidates(), pick.iter().map(|&i| others[i]))?;
        let gp = build_ilp_m(inst, &w, limits)?;
        let out = solve_ip_feasibility(&gp.program, limits.ip_node_cap)?;
        stats.nodes += out.nodes;
        stats.committees += 1;
        if let Some(x) = out.assignment {
            return Ok(Decision::yes(NAME, Some(gp.script(&x)), stats));
        }
    }
    Ok(Decision::no(NAME, stats))
}

fn require_av(inst: &BriberyInstance, algorithm: &'static str, ops: &[OperationKind]) -> Result<()> {
    if inst.rule != Rule::Av {
        return Err(Error::not_applicable(algorithm, format!("rule is {}, not av", inst.rule)));
    }
    if !ops.contains(&inst.op) {
        return Err(Error::not_applicable(
            algorithm,
            format!("operation {} is not supported", inst.op),
        ));
    }
    Ok(())
}

/// The integer program over distinguished-approval patterns for AV/VDC.
///
/// Votes are grouped by `A = v ∩ J`; `x[A, B]` votes of group `A` drop the
/// nonempty set `B ⊆ A` with `|B| ≤ r`. Returns `None` when the answer is
/// settled without a program (`Some(true)` / `Some(false)` in the second slot).
pub fn build_ilp_j(inst: &BriberyInstance) -> Result<std::result::Result<GroupProgram, bool>> {
    require_av(inst, "ilp-j", &[OperationKind::Vdc])?;
    let av = inst.election.av_scores();
    let s = match vdc_threshold(inst, &av) {
        VdcThreshold::TooFewOthers => return Ok(Err(false)),
        VdcThreshold::At { targets, .. } if targets.is_empty() => return Ok(Err(true)),
        VdcThreshold::At { s, .. } => s,
    };
    if s == 0 {
        return Ok(Err(false));
    }
    let j = Ballot::new(inst.distinguished.iter().copied());
    let groups: Vec<BallotGroup> = groups_by(inst, |v| v.intersection(&j))
        .into_iter()
        .filter(|g| !g.ballot.is_empty())
        .collect();

    let mut program = IntegerProgram::new();
    let mut moves = Vec::new();
    // x[A,B] stores the dropped set B; `script` needs final ballots, which
    // depend on the individual vote, so B is kept here and translated later
    for (g, group) in groups.iter().enumerate() {
        let pattern = group.ballot.as_slice();
        for size in 1..=inst.radius.min(pattern.len()) {
            let mut combos = Combinations::new(pattern.len(), size);
            while let Some(pick) = combos.next_subset() {
                let dropped = Ballot::new(pick.iter().map(|&i| pattern[i]));
                program.add_variable(format!("x[{}-{}]", group.ballot, dropped), group.votes.len() as i64);
                moves.push((g, dropped));
            }
        }
    }
    program.add_constraint((0..moves.len()).map(|i| (i, 1)).collect(), Sense::Le, inst.budget as i128);
    for g in 0..groups.len() {
        let terms: Vec<(usize, i128)> = (0..moves.len()).filter(|&i| moves[i].0 == g).map(|i| (i, 1)).collect();
        if !terms.is_empty() {
            program.add_constraint(terms, Sense::Le, groups[g].votes.len() as i128);
        }
    }
    for &c in &inst.distinguished {
        // AV(c) - Σ_{c ∈ B} x ≤ s - 1
        let terms: Vec<(usize, i128)> = (0..moves.len()).filter(|&i| moves[i].1.contains(c)).map(|i| (i, 1)).collect();
        program.add_constraint(terms, Sense::Ge, av[c] as i128 - s as i128 + 1);
    }
    Ok(Ok(GroupProgram {
        program,
        groups,
        moves,
    }))
}

/// AV/VDC via the pattern program; fixed-parameter in `|J|`, any `r`.
pub fn solve_vdc_av_fpt_j(inst: &BriberyInstance, limits: &Limits) -> Result<Decision> {
    const NAME: &str = "ilp-j";
    let mut stats = Stats::default();
    let gp = match build_ilp_j(inst)? {
        Err(true) => return Ok(Decision::yes(NAME, Some(BriberyScript::new()), stats)),
        Err(false) => return Ok(Decision::no(NAME, stats)),
        Ok(gp) => gp,
    };
    if gp.moves.len() > limits.ip_variable_cap {
        return Err(Error::VariableCap {
            count: gp.moves.len(),
            cap: limits.ip_variable_cap,
        });
    }
    let out = solve_ip_feasibility(&gp.program, limits.ip_node_cap)?;
    stats.nodes = out.nodes;
    let Some(x) = out.assignment else {
        return Ok(Decision::no(NAME, stats));
    };
    let votes = inst.election.votes();
    let script = BriberyScript::from_edits(
        gp.script(&x)
            .edits
            .into_iter()
            .map(|(v, dropped)| (v, votes[v].difference(&dropped))),
    );
    Ok(Decision::yes(NAME, Some(script), stats))
}

/// Number of subsets of size at most `max` drawn from `n` items.
fn subsets_up_to(n: usize, max: usize) -> u128 {
    (0..=max.min(n)).map(|j| binomial(n, j)).fold(0, u128::saturating_add)
}

/// AV/VDC by guessing the touched votes and routing the required deletions
/// through a flow network.
pub fn solve_vdc_av_flow(inst: &BriberyInstance, limits: &Limits) -> Result<Decision> {
    const NAME: &str = "flow";
    require_av(inst, NAME, &[OperationKind::Vdc])?;
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
    if deficit > inst.budget.saturating_mul(inst.radius) {
        return Ok(Decision::no(NAME, stats));
    }
    let target_set = Ballot::new(targets.iter().map(|&(c, _)| c));
    let relevant: Vec<usize> = (0..e.num_votes())
        .filter(|&v| e.votes()[v].intersection_len(target_set.as_slice()) > 0)
        .collect();
    let max_size = inst.budget.min(relevant.len());
    let needed = subsets_up_to(relevant.len(), max_size);
    if needed > limits.subset_cap {
        return Err(Error::SubsetCap {
            needed,
            cap: limits.subset_cap,
        });
    }

    for size in 1..=max_size {
        let mut combos = Combinations::new(relevant.len(), size);
        while let Some(pick) = combos.next_subset() {
            stats.nodes += 1;
            let chosen: Vec<usize> = pick.iter().map(|&i| relevant[i]).collect();
            // nodes: 0 source, 1 sink, votes, then target candidates
            let vote_node = |i: usize| 2 + i;
            let cand_node = |t: usize| 2 + chosen.len() + t;
            let mut net = FlowNetwork::new(2 + chosen.len() + targets.len(), 0, 1)?;
            let mut deletions = Vec::new();
            for (i, &v) in chosen.iter().enumerate() {
                let ballot = &e.votes()[v];
                let hit = ballot.intersection_len(target_set.as_slice());
                net.add_arc(0, vote_node(i), inst.radius.min(hit) as i64)?;
                for (t, &(c, _)) in targets.iter().enumerate() {
                    if ballot.contains(c) {
                        let arc = net.add_arc(vote_node(i), cand_node(t), 1)?;
                        deletions.push((arc, v, c));
                    }
                }
            }
            for (t, &(_, need)) in targets.iter().enumerate() {
                net.add_arc(cand_node(t), 1, need as i64)?;
            }
            let flow = max_flow(&net);
            if flow.value as usize == deficit {
                let mut edits: BTreeMap<usize, Ballot> = BTreeMap::new();
                for (arc, v, c) in deletions {
                    if flow.arc_flow[arc] > 0 {
                        let b = edits.entry(v).or_insert_with(|| e.votes()[v].clone());
                        *b = b.without(c);
                    }
                }
                return Ok(Decision::yes(NAME, Some(BriberyScript { edits }), stats));
            }
        }
    }
    Ok(Decision::no(NAME, stats))
}

/// AV under VC or VAC with no effective distance bound (`r ≥ m`): guess the
/// touched votes; each touched vote drops all of J and approves everyone else
/// (VC) or just adds everyone outside J (VAC).
pub fn solve_vc_vac_av_enum(inst: &BriberyInstance, limits: &Limits) -> Result<Decision> {
    const NAME: &str = "enum";
    require_av(inst, NAME, &[OperationKind::Vc, OperationKind::Vac])?;
    let e = &inst.election;
    let m = e.num_candidates();
    if inst.radius < m {
        return Err(Error::not_applicable(
            NAME,
            format!("needs an unrestricted distance bound (r >= m = {m}), got r = {}", inst.radius),
        ));
    }
    let n = e.num_votes();
    let max_size = inst.budget.min(n);
    let needed = subsets_up_to(n, max_size);
    if needed > limits.subset_cap {
        return Err(Error::SubsetCap {
            needed,
            cap: limits.subset_cap,
        });
    }
    let others = Ballot::new(inst.others());
    let rewritten: Vec<Ballot> = e
        .votes()
        .iter()
        .map(|v| match inst.op {
            OperationKind::Vc => others.clone(),
            _ => v.union(&others),
        })
        .collect();
    let mut stats = Stats::default();
    let mut current = e.clone();
    for size in 0..=max_size {
        let mut combos = Combinations::new(n, size);
        while let Some(pick) = combos.next_subset() {
            stats.nodes += 1;
            for &v in pick {
                current.votes_mut()[v] = rewritten[v].clone();
            }
            if separable_excluded_unchecked(&current, Rule::Av, inst.k, &inst.distinguished) {
                let script = BriberyScript::from_edits(pick.iter().map(|&v| (v, rewritten[v].clone()))).normalized(e);
                return Ok(Decision::yes(NAME, Some(script), stats));
            }
            for &v in pick {
                current.votes_mut()[v] = e.votes()[v].clone();
            }
        }
    }
    Ok(Decision::no(NAME, stats))
}
