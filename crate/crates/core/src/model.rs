//! Bribery instances, modification operations and witness scripts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::election::{excluded_counting, Ballot, Election, Rule};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// How the briber may touch the ballots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperationKind {
    /// Add one approval; costs one per added candidate.
    AppAdd,
    /// Remove one approval; costs one per removed candidate.
    AppDel,
    /// Replace a ballot by any other ballot.
    Vc,
    /// Add one or more candidates to a ballot.
    Vac,
    /// Remove one or more candidates from a ballot.
    Vdc,
}

impl OperationKind {
    pub const ALL: [OperationKind; 5] = [
        OperationKind::AppAdd,
        OperationKind::AppDel,
        OperationKind::Vc,
        OperationKind::Vac,
        OperationKind::Vdc,
    ];

    pub fn is_atomic(self) -> bool {
        matches!(self, OperationKind::AppAdd | OperationKind::AppDel)
    }

    pub fn name(self) -> &'static str {
        match self {
            OperationKind::AppAdd => "appadd",
            OperationKind::AppDel => "appdel",
            OperationKind::Vc => "vc",
            OperationKind::Vac => "vac",
            OperationKind::Vdc => "vdc",
        }
    }

    /// Whether `to` may replace `from` under this operation, ignoring distance.
    pub fn admits(self, from: &Ballot, to: &Ballot) -> bool {
        if from == to {
            return false;
        }
        match self {
            OperationKind::AppAdd | OperationKind::Vac => from.is_subset_of(to),
            OperationKind::AppDel | OperationKind::Vdc => to.is_subset_of(from),
            OperationKind::Vc => true,
        }
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperationKind::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInstance(format!("unknown operation '{s}'")))
    }
}

/// One destructive bribery question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BriberyInstance {
    pub election: Election,
    pub rule: Rule,
    pub op: OperationKind,
    /// Distinguished candidates, sorted and nonempty.
    pub distinguished: Vec<usize>,
    pub k: usize,
    /// Budget: atomic edits for AppAdd/AppDel, touched votes otherwise.
    pub budget: usize,
    /// Per-vote Hamming bound; ignored by the atomic operations.
    pub radius: usize,
}

impl BriberyInstance {
    pub fn new(
        election: Election,
        rule: Rule,
        op: OperationKind,
        distinguished: impl IntoIterator<Item = usize>,
        k: usize,
        budget: usize,
        radius: usize,
    ) -> Result<Self> {
        let m = election.num_candidates();
        let mut distinguished: Vec<usize> = distinguished.into_iter().collect();
        distinguished.sort_unstable();
        distinguished.dedup();
        if distinguished.is_empty() {
            return Err(Error::InvalidInstance("distinguished set must be nonempty".into()));
        }
        if let Some(&c) = distinguished.iter().find(|&&c| c >= m) {
            return Err(Error::InvalidInstance(format!(
                "distinguished candidate {c} out of range for {m} candidates"
            )));
        }
        if k == 0 || k > m {
            return Err(Error::InvalidInstance(format!(
                "committee size {k} must be between 1 and {m}"
            )));
        }
        Ok(BriberyInstance {
            election,
            rule,
            op,
            distinguished,
            k,
            budget,
            radius,
        })
    }

    pub fn is_distinguished(&self, c: usize) -> bool {
        self.distinguished.binary_search(&c).is_ok()
    }

    /// Candidates outside the distinguished set, ascending.
    pub fn others(&self) -> Vec<usize> {
        (0..self.election.num_candidates())
            .filter(|&c| !self.is_distinguished(c))
            .collect()
    }

    /// The same question with a different budget.
    pub fn with_budget(&self, budget: usize) -> Self {
        BriberyInstance {
            budget,
            ..self.clone()
        }
    }

    pub fn with_radius(&self, radius: usize) -> Self {
        BriberyInstance {
            radius,
            ..self.clone()
        }
    }
}

/// A witness: the final ballot of every touched vote.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BriberyScript {
    pub edits: BTreeMap<usize, Ballot>,
}

impl BriberyScript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edits(edits: impl IntoIterator<Item = (usize, Ballot)>) -> Self {
        BriberyScript {
            edits: edits.into_iter().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.edits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edits.len()
    }

    /// Drops edits that leave their ballot unchanged.
    pub(crate) fn normalized(mut self, e: &Election) -> Self {
        self.edits.retain(|&v, b| e.votes().get(v) != Some(b));
        self
    }
}

/// Work counters reported with every decision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Search nodes, scripts, subsets or ILP nodes, depending on the algorithm.
    pub nodes: u64,
    /// Committees scored by enumeration-based exclusion checks.
    pub committees: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    pub witness: Option<BriberyScript>,
    pub algorithm: &'static str,
    pub stats: Stats,
}

impl Decision {
    pub(crate) fn yes(algorithm: &'static str, witness: Option<BriberyScript>, stats: Stats) -> Self {
        Decision {
            answer: true,
            witness,
            algorithm,
            stats,
        }
    }

    pub(crate) fn no(algorithm: &'static str, stats: Stats) -> Self {
        Decision {
            answer: false,
            witness: None,
            algorithm,
            stats,
        }
    }
}

/// |a \ b| + |b \ a|.
pub fn hamming(a: &Ballot, b: &Ballot) -> usize {
    a.len() + b.len() - 2 * a.intersection_len(b.as_slice())
}

/// Cost charged against the budget.
pub fn script_cost(inst: &BriberyInstance, s: &BriberyScript) -> usize {
    if inst.op.is_atomic() {
        s.edits
            .iter()
            .map(|(&v, b)| inst.election.votes().get(v).map_or(b.len(), |orig| hamming(orig, b)))
            .sum()
    } else {
        s.edits.len()
    }
}

/// Why a script is not a legal bribery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VoteOutOfRange { vote: usize },
    CandidateOutOfRange { vote: usize, candidate: usize },
    Unchanged { vote: usize },
    Direction { vote: usize, op: OperationKind },
    Distance { vote: usize, distance: usize, radius: usize },
    Budget { cost: usize, budget: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Violation::VoteOutOfRange { vote } => write!(f, "edit of vote {vote}: no such vote"),
            Violation::CandidateOutOfRange { vote, candidate } => {
                write!(f, "edit of vote {vote}: candidate {candidate} out of range")
            }
            Violation::Unchanged { vote } => {
                write!(f, "edit of vote {vote}: replacement equals the original ballot")
            }
            Violation::Direction { vote, op } => match op {
                OperationKind::AppAdd | OperationKind::Vac => write!(
                    f,
                    "edit of vote {vote}: {op} replacement must be a strict superset"
                ),
                _ => write!(f, "edit of vote {vote}: {op} replacement must be a strict subset"),
            },
            Violation::Distance {
                vote,
                distance,
                radius,
            } => write!(
                f,
                "edit of vote {vote}: distance {distance} exceeds bound r={radius}"
            ),
            Violation::Budget { cost, budget } => {
                write!(f, "budget: script costs {cost} but the budget is {budget}")
            }
        }
    }
}

/// Checks direction, distance and budget of every edit.
pub fn validate_script(inst: &BriberyInstance, s: &BriberyScript) -> std::result::Result<(), Violation> {
    let votes = inst.election.votes();
    let m = inst.election.num_candidates();
    for (&vote, b) in &s.edits {
        let Some(orig) = votes.get(vote) else {
            return Err(Violation::VoteOutOfRange { vote });
        };
        if let Some(candidate) = b.max_candidate().filter(|&c| c >= m) {
            return Err(Violation::CandidateOutOfRange { vote, candidate });
        }
        if orig == b {
            return Err(Violation::Unchanged { vote });
        }
        if !inst.op.admits(orig, b) {
            return Err(Violation::Direction { vote, op: inst.op });
        }
        if !inst.op.is_atomic() {
            let distance = hamming(orig, b);
            if distance > inst.radius {
                return Err(Violation::Distance {
                    vote,
                    distance,
                    radius: inst.radius,
                });
            }
        }
    }
    let cost = script_cost(inst, s);
    if cost > inst.budget {
        return Err(Violation::Budget {
            cost,
            budget: inst.budget,
        });
    }
    Ok(())
}

/// The election after replacing every touched ballot. Out-of-range vote
/// indices are ignored.
pub fn apply_script(e: &Election, s: &BriberyScript) -> Election {
    let mut out = e.clone();
    let votes = out.votes_mut();
    for (&v, b) in &s.edits {
        if let Some(slot) = votes.get_mut(v) {
            *slot = b.clone();
        }
    }
    out
}

/// Legal and successful: the script validates and, after applying it, no
/// distinguished candidate is in any winning committee.
pub fn check_solution(inst: &BriberyInstance, s: &BriberyScript, limits: &Limits) -> Result<bool> {
    Ok(check_solution_detailed(inst, s, limits)?.is_ok())
}

/// Like [`check_solution`], but says why a script fails.
pub fn check_solution_detailed(
    inst: &BriberyInstance,
    s: &BriberyScript,
    limits: &Limits,
) -> Result<std::result::Result<(), SolutionFailure>> {
    if let Err(v) = validate_script(inst, s) {
        return Ok(Err(SolutionFailure::Invalid(v)));
    }
    let after = apply_script(&inst.election, s);
    let mut scored = 0;
    if excluded_counting(&after, inst.rule, inst.k, &inst.distinguished, limits, &mut scored)? {
        Ok(Ok(()))
    } else {
        Ok(Err(SolutionFailure::NotExcluded))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionFailure {
    Invalid(Violation),
    NotExcluded,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1() -> Election {
        Election::from_lists(3, &[&[0, 1], &[0], &[1, 2]]).unwrap()
    }

    fn inst(op: OperationKind, j: &[usize], k: usize, budget: usize, radius: usize) -> BriberyInstance {
        BriberyInstance::new(e1(), Rule::Av, op, j.iter().copied(), k, budget, radius).unwrap()
    }

    fn script(edits: &[(usize, &[usize])]) -> BriberyScript {
        BriberyScript::from_edits(edits.iter().map(|&(v, b)| (v, Ballot::new(b.iter().copied()))))
    }

    #[test]
    fn hamming_examples() {
        let a = Ballot::new([0, 1]);
        assert_eq!(hamming(&a, &a), 0);
        assert_eq!(hamming(&a, &Ballot::new([2])), 3);
        assert_eq!(hamming(&Ballot::empty(), &Ballot::full(5)), 5);
    }

    #[test]
    fn costs() {
        let add = inst(OperationKind::AppAdd, &[0], 1, 5, 0);
        assert_eq!(script_cost(&add, &script(&[(1, &[0, 1, 2])])), 2);
        assert_eq!(script_cost(&add, &BriberyScript::new()), 0);
        let vc = inst(OperationKind::Vc, &[0], 1, 5, 3);
        assert_eq!(script_cost(&vc, &script(&[(0, &[]), (1, &[1, 2]), (2, &[0])])), 3);
    }

    #[test]
    fn validation() {
        let vdc = inst(OperationKind::Vdc, &[0], 1, 1, 1);
        assert_eq!(validate_script(&vdc, &script(&[(0, &[0])])), Ok(()));
        let vac = inst(OperationKind::Vac, &[0], 1, 1, 1);
        assert!(matches!(
            validate_script(&vac, &script(&[(1, &[0, 1, 2])])),
            Err(Violation::Distance { distance: 2, .. })
        ));
        let del = inst(OperationKind::AppDel, &[0], 1, 3, 0);
        assert!(matches!(
            validate_script(&del, &script(&[(1, &[0, 1])])),
            Err(Violation::Direction { vote: 1, .. })
        ));
        assert!(matches!(
            validate_script(&del, &script(&[(1, &[0])])),
            Err(Violation::Unchanged { vote: 1 })
        ));
        assert!(matches!(
            validate_script(&del, &script(&[(7, &[])])),
            Err(Violation::VoteOutOfRange { vote: 7 })
        ));
        let vc = inst(OperationKind::Vc, &[0], 1, 1, 3);
        assert!(matches!(
            validate_script(&vc, &script(&[(0, &[2]), (1, &[2])])),
            Err(Violation::Budget { cost: 2, budget: 1 })
        ));
        assert!(matches!(
            validate_script(&vc, &script(&[(0, &[5])])),
            Err(Violation::CandidateOutOfRange { candidate: 5, .. })
        ));
    }

    #[test]
    fn radius_zero_admits_only_empty_script() {
        let vc = inst(OperationKind::Vc, &[0], 1, 3, 0);
        assert_eq!(validate_script(&vc, &BriberyScript::new()), Ok(()));
        assert!(validate_script(&vc, &script(&[(1, &[1])])).is_err());
    }

    #[test]
    fn apply() {
        let e = e1();
        let after = apply_script(&e, &script(&[(1, &[0, 2])]));
        assert_eq!(after.votes()[1], Ballot::new([0, 2]));
        assert_eq!(after.votes()[0], e.votes()[0]);
        assert_eq!(apply_script(&e, &BriberyScript::new()), e);
        let after = apply_script(&e, &script(&[(0, &[]), (2, &[0])]));
        assert_eq!(after.votes()[1], e.votes()[1]);
        assert_eq!(after.votes()[0], Ballot::empty());
        assert_eq!(after.votes()[2], Ballot::new([0]));
    }

    #[test]
    fn solutions() {
        let lim = Limits::default();
        let vc = inst(OperationKind::Vc, &[0], 1, 1, 3);
        assert!(check_solution(&vc, &script(&[(1, &[1])]), &lim).unwrap());
        assert!(!check_solution(&vc, &BriberyScript::new(), &lim).unwrap());
        let over = script(&[(1, &[1]), (0, &[1])]);
        assert!(!check_solution(&vc, &over, &lim).unwrap());
        assert_eq!(
            check_solution_detailed(&vc, &over, &lim).unwrap(),
            Err(SolutionFailure::Invalid(Violation::Budget { cost: 2, budget: 1 }))
        );
    }

    #[test]
    fn instance_validation() {
        let e = e1();
        assert!(BriberyInstance::new(e.clone(), Rule::Av, OperationKind::Vc, [], 1, 0, 0).is_err());
        assert!(BriberyInstance::new(e.clone(), Rule::Av, OperationKind::Vc, [3], 1, 0, 0).is_err());
        assert!(BriberyInstance::new(e.clone(), Rule::Av, OperationKind::Vc, [0], 0, 0, 0).is_err());
        assert!(BriberyInstance::new(e, Rule::Av, OperationKind::Vc, [0], 4, 0, 0).is_err());
    }
}
