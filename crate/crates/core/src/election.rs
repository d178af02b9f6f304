//! Approval elections, the five committee scoring rules, and winner determination.
//!
//! Candidates are the indices `0..m`. A ballot is the set of candidates a voter
//! approves. Every score is an exact [`Rational`]; committee winners are all
//! maximum-score `k`-subsets, with no tie-breaking.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::{harmonic, int, scale_factor, Rational};

/// A set of candidate indices, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ballot(Vec<usize>);

impl Ballot {
    pub fn new(candidates: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = candidates.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Ballot(v)
    }

    pub fn empty() -> Self {
        Ballot(Vec::new())
    }

    /// All of `0..m`.
    pub fn full(m: usize) -> Self {
        Ballot((0..m).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max_candidate(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// |self ∩ other| for two sorted index lists.
    pub fn intersection_len(&self, other: &[usize]) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        let a = &self.0;
        while i < a.len() && j < other.len() {
            match a[i].cmp(&other[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn intersection(&self, other: &Ballot) -> Ballot {
        Ballot(self.iter().filter(|&c| other.contains(c)).collect())
    }

    pub fn is_subset_of(&self, other: &Ballot) -> bool {
        self.intersection_len(&other.0) == self.len()
    }

    pub fn union(&self, other: &Ballot) -> Ballot {
        Ballot::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &Ballot) -> Ballot {
        Ballot(self.iter().filter(|&c| !other.contains(c)).collect())
    }

    pub fn with(&self, c: usize) -> Ballot {
        Ballot::new(self.iter().chain(std::iter::once(c)))
    }

    pub fn without(&self, c: usize) -> Ballot {
        Ballot(self.iter().filter(|&x| x != c).collect())
    }
}

impl FromIterator<usize> for Ballot {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Ballot::new(iter)
    }
}

impl fmt::Display for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// `m` candidates and an ordered list of approval ballots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Election {
    m: usize,
    votes: Vec<Ballot>,
}

impl Election {
    pub fn new(m: usize, votes: Vec<Ballot>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidElection("at least one candidate is required".into()));
        }
        for (i, v) in votes.iter().enumerate() {
            if let Some(c) = v.max_candidate() {
                if c >= m {
                    return Err(Error::InvalidElection(format!(
                        "vote {i} approves candidate {c} but there are only {m} candidates"
                    )));
                }
            }
        }
        Ok(Election { m, votes })
    }

    /// Convenience constructor from nested index lists.
    pub fn from_lists(m: usize, votes: &[&[usize]]) -> Result<Self> {
        Election::new(m, votes.iter().map(|v| Ballot::new(v.iter().copied())).collect())
    }

    pub fn num_candidates(&self) -> usize {
        self.m
    }

    pub fn num_votes(&self) -> usize {
        self.votes.len()
    }

    pub fn votes(&self) -> &[Ballot] {
        &self.votes
    }

    pub(crate) fn votes_mut(&mut self) -> &mut Vec<Ballot> {
        &mut self.votes
    }

    /// Number of votes approving `c`.
    pub fn approval_count(&self, c: usize) -> usize {
        self.votes.iter().filter(|v| v.contains(c)).count()
    }

    /// Approval counts of all candidates.
    pub fn av_scores(&self) -> Vec<usize> {
        let mut s = vec![0; self.m];
        for v in &self.votes {
            for c in v.iter() {
                s[c] += 1;
            }
        }
        s
    }
}

/// A `k`-subset of the candidates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Committee(Vec<usize>);

impl Committee {
    pub fn new(m: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let b = Ballot::new(members);
        if b.is_empty() {
            return Err(Error::InvalidCommittee("committee must be nonempty".into()));
        }
        if let Some(c) = b.max_candidate() {
            if c >= m {
                return Err(Error::InvalidCommittee(format!(
                    "member {c} out of range for {m} candidates"
                )));
            }
        }
        Ok(Committee(b.0))
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        Committee(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn intersects(&self, set: &[usize]) -> bool {
        set.iter().any(|&c| self.contains(c))
    }
}

/// The five approval-based committee rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    Av,
    Sav,
    Nsav,
    Ccav,
    Pav,
}

impl Rule {
    pub const ALL: [Rule; 5] = [Rule::Av, Rule::Sav, Rule::Nsav, Rule::Ccav, Rule::Pav];

    /// Committee score is the sum of member scores.
    pub fn is_separable(self) -> bool {
        matches!(self, Rule::Av | Rule::Sav | Rule::Nsav)
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::Av => "av",
            Rule::Sav => "sav",
            Rule::Nsav => "nsav",
            Rule::Ccav => "ccav",
            Rule::Pav => "pav",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInstance(format!("unknown rule '{s}'")))
    }
}

/// What a single ballot contributes to the score of committee `w` (sorted members).
pub fn ballot_contribution(m: usize, rule: Rule, ballot: &Ballot, w: &[usize]) -> Rational {
    let t = ballot.intersection_len(w) as i128;
    let len = ballot.len() as i128;
    match rule {
        Rule::Av => int(t),
        Rule::Sav => {
            if len == 0 {
                Rational::zero()
            } else {
                Rational::new(t, len)
            }
        }
        Rule::Nsav => {
            let mut s = if len == 0 { Rational::zero() } else { Rational::new(t, len) };
            if ballot.len() != m {
                s -= Rational::new(w.len() as i128 - t, m as i128 - len);
            }
            s
        }
        Rule::Ccav => int((t > 0) as i128),
        Rule::Pav => harmonic(t as usize),
    }
}

/// `lcm(1..m)` times [`ballot_contribution`], computed in integers.
///
/// Panics when `lcm(1..m)` overflows `i128` (more than 88 candidates).
pub fn scaled_ballot_score(m: usize, rule: Rule, ballot: &Ballot, w: &[usize]) -> i128 {
    let scale = scale_factor(m).expect("lcm(1..m) must fit in i128");
    scaled_ballot_score_with(scale, m, rule, ballot, w)
}

pub(crate) fn scaled_ballot_score_with(
    scale: i128,
    m: usize,
    rule: Rule,
    ballot: &Ballot,
    w: &[usize],
) -> i128 {
    let t = ballot.intersection_len(w) as i128;
    let len = ballot.len() as i128;
    match rule {
        Rule::Av => scale * t,
        Rule::Sav => {
            if len == 0 {
                0
            } else {
                scale / len * t
            }
        }
        Rule::Nsav => {
            let pos = if len == 0 { 0 } else { scale / len * t };
            let neg = if ballot.len() == m {
                0
            } else {
                scale / (m as i128 - len) * (w.len() as i128 - t)
            };
            pos - neg
        }
        Rule::Ccav => {
            if t > 0 {
                scale
            } else {
                0
            }
        }
        Rule::Pav => (1..=t).map(|i| scale / i).sum(),
    }
}

fn check_committee(e: &Election, w: &Committee) -> Result<()> {
    if w.members().last().is_some_and(|&c| c >= e.m) {
        return Err(Error::InvalidCommittee(format!(
            "committee {:?} out of range for {} candidates",
            w.members(),
            e.m
        )));
    }
    Ok(())
}

/// Total score of committee `w` under `rule`.
pub fn score_committee(e: &Election, rule: Rule, w: &Committee) -> Result<Rational> {
    check_committee(e, w)?;
    Ok(committee_score(e, rule, w.members()))
}

pub(crate) fn committee_score(e: &Election, rule: Rule, w: &[usize]) -> Rational {
    if rule == Rule::Av {
        return int(e.votes.iter().map(|v| v.intersection_len(w) as i128).sum());
    }
    e.votes
        .iter()
        .fold(Rational::zero(), |acc, v| acc + ballot_contribution(e.m, rule, v, w))
}

/// Score of the singleton committee `{c}`.
pub fn score_candidate(e: &Election, rule: Rule, c: usize) -> Result<Rational> {
    if c >= e.m {
        return Err(Error::InvalidCommittee(format!(
            "candidate {c} out of range for {} candidates",
            e.m
        )));
    }
    Ok(committee_score(e, rule, &[c]))
}

/// Scores of all singleton committees.
pub fn candidate_scores(e: &Election, rule: Rule) -> Vec<Rational> {
    match rule {
        Rule::Av => e.av_scores().into_iter().map(|s| int(s as i128)).collect(),
        Rule::Sav | Rule::Nsav => {
            let m = e.m as i128;
            let mut scores = vec![Rational::zero(); e.m];
            let mut common = Rational::zero();
            for v in &e.votes {
                let len = v.len() as i128;
                if len > 0 {
                    let share = Rational::new(1, len);
                    for c in v.iter() {
                        scores[c] += share;
                    }
                }
                if rule == Rule::Nsav && len != m {
                    // every non-approved candidate loses 1/(m-|v|)
                    let share = Rational::new(1, m - len);
                    common -= share;
                    for c in v.iter() {
                        scores[c] += share;
                    }
                }
            }
            scores.into_iter().map(|s| s + common).collect()
        }
        _ => (0..e.m).map(|c| committee_score(e, rule, &[c])).collect(),
    }
}

/// C(n, k), saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at each step: acc * (n - i) / (i + 1) is C(n, i + 1)
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Lexicographic iteration over all `k`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    first: bool,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            first: true,
            done: k > n,
        }
    }

    /// Advances and returns the next subset, or `None` when exhausted.
    pub(crate) fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.done = true;
        None
    }
}

/// All maximum-score committees together with the shared score.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Winners {
    pub committees: Vec<Committee>,
    pub score: Rational,
}

fn check_size(e: &Election, k: usize) -> Result<()> {
    if k == 0 || k > e.m {
        return Err(Error::InvalidCommittee(format!(
            "committee size {k} must be between 1 and {}",
            e.m
        )));
    }
    Ok(())
}

fn check_enumeration(e: &Election, k: usize, limits: &Limits) -> Result<()> {
    let needed = binomial(e.m, k);
    if needed > limits.committee_cap {
        return Err(Error::EnumerationCap {
            needed,
            cap: limits.committee_cap,
        });
    }
    Ok(())
}

/// Every winning `k`-committee, by exhaustive enumeration in lexicographic order.
pub fn winning_committees(e: &Election, rule: Rule, k: usize, limits: &Limits) -> Result<Winners> {
    check_size(e, k)?;
    check_enumeration(e, k, limits)?;
    let mut best: Option<Rational> = None;
    let mut committees = Vec::new();
    let mut combos = Combinations::new(e.m, k);
    while let Some(w) = combos.next_subset() {
        let s = committee_score(e, rule, w);
        match best.as_ref().map(|b| s.cmp(b)) {
            Some(std::cmp::Ordering::Less) => {}
            Some(std::cmp::Ordering::Equal) => committees.push(Committee::from_sorted(w.to_vec())),
            _ => {
                best = Some(s);
                committees.clear();
                committees.push(Committee::from_sorted(w.to_vec()));
            }
        }
    }
    Ok(Winners {
        committees,
        score: best.expect("at least one committee exists when 1 <= k <= m"),
    })
}

fn check_distinguished(e: &Election, j: &[usize]) -> Result<()> {
    if j.is_empty() {
        return Err(Error::InvalidInstance("distinguished set must be nonempty".into()));
    }
    if let Some(&c) = j.iter().find(|&&c| c >= e.m) {
        return Err(Error::InvalidInstance(format!(
            "distinguished candidate {c} out of range"
        )));
    }
    Ok(())
}

/// Fast exclusion test for AV, SAV and NSAV: `p` is in no winning committee
/// iff at least `k` candidates score strictly higher than `p`.
pub fn separable_excluded(e: &Election, rule: Rule, k: usize, j: &[usize]) -> Result<bool> {
    if !rule.is_separable() {
        return Err(Error::not_applicable(
            "separable",
            format!("{rule} committee scores are not sums of candidate scores"),
        ));
    }
    check_size(e, k)?;
    check_distinguished(e, j)?;
    Ok(separable_excluded_unchecked(e, rule, k, j))
}

pub(crate) fn separable_excluded_unchecked(e: &Election, rule: Rule, k: usize, j: &[usize]) -> bool {
    if rule == Rule::Av {
        let s = e.av_scores();
        return j.iter().all(|&p| s.iter().filter(|&&x| x > s[p]).count() >= k);
    }
    let s = candidate_scores(e, rule);
    j.iter().all(|&p| s.iter().filter(|x| **x > s[p]).count() >= k)
}

/// True iff no winning `k`-committee contains a member of `j`.
pub fn is_excluded(e: &Election, rule: Rule, k: usize, j: &[usize], limits: &Limits) -> Result<bool> {
    let mut scored = 0;
    excluded_counting(e, rule, k, j, limits, &mut scored)
}

/// [`is_excluded`] that also counts the committees scored by enumeration.
pub(crate) fn excluded_counting(
    e: &Election,
    rule: Rule,
    k: usize,
    j: &[usize],
    limits: &Limits,
    scored: &mut u64,
) -> Result<bool> {
    check_size(e, k)?;
    check_distinguished(e, j)?;
    if rule.is_separable() {
        return Ok(separable_excluded_unchecked(e, rule, k, j));
    }
    enumerated_excluded(e, rule, k, j, limits, scored)
}

/// Exclusion by scanning every committee; valid for all rules.
pub fn excluded_by_enumeration(
    e: &Election,
    rule: Rule,
    k: usize,
    j: &[usize],
    limits: &Limits,
) -> Result<bool> {
    check_size(e, k)?;
    check_distinguished(e, j)?;
    let mut scored = 0;
    enumerated_excluded(e, rule, k, j, limits, &mut scored)
}

fn enumerated_excluded(
    e: &Election,
    rule: Rule,
    k: usize,
    j: &[usize],
    limits: &Limits,
    scored: &mut u64,
) -> Result<bool> {
    check_enumeration(e, k, limits)?;
    let mut in_j = vec![false; e.m];
    for &c in j {
        in_j[c] = true;
    }
    let mut best: Option<Rational> = None;
    let mut best_hits_j = false;
    let mut combos = Combinations::new(e.m, k);
    while let Some(w) = combos.next_subset() {
        *scored += 1;
        let s = committee_score(e, rule, w);
        let hits = w.iter().any(|&c| in_j[c]);
        match best.as_ref().map(|b| s.cmp(b)) {
            Some(std::cmp::Ordering::Less) => {}
            Some(std::cmp::Ordering::Equal) => best_hits_j |= hits,
            _ => {
                best = Some(s);
                best_hits_j = hits;
            }
        }
    }
    Ok(!best_hits_j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn e1() -> Election {
        Election::from_lists(3, &[&[0, 1], &[0], &[1, 2]]).unwrap()
    }

    fn committee(m: usize, c: &[usize]) -> Committee {
        Committee::new(m, c.iter().copied()).unwrap()
    }

    #[test]
    fn e1_committee_scores() {
        let e = e1();
        let w = committee(3, &[0, 1]);
        assert_eq!(score_committee(&e, Rule::Av, &w).unwrap(), int(4));
        assert_eq!(score_committee(&e, Rule::Pav, &w).unwrap(), frac(7, 2));
    }

    #[test]
    fn e1_candidate_scores() {
        let e = e1();
        assert_eq!(score_candidate(&e, Rule::Av, 0).unwrap(), int(2));
        assert_eq!(score_candidate(&e, Rule::Sav, 0).unwrap(), frac(3, 2));
        assert_eq!(score_candidate(&e, Rule::Nsav, 2).unwrap(), int(-1));
        assert!(score_candidate(&e, Rule::Av, 3).is_err());
        for rule in Rule::ALL {
            let direct: Vec<_> = (0..3).map(|c| score_candidate(&e, rule, c).unwrap()).collect();
            assert_eq!(candidate_scores(&e, rule), direct, "{rule}");
        }
    }

    #[test]
    fn empty_ballots_score_zero() {
        let e = Election::from_lists(3, &[&[], &[]]).unwrap();
        let w = committee(3, &[0, 2]);
        for rule in [Rule::Av, Rule::Sav, Rule::Ccav, Rule::Pav] {
            assert_eq!(score_committee(&e, rule, &w).unwrap(), int(0), "{rule}");
        }
        // NSAV still charges non-approved members of an empty ballot
        assert_eq!(score_committee(&e, Rule::Nsav, &w).unwrap(), frac(-4, 3));
    }

    #[test]
    fn full_ballot_has_no_negative_term() {
        let e = Election::from_lists(2, &[&[0, 1]]).unwrap();
        assert_eq!(score_candidate(&e, Rule::Nsav, 0).unwrap(), frac(1, 2));
    }

    #[test]
    fn committee_rejects_bad_input() {
        assert!(Committee::new(3, []).is_err());
        assert!(Committee::new(3, [3]).is_err());
        assert!(Election::from_lists(2, &[&[2]]).is_err());
        assert!(Election::new(0, vec![]).is_err());
    }

    #[test]
    fn winners_e1() {
        let e = e1();
        let lim = Limits::default();
        let w = winning_committees(&e, Rule::Av, 1, &lim).unwrap();
        assert_eq!(w.committees, vec![committee(3, &[0]), committee(3, &[1])]);
        assert_eq!(w.score, int(2));
        let w = winning_committees(&e, Rule::Ccav, 2, &lim).unwrap();
        // {0,1} and {0,2} satisfy all three votes, {1,2} misses vote {0}
        assert_eq!(w.committees, vec![committee(3, &[0, 1]), committee(3, &[0, 2])]);
        assert_eq!(w.score, int(3));
        let single = Election::from_lists(2, &[&[0]]).unwrap();
        for rule in Rule::ALL {
            let w = winning_committees(&single, rule, 1, &lim).unwrap();
            assert_eq!(w.committees, vec![committee(2, &[0])], "{rule}");
        }
        assert!(winning_committees(&e, Rule::Av, 0, &lim).is_err());
        assert!(winning_committees(&e, Rule::Av, 4, &lim).is_err());
    }

    #[test]
    fn enumeration_cap_is_an_error() {
        let e = Election::new(30, vec![]).unwrap();
        let lim = Limits {
            committee_cap: 1000,
            ..Limits::default()
        };
        assert!(matches!(
            winning_committees(&e, Rule::Pav, 15, &lim),
            Err(Error::EnumerationCap { .. })
        ));
        // separable rules never enumerate
        assert!(is_excluded(&e, Rule::Av, 15, &[0], &lim).is_ok());
        assert!(matches!(
            is_excluded(&e, Rule::Ccav, 15, &[0], &lim),
            Err(Error::EnumerationCap { .. })
        ));
    }

    #[test]
    fn exclusion_e1() {
        let e = e1();
        let lim = Limits::default();
        assert!(!is_excluded(&e, Rule::Av, 1, &[0], &lim).unwrap());
        assert!(is_excluded(&e, Rule::Av, 1, &[2], &lim).unwrap());
        assert!(separable_excluded(&e, Rule::Av, 1, &[2]).unwrap());
        // exactly two candidates strictly above candidate 2
        assert!(separable_excluded(&e, Rule::Av, 2, &[2]).unwrap());
        assert!(excluded_by_enumeration(&e, Rule::Av, 2, &[2], &lim).unwrap());
        for rule in Rule::ALL {
            for k in 1..=3 {
                assert!(!is_excluded(&e, rule, k, &[0, 1, 2], &lim).unwrap());
            }
        }
        let one = Election::from_lists(1, &[&[0]]).unwrap();
        assert!(!separable_excluded(&one, Rule::Av, 1, &[0]).unwrap());
        assert!(separable_excluded(&e, Rule::Pav, 1, &[0]).is_err());
    }

    #[test]
    fn scaled_examples() {
        let b = Ballot::new([0, 1]);
        assert_eq!(scaled_ballot_score(3, Rule::Sav, &b, &[0]), 3);
        assert_eq!(scaled_ballot_score(3, Rule::Av, &b, &[0, 1]), 12);
        assert_eq!(scaled_ballot_score(3, Rule::Pav, &Ballot::full(3), &[0, 1]), 9);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(18, 6), 18564);
        assert_eq!(binomial(200, 100), u128::MAX);
    }

    #[test]
    fn combinations_in_order() {
        let mut c = Combinations::new(4, 2);
        let mut all = vec![];
        while let Some(s) = c.next_subset() {
            all.push(s.to_vec());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        let mut c = Combinations::new(3, 0);
        assert_eq!(c.next_subset(), Some(&[][..]));
        assert_eq!(c.next_subset(), None);
    }
}
