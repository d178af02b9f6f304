//! Text formats for elections, graphs and RX3C instances, and JSON for
//! scripts, instance parameters and decisions.
//!
//! Election file: optional `#` comment lines, a header `m n`, then `n` ballot
//! lines of space-separated candidate indices (`-` for the empty ballot).
//! Graph file: `n m`, then `m` lines `u v`. RX3C file: `kappa`, then `3κ`
//! lines of three universe indices. All indices are 0-based.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::election::{Ballot, Election, Rule};
use crate::error::{Error, Result};
use crate::gadgets::{Graph, Rx3cInstance};
use crate::model::{BriberyInstance, BriberyScript, Decision, OperationKind, Stats};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Content lines (1-based line numbers), skipping blanks and `#` comments.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, line))
    })
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn number(line: usize, tok: &Token<'_>, what: &str) -> Result<usize> {
    tok.text
        .parse()
        .map_err(|_| Error::parse(line, tok.column, format!("expected {what}, found {:?}", tok.text)))
}

/// Parses a line of exactly `N` unsigned integers.
fn fixed<const N: usize>(line_no: usize, line: &str, what: &str) -> Result<[usize; N]> {
    let toks = tokens(line);
    if toks.len() != N {
        return Err(Error::parse(
            line_no,
            toks.get(N).map_or(1, |t| t.column),
            format!("expected {what}"),
        ));
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(&toks) {
        *slot = number(line_no, tok, "an unsigned integer")?;
    }
    Ok(out)
}

fn end_of_input(text: &str) -> usize {
    text.lines().count() + 1
}

pub fn parse_election(text: &str) -> Result<Election> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(end_of_input(text), 1, "missing header \"m n\""))?;
    let [m, n] = fixed::<2>(hline, header, "header \"m n\"")?;
    if m == 0 {
        return Err(Error::parse(hline, 1, "an election needs at least one candidate"));
    }
    let mut votes = Vec::new();
    for (line_no, line) in lines {
        if votes.len() == n {
            return Err(Error::parse(line_no, 1, format!("more than the {n} declared ballots")));
        }
        let toks = tokens(line);
        if toks.len() == 1 && toks[0].text == "-" {
            votes.push(Ballot::empty());
            continue;
        }
        let mut seen = Vec::with_capacity(toks.len());
        for tok in &toks {
            let c = number(line_no, tok, "a candidate index or \"-\"")?;
            if c >= m {
                return Err(Error::parse(
                    line_no,
                    tok.column,
                    format!("candidate {c} out of range for {m} candidates"),
                ));
            }
            if seen.contains(&c) {
                return Err(Error::parse(line_no, tok.column, format!("candidate {c} listed twice")));
            }
            seen.push(c);
        }
        votes.push(Ballot::new(seen));
    }
    if votes.len() != n {
        return Err(Error::parse(
            end_of_input(text),
            1,
            format!("expected {n} ballots, found {}", votes.len()),
        ));
    }
    Election::new(m, votes)
}

pub fn write_election(e: &Election) -> String {
    let mut out = format!("{} {}\n", e.num_candidates(), e.num_votes());
    for v in e.votes() {
        if v.is_empty() {
            out.push('-');
        } else {
            let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            out.push_str(&parts.join(" "));
        }
        out.push('\n');
    }
    out
}

/// Graphs keep a dense adjacency matrix.
pub const MAX_GRAPH_VERTICES: usize = 4096;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(end_of_input(text), 1, "missing header \"n m\""))?;
    let [n, m] = fixed::<2>(hline, header, "header \"n m\"")?;
    if n > MAX_GRAPH_VERTICES {
        return Err(Error::parse(hline, 1, format!("at most {MAX_GRAPH_VERTICES} vertices are supported")));
    }
    let mut edges = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(Error::parse(line_no, 1, format!("more than the {m} declared edges")));
        }
        let [u, v] = fixed::<2>(line_no, line, "an edge \"u v\"")?;
        if u >= n || v >= n {
            return Err(Error::parse(line_no, 1, format!("edge ({u}, {v}) leaves the {n} vertices")));
        }
        if u == v {
            return Err(Error::parse(line_no, 1, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line_no, 1, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            end_of_input(text),
            1,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.edges().len());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_rx3c(text: &str) -> Result<Rx3cInstance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(end_of_input(text), 1, "missing header \"kappa\""))?;
    let [kappa] = fixed::<1>(hline, header, "header \"kappa\"")?;
    if kappa == 0 {
        return Err(Error::parse(hline, 1, "kappa must be positive"));
    }
    let size = kappa.saturating_mul(3);
    let mut triples = Vec::new();
    for (line_no, line) in lines {
        if triples.len() == size {
            return Err(Error::parse(line_no, 1, format!("more than the {size} declared triples")));
        }
        let t = fixed::<3>(line_no, line, "a triple \"a b c\"")?;
        if let Some(&x) = t.iter().find(|&&x| x >= size) {
            return Err(Error::parse(line_no, 1, format!("element {x} leaves the universe 0..{size}")));
        }
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(Error::parse(line_no, 1, "triple repeats an element"));
        }
        triples.push(t);
    }
    if triples.len() != size {
        return Err(Error::parse(
            end_of_input(text),
            1,
            format!("expected {size} triples, found {}", triples.len()),
        ));
    }
    Rx3cInstance::new(kappa, triples)
}

pub fn write_rx3c(inst: &Rx3cInstance) -> String {
    let mut out = format!("{}\n", inst.kappa());
    for [a, b, c] in inst.triples() {
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EditJson {
    vote: usize,
    ballot: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScriptJson {
    operation: OperationKind,
    edits: Vec<EditJson>,
}

fn script_value(op: OperationKind, s: &BriberyScript) -> ScriptJson {
    ScriptJson {
        operation: op,
        edits: s
            .edits
            .iter()
            .map(|(&vote, b)| EditJson {
                vote,
                ballot: b.as_slice().to_vec(),
            })
            .collect(),
    }
}

pub fn write_script(op: OperationKind, s: &BriberyScript) -> String {
    serde_json::to_string_pretty(&script_value(op, s)).expect("scripts serialize")
}

/// Parses a script file. Ballots may be unsorted but must not repeat a
/// candidate, and each vote may be edited at most once.
pub fn parse_script(text: &str) -> Result<(OperationKind, BriberyScript)> {
    let raw: ScriptJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let mut script = BriberyScript::new();
    for edit in raw.edits {
        let mut sorted = edit.ballot.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Json(format!("ballot for vote {} repeats a candidate", edit.vote)));
        }
        if script.edits.insert(edit.vote, Ballot::new(sorted)).is_some() {
            return Err(Error::Json(format!("vote {} is edited twice", edit.vote)));
        }
    }
    Ok((raw.operation, script))
}

/// Everything about an instance except the election itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceParams {
    pub rule: Rule,
    pub op: OperationKind,
    pub k: usize,
    pub ell: usize,
    #[serde(default)]
    pub r: usize,
    pub distinguished: Vec<usize>,
}

impl InstanceParams {
    pub fn of(inst: &BriberyInstance) -> Self {
        InstanceParams {
            rule: inst.rule,
            op: inst.op,
            k: inst.k,
            ell: inst.budget,
            r: inst.radius,
            distinguished: inst.distinguished.clone(),
        }
    }

    pub fn instance(&self, election: Election) -> Result<BriberyInstance> {
        BriberyInstance::new(
            election,
            self.rule,
            self.op,
            self.distinguished.iter().copied(),
            self.k,
            self.ell,
            self.r,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("parameters serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }
}

/// SHA-256 (hex) of the canonical election text followed by the canonical
/// parameter JSON.
pub fn instance_digest(inst: &BriberyInstance) -> String {
    let mut h = Sha256::new();
    h.update(write_election(&inst.election));
    h.update(serde_json::to_string(&InstanceParams::of(inst)).expect("parameters serialize"));
    hex::encode(h.finalize())
}

/// One solver run, as printed by the command-line tool.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub digest: String,
    pub op: OperationKind,
    pub decision: Decision,
    pub time_ms: u64,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    answer: &'static str,
    witness: Option<ScriptJson>,
    algorithm: &'a str,
    stats: Stats,
    time_ms: u64,
    digest: &'a str,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let d = &self.decision;
        let value = ReportJson {
            answer: if d.answer { "yes" } else { "no" },
            witness: d.witness.as_ref().map(|s| script_value(self.op, s)),
            algorithm: d.algorithm,
            stats: d.stats,
            time_ms: self.time_ms,
            digest: &self.digest,
        };
        serde_json::to_string_pretty(&value).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_election, rng};
    use proptest::prelude::*;

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn election_examples() {
        let e = parse_election("3 2\n0 1\n-\n").unwrap();
        assert_eq!(e.num_candidates(), 3);
        assert_eq!(e.votes(), &[Ballot::new([0, 1]), Ballot::empty()]);
        assert_eq!(line_of(parse_election("3 1\n0 5\n").unwrap_err()), 2);
        assert_eq!(
            parse_election("# c\n3 1\n1 1\n").unwrap_err(),
            Error::parse(3, 3, "candidate 1 listed twice")
        );
        assert!(parse_election("3\n").is_err());
        assert!(parse_election("3 2\n0\n").is_err());
        assert!(parse_election("3 1\n0\n1\n").is_err());
        assert!(parse_election("0 0\n").is_err());
        assert_eq!(write_election(&parse_election("# x\n3 1\n2 0\n").unwrap()), "3 1\n0 2\n");
    }

    #[test]
    fn graph_and_rx3c() {
        let g = parse_graph("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.regular_degree(), Some(2));
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert_eq!(line_of(parse_graph("3 2\n0 1\n1 0\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_graph("3 1\n0 3\n").unwrap_err()), 2);
        let r = parse_rx3c("1\n0 1 2\n2 1 0\n0 2 1\n").unwrap();
        assert_eq!(r.triples(), &[[0, 1, 2]; 3]);
        assert_eq!(parse_rx3c(&write_rx3c(&r)).unwrap(), r);
        assert!(parse_rx3c("1\n0 1 2\n0 1 2\n").is_err());
        assert!(parse_rx3c("2\n0 1 2\n0 1 2\n0 1 2\n3 4 5\n3 4 5\n0 4 5\n").is_err());
    }

    #[test]
    fn script_json() {
        let s = BriberyScript::from_edits([(1, Ballot::new([0, 1])), (0, Ballot::empty())]);
        let text = write_script(OperationKind::Vc, &s);
        assert_eq!(parse_script(&text).unwrap(), (OperationKind::Vc, s));
        assert!(parse_script(r#"{"operation":"vc","edits":[{"vote":0,"ballot":[1,1]}]}"#).is_err());
        assert!(parse_script(r#"{"operation":"vc","edits":[{"vote":0,"ballot":[]},{"vote":0,"ballot":[1]}]}"#).is_err());
        assert!(parse_script(r#"{"operation":"swap","edits":[]}"#).is_err());
    }

    #[test]
    fn params_round_trip() {
        let e = parse_election("3 3\n0 1\n0\n1 2\n").unwrap();
        let inst = BriberyInstance::new(e.clone(), Rule::Av, OperationKind::AppAdd, [0], 1, 1, 0).unwrap();
        let p = InstanceParams::of(&inst);
        assert_eq!(InstanceParams::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(p.instance(e).unwrap(), inst);
        assert_eq!(instance_digest(&inst), instance_digest(&inst.clone()));
        assert_ne!(instance_digest(&inst), instance_digest(&inst.with_budget(2)));
    }

    proptest! {
        #[test]
        fn election_round_trip(seed in any::<u64>(), m in 1usize..8, n in 0usize..8) {
            let e = random_election(&mut rng(seed), m, n);
            let text = write_election(&e);
            prop_assert_eq!(parse_election(&text).unwrap(), e);
            prop_assert_eq!(write_election(&parse_election(&text).unwrap()), text);
        }

        #[test]
        fn parsers_never_panic(text in "[-#0-9 \n]{0,60}") {
            let _ = parse_election(&text);
            let _ = parse_graph(&text);
            let _ = parse_rx3c(&text);
            let _ = parse_script(&text);
        }
    }
}
