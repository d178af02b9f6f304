//! Hardness-reduction instance builders with planted witnesses, and brute
//! force for their source problems (independent set, clique, RX3C).

use std::fmt;
use std::str::FromStr;

use log::warn;

use crate::election::{binomial, Ballot, Combinations, Election, Rule};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::model::{BriberyInstance, BriberyScript, OperationKind};

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Edges as `(u, v)` with `u < v`, in input order.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![vec![false; n]; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInstance(format!("edge ({u}, {v}) leaves the {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop at vertex {u}")));
            }
            if adjacency[u][v] {
                return Err(Error::InvalidInstance(format!("duplicate edge ({u}, {v})")));
            }
            adjacency[u][v] = true;
            adjacency[v][u] = true;
            list.push((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n,
            edges: list,
            adjacency,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u][v]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].iter().filter(|&&a| a).count()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|u| self.degree(u) == d).then_some(d)
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle needs at least 3 vertices")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
        Graph::new(a + b, edges).expect("complete bipartite graph is simple")
    }

    /// Two `n`-cycles joined by a perfect matching.
    pub fn prism(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (n + i, n + (i + 1) % n), (i, n + i)]);
        Graph::new(2 * n, edges).expect("prism needs at least 3 vertices per cycle")
    }

    pub fn hypercube(dim: u32) -> Self {
        let n = 1usize << dim;
        let edges = (0..n).flat_map(|u| (0..dim).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v);
        Graph::new(n, edges).expect("hypercube is simple")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, 5 + i));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// A universe `0..3κ` and `3κ` triples, every element in exactly three.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rx3cInstance {
    kappa: usize,
    triples: Vec<[usize; 3]>,
}

impl Rx3cInstance {
    pub fn new(kappa: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        let size = 3 * kappa;
        if kappa == 0 {
            return Err(Error::InvalidInstance("kappa must be positive".into()));
        }
        if triples.len() != size {
            return Err(Error::InvalidInstance(format!(
                "expected {size} triples, got {}",
                triples.len()
            )));
        }
        let mut count = vec![0usize; size];
        let mut sorted = Vec::with_capacity(size);
        for (i, t) in triples.into_iter().enumerate() {
            let mut t = t;
            t.sort_unstable();
            if t[2] >= size {
                return Err(Error::InvalidInstance(format!("triple {i} leaves the universe 0..{size}")));
            }
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidInstance(format!("triple {i} repeats an element")));
            }
            for x in t {
                count[x] += 1;
            }
            sorted.push(t);
        }
        if let Some(x) = (0..size).find(|&x| count[x] != 3) {
            return Err(Error::InvalidInstance(format!(
                "element {x} appears in {} triples, not 3",
                count[x]
            )));
        }
        Ok(Rx3cInstance { kappa, triples: sorted })
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn universe_size(&self) -> usize {
        3 * self.kappa
    }

    /// Triples with their elements ascending, in input order.
    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    fn is_cover(&self, picks: &[usize]) -> bool {
        let mut seen = vec![false; self.universe_size()];
        picks.len() == self.kappa
            && picks.iter().all(|&t| {
                t < self.triples.len()
                    && self.triples[t].iter().all(|&x| !std::mem::replace(&mut seen[x], true))
            })
    }
}

fn checked_subsets(n: usize, k: usize, cap: u128) -> Result<()> {
    let needed = binomial(n, k);
    if needed > cap {
        return Err(Error::SearchSpaceCap { estimate: needed, cap });
    }
    Ok(())
}

fn first_subset(n: usize, k: usize, cap: u128, accept: impl Fn(&[usize]) -> bool) -> Result<Option<Vec<usize>>> {
    checked_subsets(n, k, cap)?;
    let mut combos = Combinations::new(n, k);
    while let Some(s) = combos.next_subset() {
        if accept(s) {
            return Ok(Some(s.to_vec()));
        }
    }
    Ok(None)
}

/// The lexicographically first exact cover (triple indices), if any.
pub fn rx3c_bruteforce(inst: &Rx3cInstance, limits: &Limits) -> Result<Option<Vec<usize>>> {
    first_subset(inst.triples.len(), inst.kappa, limits.search_cap, |s| inst.is_cover(s))
}

/// The lexicographically first independent set of size `kappa`, if any.
pub fn independent_set_bruteforce(g: &Graph, kappa: usize, limits: &Limits) -> Result<Option<Vec<usize>>> {
    first_subset(g.n, kappa, limits.search_cap, |s| g.is_independent(s))
}

/// The lexicographically first clique of size `kappa`, if any.
pub fn clique_bruteforce(g: &Graph, kappa: usize, limits: &Limits) -> Result<Option<Vec<usize>>> {
    first_subset(g.n, kappa, limits.search_cap, |s| g.is_clique(s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    NwdCcav,
    NwdPav,
    AppAddSavRx3c,
    VcAvRx3c,
    VdcAvRx3c,
    VcAvClique,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 6] = [
        GadgetKind::NwdCcav,
        GadgetKind::NwdPav,
        GadgetKind::AppAddSavRx3c,
        GadgetKind::VcAvRx3c,
        GadgetKind::VdcAvRx3c,
        GadgetKind::VcAvClique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::NwdCcav => "nwd-ccav",
            GadgetKind::NwdPav => "nwd-pav",
            GadgetKind::AppAddSavRx3c => "appadd-sav-rx3c",
            GadgetKind::VcAvRx3c => "vc-av-rx3c",
            GadgetKind::VdcAvRx3c => "vdc-av-rx3c",
            GadgetKind::VcAvClique => "vc-av-clique",
        }
    }

    /// Whether the source problem is RX3C (otherwise a graph).
    pub fn uses_rx3c(self) -> bool {
        matches!(
            self,
            GadgetKind::AppAddSavRx3c | GadgetKind::VcAvRx3c | GadgetKind::VdcAvRx3c
        )
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GadgetKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInstance(format!("unknown gadget kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Graph { graph: Graph, kappa: usize },
    Rx3c(Rx3cInstance),
}

/// A generated instance together with what is needed to plant witnesses.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub instance: BriberyInstance,
    pub source: Source,
    /// Index of the first edge or triple vote.
    first_source_vote: usize,
    /// The extra candidate `p`.
    p: usize,
}

impl Gadget {
    pub fn p(&self) -> usize {
        self.p
    }
}

fn regular(g: &Graph) -> Result<usize> {
    match g.regular_degree() {
        Some(d) if d >= 1 => Ok(d),
        Some(_) => Err(Error::Precondition("graph has no edges".into())),
        None => Err(Error::Precondition("graph is not regular".into())),
    }
}

fn gen_nwd(g: &Graph, kappa: usize, kind: GadgetKind) -> Result<Gadget> {
    let d = regular(g)?;
    let n = g.num_vertices();
    if kappa == 0 || kappa > n {
        return Err(Error::Precondition(format!("kappa must be between 1 and {n}")));
    }
    let (copies, rule, p_votes) = match kind {
        GadgetKind::NwdCcav => (1, Rule::Ccav, d - 1),
        _ => (2, Rule::Pav, 2 * d - 1),
    };
    let p = n;
    let mut votes = Vec::new();
    for &(u, v) in g.edges() {
        for _ in 0..copies {
            votes.push(Ballot::new([u, v]));
        }
    }
    votes.extend(std::iter::repeat(Ballot::new([p])).take(p_votes));
    let election = Election::new(n + 1, votes)?;
    let instance = BriberyInstance::new(election, rule, OperationKind::Vc, [p], kappa, 0, 0)?;
    Ok(Gadget {
        kind,
        instance,
        source: Source::Graph {
            graph: g.clone(),
            kappa,
        },
        first_source_vote: 0,
        p,
    })
}

/// CCAV non-winner determination: `p` is excluded iff `g` has an independent
/// set of size `kappa`.
pub fn gen_nwd_ccav(g: &Graph, kappa: usize) -> Result<Gadget> {
    gen_nwd(g, kappa, GadgetKind::NwdCcav)
}

/// The PAV counterpart of [`gen_nwd_ccav`]: two votes per edge and `2d - 1`
/// votes for `p`.
pub fn gen_nwd_pav(g: &Graph, kappa: usize) -> Result<Gadget> {
    gen_nwd(g, kappa, GadgetKind::NwdPav)
}

fn rx3c_gadget(kind: GadgetKind, inst: &Rx3cInstance, prefix: Vec<Ballot>, rule: Rule, op: OperationKind, radius: usize) -> Result<Gadget> {
    let size = inst.universe_size();
    let p = size;
    let first_source_vote = prefix.len();
    let mut votes = prefix;
    votes.extend(inst.triples().iter().map(|t| Ballot::new(t.iter().copied())));
    let election = Election::new(size + 1, votes)?;
    let instance = BriberyInstance::new(election, rule, op, 0..size, 1, inst.kappa(), radius)?;
    Ok(Gadget {
        kind,
        instance,
        source: Source::Rx3c(inst.clone()),
        first_source_vote,
        p,
    })
}

/// AppAdd under SAV: `3κ²/4 - 3κ` votes approving the whole universe, then
/// one vote per triple. Needs κ even and κ > 4.
pub fn gen_appadd_sav_rx3c(inst: &Rx3cInstance) -> Result<Gadget> {
    let kappa = inst.kappa();
    if kappa % 2 != 0 || kappa <= 4 {
        return Err(Error::Precondition(format!("kappa must be even and above 4, got {kappa}")));
    }
    // 3κ²/4 is an integer for even κ once κ² is divisible by 4
    let fillers = 3 * kappa * kappa / 4 - 3 * kappa;
    let prefix = vec![Ballot::new(0..inst.universe_size()); fillers];
    rx3c_gadget(GadgetKind::AppAddSavRx3c, inst, prefix, Rule::Sav, OperationKind::AppAdd, 0)
}

/// VC under AV: `κ - 3` singleton votes per element (element order), then one
/// vote per triple. Needs κ ≥ 4 and r ≥ 4.
pub fn gen_vc_av_rx3c(inst: &Rx3cInstance, radius: usize) -> Result<Gadget> {
    let kappa = inst.kappa();
    if kappa < 4 {
        return Err(Error::Precondition(format!("kappa must be at least 4, got {kappa}")));
    }
    if radius < 4 {
        return Err(Error::Precondition(format!("r must be at least 4, got {radius}")));
    }
    let prefix = (0..inst.universe_size())
        .flat_map(|x| std::iter::repeat(Ballot::new([x])).take(kappa - 3))
        .collect();
    rx3c_gadget(GadgetKind::VcAvRx3c, inst, prefix, Rule::Av, OperationKind::Vc, radius)
}

/// VDC under AV: three votes for `p`, then one vote per triple. Needs r ≥ 3.
pub fn gen_vdc_av_rx3c(inst: &Rx3cInstance, radius: usize) -> Result<Gadget> {
    if radius < 3 {
        return Err(Error::Precondition(format!("r must be at least 3, got {radius}")));
    }
    let prefix = vec![Ballot::new([inst.universe_size()]); 3];
    rx3c_gadget(GadgetKind::VdcAvRx3c, inst, prefix, Rule::Av, OperationKind::Vdc, radius)
}

/// VC under AV from clique on a d-regular graph: one vote per edge approving
/// everyone but its endpoints, then `d + 1 - (κ-1)(κ+2)/2` votes approving
/// everyone but `p`.
///
/// The construction is only proven correct for d > κ³; `relax` skips that
/// check (with a warning) so small graphs can be used for smoke tests.
pub fn gen_vc_av_clique(g: &Graph, kappa: usize, radius: usize, relax: bool) -> Result<Gadget> {
    let d = regular(g)?;
    let n = g.num_vertices();
    if kappa < 2 || kappa > n {
        return Err(Error::Precondition(format!("kappa must be between 2 and {n}, got {kappa}")));
    }
    if radius < 3 {
        return Err(Error::Precondition(format!("r must be at least 3, got {radius}")));
    }
    if d <= kappa.pow(3) {
        if !relax {
            return Err(Error::Precondition(format!("degree {d} must exceed kappa^3 = {}", kappa.pow(3))));
        }
        warn!("degree {d} does not exceed kappa^3 = {}; the reduction is not guaranteed", kappa.pow(3));
    }
    let fillers = (d + 1) as i64 - ((kappa - 1) * (kappa + 2) / 2) as i64;
    if fillers <= 0 {
        return Err(Error::Precondition(format!(
            "filler vote count d + 1 - (kappa-1)(kappa+2)/2 = {fillers} is not positive"
        )));
    }
    let p = n;
    let everyone = Ballot::full(n + 1);
    let mut votes: Vec<Ballot> = g
        .edges()
        .iter()
        .map(|&(u, v)| everyone.without(u).without(v))
        .collect();
    votes.extend(std::iter::repeat(everyone.without(p)).take(fillers as usize));
    let election = Election::new(n + 1, votes)?;
    let budget = kappa * (kappa - 1) / 2;
    let instance = BriberyInstance::new(election, Rule::Av, OperationKind::Vc, [p], kappa, budget, radius)?;
    Ok(Gadget {
        kind: GadgetKind::VcAvClique,
        instance,
        source: Source::Graph {
            graph: g.clone(),
            kappa,
        },
        first_source_vote: 0,
        p,
    })
}

/// Appends `n·m²` never-approved candidates and switches the rule to NSAV.
/// Strict SAV order among the original candidates becomes strict NSAV order.
pub fn pad_election(e: &Election) -> Election {
    let m = e.num_candidates();
    let dummies = e.num_votes() * m * m;
    Election::new(m + dummies, e.votes().to_vec()).expect("padding keeps ballots in range")
}

/// The NSAV variant of a SAV gadget.
pub fn pad_with_dummies(g: &Gadget) -> Result<Gadget> {
    if g.instance.rule != Rule::Sav {
        return Err(Error::Precondition(format!(
            "padding applies to SAV instances, got {}",
            g.instance.rule
        )));
    }
    let i = &g.instance;
    let instance = BriberyInstance::new(
        pad_election(&i.election),
        Rule::Nsav,
        i.op,
        i.distinguished.iter().copied(),
        i.k,
        i.budget,
        i.radius,
    )?;
    Ok(Gadget {
        instance,
        ..g.clone()
    })
}

/// Solves the source problem by brute force.
pub fn source_bruteforce(g: &Gadget, limits: &Limits) -> Result<Option<Vec<usize>>> {
    match (&g.source, g.kind) {
        (Source::Rx3c(r), _) => rx3c_bruteforce(r, limits),
        (Source::Graph { graph, kappa }, GadgetKind::VcAvClique) => clique_bruteforce(graph, *kappa, limits),
        (Source::Graph { graph, kappa }, _) => independent_set_bruteforce(graph, *kappa, limits),
    }
}

/// The script the forward direction of the reduction prescribes for a source
/// witness: triple indices of an exact cover, or the vertices of an
/// independent set / clique.
///
/// Non-winner determination gadgets have budget 0, so their script is empty.
pub fn plant_witness(g: &Gadget, witness: &[usize]) -> Result<BriberyScript> {
    let votes = g.instance.election.votes();
    match &g.source {
        Source::Rx3c(r) => {
            let mut picks = witness.to_vec();
            picks.sort_unstable();
            if !r.is_cover(&picks) {
                return Err(Error::InvalidWitness(format!("{witness:?} is not an exact cover")));
            }
            let script = picks.iter().map(|&t| {
                let v = g.first_source_vote + t;
                let ballot = match g.kind {
                    GadgetKind::AppAddSavRx3c => votes[v].with(g.p),
                    GadgetKind::VcAvRx3c => Ballot::new([g.p]),
                    _ => Ballot::empty(),
                };
                (v, ballot)
            });
            Ok(BriberyScript::from_edits(script))
        }
        Source::Graph { graph, kappa } => {
            let mut set = witness.to_vec();
            set.sort_unstable();
            set.dedup();
            if set.len() != *kappa || set.iter().any(|&u| u >= graph.num_vertices()) {
                return Err(Error::InvalidWitness(format!("{witness:?} is not a {kappa}-set of vertices")));
            }
            if g.kind == GadgetKind::VcAvClique {
                if !graph.is_clique(&set) {
                    return Err(Error::InvalidWitness(format!("{witness:?} is not a clique")));
                }
                let all_but_p = Ballot::full(graph.num_vertices() + 1).without(g.p);
                let script = graph
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, (u, v))| set.contains(u) && set.contains(v))
                    .map(|(e, _)| (g.first_source_vote + e, all_but_p.clone()));
                Ok(BriberyScript::from_edits(script))
            } else {
                if !graph.is_independent(&set) {
                    return Err(Error::InvalidWitness(format!("{witness:?} is not independent")));
                }
                Ok(BriberyScript::new())
            }
        }
    }
}
