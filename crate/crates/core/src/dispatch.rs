//! Algorithm selection.
//!
//! `auto` tries, in order: the matching polynomial algorithm; for AV/VDC the
//! pattern program (`ilp-j`) then the flow solver; for AV under VC/VAC with
//! `r ≥ m` the vote-subset enumeration; the committee-guessing program
//! (`ilp-m`); and finally the exhaustive oracle. A candidate that fails with a
//! resource-cap error (or a scale overflow) hands over to the next one.

use std::fmt;
use std::str::FromStr;

use crate::election::Rule;
use crate::error::{Error, Result};
use crate::fpt::{solve_fpt_m, solve_vc_vac_av_enum, solve_vdc_av_flow, solve_vdc_av_fpt_j};
use crate::limits::Limits;
use crate::model::{BriberyInstance, Decision, OperationKind};
use crate::oracle::solve_bruteforce;
use crate::poly::{solve_appadd_av, solve_appdel_av, solve_vac_av_k1, solve_vdc_av_r1};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Auto,
    Oracle,
    Poly,
    IlpM,
    IlpJ,
    Flow,
    Enum,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Auto,
        Algorithm::Oracle,
        Algorithm::Poly,
        Algorithm::IlpM,
        Algorithm::IlpJ,
        Algorithm::Flow,
        Algorithm::Enum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Oracle => "oracle",
            Algorithm::Poly => "poly",
            Algorithm::IlpM => "ilp-m",
            Algorithm::IlpJ => "ilp-j",
            Algorithm::Flow => "flow",
            Algorithm::Enum => "enum",
        }
    }

    /// Whether the algorithm is defined for this instance (caps aside).
    pub fn applies_to(self, inst: &BriberyInstance) -> bool {
        let av = inst.rule == Rule::Av;
        match self {
            Algorithm::Auto | Algorithm::Oracle | Algorithm::IlpM => true,
            Algorithm::Poly => poly_variant(inst).is_some(),
            Algorithm::IlpJ | Algorithm::Flow => av && inst.op == OperationKind::Vdc,
            Algorithm::Enum => {
                av && matches!(inst.op, OperationKind::Vc | OperationKind::Vac)
                    && inst.radius >= inst.election.num_candidates()
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInstance(format!("unknown algorithm {s:?}")))
    }
}

type PolySolver = fn(&BriberyInstance) -> Result<Decision>;

fn poly_variant(inst: &BriberyInstance) -> Option<PolySolver> {
    if inst.rule != Rule::Av {
        return None;
    }
    match inst.op {
        OperationKind::AppAdd => Some(solve_appadd_av),
        OperationKind::AppDel => Some(solve_appdel_av),
        OperationKind::Vac if inst.k == 1 => Some(solve_vac_av_k1),
        OperationKind::Vdc if inst.radius == 1 => Some(solve_vdc_av_r1),
        _ => None,
    }
}

fn run(inst: &BriberyInstance, algo: Algorithm, limits: &Limits) -> Result<Decision> {
    match algo {
        Algorithm::Auto => solve_auto(inst, limits),
        Algorithm::Oracle => solve_bruteforce(inst, limits),
        Algorithm::Poly => match poly_variant(inst) {
            Some(f) => f(inst),
            None => Err(Error::not_applicable(
                "poly",
                format!(
                    "no polynomial algorithm for rule {} with operation {} (k = {}, r = {})",
                    inst.rule, inst.op, inst.k, inst.radius
                ),
            )),
        },
        Algorithm::IlpM => solve_fpt_m(inst, limits),
        Algorithm::IlpJ => solve_vdc_av_fpt_j(inst, limits),
        Algorithm::Flow => solve_vdc_av_flow(inst, limits),
        Algorithm::Enum => solve_vc_vac_av_enum(inst, limits),
    }
}

/// The candidates `auto` tries, in order.
pub fn auto_order(inst: &BriberyInstance) -> Vec<Algorithm> {
    [
        Algorithm::Poly,
        Algorithm::IlpJ,
        Algorithm::Flow,
        Algorithm::Enum,
        Algorithm::IlpM,
        Algorithm::Oracle,
    ]
    .into_iter()
    .filter(|a| a.applies_to(inst))
    .collect()
}

fn solve_auto(inst: &BriberyInstance, limits: &Limits) -> Result<Decision> {
    let mut last = None;
    for algo in auto_order(inst) {
        match run(inst, algo, limits) {
            Err(e) if e.is_cap() || matches!(e, Error::ScaleOverflow { .. }) => {
                log::info!("{algo} gave up: {e}");
                last = Some(e);
            }
            other => return other,
        }
    }
    Err(last.expect("the oracle always applies"))
}

/// Runs the chosen algorithm.
pub fn solve(inst: &BriberyInstance, algo: Algorithm, limits: &Limits) -> Result<Decision> {
    run(inst, algo, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::Election;

    fn e1_inst(rule: Rule, op: OperationKind, k: usize, radius: usize) -> BriberyInstance {
        let e = Election::from_lists(3, &[&[0, 1], &[0], &[1, 2]]).unwrap();
        BriberyInstance::new(e, rule, op, [0], k, 1, radius).unwrap()
    }

    #[test]
    fn auto_prefers_poly() {
        let i = e1_inst(Rule::Av, OperationKind::AppAdd, 1, 0);
        let d = solve(&i, Algorithm::Auto, &Limits::default()).unwrap();
        assert_eq!(d.algorithm, "poly-appadd-av");
        assert!(d.answer);
    }

    #[test]
    fn applicability() {
        let lim = Limits::default();
        let sav = e1_inst(Rule::Sav, OperationKind::AppAdd, 1, 0);
        assert!(matches!(solve(&sav, Algorithm::Poly, &lim), Err(Error::NotApplicable { .. })));
        assert_eq!(auto_order(&sav), vec![Algorithm::IlpM, Algorithm::Oracle]);
        let vdc = e1_inst(Rule::Av, OperationKind::Vdc, 1, 2);
        assert_eq!(auto_order(&vdc), vec![Algorithm::IlpJ, Algorithm::Flow, Algorithm::IlpM, Algorithm::Oracle]);
        let vc = e1_inst(Rule::Av, OperationKind::Vc, 1, 3);
        assert_eq!(solve(&vc, Algorithm::Auto, &lim).unwrap().algorithm, "enum");
        assert_eq!("ILP-M".parse::<Algorithm>().unwrap(), Algorithm::IlpM);
    }

    #[test]
    fn auto_falls_back_on_caps() {
        let lim = Limits {
            subset_cap: 0,
            ..Limits::default()
        };
        let vc = e1_inst(Rule::Av, OperationKind::Vc, 1, 3);
        assert_eq!(solve(&vc, Algorithm::Auto, &lim).unwrap().algorithm, "ilp-m");
    }
}
