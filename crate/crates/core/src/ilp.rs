//! Feasibility of small bounded integer programs by depth-first search.
//!
//! Variables are branched in declaration order with ascending values. Every
//! constraint is normalised to `Σ a·x ≤ b`; a node is pruned when some
//! constraint cannot be met even with the most favourable completion of the
//! remaining variables. Constraints whose coefficients are all non-negative
//! ("packing" rows, e.g. budgets and group capacities) additionally cap how
//! much the remaining variables can move every other row.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    /// Inclusive upper bound; the lower bound is always 0.
    pub upper: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub terms: Vec<(usize, i128)>,
    pub sense: Sense,
    pub rhs: i128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntegerProgram {
    pub variables: Vec<Variable>,
    pub constraints: Vec<Constraint>,
}

impl IntegerProgram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_variable(&mut self, name: impl Into<String>, upper: i64) -> usize {
        assert!(upper >= 0, "upper bounds are non-negative");
        self.variables.push(Variable {
            name: name.into(),
            upper,
        });
        self.variables.len() - 1
    }

    pub fn add_constraint(&mut self, terms: Vec<(usize, i128)>, sense: Sense, rhs: i128) {
        debug_assert!(terms.iter().all(|&(j, _)| j < self.variables.len()));
        self.constraints.push(Constraint { terms, sense, rhs });
    }

    pub fn is_satisfied_by(&self, x: &[i64]) -> bool {
        x.len() == self.variables.len()
            && x.iter().zip(&self.variables).all(|(&v, var)| (0..=var.upper).contains(&v))
            && self.constraints.iter().all(|c| {
                let lhs: i128 = c.terms.iter().map(|&(j, a)| a * x[j] as i128).sum();
                match c.sense {
                    Sense::Le => lhs <= c.rhs,
                    Sense::Ge => lhs >= c.rhs,
                }
            })
    }
}

impl fmt::Display for IntegerProgram {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        for c in &self.constraints {
            for (i, &(j, a)) in c.terms.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "{a}*{}", self.variables[j].name)?;
            }
            let op = if c.sense == Sense::Le { "<=" } else { ">=" };
            writeln!(f, " {op} {}", c.rhs)?;
        }
        for v in &self.variables {
            writeln!(f, "0 <= {} <= {}", v.name, v.upper)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IpOutcome {
    /// A feasible point, or `None` when the program is infeasible.
    pub assignment: Option<Vec<i64>>,
    pub nodes: u64,
}

/// Ratio `num/den` with `den > 0`; `den == 0` means unbounded.
#[derive(Clone, Copy)]
struct Ratio {
    num: i128,
    den: i128,
}

impl Ratio {
    const ZERO: Ratio = Ratio { num: 0, den: 1 };
    const INFINITE: Ratio = Ratio { num: 1, den: 0 };

    fn max(self, other: Ratio) -> Ratio {
        if self.den == 0 || other.den == 0 {
            return Ratio::INFINITE;
        }
        if self.num * other.den >= other.num * self.den {
            self
        } else {
            other
        }
    }
}

struct Engine {
    n: usize,
    upper: Vec<i64>,
    /// Dense rows in `≤` form.
    rows: Vec<Vec<i128>>,
    rhs: Vec<i128>,
    /// Σ_{j≥i} min(0, a_j)·u_j per row.
    suffix_neg: Vec<Vec<i128>>,
    /// Indices of packing rows.
    packing: Vec<usize>,
    /// For row r, packing row p (by position in `packing`) and start i: the
    /// largest |a_rj⁻| / a_pj over j ≥ i.
    ratio: Vec<Vec<Vec<Ratio>>>,
    /// For packing row p and start i: every remaining variable has a positive coefficient.
    covers_rest: Vec<Vec<bool>>,
    partial: Vec<i128>,
    x: Vec<i64>,
    nodes: u64,
    cap: u64,
}

impl Engine {
    fn new(p: &IntegerProgram, cap: u64) -> Self {
        let n = p.variables.len();
        let upper: Vec<i64> = p.variables.iter().map(|v| v.upper).collect();
        let mut rows = Vec::with_capacity(p.constraints.len());
        let mut rhs = Vec::with_capacity(p.constraints.len());
        for c in &p.constraints {
            let sign = if c.sense == Sense::Le { 1 } else { -1 };
            let mut row = vec![0i128; n];
            for &(j, a) in &c.terms {
                row[j] += sign * a;
            }
            rows.push(row);
            rhs.push(sign * c.rhs);
        }
        let suffix_neg = rows
            .iter()
            .map(|row| {
                let mut s = vec![0i128; n + 1];
                for j in (0..n).rev() {
                    s[j] = s[j + 1] + row[j].min(0) * upper[j] as i128;
                }
                s
            })
            .collect();
        let packing: Vec<usize> = (0..rows.len())
            .filter(|&r| rows[r].iter().all(|&a| a >= 0) && rows[r].iter().any(|&a| a > 0))
            .collect();
        let ratio = rows
            .iter()
            .map(|row| {
                packing
                    .iter()
                    .map(|&p| {
                        let mut out = vec![Ratio::ZERO; n + 1];
                        for j in (0..n).rev() {
                            let here = if row[j] < 0 && upper[j] > 0 {
                                if rows[p][j] == 0 {
                                    Ratio::INFINITE
                                } else {
                                    Ratio {
                                        num: -row[j],
                                        den: rows[p][j],
                                    }
                                }
                            } else {
                                Ratio::ZERO
                            };
                            out[j] = here.max(out[j + 1]);
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        let covers_rest = packing
            .iter()
            .map(|&p| {
                let mut out = vec![true; n + 1];
                for j in (0..n).rev() {
                    out[j] = out[j + 1] && (rows[p][j] > 0 || upper[j] == 0);
                }
                out
            })
            .collect();
        Engine {
            n,
            upper,
            partial: vec![0; rows.len()],
            rows,
            rhs,
            suffix_neg,
            packing,
            ratio,
            covers_rest,
            x: vec![0; n],
            nodes: 0,
            cap,
        }
    }

    /// Lower bound on Σ_{j≥i} a_rj·x_j over completions allowed by the packing rows.
    fn rest_min(&self, r: usize, i: usize) -> i128 {
        let mut bound = -self.suffix_neg[r][i];
        for (pi, &p) in self.packing.iter().enumerate() {
            let q = self.ratio[r][pi][i];
            if q.den == 0 {
                continue;
            }
            let slack = self.rhs[p] - self.partial[p];
            // each unit of packing slack buys at most q of negative mass
            bound = bound.min((slack.max(0) * q.num) / q.den);
        }
        -bound
    }

    fn feasible_bound(&self, i: usize) -> bool {
        (0..self.rows.len()).all(|r| self.partial[r] + self.rest_min(r, i) <= self.rhs[r])
    }

    fn rest_forced_zero(&self, i: usize) -> bool {
        self.packing
            .iter()
            .enumerate()
            .any(|(pi, &p)| self.covers_rest[pi][i] && self.partial[p] == self.rhs[p])
    }

    fn search(&mut self, i: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::IpNodeCap { cap: self.cap });
        }
        if !self.feasible_bound(i) {
            return Ok(false);
        }
        if i == self.n || self.rest_forced_zero(i) {
            // every remaining variable sits at 0, which rest_min already allowed
            return Ok((0..self.rows.len()).all(|r| self.partial[r] <= self.rhs[r]));
        }
        let mut hi = self.upper[i] as i128;
        for r in 0..self.rows.len() {
            let a = self.rows[r][i];
            if a > 0 {
                let room = self.rhs[r] - self.partial[r] - self.rest_min(r, i + 1);
                if room < 0 {
                    return Ok(false);
                }
                hi = hi.min(room / a);
            }
        }
        for v in 0..=hi {
            if v > 0 {
                for r in 0..self.rows.len() {
                    self.partial[r] += self.rows[r][i];
                }
            }
            self.x[i] = v as i64;
            if self.search(i + 1)? {
                return Ok(true);
            }
        }
        for r in 0..self.rows.len() {
            self.partial[r] -= self.rows[r][i] * hi;
        }
        self.x[i] = 0;
        Ok(false)
    }
}

/// Finds a feasible point of `p` or proves there is none.
///
/// Errors with [`Error::IpNodeCap`] after `node_cap` search nodes.
pub fn solve_ip_feasibility(p: &IntegerProgram, node_cap: u64) -> Result<IpOutcome> {
    let mut engine = Engine::new(p, node_cap);
    let found = engine.search(0)?;
    let assignment = if found {
        // variables past the stopping point were never touched and stay 0
        debug_assert!(p.is_satisfied_by(&engine.x));
        Some(engine.x.clone())
    } else {
        None
    };
    Ok(IpOutcome {
        assignment,
        nodes: engine.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn contradictory_bounds() {
        let mut p = IntegerProgram::new();
        let x = p.add_variable("x", 5);
        p.add_constraint(vec![(x, 1)], Sense::Le, 2);
        p.add_constraint(vec![(x, 1)], Sense::Ge, 3);
        assert_eq!(solve_ip_feasibility(&p, 1000).unwrap().assignment, None);
    }

    #[test]
    fn first_point_in_order() {
        let mut p = IntegerProgram::new();
        let x = p.add_variable("x", 1);
        let y = p.add_variable("y", 1);
        p.add_constraint(vec![(x, 1), (y, 1)], Sense::Le, 1);
        p.add_constraint(vec![(x, 1)], Sense::Ge, 1);
        assert_eq!(solve_ip_feasibility(&p, 1000).unwrap().assignment, Some(vec![1, 0]));
    }

    #[test]
    fn unconstrained_is_zero() {
        let mut p = IntegerProgram::new();
        p.add_variable("a", 3);
        p.add_variable("b", 0);
        assert_eq!(solve_ip_feasibility(&p, 10).unwrap().assignment, Some(vec![0, 0]));
        assert_eq!(
            solve_ip_feasibility(&IntegerProgram::new(), 10).unwrap().assignment,
            Some(vec![])
        );
    }

    #[test]
    fn node_cap() {
        // x1 + ... + x12 = 13 with x_i <= 1 is infeasible only after search
        let mut p = IntegerProgram::new();
        let vars: Vec<usize> = (0..12).map(|i| p.add_variable(format!("x{i}"), 1)).collect();
        p.add_constraint(vars.iter().map(|&v| (v, 2)).collect(), Sense::Ge, 13);
        p.add_constraint(vars.iter().map(|&v| (v, 2)).collect(), Sense::Le, 13);
        assert_eq!(solve_ip_feasibility(&p, 1_000_000).unwrap().assignment, None);
        assert!(matches!(solve_ip_feasibility(&p, 3), Err(Error::IpNodeCap { cap: 3 })));
    }

    fn brute_force(p: &IntegerProgram) -> Option<Vec<i64>> {
        // lexicographically first feasible point
        fn go(p: &IntegerProgram, x: &mut Vec<i64>) -> bool {
            if x.len() == p.variables.len() {
                return p.is_satisfied_by(x);
            }
            for v in 0..=p.variables[x.len()].upper {
                x.push(v);
                if go(p, x) {
                    return true;
                }
                x.pop();
            }
            false
        }
        let mut x = vec![];
        go(p, &mut x).then_some(x)
    }

    proptest! {
        #[test]
        fn agrees_with_box_enumeration(
            uppers in proptest::collection::vec(0i64..=3, 1..=5),
            rows in proptest::collection::vec(
                (proptest::collection::vec(-4i128..=4, 5), any::<bool>(), -6i128..=8),
                0..=4,
            ),
        ) {
            let mut p = IntegerProgram::new();
            for (i, &u) in uppers.iter().enumerate() {
                p.add_variable(format!("x{i}"), u);
            }
            for (coeffs, le, rhs) in rows {
                let terms = coeffs.into_iter().take(uppers.len()).enumerate().collect();
                p.add_constraint(terms, if le { Sense::Le } else { Sense::Ge }, rhs);
            }
            let out = solve_ip_feasibility(&p, 1_000_000).unwrap();
            // value order is ascending and variables are branched in order,
            // so the first point found is the lexicographically smallest
            prop_assert_eq!(out.assignment, brute_force(&p));
        }
    }
}
