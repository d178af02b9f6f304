//! Destructive bribery in approval-based multi-winner elections.
//!
//! The crate scores committees under AV, SAV, NSAV, CCAV and PAV, decides
//! whether a briber can keep every distinguished candidate out of every
//! winning `k`-committee under five ballot-modification operations, and
//! builds hardness-gadget instances with planted witnesses.
//!
//! Solvers:
//! - [`oracle::solve_bruteforce`]: exhaustive ground truth for every rule and operation.
//! - [`poly`]: polynomial algorithms for AV (AppAdd, AppDel, VAC with k=1, VDC with r=1).
//! - [`fpt`]: the integer-program formulations, the flow-based VDC solver and
//!   the vote-subset enumeration for VC/VAC.

pub mod bench;
pub mod dispatch;
pub mod election;
pub mod error;
pub mod flow;
pub mod gadgets;
pub mod io;
pub mod fpt;
pub mod ilp;
pub mod limits;
pub mod matching;
pub mod model;
pub mod oracle;
pub mod poly;
pub mod random;
pub mod rational;

pub use election::{Ballot, Committee, Election, Rule};
pub use error::{Error, Result};
pub use limits::Limits;
pub use model::{BriberyInstance, BriberyScript, Decision, OperationKind, Stats};
pub use rational::Rational;
