//! Plücker-type invariants of generic plane curves computed from their Newton
//! polygon, with an analytic oracle that checks them on random curves.

pub mod assumptions;
pub mod cli;
pub mod fan;
pub mod lattice;
pub mod oracle;
pub mod plucker;
pub mod svg;

pub use assumptions::{AssumptionReport, Verdict};
pub use fan::WeightedFan;
pub use lattice::{Covector, Face, LatticeDiagram, LatticePoint, LatticePolygon};
pub use plucker::{plucker_report, PluckerReport};
