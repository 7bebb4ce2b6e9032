//! Library for the d-claw vertex deletion problem: exact, parameterized,
//! approximate and structure-exploiting solvers, hardness-reduction gadget
//! constructors, instance generators and the text formats binding them.

pub mod acceptance;
pub mod claw;
pub mod dblock;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod solvers;

pub use claw::{DClaw, Solution};
pub use graph::{Diameter, Graph, GraphError};
