//! Worst-case steal counts for work-stealing executions over rooted
//! computation trees.
//!
//! A parallel computation is modelled as a rooted ordered tree owned by one
//! processor; idle processors steal subtrees from busy ones. This crate
//! computes the exact worst-case number of steals ("potential") of a tree
//! given a number of initially idle processors, closed forms for structured
//! tree families, the optimal schedule when several processors start with
//! their own trees, and a brute-force execution oracle used to validate all
//! of the faster paths.
//!
//! Start with [`Tree`] and [`potential`], or run the examples:
//!
//! ```text
//! cargo run --example basic_potential
//! cargo run --example closed_forms
//! cargo run --example lcrs_transform
//! cargo run --example multi_processor
//! cargo run --example exhaustive_oracle
//! cargo run --example random_corpus
//! ```

pub mod cli;
pub mod multi;
pub mod oracle;
pub mod potential;
pub mod tree;
pub mod verify;

pub use multi::{
    configuration_potential, configuration_potential_bruteforce, sorted_act_potential,
    AssignmentResult, Configuration, MultiError,
};
pub use oracle::{
    apply_steal, max_steals_exhaustive, max_steals_with, replay_sequence, OracleError,
    OracleOptions, ReplayError, ReplayResult, StealError, StealMove, DEFAULT_STATE_BUDGET,
};
pub use potential::{
    act_potential_closed, binomial, cbt_potential_closed, potential, potential_vector,
    potential_vector_reference, Overflow, PotentialVector, StealCount,
};
pub use tree::{enumerate_trees, ActSpec, ParseError, Tree, TreeError, TreeStats};
