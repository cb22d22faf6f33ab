//! A small grounder for disjunctive logic programs with an integrated,
//! cost-guided rule-decomposition rewriter.
//!
//! The pipeline parses a program, optionally rewrites long rule bodies into
//! equivalent sets of shorter rules linked by fresh predicates (guided by a
//! join-cost estimator over live predicate statistics), and instantiates the
//! result with a semi-naive, index-backed evaluation. Brute-force oracles
//! (full instantiation and stable-model enumeration) back the test suite.

pub mod ast;
pub mod cost;
pub mod decompose;
pub mod ground;
pub mod hypergraph;
pub mod oracle;
pub mod parse;
pub mod smart;
pub mod store;

pub use ast::{Atom, CompOp, Literal, Program, Rule, SafetyReport, Term};
pub use cost::{EstimateError, JoinState, PredicateStats, StatsProvider};
pub use decompose::{DecomposeError, FreshNamer, RuleDecomposition};
pub use ground::{GroundConfig, GroundError, GroundProgram, Mode, RunReport};
pub use hypergraph::{Hypergraph, OrderingHeuristic, TdConfig, TreeDecomposition};
pub use parse::{parse_program, render_program, ParseError};
pub use smart::{DecisionLog, DecisionRecord, SdConfig};
pub use store::{GroundAtom, GroundStore, Value};
