//! Constructive search for cycles and circuits of prescribed parity through
//! a given vertex or edge.
//!
//! The centerpiece is a family of constructors ([`constructors`]) that take a
//! graph plus a connectivity/degree hypothesis and either return a validated
//! [`ParityWitness`] or report exactly which hypothesis fails. Independent of
//! the constructors, [`oracle`] enumerates small graphs exhaustively so every
//! answer can be cross-checked, [`atlas`] supplies all isomorphism classes up
//! to 7 vertices for sweep tests, and [`families`] generates the classic
//! counterexamples showing each hypothesis is necessary.
//!
//! ```
//! use parity_cycles::graph::{build_graph, EdgeId, Parity};
//! use parity_cycles::constructors::even_cycle_through_edge;
//! use parity_cycles::oracle::validate_witness;
//!
//! // K4: every edge lies on a 4-cycle, and degrees are divisible by 3.
//! let g = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
//! let w = even_cycle_through_edge(&g, EdgeId::new(0), 3).unwrap();
//! assert_eq!(w.parity, Parity::Even);
//! assert_eq!(validate_witness(&g, &w), Ok(()));
//! ```

pub mod atlas;
pub mod checks;
pub mod codec;
pub mod constructors;
pub mod disjoint;
pub mod families;
pub mod graph;
pub mod oracle;

pub use constructors::{ConstructError, ParityWitness, TheoremTag, Violation, WitnessObject};
pub use graph::{build_graph, Circuit, Cycle, EdgeId, Graph, Parity, Path, Target, VertexId};
