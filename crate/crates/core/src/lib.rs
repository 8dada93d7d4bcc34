//! Connected greedy edge colouring.
//!
//! The greedy edge colouring procedure walks an ordering of the edges and
//! gives every edge the smallest colour not already present on an incident
//! edge. An ordering is *connected* when every prefix induces a connected
//! subgraph. This crate provides:
//!
//! * constructions of connected orderings that greedily colour bipartite
//!   graphs with `Δ` colours ([`bipartite_order`]) and graphs of maximum
//!   degree three with at most four colours ([`subcubic_order`]);
//! * the hypercube-based gadgets and the reduction used to show that
//!   deciding `χ'_c(G) = χ'(G)` is hard ([`gadgets`]);
//! * an exhaustive, memoised oracle for the connected greedy chromatic
//!   index on small graphs ([`oracle`]);
//! * the supporting machinery: graphs, partial edge colourings with Kempe
//!   chains, the greedy engine, and Vizing/König colourings.

pub mod bipartite_order;
pub mod budget;
pub mod chromatic;
pub mod cli;
pub mod colouring;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod oracle;
pub mod subcubic_order;

pub use budget::{Budget, Decided};
pub use colouring::{Colour, EdgeColouring, KempeChain};
pub use graph::{EdgeId, Graph, Vertex};
pub use greedy::{ConnectedOrdering, GreedyResult};
