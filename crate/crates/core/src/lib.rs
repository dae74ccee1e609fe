//! Total graphs, total dominator total colorings, and the invariants around
//! them: construction of the standard families and their total graphs,
//! verification of proper/total/dominator colorings, exact branch-and-bound
//! solvers for α, α_mix, γ_t, γ_tm, χ, χ_T, χ_d^t and χ_d^tt, the published
//! explicit colorings for wheels, complete bipartite and complete graphs,
//! and the closed-form evaluators used to cross-check the solvers.

pub mod bits;
pub mod certificate;
pub mod cli;
pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod notation;
pub mod solve;
pub mod verify;
