//! Finite frames, coherence at a join arity, spectral spaces and their Hochster duals,
//! refinement of spatial frame morphisms, and support data for finite tensor-triangulated
//! presentations.

pub mod catalog;
pub mod corpus;
pub mod frame;
pub mod hochster;
pub mod poset;
pub mod refine;
pub mod stone;
pub mod text;
pub mod ttg;
