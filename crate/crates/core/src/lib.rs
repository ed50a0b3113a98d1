pub mod algebra;
pub mod autgroup;
pub mod cli;
pub mod discriminant;
pub mod expr;
pub mod freeness;
pub mod invariants;
pub mod isomorphism;
pub mod perm;
pub mod poly;
pub mod presfile;
mod report;
pub mod skewpoly;
pub mod scalar;
