//! Exact-arithmetic simulation and analysis of one-dimensional Clifford
//! quantum cellular automata on the infinite qubit chain.

pub mod csca;
pub mod gf2poly;
pub mod pauli;
pub mod quasifree;
pub mod spacetime;
pub mod stabilizer_ent;
pub mod symplectic;

pub use csca::{CscaMatrix, Classification};
pub use gf2poly::LaurentPoly;
pub use pauli::{PauliWord, ProductState};
pub use symplectic::PhaseVector;
