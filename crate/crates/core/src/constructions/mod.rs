//! Constructions built on top of `𝒱_C`: the twisted tensor product with a
//! semigroup algebra, the differential bialgebra `B_L`, group-like
//! bookkeeping and morphisms.

pub mod bl;
pub mod grouplike;
pub mod morphism;
pub mod semigroup;
pub mod tensor_phi;

pub use bl::{BlKey, DiffElement, Monomial, BL};
pub use semigroup::{Alpha, SemigroupL};
pub use tensor_phi::{PhiMap, TensorPhi, TensorPhiKey, TensorPhiState};
