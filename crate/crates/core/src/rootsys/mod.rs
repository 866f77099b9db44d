//! Exact root-system arithmetic for the finite simple types.
//!
//! Everything is in Bourbaki node numbering and integer coefficients over the
//! simple roots; no Euclidean embeddings are used.

mod cartan;
mod fold;
mod identify;
mod roots;

pub use cartan::{CartanMatrix, CartanType, Family};
pub use fold::{fold_e6, folded_matrix, FoldConvention, FoldingSpec};
pub use identify::identify_cartan_type;
pub use roots::{reflection_closure, simple_pairings, ExtendedBasis, Root, RootSystem};

pub fn build_root_system(cartan_type: CartanType) -> crate::Result<RootSystem> {
    RootSystem::new(cartan_type)
}

pub fn highest_root(rs: &RootSystem) -> Root {
    rs.highest_root().clone()
}

pub fn extended_basis(rs: &RootSystem) -> ExtendedBasis {
    rs.extended_basis()
}
