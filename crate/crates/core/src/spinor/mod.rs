//! Spinor modules, their tensor powers, and the Adams operations on them.

mod adams;
mod module;
mod morita;
mod operator;
mod symmetric;
mod tensor;

pub use adams::{
    adams_bar, adams_character, CharacterDecomposition, EigenModules, IsotypicPart,
    VirtualCyclotomicModule, MAX_CHARACTER_K,
};
pub use module::{exterior_basis, opposite_module, spinor_rep, twist_rep, GradedModule};
pub use morita::{
    hermitian_bott, hermitian_bott_of, morita_reduce, opposite_form_check, HermitianBott,
    MoritaRank, OppositeCheck,
};
pub use operator::Operator;
pub use symmetric::{character, cycle_type, irrep_dim, partitions, permutations_with_words};
pub use tensor::{tensor_power, TensorPower, TensorReport};
