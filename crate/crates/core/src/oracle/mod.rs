//! Ground-truth character theory of `S_n`: Murnaghan-Nakayama tables,
//! class sizes, the standard inner product, permutation characters of
//! Young subgroups and the genuine-character test.
//!
//! Nothing here depends on the Foulkes-character closed forms, so every
//! claim about them can be certified against this module.

pub mod brute;
mod class_function;
mod symmetric;
mod table;

pub use class_function::{is_genuine_character, multiplicities, std_inner, CharacterCertificate, ClassFunction};
pub use symmetric::{h_to_classfunction, hook_content_gamma, induced_trivial, power_multiplicity, HCombination};
pub use table::{class_size, mn_character, CharacterTable};
