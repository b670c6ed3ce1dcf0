//! Hom-algebraic objects stored by structure constants, and the axiom
//! checkers that validate them.
//!
//! Constructors only enforce shapes and invertibility of structure maps;
//! every algebraic axiom is a checker verdict, so deliberately broken
//! objects can be built and inspected.

mod algebra_checks;
mod module_checks;
mod pair_checks;
mod report;
mod types;

pub use algebra_checks::{
    check_antipode, check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hopf_suite,
};
pub use module_checks::{
    check_comodule, check_comodule_algebra, check_comodule_coalgebra, check_left_comodule, check_left_comodule_algebra,
    check_module, check_module_algebra, check_module_coalgebra, check_right_module, check_right_module_coalgebra,
};
pub use pair_checks::{
    check_cocycle, check_cotwisting, check_dual_pair, check_matched_pair, check_quasitriangular, check_twisting,
};
pub use report::{sweep, CheckEntry, CheckReport, Witness};
pub use types::{
    ComoduleCoaction, HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra, MatchedPairData, ModuleAction,
    PairingForm, RMatrix, Side, TwoCocycle,
};
