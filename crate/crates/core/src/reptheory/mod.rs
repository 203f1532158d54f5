//! Representation theory of the biHecke monoid and its Borel submonoids:
//! translation modules, simple-module dimensions, lfix/rfix Cartan data,
//! radical filtrations, graded (q-)Cartan matrices, and the decomposition
//! matrix, all over exact rationals (with an optional modular mode).

mod borel;
pub mod cartan;
mod modules;
mod tables;

pub use borel::{cartan_borel, lfix, minimal_generating_set, quiver_m1, rfix};
pub use cartan::{
    algebra_tables, bihecke_cartan_pipeline, borel_cartan_pipeline, characters_bihecke,
    regular_rep,
    characters_borel, graded_cartan, graded_cartan_modular, radical_filtration, radical_rows,
    radical_rows_jtrivial, AlgebraTables, CharacterTable, Filtration,
};
pub use modules::{
    antisym_submodule, antisym_vector, dim_simple, dim_simple_linear, simple_basis,
    translation_module, whbihecke_dim, whbihecke_dim_linear, MatrixRep, PiGen, TranslationModule,
};
pub use tables::{
    character_t_restricted, decomposition_matrix, h0_restriction, table1_row, table_order,
    GradedMatrix, Table1Row,
};
