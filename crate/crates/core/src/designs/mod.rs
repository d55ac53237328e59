//! Combinatorial ingredients: factorizations, triple systems, Latin squares,
//! group divisible designs, packings and the disjointification search.

pub mod check;
pub mod design13;
pub mod factorization;
pub mod format;
pub mod gdd;
pub mod gdd_pairs;
pub mod latin;
pub mod packing;
pub mod search;
pub mod steiner;

pub use check::{check_pair_pattern, check_t_coverage, is_pair_design, pair_multiplicities, t_subset_counts};
pub use design13::{design_13_4, BASE_BLOCK_13};
pub use factorization::{near_one_factorization, one_factorization, Edge, Factorization};
pub use format::{parse_design, read_design_file, write_design, write_design_file, DesignFile};
pub use gdd::{disjoint_igdd_pair, gdd_from_latin, igdd_from_latin, GroupedDesign, IncompleteGdd};
pub use gdd_pairs::{admissible_3_1, base_pair_5_1, blocks_5_1, gdd_pair_3_1, gdd_pair_5_1, gdd_pair_intersection_one};
pub use latin::{disjoint_latin_pair, latin_square_subsquare, LatinSquare, Subsquare};
pub use packing::{greedy_packing, greedy_packing_with, Packing, PackingOptions};
pub use search::{disjointify, disjointify_with, sufficient_condition, Disjointified, DisjointifyConfig};
pub use steiner::steiner_triple_system;
