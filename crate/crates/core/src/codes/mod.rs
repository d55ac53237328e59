//! Words, codes, set systems, exhaustive verification and the small-instance
//! optimality oracle.

mod clique;
mod code;
mod format;
mod set_system;
mod word;

pub use clique::{brute_force_max, weight_w_words, BruteForce, SearchBudget};
pub use code::{verify_code, Code, DistanceViolation, MinDistance, Params, VerificationReport};
pub use format::{parse_code, read_code_file, write_code, write_code_file};
pub use set_system::{code_to_packing, intersection_size, packing_to_code, Block, SetSystem};
pub use word::{hamming_distance, Word};
