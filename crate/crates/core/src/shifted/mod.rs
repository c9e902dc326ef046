//! Matching paths, garages and odd shifted parking functions.
//!
//! A sorted naive shifted parking function determines a lattice path whose
//! steps away from and toward the main diagonal pair up into a noncrossing
//! matching `τ(L)`. Garages are the objects whose toward-steps all sit on
//! empty values; every sorted naive or sorted odd shifted parking function
//! maps to exactly one garage, and the fibers are listed explicitly.

mod garage;
mod odd;
mod path;

pub use garage::{enumerate_garages, garage_class, garage_of, is_garage, is_garage_word, Garage};
pub use odd::{
    area_o, enumerate_sorted_odd, is_odd_shifted, naive_to_odd, odd_class, odd_to_naive, phi_o, OddShifted,
    SortedOddShifted,
};
pub use path::{matching_path, path_matching, upsilon, Matching, MatchingPath, PathStep};
