//! Instance generators for the hard cells and the set splitting translation.

pub mod cnf;
pub mod sat_game;
pub mod set_splitting;

pub use cnf::{parse_dimacs, sat_brute_force, to_dimacs, CnfFormula};
pub use sat_game::{game_from_cnf, game_from_cnf_j, SatGameInstance, SatLayout};
pub use set_splitting::{
    build_set_splitting, reconstruct_trade, solve_set_splitting, SetSplittingInstance,
};
