//! Command-line front end, table-ring files and a rayon executor for
//! `nullideal-core`.

pub mod cli;
pub mod parallel;
pub mod report;
pub mod table_file;

pub use parallel::Rayon;
pub use table_file::{load_table, resolve_ring, save_table, table_of};
