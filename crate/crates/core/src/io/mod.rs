//! Signature text, atlas files, tables and run configuration.

mod atlas;
mod config;
mod parse;
mod table;

pub use atlas::{Atlas, AtlasOrbit, ATLAS_FORMAT};
pub use config::{RunConfig, DEFAULT_CONJECTURE_BUDGET, LONG_CONJECTURE_BUDGET};
pub use parse::{parse_signature, render_signature};
pub use table::{emit_table, orbit_table, printed_lengths, Column, Format, Table};
