//! Bumping primitives, jeu de taquin and spo-insertion.

mod jdt;
mod rsk;
mod spo;
mod trace;

pub use jdt::{jdt_forward, jdt_reverse_path, jdt_reverse_to_column1, PuncturedTableau};
pub use rsk::{column_insert, column_uninsert, dual_row_insert, dual_row_uninsert, row_insert, row_uninsert};
pub use spo::{spo_insert, spo_uninsert};
pub use trace::{Effect, InsertionOutcome, TraceEvent};
