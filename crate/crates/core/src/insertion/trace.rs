use serde::{Deserialize, Serialize};

use crate::tableau::{Cell, Tableau};

/// One step of an insertion or slide, in the order it happened.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum TraceEvent<E> {
    /// `entering` replaced `bumped` at `cell`.
    Bump { cell: Cell, bumped: E, entering: E },
    /// `entry` landed in a new box at the end of a row or column.
    Place { cell: Cell, entry: E },
    /// `removed` was deleted from `cell` and `discarded` was dropped.
    Cancel { cell: Cell, removed: E, discarded: E },
    /// `entry` moved into the hole at `to` from `from`.
    Slide { from: Cell, to: Cell, entry: E },
    /// The hole reached an outer corner and the box was removed.
    Remove { cell: Cell },
}

/// The net change in shape caused by an insertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Effect {
    /// A new box at this outer corner.
    Added(Cell),
    /// The box at this cell was removed.
    Cancelled(Cell),
}

impl Effect {
    pub fn cell(self) -> Cell {
        match self {
            Effect::Added(c) | Effect::Cancelled(c) => c,
        }
    }

    pub fn is_added(self) -> bool {
        matches!(self, Effect::Added(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionOutcome<E> {
    pub result: Tableau<E>,
    pub effect: Effect,
    pub trace: Vec<TraceEvent<E>>,
}
