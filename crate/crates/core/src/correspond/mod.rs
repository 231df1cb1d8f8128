//! The spo and dual spo correspondences, the Burge and dual Burge
//! correspondences, and the word / up-down tableau bijection.

mod burge;
mod dual;
mod spo;
mod word;

use serde::{Deserialize, Serialize};

use crate::alphabet::Letter;
use crate::array::TwoLineArray;
use crate::insertion::{Effect, TraceEvent};
use crate::tableau::Tableau;

pub use burge::{
    burge_forward, burge_forward_trace, burge_inverse, dual_burge_forward, dual_burge_forward_trace, dual_burge_inverse,
};
pub use dual::{dual_spo_forward, dual_spo_forward_trace, dual_spo_inverse, dual_spo_inverse_trace};
pub use spo::{spo_forward, spo_forward_trace, spo_inverse, spo_inverse_trace};
pub use word::{updown_to_word, word_to_updown, word_to_updown_trace, WordPair, WordStep};

/// Image of an array of class `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpoTriple {
    pub ptilde: Tableau<Letter>,
    pub p: Tableau<u32>,
    pub l: TwoLineArray<u32>,
}

impl SpoTriple {
    pub fn empty() -> Self {
        SpoTriple { ptilde: Tableau::empty(), p: Tableau::empty(), l: TwoLineArray::empty() }
    }
}

/// Image of an array of class `A*`. `pt` has the conjugate shape of `ptilde`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualSpoTriple {
    pub ptilde: Tableau<Letter>,
    pub pt: Tableau<u32>,
    pub l: TwoLineArray<u32>,
}

impl DualSpoTriple {
    pub fn empty() -> Self {
        DualSpoTriple { ptilde: Tableau::empty(), pt: Tableau::empty(), l: TwoLineArray::empty() }
    }
}

/// State after processing one column in the forward direction. For the
/// dual correspondence `p` has the shape of `ptilde` (it is transposed only
/// at the end) and `l` is unsorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForwardStep {
    pub column: (u32, Letter),
    pub effect: Effect,
    pub ptilde: Tableau<Letter>,
    pub p: Tableau<u32>,
    pub l: TwoLineArray<u32>,
    pub events: Vec<TraceEvent<Letter>>,
}

/// State after recovering one column in the inverse direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseStep {
    pub column: (u32, Letter),
    pub effect: Effect,
    pub ptilde: Tableau<Letter>,
    pub p: Tableau<u32>,
    pub l: TwoLineArray<u32>,
}
