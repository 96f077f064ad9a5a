//! Shifting boxes: Nielsen-move procedures that place the entries of a
//! generating tuple into chosen cosets of a finite-index subgroup.
//!
//! Every procedure returns the move log it applied, so
//! `replay(input, log) == output` holds exactly. Scan orders are fixed and
//! lexicographic, which makes every log reproducible.

mod clean;
mod extract;
mod left_right;
mod rank3;
mod transversal;

pub(crate) use clean::clean_left_in_place;
pub use clean::{left_clean, left_right_clean, right_clean};
pub(crate) use extract::extract_in_place;
pub use extract::{
    clean_extract, find_extraction, generating_left_transversal, left_extract, Extraction,
    ExtractionCase, GeneratingTransversal,
};
pub use left_right::extend_left_right;
pub use rank3::{lr_generating_transversal_rank3, Rank3Case, Rank3Outcome};
pub use transversal::{Transversal, TransversalKind};

use crate::coset_enum::{CosetId, CosetTable};
use crate::nielsen::{GeneratingTuple, MoveLog, NielsenMove};

/// A tuple together with the log of moves that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftOutcome {
    pub tuple: GeneratingTuple,
    pub log: MoveLog,
}

/// Working state: the current tuple and every move applied so far.
pub(crate) struct Shifter<'t> {
    pub table: &'t CosetTable,
    pub tuple: GeneratingTuple,
    pub log: MoveLog,
}

impl<'t> Shifter<'t> {
    pub fn new(table: &'t CosetTable, tuple: GeneratingTuple) -> Self {
        Shifter {
            table,
            tuple,
            log: MoveLog::new(),
        }
    }

    pub fn apply(&mut self, m: NielsenMove) {
        self.tuple
            .apply(m)
            .expect("moves built by shifting boxes are valid");
        self.log.push(m);
    }

    pub fn len(&self) -> usize {
        self.tuple.len()
    }

    pub fn left_id(&self, i: usize) -> CosetId {
        self.table.left_coset_id(self.tuple.get(i))
    }

    pub fn right_id(&self, i: usize) -> CosetId {
        self.table.right_coset_id(self.tuple.get(i))
    }

    pub fn in_subgroup(&self, i: usize) -> bool {
        self.table.is_member(self.tuple.get(i))
    }

    pub fn positions_in_subgroup(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.in_subgroup(i)).collect()
    }

    /// Per left coset, whether some entry lies in it.
    pub fn full_left_cosets(&self) -> Vec<bool> {
        let mut full = vec![false; self.table.index()];
        for i in 0..self.len() {
            full[self.left_id(i).index()] = true;
        }
        full
    }

    pub fn finish(self) -> ShiftOutcome {
        ShiftOutcome {
            tuple: self.tuple,
            log: self.log,
        }
    }
}
