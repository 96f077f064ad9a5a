use super::{Transversal, TransversalKind};
use crate::chessboard::decompose;
use crate::coset_enum::{CosetId, CosetTable};
use crate::error::{Error, Result};
use crate::nielsen::GeneratingTuple;

/// Extends the entries of a left-right-cleaned tuple with at most one entry
/// in `H` to a left-right transversal.
///
/// Within each chessboard block the entries already occupy distinct columns
/// and rows; the remaining columns and rows are paired in ascending order and
/// each pair is filled with a witness word. Entries appear verbatim.
pub fn extend_left_right(t: &CosetTable, s: &GeneratingTuple) -> Result<Transversal> {
    let left: Vec<CosetId> = s.entries().iter().map(|w| t.left_coset_id(w)).collect();
    let right: Vec<CosetId> = s.entries().iter().map(|w| t.right_coset_id(w)).collect();
    for ids in [&left, &right] {
        let mut outside: Vec<_> = ids.iter().filter(|&&c| c != CosetId::SUBGROUP).collect();
        let before = outside.len();
        outside.sort();
        outside.dedup();
        if outside.len() != before {
            return Err(Error::NotLRCleaned);
        }
    }
    let in_h = left.iter().filter(|&&c| c == CosetId::SUBGROUP).count();
    if in_h > 1 {
        return Err(Error::MultipleEntriesInH { count: in_h });
    }

    let d = decompose(t, t)?;
    let mut col_used = vec![false; t.index()];
    let mut row_used = vec![false; t.index()];
    let mut words = Vec::with_capacity(t.index());
    for ((w, &c), &r) in s.entries().iter().zip(&left).zip(&right) {
        if d.block_of_column(c) != d.block_of_row(r) {
            // Only possible when the table and the words disagree.
            return Err(Error::NotLRCleaned);
        }
        col_used[c.index()] = true;
        row_used[r.index()] = true;
        words.push((c, w.clone()));
    }
    for b in &d.blocks {
        let cols = b.columns.iter().filter(|c| !col_used[c.index()]);
        let rows = b.rows.iter().filter(|r| !row_used[r.index()]);
        for (&c, &r) in cols.zip(rows) {
            words.push((c, b.witness(c, r).expect("tile of this block")));
        }
    }
    words.sort_by_key(|(c, _)| *c);
    let tr = Transversal::new(
        words.into_iter().map(|(_, w)| w).collect(),
        TransversalKind::LeftRight,
    );
    debug_assert!(tr.check(t).is_ok());
    Ok(tr)
}
