//! Chessboard decomposition of the coset intersection graph of `H` and `K`.
//!
//! Each block is one double coset `KgH`: its columns are the left cosets of
//! `H` inside it, its rows the right cosets of `K`. Every column meets every
//! row, so a block is a complete bipartite component, and with `[G:H] = n`,
//! `[G:K] = m` each block satisfies `|columns|·m = |rows|·n`.
//!
//! Elements of the block are the products `u·g·v` with `u ∈ K`, `v ∈ H`; the
//! column of `ugv` depends only on `u` and its row only on `v`. Columns are
//! found by a breadth-first search of `K`'s generators acting on the left
//! cosets of `H`, rows by `H`'s generators acting on the right cosets of `K`,
//! and the tile witness for (column, row) is `u_col · g · v_row`.

use std::collections::VecDeque;

use crate::coset_enum::{CosetId, CosetTable};
use crate::error::{Error, Result};
use crate::nielsen::Sign;
use crate::shifting_boxes::{Transversal, TransversalKind};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Left-coset ids of `H`, ascending.
    pub columns: Vec<CosetId>,
    /// Right-coset ids of `K`, ascending.
    pub rows: Vec<CosetId>,
    representative: Word,
    column_words: Vec<Word>,
    row_words: Vec<Word>,
}

impl Block {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn is_square(&self) -> bool {
        self.columns.len() == self.rows.len()
    }

    /// A word lying in both the given column and row, if both belong to this
    /// block.
    pub fn witness(&self, column: CosetId, row: CosetId) -> Option<Word> {
        let c = self.columns.binary_search(&column).ok()?;
        let r = self.rows.binary_search(&row).ok()?;
        Some(
            self.column_words[c]
                .concat(&self.representative)
                .concat(&self.row_words[r]),
        )
    }

    /// Witnesses indexed `[row][column]`.
    pub fn witness_grid(&self) -> Vec<Vec<Word>> {
        self.rows
            .iter()
            .map(|&r| {
                self.columns
                    .iter()
                    .map(|&c| self.witness(c, r).expect("tile of this block"))
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChessboardDecomposition {
    pub blocks: Vec<Block>,
    /// `[G:H]`, the number of columns.
    pub columns: usize,
    /// `[G:K]`, the number of rows.
    pub rows: usize,
    column_block: Vec<usize>,
    row_block: Vec<usize>,
    same_subgroup: bool,
}

impl ChessboardDecomposition {
    pub fn block_of_column(&self, c: CosetId) -> usize {
        self.column_block[c.index()]
    }

    pub fn block_of_row(&self, r: CosetId) -> usize {
        self.row_block[r.index()]
    }

    /// Whether `H` and `K` are the same subgroup.
    pub fn same_subgroup(&self) -> bool {
        self.same_subgroup
    }
}

/// Splits `G` into the double cosets `KgH`, where `t_h` enumerates `H` and
/// `t_k` enumerates `K` over the same presentation.
pub fn decompose(t_h: &CosetTable, t_k: &CosetTable) -> Result<ChessboardDecomposition> {
    if t_h.alphabet() != t_k.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let signed = |gens: &[Word]| -> Vec<Word> {
        gens.iter()
            .flat_map(|y| Sign::both().map(|s| s.apply(y)))
            .collect()
    };
    let k_gens = signed(&t_k.subgroup().generators);
    let h_gens = signed(&t_h.subgroup().generators);
    let k_gens_inv: Vec<Word> = k_gens.iter().map(Word::inverse).collect();
    let same_subgroup =
        h_gens.iter().all(|y| t_k.is_member(y)) && k_gens.iter().all(|y| t_h.is_member(y));

    let n = t_h.index();
    let m = t_k.index();
    const UNSET: usize = usize::MAX;
    let mut column_block = vec![UNSET; n];
    let mut row_block = vec![UNSET; m];
    let mut blocks = Vec::new();

    for start in 0..n {
        if column_block[start] != UNSET {
            continue;
        }
        let id = blocks.len();
        let g = t_h.schreier_rep(CosetId::from_index(start)).inverse();

        // Columns: left action u·(gH), i.e. Hg⁻¹ ↦ Hg⁻¹u⁻¹.
        let mut cols = vec![(start, Word::identity())];
        column_block[start] = id;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let (c, u) = cols[i].clone();
            for (y, y_inv) in k_gens.iter().zip(&k_gens_inv) {
                let d = t_h.trace_index(c, y_inv);
                if column_block[d] == UNSET {
                    column_block[d] = id;
                    cols.push((d, y.concat(&u)));
                    queue.push_back(cols.len() - 1);
                }
            }
        }

        // Rows: right action (Kg)·v.
        let r0 = t_k.right_coset_id(&g).index();
        if row_block[r0] != UNSET {
            return Err(Error::AlphabetMismatch);
        }
        let mut rows = vec![(r0, Word::identity())];
        row_block[r0] = id;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let (r, v) = rows[i].clone();
            for y in &h_gens {
                let d = t_k.trace_index(r, y);
                if row_block[d] == UNSET {
                    row_block[d] = id;
                    rows.push((d, v.concat(y)));
                    queue.push_back(rows.len() - 1);
                }
            }
        }

        cols.sort_by_key(|(c, _)| *c);
        rows.sort_by_key(|(r, _)| *r);
        let (columns, column_words) = cols
            .into_iter()
            .map(|(c, u)| (CosetId::from_index(c), u))
            .unzip();
        let (rows, row_words) = rows
            .into_iter()
            .map(|(r, v)| (CosetId::from_index(r), v))
            .unzip();
        blocks.push(Block {
            columns,
            rows,
            representative: g,
            column_words,
            row_words,
        });
    }
    debug_assert!(row_block.iter().all(|&b| b != UNSET));

    Ok(ChessboardDecomposition {
        blocks,
        columns: n,
        rows: m,
        column_block,
        row_block,
        same_subgroup,
    })
}

/// One witness from each diagonal tile of every block. Requires `H = K`, in
/// which case the result is a left-right transversal for `H`, listed by left
/// coset id.
pub fn diagonal_transversal(d: &ChessboardDecomposition, t_h: &CosetTable) -> Result<Transversal> {
    if !d.same_subgroup || !d.blocks.iter().all(Block::is_square) || d.columns != t_h.index() {
        return Err(Error::NonSquareBlocks);
    }
    let mut words = Vec::with_capacity(d.columns);
    for b in &d.blocks {
        for (&c, &r) in b.columns.iter().zip(&b.rows) {
            words.push((c, b.witness(c, r).expect("diagonal tile")));
        }
    }
    words.sort_by_key(|(c, _)| *c);
    Ok(Transversal::new(
        words.into_iter().map(|(_, w)| w).collect(),
        TransversalKind::LeftRight,
    ))
}
