//! Todd–Coxeter coset enumeration and the queries a complete coset table
//! answers: index, membership, left/right coset identification and
//! canonical transversals.
//!
//! The table records the right action of the generators on the right cosets
//! `Hg`. Left cosets are identified through the bijection `gH ↔ Hg⁻¹`, so a
//! single table serves both sides.

mod hlt;

use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::{Presentation, SubgroupSpec};
use crate::shifting_boxes::{Transversal, TransversalKind};
use crate::words::{Alphabet, Letter, Word};

/// 1-based coset number; coset 1 is the subgroup itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetId(pub usize);

impl CosetId {
    pub const SUBGROUP: CosetId = CosetId(1);

    pub fn from_index(index: usize) -> Self {
        CosetId(index + 1)
    }

    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for CosetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimits {
    pub max_cosets: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_cosets: 1_000_000,
        }
    }
}

/// Complete, collapsed coset table of `H` in `G`.
///
/// Cosets are numbered in shortlex order of their Schreier representatives,
/// so coset 1 is `H` and the numbering is independent of how the enumeration
/// happened to proceed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    alphabet: Alphabet,
    subgroup: SubgroupSpec,
    cols: usize,
    action: Vec<u32>,
    reps: Vec<Word>,
}

/// Enumerates the cosets of `h` in the group presented by `p`.
pub fn todd_coxeter(p: &Presentation, h: &SubgroupSpec, limits: EnumLimits) -> Result<CosetTable> {
    let ngens = p.alphabet().len();
    if h.generators
        .iter()
        .any(|w| w.max_generator().is_some_and(|g| g >= ngens))
    {
        return Err(Error::AlphabetMismatch);
    }
    let columns = |w: &Word| w.letters().iter().map(|l| l.column()).collect::<Vec<_>>();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(columns).collect();
    let subgroup: Vec<Vec<usize>> = h.generators.iter().map(columns).collect();

    let mut e = hlt::Enumerator::new(ngens, limits.max_cosets.max(1));
    e.run(&relators, &subgroup)?;
    let closed = e.close();
    log::debug!("enumeration closed with {} cosets", closed.reps.len());
    Ok(CosetTable {
        alphabet: p.alphabet().clone(),
        subgroup: h.clone(),
        cols: 2 * ngens,
        action: closed.action,
        reps: closed.reps,
    })
}

impl CosetTable {
    /// The index `[G:H]`.
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn subgroup(&self) -> &SubgroupSpec {
        &self.subgroup
    }

    pub fn cosets(&self) -> impl Iterator<Item = CosetId> {
        (1..=self.index()).map(CosetId)
    }

    /// Image of coset `c` under a single letter.
    pub fn act(&self, c: CosetId, letter: Letter) -> CosetId {
        CosetId::from_index(self.step(c.index(), letter))
    }

    #[inline]
    pub(crate) fn step(&self, c: usize, letter: Letter) -> usize {
        self.action[c * self.cols + letter.column()] as usize
    }

    pub(crate) fn trace_index(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, &l| self.step(c, l))
    }

    /// Image of coset `c` under the right action of `w`.
    pub fn trace(&self, c: CosetId, w: &Word) -> Result<CosetId> {
        if c.0 == 0 || c.0 > self.index() {
            return Err(Error::CosetOutOfRange {
                coset: c,
                index: self.index(),
            });
        }
        Ok(CosetId::from_index(self.trace_index(c.index(), w)))
    }

    /// `w ∈ H`.
    pub fn is_member(&self, w: &Word) -> bool {
        self.trace_index(0, w) == 0
    }

    /// Id of the left coset `wH`, i.e. of the right coset `Hw⁻¹`.
    pub fn left_coset_id(&self, w: &Word) -> CosetId {
        CosetId::from_index(self.trace_index(0, &w.inverse()))
    }

    /// Id of the right coset `Hw`.
    pub fn right_coset_id(&self, w: &Word) -> CosetId {
        CosetId::from_index(self.trace_index(0, w))
    }

    /// Shortlex-minimal word `w` with `Hw` equal to coset `c`.
    pub fn schreier_rep(&self, c: CosetId) -> &Word {
        &self.reps[c.index()]
    }

    /// One word per left coset: the inverses of the Schreier representatives,
    /// listed by left coset id. Contains the identity.
    pub fn canonical_left_transversal(&self) -> Transversal {
        Transversal::new(
            self.reps.iter().map(Word::inverse).collect(),
            TransversalKind::Left,
        )
    }

    /// The unique element of the left transversal `t` lying in `wH`.
    pub fn locate_in_transversal<'a>(&self, t: &'a Transversal, w: &Word) -> Result<&'a Word> {
        t.check_left(self)?;
        let target = self.left_coset_id(w);
        Ok(t.words()
            .iter()
            .find(|u| self.left_coset_id(u) == target)
            .expect("a checked transversal covers every left coset"))
    }

    /// Checks every structural invariant of a complete table against the
    /// presentation it was built from.
    pub fn is_consistent_with(&self, p: &Presentation) -> bool {
        let k = self.index();
        let ngens = self.alphabet.len();
        if p.alphabet() != &self.alphabet || self.action.len() != k * self.cols {
            return false;
        }
        for g in 0..ngens {
            let (pos, neg) = (Letter::positive(g), Letter::negative(g));
            let mut seen = vec![false; k];
            for c in 0..k {
                let d = self.step(c, pos);
                if d >= k || seen[d] || self.step(d, neg) != c {
                    return false;
                }
                seen[d] = true;
            }
        }
        let relators_close =
            (0..k).all(|c| p.relators().iter().all(|r| self.trace_index(c, r) == c));
        let subgroup_fixed = self.subgroup.generators.iter().all(|y| self.is_member(y));
        let reps_reach = (0..k).all(|c| self.trace_index(0, &self.reps[c]) == c);
        relators_close && subgroup_fixed && reps_reach
    }

    /// TSV dump: header `coset<TAB>a<TAB>a^-1...`, one row per coset, then
    /// `index: k`.
    pub fn to_tsv(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::from("coset");
        for name in self.alphabet.names() {
            let _ = write!(out, "\t{name}\t{name}^-1");
        }
        out.push('\n');
        for c in 0..self.index() {
            let _ = write!(out, "{}", c + 1);
            for x in 0..self.cols {
                let _ = write!(out, "\t{}", self.action[c * self.cols + x] + 1);
            }
            out.push('\n');
        }
        let _ = writeln!(out, "index: {}", self.index());
        out
    }
}
