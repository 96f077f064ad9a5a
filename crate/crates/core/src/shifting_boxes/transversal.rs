use crate::coset_enum::{CosetId, CosetTable};
use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransversalKind {
    Left,
    Right,
    LeftRight,
}

impl TransversalKind {
    fn name(self) -> &'static str {
        match self {
            TransversalKind::Left => "left",
            TransversalKind::Right => "right",
            TransversalKind::LeftRight => "left-right",
        }
    }
}

/// A set of words, one per coset on the side(s) named by `kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    words: Vec<Word>,
    kind: TransversalKind,
}

impl Transversal {
    pub fn new(words: Vec<Word>, kind: TransversalKind) -> Self {
        Transversal { words, kind }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn kind(&self) -> TransversalKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// Words in shortlex order.
    pub fn sorted_words(&self) -> Vec<Word> {
        let mut v = self.words.clone();
        v.sort();
        v
    }

    pub fn check_left(&self, t: &CosetTable) -> Result<()> {
        check_bijective(&self.words, t, |w| t.left_coset_id(w), "left")
    }

    pub fn check_right(&self, t: &CosetTable) -> Result<()> {
        check_bijective(&self.words, t, |w| t.right_coset_id(w), "right")
    }

    /// Checks the bijectivity the transversal's kind promises.
    pub fn check(&self, t: &CosetTable) -> Result<()> {
        match self.kind {
            TransversalKind::Left => self.check_left(t),
            TransversalKind::Right => self.check_right(t),
            TransversalKind::LeftRight => self.check_left(t).and_then(|_| self.check_right(t)),
        }
        .map_err(|e| match e {
            Error::NotATransversal { reason, .. } => Error::NotATransversal {
                kind: self.kind.name(),
                reason,
            },
            other => other,
        })
    }
}

fn check_bijective(
    words: &[Word],
    t: &CosetTable,
    id: impl Fn(&Word) -> CosetId,
    kind: &'static str,
) -> Result<()> {
    if words.len() != t.index() {
        return Err(Error::NotATransversal {
            kind,
            reason: format!("{} words for index {}", words.len(), t.index()),
        });
    }
    let mut seen = vec![false; t.index()];
    for w in words {
        let c = id(w);
        if std::mem::replace(&mut seen[c.index()], true) {
            return Err(Error::NotATransversal {
                kind,
                reason: format!("coset {c} hit twice"),
            });
        }
    }
    Ok(())
}
