//! Generating tuples and Nielsen moves.
//!
//! Moves address entries by position (0-based in code, 1-based in the text
//! form), so duplicate entries stay unambiguous.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `w` for `Plus`, `w⁻¹` for `Minus`.
    pub fn apply(self, w: &Word) -> Word {
        match self {
            Sign::Plus => w.clone(),
            Sign::Minus => w.inverse(),
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratingTuple(Vec<Word>);

impl GeneratingTuple {
    pub fn new(entries: Vec<Word>) -> Self {
        GeneratingTuple(entries)
    }

    pub fn entries(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &Word {
        &self.0[i]
    }

    pub fn into_entries(self) -> Vec<Word> {
        self.0
    }

    /// Applies `m` in place.
    pub fn apply(&mut self, m: NielsenMove) -> Result<()> {
        m.validate(self.len())?;
        match m {
            NielsenMove::LeftMultiply { target, by, sign } => {
                self.0[target] = sign.apply(&self.0[by]).concat(&self.0[target]);
            }
            NielsenMove::RightMultiply { target, by, sign } => {
                self.0[target] = self.0[target].concat(&sign.apply(&self.0[by]));
            }
            NielsenMove::Invert { target } => {
                self.0[target] = self.0[target].inverse();
            }
            NielsenMove::Swap { i, j } => self.0.swap(i, j),
        }
        Ok(())
    }

    pub fn apply_move(&self, m: NielsenMove) -> Result<GeneratingTuple> {
        let mut out = self.clone();
        out.apply(m)?;
        Ok(out)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        TupleDisplay {
            tuple: self,
            alphabet,
        }
    }
}

struct TupleDisplay<'a> {
    tuple: &'a GeneratingTuple,
    alphabet: &'a Alphabet,
}

impl fmt::Display for TupleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.tuple.entries().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", w.display(self.alphabet))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NielsenMove {
    /// `s[target] ← s[by]^sign · s[target]`
    LeftMultiply {
        target: usize,
        by: usize,
        sign: Sign,
    },
    /// `s[target] ← s[target] · s[by]^sign`
    RightMultiply {
        target: usize,
        by: usize,
        sign: Sign,
    },
    Invert {
        target: usize,
    },
    Swap {
        i: usize,
        j: usize,
    },
}

impl NielsenMove {
    fn validate(self, n: usize) -> Result<()> {
        let (a, b) = match self {
            NielsenMove::LeftMultiply { target, by, .. }
            | NielsenMove::RightMultiply { target, by, .. } => (target, Some(by)),
            NielsenMove::Invert { target } => (target, None),
            NielsenMove::Swap { i, j } => (i, Some(j)),
        };
        if a >= n || b.is_some_and(|b| b >= n) {
            return Err(Error::InvalidMove(format!(
                "{self} out of range for a {n}-tuple"
            )));
        }
        if b == Some(a) {
            return Err(Error::InvalidMove(format!(
                "{self} uses the same entry twice"
            )));
        }
        Ok(())
    }

    /// The move undoing `self`.
    pub fn inverse(self) -> NielsenMove {
        match self {
            NielsenMove::LeftMultiply { target, by, sign } => NielsenMove::LeftMultiply {
                target,
                by,
                sign: sign.flip(),
            },
            NielsenMove::RightMultiply { target, by, sign } => NielsenMove::RightMultiply {
                target,
                by,
                sign: sign.flip(),
            },
            m => m,
        }
    }
}

impl fmt::Display for NielsenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NielsenMove::LeftMultiply { target, by, sign } => {
                write!(f, "Lmul {} {} {sign}", target + 1, by + 1)
            }
            NielsenMove::RightMultiply { target, by, sign } => {
                write!(f, "Rmul {} {} {sign}", target + 1, by + 1)
            }
            NielsenMove::Invert { target } => write!(f, "Inv {}", target + 1),
            NielsenMove::Swap { i, j } => write!(f, "Swap {} {}", i + 1, j + 1),
        }
    }
}

impl FromStr for NielsenMove {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let index = |i: usize| -> Result<usize> {
            let v: usize = parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::parse(format!("bad index in move {s:?}"), 0))?;
            v.checked_sub(1)
                .ok_or_else(|| Error::parse(format!("indices are 1-based in {s:?}"), 0))
        };
        let sign = |i: usize| match parts.get(i) {
            Some(&"+") => Ok(Sign::Plus),
            Some(&"-") => Ok(Sign::Minus),
            _ => Err(Error::parse(format!("bad sign in move {s:?}"), 0)),
        };
        let m = match (parts.first(), parts.len()) {
            (Some(&"Lmul"), 4) => NielsenMove::LeftMultiply {
                target: index(1)?,
                by: index(2)?,
                sign: sign(3)?,
            },
            (Some(&"Rmul"), 4) => NielsenMove::RightMultiply {
                target: index(1)?,
                by: index(2)?,
                sign: sign(3)?,
            },
            (Some(&"Inv"), 2) => NielsenMove::Invert { target: index(1)? },
            (Some(&"Swap"), 3) => NielsenMove::Swap {
                i: index(1)?,
                j: index(2)?,
            },
            _ => return Err(Error::parse(format!("unrecognised move {s:?}"), 0)),
        };
        Ok(m)
    }
}

/// Ordered, replayable sequence of moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MoveLog(Vec<NielsenMove>);

impl MoveLog {
    pub fn new() -> Self {
        MoveLog(Vec::new())
    }

    pub fn push(&mut self, m: NielsenMove) {
        self.0.push(m);
    }

    pub fn extend(&mut self, other: &MoveLog) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn moves(&self) -> &[NielsenMove] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<NielsenMove>> for MoveLog {
    fn from(moves: Vec<NielsenMove>) -> Self {
        MoveLog(moves)
    }
}

/// One move per line.
impl fmt::Display for MoveLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.0 {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveLog {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.lines()
            .filter(|l| !l.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(MoveLog)
    }
}

/// Left fold of [`GeneratingTuple::apply_move`] over the log.
pub fn replay(s0: &GeneratingTuple, log: &MoveLog) -> Result<GeneratingTuple> {
    let mut s = s0.clone();
    for &m in log.moves() {
        s.apply(m)?;
    }
    Ok(s)
}
