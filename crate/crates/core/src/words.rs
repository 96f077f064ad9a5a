//! Words over a finite generating alphabet.
//!
//! A [`Word`] is always freely reduced: every constructor cancels adjacent
//! inverse pairs, so equality of words is equality in the free group.
//!
//! Text syntax: for single-letter generator names a lowercase letter is the
//! generator and the matching uppercase letter its inverse (`abA`). Any
//! generator may also be written `name^-1` or `name^k`, and letters may be
//! separated by `.` or `*`, which is needed when names are longer than one
//! character. The identity is written `1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// One signed generator letter. Letters order as `a < A < b < B < ...`,
/// which fixes the shortlex order used for canonical representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn positive(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn negative(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    /// Column of this letter in a coset table: `2g` for the generator, `2g+1`
    /// for its inverse.
    pub fn column(self) -> usize {
        2 * self.generator + self.inverse as usize
    }

    pub fn from_column(column: usize) -> Self {
        Letter::new(column / 2, column % 2 == 1)
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn generator(generator: usize) -> Self {
        Word::letter(Letter::positive(generator))
    }

    /// Builds the free reduction of the given letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut word = Word::identity();
        for l in letters {
            word.push(l);
        }
        word
    }

    fn push(&mut self, letter: Letter) {
        if self.0.last() == Some(&letter.inverse()) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Freely reduced product `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut word = self.clone();
        for &l in &other.0 {
            word.push(l);
        }
        word
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = Word::identity();
        for _ in 0..exponent.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }

    pub fn is_freely_reduced(letters: &[Letter]) -> bool {
        letters.windows(2).all(|w| w[0] != w[1].inverse())
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

/// Shortlex: shorter words first, equal lengths compared letter by letter.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered list of distinct generator names. Names start with a lowercase
/// ASCII letter and continue with lowercase letters, digits or `_`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::parse(
                "alphabet must contain at least one generator",
                0,
            ));
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref();
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_lowercase())
                && name
                    .chars()
                    .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_');
            if !valid {
                return Err(Error::parse(format!("invalid generator name {name:?}"), i));
            }
            if out.iter().any(|n| n == name) {
                return Err(Error::parse(
                    format!("duplicate generator name {name:?}"),
                    i,
                ));
            }
            out.push(name.to_owned());
        }
        Ok(Alphabet { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn single_letters(&self) -> bool {
        self.names.iter().all(|n| n.len() == 1)
    }

    /// Text form of a single letter, e.g. `a`, `A`, `x1^-1`.
    pub fn letter_text(&self, letter: Letter) -> String {
        let name = self.name(letter.generator);
        match (letter.inverse, name.len()) {
            (false, _) => name.to_owned(),
            (true, 1) => name.to_ascii_uppercase(),
            (true, _) => format!("{name}^-1"),
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, self)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("1");
        }
        let sep = if self.alphabet.single_letters() {
            ""
        } else {
            "."
        };
        for (i, &l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            f.write_str(&self.alphabet.letter_text(l))?;
        }
        Ok(())
    }
}

/// Parses `text` into a freely reduced word over `alphabet`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let bytes = text.as_bytes();
    if let Some(pos) = text.find(|c: char| !c.is_ascii()) {
        return Err(Error::parse(
            format!(
                "unexpected character {:?}",
                text[pos..].chars().next().unwrap()
            ),
            pos,
        ));
    }
    let mut letters = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c == '.' || c == '*' {
            pos += 1;
            continue;
        }
        if c == '1' {
            pos += 1;
            continue;
        }
        let (letter, next) = if c.is_ascii_uppercase() {
            let lower = c.to_ascii_lowercase().to_string();
            match alphabet.index_of(&lower) {
                Some(g) => (Letter::negative(g), pos + 1),
                None => {
                    return Err(Error::parse(format!("unknown letter {c:?}"), pos));
                }
            }
        } else {
            // Longest generator name matching at this position.
            let best = alphabet
                .names()
                .iter()
                .enumerate()
                .filter(|(_, n)| text[pos..].starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((g, n)) => (Letter::positive(g), pos + n.len()),
                None => {
                    return Err(Error::parse(format!("unknown letter {c:?}"), pos));
                }
            }
        };
        pos = next;
        let mut exponent: i64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            let start = pos + 1;
            let mut end = start;
            if end < bytes.len() && bytes[end] == b'-' {
                end += 1;
            }
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            exponent = text[start..end]
                .parse()
                .map_err(|_| Error::parse("malformed exponent", start))?;
            pos = end;
        }
        let l = if exponent < 0 {
            letter.inverse()
        } else {
            letter
        };
        for _ in 0..exponent.unsigned_abs() {
            letters.push(l);
        }
    }
    Ok(Word::from_letters(letters))
}

/// Freely reduced product `u · v`.
pub fn concat(u: &Word, v: &Word) -> Word {
    u.concat(v)
}

pub fn invert(w: &Word) -> Word {
    w.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(&["a", "b", "c"]).unwrap()
    }

    fn w(s: &str) -> Word {
        parse_word(s, &ab()).unwrap()
    }

    fn show(word: &Word) -> String {
        word.display(&ab()).to_string()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            w("abA").letters(),
            &[
                Letter::positive(0),
                Letter::positive(1),
                Letter::negative(0)
            ]
        );
        assert!(w("").is_identity());
        assert_eq!(w("aAb"), Word::generator(1));
    }

    #[test]
    fn parse_reports_position() {
        let err = parse_word("abqa", &ab()).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                message: "unknown letter 'q'".into(),
                position: 2
            }
        );
        assert!(matches!(
            parse_word("abQ", &ab()),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn exponents_and_separators() {
        assert_eq!(w("a^3"), w("aaa"));
        assert_eq!(w("a^-2.b"), w("AAb"));
        assert_eq!(w("a*b*1"), w("ab"));
        let long = Alphabet::new(&["x1", "x2", "x"]).unwrap();
        let word = parse_word("x1.x2^-1.x", &long).unwrap();
        assert_eq!(
            word.letters(),
            &[
                Letter::positive(0),
                Letter::negative(1),
                Letter::positive(2)
            ]
        );
        assert_eq!(word.display(&long).to_string(), "x1.x2^-1.x");
    }

    #[test]
    fn invert_examples() {
        assert_eq!(show(&w("ab").inverse()), "BA");
        assert!(Word::identity().inverse().is_identity());
        assert_eq!(show(&w("aBa").inverse()), "AbA");
    }

    #[test]
    fn concat_examples() {
        assert!(w("ab").concat(&w("BA")).is_identity());
        assert_eq!(show(&w("a").concat(&w("b"))), "ab");
        assert_eq!(show(&w("ab").concat(&w("Bc"))), "ac");
    }

    #[test]
    fn identity_prints_as_one() {
        assert_eq!(show(&Word::identity()), "1");
        assert!(w("1").is_identity());
    }

    #[test]
    fn shortlex_order() {
        let mut v = [w("b"), w("aa"), w("A"), w(""), w("a"), w("B")];
        v.sort();
        let s: Vec<String> = v.iter().map(show).collect();
        assert_eq!(s, ["1", "a", "A", "b", "B", "aa"]);
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(&["a", "a"]).is_err());
        assert!(Alphabet::new(&["A"]).is_err());
        assert!(Alphabet::new::<&str>(&[]).is_err());
        assert!(Alphabet::new(&["1x"]).is_err());
    }
}
