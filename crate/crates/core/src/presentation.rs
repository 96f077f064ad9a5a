//! Finite presentations and subgroup specifications.
//!
//! File format, one key per line:
//!
//! ```text
//! generators: a b
//! relators: aa bb ababab
//! subgroup: a
//! ```
//!
//! `relators` and `subgroup` may be omitted or left empty. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::words::{parse_word, Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation, dropping relators that reduce to the identity.
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        let mut kept = Vec::with_capacity(relators.len());
        for r in relators {
            if r.max_generator().is_some_and(|g| g >= alphabet.len()) {
                return Err(Error::AlphabetMismatch);
            }
            if r.is_identity() {
                log::warn!("dropping relator that freely reduces to the identity");
                continue;
            }
            kept.push(r);
        }
        Ok(Presentation {
            alphabet,
            relators: kept,
        })
    }

    /// Parses a presentation from the generator names and relator words.
    pub fn from_strs(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::new(generators)?;
        let relators = relators
            .iter()
            .map(|r| parse_word(r, &alphabet))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(alphabet, relators)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.alphabet)
    }

    pub fn subgroup(&self, words: &[&str]) -> Result<SubgroupSpec> {
        let generators = words
            .iter()
            .map(|w| self.parse_word(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubgroupSpec::new(generators))
    }

    /// Serializes in the file format read by [`parse_presentation`].
    pub fn to_text(&self, subgroup: &SubgroupSpec) -> String {
        let join = |words: &[Word]| {
            words
                .iter()
                .map(|w| w.display(&self.alphabet).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = String::new();
        for (key, value) in [
            ("generators", self.alphabet.names().join(" ")),
            ("relators", join(&self.relators)),
            ("subgroup", join(&subgroup.generators)),
        ] {
            let _ = writeln!(out, "{}", format!("{key}: {value}").trim_end());
        }
        out
    }
}

/// Finitely many generator words for a subgroup; empty means trivial.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub generators: Vec<Word>,
}

impl SubgroupSpec {
    pub fn new(generators: Vec<Word>) -> Self {
        SubgroupSpec { generators }
    }

    pub fn trivial() -> Self {
        SubgroupSpec::default()
    }
}

fn parse_words(line: &str, offset: usize, alphabet: &Alphabet) -> Result<Vec<Word>> {
    let mut words = Vec::new();
    let mut cursor = 0;
    for token in line.split_whitespace() {
        let start = cursor + line[cursor..].find(token).unwrap_or(0);
        cursor = start + token.len();
        let word = parse_word(token, alphabet).map_err(|e| match e {
            Error::Parse { message, position } => Error::Parse {
                message,
                position: offset + start + position,
            },
            other => other,
        })?;
        words.push(word);
    }
    Ok(words)
}

/// Parses the presentation file format. Error positions are byte offsets
/// into `text`.
pub fn parse_presentation(text: &str) -> Result<(Presentation, SubgroupSpec)> {
    let mut generators: Option<(usize, &str)> = None;
    let mut relators: Option<(usize, &str)> = None;
    let mut subgroup: Option<(usize, &str)> = None;

    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let line = raw.trim_end_matches(['\n', '\r']);
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(Error::parse("expected `key: value`", line_start));
        };
        let key = line[..colon].trim();
        let value_start = line_start + colon + 1;
        let value = &line[colon + 1..];
        let slot = match key {
            "generators" => &mut generators,
            "relators" => &mut relators,
            "subgroup" => &mut subgroup,
            other => {
                return Err(Error::parse(format!("unknown key {other:?}"), line_start));
            }
        };
        if slot.is_some() {
            return Err(Error::parse(format!("duplicate key {key:?}"), line_start));
        }
        *slot = Some((value_start, value));
    }

    let Some((gen_offset, gen_line)) = generators else {
        return Err(Error::parse("missing generators line", 0));
    };
    let names: Vec<&str> = gen_line.split_whitespace().collect();
    let alphabet = Alphabet::new(&names).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse {
            message,
            position: gen_offset,
        },
        other => other,
    })?;
    let rels = match relators {
        Some((o, line)) => parse_words(line, o, &alphabet)?,
        None => Vec::new(),
    };
    let sub = match subgroup {
        Some((o, line)) => parse_words(line, o, &alphabet)?,
        None => Vec::new(),
    };
    Ok((Presentation::new(alphabet, rels)?, SubgroupSpec::new(sub)))
}
