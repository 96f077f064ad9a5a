use super::clean::clean_left_in_place;
use super::{ShiftOutcome, Shifter, Transversal, TransversalKind};
use crate::coset_enum::{CosetId, CosetTable};
use crate::error::{Error, Result};
use crate::nielsen::{GeneratingTuple, MoveLog, NielsenMove, Sign};

/// Entries `j`, `k` (0-based, possibly equal) and a sign with
/// `s[j]^sign · s[k]` in an empty left coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extraction {
    pub j: usize,
    pub k: usize,
    pub sign: Sign,
}

/// Which branch of the extraction case analysis fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtractionCase {
    /// `s[j] ∉ H`, `s[k] ∈ H`: `s[k] ← s[j]⁻¹ s[k]`.
    Case2,
    /// `s[j] ∈ H`, `s[k] ∉ H`: `s[j] ← s[j]^ε s[k]`.
    Case3,
    /// Both outside `H`: the first `s[i] ∈ H` becomes `s[j]^ε s[k] s[i]`.
    Case4,
}

/// Finds the first `(j, k, ε)` in lexicographic order (`+` before `-`) taking
/// a full left coset to an empty one. Empty cosets other than `H` are
/// searched first; `H` is only used as a target when nothing else is found.
pub fn find_extraction(t: &CosetTable, s: &GeneratingTuple) -> Result<Extraction> {
    let sh = Shifter::new(t, s.clone());
    find_in(&sh)
}

fn find_in(sh: &Shifter<'_>) -> Result<Extraction> {
    let full = sh.full_left_cosets();
    if full.iter().all(|&f| f) {
        return Err(Error::NoEmptyCoset);
    }
    let n = sh.len();
    let mut fallback = None;
    for j in 0..n {
        for k in 0..n {
            for sign in Sign::both() {
                let w = sign.apply(sh.tuple.get(j)).concat(sh.tuple.get(k));
                let c = sh.table.left_coset_id(&w);
                if full[c.index()] {
                    continue;
                }
                let found = Extraction { j, k, sign };
                if c != CosetId::SUBGROUP {
                    return Ok(found);
                }
                fallback.get_or_insert(found);
            }
        }
    }
    fallback.ok_or_else(|| {
        Error::NotGenerating("the full left cosets are closed under the tuple's action".into())
    })
}

/// Moves one entry of `H` into a previously empty left coset, leaving every
/// other entry where it was.
pub fn left_extract(t: &CosetTable, s: &GeneratingTuple) -> Result<(ShiftOutcome, ExtractionCase)> {
    let mut sh = Shifter::new(t, s.clone());
    let case = extract_in_place(&mut sh)?;
    Ok((sh.finish(), case))
}

pub(crate) fn extract_in_place(sh: &mut Shifter<'_>) -> Result<ExtractionCase> {
    let in_h = sh.positions_in_subgroup();
    let Some(&first_in_h) = in_h.first() else {
        return Err(Error::NoEntryInH);
    };
    let Extraction { j, k, sign } = find_in(sh)?;
    let case = match (sh.in_subgroup(j), sh.in_subgroup(k)) {
        (true, true) => unreachable!("s_j^e s_k would lie in the full coset H"),
        (false, true) => {
            debug_assert_eq!(sign, Sign::Minus);
            sh.apply(NielsenMove::LeftMultiply {
                target: k,
                by: j,
                sign: Sign::Minus,
            });
            ExtractionCase::Case2
        }
        (true, false) => {
            if sign == Sign::Minus {
                sh.apply(NielsenMove::Invert { target: j });
            }
            sh.apply(NielsenMove::RightMultiply {
                target: j,
                by: k,
                sign: Sign::Plus,
            });
            ExtractionCase::Case3
        }
        (false, false) => {
            let i = first_in_h;
            sh.apply(NielsenMove::LeftMultiply {
                target: i,
                by: k,
                sign: Sign::Plus,
            });
            sh.apply(NielsenMove::LeftMultiply {
                target: i,
                by: j,
                sign,
            });
            ExtractionCase::Case4
        }
    };
    Ok(case)
}

/// Left-cleans, then extracts from `H` until no two entries share a left
/// coset.
pub fn clean_extract(t: &CosetTable, s: &GeneratingTuple) -> Result<ShiftOutcome> {
    let mut sh = Shifter::new(t, s.clone());
    clean_extract_in_place(&mut sh)?;
    Ok(sh.finish())
}

fn clean_extract_in_place(sh: &mut Shifter<'_>) -> Result<()> {
    if sh.len() > sh.table.index() {
        return Err(Error::TupleLargerThanIndex {
            size: sh.len(),
            index: sh.table.index(),
        });
    }
    clean_left_in_place(sh);
    while sh.positions_in_subgroup().len() >= 2 {
        extract_in_place(sh)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingTransversal {
    pub tuple: GeneratingTuple,
    pub log: MoveLog,
    pub transversal: Transversal,
}

/// Left transversal containing every entry of a Nielsen-equivalent tuple.
/// Cosets without an entry are filled from the canonical transversal.
pub fn generating_left_transversal(
    t: &CosetTable,
    s: &GeneratingTuple,
) -> Result<GeneratingTransversal> {
    let mut sh = Shifter::new(t, s.clone());
    clean_extract_in_place(&mut sh)?;
    let mut words = t.canonical_left_transversal().words().to_vec();
    for i in 0..sh.len() {
        words[sh.left_id(i).index()] = sh.tuple.get(i).clone();
    }
    let out = sh.finish();
    Ok(GeneratingTransversal {
        tuple: out.tuple,
        log: out.log,
        transversal: Transversal::new(words, TransversalKind::Left),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset_enum::{todd_coxeter, EnumLimits};
    use crate::nielsen::replay;
    use crate::presentation::{parse_presentation, Presentation};

    fn setup(text: &str) -> (Presentation, CosetTable) {
        let (p, h) = parse_presentation(text).unwrap();
        let t = todd_coxeter(&p, &h, EnumLimits::default()).unwrap();
        (p, t)
    }

    fn tuple(p: &Presentation, words: &[&str]) -> GeneratingTuple {
        GeneratingTuple::new(words.iter().map(|w| p.parse_word(w).unwrap()).collect())
    }

    const K4: &str = "generators: x y\nrelators: xx yy xyXY\n";
    const S3_A: &str = "generators: a b\nrelators: aa bb ababab\nsubgroup: a\n";
    const C2_CUBED_Z: &str = "generators: x y z\nrelators: xx yy zz xyXY xzXZ yzYZ\nsubgroup: z\n";

    #[test]
    fn find_extraction_examples() {
        let (p, t) = setup(K4);
        // xx = e would land in the empty identity coset, but xy reaches a
        // non-identity empty coset and is preferred.
        assert_eq!(
            find_extraction(&t, &tuple(&p, &["x", "y"])).unwrap(),
            Extraction {
                j: 0,
                k: 1,
                sign: Sign::Plus
            }
        );
        let (p, t) = setup(S3_A);
        let e = find_extraction(&t, &tuple(&p, &["a", "b"])).unwrap();
        assert_eq!(
            e,
            Extraction {
                j: 0,
                k: 1,
                sign: Sign::Plus
            }
        );
        let (p, t) = setup("generators: a\nrelators:\nsubgroup: aaa\n");
        assert_eq!(
            find_extraction(&t, &tuple(&p, &["a"])).unwrap(),
            Extraction {
                j: 0,
                k: 0,
                sign: Sign::Plus
            }
        );
    }

    #[test]
    fn no_empty_coset() {
        let (p, t) = setup("generators: x y\nrelators: xx yy xyXY\nsubgroup: x\n");
        let s = tuple(&p, &["x", "y"]);
        assert_eq!(find_extraction(&t, &s), Err(Error::NoEmptyCoset));
        assert_eq!(left_extract(&t, &s).unwrap_err(), Error::NoEmptyCoset);
    }

    #[test]
    fn no_entry_in_h() {
        let (p, t) = setup(K4);
        assert_eq!(
            left_extract(&t, &tuple(&p, &["x", "y"])).unwrap_err(),
            Error::NoEntryInH
        );
    }

    #[test]
    fn case3_on_s3() {
        let (p, t) = setup(S3_A);
        let s = tuple(&p, &["a", "b"]);
        let (out, case) = left_extract(&t, &s).unwrap();
        assert_eq!(case, ExtractionCase::Case3);
        assert_eq!(out.tuple, tuple(&p, &["ab", "b"]));
        assert_eq!(replay(&s, &out.log).unwrap(), out.tuple);
        let ids: Vec<_> = out
            .tuple
            .entries()
            .iter()
            .map(|w| t.left_coset_id(w))
            .collect();
        assert!(ids.iter().all(|&c| c != CosetId::SUBGROUP));
        assert_ne!(ids[0], ids[1]);
    }

    #[test]
    fn case4_on_c2_cubed() {
        let (p, t) = setup(C2_CUBED_Z);
        let s = tuple(&p, &["z", "x", "y"]);
        let (out, case) = left_extract(&t, &s).unwrap();
        assert_eq!(case, ExtractionCase::Case4);
        assert_eq!(out.log.len(), 2);
        assert_eq!(out.tuple, tuple(&p, &["xyz", "x", "y"]));
        let before = t.left_coset_id(&p.parse_word("xy").unwrap());
        assert_eq!(t.left_coset_id(out.tuple.get(0)), before);
    }

    #[test]
    fn case2_when_donor_outside() {
        let (p, t) = setup("generators: a\nrelators: aaaaa\n");
        // Full cosets {a, 1, a²}; the first hit is a⁻¹·1 = a⁴.
        let s = tuple(&p, &["a", "1", "aa"]);
        let (out, case) = left_extract(&t, &s).unwrap();
        assert_eq!(case, ExtractionCase::Case2);
        assert_eq!(out.tuple, tuple(&p, &["a", "A", "aa"]));
    }

    #[test]
    fn clean_extract_examples() {
        let (p, t) = setup(K4);
        let s = tuple(&p, &["x", "y"]);
        assert_eq!(clean_extract(&t, &s).unwrap().tuple, s);
        let (p, t) = setup(S3_A);
        for words in [["a", "b"], ["b", "ba"]] {
            let s = tuple(&p, &words);
            let out = clean_extract(&t, &s).unwrap();
            assert_eq!(replay(&s, &out.log).unwrap(), out.tuple);
            let a = t.left_coset_id(out.tuple.get(0));
            let b = t.left_coset_id(out.tuple.get(1));
            assert_ne!(a, b);
        }
        let s = tuple(&p, &["a", "b", "ab", "ba"]);
        assert_eq!(
            clean_extract(&t, &s).unwrap_err(),
            Error::TupleLargerThanIndex { size: 4, index: 3 }
        );
    }

    #[test]
    fn generating_left_transversal_rank_one() {
        let (p, t) = setup("generators: a\nrelators:\nsubgroup: aaa\n");
        let s = tuple(&p, &["a"]);
        let out = generating_left_transversal(&t, &s).unwrap();
        assert!(out.transversal.contains(&p.parse_word("a").unwrap()));
        assert!(out.transversal.check(&t).is_ok());
        assert_eq!(out.transversal.len(), 3);
    }
}
