use super::clean::clean_side_both;
use super::left_right::extend_left_right;
use super::{Shifter, Transversal};
use crate::coset_enum::CosetTable;
use crate::error::{Error, Result};
use crate::nielsen::{GeneratingTuple, MoveLog, NielsenMove, Sign};

/// Which branch produced the final tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rank3Case {
    /// At most one entry in `H` after left-right cleaning.
    Direct,
    /// `g²` lies in a different chessboard: `h₁ ← g² h₁`.
    Case1,
    /// `g² ∈ HgH` and some `hᵢ g² H ≠ gH`: `hᵢ ← hᵢ g²`.
    Case2a,
    /// `g² ∈ HgH`, both `hᵢ g² H = gH`: `h₁ ← h₂⁻¹ h₁ g²`.
    Case2b,
    /// `g² ∈ H`, distinct donors: `hᵢ ← hᵢ^ε g`, then `g ← g hⱼ^δ`.
    Case3a,
    /// `g² ∈ H`, same donor: `h' ← h' g hᵢ^δ`.
    Case3b,
    /// As 3b, followed by `g ← hᵢ^ε g`.
    Case3c,
}

impl Rank3Case {
    /// The top-level case number (0 for the direct path).
    pub fn number(self) -> u8 {
        match self {
            Rank3Case::Direct => 0,
            Rank3Case::Case1 => 1,
            Rank3Case::Case2a | Rank3Case::Case2b => 2,
            Rank3Case::Case3a | Rank3Case::Case3b | Rank3Case::Case3c => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank3Outcome {
    pub tuple: GeneratingTuple,
    pub log: MoveLog,
    pub transversal: Transversal,
    pub case: Rank3Case,
}

/// Left-right generating transversal for tuples of size at most three.
pub fn lr_generating_transversal_rank3(
    t: &CosetTable,
    s: &GeneratingTuple,
) -> Result<Rank3Outcome> {
    let n = s.len();
    if n == 0 {
        return Err(Error::TupleTooSmall { size: 0, min: 1 });
    }
    if n > 3 {
        return Err(Error::RankTooLarge(n));
    }
    if n > t.index() {
        return Err(Error::TupleLargerThanIndex {
            size: n,
            index: t.index(),
        });
    }
    let mut sh = Shifter::new(t, s.clone());
    clean_side_both(&mut sh);
    let in_h = sh.positions_in_subgroup();
    let case = match in_h.len() {
        0 | 1 => Rank3Case::Direct,
        2 if n == 3 => {
            let (h1, h2) = (in_h[0], in_h[1]);
            let g = (0..3)
                .find(|i| !in_h.contains(i))
                .expect("one entry outside H");
            two_in_h(&mut sh, h1, h2, g)?
        }
        k => return Err(Error::MultipleEntriesInH { count: k }),
    };
    let transversal = extend_left_right(t, &sh.tuple)?;
    let out = sh.finish();
    Ok(Rank3Outcome {
        tuple: out.tuple,
        log: out.log,
        transversal,
        case,
    })
}

fn two_in_h(sh: &mut Shifter<'_>, h1: usize, h2: usize, g: usize) -> Result<Rank3Case> {
    let t = sh.table;
    let gw = sh.tuple.get(g).clone();
    let g2 = gw.concat(&gw);
    let g_left = t.left_coset_id(&gw);
    let g_right = t.right_coset_id(&gw);
    let h = |i: usize, sign: Sign, sh: &Shifter<'_>| sign.apply(sh.tuple.get(i));

    if !t.is_member(&g2) {
        let d = crate::chessboard::decompose(t, t)?;
        let same_board = d.block_of_column(t.left_coset_id(&g2)) == d.block_of_column(g_left);
        if !same_board {
            for _ in 0..2 {
                sh.apply(NielsenMove::LeftMultiply {
                    target: h1,
                    by: g,
                    sign: Sign::Plus,
                });
            }
            return Ok(Rank3Case::Case1);
        }
        let first = [h1, h2]
            .into_iter()
            .find(|&i| t.left_coset_id(&sh.tuple.get(i).concat(&g2)) != g_left);
        if let Some(i) = first {
            for _ in 0..2 {
                sh.apply(NielsenMove::RightMultiply {
                    target: i,
                    by: g,
                    sign: Sign::Plus,
                });
            }
            return Ok(Rank3Case::Case2a);
        }
        sh.apply(NielsenMove::LeftMultiply {
            target: h1,
            by: h2,
            sign: Sign::Minus,
        });
        for _ in 0..2 {
            sh.apply(NielsenMove::RightMultiply {
                target: h1,
                by: g,
                sign: Sign::Plus,
            });
        }
        return Ok(Rank3Case::Case2b);
    }

    let pairs = || {
        [h1, h2]
            .into_iter()
            .flat_map(|i| Sign::both().map(move |s| (i, s)))
    };
    let not_generating = || Error::NotGenerating("the tuple's entries fix gH".into());
    let (i, eps) = pairs()
        .find(|&(i, e)| t.left_coset_id(&h(i, e, sh).concat(&gw)) != g_left)
        .ok_or_else(not_generating)?;
    let (j, delta) = pairs()
        .find(|&(j, d)| t.right_coset_id(&gw.concat(&h(j, d, sh))) != g_right)
        .ok_or_else(not_generating)?;

    if i != j {
        if eps == Sign::Minus {
            sh.apply(NielsenMove::Invert { target: i });
        }
        sh.apply(NielsenMove::RightMultiply {
            target: i,
            by: g,
            sign: Sign::Plus,
        });
        sh.apply(NielsenMove::RightMultiply {
            target: g,
            by: j,
            sign: delta,
        });
        return Ok(Rank3Case::Case3a);
    }
    let other = if i == h1 { h2 } else { h1 };
    let candidate = sh.tuple.get(other).concat(&gw).concat(&h(i, delta, sh));
    sh.apply(NielsenMove::RightMultiply {
        target: other,
        by: g,
        sign: Sign::Plus,
    });
    sh.apply(NielsenMove::RightMultiply {
        target: other,
        by: i,
        sign: delta,
    });
    if t.left_coset_id(&candidate) != g_left {
        return Ok(Rank3Case::Case3b);
    }
    sh.apply(NielsenMove::LeftMultiply {
        target: g,
        by: i,
        sign: eps,
    });
    Ok(Rank3Case::Case3c)
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

    fn run(text: &str, words: &[&str]) -> Rank3Outcome {
        let (p, t) = setup(text);
        let s = tuple(&p, words);
        let out = lr_generating_transversal_rank3(&t, &s).unwrap();
        assert_eq!(replay(&s, &out.log).unwrap(), out.tuple);
        assert!(out.transversal.check(&t).is_ok());
        assert!(out
            .tuple
            .entries()
            .iter()
            .all(|w| out.transversal.contains(w)));
        out
    }

    const S3_A: &str = "generators: a b\nrelators: aa bb ababab\nsubgroup: a\n";

    #[test]
    fn direct_pairs() {
        assert_eq!(run(S3_A, &["a", "b"]).case, Rank3Case::Direct);
    }

    #[test]
    fn case1_on_c6() {
        let out = run(
            "generators: a\nrelators: aaaaaa\nsubgroup: aaa\n",
            &["aaa", "aaa", "a"],
        );
        assert_eq!(out.case, Rank3Case::Case1);
    }

    #[test]
    fn case2_on_s3() {
        let out = run(S3_A, &["a", "a", "ab"]);
        assert_eq!(out.case.number(), 2);
    }

    #[test]
    fn case3_on_s3() {
        let out = run(S3_A, &["a", "a", "b"]);
        assert_eq!(out.case.number(), 3);
    }

    #[test]
    fn errors() {
        let (p, t) = setup(S3_A);
        assert_eq!(
            lr_generating_transversal_rank3(&t, &tuple(&p, &["a", "b", "a", "b"])).unwrap_err(),
            Error::RankTooLarge(4)
        );
        let (p, t) = setup("generators: x y\nrelators: xx yy xyXY\nsubgroup: x y\n");
        assert_eq!(
            lr_generating_transversal_rank3(&t, &tuple(&p, &["x", "y"])).unwrap_err(),
            Error::TupleLargerThanIndex { size: 2, index: 1 }
        );
    }
}
