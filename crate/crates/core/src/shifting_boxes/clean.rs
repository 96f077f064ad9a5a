use super::{ShiftOutcome, Shifter};
use crate::coset_enum::{CosetId, CosetTable};
use crate::nielsen::{GeneratingTuple, NielsenMove, Sign};

/// Left-cleans `s`: afterwards no left coset other than `H` holds two entries.
///
/// For each position `p` in ascending order whose entry lies outside `H`, the
/// first later position `i` in the same left coset donates:
/// `s[p] ← s[i]⁻¹ s[p]`, which lands in `H`. Passes repeat until nothing
/// changes.
pub fn left_clean(t: &CosetTable, s: &GeneratingTuple) -> ShiftOutcome {
    let mut sh = Shifter::new(t, s.clone());
    clean_side(&mut sh, Side::Left);
    sh.finish()
}

/// Right-handed counterpart of [`left_clean`]: `s[p] ← s[p] s[i]⁻¹` whenever
/// `Hs[p] = Hs[i] ≠ H`.
pub fn right_clean(t: &CosetTable, s: &GeneratingTuple) -> ShiftOutcome {
    let mut sh = Shifter::new(t, s.clone());
    clean_side(&mut sh, Side::Right);
    sh.finish()
}

/// Left-clean followed by right-clean. Right-cleaning only moves entries into
/// `H`, so the result stays left-cleaned.
pub fn left_right_clean(t: &CosetTable, s: &GeneratingTuple) -> ShiftOutcome {
    let mut sh = Shifter::new(t, s.clone());
    clean_side_both(&mut sh);
    sh.finish()
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

pub(crate) fn clean_left_in_place(sh: &mut Shifter<'_>) {
    clean_side(sh, Side::Left);
}

pub(crate) fn clean_side_both(sh: &mut Shifter<'_>) {
    clean_side(sh, Side::Left);
    clean_side(sh, Side::Right);
}

fn clean_side(sh: &mut Shifter<'_>, side: Side) {
    let id = |sh: &Shifter<'_>, i: usize| match side {
        Side::Left => sh.left_id(i),
        Side::Right => sh.right_id(i),
    };
    loop {
        let mut changed = false;
        for p in 0..sh.len() {
            let c = id(sh, p);
            if c == CosetId::SUBGROUP {
                continue;
            }
            if let Some(i) = (p + 1..sh.len()).find(|&i| id(sh, i) == c) {
                sh.apply(match side {
                    Side::Left => NielsenMove::LeftMultiply {
                        target: p,
                        by: i,
                        sign: Sign::Minus,
                    },
                    Side::Right => NielsenMove::RightMultiply {
                        target: p,
                        by: i,
                        sign: Sign::Minus,
                    },
                });
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}
