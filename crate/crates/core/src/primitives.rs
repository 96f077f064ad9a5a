//! Primitive elements relative to the cosets of a finite-index subgroup.
//!
//! A primitive element is an entry of some generating tuple of minimal size.
//! Every witness produced here is certified by construction: it carries a
//! Nielsen move log turning the input tuple into one that has the witness as
//! an entry.

use std::collections::{BTreeMap, HashSet, VecDeque};

use itertools::Itertools;

use crate::coset_enum::{CosetId, CosetTable};
use crate::error::{Error, Result};
use crate::nielsen::{GeneratingTuple, MoveLog, NielsenMove, Sign};
use crate::shifting_boxes::{clean_left_in_place, extract_in_place, Shifter};
use crate::words::Word;

/// A product of tuple entries, `(entry index, sign)` per factor.
pub type Expression = Vec<(usize, Sign)>;

/// `g₁..gₙ`, `e`, then for every nonempty index set `{a₁ < .. < a_k}` the
/// product `g_{a_k} ··· g_{a₁} · g₁`. Sets are grouped by size and
/// lexicographic within a size, so the list has exactly `n + 2ⁿ` members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateList {
    words: Vec<Word>,
    expressions: Vec<Expression>,
}

impl CandidateList {
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn expressions(&self) -> &[Expression] {
        &self.expressions
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

pub fn build_candidate_list(s: &GeneratingTuple) -> CandidateList {
    let n = s.len();
    let mut expressions: Vec<Expression> = (0..n).map(|i| vec![(i, Sign::Plus)]).collect();
    expressions.push(Vec::new());
    if n > 0 {
        for k in 1..=n {
            for set in (0..n).combinations(k) {
                let mut e: Expression = set.iter().rev().map(|&i| (i, Sign::Plus)).collect();
                e.push((0, Sign::Plus));
                expressions.push(e);
            }
        }
    }
    let words = expressions.iter().map(|e| evaluate(s, e)).collect();
    CandidateList { words, expressions }
}

pub fn evaluate(s: &GeneratingTuple, e: &[(usize, Sign)]) -> Word {
    e.iter().fold(Word::identity(), |w, &(i, sign)| {
        w.concat(&sign.apply(s.get(i)))
    })
}

fn reduce(e: impl IntoIterator<Item = (usize, Sign)>) -> Expression {
    let mut out: Expression = Vec::new();
    for f in e {
        match out.last() {
            Some(&(i, s)) if i == f.0 && s == f.1.flip() => {
                out.pop();
            }
            _ => out.push(f),
        }
    }
    out
}

fn invert(e: &[(usize, Sign)]) -> impl Iterator<Item = (usize, Sign)> + '_ {
    e.iter().rev().map(|&(i, s)| (i, s.flip()))
}

/// A word together with moves that make it an entry: `replay(input, log)`
/// holds `word` at `position`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveWitness {
    pub word: Word,
    pub log: MoveLog,
    pub position: usize,
}

/// Builds `e` on top of the tuple reached by `prefix`, provided some entry
/// index occurs in `e` exactly once.
fn certify(s: &GeneratingTuple, prefix: &MoveLog, e: &[(usize, Sign)]) -> Option<PrimitiveWitness> {
    let e = reduce(e.iter().copied());
    let (p, &(t, sign)) = e
        .iter()
        .enumerate()
        .find(|(_, &(i, _))| e.iter().filter(|f| f.0 == i).count() == 1)?;
    let mut log = prefix.clone();
    if sign == Sign::Minus {
        log.push(NielsenMove::Invert { target: t });
    }
    for &(by, sign) in &e[p + 1..] {
        log.push(NielsenMove::RightMultiply {
            target: t,
            by,
            sign,
        });
    }
    for &(by, sign) in e[..p].iter().rev() {
        log.push(NielsenMove::LeftMultiply {
            target: t,
            by,
            sign,
        });
    }
    Some(PrimitiveWitness {
        word: evaluate(s, &e),
        log,
        position: t,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupPrimitivity {
    Yes(PrimitiveWitness),
    /// No primitive element: `H` is normal with quotient `C₂^m`, `m = n`.
    No {
        m: usize,
    },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivityReport {
    pub subgroup: SubgroupPrimitivity,
    /// `Some(m)` when `H` is normal with quotient `C₂^m`.
    pub exceptional: Option<usize>,
    pub per_coset: BTreeMap<CosetId, PrimitiveWitness>,
}

/// Whether `H` is normal: every subgroup generator fixes every right coset.
pub fn is_normal(t: &CosetTable) -> bool {
    t.subgroup()
        .generators
        .iter()
        .all(|h| (0..t.index()).all(|c| t.trace_index(c, h) == c))
}

/// `Some(m)` iff `H` is normal and `G/H ≅ C₂^m`: squares and commutators of
/// the presentation generators act trivially and the index is `2^m`.
pub fn is_exceptional(t: &CosetTable) -> Option<usize> {
    if !is_normal(t) || !t.index().is_power_of_two() {
        return None;
    }
    let g = t.alphabet().len();
    let trivial = |w: &Word| (0..t.index()).all(|c| t.trace_index(c, w) == c);
    let x = |i: usize| Word::generator(i);
    let squares = (0..g).all(|a| trivial(&x(a).pow(2)));
    let commutators = (0..g).tuple_combinations().all(|(a, b)| {
        let c = x(a)
            .concat(&x(b))
            .concat(&x(a).inverse())
            .concat(&x(b).inverse());
        trivial(&c)
    });
    (squares && commutators).then(|| t.index().trailing_zeros() as usize)
}

const SEARCH_TUPLES: usize = 256;

/// Looks for a primitive element of `G` inside `H`.
///
/// The tuple is left-cleaned; an entry in `H` is returned directly. Otherwise
/// the candidate list of each rotation of the tuple is searched for two
/// members in one left coset, whose quotient is primitive whenever some
/// entry occurs in it once. Failing that, the exceptional case is settled
/// exactly, and any other subgroup gets a bounded search over
/// Nielsen-equivalent tuples before being reported as unknown.
pub fn scan_subgroup(t: &CosetTable, s: &GeneratingTuple) -> PrimitivityReport {
    let exceptional = is_exceptional(t);
    let subgroup = scan(t, s, exceptional);
    PrimitivityReport {
        subgroup,
        exceptional,
        per_coset: BTreeMap::new(),
    }
}

fn scan(t: &CosetTable, s: &GeneratingTuple, exceptional: Option<usize>) -> SubgroupPrimitivity {
    let n = s.len();
    let mut sh = Shifter::new(t, s.clone());
    clean_left_in_place(&mut sh);
    let cleaned = sh.finish();
    if let Some(w) = scan_tuple(t, s, &cleaned.tuple, &cleaned.log) {
        return SubgroupPrimitivity::Yes(w);
    }
    if let Some(m) = exceptional {
        if m >= n {
            return SubgroupPrimitivity::No { m };
        }
        // The images of the entries in C₂^m are dependent, so some product of
        // distinct entries lies in H.
        let u = &cleaned.tuple;
        for k in 1..=n {
            for set in (0..n).combinations(k) {
                let e: Expression = set.iter().map(|&i| (i, Sign::Plus)).collect();
                if t.is_member(&evaluate(u, &e)) {
                    return certify(u, &cleaned.log, &e)
                        .map_or(SubgroupPrimitivity::Unknown, |w| {
                            SubgroupPrimitivity::Yes(w)
                        });
                }
            }
        }
        return SubgroupPrimitivity::Unknown;
    }

    let mut seen = HashSet::from([cleaned.tuple.clone()]);
    let mut queue = VecDeque::from([(cleaned.tuple, cleaned.log)]);
    while let Some((u, log)) = queue.pop_front() {
        if seen.len() >= SEARCH_TUPLES {
            break;
        }
        for m in elementary_moves(n) {
            let v = u.apply_move(m).expect("valid move");
            if !seen.insert(v.clone()) {
                continue;
            }
            let mut next = log.clone();
            next.push(m);
            if let Some(w) = scan_tuple(t, s, &v, &next) {
                return SubgroupPrimitivity::Yes(w);
            }
            queue.push_back((v, next));
        }
    }
    SubgroupPrimitivity::Unknown
}

fn elementary_moves(n: usize) -> impl Iterator<Item = NielsenMove> {
    (0..n)
        .cartesian_product(0..n)
        .filter(|(i, j)| i != j)
        .flat_map(|(target, by)| {
            Sign::both().into_iter().flat_map(move |sign| {
                [
                    NielsenMove::LeftMultiply { target, by, sign },
                    NielsenMove::RightMultiply { target, by, sign },
                ]
            })
        })
}

/// Entry in `H`, or a certified candidate-list collision, for the tuple `u`
/// reached from `s` by `log`.
fn scan_tuple(
    t: &CosetTable,
    s: &GeneratingTuple,
    u: &GeneratingTuple,
    log: &MoveLog,
) -> Option<PrimitiveWitness> {
    debug_assert_eq!(crate::nielsen::replay(s, log).ok().as_ref(), Some(u));
    if let Some(i) = (0..u.len()).find(|&i| t.is_member(u.get(i))) {
        return Some(PrimitiveWitness {
            word: u.get(i).clone(),
            log: log.clone(),
            position: i,
        });
    }
    for lead in 0..u.len() {
        let mut prefix = log.clone();
        let mut v = u.clone();
        if lead != 0 {
            let m = NielsenMove::Swap { i: 0, j: lead };
            v.apply(m).expect("valid move");
            prefix.push(m);
        }
        let list = build_candidate_list(&v);
        let ids: Vec<CosetId> = list.words.iter().map(|w| t.left_coset_id(w)).collect();
        for q in 0..list.len() {
            for p in 0..q {
                if ids[p] != ids[q] {
                    continue;
                }
                let z: Expression = invert(&list.expressions[p])
                    .chain(list.expressions[q].iter().copied())
                    .collect();
                if let Some(w) = certify(&v, &prefix, &z) {
                    debug_assert!(t.is_member(&w.word));
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Primitive witnesses in every left coset of a subgroup of index at most
/// `n + 2`. The subgroup itself is left without a witness exactly when it is
/// exceptional with `n = 2`.
pub fn primitive_in_each_coset(t: &CosetTable, s: &GeneratingTuple) -> Result<PrimitivityReport> {
    let n = s.len();
    if n < 2 {
        return Err(Error::TupleTooSmall { size: n, min: 2 });
    }
    if t.index() > n + 2 {
        return Err(Error::IndexTooLarge {
            index: t.index(),
            bound: n + 2,
        });
    }
    let mut per_coset = BTreeMap::new();
    let record = |sh: &Shifter<'_>, map: &mut BTreeMap<CosetId, PrimitiveWitness>| {
        for i in 0..sh.len() {
            map.entry(sh.left_id(i))
                .or_insert_with(|| PrimitiveWitness {
                    word: sh.tuple.get(i).clone(),
                    log: sh.log.clone(),
                    position: i,
                });
        }
    };
    let mut sh = Shifter::new(t, s.clone());
    clean_left_in_place(&mut sh);
    record(&sh, &mut per_coset);
    while !sh.positions_in_subgroup().is_empty() && sh.full_left_cosets().contains(&false) {
        extract_in_place(&mut sh)?;
        record(&sh, &mut per_coset);
    }

    // An empty coset xH ≠ H holds some g_i⁻¹ or g_i⁻¹ g_j.
    for c in t.cosets().skip(1) {
        if per_coset.contains_key(&c) {
            continue;
        }
        let found = (0..n).find_map(|i| {
            let inv = vec![(i, Sign::Minus)];
            std::iter::once(inv)
                .chain(
                    (0..n)
                        .filter(|&j| j != i)
                        .map(|j| vec![(i, Sign::Minus), (j, Sign::Plus)]),
                )
                .find(|e| t.left_coset_id(&evaluate(&sh.tuple, e)) == c)
        });
        if let Some(e) = found {
            let w = certify(&sh.tuple, &sh.log, &e).expect("each index occurs once");
            per_coset.insert(c, w);
        }
    }

    let exceptional = is_exceptional(t);
    let subgroup = match per_coset.get(&CosetId::SUBGROUP) {
        Some(w) => SubgroupPrimitivity::Yes(w.clone()),
        None => {
            let r = scan(t, s, exceptional);
            if let SubgroupPrimitivity::Yes(w) = &r {
                per_coset.insert(CosetId::SUBGROUP, w.clone());
            }
            r
        }
    };
    Ok(PrimitivityReport {
        subgroup,
        exceptional,
        per_coset,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalCosetWitness {
    pub witness: PrimitiveWitness,
    /// The witness as a product of tuple entries, ending in the entry in `N`.
    pub expression: Expression,
}

/// For `N` normal and `s[index] ∈ N`: a primitive `g'·s[index]` in every coset,
/// where `g'` is a product of the other entries.
pub fn normal_coset_primitives(
    t: &CosetTable,
    s: &GeneratingTuple,
    index: usize,
) -> Result<BTreeMap<CosetId, NormalCosetWitness>> {
    if index >= s.len() {
        return Err(Error::InvalidMove(format!(
            "entry {} out of range 1..={}",
            index + 1,
            s.len()
        )));
    }
    if !is_normal(t) {
        return Err(Error::NotNormal);
    }
    if !t.is_member(s.get(index)) {
        return Err(Error::EntryNotInSubgroup);
    }
    // Breadth-first over left cosets: prepending s_i^ε to g' sends the left
    // id c to trace(c, s_i^-ε).
    let mut prefix: Vec<Option<Expression>> = vec![None; t.index()];
    prefix[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let e = prefix[c].clone().expect("visited");
        for i in (0..s.len()).filter(|&i| i != index) {
            for sign in Sign::both() {
                let d = t.trace_index(c, &sign.flip().apply(s.get(i)));
                if prefix[d].is_none() {
                    let mut next = vec![(i, sign)];
                    next.extend(&e);
                    prefix[d] = Some(next);
                    queue.push_back(d);
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for (c, e) in prefix.into_iter().enumerate() {
        let Some(mut e) = e else {
            return Err(Error::NotGenerating(format!(
                "the other entries miss coset {}",
                CosetId::from_index(c)
            )));
        };
        let mut log = MoveLog::new();
        for &(by, sign) in e.iter().rev() {
            log.push(NielsenMove::LeftMultiply {
                target: index,
                by,
                sign,
            });
        }
        e.push((index, Sign::Plus));
        let word = evaluate(s, &e);
        debug_assert_eq!(t.left_coset_id(&word), CosetId::from_index(c));
        out.insert(
            CosetId::from_index(c),
            NormalCosetWitness {
                witness: PrimitiveWitness {
                    word,
                    log,
                    position: index,
                },
                expression: e,
            },
        );
    }
    Ok(out)
}

/// For `N` normal with `witness ∈ N`: whether `G/N` is generated by `n − 1`
/// elements, checked on the quotient read off the coset table.
pub fn quotient_rank_bound_check(t: &CosetTable, witness: &Word, n: usize) -> Result<bool> {
    if !is_normal(t) {
        return Err(Error::NotNormal);
    }
    if !t.is_member(witness) {
        return Err(Error::EntryNotInSubgroup);
    }
    let k = t.index();
    if k == 1 {
        return Ok(true);
    }
    if n < 2 {
        return Ok(false);
    }
    let reps: Vec<&Word> = t.cosets().map(|c| t.schreier_rep(c)).collect();
    let mul = |a: usize, b: usize| t.trace_index(a, reps[b]);
    let generates = |gens: &[usize]| {
        let mut seen = vec![false; k];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&b| b)
    };
    Ok((0..k)
        .combinations_with_replacement(n - 1)
        .any(|gens| generates(&gens)))
}
