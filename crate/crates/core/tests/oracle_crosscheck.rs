//! Cross-checks of the coset machinery against the regular representation.

use transversals::chessboard::{decompose, diagonal_transversal};
use transversals::oracle::{FiniteGroup, OracleSubgroup};
use transversals::shifting_boxes::{
    clean_extract, generating_left_transversal, left_clean, left_right_clean,
    lr_generating_transversal_rank3,
};
use transversals::{
    parse_presentation, replay, todd_coxeter, CosetId, CosetTable, EnumLimits, GeneratingTuple,
    Presentation, Word,
};

const GROUPS: &[(&str, &str)] = &[
    ("S3", "generators: a b\nrelators: aa bb ababab\n"),
    ("K4", "generators: x y\nrelators: xx yy xyXY\n"),
    (
        "C2^3",
        "generators: x y z\nrelators: xx yy zz xyXY xzXZ yzYZ\n",
    ),
    ("C3^2", "generators: x y\nrelators: xxx yyy xyXY\n"),
    ("C6", "generators: a\nrelators: aaaaaa\n"),
    ("D4", "generators: r s\nrelators: rrrr ss srsr\n"),
    ("A4", "generators: a b\nrelators: aa bbb ababab\n"),
];

struct Case {
    name: &'static str,
    p: Presentation,
    g: FiniteGroup,
    subgroups: Vec<OracleSubgroup>,
}

fn corpus() -> Vec<Case> {
    GROUPS
        .iter()
        .map(|&(name, text)| {
            let (p, _) = parse_presentation(text).unwrap();
            let g = FiniteGroup::materialize(&p, EnumLimits::default()).unwrap();
            let subgroups = g.all_subgroups().unwrap();
            Case {
                name,
                p,
                g,
                subgroups,
            }
        })
        .collect()
}

fn table(c: &Case, h: &OracleSubgroup) -> CosetTable {
    todd_coxeter(&c.p, &h.spec(&c.g), EnumLimits::default()).unwrap()
}

fn generators(p: &Presentation) -> GeneratingTuple {
    GeneratingTuple::new((0..p.alphabet().len()).map(Word::generator).collect())
}

#[test]
fn index_and_coset_ids_match_oracle() {
    for c in corpus() {
        for h in &c.subgroups {
            let t = table(&c, h);
            assert_eq!(t.index() * h.order(), c.g.order(), "{}", c.name);
            assert!(t.is_consistent_with(&c.p));
            for a in 0..c.g.order() {
                let wa = c.g.word_of(a);
                assert_eq!(t.is_member(wa), h.contains(a));
                for b in 0..c.g.order() {
                    let wb = c.g.word_of(b);
                    let same_left =
                        c.g.left_coset(a, &h.elements) == c.g.left_coset(b, &h.elements);
                    let same_right =
                        c.g.right_coset(a, &h.elements) == c.g.right_coset(b, &h.elements);
                    assert_eq!(t.left_coset_id(wa) == t.left_coset_id(wb), same_left);
                    assert_eq!(t.right_coset_id(wa) == t.right_coset_id(wb), same_right);
                }
            }
        }
    }
}

#[test]
fn canonical_transversal_is_left_transversal() {
    for c in corpus() {
        for h in &c.subgroups {
            let t = table(&c, h);
            let tr = t.canonical_left_transversal();
            tr.check(&t).unwrap();
            for w in tr.words() {
                assert_eq!(t.locate_in_transversal(&tr, w).unwrap(), w);
            }
        }
    }
}

#[test]
fn free_group_indices() {
    let (p, h) = parse_presentation("generators: a\nrelators:\nsubgroup: aaa\n").unwrap();
    assert_eq!(
        todd_coxeter(&p, &h, EnumLimits::default()).unwrap().index(),
        3
    );
    let (p, h) = parse_presentation("generators: a b\nrelators:\nsubgroup: b aa abA\n").unwrap();
    let t = todd_coxeter(&p, &h, EnumLimits::default()).unwrap();
    assert_eq!(t.index(), 2);
    // Schreier graph: b fixes both cosets, a swaps them.
    let w = |s: &str| p.parse_word(s).unwrap();
    assert_eq!(t.right_coset_id(&w("b")), CosetId::SUBGROUP);
    assert_eq!(t.right_coset_id(&w("a")), CosetId(2));
    assert_eq!(t.right_coset_id(&w("ab")), CosetId(2));
    assert!(!t.is_member(&w("bab")) && t.is_member(&w("aba")));
}

#[test]
fn generating_left_transversals_generate() {
    for c in corpus() {
        let s = generators(&c.p);
        let rank = c.g.rank();
        assert_eq!(s.len(), rank, "{}", c.name);
        for h in c
            .subgroups
            .iter()
            .filter(|h| c.g.order() / h.order() >= rank)
        {
            let t = table(&c, h);
            let out = generating_left_transversal(&t, &s).unwrap();
            assert_eq!(replay(&s, &out.log).unwrap(), out.tuple);
            out.transversal.check_left(&t).unwrap();
            assert!(out
                .tuple
                .entries()
                .iter()
                .all(|w| out.transversal.contains(w)));
            assert!(c.g.generates(out.transversal.words()), "{}", c.name);
        }
    }
}

#[test]
fn cleaning_postconditions() {
    for c in corpus() {
        let s = generators(&c.p);
        for h in &c.subgroups {
            let t = table(&c, h);
            let out = left_right_clean(&t, &s);
            assert_eq!(replay(&s, &out.log).unwrap(), out.tuple);
            for side in [0, 1] {
                let mut ids: Vec<CosetId> = out
                    .tuple
                    .entries()
                    .iter()
                    .map(|w| {
                        if side == 0 {
                            t.left_coset_id(w)
                        } else {
                            t.right_coset_id(w)
                        }
                    })
                    .filter(|&c| c != CosetId::SUBGROUP)
                    .collect();
                let n = ids.len();
                ids.sort();
                ids.dedup();
                assert_eq!(ids.len(), n);
            }
            assert!(c.g.generates(out.tuple.entries()));
            let left = left_clean(&t, &s);
            assert_eq!(replay(&s, &left.log).unwrap(), left.tuple);
            if s.len() <= t.index() {
                let out = clean_extract(&t, &s).unwrap();
                let mut ids: Vec<_> = out
                    .tuple
                    .entries()
                    .iter()
                    .map(|w| t.left_coset_id(w))
                    .collect();
                ids.sort();
                ids.dedup();
                assert_eq!(ids.len(), s.len());
            }
        }
    }
}

#[test]
fn small_rank_left_right_transversals() {
    for c in corpus() {
        let s = generators(&c.p);
        for h in c
            .subgroups
            .iter()
            .filter(|h| c.g.order() / h.order() >= s.len())
        {
            let t = table(&c, h);
            let out = lr_generating_transversal_rank3(&t, &s).unwrap();
            assert_eq!(replay(&s, &out.log).unwrap(), out.tuple);
            out.transversal.check_left(&t).unwrap();
            out.transversal.check_right(&t).unwrap();
            assert!(c.g.generates(out.transversal.words()));
        }
    }
}

#[test]
fn chessboard_laws() {
    for c in corpus() {
        let tables: Vec<CosetTable> = c.subgroups.iter().map(|h| table(&c, h)).collect();
        for (i, th) in tables.iter().enumerate() {
            for (j, tk) in tables.iter().enumerate() {
                let d = decompose(th, tk).unwrap();
                let (n, m) = (th.index(), tk.index());
                let mut cols: Vec<_> = d.blocks.iter().flat_map(|b| b.columns.clone()).collect();
                let mut rows: Vec<_> = d.blocks.iter().flat_map(|b| b.rows.clone()).collect();
                cols.sort();
                rows.sort();
                assert_eq!(cols, (0..n).map(CosetId::from_index).collect::<Vec<_>>());
                assert_eq!(rows, (0..m).map(CosetId::from_index).collect::<Vec<_>>());
                for b in &d.blocks {
                    assert_eq!(b.columns.len() * m, b.rows.len() * n);
                    for (r, line) in b.rows.iter().zip(b.witness_grid()) {
                        for (col, w) in b.columns.iter().zip(line) {
                            assert_eq!(th.left_coset_id(&w), *col);
                            assert_eq!(tk.right_coset_id(&w), *r);
                        }
                    }
                }
                // Double cosets from the oracle.
                let (hs, ks) = (&c.subgroups[i], &c.subgroups[j]);
                let mut sizes: Vec<usize> = Vec::new();
                let mut seen = vec![false; c.g.order()];
                for x in 0..c.g.order() {
                    if seen[x] {
                        continue;
                    }
                    let mut size = 0;
                    for &k in &ks.elements {
                        for &h in &hs.elements {
                            let y = c.g.mul(c.g.mul(k, x), h);
                            if !seen[y] {
                                seen[y] = true;
                                size += 1;
                            }
                        }
                    }
                    sizes.push(size);
                }
                let mut ours: Vec<usize> = d
                    .blocks
                    .iter()
                    .map(|b| b.columns.len() * hs.order())
                    .collect();
                sizes.sort();
                ours.sort();
                assert_eq!(ours, sizes);
                if i == j {
                    assert!(d.blocks.iter().all(|b| b.is_square()));
                    let tr = diagonal_transversal(&d, th).unwrap();
                    tr.check_left(th).unwrap();
                    tr.check_right(th).unwrap();
                }
            }
        }
    }
}
