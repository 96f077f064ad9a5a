//! Brute-force ground truth for small finite groups.
//!
//! The group is materialized as its regular representation: the coset table
//! of the trivial subgroup. Element ids are 0-based coset indices, the
//! identity is 0 and `a·b` is `a` traced along the representative of `b`.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coset_enum::{todd_coxeter, CosetId, CosetTable, EnumLimits};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, SubgroupSpec};
use crate::words::{Alphabet, Word};

/// Largest order the exhaustive searches accept.
pub const ORDER_CAP: usize = 5040;
/// Largest tuple size for the exhaustive primitive search.
pub const TUPLE_CAP: usize = 3;
const MUL_TABLE_CAP: usize = 1024;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    table: CosetTable,
    products: Option<Vec<u32>>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn materialize(p: &Presentation, limits: EnumLimits) -> Result<FiniteGroup> {
        let table = todd_coxeter(p, &SubgroupSpec::trivial(), limits)?;
        let order = table.index();
        let mut g = FiniteGroup {
            table,
            products: None,
            inverses: Vec::new(),
        };
        if order <= MUL_TABLE_CAP {
            let mut products = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    products.push(g.trace_mul(a, b) as u32);
                }
            }
            g.products = Some(products);
        }
        g.inverses = (0..order)
            .map(|a| g.id_of_word(&g.word_of(a).inverse()))
            .collect();
        Ok(g)
    }

    fn trace_mul(&self, a: usize, b: usize) -> usize {
        self.table.trace_index(a, self.word_of(b))
    }

    pub fn order(&self) -> usize {
        self.table.index()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.table.alphabet()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.products {
            Some(p) => p[a * self.order() + b] as usize,
            None => self.trace_mul(a, b),
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn id_of_word(&self, w: &Word) -> usize {
        self.table.trace_index(0, w)
    }

    /// The shortlex-least word for an element.
    pub fn word_of(&self, id: usize) -> &Word {
        self.table.schreier_rep(CosetId::from_index(id))
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut out = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn generates_ids(&self, gens: &[usize]) -> bool {
        self.closure(gens).len() == self.order()
    }

    pub fn generates(&self, words: &[Word]) -> bool {
        let ids: Vec<usize> = words.iter().map(|w| self.id_of_word(w)).collect();
        self.generates_ids(&ids)
    }

    /// The minimal size of a generating set.
    pub fn rank(&self) -> usize {
        (0..)
            .find(|&k| {
                (0..self.order())
                    .combinations(k)
                    .any(|gens| self.generates_ids(&gens))
            })
            .expect("the whole group generates")
    }

    /// Every element lying in some generating `n`-tuple.
    pub fn primitive_elements(&self, n: usize) -> Result<BTreeSet<usize>> {
        if self.order() > ORDER_CAP || n > TUPLE_CAP {
            return Err(Error::SearchTooLarge(format!(
                "order {} with tuples of size {n} (caps {ORDER_CAP} and {TUPLE_CAP})",
                self.order()
            )));
        }
        let mut found = BTreeSet::new();
        for tuple in (0..self.order()).combinations_with_replacement(n) {
            if tuple.iter().all(|x| found.contains(x)) {
                continue;
            }
            if self.generates_ids(&tuple) {
                found.extend(tuple);
            }
        }
        Ok(found)
    }

    /// Elements found in `samples` random generating `n`-tuples; a subset of
    /// the primitive elements, deterministic for a given seed.
    pub fn sampled_primitive_elements(
        &self,
        n: usize,
        samples: usize,
        seed: u64,
    ) -> BTreeSet<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut found = BTreeSet::new();
        for _ in 0..samples {
            let tuple: Vec<usize> = (0..n).map(|_| rng.random_range(0..self.order())).collect();
            if self.generates_ids(&tuple) {
                found.extend(tuple);
            }
        }
        found
    }

    /// All subgroups, by repeatedly extending known subgroups by one element.
    /// Sorted by order, then by element set.
    pub fn all_subgroups(&self) -> Result<Vec<OracleSubgroup>> {
        if self.order() > ORDER_CAP {
            return Err(Error::SearchTooLarge(format!(
                "order {} exceeds {ORDER_CAP}",
                self.order()
            )));
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::from([vec![0]]);
        let mut all = vec![OracleSubgroup {
            elements: vec![0],
            generators: Vec::new(),
        }];
        let mut i = 0;
        while i < all.len() {
            let base = all[i].clone();
            let mut inside = vec![false; self.order()];
            for &x in &base.elements {
                inside[x] = true;
            }
            for (g, &done) in inside.iter().enumerate() {
                if done {
                    continue;
                }
                let mut gens = base.generators.clone();
                gens.push(g);
                let elements = self.closure(&gens);
                if seen.insert(elements.clone()) {
                    all.push(OracleSubgroup {
                        elements,
                        generators: gens,
                    });
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        Ok(all)
    }

    pub fn is_normal(&self, elements: &[usize]) -> bool {
        let mut inside = vec![false; self.order()];
        for &x in elements {
            inside[x] = true;
        }
        (0..self.order()).all(|g| {
            elements
                .iter()
                .all(|&h| inside[self.mul(self.mul(self.inv(g), h), g)])
        })
    }

    /// The left coset `gH` as a sorted element set.
    pub fn left_coset(&self, g: usize, elements: &[usize]) -> Vec<usize> {
        let mut c: Vec<usize> = elements.iter().map(|&h| self.mul(g, h)).collect();
        c.sort_unstable();
        c
    }

    /// The right coset `Hg` as a sorted element set.
    pub fn right_coset(&self, g: usize, elements: &[usize]) -> Vec<usize> {
        let mut c: Vec<usize> = elements.iter().map(|&h| self.mul(h, g)).collect();
        c.sort_unstable();
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSubgroup {
    /// Sorted element ids.
    pub elements: Vec<usize>,
    /// Element ids generating the subgroup.
    pub generators: Vec<usize>,
}

impl OracleSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Generator words for the enumerator.
    pub fn spec(&self, g: &FiniteGroup) -> SubgroupSpec {
        SubgroupSpec::new(
            self.generators
                .iter()
                .map(|&x| g.word_of(x).clone())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn group(text: &str) -> FiniteGroup {
        let (p, _) = parse_presentation(text).unwrap();
        FiniteGroup::materialize(&p, EnumLimits::default()).unwrap()
    }

    const S3: &str = "generators: a b\nrelators: aa bb ababab\n";
    const K4: &str = "generators: x y\nrelators: xx yy xyXY\n";

    #[test]
    fn orders() {
        assert_eq!(group(S3).order(), 6);
        assert_eq!(group(K4).order(), 4);
        assert_eq!(group("generators: a\nrelators: aaaaa\n").order(), 5);
    }

    #[test]
    fn group_axioms() {
        let g = group(S3);
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(0, a), a);
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn generation() {
        let (p, _) = parse_presentation(S3).unwrap();
        let g = FiniteGroup::materialize(&p, EnumLimits::default()).unwrap();
        let w = |s: &str| p.parse_word(s).unwrap();
        assert!(g.generates(&[w("a"), w("b")]));
        assert!(!g.generates(&[w("a")]));
        assert!(!g.generates(&[]));
        assert!(group("generators: a\nrelators: a\n").generates(&[]));
        assert_eq!(g.rank(), 2);
    }

    #[test]
    fn primitives() {
        let g = group(K4);
        assert_eq!(g.primitive_elements(2).unwrap(), BTreeSet::from([1, 2, 3]));
        let g = group("generators: a\nrelators: aaaaaa\n");
        let p = g.primitive_elements(1).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.iter().all(|&x| g.closure(&[x]).len() == 6));
        let g = group("generators: x y\nrelators: xxx yyy xyXY\n");
        assert_eq!(g.primitive_elements(2).unwrap().len(), 8);
        assert!(matches!(
            g.primitive_elements(4),
            Err(Error::SearchTooLarge(_))
        ));
    }

    #[test]
    fn sampling_is_a_subset() {
        let g = group(S3);
        let all = g.primitive_elements(2).unwrap();
        let some = g.sampled_primitive_elements(2, 50, 7);
        assert!(some.is_subset(&all));
        assert_eq!(some, g.sampled_primitive_elements(2, 50, 7));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(group(K4).all_subgroups().unwrap().len(), 5);
        assert_eq!(group(S3).all_subgroups().unwrap().len(), 6);
        assert_eq!(
            group("generators: a\nrelators: aaaaa\n")
                .all_subgroups()
                .unwrap()
                .len(),
            2
        );
    }
}
