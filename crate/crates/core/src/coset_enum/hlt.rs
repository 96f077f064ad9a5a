//! HLT coset enumeration: relators are scanned from every live coset in
//! definition order, undefined entries are filled by new definitions, and
//! coincidences are collapsed through a forwarding (union-find) array.

use crate::error::{Error, Result};
use crate::words::Word;

const NONE: u32 = u32::MAX;

pub(super) struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    // forward[c] == c iff c is live; otherwise points towards its survivor.
    forward: Vec<u32>,
    max_cosets: usize,
    queue: Vec<u32>,
}

/// A closed table with live cosets renumbered `0..k` by shortlex
/// breadth-first search, together with the representative reaching each.
pub(super) struct Closed {
    pub action: Vec<u32>,
    pub reps: Vec<Word>,
}

impl Enumerator {
    pub fn new(ngens: usize, max_cosets: usize) -> Self {
        let cols = 2 * ngens;
        Enumerator {
            cols,
            table: vec![NONE; cols],
            forward: vec![0],
            max_cosets,
            queue: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.cols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, d: u32) {
        self.table[c as usize * self.cols + col] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, col: usize) -> Result<()> {
        if self.forward.len() >= self.max_cosets {
            return Err(Error::LimitExceeded {
                max_cosets: self.max_cosets,
            });
        }
        let d = self.forward.len() as u32;
        self.forward.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut cur = c;
        while self.forward[cur as usize] != root {
            let next = self.forward[cur as usize];
            self.forward[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.forward[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                    continue;
                }
                let nu_inv = self.get(nu, x ^ 1);
                if nu_inv != NONE {
                    self.merge(mu, nu_inv);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x ^ 1, mu);
                }
            }
        }
    }

    /// Scans `word` (as table columns) from `alpha`, defining cosets until the
    /// cycle closes, then records the deduction or coincidence it forces.
    fn scan_and_fill(&mut self, alpha: u32, word: &[usize]) -> Result<()> {
        let (mut f, mut b) = (alpha, alpha);
        let (mut i, mut j) = (0, word.len());
        loop {
            while i < j && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, word[j - 1] ^ 1) != NONE {
                b = self.get(b, word[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    pub fn run(&mut self, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> Result<()> {
        for w in subgroup {
            self.scan_and_fill(0, w)?;
        }
        let mut alpha = 0u32;
        while (alpha as usize) < self.forward.len() {
            if self.is_live(alpha) {
                for r in relators {
                    self.scan_and_fill(alpha, r)?;
                    if !self.is_live(alpha) {
                        break;
                    }
                }
                if self.is_live(alpha) {
                    for x in 0..self.cols {
                        if self.get(alpha, x) == NONE {
                            self.define(alpha, x)?;
                        }
                    }
                }
            }
            alpha += 1;
        }
        Ok(())
    }

    /// Renumbers live cosets in shortlex breadth-first order from coset 0.
    pub fn close(self) -> Closed {
        let mut new_id = vec![NONE; self.forward.len()];
        let mut order = vec![0u32];
        let mut reps = vec![Word::identity()];
        new_id[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            for x in 0..self.cols {
                let d = self.get(c, x);
                debug_assert!(d != NONE && self.is_live(d));
                if new_id[d as usize] == NONE {
                    new_id[d as usize] = order.len() as u32;
                    order.push(d);
                    let letter = crate::words::Letter::from_column(x);
                    reps.push(reps[head].concat(&Word::letter(letter)));
                }
            }
            head += 1;
        }
        let mut action = Vec::with_capacity(order.len() * self.cols);
        for &c in &order {
            for x in 0..self.cols {
                action.push(new_id[self.get(c, x) as usize]);
            }
        }
        Closed { action, reps }
    }
}
