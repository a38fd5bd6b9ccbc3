//! Brute-force reference implementations over Pauli strings.
//!
//! Nothing here touches the library's symplectic machinery: operators are
//! strings over `IXYZ`, products use the single-qubit table and the
//! stabilizer group is enumerated explicitly.

#![allow(dead_code)]

use std::collections::HashSet;

pub fn letter_product(a: u8, b: u8) -> u8 {
    match (a, b) {
        (b'I', c) | (c, b'I') => c,
        (x, y) if x == y => b'I',
        (b'X', b'Y') | (b'Y', b'X') => b'Z',
        (b'X', b'Z') | (b'Z', b'X') => b'Y',
        (b'Y', b'Z') | (b'Z', b'Y') => b'X',
        _ => panic!("bad letter"),
    }
}

/// Product up to phase.
pub fn product(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| letter_product(x, y)).collect()
}

pub fn commute(a: &[u8], b: &[u8]) -> bool {
    let clash = a
        .iter()
        .zip(b)
        .filter(|(&x, &y)| x != b'I' && y != b'I' && x != y)
        .count();
    clash % 2 == 0
}

pub fn group(gens: &[Vec<u8>], n: usize) -> HashSet<Vec<u8>> {
    let mut g = HashSet::new();
    g.insert(vec![b'I'; n]);
    for s in gens {
        let new: Vec<Vec<u8>> = g.iter().map(|e| product(e, s)).collect();
        g.extend(new);
    }
    g
}

pub struct Oracle {
    pub n: usize,
    pub gens: Vec<Vec<u8>>,
    pub group: HashSet<Vec<u8>>,
}

impl Oracle {
    pub fn new(n: usize, gens: Vec<String>) -> Self {
        let gens: Vec<Vec<u8>> = gens.into_iter().map(String::into_bytes).collect();
        let group = group(&gens, n);
        Self { n, gens, group }
    }

    pub fn k(&self) -> usize {
        let r = self.group.len().trailing_zeros() as usize;
        self.n - r
    }

    pub fn is_logical(&self, p: &[u8]) -> bool {
        self.gens.iter().all(|g| commute(g, p)) && !self.group.contains(p)
    }

    /// Every one of the `4^|u|` operators supported on `u`.
    pub fn correctable(&self, u: &[usize]) -> bool {
        let total = 1usize << (2 * u.len());
        let mut p = vec![b'I'; self.n];
        for code in 0..total {
            for (j, &q) in u.iter().enumerate() {
                p[q] = b"IXYZ"[(code >> (2 * j)) & 3];
            }
            if self.is_logical(&p) {
                return false;
            }
        }
        true
    }

    /// Smallest weight of a logical operator, searching weights up to `cap`.
    pub fn distance(&self, cap: usize) -> Option<usize> {
        (1..=cap.min(self.n)).find(|&w| {
            let mut found = false;
            for_each_subset(self.n, w, &mut |s| {
                if !found && !self.correctable(s) {
                    found = true;
                }
            });
            found
        })
    }
}

pub fn for_each_subset(n: usize, w: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, w: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == w {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, w, cur, f);
            cur.pop();
        }
    }
    go(0, n, w, &mut Vec::new(), f);
}

/// Rank over GF(2) of 0/1 rows by textbook elimination.
pub fn rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] == 1 {
                let pivot = rows[r].clone();
                for (a, b) in rows[i].iter_mut().zip(pivot) {
                    *a ^= b;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn symplectic_rows(gens: &[String]) -> Vec<Vec<u8>> {
    gens.iter()
        .map(|g| {
            let x = g.bytes().map(|c| u8::from(c == b'X' || c == b'Y'));
            let z = g.bytes().map(|c| u8::from(c == b'Z' || c == b'Y'));
            x.chain(z).collect()
        })
        .collect()
}

/// Qubit pairs sharing a generator, with the smallest such generator index.
pub fn interaction_pairs(gens: &[String]) -> Vec<(usize, usize, usize)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        let supp: Vec<usize> = g.bytes().enumerate().filter(|(_, c)| *c != b'I').map(|(i, _)| i).collect();
        for (i, &a) in supp.iter().enumerate() {
            for &b in &supp[i + 1..] {
                if seen.insert((a, b)) {
                    out.push((a, b, gi));
                }
            }
        }
    }
    out.sort();
    out
}
