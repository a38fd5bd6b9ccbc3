use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::gf2::BitVec;
use crate::error::{Error, Result};

/// Single-qubit Pauli letter, phase dropped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

/// Unsigned n-qubit Pauli operator in binary symplectic form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pauli {
    x: BitVec,
    z: BitVec,
}

impl Pauli {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        }
    }

    pub fn from_parts(x: BitVec, z: BitVec) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                got: z.len(),
            });
        }
        Ok(Self { x, z })
    }

    /// Single-letter operator `letter` on qubit `q`.
    pub fn single(n: usize, q: usize, letter: Letter) -> Self {
        let mut p = Self::identity(n);
        p.set(q, letter);
        p
    }

    /// Inverse of [`Pauli::symplectic`].
    pub fn from_symplectic(v: &BitVec) -> Self {
        let n = v.len() / 2;
        Self {
            x: v.slice(0, n),
            z: v.slice(n, n),
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn letter(&self, q: usize) -> Letter {
        Letter::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn set(&mut self, q: usize, letter: Letter) {
        let (x, z) = letter.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    fn support_bits(&self) -> BitVec {
        let mut s = self.x.clone();
        s.or_assign(&self.z);
        s
    }

    pub fn weight(&self) -> usize {
        self.support_bits().count_ones()
    }

    /// Qubits acted on non-trivially, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.support_bits().ones().collect()
    }

    /// The row vector `(x | z)` of length 2n.
    pub fn symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    /// Product up to phase.
    pub fn mul(&self, other: &Pauli) -> Result<Pauli> {
        check_len(self, other)?;
        let mut out = self.clone();
        out.x.xor_assign(&other.x);
        out.z.xor_assign(&other.z);
        Ok(out)
    }

    pub fn commutes(&self, other: &Pauli) -> Result<bool> {
        symplectic_commutes(self, other)
    }

    /// Embeds into `n_total` qubits, placing qubit `i` at `offset + i`.
    pub fn shifted(&self, n_total: usize, offset: usize) -> Pauli {
        let mut out = Pauli::identity(n_total);
        for q in self.support() {
            out.set(offset + q, self.letter(q));
        }
        out
    }

    pub(crate) fn anticommutes_unchecked(&self, other: &Pauli) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }
}

fn check_len(p: &Pauli, q: &Pauli) -> Result<()> {
    if p.n() != q.n() {
        return Err(Error::LengthMismatch {
            expected: p.n(),
            got: q.n(),
        });
    }
    Ok(())
}

/// True iff `x_p·z_q + z_p·x_q = 0 (mod 2)`.
pub fn symplectic_commutes(p: &Pauli, q: &Pauli) -> Result<bool> {
    check_len(p, q)?;
    Ok(!p.anticommutes_unchecked(q))
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n() {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

/// Error from parsing a Pauli string: the offending character and its
/// zero-based position within the string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePauliError {
    pub position: usize,
    pub found: char,
}

impl fmt::Display for ParsePauliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid Pauli character {:?} at position {}",
            self.found, self.position
        )
    }
}

impl std::error::Error for ParsePauliError {}

impl FromStr for Pauli {
    type Err = ParsePauliError;

    /// Accepts `I`, `X`, `Y`, `Z` with an optional leading sign, which is dropped.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (offset, body) = match s.chars().next() {
            Some('+') | Some('-') => (1, &s[1..]),
            _ => (0, s),
        };
        let mut letters = Vec::with_capacity(body.len());
        for (i, c) in body.chars().enumerate() {
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => {
                    return Err(ParsePauliError {
                        position: i + offset,
                        found: c,
                    })
                }
            }
        }
        let mut p = Pauli::identity(letters.len());
        for (q, l) in letters.into_iter().enumerate() {
            p.set(q, l);
        }
        Ok(p)
    }
}

/// Sorted, duplicate-free set of qubit indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct QubitSet {
    members: Vec<usize>,
}

impl QubitSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn all(n: usize) -> Self {
        Self {
            members: (0..n).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.members.binary_search(&q).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn is_subset(&self, other: &QubitSet) -> bool {
        let mut j = 0;
        for &a in &self.members {
            while j < other.members.len() && other.members[j] < a {
                j += 1;
            }
            if j == other.members.len() || other.members[j] != a {
                return false;
            }
        }
        true
    }

    pub fn is_disjoint(&self, other: &QubitSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn union(&self, other: &QubitSet) -> QubitSet {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                v.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                v.push(b[j]);
                j += 1;
            } else {
                v.push(a[i]);
                i += 1;
                j += 1;
            }
        }
        QubitSet { members: v }
    }

    pub fn intersection(&self, other: &QubitSet) -> QubitSet {
        QubitSet {
            members: self.iter().filter(|&q| other.contains(q)).collect(),
        }
    }

    pub fn difference(&self, other: &QubitSet) -> QubitSet {
        QubitSet {
            members: self.iter().filter(|&q| !other.contains(q)).collect(),
        }
    }

    pub fn to_bits(&self, n: usize) -> BitVec {
        BitVec::from_indices(n, self.iter())
    }

    /// Fails if any member is `>= n`.
    pub fn check_bounds(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(m) if m >= n => Err(Error::contract(format!(
                "qubit index {m} out of range for {n} qubits"
            ))),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for QubitSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        QubitSet { members }
    }
}

impl From<Vec<usize>> for QubitSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl From<QubitSet> for Vec<usize> {
    fn from(s: QubitSet) -> Self {
        s.members
    }
}

impl<'a> IntoIterator for &'a QubitSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}
