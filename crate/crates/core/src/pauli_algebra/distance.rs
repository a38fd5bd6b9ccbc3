use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::code::StabilizerCode;
use super::pauli::{Letter, Pauli};
use crate::error::{Error, Result};

/// Above this many qubits the caller must pass an explicit weight cap.
pub const DEFAULT_CAP_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceResult {
    Distance { distance: usize, witness: String },
    LowerBound { lower_bound: usize },
}

impl DistanceResult {
    pub fn exact(&self) -> Option<usize> {
        match self {
            DistanceResult::Distance { distance, .. } => Some(*distance),
            DistanceResult::LowerBound { .. } => None,
        }
    }

    /// The distance if exact, else the certified lower bound.
    pub fn bound(&self) -> usize {
        match self {
            DistanceResult::Distance { distance, .. } => *distance,
            DistanceResult::LowerBound { lower_bound } => *lower_bound,
        }
    }
}

/// Per-qubit syndromes of X, Z and Y, packed over the generator list.
struct SyndromeTable {
    limbs: usize,
    // index: (q * 3 + letter) * limbs
    table: Vec<u64>,
}

const LETTERS: [Letter; 3] = [Letter::X, Letter::Z, Letter::Y];

impl SyndromeTable {
    fn new(code: &StabilizerCode) -> Self {
        let n = code.n();
        let m = code.generators().len();
        let limbs = m.div_ceil(64).max(1);
        let mut table = vec![0u64; n * 3 * limbs];
        for (g, gen) in code.generators().iter().enumerate() {
            let (word, bit) = (g / 64, 1u64 << (g % 64));
            for q in 0..n {
                // X on q anticommutes with g iff g has z at q, Z iff g has x.
                let sx = gen.z_bits().get(q);
                let sz = gen.x_bits().get(q);
                if sx {
                    table[(q * 3) * limbs + word] |= bit;
                }
                if sz {
                    table[(q * 3 + 1) * limbs + word] |= bit;
                }
                if sx ^ sz {
                    table[(q * 3 + 2) * limbs + word] |= bit;
                }
            }
        }
        Self { limbs, table }
    }

    #[inline]
    fn row(&self, q: usize, letter: usize) -> &[u64] {
        let at = (q * 3 + letter) * self.limbs;
        &self.table[at..at + self.limbs]
    }
}

struct Search<'a> {
    code: &'a StabilizerCode,
    table: &'a SyndromeTable,
    qubits: Vec<usize>,
    letters: Vec<usize>,
    acc: Vec<u64>,
}

impl Search<'_> {
    // Level `depth` holds the syndrome after choosing `depth` letters.
    fn level(&mut self, depth: usize) -> (&[u64], &mut [u64]) {
        let l = self.table.limbs;
        let (lo, hi) = self.acc.split_at_mut((depth + 1) * l);
        (&lo[depth * l..], &mut hi[..l])
    }

    fn place(&mut self, depth: usize, q: usize, letter: usize) {
        let table = self.table;
        let (prev, next) = self.level(depth);
        for ((n, p), t) in next.iter_mut().zip(prev).zip(table.row(q, letter)) {
            *n = p ^ t;
        }
        self.qubits[depth] = q;
        self.letters[depth] = letter;
    }

    fn leaf(&self, w: usize) -> Option<Pauli> {
        let l = self.table.limbs;
        if self.acc[w * l..(w + 1) * l].iter().any(|&x| x != 0) {
            return None;
        }
        let mut p = Pauli::identity(self.code.n());
        for i in 0..w {
            p.set(self.qubits[i], LETTERS[self.letters[i]]);
        }
        (!self.code.in_stabilizer(&p)).then_some(p)
    }

    // Chooses the remaining `w - depth` qubits below `bound`, largest first,
    // each level ascending so supports come out in colex order.
    fn descend(&mut self, depth: usize, w: usize, bound: usize) -> Option<Pauli> {
        if depth == w {
            return self.leaf(w);
        }
        let remaining = w - depth;
        for q in (remaining - 1)..bound {
            for letter in 0..3 {
                self.place(depth, q, letter);
                if let Some(p) = self.descend(depth + 1, w, q) {
                    return Some(p);
                }
            }
        }
        None
    }
}

/// First logical operator of weight exactly `w`, in colex support order
/// and X, Z, Y letter order. Deterministic under any thread count.
pub fn find_logical_of_weight(code: &StabilizerCode, w: usize) -> Option<Pauli> {
    let n = code.n();
    if w == 0 || w > n {
        return None;
    }
    let table = SyndromeTable::new(code);
    let limbs = table.limbs;
    (w - 1..n).into_par_iter().find_map_first(|top| {
        let mut s = Search {
            code,
            table: &table,
            qubits: vec![0; w],
            letters: vec![0; w],
            acc: vec![0; (w + 1) * limbs],
        };
        // Levels are ordered top-down: the largest qubit is chosen first.
        for letter in 0..3 {
            s.place(0, top, letter);
            if let Some(p) = s.descend(1, w, top) {
                return Some(p);
            }
        }
        None
    })
}

/// Lowest-weight logical operator with weight at most `max_weight`.
pub fn find_logical_up_to(code: &StabilizerCode, max_weight: usize) -> Option<Pauli> {
    (1..=max_weight.min(code.n())).find_map(|w| find_logical_of_weight(code, w))
}

/// Exhaustive distance up to `weight_cap` (defaults to `n`, which is only
/// allowed for `n <= 24`).
pub fn code_distance(code: &StabilizerCode, weight_cap: Option<usize>) -> Result<DistanceResult> {
    if code.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    let cap = match weight_cap {
        Some(0) => return Err(Error::contract("weight_cap must be at least 1")),
        Some(c) => c,
        None if code.n() > DEFAULT_CAP_LIMIT => {
            return Err(Error::contract(format!(
                "n = {} exceeds {DEFAULT_CAP_LIMIT}; pass an explicit weight cap",
                code.n()
            )))
        }
        None => code.n(),
    };
    Ok(match find_logical_up_to(code, cap) {
        Some(p) => DistanceResult::Distance {
            distance: p.weight(),
            witness: p.to_string(),
        },
        None => DistanceResult::LowerBound {
            lower_bound: cap.min(code.n()) + 1,
        },
    })
}
