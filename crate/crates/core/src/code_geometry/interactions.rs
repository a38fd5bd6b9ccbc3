use serde::{Deserialize, Serialize};

use super::embedding::Embedding;
use super::{is_long, EPS};
use crate::error::{Error, Result};
use crate::pauli_algebra::{QubitSet, StabilizerCode};

/// A pair of qubits sharing the support of one declared generator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interaction {
    pub qubit_a: usize,
    pub qubit_b: usize,
    pub generator_index: usize,
    pub length: f64,
}

/// All pairs within each generator's support, generator by generator.
/// Pairs repeated across generators are kept once per generator.
pub fn extract_interactions(code: &StabilizerCode, emb: &Embedding) -> Result<Vec<Interaction>> {
    if emb.n() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: emb.n(),
        });
    }
    let mut out = Vec::new();
    for (g, gen) in code.generators().iter().enumerate() {
        let support = gen.support();
        for (i, &a) in support.iter().enumerate() {
            for &b in &support[i + 1..] {
                out.push(Interaction {
                    qubit_a: a,
                    qubit_b: b,
                    generator_index: g,
                    length: emb.distance(a, b),
                });
            }
        }
    }
    Ok(out)
}

/// `f_{>=l}` per qubit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InteractionCounter {
    pub threshold: f64,
    pub counts: Vec<usize>,
    pub total: usize,
}

impl InteractionCounter {
    /// Sum of counts over `v`.
    pub fn f(&self, v: &QubitSet) -> usize {
        v.iter().map(|q| self.counts[q]).sum()
    }

    pub fn is_bad_qubit(&self, q: usize) -> bool {
        self.counts[q] > 0
    }

    pub fn bad_qubits(&self) -> QubitSet {
        (0..self.counts.len()).filter(|&q| self.counts[q] > 0).collect()
    }
}

pub fn interaction_counter(interactions: &[Interaction], ell: f64, n: usize) -> Result<InteractionCounter> {
    if !(ell > 0.0) {
        return Err(Error::contract("threshold must be positive"));
    }
    let mut counts = vec![0; n];
    let mut total = 0;
    for it in interactions {
        if is_long(it.length, ell) {
            counts[it.qubit_a] += 1;
            counts[it.qubit_b] += 1;
            total += 1;
        }
    }
    Ok(InteractionCounter {
        threshold: ell,
        counts,
        total,
    })
}

/// Deduplicated neighbor lists of the interaction graph, split by whether
/// the pair has some interaction of length at least `ell`.
#[derive(Clone, Debug)]
pub struct InteractionGraph {
    pub neighbors: Vec<Vec<usize>>,
    pub bad_neighbors: Vec<Vec<usize>>,
    pub counter: InteractionCounter,
}

impl InteractionGraph {
    pub fn new(code: &StabilizerCode, emb: &Embedding, ell: f64) -> Result<Self> {
        let its = extract_interactions(code, emb)?;
        let counter = interaction_counter(&its, ell, code.n())?;
        let n = code.n();
        let mut neighbors = vec![Vec::new(); n];
        let mut bad_neighbors = vec![Vec::new(); n];
        for it in &its {
            neighbors[it.qubit_a].push(it.qubit_b);
            neighbors[it.qubit_b].push(it.qubit_a);
            if is_long(it.length, ell) {
                bad_neighbors[it.qubit_a].push(it.qubit_b);
                bad_neighbors[it.qubit_b].push(it.qubit_a);
            }
        }
        for list in neighbors.iter_mut().chain(bad_neighbors.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self {
            neighbors,
            bad_neighbors,
            counter,
        })
    }

    /// Qubits outside `u` that are joined to `u` by some interaction of
    /// length below `ell`; used for the good boundary of a region.
    pub fn good_boundary(&self, emb: &Embedding, u: &QubitSet) -> QubitSet {
        let ell = self.counter.threshold;
        u.iter()
            .flat_map(|q| self.neighbors[q].iter().copied().map(move |p| (q, p)))
            .filter(|&(q, p)| !u.contains(p) && !is_long(emb.distance(q, p), ell))
            .map(|(_, p)| p)
            .collect()
    }

    /// Qubits outside `u` with a long interaction into `u`.
    pub fn bad_partners(&self, u: &QubitSet) -> QubitSet {
        u.iter()
            .flat_map(|q| self.bad_neighbors[q].iter().copied())
            .filter(|&p| !u.contains(p))
            .collect()
    }
}

/// Histogram of interaction lengths over `edges`; bucket `i` holds lengths
/// in `[edges[i], edges[i + 1])`, the last bucket is open above.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
}

/// Edges `1, sqrt 2, 2, 4, 8, ...` up to the first edge above `max_length`.
pub fn default_edges(max_length: f64) -> Vec<f64> {
    let mut edges = vec![1.0, std::f64::consts::SQRT_2, 2.0];
    while *edges.last().unwrap() <= max_length {
        let next = edges.last().unwrap() * 2.0;
        edges.push(next);
    }
    edges
}

pub fn histogram(interactions: &[Interaction], edges: &[f64]) -> Histogram {
    let mut counts = vec![0; edges.len()];
    for it in interactions {
        // Lengths within tolerance of an edge count into the upper bucket.
        let b = edges.partition_point(|&e| e <= it.length + EPS);
        if b > 0 {
            counts[b - 1] += 1;
        } else {
            counts[0] += 1;
        }
    }
    Histogram {
        edges: edges.to_vec(),
        counts,
    }
}
