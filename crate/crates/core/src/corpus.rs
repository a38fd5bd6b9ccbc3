//! Small deterministic code families used by tests, benchmarks and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code_geometry::Embedding;
use crate::constructions::build_surface_code;
use crate::error::{Error, Result};
use crate::pauli_algebra::{Letter, Pauli, StabilizerCode};

#[derive(Clone, Debug)]
pub struct CorpusCode {
    pub name: String,
    pub code: StabilizerCode,
    pub embedding: Embedding,
}

impl CorpusCode {
    fn on_grid(name: String, code: StabilizerCode) -> Self {
        let n = code.n();
        let cols = (n as f64).sqrt().ceil() as usize;
        Self {
            name,
            code,
            embedding: Embedding::grid(n, cols),
        }
    }
}

/// `[[1, 1, 1]]`: one qubit, no generators.
pub fn trivial_code() -> StabilizerCode {
    StabilizerCode::new(1, vec![]).expect("valid")
}

/// `[[4, 2, 2]]` with generators `XXXX`, `ZZZZ`.
pub fn four_two_two() -> StabilizerCode {
    StabilizerCode::from_strs(4, &["XXXX", "ZZZZ"]).expect("valid")
}

/// Path cluster state: `Z_{i-1} X_i Z_{i+1}`; `k = 0`.
pub fn cluster_state(n: usize) -> Result<StabilizerCode> {
    let gens = (0..n)
        .map(|i| {
            let mut p = Pauli::single(n, i, Letter::X);
            if i > 0 {
                p.set(i - 1, Letter::Z);
            }
            if i + 1 < n {
                p.set(i + 1, Letter::Z);
            }
            p
        })
        .collect();
    StabilizerCode::new(n, gens)
}

/// Bit-flip repetition code `Z_i Z_{i+1}`; `[[n, 1, 1]]`.
pub fn repetition_code(n: usize) -> Result<StabilizerCode> {
    let gens = (0..n.saturating_sub(1))
        .map(|i| {
            let mut p = Pauli::single(n, i, Letter::Z);
            p.set(i + 1, Letter::Z);
            p
        })
        .collect();
    StabilizerCode::new(n, gens)
}

/// `n - k` independent commuting generators: `Z_0 .. Z_{n-k-1}` conjugated
/// by a random circuit of `H`, `S` and `CNOT` gates (phases dropped).
pub fn random_code(n: usize, k: usize, gates: usize, seed: u64) -> Result<StabilizerCode> {
    if k > n || n == 0 {
        return Err(Error::contract(format!("need 0 <= k <= n, n >= 1 (n = {n}, k = {k})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![vec![false; n]; n - k];
    let mut z: Vec<Vec<bool>> = (0..n - k).map(|i| (0..n).map(|q| q == i).collect()).collect();
    for _ in 0..gates {
        let kind = if n > 1 { rng.gen_range(0..3) } else { rng.gen_range(0..2) };
        match kind {
            0 => {
                let q = rng.gen_range(0..n);
                for (xr, zr) in x.iter_mut().zip(z.iter_mut()) {
                    std::mem::swap(&mut xr[q], &mut zr[q]);
                }
            }
            1 => {
                let q = rng.gen_range(0..n);
                for (xr, zr) in x.iter().zip(z.iter_mut()) {
                    zr[q] ^= xr[q];
                }
            }
            _ => {
                let c = rng.gen_range(0..n);
                let mut t = rng.gen_range(0..n - 1);
                if t >= c {
                    t += 1;
                }
                for (xr, zr) in x.iter_mut().zip(z.iter_mut()) {
                    xr[t] ^= xr[c];
                    zr[c] ^= zr[t];
                }
            }
        }
    }
    let gens = x
        .iter()
        .zip(&z)
        .map(|(xr, zr)| {
            let mut p = Pauli::identity(n);
            for q in 0..n {
                p.set(q, Letter::from_bits(xr[q], zr[q]));
            }
            p
        })
        .collect();
    StabilizerCode::new(n, gens)
}

/// The same code with the product of two generators appended, when it has
/// at least two generators.
pub fn with_redundant_generator(code: &StabilizerCode) -> Result<StabilizerCode> {
    let mut gens = code.generators().to_vec();
    if gens.len() >= 2 {
        let extra = gens[0].mul(&gens[1])?;
        gens.push(extra);
    }
    StabilizerCode::new(code.n(), gens)
}

/// Codes on at most `max_n` qubits: named small codes, surface codes and
/// `random_per_size` random codes for every `(n, k)` with `n <= max_n`.
/// Non-surface codes sit on a row-major grid with `ceil(sqrt n)` columns.
pub fn corpus(max_n: usize, random_per_size: usize, seed: u64) -> Vec<CorpusCode> {
    let mut out = Vec::new();
    let mut push_grid = |name: String, code: Result<StabilizerCode>| {
        if let Ok(c) = code {
            if c.n() <= max_n {
                out.push(CorpusCode::on_grid(name, c));
            }
        }
    };
    push_grid("trivial".into(), Ok(trivial_code()));
    push_grid("four_two_two".into(), Ok(four_two_two()));
    for n in 2..=max_n.min(12) {
        push_grid(format!("cluster_{n}"), cluster_state(n));
        push_grid(format!("repetition_{n}"), repetition_code(n));
    }
    let mut s = seed;
    for n in 1..=max_n {
        for k in 0..=n.min(3) {
            for _ in 0..random_per_size {
                s = s.wrapping_add(1);
                let Ok(code) = random_code(n, k, 4 * n + 4, s) else {
                    continue;
                };
                if n >= 4 && s.is_multiple_of(5) {
                    push_grid(format!("random_{n}_{k}_{s}_redundant"), with_redundant_generator(&code));
                }
                push_grid(format!("random_{n}_{k}_{s}"), Ok(code));
            }
        }
    }
    for m in 2..=5 {
        if m * m <= max_n {
            if let Ok(s) = build_surface_code(m) {
                out.push(CorpusCode {
                    name: format!("surface_{m}"),
                    code: s.code,
                    embedding: s.embedding,
                });
            }
        }
    }
    out
}
