use super::EmbeddedCode;
use crate::code_geometry::Embedding;
use crate::error::{Error, Result};
use crate::pauli_algebra::{Letter, Pauli, StabilizerCode};

/// Rotated surface code on an `m x m` grid of data qubits, qubit
/// `row * m + col` at `(col, row)`.
///
/// Face `(i, j)` has corners `(i, j)` to `(i + 1, j + 1)`; interior faces
/// are X-type when `i + j` is even. Two-qubit faces complete the
/// checkerboard: X-type along the bottom and top, Z-type along the left and
/// right. There are `m^2 - 1` generators.
pub fn build_surface_code(m: usize) -> Result<EmbeddedCode> {
    if m < 2 {
        return Err(Error::contract(format!("surface code needs m >= 2 (m = {m})")));
    }
    let n = m * m;
    let mi = m as i64;
    let mut gens = Vec::with_capacity(n - 1);
    let mut face = |i: i64, j: i64, letter: Letter| {
        let mut p = Pauli::identity(n);
        for (c, r) in [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)] {
            if (0..mi).contains(&c) && (0..mi).contains(&r) {
                p.set((r * mi + c) as usize, letter);
            }
        }
        gens.push(p);
    };
    let is_x = |i: i64, j: i64| (i + j).rem_euclid(2) == 0;
    for j in 0..mi - 1 {
        for i in 0..mi - 1 {
            face(i, j, if is_x(i, j) { Letter::X } else { Letter::Z });
        }
    }
    for i in 0..mi - 1 {
        if is_x(i, -1) {
            face(i, -1, Letter::X);
        }
        if is_x(i, mi - 1) {
            face(i, mi - 1, Letter::X);
        }
    }
    for j in 0..mi - 1 {
        if !is_x(-1, j) {
            face(-1, j, Letter::Z);
        }
        if !is_x(mi - 1, j) {
            face(mi - 1, j, Letter::Z);
        }
    }
    let code = StabilizerCode::new(n, gens)?;
    EmbeddedCode::new(code, Embedding::lattice(m, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_geometry::extract_interactions;

    #[test]
    fn generator_count_and_dimension() {
        for m in 2..=7 {
            let s = build_surface_code(m).unwrap();
            assert_eq!(s.code.generators().len(), m * m - 1);
            assert_eq!(s.code.k(), 1);
            let longest = extract_interactions(&s.code, &s.embedding)
                .unwrap()
                .iter()
                .map(|i| i.length)
                .fold(0.0, f64::max);
            assert!(longest <= 2f64.sqrt() + 1e-12);
        }
        assert!(build_surface_code(1).is_err());
    }
}
