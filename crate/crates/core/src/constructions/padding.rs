use crate::code_geometry::Embedding;
use crate::error::{Error, Result};
use crate::pauli_algebra::{Letter, Pauli, StabilizerCode};

/// Appends `r` ancilla qubits, each fixed by its own single-qubit X
/// generator. Existing generators act as identity on the ancillas.
pub fn pad_code(code: &StabilizerCode, r: usize) -> Result<StabilizerCode> {
    if r == 0 {
        return Err(Error::contract("padding needs r >= 1"));
    }
    let n = code.n() + r;
    let mut gens: Vec<Pauli> = code.generators().iter().map(|g| g.shifted(n, 0)).collect();
    gens.extend((code.n()..n).map(|q| Pauli::single(n, q, Letter::X)));
    StabilizerCode::new(n, gens)
}

/// Places `r` extra points on a unit-spaced row one unit below the lowest
/// existing point.
pub fn pad_embedding(emb: &Embedding, r: usize) -> Result<Embedding> {
    let pts = emb.points();
    let x0 = pts.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
    let y0 = pts.iter().map(|p| p[1]).fold(f64::INFINITY, f64::min);
    let (x0, y0) = if pts.is_empty() { (0.0, 1.0) } else { (x0, y0) };
    let mut out = pts.to_vec();
    out.extend((0..r).map(|i| [x0 + i as f64, y0 - 1.0]));
    Embedding::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_grows_by_r() {
        let c = StabilizerCode::from_strs(4, &["XXXX", "ZZZZ"]).unwrap();
        let p = pad_code(&c, 3).unwrap();
        assert_eq!((p.n(), p.rank(), p.k()), (7, 5, 2));
        assert!(pad_code(&c, 0).is_err());
        let e = pad_embedding(&Embedding::lattice(2, 2), 3).unwrap();
        assert_eq!(e.n(), 7);
        assert_eq!(e.point(6), [2.0, -1.0]);
    }
}
