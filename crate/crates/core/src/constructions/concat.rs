use crate::error::{Error, Result};
use crate::pauli_algebra::{logical_operator_basis, Letter, Pauli, StabilizerCode};

/// Concatenation of `inner` `[[n1, k1, d1]]` into every qubit of `outer`
/// `[[n2, k2, d2]]`, giving `[[n1 n2, k1 k2, >= d1 d2]]`.
///
/// Outer qubit `i` becomes inner block `i` on qubits `i n1 .. (i + 1) n1`.
/// Generators come block-major first (every inner generator on every
/// block), then copy-major: for each inner logical qubit `j`, every outer
/// generator with its single-qubit Paulis replaced by the `j`-th logical
/// operators of the blocks (`Y` becomes `X̄ Z̄`).
pub fn concatenate(inner: &StabilizerCode, outer: &StabilizerCode) -> Result<StabilizerCode> {
    let k1 = inner.k();
    if k1 == 0 {
        return Err(Error::contract("inner code encodes no logical qubits"));
    }
    let (n1, n2) = (inner.n(), outer.n());
    let n = n1 * n2;
    let basis = logical_operator_basis(inner);
    let mut gens = Vec::with_capacity(n2 * inner.generators().len() + k1 * outer.generators().len());
    for block in 0..n2 {
        for g in inner.generators() {
            gens.push(g.shifted(n, block * n1));
        }
    }
    for j in 0..k1 {
        let (xj, zj) = (&basis[2 * j], &basis[2 * j + 1]);
        let yj = xj.mul(zj)?;
        for m in outer.generators() {
            let mut p = Pauli::identity(n);
            for i in m.support() {
                let op = match m.letter(i) {
                    Letter::X => xj,
                    Letter::Z => zj,
                    Letter::Y => &yj,
                    Letter::I => unreachable!("support excludes identity"),
                };
                p = p.mul(&op.shifted(n, i * n1))?;
            }
            gens.push(p);
        }
    }
    StabilizerCode::new(n, gens)
}

/// `copies` disjoint copies of `code`, copy `c` on qubits `c n .. (c + 1) n`.
pub fn direct_sum(code: &StabilizerCode, copies: usize) -> Result<StabilizerCode> {
    if copies == 0 {
        return Err(Error::contract("direct sum needs at least one copy"));
    }
    let n = code.n() * copies;
    let gens = (0..copies)
        .flat_map(|c| code.generators().iter().map(move |g| g.shifted(n, c * code.n())))
        .collect();
    StabilizerCode::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_inner_is_identity() {
        let inner = StabilizerCode::new(1, vec![]).unwrap();
        let outer = StabilizerCode::from_strs(4, &["XXXX", "ZZZZ"]).unwrap();
        let c = concatenate(&inner, &outer).unwrap();
        assert_eq!(c.generators(), outer.generators());
    }

    #[test]
    fn trivial_outer_returns_inner() {
        let inner = StabilizerCode::from_strs(4, &["XXXX", "ZZZZ"]).unwrap();
        let outer = StabilizerCode::new(1, vec![]).unwrap();
        let c = concatenate(&inner, &outer).unwrap();
        assert_eq!(c.generators(), inner.generators());
        assert_eq!(c.k(), 2);
    }

    #[test]
    fn zero_dimensional_inner_rejected() {
        let inner = StabilizerCode::from_strs(1, &["Z"]).unwrap();
        let outer = StabilizerCode::new(1, vec![]).unwrap();
        assert!(concatenate(&inner, &outer).is_err());
    }

    #[test]
    fn direct_sum_multiplies_dimension() {
        let c = StabilizerCode::from_strs(4, &["XXXX", "ZZZZ"]).unwrap();
        let s = direct_sum(&c, 3).unwrap();
        assert_eq!((s.n(), s.k()), (12, 6));
    }
}
