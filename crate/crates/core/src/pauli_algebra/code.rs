use super::gf2::{BinMatrix, BitVec, Echelon};
use super::pauli::{Pauli, QubitSet};
use crate::error::{Error, Result};

/// Stabilizer code given by a declared (possibly redundant) generator list.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<Pauli>,
    stabilizer: Echelon,
}

impl StabilizerCode {
    /// Validates lengths and pairwise commutation.
    pub fn new(n: usize, generators: Vec<Pauli>) -> Result<Self> {
        if n == 0 {
            return Err(Error::contract("a code needs at least one qubit"));
        }
        for g in &generators {
            if g.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: g.n(),
                });
            }
        }
        for (a, ga) in generators.iter().enumerate() {
            for (b, gb) in generators.iter().enumerate().skip(a + 1) {
                if ga.anticommutes_unchecked(gb) {
                    return Err(Error::NonCommuting { a, b });
                }
            }
        }
        let stabilizer = Echelon::from_rows(2 * n, generators.iter().map(Pauli::symplectic));
        Ok(Self {
            n,
            generators,
            stabilizer,
        })
    }

    /// Parses generator strings such as `"XZZXI"`.
    pub fn from_strs(n: usize, gens: &[&str]) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for (i, s) in gens.iter().enumerate() {
            let p: Pauli = s.parse().map_err(|e| {
                Error::contract(format!("generator {i}: {e}"))
            })?;
            out.push(p);
        }
        Self::new(n, out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Pauli] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.stabilizer.rank()
    }

    /// `n - rank` of the symplectic generator matrix.
    pub fn k(&self) -> usize {
        self.n - self.rank()
    }

    /// Whether `p` lies in the stabilizer group (up to phase).
    pub fn in_stabilizer(&self, p: &Pauli) -> bool {
        self.stabilizer.contains(&p.symplectic())
    }

    /// Whether `p` commutes with every declared generator.
    pub fn in_centralizer(&self, p: &Pauli) -> bool {
        self.generators.iter().all(|g| !g.anticommutes_unchecked(p))
    }

    pub fn is_logical(&self, p: &Pauli) -> bool {
        self.in_centralizer(p) && !self.in_stabilizer(p)
    }

    pub(crate) fn stabilizer_echelon(&self) -> &Echelon {
        &self.stabilizer
    }

    /// Rows `(z | x)` so that `M v = 0` for `v = (x | z)` means `v` commutes
    /// with every generator; columns restricted to `cols`.
    pub(crate) fn commutation_matrix(&self, cols: &[usize]) -> BinMatrix {
        let m = cols.len();
        let rows = self
            .generators
            .iter()
            .map(|g| {
                let mut r = BitVec::zeros(2 * m);
                for (j, &q) in cols.iter().enumerate() {
                    if g.z_bits().get(q) {
                        r.set(j, true);
                    }
                    if g.x_bits().get(q) {
                        r.set(m + j, true);
                    }
                }
                r
            })
            .collect();
        BinMatrix::from_rows(2 * m, rows)
    }

    /// Applies a qubit relabeling: qubit `q` moves to `perm[q]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n || QubitSet::from(perm.to_vec()) != QubitSet::all(self.n) {
            return Err(Error::contract("not a permutation of the qubits"));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut h = Pauli::identity(self.n);
                for q in g.support() {
                    h.set(perm[q], g.letter(q));
                }
                h
            })
            .collect();
        Self::new(self.n, gens)
    }
}

/// `k = n - rank`.
pub fn code_dimension(code: &StabilizerCode) -> usize {
    code.k()
}

/// Returns `[X̄_1, Z̄_1, X̄_2, Z̄_2, ...]`.
///
/// Candidates come from the centralizer nullspace in free-column order;
/// those independent modulo the stabilizer are kept, then paired by
/// symplectic Gram-Schmidt taking the first available partner each time.
pub fn logical_operator_basis(code: &StabilizerCode) -> Vec<Pauli> {
    let n = code.n();
    let all: Vec<usize> = (0..n).collect();
    let centralizer = code.commutation_matrix(&all).nullspace();
    let mut span = code.stabilizer_echelon().clone();
    let mut pool: Vec<BitVec> = Vec::new();
    for v in centralizer {
        if span.insert(v.clone()) {
            pool.push(v);
        }
    }
    debug_assert_eq!(pool.len(), 2 * code.k());

    let form = |a: &BitVec, b: &BitVec| -> bool {
        let pa = Pauli::from_symplectic(a);
        let pb = Pauli::from_symplectic(b);
        pa.anticommutes_unchecked(&pb)
    };

    let mut out = Vec::with_capacity(pool.len());
    while let Some(a) = (!pool.is_empty()).then(|| pool.remove(0)) {
        let j = pool
            .iter()
            .position(|b| form(&a, b))
            .expect("symplectic form is non-degenerate modulo the stabilizer");
        let b = pool.remove(j);
        for c in pool.iter_mut() {
            let cb = form(c, &b);
            let ca = form(c, &a);
            if cb {
                c.xor_assign(&a);
            }
            if ca {
                c.xor_assign(&b);
            }
        }
        out.push(Pauli::from_symplectic(&a));
        out.push(Pauli::from_symplectic(&b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_of_small_codes() {
        let c = StabilizerCode::new(1, vec![]).unwrap();
        assert_eq!(code_dimension(&c), 1);
        let c = StabilizerCode::from_strs(4, &["XXXX", "ZZZZ", "XXXX"]).unwrap();
        assert_eq!(c.k(), 2);
    }

    #[test]
    fn rejects_non_commuting_pair() {
        let err = StabilizerCode::from_strs(2, &["XX", "ZZ", "ZI"]).unwrap_err();
        assert!(matches!(err, Error::NonCommuting { a: 0, b: 2 }));
    }

    #[test]
    fn logicals_of_422() {
        let c = StabilizerCode::from_strs(4, &["XXXX", "ZZZZ"]).unwrap();
        let l = logical_operator_basis(&c);
        assert_eq!(l.len(), 4);
        for (i, a) in l.iter().enumerate() {
            assert!(c.is_logical(a));
            for (j, b) in l.iter().enumerate() {
                let expect_anti = i / 2 == j / 2 && i != j;
                assert_eq!(!a.commutes(b).unwrap(), expect_anti, "{i} {j}");
            }
        }
    }

    #[test]
    fn k_zero_has_no_logicals() {
        let c = StabilizerCode::from_strs(2, &["XX", "ZZ"]).unwrap();
        assert!(logical_operator_basis(&c).is_empty());
    }
}
