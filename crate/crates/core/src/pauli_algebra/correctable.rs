use serde::{Deserialize, Serialize};

use super::code::StabilizerCode;
use super::pauli::{Letter, Pauli, QubitSet};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correctability {
    pub correctable: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// Logical operator supported inside `u`, if any.
///
/// The operators supported on `u` that commute with every generator form
/// the nullspace of the generator rows restricted to `u`. `u` is
/// correctable iff that whole space sits inside the stabilizer group, so
/// it suffices to test each basis vector. Among failing basis vectors the
/// lowest-weight one is returned.
pub fn logical_supported_on(code: &StabilizerCode, u: &QubitSet) -> Result<Option<Pauli>> {
    u.check_bounds(code.n())?;
    let cols = u.members();
    let m = cols.len();
    let basis = code.commutation_matrix(cols).nullspace();
    let mut best: Option<Pauli> = None;
    for v in basis {
        let mut p = Pauli::identity(code.n());
        for (j, &q) in cols.iter().enumerate() {
            let (x, z) = (v.get(j), v.get(m + j));
            p.set(q, Letter::from_bits(x, z));
        }
        if !code.in_stabilizer(&p) && best.as_ref().is_none_or(|b| p.weight() < b.weight()) {
            best = Some(p);
        }
    }
    Ok(best)
}

pub fn is_correctable(code: &StabilizerCode, u: &QubitSet) -> Result<Correctability> {
    let w = logical_supported_on(code, u)?;
    Ok(Correctability {
        correctable: w.is_none(),
        witness: w.map(|p| p.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sets_of_422() {
        let c = StabilizerCode::from_strs(4, &["XXXX", "ZZZZ"]).unwrap();
        assert!(is_correctable(&c, &QubitSet::from(vec![2])).unwrap().correctable);
        let r = is_correctable(&c, &QubitSet::from(vec![0, 1])).unwrap();
        assert!(!r.correctable);
        let w: Pauli = r.witness.unwrap().parse().unwrap();
        assert!(c.is_logical(&w));
        assert!(w.support().iter().all(|q| *q < 2));
    }

    #[test]
    fn whole_code_not_correctable_when_k_positive() {
        let c = StabilizerCode::from_strs(3, &["ZZI", "IZZ"]).unwrap();
        assert!(!is_correctable(&c, &QubitSet::all(3)).unwrap().correctable);
        let s = StabilizerCode::from_strs(2, &["XX", "ZZ"]).unwrap();
        assert!(is_correctable(&s, &QubitSet::all(2)).unwrap().correctable);
    }

    #[test]
    fn empty_set_is_correctable() {
        let c = StabilizerCode::new(1, vec![]).unwrap();
        assert!(is_correctable(&c, &QubitSet::new()).unwrap().correctable);
    }
}
