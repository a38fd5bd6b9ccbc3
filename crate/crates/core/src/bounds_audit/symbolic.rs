use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

type Q = Ratio<i64>;

fn q(a: i64, b: i64) -> Q {
    Q::new(a, b)
}

/// Upper end of the range of the free parameter `ε` (exclusive; the lower
/// end `0` is exclusive too).
pub fn epsilon_max() -> Q {
    q(3, 10)
}

/// Growth `n^(power + eps * ε) (log n)^log`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Exponent {
    pub power: Q,
    pub eps: Q,
    pub log: Q,
}

impl Exponent {
    pub fn new(power: Q, eps: Q, log: Q) -> Self {
        Self { power, eps, log }
    }

    pub fn constant() -> Self {
        Self::power(q(0, 1))
    }

    pub fn power(p: Q) -> Self {
        Self::new(p, q(0, 1), q(0, 1))
    }

    pub fn log(l: Q) -> Self {
        Self::new(q(0, 1), q(0, 1), l)
    }

    pub fn add(self, o: Self) -> Self {
        Self::new(self.power + o.power, self.eps + o.eps, self.log + o.log)
    }

    pub fn sub(self, o: Self) -> Self {
        self.add(o.scale(q(-1, 1)))
    }

    pub fn scale(self, s: Q) -> Self {
        Self::new(self.power * s, self.eps * s, self.log * s)
    }

    /// The polynomial part at a given `ε`, as a float.
    pub fn at(&self, eps: f64) -> f64 {
        let f = |r: Q| *r.numer() as f64 / *r.denom() as f64;
        f(self.power) + f(self.eps) * eps
    }

    // Sign of the polynomial part over the open ε range, when constant.
    fn sign(&self) -> Option<Ordering> {
        let zero = q(0, 1);
        let lo = self.power;
        let hi = self.power + self.eps * epsilon_max();
        match (lo.cmp(&zero), hi.cmp(&zero)) {
            (Ordering::Equal, Ordering::Equal) => Some(Ordering::Equal),
            (a, b) if a != Ordering::Less && b != Ordering::Less => Some(Ordering::Greater),
            (a, b) if a != Ordering::Greater && b != Ordering::Greater => Some(Ordering::Less),
            _ => None,
        }
    }

    /// Asymptotic comparison over the whole ε range, logs breaking ties.
    pub fn compare(&self, o: &Self) -> Option<Ordering> {
        let diff = self.sub(*o);
        match diff.sign()? {
            Ordering::Equal => Some(diff.log.cmp(&q(0, 1))),
            s => Some(s),
        }
    }

    pub fn max(self, o: Self) -> Self {
        match self.compare(&o) {
            Some(Ordering::Less) => o,
            _ => self,
        }
    }
}

fn frac(r: Q) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = q(0, 1);
        let mut parts = Vec::new();
        if self.power != zero || self.eps != zero {
            let e = match (self.power == zero, self.eps == zero) {
                (_, true) => frac(self.power),
                (true, false) if self.eps == q(1, 1) => "ε".to_string(),
                (true, false) if *self.eps.numer() == 1 => format!("ε/{}", self.eps.denom()),
                (true, false) => format!("{}ε", frac(self.eps)),
                (false, false) => format!("{}+{}ε", frac(self.power), frac(self.eps)),
            };
            parts.push(if e == "1" { "n".to_string() } else { format!("n^{{{e}}}") });
        }
        if self.log != zero {
            parts.push(match frac(self.log).as_str() {
                "1" => "log n".to_string(),
                "1/2" => "sqrt(log n)".to_string(),
                l => format!("(log n)^{{{l}}}"),
            });
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Whether a family's growth is exact or only an upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Theta,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Growth {
    pub exp: Exponent,
    pub bound: Bound,
}

impl Growth {
    pub fn theta(exp: Exponent) -> Self {
        Self { exp, bound: Bound::Theta }
    }

    pub fn upper(exp: Exponent) -> Self {
        Self { exp, bound: Bound::Upper }
    }

    // Smallest admissible growth (an upper bound admits constants).
    fn least(&self) -> Exponent {
        match self.bound {
            Bound::Theta => self.exp,
            Bound::Upper => Exponent::constant(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Family {
    pub name: String,
    pub k: Growth,
    pub d: Growth,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StackedVerdict {
    /// The theorem applies for every admissible growth.
    pub above_threshold: bool,
    /// `d <= n^(2/3)` fails for every admissible growth.
    pub d_bound_violated: bool,
    /// `k d^2 max(k, d)^2 <= n^3` fails for every admissible growth.
    pub combined_violated: bool,
    pub ruled_out: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub family: String,
    pub k: Exponent,
    pub d: Exponent,
    /// `None` below the threshold.
    pub count: Option<Exponent>,
    pub ell: Option<Exponent>,
    pub stacked: StackedVerdict,
}

fn threshold(k: Exponent, d: Exponent) -> Exponent {
    k.add(d.scale(q(2, 1))).sub(Exponent::power(q(1, 1)))
}

fn strictly_above(t: &Exponent) -> bool {
    t.compare(&Exponent::constant()) == Some(Ordering::Greater)
}

// Polynomial part positive over the whole ε range; logs are not compared.
fn violated(e: &Exponent) -> bool {
    e.sign() == Some(Ordering::Greater)
}

/// Stacked-architecture verdict for a family. A profile is ruled out only
/// if every admissible growth violates a constraint; the constraints are
/// monotone in `k` and `d`, so the least admissible growth decides.
pub fn stacked_verdict(k: &Growth, d: &Growth) -> StackedVerdict {
    let (a, b) = (k.least(), d.least());
    let above = strictly_above(&threshold(a, b));
    let d_expr = b.scale(q(3, 1)).sub(Exponent::power(q(2, 1)));
    let m = a.max(b);
    let combined = a
        .add(b.scale(q(2, 1)))
        .add(m.scale(q(2, 1)))
        .sub(Exponent::power(q(3, 1)));
    let d_bad = above && violated(&d_expr);
    let c_bad = above && violated(&combined);
    StackedVerdict {
        above_threshold: above,
        d_bound_violated: d_bad,
        combined_violated: c_bad,
        ruled_out: d_bad || c_bad,
    }
}

pub fn family_row(f: &Family) -> FamilyRow {
    let (k, d) = (f.k.exp, f.d.exp);
    let t = threshold(k, d);
    let above = strictly_above(&t);
    let ell = d.sub(Exponent::power(q(1, 2))).max(t.scale(q(1, 4)));
    FamilyRow {
        family: f.name.clone(),
        k,
        d,
        count: above.then(|| k.max(d)),
        ell: above.then_some(ell),
        stacked: stacked_verdict(&f.k, &f.d),
    }
}

pub fn families() -> Vec<Family> {
    let p = |a, b| Exponent::power(q(a, b));
    let fam = |name: &str, k, d| Family {
        name: name.into(),
        k,
        d,
    };
    vec![
        fam("Surface code", Growth::theta(p(0, 1)), Growth::theta(p(1, 2))),
        fam("2D hyperbolic codes", Growth::theta(p(1, 1)), Growth::upper(Exponent::log(q(1, 1)))),
        fam(
            "4D hyperbolic codes",
            Growth::theta(p(1, 1)),
            Growth::upper(Exponent::new(q(0, 1), q(1, 1), q(0, 1))),
        ),
        fam("Hypergraph product codes", Growth::theta(p(1, 1)), Growth::theta(p(1, 2))),
        fam("Fiber bundle codes", Growth::theta(p(3, 5)), Growth::theta(p(3, 5))),
        fam("Balanced product codes", Growth::theta(p(4, 5)), Growth::theta(p(3, 5))),
        fam("Codes from HDX", Growth::theta(p(1, 2)), Growth::theta(p(1, 2))),
        fam("Good codes", Growth::theta(p(1, 1)), Growth::theta(p(1, 1))),
    ]
}

/// The interaction-count and length columns for the well-known families.
pub fn family_table() -> Vec<FamilyRow> {
    families().iter().map(family_row).collect()
}
