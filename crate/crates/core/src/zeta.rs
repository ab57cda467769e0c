//! F1-zeta functions in factored form.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::grothendieck::{ClassError, TreeProfile};
use crate::loosegraph::LooseGraph;
use crate::polyring::IntPolynomial;

/// `zeta(t) = prod_k (t - k)^(-a_k)`, stored as the nonzero `(k, a_k)` in
/// increasing `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredZeta {
    factors: Vec<(usize, BigInt)>,
}

impl FactoredZeta {
    /// Drops zero exponents and merges repeated roots.
    pub fn new(factors: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut merged: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (k, a) in factors {
            *merged.entry(k).or_default() += a;
        }
        Self {
            factors: merged.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
        }
    }

    pub fn factors(&self) -> &[(usize, BigInt)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `sum a_k L^k`.
    pub fn counting_polynomial(&self) -> IntPolynomial {
        self.factors
            .iter()
            .map(|(k, a)| IntPolynomial::monomial(a.clone(), *k))
            .sum()
    }

    pub fn format(&self, style: ZetaStyle) -> String {
        match style {
            ZetaStyle::Inverse => quotient(&self.factors, |a| a.clone()),
            ZetaStyle::Direct => quotient(&self.factors, |a| -a),
            ZetaStyle::FpDisplay => {
                if self.factors.is_empty() {
                    return "1".into();
                }
                let parts: Vec<String> = self
                    .factors
                    .iter()
                    .map(|(k, a)| {
                        let base = if *k == 0 {
                            "(1 - p^(-s))".to_string()
                        } else {
                            format!("(1 - p^({k}-s))")
                        };
                        let e = -a;
                        if e.is_one() {
                            base
                        } else {
                            format!("{base}^({e})")
                        }
                    })
                    .collect();
                parts.join("*")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZetaStyle {
    /// `1/zeta` as numerator over denominator.
    #[default]
    Inverse,
    /// `zeta` itself.
    Direct,
    /// The `F_p` form `prod (1 - p^(k-s))^(-a_k)`.
    FpDisplay,
}

fn linear(k: usize) -> String {
    if k == 0 {
        "t".into()
    } else {
        format!("(t-{k})")
    }
}

fn power(k: usize, e: &BigInt) -> String {
    if e.is_one() {
        linear(k)
    } else {
        format!("{}^{e}", linear(k))
    }
}

/// Renders `prod (t-k)^exp(a_k)` as `num/den`.
fn quotient(factors: &[(usize, BigInt)], exp: impl Fn(&BigInt) -> BigInt) -> String {
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (k, a) in factors {
        let e = exp(a);
        if e.is_positive() {
            num.push(power(*k, &e));
        } else {
            den.push(power(*k, &-e));
        }
    }
    let top = if num.is_empty() { "1".to_string() } else { num.join("*") };
    match den.len() {
        0 => top,
        1 => format!("{top}/{}", den[0]),
        _ => format!("{top}/({})", den.join("*")),
    }
}

impl fmt::Display for FactoredZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(ZetaStyle::Inverse))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Exponent {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct ZetaJson {
    factors: Vec<(usize, Exponent)>,
}

impl Serialize for FactoredZeta {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ZetaJson {
            factors: self
                .factors
                .iter()
                .map(|(k, a)| {
                    let e = a.to_i64().map_or_else(|| Exponent::Big(a.to_string()), Exponent::Small);
                    (*k, e)
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactoredZeta {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ZetaJson::deserialize(d)?;
        let mut factors = Vec::with_capacity(raw.factors.len());
        for (k, e) in raw.factors {
            let a = match e {
                Exponent::Small(v) => BigInt::from(v),
                Exponent::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            factors.push((k, a));
        }
        Ok(Self::new(factors))
    }
}

/// Factored F1-zeta function of a counting polynomial.
pub fn f1_zeta(p: &IntPolynomial) -> FactoredZeta {
    FactoredZeta::new(p.coeffs().iter().cloned().enumerate())
}

/// Number of closed points: the value at 1.
pub fn euler_characteristic(p: &IntPolynomial) -> BigInt {
    p.coefficient_sum()
}

/// Closed form for a loose tree with at least one edge:
/// `(t-1)^I / t^(E+I) * prod (t-d_i)^(-n_i)`.
pub fn tree_zeta_closed_form(t: &LooseGraph) -> Result<FactoredZeta, ClassError> {
    let profile = TreeProfile::of(t)?;
    if t.max_degree() == 0 {
        return Err(ClassError::NotATree("needs at least one edge"));
    }
    let i = BigInt::from(profile.inner);
    let mut factors = vec![(0, &i + profile.ends), (1, -i)];
    factors.extend(profile.degree_counts.iter().map(|(&d, &n)| (d, BigInt::from(n))));
    Ok(FactoredZeta::new(factors))
}
