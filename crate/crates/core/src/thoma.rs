//! Indecomposable characters `chi^sigma_{alpha beta gamma}` of `Z2 wr S_inf`.
//!
//! A character is multiplicative over quasi-cycles. On a quasi-cycle `c·z`
//! of length `k` with sign sum `|z|`:
//!
//! ```text
//! k > 1:  sum_i a_i^k (-1)^{sigma(a_i)|z|} + (-1)^{k-1} sum_i b_i^k (-1)^{sigma(b_i)|z|}
//! k = 1:  g0 + g1 (-1)^z + sum_i a_i (-1)^{sigma(a_i) z} + sum_i b_i (-1)^{sigma(b_i) z}
//! ```
//!
//! with `g0 + g1 = 1 - sum a_i - sum b_i`.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::elements::{quasi_cycle_decompose, GroupElement, QuasiCycle};
use crate::error::{Error, Result};
use crate::partitions::{hook_dimension, MnCache, Partition};
use crate::rational::{format_rational, parse_rational, pm_one, pow, Rational};

/// One Thoma parameter together with its sign label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Param {
    pub value: Rational,
    pub sigma: bool,
}

impl Param {
    pub fn new(value: Rational, sigma: bool) -> Self {
        Self { value, sigma }
    }
}

/// Validated, normalized parameters of an indecomposable character.
///
/// Both parameter lists are sorted by decreasing value and then by sigma, so
/// derived equality is multiset equality of `(value, sigma)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawThomaSpec", into = "RawThomaSpec")]
pub struct ThomaSpec {
    alpha: Vec<Param>,
    beta: Vec<Param>,
    gamma0: Rational,
    gamma1: Rational,
}

/// Unvalidated parameters as they appear on the wire.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawThomaSpec {
    #[serde(default)]
    pub alpha: Vec<RawParam>,
    #[serde(default)]
    pub beta: Vec<RawParam>,
    pub gamma0: String,
    pub gamma1: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawParam {
    pub value: String,
    #[serde(default)]
    pub sigma: u8,
}

impl ThomaSpec {
    /// Checks positivity, the bound `sum alpha + sum beta <= 1` and the exact
    /// identity `gamma0 + gamma1 = 1 - sum alpha - sum beta`.
    pub fn new(
        mut alpha: Vec<Param>,
        mut beta: Vec<Param>,
        gamma0: Rational,
        gamma1: Rational,
    ) -> Result<Self> {
        for (name, list) in [("alpha", &alpha), ("beta", &beta)] {
            for p in list.iter() {
                if !p.value.is_positive() || p.value > Rational::one() {
                    return Err(Error::InvalidThoma(format!(
                        "{name} entry {} is outside (0, 1]",
                        format_rational(&p.value)
                    )));
                }
            }
        }
        if gamma0.is_negative() || gamma1.is_negative() {
            return Err(Error::InvalidThoma("gamma0 and gamma1 must be nonnegative".into()));
        }
        let mass: Rational = alpha.iter().chain(&beta).map(|p| &p.value).sum();
        if mass > Rational::one() {
            return Err(Error::InvalidThoma(format!(
                "sum of alpha and beta is {} > 1",
                format_rational(&mass)
            )));
        }
        let total = &mass + &gamma0 + &gamma1;
        if !total.is_one() {
            return Err(Error::InvalidThoma(format!(
                "alpha + beta + gamma0 + gamma1 sums to {}, not 1",
                format_rational(&total)
            )));
        }
        let order = |a: &Param, b: &Param| b.value.cmp(&a.value).then(a.sigma.cmp(&b.sigma));
        alpha.sort_by(order);
        beta.sort_by(order);
        Ok(Self {
            alpha,
            beta,
            gamma0,
            gamma1,
        })
    }

    pub fn from_raw(raw: &RawThomaSpec) -> Result<Self> {
        let params = |name: &str, list: &[RawParam]| -> Result<Vec<Param>> {
            list.iter()
                .map(|p| {
                    let sigma = match p.sigma {
                        0 => false,
                        1 => true,
                        s => {
                            return Err(Error::InvalidThoma(format!(
                                "{name} sigma must be 0 or 1, found {s}"
                            )))
                        }
                    };
                    Ok(Param::new(parse_rational(&p.value)?, sigma))
                })
                .collect()
        };
        Self::new(
            params("alpha", &raw.alpha)?,
            params("beta", &raw.beta)?,
            parse_rational(&raw.gamma0)?,
            parse_rational(&raw.gamma1)?,
        )
    }

    pub fn to_raw(&self) -> RawThomaSpec {
        let raw = |list: &[Param]| {
            list.iter()
                .map(|p| RawParam {
                    value: format_rational(&p.value),
                    sigma: p.sigma as u8,
                })
                .collect()
        };
        RawThomaSpec {
            alpha: raw(&self.alpha),
            beta: raw(&self.beta),
            gamma0: format_rational(&self.gamma0),
            gamma1: format_rational(&self.gamma1),
        }
    }

    pub fn alpha(&self) -> &[Param] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Param] {
        &self.beta
    }

    pub fn gamma0(&self) -> &Rational {
        &self.gamma0
    }

    pub fn gamma1(&self) -> &Rational {
        &self.gamma1
    }

    /// A single parameter equal to one: the character is one-dimensional.
    pub fn is_flat(&self) -> bool {
        let unit = |list: &[Param]| list.len() == 1 && list[0].value.is_one();
        (unit(&self.alpha) && self.beta.is_empty()) || (unit(&self.beta) && self.alpha.is_empty())
    }

    /// The character multiplied by `(-1)^{sum z}`: gammas swap and every
    /// sigma label flips.
    pub fn sign_twisted(&self) -> Self {
        let flip = |list: &[Param]| {
            list.iter()
                .map(|p| Param::new(p.value.clone(), !p.sigma))
                .collect()
        };
        Self::new(
            flip(&self.alpha),
            flip(&self.beta),
            self.gamma1.clone(),
            self.gamma0.clone(),
        )
        .expect("twisting preserves validity")
    }
}

impl TryFrom<RawThomaSpec> for ThomaSpec {
    type Error = Error;
    fn try_from(raw: RawThomaSpec) -> Result<Self> {
        Self::from_raw(&raw)
    }
}

impl From<ThomaSpec> for RawThomaSpec {
    fn from(spec: ThomaSpec) -> Self {
        spec.to_raw()
    }
}

pub fn validate_spec(raw: &RawThomaSpec) -> Result<ThomaSpec> {
    ThomaSpec::from_raw(raw)
}

pub fn quasi_cycle_value(spec: &ThomaSpec, qc: &QuasiCycle) -> Rational {
    let k = qc.len();
    if k == 1 {
        let z = qc.first_bit();
        let mut v = &spec.gamma0 + pm_one(z) * &spec.gamma1;
        for p in spec.alpha.iter().chain(&spec.beta) {
            v += pm_one(p.sigma && z) * &p.value;
        }
        return v;
    }
    let parity = qc.sign_sum();
    let mut v = Rational::zero();
    for p in &spec.alpha {
        v += pm_one(p.sigma && parity) * pow(&p.value, k);
    }
    let beta_sign = pm_one(k.is_multiple_of(2));
    for p in &spec.beta {
        v += &beta_sign * pm_one(p.sigma && parity) * pow(&p.value, k);
    }
    v
}

pub fn character_value(spec: &ThomaSpec, g: &GroupElement) -> Rational {
    quasi_cycle_decompose(g)
        .iter()
        .map(|qc| quasi_cycle_value(spec, qc))
        .product()
}

/// Cycle type of a permutation restricted to the invariant window
/// `[lo, hi]`, fixed points included.
pub(crate) fn window_cycle_type(g: &GroupElement, lo: usize, hi: usize) -> Partition {
    let mut lengths: Vec<usize> = g
        .perm
        .cycles()
        .into_iter()
        .filter(|c| c[0] >= lo && c[0] <= hi)
        .map(|c| c.len())
        .collect();
    let moved: usize = lengths.iter().sum();
    lengths.extend(std::iter::repeat_n(1, (hi + 1 - lo) - moved));
    Partition::from_unsorted(lengths)
}

/// The positive-definite function on `S_inf` that is the normalized
/// character `chi_lam / dim` on `S_n` times the Thoma character on the tail
/// `S_(n,inf)`, and zero off `S_n × S_(n,inf)`.
pub fn tau_lambda_value(lam: &Partition, alphabeta: &ThomaSpec, s: &GroupElement) -> Result<Rational> {
    if !s.signs.is_empty() {
        return Err(Error::UnexpectedSigns(s.to_string()));
    }
    let n = lam.weight();
    if !s.perm.preserves_prefix(n) {
        return Ok(Rational::zero());
    }
    let head = if n == 0 {
        Rational::one()
    } else {
        let mu = window_cycle_type(s, 1, n);
        let chi = MnCache::new().character(lam, &mu)?;
        Rational::new(chi.into(), (hook_dimension(lam) as i64).into())
    };
    let tail = GroupElement::from_perm(s.perm.restrict(|i| i > n));
    Ok(head * character_value(alphabeta, &tail))
}
