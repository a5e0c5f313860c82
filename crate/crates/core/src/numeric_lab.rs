//! Finite truncations of two concrete representations of `B`, used as
//! numerical witnesses for (non-)stability.
//!
//! * the permutation-with-signs action on `l^2(N)`, applied literally to
//!   finitely supported vectors;
//! * the Bernoulli action on `L^2({0,1}^N, nu^N)`, truncated to `{0,1}^m` and
//!   summed exactly.

use std::collections::BTreeMap;

use num::{One, Signed};

use crate::elements::{GroupElement, Permutation, SignVector};
use crate::error::{Error, Result};
use crate::rational::{format_rational, int, pow, Rational};

/// Largest truncation for the Bernoulli lab; `2^m` configurations are summed.
pub const CONFIG_GUARD: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliParam {
    p: Rational,
}

impl BernoulliParam {
    pub fn new(p: Rational) -> Result<Self> {
        if !p.is_positive() || p >= Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "p = {} must lie strictly between 0 and 1",
                format_rational(&p)
            )));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> Rational {
        Rational::one() - &self.p
    }
}

/// A finitely supported vector of `l^2(N)`.
pub type SparseVector = BTreeMap<usize, Rational>;

/// `T(sz) = T(s) T(z)` with `(T(s)f)(x) = f(s^-1 x)` and
/// `(T(z)f)(x) = (-1)^(z_x) f(x)`.
pub fn apply_t(g: &GroupElement, f: &SparseVector) -> SparseVector {
    f.iter()
        .map(|(&x, v)| {
            let v = if g.signs.contains(x) { -v } else { v.clone() };
            (g.perm.apply(x), v)
        })
        .collect()
}

pub fn inner(f: &SparseVector, h: &SparseVector) -> Rational {
    f.iter()
        .filter_map(|(x, v)| h.get(x).map(|w| v * w))
        .sum()
}

pub fn basis_vector(j: usize) -> SparseVector {
    BTreeMap::from([(j, Rational::one())])
}

/// `<T(1^[1,m]) e_j, e_j>`.
pub fn example1_pairing(m: usize, f_index: usize) -> Rational {
    let z = GroupElement::from_signs(1..=m);
    let e = basis_vector(f_index);
    inner(&apply_t(&z, &e), &e)
}

/// Functions on `{0,1}^m`; bit `i-1` of the index is the coordinate `x_i`.
/// Starting from the constant function every operator below only permutes
/// and negates values, so integers suffice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigFunction {
    m: usize,
    values: Vec<i64>,
}

impl ConfigFunction {
    pub fn constant_one(m: usize) -> Result<Self> {
        if m > CONFIG_GUARD {
            return Err(Error::Guard {
                what: "truncation length",
                value: m,
                limit: CONFIG_GUARD,
            });
        }
        Ok(Self {
            m,
            values: vec![1; 1 << m],
        })
    }

    /// `Pi(z) eta (x) = (-1)^(sum x_i z_i) eta(x)`.
    fn apply_signs(&mut self, z: &SignVector) {
        let mask: usize = z.iter().map(|i| 1usize << (i - 1)).sum();
        for (x, v) in self.values.iter_mut().enumerate() {
            if (x & mask).count_ones() % 2 == 1 {
                *v = -*v;
            }
        }
    }

    /// `Pi(s) eta (x) = eta(s^-1 . x)` where `(s^-1 . x)_i = x_(s(i))`.
    fn apply_perm(&mut self, s: &Permutation) {
        let moved: Vec<(usize, usize)> = s.moved_points().collect();
        let old = self.values.clone();
        for (x, v) in self.values.iter_mut().enumerate() {
            let mut y = x;
            for &(i, si) in &moved {
                let bit = (x >> (si - 1)) & 1;
                y = (y & !(1 << (i - 1))) | (bit << (i - 1));
            }
            *v = old[y];
        }
    }

    /// `Pi(sz) = Pi(s) Pi(z)`.
    pub fn apply(&mut self, g: &GroupElement) -> Result<()> {
        if g.max_support() > self.m {
            return Err(Error::SupportOutOfRange {
                element: g.to_string(),
                n: self.m,
            });
        }
        self.apply_signs(&g.signs);
        self.apply_perm(&g.perm);
        Ok(())
    }

    /// `<eta, 1>` under `nu^m`, where `nu(0) = p` and `nu(1) = q`.
    pub fn expectation(&self, p: &BernoulliParam) -> Rational {
        let mut by_ones = vec![0i64; self.m + 1];
        for (x, v) in self.values.iter().enumerate() {
            by_ones[x.count_ones() as usize] += v;
        }
        let q = p.q();
        by_ones
            .iter()
            .enumerate()
            .filter(|(_, s)| **s != 0)
            .map(|(ones, s)| int(*s) * pow(p.p(), self.m - ones) * pow(&q, ones))
            .sum()
    }

    pub fn value(&self, x: usize) -> i64 {
        self.values[x]
    }
}

/// `<Pi(w_1) Pi(w_2) ... Pi(w_r) 1, 1>` on `{0,1}^m`.
pub fn example3_word_state(p: &BernoulliParam, word: &[GroupElement], m: usize) -> Result<Rational> {
    let mut eta = ConfigFunction::constant_one(m)?;
    for g in word.iter().rev() {
        eta.apply(g)?;
    }
    Ok(eta.expectation(p))
}

/// `<Pi(g) 1, 1>` summed over `{0,1}^m`, cross-checked at `m + 1`.
pub fn example3_state(p: &BernoulliParam, g: &GroupElement, m: usize) -> Result<Rational> {
    if m > CONFIG_GUARD {
        return Err(Error::Guard {
            what: "truncation length",
            value: m,
            limit: CONFIG_GUARD,
        });
    }
    let value = example3_word_state(p, std::slice::from_ref(g), m)?;
    let next = example3_word_state_unguarded(p, g, m + 1);
    assert_eq!(value, next, "truncation changed the state of {g}");
    Ok(value)
}

fn example3_word_state_unguarded(p: &BernoulliParam, g: &GroupElement, m: usize) -> Rational {
    let mut eta = ConfigFunction {
        m,
        values: vec![1; 1 << m],
    };
    eta.apply(g).expect("support checked at the smaller truncation");
    eta.expectation(p)
}

/// `state(1^[1,n] (n n+1) 1^[1,n]) - state((n n+1))`, evaluated on
/// `{0,1}^(n+1)`.
pub fn example3_defect(p: &BernoulliParam, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let (z, t) = defect_elements(n);
    let conjugated = z.multiply(&t).multiply(&z);
    let m = n + 1;
    Ok(example3_state(p, &conjugated, m)? - example3_state(p, &t, m)?)
}

/// `1^[1,n]` and the transposition `(n n+1)`.
pub fn defect_elements(n: usize) -> (GroupElement, GroupElement) {
    let z = GroupElement::from_signs(1..=n);
    let t = GroupElement::from_perm(Permutation::transposition(n, n + 1).expect("distinct points"));
    (z, t)
}

/// `(m, <T(1^[1,m]) e_j, e_j>)` for `m = 0..=max_m`.
pub fn example1_series(f_index: usize, max_m: usize) -> Vec<(usize, Rational)> {
    (0..=max_m).map(|m| (m, example1_pairing(m, f_index))).collect()
}

/// `(n, defect_n)` for `n = 1..=max_n`.
pub fn example3_defect_series(p: &BernoulliParam, max_n: usize) -> Result<Vec<(usize, Rational)>> {
    (1..=max_n).map(|n| Ok((n, example3_defect(p, n)?))).collect()
}

/// Closed form of the defect, kept separate from the summation path.
pub fn defect_closed_form(p: &BernoulliParam) -> Rational {
    let d = p.p() - p.q();
    &d * &d - Rational::one()
}
