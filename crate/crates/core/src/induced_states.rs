//! States of representations of `B` induced from finite-type factor
//! representations of `B_inf^(n) = B_n · B_(n,inf)`.
//!
//! The inducing representation is `Irr(lambda0, lambda1) ⊗ pi^sigma_{alpha beta gamma}`.
//! Its normalized trace factorizes over `B_n × B_(n,inf)`, and the state of
//! the canonical cyclic vector of the induced representation is that trace
//! on `B_inf^(n)` and zero elsewhere.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bn_irreps::bn_normalized_character;
use crate::elements::{shift_conjugate, split_in_level, GroupElement, Permutation};
use crate::error::{Error, Result};
use crate::linalg::{exact_psd, PsdOutcome, RatMatrix};
use crate::partitions::{Bipartition, Partition};
use crate::rational::Rational;
use crate::thoma::{character_value, ThomaSpec};

/// Exact Gram tests are limited to this many elements.
pub const EXACT_GRAM_LIMIT: usize = 16;
/// Smallest eigenvalue still accepted by the floating-point Gram test.
pub const APPROX_EIGEN_TOLERANCE: f64 = -1e-9;

/// A finite-type factor representation `Irr(lambda0, lambda1) ⊗ pi_thoma`
/// of `B_inf^(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRepSpec", into = "RawRepSpec")]
pub struct RepSpec {
    n: usize,
    bp: Bipartition,
    thoma: ThomaSpec,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawRepSpec {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub lambda0: Partition,
    pub lambda1: Partition,
    pub thoma: ThomaSpec,
}

impl RepSpec {
    pub fn new(n: usize, bp: Bipartition, thoma: ThomaSpec) -> Result<Self> {
        if bp.n() != n {
            return Err(Error::InvalidRepSpec(format!(
                "bipartition {bp} has weight {} but n = {n}",
                bp.n()
            )));
        }
        Ok(Self { n, bp, thoma })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.bp.k()
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bp
    }

    pub fn thoma(&self) -> &ThomaSpec {
        &self.thoma
    }
}

impl TryFrom<RawRepSpec> for RepSpec {
    type Error = Error;
    fn try_from(raw: RawRepSpec) -> Result<Self> {
        let k = raw.lambda0.weight();
        if let Some(given) = raw.k {
            if given != k {
                return Err(Error::InvalidRepSpec(format!(
                    "k = {given} but lambda0 {} has weight {k}",
                    raw.lambda0
                )));
            }
        }
        Self::new(raw.n, Bipartition::new(raw.lambda0, raw.lambda1), raw.thoma)
    }
}

impl From<RepSpec> for RawRepSpec {
    fn from(spec: RepSpec) -> Self {
        Self {
            n: spec.n,
            k: Some(spec.bp.k()),
            lambda0: spec.bp.lambda0,
            lambda1: spec.bp.lambda1,
            thoma: spec.thoma,
        }
    }
}

/// An involution `(p1 r1)(p2 r2)...` with `p1 < p2 < ... <= k < r1 < r2 < ...`,
/// the distinguished representative of a coset of `S_k × S_(k,inf)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CosetInvolution {
    pub pairs: Vec<(usize, usize)>,
}

impl CosetInvolution {
    pub fn to_permutation(&self) -> Permutation {
        let cycles: Vec<Vec<usize>> = self.pairs.iter().map(|&(p, r)| vec![p, r]).collect();
        Permutation::from_cycles(&cycles).expect("pairs are disjoint")
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Pairs the points of `[1,k]` that `s` moves out of the block with the points
/// outside it that `s` moves in, both in increasing order. The result `ŝ`
/// satisfies `ŝ^-1 s ∈ S_k × S_(k,inf)` and depends only on the coset of `s`.
pub fn canonical_coset_involution(s: &Permutation, k: usize) -> CosetInvolution {
    let image: std::collections::BTreeSet<usize> = (1..=k).map(|i| s.apply(i)).collect();
    let leaving = (1..=k).filter(|i| !image.contains(i));
    let entering = image.iter().copied().filter(|&i| i > k);
    CosetInvolution {
        pairs: leaving.zip(entering).collect(),
    }
}

/// `chi_n(b1) · chi^sigma_{alpha beta gamma}(b2)` for `b = b1 b2` in
/// `B_n · B_(n,inf)`, with `chi_n` the normalized `B_n` character.
pub fn finite_trace(spec: &RepSpec, b: &GroupElement) -> Result<Rational> {
    let (head, tail) = split_in_level(b, spec.n).ok_or_else(|| Error::NotInLevel {
        element: b.to_string(),
        n: spec.n,
    })?;
    let chi_n = bn_normalized_character(spec.n, &spec.bp, &head)?;
    Ok(chi_n * character_value(&spec.thoma, &tail))
}

/// The state of the induced representation at its canonical cyclic vector.
pub fn induced_state(spec: &RepSpec, g: &GroupElement) -> Rational {
    match split_in_level(g, spec.n) {
        Some(_) => finite_trace(spec, g).expect("membership was checked"),
        None => Rational::zero(),
    }
}

/// Evaluates the induced state on `g` conjugated far out to
/// `B_(m,inf)` for three consecutive shifts `m >= max(supp g, n)`; the values
/// must agree and give the asymptotic character.
pub fn asymptotic_character_estimate(spec: &RepSpec, g: &GroupElement) -> Rational {
    let base = g.max_support().max(spec.n).max(1);
    let values: Vec<Rational> = (base..base + 3)
        .map(|m| {
            let shifted = shift_conjugate(g, m).expect("shift covers the support");
            induced_state(spec, &shifted)
        })
        .collect();
    assert!(
        values.windows(2).all(|w| w[0] == w[1]),
        "shifted states disagree for {g}: {values:?}"
    );
    values.into_iter().next().expect("three samples")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GramMode {
    Exact,
    Approximate,
    /// Exact up to [`EXACT_GRAM_LIMIT`] elements, floating point beyond.
    Auto,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GramVerdict {
    Psd { approximate: bool },
    NotPsd {
        approximate: bool,
        /// Indices into the element list selecting the failing principal minor.
        witness: Vec<usize>,
        reason: String,
    },
}

impl GramVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, GramVerdict::Psd { .. })
    }
}

/// `G_ij = phi(g_i^-1 g_j)`.
pub fn gram_matrix(phi: &dyn Fn(&GroupElement) -> Rational, elems: &[GroupElement]) -> RatMatrix {
    let inverses: Vec<GroupElement> = elems.iter().map(GroupElement::inverse).collect();
    RatMatrix::from_fn(elems.len(), elems.len(), |i, j| phi(&inverses[i].multiply(&elems[j])))
}

/// Tests whether `phi` restricted to `elems` has a positive semidefinite Gram
/// matrix.
pub fn gram_psd_check(
    phi: &dyn Fn(&GroupElement) -> Rational,
    elems: &[GroupElement],
    mode: GramMode,
) -> Result<GramVerdict> {
    let exact = match mode {
        GramMode::Exact if elems.len() > EXACT_GRAM_LIMIT => {
            return Err(Error::Guard {
                what: "exact Gram set size",
                value: elems.len(),
                limit: EXACT_GRAM_LIMIT,
            })
        }
        GramMode::Exact => true,
        GramMode::Approximate => false,
        GramMode::Auto => elems.len() <= EXACT_GRAM_LIMIT,
    };
    let gram = gram_matrix(phi, elems);
    if exact {
        return Ok(match exact_psd(&gram) {
            PsdOutcome::Psd => GramVerdict::Psd { approximate: false },
            PsdOutcome::NotPsd { indices, reason } => GramVerdict::NotPsd {
                approximate: false,
                witness: indices,
                reason,
            },
        });
    }
    Ok(approximate_psd(&gram))
}

fn approximate_psd(gram: &RatMatrix) -> GramVerdict {
    use num::ToPrimitive;
    let n = gram.rows();
    let dense = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        // symmetrized; asymmetry is reported separately below
        ((&gram[(i, j)] + &gram[(j, i)]) / Rational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    });
    if !gram.is_symmetric() {
        let (i, j) = (0..n)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| gram[(i, j)] != gram[(j, i)])
            .expect("an asymmetric pair exists");
        return GramVerdict::NotPsd {
            approximate: true,
            witness: vec![j, i],
            reason: format!("entries ({j},{i}) and ({i},{j}) differ"),
        };
    }
    let eig = nalgebra::SymmetricEigen::new(dense);
    let (idx, min) = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    if n == 0 || min >= APPROX_EIGEN_TOLERANCE {
        GramVerdict::Psd { approximate: true }
    } else {
        // the rows carrying most of the offending eigenvector
        let v = eig.eigenvectors.column(idx);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| v[b].abs().total_cmp(&v[a].abs()));
        order.truncate(2.min(n));
        order.sort_unstable();
        GramVerdict::NotPsd {
            approximate: true,
            witness: order,
            reason: format!("smallest eigenvalue {min:e}"),
        }
    }
}

/// The normalized trace value at the identity, always one.
pub fn state_at_identity(spec: &RepSpec) -> Rational {
    let v = induced_state(spec, &GroupElement::identity());
    debug_assert!(v.is_one());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::thoma::Param;

    fn el(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        el(s).perm
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn half_half() -> ThomaSpec {
        let a = vec![Param::new(ratio(1, 2), false), Param::new(ratio(1, 2), false)];
        ThomaSpec::new(a, vec![], int(0), int(0)).unwrap()
    }

    fn rep(l0: &[usize], l1: &[usize], thoma: ThomaSpec) -> RepSpec {
        let bp = Bipartition::new(p(l0), p(l1));
        RepSpec::new(bp.n(), bp, thoma).unwrap()
    }

    #[test]
    fn coset_involution_examples() {
        assert!(canonical_coset_involution(&perm("(1 2)(4 5)"), 2).is_identity());
        let s = canonical_coset_involution(&perm("(1 2 3)"), 2);
        assert_eq!(s.pairs, vec![(1, 3)]);
        let s = canonical_coset_involution(&perm("(1 3 2)"), 2);
        assert_eq!(s.pairs, vec![(2, 3)]);
        for (word, k) in [("(1 2 3)", 2), ("(1 3 2)", 2), ("(1 5)(2 7 3)", 3)] {
            let s = perm(word);
            let hat = canonical_coset_involution(&s, k).to_permutation();
            assert!(hat.compose(&hat).is_identity());
            assert!(hat.inverse().compose(&s).preserves_prefix(k));
        }
    }

    #[test]
    fn finite_trace_examples() {
        let unit = ThomaSpec::new(vec![Param::new(int(1), false)], vec![], int(0), int(0)).unwrap();
        let spec = rep(&[], &[1], unit);
        assert_eq!(finite_trace(&spec, &GroupElement::identity()).unwrap(), int(1));
        assert_eq!(finite_trace(&spec, &el("e;signs=1")).unwrap(), int(-1));
        let spec = rep(&[2], &[], half_half());
        assert_eq!(finite_trace(&spec, &el("(3 4)")).unwrap(), ratio(1, 2));
        assert!(matches!(finite_trace(&spec, &el("(1 3)")), Err(Error::NotInLevel { .. })));
    }

    #[test]
    fn induced_state_examples() {
        let spec = rep(&[1], &[1], half_half());
        assert_eq!(induced_state(&spec, &GroupElement::identity()), int(1));
        assert_eq!(induced_state(&spec, &el("(1 3)")), int(0));
        let spec = rep(&[1], &[], half_half());
        assert_eq!(induced_state(&spec, &el("(2 3)")), ratio(1, 2));
        assert!(state_at_identity(&spec).is_one());
    }

    #[test]
    fn asymptotic_examples() {
        let spec = rep(&[1], &[1], half_half());
        assert_eq!(asymptotic_character_estimate(&spec, &GroupElement::identity()), int(1));
        let spec = rep(&[2], &[], half_half());
        let g = el("(1 2)");
        assert_eq!(asymptotic_character_estimate(&spec, &g), ratio(1, 2));
        assert_eq!(induced_state(&spec, &g), int(1));
        let beta = ThomaSpec::new(vec![], vec![Param::new(int(1), false)], int(0), int(0)).unwrap();
        let spec = rep(&[1], &[], beta);
        assert_eq!(asymptotic_character_estimate(&spec, &el("(1 2 3)")), int(1));
    }

    #[test]
    fn gram_examples() {
        let spec = rep(&[1], &[1], half_half());
        let phi = |g: &GroupElement| induced_state(&spec, g);
        let v = gram_psd_check(&phi, &[GroupElement::identity()], GramMode::Exact).unwrap();
        assert_eq!(v, GramVerdict::Psd { approximate: false });
        let elems = vec![GroupElement::identity(), el("(1 2)"), el("(2 3)")];
        assert!(gram_psd_check(&phi, &elems, GramMode::Exact).unwrap().is_psd());
        assert!(gram_psd_check(&phi, &elems, GramMode::Approximate).unwrap().is_psd());

        // flipping the value at one non-involution breaks the symmetry of G
        let g = el("(3 4 5)");
        let corrupted = |h: &GroupElement| {
            let v = induced_state(&spec, h);
            if *h == g { -v } else { v }
        };
        let elems = vec![GroupElement::identity(), g.clone()];
        assert_ne!(induced_state(&spec, &g), int(0));
        match gram_psd_check(&corrupted, &elems, GramMode::Exact).unwrap() {
            GramVerdict::NotPsd { witness, .. } => assert_eq!(witness, vec![0, 1]),
            v => panic!("corrupted state accepted: {v:?}"),
        }

        let too_many: Vec<GroupElement> = (1..=17).map(|i| GroupElement::from_signs([i])).collect();
        assert!(gram_psd_check(&phi, &too_many, GramMode::Exact).is_err());
        assert_eq!(
            gram_psd_check(&phi, &too_many, GramMode::Auto).unwrap(),
            GramVerdict::Psd { approximate: true }
        );
    }

    #[test]
    fn negative_identity_is_caught() {
        let spec = rep(&[1], &[], half_half());
        let corrupted = |h: &GroupElement| {
            let v = induced_state(&spec, h);
            if h.is_identity() { -v } else { v }
        };
        let v = gram_psd_check(&corrupted, &[GroupElement::identity()], GramMode::Exact).unwrap();
        assert!(matches!(v, GramVerdict::NotPsd { ref witness, .. } if witness == &vec![0]));
    }

    #[test]
    fn rep_spec_json() {
        let text = r#"{"n":2,"k":1,"lambda0":[1],"lambda1":[1],"thoma":{"alpha":[{"value":"1/2","sigma":0},{"value":"1/2","sigma":0}],"beta":[],"gamma0":"0/1","gamma1":"0/1"}}"#;
        let spec: RepSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.k(), 1);
        assert_eq!(serde_json::to_string(&spec).unwrap(), text);
        let wrong_k = text.replace("\"k\":1", "\"k\":2");
        assert!(serde_json::from_str::<RepSpec>(&wrong_k).is_err());
        let wrong_n = text.replace("\"n\":2", "\"n\":3");
        assert!(serde_json::from_str::<RepSpec>(&wrong_n).is_err());
    }
}
