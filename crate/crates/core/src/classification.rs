//! Decision procedures for stable factor-representations given by a
//! [`RepSpec`]: central depth, factor type and quasi-equivalence.
//!
//! Everything is driven by which of `gamma0`, `gamma1` vanish.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::induced_states::RepSpec;
use crate::thoma::ThomaSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorType {
    #[serde(rename = "I_1")]
    I1,
    #[serde(rename = "I_inf")]
    IInf,
    #[serde(rename = "II_1")]
    II1,
    #[serde(rename = "II_inf")]
    IIInf,
}

impl FactorType {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorType::I1 => "I_1",
            FactorType::IInf => "I_inf",
            FactorType::II1 => "II_1",
            FactorType::IIInf => "II_inf",
        }
    }
}

impl std::fmt::Display for FactorType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which of the two gamma parameters are positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GammaCase {
    BothPositive,
    OnlyGamma1,
    OnlyGamma0,
    BothZero,
}

impl GammaCase {
    pub const ALL: [GammaCase; 4] = [
        GammaCase::BothPositive,
        GammaCase::OnlyGamma1,
        GammaCase::OnlyGamma0,
        GammaCase::BothZero,
    ];
}

pub fn gamma_case(thoma: &ThomaSpec) -> GammaCase {
    match (thoma.gamma0().is_zero(), thoma.gamma1().is_zero()) {
        (false, false) => GammaCase::BothPositive,
        (true, false) => GammaCase::OnlyGamma1,
        (false, true) => GammaCase::OnlyGamma0,
        (true, true) => GammaCase::BothZero,
    }
}

pub fn central_depth(spec: &RepSpec) -> usize {
    match gamma_case(spec.thoma()) {
        GammaCase::BothPositive => 0,
        GammaCase::OnlyGamma1 => spec.k(),
        GammaCase::OnlyGamma0 => spec.n() - spec.k(),
        GammaCase::BothZero => spec.n(),
    }
}

pub fn factor_type(spec: &RepSpec) -> FactorType {
    let (n, k) = (spec.n(), spec.k());
    match gamma_case(spec.thoma()) {
        GammaCase::BothPositive => FactorType::II1,
        GammaCase::OnlyGamma1 if k == 0 => FactorType::II1,
        GammaCase::OnlyGamma1 => FactorType::IIInf,
        GammaCase::OnlyGamma0 if k == n => FactorType::II1,
        GammaCase::OnlyGamma0 => FactorType::IIInf,
        GammaCase::BothZero => match (n == 0, spec.thoma().is_flat()) {
            (true, true) => FactorType::I1,
            (true, false) => FactorType::II1,
            (false, true) => FactorType::IInf,
            (false, false) => FactorType::IIInf,
        },
    }
}

/// Whether `a` and `b` are quasi-equivalent, with a short code naming the
/// rule that decided it.
pub fn quasi_equivalent(a: &RepSpec, b: &RepSpec) -> (bool, &'static str) {
    // ThomaSpec keeps alpha and beta sorted, so equality is multiset equality
    if a.thoma() != b.thoma() {
        return (false, "asymptotic-characters-differ");
    }
    let (ba, bb) = (a.bipartition(), b.bipartition());
    match gamma_case(a.thoma()) {
        GammaCase::BothPositive => (true, "II1-character-determined"),
        GammaCase::BothZero => {
            let same = a.n() == b.n() && ba == bb;
            (same, if same { "gamma-zero-same-level-and-bipartition" } else { "gamma-zero-level-or-bipartition-differ" })
        }
        GammaCase::OnlyGamma1 => {
            let same = a.k() == b.k() && ba.lambda0 == bb.lambda0;
            (same, if same { "gamma0-zero-same-k-and-lambda0" } else { "gamma0-zero-k-or-lambda0-differ" })
        }
        GammaCase::OnlyGamma0 => {
            let same = a.n() - a.k() == b.n() - b.k() && ba.lambda1 == bb.lambda1;
            (same, if same { "gamma1-zero-same-rank-and-lambda1" } else { "gamma1-zero-rank-or-lambda1-differ" })
        }
    }
}

/// The verdict object printed by `classify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub quasi_equivalent: bool,
    pub reason: String,
    pub central_depth: [usize; 2],
    pub factor_type: [FactorType; 2],
}

pub fn classify(a: &RepSpec, b: &RepSpec) -> Verdict {
    let (eq, reason) = quasi_equivalent(a, b);
    Verdict {
        quasi_equivalent: eq,
        reason: reason.to_string(),
        central_depth: [central_depth(a), central_depth(b)],
        factor_type: [factor_type(a), factor_type(b)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{Bipartition, Partition};
    use crate::rational::{int, ratio};
    use crate::thoma::Param;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn rep(l0: &[usize], l1: &[usize], thoma: &ThomaSpec) -> RepSpec {
        let bp = Bipartition::new(p(l0), p(l1));
        RepSpec::new(bp.n(), bp, thoma.clone()).unwrap()
    }

    fn with_gamma(g0: (i64, i64), g1: (i64, i64)) -> ThomaSpec {
        let g0 = ratio(g0.0, g0.1);
        let g1 = ratio(g1.0, g1.1);
        let rest = int(1) - &g0 - &g1;
        let alpha = if rest.is_zero() { vec![] } else { vec![Param::new(rest, false)] };
        ThomaSpec::new(alpha, vec![], g0, g1).unwrap()
    }

    #[test]
    fn depth_examples() {
        let both = with_gamma((1, 4), (1, 4));
        assert_eq!(central_depth(&rep(&[1], &[2], &both)), 0);
        assert_eq!(central_depth(&rep(&[2], &[1], &with_gamma((0, 1), (1, 2)))), 2);
        assert_eq!(central_depth(&rep(&[2], &[1], &with_gamma((1, 2), (0, 1)))), 1);
        let flat = with_gamma((0, 1), (0, 1));
        assert_eq!(central_depth(&rep(&[2], &[1], &flat)), 3);
    }

    #[test]
    fn type_examples() {
        assert_eq!(factor_type(&rep(&[1], &[2], &with_gamma((1, 4), (1, 4)))), FactorType::II1);
        let halves = ThomaSpec::new(
            vec![Param::new(ratio(1, 2), false), Param::new(ratio(1, 2), false)],
            vec![],
            int(0),
            int(0),
        )
        .unwrap();
        assert_eq!(factor_type(&rep(&[1], &[], &halves)), FactorType::IIInf);
        assert_eq!(factor_type(&rep(&[], &[], &halves)), FactorType::II1);
        let one = with_gamma((0, 1), (0, 1));
        assert_eq!(factor_type(&rep(&[1], &[1], &one)), FactorType::IInf);
        assert_eq!(factor_type(&rep(&[], &[], &one)), FactorType::I1);
        let g1 = with_gamma((0, 1), (1, 2));
        assert_eq!(factor_type(&rep(&[], &[2], &g1)), FactorType::II1);
        assert_eq!(factor_type(&rep(&[1], &[1], &g1)), FactorType::IIInf);
        let g0 = with_gamma((1, 2), (0, 1));
        assert_eq!(factor_type(&rep(&[2], &[], &g0)), FactorType::II1);
        assert_eq!(factor_type(&rep(&[1], &[1], &g0)), FactorType::IIInf);
    }

    #[test]
    fn quasi_equivalence_examples() {
        let one = with_gamma((0, 1), (0, 1));
        let a = rep(&[2], &[1], &one);
        assert!(quasi_equivalent(&a, &a).0);
        assert!(!quasi_equivalent(&a, &rep(&[1, 1], &[1], &one)).0);
        let both = with_gamma((1, 4), (1, 4));
        let (eq, reason) = quasi_equivalent(&rep(&[1], &[2], &both), &rep(&[], &[], &both));
        assert!(eq);
        assert_eq!(reason, "II1-character-determined");
        assert!(!quasi_equivalent(&rep(&[], &[], &both), &rep(&[], &[], &one)).0);

        let g1 = with_gamma((0, 1), (1, 2));
        assert!(quasi_equivalent(&rep(&[2], &[1], &g1), &rep(&[2], &[3, 1], &g1)).0);
        assert!(!quasi_equivalent(&rep(&[2], &[1], &g1), &rep(&[1, 1], &[1], &g1)).0);
        let g0 = with_gamma((1, 2), (0, 1));
        assert!(quasi_equivalent(&rep(&[2], &[1], &g0), &rep(&[3, 1], &[1], &g0)).0);
        assert!(!quasi_equivalent(&rep(&[2], &[1], &g0), &rep(&[2], &[2], &g0)).0);
    }

    #[test]
    fn verdict_json() {
        let both = with_gamma((1, 4), (1, 4));
        let v = classify(&rep(&[1], &[], &both), &rep(&[], &[], &both));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"quasi_equivalent":true,"reason":"II1-character-determined","central_depth":[0,0],"factor_type":["II_1","II_1"]})
        );
    }
}
