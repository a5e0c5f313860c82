//! Finite-support signed permutations, the elements of `Z2 wr S_inf`.
//!
//! An element is stored as a pair `(s, z)` read as the product `s·z`: the sign
//! flips `z` act first, then the permutation `s`. The permutation acts on sign
//! vectors by moving flipped positions, `s(z) = { s(i) : i in z }`, so
//!
//! ```text
//! (s1 z1)(s2 z2) = (s1 s2)(s2^-1(z1) + z2)
//! ```
//!
//! The pair law `(z, s)(z', s') = (z + s z', s s')` used in the literature
//! reads its pairs as `z·s`; [`GroupElement::to_pair`] and
//! [`GroupElement::from_pair`] translate between the two.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of the positive integers moving finitely many points.
/// Fixed points are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: BTreeMap<usize, usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a permutation from an explicit point map. Points mapped to
    /// themselves are dropped; the map must be a bijection of its key set.
    pub fn from_map(map: BTreeMap<usize, usize>) -> Result<Self> {
        let keys: BTreeSet<usize> = map.keys().copied().collect();
        let values: BTreeSet<usize> = map.values().copied().collect();
        if keys.contains(&0) {
            return Err(Error::InvalidParameter("points are 1-based".into()));
        }
        if keys != values || values.len() != map.len() {
            return Err(Error::InvalidParameter(format!(
                "point map {map:?} is not a bijection of its domain"
            )));
        }
        Ok(Self {
            map: map.into_iter().filter(|(a, b)| a != b).collect(),
        })
    }

    /// The cycle `(a1 a2 ... ak)`: a1 -> a2 -> ... -> ak -> a1.
    pub fn cycle(points: &[usize]) -> Result<Self> {
        let distinct: BTreeSet<usize> = points.iter().copied().collect();
        if distinct.len() != points.len() {
            return Err(Error::InvalidParameter(format!(
                "cycle {points:?} repeats a point"
            )));
        }
        if distinct.contains(&0) {
            return Err(Error::InvalidParameter("points are 1-based".into()));
        }
        let mut map = BTreeMap::new();
        for (i, &p) in points.iter().enumerate() {
            map.insert(p, points[(i + 1) % points.len()]);
        }
        Self::from_map(map)
    }

    pub fn transposition(a: usize, b: usize) -> Result<Self> {
        Self::cycle(&[a, b])
    }

    /// Product of cycles, the rightmost applied first.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::identity();
        for c in cycles {
            acc = acc.compose(&Self::cycle(c)?);
        }
        Ok(acc)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map.get(&i).copied().unwrap_or(i)
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut map = BTreeMap::new();
        for &i in self.map.keys().chain(other.map.keys()) {
            let j = self.apply(other.apply(i));
            if j != i {
                map.insert(i, j);
            }
        }
        Self { map }
    }

    pub fn inverse(&self) -> Self {
        Self {
            map: self.map.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.map.keys().copied().collect()
    }

    pub fn moved_points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().map(|(&a, &b)| (a, b))
    }

    /// Disjoint cycles of length at least two, each starting at its minimal
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut next = self.apply(start);
            while next != start {
                seen.insert(next);
                cycle.push(next);
                next = self.apply(next);
            }
            out.push(cycle);
        }
        out
    }

    /// True when the permutation maps `{1..n}` onto itself.
    pub fn preserves_prefix(&self, n: usize) -> bool {
        self.map.iter().all(|(&a, &b)| (a <= n) == (b <= n))
    }

    /// The part of the permutation acting on points accepted by `keep`.
    /// Only meaningful when the kept set is invariant.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            map: self
                .map
                .iter()
                .filter(|(&a, _)| keep(a))
                .map(|(&a, &b)| (a, b))
                .collect(),
        }
    }
}

/// An element of `_0Z2^inf`: the finite set of flipped coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    flipped: BTreeSet<usize>,
}

impl SignVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut z = Self::new();
        for i in indices {
            z.toggle(i);
        }
        z
    }

    /// Adds the unit vector at `i` (mod 2).
    pub fn toggle(&mut self, i: usize) {
        if !self.flipped.remove(&i) {
            self.flipped.insert(i);
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.flipped.contains(&i)
    }

    pub fn is_empty(&self) -> bool {
        self.flipped.is_empty()
    }

    pub fn len(&self) -> usize {
        self.flipped.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.flipped.iter().copied()
    }

    /// Componentwise sum in `Z2`.
    pub fn add(&self, other: &Self) -> Self {
        Self {
            flipped: self
                .flipped
                .symmetric_difference(&other.flipped)
                .copied()
                .collect(),
        }
    }

    /// `s(z)_i = z_{s^-1(i)}`, i.e. flipped positions move along `s`.
    pub fn permuted(&self, s: &Permutation) -> Self {
        Self {
            flipped: self.flipped.iter().map(|&i| s.apply(i)).collect(),
        }
    }
}

/// A signed permutation `s·z` with finite support.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub perm: Permutation,
    pub signs: SignVector,
}

impl GroupElement {
    pub fn new(perm: Permutation, signs: SignVector) -> Self {
        Self { perm, signs }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_perm(perm: Permutation) -> Self {
        Self::new(perm, SignVector::new())
    }

    pub fn from_signs(signs: impl IntoIterator<Item = usize>) -> Self {
        Self::new(Permutation::identity(), SignVector::from_indices(signs))
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.signs.is_empty()
    }

    /// `(s1 z1)(s2 z2) = (s1 s2)(s2^-1(z1) + z2)`.
    pub fn multiply(&self, other: &Self) -> Self {
        let perm = self.perm.compose(&other.perm);
        let signs = self
            .signs
            .permuted(&other.perm.inverse())
            .add(&other.signs);
        Self { perm, signs }
    }

    /// `(s z)^-1 = z s^-1 = s^-1 · s(z)`.
    pub fn inverse(&self) -> Self {
        Self {
            perm: self.perm.inverse(),
            signs: self.signs.permuted(&self.perm),
        }
    }

    /// `h g h^-1`.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.multiply(self).multiply(&h.inverse())
    }

    /// `{ k : s(k) != k or z_k != 0 }`.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = self.perm.support();
        s.extend(self.signs.iter());
        s
    }

    pub fn max_support(&self) -> usize {
        self.support().last().copied().unwrap_or(0)
    }

    /// The element as a pair `(z', s)` with `g = z'·s`, the convention of the
    /// pair law `(z, s)(z', s') = (z + s z', s s')`.
    pub fn to_pair(&self) -> (SignVector, Permutation) {
        (self.signs.permuted(&self.perm), self.perm.clone())
    }

    pub fn from_pair(z: &SignVector, s: &Permutation) -> Self {
        Self {
            perm: s.clone(),
            signs: z.permuted(&s.inverse()),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.perm.cycles();
        if cycles.is_empty() {
            write!(f, "e")?;
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        if !self.signs.is_empty() {
            let idx: Vec<String> = self.signs.iter().map(|p| p.to_string()).collect();
            write!(f, ";signs={}", idx.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Grammar: `"(a b c)(d e)"` with optional `";signs=i,j"`; the identity is
    /// `"()"` or `"e"`. Cycles need not be disjoint and compose right to left.
    fn from_str(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::ElementSyntax {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let (cycle_part, sign_part) = match input.split_once(';') {
            Some((c, s)) => (c.trim(), Some(s.trim())),
            None => (input.trim(), None),
        };

        let mut cycles = Vec::new();
        if cycle_part != "e" && !cycle_part.is_empty() {
            let mut rest = cycle_part;
            while !rest.is_empty() {
                let open = rest
                    .strip_prefix('(')
                    .ok_or_else(|| err("expected `(`"))?;
                let close = open.find(')').ok_or_else(|| err("unclosed cycle"))?;
                let body = &open[..close];
                let points = body
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| match t.parse::<usize>() {
                        Ok(0) | Err(_) => Err(err("cycle entries must be positive integers")),
                        Ok(p) => Ok(p),
                    })
                    .collect::<Result<Vec<usize>>>()?;
                if !points.is_empty() {
                    cycles.push(points);
                }
                rest = open[close + 1..].trim_start();
            }
        } else if cycle_part.is_empty() && sign_part.is_none() {
            return Err(err("empty element; use `e` or `()` for the identity"));
        }
        let perm = Permutation::from_cycles(&cycles).map_err(|e| err(&e.to_string()))?;

        let mut signs = SignVector::new();
        if let Some(s) = sign_part {
            let list = s
                .strip_prefix("signs=")
                .ok_or_else(|| err("expected `signs=` after `;`"))?;
            for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                match tok.parse::<usize>() {
                    Ok(0) | Err(_) => return Err(err("sign indices must be positive integers")),
                    Ok(i) => signs.toggle(i),
                }
            }
        }
        Ok(Self { perm, signs })
    }
}

/// One cycle of the permutation together with the sign bits on its orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiCycle {
    pub orbit: Vec<usize>,
    pub sign_bits: BTreeSet<usize>,
}

impl QuasiCycle {
    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit.is_empty()
    }

    /// Parity of the sign bits carried on the orbit.
    pub fn sign_sum(&self) -> bool {
        self.sign_bits.len() % 2 == 1
    }

    /// The sign bit at the first orbit point, `z_{n_1}`.
    pub fn first_bit(&self) -> bool {
        self.orbit
            .first()
            .is_some_and(|p| self.sign_bits.contains(p))
    }

    pub fn to_element(&self) -> GroupElement {
        let perm = if self.orbit.len() > 1 {
            Permutation::cycle(&self.orbit).expect("orbit points are distinct")
        } else {
            Permutation::identity()
        };
        GroupElement::new(perm, SignVector::from_indices(self.sign_bits.iter().copied()))
    }
}

/// Splits `g` into commuting quasi-cycles, ordered by minimal point. Fixed
/// points carrying a sign become quasi-cycles of length one; untouched points
/// are omitted.
pub fn quasi_cycle_decompose(g: &GroupElement) -> Vec<QuasiCycle> {
    let mut out: Vec<QuasiCycle> = g
        .perm
        .cycles()
        .into_iter()
        .map(|orbit| {
            let sign_bits = orbit.iter().copied().filter(|&p| g.signs.contains(p)).collect();
            QuasiCycle { orbit, sign_bits }
        })
        .collect();
    for i in g.signs.iter() {
        if g.perm.apply(i) == i {
            out.push(QuasiCycle {
                orbit: vec![i],
                sign_bits: BTreeSet::from([i]),
            });
        }
    }
    out.sort_by_key(|qc| qc.orbit[0]);
    out
}

/// Conjugacy invariant: cycle lengths split by the parity of their sign sums.
/// Both lists are sorted in decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycleType {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl SignedCycleType {
    pub fn weight(&self) -> usize {
        self.plus.iter().sum::<usize>() + self.minus.iter().sum::<usize>()
    }
}

pub fn signed_cycle_type(g: &GroupElement) -> SignedCycleType {
    let mut t = SignedCycleType::default();
    for qc in quasi_cycle_decompose(g) {
        if qc.sign_sum() {
            t.minus.push(qc.len());
        } else {
            t.plus.push(qc.len());
        }
    }
    t.plus.sort_unstable_by(|a, b| b.cmp(a));
    t.minus.sort_unstable_by(|a, b| b.cmp(a));
    t
}

/// Conjugates `g` by `t_n = (1 1+n)(2 2+n)...(K K+n)`, `K = max supp g`,
/// moving it into `B_(n,inf)`.
pub fn shift_conjugate(g: &GroupElement, n: usize) -> Result<GroupElement> {
    let max = g.max_support();
    if n < max {
        return Err(Error::ShiftTooSmall { shift: n, max });
    }
    if n == 0 {
        return Ok(g.clone());
    }
    let mut map = BTreeMap::new();
    for i in 1..=max {
        map.insert(i, i + n);
        map.insert(i + n, i);
    }
    let t = GroupElement::from_perm(Permutation::from_map(map)?);
    Ok(g.conjugate_by(&t))
}

/// Factors `g = b1·b2` with `supp b1 ⊆ [1, n]` and `supp b2 ⊆ [n+1, inf)`,
/// or returns `None` when `g` is not in `B_n·B_(n,inf)`.
pub fn split_in_level(g: &GroupElement, n: usize) -> Option<(GroupElement, GroupElement)> {
    if !g.perm.preserves_prefix(n) {
        return None;
    }
    let low = GroupElement::new(
        g.perm.restrict(|i| i <= n),
        SignVector::from_indices(g.signs.iter().filter(|&i| i <= n)),
    );
    let high = GroupElement::new(
        g.perm.restrict(|i| i > n),
        SignVector::from_indices(g.signs.iter().filter(|&i| i > n)),
    );
    Some((low, high))
}

/// All permutations of `{1..n}` as point maps, in lexicographic order of
/// their one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if left.is_empty() {
            let map = prefix.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect();
            out.push(Permutation::from_map(map).expect("one-line notation is a bijection"));
            return;
        }
        for idx in 0..left.len() {
            let v = left.remove(idx);
            prefix.push(v);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

/// Every element of `B_n`, `2^n n!` of them.
pub fn enumerate_bn(n: usize) -> Vec<GroupElement> {
    let perms = all_permutations(n);
    let mut out = Vec::with_capacity(perms.len() << n);
    for s in &perms {
        for mask in 0u64..(1 << n) {
            let signs = SignVector::from_indices((1..=n).filter(|i| mask >> (i - 1) & 1 == 1));
            out.push(GroupElement::new(s.clone(), signs));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    #[test]
    fn multiply_examples() {
        let g = el("(1 3 2);signs=2,4");
        assert_eq!(GroupElement::identity().multiply(&g), g);
        assert_eq!(el("(1 2)").multiply(&el("(1 2)")), GroupElement::identity());

        // the flip at 1 is carried to 2 when rewritten with the permutation on the left
        let prod = el("e;signs=1").multiply(&el("(1 2)"));
        assert_eq!(prod, el("(1 2);signs=2"));
        let (z, s) = prod.to_pair();
        assert_eq!(z, SignVector::from_indices([1]));
        assert_eq!(s, Permutation::transposition(1, 2).unwrap());

        let conj = el("(1 2)").conjugate_by(&el("e;signs=1"));
        assert_eq!(conj, el("(1 2);signs=1,2"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(GroupElement::identity().inverse(), GroupElement::identity());
        assert_eq!(el("(1 2 3)").inverse(), el("(1 3 2)"));
        let g = el("(1 2);signs=1");
        assert_eq!(g.inverse(), el("(1 2);signs=2"));
        assert!(g.multiply(&g.inverse()).is_identity());
    }

    #[test]
    fn support_examples() {
        assert!(GroupElement::identity().support().is_empty());
        assert_eq!(el("(1 2)").support(), BTreeSet::from([1, 2]));
        assert_eq!(el("(2 3);signs=5").support(), BTreeSet::from([2, 3, 5]));
    }

    #[test]
    fn decompose_examples() {
        assert!(quasi_cycle_decompose(&GroupElement::identity()).is_empty());
        let g = el("(1 2 3)(4 5);signs=1,5,7");
        let qcs = quasi_cycle_decompose(&g);
        assert_eq!(qcs.len(), 3);
        assert_eq!(qcs[0].orbit, vec![1, 2, 3]);
        assert_eq!(qcs[0].sign_bits, BTreeSet::from([1]));
        assert_eq!(qcs[1].orbit, vec![4, 5]);
        assert_eq!(qcs[1].sign_bits, BTreeSet::from([5]));
        assert_eq!(qcs[2].orbit, vec![7]);
        let back = qcs
            .iter()
            .fold(GroupElement::identity(), |acc, q| acc.multiply(&q.to_element()));
        assert_eq!(back, g);

        let lone = quasi_cycle_decompose(&el("e;signs=3"));
        assert_eq!(lone.len(), 1);
        assert_eq!(lone[0].orbit, vec![3]);
        assert!(lone[0].sign_sum());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(signed_cycle_type(&GroupElement::identity()), SignedCycleType::default());
        let t = signed_cycle_type(&el("(1 2);signs=1"));
        assert_eq!((t.plus, t.minus), (vec![], vec![2]));
        let g = el("(1 2 3)").multiply(&el("e;signs=5"));
        let t = signed_cycle_type(&g);
        assert_eq!((t.plus, t.minus), (vec![3], vec![1]));
    }

    #[test]
    fn shift_examples() {
        assert!(shift_conjugate(&GroupElement::identity(), 4).unwrap().is_identity());
        assert_eq!(shift_conjugate(&el("(1 2)"), 5).unwrap(), el("(6 7)"));
        assert_eq!(
            shift_conjugate(&el("(1 2);signs=1"), 2).unwrap(),
            el("(3 4);signs=3")
        );
        assert!(matches!(
            shift_conjugate(&el("(1 4)"), 3),
            Err(Error::ShiftTooSmall { shift: 3, max: 4 })
        ));
    }

    #[test]
    fn split_examples() {
        let (a, b) = split_in_level(&GroupElement::identity(), 3).unwrap();
        assert!(a.is_identity() && b.is_identity());
        let (a, b) = split_in_level(&el("(1 2)(4 5);signs=1,6"), 3).unwrap();
        assert_eq!(a, el("(1 2);signs=1"));
        assert_eq!(b, el("(4 5);signs=6"));
        assert!(split_in_level(&el("(1 4)"), 3).is_none());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(el("()"), GroupElement::identity());
        assert_eq!(el("e"), GroupElement::identity());
        assert_eq!(el("(1 2);signs="), el("(1 2)"));
        assert_eq!(el("(3 1 2)").to_string(), "(1 2 3)");
        assert_eq!(el("e;signs=2,1").to_string(), "e;signs=1,2");
        // non-disjoint cycles compose right to left: (1 2)(2 3) = (1 2 3)
        assert_eq!(el("(1 2)(2 3)"), el("(1 2 3)"));
        for bad in ["", "(1 2", "(0 1)", "(1 1)", "(a b)", "(1 2);sign=1", "(1 2);signs=x"] {
            assert!(bad.parse::<GroupElement>().is_err(), "{bad}");
        }
    }

    #[test]
    fn bn_has_the_right_order() {
        assert_eq!(enumerate_bn(0).len(), 1);
        assert_eq!(enumerate_bn(2).len(), 8);
        assert_eq!(enumerate_bn(3).len(), 48);
        let distinct: BTreeSet<_> = enumerate_bn(3).into_iter().collect();
        assert_eq!(distinct.len(), 48);
    }
}
