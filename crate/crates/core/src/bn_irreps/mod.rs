//! Characters of the finite hyperoctahedral groups `B_n = Z2 wr S_n`.
//!
//! The irreducible labelled by `(lambda0 ⊢ k, lambda1 ⊢ n-k)` is induced from
//! the stabilizer `B_k · B_(k,n)` of the multiplicative character
//! `Omega_kn(z) = (-1)^{#{j > k : z_j = 1}}`, carrying
//! `Omega_kn ⊗ Irr(lambda0) ⊗ Irr(lambda1)`. Its character is evaluated with
//! the Frobenius sum over the `C(n, k)` coset representatives of
//! `S_n / (S_k × S_{n-k})`; [`oracle`] builds the same representation as
//! explicit matrices.

pub mod oracle;

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::elements::{GroupElement, Permutation, SignVector, SignedCycleType};
use crate::error::{Error, Result};
use crate::partitions::{
    binomial, enumerate_bipartitions, enumerate_partitions, factorial, hook_dimension, Bipartition,
    MnCache, Partition,
};
use crate::rational::Rational;
use crate::thoma::window_cycle_type;

pub use oracle::oracle_trace;

pub const CLASS_GUARD: usize = 8;
pub const BRUTE_CLASS_GUARD: usize = 5;
pub const TABLE_GUARD: usize = 6;

/// `Omega_kn` as a value: `+1` on flips at `j <= k`, `-1` on flips at `j > k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplicativeCharacter {
    pub k: usize,
    pub n: usize,
}

impl MultiplicativeCharacter {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
        }
        Ok(Self { k, n })
    }

    pub fn eval(&self, z: &SignVector) -> Result<i64> {
        if let Some(bad) = z.iter().find(|&j| j > self.n) {
            return Err(Error::SupportOutOfRange {
                element: format!("e;signs={bad}"),
                n: self.n,
            });
        }
        Ok(self.eval_unchecked(z))
    }

    fn eval_unchecked(&self, z: &SignVector) -> i64 {
        if z.iter().filter(|&j| j > self.k).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

pub fn omega_value(k: usize, n: usize, z: &SignVector) -> Result<i64> {
    MultiplicativeCharacter::new(k, n)?.eval(z)
}

/// A conjugacy class of `B_n`. Unlike [`crate::elements::signed_cycle_type`],
/// untouched points are counted as positive 1-cycles, so the type has
/// weight exactly `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BnClass {
    pub ctype: SignedCycleType,
    pub size: u128,
}

impl BnClass {
    pub fn n(&self) -> usize {
        self.ctype.weight()
    }

    pub fn plus(&self) -> Partition {
        Partition::from_unsorted(self.ctype.plus.clone())
    }

    pub fn minus(&self) -> Partition {
        Partition::from_unsorted(self.ctype.minus.clone())
    }

    /// Positive cycles on consecutive points first, then negative cycles,
    /// each negative cycle flipped at its first point.
    pub fn representative(&self) -> GroupElement {
        let mut next = 1;
        let mut cycles = Vec::new();
        let mut signs = SignVector::new();
        for (&len, negative) in self
            .ctype
            .plus
            .iter()
            .map(|l| (l, false))
            .chain(self.ctype.minus.iter().map(|l| (l, true)))
        {
            let orbit: Vec<usize> = (next..next + len).collect();
            if negative {
                signs.toggle(next);
            }
            if len > 1 {
                cycles.push(orbit);
            }
            next += len;
        }
        GroupElement::new(
            Permutation::from_cycles(&cycles).expect("cycles are disjoint"),
            signs,
        )
    }

    /// `"+[2,1]|-[1]"`.
    pub fn label(&self) -> String {
        format!("+{}|-{}", self.plus(), self.minus())
    }
}

/// Class type of `g` inside `B_n`, fixed points included.
pub fn bn_class_type(n: usize, g: &GroupElement) -> Result<SignedCycleType> {
    if g.max_support() > n {
        return Err(Error::SupportOutOfRange {
            element: g.to_string(),
            n,
        });
    }
    let mut t = crate::elements::signed_cycle_type(g);
    let touched = t.weight();
    t.plus.extend(std::iter::repeat_n(1, n - touched));
    t.plus.sort_unstable_by(|a, b| b.cmp(a));
    Ok(t)
}

fn centralizer_order(parts: &[usize]) -> u128 {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_default() += 1;
    }
    mult.into_iter()
        .map(|(i, m)| (2 * i as u128).pow(m as u32) * factorial(m))
        .product()
}

/// Conjugacy classes of `B_n`, one per pair `(plus ⊢ a, minus ⊢ n - a)`,
/// ordered by decreasing `a` and then partition order. Sizes come from the
/// centralizer formula `prod (2i)^{m_i} m_i!` over both sign types.
pub fn bn_classes(n: usize) -> Result<Vec<BnClass>> {
    if n > CLASS_GUARD {
        return Err(Error::Guard {
            what: "B_n class rank",
            value: n,
            limit: CLASS_GUARD,
        });
    }
    let order = (1u128 << n) * factorial(n);
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for plus in enumerate_partitions(a)? {
            for minus in enumerate_partitions(n - a)? {
                let size = order / (centralizer_order(plus.parts()) * centralizer_order(minus.parts()));
                out.push(BnClass {
                    ctype: SignedCycleType {
                        plus: plus.parts().to_vec(),
                        minus: minus.parts().to_vec(),
                    },
                    size,
                });
            }
        }
    }
    Ok(out)
}

/// Class sizes by sorting every element of `B_n` into its class.
pub fn bn_classes_brute(n: usize) -> Result<Vec<BnClass>> {
    if n > BRUTE_CLASS_GUARD {
        return Err(Error::Guard {
            what: "B_n brute-force rank",
            value: n,
            limit: BRUTE_CLASS_GUARD,
        });
    }
    let mut counts: BTreeMap<SignedCycleType, u128> = BTreeMap::new();
    for g in crate::elements::enumerate_bn(n) {
        *counts.entry(bn_class_type(n, &g)?).or_default() += 1;
    }
    let mut out = Vec::new();
    for cls in bn_classes(n)? {
        let size = counts.remove(&cls.ctype).unwrap_or(0);
        out.push(BnClass {
            ctype: cls.ctype,
            size,
        });
    }
    debug_assert!(counts.is_empty());
    Ok(out)
}

/// Minimal-length representatives of `S_n / (S_k × S_{n-k})`: for each
/// `k`-subset `A` (in lexicographic order) the permutation sending
/// `1..k` onto `A` and `k+1..n` onto the complement, both increasingly.
pub fn coset_representatives(n: usize, k: usize) -> Vec<Permutation> {
    fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            subsets(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut sets = Vec::new();
    subsets(n, k, 1, &mut Vec::new(), &mut sets);
    sets.into_iter()
        .map(|a| {
            let rest = (1..=n).filter(|v| !a.contains(v));
            let map = a.iter().copied().chain(rest).enumerate().map(|(i, v)| (i + 1, v)).collect();
            Permutation::from_map(map).expect("subset layout is a bijection")
        })
        .collect()
}

fn check_weights(n: usize, bp: &Bipartition) -> Result<()> {
    if bp.n() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            found: bp.n(),
        });
    }
    Ok(())
}

/// Frobenius sum over coset representatives for any `g` in `B_n`.
pub(crate) fn induced_character_at(
    n: usize,
    bp: &Bipartition,
    g: &GroupElement,
    cache: &mut MnCache,
) -> Result<i64> {
    let k = bp.k();
    let omega = MultiplicativeCharacter::new(k, n)?;
    let mut total = 0i64;
    for x in coset_representatives(n, k) {
        let xe = GroupElement::from_perm(x);
        let h = xe.inverse().multiply(g).multiply(&xe);
        if !h.perm.preserves_prefix(k) {
            continue;
        }
        let head = cache.character(&bp.lambda0, &window_cycle_type(&h, 1, k))?;
        let tail = cache.character(&bp.lambda1, &window_cycle_type(&h, k + 1, n))?;
        total += omega.eval_unchecked(&h.signs) * head * tail;
    }
    Ok(total)
}

pub fn bn_induced_character(n: usize, bp: &Bipartition, cls: &BnClass) -> Result<i64> {
    check_weights(n, bp)?;
    if cls.n() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            found: cls.n(),
        });
    }
    induced_character_at(n, bp, &cls.representative(), &mut MnCache::new())
}

/// `C(n, k) · dim(lambda0) · dim(lambda1)`.
pub fn bn_dimension(bp: &Bipartition) -> u128 {
    binomial(bp.n(), bp.k()) * hook_dimension(&bp.lambda0) * hook_dimension(&bp.lambda1)
}

/// The character divided by the dimension; `1` at the identity.
pub fn bn_normalized_character(n: usize, bp: &Bipartition, g: &GroupElement) -> Result<Rational> {
    check_weights(n, bp)?;
    if g.max_support() > n {
        return Err(Error::SupportOutOfRange {
            element: g.to_string(),
            n,
        });
    }
    let chi = induced_character_at(n, bp, g, &mut MnCache::new())?;
    Ok(Rational::new(chi.into(), (bn_dimension(bp) as i64).into()))
}

/// Irreducible characters of `B_n` with rows indexed by bipartitions and
/// columns by classes, both in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub bipartitions: Vec<Bipartition>,
    pub classes: Vec<BnClass>,
    pub values: Vec<Vec<i64>>,
    pub dims: Vec<u128>,
}

pub fn bn_character_table(n: usize) -> Result<CharacterTable> {
    if n > TABLE_GUARD {
        return Err(Error::Guard {
            what: "character table rank",
            value: n,
            limit: TABLE_GUARD,
        });
    }
    let bipartitions = enumerate_bipartitions(n)?;
    let classes = bn_classes(n)?;
    let reps: Vec<GroupElement> = classes.iter().map(BnClass::representative).collect();
    let mut cache = MnCache::new();
    let mut values = Vec::with_capacity(bipartitions.len());
    for bp in &bipartitions {
        let row = reps
            .iter()
            .map(|g| induced_character_at(n, bp, g, &mut cache))
            .collect::<Result<Vec<i64>>>()?;
        values.push(row);
    }
    let dims = bipartitions.iter().map(bn_dimension).collect();
    Ok(CharacterTable {
        n,
        bipartitions,
        classes,
        values,
        dims,
    })
}

impl CharacterTable {
    pub fn group_order(&self) -> u128 {
        (1u128 << self.n) * factorial(self.n)
    }

    pub fn dims_squared_sum(&self) -> u128 {
        self.dims.iter().map(|d| d * d).sum()
    }

    pub fn value(&self, bp: &Bipartition, ctype: &SignedCycleType) -> Option<i64> {
        let r = self.bipartitions.iter().position(|b| b == bp)?;
        let c = self.classes.iter().position(|cl| &cl.ctype == ctype)?;
        Some(self.values[r][c])
    }

    /// `sum_cls |cls| chi_a(cls) chi_b(cls)`, which equals `|B_n| δ(a, b)`
    /// for a genuine character table.
    pub fn row_inner_product(&self, a: usize, b: usize) -> i128 {
        self.classes
            .iter()
            .enumerate()
            .map(|(c, cls)| cls.size as i128 * self.values[a][c] as i128 * self.values[b][c] as i128)
            .sum()
    }

    /// First orthogonality over every pair of rows.
    pub fn rows_orthonormal(&self) -> bool {
        let order = self.group_order() as i128;
        (0..self.values.len()).all(|a| {
            (0..self.values.len()).all(|b| {
                self.row_inner_product(a, b) == if a == b { order } else { 0 }
            })
        })
    }

    /// `sum_bp chi_bp(c) chi_bp(d) = |C(c)| δ(c, d)`.
    pub fn columns_orthogonal(&self) -> bool {
        let order = self.group_order();
        let cols = self.classes.len();
        (0..cols).all(|c| {
            (0..cols).all(|d| {
                let s: i128 = self
                    .values
                    .iter()
                    .map(|row| row[c] as i128 * row[d] as i128)
                    .sum();
                let expected = if c == d {
                    (order / self.classes[c].size) as i128
                } else {
                    0
                };
                s == expected
            })
        })
    }

    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| {
                json!({
                    "label": c.label(),
                    "plus": c.ctype.plus,
                    "minus": c.ctype.minus,
                    "size": c.size as u64,
                })
            })
            .collect();
        let rows: Vec<Value> = self
            .bipartitions
            .iter()
            .zip(&self.values)
            .zip(&self.dims)
            .map(|((bp, vals), dim)| {
                json!({
                    "bipartition": [bp.lambda0.parts(), bp.lambda1.parts()],
                    "dim": *dim as u64,
                    "values": vals,
                })
            })
            .collect();
        json!({
            "n": self.n,
            "group_order": self.group_order() as u64,
            "dims_squared_sum": self.dims_squared_sum() as u64,
            "classes": classes,
            "rows": rows,
        })
    }

    /// One header row of class labels, then one row per bipartition.
    pub fn to_csv(&self) -> String {
        let quote = |s: String| format!("\"{s}\"");
        let mut out = String::from("bipartition");
        for c in &self.classes {
            out.push(',');
            out.push_str(&quote(c.label()));
        }
        out.push('\n');
        for (bp, row) in self.bipartitions.iter().zip(&self.values) {
            out.push_str(&quote(bp.to_string()));
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Checks that the character at `g` is the same on a second class member.
#[doc(hidden)]
pub fn class_constant_at(n: usize, bp: &Bipartition, g: &GroupElement, h: &GroupElement) -> Result<bool> {
    let mut cache = MnCache::new();
    let a = induced_character_at(n, bp, g, &mut cache)?;
    let b = induced_character_at(n, bp, &g.conjugate_by(h), &mut cache)?;
    Ok(a == b)
}
