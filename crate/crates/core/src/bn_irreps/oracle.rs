//! Explicit matrix model of the `B_n` irreducibles, used to cross-check the
//! Frobenius sum.
//!
//! `Irr(lambda)` of `S_m` is realized in Young's seminormal form on standard
//! tableaux. For an adjacent transposition `s_i` and a tableau `T` in which
//! `i` and `i+1` share neither row nor column, let `a = 1/(c(i+1) - c(i))`
//! with `c` the content `col - row` in `T`, and let `T'` swap the two
//! entries. With `T` the tableau holding `i` in the higher row,
//!
//! ```text
//! s_i e_T  = a e_T + e_T'
//! s_i e_T' = (1 - a^2) e_T - a e_T'
//! ```
//!
//! Same row acts by `+1`, same column by `-1`. All entries are rational.

use std::collections::HashMap;

use num::One;

use crate::elements::{GroupElement, Permutation};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::partitions::{standard_tableaux, Bipartition, Partition};
use crate::rational::{int, Rational};

use super::{bn_dimension, coset_representatives, MultiplicativeCharacter};

pub const ORACLE_RANK_GUARD: usize = 5;
pub const ORACLE_DIM_GUARD: usize = 64;

/// Seminormal matrices of one `S_m` irreducible.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    m: usize,
    generators: Vec<RatMatrix>,
}

impl SeminormalRep {
    pub fn new(lam: &Partition) -> Self {
        let m = lam.weight();
        let tableaux = standard_tableaux(lam);
        let index: HashMap<Vec<usize>, usize> =
            tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        // column of entry j: its position within its row
        let columns = |rows: &[usize]| {
            let mut filled = vec![0usize; lam.len()];
            rows.iter()
                .map(|&r| {
                    filled[r] += 1;
                    filled[r] - 1
                })
                .collect::<Vec<usize>>()
        };
        let dim = tableaux.len();
        let mut generators = Vec::with_capacity(m.saturating_sub(1));
        for i in 0..m.saturating_sub(1) {
            let mut g = RatMatrix::zeros(dim, dim);
            for (t, rows) in tableaux.iter().enumerate() {
                let cols = columns(rows);
                let (ri, rj) = (rows[i], rows[i + 1]);
                let (ci, cj) = (cols[i], cols[i + 1]);
                if ri == rj {
                    g[(t, t)] = Rational::one();
                } else if ci == cj {
                    g[(t, t)] = -Rational::one();
                } else {
                    let content = |r: usize, c: usize| c as i64 - r as i64;
                    let a = Rational::new(1.into(), (content(rj, cj) - content(ri, ci)).into());
                    let mut swapped = rows.clone();
                    swapped.swap(i, i + 1);
                    let u = index[&swapped];
                    g[(t, t)] = a.clone();
                    if ri < rj {
                        g[(u, t)] = Rational::one();
                    } else {
                        g[(u, t)] = Rational::one() - &a * &a;
                    }
                }
            }
            generators.push(g);
        }
        Self { m, generators }
    }

    pub fn dim(&self) -> usize {
        match self.generators.first() {
            Some(g) => g.rows(),
            None => 1,
        }
    }

    /// The matrix of a permutation of `{1..m}`, built from a reduced word:
    /// a descent `i` gives `s = (s ∘ s_i) ∘ s_i`.
    pub fn matrix(&self, s: &Permutation) -> RatMatrix {
        let mut acc = RatMatrix::identity(self.dim());
        let mut cur = s.clone();
        while !cur.is_identity() {
            let i = (1..self.m)
                .find(|&i| cur.apply(i) > cur.apply(i + 1))
                .expect("a non-identity permutation has a descent");
            acc = &self.generators[i - 1] * &acc;
            cur = cur.compose(&Permutation::transposition(i, i + 1).expect("distinct points"));
        }
        acc
    }
}

/// The induced representation of `B_n` for `bp` as block-monomial matrices
/// over the `C(n, k)` cosets of the stabilizer.
#[derive(Clone, Debug)]
pub struct InducedRep {
    n: usize,
    k: usize,
    head: SeminormalRep,
    tail: SeminormalRep,
    cosets: Vec<Permutation>,
}

impl InducedRep {
    pub fn new(n: usize, bp: &Bipartition) -> Result<Self> {
        if bp.n() != n {
            return Err(Error::WeightMismatch {
                expected: n,
                found: bp.n(),
            });
        }
        if n > ORACLE_RANK_GUARD {
            return Err(Error::Guard {
                what: "oracle rank",
                value: n,
                limit: ORACLE_RANK_GUARD,
            });
        }
        let dim = bn_dimension(bp) as usize;
        if dim > ORACLE_DIM_GUARD {
            return Err(Error::Guard {
                what: "oracle dimension",
                value: dim,
                limit: ORACLE_DIM_GUARD,
            });
        }
        let k = bp.k();
        Ok(Self {
            n,
            k,
            head: SeminormalRep::new(&bp.lambda0),
            tail: SeminormalRep::new(&bp.lambda1),
            cosets: coset_representatives(n, k),
        })
    }

    pub fn dim(&self) -> usize {
        self.cosets.len() * self.head.dim() * self.tail.dim()
    }

    fn coset_of(&self, s: &Permutation) -> usize {
        let image: Vec<usize> = {
            let mut v: Vec<usize> = (1..=self.k).map(|i| s.apply(i)).collect();
            v.sort_unstable();
            v
        };
        self.cosets
            .iter()
            .position(|x| (1..=self.k).map(|i| x.apply(i)).eq(image.iter().copied()))
            .expect("every k-subset has a representative")
    }

    /// `Omega_kn(z) · Irr(lambda0)(head) ⊗ Irr(lambda1)(tail)` on the stabilizer.
    fn stabilizer_block(&self, h: &GroupElement) -> RatMatrix {
        let k = self.k;
        let head = h.perm.restrict(|i| i <= k);
        let tail_map = h
            .perm
            .moved_points()
            .filter(|&(a, _)| a > k)
            .map(|(a, b)| (a - k, b - k))
            .collect();
        let tail = Permutation::from_map(tail_map).expect("tail of a stabilizer element");
        let omega = MultiplicativeCharacter { k, n: self.n }.eval_unchecked(&h.signs);
        self.head
            .matrix(&head)
            .kron(&self.tail.matrix(&tail))
            .scale(&int(omega))
    }

    pub fn matrix(&self, g: &GroupElement) -> Result<RatMatrix> {
        if g.max_support() > self.n {
            return Err(Error::SupportOutOfRange {
                element: g.to_string(),
                n: self.n,
            });
        }
        let block = self.head.dim() * self.tail.dim();
        let mut out = RatMatrix::zeros(self.dim(), self.dim());
        for (a, x) in self.cosets.iter().enumerate() {
            let xe = GroupElement::from_perm(x.clone());
            let gx = g.multiply(&xe);
            let b = self.coset_of(&gx.perm);
            let ye = GroupElement::from_perm(self.cosets[b].clone());
            let h = ye.inverse().multiply(&gx);
            debug_assert!(h.perm.preserves_prefix(self.k));
            out.set_block(b * block, a * block, &self.stabilizer_block(&h));
        }
        Ok(out)
    }
}

/// Trace of the explicit induced matrix at `g`.
pub fn oracle_trace(n: usize, bp: &Bipartition, g: &GroupElement) -> Result<Rational> {
    let rep = InducedRep::new(n, bp)?;
    Ok(rep.matrix(g)?.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn_irreps::{bn_classes, induced_character_at};
    use crate::elements::{all_permutations, enumerate_bn};
    use crate::partitions::{enumerate_bipartitions, enumerate_partitions, MnCache};
    use crate::thoma::window_cycle_type;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn seminormal_is_a_representation() {
        for m in 1..=5 {
            let perms = all_permutations(m);
            for lam in enumerate_partitions(m).unwrap() {
                let rep = SeminormalRep::new(&lam);
                for s in perms.iter().step_by(5) {
                    for t in perms.iter().step_by(7) {
                        assert_eq!(rep.matrix(&s.compose(t)), &rep.matrix(s) * &rep.matrix(t));
                    }
                }
            }
        }
    }

    #[test]
    fn seminormal_traces_match_murnaghan_nakayama() {
        let mut cache = MnCache::new();
        for m in 1..=5 {
            for lam in enumerate_partitions(m).unwrap() {
                let rep = SeminormalRep::new(&lam);
                for s in all_permutations(m) {
                    let g = GroupElement::from_perm(s.clone());
                    let mu = window_cycle_type(&g, 1, m);
                    let expected = cache.character(&lam, &mu).unwrap();
                    assert_eq!(rep.matrix(&s).trace(), int(expected), "lam={lam} s={g}");
                }
            }
        }
    }

    #[test]
    fn induced_matrices_are_a_representation() {
        for n in 1..=3 {
            let group = enumerate_bn(n);
            for bp in enumerate_bipartitions(n).unwrap() {
                let rep = InducedRep::new(n, &bp).unwrap();
                assert_eq!(rep.matrix(&GroupElement::identity()).unwrap(), RatMatrix::identity(rep.dim()));
                for g in group.iter().step_by(3) {
                    for h in group.iter().step_by(5) {
                        let lhs = rep.matrix(&g.multiply(h)).unwrap();
                        let rhs = &rep.matrix(g).unwrap() * &rep.matrix(h).unwrap();
                        assert_eq!(lhs, rhs, "bp={bp} g={g} h={h}");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let b = Bipartition::new(p(&[1]), p(&[1]));
        assert_eq!(oracle_trace(2, &b, &GroupElement::identity()).unwrap(), int(2));
        assert_eq!(oracle_trace(2, &b, &"e;signs=1".parse().unwrap()).unwrap(), int(0));
        let b = Bipartition::new(p(&[2]), p(&[1]));
        let g: GroupElement = "(1 2)".parse().unwrap();
        let frob = induced_character_at(3, &b, &g, &mut MnCache::new()).unwrap();
        assert_eq!(oracle_trace(3, &b, &g).unwrap(), int(frob));
        assert!(oracle_trace(6, &Bipartition::new(p(&[6]), Partition::empty()), &g).is_err());
    }

    #[test]
    fn oracle_matches_frobenius_sum_through_rank_three() {
        let mut cache = MnCache::new();
        for n in 1..=3 {
            for bp in enumerate_bipartitions(n).unwrap() {
                for cls in bn_classes(n).unwrap() {
                    let g = cls.representative();
                    let frob = induced_character_at(n, &bp, &g, &mut cache).unwrap();
                    assert_eq!(oracle_trace(n, &bp, &g).unwrap(), int(frob));
                }
            }
        }
    }
}
