//! Seeded generators for elements and specs, shared by randomized tests and
//! the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classification::GammaCase;
use crate::elements::{GroupElement, Permutation, SignVector};
use crate::induced_states::RepSpec;
use crate::partitions::{enumerate_partitions, Bipartition, Partition};
use crate::rational::{int, ratio, Rational};
use crate::thoma::{Param, ThomaSpec};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random element of `B` supported on `points`.
pub fn random_element_on<R: Rng + ?Sized>(rng: &mut R, points: &[usize]) -> GroupElement {
    let mut images = points.to_vec();
    images.shuffle(rng);
    let map = points.iter().copied().zip(images).collect();
    let perm = Permutation::from_map(map).expect("a shuffle is a bijection");
    let signs = SignVector::from_indices(points.iter().copied().filter(|_| rng.gen_bool(0.5)));
    GroupElement::new(perm, signs)
}

/// A uniformly random element of `B_n`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GroupElement {
    let points: Vec<usize> = (1..=n).collect();
    random_element_on(rng, &points)
}

/// A random element of `B_n` whose support is a random subset of `[1, n]`,
/// so that small supports and fixed points are common.
pub fn random_sparse_element<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GroupElement {
    let points: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.6)).collect();
    random_element_on(rng, &points)
}

/// A random permutation of `[1, n]` preserving `[1, k]`.
pub fn random_block_permutation<R: Rng + ?Sized>(rng: &mut R, k: usize, n: usize) -> Permutation {
    let head: Vec<usize> = (1..=k).collect();
    let tail: Vec<usize> = (k + 1..=n).collect();
    let h = random_element_on(rng, &head).perm;
    let t = random_element_on(rng, &tail).perm;
    h.compose(&t)
}

/// A random valid spec in the given gamma case. All parameters are
/// multiples of `1/d` for a small random `d`, so repeated values and
/// repeated specs occur with useful frequency.
pub fn random_thoma<R: Rng + ?Sized>(rng: &mut R, case: GammaCase) -> ThomaSpec {
    let (need0, need1) = match case {
        GammaCase::BothPositive => (true, true),
        GammaCase::OnlyGamma1 => (false, true),
        GammaCase::OnlyGamma0 => (true, false),
        GammaCase::BothZero => (false, false),
    };
    let d: usize = rng.gen_range(2..=8);
    let fixed = usize::from(need0) + usize::from(need1);
    let room = d - fixed;
    let mut na = rng.gen_range(0..=room.min(3));
    let mut nb = rng.gen_range(0..=(room - na).min(3));
    if fixed == 0 && na + nb == 0 {
        if rng.gen_bool(0.5) {
            na = 1;
        } else {
            nb = 1;
        }
    }
    // one unit per slot, then scatter the rest over the slots
    let slots = na + nb + fixed;
    let mut units = vec![1usize; slots];
    for _ in 0..d - slots {
        let i = rng.gen_range(0..slots);
        units[i] += 1;
    }
    let mut it = units.into_iter();
    let mut params = |count: usize| -> Vec<Param> {
        (0..count)
            .map(|_| {
                let u = it.next().expect("slot");
                Param::new(ratio(u as i64, d as i64), rng.gen_bool(0.5))
            })
            .collect()
    };
    let alpha = params(na);
    let beta = params(nb);
    let mut gamma = |needed: bool| -> Rational {
        if needed {
            ratio(it.next().expect("slot") as i64, d as i64)
        } else {
            int(0)
        }
    };
    let g0 = gamma(need0);
    let g1 = gamma(need1);
    ThomaSpec::new(alpha, beta, g0, g1).expect("parameters sum to one by construction")
}

pub fn random_gamma_case<R: Rng + ?Sized>(rng: &mut R) -> GammaCase {
    *GammaCase::ALL.choose(rng).expect("nonempty")
}

pub fn random_partition<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Partition {
    enumerate_partitions(n)
        .expect("small weight")
        .choose(rng)
        .cloned()
        .expect("every weight has a partition")
}

pub fn random_bipartition<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Bipartition {
    let k = rng.gen_range(0..=n);
    Bipartition::new(random_partition(rng, k), random_partition(rng, n - k))
}

pub fn random_rep_spec<R: Rng + ?Sized>(rng: &mut R, max_n: usize, case: GammaCase) -> RepSpec {
    let n = rng.gen_range(0..=max_n);
    let bp = random_bipartition(rng, n);
    RepSpec::new(n, bp, random_thoma(rng, case)).expect("weights agree")
}
