//! Seeded exact generators for the classical groups.
//!
//! Elements are built so membership holds by construction: Sp(m) from
//! products of `diag(A, A⁻ᵀ)`, `[[I, S], [0, I]]` and `[[I, 0], [S, I]]` with
//! `S` symmetric, SO(n) from the Cayley transform `(I + K)(I − K)⁻¹` of a
//! skew `K`. All random entries are small Gaussian integers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ClassicalGroup, GroupElement};
use crate::linalg::{CycScalar, ExactMatrix};

const ENTRY_BOUND: i64 = 1;

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> CycScalar {
    CycScalar::gaussian(
        rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND),
        rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND),
    )
}

fn random_symmetric<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ExactMatrix {
    let mut s = ExactMatrix::zeros(n, n);
    for r in 0..n {
        for c in r..n {
            let v = gaussian(rng);
            s.set(c, r, v.clone());
            s.set(r, c, v);
        }
    }
    s
}

/// Unit lower triangular times unit upper triangular: determinant one, with
/// an inverse over the Gaussian integers.
fn random_unimodular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ExactMatrix {
    let mut lower = ExactMatrix::identity(n);
    let mut upper = ExactMatrix::identity(n);
    for r in 0..n {
        for c in 0..r {
            lower.set(r, c, gaussian(rng));
            upper.set(c, r, gaussian(rng));
        }
    }
    lower.mul(&upper).expect("square factors")
}

pub fn random_sp<R: Rng + ?Sized>(m: usize, rng: &mut R) -> GroupElement {
    let i = ExactMatrix::identity(m);
    let z = ExactMatrix::zeros(m, m);
    let a = random_unimodular(m, rng);
    let a_inv_t = a.inverse().expect("unimodular").transpose();
    let levi = ExactMatrix::block_diag(&[&a, &a_inv_t]);
    let s1 = random_symmetric(m, rng);
    let s2 = random_symmetric(m, rng);
    let upper = ExactMatrix::from_blocks(&[&[&i, &s1], &[&z, &i]]).expect("square blocks");
    let lower = ExactMatrix::from_blocks(&[&[&i, &z], &[&s2, &i]]).expect("square blocks");
    let mat = ExactMatrix::product(&[&levi, &upper, &lower]).expect("matching sizes");
    GroupElement::new_unchecked(mat, ClassicalGroup::Sp(m))
}

pub fn random_so<R: Rng + ?Sized>(n: usize, rng: &mut R) -> GroupElement {
    let id = ExactMatrix::identity(n);
    loop {
        let mut k = ExactMatrix::zeros(n, n);
        for r in 0..n {
            for c in r + 1..n {
                let v = gaussian(rng);
                k.set(c, r, -&v);
                k.set(r, c, v);
            }
        }
        // I − K can be singular over ℂ; draw again
        let Ok(inv) = id.sub(&k).expect("same shape").inverse() else {
            continue;
        };
        let q = id.add(&k).expect("same shape").mul(&inv).expect("square");
        return GroupElement::new_unchecked(q, ClassicalGroup::SO(n));
    }
}

/// Element of O(n); composed with a reflection on a fair coin flip.
pub fn random_o<R: Rng + ?Sized>(n: usize, rng: &mut R) -> GroupElement {
    let q = random_so(n, rng).into_matrix();
    let mat = if n > 0 && rng.random_bool(0.5) {
        let mut flip = ExactMatrix::identity(n);
        flip.set(n - 1, n - 1, CycScalar::from_int(-1));
        q.mul(&flip).expect("square")
    } else {
        q
    };
    GroupElement::new_unchecked(mat, ClassicalGroup::O(n))
}

/// Invertible `k × k` matrix with Gaussian integer entries.
pub fn random_gl<R: Rng + ?Sized>(k: usize, rng: &mut R) -> GroupElement {
    loop {
        let m = ExactMatrix::from_fn(k, k, |_, _| gaussian(rng));
        if !m.det().expect("square").is_zero() {
            return GroupElement::new_unchecked(m, ClassicalGroup::GL(k));
        }
    }
}

pub fn random_sp_seeded(m: usize, seed: u64) -> GroupElement {
    random_sp(m, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_so_seeded(n: usize, seed: u64) -> GroupElement {
    random_so(n, &mut ChaCha8Rng::seed_from_u64(seed))
}
