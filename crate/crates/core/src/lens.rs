//! Reducible SO(3) representations of lens spaces and the lattice-count
//! formula for `ind 𝒟_B(β, θ) + 1 (mod 8)`.
//!
//! A [`LensRep`] carries the parameter `q` exactly as it enters the counting
//! formula. Callers holding a lens space label `L(p, q)` in the usual
//! two-bridge / Seifert sense pass `q⁻¹ mod p` (see [`LensRep::from_label`]).

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::mod_inverse;
use crate::error::{Error, Result};

/// The representation of `π₁ L(p, q) = ℤ/p` sending the canonical generator to
/// the adjoint of `exp(2πiℓ/p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensRep {
    pub p: i64,
    pub q: i64,
    pub ell: i64,
}

impl LensRep {
    pub fn new(p: i64, q: i64, ell: i64) -> Result<Self> {
        if p < 3 || p % 2 == 0 {
            return Err(Error::InvalidInput(format!("lens space order {p} must be odd and > 1")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { a: p, b: q });
        }
        let ell = normalize_ell(p, ell);
        if ell == 0 {
            return Err(Error::InvalidInput(format!("ℓ ≡ 0 (mod {p}) is the trivial representation")));
        }
        Ok(Self { p, q: q.rem_euclid(p), ell })
    }

    /// Representation of the lens space labelled `L(p, label_q)`; the counting
    /// parameter is `label_q⁻¹ mod p`.
    pub fn from_label(p: i64, label_q: i64, ell: i64) -> Result<Self> {
        let q = mod_inverse(label_q, p)?;
        Self::new(p, q, ell)
    }
}

/// ℓ and −ℓ are conjugate in SO(3); representative in `0..=(p−1)/2`.
pub fn normalize_ell(p: i64, ell: i64) -> i64 {
    let e = ell.rem_euclid(p);
    e.min(p - e)
}

/// All non-trivial reducible classes `ℓ = 1 … (p−1)/2` for the counting parameter `q`.
pub fn lens_reps(p: i64, q: i64) -> Result<Vec<LensRep>> {
    LensRep::new(p, q, 1)?;
    (1..=(p - 1) / 2).map(|ell| LensRep::new(p, q, ell)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SasahiraCounts {
    pub k1: i64,
    pub k2: i64,
    pub n1: u64,
    pub n2: u64,
}

impl SasahiraCounts {
    pub fn index_plus_one(&self) -> u8 {
        ((2 * self.n1 + self.n2) % 8) as u8
    }
}

/// Lattice counts on the line `i + qj ≡ 0 (mod p)` by enumeration of the
/// rectangle `|i| ≤ k₁, |j| ≤ k₂`.
pub fn sasahira_counts(rep: &LensRep) -> SasahiraCounts {
    let LensRep { p, q, ell } = *rep;
    let r = mod_inverse(q, p).expect("LensRep invariant: gcd(p, q) = 1");
    let k1 = ell.rem_euclid(p);
    let k2 = (-r * ell).rem_euclid(p);
    let (mut n1, mut n2) = (0, 0);
    for i in -k1..=k1 {
        for j in -k2..=k2 {
            if (i + q * j).rem_euclid(p) != 0 {
                continue;
            }
            let (ei, ej) = (i.abs() == k1, j.abs() == k2);
            match (ei, ej) {
                (false, false) => n1 += 1,
                (true, false) | (false, true) => n2 += 1,
                (true, true) => {}
            }
        }
    }
    SasahiraCounts { k1, k2, n1, n2 }
}

/// `ind 𝒟_B(β, θ) + 1 (mod 8)`; always even.
pub fn lens_index_plus_one(rep: &LensRep) -> u8 {
    let v = sasahira_counts(rep).index_plus_one();
    assert!(v.is_multiple_of(2), "odd lattice index for {rep:?}");
    v
}

/// Morse–Bott index `μ = ½(ind 𝒟_B + 1) + sign k (mod 4)` of the circle coming
/// from a reducible lens space representation.
pub fn morse_bott_index(rep: &LensRep, sign_k: i64) -> Result<u8> {
    if sign_k % 2 != 0 {
        return Err(Error::OddSignature(sign_k));
    }
    Ok(((lens_index_plus_one(rep) / 2) as i64 + sign_k).rem_euclid(4) as u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reps() {
        let ells = |p, q| lens_reps(p, q).unwrap().into_iter().map(|r| r.ell).collect::<Vec<_>>();
        assert_eq!(ells(5, 3), vec![1, 2]);
        assert_eq!(ells(3, 2), vec![1]);
        assert_eq!(ells(7, 1), vec![1, 2, 3]);
        assert!(lens_reps(4, 1).is_err());
        assert!(lens_reps(9, 3).is_err());
    }

    #[test]
    fn figure_eight_counts() {
        let c = sasahira_counts(&LensRep::new(5, 2, 1).unwrap());
        assert_eq!(c, SasahiraCounts { k1: 1, k2: 2, n1: 1, n2: 0 });
        let c = sasahira_counts(&LensRep::new(5, 2, 2).unwrap());
        assert_eq!(c, SasahiraCounts { k1: 2, k2: 4, n1: 5, n2: 2 });
        assert_eq!(c.index_plus_one(), 4);
        // the label L(5,3) of the figure-eight cover maps to counting parameter 2
        assert_eq!(LensRep::from_label(5, 3, 1).unwrap().q, 2);
    }

    #[test]
    fn l32_counts() {
        let c = sasahira_counts(&LensRep::new(3, 2, 1).unwrap());
        assert_eq!(c, SasahiraCounts { k1: 1, k2: 1, n1: 1, n2: 0 });
        assert_eq!(lens_index_plus_one(&LensRep::new(3, 2, 1).unwrap()), 2);
        assert_eq!(lens_index_plus_one(&LensRep::new(3, 1, 1).unwrap()), 4);
    }

    #[test]
    fn index_examples() {
        let idx = |p, q, l| lens_index_plus_one(&LensRep::new(p, q, l).unwrap());
        assert_eq!(idx(5, 2, 1), 2);
        assert_eq!(idx(5, 2, 2), 4);
        assert_eq!(idx(3, 2, 1), 2);
        // other parameterization of the same lens space swaps the pairing
        assert_eq!(idx(5, 3, 1), 4);
        assert_eq!(idx(5, 3, 2), 2);
    }

    #[test]
    fn morse_bott_examples() {
        let mb = |p, q, l, s| morse_bott_index(&LensRep::new(p, q, l).unwrap(), s);
        assert_eq!(mb(5, 2, 1, 0), Ok(1));
        assert_eq!(mb(5, 2, 2, 0), Ok(2));
        assert_eq!(mb(3, 2, 1, 0), Ok(1));
        assert_eq!(mb(3, 2, 1, -6), Ok(3));
        assert_eq!(mb(3, 2, 1, 1), Err(Error::OddSignature(1)));
    }

    #[test]
    fn index_is_even_exhaustive() {
        for p in (3..=199i64).step_by(2) {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for rep in lens_reps(p, q).unwrap() {
                    let c = sasahira_counts(&rep);
                    assert!(c.n1 >= 1);
                    assert_eq!((2 * c.n1 + c.n2) % 2, 0, "{rep:?}");
                }
            }
        }
    }

    #[test]
    fn index_multiset_invariant_under_inverse() {
        for p in (3..=61i64).step_by(2) {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let multiset = |q| {
                    let mut v: Vec<u8> = lens_reps(p, q).unwrap().iter().map(lens_index_plus_one).collect();
                    v.sort();
                    v
                };
                assert_eq!(multiset(q), multiset(mod_inverse(q, p).unwrap()), "L({p},{q})");
            }
        }
    }
}
