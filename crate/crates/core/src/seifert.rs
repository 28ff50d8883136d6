//! Representation classes of Seifert fibered double branched covers, in terms
//! of rotation numbers.
//!
//! With `π₁Y = ⟨x₁,…,xₙ,h | h central, xᵢ^{aᵢ} = εᵢ·h^{−bᵢ}, x₁⋯xₙ = 1⟩` an
//! irreducible SU(2) representation sends `h` to `(−1)^m` and `xᵢ` to a
//! conjugate of `exp(iπℓᵢ/aᵢ)` with `0 < ℓᵢ < aᵢ`. The relator forces
//! `ℓᵢ ≡ m·bᵢ + tᵢ (mod 2)` where `εᵢ = (−1)^{tᵢ}`, and for three fibers the
//! product relation is solvable by non-commuting elements exactly when the
//! angles `θᵢ = πℓᵢ/aᵢ` satisfy the strict spherical triangle inequalities.

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::{mod_inverse, Rational};
use crate::covers::{is_homology_s1xs2, seifert_h1_order, SeifertData, SeifertPair};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepKind {
    Irreducible,
    ReducibleNontrivial,
    Trivial,
}

/// A representation class: central sign `ρ(h) = (−1)^m` plus one rotation
/// number per exceptional fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RotationRep {
    pub m: u8,
    pub ells: Vec<i64>,
    pub kind: RepKind,
}

/// Signs `εᵢ` on the relators `xᵢ^{aᵢ} = εᵢ·h^{−bᵢ}`, one per Seifert pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistMask {
    signs: Vec<i8>,
}

impl TwistMask {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::BadTwistMask(format!("entries must be ±1, got {signs:?}")));
        }
        Ok(Self { signs })
    }

    pub fn untwisted(n: usize) -> Self {
        Self { signs: vec![1; n] }
    }

    /// Single −1 on pair `i` out of `n`.
    pub fn single(n: usize, i: usize) -> Self {
        let mut signs = vec![1; n];
        signs[i] = -1;
        Self { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// Exceptional fibers after absorbing `(1, b)` pairs, with twist parities
/// carried along (`xⱼ ↦ xⱼ·x` multiplies the j-th relator sign by `ε^{aⱼ}`).
fn absorbed(s: &SeifertData, twist: &TwistMask) -> Result<(Vec<SeifertPair>, Vec<u8>)> {
    if twist.signs.len() != s.pairs().len() {
        return Err(Error::BadTwistMask(format!(
            "{} signs for {} Seifert pairs",
            twist.signs.len(),
            s.pairs().len()
        )));
    }
    let mut fibers = Vec::new();
    let mut parities = Vec::new();
    let (mut shift, mut trivial_twist) = (0i64, 0u8);
    for (p, &sign) in s.pairs().iter().zip(&twist.signs) {
        let t = (sign == -1) as u8;
        if p.a == 1 {
            shift += p.b;
            trivial_twist ^= t;
        } else {
            fibers.push(*p);
            parities.push(t);
        }
    }
    if let Some(first) = fibers.first_mut() {
        first.b += shift * first.a;
        parities[0] ^= trivial_twist & (first.a % 2) as u8;
    } else if trivial_twist == 1 {
        // ⟨x, h | x = −h^{−b}, x = 1⟩ forces −1 = h^b; no irreducibles either way
        return Ok((fibers, vec![]));
    }
    Ok((fibers, parities))
}

/// Strict spherical triangle inequality on `θᵢ = π·ℓᵢ/aᵢ`, compared exactly.
fn spherical_triangle(fibers: &[SeifertPair], ells: &[i64]) -> bool {
    let x: Vec<Rational> = fibers.iter().zip(ells).map(|(f, &l)| Rational::new(l, f.a)).collect();
    let two = Rational::from_integer(2);
    (x[0] - x[1]).abs() < x[2] && x[2] < (x[0] + x[1]).min(two - x[0] - x[1])
}

/// SU(2) classes for three exceptional fibers with relator parities `t`.
fn su2_classes(fibers: &[SeifertPair], t: &[u8]) -> Vec<RotationRep> {
    debug_assert_eq!(fibers.len(), 3);
    let mut out = Vec::new();
    for m in 0..2u8 {
        let range = |i: usize| {
            let want = (m as i64 * fibers[i].b + t[i] as i64).rem_euclid(2);
            (1..fibers[i].a).filter(move |l| l % 2 == want)
        };
        for l1 in range(0) {
            for l2 in range(1) {
                for l3 in range(2) {
                    let ells = [l1, l2, l3];
                    if spherical_triangle(fibers, &ells) {
                        out.push(RotationRep { m, ells: ells.to_vec(), kind: RepKind::Irreducible });
                    }
                }
            }
        }
    }
    out
}

/// Irreducible SU(2) classes for arbitrary relator signs: the shared engine
/// behind [`enumerate_irreducibles`] and [`enumerate_projective`].
///
/// Covers with at most two exceptional fibers have no irreducibles; four or
/// more are unsupported.
pub fn enumerate_twisted(s: &SeifertData, twist: &TwistMask) -> Result<Vec<RotationRep>> {
    let (fibers, t) = absorbed(s, twist)?;
    match fibers.len() {
        0..=2 => Ok(vec![]),
        3 => Ok(su2_classes(&fibers, &t)),
        n => Err(Error::UnsupportedFiberCount(n)),
    }
}

/// Irreducible SU(2) classes of `π₁Y`.
pub fn enumerate_irreducibles(s: &SeifertData) -> Result<Vec<RotationRep>> {
    enumerate_twisted(s, &TwistMask::untwisted(s.pairs().len()))
}

/// Seifert invariants of the Brieskorn sphere `Σ(p,q,r)` with `e = 1/(pqr)`.
pub fn brieskorn_data(p: i64, q: i64, r: i64) -> Result<SeifertData> {
    for &x in &[p, q, r] {
        if x < 1 {
            return Err(Error::InvalidInput(format!("Brieskorn exponent {x} must be positive")));
        }
    }
    for &(x, y) in &[(p, q), (p, r), (q, r)] {
        if x.gcd(&y) != 1 {
            return Err(Error::NotCoprime { a: x, b: y });
        }
    }
    let inv = |x: i64, n: i64| if n == 1 { Ok(0) } else { mod_inverse(x, n) };
    let b1 = inv(q * r, p)?;
    let b2 = inv(p * r, q)?;
    let rest = 1 - b1 * q * r - b2 * p * r;
    debug_assert_eq!(rest % (p * q), 0);
    let b3 = rest / (p * q);
    SeifertData::new(&[(p, b1), (q, b2), (r, b3)])
}

/// Casson invariant of `Σ(p,q,r)`: minus half the number of irreducible SU(2)
/// classes.
pub fn casson(p: i64, q: i64, r: i64) -> Result<i64> {
    let n = enumerate_irreducibles(&brieskorn_data(p, q, r)?)?.len() as i64;
    debug_assert!(n % 2 == 0, "odd irreducible count {n} for Σ({p},{q},{r})");
    Ok(-n / 2)
}

/// A non-trivial character `H₁(Y) → ℚ/ℤ` up to inversion, i.e. a non-trivial
/// reducible SO(3) class when `|H₁|` is odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleClass {
    /// `|H₁(Y)|`; the character values below are numerators over this.
    pub order: u64,
    pub h_value: i64,
    pub fiber_values: Vec<i64>,
    /// Exceptional fibers (after absorbing `(1,b)` pairs) this class refers to.
    pub fibers: Vec<SeifertPair>,
}

impl ReducibleClass {
    /// Rotation number `cᵢ` with `xᵢ ↦ exp(2πi·cᵢ/aᵢ)`, available when `h ↦ 1`.
    pub fn fiber_rotation(&self, i: usize) -> Option<i64> {
        if self.h_value != 0 {
            return None;
        }
        let (a, d) = (self.fibers[i].a as i128, self.order as i128);
        let num = self.fiber_values[i] as i128 * a;
        debug_assert_eq!(num % d, 0);
        Some((num / d).rem_euclid(a) as i64)
    }

    pub fn as_rotation_rep(&self) -> RotationRep {
        let ells = (0..self.fibers.len()).map(|i| self.fiber_rotation(i).unwrap_or(-1)).collect();
        RotationRep { m: 0, ells, kind: RepKind::ReducibleNontrivial }
    }
}

/// Non-trivial reducible SO(3) classes, one per character pair `{χ, χ⁻¹}`.
pub fn reducible_classes(s: &SeifertData) -> Result<Vec<ReducibleClass>> {
    let d = match seifert_h1_order(s) {
        0 => return Err(Error::InfiniteH1),
        d if d % 2 == 0 => return Err(Error::EvenOrder(d)),
        d => d,
    };
    let fibers: Vec<SeifertPair> = s.absorb_trivial_fibers().exceptional().collect();
    let di = d as i64;
    let mut chars: Vec<(i64, Vec<i64>)> = Vec::new();
    for h in 0..di {
        let options: Vec<Vec<i64>> = fibers
            .iter()
            .map(|f| (0..di).filter(|x| (f.a * x + f.b * h).rem_euclid(di) == 0).collect())
            .collect();
        let mut stack = vec![(0usize, Vec::new())];
        while let Some((i, xs)) = stack.pop() {
            if i == fibers.len() {
                if xs.iter().sum::<i64>().rem_euclid(di) == 0 {
                    chars.push((h, xs));
                }
                continue;
            }
            for &x in &options[i] {
                let mut next = xs.clone();
                next.push(x);
                stack.push((i + 1, next));
            }
        }
    }
    debug_assert_eq!(chars.len() as u64, d, "Hom(H₁, ℚ/ℤ) must have |H₁| elements");
    let neg = |(h, xs): &(i64, Vec<i64>)| ((-h).rem_euclid(di), xs.iter().map(|x| (-x).rem_euclid(di)).collect::<Vec<_>>());
    let mut classes: Vec<ReducibleClass> = chars
        .iter()
        .filter(|c| c.0 != 0 || c.1.iter().any(|&x| x != 0))
        .filter(|c| **c <= neg(c))
        .map(|(h, xs)| ReducibleClass { order: d, h_value: *h, fiber_values: xs.clone(), fibers: fibers.clone() })
        .collect();
    classes.sort_by(|a, b| (a.h_value, &a.fiber_values).cmp(&(b.h_value, &b.fiber_values)));
    debug_assert_eq!(classes.len() as u64, (d - 1) / 2);
    Ok(classes)
}

/// Number of non-trivial reducible SO(3) classes, `(|H₁| − 1)/2`.
pub fn enumerate_reducibles(s: &SeifertData) -> Result<u64> {
    Ok(reducible_classes(s)?.len() as u64)
}

/// A homomorphism `π₁Y → ℤ/2`: `xᵢ ↦ sᵢ`, `h ↦ c`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Z2Character {
    s: Vec<u8>,
    c: u8,
}

/// Non-trivial elements of `H¹(Y; ℤ/2)` on the exceptional-fiber presentation.
fn z2_characters(fibers: &[SeifertPair]) -> Vec<Z2Character> {
    let n = fibers.len();
    (1u32..1 << (n + 1))
        .map(|mask| Z2Character {
            s: (0..n).map(|i| ((mask >> i) & 1) as u8).collect(),
            c: ((mask >> n) & 1) as u8,
        })
        .filter(|ch| {
            ch.s.iter().map(|&x| x as u32).sum::<u32>() % 2 == 0
                && fibers
                    .iter()
                    .zip(&ch.s)
                    .all(|(f, &si)| (f.a * si as i64 + f.b * ch.c as i64).rem_euclid(2) == 0)
        })
        .collect()
}

/// Whether relator parities `t` are a coboundary, i.e. removable by
/// `xᵢ ↦ ±xᵢ` (even number of flips) and `h ↦ ±h`.
fn twist_is_trivial(fibers: &[SeifertPair], t: &[u8]) -> bool {
    let n = fibers.len();
    (0u32..1 << (n + 1)).any(|mask| {
        let c = ((mask >> n) & 1) as i64;
        let s: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
        s.iter().sum::<i64>() % 2 == 0
            && (0..n).all(|i| (s[i] * fibers[i].a + c * fibers[i].b - t[i] as i64).rem_euclid(2) == 0)
    })
}

fn act(ch: &Z2Character, fibers: &[SeifertPair], rep: &RotationRep) -> RotationRep {
    RotationRep {
        m: rep.m ^ ch.c,
        ells: rep
            .ells
            .iter()
            .zip(fibers)
            .zip(&ch.s)
            .map(|((&l, f), &s)| if s == 1 { f.a - l } else { l })
            .collect(),
        kind: rep.kind,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveEnumeration {
    pub su2_classes: Vec<RotationRep>,
    /// One representative per `H¹(Y;ℤ/2)` orbit, i.e. per SO(3) class `Ad ρ`.
    pub so3_classes: Vec<RotationRep>,
}

/// Projective SU(2) representations of a homology `S¹×S²` cover whose adjoint
/// SO(3) representations carry non-trivial `w₂`, and their SO(3) classes.
pub fn enumerate_projective(s: &SeifertData, twist: &TwistMask) -> Result<ProjectiveEnumeration> {
    if !is_homology_s1xs2(s) {
        return Err(Error::NotHomologyS1xS2(seifert_h1_order(s)));
    }
    let flips = twist.signs.iter().filter(|&&x| x == -1).count();
    if flips != 1 {
        return Err(Error::BadTwistMask(format!("expected exactly one −1 entry, got {flips}")));
    }
    let (fibers, t) = absorbed(s, twist)?;
    if fibers.len() != 3 {
        return Err(Error::UnsupportedFiberCount(fibers.len()));
    }
    if twist_is_trivial(&fibers, &t) {
        return Err(Error::BadTwistMask("twist is cohomologically trivial (w₂ = 0)".into()));
    }
    let su2 = su2_classes(&fibers, &t);
    let characters = z2_characters(&fibers);
    let mut seen = std::collections::BTreeSet::new();
    let mut so3 = Vec::new();
    for rep in &su2 {
        if seen.contains(rep) {
            continue;
        }
        let mut orbit = vec![rep.clone()];
        let mut i = 0;
        while i < orbit.len() {
            for ch in &characters {
                let image = act(ch, &fibers, &orbit[i]);
                if !orbit.contains(&image) {
                    orbit.push(image);
                }
            }
            i += 1;
        }
        orbit.sort();
        so3.push(orbit[0].clone());
        seen.extend(orbit);
    }
    Ok(ProjectiveEnumeration { su2_classes: su2, so3_classes: so3 })
}

/// Index of a fiber on which a single twist gives non-trivial `w₂`, preferring
/// the fiber with the largest even multiplicity.
pub fn default_twist(s: &SeifertData) -> Result<TwistMask> {
    let n = s.pairs().len();
    let mut order: Vec<usize> = (0..n).filter(|&i| s.pairs()[i].a > 1).collect();
    order.sort_by_key(|&i| (s.pairs()[i].a % 2, -s.pairs()[i].a));
    for i in order {
        let mask = TwistMask::single(n, i);
        let (fibers, t) = absorbed(s, &mask)?;
        if fibers.len() == 3 && !twist_is_trivial(&fibers, &t) {
            return Ok(mask);
        }
    }
    Err(Error::BadTwistMask(format!("no single-fiber twist of {s} has non-trivial w₂")))
}
