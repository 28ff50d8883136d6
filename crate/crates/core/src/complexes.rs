//! Assembly of Floer chain data: graded generator multisets and rank vectors.
//!
//! Multiplicities follow the orbit structure of the generators: the trivial
//! representation gives the single special generator, a reducible
//! (dihedral) class gives one Morse–Bott circle perturbing to generators at
//! `μ` and `μ + 1`, and an irreducible class gives two circles of equal index,
//! i.e. two generators at `μ` and two at `μ + 1`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{mod_inverse, second_derivative_at_one, LaurentPoly};
use crate::covers::{check_flat_cobordism, is_homology_s1xs2, seifert_h1_order, SeifertData};
use crate::error::{Error, Result};
use crate::lens::{lens_index_plus_one, lens_reps, morse_bott_index, LensRep};
use crate::seifert::{
    brieskorn_data, casson, default_twist, enumerate_irreducibles, enumerate_projective, reducible_classes,
    TwistMask,
};
use crate::signatures::{torus_signature, two_bridge_signature};

/// A residue mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Z4(u8);

impl Z4 {
    pub fn new(v: i64) -> Self {
        Z4(v.rem_euclid(4) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn succ(self) -> Self {
        Z4::new(self.0 as i64 + 1)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "id", rename_all = "snake_case")]
pub enum Origin {
    Special,
    Reducible(usize),
    Irreducible(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    /// `None` when the grading is not determined.
    pub grading: Option<Z4>,
    pub multiplicity: u64,
    pub origin: Origin,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedGenerators {
    entries: Vec<Generator>,
}

impl GradedGenerators {
    pub fn entries(&self) -> &[Generator] {
        &self.entries
    }

    fn push(&mut self, grading: Option<Z4>, multiplicity: u64, origin: Origin) {
        self.entries.push(Generator { grading, multiplicity, origin });
    }

    /// One perturbed Morse–Bott circle of index `μ`.
    fn push_circle(&mut self, mu: Z4, origin: Origin) {
        self.push(Some(mu), 1, origin);
        self.push(Some(mu.succ()), 1, origin);
    }

    /// Two Morse–Bott circles of the same index `μ`.
    fn push_circle_pair(&mut self, mu: Z4, origin: Origin) {
        self.push(Some(mu), 2, origin);
        self.push(Some(mu.succ()), 2, origin);
    }

    /// Ranks of the generators whose grading is known.
    pub fn known_ranks(&self) -> [u64; 4] {
        let mut r = [0; 4];
        for g in &self.entries {
            if let Some(z) = g.grading {
                r[z.value() as usize] += g.multiplicity;
            }
        }
        r
    }

    pub fn unknown(&self) -> u64 {
        self.entries.iter().filter(|g| g.grading.is_none()).map(|g| g.multiplicity).sum()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|g| g.multiplicity).sum()
    }

    pub fn special_count(&self) -> usize {
        self.entries.iter().filter(|g| g.origin == Origin::Special).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchoring {
    Absolute,
    #[serde(rename = "cyclic")]
    UpToCyclicPermutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRanks {
    pub ranks: [u64; 4],
    pub anchoring: Anchoring,
    pub conjectural: bool,
}

impl ChainRanks {
    pub fn absolute(ranks: [u64; 4]) -> Self {
        Self { ranks, anchoring: Anchoring::Absolute, conjectural: false }
    }

    /// Cyclically anchored ranks, stored as the lexicographically smallest
    /// rotation among those starting with a non-zero entry.
    pub fn cyclic(ranks: [u64; 4]) -> Self {
        Self { ranks: canonical_rotation(ranks), anchoring: Anchoring::UpToCyclicPermutation, conjectural: false }
    }

    pub fn total(&self) -> u64 {
        self.ranks.iter().sum()
    }

    /// Equality respecting the anchoring: cyclic ranks compare up to rotation.
    pub fn matches(&self, expected: [u64; 4]) -> bool {
        match self.anchoring {
            Anchoring::Absolute => self.ranks == expected,
            Anchoring::UpToCyclicPermutation => canonical_rotation(expected) == self.ranks,
        }
    }
}

pub fn canonical_rotation(r: [u64; 4]) -> [u64; 4] {
    (0..4)
        .map(|k| [r[k], r[(k + 1) % 4], r[(k + 2) % 4], r[(k + 3) % 4]])
        .filter(|v| v[0] != 0)
        .min()
        .unwrap_or(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCharacteristic {
    pub value: i64,
    pub up_to_sign: bool,
}

/// `r₀ − r₁ + r₂ − r₃`; only defined up to sign for cyclic anchoring.
pub fn euler_characteristic(c: &ChainRanks) -> EulerCharacteristic {
    let r = c.ranks.map(|x| x as i64);
    EulerCharacteristic {
        value: r[0] - r[1] + r[2] - r[3],
        up_to_sign: c.anchoring == Anchoring::UpToCyclicPermutation,
    }
}

/// Conditions under which the output is partial or rests on an inferred or
/// conjectural input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Warning {
    UnknownGradings { generators: u64 },
    EvenFiberGrading { class: usize },
    AmbiguousSplit { candidates: usize },
    InferredLk { lk: i64 },
    EulerSplitConvention,
    AlexanderMismatch { classes: u64, lambda_prime: i64 },
    Conjectural,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::UnknownGradings { generators } => {
                write!(f, "unknown gradings: {generators} generators have undetermined grading")
            }
            Warning::EvenFiberGrading { class } => write!(
                f,
                "unknown grading: reducible class {class} is non-trivial on an even multiplicity fiber"
            ),
            Warning::AmbiguousSplit { candidates } => {
                write!(f, "ambiguous split: {candidates} rank candidates, supply the linking number")
            }
            Warning::InferredLk { lk } => write!(f, "inferred lk: |lk| = {} was inferred, not given", lk.abs()),
            Warning::EulerSplitConvention => write!(
                f,
                "split uses 4(n1 - n3) = ±lk from the Euler characteristic; the identity -n1 + n3 = ±lk differs by a factor of 4"
            ),
            Warning::AlexanderMismatch { classes, lambda_prime } => write!(
                f,
                "alexander mismatch: {classes} projective classes but -lambda' = {}",
                -lambda_prime
            ),
            Warning::Conjectural => write!(f, "conjectural: only the total rank is certified"),
        }
    }
}

/// Common output of every pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloerChains {
    pub generators: GradedGenerators,
    /// `None` when gradings are only partially known.
    pub ranks: Option<ChainRanks>,
    pub warnings: Vec<Warning>,
    /// Set when the differential provably vanishes, so the ranks are also
    /// the ranks of Floer homology.
    pub homology_equals_chains: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensCircle {
    pub ell: i64,
    pub index_plus_one: u8,
    pub mu: Z4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBridgeComplex {
    pub signature: i64,
    pub circles: Vec<LensCircle>,
    pub chains: FloerChains,
}

/// `IC♮` of the two-bridge knot of type `−p/q`; the double cover is the lens
/// space labelled `L(p, q)`.
pub fn two_bridge_complex(p: i64, q: i64) -> Result<TwoBridgeComplex> {
    if p < 1 || p % 2 == 0 {
        return Err(Error::InvalidInput(format!("p = {p} must be odd and positive")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    let signature = two_bridge_signature(p, q)?;
    let mut generators = GradedGenerators::default();
    generators.push(Some(Z4::new(signature)), 1, Origin::Special);
    let mut circles = Vec::new();
    if p > 1 {
        let q_count = mod_inverse(q, p)?;
        for rep in lens_reps(p, q_count)? {
            let mu = Z4::new(morse_bott_index(&rep, signature)? as i64);
            generators.push_circle(mu, Origin::Reducible(circles.len()));
            circles.push(LensCircle { ell: rep.ell, index_plus_one: lens_index_plus_one(&rep), mu });
        }
    }
    let ranks = Some(ChainRanks::absolute(generators.known_ranks()));
    Ok(TwoBridgeComplex {
        signature,
        circles,
        chains: FloerChains { generators, ranks, warnings: vec![], homology_equals_chains: true },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialMontesinosComplex {
    pub casson: i64,
    pub irreducible_classes: u64,
    pub chains: FloerChains,
}

/// `IC♮(k(p,q,r))` with ranks `(1 + b, b, b, b)`, `b = −2λ(Σ(p,q,r))`.
pub fn special_montesinos_complex(p: i64, q: i64, r: i64) -> Result<SpecialMontesinosComplex> {
    let lambda = casson(p, q, r)?;
    let b = (-2 * lambda) as u64;
    let mut generators = GradedGenerators::default();
    generators.push(Some(Z4::new(0)), 1, Origin::Special);
    for i in 0..b as usize {
        generators.push(None, 4, Origin::Irreducible(i));
    }
    let ranks = Some(ChainRanks::absolute([1 + b, b, b, b]));
    Ok(SpecialMontesinosComplex {
        casson: lambda,
        irreducible_classes: b,
        chains: FloerChains { generators, ranks, warnings: vec![], homology_equals_chains: false },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleGrading {
    /// `ind 𝒟_B(βᵢ, θ) + 1 (mod 8)` per exceptional fiber; `None` where `βᵢ` is trivial.
    pub fiber_index_plus_one: Vec<Option<u8>>,
    pub mu: Option<Z4>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MontesinosKnotComplex {
    pub h1_order: u64,
    pub special_grading: Z4,
    pub reducibles: Vec<ReducibleGrading>,
    pub irreducible_classes: u64,
    pub known_ranks: [u64; 4],
    pub chains: FloerChains,
}

/// Splits `pin` into `classes` blocks `2·e_μ + 2·e_{μ+1}`, returning the `μ`s.
fn decompose_irreducible_pin(pin: [u64; 4], classes: u64) -> Option<Vec<Z4>> {
    fn go(rest: [u64; 4], left: u64, from: u8, acc: &mut Vec<Z4>) -> bool {
        if left == 0 {
            return rest == [0; 4];
        }
        for mu in from..4 {
            let (i, j) = (mu as usize, ((mu + 1) % 4) as usize);
            if rest[i] >= 2 && rest[j] >= 2 {
                let mut next = rest;
                next[i] -= 2;
                next[j] -= 2;
                acc.push(Z4::new(mu as i64));
                if go(next, left - 1, mu, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    go(pin, classes, 0, &mut acc).then_some(acc)
}

/// `IC♮(k)` for a Montesinos knot `K((a₁,b₁),(a₂,b₂),(a₃,b₃))` whose Seifert
/// cobordism is flat.
///
/// Reducible gradings use `μ = sign k − 1 + ½ Σᵢ (ind 𝒟_B(βᵢ,θ) + 3)` over the
/// fibers where `βᵢ` is non-trivial (all of odd multiplicity). Irreducible
/// classes are placed only when the cover is a homology sphere (4-periodicity)
/// or when `irreducible_pin` supplies their total contribution.
pub fn montesinos_knot_complex(
    s: &SeifertData,
    sign_k: i64,
    irreducible_pin: Option<[u64; 4]>,
) -> Result<MontesinosKnotComplex> {
    if sign_k % 2 != 0 {
        return Err(Error::OddSignature(sign_k));
    }
    let fibers: Vec<_> = s.absorb_trivial_fibers().exceptional().collect();
    if fibers.len() > 3 {
        return Err(Error::UnsupportedFiberCount(fibers.len()));
    }
    let d = match seifert_h1_order(s) {
        0 => return Err(Error::InfiniteH1),
        d if d % 2 == 0 => return Err(Error::EvenOrder(d)),
        d => d,
    };
    check_flat_cobordism(s)?;

    let special_grading = Z4::new(sign_k);
    let mut generators = GradedGenerators::default();
    let mut warnings = Vec::new();
    generators.push(Some(special_grading), 1, Origin::Special);

    let mut reducibles = Vec::new();
    for (id, class) in reducible_classes(s)?.iter().enumerate() {
        let mut fiber_index_plus_one = Vec::new();
        let mut even_fiber = false;
        for (i, f) in class.fibers.iter().enumerate() {
            let c = class.fiber_rotation(i).expect("flat cobordism forces h ↦ 1");
            if c == 0 {
                fiber_index_plus_one.push(None);
            } else if f.a % 2 == 0 {
                even_fiber = true;
                fiber_index_plus_one.push(None);
            } else {
                let rep = LensRep::from_label(f.a, -f.b, c)?;
                fiber_index_plus_one.push(Some(lens_index_plus_one(&rep)));
            }
        }
        let mu = (!even_fiber).then(|| {
            let twice: i64 = fiber_index_plus_one.iter().flatten().map(|&v| v as i64 + 2).sum();
            debug_assert!(twice % 2 == 0);
            Z4::new(sign_k - 1 + twice / 2)
        });
        match mu {
            Some(mu) => generators.push_circle(mu, Origin::Reducible(id)),
            None => {
                warnings.push(Warning::EvenFiberGrading { class: id });
                generators.push(None, 2, Origin::Reducible(id));
            }
        }
        reducibles.push(ReducibleGrading { fiber_index_plus_one, mu });
    }
    let known_reducible = generators.known_ranks();

    let irreducible_classes = enumerate_irreducibles(s)?.len() as u64;
    let mut block = [0u64; 4];
    match irreducible_pin {
        Some(pin) => {
            let mus = decompose_irreducible_pin(pin, irreducible_classes).ok_or_else(|| {
                Error::InvalidPin(format!(
                    "{pin:?} is not a sum of {irreducible_classes} blocks of two generators at μ and two at μ+1"
                ))
            })?;
            for (id, mu) in mus.into_iter().enumerate() {
                generators.push_circle_pair(mu, Origin::Irreducible(id));
            }
        }
        None if d == 1 && irreducible_classes.is_multiple_of(2) => {
            // involutive pairs differ by 2 in grading: (2,2,2,2) per pair
            for id in 0..irreducible_classes as usize {
                generators.push(None, 4, Origin::Irreducible(id));
            }
            block = [irreducible_classes; 4];
        }
        None => {
            for id in 0..irreducible_classes as usize {
                generators.push(None, 4, Origin::Irreducible(id));
            }
        }
    }

    let known = generators.known_ranks();
    let unknown = generators.unknown() - block.iter().sum::<u64>();
    let ranks = if unknown == 0 {
        Some(ChainRanks::absolute([0, 1, 2, 3].map(|i| known[i] + block[i])))
    } else {
        warnings.push(Warning::UnknownGradings { generators: unknown });
        None
    };
    Ok(MontesinosKnotComplex {
        h1_order: d,
        special_grading,
        reducibles,
        irreducible_classes,
        known_ranks: known_reducible,
        chains: FloerChains { generators, ranks, warnings, homology_equals_chains: false },
    })
}

/// Seifert invariants `{(1,b₁), (p,b₂), (p,b₂), (r,b₃)}` of the double cover of
/// `T(p, 2r)`, with `b₁·pr + 2b₂·r + b₃·p = 1`.
pub fn torus_even_cover_data(p: i64, q: i64) -> Result<SeifertData> {
    if p < 3 || p % 2 == 0 || q < 2 || q % 2 != 0 {
        return Err(Error::InvalidInput(format!("T({p},{q}) needs odd p ≥ 3 and even q")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    let r = q / 2;
    let b2 = mod_inverse(2 * r, p)?;
    let b3 = if r == 1 { 0 } else { mod_inverse(p, r)? };
    let rest = 1 - 2 * b2 * r - b3 * p;
    debug_assert_eq!(rest % (p * r), 0);
    SeifertData::new(&[(1, rest / (p * r)), (p, b2), (p, b2), (r, b3)])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusComplex {
    pub signature: i64,
    pub a: u64,
    pub certified_total: u64,
    pub special_grading: Z4,
    /// Irreducible classes of `Σ(2,p,q)` by rotation-number enumeration.
    pub irreducible_classes: u64,
    pub chains: FloerChains,
}

/// `IC♮(T(p,q))` for odd coprime `p, q`: certified total rank `1 + 4a` with
/// `a = −σ/4`, and the conjectural ranks `(1 + a, a, a, a)`.
pub fn torus_complex(p: i64, q: i64) -> Result<TorusComplex> {
    if p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "torus_complex needs odd p, q ≥ 3, got ({p},{q}); use torus_even_cover_data for even q"
        )));
    }
    let signature = torus_signature(p, q)?;
    if signature % 8 != 0 {
        return Err(Error::NonIntegralA { p, q, signature });
    }
    let a = (-signature / 4) as u64;
    let irreducible_classes = enumerate_irreducibles(&brieskorn_data(2, p, q)?)?.len() as u64;
    let mut generators = GradedGenerators::default();
    generators.push(Some(Z4::new(signature)), 1, Origin::Special);
    for id in 0..a as usize {
        generators.push(None, 4, Origin::Irreducible(id));
    }
    let ranks = ChainRanks { ranks: [1 + a, a, a, a], anchoring: Anchoring::Absolute, conjectural: true };
    Ok(TorusComplex {
        signature,
        a,
        certified_total: 1 + 4 * a,
        special_grading: Z4::new(signature),
        irreducible_classes,
        chains: FloerChains {
            generators,
            ranks: Some(ranks),
            warnings: vec![Warning::Conjectural],
            homology_equals_chains: false,
        },
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinkOptions {
    pub lk: Option<i64>,
    pub lk_inferred: bool,
    /// Alexander polynomial of the knot whose 0-surgery is the cover.
    pub alexander: Option<LaurentPoly>,
    pub twist: Option<TwistMask>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MontesinosLinkComplex {
    pub su2_classes: u64,
    pub so3_classes: u64,
    /// `(n₁, n₃)` when determined.
    pub split: Option<(u64, u64)>,
    pub candidates: Vec<ChainRanks>,
    /// `λ′(M)` from the Alexander polynomial route, when supplied.
    pub lambda_prime: Option<i64>,
    pub chains: FloerChains,
}

/// `IC_*(S³, L)` for a two-component Montesinos link whose double cover is a
/// homology `S¹×S²`: ranks `(2n₁, 2n₃, 2n₁, 2n₃)` up to cyclic permutation with
/// `n₁ + n₃` the number of SO(3) classes with non-trivial `w₂`.
pub fn montesinos_link_complex(s: &SeifertData, opts: &LinkOptions) -> Result<MontesinosLinkComplex> {
    if !is_homology_s1xs2(s) {
        return Err(Error::NotHomologyS1xS2(seifert_h1_order(s)));
    }
    let twist = match &opts.twist {
        Some(t) => t.clone(),
        None => default_twist(s)?,
    };
    let proj = enumerate_projective(s, &twist)?;
    let n = proj.so3_classes.len() as u64;

    let mut warnings = Vec::new();
    let split_for = |d: u64| ((n + d) / 2, (n - d) / 2);
    let splits: Vec<(u64, u64)> = match opts.lk {
        Some(lk) => {
            let d = lk.unsigned_abs() / 4;
            if lk % 4 != 0 || d > n || !(n - d).is_multiple_of(2) {
                return Err(Error::InconsistentLk { lk, classes: n });
            }
            warnings.push(Warning::EulerSplitConvention);
            if opts.lk_inferred {
                warnings.push(Warning::InferredLk { lk });
            }
            vec![split_for(d)]
        }
        None => (0..=n).rev().filter(|d| (n - d).is_multiple_of(2)).map(split_for).collect(),
    };
    let candidates: Vec<ChainRanks> =
        splits.iter().map(|&(n1, n3)| ChainRanks::cyclic([2 * n1, 2 * n3, 2 * n1, 2 * n3])).collect();
    if candidates.len() > 1 {
        warnings.push(Warning::AmbiguousSplit { candidates: candidates.len() });
    }

    let lambda_prime = opts.alexander.as_ref().map(casson_from_alexander).transpose()?;
    if let Some(lp) = lambda_prime {
        if n as i64 != -lp {
            warnings.push(Warning::AlexanderMismatch { classes: n, lambda_prime: lp });
        }
    }

    let mut generators = GradedGenerators::default();
    for id in 0..n as usize {
        generators.push(None, 4, Origin::Irreducible(id));
    }
    let (split, ranks) = match splits.as_slice() {
        [one] => (Some(*one), Some(candidates[0])),
        _ => (None, None),
    };
    // generators confined to one parity: the differential vanishes
    let homology_equals_chains = matches!(split, Some((n1, n3)) if n1 == 0 || n3 == 0);
    Ok(MontesinosLinkComplex {
        su2_classes: proj.su2_classes.len() as u64,
        so3_classes: n,
        split,
        candidates,
        lambda_prime,
        chains: FloerChains { generators, ranks, warnings, homology_equals_chains },
    })
}

/// Casson invariant `λ′(M) = −½Δ″(1)` of the 0-surgery on a knot with
/// normalized Alexander polynomial `Δ`.
pub fn casson_from_alexander(delta: &LaurentPoly) -> Result<i64> {
    Ok(-second_derivative_at_one(delta)? / 2)
}

/// Symmetrized `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidInput(format!("torus parameters ({p},{q}) must be positive")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    let tm1 = |k: i64| LaurentPoly::from_terms([(k as i32, 1), (0, -1)]);
    let num = tm1(p * q).mul(&tm1(1));
    let den = tm1(p).mul(&tm1(q));
    let quot = num.div_exact(&den).expect("torus knot Alexander quotient is a polynomial");
    Ok(quot.symmetrized().expect("torus knot Alexander polynomial is symmetric"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(p: &[(i64, i64)]) -> SeifertData {
        SeifertData::new(p).unwrap()
    }

    #[test]
    fn figure_eight() {
        let c = two_bridge_complex(5, 3).unwrap();
        assert_eq!(c.signature, 0);
        assert_eq!(c.chains.ranks.unwrap().ranks, [1, 1, 2, 1]);
        let idx: Vec<_> = c.circles.iter().map(|c| (c.ell, c.index_plus_one, c.mu.value())).collect();
        assert_eq!(idx, vec![(1, 2, 1), (2, 4, 2)]);
    }

    #[test]
    fn trefoil_and_unknot() {
        let c = two_bridge_complex(3, 1).unwrap();
        assert_eq!(c.signature, -2);
        let r = c.chains.ranks.unwrap();
        assert_eq!(r.total(), 3);
        assert_eq!(euler_characteristic(&r).value, 1);
        // special at 2; L(3,1) has ind + 1 = 4, so the circle sits at μ = 2 − 2.
        // Mod 4 this is reduced Khovanov homology of the left-handed trefoil
        // (homological degrees 0, −2, −3).
        assert_eq!(r.ranks, [1, 1, 1, 0]);
        assert_eq!(two_bridge_complex(1, 1).unwrap().chains.ranks.unwrap().ranks, [1, 0, 0, 0]);
        assert!(two_bridge_complex(4, 1).is_err());
    }

    #[test]
    fn two_bridge_invariants() {
        for p in (3..=99i64).step_by(2) {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let c = two_bridge_complex(p, q).unwrap();
                let r = c.chains.ranks.unwrap();
                assert_eq!(r.total(), p as u64);
                assert_eq!(euler_characteristic(&r), EulerCharacteristic { value: 1, up_to_sign: false });
                assert_eq!(c.chains.generators.special_count(), 1);
            }
        }
    }

    #[test]
    fn special_montesinos() {
        assert_eq!(special_montesinos_complex(2, 3, 7).unwrap().chains.ranks.unwrap().ranks, [3, 2, 2, 2]);
        assert_eq!(special_montesinos_complex(2, 3, 5).unwrap().chains.ranks.unwrap().ranks, [3, 2, 2, 2]);
        assert_eq!(special_montesinos_complex(1, 1, 1).unwrap().chains.ranks.unwrap().ranks, [1, 0, 0, 0]);
        assert_eq!(special_montesinos_complex(2, 3, 11).unwrap().chains.ranks.unwrap().ranks, [5, 4, 4, 4]);
        assert!(matches!(special_montesinos_complex(3, 3, 5), Err(Error::NotCoprime { .. })));
        for (p, q, r) in [(2, 3, 7), (2, 5, 7), (3, 4, 5), (2, 3, 13)] {
            let c = special_montesinos_complex(p, q, r).unwrap();
            assert_eq!(euler_characteristic(&c.chains.ranks.unwrap()).value, 1);
            assert_eq!(c.chains.generators.total(), c.chains.ranks.unwrap().total());
        }
    }

    #[test]
    fn pretzel_m2_3_3() {
        let s = sd(&[(2, -1), (3, 1), (3, 1)]);
        let c = montesinos_knot_complex(&s, -6, None).unwrap();
        assert_eq!(c.h1_order, 3);
        assert_eq!(c.special_grading.value(), 2);
        assert_eq!(c.reducibles.len(), 1);
        assert_eq!(c.reducibles[0].fiber_index_plus_one, vec![None, Some(2), Some(2)]);
        assert_eq!(c.reducibles[0].mu, Some(Z4::new(1)));
        assert_eq!(c.known_ranks, [0, 1, 2, 0]);
        assert_eq!(c.irreducible_classes, 1);
        assert_eq!(c.chains.ranks, None);
        assert!(c.chains.warnings.contains(&Warning::UnknownGradings { generators: 4 }));

        let c = montesinos_knot_complex(&s, -6, Some([2, 0, 0, 2])).unwrap();
        let r = c.chains.ranks.unwrap();
        assert_eq!(r.ranks, [2, 1, 2, 2]);
        assert_eq!(euler_characteristic(&r).value, 1);
        assert!(matches!(montesinos_knot_complex(&s, -6, Some([2, 0, 2, 0])), Err(Error::InvalidPin(_))));
        assert!(matches!(montesinos_knot_complex(&s, -6, Some([2, 2, 2, 2])), Err(Error::InvalidPin(_))));
    }

    #[test]
    fn homology_sphere_matches_theorem() {
        let c = montesinos_knot_complex(&brieskorn_data(2, 3, 7).unwrap(), -8, None).unwrap();
        assert_eq!(c.chains.ranks, special_montesinos_complex(2, 3, 7).unwrap().chains.ranks);
    }

    #[test]
    fn flat_cobordism_failure() {
        let s = sd(&[(5, 1), (3, 1), (3, 1)]);
        assert!(matches!(montesinos_knot_complex(&s, 0, None), Err(Error::FlatCobordismFails { .. })));
        assert_eq!(montesinos_knot_complex(&s, 1, None).unwrap_err(), Error::OddSignature(1));
    }

    #[test]
    fn torus_34_via_cover_data() {
        let s = torus_even_cover_data(3, 4).unwrap();
        assert_eq!(s, sd(&[(1, -1), (3, 1), (3, 1), (2, 1)]));
        let sigma = torus_signature(3, 4).unwrap();
        let c = montesinos_knot_complex(&s, sigma, Some([2, 0, 0, 2])).unwrap();
        assert_eq!(c.chains.ranks.unwrap().ranks, [2, 1, 2, 2]);
    }

    #[test]
    fn torus_odd() {
        let c = torus_complex(3, 5).unwrap();
        assert_eq!((c.signature, c.a, c.certified_total), (-8, 2, 9));
        assert_eq!(c.chains.ranks.unwrap().ranks, [3, 2, 2, 2]);
        assert!(c.chains.ranks.unwrap().conjectural);
        assert_eq!(c.special_grading.value(), 0);
        let c = torus_complex(3, 7).unwrap();
        assert_eq!((c.a, c.certified_total), (2, 9));
        assert!(torus_complex(3, 4).is_err());
        for p in (3..=15i64).step_by(2) {
            for q in (p + 2..=17).step_by(2) {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let c = torus_complex(p, q).unwrap();
                assert_eq!(c.irreducible_classes, c.a, "T({p},{q})");
            }
        }
    }

    #[test]
    fn pretzel_link() {
        let s = sd(&[(2, 1), (3, -1), (6, -1)]);
        let opts = LinkOptions { lk: Some(4), lk_inferred: true, ..Default::default() };
        let c = montesinos_link_complex(&s, &opts).unwrap();
        assert_eq!((c.su2_classes, c.so3_classes), (2, 1));
        let r = c.chains.ranks.unwrap();
        assert!(r.matches([2, 0, 2, 0]));
        assert_eq!(r.ranks, [2, 0, 2, 0]);
        assert_eq!(r.anchoring, Anchoring::UpToCyclicPermutation);
        assert_eq!(euler_characteristic(&r), EulerCharacteristic { value: 4, up_to_sign: true });
        assert!(c.chains.homology_equals_chains);
        assert!(c.chains.warnings.contains(&Warning::InferredLk { lk: 4 }));
        let c = montesinos_link_complex(&s, &LinkOptions { lk: Some(-4), ..Default::default() }).unwrap();
        assert_eq!(c.chains.ranks.unwrap().ranks, [2, 0, 2, 0]);
    }

    #[test]
    fn montesinos_link_2_5_10() {
        let s = sd(&[(2, 1), (5, -2), (10, -1)]);
        let t25 = torus_alexander(2, 5).unwrap();
        let opts = LinkOptions { lk: Some(4), alexander: Some(t25), ..Default::default() };
        let c = montesinos_link_complex(&s, &opts).unwrap();
        assert_eq!(c.so3_classes, 3);
        assert_eq!(c.lambda_prime, Some(-3));
        assert_eq!(c.split, Some((2, 1)));
        assert_eq!(c.chains.ranks.unwrap().ranks, [2, 4, 2, 4]);
        assert!(!c.chains.homology_equals_chains);
        assert!(!c.chains.warnings.iter().any(|w| matches!(w, Warning::AlexanderMismatch { .. })));
    }

    #[test]
    fn link_without_lk() {
        let s = sd(&[(2, 1), (5, -2), (10, -1)]);
        let c = montesinos_link_complex(&s, &LinkOptions::default()).unwrap();
        assert_eq!(c.split, None);
        assert_eq!(c.chains.ranks, None);
        let cands: Vec<_> = c.candidates.iter().map(|r| r.ranks).collect();
        assert_eq!(cands, vec![[6, 0, 6, 0], [2, 4, 2, 4]]);
        assert!(c.chains.warnings.contains(&Warning::AmbiguousSplit { candidates: 2 }));
        // N = 1: only one split exists
        let c = montesinos_link_complex(&sd(&[(2, 1), (3, -1), (6, -1)]), &LinkOptions::default()).unwrap();
        assert_eq!(c.chains.ranks.unwrap().ranks, [2, 0, 2, 0]);
    }

    #[test]
    fn link_errors() {
        let s = sd(&[(2, 1), (3, -1), (6, -1)]);
        for lk in [1, 2, 8] {
            let opts = LinkOptions { lk: Some(lk), ..Default::default() };
            assert!(matches!(montesinos_link_complex(&s, &opts), Err(Error::InconsistentLk { .. })));
        }
        let knot = sd(&[(2, -1), (3, 1), (3, 1)]);
        assert_eq!(montesinos_link_complex(&knot, &LinkOptions::default()).unwrap_err(), Error::NotHomologyS1xS2(3));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&ChainRanks::absolute([1, 1, 2, 1])).value, 1);
        assert_eq!(euler_characteristic(&ChainRanks::absolute([3, 2, 2, 2])).value, 1);
        let e = euler_characteristic(&ChainRanks::cyclic([2, 0, 2, 0]));
        assert_eq!((e.value.abs(), e.up_to_sign), (4, true));
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(torus_alexander(2, 3).unwrap(), LaurentPoly::from_centered_coeffs(&[1, -1, 1]).unwrap());
        assert_eq!(torus_alexander(2, 5).unwrap(), LaurentPoly::from_centered_coeffs(&[1, -1, 1, -1, 1]).unwrap());
        assert_eq!(torus_alexander(1, 7).unwrap(), LaurentPoly::constant(1));
        assert!(torus_alexander(4, 6).is_err());
        let trefoil = torus_alexander(2, 3).unwrap();
        assert_eq!(casson_from_alexander(&trefoil), Ok(-1));
        assert_eq!(casson_from_alexander(&torus_alexander(2, 5).unwrap()), Ok(-3));
        assert_eq!(casson_from_alexander(&LaurentPoly::constant(1)), Ok(0));
        for (p, q) in [(3, 4), (3, 5), (5, 7), (4, 9)] {
            let d = torus_alexander(p, q).unwrap();
            assert_eq!(d.eval_unit(1), 1);
            assert_eq!(d.max_exp(), Some(((p - 1) * (q - 1) / 2) as i32));
        }
    }

    #[test]
    fn canonical_rotations() {
        assert_eq!(canonical_rotation([0, 2, 0, 2]), [2, 0, 2, 0]);
        assert_eq!(canonical_rotation([4, 2, 4, 2]), [2, 4, 2, 4]);
        assert_eq!(canonical_rotation([0, 0, 0, 0]), [0, 0, 0, 0]);
        assert_eq!(canonical_rotation([0, 0, 1, 3]), [1, 3, 0, 0]);
    }
}
