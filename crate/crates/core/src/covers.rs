//! Homological data of double branched covers.

#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Order of `H₁` of a double branched cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum H1Order {
    Finite(u64),
    Infinite,
}

impl H1Order {
    /// Numeric encoding with `0` standing for an infinite group (`b₁ > 0`).
    pub fn as_u64(self) -> u64 {
        match self {
            H1Order::Finite(n) => n,
            H1Order::Infinite => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverHomology {
    pub b1: u8,
    pub h1_order: H1Order,
    /// Value of the cup pairing `H¹ × H¹ → H²` over ℤ/2 on generators, when known.
    pub cup_form_entry: Option<u8>,
}

/// `b₁` and `|H₁|` of the double branched cover from `Δ(−1)`.
pub fn branched_cover_h1(delta: &LaurentPoly) -> CoverHomology {
    match delta.eval_unit(-1).unsigned_abs() {
        0 => CoverHomology { b1: 1, h1_order: H1Order::Infinite, cup_form_entry: None },
        n => CoverHomology { b1: 0, h1_order: H1Order::Finite(n), cup_form_entry: None },
    }
}

/// The ℤ/2 cup product on the cover of a two-component link is the linking
/// number mod 2.
pub fn cup_form(lk: i64) -> u8 {
    lk.rem_euclid(2) as u8
}

/// The parity δ in the `2δ` grading shift under the `ℤ/2 ⊕ ℤ/2` action:
/// 0 for odd linking number, 1 for even.
pub fn grading_shift_delta(lk: i64) -> u8 {
    1 - cup_form(lk)
}

/// One unnormalized Seifert pair `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertPair {
    pub a: i64,
    pub b: i64,
}

/// Unnormalized Seifert invariants `(a₁,b₁), …, (aₙ,bₙ)` of a Seifert fibered
/// double branched cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertData {
    pairs: Vec<SeifertPair>,
}

impl SeifertData {
    pub fn new(pairs: &[(i64, i64)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidInput("Seifert data needs at least one pair".into()));
        }
        for &(a, b) in pairs {
            if a < 1 {
                return Err(Error::InvalidInput(format!("fiber multiplicity {a} must be positive")));
            }
            if a.gcd(&b) != 1 {
                return Err(Error::NotCoprime { a, b });
            }
        }
        Ok(Self { pairs: pairs.iter().map(|&(a, b)| SeifertPair { a, b }).collect() })
    }

    pub fn pairs(&self) -> &[SeifertPair] {
        &self.pairs
    }

    /// Euler number `e = Σ bᵢ/aᵢ`.
    pub fn euler_number(&self) -> Rational {
        self.pairs.iter().map(|p| Rational::new(p.b, p.a)).sum()
    }

    pub fn product(&self) -> i64 {
        self.pairs.iter().map(|p| p.a).product()
    }

    pub fn lcm(&self) -> i64 {
        self.pairs.iter().fold(1, |l, p| l.lcm(&p.a))
    }

    /// Pairs with `a > 1`.
    pub fn exceptional(&self) -> impl Iterator<Item = SeifertPair> + '_ {
        self.pairs.iter().copied().filter(|p| p.a > 1)
    }

    /// Equivalent data with every `(1, b)` pair absorbed into the first
    /// exceptional fiber via `(aⱼ, bⱼ) ↦ (aⱼ, bⱼ + b·aⱼ)`. If there is no
    /// exceptional fiber the `(1, b)` pairs are merged into a single one.
    pub fn absorb_trivial_fibers(&self) -> SeifertData {
        let shift: i64 = self.pairs.iter().filter(|p| p.a == 1).map(|p| p.b).sum();
        let mut out: Vec<SeifertPair> = self.exceptional().collect();
        match out.first_mut() {
            Some(first) => first.b += shift * first.a,
            None => out.push(SeifertPair { a: 1, b: shift }),
        }
        SeifertData { pairs: out }
    }

    /// The move `(aᵢ, bᵢ) ↦ (aᵢ, bᵢ + k·aᵢ)` together with an appended `(1, −k)`.
    pub fn shifted(&self, i: usize, k: i64) -> SeifertData {
        let mut pairs = self.pairs.clone();
        pairs[i].b += k * pairs[i].a;
        pairs.push(SeifertPair { a: 1, b: -k });
        SeifertData { pairs }
    }

    /// The move `(aᵢ, bᵢ) ↦ (aᵢ, bᵢ + k·aᵢ)`, `(aⱼ, bⱼ) ↦ (aⱼ, bⱼ − k·aⱼ)`.
    pub fn transferred(&self, i: usize, j: usize, k: i64) -> SeifertData {
        let mut pairs = self.pairs.clone();
        pairs[i].b += k * pairs[i].a;
        pairs[j].b -= k * pairs[j].a;
        SeifertData { pairs }
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pairs.iter().map(|p| format!("{},{}", p.a, p.b)).collect();
        write!(f, "{}", s.join(";"))
    }
}

/// Parses the `a,b;a,b;…` grammar.
impl FromStr for SeifertData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pairs = s
            .split(';')
            .filter(|chunk| !chunk.trim().is_empty())
            .map(|chunk| {
                let (a, b) = chunk
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidInput(format!("bad Seifert pair `{chunk}`")))?;
                let parse = |x: &str| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidInput(format!("bad integer `{x}` in `{chunk}`")))
                };
                Ok((parse(a)?, parse(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        SeifertData::new(&pairs)
    }
}

/// `|H₁(Y; ℤ)| = |e·a₁⋯aₙ|`, with `0` meaning `H₁` is infinite.
pub fn seifert_h1_order(s: &SeifertData) -> u64 {
    let pairs = s.pairs();
    let total: i128 = (0..pairs.len())
        .map(|i| {
            let rest: i128 = pairs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.a as i128).product();
            pairs[i].b as i128 * rest
        })
        .sum();
    total.unsigned_abs() as u64
}

/// Invariant factors `d₁ | d₂ | …` of `H₁(Y; ℤ)`, with `0` for each free summand
/// and factors equal to 1 dropped. `[]` is a homology sphere, `[0]` a homology
/// `S¹×S²`.
pub fn seifert_h1_invariants(s: &SeifertData) -> Vec<u64> {
    let n = s.pairs().len();
    // generators x₁…xₙ, h; relations aᵢxᵢ + bᵢh, Σxᵢ
    let mut m: Vec<Vec<i128>> = s
        .pairs()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut row = vec![0i128; n + 1];
            row[i] = p.a as i128;
            row[n] = p.b as i128;
            row
        })
        .collect();
    let mut last = vec![1i128; n + 1];
    last[n] = 0;
    m.push(last);
    let mut factors = smith_diagonal(m);
    factors.retain(|&d| d != 1);
    factors.sort_by_key(|&d| if d == 0 { u64::MAX } else { d });
    factors
}

/// Diagonal of the Smith normal form of a square integer matrix (unsorted,
/// absolute values).
fn smith_diagonal(mut m: Vec<Vec<i128>>) -> Vec<u64> {
    let n = m.len();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            let pivot = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs());
            let Some((pi, pj)) = pivot else {
                diag.extend(std::iter::repeat_n(0, n - k));
                return diag;
            };
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let p = m[k][k];
            let mut done = true;
            for i in k + 1..n {
                let f = m[i][k] / p;
                for j in k..n {
                    m[i][j] -= f * m[k][j];
                }
                done &= m[i][k] == 0;
            }
            for j in k + 1..n {
                let f = m[k][j] / p;
                for i in k..n {
                    m[i][j] -= f * m[i][k];
                }
                done &= m[k][j] == 0;
            }
            if !done {
                continue;
            }
            // the pivot must divide the remaining block
            if let Some(i) = (k + 1..n).find(|&i| (k + 1..n).any(|j| m[i][j] % p != 0)) {
                for j in k..n {
                    let v = m[i][j];
                    m[k][j] += v;
                }
                continue;
            }
            diag.push(p.unsigned_abs() as u64);
            break;
        }
    }
    diag
}

pub fn is_homology_s1xs2(s: &SeifertData) -> bool {
    seifert_h1_invariants(s) == [0]
}

pub fn seifert_homology(s: &SeifertData) -> CoverHomology {
    match seifert_h1_order(s) {
        0 => CoverHomology { b1: 1, h1_order: H1Order::Infinite, cup_form_entry: None },
        n => CoverHomology { b1: 0, h1_order: H1Order::Finite(n), cup_form_entry: None },
    }
}

/// Flat cobordism condition `a₁⋯aₙ = lcm(a₁,…,aₙ)·|H₁(Y;ℤ)|`.
pub fn check_flat_cobordism(s: &SeifertData) -> Result<()> {
    let (product, lcm, order) = (s.product(), s.lcm(), seifert_h1_order(s));
    if product as i128 == lcm as i128 * order as i128 {
        Ok(())
    } else {
        Err(Error::FlatCobordismFails { product, lcm, order })
    }
}
