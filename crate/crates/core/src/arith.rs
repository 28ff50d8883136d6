//! Exact integer and rational primitives: modular inverses, even continued
//! fractions, sparse Laurent polynomials and signatures of symmetric integer
//! matrices.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational with `i64` numerator and positive denominator, always reduced.
pub type Rational = Ratio<i64>;

/// The `r` in `(0, p)` with `a·r ≡ 1 (mod p)`.
pub fn mod_inverse(a: i64, p: i64) -> Result<i64> {
    if p <= 0 {
        return Err(Error::InvalidInput(format!("modulus {p} must be positive")));
    }
    let e = a.rem_euclid(p).extended_gcd(&p);
    if e.gcd != 1 || p == 1 {
        return Err(Error::NotCoprime { a, b: p });
    }
    Ok(e.x.rem_euclid(p))
}

/// Value of the continued fraction `[c₁, …, cₙ] = c₁ − 1/(c₂ − 1/(⋯ − 1/cₙ))`.
///
/// This "minus" convention is the one used throughout the crate; `None` is
/// returned if an intermediate denominator vanishes.
pub fn continued_fraction_value(entries: &[i64]) -> Option<Rational> {
    let (&last, rest) = entries.split_last()?;
    let mut acc = Rational::from_integer(last);
    for &c in rest.iter().rev() {
        if acc.is_zero() {
            return None;
        }
        acc = Rational::from_integer(c) - acc.recip();
    }
    Some(acc)
}

/// Even continued fraction expansion of `p/q′` in the minus convention, where
/// `q′` is the unique even representative of `q mod p` in `(−p, p)`.
///
/// Every entry is even and nonzero and the length is even. The tridiagonal
/// form built from it computes the two-bridge knot signature (see
/// [`crate::signatures::two_bridge_signature`]).
pub fn even_continued_fraction(p: i64, q: i64) -> Result<Vec<i64>> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidInput(format!("p = {p} must be odd and > 1")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    let mut q = q.rem_euclid(p);
    if q % 2 != 0 {
        q -= p;
    }
    let mut x = Rational::new(p, q);
    let mut out = Vec::new();
    loop {
        if x.is_integer() && x.numer() % 2 == 0 {
            out.push(*x.numer());
            break;
        }
        // nearest even integer; |c − x| < 1 because x never is an odd integer here
        let mut c = 2 * (x / 2).round().to_integer();
        if c == 0 {
            c = if x.is_positive() { 2 } else { -2 };
        }
        out.push(c);
        x = (Rational::from_integer(c) - x).recip();
    }
    debug_assert!(out.len() % 2 == 0);
    Ok(out)
}

/// Symmetric square integer matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymIntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SymIntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        for i in 0..n {
            for j in 0..i {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::InvalidInput(format!("matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Self { n, entries })
    }

    /// `a + aᵀ` for an arbitrary square matrix `a`, e.g. a Seifert matrix.
    pub fn symmetrize(a: &[Vec<i64>]) -> Result<Self> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        let rows = (0..n).map(|i| (0..n).map(|j| a[i][j] + a[j][i]).collect()).collect();
        Self::new(rows)
    }

    /// Symmetric tridiagonal matrix with the given diagonal and 1 off the diagonal.
    pub fn tridiagonal(diagonal: &[i64]) -> Self {
        let n = diagonal.len();
        let mut entries = vec![0; n * n];
        for (i, &d) in diagonal.iter().enumerate() {
            entries[i * n + i] = d;
            if i + 1 < n {
                entries[i * n + i + 1] = 1;
                entries[(i + 1) * n + i] = 1;
            }
        }
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }
}

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over ℚ. Zero eigenvalues contribute nothing.
pub fn signature(m: &SymIntMatrix) -> i64 {
    let n = m.n;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from(m.get(i, j)))).collect())
        .collect();

    let mut sig = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k ← e_k + e_j; the new diagonal entry is 2·a[k][j] ≠ 0
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in k..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for r in k..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
    }
    sig
}

/// Sparse Laurent polynomial with integer coefficients; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_terms([(0, c)])
    }

    pub fn monomial(exp: i32, c: i64) -> Self {
        Self::from_terms([(exp, c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Self { coeffs }
    }

    /// Coefficients listed from the lowest to the highest power, centered so
    /// that the middle entry is the constant term. `[1, -1, 1]` is `t⁻¹ − 1 + t`.
    pub fn from_centered_coeffs(cs: &[i64]) -> Result<Self> {
        if cs.len().is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "centered coefficient list needs odd length, got {}",
                cs.len()
            )));
        }
        let half = (cs.len() / 2) as i32;
        Ok(Self::from_terms(cs.iter().enumerate().map(|(i, &c)| (i as i32 - half, c))))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Evaluation at `t = ±1`, where negative powers stay integral.
    pub fn eval_unit(&self, t: i64) -> i64 {
        assert!(t == 1 || t == -1);
        self.terms().map(|(e, c)| if t == -1 && e.rem_euclid(2) == 1 { -c } else { c }).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coeff(-e) == c)
    }

    pub fn shift(&self, by: i32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + by, c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .flat_map(|(e1, c1)| other.terms().map(move |(e2, c2)| (e1 + e2, c1 * c2))),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms().map(|(e, c)| (e, -c))))
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dmax, dlead) = divisor.coeffs.iter().next_back().map(|(&e, &c)| (e, c))?;
        let dmin = divisor.min_exp()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rmax) = rem.max_exp() {
            if rmax - dmax < rem.min_exp()? - dmin {
                return None;
            }
            let c = rem.coeff(rmax);
            if c % dlead != 0 {
                return None;
            }
            let term = Self::monomial(rmax - dmax, c / dlead);
            rem = rem.sub(&term.mul(divisor));
            quot = Self::from_terms(quot.terms().chain(term.terms()));
        }
        Some(quot)
    }

    /// Symmetric representative `t^k·p(t)` with `p(t) = p(t⁻¹)`, if one exists.
    pub fn symmetrized(&self) -> Option<Self> {
        let (lo, hi) = (self.min_exp()?, self.max_exp()?);
        if (lo + hi) % 2 != 0 {
            return None;
        }
        let s = self.shift(-(lo + hi) / 2);
        s.is_symmetric().then_some(s)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let (sign, abs) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (*e, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (1, a) => write!(f, "{a}t")?,
                (e, a) => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// `Δ″(1) = Σ c_k·k·(k−1)` for a normalized Alexander polynomial.
pub fn second_derivative_at_one(delta: &LaurentPoly) -> Result<i64> {
    if delta.eval_unit(1) != 1 || !delta.is_symmetric() {
        return Err(Error::NotNormalized(delta.to_string()));
    }
    Ok(delta.terms().map(|(k, c)| c * k as i64 * (k as i64 - 1)).sum())
}
