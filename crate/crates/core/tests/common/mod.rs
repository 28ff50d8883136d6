//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's enumeration or signature code.

#![allow(dead_code)]

use nalgebra::{SMatrix, SVector};

// ---------------------------------------------------------------------------
// Numeric SU(2) relation solver

/// Unit quaternion `w + xi + yj + zk`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quat(pub [f64; 4]);

impl Quat {
    pub const ONE: Quat = Quat([1.0, 0.0, 0.0, 0.0]);

    pub fn mul(self, o: Quat) -> Quat {
        let [a1, b1, c1, d1] = self.0;
        let [a2, b2, c2, d2] = o.0;
        Quat([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }

    pub fn conj(self) -> Quat {
        let [a, b, c, d] = self.0;
        Quat([a, -b, -c, -d])
    }

    pub fn pow(self, n: i64) -> Quat {
        let base = if n < 0 { self.conj() } else { self };
        (0..n.abs()).fold(Quat::ONE, |acc, _| acc.mul(base))
    }

    pub fn trace(self) -> f64 {
        2.0 * self.0[0]
    }

    pub fn dist(self, o: Quat) -> f64 {
        (0..4).map(|i| (self.0[i] - o.0[i]).powi(2)).sum::<f64>().sqrt()
    }
}

/// Gauge-fixed triple: `x₁ = e^{iα}`, `x₂ = cos β + sin β (cos ψ i + sin ψ j)`,
/// `x₃ = (x₁x₂)⁻¹`.
fn triple(t: &SVector<f64, 3>) -> [Quat; 3] {
    let (a, b, p) = (t[0], t[1], t[2]);
    let x1 = Quat([a.cos(), a.sin(), 0.0, 0.0]);
    let x2 = Quat([b.cos(), b.sin() * p.cos(), b.sin() * p.sin(), 0.0]);
    [x1, x2, x1.mul(x2).conj()]
}

fn residual(t: &SVector<f64, 3>, a: [i64; 3], c: [f64; 3]) -> SVector<f64, 12> {
    let xs = triple(t);
    let mut r = SVector::<f64, 12>::zeros();
    for i in 0..3 {
        let p = xs[i].pow(a[i]);
        r[4 * i] = p.0[0] - c[i];
        for k in 1..4 {
            r[4 * i + k] = p.0[k];
        }
    }
    r
}

/// Levenberg–Marquardt from `t0`; returns the converged point if the residual
/// drops below `1e-9`.
fn solve(mut t: SVector<f64, 3>, a: [i64; 3], c: [f64; 3]) -> Option<SVector<f64, 3>> {
    let mut r = residual(&t, a, c);
    let mut lambda = 1e-3;
    for _ in 0..200 {
        if r.norm() < 1e-13 {
            break;
        }
        let h = 1e-7;
        let mut j = SMatrix::<f64, 12, 3>::zeros();
        for k in 0..3 {
            let mut tp = t;
            let mut tm = t;
            tp[k] += h;
            tm[k] -= h;
            j.set_column(k, &((residual(&tp, a, c) - residual(&tm, a, c)) / (2.0 * h)));
        }
        let jt = j.transpose();
        let g = jt * r;
        let mut accepted = false;
        for _ in 0..12 {
            let lhs = jt * j + SMatrix::<f64, 3, 3>::identity() * lambda;
            let Some(step) = lhs.lu().solve(&(-g)) else { break };
            let cand = t + step;
            let rc = residual(&cand, a, c);
            if rc.norm() < r.norm() {
                t = cand;
                r = rc;
                lambda = (lambda * 0.3).max(1e-15);
                accepted = true;
                break;
            }
            lambda *= 10.0;
        }
        if !accepted {
            break;
        }
    }
    (r.norm() < 1e-9).then_some(t)
}

/// Conjugacy classes of irreducible `ρ: ⟨x₁,x₂,x₃ | xᵢ^{aᵢ} = cᵢ, x₁x₂x₃ = 1⟩ → SU(2)`,
/// as trace triples clustered at tolerance `1e-6`.
pub fn numeric_classes(a: [i64; 3], c: [i8; 3]) -> Vec<[f64; 3]> {
    let cf = c.map(|x| x as f64);
    let n = a.map(|ai| 2 * ai as usize);
    let seed = |k: usize, n: usize| std::f64::consts::PI * (k as f64 + 0.5) / n as f64;
    let mut classes: Vec<[f64; 3]> = Vec::new();
    for i in 0..n[0] {
        for j in 0..n[1] {
            for k in 0..n[2].max(8) {
                let t0 = SVector::<f64, 3>::new(seed(i, n[0]), seed(j, n[1]), seed(k, n[2].max(8)));
                let Some(t) = solve(t0, a, cf) else { continue };
                let xs = triple(&t);
                let comm = xs[0].mul(xs[1]).dist(xs[1].mul(xs[0]));
                if comm < 1e-6 {
                    continue;
                }
                let key = xs.map(Quat::trace);
                if !classes.iter().any(|q| (0..3).all(|m| (q[m] - key[m]).abs() < 1e-6)) {
                    classes.push(key);
                }
            }
        }
    }
    classes
}

/// Irreducible SU(2) classes of `⟨x₁,x₂,x₃,h | h central, xᵢ^{aᵢ} = εᵢ h^{−bᵢ}, x₁x₂x₃ = 1⟩`,
/// summed over `ρ(h) = ±1`.
pub fn numeric_seifert_count(pairs: [(i64, i64); 3], eps: [i8; 3]) -> usize {
    [1i8, -1]
        .iter()
        .map(|&h| {
            let c = [0, 1, 2].map(|i| eps[i] * if pairs[i].1.rem_euclid(2) == 1 { h } else { 1 });
            numeric_classes(pairs.map(|p| p.0), c).len()
        })
        .sum()
}

// ---------------------------------------------------------------------------
// Seifert matrices

/// Seifert matrix of `T(p,q)` as the closure of `(σ₁⋯σ_{p−1})^q`, from
/// Seifert's algorithm on the braid closure.
pub fn torus_seifert_matrix(p: usize, q: usize) -> Vec<Vec<i64>> {
    // generator (column, s, t): consecutive bands s < t (positions in the word) in a column
    let mut gens = Vec::new();
    for col in 0..p - 1 {
        let bands: Vec<usize> = (0..q).map(|k| k * (p - 1) + col).collect();
        for w in bands.windows(2) {
            gens.push((col, w[0], w[1]));
        }
    }
    let n = gens.len();
    let mut v = vec![vec![0i64; n]; n];
    for x in 0..n {
        v[x][x] = -1;
        let (cx, s, t) = gens[x];
        for y in 0..n {
            let (cy, u, w) = gens[y];
            if cy == cx && u == t {
                v[x][y] = 1;
            }
            if cy == cx + 1 {
                if s < u && u < t && t < w {
                    v[x][y] += 1;
                }
                if u < s && s < w && w < t {
                    v[y][x] -= 1;
                }
            }
        }
    }
    v
}

/// Signature of `V + Vᵀ` from its eigenvalues.
pub fn seifert_signature(v: &[Vec<i64>]) -> i64 {
    let n = v.len();
    if n == 0 {
        return 0;
    }
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| (v[i][j] + v[j][i]) as f64);
    let eig = m.symmetric_eigen().eigenvalues;
    eig.iter().filter(|&&e| e > 1e-8).count() as i64 - eig.iter().filter(|&&e| e < -1e-8).count() as i64
}

pub fn trefoil_seifert_matrix() -> Vec<Vec<i64>> {
    vec![vec![-1, 1], vec![0, -1]]
}

pub fn figure_eight_seifert_matrix() -> Vec<Vec<i64>> {
    vec![vec![1, 1], vec![0, -1]]
}

// ---------------------------------------------------------------------------
// Data sets

/// Sorted exceptional multiplicity triples with `∏aᵢ ≤ bound`.
pub fn fiber_triples(bound: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a1 in 2..=bound {
        for a2 in a1..=bound / a1 {
            for a3 in a2..=bound / (a1 * a2) {
                out.push([a1, a2, a3]);
            }
        }
    }
    out
}

/// Every Seifert datum over a multiplicity triple with `bᵢ ∈ {1, 2}` (`bᵢ = 2`
/// only for odd `aᵢ`), which covers both parities of `bᵢ`.
pub fn seifert_data_over(a: [i64; 3]) -> Vec<[(i64, i64); 3]> {
    let choices = |ai: i64| if ai % 2 == 1 { vec![1, 2] } else { vec![1] };
    let mut out = Vec::new();
    for b1 in choices(a[0]) {
        for b2 in choices(a[1]) {
            for b3 in choices(a[2]) {
                out.push([(a[0], b1), (a[1], b2), (a[2], b3)]);
            }
        }
    }
    out
}

pub fn all_twists() -> Vec<[i8; 3]> {
    (0..8).map(|m| [0, 1, 2].map(|i| if m >> i & 1 == 1 { -1 } else { 1 })).collect()
}
