//! Independent oracles shared by the integration tests. None of these call
//! into the product tables of the library.

#![allow(dead_code)]

use pga_core::{Algebra, BladeIndex, Multivector};

/// Multiplies two basis blades by concatenating their generator strings and
/// bubble-sorting, flipping the sign on every swap and contracting equal
/// neighbours with the metric.
pub fn brute_force_blade_product(a: &[usize], b: &[usize], metric: &[i8]) -> (i32, Vec<usize>) {
    let mut word: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut sign = 1i32;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if word[i] == word[i + 1] {
                sign *= metric[word[i]] as i32;
                word.drain(i..i + 2);
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    (sign, word)
}

pub fn generators_of(bits: usize) -> Vec<usize> {
    (0..8).filter(|i| bits >> i & 1 == 1).collect()
}

pub fn bits_of(gens: &[usize]) -> usize {
    gens.iter().fold(0, |acc, g| acc | 1 << g)
}

/// Full product of two multivectors through [`brute_force_blade_product`].
pub fn brute_force_gp(x: &Multivector<f64>, y: &Multivector<f64>) -> Multivector<f64> {
    let alg = x.algebra();
    let metric = alg.metric_diag().to_vec();
    let mut out = vec![0.0; alg.size()];
    for a in 0..alg.size() {
        for b in 0..alg.size() {
            let (s, w) = brute_force_blade_product(&generators_of(a), &generators_of(b), &metric);
            out[bits_of(&w)] += s as f64 * x.coeffs()[a] * y.coeffs()[b];
        }
    }
    Multivector::from_coeffs(alg, out).unwrap()
}

/// Biquaternion product from the unit table: `i² = j² = k² = ijk = −1`,
/// `ε² = 0`, `ε` central. Coefficients on `1, i, j, k, ε, εi, εj, εk`.
pub fn biquaternion_product(a: &[f64; 8], b: &[f64; 8]) -> [f64; 8] {
    // quaternion unit table: (sign, unit) of e_p e_q for p, q in {1, i, j, k}
    const Q: [[(f64, usize); 4]; 4] = [
        [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
        [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
        [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
        [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
    ];
    let mut out = [0.0; 8];
    for p in 0..8 {
        for q in 0..8 {
            let (ep, eq) = (p / 4, q / 4);
            if ep + eq > 1 {
                continue;
            }
            let (s, u) = Q[p % 4][q % 4];
            out[(ep + eq) * 4 + u] += s * a[p] * b[q];
        }
    }
    out
}

pub fn quat_mul(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    let c = biquaternion_product(
        &[a[0], a[1], a[2], a[3], 0.0, 0.0, 0.0, 0.0],
        &[b[0], b[1], b[2], b[3], 0.0, 0.0, 0.0, 0.0],
    );
    [c[0], c[1], c[2], c[3]]
}

/// Euler top in quaternion form: `q̇ = ½ q ω`, `L̇ = L × ω`, `ω = L / I`,
/// integrated with classical RK4 and quaternion renormalization.
pub fn quaternion_euler_top(
    q0: [f64; 4],
    l0: [f64; 3],
    moments: [f64; 3],
    h: f64,
    steps: usize,
) -> Vec<([f64; 4], [f64; 3])> {
    fn f(q: [f64; 4], l: [f64; 3], m: [f64; 3]) -> ([f64; 4], [f64; 3]) {
        let w = [l[0] / m[0], l[1] / m[1], l[2] / m[2]];
        let qd = quat_mul(q, [0.0, w[0], w[1], w[2]]).map(|c| 0.5 * c);
        let ld = [l[1] * w[2] - l[2] * w[1], l[2] * w[0] - l[0] * w[2], l[0] * w[1] - l[1] * w[0]];
        (qd, ld)
    }
    fn step4(x: [f64; 4], d: [f64; 4], s: f64) -> [f64; 4] {
        std::array::from_fn(|i| x[i] + s * d[i])
    }
    fn step3(x: [f64; 3], d: [f64; 3], s: f64) -> [f64; 3] {
        std::array::from_fn(|i| x[i] + s * d[i])
    }
    let mut out = vec![(q0, l0)];
    let (mut q, mut l) = (q0, l0);
    for _ in 0..steps {
        let k1 = f(q, l, moments);
        let k2 = f(step4(q, k1.0, h / 2.0), step3(l, k1.1, h / 2.0), moments);
        let k3 = f(step4(q, k2.0, h / 2.0), step3(l, k2.1, h / 2.0), moments);
        let k4 = f(step4(q, k3.0, h), step3(l, k3.1, h), moments);
        q = std::array::from_fn(|i| q[i] + h / 6.0 * (k1.0[i] + 2.0 * k2.0[i] + 2.0 * k3.0[i] + k4.0[i]));
        l = std::array::from_fn(|i| l[i] + h / 6.0 * (k1.1[i] + 2.0 * k2.1[i] + 2.0 * k3.1[i] + k4.1[i]));
        let n = q.iter().map(|c| c * c).sum::<f64>().sqrt();
        q = q.map(|c| c / n);
        out.push((q, l));
    }
    out
}

/// Foot of the perpendicular from `p` onto the line through `a` with unit
/// direction `d`.
pub fn foot_of_perpendicular(p: &[f64], a: &[f64], d: &[f64]) -> Vec<f64> {
    let t: f64 = p.iter().zip(a).zip(d).map(|((p, a), d)| (p - a) * d).sum();
    a.iter().zip(d).map(|(a, d)| a + t * d).collect()
}

pub fn euclid_dist(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Rotation of `v` by `angle` about the unit axis `k` through the origin
/// (Rodrigues).
pub fn rodrigues(v: &[f64; 3], k: &[f64; 3], angle: f64) -> [f64; 3] {
    let (c, s) = (angle.cos(), angle.sin());
    let cross = [k[1] * v[2] - k[2] * v[1], k[2] * v[0] - k[0] * v[2], k[0] * v[1] - k[1] * v[0]];
    let dot = k[0] * v[0] + k[1] * v[1] + k[2] * v[2];
    std::array::from_fn(|i| v[i] * c + cross[i] * s + k[i] * dot * (1.0 - c))
}

pub fn blade(alg: &std::sync::Arc<Algebra>, bits: u8, c: f64) -> Multivector<f64> {
    Multivector::blade(alg, BladeIndex(bits), c)
}
