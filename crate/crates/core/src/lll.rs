//! Lattice reduction and short-vector enumeration for positive definite
//! integer Gram matrices (the real forms of the Hermitian lattices).
//!
//! LLL runs entirely in `BigInt` (the all-integer variant tracking the
//! subdeterminants `d_k` and scaled Gram–Schmidt numbers `λ`), with the
//! Lovász parameter δ = 99/100 compared exactly. It is purely a
//! performance preconditioner: every enumeration answer is re-verified with
//! exact integer arithmetic at the leaves, so no result depends on a
//! floating-point comparison. The Fincke–Pohst search uses an `f64`
//! Cholesky decomposition only to bound coordinate ranges, widened by a
//! fixed margin of 0.5 — orders of magnitude above the attainable rounding
//! error for the matrix sizes and bounds used here — so true solutions are
//! never pruned, and spurious candidates are discarded exactly.

use crate::Error;
use num::{BigInt, Integer, Signed, Zero};

/// `gram = transform · (input gram) · transformᵀ`, with `transform`
/// unimodular; rows of `transform` express the reduced basis in the
/// original one.
pub struct ReducedGram {
    pub gram: Vec<Vec<i64>>,
    pub transform: Vec<Vec<i64>>,
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn div_exact(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division in integral reduction");
    q
}

/// Nearest integer to `a / b` (`b > 0`), ties toward +∞.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    (a * 2i64 + b).div_floor(&(b * 2i64))
}

pub fn lll_reduce(gram: &[Vec<i64>]) -> Result<ReducedGram, Error> {
    let n = gram.len();
    for r in gram {
        assert_eq!(r.len(), n, "non-square Gram matrix");
    }
    let mut g: Vec<Vec<BigInt>> = gram
        .iter()
        .map(|row| row.iter().map(|&v| big(v)).collect())
        .collect();
    let mut h: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    if n < 2 {
        if n == 1 && g[0][0] <= BigInt::zero() {
            return Err(Error::NotDefinite);
        }
        return Ok(ReducedGram { gram: gram.to_vec(), transform: h });
    }

    let mut d: Vec<BigInt> = vec![BigInt::from(1); n + 1];
    let mut lam: Vec<Vec<BigInt>> = (0..n).map(|i| vec![BigInt::zero(); i]).collect();
    d[1] = g[0][0].clone();
    if !d[1].is_positive() {
        return Err(Error::NotDefinite);
    }

    // b_k ← b_k − q·b_l, propagated through the transform, the Gram matrix
    // and the λ table.
    fn red(
        k: usize,
        l: usize,
        g: &mut [Vec<BigInt>],
        h: &mut [Vec<i64>],
        lam: &mut [Vec<BigInt>],
        d: &[BigInt],
    ) {
        let two_lam = &lam[k][l] * 2i64;
        if two_lam.abs() <= d[l + 1] {
            return;
        }
        let q = round_div(&lam[k][l], &d[l + 1]);
        let n = g.len();
        for j in 0..n {
            let v = &q * &g[l][j];
            g[k][j] -= v;
        }
        for j in 0..n {
            let v = &q * &g[j][l];
            g[j][k] -= v;
        }
        let qi = i64::try_from(&q).expect("reduction coefficient overflow");
        for j in 0..n {
            h[k][j] = h[k][j]
                .checked_sub(qi.checked_mul(h[l][j]).expect("transform overflow"))
                .expect("transform overflow");
        }
        for i in 0..l {
            let v = &q * &lam[l][i];
            lam[k][i] -= v;
        }
        let v = &q * &d[l + 1];
        lam[k][l] -= v;
    }

    let mut k = 1usize;
    let mut kmax = 0usize;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = g[k][j].clone();
                for i in 0..j {
                    u = div_exact(&(&d[i + 1] * &u - &lam[k][i] * &lam[j][i]), &d[i]);
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    d[k + 1] = u;
                    if !d[k + 1].is_positive() {
                        return Err(Error::NotDefinite);
                    }
                }
            }
        }
        red(k, k - 1, &mut g, &mut h, &mut lam, &d);
        // Swap when 100·d_{k+1}·d_{k−1} < 99·d_k² − 100·λ², the exact
        // integral form of the Lovász condition at δ = 99/100.
        let lhs = (&d[k + 1] * &d[k - 1]) * 100i64;
        let rhs = &d[k] * &d[k] * 99i64 - &lam[k][k - 1] * &lam[k][k - 1] * 100i64;
        if lhs < rhs {
            h.swap(k, k - 1);
            g.swap(k, k - 1);
            for row in g.iter_mut() {
                row.swap(k, k - 1);
            }
            for j in 0..k - 1 {
                let t = lam[k][j].clone();
                lam[k][j] = lam[k - 1][j].clone();
                lam[k - 1][j] = t;
            }
            let l = lam[k][k - 1].clone();
            let b = div_exact(&(&d[k - 1] * &d[k + 1] + &l * &l), &d[k]);
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = div_exact(&(&d[k + 1] * &lam[i][k - 1] - &l * &t), &d[k]);
                lam[i][k - 1] = div_exact(&(&b * &t + &l * &lam[i][k]), &d[k + 1]);
            }
            d[k] = b;
            k = k.max(2) - 1;
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                red(k, l, &mut g, &mut h, &mut lam, &d);
            }
            k += 1;
        }
    }

    let gram_out: Vec<Vec<i64>> = g
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| i64::try_from(v).expect("reduced Gram entry overflow"))
                .collect()
        })
        .collect();
    Ok(ReducedGram { gram: gram_out, transform: h })
}

/// `q[i][i]` = squared Gram–Schmidt lengths, `q[i][j]` (j > i) = the μ
/// coefficients; `None` when a pivot is not strictly positive.
fn cholesky(gram: &[Vec<i64>]) -> Option<Vec<Vec<f64>>> {
    let n = gram.len();
    let mut q: Vec<Vec<f64>> = gram
        .iter()
        .map(|row| row.iter().map(|&v| v as f64).collect())
        .collect();
    for i in 0..n {
        let qii = q[i][i];
        if qii <= 0.0 {
            return None;
        }
        for j in i + 1..n {
            let v = q[i][j];
            q[j][i] = v;
            q[i][j] = v / qii;
        }
        for k in i + 1..n {
            let qki = q[k][i];
            for l in k..n {
                let v = qki * q[i][l];
                q[k][l] -= v;
            }
        }
    }
    Some(q)
}

fn exact_norm(gram: &[Vec<i64>], x: &[i64]) -> i64 {
    let n = x.len();
    let mut s: i128 = 0;
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        for j in 0..n {
            s += x[i] as i128 * x[j] as i128 * gram[i][j] as i128;
        }
    }
    i64::try_from(s).expect("norm overflow")
}

/// Depth-first Fincke–Pohst over `xᵀGx ≤ bound`, one leaf visit per ± pair
/// (the highest-index nonzero coordinate is positive). The visitor returns
/// `false` to stop the search. Leaves are *candidates*; callers must
/// exact-check, which [`enumerate`] and [`exists_nonzero_up_to`] do.
fn fp_search(
    gram: &[Vec<i64>],
    bound: i64,
    visit: &mut impl FnMut(&[i64]) -> bool,
) -> Result<(), Error> {
    let n = gram.len();
    if n == 0 {
        return Ok(());
    }
    let q = cholesky(gram).ok_or(Error::NotDefinite)?;
    let mut x = vec![0i64; n];
    // rem[i] = budget left at level i; u[i] = Σ_{j>i} q[i][j]·x[j].
    fn rec(
        level: usize,
        rem: f64,
        top_zero: bool,
        q: &[Vec<f64>],
        x: &mut Vec<i64>,
        visit: &mut impl FnMut(&[i64]) -> bool,
    ) -> bool {
        let n = q.len();
        let u: f64 = (level + 1..n).map(|j| q[level][j] * x[j] as f64).sum();
        let r = (rem.max(0.0) / q[level][level]).sqrt();
        let mut lo = (-u - r).ceil() as i64;
        let hi = (-u + r).floor() as i64;
        if top_zero {
            lo = lo.max(0);
        }
        for xi in lo..=hi {
            x[level] = xi;
            let t = xi as f64 + u;
            let rem2 = rem - q[level][level] * t * t;
            if rem2 < -0.25 {
                continue;
            }
            if level == 0 {
                if !(top_zero && xi == 0) && !visit(x) {
                    return false;
                }
            } else if !rec(level - 1, rem2, top_zero && xi == 0, q, x, visit) {
                return false;
            }
        }
        x[level] = 0;
        true
    }
    rec(n - 1, bound as f64 + 0.5, true, &q, &mut x, visit);
    Ok(())
}

/// All nonzero `x` with `0 < xᵀGx ≤ bound`, one representative per `±x`
/// pair (highest-index nonzero coordinate positive), sorted by norm then
/// coordinates. Errors out when more than `cap` survive.
pub fn enumerate(
    gram: &[Vec<i64>],
    bound: i64,
    cap: usize,
) -> Result<Vec<(Vec<i64>, i64)>, Error> {
    let mut out: Vec<(Vec<i64>, i64)> = Vec::new();
    let mut overflow = false;
    fp_search(gram, bound, &mut |x| {
        let norm = exact_norm(gram, x);
        if norm > 0 && norm <= bound {
            out.push((x.to_vec(), norm));
            if out.len() > cap {
                overflow = true;
                return false;
            }
        }
        true
    })?;
    if overflow {
        return Err(Error::EnumerationCapExceeded { cap, found: out.len() });
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(out)
}

/// Whether some nonzero vector has `0 < xᵀGx ≤ bound` (early exit).
pub fn exists_nonzero_up_to(gram: &[Vec<i64>], bound: i64) -> Result<bool, Error> {
    let mut found = false;
    fp_search(gram, bound, &mut |x| {
        let norm = exact_norm(gram, x);
        if norm > 0 && norm <= bound {
            found = true;
            return false;
        }
        true
    })?;
    Ok(found)
}

fn imat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let s: i128 = row
                        .iter()
                        .enumerate()
                        .map(|(k, &v)| v as i128 * b[k][j] as i128)
                        .sum();
                    i64::try_from(s).expect("matrix product overflow")
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
fn imat_t(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// LLL-accelerated enumeration: reduce, search the reduced form, then map
/// results back to the original coordinates (re-canonicalizing signs).
pub fn enumerate_reduced(
    gram: &[Vec<i64>],
    bound: i64,
    cap: usize,
) -> Result<Vec<(Vec<i64>, i64)>, Error> {
    let red = lll_reduce(gram)?;
    let inner = enumerate(&red.gram, bound, cap)?;
    let mut out: Vec<(Vec<i64>, i64)> = inner
        .into_iter()
        .map(|(x, norm)| {
            let mut v = imat_mul(&[x], &red.transform).remove(0);
            if let Some(last) = v.iter().rev().find(|&&c| c != 0) {
                if *last < 0 {
                    for c in v.iter_mut() {
                        *c = -*c;
                    }
                }
            }
            (v, norm)
        })
        .collect();
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(out)
}
