//! Exact rational arithmetic for the few places that need `Q` rather than
//! `E`: signature computation of real quadratic forms via symmetric
//! congruence reduction.

use num::{BigInt, BigRational, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Signature `(positive, negative, zero)` of a symmetric rational matrix,
/// by congruence diagonalization. Exact: no floating point, so Sylvester's
/// law of inertia applies verbatim to the reduced diagonal.
pub fn symmetric_signature(mut a: Vec<Vec<Rat>>) -> (usize, usize, usize) {
    let n = a.len();
    for row in &a {
        assert_eq!(row.len(), n, "signature of a non-square matrix");
    }
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    let mut k = 0usize;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())
            {
                // All remaining diagonal entries vanish, so after adding row
                // and column j to i the new (i,i) entry is 2·a[i][j] ≠ 0.
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                if i != k {
                    a.swap(k, i);
                    for row in a.iter_mut() {
                        row.swap(k, i);
                    }
                }
            } else {
                zero += n - k;
                break;
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for c in 0..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for r in 0..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
        k += 1;
    }
    (pos, neg, zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sig_of(rows: &[&[i64]]) -> (usize, usize, usize) {
        let m = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        symmetric_signature(m)
    }

    #[test]
    fn known_signatures() {
        assert_eq!(sig_of(&[&[1, 0], &[0, -1]]), (1, 1, 0));
        assert_eq!(sig_of(&[&[0, 1], &[1, 0]]), (1, 1, 0));
        assert_eq!(sig_of(&[&[0, 0], &[0, 0]]), (0, 0, 2));
        assert_eq!(sig_of(&[&[2, -1], &[-1, 2]]), (2, 0, 0));
        assert_eq!(sig_of(&[&[1, 1], &[1, 1]]), (1, 0, 1));
    }

    #[test]
    fn congruence_invariance_randomized() {
        // Sylvester's law: S D Sᵀ has the same signature as D for any
        // invertible S; unimodular S built from shears keeps things exact.
        let mut rng = ChaCha8Rng::seed_from_u64(0x516_317);
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            let diag: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let mut m = vec![vec![rat(0); n]; n];
            for i in 0..n {
                m[i][i] = rat(diag[i]);
            }
            let expect = (
                diag.iter().filter(|&&d| d > 0).count(),
                diag.iter().filter(|&&d| d < 0).count(),
                diag.iter().filter(|&&d| d == 0).count(),
            );
            for _ in 0..12 {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while n > 1 && j == i {
                    j = rng.gen_range(0..n);
                }
                if i == j {
                    continue;
                }
                let c = rat(rng.gen_range(-3i64..=3));
                // Congruence by the shear row_i += c·row_j.
                for col in 0..n {
                    let v = &c * &m[j][col];
                    m[i][col] += v;
                }
                for row in 0..n {
                    let v = &c * &m[row][j];
                    m[row][i] += v;
                }
            }
            assert_eq!(symmetric_signature(m), expect);
        }
    }
}
