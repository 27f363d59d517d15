//! Dense vectors/matrices over `E`, and fractional matrices kept exact as
//! integer matrices with a common positive denominator.
//!
//! Dual bases and glue vectors live in `(1/d)·E^n` for small integers `d`;
//! [`ScaledMat`] stores the numerator matrix and `d`, normalized by the
//! shared integer content so that equality is structural.

use crate::eisenstein::{gcd_i64, Eis};

pub type EVec = Vec<Eis>;
pub type EMat = Vec<Vec<Eis>>;

pub fn emat_identity(n: usize) -> EMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Eis::ONE } else { Eis::ZERO })
                .collect()
        })
        .collect()
}

pub fn emat_zero(rows: usize, cols: usize) -> EMat {
    vec![vec![Eis::ZERO; cols]; rows]
}

pub fn emat_mul(a: &[EVec], b: &[EVec]) -> EMat {
    if a.is_empty() {
        return Vec::new();
    }
    let (inner, cols) = (b.len(), if b.is_empty() { 0 } else { b[0].len() });
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "matrix product shape mismatch");
            (0..cols)
                .map(|j| {
                    let mut s = Eis::ZERO;
                    for (k, &x) in row.iter().enumerate() {
                        s += x * b[k][j];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Conjugate transpose `A† = Āᵀ`.
pub fn emat_conj_t(a: &[EVec]) -> EMat {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].conj()).collect())
        .collect()
}

pub fn emat_scale(c: Eis, a: &[EVec]) -> EMat {
    a.iter().map(|row| row.iter().map(|&x| c * x).collect()).collect()
}

pub fn emat_sub(a: &[EVec], b: &[EVec]) -> EMat {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(ra, rb)| {
            assert_eq!(ra.len(), rb.len());
            ra.iter().zip(rb).map(|(&x, &y)| x - y).collect()
        })
        .collect()
}

pub fn evec_add(a: &[Eis], b: &[Eis]) -> EVec {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub fn evec_sub(a: &[Eis], b: &[Eis]) -> EVec {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

pub fn evec_scale(c: Eis, a: &[Eis]) -> EVec {
    a.iter().map(|&x| c * x).collect()
}

pub fn evec_is_zero(a: &[Eis]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Row vector times matrix.
pub fn vec_mat(v: &[Eis], m: &[EVec]) -> EVec {
    assert_eq!(v.len(), m.len(), "vector/matrix shape mismatch");
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    (0..cols)
        .map(|j| {
            let mut s = Eis::ZERO;
            for (k, &x) in v.iter().enumerate() {
                s += x * m[k][j];
            }
            s
        })
        .collect()
}

/// A matrix with entries in `(1/den)·E`, stored as `num / den` with `den > 0`
/// and the integer content of `(num, den)` divided out. The normalization
/// makes derived equality coincide with equality of the fractional matrices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScaledMat {
    num: EMat,
    den: i64,
}

impl ScaledMat {
    pub fn new(num: EMat, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let mut m = ScaledMat { num, den };
        m.normalize();
        m
    }

    pub fn from_int(num: EMat) -> Self {
        ScaledMat::new(num, 1)
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            self.num = emat_scale(-Eis::ONE, &self.num);
        }
        let mut g = self.den;
        for row in &self.num {
            for e in row {
                g = gcd_i64(g, gcd_i64(e.a, e.b));
                if g == 1 {
                    return;
                }
            }
        }
        // All-zero numerator: g is still den; collapse to den = 1.
        for row in &mut self.num {
            for e in row.iter_mut() {
                *e = Eis::new(e.a / g, e.b / g);
            }
        }
        self.den /= g;
    }

    pub fn rows(&self) -> usize {
        self.num.len()
    }

    pub fn cols(&self) -> usize {
        if self.num.is_empty() {
            0
        } else {
            self.num[0].len()
        }
    }

    pub fn num(&self) -> &EMat {
        &self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    pub fn to_int(&self) -> Option<EMat> {
        if self.den == 1 {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn scale_eis(&self, c: Eis) -> Self {
        ScaledMat::new(emat_scale(c, &self.num), self.den)
    }

    pub fn scale_ratio(&self, num: Eis, den: i64) -> Self {
        let d = self.den.checked_mul(den).expect("denominator overflow");
        ScaledMat::new(emat_scale(num, &self.num), d)
    }

    pub fn mul(&self, other: &ScaledMat) -> Self {
        let d = self.den.checked_mul(other.den).expect("denominator overflow");
        ScaledMat::new(emat_mul(&self.num, &other.num), d)
    }

    pub fn sub(&self, other: &ScaledMat) -> Self {
        let a = emat_scale(Eis::from(other.den), &self.num);
        let b = emat_scale(Eis::from(self.den), &other.num);
        let d = self.den.checked_mul(other.den).expect("denominator overflow");
        ScaledMat::new(emat_sub(&a, &b), d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::Eis;

    const TH: Eis = Eis::THETA;

    #[test]
    fn normalization_cancels_content_and_sign() {
        let a = ScaledMat::new(vec![vec![Eis::new(3, 3), Eis::new(6, 0)]], 6);
        let b = ScaledMat::new(vec![vec![Eis::new(1, 1), Eis::new(2, 0)]], 2);
        assert_eq!(a, b);
        let c = ScaledMat::new(vec![vec![Eis::new(-1, 0)]], -2);
        assert_eq!(c, ScaledMat::new(vec![vec![Eis::new(1, 0)]], 2));
        let z = ScaledMat::new(emat_zero(2, 2), 7);
        assert!(z.is_integral());
    }

    #[test]
    fn theta_squared_over_three_is_minus_one() {
        let m = ScaledMat::new(vec![vec![TH]], 3).scale_eis(TH);
        assert_eq!(m, ScaledMat::from_int(vec![vec![Eis::new(-1, 0)]]));
        assert!(m.is_integral());
    }

    #[test]
    fn product_multiplies_denominators() {
        let half = ScaledMat::new(vec![vec![Eis::ONE]], 2);
        let third = ScaledMat::new(vec![vec![Eis::ONE]], 3);
        assert_eq!(half.mul(&third), ScaledMat::new(vec![vec![Eis::ONE]], 6));
        assert_eq!(
            half.sub(&third),
            ScaledMat::new(vec![vec![Eis::ONE]], 6)
        );
    }

    #[test]
    fn conj_transpose_involution() {
        let a = vec![
            vec![Eis::new(1, 2), Eis::new(0, -1), TH],
            vec![Eis::new(-3, 1), Eis::ONE, Eis::ZERO],
        ];
        assert_eq!(emat_conj_t(&emat_conj_t(&a)), a);
        let id = emat_identity(3);
        assert_eq!(emat_mul(&a, &id), a);
    }
}
