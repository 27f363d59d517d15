//! The fields `F₃` and `F₄` that receive the residue maps of `E`.
//!
//! `F₃ = E/θE` carries the ternary codes (tetracode, Golay code, the line
//! codes of `P²F₃`); `F₄ = E/2E` carries the hexacode. `F₄` is written
//! `{0, 1, ϖ, ϖ²}` with `ϖ² = ϖ + 1`; its conjugation is the Frobenius
//! `x ↦ x²`, matching complex conjugation on `E` under the residue map.

use std::fmt;
use std::hash::Hash;

/// A small finite field with the operations the linear algebra needs.
///
/// `conj` is the identity on `F₃` and the Frobenius on `F₄`; it is the
/// coefficient involution for Hermitian code duality.
pub trait Field: Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const ORDER: usize;
    const NAME: &'static str;
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, o: Self) -> Self;
    fn neg(self) -> Self;
    fn mul(self, o: Self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(self) -> Self;
    fn conj(self) -> Self;
    fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }
    fn is_zero(self) -> bool {
        self == Self::zero()
    }
    /// All elements, zero first, in a fixed order.
    fn elements() -> Vec<Self>;
    /// Position of `self` in [`Field::elements`].
    fn index(self) -> usize;
    fn from_index(i: usize) -> Self;
}

/// The field with three elements, stored as `0, 1, 2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F3(u8);

impl F3 {
    pub const fn new(v: u8) -> Self {
        F3(v % 3)
    }
    pub const fn from_i64(v: i64) -> Self {
        F3(v.rem_euclid(3) as u8)
    }
    pub const fn value(self) -> u8 {
        self.0
    }
    /// The centered lift `0, 1, −1` of `0, 1, 2`.
    pub const fn lift_centered(self) -> i64 {
        match self.0 {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }
}

impl Field for F3 {
    const ORDER: usize = 3;
    const NAME: &'static str = "F3";
    fn zero() -> Self {
        F3(0)
    }
    fn one() -> Self {
        F3(1)
    }
    fn add(self, o: Self) -> Self {
        F3((self.0 + o.0) % 3)
    }
    fn neg(self) -> Self {
        F3((3 - self.0) % 3)
    }
    fn mul(self, o: Self) -> Self {
        F3((self.0 * o.0) % 3)
    }
    fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F3");
        self // 1⁻¹ = 1, 2⁻¹ = 2
    }
    fn conj(self) -> Self {
        self
    }
    fn elements() -> Vec<Self> {
        vec![F3(0), F3(1), F3(2)]
    }
    fn index(self) -> usize {
        self.0 as usize
    }
    fn from_index(i: usize) -> Self {
        F3::new(i as u8)
    }
}

impl fmt::Display for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field with four elements `a + bϖ`, stored as the bit pair `a | b<<1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F4(u8);

impl F4 {
    /// `a + bϖ` from bits `a, b ∈ {0, 1}`.
    pub const fn from_parts(a: u8, b: u8) -> Self {
        F4((a & 1) | ((b & 1) << 1))
    }
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    /// The element `ϖ` (a primitive cube root of unity in `F₄ˣ`).
    pub const PI: F4 = F4(2);
    /// `ϖ² = ϖ + 1`.
    pub const PI_SQ: F4 = F4(3);
}

impl Field for F4 {
    const ORDER: usize = 4;
    const NAME: &'static str = "F4";
    fn zero() -> Self {
        F4(0)
    }
    fn one() -> Self {
        F4(1)
    }
    fn add(self, o: Self) -> Self {
        F4(self.0 ^ o.0)
    }
    fn neg(self) -> Self {
        self // characteristic 2
    }
    fn mul(self, o: Self) -> Self {
        if self.0 == 0 || o.0 == 0 {
            return F4(0);
        }
        // Discrete logs base ϖ: 1 ↦ 0, ϖ ↦ 1, ϖ² ↦ 2.
        const LOG: [u8; 4] = [0, 0, 1, 2];
        const EXP: [u8; 3] = [1, 2, 3];
        F4(EXP[((LOG[self.0 as usize] + LOG[o.0 as usize]) % 3) as usize])
    }
    fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F4");
        self.mul(self) // x³ = 1 for x ≠ 0, so x⁻¹ = x²
    }
    fn conj(self) -> Self {
        self.mul(self) // Frobenius x ↦ x²
    }
    fn elements() -> Vec<Self> {
        vec![F4(0), F4(1), F4(2), F4(3)]
    }
    fn index(self) -> usize {
        self.0 as usize
    }
    fn from_index(i: usize) -> Self {
        assert!(i < 4);
        F4(i as u8)
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "0"),
            1 => write!(f, "1"),
            2 => write!(f, "ϖ"),
            _ => write!(f, "ϖ²"),
        }
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms<F: Field>() {
        let all = F::elements();
        assert_eq!(all.len(), F::ORDER);
        for &x in &all {
            assert_eq!(F::from_index(x.index()), x);
            assert_eq!(x.add(F::zero()), x);
            assert_eq!(x.mul(F::one()), x);
            assert_eq!(x.add(x.neg()), F::zero());
            assert_eq!(x.conj().conj(), x);
            if !x.is_zero() {
                assert_eq!(x.mul(x.inv()), F::one());
            }
            for &y in &all {
                assert_eq!(x.add(y), y.add(x));
                assert_eq!(x.mul(y), y.mul(x));
                assert_eq!(x.conj().mul(y.conj()), x.mul(y).conj());
                for &z in &all {
                    assert_eq!(x.add(y).add(z), x.add(y.add(z)));
                    assert_eq!(x.mul(y).mul(z), x.mul(y.mul(z)));
                    assert_eq!(x.mul(y.add(z)), x.mul(y).add(x.mul(z)));
                }
            }
        }
    }

    #[test]
    fn f3_axioms() {
        check_field_axioms::<F3>();
    }

    #[test]
    fn f4_axioms() {
        check_field_axioms::<F4>();
        // ϖ² + ϖ + 1 = 0 and conjugation swaps ϖ and ϖ².
        assert_eq!(F4::PI.mul(F4::PI), F4::PI_SQ);
        assert_eq!(F4::PI_SQ.add(F4::PI).add(F4::one()), F4::zero());
        assert_eq!(F4::PI.conj(), F4::PI_SQ);
    }

    #[test]
    fn centered_lift_round_trips() {
        for v in 0..3u8 {
            let x = F3::new(v);
            let lift = x.lift_centered();
            assert_eq!(F3::new(lift.rem_euclid(3) as u8), x);
        }
    }
}
