//! The Eisenstein integers `E = Z[ω]` with exact, overflow-checked arithmetic.
//!
//! An element is stored as `a + bω` with `i64` coordinates and
//! `ω² = −1 − ω`. Conjugation sends `ω ↦ ω̄ = ω²`, so
//! `conj(a + bω) = (a − b) − bω`, and the norm is
//! `N(a + bω) = a² − ab + b² ≥ 0`. The six units are `±1, ±ω, ±ω²`.
//!
//! `E` is Euclidean for the norm: [`Eis::divmod`] rounds both rational
//! coordinates of `x/y` to nearest integers (ties toward zero), which makes
//! the remainder norm at most `3/4` of the divisor norm. On top of the
//! division sit gcds, exact division, a canonical associate (used as the
//! pivot normalization in Hermite normal form), and a canonical residue
//! representative modulo any nonzero element.
//!
//! Two residue maps connect `E` to the small fields:
//! reduction modulo the ramified prime `θ = 1 + 2ω` is `a + bω ↦ a + b ∈ F₃`,
//! and reduction modulo 2 is `a + bω ↦ a + bϖ ∈ F₄`.
//!
//! All arithmetic is overflow-checked; coordinates that would leave `i64`
//! abort with a panic rather than wrapping. The computations in this crate
//! keep coordinates far below that bound.

use crate::fields::{F3, F4};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

#[inline]
#[track_caller]
fn ck(v: i128) -> i64 {
    i64::try_from(v).expect("integer overflow in Eisenstein arithmetic")
}

/// An Eisenstein integer `a + bω`, `ω² + ω + 1 = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Eis {
    /// Coefficient of 1.
    pub a: i64,
    /// Coefficient of ω.
    pub b: i64,
}

impl Eis {
    /// `θ = ω − ω̄ = 1 + 2ω`, the ramified prime over 3: `θθ̄ = 3`.
    pub const THETA: Eis = Eis { a: 1, b: 2 };
    /// `ω`, a primitive cube root of unity.
    pub const OMEGA: Eis = Eis { a: 0, b: 1 };
    /// `ω² = ω̄ = −1 − ω`.
    pub const OMEGA_BAR: Eis = Eis { a: -1, b: -1 };
    /// The multiplicative identity.
    pub const ONE: Eis = Eis { a: 1, b: 0 };
    /// The additive identity.
    pub const ZERO: Eis = Eis { a: 0, b: 0 };
    /// The six units of `E` in the fixed order `1, ω, ω², −1, −ω, −ω²`.
    pub const UNITS: [Eis; 6] = [
        Eis { a: 1, b: 0 },
        Eis { a: 0, b: 1 },
        Eis { a: -1, b: -1 },
        Eis { a: -1, b: 0 },
        Eis { a: 0, b: -1 },
        Eis { a: 1, b: 1 },
    ];

    /// `a + bω`.
    pub const fn new(a: i64, b: i64) -> Self {
        Eis { a, b }
    }

    pub const fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Complex conjugate: `a + bω ↦ (a − b) − bω`.
    pub fn conj(self) -> Self {
        Eis { a: ck(self.a as i128 - self.b as i128), b: ck(-(self.b as i128)) }
    }

    /// The norm `a² − ab + b² = x·x̄ ≥ 0`.
    pub fn norm(self) -> i64 {
        let (a, b) = (self.a as i128, self.b as i128);
        ck(a * a - a * b + b * b)
    }

    /// True when the norm is 1, i.e. `self` is one of the six units.
    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// Twice the real part under `ω = (−1+√−3)/2`: `2a − b`. Always exact.
    pub fn twice_re(self) -> i64 {
        ck(2 * self.a as i128 - self.b as i128)
    }

    /// Euclidean division: `self = q·d + r` with `N(r) ≤ ¾·N(d) < N(d)`.
    ///
    /// The quotient rounds both coordinates of `self/d` to the nearest
    /// integer, ties toward zero, which makes `(q, r)` a deterministic
    /// function of the operands. Panics if `d = 0`.
    pub fn divmod(self, d: Eis) -> (Eis, Eis) {
        assert!(!d.is_zero(), "Eisenstein division by zero");
        let n = d.norm() as i128;
        // self / d = self·conj(d) / N(d), computed exactly in i128.
        let (xa, xb) = (self.a as i128, self.b as i128);
        let c = d.conj();
        let (ca, cb) = (c.a as i128, c.b as i128);
        let pa = xa * ca - xb * cb;
        let pb = xa * cb + xb * ca - xb * cb;
        let q = Eis { a: ck(round_div_ties_to_zero(pa, n)), b: ck(round_div_ties_to_zero(pb, n)) };
        let r = self - q * d;
        debug_assert!(4 * r.norm() <= 3 * d.norm());
        (q, r)
    }

    /// The quotient `self / d` when the division is exact, else `None`.
    pub fn div_exact(self, d: Eis) -> Option<Eis> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.divmod(d);
        r.is_zero().then_some(q)
    }

    /// Whether `d` divides `self` (with `0 | 0` true).
    pub fn divisible_by(self, d: Eis) -> bool {
        if d.is_zero() {
            self.is_zero()
        } else {
            self.divmod(d).1.is_zero()
        }
    }

    /// Greatest common divisor, normalized to its canonical associate.
    pub fn gcd(self, other: Eis) -> Eis {
        let (mut x, mut y) = (self, other);
        while !y.is_zero() {
            let (_, r) = x.divmod(y);
            x = y;
            y = r;
        }
        if x.is_zero() {
            Self::ZERO
        } else {
            x.canonical_associate().0
        }
    }

    /// Extended gcd: returns `(g, s, t)` with `s·self + t·other = g` and `g`
    /// the canonical-associate gcd.
    pub fn xgcd(self, other: Eis) -> (Eis, Eis, Eis) {
        let (mut r0, mut r1) = (self, other);
        let (mut s0, mut s1) = (Self::ONE, Self::ZERO);
        let (mut t0, mut t1) = (Self::ZERO, Self::ONE);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(r1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s0 - q * s1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0.is_zero() {
            return (Self::ZERO, Self::ZERO, Self::ZERO);
        }
        let (g, u) = r0.canonical_associate();
        (g, s0 * u, t0 * u)
    }

    /// The canonical associate and the unit that reaches it.
    ///
    /// Among the six unit multiples of a nonzero element, the canonical one
    /// maximizes `(a, b)` lexicographically. Returns `(assoc, u)` with
    /// `assoc = self·u`. The zero element is its own associate.
    pub fn canonical_associate(self) -> (Eis, Eis) {
        if self.is_zero() {
            return (Self::ZERO, Self::ONE);
        }
        let mut best = (self, Self::ONE);
        for &u in &Self::UNITS[1..] {
            let c = self * u;
            if (c.a, c.b) > (best.0.a, best.0.b) {
                best = (c, u);
            }
        }
        best
    }

    /// Canonical representative of `self` modulo a nonzero `m`.
    ///
    /// Returns `(rep, q)` with `self = q·m + rep`, where `rep` is the
    /// residue-class element of minimal norm, ties broken by smallest
    /// `(a, b)`. The choice depends only on the residue class, which makes
    /// Hermite normal forms canonical.
    pub fn canonical_mod(self, m: Eis) -> (Eis, Eis) {
        let (q0, r0) = self.divmod(m);
        // Every class element of norm ≤ N(r0) is r0 + t·m with N(t) < 4.
        let mut best = (r0, q0);
        for s in -2i64..=2 {
            for u in -2i64..=2 {
                let t = Eis::new(s, u);
                if t.norm() >= 4 {
                    continue;
                }
                let cand = r0 + t * m;
                let better = match cand.norm().cmp(&best.0.norm()) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => (cand.a, cand.b) < (best.0.a, best.0.b),
                    std::cmp::Ordering::Greater => false,
                };
                if better {
                    best = (cand, q0 - t);
                }
            }
        }
        debug_assert_eq!(best.1 * m + best.0, self);
        best
    }

    /// Residue modulo `θ`: the ring map `E → F₃`, `a + bω ↦ a + b`.
    pub fn mod_theta(self) -> F3 {
        F3::new(((self.a as i128 + self.b as i128).rem_euclid(3)) as u8)
    }

    /// Residue modulo 2: the ring map `E → F₄`, `a + bω ↦ a + bϖ`.
    pub fn mod_two(self) -> F4 {
        F4::from_parts((self.a & 1) as u8, (self.b & 1) as u8)
    }

    /// Whether `θ | self`, i.e. the `F₃` residue vanishes.
    pub fn divisible_by_theta(self) -> bool {
        (self.a + self.b) % 3 == 0
    }
}

/// Round `p/n` (with `n > 0`) to the nearest integer, ties toward zero.
fn round_div_ties_to_zero(p: i128, n: i128) -> i128 {
    debug_assert!(n > 0);
    let q = p.div_euclid(n);
    let r = p.rem_euclid(n); // 0 ≤ r < n
    match (2 * r).cmp(&n) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        // Tie: p/n = q + 1/2; pick whichever of q, q+1 is closer to zero.
        std::cmp::Ordering::Equal => {
            if q >= 0 {
                q
            } else {
                q + 1
            }
        }
    }
}

impl From<i64> for Eis {
    fn from(a: i64) -> Self {
        Eis { a, b: 0 }
    }
}

impl Add for Eis {
    type Output = Eis;
    fn add(self, o: Eis) -> Eis {
        Eis { a: ck(self.a as i128 + o.a as i128), b: ck(self.b as i128 + o.b as i128) }
    }
}

impl Sub for Eis {
    type Output = Eis;
    fn sub(self, o: Eis) -> Eis {
        Eis { a: ck(self.a as i128 - o.a as i128), b: ck(self.b as i128 - o.b as i128) }
    }
}

impl Neg for Eis {
    type Output = Eis;
    fn neg(self) -> Eis {
        Eis { a: ck(-(self.a as i128)), b: ck(-(self.b as i128)) }
    }
}

impl Mul for Eis {
    type Output = Eis;
    fn mul(self, o: Eis) -> Eis {
        // (a+bω)(c+dω) = (ac − bd) + (ad + bc − bd)ω, using ω² = −1 − ω.
        let (a, b, c, d) = (self.a as i128, self.b as i128, o.a as i128, o.b as i128);
        Eis { a: ck(a * c - b * d), b: ck(a * d + b * c - b * d) }
    }
}

impl Mul<i64> for Eis {
    type Output = Eis;
    fn mul(self, k: i64) -> Eis {
        Eis { a: ck(self.a as i128 * k as i128), b: ck(self.b as i128 * k as i128) }
    }
}

impl AddAssign for Eis {
    fn add_assign(&mut self, o: Eis) {
        *self = *self + o;
    }
}

impl SubAssign for Eis {
    fn sub_assign(&mut self, o: Eis) {
        *self = *self - o;
    }
}

impl MulAssign for Eis {
    fn mul_assign(&mut self, o: Eis) {
        *self = *self * o;
    }
}

impl fmt::Display for Eis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "ω"),
            (0, -1) => write!(f, "-ω"),
            (0, b) => write!(f, "{b}ω"),
            (a, 1) => write!(f, "{a}+ω"),
            (a, -1) => write!(f, "{a}-ω"),
            (a, b) if b > 0 => write!(f, "{a}+{b}ω"),
            (a, b) => write!(f, "{a}-{}ω", -b),
        }
    }
}

impl fmt::Debug for Eis {
    // Forward to Display; keeps matrices of Eisenstein numbers legible.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integer gcd on absolute values, `gcd(0, 0) = 0`.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    i64::try_from(a).expect("gcd overflow")
}
