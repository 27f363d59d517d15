//! Linear codes over small fields: canonical generators, plain and
//! Hermitian duals, exact weight statistics, and the three classical codes
//! used to glue root lattices (tetracode, hexacode, ternary Golay).

use crate::fields::{Field, F3, F4};
use crate::fmat::{rref, right_kernel, Rref};
use crate::Error;
use std::collections::BTreeMap;

/// A linear code, stored by the reduced row echelon form of its generator
/// matrix, so equal codes compare equal structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Code<F: Field> {
    len: usize,
    gen: Rref<F>,
}

pub fn weight<F: Field>(w: &[F]) -> usize {
    w.iter().filter(|x| !x.is_zero()).count()
}

impl<F: Field> Code<F> {
    pub fn from_rows(len: usize, rows: &[Vec<F>]) -> Self {
        for r in rows {
            assert_eq!(r.len(), len);
        }
        Code { len, gen: rref(rows) }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.gen.dim()
    }

    pub fn size(&self) -> u64 {
        (F::ORDER as u64).pow(self.dim() as u32)
    }

    pub fn generator(&self) -> &[Vec<F>] {
        &self.gen.rows
    }

    pub fn contains(&self, w: &[F]) -> bool {
        w.len() == self.len && self.gen.contains(w)
    }

    /// Every codeword, in coefficient-lexicographic order. Refuses to
    /// materialize more than 2²⁰ words.
    pub fn codewords(&self) -> Result<Vec<Vec<F>>, Error> {
        let k = self.dim();
        if self.size() > (1 << 20) {
            return Err(Error::CodeTooLarge { dim: k });
        }
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut idx = vec![0usize; k];
        loop {
            let mut w = vec![F::zero(); self.len];
            for (i, &c) in idx.iter().enumerate() {
                let ci = F::from_index(c);
                if !ci.is_zero() {
                    for (wj, gj) in w.iter_mut().zip(&self.gen.rows[i]) {
                        *wj = wj.add(ci.mul(*gj));
                    }
                }
            }
            out.push(w);
            // Increment the base-ORDER counter.
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < F::ORDER {
                    break;
                }
                idx[i] = 0;
            }
        }
    }

    /// Dual under the plain bilinear form `Σ xᵢyᵢ`.
    pub fn dual_plain(&self) -> Code<F> {
        if self.dim() == 0 {
            let rows: Vec<Vec<F>> = (0..self.len)
                .map(|i| (0..self.len).map(|j| if i == j { F::one() } else { F::zero() }).collect())
                .collect();
            return Code::from_rows(self.len, &rows);
        }
        Code::from_rows(self.len, &right_kernel(&self.gen.rows))
    }

    /// Dual under the Hermitian form `Σ xᵢ·conj(yᵢ)`.
    pub fn dual_hermitian(&self) -> Code<F> {
        let d = self.dual_plain();
        let rows: Vec<Vec<F>> = d
            .gen
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.conj()).collect())
            .collect();
        Code::from_rows(self.len, &rows)
    }

    pub fn weight_distribution(&self) -> Result<BTreeMap<usize, usize>, Error> {
        let mut dist = BTreeMap::new();
        for w in self.codewords()? {
            *dist.entry(weight(&w)).or_insert(0) += 1;
        }
        Ok(dist)
    }

    pub fn min_weight(&self) -> Result<usize, Error> {
        Ok(*self
            .weight_distribution()?
            .keys()
            .find(|&&w| w > 0)
            .expect("nonzero code"))
    }
}

/// Signed composition of a ternary word via the centered lift: number of
/// `+1` entries and number of `−1` entries.
pub fn signs(w: &[F3]) -> (usize, usize) {
    let plus = w.iter().filter(|x| x.lift_centered() == 1).count();
    let minus = w.iter().filter(|x| x.lift_centered() == -1).count();
    (plus, minus)
}

/// Census keyed by `(support, max(n₊, n₋), min(n₊, n₋))`.
pub fn census_balanced(words: &[Vec<F3>]) -> BTreeMap<(usize, usize, usize), usize> {
    let mut out = BTreeMap::new();
    for w in words {
        let (p, m) = signs(w);
        *out.entry((p + m, p.max(m), p.min(m))).or_insert(0) += 1;
    }
    out
}

/// Census keyed by `(support, n₊, n₋)`.
pub fn census_signed(words: &[Vec<F3>]) -> BTreeMap<(usize, usize, usize), usize> {
    let mut out = BTreeMap::new();
    for w in words {
        let (p, m) = signs(w);
        *out.entry((p + m, p, m)).or_insert(0) += 1;
    }
    out
}

/// The `[4, 2, 3]` self-dual ternary code.
pub fn tetracode() -> Code<F3> {
    let r = |v: &[i64]| -> Vec<F3> { v.iter().map(|&x| F3::from_i64(x)).collect() };
    Code::from_rows(4, &[r(&[0, 1, 1, 1]), r(&[1, 0, 1, -1])])
}

/// The `[6, 3, 4]` Hermitian self-dual quaternary hexacode.
pub fn hexacode() -> Code<F4> {
    let o = F4::ZERO;
    let i = F4::ONE;
    let p = F4::PI;
    Code::from_rows(
        6,
        &[
            vec![i, o, o, p, i, i],
            vec![o, i, o, i, p, i],
            vec![o, o, i, i, i, p],
        ],
    )
}

/// The `[12, 6, 6]` extended ternary Golay code, `[I₆ | B]` with bordered
/// circulant `B` built from the quadratic residues mod 5.
pub fn ternary_golay() -> Code<F3> {
    let mut rows = Vec::new();
    for i in 0..6usize {
        let mut row = vec![F3::new(0); 12];
        row[i] = F3::new(1);
        for j in 0..6usize {
            row[6 + j] = F3::from_i64(golay_b(i, j));
        }
        rows.push(row);
    }
    Code::from_rows(12, &rows)
}

fn golay_b(i: usize, j: usize) -> i64 {
    match (i, j) {
        (0, 0) => 0,
        (0, _) | (_, 0) => 1,
        _ if i == j => 0,
        // Circulant on Z₅: +1 at quadratic-residue offsets {1, 4}.
        _ => {
            let d = (j + 5 - i) % 5;
            if d == 1 || d == 4 {
                1
            } else {
                -1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetracode_invariants() {
        let c = tetracode();
        assert_eq!((c.len(), c.dim(), c.size()), (4, 2, 9));
        assert_eq!(c.dual_plain(), c);
        let dist = c.weight_distribution().unwrap();
        assert_eq!(dist, BTreeMap::from([(0, 1), (3, 8)]));
        assert_eq!(c.min_weight().unwrap(), 3);
    }

    #[test]
    fn hexacode_invariants() {
        let c = hexacode();
        assert_eq!((c.len(), c.dim(), c.size()), (6, 3, 64));
        assert_eq!(c.dual_hermitian(), c);
        let dist = c.weight_distribution().unwrap();
        assert_eq!(dist, BTreeMap::from([(0, 1), (4, 45), (6, 18)]));
    }

    #[test]
    fn ternary_golay_invariants() {
        let c = ternary_golay();
        assert_eq!((c.len(), c.dim(), c.size()), (12, 6, 729));
        assert_eq!(c.dual_plain(), c);
        let dist = c.weight_distribution().unwrap();
        assert_eq!(dist, BTreeMap::from([(0, 1), (6, 264), (9, 440), (12, 24)]));
    }

    #[test]
    fn duality_is_an_involution_and_orthogonal() {
        let c = tetracode();
        let d = c.dual_plain();
        assert_eq!(d.dual_plain(), c);
        for w in c.codewords().unwrap() {
            for v in d.codewords().unwrap() {
                let mut s = F3::new(0);
                for (a, b) in w.iter().zip(&v) {
                    s = s.add(a.mul(*b));
                }
                assert!(s.is_zero());
            }
        }
        let h = hexacode();
        assert_eq!(h.dual_hermitian().dual_hermitian(), h);
        assert_eq!(h.dim() + h.dual_plain().dim(), h.len());
        // The zero code's dual is everything.
        let z: Code<F3> = Code::from_rows(3, &[]);
        assert_eq!(z.dual_plain().dim(), 3);
    }

    #[test]
    fn censuses_on_small_sets() {
        let words = tetracode().codewords().unwrap();
        let bal = census_balanced(&words);
        // Zero word; ±(0,1,1,1) all of one sign; six words splitting 2–1.
        assert_eq!(
            bal,
            BTreeMap::from([((0, 0, 0), 1), ((3, 3, 0), 2), ((3, 2, 1), 6)])
        );
        let sgn = census_signed(&words);
        assert_eq!(
            sgn,
            BTreeMap::from([
                ((0, 0, 0), 1),
                ((3, 3, 0), 1),
                ((3, 0, 3), 1),
                ((3, 2, 1), 3),
                ((3, 1, 2), 3),
            ])
        );
    }
}
