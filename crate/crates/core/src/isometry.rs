//! Isometries of Hermitian lattices: order-3 reflections in norm-3 roots,
//! finite closures, relation checks, and automorphism counting.
//!
//! Maps are stored in lattice basis coordinates acting on row vectors:
//! `coords(σ(v)) = coords(v) · M`, so composition "apply `a` then `b`" is
//! the matrix product `A·B`.

use crate::eisenstein::Eis;
use crate::fmat::group_closure;
use crate::hnf;
use crate::lattice::Lattice;
use crate::par;
use crate::scaled::{emat_conj_t, emat_identity, emat_mul, vec_mat, EMat, EVec};
use crate::Error;
use std::collections::HashMap;

/// An `E`-linear map on a lattice, in basis coordinates (rows of the matrix
/// are the coordinates of the basis images).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BasisMap(pub EMat);

impl BasisMap {
    pub fn identity(rank: usize) -> Self {
        BasisMap(emat_identity(rank))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Apply `self` then `other`.
    pub fn then(&self, other: &BasisMap) -> BasisMap {
        BasisMap(emat_mul(&self.0, &other.0))
    }

    pub fn apply_coords(&self, c: &[Eis]) -> EVec {
        vec_mat(c, &self.0)
    }

    pub fn det(&self) -> Eis {
        hnf::det(&self.0)
    }

    /// Multiplicative order, if at most `cap`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let id = BasisMap::identity(self.rank());
        let mut p = self.clone();
        for k in 1..=cap {
            if p == id {
                return Some(k);
            }
            p = p.then(self);
        }
        None
    }
}

/// The order-3 reflection `x ↦ x + ω²·(⟨x, r⟩/θ)·r` in a norm-3 root
/// `r ∈ L`. Requires all inner products with `r` to be divisible by θ,
/// which holds whenever the lattice pairs into θE.
pub fn triflection(lat: &Lattice, root: &[Eis]) -> Result<BasisMap, Error> {
    let n = lat.form().norm(root);
    if n != 3 {
        return Err(Error::NotARoot(format!("norm {n} is not 3")));
    }
    if !lat.contains(root) {
        return Err(Error::NotInLattice);
    }
    let w2 = Eis::OMEGA * Eis::OMEGA;
    let mut rows = Vec::with_capacity(lat.rank());
    for ni in lat.basis().num() {
        let t = lat
            .form()
            .inner(ni, root)
            .div_exact(Eis::THETA)
            .ok_or(Error::NonIntegral("inner product with root not divisible by θ"))?;
        let image: EVec = ni
            .iter()
            .zip(root)
            .map(|(&x, &r)| x + w2 * t * r)
            .collect();
        let c = lat
            .coords_of_numerator(&image)
            .ok_or(Error::SelfCheck("reflection image left the lattice".into()))?;
        rows.push(c);
    }
    Ok(BasisMap(rows))
}

/// Whether `m` preserves the Hermitian form of `lat`.
pub fn is_isometry(lat: &Lattice, m: &BasisMap) -> bool {
    let g = lat.form().gram(lat.basis().num());
    let mg = emat_mul(&m.0, &g);
    let mgmh = emat_mul(&mg, &emat_conj_t(&m.0));
    mgmh == g
}

/// `aba = bab` (maps composed left to right).
pub fn braid_related(a: &BasisMap, b: &BasisMap) -> bool {
    a.then(b).then(a) == b.then(a).then(b)
}

pub fn commute(a: &BasisMap, b: &BasisMap) -> bool {
    a.then(b) == b.then(a)
}

/// Closure of the generated group, BFS order. Errors if it exceeds `cap`.
pub fn closure(gens: &[BasisMap], cap: usize) -> Result<Vec<BasisMap>, Error> {
    group_closure(gens, |a, b| a.then(b), cap)
}

/// Image of an integral lattice vector under the map, if itself integral.
pub fn apply_to_integral(lat: &Lattice, m: &BasisMap, v: &[Eis]) -> Option<EVec> {
    let c = lat.coords(v)?;
    let num = vec_mat(&m.apply_coords(&c), lat.basis().num());
    let d = lat.den();
    num.iter()
        .map(|e| (e.a % d == 0 && e.b % d == 0).then(|| Eis::new(e.a / d, e.b / d)))
        .collect()
}

/// If `m` sends `v` to a scalar multiple `c·v`, return `c`.
pub fn scalar_multiple_on(lat: &Lattice, m: &BasisMap, v: &[Eis]) -> Option<Eis> {
    let image = apply_to_integral(lat, m, v)?;
    let k = v.iter().position(|e| !e.is_zero())?;
    let c = image[k].div_exact(v[k])?;
    image
        .iter()
        .zip(v)
        .all(|(&iw, &iv)| iw == c * iv)
        .then_some(c)
}

/// Number of isometries of a definite integral lattice onto itself, by
/// backtracking over Gram-compatible basis images. The top level fans out
/// in parallel.
pub fn aut_count(lat: &Lattice, cap: usize) -> Result<u64, Error> {
    assert_eq!(lat.den(), 1, "automorphism search expects an integral basis");
    let r = lat.rank();
    if r == 0 {
        return Ok(1);
    }
    let gram = lat.gram().to_int().expect("integral Gram");
    let diag: Vec<i64> = (0..r).map(|i| gram[i][i].a).collect();
    let max_norm = *diag.iter().max().unwrap();
    let reps = lat.vectors_up_to(max_norm, 1, cap)?;
    let mut by_norm: HashMap<i64, Vec<EVec>> = HashMap::new();
    for v in reps {
        assert_eq!(v.norm_den, 1);
        let e = by_norm.entry(v.norm_num).or_default();
        e.push(v.num.iter().map(|x| -*x).collect());
        e.push(v.num);
    }
    let empty: Vec<EVec> = Vec::new();
    let cands: Vec<&Vec<EVec>> = diag.iter().map(|n| by_norm.get(n).unwrap_or(&empty)).collect();

    fn rec(
        lat: &Lattice,
        gram: &EMat,
        cands: &[&Vec<EVec>],
        chosen: &mut Vec<EVec>,
        level: usize,
    ) -> u64 {
        if level == gram.len() {
            return 1;
        }
        let mut total = 0;
        'cand: for c in cands[level] {
            for (j, prev) in chosen.iter().enumerate() {
                if lat.form().inner(c, prev) != gram[level][j] {
                    continue 'cand;
                }
            }
            chosen.push(c.clone());
            total += rec(lat, gram, cands, chosen, level + 1);
            chosen.pop();
        }
        total
    }

    let first = cands[0];
    let counts = par::map(first, |c| {
        let mut chosen = vec![c.clone()];
        rec(lat, &gram, &cands, &mut chosen, 1)
    });
    Ok(counts.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Form;

    const TH: Eis = Eis::THETA;

    fn e(a: i64, b: i64) -> Eis {
        Eis::new(a, b)
    }

    #[test]
    fn rank_one_reflection_is_multiplication_by_omega() {
        let l = Lattice::from_rows(Form::definite(1), &[vec![TH]]);
        let t = triflection(&l, &[TH]).unwrap();
        assert_eq!(t.0, vec![vec![Eis::OMEGA]]);
        assert_eq!(t.order(10), Some(3));
        assert!(is_isometry(&l, &t));
        assert_eq!(t.det().norm(), 1);
        // The reflection only depends on the root up to units.
        for &u in &Eis::UNITS {
            assert_eq!(triflection(&l, &[TH * u]).unwrap(), t);
        }
        assert_eq!(scalar_multiple_on(&l, &t, &[TH]), Some(Eis::OMEGA));
    }

    #[test]
    fn reflection_fixes_orthogonal_vectors() {
        let l = Lattice::from_rows(
            Form::definite(2),
            &[vec![TH, e(0, 0)], vec![e(0, 0), TH]],
        );
        let t = triflection(&l, &[TH, e(0, 0)]).unwrap();
        assert_eq!(t.0, vec![vec![Eis::OMEGA, e(0, 0)], vec![e(0, 0), Eis::ONE]]);
        assert_eq!(
            apply_to_integral(&l, &t, &[e(0, 0), TH]).unwrap(),
            vec![e(0, 0), TH]
        );
        let s = triflection(&l, &[e(0, 0), TH]).unwrap();
        assert!(commute(&t, &s));
        assert!(!braid_related(&t, &s)); // aba = bab would force a = b here
    }

    #[test]
    fn braid_relation_tracks_inner_product_norm() {
        // ⟨r, s⟩ = −θ has norm 3: the two reflections braid and generate a
        // group of order 24.
        let r = vec![e(1, 0), e(1, 0), e(1, 0)];
        let s = vec![TH, e(0, 0), e(0, 0)];
        let l = Lattice::from_rows(Form::definite(3), &[r.clone(), s.clone()]);
        assert_eq!(l.form().inner(&r, &s).norm(), 3);
        let a = triflection(&l, &r).unwrap();
        let b = triflection(&l, &s).unwrap();
        assert!(is_isometry(&l, &a) && is_isometry(&l, &b));
        assert!(braid_related(&a, &b));
        assert!(!commute(&a, &b));
        let g = closure(&[a, b], 1000).unwrap();
        assert_eq!(g.len(), 24);
        for m in &g {
            assert!(is_isometry(&l, m));
        }
    }

    #[test]
    fn automorphism_counts_of_unit_and_scaled_cubes() {
        let th1 = Lattice::from_rows(Form::definite(1), &[vec![TH]]);
        assert_eq!(aut_count(&th1, 1000).unwrap(), 6);
        let th2 = Lattice::from_rows(
            Form::definite(2),
            &[vec![TH, e(0, 0)], vec![e(0, 0), TH]],
        );
        // Monomial maps: 6² units times the coordinate swap.
        assert_eq!(aut_count(&th2, 1000).unwrap(), 72);
    }
}
