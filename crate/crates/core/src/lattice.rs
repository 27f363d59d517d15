//! Hermitian lattices over `E` inside a diagonal ±1 ambient form.
//!
//! A lattice is stored as a (possibly fractional) basis in canonical form:
//! the numerator rows are the Hermite basis of the module they span and the
//! denominator is content-normalized, so two lattices are equal iff their
//! stored representations are equal. All inner products are exact; the real
//! form (a `Z`-lattice of twice the rank carrying `2·Re⟨·,·⟩`) bridges to
//! the integer enumeration machinery in [`crate::lll`].

use crate::eisenstein::Eis;
use crate::hnf::{self, EModule, Quotient};
use crate::lll;
use crate::rat::{rat, symmetric_signature, Rat};
use crate::scaled::{emat_conj_t, emat_mul, emat_scale, EMat, EVec, ScaledMat};
use crate::Error;
use num::Integer;

/// The ambient Hermitian form `⟨x, y⟩ = Σ sᵢ·xᵢ·ȳᵢ` with `sᵢ ∈ {±1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Form {
    signs: Vec<i64>,
}

impl Form {
    /// Positive definite form on `E^n`.
    pub fn definite(n: usize) -> Self {
        Form { signs: vec![1; n] }
    }

    /// Signature `(n−1, 1)`: the first coordinate carries `−1`.
    pub fn lorentzian(n: usize) -> Self {
        let mut signs = vec![1; n];
        signs[0] = -1;
        Form { signs }
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, i: usize) -> i64 {
        self.signs[i]
    }

    pub fn inner(&self, x: &[Eis], y: &[Eis]) -> Eis {
        assert_eq!(x.len(), self.signs.len());
        assert_eq!(y.len(), self.signs.len());
        let mut s = Eis::ZERO;
        for i in 0..x.len() {
            s += (x[i] * y[i].conj()) * self.signs[i];
        }
        s
    }

    /// `⟨x, x⟩`, which is always a rational integer.
    pub fn norm(&self, x: &[Eis]) -> i64 {
        let n = self.inner(x, x);
        debug_assert_eq!(n.b, 0);
        n.a
    }

    pub fn gram(&self, rows: &[EVec]) -> EMat {
        rows.iter()
            .map(|x| rows.iter().map(|y| self.inner(x, y)).collect())
            .collect()
    }
}

/// A vector of a (possibly fractional) lattice: the actual vector is
/// `num / den`, and its norm is the reduced fraction `norm_num / norm_den`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatVec {
    pub num: EVec,
    pub den: i64,
    pub norm_num: i64,
    pub norm_den: i64,
}

impl LatVec {
    pub fn is_integral(&self) -> bool {
        self.num.iter().all(|e| e.a % self.den == 0 && e.b % self.den == 0)
    }

    pub fn to_integral(&self) -> Option<EVec> {
        self.is_integral()
            .then(|| self.num.iter().map(|e| Eis::new(e.a / self.den, e.b / self.den)).collect())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice {
    form: Form,
    basis: ScaledMat,
    module: EModule,
}

impl Lattice {
    /// Lattice spanned over `E` by integral rows.
    pub fn from_rows(form: Form, rows: &[EVec]) -> Self {
        Lattice::from_scaled(form, ScaledMat::from_int(rows.to_vec()))
    }

    /// Lattice spanned by the rows of a fractional matrix.
    pub fn from_scaled(form: Form, s: ScaledMat) -> Self {
        assert!(
            s.rows() == 0 || s.cols() == form.dim(),
            "basis does not match ambient form"
        );
        let module = EModule::from_rows(form.dim(), s.num());
        let basis = ScaledMat::new(module.basis().clone(), s.den());
        let module = EModule::from_rows(form.dim(), basis.num());
        Lattice { form, basis, module }
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.dim()
    }

    pub fn basis(&self) -> &ScaledMat {
        &self.basis
    }

    pub fn den(&self) -> i64 {
        self.basis.den()
    }

    /// The canonical module spanned by the numerator rows (`den`·lattice).
    pub fn module(&self) -> &EModule {
        &self.module
    }

    /// Gram matrix of the basis, as numerator matrix over `den²`.
    pub fn gram(&self) -> ScaledMat {
        let n = self.form.gram(self.basis.num());
        let d = self.basis.den();
        ScaledMat::new(n, d.checked_mul(d).expect("denominator overflow"))
    }

    /// Whether every inner product of lattice vectors lies in `E`.
    pub fn is_integrally_paired(&self) -> bool {
        self.gram().is_integral()
    }

    /// Whether every inner product lies in `θE` (norms then sit in `3Z`).
    pub fn inner_products_in_theta(&self) -> bool {
        match self.gram().to_int() {
            None => false,
            Some(g) => g
                .iter()
                .flatten()
                .all(|e| e.divisible_by(Eis::THETA)),
        }
    }

    pub fn contains(&self, v: &[Eis]) -> bool {
        self.contains_scaled(v, 1)
    }

    /// Membership of the fractional vector `num / den`.
    pub fn contains_scaled(&self, num: &[Eis], den: i64) -> bool {
        assert!(den > 0);
        let l = self.den().lcm(&den);
        let scaled: EVec = num.iter().map(|&e| e * (l / den)).collect();
        if l == self.den() {
            return self.module.contains(&scaled);
        }
        self.module_at(l).contains(&scaled)
    }

    /// Numerator module rescaled to the common denominator `l`.
    fn module_at(&self, l: i64) -> EModule {
        assert_eq!(l % self.den(), 0);
        let f = Eis::from(l / self.den());
        EModule::from_rows(self.ambient_dim(), &emat_scale(f, self.basis.num()))
    }

    pub fn contains_lattice(&self, sub: &Lattice) -> bool {
        assert_eq!(self.form, sub.form);
        let l = self.den().lcm(&sub.den());
        sub.module_at(l).is_submodule_of(&self.module_at(l))
    }

    /// Structure of `self / sub` for a finite-index sublattice.
    pub fn quotient(&self, sub: &Lattice) -> Quotient {
        assert_eq!(self.form, sub.form);
        let l = self.den().lcm(&sub.den());
        self.module_at(l).quotient_by(&sub.module_at(l))
    }

    /// Rescale by an `E` scalar.
    pub fn scale(&self, c: Eis) -> Lattice {
        Lattice::from_scaled(self.form.clone(), self.basis.scale_eis(c))
    }

    /// Lattice generated by both spans.
    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.form, other.form);
        let l = self.den().lcm(&other.den());
        let mut rows = emat_scale(Eis::from(l / self.den()), self.basis.num());
        rows.extend(emat_scale(Eis::from(l / other.den()), other.basis.num()));
        Lattice::from_scaled(self.form.clone(), ScaledMat::new(rows, l))
    }

    /// The dual lattice `{x ∈ span : ⟨x, L⟩ ⊆ E}`, via the exact adjugate:
    /// the dual basis is `G⁻¹·B = adj(Gₙ)·N·d / det(Gₙ)` where `B = N/d`
    /// and `Gₙ = N·F·N†`.
    pub fn dual(&self) -> Lattice {
        let gn = self.form.gram(self.basis.num());
        let d = hnf::det(&gn);
        assert_eq!(d.b, 0, "Hermitian Gram determinant must be rational");
        assert!(d.a != 0, "degenerate Gram matrix has no dual");
        let adj = hnf::adjugate(&gn);
        let rows = emat_scale(Eis::from(self.den()), &emat_mul(&adj, self.basis.num()));
        Lattice::from_scaled(self.form.clone(), ScaledMat::new(rows, d.a))
    }

    /// `θ · dual`, the classifying companion of `L`: `L ⊆ θL′` exactly when
    /// all inner products lie in `θE`, and `L = θL′` is the modularity the
    /// special lattices here satisfy.
    pub fn theta_dual_scaled(&self) -> Lattice {
        self.dual().scale(Eis::THETA)
    }

    /// Real Gram matrix of the *numerator* rows in the `Z`-basis
    /// `n₁, …, n_r, ωn₁, …, ωn_r`, entries `2·Re⟨·,·⟩`. The true real form
    /// is this divided by `den²`.
    pub fn real_gram_numerator(&self) -> Vec<Vec<i64>> {
        let g = self.form.gram(self.basis.num());
        let r = g.len();
        let tr = |e: Eis| e.twice_re();
        let mut out = vec![vec![0i64; 2 * r]; 2 * r];
        for i in 0..r {
            for j in 0..r {
                let w = Eis::OMEGA;
                out[i][j] = tr(g[i][j]);
                // ⟨x, ωy⟩ = ω̄·⟨x, y⟩ and ⟨ωx, y⟩ = ω·⟨x, y⟩.
                out[i][j + r] = tr(g[i][j] * w.conj());
                out[i + r][j] = tr(g[i][j] * w);
                out[i + r][j + r] = tr(g[i][j]);
            }
        }
        out
    }

    /// Complex signature `(positive, negative)`; panics on degeneracy.
    pub fn signature(&self) -> (usize, usize) {
        let rg = self.real_gram_numerator();
        let m: Vec<Vec<Rat>> = rg
            .iter()
            .map(|row| row.iter().map(|&v| rat(v)).collect())
            .collect();
        let (p, n, z) = symmetric_signature(m);
        assert_eq!(z, 0, "degenerate lattice has no signature");
        assert!(p % 2 == 0 && n % 2 == 0);
        (p / 2, n / 2)
    }

    /// All vectors `v` with `0 < |v|² ≤ p/q`, one per ±pair, sorted by norm
    /// then coordinates. Requires a definite lattice.
    pub fn vectors_up_to(&self, p: i64, q: i64, cap: usize) -> Result<Vec<LatVec>, Error> {
        assert!(p >= 0 && q > 0);
        let d = self.den();
        let rg = self.real_gram_numerator();
        // |v|² ≤ p/q ⟺ real numerator norm 2d²|v|² ≤ floor(2d²p/q).
        let bound = (2i64
            .checked_mul(d * d)
            .and_then(|x| x.checked_mul(p))
            .expect("bound overflow"))
            / q;
        let found = lll::enumerate_reduced(&rg, bound, cap)?;
        let r = self.rank();
        let mut out: Vec<LatVec> = found
            .into_iter()
            .map(|(xy, rnorm)| {
                let coeffs: EVec = (0..r).map(|i| Eis::new(xy[i], xy[i + r])).collect();
                let num = emat_mul(&[coeffs], self.basis.num()).remove(0);
                let exact = self.form.norm(&num);
                assert_eq!(2 * exact, rnorm, "inner product cross-check");
                let g = crate::eisenstein::gcd_i64(exact, d * d);
                LatVec { num, den: d, norm_num: exact / g, norm_den: d * d / g }
            })
            .collect();
        out.sort_by(|a, b| {
            ((a.norm_num as i128) * (b.norm_den as i128), &a.num)
                .cmp(&((b.norm_num as i128) * (a.norm_den as i128), &b.num))
        });
        Ok(out)
    }

    /// Whether some nonzero vector has `|v|² ≤ p/q` (early exit).
    pub fn has_vector_up_to(&self, p: i64, q: i64) -> Result<bool, Error> {
        let d = self.den();
        let rg = self.real_gram_numerator();
        let bound = (2i64
            .checked_mul(d * d)
            .and_then(|x| x.checked_mul(p))
            .expect("bound overflow"))
            / q;
        if bound <= 0 {
            return Ok(false);
        }
        let red = lll::lll_reduce(&rg)?;
        lll::exists_nonzero_up_to(&red.gram, bound)
    }

    /// Minimal nonzero norm as a reduced fraction, or `None` for rank 0.
    pub fn min_norm(&self) -> Result<Option<(i64, i64)>, Error> {
        if self.rank() == 0 {
            return Ok(None);
        }
        let d = self.den();
        let rg = self.real_gram_numerator();
        let red = lll::lll_reduce(&rg)?;
        // The first reduced Gram diagonal entry is an attained norm, hence
        // an upper bound for the minimum; scan upward until a vector exists.
        let ub = red.gram[0][0];
        for b in 1..=ub {
            if lll::exists_nonzero_up_to(&red.gram, b)? {
                // Real numerator norm b = 2d²·|v|².
                let g = crate::eisenstein::gcd_i64(b, 2 * d * d);
                return Ok(Some((b / g, 2 * d * d / g)));
            }
        }
        unreachable!("upper bound is attained");
    }

    /// The sublattice `{v ∈ L : Σᵢ fᵢ·vᵢ = 0 for each functional f}`
    /// (plain, non-conjugated coefficients).
    pub fn kernel_sublattice(&self, functionals: &[EVec]) -> Lattice {
        let n = self.ambient_dim();
        for f in functionals {
            assert_eq!(f.len(), n);
        }
        let c: EMat = self
            .basis
            .num()
            .iter()
            .map(|row| {
                functionals
                    .iter()
                    .map(|f| {
                        let mut s = Eis::ZERO;
                        for k in 0..n {
                            s += row[k] * f[k];
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        let ker = hnf::left_kernel(&c);
        let rows = emat_mul(&ker, self.basis.num());
        Lattice::from_scaled(self.form.clone(), ScaledMat::new(rows, self.den()))
    }

    /// `{v ∈ L : ⟨v, w⟩ = 0 for each w}`, for integral ambient vectors `w`.
    pub fn orthogonal_complement(&self, vectors: &[EVec]) -> Lattice {
        let funcs: Vec<EVec> = vectors
            .iter()
            .map(|w| {
                (0..self.ambient_dim())
                    .map(|i| w[i].conj() * self.form.sign(i))
                    .collect()
            })
            .collect();
        self.kernel_sublattice(&funcs)
    }

    /// Coordinates of an integral vector in the lattice basis, if it lies in
    /// the lattice (exact over `E`).
    pub fn coords(&self, v: &[Eis]) -> Option<EVec> {
        let scaled: EVec = v.iter().map(|&e| e * self.den()).collect();
        self.module.coords(&scaled)
    }

    /// Coordinates in the numerator basis of a vector given at numerator
    /// scale, i.e. `den`·(lattice vector).
    pub fn coords_of_numerator(&self, w: &[Eis]) -> Option<EVec> {
        self.module.coords(w)
    }

    /// Intersection of the two spans.
    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.form, other.form);
        let l = self.den().lcm(&other.den());
        let m = self.module_at(l).intersect(&other.module_at(l));
        Lattice::from_scaled(self.form.clone(), ScaledMat::new(m.basis().clone(), l))
    }

    /// Hyperbolic splitting off a primitive null vector: returns a null
    /// `w ∈ L` with `⟨ρ, w⟩ = θ`, the rank-2 hyperbolic lattice `⟨ρ, w⟩`,
    /// and the orthogonal complement of the pair in `L`.
    pub fn split_null(&self, rho: &[Eis]) -> Result<NullSplit, Error> {
        assert_eq!(self.den(), 1, "null splitting expects an integral basis");
        if self.form.norm(rho) != 0 {
            return Err(Error::NotNull(format!("norm {} is not 0", self.form.norm(rho))));
        }
        if !self.contains(rho) {
            return Err(Error::NotInLattice);
        }
        // ⟨ρ, Σ cᵢbᵢ⟩ = Σ c̄ᵢ⟨ρ, bᵢ⟩: fold an extended gcd over the pairings
        // divided by θ (they all lie in θE when L pairs into θE).
        let ts: Vec<Eis> = self
            .basis
            .num()
            .iter()
            .map(|b| {
                self.form
                    .inner(rho, b)
                    .div_exact(Eis::THETA)
                    .ok_or(Error::NonIntegral("pairing with null vector not divisible by θ"))
            })
            .collect::<Result<_, _>>()?;
        let mut g = Eis::ZERO;
        let mut coeff: EVec = vec![Eis::ZERO; ts.len()];
        for (i, &t) in ts.iter().enumerate() {
            if g.is_zero() {
                if !t.is_zero() {
                    g = t;
                    coeff[i] = Eis::ONE;
                }
                continue;
            }
            let (g2, s, u) = Eis::xgcd(g, t);
            for c in coeff.iter_mut() {
                *c *= s;
            }
            coeff[i] = u;
            g = g2;
        }
        if g.norm() != 1 {
            return Err(Error::NotPrimitive);
        }
        // Σ sᵢtᵢ = g with g a unit; conjugate the coefficients and divide
        // by g so that ⟨ρ, w₀⟩ = θ exactly.
        let ginv = g.conj();
        let w0: EVec = {
            let cs: Vec<Eis> = coeff.iter().map(|c| (*c * ginv).conj()).collect();
            emat_mul(&[cs], self.basis.num()).remove(0)
        };
        debug_assert_eq!(self.form.inner(rho, &w0), Eis::THETA);
        // Make w null: adding α·ρ changes the norm by −2·Re(ᾱθ) = −3·Im-part,
        // so α = (|w₀|²/3)·ω cancels it.
        let m = self.form.norm(&w0);
        assert_eq!(m % 3, 0, "norms of a θ-paired lattice lie in 3Z");
        let alpha = Eis::new(0, m / 3);
        let w: EVec = w0.iter().zip(rho).map(|(&x, &r)| x + alpha * r).collect();
        debug_assert_eq!(self.form.norm(&w), 0);
        debug_assert_eq!(self.form.inner(rho, &w), Eis::THETA);
        let hyperbolic = Lattice::from_rows(self.form.clone(), &[rho.to_vec(), w.clone()]);
        let complement = self.orthogonal_complement(&[rho.to_vec(), w.clone()]);
        Ok(NullSplit { w, hyperbolic, complement })
    }

    /// Connected components of the norm-3 vectors (one representative per
    /// ±pair; two roots connect when their inner product is nonzero, and
    /// negating either does not change that).
    pub fn root_components(&self, cap: usize) -> Result<Vec<Vec<LatVec>>, Error> {
        let roots: Vec<LatVec> = self
            .vectors_up_to(3, 1, cap)?
            .into_iter()
            .filter(|v| v.norm_num == 3 && v.norm_den == 1)
            .collect();
        let n = roots.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut i = i;
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..n {
            for j in i + 1..n {
                if !self.form.inner(&roots[i].num, &roots[j].num).is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<LatVec>> = Default::default();
        for (i, r) in roots.into_iter().enumerate() {
            groups.entry(find(&mut parent, i)).or_default().push(r);
        }
        Ok(groups.into_values().collect())
    }
}

/// Result of [`Lattice::split_null`].
#[derive(Clone, Debug)]
pub struct NullSplit {
    pub w: EVec,
    pub hyperbolic: Lattice,
    pub complement: Lattice,
}

/// Gram matrix check helper: conjugate-transpose symmetry.
pub fn is_hermitian(g: &[EVec]) -> bool {
    emat_conj_t(g) == *g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const TH: Eis = Eis::THETA;

    fn e(a: i64, b: i64) -> Eis {
        Eis::new(a, b)
    }

    fn rand_basis(rng: &mut ChaCha8Rng, n: usize) -> Option<EMat> {
        let rows: EMat = (0..n)
            .map(|_| (0..n).map(|_| e(rng.gen_range(-2..=2), rng.gen_range(-2..=2))).collect())
            .collect();
        (!hnf::det(&rows).is_zero()).then_some(rows)
    }

    #[test]
    fn canonical_representation_makes_equality_structural() {
        let f = Form::definite(2);
        let a = Lattice::from_rows(f.clone(), &[vec![e(1, 0), e(0, 0)], vec![e(0, 0), e(1, 0)]]);
        let b = Lattice::from_rows(
            f.clone(),
            &[vec![e(0, 1), e(1, 1)], vec![e(1, 0), e(1, 1)], vec![e(1, 0), e(0, 0)]],
        );
        assert_eq!(a, b); // both span E²
        let c = Lattice::from_scaled(
            f,
            ScaledMat::new(vec![vec![e(2, 0), e(0, 0)], vec![e(0, 0), e(2, 0)]], 2),
        );
        assert_eq!(a, c);
    }

    #[test]
    fn dual_pairs_unimodularly_and_involutes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xD0A1);
        let mut done = 0;
        while done < 50 {
            let n = rng.gen_range(1..=3);
            let Some(rows) = rand_basis(&mut rng, n) else { continue };
            done += 1;
            let l = Lattice::from_rows(Form::definite(n), &rows);
            let d = l.dual();
            // The pairing matrix P[i][j] = ⟨dualᵢ, basisⱼ⟩ is integral (that
            // is the defining property of the dual) and unimodular (the dual
            // basis differs from G⁻¹B by a basis change on each side).
            let scale = Eis::from(d.den() * l.den());
            let p: EMat = d
                .basis()
                .num()
                .iter()
                .map(|x| {
                    l.basis()
                        .num()
                        .iter()
                        .map(|y| l.form().inner(x, y).div_exact(scale).expect("integral pairing"))
                        .collect()
                })
                .collect();
            assert_eq!(hnf::det(&p).norm(), 1);
            // Double-dual is the original lattice.
            assert_eq!(d.dual(), l);
        }
    }

    #[test]
    fn theta_dual_of_theta_e_is_e() {
        let l = Lattice::from_rows(Form::definite(1), &[vec![TH]]);
        let e1 = Lattice::from_rows(Form::definite(1), &[vec![Eis::ONE]]);
        assert_eq!(l.theta_dual_scaled(), e1);
        let q = l.theta_dual_scaled().quotient(&l);
        assert_eq!(q.order, 3);
        assert_eq!(q.describe(), "F3");
        assert!(l.inner_products_in_theta());
        assert!(e1.is_integrally_paired());
        assert!(!e1.inner_products_in_theta());
    }

    #[test]
    fn real_form_matches_complex_norms() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x2EA1);
        let mut done = 0;
        while done < 30 {
            let n = rng.gen_range(1..=3);
            let Some(rows) = rand_basis(&mut rng, n) else { continue };
            done += 1;
            let l = Lattice::from_rows(Form::definite(n), &rows);
            let rg = l.real_gram_numerator();
            for _ in 0..20 {
                let xy: Vec<i64> = (0..2 * n).map(|_| rng.gen_range(-3..=3)).collect();
                let coeffs: EVec = (0..n).map(|i| e(xy[i], xy[i + n])).collect();
                let v = emat_mul(&[coeffs], l.basis().num()).remove(0);
                let mut real: i128 = 0;
                for i in 0..2 * n {
                    for j in 0..2 * n {
                        real += xy[i] as i128 * xy[j] as i128 * rg[i][j] as i128;
                    }
                }
                assert_eq!(real, 2 * l.form().norm(&v) as i128);
            }
        }
    }

    #[test]
    fn signatures() {
        let l = Lattice::from_rows(
            Form::definite(3),
            &[
                vec![e(1, 0), e(0, 0), e(0, 0)],
                vec![e(0, 0), e(1, 0), e(0, 0)],
                vec![e(0, 0), e(0, 0), e(1, 0)],
            ],
        );
        assert_eq!(l.signature(), (3, 0));
        let m = Lattice::from_rows(
            Form::lorentzian(2),
            &[vec![e(1, 0), e(0, 0)], vec![e(0, 0), e(1, 0)]],
        );
        assert_eq!(m.signature(), (1, 1));
    }

    #[test]
    fn enumeration_on_small_lattices() {
        let e1 = Lattice::from_rows(Form::definite(1), &[vec![Eis::ONE]]);
        let v1 = e1.vectors_up_to(1, 1, 100).unwrap();
        assert_eq!(v1.len(), 3); // six units, three ± pairs
        assert!(v1.iter().all(|v| v.norm_num == 1 && v.norm_den == 1));
        let v3 = e1.vectors_up_to(3, 1, 100).unwrap();
        assert_eq!(v3.len(), 6); // units and θ-associates
        assert_eq!(v3.iter().filter(|v| v.norm_num == 3).count(), 3);
        // θE: minimum 3.
        let te = Lattice::from_rows(Form::definite(1), &[vec![TH]]);
        assert_eq!(te.min_norm().unwrap(), Some((3, 1)));
        assert!(!te.has_vector_up_to(2, 1).unwrap());
        assert!(te.has_vector_up_to(3, 1).unwrap());
        // A fractional lattice: E/θ = θE/3 has minimum 1/3.
        let fr = Lattice::from_scaled(
            Form::definite(1),
            ScaledMat::new(vec![vec![TH]], 3),
        );
        assert_eq!(fr.min_norm().unwrap(), Some((1, 3)));
        let vf = fr.vectors_up_to(1, 3, 100).unwrap();
        assert_eq!(vf.len(), 3);
        assert!(vf.iter().all(|v| v.norm_num == 1 && v.norm_den == 3));
        assert!(!vf[0].is_integral());
    }

    #[test]
    fn complements_and_membership() {
        let f = Form::definite(2);
        let l = Lattice::from_rows(
            f,
            &[vec![e(1, 0), e(0, 0)], vec![e(0, 0), e(1, 0)]],
        );
        let c = l.orthogonal_complement(&[vec![e(1, 0), e(0, 0)]]);
        assert_eq!(c.rank(), 1);
        assert!(c.contains(&[e(0, 0), e(1, 0)]));
        assert!(!c.contains(&[e(1, 0), e(0, 0)]));
        // Lorentzian null vector lies in its own complement.
        let lor = Lattice::from_rows(
            Form::lorentzian(2),
            &[vec![e(1, 0), e(0, 0)], vec![e(0, 0), e(1, 0)]],
        );
        let rho = vec![e(1, 0), e(1, 0)];
        assert_eq!(lor.form().norm(&rho), 0);
        let perp = lor.orthogonal_complement(std::slice::from_ref(&rho));
        assert_eq!(perp.rank(), 1);
        assert!(perp.contains(&rho));
        // Fractional membership.
        let e1 = Lattice::from_rows(Form::definite(1), &[vec![Eis::ONE]]);
        assert!(e1.contains_scaled(&[e(3, 3)], 3));
        assert!(!e1.contains_scaled(&[TH], 3));
    }

    #[test]
    fn intersections() {
        let f = Form::definite(2);
        let full = Lattice::from_rows(
            f.clone(),
            &[vec![e(1, 0), e(0, 0)], vec![e(0, 0), e(1, 0)]],
        );
        let diag = Lattice::from_rows(f.clone(), &[vec![e(1, 0), e(1, 0)]]);
        assert_eq!(full.intersect(&diag), diag);
        // A fractional lattice meets the integral one in their common part.
        let third = Lattice::from_scaled(
            Form::definite(1),
            ScaledMat::new(vec![vec![Eis::ONE]], 3),
        );
        let e1 = Lattice::from_rows(Form::definite(1), &[vec![Eis::ONE]]);
        assert_eq!(third.intersect(&e1), e1);
    }

    #[test]
    fn null_splitting_produces_hyperbolic_cell() {
        // {x ∈ E² : x₀ ≡ x₁ mod θ} with the Lorentzian form pairs into θE.
        let l = Lattice::from_rows(
            Form::lorentzian(2),
            &[vec![e(1, 0), e(1, 0)], vec![TH, e(0, 0)]],
        );
        assert!(l.inner_products_in_theta());
        let rho = vec![e(1, 0), e(1, 0)];
        let split = l.split_null(&rho).unwrap();
        assert_eq!(l.form().norm(&split.w), 0);
        assert_eq!(l.form().inner(&rho, &split.w), TH);
        assert!(l.contains(&split.w));
        assert_eq!(split.hyperbolic.rank(), 2);
        assert_eq!(split.complement.rank(), 0);
        assert_eq!(split.hyperbolic, l); // the cell is everything here
        // A non-null vector is rejected.
        assert!(matches!(l.split_null(&[TH, e(0, 0)]), Err(Error::NotNull(_))));
    }

    #[test]
    fn root_component_counts() {
        let two = Lattice::from_rows(
            Form::definite(2),
            &[vec![TH, e(0, 0)], vec![e(0, 0), TH]],
        );
        let comps = two.root_components(1000).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3)); // θ·units, one per ±pair
        // An indecomposable rank-2 root lattice: 24 roots, one component.
        let d = Lattice::from_rows(
            Form::definite(3),
            &[vec![e(1, 0), e(1, 0), e(1, 0)], vec![TH, e(0, 0), e(0, 0)]],
        );
        let comps = d.root_components(1000).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 12);
    }

    #[test]
    fn quotients_of_lattices() {
        let f = Form::definite(2);
        let sup = Lattice::from_rows(
            f.clone(),
            &[vec![e(1, 0), e(0, 0)], vec![e(0, 0), e(1, 0)]],
        );
        let sub = sup.scale(TH);
        assert!(sup.contains_lattice(&sub));
        assert!(!sub.contains_lattice(&sup));
        let q = sup.quotient(&sub);
        assert_eq!(q.order, 9);
        assert_eq!(q.describe(), "F3^2");
        // Sum with a fractional lattice.
        let half = Lattice::from_scaled(
            f,
            ScaledMat::new(vec![vec![e(1, 0), e(1, 0)]], 2),
        );
        let s = sup.sum(&half);
        assert_eq!(s.quotient(&sup).order, 4);
    }
}
