//! The signature-(13,1) lattice with visible plane symmetry: membership by
//! congruence conditions, point and line roots, the distinguished null
//! vector and its relatives, the five-step root-derivation pipeline, the
//! exhaustive invariant-subspace scan, and the Y-diagram root system.

use crate::catalog::{self, NullType};
use crate::codes::Code;
use crate::eisenstein::Eis;
use crate::fields::{Field, F3};
use crate::fmat::{self, Perm};
use crate::hnf::EModule;
use crate::isometry::{self, BasisMap};
use crate::lattice::{Form, Lattice};
use crate::par;
use crate::plane::{self, Plane, PlaneGroup, N_POINTS};
use crate::scaled::EVec;
use crate::Error;
use std::collections::BTreeSet;

const W: Eis = Eis::OMEGA;
const WB: Eis = Eis::OMEGA_BAR;
const TH: Eis = Eis::THETA;

fn err(msg: String) -> Error {
    Error::SelfCheck(msg)
}

/// Characteristic vector of a line.
pub fn line_word(plane: &Plane, l: usize) -> Vec<F3> {
    (0..N_POINTS).map(|p| F3::new(plane.on(p, l) as u8)).collect()
}

/// The code spanned by differences of lines (dimension 6).
pub fn difference_code(plane: &Plane) -> Code<F3> {
    let base = line_word(plane, 0);
    let rows: Vec<Vec<F3>> = (1..N_POINTS)
        .map(|l| {
            let w = line_word(plane, l);
            (0..N_POINTS).map(|i| base[i].add(w[i].neg())).collect()
        })
        .collect();
    Code::from_rows(N_POINTS, &rows)
}

/// The model lattice together with the plane structures it is built from.
pub struct Model {
    pub plane: Plane,
    /// Dimension-6 code spanned by line differences.
    pub diff_code: Code<F3>,
    /// Its dual (dimension 7), spanned by the lines themselves.
    pub line_code: Code<F3>,
    pub lattice: Lattice,
    pub point_roots: Vec<EVec>,
    pub line_roots: Vec<EVec>,
    /// The distinguished primitive null vector `(−4−ω; 1,…,1)`.
    pub rho: EVec,
}

/// A 14-vector `(x₀; x₁,…,x₁₃)` with the last 13 coordinates assigned by a
/// function of the point index.
fn vec14(x0: Eis, f: impl Fn(usize) -> Eis) -> EVec {
    let mut v = vec![x0];
    v.extend((0..N_POINTS).map(f));
    v
}

impl Model {
    pub fn new() -> Model {
        let plane = Plane::new();
        let diff_code = difference_code(&plane);
        let line_code = diff_code.dual_plain();
        assert_eq!(diff_code.dim(), 6);
        assert_eq!(line_code.dim(), 7);

        let point_roots: Vec<EVec> =
            (0..N_POINTS).map(|p| vec14(Eis::ZERO, |i| if i == p { TH } else { Eis::ZERO })).collect();
        let line_roots: Vec<EVec> = (0..N_POINTS)
            .map(|l| vec14(Eis::ONE, |p| if plane.on(p, l) { Eis::ONE } else { Eis::ZERO }))
            .collect();

        // Generators: (θ; 0¹³), the point roots, and centered lifts of a
        // basis of the line code (0th coordinate lifting the coordinate sum).
        let mut gens: Vec<EVec> = vec![vec14(TH, |_| Eis::ZERO)];
        gens.extend(point_roots.iter().cloned());
        for w in line_code.generator() {
            let sum = w.iter().fold(F3::new(0), |s, &x| s.add(x));
            gens.push(vec14(
                Eis::from(sum.lift_centered()),
                |p| Eis::from(w[p].lift_centered()),
            ));
        }
        let lattice = Lattice::from_rows(Form::lorentzian(14), &gens);
        let rho = vec14(Eis::new(-4, -1), |_| Eis::ONE);

        Model { plane, diff_code, line_code, lattice, point_roots, line_roots, rho }
    }

    pub fn form(&self) -> &Form {
        self.lattice.form()
    }

    /// Membership by the defining congruences: `x₀ ≡ Σxᵢ (mod θ)` and the
    /// residues of the last 13 coordinates form a word of the line code.
    pub fn is_member(&self, v: &[Eis]) -> bool {
        assert_eq!(v.len(), 14);
        let res: Vec<F3> = v[1..].iter().map(|e| e.mod_theta()).collect();
        let sum = res.iter().fold(F3::new(0), |s, &x| s.add(x));
        v[0].mod_theta() == sum && self.line_code.contains(&res)
    }

    /// A root of the lattice: norm 3, satisfying both the congruence
    /// predicate and the span membership.
    pub fn is_root(&self, v: &[Eis]) -> bool {
        self.form().norm(v) == 3 && self.is_member(v) && self.lattice.contains(v)
    }

    pub fn inner(&self, x: &[Eis], y: &[Eis]) -> Eis {
        self.form().inner(x, y)
    }
}

impl Default for Model {
    fn default() -> Self {
        Model::new()
    }
}

/// Everything checked about the model construction itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelSummary {
    pub rank: usize,
    pub signature: (usize, usize),
    pub roots_norm_3: bool,
    pub roots_span_lattice: bool,
    pub point_pairs_orthogonal: bool,
    pub line_pairs_orthogonal: bool,
    pub incidence_pairing: bool,
    pub theta_dual_equal: bool,
    pub image_dimension_in_f3: usize,
    pub rho_is_member: bool,
    pub rho_norm: i64,
    pub membership_matches_span: bool,
}

impl Model {
    pub fn verify_model(&self) -> Result<ModelSummary, Error> {
        let l = &self.lattice;
        let roots: Vec<&EVec> = self.point_roots.iter().chain(&self.line_roots).collect();

        let roots_norm_3 = roots
            .iter()
            .all(|r| self.form().norm(r) == 3 && self.is_member(r) && l.contains(r));

        let root_rows: Vec<EVec> = roots.iter().map(|r| (*r).clone()).collect();
        let span = Lattice::from_rows(self.form().clone(), &root_rows);
        let roots_span_lattice = span == *l;

        let point_pairs_orthogonal = (0..N_POINTS).all(|i| {
            (0..N_POINTS)
                .all(|j| i == j || self.inner(&self.point_roots[i], &self.point_roots[j]).is_zero())
        });
        let line_pairs_orthogonal = (0..N_POINTS).all(|i| {
            (0..N_POINTS)
                .all(|j| i == j || self.inner(&self.line_roots[i], &self.line_roots[j]).is_zero())
        });
        let incidence_pairing = (0..N_POINTS).all(|p| {
            (0..N_POINTS).all(|ln| {
                let ip = self.inner(&self.point_roots[p], &self.line_roots[ln]);
                if self.plane.on(p, ln) { ip == TH } else { ip.is_zero() }
            })
        });

        let theta_dual_equal = l.theta_dual_scaled() == *l;

        // The span M of (θ;0¹³) and the point roots satisfies θM′ = E¹⁴,
        // and the image of the lattice in θM′/M ≅ F₃¹⁴ has dimension 7.
        let mut m_rows: Vec<EVec> = vec![vec14(TH, |_| Eis::ZERO)];
        m_rows.extend(self.point_roots.iter().cloned());
        let m = Lattice::from_rows(self.form().clone(), &m_rows);
        let q = m.theta_dual_scaled().quotient(&m);
        if q.describe() != "F3^14" {
            return Err(err(format!("dual quotient of the diagonal span is {}", q.describe())));
        }
        if l.den() != 1 {
            return Err(err("model lattice is not integral".into()));
        }
        let image: Vec<Vec<F3>> = l
            .basis()
            .num()
            .iter()
            .map(|row| row.iter().map(|e| e.mod_theta()).collect())
            .collect();
        let image_dimension_in_f3 = fmat::rank(&image);

        let rho_is_member = self.is_member(&self.rho) && l.contains(&self.rho);
        let rho_norm = self.form().norm(&self.rho);

        // The congruence predicate agrees with span membership: on the roots
        // (above), on ρ, and on a deterministic sweep of perturbations.
        let mut membership_matches_span = true;
        let mut probe = |v: &EVec| {
            if self.is_member(v) != l.contains(v) {
                membership_matches_span = false;
            }
        };
        for r in &roots {
            for s in 0..14 {
                let mut v = (*r).clone();
                v[s] += Eis::ONE;
                probe(&v);
                v[s] += W;
                probe(&v);
            }
        }
        let mut x = self.rho.clone();
        for s in 0..14 {
            x[s] += TH;
            probe(&x);
        }

        Ok(ModelSummary {
            rank: l.rank(),
            signature: l.signature(),
            roots_norm_3,
            roots_span_lattice,
            point_pairs_orthogonal,
            line_pairs_orthogonal,
            incidence_pairing,
            theta_dual_equal,
            image_dimension_in_f3,
            rho_is_member,
            rho_norm,
            membership_matches_span,
        })
    }
}

// ------------------------------------------------------------------
// Null vectors of the five types.
// ------------------------------------------------------------------

/// First point triple in lexicographic order that is not collinear.
fn first_triangle_points(plane: &Plane) -> [usize; 3] {
    for p in 0..N_POINTS {
        for q in p + 1..N_POINTS {
            let l = plane.line_through(p, q);
            for r in q + 1..N_POINTS {
                if !plane.on(r, l) {
                    return [p, q, r];
                }
            }
        }
    }
    unreachable!("the plane contains a triangle")
}

/// First line triple in lexicographic order with no common point.
fn first_triangle_lines(plane: &Plane) -> [usize; 3] {
    for l in 0..N_POINTS {
        for m in l + 1..N_POINTS {
            for n in m + 1..N_POINTS {
                if !plane.concurrent(l, m, n) {
                    return [l, m, n];
                }
            }
        }
    }
    unreachable!("the plane contains three nonconcurrent lines")
}

/// Classify the 13 points relative to three nonconcurrent lines:
/// vertices (on two of them), edge points (on exactly one), and the rest.
fn triangle_parts(plane: &Plane, lines: [usize; 3]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut off = Vec::new();
    for p in 0..N_POINTS {
        match lines.iter().filter(|&&l| plane.on(p, l)).count() {
            0 => off.push(p),
            1 => edges.push(p),
            2 => vertices.push(p),
            _ => unreachable!("nonconcurrent lines"),
        }
    }
    assert_eq!((vertices.len(), edges.len(), off.len()), (3, 6, 4));
    (vertices, edges, off)
}

/// First 4-point set in lexicographic order with no three collinear.
fn first_general_quad(plane: &Plane) -> [usize; 4] {
    let collinear = |a: usize, b: usize, c: usize| plane.on(c, plane.line_through(a, b));
    for p in 0..N_POINTS {
        for q in p + 1..N_POINTS {
            for r in q + 1..N_POINTS {
                if collinear(p, q, r) {
                    continue;
                }
                for s in r + 1..N_POINTS {
                    if !collinear(p, q, s) && !collinear(p, r, s) && !collinear(q, r, s) {
                        return [p, q, r, s];
                    }
                }
            }
        }
    }
    unreachable!("the plane contains a quadrilateral")
}

impl Model {
    /// A primitive null vector of each type, placed deterministically.
    pub fn null_vector(&self, kind: NullType) -> EVec {
        let v = match kind {
            NullType::LeechType => self.rho.clone(),
            NullType::E6Type => vec14(TH, |p| if p == 0 { TH } else { Eis::ZERO }),
            NullType::A2Type => vec14(TH, |p| if p == 0 { -TH } else { Eis::ZERO }),
            NullType::D4Type => {
                let (vertices, _, off) = triangle_parts(&self.plane, first_triangle_lines(&self.plane));
                vec14(Eis::new(3, 1), |p| {
                    if off.contains(&p) {
                        Eis::ONE
                    } else if vertices.contains(&p) {
                        -Eis::ONE
                    } else {
                        Eis::ZERO
                    }
                })
            }
            NullType::E8Type => {
                let quad = first_general_quad(&self.plane);
                vec14(TH * 2, |p| if quad.contains(&p) { TH } else { Eis::ZERO })
            }
        };
        assert!(self.is_member(&v) && self.lattice.contains(&v), "null vector lies in the lattice");
        assert_eq!(self.form().norm(&v), 0);
        v
    }

    pub fn classify(&self, v: &[Eis], enum_cap: usize) -> Result<NullType, Error> {
        catalog::classify_null(&self.lattice, v, enum_cap)
    }

    /// Extract and fully verify the definite minimum-6 lattice from ρ.
    pub fn minimum6_lattice(&self, enum_cap: usize) -> Result<Lattice, Error> {
        catalog::extract_minimum6(&self.lattice, &self.rho, enum_cap)
    }
}

// ------------------------------------------------------------------
// The five-step root derivation and the two large root families.
// ------------------------------------------------------------------

/// One verified derivation step: roots `a` and `b` of the lattice with
/// `⟨a,b⟩ ∈ {ω−1, ω̄−1}`, their sum (again a root), whose reflection lies
/// in the order-24 group generated by the reflections of `a` and `b`, and
/// a representative of the root family the step produces.
#[derive(Clone, Debug)]
pub struct DerivationStep {
    pub label: &'static str,
    pub b: EVec,
    pub a: EVec,
    pub sum: EVec,
    pub inner_ab: Eis,
    pub claim: EVec,
}

const CUBE_ROOTS: [Eis; 3] = [Eis::ONE, W, WB];

impl Model {
    fn check_step(
        &self,
        label: &'static str,
        b: EVec,
        a: EVec,
        claim: EVec,
        closure_cap: usize,
    ) -> Result<DerivationStep, Error> {
        let fail = |what: &str| Err(err(format!("derivation step {label}: {what}")));
        if !self.is_root(&b) {
            return fail("b is not a root of the lattice");
        }
        if !self.is_root(&a) {
            return fail("a is not a root of the lattice");
        }
        let inner_ab = self.inner(&a, &b);
        if inner_ab != W - Eis::ONE && inner_ab != WB - Eis::ONE {
            return fail("⟨a,b⟩ is not ω−1 or ω̄−1");
        }
        let sum: EVec = a.iter().zip(&b).map(|(&x, &y)| x + y).collect();
        if !self.is_root(&sum) {
            return fail("a+b is not a root of the lattice");
        }
        if !self.is_root(&claim) {
            return fail("claimed output is not a root of the lattice");
        }
        let ta = isometry::triflection(&self.lattice, &a)?;
        let tb = isometry::triflection(&self.lattice, &b)?;
        let group = isometry::closure(&[ta, tb], closure_cap)?;
        if group.len() != 24 {
            return fail("the two reflections do not generate an order-24 group");
        }
        let tsum = isometry::triflection(&self.lattice, &sum)?;
        if !group.contains(&tsum) {
            return fail("reflection of a+b is outside the generated group");
        }
        Ok(DerivationStep { label, b, a, sum, inner_ab, claim })
    }

    /// Search a one-line template: `x₀` fixed, unknowns on the four points
    /// of a line drawn from the stated unit class, everything else 0. The
    /// first assignment making `a` a root with `⟨a,b⟩ ∈ {ω−1, ω̄−1}` wins.
    fn solve_template(&self, x0: Eis, line: usize, negated: bool, b: &EVec) -> Option<EVec> {
        let pts = self.plane.line_points[line].clone();
        assert_eq!(pts.len(), 4);
        for mask in 0..81usize {
            let mut digits = [0usize; 4];
            let mut m = mask;
            for d in digits.iter_mut() {
                *d = m % 3;
                m /= 3;
            }
            let a = vec14(x0, |p| match pts.iter().position(|&q| q == p) {
                Some(k) => {
                    let u = CUBE_ROOTS[digits[k]];
                    if negated { -u } else { u }
                }
                None => Eis::ZERO,
            });
            if self.is_root(&a) {
                let ip = self.inner(&a, b);
                if ip == W - Eis::ONE || ip == WB - Eis::ONE {
                    return Some(a);
                }
            }
        }
        None
    }

    /// The five-step derivation with deterministic placements.
    pub fn derivation_steps(&self, closure_cap: usize) -> Result<Vec<DerivationStep>, Error> {
        let plane = &self.plane;
        let l1 = 0usize;
        let l2 = 1usize;
        let p = plane.meet(l1, l2);
        let on_minus = |l: usize, excl: usize, pt: usize| plane.on(pt, l) && pt != excl;

        // Joint output of steps 1 and 4's input geometry: 1's on l1∖p,
        // −1's on l2∖p.
        let c1 = vec14(TH, |pt| {
            if on_minus(l1, p, pt) {
                Eis::ONE
            } else if on_minus(l2, p, pt) {
                -Eis::ONE
            } else {
                Eis::ZERO
            }
        });

        let mut steps = Vec::new();

        // Step 1: b a line root, a supported on a second line with negated
        // units; the sum gains 0th coordinate 1−ω.
        let b1 = self.line_roots[l1].clone();
        let a1 = self
            .solve_template(-W, l2, true, &b1)
            .ok_or_else(|| err("derivation step 1: no template solution".into()))?;
        steps.push(self.check_step("1", b1, a1, c1.clone(), closure_cap)?);

        // Step 2: b from step 1, a on a line joining a +1 point to a −1
        // point of b.
        let q1 = (0..N_POINTS).find(|&pt| on_minus(l1, p, pt)).expect("line point");
        let q2 = (0..N_POINTS).find(|&pt| on_minus(l2, p, pt)).expect("line point");
        let l3 = plane.line_through(q1, q2);
        let a2 = self
            .solve_template(Eis::ONE, l3, false, &c1)
            .ok_or_else(|| err("derivation step 2: no template solution".into()))?;
        let tri_pts = first_triangle_points(plane);
        let joining = [
            plane.line_through(tri_pts[0], tri_pts[1]),
            plane.line_through(tri_pts[0], tri_pts[2]),
            plane.line_through(tri_pts[1], tri_pts[2]),
        ];
        let (_, edges2, off2) = triangle_parts(plane, joining);
        let c2 = vec14(Eis::from(2), |pt| {
            if tri_pts.contains(&pt) {
                Eis::ONE
            } else if edges2.contains(&pt) {
                Eis::ZERO
            } else {
                debug_assert!(off2.contains(&pt));
                -Eis::ONE
            }
        });
        steps.push(self.check_step("2", c1.clone(), a2, c2, closure_cap)?);

        // Step 3: b a line root again, a on a second line through one of
        // b's points; the sum has 1's on two lines through a −1.
        let x = plane.line_points[l1][0];
        let lp = *plane.point_lines[x].iter().find(|&&l| l != l1).expect("pencil");
        let b3 = self.line_roots[l1].clone();
        let a3 = self
            .solve_template(Eis::ONE, lp, false, &b3)
            .ok_or_else(|| err("derivation step 3: no template solution".into()))?;
        let c3 = vec14(Eis::from(2), |pt| {
            if pt == x {
                -Eis::ONE
            } else if plane.on(pt, l1) || plane.on(pt, lp) {
                Eis::ONE
            } else {
                Eis::ZERO
            }
        });
        steps.push(self.check_step("3", b3, a3, c3.clone(), closure_cap)?);

        // Step 4: b from step 3, a on a third line through its −1 point.
        let lpp = *plane
            .point_lines[x]
            .iter()
            .find(|&&l| l != l1 && l != lp)
            .expect("pencil");
        let a4 = self
            .solve_template(-WB, lpp, true, &c3)
            .ok_or_else(|| err("derivation step 4: no template solution".into()))?;
        let c4 = vec14(Eis::new(3, 1), |pt| {
            if on_minus(l1, p, pt) {
                -Eis::ONE
            } else if on_minus(l2, p, pt) {
                Eis::ZERO
            } else {
                Eis::ONE
            }
        });
        steps.push(self.check_step("4", c3, a4, c4.clone(), closure_cap)?);

        // Step 5: b from step 4, a on a line avoiding the intersection
        // point of b's two distinguished lines.
        let lk = (0..N_POINTS).find(|&l| !plane.on(p, l)).expect("line off a point");
        let a5 = self
            .solve_template(W, lk, false, &c4)
            .ok_or_else(|| err("derivation step 5: no template solution".into()))?;
        let (vert5, edge5, off5) = triangle_parts(plane, joining);
        let c5 = vec14(Eis::new(3, 2), |pt| {
            if vert5.contains(&pt) {
                Eis::ZERO
            } else if edge5.contains(&pt) {
                Eis::ONE
            } else {
                debug_assert!(off5.contains(&pt));
                -Eis::ONE
            }
        });
        steps.push(self.check_step("5", c4, a5, c5, closure_cap)?);

        Ok(steps)
    }

    /// The 156 roots `(2+θ; 0³, ω̄³, −1⁷)`: for each ordered pair of lines,
    /// 0's on the first line, ω̄'s on the second (both minus the common
    /// point), −1 everywhere else.
    pub fn first_family(&self) -> Vec<EVec> {
        let mut out = Vec::new();
        for i in 0..N_POINTS {
            for j in 0..N_POINTS {
                if i == j {
                    continue;
                }
                out.push(self.first_family_root(i, j));
            }
        }
        out
    }

    fn first_family_root(&self, i: usize, j: usize) -> EVec {
        let p = self.plane.meet(i, j);
        vec14(Eis::new(3, 2), |pt| {
            if pt != p && self.plane.on(pt, i) {
                Eis::ZERO
            } else if pt != p && self.plane.on(pt, j) {
                WB
            } else {
                -Eis::ONE
            }
        })
    }

    /// The 234 roots `(−2ω̄; ω̄⁴, −1³, 0⁶)`: for each triple of nonconcurrent
    /// lines, ω̄ at the four points on none of them, −1 at the three
    /// pairwise intersections, 0 at the remaining six points.
    pub fn second_family(&self) -> Vec<EVec> {
        let mut out = Vec::new();
        for i in 0..N_POINTS {
            for j in i + 1..N_POINTS {
                for k in j + 1..N_POINTS {
                    if self.plane.concurrent(i, j, k) {
                        continue;
                    }
                    let (vertices, _, off) = triangle_parts(&self.plane, [i, j, k]);
                    out.push(vec14(Eis::new(2, 2), |pt| {
                        if off.contains(&pt) {
                            WB
                        } else if vertices.contains(&pt) {
                            -Eis::ONE
                        } else {
                            Eis::ZERO
                        }
                    }));
                }
            }
        }
        out
    }
}

/// Outcome of checking both families against the null vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilySummary {
    pub first_count: usize,
    pub second_count: usize,
    pub all_distinct: bool,
    pub all_roots: bool,
    pub all_pair_theta: bool,
    pub all_shifts_roots: bool,
    pub first_shift_shape: bool,
    pub second_shift_shape: bool,
}

fn multiset(v: &[Eis]) -> Vec<Eis> {
    let mut s = v.to_vec();
    s.sort();
    s
}

impl Model {
    pub fn family_checks(&self) -> Result<FamilySummary, Error> {
        let first = self.first_family();
        let second = self.second_family();
        let all: Vec<&EVec> = first.iter().chain(&second).collect();

        let mut seen = BTreeSet::new();
        let all_distinct = all.iter().all(|r| seen.insert((*r).clone()));
        let all_roots = all.iter().all(|r| self.is_root(r));
        let all_pair_theta = all.iter().all(|r| self.inner(r, &self.rho) == TH);
        let shift = |r: &EVec| -> EVec { r.iter().zip(&self.rho).map(|(&x, &y)| x + y).collect() };
        let all_shifts_roots = all.iter().all(|r| self.is_root(&shift(r)));

        // Expected shapes of ρ+r, as coordinate multisets.
        let s1 = shift(&first[0]);
        let first_shift_shape = s1[0] == TH.conj() * WB
            && multiset(&s1[1..])
                == multiset(
                    &[vec![Eis::ONE; 3], vec![-W; 3], vec![Eis::ZERO; 7]].concat(),
                );
        let s2 = shift(&second[0]);
        let second_shift_shape = s2[0] == Eis::new(-2, 1)
            && multiset(&s2[1..])
                == multiset(
                    &[vec![-W; 4], vec![Eis::ZERO; 3], vec![Eis::ONE; 6]].concat(),
                );

        Ok(FamilySummary {
            first_count: first.len(),
            second_count: second.len(),
            all_distinct,
            all_roots,
            all_pair_theta,
            all_shifts_roots,
            first_shift_shape,
            second_shift_shape,
        })
    }
}

/// Outcome of the difference-span analysis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanSummary {
    pub delta_first_shape: bool,
    pub delta_norms_6: bool,
    pub delta_adjacent_inner_minus3: bool,
    pub delta_disjoint_inner_0: bool,
    pub strictness_holds: bool,
    pub strict_triples: usize,
    pub first_differences_equal_sum_zero_sublattice: bool,
    pub all_differences_equal_null_complement: bool,
}

impl Model {
    pub fn span_checks(&self) -> Result<SpanSummary, Error> {
        let plane = &self.plane;
        // Indexed copy of the first family.
        let mut r = vec![vec![EVec::new(); N_POINTS]; N_POINTS];
        for i in 0..N_POINTS {
            for j in 0..N_POINTS {
                if i != j {
                    r[i][j] = self.first_family_root(i, j);
                }
            }
        }
        let delta = |i: usize, j: usize| -> EVec {
            r[i][j].iter().zip(&r[j][i]).map(|(&x, &y)| (x - y) * -W).collect()
        };

        // δ for the first line pair is literally (0; 1³, −1³, 0⁷) along them.
        let p01 = plane.meet(0, 1);
        let expected = vec14(Eis::ZERO, |pt| {
            if pt != p01 && plane.on(pt, 0) {
                Eis::ONE
            } else if pt != p01 && plane.on(pt, 1) {
                -Eis::ONE
            } else {
                Eis::ZERO
            }
        });
        let delta_first_shape = delta(0, 1) == expected;

        let mut delta_norms_6 = true;
        let mut adjacent_ok = true;
        let mut disjoint_ok = true;
        let d: Vec<Vec<EVec>> = (0..N_POINTS)
            .map(|i| (0..N_POINTS).map(|j| if i == j { EVec::new() } else { delta(i, j) }).collect())
            .collect();
        for i in 0..N_POINTS {
            for j in 0..N_POINTS {
                if i == j {
                    continue;
                }
                if self.form().norm(&d[i][j]) != 6 {
                    delta_norms_6 = false;
                }
                for k in 0..N_POINTS {
                    if k == i || k == j {
                        continue;
                    }
                    if self.inner(&d[i][j], &d[j][k]) != Eis::from(-3) {
                        adjacent_ok = false;
                    }
                    for m in 0..N_POINTS {
                        if m == i || m == j || m == k {
                            continue;
                        }
                        if !self.inner(&d[i][j], &d[k][m]).is_zero() {
                            disjoint_ok = false;
                        }
                    }
                }
            }
        }

        // Strictness: ⟨r_ij − r_jk, δ_ik⟩ avoids 3E for nonconcurrent triples.
        let three = Eis::from(3);
        let mut strict_triples = 0usize;
        let mut strictness_holds = true;
        for i in 0..N_POINTS {
            for j in 0..N_POINTS {
                for k in 0..N_POINTS {
                    if i == j || j == k || i == k || plane.concurrent(i, j, k) {
                        continue;
                    }
                    let diff: EVec =
                        r[i][j].iter().zip(&r[j][k]).map(|(&x, &y)| x - y).collect();
                    if self.inner(&diff, &d[i][k]).divisible_by(three) {
                        strictness_holds = false;
                    }
                    strict_triples += 1;
                }
            }
        }

        // Differences of the first family span exactly the sum-zero
        // sublattice supported away from coordinate 0.
        let first = self.first_family();
        let diffs_first: Vec<EVec> = first[1..]
            .iter()
            .map(|v| v.iter().zip(&first[0]).map(|(&x, &y)| x - y).collect())
            .collect();
        let n = Lattice::from_rows(self.form().clone(), &diffs_first);
        let mut f0 = vec![Eis::ZERO; 14];
        f0[0] = Eis::ONE;
        let fsum = vec14(Eis::ZERO, |_| Eis::ONE);
        let x = self.lattice.kernel_sublattice(&[f0, fsum]);
        let first_differences_equal_sum_zero_sublattice = n == x;

        // Differences of all 390 roots span the orthogonal complement of ρ.
        let second = self.second_family();
        let diffs_all: Vec<EVec> = first
            .iter()
            .chain(&second)
            .skip(1)
            .map(|v| v.iter().zip(&first[0]).map(|(&x, &y)| x - y).collect())
            .collect();
        let full = Lattice::from_rows(self.form().clone(), &diffs_all);
        let mut frho = vec![-self.rho[0].conj()];
        frho.extend(self.rho[1..].iter().map(|e| e.conj()));
        let perp = self.lattice.kernel_sublattice(&[frho]);
        let all_differences_equal_null_complement = full == perp;

        Ok(SpanSummary {
            delta_first_shape,
            delta_norms_6,
            delta_adjacent_inner_minus3: adjacent_ok,
            delta_disjoint_inner_0: disjoint_ok,
            strictness_holds,
            strict_triples,
            first_differences_equal_sum_zero_sublattice,
            all_differences_equal_null_complement,
        })
    }
}

// ------------------------------------------------------------------
// Composed reflections scaling the null vector by a sixth root of unity.
// ------------------------------------------------------------------

/// Result of composing the reflections of `r` and `ρ+r` in both orders:
/// the scalar each composition applies to ρ, when it acts by a scalar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SixthRootRecord {
    pub label: String,
    pub scalar_r_then_s: Option<Eis>,
    pub scalar_s_then_r: Option<Eis>,
    pub primitive_sixth: Eis,
    pub stable_under_unit_scaling: bool,
}

fn is_primitive_sixth(z: Eis) -> bool {
    z * z * z == -Eis::ONE && z != -Eis::ONE
}

impl Model {
    pub fn sixth_root_scaffold(&self, label: &str, r: &EVec) -> Result<SixthRootRecord, Error> {
        let fail = |what: &str| Err(err(format!("sixth-root scaffold {label}: {what}")));
        if !self.is_root(r) {
            return fail("r is not a root");
        }
        if self.inner(r, &self.rho) != TH {
            return fail("⟨r,ρ⟩ ≠ θ");
        }
        let s: EVec = r.iter().zip(&self.rho).map(|(&x, &y)| x + y).collect();
        if !self.is_root(&s) {
            return fail("ρ+r is not a root");
        }
        let tr = isometry::triflection(&self.lattice, r)?;
        let ts = isometry::triflection(&self.lattice, &s)?;
        let scalar_r_then_s = isometry::scalar_multiple_on(&self.lattice, &tr.then(&ts), &self.rho);
        let scalar_s_then_r = isometry::scalar_multiple_on(&self.lattice, &ts.then(&tr), &self.rho);
        let valid: Vec<Eis> = [scalar_r_then_s, scalar_s_then_r]
            .into_iter()
            .flatten()
            .filter(|&z| is_primitive_sixth(z))
            .collect();
        let Some(&primitive_sixth) = valid.first() else {
            return fail("no composition order scales ρ by a primitive sixth root");
        };
        let stable_under_unit_scaling = Eis::UNITS.iter().all(|&u| {
            let ru: EVec = r.iter().map(|&c| c * u).collect();
            let su: EVec = s.iter().map(|&c| c * u).collect();
            isometry::triflection(&self.lattice, &ru).is_ok_and(|t| t == tr)
                && isometry::triflection(&self.lattice, &su).is_ok_and(|t| t == ts)
        });
        Ok(SixthRootRecord {
            label: label.to_string(),
            scalar_r_then_s,
            scalar_s_then_r,
            primitive_sixth,
            stable_under_unit_scaling,
        })
    }

    /// The scaffold for the point root and one root from each family.
    pub fn sixth_root_checks(&self) -> Result<Vec<SixthRootRecord>, Error> {
        let mut out = Vec::new();
        let point = self.point_roots[0].clone();
        out.push(self.sixth_root_scaffold("point root", &point)?);
        out.push(self.sixth_root_scaffold("first family", &self.first_family_root(0, 1))?);
        let second = self.second_family();
        out.push(self.sixth_root_scaffold("second family", &second[0])?);
        Ok(out)
    }
}

// ------------------------------------------------------------------
// The invariant-subspace scan.
// ------------------------------------------------------------------

/// Counts from the exhaustive scan of seed lines in the sum-zero space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanOutcome {
    /// Lines inside the difference code whose closure is the code itself.
    pub code_lines: usize,
    /// Lines of the quotient by the code whose closure is everything.
    pub quotient_lines: usize,
    /// Lines outside the code whose closure is the whole space.
    pub outside_lines: usize,
}

impl Model {
    /// The scan space is the quotient of the integral sum-zero sublattice
    /// `S ⊂ E¹³` by `M = θS`, an `F₃`-space of dimension 12 reached by
    /// reducing coordinates modulo θ; verified before scanning.
    fn verify_scan_realization(&self) -> Result<(), Error> {
        let dim = N_POINTS;
        let basic = |i: usize, j: usize, c: Eis| -> EVec {
            let mut v = vec![Eis::ZERO; dim];
            v[i] = c;
            v[j] = -c;
            v
        };
        let m_rows: Vec<EVec> = (0..dim - 1).map(|i| basic(i, i + 1, TH)).collect();
        let m = Lattice::from_rows(Form::definite(dim), &m_rows);
        let e13_rows: Vec<EVec> = (0..dim)
            .map(|i| {
                let mut v = vec![Eis::ZERO; dim];
                v[i] = Eis::ONE;
                v
            })
            .collect();
        let e13 = Lattice::from_rows(Form::definite(dim), &e13_rows);
        let s_rows: Vec<EVec> = (0..dim - 1).map(|i| basic(i, i + 1, Eis::ONE)).collect();
        let s = Lattice::from_rows(Form::definite(dim), &s_rows);
        // Integral vectors of θ·dual(M) are exactly the sum-zero vectors.
        if m.theta_dual_scaled().intersect(&e13) != s {
            return Err(err("integral part of the scaled dual is not the sum-zero sublattice".into()));
        }
        let q = s.quotient(&m);
        if q.describe() != "F3^12" {
            return Err(err(format!("scan-space quotient is {}", q.describe())));
        }
        // Coordinate reduction maps S onto the sum-zero subspace with
        // kernel exactly M.
        if s.den() != 1 {
            return Err(err("sum-zero sublattice is not integral".into()));
        }
        let reduced: Vec<Vec<F3>> = s
            .basis()
            .num()
            .iter()
            .map(|row| row.iter().map(|e| e.mod_theta()).collect())
            .collect();
        let sum_zero: Vec<Vec<F3>> = (0..dim - 1)
            .map(|i| {
                (0..dim)
                    .map(|k| {
                        if k == i {
                            F3::new(1)
                        } else if k == i + 1 {
                            F3::new(2)
                        } else {
                            F3::new(0)
                        }
                    })
                    .collect()
            })
            .collect();
        if fmat::rref(&reduced) != fmat::rref(&sum_zero) {
            return Err(err("sum-zero sublattice does not reduce onto the sum-zero subspace".into()));
        }
        if !m.basis().num().iter().all(|row| row.iter().all(|e| e.mod_theta().is_zero())) {
            return Err(err("scan-space sublattice does not reduce to zero".into()));
        }
        // The difference code lies in the sum-zero subspace.
        if !self
            .diff_code
            .generator()
            .iter()
            .all(|w| w.iter().fold(F3::new(0), |s, &x| s.add(x)).is_zero())
        {
            return Err(err("difference code is not sum-zero".into()));
        }
        Ok(())
    }

    /// Exhaustive spin scan over every line of the 12-dimensional sum-zero
    /// space: lines inside the code regenerate exactly the code, every
    /// other line regenerates the whole space, and every line of the
    /// quotient regenerates the whole quotient.
    pub fn invariant_subspace_scan(&self) -> Result<ScanOutcome, Error> {
        self.verify_scan_realization()?;
        let gens = PlaneGroup::point_generators(&self.plane);
        let code_rows: Vec<Vec<F3>> = self.diff_code.generator().to_vec();

        const BLOCK: usize = 729;
        let results: Vec<Result<(usize, usize), String>> = par::map_range(BLOCK, |hi| {
            let mut in_code = 0usize;
            let mut outside = 0usize;
            for lo in 0..BLOCK {
                let x = hi * BLOCK + lo;
                if x == 0 {
                    continue;
                }
                let mut v: Vec<F3> = Vec::with_capacity(N_POINTS);
                let mut rest = x;
                let mut sum = F3::new(0);
                for _ in 0..12 {
                    let d = F3::new((rest % 3) as u8);
                    rest /= 3;
                    sum = sum.add(d);
                    v.push(d);
                }
                v.push(sum.neg());
                // One representative per line: first nonzero coordinate 1.
                match v.iter().find(|c| !c.is_zero()) {
                    Some(c) if c.value() == 1 => {}
                    _ => continue,
                }
                let closure = fmat::spin(&[v.clone()], &gens);
                if self.diff_code.contains(&v) {
                    if closure.rows != code_rows {
                        return Err(format!("code line {v:?} closed to dimension {}", closure.dim()));
                    }
                    in_code += 1;
                } else {
                    if closure.dim() != 12 {
                        return Err(format!(
                            "outside line {v:?} closed to dimension {}",
                            closure.dim()
                        ));
                    }
                    outside += 1;
                }
            }
            Ok((in_code, outside))
        });
        let mut code_lines = 0;
        let mut outside_lines = 0;
        for r in results {
            let (c, o) = r.map_err(err)?;
            code_lines += c;
            outside_lines += o;
        }

        // Quotient lines: a complement basis of the code inside the space,
        // scanned through cosets.
        let mut complement: Vec<Vec<F3>> = Vec::new();
        let mut cur = fmat::rref(&code_rows);
        for i in 0..12 {
            let mut v = vec![F3::new(0); N_POINTS];
            v[i] = F3::new(1);
            v[N_POINTS - 1] = F3::new(2);
            if !cur.contains(&v) {
                let mut rows = cur.rows.clone();
                rows.push(v.clone());
                cur = fmat::rref(&rows);
                complement.push(v);
            }
        }
        if complement.len() != 6 {
            return Err(err(format!("complement has dimension {}", complement.len())));
        }
        let combos: Vec<Result<(), String>> = par::map_range(729, |x| {
            if x == 0 {
                return Ok(());
            }
            let mut digits = [0u8; 6];
            let mut rest = x;
            for d in digits.iter_mut() {
                *d = (rest % 3) as u8;
                rest /= 3;
            }
            match digits.iter().find(|&&d| d != 0) {
                Some(&1) => {}
                _ => return Ok(()),
            }
            let mut v = vec![F3::new(0); N_POINTS];
            for (k, &dk) in digits.iter().enumerate() {
                let c = F3::new(dk);
                for (slot, &b) in v.iter_mut().zip(&complement[k]) {
                    *slot = slot.add(c.mul(b));
                }
            }
            let mut seed = code_rows.clone();
            seed.push(v.clone());
            let closure = fmat::spin(&seed, &gens);
            if closure.dim() != 12 {
                return Err(format!(
                    "quotient line over {v:?} closed to dimension {}",
                    closure.dim()
                ));
            }
            Ok(())
        });
        let mut quotient_lines = 0;
        for (x, r) in combos.iter().enumerate() {
            r.clone().map_err(err)?;
            if x > 0 {
                let mut digits = Vec::new();
                let mut rest = x;
                for _ in 0..6 {
                    digits.push(rest % 3);
                    rest /= 3;
                }
                if digits.iter().find(|&&d| d != 0) == Some(&1) {
                    quotient_lines += 1;
                }
            }
        }

        Ok(ScanOutcome { code_lines, quotient_lines, outside_lines })
    }
}

// ------------------------------------------------------------------
// The Y-diagram: embeddings, the 16 roots, chain spans, graph claims.
// ------------------------------------------------------------------

/// Outcome of the diagram-root verification for one embedding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramSummary {
    pub embedding_count: usize,
    pub image_orbit_count_per_flavor: (usize, usize),
    pub duality_swaps_flavors: bool,
    pub gram_rank: usize,
    pub pairs_checked: usize,
}

/// Outcome of the chain-span verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainSummary {
    pub long_chain_rank: usize,
    pub long_chain_signature: (usize, usize),
    pub long_chain_theta_dual_equal: bool,
    pub long_chain_det: Eis,
    pub short_chain_rank: usize,
    pub short_chain_definite: bool,
    pub short_chain_root_count: usize,
    pub short_chain_theta_dual_equal: bool,
    pub chains_orthogonal: bool,
    pub union_spans_lattice: bool,
}

/// Path through two full arms and the center, in diagram order.
pub const LONG_CHAIN: [usize; 11] = [5, 4, 3, 2, 1, 0, 6, 7, 8, 9, 10];
/// The four outer nodes of the third arm, not joined to the long chain.
pub const SHORT_CHAIN: [usize; 4] = [12, 13, 14, 15];

impl Model {
    /// All induced color-preserving embeddings of the 16-node diagram into
    /// the 26-node incidence graph (both color flavors).
    pub fn diagram_embeddings(&self) -> Vec<Vec<usize>> {
        let adj = plane::y555_adjacency();
        let big = plane::incidence_graph(&self.plane);
        plane::induced_embeddings(&adj, &big)
    }

    /// The 16 roots selected by an embedding: point roots for point nodes,
    /// line roots for line nodes.
    pub fn embedding_roots(&self, emb: &[usize]) -> Vec<EVec> {
        emb.iter()
            .map(|&n| {
                if n < N_POINTS {
                    self.point_roots[n].clone()
                } else {
                    self.line_roots[n - N_POINTS].clone()
                }
            })
            .collect()
    }

    /// Gram rank, orbit structure of the image sets, and the 120 pairwise
    /// reflection identities.
    pub fn verify_diagram(&self, group: &PlaneGroup) -> Result<DiagramSummary, Error> {
        let adj = plane::y555_adjacency();
        let embeddings = self.diagram_embeddings();
        if embeddings.is_empty() {
            return Err(err("no induced embedding of the diagram exists".into()));
        }

        // Image sets, split by which side the center node lands on.
        let mut flavor_sets: [BTreeSet<Vec<usize>>; 2] = [BTreeSet::new(), BTreeSet::new()];
        for e in &embeddings {
            let mut set = e.clone();
            set.sort_unstable();
            flavor_sets[(e[0] >= N_POINTS) as usize].insert(set);
        }
        let orbit_of = |seed: &Vec<usize>| -> BTreeSet<Vec<usize>> {
            (0..group.order())
                .map(|k| {
                    let p = group.node_perm(k);
                    let mut img: Vec<usize> = seed.iter().map(|&n| p.0[n]).collect();
                    img.sort_unstable();
                    img
                })
                .collect()
        };
        let mut orbit_counts = (0, 0);
        for (f, sets) in flavor_sets.iter().enumerate() {
            let mut remaining = sets.clone();
            let mut orbits = 0;
            while let Some(seed) = remaining.iter().next().cloned() {
                let orbit = orbit_of(&seed);
                if !orbit.is_subset(&remaining) {
                    return Err(err("collineation orbit escapes the embedding images".into()));
                }
                remaining = remaining.difference(&orbit).cloned().collect();
                orbits += 1;
            }
            if f == 0 {
                orbit_counts.0 = orbits;
            } else {
                orbit_counts.1 = orbits;
            }
        }
        let dual = plane::duality_perm();
        let duality_swaps_flavors = flavor_sets[0]
            .iter()
            .map(|s| {
                let mut img: Vec<usize> = s.iter().map(|&n| dual.0[n]).collect();
                img.sort_unstable();
                img
            })
            .collect::<BTreeSet<_>>()
            == flavor_sets[1];

        // Rank and reflection identities on the first embedding.
        let emb = &embeddings[0];
        let roots = self.embedding_roots(emb);
        let gram = self.form().gram(&roots);
        let gram_rank = EModule::from_rows(roots.len(), &gram).basis().len();

        let maps: Vec<BasisMap> = roots
            .iter()
            .map(|r| isometry::triflection(&self.lattice, r))
            .collect::<Result<_, _>>()?;
        let mut pairs_checked = 0;
        for i in 0..16 {
            for j in i + 1..16 {
                let joined = adj[i][j];
                let ip = self.inner(&roots[i], &roots[j]);
                if joined {
                    // The black (point) node pairs to θ against the white.
                    let (black, white) = if emb[i] < N_POINTS { (i, j) } else { (j, i) };
                    if self.inner(&roots[black], &roots[white]) != TH {
                        return Err(err(format!("pair ({i},{j}) has wrong signed inner product")));
                    }
                    if !isometry::braid_related(&maps[i], &maps[j]) {
                        return Err(err(format!("joined pair ({i},{j}) fails the braid identity")));
                    }
                } else {
                    if !ip.is_zero() {
                        return Err(err(format!("unjoined pair ({i},{j}) is not orthogonal")));
                    }
                    if !isometry::commute(&maps[i], &maps[j]) {
                        return Err(err(format!("unjoined pair ({i},{j}) fails to commute")));
                    }
                }
                pairs_checked += 1;
            }
        }

        Ok(DiagramSummary {
            embedding_count: embeddings.len(),
            image_orbit_count_per_flavor: orbit_counts,
            duality_swaps_flavors,
            gram_rank,
            pairs_checked,
        })
    }

    /// Spans of the 11-chain and 4-chain roots, and of their union.
    pub fn verify_chain_spans(&self, emb: &[usize], enum_cap: usize) -> Result<ChainSummary, Error> {
        let adj = plane::y555_adjacency();
        assert!(plane::induces_path(&adj, &LONG_CHAIN));
        assert!(plane::induces_path(&adj, &SHORT_CHAIN));
        for &e in LONG_CHAIN.iter() {
            for &f in SHORT_CHAIN.iter() {
                assert!(!adj[e][f], "chains are not joined");
            }
        }
        let roots = self.embedding_roots(emb);
        let long_rows: Vec<EVec> = LONG_CHAIN.iter().map(|&n| roots[n].clone()).collect();
        let short_rows: Vec<EVec> = SHORT_CHAIN.iter().map(|&n| roots[n].clone()).collect();

        let long = Lattice::from_rows(self.form().clone(), &long_rows);
        let long_gram = long.gram();
        assert_eq!(long_gram.den(), 1);
        let long_chain_det = crate::hnf::det(long_gram.num());

        let short = Lattice::from_rows(self.form().clone(), &short_rows);
        let short_sig = short.signature();
        let short_roots = short.vectors_up_to(3, 1, enum_cap)?;
        if short_roots.iter().any(|v| (v.norm_num, v.norm_den) != (3, 1)) {
            return Err(err("short-chain span has a vector of norm < 3".into()));
        }

        let chains_orthogonal = long_rows
            .iter()
            .all(|x| short_rows.iter().all(|y| self.inner(x, y).is_zero()));

        let mut union_rows = long_rows.clone();
        union_rows.extend(short_rows.clone());
        let union = Lattice::from_rows(self.form().clone(), &union_rows);

        Ok(ChainSummary {
            long_chain_rank: long.rank(),
            long_chain_signature: long.signature(),
            long_chain_theta_dual_equal: long.theta_dual_scaled() == long,
            long_chain_det,
            short_chain_rank: short.rank(),
            short_chain_definite: short_sig == (short.rank(), 0),
            short_chain_root_count: 2 * short_roots.len(),
            short_chain_theta_dual_equal: short.theta_dual_scaled() == short,
            chains_orthogonal,
            union_spans_lattice: union == self.lattice,
        })
    }
}

/// Outcome of the pure graph verifications on the incidence graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphSummary {
    pub chain_count: usize,
    pub every_chain_closes_uniquely: bool,
    pub complements_are_4_chains: bool,
    pub chains_form_one_orbit: bool,
    pub flip_extension_count: usize,
    pub extensions_color_preserving: bool,
}

/// The diagram automorphism exchanging the two long-chain arms and fixing
/// the third arm pointwise.
pub fn diagram_flip() -> Perm {
    let mut p: Vec<usize> = (0..16).collect();
    for k in 1..=5 {
        p[k] = k + 5;
        p[k + 5] = k;
    }
    Perm(p)
}

pub fn verify_graph_claims(plane: &Plane, emb: &[usize]) -> Result<GraphSummary, Error> {
    let adj = plane::incidence_graph(plane);
    let chains = plane::induced_paths(&adj, 11);
    if chains.is_empty() {
        return Err(err("no induced 11-chain in the incidence graph".into()));
    }

    let mut every_chain_closes_uniquely = true;
    let mut complements_are_4_chains = true;
    for chain in &chains {
        let closers = plane::induced_cycle_closers(&adj, chain);
        if closers.len() != 1 {
            every_chain_closes_uniquely = false;
            continue;
        }
        let mut cycle = chain.clone();
        cycle.push(closers[0]);
        let outside = plane::nodes_not_joined(&adj, &cycle);
        if outside.len() != 4 || !plane::induces_path(&adj, &outside) {
            complements_are_4_chains = false;
        }
    }

    // All 11-chains form a single orbit under the graph automorphisms.
    let auts = plane::graph_aut_group(plane)?;
    let all_sets: BTreeSet<Vec<usize>> = chains
        .iter()
        .map(|c| {
            let mut s = c.clone();
            s.sort_unstable();
            s
        })
        .collect();
    let orbit: BTreeSet<Vec<usize>> = auts
        .iter()
        .map(|g| {
            let mut s: Vec<usize> = chains[0].iter().map(|&n| g.0[n]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    let chains_form_one_orbit = orbit == all_sets;

    // The diagram flip extends to the incidence graph, preserving colors.
    let phi = diagram_flip();
    let extensions: Vec<&Perm> = auts
        .iter()
        .filter(|g| (0..16).all(|k| g.0[emb[k]] == emb[phi.0[k]]))
        .collect();
    let extensions_color_preserving = extensions
        .iter()
        .all(|g| (0..2 * N_POINTS).all(|n| (g.0[n] < N_POINTS) == (n < N_POINTS)));

    Ok(GraphSummary {
        chain_count: chains.len(),
        every_chain_closes_uniquely,
        complements_are_4_chains,
        chains_form_one_orbit,
        flip_extension_count: extensions.len(),
        extensions_color_preserving,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_foundations() {
        let m = Model::new();
        let s = m.verify_model().unwrap();
        assert_eq!(s.rank, 14);
        assert_eq!(s.signature, (13, 1));
        assert!(s.roots_norm_3);
        assert!(s.roots_span_lattice);
        assert!(s.point_pairs_orthogonal);
        assert!(s.line_pairs_orthogonal);
        assert!(s.incidence_pairing);
        assert!(s.theta_dual_equal);
        assert_eq!(s.image_dimension_in_f3, 7);
        assert!(s.rho_is_member);
        assert_eq!(s.rho_norm, 0);
        assert!(s.membership_matches_span);
    }

    #[test]
    fn code_censuses() {
        let m = Model::new();
        let words = m.diff_code.codewords().unwrap();
        assert_eq!(words.len(), 729);
        let balanced = crate::codes::census_balanced(&words);
        let expected: std::collections::BTreeMap<(usize, usize, usize), usize> =
            [((0, 0, 0), 1), ((6, 3, 3), 156), ((9, 9, 0), 26), ((9, 6, 3), 468), ((12, 6, 6), 78)]
                .into_iter()
                .collect();
        assert_eq!(balanced, expected);

        let sum_one: Vec<Vec<F3>> = m
            .line_code
            .codewords()
            .unwrap()
            .into_iter()
            .filter(|w| w.iter().fold(F3::new(0), |s, &x| s.add(x)).value() == 1)
            .collect();
        let signed = crate::codes::census_signed(&sum_one);
        let expected: std::collections::BTreeMap<(usize, usize, usize), usize> = [
            ((4, 4, 0), 13),
            ((7, 1, 6), 78),
            ((7, 4, 3), 234),
            ((10, 4, 6), 234),
            ((10, 7, 3), 156),
            ((13, 4, 9), 13),
            ((13, 13, 0), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(signed, expected);
    }

    #[test]
    fn family_and_span_checks() {
        let m = Model::new();
        let f = m.family_checks().unwrap();
        assert_eq!(
            f,
            FamilySummary {
                first_count: 156,
                second_count: 234,
                all_distinct: true,
                all_roots: true,
                all_pair_theta: true,
                all_shifts_roots: true,
                first_shift_shape: true,
                second_shift_shape: true,
            }
        );
        let s = m.span_checks().unwrap();
        assert!(s.delta_first_shape);
        assert!(s.delta_norms_6);
        assert!(s.delta_adjacent_inner_minus3);
        assert!(s.delta_disjoint_inner_0);
        assert!(s.strictness_holds);
        assert_eq!(s.strict_triples, 13 * 12 * 9);
        assert!(s.first_differences_equal_sum_zero_sublattice);
        assert!(s.all_differences_equal_null_complement);
    }

    #[test]
    fn derivation_steps_verify() {
        let m = Model::new();
        let steps = m.derivation_steps(1000).unwrap();
        assert_eq!(steps.len(), 5);
        // Pinned step-1 shapes.
        assert_eq!(steps[0].sum[0], Eis::new(1, -1));
        assert_eq!(steps[0].a[0], -W);
        assert_eq!(steps[0].inner_ab, W - Eis::ONE);
    }

    #[test]
    fn sixth_root_compositions() {
        let m = Model::new();
        let recs = m.sixth_root_checks().unwrap();
        assert_eq!(recs.len(), 3);
        for r in &recs {
            assert!(is_primitive_sixth(r.primitive_sixth));
            assert!(r.stable_under_unit_scaling);
            assert_eq!(r.scalar_r_then_s, Some(-W));
        }
    }

    #[test]
    fn null_vectors_lie_in_lattice() {
        let m = Model::new();
        for kind in [
            NullType::A2Type,
            NullType::D4Type,
            NullType::E6Type,
            NullType::E8Type,
            NullType::LeechType,
        ] {
            let v = m.null_vector(kind);
            assert_eq!(m.form().norm(&v), 0);
            assert!(m.lattice.contains(&v));
        }
    }

    #[test]
    fn diagram_embedding_and_identities() {
        let m = Model::new();
        let group = PlaneGroup::new(&m.plane).unwrap();
        let s = m.verify_diagram(&group).unwrap();
        assert!(s.embedding_count > 0);
        assert_eq!(s.image_orbit_count_per_flavor, (1, 1));
        assert!(s.duality_swaps_flavors);
        assert_eq!(s.gram_rank, 14);
        assert_eq!(s.pairs_checked, 120);
    }

    #[test]
    #[ignore = "exhaustive scan over all 265720 seed lines; run explicitly"]
    fn full_invariant_subspace_scan() {
        let m = Model::new();
        let outcome = m.invariant_subspace_scan().unwrap();
        assert_eq!(
            outcome,
            ScanOutcome { code_lines: 364, quotient_lines: 364, outside_lines: 265_356 }
        );
    }

    #[test]
    #[ignore = "searches all induced 11-chains of the incidence graph; run explicitly"]
    fn graph_chain_claims() {
        let m = Model::new();
        let emb = &m.diagram_embeddings()[0];
        let s = verify_graph_claims(&m.plane, emb).unwrap();
        assert!(s.chain_count > 0);
        assert!(s.every_chain_closes_uniquely);
        assert!(s.complements_are_4_chains);
        assert!(s.chains_form_one_orbit);
        assert!(s.flip_extension_count >= 1);
        assert!(s.extensions_color_preserving);
        eprintln!("chain_count = {}, flip extensions = {}", s.chain_count, s.flip_extension_count);
    }

    #[test]
    fn chain_spans() {
        let m = Model::new();
        let emb = &m.diagram_embeddings()[0];
        let s = m.verify_chain_spans(emb, 1_000_000).unwrap();
        assert_eq!(s.long_chain_rank, 10);
        assert_eq!(s.long_chain_signature, (9, 1));
        assert!(s.long_chain_theta_dual_equal);
        assert_eq!(s.long_chain_det, Eis::from(-243));
        assert_eq!(s.short_chain_rank, 4);
        assert!(s.short_chain_definite);
        assert_eq!(s.short_chain_root_count, 240);
        assert!(s.short_chain_theta_dual_equal);
        assert!(s.chains_orthogonal);
        assert!(s.union_spans_lattice);
    }
}
