//! The four indecomposable root lattices over `E` with their invariant
//! table, the four glued rank-12 lattices with minimum 3, extraction of the
//! minimum-6 rank-12 lattice from a null vector of the Lorentzian lattice,
//! and the classifier of null-vector types.

use crate::codes;
use crate::eisenstein::Eis;
use crate::fields::F4;
use crate::hnf;
use crate::isometry::{self, BasisMap};
use crate::lattice::{Form, LatVec, Lattice};
use crate::scaled::{EVec, ScaledMat};
use crate::Error;
use std::collections::HashSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootKind {
    A2,
    D4,
    E6,
    E8,
}

impl RootKind {
    pub const ALL: [RootKind; 4] = [RootKind::A2, RootKind::D4, RootKind::E6, RootKind::E8];

    pub fn name(self) -> &'static str {
        match self {
            RootKind::A2 => "A2",
            RootKind::D4 => "D4",
            RootKind::E6 => "E6",
            RootKind::E8 => "E8",
        }
    }
}

/// The defining constructions: `A2 = θE`; `D4 = {(x,x,y) : x ≡ y (θ)}`;
/// `E6 = {(x,y,z) : x ≡ y ≡ z (θ)}`; `E8` = the preimage in `E⁴` of the
/// tetracode under reduction mod θ.
pub fn root_lattice(kind: RootKind) -> Lattice {
    let o = Eis::ZERO;
    let i = Eis::ONE;
    let th = Eis::THETA;
    match kind {
        RootKind::A2 => Lattice::from_rows(Form::definite(1), &[vec![th]]),
        RootKind::D4 => {
            Lattice::from_rows(Form::definite(3), &[vec![i, i, i], vec![o, o, th]])
        }
        RootKind::E6 => Lattice::from_rows(
            Form::definite(3),
            &[vec![i, i, i], vec![o, th, o], vec![o, o, th]],
        ),
        RootKind::E8 => {
            let mut rows: Vec<EVec> = (0..4)
                .map(|k| (0..4).map(|j| if j == k { th } else { o }).collect())
                .collect();
            for w in codes::tetracode().generator() {
                rows.push(w.iter().map(|x| Eis::from(x.lift_centered())).collect());
            }
            Lattice::from_rows(Form::definite(4), &rows)
        }
    }
}

/// One row of the invariant table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Table1Row {
    pub kind: RootKind,
    pub rank: usize,
    pub root_count: usize,
    pub reflection_order: u64,
    pub aut_order: u64,
    pub glue: String,
    /// Minimal norm over the nonzero classes of `θL′/L`, with the number of
    /// vectors attaining it.
    pub coset_min: Option<(i64, i64, usize)>,
}

pub fn expected_table1(kind: RootKind) -> Table1Row {
    match kind {
        RootKind::A2 => Table1Row {
            kind,
            rank: 1,
            root_count: 6,
            reflection_order: 3,
            aut_order: 6,
            glue: "F3".into(),
            coset_min: Some((1, 1, 6)),
        },
        RootKind::D4 => Table1Row {
            kind,
            rank: 2,
            root_count: 24,
            reflection_order: 24,
            aut_order: 72,
            glue: "F4".into(),
            coset_min: Some((3, 2, 24)),
        },
        RootKind::E6 => Table1Row {
            kind,
            rank: 3,
            root_count: 72,
            reflection_order: 648,
            aut_order: 1296,
            glue: "F3".into(),
            coset_min: Some((2, 1, 54)),
        },
        RootKind::E8 => Table1Row {
            kind,
            rank: 4,
            root_count: 240,
            reflection_order: 155_520,
            aut_order: 155_520,
            glue: "0".into(),
            coset_min: None,
        },
    }
}

/// Norm-3 vectors, one per ±pair.
pub fn root_reps(l: &Lattice, cap: usize) -> Result<Vec<LatVec>, Error> {
    Ok(l
        .vectors_up_to(3, 1, cap)?
        .into_iter()
        .filter(|v| v.norm_num == 3 && v.norm_den == 1)
        .collect())
}

/// The distinct reflections of a lattice's roots (each root class of six
/// unit multiples gives one reflection and its square; we keep one map per
/// distinct matrix).
pub fn root_triflections(l: &Lattice, cap: usize) -> Result<Vec<BasisMap>, Error> {
    let mut seen: HashSet<BasisMap> = HashSet::new();
    let mut out = Vec::new();
    for r in root_reps(l, cap)? {
        let v = r.to_integral().expect("roots of an integral lattice");
        let t = isometry::triflection(l, &v)?;
        if seen.insert(t.clone()) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Compute every column of the invariant table and compare with the
/// expected row; the first mismatching column aborts with its name.
pub fn verify_table1(kind: RootKind, closure_cap: usize, enum_cap: usize) -> Result<Table1Row, Error> {
    let l = root_lattice(kind);
    let expect = expected_table1(kind);
    let fail = |col: &str, got: String, want: String| {
        Err(Error::SelfCheck(format!(
            "{} table row, column {col}: computed {got}, expected {want}",
            kind.name()
        )))
    };

    let rank = l.rank();
    if rank != expect.rank {
        return fail("rank", rank.to_string(), expect.rank.to_string());
    }

    let reps = root_reps(&l, enum_cap)?;
    let root_count = 2 * reps.len();
    if root_count != expect.root_count {
        return fail("roots", root_count.to_string(), expect.root_count.to_string());
    }

    // The lattice is spanned by its roots.
    let root_rows: Vec<EVec> = reps
        .iter()
        .map(|r| r.to_integral().expect("integral root"))
        .collect();
    let span = Lattice::from_rows(l.form().clone(), &root_rows);
    if span != l {
        return fail("root span", "proper sublattice".into(), "whole lattice".into());
    }

    let gens = root_triflections(&l, enum_cap)?;
    let group = isometry::closure(&gens, closure_cap)?;
    if group.len() as u64 != expect.reflection_order {
        return fail(
            "reflection group order",
            group.len().to_string(),
            expect.reflection_order.to_string(),
        );
    }

    let aut = isometry::aut_count(&l, enum_cap)?;
    if aut != expect.aut_order {
        return fail("aut order", aut.to_string(), expect.aut_order.to_string());
    }

    let td = l.theta_dual_scaled();
    if !l.contains_lattice(&l.scale(Eis::THETA)) || !td.contains_lattice(&l) {
        return fail("θ-dual", "L ⊄ θL′".into(), "L ⊆ θL′".into());
    }
    let glue = td.quotient(&l).describe();
    if glue != expect.glue {
        return fail("glue group", glue, expect.glue.clone());
    }

    // Minimal-norm vectors of θL′ − L.
    let outside: Vec<LatVec> = td
        .vectors_up_to(3, 1, enum_cap)?
        .into_iter()
        .filter(|v| !l.contains_scaled(&v.num, v.den))
        .collect();
    let coset_min = outside.first().map(|first| {
        let min = (first.norm_num, first.norm_den);
        let count = 2 * outside
            .iter()
            .filter(|v| (v.norm_num, v.norm_den) == min)
            .count();
        (min.0, min.1, count)
    });
    if coset_min != expect.coset_min {
        return fail(
            "coset min norm",
            format!("{coset_min:?}"),
            format!("{:?}", expect.coset_min),
        );
    }

    Ok(Table1Row {
        kind,
        rank,
        root_count,
        reflection_order: group.len() as u64,
        aut_order: aut,
        glue,
        coset_min,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GluedKind {
    A2x12,
    D4x6,
    E6x4,
    E8x3,
}

impl GluedKind {
    pub const ALL: [GluedKind; 4] =
        [GluedKind::A2x12, GluedKind::D4x6, GluedKind::E6x4, GluedKind::E8x3];

    pub fn name(self) -> &'static str {
        match self {
            GluedKind::A2x12 => "A2^12",
            GluedKind::D4x6 => "D4^6",
            GluedKind::E6x4 => "E6^4",
            GluedKind::E8x3 => "E8^3",
        }
    }

    pub fn block(self) -> RootKind {
        match self {
            GluedKind::A2x12 => RootKind::A2,
            GluedKind::D4x6 => RootKind::D4,
            GluedKind::E6x4 => RootKind::E6,
            GluedKind::E8x3 => RootKind::E8,
        }
    }

    pub fn copies(self) -> usize {
        match self {
            GluedKind::A2x12 => 12,
            GluedKind::D4x6 => 6,
            GluedKind::E6x4 => 4,
            GluedKind::E8x3 => 3,
        }
    }

    pub fn expected_root_count(self) -> usize {
        match self {
            GluedKind::A2x12 => 72,
            GluedKind::D4x6 => 144,
            GluedKind::E6x4 => 288,
            GluedKind::E8x3 => 720,
        }
    }
}

/// The minimal-norm coset representative used for gluing: the first
/// enumerated vector of `θL′` outside `L` (deterministic because the
/// enumeration output is sorted).
fn glue_rep(block: &Lattice, enum_cap: usize) -> Result<LatVec, Error> {
    block
        .theta_dual_scaled()
        .vectors_up_to(3, 1, enum_cap)?
        .into_iter()
        .find(|v| !block.contains_scaled(&v.num, v.den))
        .ok_or(Error::SelfCheck("glue group is trivial".into()))
}

fn omega_pow(k: usize) -> Eis {
    match k % 3 {
        0 => Eis::ONE,
        1 => Eis::OMEGA,
        _ => Eis::OMEGA * Eis::OMEGA,
    }
}

/// Direct sum of `copies` of the block lattice, glued along the named code:
/// ternary words enter through centered lifts of the scalars, quaternary
/// words through powers of ω acting on the representative (the module
/// structure of the glue group).
pub fn glued_lattice(kind: GluedKind, enum_cap: usize) -> Result<Lattice, Error> {
    let block = root_lattice(kind.block());
    let d = block.ambient_dim();
    let k = kind.copies();
    let ambient = k * d;
    let embed = |i: usize, v: &[Eis]| -> EVec {
        let mut out = vec![Eis::ZERO; ambient];
        out[i * d..(i + 1) * d].copy_from_slice(v);
        out
    };

    let mut den = 1i64;
    let mut glue_rows: Vec<EVec> = Vec::new();
    match kind {
        GluedKind::E8x3 => {}
        GluedKind::D4x6 => {
            let rep = glue_rep(&block, enum_cap)?;
            den = rep.den;
            for w in codes::hexacode().generator() {
                let mut row = vec![Eis::ZERO; ambient];
                for (i, &x) in w.iter().enumerate() {
                    if x == F4::ZERO {
                        continue;
                    }
                    let e = match x {
                        F4::ONE => 0,
                        F4::PI => 1,
                        _ => 2,
                    };
                    let scaled: EVec = rep.num.iter().map(|&c| c * omega_pow(e)).collect();
                    row[i * d..(i + 1) * d].copy_from_slice(&scaled);
                }
                glue_rows.push(row);
            }
        }
        GluedKind::A2x12 | GluedKind::E6x4 => {
            let rep = glue_rep(&block, enum_cap)?;
            den = rep.den;
            let code = if kind == GluedKind::A2x12 {
                codes::ternary_golay()
            } else {
                codes::tetracode()
            };
            for w in code.generator() {
                let mut row = vec![Eis::ZERO; ambient];
                for (i, x) in w.iter().enumerate() {
                    let s = x.lift_centered();
                    if s == 0 {
                        continue;
                    }
                    let scaled: EVec = rep.num.iter().map(|&c| c * s).collect();
                    row[i * d..(i + 1) * d].copy_from_slice(&scaled);
                }
                glue_rows.push(row);
            }
        }
    }

    let mut rows: Vec<EVec> = Vec::new();
    for i in 0..k {
        for b in block.basis().num() {
            let scaled: EVec = b.iter().map(|&c| c * den).collect();
            rows.push(embed(i, &scaled));
        }
    }
    rows.extend(glue_rows);
    Ok(Lattice::from_scaled(Form::definite(ambient), ScaledMat::new(rows, den)))
}

/// The block sublattice (direct sum without glue).
pub fn block_sum(kind: GluedKind) -> Lattice {
    let block = root_lattice(kind.block());
    let d = block.ambient_dim();
    let k = kind.copies();
    let mut rows: Vec<EVec> = Vec::new();
    for i in 0..k {
        for b in block.basis().num() {
            let mut row = vec![Eis::ZERO; k * d];
            row[i * d..(i + 1) * d].copy_from_slice(b);
            rows.push(row);
        }
    }
    Lattice::from_rows(Form::definite(k * d), &rows)
}

/// Verify the glued lattice: rank 12, `L = θL′`, determinant `3⁶`, the
/// expected number of norm-3 vectors, all of them inside the block sum,
/// and nothing of smaller norm.
pub fn verify_glued(kind: GluedKind, enum_cap: usize) -> Result<Lattice, Error> {
    let l = glued_lattice(kind, enum_cap)?;
    let err = |msg: String| Err(Error::SelfCheck(format!("{}: {msg}", kind.name())));
    if l.rank() != 12 {
        return err(format!("rank {} ≠ 12", l.rank()));
    }
    if l.theta_dual_scaled() != l {
        return err("L ≠ θL′".into());
    }
    let gram = l.gram();
    let det = hnf::det(gram.num());
    let expected_det = 729i64 * gram.den().pow(12);
    if det != Eis::from(expected_det) {
        return err(format!("det {det} ≠ 3⁶·denⁿ = {expected_det}"));
    }
    let short = l.vectors_up_to(3, 1, enum_cap)?;
    if short.iter().any(|v| (v.norm_num, v.norm_den) != (3, 1)) {
        return err("vector of norm < 3 found".into());
    }
    if 2 * short.len() != kind.expected_root_count() {
        return err(format!(
            "{} roots ≠ {}",
            2 * short.len(),
            kind.expected_root_count()
        ));
    }
    let l0 = block_sum(kind);
    for v in &short {
        if !l0.contains_scaled(&v.num, v.den) {
            return err("root outside the block sum".into());
        }
    }
    Ok(l)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NullType {
    A2Type,
    D4Type,
    E6Type,
    E8Type,
    LeechType,
}

impl NullType {
    pub fn name(self) -> &'static str {
        match self {
            NullType::A2Type => "A2",
            NullType::D4Type => "D4",
            NullType::E6Type => "E6",
            NullType::E8Type => "E8",
            NullType::LeechType => "Leech",
        }
    }
}

/// Classify a primitive null vector of a Lorentzian `L = θL′` lattice by
/// splitting it off and decomposing the root system of the complement.
pub fn classify_null(l: &Lattice, rho: &[Eis], enum_cap: usize) -> Result<NullType, Error> {
    let split = l.split_null(rho)?;
    let comps = split.complement.root_components(enum_cap)?;
    let mut sizes: Vec<usize> = comps.iter().map(|c| 2 * c.len()).collect();
    sizes.sort_unstable();
    match sizes.as_slice() {
        [] => Ok(NullType::LeechType),
        s if s == [6; 12] => Ok(NullType::A2Type),
        s if s == [24; 6] => Ok(NullType::D4Type),
        s if s == [72; 4] => Ok(NullType::E6Type),
        s if s == [240; 3] => Ok(NullType::E8Type),
        other => Err(Error::SelfCheck(format!(
            "unrecognized root decomposition {other:?}"
        ))),
    }
}

/// Split off the distinguished null vector and fully verify the resulting
/// definite rank-12 lattice: `L = θL′`, no roots, minimum norm exactly 6.
pub fn extract_minimum6(l: &Lattice, rho: &[Eis], enum_cap: usize) -> Result<Lattice, Error> {
    let split = l.split_null(rho)?;
    let k = split.complement;
    let err = |msg: &str| Err(Error::SelfCheck(format!("minimum-6 extraction: {msg}")));
    if k.rank() != 12 {
        return err("rank is not 12");
    }
    if k.theta_dual_scaled() != k {
        return err("L ≠ θL′");
    }
    if !k.vectors_up_to(3, 1, enum_cap)?.is_empty() {
        return err("a vector of norm ≤ 3 exists");
    }
    match k.min_norm()? {
        Some((6, 1)) => Ok(k),
        other => err(&format!("minimum norm {other:?} ≠ 6")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions_match_their_membership_predicates() {
        let d4 = root_lattice(RootKind::D4);
        let w = Eis::OMEGA;
        assert!(d4.contains(&[w, w, Eis::ONE]));
        assert_eq!(d4.form().norm(&[w, w, Eis::ONE]), 3);
        assert!(!d4.contains(&[Eis::ONE, w, Eis::ONE]));
        let e6 = root_lattice(RootKind::E6);
        assert!(e6.contains(&[Eis::ONE, w, w * w]));
        assert!(!e6.contains(&[Eis::ONE, Eis::ZERO, Eis::ZERO]));
        let e8 = root_lattice(RootKind::E8);
        assert!(e8.contains(&[Eis::ZERO, Eis::ONE, Eis::ONE, Eis::ONE]));
        assert!(!e8.contains(&[Eis::ONE, Eis::ONE, Eis::ZERO, Eis::ZERO]));
        // E8 is θ-self-dual.
        assert_eq!(e8.theta_dual_scaled(), e8);
    }

    #[test]
    fn table_rows_for_the_small_lattices() {
        for kind in [RootKind::A2, RootKind::D4, RootKind::E6] {
            let row = verify_table1(kind, 10_000, 100_000).unwrap();
            assert_eq!(row, expected_table1(kind));
        }
    }

    #[test]
    fn e8_cheap_columns() {
        let l = root_lattice(RootKind::E8);
        let reps = root_reps(&l, 100_000).unwrap();
        assert_eq!(2 * reps.len(), 240);
        assert_eq!(l.theta_dual_scaled().quotient(&l).describe(), "0");
        // Four mutually orthogonal roots exist (the θeᵢ).
        let th = Eis::THETA;
        for i in 0..4 {
            let mut v = vec![Eis::ZERO; 4];
            v[i] = th;
            assert!(l.contains(&v));
        }
    }

    #[test]
    fn glued_lattices_small_checks() {
        let a = verify_glued(GluedKind::A2x12, 1_000_000).unwrap();
        assert_eq!(a.den(), 1);
        let e = verify_glued(GluedKind::E8x3, 1_000_000).unwrap();
        assert_eq!(e.quotient(&block_sum(GluedKind::E8x3)).order, 1);
        // The glue index equals the code size.
        assert_eq!(a.quotient(&block_sum(GluedKind::A2x12)).order, 729);
    }
}
