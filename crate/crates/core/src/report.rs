//! Batch verification suites with machine-readable reports.
//!
//! Every check the library can perform is packaged into named suites; a
//! suite run produces a [`Report`] whose structured serialization is
//! byte-identical across runs with the same configuration (wall time is the
//! single non-comparable field). Progress chatter for long suites goes to
//! stderr only, never into the report.

use crate::catalog::{self, GluedKind, NullType, RootKind};
use crate::codes;
use crate::fields::{Field, F3};
use crate::model::{self, Model};
use crate::plane::PlaneGroup;
use crate::{par, Config, Error};
use serde::{Deserialize, Serialize};
use std::fmt::Debug;
use std::time::Instant;

/// One verified fact: a stable id, the claim in words, the expected and
/// computed values, and whether they agreed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub id: String,
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Outcome of one suite run. `wall_ms` is informational and excluded from
/// the idempotence contract; every other field is deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub tool_version: String,
    pub closure_cap: usize,
    pub enum_cap: usize,
    pub threads: usize,
    pub wall_ms: u64,
    pub overall: bool,
    pub checks: Vec<VerificationRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Human-readable rendering, one check per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} (tool {}, closure cap {}, enum cap {}, threads {})\n",
            self.suite, self.tool_version, self.closure_cap, self.enum_cap, self.threads
        ));
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {}: {}", c.id, c.claim));
            if c.pass {
                out.push_str(&format!(" [{}]\n", c.actual));
            } else {
                out.push_str(&format!(" [expected {}, got {}]\n", c.expected, c.actual));
            }
        }
        let verdict = if self.overall { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{verdict}: {}/{} checks passed\n",
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        ));
        out
    }

    /// Stable structured rendering (pretty JSON, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// The named verification suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Codes,
    RootLattices,
    Niemeier,
    Model,
    Uniqueness,
    RootSpan,
    Y555,
    NullTypes,
    All,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Codes,
        Suite::RootLattices,
        Suite::Niemeier,
        Suite::Model,
        Suite::Uniqueness,
        Suite::RootSpan,
        Suite::Y555,
        Suite::NullTypes,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Codes => "codes",
            Suite::RootLattices => "root-lattices",
            Suite::Niemeier => "niemeier",
            Suite::Model => "model",
            Suite::Uniqueness => "uniqueness",
            Suite::RootSpan => "root-span",
            Suite::Y555 => "y555",
            Suite::NullTypes => "null-types",
            Suite::All => "all",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// Collector for verification records.
struct Checker {
    checks: Vec<VerificationRecord>,
    progress: bool,
}

impl Checker {
    fn new(progress: bool) -> Checker {
        Checker { checks: Vec::new(), progress }
    }

    fn note(&mut self, msg: &str) {
        if self.progress {
            eprintln!("  … {msg}");
        }
    }

    fn eq<T: Debug + PartialEq>(&mut self, id: &str, claim: &str, expected: T, actual: T) {
        self.checks.push(VerificationRecord {
            id: id.to_string(),
            claim: claim.to_string(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            pass: expected == actual,
        });
    }

    fn is_true(&mut self, id: &str, claim: &str, actual: bool) {
        self.eq(id, claim, true, actual);
    }

    /// A check whose computation failed outright.
    fn error(&mut self, id: &str, claim: &str, e: &Error) {
        self.checks.push(VerificationRecord {
            id: id.to_string(),
            claim: claim.to_string(),
            expected: "ok".to_string(),
            actual: format!("error: {e}"),
            pass: false,
        });
    }
}

/// Run one suite under the given configuration. `progress` enables coarse
/// stderr progress lines for the long suites.
pub fn run_suite(suite: Suite, config: &Config, progress: bool) -> Report {
    let start = Instant::now();
    let mut ck = Checker::new(progress);
    par::install(config.threads, || match suite {
        Suite::Codes => suite_codes(&mut ck),
        Suite::RootLattices => suite_root_lattices(&mut ck, config),
        Suite::Niemeier => suite_niemeier(&mut ck, config),
        Suite::Model => suite_model(&mut ck),
        Suite::Uniqueness => suite_uniqueness(&mut ck),
        Suite::RootSpan => suite_root_span(&mut ck, config),
        Suite::Y555 => suite_y555(&mut ck, config),
        Suite::NullTypes => suite_null_types(&mut ck, config),
        Suite::All => {
            suite_codes(&mut ck);
            suite_root_lattices(&mut ck, config);
            suite_model(&mut ck);
            suite_root_span(&mut ck, config);
            suite_y555(&mut ck, config);
            suite_uniqueness(&mut ck);
            suite_niemeier(&mut ck, config);
            suite_null_types(&mut ck, config);
        }
    });
    let overall = ck.checks.iter().all(|c| c.pass);
    Report {
        suite: suite.name().to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        closure_cap: config.closure_cap,
        enum_cap: config.enum_cap,
        threads: config.threads,
        wall_ms: start.elapsed().as_millis() as u64,
        overall,
        checks: ck.checks,
    }
}

fn suite_codes(ck: &mut Checker) {
    let m = Model::new();
    ck.eq("codes.diff-dim", "the line-difference code has dimension 6", 6, m.diff_code.dim());
    ck.eq("codes.line-dim", "the line code (its dual) has dimension 7", 7, m.line_code.dim());
    ck.is_true(
        "codes.nested",
        "the difference code lies inside the line code",
        m.diff_code.generator().iter().all(|w| m.line_code.contains(w)),
    );

    match m.diff_code.codewords() {
        Ok(words) => {
            ck.eq("codes.size", "the difference code has 729 words", 729, words.len());
            let expected: Vec<((usize, usize, usize), usize)> = vec![
                ((0, 0, 0), 1),
                ((6, 3, 3), 156),
                ((9, 6, 3), 468),
                ((9, 9, 0), 26),
                ((12, 6, 6), 78),
            ];
            let got: Vec<_> = codes::census_balanced(&words).into_iter().collect();
            ck.eq(
                "codes.census-balanced",
                "difference-code census by (support, larger sign count, smaller sign count) is 1/156/26/468/78",
                expected,
                got,
            );
        }
        Err(e) => ck.error("codes.size", "the difference code has 729 words", &e),
    }

    match m.line_code.codewords() {
        Ok(words) => {
            let sum_one: Vec<Vec<F3>> = words
                .into_iter()
                .filter(|w| w.iter().fold(F3::new(0), |s, &x| s.add(x)).value() == 1)
                .collect();
            ck.eq(
                "codes.sum-one-count",
                "the line code has 729 words of coordinate sum 1",
                729,
                sum_one.len(),
            );
            let expected: Vec<((usize, usize, usize), usize)> = vec![
                ((4, 4, 0), 13),
                ((7, 1, 6), 78),
                ((7, 4, 3), 234),
                ((10, 4, 6), 234),
                ((10, 7, 3), 156),
                ((13, 4, 9), 13),
                ((13, 13, 0), 1),
            ];
            let got: Vec<_> = codes::census_signed(&sum_one).into_iter().collect();
            ck.eq(
                "codes.census-signed",
                "sum-1 census by (support, +1 count, −1 count) is 13/78/234/234/156/13/1",
                expected,
                got,
            );
        }
        Err(e) => ck.error("codes.sum-one-count", "the line code has 729 words of sum 1", &e),
    }

    let golay = codes::ternary_golay();
    ck.eq("codes.golay-dim", "the ternary Golay code has dimension 6", 6, golay.dim());
    ck.eq(
        "codes.golay-min-weight",
        "the ternary Golay code has minimum weight 6",
        Some(6),
        golay.min_weight().ok(),
    );
    ck.is_true(
        "codes.golay-self-dual",
        "the ternary Golay code equals its plain dual",
        golay.dual_plain() == golay,
    );

    let hexa = codes::hexacode();
    ck.eq("codes.hexacode-dim", "the hexacode has dimension 3", 3, hexa.dim());
    ck.eq(
        "codes.hexacode-min-weight",
        "the hexacode has minimum weight 4",
        Some(4),
        hexa.min_weight().ok(),
    );
    ck.is_true(
        "codes.hexacode-self-dual",
        "the hexacode equals its Hermitian dual",
        hexa.dual_hermitian() == hexa,
    );
    ck.eq(
        "codes.hexacode-size",
        "the hexacode has 64 words",
        64,
        hexa.codewords().map(|w| w.len()).unwrap_or(0),
    );

    let tetra = codes::tetracode();
    ck.eq("codes.tetracode-dim", "the tetracode has dimension 2", 2, tetra.dim());
    ck.eq(
        "codes.tetracode-min-weight",
        "the tetracode has minimum weight 3",
        Some(3),
        tetra.min_weight().ok(),
    );
    ck.is_true(
        "codes.tetracode-self-dual",
        "the tetracode equals its plain dual",
        tetra.dual_plain() == tetra,
    );
}

fn suite_root_lattices(ck: &mut Checker, config: &Config) {
    for kind in RootKind::ALL {
        let name = kind.name();
        ck.note(&format!("verifying the {name} row"));
        let claim = format!(
            "the {name} row (rank, roots, reflection group, automorphisms, glue, coset minimum) is reproduced"
        );
        let id = format!("root-lattices.{}", name.to_lowercase());
        match catalog::verify_table1(kind, config.closure_cap, config.enum_cap) {
            Ok(row) => {
                let expected = catalog::expected_table1(kind);
                ck.eq(&id, &claim, format!("{expected:?}"), format!("{row:?}"));
            }
            Err(e) => ck.error(&id, &claim, &e),
        }
    }
}

fn suite_niemeier(ck: &mut Checker, config: &Config) {
    for kind in GluedKind::ALL {
        let name = kind.name();
        ck.note(&format!("building and enumerating {name}"));
        let id = format!("niemeier.{}", name.to_lowercase());
        let claim = format!(
            "{name} is a rank-12 lattice equal to its θ-dual with determinant 3⁶, {} roots, all inside the block sum",
            kind.expected_root_count()
        );
        match catalog::verify_glued(kind, config.enum_cap) {
            Ok(_) => ck.is_true(&id, &claim, true),
            Err(e) => ck.error(&id, &claim, &e),
        }
    }
}

fn suite_model(ck: &mut Checker) {
    let m = Model::new();
    match m.verify_model() {
        Ok(s) => {
            ck.eq("model.rank", "the model lattice has rank 14", 14, s.rank);
            ck.eq("model.signature", "the form has signature (13,1)", (13, 1), s.signature);
            ck.is_true(
                "model.roots",
                "all 26 point/line roots have norm 3 and lie in the lattice",
                s.roots_norm_3,
            );
            ck.is_true("model.span", "the 26 roots span the lattice", s.roots_span_lattice);
            ck.is_true(
                "model.point-orthogonal",
                "distinct point roots are orthogonal",
                s.point_pairs_orthogonal,
            );
            ck.is_true(
                "model.line-orthogonal",
                "distinct line roots are orthogonal",
                s.line_pairs_orthogonal,
            );
            ck.is_true(
                "model.incidence-pairing",
                "⟨point, line⟩ is θ on incidence and 0 otherwise",
                s.incidence_pairing,
            );
            ck.is_true("model.theta-dual", "the lattice equals its θ-dual", s.theta_dual_equal);
            ck.eq(
                "model.image-dimension",
                "the lattice reduces mod θ to a 7-dimensional subspace of F₃¹⁴",
                7,
                s.image_dimension_in_f3,
            );
            ck.is_true("model.rho-member", "ρ = (−4−ω; 1¹³) lies in the lattice", s.rho_is_member);
            ck.eq("model.rho-null", "ρ has norm 0", 0, s.rho_norm);
            ck.is_true(
                "model.membership",
                "congruence membership agrees with span membership on a probe sweep",
                s.membership_matches_span,
            );
        }
        Err(e) => ck.error("model.verify", "the model construction verifies", &e),
    }
}

fn suite_uniqueness(ck: &mut Checker) {
    let m = Model::new();
    ck.note("scanning all 265 720 seed lines (this is the long part)");
    match m.invariant_subspace_scan() {
        Ok(out) => {
            ck.eq(
                "uniqueness.code-lines",
                "every line inside the code closes to exactly the code (364 lines)",
                364,
                out.code_lines,
            );
            ck.eq(
                "uniqueness.outside-lines",
                "every line outside the code closes to the whole space (265 356 lines)",
                265_356,
                out.outside_lines,
            );
            ck.eq(
                "uniqueness.quotient-lines",
                "every line of the quotient by the code closes to the whole quotient (364 lines)",
                364,
                out.quotient_lines,
            );
            ck.eq(
                "uniqueness.total",
                "the scan covered all (3¹²−1)/2 = 265 720 seed lines",
                265_720,
                out.code_lines + out.outside_lines,
            );
        }
        Err(e) => ck.error("uniqueness.scan", "the invariant-subspace scan completes", &e),
    }
}

fn suite_root_span(ck: &mut Checker, config: &Config) {
    let m = Model::new();

    match m.derivation_steps(config.closure_cap) {
        Ok(steps) => {
            ck.eq("root-span.steps", "all five derivation steps verify", 5, steps.len());
            for s in &steps {
                ck.is_true(
                    &format!("root-span.step-{}", s.label),
                    &format!(
                        "step {}: a, b, a+b and the claimed output are roots, ⟨a,b⟩ is ω−1 or ω̄−1, and the sum's reflection lies in the order-24 closure",
                        s.label
                    ),
                    true,
                );
            }
        }
        Err(e) => ck.error("root-span.steps", "all five derivation steps verify", &e),
    }

    match m.family_checks() {
        Ok(f) => {
            ck.eq("root-span.first-family", "the ordered-line-pair family has 156 roots", 156, f.first_count);
            ck.eq(
                "root-span.second-family",
                "the nonconcurrent-line-triple family has 234 roots",
                234,
                f.second_count,
            );
            ck.is_true("root-span.distinct", "all 390 family roots are distinct", f.all_distinct);
            ck.is_true("root-span.roots", "all 390 family vectors are roots of the lattice", f.all_roots);
            ck.is_true("root-span.pairing", "every family root r has ⟨r,ρ⟩ = θ", f.all_pair_theta);
            ck.is_true("root-span.shifts", "ρ+r is a root for every family root r", f.all_shifts_roots);
            ck.is_true(
                "root-span.shift-shapes",
                "ρ+r has the expected coordinate shape for the first root of each family",
                f.first_shift_shape && f.second_shift_shape,
            );
        }
        Err(e) => ck.error("root-span.families", "the two root families verify", &e),
    }

    match m.span_checks() {
        Ok(s) => {
            ck.is_true(
                "root-span.delta-shape",
                "δ = −ω(r₀₁ − r₁₀) is the signed two-line indicator vector",
                s.delta_first_shape,
            );
            ck.is_true("root-span.delta-norm", "every δ has norm 6", s.delta_norms_6);
            ck.is_true(
                "root-span.delta-adjacent",
                "⟨δ_ij, δ_jk⟩ = −3 for all distinct line triples",
                s.delta_adjacent_inner_minus3,
            );
            ck.is_true(
                "root-span.delta-disjoint",
                "⟨δ_ij, δ_kl⟩ = 0 for all disjoint index pairs",
                s.delta_disjoint_inner_0,
            );
            ck.eq(
                "root-span.strictness",
                "⟨r_ij − r_jk, δ_ik⟩ avoids 3E for all 1404 ordered nonconcurrent triples",
                (true, 1404),
                (s.strictness_holds, s.strict_triples),
            );
            ck.is_true(
                "root-span.difference-span",
                "differences within the 156-family span the sum-zero hyperplane sublattice",
                s.first_differences_equal_sum_zero_sublattice,
            );
            ck.is_true(
                "root-span.full-span",
                "differences over all 390 roots span exactly ρ⊥ ∩ L",
                s.all_differences_equal_null_complement,
            );
        }
        Err(e) => ck.error("root-span.spans", "the difference-span analysis verifies", &e),
    }

    match m.sixth_root_checks() {
        Ok(recs) => {
            for r in &recs {
                let slug = r.label.replace(' ', "-");
                ck.eq(
                    &format!("root-span.sixth-root.{slug}"),
                    &format!(
                        "for the {} root, reflecting in r then in ρ+r multiplies ρ by −ω (a primitive sixth root)",
                        r.label
                    ),
                    "Some(-ω)".to_string(),
                    match r.scalar_r_then_s {
                        Some(z) => format!("Some({z})"),
                        None => "None".to_string(),
                    },
                );
                ck.is_true(
                    &format!("root-span.sixth-root.{slug}-units"),
                    "unit multiples of the roots give the identical reflections",
                    r.stable_under_unit_scaling,
                );
            }
        }
        Err(e) => ck.error("root-span.sixth-root", "the sixth-root compositions verify", &e),
    }
}

fn suite_y555(ck: &mut Checker, config: &Config) {
    let m = Model::new();
    let embeddings = m.diagram_embeddings();
    ck.eq(
        "y555.embeddings",
        "the 16-node diagram embeds induced into the incidence graph in 11232 ways",
        11232,
        embeddings.len(),
    );
    if embeddings.is_empty() {
        return;
    }

    match PlaneGroup::new(&m.plane) {
        Ok(group) => {
            ck.eq("y555.collineations", "the collineation group has order 5616", 5616, group.order());
            match m.verify_diagram(&group) {
                Ok(s) => {
                    ck.eq(
                        "y555.orbits",
                        "embedding image sets form one collineation orbit per flavor",
                        (1, 1),
                        s.image_orbit_count_per_flavor,
                    );
                    ck.is_true(
                        "y555.duality",
                        "the point-line duality exchanges the two flavors",
                        s.duality_swaps_flavors,
                    );
                    ck.eq("y555.gram-rank", "the 16-root Gram matrix has rank 14", 14, s.gram_rank);
                    ck.eq(
                        "y555.pair-identities",
                        "all 120 root pairs satisfy the braid or commutation identity matching the diagram",
                        120,
                        s.pairs_checked,
                    );
                }
                Err(e) => ck.error("y555.diagram", "the diagram root identities verify", &e),
            }
        }
        Err(e) => ck.error("y555.collineations", "the collineation group closes", &e),
    }

    match m.verify_chain_spans(&embeddings[0], config.enum_cap) {
        Ok(s) => {
            ck.eq(
                "y555.long-chain",
                "the 11-chain roots span a rank-10 signature-(9,1) lattice equal to its θ-dual with determinant −3⁵",
                "(10, (9, 1), true, -243)".to_string(),
                format!(
                    "({}, {:?}, {}, {})",
                    s.long_chain_rank,
                    s.long_chain_signature,
                    s.long_chain_theta_dual_equal,
                    s.long_chain_det
                ),
            );
            ck.eq(
                "y555.short-chain",
                "the 4-chain roots span a rank-4 definite lattice with 240 roots equal to its θ-dual",
                "(4, true, 240, true)".to_string(),
                format!(
                    "({}, {}, {}, {})",
                    s.short_chain_rank,
                    s.short_chain_definite,
                    s.short_chain_root_count,
                    s.short_chain_theta_dual_equal
                ),
            );
            ck.is_true("y555.chains-orthogonal", "the two chains are orthogonal", s.chains_orthogonal);
            ck.is_true(
                "y555.union-spans",
                "the 15 chain roots together span the whole lattice",
                s.union_spans_lattice,
            );
        }
        Err(e) => ck.error("y555.chains", "the chain spans verify", &e),
    }

    ck.note("searching all induced 11-chains of the incidence graph");
    match model::verify_graph_claims(&m.plane, &embeddings[0]) {
        Ok(s) => {
            ck.eq("y555.chain-count", "the incidence graph has 5616 induced 11-chains", 5616, s.chain_count);
            ck.is_true(
                "y555.cycle-closure",
                "every induced 11-chain closes to an induced 12-cycle through exactly one node",
                s.every_chain_closes_uniquely,
            );
            ck.is_true(
                "y555.cycle-complement",
                "the nodes not joined to any 12-cycle node always induce a 4-chain",
                s.complements_are_4_chains,
            );
            ck.is_true(
                "y555.chain-orbit",
                "all 11-chains form a single orbit under the graph automorphisms",
                s.chains_form_one_orbit,
            );
            ck.eq(
                "y555.flip-extension",
                "the arm-swapping diagram automorphism extends to the incidence graph in exactly one way, color-preserving",
                (1, true),
                (s.flip_extension_count, s.extensions_color_preserving),
            );
        }
        Err(e) => ck.error("y555.graph", "the graph chain facts verify", &e),
    }
}

fn suite_null_types(ck: &mut Checker, config: &Config) {
    let m = Model::new();

    ck.note("extracting the minimum-6 lattice from ρ");
    let claim = "the quotient by ρ has rank 12, equals its θ-dual, contains no vector of norm < 6, and has minimum exactly 6";
    match m.minimum6_lattice(config.enum_cap) {
        Ok(_) => ck.is_true("null-types.minimum6", claim, true),
        Err(e) => ck.error("null-types.minimum6", claim, &e),
    }

    for kind in [
        NullType::LeechType,
        NullType::E6Type,
        NullType::A2Type,
        NullType::D4Type,
        NullType::E8Type,
    ] {
        let name = kind.name();
        ck.note(&format!("classifying the {name} placement"));
        let id = format!("null-types.{}", name.to_lowercase());
        let claim = format!("the listed null vector of {name} classifies as {name}");
        let v = m.null_vector(kind);
        match m.classify(&v, config.enum_cap) {
            Ok(got) => ck.eq(&id, &claim, name, got.name()),
            Err(e) => ck.error(&id, &claim, &e),
        }
    }
}
