//! The consolidated per-algebra report and its sections.

use crate::algebra::{frobenius_search, AlgebraReport, FrobeniusForm};
use crate::hwcat::{
    BggReport, BlockFactorization, BrauerReport, DecompositionMatrices, DualityReport, FamilyReport, HwError, Pipeline,
    RelationReport, SelfInjectivityReport, SemisimplicityReport, SimpleSummary, TiltingData,
};
use crate::klres::{self, KlParityReport, KlVerdict, KoszulReport, TateComparison};
use crate::triangular::{CheckItem, Sign, TriangularReport};
use crate::zoo::Bundle;
use crate::TriangularDecomposition;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome<T> {
    Ok(T),
    Error { kind: String, message: String },
}

impl<T> Outcome<T> {
    pub fn ok(&self) -> Option<&T> {
        match self {
            Outcome::Ok(t) => Some(t),
            Outcome::Error { .. } => None,
        }
    }
}

impl<T> From<Result<T, HwError>> for Outcome<T> {
    fn from(r: Result<T, HwError>) -> Self {
        match r {
            Ok(t) => Outcome::Ok(t),
            Err(e) => Outcome::Error { kind: error_kind(&e).into(), message: e.to_string() },
        }
    }
}

pub fn error_kind(e: &HwError) -> &'static str {
    match e {
        HwError::Ring(_) => "ring",
        HwError::DuplicateSimple(..) => "duplicate_simple",
        HwError::SingularCL => "singular_c_l",
        HwError::NotSemisimpleT(_) => "not_semisimple_t",
        HwError::NotFiltered(_) => "not_filtered",
        HwError::UnknownIsoStatus { .. } => "unknown_iso_status",
        HwError::HighestWeightAmbiguous { .. } => "highest_weight_ambiguous",
        HwError::NotSelfInjective => "not_self_injective",
        HwError::NotTriangularInvolution(_) => "not_triangular_involution",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub schema: u32,
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub seed: u64,
    pub max_step: usize,
}

/// `(plus index, torus index, minus index, coefficient)` of a kernel vector of `A^+ T A^- -> A`.
pub type AmbiWitness = Vec<(usize, usize, usize, String)>;

#[derive(Clone, Debug, Serialize)]
pub struct VerifySection {
    pub algebra: AlgebraReport,
    pub triangular: Option<TriangularReport>,
    pub ambidextrous: Option<bool>,
    pub ambidexterity_witness: Option<AmbiWitness>,
    /// `pbw_coords` recovers every basis element
    pub pbw_round_trip: Option<bool>,
}

impl VerifySection {
    pub fn passed(&self) -> bool {
        self.algebra.passed()
            && self.triangular.as_ref().map_or(true, |t| t.passed())
            && self.pbw_round_trip != Some(false)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplesSection {
    pub simples: Vec<SimpleSummary>,
    pub bijection: Vec<CheckItem>,
    pub rigid: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatricesSection {
    pub matrices: DecompositionMatrices,
    pub relation: RelationReport,
    pub ungraded: Vec<Vec<i64>>,
    /// `D_Δ(1)` equals the ungraded recomputation
    pub ungraded_agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertiesSection {
    pub highest_weights: Vec<CheckItem>,
    pub costandard_socles: Vec<CheckItem>,
    pub endomorphisms: Vec<CheckItem>,
    pub standard_costandard_ext: Vec<CheckItem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlocksSection {
    pub families: FamilyReport,
    pub factorization: Vec<BlockFactorization>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SocleSection {
    pub left_degrees: Vec<i32>,
    pub right_degrees: Vec<i32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingSection {
    pub self_injectivity: SelfInjectivityReport,
    pub frobenius: Option<FrobeniusForm>,
    pub data: Option<Outcome<TiltingData>>,
    /// number of `T(λ)` with explicit `Δ(λ) -> T(λ)` and `T(λ) -> ∇(λ)`
    pub verified: Option<Outcome<usize>>,
    pub summary: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SideKl {
    pub koszul: KoszulReport,
    pub tate: Option<TateComparison>,
    pub degrees_criterion: Option<KlVerdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KlSection {
    pub parity: KlParityReport,
    pub minus: SideKl,
    pub plus: SideKl,
    pub summary: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub header: Header,
    pub verify: VerifySection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simples: Option<Outcome<SimplesSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Outcome<MatricesSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<Outcome<PropertiesSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bgg: Option<BggReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brauer: Option<Outcome<BrauerReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semisimplicity: Option<Outcome<SemisimplicityReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Outcome<BlocksSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socles: Option<Outcome<SocleSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tilting: Option<Outcome<TiltingSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<Outcome<DualityReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kl: Option<Outcome<KlSection>>,
}

/// Which sections to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Verify,
    Simples,
    Matrices,
    Bgg,
    Tilting,
    Kl,
    Blocks,
    Full,
}

pub struct RunOptions {
    pub seed: u64,
    pub max_step: usize,
    /// worker threads for independent sections
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, max_step: 6, jobs: 1 }
    }
}

pub fn verify_section(b: &Bundle) -> (VerifySection, Option<TriangularDecomposition>) {
    let algebra = b.algebra.verify();
    let Some(t) = &b.triangular else {
        return (VerifySection { algebra, triangular: None, ambidextrous: None, ambidexterity_witness: None, pbw_round_trip: None }, None);
    };
    let rep = crate::triangular::verify_triangular(&b.algebra, &t.minus, &t.torus, &t.plus, &t.irr);
    if !rep.passed() || !algebra.passed() {
        return (
            VerifySection { algebra, triangular: Some(rep), ambidextrous: None, ambidexterity_witness: None, pbw_round_trip: None },
            None,
        );
    }
    let td = b.decomposition().expect("verified triangular data");
    let (ambidextrous, witness) = match td.ambidexterity_check() {
        Ok(()) => (true, None),
        Err(w) => {
            let (nt, nm) = (td.torus().len(), td.minus().len());
            let terms = w
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(idx, x)| (idx / (nt * nm), (idx / nm) % nt, idx % nm, x.to_string()))
                .collect();
            (false, Some(terms))
        }
    };
    let pbw = pbw_round_trip(&td);
    (
        VerifySection {
            algebra,
            triangular: Some(rep),
            ambidextrous: Some(ambidextrous),
            ambidexterity_witness: witness,
            pbw_round_trip: Some(pbw),
        },
        Some(td),
    )
}

/// `pbw_coords` of each tensor basis product is the matching unit vector.
pub fn pbw_round_trip(td: &TriangularDecomposition) -> bool {
    let n = td.algebra().dim();
    (0..n).all(|idx| {
        let (i, j, k) = td.tensor_split(idx);
        let c = td.pbw_coords(&td.pbw_element(i, j, k));
        c.iter().enumerate().all(|(r, x)| if r == idx { x.is_one() } else { x.is_zero() })
    })
}

fn simples_section(p: &Pipeline) -> Result<SimplesSection, HwError> {
    Ok(SimplesSection { simples: p.simple_summaries(), bijection: p.verify_bijection()?, rigid: p.rigid_simples() })
}

fn matrices_section(p: &Pipeline) -> Result<MatricesSection, HwError> {
    let matrices = p.decomposition_matrices()?;
    let relation = p.verify_relation()?;
    let ungraded = p.ungraded_decomposition()?;
    let ungraded_agrees = matrices.d_delta.eval_one() == ungraded;
    Ok(MatricesSection { matrices, relation, ungraded, ungraded_agrees })
}

fn properties_section(p: &Pipeline) -> Result<PropertiesSection, HwError> {
    Ok(PropertiesSection {
        highest_weights: p.highest_weight_of_standards()?,
        costandard_socles: p.costandard_socles()?,
        endomorphisms: p.standard_endomorphisms(),
        standard_costandard_ext: p.standard_costandard_ext(1)?,
    })
}

fn blocks_section(p: &Pipeline) -> Result<BlocksSection, HwError> {
    Ok(BlocksSection { families: p.compare_families()?, factorization: p.block_center_factorization()? })
}

fn socle_section(p: &Pipeline) -> Result<SocleSection, HwError> {
    let s = p.regular_socles()?;
    let alg = p.td().algebra();
    let degrees = |sub: &crate::Subspace| {
        let mut d: Vec<i32> = sub.basis().iter().map(|v| alg.homogeneous_degree(v).unwrap_or(i32::MIN)).collect();
        d.sort();
        d
    };
    Ok(SocleSection { left_degrees: degrees(&s.left), right_degrees: degrees(&s.right) })
}

/// First Frobenius certificate over the degrees of `A`, preferring `d = 0` and symmetric forms.
pub fn find_frobenius(b: &Bundle, seed: u64) -> Option<FrobeniusForm> {
    let alg = &b.algebra;
    let hints: Vec<crate::Vector> = b.frobenius_hint.iter().map(|(_, v)| v.clone()).collect();
    let mut degrees: Vec<i32> = alg.support().into_iter().collect();
    degrees.sort_by_key(|d| (d.abs(), *d));
    let mut found = None;
    for d in degrees {
        if let Some(f) = frobenius_search(alg, d, 16, seed, &hints) {
            if f.symmetric {
                return Some(f);
            }
            found.get_or_insert(f);
        }
    }
    found
}

fn tilting_section(p: &Pipeline, b: &Bundle, seed: u64) -> Result<TiltingSection, HwError> {
    let si = p.self_injectivity_check()?;
    let frobenius = find_frobenius(b, seed);
    if !si.self_injective {
        let summary = if si.has_tilting_objects() {
            format!("not self-injective; projective-injective labels {:?}", si.projective_injective)
        } else {
            "not self-injective; no tilting objects".to_string()
        };
        return Ok(TiltingSection { self_injectivity: si, frobenius, data: None, verified: None, summary });
    }
    let data: Outcome<TiltingData> = p.tilting_data().into();
    let verified = data.ok().map(|d| p.verify_tilting(d).map(|w| w.len()).into());
    let summary = match (&data, &verified) {
        (Outcome::Ok(d), Some(Outcome::Ok(k))) if d.passed() => format!("self-injective; {k} tilting objects T(λ) = P(h⁻¹(λ)) verified"),
        (Outcome::Ok(_), _) => "self-injective; tilting consistency checks failed".to_string(),
        (Outcome::Error { message, .. }, _) => format!("self-injective; {message}"),
    };
    Ok(TiltingSection { self_injectivity: si, frobenius, data: Some(data), verified, summary })
}

fn side_kl(p: &Pipeline, b: &Bundle, sign: Sign, max_step: usize) -> SideKl {
    let alg = p.td().side_algebra(sign.clone());
    let ci = match sign {
        Sign::Minus => &b.ci_minus,
        Sign::Plus => &b.ci_plus,
    };
    SideKl {
        koszul: klres::koszul_check_up_to(&alg, max_step),
        tate: ci.as_ref().map(|ci| klres::compare_tate(ci, &alg, max_step)),
        degrees_criterion: ci.as_ref().map(klres::degrees_kl_criterion),
    }
}

fn kl_section(p: &Pipeline, b: &Bundle, max_step: usize) -> Result<KlSection, HwError> {
    let parity = klres::kl_parity_check(p, max_step)?;
    let minus = side_kl(p, b, Sign::Minus, max_step);
    let plus = side_kl(p, b, Sign::Plus, max_step);
    let certified = [&minus, &plus].iter().all(|s| s.tate.as_ref().is_some_and(|t| t.certifies_all_steps));
    let summary = match parity.first_violation() {
        Some(v) => format!("KL fails at depth {} (internal degree {}, label {})", v.m, v.shift, p.td().labels()[v.label]),
        None if certified => format!("KL parity holds to depth {max_step}; Tate character agrees on both sides"),
        None => format!("KL parity holds to depth {max_step}"),
    };
    Ok(KlSection { parity, minus, plus, summary })
}

fn wants(scope: Scope, s: Scope) -> bool {
    scope == Scope::Full || scope == s
}

/// Runs `jobs` closures at a time, keeping results in order.
fn run_parallel<'a, T: Send>(jobs: usize, tasks: Vec<Box<dyn FnOnce() -> T + Send + 'a>>) -> Vec<T> {
    if jobs <= 1 {
        return tasks.into_iter().map(|f| f()).collect();
    }
    let mut out = Vec::with_capacity(tasks.len());
    let mut it = tasks.into_iter().peekable();
    while it.peek().is_some() {
        let chunk: Vec<_> = it.by_ref().take(jobs).collect();
        std::thread::scope(|s| {
            let handles: Vec<_> = chunk.into_iter().map(|f| s.spawn(f)).collect();
            out.extend(handles.into_iter().map(|h| h.join().expect("report worker panicked")));
        });
    }
    out
}

enum Piece {
    Simples(Outcome<SimplesSection>),
    Matrices(Outcome<MatricesSection>),
    Properties(Outcome<PropertiesSection>),
    Bgg(BggReport),
    Brauer(Outcome<BrauerReport>),
    Semisimplicity(Outcome<SemisimplicityReport>),
    Blocks(Outcome<BlocksSection>),
    Socles(Outcome<SocleSection>),
    Tilting(Outcome<TiltingSection>),
    Duality(Outcome<DualityReport>),
    Kl(Outcome<KlSection>),
}

pub fn build_report(b: &Bundle, scope: Scope, opts: &RunOptions) -> Report {
    let header = Header {
        schema: crate::specfile::SCHEMA,
        name: b.name.clone(),
        field: b.algebra.field().descriptor(),
        dim: b.algebra.dim(),
        seed: opts.seed,
        max_step: opts.max_step,
    };
    let (verify, td) = verify_section(b);
    let mut report = Report {
        header,
        verify,
        simples: None,
        matrices: None,
        properties: None,
        bgg: None,
        brauer: None,
        semisimplicity: None,
        blocks: None,
        socles: None,
        tilting: None,
        duality: None,
        kl: None,
    };
    let Some(td) = td else {
        return report;
    };
    if scope == Scope::Verify {
        return report;
    }
    let p = Pipeline::new(td, opts.seed);
    // shared stages first so workers only read caches
    let _ = p.ring();
    let _ = p.op().ring();
    let pr = &p;
    let max_step = opts.max_step;
    let seed = opts.seed;
    let mut tasks: Vec<Box<dyn FnOnce() -> Piece + Send + '_>> = Vec::new();
    if wants(scope, Scope::Simples) {
        tasks.push(Box::new(move || Piece::Simples(simples_section(pr).into())));
    }
    if wants(scope, Scope::Matrices) {
        tasks.push(Box::new(move || Piece::Matrices(matrices_section(pr).into())));
    }
    if scope == Scope::Full {
        tasks.push(Box::new(move || Piece::Properties(properties_section(pr).into())));
        tasks.push(Box::new(move || Piece::Semisimplicity(pr.semisimplicity_check().into())));
        tasks.push(Box::new(move || Piece::Socles(socle_section(pr).into())));
    }
    if wants(scope, Scope::Bgg) {
        tasks.push(Box::new(move || Piece::Bgg(pr.bgg_check())));
        tasks.push(Box::new(move || Piece::Brauer(pr.brauer_reciprocity_check().into())));
    }
    if wants(scope, Scope::Blocks) {
        tasks.push(Box::new(move || Piece::Blocks(blocks_section(pr).into())));
    }
    if wants(scope, Scope::Tilting) {
        tasks.push(Box::new(move || Piece::Tilting(tilting_section(pr, b, seed).into())));
        if scope == Scope::Full {
            if let Some(tau) = &b.anti_involution {
                tasks.push(Box::new(move || Piece::Duality(pr.verify_duality(tau).into())));
            }
        }
    }
    if wants(scope, Scope::Kl) {
        tasks.push(Box::new(move || Piece::Kl(kl_section(pr, b, max_step).into())));
    }
    for piece in run_parallel(opts.jobs, tasks) {
        match piece {
            Piece::Simples(x) => report.simples = Some(x),
            Piece::Matrices(x) => report.matrices = Some(x),
            Piece::Properties(x) => report.properties = Some(x),
            Piece::Bgg(x) => report.bgg = Some(x),
            Piece::Brauer(x) => report.brauer = Some(x),
            Piece::Semisimplicity(x) => report.semisimplicity = Some(x),
            Piece::Blocks(x) => report.blocks = Some(x),
            Piece::Socles(x) => report.socles = Some(x),
            Piece::Tilting(x) => report.tilting = Some(x),
            Piece::Duality(x) => report.duality = Some(x),
            Piece::Kl(x) => report.kl = Some(x),
        }
    }
    report
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Any section that ran into an internal error.
    pub fn internal_errors(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut look = |name: &str, kind: Option<&str>, msg: Option<&str>| {
            if let (Some(k), Some(m)) = (kind, msg) {
                if k != "not_self_injective" && k != "not_semisimple_t" && k != "not_filtered" {
                    out.push(format!("{name}: {m}"));
                }
            }
        };
        macro_rules! check {
            ($name:literal, $f:expr) => {
                if let Some(Outcome::Error { kind, message }) = &$f {
                    look($name, Some(kind), Some(message));
                }
            };
        }
        check!("simples", self.simples);
        check!("matrices", self.matrices);
        check!("properties", self.properties);
        check!("brauer", self.brauer);
        check!("semisimplicity", self.semisimplicity);
        check!("blocks", self.blocks);
        check!("socles", self.socles);
        check!("tilting", self.tilting);
        check!("duality", self.duality);
        check!("kl", self.kl);
        out
    }

    /// Failures of checks that hold by theory whenever the inputs verify.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.verify.passed() {
            out.push("verification failed".into());
        }
        let failed = |items: &[CheckItem], out: &mut Vec<String>| {
            out.extend(items.iter().filter(|c| !c.passed).map(|c| c.name.clone()));
        };
        if let Some(Outcome::Ok(s)) = &self.simples {
            failed(&s.bijection, &mut out);
        }
        if let Some(Outcome::Ok(m)) = &self.matrices {
            if !m.relation.product_holds || !m.relation.inverse_recovers_d {
                out.push("C_Δ = D_Δ C_L".into());
            }
            if !m.ungraded_agrees {
                out.push("D_Δ(1) vs ungraded".into());
            }
        }
        if let Some(Outcome::Ok(p)) = &self.properties {
            failed(&p.highest_weights, &mut out);
            failed(&p.costandard_socles, &mut out);
            failed(&p.standard_costandard_ext, &mut out);
            if self.semisimple_t() {
                failed(&p.endomorphisms, &mut out);
            }
        }
        if let Some(Outcome::Ok(b)) = &self.brauer {
            if !b.holds() {
                out.push("Brauer reciprocity".into());
            }
        }
        if let (Some(Outcome::Ok(f)), Some(bgg)) = (&self.blocks, &self.bgg) {
            if bgg.failures.is_empty() && !f.families.equal {
                out.push("families vs standard families".into());
            }
        }
        if let Some(Outcome::Ok(t)) = &self.tilting {
            if let Some(Outcome::Ok(d)) = &t.data {
                failed(&d.checks, &mut out);
            }
        }
        if let Some(Outcome::Ok(d)) = &self.duality {
            failed(&d.checks, &mut out);
        }
        out
    }

    /// Negative verdicts that are informational unless `--strict`.
    pub fn informational_negatives(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.verify.ambidextrous == Some(false) {
            out.push("not ambidextrous".into());
        }
        if let Some(b) = &self.bgg {
            if !b.failures.is_empty() {
                out.push("not BGG".into());
            }
        }
        if let Some(Outcome::Ok(t)) = &self.tilting {
            if !t.self_injectivity.self_injective {
                out.push("not self-injective".into());
            }
        }
        if let Some(Outcome::Ok(k)) = &self.kl {
            if !k.parity.holds() {
                out.push("KL parity fails".into());
            }
        }
        out
    }

    fn semisimple_t(&self) -> bool {
        self.verify.triangular.as_ref().is_some_and(|t| t.semisimple_t)
    }
}
