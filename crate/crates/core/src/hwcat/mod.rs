//! Highest weight theory of the graded module category: standard and costandard modules, simples,
//! projectives and injectives, decomposition matrices, reciprocity, tilting and dualities.

mod checks;
mod filtration;
mod tilting;

pub use checks::*;
pub use filtration::*;
pub use tilting::*;

use crate::algebra::{block_partition, ideal_generators, jacobson_radical, lift_idempotents, nilpotency_index, LiftedIdempotent, RingError};
use crate::klres::resolution::ResolutionContext;
use crate::laurent::LaurentPoly;
use crate::linalg::{unit_vec, Matrix, Subspace, Vector};
use crate::modrep::{hom_space, induce_from_borel, largest_submodule_inside, GradedModule};
use crate::triangular::TriangularDecomposition;
use std::collections::BTreeMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HwError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("simple heads {0} and {1} are isomorphic")]
    DuplicateSimple(usize, usize),
    #[error("C_L is singular over Q(t)")]
    SingularCL,
    #[error("{0} needs a semisimple torus")]
    NotSemisimpleT(&'static str),
    #[error("no standard filtration: {0}")]
    NotFiltered(String),
    #[error("isomorphism test inconclusive for {context} (Hom has dimension {hom_dim}); rerun with another seed")]
    UnknownIsoStatus { context: String, hom_dim: usize },
    #[error("highest weight of P({label}) is not unique: {detail}")]
    HighestWeightAmbiguous { label: usize, detail: String },
    #[error("algebra is not self-injective")]
    NotSelfInjective,
    #[error("not a triangular anti-involution: {0}")]
    NotTriangularInvolution(String),
}

/// `L(λ)` with the quotient map `Δ̄(λ) -> L(λ)` (a `dim L x dim Δ̄` matrix).
#[derive(Clone, Debug)]
pub struct Simple {
    pub module: GradedModule,
    pub quotient: Matrix,
}

#[derive(Clone, Debug)]
pub struct RingData {
    pub radical: Subspace,
    /// generators of the radical as a left ideal
    pub left_gens: Vec<Vector>,
    pub right_gens: Vec<Vector>,
    pub nilpotency: usize,
    pub lifted: Vec<LiftedIdempotent>,
    /// one primitive idempotent per label, lifting the matrix unit at the degree-0 basis vector 0 of `L`
    pub idempotents: Vec<Vector>,
}

#[derive(Clone, Debug)]
pub struct Projective {
    pub module: GradedModule,
    /// basis of `A e` as algebra elements
    pub basis: Vec<Vector>,
}

/// Lazily computed and cached stages for one triangular decomposition.
pub struct Pipeline {
    td: TriangularDecomposition,
    seed: u64,
    op: OnceLock<Box<Pipeline>>,
    proper_standards: OnceLock<Vec<GradedModule>>,
    standards: OnceLock<Vec<GradedModule>>,
    simples: OnceLock<Vec<Simple>>,
    ring: OnceLock<Result<RingData, HwError>>,
    projectives: OnceLock<Result<Vec<Projective>, HwError>>,
}

/// Number of blocks of the algebra, from the simple heads.
pub fn block_count(td: &TriangularDecomposition) -> usize {
    let p = Pipeline::new(td.clone(), 0);
    let simples: Vec<GradedModule> = p.simples().iter().map(|s| s.module.clone()).collect();
    block_partition(td.algebra(), &simples).len()
}

impl Pipeline {
    pub fn new(td: TriangularDecomposition, seed: u64) -> Pipeline {
        Pipeline {
            td,
            seed,
            op: OnceLock::new(),
            proper_standards: OnceLock::new(),
            standards: OnceLock::new(),
            simples: OnceLock::new(),
            ring: OnceLock::new(),
            projectives: OnceLock::new(),
        }
    }

    pub fn td(&self) -> &TriangularDecomposition {
        &self.td
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn num_labels(&self) -> usize {
        self.td.num_labels()
    }

    /// Pipeline of the opposite decomposition; label `λ` there stands for `λ*`.
    pub fn op(&self) -> &Pipeline {
        self.op.get_or_init(|| Box::new(Pipeline::new(self.td.opposite(), self.seed)))
    }

    pub fn proper_standards(&self) -> &[GradedModule] {
        self.proper_standards.get_or_init(|| {
            self.td
                .irr()
                .iter()
                .map(|l| induce_from_borel(&self.td, &vec![0; l.dim()], l.actions()))
                .collect()
        })
    }

    pub fn proper_standard(&self, l: usize) -> &GradedModule {
        &self.proper_standards()[l]
    }

    /// `∇̄(λ)`, the dual of the opposite proper standard of `λ*`.
    pub fn proper_costandard(&self, l: usize) -> GradedModule {
        self.op().proper_standard(l).dual()
    }

    /// `Δ(λ)`: equal to `Δ̄(λ)` for semisimple `T`, otherwise induced from the projective cover in `T`.
    pub fn standards(&self) -> &[GradedModule] {
        self.standards.get_or_init(|| {
            if self.td.semisimple_t() {
                return self.proper_standards().to_vec();
            }
            let t = self.td.torus_algebra();
            let jt = jacobson_radical(t, self.td.irr()).expect("torus simples verified complete");
            let lifted = lift_idempotents(t, &jt, self.td.irr()).expect("torus idempotents lift");
            (0..self.num_labels())
                .map(|l| {
                    let e = &lifted.iter().find(|x| x.label == l && x.unit_index == 0).unwrap().elem;
                    let pt = GradedModule::left_ideal(t, e);
                    induce_from_borel(&self.td, &vec![0; pt.dim()], pt.actions())
                })
                .collect()
        })
    }

    pub fn standard(&self, l: usize) -> &GradedModule {
        &self.standards()[l]
    }

    pub fn costandard(&self, l: usize) -> GradedModule {
        self.op().standard(l).dual()
    }

    pub fn simples(&self) -> &[Simple] {
        self.simples.get_or_init(|| {
            let alg = self.td.algebra();
            self.proper_standards()
                .iter()
                .map(|d| {
                    let field = d.field();
                    let neg = Subspace::from_vectors(
                        field,
                        d.dim(),
                        (0..d.dim()).filter(|&i| d.degree(i) < 0).map(|i| unit_vec(field, d.dim(), i)),
                    );
                    let rad = largest_submodule_inside(alg, d, &neg);
                    let cols: Vec<Vector> = (0..d.dim()).map(|i| rad.quotient_coords(&unit_vec(field, d.dim(), i))).collect();
                    let k = d.dim() - rad.dim();
                    Simple { module: d.quotient(&rad), quotient: Matrix::from_cols(field, &cols, k) }
                })
                .collect()
        })
    }

    pub fn simple(&self, l: usize) -> &GradedModule {
        &self.simples()[l].module
    }

    pub fn simple_modules(&self) -> Vec<GradedModule> {
        self.simples().iter().map(|s| s.module.clone()).collect()
    }

    pub fn ring(&self) -> Result<&RingData, HwError> {
        self.ring
            .get_or_init(|| {
                let alg = self.td.algebra();
                let simples = self.simple_modules();
                let radical = jacobson_radical(alg, &simples)?;
                let nilpotency = nilpotency_index(alg, &radical);
                let lifted = lift_idempotents(alg, &radical, &simples)?;
                let idempotents = (0..simples.len())
                    .map(|l| lifted.iter().find(|x| x.label == l && x.unit_index == 0).unwrap().elem.clone())
                    .collect();
                Ok(RingData {
                    left_gens: ideal_generators(alg, &radical, true),
                    right_gens: ideal_generators(alg, &radical, false),
                    radical,
                    nilpotency,
                    lifted,
                    idempotents,
                })
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// `[M : L(μ)[i]]` as the coefficient of `t^i` in entry `μ`.
    pub fn multiplicities(&self, m: &GradedModule) -> Result<Vec<LaurentPoly>, HwError> {
        let ring = self.ring()?;
        Ok(ring
            .idempotents
            .iter()
            .map(|e| {
                let r = m.act(e);
                let mut p = LaurentPoly::zero();
                for d in m.support() {
                    let idx = m.indices_of_degree(d);
                    p.add_term(d, r.submatrix(&idx, &idx).rank() as i64);
                }
                p
            })
            .collect())
    }

    pub fn projectives(&self) -> Result<&[Projective], HwError> {
        self.projectives
            .get_or_init(|| {
                let ring = self.ring()?;
                Ok(ring
                    .idempotents
                    .iter()
                    .map(|e| {
                        let (module, basis) = GradedModule::left_ideal_with_basis(self.td.algebra(), e);
                        Projective { module, basis }
                    })
                    .collect())
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone())
    }

    pub fn projective(&self, l: usize) -> Result<&GradedModule, HwError> {
        Ok(&self.projectives()?[l].module)
    }

    /// `I(λ)`, the dual of the opposite projective cover of `λ*`.
    pub fn injective(&self, l: usize) -> Result<GradedModule, HwError> {
        Ok(self.op().projective(l)?.dual())
    }

    pub fn socle(&self, m: &GradedModule) -> Result<Subspace, HwError> {
        Ok(crate::modrep::module_socle(m, &self.ring()?.left_gens))
    }

    pub fn radical_of(&self, m: &GradedModule) -> Result<Subspace, HwError> {
        Ok(crate::modrep::module_radical(self.td.algebra(), m, &self.ring()?.left_gens))
    }

    /// `sum_s dim Hom(M, N[s]) t^s`.
    pub fn hom_dims(&self, m: &GradedModule, n: &GradedModule) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for s in shift_range(m, n) {
            let k = hom_space(self.td.algebra(), m, n, s).len();
            p.add_term(s, k as i64);
        }
        p
    }

    pub fn resolution_context(&self) -> Result<ResolutionContext<'_>, HwError> {
        let ring = self.ring()?;
        Ok(ResolutionContext::new(self.td.algebra(), ring.left_gens.clone(), ring.idempotents.clone()))
    }

    /// `dim Ext^m(M, N[s])` for `m <= max_m`, keyed by `s`.
    pub fn ext(&self, m: &GradedModule, n: &GradedModule, max_m: usize) -> Result<Vec<BTreeMap<i32, usize>>, HwError> {
        Ok(self.resolution_context()?.ext(m, n, max_m))
    }

    pub(crate) fn iso(&self, m: &GradedModule, n: &GradedModule, context: impl Into<String>) -> Result<Option<crate::modrep::ModuleMap>, HwError> {
        iso_on(self.td.algebra(), m, n, self.seed, context)
    }
}

pub(crate) fn iso_on(
    alg: &crate::GradedAlgebra,
    m: &GradedModule,
    n: &GradedModule,
    seed: u64,
    context: impl Into<String>,
) -> Result<Option<crate::modrep::ModuleMap>, HwError> {
    match crate::modrep::is_isomorphic(alg, m, n, seed) {
        crate::modrep::IsoVerdict::Yes(f) => Ok(Some(f)),
        crate::modrep::IsoVerdict::No(_) => Ok(None),
        crate::modrep::IsoVerdict::Unknown { hom_dim } => Err(HwError::UnknownIsoStatus { context: context.into(), hom_dim }),
    }
}

/// Shifts `s` for which `Hom(M, N[s])` can be nonzero.
pub fn shift_range(m: &GradedModule, n: &GradedModule) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for i in m.support() {
        for j in n.support() {
            out.push(i - j);
        }
    }
    out.sort();
    out.dedup();
    out
}
