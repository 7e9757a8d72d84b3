//! Self-injectivity, the Nakayama, highest-weight and socle permutations, tilting objects and
//! dualities from anti-involutions.

use super::{HwError, Pipeline};
use crate::algebra::frobenius_search;
use crate::linalg::{is_zero_vec, CoordBasis, Matrix, Subspace};
use crate::modrep::{hom_space, GradedModule, ModuleMap};
use crate::triangular::CheckItem;
use crate::GradedAlgebra;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LabelShift {
    pub label: usize,
    pub shift: i32,
}

impl std::fmt::Display for LabelShift {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[{}]", self.label, self.shift)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfInjectivityReport {
    pub self_injective: bool,
    /// `Soc P(λ) = L(ν(λ))`, present when self-injective
    pub nakayama: Option<Vec<LabelShift>>,
    /// labels whose projective cover is also injective
    pub projective_injective: Vec<usize>,
    /// why some `P(λ)` is not injective
    pub failures: Vec<String>,
}

impl SelfInjectivityReport {
    pub fn has_tilting_objects(&self) -> bool {
        !self.projective_injective.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingData {
    pub nu: Vec<LabelShift>,
    /// highest weight of `P(λ)`
    pub h: Vec<LabelShift>,
    pub h_inverse: Vec<LabelShift>,
    /// `Soc Δ(λ) = L(λ†)`
    pub dagger: Vec<LabelShift>,
    pub checks: Vec<CheckItem>,
}

impl TiltingData {
    /// `T(λ) = P(μ)[-s]` where `h(μ) = (λ, s)`, returned as `(μ, -s)`.
    pub fn tilting_source(&self, l: usize) -> LabelShift {
        self.h_inverse[l]
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct TiltingWitness {
    pub label: usize,
    pub module: GradedModule,
    pub injection: ModuleMap,
    pub surjection: ModuleMap,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub checks: Vec<CheckItem>,
    /// whether a degree-0 Frobenius certificate was found, which triggers the `D(A) = A` check
    pub frobenius_degree_zero: bool,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Finds a map in `Hom(M, N)` satisfying `pred`: basis maps, then seeded random combinations.
pub fn find_map(alg: &GradedAlgebra, m: &GradedModule, n: &GradedModule, seed: u64, pred: impl Fn(&ModuleMap) -> bool) -> Option<ModuleMap> {
    let hom = hom_space(alg, m, n, 0);
    if let Some(h) = hom.iter().find(|h| pred(h)) {
        return Some(h.clone());
    }
    if hom.len() < 2 {
        return None;
    }
    let field = alg.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let mut f = Matrix::zeros(field, n.dim(), m.dim());
        for h in &hom {
            f.add_scaled(&field.random(&mut rng, 1 << 20), &h.matrix);
        }
        let cand = ModuleMap { matrix: f, shift: 0 };
        if pred(&cand) {
            return Some(cand);
        }
    }
    None
}

impl Pipeline {
    /// The unique simple in the socle of `m`, if the socle is simple.
    fn simple_socle(&self, m: &GradedModule) -> Result<Option<LabelShift>, HwError> {
        let soc = self.socle(m)?;
        let sm = m.submodule(&soc);
        let mult = self.multiplicities(&sm)?;
        let total: i64 = mult.iter().map(|p| p.eval_one()).sum();
        if total != 1 {
            return Ok(None);
        }
        let label = mult.iter().position(|p| !p.is_zero()).unwrap();
        Ok(Some(LabelShift { label, shift: mult[label].min_exp().unwrap() }))
    }

    pub fn self_injectivity_check(&self) -> Result<SelfInjectivityReport, HwError> {
        let n = self.num_labels();
        let mut nu = Vec::new();
        let mut projective_injective = Vec::new();
        let mut failures = Vec::new();
        for l in 0..n {
            let p = self.projective(l)?;
            let name = &self.td().labels()[l];
            match self.simple_socle(p)? {
                None => {
                    let soc = self.socle(p)?;
                    failures.push(format!("Soc P({name}) has dimension {} and is not simple", soc.dim()));
                }
                Some(ls) => {
                    let inj = self.injective(ls.label)?.shift(ls.shift);
                    if self.iso(p, &inj, format!("P({name}) vs I"))?.is_some() {
                        nu.push(ls);
                        projective_injective.push(l);
                    } else {
                        failures.push(format!("P({name}) is not isomorphic to I({})[{}]", self.td().labels()[ls.label], ls.shift));
                    }
                }
            }
        }
        let self_injective = failures.is_empty();
        Ok(SelfInjectivityReport { self_injective, nakayama: self_injective.then_some(nu), projective_injective, failures })
    }

    /// Highest weight of each `P(λ)`: its unique top-degree composition factor.
    pub fn projective_highest_weights(&self) -> Result<Vec<LabelShift>, HwError> {
        let mut out = Vec::new();
        for l in 0..self.num_labels() {
            let mult = self.multiplicities(self.projective(l)?)?;
            let top = mult.iter().filter_map(|p| p.max_exp()).max().unwrap();
            let at_top: Vec<(usize, i64)> = mult.iter().enumerate().map(|(m, p)| (m, p.coeff(top))).filter(|(_, c)| *c != 0).collect();
            if at_top.len() != 1 || at_top[0].1 != 1 {
                return Err(HwError::HighestWeightAmbiguous { label: l, detail: format!("degree {top}: {at_top:?}") });
            }
            out.push(LabelShift { label: at_top[0].0, shift: top });
        }
        Ok(out)
    }

    /// `Soc Δ(λ) = L(λ†)`.
    pub fn socle_permutation(&self) -> Result<Vec<LabelShift>, HwError> {
        (0..self.num_labels())
            .map(|l| {
                self.simple_socle(self.standard(l))?
                    .ok_or_else(|| HwError::NotFiltered(format!("Soc Δ({}) is not simple", self.td().labels()[l])))
            })
            .collect()
    }

    pub fn tilting_data(&self) -> Result<TiltingData, HwError> {
        if !self.td().semisimple_t() {
            return Err(HwError::NotSemisimpleT("tilting theory"));
        }
        let si = self.self_injectivity_check()?;
        let nu = si.nakayama.ok_or(HwError::NotSelfInjective)?;
        let h = self.projective_highest_weights()?;
        let dagger = self.socle_permutation()?;
        let op = self.op();
        let nu_op = op.self_injectivity_check()?.nakayama.ok_or(HwError::NotSelfInjective)?;
        let _ = nu_op;
        let h_op = op.projective_highest_weights()?;
        let n = self.num_labels();
        let names = self.td().labels();
        let mut checks = Vec::new();
        let mut h_inverse = vec![LabelShift { label: usize::MAX, shift: 0 }; n];
        for (mu, hw) in h.iter().enumerate() {
            h_inverse[hw.label] = LabelShift { label: mu, shift: -hw.shift };
        }
        checks.push(CheckItem {
            name: "h is a permutation".into(),
            passed: h_inverse.iter().all(|x| x.label != usize::MAX),
            detail: String::new(),
        });
        for l in 0..n {
            let hl = h[l];
            let d = dagger[hl.label];
            let lhs = LabelShift { label: d.label, shift: d.shift + hl.shift };
            checks.push(CheckItem {
                name: format!("(h({0}))† = ν({0})", names[l]),
                passed: lhs == nu[l],
                detail: format!("{lhs} vs {}", nu[l]),
            });
            let v = nu[l];
            let ho = h_op[v.label];
            let rhs = LabelShift { label: ho.label, shift: ho.shift + v.shift };
            checks.push(CheckItem {
                name: format!("h({0})* = h(ν({0})*)", names[l]),
                passed: hl == rhs,
                detail: format!("{hl} vs {rhs}"),
            });
        }
        Ok(TiltingData { nu, h, h_inverse, dagger, checks })
    }

    /// `T(λ)` with explicit maps `Δ(λ) -> T(λ)` (injective) and `T(λ) -> ∇(λ)` (surjective).
    pub fn verify_tilting(&self, data: &TiltingData) -> Result<Vec<TiltingWitness>, HwError> {
        let alg = self.td().algebra();
        let mut out = Vec::new();
        for l in 0..self.num_labels() {
            let src = data.tilting_source(l);
            let t = self.projective(src.label)?.shift(src.shift);
            let d = self.standard(l);
            let c = self.costandard(l);
            let inj = find_map(alg, d, &t, self.seed(), |f| f.is_injective());
            let sur = find_map(alg, &t, &c, self.seed(), |f| f.is_surjective());
            let (Some(injection), Some(surjection)) = (inj, sur) else {
                return Err(HwError::NotFiltered(format!("no tilting maps found for T({})", self.td().labels()[l])));
            };
            out.push(TiltingWitness { label: l, module: t, injection, surjection });
        }
        Ok(out)
    }

    /// Checks the anti-involution axioms; column `i` of `tau` is `tau(b_i)`.
    pub fn check_anti_involution(&self, tau: &Matrix) -> Result<(), HwError> {
        let td = self.td();
        let alg = td.algebra();
        let n = alg.dim();
        let bad = |s: &str| Err(HwError::NotTriangularInvolution(s.into()));
        if tau.rows() != n || tau.cols() != n {
            return bad("wrong shape");
        }
        if !tau.mul(tau).is_identity() {
            return bad("tau^2 != 1");
        }
        let cols: Vec<Vec<crate::Scalar>> = (0..n).map(|i| tau.col(i)).collect();
        for i in 0..n {
            match alg.homogeneous_degree(&cols[i]) {
                Some(d) if d == -alg.degree(i) => {}
                _ if is_zero_vec(&cols[i]) => return bad("tau is not injective"),
                _ => return bad("tau does not reverse degrees"),
            }
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = tau.mul_vec(&crate::algebra::sparse_to_dense(alg.field(), n, alg.product(i, j)));
                let rhs = alg.mul(&cols[j], &cols[i]);
                if lhs != rhs {
                    return bad(&format!("tau(b_{i} b_{j}) != tau(b_{j}) tau(b_{i})"));
                }
            }
        }
        let image = |vs: &[crate::Vector]| Subspace::from_vectors(alg.field(), n, vs.iter().map(|v| tau.mul_vec(v)));
        let span = |vs: &[crate::Vector]| Subspace::from_vectors(alg.field(), n, vs.iter().cloned());
        let same = |a: &Subspace, b: &Subspace| a.dim() == b.dim() && a.basis().iter().all(|v| b.contains(v));
        if !same(&image(td.minus()), &span(td.plus())) {
            return bad("tau(A^-) != A^+");
        }
        if !same(&image(td.torus()), &span(td.torus())) {
            return bad("tau(T) != T");
        }
        Ok(())
    }

    /// `D(M) = tau-twist of M*`.
    pub fn duality_functor(&self, tau: &Matrix, m: &GradedModule) -> GradedModule {
        m.dual().twist(tau)
    }

    pub fn verify_duality(&self, tau: &Matrix) -> Result<DualityReport, HwError> {
        self.check_anti_involution(tau)?;
        let td = self.td();
        let alg = td.algebra();
        let field = alg.field();
        let names = td.labels();
        let mut checks = Vec::new();
        // tau restricted to T in torus coordinates
        let cb = CoordBasis::new(field, alg.dim(), td.torus().to_vec());
        let t_cols: Vec<crate::Vector> = td.torus().iter().map(|t| cb.coords(&tau.mul_vec(t)).unwrap()).collect();
        let tau_t = Matrix::from_cols(field, &t_cols, td.torus().len());
        for (l, irr) in td.irr().iter().enumerate() {
            let tw = irr.dual().twist(&tau_t);
            let ok = super::iso_on(td.torus_algebra(), &tw, irr, self.seed(), "tau-twist of λ")?.is_some();
            checks.push(CheckItem { name: format!("τ-twist of {0}* = {0}", names[l]), passed: ok, detail: String::new() });
        }
        for l in 0..self.num_labels() {
            let name = &names[l];
            let dd = self.duality_functor(tau, self.standard(l));
            let ok = self.iso(&dd, &self.costandard(l), "D(Δ) vs ∇")?.is_some();
            checks.push(CheckItem { name: format!("D(Δ({name})) = ∇({name})"), passed: ok, detail: String::new() });
            let dl = self.duality_functor(tau, self.simple(l));
            let ok = self.iso(&dl, self.simple(l), "D(L) vs L")?.is_some();
            checks.push(CheckItem { name: format!("D(L({name})) = L({name})"), passed: ok, detail: String::new() });
            let dp = self.duality_functor(tau, self.projective(l)?);
            let ok = self.iso(&dp, &self.injective(l)?, "D(P) vs I")?.is_some();
            checks.push(CheckItem { name: format!("D(P({name})) = I({name})"), passed: ok, detail: String::new() });
        }
        let frob = frobenius_search(alg, 0, 8, self.seed(), &[]);
        if frob.is_some() {
            let reg = GradedModule::regular(alg);
            let ok = self.iso(&self.duality_functor(tau, &reg), &reg, "D(A) vs A")?.is_some();
            checks.push(CheckItem { name: "D(A) = A".into(), passed: ok, detail: String::new() });
        }
        Ok(DualityReport { checks, frobenius_degree_zero: frob.is_some() })
    }
}
