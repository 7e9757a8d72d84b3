//! Decomposition matrices, BGG, families, rigidity, semisimplicity and the per-module property checks.

use super::{HwError, Pipeline};
use crate::algebra::{block_partition, center, central_idempotents, GradedAlgebra};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::linalg::{Subspace, Vector};
use crate::modrep::{graded_character, hom_space, submodule_generated, GradedModule};
use crate::triangular::CheckItem;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrices {
    pub c_l: LaurentMatrix,
    pub c_delta: LaurentMatrix,
    pub d_delta: LaurentMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    /// `C_Δ = D_Δ C_L`
    pub product_holds: bool,
    /// `C_Δ C_L^{-1}` is a Laurent matrix equal to `D_Δ`
    pub inverse_recovers_d: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleSummary {
    pub label: String,
    pub dim: usize,
    pub graded_dim: LaurentPoly,
    pub rigid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimplicityReport {
    pub semisimple_t: bool,
    pub standards_simple: bool,
    pub costandards_simple: bool,
    pub radical_zero: bool,
    pub semisimple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BggReport {
    pub character_route: bool,
    /// `None` when `T` is not semisimple
    pub bimodule_route: Option<bool>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub families: Vec<Vec<usize>>,
    pub standard_families: Vec<Vec<usize>>,
    pub equal: bool,
}

fn all_simple(p: &Pipeline, mods: &[GradedModule]) -> Result<bool, HwError> {
    for m in mods {
        let total: i64 = p.multiplicities(m)?.iter().map(|x| x.eval_one()).sum();
        if total != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Pipeline {
    pub fn simple_summaries(&self) -> Vec<SimpleSummary> {
        self.simples()
            .iter()
            .enumerate()
            .map(|(l, s)| SimpleSummary {
                label: self.td().labels()[l].clone(),
                dim: s.module.dim(),
                graded_dim: s.module.graded_dim(),
                rigid: s.module.support().len() == 1,
            })
            .collect()
    }

    /// Builds every `L(λ)` and checks the head bijection: degree-0 part, absolute simplicity,
    /// pairwise distinctness and `L(λ*) = L(λ)*`.
    pub fn verify_bijection(&self) -> Result<Vec<CheckItem>, HwError> {
        let alg = self.td().algebra();
        let t = self.td().torus_algebra();
        let mut items = Vec::new();
        let n = self.num_labels();
        for l in 0..n {
            let lm = self.simple(l);
            let name = &self.td().labels()[l];
            let top = lm.indices_of_degree(0);
            let lt = lm.restrict(self.td().torus());
            let sub = Subspace::from_vectors(lm.field(), lm.dim(), top.iter().map(|&i| crate::linalg::unit_vec(lm.field(), lm.dim(), i)));
            let deg0 = lt.submodule(&sub);
            let ok0 = super::iso_on(t, &deg0, &self.td().irr()[l], self.seed(), "degree-0 part")?.is_some();
            items.push(CheckItem { name: format!("L({name})_0 = {name}"), passed: ok0, detail: String::new() });
            let end = hom_space(alg, lm, lm, 0).len();
            items.push(CheckItem { name: format!("End L({name}) = K"), passed: end == 1, detail: format!("dim {end}") });
            let dual_ok = super::iso_on(self.op().td().algebra(), self.op().simple(l), &lm.dual(), self.seed(), "L(λ*) vs L(λ)*")?.is_some();
            items.push(CheckItem { name: format!("L({name}*) = L({name})*"), passed: dual_ok, detail: String::new() });
        }
        for a in 0..n {
            for b in a + 1..n {
                let (_, v) = crate::modrep::is_isomorphic_up_to_shift(alg, self.simple(a), self.simple(b), self.seed());
                match v {
                    crate::modrep::IsoVerdict::Yes(_) => return Err(HwError::DuplicateSimple(a, b)),
                    crate::modrep::IsoVerdict::No(_) => {}
                    crate::modrep::IsoVerdict::Unknown { hom_dim } => {
                        return Err(HwError::UnknownIsoStatus { context: format!("L({a}) vs L({b})"), hom_dim })
                    }
                }
            }
        }
        items.push(CheckItem { name: "simple heads pairwise distinct".into(), passed: true, detail: format!("{n} simples") });
        Ok(items)
    }

    pub fn decomposition_matrices(&self) -> Result<DecompositionMatrices, HwError> {
        let td = self.td();
        let c_l = LaurentMatrix::new(self.simples().iter().map(|s| graded_character(td, &s.module)).collect());
        let c_delta = LaurentMatrix::new(self.proper_standards().iter().map(|d| graded_character(td, d)).collect());
        let d_delta =
            LaurentMatrix::new(self.proper_standards().iter().map(|d| self.multiplicities(d)).collect::<Result<Vec<_>, _>>()?);
        Ok(DecompositionMatrices { c_l, c_delta, d_delta })
    }

    pub fn verify_relation(&self) -> Result<RelationReport, HwError> {
        let m = self.decomposition_matrices()?;
        let product_holds = m.d_delta.mul(&m.c_l) == m.c_delta;
        let inv = m.c_l.inverse().map_err(|_| HwError::SingularCL)?;
        let rec = m.c_delta.to_rational().mul(&inv).to_laurent();
        Ok(RelationReport { product_holds, inverse_recovers_d: rec.as_ref() == Some(&m.d_delta) })
    }

    /// Each `D_Δ` row has top entry `1` on the diagonal in degree 0 and nothing else in degree `>= 0`.
    pub fn highest_weight_of_standards(&self) -> Result<Vec<CheckItem>, HwError> {
        let m = self.decomposition_matrices()?;
        let n = self.num_labels();
        Ok((0..n)
            .map(|l| {
                let ok = (0..n).all(|mu| {
                    let e = m.d_delta.get(l, mu);
                    if mu == l {
                        e.coeff(0) == 1 && e.max_exp() == Some(0)
                    } else {
                        e.max_exp().map_or(true, |x| x < 0)
                    }
                });
                CheckItem { name: format!("Δ̄({}) has highest weight {}", self.td().labels()[l], self.td().labels()[l]), passed: ok, detail: String::new() }
            })
            .collect())
    }

    /// `Soc ∇̄(λ) = L(λ)`, generated by the degree-0 part.
    pub fn costandard_socles(&self) -> Result<Vec<CheckItem>, HwError> {
        let alg = self.td().algebra();
        let mut out = Vec::new();
        for l in 0..self.num_labels() {
            let nb = self.proper_costandard(l);
            let soc = self.socle(&nb)?;
            let socm = nb.submodule(&soc);
            let iso = self.iso(&socm, self.simple(l), "Soc ∇̄")?.is_some();
            let top: Vec<Vector> =
                nb.indices_of_degree(0).into_iter().map(|i| crate::linalg::unit_vec(nb.field(), nb.dim(), i)).collect();
            let gen = submodule_generated(alg, &nb, &top);
            let gen_ok = gen.dim() == soc.dim() && soc.basis().iter().all(|v| gen.contains(v));
            out.push(CheckItem {
                name: format!("Soc ∇̄({0}) = L({0})", self.td().labels()[l]),
                passed: iso && gen_ok,
                detail: format!("socle dim {}", soc.dim()),
            });
        }
        Ok(out)
    }

    /// `End Δ(λ) = K` and `End ∇(λ) = K` in the graded category.
    pub fn standard_endomorphisms(&self) -> Vec<CheckItem> {
        let alg = self.td().algebra();
        let mut out = Vec::new();
        for l in 0..self.num_labels() {
            let d = self.standard(l);
            let c = self.costandard(l);
            let ed = hom_space(alg, d, d, 0).len();
            let ec = hom_space(alg, &c, &c, 0).len();
            let name = &self.td().labels()[l];
            out.push(CheckItem { name: format!("End Δ({name}) = K"), passed: ed == 1, detail: format!("dim {ed}") });
            out.push(CheckItem { name: format!("End ∇({name}) = K"), passed: ec == 1, detail: format!("dim {ec}") });
        }
        out
    }

    /// `Hom(Δ(λ), ∇̄(μ)[s]) = δ` and `Ext^m(Δ(λ), ∇̄(μ)[s]) = 0` for `1 <= m <= max_m`.
    pub fn standard_costandard_ext(&self, max_m: usize) -> Result<Vec<CheckItem>, HwError> {
        let ctx = self.resolution_context()?;
        let n = self.num_labels();
        let mut out = Vec::new();
        for l in 0..n {
            let res = ctx.resolve(self.standard(l), max_m + 1);
            for mu in 0..n {
                let nb = self.proper_costandard(mu);
                let ext = ctx.ext_from(&res, &nb, max_m);
                let hom: BTreeMap<i32, usize> = ext[0].clone();
                let expect: BTreeMap<i32, usize> = if l == mu { [(0, 1)].into() } else { BTreeMap::new() };
                let hom_direct = self.hom_dims(self.standard(l), &nb);
                let direct: BTreeMap<i32, usize> = hom_direct.terms().map(|(e, c)| (e, c as usize)).collect();
                let (a, b) = (&self.td().labels()[l], &self.td().labels()[mu]);
                out.push(CheckItem {
                    name: format!("Hom(Δ({a}), ∇̄({b}))"),
                    passed: hom == expect && direct == expect,
                    detail: format!("{hom:?}"),
                });
                let higher: Vec<(usize, BTreeMap<i32, usize>)> =
                    ext.iter().enumerate().skip(1).filter(|(_, d)| !d.is_empty()).map(|(m, d)| (m, d.clone())).collect();
                let range = if max_m == 1 { "1".to_string() } else { format!("1..{max_m}") };
                out.push(CheckItem {
                    name: format!("Ext^{range}(Δ({a}), ∇̄({b})) = 0"),
                    passed: higher.is_empty(),
                    detail: format!("{higher:?}"),
                });
            }
        }
        Ok(out)
    }

    /// Compares `χ(Δ̄(λ))` and `χ(∇̄(λ))`.
    pub fn bgg_check(&self) -> BggReport {
        let td = self.td();
        let mut failures = Vec::new();
        for l in 0..self.num_labels() {
            let a = graded_character(td, self.proper_standard(l));
            let b = graded_character(td, &self.proper_costandard(l));
            if a != b {
                failures.push(format!("χ(Δ̄({0})) != χ(∇̄({0}))", td.labels()[l]));
            }
        }
        let character_route = failures.is_empty();
        let bimodule_route = td.semisimple_t().then(|| self.bgg_bimodule_check());
        if let Some(b) = bimodule_route {
            if b != character_route {
                failures.push("bimodule and character routes disagree".into());
            }
        }
        BggReport { character_route, bimodule_route, failures }
    }

    /// `B^-_i = (B^+_{-i})^⊛` as `T`-bimodules, compared through `dim e_μ B e_λ`.
    fn bgg_bimodule_check(&self) -> bool {
        let td = self.td();
        let alg = td.algebra();
        let es = td.torus_idempotents();
        let borel_by_degree = |side: &[Vector]| -> BTreeMap<i32, Vec<Vector>> {
            let mut m: BTreeMap<i32, Vec<Vector>> = BTreeMap::new();
            for a in side {
                let d = alg.homogeneous_degree(a).unwrap_or(0);
                for t in td.torus() {
                    m.entry(d).or_default().push(alg.mul(a, t));
                }
            }
            m
        };
        let bm = borel_by_degree(td.minus());
        let bp = borel_by_degree(td.plus());
        let corner = |vs: &[Vector], left: &Vector, right: &Vector| -> usize {
            Subspace::from_vectors(alg.field(), alg.dim(), vs.iter().map(|v| alg.mul(&alg.mul(left, v), right))).dim()
        };
        let degrees: std::collections::BTreeSet<i32> = bm.keys().copied().chain(bp.keys().map(|d| -d)).collect();
        let empty = Vec::new();
        for i in degrees {
            let vm = bm.get(&i).unwrap_or(&empty);
            let vp = bp.get(&-i).unwrap_or(&empty);
            for em in es {
                for el in es {
                    if corner(vm, em, el) != corner(vp, el, em) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn families(&self) -> Vec<Vec<usize>> {
        block_partition(self.td().algebra(), &self.simple_modules())
    }

    /// Connected components of "both occur in some `Δ̄(η)`".
    pub fn standard_families(&self) -> Result<Vec<Vec<usize>>, HwError> {
        let m = self.decomposition_matrices()?;
        let n = self.num_labels();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for eta in 0..n {
            let occ: Vec<usize> = (0..n).filter(|&mu| !m.d_delta.get(eta, mu).is_zero()).collect();
            for w in occ.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for l in 0..n {
            let r = find(&mut parent, l);
            groups.entry(r).or_default().push(l);
        }
        Ok(groups.into_values().collect())
    }

    pub fn compare_families(&self) -> Result<FamilyReport, HwError> {
        let mut families = self.families();
        let mut standard_families = self.standard_families()?;
        families.sort();
        standard_families.sort();
        let equal = families == standard_families;
        Ok(FamilyReport { families, standard_families, equal })
    }

    pub fn rigid_simples(&self) -> Vec<usize> {
        (0..self.num_labels()).filter(|&l| self.simple(l).support().len() == 1).collect()
    }

    /// `A / <A^-_{<0}, A^+_{>0}>`.
    pub fn rigid_quotient(&self) -> GradedAlgebra {
        let td = self.td();
        let gens: Vec<Vector> = td.minus()[1..].iter().chain(&td.plus()[1..]).cloned().collect();
        let ideal = td.algebra().two_sided_ideal(&gens);
        td.algebra().quotient(&ideal)
    }

    pub fn semisimplicity_check(&self) -> Result<SemisimplicityReport, HwError> {
        let n = self.num_labels();
        let standards_simple = all_simple(self, self.proper_standards())?;
        let costandards: Vec<GradedModule> = (0..n).map(|l| self.proper_costandard(l)).collect();
        let costandards_simple = all_simple(self, &costandards)?;
        let radical_zero = self.ring()?.radical.is_zero();
        let semisimple_t = self.td().semisimple_t();
        Ok(SemisimplicityReport {
            semisimple_t,
            standards_simple,
            costandards_simple,
            radical_zero,
            semisimple: semisimple_t && standards_simple && costandards_simple,
        })
    }

    /// `[Δ̄(λ) : L(μ)]` with gradings forgotten, from the socle series and ungraded Hom dimensions.
    pub fn ungraded_decomposition(&self) -> Result<Vec<Vec<i64>>, HwError> {
        let alg = self.td().algebra();
        let gens = self.ring()?.left_gens.clone();
        let n = self.num_labels();
        let mut out = Vec::new();
        for l in 0..n {
            let mut row = vec![0i64; n];
            let mut cur = self.proper_standard(l).clone();
            while cur.dim() > 0 {
                let soc = crate::modrep::module_socle(&cur, &gens);
                let layer = cur.submodule(&soc);
                for (mu, r) in row.iter_mut().enumerate() {
                    *r += ungraded_hom_dim(alg, self.simple(mu), &layer) as i64;
                }
                cur = cur.quotient(&soc);
            }
            out.push(row);
        }
        Ok(out)
    }
}

/// `dim Hom(M, N)` ignoring all gradings.
pub fn ungraded_hom_dim(alg: &GradedAlgebra, m: &GradedModule, n: &GradedModule) -> usize {
    let field = alg.field();
    let (dm, dn) = (m.dim(), n.dim());
    let total = dm * dn;
    if total == 0 {
        return 0;
    }
    let mut eqs = Subspace::zero(field, total);
    for &g in alg.generators() {
        let (rm, rn) = (m.action(g), n.action(g));
        for r in 0..dn {
            for c in 0..dm {
                // (rho_N(g) F - F rho_M(g))[r][c]; unknown F[k][c] at k * dm + c
                let mut eq = crate::linalg::zero_vec(field, total);
                for k in 0..dn {
                    let x = rn.get(r, k);
                    if !x.is_zero() {
                        eq[k * dm + c].add_assign(x);
                    }
                }
                for k in 0..dm {
                    let x = rm.get(k, c);
                    if !x.is_zero() {
                        eq[r * dm + k] = eq[r * dm + k].sub(x);
                    }
                }
                if !crate::linalg::is_zero_vec(&eq) {
                    eqs.insert(eq);
                }
            }
        }
    }
    total - eqs.dim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockFactorization {
    pub labels: Vec<usize>,
    /// graded dimension of `Z c` for the central idempotent `c`
    pub center: LaurentPoly,
    /// graded `End(Δ̄(λ))` times graded `End(∇̄(λ))`, present for single-simple blocks
    pub product: Option<LaurentPoly>,
    /// `dim λ` of the torus simple, for single-simple blocks
    pub simple_dim: usize,
    /// `Z c` has the graded dimension of the product
    pub factorizes: bool,
    /// `dim Z c = (dim λ)^2`
    pub dim_squared: bool,
}

impl Pipeline {
    /// Graded `dim End(M)`: coefficient of `t^k` counts endomorphisms raising degrees by `k`.
    pub fn graded_end(&self, m: &GradedModule) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for s in super::shift_range(m, m) {
            p.add_term(-s, hom_space(self.td().algebra(), m, m, s).len() as i64);
        }
        p
    }

    /// Per block: `Z c` against `End(Δ̄(λ)) End(∇̄(λ))`, and total dimension `(dim λ)^2`.
    pub fn block_center_factorization(&self) -> Result<Vec<BlockFactorization>, HwError> {
        let alg = self.td().algebra();
        let field = alg.field();
        let z = center(alg);
        let blocks = central_idempotents(alg, &self.simple_modules())?;
        let mut out = Vec::new();
        for b in blocks {
            let zc = Subspace::from_vectors(field, alg.dim(), z.basis().iter().map(|v| alg.mul(v, &b.idempotent)));
            let mut center = LaurentPoly::zero();
            for d in alg.support() {
                let homog = Subspace::from_vectors(field, alg.dim(), alg.indices_of_degree(d).into_iter().map(|i| alg.basis_elem(i)));
                let k = zc.intersect(&homog).dim();
                center.add_term(d, k as i64);
            }
            let graded = center.eval_one() as usize == zc.dim();
            let (product, simple_dim, factorizes, dim_squared) = if let [l] = b.labels[..] {
                let e_minus = self.graded_end(self.proper_standard(l));
                let e_plus = self.graded_end(&self.proper_costandard(l));
                let prod = e_minus.mul(&e_plus);
                let dl = self.td().irr()[l].dim();
                let f = graded && prod == center;
                (Some(prod), dl, f, center.eval_one() as usize == dl * dl)
            } else {
                (None, 0, false, false)
            };
            out.push(BlockFactorization { labels: b.labels, center, product, simple_dim, factorizes, dim_squared });
        }
        Ok(out)
    }
}

/// `Soc(_A A)` and `Soc(A_A)` as subspaces of `A`.
#[derive(Clone, Debug)]
pub struct RegularSocles {
    pub left: Subspace,
    pub right: Subspace,
}

impl Pipeline {
    pub fn regular_socles(&self) -> Result<RegularSocles, HwError> {
        let alg = self.td().algebra();
        let ring = self.ring()?;
        let annihilator = |gens: &[Vector], left: bool| -> Subspace {
            let n = alg.dim();
            let mats: Vec<crate::Matrix> = gens.iter().map(|g| if left { alg.left_matrix(g) } else { alg.right_matrix(g) }).collect();
            let rows: Vec<Vector> = mats.iter().flat_map(|m| m.row_vecs()).collect();
            if rows.is_empty() {
                return Subspace::full(alg.field(), n);
            }
            crate::Matrix::from_rows(alg.field(), &rows, n).kernel()
        };
        Ok(RegularSocles { left: annihilator(&ring.left_gens, true), right: annihilator(&ring.right_gens, false) })
    }
}
