//! Standard filtrations and Brauer reciprocity.

use super::{HwError, Pipeline};
use crate::laurent::LaurentPoly;
use crate::linalg::{unit_vec, zero_vec, Subspace, Vector};
use crate::modrep::{hom_space, submodule_generated, GradedModule};
use serde::Serialize;

/// `M^i / M^{i+1} = Δ(label)[shift]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub label: usize,
    pub shift: i32,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct StandardFiltration {
    /// `chain[0] = M`, `chain[k] = 0`
    pub chain: Vec<Subspace>,
    pub layers: Vec<Layer>,
}

impl StandardFiltration {
    /// Graded multiplicity `(M : Δ(λ))` per label.
    pub fn multiplicities(&self, n: usize) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::zero(); n];
        for l in &self.layers {
            out[l.label].add_term(l.shift, 1);
        }
        out
    }

    /// The subquotient `M^i / M^{i+1}` as a module.
    pub fn layer_module(&self, m: &GradedModule, i: usize) -> GradedModule {
        let upper = m.submodule(&self.chain[i]);
        let lower = Subspace::from_vectors(
            m.field(),
            upper.dim(),
            self.chain[i + 1].basis().iter().map(|v| self.chain[i].coords(v).expect("chain is decreasing")),
        );
        upper.quotient(&lower)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerPair {
    pub lambda: usize,
    pub mu: usize,
    /// `(P(λ) : Δ(μ))`, or `(I(λ) : ∇(μ))` for the dual identity
    pub filtration: LaurentPoly,
    /// `bar [∇̄(μ) : L(λ)]`, or `bar [Δ̄(μ) : L(λ)]`
    pub composition: LaurentPoly,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerReport {
    pub pairs: Vec<BrauerPair>,
    pub dual_pairs: Vec<BrauerPair>,
    /// whether the filtration side came from explicit filtrations or from `Hom(-, ∇̄)`
    pub method: String,
}

impl BrauerReport {
    pub fn holds(&self) -> bool {
        self.pairs.iter().chain(&self.dual_pairs).all(|p| p.holds)
    }
}

impl Pipeline {
    /// Whether `M` is free over `A^-`, via `dim M = dim A^- * dim M / J^- M`.
    pub fn free_over_minus(&self, m: &GradedModule) -> bool {
        let td = self.td();
        let mut jm = Subspace::zero(m.field(), m.dim());
        for a in &td.minus()[1..] {
            let r = m.act(a);
            for c in 0..m.dim() {
                jm.insert(r.col(c));
            }
        }
        m.dim() == td.minus().len() * (m.dim() - jm.dim())
    }

    /// Explicit standard filtration, layers listed from the top quotient down.
    pub fn standard_filtration(&self, m: &GradedModule) -> Result<StandardFiltration, HwError> {
        let td = self.td();
        if !td.semisimple_t() {
            return Err(HwError::NotSemisimpleT("standard filtration"));
        }
        if !self.free_over_minus(m) {
            return Err(HwError::NotFiltered("restriction to the negative Borel is not projective".into()));
        }
        let alg = td.algebra();
        let field = m.field();
        let mut s = Subspace::zero(field, m.dim());
        let mut bottom_up = vec![s.clone()];
        let mut layers_rev = Vec::new();
        while s.dim() < m.dim() {
            let q = m.quotient(&s);
            let comp = s.complement_indices();
            let d = *q.degrees().iter().max().unwrap();
            let idx = q.indices_of_degree(d);
            let qt = q.restrict(td.torus());
            let top = qt.submodule(&Subspace::from_vectors(field, q.dim(), idx.iter().map(|&i| unit_vec(field, q.dim(), i))));
            let mut copies: Vec<(usize, Vec<Vector>)> = Vec::new();
            for (l, irr) in td.irr().iter().enumerate() {
                for h in hom_space(td.torus_algebra(), irr, &top, -d) {
                    let vecs = (0..h.matrix.cols())
                        .map(|c| {
                            let mut v = zero_vec(field, m.dim());
                            for (k, &qi) in idx.iter().enumerate() {
                                let x = h.matrix.get(k, c);
                                if !x.is_zero() {
                                    v[comp[qi]] = x.clone();
                                }
                            }
                            v
                        })
                        .collect();
                    copies.push((l, vecs));
                }
            }
            if copies.is_empty() {
                return Err(HwError::NotFiltered(format!("top degree {d} has no simple T-summand")));
            }
            for (l, vecs) in copies {
                let mut gens: Vec<Vector> = s.basis().to_vec();
                gens.extend(vecs);
                let next = submodule_generated(alg, m, &gens);
                let grow = next.dim() - s.dim();
                let expect = self.proper_standard(l).dim();
                if grow != expect {
                    return Err(HwError::NotFiltered(format!("layer for label {l} at degree {d} has dimension {grow}, expected {expect}")));
                }
                s = next;
                bottom_up.push(s.clone());
                layers_rev.push(Layer { label: l, shift: d, dim: grow });
            }
        }
        bottom_up.reverse();
        layers_rev.reverse();
        Ok(StandardFiltration { chain: bottom_up, layers: layers_rev })
    }

    /// `(M : Δ(λ))` computed as `sum_s dim Hom(M, ∇̄(λ)[s]) t^s`.
    pub fn standard_multiplicities_by_hom(&self, m: &GradedModule) -> Vec<LaurentPoly> {
        (0..self.num_labels()).map(|l| self.hom_dims(m, &self.proper_costandard(l))).collect()
    }

    /// `(P(λ) : Δ(μ)) = bar [∇̄(μ) : L(λ)]` and `(I(λ) : ∇(μ)) = bar [Δ̄(μ) : L(λ)]` for all pairs.
    pub fn brauer_reciprocity_check(&self) -> Result<BrauerReport, HwError> {
        let n = self.num_labels();
        let op = self.op();
        let explicit = self.td().semisimple_t();
        let filtration_side = |p: &Pipeline, l: usize| -> Result<Vec<LaurentPoly>, HwError> {
            let proj = p.projective(l)?;
            if explicit {
                Ok(p.standard_filtration(proj)?.multiplicities(n))
            } else {
                Ok(p.standard_multiplicities_by_hom(proj))
            }
        };
        let costd: Vec<Vec<LaurentPoly>> =
            (0..n).map(|mu| self.multiplicities(&self.proper_costandard(mu))).collect::<Result<_, _>>()?;
        let std: Vec<Vec<LaurentPoly>> = self.proper_standards().iter().map(|d| self.multiplicities(d)).collect::<Result<_, _>>()?;
        let mut pairs = Vec::new();
        let mut dual_pairs = Vec::new();
        for l in 0..n {
            let f = filtration_side(self, l)?;
            let fd = filtration_side(op, l)?;
            for mu in 0..n {
                let comp = costd[mu][l].bar();
                pairs.push(BrauerPair { lambda: l, mu, holds: f[mu] == comp, filtration: f[mu].clone(), composition: comp });
                let comp = std[mu][l].bar();
                dual_pairs.push(BrauerPair { lambda: l, mu, holds: fd[mu] == comp, filtration: fd[mu].clone(), composition: comp });
            }
        }
        let method = if explicit { "explicit filtration" } else { "Hom into proper costandards" };
        Ok(BrauerReport { pairs, dual_pairs, method: method.into() })
    }
}
