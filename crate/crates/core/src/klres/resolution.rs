//! Minimal graded projective resolutions and the cohomology of the Hom complex.

use crate::algebra::GradedAlgebra;
use crate::linalg::{is_zero_vec, zero_vec, Matrix, Subspace, Vector};
use crate::modrep::{idempotent_image, module_radical, GradedModule};
use std::collections::BTreeMap;

/// Projective indecomposables `A e` together with left generators of the radical.
pub struct ResolutionContext<'a> {
    alg: &'a GradedAlgebra,
    j_gens: Vec<Vector>,
    idempotents: Vec<Vector>,
    projectives: Vec<GradedModule>,
    /// basis of each `A e` as algebra elements, matching the module basis
    proj_basis: Vec<Vec<Vector>>,
    /// coordinates of `e` in that basis
    proj_gen: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: usize,
    pub degree: i32,
}

#[derive(Clone, Debug)]
pub struct ResolutionStep {
    pub generators: Vec<Generator>,
    /// `P_m`, the direct sum of the shifted projectives
    pub module: GradedModule,
    pub offsets: Vec<usize>,
    /// `P_m -> P_{m-1}` (or onto the resolved module for `m = 0`), columns indexed by `P_m`
    pub differential: Matrix,
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub steps: Vec<ResolutionStep>,
    /// the kernel vanished before the step bound
    pub complete: bool,
}

impl<'a> ResolutionContext<'a> {
    pub fn new(alg: &'a GradedAlgebra, j_gens: Vec<Vector>, idempotents: Vec<Vector>) -> Self {
        let mut projectives = Vec::new();
        let mut proj_basis = Vec::new();
        let mut proj_gen = Vec::new();
        for e in &idempotents {
            let (m, basis) = GradedModule::left_ideal_with_basis(alg, e);
            let span = Subspace::from_vectors(alg.field(), alg.dim(), basis.iter().cloned());
            proj_gen.push(span.coords(e).expect("idempotent lies in its left ideal"));
            projectives.push(m);
            proj_basis.push(basis);
        }
        ResolutionContext { alg, j_gens, idempotents, projectives, proj_basis, proj_gen }
    }

    /// Connected graded algebra: `J` is everything outside degree 0 and the only idempotent is 1.
    pub fn connected(alg: &'a GradedAlgebra) -> Self {
        let field = alg.field();
        let j = Subspace::from_vectors(
            field,
            alg.dim(),
            (0..alg.dim()).filter(|&i| alg.degree(i) != 0).map(|i| alg.basis_elem(i)),
        );
        let gens = crate::algebra::ideal_generators(alg, &j, true);
        ResolutionContext::new(alg, gens, vec![alg.unit().clone()])
    }

    /// Every differential of step `m >= 1` lands in the radical of the previous term.
    pub fn is_minimal(&self, res: &Resolution) -> bool {
        res.steps.windows(2).all(|w| {
            let rad = module_radical(self.alg, &w[0].module, &self.j_gens);
            let d = &w[1].differential;
            (0..d.cols()).all(|c| rad.contains(&d.col(c)))
        })
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        self.alg
    }

    pub fn num_labels(&self) -> usize {
        self.idempotents.len()
    }

    /// The trivial module `K` in degree 0 of a connected algebra.
    pub fn trivial_module(&self) -> GradedModule {
        let field = self.alg.field();
        let action = (0..self.alg.dim())
            .map(|i| {
                let mut m = Matrix::zeros(field, 1, 1);
                if self.alg.degree(i) == 0 {
                    m.set(0, 0, self.alg.unit()[i].clone());
                }
                m
            })
            .collect();
        GradedModule::new(field, vec![0], action)
    }

    /// Homogeneous vectors of `M` spanning `M / J M`, tagged with their idempotent label.
    fn top(&self, m: &GradedModule) -> Vec<(usize, Vector)> {
        let mut s = module_radical(self.alg, m, &self.j_gens);
        let mut out = Vec::new();
        for (label, e) in self.idempotents.iter().enumerate() {
            let r = m.act(e);
            let mut cols: Vec<usize> = (0..m.dim()).collect();
            cols.sort_by_key(|&c| (m.degree(c), c));
            for c in cols {
                let v = r.col(c);
                if !is_zero_vec(&v) && s.insert(v.clone()) {
                    out.push((label, v));
                }
            }
        }
        out
    }

    /// Projective cover of `M` on the given generators: the covering module, offsets and the map.
    fn cover(&self, m: &GradedModule, gens: &[(usize, Vector)]) -> (GradedModule, Vec<usize>, Matrix, Vec<Generator>) {
        let field = self.alg.field();
        let mut parts = Vec::new();
        let mut offsets = Vec::new();
        let mut generators = Vec::new();
        let mut total = 0;
        for (label, v) in gens {
            let deg = (0..m.dim()).find(|&i| !v[i].is_zero()).map(|i| m.degree(i)).unwrap();
            let p = self.projectives[*label].shift(deg);
            offsets.push(total);
            total += p.dim();
            parts.push(p);
            generators.push(Generator { label: *label, degree: deg });
        }
        let refs: Vec<&GradedModule> = parts.iter().collect();
        let module = if refs.is_empty() { GradedModule::zero(field, self.alg.dim()) } else { GradedModule::direct_sum(&refs) };
        let mut map = Matrix::zeros(field, m.dim(), total);
        for (g, (label, v)) in gens.iter().enumerate() {
            // b_k v for every basis element, then combine along the basis of A e
            let images: Vec<Vector> = (0..self.alg.dim()).map(|k| m.action(k).mul_vec(v)).collect();
            for (b, a) in self.proj_basis[*label].iter().enumerate() {
                let mut col = zero_vec(field, m.dim());
                for (x, im) in a.iter().zip(&images) {
                    if !x.is_zero() {
                        crate::linalg::axpy(&mut col, x, im);
                    }
                }
                for (r, x) in col.into_iter().enumerate() {
                    if !x.is_zero() {
                        map.set(r, offsets[g] + b, x);
                    }
                }
            }
        }
        (module, offsets, map, generators)
    }

    /// Minimal projective resolution of `m` through step `max_step`.
    pub fn resolve(&self, m: &GradedModule, max_step: usize) -> Resolution {
        let mut steps: Vec<ResolutionStep> = Vec::new();
        let mut target = m.clone();
        // coordinates of `target` inside the previous projective
        let mut embed: Option<Matrix> = None;
        for _ in 0..=max_step {
            if target.dim() == 0 {
                return Resolution { steps, complete: true };
            }
            let gens = self.top(&target);
            let (module, offsets, map, generators) = self.cover(&target, &gens);
            let ker = map.kernel();
            let differential = match &embed {
                None => map,
                Some(e) => e.mul(&map),
            };
            let next = module.submodule(&ker);
            let k_cols = ker.basis().to_vec();
            embed = Some(Matrix::from_cols(self.alg.field(), &k_cols, module.dim()));
            steps.push(ResolutionStep { generators, module, offsets, differential });
            target = next;
        }
        Resolution { steps, complete: target.dim() == 0 }
    }

    /// Graded dimensions of `Ext^m(M, N)` for `m <= max_m`: entry `m` maps the internal shift `s`
    /// to `dim Ext^m(M, N[s])`.
    pub fn ext(&self, m: &GradedModule, n: &GradedModule, max_m: usize) -> Vec<BTreeMap<i32, usize>> {
        let res = self.resolve(m, max_m + 1);
        self.ext_from(&res, n, max_m)
    }

    pub fn ext_from(&self, res: &Resolution, n: &GradedModule, max_m: usize) -> Vec<BTreeMap<i32, usize>> {
        let field = self.alg.field();
        // basis of e N per label; vectors are homogeneous
        let images: Vec<Subspace> = self.idempotents.iter().map(|e| idempotent_image(n, e)).collect();
        let vec_degree = |v: &Vector| -> i32 { (0..n.dim()).find(|&i| !v[i].is_zero()).map(|i| n.degree(i)).unwrap() };
        // cochain basis of step m: (generator, basis vector of e N) with internal shift d_g - deg w
        let cochains = |step: Option<&ResolutionStep>| -> Vec<(usize, usize, i32)> {
            let mut out = Vec::new();
            if let Some(s) = step {
                for (g, gen) in s.generators.iter().enumerate() {
                    for (w, v) in images[gen.label].basis().iter().enumerate() {
                        out.push((g, w, gen.degree - vec_degree(v)));
                    }
                }
            }
            out
        };
        let mut cochain_sets = Vec::new();
        for m in 0..=max_m + 1 {
            cochain_sets.push(cochains(res.steps.get(m)));
        }
        // delta^m : C^m -> C^{m+1}
        let mut deltas: Vec<Matrix> = Vec::new();
        for m in 0..=max_m {
            let src = &cochain_sets[m];
            let dst = &cochain_sets[m + 1];
            let mut d = Matrix::zeros(field, dst.len(), src.len());
            if let (Some(cur), Some(next)) = (res.steps.get(m), res.steps.get(m + 1)) {
                for (g2, gen2) in next.generators.iter().enumerate() {
                    // image of the generator of P_{m+1} in P_m
                    let mut x = zero_vec(field, next.module.dim());
                    let off = next.offsets[g2];
                    for (i, c) in self.proj_gen[gen2.label].iter().enumerate() {
                        x[off + i] = c.clone();
                    }
                    let y = next.differential.mul_vec(&x);
                    for (g, gen) in cur.generators.iter().enumerate() {
                        let off = cur.offsets[g];
                        let basis = &self.proj_basis[gen.label];
                        let mut a = zero_vec(field, self.alg.dim());
                        for (b, elem) in basis.iter().enumerate() {
                            if !y[off + b].is_zero() {
                                crate::linalg::axpy(&mut a, &y[off + b], elem);
                            }
                        }
                        if is_zero_vec(&a) {
                            continue;
                        }
                        let ra = n.act(&a);
                        for (w, v) in images[gen.label].basis().iter().enumerate() {
                            let img = ra.mul_vec(v);
                            let coords = images[gen2.label].coords(&img).expect("image lies in e N");
                            let col = src.iter().position(|&(gg, ww, _)| gg == g && ww == w).unwrap();
                            for (w2, c) in coords.into_iter().enumerate() {
                                if c.is_zero() {
                                    continue;
                                }
                                let row = dst.iter().position(|&(gg, ww, _)| gg == g2 && ww == w2).unwrap();
                                d.set(row, col, c);
                            }
                        }
                    }
                }
            }
            deltas.push(d);
        }
        let rank_at = |d: &Matrix, rows: &[(usize, usize, i32)], cols: &[(usize, usize, i32)], s: i32| -> usize {
            let r: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].2 == s).collect();
            let c: Vec<usize> = (0..cols.len()).filter(|&i| cols[i].2 == s).collect();
            if r.is_empty() || c.is_empty() {
                0
            } else {
                d.submatrix(&r, &c).rank()
            }
        };
        let mut out = Vec::new();
        for m in 0..=max_m {
            let mut dims = BTreeMap::new();
            let shifts: std::collections::BTreeSet<i32> = cochain_sets[m].iter().map(|c| c.2).collect();
            for s in shifts {
                let c = cochain_sets[m].iter().filter(|x| x.2 == s).count();
                let out_rank = rank_at(&deltas[m], &cochain_sets[m + 1], &cochain_sets[m], s);
                let in_rank = if m == 0 { 0 } else { rank_at(&deltas[m - 1], &cochain_sets[m], &cochain_sets[m - 1], s) };
                let dim = c - out_rank - in_rank;
                if dim > 0 {
                    dims.insert(s, dim);
                }
            }
            out.push(dims);
        }
        out
    }
}

impl Resolution {
    /// `(m, degree) -> count`, summed over labels.
    pub fn betti(&self) -> BTreeMap<usize, BTreeMap<i32, usize>> {
        let mut t = BTreeMap::new();
        for (m, s) in self.steps.iter().enumerate() {
            let row: &mut BTreeMap<i32, usize> = t.entry(m).or_default();
            for g in &s.generators {
                *row.entry(g.degree).or_default() += 1;
            }
        }
        t
    }

    /// Consecutive differentials compose to zero and each step is exact at the previous term.
    pub fn is_exact(&self) -> bool {
        for w in self.steps.windows(2) {
            let comp = w[0].differential.mul(&w[1].differential);
            if !comp.is_zero() {
                return false;
            }
            let ker = w[0].differential.kernel().dim();
            if w[1].differential.rank() != ker {
                return false;
            }
        }
        true
    }
}
