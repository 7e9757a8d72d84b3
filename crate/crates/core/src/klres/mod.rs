//! Minimal resolutions, Ext parity, Tate characters of complete intersections.

use serde::{Deserialize, Serialize};

/// `K[U]/<V>`: generator degrees `x` and relation degrees `f`, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CIPresentation {
    pub generators: Vec<i32>,
    pub relations: Vec<i32>,
}

pub mod resolution;

use crate::algebra::GradedAlgebra;
use crate::hwcat::{HwError, Pipeline};
use crate::triangular::Sign;
use resolution::ResolutionContext;
use std::collections::BTreeMap;

impl CIPresentation {
    pub fn new(generators: Vec<i32>, relations: Vec<i32>) -> Result<Self, String> {
        let ci = CIPresentation { generators, relations };
        ci.validate()?;
        Ok(ci)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.generators.len() != self.relations.len() {
            return Err(format!("{} generators but {} relations", self.generators.len(), self.relations.len()));
        }
        if self.generators.iter().chain(&self.relations).any(|&d| d <= 0) {
            return Err("degrees must be positive".into());
        }
        Ok(())
    }
}

/// Betti numbers `(m, i) -> count`, serialized as `{m: {i: count}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedBettiTable(pub BTreeMap<usize, BTreeMap<i32, usize>>);

impl GradedBettiTable {
    pub fn get(&self, m: usize, i: i32) -> usize {
        self.0.get(&m).and_then(|r| r.get(&i)).copied().unwrap_or(0)
    }

    /// Negates every internal degree.
    pub fn flipped(&self) -> GradedBettiTable {
        GradedBettiTable(self.0.iter().map(|(&m, r)| (m, r.iter().map(|(&i, &c)| (-i, c)).collect())).collect())
    }

    pub fn max_step(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }
}

/// Minimal resolution of the trivial module over a connected graded algebra.
pub fn minimal_resolution(alg: &GradedAlgebra, max_step: usize) -> (GradedBettiTable, resolution::Resolution) {
    let ctx = ResolutionContext::connected(alg);
    let res = ctx.resolve(&ctx.trivial_module(), max_step);
    (GradedBettiTable(res.betti()), res)
}

/// Coefficient of `s^m q^i` in `prod_j (1 + s q^{x_j}) * prod_k 1 / (1 - s^2 q^{f_k})`.
pub fn tate_character(ci: &CIPresentation, m: usize, i: i32) -> u64 {
    tate_table(ci, m).get(&(m, i)).copied().unwrap_or(0)
}

/// All coefficients with `s`-degree at most `max_m`, keyed by `(m, i)`.
pub fn tate_table(ci: &CIPresentation, max_m: usize) -> BTreeMap<(usize, i32), u64> {
    let mut cur: BTreeMap<(usize, i32), u64> = [((0, 0), 1)].into();
    for &x in &ci.generators {
        let mut next = cur.clone();
        for (&(m, i), &c) in &cur {
            if m < max_m {
                *next.entry((m + 1, i + x)).or_default() += c;
            }
        }
        cur = next;
    }
    for &f in &ci.relations {
        // multiply by the geometric series in s^2 q^f
        let mut next = BTreeMap::new();
        for (&(m, i), &c) in &cur {
            let mut k = 0;
            while m + 2 * k <= max_m {
                *next.entry((m + 2 * k, i + f * k as i32)).or_default() += c;
                k += 1;
            }
        }
        cur = next;
    }
    cur
}

pub fn tate_betti_table(ci: &CIPresentation, max_m: usize) -> GradedBettiTable {
    let mut t = GradedBettiTable::default();
    for ((m, i), c) in tate_table(ci, max_m) {
        t.0.entry(m).or_default().insert(i, c as usize);
    }
    t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KlVerdict {
    Yes,
    No,
    Indeterminate,
}

/// Parity criterion on the degree lists alone.
pub fn degrees_kl_criterion(ci: &CIPresentation) -> KlVerdict {
    let odd = |d: &i32| d % 2 != 0;
    if ci.generators.iter().all(odd) && ci.relations.iter().all(|d| !odd(d)) {
        return KlVerdict::Yes;
    }
    let f_minus_x = multiset_difference(&ci.relations, &ci.generators);
    let x_minus_f = multiset_difference(&ci.generators, &ci.relations);
    if f_minus_x.iter().any(odd) || x_minus_f.iter().any(|d| !odd(d)) {
        return KlVerdict::No;
    }
    KlVerdict::Indeterminate
}

fn multiset_difference(a: &[i32], b: &[i32]) -> Vec<i32> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for &x in a {
        match rest.iter().position(|&y| y == x) {
            Some(p) => {
                rest.swap_remove(p);
            }
            None => out.push(x),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulReport {
    pub koszul_to_depth: usize,
    pub holds: bool,
    /// first generator `(m, degree)` with `|degree| != m`
    pub witness: Option<(usize, i32)>,
    pub betti: GradedBettiTable,
}

/// Step-`m` generators of the minimal resolution of `K` all sit in degree `m` or `-m`.
pub fn koszul_check_up_to(alg: &GradedAlgebra, max_step: usize) -> KoszulReport {
    let (betti, _) = minimal_resolution(alg, max_step);
    let witness = betti.0.iter().find_map(|(&m, row)| row.keys().find(|i| i.unsigned_abs() as usize != m).map(|&i| (m, i)));
    KoszulReport { koszul_to_depth: max_step, holds: witness.is_none(), witness, betti }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityViolation {
    pub side: Sign,
    pub label: usize,
    pub m: usize,
    pub shift: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlParityReport {
    pub depth: usize,
    /// `Ext^m_{A^+}(K, L(μ)[s])` per label
    pub plus_ext: Vec<Vec<BTreeMap<i32, usize>>>,
    /// `Ext^m_{A^-}(L(μ), K[s])` per label
    pub minus_ext: Vec<Vec<BTreeMap<i32, usize>>>,
    pub violations: Vec<ParityViolation>,
}

impl KlParityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&ParityViolation> {
        self.violations.iter().min_by_key(|v| (v.m, v.label))
    }
}

/// Nonzero `Ext^m` over `A^±` between `K` and `L(μ)[s]` only when `m = s (mod 2)`, up to `max_step`.
pub fn kl_parity_check(p: &Pipeline, max_step: usize) -> Result<KlParityReport, HwError> {
    let td = p.td();
    let plus = td.side_algebra(Sign::Plus);
    let minus = td.side_algebra(Sign::Minus);
    let cp = ResolutionContext::connected(&plus);
    let cm = ResolutionContext::connected(&minus);
    let kp = cp.resolve(&cp.trivial_module(), max_step + 1);
    let mut plus_ext = Vec::new();
    let mut minus_ext = Vec::new();
    let mut violations = Vec::new();
    for l in 0..p.num_labels() {
        let sm = p.simple(l);
        let ep = cp.ext_from(&kp, &sm.restrict(td.plus()), max_step);
        let em = cm.ext(&sm.restrict(td.minus()), &cm.trivial_module(), max_step);
        for (side, ext) in [(Sign::Plus, &ep), (Sign::Minus, &em)] {
            for (m, row) in ext.iter().enumerate() {
                for &s in row.keys() {
                    if (m as i64 - s as i64).rem_euclid(2) != 0 {
                        violations.push(ParityViolation { side: side.clone(), label: l, m, shift: s });
                    }
                }
            }
        }
        plus_ext.push(ep);
        minus_ext.push(em);
    }
    Ok(KlParityReport { depth: max_step, plus_ext, minus_ext, violations })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TateComparison {
    pub depth: usize,
    pub agrees: bool,
    /// bounded agreement reached `2 |x|`, so the Tate character describes every step
    pub certifies_all_steps: bool,
    pub mismatches: Vec<(usize, i32, usize, usize)>,
}

/// Compares the Tate character with the Betti table of the minimal resolution of `K` over `alg`
/// (degrees compared up to a global sign).
pub fn compare_tate(ci: &CIPresentation, alg: &GradedAlgebra, max_step: usize) -> TateComparison {
    let (betti, _) = minimal_resolution(alg, max_step);
    let negative = alg.degrees().iter().any(|&d| d < 0);
    let betti = if negative { betti.flipped() } else { betti };
    let tate = tate_betti_table(ci, max_step);
    let mut keys: Vec<(usize, i32)> = Vec::new();
    for t in [&betti, &tate] {
        for (&m, row) in &t.0 {
            keys.extend(row.keys().map(|&i| (m, i)));
        }
    }
    keys.sort();
    keys.dedup();
    let mismatches: Vec<(usize, i32, usize, usize)> = keys
        .into_iter()
        .filter(|&(m, _)| m <= max_step)
        .filter_map(|(m, i)| {
            let (a, b) = (tate.get(m, i), betti.get(m, i));
            (a != b).then_some((m, i, a, b))
        })
        .collect();
    let agrees = mismatches.is_empty();
    TateComparison { depth: max_step, agrees, certifies_all_steps: agrees && max_step >= 2 * ci.generators.len(), mismatches }
}
