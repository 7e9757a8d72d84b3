//! Acceptance criteria 1-7, one PASS/FAIL line each. Runs without the libtest harness so
//! the lines are always printed.

mod common;

use common::{decomposition_matrix, lp, simple_dims};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};
use tricat::hwcat::{HwError, LabelShift, Pipeline};
use tricat::klres::{self, CIPresentation, KlVerdict};
use tricat::laurent::LaurentMatrix;
use tricat::linalg::{unit_vec, Subspace};
use tricat::report::{self, build_report, find_frobenius, RunOptions, Scope};
use tricat::triangular::{verify_triangular, Sign};
use tricat::zoo::{self, Bundle};
use tricat::{Field, Matrix};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn pipeline(b: &Bundle) -> Pipeline {
    Pipeline::new(b.decomposition().expect("triangular data verifies"), 1)
}

fn hw<T>(r: Result<T, HwError>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn triangular_passes(b: &Bundle) -> Check {
    let t = b.triangular.as_ref().ok_or("no triangular data")?;
    let rep = verify_triangular(&b.algebra, &t.minus, &t.torus, &t.plus, &t.irr);
    ensure!(rep.passed(), "{}: triangular decomposition fails: {:?}", b.name, rep.failures());
    Ok(())
}

fn truncated_square_two() -> Check {
    let b = zoo::truncated_square(2, Field::Rational).unwrap();
    triangular_passes(&b)?;
    let p = pipeline(&b);
    let m = hw(p.decomposition_matrices(), "matrices")?;
    let sigma = lp(&[(0, 1), (-1, 1)]);
    ensure!(m.c_l == LaurentMatrix::new(vec![vec![lp(&[(0, 1)])]]), "C_L = {:?}", m.c_l);
    ensure!(m.d_delta == LaurentMatrix::new(vec![vec![sigma.clone()]]), "D_Δ = {:?}", m.d_delta);
    ensure!(m.c_delta == m.d_delta, "C_Δ = {:?}", m.c_delta);
    ensure!(decomposition_matrix(&b, p.proper_standards()) == m.d_delta, "D_Δ differs from the composition-series oracle");
    let si = hw(p.self_injectivity_check(), "self-injectivity")?;
    ensure!(si.self_injective, "not self-injective: {:?}", si.failures);
    ensure!(si.nakayama == Some(vec![LabelShift { label: 0, shift: 0 }]), "ν = {:?}", si.nakayama);
    let t = hw(p.tilting_data(), "tilting data")?;
    ensure!(t.passed(), "tilting checks fail");
    ensure!(t.tilting_source(0).label == 0, "T(λ) = P({:?})", t.tilting_source(0));
    ensure!(hw(p.projective(0), "P")?.dim() == b.algebra.dim(), "P(λ) is not A");
    ensure!(hw(p.verify_tilting(&t), "tilting witnesses")?.len() == 1, "no tilting witness");
    Ok(())
}

fn pathological() -> Check {
    let b = zoo::pathological4dim(Field::Rational);
    triangular_passes(&b)?;
    let (v, td) = report::verify_section(&b);
    ensure!(v.ambidextrous == Some(false), "ambidexterity = {:?}", v.ambidextrous);
    let td = td.unwrap();
    // y ⊗ 1 ⊗ x: plus[1] = y (index 2), minus[1] = x (index 1)
    let w = v.ambidexterity_witness.clone().unwrap_or_default();
    ensure!(w.len() == 1, "witness {w:?}");
    let (i, j, k, _) = &w[0];
    ensure!(td.plus()[*i] == unit_vec(Field::Rational, 4, 2) && *j == 0 && td.minus()[*k] == unit_vec(Field::Rational, 4, 1), "witness {w:?}");
    let p = pipeline(&b);
    let s = hw(p.regular_socles(), "socles")?;
    let span = |ix: &[usize]| Subspace::from_vectors(Field::Rational, 4, ix.iter().map(|&i| unit_vec(Field::Rational, 4, i)));
    ensure!(s.left == span(&[1, 3]), "Soc(_A A) = {:?}", s.left.basis());
    ensure!(s.right == span(&[2, 3]), "Soc(A_A) = {:?}", s.right.basis());
    let si = hw(p.self_injectivity_check(), "self-injectivity")?;
    ensure!(!si.self_injective && !si.has_tilting_objects(), "reported self-injective");
    ensure!(matches!(p.tilting_data(), Err(HwError::NotSelfInjective)), "tilting set not empty");
    let r = build_report(&b, Scope::Tilting, &RunOptions::default());
    let summary = r.tilting.as_ref().and_then(|t| t.ok()).map(|t| t.summary.clone()).unwrap_or_default();
    ensure!(summary.contains("no tilting objects"), "summary `{summary}`");
    Ok(())
}

fn restricted_sl2(pr: u32) -> Check {
    let b = zoo::restricted_sl2(pr).unwrap();
    triangular_passes(&b)?;
    let p = pipeline(&b);
    let n = pr as usize;
    let m = hw(p.decomposition_matrices(), "matrices")?;
    let oracle = decomposition_matrix(&b, p.proper_standards());
    ensure!(m.d_delta == oracle, "p = {pr}: D_Δ differs from the oracle");
    let dims = simple_dims(&b, p.proper_standards());
    let lib_dims: Vec<usize> = p.simples().iter().map(|s| s.module.dim()).collect();
    ensure!(dims == lib_dims, "simple dims {lib_dims:?}, oracle {dims:?}");
    if pr == 3 {
        ensure!(dims == [1, 2, 3], "oracle simple dims {dims:?}");
    }
    let rel = hw(p.verify_relation(), "relation")?;
    ensure!(rel.product_holds && rel.inverse_recovers_d, "{rel:?}");
    let bgg = p.bgg_check();
    ensure!(bgg.character_route && bgg.bimodule_route == Some(true), "BGG: {:?}", bgg.failures);
    let f = find_frobenius(&b, 0).ok_or("no Frobenius certificate")?;
    ensure!(f.degree == 0 && f.symmetric, "Frobenius certificate at {} (symmetric {})", f.degree, f.symmetric);
    let td = p.td();
    let top = td.plus_degrees().into_iter().max().unwrap();
    ensure!(top == pr as i32 - 1, "top degree of A+ is {top}");
    let si = hw(p.self_injectivity_check(), "self-injectivity")?;
    let trivial: Vec<LabelShift> = (0..n).map(|l| LabelShift { label: l, shift: 0 }).collect();
    ensure!(si.nakayama.as_ref() == Some(&trivial), "ν = {:?}", si.nakayama);
    let t = hw(p.tilting_data(), "tilting data")?;
    ensure!(t.passed(), "tilting identities fail");
    let expect: Vec<LabelShift> =
        (0..n).map(|l| LabelShift { label: (2 * n - l - 2) % n, shift: (n - 1) as i32 - l as i32 }).collect();
    ensure!(t.h == expect, "h = {:?}", t.h);
    ensure!(hw(p.verify_tilting(&t), "tilting witnesses")?.len() == n, "missing tilting witnesses");
    let tau = b.anti_involution.as_ref().ok_or("no τ")?;
    let d = hw(p.verify_duality(tau), "duality")?;
    ensure!(d.passed() && d.frobenius_degree_zero, "duality: {:?}", d.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
    Ok(())
}

fn rrca_bundles() -> Vec<(Bundle, bool)> {
    let mut out = Vec::new();
    for l in [2usize, 3] {
        let f = Field::cyclotomic(l as u32);
        out.push((zoo::rrca_cyclic(l, &vec![f.zero(); l - 1]).unwrap(), false));
        out.push((zoo::generic_rrca(l).unwrap(), true));
    }
    out
}

fn rrca() -> Check {
    for (b, generic) in rrca_bundles() {
        let name = &b.name;
        triangular_passes(&b)?;
        let td = b.decomposition().unwrap();
        ensure!(td.ambidexterity_check().is_ok(), "{name}: not ambidextrous");
        let l = td.num_labels() as i32;
        let top = td.plus_degrees().into_iter().max().unwrap();
        ensure!(top == l - 1, "{name}: top degree {top}");
        let p = Pipeline::new(td, 1);
        let bgg = p.bgg_check();
        ensure!(bgg.character_route && bgg.bimodule_route != Some(false), "{name}: BGG {:?}", bgg.failures);
        ensure!(hw(p.brauer_reciprocity_check(), "brauer")?.holds(), "{name}: Brauer reciprocity fails");
        if generic {
            let blocks = hw(p.block_center_factorization(), "blocks")?;
            ensure!(blocks.len() == l as usize, "{name}: {} blocks", blocks.len());
            for f in &blocks {
                ensure!(f.labels.len() == 1 && f.factorizes && f.dim_squared, "{name}: block {:?}: {f:?}", f.labels);
            }
        }
    }
    Ok(())
}

fn kl_suite() -> Check {
    let ts2 = zoo::truncated_square(2, Field::Rational).unwrap();
    let ts3 = zoo::truncated_square(3, Field::Rational).unwrap();
    let r2 = hw(klres::kl_parity_check(&pipeline(&ts2), 6), "ts2 parity")?;
    ensure!(r2.holds(), "truncated square 2 violates parity: {:?}", r2.first_violation());
    let r3 = hw(klres::kl_parity_check(&pipeline(&ts3), 6), "ts3 parity")?;
    let v = r3.first_violation().ok_or("truncated square 3 shows no parity violation")?;
    ensure!((v.m as i32 - v.shift) % 2 != 0, "witness {v:?} is not a parity violation");
    for b in [&ts2, &ts3] {
        let td = b.decomposition().unwrap();
        for (sign, ci) in [(Sign::Minus, &b.ci_minus), (Sign::Plus, &b.ci_plus)] {
            let ci = ci.as_ref().ok_or("missing presentation")?;
            let c = klres::compare_tate(ci, &td.side_algebra(sign), 6);
            ensure!(c.agrees, "{} {sign:?}: Tate mismatches {:?}", b.name, c.mismatches);
        }
    }
    let pat = |x: &[i32], f: &[i32]| klres::degrees_kl_criterion(&CIPresentation::new(x.to_vec(), f.to_vec()).unwrap());
    ensure!(pat(&[1], &[2]) == KlVerdict::Yes, "(1),(2)");
    ensure!(pat(&[1], &[3]) == KlVerdict::No, "(1),(3)");
    ensure!(pat(&[1, 3], &[1, 2]) == KlVerdict::Indeterminate, "(1,3),(1,2)");
    Ok(())
}

fn zoo_bundles() -> Vec<Bundle> {
    let q = Field::Rational;
    let mut out = vec![
        zoo::truncated_square(2, q).unwrap(),
        zoo::truncated_square(3, q).unwrap(),
        zoo::pathological4dim(q),
        zoo::coinvariant_skew(2).unwrap(),
        zoo::coinvariant_skew(3).unwrap(),
        zoo::restricted_sl2(3).unwrap(),
        zoo::dual_numbers_torus(q),
        zoo::semisimple_torus(),
    ];
    out.extend(rrca_bundles().into_iter().map(|(b, _)| b));
    out
}

fn property_suites() -> Check {
    for b in zoo_bundles() {
        let name = &b.name;
        let p = pipeline(&b);
        let failed = |items: Vec<tricat::triangular::CheckItem>| -> Vec<String> {
            items.into_iter().filter(|c| !c.passed).map(|c| format!("{} ({})", c.name, c.detail)).collect()
        };
        // (a)
        let f = failed(hw(p.standard_costandard_ext(1), "ext")?);
        ensure!(f.is_empty(), "{name} (a): {f:?}");
        // (b)
        let f = failed(hw(p.highest_weight_of_standards(), "highest weights")?);
        ensure!(f.is_empty(), "{name} (b): {f:?}");
        // (c)
        let f = failed(hw(p.costandard_socles(), "socles")?);
        ensure!(f.is_empty(), "{name} (c): {f:?}");
        // (d)
        let rel = hw(p.verify_relation(), "relation")?;
        ensure!(rel.product_holds && rel.inverse_recovers_d, "{name} (d): {rel:?}");
        // (e)
        let br = hw(p.brauer_reciprocity_check(), "brauer")?;
        ensure!(br.holds(), "{name} (e): {:?}", br.pairs.iter().chain(&br.dual_pairs).filter(|x| !x.holds).collect::<Vec<_>>());
        // (f)
        if let Some(tau) = &b.anti_involution {
            if find_frobenius(&b, 0).is_some_and(|f| f.degree == 0) {
                let d = hw(p.verify_duality(tau), "duality")?;
                let bad: Vec<String> = d.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
                ensure!(bad.is_empty() && d.frobenius_degree_zero, "{name} (f): {bad:?}");
            }
        }
        // (g)
        let s = hw(p.semisimplicity_check(), "semisimplicity")?;
        ensure!(s.semisimple == s.radical_zero, "{name} (g): {s:?}");
        // (h)
        let d = hw(p.decomposition_matrices(), "matrices")?.d_delta;
        let u = hw(p.ungraded_decomposition(), "ungraded")?;
        ensure!(d.eval_one() == u, "{name} (h): {:?} vs {u:?}", d.eval_one());
    }
    Ok(())
}

fn random_matrix(f: Field, rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let rows: Vec<Vec<tricat::Scalar>> = (0..n).map(|_| (0..n).map(|_| f.random(rng, 5)).collect()).collect();
    Matrix::from_rows(f, &rows, n)
}

fn infrastructure() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in [Field::Rational, Field::prime(7), Field::cyclotomic(3), Field::cyclotomic(5)] {
        for _ in 0..40 {
            let (a, b, c) = (f.random(&mut rng, 9), f.random(&mut rng, 9), f.random(&mut rng, 9));
            ensure!(a.add(&b) == b.add(&a) && a.mul(&b) == b.mul(&a), "{f:?}: commutativity");
            ensure!(a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c)), "{f:?}: distributivity");
            ensure!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), "{f:?}: associativity");
            if !a.is_zero() {
                ensure!(a.mul(&a.inv().unwrap()).is_one(), "{f:?}: inverse of {a}");
            }
        }
        for _ in 0..10 {
            let n = rng.gen_range(1..5);
            let (a, b) = (random_matrix(f, &mut rng, n), random_matrix(f, &mut rng, n));
            ensure!(a.mul(&b).transpose() == b.transpose().mul(&a.transpose()), "{f:?}: (AB)^T");
            let k = a.kernel();
            ensure!(k.dim() + a.rank() == n, "{f:?}: rank-nullity");
            ensure!(k.basis().iter().all(|v| a.mul_vec(v).iter().all(|x| x.is_zero())), "{f:?}: kernel");
            if let Some(inv) = a.inverse() {
                ensure!(a.mul(&inv).is_identity(), "{f:?}: inverse");
            }
        }
    }
    for b in zoo_bundles() {
        let r1 = build_report(&b, Scope::Full, &RunOptions { seed: 3, max_step: 4, jobs: 1 }).to_json();
        let r2 = build_report(&b, Scope::Full, &RunOptions { seed: 3, max_step: 4, jobs: 3 }).to_json();
        ensure!(r1 == r2, "{}: reports differ between runs", b.name);
        let td = b.decomposition().unwrap();
        ensure!(report::pbw_round_trip(&td), "{}: PBW round trip fails", b.name);
    }
    Ok(())
}

fn run(n: &str, budget: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panic: {}", msg.unwrap_or_default()))
    });
    let took = start.elapsed();
    let r = r.and_then(|()| if took <= budget { Ok(()) } else { Err(format!("over the {budget:?} budget")) });
    match &r {
        Ok(()) => println!("criterion {n}: PASS ({took:.2?})"),
        Err(e) => println!("criterion {n}: FAIL ({took:.2?}): {e}"),
    }
    r.is_ok()
}

fn main() {
    let s = Duration::from_secs;
    let results = [
        run("1", s(1), truncated_square_two),
        run("2", s(1), pathological),
        run("3", s(60), || restricted_sl2(3)),
        run("3 (p = 5)", s(600), || restricted_sl2(5)),
        run("4", s(60), rrca),
        run("5", s(30), kl_suite),
        run("6", s(300), property_suites),
        run("7", s(300), infrastructure),
    ];
    if !results.iter().all(|&r| r) {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
