//! Named verification suites: each one runs a battery of exact checks and
//! reports one pass/fail line per check. Randomized checks are seeded, so
//! reports are reproducible; checks run in parallel and are pure.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cocycle::{self, build_jm, build_sigma, cocycle_axioms, grid_axioms, twist_axioms, twist_axioms_generic};
use crate::double::{canonical_r, one_dim_reps, skew_primitives, Dbl};
use crate::en::{En, EnBasis};
use crate::error::{Error, Result};
use crate::hopf::{self, axioms, DualHopf, Elem, HopfAlgebra, Tensor2};
use crate::jsonio;
use crate::matrix::Matrix;
use crate::modrep::{
    baer_sum, build_va, coaction_from_double, extract_ext_class, scale_extension,
    squared_braiding, yd_check, ExtClass, ModuleRep,
};
use crate::rmatrix::{build_ra, build_ra_first_display, is_triangular, qt_check, rmatrix_canonical, rmatrix_from_a, RMatrix};
use crate::scalar::{FieldSpec, Scalar};
use crate::surj::{apply_action, ext_slice, pushforward_r, rho_of, subcat_contains, ActionSpec, SurjMap};
use crate::symplectic::{
    enumerate_lagrangians, is_lagrangian, is_symplectic, lagrangian_tests, omega, psp_equal,
    sp_decompose, word_to_matrix, LagSubspace, SpToken,
};

/// Seed and sample-count knobs for the randomized checks.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, samples: 100 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub field: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u128,
}

pub const SUITE_NAMES: [&str; 11] = [
    "hopf-axioms",
    "double-axioms",
    "rmatrix",
    "cocycle",
    "twist",
    "ext-space",
    "braiding",
    "grassmannian",
    "rho-images",
    "sp-decompose",
    "all",
];

/// Maximum rank each suite supports (exact kernel solves and exhaustive
/// batteries grow fast with n).
fn max_n(suite: &str) -> usize {
    match suite {
        "hopf-axioms" | "cocycle" | "rho-images" | "sp-decompose" => 3,
        _ => 2,
    }
}

fn needs_finite_field(suite: &str) -> bool {
    suite == "grassmannian"
}

fn rng_for(cfg: &SuiteConfig, check: &str) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    check.hash(&mut h);
    ChaCha8Rng::seed_from_u64(cfg.seed ^ h.finish())
}

fn random_scalar(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Rational => field.from_i64(rng.gen_range(-3..=3)),
        FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, field: FieldSpec) -> Matrix {
    Matrix::from_fn(rows, cols, field, |_, _| random_scalar(rng, field))
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n, field);
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> Matrix {
    let mut m = Matrix::zero(n, n, field);
    for i in 0..n {
        for j in i..n {
            let v = random_scalar(rng, field);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

fn random_class(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> ExtClass {
    ExtClass::new(n, field, (0..2 * n).map(|_| random_scalar(rng, field)).collect())
}

fn random_rank_n_map(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> SurjMap {
    loop {
        let a = random_matrix(rng, n, n, field);
        let b = random_matrix(rng, n, n, field);
        if let Ok(f) = SurjMap::new(n, a, b) {
            return f;
        }
    }
}

fn random_sp_word(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec, len: usize) -> Vec<SpToken> {
    let mut word = Vec::new();
    for _ in 0..len {
        match rng.gen_range(0..3) {
            0 => word.push(SpToken::Diag(random_invertible(rng, n, field))),
            1 => word.push(SpToken::Lower(random_symmetric(rng, n, field))),
            _ => word.push(SpToken::Upper(random_symmetric(rng, n, field))),
        }
    }
    word
}

/// A Lagrangian subspace sampled by pushing the coordinate Lagrangian
/// (I | 0) through a random symplectic word.
fn random_lagrangian(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> LagSubspace {
    let base = Matrix::identity(n, field).hcat(&Matrix::zero(n, n, field));
    let word = random_sp_word(rng, n, field, 4);
    let m = word_to_matrix(n, field, &word);
    LagSubspace::new(&base.mul(&m.transpose())).expect("symplectic image of a Lagrangian")
}

type Check = (String, Box<dyn Fn(&mut ChaCha8Rng) -> (bool, String) + Send + Sync>);

fn check(name: &str, f: impl Fn(&mut ChaCha8Rng) -> (bool, String) + Send + Sync + 'static) -> Check {
    (name.to_string(), Box::new(f))
}

fn ok() -> (bool, String) {
    (true, String::new())
}

fn fail(detail: String) -> (bool, String) {
    (false, detail)
}

fn from_bool(pass: bool, detail: impl FnOnce() -> String) -> (bool, String) {
    if pass {
        ok()
    } else {
        fail(detail())
    }
}

fn run_checks(suite: &str, n: usize, field: FieldSpec, cfg: &SuiteConfig, checks: Vec<Check>) -> SuiteReport {
    let start = Instant::now();
    let cfg = *cfg;
    let mut results: Vec<CheckResult> = checks
        .into_par_iter()
        .map(|(name, f)| {
            let mut rng = rng_for(&cfg, &name);
            let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| f(&mut rng)));
            let (pass, detail) = match outcome {
                Ok(r) => r,
                Err(e) => {
                    let msg = e
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_else(|| "panic".into());
                    (false, format!("panicked: {msg}"))
                }
            };
            CheckResult { name, pass, detail }
        })
        .collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    SuiteReport {
        suite: suite.to_string(),
        n,
        field: field.to_string(),
        passed: results.iter().all(|c| c.pass),
        checks: results,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

pub fn run_suite(name: &str, n: usize, field: FieldSpec, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if !SUITE_NAMES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    if n == 0 || n > 3 {
        return Err(Error::Unsupported(format!("n must be 1, 2 or 3 (got {n})")));
    }
    if name == "all" {
        let start = Instant::now();
        let mut checks = Vec::new();
        let mut passed = true;
        for suite in SUITE_NAMES.iter().filter(|s| **s != "all") {
            if n > max_n(suite) {
                continue;
            }
            if needs_finite_field(suite) && field == FieldSpec::Rational {
                continue;
            }
            let sub = run_suite(suite, n, field, cfg)?;
            passed &= sub.passed;
            for mut c in sub.checks {
                c.name = format!("{suite}/{}", c.name);
                checks.push(c);
            }
        }
        return Ok(SuiteReport {
            suite: "all".into(),
            n,
            field: field.to_string(),
            passed,
            checks,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    if n > max_n(name) {
        return Err(Error::Unsupported(format!("suite `{name}` is capped at n <= {}", max_n(name))));
    }
    if needs_finite_field(name) && field == FieldSpec::Rational {
        return Err(Error::Unsupported(format!("suite `{name}` needs a finite field")));
    }
    let checks = match name {
        "hopf-axioms" => hopf_axioms_checks(n, field, cfg),
        "double-axioms" => double_axioms_checks(n, field, cfg),
        "rmatrix" => rmatrix_checks(n, field),
        "cocycle" => cocycle_checks(n, field),
        "twist" => twist_checks(n, field),
        "ext-space" => ext_space_checks(n, field, cfg),
        "braiding" => braiding_checks(n, field, cfg),
        "grassmannian" => grassmannian_checks(n, field, cfg)?,
        "rho-images" => rho_images_checks(n, field, cfg),
        "sp-decompose" => sp_decompose_checks(n, field, cfg),
        _ => unreachable!(),
    };
    Ok(run_checks(name, n, field, cfg, checks))
}

fn hopf_axioms_checks(n: usize, field: FieldSpec, _cfg: &SuiteConfig) -> Vec<Check> {
    vec![
        check("dim-index-roundtrip", move |_| {
            let en = En::new(n, field).unwrap();
            let pass = en.dim() == 1 << (n + 1)
                && (0..en.dim()).all(|i| en.index_of(en.basis_at(i)) == i);
            from_bool(pass, || "index map is not a bijection".into())
        }),
        check("associativity", move |_| {
            let en = En::new(n, field).unwrap();
            for a in en.basis_iter() {
                for b in en.basis_iter() {
                    for c in en.basis_iter() {
                        let (ea, eb, ec) = (
                            Elem::basis(a, field.one()),
                            Elem::basis(b, field.one()),
                            Elem::basis(c, field.one()),
                        );
                        if !axioms::associative_on(&en, &ea, &eb, &ec) {
                            return fail(format!("failed on basis triple {a:?}, {b:?}, {c:?}"));
                        }
                    }
                }
            }
            ok()
        }),
        check("coassociativity", move |_| {
            let en = En::new(n, field).unwrap();
            let bad = en.basis_iter().find(|b| !axioms::coassociative_on(&en, *b));
            from_bool(bad.is_none(), || format!("failed on {bad:?}"))
        }),
        check("counit", move |_| {
            let en = En::new(n, field).unwrap();
            let bad = en.basis_iter().find(|b| !axioms::counit_axiom_on(&en, *b));
            from_bool(bad.is_none(), || format!("failed on {bad:?}"))
        }),
        check("antipode", move |_| {
            let en = En::new(n, field).unwrap();
            let bad = en.basis_iter().find(|b| !axioms::antipode_axiom_on(&en, *b));
            from_bool(bad.is_none(), || format!("failed on {bad:?}"))
        }),
        check("comul-multiplicative", move |_| {
            let en = En::new(n, field).unwrap();
            for a in en.basis_iter() {
                for b in en.basis_iter() {
                    if !axioms::comul_multiplicative_on(&en, a, b) {
                        return fail(format!("failed on pair {a:?}, {b:?}"));
                    }
                }
            }
            ok()
        }),
        check("automorphism-compat", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..10 {
                let t = random_invertible(rng, n, field);
                let f = en.hopf_automorphism(&t).unwrap();
                for b in en.basis_iter() {
                    let eb = Elem::basis(b, field.one());
                    if en.counit(&f.apply(&eb)) != en.counit(&eb)
                        || f.apply(&en.antipode(&eb)) != en.antipode(&f.apply(&eb))
                        || f.apply_tensor(&en.coproduct(&eb)) != en.coproduct(&f.apply(&eb))
                    {
                        return fail(format!(
                            "automorphism broke a structure map; T = {}",
                            jsonio::matrix_to_json(&t)
                        ));
                    }
                }
            }
            ok()
        }),
    ]
}

fn double_axioms_checks(n: usize, field: FieldSpec, cfg: &SuiteConfig) -> Vec<Check> {
    let samples = cfg.samples;
    vec![
        check("dim-index-roundtrip", move |_| {
            let dbl = Dbl::new(n, field).unwrap();
            let pass = dbl.dim() == 1 << (2 * n + 2)
                && (0..dbl.dim()).all(|i| dbl.index_of(dbl.basis_at(i)) == i);
            from_bool(pass, || "index map is not a bijection".into())
        }),
        check("associativity", move |rng| {
            let dbl = Dbl::new(n, field).unwrap();
            if n == 1 {
                for ia in 0..dbl.dim() {
                    for ib in 0..dbl.dim() {
                        for ic in 0..dbl.dim() {
                            let (a, b, c) = (dbl.basis_at(ia), dbl.basis_at(ib), dbl.basis_at(ic));
                            let (ea, eb, ec) = (
                                Elem::basis(a, field.one()),
                                Elem::basis(b, field.one()),
                                Elem::basis(c, field.one()),
                            );
                            if !axioms::associative_on(&dbl, &ea, &eb, &ec) {
                                return fail(format!("failed on {a:?}, {b:?}, {c:?}"));
                            }
                        }
                    }
                }
            } else {
                let gens = dbl.generators();
                for a in &gens {
                    for b in &gens {
                        for c in &gens {
                            if !axioms::associative_on(&dbl, a, b, c) {
                                return fail("failed on a generator triple".into());
                            }
                        }
                    }
                }
                for _ in 0..samples * 100 {
                    let pick = |rng: &mut ChaCha8Rng| dbl.basis_at(rng.gen_range(0..dbl.dim()));
                    let (a, b, c) = (pick(rng), pick(rng), pick(rng));
                    let (ea, eb, ec) = (
                        Elem::basis(a, field.one()),
                        Elem::basis(b, field.one()),
                        Elem::basis(c, field.one()),
                    );
                    if !axioms::associative_on(&dbl, &ea, &eb, &ec) {
                        return fail(format!("failed on {a:?}, {b:?}, {c:?}"));
                    }
                }
            }
            ok()
        }),
        check("bialgebra", move |rng| {
            let dbl = Dbl::new(n, field).unwrap();
            if n == 1 {
                for ia in 0..dbl.dim() {
                    for ib in 0..dbl.dim() {
                        let (a, b) = (dbl.basis_at(ia), dbl.basis_at(ib));
                        if !axioms::comul_multiplicative_on(&dbl, a, b) {
                            return fail(format!("failed on {a:?}, {b:?}"));
                        }
                    }
                }
            } else {
                for _ in 0..samples * 20 {
                    let pick = |rng: &mut ChaCha8Rng| dbl.basis_at(rng.gen_range(0..dbl.dim()));
                    let (a, b) = (pick(rng), pick(rng));
                    if !axioms::comul_multiplicative_on(&dbl, a, b) {
                        return fail(format!("failed on {a:?}, {b:?}"));
                    }
                }
            }
            ok()
        }),
        check("coassociativity-counit", move |_| {
            let dbl = Dbl::new(n, field).unwrap();
            for b in dbl.basis_iter() {
                if !axioms::coassociative_on(&dbl, b) || !axioms::counit_axiom_on(&dbl, b) {
                    return fail(format!("failed on {b:?}"));
                }
            }
            ok()
        }),
        check("antipode", move |_| {
            let dbl = Dbl::new(n, field).unwrap();
            let bad = dbl.basis_iter().find(|b| !axioms::antipode_axiom_on(&dbl, *b));
            from_bool(bad.is_none(), || format!("failed on {bad:?}"))
        }),
        check("dual-basis-change", move |_| {
            // the images of the dual basis multiply and comultiply like the
            // cop-dual of E(n)
            let dbl = Dbl::new(n, field).unwrap();
            let en = dbl.en();
            let dual = DualHopf { inner: &en, cop: true };
            for u in 0..en.dim() {
                let bu = en.basis_at(u);
                let img_u = crate::double::dual_to_double(&dbl, bu.c, bu.xs);
                for v in 0..en.dim() {
                    let bv = en.basis_at(v);
                    let lhs = dbl.mul(&img_u, &crate::double::dual_to_double(&dbl, bv.c, bv.xs));
                    let mut rhs = Elem::zero();
                    for (w, c) in dual.mul_bb(u, v).terms {
                        let bw = en.basis_at(w);
                        for (m, cm) in crate::double::dual_to_double(&dbl, bw.c, bw.xs).terms {
                            rhs.add_term(m, &c * &cm);
                        }
                    }
                    if lhs != rhs {
                        return fail(format!("product mismatch at dual pair ({u}, {v})"));
                    }
                }
                let lhs = dbl.coproduct(&img_u);
                let mut rhs = Tensor2::zero();
                for ((a, b), c) in dual.comul_b(u).terms {
                    let ba = en.basis_at(a);
                    let bb = en.basis_at(b);
                    let ea = crate::double::dual_to_double(&dbl, ba.c, ba.xs);
                    let eb = crate::double::dual_to_double(&dbl, bb.c, bb.xs);
                    for (k, cv) in Tensor2::pure(&ea, &eb).terms {
                        rhs.add_term(k, &cv * &c);
                    }
                }
                if lhs != rhs {
                    return fail(format!("coproduct mismatch at dual index {u}"));
                }
            }
            ok()
        }),
        check("one-dim-reps", move |_| {
            let dbl = Dbl::new(n, field).unwrap();
            let chars = one_dim_reps(&dbl);
            let pass = chars.len() == 2
                && chars[0].is_trivial()
                && chars[1].c == field.from_i64(-1)
                && chars[1].big_c == field.from_i64(-1);
            from_bool(pass, || format!("found {} characters", chars.len()))
        }),
    ]
}

fn rmatrix_checks(n: usize, field: FieldSpec) -> Vec<Check> {
    let mut checks = vec![
        check("qt-family-and-triangularity", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..20 {
                let a = random_matrix(rng, n, n, field);
                let r = rmatrix_from_a(&en, &a);
                match qt_check(&r) {
                    Ok(rep) if rep.all_pass() => {}
                    other => {
                        return fail(format!(
                            "qt axioms failed for A = {}: {other:?}",
                            jsonio::matrix_to_json(&a)
                        ))
                    }
                }
                if is_triangular(&r) != a.is_symmetric() {
                    return fail(format!(
                        "triangularity criterion failed for A = {}",
                        jsonio::matrix_to_json(&a)
                    ));
                }
                // symmetrized copy is always triangular
                let sym = a.add(&a.transpose());
                if !is_triangular(&rmatrix_from_a(&en, &sym)) {
                    return fail(format!(
                        "symmetric parameter not triangular: {}",
                        jsonio::matrix_to_json(&sym)
                    ));
                }
            }
            ok()
        }),
        check("two-displays-agree", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..20 {
                let a = random_matrix(rng, n, n, field);
                if build_ra(&en, &a) != build_ra_first_display(&en, &a) {
                    return fail(format!("displays differ at A = {}", jsonio::matrix_to_json(&a)));
                }
            }
            ok()
        }),
        check("r0-base-point", move |_| {
            let en = En::new(n, field).unwrap();
            let r0 = rmatrix_from_a(&en, &Matrix::zero(n, n, field));
            let pass = qt_check(&r0).map(|r| r.all_pass()).unwrap_or(false) && is_triangular(&r0);
            from_bool(pass, || "R_0 failed".into())
        }),
        check("trivial-tensor-fails", move |_| {
            let en = En::new(n, field).unwrap();
            let r = RMatrix::En { n, field, tensor: hopf::tensor_unit2(&en) };
            let rep = qt_check(&r).unwrap();
            from_bool(!rep.intertwines, || "1 (x) 1 should not intertwine".into())
        }),
    ];
    if n == 1 {
        checks.push(check("canonical-r-qt", move |_| {
            let dbl = Dbl::new(1, field).unwrap();
            let r = rmatrix_canonical(&dbl);
            match qt_check(&r) {
                Ok(rep) if rep.all_pass() => ok(),
                other => fail(format!("canonical R failed: {other:?}")),
            }
        }));
    }
    checks
}

fn cocycle_checks(n: usize, field: FieldSpec) -> Vec<Check> {
    let mut checks = vec![
        check("build-and-generator-values", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..5 {
                let m = random_symmetric(rng, n, field);
                let s = match build_sigma(&en, &m) {
                    Ok(s) => s,
                    Err(e) => return fail(format!("construction failed: {e}")),
                };
                let cb = EnBasis::grouplike();
                if s.value_bb(&en, cb, cb) != &field.one() {
                    return fail("sigma(c (x) c) != 1".into());
                }
                for k in 0..n {
                    for l in 0..n {
                        for i in 0..2u8 {
                            for j in 0..2u8 {
                                let u = EnBasis { c: i, xs: 1 << k };
                                let v = EnBasis { c: j, xs: 1 << l };
                                let expect = &field.sign(j as u32) * m.get(k, l);
                                if s.value_bb(&en, u, v) != &expect {
                                    return fail(format!("sigma(c^{i} x_{k} (x) c^{j} x_{l}) wrong"));
                                }
                            }
                        }
                    }
                }
                if !cocycle_axioms(&en, &s).all_pass() {
                    return fail("axioms failed after construction".into());
                }
            }
            ok()
        }),
        check("sigma-zero-trivial", move |_| {
            let en = En::new(n, field).unwrap();
            let s = build_sigma(&en, &Matrix::zero(n, n, field)).unwrap();
            for u in en.basis_iter() {
                for v in en.basis_iter() {
                    if s.value_bb(&en, u, v) != &(&en.counit_b(u) * &en.counit_b(v)) {
                        return fail(format!("sigma_0 differs from eps (x) eps at {u:?}, {v:?}"));
                    }
                }
            }
            ok()
        }),
        check("mutation-fails", move |rng| {
            let en = En::new(n, field).unwrap();
            let m = random_symmetric(rng, n, field);
            let s = build_sigma(&en, &m).unwrap();
            let mut bad = s.grid().to_vec();
            let d = en.dim();
            let cc = en.index_of(EnBasis::grouplike());
            bad[cc * d + cc] += field.one();
            from_bool(!grid_axioms(&en, &bad).all_pass(), || {
                "perturbed grid still passes".into()
            })
        }),
        check("convolution-group", move |rng| {
            let en = En::new(n, field).unwrap();
            let s1 = build_sigma(&en, &random_symmetric(rng, n, field)).unwrap();
            let s2 = build_sigma(&en, &random_symmetric(rng, n, field)).unwrap();
            let prod = cocycle::convolution_product(&en, s1.grid(), s2.grid());
            from_bool(grid_axioms(&en, &prod).all_pass(), || {
                "convolution of cocycles fails the axioms".into()
            })
        }),
    ];
    if n == 1 {
        checks.push(check("dual-twist", move |rng| {
            // sigma read in E(1)* (x) E(1)* is an invariant twist there
            let en = En::new(1, field).unwrap();
            let s = build_sigma(&en, &random_symmetric(rng, 1, field)).unwrap();
            let dual = DualHopf { inner: &en, cop: false };
            let mut j: Tensor2<usize> = Tensor2::zero();
            for iu in 0..en.dim() {
                for iv in 0..en.dim() {
                    j.add_term((iu, iv), s.value_bb(&en, en.basis_at(iu), en.basis_at(iv)).clone());
                }
            }
            let all: Vec<Elem<usize>> = (0..en.dim()).map(|i| Elem::basis(i, field.one())).collect();
            let rep = twist_axioms_generic(&dual, &j, &all);
            from_bool(rep.all_pass(), || format!("dual twist axioms: {rep:?}"))
        }));
    }
    checks
}

fn twist_checks(n: usize, field: FieldSpec) -> Vec<Check> {
    vec![
        check("j-zero-is-unit", move |_| {
            let en = En::new(n, field).unwrap();
            let j = build_jm(&en, &Matrix::zero(n, n, field)).unwrap();
            from_bool(j.tensor == hopf::tensor_unit2(&en), || "J_0 != 1 (x) 1".into())
        }),
        check("leading-term", move |rng| {
            let en = En::new(n, field).unwrap();
            let m = random_symmetric(rng, n, field);
            let j = build_jm(&en, &m).unwrap();
            for a in 0..n {
                for b in 0..n {
                    let key = (EnBasis::x(a as u32 + 1), EnBasis { c: 1, xs: 1 << b });
                    let got = j.tensor.terms.get(&key).cloned().unwrap_or_else(|| field.zero());
                    if &got != m.get(a, b) {
                        return fail(format!("coefficient of x_{a} (x) c x_{b} wrong"));
                    }
                }
            }
            ok()
        }),
        check("axioms-and-mutation", move |rng| {
            let en = En::new(n, field).unwrap();
            let m = random_symmetric(rng, n, field);
            let j = build_jm(&en, &m).unwrap();
            if !twist_axioms(&en, &j).all_pass() {
                return fail("twist axioms failed".into());
            }
            let mut tampered = j.clone();
            tampered.tensor.add_term(
                (EnBasis::x(1), EnBasis { c: 0, xs: 1 << (n - 1) }),
                field.from_i64(3),
            );
            from_bool(!twist_axioms(&en, &tampered).all_pass(), || {
                "tampered twist still passes".into()
            })
        }),
        check("r-invariance", move |rng| {
            let en = En::new(n, field).unwrap();
            let r0 = build_ra(&en, &Matrix::zero(n, n, field));
            for _ in 0..5 {
                let s = build_sigma(&en, &random_symmetric(rng, n, field)).unwrap();
                if !cocycle::r_invariance_check(&en, &s, &r0) {
                    return fail("sigma_M not R_0-invariant".into());
                }
            }
            let s0 = build_sigma(&en, &Matrix::zero(n, n, field)).unwrap();
            for _ in 0..5 {
                let ra = build_ra(&en, &random_matrix(rng, n, n, field));
                if !cocycle::r_invariance_check(&en, &s0, &ra) {
                    return fail("sigma_0 not R_A-invariant".into());
                }
            }
            ok()
        }),
    ]
}

fn ext_space_checks(n: usize, field: FieldSpec, cfg: &SuiteConfig) -> Vec<Check> {
    let samples = cfg.samples;
    vec![
        check("roundtrip", move |rng| {
            for _ in 0..samples {
                let a = random_class(rng, n, field);
                if extract_ext_class(&build_va(&a)).unwrap() != a {
                    return fail("extract is not inverse to build".into());
                }
            }
            ok()
        }),
        check("split-is-zero", move |_| {
            let got = extract_ext_class(&build_va(&ExtClass::zero(n, field))).unwrap();
            from_bool(got == ExtClass::zero(n, field), || "split class nonzero".into())
        }),
        check("baer-sum-is-addition", move |rng| {
            for _ in 0..samples / 2 {
                let a = random_class(rng, n, field);
                let b = random_class(rng, n, field);
                let sum = baer_sum(&build_va(&a), &build_va(&b)).unwrap();
                if sum != a.add(&b) {
                    return fail("Baer sum differs from vector addition".into());
                }
            }
            ok()
        }),
        check("scalar-action", move |rng| {
            for _ in 0..10 {
                let a = random_class(rng, n, field);
                let lambda = loop {
                    let s = random_scalar(rng, field);
                    if !s.is_zero() {
                        break s;
                    }
                };
                let moved = scale_extension(&build_va(&a), &lambda).unwrap();
                if extract_ext_class(&moved).unwrap() != a.scale(&lambda) {
                    return fail("lambda-rescaling of i does not scale the class".into());
                }
            }
            ok()
        }),
        check("skew-primitive-dimension", move |_| {
            let dbl = Dbl::new(n, field).unwrap();
            let chars = one_dim_reps(&dbl);
            let basis = skew_primitives(&dbl, &chars[0], &chars[1]);
            from_bool(basis.len() == 2 * n + 1, || {
                format!("dim P_(eps,chi) = {}, expected {}", basis.len(), 2 * n + 1)
            })
        }),
        check("basis-change-invariance", move |rng| {
            let a = random_class(rng, n, field);
            let v = build_va(&a);
            let mut s = Matrix::identity(2, field);
            s.set(0, 1, field.from_i64(7));
            let si = s.inverse().unwrap();
            for (k, m) in v.big_x.iter().chain(&v.x).enumerate() {
                let conj = si.mul(&m.mul(&s));
                if conj.get(0, 1) != &a.coords[k] {
                    return fail("tuple moved under v2 -> v2 + lambda v1".into());
                }
            }
            ok()
        }),
    ]
}

fn braiding_checks(n: usize, field: FieldSpec, cfg: &SuiteConfig) -> Vec<Check> {
    let samples = cfg.samples;
    let mut checks = vec![
        check("va-coaction-formula", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..10 {
                let a = random_class(rng, n, field);
                let co = coaction_from_double(&build_va(&a));
                for (k, comp) in co.comps.iter().enumerate() {
                    let b = en.basis_at(k);
                    let expect_10 = if b.c == 0 && b.xs == 0 { field.one() } else { field.zero() };
                    let expect_12 = if b.c == 0 && b.xs.count_ones() == 1 {
                        a.coords[b.xs.trailing_zeros() as usize].clone()
                    } else {
                        field.zero()
                    };
                    let expect_22 = if b.c == 1 && b.xs == 0 { field.one() } else { field.zero() };
                    if comp.get(0, 0) != &expect_10
                        || comp.get(0, 1) != &expect_12
                        || comp.get(1, 1) != &expect_22
                        || !comp.get(1, 0).is_zero()
                    {
                        return fail(format!("coaction leg {b:?} has the wrong shape"));
                    }
                }
            }
            ok()
        }),
        check("character-coactions", move |_| {
            let en = En::new(n, field).unwrap();
            let dbl = Dbl::new(n, field).unwrap();
            let chars = one_dim_reps(&dbl);
            let chi_co = coaction_from_double(&chars[1].to_module());
            let eps_co = coaction_from_double(&chars[0].to_module());
            for (k, (cc, ce)) in chi_co.comps.iter().zip(&eps_co.comps).enumerate() {
                let b = en.basis_at(k);
                let chi_expect = if b.c == 1 && b.xs == 0 { field.one() } else { field.zero() };
                let eps_expect = if b.c == 0 && b.xs == 0 { field.one() } else { field.zero() };
                if cc.get(0, 0) != &chi_expect || ce.get(0, 0) != &eps_expect {
                    return fail("character coaction wrong".into());
                }
            }
            ok()
        }),
        check("yd-compatibility", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..samples.min(30) {
                let v = build_va(&random_class(rng, n, field));
                if !yd_check(&en, &v, &coaction_from_double(&v)) {
                    return fail("V_a is not Yetter-Drinfeld compatible".into());
                }
            }
            ok()
        }),
        check("squared-braiding", move |rng| {
            for _ in 0..20 {
                let a = random_class(rng, n, field);
                let b = random_class(rng, n, field);
                let sq = squared_braiding(&build_va(&a), &build_va(&b));
                let mut expect = Matrix::identity(4, field);
                expect.set(0, 3, omega(&b.coords, &a.coords));
                if sq != expect {
                    return fail("squared braiding differs from I + omega(b, a) E".into());
                }
            }
            ok()
        }),
        check("chi-centralizing", move |rng| {
            let dbl = Dbl::new(n, field).unwrap();
            let chi = one_dim_reps(&dbl)[1].to_module();
            for _ in 0..20 {
                let v = build_va(&random_class(rng, n, field));
                let square = crate::modrep::braiding(&v, &chi).mul(&crate::modrep::braiding(&chi, &v));
                if square != Matrix::identity(2, field) {
                    return fail("V_a does not centralize chi".into());
                }
            }
            ok()
        }),
        check("eps-identity", move |_| {
            let eps = ModuleRep::epsilon(n, field);
            from_bool(
                crate::modrep::braiding(&eps, &eps) == Matrix::identity(1, field),
                || "braiding of the unit is not the identity".into(),
            )
        }),
    ];
    if n == 1 {
        checks.push(check("flip-after-r-crosscheck", move |rng| {
            let dbl = Dbl::new(1, field).unwrap();
            let r = canonical_r(&dbl);
            for _ in 0..10 {
                let v = build_va(&random_class(rng, 1, field));
                let w = build_va(&random_class(rng, 1, field));
                let mut r_action = Matrix::zero(4, 4, field);
                for ((r1, r2), c) in &r.terms {
                    r_action = r_action.add(&v.act_double_basis(*r1).kron(&w.act_double_basis(*r2)).scale(c));
                }
                let mut flip = Matrix::zero(4, 4, field);
                for a_i in 0..2 {
                    for b_i in 0..2 {
                        flip.set(b_i * 2 + a_i, a_i * 2 + b_i, field.one());
                    }
                }
                if crate::modrep::braiding(&v, &w) != flip.mul(&r_action) {
                    return fail("braiding differs from flip after R".into());
                }
            }
            ok()
        }));
    }
    checks
}

fn grassmannian_checks(n: usize, field: FieldSpec, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let q = match field {
        FieldSpec::PrimeField(q) => q,
        FieldSpec::Rational => return Err(Error::Unsupported("grassmannian needs gf:q".into())),
    };
    if q > 7 {
        return Err(Error::Unsupported("grassmannian is capped at q <= 7".into()));
    }
    let samples = cfg.samples;
    let mut checks = vec![
        check("count-vs-product-formula", move |_| {
            let ls = enumerate_lagrangians(n, q).unwrap();
            let product: usize = (1..=n).map(|i| (q.pow(i as u32) + 1) as usize).product();
            from_bool(ls.len() == product, || {
                format!("enumerated {} subspaces, product formula gives {product}", ls.len())
            })
        }),
        check("lagrangian-tests-agree", move |rng| {
            for _ in 0..samples * 10 {
                let m = random_matrix(rng, n, 2 * n, field);
                let (pairwise, sym) = lagrangian_tests(&m);
                if pairwise != sym {
                    return fail(format!(
                        "isotropy tests disagree on {}",
                        jsonio::matrix_to_json(&m)
                    ));
                }
            }
            ok()
        }),
        check("ext-slice-roundtrip", move |rng| {
            let ls = enumerate_lagrangians(n, q).unwrap();
            let targets: Vec<&LagSubspace> = if ls.len() <= 10 {
                ls.iter().collect()
            } else {
                (0..10).map(|_| &ls[rng.gen_range(0..ls.len())]).collect()
            };
            for l in targets {
                let f = SurjMap::from_rows(l.rref()).unwrap();
                match ext_slice(&f) {
                    Ok(got) if &got == l => {}
                    other => {
                        return fail(format!(
                            "slice of {} came back wrong: {other:?}",
                            jsonio::matrix_to_json(l.rref())
                        ))
                    }
                }
            }
            ok()
        }),
        check("subcat-membership", move |rng| {
            for _ in 0..10 {
                let f = random_rank_n_map(rng, n, field);
                if !subcat_contains(&f, &ModuleRep::epsilon(n, field)) {
                    return fail("trivial module not contained".into());
                }
                let rows = f.rows();
                for i in 0..n {
                    let v = build_va(&ExtClass::new(n, field, rows.row(i)));
                    if !subcat_contains(&f, &v) {
                        return fail("V_{r_i(M)} not contained in its own subcategory".into());
                    }
                }
            }
            ok()
        }),
        check("same-space-same-subcategory", move |rng| {
            for _ in 0..10 {
                let f = random_rank_n_map(rng, n, field);
                let t = random_invertible(rng, n, field);
                let g = SurjMap::from_rows(&t.mul(&f.rows())).unwrap();
                let h = random_rank_n_map(rng, n, field);
                let classes: Vec<ExtClass> =
                    (0..20).map(|_| random_class(rng, n, field)).collect();
                let agree = |f1: &SurjMap, f2: &SurjMap| {
                    classes.iter().all(|a| {
                        let v = build_va(a);
                        subcat_contains(f1, &v) == subcat_contains(f2, &v)
                    })
                };
                if !agree(&f, &g) {
                    return fail("row-equivalent maps disagreed on membership".into());
                }
                if f.rows().row_space_eq(&h.rows()) != agree(&f, &h) {
                    // a sampled predicate can only prove disagreement
                    if f.rows().row_space_eq(&h.rows()) {
                        return fail("equal row spaces but predicates disagree".into());
                    }
                }
            }
            ok()
        }),
    ];
    if n <= 2 && (q <= 5 || n == 1) {
        checks.push(check("count-vs-brute-force", move |_| {
            use std::collections::BTreeSet;
            let cols = 2 * n;
            let total = (q as usize).pow(cols as u32);
            let dec = |mut v: usize| -> Vec<Scalar> {
                (0..cols)
                    .map(|_| {
                        let s = field.from_i64((v % q as usize) as i64);
                        v /= q as usize;
                        s
                    })
                    .collect()
            };
            let mut set = BTreeSet::new();
            if n == 1 {
                for i in 1..total {
                    let m = Matrix::from_rows(field, &[dec(i)]);
                    if m.rank() == 1 && is_lagrangian(&m) {
                        set.insert(crate::matrix::row_space_canonical(&m));
                    }
                }
            } else {
                for i in 1..total {
                    for j in 1..total {
                        let m = Matrix::from_rows(field, &[dec(i), dec(j)]);
                        if m.rank() == 2 && is_lagrangian(&m) {
                            set.insert(crate::matrix::row_space_canonical(&m));
                        }
                    }
                }
            }
            let fast: BTreeSet<Matrix> = enumerate_lagrangians(n, q)
                .unwrap()
                .into_iter()
                .map(|l| l.rref().clone())
                .collect();
            from_bool(fast == set, || "cell enumeration differs from brute force".into())
        }));
    }
    checks.push(check("equivariance", move |rng| {
        let en = En::new(n, field).unwrap();
        let ls = enumerate_lagrangians(n, q).unwrap();
        let actions = vec![
            ActionSpec::Auto(random_invertible(rng, n, field)),
            ActionSpec::Cocycle(random_symmetric(rng, n, field)),
            ActionSpec::Twist(random_symmetric(rng, n, field)),
        ];
        let targets: Vec<&LagSubspace> = if ls.len() <= 6 {
            ls.iter().collect()
        } else {
            (0..6).map(|_| &ls[rng.gen_range(0..ls.len())]).collect()
        };
        for action in &actions {
            let p = rho_of(&en, action).unwrap();
            for l in &targets {
                let by_matrix = l.transform(&p.mat).unwrap();
                // pointwise transport of each spanning row
                let mut rows = Vec::new();
                for i in 0..n {
                    let moved = apply_action(
                        &en,
                        action,
                        &build_va(&ExtClass::new(n, field, l.rref().row(i))),
                    )
                    .unwrap();
                    rows.push(extract_ext_class(&moved).unwrap().coords);
                }
                let pointwise = LagSubspace::new(&Matrix::from_rows(field, &rows)).unwrap();
                if pointwise != by_matrix {
                    return fail("pointwise and matrix transport disagree".into());
                }
                let f = SurjMap::from_rows(by_matrix.rref()).unwrap();
                if ext_slice(&f).unwrap() != by_matrix {
                    return fail("transported slice does not roundtrip".into());
                }
            }
        }
        ok()
    }));
    Ok(checks)
}

fn rho_images_checks(n: usize, field: FieldSpec, cfg: &SuiteConfig) -> Vec<Check> {
    let _ = cfg;
    vec![
        check("cocycle-block", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..10 {
                let m = random_symmetric(rng, n, field);
                // rho_of certifies the [[I, 0], [M + M^t, I]] block internally
                if let Err(e) = rho_of(&en, &ActionSpec::Cocycle(m.clone())) {
                    return fail(format!("M = {}: {e}", jsonio::matrix_to_json(&m)));
                }
            }
            ok()
        }),
        check("twist-block", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..10 {
                let m = random_symmetric(rng, n, field);
                if let Err(e) = rho_of(&en, &ActionSpec::Twist(m.clone())) {
                    return fail(format!("M = {}: {e}", jsonio::matrix_to_json(&m)));
                }
            }
            ok()
        }),
        check("auto-block-diagonal", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..10 {
                let t = random_invertible(rng, n, field);
                let p = match rho_of(&en, &ActionSpec::Auto(t.clone())) {
                    Ok(p) => p,
                    Err(e) => return fail(format!("T = {}: {e}", jsonio::matrix_to_json(&t))),
                };
                if !is_symplectic(&p.mat) {
                    return fail("automorphism image is not symplectic".into());
                }
                for i in 0..n {
                    for j in 0..n {
                        if !p.mat.get(i, n + j).is_zero() || !p.mat.get(n + i, j).is_zero() {
                            return fail("automorphism image has off-diagonal blocks".into());
                        }
                    }
                }
            }
            ok()
        }),
        check("auto-functorial", move |rng| {
            let en = En::new(n, field).unwrap();
            for _ in 0..5 {
                let t1 = random_invertible(rng, n, field);
                let t2 = random_invertible(rng, n, field);
                let p1 = rho_of(&en, &ActionSpec::Auto(t1.clone())).unwrap();
                let p2 = rho_of(&en, &ActionSpec::Auto(t2.clone())).unwrap();
                let p12 = rho_of(&en, &ActionSpec::Auto(t1.mul(&t2))).unwrap();
                if !psp_equal(&p1.mat.mul(&p2.mat), &p12.mat) {
                    return fail("composition is not the matrix product in PSp".into());
                }
            }
            ok()
        }),
        check("auto-identity", move |_| {
            let en = En::new(n, field).unwrap();
            let p = rho_of(&en, &ActionSpec::Auto(Matrix::identity(n, field))).unwrap();
            let q = rho_of(&en, &ActionSpec::Auto(Matrix::identity(n, field).neg())).unwrap();
            let id = Matrix::identity(2 * n, field);
            from_bool(psp_equal(&p.mat, &id) && psp_equal(&q.mat, &id), || {
                "inner automorphisms should act trivially in PSp".into()
            })
        }),
        check("omega-preserved", move |rng| {
            let en = En::new(n, field).unwrap();
            let actions = vec![
                ActionSpec::Auto(random_invertible(rng, n, field)),
                ActionSpec::Cocycle(random_symmetric(rng, n, field)),
                ActionSpec::Twist(random_symmetric(rng, n, field)),
            ];
            for action in &actions {
                for _ in 0..5 {
                    let a = random_class(rng, n, field);
                    let b = random_class(rng, n, field);
                    let w = omega(&a.coords, &b.coords);
                    let a2 = extract_ext_class(&apply_action(&en, action, &build_va(&a)).unwrap()).unwrap();
                    let b2 = extract_ext_class(&apply_action(&en, action, &build_va(&b)).unwrap()).unwrap();
                    if omega(&a2.coords, &b2.coords) != w {
                        return fail("omega not preserved".into());
                    }
                }
            }
            ok()
        }),
    ]
}

fn sp_decompose_checks(n: usize, field: FieldSpec, cfg: &SuiteConfig) -> Vec<Check> {
    let samples = cfg.samples;
    let mut checks = vec![
        check("identity-is-empty", move |_| {
            from_bool(
                sp_decompose(&Matrix::identity(2 * n, field)).unwrap().is_empty(),
                || "identity should decompose to the empty word".into(),
            )
        }),
        check("roundtrip-random-words", move |rng| {
            for _ in 0..samples {
                let len = rng.gen_range(1..=5);
                let word = random_sp_word(rng, n, field, len);
                let m = word_to_matrix(n, field, &word);
                let got = match sp_decompose(&m) {
                    Ok(w) => w,
                    Err(e) => return fail(format!("decomposition failed: {e}")),
                };
                if word_to_matrix(n, field, &got) != m {
                    return fail(format!(
                        "roundtrip failed on {}",
                        jsonio::matrix_to_json(&m)
                    ));
                }
                if got.len() > 4 {
                    return fail("word longer than the guaranteed bound".into());
                }
                let lo: Vec<usize> = (0..n).collect();
                if !m.submatrix(&lo, &lo).det().is_zero() && got.len() > 3 {
                    return fail("invertible corner should give the XYZ form".into());
                }
            }
            ok()
        }),
        check("xyz-order", move |rng| {
            // the 3-token form comes out in Diag, Lower, Upper order
            for _ in 0..20 {
                let len = rng.gen_range(1..=4);
                let word = random_sp_word(rng, n, field, len);
                let m = word_to_matrix(n, field, &word);
                let lo: Vec<usize> = (0..n).collect();
                if m.submatrix(&lo, &lo).det().is_zero() {
                    continue;
                }
                let got = sp_decompose(&m).unwrap();
                let rank_of = |t: &SpToken| match t {
                    SpToken::Diag(_) => 0,
                    SpToken::Lower(_) => 1,
                    SpToken::Upper(_) => 2,
                };
                let ranks: Vec<i32> = got.iter().map(rank_of).collect();
                let mut sorted = ranks.clone();
                sorted.sort();
                sorted.dedup();
                if ranks.len() != sorted.len() || ranks != sorted {
                    return fail("XYZ tokens out of order or repeated".into());
                }
            }
            ok()
        }),
        check("non-symplectic-rejected", move |_| {
            let mut m = Matrix::identity(2 * n, field);
            m.set(0, 0, field.from_i64(2));
            from_bool(sp_decompose(&m).is_err(), || "accepted a non-symplectic matrix".into())
        }),
        check("psp-equality", move |rng| {
            let word = random_sp_word(rng, n, field, 3);
            let m = word_to_matrix(n, field, &word);
            let shifted = m.mul(&SpToken::Lower(Matrix::identity(n, field)).to_matrix());
            from_bool(
                psp_equal(&m, &m) && psp_equal(&m, &m.neg()) && !psp_equal(&m, &shifted),
                || "PSp equality misbehaves".into(),
            )
        }),
        check("omega-alternating", move |rng| {
            for _ in 0..samples {
                let a: Vec<Scalar> = (0..2 * n).map(|_| random_scalar(rng, field)).collect();
                let b: Vec<Scalar> = (0..2 * n).map(|_| random_scalar(rng, field)).collect();
                if !omega(&a, &a).is_zero() || omega(&a, &b) != -omega(&b, &a) {
                    return fail("omega is not alternating".into());
                }
            }
            ok()
        }),
    ];
    if n == 1 && field == FieldSpec::prime_field(3).unwrap() {
        checks.push(check("uniqueness-exhaustive-gf3", move |_| {
            let f3 = field;
            let mut products = std::collections::BTreeSet::new();
            for a in [1i64, 2] {
                for b in 0i64..3 {
                    for c in 0i64..3 {
                        let word = vec![
                            SpToken::Diag(Matrix::from_i64(f3, &[&[a]])),
                            SpToken::Lower(Matrix::from_i64(f3, &[&[b]])),
                            SpToken::Upper(Matrix::from_i64(f3, &[&[c]])),
                        ];
                        let m = word_to_matrix(1, f3, &word);
                        if !products.insert(m) {
                            return fail("two XYZ words share a product".into());
                        }
                    }
                }
            }
            from_bool(products.len() == 18, || "wrong number of XYZ products".into())
        }));
    }
    if n == 1 {
        checks.push(check("rotation-ulu", move |_| {
            let rot = Matrix::from_fn(2, 2, field, |i, j| {
                if i == 0 && j == 1 {
                    field.one()
                } else if i == 1 && j == 0 {
                    field.from_i64(-1)
                } else {
                    field.zero()
                }
            });
            let word = sp_decompose(&rot).unwrap();
            let expect = vec![
                SpToken::Upper(Matrix::identity(1, field)),
                SpToken::Lower(Matrix::identity(1, field).neg()),
                SpToken::Upper(Matrix::identity(1, field)),
            ];
            from_bool(word == expect, || format!("got {word:?}"))
        }));
    }
    checks
}

/// Also exposed for the CLI: canonical pushforward verification used by
/// acceptance criterion 4 and the rmatrix suite.
pub fn pushforward_battery(n: usize, field: FieldSpec, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let cfg = *cfg;
    let checks: Vec<Check> = vec![check("pushforward-identity", move |rng| {
        let en = En::new(n, field).unwrap();
        // 10 generic, 5 Lagrangian, 5 non-Lagrangian instances
        let mut done_lagrangian = 0;
        let mut done_other = 0;
        let mut count = 0;
        while count < 20 {
            let f = if done_lagrangian < 5 {
                let l = random_lagrangian(rng, n, field);
                SurjMap::from_rows(l.rref()).unwrap()
            } else {
                random_rank_n_map(rng, n, field)
            };
            let lag = is_lagrangian(&f.rows());
            if lag {
                done_lagrangian += 1;
            } else {
                done_other += 1;
            }
            count += 1;
            // pushforward_r verifies (f (x) f)(R) = R_{AB^t} internally
            let r = match pushforward_r(&en, &f) {
                Ok(r) => r,
                Err(e) => return fail(format!("pushforward failed: {e}")),
            };
            if is_triangular(&r) != lag {
                return fail("triangular <=> Lagrangian failed".into());
            }
        }
        // at n = 1 every line is isotropic, so non-Lagrangian maps only
        // exist from n = 2 on
        from_bool(n == 1 || done_other >= 5, || "not enough non-Lagrangian samples".into())
    })];
    Ok(run_checks("pushforward", n, field, &cfg, checks))
}
