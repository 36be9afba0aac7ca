//! Batch verification suites. Random samples derive their generator from
//! `(seed, tag, index)` alone, so results do not depend on scheduling and any
//! failure can be replayed from its record.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use sympdec_core::groups::{self, ClassicalGroup, GroupElement, GroupError};
use sympdec_core::induced::{self, AbHom, InducedError};
use sympdec_core::lifting;
use sympdec_core::linalg::ExactMatrix;

/// Largest allowed `2·max_m·max_n·max_r` for the exact matrix suites.
pub const MATRIX_SIZE_GUARD: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Closure,
    Lemmas,
    MixedProduct,
    Center,
    Formulas,
    Bezout,
    JIso,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Closure,
        Suite::Lemmas,
        Suite::MixedProduct,
        Suite::Center,
        Suite::Formulas,
        Suite::Bezout,
        Suite::JIso,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Closure => "closure",
            Suite::Lemmas => "lemmas",
            Suite::MixedProduct => "mixed-product",
            Suite::Center => "center",
            Suite::Formulas => "formulas",
            Suite::Bezout => "bezout",
            Suite::JIso => "J-iso",
            Suite::All => "all",
        }
    }

    fn uses_matrices(self) -> bool {
        matches!(
            self,
            Suite::Closure | Suite::Lemmas | Suite::MixedProduct | Suite::Center | Suite::All
        )
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: u64,
    pub max_m: u64,
    pub max_n: u64,
    pub max_r: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            samples: 10,
            max_m: 2,
            max_n: 3,
            max_r: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("bounds too large: 2*max_m*max_n*max_r = {product} exceeds {MATRIX_SIZE_GUARD}")]
    BoundsTooLarge { product: u64 },
    #[error("samples and bounds must be at least 1")]
    ZeroBound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub check: String,
    /// Everything needed to rerun the case, including seed and sample index
    /// for random cases.
    pub inputs: Value,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<VerifyReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Result of one check: the inputs and `Err(detail)` on failure.
struct Case {
    check: &'static str,
    inputs: Value,
    outcome: Result<(), String>,
}

impl Case {
    fn new(check: &'static str, inputs: Value, ok: Result<bool, String>) -> Self {
        let outcome = match ok {
            Ok(true) => Ok(()),
            Ok(false) => Err("identity does not hold".into()),
            Err(e) => Err(e),
        };
        Case {
            check,
            inputs,
            outcome,
        }
    }
}

fn collect(suite: Suite, cases: Vec<Case>) -> VerifyReport {
    let n = cases.len() as u64;
    let failures = cases
        .into_iter()
        .filter_map(|c| {
            c.outcome.err().map(|detail| Failure {
                check: c.check.to_string(),
                inputs: c.inputs,
                detail,
            })
        })
        .collect();
    VerifyReport {
        suite: suite.name().into(),
        cases: n,
        failures,
        elapsed_ms: None,
        parts: Vec::new(),
    }
}

/// Generator for sample `index` of check `tag`.
pub fn sample_rng(seed: u64, tag: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((tag << 32) | index);
    rng
}

fn ge(e: GroupError) -> String {
    e.to_string()
}

fn pick(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> usize {
    rng.random_range(lo..=hi.max(lo)) as usize
}

fn check_bounds(suite: Suite, cfg: &VerifyConfig) -> Result<(), VerifyError> {
    if cfg.samples == 0 || cfg.max_m == 0 || cfg.max_n == 0 || cfg.max_r == 0 {
        return Err(VerifyError::ZeroBound);
    }
    if suite.uses_matrices() {
        let product = 2u64
            .saturating_mul(cfg.max_m)
            .saturating_mul(cfg.max_n)
            .saturating_mul(cfg.max_r);
        if product > MATRIX_SIZE_GUARD {
            return Err(VerifyError::BoundsTooLarge { product });
        }
    }
    Ok(())
}

pub fn run(suite: Suite, cfg: &VerifyConfig, timing: bool) -> Result<VerifyReport, VerifyError> {
    check_bounds(suite, cfg)?;
    let start = Instant::now();
    let mut report = match suite {
        Suite::Closure => collect(suite, closure(cfg)),
        Suite::Lemmas => collect(suite, lemmas(cfg)),
        Suite::MixedProduct => collect(suite, mixed_product(cfg)),
        Suite::Center => collect(suite, center(cfg)),
        Suite::Formulas => collect(suite, formulas(cfg)),
        Suite::Bezout => collect(suite, bezout(cfg)),
        Suite::JIso => collect(suite, j_iso(cfg)),
        Suite::All => {
            let parts = Suite::EACH
                .into_iter()
                .map(|s| run(s, cfg, timing))
                .collect::<Result<Vec<_>, _>>()?;
            VerifyReport {
                suite: suite.name().into(),
                cases: parts.iter().map(|p| p.cases).sum(),
                failures: parts
                    .iter()
                    .flat_map(|p| {
                        p.failures.iter().map(|f| Failure {
                            check: format!("{}/{}", p.suite, f.check),
                            ..f.clone()
                        })
                    })
                    .collect(),
                elapsed_ms: None,
                parts,
            }
        }
    };
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

pub const CLOSURE_OPS: [&str; 12] = [
    "random-sp",
    "random-so",
    "direct-sum",
    "r-fold",
    "stabilization",
    "stabilization-sj",
    "doubling",
    "tensor-sp-o",
    "left-tensor",
    "right-tensor",
    "tensor-sp-sp",
    "square-tensor",
];

/// One closure sample: build an element with operation `op` and test it
/// against the membership predicate of the group it claims to lie in.
pub fn closure_sample(op: usize, cfg: &VerifyConfig, index: u64) -> (Value, Result<bool, String>) {
    let mut rng = sample_rng(cfg.seed, op as u64, index);
    let (mm, mn, mr) = (cfg.max_m, cfg.max_n, cfg.max_r);
    let mut inputs = json!({ "op": CLOSURE_OPS[op], "seed": cfg.seed, "index": index });
    let mut rec = |k: &str, v: usize| {
        inputs[k] = json!(v);
        v
    };
    let built: Result<GroupElement, GroupError> = (|| match CLOSURE_OPS[op] {
        "random-sp" => Ok(groups::random_sp(rec("m", pick(&mut rng, 1, mm)), &mut rng)),
        "random-so" => Ok(groups::random_so(rec("n", pick(&mut rng, 1, mn)), &mut rng)),
        "direct-sum" => {
            let a = groups::random_sp(rec("m", pick(&mut rng, 1, mm)), &mut rng);
            let b = groups::random_sp(rec("n", pick(&mut rng, 1, mm)), &mut rng);
            groups::direct_sum_sp(&a, &b)
        }
        "r-fold" => {
            let a = groups::random_sp(rec("n", pick(&mut rng, 1, mm)), &mut rng);
            groups::r_fold_sum_sp(&a, rec("r", pick(&mut rng, 1, mr)))
        }
        "stabilization" => {
            let a = groups::random_sp(rec("m", pick(&mut rng, 1, mm)), &mut rng);
            groups::stabilization(&a, rec("n", pick(&mut rng, 1, mn)))
        }
        "stabilization-sj" => {
            let a = groups::random_sp(rec("n", pick(&mut rng, 1, mm)), &mut rng);
            let r = rec("r", pick(&mut rng, 1, mr));
            let j = rec("j", pick(&mut rng, 1, r as u64));
            groups::stabilization_sj(&a, j, r)
        }
        "doubling" => {
            let b = groups::random_o(rec("n", pick(&mut rng, 1, mn)), &mut rng);
            groups::doubling(&b)
        }
        "tensor-sp-o" => {
            let a = groups::random_sp(rec("m", pick(&mut rng, 1, mm)), &mut rng);
            let b = groups::random_o(rec("n", pick(&mut rng, 1, mn)), &mut rng);
            groups::tensor_sp_o(&a, &b)
        }
        "left-tensor" => {
            let a = groups::random_sp(rec("m", pick(&mut rng, 1, mm)), &mut rng);
            groups::left_tensor(&a, rec("n", pick(&mut rng, 1, mn)))
        }
        "right-tensor" => {
            let m = rec("m", pick(&mut rng, 1, mm));
            let b = groups::random_o(rec("n", pick(&mut rng, 1, mn)), &mut rng);
            groups::right_tensor(m, &b)
        }
        "tensor-sp-sp" => {
            let m = rec("m", pick(&mut rng, 1, mm));
            let n = rec("n", pick(&mut rng, m as u64, mm));
            let a = groups::random_sp(m, &mut rng);
            let b = groups::random_sp(n, &mut rng);
            groups::tensor_sp_sp(&a, &b)
        }
        "square-tensor" => {
            let a = groups::random_sp(rec("m", pick(&mut rng, 1, mm)), &mut rng);
            groups::square_tensor(&a)
        }
        other => unreachable!("unknown closure op {other}"),
    })();
    let ok = built.and_then(|g| g.verify()).map_err(ge);
    (inputs, ok)
}

fn closure(cfg: &VerifyConfig) -> Vec<Case> {
    let jobs: Vec<(usize, u64)> = (0..CLOSURE_OPS.len())
        .flat_map(|op| (0..cfg.samples).map(move |k| (op, k)))
        .collect();
    jobs.into_par_iter()
        .map(|(op, k)| {
            let (inputs, ok) = closure_sample(op, cfg, k);
            Case::new("membership", inputs, ok)
        })
        .collect()
}

const TAG_SJ: u64 = 100;
const TAG_L: u64 = 101;
const TAG_MIXED: u64 = 102;
const TAG_FACTOR: u64 = 103;

/// All `(n, r, j)` with `n ≤ max_n`, `2 ≤ r ≤ max_r`, `1 ≤ j < r`.
fn sj_params(max_n: u64, max_r: u64) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n as usize {
        for r in 2..=max_r as usize {
            for j in 1..r {
                out.push((n, r, j));
            }
        }
    }
    out
}

pub fn sj_sample(seed: u64, n: usize, r: usize, j: usize, index: u64) -> Result<bool, String> {
    let tag = TAG_SJ + ((n * 64 + r) * 64 + j) as u64 * 1000;
    let a = groups::random_sp(n, &mut sample_rng(seed, tag, index));
    groups::verify_sj_conjugation(&a, j, r).map_err(ge)
}

pub fn l_sample(seed: u64, m: usize, n: usize, index: u64) -> Result<bool, String> {
    let tag = TAG_L + (m * 64 + n) as u64 * 1000;
    let a = groups::random_sp(m, &mut sample_rng(seed, tag, index));
    groups::verify_l_conjugation(&a, n).map_err(ge)
}

/// `Pᵀ (J ⊗ J) P = I₄ₘₙ`
pub fn orthonormalization_holds(m: usize, n: usize) -> Result<bool, String> {
    let p = groups::change_of_basis(m, n);
    let g = groups::skew_tensor_gram(m, n);
    let lhs = ExactMatrix::product(&[&p.transpose(), &g, &p]).map_err(|e| e.to_string())?;
    Ok(lhs.is_identity())
}

fn lemmas(cfg: &VerifyConfig) -> Vec<Case> {
    let mut jobs: Vec<Box<dyn Fn() -> Case + Send + Sync>> = Vec::new();
    let seed = cfg.seed;
    for (n, r, j) in sj_params(cfg.max_m, cfg.max_r) {
        for k in 0..cfg.samples {
            jobs.push(Box::new(move || {
                Case::new(
                    "s_j conjugation",
                    json!({"n": n, "r": r, "j": j, "seed": seed, "index": k}),
                    sj_sample(seed, n, r, j, k),
                )
            }));
        }
    }
    for m in 1..=cfg.max_m as usize {
        for n in 1..=cfg.max_n as usize {
            for k in 0..cfg.samples {
                jobs.push(Box::new(move || {
                    Case::new(
                        "L conjugation",
                        json!({"m": m, "n": n, "seed": seed, "index": k}),
                        l_sample(seed, m, n, k),
                    )
                }));
            }
        }
    }
    for m in 1..=cfg.max_m as usize {
        for n in m..=cfg.max_m as usize {
            jobs.push(Box::new(move || {
                Case::new(
                    "orthonormal change of basis",
                    json!({"m": m, "n": n}),
                    orthonormalization_holds(m, n),
                )
            }));
        }
    }
    jobs.into_par_iter().map(|f| f()).collect()
}

fn mixed_product(cfg: &VerifyConfig) -> Vec<Case> {
    let seed = cfg.seed;
    let mut params = Vec::new();
    for m in 1..=cfg.max_m as usize {
        for n in 1..=cfg.max_n as usize {
            for k in 0..cfg.samples {
                params.push((m, n, k));
            }
        }
    }
    params
        .into_par_iter()
        .flat_map_iter(|(m, n, k)| {
            let tag = TAG_MIXED + (m * 64 + n) as u64 * 1000;
            let mut rng = sample_rng(seed, tag, k);
            let a = groups::random_gl(2 * m, &mut rng);
            let b = groups::random_gl(n, &mut rng);
            let generic = groups::verify_mixed_product(a.matrix(), b.matrix()).map_err(ge);
            let tag = TAG_FACTOR + (m * 64 + n) as u64 * 1000;
            let mut rng = sample_rng(seed, tag, k);
            let a = groups::random_sp(m, &mut rng);
            let b = groups::random_o(n, &mut rng);
            let factor = groups::verify_tensor_factorization(&a, &b).map_err(ge);
            let inputs = json!({"m": m, "n": n, "seed": seed, "index": k});
            [
                Case::new("mixed product on GL", inputs.clone(), generic),
                Case::new("tensor = L * R", inputs, factor),
            ]
        })
        .collect()
}

fn center(cfg: &VerifyConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 1..=cfg.max_m as usize {
        for n in 1..=cfg.max_n as usize {
            out.push(Case::new(
                "center to center",
                json!({"m": m, "n": n}),
                groups::verify_center_to_center(m, n).map_err(ge),
            ));
            let minus = GroupElement::new(ExactMatrix::identity(2 * m).neg(), ClassicalGroup::Sp(m));
            let ok = minus
                .map_err(ge)
                .and_then(|x| groups::left_tensor(&x, n).map_err(ge))
                .and_then(|l| l.verify().map_err(ge));
            out.push(Case::new("-I is symplectic after L", json!({"m": m, "n": n}), ok));
        }
    }
    out
}

fn ierr(e: InducedError) -> String {
    e.to_string()
}

/// Compares two formula evaluations that must agree, including agreeing on
/// whether the degree is in range.
fn same(a: Result<AbHom, InducedError>, b: Result<AbHom, InducedError>) -> Option<Result<bool, String>> {
    match (a, b) {
        (Ok(x), Ok(y)) => Some(Ok(x == y)),
        (Err(InducedError::OutOfRange { .. }), Err(InducedError::OutOfRange { .. })) => None,
        (Ok(_), Err(e)) | (Err(e), Ok(_)) => Some(Err(format!("only one side defined: {e}"))),
        (Err(e), Err(_)) => Some(Err(ierr(e))),
    }
}

/// `⊗_* = L + R` with `L = ⊞ⁿ` on the Sp factor and `R = ⊞ᵐ ∘ d_*`.
pub fn tensor_split(i: u64, m: u64, n: u64) -> Option<Result<bool, String>> {
    let lhs = induced::hom_tensor_sp_o(i, m, n);
    let rhs = (|| {
        let l = induced::hom_r_fold(i, m, n)?;
        let r = induced::hom_r_fold(i, n, m)?.compose(&induced::hom_doubling(i, n)?)?;
        AbHom::sum_on_product(&l, &r)
    })();
    match lhs {
        Err(InducedError::OutOfRange { .. }) => None,
        lhs => same(lhs, rhs),
    }
}

/// `⊗̃²_* = ⊗̃_* ∘ Δ`
pub fn square_split(i: u64, m: u64) -> Option<Result<bool, String>> {
    let lhs = induced::hom_square_tensor(i, m);
    let rhs = (|| {
        let t = induced::hom_tensor_sp_sp(i, m, m)?;
        let src = sympdec_core::homotopy::pi_sp(i, m);
        let g = src.as_group().cloned().ok_or(InducedError::OutOfRange {
            op: "diagonal",
            bound: src.provenance.clone(),
        })?;
        t.compose(&induced::diagonal(&g))
    })();
    same(lhs, rhs)
}

fn formulas(cfg: &VerifyConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 1..=cfg.max_m {
        for n in 1..=cfg.max_n {
            for i in 0..4 * m + 2 {
                if let Some(ok) = tensor_split(i, m, n) {
                    out.push(Case::new("tensor = L + R", json!({"i": i, "m": m, "n": n}), ok));
                }
            }
        }
        for i in 0..4 * m + 2 {
            if let Some(ok) = square_split(i, m) {
                out.push(Case::new("square = tensor o diagonal", json!({"i": i, "m": m}), ok));
            }
        }
    }
    out
}

/// Validity and minimality of the witness: no smaller `u` admits any `v`.
pub fn bezout_case(m: u64, n: u64) -> Result<bool, String> {
    let w = lifting::bezout_uv(m, n).map_err(|e| e.to_string())?;
    if !w.is_valid() {
        return Ok(false);
    }
    let four_m2 = 4 * (m as u128).pow(2);
    let smaller = (1..w.u as u128).any(|u| {
        let t = u * four_m2;
        (t + 1) % n as u128 == 0 || (t - 1) % n as u128 == 0
    });
    Ok(!smaller)
}

fn bezout(cfg: &VerifyConfig) -> Vec<Case> {
    let mut params = Vec::new();
    for m in 1..=cfg.max_m {
        for n in (1..=cfg.max_n).step_by(2) {
            if m.gcd(&n) == 1 {
                params.push((m, n));
            }
        }
    }
    params
        .into_par_iter()
        .map(|(m, n)| Case::new("bezout witness", json!({"m": m, "n": n}), bezout_case(m, n)))
        .collect()
}

/// `J_i` is an isomorphism for both `z` in every degree `0 < i < min(4m+3, n)`
/// with `i ≢ 0 (mod 8)`, the `i ≡ 4` matrix has determinant `±1`, and the
/// connectivity is 7.
pub fn j_iso_case(m: u64, n: u64) -> Result<bool, String> {
    let w = lifting::bezout_uv(m, n).map_err(|e| e.to_string())?;
    let d = (4 * m + 3).min(n);
    for i in (1..d).filter(|i| i % 8 != 0) {
        for z in 0..2u8 {
            let h = induced::hom_j(i, m, n, w.u, w.v, z).map_err(ierr)?;
            if !h.is_isomorphism() {
                return Err(format!("J_{i} is not an isomorphism for z = {z}"));
            }
            if i % 8 == 4 {
                let det = h.matrix().det().map_err(|e| e.to_string())?;
                if !det.magnitude().is_one() {
                    return Err(format!("det J_{i} = {det}"));
                }
            }
        }
    }
    match lifting::connectivity_j(m, n) {
        Ok(7) => Ok(true),
        Ok(c) => Err(format!("connectivity {c}, expected 7")),
        Err(e) => Err(e.to_string()),
    }
}

/// Coprime `(m, n)` with `1 < m ≤ max_m`, `7 < n ≤ max_n`, `n` odd.
pub fn j_iso_pairs(max_m: u64, max_n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        for n in (9..=max_n).step_by(2) {
            if m.gcd(&n) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

fn j_iso(cfg: &VerifyConfig) -> Vec<Case> {
    j_iso_pairs(cfg.max_m, cfg.max_n)
        .into_par_iter()
        .map(|(m, n)| Case::new("J isomorphisms", json!({"m": m, "n": n}), j_iso_case(m, n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard() {
        let cfg = VerifyConfig {
            max_m: 4,
            max_n: 4,
            max_r: 4,
            ..Default::default()
        };
        assert_eq!(
            run(Suite::Lemmas, &cfg, false),
            Err(VerifyError::BoundsTooLarge { product: 128 })
        );
        let cfg = VerifyConfig {
            max_m: 10,
            max_n: 99,
            ..Default::default()
        };
        assert!(run(Suite::Bezout, &cfg, false).unwrap().passed());
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert_eq!("j-iso".parse::<Suite>(), Ok(Suite::JIso));
    }

    #[test]
    fn samples_are_reproducible() {
        let cfg = VerifyConfig::default();
        for op in 0..CLOSURE_OPS.len() {
            assert_eq!(closure_sample(op, &cfg, 3), closure_sample(op, &cfg, 3));
        }
    }
}
