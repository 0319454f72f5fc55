//! Acceptance criteria, runnable from tests and from `knotfog selftest`.
//!
//! Each check returns a [`CriterionResult`]; a criterion with a time limit
//! fails when it exceeds it, even if every value is correct.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::{alexander_of, genus_of, pretzel_factor, slice_of, IntInterval};
use crate::error::Result;
use crate::fog::{basis_min_lb, basis_min_lb_auto, fog_of, DEFAULT_CAP};
use crate::knotlang::{parse, KnotExpr, TriState};
use crate::laurent::LaurentPoly;
use crate::random::random_expr;
use crate::seifert::{BasisChange, SeifertMatrix};

/// Fixed seed for every randomized criterion.
pub const SEED: u64 = 0x6f67_2d31;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {}. {} ({:.3}s{}) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.map_or(String::new(), |l| format!(" / limit {}s", l.as_secs_f64())),
            self.detail
        )
    }
}

fn timed(
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    check: impl FnOnce() -> std::result::Result<String, String>,
) -> CriterionResult {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(check))
        .unwrap_or_else(|_| Err("panicked".to_string()));
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(l) = limit {
        if elapsed > l {
            passed = false;
            detail = format!("{detail}; exceeded time limit");
        }
    }
    CriterionResult { id, name, passed, detail, elapsed, limit }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Builds `theta_n`; swappable so a corrupted builder can be checked to fail.
pub type ThetaBuilder = fn(i64) -> Result<SeifertMatrix>;

pub fn pretzel_identity(theta: ThetaBuilder) -> CriterionResult {
    timed(1, "pretzel polynomial identity, n = 1..6", Some(Duration::from_secs(1)), || {
        for n in 1..=6 {
            let v = theta(n).map_err(|e| e.to_string())?;
            let det = v.alexander().canonical();
            let closed = pretzel_factor().pow(n as u32).canonical();
            ensure(det == closed, || format!("n = {n}: det gives {det}, closed form {closed}"))?;
        }
        Ok("6/6 canonical forms equal".into())
    })
}

pub fn whitehead_family() -> CriterionResult {
    timed(2, "wh0(kfam(n)) family, n = 1..8", Some(Duration::from_secs(1)), || {
        let mut seen = HashSet::new();
        for n in 1..=8u32 {
            let e = KnotExpr::wh0(KnotExpr::Kfam(n));
            ensure(genus_of(&e) == IntInterval::point(1), || format!("n = {n}: genus {}", genus_of(&e)))?;
            let alex = alexander_of(&e).map(|p| p.canonical());
            ensure(alex.as_ref().is_some_and(|p| p.is_one()), || format!("n = {n}: Alexander {alex:?}"))?;
            ensure(slice_of(&e) == TriState::Yes, || format!("n = {n}: slice {}", slice_of(&e)))?;
            let fog = fog_of(&e).interval;
            let want = IntInterval::point(n as u64 + 1);
            ensure(fog == want, || format!("n = {n}: g1 {fog}, expected {want}"))?;
            ensure(seen.insert(fog.lo), || format!("n = {n}: g1 repeats"))?;
        }
        Ok("8 rows, g1 = 2..9 distinct".into())
    })
}

pub fn random_exprs(seed: u64, count: usize, depth: usize) -> Vec<KnotExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_expr(&mut rng, depth)).collect()
}

pub fn twice_genus() -> CriterionResult {
    timed(3, "g1 >= 2g on 1000 random expressions", Some(Duration::from_secs(5)), || {
        let exprs = random_exprs(SEED, 1000, 4);
        let mut violations = 0;
        let mut first = None;
        for e in &exprs {
            let fog = fog_of(e).interval;
            let g = genus_of(e);
            if fog.lo < 2 * g.lo || fog.hi.is_some_and(|h| h < fog.lo) {
                violations += 1;
                first.get_or_insert_with(|| e.render());
            }
        }
        ensure(violations == 0, || format!("{violations} violations, first {first:?}"))?;
        Ok(format!("{} expressions, 0 violations", exprs.len()))
    })
}

pub fn subadditivity() -> CriterionResult {
    timed(4, "g1 subadditive on 500 random pairs", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 500 {
            attempts += 1;
            ensure(attempts < 200_000, || format!("only {checked} pairs with finite hi"))?;
            let a = random_expr(&mut rng, 3);
            let b = random_expr(&mut rng, 3);
            let (Some(ha), Some(hb)) = (fog_of(&a).hi(), fog_of(&b).hi()) else {
                continue;
            };
            let sum = KnotExpr::sum(a, b);
            let hs = fog_of(&sum).hi();
            ensure(hs.is_some_and(|h| h <= ha + hb), || {
                format!("{}: hi {hs:?} > {ha} + {hb}", sum.render())
            })?;
            checked += 1;
        }
        Ok(format!("500 pairs ({attempts} drawn), 0 violations"))
    })
}

/// Minimum of `max(1,|p|a,|q|b) + max(1,|r|a,|s|b)` over every `ps - qr = 1`
/// with `|coefficients| <= bound`, by plain enumeration.
pub fn brute_force_basis_min(ga: u64, gb: u64, bound: i64) -> u64 {
    let lb = |u: i64, v: i64| 1.max(u.unsigned_abs() * ga).max(v.unsigned_abs() * gb);
    let mut best = u64::MAX;
    for p in -bound..=bound {
        for q in -bound..=bound {
            for r in -bound..=bound {
                for s in -bound..=bound {
                    if p * s - q * r == 1 {
                        best = best.min(lb(p, q) + lb(r, s));
                    }
                }
            }
        }
    }
    best
}

pub fn basis_enumerator() -> CriterionResult {
    timed(5, "basis enumerator vs closed forms and brute force", Some(Duration::from_secs(5)), || {
        for g in 1..=6u64 {
            let v = basis_min_lb_auto(g, 0).map_err(|e| e.to_string())?.value;
            ensure(v == g + 1, || format!("basis_min_lb({g}, 0) = {v}, expected {}", g + 1))?;
        }
        for g in 1..=5u64 {
            for h in 1..=5u64 {
                let v = basis_min_lb_auto(g, h).map_err(|e| e.to_string())?.value;
                ensure(v == g + h, || format!("basis_min_lb({g}, {h}) = {v}, expected {}", g + h))?;
            }
        }
        for ga in 1..=5u64 {
            for gb in 0..=5u64 {
                let fast = basis_min_lb(ga, gb, DEFAULT_CAP).map_err(|e| e.to_string())?.value;
                let slow = brute_force_basis_min(ga, gb, 10);
                ensure(fast == slow, || format!("({ga}, {gb}): pruned {fast}, brute force {slow}"))?;
            }
        }
        Ok("closed forms hold; 30 brute-force comparisons agree".into())
    })
}

/// Random `V` of size `2g` with `V - V^T` the standard form.
pub fn random_standard_seifert(g: usize, rng: &mut impl Rng) -> SeifertMatrix {
    let n = 2 * g;
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-3..=3);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    for b in 0..g {
        rows[2 * b][2 * b + 1] += 1;
    }
    SeifertMatrix::from_rows(rows).expect("even square matrix")
}

pub fn congruence_invariance() -> CriterionResult {
    timed(6, "Alexander polynomial and standard form under symplectic P", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
        for case in 0..200 {
            let g = rng.gen_range(1..=3);
            let v = random_standard_seifert(g, &mut rng);
            let len = rng.gen_range(0..=12);
            let p = BasisChange::random_symplectic(g, rng.gen(), len).map_err(|e| e.to_string())?;
            ensure(p.is_symplectic(), || format!("case {case}: generator product not symplectic"))?;
            let w = v.change_basis(&p).map_err(|e| e.to_string())?;
            ensure(w.alexander().equiv(&v.alexander()), || {
                format!("case {case}: {} vs {}", w.alexander(), v.alexander())
            })?;
            let (_, standard) = w.intersection().map_err(|e| e.to_string())?;
            ensure(standard, || format!("case {case}: intersection form not preserved"))?;
        }
        Ok("200 pairs, 0 violations".into())
    })
}

/// `m t^2 - (2m + 1) t + m`, the twist-knot polynomial with `m` full twists.
pub fn twist_knot_polynomial(m: i64) -> LaurentPoly {
    LaurentPoly::from_i64s(0, &[m, -(2 * m + 1), m])
}

pub fn alexander_sanity() -> CriterionResult {
    timed(7, "Alexander sanity: |D(1)| = 1 and ksat specializations", None, || {
        let one = BigRational::from_integer(BigInt::from(1));
        let mut produced = 0;
        for e in random_exprs(SEED ^ 7, 1000, 4) {
            if let Some(d) = alexander_of(&e) {
                produced += 1;
                let at1 = d.eval(1).map_err(|e| e.to_string())?;
                ensure(at1.abs() == one, || format!("{}: D(1) = {at1}", e.render()))?;
            }
        }
        let j = KnotExpr::atom("J", 1);
        for m in -6..=6 {
            let d = alexander_of(&KnotExpr::ksat(j.clone(), KnotExpr::Unknot, m, -1)).unwrap();
            let want = twist_knot_polynomial(m);
            ensure(d.equiv(&want), || format!("ksat(J, unknot, {m}, -1): {d}, twist knot {want}"))?;
            for k in -3..=3 {
                for (mm, nn) in [(0, k), (m, 0)] {
                    let d = alexander_of(&KnotExpr::ksat(j.clone(), j.clone(), mm, nn)).unwrap();
                    ensure(d.is_unit(), || format!("ksat(J, J, {mm}, {nn}): {d}"))?;
                }
            }
        }
        let fig8 = alexander_of(&KnotExpr::Fig8).unwrap();
        let trefoil = alexander_of(&KnotExpr::Trefoil).unwrap();
        ensure(twist_knot_polynomial(1).equiv(&fig8), || "one twist is not the figure-eight".into())?;
        ensure(twist_knot_polynomial(-1).equiv(&trefoil), || "minus one twist is not the trefoil".into())?;
        Ok(format!("{produced} polynomials checked; twist family and mn = 0 units hold"))
    })
}

pub fn exact_points() -> CriterionResult {
    timed(8, "exact g1 values", None, || {
        let cases = [
            ("trefoil", 2),
            ("fig8", 2),
            ("ksat(kfam(1), kfam(2), 0, 0)", 3),
            ("unknot", 0),
        ];
        for (text, v) in cases {
            let e = parse(text).map_err(|e| e.to_string())?;
            let got = fog_of(&e).interval;
            ensure(got == IntInterval::point(v), || format!("{text}: {got}, expected [{v}, {v}]"))?;
        }
        Ok("4/4 exact".into())
    })
}

const FUZZ_TOKENS: &[&str] = &[
    "unknot", "trefoil", "fig8", "kfam", "wh0", "ksat", "atom", "(", ")", ",", "#", "=", "+", "-",
    "0", "1", "2", "-3", "99999999999999999999", "genus", "torus", "cable", "slice", "clasp",
    "yes", "no", "unknown", "J", " ", "\n", "✓", "_", "@", "",
];

/// Deterministic fuzz inputs: random token soup and single-character
/// mutations of rendered expressions.
pub fn fuzz_inputs(seed: u64, count: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                let len = rng.gen_range(0..24);
                (0..len).map(|_| FUZZ_TOKENS[rng.gen_range(0..FUZZ_TOKENS.len())]).collect()
            } else {
                let mut chars: Vec<char> = random_expr(&mut rng, 4).render().chars().collect();
                for _ in 0..rng.gen_range(1..=3) {
                    let at = rng.gen_range(0..=chars.len());
                    match rng.gen_range(0..3) {
                        0 if at < chars.len() => {
                            chars.remove(at);
                        }
                        1 if at < chars.len() => chars[at] = rng.gen_range(' '..='~'),
                        _ => chars.insert(at, rng.gen_range(' '..='~')),
                    }
                }
                chars.into_iter().collect()
            }
        })
        .collect()
}

pub fn parser_round_trip() -> CriterionResult {
    timed(9, "parser round-trip and fuzzing", None, || {
        for e in random_exprs(SEED ^ 9, 1000, 4) {
            let text = e.render();
            let back = parse(&text).map_err(|err| format!("{text}: {err}"))?;
            ensure(back == e, || format!("{text} reparsed as {}", back.render()))?;
        }
        let inputs = fuzz_inputs(SEED ^ 99, 10_000);
        let mut parsed = 0;
        for input in &inputs {
            let outcome = catch_unwind(|| parse(input));
            match outcome {
                Ok(Ok(e)) => {
                    parsed += 1;
                    ensure(parse(&e.render()).as_ref() == Ok(&e), || format!("{input:?} not stable"))?;
                }
                Ok(Err(err)) => {
                    ensure(err.pos <= input.len(), || format!("{input:?}: position {} out of range", err.pos))?;
                }
                Err(_) => return Err(format!("parser panicked on {input:?}")),
            }
        }
        Ok(format!("1000 round-trips; 10000 fuzz inputs ({parsed} parsed), no crashes"))
    })
}

/// Every criterion, in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        pretzel_identity(SeifertMatrix::theta),
        whitehead_family(),
        twice_genus(),
        subadditivity(),
        basis_enumerator(),
        congruence_invariance(),
        alexander_sanity(),
        exact_points(),
        parser_round_trip(),
    ]
}
