//! First-order genus `g1`: certified intervals with per-bound provenance.
//!
//! Upper bounds come only from explicit weak-grope certificates (a first
//! stage Seifert surface plus second-stage surfaces on a symplectic basis).
//! Lower bounds come from `g1 >= 2g` and from [`basis_min_lb`], which
//! minimizes a Schubert-type bound over every unimodular change of the
//! distinguished symplectic basis `(alpha, beta)` of a genus-one surface.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::classical::{class_r_of, genus_of, trivial_of, IntInterval};
use crate::error::{Error, Result};
use crate::knotlang::KnotExpr;

/// Second stages of a weak grope of height two, in basis order
/// `alpha_1, beta_1, ..., alpha_g, beta_g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakGropeCertificate {
    pub first_stage_genus: u64,
    pub second_stage_genera: Vec<u64>,
}

impl WeakGropeCertificate {
    pub fn new(first_stage_genus: u64, second_stage_genera: Vec<u64>) -> Result<Self> {
        let c = WeakGropeCertificate { first_stage_genus, second_stage_genera };
        c.check_shape()?;
        Ok(c)
    }

    fn check_shape(&self) -> Result<()> {
        let expected = 2 * self.first_stage_genus as usize;
        if self.second_stage_genera.len() != expected {
            return Err(Error::CertificateLength {
                expected,
                found: self.second_stage_genera.len(),
            });
        }
        Ok(())
    }

    /// Sum of the second-stage genera: an upper bound for `g1` of any knot
    /// the certificate is valid for.
    pub fn value(&self) -> Result<u64> {
        self.check_shape()?;
        Ok(self.second_stage_genera.iter().sum())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub valid: bool,
    pub reasons: Vec<String>,
}

/// Check that `c` describes a weak grope for `e` whose first stage has
/// minimal genus.
pub fn validate_certificate(c: &WeakGropeCertificate, e: &KnotExpr) -> CertificateCheck {
    let mut reasons = Vec::new();
    if let Err(err) = c.check_shape() {
        reasons.push(err.to_string());
    }
    let genus = genus_of(e);
    match genus.as_point() {
        Some(g) if g == c.first_stage_genus => {}
        Some(_) => reasons.push("first stage not minimal genus".into()),
        None => reasons.push(format!("genus of expression is not exactly known ({genus})")),
    }
    if trivial_of(e).is_no() && c.second_stage_genera.contains(&0) {
        // A disc-bounding basis curve would compress a minimal surface.
        reasons.push("zero second stage on nontrivial knot".into());
    }
    CertificateCheck { valid: reasons.is_empty(), reasons }
}

/// A basis `x = p*alpha + q*beta`, `y = r*alpha + s*beta` with `ps - qr = 1`,
/// and its bound value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisWitness {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
    pub value: u64,
}

impl BasisWitness {
    fn tie_key(&self) -> (u64, u64, u64, u64, i64, i64, i64, i64) {
        (
            self.p.unsigned_abs(),
            self.q.unsigned_abs(),
            self.r.unsigned_abs(),
            self.s.unsigned_abs(),
            self.p,
            self.q,
            self.r,
            self.s,
        )
    }

    fn better_than(&self, other: &BasisWitness) -> bool {
        match self.value.cmp(&other.value) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => self.tie_key() < other.tie_key(),
        }
    }
}

/// Combined Schubert bound for a basis curve `u*alpha + v*beta` where
/// `alpha` has knot type with genus `ga` and `beta` genus `gb`:
/// `max(1, |u| ga, |v| gb)`. The 1 is because no basis curve of a minimal
/// surface for a nontrivial knot bounds a disc in the complement.
pub fn curve_lower_bound(u: i64, v: i64, ga: u64, gb: u64) -> u64 {
    let a = u.unsigned_abs().saturating_mul(ga);
    let b = v.unsigned_abs().saturating_mul(gb);
    1.max(a).max(b)
}

pub const DEFAULT_CAP: u64 = 16;
pub const MAX_CAP: u64 = 128;

/// Minimum of `lb(p, q) + lb(r, s)` over unimodular `(p, q, r, s)`.
///
/// The search covers `|coefficients| <= cap` with branch-and-bound pruning.
/// The result is certified globally: any tuple with `|p|` or `|r|` above
/// `cap` has bound at least `(cap + 1) ga + 1`, and likewise for `q`, `s`
/// with `gb` when `gb > 0`. When `gb = 0` the bound does not depend on
/// `q, s`, and every coprime `(p, r)` in the box has a completion with
/// `|q|, |s| <= cap`. If the best value found is not below these escape
/// bounds the search fails with [`Error::CapInsufficient`].
pub fn basis_min_lb(ga: u64, gb: u64, cap: u64) -> Result<BasisWitness> {
    if ga == 0 {
        return Err(Error::TrivialAlphaCompanion);
    }
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    let c = i64::try_from(cap).map_err(|_| Error::Overflow("basis search cap"))?;
    let mut best: Option<BasisWitness> = None;
    let bound = |w: &Option<BasisWitness>| w.map_or(u64::MAX, |b| b.value);
    let consider = |cand: BasisWitness, best: &mut Option<BasisWitness>| {
        if best.as_ref().map_or(true, |b| cand.better_than(b)) {
            *best = Some(cand);
        }
    };

    for p in -c..=c {
        // lb(p, q) >= |p| ga, and lb(r, s) >= 1.
        if p.unsigned_abs().saturating_mul(ga).saturating_add(1) > bound(&best) {
            continue;
        }
        for q in -c..=c {
            let first = curve_lower_bound(p, q, ga, gb);
            if first.saturating_add(1) > bound(&best) {
                continue;
            }
            for r in -c..=c {
                if first.saturating_add(r.unsigned_abs().saturating_mul(ga)) > bound(&best) {
                    continue;
                }
                if p == 0 {
                    // -q r = 1: s is free.
                    if q * r != -1 {
                        continue;
                    }
                    for s in -c..=c {
                        let value = first + curve_lower_bound(r, s, ga, gb);
                        consider(BasisWitness { p, q, r, s, value }, &mut best);
                    }
                } else {
                    let num = 1 + q * r;
                    if num % p != 0 {
                        continue;
                    }
                    let s = num / p;
                    if s.abs() > c {
                        continue;
                    }
                    let value = first + curve_lower_bound(r, s, ga, gb);
                    consider(BasisWitness { p, q, r, s, value }, &mut best);
                }
            }
        }
    }

    let best = best.expect("identity basis is always in the search box");
    let escape_a = (cap + 1).saturating_mul(ga);
    let certified = best.value <= escape_a && (gb == 0 || best.value <= (cap + 1).saturating_mul(gb));
    if !certified {
        return Err(Error::CapInsufficient { cap, best: best.value });
    }
    Ok(best)
}

/// [`basis_min_lb`] starting at [`DEFAULT_CAP`] and doubling up to [`MAX_CAP`].
pub fn basis_min_lb_auto(ga: u64, gb: u64) -> Result<BasisWitness> {
    let mut cap = DEFAULT_CAP;
    loop {
        match basis_min_lb(ga, gb, cap) {
            Err(Error::CapInsufficient { .. }) if cap < MAX_CAP => cap *= 2,
            other => return other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    Lo,
    Hi,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub bound: Bound,
    pub value: u64,
    pub rule: String,
    pub anchor: String,
}

/// Certified interval for `g1`. `provenance` has one record for `lo` and,
/// when `hi` is finite, one for `hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FogResult {
    pub interval: IntInterval,
    pub provenance: Vec<BoundRecord>,
}

impl FogResult {
    pub fn lo(&self) -> u64 {
        self.interval.lo
    }

    pub fn hi(&self) -> Option<u64> {
        self.interval.hi
    }
}

#[derive(Serialize, Deserialize)]
struct FogResultRepr {
    lo: u64,
    hi: Option<u64>,
    provenance: Vec<BoundRecord>,
}

impl Serialize for FogResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FogResultRepr {
            lo: self.interval.lo,
            hi: self.interval.hi,
            provenance: self.provenance.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FogResult {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = FogResultRepr::deserialize(deserializer)?;
        Ok(FogResult { interval: IntInterval { lo: r.lo, hi: r.hi }, provenance: r.provenance })
    }
}

struct Candidate {
    value: u64,
    rule: &'static str,
    anchor: &'static str,
}

mod rules {
    pub const UNKNOT: (&str, &str) = ("unknot", "first-order genus of the unknot is zero");
    pub const TWICE: (&str, &str) = ("twice-genus", "g1(K) >= 2 g(K)");
    pub const WH_LO: (&str, &str) = (
        "whitehead-basis-minimum (combined Schubert)",
        "every symplectic basis of the unique minimal surface of Wh0(J) has g(x;K) + g(y;K) >= g(J) + 1",
    );
    pub const KSAT_LO: (&str, &str) = (
        "ksat-basis-minimum (combined Schubert)",
        "for J, L in class R, g1(K(J,L,m,n)) >= g(J) + g(L)",
    );
    pub const GENUS_ONE_CERT: (&str, &str) =
        ("grope-certificate", "each basis curve bounds a punctured torus off the knot");
    pub const WH_CERT: (&str, &str) =
        ("whitehead-certificate", "alpha bounds a copy of a minimal surface for J, beta a punctured torus");
    pub const KSAT_CERT: (&str, &str) =
        ("ksat-certificate", "standard surface of K(J,L) with minimal surfaces for J and L attached");
    pub const SUBADDITIVE: (&str, &str) = ("subadditivity", "g1(K # J) <= g1(K) + g1(J)");
}

/// Exact genus of `e` when it is a nontrivial knot with a point genus interval.
fn exact_nontrivial_genus(e: &KnotExpr) -> Option<u64> {
    if !trivial_of(e).is_no() {
        return None;
    }
    genus_of(e).as_point()
}

/// Whether the Whitehead closed form applies to a companion.
pub fn whitehead_guard(companion: &KnotExpr) -> bool {
    trivial_of(companion).is_no() && companion.flags().cable.is_no()
}

fn certified_hi(e: &KnotExpr, c: WeakGropeCertificate, rule: (&'static str, &'static str)) -> Option<Candidate> {
    if !validate_certificate(&c, e).valid {
        return None;
    }
    let value = c.value().ok()?;
    Some(Candidate { value, rule: rule.0, anchor: rule.1 })
}

/// Certified interval for the first-order genus of `e`.
pub fn fog_of(e: &KnotExpr) -> FogResult {
    let genus = genus_of(e);
    let trivial = trivial_of(e);
    let mut lows: Vec<Candidate> = Vec::new();
    let mut highs: Vec<Candidate> = Vec::new();

    if trivial.is_yes() {
        lows.push(Candidate { value: 0, rule: rules::UNKNOT.0, anchor: rules::UNKNOT.1 });
        highs.push(Candidate { value: 0, rule: rules::UNKNOT.0, anchor: rules::UNKNOT.1 });
    }

    match e {
        KnotExpr::Trefoil | KnotExpr::Fig8 => {
            let cert = WeakGropeCertificate { first_stage_genus: 1, second_stage_genera: vec![1, 1] };
            highs.extend(certified_hi(e, cert, rules::GENUS_ONE_CERT));
        }
        KnotExpr::Wh0 { companion, .. } if whitehead_guard(companion) => {
            if let Some(g) = exact_nontrivial_genus(companion) {
                if let Ok(w) = basis_min_lb_auto(g, 0) {
                    lows.push(Candidate { value: w.value, rule: rules::WH_LO.0, anchor: rules::WH_LO.1 });
                }
                let cert = WeakGropeCertificate { first_stage_genus: 1, second_stage_genera: vec![g, 1] };
                highs.extend(certified_hi(e, cert, rules::WH_CERT));
            }
        }
        KnotExpr::Ksat { j, l, m, n } if class_r_of(j).is_yes() && class_r_of(l).is_yes() => {
            if let (Some(gj), Some(gl)) = (exact_nontrivial_genus(j), exact_nontrivial_genus(l)) {
                if let Ok(w) = basis_min_lb_auto(gj, gl) {
                    lows.push(Candidate { value: w.value, rule: rules::KSAT_LO.0, anchor: rules::KSAT_LO.1 });
                }
                if *m == 0 && *n == 0 {
                    let cert = WeakGropeCertificate { first_stage_genus: 1, second_stage_genera: vec![gj, gl] };
                    highs.extend(certified_hi(e, cert, rules::KSAT_CERT));
                }
            }
        }
        KnotExpr::Sum(a, b) => {
            if let (Some(ha), Some(hb)) = (fog_of(a).hi(), fog_of(b).hi()) {
                highs.push(Candidate {
                    value: ha + hb,
                    rule: rules::SUBADDITIVE.0,
                    anchor: rules::SUBADDITIVE.1,
                });
            }
        }
        _ => {}
    }

    lows.push(Candidate { value: 2 * genus.lo, rule: rules::TWICE.0, anchor: rules::TWICE.1 });

    // First candidate wins ties, so specific rules take precedence over the generic one.
    let lo = lows.iter().reduce(|a, b| if b.value > a.value { b } else { a }).expect("twice-genus rule always applies");
    let hi = highs.iter().reduce(|a, b| if b.value < a.value { b } else { a });

    let mut provenance = vec![BoundRecord {
        bound: Bound::Lo,
        value: lo.value,
        rule: lo.rule.into(),
        anchor: lo.anchor.into(),
    }];
    if let Some(h) = hi {
        provenance.push(BoundRecord {
            bound: Bound::Hi,
            value: h.value,
            rule: h.rule.into(),
            anchor: h.anchor.into(),
        });
    }
    let interval = IntInterval::new(lo.value, hi.map(|h| h.value));
    FogResult { interval, provenance }
}
