//! Classical invariants of knot expressions: genus interval, Alexander
//! polynomial, sliceness and membership in class R (nontrivial knots that
//! are neither torus nor cable knots), each with the rule that produced it.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::knotlang::{KnotExpr, TriState};
use crate::laurent::LaurentPoly;
use crate::seifert::SeifertMatrix;

/// Closed interval of nonnegative integers; `hi = None` is `+inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntInterval {
    pub lo: u64,
    pub hi: Option<u64>,
}

impl IntInterval {
    pub fn point(v: u64) -> Self {
        IntInterval { lo: v, hi: Some(v) }
    }

    pub fn new(lo: u64, hi: Option<u64>) -> Self {
        debug_assert!(hi.map_or(true, |h| lo <= h), "empty interval [{lo}, {hi:?}]");
        IntInterval { lo, hi }
    }

    pub fn as_point(&self) -> Option<u64> {
        match self.hi {
            Some(h) if h == self.lo => Some(h),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_point() == Some(0)
    }

    pub fn is_finite(&self) -> bool {
        self.hi.is_some()
    }
}

impl std::ops::Add for IntInterval {
    type Output = IntInterval;
    fn add(self, rhs: IntInterval) -> IntInterval {
        IntInterval {
            lo: self.lo + rhs.lo,
            hi: self.hi.zip(rhs.hi).map(|(a, b)| a + b),
        }
    }
}

impl fmt::Display for IntInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) => write!(f, "[{}, {}]", self.lo, h),
            None => write!(f, "[{}, inf]", self.lo),
        }
    }
}

/// Which rule established a fact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub fact: String,
    pub rule: String,
    pub anchor: String,
}

impl Provenance {
    fn new(fact: &str, (rule, anchor): Rule) -> Self {
        Provenance { fact: fact.into(), rule: rule.into(), anchor: anchor.into() }
    }
}

/// `(rule name, statement it rests on)`
type Rule = (&'static str, &'static str);

mod rules {
    use super::Rule;

    pub const UNKNOT_GENUS: Rule = ("unknot", "the unknot bounds a disc");
    pub const TABLE_GENUS: Rule = ("tabulated", "trefoil and figure-eight have genus one");
    pub const PRETZEL_GENUS: Rule =
        ("pretzel-surface", "theta_n has Alexander polynomial of span 2n, so V_n is minimal: g(K_n) = n");
    pub const ATOM_GENUS: Rule = ("atom-declared", "declared genus of an atom");
    pub const WH_GENUS: Rule = ("whitehead-genus-one", "Whitehead doubles of nontrivial knots have genus one");
    pub const WH_TRIVIAL: Rule = ("whitehead-trivial-companion", "the double of the unknot is the unknot");
    pub const WH_UNDETERMINED: Rule = ("whitehead-undetermined", "companion triviality unknown");
    pub const KSAT_TRIVIAL: Rule =
        ("ksat-trivial-pattern", "K(J,L,m,n) is the unknot when n = 0 and L is trivial (or m = 0 and J is trivial)");
    pub const KSAT_SAT_J: Rule =
        ("ksat-satellite-of-j", "K(J,L,m,n) is a satellite of J iff n != 0 or L is nontrivial; satellites here have genus one");
    pub const KSAT_SAT_L: Rule = (
        "ksat-satellite-of-l (symmetry-derived)",
        "K(J,L,m,n) = K(L,J,n,m); satellite of L iff m != 0 or J is nontrivial",
    );
    pub const KSAT_UNDETERMINED: Rule =
        ("ksat-undetermined", "standard genus-one surface bounds the genus above; no satellite criterion applies");
    pub const SUM_GENUS: Rule = ("sum-additive", "genus is additive under connected sum");

    pub const ALEX_UNKNOT: Rule = ("unknot", "empty Seifert matrix");
    pub const ALEX_TREFOIL: Rule = ("seifert-matrix", "trefoil Seifert matrix [[-1,1],[0,-1]]");
    pub const ALEX_FIG8: Rule = ("seifert-matrix", "figure-eight Seifert matrix [[1,1],[0,-1]]");
    pub const ALEX_PRETZEL: Rule = ("pretzel-power", "Delta_{K_n}(t) = (-2t^2 + 5t - 2)^n");
    pub const ALEX_WH: Rule = ("whitehead-trivial-alexander", "untwisted Whitehead doubles have Delta = 1");
    pub const ALEX_KSAT: Rule =
        ("ksat-standard-surface", "standard genus-one surface with Seifert matrix [[m,1],[0,n]]");
    pub const ALEX_SUM: Rule = ("sum-product", "Alexander polynomial is multiplicative under connected sum");
    pub const ALEX_ATOM: Rule = ("atom-undeclared", "atoms carry no Alexander polynomial");

    pub const SLICE_UNKNOT: Rule = ("unknot", "the unknot bounds a disc");
    pub const SLICE_TABLE: Rule = ("curated-flag", "trefoil and figure-eight are not slice");
    pub const SLICE_PRETZEL: Rule = ("pretzel-ribbon", "K_n is ribbon, hence slice");
    pub const SLICE_WH: Rule =
        ("whitehead-slice", "the untwisted Whitehead double of a slice knot is slice");
    pub const SLICE_SUM: Rule = ("sum-slice", "connected sum of slice knots is slice");
    pub const SLICE_ATOM: Rule = ("atom-declared", "declared slice flag of an atom");
    pub const SLICE_NONE: Rule = ("no-rule", "no sliceness rule applies");

    pub const R_TRIVIAL: Rule = ("class-r-trivial", "class R contains only nontrivial knots");
    pub const R_FLAGS: Rule = ("class-r-flags", "class R: nontrivial knots that are neither torus nor cable knots");

    pub const TRIVIAL_FROM_GENUS: Rule = ("genus-zero", "a knot is trivial iff its genus is zero");
}

/// Facts derived for a knot expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotFacts {
    pub genus: IntInterval,
    pub alexander: Option<LaurentPoly>,
    pub slice: TriState,
    pub in_r: TriState,
    pub trivial: TriState,
    pub provenance: Vec<Provenance>,
}

impl Serialize for KnotFacts {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Alex<'a> {
            Known(&'a LaurentPoly),
            Unknown(&'static str),
        }
        let mut s = serializer.serialize_struct("KnotFacts", 6)?;
        s.serialize_field("genus", &self.genus)?;
        match &self.alexander {
            Some(p) => s.serialize_field("alexander", &Alex::Known(p))?,
            None => s.serialize_field("alexander", &Alex::Unknown("unknown"))?,
        }
        s.serialize_field("slice", &self.slice)?;
        s.serialize_field("in_R", &self.in_r)?;
        s.serialize_field("trivial", &self.trivial)?;
        s.serialize_field("provenance", &self.provenance)?;
        s.end()
    }
}

/// Lower bound on the genus of a satellite: `|winding| * g(companion) + g(pattern)`.
pub fn schubert_bound(winding: i64, g_companion: u64, g_pattern: u64) -> u64 {
    winding.unsigned_abs() * g_companion + g_pattern
}

/// Whether `ksat(j, l, m, n)` is a satellite of `j`; `None` for other nodes.
pub fn is_satellite_of_first(e: &KnotExpr) -> Option<TriState> {
    match e {
        KnotExpr::Ksat { l, n, .. } => Some(satellite_criterion(*n, l)),
        _ => None,
    }
}

/// Whether `ksat(j, l, m, n)` is a satellite of `l` (the mirror criterion).
pub fn is_satellite_of_second(e: &KnotExpr) -> Option<TriState> {
    match e {
        KnotExpr::Ksat { j, m, .. } => Some(satellite_criterion(*m, j)),
        _ => None,
    }
}

/// Satellite iff the far-side twist count is nonzero or the far-side knot is nontrivial.
fn satellite_criterion(far_twists: i64, far_knot: &KnotExpr) -> TriState {
    if far_twists != 0 {
        return TriState::Yes;
    }
    trivial_of(far_knot).not()
}

pub fn genus_of(e: &KnotExpr) -> IntInterval {
    genus_rule(e).0
}

fn genus_rule(e: &KnotExpr) -> (IntInterval, Rule) {
    use rules::*;
    match e {
        KnotExpr::Unknot => (IntInterval::point(0), UNKNOT_GENUS),
        KnotExpr::Trefoil | KnotExpr::Fig8 => (IntInterval::point(1), TABLE_GENUS),
        KnotExpr::Kfam(n) => (IntInterval::point(*n as u64), PRETZEL_GENUS),
        KnotExpr::Atom(a) => (IntInterval::point(a.genus as u64), ATOM_GENUS),
        KnotExpr::Sum(a, b) => (genus_of(a) + genus_of(b), SUM_GENUS),
        KnotExpr::Wh0 { companion, .. } => match trivial_of(companion) {
            TriState::No => (IntInterval::point(1), WH_GENUS),
            TriState::Yes => (IntInterval::point(0), WH_TRIVIAL),
            TriState::Unknown => (IntInterval::new(0, Some(1)), WH_UNDETERMINED),
        },
        KnotExpr::Ksat { j, l, m, n } => {
            let (tj, tl) = (trivial_of(j), trivial_of(l));
            if (*n == 0 && tl.is_yes()) || (*m == 0 && tj.is_yes()) {
                return (IntInterval::point(0), KSAT_TRIVIAL);
            }
            if satellite_criterion(*n, l).is_yes() && tj.is_no() {
                return (IntInterval::point(1), KSAT_SAT_J);
            }
            if satellite_criterion(*m, j).is_yes() && tl.is_no() {
                return (IntInterval::point(1), KSAT_SAT_L);
            }
            (IntInterval::new(0, Some(1)), KSAT_UNDETERMINED)
        }
    }
}

/// `yes` iff the genus is exactly zero, `no` iff it is known positive.
pub fn trivial_of(e: &KnotExpr) -> TriState {
    let g = genus_of(e);
    if g.is_zero() {
        TriState::Yes
    } else if g.lo > 0 {
        TriState::No
    } else {
        TriState::Unknown
    }
}

/// `-2t^2 + 5t - 2`
pub fn pretzel_factor() -> LaurentPoly {
    LaurentPoly::from_i64s(0, &[-2, 5, -2])
}

/// Seifert matrix of the standard genus-one surface of `K(J, L, m, n)`.
pub fn ksat_seifert_matrix(m: i64, n: i64) -> SeifertMatrix {
    SeifertMatrix::from_rows(vec![vec![m, 1], vec![0, n]]).expect("2x2 is even and square")
}

pub fn trefoil_seifert_matrix() -> SeifertMatrix {
    SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, -1]]).expect("2x2 is even and square")
}

pub fn fig8_seifert_matrix() -> SeifertMatrix {
    SeifertMatrix::from_rows(vec![vec![1, 1], vec![0, -1]]).expect("2x2 is even and square")
}

pub fn alexander_of(e: &KnotExpr) -> Option<LaurentPoly> {
    alexander_rule(e).0
}

fn alexander_rule(e: &KnotExpr) -> (Option<LaurentPoly>, Rule) {
    use rules::*;
    match e {
        KnotExpr::Unknot => (Some(LaurentPoly::one()), ALEX_UNKNOT),
        KnotExpr::Trefoil => (Some(trefoil_seifert_matrix().alexander()), ALEX_TREFOIL),
        KnotExpr::Fig8 => (Some(fig8_seifert_matrix().alexander()), ALEX_FIG8),
        KnotExpr::Kfam(n) => (Some(pretzel_factor().pow(*n)), ALEX_PRETZEL),
        KnotExpr::Wh0 { .. } => (Some(LaurentPoly::one()), ALEX_WH),
        KnotExpr::Ksat { m, n, .. } => (Some(ksat_seifert_matrix(*m, *n).alexander()), ALEX_KSAT),
        KnotExpr::Sum(a, b) => {
            let prod = alexander_of(a).zip(alexander_of(b)).map(|(x, y)| x * y);
            (prod, ALEX_SUM)
        }
        KnotExpr::Atom(_) => (None, ALEX_ATOM),
    }
}

pub fn slice_of(e: &KnotExpr) -> TriState {
    slice_rule(e).0
}

fn slice_rule(e: &KnotExpr) -> (TriState, Rule) {
    use rules::*;
    match e {
        KnotExpr::Unknot => (TriState::Yes, SLICE_UNKNOT),
        KnotExpr::Trefoil | KnotExpr::Fig8 => (e.flags().slice, SLICE_TABLE),
        KnotExpr::Kfam(_) => (TriState::Yes, SLICE_PRETZEL),
        KnotExpr::Atom(a) => (a.slice, SLICE_ATOM),
        KnotExpr::Wh0 { companion, .. } => {
            if slice_of(companion).is_yes() {
                (TriState::Yes, SLICE_WH)
            } else {
                (TriState::Unknown, SLICE_NONE)
            }
        }
        KnotExpr::Sum(a, b) => {
            if slice_of(a).is_yes() && slice_of(b).is_yes() {
                (TriState::Yes, SLICE_SUM)
            } else {
                (TriState::Unknown, SLICE_NONE)
            }
        }
        KnotExpr::Ksat { .. } => (TriState::Unknown, SLICE_NONE),
    }
}

/// Membership in class R.
pub fn class_r_of(e: &KnotExpr) -> TriState {
    class_r_rule(e).0
}

fn class_r_rule(e: &KnotExpr) -> (TriState, Rule) {
    let trivial = trivial_of(e);
    if trivial.is_yes() {
        return (TriState::No, rules::R_TRIVIAL);
    }
    let flags = e.flags();
    let verdict = if flags.torus.is_yes() || flags.cable.is_yes() {
        TriState::No
    } else if trivial.is_no() && flags.torus.is_no() && flags.cable.is_no() {
        TriState::Yes
    } else {
        TriState::Unknown
    };
    (verdict, rules::R_FLAGS)
}

pub fn facts_of(e: &KnotExpr) -> KnotFacts {
    let (genus, genus_by) = genus_rule(e);
    let (alexander, alex_by) = alexander_rule(e);
    let (slice, slice_by) = slice_rule(e);
    let (in_r, r_by) = class_r_rule(e);
    let trivial = trivial_of(e);
    KnotFacts {
        genus,
        alexander,
        slice,
        in_r,
        trivial,
        provenance: vec![
            Provenance::new("genus", genus_by),
            Provenance::new("alexander", alex_by),
            Provenance::new("slice", slice_by),
            Provenance::new("in_R", r_by),
            Provenance::new("trivial", rules::TRIVIAL_FROM_GENUS),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotlang::{parse, Atom};
    use TriState::*;

    fn k(s: &str) -> KnotExpr {
        parse(s).unwrap()
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert_bound(2, 1, 0), 2);
        assert_eq!(schubert_bound(0, 5, 3), 3);
        assert_eq!(schubert_bound(3, 2, 1), 7);
        assert_eq!(schubert_bound(-3, 2, 1), 7);
    }

    #[test]
    fn satellite_decision() {
        let j = KnotExpr::atom("J", 1);
        let l = KnotExpr::atom("L", 2);
        assert_eq!(is_satellite_of_first(&KnotExpr::ksat(j.clone(), l, 4, 5)), Some(Yes));
        assert_eq!(is_satellite_of_first(&KnotExpr::ksat(j.clone(), KnotExpr::Unknot, 1, 0)), Some(No));
        assert_eq!(is_satellite_of_first(&KnotExpr::ksat(j.clone(), KnotExpr::Fig8, 3, 0)), Some(Yes));
        let maybe = k("ksat(unknot, unknot, 1, 1)");
        assert_eq!(trivial_of(&maybe), Unknown);
        assert_eq!(is_satellite_of_first(&KnotExpr::ksat(j, maybe, 0, 0)), Some(Unknown));
        assert_eq!(is_satellite_of_first(&KnotExpr::Trefoil), None);
    }

    #[test]
    fn mirror_satellite_decision() {
        let e = k("ksat(unknot, fig8, 0, 3)");
        assert_eq!(is_satellite_of_second(&e), Some(No));
        let e = k("ksat(unknot, fig8, 2, 0)");
        assert_eq!(is_satellite_of_second(&e), Some(Yes));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_of(&KnotExpr::Kfam(4)), IntInterval::point(4));
        assert_eq!(genus_of(&k("wh0(kfam(1))")), IntInterval::point(1));
        assert_eq!(genus_of(&k("unknot # unknot")), IntInterval::point(0));
        assert_eq!(genus_of(&k("wh0(unknot)")), IntInterval::point(0));
        assert_eq!(genus_of(&k("trefoil # kfam(3)")), IntInterval::point(4));
    }

    #[test]
    fn ksat_genus_rules() {
        assert_eq!(genus_of(&k("ksat(fig8, unknot, 2, 0)")), IntInterval::point(0));
        assert_eq!(genus_of(&k("ksat(unknot, fig8, 0, 5)")), IntInterval::point(0));
        assert_eq!(genus_of(&k("ksat(fig8, fig8, 0, 0)")), IntInterval::point(1));
        assert_eq!(genus_of(&k("ksat(fig8, unknot, 3, -1)")), IntInterval::point(1));
        // satellite of L by the mirrored criterion
        assert_eq!(genus_of(&k("ksat(unknot, fig8, 2, 0)")), IntInterval::point(1));
        // both companions trivial, both twists nonzero: left open
        assert_eq!(genus_of(&k("ksat(unknot, unknot, 1, 1)")), IntInterval::new(0, Some(1)));
    }

    #[test]
    fn alexander_examples() {
        let sq = alexander_of(&KnotExpr::Kfam(2)).unwrap();
        assert!(sq.equiv(&LaurentPoly::from_i64s(0, &[4, -20, 33, -20, 4])));
        assert!(alexander_of(&k("wh0(trefoil)")).unwrap().is_one());
        assert!(alexander_of(&k("ksat(atom(J, genus=1), unknot, 0, -1)")).unwrap().is_unit());
        assert_eq!(alexander_of(&KnotExpr::Trefoil).unwrap(), LaurentPoly::from_i64s(0, &[1, -1, 1]));
        assert!(alexander_of(&KnotExpr::Fig8).unwrap().equiv(&LaurentPoly::from_i64s(0, &[1, -3, 1])));
        assert_eq!(alexander_of(&KnotExpr::atom("A", 2)), None);
        assert_eq!(alexander_of(&k("trefoil # atom(A, genus=1)")), None);
    }

    #[test]
    fn ksat_alexander_closed_form() {
        // mn t^2 + (1 - 2mn) t + mn
        for m in -4..=4i64 {
            for n in -4..=4i64 {
                let mn = m * n;
                let expected = LaurentPoly::from_i64s(0, &[mn, 1 - 2 * mn, mn]);
                let got = alexander_of(&KnotExpr::ksat(KnotExpr::Fig8, KnotExpr::Fig8, m, n)).unwrap();
                assert!(got.equiv(&expected), "m={m} n={n}: {got}");
            }
        }
    }

    #[test]
    fn slice_examples() {
        assert_eq!(slice_of(&KnotExpr::Kfam(3)), Yes);
        assert_eq!(slice_of(&k("wh0(kfam(3))")), Yes);
        assert_eq!(slice_of(&k("ksat(fig8, fig8, 1, 1)")), Unknown);
        assert_eq!(slice_of(&KnotExpr::Trefoil), No);
        assert_eq!(slice_of(&k("wh0(trefoil)")), Unknown);
        assert_eq!(slice_of(&k("kfam(1) # unknot")), Yes);
        assert_eq!(slice_of(&k("atom(A, genus=1, slice=no)")), No);
    }

    #[test]
    fn class_r_examples() {
        assert_eq!(class_r_of(&KnotExpr::Fig8), Yes);
        assert_eq!(class_r_of(&KnotExpr::Kfam(2)), Yes);
        assert_eq!(class_r_of(&KnotExpr::Trefoil), No);
        assert_eq!(class_r_of(&KnotExpr::Unknot), No);
        assert_eq!(class_r_of(&k("wh0(unknot)")), No);
        assert_eq!(class_r_of(&k("wh0(fig8)")), Unknown);
        let a = KnotExpr::Atom(Atom { name: "A".into(), genus: 2, torus: No, cable: No, slice: Unknown });
        assert_eq!(class_r_of(&a), Yes);
        assert_eq!(class_r_of(&k("atom(A, genus=2, torus=no)")), Unknown);
        assert_eq!(class_r_of(&k("atom(A, genus=2, cable=yes)")), No);
    }

    #[test]
    fn facts_json_shape() {
        let f = facts_of(&KnotExpr::Trefoil);
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["genus"], serde_json::json!({"lo": 1, "hi": 1}));
        assert_eq!(v["alexander"], serde_json::json!({"min_degree": 0, "coeffs": [1, -1, 1]}));
        assert_eq!(v["slice"], "no");
        assert_eq!(v["in_R"], "no");
        assert_eq!(v["trivial"], "no");
        assert_eq!(v["provenance"].as_array().unwrap().len(), 5);
        let v = serde_json::to_value(facts_of(&KnotExpr::atom("A", 1))).unwrap();
        assert_eq!(v["alexander"], "unknown");
    }

    #[test]
    fn interval_display() {
        assert_eq!(IntInterval::point(3).to_string(), "[3, 3]");
        assert_eq!(IntInterval::new(2, None).to_string(), "[2, inf]");
        assert_eq!(
            serde_json::to_string(&IntInterval::new(2, None)).unwrap(),
            r#"{"lo":2,"hi":null}"#
        );
    }
}
