use knotfog::acceptance::random_standard_seifert;
use knotfog::fog::curve_lower_bound;
use knotfog::random::random_expr;
use knotfog::{
    fog_of, genus_of, parse, schubert_bound, BasisChange, IntMatrix, KnotExpr, LaurentPoly,
    SeifertMatrix,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..=4, prop::collection::vec(-20i64..=20, 0..6))
        .prop_map(|(k, c)| LaurentPoly::from_i64s(k, &c))
}

fn expr(seed: u64, depth: usize) -> KnotExpr {
    random_expr(&mut ChaCha8Rng::seed_from_u64(seed), depth)
}

fn square(n: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-range..=range, n), n)
}

/// Cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut total = LaurentPoly::zero();
    for col in 0..n {
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][col] * &cofactor_det(&minor);
        total = if col % 2 == 0 { total + term } else { total - term };
    }
    total
}

fn alexander_by_cofactors(v: &[Vec<i64>]) -> LaurentPoly {
    let t = LaurentPoly::t();
    let n = v.len();
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| LaurentPoly::from(v[i][j]) - &t * &LaurentPoly::from(v[j][i]))
                .collect()
        })
        .collect();
    cofactor_det(&m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn canonical_form(a in poly(), k in -6i64..=6, neg in any::<bool>()) {
        let c = a.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        let unit = if neg { LaurentPoly::from_i64s(k, &[-1]) } else { LaurentPoly::monomial(BigInt::from(1), k) };
        let b = &a * &unit;
        prop_assert!(a.equiv(&b));
        prop_assert_eq!(b.canonical(), c.clone());
        if !a.is_zero() {
            prop_assert_eq!(c.min_degree(), 0);
            prop_assert!(c.leading_coeff().unwrap() > &BigInt::from(0));
        }
    }

    #[test]
    fn equivalence_matches_unit_search(a in poly(), b in poly()) {
        let mut found = false;
        for k in -12..=12 {
            for s in [1i64, -1] {
                if &a * &LaurentPoly::from_i64s(k, &[s]) == b {
                    found = true;
                }
            }
        }
        prop_assert_eq!(a.equiv(&b), found);
    }

    #[test]
    fn pow_recursion(a in poly(), k in 0u32..6) {
        prop_assert_eq!(a.pow(k + 1), &a.pow(k) * &a);
        prop_assert!(a.pow(0).is_one());
    }

    #[test]
    fn genus_adds_under_sum(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (expr(s1, 3), expr(s2, 3));
        let (ga, gb) = (genus_of(&a), genus_of(&b));
        let g = genus_of(&KnotExpr::sum(a, b));
        prop_assert_eq!(g.lo, ga.lo + gb.lo);
        prop_assert_eq!(g.hi, ga.hi.zip(gb.hi).map(|(x, y)| x + y));
    }

    #[test]
    fn schubert_monotone(w in -5i64..=5, g in 0u64..20, h in 0u64..20) {
        prop_assert!(schubert_bound(w, g + 1, h) >= schubert_bound(w, g, h));
        prop_assert!(schubert_bound(w, g, h + 1) > schubert_bound(w, g, h));
        prop_assert!(schubert_bound(w.abs() + 1, g, h) >= schubert_bound(w, g, h));
        prop_assert_eq!(schubert_bound(-w, g, h), schubert_bound(w, g, h));
    }

    #[test]
    fn interval_well_formed(seed in any::<u64>()) {
        let e = expr(seed, 4);
        let f = fog_of(&e);
        prop_assert!(f.hi().map_or(true, |h| h >= f.lo()));
        prop_assert!(f.lo() >= 2 * genus_of(&e).lo);
        prop_assert!(f.provenance.iter().any(|r| r.bound == knotfog::fog::Bound::Lo));
    }

    #[test]
    fn render_parse_round_trip(seed in any::<u64>()) {
        let e = expr(seed, 5);
        prop_assert_eq!(parse(&e.render()).unwrap(), e);
    }

    #[test]
    fn curve_bound_floor(u in -9i64..=9, v in -9i64..=9, ga in 0u64..6, gb in 0u64..6) {
        let b = curve_lower_bound(u, v, ga, gb);
        prop_assert!(b >= 1);
        prop_assert!(b >= u.unsigned_abs() * ga && b >= v.unsigned_abs() * gb);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alexander_invariant_under_unimodular_change(
        g in 1usize..=3, seed in any::<u64>(), len in 0usize..20,
    ) {
        let v = random_standard_seifert(g, &mut ChaCha8Rng::seed_from_u64(seed));
        let p = BasisChange::random_unimodular(2 * g, seed.wrapping_add(1), len);
        let w = v.change_basis(&p).unwrap();
        prop_assert!(w.alexander().equiv(&v.alexander()));
    }

    #[test]
    fn alexander_invariant_any_matrix(n in 1usize..=3, seed in any::<u64>(), len in 0usize..20, rows in square(6, 4)) {
        let size = 2 * n;
        let rows: Vec<Vec<i64>> = rows[..size].iter().map(|r| r[..size].to_vec()).collect();
        let v = SeifertMatrix::from_rows(rows).unwrap();
        let p = BasisChange::random_unimodular(size, seed, len);
        let w = v.change_basis(&p).unwrap();
        prop_assert!(w.alexander().equiv(&v.alexander()));
    }

    #[test]
    fn symplectic_change_keeps_form(g in 1usize..=3, seed in any::<u64>(), len in 0usize..20) {
        let v = random_standard_seifert(g, &mut ChaCha8Rng::seed_from_u64(seed));
        let p = BasisChange::random_symplectic(g, seed ^ 0xabc, len).unwrap();
        prop_assert!(p.is_symplectic());
        let w = v.change_basis(&p).unwrap();
        prop_assert!(w.intersection().unwrap().1);
        prop_assert_eq!(w.alexander().eval(1).unwrap(), v.alexander().eval(1).unwrap());
    }

    #[test]
    fn standard_form_gives_unit_at_one(g in 1usize..=3, seed in any::<u64>()) {
        let v = random_standard_seifert(g, &mut ChaCha8Rng::seed_from_u64(seed));
        let at1 = v.alexander().eval(1).unwrap();
        prop_assert!(at1.is_integer() && (at1.numer() == &BigInt::from(1) || at1.numer() == &BigInt::from(-1)));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(n in 1usize..=3, rows in square(6, 5)) {
        let size = 2 * n;
        let rows: Vec<Vec<i64>> = rows[..size].iter().map(|r| r[..size].to_vec()).collect();
        let fast = SeifertMatrix::from_rows(rows.clone()).unwrap().alexander();
        prop_assert_eq!(fast, alexander_by_cofactors(&rows));
    }

    #[test]
    fn integer_det_matches_cofactors(n in 1usize..=5, rows in square(5, 6)) {
        let rows: Vec<Vec<i64>> = rows[..n].iter().map(|r| r[..n].to_vec()).collect();
        let m: Vec<Vec<LaurentPoly>> = rows.iter().map(|r| r.iter().map(|&x| LaurentPoly::from(x)).collect()).collect();
        let expected = cofactor_det(&m);
        let det = IntMatrix::new(rows).unwrap().det();
        prop_assert_eq!(LaurentPoly::constant(det), expected);
    }
}

#[test]
fn family_is_separated_by_g1() {
    let values: Vec<u64> = (1..=12).map(|n| fog_of(&KnotExpr::wh0(KnotExpr::Kfam(n))).lo()).collect();
    assert_eq!(values, (2..=13).collect::<Vec<_>>());
    for n in 1..=12u32 {
        let e = KnotExpr::wh0(KnotExpr::Kfam(n));
        assert_eq!(genus_of(&e).as_point(), Some(1));
    }
}

#[test]
fn g1_injective_on_family_companions() {
    let mut seen = std::collections::HashSet::new();
    for n in 1..=12u32 {
        let f = fog_of(&KnotExpr::wh0(KnotExpr::Kfam(n)));
        assert_eq!(f.hi(), Some(f.lo()));
        assert!(seen.insert(f.lo()), "kfam({n}) collides");
    }
}
