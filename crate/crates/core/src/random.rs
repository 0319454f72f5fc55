//! Seeded generators for random knot expressions.

use rand::Rng;

use crate::knotlang::{Atom, Clasp, KnotExpr, TriState};

const ATOM_NAMES: [&str; 4] = ["J", "L", "A1", "knot_b"];

fn tri(rng: &mut impl Rng) -> TriState {
    match rng.gen_range(0..3) {
        0 => TriState::Yes,
        1 => TriState::No,
        _ => TriState::Unknown,
    }
}

fn leaf(rng: &mut impl Rng) -> KnotExpr {
    match rng.gen_range(0..6) {
        0 => KnotExpr::Unknot,
        1 => KnotExpr::Trefoil,
        2 => KnotExpr::Fig8,
        3 | 4 => KnotExpr::Kfam(rng.gen_range(1..=5)),
        _ => KnotExpr::Atom(Atom {
            name: ATOM_NAMES[rng.gen_range(0..ATOM_NAMES.len())].to_string(),
            genus: rng.gen_range(1..=4),
            torus: tri(rng),
            cable: tri(rng),
            slice: tri(rng),
        }),
    }
}

/// Random expression of depth at most `max_depth` (at least 1).
pub fn random_expr(rng: &mut impl Rng, max_depth: usize) -> KnotExpr {
    if max_depth <= 1 || rng.gen_bool(0.35) {
        return leaf(rng);
    }
    let d = max_depth - 1;
    match rng.gen_range(0..3) {
        0 => KnotExpr::Wh0 {
            companion: Box::new(random_expr(rng, d)),
            clasp: if rng.gen_bool(0.5) { Clasp::Positive } else { Clasp::Negative },
        },
        1 => KnotExpr::ksat(
            random_expr(rng, d),
            random_expr(rng, d),
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
        ),
        _ => KnotExpr::sum(random_expr(rng, d), random_expr(rng, d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_depth_and_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let e = random_expr(&mut a, 4);
            assert!(e.depth() <= 4);
            assert_eq!(e, random_expr(&mut b, 4));
        }
    }
}
