//! Exact classical knot invariants and certified first-order genus intervals
//! for a small language of knot constructions.
//!
//! ```
//! use knotfog::{fog_of, parse};
//!
//! let k = parse("wh0(kfam(3))").unwrap();
//! let g1 = fog_of(&k).interval;
//! assert_eq!((g1.lo, g1.hi), (4, Some(4)));
//! ```

pub mod acceptance;
pub mod classical;
pub mod error;
pub mod fog;
pub mod knotlang;
pub mod laurent;
pub mod random;
pub mod report;
pub mod seifert;

pub use classical::{
    alexander_of, class_r_of, facts_of, genus_of, is_satellite_of_first, schubert_bound, slice_of,
    trivial_of, IntInterval, KnotFacts, Provenance,
};
pub use error::{Error, Result};
pub use fog::{
    basis_min_lb, basis_min_lb_auto, fog_of, validate_certificate, BasisWitness, FogResult,
    WeakGropeCertificate,
};
pub use knotlang::{parse, validate, Clasp, KnotExpr, ParseError, TriState, Warning};
pub use laurent::LaurentPoly;
pub use report::Report;
pub use seifert::{BasisChange, IntMatrix, SeifertMatrix};
