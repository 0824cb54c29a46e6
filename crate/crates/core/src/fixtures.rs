//! Bundled reference semigroups.

use crate::format::parse;
use crate::semigroup::GoodSemigroup;

/// Local, almost symmetric, of maximal embedding dimension; conductor (4,4).
pub const MED_SOURCE: &str = include_str!("../fixtures/almost_symmetric_med.gsg");

/// Local, almost symmetric, not of maximal embedding dimension; conductor (6,6).
pub const NON_MED_SOURCE: &str = include_str!("../fixtures/almost_symmetric_non_med.gsg");

pub fn med_semigroup() -> GoodSemigroup {
    GoodSemigroup::new(parse(MED_SOURCE).expect("bundled fixture parses"))
        .expect("bundled fixture is good")
}

pub fn non_med_semigroup() -> GoodSemigroup {
    GoodSemigroup::new(parse(NON_MED_SOURCE).expect("bundled fixture parses"))
        .expect("bundled fixture is good")
}
