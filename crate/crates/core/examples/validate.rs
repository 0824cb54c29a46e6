//! Check the axioms on a `.gsg` file, or on a built-in broken set.
//!
//! ```text
//! cargo run --example validate -- fixtures/almost_symmetric_med.gsg
//! ```

use good_semigroups::format::parse;
use good_semigroups::validate::validate;
use good_semigroups::{Point, TruncatedSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = match std::env::args().nth(1) {
        Some(path) => parse(&std::fs::read_to_string(path)?)?,
        // (1,0) and (0,0) share the second coordinate but nothing lifts them.
        None => TruncatedSet::new(
            Point::from([0, 0]),
            Point::from([2, 2]),
            [[0, 0], [1, 0], [2, 0], [2, 2]].map(Point::from),
        )?,
    };
    let findings = validate(&t, true);
    if findings.is_empty() {
        println!("good semigroup, conductor {}", t.conductor());
    }
    for f in &findings {
        println!("{f}");
    }
    Ok(())
}
