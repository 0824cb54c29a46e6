//! Exhaustive enumeration of small good semigroups.
//!
//! ```text
//! cargo run --example enumerate -- 2 4 4
//! ```

use std::time::Instant;

use good_semigroups::canonical::is_almost_symmetric;
use good_semigroups::generator::for_each_good;
use good_semigroups::Point;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (h, cap) = match args.as_slice() {
        [] => (2, Point::from([3, 3])),
        [h, rest @ ..] => (*h as usize, Point::new(rest.iter().copied())),
    };
    let start = Instant::now();
    let (mut local, mut almost_symmetric) = (0, 0);
    let total = for_each_good(h, &cap, |s| {
        if s.is_local() {
            local += 1;
        }
        if is_almost_symmetric(&s).unwrap_or(false) {
            almost_symmetric += 1;
        }
    })?;
    println!("h = {h}, cap = {cap}: {total} good semigroups");
    println!("  local: {local}");
    println!("  almost symmetric: {almost_symmetric}");
    println!("  elapsed: {:.2?}", start.elapsed());
    Ok(())
}
