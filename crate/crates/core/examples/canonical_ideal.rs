//! The standard canonical ideal of the MED fixture and the duality it gives.

use good_semigroups::algebra::difference;
use good_semigroups::canonical::{is_canonical_ideal, std_canonical};
use good_semigroups::fixtures::med_semigroup;
use good_semigroups::format::serialize;
use good_semigroups::render::ascii;
use good_semigroups::Point;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = med_semigroup();
    let k = std_canonical(&s)?;
    print!("{}", serialize(&k));
    print!("{}", ascii(s.set(), Some(&k))?);

    println!("K - K = S: {}", difference(&k, &k)?.equals(s.set())?);
    let moved = k.translate(&Point::from([3, -1]))?;
    match is_canonical_ideal(&s, &moved)? {
        Some(x) => println!("K + (3,-1) is canonical, shift {x}"),
        None => println!("K + (3,-1) is not canonical"),
    }
    Ok(())
}
