//! Write the canonical-ideal picture of the non-MED fixture as SVG.
//!
//! ```text
//! cargo run --example render -- canonical.svg
//! ```

use good_semigroups::canonical::std_canonical;
use good_semigroups::fixtures::non_med_semigroup;
use good_semigroups::render::{ascii, svg};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = non_med_semigroup();
    let k = std_canonical(&s)?;
    print!("{}", ascii(s.set(), Some(&k))?);
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, svg(s.set(), Some(&k))?)?;
        println!("wrote {path}");
    }
    Ok(())
}
