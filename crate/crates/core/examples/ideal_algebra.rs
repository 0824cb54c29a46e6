//! Sums, differences and duals of relative ideals.

use good_semigroups::algebra::{bidual, difference, is_good_ideal, m_minus_e, m_minus_m, sum};
use good_semigroups::canonical::std_canonical;
use good_semigroups::fixtures::non_med_semigroup;
use good_semigroups::generator::{random_good_ideal, GenConfig};
use good_semigroups::render::ascii;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = non_med_semigroup();
    let m = s.maximal_ideal()?;

    let mm = m_minus_m(&s)?;
    let me = m_minus_e(&s)?;
    println!("M - M (filled) against M - e (open):");
    print!("{}", ascii(&mm, Some(&me))?);

    let cfg = GenConfig::new(s.conductor().offset(1)?, 7);
    let e = random_good_ideal(&s, &cfg)?;
    println!(
        "random ideal E, lower {} conductor {}",
        e.lower(),
        e.conductor()
    );
    println!("  E good: {}", is_good_ideal(&s, &e)?);
    println!("  E + M within E: {}", sum(&e, &m)?.is_subset(&e)?);
    let k = std_canonical(&s)?;
    let dual = difference(&k, &e)?;
    println!("  K - E good: {}", is_good_ideal(&s, &dual)?);
    println!("  K - (K - E) = E: {}", difference(&k, &dual)?.equals(&e)?);
    // S is not symmetric, so dualizing into S loses information.
    println!("  S - (S - E) = E: {}", bidual(&s, &e)?.equals(&e)?);
    Ok(())
}
