//! Both almost-symmetric fixtures, classified and checked against the
//! characterization through `M - M`.

use good_semigroups::canonical::classify;
use good_semigroups::fixtures::{med_semigroup, non_med_semigroup};
use good_semigroups::verify::{verify_identity, IdentityId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, s) in [("med", med_semigroup()), ("non-med", non_med_semigroup())] {
        let c = classify(&s)?;
        println!(
            "{name}: symmetric={} almost_symmetric={} med={:?}",
            c.symmetric, c.almost_symmetric, c.med
        );
        for id in [IdentityId::Prop23, IdentityId::Thm24, IdentityId::Cor25] {
            print!("{}", verify_identity(id, &s)?);
        }
    }
    Ok(())
}
