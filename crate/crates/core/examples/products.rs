//! Build a product with interleaved axes and take it apart again.

use good_semigroups::canonical::is_almost_symmetric;
use good_semigroups::fixtures::med_semigroup;
use good_semigroups::structure::{decompose, jacobson, multiplicity_vector, product};
use good_semigroups::verify::{verify_identity, IdentityId};
use good_semigroups::GoodSemigroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = GoodSemigroup::numerical(&[3, 4, 5])?;
    let s = product(&[med_semigroup(), t], &[vec![0, 2], vec![1]])?;
    println!("product: {s}");

    let d = decompose(&s)?;
    for (block, c) in d.supports.iter().zip(&d.components) {
        println!("  axes {block:?}: {c}");
    }
    println!("e = {}", multiplicity_vector(&s)?);
    println!("J lower bound {}", jacobson(&s)?.lower());
    println!("almost symmetric: {}", is_almost_symmetric(&s)?);
    for id in [
        IdentityId::Lemma11,
        IdentityId::KProd,
        IdentityId::Prop28,
        IdentityId::Thm29,
    ] {
        print!("{}", verify_identity(id, &s)?);
    }
    Ok(())
}
