//! Seeded identity checks over random semigroups.
//!
//! ```text
//! cargo run --release --example random_suite -- 100 8 8
//! ```

use good_semigroups::verify::{verify_suite, IdentityId, SuiteConfig};
use good_semigroups::Point;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let count = args.first().map_or(Ok(40), |a| a.parse())?;
    let cap: Vec<i64> = args
        .iter()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let cap = if cap.is_empty() {
        Point::from([6, 6])
    } else {
        Point::from(cap)
    };
    let config = SuiteConfig {
        dim: cap.dim(),
        cap,
        count,
        seed: 1,
        identities: IdentityId::ALL.to_vec(),
    };
    let report = verify_suite(&config)?;
    for (id, t) in &report.summary {
        println!(
            "{:<8} pass {:>4}  fail {:>4}  n/a {:>4}",
            id.as_str(),
            t.pass,
            t.fail,
            t.hypothesis_not_met
        );
    }
    for inst in report.instances.iter().filter(|i| !i.failures.is_empty()) {
        println!(
            "instance {} (seed {}): {:?}",
            inst.index, inst.seed, inst.failures
        );
    }
    Ok(())
}
