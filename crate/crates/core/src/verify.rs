//! Machine checks of the structural identities and theorems, one report per
//! named identity, and seeded suites over random semigroups.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{difference, m_minus_e};
use crate::canonical::{is_almost_symmetric, is_med, is_symmetric, std_canonical};
use crate::error::{Error, Result};
use crate::generator::{random_good, random_good_ideal, GenConfig};
use crate::lattice::Point;
use crate::report::{Check, Report, Status};
use crate::semigroup::GoodSemigroup;
use crate::set::TruncatedSet;
use crate::structure::{
    decompose, factor_maximal_ideal, jacobson_of, multiplicity_vector_of, product_sets,
    Decomposition,
};
use crate::validate::validate;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Lemma11,
    KProd,
    Prop23,
    Thm24,
    Cor25,
    Prop28,
    Thm29,
    Cor210,
    Lemma14,
    Lemma15,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::Lemma11,
        IdentityId::KProd,
        IdentityId::Prop23,
        IdentityId::Thm24,
        IdentityId::Cor25,
        IdentityId::Prop28,
        IdentityId::Thm29,
        IdentityId::Cor210,
        IdentityId::Lemma14,
        IdentityId::Lemma15,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Lemma11 => "LEMMA11",
            IdentityId::KProd => "KPROD",
            IdentityId::Prop23 => "PROP23",
            IdentityId::Thm24 => "THM24",
            IdentityId::Cor25 => "COR25",
            IdentityId::Prop28 => "PROP28",
            IdentityId::Thm29 => "THM29",
            IdentityId::Cor210 => "COR210",
            IdentityId::Lemma14 => "LEMMA14",
            IdentityId::Lemma15 => "LEMMA15",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// `M - M` as a semigroup, if it is good.
fn rerooted(t: &TruncatedSet) -> Option<GoodSemigroup> {
    GoodSemigroup::new(t.clone()).ok()
}

pub fn verify_identity(id: IdentityId, s: &GoodSemigroup) -> Result<Report> {
    let mut r = Report::new(id.as_str());
    r.object("S", s.set());
    match id {
        IdentityId::Prop23 | IdentityId::Thm24 | IdentityId::Cor25 => {
            local_identity(id, s, &mut r)?
        }
        IdentityId::Lemma11
        | IdentityId::KProd
        | IdentityId::Prop28
        | IdentityId::Thm29
        | IdentityId::Cor210 => product_identity(id, s, &mut r)?,
        IdentityId::Lemma14 | IdentityId::Lemma15 => duality_identity(id, s, &mut r)?,
    }
    Ok(r)
}

fn local_identity(id: IdentityId, s: &GoodSemigroup, r: &mut Report) -> Result<()> {
    if !s.is_local() {
        r.push(Check::not_met("S local", "S is not local"));
        return Ok(());
    }
    if s.is_full() {
        r.push(Check::not_met("S ≠ N^h", "S equals ambient N^h"));
        return Ok(());
    }
    let k = std_canonical(s)?;
    let m = s.maximal_ideal()?;
    let e = s.multiplicity()?;
    let t = difference(&m, &m)?;
    let me = m_minus_e(s)?;
    r.object("K", &k);
    r.object("M", &m);
    r.object("M-M", &t);
    r.object("M-e", &me);
    let tg = rerooted(&t);
    let kt = match &tg {
        Some(tg) => {
            let kt = std_canonical(tg)?;
            r.object("K(M-M)", &kt);
            Some(kt)
        }
        None => None,
    };

    match id {
        IdentityId::Prop23 => match &kt {
            None => r.push(Check::not_met("M-M good", not_good_detail(&t))),
            Some(kt) => {
                let rhs = difference(&k, &t)?.translate(&e.checked_neg()?)?;
                r.object("(K-(M-M))-e", &rhs);
                r.push(Check::set_equal("K(M-M) = (K-(M-M))-e", kt, &rhs)?);
            }
        },
        IdentityId::Thm24 => {
            let lhs = is_almost_symmetric(s)?;
            let rhs = match &kt {
                Some(kt) => kt.equals(&me)?,
                None => false,
            };
            r.push(Check::agree(
                "almost symmetric iff (M-M good and K(M-M) = M-e)",
                lhs,
                rhs,
            ));
        }
        IdentityId::Cor25 => {
            let lhs = is_almost_symmetric(s)? && is_med(s)?;
            let rhs = match &tg {
                Some(tg) => is_symmetric(tg)?,
                None => false,
            };
            r.push(Check::agree(
                "(almost symmetric and M-M = M-e) iff M-M symmetric",
                lhs,
                rhs,
            ));
        }
        _ => unreachable!("local identities only"),
    }
    Ok(())
}

fn not_good_detail(t: &TruncatedSet) -> String {
    match validate(t, true).first() {
        Some(f) => format!("not a good semigroup: {f}"),
        None => "not a good semigroup".into(),
    }
}

fn product_identity(id: IdentityId, s: &GoodSemigroup, r: &mut Report) -> Result<()> {
    let d = decompose(s)?;
    let j = jacobson_of(&d)?;
    let e = multiplicity_vector_of(&d)?;
    let t = difference(&j, &j)?;
    r.object("J", &j);
    r.object("J-J", &t);
    match id {
        IdentityId::Lemma11 => {
            let parts = component_sets(&d, |c| {
                let m = factor_maximal_ideal(c)?;
                difference(&m, &m)
            })?;
            let rhs = product_sets(&parts, &d.supports)?;
            r.object("prod(M_i-M_i)", &rhs);
            r.push(Check::set_equal("J-J = prod(M_i-M_i)", &t, &rhs)?);
        }
        IdentityId::KProd => {
            let k = std_canonical(s)?;
            let parts = component_sets(&d, std_canonical)?;
            let rhs = product_sets(&parts, &d.supports)?;
            r.object("K", &k);
            r.object("prod(K(S_i))", &rhs);
            r.push(Check::set_equal("K(S) = prod(K(S_i))", &k, &rhs)?);
        }
        IdentityId::Prop28 => {
            if d.components.iter().any(GoodSemigroup::is_full) {
                r.push(Check::not_met(
                    "no factor equals N^h_i",
                    "a factor equals its ambient orthant",
                ));
                return Ok(());
            }
            let Some(tg) = rerooted(&t) else {
                r.push(Check::not_met("J-J good", not_good_detail(&t)));
                return Ok(());
            };
            let k = std_canonical(s)?;
            let kt = std_canonical(&tg)?;
            let rhs = difference(&k, &t)?.translate(&e.checked_neg()?)?;
            r.object("K(J-J)", &kt);
            r.object("(K-(J-J))-e", &rhs);
            r.push(Check::set_equal("K(J-J) = (K-(J-J))-e", &kt, &rhs)?);
        }
        IdentityId::Thm29 | IdentityId::Cor210 => {
            let je = j.translate(&e.checked_neg()?)?;
            r.object("J-e", &je);
            let tg = rerooted(&t);
            let almost = is_almost_symmetric(s)?;
            if id == IdentityId::Thm29 {
                let rhs = match &tg {
                    Some(tg) => std_canonical(tg)?.equals(&je)?,
                    None => false,
                };
                r.push(Check::agree(
                    "almost symmetric iff (J-J good and K(J-J) = J-e)",
                    almost,
                    rhs,
                ));
            } else {
                let lhs = almost && t.equals(&je)?;
                let rhs = match &tg {
                    Some(tg) => is_symmetric(tg)?,
                    None => false,
                };
                r.push(Check::agree(
                    "(almost symmetric and J-J = J-e) iff J-J symmetric",
                    lhs,
                    rhs,
                ));
            }
        }
        _ => unreachable!("product identities only"),
    }
    Ok(())
}

fn component_sets(
    d: &Decomposition,
    f: impl Fn(&GoodSemigroup) -> Result<TruncatedSet>,
) -> Result<Vec<TruncatedSet>> {
    d.components.iter().map(f).collect()
}

/// Good relative ideals used by the duality checks: `S`, `K(S)`, `J` and
/// three seeded random ideals.
pub fn sample_ideals(s: &GoodSemigroup) -> Result<Vec<(String, TruncatedSet)>> {
    let mut out = vec![
        ("S".to_string(), s.set().clone()),
        ("K".to_string(), std_canonical(s)?),
        ("J".to_string(), jacobson_of(&decompose(s)?)?),
    ];
    let cfg = GenConfig::new(s.conductor().offset(1)?, 0);
    for seed in 0..3 {
        out.push((
            format!("E{seed}"),
            random_good_ideal(s, &cfg.with_seed(seed))?,
        ));
    }
    Ok(out)
}

fn duality_identity(id: IdentityId, s: &GoodSemigroup, r: &mut Report) -> Result<()> {
    let k = std_canonical(s)?;
    let shifted = k.translate(&Point::splat(s.dim(), 1))?;
    let samples = sample_ideals(s)?;
    r.object("K", &k);
    for (name, i) in &samples {
        r.object(name, i);
    }
    match id {
        IdentityId::Lemma14 => {
            for (kname, kk) in [("K", &k), ("K+1", &shifted)] {
                r.push(Check::set_equal(
                    format!("{kname}-{kname} = S"),
                    &difference(kk, kk)?,
                    s.set(),
                )?);
                for (name, i) in &samples {
                    let bidual = difference(kk, &difference(kk, i)?)?;
                    r.push(Check::set_equal(
                        format!("{kname}-({kname}-{name}) = {name}"),
                        &bidual,
                        i,
                    )?);
                }
            }
        }
        IdentityId::Lemma15 => {
            let duals: Vec<TruncatedSet> = samples
                .iter()
                .map(|(_, i)| difference(&k, i))
                .collect::<Result<_>>()?;
            for ((name, _), dual) in samples.iter().zip(&duals) {
                let check = match validate(dual, false).first() {
                    None => Check::pass(format!("K-{name} good"), "no findings"),
                    Some(f) => Check::fail(
                        format!("K-{name} good"),
                        f.witness.first().cloned(),
                        f.to_string(),
                    ),
                };
                r.push(check);
            }
            for (a, (na, ea)) in samples.iter().enumerate() {
                for (b, (nb, eb)) in samples.iter().enumerate() {
                    if a != b {
                        r.push(Check::agree(
                            format!("{na} ⊆ {nb} iff K-{nb} ⊆ K-{na}"),
                            ea.is_subset(eb)?,
                            duals[b].is_subset(&duals[a])?,
                        ));
                    }
                }
            }
        }
        _ => unreachable!("duality identities only"),
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub dim: usize,
    pub cap: Point,
    pub count: usize,
    pub seed: u64,
    pub identities: Vec<IdentityId>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_not_met: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub identity: IdentityId,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Point>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub index: usize,
    pub seed: u64,
    pub local: bool,
    pub conductor: Point,
    pub results: BTreeMap<IdentityId, Status>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub report_version: u32,
    pub config: SuiteConfig,
    pub instances: Vec<InstanceResult>,
    pub summary: BTreeMap<IdentityId, Tally>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.values().all(|t| t.fail == 0)
    }
}

fn run_instance(config: &SuiteConfig, index: usize, seed: u64) -> Result<InstanceResult> {
    let s = random_good(&GenConfig::new(config.cap.clone(), seed))?;
    let mut results = BTreeMap::new();
    let mut failures = Vec::new();
    for &id in &config.identities {
        let report = verify_identity(id, &s)?;
        for c in report.failures() {
            failures.push(Failure {
                identity: id,
                check: c.name.clone(),
                witness: c.witness.clone(),
                detail: c.detail.clone(),
            });
        }
        results.insert(id, report.status);
    }
    Ok(InstanceResult {
        index,
        seed,
        local: s.is_local(),
        conductor: s.conductor().clone(),
        results,
        failures,
    })
}

/// Runs every identity on `count` random semigroups. Instances are spread
/// over threads; the report lists them by index.
pub fn verify_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.cap.dim() != config.dim {
        return Err(Error::DimensionMismatch {
            expected: config.dim,
            found: config.cap.dim(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let seeds: Vec<u64> = (0..config.count).map(|_| rng.next_u64()).collect();
    let threads = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(config.count.max(1));
    let mut slots: Vec<Option<Result<InstanceResult>>> = (0..config.count).map(|_| None).collect();
    std::thread::scope(|scope| {
        let chunk = config.count.div_ceil(threads).max(1);
        for (c, slot_chunk) in slots.chunks_mut(chunk).enumerate() {
            let seeds = &seeds;
            scope.spawn(move || {
                for (k, slot) in slot_chunk.iter_mut().enumerate() {
                    let index = c * chunk + k;
                    *slot = Some(run_instance(config, index, seeds[index]));
                }
            });
        }
    });
    let instances = slots
        .into_iter()
        .map(|s| s.expect("every slot filled"))
        .collect::<Result<Vec<_>>>()?;

    let mut summary: BTreeMap<IdentityId, Tally> = config
        .identities
        .iter()
        .map(|&id| (id, Tally::default()))
        .collect();
    for inst in &instances {
        for (id, status) in &inst.results {
            let t = summary.get_mut(id).expect("identity configured");
            match status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::HypothesisNotMet => t.hypothesis_not_met += 1,
            }
        }
    }
    Ok(SuiteReport {
        report_version: REPORT_VERSION,
        config: config.clone(),
        instances,
        summary,
    })
}
