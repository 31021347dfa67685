//! Per-(group, π) verification records and the parallel check driver.

use std::sync::Arc;

use hallcheck_core::conjecture::{con_check_pair, scon_details, ConReport};
use hallcheck_core::oracles::{run_all, OracleOutcome};
use hallcheck_core::{hall_pair, FiniteGroup, PrimeSet};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cache::Cache;
use crate::error::Result;

/// Oracles are skipped above this order; their sweeps do not scale.
pub const ORACLE_ORDER_LIMIT: u64 = 400;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub group: String,
    pub content_hash: String,
    pub order: u64,
    pub pi: PrimeSet,
    pub con: ConReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracles: Option<Vec<OracleOutcome>>,
    /// The only field allowed to differ between identical runs.
    pub computed_at: String,
}

impl ResultRecord {
    pub fn is_violation(&self) -> bool {
        !self.con.is_con_star
    }

    pub fn refutations(&self) -> impl Iterator<Item = &OracleOutcome> {
        self.oracles.iter().flatten().filter(|o| o.refuted())
    }

    pub fn cache_key(&self) -> String {
        cache_key(
            &self.content_hash,
            &self.pi,
            self.oracles.is_some(),
            self.con.is_scon.is_some(),
        )
    }
}

pub fn cache_key(hash: &str, pi: &PrimeSet, oracles: bool, scon: bool) -> String {
    format!("{hash}|{pi}|oracles={oracles}|scon={scon}")
}

/// SHA-256 of the degree and the sorted element images. Conjugate
/// realisations of one abstract group hash differently.
pub fn content_hash(group: &FiniteGroup) -> String {
    let mut elems: Vec<&[u32]> = group.elements().iter().map(|p| p.images()).collect();
    elems.sort_unstable();
    let mut h = Sha256::new();
    h.update((group.degree() as u64).to_le_bytes());
    for e in elems {
        for &x in e {
            h.update(x.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiPolicy {
    /// One π from each complementary pair: those containing the smallest prime.
    All,
    Explicit(Vec<PrimeSet>),
}

impl PiPolicy {
    pub fn sets_for(&self, order: u64) -> Vec<PrimeSet> {
        match self {
            PiPolicy::All => {
                let universe = PrimeSet::of_order(order);
                match universe.primes().first() {
                    None => vec![PrimeSet::empty()],
                    Some(&p) => universe
                        .subsets()
                        .into_iter()
                        .filter(|s| s.contains(p))
                        .collect(),
                }
            }
            PiPolicy::Explicit(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    pub oracles: bool,
    pub scon: bool,
}

#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: Arc<FiniteGroup>,
}

fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

pub fn check_one(
    name: &str,
    hash: &str,
    group: &Arc<FiniteGroup>,
    pi: &PrimeSet,
    opts: CheckOptions,
) -> Result<ResultRecord> {
    let amb = group.whole();
    let pair = hall_pair(&amb, pi)?;
    let con = if opts.scon {
        scon_details(&pair)?.0
    } else {
        con_check_pair(&pair)
    };
    let oracles = if opts.oracles && group.order() <= ORACLE_ORDER_LIMIT {
        Some(run_all(&amb, pi)?)
    } else {
        None
    };
    Ok(ResultRecord {
        group: name.to_string(),
        content_hash: hash.to_string(),
        order: group.order(),
        pi: pi.clone(),
        con,
        oracles,
        computed_at: timestamp(),
    })
}

/// Every `(group, π)` record, in corpus order and then π order, whatever
/// the completion order of the workers. Cached records are reused unless
/// `recompute`; fresh ones are appended to the cache afterwards.
pub fn run_checks(
    groups: &[NamedGroup],
    policy: &PiPolicy,
    opts: CheckOptions,
    jobs: usize,
    cache: Option<&mut Cache>,
    recompute: bool,
) -> Result<Vec<ResultRecord>> {
    let hashes: Vec<String> = groups.iter().map(|g| content_hash(&g.group)).collect();
    let mut slots: Vec<Option<ResultRecord>> = Vec::new();
    let mut tasks = Vec::new();
    for (gi, g) in groups.iter().enumerate() {
        for pi in policy.sets_for(g.group.order()) {
            let oracles = opts.oracles && g.group.order() <= ORACLE_ORDER_LIMIT;
            let key = cache_key(&hashes[gi], &pi, oracles, opts.scon);
            let hit = match (&cache, recompute) {
                (Some(c), false) => c.get(&key).cloned(),
                _ => None,
            };
            match hit {
                Some(mut r) => {
                    r.group = g.name.clone();
                    slots.push(Some(r));
                }
                None => {
                    tasks.push((slots.len(), gi, pi));
                    slots.push(None);
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(std::io::Error::other)?;
    let fresh: Vec<(usize, ResultRecord)> = pool.install(|| {
        tasks
            .par_iter()
            .map(|(slot, gi, pi)| {
                let g = &groups[*gi];
                check_one(&g.name, &hashes[*gi], &g.group, pi, opts).map(|r| (*slot, r))
            })
            .collect::<Result<_>>()
    })?;
    if let Some(c) = cache {
        c.append(fresh.iter().map(|(_, r)| r))?;
    }
    for (slot, r) in fresh {
        slots[slot] = Some(r);
    }
    Ok(slots
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub records: usize,
    pub violations: usize,
    pub refutations: usize,
    pub oracle_outcomes: usize,
    pub unchecked: usize,
}

impl Summary {
    pub fn of(groups: usize, records: &[ResultRecord]) -> Summary {
        let outcomes = || records.iter().flat_map(|r| r.oracles.iter().flatten());
        Summary {
            groups,
            records: records.len(),
            violations: records.iter().filter(|r| r.is_violation()).count(),
            refutations: records.iter().map(|r| r.refutations().count()).sum(),
            oracle_outcomes: outcomes().count(),
            unchecked: outcomes().filter(|o| !o.checked).count(),
        }
    }

    pub fn clean(&self) -> bool {
        self.violations == 0 && self.refutations == 0
    }
}
