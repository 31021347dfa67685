//! The ascending `O_π O_π′` series and the π-height of a factorisation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::Subgroup;
use crate::hall::HallPair;
use crate::primes::PrimeSet;
use crate::quotient::quotient;
use crate::radicals::o_pi_o_pi_prime;
use crate::subgroups::intersection;

/// A height `i` or `i + ½`, stored doubled so it stays an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Height(u32);

impl Height {
    pub fn from_doubled(twice: u32) -> Height {
        Height(twice)
    }

    pub fn doubled(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

#[derive(Debug, Clone)]
pub struct HeightData {
    /// `G_◁0 = 1 < G_◁1 < … = G`.
    pub series: Vec<Subgroup>,
    pub a_series: Vec<Subgroup>,
    pub b_series: Vec<Subgroup>,
    /// Least `i ≥ 1` at which `A` or `B` is absorbed.
    pub level: usize,
    pub height: Height,
}

/// Series and height for the factorisation in `pair`.
///
/// The absorption index is searched from `i = 1`, so a degenerate π (where
/// `A` or `B` is trivial from the start) gets height 1.
pub fn pi_height(pair: &HallPair) -> Result<HeightData> {
    let amb = pair.ambient();
    let universe = PrimeSet::of_order(amb.order());
    let pi = pair.pi.intersection(&universe);
    let mut series = vec![amb.group().trivial()];
    while series.last().expect("nonempty").order() < amb.order() {
        let q = quotient(amb, series.last().expect("nonempty"))?;
        let layer = o_pi_o_pi_prime(&q.group.whole(), &pi)?;
        series.push(q.preimage(&layer));
    }
    let a_series: Vec<Subgroup> = series
        .iter()
        .map(|s| intersection(&pair.a, s))
        .collect::<Result<_>>()?;
    let b_series: Vec<Subgroup> = series
        .iter()
        .map(|s| intersection(&pair.b, s))
        .collect::<Result<_>>()?;
    let level = (1..series.len().max(2))
        .find(|&i| {
            let i = i.min(series.len() - 1);
            a_series[i] == pair.a || b_series[i] == pair.b
        })
        .expect("the top of the series absorbs both");
    let i = level.min(series.len() - 1);
    let both = a_series[i] == pair.a && b_series[i] == pair.b;
    let height = Height(2 * level as u32 + u32::from(!both));
    Ok(HeightData {
        series,
        a_series,
        b_series,
        level,
        height,
    })
}
