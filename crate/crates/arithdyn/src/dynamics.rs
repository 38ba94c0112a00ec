//! Exact enumeration of rational periodic points up to a period cap, orbit
//! records, minimal-period classification, and the finite-field cycle census.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::homog::{rational_roots, HomogForm};
use crate::point::ProjPoint;
use crate::ratmap::{FpMap, RationalMap};
use crate::{Error, Result};

/// A rational periodic point together with its minimal period.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PeriodicPoint {
    pub point: ProjPoint,
    pub minimal_period: u32,
}

/// Forward orbit of a starting point, cut off at `max_steps`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub start: ProjPoint,
    /// start, phi(start), phi^2(start), ... up to the first repeat or cap.
    pub points: Vec<ProjPoint>,
    /// None when no repeat occurred within the cap.
    pub tail_length: Option<u32>,
    pub cycle_length: Option<u32>,
}

/// Iterates until a repeat or the step cap; a repeat yields tail and cycle
/// lengths, cap exhaustion leaves them as None.
pub fn orbit(map: &RationalMap, start: &ProjPoint, max_steps: u32) -> OrbitRecord {
    assert!(max_steps >= 1);
    let mut points = vec![start.clone()];
    let mut seen: BTreeMap<ProjPoint, u32> = BTreeMap::new();
    seen.insert(start.clone(), 0);
    let mut cur = start.clone();
    for i in 1..=max_steps {
        cur = map.evaluate(&cur);
        if let Some(&first) = seen.get(&cur) {
            return OrbitRecord {
                start: start.clone(),
                points,
                tail_length: Some(first),
                cycle_length: Some(i - first),
            };
        }
        seen.insert(cur.clone(), i);
        points.push(cur.clone());
    }
    OrbitRecord {
        start: start.clone(),
        points,
        tail_length: None,
        cycle_length: None,
    }
}

/// Smallest n <= cap with phi^n(P) = P, by direct iteration.
pub fn minimal_period(map: &RationalMap, p: &ProjPoint, cap: u32) -> Option<u32> {
    let mut cur = p.clone();
    for n in 1..=cap {
        cur = map.evaluate(&cur);
        if cur == *p {
            return Some(n);
        }
    }
    None
}

/// Every rational periodic point of minimal period <= cap.
///
/// For each n the fixed points of phi^n are the rational roots of
/// H_n = Y * F_n - X * G_n; minimal periods are assigned by direct
/// iteration and duplicates merged on normalized coordinates.
pub fn periodic_points(map: &RationalMap, period_cap: u32) -> Result<Vec<PeriodicPoint>> {
    assert!(period_cap >= 1);
    let mut found: BTreeMap<ProjPoint, u32> = BTreeMap::new();
    for n in 1..=period_cap {
        let iter = map.iterate(n)?;
        let h = HomogForm::y()
            .mul(iter.numerator())
            .sub(&HomogForm::x().mul(iter.denominator()))?;
        if h.is_zero() {
            // phi^n is the identity: every point is periodic; reject loudly
            return Err(Error::Precondition(format!(
                "phi^{n} is the identity map; periodic points are not a finite set"
            )));
        }
        for root in rational_roots(&h)? {
            if found.contains_key(&root) {
                continue;
            }
            let m = minimal_period(map, &root, n)
                .expect("a root of H_n is periodic with period dividing n");
            found.insert(root, m);
        }
    }
    Ok(found
        .into_iter()
        .map(|(point, minimal_period)| PeriodicPoint {
            point,
            minimal_period,
        })
        .collect())
}

/// Brute-force periodic-point search over every normalized point with
/// coordinate magnitudes up to `height`: the independent oracle for
/// `periodic_points`.
pub fn periodic_points_by_search(
    map: &RationalMap,
    period_cap: u32,
    height: i64,
) -> Vec<PeriodicPoint> {
    let mut out: BTreeSet<PeriodicPoint> = BTreeSet::new();
    let mut consider = |p: ProjPoint| {
        if let Some(n) = minimal_period(map, &p, period_cap) {
            out.insert(PeriodicPoint {
                point: p,
                minimal_period: n,
            });
        }
    };
    consider(ProjPoint::infinity());
    for b in 1..=height {
        for a in -height..=height {
            if let Ok(p) = ProjPoint::from_i64(a, b) {
                // only normalized representatives, each point once
                if *p.a() == crate::Int::from(a) && *p.b() == crate::Int::from(b) {
                    consider(p);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Functional-graph census of the reduced map on P1(F_p): number of
/// periodic residues and the multiset of cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCensus {
    pub p: u64,
    pub periodic_count: u64,
    /// ascending
    pub cycle_lengths: Vec<u64>,
}

pub fn fp_cycle_census(map: &RationalMap, p: &crate::Int) -> Result<CycleCensus> {
    let fp = map.reduce_mod_p(p)?;
    Ok(census_of(&fp))
}

pub fn census_of(fp: &FpMap) -> CycleCensus {
    let n = fp.size() as usize;
    // peel nodes of in-degree zero; what survives is exactly the cycles
    let mut indeg = vec![0u32; n];
    for i in 0..n {
        indeg[fp.table[i] as usize] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut alive = vec![true; n];
    while let Some(i) = stack.pop() {
        alive[i] = false;
        let j = fp.table[i] as usize;
        indeg[j] -= 1;
        if indeg[j] == 0 {
            stack.push(j);
        }
    }
    let mut visited = vec![false; n];
    let mut cycle_lengths = Vec::new();
    let mut periodic_count = 0u64;
    for i in 0..n {
        if !alive[i] || visited[i] {
            continue;
        }
        let mut len = 0u64;
        let mut j = i;
        while !visited[j] {
            visited[j] = true;
            len += 1;
            j = fp.table[j] as usize;
        }
        periodic_count += len;
        cycle_lengths.push(len);
    }
    cycle_lengths.sort();
    CycleCensus {
        p: fp.p,
        periodic_count,
        cycle_lengths,
    }
}
