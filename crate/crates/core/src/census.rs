//! Exhaustive enumeration of small dissections and the property suite run
//! over every one of them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cyclo::{make_ring, RingElement};
use crate::frieze::generate;
use crate::partition::{crosses, insert_ear_weights, PolygonDissection};
use crate::quiddity::{cc_weights, round_trip_check};
use crate::scalar::Coefficient;

pub const DEFAULT_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("polygon size {m} exceeds the enumeration cap {cap}")]
    CapExceeded { m: usize, cap: usize },
    #[error("polygon size {0} is below 3")]
    TooSmall(usize),
}

/// Depth-first stream of all non-crossing diagonal sets, in lexicographic
/// order of the sorted diagonal lists (the empty set first).
#[derive(Clone, Debug)]
pub struct Dissections {
    m: usize,
    candidates: Vec<(usize, usize)>,
    chosen: Vec<usize>,
    started: bool,
    done: bool,
}

impl Dissections {
    fn new(m: usize) -> Self {
        let candidates = (0..m)
            .flat_map(|a| (a + 2..m).map(move |b| (a, b)))
            .filter(|&(a, b)| !(a == 0 && b == m - 1))
            .collect();
        Self { m, candidates, chosen: Vec::new(), started: false, done: false }
    }

    fn compatible(&self, idx: usize) -> bool {
        let c = self.candidates[idx];
        self.chosen.iter().all(|&k| !crosses(self.candidates[k], c))
    }

    fn first_compatible_from(&self, start: usize) -> Option<usize> {
        (start..self.candidates.len()).find(|&k| self.compatible(k))
    }

    fn current(&self) -> PolygonDissection {
        let diags: Vec<_> = self.chosen.iter().map(|&k| self.candidates[k]).collect();
        crate::partition::validate(self.m, &diags).expect("enumerated sets are non-crossing")
    }
}

impl Iterator for Dissections {
    type Item = PolygonDissection;

    fn next(&mut self) -> Option<PolygonDissection> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        let start = self.chosen.last().map_or(0, |&l| l + 1);
        if let Some(k) = self.first_compatible_from(start) {
            self.chosen.push(k);
            return Some(self.current());
        }
        while let Some(last) = self.chosen.pop() {
            if let Some(k) = self.first_compatible_from(last + 1) {
                self.chosen.push(k);
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

fn check_size(m: usize, cap: usize) -> Result<(), CensusError> {
    if m < 3 {
        return Err(CensusError::TooSmall(m));
    }
    if m > cap {
        return Err(CensusError::CapExceeded { m, cap });
    }
    Ok(())
}

pub fn enumerate_dissections(m: usize) -> Result<Dissections, CensusError> {
    enumerate_dissections_capped(m, DEFAULT_CAP)
}

pub fn enumerate_dissections_capped(m: usize, cap: usize) -> Result<Dissections, CensusError> {
    check_size(m, cap)?;
    Ok(Dissections::new(m))
}

pub fn enumerate_triangulations(m: usize) -> Result<impl Iterator<Item = PolygonDissection>, CensusError> {
    enumerate_triangulations_capped(m, DEFAULT_CAP)
}

pub fn enumerate_triangulations_capped(
    m: usize,
    cap: usize,
) -> Result<impl Iterator<Item = PolygonDissection>, CensusError> {
    Ok(enumerate_dissections_capped(m, cap)?.filter(PolygonDissection::is_triangulation))
}

/// Replaces the computed first row before the frieze is generated; lets the
/// harness check that violations are caught.
pub type WeightMutation<T> = Arc<dyn Fn(&PolygonDissection, &mut Vec<RingElement<T>>) + Send + Sync>;

#[derive(Clone)]
pub struct CensusOptions<T> {
    pub cap: usize,
    pub mutation: Option<WeightMutation<T>>,
}

impl<T> Default for CensusOptions<T> {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, mutation: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusFailure {
    pub dissection: PolygonDissection,
    pub property: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub m: usize,
    pub dissection_count: usize,
    pub triangulation_count: usize,
    pub failures: Vec<CensusFailure>,
    /// Pattern period -> number of dissections.
    pub observed_periods: BTreeMap<usize, usize>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let periods: Vec<String> = self.observed_periods.iter().map(|(p, n)| format!("{p}:{n}")).collect();
        write!(
            f,
            "m={}: {} dissections, {} triangulations, {} failures, periods [{}]",
            self.m,
            self.dissection_count,
            self.triangulation_count,
            self.failures.len(),
            periods.join(" ")
        )?;
        for fail in &self.failures {
            write!(f, "\n  FAIL {} ({}): {}", fail.dissection, fail.property, fail.detail)?;
        }
        Ok(())
    }
}

struct Outcome {
    failures: Vec<CensusFailure>,
    period: Option<usize>,
}

fn check_dissection<T: Coefficient>(d: &PolygonDissection, options: &CensusOptions<T>) -> Outcome {
    let mut failures = Vec::new();
    let mut fail = |property: &'static str, detail: String| {
        failures.push(CensusFailure { dissection: d.clone(), property, detail });
    };
    let m = d.m();

    let ring = match make_ring::<T>(d.conductor()) {
        Ok(r) => r,
        Err(e) => {
            fail("ring", e.to_string());
            return Outcome { failures, period: None };
        }
    };
    let mut row = match d.vertex_weights(&ring) {
        Ok(w) => w.into_entries(),
        Err(e) => {
            fail("weights", e.to_string());
            return Outcome { failures, period: None };
        }
    };
    if let Some(mutate) = &options.mutation {
        mutate(d, &mut row);
    }

    if !d.diagonals().is_empty() {
        let inserted = d.find_ear_part().map_err(|e| e.to_string()).and_then(|ear| {
            let cut = ear.cut.vertex_weights(&ring).map_err(|e| e.to_string())?;
            let t = ring.part_weight(ear.ear_size()).map_err(|e| e.to_string())?;
            let built = insert_ear_weights(&cut, ear.position, &t, ear.ear_size()).map_err(|e| e.to_string())?;
            let mut expect = row.clone();
            expect.rotate_left(ear.offset());
            Ok(built == expect)
        });
        match inserted {
            Ok(true) => {}
            Ok(false) => fail("ear_insertion", "first row differs from the ear insertion".into()),
            Err(e) => fail("ear_insertion", e),
        }
    }

    let pattern = match generate(&row) {
        Ok(p) => p,
        Err(e) => {
            fail("closure", e.to_string());
            return Outcome { failures, period: None };
        }
    };
    if !pattern.verify_closure() {
        fail("closure", "boundary rows are not 1, 1, 0".into());
    }
    if let Some((i, k)) = pattern.unimodular_violation() {
        fail("unimodular", format!("diamond at row {i}, column {k}"));
    }
    if let Some((i, j)) = pattern.positivity_violation() {
        fail("positive", format!("entry ({i}, {j}) is not positive"));
    }
    let period = pattern.pattern_period();
    if m % period != 0 {
        fail("period_divides_m", format!("period {period}"));
    }
    if !pattern.has_entry_below_two() {
        fail("entry_below_two", "every first-row entry is >= 2".into());
    }
    if d.is_triangulation() {
        if !pattern.is_integral() {
            fail("integral", "triangulation frieze has irrational entries".into());
        }
        match cc_weights(d) {
            Ok(q) => {
                let agrees = q.entries().iter().zip(&row).all(|(&k, e)| {
                    e.as_integer().is_some_and(|v| v.to_bigint() == num_bigint::BigInt::from(k))
                });
                if !agrees {
                    fail("cc_weights", format!("quiddity {:?} differs from the weights", q.entries()));
                }
            }
            Err(e) => fail("cc_weights", e.to_string()),
        }
        if !round_trip_check(d) {
            fail("round_trip", "reconstruct(cc_weights) changed the quiddity".into());
        }
    }
    Outcome { failures, period: Some(period) }
}

/// Runs the suite over every dissection of one polygon size.
pub fn census_for<T: Coefficient>(m: usize, options: &CensusOptions<T>) -> Result<CensusReport, CensusError> {
    let all: Vec<PolygonDissection> = enumerate_dissections_capped(m, options.cap)?.collect();
    let outcomes: Vec<Outcome> = all.par_iter().map(|d| check_dissection(d, options)).collect();
    let mut report = CensusReport {
        m,
        dissection_count: all.len(),
        triangulation_count: all.iter().filter(|d| d.is_triangulation()).count(),
        failures: Vec::new(),
        observed_periods: BTreeMap::new(),
    };
    for o in outcomes {
        report.failures.extend(o.failures);
        if let Some(p) = o.period {
            *report.observed_periods.entry(p).or_default() += 1;
        }
    }
    Ok(report)
}

/// One report for each m in `3..=m_max`.
pub fn run_census<T: Coefficient>(m_max: usize) -> Result<Vec<CensusReport>, CensusError> {
    run_census_with::<T>(m_max, &CensusOptions::default())
}

pub fn run_census_with<T: Coefficient>(
    m_max: usize,
    options: &CensusOptions<T>,
) -> Result<Vec<CensusReport>, CensusError> {
    if m_max > options.cap {
        return Err(CensusError::CapExceeded { m: m_max, cap: options.cap });
    }
    (3..=m_max).map(|m| census_for(m, options)).collect()
}
