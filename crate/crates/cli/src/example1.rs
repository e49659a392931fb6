//! The fixed-degree-sequence experiment: Randić bracket of a pendant-type
//! class, the NEE bounds it yields, and NEE over sampled class members.

use std::collections::HashSet;

use nlspectra::bounds::nee_randic_bounds;
use nlspectra::generators::{generate, sub_seed, GenSpec};
use nlspectra::indices::{nee, randic_minus_one};
use nlspectra::majorization::{randic_bounds_classical, RandicExtremals};
use nlspectra::spectra::spectrum;
use nlspectra::DegreeSequence;

use crate::render::{Cell, Table};
use crate::{ordered_map, Format, HarnessError};

pub const EXAMPLE_SEQUENCE: &str = "7,6,5,4,4,4,3,3,3,3,3,3,2,2,2,2,1,1,1,1";

/// Sampling stops after this many draws per requested distinct graph.
const DRAW_FACTOR: usize = 50;
const BATCH: usize = 256;

#[derive(Debug, Clone, PartialEq)]
pub struct Deterministic {
    pub n: usize,
    pub m: usize,
    pub h: usize,
    pub k: usize,
    pub theta: String,
    pub l1: f64,
    pub u1: f64,
    /// `n / (2 d_1)`
    pub deg_lower: f64,
    /// `n / (2 d_n)`
    pub deg_upper: f64,
    pub maj_nee_lower: f64,
    pub maj_nee_upper: Option<f64>,
    pub deg_nee_lower: f64,
    pub deg_nee_upper: Option<f64>,
}

pub fn deterministic(ds: &DegreeSequence) -> Result<Deterministic, HarnessError> {
    let ex = RandicExtremals::compute(ds).map_err(|e| HarnessError::Input(e.to_string()))?;
    let (l1, u1) = ex.bounds::<f64>();
    let (dl, du) = randic_bounds_classical::<f64>(ds);
    let n = ds.len();
    let maj = nee_randic_bounds(n, l1, u1, false);
    let deg = nee_randic_bounds(n, dl, du, false);
    let lower = |r: Result<f64, _>| r.map_err(|e: nlspectra::BoundError| HarnessError::Runtime(e.to_string()));
    Ok(Deterministic {
        n,
        m: ds.edge_count(),
        h: ds.pendant_count(),
        k: ex.max.k,
        theta: ex.max.theta.to_string(),
        l1,
        u1,
        deg_lower: dl,
        deg_upper: du,
        maj_nee_lower: lower(maj.lower)?,
        maj_nee_upper: maj.upper.ok(),
        deg_nee_lower: lower(deg.lower)?,
        deg_nee_upper: deg.upper.ok(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleSummary {
    pub requested: usize,
    pub distinct: usize,
    pub drawn: usize,
    pub nee_min: f64,
    pub nee_mean: f64,
    pub nee_max: f64,
    pub randic_min: f64,
    pub randic_max: f64,
}

/// Draws class members with per-draw seeds `sub_seed(seed, t)` until
/// `trials` distinct NEE values (rounded to 1e-9) are collected. Draws are
/// evaluated in batches but consumed in index order, so the result does not
/// depend on `threads`.
pub fn sample(ds: &DegreeSequence, trials: usize, seed: u64, threads: usize) -> Result<SampleSummary, HarnessError> {
    if trials == 0 {
        return Err(HarnessError::Input("trials must be at least 1".into()));
    }
    let limit = trials.saturating_mul(DRAW_FACTOR);
    let mut seen = HashSet::new();
    let (mut sum, mut min, mut max) = (0.0, f64::INFINITY, f64::NEG_INFINITY);
    let (mut rmin, mut rmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut drawn = 0;
    while seen.len() < trials && drawn < limit {
        let idx: Vec<u64> = (drawn as u64..(drawn + BATCH.min(limit - drawn)) as u64).collect();
        let batch = ordered_map(&idx, threads, |&t| -> Result<(f64, f64), HarnessError> {
            let g = generate(&GenSpec::degree_sequence(ds, sub_seed(seed, t)))
                .map_err(|e| HarnessError::Runtime(e.to_string()))?;
            let s = spectrum::<f64>(&g).map_err(|e| HarnessError::Runtime(e.to_string()))?;
            Ok((nee(&s), randic_minus_one::<f64>(&g)))
        });
        for item in batch {
            drawn += 1;
            let (v, r) = item?;
            rmin = rmin.min(r);
            rmax = rmax.max(r);
            if seen.insert((v * 1e9).round() as i64) {
                sum += v;
                min = min.min(v);
                max = max.max(v);
                if seen.len() == trials {
                    break;
                }
            }
        }
    }
    Ok(SampleSummary {
        requested: trials,
        distinct: seen.len(),
        drawn,
        nee_min: min,
        nee_mean: sum / seen.len() as f64,
        nee_max: max,
        randic_min: rmin,
        randic_max: rmax,
    })
}

pub fn lower_table(d: &Deterministic, s: Option<&SampleSummary>) -> Table {
    let mut t = Table::new("Lower bounds for NEE", &["reference", "value"]);
    t.rows.push(vec![Cell::Text("randic_deg (L = n/(2 d_1))".into()), Cell::Num(d.deg_nee_lower)]);
    t.rows.push(vec![Cell::Text("randic_maj (L = L1)".into()), Cell::Num(d.maj_nee_lower)]);
    push_samples(&mut t, s);
    t
}

pub fn upper_table(d: &Deterministic, s: Option<&SampleSummary>) -> Table {
    let mut t = Table::new("Upper bounds for NEE", &["reference", "value"]);
    t.rows.push(vec![Cell::Text("randic_deg (U = n/(2 d_n))".into()), Cell::num(d.deg_nee_upper)]);
    t.rows.push(vec![Cell::Text("randic_maj (U = U1)".into()), Cell::num(d.maj_nee_upper)]);
    push_samples(&mut t, s);
    t
}

fn push_samples(t: &mut Table, s: Option<&SampleSummary>) {
    if let Some(s) = s {
        t.rows.push(vec![Cell::Text("min NEE".into()), Cell::Num(s.nee_min)]);
        t.rows.push(vec![Cell::Text("mean NEE".into()), Cell::Num(s.nee_mean)]);
        t.rows.push(vec![Cell::Text("max NEE".into()), Cell::Num(s.nee_max)]);
    }
}

pub fn parameter_table(d: &Deterministic, s: Option<&SampleSummary>) -> Table {
    let mut t = Table::new("Class parameters", &["quantity", "value"]);
    let mut add = |k: &str, c: Cell| t.rows.push(vec![Cell::Text(k.into()), c]);
    add("n", Cell::Int(d.n));
    add("m", Cell::Int(d.m));
    add("h", Cell::Int(d.h));
    add("k", Cell::Int(d.k));
    add("theta", Cell::Text(d.theta.clone()));
    add("L1", Cell::Num(d.l1));
    add("U1", Cell::Num(d.u1));
    add("n/(2 d_1)", Cell::Num(d.deg_lower));
    add("n/(2 d_n)", Cell::Num(d.deg_upper));
    if let Some(s) = s {
        add("distinct samples", Cell::Int(s.distinct));
        add("draws", Cell::Int(s.drawn));
        add("min R_-1", Cell::Num(s.randic_min));
        add("max R_-1", Cell::Num(s.randic_max));
    }
    t
}

/// Fails when a sample falls outside a bound it should respect.
pub fn check(d: &Deterministic, s: &SampleSummary) -> Result<(), HarnessError> {
    let slack = 1e-8;
    let mut bad = Vec::new();
    if s.nee_min < d.deg_nee_lower.max(d.maj_nee_lower) - slack {
        bad.push(format!("min NEE {} below a lower bound", s.nee_min));
    }
    for u in [d.deg_nee_upper, d.maj_nee_upper].into_iter().flatten() {
        if s.nee_max > u + slack {
            bad.push(format!("max NEE {} above upper bound {u}", s.nee_max));
        }
    }
    if s.randic_min < d.l1 - slack || s.randic_max > d.u1 + slack {
        bad.push(format!("R_-1 range [{}, {}] leaves [L1, U1]", s.randic_min, s.randic_max));
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(HarnessError::Runtime(format!("soundness audit failed: {}", bad.join("; "))))
    }
}

pub enum Part {
    Lower,
    Upper,
    All,
}

pub fn cmd_example1(
    degrees: &str,
    trials: usize,
    seed: u64,
    threads: usize,
    part: Part,
    format: Format,
) -> Result<String, HarnessError> {
    let ds: DegreeSequence = degrees.parse().map_err(|e: nlspectra::DegreeSequenceError| HarnessError::Input(e.to_string()))?;
    let d = deterministic(&ds)?;
    let s = sample(&ds, trials, seed, threads)?;
    check(&d, &s)?;
    let tables = match part {
        Part::Lower => vec![lower_table(&d, Some(&s))],
        Part::Upper => vec![upper_table(&d, Some(&s))],
        Part::All => vec![parameter_table(&d, Some(&s)), lower_table(&d, Some(&s)), upper_table(&d, Some(&s))],
    };
    Ok(match format {
        Format::Md => tables.iter().map(Table::to_markdown).collect::<Vec<_>>().join("\n"),
        Format::Csv => tables.iter().map(Table::to_csv).collect::<Vec<_>>().join("\n"),
        Format::Json => return Err(HarnessError::Input("example1 supports csv and md".into())),
    })
}
