//! Table sweeps: one generated graph (or a mean over replicates) per order.

use std::fmt;
use std::str::FromStr;

use nlspectra::generators::{generate, sub_seed, GenSpec};
use nlspectra::majorization::classify_pendant_sequence;
use nlspectra::{BoundReport64, Graph, Quantity, Side};

use crate::example1;
use crate::render::{Cell, Table};
use crate::{ordered_map, Format, HarnessError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    Example1Lower,
    Example1Upper,
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "t1" => TableId::T1,
            "t2" => TableId::T2,
            "t3" => TableId::T3,
            "t4" => TableId::T4,
            "t5" => TableId::T5,
            "t6" => TableId::T6,
            "t7" => TableId::T7,
            "t8" => TableId::T8,
            "t9" => TableId::T9,
            "example1-lower" => TableId::Example1Lower,
            "example1-upper" => TableId::Example1Upper,
            _ => return Err(format!("unknown table `{s}` (t1..t9, example1-lower, example1-upper)")),
        })
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableId::T1 => "t1",
            TableId::T2 => "t2",
            TableId::T3 => "t3",
            TableId::T4 => "t4",
            TableId::T5 => "t5",
            TableId::T6 => "t6",
            TableId::T7 => "t7",
            TableId::T8 => "t8",
            TableId::T9 => "t9",
            TableId::Example1Lower => "example1-lower",
            TableId::Example1Upper => "example1-upper",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphModel {
    /// Either a fixed `q` or `q = min(mean_degree / (n - 1), 1/2)`; the cap
    /// keeps pendant vertices possible on the smallest orders.
    Er { q: Option<f64>, mean_degree: Option<f64> },
    /// `ring_k` is lowered to `floor((n-1)/2)` on small orders.
    Ws { p: f64, ring_k: usize },
}

impl GraphModel {
    fn spec(&self, n: usize, seed: u64) -> Result<GenSpec, HarnessError> {
        match *self {
            GraphModel::Er { q, mean_degree } => {
                let q = match (q, mean_degree) {
                    (Some(q), None) => q,
                    (None, Some(d)) => (d / (n as f64 - 1.0)).min(0.5),
                    _ => return Err(HarnessError::Input("ER needs exactly one of --q, --mean-degree".into())),
                };
                Ok(GenSpec::erdos_renyi(n, q, seed))
            }
            GraphModel::Ws { p, ring_k } => Ok(GenSpec::watts_strogatz(n, ring_k.min((n - 1) / 2).max(1), p, seed)),
        }
    }

    fn describe(&self) -> String {
        match *self {
            GraphModel::Er { q: Some(q), .. } => format!("ER(n, {q})"),
            GraphModel::Er { mean_degree: Some(d), .. } => format!("ER(n, min({d}/(n-1), 1/2))"),
            GraphModel::Er { .. } => "ER".into(),
            GraphModel::Ws { p, ring_k } => format!("WS(n, {p}), ring_k = {ring_k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub id: TableId,
    pub n_list: Vec<usize>,
    pub model: GraphModel,
    pub seed: u64,
    pub replicates: usize,
    pub threads: usize,
    /// Only used by the example tables.
    pub trials: usize,
}

impl TableSpec {
    /// Defaults per table: ER(n, 0.5) for t1/t4, ER(n, 0.1) for t2,
    /// WS(n, 0.1) with two neighbours per side for t3/t5, and sparse ER with
    /// mean degree 3 for t6..t9.
    pub fn new(id: TableId, n_list: Vec<usize>, seed: u64) -> Self {
        let model = match id {
            TableId::T1 | TableId::T4 => GraphModel::Er { q: Some(0.5), mean_degree: None },
            TableId::T2 => GraphModel::Er { q: Some(0.1), mean_degree: None },
            TableId::T3 | TableId::T5 => GraphModel::Ws { p: 0.1, ring_k: 2 },
            _ => GraphModel::Er { q: None, mean_degree: Some(3.0) },
        };
        Self { id, n_list, model, seed, replicates: 1, threads: 1, trials: 10_000 }
    }

    fn needs_pendant_form(&self) -> bool {
        matches!(self.id, TableId::T6 | TableId::T7 | TableId::T8 | TableId::T9)
    }
}

pub const DEFAULT_N_LIST: [usize; 11] = [4, 5, 6, 7, 8, 9, 10, 20, 30, 50, 100];

/// Graphs rejected by the table filter before a row is marked failed.
const FILTER_ATTEMPTS: u64 = 2000;

#[derive(Debug, Clone, Copy)]
enum Col {
    N,
    M,
    D1,
    Exact(Quantity),
    Bound(Quantity, Side, &'static str),
    Rel(Quantity, Side, &'static str),
}

fn columns(id: TableId) -> Vec<(&'static str, Col)> {
    use Quantity::*;
    use Side::*;
    let nee_lower = vec![
        ("n", Col::N),
        ("m", Col::M),
        ("nee", Col::Exact(Nee)),
        ("li", Col::Bound(Nee, Lower, "li")),
        ("alpha_q", Col::Bound(Nee, Lower, "alpha_q")),
        ("alpha_beta_qr", Col::Bound(Nee, Lower, "alpha_beta_qr")),
        ("r_li", Col::Rel(Nee, Lower, "li")),
        ("r_alpha_q", Col::Rel(Nee, Lower, "alpha_q")),
        ("r_alpha_beta_qr", Col::Rel(Nee, Lower, "alpha_beta_qr")),
    ];
    match id {
        TableId::T1 | TableId::T3 => nee_lower,
        TableId::T2 => nee_lower.into_iter().filter(|(name, _)| !["li", "alpha_q", "alpha_beta_qr"].contains(name)).collect(),
        TableId::T4 | TableId::T5 => vec![
            ("n", Col::N),
            ("m", Col::M),
            ("ne", Col::Exact(Ne)),
            ("cavers1", Col::Bound(Ne, Upper, "cavers1")),
            ("cavers2", Col::Bound(Ne, Upper, "cavers2")),
            ("k1_q", Col::Bound(Ne, Upper, "k1_q")),
            ("k1_k2_qr", Col::Bound(Ne, Upper, "k1_k2_qr")),
            ("bip", Col::Bound(Ne, Upper, "bip")),
            ("bip_r", Col::Bound(Ne, Upper, "bip_r")),
        ],
        TableId::T6 => vec![
            ("n", Col::N),
            ("m", Col::M),
            ("d1", Col::D1),
            ("nee", Col::Exact(Nee)),
            ("li", Col::Bound(Nee, Lower, "li")),
            ("randic_d1", Col::Bound(Nee, Lower, "randic_deg")),
            ("alpha_q", Col::Bound(Nee, Lower, "alpha_q")),
            ("alpha_beta_qr", Col::Bound(Nee, Lower, "alpha_beta_qr")),
            ("randic_l1", Col::Bound(Nee, Lower, "randic_maj")),
            ("randic_r", Col::Bound(Nee, Lower, "randic_exact")),
        ],
        TableId::T7 => vec![
            ("n", Col::N),
            ("m", Col::M),
            ("d1", Col::D1),
            ("nee", Col::Exact(Nee)),
            ("randic_dn", Col::Bound(Nee, Upper, "randic_deg")),
            ("randic_u1", Col::Bound(Nee, Upper, "randic_maj")),
            ("randic_r", Col::Bound(Nee, Upper, "randic_exact")),
        ],
        TableId::T8 => vec![
            ("n", Col::N),
            ("m", Col::M),
            ("d1", Col::D1),
            ("lee", Col::Exact(Lee)),
            ("hakimi1", Col::Bound(Lee, Lower, "hakimi1")),
            ("hakimi2", Col::Bound(Lee, Lower, "hakimi2")),
            ("hakimi3", Col::Bound(Lee, Lower, "hakimi3")),
            ("alpha_q", Col::Bound(Lee, Lower, "alpha_q")),
            ("alpha_beta_qr", Col::Bound(Lee, Lower, "alpha_beta_qr")),
            ("randic_l1", Col::Bound(Lee, Lower, "randic_maj")),
        ],
        TableId::T9 => vec![
            ("n", Col::N),
            ("m", Col::M),
            ("d1", Col::D1),
            ("lee", Col::Exact(Lee)),
            ("hakimi4", Col::Bound(Lee, Upper, "hakimi4")),
            ("randic_u1", Col::Bound(Lee, Upper, "randic_maj")),
        ],
        TableId::Example1Lower | TableId::Example1Upper => vec![],
    }
}

fn title(spec: &TableSpec) -> String {
    let what = match spec.id {
        TableId::T1 | TableId::T2 | TableId::T3 => "Lower bounds for NEE and relative errors",
        TableId::T4 | TableId::T5 => "Upper bounds for NE",
        TableId::T6 => "Lower bounds for NEE (pendant-type degree sequences)",
        TableId::T7 => "Upper bounds for NEE (pendant-type degree sequences)",
        TableId::T8 => "Lower bounds for lEE",
        TableId::T9 => "Upper bounds for lEE",
        _ => "",
    };
    format!("{} {what}, {}, seed {}", spec.id, spec.model.describe(), spec.seed)
}

/// First graph of order `n`, replicate `rep`, that passes the table filter.
pub fn row_graph(spec: &TableSpec, n: usize, rep: usize) -> Result<Graph, HarnessError> {
    let base = sub_seed(spec.seed, ((rep as u64) << 32) | n as u64);
    for attempt in 0..FILTER_ATTEMPTS {
        let g = generate(&spec.model.spec(n, sub_seed(base, attempt))?).map_err(|e| HarnessError::Runtime(e.to_string()))?;
        if !spec.needs_pendant_form() || classify_pendant_sequence(&g.degree_sequence()).is_ok() {
            return Ok(g);
        }
    }
    Err(HarnessError::Runtime(format!("RetriesExhausted: no pendant-type graph of order {n}")))
}

fn cell_value(rep: &BoundReport64, g: &Graph, col: Col) -> Option<f64> {
    let exact = rep.exact.expect("graph report has exact values");
    match col {
        Col::N => Some(g.order() as f64),
        Col::M => Some(g.size() as f64),
        Col::D1 => Some(g.max_degree() as f64),
        Col::Exact(q) => Some(exact.get(q)),
        Col::Bound(q, s, name) => rep.value(q, s, name),
        Col::Rel(q, s, name) => rep.entry(q, s, name).and_then(|e| e.relative_error),
    }
}

/// Emitted bounds must sit on the right side of their exact column.
fn audit(rep: &BoundReport64, cols: &[(&'static str, Col)], n: usize) -> Result<(), HarnessError> {
    let shown: Vec<String> = cols
        .iter()
        .filter_map(|(_, c)| match c {
            Col::Bound(q, _, name) => Some(format!("{}.{name}", q.as_str())),
            _ => None,
        })
        .collect();
    let bad: Vec<String> = rep
        .audit(1e-8)
        .into_iter()
        .filter(|v| shown.contains(&v.id))
        .map(|v| format!("{} {} = {} vs exact {}", v.id, v.side.as_str(), v.value, v.exact))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(HarnessError::Runtime(format!("soundness audit failed at n = {n}: {}", bad.join("; "))))
    }
}

enum RowOutcome {
    Values(Vec<Option<f64>>),
    Failed(String),
}

fn compute_row(spec: &TableSpec, cols: &[(&'static str, Col)], n: usize) -> Result<RowOutcome, HarnessError> {
    let mut sums: Vec<Option<(f64, usize)>> = vec![None; cols.len()];
    for rep in 0..spec.replicates.max(1) {
        let g = match row_graph(spec, n, rep) {
            Ok(g) => g,
            Err(HarnessError::Runtime(msg)) => return Ok(RowOutcome::Failed(msg)),
            Err(e) => return Err(e),
        };
        let report = BoundReport64::for_graph(&g, format!("n={n} rep={rep}")).map_err(|e| HarnessError::Runtime(e.to_string()))?;
        audit(&report, cols, n)?;
        for (slot, (_, col)) in sums.iter_mut().zip(cols) {
            if let Some(v) = cell_value(&report, &g, *col) {
                let (s, c) = slot.unwrap_or((0.0, 0));
                *slot = Some((s + v, c + 1));
            }
        }
    }
    Ok(RowOutcome::Values(sums.into_iter().map(|s| s.map(|(s, c)| s / c as f64)).collect()))
}

pub fn build_table(spec: &TableSpec) -> Result<Table, HarnessError> {
    if spec.n_list.is_empty() {
        return Err(HarnessError::Input("n-list is empty".into()));
    }
    if let Some(&n) = spec.n_list.iter().find(|&&n| n < 4) {
        return Err(HarnessError::Input(format!("table orders must be at least 4, got {n}")));
    }
    if matches!(spec.id, TableId::Example1Lower | TableId::Example1Upper) {
        let ds = example1::EXAMPLE_SEQUENCE.parse().expect("fixed sequence is graphical");
        let d = example1::deterministic(&ds)?;
        let s = example1::sample(&ds, spec.trials, spec.seed, spec.threads)?;
        example1::check(&d, &s)?;
        return Ok(if spec.id == TableId::Example1Lower {
            example1::lower_table(&d, Some(&s))
        } else {
            example1::upper_table(&d, Some(&s))
        });
    }
    let cols = columns(spec.id);
    let mut t = Table::new(title(spec), &cols.iter().map(|(name, _)| *name).chain(["status"]).collect::<Vec<_>>());
    let outcomes = ordered_map(&spec.n_list, spec.threads, |&n| compute_row(spec, &cols, n));
    let integer = spec.replicates <= 1;
    for (&n, outcome) in spec.n_list.iter().zip(outcomes) {
        let row = match outcome? {
            RowOutcome::Values(vals) => cols
                .iter()
                .zip(vals)
                .map(|((_, col), v)| match (col, v) {
                    (Col::N | Col::M | Col::D1, Some(v)) if integer => Cell::Int(v as usize),
                    (Col::Rel(..), v) => Cell::ratio(v),
                    (_, v) => Cell::num(v),
                })
                .chain([Cell::Text("ok".into())])
                .collect(),
            RowOutcome::Failed(msg) => {
                let mut row = vec![Cell::Na; cols.len()];
                row[0] = Cell::Int(n);
                row.push(Cell::Text(format!("failed: {msg}")));
                row
            }
        };
        t.rows.push(row);
    }
    if spec.replicates > 1 {
        t.notes.push(format!("means over {} replicates", spec.replicates));
    }
    Ok(t)
}

pub fn cmd_table(spec: &TableSpec, format: Format) -> Result<String, HarnessError> {
    let t = build_table(spec)?;
    match format {
        Format::Csv => Ok(t.to_csv()),
        Format::Md => Ok(t.to_markdown()),
        Format::Json => Err(HarnessError::Input("table supports csv and md".into())),
    }
}
