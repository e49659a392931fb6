//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Every tolerance is pinned here.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nlspectra::bounds::{
    localizer_q, localizer_r, ne_upper_cavers1, ne_upper_cavers2, nee_lower_alpha, nee_lower_alpha_beta,
    nee_lower_li, relative_error,
};
use nlspectra::generators::{generate, GenSpec};
use nlspectra::indices::{nee, ne, randic_dual_form, randic_minus_one};
use nlspectra::spectra::{lemma1_check, spectrum};
use nlspectra::{BoundReport64, DegreeSequence, Graph, Quantity, Side};
use nlspectra_cli::example1::{self, EXAMPLE_SEQUENCE};
use nlspectra_cli::tables::{cmd_table, TableId, TableSpec};
use nlspectra_cli::Format;

struct Outcome {
    passed: bool,
    detail: String,
}

struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Self { failures: vec![], notes: vec![] }
    }

    fn close(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        if !((got - want).abs() <= tol) {
            self.failures.push(format!("{what}: got {got}, want {want} +- {tol}"));
        }
    }

    fn rel(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        let r = ((got - want) / want).abs();
        if !(r <= tol) {
            self.failures.push(format!("{what}: got {got}, want {want} (relative error {r:.4e} > {tol})"));
        }
    }

    fn that(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.notes.push(format!("{:.2?}", elapsed));
        self.that(&format!("runtime {elapsed:.2?} exceeds {limit:?}"), elapsed < limit);
    }

    fn outcome(self) -> Outcome {
        let passed = self.failures.is_empty();
        let mut parts = self.failures;
        parts.extend(self.notes);
        Outcome { passed, detail: parts.join("; ") }
    }
}

/// Closed-form columns: the `alpha = n/(n-1)` bound and the two literature
/// energy bounds.
fn criterion1() -> Outcome {
    let mut c = Check::new();
    let start = Instant::now();
    let ns = [4usize, 5, 6, 7, 8, 9, 10, 20, 30, 50, 100];
    let li = [4.5547, 5.5040, 6.4749, 7.4560, 8.4428, 9.4331, 10.4256, 20.3947, 30.3853, 50.3782, 100.3729];
    let cav2 = [3.66, 4.39, 5.12, 5.86, 6.59, 7.32, 8.05, 15.37, 22.69, 37.33, 73.92];
    let cav1 = [4.0, 4.0, 6.0, 6.0, 8.0, 8.0, 10.0, 20.0, 30.0, 50.0, 100.0];
    for (i, &n) in ns.iter().enumerate() {
        c.close(&format!("li n={n}"), nee_lower_li::<f64>(n).unwrap(), li[i], 5e-5);
        c.that(&format!("cavers1 n={n}"), ne_upper_cavers1::<f64>(n) == cav1[i]);
        c.close(&format!("cavers2 n={n}"), ne_upper_cavers2::<f64>(n), cav2[i], 5e-3);
    }
    c.within(start.elapsed(), Duration::from_secs(1));
    c.outcome()
}

/// The degree-sequence pipeline of the worked example.
fn criterion2() -> Outcome {
    let mut c = Check::new();
    let start = Instant::now();
    let ds: DegreeSequence = EXAMPLE_SEQUENCE.parse().unwrap();
    let d = example1::deterministic(&ds).unwrap();
    c.close("L1", d.l1, 2.56, 5e-3);
    c.close("U1", d.u1, 4.96, 5e-3);
    c.close("n/(2 d_1)", d.deg_lower, 1.43, 5e-3);
    c.close("n/(2 d_n)", d.deg_upper, 10.0, 5e-3);
    c.rel("majorization lower", d.maj_nee_lower, 20.23, 1e-2);
    c.rel("majorization upper", d.maj_nee_upper.unwrap_or(f64::NAN), 7541.32, 1e-2);
    c.close("degree lower", d.deg_nee_lower, 20.12, 5e-3);
    c.rel("degree upper", d.deg_nee_upper.unwrap_or(f64::NAN), 1.7e8, 5e-2);
    c.within(start.elapsed(), Duration::from_secs(1));
    c.outcome()
}

fn closed_form(n: usize, kind: &str) -> Vec<f64> {
    let nn = n as f64;
    let mut v: Vec<f64> = match kind {
        "complete" => (0..n).map(|k| if k == 0 { 0.0 } else { nn / (nn - 1.0) }).collect(),
        "cycle" => (0..n).map(|k| 1.0 - (2.0 * PI * k as f64 / nn).cos()).collect(),
        _ => (0..n).map(|k| 1.0 - (PI * k as f64 / (nn - 1.0)).cos()).collect(),
    };
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

fn criterion3() -> Outcome {
    let mut c = Check::new();
    let idx = |g: &Graph| {
        let s = spectrum::<f64>(g).unwrap();
        (nee(&s), ne(&s))
    };
    let (c4, k4, p4) = (idx(&Graph::cycle(4)), idx(&Graph::complete(4)), idx(&Graph::path(4)));
    c.close("NEE(C4)", c4.0, 5.0862, 1e-4);
    c.close("NEE(K4)", k4.0, 4.5547, 1e-4);
    c.close("NEE(P4)", p4.0, 5.3414, 1e-4);
    c.close("NE(K4)", k4.1, 2.0, 1e-4);
    c.close("NE(C4)", c4.1, 2.0, 1e-4);
    c.close("NE(P4)", p4.1, 3.0, 1e-4);
    let mut worst: f64 = 0.0;
    for n in 2..=50 {
        let mut cases = vec![(Graph::complete(n), "complete"), (Graph::path(n), "path")];
        if n >= 3 {
            cases.push((Graph::cycle(n), "cycle"));
        }
        for (g, kind) in cases {
            let s = spectrum::<f64>(&g).unwrap();
            for (a, b) in s.values().iter().zip(closed_form(n, kind)) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    c.that(&format!("closed-form spectra deviate by {worst:e}"), worst <= 1e-9);
    c.notes.push(format!("max spectrum deviation {worst:.1e}"));
    c.outcome()
}

/// The criterion-4/5 graph set: ER at three densities and WS(n, 0.1).
fn sweep_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for i in 0..130u64 {
        let n = 4 + (i as usize * 37) % 97;
        let n_sparse = 30 + (i as usize * 29) % 71;
        let specs = [
            (format!("ER({n_sparse}, 0.1) s{i}"), GenSpec::erdos_renyi(n_sparse, 0.1, 1000 + i)),
            (format!("ER({n}, 0.5) s{i}"), GenSpec::erdos_renyi(n, 0.5, 2000 + i)),
            (format!("ER({n}, 0.9) s{i}"), GenSpec::erdos_renyi(n, 0.9, 3000 + i)),
            (format!("WS({}, 0.1) s{i}", n.max(5)), GenSpec::watts_strogatz(n.max(5), 2, 0.1, 4000 + i)),
        ];
        for (label, spec) in specs {
            out.push((label, generate(&spec).unwrap()));
        }
    }
    out
}

fn criterion4(graphs: &[(String, Graph)]) -> Outcome {
    let mut c = Check::new();
    let start = Instant::now();
    let slack = 1e-8;
    let (mut applicable, mut chain_qr, mut chain_exact, mut ne_pairs) = (0, 0, 0, 0);
    for (label, g) in graphs {
        let rep = BoundReport64::for_graph(g, label.clone()).unwrap();
        applicable += rep.entries.iter().filter(|e| e.applicable).count();
        for v in rep.audit(slack) {
            c.failures.push(format!("{label}: {} {} = {} vs exact {}", v.id, v.side.as_str(), v.value, v.exact));
        }
        let ex = rep.exact.unwrap();
        let n = g.order();
        let nf = n as f64;
        let q = localizer_q::<f64>(g).unwrap();
        let r = localizer_r::<f64>(g).unwrap();
        c.that(&format!("{label}: Q > gamma1"), q <= ex.gamma1 + slack);
        c.that(&format!("{label}: R > gamma2"), r <= ex.gamma2 + slack);
        c.that(&format!("{label}: R > Q"), r <= q + 1e-10);
        c.that(&format!("{label}: Q < n/(n-1)"), q >= nf / (nf - 1.0) - 1e-10);

        let li = nee_lower_li::<f64>(n).unwrap();
        if let Ok(bq) = nee_lower_alpha(n, q) {
            c.that(&format!("{label}: li > alpha_q"), li <= bq + 1e-12);
            if let Ok(bqr) = nee_lower_alpha_beta(n, q, r) {
                chain_qr += 1;
                c.that(&format!("{label}: alpha_q > alpha_beta_qr"), bq <= bqr + 1e-12);
                c.that(&format!("{label}: alpha_beta_qr > nee"), bqr <= ex.indices.nee + slack);
            }
        }
        // the same chain with the exact leading eigenvalues in the slots
        if let (Ok(b1), Ok(b12)) = (nee_lower_alpha(n, ex.gamma1), nee_lower_alpha_beta(n, ex.gamma1, ex.gamma2)) {
            chain_exact += 1;
            c.that(&format!("{label}: exact chain"), li <= b1 + 1e-12 && b1 <= b12 + 1e-12 && b12 <= ex.indices.nee + slack);
        }
        let k1 = rep.value(Quantity::Ne, Side::Upper, "k1_q");
        let k12 = rep.value(Quantity::Ne, Side::Upper, "k1_k2_qr");
        if let (Some(a), Some(b)) = (k1, k12) {
            ne_pairs += 1;
            c.that(&format!("{label}: k1_k2_qr > k1_q"), b <= a + 1e-12);
        }
    }
    c.that("fewer than 500 graphs", graphs.len() >= 500);
    c.within(start.elapsed(), Duration::from_secs(60));
    c.notes.push(format!(
        "{} graphs, {applicable} applicable bounds, (Q,R) chain guard held {chain_qr}x, exact-eigenvalue chain {chain_exact}x, NE pair {ne_pairs}x",
        graphs.len()
    ));
    c.outcome()
}

fn criterion5(graphs: &[(String, Graph)]) -> Outcome {
    let mut c = Check::new();
    for (label, g) in graphs {
        let s = spectrum::<f64>(g).unwrap();
        let rep = lemma1_check(g, &s);
        let n = g.order() as f64;
        c.that(&format!("{label}: trace residual {}", rep.trace.residual), rep.trace.residual <= 1e-8 * n);
        c.that(&format!("{label}: square trace residual {}", rep.square_trace.residual), rep.square_trace.residual <= 1e-8 * n);
        c.that(&format!("{label}: gamma_n = {}", rep.kernel.residual), rep.kernel.residual <= 1e-8);
        c.that(&format!("{label}: gamma_1 > 2"), s.largest() <= 2.0 + 1e-8);
        let at_two = (s.largest() - 2.0).abs() <= 1e-6;
        c.that(&format!("{label}: gamma_1 = 2 disagrees with bipartiteness"), at_two == g.is_bipartite());
    }
    let bip = graphs.iter().filter(|(_, g)| g.is_bipartite()).count();
    c.notes.push(format!("{} graphs, {bip} bipartite", graphs.len()));
    c.outcome()
}

fn criterion6() -> Outcome {
    let mut c = Check::new();
    let start = Instant::now();
    let ds: DegreeSequence = EXAMPLE_SEQUENCE.parse().unwrap();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for seed in 0..1000u64 {
        let g = generate(&GenSpec::degree_sequence(&ds, seed)).unwrap();
        c.that(&format!("seed {seed}: degree sequence changed"), g.degree_sequence() == ds);
        let r = randic_minus_one::<f64>(&g);
        let dual = randic_dual_form::<f64>(&g);
        c.that(&format!("seed {seed}: dual form differs by {:e}", (r - dual).abs()), (r - dual).abs() <= 1e-10);
        c.that(&format!("seed {seed}: R_-1 = {r} outside [2.555, 4.965]"), (2.56 - 5e-3..=4.96 + 5e-3).contains(&r));
        lo = lo.min(r);
        hi = hi.max(r);
    }
    c.within(start.elapsed(), Duration::from_secs(30));
    c.notes.push(format!("R_-1 range [{lo:.4}, {hi:.4}]"));
    c.outcome()
}

/// Relative errors as ratios; 10.4488% is 0.104488.
fn criterion7() -> Outcome {
    let mut c = Check::new();
    let a = relative_error(4.5547, 5.0862);
    let b = relative_error(4.7112, 5.0862);
    c.close("r(4.5547, 5.0862)", a, 0.104488, 5e-4);
    c.close("r(4.7112, 5.0862)", b, 0.073717, 5e-4);
    c.close("r(x, x)", relative_error(3.0, 3.0), 0.0, 0.0);
    c.notes.push(format!("{:.4}% and {:.4}%", a * 100.0, b * 100.0));
    c.outcome()
}

fn criterion8() -> Outcome {
    let mut c = Check::new();
    let ns = vec![4, 7, 10, 20, 50];
    for id in [TableId::T1, TableId::T3, TableId::T5, TableId::T7, TableId::T8] {
        let mut spec = TableSpec::new(id, ns.clone(), 99);
        let serial = cmd_table(&spec, Format::Csv).unwrap();
        let again = cmd_table(&spec, Format::Csv).unwrap();
        spec.threads = 4;
        let parallel = cmd_table(&spec, Format::Csv).unwrap();
        c.that(&format!("{id}: repeated run differs"), serial == again);
        c.that(&format!("{id}: parallel run differs"), serial == parallel);
    }
    let run = |threads| example1::cmd_example1(EXAMPLE_SEQUENCE, 500, 5, threads, example1::Part::All, Format::Csv).unwrap();
    let (a, b, p) = (run(1), run(1), run(4));
    c.that("example1: repeated run differs", a == b);
    c.that("example1: parallel run differs", a == p);
    c.notes.push("5 tables and example1, serial vs 4 threads".into());
    c.outcome()
}

fn main() -> ExitCode {
    let graphs = sweep_graphs();
    let results = [
        ("1 closed-form bound columns", criterion1()),
        ("2 worked-example pipeline", criterion2()),
        ("3 exact-index oracles", criterion3()),
        ("4 soundness sweep", criterion4(&graphs)),
        ("5 trace and range identities", criterion5(&graphs)),
        ("6 Randic sandwich", criterion6()),
        ("7 relative errors", criterion7()),
        ("8 determinism", criterion8()),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {name}: {tag} ({})", o.detail);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
