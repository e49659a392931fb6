use std::io::Write;
use std::process::{Command, Output};

use nlspectra::{BoundReport64, Graph, Quantity, Side};
use nlspectra_cli::tables::{build_table, row_graph, TableId, TableSpec};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlspectra")).args(args).output().expect("binary runs")
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("nlspectra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn compute_on_cycle() {
    let path = temp_file("c4.txt", "# four-cycle\n4 4\n1 2\n2 3\n3 4\n4 1\n");
    let out = bin(&["compute", "--input", path.to_str().unwrap(), "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut seen = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        match (&rec[0], &rec[1], &rec[2]) {
            ("exact", "nee", _) => {
                assert!((rec[3].parse::<f64>().unwrap() - 5.0862).abs() < 1e-4);
                seen += 1;
            }
            ("exact", "ne", _) => {
                assert!((rec[3].parse::<f64>().unwrap() - 2.0).abs() < 1e-9);
                seen += 1;
            }
            ("bound", "nee.bip", "lower") => {
                assert_eq!(&rec[4], "true");
                seen += 1;
            }
            _ => {}
        }
    }
    assert_eq!(seen, 3);
}

#[test]
fn compute_on_complete_graph_json() {
    let path = temp_file("k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let out = bin(&["compute", "--input", path.to_str().unwrap(), "--format", "json", "--bounds", "nee.li"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert!((entries[0]["value"].as_f64().unwrap() - 4.5547).abs() < 5e-5);
    assert!(entries[0]["relative_error"].as_f64().unwrap() < 1e-10);
}

#[test]
fn compute_on_degree_sequence() {
    let out = bin(&["compute", "--degseq", "7,6,5,4,4,4,3,3,3,3,3,3,2,2,2,2,1,1,1,1", "--format", "md"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("nee.randic_maj"));
}

#[test]
fn invalid_inputs_exit_with_two() {
    let path = temp_file("split.txt", "4 2\n1 2\n3 4\n");
    let out = bin(&["compute", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Disconnected"));

    let path = temp_file("loop.txt", "3 3\n1 2\n2 3\n3 3\n");
    assert_eq!(bin(&["compute", "--input", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bin(&["compute", "--degseq", "3,1,1"]).status.code(), Some(2));
    assert_eq!(bin(&["compute", "--degseq", "3,3,1,1"]).status.code(), Some(2));
    assert_eq!(bin(&["table", "--id", "t99"]).status.code(), Some(2));
    assert_eq!(bin(&["table", "--id", "t1", "--n-list", "3"]).status.code(), Some(2));
}

#[test]
fn table_command_is_deterministic() {
    let args = ["table", "--id", "t4", "--n-list", "5,10,30", "--seed", "11", "--format", "md"];
    let a = bin(&args);
    let b = bin(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let mut par = args.to_vec();
    par.extend(["--threads", "3"]);
    assert_eq!(bin(&par).stdout, a.stdout);
}

/// CSV cells parse back to exactly the values the library produces.
#[test]
fn table_csv_round_trip() {
    let spec = TableSpec::new(TableId::T1, vec![6, 12, 40], 3);
    let csv_text = build_table(&spec).unwrap().to_csv();
    let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
    let header = rdr.headers().unwrap().clone();
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    for (rec, &n) in rdr.records().zip(&spec.n_list) {
        let rec = rec.unwrap();
        let g: Graph = row_graph(&spec, n, 0).unwrap();
        let rep = BoundReport64::for_graph(&g, "").unwrap();
        assert_eq!(rec[col("nee")].parse::<f64>().unwrap(), rep.exact.unwrap().indices.nee);
        assert_eq!(rec[col("li")].parse::<f64>().unwrap(), rep.value(Quantity::Nee, Side::Lower, "li").unwrap());
        let r = rep.entry(Quantity::Nee, Side::Lower, "alpha_q").unwrap().relative_error.unwrap();
        assert_eq!(rec[col("r_alpha_q")].parse::<f64>().unwrap(), r);
        assert_eq!(rec[col("m")].parse::<usize>().unwrap(), g.size());
    }
}

#[test]
fn literature_energy_columns_are_closed_forms() {
    let spec = TableSpec::new(TableId::T5, vec![4, 5, 100], 8);
    let t = build_table(&spec).unwrap();
    let (c1, c2) = (t.column("cavers1").unwrap(), t.column("cavers2").unwrap());
    for (row, n) in t.rows.iter().zip([4.0f64, 5.0, 100.0]) {
        assert_eq!(row[c1].as_f64().unwrap(), 2.0 * (n / 2.0).floor());
        assert_eq!(row[c2].as_f64().unwrap(), (15.0f64 / 28.0).sqrt() * (n + 1.0));
    }
}

#[test]
fn new_lower_bounds_beat_literature_bounds() {
    let spec = TableSpec::new(TableId::T8, vec![6, 10, 20, 50], 21);
    let t = build_table(&spec).unwrap();
    let c = |name: &str| t.column(name).unwrap();
    for row in &t.rows {
        let lee = row[c("lee")].as_f64().unwrap();
        let newbl = row[c("alpha_q")].as_f64().unwrap();
        for h in ["hakimi1", "hakimi2", "hakimi3"] {
            assert!(row[c(h)].as_f64().unwrap() <= newbl);
        }
        assert!(newbl <= lee);
    }
}

#[test]
fn example1_small_run() {
    let out = bin(&["example1", "--trials", "300", "--seed", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("31/42"));
    assert!(text.contains("min NEE"));
}
