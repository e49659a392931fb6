//! Tabular output: CSV with full-precision values, Markdown with the
//! four-decimal view.

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(usize),
    Num(f64),
    /// Relative error as a raw ratio; rendered as a percent in Markdown.
    Ratio(f64),
    Text(String),
    Na,
}

impl Cell {
    pub fn num(v: Option<f64>) -> Self {
        v.map_or(Cell::Na, Cell::Num)
    }

    pub fn ratio(v: Option<f64>) -> Self {
        v.map_or(Cell::Na, Cell::Ratio)
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Int(i) => Some(i as f64),
            Cell::Num(v) | Cell::Ratio(v) => Some(v),
            _ => None,
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(v) | Cell::Ratio(v) => format_full(*v),
            Cell::Text(s) => s.clone(),
            Cell::Na => "NA".into(),
        }
    }

    fn md(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(v) => format_fixed(*v),
            Cell::Ratio(v) => format!("{:.4}%", v * 100.0),
            Cell::Text(s) => s.replace('|', "\\|"),
            Cell::Na => "NA".into(),
        }
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn format_full(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v}")
    }
}

/// Four decimals, or `d.ddE+XX` once the magnitude reaches `1e6`.
pub fn format_fixed(v: f64) -> String {
    if !v.is_finite() {
        return format_full(v);
    }
    if v.abs() < 1e6 {
        return format!("{v:.4}");
    }
    let mut exp = v.abs().log10().floor() as i32;
    let mut mant = v / 10f64.powi(exp);
    if (mant.abs() * 100.0).round() >= 1000.0 {
        exp += 1;
        mant /= 10.0;
    }
    format!("{mant:.2}E{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Lines printed under the Markdown table.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Self { title: title.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: vec![], notes: vec![] }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("write to memory");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        if !self.title.is_empty() {
            let _ = writeln!(out, "### {}\n", self.title);
        }
        let _ = writeln!(out, "| {} |", self.columns.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(self.columns.len()));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::md).collect();
            let _ = writeln!(out, "| {} |", cells.join(" | "));
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                let _ = writeln!(out, "- {n}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formats() {
        assert_eq!(format_fixed(4.554717), "4.5547");
        assert_eq!(format_fixed(1.78482e8), "1.78E+08");
        assert_eq!(format_fixed(9.999e6), "1.00E+07");
        assert_eq!(format_fixed(2.69e43), "2.69E+43");
        assert_eq!(format_full(0.1), "0.1");
        assert_eq!(format_full(f64::INFINITY), "inf");
        assert_eq!(Cell::Ratio(0.104498).md(), "10.4498%");
    }

    #[test]
    fn csv_round_trip() {
        let mut t = Table::new("x", &["n", "v", "note"]);
        t.rows.push(vec![Cell::Int(4), Cell::Num(std::f64::consts::PI), Cell::Text("a, b".into())]);
        let s = t.to_csv();
        let mut r = csv::Reader::from_reader(s.as_bytes());
        let rec = r.records().next().unwrap().unwrap();
        assert_eq!(rec[1].parse::<f64>().unwrap(), std::f64::consts::PI);
        assert_eq!(&rec[2], "a, b");
    }
}
