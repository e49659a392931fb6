//! `compute`: the bound report of one graph or one degree sequence.

use std::path::Path;

use nlspectra::{BoundReport64, DegreeSequence, Graph, GraphError};

use crate::render::{Cell, Table};
use crate::{Format, HarnessError};

pub enum Input<'a> {
    EdgeList(&'a Path),
    Degrees(&'a str),
}

pub fn load_graph(text: &str) -> Result<Graph, HarnessError> {
    let g: Graph = text.parse().map_err(|e: GraphError| HarnessError::Input(e.to_string()))?;
    if !g.is_connected() {
        return Err(HarnessError::Input(GraphError::Disconnected.to_string()));
    }
    Ok(g)
}

pub fn report(input: &Input) -> Result<BoundReport64, HarnessError> {
    match input {
        Input::EdgeList(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| HarnessError::Input(format!("cannot read {}: {e}", path.display())))?;
            let g = load_graph(&text)?;
            BoundReport64::for_graph(&g, path.display().to_string()).map_err(|e| HarnessError::Runtime(e.to_string()))
        }
        Input::Degrees(list) => {
            let ds: DegreeSequence = list.parse().map_err(|e: nlspectra::DegreeSequenceError| HarnessError::Input(e.to_string()))?;
            Ok(BoundReport64::for_degree_sequence(&ds, ds.to_string()))
        }
    }
}

/// One row per exact value, then one per bound.
pub fn report_table(rep: &BoundReport64) -> Table {
    let mut t = Table::new(
        format!("{} (n = {}, m = {})", rep.label, rep.n, rep.m),
        &["kind", "id", "side", "value", "applicable", "relative_error", "note"],
    );
    if let Some(ex) = rep.exact {
        let v = ex.indices;
        for (id, x) in [("nee", v.nee), ("lee", v.lee), ("ne", v.ne), ("randic", v.randic), ("gamma1", ex.gamma1), ("gamma2", ex.gamma2)] {
            t.rows.push(vec![
                Cell::Text("exact".into()),
                Cell::Text(id.into()),
                Cell::Na,
                Cell::Num(x),
                Cell::Na,
                Cell::Na,
                Cell::Na,
            ]);
        }
    }
    for e in &rep.entries {
        let note = match (&e.reason, e.overflow) {
            (Some(r), _) => Cell::Text(r.clone()),
            (None, true) => Cell::Text("overflow".into()),
            _ => Cell::Na,
        };
        t.rows.push(vec![
            Cell::Text("bound".into()),
            Cell::Text(e.id()),
            Cell::Text(e.side.as_str().into()),
            Cell::num(e.value),
            Cell::Text(e.applicable.to_string()),
            Cell::ratio(e.relative_error),
            note,
        ]);
    }
    if let Some(b) = rep.bipartite {
        t.notes.push(format!("bipartite: {b}"));
    }
    t.notes.push(format!("degree sequence: {:?}", rep.degree_sequence));
    if let Some((l, u)) = rep.randic_bracket {
        t.notes.push(format!("majorization bracket on R_-1: [{l:.6}, {u:.6}]"));
    }
    t
}

pub fn cmd_compute(input: &Input, names: Option<&[String]>, format: Format) -> Result<String, HarnessError> {
    let mut rep = report(input)?;
    if let Some(names) = names {
        rep.retain_named(names);
    }
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&rep).map_err(|e| HarnessError::Runtime(e.to_string()))? + "\n",
        Format::Csv => report_table(&rep).to_csv(),
        Format::Md => report_table(&rep).to_markdown(),
    })
}
