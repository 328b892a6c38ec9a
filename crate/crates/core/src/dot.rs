//! Graphviz rendering of an analysis: M_G bold, C_G dashed, B_G gray,
//! and critical edges (K_G) drawn in colour.

use std::fmt::Write;

use crate::analysis::AnalysisReport;

pub const CRITICAL_COLOUR: &str = "red";

/// DOT text for the graph in `report`. Edges of K_G are coloured only when
/// the hitting-set stage completed.
pub fn to_dot(report: &AnalysisReport) -> String {
    let d = &report.decomposition;
    let k_g = report.k_g().unwrap_or(&[]);
    let mut out = String::new();
    let name = report.graph.name.replace('"', "\\\"");
    writeln!(out, "graph \"{name}\" {{").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for v in 0..report.graph.n {
        writeln!(out, "  {v};").unwrap();
    }
    for (e, &(u, v)) in report.graph.edges.iter().enumerate() {
        let mut attrs = vec![format!("label=\"{e}\"")];
        if d.m_g.binary_search(&e).is_ok() {
            attrs.push("style=bold".into());
            attrs.push("penwidth=3".into());
        } else if d.c_g.binary_search(&e).is_ok() {
            attrs.push("style=dashed".into());
        } else {
            attrs.push("color=gray".into());
        }
        if k_g.binary_search(&e).is_ok() {
            attrs.push(format!("color={CRITICAL_COLOUR}"));
        }
        writeln!(out, "  {u} -- {v} [{}];", attrs.join(", ")).unwrap();
    }
    out.push_str("}\n");
    out
}
