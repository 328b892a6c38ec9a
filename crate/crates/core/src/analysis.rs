//! The full pipeline on one graph and its serialisable report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::colour::ColourOracle;
use crate::criticality::{enumerate_all_mcs_with, mcs_violations, Decomposition, McsProperty, DEFAULT_BUDGET};
use crate::edgeset::EdgeSet;
use crate::graph::{Graph, GraphError};
use crate::hitting::{verify_hitting_theorems, Check, HittingAnalysis};
use crate::resistance::resistance;
use crate::structure::{
    check_conjectures, clusters, is_hypohamiltonian, oddness, Cluster, Grade, StatementCheck, StatementInputs,
};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Oracle-call budget for MCS enumeration.
    pub budget: u64,
    /// Cap on distinct minimal-colouring conflict sets (0 = unlimited).
    pub colouring_cap: usize,
    pub skip_oddness: bool,
    pub skip_hypo: bool,
    pub skip_clusters: bool,
    /// Record per-stage wall-clock times. Off by default so that reports
    /// are byte-identical across runs.
    pub timings: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            budget: DEFAULT_BUDGET,
            colouring_cap: 0,
            skip_oddness: false,
            skip_hypo: false,
            skip_clusters: false,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub cubic: bool,
    /// Canonical edge list; every edge index in the report points here.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    One,
    Two,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResistanceInfo {
    pub r: usize,
    pub r_v: usize,
    pub witness_deletion: Vec<usize>,
    pub witness_vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionInfo {
    pub complete: bool,
    pub oracle_calls: u64,
    pub mcs_count: usize,
    pub mcs: Vec<Vec<usize>>,
    pub m_g: Vec<usize>,
    pub c_g: Vec<usize>,
    pub b_g: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HittingInfo {
    pub min_size: usize,
    pub min_sets: Vec<Vec<usize>>,
    pub minimal_colourings: usize,
    pub k_g: Vec<usize>,
    pub k_g_via_colourings: Vec<usize>,
    pub checks: Vec<CheckInfo>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckInfo {
    pub name: String,
    pub passed: bool,
    pub applicable: bool,
    pub certificate: Option<String>,
}

impl From<&Check> for CheckInfo {
    fn from(c: &Check) -> Self {
        CheckInfo {
            name: c.name.to_string(),
            passed: c.passed,
            applicable: c.applicable,
            certificate: c.certificate.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McsViolation {
    pub mcs: usize,
    pub properties: Vec<McsProperty>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OddnessInfo {
    pub omega: usize,
    pub witness_two_factor: Vec<usize>,
    pub odd_cycles: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub graph: GraphInfo,
    pub class: EdgeClass,
    pub resistance: ResistanceInfo,
    pub decomposition: DecompositionInfo,
    /// Absent when the decomposition is incomplete.
    pub hitting: Option<HittingInfo>,
    pub mcs_violations: Vec<McsViolation>,
    pub disjoint_but_adjacent: Vec<(usize, usize)>,
    pub clusters: Option<Vec<Cluster>>,
    pub oddness: Option<OddnessInfo>,
    pub hypohamiltonian: Option<bool>,
    pub statements: Option<Vec<StatementCheck>>,
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

/// How a finished analysis should be judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Incomplete,
    /// A proved statement failed on this instance.
    InvariantViolation,
}

impl AnalysisReport {
    pub fn status(&self) -> Status {
        let theorem_fail = self
            .hitting
            .as_ref()
            .is_some_and(|h| h.checks.iter().any(|c| !c.passed));
        let prop_fail = self
            .statements
            .iter()
            .flatten()
            .any(|s| s.grade == Grade::Proposition && !s.holds);
        if theorem_fail
            || prop_fail
            || !self.mcs_violations.is_empty()
            || !self.disjoint_but_adjacent.is_empty()
            || self.resistance.r != self.resistance.r_v
        {
            Status::InvariantViolation
        } else if !self.complete {
            Status::Incomplete
        } else {
            Status::Ok
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn k_g(&self) -> Option<&[usize]> {
        self.hitting.as_ref().map(|h| h.k_g.as_slice())
    }
}

struct Clock {
    on: bool,
    start: Instant,
    laps: BTreeMap<String, f64>,
}

impl Clock {
    fn lap(&mut self, stage: &str) {
        if self.on {
            let now = Instant::now();
            let ms = (now - self.start).as_secs_f64() * 1e3;
            self.laps.insert(stage.to_string(), (ms * 1e3).round() / 1e3);
            self.start = now;
        }
    }
}

/// Runs every analysis on `g`.
pub fn analyze(name: &str, g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport, GraphError> {
    g.require_subcubic()?;
    let mut clock = Clock {
        on: opts.timings,
        start: Instant::now(),
        laps: BTreeMap::new(),
    };
    let list = |s: &EdgeSet| s.to_vec();

    let res = resistance(g)?;
    clock.lap("resistance");

    let oracle = ColourOracle::new(g);
    let decomp = enumerate_all_mcs_with(&oracle, opts.budget).expect("graph is subcubic");
    clock.lap("mcs_enumeration");

    let mcs_violations = decomp
        .mcs_list
        .iter()
        .enumerate()
        .filter_map(|(i, m)| {
            let properties = mcs_violations(&oracle, &m.edges);
            (!properties.is_empty()).then_some(McsViolation { mcs: i, properties })
        })
        .collect();
    let disjoint_but_adjacent = disjoint_but_adjacent(g, &decomp);
    clock.lap("mcs_invariants");

    let hitting = if decomp.complete {
        match HittingAnalysis::compute(g, &decomp, res.r, opts.colouring_cap) {
            Ok(a) => {
                let verdict = verify_hitting_theorems(g, &decomp, &a).expect("decomposition is complete");
                Some((a, verdict))
            }
            Err(_) => None,
        }
    } else {
        None
    };
    clock.lap("hitting");

    let cl = (!opts.skip_clusters && decomp.complete)
        .then(|| clusters(&decomp).expect("decomposition is complete"));
    clock.lap("clusters");

    let odd = (!opts.skip_oddness && g.is_cubic()).then(|| oddness(g).ok()).flatten();
    clock.lap("oddness");

    let hypo = (!opts.skip_hypo && g.is_cubic() && g.is_connected()).then(|| is_hypohamiltonian(g));
    clock.lap("hypohamiltonian");

    let statements = match (&hitting, &cl) {
        (Some((a, _)), Some(cl)) => Some(
            check_conjectures(
                g,
                &StatementInputs {
                    decomp: &decomp,
                    clusters: cl,
                    resistance: res.r,
                    critical: &a.k_via_hitting,
                    omega: odd.as_ref().map(|o| o.omega),
                },
            )
            .expect("decomposition is complete"),
        ),
        _ => None,
    };
    clock.lap("statements");

    let complete = decomp.complete && hitting.is_some();
    let class = if decomp.is_class_two() || res.r > 0 {
        EdgeClass::Two
    } else {
        EdgeClass::One
    };

    Ok(AnalysisReport {
        schema: SCHEMA,
        graph: GraphInfo {
            name: name.to_string(),
            n: g.vertex_count(),
            m: g.edge_count(),
            cubic: g.is_cubic(),
            edges: g.edges().to_vec(),
        },
        class,
        resistance: ResistanceInfo {
            r: res.r,
            r_v: res.r_v,
            witness_deletion: list(&res.witness_deletion),
            witness_vertices: res.witness_vertices.clone(),
        },
        decomposition: DecompositionInfo {
            complete: decomp.complete,
            oracle_calls: decomp.oracle_calls,
            mcs_count: decomp.mcs_list.len(),
            mcs: decomp.mcs_list.iter().map(|m| list(&m.edges)).collect(),
            m_g: list(&decomp.m_g),
            c_g: list(&decomp.c_g),
            b_g: list(&decomp.b_g),
        },
        hitting: hitting.map(|(a, v)| HittingInfo {
            min_size: a.hitting.size,
            min_sets: a.hitting.sets.iter().map(list).collect(),
            minimal_colourings: a.minimal_colourings.len(),
            k_g: list(&a.k_via_hitting),
            k_g_via_colourings: list(&a.k_via_colourings),
            checks: v.checks.iter().map(CheckInfo::from).collect(),
        }),
        mcs_violations,
        disjoint_but_adjacent,
        clusters: cl,
        oddness: odd.map(|o| OddnessInfo {
            omega: o.omega,
            witness_two_factor: list(&o.witness_two_factor),
            odd_cycles: o.odd_components,
        }),
        hypohamiltonian: hypo,
        statements,
        complete,
        timings_ms: opts.timings.then_some(clock.laps),
    })
}

/// Pairs of edge-disjoint MCSs that still share a vertex.
pub fn disjoint_but_adjacent(g: &Graph, decomp: &Decomposition) -> Vec<(usize, usize)> {
    let verts: Vec<Vec<usize>> = decomp.mcs_list.iter().map(|m| m.vertices(g)).collect();
    let mut out = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let a = &decomp.mcs_list[i].edges;
            let b = &decomp.mcs_list[j].edges;
            if a.is_disjoint(b) && verts[i].iter().any(|v| verts[j].binary_search(v).is_ok()) {
                out.push((i, j));
            }
        }
    }
    out
}
