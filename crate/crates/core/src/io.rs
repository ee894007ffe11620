//! Instance files and formulation export.
//!
//! Instances are JSON with sorted canonical edge keys so hand-authored
//! regression cases diff cleanly. Rationals are written as `p` or `p/q`
//! strings; integer JSON numbers are accepted on input. The LP export
//! renders exact fractions by default; decimal rendering is available for
//! external-solver interop and clearly marked lossy.

use std::collections::BTreeMap;

use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactlp::{PolyhedronH, Rational, Sense, Var};
use crate::hypergraph::{Hypergraph, Instance};

#[derive(Debug, Clone, thiserror::Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Parse `p` or `p/q` (arbitrary precision, canonical output).
pub fn parse_rational(s: &str) -> Result<Rational, IoError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n.trim(), d.trim()),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| IoError::Parse(format!("bad numerator in {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| IoError::Parse(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(IoError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum CostValue {
    Int(i64),
    Text(String),
}

impl CostValue {
    fn to_rational(&self) -> Result<Rational, IoError> {
        match self {
            CostValue::Int(i) => Ok(Rational::from_integer(BigInt::from(*i))),
            CostValue::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceJson {
    nodes: Vec<String>,
    edges: Vec<Vec<String>>,
    #[serde(default)]
    node_costs: BTreeMap<String, CostValue>,
    edge_costs: BTreeMap<String, CostValue>,
}

/// Canonical key of an edge: its node names in index order, joined by `,`.
pub fn edge_key(g: &Hypergraph, edge_idx: usize) -> String {
    g.edge_names(&g.edges()[edge_idx]).join(",")
}

/// Parse an instance file. Missing node costs default to zero; edge costs
/// must cover exactly the edge set and be nonzero.
pub fn parse_instance(text: &str) -> Result<Instance, IoError> {
    let raw: InstanceJson =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    let g = Hypergraph::new(raw.nodes, &raw.edges).map_err(|e| IoError::Parse(e.to_string()))?;

    let mut node_costs = vec![Rational::zero(); g.node_count()];
    for (name, value) in &raw.node_costs {
        let Some(v) = g.node_by_name(name) else {
            return Err(IoError::Parse(format!("node cost for unknown node {name:?}")));
        };
        node_costs[v as usize] = value.to_rational()?;
    }

    let mut edge_costs = Vec::with_capacity(g.edge_count());
    let mut expected: BTreeMap<String, usize> = BTreeMap::new();
    for i in 0..g.edge_count() {
        expected.insert(edge_key(&g, i), i);
    }
    for key in raw.edge_costs.keys() {
        if !expected.contains_key(key) {
            return Err(IoError::Parse(format!(
                "edge cost key {key:?} does not name an edge (keys are sorted node names joined by ',')"
            )));
        }
    }
    for i in 0..g.edge_count() {
        let key = edge_key(&g, i);
        let Some(value) = raw.edge_costs.get(&key) else {
            return Err(IoError::Parse(format!("missing edge cost for {key:?}")));
        };
        let c = value.to_rational()?;
        if c.is_zero() {
            return Err(IoError::Parse(format!("edge cost for {key:?} is zero")));
        }
        edge_costs.push(c);
    }
    Instance::new(g, node_costs, edge_costs).map_err(IoError::Parse)
}

/// Canonical instance text: node order preserved, edges and cost keys in
/// canonical order, rationals as strings. Byte-stable for a given instance.
pub fn write_instance(inst: &Instance) -> String {
    let g = inst.hypergraph();
    let json = InstanceJson {
        nodes: g.names().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| g.edge_names(e))
            .collect(),
        node_costs: g
            .nodes()
            .map(|v| {
                (
                    g.node_name(v).to_string(),
                    CostValue::Text(format_rational(inst.node_cost(v))),
                )
            })
            .collect(),
        edge_costs: (0..g.edge_count())
            .map(|i| {
                (
                    edge_key(g, i),
                    CostValue::Text(format_rational(inst.edge_cost(i))),
                )
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&json).expect("instance serializes");
    s.push('\n');
    s
}

fn lp_term(coef: &Rational, name: &str, first: bool, decimal: bool) -> String {
    let mag = coef.abs();
    let sign = if coef.is_negative() {
        "- "
    } else if first {
        ""
    } else {
        "+ "
    };
    let mag_s = if decimal {
        let f = mag.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
            / mag.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
        format!("{f}")
    } else {
        format_rational(&mag)
    };
    if mag_s == "1" {
        format!("{sign}{name}")
    } else {
        format!("{sign}{mag_s} {name}")
    }
}

/// Export a polyhedron (with an optional objective) in LP-like text with a
/// variable glossary. Variables are positional (`x0`, `x1`, ...) in the
/// polyhedron's deterministic order; the glossary maps them back to nodes,
/// edges, auxiliary subsets and block multipliers.
pub fn write_lp(
    g: &Hypergraph,
    poly: &PolyhedronH,
    objective: &BTreeMap<Var, Rational>,
    decimal: bool,
) -> String {
    let mut out = String::new();
    out.push_str("\\ multilin formulation export\n");
    if decimal {
        out.push_str("\\ decimal rendering: coefficients are lossy\n");
    }
    out.push_str("\\ variables:\n");
    let name_of = |i: usize| format!("x{i}");
    for (i, v) in poly.vars().iter().enumerate() {
        let desc = match v {
            Var::Node(u) => format!("z({})", g.node_name(*u)),
            Var::Set(s) => {
                let names: Vec<&str> = s.iter().map(|&u| g.node_name(u)).collect();
                format!("z({})", names.join(","))
            }
            Var::Lambda(b, m) => format!("lambda(block {b}, subset mask {m})"),
        };
        out.push_str(&format!("\\   {} = {}\n", name_of(i), desc));
    }
    out.push_str("Maximize\n obj:");
    if objective.is_empty() {
        out.push_str(" 0");
    } else {
        let mut first = true;
        for (v, c) in objective {
            if c.is_zero() {
                continue;
            }
            let i = poly.var_index(v).expect("objective variable declared");
            out.push(' ');
            out.push_str(&lp_term(c, &name_of(i), first, decimal));
            first = false;
        }
    }
    out.push_str("\nSubject To\n");
    for (ci, c) in poly.constraints().iter().enumerate() {
        out.push_str(&format!(" c{ci}:"));
        let mut first = true;
        for (v, coef) in c.coeffs() {
            let i = poly.var_index(v).expect("constraint variable declared");
            out.push(' ');
            out.push_str(&lp_term(coef, &name_of(i), first, decimal));
            first = false;
        }
        if first {
            out.push_str(" 0");
        }
        let op = match c.sense {
            Sense::Le => "<=",
            Sense::Eq => "=",
        };
        let rhs = if decimal {
            let f = c.rhs.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
                / c.rhs.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            format!("{f}")
        } else {
            format_rational(&c.rhs)
        };
        out.push_str(&format!(" {op} {rhs}\n"));
    }
    out.push_str("Bounds\n");
    for i in 0..poly.dim() {
        out.push_str(&format!(" {} free\n", name_of(i)));
    }
    out.push_str("End\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::{rat, ratio};
    use crate::relaxations::standard_linearization;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "3", "-3", "3/2", "-7/5", "10/4"] {
            let r = parse_rational(s).unwrap();
            let back = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(parse_rational("10/4").unwrap(), ratio(5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    fn sample_text() -> String {
        r#"{
  "nodes": ["1", "2", "3"],
  "edges": [["1", "2"], ["2", "3"], ["1", "2", "3"]],
  "node_costs": {"1": "2", "3": "-1/2"},
  "edge_costs": {"1,2": 3, "2,3": "-4", "1,2,3": "5/3"}
}"#
        .to_string()
    }

    #[test]
    fn parse_and_round_trip() {
        let inst = parse_instance(&sample_text()).unwrap();
        assert_eq!(inst.hypergraph().node_count(), 3);
        assert_eq!(inst.hypergraph().edge_count(), 3);
        assert_eq!(inst.node_cost(0), &rat(2));
        assert_eq!(inst.node_cost(1), &rat(0)); // defaulted
        assert_eq!(inst.node_cost(2), &ratio(-1, 2));
        let text = write_instance(&inst);
        let again = parse_instance(&text).unwrap();
        assert_eq!(inst, again);
        // write is byte-stable
        assert_eq!(text, write_instance(&again));
    }

    #[test]
    fn parse_rejects_malformed() {
        // loop edge
        let bad = r#"{"nodes": ["1"], "edges": [["1"]], "edge_costs": {"1": 1}}"#;
        assert!(parse_instance(bad).is_err());
        // duplicate edge
        let bad = r#"{"nodes": ["1","2"], "edges": [["1","2"],["2","1"]], "edge_costs": {"1,2": 1}}"#;
        assert!(parse_instance(bad).is_err());
        // zero edge cost
        let bad = r#"{"nodes": ["1","2"], "edges": [["1","2"]], "edge_costs": {"1,2": 0}}"#;
        assert!(parse_instance(bad).is_err());
        // missing edge cost
        let bad = r#"{"nodes": ["1","2"], "edges": [["1","2"]], "edge_costs": {}}"#;
        assert!(parse_instance(bad).is_err());
        // unknown cost key
        let bad =
            r#"{"nodes": ["1","2"], "edges": [["1","2"]], "edge_costs": {"1,2": 1, "9": 2}}"#;
        assert!(parse_instance(bad).is_err());
        // node name with comma
        let bad = r#"{"nodes": ["a,b","2"], "edges": [], "edge_costs": {}}"#;
        assert!(parse_instance(bad).is_err());
        // not json at all
        assert!(parse_instance("nope").is_err());
    }

    #[test]
    fn lp_export_deterministic() {
        let inst = parse_instance(&sample_text()).unwrap();
        let g = inst.hypergraph();
        let poly = standard_linearization(g);
        let obj = crate::relaxations::objective_of(&inst);
        let a = write_lp(g, &poly, &obj, false);
        let b = write_lp(g, &poly, &obj, false);
        assert_eq!(a, b);
        assert!(a.contains("Maximize"));
        assert!(a.contains("Subject To"));
        assert!(a.contains("5/3"));
        let dec = write_lp(g, &poly, &obj, true);
        assert!(dec.contains("lossy"));
    }
}
