use std::path::Path;

use serde_json::{json, Value};
use setmap::abel::{abel_setmap, count_tail_forests, verify_pfc, verify_sm3, BlockPartition};
use setmap::arith::int;
use setmap::expansions::{
    check_binomial_type, expand, setmap_power_identity, verify_cexp, verify_exp91, verify_exp92,
    verify_exp93, CexpMode,
};
use setmap::graph::{
    chromatic_poly, chromatic_setmap, count_acyclic_orientations, count_acyclic_sink_source,
    count_acyclic_unique_sink, count_proper_colorings, count_stable_partitions,
};
use setmap::{BinomialFamily, Caps, Graph, Mask, Rational};

use crate::args::{
    AbelArgs, Blocks, CheckName, Command, ExpandArgs, GraphArgs, OracleArgs, OracleKind, VerifyArgs,
};
use crate::graph_file::read_graph;
use crate::report::{poly_coeffs, rational, rationals, Check, Report};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
}

impl From<setmap::Error> for CliError {
    fn from(e: setmap::Error) -> Self {
        if e.is_cap() {
            CliError::Cap(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

pub fn run(command: &Command, caps: &Caps) -> Result<Report> {
    match command {
        Command::Chromatic(a) => chromatic(a),
        Command::Expand(a) => expand_cmd(a, caps),
        Command::Verify(a) => verify(a, caps),
        Command::Oracle(a) => oracle(a, caps),
        Command::Abel(a) => abel(a, caps),
    }
}

/// A graph file restricted to a subset (the full set by default).
struct Loaded {
    input: Value,
    graph: Graph,
    subset: Mask,
}

impl Loaded {
    fn restricted(&self) -> Graph {
        self.graph.restrict(self.subset)
    }

    /// Position of an original vertex inside the restriction.
    fn local_vertex(&self, v: usize, flag: &str) -> Result<usize> {
        if v >= self.graph.vertex_count() || self.subset & (1 << v) == 0 {
            return usage(format!("--{flag} {v} is not a vertex of the selected subset"));
        }
        Ok((self.subset & ((1 << v) - 1)).count_ones() as usize)
    }
}

fn load(path: &Path, subset: Option<u32>) -> Result<Loaded> {
    let graph = read_graph(path).map_err(|e| CliError::Usage(e.to_string()))?;
    let subset = subset.unwrap_or_else(|| graph.full_mask());
    graph.ground().check(subset)?;
    let input = json!({
        "graph": path.display().to_string(),
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "subset": subset,
    });
    Ok(Loaded { input, graph, subset })
}

fn require_graph(path: &Option<std::path::PathBuf>, subset: Option<u32>) -> Result<Loaded> {
    match path {
        Some(p) => load(p, subset),
        None => usage("this command needs --graph"),
    }
}

fn blocks_of(blocks: &Option<Blocks>) -> Result<BlockPartition> {
    match blocks {
        Some(b) => Ok(BlockPartition::new(b.0.clone())?),
        None => usage("this command needs --blocks"),
    }
}

/// Spreads the bits of a mask over the set bits of `onto`, lowest first.
fn deposit(mask: Mask, onto: Mask) -> Mask {
    let mut out = 0;
    let mut rest = onto;
    let mut i = 0;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        if mask & (1 << i) != 0 {
            out |= bit;
        }
        rest &= rest - 1;
        i += 1;
    }
    out
}

fn chromatic(a: &GraphArgs) -> Result<Report> {
    let l = load(&a.graph, a.subset)?;
    let p = chromatic_poly(&l.restricted());
    Ok(Report {
        command: "chromatic".into(),
        input: l.input,
        result: json!({ "coefficients": poly_coeffs(&p), "polynomial": p.to_string() }),
        checks: vec![],
    })
}

fn expand_cmd(a: &ExpandArgs, caps: &Caps) -> Result<Report> {
    let l = load(&a.graph.graph, a.graph.subset)?;
    let size = l.subset.count_ones() as usize;
    if size > caps.expand_subset {
        return Err(
            setmap::Error::CapExceeded { what: "subset size", limit: caps.expand_subset, got: size }.into()
        );
    }
    let h = l.restricted();
    let chi = chromatic_setmap(&h);
    let full = h.full_mask();
    let e = expand(&chi, full, &a.basis, caps)?;
    let coefficients: Vec<Value> = (1..=full)
        .map(|t| json!({ "subset": deposit(t, l.subset), "value": rational(&e.coefficients[t]) }))
        .collect();
    let reconstructs = e.reconstruct() == chi[full];
    let mut input = l.input;
    input["basis"] = json!(a.basis.to_string());
    Ok(Report {
        command: "expand".into(),
        input,
        result: json!({
            "polynomial": poly_coeffs(&chi[full]),
            "coefficients": coefficients,
            "by_length": rationals(e.by_length()),
            "reconstructs": reconstructs,
        }),
        checks: vec![Check { name: "reconstructs".into(), pass: reconstructs }],
    })
}

fn check(name: impl Into<String>, pass: setmap::Result<bool>) -> Result<Check> {
    Ok(Check { name: name.into(), pass: pass? })
}

fn verify(a: &VerifyArgs, caps: &Caps) -> Result<Report> {
    let name = a.check.to_possible_value_name();
    let mut input = json!({ "check": name });
    let checks = match a.check {
        CheckName::Binomial => {
            let (table, src) = if a.blocks.is_some() {
                let b = blocks_of(&a.blocks)?;
                input["blocks"] = json!(b.sizes());
                (abel_setmap(&b, caps)?, "abel")
            } else {
                let l = require_graph(&a.graph, a.subset)?;
                merge(&mut input, l.input.clone());
                (chromatic_setmap(&l.restricted()), "chromatic")
            };
            vec![check(format!("binomial {src}"), check_binomial_type(&table, caps))?]
        }
        CheckName::Exp91 | CheckName::Exp92 | CheckName::Exp93 | CheckName::D0 | CheckName::Stab => {
            let l = require_graph(&a.graph, a.subset)?;
            merge(&mut input, l.input.clone());
            let (g, s) = (&l.graph, l.subset);
            let pass = match a.check {
                CheckName::Exp91 => verify_exp91(g, s, caps),
                CheckName::Exp92 => verify_exp92(g, s, caps),
                CheckName::Exp93 => verify_exp93(g, s, caps),
                CheckName::D0 => verify_cexp(g, s, &int(0), CexpMode::Derivative, caps),
                _ => verify_cexp(g, s, &int(1), CexpMode::Evaluation, caps),
            };
            vec![check(name, pass)?]
        }
        CheckName::Cexp => {
            let l = require_graph(&a.graph, a.subset)?;
            merge(&mut input, l.input.clone());
            let (param, mode) = match &a.basis {
                Some(BinomialFamily::Abel(p)) => (p.clone(), CexpMode::Derivative),
                Some(BinomialFamily::FallingFactorial(p)) => (p.clone(), CexpMode::Evaluation),
                _ => return usage("--check cexp needs --basis abel:a or --basis falling:a"),
            };
            let basis = a.basis.as_ref().expect("matched above").to_string();
            input["basis"] = json!(basis);
            vec![check(format!("cexp {basis}"), verify_cexp(&l.graph, l.subset, &param, mode, caps))?]
        }
        CheckName::Pfc => {
            let b = blocks_of(&a.blocks)?;
            let pi = a.subset.unwrap_or_else(|| b.ground().full_mask());
            b.ground().check(pi)?;
            input["blocks"] = json!(b.sizes());
            input["subset"] = json!(pi);
            let n = pi.count_ones() as usize;
            let ks: Vec<usize> = match a.k {
                Some(k) => vec![k],
                None => (1..=n).collect(),
            };
            ks.into_iter()
                .map(|k| check(format!("pfc k={k}"), verify_pfc(&b, pi, k, caps)))
                .collect::<Result<_>>()?
        }
        CheckName::Sm3 => {
            let b = blocks_of(&a.blocks)?;
            input["blocks"] = json!(b.sizes());
            let subsets: Vec<Mask> = match a.subset {
                Some(pi) => {
                    b.ground().check(pi)?;
                    input["subset"] = json!(pi);
                    vec![pi]
                }
                None => b.ground().subsets().collect(),
            };
            subsets
                .into_iter()
                .map(|pi| check(format!("sm3 subset={pi}"), verify_sm3(&b, pi, caps)))
                .collect::<Result<_>>()?
        }
        CheckName::Power => {
            let l = require_graph(&a.graph, a.subset)?;
            merge(&mut input, l.input.clone());
            let chi = chromatic_setmap(&l.restricted());
            let xs: Vec<Rational> = match &a.x {
                Some(x) => vec![x.clone()],
                None => (1..=3).map(int).collect(),
            };
            let ys: Vec<usize> = match a.y {
                Some(y) => vec![y],
                None => (1..=3).collect(),
            };
            let mut out = Vec::new();
            for x in &xs {
                for &y in &ys {
                    out.push(check(format!("power x={x} y={y}"), setmap_power_identity(&chi, x, y, caps))?);
                }
            }
            out
        }
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(Report { command: "verify".into(), input, result: json!({ "pass": pass }), checks })
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(into), Value::Object(from)) = (into, from) {
        into.extend(from);
    }
}

trait PossibleValueName {
    fn to_possible_value_name(&self) -> String;
}

impl<T: clap::ValueEnum> PossibleValueName for T {
    fn to_possible_value_name(&self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

fn oracle(a: &OracleArgs, caps: &Caps) -> Result<Report> {
    let mut input = json!({ "oracle": a.kind.to_possible_value_name() });
    let count = if a.kind == OracleKind::TailForests {
        let b = blocks_of(&a.blocks)?;
        let Some(k) = a.k else { return usage("tail-forests needs --k") };
        input["blocks"] = json!(b.sizes());
        input["k"] = json!(k);
        count_tail_forests(&b, k, caps)?
    } else {
        let l = require_graph(&a.graph, a.subset)?;
        merge(&mut input, l.input.clone());
        let g = l.restricted();
        match a.kind {
            OracleKind::Colorings => {
                let Some(x) = &a.x else { return usage("colorings needs --x") };
                if !x.is_integer() || x < &int(0) {
                    return usage(format!("--x must be a nonnegative integer for colorings, got {x}"));
                }
                input["x"] = json!(x.to_string());
                let x: u64 =
                    x.to_integer().try_into().map_err(|_| CliError::Usage(format!("--x {x} too large")))?;
                count_proper_colorings(&g, x, caps)?
            }
            OracleKind::Acyclic => count_acyclic_orientations(&g, caps)?,
            OracleKind::StablePartitions => count_stable_partitions(&g, caps)?,
            OracleKind::UniqueSink => {
                let Some(v) = a.vertex else { return usage("unique-sink needs --vertex") };
                input["vertex"] = json!(v);
                count_acyclic_unique_sink(&g, l.local_vertex(v, "vertex")?, caps)?
            }
            OracleKind::SinkSource => {
                let (Some(u), Some(v)) = (a.source, a.sink) else {
                    return usage("sink-source needs --source and --sink");
                };
                input["source"] = json!(u);
                input["sink"] = json!(v);
                count_acyclic_sink_source(&g, l.local_vertex(u, "source")?, l.local_vertex(v, "sink")?, caps)?
            }
            OracleKind::TailForests => unreachable!("handled above"),
        }
    };
    Ok(Report { command: "oracle".into(), input, result: json!({ "count": count }), checks: vec![] })
}

fn abel(a: &AbelArgs, caps: &Caps) -> Result<Report> {
    let b = BlockPartition::new(a.blocks.0.clone())?;
    let f = abel_setmap(&b, caps)?;
    let mut input = json!({ "blocks": b.sizes() });
    let subsets: Vec<Mask> = match a.subset {
        Some(pi) => {
            b.ground().check(pi)?;
            input["subset"] = json!(pi);
            vec![pi]
        }
        None => b.ground().subsets().collect(),
    };
    let entries: Vec<Value> = subsets
        .into_iter()
        .map(|pi| {
            json!({
                "subset": pi,
                "weight": b.weight(pi),
                "coefficients": poly_coeffs(&f[pi]),
            })
        })
        .collect();
    Ok(Report { command: "abel".into(), input, result: json!({ "entries": entries }), checks: vec![] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use setmap::setmap::submasks;

    #[test]
    fn deposit_spreads_bits() {
        assert_eq!(deposit(0b11, 0b1010), 0b1010);
        assert_eq!(deposit(0b10, 0b1010), 0b1000);
        assert_eq!(deposit(0b101, 0b11100), 0b10100);
        assert_eq!(deposit(0, 0b111), 0);
        // every sub-mask of the restriction lands inside the subset
        let s: Mask = 0b1101_0010;
        let local = (1u32 << s.count_ones()) - 1;
        let mut spread: Vec<Mask> = submasks(local).map(|t| deposit(t, s)).collect();
        spread.sort();
        let mut direct: Vec<Mask> = submasks(s).collect();
        direct.sort();
        assert_eq!(spread, direct);
    }
}
